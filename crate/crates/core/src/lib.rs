//! Exact verification of the octonion multiplication table and the
//! combinatorial structures it comes from.
//!
//! The library builds the table three independent ways (oriented Fano
//! plane, Eisenstein lattice quotient, index arithmetic mod 7), proves the
//! constructions agree, and checks the surrounding geometry: tournament
//! orientations of K7 whose directed 3-cycles triangulate a surface, the
//! two-coloring of that surface, and the Heawood dual.

// Index loops stay as written: the code mirrors fixed-size array math
// where positions are the point, and iterator forms obscure that.
#![allow(clippy::needless_range_loop)]

pub mod constants;
pub mod eisenstein;
pub mod fano;
pub mod graphs;
pub mod octonion;
pub mod perm;
pub mod surface;

pub use eisenstein::{EisensteinInt, Residue};
pub use fano::{CyclicTriple, FanoPlane, OrientedFanoPlane};
pub use graphs::SimpleGraph;
pub use octonion::{Octonion, Rational, StructureConstants};
pub use surface::{Tournament, Triangulation};
