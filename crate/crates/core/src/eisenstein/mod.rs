//! Eisenstein integers, the norm-7 ideal (2 - w), and the quotient route
//! to the edge-orientation rule.
//!
//! Throughout, w denotes the primitive cube root of unity with
//! w^2 = -w - 1. Reduction mod the ideal sends w to 2, giving Z/7; the
//! images of the units {1, w, w^2} are exactly the nonzero squares
//! {1, 2, 4}, and orienting each K7 edge toward the square difference
//! yields the Paley tournament.

pub mod hexmap;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::Serialize;

use crate::surface::Tournament;

/// a + b*w with exact unbounded integer components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EisensteinInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl EisensteinInt {
    pub fn new(a: i64, b: i64) -> Self {
        Self {
            a: BigInt::from(a),
            b: BigInt::from(b),
        }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn omega() -> Self {
        Self::new(0, 1)
    }

    /// w^2 = -1 - w.
    pub fn omega_squared() -> Self {
        Self::new(-1, -1)
    }

    /// a^2 - ab + b^2; multiplicative and nonnegative.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// Complex conjugate: (a - b) - b*w.
    pub fn conj(&self) -> Self {
        Self {
            a: &self.a - &self.b,
            b: -self.b.clone(),
        }
    }

    /// Image in Z/7 under the homomorphism with w -> 2.
    pub fn reduce(&self) -> Residue {
        let t = &self.a + 2 * &self.b;
        let m: BigInt = ((t % 7) + 7) % 7;
        Residue(m.to_u8().expect("value in 0..7"))
    }

    /// True if `d` divides self exactly in Z[w].
    pub fn divisible_by(&self, d: &EisensteinInt) -> bool {
        self.div_exact(d).is_some()
    }

    /// Exact quotient self / d, if it exists in Z[w].
    pub fn div_exact(&self, d: &EisensteinInt) -> Option<EisensteinInt> {
        let n = d.norm();
        if n.is_zero() {
            return None;
        }
        // self / d = self * conj(d) / norm(d).
        let scaled = self * &d.conj();
        if (&scaled.a % &n).is_zero() && (&scaled.b % &n).is_zero() {
            Some(EisensteinInt {
                a: scaled.a / &n,
                b: scaled.b / &n,
            })
        } else {
            None
        }
    }
}

impl std::ops::Add for &EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl std::ops::Sub for &EisensteinInt {
    type Output = EisensteinInt;
    fn sub(self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl std::ops::Mul for &EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, rhs: &EisensteinInt) -> EisensteinInt {
        // (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd)w, using w^2 = -w - 1.
        let EisensteinInt { a, b } = self;
        let EisensteinInt { a: c, b: d } = rhs;
        EisensteinInt {
            a: a * c - b * d,
            b: a * d + b * c - b * d,
        }
    }
}

impl std::ops::Neg for &EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }
}

impl std::ops::Add for EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, rhs: EisensteinInt) -> EisensteinInt {
        &self + &rhs
    }
}

impl std::ops::Sub for EisensteinInt {
    type Output = EisensteinInt;
    fn sub(self, rhs: EisensteinInt) -> EisensteinInt {
        &self - &rhs
    }
}

impl std::ops::Mul for EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, rhs: EisensteinInt) -> EisensteinInt {
        &self * &rhs
    }
}

impl std::ops::Neg for EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        -&self
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let wterm = |f: &mut fmt::Formatter<'_>, b: &BigInt| -> fmt::Result {
            let mag = b.abs();
            if mag == BigInt::from(1) {
                f.write_str("w")
            } else {
                write!(f, "{mag}w")
            }
        };
        if self.a.is_zero() {
            if self.b.is_negative() {
                f.write_str("-")?;
            }
            return wterm(f, &self.b);
        }
        write!(f, "{}", self.a)?;
        f.write_str(if self.b.is_negative() { " - " } else { " + " })?;
        wterm(f, &self.b)
    }
}

/// An element of Z/7.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Residue(u8);

impl Residue {
    pub fn new(value: i64) -> Self {
        Self(value.rem_euclid(7) as u8)
    }

    pub fn value(&self) -> u8 {
        self.0
    }

    pub fn add(&self, other: Residue) -> Residue {
        Residue((self.0 + other.0) % 7)
    }

    pub fn sub(&self, other: Residue) -> Residue {
        Residue((7 + self.0 - other.0) % 7)
    }

    pub fn mul(&self, other: Residue) -> Residue {
        Residue((self.0 * other.0) % 7)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Generator of the ideal defining the quotient: 2 - w, norm 7.
pub fn lambda_gen() -> EisensteinInt {
    EisensteinInt::new(2, -1)
}

/// Generator of the mirror-image ideal: 2 - w^2 = 3 + w, also norm 7.
pub fn mirror_gen() -> EisensteinInt {
    EisensteinInt::new(3, 1)
}

/// The seven coset representatives {0, +-1, +-w, +-w^2} with their
/// residues; the residues cover Z/7 exactly once.
pub fn residue_representatives() -> Vec<(EisensteinInt, Residue)> {
    [
        EisensteinInt::zero(),
        EisensteinInt::one(),
        -EisensteinInt::one(),
        EisensteinInt::omega(),
        -EisensteinInt::omega(),
        EisensteinInt::omega_squared(),
        -EisensteinInt::omega_squared(),
    ]
    .into_iter()
    .map(|e| {
        let r = e.reduce();
        (e, r)
    })
    .collect()
}

/// True for the nonzero squares mod 7, which are the images of the units
/// {1, w, w^2}.
pub fn is_square_residue(r: Residue) -> bool {
    matches!(r.value(), 1 | 2 | 4)
}

/// The orientation of K7 with a -> b exactly when b - a is a nonzero
/// square residue.
pub fn paley_tournament() -> Tournament {
    Tournament::from_beats(|a, b| {
        is_square_residue(Residue::new(b as i64).sub(Residue::new(a as i64)))
    })
}

#[derive(Serialize)]
struct RepresentativeJson {
    a: i64,
    b: i64,
    residue: u8,
}

#[derive(Serialize)]
struct RuleJson {
    representatives: Vec<RepresentativeJson>,
    squares: [u8; 3],
    edges: Vec<[u8; 2]>,
}

/// The residue table and orientation rule as JSON:
/// `{"representatives": [...], "squares": [1,2,4], "edges": [[a,b], ...]}`.
pub fn orientation_rule_json() -> String {
    let representatives = residue_representatives()
        .into_iter()
        .map(|(e, r)| RepresentativeJson {
            a: e.a.to_i64().expect("representatives are small"),
            b: e.b.to_i64().expect("representatives are small"),
            residue: r.value(),
        })
        .collect();
    let t = paley_tournament();
    let mut edges = Vec::with_capacity(21);
    for a in 0..7u8 {
        for b in 0..7u8 {
            if a != b && t.points_to(a, b) {
                edges.push([a, b]);
            }
        }
    }
    serde_json::to_string(&RuleJson {
        representatives,
        squares: [1, 2, 4],
        edges,
    })
    .expect("rule serialization cannot fail")
}

/// Random element with components in [-50, 50]; for property tests.
pub fn random_eisenstein<R: Rng>(rng: &mut R) -> EisensteinInt {
    EisensteinInt::new(rng.gen_range(-50..=50), rng.gen_range(-50..=50))
}
