//! Exact geometry for the hexagon-map picture of the quotient.
//!
//! The seven coset representatives sit at the origin and its six lattice
//! neighbors; their Voronoi cells are unit hexagons forming a flower that
//! tiles the plane under translation by the ideal lattice. Corners of the
//! tiling come in two shapes, "Y" (up) and inverted Y (down); around each
//! corner three cells meet, and the corner is circled when their labels,
//! read counterclockwise, step by square residues.
//!
//! Coordinates are exact: a point (x, y) here denotes the plane point
//! (x, y*sqrt(3)) with x, y rational, under the embedding 1 -> (1, 0),
//! w -> (-1/2, sqrt(3)/2). No floating point; renderers convert at the
//! edge.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{is_square_residue, lambda_gen, residue_representatives, EisensteinInt, Residue};
use crate::octonion::{rat, Rational};

/// A plane point (x, y*sqrt(3)) with rational x, y.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HexPoint {
    pub x: Rational,
    pub y: Rational,
}

impl HexPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    fn small(xn: i64, xd: i64, yn: i64, yd: i64) -> Self {
        Self::new(rat(xn, xd), rat(yn, yd))
    }

    pub fn add(&self, other: &HexPoint) -> HexPoint {
        HexPoint::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn sub(&self, other: &HexPoint) -> HexPoint {
        HexPoint::new(&self.x - &other.x, &self.y - &other.y)
    }

    /// Squared Euclidean length, x^2 + 3 y^2.
    pub fn length_squared(&self) -> Rational {
        &self.x * &self.x + (&self.y * &self.y) * rat(3, 1)
    }
}

/// Embedding of a lattice point: a + bw -> (a - b/2, (b/2) sqrt(3)).
pub fn eis_to_point(e: &EisensteinInt) -> HexPoint {
    let a = BigRational::from_integer(e.a.clone());
    let b = BigRational::from_integer(e.b.clone());
    let half = rat(1, 2);
    HexPoint::new(&a - &b * &half, b * half)
}

/// Inverse of [`eis_to_point`] when the point is on the lattice.
pub fn point_to_eis(p: &HexPoint) -> Option<EisensteinInt> {
    let b = &p.y * rat(2, 1);
    let a = &p.x + &p.y;
    if b.is_integer() && a.is_integer() {
        Some(EisensteinInt {
            a: a.to_integer(),
            b: b.to_integer(),
        })
    } else {
        None
    }
}

/// Hexagon corner offsets from a cell center, counterclockwise from the
/// 30-degree corner. Circumradius is 1/sqrt(3).
pub fn corner_offsets() -> [HexPoint; 6] {
    [
        HexPoint::small(1, 2, 1, 6),
        HexPoint::small(0, 1, 1, 3),
        HexPoint::small(-1, 2, 1, 6),
        HexPoint::small(-1, 2, -1, 6),
        HexPoint::small(0, 1, -1, 3),
        HexPoint::small(1, 2, -1, 6),
    ]
}

/// One Voronoi cell of the flower.
#[derive(Debug, Clone)]
pub struct HexCell {
    pub representative: EisensteinInt,
    pub residue: Residue,
    pub center: HexPoint,
    /// Corner positions, counterclockwise from the 30-degree corner.
    pub corners: [HexPoint; 6],
}

/// A corner class of the tiling modulo the ideal lattice.
#[derive(Debug, Clone)]
pub struct CornerClass {
    /// Canonical occurrence: smallest squared length, then lexicographic.
    pub position: HexPoint,
    /// The three occurrences inside the flower, one per surrounding cell,
    /// aligned with `cells_ccw`.
    pub occurrences: [HexPoint; 3],
    /// Labels of the three cells around the corner, counterclockwise,
    /// rotated so the smallest residue comes first.
    pub cells_ccw: [Residue; 3],
    /// Y-shaped corner (edges leave upward).
    pub up: bool,
    pub circled: bool,
}

impl CornerClass {
    /// Successive counterclockwise label differences around the corner.
    pub fn ccw_differences(&self) -> [u8; 3] {
        let v = self.cells_ccw;
        [
            v[1].sub(v[0]).value(),
            v[2].sub(v[1]).value(),
            v[0].sub(v[2]).value(),
        ]
    }
}

/// The full diagram model; renderer-agnostic.
#[derive(Debug, Clone)]
pub struct HexagonMapModel {
    pub mirror: bool,
    /// Seven cells in representative order {0, 1, -1, w, -w, w^2, -w^2}.
    pub cells: Vec<HexCell>,
    /// Fourteen corner classes: the seven up corners (by cell order),
    /// then the seven down corners.
    pub corners: Vec<CornerClass>,
    /// Basis of the ideal lattice: 2 - w and w(2 - w).
    pub lambda_basis: [HexPoint; 2],
    /// The six shortest nonzero lattice vectors, for drawing the tiling
    /// translates of the flower.
    pub translates: Vec<HexPoint>,
}

fn circling_rule(differences: [u8; 3], mirror: bool) -> bool {
    if mirror {
        differences
            .iter()
            .all(|&d| !is_square_residue(Residue::new(d as i64)) && d != 0)
    } else {
        differences.iter().all(|&d| is_square_residue(Residue::new(d as i64)))
    }
}

/// Rotates labels and occurrences together so the smallest label leads.
fn canonical_rotation(
    labels: [Residue; 3],
    occurrences: [HexPoint; 3],
) -> ([Residue; 3], [HexPoint; 3]) {
    let lead = (0..3).min_by_key(|&i| labels[i]).expect("three labels");
    let rot = |i: usize| (lead + i) % 3;
    (
        [labels[rot(0)], labels[rot(1)], labels[rot(2)]],
        [
            occurrences[rot(0)].clone(),
            occurrences[rot(1)].clone(),
            occurrences[rot(2)].clone(),
        ],
    )
}

fn canonical_position(occurrences: &[HexPoint; 3]) -> HexPoint {
    occurrences
        .iter()
        .min_by(|p, q| {
            p.length_squared()
                .cmp(&q.length_squared())
                .then_with(|| p.x.cmp(&q.x))
                .then_with(|| p.y.cmp(&q.y))
        })
        .expect("three occurrences")
        .clone()
}

/// Builds the diagram. With `mirror` set, the circling rule uses the
/// non-squares {3, 5, 6} (the picture for the conjugate ideal 2 - w^2),
/// which circles the inverted-Y corners instead.
pub fn hexagon_map(mirror: bool) -> HexagonMapModel {
    let reps = residue_representatives();
    let offsets = corner_offsets();
    let cells: Vec<HexCell> = reps
        .iter()
        .map(|(e, r)| {
            let center = eis_to_point(e);
            let corners = std::array::from_fn(|i| center.add(&offsets[i]));
            HexCell {
                representative: e.clone(),
                residue: *r,
                center,
                corners,
            }
        })
        .collect();

    // Center of the cell labeled by each residue.
    let center_of = |r: Residue| -> &HexPoint {
        &cells
            .iter()
            .find(|c| c.residue == r)
            .expect("residues cover Z/7")
            .center
    };
    let shift = |r: Residue, k: i64| r.add(Residue::new(k));

    let mut corners = Vec::with_capacity(14);
    // Up corner held by cell p at its 30-degree corner; the same corner
    // belongs to the cells labeled r+1 (at 150 degrees) and r+3 (at 270).
    for cell in &cells {
        let r = cell.residue;
        let labels = [r, shift(r, 1), shift(r, 3)];
        let occurrences = [
            cell.center.add(&offsets[0]),
            center_of(shift(r, 1)).add(&offsets[2]),
            center_of(shift(r, 3)).add(&offsets[4]),
        ];
        let (cells_ccw, occurrences) = canonical_rotation(labels, occurrences);
        let position = canonical_position(&occurrences);
        let class = CornerClass {
            position,
            occurrences,
            cells_ccw,
            up: true,
            circled: false,
        };
        let circled = circling_rule(class.ccw_differences(), mirror);
        corners.push(CornerClass { circled, ..class });
    }
    // Down corner held by cell p at its -30-degree corner; the others are
    // r+5 (at 90 degrees) and r+1 (at 210 degrees).
    for cell in &cells {
        let r = cell.residue;
        let labels = [r, shift(r, 5), shift(r, 1)];
        let occurrences = [
            cell.center.add(&offsets[5]),
            center_of(shift(r, 5)).add(&offsets[1]),
            center_of(shift(r, 1)).add(&offsets[3]),
        ];
        let (cells_ccw, occurrences) = canonical_rotation(labels, occurrences);
        let position = canonical_position(&occurrences);
        let class = CornerClass {
            position,
            occurrences,
            cells_ccw,
            up: false,
            circled: false,
        };
        let circled = circling_rule(class.ccw_differences(), mirror);
        corners.push(CornerClass { circled, ..class });
    }

    let g = lambda_gen();
    let wg = &EisensteinInt::omega() * &g;
    let wwg = &EisensteinInt::omega_squared() * &g;
    let translates = vec![
        eis_to_point(&g),
        eis_to_point(&-&g),
        eis_to_point(&wg),
        eis_to_point(&-&wg),
        eis_to_point(&wwg),
        eis_to_point(&-&wwg),
    ];
    HexagonMapModel {
        mirror,
        cells,
        lambda_basis: [eis_to_point(&g), eis_to_point(&wg)],
        translates,
        corners,
    }
}

/// Bounding half-width of the drawing content: max |x| and max sqrt(3)|y|
/// over all cell corners and translates, as exact rationals.
pub fn content_extent(model: &HexagonMapModel) -> (Rational, Rational) {
    let mut max_x = Rational::zero();
    let mut max_y = Rational::zero();
    let mut take = |p: &HexPoint| {
        let ax = p.x.abs();
        let ay = p.y.abs();
        if ax > max_x {
            max_x = ax;
        }
        if ay > max_y {
            max_y = ay;
        }
    };
    for cell in &model.cells {
        for c in &cell.corners {
            take(c);
        }
    }
    for t in &model.translates {
        take(t);
    }
    (max_x, max_y)
}
