//! Exact octonion arithmetic over a structure-constant table.
//!
//! The table lives on basis slots: slot 0 is the unit, slots 1..=7 hold the
//! imaginary units e_0..e_6, so imaginary labels stay aligned with Z/7.
//! Coefficients are arbitrary-precision rationals; there is no floating
//! point anywhere in this module.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::fano::{FanoPlane, OrientedFanoPlane};
use crate::perm::{invert, permutations7};

/// Exact scalar type used throughout.
pub type Rational = BigRational;

/// Small exact fraction. Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Render names for the 8 basis slots.
pub const BASIS_NAMES: [&str; 8] = ["1", "e0", "e1", "e2", "e3", "e4", "e5", "e6"];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("cannot invert the zero octonion")]
    ZeroInverse,
    #[error("plane line ({0} {1} {2}) does not match the table's line structure")]
    PlaneMismatch(u8, u8, u8),
}

/// A signed basis element: `sign * slot` with slot 0 = unit, slot i+1 = e_i.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SignedBasis {
    pub sign: i8,
    pub slot: u8,
}

impl fmt::Display for SignedBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-{}", BASIS_NAMES[self.slot as usize])
        } else {
            f.write_str(BASIS_NAMES[self.slot as usize])
        }
    }
}

/// The full 8x8 table of signed basis products.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureConstants {
    table: [[SignedBasis; 8]; 8],
}

fn unit_square_scaffold() -> [[SignedBasis; 8]; 8] {
    let mut table = [[SignedBasis { sign: 1, slot: 0 }; 8]; 8];
    for s in 0..8u8 {
        table[0][s as usize] = SignedBasis { sign: 1, slot: s };
        table[s as usize][0] = SignedBasis { sign: 1, slot: s };
    }
    for i in 1..8 {
        table[i][i] = SignedBasis { sign: -1, slot: 0 };
    }
    table
}

impl StructureConstants {
    /// Reads the table off an oriented plane: for each cyclic triple
    /// (a,b,c), e_a e_b = e_c and cyclic shifts, negated for reversed pairs;
    /// squares are -1; the unit is neutral.
    pub fn from_oriented_plane(plane: &OrientedFanoPlane) -> Self {
        let mut table = unit_square_scaffold();
        for i in 0..7u8 {
            for j in 0..7u8 {
                if i == j {
                    continue;
                }
                let line = plane
                    .line_with_pair(i, j)
                    .expect("a valid plane covers every point pair");
                let (sign, k) = if line.successor(i) == Some(j) {
                    (1, line.successor(j).expect("point on line"))
                } else {
                    (-1, line.successor(i).expect("point on line"))
                };
                table[i as usize + 1][j as usize + 1] = SignedBasis {
                    sign,
                    slot: k + 1,
                };
            }
        }
        Self { table }
    }

    /// Builds the table straight from index arithmetic: going distance
    /// 1, 2, or 4 around Z/7 lands inside an oriented line, and the third
    /// point sits at a fixed offset from the first. No plane lookup.
    pub fn from_index_rules() -> Self {
        // For b - a = 1, 2, 4 (mod 7) the pair (a,b) reads forward along
        // the line {n+1, n+2, n+4}; the product index offset from a is
        // 3, 6, 5 respectively.
        fn forward(a: u8, d: u8) -> Option<u8> {
            match d {
                1 => Some((a + 3) % 7),
                2 => Some((a + 6) % 7),
                4 => Some((a + 5) % 7),
                _ => None,
            }
        }
        let mut table = unit_square_scaffold();
        for a in 0..7u8 {
            for b in 0..7u8 {
                if a == b {
                    continue;
                }
                let d = (7 + b - a) % 7;
                let entry = match forward(a, d) {
                    Some(c) => SignedBasis { sign: 1, slot: c + 1 },
                    None => {
                        let c = forward(b, 7 - d).expect("7-d is in {1,2,4}");
                        SignedBasis { sign: -1, slot: c + 1 }
                    }
                };
                table[a as usize + 1][b as usize + 1] = entry;
            }
        }
        Self { table }
    }

    /// Product of basis slots `a * b` (slot indexing, 0 = unit).
    pub fn entry(&self, a: usize, b: usize) -> SignedBasis {
        self.table[a][b]
    }

    /// Product of imaginary units `e_i * e_j` for i != j, returned as
    /// (sign, imaginary index).
    pub fn imaginary_product(&self, i: u8, j: u8) -> (i8, u8) {
        let e = self.table[i as usize + 1][j as usize + 1];
        debug_assert!(e.slot >= 1);
        (e.sign, e.slot - 1)
    }

    /// Aligned text grid, left factor down the rows.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str("  * |");
        for name in BASIS_NAMES {
            out.push_str(&format!(" {name:>3}"));
        }
        out.push('\n');
        out.push_str("----+");
        out.push_str(&"-".repeat(32));
        out.push('\n');
        for a in 0..8 {
            out.push_str(&format!("{:>3} |", BASIS_NAMES[a]));
            for b in 0..8 {
                // Pad the rendered string; width specs pass through our
                // Display impl untouched.
                out.push_str(&format!(" {:>3}", self.table[a][b].to_string()));
            }
            out.push('\n');
        }
        out
    }

    /// CSV with a header row; each data row is one left factor.
    pub fn render_csv(&self) -> String {
        let mut out = String::new();
        out.push_str("left");
        for name in BASIS_NAMES {
            out.push(',');
            out.push_str(name);
        }
        out.push('\n');
        for a in 0..8 {
            out.push_str(BASIS_NAMES[a]);
            for b in 0..8 {
                out.push(',');
                out.push_str(&self.table[a][b].to_string());
            }
            out.push('\n');
        }
        out
    }

    /// JSON object `{"basis": [...], "table": [[...], ...]}`.
    pub fn render_json(&self) -> String {
        #[derive(Serialize)]
        struct TableJson {
            basis: Vec<&'static str>,
            table: Vec<Vec<String>>,
        }
        let json = TableJson {
            basis: BASIS_NAMES.to_vec(),
            table: (0..8)
                .map(|a| (0..8).map(|b| self.table[a][b].to_string()).collect())
                .collect(),
        };
        serde_json::to_string(&json).expect("table serialization cannot fail")
    }
}

/// An octonion with exact rational coefficients. Slot 0 is the unit
/// coefficient, slots 1..=7 the coefficients of e_0..e_6.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Octonion {
    coeffs: [Rational; 8],
}

impl Octonion {
    pub fn zero() -> Self {
        Self {
            coeffs: std::array::from_fn(|_| Rational::zero()),
        }
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    /// The basis element at `slot` (0 = unit, i+1 = e_i).
    pub fn basis(slot: usize) -> Self {
        assert!(slot < 8, "basis slot out of range");
        let mut x = Self::zero();
        x.coeffs[slot] = Rational::one();
        x
    }

    /// The imaginary unit e_i for i in 0..=6.
    pub fn imaginary(i: u8) -> Self {
        assert!(i < 7, "imaginary index out of range");
        Self::basis(i as usize + 1)
    }

    pub fn from_coeffs(coeffs: [Rational; 8]) -> Self {
        Self { coeffs }
    }

    pub fn from_integers(coeffs: [i64; 8]) -> Self {
        Self {
            coeffs: std::array::from_fn(|i| rat(coeffs[i], 1)),
        }
    }

    pub fn coeffs(&self) -> &[Rational; 8] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, s: &Rational) -> Self {
        Self {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] * s),
        }
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, other: &Octonion, sc: &StructureConstants) -> Octonion {
        let mut out: [Rational; 8] = std::array::from_fn(|_| Rational::zero());
        for i in 0..8 {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..8 {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let e = sc.entry(i, j);
                let term = &self.coeffs[i] * &other.coeffs[j];
                if e.sign > 0 {
                    out[e.slot as usize] += term;
                } else {
                    out[e.slot as usize] -= term;
                }
            }
        }
        Octonion { coeffs: out }
    }

    /// Negates the imaginary part.
    pub fn conjugate(&self) -> Octonion {
        Octonion {
            coeffs: std::array::from_fn(|i| {
                if i == 0 {
                    self.coeffs[0].clone()
                } else {
                    -self.coeffs[i].clone()
                }
            }),
        }
    }

    /// Sum of squared coefficients. Zero only on the zero octonion.
    pub fn norm(&self) -> Rational {
        self.coeffs
            .iter()
            .map(|c| c * c)
            .fold(Rational::zero(), |acc, t| acc + t)
    }

    /// Conjugate over norm; exact. Errors on zero.
    pub fn inverse(&self) -> Result<Octonion, AlgebraError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(AlgebraError::ZeroInverse);
        }
        Ok(self.conjugate().scaled(&n.recip()))
    }
}

impl std::ops::Add for Octonion {
    type Output = Octonion;
    fn add(self, rhs: Octonion) -> Octonion {
        Octonion {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]),
        }
    }
}

impl std::ops::Sub for Octonion {
    type Output = Octonion;
    fn sub(self, rhs: Octonion) -> Octonion {
        Octonion {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]),
        }
    }
}

impl std::ops::Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion {
            coeffs: std::array::from_fn(|i| -self.coeffs[i].clone()),
        }
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (slot, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let mag = c.abs();
            if slot == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(BASIS_NAMES[slot])?;
            } else {
                write!(f, "{mag}*{}", BASIS_NAMES[slot])?;
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// (xy)z - x(yz), computed exactly.
pub fn associator(
    x: &Octonion,
    y: &Octonion,
    z: &Octonion,
    sc: &StructureConstants,
) -> Octonion {
    let left = x.multiply(y, sc).multiply(z, sc);
    let right = x.multiply(&y.multiply(z, sc), sc);
    left - right
}

/// Outcome of one verification pass.
#[derive(Debug, Clone, Serialize)]
pub struct Verification {
    pub name: &'static str,
    pub pass: bool,
    /// Number of cases examined before stopping.
    pub cases: u64,
    pub detail: String,
}

impl Verification {
    fn pass(name: &'static str, cases: u64, detail: impl Into<String>) -> Self {
        Self {
            name,
            pass: true,
            cases,
            detail: detail.into(),
        }
    }

    fn fail(name: &'static str, cases: u64, detail: impl Into<String>) -> Self {
        Self {
            name,
            pass: false,
            cases,
            detail: detail.into(),
        }
    }
}

/// Skew-symmetry of the associator under every transposition, for all 343
/// ordered triples of imaginary basis units. By trilinearity this is
/// equivalent to alternativity of the whole algebra.
pub fn verify_alternative(sc: &StructureConstants) -> Verification {
    let units: Vec<Octonion> = (0..7).map(Octonion::imaginary).collect();
    let assoc = |a: usize, b: usize, c: usize| associator(&units[a], &units[b], &units[c], sc);
    let mut cases = 0u64;
    for a in 0..7 {
        for b in 0..7 {
            for c in 0..7 {
                cases += 1;
                let base = assoc(a, b, c);
                let swaps = [(b, a, c), (a, c, b), (c, b, a)];
                for (p, q, r) in swaps {
                    if assoc(p, q, r) != -base.clone() {
                        return Verification::fail(
                            "alternative",
                            cases,
                            format!(
                                "associator(e{a}, e{b}, e{c}) is not the negative of \
                                 associator(e{p}, e{q}, e{r})"
                            ),
                        );
                    }
                }
            }
        }
    }
    Verification::pass(
        "alternative",
        cases,
        "associator skew-symmetric on all 343 basis triples",
    )
}

/// Deterministic generator for reproducible sampling.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Octonion with numerators in [-9, 9] and denominators in {1, 2, 3}.
pub fn random_octonion<R: Rng>(rng: &mut R) -> Octonion {
    let coeffs: [Rational; 8] = std::array::from_fn(|_| {
        let num = rng.gen_range(-9i64..=9);
        let den = [1i64, 2, 3][rng.gen_range(0..3)];
        rat(num, den)
    });
    Octonion::from_coeffs(coeffs)
}

/// As [`random_octonion`], retrying until nonzero.
pub fn random_nonzero_octonion<R: Rng>(rng: &mut R) -> Octonion {
    loop {
        let x = random_octonion(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// N(xy) = N(x)N(y), exactly, over all 64 ordered basis pairs and `trials`
/// seeded random pairs.
pub fn verify_norm_multiplicative(
    sc: &StructureConstants,
    trials: u64,
    seed: u64,
) -> Verification {
    let mut cases = 0u64;
    let mut check = |x: &Octonion, y: &Octonion| -> Option<Verification> {
        cases += 1;
        let lhs = x.multiply(y, sc).norm();
        let rhs = x.norm() * y.norm();
        if lhs == rhs {
            None
        } else {
            Some(Verification::fail(
                "norm-multiplicative",
                cases,
                format!("N(xy) = {lhs} but N(x)N(y) = {rhs} for x = {x}, y = {y}"),
            ))
        }
    };
    for a in 0..8 {
        for b in 0..8 {
            if let Some(v) = check(&Octonion::basis(a), &Octonion::basis(b)) {
                return v;
            }
        }
    }
    let mut rng = seeded_rng(seed);
    for _ in 0..trials {
        let x = random_octonion(&mut rng);
        let y = random_octonion(&mut rng);
        if let Some(v) = check(&x, &y) {
            return v;
        }
    }
    Verification::pass(
        "norm-multiplicative",
        cases,
        format!("N(xy) = N(x)N(y) on 64 basis pairs and {trials} random pairs"),
    )
}

/// Each plane line spans a quaternion copy: closure of span{1, e_a, e_b,
/// e_c} under multiplication, vanishing associator on the line's units, and
/// the i,j,k relations in the table's own cyclic order.
pub fn verify_quaternion_subalgebras(
    sc: &StructureConstants,
    plane: &FanoPlane,
) -> Result<Verification, AlgebraError> {
    // The plane must describe this table's line structure.
    for &[a, b, c] in plane.lines() {
        let (_, k) = sc.imaginary_product(a, b);
        if k != c {
            return Err(AlgebraError::PlaneMismatch(a, b, c));
        }
    }
    let mut cases = 0u64;
    for &[a, b, c] in plane.lines() {
        cases += 1;
        let slots = [0usize, a as usize + 1, b as usize + 1, c as usize + 1];
        for &s in &slots {
            for &t in &slots {
                let e = sc.entry(s, t);
                if !slots.contains(&(e.slot as usize)) {
                    return Ok(Verification::fail(
                        "quaternion-subalgebras",
                        cases,
                        format!("line ({a} {b} {c}) is not closed: slot {s} * slot {t}"),
                    ));
                }
            }
        }
        let units = [
            Octonion::imaginary(a),
            Octonion::imaginary(b),
            Octonion::imaginary(c),
        ];
        for x in &units {
            for y in &units {
                for z in &units {
                    if !associator(x, y, z, sc).is_zero() {
                        return Ok(Verification::fail(
                            "quaternion-subalgebras",
                            cases,
                            format!("line ({a} {b} {c}) units do not associate"),
                        ));
                    }
                }
            }
        }
        // i,j,k relations with k defined as ij; holds in either cyclic order.
        let i = &units[0];
        let j = &units[1];
        let k = i.multiply(j, sc);
        let minus_one = -Octonion::one();
        let relations = [
            (j.multiply(&k, sc), i.clone()),
            (k.multiply(i, sc), j.clone()),
            (i.multiply(i, sc), minus_one.clone()),
            (j.multiply(j, sc), minus_one.clone()),
            (k.multiply(&k, sc), minus_one.clone()),
        ];
        if relations.iter().any(|(got, want)| got != want) {
            return Ok(Verification::fail(
                "quaternion-subalgebras",
                cases,
                format!("line ({a} {b} {c}) breaks the i,j,k relations"),
            ));
        }
    }
    Ok(Verification::pass(
        "quaternion-subalgebras",
        cases,
        "7/7 lines span quaternion copies",
    ))
}

/// A basis map e_i -> signs[i] * e_perm[i] (unit fixed).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SignedPerm {
    pub perm: [u8; 7],
    pub signs: [i8; 7],
}

impl SignedPerm {
    pub fn identity() -> Self {
        Self {
            perm: [0, 1, 2, 3, 4, 5, 6],
            signs: [1; 7],
        }
    }

    pub fn inverse(&self) -> Self {
        let perm = invert(&self.perm);
        let mut signs = [1i8; 7];
        for i in 0..7 {
            signs[self.perm[i] as usize] = self.signs[i];
        }
        Self { perm, signs }
    }
}

fn imaginary_table(sc: &StructureConstants) -> [[(i8, u8); 7]; 7] {
    let mut t = [[(1i8, 0u8); 7]; 7];
    for i in 0..7u8 {
        for j in 0..7u8 {
            if i != j {
                t[i as usize][j as usize] = sc.imaginary_product(i, j);
            }
        }
    }
    t
}

/// True if `map` carries the products of `sc1` onto those of `sc2`.
pub fn is_isomorphism(map: &SignedPerm, sc1: &StructureConstants, sc2: &StructureConstants) -> bool {
    let p1 = imaginary_table(sc1);
    let p2 = imaginary_table(sc2);
    for a in 0..7 {
        for b in 0..7 {
            if a == b {
                continue;
            }
            let (s, c) = p1[a][b];
            let (s2, c2) = p2[map.perm[a] as usize][map.perm[b] as usize];
            if c2 != map.perm[c as usize]
                || map.signs[a] * map.signs[b] * s2 != s * map.signs[c as usize]
            {
                return false;
            }
        }
    }
    true
}

/// Searches all 7! * 2^7 = 645,120 signed basis maps in lexicographic
/// order (permutation major, sign mask minor) and returns the first one
/// carrying `sc1` onto `sc2`.
pub fn tables_isomorphic(
    sc1: &StructureConstants,
    sc2: &StructureConstants,
) -> Option<SignedPerm> {
    let p1 = imaginary_table(sc1);
    let p2 = imaginary_table(sc2);
    for perm in permutations7() {
        'mask: for mask in 0u8..128 {
            let sign = |i: usize| -> i8 {
                if mask & (1 << i) != 0 {
                    -1
                } else {
                    1
                }
            };
            for a in 0..7 {
                for b in 0..7 {
                    if a == b {
                        continue;
                    }
                    let (s, c) = p1[a][b];
                    let (s2, c2) = p2[perm[a] as usize][perm[b] as usize];
                    if c2 != perm[c as usize] || sign(a) * sign(b) * s2 != s * sign(c as usize) {
                        continue 'mask;
                    }
                }
            }
            let signs = std::array::from_fn(sign);
            return Some(SignedPerm { perm: *perm, signs });
        }
    }
    None
}
