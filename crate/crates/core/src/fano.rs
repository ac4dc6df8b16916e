//! The Fano plane and its cyclically oriented form.
//!
//! Points are the fixed labels `0..=6`. A plane is seven 3-point lines
//! such that any two points lie on a unique common line; an oriented plane
//! additionally carries a cyclic order on each line. The oriented plane is
//! the combinatorial datum behind the octonion structure constants.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::perm::permutations7;

/// Number of points and number of lines.
pub const POINTS: usize = 7;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FanoError {
    #[error("expected 7 lines, got {0}")]
    WrongLineCount(usize),
    #[error("line {index} has {size} points, expected 3")]
    WrongLineSize { index: usize, size: usize },
    #[error("line {index} contains out-of-range point {point}")]
    PointOutOfRange { index: usize, point: u8 },
    #[error("line {index} repeats a point")]
    RepeatedPoint { index: usize },
    #[error("point {0} is out of range 0..=6")]
    BadPoint(u8),
    #[error("projective plane axioms violated: {0}")]
    AxiomsViolated(String),
    #[error("cyclic triple {0:?} has repeated points")]
    DegenerateTriple([u8; 3]),
}

/// A cyclic triple `(a, b, c)` of distinct points, stored in the canonical
/// rotation that puts the smallest label first. Reversal is a different
/// triple: `(a, b, c)` and `(a, c, b)` are distinct orientations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CyclicTriple([u8; 3]);

impl CyclicTriple {
    pub fn new(points: [u8; 3]) -> Result<Self, FanoError> {
        for &p in &points {
            if p > 6 {
                return Err(FanoError::BadPoint(p));
            }
        }
        if points[0] == points[1] || points[1] == points[2] || points[0] == points[2] {
            return Err(FanoError::DegenerateTriple(points));
        }
        Ok(Self(Self::canonical_rotation(points)))
    }

    fn canonical_rotation(points: [u8; 3]) -> [u8; 3] {
        let [a, b, c] = points;
        if a < b && a < c {
            [a, b, c]
        } else if b < a && b < c {
            [b, c, a]
        } else {
            [c, a, b]
        }
    }

    pub fn points(&self) -> [u8; 3] {
        self.0
    }

    /// The same line with the opposite cyclic order.
    pub fn reversed(&self) -> Self {
        let [a, b, c] = self.0;
        Self(Self::canonical_rotation([a, c, b]))
    }

    /// Underlying unordered triple, sorted ascending.
    pub fn sorted(&self) -> [u8; 3] {
        let mut s = self.0;
        s.sort_unstable();
        s
    }

    pub fn contains(&self, p: u8) -> bool {
        self.0.contains(&p)
    }

    /// Cyclic successor of `p`, if `p` lies on the triple.
    pub fn successor(&self, p: u8) -> Option<u8> {
        let [a, b, c] = self.0;
        match p {
            _ if p == a => Some(b),
            _ if p == b => Some(c),
            _ if p == c => Some(a),
            _ => None,
        }
    }

    /// Relabels the triple by a point permutation.
    pub fn relabel(&self, perm: &[u8; 7]) -> Self {
        let [a, b, c] = self.0;
        Self(Self::canonical_rotation([
            perm[a as usize],
            perm[b as usize],
            perm[c as usize],
        ]))
    }
}

impl fmt::Display for CyclicTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {} {})", self.0[0], self.0[1], self.0[2])
    }
}

/// The Fano plane on points {0..6}: seven sorted 3-point lines, the list
/// itself sorted lexicographically. Construction validates all plane axioms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FanoPlane {
    lines: [[u8; 3]; 7],
}

impl FanoPlane {
    pub fn new(lines: impl IntoIterator<Item = [u8; 3]>) -> Result<Self, FanoError> {
        let raw: Vec<Vec<u8>> = lines.into_iter().map(|l| l.to_vec()).collect();
        let report = verify_projective_plane(&raw)?;
        if !report.pass() {
            return Err(FanoError::AxiomsViolated(report.summary()));
        }
        let mut sorted: Vec<[u8; 3]> = raw
            .iter()
            .map(|l| {
                let mut a = [l[0], l[1], l[2]];
                a.sort_unstable();
                a
            })
            .collect();
        sorted.sort_unstable();
        let mut lines = [[0u8; 3]; 7];
        lines.copy_from_slice(&sorted);
        Ok(Self { lines })
    }

    /// The plane underlying the index rules, lines {n+1, n+2, n+4} mod 7.
    pub fn standard() -> Self {
        OrientedFanoPlane::standard().underlying()
    }

    pub fn lines(&self) -> &[[u8; 3]; 7] {
        &self.lines
    }

    /// The three lines through a point.
    pub fn lines_through(&self, p: u8) -> Result<Vec<[u8; 3]>, FanoError> {
        if p > 6 {
            return Err(FanoError::BadPoint(p));
        }
        Ok(self
            .lines
            .iter()
            .copied()
            .filter(|l| l.contains(&p))
            .collect())
    }

    /// The unique line through two distinct points.
    pub fn line_through_pair(&self, p: u8, q: u8) -> Option<[u8; 3]> {
        self.lines
            .iter()
            .copied()
            .find(|l| l.contains(&p) && l.contains(&q))
    }

    /// Searches all 5040 point permutations for one carrying the lines of
    /// `self` onto the lines of `other`. Returns the first match in
    /// lexicographic order.
    pub fn isomorphism_to(&self, other: &FanoPlane) -> Option<[u8; 7]> {
        let target: HashSet<[u8; 3]> = other.lines.iter().copied().collect();
        'perm: for perm in permutations7() {
            for line in &self.lines {
                let mut mapped = [
                    perm[line[0] as usize],
                    perm[line[1] as usize],
                    perm[line[2] as usize],
                ];
                mapped.sort_unstable();
                if !target.contains(&mapped) {
                    continue 'perm;
                }
            }
            return Some(*perm);
        }
        None
    }

    /// Canonical text form: one plane line per text line, points space-separated.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(&format!("{} {} {}\n", l[0], l[1], l[2]));
        }
        out
    }

    /// JSON form `{"lines": [[a,b,c], ...], "oriented": false}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&PlaneJson {
            lines: self.lines.iter().map(|l| l.to_vec()).collect(),
            oriented: false,
        })
        .expect("plane serialization cannot fail")
    }
}

impl fmt::Display for FanoPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Serialize)]
struct PlaneJson {
    lines: Vec<Vec<u8>>,
    oriented: bool,
}

/// A Fano plane with a cyclic order on each line. Lines are canonical
/// cyclic triples sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrientedFanoPlane {
    lines: [CyclicTriple; 7],
}

impl OrientedFanoPlane {
    pub fn new(triples: impl IntoIterator<Item = CyclicTriple>) -> Result<Self, FanoError> {
        let mut ts: Vec<CyclicTriple> = triples.into_iter().collect();
        ts.sort_unstable();
        if ts.len() != 7 {
            return Err(FanoError::WrongLineCount(ts.len()));
        }
        // Underlying unordered triples must form a valid plane.
        let raw: Vec<Vec<u8>> = ts.iter().map(|t| t.sorted().to_vec()).collect();
        let report = verify_projective_plane(&raw)?;
        if !report.pass() {
            return Err(FanoError::AxiomsViolated(report.summary()));
        }
        let mut lines = [ts[0]; 7];
        lines.copy_from_slice(&ts);
        Ok(Self { lines })
    }

    /// The orientation given by the index rules: cyclic triples
    /// `(n+1, n+2, n+4)` mod 7 for `n = 0..6`.
    pub fn standard() -> Self {
        let triples = (0u8..7).map(|n| {
            CyclicTriple::new([(n + 1) % 7, (n + 2) % 7, (n + 4) % 7])
                .expect("index-rule triples are nondegenerate")
        });
        Self::new(triples).expect("index-rule triples form a plane")
    }

    pub fn lines(&self) -> &[CyclicTriple; 7] {
        &self.lines
    }

    /// Forgets the cyclic orders.
    pub fn underlying(&self) -> FanoPlane {
        let mut lines: Vec<[u8; 3]> = self.lines.iter().map(|t| t.sorted()).collect();
        lines.sort_unstable();
        let mut arr = [[0u8; 3]; 7];
        arr.copy_from_slice(&lines);
        // Valid by construction of self.
        FanoPlane { lines: arr }
    }

    /// The oriented line through the ordered pair `(a, b)`: the unique cyclic
    /// triple in which `b` follows `a`, or in which `a` follows `b`.
    pub fn line_with_pair(&self, a: u8, b: u8) -> Option<&CyclicTriple> {
        self.lines
            .iter()
            .find(|t| t.contains(a) && t.contains(b))
    }

    /// Reverses the cyclic order of the line at `index` (in sorted order).
    /// Test hook for breaking alternativity in a controlled way.
    pub fn with_line_reversed(&self, index: usize) -> Result<Self, FanoError> {
        if index >= 7 {
            return Err(FanoError::WrongLineCount(index));
        }
        let mut lines = self.lines;
        lines[index] = lines[index].reversed();
        Self::new(lines)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for t in &self.lines {
            let [a, b, c] = t.points();
            out.push_str(&format!("cyclic: {a} {b} {c}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PlaneJson {
            lines: self.lines.iter().map(|t| t.points().to_vec()).collect(),
            oriented: true,
        })
        .expect("plane serialization cannot fail")
    }
}

impl fmt::Display for OrientedFanoPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Result of checking one projective-plane axiom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub pass: bool,
    /// Up to [`MAX_COUNTEREXAMPLES`] human-readable witnesses.
    pub counterexamples: Vec<String>,
}

/// Cap on recorded counterexamples per axiom.
pub const MAX_COUNTEREXAMPLES: usize = 10;

/// Per-axiom report from [`verify_projective_plane`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub axioms: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn pass(&self) -> bool {
        self.axioms.iter().all(|a| a.pass)
    }

    pub fn summary(&self) -> String {
        let failed: Vec<String> = self
            .axioms
            .iter()
            .filter(|a| !a.pass)
            .map(|a| {
                let first = a
                    .counterexamples
                    .first()
                    .map(String::as_str)
                    .unwrap_or("no witness");
                format!("{} ({first})", a.name)
            })
            .collect();
        if failed.is_empty() {
            "all axioms pass".to_string()
        } else {
            failed.join("; ")
        }
    }
}

fn push_capped(witnesses: &mut Vec<String>, w: String) {
    if witnesses.len() < MAX_COUNTEREXAMPLES {
        witnesses.push(w);
    }
}

/// Checks the four Fano-plane axioms on seven candidate lines.
///
/// Malformed input (wrong sizes, out-of-range labels, repeated labels within
/// a line) is an input error, not an axiom failure. Each axiom reports all
/// failures it finds, capped at [`MAX_COUNTEREXAMPLES`] witnesses.
pub fn verify_projective_plane(lines: &[Vec<u8>]) -> Result<AxiomReport, FanoError> {
    if lines.len() != 7 {
        return Err(FanoError::WrongLineCount(lines.len()));
    }
    let mut normalized: Vec<[u8; 3]> = Vec::with_capacity(7);
    for (index, line) in lines.iter().enumerate() {
        if line.len() != 3 {
            return Err(FanoError::WrongLineSize {
                index,
                size: line.len(),
            });
        }
        for &p in line {
            if p > 6 {
                return Err(FanoError::PointOutOfRange { index, point: p });
            }
        }
        let mut arr = [line[0], line[1], line[2]];
        arr.sort_unstable();
        if arr[0] == arr[1] || arr[1] == arr[2] {
            return Err(FanoError::RepeatedPoint { index });
        }
        normalized.push(arr);
    }

    // Axiom: each unordered point pair lies in exactly one line.
    let mut pair_cover = [[0u32; 7]; 7];
    for line in &normalized {
        for i in 0..3 {
            for j in (i + 1)..3 {
                pair_cover[line[i] as usize][line[j] as usize] += 1;
            }
        }
    }
    let mut pair_witnesses = Vec::new();
    for a in 0..7 {
        for b in (a + 1)..7 {
            let n = pair_cover[a][b];
            if n != 1 {
                push_capped(
                    &mut pair_witnesses,
                    format!("pair {{{a},{b}}} covered {n} times"),
                );
            }
        }
    }

    // Axiom: two distinct lines intersect in exactly one point.
    let mut meet_witnesses = Vec::new();
    for i in 0..7 {
        for j in (i + 1)..7 {
            let shared = normalized[i]
                .iter()
                .filter(|p| normalized[j].contains(p))
                .count();
            if shared != 1 {
                push_capped(
                    &mut meet_witnesses,
                    format!("lines {i} and {j} share {shared} points"),
                );
            }
        }
    }

    // Axiom: each point lies on exactly 3 lines.
    let mut per_point = [0u32; 7];
    for line in &normalized {
        for &p in line {
            per_point[p as usize] += 1;
        }
    }
    let mut point_witnesses = Vec::new();
    for (p, &n) in per_point.iter().enumerate() {
        if n != 3 {
            push_capped(&mut point_witnesses, format!("point {p} on {n} lines"));
        }
    }

    // Axiom: the seven lines are pairwise distinct.
    let mut distinct_witnesses = Vec::new();
    for i in 0..7 {
        for j in (i + 1)..7 {
            if normalized[i] == normalized[j] {
                push_capped(
                    &mut distinct_witnesses,
                    format!("line {j} duplicates line {i}"),
                );
            }
        }
    }

    let axioms = vec![
        AxiomCheck {
            name: "pair-coverage",
            pass: pair_witnesses.is_empty(),
            counterexamples: pair_witnesses,
        },
        AxiomCheck {
            name: "line-intersection",
            pass: meet_witnesses.is_empty(),
            counterexamples: meet_witnesses,
        },
        AxiomCheck {
            name: "three-lines-per-point",
            pass: point_witnesses.is_empty(),
            counterexamples: point_witnesses,
        },
        AxiomCheck {
            name: "seven-distinct-lines",
            pass: distinct_witnesses.is_empty(),
            counterexamples: distinct_witnesses,
        },
    ];
    Ok(AxiomReport { axioms })
}

/// Free-function spelling of [`OrientedFanoPlane::standard`].
pub fn standard_fano() -> OrientedFanoPlane {
    OrientedFanoPlane::standard()
}
