//! Tournaments on seven vertices and combinatorial surfaces built from
//! their directed 3-cycles.
//!
//! A tournament is stored as a 21-bit mask over the edges of K7 in
//! lexicographic order: (0,1)=0, (0,2)=1, ..., (0,6)=5, (1,2)=6, ...,
//! (5,6)=20. A set bit orients the edge from the low vertex to the high
//! one. All reported masks use this convention.
//!
//! The triangulation checker is generic over up to 14 vertices so that
//! small fixtures (sphere, projective plane) can exercise it, not just the
//! 7-vertex case.

pub mod search;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::fano::{CyclicTriple, FanoError, OrientedFanoPlane};
use crate::perm::permutations7;

/// A directed triangle is a cyclic triple of vertices.
pub type OrientedTriangle = CyclicTriple;

pub const VERTICES: u8 = 7;
pub const EDGE_COUNT: usize = 21;
/// One past the largest valid mask.
pub const MASK_SPACE: u32 = 1 << EDGE_COUNT;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("mask {0:#o} does not fit in 21 bits")]
    MaskTooWide(u32),
    #[error("vertex count {0} out of range 1..=14")]
    BadVertexCount(usize),
    #[error("triangle {0:?} has a vertex out of range")]
    VertexOutOfRange([u8; 3]),
    #[error("triangle {0:?} repeats a vertex")]
    RepeatedVertex([u8; 3]),
    #[error("triangle {0:?} appears more than once")]
    DuplicateTriangle([u8; 3]),
    #[error("orientation is not triangulating")]
    NotTriangulating,
    #[error(transparent)]
    Plane(#[from] FanoError),
}

/// Index of edge (i, j), i < j, in the lexicographic edge order.
pub fn edge_index(i: u8, j: u8) -> usize {
    debug_assert!(i < j && j < 7);
    let i = i as usize;
    let j = j as usize;
    i * 7 - i * (i + 1) / 2 + (j - i - 1)
}

/// Inverse of [`edge_index`].
pub fn edge_endpoints(index: usize) -> (u8, u8) {
    debug_assert!(index < EDGE_COUNT);
    let mut k = index;
    for i in 0u8..6 {
        let row = (6 - i) as usize;
        if k < row {
            return (i, i + 1 + k as u8);
        }
        k -= row;
    }
    unreachable!("edge index out of range")
}

/// An orientation of K7.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Tournament {
    mask: u32,
}

impl Tournament {
    pub fn new(mask: u32) -> Result<Self, SurfaceError> {
        if mask >= MASK_SPACE {
            return Err(SurfaceError::MaskTooWide(mask));
        }
        Ok(Self { mask })
    }

    /// Builds the orientation from a dominance rule; `beats(a, b)` decides
    /// the edge between distinct vertices and must be antisymmetric.
    pub fn from_beats(beats: impl Fn(u8, u8) -> bool) -> Self {
        let mut mask = 0u32;
        for i in 0..7u8 {
            for j in (i + 1)..7 {
                debug_assert!(beats(i, j) != beats(j, i));
                if beats(i, j) {
                    mask |= 1 << edge_index(i, j);
                }
            }
        }
        Self { mask }
    }

    /// All edges low-to-high; has no directed cycles at all.
    pub fn transitive() -> Self {
        Self { mask: MASK_SPACE - 1 }
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    /// True if the edge between a and b points a -> b.
    pub fn points_to(&self, a: u8, b: u8) -> bool {
        debug_assert!(a != b);
        if a < b {
            self.mask & (1 << edge_index(a, b)) != 0
        } else {
            self.mask & (1 << edge_index(b, a)) == 0
        }
    }

    pub fn out_degree(&self, v: u8) -> u32 {
        (0..7).filter(|&u| u != v && self.points_to(v, u)).count() as u32
    }

    /// The tournament with every edge reversed.
    pub fn reverse(&self) -> Self {
        Self { mask: self.mask ^ (MASK_SPACE - 1) }
    }

    /// Applies a vertex permutation.
    pub fn relabel(&self, perm: &[u8; 7]) -> Self {
        let mut mask = 0u32;
        for i in 0..7u8 {
            for j in (i + 1)..7 {
                // Map the directed edge; set the bit when the image points
                // low to high.
                let (u, v) = if self.points_to(i, j) { (i, j) } else { (j, i) };
                let (a, b) = (perm[u as usize], perm[v as usize]);
                if a < b {
                    mask |= 1 << edge_index(a, b);
                }
            }
        }
        Self { mask }
    }

    /// Every vertex triple whose edges form a directed cycle, each once
    /// with its cyclic orientation, sorted by canonical form.
    pub fn directed_three_cycles(&self) -> Vec<OrientedTriangle> {
        let mut out = Vec::new();
        for a in 0..7u8 {
            for b in (a + 1)..7 {
                for c in (b + 1)..7 {
                    let ab = self.points_to(a, b);
                    let bc = self.points_to(b, c);
                    let ac = self.points_to(a, c);
                    let triple = if ab && bc && !ac {
                        Some([a, b, c])
                    } else if ac && !bc && !ab {
                        Some([a, c, b])
                    } else {
                        None
                    };
                    if let Some(t) = triple {
                        out.push(CyclicTriple::new(t).expect("distinct vertices"));
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// The failed condition and a witness, in check order: edge double cover,
/// then connectivity, then vertex links.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Defect {
    /// A covered edge lies in a number of triangles other than two.
    EdgeCoverage { edge: (u8, u8), count: u32 },
    /// A vertex is unreachable from vertex 0 along covered edges.
    NotConnected { vertex: u8 },
    /// The triangles around a vertex do not close into one cycle.
    BrokenLink { vertex: u8, reason: String },
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Defect::EdgeCoverage { edge, count } => {
                write!(f, "edge ({}, {}) covered {} times", edge.0, edge.1, count)
            }
            Defect::NotConnected { vertex } => {
                write!(f, "vertex {vertex} not connected to vertex 0 by covered edges")
            }
            Defect::BrokenLink { vertex, reason } => {
                write!(f, "link of vertex {vertex} is not a single cycle: {reason}")
            }
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CheckFailure {
    #[error("malformed input: {0}")]
    Input(#[from] SurfaceError),
    #[error("not a triangulation: {0}")]
    Defect(Defect),
}

/// A verified combinatorial closed surface: every covered edge lies in
/// exactly two triangles, covered edges connect all vertices, and every
/// vertex link is one closed cycle. Built only through
/// [`check_triangulation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    vertex_count: usize,
    /// Sorted list of sorted triples.
    triangles: Vec<[u8; 3]>,
    /// Covered edge -> the two incident triangle indices, sorted by edge.
    edges: Vec<((u8, u8), [usize; 2])>,
}

/// The two classes of a bipartite dual, black then white.
pub type ColorClasses = (Vec<[u8; 3]>, Vec<[u8; 3]>);

/// Validates a triangle set as a closed-surface triangulation.
///
/// Returns the malformed-input error for bad triples, a [`Defect`] naming
/// the first violated surface condition otherwise, and the verified
/// [`Triangulation`] on success. Accepts any vertex count up to 14 so test
/// fixtures smaller than K7 can be checked too.
pub fn check_triangulation(
    triangles: &[[u8; 3]],
    vertex_count: usize,
) -> Result<Triangulation, CheckFailure> {
    if vertex_count == 0 || vertex_count > 14 {
        return Err(SurfaceError::BadVertexCount(vertex_count).into());
    }
    let mut sorted: Vec<[u8; 3]> = Vec::with_capacity(triangles.len());
    for &t in triangles {
        if t.iter().any(|&v| v as usize >= vertex_count) {
            return Err(SurfaceError::VertexOutOfRange(t).into());
        }
        let mut s = t;
        s.sort_unstable();
        if s[0] == s[1] || s[1] == s[2] {
            return Err(SurfaceError::RepeatedVertex(t).into());
        }
        sorted.push(s);
    }
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(SurfaceError::DuplicateTriangle(w[0]).into());
    }

    // Condition: every covered edge in exactly two triangles.
    let mut cover: BTreeMap<(u8, u8), Vec<usize>> = BTreeMap::new();
    for (idx, t) in sorted.iter().enumerate() {
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            cover.entry((a, b)).or_default().push(idx);
        }
    }
    for (&edge, incident) in &cover {
        if incident.len() != 2 {
            return Err(CheckFailure::Defect(Defect::EdgeCoverage {
                edge,
                count: incident.len() as u32,
            }));
        }
    }

    // Condition: covered edges connect and span all vertices.
    let mut adjacent = vec![Vec::new(); vertex_count];
    for &(a, b) in cover.keys() {
        adjacent[a as usize].push(b);
        adjacent[b as usize].push(a);
    }
    let mut seen = vec![false; vertex_count];
    let mut queue = vec![0u8];
    seen[0] = true;
    while let Some(v) = queue.pop() {
        for &u in &adjacent[v as usize] {
            if !seen[u as usize] {
                seen[u as usize] = true;
                queue.push(u);
            }
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(CheckFailure::Defect(Defect::NotConnected { vertex: v as u8 }));
    }

    // Condition: the link of each vertex is a single closed cycle. Each
    // triangle {v, x, y} contributes the link edge (x, y) at v.
    for v in 0..vertex_count as u8 {
        let mut link: BTreeMap<u8, Vec<u8>> = BTreeMap::new();
        let mut incident = 0usize;
        for t in &sorted {
            if !t.contains(&v) {
                continue;
            }
            incident += 1;
            let rest: Vec<u8> = t.iter().copied().filter(|&u| u != v).collect();
            link.entry(rest[0]).or_default().push(rest[1]);
            link.entry(rest[1]).or_default().push(rest[0]);
        }
        if incident == 0 {
            return Err(CheckFailure::Defect(Defect::BrokenLink {
                vertex: v,
                reason: "no incident triangles".into(),
            }));
        }
        if let Some((&u, partners)) = link.iter().find(|(_, p)| p.len() != 2) {
            return Err(CheckFailure::Defect(Defect::BrokenLink {
                vertex: v,
                reason: format!("neighbor {u} has link degree {}", partners.len()),
            }));
        }
        // Degree two everywhere: a union of disjoint cycles. Walk one and
        // require it to use every link vertex.
        let start = *link.keys().next().expect("nonempty link");
        let mut prev = start;
        let mut cur = link[&start][0];
        let mut steps = 1usize;
        while cur != start {
            let next = if link[&cur][0] == prev { link[&cur][1] } else { link[&cur][0] };
            prev = cur;
            cur = next;
            steps += 1;
        }
        if steps != link.len() {
            return Err(CheckFailure::Defect(Defect::BrokenLink {
                vertex: v,
                reason: format!("splits into more than one cycle ({steps} of {})", link.len()),
            }));
        }
    }

    let edges = cover
        .into_iter()
        .map(|(e, incident)| (e, [incident[0], incident[1]]))
        .collect();
    Ok(Triangulation {
        vertex_count,
        triangles: sorted,
        edges,
    })
}

impl Triangulation {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Sorted triples in sorted order.
    pub fn triangles(&self) -> &[[u8; 3]] {
        &self.triangles
    }

    /// Number of covered edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Covered edges, each with the two triangle indices flanking it.
    pub fn edge_incidence(&self) -> &[((u8, u8), [usize; 2])] {
        &self.edges
    }

    /// V - E + F from the actual counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64 + self.triangles.len() as i64
    }

    /// The link of `v` as its neighbor cycle, starting from the smallest
    /// neighbor and stepping first toward its smaller partner.
    pub fn link_cycle(&self, v: u8) -> Vec<u8> {
        let mut link: BTreeMap<u8, Vec<u8>> = BTreeMap::new();
        for t in &self.triangles {
            if t.contains(&v) {
                let rest: Vec<u8> = t.iter().copied().filter(|&u| u != v).collect();
                link.entry(rest[0]).or_default().push(rest[1]);
                link.entry(rest[1]).or_default().push(rest[0]);
            }
        }
        let start = *link.keys().next().expect("validated links are nonempty");
        let mut cycle = vec![start];
        let mut prev = start;
        let mut cur = *link[&start].iter().min().expect("degree two");
        while cur != start {
            cycle.push(cur);
            let next = if link[&cur][0] == prev { link[&cur][1] } else { link[&cur][0] };
            prev = cur;
            cur = next;
        }
        cycle
    }

    /// Triangle indices adjacent to each triangle across shared edges.
    fn dual_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.triangles.len()];
        for &(_, [s, t]) in &self.edges {
            adj[s].push(t);
            adj[t].push(s);
        }
        adj
    }

    /// Two-colors the dual adjacency. `classes[i]` is the color of
    /// triangle i; color 0 is the class of the smallest triangle.
    fn dual_classes(&self) -> Option<Vec<u8>> {
        let adj = self.dual_adjacency();
        let n = self.triangles.len();
        let mut color = vec![u8::MAX; n];
        for root in 0..n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            let mut queue = vec![root];
            while let Some(s) = queue.pop() {
                for &t in &adj[s] {
                    if color[t] == u8::MAX {
                        color[t] = 1 - color[s];
                        queue.push(t);
                    } else if color[t] == color[s] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    /// Splits the triangles into the two dual color classes, or returns
    /// None when the dual has an odd cycle. The class containing the
    /// lexicographically smallest triangle comes first ("black").
    pub fn dual_bipartition(&self) -> Option<ColorClasses> {
        let color = self.dual_classes()?;
        let black = self
            .triangles
            .iter()
            .zip(&color)
            .filter(|(_, &c)| c == 0)
            .map(|(t, _)| *t)
            .collect();
        let white = self
            .triangles
            .iter()
            .zip(&color)
            .filter(|(_, &c)| c == 1)
            .map(|(t, _)| *t)
            .collect();
        Some((black, white))
    }

    /// True if the triangles can be cyclically oriented so that adjacent
    /// triangles induce a shared edge in opposite directions.
    pub fn is_orientable(&self) -> bool {
        // flip = false orients sorted [a,b,c] as a->b->c->a. The induced
        // direction on each of its edges, expressed as "low vertex to
        // high vertex", is then: (a,b) low->high, (b,c) low->high, (a,c)
        // high->low.
        let induced_low_to_high = |tri: usize, edge: (u8, u8), flip: bool| -> bool {
            let t = self.triangles[tri];
            let natural = edge != (t[0], t[2]);
            natural != flip
        };
        let mut flip = vec![None; self.triangles.len()];
        for root in 0..self.triangles.len() {
            if flip[root].is_some() {
                continue;
            }
            flip[root] = Some(false);
            let mut queue = vec![root];
            while let Some(s) = queue.pop() {
                for &(edge, [x, y]) in self.edges.iter().filter(|&&(_, inc)| inc.contains(&s)) {
                    let t = if x == s { y } else { x };
                    let need = !induced_low_to_high(s, edge, flip[s].unwrap());
                    match flip[t] {
                        None => {
                            // Set t's flip so its induced direction is `need`.
                            let natural = induced_low_to_high(t, edge, false);
                            flip[t] = Some(natural != need);
                            queue.push(t);
                        }
                        Some(f) => {
                            if induced_low_to_high(t, edge, f) != need {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// Sorted list of sorted triples as JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.triangles).expect("triangle list serializes")
    }
}

/// The headline predicate: the directed 3-cycles of `t` triangulate a
/// closed surface.
pub fn oriented_triangulation_test(t: &Tournament) -> bool {
    let triples: Vec<[u8; 3]> = t
        .directed_three_cycles()
        .iter()
        .map(|c| c.sorted())
        .collect();
    check_triangulation(&triples, 7).is_ok()
}

/// The triangulation formed by the directed 3-cycles, if any.
pub fn cycle_triangulation(t: &Tournament) -> Result<Triangulation, CheckFailure> {
    let triples: Vec<[u8; 3]> = t
        .directed_three_cycles()
        .iter()
        .map(|c| c.sorted())
        .collect();
    check_triangulation(&triples, 7)
}

/// Brute-force search over all 5040 vertex permutations for one carrying
/// t1's edge directions onto t2's.
pub fn tournaments_isomorphic(t1: &Tournament, t2: &Tournament) -> Option<[u8; 7]> {
    'perm: for perm in permutations7() {
        for i in 0..7u8 {
            for j in (i + 1)..7 {
                let mapped = t2.points_to(perm[i as usize], perm[j as usize]);
                if mapped != t1.points_to(i, j) {
                    continue 'perm;
                }
            }
        }
        return Some(*perm);
    }
    None
}

/// Minimum mask over all vertex relabelings; equal exactly for isomorphic
/// tournaments.
pub fn canonical_mask(t: &Tournament) -> u32 {
    permutations7()
        .iter()
        .map(|perm| t.relabel(perm).mask())
        .min()
        .expect("permutation table is nonempty")
}

/// The dual color class containing the lexicographically smallest directed
/// triangle, each triangle carrying its cycle orientation.
pub fn black_triangles(t: &Tournament) -> Result<Vec<OrientedTriangle>, SurfaceError> {
    let (black, _) = directed_classes(t)?;
    Ok(black)
}

/// The other dual color class.
pub fn white_triangles(t: &Tournament) -> Result<Vec<OrientedTriangle>, SurfaceError> {
    let (_, white) = directed_classes(t)?;
    Ok(white)
}

fn directed_classes(
    t: &Tournament,
) -> Result<(Vec<OrientedTriangle>, Vec<OrientedTriangle>), SurfaceError> {
    let cycles = t.directed_three_cycles();
    let triples: Vec<[u8; 3]> = cycles.iter().map(|c| c.sorted()).collect();
    let tri = check_triangulation(&triples, 7).map_err(|_| SurfaceError::NotTriangulating)?;
    let color = tri
        .dual_classes()
        .ok_or(SurfaceError::NotTriangulating)?;
    // cycles is sorted by canonical directed form, so the first cycle is
    // the lexicographically smallest directed triangle: its class is black.
    let index_of = |c: &CyclicTriple| {
        tri.triangles
            .binary_search(&c.sorted())
            .expect("cycle triangles are the triangulation")
    };
    let anchor = color[index_of(&cycles[0])];
    let (mut black, mut white) = (Vec::new(), Vec::new());
    for c in &cycles {
        if color[index_of(c)] == anchor {
            black.push(*c);
        } else {
            white.push(*c);
        }
    }
    Ok((black, white))
}

/// Reads the oriented plane off a triangulating orientation: the black
/// triangles, with their cycle orientations, as cyclic lines.
pub fn fano_from_orientation(t: &Tournament) -> Result<OrientedFanoPlane, SurfaceError> {
    let black = black_triangles(t)?;
    Ok(OrientedFanoPlane::new(black)?)
}

fn all_triples() -> Vec<[u8; 3]> {
    let mut v = Vec::with_capacity(35);
    for a in 0..7u8 {
        for b in (a + 1)..7 {
            for c in (b + 1)..7 {
                v.push([a, b, c]);
            }
        }
    }
    v
}

/// Every set of 14 vertex-triples covering each of the 21 edges exactly
/// twice and passing the vertex-link condition; these are all labeled
/// triangulations of a closed surface with full K7 skeleton.
pub fn enumerate_triangulations() -> Vec<Triangulation> {
    let triples = all_triples();
    let triple_edges: Vec<[usize; 3]> = triples
        .iter()
        .map(|t| {
            [
                edge_index(t[0], t[1]),
                edge_index(t[0], t[2]),
                edge_index(t[1], t[2]),
            ]
        })
        .collect();
    // suffix[k][e]: how many triples with index >= k cover edge e.
    let mut suffix = vec![[0u8; EDGE_COUNT]; triples.len() + 1];
    for k in (0..triples.len()).rev() {
        suffix[k] = suffix[k + 1];
        for &e in &triple_edges[k] {
            suffix[k][e] += 1;
        }
    }

    fn recurse(
        k: usize,
        count: &mut [u8; EDGE_COUNT],
        chosen: &mut Vec<usize>,
        triples: &[[u8; 3]],
        triple_edges: &[[usize; 3]],
        suffix: &[[u8; EDGE_COUNT]],
        out: &mut Vec<Triangulation>,
    ) {
        if chosen.len() > 14 || chosen.len() + (triples.len() - k) < 14 {
            return;
        }
        if (0..EDGE_COUNT).any(|e| count[e] + suffix[k][e] < 2) {
            return;
        }
        if k == triples.len() {
            // Pruning guarantees every edge count is exactly 2 here.
            debug_assert!(count.iter().all(|&c| c == 2));
            let family: Vec<[u8; 3]> = chosen.iter().map(|&i| triples[i]).collect();
            if let Ok(tri) = check_triangulation(&family, 7) {
                out.push(tri);
            }
            return;
        }
        if triple_edges[k].iter().all(|&e| count[e] < 2) {
            for &e in &triple_edges[k] {
                count[e] += 1;
            }
            chosen.push(k);
            recurse(k + 1, count, chosen, triples, triple_edges, suffix, out);
            chosen.pop();
            for &e in &triple_edges[k] {
                count[e] -= 1;
            }
        }
        recurse(k + 1, count, chosen, triples, triple_edges, suffix, out);
    }

    let mut out = Vec::new();
    let mut count = [0u8; EDGE_COUNT];
    let mut chosen = Vec::new();
    recurse(
        0,
        &mut count,
        &mut chosen,
        &triples,
        &triple_edges,
        &suffix,
        &mut out,
    );
    out
}

/// Brute force over vertex permutations carrying one triangle set onto the
/// other.
pub fn triangle_sets_isomorphic(a: &[[u8; 3]], b: &[[u8; 3]]) -> Option<[u8; 7]> {
    let mut target: Vec<[u8; 3]> = b.to_vec();
    target.sort_unstable();
    for perm in permutations7() {
        let mut mapped: Vec<[u8; 3]> = a
            .iter()
            .map(|t| {
                let mut m = [
                    perm[t[0] as usize],
                    perm[t[1] as usize],
                    perm[t[2] as usize],
                ];
                m.sort_unstable();
                m
            })
            .collect();
        mapped.sort_unstable();
        if mapped == target {
            return Some(*perm);
        }
    }
    None
}

/// Minimum relabeled form of a triangle set over all vertex permutations;
/// equal exactly for isomorphic sets.
pub fn canonical_triangle_set(triangles: &[[u8; 3]]) -> Vec<[u8; 3]> {
    let mut best: Option<Vec<[u8; 3]>> = None;
    for perm in permutations7() {
        let mut mapped: Vec<[u8; 3]> = triangles
            .iter()
            .map(|t| {
                let mut m = [
                    perm[t[0] as usize],
                    perm[t[1] as usize],
                    perm[t[2] as usize],
                ];
                m.sort_unstable();
                m
            })
            .collect();
        mapped.sort_unstable();
        if best.as_ref().is_none_or(|b| mapped < *b) {
            best = Some(mapped);
        }
    }
    best.expect("permutation table is nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    use crate::fano::FanoPlane;
    use crate::octonion::seeded_rng;

    pub(crate) fn paley() -> Tournament {
        Tournament::from_beats(|a, b| matches!((7 + b - a) % 7, 1 | 2 | 4))
    }

    // Octahedron: antipodal pairs {0,1}, {2,3}, {4,5}; faces pick one
    // vertex from each pair.
    fn octahedron() -> Vec<[u8; 3]> {
        let mut faces = Vec::new();
        for a in 0..2u8 {
            for b in 2..4u8 {
                for c in 4..6u8 {
                    faces.push([a, b, c]);
                }
            }
        }
        faces
    }

    // Six-vertex projective plane (hemi-icosahedron): antipodal
    // identification of the icosahedron. Ten faces, fifteen edges.
    fn projective_plane_6() -> Vec<[u8; 3]> {
        vec![
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ]
    }

    #[test]
    fn edge_indexing_round_trips() {
        let mut expect = 0usize;
        for i in 0..7u8 {
            for j in (i + 1)..7 {
                assert_eq!(edge_index(i, j), expect);
                assert_eq!(edge_endpoints(expect), (i, j));
                expect += 1;
            }
        }
        assert_eq!(expect, EDGE_COUNT);
    }

    #[test]
    fn mask_construction_bounds() {
        assert!(Tournament::new(MASK_SPACE - 1).is_ok());
        assert_eq!(
            Tournament::new(MASK_SPACE),
            Err(SurfaceError::MaskTooWide(MASK_SPACE))
        );
    }

    #[test]
    fn paley_has_fourteen_cycles_including_124() {
        let cycles = paley().directed_three_cycles();
        assert_eq!(cycles.len(), 14);
        assert!(cycles.contains(&CyclicTriple::new([1, 2, 4]).unwrap()));
        assert!(cycles.contains(&CyclicTriple::new([0, 1, 3]).unwrap()));
        // Orientations come from the tournament, not free choice.
        assert!(!cycles.contains(&CyclicTriple::new([1, 4, 2]).unwrap()));
    }

    #[test]
    fn transitive_tournament_has_no_cycles() {
        assert!(Tournament::transitive().directed_three_cycles().is_empty());
        assert!(!oriented_triangulation_test(&Tournament::transitive()));
    }

    #[test]
    fn cycle_count_identity_on_random_masks() {
        // Cycles = C(7,3) - sum over vertices of C(outdeg, 2).
        let mut rng = seeded_rng(7);
        for _ in 0..10_000 {
            let t = Tournament::new(rng.gen_range(0..MASK_SPACE)).unwrap();
            let by_formula = 35i64
                - (0..7)
                    .map(|v| {
                        let d = t.out_degree(v) as i64;
                        d * (d - 1) / 2
                    })
                    .sum::<i64>();
            assert_eq!(t.directed_three_cycles().len() as i64, by_formula);
        }
    }

    #[test]
    fn paley_cycles_triangulate_a_torus() {
        let tri = cycle_triangulation(&paley()).unwrap();
        assert_eq!(tri.triangles().len(), 14);
        assert_eq!(tri.edge_count(), 21);
        assert_eq!(tri.euler_characteristic(), 0);
        assert!(tri.is_orientable());
        for v in 0..7 {
            assert_eq!(tri.link_cycle(v).len(), 6);
        }
    }

    #[test]
    fn octahedron_is_a_sphere() {
        let tri = check_triangulation(&octahedron(), 6).unwrap();
        assert_eq!(tri.euler_characteristic(), 2);
        assert!(tri.is_orientable());
        let (black, white) = tri.dual_bipartition().unwrap();
        assert_eq!((black.len(), white.len()), (4, 4));
    }

    #[test]
    fn projective_plane_is_unorientable_with_odd_dual_cycles() {
        let tri = check_triangulation(&projective_plane_6(), 6).unwrap();
        assert_eq!(tri.euler_characteristic(), 1);
        assert!(!tri.is_orientable());
        // Its dual is the Petersen graph, which has odd cycles.
        assert!(tri.dual_bipartition().is_none());
    }

    #[test]
    fn removing_a_triangle_breaks_the_double_cover() {
        let mut triples: Vec<[u8; 3]> = paley()
            .directed_three_cycles()
            .iter()
            .map(|c| c.sorted())
            .collect();
        triples.pop();
        match check_triangulation(&triples, 7) {
            Err(CheckFailure::Defect(Defect::EdgeCoverage { count: 1, .. })) => {}
            other => panic!("expected a single-covered edge, got {other:?}"),
        }
    }

    #[test]
    fn malformed_triangle_inputs() {
        assert!(matches!(
            check_triangulation(&[[0, 1, 9]], 7),
            Err(CheckFailure::Input(SurfaceError::VertexOutOfRange(_)))
        ));
        assert!(matches!(
            check_triangulation(&[[0, 1, 1]], 7),
            Err(CheckFailure::Input(SurfaceError::RepeatedVertex(_)))
        ));
        assert!(matches!(
            check_triangulation(&[[0, 1, 2], [2, 1, 0], [3, 4, 5]], 7),
            Err(CheckFailure::Input(SurfaceError::DuplicateTriangle(_)))
        ));
        assert!(matches!(
            check_triangulation(&octahedron(), 15),
            Err(CheckFailure::Input(SurfaceError::BadVertexCount(15)))
        ));
    }

    #[test]
    fn disconnected_cover_is_a_defect() {
        // Two octahedra sharing no vertices, on 12 vertices.
        let mut faces = octahedron();
        faces.extend(octahedron().iter().map(|t| t.map(|v| v + 6)));
        match check_triangulation(&faces, 12) {
            Err(CheckFailure::Defect(Defect::NotConnected { vertex })) => {
                assert!(vertex >= 6);
            }
            other => panic!("expected a connectivity defect, got {other:?}"),
        }
    }

    #[test]
    fn pinched_link_is_a_defect() {
        // Two octahedra glued at one vertex: vertex 0 is shared, so its
        // link is two disjoint cycles.
        let mut faces = octahedron();
        faces.extend(octahedron().iter().map(|t| t.map(|v| if v == 0 { 0 } else { v + 5 })));
        match check_triangulation(&faces, 11) {
            Err(CheckFailure::Defect(Defect::BrokenLink { vertex: 0, .. })) => {}
            other => panic!("expected a link defect at the shared vertex, got {other:?}"),
        }
    }

    #[test]
    fn flipping_one_paley_edge_breaks_the_predicate() {
        let t = Tournament::new(paley().mask() ^ 1).unwrap();
        assert!(!oriented_triangulation_test(&t));
    }

    #[test]
    fn paley_satisfies_the_predicate() {
        assert!(oriented_triangulation_test(&paley()));
    }

    #[test]
    fn paley_black_class_is_the_residue_family() {
        let black = black_triangles(&paley()).unwrap();
        assert_eq!(black.len(), 7);
        let mut expected: Vec<CyclicTriple> = (0u8..7)
            .map(|n| CyclicTriple::new([(n + 1) % 7, (n + 2) % 7, (n + 4) % 7]).unwrap())
            .collect();
        expected.sort_unstable();
        assert_eq!(black, expected);
        // Every vertex lies in exactly three black triangles.
        for v in 0..7 {
            assert_eq!(black.iter().filter(|t| t.contains(v)).count(), 3);
        }
        let white = white_triangles(&paley()).unwrap();
        assert_eq!(white.len(), 7);
        assert!(white.iter().all(|t| !black.contains(t)));
    }

    #[test]
    fn black_triangles_requires_the_predicate() {
        assert_eq!(
            black_triangles(&Tournament::transitive()),
            Err(SurfaceError::NotTriangulating)
        );
    }

    #[test]
    fn fano_from_paley_is_the_standard_plane() {
        let plane = fano_from_orientation(&paley()).unwrap();
        assert_eq!(plane, OrientedFanoPlane::standard());
    }

    #[test]
    fn white_class_also_forms_a_plane() {
        let white = white_triangles(&paley()).unwrap();
        let lines: Vec<Vec<u8>> = white.iter().map(|t| t.sorted().to_vec()).collect();
        let report = crate::fano::verify_projective_plane(&lines).unwrap();
        assert!(report.pass(), "{}", report.summary());
    }

    #[test]
    fn paley_isomorphisms() {
        let p = paley();
        assert_eq!(tournaments_isomorphic(&p, &p), Some([0, 1, 2, 3, 4, 5, 6]));

        let shifted = p.relabel(&[1, 2, 3, 4, 5, 6, 0]);
        let perm = tournaments_isomorphic(&p, &shifted).expect("shift relabeling");
        assert_eq!(shifted.mask(), p.relabel(&perm).mask());

        // Negation mod 7 maps square differences onto non-squares, so the
        // reversal is isomorphic to the original.
        let perm = tournaments_isomorphic(&p, &p.reverse()).expect("negation relabeling");
        assert_eq!(p.reverse().mask(), p.relabel(&perm).mask());
    }

    #[test]
    fn relabel_composes_and_preserves_cycles() {
        let p = paley();
        let perm = [3u8, 0, 6, 2, 5, 1, 4];
        let r = p.relabel(&perm);
        assert_eq!(r.directed_three_cycles().len(), 14);
        assert_eq!(canonical_mask(&p), canonical_mask(&r));
        for i in 0..7u8 {
            for j in 0..7u8 {
                if i != j {
                    assert_eq!(
                        r.points_to(perm[i as usize], perm[j as usize]),
                        p.points_to(i, j)
                    );
                }
            }
        }
    }

    #[test]
    fn canonical_mask_separates_nonisomorphic() {
        let p = paley();
        assert_ne!(canonical_mask(&p), canonical_mask(&Tournament::transitive()));
    }

    #[test]
    fn enumeration_finds_the_paley_triangle_set() {
        let all = enumerate_triangulations();
        assert_eq!(all.len(), crate::constants::TRIANGULATION_COUNT);
        let paley_triples: Vec<[u8; 3]> = paley()
            .directed_three_cycles()
            .iter()
            .map(|c| c.sorted())
            .collect();
        let mut sorted = paley_triples.clone();
        sorted.sort_unstable();
        assert!(all.iter().any(|t| t.triangles() == sorted.as_slice()));
        for t in &all {
            assert_eq!(t.triangles().len(), 14);
            assert_eq!(t.euler_characteristic(), 0);
            assert!(t.is_orientable());
        }
    }

    #[test]
    fn enumerated_triangulations_are_all_isomorphic() {
        let all = enumerate_triangulations();
        let canon = canonical_triangle_set(all[0].triangles());
        for t in &all[1..] {
            assert_eq!(canonical_triangle_set(t.triangles()), canon);
        }
        // Spot check with the explicit permutation search.
        assert!(triangle_sets_isomorphic(all[0].triangles(), all[1].triangles()).is_some());
    }

    #[test]
    fn complementary_residue_plane_from_white_class() {
        // The white class carries the complementary line family.
        let white = white_triangles(&paley()).unwrap();
        let expected: std::collections::BTreeSet<[u8; 3]> = (0u8..7)
            .map(|n| {
                let mut l = [(n + 3) % 7, (n + 5) % 7, (n + 6) % 7];
                l.sort_unstable();
                l
            })
            .collect();
        let got: std::collections::BTreeSet<[u8; 3]> =
            white.iter().map(|t| t.sorted()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn fano_plane_from_black_passes_axioms() {
        let plane = fano_from_orientation(&paley()).unwrap().underlying();
        assert_eq!(plane, FanoPlane::standard());
    }
}
