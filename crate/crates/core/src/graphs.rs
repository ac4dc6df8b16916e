//! Small undirected graphs: duals of triangulations, incidence graphs of
//! planes, and the brute-force checks that identify the Heawood graph.
//!
//! Everything here is capped at 16 vertices, so adjacency fits in one
//! `u16` row per vertex and every algorithm can afford to be the obvious
//! one.

use serde::Serialize;
use thiserror::Error;

use crate::fano::FanoPlane;
use crate::surface::Triangulation;

/// Hard cap on vertices; keeps rows in `u16` and searches brute-force.
pub const MAX_VERTICES: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices, cap is {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("loop at vertex {0} rejected")]
    Loop(usize),
}

/// Undirected simple graph on at most 16 vertices with a text tag per
/// vertex. Adjacency is a symmetric bit relation with no loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    rows: Vec<u16>,
    tags: Vec<String>,
}

#[derive(Serialize)]
struct GraphJson<'a> {
    vertex_count: usize,
    tags: &'a [String],
    adjacency: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new(vertex_count: usize) -> Result<Self, GraphError> {
        if vertex_count > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(vertex_count));
        }
        Ok(Self {
            rows: vec![0; vertex_count],
            tags: vec![String::new(); vertex_count],
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.rows.len();
        if u >= n {
            return Err(GraphError::VertexOutOfRange(u));
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange(v));
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.rows.len() && v < self.rows.len() && self.rows[u] >> v & 1 == 1
    }

    /// Neighbor set of `v` as a bit row.
    pub fn neighbors(&self, v: usize) -> u16 {
        self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn tag(&self, v: usize) -> &str {
        &self.tags[v]
    }

    pub fn set_tag(&mut self, v: usize, tag: impl Into<String>) {
        self.tags[v] = tag.into();
    }

    /// Ascending degree list.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.rows.len()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Two-coloring if one exists. Each side is sorted; the side holding
    /// vertex 0 comes first. Isolated vertices land on the first side.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.rows.len();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for root in 0..n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = vec![root];
            while let Some(u) = queue.pop() {
                let cu = color[u].unwrap();
                for v in 0..n {
                    if self.rows[u] >> v & 1 == 0 {
                        continue;
                    }
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push(v);
                        }
                        Some(cv) => {
                            if cv == cu {
                                return None;
                            }
                        }
                    }
                }
            }
        }
        let side = |c: bool| -> Vec<usize> {
            (0..n).filter(|&v| color[v] == Some(c)).collect()
        };
        Some((side(false), side(true)))
    }

    /// Length of the shortest cycle, 0 for a forest. BFS from every
    /// vertex; an edge closing two BFS branches bounds the girth by
    /// dist(u) + dist(v) + 1.
    pub fn girth(&self) -> usize {
        let n = self.rows.len();
        let mut best = usize::MAX;
        for root in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for v in 0..n {
                    if self.rows[u] >> v & 1 == 0 {
                        continue;
                    }
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v && parent[v] != u {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            0
        } else {
            best
        }
    }

    /// Stable JSON: vertex count, tags, sorted adjacency lists.
    pub fn to_json(&self) -> String {
        let adjacency = (0..self.rows.len())
            .map(|u| (0..self.rows.len()).filter(|&v| self.has_edge(u, v)).collect())
            .collect();
        serde_json::to_string(&GraphJson {
            vertex_count: self.rows.len(),
            tags: &self.tags,
            adjacency,
        })
        .expect("graph serializes")
    }

    /// Graphviz source with tags as labels; every edge listed once.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph g {\n");
        for v in 0..self.rows.len() {
            out.push_str(&format!("  {} [label=\"{}\"];\n", v, self.tags[v]));
        }
        for u in 0..self.rows.len() {
            for v in (u + 1)..self.rows.len() {
                if self.has_edge(u, v) {
                    out.push_str(&format!("  {} -- {};\n", u, v));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

fn triple_tag(prefix: &str, t: [u8; 3]) -> String {
    format!("{prefix} {{{},{},{}}}", t[0], t[1], t[2])
}

/// Dual graph of a triangulation: one vertex per triangle, edges where
/// two triangles share an edge of the surface.
pub fn dual_graph(tri: &Triangulation) -> SimpleGraph {
    let mut g = SimpleGraph::new(tri.triangles().len()).expect("at most 16 triangles here");
    for (i, &t) in tri.triangles().iter().enumerate() {
        g.set_tag(i, triple_tag("triangle", t));
    }
    for &(_, [x, y]) in tri.edge_incidence() {
        g.add_edge(x, y).expect("distinct in-range triangles");
    }
    g
}

/// Incidence (Levi) graph of a plane: point vertices 0..7, then one
/// vertex per line, joined by membership.
pub fn incidence_graph(plane: &FanoPlane) -> SimpleGraph {
    let lines = plane.lines();
    let mut g = SimpleGraph::new(7 + lines.len()).expect("14 vertices");
    for p in 0..7usize {
        g.set_tag(p, format!("point {p}"));
    }
    for (i, &line) in lines.iter().enumerate() {
        g.set_tag(7 + i, triple_tag("line", line));
        for &p in &line {
            g.add_edge(p as usize, 7 + i).expect("in range");
        }
    }
    g
}

/// Brute-force isomorphism: a vertex map from `a` onto `b` preserving
/// adjacency both ways, or None. Degree-filtered backtracking; any
/// returned map is revalidated edge by edge before being handed out.
pub fn graphs_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> Option<Vec<usize>> {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.degree_sequence() != b.degree_sequence() {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used: u16 = 0;
    if !extend(a, b, 0, &mut map, &mut used) {
        return None;
    }
    for u in 0..n {
        for v in 0..n {
            assert_eq!(a.has_edge(u, v), b.has_edge(map[u], map[v]));
        }
    }
    Some(map)
}

fn extend(a: &SimpleGraph, b: &SimpleGraph, next: usize, map: &mut Vec<usize>, used: &mut u16) -> bool {
    let n = a.vertex_count();
    if next == n {
        return true;
    }
    for cand in 0..n {
        if *used >> cand & 1 == 1 || a.degree(next) != b.degree(cand) {
            continue;
        }
        let consistent = (0..next).all(|prev| a.has_edge(next, prev) == b.has_edge(cand, map[prev]));
        if !consistent {
            continue;
        }
        map[next] = cand;
        *used |= 1 << cand;
        if extend(a, b, next + 1, map, used) {
            return true;
        }
        *used &= !(1 << cand);
        map[next] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eisenstein::paley_tournament;
    use crate::fano::standard_fano;
    use crate::surface::{check_triangulation, cycle_triangulation};

    fn octahedron() -> Triangulation {
        let faces = [
            [0, 2, 4],
            [0, 2, 5],
            [0, 3, 4],
            [0, 3, 5],
            [1, 2, 4],
            [1, 2, 5],
            [1, 3, 4],
            [1, 3, 5],
        ];
        check_triangulation(&faces, 6).unwrap()
    }

    fn heawood() -> SimpleGraph {
        dual_graph(&cycle_triangulation(&paley_tournament()).unwrap())
    }

    fn cube_graph() -> SimpleGraph {
        let mut g = SimpleGraph::new(8).unwrap();
        for u in 0..8usize {
            for bit in 0..3 {
                let v = u ^ (1 << bit);
                if u < v {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    #[test]
    fn caps_and_input_errors() {
        assert_eq!(SimpleGraph::new(17), Err(GraphError::TooManyVertices(17)));
        let mut g = SimpleGraph::new(3).unwrap();
        assert_eq!(g.add_edge(0, 3), Err(GraphError::VertexOutOfRange(3)));
        assert_eq!(g.add_edge(1, 1), Err(GraphError::Loop(1)));
        g.add_edge(0, 1).unwrap();
        assert!(g.has_edge(1, 0));
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn octahedron_dual_is_the_cube_graph() {
        let d = dual_graph(&octahedron());
        assert_eq!(d.vertex_count(), 8);
        assert_eq!(d.degree_sequence(), vec![3; 8]);
        assert_eq!(d.girth(), 4);
        let map = graphs_isomorphic(&d, &cube_graph()).expect("cube");
        assert_eq!(map.len(), 8);
        assert_eq!(d.tag(0), "triangle {0,2,4}");
    }

    #[test]
    fn paley_dual_is_three_regular_bipartite_girth_six() {
        let h = heawood();
        assert_eq!(h.vertex_count(), 14);
        assert_eq!(h.edge_count(), 21);
        assert_eq!(h.degree_sequence(), vec![3; 14]);
        let (s0, s1) = h.bipartition().expect("bipartite");
        assert_eq!((s0.len(), s1.len()), (7, 7));
        assert_eq!(h.girth(), 6);
    }

    #[test]
    fn heawood_has_no_four_cycles_by_common_neighbors() {
        // Independent of girth(): a C4 needs two vertices with two
        // common neighbors.
        let h = heawood();
        for u in 0..14 {
            for v in (u + 1)..14 {
                let common = (h.neighbors(u) & h.neighbors(v)).count_ones();
                assert!(common <= 1, "{u} {v}");
            }
        }
    }

    #[test]
    fn graph_bipartition_matches_the_dual_classes() {
        let tri = cycle_triangulation(&paley_tournament()).unwrap();
        let h = dual_graph(&tri);
        let (s0, s1) = h.bipartition().unwrap();
        let (black, white) = tri.dual_bipartition().unwrap();
        let indices = |side: &[[u8; 3]]| -> Vec<usize> {
            let mut v: Vec<usize> = side
                .iter()
                .map(|t| tri.triangles().iter().position(|x| x == t).unwrap())
                .collect();
            v.sort_unstable();
            v
        };
        let (ib, iw) = (indices(&black), indices(&white));
        assert!((s0 == ib && s1 == iw) || (s0 == iw && s1 == ib));
    }

    #[test]
    fn dual_is_the_incidence_graph_side_consistently() {
        let tri = cycle_triangulation(&paley_tournament()).unwrap();
        let h = dual_graph(&tri);
        let levi = incidence_graph(&standard_fano().underlying());
        let map = graphs_isomorphic(&h, &levi).expect("Heawood");
        let to_points: Vec<usize> = (0..14)
            .filter(|&v| levi.tag(map[v]).starts_with("point"))
            .collect();
        let (s0, s1) = h.bipartition().unwrap();
        assert!(to_points == s0 || to_points == s1);
    }

    #[test]
    fn incidence_graph_shape() {
        let levi = incidence_graph(&standard_fano().underlying());
        assert_eq!(levi.vertex_count(), 14);
        assert_eq!(levi.edge_count(), 21);
        assert_eq!(levi.degree_sequence(), vec![3; 14]);
        assert_eq!(levi.tag(3), "point 3");
        assert_eq!(levi.tag(7), "line {0,1,3}");
        assert!(levi.bipartition().is_some());
    }

    #[test]
    fn degree_mismatch_is_rejected_without_search() {
        // Same vertex count as Heawood but six isolated vertices.
        let mut padded = SimpleGraph::new(14).unwrap();
        let cube = cube_graph();
        for u in 0..8 {
            for v in (u + 1)..8 {
                if cube.has_edge(u, v) {
                    padded.add_edge(u, v).unwrap();
                }
            }
        }
        assert_eq!(graphs_isomorphic(&heawood(), &padded), None);
    }

    #[test]
    fn self_isomorphism_is_the_identity() {
        let h = heawood();
        let map = graphs_isomorphic(&h, &h).unwrap();
        assert_eq!(map, (0..14).collect::<Vec<_>>());
    }

    #[test]
    fn triangle_with_tail_girth_and_forest() {
        let mut g = SimpleGraph::new(5).unwrap();
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 2).unwrap();
        g.add_edge(2, 0).unwrap();
        g.add_edge(2, 3).unwrap();
        g.add_edge(3, 4).unwrap();
        assert_eq!(g.girth(), 3);
        assert_eq!(g.bipartition(), None);
        let mut path = SimpleGraph::new(4).unwrap();
        path.add_edge(0, 1).unwrap();
        path.add_edge(1, 2).unwrap();
        path.add_edge(2, 3).unwrap();
        assert_eq!(path.girth(), 0);
    }

    #[test]
    fn petersen_girth_five_not_bipartite() {
        // Outer 5-cycle, inner pentagram, spokes.
        let mut g = SimpleGraph::new(10).unwrap();
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5).unwrap();
            g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
            g.add_edge(i, 5 + i).unwrap();
        }
        assert_eq!(g.girth(), 5);
        assert_eq!(g.bipartition(), None);
        assert_eq!(graphs_isomorphic(&g, &heawood()), None);
    }

    #[test]
    fn json_and_dot_are_byte_stable() {
        let mut g = SimpleGraph::new(3).unwrap();
        g.set_tag(0, "a");
        g.set_tag(1, "b");
        g.set_tag(2, "c");
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 2).unwrap();
        assert_eq!(
            g.to_json(),
            "{\"vertex_count\":3,\"tags\":[\"a\",\"b\",\"c\"],\"adjacency\":[[1],[0,2],[1]]}"
        );
        assert_eq!(
            g.to_dot(),
            "graph g {\n  0 [label=\"a\"];\n  1 [label=\"b\"];\n  2 [label=\"c\"];\n  0 -- 1;\n  1 -- 2;\n}\n"
        );
    }
}
