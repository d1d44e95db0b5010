//! Finite graphs and digraphs with their standard products, families,
//! k-neighborhoods and graph-map checking.
//!
//! Vertices are dense indices `0..n`. Edges are stored canonically as
//! ordered pairs `(u, v)` with `u < v`, so structural equality is graph
//! equality. Loops are rejected everywhere.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub type VertexId = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: VertexId, n: u32 },
    LoopEdge(VertexId),
    SizeMismatch,
    NotAForest,
    NotSymmetric,
    UnknownFamily(String),
    InvalidParams(String),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            GraphError::LoopEdge(v) => write!(f, "loop edge at vertex {v}"),
            GraphError::SizeMismatch => write!(f, "vertex map size mismatch"),
            GraphError::NotAForest => write!(f, "graph contains a cycle"),
            GraphError::NotSymmetric => write!(f, "digraph is not symmetric"),
            GraphError::UnknownFamily(s) => write!(f, "unknown graph family: {s}"),
            GraphError::InvalidParams(s) => write!(f, "invalid family parameters: {s}"),
        }
    }
}

/// Finite simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Graph {
    n: u32,
    edges: BTreeSet<(VertexId, VertexId)>,
}

impl Graph {
    pub fn new(n: u32, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn edgeless(n: u32) -> Self {
        Graph { n, edges: BTreeSet::new() }
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.n
    }

    /// Open neighborhood N(v).
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        (0..self.n).filter(|&w| self.has_edge(v, w)).collect()
    }

    /// Closed neighborhood N[v].
    pub fn closed_neighborhood(&self, v: VertexId) -> Vec<VertexId> {
        (0..self.n).filter(|&w| w == v || self.has_edge(v, w)).collect()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    /// Adjacent or equal; the step relation of graph paths.
    pub fn adjacent_or_equal(&self, u: VertexId, v: VertexId) -> bool {
        u == v || self.has_edge(u, v)
    }

    pub fn complement(&self) -> Graph {
        let mut edges = BTreeSet::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.edges.contains(&(u, v)) {
                    edges.insert((u, v));
                }
            }
        }
        Graph { n: self.n, edges }
    }

    /// Categorical product; vertex (i, j) is encoded as `i * h.n + j`.
    pub fn categorical_product(&self, h: &Graph) -> Graph {
        let nh = h.n;
        let mut edges = BTreeSet::new();
        for (a, b) in self.edges() {
            for (c, d) in h.edges() {
                // (a,c)-(b,d) and (a,d)-(b,c); edges are symmetric pairs.
                let p = a * nh + c;
                let q = b * nh + d;
                edges.insert((p.min(q), p.max(q)));
                let p = a * nh + d;
                let q = b * nh + c;
                edges.insert((p.min(q), p.max(q)));
            }
        }
        Graph { n: self.n * nh, edges }
    }

    /// Cartesian product; same pair encoding as `categorical_product`.
    pub fn cartesian_product(&self, h: &Graph) -> Graph {
        let nh = h.n;
        let mut edges = BTreeSet::new();
        for i in 0..self.n {
            for (c, d) in h.edges() {
                let p = i * nh + c;
                let q = i * nh + d;
                edges.insert((p.min(q), p.max(q)));
            }
        }
        for (a, b) in self.edges() {
            for j in 0..nh {
                let p = a * nh + j;
                let q = b * nh + j;
                edges.insert((p.min(q), p.max(q)));
            }
        }
        Graph { n: self.n * nh, edges }
    }

    /// Canonical (bipartite) double cover `K_2 x G`.
    pub fn double_cover(&self) -> Graph {
        generate_complete(2).categorical_product(self)
    }

    /// Vertices at graph distance <= k from v, computed by the iterated
    /// closed-neighborhood union.
    pub fn closed_k_neighborhood(&self, v: VertexId, k: u32) -> Result<BTreeSet<VertexId>, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        assert!(k >= 1, "k must be positive");
        let mut cur: BTreeSet<VertexId> = self.closed_neighborhood(v).into_iter().collect();
        for _ in 1..k {
            let mut next = BTreeSet::new();
            for &w in &cur {
                next.extend(self.closed_neighborhood(w));
            }
            if next == cur {
                break;
            }
            cur = next;
        }
        Ok(cur)
    }

    /// Breadth-first distances from v; `None` for unreachable vertices.
    pub fn bfs_distances(&self, v: VertexId) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n as usize];
        let mut queue = alloc::collections::VecDeque::new();
        dist[v as usize] = Some(0);
        queue.push_back(v);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize].unwrap();
            for w in self.neighbors(u) {
                if dist[w as usize].is_none() {
                    dist[w as usize] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest path from u to v as a vertex sequence, neighbors explored
    /// in ascending id order. `None` when disconnected.
    pub fn shortest_path(&self, u: VertexId, v: VertexId) -> Option<Vec<VertexId>> {
        let dist = self.bfs_distances(u);
        dist[v as usize]?;
        let mut path = vec![v];
        let mut cur = v;
        while cur != u {
            let d = dist[cur as usize].unwrap();
            let prev = self
                .neighbors(cur)
                .into_iter()
                .find(|&w| dist[w as usize] == Some(d - 1))
                .unwrap();
            path.push(prev);
            cur = prev;
        }
        path.reverse();
        Some(path)
    }

    pub fn is_dominating(&self, set: &BTreeSet<VertexId>) -> bool {
        (0..self.n).all(|v| set.contains(&v) || self.neighbors(v).iter().any(|w| set.contains(w)))
    }

    /// Exact domination number by exhaustive search over subset sizes.
    pub fn domination_number(&self) -> u32 {
        if self.n == 0 {
            return 0;
        }
        assert!(self.n <= 25, "domination_number: graph too large for exact search");
        let masks: Vec<u32> = (0..self.n)
            .map(|v| {
                let mut m = 1u32 << v;
                for w in self.neighbors(v) {
                    m |= 1 << w;
                }
                m
            })
            .collect();
        let full = if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 };
        for size in 1..=self.n {
            if subsets_of_size_dominate(&masks, full, size) {
                return size;
            }
        }
        self.n
    }

    /// A 2-coloring as (part0, part1) when one exists.
    pub fn bipartition(&self) -> Option<(BTreeSet<VertexId>, BTreeSet<VertexId>)> {
        let mut color = vec![None; self.n as usize];
        for start in 0..self.n {
            if color[start as usize].is_some() {
                continue;
            }
            color[start as usize] = Some(0u8);
            let mut queue = alloc::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u as usize].unwrap();
                for w in self.neighbors(u) {
                    match color[w as usize] {
                        None => {
                            color[w as usize] = Some(1 - cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        let mut parts = (BTreeSet::new(), BTreeSet::new());
        for v in 0..self.n {
            match color[v as usize] {
                Some(0) => {
                    parts.0.insert(v);
                }
                _ => {
                    parts.1.insert(v);
                }
            }
        }
        Some(parts)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n as usize];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start as usize] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start as usize] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for w in self.neighbors(u) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// The induced subgraph on `verts`, relabeled to 0..verts.len() in the
    /// given (sorted) order.
    pub fn induced_subgraph(&self, verts: &[VertexId]) -> Graph {
        let index = |v: VertexId| verts.iter().position(|&w| w == v).unwrap() as u32;
        let mut edges = BTreeSet::new();
        for (u, v) in self.edges() {
            if verts.contains(&u) && verts.contains(&v) {
                edges.insert((index(u), index(v)));
            }
        }
        Graph { n: verts.len() as u32, edges }
    }

    pub fn delete_vertex(&self, v: VertexId) -> Graph {
        let verts: Vec<VertexId> = (0..self.n).filter(|&w| w != v).collect();
        self.induced_subgraph(&verts)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        let comps = self.components();
        let comp_count = comps.len();
        self.edges.len() + comp_count == self.n as usize
    }

    /// Brute-force isomorphism check; only intended for small graphs.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return false;
        }
        let mut d1: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut d2: Vec<usize> = (0..other.n).map(|v| other.degree(v)).collect();
        d1.sort_unstable();
        d2.sort_unstable();
        if d1 != d2 {
            return false;
        }
        assert!(self.n <= 9, "is_isomorphic: brute force limited to small graphs");
        let mut perm: Vec<u32> = (0..self.n).collect();
        permutations_match(self, other, &mut perm, 0)
    }

    /// View as a symmetric digraph (each edge in both directions).
    pub fn to_digraph(&self) -> Digraph {
        let mut arcs = BTreeSet::new();
        for (u, v) in self.edges() {
            arcs.insert((u, v));
            arcs.insert((v, u));
        }
        Digraph { n: self.n, arcs }
    }
}

fn subsets_of_size_dominate(masks: &[u32], full: u32, size: u32) -> bool {
    fn rec(masks: &[u32], full: u32, covered: u32, left: u32) -> bool {
        if covered == full {
            return true;
        }
        if left == 0 {
            return false;
        }
        // Branch on the first uncovered vertex: some member of its closed
        // neighborhood must enter the dominating set.
        let v = (0..masks.len()).find(|&v| covered & (1 << v) == 0).unwrap();
        for &m in masks.iter() {
            if m & (1 << v) != 0 && rec(masks, full, covered | m, left - 1) {
                return true;
            }
        }
        false
    }
    rec(masks, full, 0, size)
}

fn permutations_match(a: &Graph, b: &Graph, perm: &mut Vec<u32>, k: usize) -> bool {
    let n = a.n as usize;
    if k == n {
        return a.edges().all(|(u, v)| b.has_edge(perm[u as usize], perm[v as usize]));
    }
    for i in k..n {
        perm.swap(k, i);
        // Partial pruning: edges among 0..=k must map to edges.
        let ok = (0..k).all(|j| {
            a.has_edge(j as u32, k as u32) == b.has_edge(perm[j], perm[k])
        });
        if ok && permutations_match(a, b, perm, k + 1) {
            return true;
        }
        perm.swap(k, i);
    }
    false
}

/// Finite loop-free digraph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Digraph {
    n: u32,
    arcs: BTreeSet<(VertexId, VertexId)>,
}

impl Digraph {
    pub fn new(n: u32, arcs: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (u, v) in arcs {
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
            }
            set.insert((u, v));
        }
        Ok(Digraph { n, arcs: set })
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.arcs.contains(&(u, v))
    }

    pub fn is_symmetric(&self) -> bool {
        self.arcs.iter().all(|&(u, v)| self.arcs.contains(&(v, u)))
    }

    pub fn out_neighbors(&self, v: VertexId) -> Vec<VertexId> {
        (0..self.n).filter(|&w| self.has_arc(v, w)).collect()
    }

    pub fn in_neighbors(&self, v: VertexId) -> Vec<VertexId> {
        (0..self.n).filter(|&w| self.has_arc(w, v)).collect()
    }
}

/// Total function on vertex indices between two graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    pub domain_n: u32,
    pub codomain_n: u32,
    pub image: Vec<VertexId>,
}

impl VertexMap {
    pub fn new(domain_n: u32, codomain_n: u32, image: Vec<VertexId>) -> Result<Self, GraphError> {
        if image.len() != domain_n as usize {
            return Err(GraphError::SizeMismatch);
        }
        if let Some(&v) = image.iter().find(|&&v| v >= codomain_n) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: codomain_n });
        }
        Ok(VertexMap { domain_n, codomain_n, image })
    }

    pub fn apply(&self, v: VertexId) -> VertexId {
        self.image[v as usize]
    }
}

/// A graph map sends every edge to an edge or a single vertex:
/// f(N[v]) is contained in N[f(v)].
pub fn is_graph_map(f: &VertexMap, g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    if f.domain_n != g.vertex_count() || f.codomain_n != h.vertex_count() {
        return Err(GraphError::SizeMismatch);
    }
    Ok(g.edges().all(|(x, y)| h.adjacent_or_equal(f.apply(x), f.apply(y))))
}

pub fn generate_complete(n: u32) -> Graph {
    let mut edges = BTreeSet::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.insert((u, v));
        }
    }
    Graph { n, edges }
}

pub fn generate_cycle(n: u32) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParams(String::from("cycle needs n >= 3")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Path graph on n+1 vertices (n edges).
pub fn generate_path(edge_count: u32) -> Graph {
    let n = edge_count + 1;
    Graph::new(n, (0..edge_count).map(|i| (i, i + 1))).unwrap()
}

pub fn generate_hypercube(dim: u32) -> Result<Graph, GraphError> {
    if dim > 16 {
        return Err(GraphError::InvalidParams(String::from("hypercube dimension too large")));
    }
    let n = 1u32 << dim;
    let mut edges = BTreeSet::new();
    for v in 0..n {
        for b in 0..dim {
            let w = v ^ (1 << b);
            if v < w {
                edges.insert((v, w));
            }
        }
    }
    Ok(Graph { n, edges })
}

/// The three-vertex digraph with arcs 0 -> 1 <- 2.
pub fn generate_x1() -> Digraph {
    Digraph::new(3, [(0, 1), (2, 1)]).unwrap()
}

/// Four vertices: left 0 and right 3 each point at top 1 and bottom 2.
pub fn generate_x2() -> Digraph {
    Digraph::new(4, [(0, 1), (0, 2), (3, 1), (3, 2)]).unwrap()
}

/// Finite window of the two-sided infinite digraph with arcs from each
/// even integer to its odd neighbors. Vertices -2m..2m relabeled to
/// 0..4m, so vertex i stands for integer i - 2m.
pub fn generate_x2_window(m: u32) -> Result<Digraph, GraphError> {
    if m == 0 {
        return Err(GraphError::InvalidParams(String::from("window radius must be positive")));
    }
    let n = 4 * m + 1;
    let offset = 2 * m as i64;
    let mut arcs = Vec::new();
    for i in 0..n {
        let z = i as i64 - offset;
        if z.rem_euclid(2) == 0 {
            for d in [-1i64, 1] {
                let j = z + d + offset;
                if j >= 0 && j < n as i64 {
                    arcs.push((i, j as u32));
                }
            }
        }
    }
    Digraph::new(n, arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    #[test]
    fn complement_of_complete_is_edgeless() {
        let k3 = generate_complete(3);
        assert_eq!(k3.complement(), Graph::edgeless(3));
    }

    #[test]
    fn complement_of_c4_is_two_disjoint_edges() {
        let c4 = generate_cycle(4).unwrap();
        let expected = Graph::new(4, [(0, 2), (1, 3)]).unwrap();
        assert_eq!(c4.complement(), expected);
    }

    #[test]
    fn complement_involution_small() {
        // Exhaustive over all labeled graphs with up to 5 vertices; the
        // spec's n <= 6 case is covered by the random corpus test below.
        for n in 0..=5u32 {
            let pairs: Vec<(u32, u32)> =
                (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
            for mask in 0..(1u64 << pairs.len()) {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &e)| e);
                let g = Graph::new(n, edges).unwrap();
                assert_eq!(g.complement().complement(), g);
            }
        }
    }

    #[test]
    fn complement_involution_n6_random() {
        for seed in 0..50 {
            let g = crate::corpus::random_graph(6, 1, 2, seed);
            assert_eq!(g.complement().complement(), g);
        }
    }

    #[test]
    fn complement_of_cartesian_is_categorical_of_complements() {
        // complement(K_m box K_n) = K_m x K_n under the shared pair encoding.
        for (m, n) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
            let km = generate_complete(m);
            let kn = generate_complete(n);
            assert_eq!(km.cartesian_product(&kn).complement(), km.categorical_product(&kn));
        }
    }

    #[test]
    fn categorical_product_k2_k2_is_two_disjoint_edges() {
        let k2 = generate_complete(2);
        let p = k2.categorical_product(&k2);
        assert_eq!(p.edge_count(), 2);
        assert_eq!(p.components().len(), 2);
    }

    #[test]
    fn categorical_product_k2_k3_is_c6() {
        let p = generate_complete(2).categorical_product(&generate_complete(3));
        assert!(p.is_isomorphic(&generate_cycle(6).unwrap()));
    }

    #[test]
    fn categorical_product_k2_c4_is_two_squares() {
        let p = generate_complete(2).categorical_product(&generate_cycle(4).unwrap());
        let comps = p.components();
        assert_eq!(comps.len(), 2);
        for comp in comps {
            assert!(p.induced_subgraph(&comp).is_isomorphic(&generate_cycle(4).unwrap()));
        }
    }

    #[test]
    fn cartesian_product_squares() {
        let k2 = generate_complete(2);
        assert!(k2.cartesian_product(&k2).is_isomorphic(&generate_cycle(4).unwrap()));
        let k1 = generate_complete(1);
        let c5 = generate_cycle(5).unwrap();
        assert!(k1.cartesian_product(&c5).is_isomorphic(&c5));
        let k3 = generate_complete(3);
        let p = k3.cartesian_product(&k3);
        assert_eq!(p.vertex_count(), 9);
        assert!(p.vertices().all(|v| p.degree(v) == 4));
    }

    #[test]
    fn double_cover_k3_is_c6() {
        assert!(generate_complete(3).double_cover().is_isomorphic(&generate_cycle(6).unwrap()));
    }

    #[test]
    fn double_cover_k4_connected_bipartite() {
        let dc = generate_complete(4).double_cover();
        assert_eq!(dc.vertex_count(), 8);
        assert_eq!(dc.edge_count(), 12);
        assert!(dc.is_connected());
        assert!(dc.is_bipartite());
    }

    #[test]
    fn double_cover_always_bipartite() {
        for seed in 0..30 {
            let g = crate::corpus::random_graph(6, 1, 2, seed);
            let dc = g.double_cover();
            assert!(dc.is_bipartite());
            if g.is_bipartite() {
                // Splits into two copies of G: component count doubles and
                // degree sequences match componentwise.
                assert_eq!(dc.components().len(), 2 * g.components().len());
            }
        }
    }

    #[test]
    fn closed_k_neighborhood_cycles() {
        let c6 = generate_cycle(6).unwrap();
        assert_eq!(
            c6.closed_k_neighborhood(0, 1).unwrap(),
            BTreeSet::from([5, 0, 1])
        );
        assert_eq!(
            c6.closed_k_neighborhood(0, 2).unwrap(),
            BTreeSet::from([4, 5, 0, 1, 2])
        );
        let c5 = generate_cycle(5).unwrap();
        for v in 0..5 {
            assert_eq!(c5.closed_k_neighborhood(v, 2).unwrap().len(), 5);
        }
    }

    #[test]
    fn closed_k_neighborhood_out_of_range() {
        let g = Graph::edgeless(3);
        assert!(g.closed_k_neighborhood(3, 1).is_err());
    }

    #[test]
    fn closed_k_neighborhood_matches_bfs() {
        for seed in 0..40 {
            let g = crate::corpus::random_graph(8, 1, 3, seed);
            for v in 0..8 {
                let dist = g.bfs_distances(v);
                for k in 1..=3 {
                    let expected: BTreeSet<u32> = (0..8)
                        .filter(|&w| matches!(dist[w as usize], Some(d) if d <= k))
                        .collect();
                    assert_eq!(g.closed_k_neighborhood(v, k).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn domination_numbers() {
        assert_eq!(generate_path(2).domination_number(), 1);
        assert_eq!(generate_cycle(4).unwrap().domination_number(), 2);
        assert_eq!(generate_cycle(5).unwrap().domination_number(), 2);
        assert_eq!(Graph::edgeless(4).domination_number(), 4);
    }

    #[test]
    fn domination_matches_subset_scan() {
        for seed in 0..30 {
            let n = 4 + (seed % 6) as u32;
            let g = crate::corpus::random_graph(n, 1, 2, seed);
            let mut best = n;
            for mask in 0u32..(1 << n) {
                let set: BTreeSet<u32> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
                if g.is_dominating(&set) {
                    best = best.min(set.len() as u32);
                }
            }
            assert_eq!(g.domination_number(), best);
        }
    }

    #[test]
    fn bipartition_examples() {
        let c4 = generate_cycle(4).unwrap();
        let (a, b) = c4.bipartition().unwrap();
        assert_eq!(a, BTreeSet::from([0, 2]));
        assert_eq!(b, BTreeSet::from([1, 3]));
        assert!(generate_cycle(5).unwrap().bipartition().is_none());
        assert!(Graph::edgeless(3).bipartition().is_some());
    }

    #[test]
    fn graph_map_checks() {
        let c4 = generate_cycle(4).unwrap();
        let k2 = generate_complete(2);
        let id = VertexMap::new(4, 4, vec![0, 1, 2, 3]).unwrap();
        assert!(is_graph_map(&id, &c4, &c4).unwrap());
        let constant = VertexMap::new(4, 2, vec![0, 0, 0, 0]).unwrap();
        assert!(is_graph_map(&constant, &c4, &k2).unwrap());
        let halves = VertexMap::new(4, 2, vec![0, 0, 1, 1]).unwrap();
        assert!(is_graph_map(&halves, &c4, &k2).unwrap());
        let parity = VertexMap::new(4, 2, vec![0, 1, 0, 1]).unwrap();
        assert!(is_graph_map(&parity, &c4, &k2).unwrap());
    }

    #[test]
    fn graph_maps_respect_k_neighborhoods() {
        // f(N^k[v]) is a subset of N^k[f(v)] for every graph map.
        let mut checked = 0;
        for seed in 0..200u64 {
            let g = crate::corpus::random_graph(5, 1, 2, seed);
            let h = crate::corpus::random_graph(5, 2, 3, seed + 1000);
            let image: Vec<u32> = (0..5)
                .map(|i| ((seed >> (3 * i)) % 5) as u32)
                .collect();
            let f = VertexMap::new(5, 5, image).unwrap();
            if !is_graph_map(&f, &g, &h).unwrap() {
                continue;
            }
            checked += 1;
            for v in 0..5 {
                for k in 1..=3 {
                    let nk = g.closed_k_neighborhood(v, k).unwrap();
                    let target = h.closed_k_neighborhood(f.apply(v), k).unwrap();
                    assert!(nk.iter().all(|&w| target.contains(&f.apply(w))));
                }
            }
        }
        assert!(checked > 10);
    }

    #[test]
    fn family_generators() {
        assert_eq!(generate_complete(4).edge_count(), 6);
        let x1 = generate_x1();
        assert_eq!(x1.vertex_count(), 3);
        let arcs: BTreeSet<_> = x1.arcs().collect();
        assert_eq!(arcs, BTreeSet::from([(0, 1), (2, 1)]));
        let x2 = generate_x2();
        let arcs: BTreeSet<_> = x2.arcs().collect();
        assert_eq!(arcs, BTreeSet::from([(0, 1), (0, 2), (3, 1), (3, 2)]));
        assert!(generate_hypercube(3).unwrap().is_isomorphic(
            &generate_cycle(4).unwrap().cartesian_product(&generate_complete(2))
        ));
        let w = generate_x2_window(2).unwrap();
        assert_eq!(w.vertex_count(), 9);
        assert!(w.has_arc(4, 5) && w.has_arc(4, 3) && !w.has_arc(5, 4));
    }
}
