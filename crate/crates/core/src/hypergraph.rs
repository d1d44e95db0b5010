//! Hypergraphs, the neighborhood and dominance hypergraphs of a graph,
//! and their independence complexes.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::complex::{minimal_transversals, SimplicialComplex};
use crate::graph::{Graph, GraphError, VertexId};

/// A hypergraph: a vertex range 0..n and a set of vertex subsets.
/// Hyperedges are deduplicated; the empty set is a legal hyperedge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: u32,
    hyperedges: BTreeSet<Vec<VertexId>>,
}

impl Hypergraph {
    pub fn new(
        n: u32,
        hyperedges: impl IntoIterator<Item = Vec<VertexId>>,
    ) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for mut e in hyperedges {
            e.sort_unstable();
            e.dedup();
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            set.insert(e);
        }
        Ok(Hypergraph { n, hyperedges: set })
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn hyperedges(&self) -> impl Iterator<Item = &Vec<VertexId>> {
        self.hyperedges.iter()
    }

    pub fn hyperedge_count(&self) -> usize {
        self.hyperedges.len()
    }
}

/// Hyperedges are the distinct open neighborhoods of the graph.
pub fn neighborhood_hypergraph(g: &Graph) -> Hypergraph {
    Hypergraph::new(g.vertex_count(), g.vertices().map(|v| g.neighbors(v))).unwrap()
}

/// Hyperedges are the distinct closed neighborhoods of the graph.
pub fn dominance_hypergraph(g: &Graph) -> Hypergraph {
    Hypergraph::new(g.vertex_count(), g.vertices().map(|v| g.closed_neighborhood(v))).unwrap()
}

/// Independence complex of a hypergraph: a set is independent iff it
/// contains no hyperedge. An empty hyperedge makes every set dependent,
/// so the result is then the void complex.
///
/// A set is independent exactly when its complement meets every
/// hyperedge, so the facets are the complements of the minimal
/// transversals of the hyperedge family.
pub fn independence_complex_hyper(h: &Hypergraph) -> SimplicialComplex {
    let n = h.n as usize;
    assert!(n <= 64, "hypergraph independence limited to 64 vertices");
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let edges: Vec<u64> = h
        .hyperedges
        .iter()
        .map(|e| e.iter().fold(0u64, |m, &v| m | (1 << v)))
        .collect();
    if edges.iter().any(|&e| e == 0) {
        return SimplicialComplex::void((0..h.n).collect());
    }
    let facets: Vec<Vec<VertexId>> = minimal_transversals(&edges, n)
        .into_iter()
        .map(|t| {
            let m = full & !t;
            (0..h.n).filter(|&v| m & (1 << v) != 0).collect()
        })
        .collect();
    SimplicialComplex::from_generating_sets((0..h.n).collect(), facets)
}

/// Dominance complex: a set is a simplex iff its complement dominates
/// the graph. Computed two ways (directly, and as the independence
/// complex of the dominance hypergraph) and asserted equal.
pub fn dominance_complex(g: &Graph) -> SimplicialComplex {
    let n = g.vertex_count();
    assert!(n <= 20, "dominance complex limited to 20 vertices");
    let all: Vec<VertexId> = g.vertices().collect();
    let mut gens: Vec<Vec<VertexId>> = Vec::new();
    for mask in 0u64..(1 << n) {
        let sigma: Vec<VertexId> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        let complement: BTreeSet<VertexId> =
            all.iter().copied().filter(|v| !sigma.contains(v)).collect();
        if g.is_dominating(&complement) {
            gens.push(sigma);
        }
    }
    let direct = SimplicialComplex::from_generating_sets(all, gens);
    let via_hypergraph = independence_complex_hyper(&dominance_hypergraph(g));
    assert_eq!(direct, via_hypergraph, "dominance complex routes disagree");
    direct
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForestReduction {
    Contractible,
    Sphere(i32),
}

/// Replays the leaf reduction for forests: while some component has at
/// least three vertices, take the smallest-id leaf v in such a
/// component with neighbor u, remove the smallest other neighbor of u,
/// and record one suspension. A terminal forest of disjoint edges gives
/// a sphere of dimension suspensions - 1; a surviving isolated vertex
/// makes the independence complex of the neighborhood hypergraph
/// contractible (in fact void).
pub fn forest_sphere_dimension(f: &Graph) -> Result<ForestReduction, GraphError> {
    if !f.is_forest() {
        return Err(GraphError::NotAForest);
    }
    let mut g = f.clone();
    let mut suspensions: i32 = 0;
    loop {
        if g.vertices().any(|v| g.degree(v) == 0) {
            return Ok(ForestReduction::Contractible);
        }
        let leaf = g
            .vertices()
            .find(|&v| g.degree(v) == 1 && g.degree(g.neighbors(v)[0]) >= 2);
        let Some(v) = leaf else {
            // Every component is a single edge.
            return Ok(ForestReduction::Sphere(suspensions - 1));
        };
        let u = g.neighbors(v)[0];
        let w = g.neighbors(u).into_iter().find(|&x| x != v).unwrap();
        g = g.delete_vertex(w);
        suspensions += 1;
    }
}
