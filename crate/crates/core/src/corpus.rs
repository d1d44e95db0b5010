//! Seeded random instances for test corpora. Every generator takes an
//! explicit 64-bit seed; nothing here touches ambient randomness.

use alloc::vec::Vec;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::SimplicialComplex;
use crate::graph::{Digraph, Graph, VertexId};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn chance(rng: &mut ChaCha8Rng, num: u64, den: u64) -> bool {
    (rng.next_u64() % den) < num
}

/// Uniform value in 0..bound.
pub fn below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    rng.next_u64() % bound
}

/// Erdos-Renyi graph: each edge present with probability num/den.
pub fn random_graph(n: u32, num: u64, den: u64, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if chance(&mut r, num, den) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn random_digraph(n: u32, num: u64, den: u64, seed: u64) -> Digraph {
    let mut r = rng(seed);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && chance(&mut r, num, den) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::new(n, arcs).unwrap()
}

/// Random symmetric digraph (a graph viewed with both arc directions).
pub fn random_symmetric_digraph(n: u32, num: u64, den: u64, seed: u64) -> Digraph {
    random_graph(n, num, den, seed).to_digraph()
}

/// Random forest: each vertex after the first either starts a fresh
/// component or attaches to a uniformly random earlier vertex.
pub fn random_forest(n: u32, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        if chance(&mut r, 3, 4) {
            let parent = below(&mut r, v as u64) as u32;
            edges.push((parent, v));
        }
    }
    let g = Graph::new(n, edges).unwrap();
    debug_assert!(g.is_forest());
    g
}

/// Random complex as the closure of `facet_count` random nonempty
/// generating sets over the ground 0..ground_size.
pub fn random_complex(ground_size: u32, facet_count: u32, seed: u64) -> SimplicialComplex {
    let mut r = rng(seed);
    let mut generators: Vec<Vec<VertexId>> = Vec::new();
    for _ in 0..facet_count {
        let mut set = Vec::new();
        for v in 0..ground_size {
            if chance(&mut r, 1, 2) {
                set.push(v);
            }
        }
        if !set.is_empty() {
            generators.push(set);
        }
    }
    SimplicialComplex::from_generating_sets((0..ground_size).collect(), generators)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_reproducible() {
        assert_eq!(random_graph(8, 1, 2, 42), random_graph(8, 1, 2, 42));
        assert_eq!(random_digraph(6, 1, 3, 7), random_digraph(6, 1, 3, 7));
        assert_eq!(random_forest(10, 5), random_forest(10, 5));
        assert_eq!(random_complex(6, 4, 9), random_complex(6, 4, 9));
    }

    #[test]
    fn forests_are_forests() {
        for seed in 0..100 {
            assert!(random_forest(12, seed).is_forest());
        }
    }
}
