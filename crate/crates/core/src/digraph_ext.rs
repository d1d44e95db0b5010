//! Right and left closed k-neighborhoods of a digraph and the
//! simplicial complexes they generate, together with the Dowker-style
//! homology comparison between the two.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::complex::SimplicialComplex;
use crate::graph::{Digraph, VertexId};

/// Vertices reachable from v along at most k arcs, including v.
pub fn right_closed_k_neighborhood(x: &Digraph, v: VertexId, k: u32) -> BTreeSet<VertexId> {
    assert!(k >= 1);
    reach(x, v, k, |x, w| x.out_neighbors(w))
}

/// Vertices from which v is reachable along at most k arcs, including v.
pub fn left_closed_k_neighborhood(x: &Digraph, v: VertexId, k: u32) -> BTreeSet<VertexId> {
    assert!(k >= 1);
    reach(x, v, k, |x, w| x.in_neighbors(w))
}

fn reach(
    x: &Digraph,
    v: VertexId,
    k: u32,
    step: impl Fn(&Digraph, VertexId) -> Vec<VertexId>,
) -> BTreeSet<VertexId> {
    let mut ball: BTreeSet<VertexId> = BTreeSet::from([v]);
    for _ in 0..k {
        let next: BTreeSet<VertexId> = ball
            .iter()
            .flat_map(|&w| step(x, w))
            .chain(ball.iter().copied())
            .collect();
        if next == ball {
            break;
        }
        ball = next;
    }
    ball
}

/// Facets generated by the right closed k-neighborhoods.
pub fn right_closed_nbhd_complex(x: &Digraph, k: u32) -> SimplicialComplex {
    nbhd_complex(x, k, right_closed_k_neighborhood)
}

/// Facets generated by the left closed k-neighborhoods.
pub fn left_closed_nbhd_complex(x: &Digraph, k: u32) -> SimplicialComplex {
    nbhd_complex(x, k, left_closed_k_neighborhood)
}

fn nbhd_complex(
    x: &Digraph,
    k: u32,
    ball: fn(&Digraph, VertexId, u32) -> BTreeSet<VertexId>,
) -> SimplicialComplex {
    let ground: Vec<VertexId> = (0..x.vertex_count()).collect();
    let gens: Vec<Vec<VertexId>> = (0..x.vertex_count())
        .map(|v| ball(x, v, k).into_iter().collect())
        .collect();
    SimplicialComplex::from_generating_sets(ground, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::closed_neighborhood_complex;
    use crate::graph::{generate_x1, generate_x2, generate_x2_window};
    use crate::homology::{reduced_homology_z, HomologyResult};
    use crate::grouppres::{edge_path_presentation, tietze_simplify, TrivialityCertificate};
    use alloc::vec;

    fn set(vs: &[u32]) -> BTreeSet<u32> {
        vs.iter().copied().collect()
    }

    #[test]
    fn neighborhoods_on_x1() {
        let x1 = generate_x1();
        assert_eq!(right_closed_k_neighborhood(&x1, 0, 1), set(&[0, 1]));
        assert_eq!(right_closed_k_neighborhood(&x1, 1, 1), set(&[1]));
        assert_eq!(right_closed_k_neighborhood(&x1, 2, 1), set(&[1, 2]));
        assert_eq!(left_closed_k_neighborhood(&x1, 1, 1), set(&[0, 1, 2]));
    }

    #[test]
    fn symmetric_digraphs_match_graph_neighborhoods() {
        for seed in 0..30u64 {
            let g = crate::corpus::random_graph(6, 1, 2, seed);
            let x = g.to_digraph();
            for v in g.vertices() {
                for k in 1..=3u32 {
                    let ball = g.closed_k_neighborhood(v, k).unwrap();
                    assert_eq!(right_closed_k_neighborhood(&x, v, k), ball);
                    assert_eq!(left_closed_k_neighborhood(&x, v, k), ball);
                }
            }
            for k in 1..=2u32 {
                let expected = closed_neighborhood_complex(&g, k);
                assert_eq!(right_closed_nbhd_complex(&x, k), expected);
                assert_eq!(left_closed_nbhd_complex(&x, k), expected);
            }
        }
    }

    #[test]
    fn complexes_on_x1_and_x2() {
        let x1 = generate_x1();
        let right = right_closed_nbhd_complex(&x1, 1);
        assert_eq!(right.facets(), &[vec![0, 1], vec![1, 2]]);
        assert!(reduced_homology_z(&right).is_trivial());
        let left = left_closed_nbhd_complex(&x1, 1);
        assert_eq!(left.facets(), &[vec![0, 1, 2]]);
        assert!(reduced_homology_z(&left).is_trivial());
        // The witness that right and left genuinely differ.
        assert_ne!(right, left);

        let x2 = generate_x2();
        for k in 1..=3u32 {
            assert!(reduced_homology_z(&right_closed_nbhd_complex(&x2, k)).is_trivial());
            assert!(reduced_homology_z(&left_closed_nbhd_complex(&x2, k)).is_trivial());
        }
    }

    #[test]
    fn x2_complexes_are_simply_connected() {
        for k in 1..=2u32 {
            for complex in [
                right_closed_nbhd_complex(&generate_x2(), k),
                left_closed_nbhd_complex(&generate_x2(), k),
            ] {
                let p = edge_path_presentation(&complex, 0).unwrap();
                let (_, cert) = tietze_simplify(&p, 10_000);
                assert_eq!(cert, TrivialityCertificate::Trivial, "k = {k}");
            }
        }
    }

    fn dowker_homology_agrees(x: &Digraph, k: u32) -> (HomologyResult, HomologyResult) {
        let r = reduced_homology_z(&right_closed_nbhd_complex(x, k));
        let l = reduced_homology_z(&left_closed_nbhd_complex(x, k));
        (r, l)
    }

    #[test]
    fn dowker_equivalence_corpus() {
        for k in 1..=2u32 {
            let (r, l) = dowker_homology_agrees(&generate_x1(), k);
            assert_eq!(r, l);
            let (r, l) = dowker_homology_agrees(&generate_x2(), k);
            assert_eq!(r, l);
            for m in 1..=3u32 {
                let (r, l) = dowker_homology_agrees(&generate_x2_window(m).unwrap(), k);
                assert_eq!(r, l, "window {m}, k {k}");
            }
            for seed in 0..100u64 {
                let x = crate::corpus::random_digraph(6, 1, 3, seed);
                let (r, l) = dowker_homology_agrees(&x, k);
                assert_eq!(r, l, "seed {seed}, k {k}");
            }
        }
    }
}
