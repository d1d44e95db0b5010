//! Finite metric spaces with exact rational distances, circle samples,
//! neighborhood graphs, Borsuk graphs, and Čech complexes.
//!
//! Everything is exact: open versus closed thresholds are decided by
//! rational comparison, never by floating point.

use alloc::vec::Vec;
use core::fmt;

use num_rational::Rational64;
use num_traits::Zero;

use crate::complex::{closed_neighborhood_complex, SimplicialComplex};
use crate::graph::{Graph, VertexId};

pub type Rational = Rational64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MetricError {
    NotSquare,
    NotSymmetric(usize, usize),
    BadDiagonal(usize, usize),
    TriangleViolation(usize, usize, usize),
    BadAngles,
    BadRadius,
}

impl fmt::Display for MetricError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetricError::NotSquare => write!(f, "distance matrix is not square"),
            MetricError::NotSymmetric(i, j) => write!(f, "d({i},{j}) differs from d({j},{i})"),
            MetricError::BadDiagonal(i, j) => {
                write!(f, "d({i},{j}) violates d = 0 iff equal points")
            }
            MetricError::TriangleViolation(i, j, k) => {
                write!(f, "triangle inequality fails on ({i},{j},{k})")
            }
            MetricError::BadAngles => write!(f, "angles must be distinct, sorted, in [0,1)"),
            MetricError::BadRadius => write!(f, "parameter out of range"),
        }
    }
}

/// A finite metric space: exact rational distances, validated for
/// symmetry, zero diagonal (and only there), and the triangle
/// inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMetricSpace {
    dist: Vec<Vec<Rational>>,
}

impl FiniteMetricSpace {
    pub fn new(dist: Vec<Vec<Rational>>) -> Result<Self, MetricError> {
        let n = dist.len();
        if dist.iter().any(|row| row.len() != n) {
            return Err(MetricError::NotSquare);
        }
        for i in 0..n {
            for j in 0..n {
                if dist[i][j] != dist[j][i] {
                    return Err(MetricError::NotSymmetric(i, j));
                }
                if (i == j) != dist[i][j].is_zero() || dist[i][j] < Rational::zero() {
                    return Err(MetricError::BadDiagonal(i, j));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if dist[i][k] > dist[i][j] + dist[j][k] {
                        return Err(MetricError::TriangleViolation(i, j, k));
                    }
                }
            }
        }
        Ok(FiniteMetricSpace { dist })
    }

    pub fn point_count(&self) -> usize {
        self.dist.len()
    }

    pub fn distance(&self, i: usize, j: usize) -> Rational {
        self.dist[i][j]
    }

    pub fn distances(&self) -> &[Vec<Rational>] {
        &self.dist
    }

    pub fn diameter(&self) -> Rational {
        self.dist
            .iter()
            .flatten()
            .copied()
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

/// Points on the circle R/Z: distinct sorted angles in [0,1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleSample {
    angles: Vec<Rational>,
}

impl CircleSample {
    pub fn new(mut angles: Vec<Rational>) -> Result<Self, MetricError> {
        angles.sort();
        let ok = angles.windows(2).all(|w| w[0] < w[1])
            && angles
                .iter()
                .all(|a| *a >= Rational::zero() && *a < Rational::from_integer(1));
        if !ok {
            return Err(MetricError::BadAngles);
        }
        Ok(CircleSample { angles })
    }

    pub fn angles(&self) -> &[Rational] {
        &self.angles
    }

    pub fn point_count(&self) -> usize {
        self.angles.len()
    }
}

/// n evenly spaced points i/n on the circle.
pub fn circle_sample(n: usize) -> CircleSample {
    assert!(n >= 1);
    CircleSample {
        angles: (0..n)
            .map(|i| Rational::new(i as i64, n as i64))
            .collect(),
    }
}

/// The circle distance d(a, b) = min(|a - b|, 1 - |a - b|).
pub fn circle_distance(a: Rational, b: Rational) -> Rational {
    let diff = if a >= b { a - b } else { b - a };
    let wrap = Rational::from_integer(1) - diff;
    if diff <= wrap {
        diff
    } else {
        wrap
    }
}

pub fn circle_metric(c: &CircleSample) -> FiniteMetricSpace {
    let n = c.angles.len();
    let dist: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| circle_distance(c.angles[i], c.angles[j]))
                .collect()
        })
        .collect();
    FiniteMetricSpace::new(dist).expect("circle distances form a metric")
}

/// The neighborhood graph at scale r: distinct points are adjacent when
/// 0 < d < r (open) or 0 < d <= r (closed).
pub fn neighborhood_graph(x: &FiniteMetricSpace, r: Rational, closed: bool) -> Graph {
    let n = x.point_count();
    let edges = (0..n).flat_map(|i| {
        ((i + 1)..n).filter_map(move |j| {
            let d = x.distance(i, j);
            let within = if closed { d <= r } else { d < r };
            (within && !d.is_zero()).then_some((i as VertexId, j as VertexId))
        })
    });
    Graph::new(n as u32, edges).unwrap()
}

/// The Čech complex at scale r: a set is a simplex iff it fits inside a
/// single ball B(a, r) (or B[a, r]) centered at a sample point. Computed
/// directly and as the closed 1-neighborhood complex of the
/// neighborhood graph; the two routes are asserted equal.
pub fn cech_complex(x: &FiniteMetricSpace, r: Rational, closed: bool) -> SimplicialComplex {
    let n = x.point_count();
    let ground: Vec<VertexId> = (0..n as u32).collect();
    let gens: Vec<Vec<VertexId>> = (0..n)
        .map(|a| {
            (0..n)
                .filter(|&p| {
                    let d = x.distance(a, p);
                    if closed {
                        d <= r
                    } else {
                        d < r
                    }
                })
                .map(|p| p as VertexId)
                .collect()
        })
        .filter(|ball: &Vec<VertexId>| !ball.is_empty())
        .collect();
    let direct = SimplicialComplex::from_generating_sets(ground, gens);
    let via_graph = closed_neighborhood_complex(&neighborhood_graph(x, r, closed), 1);
    assert_eq!(direct, via_graph, "Čech routes disagree");
    direct
}

/// The Borsuk graph on a circle sample: far-apart points are adjacent,
/// d > a (open) or d >= a (closed). Requires 0 < a <= 1/2.
pub fn borsuk_graph(c: &CircleSample, a: Rational, closed: bool) -> Result<Graph, MetricError> {
    if a <= Rational::zero() || a > Rational::new(1, 2) {
        return Err(MetricError::BadRadius);
    }
    let n = c.angles.len();
    let edges = (0..n).flat_map(|i| {
        let angles = &c.angles;
        ((i + 1)..n).filter_map(move |j| {
            let d = circle_distance(angles[i], angles[j]);
            let far = if closed { d >= a } else { d > a };
            far.then_some((i as VertexId, j as VertexId))
        })
    });
    Ok(Graph::new(n as u32, edges).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::independence_complex;
    use crate::graph::{generate_complete, generate_cycle};
    use crate::homology::{independence_complex_homology, reduced_homology_z, HomologyResult};
    use alloc::vec;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn circle_metric_examples() {
        let m = circle_metric(&circle_sample(6));
        assert_eq!(m.distance(0, 2), r(1, 3));
        let m = circle_metric(&circle_sample(8));
        assert_eq!(m.distance(0, 5), r(3, 8));
        for n in 1..=24 {
            circle_metric(&circle_sample(n));
        }
    }

    #[test]
    fn metric_validation() {
        assert!(FiniteMetricSpace::new(vec![vec![r(0, 1), r(1, 1)]]).is_err());
        let asym = vec![
            vec![r(0, 1), r(1, 1)],
            vec![r(2, 1), r(0, 1)],
        ];
        assert_eq!(
            FiniteMetricSpace::new(asym),
            Err(MetricError::NotSymmetric(0, 1))
        );
        let nondeg = vec![
            vec![r(0, 1), r(0, 1)],
            vec![r(0, 1), r(0, 1)],
        ];
        assert_eq!(
            FiniteMetricSpace::new(nondeg),
            Err(MetricError::BadDiagonal(0, 1))
        );
        let tri = vec![
            vec![r(0, 1), r(1, 1), r(5, 1)],
            vec![r(1, 1), r(0, 1), r(1, 1)],
            vec![r(5, 1), r(1, 1), r(0, 1)],
        ];
        assert!(matches!(
            FiniteMetricSpace::new(tri),
            Err(MetricError::TriangleViolation(..))
        ));
    }

    #[test]
    fn neighborhood_graph_examples() {
        let m = circle_metric(&circle_sample(6));
        let closed = neighborhood_graph(&m, r(1, 6), true);
        assert_eq!(closed, generate_cycle(6).unwrap());
        let open = neighborhood_graph(&m, r(1, 6), false);
        assert_eq!(open.edge_count(), 0);
        let big = neighborhood_graph(&m, r(1, 2), true);
        assert_eq!(big, generate_complete(6));
    }

    #[test]
    fn cech_complex_examples() {
        let m = circle_metric(&circle_sample(6));
        let k = cech_complex(&m, r(1, 6), true);
        let expected: Vec<Vec<u32>> =
            (0..6u32).map(|i| {
                let mut f = vec![i, (i + 1) % 6, (i + 2) % 6];
                f.sort_unstable();
                f
            }).collect();
        for f in &expected {
            assert!(k.contains(f));
        }
        assert_eq!(k.facets().len(), 6);
        assert_eq!(reduced_homology_z(&k), HomologyResult::single_sphere(1));

        let m4 = circle_metric(&circle_sample(4));
        let k = cech_complex(&m4, r(3, 10), false);
        assert_eq!(k.facets().len(), 4);
        assert!(k.facets().iter().all(|f| f.len() == 3));
        assert_eq!(reduced_homology_z(&k), HomologyResult::single_sphere(2));

        let k = cech_complex(&m4, m4.diameter(), true);
        assert_eq!(k.facets(), &[vec![0, 1, 2, 3]]);
    }

    #[test]
    fn cech_minimal_radius_circle_regime() {
        // n = 4 degenerates: the four consecutive triples are all four
        // 3-subsets, i.e. the boundary of the 3-simplex.
        let m = circle_metric(&circle_sample(4));
        let k = cech_complex(&m, r(1, 4), true);
        assert_eq!(reduced_homology_z(&k), HomologyResult::single_sphere(2));
        for n in 5..=12usize {
            let m = circle_metric(&circle_sample(n));
            let k = cech_complex(&m, Rational::new(1, n as i64), true);
            assert_eq!(reduced_homology_z(&k), HomologyResult::single_sphere(1), "n = {n}");
        }
    }

    #[test]
    fn cech_routes_and_monotonicity_random() {
        for seed in 0..100u64 {
            let mut rng = crate::corpus::rng(seed);
            let n = 3 + crate::corpus::below(&mut rng, 4) as usize;
            // Distances in [1, 2] satisfy the triangle inequality for
            // free; denominators stay small for exactness.
            let mut dist = vec![vec![Rational::zero(); n]; n];
            for i in 0..n {
                for j in (i + 1)..n {
                    let d = r(12 + crate::corpus::below(&mut rng, 13) as i64, 12);
                    dist[i][j] = d;
                    dist[j][i] = d;
                }
            }
            let x = FiniteMetricSpace::new(dist).unwrap();
            let radius = r(10 + crate::corpus::below(&mut rng, 20) as i64, 12);
            for closed in [false, true] {
                // cech_complex itself asserts the two routes agree.
                let small = cech_complex(&x, radius, closed);
                let large = cech_complex(&x, radius + r(1, 6), closed);
                for f in small.facets() {
                    assert!(large.contains(f), "seed {seed}");
                }
            }
        }
    }

    #[test]
    fn borsuk_graph_examples() {
        let c = circle_sample(8);
        let m = borsuk_graph(&c, r(1, 2), true).unwrap();
        assert_eq!(m.edge_count(), 4);
        for v in m.vertices() {
            assert_eq!(m.neighbors(v), vec![(v + 4) % 8]);
        }

        let b = borsuk_graph(&c, r(3, 8), true).unwrap();
        for v in b.vertices() {
            assert_eq!(b.degree(v), 3);
            for u in b.neighbors(v) {
                assert!(circle_distance(c.angles()[v as usize], c.angles()[u as usize]) >= r(3, 8));
            }
        }

        // Complement bridge: non-edges of the closed Borsuk graph are
        // exactly the pairs with 0 < d < a.
        let comp = b.complement();
        let open_near = neighborhood_graph(&circle_metric(&c), r(3, 8), false);
        assert_eq!(comp, open_near);

        assert!(borsuk_graph(&c, r(2, 3), true).is_err());
        assert!(borsuk_graph(&c, r(0, 1), true).is_err());
    }

    #[test]
    fn theorem_a_on_borsuk_samples() {
        for n in [6usize, 8, 10, 12] {
            let c = circle_sample(n);
            for a in [r(1, 4), r(3, 8), r(1, 2)] {
                let b = borsuk_graph(&c, a, true).unwrap();
                // The double cover has 2n vertices; go through the
                // component-splitting homology engine rather than
                // enumerating the independence complex directly.
                let left = independence_complex_homology(&b.double_cover());
                let right = reduced_homology_z(&closed_neighborhood_complex(&b.complement(), 1));
                assert_eq!(left, right.shift(1), "n = {n}, a = {a}");
            }
        }
        // Direct-route spot check at the smallest size.
        let b = borsuk_graph(&circle_sample(6), r(1, 2), true).unwrap();
        assert_eq!(
            reduced_homology_z(&independence_complex(&b.double_cover())),
            independence_complex_homology(&b.double_cover())
        );
    }
}
