//! Simplicial complexes as facet antichains over an explicit ground set.
//!
//! A complex is one of three things: the void complex (no simplices at
//! all), the empty complex `{∅}` (facet list `[[]]`), or a complex with
//! nonempty facets. The ground set may strictly contain the vertex set;
//! Alexander duality is taken over the ground set.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexError {
    NotAVertex(VertexId),
    GroundsNotDisjoint,
    GroundTooLarge(usize),
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::NotAVertex(v) => write!(f, "{v} is not a vertex of the complex"),
            ComplexError::GroundsNotDisjoint => write!(f, "ground sets are not disjoint"),
            ComplexError::GroundTooLarge(n) => {
                write!(f, "operation requires ground size <= 64, got {n}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SimplicialComplex {
    ground: Vec<VertexId>,
    facets: Vec<Vec<VertexId>>,
    void: bool,
}

impl SimplicialComplex {
    /// The void complex: no simplices, not even the empty set.
    pub fn void(mut ground: Vec<VertexId>) -> Self {
        ground.sort_unstable();
        ground.dedup();
        SimplicialComplex { ground, facets: Vec::new(), void: true }
    }

    /// The complex `{∅}` whose only simplex is the empty set.
    pub fn empty_complex(mut ground: Vec<VertexId>) -> Self {
        ground.sort_unstable();
        ground.dedup();
        SimplicialComplex { ground, facets: vec![Vec::new()], void: false }
    }

    pub fn full_simplex(ground: Vec<VertexId>) -> Self {
        let g = ground.clone();
        Self::from_generating_sets(ground, vec![g])
    }

    /// Closure of the given generating sets: a set is a simplex iff it is
    /// contained in some generator. An empty generator list gives the
    /// void complex.
    pub fn from_generating_sets(
        mut ground: Vec<VertexId>,
        generators: Vec<Vec<VertexId>>,
    ) -> Self {
        ground.sort_unstable();
        ground.dedup();
        if generators.is_empty() {
            return SimplicialComplex { ground, facets: Vec::new(), void: true };
        }
        let mut sets: Vec<Vec<VertexId>> = generators
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        sets.sort();
        sets.dedup();
        // Keep only maximal sets.
        let mut facets: Vec<Vec<VertexId>> = Vec::new();
        for (i, s) in sets.iter().enumerate() {
            let dominated = sets
                .iter()
                .enumerate()
                .any(|(j, t)| i != j && t.len() >= s.len() && is_subset(s, t) && (t.len() > s.len() || j < i));
            if !dominated {
                facets.push(s.clone());
            }
        }
        for f in &facets {
            for &v in f {
                debug_assert!(ground.binary_search(&v).is_ok(), "facet element outside ground");
            }
        }
        SimplicialComplex { ground, facets, void: false }
    }

    /// Wrap facets that are already known to form an antichain.
    pub fn from_maximal_facets(mut ground: Vec<VertexId>, mut facets: Vec<Vec<VertexId>>) -> Self {
        ground.sort_unstable();
        ground.dedup();
        for f in &mut facets {
            f.sort_unstable();
            f.dedup();
        }
        facets.sort();
        facets.dedup();
        debug_assert!(facets
            .iter()
            .enumerate()
            .all(|(i, s)| !facets.iter().enumerate().any(|(j, t)| i != j && is_subset(s, t))));
        if facets.is_empty() {
            SimplicialComplex { ground, facets, void: true }
        } else {
            SimplicialComplex { ground, facets, void: false }
        }
    }

    pub fn is_void(&self) -> bool {
        self.void
    }

    /// True for the complex whose only simplex is the empty set.
    pub fn is_empty_complex(&self) -> bool {
        !self.void && self.facets.len() == 1 && self.facets[0].is_empty()
    }

    pub fn ground(&self) -> &[VertexId] {
        &self.ground
    }

    pub fn facets(&self) -> &[Vec<VertexId>] {
        &self.facets
    }

    /// Elements that occur as 0-simplices.
    pub fn vertices(&self) -> Vec<VertexId> {
        let mut vs: BTreeSet<VertexId> = BTreeSet::new();
        for f in &self.facets {
            vs.extend(f.iter().copied());
        }
        vs.into_iter().collect()
    }

    /// Dimension of the complex; `None` for the void complex and `-1`
    /// for `{∅}`.
    pub fn dimension(&self) -> Option<i32> {
        if self.void {
            return None;
        }
        Some(self.facets.iter().map(|f| f.len() as i32 - 1).max().unwrap_or(-1))
    }

    pub fn contains(&self, simplex: &[VertexId]) -> bool {
        if self.void {
            return false;
        }
        self.facets.iter().any(|f| simplex.iter().all(|v| f.binary_search(v).is_ok()))
    }

    /// A vertex contained in every facet, when one exists. A complex with
    /// such an apex is a cone and has trivial reduced homology.
    pub fn cone_vertex(&self) -> Option<VertexId> {
        if self.void || self.facets.is_empty() {
            return None;
        }
        self.facets[0]
            .iter()
            .copied()
            .find(|v| self.facets.iter().all(|f| f.binary_search(v).is_ok()))
    }

    /// All simplices of dimension >= 0, grouped by dimension; index d
    /// holds the sorted list of d-simplices.
    pub fn simplices_by_dim(&self) -> Vec<Vec<Vec<VertexId>>> {
        let dim = match self.dimension() {
            None | Some(-1) => return Vec::new(),
            Some(d) => d as usize,
        };
        let mut seen: BTreeSet<Vec<VertexId>> = BTreeSet::new();
        let mut frontier: Vec<Vec<VertexId>> = Vec::new();
        for f in &self.facets {
            if !f.is_empty() && seen.insert(f.clone()) {
                frontier.push(f.clone());
            }
        }
        while let Some(s) = frontier.pop() {
            if s.len() <= 1 {
                continue;
            }
            for i in 0..s.len() {
                let mut t = s.clone();
                t.remove(i);
                if seen.insert(t.clone()) {
                    frontier.push(t);
                }
            }
        }
        let mut by_dim: Vec<Vec<Vec<VertexId>>> = vec![Vec::new(); dim + 1];
        for s in seen {
            by_dim[s.len() - 1].push(s);
        }
        by_dim
    }

    /// Number of simplices in each dimension starting at 0.
    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices_by_dim().iter().map(|v| v.len()).collect()
    }

    /// Reduced Euler characteristic; 0 for the void complex.
    pub fn euler_characteristic_reduced(&self) -> i64 {
        if self.void {
            return 0;
        }
        let mut chi: i64 = -1;
        for (d, count) in self.f_vector().into_iter().enumerate() {
            let sign = if d % 2 == 0 { 1 } else { -1 };
            chi += sign * count as i64;
        }
        chi
    }

    pub fn total_simplex_count(&self) -> usize {
        self.f_vector().into_iter().sum::<usize>() + if self.void { 0 } else { 1 }
    }

    fn ground_index(&self, v: VertexId) -> Option<usize> {
        self.ground.binary_search(&v).ok()
    }

    fn mask_of(&self, set: &[VertexId]) -> u64 {
        let mut m = 0u64;
        for &v in set {
            m |= 1 << self.ground_index(v).expect("element outside ground");
        }
        m
    }

    fn unmask(&self, m: u64) -> Vec<VertexId> {
        (0..self.ground.len()).filter(|&i| m & (1 << i) != 0).map(|i| self.ground[i]).collect()
    }

    /// Inclusion-minimal subsets of the ground set that are not simplices.
    ///
    /// A set is a non-face iff it hits the complement of every facet, so
    /// the minimal non-faces are the minimal transversals of the facet
    /// complements; we build them facet by facet instead of scanning the
    /// whole power set.
    pub fn minimal_nonfaces(&self) -> Result<Vec<Vec<VertexId>>, ComplexError> {
        if self.ground.len() > 64 {
            return Err(ComplexError::GroundTooLarge(self.ground.len()));
        }
        if self.void {
            return Ok(vec![Vec::new()]);
        }
        let full: u64 = if self.ground.len() == 64 { u64::MAX } else { (1 << self.ground.len()) - 1 };
        let complements: Vec<u64> = self.facets.iter().map(|f| full & !self.mask_of(f)).collect();
        let transversals = minimal_transversals(&complements, self.ground.len());
        let mut result: Vec<Vec<VertexId>> = transversals.into_iter().map(|m| self.unmask(m)).collect();
        result.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        Ok(result)
    }

    /// Combinatorial Alexander dual over the ground set: the facets of
    /// the dual are the ground-complements of the minimal non-faces.
    pub fn alexander_dual(&self) -> Result<SimplicialComplex, ComplexError> {
        let mnf = self.minimal_nonfaces()?;
        let facets: Vec<Vec<VertexId>> = mnf
            .into_iter()
            .map(|s| {
                self.ground
                    .iter()
                    .copied()
                    .filter(|v| s.binary_search(v).is_err())
                    .collect()
            })
            .collect();
        Ok(SimplicialComplex::from_maximal_facets(self.ground.clone(), facets))
    }

    /// Join of two complexes on disjoint grounds. Joining with the void
    /// complex returns the other complex unchanged.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex, ComplexError> {
        if self.ground.iter().any(|v| other.ground.binary_search(v).is_ok()) {
            return Err(ComplexError::GroundsNotDisjoint);
        }
        if self.void {
            return Ok(other.clone());
        }
        if other.void {
            return Ok(self.clone());
        }
        let mut ground = self.ground.clone();
        ground.extend(other.ground.iter().copied());
        let mut facets = Vec::new();
        for a in &self.facets {
            for b in &other.facets {
                let mut f = a.clone();
                f.extend(b.iter().copied());
                facets.push(f);
            }
        }
        Ok(SimplicialComplex::from_maximal_facets(ground, facets))
    }

    /// Join with a two-point sphere on fresh ground elements.
    pub fn suspension(&self) -> SimplicialComplex {
        let next = self.ground.iter().copied().max().map_or(0, |m| m + 1);
        let s0 = SimplicialComplex::from_maximal_facets(
            vec![next, next + 1],
            vec![vec![next], vec![next + 1]],
        );
        self.join(&s0).expect("fresh suspension points collide with ground")
    }

    pub fn link(&self, v: VertexId) -> Result<SimplicialComplex, ComplexError> {
        if !self.contains(&[v]) {
            return Err(ComplexError::NotAVertex(v));
        }
        let ground: Vec<VertexId> = self.ground.iter().copied().filter(|&w| w != v).collect();
        let gens: Vec<Vec<VertexId>> = self
            .facets
            .iter()
            .filter(|f| f.binary_search(&v).is_ok())
            .map(|f| f.iter().copied().filter(|&w| w != v).collect())
            .collect();
        Ok(SimplicialComplex::from_generating_sets(ground, gens))
    }

    pub fn deletion(&self, v: VertexId) -> Result<SimplicialComplex, ComplexError> {
        if !self.contains(&[v]) {
            return Err(ComplexError::NotAVertex(v));
        }
        let ground: Vec<VertexId> = self.ground.iter().copied().filter(|&w| w != v).collect();
        let gens: Vec<Vec<VertexId>> = self
            .facets
            .iter()
            .map(|f| f.iter().copied().filter(|&w| w != v).collect())
            .collect();
        Ok(SimplicialComplex::from_generating_sets(ground, gens))
    }

    /// Same complex with every ground element shifted by `offset`;
    /// used to make grounds disjoint before a join.
    pub fn relabel_shift(&self, offset: VertexId) -> SimplicialComplex {
        SimplicialComplex {
            ground: self.ground.iter().map(|&v| v + offset).collect(),
            facets: self
                .facets
                .iter()
                .map(|f| f.iter().map(|&v| v + offset).collect())
                .collect(),
            void: self.void,
        }
    }

    /// Simplex-wise containment in `other` (over any grounds).
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        if self.void {
            return true;
        }
        if other.void {
            return false;
        }
        self.facets.iter().all(|f| other.contains(f))
    }
}

/// Inclusion-minimal vertex sets (as masks over 0..n) meeting every
/// edge mask, built incrementally edge by edge.
pub(crate) fn minimal_transversals(edges: &[u64], n: usize) -> Vec<u64> {
    let mut transversals: Vec<u64> = vec![0];
    for &edge in edges {
        let mut next: BTreeSet<u64> = BTreeSet::new();
        for &t in &transversals {
            if t & edge != 0 {
                next.insert(t);
            } else {
                for i in 0..n {
                    if edge & (1 << i) != 0 {
                        next.insert(t | (1 << i));
                    }
                }
            }
        }
        let candidates: Vec<u64> = next.into_iter().collect();
        transversals = candidates
            .iter()
            .copied()
            .filter(|&t| !candidates.iter().any(|&s| s != t && s & t == s))
            .collect();
    }
    transversals
}

fn is_subset(a: &[VertexId], b: &[VertexId]) -> bool {
    a.iter().all(|v| b.binary_search(v).is_ok())
}

/// Simplices are the sets contained in some closed k-neighborhood.
/// k = 1 gives the closed neighborhood complex.
pub fn closed_neighborhood_complex(g: &Graph, k: u32) -> SimplicialComplex {
    assert!(k >= 1, "k must be positive");
    let gens: Vec<Vec<VertexId>> = g
        .vertices()
        .map(|v| g.closed_k_neighborhood(v, k).unwrap().into_iter().collect())
        .collect();
    SimplicialComplex::from_generating_sets(g.vertices().collect(), gens)
}

/// Simplices are the sets contained in some open neighborhood. Vertices
/// with no neighbor contribute only the empty simplex.
pub fn open_neighborhood_complex(g: &Graph) -> SimplicialComplex {
    let gens: Vec<Vec<VertexId>> = g.vertices().map(|v| g.neighbors(v)).collect();
    SimplicialComplex::from_generating_sets(g.vertices().collect(), gens)
}

/// Facets are the maximal independent sets of the graph.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    if g.vertex_count() == 0 {
        return SimplicialComplex::empty_complex(Vec::new());
    }
    let facets = maximal_cliques(&g.complement());
    SimplicialComplex::from_maximal_facets(g.vertices().collect(), facets)
}

/// Facets are the maximal cliques of the graph.
pub fn clique_complex(g: &Graph) -> SimplicialComplex {
    if g.vertex_count() == 0 {
        return SimplicialComplex::empty_complex(Vec::new());
    }
    let facets = maximal_cliques(g);
    SimplicialComplex::from_maximal_facets(g.vertices().collect(), facets)
}

/// Bron-Kerbosch with pivoting over u64 vertex masks.
fn maximal_cliques(g: &Graph) -> Vec<Vec<VertexId>> {
    let n = g.vertex_count() as usize;
    assert!(n <= 64, "maximal clique enumeration limited to 64 vertices");
    let adj: Vec<u64> = (0..n as u32)
        .map(|v| {
            let mut m = 0u64;
            for w in g.neighbors(v) {
                m |= 1 << w;
            }
            m
        })
        .collect();
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let mut out = Vec::new();
    bron_kerbosch(&adj, 0, full, 0, &mut out);
    out.into_iter()
        .map(|m| (0..n as u32).filter(|&v| m & (1 << v) != 0).collect())
        .collect()
}

fn bron_kerbosch(adj: &[u64], r: u64, p: u64, x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    // Pivot: vertex of P union X with the most neighbors in P.
    let pivot = (0..adj.len())
        .filter(|&v| (p | x) & (1 << v) != 0)
        .max_by_key(|&v| (p & adj[v]).count_ones())
        .unwrap();
    let mut candidates = p & !adj[pivot];
    let mut p = p;
    let mut x = x;
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        let bit = 1u64 << v;
        candidates &= !bit;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
    }
}

/// The Nagel-Reiner construction: the complex generated by the images of
/// `phi` together with the bipartite non-incidence graph on X ⊔ Y, with
/// Y relabeled to start at `x_size`.
pub fn nagel_reiner_pair(x_size: u32, phi: &[Vec<VertexId>]) -> (SimplicialComplex, Graph) {
    let k = SimplicialComplex::from_generating_sets(
        (0..x_size).collect(),
        phi.iter().cloned().collect(),
    );
    let y_count = phi.len() as u32;
    let mut edges = Vec::new();
    for (j, image) in phi.iter().enumerate() {
        for x in 0..x_size {
            if !image.contains(&x) {
                edges.push((x, x_size + j as u32));
            }
        }
    }
    let h = Graph::new(x_size + y_count, edges).unwrap();
    (k, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_complete, generate_cycle, generate_path, Graph};

    fn facet_sets(k: &SimplicialComplex) -> Vec<Vec<u32>> {
        k.facets().to_vec()
    }

    #[test]
    fn closed_neighborhood_complex_cycles() {
        let c5 = generate_cycle(5).unwrap();
        let k = closed_neighborhood_complex(&c5, 1);
        assert_eq!(
            facet_sets(&k),
            vec![vec![0, 1, 2], vec![0, 1, 4], vec![0, 3, 4], vec![1, 2, 3], vec![2, 3, 4]]
        );

        let c4 = generate_cycle(4).unwrap();
        let k = closed_neighborhood_complex(&c4, 1);
        assert_eq!(
            facet_sets(&k),
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]
        );

        let c6 = generate_cycle(6).unwrap();
        let k = closed_neighborhood_complex(&c6, 2);
        assert_eq!(k.facets().len(), 6);
        assert!(k.facets().iter().all(|f| f.len() == 5));
    }

    #[test]
    fn closed_neighborhood_complex_edgeless() {
        let k = closed_neighborhood_complex(&Graph::edgeless(3), 1);
        assert_eq!(facet_sets(&k), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn open_neighborhood_complex_examples() {
        let k2 = generate_complete(2);
        let k = open_neighborhood_complex(&k2);
        assert_eq!(facet_sets(&k), vec![vec![0], vec![1]]);

        let p3 = generate_path(2); // a - b - c with b = 1
        let k = open_neighborhood_complex(&p3);
        assert_eq!(facet_sets(&k), vec![vec![0, 2], vec![1]]);

        let k = open_neighborhood_complex(&Graph::edgeless(3));
        assert!(k.is_empty_complex());
        assert_eq!(k.ground().len(), 3);

        let k = open_neighborhood_complex(&Graph::edgeless(0));
        assert!(k.is_void());
    }

    #[test]
    fn independence_complex_examples() {
        let k = independence_complex(&generate_complete(4));
        assert_eq!(facet_sets(&k), vec![vec![0], vec![1], vec![2], vec![3]]);

        let k = independence_complex(&generate_cycle(5).unwrap());
        assert_eq!(k.facets().len(), 5);
        assert!(k.facets().iter().all(|f| f.len() == 2));

        let k = independence_complex(&Graph::edgeless(3));
        assert_eq!(facet_sets(&k), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn clique_complex_examples() {
        let k = clique_complex(&generate_complete(4));
        assert_eq!(facet_sets(&k), vec![vec![0, 1, 2, 3]]);

        let k = clique_complex(&generate_cycle(5).unwrap());
        assert_eq!(k.facets().len(), 5);

        let c4 = generate_cycle(4).unwrap();
        assert_eq!(clique_complex(&c4), independence_complex(&c4.complement()));
    }

    #[test]
    fn clique_is_independence_of_complement_exhaustive() {
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
                assert_eq!(clique_complex(&g), independence_complex(&g.complement()));
            }
        }
        for seed in 0..20 {
            let g = crate::corpus::random_graph(6, 1, 2, seed);
            assert_eq!(clique_complex(&g), independence_complex(&g.complement()));
        }
    }

    #[test]
    fn minimal_nonfaces_examples() {
        let triangle_boundary = SimplicialComplex::from_maximal_facets(
            vec![0, 1, 2],
            vec![vec![0, 1], vec![0, 2], vec![1, 2]],
        );
        assert_eq!(triangle_boundary.minimal_nonfaces().unwrap(), vec![vec![0, 1, 2]]);

        let full = SimplicialComplex::full_simplex(vec![0, 1, 2]);
        assert!(full.minimal_nonfaces().unwrap().is_empty());

        let k = SimplicialComplex::from_maximal_facets(vec![1, 2, 3], vec![vec![1], vec![2]]);
        assert_eq!(k.minimal_nonfaces().unwrap(), vec![vec![3], vec![1, 2]]);
    }

    #[test]
    fn minimal_nonfaces_match_power_set_scan() {
        for seed in 0..60u64 {
            let k = crate::corpus::random_complex(6, 4, seed);
            let mnf = k.minimal_nonfaces().unwrap();
            let mut expected = Vec::new();
            for mask in 0u64..(1 << 6) {
                let set: Vec<u32> = (0..6).filter(|&v| mask & (1 << v) != 0).collect();
                if k.contains(&set) {
                    continue;
                }
                let minimal = (0..set.len()).all(|i| {
                    let mut t = set.clone();
                    t.remove(i);
                    k.contains(&t)
                });
                if minimal {
                    expected.push(set);
                }
            }
            expected.sort_by(|a, b| (a.len(), a.clone()).cmp(&(b.len(), b.clone())));
            assert_eq!(mnf, expected);
        }
    }

    #[test]
    fn alexander_dual_examples() {
        let k = SimplicialComplex::from_maximal_facets(vec![1, 2, 3], vec![vec![1], vec![2]]);
        let dual = k.alexander_dual().unwrap();
        assert_eq!(facet_sets(&dual), vec![vec![1, 2], vec![3]]);

        let empty = SimplicialComplex::empty_complex(vec![1, 2, 3]);
        let dual = empty.alexander_dual().unwrap();
        assert_eq!(facet_sets(&dual), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);

        let full = SimplicialComplex::full_simplex(vec![0, 1, 2]);
        assert!(full.alexander_dual().unwrap().is_void());

        let void = SimplicialComplex::void(vec![0, 1, 2]);
        assert_eq!(void.alexander_dual().unwrap(), full);
    }

    #[test]
    fn alexander_dual_involution() {
        // Exhaustive over all antichains is overkill; random generated
        // complexes on small grounds cover the involution well.
        for ground in 2..=5u32 {
            for seed in 0..40u64 {
                let k = crate::corpus::random_complex(ground, 3, seed);
                assert_eq!(k.alexander_dual().unwrap().alexander_dual().unwrap(), k);
            }
        }
        for seed in 0..40u64 {
            let k = crate::corpus::random_complex(8, 5, seed);
            assert_eq!(k.alexander_dual().unwrap().alexander_dual().unwrap(), k);
        }
    }

    #[test]
    fn join_and_suspension() {
        let empty = SimplicialComplex::empty_complex(vec![]);
        let s0 = empty.suspension();
        assert_eq!(facet_sets(&s0), vec![vec![0], vec![1]]);

        let s1 = s0.suspension();
        assert_eq!(s1.facets().len(), 4);
        assert!(s1.facets().iter().all(|f| f.len() == 2));

        let void = SimplicialComplex::void(vec![]);
        let l = SimplicialComplex::full_simplex(vec![3, 4]);
        assert_eq!(void.join(&l).unwrap(), l);
    }

    #[test]
    fn link_and_deletion() {
        let boundary = SimplicialComplex::from_maximal_facets(
            vec![0, 1, 2, 3],
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
        );
        let link = boundary.link(0).unwrap();
        assert_eq!(
            facet_sets(&link),
            vec![vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        let del = boundary.deletion(0).unwrap();
        assert_eq!(facet_sets(&del), vec![vec![1, 2, 3]]);
        assert!(boundary.link(7).is_err());
    }

    #[test]
    fn nagel_reiner_examples() {
        // X = {0,1}, one y with phi(y) = {0}: K is a point, H has the
        // edge {y, 1} and isolated vertex 0.
        let (k, h) = nagel_reiner_pair(2, &[vec![0]]);
        assert_eq!(facet_sets(&k), vec![vec![0]]);
        assert_eq!(h.vertex_count(), 3);
        assert!(h.has_edge(1, 2) && h.edge_count() == 1);

        // Empty X and Y: K void, H empty.
        let (k, h) = nagel_reiner_pair(0, &[]);
        assert!(k.is_void());
        assert_eq!(h.vertex_count(), 0);
    }

    #[test]
    fn nagel_reiner_closed_neighborhood_case() {
        // phi(y) = closed neighborhood of y in the complement gives
        // K = N[complement] and H = K_2 x G under the product encoding.
        for seed in 0..30u64 {
            let g = crate::corpus::random_graph(5, 1, 2, seed);
            let comp = g.complement();
            let phi: Vec<Vec<u32>> = comp.vertices().map(|v| comp.closed_neighborhood(v)).collect();
            let (k, h) = nagel_reiner_pair(5, &phi);
            assert_eq!(k, closed_neighborhood_complex(&comp, 1));
            assert_eq!(h, g.double_cover());
        }
    }

    #[test]
    fn f_vector_and_euler() {
        let boundary = SimplicialComplex::from_maximal_facets(
            vec![0, 1, 2, 3],
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
        );
        assert_eq!(boundary.f_vector(), vec![4, 6, 4]);
        assert_eq!(boundary.euler_characteristic_reduced(), 1);
        assert_eq!(SimplicialComplex::empty_complex(vec![0]).euler_characteristic_reduced(), -1);
        assert_eq!(SimplicialComplex::void(vec![0]).euler_characteristic_reduced(), 0);
    }

    #[test]
    fn closed_neighborhood_monotone_in_k() {
        for seed in 0..20u64 {
            let g = crate::corpus::random_graph(7, 1, 3, seed);
            for k in 1..=2 {
                let a = closed_neighborhood_complex(&g, k);
                let b = closed_neighborhood_complex(&g, k + 1);
                assert!(a.is_subcomplex_of(&b));
            }
        }
    }

    #[test]
    fn facets_form_antichain_after_constructions() {
        for seed in 0..20u64 {
            let g = crate::corpus::random_graph(6, 1, 2, seed);
            for k in [
                closed_neighborhood_complex(&g, 1),
                open_neighborhood_complex(&g),
                independence_complex(&g),
                clique_complex(&g),
            ] {
                let fs = k.facets();
                for (i, s) in fs.iter().enumerate() {
                    for (j, t) in fs.iter().enumerate() {
                        if i != j {
                            assert!(!s.iter().all(|v| t.binary_search(v).is_ok()));
                        }
                    }
                }
            }
        }
    }
}
