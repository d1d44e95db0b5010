//! Edge-path group presentations of simplicial complexes, their
//! abelianization, and budget-bounded Tietze simplification.
//!
//! The presentation follows the classical recipe: pick a spanning tree
//! of the 1-skeleton of the base vertex's component, take one generator
//! per non-tree edge, and one relator per triangle. Words are sequences
//! of signed generator indices (1-based, negative = inverse).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::complex::{ComplexError, SimplicialComplex};
use crate::graph::VertexId;
use crate::homology::{smith_normal_form, SparseIntMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: usize,
    relators: Vec<Vec<i64>>,
}

impl GroupPresentation {
    pub fn new(generators: usize, relators: Vec<Vec<i64>>) -> Self {
        for w in &relators {
            for &x in w {
                assert!(x != 0 && (x.unsigned_abs() as usize) <= generators, "bad generator index");
            }
        }
        let relators = relators.into_iter().map(|w| free_reduce(&w)).collect();
        GroupPresentation { generators, relators }
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[Vec<i64>] {
        &self.relators
    }
}

fn free_reduce(word: &[i64]) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::with_capacity(word.len());
    for &x in word {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

fn cyclic_reduce(mut word: Vec<i64>) -> Vec<i64> {
    word = free_reduce(&word);
    while word.len() >= 2 && word[0] == -*word.last().unwrap() {
        word.remove(0);
        word.pop();
        word = free_reduce(&word);
    }
    word
}

fn invert(word: &[i64]) -> Vec<i64> {
    word.iter().rev().map(|&x| -x).collect()
}

/// Edge-path group presentation of the component of `base`. The
/// spanning tree is breadth-first from `base` with neighbors visited in
/// ascending id; any part of the complex outside that component is
/// ignored.
pub fn edge_path_presentation(
    k: &SimplicialComplex,
    base: VertexId,
) -> Result<GroupPresentation, ComplexError> {
    if !k.contains(&[base]) {
        return Err(ComplexError::NotAVertex(base));
    }
    let by_dim = k.simplices_by_dim();
    let edges: BTreeSet<(VertexId, VertexId)> = by_dim
        .get(1)
        .map(|level| level.iter().map(|e| (e[0], e[1])).collect())
        .unwrap_or_default();
    let mut adjacency: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for &(a, b) in &edges {
        adjacency.entry(a).or_default().push(b);
        adjacency.entry(b).or_default().push(a);
    }
    for nbrs in adjacency.values_mut() {
        nbrs.sort_unstable();
    }
    // Breadth-first spanning tree of the component of base.
    let mut tree: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let mut component: BTreeSet<VertexId> = BTreeSet::new();
    component.insert(base);
    let mut queue: Vec<VertexId> = vec![base];
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        for &w in adjacency.get(&v).map(Vec::as_slice).unwrap_or(&[]) {
            if component.insert(w) {
                tree.insert((v.min(w), v.max(w)));
                queue.push(w);
            }
        }
    }
    let mut gen_of: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    for &e in &edges {
        if component.contains(&e.0) && !tree.contains(&e) {
            let next = gen_of.len();
            gen_of.insert(e, next);
        }
    }
    // Signed generator for the oriented edge a -> b; tree edges are 1.
    let letter = |a: VertexId, b: VertexId| -> Option<i64> {
        let key = (a.min(b), a.max(b));
        gen_of.get(&key).map(|&g| if a < b { g as i64 + 1 } else { -(g as i64 + 1) })
    };
    let mut relators: Vec<Vec<i64>> = Vec::new();
    if let Some(triangles) = by_dim.get(2) {
        for t in triangles {
            if !component.contains(&t[0]) {
                continue;
            }
            let word: Vec<i64> = [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])]
                .into_iter()
                .filter_map(|(a, b)| letter(a, b))
                .collect();
            let word = cyclic_reduce(word);
            if !word.is_empty() {
                relators.push(word);
            }
        }
    }
    Ok(GroupPresentation::new(gen_of.len(), relators))
}

/// Free rank and torsion invariant factors (> 1) of the abelianization,
/// via Smith normal form of the relator exponent matrix.
pub fn abelianization_invariants(p: &GroupPresentation) -> (usize, Vec<BigInt>) {
    let mut m = SparseIntMatrix::new(p.generators, p.relators.len());
    for (col, word) in p.relators.iter().enumerate() {
        for &x in word {
            let row = (x.unsigned_abs() - 1) as usize;
            let delta = BigInt::from(x.signum());
            let cur = m.get(row, col) + delta;
            m.set(row, col, cur);
        }
    }
    let factors = smith_normal_form(&m);
    let free_rank = p.generators - factors.len();
    let torsion = factors.into_iter().filter(|f| !f.is_one()).collect();
    (free_rank, torsion)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrivialityCertificate {
    Trivial,
    Inconclusive,
}

/// Budget-bounded Tietze simplification. Moves used: free and cyclic
/// reduction, dropping empty relators, eliminating a generator that
/// occurs exactly once in some relator (substituting its expression
/// elsewhere, capped at 4x the target's length), and shortening a
/// relator by a cyclic subword of another. Returns the simplified
/// presentation; the certificate is Trivial exactly when no generators
/// remain.
pub fn tietze_simplify(
    p: &GroupPresentation,
    budget: usize,
) -> (GroupPresentation, TrivialityCertificate) {
    let mut gens = p.generators;
    let mut relators: Vec<Vec<i64>> = p.relators.iter().map(|w| cyclic_reduce(w.clone())).collect();
    let mut steps = 0usize;
    loop {
        relators.retain(|w| !w.is_empty());
        if steps >= budget {
            break;
        }
        if let Some((rel_idx, pos)) = find_single_occurrence(&relators) {
            if eliminate_generator(&mut relators, rel_idx, pos) {
                renumber_after_removal(&mut relators, &mut gens);
                steps += 1;
                continue;
            }
        }
        if substitute_subword(&mut relators) {
            steps += 1;
            continue;
        }
        break;
    }
    relators.retain(|w| !w.is_empty());
    let cert = if gens == 0 {
        TrivialityCertificate::Trivial
    } else {
        TrivialityCertificate::Inconclusive
    };
    (GroupPresentation { generators: gens, relators }, cert)
}

/// A relator position whose generator occurs exactly once in that
/// relator; shortest relators are preferred so substitutions stay small.
fn find_single_occurrence(relators: &[Vec<i64>]) -> Option<(usize, usize)> {
    let mut order: Vec<usize> = (0..relators.len()).collect();
    order.sort_by_key(|&i| relators[i].len());
    for i in order {
        for (pos, &x) in relators[i].iter().enumerate() {
            let occurrences =
                relators[i].iter().filter(|&&y| y.abs() == x.abs()).count();
            if occurrences == 1 {
                return Some((i, pos));
            }
        }
    }
    None
}

/// Remove the generator at relators[rel_idx][pos] (which occurs exactly
/// once there) by solving the relator for it and substituting. The
/// substituted generator index is marked by negating nothing: callers
/// renumber afterwards. Fails (returning false) when a substitution
/// would blow a relator past 4x its length.
fn eliminate_generator(relators: &mut Vec<Vec<i64>>, rel_idx: usize, pos: usize) -> bool {
    let word = relators[rel_idx].clone();
    let x = word[pos];
    let g = x.abs();
    // Rotate so the chosen letter is first: x * w = 1, so x = w^{-1}.
    let mut rest: Vec<i64> = word[pos + 1..].to_vec();
    rest.extend_from_slice(&word[..pos]);
    let replacement = if x > 0 { invert(&rest) } else { rest };
    let mut updated: Vec<Vec<i64>> = Vec::with_capacity(relators.len() - 1);
    for (i, w) in relators.iter().enumerate() {
        if i == rel_idx {
            continue;
        }
        if w.iter().all(|&y| y.abs() != g) {
            updated.push(w.clone());
            continue;
        }
        let mut new_word: Vec<i64> = Vec::new();
        for &y in w {
            if y.abs() == g {
                if y > 0 {
                    new_word.extend_from_slice(&replacement);
                } else {
                    new_word.extend(invert(&replacement));
                }
            } else {
                new_word.push(y);
            }
        }
        let new_word = cyclic_reduce(new_word);
        if new_word.len() > 4 * w.len().max(1) {
            return false;
        }
        updated.push(new_word);
    }
    // Mark the eliminated generator for renumbering by leaving a
    // sentinel relator holding just its index.
    updated.push(vec![g]);
    *relators = updated;
    true
}

/// After eliminate_generator the last relator is the sentinel [g]; drop
/// it, decrement indices above g, and shrink the generator count.
fn renumber_after_removal(relators: &mut Vec<Vec<i64>>, gens: &mut usize) {
    let g = relators.pop().unwrap()[0];
    for w in relators.iter_mut() {
        for y in w.iter_mut() {
            debug_assert!(y.abs() != g);
            if y.abs() > g {
                *y -= y.signum();
            }
        }
    }
    *gens -= 1;
}

/// Shorten some relator using a strictly-longer-than-half cyclic
/// subword of another relator (or its inverse).
fn substitute_subword(relators: &mut [Vec<i64>]) -> bool {
    for i in 0..relators.len() {
        for j in 0..relators.len() {
            if i == j || relators[i].is_empty() {
                continue;
            }
            let small = relators[i].clone();
            let len = small.len();
            if len > relators[j].len() {
                continue;
            }
            for inverted in [false, true] {
                let base = if inverted { invert(&small) } else { small.clone() };
                for rot in 0..len {
                    let mut u = base[rot..].to_vec();
                    u.extend_from_slice(&base[..rot]);
                    let t = len / 2 + 1;
                    let pattern = &u[..t];
                    let target = relators[j].clone();
                    if let Some(at) = find_subword(&target, pattern) {
                        // pattern = (rest of u)^-1 as group elements.
                        let mut new_word = target[..at].to_vec();
                        new_word.extend(invert(&u[t..]));
                        new_word.extend_from_slice(&target[at + t..]);
                        let new_word = cyclic_reduce(new_word);
                        if new_word.len() < target.len() {
                            relators[j] = new_word;
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

fn find_subword(haystack: &[i64], needle: &[i64]) -> Option<usize> {
    if needle.len() > haystack.len() {
        return None;
    }
    (0..=haystack.len() - needle.len()).find(|&i| &haystack[i..i + needle.len()] == needle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{closed_neighborhood_complex, SimplicialComplex};
    use crate::graph::{generate_complete, generate_cycle};
    use crate::homology::reduced_homology_z;

    fn pentagon() -> SimplicialComplex {
        SimplicialComplex::from_maximal_facets(
            (0..5).collect(),
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4], vec![0, 4]],
        )
    }

    #[test]
    fn presentation_examples() {
        let full = SimplicialComplex::full_simplex((0..5).collect());
        let p = edge_path_presentation(&full, 0).unwrap();
        assert_eq!(p.generator_count(), 6); // (n-1)(n-2)/2 for n = 5
        assert_eq!(abelianization_invariants(&p), (0, vec![]));

        let p = edge_path_presentation(&pentagon(), 0).unwrap();
        assert_eq!(p.generator_count(), 1);
        assert!(p.relators().is_empty());
        assert_eq!(abelianization_invariants(&p), (1, vec![]));

        let c5 = closed_neighborhood_complex(&generate_cycle(5).unwrap(), 1);
        let p = edge_path_presentation(&c5, 0).unwrap();
        assert_eq!(abelianization_invariants(&p), (1, vec![]));

        assert!(edge_path_presentation(&pentagon(), 9).is_err());
    }

    #[test]
    fn abelianization_examples() {
        let p = GroupPresentation::new(1, vec![vec![1, 1]]);
        assert_eq!(abelianization_invariants(&p), (0, vec![BigInt::from(2)]));
        let free2 = GroupPresentation::new(2, vec![]);
        assert_eq!(abelianization_invariants(&free2), (2, vec![]));
    }

    #[test]
    fn tietze_examples() {
        let p = GroupPresentation::new(2, vec![vec![1], vec![2]]);
        let (q, cert) = tietze_simplify(&p, 100_000);
        assert_eq!(cert, TrivialityCertificate::Trivial);
        assert_eq!(q.generator_count(), 0);

        let boundary = closed_neighborhood_complex(
            &generate_complete(2).cartesian_product(&generate_complete(2)),
            1,
        );
        let p = edge_path_presentation(&boundary, 0).unwrap();
        let (_, cert) = tietze_simplify(&p, 100_000);
        assert_eq!(cert, TrivialityCertificate::Trivial);

        let p = edge_path_presentation(&pentagon(), 0).unwrap();
        let (q, cert) = tietze_simplify(&p, 100_000);
        assert_eq!(cert, TrivialityCertificate::Inconclusive);
        assert_eq!(q.generator_count(), 1);
        assert!(q.relators().is_empty());
    }

    #[test]
    fn grid_neighborhood_complex_is_simply_connected() {
        for (m, n) in [(2u32, 2u32), (2, 3), (3, 3)] {
            let g = generate_complete(m).cartesian_product(&generate_complete(n));
            let k = closed_neighborhood_complex(&g, 1);
            let p = edge_path_presentation(&k, 0).unwrap();
            assert_eq!(abelianization_invariants(&p), (0, vec![]), "{m}x{n}");
            let (_, cert) = tietze_simplify(&p, 100_000);
            assert_eq!(cert, TrivialityCertificate::Trivial, "{m}x{n}");
        }
    }

    #[test]
    fn abelianization_matches_first_homology() {
        let mut tested = 0;
        for seed in 0..400u64 {
            let k = crate::corpus::random_complex(7, 4, seed);
            if k.is_void() || k.is_empty_complex() {
                continue;
            }
            let vs = k.vertices();
            let base = vs[0];
            let p = edge_path_presentation(&k, base).unwrap();
            // Only valid when the complex is connected with all of the
            // ground's vertices in one component.
            let comp_count = {
                let h = reduced_homology_z(&k);
                h.betti(0) + 1
            };
            if comp_count != 1 {
                continue;
            }
            let h = reduced_homology_z(&k);
            let (rank, torsion) = abelianization_invariants(&p);
            assert_eq!(rank, h.betti(1), "seed {seed}");
            assert_eq!(torsion.as_slice(), h.torsion(1), "seed {seed}");
            tested += 1;
        }
        assert!(tested >= 200, "only {tested} connected samples");
    }

    #[test]
    fn presentation_invariants_stable_under_relabeling() {
        for seed in 0..30u64 {
            let k = crate::corpus::random_complex(6, 4, seed);
            if k.is_void() || k.is_empty_complex() {
                continue;
            }
            // Relabel v -> 5 - v, a permutation of the ground 0..6.
            let facets: Vec<Vec<u32>> =
                k.facets().iter().map(|f| f.iter().map(|&v| 5 - v).collect()).collect();
            let relabeled = SimplicialComplex::from_maximal_facets((0..6).collect(), facets);
            let vs = k.vertices();
            let p = edge_path_presentation(&k, vs[0]).unwrap();
            let q = edge_path_presentation(&relabeled, 5 - vs[0]).unwrap();
            if reduced_homology_z(&k).betti(0) == 0 {
                assert_eq!(
                    abelianization_invariants(&p),
                    abelianization_invariants(&q),
                    "seed {seed}"
                );
            }
        }
    }
}
