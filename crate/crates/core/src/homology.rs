//! Exact reduced simplicial homology over the integers and over fields.
//!
//! The main engine is Smith normal form on sparse integer boundary
//! matrices with unbounded-precision entries. A dense GF(2) eliminator
//! with its own simplex enumeration serves as an independent oracle.
//! Dimension -1 is included throughout via the augmentation map, so the
//! complex `{∅}` has one Z in dimension -1 and the void complex is zero
//! everywhere.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::complex::SimplicialComplex;
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl SparseIntMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseIntMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, BigInt)>,
    ) -> Self {
        let mut m = SparseIntMatrix::new(rows, cols);
        for (r, c, v) in entries {
            m.set(r, c, v);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        assert!(r < self.rows && c < self.cols, "entry out of range");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &BigInt)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Matrix product, used only by the boundary-composition check.
    pub fn multiply(&self, other: &SparseIntMatrix) -> SparseIntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut by_row: BTreeMap<usize, Vec<(usize, &BigInt)>> = BTreeMap::new();
        for (&(r, c), v) in &other.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut result = SparseIntMatrix::new(self.rows, other.cols);
        for (&(r, k), a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(c, b) in row {
                    let cur = result.get(r, c) + a * b;
                    result.set(r, c, cur);
                }
            }
        }
        result
    }
}

/// Nonzero invariant factors d1 | d2 | ... of an integer matrix.
///
/// Elimination keeps both a row-major store and a column-to-rows index
/// so row and column operations are both cheap. The pivot is always an
/// active entry of smallest absolute value (ties broken by coordinate
/// order); clearing uses Euclidean steps, so entries shrink instead of
/// exploding. Divisibility of the resulting diagonal is restored at the
/// end by pairwise gcd/lcm exchanges, which preserve the equivalence
/// class of the diagonal matrix.
pub fn smith_normal_form(m: &SparseIntMatrix) -> Vec<BigInt> {
    let mut work = SnfWork::new(m);
    let mut diagonal: Vec<BigInt> = Vec::new();
    while let Some((r, c)) = work.best_pivot() {
        let (r, c) = work.clear_cross(r, c);
        diagonal.push(work.take(r, c).abs());
        work.retire(r, c);
    }
    normalize_divisibility(diagonal)
}

struct SnfWork {
    rows: Vec<BTreeMap<usize, BigInt>>,
    col_rows: Vec<BTreeSet<usize>>,
    active_rows: BTreeSet<usize>,
    active_cols: BTreeSet<usize>,
}

impl SnfWork {
    fn new(m: &SparseIntMatrix) -> Self {
        let mut rows: Vec<BTreeMap<usize, BigInt>> = vec![BTreeMap::new(); m.rows];
        let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.cols];
        for (&(r, c), v) in &m.entries {
            rows[r].insert(c, v.clone());
            col_rows[c].insert(r);
        }
        SnfWork {
            rows,
            col_rows,
            active_rows: (0..m.rows).collect(),
            active_cols: (0..m.cols).collect(),
        }
    }

    fn get(&self, r: usize, c: usize) -> BigInt {
        self.rows[r].get(&c).cloned().unwrap_or_else(BigInt::zero)
    }

    fn set(&mut self, r: usize, c: usize, v: BigInt) {
        if v.is_zero() {
            self.rows[r].remove(&c);
            self.col_rows[c].remove(&r);
        } else {
            self.rows[r].insert(c, v);
            self.col_rows[c].insert(r);
        }
    }

    fn take(&mut self, r: usize, c: usize) -> BigInt {
        let v = self.get(r, c);
        self.set(r, c, BigInt::zero());
        v
    }

    fn retire(&mut self, r: usize, c: usize) {
        debug_assert!(self.rows[r].keys().all(|k| !self.active_cols.contains(k)));
        debug_assert!(self.col_rows[c].iter().all(|k| !self.active_rows.contains(k)));
        self.active_rows.remove(&r);
        self.active_cols.remove(&c);
    }

    /// Active entry of smallest absolute value, ties by coordinates.
    fn best_pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(BigInt, usize, usize)> = None;
        for &r in &self.active_rows {
            for (&c, v) in &self.rows[r] {
                if !self.active_cols.contains(&c) {
                    continue;
                }
                let a = v.abs();
                if a.is_one() {
                    return Some((r, c));
                }
                match &best {
                    Some((b, _, _)) if *b <= a => {}
                    _ => best = Some((a, r, c)),
                }
            }
        }
        best.map(|(_, r, c)| (r, c))
    }

    /// row[dst] -= q * row[src]
    fn row_op(&mut self, dst: usize, src: usize, q: &BigInt) {
        let src_row: Vec<(usize, BigInt)> =
            self.rows[src].iter().map(|(&c, v)| (c, v.clone())).collect();
        for (c, v) in src_row {
            let new = self.get(dst, c) - q * v;
            self.set(dst, c, new);
        }
    }

    /// col[dst] -= q * col[src]
    fn col_op(&mut self, dst: usize, src: usize, q: &BigInt) {
        let src_rows: Vec<usize> = self.col_rows[src].iter().copied().collect();
        for r in src_rows {
            let v = self.get(r, src);
            let new = self.get(r, dst) - q * &v;
            self.set(r, dst, new);
        }
    }

    /// Clear the pivot's row and column by Euclidean reduction. A
    /// nonzero remainder is strictly smaller than the pivot and becomes
    /// the new pivot, so this terminates; the final pivot location is
    /// returned with its cross fully zero.
    fn clear_cross(&mut self, mut r: usize, mut c: usize) -> (usize, usize) {
        loop {
            // Column first: afterwards only row r meets column c.
            let mut column_dirty = true;
            while column_dirty {
                column_dirty = false;
                let others: Vec<usize> = self.col_rows[c]
                    .iter()
                    .copied()
                    .filter(|&x| x != r && self.active_rows.contains(&x))
                    .collect();
                for other in others {
                    let p = self.get(r, c);
                    let v = self.get(other, c);
                    if v.is_zero() {
                        continue;
                    }
                    let q = &v / &p;
                    self.row_op(other, r, &q);
                    if !self.get(other, c).is_zero() {
                        r = other;
                        column_dirty = true;
                        break;
                    }
                }
            }
            let row_entries: Vec<usize> = self.rows[r]
                .keys()
                .copied()
                .filter(|&x| x != c && self.active_cols.contains(&x))
                .collect();
            if row_entries.is_empty() {
                return (r, c);
            }
            let mut moved = false;
            for other in row_entries {
                let p = self.get(r, c);
                let v = self.get(r, other);
                if v.is_zero() {
                    continue;
                }
                let q = &v / &p;
                self.col_op(other, c, &q);
                if !self.get(r, other).is_zero() {
                    c = other;
                    moved = true;
                    break;
                }
            }
            if !moved && self.col_rows[c].iter().all(|&x| x == r || !self.active_rows.contains(&x))
            {
                return (r, c);
            }
        }
    }
}

/// Turn any diagonal of a matrix into its invariant factors: replace
/// pairs by (gcd, lcm) until each factor divides the next.
fn normalize_divisibility(mut d: Vec<BigInt>) -> Vec<BigInt> {
    d.retain(|x| !x.is_zero());
    loop {
        let mut changed = false;
        for i in 0..d.len() {
            for j in (i + 1)..d.len() {
                if (&d[j] % &d[i]).is_zero() {
                    continue;
                }
                let g = d[i].gcd(&d[j]);
                let l = (&d[i] * &d[j]) / &g;
                d[i] = g;
                d[j] = l;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    d.sort();
    d
}

/// Boundary operators of a nonvoid complex, one matrix per dimension
/// from 0 up to the top dimension. The matrix at list index d is
/// ∂_d : C_d -> C_{d-1}; index 0 holds the augmentation C_0 -> C_{-1}
/// (a single all-ones row). Consecutive composites are checked to be
/// zero.
pub fn boundary_matrices(k: &SimplicialComplex) -> Vec<SparseIntMatrix> {
    assert!(!k.is_void(), "void complex has no chain complex");
    let by_dim = k.simplices_by_dim();
    if by_dim.is_empty() {
        return Vec::new();
    }
    let mut index: Vec<BTreeMap<&[VertexId], usize>> = Vec::new();
    for level in &by_dim {
        index.push(level.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect());
    }
    let mut out: Vec<SparseIntMatrix> = Vec::new();
    let mut aug = SparseIntMatrix::new(1, by_dim[0].len());
    for c in 0..by_dim[0].len() {
        aug.set(0, c, BigInt::one());
    }
    out.push(aug);
    for d in 1..by_dim.len() {
        let mut m = SparseIntMatrix::new(by_dim[d - 1].len(), by_dim[d].len());
        for (col, simplex) in by_dim[d].iter().enumerate() {
            for (i, _) in simplex.iter().enumerate() {
                let mut face = simplex.clone();
                face.remove(i);
                let row = index[d - 1][face.as_slice()];
                let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                m.set(row, col, sign);
            }
        }
        out.push(m);
    }
    for d in 1..out.len() {
        debug_assert!(out[d - 1].multiply(&out[d]).is_zero(), "boundary composite nonzero");
    }
    out
}

/// Reduced homology groups, stored sparsely: only dimensions with a
/// nonzero group appear. Torsion is a list of invariant factors > 1 in
/// divisibility order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomologyResult {
    groups: BTreeMap<i32, (usize, Vec<BigInt>)>,
}

impl HomologyResult {
    pub fn zero() -> Self {
        HomologyResult::default()
    }

    pub fn single_sphere(dim: i32) -> Self {
        let mut groups = BTreeMap::new();
        groups.insert(dim, (1, Vec::new()));
        HomologyResult { groups }
    }

    pub fn set_group(&mut self, dim: i32, betti: usize, torsion: Vec<BigInt>) {
        debug_assert!(torsion.iter().all(|t| *t > BigInt::one()));
        debug_assert!(torsion.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
        if betti == 0 && torsion.is_empty() {
            self.groups.remove(&dim);
        } else {
            self.groups.insert(dim, (betti, torsion));
        }
    }

    pub fn betti(&self, dim: i32) -> usize {
        self.groups.get(&dim).map_or(0, |(b, _)| *b)
    }

    pub fn torsion(&self, dim: i32) -> &[BigInt] {
        self.groups.get(&dim).map_or(&[], |(_, t)| t.as_slice())
    }

    pub fn is_trivial(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn nontrivial_dims(&self) -> impl Iterator<Item = i32> + '_ {
        self.groups.keys().copied()
    }

    /// True when the result is exactly one Z in the given dimension.
    pub fn is_sphere(&self, dim: i32) -> bool {
        *self == HomologyResult::single_sphere(dim)
    }

    /// Same groups with every dimension moved up by `by` (may be
    /// negative). One suspension is `shift(1)`.
    pub fn shift(&self, by: i32) -> HomologyResult {
        HomologyResult {
            groups: self.groups.iter().map(|(&d, g)| (d + by, g.clone())).collect(),
        }
    }
}

/// Reduced integer homology of a complex, dimension -1 included.
pub fn reduced_homology_z(k: &SimplicialComplex) -> HomologyResult {
    if k.is_void() {
        return HomologyResult::zero();
    }
    if k.is_empty_complex() {
        return HomologyResult::single_sphere(-1);
    }
    if k.cone_vertex().is_some() {
        return HomologyResult::zero();
    }
    let boundaries = boundary_matrices(k);
    let factors: Vec<Vec<BigInt>> = boundaries.iter().map(smith_normal_form).collect();
    let mut result = HomologyResult::zero();
    let top = boundaries.len(); // number of chain dimensions >= 0
    for d in -1i32..top as i32 {
        let chain_rank = if d == -1 { 1 } else { boundaries[d as usize].cols() };
        let rank_out = if d == -1 { 0 } else { factors[d as usize].len() };
        let (rank_in, torsion) = if (d + 1) as usize >= top {
            (0, Vec::new())
        } else {
            let f = &factors[(d + 1) as usize];
            (f.len(), f.iter().filter(|t| !t.is_one()).cloned().collect())
        };
        let betti = chain_rank - rank_out - rank_in;
        result.set_group(d, betti, torsion);
    }
    result
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

/// Betti numbers over a field, one entry per dimension from -1 to the
/// top dimension of the complex, by exact rank computation independent
/// of the Smith normal form path.
pub fn betti_over_field(k: &SimplicialComplex, f: FieldSpec) -> BTreeMap<i32, usize> {
    let mut out = BTreeMap::new();
    if k.is_void() {
        return out;
    }
    if k.is_empty_complex() {
        out.insert(-1, 1);
        return out;
    }
    let boundaries = boundary_matrices(k);
    let ranks: Vec<usize> = boundaries.iter().map(|m| field_rank(m, f)).collect();
    let top = boundaries.len();
    for d in -1i32..top as i32 {
        let chain_rank = if d == -1 { 1 } else { boundaries[d as usize].cols() };
        let rank_out = if d == -1 { 0 } else { ranks[d as usize] };
        let rank_in = if (d + 1) as usize >= top { 0 } else { ranks[(d + 1) as usize] };
        out.insert(d, chain_rank - rank_out - rank_in);
    }
    out
}

fn field_rank(m: &SparseIntMatrix, f: FieldSpec) -> usize {
    match f {
        FieldSpec::Rationals => rational_rank(m),
        FieldSpec::Prime(p) => {
            assert!(p >= 2 && is_prime(p), "modulus must be prime");
            modular_rank(m, p)
        }
    }
}

fn rational_rank(m: &SparseIntMatrix) -> usize {
    let mut rows: Vec<BTreeMap<usize, BigRational>> = vec![BTreeMap::new(); m.rows()];
    for (&(r, c), v) in m.entries() {
        rows[r].insert(c, BigRational::from_integer(v.clone()));
    }
    let mut rank = 0;
    let mut used = vec![false; m.rows()];
    for col in 0..m.cols() {
        let Some(pivot) = (0..m.rows()).find(|&r| !used[r] && rows[r].contains_key(&col)) else {
            continue;
        };
        used[pivot] = true;
        rank += 1;
        let pval = rows[pivot][&col].clone();
        let prow: Vec<(usize, BigRational)> =
            rows[pivot].iter().map(|(&c, v)| (c, v / &pval)).collect();
        for r in 0..m.rows() {
            if used[r] || !rows[r].contains_key(&col) {
                continue;
            }
            let factor = rows[r][&col].clone();
            for (c, v) in &prow {
                let new = rows[r].get(c).cloned().unwrap_or_else(BigRational::zero)
                    - &factor * v;
                if new.is_zero() {
                    rows[r].remove(c);
                } else {
                    rows[r].insert(*c, new);
                }
            }
        }
    }
    rank
}

fn modular_rank(m: &SparseIntMatrix, p: u64) -> usize {
    let reduce = |v: &BigInt| -> u64 {
        let r = v.mod_floor(&BigInt::from(p));
        let (_, digits) = r.to_u64_digits();
        digits.first().copied().unwrap_or(0)
    };
    let mut rows: Vec<BTreeMap<usize, u64>> = vec![BTreeMap::new(); m.rows()];
    for (&(r, c), v) in m.entries() {
        let x = reduce(v);
        if x != 0 {
            rows[r].insert(c, x);
        }
    }
    let mulmod = |a: u64, b: u64| -> u64 { ((a as u128 * b as u128) % p as u128) as u64 };
    let powmod = |mut base: u64, mut exp: u64| -> u64 {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mulmod(acc, base);
            }
            base = mulmod(base, base);
            exp >>= 1;
        }
        acc
    };
    let inv = |a: u64| powmod(a, p - 2);
    let mut rank = 0;
    let mut used = vec![false; m.rows()];
    for col in 0..m.cols() {
        let Some(pivot) = (0..m.rows()).find(|&r| !used[r] && rows[r].contains_key(&col)) else {
            continue;
        };
        used[pivot] = true;
        rank += 1;
        let pinv = inv(rows[pivot][&col]);
        let prow: Vec<(usize, u64)> =
            rows[pivot].iter().map(|(&c, &v)| (c, mulmod(v, pinv))).collect();
        for r in 0..m.rows() {
            if used[r] || !rows[r].contains_key(&col) {
                continue;
            }
            let factor = rows[r][&col];
            for &(c, v) in &prow {
                let sub = mulmod(factor, v);
                let cur = rows[r].get(&c).copied().unwrap_or(0);
                let new = (cur + p - sub) % p;
                if new == 0 {
                    rows[r].remove(&c);
                } else {
                    rows[r].insert(c, new);
                }
            }
        }
    }
    rank
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    TooLarge { simplices: usize, bound: usize },
}

/// GF(2) Betti numbers by dense bitset elimination, with its own
/// subset-enumeration of simplices; shares nothing with the sparse
/// engine. Returns entries for dimensions -1 through top.
pub fn brute_force_homology_gf2(
    k: &SimplicialComplex,
    bound: usize,
) -> Result<BTreeMap<i32, usize>, OracleError> {
    let mut out = BTreeMap::new();
    if k.is_void() {
        return Ok(out);
    }
    // Enumerate every subset of every facet directly.
    let mut simplices: BTreeSet<Vec<VertexId>> = BTreeSet::new();
    let mut total: usize = 0;
    for f in k.facets() {
        assert!(f.len() <= 24, "facet too large for dense oracle");
        for mask in 0u64..(1 << f.len()) {
            let s: Vec<VertexId> =
                (0..f.len()).filter(|&i| mask & (1 << i) != 0).map(|i| f[i]).collect();
            if simplices.insert(s) {
                total += 1;
                if total > bound {
                    return Err(OracleError::TooLarge { simplices: total, bound });
                }
            }
        }
    }
    let top_len = simplices.iter().map(|s| s.len()).max().unwrap();
    if top_len == 0 {
        out.insert(-1, 1);
        return Ok(out);
    }
    let mut by_dim: Vec<Vec<Vec<VertexId>>> = vec![Vec::new(); top_len];
    for s in simplices {
        if !s.is_empty() {
            by_dim[s.len() - 1].push(s);
        }
    }
    let index: Vec<BTreeMap<Vec<VertexId>, usize>> = by_dim
        .iter()
        .map(|level| level.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
        .collect();
    // ranks[d] = rank of the boundary out of dimension d, augmentation at 0.
    let mut ranks: Vec<usize> = Vec::new();
    {
        // Augmentation: one all-ones row over GF(2).
        ranks.push(if by_dim[0].is_empty() { 0 } else { 1 });
    }
    for d in 1..top_len {
        let n_cols = by_dim[d].len();
        let n_rows = by_dim[d - 1].len();
        let words = n_rows.div_ceil(64);
        let mut columns: Vec<Vec<u64>> = Vec::with_capacity(n_cols);
        for simplex in &by_dim[d] {
            let mut col = vec![0u64; words];
            for i in 0..simplex.len() {
                let mut face = simplex.clone();
                face.remove(i);
                let row = index[d - 1][&face];
                col[row / 64] ^= 1 << (row % 64);
            }
            columns.push(col);
        }
        ranks.push(gf2_rank(&mut columns));
    }
    for dd in -1i32..top_len as i32 {
        let chain_rank = if dd == -1 { 1 } else { by_dim[dd as usize].len() };
        let rank_out = if dd == -1 { 0 } else { ranks[dd as usize] };
        let rank_in = if (dd + 1) as usize >= top_len { 0 } else { ranks[(dd + 1) as usize] };
        out.insert(dd, chain_rank - rank_out - rank_in);
    }
    Ok(out)
}

fn gf2_rank(columns: &mut [Vec<u64>]) -> usize {
    let mut rank = 0;
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (column index, bit position)
    for i in 0..columns.len() {
        for &(j, bit) in &pivots {
            if columns[i][bit / 64] & (1 << (bit % 64)) != 0 {
                let src = columns[j].clone();
                for (w, s) in columns[i].iter_mut().zip(src) {
                    *w ^= s;
                }
            }
        }
        if let Some(bit) = lowest_set_bit(&columns[i]) {
            pivots.push((i, bit));
            rank += 1;
        }
    }
    rank
}

fn lowest_set_bit(words: &[u64]) -> Option<usize> {
    for (i, &w) in words.iter().enumerate() {
        if w != 0 {
            return Some(i * 64 + w.trailing_zeros() as usize);
        }
    }
    None
}

/// Invariant factors (> 1, divisibility chain) of a direct sum of
/// cyclic groups of the given orders.
pub fn invariant_factors_from_cyclic(orders: impl IntoIterator<Item = BigInt>) -> Vec<BigInt> {
    let orders: Vec<BigInt> = orders.into_iter().filter(|t| !t.is_one()).collect();
    normalize_divisibility(orders)
}

/// Reduced homology of a join via the Kunneth formula:
/// H̃_n(K * L) = Σ_{i+j=n-1} H̃_i ⊗ H̃_j  ⊕  Σ_{i+j=n-2} Tor(H̃_i, H̃_j).
/// Valid over Z because every group involved is finitely generated.
pub fn join_homology(a: &HomologyResult, b: &HomologyResult) -> HomologyResult {
    let mut betti: BTreeMap<i32, usize> = BTreeMap::new();
    let mut torsion: BTreeMap<i32, Vec<BigInt>> = BTreeMap::new();
    for i in a.nontrivial_dims().collect::<Vec<_>>() {
        for j in b.nontrivial_dims().collect::<Vec<_>>() {
            let (ba, ta) = (a.betti(i), a.torsion(i));
            let (bb, tb) = (b.betti(j), b.torsion(j));
            let n = i + j + 1;
            // Tensor: free x free stays free; free x cyclic copies the
            // cyclic part; cyclic x cyclic gives Z/gcd.
            *betti.entry(n).or_default() += ba * bb;
            let t = torsion.entry(n).or_default();
            for s in ta {
                for _ in 0..bb {
                    t.push(s.clone());
                }
            }
            for s in tb {
                for _ in 0..ba {
                    t.push(s.clone());
                }
            }
            for s in ta {
                for u in tb {
                    t.push(s.gcd(u));
                }
            }
            // Tor(Z/s, Z/u) = Z/gcd(s,u), one dimension lower in the join.
            let t2 = torsion.entry(n + 1).or_default();
            for s in ta {
                for u in tb {
                    t2.push(s.gcd(u));
                }
            }
        }
    }
    let mut result = HomologyResult::zero();
    let dims: BTreeSet<i32> = betti.keys().chain(torsion.keys()).copied().collect();
    for d in dims {
        let b = betti.get(&d).copied().unwrap_or(0);
        let t = invariant_factors_from_cyclic(torsion.remove(&d).unwrap_or_default());
        result.set_group(d, b, t);
    }
    result
}

/// Homology of the independence complex of a graph, splitting into
/// connected components first: the independence complex of a disjoint
/// union is the join of the pieces, so the component results combine
/// by the Kunneth formula. Isolated vertices cone the whole complex.
pub fn independence_complex_homology(g: &Graph) -> HomologyResult {
    if g.vertices().any(|v| g.degree(v) == 0) {
        return HomologyResult::zero();
    }
    let components = g.components();
    if components.is_empty() {
        // Independence complex of the empty graph is {∅}.
        return HomologyResult::single_sphere(-1);
    }
    let mut acc: Option<HomologyResult> = None;
    for comp in components {
        let sub = g.induced_subgraph(&comp);
        let h = reduced_homology_z(&crate::complex::independence_complex(&sub));
        if h.is_trivial() {
            return HomologyResult::zero();
        }
        acc = Some(match acc {
            None => h,
            Some(prev) => join_homology(&prev, &h),
        });
    }
    acc.unwrap()
}
