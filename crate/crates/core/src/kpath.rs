//! The closed k-homotopy calculus on paths: relations (A) and (B)_k for
//! graph paths, the Gamma_k loop moves for digraph paths, bounded
//! equivalence search, and the two maps between edge-paths in the closed
//! k-neighborhood complex and based graph paths.
//!
//! Everything that claims equivalence produces a witness chain that is
//! replayed against the literal move validators; searches are bounded
//! and return inconclusive rather than guessing.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Digraph, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KpathError {
    InvalidStep { position: usize, from: VertexId, to: VertexId },
    LengthMismatch,
    EmptyPath,
    EndpointMismatch,
    NotSymmetric,
    NotASimplexStep(VertexId, VertexId),
    TooLarge,
}

impl fmt::Display for KpathError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KpathError::InvalidStep { position, from, to } => {
                write!(f, "step {position} from {from} to {to} is not legal")
            }
            KpathError::LengthMismatch => write!(f, "vertex and orientation counts disagree"),
            KpathError::EmptyPath => write!(f, "a path needs at least one vertex"),
            KpathError::EndpointMismatch => write!(f, "paths do not share endpoints"),
            KpathError::NotSymmetric => write!(f, "digraph is not symmetric"),
            KpathError::NotASimplexStep(u, v) => {
                write!(f, "{{{u},{v}}} is not a simplex of the k-neighborhood complex")
            }
            KpathError::TooLarge => write!(f, "instance exceeds the supported size caps"),
        }
    }
}

/// A path in a graph: consecutive vertices are equal or adjacent
/// (stationary steps are legal graph-map steps).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GraphPath {
    vertices: Vec<VertexId>,
}

impl GraphPath {
    pub fn new(g: &Graph, vertices: Vec<VertexId>) -> Result<Self, KpathError> {
        if vertices.is_empty() {
            return Err(KpathError::EmptyPath);
        }
        for (i, w) in vertices.windows(2).enumerate() {
            if !g.adjacent_or_equal(w[0], w[1]) {
                return Err(KpathError::InvalidStep { position: i, from: w[0], to: w[1] });
            }
        }
        Ok(GraphPath { vertices })
    }

    pub fn constant(v: VertexId) -> Self {
        GraphPath { vertices: vec![v] }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Number of steps, one less than the vertex count.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    pub fn reverse(&self) -> GraphPath {
        GraphPath { vertices: self.vertices.iter().rev().copied().collect() }
    }

    pub fn concat(&self, other: &GraphPath) -> GraphPath {
        assert_eq!(self.end(), other.start(), "concatenation endpoints disagree");
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        GraphPath { vertices }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum StepDir {
    Forward,
    Backward,
}

impl StepDir {
    fn flipped(self) -> StepDir {
        match self {
            StepDir::Forward => StepDir::Backward,
            StepDir::Backward => StepDir::Forward,
        }
    }
}

/// A path in a digraph: each step is stationary or follows an arc in
/// the flagged direction (a Forward step i-1 -> i uses the arc
/// (from, to); a Backward step uses (to, from)).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DigraphPath {
    vertices: Vec<VertexId>,
    orientations: Vec<StepDir>,
}

fn digraph_step_ok(x: &Digraph, from: VertexId, to: VertexId, dir: StepDir) -> bool {
    from == to
        || match dir {
            StepDir::Forward => x.has_arc(from, to),
            StepDir::Backward => x.has_arc(to, from),
        }
}

impl DigraphPath {
    pub fn new(
        x: &Digraph,
        vertices: Vec<VertexId>,
        orientations: Vec<StepDir>,
    ) -> Result<Self, KpathError> {
        if vertices.is_empty() {
            return Err(KpathError::EmptyPath);
        }
        if orientations.len() + 1 != vertices.len() {
            return Err(KpathError::LengthMismatch);
        }
        for (i, w) in vertices.windows(2).enumerate() {
            if !digraph_step_ok(x, w[0], w[1], orientations[i]) {
                return Err(KpathError::InvalidStep { position: i, from: w[0], to: w[1] });
            }
        }
        Ok(DigraphPath { vertices, orientations })
    }

    pub fn constant(v: VertexId) -> Self {
        DigraphPath { vertices: vec![v], orientations: Vec::new() }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn orientations(&self) -> &[StepDir] {
        &self.orientations
    }

    pub fn len(&self) -> usize {
        self.orientations.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// All one-move neighbors of a path under relations (A) and (B)_k with
/// both endpoints held fixed: stationary insertions and deletions, and
/// same-length rewrites of a window with at most k-1 interior changed
/// positions.
pub fn moves_graph(g: &Graph, p: &GraphPath, k: usize) -> Vec<GraphPath> {
    assert!(k >= 2, "the relation is defined for k >= 2");
    let vs = p.vertices();
    let n = p.len();
    let mut out: BTreeSet<GraphPath> = BTreeSet::new();
    // (A) insertions: duplicate the vertex at any position.
    for x in 0..=n {
        let mut w = vs.to_vec();
        w.insert(x + 1, vs[x]);
        out.insert(GraphPath { vertices: w });
    }
    // (A) deletions: drop one half of a stationary pair.
    for x in 0..n {
        if vs[x] == vs[x + 1] && n >= 1 && vs.len() > 1 {
            let mut w = vs.to_vec();
            w.remove(x + 1);
            if !w.is_empty() {
                out.insert(GraphPath { vertices: w });
            }
        }
    }
    // (B)_k rewrites: positions strictly between i0 and i0+k may change,
    // except the endpoints of the whole path.
    for i0 in 0..n {
        let free: Vec<usize> =
            ((i0 + 1)..(i0 + k).min(n)).filter(|&i| i >= 1 && i < n).collect();
        if free.is_empty() {
            continue;
        }
        rewrite_windows(g, vs, &free, 0, &mut vs.to_vec(), &mut out);
    }
    out.remove(p);
    out.into_iter().collect()
}

fn rewrite_windows(
    g: &Graph,
    original: &[VertexId],
    free: &[usize],
    idx: usize,
    current: &mut Vec<VertexId>,
    out: &mut BTreeSet<GraphPath>,
) {
    if idx == free.len() {
        if current.windows(2).all(|w| g.adjacent_or_equal(w[0], w[1])) {
            out.insert(GraphPath { vertices: current.clone() });
        }
        return;
    }
    let pos = free[idx];
    let saved = current[pos];
    for v in g.vertices() {
        current[pos] = v;
        // Prune: the step into this position must already be legal.
        if pos >= 1 && !g.adjacent_or_equal(current[pos - 1], v) {
            continue;
        }
        rewrite_windows(g, original, free, idx + 1, current, out);
    }
    current[pos] = saved;
}

fn is_one_move_graph(g: &Graph, a: &GraphPath, b: &GraphPath, k: usize) -> bool {
    moves_graph(g, a, k).contains(b) || moves_graph(g, b, k).contains(a)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence<P> {
    Equivalent(Vec<P>),
    Inconclusive,
}

/// Bidirectional breadth-first search for a chain of (A)/(B)_k moves
/// between two paths with the same endpoints. A found chain is replayed
/// move by move before being returned; exceeding either budget yields
/// Inconclusive.
pub fn bounded_equivalence_graph(
    g: &Graph,
    a: &GraphPath,
    b: &GraphPath,
    k: usize,
    max_len: usize,
    max_states: usize,
) -> Equivalence<GraphPath> {
    assert!(k >= 2, "the relation is defined for k >= 2");
    if a.start() != b.start() || a.end() != b.end() {
        return Equivalence::Inconclusive;
    }
    if a == b {
        return Equivalence::Equivalent(vec![a.clone()]);
    }
    let mut from_a: BTreeMap<GraphPath, Option<GraphPath>> = BTreeMap::new();
    let mut from_b: BTreeMap<GraphPath, Option<GraphPath>> = BTreeMap::new();
    from_a.insert(a.clone(), None);
    from_b.insert(b.clone(), None);
    let mut queue_a: VecDeque<GraphPath> = VecDeque::from([a.clone()]);
    let mut queue_b: VecDeque<GraphPath> = VecDeque::from([b.clone()]);
    let mut states = 2usize;
    let meet: Option<GraphPath> = 'search: loop {
        let expand_a = queue_a.len() <= queue_b.len();
        let (queue, seen, other) = if expand_a {
            (&mut queue_a, &mut from_a, &from_b)
        } else {
            (&mut queue_b, &mut from_b, &from_a)
        };
        let Some(state) = queue.pop_front() else { break 'search None };
        for next in moves_graph(g, &state, k) {
            if next.len() > max_len || seen.contains_key(&next) {
                continue;
            }
            seen.insert(next.clone(), Some(state.clone()));
            states += 1;
            if other.contains_key(&next) {
                break 'search Some(next);
            }
            if states >= max_states {
                break 'search None;
            }
            queue.push_back(next);
        }
    };
    let Some(mid) = meet else { return Equivalence::Inconclusive };
    let mut chain: Vec<GraphPath> = Vec::new();
    let mut cur = Some(mid.clone());
    while let Some(p) = cur {
        cur = from_a[&p].clone();
        chain.push(p);
    }
    chain.reverse();
    let mut cur = from_b[&mid].clone();
    while let Some(p) = cur {
        cur = from_b[&p].clone();
        chain.push(p);
    }
    for w in chain.windows(2) {
        assert!(is_one_move_graph(g, &w[0], &w[1], k), "witness chain failed replay");
    }
    assert_eq!(chain.first(), Some(a));
    assert_eq!(chain.last(), Some(b));
    Equivalence::Equivalent(chain)
}

/// The orientation pattern of rho_x on Gamma_k: k forward steps then k
/// backward steps, rotated so the loop starts at the chosen vertex.
fn rho_patterns(k: usize) -> Vec<Vec<StepDir>> {
    let base: Vec<StepDir> = (0..2 * k)
        .map(|i| if i < k { StepDir::Forward } else { StepDir::Backward })
        .collect();
    let mut out = Vec::new();
    for rot in 0..2 * k {
        let mut p = base[rot..].to_vec();
        p.extend_from_slice(&base[..rot]);
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// Is the given segment (vertices of length s+1 with s orientations,
/// equal first and last vertex) the image h . rho_x of a digraph map
/// h: Gamma_s -> X? Since rho_x traverses every arc of Gamma_s exactly
/// once, this holds iff the orientation pattern is a rotation of
/// (forward^k, backward^k) and every step is legal in X.
fn is_gamma_loop(x: &Digraph, vertices: &[VertexId], orientations: &[StepDir], k: usize) -> bool {
    let s = orientations.len();
    if vertices.len() != s + 1 || vertices[0] != vertices[s] {
        return false;
    }
    let steps_ok = vertices
        .windows(2)
        .zip(orientations)
        .all(|(w, &d)| digraph_step_ok(x, w[0], w[1], d));
    if !steps_ok {
        return false;
    }
    if s == 1 {
        return vertices[0] == vertices[1];
    }
    s == 2 * k && rho_patterns(k).iter().any(|p| p.as_slice() == orientations)
}

/// All results of inserting a loop h . rho_x at the given anchor
/// position (s = 0 stationary loops and s = k Gamma-loops), together
/// with the reverse deletions. Capped at 8 vertices and k <= 3.
pub fn gamma_moves_digraph(
    x: &Digraph,
    p: &DigraphPath,
    k: usize,
    anchor: usize,
) -> Result<Vec<DigraphPath>, KpathError> {
    if x.vertex_count() > 8 || k > 3 || k == 0 {
        return Err(KpathError::TooLarge);
    }
    assert!(anchor <= p.len(), "anchor out of range");
    let base = p.vertices()[anchor];
    let mut out: BTreeSet<DigraphPath> = BTreeSet::new();
    let mut insert = |loop_vs: &[VertexId], loop_os: &[StepDir]| {
        let mut vertices = p.vertices()[..anchor].to_vec();
        vertices.extend_from_slice(loop_vs);
        vertices.extend_from_slice(&p.vertices()[anchor + 1..]);
        let mut orientations = p.orientations()[..anchor].to_vec();
        orientations.extend_from_slice(loop_os);
        orientations.extend_from_slice(&p.orientations()[anchor..]);
        out.insert(DigraphPath { vertices, orientations });
    };
    // s = 0: a single stationary step, either flag.
    insert(&[base, base], &[StepDir::Forward]);
    insert(&[base, base], &[StepDir::Backward]);
    // s = k: enumerate loops of length 2k at the anchor vertex by
    // backtracking over the intermediate vertices for each rotation of
    // the rho orientation pattern.
    for pattern in rho_patterns(k) {
        let mut vertices = vec![base; 2 * k + 1];
        enumerate_loops(x, &pattern, 1, &mut vertices, &mut |vs| {
            let mut f = |loop_vs: &[VertexId], loop_os: &[StepDir]| {
                let mut vertices2 = p.vertices()[..anchor].to_vec();
                vertices2.extend_from_slice(loop_vs);
                vertices2.extend_from_slice(&p.vertices()[anchor + 1..]);
                let mut orientations2 = p.orientations()[..anchor].to_vec();
                orientations2.extend_from_slice(loop_os);
                orientations2.extend_from_slice(&p.orientations()[anchor..]);
                out.insert(DigraphPath { vertices: vertices2, orientations: orientations2 });
            };
            f(vs, &pattern);
        });
    }
    // Deletions anchored here: a loop starting at this position whose
    // removal leaves a valid path.
    for s in [1usize, 2 * k] {
        if anchor + s > p.len() {
            continue;
        }
        let seg_vs = &p.vertices()[anchor..=anchor + s];
        let seg_os = &p.orientations()[anchor..anchor + s];
        let legal = if s == 1 {
            seg_vs[0] == seg_vs[1]
        } else {
            is_gamma_loop(x, seg_vs, seg_os, k)
        };
        if legal {
            let mut vertices = p.vertices()[..anchor].to_vec();
            vertices.extend_from_slice(&p.vertices()[anchor + s..]);
            let mut orientations = p.orientations()[..anchor].to_vec();
            orientations.extend_from_slice(&p.orientations()[anchor + s..]);
            out.insert(DigraphPath { vertices, orientations });
        }
    }
    out.remove(p);
    Ok(out.into_iter().collect())
}

fn enumerate_loops(
    x: &Digraph,
    pattern: &[StepDir],
    pos: usize,
    vertices: &mut Vec<VertexId>,
    emit: &mut dyn FnMut(&[VertexId]),
) {
    if pos == pattern.len() {
        if digraph_step_ok(x, vertices[pos - 1], vertices[pos], pattern[pos - 1]) {
            emit(vertices);
        }
        return;
    }
    for v in 0..x.vertex_count() {
        if !digraph_step_ok(x, vertices[pos - 1], v, pattern[pos - 1]) {
            continue;
        }
        vertices[pos] = v;
        enumerate_loops(x, pattern, pos + 1, vertices, emit);
    }
    vertices[pos] = vertices[0];
}

/// One Gamma move apart: q arises from p by inserting or deleting an
/// s = 0 or s = k loop somewhere.
pub fn is_gamma_move(x: &Digraph, p: &DigraphPath, q: &DigraphPath, k: usize) -> bool {
    let (short, long) = if p.len() <= q.len() { (p, q) } else { (q, p) };
    let diff = long.len() - short.len();
    if diff != 1 && diff != 2 * k {
        return false;
    }
    for anchor in 0..=short.len() {
        if short.vertices()[..anchor] != long.vertices()[..anchor]
            || short.orientations()[..anchor] != long.orientations()[..anchor]
        {
            continue;
        }
        if short.vertices()[anchor..] != long.vertices()[anchor + diff..]
            || short.orientations()[anchor..] != long.orientations()[anchor + diff..]
        {
            continue;
        }
        let seg_vs = &long.vertices()[anchor..=anchor + diff];
        let seg_os = &long.orientations()[anchor..anchor + diff];
        let ok = if diff == 1 { seg_vs[0] == seg_vs[1] } else { is_gamma_loop(x, seg_vs, seg_os, k) };
        if ok {
            return true;
        }
    }
    false
}

/// Constructive certificate that a digraph path in a symmetric digraph
/// is Gamma-2-equivalent to the path with the same vertices and the
/// given target orientations. Each orientation flip is realized by six
/// literal moves following the published reversal argument: insert a
/// Gamma_2 loop, strip its stationary steps, re-pad on the other side,
/// and delete the mirrored Gamma_2 loop.
pub fn reversal_equivalence_certificate(
    x: &Digraph,
    p: &DigraphPath,
    target: &[StepDir],
) -> Result<Vec<DigraphPath>, KpathError> {
    if !x.is_symmetric() {
        return Err(KpathError::NotSymmetric);
    }
    if target.len() != p.len() {
        return Err(KpathError::LengthMismatch);
    }
    let mut chain: Vec<DigraphPath> = vec![p.clone()];
    for i in 0..p.len() {
        let current = chain.last().unwrap().clone();
        if current.orientations()[i] == target[i] {
            continue;
        }
        let segment = match current.orientations()[i] {
            StepDir::Forward => flip_forward_step(x, &current, i),
            StepDir::Backward => {
                // Flip the target path's forward step instead and walk
                // the resulting chain backwards.
                let mut flipped = current.clone();
                flipped.orientations[i] = StepDir::Forward;
                debug_assert!(DigraphPath::new(
                    x,
                    flipped.vertices.clone(),
                    flipped.orientations.clone()
                )
                .is_ok());
                let mut seg = flip_forward_step(x, &flipped, i);
                seg.reverse();
                seg.push(flipped);
                seg.remove(0);
                seg
            }
        };
        chain.extend(segment);
    }
    for w in chain.windows(2) {
        assert!(is_gamma_move(x, &w[0], &w[1], 2), "certificate failed replay");
    }
    Ok(chain)
}

/// The six intermediate paths that flip step i of p from Forward to
/// Backward, ending at the flipped path. Writing a for p(i) and b for
/// p(i+1), the chain inserts the loop (b,a,a,b,b) after b, deletes its
/// two stationary steps, inserts two backward stationary steps at a,
/// and deletes the loop (a,b,a,a,a) sitting at a.
fn flip_forward_step(x: &Digraph, p: &DigraphPath, i: usize) -> Vec<DigraphPath> {
    use StepDir::{Backward, Forward};
    let a = p.vertices()[i];
    let b = p.vertices()[i + 1];
    let prefix_vs = &p.vertices()[..=i];
    let suffix_vs = &p.vertices()[i + 1..];
    let prefix_os = &p.orientations()[..i];
    let suffix_os = &p.orientations()[i + 1..];
    let build = |mid_vs: &[VertexId], mid_os: &[StepDir]| -> DigraphPath {
        // mid runs from a to b inclusive, replacing the single step.
        let mut vertices = prefix_vs.to_vec();
        vertices.extend_from_slice(&mid_vs[1..]);
        vertices.extend_from_slice(&suffix_vs[1..]);
        let mut orientations = prefix_os.to_vec();
        orientations.extend_from_slice(mid_os);
        orientations.extend_from_slice(suffix_os);
        let q = DigraphPath { vertices, orientations };
        debug_assert!(
            DigraphPath::new(x, q.vertices.clone(), q.orientations.clone()).is_ok(),
            "constructed path invalid"
        );
        q
    };
    vec![
        // Insert Gamma_2 loop (b,a,a,b,b) with pattern (f,f,b,b) after b.
        build(
            &[a, b, a, a, b, b],
            &[Forward, Forward, Forward, Backward, Backward],
        ),
        // Delete the stationary forward step a -> a (s = 0).
        build(&[a, b, a, b, b], &[Forward, Forward, Backward, Backward]),
        // Delete the stationary backward step b -> b (s = 0).
        build(&[a, b, a, b], &[Forward, Forward, Backward]),
        // Insert a backward stationary step at the middle a.
        build(&[a, b, a, a, b], &[Forward, Forward, Backward, Backward]),
        // Insert another backward stationary step at a.
        build(&[a, b, a, a, a, b], &[Forward, Forward, Backward, Backward, Backward]),
        // Delete the Gamma_2 loop (a,b,a,a,a) with pattern (f,f,b,b).
        build(&[a, b], &[Backward]),
    ]
}

/// Which vertex certifies an edge-path step: the smallest (or largest)
/// vertex whose closed k-neighborhood contains both endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessPolicy {
    SmallestId,
    LargestId,
}

fn find_witness(
    g: &Graph,
    u: VertexId,
    v: VertexId,
    k: u32,
    policy: WitnessPolicy,
) -> Option<VertexId> {
    let candidates = g.vertices().filter(|&w| {
        let ball = g.closed_k_neighborhood(w, k).unwrap();
        ball.contains(&u) && ball.contains(&v)
    });
    match policy {
        WitnessPolicy::SmallestId => candidates.min(),
        WitnessPolicy::LargestId => candidates.max(),
    }
}

/// A shortest path from u to w padded with stationary steps at the w
/// end to length exactly k.
fn padded_path(g: &Graph, u: VertexId, w: VertexId, k: u32) -> Vec<VertexId> {
    let mut path = g.shortest_path(u, w).expect("witness not reachable");
    debug_assert!(path.len() <= k as usize + 1);
    while path.len() < k as usize + 1 {
        path.push(w);
    }
    path
}

/// The Theorem-B map from edge-paths in the closed k-neighborhood
/// complex to graph paths: each edge-path step (u, v) becomes a length-k
/// walk u -> w and a length-k walk w -> v through a witness w.
pub fn phi_map_with_policy(
    g: &Graph,
    edge_path: &[VertexId],
    k: u32,
    policy: WitnessPolicy,
) -> Result<GraphPath, KpathError> {
    if edge_path.is_empty() {
        return Err(KpathError::EmptyPath);
    }
    let mut vertices: Vec<VertexId> = vec![edge_path[0]];
    for w in edge_path.windows(2) {
        let (u, v) = (w[0], w[1]);
        let Some(witness) = find_witness(g, u, v, k, policy) else {
            return Err(KpathError::NotASimplexStep(u, v));
        };
        let alpha = padded_path(g, u, witness, k);
        let beta: Vec<VertexId> = padded_path(g, v, witness, k).into_iter().rev().collect();
        vertices.extend_from_slice(&alpha[1..]);
        vertices.extend_from_slice(&beta[1..]);
    }
    GraphPath::new(g, vertices)
}

pub fn phi_map(g: &Graph, edge_path: &[VertexId], k: u32) -> Result<GraphPath, KpathError> {
    phi_map_with_policy(g, edge_path, k, WitnessPolicy::SmallestId)
}

/// The Theorem-B map from a based graph loop to an edge-path in the
/// closed k-neighborhood complex: pad with the basepoint to a multiple
/// of 2k and sample every 2k-th vertex. Every sampled pair lies in the
/// closed k-neighborhood of the midpoint between the samples.
pub fn psi_map(g: &Graph, p: &GraphPath, k: u32) -> Vec<VertexId> {
    assert_eq!(p.start(), p.end(), "psi expects a based loop");
    let n = p.len();
    let period = 2 * k as usize;
    let padded_len = period * n.div_ceil(period);
    let value = |i: usize| if i <= n { p.vertices()[i] } else { p.end() };
    let mut edge_path = Vec::with_capacity(padded_len / period + 1);
    for i in (0..=padded_len).step_by(period) {
        edge_path.push(value(i));
    }
    for (step, w) in edge_path.windows(2).enumerate() {
        let mid = value(step * period + k as usize);
        let ball = g.closed_k_neighborhood(mid, k).unwrap();
        assert!(
            ball.contains(&w[0]) && ball.contains(&w[1]),
            "sampled pair is not a simplex"
        );
    }
    edge_path
}
