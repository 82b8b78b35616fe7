//! Exact orientable and nonorientable genus decisions.
//!
//! The decider searches over embedding schemes by building facial walks one
//! dart side at a time. Rotation successors and edge signs are assigned
//! lazily, the moment a traversal first needs them, and a branch is cut as
//! soon as the closed faces plus an optimistic estimate for the remaining
//! dart sides cannot reach the face count the target genus requires.
//!
//! Two symmetry reductions keep the space honest but smaller: signs on a
//! spanning tree are pinned to +1 (vertex flips make any scheme equivalent
//! to such a one), and the anchor dart's rotation is canonical up to
//! reflection (mirroring every rotation preserves the face structure).

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{self, BoundReport};
use crate::embedding::{DartGraph, EdgeSign, EmbeddingScheme, GenusCertificate, RotationSystem};
use crate::graph::SimpleGraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenusError {
    #[error("genus search requires a nonempty graph")]
    EmptyGraph,
    #[error("genus search requires a connected graph; decide components separately")]
    Disconnected,
    #[error("nonorientable decisions need k >= 1; k = 0 is the sphere, use the orientable decider")]
    CrosscapRange,
    #[error("lower bound computation failed: {0}")]
    Bounds(#[from] bounds::BoundsError),
}

/// Budgets for one genus decision.
#[derive(Debug, Clone)]
pub struct SearchLimits {
    pub budget: Option<Duration>,
    pub node_limit: Option<u64>,
    pub workers: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { budget: None, node_limit: None, workers: 1 }
    }
}

#[derive(Debug, Clone)]
pub enum SearchOutcome {
    /// An embedding achieving the target was found.
    Found(GenusCertificate),
    /// The whole (reduced) scheme space was searched; no embedding exists.
    Exhausted,
    /// The budget ran out first; nothing is proven.
    TimedOut,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Orientable,
    Nonorientable,
}

const UNSET: usize = usize::MAX;

struct FoundScheme {
    succ: Vec<usize>,
    sign: Vec<i8>,
    faces: usize,
}

struct Engine<'a> {
    darts: &'a DartGraph,
    mode: Mode,
    f_target: i64,
    min_face: i64,
    total_states: usize,
    anchor: usize,
    deg: Vec<usize>,

    // partial rotation: succ/pred per dart, with open-chain tracking so a
    // vertex rotation closes into a single cycle only when complete
    succ: Vec<usize>,
    pred: Vec<usize>,
    chain_start: Vec<usize>,
    chain_end: Vec<usize>,
    links_at: Vec<usize>,

    sign: Vec<i8>, // 0 = undecided
    undecided_signs: usize,
    neg_signs: usize,

    used: Vec<bool>, // per (dart, side) state
    used_count: usize,
    faces_closed: usize,

    deadline: Option<Instant>,
    node_limit: Option<u64>,
    nodes: u64,
    timed_out: bool,

    branch_seen: bool,
    root_filter: Option<(usize, usize)>,
    current_root: Option<usize>,
    found_root: Option<usize>,
    result: Option<FoundScheme>,
}

impl<'a> Engine<'a> {
    #[allow(clippy::too_many_arguments)]
    fn new(
        darts: &'a DartGraph,
        mode: Mode,
        f_target: i64,
        min_face: i64,
        sign: Vec<i8>,
        undecided_signs: usize,
        deadline: Option<Instant>,
        node_limit: Option<u64>,
        root_filter: Option<(usize, usize)>,
    ) -> Self {
        let dart_count = darts.dart_count();
        let deg: Vec<usize> = darts.out_darts.iter().map(Vec::len).collect();
        Engine {
            darts,
            mode,
            f_target,
            min_face,
            total_states: 2 * dart_count,
            anchor: 0,
            deg,
            succ: vec![UNSET; dart_count],
            pred: vec![UNSET; dart_count],
            chain_start: (0..dart_count).collect(),
            chain_end: (0..dart_count).collect(),
            links_at: vec![0; darts.vertex_count],
            sign,
            undecided_signs,
            neg_signs: 0,
            used: vec![false; 2 * dart_count],
            used_count: 0,
            faces_closed: 0,
            deadline,
            node_limit,
            nodes: 0,
            timed_out: false,
            branch_seen: false,
            root_filter,
            current_root: None,
            found_root: None,
            result: None,
        }
    }

    #[inline]
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes & 1023 == 0 {
            if let Some(dl) = self.deadline {
                if Instant::now() >= dl {
                    self.timed_out = true;
                }
            }
            if let Some(nl) = self.node_limit {
                if self.nodes > nl {
                    self.timed_out = true;
                }
            }
        }
        self.timed_out
    }

    #[inline]
    fn potential_closed(&self) -> i64 {
        let free = (self.total_states - self.used_count) as i64;
        self.faces_closed as i64 + free / (2 * self.min_face)
    }

    #[inline]
    fn potential_open(&self, open_len: i64) -> i64 {
        let free = (self.total_states - self.used_count) as i64;
        let need_open = (self.min_face - open_len).max(0);
        let mirror_need = open_len.max(self.min_face);
        let avail = free - need_open - mirror_need;
        if avail < 0 {
            return i64::MIN;
        }
        self.faces_closed as i64 + 1 + avail / (2 * self.min_face)
    }

    fn search(&mut self) -> bool {
        if self.tick() {
            return false;
        }
        if self.potential_closed() < self.f_target {
            return false;
        }
        if self.used_count == self.total_states {
            return self.complete();
        }
        let s0 = (0..self.total_states).find(|&s| !self.used[s]).unwrap();
        self.used[s0] = true;
        self.used_count += 1;
        let mut face = vec![s0];
        let found = self.advance(&mut face, s0);
        self.used[s0] = false;
        self.used_count -= 1;
        found
    }

    fn advance(&mut self, face: &mut Vec<usize>, s0: usize) -> bool {
        if self.tick() {
            return false;
        }
        if self.potential_open(face.len() as i64) < self.f_target {
            return false;
        }
        let cur = *face.last().unwrap();
        let e = cur >> 2; // edge of the current dart
        match self.sign[e] {
            0 => {
                let root_here = !self.branch_seen;
                self.branch_seen = true;
                for (idx, sgn) in [1i8, -1].into_iter().enumerate() {
                    if root_here {
                        if let Some((w, r)) = self.root_filter {
                            if idx % w != r {
                                continue;
                            }
                        }
                        self.current_root = Some(idx);
                    }
                    self.sign[e] = sgn;
                    self.undecided_signs -= 1;
                    if sgn < 0 {
                        self.neg_signs += 1;
                    }
                    // a branch in which every sign ended up +1 cannot be
                    // nonorientable; cut it as soon as that is decided
                    let dead = self.mode == Mode::Nonorientable
                        && self.undecided_signs == 0
                        && self.neg_signs == 0;
                    let found = !dead && self.advance_signed(face, s0, sgn);
                    if sgn < 0 {
                        self.neg_signs -= 1;
                    }
                    self.undecided_signs += 1;
                    self.sign[e] = 0;
                    if found {
                        return true;
                    }
                    if self.timed_out {
                        return false;
                    }
                }
                if root_here {
                    self.current_root = None;
                }
                false
            }
            sgn => self.advance_signed(face, s0, sgn),
        }
    }

    fn advance_signed(&mut self, face: &mut Vec<usize>, s0: usize, sgn: i8) -> bool {
        let cur = *face.last().unwrap();
        let d = cur >> 1;
        let side: i8 = if cur & 1 == 0 { 1 } else { -1 };
        let s2 = side * sgn;
        let r = d ^ 1;
        let v = self.darts.head[d];
        if s2 > 0 {
            let y = self.succ[r];
            if y == UNSET {
                self.branch_succ(face, s0, r, v)
            } else {
                self.step_into(face, s0, 2 * y)
            }
        } else {
            let z = self.pred[r];
            if z == UNSET {
                self.branch_pred(face, s0, r, v)
            } else {
                self.step_into(face, s0, 2 * z + 1)
            }
        }
    }

    /// Linking x -> y inside the rotation at v: both ends must be free, a
    /// cycle may close only when it covers all of v's darts, and links at
    /// the anchor dart must keep succ[anchor] <= pred[anchor] (reflection
    /// canonicalization).
    fn link_allowed(&self, x: usize, y: usize, v: usize) -> bool {
        if self.succ[x] != UNSET || self.pred[y] != UNSET {
            return false;
        }
        if self.chain_start[x] == y && self.links_at[v] + 1 != self.deg[v] {
            return false;
        }
        if x == self.anchor && self.pred[self.anchor] != UNSET && y > self.pred[self.anchor] {
            return false;
        }
        if y == self.anchor && self.succ[self.anchor] != UNSET && self.succ[self.anchor] > x {
            return false;
        }
        true
    }

    fn do_link(&mut self, x: usize, y: usize, v: usize) {
        self.succ[x] = y;
        self.pred[y] = x;
        self.links_at[v] += 1;
        let s = self.chain_start[x];
        let e = self.chain_end[y];
        self.chain_start[e] = s;
        self.chain_end[s] = e;
    }

    fn undo_link(&mut self, x: usize, y: usize, v: usize) {
        let s = self.chain_start[x];
        let e = self.chain_end[y];
        self.chain_start[e] = y;
        self.chain_end[s] = x;
        self.succ[x] = UNSET;
        self.pred[y] = UNSET;
        self.links_at[v] -= 1;
    }

    fn branch_succ(&mut self, face: &mut Vec<usize>, s0: usize, r: usize, v: usize) -> bool {
        let darts = self.darts;
        let outs: &[usize] = &darts.out_darts[v];
        let count = outs.iter().filter(|&&y| self.link_allowed(r, y, v)).count();
        if count == 0 {
            return false;
        }
        let root_here = count > 1 && !self.branch_seen;
        if count > 1 {
            self.branch_seen = true;
        }
        let mut idx = 0;
        for &y in outs {
            if !self.link_allowed(r, y, v) {
                continue;
            }
            let my_idx = idx;
            idx += 1;
            if root_here {
                if let Some((w, res)) = self.root_filter {
                    if my_idx % w != res {
                        continue;
                    }
                }
                self.current_root = Some(my_idx);
            }
            self.do_link(r, y, v);
            let found = self.step_into(face, s0, 2 * y);
            self.undo_link(r, y, v);
            if found {
                return true;
            }
            if self.timed_out {
                return false;
            }
        }
        if root_here {
            self.current_root = None;
        }
        false
    }

    fn branch_pred(&mut self, face: &mut Vec<usize>, s0: usize, r: usize, v: usize) -> bool {
        let darts = self.darts;
        let outs: &[usize] = &darts.out_darts[v];
        let count = outs.iter().filter(|&&z| self.link_allowed(z, r, v)).count();
        if count == 0 {
            return false;
        }
        let root_here = count > 1 && !self.branch_seen;
        if count > 1 {
            self.branch_seen = true;
        }
        let mut idx = 0;
        for &z in outs {
            if !self.link_allowed(z, r, v) {
                continue;
            }
            let my_idx = idx;
            idx += 1;
            if root_here {
                if let Some((w, res)) = self.root_filter {
                    if my_idx % w != res {
                        continue;
                    }
                }
                self.current_root = Some(my_idx);
            }
            self.do_link(z, r, v);
            let found = self.step_into(face, s0, 2 * z + 1);
            self.undo_link(z, r, v);
            if found {
                return true;
            }
            if self.timed_out {
                return false;
            }
        }
        if root_here {
            self.current_root = None;
        }
        false
    }

    fn step_into(&mut self, face: &mut Vec<usize>, s0: usize, next: usize) -> bool {
        if next == s0 {
            return self.close_face(face);
        }
        if self.used[next] {
            // the doubled-state transition is injective, so a fresh walk can
            // only re-enter its own start
            debug_assert!(false, "facial walk entered a used state");
            return false;
        }
        self.used[next] = true;
        self.used_count += 1;
        face.push(next);
        let found = self.advance(face, s0);
        face.pop();
        self.used[next] = false;
        self.used_count -= 1;
        found
    }

    fn mirror_state(&self, st: usize) -> usize {
        let d = st >> 1;
        let side: i8 = if st & 1 == 0 { 1 } else { -1 };
        let sgn = self.sign[d >> 1];
        debug_assert!(sgn != 0, "mirror of a state whose edge sign is undecided");
        let m = -side * sgn;
        2 * (d ^ 1) + usize::from(m < 0)
    }

    fn close_face(&mut self, face: &mut Vec<usize>) -> bool {
        if (face.len() as i64) < self.min_face {
            return false;
        }
        // the mirror orbit belongs to the same face; claim its states too
        let mut mirrors = Vec::with_capacity(face.len());
        for &st in face.iter() {
            let m = self.mirror_state(st);
            if self.used[m] {
                debug_assert!(false, "mirror orbit overlaps a used state");
                return false;
            }
            mirrors.push(m);
        }
        for &m in &mirrors {
            self.used[m] = true;
        }
        self.used_count += mirrors.len();
        self.faces_closed += 1;
        let found = self.search();
        self.faces_closed -= 1;
        for &m in &mirrors {
            self.used[m] = false;
        }
        self.used_count -= mirrors.len();
        found
    }

    fn complete(&mut self) -> bool {
        if self.mode == Mode::Nonorientable && self.neg_signs == 0 {
            return false;
        }
        if (self.faces_closed as i64) < self.f_target {
            return false;
        }
        debug_assert!(self.sign.iter().all(|&s| s != 0));
        debug_assert!(self.links_at.iter().zip(&self.deg).all(|(l, d)| l == d));
        self.result = Some(FoundScheme {
            succ: self.succ.clone(),
            sign: self.sign.clone(),
            faces: self.faces_closed,
        });
        self.found_root = self.current_root;
        true
    }
}

fn is_bipartite(graph: &SimpleGraph) -> bool {
    let n = graph.vertex_count();
    let mut color = vec![-1i8; n];
    for start in 0..n {
        if color[start] >= 0 {
            continue;
        }
        color[start] = 0;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in graph.neighbors(u) {
                if color[v] < 0 {
                    color[v] = 1 - color[u];
                    stack.push(v);
                } else if color[v] == color[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Shortest possible facial walk: 2 if a degree-1 vertex allows spurs,
/// otherwise 4 on bipartite graphs (walks have even length), otherwise 3.
fn min_face_length(graph: &SimpleGraph) -> i64 {
    let min_deg = (0..graph.vertex_count()).map(|v| graph.degree(v)).min().unwrap_or(0);
    if min_deg <= 1 {
         2
    } else if is_bipartite(graph) {
        4
    } else {
        3
    }
}

fn spanning_tree(graph: &SimpleGraph, darts: &DartGraph) -> Vec<bool> {
    let n = graph.vertex_count();
    let mut tree = vec![false; darts.edges.len()];
    if n == 0 {
        return tree;
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for w in graph.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                tree[darts.dart_from_to(u, w).unwrap() >> 1] = true;
                queue.push_back(w);
            }
        }
    }
    tree
}

fn trivial_sphere_certificate() -> GenusCertificate {
    GenusCertificate {
        orientable: true,
        genus: 0,
        face_count: 1,
        scheme: EmbeddingScheme {
            rotation: RotationSystem { rotations: vec![vec![]] },
            signs: vec![],
        },
    }
}

fn build_certificate(
    graph: &SimpleGraph,
    darts: &DartGraph,
    mode: Mode,
    fs: &FoundScheme,
) -> GenusCertificate {
    let n = graph.vertex_count();
    let mut rotations = Vec::with_capacity(n);
    for v in 0..n {
        let outs = &darts.out_darts[v];
        let mut rot = Vec::with_capacity(outs.len());
        if let Some(&start) = outs.first() {
            let mut d = start;
            loop {
                rot.push(darts.head[d]);
                d = fs.succ[d];
                if d == start {
                    break;
                }
            }
        }
        rotations.push(rot);
    }
    let signs: Vec<EdgeSign> = darts
        .edges
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| EdgeSign { u, v, sign: fs.sign[e] })
        .collect();
    let mut rotation = RotationSystem { rotations };
    rotation.canonicalize();
    let euler = graph.vertex_count() as i64 - graph.edge_count() as i64 + fs.faces as i64;
    let (orientable, genus) = match mode {
        Mode::Orientable => {
            debug_assert!((2 - euler) % 2 == 0 && euler <= 2);
            (true, ((2 - euler) / 2) as usize)
        }
        Mode::Nonorientable => {
            debug_assert!(euler <= 1);
            (false, (2 - euler) as usize)
        }
    };
    GenusCertificate {
        orientable,
        genus,
        face_count: fs.faces,
        scheme: EmbeddingScheme { rotation, signs },
    }
}

fn decide(
    graph: &SimpleGraph,
    mode: Mode,
    k: usize,
    limits: &SearchLimits,
) -> Result<SearchOutcome, GenusError> {
    let v = graph.vertex_count();
    if v == 0 {
        return Err(GenusError::EmptyGraph);
    }
    if !graph.is_connected() {
        return Err(GenusError::Disconnected);
    }
    if mode == Mode::Nonorientable && k == 0 {
        return Err(GenusError::CrosscapRange);
    }
    let e = graph.edge_count();
    if e == 0 {
        // single vertex: the sphere with one face, and no cellular
        // nonorientable scheme at all
        return Ok(match mode {
            Mode::Orientable => SearchOutcome::Found(trivial_sphere_certificate()),
            Mode::Nonorientable => SearchOutcome::Exhausted,
        });
    }
    let f_target = e as i64 - v as i64 + 2
        - match mode {
            Mode::Orientable => 2 * k as i64,
            Mode::Nonorientable => k as i64,
        };
    let darts = DartGraph::new(graph);
    let (sign_preset, undecided) = match mode {
        Mode::Orientable => (vec![1i8; darts.edges.len()], 0),
        Mode::Nonorientable => {
            let tree = spanning_tree(graph, &darts);
            let sign: Vec<i8> = tree.iter().map(|&t| if t { 1 } else { 0 }).collect();
            let undecided = sign.iter().filter(|&&s| s == 0).count();
            if undecided == 0 {
                // a tree has no nonorientable scheme
                return Ok(SearchOutcome::Exhausted);
            }
            (sign, undecided)
        }
    };
    let min_face = min_face_length(graph);
    let deadline = limits.budget.map(|b| Instant::now() + b);

    let run = |filter: Option<(usize, usize)>| -> (Option<FoundScheme>, Option<usize>, bool) {
        let mut engine = Engine::new(
            &darts,
            mode,
            f_target,
            min_face,
            sign_preset.clone(),
            undecided,
            deadline,
            limits.node_limit,
            filter,
        );
        let found = engine.search();
        (found.then_some(()).and(engine.result), engine.found_root, engine.timed_out)
    };

    let runs: Vec<(Option<FoundScheme>, Option<usize>, bool)> = if limits.workers <= 1 {
        vec![run(None)]
    } else {
        let workers = limits.workers;
        let run = &run;
        std::thread::scope(|scope| {
            let handles: Vec<_> =
                (0..workers).map(|w| scope.spawn(move || run(Some((workers, w))))).collect();
            handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
        })
    };

    let mut best: Option<(usize, FoundScheme)> = None;
    let mut any_timeout = false;
    for (result, root, timed_out) in runs {
        any_timeout |= timed_out;
        if let Some(fs) = result {
            let idx = root.unwrap_or(0);
            if best.as_ref().is_none_or(|(b, _)| idx < *b) {
                best = Some((idx, fs));
            }
        }
    }
    if let Some((_, fs)) = best {
        let cert = build_certificate(graph, &darts, mode, &fs);
        return Ok(SearchOutcome::Found(cert));
    }
    if any_timeout {
        return Ok(SearchOutcome::TimedOut);
    }
    Ok(SearchOutcome::Exhausted)
}

/// Is there a rotation system embedding the graph on the orientable surface
/// with k handles? Returns a verified-style certificate when one exists.
pub fn decide_orientable_genus_le(
    graph: &SimpleGraph,
    k: usize,
    limits: &SearchLimits,
) -> Result<SearchOutcome, GenusError> {
    decide(graph, Mode::Orientable, k, limits)
}

/// Is there an embedding scheme with a genuinely nonorientable signature on
/// the surface with k crosscaps?
pub fn decide_nonorientable_genus_le(
    graph: &SimpleGraph,
    k: usize,
    limits: &SearchLimits,
) -> Result<SearchOutcome, GenusError> {
    decide(graph, Mode::Nonorientable, k, limits)
}

/// Outcome of an exact genus computation.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum GenusVerdict {
    Exact { value: usize, certificate: GenusCertificate },
    /// Every k up to max_k was exhausted: the genus is strictly larger.
    GreaterThan { max_k: usize },
    /// The budget ran out; the genus is at least `proven_ge`.
    TimedOut { proven_ge: usize },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GenusResult {
    pub orientable: bool,
    pub verdict: GenusVerdict,
    pub lower_bound: BoundReport,
}

/// Exact orientable genus: runs the decider upward from the best lower
/// bound until a certificate appears or the k budget is exhausted.
pub fn orientable_genus(
    graph: &SimpleGraph,
    max_k: usize,
    limits: &SearchLimits,
) -> Result<GenusResult, GenusError> {
    if graph.vertex_count() == 0 {
        return Err(GenusError::EmptyGraph);
    }
    if !graph.is_connected() {
        return Err(GenusError::Disconnected);
    }
    let lower_bound = bounds::best_lower_bound(graph, true)?;
    let start = lower_bound.bound;
    for k in start..=max_k {
        match decide_orientable_genus_le(graph, k, limits)? {
            SearchOutcome::Found(certificate) => {
                debug_assert_eq!(certificate.genus, k);
                return Ok(GenusResult {
                    orientable: true,
                    verdict: GenusVerdict::Exact { value: k, certificate },
                    lower_bound,
                });
            }
            SearchOutcome::Exhausted => continue,
            SearchOutcome::TimedOut => {
                return Ok(GenusResult {
                    orientable: true,
                    verdict: GenusVerdict::TimedOut { proven_ge: k },
                    lower_bound,
                });
            }
        }
    }
    Ok(GenusResult {
        orientable: true,
        verdict: GenusVerdict::GreaterThan { max_k },
        lower_bound,
    })
}

/// Exact nonorientable genus. Planar graphs have nonorientable genus 0 (the
/// sphere); otherwise the crosscap deciders run upward from the bound.
pub fn nonorientable_genus(
    graph: &SimpleGraph,
    max_k: usize,
    limits: &SearchLimits,
) -> Result<GenusResult, GenusError> {
    if graph.vertex_count() == 0 {
        return Err(GenusError::EmptyGraph);
    }
    if !graph.is_connected() {
        return Err(GenusError::Disconnected);
    }
    let lower_bound = bounds::best_lower_bound(graph, false)?;
    if lower_bound.bound == 0 {
        match decide_orientable_genus_le(graph, 0, limits)? {
            SearchOutcome::Found(certificate) => {
                return Ok(GenusResult {
                    orientable: false,
                    verdict: GenusVerdict::Exact { value: 0, certificate },
                    lower_bound,
                });
            }
            SearchOutcome::Exhausted => {}
            SearchOutcome::TimedOut => {
                return Ok(GenusResult {
                    orientable: false,
                    verdict: GenusVerdict::TimedOut { proven_ge: 0 },
                    lower_bound,
                });
            }
        }
    }
    let start = lower_bound.bound.max(1);
    for k in start..=max_k {
        match decide_nonorientable_genus_le(graph, k, limits)? {
            SearchOutcome::Found(certificate) => {
                debug_assert_eq!(certificate.genus, k);
                return Ok(GenusResult {
                    orientable: false,
                    verdict: GenusVerdict::Exact { value: k, certificate },
                    lower_bound,
                });
            }
            SearchOutcome::Exhausted => continue,
            SearchOutcome::TimedOut => {
                return Ok(GenusResult {
                    orientable: false,
                    verdict: GenusVerdict::TimedOut { proven_ge: k },
                    lower_bound,
                });
            }
        }
    }
    Ok(GenusResult {
        orientable: false,
        verdict: GenusVerdict::GreaterThan { max_k },
        lower_bound,
    })
}

/// True iff every connected component embeds in the sphere.
pub fn is_planar(graph: &SimpleGraph) -> bool {
    graph.components().iter().all(|comp| {
        let sub = graph.induced_subgraph(comp).expect("component vertices are in range");
        if sub.edge_count() == 0 {
            return true;
        }
        matches!(
            decide_orientable_genus_le(&sub, 0, &SearchLimits::default()),
            Ok(SearchOutcome::Found(_))
        )
    })
}
