//! Rotation systems, embedding schemes with edge signatures, face tracing,
//! and the certificate format genus decisions are reported in.
//!
//! Each edge {u, v} with u < v contributes two darts, 2e (u to v) and
//! 2e + 1 (v to u); `rev` is xor 1. A rotation system orders the out-darts
//! cyclically at every vertex. An embedding scheme adds a sign per edge;
//! crossing a negative edge flips the local orientation, which is what a
//! crosscap does to a traversal.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::SimpleGraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SchemeError {
    #[error("rotation list count {got} does not match vertex count {expected}")]
    RotationShape { got: usize, expected: usize },
    #[error("rotation at vertex {vertex} is not a permutation of its neighbors")]
    NotAPermutation { vertex: usize },
    #[error("sign list does not match the edge set at entry {index}")]
    SignShape { index: usize },
    #[error("sign for edge ({u}, {v}) must be +1 or -1, got {sign}")]
    BadSign { u: usize, v: usize, sign: i8 },
    #[error("face tracing requires a connected graph")]
    Disconnected,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertificateError {
    #[error("malformed scheme: {0}")]
    Scheme(#[from] SchemeError),
    #[error("certificate claims {claimed} faces but the scheme traces {actual}")]
    FaceCount { claimed: usize, actual: usize },
    #[error("Euler relation fails: V={v}, E={e}, F={f} against claimed genus {genus}")]
    Euler { v: usize, e: usize, f: usize, genus: usize },
    #[error("certificate is marked orientable but the signature is not")]
    NotOrientable,
    #[error("certificate is marked nonorientable but the signature is orientable")]
    NotNonorientable,
    #[error("nonorientable genus must be at least 1")]
    GenusRange,
}

/// Cyclic out-edge order per vertex, written as neighbor indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationSystem {
    pub rotations: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Rotates every cyclic list so it starts at the smallest neighbor,
    /// giving one canonical linearization per system.
    pub fn canonicalize(&mut self) {
        for rot in &mut self.rotations {
            if rot.is_empty() {
                continue;
            }
            let min_pos = rot
                .iter()
                .enumerate()
                .min_by_key(|(_, &w)| w)
                .map(|(i, _)| i)
                .unwrap();
            rot.rotate_left(min_pos);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSign {
    pub u: usize,
    pub v: usize,
    pub sign: i8,
}

/// A rotation system plus one sign per edge. All-positive signatures are
/// the orientable case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingScheme {
    pub rotation: RotationSystem,
    pub signs: Vec<EdgeSign>,
}

/// An embedding certificate: a scheme together with the face count it
/// traces and the genus that follows from the Euler relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusCertificate {
    pub orientable: bool,
    pub genus: usize,
    pub face_count: usize,
    pub scheme: EmbeddingScheme,
}

impl GenusCertificate {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// Dart-level view of a graph shared by the tracer, the verifier and the
/// genus search.
#[derive(Debug, Clone)]
pub struct DartGraph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
    pub head: Vec<usize>,
    pub out_darts: Vec<Vec<usize>>,
}

impl DartGraph {
    pub fn new(graph: &SimpleGraph) -> Self {
        let edges = graph.edges();
        let n = graph.vertex_count();
        let mut head = Vec::with_capacity(edges.len() * 2);
        let mut out_darts = vec![Vec::new(); n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            head.push(v); // dart 2e: u -> v
            head.push(u); // dart 2e+1: v -> u
            out_darts[u].push(2 * e);
            out_darts[v].push(2 * e + 1);
        }
        DartGraph { vertex_count: n, edges, head, out_darts }
    }

    pub fn dart_count(&self) -> usize {
        self.head.len()
    }

    pub fn tail(&self, d: usize) -> usize {
        self.head[d ^ 1]
    }

    pub fn edge_of(&self, d: usize) -> usize {
        d >> 1
    }

    /// The out-dart at `v` pointing to `w`, if the edge exists.
    pub fn dart_from_to(&self, v: usize, w: usize) -> Option<usize> {
        let (a, b) = (v.min(w), v.max(w));
        let e = self.edges.binary_search(&(a, b)).ok()?;
        Some(if v == a { 2 * e } else { 2 * e + 1 })
    }
}

/// Validated, dart-level form of a scheme: successor map per vertex
/// rotation plus a sign per edge.
pub(crate) struct CompiledScheme {
    pub succ: Vec<usize>,
    pub pred: Vec<usize>,
    pub sign: Vec<i8>,
}

pub(crate) fn compile_scheme(
    graph: &SimpleGraph,
    darts: &DartGraph,
    scheme: &EmbeddingScheme,
) -> Result<CompiledScheme, SchemeError> {
    let n = graph.vertex_count();
    let rots = &scheme.rotation.rotations;
    if rots.len() != n {
        return Err(SchemeError::RotationShape { got: rots.len(), expected: n });
    }
    let m = darts.edges.len();
    let mut succ = vec![usize::MAX; 2 * m];
    let mut pred = vec![usize::MAX; 2 * m];
    for (v, rot) in rots.iter().enumerate() {
        let mut expected: Vec<usize> = graph.neighbors(v).collect();
        expected.sort_unstable();
        let mut given = rot.clone();
        given.sort_unstable();
        if given != expected {
            return Err(SchemeError::NotAPermutation { vertex: v });
        }
        let k = rot.len();
        for i in 0..k {
            let from = darts.dart_from_to(v, rot[i]).unwrap();
            let to = darts.dart_from_to(v, rot[(i + 1) % k]).unwrap();
            succ[from] = to;
            pred[to] = from;
        }
    }
    if scheme.signs.len() != m {
        return Err(SchemeError::SignShape { index: scheme.signs.len().min(m) });
    }
    let mut sign = vec![0i8; m];
    for (index, es) in scheme.signs.iter().enumerate() {
        let (a, b) = (es.u.min(es.v), es.u.max(es.v));
        if darts.edges.get(index) != Some(&(a, b)) {
            return Err(SchemeError::SignShape { index });
        }
        if es.sign != 1 && es.sign != -1 {
            return Err(SchemeError::BadSign { u: es.u, v: es.v, sign: es.sign });
        }
        sign[index] = es.sign;
    }
    Ok(CompiledScheme { succ, pred, sign })
}

/// Result of tracing the faces of a scheme: one closed walk per face, as
/// directed edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceTrace {
    pub face_count: usize,
    pub walks: Vec<Vec<(usize, usize)>>,
}

// state encoding for signed traversal: 2 * dart + (0 for side +1, 1 for -1)
#[inline]
fn step(darts: &DartGraph, cs: &CompiledScheme, state: usize) -> usize {
    let d = state >> 1;
    let side = if state & 1 == 0 { 1i8 } else { -1 };
    let s2 = side * cs.sign[darts.edge_of(d)];
    let r = d ^ 1;
    let d2 = if s2 > 0 { cs.succ[r] } else { cs.pred[r] };
    2 * d2 + if s2 > 0 { 0 } else { 1 }
}

#[inline]
fn mirror(darts: &DartGraph, cs: &CompiledScheme, state: usize) -> usize {
    let d = state >> 1;
    let side = if state & 1 == 0 { 1i8 } else { -1 };
    let m = -side * cs.sign[darts.edge_of(d)];
    2 * (d ^ 1) + if m > 0 { 0 } else { 1 }
}

/// Traces every facial walk of a scheme. Each dart side is consumed exactly
/// once; with an all-positive signature this is the classical rotation-system
/// face tracing and walk lengths sum to 2|E|.
pub fn trace_faces(graph: &SimpleGraph, scheme: &EmbeddingScheme) -> Result<FaceTrace, SchemeError> {
    if !graph.is_connected() {
        return Err(SchemeError::Disconnected);
    }
    let darts = DartGraph::new(graph);
    let cs = compile_scheme(graph, &darts, scheme)?;
    let all_positive = cs.sign.iter().all(|&s| s == 1);
    let mut walks = Vec::new();
    if all_positive {
        // orbit per face over darts: next = succ[rev(d)]
        let mut used = vec![false; darts.dart_count()];
        for start in 0..darts.dart_count() {
            if used[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                used[d] = true;
                walk.push((darts.tail(d), darts.head[d]));
                d = cs.succ[d ^ 1];
                if d == start {
                    break;
                }
            }
            walks.push(walk);
        }
    } else {
        // doubled traversal: faces are mirror pairs of orbits over
        // (dart, side) states
        let states = 2 * darts.dart_count();
        let mut used = vec![false; states];
        for start in 0..states {
            if used[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut s = start;
            loop {
                used[s] = true;
                orbit.push(s);
                s = step(&darts, &cs, s);
                if s == start {
                    break;
                }
            }
            let mut walk = Vec::with_capacity(orbit.len());
            for &st in &orbit {
                let d = st >> 1;
                walk.push((darts.tail(d), darts.head[d]));
                let m = mirror(&darts, &cs, st);
                debug_assert!(!orbit.contains(&m), "self-paired facial orbit");
                used[m] = true;
            }
            walks.push(walk);
        }
    }
    Ok(FaceTrace { face_count: walks.len(), walks })
}

/// Whether the signature is equivalent to all-positive: normalize a BFS
/// spanning tree by vertex flips and look for a surviving negative edge.
pub fn signature_is_orientable(graph: &SimpleGraph, scheme: &EmbeddingScheme) -> bool {
    let darts = DartGraph::new(graph);
    let sign_of = |e: usize| scheme.signs[e].sign;
    let n = graph.vertex_count();
    let mut parity = vec![1i8; n];
    let mut seen = vec![false; n];
    if n == 0 {
        return true;
    }
    seen[0] = true;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for v in graph.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                let e = darts.dart_from_to(u, v).unwrap() >> 1;
                parity[v] = parity[u] * sign_of(e);
                queue.push_back(v);
            }
        }
    }
    darts
        .edges
        .iter()
        .enumerate()
        .all(|(e, &(u, v))| sign_of(e) * parity[u] * parity[v] == 1)
}

/// Independent re-check of a certificate: re-validates the scheme, retraces
/// the faces along a separate code path (an explicit state permutation whose
/// cycles are counted), and re-checks the Euler relation and the claimed
/// orientability class.
pub fn verify_certificate(
    graph: &SimpleGraph,
    cert: &GenusCertificate,
) -> Result<(), CertificateError> {
    let v = graph.vertex_count();
    let e = graph.edge_count();
    if e == 0 {
        // a single vertex embeds in the sphere with one face
        if v == 1 && cert.orientable && cert.genus == 0 && cert.face_count == 1 {
            return Ok(());
        }
        return Err(CertificateError::Euler { v, e, f: cert.face_count, genus: cert.genus });
    }
    if !graph.is_connected() {
        return Err(CertificateError::Scheme(SchemeError::Disconnected));
    }
    let darts = DartGraph::new(graph);
    let cs = compile_scheme(graph, &darts, &cert.scheme)?;

    // build the full state permutation, then count its cycles
    let states = 2 * darts.dart_count();
    let next: Vec<usize> = (0..states).map(|s| step(&darts, &cs, s)).collect();
    let mut visited = vec![false; states];
    let mut orbits = 0usize;
    for start in 0..states {
        if visited[start] {
            continue;
        }
        orbits += 1;
        let mut s = start;
        while !visited[s] {
            visited[s] = true;
            s = next[s];
        }
    }
    debug_assert_eq!(orbits % 2, 0, "facial orbits come in mirror pairs");
    let f = orbits / 2;

    if f != cert.face_count {
        return Err(CertificateError::FaceCount { claimed: cert.face_count, actual: f });
    }
    let orientable_signature = signature_is_orientable(graph, &cert.scheme);
    if cert.orientable {
        if !orientable_signature {
            return Err(CertificateError::NotOrientable);
        }
        let lhs = v as i64 - e as i64 + f as i64;
        if lhs != 2 - 2 * cert.genus as i64 {
            return Err(CertificateError::Euler { v, e, f, genus: cert.genus });
        }
    } else {
        if orientable_signature {
            return Err(CertificateError::NotNonorientable);
        }
        if cert.genus == 0 {
            return Err(CertificateError::GenusRange);
        }
        let lhs = v as i64 - e as i64 + f as i64;
        if lhs != 2 - cert.genus as i64 {
            return Err(CertificateError::Euler { v, e, f, genus: cert.genus });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    fn all_positive_scheme(graph: &SimpleGraph, rotations: Vec<Vec<usize>>) -> EmbeddingScheme {
        let signs = graph
            .edges()
            .into_iter()
            .map(|(u, v)| EdgeSign { u, v, sign: 1 })
            .collect();
        EmbeddingScheme { rotation: RotationSystem { rotations }, signs }
    }

    fn triangle_scheme(signs: [i8; 3]) -> (SimpleGraph, EmbeddingScheme) {
        let g = complete_graph(3);
        let edge_signs = g
            .edges()
            .into_iter()
            .zip(signs)
            .map(|((u, v), sign)| EdgeSign { u, v, sign })
            .collect();
        let scheme = EmbeddingScheme {
            rotation: RotationSystem { rotations: vec![vec![1, 2], vec![0, 2], vec![0, 1]] },
            signs: edge_signs,
        };
        (g, scheme)
    }

    #[test]
    fn triangle_on_the_sphere() {
        let (g, scheme) = triangle_scheme([1, 1, 1]);
        let trace = trace_faces(&g, &scheme).unwrap();
        assert_eq!(trace.face_count, 2);
        let total: usize = trace.walks.iter().map(Vec::len).sum();
        assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn triangle_with_crosscaps() {
        // one negative edge: projective plane, a single face
        let (g, scheme) = triangle_scheme([1, 1, -1]);
        assert_eq!(trace_faces(&g, &scheme).unwrap().face_count, 1);
        assert!(!signature_is_orientable(&g, &scheme));

        // two negative edges: flip-equivalent to all-positive, back on the sphere
        let (g, scheme) = triangle_scheme([1, -1, -1]);
        assert_eq!(trace_faces(&g, &scheme).unwrap().face_count, 2);
        assert!(signature_is_orientable(&g, &scheme));

        // three negative edges: equivalent to one, projective plane again
        let (g, scheme) = triangle_scheme([-1, -1, -1]);
        assert_eq!(trace_faces(&g, &scheme).unwrap().face_count, 1);
        assert!(!signature_is_orientable(&g, &scheme));
    }

    #[test]
    fn tetrahedron_has_four_faces() {
        let g = complete_graph(4);
        // the planar rotation of K4
        let scheme = all_positive_scheme(
            &g,
            vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]],
        );
        let trace = trace_faces(&g, &scheme).unwrap();
        assert_eq!(trace.face_count, 4);

        let cert = GenusCertificate { orientable: true, genus: 0, face_count: 4, scheme };
        verify_certificate(&g, &cert).unwrap();
    }

    #[test]
    fn single_edge_is_spherical() {
        let mut g = SimpleGraph::with_order(2);
        g.add_edge(0, 1).unwrap();
        let scheme = all_positive_scheme(&g, vec![vec![1], vec![0]]);
        let trace = trace_faces(&g, &scheme).unwrap();
        assert_eq!(trace.face_count, 1);
        assert_eq!(trace.walks[0].len(), 2);
    }

    #[test]
    fn verifier_rejects_wrong_face_count_and_genus() {
        let g = complete_graph(4);
        let scheme = all_positive_scheme(
            &g,
            vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]],
        );
        let bad_count =
            GenusCertificate { orientable: true, genus: 0, face_count: 5, scheme: scheme.clone() };
        assert!(matches!(
            verify_certificate(&g, &bad_count),
            Err(CertificateError::FaceCount { claimed: 5, actual: 4 })
        ));
        let bad_genus =
            GenusCertificate { orientable: true, genus: 1, face_count: 4, scheme: scheme.clone() };
        assert!(matches!(verify_certificate(&g, &bad_genus), Err(CertificateError::Euler { .. })));
        let wrong_class =
            GenusCertificate { orientable: false, genus: 2, face_count: 4, scheme };
        assert!(matches!(
            verify_certificate(&g, &wrong_class),
            Err(CertificateError::NotNonorientable)
        ));
    }

    #[test]
    fn scheme_validation_errors() {
        let g = complete_graph(3);
        let bad_rot = EmbeddingScheme {
            rotation: RotationSystem { rotations: vec![vec![1, 1], vec![0, 2], vec![0, 1]] },
            signs: g.edges().into_iter().map(|(u, v)| EdgeSign { u, v, sign: 1 }).collect(),
        };
        assert_eq!(
            trace_faces(&g, &bad_rot).unwrap_err(),
            SchemeError::NotAPermutation { vertex: 0 }
        );

        let (g, mut scheme) = triangle_scheme([1, 1, 1]);
        scheme.signs[0].sign = 0;
        assert!(matches!(trace_faces(&g, &scheme), Err(SchemeError::BadSign { .. })));
        let (g, mut scheme) = triangle_scheme([1, 1, 1]);
        scheme.signs.pop();
        assert!(matches!(trace_faces(&g, &scheme), Err(SchemeError::SignShape { .. })));
    }

    #[test]
    fn certificate_json_round_trip() {
        let g = complete_graph(4);
        let scheme = all_positive_scheme(
            &g,
            vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]],
        );
        let cert = GenusCertificate { orientable: true, genus: 0, face_count: 4, scheme };
        let json = cert.to_json();
        let back = GenusCertificate::from_json(&json).unwrap();
        assert_eq!(back, cert);
        assert_eq!(back.to_json(), json);
    }

    #[test]
    fn rotation_canonicalization() {
        let mut rs = RotationSystem { rotations: vec![vec![3, 1, 2], vec![2, 0, 3]] };
        rs.canonicalize();
        assert_eq!(rs.rotations, vec![vec![1, 2, 3], vec![0, 3, 2]]);
    }
}
