//! Simple graphs with bitset adjacency, the non-cyclic graph builder, and
//! the subgraph witness searches the genus bounds lean on.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{ElementSet, Group};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("the non-cyclic graph is defined only for non-cyclic groups")]
    CyclicGroup,
    #[error("complete multipartite graph needs at least one part, all nonempty")]
    EmptyParts,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("self-loops are not allowed")]
    Loop,
}

/// A set of vertices as a packed bitset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet { words: vec![0; universe.div_ceil(64)] }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn minus_count(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    /// Ascending iteration.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

/// An undirected simple graph: no loops, no multiple edges. Adjacency is
/// stored as one bitset row per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<VertexSet>,
    edge_count: usize,
}

/// JSON form of a graph: labels plus a canonically sorted edge list.
#[derive(Debug, Serialize, Deserialize)]
pub struct GraphDocument {
    pub labels: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(labels: Vec<String>) -> Self {
        let n = labels.len();
        SimpleGraph { labels, adj: vec![VertexSet::empty(n); n], edge_count: 0 }
    }

    pub fn with_order(n: usize) -> Self {
        Self::new((0..n).map(|i| i.to_string()).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.vertex_count();
        if u >= n {
            return Err(GraphError::VertexOutOfRange(u));
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange(v));
        }
        if u == v {
            return Err(GraphError::Loop);
        }
        if !self.adj[u].contains(v) {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
            self.edge_count += 1;
        }
        Ok(())
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub fn neighbor_set(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.vertex_count() {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.vertex_count();
        let mut g = SimpleGraph::new(self.labels.clone());
        for u in 0..n {
            for v in u + 1..n {
                if !self.adjacent(u, v) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    /// Induced subgraph on the given vertices (deduplicated, ascending),
    /// keeping the original labels.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<SimpleGraph, GraphError> {
        let mut vs: Vec<usize> = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        if let Some(&bad) = vs.iter().find(|&&v| v >= self.vertex_count()) {
            return Err(GraphError::VertexOutOfRange(bad));
        }
        let labels = vs.iter().map(|&v| self.labels[v].clone()).collect();
        let mut g = SimpleGraph::new(labels);
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        Ok(g)
    }

    /// Length of the shortest cycle, or None for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (u, v) in self.edges() {
            // shortest u-v path avoiding the edge itself
            let n = self.vertex_count();
            let mut dist = vec![usize::MAX; n];
            dist[u] = 0;
            let mut queue = std::collections::VecDeque::from([u]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if (x, y) == (u, v) || (y, x) == (u, v) {
                        continue;
                    }
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            if dist[v] != usize::MAX {
                let cycle = dist[v] + 1;
                best = Some(best.map_or(cycle, |b| b.min(cycle)));
            }
        }
        best
    }

    /// Deterministic DOT rendering: all vertices, then all edges, in
    /// canonical order.
    pub fn export_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for (v, label) in self.labels.iter().enumerate() {
            s.push_str(&format!("  {v} [label=\"{label}\"];\n"));
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("  {u} -- {v};\n"));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument { labels: self.labels.clone(), edges: self.edges() }
    }

    pub fn from_document(doc: &GraphDocument) -> Result<SimpleGraph, GraphError> {
        let mut g = SimpleGraph::new(doc.labels.clone());
        for &(u, v) in &doc.edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }
}

/// The complete graph on n vertices.
pub fn complete_graph(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::with_order(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Complete multipartite graph with the given part sizes; vertices are
/// numbered part by part. `[m, n]` gives the complete bipartite graph.
pub fn complete_multipartite(part_sizes: &[usize]) -> Result<SimpleGraph, GraphError> {
    if part_sizes.is_empty() || part_sizes.contains(&0) {
        return Err(GraphError::EmptyParts);
    }
    let n: usize = part_sizes.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (p, &size) in part_sizes.iter().enumerate() {
        part_of.extend(std::iter::repeat(p).take(size));
    }
    let mut g = SimpleGraph::with_order(n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    Ok(g)
}

/// The non-cyclic graph of a non-cyclic group: vertices are the elements
/// outside Cyc(G) in canonical element order, labeled by element name, with
/// an edge wherever a pair does not generate a cyclic subgroup.
pub fn build_noncyclic_graph(group: &Group) -> Result<SimpleGraph, GraphError> {
    if group.is_cyclic() {
        return Err(GraphError::CyclicGroup);
    }
    let cyc = group.cyclicizer();
    let vertices: Vec<usize> = group.elements().filter(|&g| !cyc.contains(g)).collect();
    let labels = vertices.iter().map(|&g| group.element_name(g).to_string()).collect();
    let mut graph = SimpleGraph::new(labels);
    for (i, &a) in vertices.iter().enumerate() {
        for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
            let cyclic = group
                .is_cyclic_subset(&ElementSet::from_iter([a, b]))
                .expect("vertex indices are valid");
            if !cyclic {
                graph.add_edge(i, j).unwrap();
            }
        }
    }
    Ok(graph)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    Clique,
    CompleteBipartite,
    CompleteMultipartite,
}

/// A subgraph witness: vertex parts such that the required edges all exist
/// in the host graph (cross-part edges, plus intra-part for cliques).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgraphWitness {
    pub kind: WitnessKind,
    pub parts: Vec<Vec<usize>>,
}

impl SubgraphWitness {
    /// Re-validates the witness edge by edge against a host graph.
    pub fn validate(&self, host: &SimpleGraph) -> bool {
        let n = host.vertex_count();
        let all: Vec<usize> = self.parts.iter().flatten().copied().collect();
        let mut dedup = all.clone();
        dedup.sort_unstable();
        dedup.dedup();
        if dedup.len() != all.len() || all.iter().any(|&v| v >= n) {
            return false;
        }
        match self.kind {
            WitnessKind::Clique => {
                if self.parts.len() != 1 {
                    return false;
                }
                let part = &self.parts[0];
                part.iter().enumerate().all(|(i, &u)| {
                    part[i + 1..].iter().all(|&v| host.adjacent(u, v))
                })
            }
            WitnessKind::CompleteBipartite | WitnessKind::CompleteMultipartite => {
                if self.kind == WitnessKind::CompleteBipartite && self.parts.len() != 2 {
                    return false;
                }
                for i in 0..self.parts.len() {
                    for j in i + 1..self.parts.len() {
                        for &u in &self.parts[i] {
                            for &v in &self.parts[j] {
                                if !host.adjacent(u, v) {
                                    return false;
                                }
                            }
                        }
                    }
                }
                true
            }
        }
    }
}

/// Finds a k-clique if one exists: backtracking over vertices in ascending
/// order with degree pruning, so the first witness is the lexicographically
/// smallest clique.
pub fn find_clique(graph: &SimpleGraph, k: usize) -> Option<SubgraphWitness> {
    find_clique_limited(graph, k, None)
}

/// `find_clique` with an optional step budget; None on budget exhaustion.
pub fn find_clique_limited(
    graph: &SimpleGraph,
    k: usize,
    step_limit: Option<u64>,
) -> Option<SubgraphWitness> {
    assert!(k >= 1);
    let n = graph.vertex_count();
    let eligible: Vec<usize> = (0..n).filter(|&v| graph.degree(v) >= k - 1).collect();
    let mut current = Vec::with_capacity(k);
    let mut steps = 0u64;

    fn extend(
        graph: &SimpleGraph,
        eligible: &[usize],
        from: usize,
        current: &mut Vec<usize>,
        k: usize,
        steps: &mut u64,
        step_limit: Option<u64>,
    ) -> bool {
        if current.len() == k {
            return true;
        }
        for (pos, &v) in eligible.iter().enumerate().skip(from) {
            if eligible.len() - pos < k - current.len() {
                break;
            }
            *steps += 1;
            if step_limit.is_some_and(|limit| *steps > limit) {
                return false;
            }
            if current.iter().all(|&u| graph.adjacent(u, v)) {
                current.push(v);
                if extend(graph, eligible, pos + 1, current, k, steps, step_limit) {
                    return true;
                }
                current.pop();
            }
        }
        false
    }

    if extend(graph, &eligible, 0, &mut current, k, &mut steps, step_limit) {
        Some(SubgraphWitness { kind: WitnessKind::Clique, parts: vec![current] })
    } else {
        None
    }
}

/// Finds disjoint vertex sets A (|A| = m) and B (|B| = n) with every A-B
/// edge present -- a K_{m,n} subgraph, not necessarily induced. The A side
/// is enumerated lexicographically and B is the first fit, so the witness
/// is deterministic.
pub fn find_complete_bipartite(
    graph: &SimpleGraph,
    m: usize,
    n: usize,
) -> Option<SubgraphWitness> {
    find_complete_bipartite_limited(graph, m, n, None)
}

/// `find_complete_bipartite` with an optional step budget.
pub fn find_complete_bipartite_limited(
    graph: &SimpleGraph,
    m: usize,
    n: usize,
    step_limit: Option<u64>,
) -> Option<SubgraphWitness> {
    assert!(m >= 1 && n >= 1);
    let order = graph.vertex_count();
    if order < m + n {
        return None;
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        graph: &SimpleGraph,
        from: usize,
        a: &mut Vec<usize>,
        common: &VertexSet,
        m: usize,
        n: usize,
        steps: &mut u64,
        step_limit: Option<u64>,
    ) -> Option<Vec<usize>> {
        if a.len() == m {
            let mut aset = VertexSet::empty(graph.vertex_count());
            for &v in a.iter() {
                aset.insert(v);
            }
            if common.minus_count(&aset) >= n {
                let b: Vec<usize> =
                    common.iter().filter(|&v| !aset.contains(v)).take(n).collect();
                return Some(b);
            }
            return None;
        }
        for v in from..graph.vertex_count() {
            if graph.vertex_count() - v < m - a.len() {
                break;
            }
            *steps += 1;
            if step_limit.is_some_and(|limit| *steps > limit) {
                return None;
            }
            let mut next_common = common.clone();
            next_common.intersect_with(graph.neighbor_set(v));
            if next_common.count() < n {
                continue;
            }
            a.push(v);
            if let Some(b) = extend(graph, v + 1, a, &next_common, m, n, steps, step_limit) {
                return Some(b);
            }
            a.pop();
        }
        None
    }

    let mut full = VertexSet::empty(order);
    for v in 0..order {
        full.insert(v);
    }
    let mut a = Vec::with_capacity(m);
    let mut steps = 0u64;
    extend(graph, 0, &mut a, &full, m, n, &mut steps, step_limit).map(|b| SubgraphWitness {
        kind: WitnessKind::CompleteBipartite,
        parts: vec![a, b],
    })
}

/// If the graph is complete multipartite, returns its partition into
/// independent sets, sorted by (size, smallest vertex). The complement must
/// be a disjoint union of cliques.
pub fn is_complete_multipartite(graph: &SimpleGraph) -> Option<Vec<Vec<usize>>> {
    let comp = graph.complement();
    let mut parts = comp.components();
    for part in &parts {
        for (i, &u) in part.iter().enumerate() {
            for &v in &part[i + 1..] {
                if graph.adjacent(u, v) {
                    return None;
                }
            }
        }
    }
    parts.sort_by_key(|p| (p.len(), p.first().copied()));
    Some(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn gamma(name: &str) -> SimpleGraph {
        build_noncyclic_graph(&catalog::find_group(name).unwrap()).unwrap()
    }

    #[test]
    fn standard_constructions() {
        assert_eq!(complete_graph(3).edge_count(), 3);
        let k2222 = complete_multipartite(&[2, 2, 2, 2]).unwrap();
        assert_eq!(k2222.vertex_count(), 8);
        assert_eq!(k2222.edge_count(), 24);
        let k45 = complete_multipartite(&[4, 5]).unwrap();
        assert_eq!(k45.edge_count(), 20);
        assert!(complete_multipartite(&[]).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
        // all parts of size 1 is the complete graph
        assert_eq!(complete_multipartite(&[1, 1, 1, 1]).unwrap(), complete_graph(4));
    }

    #[test]
    fn noncyclic_graph_examples() {
        let g = gamma("Z2xZ2xZ2");
        assert_eq!((g.vertex_count(), g.edge_count()), (7, 21));

        let g = gamma("Z2xZ6");
        assert_eq!((g.vertex_count(), g.edge_count()), (9, 27));

        let g = gamma("Z2xZ4");
        assert_eq!((g.vertex_count(), g.edge_count()), (7, 15));

        assert_eq!(
            build_noncyclic_graph(&catalog::make_cyclic(6).unwrap()),
            Err(GraphError::CyclicGroup)
        );
    }

    #[test]
    fn noncyclic_graph_invariants() {
        for e in catalog::catalog_up_to(16).unwrap() {
            if e.is_cyclic {
                continue;
            }
            let cyc = e.group.cyclicizer();
            let g = build_noncyclic_graph(&e.group).unwrap();
            assert_eq!(g.vertex_count(), e.order - cyc.len(), "{}", e.canonical_name);
            for v in 0..g.vertex_count() {
                assert!(g.degree(v) > 0, "isolated vertex in {}", e.canonical_name);
            }
        }
    }

    #[test]
    fn cyclic_subgroup_elements_are_nonadjacent() {
        let d8 = catalog::find_group("D8").unwrap();
        let g = build_noncyclic_graph(&d8).unwrap();
        // r, r2, r3 all lie in <r>
        let idx = |name: &str| g.labels().iter().position(|l| l == name).unwrap();
        let (r, r2, r3) = (idx("r"), idx("r2"), idx("r3"));
        assert!(!g.adjacent(r, r2));
        assert!(!g.adjacent(r, r3));
        assert!(!g.adjacent(r2, r3));
        let sub = g.induced_subgraph(&[r, r2, r3]).unwrap();
        assert_eq!(sub.edge_count(), 0);
    }

    #[test]
    fn clique_search() {
        let k7 = complete_graph(7);
        let w = find_clique(&k7, 7).unwrap();
        assert_eq!(w.parts[0], (0..7).collect::<Vec<_>>());
        assert!(w.validate(&k7));

        let d8 = gamma("D8");
        let w = find_clique(&d8, 5).unwrap();
        assert!(w.validate(&d8));
        // the 5-clique is exactly the involutions of D8
        let group = catalog::find_group("D8").unwrap();
        for &v in &w.parts[0] {
            let label = d8.label(v);
            let e = group.element_names().iter().position(|n| n == label).unwrap();
            assert_eq!(group.element_order(e).unwrap(), 2);
        }

        let k33 = complete_multipartite(&[3, 3]).unwrap();
        assert!(find_clique(&k33, 3).is_none());
    }

    #[test]
    fn bipartite_search() {
        for name in ["Z2xZ4", "Z2xZ6"] {
            let g = gamma(name);
            let w = find_complete_bipartite(&g, 3, 3).unwrap();
            assert!(w.validate(&g), "{name}");
        }
        // path on 3 vertices has no K_{2,2}
        let mut path = SimpleGraph::with_order(3);
        path.add_edge(0, 1).unwrap();
        path.add_edge(1, 2).unwrap();
        assert!(find_complete_bipartite(&path, 2, 2).is_none());
    }

    #[test]
    fn multipartite_recognition() {
        let g = gamma("Z3xZ3");
        assert_eq!(
            is_complete_multipartite(&g).unwrap().iter().map(Vec::len).collect::<Vec<_>>(),
            [2, 2, 2, 2]
        );

        let k7 = complete_graph(7);
        assert_eq!(is_complete_multipartite(&k7).unwrap().len(), 7);

        let mut path = SimpleGraph::with_order(3);
        path.add_edge(0, 1).unwrap();
        path.add_edge(1, 2).unwrap();
        assert_eq!(
            is_complete_multipartite(&path).unwrap().iter().map(Vec::len).collect::<Vec<_>>(),
            [1, 2]
        );

        // a 4-path is not complete multipartite
        let mut p4 = SimpleGraph::with_order(4);
        p4.add_edge(0, 1).unwrap();
        p4.add_edge(1, 2).unwrap();
        p4.add_edge(2, 3).unwrap();
        assert!(is_complete_multipartite(&p4).is_none());
    }

    #[test]
    fn girth_values() {
        assert_eq!(complete_graph(3).girth(), Some(3));
        let k33 = complete_multipartite(&[3, 3]).unwrap();
        assert_eq!(k33.girth(), Some(4));
        assert_eq!(gamma("Z2xZ6").girth(), Some(3));
        let mut tree = SimpleGraph::with_order(4);
        tree.add_edge(0, 1).unwrap();
        tree.add_edge(1, 2).unwrap();
        tree.add_edge(1, 3).unwrap();
        assert_eq!(tree.girth(), None);
    }

    #[test]
    fn induced_subgraph_and_exports() {
        let k7 = complete_graph(7);
        let sub = k7.induced_subgraph(&[1, 3, 5]).unwrap();
        assert_eq!(sub.edge_count(), 3);
        assert!(k7.induced_subgraph(&[9]).is_err());

        let dot = complete_graph(3).export_dot();
        assert_eq!(
            dot,
            "graph G {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  2 [label=\"2\"];\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n"
        );

        let g = gamma("Z2xZ4");
        let doc = g.to_document();
        let back = SimpleGraph::from_document(&doc).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn witness_validation_rejects_bad_witnesses() {
        let k33 = complete_multipartite(&[3, 3]).unwrap();
        let good = SubgraphWitness {
            kind: WitnessKind::CompleteBipartite,
            parts: vec![vec![0, 1, 2], vec![3, 4, 5]],
        };
        assert!(good.validate(&k33));
        let bad = SubgraphWitness {
            kind: WitnessKind::CompleteBipartite,
            parts: vec![vec![0, 1, 3], vec![2, 4, 5]],
        };
        assert!(!bad.validate(&k33));
        let overlapping = SubgraphWitness {
            kind: WitnessKind::CompleteBipartite,
            parts: vec![vec![0, 1, 2], vec![2, 4, 5]],
        };
        assert!(!overlapping.validate(&k33));
    }
}
