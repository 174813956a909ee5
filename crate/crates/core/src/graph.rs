//! Immutable undirected graphs with a generalized Petersen generator.
//!
//! Vertex numbering for `P(n,k)` is frozen: inner vertex `u_i` is `i`, rim
//! vertex `v_i` is `n + i`. The edge table is also frozen: spokes `u_i v_i`
//! first (edge id `i`), then rim edges `v_i v_{i+1}` (edge id `n + i`), then
//! inner edges `u_i u_{i+k}` deduplicated in order of increasing `i`. Chain
//! word anchors and all index arithmetic elsewhere rely on this layout.

use crate::error::Error;
use crate::Result;
use fixedbitset::FixedBitSet;

/// Index of a vertex, in `[0, vertex_count)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

/// Index into a graph's edge table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl std::fmt::Display for VertexId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::fmt::Display for EdgeId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Parity of a vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// An immutable simple undirected graph.
///
/// Graphs are safe to share across threads; every query is read-only.
#[derive(Debug, Clone)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
    spoke: FixedBitSet,
    petersen: Option<(usize, usize)>,
}

impl Graph {
    fn new(vertex_count: usize) -> Self {
        Graph {
            vertex_count,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); vertex_count],
            spoke: FixedBitSet::new(),
            petersen: None,
        }
    }

    /// Adds an edge unless the same unordered pair is already present.
    fn push_edge_dedup(&mut self, a: VertexId, b: VertexId, is_spoke: bool) {
        debug_assert!(a != b);
        if self.edge_between(a, b).is_some() {
            return;
        }
        let id = EdgeId(self.edges.len() as u32);
        self.edges.push((a, b));
        self.adjacency[a.index()].push((b, id));
        self.adjacency[b.index()].push((a, id));
        self.spoke.grow(self.edges.len());
        if is_spoke {
            self.spoke.insert(id.index());
        }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e.index()]
    }

    /// Neighbors of `v` with the connecting edge, in edge-table order.
    #[inline]
    pub fn adjacency(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v.index()]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v.index()].len()
    }

    pub fn edge_between(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        self.adjacency[a.index()]
            .iter()
            .find(|(w, _)| *w == b)
            .map(|&(_, e)| e)
    }

    #[inline]
    pub fn is_spoke(&self, e: EdgeId) -> bool {
        self.spoke.contains(e.index())
    }

    /// `(n, k)` when the graph was built by [`build_generalized_petersen`].
    #[inline]
    pub fn petersen(&self) -> Option<(usize, usize)> {
        self.petersen
    }

    /// Requires the graph to be a `P(n,2)` with `n >= min_n` and returns `n`.
    pub fn require_petersen2(&self, min_n: usize) -> Result<usize> {
        match self.petersen {
            Some((n, 2)) if n >= min_n => Ok(n),
            _ => Err(Error::NotPetersen { min_n }),
        }
    }

    /// Inner vertex `u_i` of a Petersen graph.
    #[inline]
    pub fn u(&self, i: usize) -> VertexId {
        let n = self.petersen.expect("not a Petersen graph").0;
        VertexId((i % n) as u32)
    }

    /// Rim vertex `v_i` of a Petersen graph.
    #[inline]
    pub fn v(&self, i: usize) -> VertexId {
        let n = self.petersen.expect("not a Petersen graph").0;
        VertexId((n + i % n) as u32)
    }

    /// Spoke `u_i v_i`; edge id `i` by the frozen table layout.
    #[inline]
    pub fn spoke_edge(&self, i: usize) -> EdgeId {
        let n = self.petersen.expect("not a Petersen graph").0;
        EdgeId((i % n) as u32)
    }

    /// Rim edge `v_i v_{i+1}`; edge id `n + i` by the frozen table layout.
    #[inline]
    pub fn rim_edge(&self, i: usize) -> EdgeId {
        let n = self.petersen.expect("not a Petersen graph").0;
        EdgeId((n + i % n) as u32)
    }

    /// Inner edge `u_i u_{i+k}`, looked up so that collapsed duplicates
    /// (the `n = 2k` case) resolve to the stored edge.
    pub fn inner_edge(&self, i: usize) -> EdgeId {
        let (_, k) = self.petersen.expect("not a Petersen graph");
        self.edge_between(self.u(i), self.u(i + k))
            .expect("inner edge must exist")
    }

    /// Plain-text edge list, one `u v` pair per line, 0-based.
    pub fn render_edge_list(&self) -> String {
        let mut out = String::new();
        for &(a, b) in &self.edges {
            out.push_str(&format!("{} {}\n", a.0, b.0));
        }
        out
    }
}

/// Builds `P(n,k)` with the frozen vertex numbering and edge-table layout.
///
/// For `n = 2k` the two copies of each inner edge collapse into one, so the
/// graph stays simple (e.g. `P(4,2)` has 10 edges, not 12).
pub fn build_generalized_petersen(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || k < 1 || k > n - 1 {
        return Err(Error::BadPetersenParams { n, k });
    }
    let mut g = Graph::new(2 * n);
    g.petersen = Some((n, k));
    let u = |i: usize| VertexId((i % n) as u32);
    let v = |i: usize| VertexId((n + i % n) as u32);
    for i in 0..n {
        g.push_edge_dedup(u(i), v(i), true);
    }
    for i in 0..n {
        g.push_edge_dedup(v(i), v(i + 1), false);
    }
    for i in 0..n {
        g.push_edge_dedup(u(i), u(i + k), false);
    }
    Ok(g)
}

/// Builds a simple graph on `vertex_count` vertices from an edge list.
///
/// Duplicate pairs are stored once; self-loops and out-of-range endpoints are
/// rejected.
pub fn build_from_edge_list(vertex_count: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
    let mut g = Graph::new(vertex_count);
    for &(a, b) in pairs {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        for x in [a, b] {
            if x >= vertex_count {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    vertices: vertex_count,
                });
            }
        }
        g.push_edge_dedup(VertexId(a as u32), VertexId(b as u32), false);
    }
    Ok(g)
}

/// Parses the plain-text edge-list format emitted by [`Graph::render_edge_list`].
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut pairs = Vec::new();
    let mut max_v = 0usize;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<usize> {
            tok.and_then(|t| t.parse().ok()).ok_or_else(|| {
                Error::InvalidArgument(format!("bad edge-list line {}: {:?}", lineno + 1, line))
            })
        };
        let a = parse(it.next())?;
        let b = parse(it.next())?;
        max_v = max_v.max(a).max(b);
        pairs.push((a, b));
    }
    let count = if pairs.is_empty() { 0 } else { max_v + 1 };
    build_from_edge_list(count, &pairs)
}

/// All bridges (cut edges) of the graph, sorted by edge id.
pub fn bridges(g: &Graph) -> Vec<EdgeId> {
    let mut alive = FixedBitSet::with_capacity(g.vertex_count());
    alive.insert_range(..);
    let mut out: Vec<EdgeId> = bridge_scan(g, &alive)
        .bridges
        .into_iter()
        .map(|(e, _)| e)
        .collect();
    out.sort_unstable();
    out
}

/// Connected components of the subgraph induced on the non-removed vertices,
/// each tagged with the parity of its size.
pub fn components_with_parity(g: &Graph, removed: &[VertexId]) -> Vec<(Vec<VertexId>, Parity)> {
    let mut alive = FixedBitSet::with_capacity(g.vertex_count());
    alive.insert_range(..);
    for v in removed {
        alive.remove(v.index());
    }
    let mut seen = FixedBitSet::with_capacity(g.vertex_count());
    let mut out = Vec::new();
    for start in alive.ones() {
        if seen.contains(start) {
            continue;
        }
        let mut comp = vec![VertexId(start as u32)];
        seen.insert(start);
        let mut stack = vec![VertexId(start as u32)];
        while let Some(x) = stack.pop() {
            for &(w, _) in g.adjacency(x) {
                if alive.contains(w.index()) && !seen.contains(w.index()) {
                    seen.insert(w.index());
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        let parity = if comp.len() % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        };
        out.push((comp, parity));
    }
    out.sort_by_key(|(c, _)| c[0]);
    out
}

pub(crate) struct BridgeScan {
    /// Bridges of the alive subgraph paired with the parity of one side.
    pub bridges: Vec<(EdgeId, Parity)>,
    pub has_odd_component: bool,
}

/// One DFS pass over the alive subgraph: component parities plus all bridges,
/// each tagged with the parity of the subtree it separates. Iterative so that
/// large instances cannot overflow the stack.
pub(crate) fn bridge_scan(g: &Graph, alive: &FixedBitSet) -> BridgeScan {
    let nv = g.vertex_count();
    let mut disc = vec![0u32; nv]; // 0 = unvisited; times start at 1
    let mut low = vec![0u32; nv];
    let mut sub = vec![1u32; nv];
    let mut time = 0u32;
    let mut bridges = Vec::new();
    let mut has_odd_component = false;

    // frame: (vertex, parent edge, adjacency cursor)
    let mut stack: Vec<(usize, Option<EdgeId>, usize)> = Vec::new();
    for root in alive.ones() {
        if disc[root] != 0 {
            continue;
        }
        time += 1;
        disc[root] = time;
        low[root] = time;
        stack.push((root, None, 0));
        while let Some(top) = stack.len().checked_sub(1) {
            let (x, pe, cursor) = stack[top];
            let adj = g.adjacency(VertexId(x as u32));
            if cursor < adj.len() {
                stack[top].2 += 1;
                let (w, e) = adj[cursor];
                let wi = w.index();
                if !alive.contains(wi) || Some(e) == pe {
                    continue;
                }
                if disc[wi] == 0 {
                    time += 1;
                    disc[wi] = time;
                    low[wi] = time;
                    stack.push((wi, Some(e), 0));
                } else {
                    low[x] = low[x].min(disc[wi]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    sub[p] += sub[x];
                    low[p] = low[p].min(low[x]);
                    if low[x] > disc[p] {
                        let parity = if sub[x] % 2 == 1 {
                            Parity::Odd
                        } else {
                            Parity::Even
                        };
                        bridges.push((pe.unwrap(), parity));
                    }
                }
            }
        }
        if sub[root] % 2 == 1 {
            has_odd_component = true;
        }
    }
    BridgeScan {
        bridges,
        has_odd_component,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_5_2_shape() {
        let g = build_generalized_petersen(5, 2).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(VertexId(v)) == 3));
    }

    #[test]
    fn petersen_12_2_neighbors_of_u0() {
        let g = build_generalized_petersen(12, 2).unwrap();
        let mut nbrs: Vec<u32> = g.adjacency(VertexId(0)).iter().map(|(w, _)| w.0).collect();
        nbrs.sort_unstable();
        // u_2 = 2, u_10 = 10, v_0 = 12
        assert_eq!(nbrs, vec![2, 10, 12]);
    }

    #[test]
    fn petersen_4_2_deduplicates_inner_edges() {
        let g = build_generalized_petersen(4, 2).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 10);
    }

    #[test]
    fn petersen_is_cubic_with_n_spokes_for_n_at_least_5() {
        for n in 5..=40 {
            let g = build_generalized_petersen(n, 2).unwrap();
            assert_eq!(g.edge_count(), 3 * n);
            assert!(
                (0..2 * n).all(|v| g.degree(VertexId(v as u32)) == 3),
                "n={n}"
            );
            let spokes = (0..g.edge_count())
                .filter(|&e| g.is_spoke(EdgeId(e as u32)))
                .count();
            assert_eq!(spokes, n);
        }
    }

    #[test]
    fn petersen_rejects_bad_parameters() {
        assert!(build_generalized_petersen(2, 1).is_err());
        assert!(build_generalized_petersen(5, 0).is_err());
        assert!(build_generalized_petersen(5, 5).is_err());
    }

    #[test]
    fn petersen_edge_table_layout_is_frozen() {
        let g = build_generalized_petersen(7, 2).unwrap();
        for i in 0..7 {
            assert_eq!(g.endpoints(EdgeId(i)), (VertexId(i), VertexId(7 + i)));
            assert!(g.is_spoke(EdgeId(i)));
            let (a, b) = g.endpoints(EdgeId(7 + i));
            assert_eq!((a.0, b.0), (7 + i, 7 + (i + 1) % 7));
            assert!(!g.is_spoke(EdgeId(7 + i)));
        }
        let g2 = build_generalized_petersen(7, 2).unwrap();
        assert_eq!(g.edges, g2.edges);
    }

    #[test]
    fn edge_list_roundtrip_matches_generator() {
        let g = build_generalized_petersen(5, 2).unwrap();
        let text = g.render_edge_list();
        assert_eq!(text.lines().count(), 15);
        let h = parse_edge_list(&text).unwrap();
        assert_eq!(h.vertex_count(), 10);
        assert_eq!(h.edge_count(), 15);
        for e in 0..15 {
            assert!(h
                .edge_between(g.endpoints(EdgeId(e)).0, g.endpoints(EdgeId(e)).1)
                .is_some());
        }
    }

    #[test]
    fn from_edge_list_rejects_bad_input() {
        assert!(matches!(
            build_from_edge_list(3, &[(1, 1)]),
            Err(Error::SelfLoop(1))
        ));
        assert!(matches!(
            build_from_edge_list(2, &[(0, 5)]),
            Err(Error::VertexOutOfRange { .. })
        ));
        let k2 = build_from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
    }

    #[test]
    fn bridges_on_small_graphs() {
        let path3 = build_from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(bridges(&path3), vec![EdgeId(0), EdgeId(1)]);

        let k2 = build_from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(bridges(&k2), vec![EdgeId(0)]);

        let c4 = build_from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(bridges(&c4).is_empty());

        let petersen = build_generalized_petersen(5, 2).unwrap();
        assert!(bridges(&petersen).is_empty());
    }

    /// Brute-force cross-check: an edge is a bridge iff deleting it splits
    /// its component.
    fn bridges_brute(g: &Graph) -> Vec<EdgeId> {
        let count_components = |skip: Option<EdgeId>| -> usize {
            let mut seen = vec![false; g.vertex_count()];
            let mut comps = 0;
            for s in 0..g.vertex_count() {
                if seen[s] {
                    continue;
                }
                comps += 1;
                let mut stack = vec![s];
                seen[s] = true;
                while let Some(x) = stack.pop() {
                    for &(w, e) in g.adjacency(VertexId(x as u32)) {
                        if Some(e) == skip || seen[w.index()] {
                            continue;
                        }
                        seen[w.index()] = true;
                        stack.push(w.index());
                    }
                }
            }
            comps
        };
        let base = count_components(None);
        (0..g.edge_count())
            .map(|e| EdgeId(e as u32))
            .filter(|&e| count_components(Some(e)) > base)
            .collect()
    }

    #[test]
    fn bridges_agree_with_brute_force_on_corpus() {
        let mut corpus = vec![
            build_from_edge_list(1, &[]).unwrap(),
            build_from_edge_list(2, &[(0, 1)]).unwrap(),
            build_from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
                .unwrap(),
            build_from_edge_list(7, &[(0, 1), (1, 2), (3, 4), (4, 5), (5, 6), (6, 3)]).unwrap(),
            build_generalized_petersen(4, 2).unwrap(),
            build_generalized_petersen(6, 2).unwrap(),
            build_generalized_petersen(6, 3).unwrap(),
        ];
        // deterministic pseudo-random sparse graphs on <= 12 vertices
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for nv in [5usize, 8, 10, 12] {
            for _ in 0..20 {
                let mut pairs = Vec::new();
                for a in 0..nv {
                    for b in (a + 1)..nv {
                        if next() % 100 < 22 {
                            pairs.push((a, b));
                        }
                    }
                }
                corpus.push(build_from_edge_list(nv, &pairs).unwrap());
            }
        }
        for g in &corpus {
            assert_eq!(bridges(g), bridges_brute(g));
        }
    }

    #[test]
    fn components_and_parity() {
        let g = build_generalized_petersen(5, 2).unwrap();
        let comps = components_with_parity(&g, &[]);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].0.len(), 10);
        assert_eq!(comps[0].1, Parity::Even);

        let comps = components_with_parity(&g, &[VertexId(0), VertexId(5)]);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].0.len(), 8);
        assert_eq!(comps[0].1, Parity::Even);

        let k2 = build_from_edge_list(2, &[(0, 1)]).unwrap();
        let comps = components_with_parity(&k2, &[VertexId(0)]);
        assert_eq!(comps, vec![(vec![VertexId(1)], Parity::Odd)]);
    }
}
