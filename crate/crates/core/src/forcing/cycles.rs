//! Enumeration of alternating cycles and exact disjoint-cycle packing.
//!
//! Every alternating cycle is discovered exactly once: it is rooted at its
//! minimum vertex and traversed in the direction of that vertex's matching
//! edge, so no canonicalization pass is needed.

use super::PoolCycle;
use crate::graph::{EdgeId, Graph, VertexId};
use crate::matchings::PerfectMatching;
use fixedbitset::FixedBitSet;

pub(crate) struct CyclePool {
    pub cycles: Vec<PoolCycle>,
    pub truncated: bool,
}

struct CycleSearch<'a> {
    g: &'a Graph,
    m: &'a PerfectMatching,
    len_cap: usize,
    count_cap: usize,
    root: usize,
    visited: FixedBitSet,
    path: Vec<EdgeId>,
    out: Vec<PoolCycle>,
    truncated: bool,
}

impl<'a> CycleSearch<'a> {
    fn record(&mut self, closing: EdgeId) {
        if self.out.len() >= self.count_cap {
            self.truncated = true;
            return;
        }
        let mut edges = self.path.clone();
        edges.push(closing);
        let mut vertices = FixedBitSet::with_capacity(self.g.vertex_count());
        for &e in &edges {
            let (a, b) = self.g.endpoints(e);
            vertices.insert(a.index());
            vertices.insert(b.index());
        }
        let m_edges: Vec<EdgeId> = edges
            .iter()
            .copied()
            .filter(|&e| self.m.contains(e))
            .collect();
        debug_assert_eq!(edges.len() % 2, 0);
        debug_assert_eq!(m_edges.len() * 2, edges.len());
        self.out.push(PoolCycle {
            edges,
            vertices,
            m_edges,
        });
    }

    fn dfs(&mut self, x: VertexId, expect_matched: bool) {
        if self.truncated {
            return;
        }
        if expect_matched {
            let e = self
                .m
                .matched_edge(self.g, x)
                .expect("perfect matching covers every vertex");
            let (a, b) = self.g.endpoints(e);
            let y = if a == x { b } else { a };
            if y.index() > self.root
                && !self.visited.contains(y.index())
                && self.path.len() < self.len_cap
            {
                self.path.push(e);
                self.visited.insert(y.index());
                self.dfs(y, false);
                self.visited.remove(y.index());
                self.path.pop();
            }
        } else {
            let adj: Vec<(VertexId, EdgeId)> = self.g.adjacency(x).to_vec();
            for (y, e) in adj {
                if self.m.contains(e) {
                    continue;
                }
                if y.index() == self.root {
                    if self.path.len() < self.len_cap {
                        self.record(e);
                    }
                } else if y.index() > self.root
                    && !self.visited.contains(y.index())
                    && self.path.len() < self.len_cap
                {
                    self.path.push(e);
                    self.visited.insert(y.index());
                    self.dfs(y, true);
                    self.visited.remove(y.index());
                    self.path.pop();
                }
            }
        }
    }
}

/// Enumerates alternating cycles of `m` with at most `len_cap` edges, up to
/// `count_cap` of them, in deterministic root-then-edge order.
pub(crate) fn enumerate_alternating_cycles(
    g: &Graph,
    m: &PerfectMatching,
    len_cap: usize,
    count_cap: usize,
) -> CyclePool {
    let mut search = CycleSearch {
        g,
        m,
        len_cap,
        count_cap,
        root: 0,
        visited: FixedBitSet::with_capacity(g.vertex_count()),
        path: Vec::new(),
        out: Vec::new(),
        truncated: false,
    };
    for root in 0..g.vertex_count() {
        if search.truncated {
            break;
        }
        search.root = root;
        search.visited.clear();
        search.visited.insert(root);
        search.dfs(VertexId(root as u32), true);
    }
    CyclePool {
        cycles: search.out,
        truncated: search.truncated,
    }
}

/// Exact maximum number of vertex-disjoint cycles from `pool`, by branch and
/// bound over the pool in index order.
pub(crate) fn max_disjoint_in_pool(g: &Graph, pool: &[PoolCycle]) -> usize {
    let mut order: Vec<usize> = (0..pool.len()).collect();
    order.sort_by_key(|&i| (pool[i].edges.len(), i));
    let mut best = 0usize;
    let mut used = FixedBitSet::with_capacity(g.vertex_count());
    fn rec(
        pool: &[PoolCycle],
        order: &[usize],
        idx: usize,
        used: &mut FixedBitSet,
        count: usize,
        best: &mut usize,
    ) {
        if count > *best {
            *best = count;
        }
        if idx == order.len() {
            return;
        }
        // optimistic: every remaining individually-compatible cycle packs
        let compatible = order[idx..]
            .iter()
            .filter(|&&i| used.is_disjoint(&pool[i].vertices))
            .count();
        if count + compatible <= *best {
            return;
        }
        let i = order[idx];
        if used.is_disjoint(&pool[i].vertices) {
            used.union_with(&pool[i].vertices);
            rec(pool, order, idx + 1, used, count + 1, best);
            used.difference_with(&pool[i].vertices);
        }
        rec(pool, order, idx + 1, used, count, best);
    }
    rec(pool, &order, 0, &mut used, 0, &mut best);
    best
}
