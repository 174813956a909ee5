//! Forcing sets and forcing numbers.
//!
//! A subset `S` of a perfect matching `M` forces `M` exactly when `G - V(S)`
//! is empty or has a unique perfect matching; the unique-matching decision is
//! the Kotzig reduction (delete the ends of a cut edge that separates an odd
//! component, repeat). Equivalently `S` is forcing iff it hits every
//! `M`-alternating cycle, which drives the exact solver: maintain a growing
//! family of alternating cycles, solve minimum hitting set exactly, and when
//! the candidate fails extract fresh cycles from a second perfect matching
//! of the residual graph.

mod cycles;
mod hitting;
mod sweep;

pub use sweep::{forcing_polynomial, spectrum, ForcingPolynomial, Spectrum, SweepBudget};

use crate::error::Error;
use crate::graph::{bridge_scan, EdgeId, Graph, Parity, VertexId};
use crate::matchings::{enumerate_with_mask, PerfectMatching};
use crate::Result;
use fixedbitset::FixedBitSet;
use itertools::Itertools;
use std::collections::VecDeque;

/// A subset of a perfect matching, candidate or witness forcing set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingSet {
    bits: FixedBitSet,
}

impl ForcingSet {
    /// Builds a forcing-set candidate, rejecting edges outside `m`.
    pub fn from_edges(g: &Graph, m: &PerfectMatching, edges: &[EdgeId]) -> Result<Self> {
        m.check_stamp(g)?;
        let mut bits = FixedBitSet::with_capacity(g.edge_count());
        for &e in edges {
            if e.index() >= g.edge_count() || !m.contains(e) {
                return Err(Error::NotASubset);
            }
            bits.insert(e.index());
        }
        Ok(ForcingSet { bits })
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.bits.ones().map(|e| EdgeId(e as u32))
    }

    pub fn to_sorted_edges(&self) -> Vec<u32> {
        self.bits.ones().map(|e| e as u32).collect()
    }
}

/// Alive mask of `g` after deleting both ends of every edge in `bits`.
fn alive_without_edge_ends(g: &Graph, bits: &FixedBitSet) -> FixedBitSet {
    let mut alive = FixedBitSet::with_capacity(g.vertex_count());
    alive.insert_range(..);
    for e in bits.ones() {
        let (a, b) = g.endpoints(EdgeId(e as u32));
        alive.remove(a.index());
        alive.remove(b.index());
    }
    alive
}

/// Kotzig reduction on the alive subgraph: true iff it is empty or has
/// exactly one perfect matching.
pub(crate) fn unique_pm_mask(g: &Graph, mut alive: FixedBitSet) -> bool {
    let nv = g.vertex_count();
    let mut degree = vec![0u32; nv];
    for x in alive.ones() {
        degree[x] = g
            .adjacency(VertexId(x as u32))
            .iter()
            .filter(|(w, _)| alive.contains(w.index()))
            .count() as u32;
    }
    let mut queue: VecDeque<usize> = alive.ones().filter(|&x| degree[x] <= 1).collect();
    loop {
        // pendant cascade: a degree-1 vertex fixes its edge in every matching
        while let Some(x) = queue.pop_front() {
            if !alive.contains(x) {
                continue;
            }
            match degree[x] {
                0 => return false,
                1 => {
                    let w = g
                        .adjacency(VertexId(x as u32))
                        .iter()
                        .find(|(w, _)| alive.contains(w.index()))
                        .map(|&(w, _)| w.index())
                        .expect("degree-1 vertex has an alive neighbor");
                    alive.remove(x);
                    alive.remove(w);
                    for y in [x, w] {
                        for &(z, _) in g.adjacency(VertexId(y as u32)) {
                            if alive.contains(z.index()) {
                                degree[z.index()] -= 1;
                                if degree[z.index()] <= 1 {
                                    queue.push_back(z.index());
                                }
                            }
                        }
                    }
                }
                _ => {}
            }
        }
        if alive.count_ones(..) == 0 {
            return true;
        }
        let scan = bridge_scan(g, &alive);
        if scan.has_odd_component {
            return false;
        }
        let Some(e) = scan
            .bridges
            .iter()
            .filter(|&&(_, p)| p == Parity::Odd)
            .map(|&(e, _)| e)
            .min()
        else {
            // every component is even with no odd-separating cut edge:
            // zero or at least two perfect matchings
            return false;
        };
        let (a, b) = g.endpoints(e);
        alive.remove(a.index());
        alive.remove(b.index());
        for y in [a.index(), b.index()] {
            for &(z, _) in g.adjacency(VertexId(y as u32)) {
                if alive.contains(z.index()) {
                    degree[z.index()] -= 1;
                    if degree[z.index()] <= 1 {
                        queue.push_back(z.index());
                    }
                }
            }
        }
    }
}

/// True iff `g` is empty or has exactly one perfect matching.
pub fn has_unique_pm(g: &Graph) -> bool {
    let mut alive = FixedBitSet::with_capacity(g.vertex_count());
    alive.insert_range(..);
    unique_pm_mask(g, alive)
}

/// True iff `s` forces `m`: `g - V(s)` is empty or `m \ s` is its unique
/// perfect matching.
pub fn is_forcing_set(g: &Graph, m: &PerfectMatching, s: &ForcingSet) -> Result<bool> {
    m.check_stamp(g)?;
    if !s.bits.is_subset(m.bits()) {
        return Err(Error::NotASubset);
    }
    Ok(unique_pm_mask(g, alive_without_edge_ends(g, &s.bits)))
}

/// First perfect matching different from `m` in enumeration order, if any.
pub fn find_second_pm(g: &Graph, m: &PerfectMatching) -> Result<Option<PerfectMatching>> {
    m.validate(g)?;
    let mut alive = FixedBitSet::with_capacity(g.vertex_count());
    alive.insert_range(..);
    Ok(second_pm_masked(g, &alive, m.bits()))
}

fn second_pm_masked(
    g: &Graph,
    alive: &FixedBitSet,
    reference: &FixedBitSet,
) -> Option<PerfectMatching> {
    enumerate_with_mask(g, alive)
        .take(2)
        .find(|x| x.bits() != reference)
}

/// A cycle whose edges strictly alternate inside and outside a reference
/// matching; stored in traversal order starting with a matching edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingCycle {
    edges: Vec<EdgeId>,
}

impl AlternatingCycle {
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// The cycle edges lying in `m`.
    pub fn matched_edges(&self, m: &PerfectMatching) -> Vec<EdgeId> {
        self.edges
            .iter()
            .copied()
            .filter(|&e| m.contains(e))
            .collect()
    }
}

/// Cycle record used by the enumeration pool.
pub(crate) struct PoolCycle {
    pub edges: Vec<EdgeId>,
    pub vertices: FixedBitSet,
    pub m_edges: Vec<EdgeId>,
}

/// Decomposes the symmetric difference of two edge sets in which every
/// vertex has degree 0 or 2 into cycles; each cycle starts with an `a`-edge
/// at its minimum vertex.
fn decompose_diff_bits(g: &Graph, a: &FixedBitSet, b: &FixedBitSet) -> Vec<Vec<EdgeId>> {
    let mut diff = a.clone();
    diff.symmetric_difference_with(b);
    let mut at: Vec<Vec<EdgeId>> = vec![Vec::new(); g.vertex_count()];
    for e in diff.ones() {
        let (x, y) = g.endpoints(EdgeId(e as u32));
        at[x.index()].push(EdgeId(e as u32));
        at[y.index()].push(EdgeId(e as u32));
    }
    let mut used = FixedBitSet::with_capacity(g.edge_count());
    let mut cycles = Vec::new();
    for start in 0..g.vertex_count() {
        if at[start].is_empty() || at[start].iter().all(|e| used.contains(e.index())) {
            continue;
        }
        debug_assert_eq!(at[start].len(), 2);
        let first = *at[start]
            .iter()
            .find(|e| a.contains(e.index()))
            .expect("each diff vertex has one edge from each matching");
        let mut cycle = Vec::new();
        let mut cur = start;
        let mut edge = first;
        loop {
            cycle.push(edge);
            used.insert(edge.index());
            let (x, y) = g.endpoints(edge);
            cur = if x.index() == cur {
                y.index()
            } else {
                x.index()
            };
            if cur == start {
                break;
            }
            edge = *at[cur]
                .iter()
                .find(|e| !used.contains(e.index()))
                .expect("diff walk continues until the start vertex");
        }
        cycles.push(cycle);
    }
    cycles
}

/// Splits `m (+) m2` into vertex-disjoint alternating cycles.
pub fn alternating_cycles_from_difference(
    g: &Graph,
    m: &PerfectMatching,
    m2: &PerfectMatching,
) -> Result<Vec<AlternatingCycle>> {
    m.check_stamp(g)?;
    m2.check_stamp(g)?;
    let cycles = decompose_diff_bits(g, m.bits(), m2.bits());
    Ok(cycles
        .into_iter()
        .map(|edges| AlternatingCycle { edges })
        .collect())
}

/// Exact minimum forcing number of `m` with one optimal witness set.
///
/// Implicit hitting set over alternating cycles: seed with short cycles,
/// then alternate exact hitting-set solves with Kotzig counterexample
/// extraction; each counterexample contributes cycles untouched by the
/// failed candidate, so the loop terminates with a certified optimum.
pub fn forcing_number(g: &Graph, m: &PerfectMatching) -> Result<(usize, ForcingSet)> {
    m.validate(g)
        .map_err(|e| Error::NotAPerfectMatching(e.to_string()))?;
    let m_edges: Vec<EdgeId> = m.edges().collect();
    let mut pos_of = vec![usize::MAX; g.edge_count()];
    for (i, e) in m_edges.iter().enumerate() {
        pos_of[e.index()] = i;
    }
    let to_constraint = |edges: &[EdgeId]| -> FixedBitSet {
        let mut c = FixedBitSet::with_capacity(m_edges.len());
        for e in edges {
            debug_assert_ne!(pos_of[e.index()], usize::MAX);
            c.insert(pos_of[e.index()]);
        }
        c
    };

    let mut constraints: Vec<FixedBitSet> = Vec::new();
    let seed = cycles::enumerate_alternating_cycles(g, m, 8, 10 * m_edges.len().max(1));
    for cyc in &seed.cycles {
        constraints.push(to_constraint(&cyc.m_edges));
    }

    loop {
        let (size, picks) = hitting::min_hitting_set(m_edges.len(), &constraints);
        let mut bits = FixedBitSet::with_capacity(g.edge_count());
        for p in &picks {
            bits.insert(m_edges[*p].index());
        }
        let alive = alive_without_edge_ends(g, &bits);
        if unique_pm_mask(g, alive.clone()) {
            return Ok((size, ForcingSet { bits }));
        }
        // residual part of m, restricted to alive vertices
        let mut m_res = m.bits().clone();
        for e in bits.ones() {
            m_res.remove(e);
        }
        let m2 = second_pm_masked(g, &alive, &m_res)
            .expect("candidate is not forcing, so a second matching exists");
        let before = constraints.len();
        for cycle in decompose_diff_bits(g, &m_res, m2.bits()) {
            let matched: Vec<EdgeId> = cycle.into_iter().filter(|&e| m.contains(e)).collect();
            constraints.push(to_constraint(&matched));
        }
        debug_assert!(constraints.len() > before);
    }
}

const ORACLE_EDGE_LIMIT: usize = 24;

/// Independent brute force: tests all subsets of `m` by increasing size.
/// Exponential; intended for cross-checking the solver on small instances.
pub fn forcing_number_oracle(g: &Graph, m: &PerfectMatching) -> Result<usize> {
    m.validate(g)
        .map_err(|e| Error::NotAPerfectMatching(e.to_string()))?;
    let edges: Vec<EdgeId> = m.edges().collect();
    if edges.len() > ORACLE_EDGE_LIMIT {
        return Err(Error::OracleSizeExceeded {
            size: edges.len(),
            limit: ORACLE_EDGE_LIMIT,
        });
    }
    for size in 0..=edges.len() {
        for combo in edges.iter().combinations(size) {
            let mut bits = FixedBitSet::with_capacity(g.edge_count());
            for e in combo {
                bits.insert(e.index());
            }
            if unique_pm_mask(g, alive_without_edge_ends(g, &bits)) {
                return Ok(size);
            }
        }
    }
    unreachable!("the whole matching always forces itself");
}

/// Outcome of the disjoint-cycle packing: exact when the cycle pool was
/// complete, otherwise only a lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PackingOutcome {
    Exact(usize),
    LowerBoundOnly(usize),
}

impl PackingOutcome {
    pub fn value(self) -> usize {
        match self {
            PackingOutcome::Exact(v) | PackingOutcome::LowerBoundOnly(v) => v,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, PackingOutcome::Exact(_))
    }
}

/// Exhaustively enumerates alternating cycles of `m` with at most `len_cap`
/// edges, stopping after `count_cap` cycles; the flag reports whether the
/// cap cut the enumeration short.
pub fn enumerate_alternating_cycles(
    g: &Graph,
    m: &PerfectMatching,
    len_cap: usize,
    count_cap: usize,
) -> Result<(Vec<AlternatingCycle>, bool)> {
    m.validate(g)
        .map_err(|e| Error::NotAPerfectMatching(e.to_string()))?;
    let pool = cycles::enumerate_alternating_cycles(g, m, len_cap, count_cap);
    let out = pool
        .cycles
        .into_iter()
        .map(|c| AlternatingCycle { edges: c.edges })
        .collect();
    Ok((out, pool.truncated))
}

/// Maximum number of vertex-disjoint alternating cycles of `m`, a lower
/// bound for the forcing number. The cycle pool is capped at `10 * n` cycles
/// of length at most `2n`; if the cap is hit the result is flagged as a
/// lower bound only.
pub fn max_disjoint_alternating_cycles(g: &Graph, m: &PerfectMatching) -> Result<PackingOutcome> {
    max_disjoint_alternating_cycles_with_caps(g, m, g.vertex_count(), 5 * g.vertex_count())
}

/// Packing with explicit enumeration caps (`len_cap` edges per cycle,
/// `count_cap` pooled cycles).
pub fn max_disjoint_alternating_cycles_with_caps(
    g: &Graph,
    m: &PerfectMatching,
    len_cap: usize,
    count_cap: usize,
) -> Result<PackingOutcome> {
    m.validate(g)
        .map_err(|e| Error::NotAPerfectMatching(e.to_string()))?;
    let pool = cycles::enumerate_alternating_cycles(g, m, len_cap, count_cap);
    let value = cycles::max_disjoint_in_pool(g, &pool.cycles);
    Ok(if pool.truncated {
        PackingOutcome::LowerBoundOnly(value)
    } else {
        PackingOutcome::Exact(value)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_from_edge_list, build_generalized_petersen};
    use crate::matchings::{decode, enumerate_perfect_matchings, parse_chain_expression};

    fn petersen(n: usize) -> Graph {
        build_generalized_petersen(n, 2).unwrap()
    }

    fn all_spokes(g: &Graph) -> PerfectMatching {
        let n = g.petersen().unwrap().0;
        let edges: Vec<EdgeId> = (0..n).map(|i| EdgeId(i as u32)).collect();
        PerfectMatching::from_edges(g, &edges).unwrap()
    }

    #[test]
    fn unique_pm_base_cases() {
        let empty = build_from_edge_list(0, &[]).unwrap();
        assert!(has_unique_pm(&empty));
        let k2 = build_from_edge_list(2, &[(0, 1)]).unwrap();
        assert!(has_unique_pm(&k2));
        let p5 = petersen(5);
        assert!(!has_unique_pm(&p5));
        let c4 = build_from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!has_unique_pm(&c4));
        let odd = build_from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!has_unique_pm(&odd));
    }

    #[test]
    fn empty_set_forces_only_unique_matchings() {
        let k2 = build_from_edge_list(2, &[(0, 1)]).unwrap();
        let m = PerfectMatching::from_edges(&k2, &[EdgeId(0)]).unwrap();
        let s = ForcingSet::from_edges(&k2, &m, &[]).unwrap();
        assert!(is_forcing_set(&k2, &m, &s).unwrap());

        let g = petersen(5);
        for m in enumerate_perfect_matchings(&g) {
            let s = ForcingSet::from_edges(&g, &m, &[]).unwrap();
            assert!(!is_forcing_set(&g, &m, &s).unwrap());
        }
    }

    #[test]
    fn forcing_set_rejects_non_subset() {
        let g = petersen(5);
        let m = enumerate_perfect_matchings(&g).next().unwrap();
        let outside = (0..g.edge_count() as u32)
            .map(EdgeId)
            .find(|&e| !m.contains(e))
            .unwrap();
        assert!(matches!(
            ForcingSet::from_edges(&g, &m, &[outside]),
            Err(Error::NotASubset)
        ));
    }

    #[test]
    fn single_spoke_does_not_force_all_spokes_on_p9() {
        let g = petersen(9);
        let m = all_spokes(&g);
        let s = ForcingSet::from_edges(&g, &m, &[EdgeId(0)]).unwrap();
        assert!(!is_forcing_set(&g, &m, &s).unwrap());
        let s3 = ForcingSet::from_edges(&g, &m, &[EdgeId(0), EdgeId(4), EdgeId(8)]).unwrap();
        assert!(is_forcing_set(&g, &m, &s3).unwrap());
    }

    #[test]
    fn second_pm_examples() {
        let k2 = build_from_edge_list(2, &[(0, 1)]).unwrap();
        let m = PerfectMatching::from_edges(&k2, &[EdgeId(0)]).unwrap();
        assert!(find_second_pm(&k2, &m).unwrap().is_none());

        let c4 = build_from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let ms: Vec<_> = enumerate_perfect_matchings(&c4).collect();
        let other = find_second_pm(&c4, &ms[0]).unwrap().unwrap();
        assert_ne!(other, ms[0]);

        let g = petersen(5);
        let m = enumerate_perfect_matchings(&g).next().unwrap();
        let m2 = find_second_pm(&g, &m).unwrap().unwrap();
        let cycles = alternating_cycles_from_difference(&g, &m, &m2).unwrap();
        assert!(!cycles.is_empty());
        assert!(cycles.iter().all(|c| c.len() >= 8));
    }

    #[test]
    fn difference_decomposition_covers_diff() {
        let g = petersen(7);
        let ms: Vec<_> = enumerate_perfect_matchings(&g).collect();
        for a in &ms {
            for b in &ms {
                let cycles = alternating_cycles_from_difference(&g, a, b).unwrap();
                let mut union = FixedBitSet::with_capacity(g.edge_count());
                for c in &cycles {
                    // strict alternation along the traversal
                    for (i, &e) in c.edges().iter().enumerate() {
                        assert_eq!(a.contains(e), i % 2 == 0);
                        assert_eq!(b.contains(e), i % 2 == 1);
                        union.insert(e.index());
                    }
                    assert_eq!(c.len() % 2, 0);
                }
                let mut expected = a.bits().clone();
                expected.symmetric_difference_with(b.bits());
                assert_eq!(union, expected);
                if a == b {
                    assert!(cycles.is_empty());
                }
            }
        }
    }

    #[test]
    fn single_block_flip_differs_by_one_eight_cycle() {
        // B^9 against its BA-flipped neighbour: the symmetric difference is
        // exactly one 8-cycle
        let g = petersen(9);
        let m = all_spokes(&g);
        let flipped = crate::constructions::transform_b5_to_ba(&g, &m, 0).unwrap();
        let cycles = alternating_cycles_from_difference(&g, &m, &flipped).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 8);
        assert_eq!(cycles[0].matched_edges(&m).len(), 4);
    }

    #[test]
    fn forcing_number_on_p5_is_two_everywhere() {
        let g = petersen(5);
        for m in enumerate_perfect_matchings(&g) {
            let (f, witness) = forcing_number(&g, &m).unwrap();
            assert_eq!(f, 2);
            assert_eq!(witness.len(), 2);
            assert!(is_forcing_set(&g, &m, &witness).unwrap());
        }
    }

    #[test]
    fn forcing_number_of_k2_is_zero() {
        let k2 = build_from_edge_list(2, &[(0, 1)]).unwrap();
        let m = PerfectMatching::from_edges(&k2, &[EdgeId(0)]).unwrap();
        assert_eq!(forcing_number(&k2, &m).unwrap().0, 0);
        assert_eq!(forcing_number_oracle(&k2, &m).unwrap(), 0);
    }

    #[test]
    fn witnesses_are_deterministic() {
        let g = petersen(14);
        let m = all_spokes(&g);
        let a = forcing_number(&g, &m).unwrap();
        let b = forcing_number(&g, &m).unwrap();
        assert_eq!(a.0, b.0);
        assert_eq!(a.1.to_sorted_edges(), b.1.to_sorted_edges());
    }

    #[test]
    fn solver_matches_oracle_small() {
        for n in 5..=8 {
            let g = petersen(n);
            for m in enumerate_perfect_matchings(&g) {
                let (f, _) = forcing_number(&g, &m).unwrap();
                assert_eq!(f, forcing_number_oracle(&g, &m).unwrap(), "n={n}");
            }
        }
    }

    #[test]
    fn all_spokes_forcing_number_small_cases() {
        // f(B^8) = 2 (frozen by the subset-search oracle)
        let g = petersen(8);
        let (f, _) = forcing_number(&g, &all_spokes(&g)).unwrap();
        assert_eq!(f, 2);
        // ceil(n/4) for n >= 9
        for n in 9..=16 {
            let g = petersen(n);
            let (f, _) = forcing_number(&g, &all_spokes(&g)).unwrap();
            assert_eq!(f, n.div_ceil(4), "n={n}");
        }
    }

    #[test]
    fn packing_examples() {
        let k2 = build_from_edge_list(2, &[(0, 1)]).unwrap();
        let m = PerfectMatching::from_edges(&k2, &[EdgeId(0)]).unwrap();
        assert_eq!(
            max_disjoint_alternating_cycles(&k2, &m).unwrap(),
            PackingOutcome::Exact(0)
        );

        let g = petersen(8);
        let m = all_spokes(&g);
        let out = max_disjoint_alternating_cycles(&g, &m).unwrap();
        assert!(out.value() <= 2);
        assert_eq!(out.value(), 2);

        let g = petersen(12);
        let m = all_spokes(&g);
        // the default pool is complete here (19 cycles in total)
        assert_eq!(
            max_disjoint_alternating_cycles(&g, &m).unwrap(),
            PackingOutcome::Exact(3)
        );
        let capped =
            max_disjoint_alternating_cycles_with_caps(&g, &m, g.vertex_count(), 5).unwrap();
        assert!(matches!(capped, PackingOutcome::LowerBoundOnly(v) if v <= 3));
    }

    #[test]
    fn packing_never_exceeds_forcing_number() {
        for n in [5usize, 6, 7, 8, 9] {
            let g = petersen(n);
            for m in enumerate_perfect_matchings(&g) {
                let (f, _) = forcing_number(&g, &m).unwrap();
                let c = max_disjoint_alternating_cycles(&g, &m).unwrap();
                assert!(c.value() <= f, "n={n}");
            }
        }
    }

    #[test]
    fn textual_type1_max_set_forces_all_spokes() {
        for n in 9..=40 {
            let g = petersen(n);
            let m = all_spokes(&g);
            let picks: Vec<EdgeId> = (0..n.div_ceil(4)).map(|i| EdgeId((4 * i) as u32)).collect();
            let s = ForcingSet::from_edges(&g, &m, &picks).unwrap();
            assert!(is_forcing_set(&g, &m, &s).unwrap(), "n={n}");
        }
        // ... but a single window of four free spokes breaks it
        let g = petersen(9);
        let m = all_spokes(&g);
        let s = ForcingSet::from_edges(&g, &m, &[EdgeId(0)]).unwrap();
        assert!(!is_forcing_set(&g, &m, &s).unwrap());
    }

    #[test]
    fn chain_word_matchings_have_expected_forcing_numbers() {
        // Reference row values: all type-2 matchings of P(11) have f = 2
        let g = petersen(11);
        let w = parse_chain_expression("D^2C").unwrap();
        let m = decode(&g, &w).unwrap();
        assert_eq!(forcing_number(&g, &m).unwrap().0, 2);
    }
}
