//! Perfect matchings of `P(n,2)`: enumeration, the two-type classification,
//! cyclic chain words, closed-form counts and dihedral canonicalization.

mod chain;
mod count;

pub use chain::{decode, encode, parse_chain_expression, period, ChainWord, Letter};
pub use count::{count_type1, count_type2};

use crate::error::Error;
use crate::graph::{EdgeId, Graph, VertexId};
use crate::Result;
use fixedbitset::FixedBitSet;

/// Identity stamp tying a matching to the graph it was built on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) struct GraphStamp {
    pub vertices: u32,
    pub edges: u32,
}

impl GraphStamp {
    pub fn of(g: &Graph) -> Self {
        GraphStamp {
            vertices: g.vertex_count() as u32,
            edges: g.edge_count() as u32,
        }
    }
}

/// A perfect matching stored as an edge bit-vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PerfectMatching {
    bits: FixedBitSet,
    stamp: GraphStamp,
}

impl PerfectMatching {
    pub(crate) fn from_bits(g: &Graph, bits: FixedBitSet) -> Self {
        debug_assert_eq!(bits.len(), g.edge_count());
        PerfectMatching {
            bits,
            stamp: GraphStamp::of(g),
        }
    }

    /// Builds a matching from explicit edge ids, validating that every vertex
    /// is covered exactly once.
    pub fn from_edges(g: &Graph, edges: &[EdgeId]) -> Result<Self> {
        let mut bits = FixedBitSet::with_capacity(g.edge_count());
        let mut covered = FixedBitSet::with_capacity(g.vertex_count());
        for &e in edges {
            if e.index() >= g.edge_count() {
                return Err(Error::NotAPerfectMatching(format!(
                    "edge id {e} out of range"
                )));
            }
            if bits.put(e.index()) {
                return Err(Error::NotAPerfectMatching(format!("duplicate edge {e}")));
            }
            let (a, b) = g.endpoints(e);
            if covered.put(a.index()) || covered.put(b.index()) {
                return Err(Error::NotAPerfectMatching(format!(
                    "edge {e} covers an already matched vertex"
                )));
            }
        }
        if covered.count_ones(..) != g.vertex_count() {
            return Err(Error::NotAPerfectMatching(
                "not every vertex is covered".into(),
            ));
        }
        Ok(PerfectMatching::from_bits(g, bits))
    }

    /// Validates both the graph stamp and the covering property.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        self.check_stamp(g)?;
        let mut covered = FixedBitSet::with_capacity(g.vertex_count());
        for e in self.bits.ones() {
            let (a, b) = g.endpoints(EdgeId(e as u32));
            if covered.put(a.index()) || covered.put(b.index()) {
                return Err(Error::NotAPerfectMatching(format!(
                    "edge {e} covers an already matched vertex"
                )));
            }
        }
        if covered.count_ones(..) != g.vertex_count() {
            return Err(Error::NotAPerfectMatching(
                "not every vertex is covered".into(),
            ));
        }
        Ok(())
    }

    pub(crate) fn check_stamp(&self, g: &Graph) -> Result<()> {
        if self.stamp != GraphStamp::of(g) {
            return Err(Error::GraphMismatch {
                expected_vertices: self.stamp.vertices as usize,
                expected_edges: self.stamp.edges as usize,
            });
        }
        Ok(())
    }

    #[inline]
    pub fn contains(&self, e: EdgeId) -> bool {
        self.bits.contains(e.index())
    }

    /// Number of matching edges.
    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.bits.ones().map(|e| EdgeId(e as u32))
    }

    /// Sorted edge-index list; the JSON serialization of a matching.
    pub fn to_sorted_edges(&self) -> Vec<u32> {
        self.bits.ones().map(|e| e as u32).collect()
    }

    pub(crate) fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    /// The matching edge at vertex `v`.
    pub fn matched_edge(&self, g: &Graph, v: VertexId) -> Option<EdgeId> {
        g.adjacency(v)
            .iter()
            .map(|&(_, e)| e)
            .find(|&e| self.contains(e))
    }
}

/// Lexicographic comparison of edge sets by ascending edge index sequence.
pub(crate) fn cmp_edge_sets(a: &FixedBitSet, b: &FixedBitSet) -> std::cmp::Ordering {
    a.ones().cmp(b.ones())
}

/// Two-type tag of a `P(n,2)` perfect matching, determined by the spoke
/// gaps: 0 mod 4 everywhere for type 1, 2 mod 4 for type 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatchingType {
    Type1,
    Type2,
}

/// Deterministic exhaustive enumerator: branch on the lowest-index uncovered
/// vertex and try its incident edges in edge-table order.
pub struct PmEnumerator<'g> {
    g: &'g Graph,
    covered: FixedBitSet,
    chosen: Vec<EdgeId>,
    // frame: (vertex, adjacency cursor, chosen edge for this frame if any)
    stack: Vec<(VertexId, usize, Option<EdgeId>)>,
    state: EnumState,
}

enum EnumState {
    Fresh,
    Running,
    Done,
}

/// Enumerates every perfect matching of `g` exactly once.
pub fn enumerate_perfect_matchings(g: &Graph) -> PmEnumerator<'_> {
    let covered = FixedBitSet::with_capacity(g.vertex_count());
    PmEnumerator {
        g,
        covered,
        chosen: Vec::new(),
        stack: Vec::new(),
        state: EnumState::Fresh,
    }
}

/// Enumerates perfect matchings of the subgraph induced on `alive`.
pub(crate) fn enumerate_with_mask<'g>(g: &'g Graph, alive: &FixedBitSet) -> PmEnumerator<'g> {
    let mut covered = alive.clone();
    covered.toggle_range(..);
    PmEnumerator {
        g,
        covered,
        chosen: Vec::new(),
        stack: Vec::new(),
        state: EnumState::Fresh,
    }
}

impl<'g> PmEnumerator<'g> {
    fn lowest_uncovered(&self) -> Option<VertexId> {
        self.covered.zeroes().next().map(|v| VertexId(v as u32))
    }

    fn yield_current(&self) -> PerfectMatching {
        let mut bits = FixedBitSet::with_capacity(self.g.edge_count());
        for &e in &self.chosen {
            bits.insert(e.index());
        }
        PerfectMatching::from_bits(self.g, bits)
    }
}

impl<'g> Iterator for PmEnumerator<'g> {
    type Item = PerfectMatching;

    fn next(&mut self) -> Option<PerfectMatching> {
        match self.state {
            EnumState::Done => return None,
            EnumState::Fresh => {
                self.state = EnumState::Running;
                match self.lowest_uncovered() {
                    None => {
                        // Nothing to cover: the empty matching is the unique PM.
                        self.state = EnumState::Done;
                        return Some(self.yield_current());
                    }
                    Some(v) => self.stack.push((v, 0, None)),
                }
            }
            EnumState::Running => {}
        }
        loop {
            let Some(top) = self.stack.len().checked_sub(1) else {
                self.state = EnumState::Done;
                return None;
            };
            let (v, cursor, prev) = self.stack[top];
            if let Some(e) = prev {
                // undo the previous choice of this frame
                let (a, b) = self.g.endpoints(e);
                self.covered.remove(a.index());
                self.covered.remove(b.index());
                self.chosen.pop();
                self.stack[top].2 = None;
            }
            let adj = self.g.adjacency(v);
            let mut advanced = false;
            let mut idx = cursor;
            while idx < adj.len() {
                let (w, e) = adj[idx];
                idx += 1;
                if self.covered.contains(w.index()) {
                    continue;
                }
                // choose edge e
                self.covered.insert(v.index());
                self.covered.insert(w.index());
                self.chosen.push(e);
                self.stack[top].1 = idx;
                self.stack[top].2 = Some(e);
                advanced = true;
                break;
            }
            if !advanced {
                self.stack.pop();
                continue;
            }
            match self.lowest_uncovered() {
                Some(u) => self.stack.push((u, 0, None)),
                None => return Some(self.yield_current()),
            }
        }
    }
}

/// Spoke positions of a `P(n,2)` matching, ascending.
pub(crate) fn spoke_positions(g: &Graph, m: &PerfectMatching) -> Vec<usize> {
    let n = g.petersen().expect("petersen graph").0;
    (0..n).filter(|&i| m.contains(EdgeId(i as u32))).collect()
}

/// Classification core shared by the public API and the census paths that
/// must also handle `n = 3` and `n = 4`.
pub(crate) fn classify_any(g: &Graph, m: &PerfectMatching) -> Result<MatchingType> {
    let n = g.require_petersen2(3)?;
    m.check_stamp(g)?;
    let spokes = spoke_positions(g, m);
    if spokes.is_empty() {
        return classify_spoke_free(g, m, n);
    }
    // All cyclic gaps between consecutive selected spokes agree mod 4.
    let mut residue: Option<usize> = None;
    let l = spokes.len();
    for j in 0..l {
        let gap = (spokes[(j + 1) % l] + n - spokes[j] - 1) % n;
        let r = gap % 4;
        match residue {
            None => residue = Some(r),
            Some(prev) if prev == r => {}
            Some(_) => {
                return Err(Error::CorruptMatching(
                    "inconsistent spoke gaps".to_string(),
                ))
            }
        }
    }
    match residue.unwrap() {
        0 => Ok(MatchingType::Type1),
        2 => Ok(MatchingType::Type2),
        _ => Err(Error::CorruptMatching("odd spoke gap".to_string())),
    }
}

fn classify_spoke_free(g: &Graph, m: &PerfectMatching, n: usize) -> Result<MatchingType> {
    if n % 4 != 0 {
        return Err(Error::CorruptMatching(
            "spoke-free matching requires n divisible by 4".to_string(),
        ));
    }
    if n == 4 {
        // The two spoke-free matchings of P(4,2) fit both tilings; split them
        // by convention so the special-case counts (2 and 1) come out right:
        // the one using rim edge v_0 v_1 is Type1.
        return if m.contains(g.rim_edge(0)) {
            Ok(MatchingType::Type1)
        } else {
            Ok(MatchingType::Type2)
        };
    }
    for t in 0..4 {
        if matches_tiling(g, m, n, t, Letter::A) {
            return Ok(MatchingType::Type1);
        }
    }
    for t in 0..4 {
        if matches_tiling(g, m, n, t, Letter::D) {
            return Ok(MatchingType::Type2);
        }
    }
    Err(Error::CorruptMatching(
        "spoke-free matching matches neither block tiling".to_string(),
    ))
}

fn matches_tiling(g: &Graph, m: &PerfectMatching, n: usize, t: usize, letter: Letter) -> bool {
    let word = ChainWord::repeat(letter, n / 4).with_anchor(t);
    match decode(g, &word) {
        Ok(other) => other == *m,
        Err(_) => false,
    }
}

/// Classifies a perfect matching of `P(n,2)`, `n >= 5`, by its spoke gaps.
pub fn classify(g: &Graph, m: &PerfectMatching) -> Result<MatchingType> {
    g.require_petersen2(5)?;
    classify_any(g, m)
}

/// Per-type matching counts obtained by exhaustive enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingCensus {
    pub n: usize,
    pub type1: u64,
    pub type2: u64,
    /// Canonical orbit representatives with orbit multiplicities, when requested.
    pub representatives: Option<Vec<(PerfectMatching, u64)>>,
}

impl MatchingCensus {
    pub fn total(&self) -> u64 {
        self.type1 + self.type2
    }
}

/// Enumerates and classifies every perfect matching of `P(n,2)`.
pub fn census(g: &Graph, max_matchings: usize) -> Result<MatchingCensus> {
    census_impl(g, max_matchings, false)
}

/// Census that also collects one canonical representative per dihedral
/// orbit, with orbit multiplicities.
pub fn census_with_representatives(g: &Graph, max_matchings: usize) -> Result<MatchingCensus> {
    census_impl(g, max_matchings, true)
}

fn census_impl(g: &Graph, max_matchings: usize, with_reps: bool) -> Result<MatchingCensus> {
    let n = g.require_petersen2(3)?;
    let maps = if with_reps {
        Some(dihedral_edge_maps(g))
    } else {
        None
    };
    let mut type1 = 0u64;
    let mut type2 = 0u64;
    let mut orbits: std::collections::HashMap<PerfectMatching, u64> =
        std::collections::HashMap::new();
    for (seen, m) in enumerate_perfect_matchings(g).enumerate() {
        if seen >= max_matchings {
            return Err(Error::BudgetExceeded {
                enumerated: seen + 1,
                budget: max_matchings,
            });
        }
        match classify_any(g, &m)? {
            MatchingType::Type1 => type1 += 1,
            MatchingType::Type2 => type2 += 1,
        }
        if let Some(maps) = &maps {
            *orbits
                .entry(canonicalize_with_maps(g, &m, maps))
                .or_insert(0) += 1;
        }
    }
    let representatives = maps.map(|_| {
        let mut reps: Vec<(PerfectMatching, u64)> = orbits.into_iter().collect();
        reps.sort_by(|(a, _), (b, _)| cmp_edge_sets(a.bits(), b.bits()));
        reps
    });
    Ok(MatchingCensus {
        n,
        type1,
        type2,
        representatives,
    })
}

/// Edge permutations of the dihedral group acting on `P(n,2)`: `n` rotations
/// composed with an optional reflection `i -> -i`.
pub(crate) fn dihedral_edge_maps(g: &Graph) -> Vec<Vec<EdgeId>> {
    let n = g.petersen().expect("petersen graph").0;
    let ne = g.edge_count();
    let mut maps = Vec::with_capacity(2 * n);
    for refl in [false, true] {
        for t in 0..n {
            let vmap = |x: VertexId| -> VertexId {
                let i = x.index() % n;
                let rim = x.index() >= n;
                let j = if refl { (n - i) % n } else { i };
                let j = (j + t) % n;
                if rim {
                    VertexId((n + j) as u32)
                } else {
                    VertexId(j as u32)
                }
            };
            let mut emap = Vec::with_capacity(ne);
            for e in 0..ne {
                let (a, b) = g.endpoints(EdgeId(e as u32));
                let img = g
                    .edge_between(vmap(a), vmap(b))
                    .expect("dihedral symmetry must map edges to edges");
                emap.push(img);
            }
            maps.push(emap);
        }
    }
    maps
}

/// Applies a precomputed edge permutation to a matching.
pub(crate) fn apply_edge_map(g: &Graph, m: &PerfectMatching, emap: &[EdgeId]) -> PerfectMatching {
    let mut bits = FixedBitSet::with_capacity(g.edge_count());
    for e in m.bits.ones() {
        bits.insert(emap[e].index());
    }
    PerfectMatching::from_bits(g, bits)
}

/// The lexicographically minimal edge bit-vector over the `2n` dihedral
/// images of `m` (rotations of both rims plus the reflection `i -> -i`).
pub fn canonicalize_dihedral(g: &Graph, m: &PerfectMatching) -> Result<PerfectMatching> {
    g.require_petersen2(3)?;
    m.check_stamp(g)?;
    let maps = dihedral_edge_maps(g);
    Ok(canonicalize_with_maps(g, m, &maps))
}

pub(crate) fn canonicalize_with_maps(
    g: &Graph,
    m: &PerfectMatching,
    maps: &[Vec<EdgeId>],
) -> PerfectMatching {
    let mut best: Option<PerfectMatching> = None;
    for emap in maps {
        let img = apply_edge_map(g, m, emap);
        best = match best {
            None => Some(img),
            Some(cur) => {
                if cmp_edge_sets(img.bits(), cur.bits()) == std::cmp::Ordering::Less {
                    Some(img)
                } else {
                    Some(cur)
                }
            }
        };
    }
    best.unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_from_edge_list, build_generalized_petersen};

    fn petersen(n: usize) -> Graph {
        build_generalized_petersen(n, 2).unwrap()
    }

    fn all_spokes(g: &Graph) -> PerfectMatching {
        let n = g.petersen().unwrap().0;
        let edges: Vec<EdgeId> = (0..n).map(|i| EdgeId(i as u32)).collect();
        PerfectMatching::from_edges(g, &edges).unwrap()
    }

    #[test]
    fn enumeration_counts_match_reference() {
        for (n, want) in [(3usize, 4usize), (5, 6), (6, 10)] {
            let g = petersen(n);
            assert_eq!(enumerate_perfect_matchings(&g).count(), want, "n={n}");
        }
    }

    #[test]
    fn enumeration_is_duplicate_free_and_deterministic() {
        let g = petersen(7);
        let run1: Vec<_> = enumerate_perfect_matchings(&g).collect();
        let run2: Vec<_> = enumerate_perfect_matchings(&g).collect();
        assert_eq!(run1, run2);
        let unique: std::collections::HashSet<_> = run1.iter().cloned().collect();
        assert_eq!(unique.len(), run1.len());
        for m in &run1 {
            m.validate(&g).unwrap();
        }
    }

    #[test]
    fn enumeration_of_empty_and_odd_graphs() {
        let empty = build_from_edge_list(0, &[]).unwrap();
        assert_eq!(enumerate_perfect_matchings(&empty).count(), 1);
        let single = build_from_edge_list(1, &[]).unwrap();
        assert_eq!(enumerate_perfect_matchings(&single).count(), 0);
        let c4 = build_from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(enumerate_perfect_matchings(&c4).count(), 2);
    }

    #[test]
    fn classify_all_spokes_is_type1() {
        for n in [5usize, 8, 9, 12] {
            let g = petersen(n);
            assert_eq!(classify(&g, &all_spokes(&g)).unwrap(), MatchingType::Type1);
        }
    }

    #[test]
    fn classify_spoke_free_patterns() {
        let g = petersen(8);
        let word_a = ChainWord::repeat(Letter::A, 2);
        let m = decode(&g, &word_a).unwrap();
        assert_eq!(classify(&g, &m).unwrap(), MatchingType::Type1);
        let word_d = ChainWord::repeat(Letter::D, 2);
        let m = decode(&g, &word_d).unwrap();
        assert_eq!(classify(&g, &m).unwrap(), MatchingType::Type2);
    }

    #[test]
    fn classify_single_spoke_needs_odd_n() {
        // one spoke on odd n: type depends on n-1 mod 4
        let g = petersen(9);
        // single spoke at 0 on P(9): gap 8 = 0 mod 4 -> Type1
        let w = parse_chain_expression("BA^2").unwrap();
        let m = decode(&g, &w).unwrap();
        assert_eq!(classify(&g, &m).unwrap(), MatchingType::Type1);

        let g = petersen(7);
        // single spoke at 0 on P(7): gap 6 = 2 mod 4 -> Type2 (word C D)
        let w = parse_chain_expression("CD").unwrap();
        let m = decode(&g, &w).unwrap();
        assert_eq!(spoke_positions(&g, &m), vec![1]);
        assert_eq!(classify(&g, &m).unwrap(), MatchingType::Type2);
    }

    #[test]
    fn classify_rejects_small_or_foreign_graphs() {
        let g = petersen(4);
        let m = all_spokes(&g);
        assert!(matches!(classify(&g, &m), Err(Error::NotPetersen { .. })));
        let other = petersen(6);
        let m6 = all_spokes(&other);
        assert!(classify(&g, &m6).is_err());
    }

    #[test]
    fn census_matches_special_small_cases() {
        let g = petersen(3);
        let c = census(&g, 1000).unwrap();
        assert_eq!((c.type1, c.type2), (1, 3));
        let g = petersen(4);
        let c = census(&g, 1000).unwrap();
        assert_eq!((c.type1, c.type2), (2, 1));
    }

    #[test]
    fn census_representatives_cover_all_orbits() {
        let g = petersen(8);
        let c = census_with_representatives(&g, 1000).unwrap();
        let reps = c.representatives.as_ref().unwrap();
        let total: u64 = reps.iter().map(|(_, count)| count).sum();
        assert_eq!(total, c.total());
        for (rep, _) in reps {
            assert_eq!(&canonicalize_dihedral(&g, rep).unwrap(), rep);
        }
        // P(8,2): 17 matchings in 4 orbits (B^8, the AB^4 class, and the
        // two spoke-free tilings)
        assert_eq!(reps.len(), 4);
    }

    #[test]
    fn census_budget_is_enforced() {
        let g = petersen(6);
        assert!(matches!(census(&g, 3), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn canonicalization_is_idempotent_and_orbit_constant() {
        let g = petersen(8);
        let maps = dihedral_edge_maps(&g);
        for m in enumerate_perfect_matchings(&g) {
            let c = canonicalize_dihedral(&g, &m).unwrap();
            let cc = canonicalize_dihedral(&g, &c).unwrap();
            assert_eq!(c, cc);
            for emap in &maps {
                let img = apply_edge_map(&g, &m, emap);
                assert_eq!(canonicalize_dihedral(&g, &img).unwrap(), c);
            }
        }
    }

    #[test]
    fn all_spokes_is_rotation_invariant() {
        let g = petersen(10);
        let m = all_spokes(&g);
        let c = canonicalize_dihedral(&g, &m).unwrap();
        assert_eq!(c, m);
    }
}
