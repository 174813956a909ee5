//! Exact minimum hitting set by branch and bound.
//!
//! Constraints are small subsets of a dense universe (the edges of one
//! matching). Branching picks the un-hit constraint with the fewest
//! elements; the lower bound is a greedy maximal disjoint subfamily; nodes
//! memoize on the un-hit constraint signature.

use fixedbitset::FixedBitSet;
use std::collections::HashMap;

/// Returns `(size, witness)` of a minimum hitting set, the witness being the
/// lexicographically-first optimal set found by the deterministic search.
pub(crate) fn min_hitting_set(universe: usize, constraints: &[FixedBitSet]) -> (usize, Vec<usize>) {
    let sets = reduce_to_minimal(constraints);
    if sets.is_empty() {
        return (0, Vec::new());
    }
    debug_assert!(sets.iter().all(|s| s.count_ones(..) > 0));

    let (greedy_size, greedy_set) = greedy_cover(universe, &sets);
    let mut ctx = Ctx {
        sets: &sets,
        best_size: greedy_size,
        best_set: greedy_set,
        memo: HashMap::new(),
    };
    let all: Vec<u32> = (0..sets.len() as u32).collect();
    let mut chosen = Vec::new();
    ctx.search(&all, &mut chosen);
    ctx.best_set.sort_unstable();
    (ctx.best_size, ctx.best_set)
}

/// Keeps one copy of each inclusion-minimal constraint; any set containing a
/// kept set is hit automatically.
fn reduce_to_minimal(constraints: &[FixedBitSet]) -> Vec<FixedBitSet> {
    let mut sets: Vec<FixedBitSet> = constraints.to_vec();
    sets.sort_by(|a, b| {
        a.count_ones(..)
            .cmp(&b.count_ones(..))
            .then_with(|| a.ones().cmp(b.ones()))
    });
    sets.dedup();
    let mut kept: Vec<FixedBitSet> = Vec::with_capacity(sets.len());
    'next: for s in sets {
        for k in &kept {
            if k.is_subset(&s) {
                continue 'next;
            }
        }
        kept.push(s);
    }
    kept
}

fn greedy_cover(universe: usize, sets: &[FixedBitSet]) -> (usize, Vec<usize>) {
    let mut unhit: Vec<usize> = (0..sets.len()).collect();
    let mut picked = Vec::new();
    while !unhit.is_empty() {
        let mut gain = vec![0usize; universe];
        for &i in &unhit {
            for e in sets[i].ones() {
                gain[e] += 1;
            }
        }
        let best = (0..universe)
            .max_by_key(|&e| (gain[e], usize::MAX - e))
            .unwrap();
        picked.push(best);
        unhit.retain(|&i| !sets[i].contains(best));
    }
    (picked.len(), picked)
}

struct Ctx<'a> {
    sets: &'a [FixedBitSet],
    best_size: usize,
    best_set: Vec<usize>,
    memo: HashMap<Vec<u32>, usize>,
}

impl<'a> Ctx<'a> {
    /// Greedy maximal disjoint subfamily of the un-hit constraints: any
    /// hitting set needs one distinct element per member.
    fn packing_bound(&self, unhit: &[u32]) -> usize {
        let mut taken: Option<FixedBitSet> = None;
        let mut count = 0;
        for &i in unhit {
            let s = &self.sets[i as usize];
            match &mut taken {
                None => {
                    taken = Some(s.clone());
                    count += 1;
                }
                Some(t) => {
                    if t.is_disjoint(s) {
                        t.union_with(s);
                        count += 1;
                    }
                }
            }
        }
        count
    }

    fn search(&mut self, unhit: &[u32], chosen: &mut Vec<usize>) {
        if unhit.is_empty() {
            if chosen.len() < self.best_size {
                self.best_size = chosen.len();
                self.best_set = chosen.clone();
            }
            return;
        }
        if chosen.len() + self.packing_bound(unhit) >= self.best_size {
            return;
        }
        if let Some(&known) = self.memo.get(unhit) {
            if chosen.len() + known >= self.best_size {
                return;
            }
        }
        let pick = *unhit
            .iter()
            .min_by_key(|&&i| (self.sets[i as usize].count_ones(..), i))
            .unwrap();
        for e in self.sets[pick as usize].ones() {
            chosen.push(e);
            let next: Vec<u32> = unhit
                .iter()
                .copied()
                .filter(|&i| !self.sets[i as usize].contains(e))
                .collect();
            self.search(&next, chosen);
            chosen.pop();
        }
        // Exhaustive exploration below this node found nothing cheaper than
        // the current best, so completing from `unhit` costs at least this.
        let bound = self.best_size - chosen.len();
        self.memo
            .entry(unhit.to_vec())
            .and_modify(|b| *b = (*b).max(bound))
            .or_insert(bound);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(universe: usize, elems: &[usize]) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(universe);
        for &e in elems {
            s.insert(e);
        }
        s
    }

    /// Exhaustive reference over all subsets of a small universe.
    fn brute(universe: usize, sets: &[FixedBitSet]) -> usize {
        assert!(universe <= 16);
        let mut best = universe;
        for mask in 0u32..(1 << universe) {
            if sets.iter().all(|s| s.ones().any(|e| mask >> e & 1 == 1)) {
                best = best.min(mask.count_ones() as usize);
            }
        }
        best
    }

    #[test]
    fn trivial_instances() {
        assert_eq!(min_hitting_set(5, &[]), (0, vec![]));
        let sets = vec![set(5, &[2])];
        assert_eq!(min_hitting_set(5, &sets), (1, vec![2]));
    }

    #[test]
    fn disjoint_sets_need_one_each() {
        let sets = vec![set(9, &[0, 1, 2]), set(9, &[3, 4]), set(9, &[5, 6, 7])];
        let (size, w) = min_hitting_set(9, &sets);
        assert_eq!(size, 3);
        assert!(sets.iter().all(|s| w.iter().any(|&e| s.contains(e))));
    }

    #[test]
    fn shared_element_collapses() {
        let sets = vec![set(6, &[0, 5]), set(6, &[1, 5]), set(6, &[2, 5])];
        assert_eq!(min_hitting_set(6, &sets), (1, vec![5]));
    }

    #[test]
    fn superset_constraints_are_dropped() {
        let sets = vec![set(6, &[1, 2]), set(6, &[1, 2, 3, 4])];
        assert_eq!(min_hitting_set(6, &sets).0, 1);
    }

    #[test]
    fn matches_brute_force_on_random_instances() {
        let mut state = 0x9E3779B97F4A7C15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..60 {
            let universe = 8 + (next() % 5) as usize;
            let n_sets = 3 + (next() % 8) as usize;
            let mut sets = Vec::new();
            for _ in 0..n_sets {
                let mut elems = Vec::new();
                while elems.len() < 2 {
                    elems.push((next() % universe as u64) as usize);
                    elems.sort_unstable();
                    elems.dedup();
                }
                for _ in 0..(next() % 3) {
                    elems.push((next() % universe as u64) as usize);
                }
                elems.sort_unstable();
                elems.dedup();
                sets.push(set(universe, &elems));
            }
            let (size, witness) = min_hitting_set(universe, &sets);
            assert!(sets.iter().all(|s| witness.iter().any(|&e| s.contains(e))));
            assert_eq!(witness.len(), size);
            assert_eq!(size, brute(universe, &sets), "sets: {sets:?}");
        }
    }

    #[test]
    fn deterministic_witness() {
        let sets = vec![set(8, &[0, 3]), set(8, &[3, 5]), set(8, &[1, 2, 6])];
        let a = min_hitting_set(8, &sets);
        let b = min_hitting_set(8, &sets);
        assert_eq!(a, b);
    }
}
