//! Forcing polynomials and spectra over all perfect matchings of a graph.
//!
//! For `P(n,2)` with `n >= 5` the sweep groups matchings into dihedral
//! orbits, solves one representative per orbit and multiplies by orbit size;
//! the forcing number is invariant under graph automorphisms, so this is
//! exact. The coefficient maps are merged in sorted order, making the output
//! independent of the worker schedule.

use super::forcing_number;
use crate::error::Error;
use crate::graph::Graph;
use crate::matchings::{
    canonicalize_with_maps, classify_any, dihedral_edge_maps, enumerate_perfect_matchings,
    MatchingType, PerfectMatching,
};
use crate::Result;
use rayon::prelude::*;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// Enumeration cap for polynomial sweeps. The default comfortably covers
/// every `P(n,2)` with `n <= 36`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepBudget {
    pub max_matchings: usize,
}

impl Default for SweepBudget {
    fn default() -> Self {
        SweepBudget {
            max_matchings: 200_000,
        }
    }
}

/// Exponent-to-multiplicity maps of `sum x^f(G,M)`, with the per-type split
/// populated for generalized Petersen graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingPolynomial {
    /// `n` when the graph is a `P(n,2)`.
    pub n: Option<usize>,
    pub total: BTreeMap<usize, u64>,
    pub type1: BTreeMap<usize, u64>,
    pub type2: BTreeMap<usize, u64>,
}

impl ForcingPolynomial {
    pub fn matching_count(&self) -> u64 {
        self.total.values().sum()
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.total.keys().copied().collect()
    }

    /// Renders a coefficient map like `x^3+18x^2`, descending exponents;
    /// empty maps render as `0`.
    pub fn render(map: &BTreeMap<usize, u64>) -> String {
        if map.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (&exp, &coeff) in map.iter().rev() {
            let coeff_part = if coeff == 1 && exp != 0 {
                String::new()
            } else {
                coeff.to_string()
            };
            let x_part = match exp {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{exp}"),
            };
            parts.push(format!("{coeff_part}{x_part}"));
        }
        parts.join("+")
    }
}

fn serialize_coeffs<S: Serializer>(
    map: &BTreeMap<usize, u64>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = serializer.serialize_seq(Some(map.len()))?;
    for (e, c) in map {
        seq.serialize_element(&[*e as u64, *c])?;
    }
    seq.end()
}

impl Serialize for ForcingPolynomial {
    /// `{"n": int|null, "total": [[exp, coeff], ...], "type1": ..., "type2": ...}`
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Coeffs<'a>(&'a BTreeMap<usize, u64>);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                serialize_coeffs(self.0, serializer)
            }
        }
        let mut map = serializer.serialize_map(Some(4))?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("total", &Coeffs(&self.total))?;
        map.serialize_entry("type1", &Coeffs(&self.type1))?;
        map.serialize_entry("type2", &Coeffs(&self.type2))?;
        map.end()
    }
}

/// Achieved forcing numbers, overall and per type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Spectrum {
    pub all: BTreeSet<usize>,
    pub type1: BTreeSet<usize>,
    pub type2: BTreeSet<usize>,
}

impl Spectrum {
    /// True iff the achieved values form one integer interval.
    pub fn is_continuous(&self) -> bool {
        match (self.all.first(), self.all.last()) {
            (Some(&lo), Some(&hi)) => self.all.len() == hi - lo + 1,
            _ => true,
        }
    }
}

fn enumerate_with_budget(g: &Graph, budget: SweepBudget) -> Result<Vec<PerfectMatching>> {
    let mut out = Vec::new();
    for m in enumerate_perfect_matchings(g) {
        if out.len() >= budget.max_matchings {
            return Err(Error::BudgetExceeded {
                enumerated: out.len() + 1,
                budget: budget.max_matchings,
            });
        }
        out.push(m);
    }
    Ok(out)
}

/// Exact forcing polynomial of `g`, total and (for `P(n,2)`) per type.
pub fn forcing_polynomial(g: &Graph, budget: SweepBudget) -> Result<ForcingPolynomial> {
    let matchings = enumerate_with_budget(g, budget)?;
    let petersen_n = g.petersen().filter(|&(_, k)| k == 2).map(|(n, _)| n);

    // (forcing number, type tag, multiplicity) per solved representative
    let solved: Vec<(usize, Option<MatchingType>, u64)> = match petersen_n {
        Some(n) if n >= 5 => {
            let maps = dihedral_edge_maps(g);
            let mut orbits: HashMap<PerfectMatching, u64> = HashMap::new();
            for m in &matchings {
                let canon = canonicalize_with_maps(g, m, &maps);
                *orbits.entry(canon).or_insert(0) += 1;
            }
            let mut reps: Vec<(PerfectMatching, u64)> = orbits.into_iter().collect();
            reps.sort_by(|(a, _), (b, _)| a.bits().ones().cmp(b.bits().ones()));
            reps.par_iter()
                .map(|(rep, count)| {
                    let (f, _) = forcing_number(g, rep)?;
                    Ok((f, Some(classify_any(g, rep)?), *count))
                })
                .collect::<Result<Vec<_>>>()?
        }
        Some(_) => {
            // n = 3, 4: tiny, and at n = 4 a dihedral orbit can mix types
            matchings
                .par_iter()
                .map(|m| {
                    let (f, _) = forcing_number(g, m)?;
                    Ok((f, Some(classify_any(g, m)?), 1))
                })
                .collect::<Result<Vec<_>>>()?
        }
        None => matchings
            .par_iter()
            .map(|m| {
                let (f, _) = forcing_number(g, m)?;
                Ok((f, None, 1))
            })
            .collect::<Result<Vec<_>>>()?,
    };

    let mut poly = ForcingPolynomial {
        n: petersen_n,
        total: BTreeMap::new(),
        type1: BTreeMap::new(),
        type2: BTreeMap::new(),
    };
    for (f, ty, count) in solved {
        *poly.total.entry(f).or_insert(0) += count;
        match ty {
            Some(MatchingType::Type1) => *poly.type1.entry(f).or_insert(0) += count,
            Some(MatchingType::Type2) => *poly.type2.entry(f).or_insert(0) += count,
            None => {}
        }
    }
    Ok(poly)
}

/// Support of the forcing polynomial, with per-type subsets.
pub fn spectrum(g: &Graph, budget: SweepBudget) -> Result<Spectrum> {
    let poly = forcing_polynomial(g, budget)?;
    Ok(Spectrum {
        all: poly.total.keys().copied().collect(),
        type1: poly.type1.keys().copied().collect(),
        type2: poly.type2.keys().copied().collect(),
    })
}
