//! Closed-form catalog, explicit extremal matchings and chain
//! transformations.
//!
//! Formulas are exposed with their exact validity ranges: out-of-range
//! queries answer [`Claim::NotClaimed`] rather than extrapolating. Extremal
//! matchings are produced from residue-indexed chain words laid down at
//! column 0; forcing numbers are dihedral-invariant, so the anchor choice is
//! immaterial to every checked claim.

mod verify;

pub use verify::{
    dc_matching, published_continuous_set, reference_table, spectrum_is_continuous,
    verify_theorem_suite, CheckKind, ReferenceTable, Report, ReportItem, Status, VerifyConfig,
};

use crate::error::Error;
use crate::graph::{EdgeId, Graph};
use crate::matchings::{decode, parse_chain_expression, ChainWord, PerfectMatching};
use crate::Result;
use std::ops::RangeInclusive;

/// A catalog answer: either the formula's value or an explicit statement
/// that the formula makes no claim at this argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim<T> {
    Claimed(T),
    NotClaimed,
}

impl<T> Claim<T> {
    pub fn claimed(self) -> Option<T> {
        match self {
            Claim::Claimed(v) => Some(v),
            Claim::NotClaimed => None,
        }
    }

    pub fn is_claimed(&self) -> bool {
        matches!(self, Claim::Claimed(_))
    }
}

/// Maximum type-1 forcing number: `ceil(n/4)`, claimed for `n >= 9`
/// (spoke-free matchings push the maximum to 3 at n = 8).
pub fn type1_max(n: usize) -> Claim<usize> {
    if n >= 9 {
        Claim::Claimed(n.div_ceil(4))
    } else {
        Claim::NotClaimed
    }
}

/// Minimum type-1 forcing number: `ceil((n+2)/6)`, claimed for `n >= 11`
/// (fails at n = 10).
pub fn type1_min(n: usize) -> Claim<usize> {
    if n >= 11 {
        Claim::Claimed((n + 2).div_ceil(6))
    } else {
        Claim::NotClaimed
    }
}

/// The `+1` bump of the type-2 maximum, active exactly when `n = 3 (mod 7)`.
pub fn type2_max_delta(n: usize) -> usize {
    usize::from(n % 7 == 3)
}

/// Maximum type-2 forcing number: `ceil((n+3)/7) + delta(n)`, claimed for
/// `n >= 34` (fails at n = 33).
pub fn type2_max(n: usize) -> Claim<usize> {
    if n >= 34 {
        Claim::Claimed((n + 3).div_ceil(7) + type2_max_delta(n))
    } else {
        Claim::NotClaimed
    }
}

/// Minimum type-2 forcing number: `ceil(n/12) + 1`, claimed for `n >= 11`
/// (fails at n = 10).
pub fn type2_min(n: usize) -> Claim<usize> {
    if n >= 11 {
        Claim::Claimed(n.div_ceil(12) + 1)
    } else {
        Claim::NotClaimed
    }
}

/// Closed form for the forcing number of the matching `D^d C^c`:
/// `ceil((6d + 3c + eta)/12) + xi` with `eta = 9` for even `d`, `12` for odd
/// `d`, and `xi = 1` exactly for `d = 0, c = 1 (mod 4)` or
/// `d = 1, c = 2 (mod 4)`.
pub fn dc_closed_form(d: usize, c: usize) -> Result<usize> {
    let n = 3 * c + 4 * d;
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "D^{d} C^{c} spans {n} columns; need at least 3"
        )));
    }
    let eta = if d % 2 == 0 { 9 } else { 12 };
    let xi = usize::from((d == 0 && c % 4 == 1) || (d == 1 && c % 4 == 2));
    Ok((6 * d + 3 * c + eta).div_ceil(12) + xi)
}

/// The two spectrum intervals `[type2_min, type2_max]` and
/// `[type1_min, type1_max]`, claimed for `n >= 34`.
pub fn spectrum_formula(n: usize) -> Claim<(RangeInclusive<usize>, RangeInclusive<usize>)> {
    match (type2_min(n), type2_max(n), type1_min(n), type1_max(n)) {
        (Claim::Claimed(a), Claim::Claimed(b), Claim::Claimed(c), Claim::Claimed(d)) => {
            Claim::Claimed((a..=b, c..=d))
        }
        _ => Claim::NotClaimed,
    }
}

/// Whether the two spectrum intervals leave an integer uncovered:
/// `type1_min > type2_max + 1`. Claimed for `n >= 34`.
pub fn has_gap(n: usize) -> Claim<bool> {
    match (type1_min(n), type2_max(n)) {
        (Claim::Claimed(lo1), Claim::Claimed(hi2)) => Claim::Claimed(lo1 > hi2 + 1),
        _ => Claim::NotClaimed,
    }
}

/// Which extremal construction a recipe realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalKind {
    Type1Max,
    Type1Min,
    Type2Max,
    Type2Min,
}

impl ExtremalKind {
    fn min_n(self) -> usize {
        match self {
            ExtremalKind::Type1Max => 9,
            ExtremalKind::Type1Min | ExtremalKind::Type2Min => 11,
            ExtremalKind::Type2Max => 34,
        }
    }
}

/// An explicit extremal matching: the residue-selected chain word, its
/// decoded matching, and the published forcing set when one exists in text.
#[derive(Debug, Clone)]
pub struct ExtremalRecipe {
    pub n: usize,
    pub kind: ExtremalKind,
    pub residue: usize,
    pub word: ChainWord,
    pub matching: PerfectMatching,
    pub textual_set: Option<Vec<EdgeId>>,
}

const T1MIN_BASE: [&str; 12] = [
    "BBBBAA",     // n = 0 (mod 12)
    "BBBBBAA",    // 1
    "BBBBBBAA",   // 2
    "BABABA",     // 3
    "BBBBBBBABA", // 4
    "BBBBBAAA",   // 5
    "BBBBBBAAA",  // 6
    "AABBBAA",    // 7
    "BAABBBAA",   // 8
    "BBAABBBAA",  // 9
    "BBBAABBBAA", // 10
    "BBBAA",      // 11
];

const T2MIN_BASE: [&str; 12] = [
    "CCCC",    // n = 0 (mod 12)
    "CCCD",    // 1
    "CCDD",    // 2
    "CCCCC",   // 3
    "CCCCD",   // 4
    "CCCDD",   // 5
    "CCCCCC",  // 6
    "CCCCCD",  // 7
    "CCCCDD",  // 8
    "CCCCCCC", // 9
    "CDDCDD",  // 10
    "CDD",     // 11
];

const T2MAX_BASE: [&str; 7] = [
    "CDCD",  // n = 0 (mod 7)
    "DDCD",  // 1
    "CCCCD", // 2
    "CCDCD", // 3
    "DCDCD", // 4
    "",      // 5: special family below
    "CCCD",  // 6
];

/// The residue-selected extremal chain word for `P(n,2)`.
pub fn extremal_word(n: usize, kind: ExtremalKind) -> Result<ChainWord> {
    if n < kind.min_n() {
        return Err(Error::InvalidArgument(format!(
            "extremal construction {kind:?} is only claimed for n >= {}, got {n}",
            kind.min_n()
        )));
    }
    let expr = match kind {
        ExtremalKind::Type1Max => format!("B^{n}"),
        ExtremalKind::Type1Min => {
            format!("{}(BBBABA)^{}", T1MIN_BASE[n % 12], (n - 11) / 12)
        }
        ExtremalKind::Type2Min => {
            format!("{}(CCCC)^{}", T2MIN_BASE[n % 12], (n - 11) / 12)
        }
        ExtremalKind::Type2Max => {
            if n % 7 == 5 {
                format!("CDCCDCCDCCDC(DC)^{}", (n - 40) / 7)
            } else {
                format!("{}(CD)^{}", T2MAX_BASE[n % 7], (n - 13) / 7)
            }
        }
    };
    parse_chain_expression(&expr)
}

/// Builds the residue-case extremal matching on `g`, with the published
/// forcing set attached where the construction states one in text.
pub fn build_extremal(g: &Graph, kind: ExtremalKind) -> Result<ExtremalRecipe> {
    let n = g.require_petersen2(3)?;
    let word = extremal_word(n, kind)?;
    let matching = decode(g, &word)?;
    let textual_set = match kind {
        ExtremalKind::Type1Max => Some(
            (0..n.div_ceil(4))
                .map(|i| g.spoke_edge(4 * i))
                .collect::<Vec<_>>(),
        ),
        _ => None,
    };
    let residue = match kind {
        ExtremalKind::Type2Max => n % 7,
        ExtremalKind::Type1Max => 0,
        _ => n % 12,
    };
    Ok(ExtremalRecipe {
        n,
        kind,
        residue,
        word,
        matching,
        textual_set,
    })
}

/// The spoke-free matching `D^{n/4}` together with its published forcing set
/// `{u_{n-1}u_1, v_2v_3, u_{8i+4}u_{8i+6}}`. The word is anchored at column
/// `n-1` so the set indices land inside the matching.
pub fn all_d_recipe(g: &Graph) -> Result<(PerfectMatching, Vec<EdgeId>)> {
    let n = g.require_petersen2(12)?;
    if n % 4 != 0 {
        return Err(Error::InvalidArgument(format!(
            "D^(n/4) requires n divisible by 4, got {n}"
        )));
    }
    let word = ChainWord::repeat(crate::matchings::Letter::D, n / 4).with_anchor(n - 1);
    let m = decode(g, &word)?;
    let mut set = vec![g.inner_edge(n - 1), g.rim_edge(2)];
    for i in 0..=(n - 12) / 8 {
        set.push(g.inner_edge(8 * i + 4));
    }
    Ok((m, set))
}

/// The one-`C` matching `C D^{(n-3)/4}` together with its published forcing
/// set `{u_{n-1}u_1, u_0 v_0, u_{8i-1}u_{8i+1}}`; anchored at column `n-1`.
pub fn one_c_recipe(g: &Graph) -> Result<(PerfectMatching, Vec<EdgeId>)> {
    let n = g.require_petersen2(11)?;
    if n % 4 != 3 {
        return Err(Error::InvalidArgument(format!(
            "C D^((n-3)/4) requires n = 3 (mod 4), got {n}"
        )));
    }
    let word = parse_chain_expression(&format!("CD^{}", (n - 3) / 4))?.with_anchor(n - 1);
    let m = decode(g, &word)?;
    let mut set = vec![g.inner_edge(n - 1), g.spoke_edge(0)];
    for i in 1..=(n - 7) / 8 {
        set.push(g.inner_edge(8 * i - 1));
    }
    Ok((m, set))
}

/// The exceptional word `C(CD)^{(n-3)/7}` for `n = 3 (mod 7)`: the matching
/// whose forcing number carries the `delta(n) = 1` bump. Cyclically it is
/// the same word the residue-3 maximum recipe produces.
pub fn exceptional_type2_word(n: usize) -> Result<ChainWord> {
    if n % 7 != 3 || n < 10 {
        return Err(Error::InvalidArgument(format!(
            "the exceptional family needs n = 3 (mod 7) and n >= 10, got {n}"
        )));
    }
    parse_chain_expression(&format!("C(CD)^{}", (n - 3) / 7))
}

fn require_blocks(
    g: &Graph,
    m: &PerfectMatching,
    blocks: &[(crate::matchings::Letter, usize)],
    pattern: &str,
    column: usize,
) -> Result<()> {
    use crate::matchings::Letter;
    for &(letter, col) in blocks {
        let edges: Vec<EdgeId> = match letter {
            Letter::A => vec![
                g.inner_edge(col),
                g.inner_edge(col + 1),
                g.rim_edge(col),
                g.rim_edge(col + 2),
            ],
            Letter::B => vec![g.spoke_edge(col)],
            Letter::C => vec![
                g.inner_edge(col),
                g.spoke_edge(col + 1),
                g.rim_edge(col + 2),
            ],
            Letter::D => vec![
                g.inner_edge(col),
                g.inner_edge(col + 1),
                g.rim_edge(col + 1),
                g.rim_edge(col + 3),
            ],
        };
        if !edges.iter().all(|&e| m.contains(e)) {
            return Err(Error::PatternNotFound {
                pattern: pattern.to_string(),
                column,
            });
        }
    }
    Ok(())
}

fn flip_cycle(g: &Graph, m: &PerfectMatching, cycle: &[EdgeId]) -> Result<PerfectMatching> {
    let mut edges: Vec<EdgeId> = m.edges().collect();
    for &e in cycle {
        if let Some(pos) = edges.iter().position(|&x| x == e) {
            edges.swap_remove(pos);
        } else {
            edges.push(e);
        }
    }
    PerfectMatching::from_edges(g, &edges)
        .map_err(|e| Error::CorruptMatching(format!("cycle flip broke the matching: {e}")))
}

/// The alternating 8-cycle on columns `i+1 .. i+4` used by the `BA <-> B^5`
/// exchange.
fn ba_cycle(g: &Graph, i: usize) -> Vec<EdgeId> {
    vec![
        g.inner_edge(i + 1),
        g.spoke_edge(i + 3),
        g.rim_edge(i + 3),
        g.spoke_edge(i + 4),
        g.inner_edge(i + 2),
        g.spoke_edge(i + 2),
        g.rim_edge(i + 1),
        g.spoke_edge(i + 1),
    ]
}

/// Replaces the chain `BA` at column `i` (spoke at `i`, `A` block at `i+1`)
/// by `B^5`, leaving the rest of the matching untouched.
pub fn transform_ba_to_b5(g: &Graph, m: &PerfectMatching, i: usize) -> Result<PerfectMatching> {
    use crate::matchings::Letter;
    g.require_petersen2(5)?;
    m.check_stamp(g)?;
    require_blocks(g, m, &[(Letter::B, i), (Letter::A, i + 1)], "BA", i)?;
    flip_cycle(g, m, &ba_cycle(g, i))
}

/// Inverse exchange: replaces `B^5` at column `i` by `BA`.
pub fn transform_b5_to_ba(g: &Graph, m: &PerfectMatching, i: usize) -> Result<PerfectMatching> {
    use crate::matchings::Letter;
    g.require_petersen2(5)?;
    m.check_stamp(g)?;
    let blocks: Vec<(Letter, usize)> = (0..5).map(|j| (Letter::B, i + j)).collect();
    require_blocks(g, m, &blocks, "BBBBB", i)?;
    flip_cycle(g, m, &ba_cycle(g, i))
}

/// The alternating 8-cycle on columns `i+1 .. i+5` used by the `CD <-> DC`
/// exchange.
fn cd_cycle(g: &Graph, i: usize) -> Vec<EdgeId> {
    vec![
        g.inner_edge(i + 1),
        g.inner_edge(i + 3),
        g.spoke_edge(i + 5),
        g.rim_edge(i + 4),
        g.rim_edge(i + 3),
        g.rim_edge(i + 2),
        g.rim_edge(i + 1),
        g.spoke_edge(i + 1),
    ]
}

/// Replaces the chain `CD` at column `i` by `DC`.
pub fn transform_cd_to_dc(g: &Graph, m: &PerfectMatching, i: usize) -> Result<PerfectMatching> {
    use crate::matchings::Letter;
    g.require_petersen2(5)?;
    m.check_stamp(g)?;
    require_blocks(g, m, &[(Letter::C, i), (Letter::D, i + 3)], "CD", i)?;
    flip_cycle(g, m, &cd_cycle(g, i))
}

/// Inverse exchange: replaces `DC` at column `i` by `CD`.
pub fn transform_dc_to_cd(g: &Graph, m: &PerfectMatching, i: usize) -> Result<PerfectMatching> {
    use crate::matchings::Letter;
    g.require_petersen2(5)?;
    m.check_stamp(g)?;
    require_blocks(g, m, &[(Letter::D, i), (Letter::C, i + 4)], "DC", i)?;
    flip_cycle(g, m, &cd_cycle(g, i))
}

/// The alternating 16-cycle on columns `j+1 .. j+10` used by the
/// `C^4 <-> D^3` exchange.
fn c4_cycle(g: &Graph, j: usize) -> Vec<EdgeId> {
    vec![
        g.inner_edge(j + 1),
        g.inner_edge(j + 3),
        g.inner_edge(j + 5),
        g.spoke_edge(j + 7),
        g.rim_edge(j + 7),
        g.rim_edge(j + 8),
        g.rim_edge(j + 9),
        g.spoke_edge(j + 10),
        g.inner_edge(j + 8),
        g.inner_edge(j + 6),
        g.inner_edge(j + 4),
        g.spoke_edge(j + 4),
        g.rim_edge(j + 3),
        g.rim_edge(j + 2),
        g.rim_edge(j + 1),
        g.spoke_edge(j + 1),
    ]
}

/// Replaces the chain `C^4` at column `j` by `D^3`.
pub fn transform_c4_to_d3(g: &Graph, m: &PerfectMatching, j: usize) -> Result<PerfectMatching> {
    use crate::matchings::Letter;
    g.require_petersen2(12)?;
    m.check_stamp(g)?;
    let blocks: Vec<(Letter, usize)> = (0..4).map(|t| (Letter::C, j + 3 * t)).collect();
    require_blocks(g, m, &blocks, "CCCC", j)?;
    flip_cycle(g, m, &c4_cycle(g, j))
}

/// Inverse exchange: replaces `D^3` at column `j` by `C^4`.
pub fn transform_d3_to_c4(g: &Graph, m: &PerfectMatching, j: usize) -> Result<PerfectMatching> {
    use crate::matchings::Letter;
    g.require_petersen2(12)?;
    m.check_stamp(g)?;
    let blocks: Vec<(Letter, usize)> = (0..3).map(|t| (Letter::D, j + 4 * t)).collect();
    require_blocks(g, m, &blocks, "DDD", j)?;
    flip_cycle(g, m, &c4_cycle(g, j))
}
