//! Cyclic chain words over `{A,B}` (type 1) and `{C,D}` (type 2).
//!
//! Block contents in the frozen column layout, for a block at column `c`:
//!
//! - `A`: inner `u_c u_{c+2}`, inner `u_{c+1} u_{c+3}`, rim `v_c v_{c+1}`,
//!   rim `v_{c+2} v_{c+3}` (4 columns)
//! - `B`: spoke `u_c v_c` (1 column)
//! - `C`: inner `u_c u_{c+2}`, spoke `u_{c+1} v_{c+1}`, rim `v_{c+2} v_{c+3}`
//!   (3 columns; rim coverage runs one column ahead of the inner coverage)
//! - `D`: inner `u_c u_{c+2}`, inner `u_{c+1} u_{c+3}`, rim `v_{c+1} v_{c+2}`,
//!   rim `v_{c+3} v_{c+4}` (4 columns, same one-column rim offset)
//!
//! A word lists blocks left to right starting at its anchor column. AB words
//! satisfy `4a + b = n`, CD words `3c + 4d = n`.

use super::{classify_any, spoke_positions, MatchingType, PerfectMatching};
use crate::error::Error;
use crate::graph::{EdgeId, Graph};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    A,
    B,
    C,
    D,
}

impl Letter {
    /// Number of inner-vertex columns the block occupies.
    pub fn width(self) -> usize {
        match self {
            Letter::A | Letter::D => 4,
            Letter::B => 1,
            Letter::C => 3,
        }
    }

    pub fn is_ab(self) -> bool {
        matches!(self, Letter::A | Letter::B)
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::B => 'B',
            Letter::C => 'C',
            Letter::D => 'D',
        }
    }
}

/// Which alphabet a word is drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alphabet {
    AB,
    CD,
}

/// A nonempty cyclic word over one alphabet plus an anchor column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainWord {
    letters: Vec<Letter>,
    anchor: usize,
}

impl ChainWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidArgument("empty chain word".into()));
        }
        let ab = letters.iter().any(|l| l.is_ab());
        let cd = letters.iter().any(|l| !l.is_ab());
        if ab && cd {
            return Err(Error::MixedAlphabet);
        }
        Ok(ChainWord { letters, anchor: 0 })
    }

    pub fn repeat(letter: Letter, times: usize) -> Self {
        ChainWord {
            letters: vec![letter; times],
            anchor: 0,
        }
    }

    pub fn with_anchor(mut self, anchor: usize) -> Self {
        self.anchor = anchor;
        self
    }

    #[inline]
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    #[inline]
    pub fn anchor(&self) -> usize {
        self.anchor
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn alphabet(&self) -> Alphabet {
        if self.letters[0].is_ab() {
            Alphabet::AB
        } else {
            Alphabet::CD
        }
    }

    /// Total number of columns the word covers; must equal `n` to decode.
    pub fn span(&self) -> usize {
        self.letters.iter().map(|l| l.width()).sum()
    }

    /// `(a, b)` letter counts for an AB word.
    pub fn ab_counts(&self) -> Option<(usize, usize)> {
        if self.alphabet() != Alphabet::AB {
            return None;
        }
        let a = self.letters.iter().filter(|&&l| l == Letter::A).count();
        Some((a, self.letters.len() - a))
    }

    /// `(c, d)` letter counts for a CD word.
    pub fn cd_counts(&self) -> Option<(usize, usize)> {
        if self.alphabet() != Alphabet::CD {
            return None;
        }
        let c = self.letters.iter().filter(|&&l| l == Letter::C).count();
        Some((c, self.letters.len() - c))
    }

    /// Compact run-length expression, e.g. `CD^4C^2`.
    pub fn to_expression(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            out.push(l.as_char());
            if run > 1 {
                out.push_str(&format!("^{run}"));
            }
            i += run;
        }
        out
    }
}

impl std::fmt::Display for ChainWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

/// Minimal cyclic period of the word: the least `p >= 1` with
/// `letters[j] = letters[(j+p) mod len]` for all `j`. Always divides the length.
pub fn period(w: &ChainWord) -> usize {
    let letters = w.letters();
    let len = letters.len();
    'outer: for p in 1..=len {
        if len % p != 0 {
            continue;
        }
        for j in 0..len {
            if letters[j] != letters[(j + p) % len] {
                continue 'outer;
            }
        }
        return p;
    }
    len
}

const MAX_WORD_LETTERS: usize = 1 << 20;

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::ChainParse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn parse_exponent(&mut self) -> Result<usize> {
        // caller has consumed '^'
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected digits after '^'");
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse::<usize>()
            .ok()
            .filter(|&v| v <= MAX_WORD_LETTERS)
            .ok_or(Error::ChainParse {
                pos: start,
                msg: "exponent out of range".into(),
            })
    }

    fn parse_expr(&mut self, out: &mut Vec<Letter>, depth: usize) -> Result<()> {
        if depth > 64 {
            return self.err("expression nested too deeply");
        }
        let mut terms = 0usize;
        loop {
            match self.peek() {
                None => break,
                Some(b')') => break,
                Some(b'(') => {
                    self.pos += 1;
                    let mut inner = Vec::new();
                    self.parse_expr(&mut inner, depth + 1)?;
                    if self.peek() != Some(b')') {
                        return self.err("expected ')'");
                    }
                    self.pos += 1;
                    let exp = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.parse_exponent()?
                    } else {
                        1
                    };
                    if inner.len().saturating_mul(exp) + out.len() > MAX_WORD_LETTERS {
                        return self.err("word too long");
                    }
                    for _ in 0..exp {
                        out.extend_from_slice(&inner);
                    }
                    terms += 1;
                }
                Some(c @ (b'A' | b'B' | b'C' | b'D')) => {
                    self.pos += 1;
                    let letter = match c {
                        b'A' => Letter::A,
                        b'B' => Letter::B,
                        b'C' => Letter::C,
                        _ => Letter::D,
                    };
                    let exp = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.parse_exponent()?
                    } else {
                        1
                    };
                    if out.len().saturating_add(exp) > MAX_WORD_LETTERS {
                        return self.err("word too long");
                    }
                    out.extend(std::iter::repeat_n(letter, exp));
                    terms += 1;
                }
                Some(other) => {
                    return self.err(format!("unexpected character {:?}", other as char));
                }
            }
        }
        if terms == 0 {
            return self.err("expected a letter or '('");
        }
        Ok(())
    }
}

/// Parses the chain-expression grammar
/// `expr := term+ ; term := letter ['^' int] | '(' expr ')' ['^' int]`
/// into a flattened word anchored at column 0.
pub fn parse_chain_expression(text: &str) -> Result<ChainWord> {
    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let mut letters = Vec::new();
    parser.parse_expr(&mut letters, 0)?;
    if parser.peek() == Some(b')') {
        return parser.err("unmatched ')'");
    }
    if letters.is_empty() {
        return Err(Error::ChainParse {
            pos: 0,
            msg: "expression expands to the empty word".into(),
        });
    }
    ChainWord::new(letters)
}

/// Edge ids of the block `letter` laid at column `col`.
fn block_edges(g: &Graph, letter: Letter, col: usize) -> [Option<EdgeId>; 4] {
    match letter {
        Letter::A => [
            Some(g.inner_edge(col)),
            Some(g.inner_edge(col + 1)),
            Some(g.rim_edge(col)),
            Some(g.rim_edge(col + 2)),
        ],
        Letter::B => [Some(g.spoke_edge(col)), None, None, None],
        Letter::C => [
            Some(g.inner_edge(col)),
            Some(g.spoke_edge(col + 1)),
            Some(g.rim_edge(col + 2)),
            None,
        ],
        Letter::D => [
            Some(g.inner_edge(col)),
            Some(g.inner_edge(col + 1)),
            Some(g.rim_edge(col + 1)),
            Some(g.rim_edge(col + 3)),
        ],
    }
}

/// Lays the word's blocks left to right from its anchor column and returns
/// the unique perfect matching with those blocks.
pub fn decode(g: &Graph, w: &ChainWord) -> Result<PerfectMatching> {
    let n = g.require_petersen2(3)?;
    if w.span() != n {
        return Err(Error::ChainLengthMismatch {
            word_span: w.span(),
            n,
        });
    }
    let mut edges = Vec::with_capacity(n);
    let mut col = w.anchor() % n;
    for &letter in w.letters() {
        for e in block_edges(g, letter, col).into_iter().flatten() {
            edges.push(e);
        }
        col = (col + letter.width()) % n;
    }
    PerfectMatching::from_edges(g, &edges)
}

fn verify_block(g: &Graph, m: &PerfectMatching, letter: Letter, col: usize) -> Result<()> {
    for e in block_edges(g, letter, col).into_iter().flatten() {
        if !m.contains(e) {
            return Err(Error::CorruptMatching(format!(
                "expected {} block at column {col}",
                letter.as_char()
            )));
        }
    }
    Ok(())
}

/// Encodes a perfect matching of `P(n,2)` as a chain word.
///
/// The anchor is the smallest column at which a block starts; the block
/// decomposition of a valid matching is unique, so no further tie-breaking
/// is ever needed. `decode` is an exact inverse.
pub fn encode(g: &Graph, m: &PerfectMatching) -> Result<ChainWord> {
    let n = g.require_petersen2(3)?;
    m.check_stamp(g)?;
    let spokes = spoke_positions(g, m);
    if spokes.is_empty() && n % 4 != 0 {
        return Err(Error::UnencodableSpokeFree);
    }
    let ty = classify_any(g, m)?;
    if spokes.is_empty() {
        let letter = match ty {
            MatchingType::Type1 => Letter::A,
            MatchingType::Type2 => Letter::D,
        };
        for t in 0..4 {
            let w = ChainWord::repeat(letter, n / 4).with_anchor(t);
            if decode(g, &w)? == *m {
                return Ok(w);
            }
        }
        return Err(Error::CorruptMatching(
            "spoke-free matching matches no block tiling".into(),
        ));
    }

    // boundary columns with their block letters
    let mut blocks: Vec<(usize, Letter)> = Vec::new();
    let l = spokes.len();
    for j in 0..l {
        let p = spokes[j];
        let next = spokes[(j + 1) % l];
        let gap = (next + n - p - 1) % n;
        match ty {
            MatchingType::Type1 => {
                if gap % 4 != 0 {
                    return Err(Error::CorruptMatching("type-1 gap not 0 mod 4".into()));
                }
                blocks.push((p, Letter::B));
                for a in 0..gap / 4 {
                    let col = (p + 1 + 4 * a) % n;
                    verify_block(g, m, Letter::A, col)?;
                    blocks.push((col, Letter::A));
                }
            }
            MatchingType::Type2 => {
                if gap % 4 != 2 {
                    return Err(Error::CorruptMatching("type-2 gap not 2 mod 4".into()));
                }
                let c_col = (p + n - 1) % n;
                verify_block(g, m, Letter::C, c_col)?;
                blocks.push((c_col, Letter::C));
                for d in 0..(gap - 2) / 4 {
                    let col = (p + 2 + 4 * d) % n;
                    verify_block(g, m, Letter::D, col)?;
                    blocks.push((col, Letter::D));
                }
            }
        }
    }
    blocks.sort_unstable_by_key(|&(col, _)| col);
    let anchor = blocks[0].0;
    let letters: Vec<Letter> = blocks.into_iter().map(|(_, l)| l).collect();
    Ok(ChainWord::new(letters)?.with_anchor(anchor))
}
