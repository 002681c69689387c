//! Words over the alphabet `{L, R}`.
//!
//! A finite word `X_0 … X_{n-1}0` is stored without its terminal `0`; the
//! terminal symbol only shows up when words are compared. A periodic word is
//! stored as its primitive fundamental block. Comparisons use the order
//! `L < 0 < R`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    L,
    R,
}

impl Letter {
    pub fn swap(self) -> Letter {
        match self {
            Letter::L => Letter::R,
            Letter::R => Letter::L,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::L => 'L',
            Letter::R => 'R',
        }
    }
}

/// A symbol of an itinerary. The derived order is the itinerary order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Symbol {
    L,
    Zero,
    R,
}

impl From<Letter> for Symbol {
    fn from(l: Letter) -> Symbol {
        match l {
            Letter::L => Symbol::L,
            Letter::R => Symbol::R,
        }
    }
}

/// Read-only view of a word, possibly shifted, as a stream of symbols.
#[derive(Clone, Copy)]
pub(crate) struct Stream<'a> {
    letters: &'a [Letter],
    offset: usize,
    periodic: bool,
}

impl<'a> Stream<'a> {
    pub(crate) fn finite(letters: &'a [Letter], offset: usize) -> Self {
        debug_assert!(offset <= letters.len());
        Stream {
            letters,
            offset,
            periodic: false,
        }
    }

    pub(crate) fn periodic(block: &'a [Letter], offset: usize) -> Self {
        Stream {
            letters: block,
            offset: offset % block.len(),
            periodic: true,
        }
    }

    fn at(&self, i: usize) -> Option<Symbol> {
        if self.periodic {
            let n = self.letters.len();
            Some(self.letters[(self.offset + i) % n].into())
        } else {
            let j = self.offset + i;
            match j.cmp(&self.letters.len()) {
                Ordering::Less => Some(self.letters[j].into()),
                Ordering::Equal => Some(Symbol::Zero),
                Ordering::Greater => None,
            }
        }
    }

    /// Number of symbols needed to settle any comparison involving this stream.
    fn horizon(&self) -> usize {
        if self.periodic {
            self.letters.len()
        } else {
            self.letters.len() - self.offset + 1
        }
    }

    pub(crate) fn compare(&self, other: &Stream<'_>) -> Ordering {
        // Two periodic streams agreeing on p + q symbols are identical.
        let bound = self.horizon() + other.horizon();
        for i in 0..bound {
            match (self.at(i), other.at(i)) {
                (Some(a), Some(b)) if a != b => return a.cmp(&b),
                (Some(_), Some(_)) => {}
                // a finite stream ends right after its 0, which the other
                // stream matched, so the other one ends here as well
                _ => return Ordering::Equal,
            }
        }
        Ordering::Equal
    }
}

/// Finite word `X_0 … X_{n-1}0`. `len()` does not count the terminal `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct FiniteWord {
    letters: Vec<Letter>,
}

impl FiniteWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(FiniteWord { letters })
    }

    /// The bare terminal word `0`, reachable only by shifting.
    pub(crate) fn terminal() -> Self {
        FiniteWord {
            letters: Vec::new(),
        }
    }

    /// Builds a word from a string of `L`/`R` letters (no terminal `0`).
    pub fn from_letters(s: &str) -> Result<Self> {
        FiniteWord::new(letters_from_str(s)?)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub(crate) fn stream(&self, offset: usize) -> Stream<'_> {
        Stream::finite(&self.letters, offset)
    }

    /// The finite word `X_j … X_{n-1} X_0 … X_{j-1} 0`.
    pub fn rotation(&self, j: usize) -> FiniteWord {
        let j = j % self.letters.len().max(1);
        let mut letters = self.letters[j..].to_vec();
        letters.extend_from_slice(&self.letters[..j]);
        FiniteWord { letters }
    }

    pub fn concat(&self, other: &FiniteWord) -> FiniteWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        FiniteWord { letters }
    }

    pub fn mirror(&self) -> FiniteWord {
        FiniteWord {
            letters: self.letters.iter().map(|l| l.swap()).collect(),
        }
    }

    pub fn counts(&self) -> Counts {
        Counts::of(&self.letters)
    }

    /// The cyclic class of the letters as a periodic word.
    pub fn cyclic_class(&self) -> Result<PeriodicWord> {
        PeriodicWord::new(self.letters.clone())
    }

    pub fn letters_string(&self) -> String {
        self.letters.iter().map(|l| l.as_char()).collect()
    }
}

impl Ord for FiniteWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.stream(0).compare(&other.stream(0))
    }
}

impl PartialOrd for FiniteWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}0", self.letters_string())
    }
}

impl From<FiniteWord> for String {
    fn from(w: FiniteWord) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for FiniteWord {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        match parse_word(&s)?.word {
            Word::Finite(w) => Ok(w),
            Word::Periodic(_) => Err(Error::Malformed(s, "expected a finite word")),
        }
    }
}

/// Periodic word `(B)^∞`; the block is always primitive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct PeriodicWord {
    block: Vec<Letter>,
}

impl PeriodicWord {
    /// Builds `(block)^∞`, reducing the block to its primitive root.
    pub fn new(block: Vec<Letter>) -> Result<Self> {
        if block.is_empty() {
            return Err(Error::EmptyWord);
        }
        let period = least_period(&block);
        let mut block = block;
        block.truncate(period);
        Ok(PeriodicWord { block })
    }

    pub fn from_letters(s: &str) -> Result<Self> {
        PeriodicWord::new(letters_from_str(s)?)
    }

    pub fn block(&self) -> &[Letter] {
        &self.block
    }

    pub fn period(&self) -> usize {
        self.block.len()
    }

    pub(crate) fn stream(&self, offset: usize) -> Stream<'_> {
        Stream::periodic(&self.block, offset)
    }

    pub fn rotate(&self, k: usize) -> PeriodicWord {
        let k = k % self.block.len();
        let mut block = self.block[k..].to_vec();
        block.extend_from_slice(&self.block[..k]);
        PeriodicWord { block }
    }

    pub fn mirror(&self) -> PeriodicWord {
        PeriodicWord {
            block: self.block.iter().map(|l| l.swap()).collect(),
        }
    }

    pub fn counts(&self) -> Counts {
        Counts::of(&self.block)
    }

    /// True when both words describe the same periodic orbit.
    pub fn same_class(&self, other: &PeriodicWord) -> bool {
        self.period() == other.period()
            && (0..self.period()).any(|k| {
                (0..self.period()).all(|i| self.block[(k + i) % self.period()] == other.block[i])
            })
    }
}

impl Ord for PeriodicWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.stream(0).compare(&other.stream(0))
    }
}

impl PartialOrd for PeriodicWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PeriodicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.block.iter().map(|l| l.as_char()).collect();
        write!(f, "({s})")
    }
}

impl From<PeriodicWord> for String {
    fn from(w: PeriodicWord) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for PeriodicWord {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        match parse_word(&s)?.word {
            Word::Periodic(w) => Ok(w),
            Word::Finite(_) => Err(Error::Malformed(s, "expected a periodic word")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Word {
    Finite(FiniteWord),
    Periodic(PeriodicWord),
}

impl Word {
    /// Letters of the finite word, or the fundamental block.
    pub fn letters(&self) -> &[Letter] {
        match self {
            Word::Finite(w) => w.letters(),
            Word::Periodic(w) => w.block(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters().len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters().is_empty()
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Word::Finite(_))
    }

    pub(crate) fn stream(&self, offset: usize) -> Stream<'_> {
        match self {
            Word::Finite(w) => w.stream(offset),
            Word::Periodic(w) => w.stream(offset),
        }
    }

    pub fn mirror(&self) -> Word {
        match self {
            Word::Finite(w) => Word::Finite(w.mirror()),
            Word::Periodic(w) => Word::Periodic(w.mirror()),
        }
    }

    /// Cyclic class of the word (the orbit of the finite letters, or the word itself).
    pub fn cyclic_class(&self) -> Result<PeriodicWord> {
        match self {
            Word::Finite(w) => w.cyclic_class(),
            Word::Periodic(w) => Ok(w.clone()),
        }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_compare(self, other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Finite(w) => w.fmt(f),
            Word::Periodic(w) => w.fmt(f),
        }
    }
}

impl From<FiniteWord> for Word {
    fn from(w: FiniteWord) -> Word {
        Word::Finite(w)
    }
}

impl From<PeriodicWord> for Word {
    fn from(w: PeriodicWord) -> Word {
        Word::Periodic(w)
    }
}

impl From<Word> for String {
    fn from(w: Word) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for Word {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s).map(|p| p.word)
    }
}

impl FromStr for FiniteWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FiniteWord::try_from(s.to_string())
    }
}

impl FromStr for PeriodicWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PeriodicWord::try_from(s.to_string())
    }
}

fn letters_from_str(s: &str) -> Result<Vec<Letter>> {
    s.chars()
        .enumerate()
        .map(|(i, c)| match c {
            'L' => Ok(Letter::L),
            'R' => Ok(Letter::R),
            _ => Err(Error::InvalidCharacter(c, i)),
        })
        .collect()
}

/// Least period of a block read cyclically (a divisor of its length).
pub fn least_period(block: &[Letter]) -> usize {
    let n = block.len();
    (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .find(|&d| (d..n).all(|i| block[i] == block[i - d]))
        .unwrap_or(n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedWord {
    pub word: Word,
    /// Set when a periodic block was not primitive and had to be reduced.
    pub notice: Option<String>,
}

/// Parses `[LR]+0` (finite) or `([LR]+)` (periodic).
pub fn parse_word(text: &str) -> Result<ParsedWord> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::EmptyWord);
    }
    if let Some(rest) = t.strip_prefix('(') {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Malformed(t.to_string(), "missing closing parenthesis"))?;
        if inner.is_empty() {
            return Err(Error::EmptyWord);
        }
        let letters = letters_from_str(inner).map_err(|e| match e {
            Error::InvalidCharacter(c, i) => Error::InvalidCharacter(c, i + 1),
            e => e,
        })?;
        let given = letters.len();
        let word = PeriodicWord::new(letters)?;
        let notice = (word.period() < given)
            .then(|| format!("block of length {given} reduced to its primitive root {word}"));
        return Ok(ParsedWord {
            word: Word::Periodic(word),
            notice,
        });
    }

    let mut letters = Vec::with_capacity(t.len());
    let mut terminal = None;
    for (i, c) in t.chars().enumerate() {
        match c {
            'L' | 'R' if terminal.is_some() => {
                return Err(Error::Malformed(
                    t.to_string(),
                    "symbols after the terminal 0",
                ))
            }
            'L' => letters.push(Letter::L),
            'R' => letters.push(Letter::R),
            '0' if terminal.is_some() => {
                return Err(Error::Malformed(t.to_string(), "more than one 0"))
            }
            '0' => terminal = Some(i),
            _ => return Err(Error::InvalidCharacter(c, i)),
        }
    }
    if terminal.is_none() {
        return Err(Error::Malformed(t.to_string(), "missing terminal 0"));
    }
    Ok(ParsedWord {
        word: Word::Finite(FiniteWord::new(letters)?),
        notice: None,
    })
}

/// Lexicographic order induced by `L < 0 < R`.
pub fn lex_compare(a: &Word, b: &Word) -> Ordering {
    a.stream(0).compare(&b.stream(0))
}

/// `k`-fold shift. Finite words accept `k ≤ |w|`; shifting by `|w|` leaves `0`.
pub fn shift(w: &Word, k: usize) -> Result<Word> {
    match w {
        Word::Finite(f) => {
            if k > f.len() {
                return Err(Error::ShiftTooLarge {
                    shift: k,
                    len: f.len(),
                });
            }
            if k == f.len() {
                Ok(Word::Finite(FiniteWord::terminal()))
            } else {
                Ok(Word::Finite(FiniteWord {
                    letters: f.letters[k..].to_vec(),
                }))
            }
        }
        Word::Periodic(p) => Ok(Word::Periodic(p.rotate(k))),
    }
}

fn extremal(w: &Word, first: Letter, bad: Ordering) -> bool {
    let letters = w.letters();
    if letters.first() != Some(&first) {
        return false;
    }
    let whole = w.stream(0);
    (1..letters.len())
        .filter(|&k| letters[k] == first)
        .all(|k| w.stream(k).compare(&whole) != bad)
}

/// `X_0 = L` and `s^k(X) ≤ X` whenever `X_k = L`.
pub fn is_l_maximal(w: &Word) -> bool {
    extremal(w, Letter::L, Ordering::Greater)
}

/// `X_0 = R` and `s^k(X) ≥ X` whenever `X_k = R`.
pub fn is_r_minimal(w: &Word) -> bool {
    extremal(w, Letter::R, Ordering::Less)
}

/// Periodic orbit of an L-maximal or R-minimal finite word.
pub fn to_periodic(w: &FiniteWord) -> Result<PeriodicWord> {
    let word = Word::Finite(w.clone());
    if !is_l_maximal(&word) && !is_r_minimal(&word) {
        return Err(Error::NotCanonical(w.to_string()));
    }
    PeriodicWord::new(w.letters.clone())
}

fn rotation_cmp(block: &[Letter], i: usize, j: usize) -> Ordering {
    let n = block.len();
    (0..n)
        .map(|t| block[(i + t) % n].cmp(&block[(j + t) % n]))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

fn extremal_rotation(block: &[Letter], start: Letter, pick: Ordering) -> Option<usize> {
    let mut best: Option<usize> = None;
    for j in (0..block.len()).filter(|&j| block[j] == start) {
        best = match best {
            Some(b) if rotation_cmp(block, j, b) != pick => Some(b),
            _ => Some(j),
        };
    }
    best
}

/// The L-maximal finite representative of a periodic orbit: the greatest
/// rotation starting with `L`, closed with `0`.
pub fn canonical_l_maximal(w: &PeriodicWord) -> Result<FiniteWord> {
    let j = extremal_rotation(&w.block, Letter::L, Ordering::Greater)
        .ok_or_else(|| Error::MissingLetter(w.to_string(), 'L'))?;
    Ok(FiniteWord {
        letters: w.rotate(j).block,
    })
}

/// The R-minimal finite representative of a periodic orbit.
pub fn canonical_r_minimal(w: &PeriodicWord) -> Result<FiniteWord> {
    let j = extremal_rotation(&w.block, Letter::R, Ordering::Less)
        .ok_or_else(|| Error::MissingLetter(w.to_string(), 'R'))?;
    Ok(FiniteWord {
        letters: w.rotate(j).block,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Counts {
    pub n_l: usize,
    pub n_r: usize,
}

impl Counts {
    fn of(letters: &[Letter]) -> Counts {
        let n_l = letters.iter().filter(|&&l| l == Letter::L).count();
        Counts {
            n_l,
            n_r: letters.len() - n_l,
        }
    }

    pub fn len(&self) -> usize {
        self.n_l + self.n_r
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn min(&self) -> usize {
        self.n_l.min(self.n_r)
    }

    pub fn max(&self) -> usize {
        self.n_l.max(self.n_r)
    }
}

impl std::ops::Add for Counts {
    type Output = Counts;

    fn add(self, o: Counts) -> Counts {
        Counts {
            n_l: self.n_l + o.n_l,
            n_r: self.n_r + o.n_r,
        }
    }
}

pub fn counts(w: &Word) -> Counts {
    Counts::of(w.letters())
}

/// A maximal block `L^l R^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Syllable {
    pub l: usize,
    pub r: usize,
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L^{}R^{}", self.l, self.r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyllableDecomposition {
    pub syllables: Vec<Syllable>,
    pub rotation_offset: usize,
}

impl SyllableDecomposition {
    pub fn sorted(&self) -> Vec<Syllable> {
        let mut s = self.syllables.clone();
        s.sort_unstable();
        s
    }
}

/// Cyclic decomposition into maximal `L^a R^b` blocks, anchored at the first
/// `L` that follows an `R`.
pub fn syllable_decomposition(w: &Word) -> Result<SyllableDecomposition> {
    let letters = w.letters();
    let n = letters.len();
    let offset = (0..n)
        .find(|&i| letters[i] == Letter::L && letters[(i + n - 1) % n] == Letter::R)
        .ok_or_else(|| Error::SingleLetter(w.to_string()))?;
    let mut syllables = Vec::new();
    let mut i = 0;
    while i < n {
        let mut s = Syllable { l: 0, r: 0 };
        while i < n && letters[(offset + i) % n] == Letter::L {
            s.l += 1;
            i += 1;
        }
        while i < n && letters[(offset + i) % n] == Letter::R {
            s.r += 1;
            i += 1;
        }
        syllables.push(s);
    }
    Ok(SyllableDecomposition {
        syllables,
        rotation_offset: offset,
    })
}

/// Fewest syllables among the period-length windows of the orbit.
pub fn trip_number(w: &Word) -> usize {
    match syllable_decomposition(w) {
        Ok(d) => d.syllables.len(),
        // L^n or R^n: every window is a single syllable
        Err(_) => 1,
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// L-maximal evenly distributed word with the given letter counts.
pub fn balanced_word(n_l: usize, n_r: usize) -> Result<FiniteWord> {
    if n_l == 0 || gcd(n_l as u64, n_r as u64) != 1 {
        return Err(Error::InvalidTorusParameters {
            p: n_l as u64,
            q: n_r as u64,
            reason: "letter counts must be coprime with at least one L",
        });
    }
    let total = n_l + n_r;
    let letters = (0..total)
        .map(|i| {
            if ((i + 1) * n_r) / total - (i * n_r) / total == 1 {
                Letter::R
            } else {
                Letter::L
            }
        })
        .collect();
    canonical_l_maximal(&PeriodicWord::new(letters)?)
}

/// The standard word `W(p, q)` of the torus knot `T(p, q)`: `n_L = p`, `n_R = q`.
pub fn standard_torus_word(p: u64, q: u64) -> Result<FiniteWord> {
    if p == 0 || p >= q {
        return Err(Error::InvalidTorusParameters {
            p,
            q,
            reason: "need 0 < p < q",
        });
    }
    if gcd(p, q) != 1 {
        return Err(Error::InvalidTorusParameters {
            p,
            q,
            reason: "p and q must be coprime",
        });
    }
    balanced_word(p as usize, q as usize)
}

/// Balance-1 test on the cyclic word: equal-length windows differ by at most
/// one `R`.
pub fn is_evenly_distributed(w: &Word) -> bool {
    let letters = w.letters();
    let n = letters.len();
    let mut prefix = Vec::with_capacity(2 * n + 1);
    prefix.push(0usize);
    for i in 0..2 * n {
        let r = usize::from(letters[i % n] == Letter::R);
        prefix.push(prefix[i] + r);
    }
    (1..n).all(|len| {
        let (lo, hi) = (0..n)
            .map(|i| prefix[i + len] - prefix[i])
            .fold((usize::MAX, 0), |(lo, hi), c| (lo.min(c), hi.max(c)));
        hi - lo <= 1
    })
}

/// `(p, q)` when the cyclic syllables of `w` are a rearrangement of those of
/// the evenly distributed word with the same letter counts, i.e. when `w`
/// represents a syllable permutation of the torus word for `T(p, q)`.
pub fn syllable_permutation_class(w: &Word) -> Option<(u64, u64)> {
    let c = counts(w);
    if c.n_l == 0 || c.n_r == 0 || gcd(c.n_l as u64, c.n_r as u64) != 1 {
        return None;
    }
    let standard = balanced_word(c.n_l, c.n_r).ok()?;
    let ours = syllable_decomposition(w).ok()?.sorted();
    let theirs = syllable_decomposition(&Word::Finite(standard))
        .ok()?
        .sorted();
    (ours == theirs).then_some((c.min() as u64, c.max() as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn f(s: &str) -> FiniteWord {
        s.parse().unwrap()
    }

    fn p(s: &str) -> PeriodicWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            w("LRRLR0"),
            Word::Finite(FiniteWord::from_letters("LRRLR").unwrap())
        );
        let parsed = parse_word("(LRLR)").unwrap();
        assert_eq!(
            parsed.word,
            Word::Periodic(PeriodicWord::from_letters("LR").unwrap())
        );
        assert!(parsed.notice.is_some());
        assert!(parse_word("(LRR)").unwrap().notice.is_none());
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_word(""), Err(Error::EmptyWord));
        assert_eq!(parse_word("0"), Err(Error::EmptyWord));
        assert_eq!(parse_word("()"), Err(Error::EmptyWord));
        assert!(matches!(parse_word("LR0R"), Err(Error::Malformed(..))));
        assert!(matches!(parse_word("L0R0"), Err(Error::Malformed(..))));
        assert!(matches!(parse_word("LRR"), Err(Error::Malformed(..))));
        assert!(matches!(parse_word("(LR"), Err(Error::Malformed(..))));
        assert_eq!(parse_word("LXR0"), Err(Error::InvalidCharacter('X', 1)));
        assert_eq!(parse_word("(L0)"), Err(Error::InvalidCharacter('0', 2)));
    }

    #[test]
    fn compare_examples() {
        assert_eq!(lex_compare(&w("L0"), &w("LR0")), Ordering::Less);
        assert_eq!(lex_compare(&w("LRLRL0"), &w("LR0")), Ordering::Less);
        assert_eq!(lex_compare(&w("LR0"), &w("LR0")), Ordering::Equal);
        let level = [
            "L0", "LRLL0", "LRL0", "LRLRL0", "LR0", "LRRLR0", "LRR0", "LRRR0",
        ];
        for pair in level.windows(2) {
            assert_eq!(
                lex_compare(&w(pair[0]), &w(pair[1])),
                Ordering::Less,
                "{pair:?}"
            );
        }
    }

    #[test]
    fn mixed_comparisons() {
        // (LR)^∞ = LRLR… vs LR0: position 2, L < 0
        assert_eq!(lex_compare(&w("(LR)"), &w("LR0")), Ordering::Less);
        assert_eq!(lex_compare(&w("(LRR)"), &w("LRR0")), Ordering::Less);
        assert_eq!(lex_compare(&w("(LRRR)"), &w("LRR0")), Ordering::Greater);
        assert_eq!(lex_compare(&w("(LR)"), &w("(LRR)")), Ordering::Less);
        assert_eq!(lex_compare(&w("(RL)"), &w("(RLR)")), Ordering::Less);
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shift(&w("LRRLR0"), 1).unwrap(), w("RRLR0"));
        assert_eq!(shift(&w("(LRRLR)"), 5).unwrap(), w("(LRRLR)"));
        assert_eq!(shift(&w("(LRRLR)"), 2).unwrap(), w("(RLRLR)"));
        assert_eq!(shift(&w("LR0"), 2).unwrap().to_string(), "0");
        assert_eq!(
            shift(&w("LR0"), 3),
            Err(Error::ShiftTooLarge { shift: 3, len: 2 })
        );
    }

    #[test]
    fn extremal_examples() {
        assert!(is_l_maximal(&w("L0")));
        assert!(is_l_maximal(&w("LRRLR0")));
        assert!(!is_l_maximal(&w("LRLRR0")));
        assert!(!is_l_maximal(&w("RL0")));
        assert!(is_r_minimal(&w("RLRLR0")));
        assert!(!is_r_minimal(&w("RLRRL0")));
        assert!(is_l_maximal(&w("(LRRLR)")));
        assert!(!is_l_maximal(&w("(LRLRR)")));
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(to_periodic(&f("LRRLR0")).unwrap(), p("(LRRLR)"));
        assert!(matches!(
            to_periodic(&f("LRLRR0")),
            Err(Error::NotCanonical(_))
        ));
        assert_eq!(canonical_l_maximal(&p("(RLRLR)")).unwrap(), f("LRRLR0"));
        assert!(matches!(
            canonical_l_maximal(&p("(R)")),
            Err(Error::MissingLetter(..))
        ));
        assert_eq!(canonical_r_minimal(&p("(LRRLR)")).unwrap(), f("RLRLR0"));
    }

    #[test]
    fn counts_examples() {
        assert_eq!(counts(&w("LRRLR0")), Counts { n_l: 2, n_r: 3 });
        assert_eq!(counts(&w("LRLRLRL0")), Counts { n_l: 4, n_r: 3 });
        assert_eq!(counts(&w("(LRLR)")), Counts { n_l: 1, n_r: 1 });
    }

    #[test]
    fn syllables() {
        let s = |l, r| Syllable { l, r };
        assert_eq!(
            syllable_decomposition(&w("LRRLR0")).unwrap().syllables,
            vec![s(1, 2), s(1, 1)]
        );
        let w25 = standard_torus_word(2, 5).unwrap();
        assert_eq!(w25, f("LRRRLRR0"));
        assert_eq!(
            syllable_decomposition(&Word::Finite(w25))
                .unwrap()
                .syllables,
            vec![s(1, 3), s(1, 2)]
        );
        assert_eq!(
            syllable_decomposition(&w("(LR)")).unwrap().syllables,
            vec![s(1, 1)]
        );
        let rotated = syllable_decomposition(&w("(RRLL)")).unwrap();
        assert_eq!(rotated.rotation_offset, 2);
        assert_eq!(rotated.syllables, vec![s(2, 2)]);
        assert!(matches!(
            syllable_decomposition(&w("(L)")),
            Err(Error::SingleLetter(_))
        ));
    }

    #[test]
    fn trip_numbers() {
        assert_eq!(trip_number(&w("(LRRLR)")), 2);
        assert_eq!(
            trip_number(&Word::Finite(standard_torus_word(3, 4).unwrap())),
            3
        );
        assert_eq!(trip_number(&w("(LR)")), 1);
        assert_eq!(trip_number(&w("LLL0")), 1);
    }

    #[test]
    fn torus_words() {
        assert_eq!(standard_torus_word(2, 3).unwrap(), f("LRRLR0"));
        assert_eq!(standard_torus_word(1, 4).unwrap(), f("LRRRR0"));
        assert_eq!(standard_torus_word(3, 4).unwrap(), f("LRRLRLR0"));
        assert!(standard_torus_word(2, 4).is_err());
        assert!(standard_torus_word(3, 3).is_err());
        assert!(standard_torus_word(4, 3).is_err());
    }

    #[test]
    fn balance_examples() {
        assert!(is_evenly_distributed(&w("LRRLR0")));
        assert!(!is_evenly_distributed(&w("LLRRR0")));
        assert!(is_evenly_distributed(&w("LRLRR0")));
    }

    #[test]
    fn permutation_class_examples() {
        let w57 = Word::Finite(standard_torus_word(5, 7).unwrap());
        assert_eq!(syllable_permutation_class(&w57), Some((5, 7)));
        assert_eq!(
            syllable_permutation_class(&w("(LRLRLRLRLLRL)")),
            Some((5, 7))
        );
        assert_eq!(syllable_permutation_class(&w("LRLRRRR0")), None);
        assert_eq!(syllable_permutation_class(&w("(L)")), None);
    }
}
