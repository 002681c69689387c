//! Symbolic Farey trees, Farey neighbours, Farey pairs and kneading
//! admissibility.
//!
//! `F⁻` starts from `L0`; level `n + 1` adds `LR^{n+1}0` and, between every two
//! consecutive words `X < Y` of level `n`, the word `Y X 0`. `F⁺` mirrors this
//! from `R0` with `RL^{n+1}0` and `X Y 0`.

use std::cmp::Ordering;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{
    canonical_l_maximal, is_l_maximal, FiniteWord, Letter, PeriodicWord, Stream, Word,
};

pub const DEFAULT_MAX_DEPTH: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// L-maximal tree `F⁻`.
    Minus,
    /// R-minimal tree `F⁺`.
    Plus,
}

impl Side {
    fn root(self) -> Letter {
        match self {
            Side::Minus => Letter::L,
            Side::Plus => Letter::R,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeLevel {
    pub side: Side,
    pub depth: usize,
    /// Strictly increasing.
    pub words: Vec<FiniteWord>,
}

impl TreeLevel {
    /// Consecutive pairs `(X, Y)` with `X < Y`.
    pub fn adjacent_pairs(&self) -> impl Iterator<Item = (&FiniteWord, &FiniteWord)> {
        self.words.windows(2).map(|w| (&w[0], &w[1]))
    }

    fn next(&self) -> TreeLevel {
        let depth = self.depth + 1;
        let root = self.side.root();
        let mut spine = vec![root];
        spine.extend(std::iter::repeat_n(root.swap(), depth));
        let spine = FiniteWord::new(spine).expect("non-empty");

        let mut words = Vec::with_capacity(2 * self.words.len());
        if self.side == Side::Plus {
            words.push(spine.clone());
        }
        for (i, w) in self.words.iter().enumerate() {
            words.push(w.clone());
            if let Some(next) = self.words.get(i + 1) {
                words.push(child(self.side, w, next));
            }
        }
        if self.side == Side::Minus {
            words.push(spine);
        }
        TreeLevel {
            side: self.side,
            depth,
            words,
        }
    }
}

/// The word created between consecutive `lo < hi`.
fn child(side: Side, lo: &FiniteWord, hi: &FiniteWord) -> FiniteWord {
    match side {
        Side::Minus => hi.concat(lo),
        Side::Plus => lo.concat(hi),
    }
}

pub fn tree_level(side: Side, depth: usize) -> Result<TreeLevel> {
    tree_level_bounded(side, depth, DEFAULT_MAX_DEPTH)
}

pub fn tree_level_bounded(side: Side, depth: usize, bound: usize) -> Result<TreeLevel> {
    if depth > bound {
        return Err(Error::DepthTooLarge { depth, bound });
    }
    let root = FiniteWord::new(vec![side.root()]).expect("non-empty");
    let mut level = TreeLevel {
        side,
        depth: 0,
        words: vec![root],
    };
    while level.depth < depth {
        level = level.next();
    }
    Ok(level)
}

/// All levels `0..=depth`.
pub fn tree_levels(side: Side, depth: usize) -> Result<Vec<TreeLevel>> {
    if depth > DEFAULT_MAX_DEPTH {
        return Err(Error::DepthTooLarge {
            depth,
            bound: DEFAULT_MAX_DEPTH,
        });
    }
    let mut levels = vec![tree_level(side, 0)?];
    for _ in 0..depth {
        let next = levels.last().expect("non-empty").next();
        levels.push(next);
    }
    Ok(levels)
}

/// `m(X)`: least rotation of `X` that starts with `R`, closed with `0`.
pub fn r_minimal_rotation(x: &FiniteWord) -> Result<FiniteWord> {
    (0..x.len())
        .filter(|&j| x.letters()[j] == Letter::R)
        .map(|j| x.rotation(j))
        .min()
        .ok_or_else(|| Error::MissingLetter(x.to_string(), 'R'))
}

/// A point on a path down `F⁻`: consecutive words `left < right` of level
/// `depth`, with `right = None` past the spine word.
struct Descent {
    left: FiniteWord,
    right: Option<FiniteWord>,
    depth: usize,
}

impl Descent {
    fn start() -> Self {
        Descent {
            left: FiniteWord::new(vec![Letter::L]).expect("non-empty"),
            right: None,
            depth: 0,
        }
    }

    fn child(&self) -> FiniteWord {
        match &self.right {
            Some(r) => r.concat(&self.left),
            // LR^j 0 and the open end: the next spine word LR^{j+1}0
            None => self
                .left
                .concat(&FiniteWord::new(vec![Letter::R]).expect("non-empty")),
        }
    }
}

/// Level at which `w` first appears in `F⁻`, if it appears at all.
pub fn minus_tree_depth(w: &FiniteWord) -> Option<usize> {
    let mut d = Descent::start();
    loop {
        if d.left == *w {
            return Some(d.depth);
        }
        let c = d.child();
        if c.len() > w.len() {
            return None;
        }
        d.depth += 1;
        match c.cmp(w) {
            Ordering::Equal => return Some(d.depth),
            Ordering::Less => d.left = c,
            Ordering::Greater => d.right = Some(c),
        }
    }
}

pub fn in_minus_tree(w: &FiniteWord) -> bool {
    minus_tree_depth(w).is_some()
}

/// True iff `a` and `b` are consecutive words of some level of `F⁻`.
pub fn are_farey_neighbors(a: &FiniteWord, b: &FiniteWord) -> Result<bool> {
    for w in [a, b] {
        if !is_l_maximal(&Word::Finite(w.clone())) {
            return Err(Error::NotLMaximal(w.to_string()));
        }
    }
    Ok(neighbor_depth(a, b).is_some())
}

/// Level at which the L-maximal words `a`, `b` become consecutive.
pub fn neighbor_depth(a: &FiniteWord, b: &FiniteWord) -> Option<usize> {
    let (lo, hi) = match a.cmp(b) {
        Ordering::Less => (a, b),
        Ordering::Greater => (b, a),
        Ordering::Equal => return None,
    };
    let max_len = lo.len().max(hi.len());
    let mut d = Descent::start();
    loop {
        if d.left == *lo && d.right.as_ref() == Some(hi) {
            return Some(d.depth);
        }
        let c = d.child();
        if c.len() > max_len {
            return None;
        }
        d.depth += 1;
        if c <= *lo {
            d.left = c;
        } else if c >= *hi {
            d.right = Some(c);
        } else {
            // c stays between them at every later level
            return None;
        }
    }
}

/// `|n_L(A) n_R(B) − n_R(A) n_L(B)|`, equal to 1 for Farey neighbours.
pub fn count_determinant(a: &FiniteWord, b: &FiniteWord) -> usize {
    let (ca, cb) = (a.counts(), b.counts());
    (ca.n_l * cb.n_r).abs_diff(ca.n_r * cb.n_l)
}

/// Kneading admissibility of `(X, Y)`: for `Z ∈ {X, Y}`, `Z_i = L ⇒ σ^i(Z) ≤ X`
/// and `Z_i = R ⇒ σ^i(Z) ≥ Y`, strictly when a finite word is involved. The
/// self-comparisons at `i = 0` are never strict.
pub fn is_admissible(x: &Word, y: &Word) -> bool {
    if x.letters().first() != Some(&Letter::L) || y.letters().first() != Some(&Letter::R) {
        return false;
    }
    let strict = x.is_finite() || y.is_finite();
    let (xs, ys) = (x.stream(0), y.stream(0));
    let ok = |s: Stream<'_>, letter: Letter, exempt: bool| match letter {
        Letter::L => match s.compare(&xs) {
            Ordering::Less => true,
            Ordering::Equal => !strict || exempt,
            Ordering::Greater => false,
        },
        Letter::R => match s.compare(&ys) {
            Ordering::Greater => true,
            Ordering::Equal => !strict || exempt,
            Ordering::Less => false,
        },
    };
    [x, y].into_iter().all(|z| {
        z.letters()
            .iter()
            .enumerate()
            .all(|(i, &letter)| ok(z.stream(i), letter, i == 0))
    })
}

/// An admissible pair `(X, Y)` with `Y = m(S)`, `X` and `S` Farey neighbours in
/// `F⁻` and `S < X`. `s_parent` is that `S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FareyPair {
    pub x: FiniteWord,
    pub y: FiniteWord,
    pub s_parent: FiniteWord,
}

pub fn make_farey_pair(x: &FiniteWord, s_parent: &FiniteWord) -> Result<FareyPair> {
    for w in [x, s_parent] {
        if !is_l_maximal(&Word::Finite(w.clone())) {
            return Err(Error::NotLMaximal(w.to_string()));
        }
    }
    let y = r_minimal_rotation(s_parent)?;
    if s_parent >= x {
        return Err(Error::WrongOrder(s_parent.to_string(), x.to_string()));
    }
    if neighbor_depth(s_parent, x).is_none() {
        return Err(Error::NotNeighbors(s_parent.to_string(), x.to_string()));
    }
    let pair = FareyPair {
        x: x.clone(),
        y,
        s_parent: s_parent.clone(),
    };
    if !pair.is_admissible() {
        return Err(Error::NotAdmissible(pair.x.to_string(), pair.y.to_string()));
    }
    Ok(pair)
}

impl FareyPair {
    /// Recovers `S` from `Y` as the L-maximal form of its orbit and validates.
    pub fn from_words(x: &FiniteWord, y: &FiniteWord) -> Result<FareyPair> {
        let s_parent = canonical_l_maximal(&y.cyclic_class()?)?;
        let pair = make_farey_pair(x, &s_parent)?;
        if pair.y != *y {
            return Err(Error::NotCanonical(y.to_string()));
        }
        Ok(pair)
    }

    pub fn is_admissible(&self) -> bool {
        is_admissible(&Word::Finite(self.x.clone()), &Word::Finite(self.y.clone()))
    }
}

/// Outcome of comparing a generated tree entry with an expected one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EntryMatch {
    Identical,
    /// Same periodic orbit, different finite representative.
    SameClass,
    Different,
}

pub fn match_entry(generated: &FiniteWord, expected: &FiniteWord) -> EntryMatch {
    if generated == expected {
        return EntryMatch::Identical;
    }
    let class = |w: &FiniteWord| PeriodicWord::new(w.letters().to_vec()).ok();
    match (class(generated), class(expected)) {
        (Some(a), Some(b)) if a.same_class(&b) => EntryMatch::SameClass,
        _ => EntryMatch::Different,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlusDiscrepancy {
    pub index: usize,
    pub recursion: FiniteWord,
    pub from_minus: FiniteWord,
    pub matching: EntryMatch,
}

/// Cross-checks `F⁺` level `depth` against `m(·)` of the `F⁻` word at the same
/// non-root position.
pub fn plus_vs_minus(depth: usize) -> Result<Vec<PlusDiscrepancy>> {
    let minus = tree_level(Side::Minus, depth)?;
    let plus = tree_level(Side::Plus, depth)?;
    let mut out = Vec::new();
    // drop L0 (first of F⁻) and R0 (last of F⁺)
    for (index, (m, p)) in minus.words[1..].iter().zip(&plus.words).enumerate() {
        let from_minus = r_minimal_rotation(m)?;
        if from_minus != *p {
            out.push(PlusDiscrepancy {
                index,
                recursion: p.clone(),
                matching: match_entry(p, &from_minus),
                from_minus,
            });
        }
    }
    Ok(out)
}

/// Uniform sampler of Farey pairs from the levels `2..=max_depth` of `F⁻`.
pub struct FareySampler {
    pairs: Vec<(FiniteWord, FiniteWord)>,
}

impl FareySampler {
    pub fn new(max_depth: usize) -> Result<Self> {
        // a child separates every consecutive pair, so no pair repeats across levels
        let pairs = tree_levels(Side::Minus, max_depth)?
            .iter()
            .flat_map(|level| {
                level
                    .adjacent_pairs()
                    .map(|(s, x)| (s.clone(), x.clone()))
                    .collect::<Vec<_>>()
            })
            .filter(|(s, _)| s.letters().contains(&Letter::R))
            .collect();
        Ok(FareySampler { pairs })
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> FareyPair {
        let (s, x) = &self.pairs[rng.gen_range(0..self.pairs.len())];
        make_farey_pair(x, s).expect("tree neighbours form a Farey pair")
    }
}
