//! Lorenz braids read off periodic orbits, and their invariants.
//!
//! All shifts of the orbit words are sorted lexicographically; the `L`-words
//! occupy the left positions and the `R`-words the right ones. The strand
//! starting at the position of `s^k(W)` ends at the position of `s^{k+1}(W)`.
//! Permutations are one-line and 1-based.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{gcd, trip_number, Letter, PeriodicWord, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LorenzBraid {
    pub n: usize,
    pub perm: Vec<usize>,
    /// Number of strands whose start word begins with `L`.
    pub left_strands: usize,
    pub source_words: Vec<PeriodicWord>,
}

pub fn lorenz_braid(words: &[PeriodicWord]) -> Result<LorenzBraid> {
    if words.is_empty() {
        return Err(Error::EmptyWord);
    }
    for (i, a) in words.iter().enumerate() {
        if words[..i].iter().any(|b| a.same_class(b)) {
            return Err(Error::DuplicateClass(a.to_string()));
        }
    }

    let mut strands: Vec<(usize, usize)> = words
        .iter()
        .enumerate()
        .flat_map(|(i, w)| (0..w.period()).map(move |k| (i, k)))
        .collect();
    strands.sort_by(|&(i, k), &(j, l)| {
        let o = words[i].stream(k).compare(&words[j].stream(l));
        assert!(
            o != Ordering::Equal || (i, k) == (j, l),
            "distinct orbits never tie"
        );
        o
    });

    let mut position: Vec<Vec<usize>> = words.iter().map(|w| vec![0; w.period()]).collect();
    for (pos, &(i, k)) in strands.iter().enumerate() {
        position[i][k] = pos;
    }
    let perm = strands
        .iter()
        .map(|&(i, k)| position[i][(k + 1) % words[i].period()] + 1)
        .collect();
    let left_strands = strands
        .iter()
        .filter(|&&(i, k)| words[i].block()[k] == Letter::L)
        .count();

    let mut source_words = words.to_vec();
    source_words.sort();
    Ok(LorenzBraid {
        n: strands.len(),
        perm,
        left_strands,
        source_words,
    })
}

impl LorenzBraid {
    /// Inversion number of the permutation.
    pub fn crossing_count(&self) -> usize {
        inversions(&self.perm)
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut cycles = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.perm[i] - 1;
            }
        }
        cycles
    }

    /// Cycles of the permutation, each listed from its least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.perm[i] - 1;
            }
            if !cycle.is_empty() {
                out.push(cycle);
            }
        }
        out
    }

    /// No crossings inside the `L` block or inside the `R` block.
    pub fn is_simple_lorenz(&self) -> bool {
        let (l, r) = self.perm.split_at(self.left_strands);
        l.windows(2).all(|w| w[0] < w[1]) && r.windows(2).all(|w| w[0] < w[1])
    }

    /// `[4,5,1,2,3]`
    pub fn perm_string(&self) -> String {
        let items: Vec<String> = self.perm.iter().map(|p| p.to_string()).collect();
        format!("[{}]", items.join(","))
    }

    /// The permutation seen with the strand order reversed.
    pub fn reversed_perm(&self) -> Vec<usize> {
        (0..self.n)
            .map(|i| self.n + 1 - self.perm[self.n - 1 - i])
            .collect()
    }
}

fn inversions(perm: &[usize]) -> usize {
    (0..perm.len())
        .map(|i| perm[i + 1..].iter().filter(|&&b| b < perm[i]).count())
        .sum()
}

/// Braid index of a Lorenz knot: its trip number.
pub fn braid_index(w: &PeriodicWord) -> usize {
    trip_number(&Word::Periodic(w.clone()))
}

/// Genus of the closure of a one-component positive braid, `(c − n + 1) / 2`.
pub fn positive_braid_genus(b: &LorenzBraid) -> Result<usize> {
    let cycles = b.cycle_count();
    if cycles != 1 {
        return Err(Error::NotAKnot(cycles));
    }
    let twice = b.crossing_count() + 1 - b.n;
    assert!(
        twice.is_multiple_of(2),
        "a positive knot braid has c − n + 1 even"
    );
    Ok(twice / 2)
}

/// Coprime `p < q' ≤ q_bound` with `p = braid_index` and genus `(p−1)(q'−1)/2`.
pub fn torus_matches(braid_index: u64, genus: u64, q_bound: u64) -> Vec<(u64, u64)> {
    let p = braid_index;
    if p == 0 {
        return Vec::new();
    }
    (p + 1..=q_bound)
        .filter(|&q| gcd(p, q) == 1 && (p - 1) * (q - 1) == 2 * genus)
        .map(|q| (p, q))
        .collect()
}

/// Positive Artin word (1-based generators) realizing the permutation, built
/// by left-to-right bubble sweeps so each pair of strands crosses at most once.
pub fn emit_braid_word(b: &LorenzBraid) -> Vec<usize> {
    let mut arrangement: Vec<usize> = (0..b.n).collect();
    let mut word = Vec::new();
    loop {
        let mut swapped = false;
        for i in 0..b.n.saturating_sub(1) {
            if b.perm[arrangement[i]] > b.perm[arrangement[i + 1]] {
                arrangement.swap(i, i + 1);
                word.push(i + 1);
                swapped = true;
            }
        }
        if !swapped {
            return word;
        }
    }
}

/// Replays an Artin word on `n` strands; returns the one-line permutation.
pub fn replay_braid_word(n: usize, word: &[usize]) -> Vec<usize> {
    let mut arrangement: Vec<usize> = (0..n).collect();
    for &g in word {
        arrangement.swap(g - 1, g);
    }
    let mut perm = vec![0; n];
    for (pos, &strand) in arrangement.iter().enumerate() {
        perm[strand] = pos + 1;
    }
    perm
}

/// Space-separated generators, all positive.
pub fn artin_string(word: &[usize]) -> String {
    word.iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
