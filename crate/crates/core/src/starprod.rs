//! The renormalization `*`-product `(X, Y) * S`, factorization of reducible
//! words, and the classifier that identifies products over Farey pairs as
//! syllable permutations of standard torus words.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::farey::{is_admissible, FareyPair};
use crate::words::{
    balanced_word, canonical_l_maximal, least_period, syllable_permutation_class, trip_number,
    FiniteWord, Letter, Word,
};

/// Replaces every `L` of `S` by `X` and every `R` by `Y`, closing with `0`.
pub fn star_product(x: &FiniteWord, y: &FiniteWord, s: &FiniteWord) -> Result<FiniteWord> {
    if s.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !is_admissible(&Word::Finite(x.clone()), &Word::Finite(y.clone())) {
        return Err(Error::NotAdmissible(x.to_string(), y.to_string()));
    }
    Ok(substitute(x, y, s))
}

fn substitute(x: &FiniteWord, y: &FiniteWord, s: &FiniteWord) -> FiniteWord {
    let letters = s
        .letters()
        .iter()
        .flat_map(|l| match l {
            Letter::L => x.letters(),
            Letter::R => y.letters(),
        })
        .copied()
        .collect();
    FiniteWord::new(letters).expect("non-empty blocks")
}

impl FareyPair {
    pub fn star(&self, s: &FiniteWord) -> Result<FiniteWord> {
        star_product(&self.x, &self.y, s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factorization {
    pub x: FiniteWord,
    pub y: FiniteWord,
    pub s: FiniteWord,
}

/// Every way of writing `w` as `(X, Y) * S` with `(X, Y)` admissible, `S`
/// using both letters and `(X, Y) ≠ (L0, R0)`. Sorted by `|S|` descending.
/// Periodic input is read through its L-maximal representative.
pub fn factorize(w: &Word) -> Vec<Factorization> {
    let letters: Vec<Letter> = match w {
        Word::Finite(f) => f.letters().to_vec(),
        Word::Periodic(p) => match canonical_l_maximal(p) {
            Ok(f) => f.letters().to_vec(),
            Err(_) => return Vec::new(),
        },
    };
    let n = letters.len();
    let mut out = Vec::new();
    for a in 1..n {
        for b in 1..=(n - a) {
            // (L0, R0) factors every word trivially
            if a + b < 3 {
                continue;
            }
            if let Some(f) = split_blocks(&letters, a, b) {
                if is_admissible(&Word::Finite(f.x.clone()), &Word::Finite(f.y.clone())) {
                    out.push(f);
                }
            }
        }
    }
    out.sort_by_key(|f| std::cmp::Reverse(f.s.len()));
    out
}

/// Cuts `letters` into blocks of length `a` (starting with `L`) and `b`
/// (starting with `R`); all `L`-blocks must agree, as must all `R`-blocks.
fn split_blocks(letters: &[Letter], a: usize, b: usize) -> Option<Factorization> {
    let mut x: Option<&[Letter]> = None;
    let mut y: Option<&[Letter]> = None;
    let mut s = Vec::new();
    let mut pos = 0;
    while pos < letters.len() {
        let letter = letters[pos];
        let (len, slot) = match letter {
            Letter::L => (a, &mut x),
            Letter::R => (b, &mut y),
        };
        let block = letters.get(pos..pos + len)?;
        match slot {
            Some(seen) if *seen != block => return None,
            Some(_) => {}
            None => *slot = Some(block),
        }
        s.push(letter);
        pos += len;
    }
    Some(Factorization {
        x: FiniteWord::new(x?.to_vec()).ok()?,
        y: FiniteWord::new(y?.to_vec()).ok()?,
        s: FiniteWord::new(s).ok()?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "nontrivial-permutation")]
    NontrivialPermutation,
    #[serde(rename = "standard-word")]
    StandardWord,
    #[serde(rename = "not-applicable")]
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NontrivialPermutation => "nontrivial-permutation",
            Verdict::StandardWord => "standard-word",
            Verdict::NotApplicable => "not-applicable",
        })
    }
}

/// Why a product was not classified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    TripNumberX,
    TripNumberY,
    NonPrimitiveS,
    MixedOrientation,
    QuotientMismatch,
    ZeroRemainder,
    RemainderOutOfRange,
    CountMismatch,
    NotASyllablePermutation,
}

/// The four arithmetic shapes of `q` relative to `k` and `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CertificateKind {
    #[serde(rename = "q=kp+2")]
    KpPlus2,
    #[serde(rename = "q=(k+1)p-2")]
    K1pMinus2,
    #[serde(rename = "q=kp+3")]
    KpPlus3,
    #[serde(rename = "q=(k+1)p-3")]
    K1pMinus3,
}

impl CertificateKind {
    pub const ALL: [CertificateKind; 4] = [
        CertificateKind::KpPlus2,
        CertificateKind::K1pMinus2,
        CertificateKind::KpPlus3,
        CertificateKind::K1pMinus3,
    ];

    pub fn q_for(self, k: u64, p: u64) -> u64 {
        match self {
            CertificateKind::KpPlus2 => k * p + 2,
            CertificateKind::K1pMinus2 => (k + 1) * p - 2,
            CertificateKind::KpPlus3 => k * p + 3,
            CertificateKind::K1pMinus3 => (k + 1) * p - 3,
        }
    }

    /// `±2` shapes need odd `p`; `±3` shapes need even `p` prime to 3.
    pub fn needs_odd_p(self) -> bool {
        matches!(self, CertificateKind::KpPlus2 | CertificateKind::K1pMinus2)
    }

    pub fn conditions_hold(self, p: u64) -> bool {
        let flags = PFlags::of(p);
        flags.p_greater_than_4
            && if self.needs_odd_p() {
                flags.p_odd
            } else {
                !flags.p_odd && flags.p_not_multiple_of_3
            }
    }

    /// Shape of `q = kp + r`, preferring the shapes whose parity matches `p`.
    pub fn detect(k: u64, p: u64, q: u64) -> Option<CertificateKind> {
        let mut order = CertificateKind::ALL;
        if p.is_multiple_of(2) {
            order.rotate_left(2);
        }
        order
            .into_iter()
            .find(|kind| p >= 3 && kind.q_for(k, p) == q)
    }
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertificateKind::KpPlus2 => "q=kp+2",
            CertificateKind::K1pMinus2 => "q=(k+1)p-2",
            CertificateKind::KpPlus3 => "q=kp+3",
            CertificateKind::K1pMinus3 => "q=(k+1)p-3",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PFlags {
    pub p_odd: bool,
    pub p_greater_than_4: bool,
    pub p_not_multiple_of_3: bool,
}

impl PFlags {
    pub fn of(p: u64) -> PFlags {
        PFlags {
            p_odd: p % 2 == 1,
            p_greater_than_4: p > 4,
            p_not_multiple_of_3: !p.is_multiple_of(3),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusPermutationReport {
    pub x: FiniteWord,
    pub y: FiniteWord,
    pub s: FiniteWord,
    pub product: FiniteWord,
    pub p1: u64,
    pub q1: u64,
    pub p2: u64,
    pub q2: u64,
    pub k: Option<u64>,
    pub r1: Option<u64>,
    pub r2: Option<u64>,
    pub p: u64,
    pub q: u64,
    pub r: Option<u64>,
    pub verdict: Verdict,
    pub reason: Option<Reason>,
    pub certificate: Option<CertificateKind>,
    pub flags: PFlags,
}

impl TorusPermutationReport {
    pub fn is_applicable(&self) -> bool {
        self.verdict != Verdict::NotApplicable
    }
}

/// Classifies `Z = (X, Y) * S`. The arithmetic is derived from letter counts;
/// the verdict comes from comparing the syllables of `Z` with the standard
/// torus word.
pub fn classify_star(pair: &FareyPair, s: &FiniteWord) -> Result<TorusPermutationReport> {
    let product = pair.star(s)?;
    let (cx, cy, cs) = (pair.x.counts(), pair.y.counts(), s.counts());
    let (p1, q1) = (cx.min() as u64, cx.max() as u64);
    let (p2, q2) = (cy.min() as u64, cy.max() as u64);
    let (nls, nrs) = (cs.n_l as u64, cs.n_r as u64);
    let p = nls * p1 + nrs * p2;
    let q = nls * q1 + nrs * q2;

    let mut report = TorusPermutationReport {
        x: pair.x.clone(),
        y: pair.y.clone(),
        s: s.clone(),
        product,
        p1,
        q1,
        p2,
        q2,
        k: None,
        r1: None,
        r2: None,
        p,
        q,
        r: None,
        verdict: Verdict::NotApplicable,
        reason: None,
        certificate: None,
        flags: PFlags::of(p),
    };
    let refuse = |mut report: TorusPermutationReport, reason| {
        report.reason = Some(reason);
        Ok(report)
    };

    if trip_number(&Word::Finite(pair.x.clone())) <= 1 {
        return refuse(report, Reason::TripNumberX);
    }
    if trip_number(&Word::Finite(pair.y.clone())) <= 1 {
        return refuse(report, Reason::TripNumberY);
    }
    if least_period(s.letters()) != s.len() {
        return refuse(report, Reason::NonPrimitiveS);
    }
    if (cx.n_l < cx.n_r) != (cy.n_l < cy.n_r) {
        return refuse(report, Reason::MixedOrientation);
    }
    let k = q1 / p1;
    if q2 / p2 != k {
        return refuse(report, Reason::QuotientMismatch);
    }
    let (r1, r2) = (q1 % p1, q2 % p2);
    report.k = Some(k);
    report.r1 = Some(r1);
    report.r2 = Some(r2);
    if r1 == 0 || r2 == 0 {
        return refuse(report, Reason::ZeroRemainder);
    }
    let r = nls * r1 + nrs * r2;
    report.r = Some(r);
    if !(1 < r && r + 1 < p) || q != k * p + r {
        return refuse(report, Reason::RemainderOutOfRange);
    }

    let cz = report.product.counts();
    if (cz.min() as u64, cz.max() as u64) != (p, q) {
        return refuse(report, Reason::CountMismatch);
    }
    let orbit = Word::Periodic(report.product.cyclic_class()?);
    if syllable_permutation_class(&orbit) != Some((p, q)) {
        return refuse(report, Reason::NotASyllablePermutation);
    }
    let canonical = canonical_l_maximal(&report.product.cyclic_class()?)?;
    report.verdict = if canonical == balanced_word(cz.n_l, cz.n_r)? {
        Verdict::StandardWord
    } else {
        Verdict::NontrivialPermutation
    };
    report.certificate = CertificateKind::detect(k, p, q);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::farey::make_farey_pair;
    use crate::words::is_evenly_distributed;

    fn f(s: &str) -> FiniteWord {
        s.parse().unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(
            star_product(&f("L0"), &f("R0"), &f("LR0")).unwrap(),
            f("LR0")
        );
        assert_eq!(
            star_product(&f("LRLRLRL0"), &f("RLLRL0"), &f("LR0")).unwrap(),
            f("LRLRLRLRLLRL0")
        );
        assert_eq!(
            star_product(&f("LRR0"), &f("RL0"), &f("LLR0")).unwrap(),
            f("LRRLRRRL0")
        );
        assert!(matches!(
            star_product(&f("LRL0"), &f("RLR0"), &f("LR0")),
            Err(Error::NotAdmissible(..))
        ));
    }

    #[test]
    fn factorizations() {
        assert!(factorize(&"LRRLR0".parse().unwrap()).is_empty());
        assert!(factorize(&"LR0".parse().unwrap()).is_empty());
        let fs = factorize(&"LRLRLRLRLLRL0".parse().unwrap());
        assert!(fs.contains(&Factorization {
            x: f("LRLRLRL0"),
            y: f("RLLRL0"),
            s: f("LR0")
        }));
        // LRRL = (LR, RL) * LR
        let fs = factorize(&"(LLRR)".parse().unwrap());
        assert_eq!(
            fs,
            vec![Factorization {
                x: f("LR0"),
                y: f("RL0"),
                s: f("LR0")
            }]
        );
    }

    #[test]
    fn factorization_is_sorted_by_s_length() {
        let pair = make_farey_pair(&f("LRR0"), &f("LR0")).unwrap();
        let z = pair.star(&f("LLR0")).unwrap();
        let fs = factorize(&Word::Finite(z));
        assert!(!fs.is_empty());
        assert!(fs.windows(2).all(|w| w[0].s.len() >= w[1].s.len()));
    }

    #[test]
    fn classify_family_one() {
        let pair = make_farey_pair(&f("LRLRLRL0"), &f("LRLRL0")).unwrap();
        let rep = classify_star(&pair, &f("LR0")).unwrap();
        assert_eq!((rep.p1, rep.q1, rep.p2, rep.q2), (3, 4, 2, 3));
        assert_eq!((rep.k, rep.r1, rep.r2), (Some(1), Some(1), Some(1)));
        assert_eq!((rep.p, rep.q, rep.r), (5, 7, Some(2)));
        assert_eq!(rep.verdict, Verdict::NontrivialPermutation);
        assert_eq!(rep.certificate, Some(CertificateKind::KpPlus2));
        assert!(!is_evenly_distributed(&Word::Finite(rep.product)));
    }

    #[test]
    fn classify_family_two() {
        let pair = make_farey_pair(&f("LRLRL0"), &f("LRLRLLRL0")).unwrap();
        assert_eq!(pair.y, f("RLLRLLRL0"));
        let rep = classify_star(&pair, &f("LR0")).unwrap();
        assert_eq!((rep.p, rep.q, rep.r), (5, 8, Some(3)));
        assert_eq!(rep.certificate, Some(CertificateKind::K1pMinus2));
    }

    #[test]
    fn classify_refusals() {
        let pair = make_farey_pair(&f("LRRLR0"), &f("LR0")).unwrap();
        let rep = classify_star(&pair, &f("LR0")).unwrap();
        assert_eq!(rep.verdict, Verdict::NotApplicable);
        assert_eq!(rep.reason, Some(Reason::TripNumberY));

        let pair = make_farey_pair(&f("LRLRLRL0"), &f("LRLRL0")).unwrap();
        let rep = classify_star(&pair, &f("LRLR0")).unwrap();
        assert_eq!(rep.reason, Some(Reason::NonPrimitiveS));
    }

    #[test]
    fn certificate_detection_prefers_matching_parity() {
        // p = 5: r = 2 = p − 3 and r = 3 = p − 2 are ambiguous
        assert_eq!(
            CertificateKind::detect(1, 5, 7),
            Some(CertificateKind::KpPlus2)
        );
        assert_eq!(
            CertificateKind::detect(1, 5, 8),
            Some(CertificateKind::K1pMinus2)
        );
        assert_eq!(
            CertificateKind::detect(1, 8, 11),
            Some(CertificateKind::KpPlus3)
        );
        assert_eq!(
            CertificateKind::detect(1, 8, 13),
            Some(CertificateKind::K1pMinus3)
        );
        assert_eq!(CertificateKind::detect(1, 8, 12), None);
        assert!(CertificateKind::K1pMinus3.conditions_hold(10));
        assert!(!CertificateKind::KpPlus3.conditions_hold(12));
        assert!(!CertificateKind::KpPlus2.conditions_hold(3));
    }
}
