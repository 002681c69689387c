//! The ten families of products `(X, Y) * S` over Farey pairs whose Lorenz
//! knots are hyperbolic provided Morton's conjecture holds, their `L ↔ R`
//! mirrors, and auditable certificates.
//!
//! Each family fixes `X`, `Y` and `S ∈ {LR0, LRL0, LRR0}` as words in the
//! parameters `k > 0`, `n > 1`. A certificate records every clause it rests on:
//! the Farey pair, admissibility, the syllable-permutation verdict, the shape
//! of `q` relative to `kp`, the parity and divisibility of `p`, and the
//! uniqueness of a competing torus knot. Exclusion of satellites is inherited
//! from Morton's conjecture and never recomputed, so every certificate is
//! conditional on it.

use serde::{Deserialize, Serialize};

use crate::braids::{braid_index, lorenz_braid, positive_braid_genus, torus_matches};
use crate::error::{Error, Result};
use crate::farey::{make_farey_pair, FareyPair};
use crate::starprod::{classify_star, CertificateKind, TorusPermutationReport, Verdict};
use crate::words::{balanced_word, canonical_l_maximal, trip_number, FiniteWord, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Any,
    Odd,
    Even,
}

/// Static description of one family.
#[derive(Debug, Clone, Copy)]
pub struct Family {
    pub id: u8,
    pub parity: Parity,
    pub s: &'static str,
    pub kind: CertificateKind,
    /// `p` as a function of `n`, as stated for the family.
    pub p_of_n: fn(u64) -> u64,
}

pub const FAMILIES: [Family; 10] = [
    Family {
        id: 1,
        parity: Parity::Any,
        s: "LR",
        kind: CertificateKind::KpPlus2,
        p_of_n: |n| 2 * n + 1,
    },
    Family {
        id: 2,
        parity: Parity::Any,
        s: "LR",
        kind: CertificateKind::K1pMinus2,
        p_of_n: |n| 2 * n + 1,
    },
    Family {
        id: 3,
        parity: Parity::Odd,
        s: "LR",
        kind: CertificateKind::KpPlus3,
        p_of_n: |n| 3 * n - 1,
    },
    Family {
        id: 4,
        parity: Parity::Odd,
        s: "LR",
        kind: CertificateKind::KpPlus3,
        p_of_n: |n| 3 * n + 1,
    },
    Family {
        id: 5,
        parity: Parity::Even,
        s: "LRL",
        kind: CertificateKind::KpPlus3,
        p_of_n: |n| 3 * n + 2,
    },
    Family {
        id: 6,
        parity: Parity::Odd,
        s: "LRR",
        kind: CertificateKind::KpPlus3,
        p_of_n: |n| 3 * n + 1,
    },
    Family {
        id: 7,
        parity: Parity::Odd,
        s: "LR",
        kind: CertificateKind::K1pMinus3,
        p_of_n: |n| 3 * n + 1,
    },
    Family {
        id: 8,
        parity: Parity::Odd,
        s: "LR",
        kind: CertificateKind::K1pMinus3,
        p_of_n: |n| 3 * n - 1,
    },
    Family {
        id: 9,
        parity: Parity::Odd,
        s: "LRL",
        kind: CertificateKind::K1pMinus3,
        p_of_n: |n| 3 * n + 1,
    },
    Family {
        id: 10,
        parity: Parity::Even,
        s: "LRR",
        kind: CertificateKind::K1pMinus3,
        p_of_n: |n| 3 * n + 2,
    },
];

pub fn family(id: u8) -> Result<&'static Family> {
    FAMILIES
        .iter()
        .find(|f| f.id == id)
        .ok_or_else(|| Error::FamilyConstraint {
            family: id,
            clause: "family id must be between 1 and 10".into(),
        })
}

impl Family {
    /// Checks `k > 0`, `n > 1` and the parity of `n`.
    pub fn check_params(&self, k: u64, n: u64) -> Result<()> {
        let fail = |clause: &str| {
            Err(Error::FamilyConstraint {
                family: self.id,
                clause: clause.into(),
            })
        };
        if k == 0 {
            return fail("k > 0 required");
        }
        if n < 2 {
            return fail("n > 1 required");
        }
        match self.parity {
            Parity::Odd if n.is_multiple_of(2) => fail("n odd required"),
            Parity::Even if n % 2 == 1 => fail("n even required"),
            _ => Ok(()),
        }
    }
}

fn l(k: u64) -> String {
    "L".repeat(k as usize)
}

fn rl(k: u64) -> String {
    format!("R{}", l(k))
}

fn pow(s: &str, e: u64) -> String {
    s.repeat(e as usize)
}

/// `(X, Y, S_parent)` letter strings. `S_parent` follows each family's own
/// neighbour argument rather than being recomputed from `Y`.
fn formulas(id: u8, k: u64, n: u64) -> (String, String, String) {
    let (rlk, rlk1) = (rl(k), rl(k + 1));
    // L(RL^k)^{n+1}, RL^{k+1}(RL^k)^{n-1}, parent L(RL^k)^n
    let first = || {
        (
            format!("L{}", pow(&rlk, n + 1)),
            format!("{rlk1}{}", pow(&rlk, n - 1)),
            format!("L{}", pow(&rlk, n)),
        )
    };
    // LRL^k(RL^{k+1})^{n-2}RL^k, (RL^{k+1})^n RL^k, parent LRL^k(RL^{k+1})^{n-1}RL^k
    let second = || {
        (
            format!("LR{}{}{rlk}", l(k), pow(&rlk1, n - 2)),
            format!("{}{rlk}", pow(&rlk1, n)),
            format!("LR{}{}{rlk}", l(k), pow(&rlk1, n - 1)),
        )
    };
    match id {
        1 | 5 | 6 => first(),
        2 | 9 | 10 => second(),
        3 => (
            format!("L{}", pow(&rlk, n)),
            format!("{rlk1}{}{rlk1}{}", pow(&rlk, n - 2), pow(&rlk, n - 1)),
            format!("L{}L{}", pow(&rlk, n), pow(&rlk, n - 1)),
        ),
        4 => (
            format!("L{}{rlk1}{}", pow(&rlk, n), pow(&rlk, n)),
            format!("{rlk1}{}", pow(&rlk, n - 1)),
            format!("L{}", pow(&rlk, n)),
        ),
        7 => {
            let x = format!("LR{}{}{rlk}", l(k), pow(&rlk1, n - 2));
            let u = format!("LR{}{}{rlk}", l(k), pow(&rlk1, n - 1));
            let y = format!("{}{rlk}{}{rlk}", pow(&rlk1, n), pow(&rlk1, n - 1));
            let parent = format!("{x}{u}");
            (x, y, parent)
        }
        8 => (
            format!(
                "LR{}{}{rlk}{}{rlk}",
                l(k),
                pow(&rlk1, n - 2),
                pow(&rlk1, n - 2)
            ),
            format!("{}{rlk}", pow(&rlk1, n - 1)),
            format!("LR{}{}{rlk}", l(k), pow(&rlk1, n - 2)),
        ),
        _ => unreachable!("family ids are validated"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInstance {
    pub family_id: u8,
    pub k: u64,
    pub n: u64,
    pub pair: FareyPair,
    pub s: FiniteWord,
    pub product: FiniteWord,
    pub report: TorusPermutationReport,
    pub mirrored: bool,
}

pub fn family_instance(family_id: u8, k: u64, n: u64) -> Result<FamilyInstance> {
    let fam = family(family_id)?;
    fam.check_params(k, n)?;
    let (x, y, parent) = formulas(family_id, k, n);
    let (x, y, parent) = (
        FiniteWord::from_letters(&x)?,
        FiniteWord::from_letters(&y)?,
        FiniteWord::from_letters(&parent)?,
    );
    let transcription = |detail: String| Error::FamilyConstraint {
        family: family_id,
        clause: detail,
    };

    // the parent read off the neighbour argument must be the L-maximal form of Y
    let from_y = canonical_l_maximal(&y.cyclic_class()?)?;
    if from_y != parent {
        return Err(transcription(format!(
            "S = {parent} but Y = {y} comes from {from_y}"
        )));
    }
    let pair = make_farey_pair(&x, &parent)?;
    if pair.y != y {
        return Err(transcription(format!(
            "m({parent}) = {} differs from Y = {y}",
            pair.y
        )));
    }
    let s = FiniteWord::from_letters(fam.s)?;
    let product = pair.star(&s)?;
    let report = classify_star(&pair, &s)?;
    Ok(FamilyInstance {
        family_id,
        k,
        n,
        pair,
        s,
        product,
        report,
        mirrored: false,
    })
}

pub fn mirror_word(w: &Word) -> Word {
    w.mirror()
}

impl FamilyInstance {
    /// `(Ŷ, X̂) * Ŝ`: letters exchanged and roles of `X`, `Y` swapped.
    pub fn mirror(&self) -> Result<FamilyInstance> {
        let pair = FareyPair::from_words(&self.pair.y.mirror(), &self.pair.x.mirror())?;
        let s = self.s.mirror();
        let product = pair.star(&s)?;
        let report = classify_star(&pair, &s)?;
        Ok(FamilyInstance {
            family_id: self.family_id,
            k: self.k,
            n: self.n,
            pair,
            s,
            product,
            report,
            mirrored: !self.mirrored,
        })
    }

    pub fn key(&self) -> (u8, u64, u64, bool) {
        (self.family_id, self.k, self.n, self.mirrored)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub clause: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub family_id: u8,
    pub k: u64,
    pub n: u64,
    pub mirrored: bool,
    pub kind: CertificateKind,
    pub p: u64,
    pub q: u64,
    pub r: Option<u64>,
    pub clauses: Vec<Clause>,
    pub conditional_on_morton: bool,
    pub issued: bool,
}

impl Certificate {
    pub fn failed_clauses(&self) -> impl Iterator<Item = &str> {
        self.clauses
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.clause.as_str())
    }
}

pub fn verify_instance(inst: &FamilyInstance) -> Result<Certificate> {
    let fam = family(inst.family_id)?;
    let kind = fam.kind;
    let rep = &inst.report;
    let (p, q) = (rep.p, rep.q);
    let mut clauses = Vec::new();
    let mut check = |name: &str, passed: bool| {
        clauses.push(Clause {
            clause: name.into(),
            passed,
        })
    };

    let farey = make_farey_pair(&inst.pair.x, &inst.pair.s_parent)
        .map(|p| p == inst.pair)
        .unwrap_or(false);
    check("farey-pair", farey);
    check("admissible", inst.pair.is_admissible());
    let trips = [&inst.pair.x, &inst.pair.y]
        .iter()
        .all(|w| trip_number(&Word::Finite((*w).clone())) > 1);
    check("trip-numbers-above-1", trips);
    check(
        "nontrivial-permutation",
        rep.verdict == Verdict::NontrivialPermutation,
    );

    let counts = inst.product.counts();
    let standard = balanced_word(counts.n_l, counts.n_r)
        .ok()
        .and_then(|w| {
            canonical_l_maximal(&inst.product.cyclic_class().ok()?)
                .ok()
                .map(|c| c != w)
        })
        .unwrap_or(false);
    check("non-standard", standard);
    check("quotient-k", rep.k == Some(inst.k));
    check(
        "q-shape",
        rep.certificate == Some(kind) && rep.k.is_some_and(|k| kind.q_for(k, p) == q),
    );
    check("p>4", p > 4);
    if kind.needs_odd_p() {
        check("p-odd", p % 2 == 1);
    } else {
        check("p-even", p % 2 == 0);
        check("p-not-multiple-of-3", p % 3 != 0);
    }
    check("p-formula", (fam.p_of_n)(inst.n) == p);

    // at most one torus knot T(p, q'), q' < q, shares braid index and genus
    let torus_unique = inst
        .product
        .cyclic_class()
        .and_then(|orbit| {
            let braid = lorenz_braid(std::slice::from_ref(&orbit))?;
            let genus = positive_braid_genus(&braid)?;
            let index = braid_index(&orbit) as u64;
            Ok(torus_matches(index, genus as u64, q - 1).len() <= 1)
        })
        .unwrap_or(false);
    check("torus-candidates-at-most-one", torus_unique);

    let issued = clauses.iter().all(|c| c.passed);
    Ok(Certificate {
        family_id: inst.family_id,
        k: inst.k,
        n: inst.n,
        mirrored: inst.mirrored,
        kind,
        p,
        q,
        r: rep.r,
        clauses,
        conditional_on_morton: true,
        issued,
    })
}
