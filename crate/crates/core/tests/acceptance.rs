//! End-to-end acceptance run: one PASS/FAIL line per criterion, each under its
//! time limit. Exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use lorenz_core::braids::{braid_index, lorenz_braid, positive_braid_genus, torus_matches};
use lorenz_core::families::{family, family_instance, verify_instance, FAMILIES};
use lorenz_core::farey::{
    count_determinant, in_minus_tree, match_entry, plus_vs_minus, tree_level, tree_levels,
    EntryMatch, FareySampler, Side,
};
use lorenz_core::starprod::{classify_star, factorize, Verdict};
use lorenz_core::words::{
    canonical_l_maximal, is_evenly_distributed, standard_torus_word, trip_number, FiniteWord,
    Letter, PeriodicWord, Word,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn words(level: &[&str]) -> Vec<FiniteWord> {
    level.iter().map(|s| s.parse().unwrap()).collect()
}

fn tree_reproduction() -> Outcome {
    let minus = [
        vec!["L0"],
        vec!["L0", "LR0"],
        vec!["L0", "LRL0", "LR0", "LRR0"],
        vec![
            "L0", "LRLL0", "LRL0", "LRLRL0", "LR0", "LRRLR0", "LRR0", "LRRR0",
        ],
    ];
    let plus = [
        vec!["R0"],
        vec!["RL0", "R0"],
        vec!["RLL0", "RL0", "RLR0", "R0"],
        vec![
            "RLLL0", "RLL0", "RLLRL0", "RL0", "RLRRL0", "RLR0", "RLRR0", "R0",
        ],
    ];
    for (depth, expected) in minus.iter().enumerate() {
        let got = tree_level(Side::Minus, depth).map_err(|e| e.to_string())?;
        ensure(got.words == words(expected), || {
            format!("F- level {depth}: {:?}", got.words)
        })?;
    }
    let mut flagged = Vec::new();
    for (depth, expected) in plus.iter().enumerate() {
        let got = tree_level(Side::Plus, depth).map_err(|e| e.to_string())?;
        ensure(got.words.len() == expected.len(), || {
            format!("F+ level {depth} size")
        })?;
        for (g, e) in got.words.iter().zip(words(expected)) {
            match match_entry(g, &e) {
                EntryMatch::Identical => {}
                EntryMatch::SameClass if depth == 3 => flagged.push(format!("{e} ~ {g}")),
                m => return Err(format!("F+ level {depth}: {g} vs {e} is {m:?}")),
            }
        }
    }
    ensure(flagged == ["RLRRL0 ~ RLRLR0"], || {
        format!("flagged entries {flagged:?}")
    })?;
    let disc = plus_vs_minus(6).map_err(|e| e.to_string())?;
    ensure(disc.is_empty(), || {
        format!("F+ differs from m(F-): {disc:?}")
    })?;
    Ok(format!("flagged {}", flagged[0]))
}

fn trefoil_braid() -> Outcome {
    let orbit: PeriodicWord = "(LRRLR)".parse().unwrap();
    let b = lorenz_braid(std::slice::from_ref(&orbit)).map_err(|e| e.to_string())?;
    let genus = positive_braid_genus(&b).map_err(|e| e.to_string())?;
    let got = (
        b.n,
        b.perm.clone(),
        b.crossing_count(),
        genus,
        braid_index(&orbit),
        b.cycle_count(),
    );
    ensure(got == (5, vec![4, 5, 1, 2, 3], 6, 1, 2, 1), || {
        format!("{got:?}")
    })?;
    Ok(format!("perm {}", b.perm_string()))
}

fn family_params() -> Vec<(u8, u64, u64)> {
    let mut out = Vec::new();
    for fam in &FAMILIES {
        for k in 1..=3 {
            for n in 2..=9 {
                if fam.check_params(k, n).is_ok() {
                    out.push((fam.id, k, n));
                }
            }
        }
    }
    out
}

fn family_sweep() -> Outcome {
    let params = family_params();
    for &(id, k, n) in &params {
        let inst =
            family_instance(id, k, n).map_err(|e| format!("family {id} k={k} n={n}: {e}"))?;
        let cert = verify_instance(&inst).map_err(|e| e.to_string())?;
        let failed: Vec<&str> = cert.failed_clauses().collect();
        ensure(cert.issued, || {
            format!("family {id} k={k} n={n}: failed {failed:?}")
        })?;
        ensure(cert.kind == family(id).unwrap().kind, || {
            format!("family {id}: kind {}", cert.kind)
        })?;
        ensure(
            inst.report.verdict == Verdict::NontrivialPermutation,
            || format!("family {id}: verdict"),
        )?;
        ensure(inst.pair.is_admissible(), || {
            format!("family {id}: not admissible")
        })?;
    }
    Ok(format!("{} instances certified", params.len()))
}

fn primitive_classes(max_len: usize) -> Vec<PeriodicWord> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for len in 1..=max_len {
        for bits in 0u32..(1 << len) {
            let block: Vec<Letter> = (0..len)
                .map(|i| {
                    if bits >> i & 1 == 1 {
                        Letter::R
                    } else {
                        Letter::L
                    }
                })
                .collect();
            let class = PeriodicWord::new(block).unwrap();
            let key = (0..class.period())
                .map(|j| class.rotate(j).to_string())
                .min()
                .unwrap();
            if seen.insert(key) {
                out.push(class);
            }
        }
    }
    out
}

fn oracle_equivalence() -> Outcome {
    let classes = primitive_classes(14);
    for class in &classes {
        let word = Word::Periodic(class.clone());
        let balanced = is_evenly_distributed(&word);
        // the class of R has no L-maximal form; it is the root R0 of F+
        let in_tree = match canonical_l_maximal(class) {
            Ok(f) => in_minus_tree(&f),
            Err(_) => class.block() == [Letter::R],
        };
        let irreducible = factorize(&word).is_empty();
        ensure(balanced == in_tree && in_tree == irreducible, || {
            format!("{class}: balanced {balanced}, tree {in_tree}, irreducible {irreducible}")
        })?;
    }
    Ok(format!("{} classes", classes.len()))
}

fn neighbor_determinant() -> Outcome {
    let mut pairs = 0;
    for side in [Side::Minus, Side::Plus] {
        for level in tree_levels(side, 8).map_err(|e| e.to_string())? {
            ensure(level.words.len() == 1 << level.depth, || {
                format!("{side:?} level {} size", level.depth)
            })?;
            for (a, b) in level.adjacent_pairs() {
                pairs += 1;
                ensure(count_determinant(a, b) == 1, || format!("{a} {b}"))?;
            }
        }
    }
    Ok(format!("{pairs} adjacent pairs"))
}

fn torus_invariants() -> Outcome {
    let mut knots = 0;
    for q in 2..=12u64 {
        for p in 1..q {
            let Ok(w) = standard_torus_word(p, q) else {
                continue;
            };
            knots += 1;
            let orbit = w.cyclic_class().map_err(|e| e.to_string())?;
            let b = lorenz_braid(std::slice::from_ref(&orbit)).map_err(|e| e.to_string())?;
            let genus = positive_braid_genus(&b).map_err(|e| e.to_string())? as u64;
            let index = braid_index(&orbit) as u64;
            let got = (b.crossing_count() as u64, genus, index);
            ensure(got == (p * q, (p - 1) * (q - 1) / 2, p), || {
                format!("T({p},{q}): {got:?}")
            })?;
            // T(1, q) is the unknot for every q, so only p ≥ 2 determines q
            if p >= 2 {
                let m = torus_matches(index, genus, 12);
                ensure(m == [(p, q)], || format!("T({p},{q}) matches {m:?}"))?;
            }
        }
    }
    Ok(format!("{knots} torus words"))
}

fn count_homomorphism() -> Outcome {
    let sampler = FareySampler::new(6).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x1ace);
    let mut applicable = 0;
    for _ in 0..1000 {
        let pair = sampler.sample(&mut rng);
        let len = rng.gen_range(2..=8);
        let s: String = (0..len)
            .map(|_| if rng.gen_bool(0.5) { 'L' } else { 'R' })
            .collect();
        let s = FiniteWord::from_letters(&s).unwrap();
        let z = pair.star(&s).map_err(|e| e.to_string())?;
        let (cx, cy, cs, cz) = (pair.x.counts(), pair.y.counts(), s.counts(), z.counts());
        ensure(cz.n_l == cs.n_l * cx.n_l + cs.n_r * cy.n_l, || {
            format!("n_L of {z}")
        })?;
        ensure(cz.n_r == cs.n_l * cx.n_r + cs.n_r * cy.n_r, || {
            format!("n_R of {z}")
        })?;
        let report = classify_star(&pair, &s).map_err(|e| e.to_string())?;
        if report.is_applicable() {
            applicable += 1;
            let r = report.r.unwrap_or(0);
            ensure(1 < r && r + 1 < report.p, || {
                format!("{z}: r={r}, p={}", report.p)
            })?;
        }
    }
    Ok(format!("1000 products, {applicable} applicable"))
}

fn mirror_sweep() -> Outcome {
    let params = family_params();
    for &(id, k, n) in &params {
        let inst = family_instance(id, k, n).map_err(|e| e.to_string())?;
        let m = inst
            .mirror()
            .map_err(|e| format!("family {id} k={k} n={n}: {e}"))?;
        let (a, b) = (&inst.report, &m.report);
        ensure((a.p, a.q, a.r, a.k) == (b.p, b.q, b.r, b.k), || {
            format!(
                "family {id} k={k} n={n}: {:?} vs {:?}",
                (a.p, a.q, a.r),
                (b.p, b.q, b.r)
            )
        })?;
        ensure(
            trip_number(&Word::Finite(m.product.clone()))
                == trip_number(&Word::Finite(inst.product.clone())),
            || format!("family {id} k={k} n={n}: trip numbers differ"),
        )?;
    }
    Ok(format!("{} mirrors", params.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("tree reproduction", 1, tree_reproduction),
        ("trefoil braid", 1, trefoil_braid),
        ("family sweep", 30, family_sweep),
        (
            "balance, tree and irreducibility agree",
            60,
            oracle_equivalence,
        ),
        (
            "neighbour determinant and level sizes",
            5,
            neighbor_determinant,
        ),
        ("torus invariants", 5, torus_invariants),
        ("count homomorphism and r range", 10, count_homomorphism),
        ("mirror symmetry", 10, mirror_sweep),
    ];
    let mut failures = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(*limit) => {
                Err(format!("{detail}, but took longer than {limit} s"))
            }
            other => other,
        };
        let secs = elapsed.as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} ({secs:.3} s)", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {} {name}: {why} ({secs:.3} s)", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
