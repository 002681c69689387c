use std::cmp::Ordering;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use lorenz_core::braids::{
    artin_string, braid_index, emit_braid_word, lorenz_braid, positive_braid_genus, torus_matches,
};
use lorenz_core::families::{
    family, family_instance, verify_instance, Certificate, FamilyInstance, FAMILIES,
};
use lorenz_core::farey::{
    are_farey_neighbors, is_admissible, make_farey_pair, neighbor_depth, tree_levels, FareyPair,
    FareySampler, Side,
};
use lorenz_core::starprod::{classify_star, factorize, star_product, TorusPermutationReport};
use lorenz_core::words::{
    canonical_l_maximal, canonical_r_minimal, is_evenly_distributed, is_l_maximal, is_r_minimal,
    lex_compare, parse_word, shift, syllable_decomposition, syllable_permutation_class,
    trip_number, Counts,
};
use lorenz_core::{Error, FiniteWord, PeriodicWord, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::output::{CmdResult, Failure, Output, RunReport, Summary};
use crate::{
    FamilyCommand, InstanceArgs, PairCommand, SideArg, StarCommand, VerifyArgs, WordCommand,
};

fn word(text: &str) -> Result<Word, Failure> {
    let parsed = parse_word(text)?;
    if let Some(notice) = parsed.notice {
        eprintln!("note: {notice}");
    }
    Ok(parsed.word)
}

fn finite(text: &str) -> Result<FiniteWord, Failure> {
    match word(text)? {
        Word::Finite(f) => Ok(f),
        Word::Periodic(p) => Err(Failure(format!(
            "{p} is periodic; a finite word like LR0 is needed here"
        ))),
    }
}

fn orbit(text: &str) -> Result<PeriodicWord, Failure> {
    Ok(word(text)?.cyclic_class()?)
}

pub fn cmd_tree(side: SideArg, depth: usize, all: bool) -> CmdResult {
    let side = match side {
        SideArg::Minus => Side::Minus,
        SideArg::Plus => Side::Plus,
    };
    let mut levels = tree_levels(side, depth)?;
    if !all {
        levels.drain(..depth);
    }
    let mut text = String::new();
    let mut entries = Vec::new();
    for level in &levels {
        for (index, w) in level.words.iter().enumerate() {
            writeln!(text, "{}\t{index}\t{w}", level.depth).unwrap();
            entries.push(TreeEntry {
                depth: level.depth,
                index,
                word: w.clone(),
                counts: w.counts(),
            });
        }
    }
    Ok(Output::new(
        text,
        &json!({ "side": side, "entries": entries }),
    ))
}

#[derive(Serialize)]
struct TreeEntry {
    depth: usize,
    index: usize,
    word: FiniteWord,
    counts: Counts,
}

#[derive(Serialize)]
struct WordReport {
    word: Word,
    kind: &'static str,
    length: usize,
    n_l: usize,
    n_r: usize,
    l_maximal: bool,
    r_minimal: bool,
    canonical_l_maximal: Option<FiniteWord>,
    canonical_r_minimal: Option<FiniteWord>,
    syllables: Vec<String>,
    trip_number: usize,
    evenly_distributed: bool,
    torus_permutation_of: Option<(u64, u64)>,
}

fn word_report(text: &str) -> Result<WordReport, Failure> {
    let w = word(text)?;
    let class = w.cyclic_class()?;
    let Counts { n_l, n_r } = lorenz_core::words::counts(&w);
    Ok(WordReport {
        kind: if w.is_finite() { "finite" } else { "periodic" },
        length: w.len(),
        n_l,
        n_r,
        l_maximal: is_l_maximal(&w),
        r_minimal: is_r_minimal(&w),
        canonical_l_maximal: canonical_l_maximal(&class).ok(),
        canonical_r_minimal: canonical_r_minimal(&class).ok(),
        syllables: syllable_decomposition(&w)?
            .syllables
            .iter()
            .map(|s| s.to_string())
            .collect(),
        trip_number: trip_number(&w),
        evenly_distributed: is_evenly_distributed(&w),
        torus_permutation_of: syllable_permutation_class(&w),
        word: w,
    })
}

fn canonical_lines(r: &WordReport) -> String {
    let opt = |w: &Option<FiniteWord>| w.as_ref().map_or("none".to_string(), |w| w.to_string());
    format!(
        "L-maximal: {}, R-minimal: {}\nL-maximal form: {}\nR-minimal form: {}\n",
        r.l_maximal,
        r.r_minimal,
        opt(&r.canonical_l_maximal),
        opt(&r.canonical_r_minimal)
    )
}

fn trip_lines(r: &WordReport) -> String {
    format!(
        "syllables: {}\ntrip number: {}\n",
        r.syllables.join(" "),
        r.trip_number
    )
}

fn balance_lines(r: &WordReport) -> String {
    let class = match r.torus_permutation_of {
        Some((p, q)) => format!("syllable permutation of W({p},{q})"),
        None => "not a syllable permutation of a standard word".to_string(),
    };
    format!("evenly distributed: {}\n{class}\n", r.evenly_distributed)
}

pub fn cmd_word(cmd: WordCommand) -> CmdResult {
    match cmd {
        WordCommand::Show { word: text } => {
            let r = word_report(&text)?;
            let text = format!(
                "word: {} ({})\nlength: {} (n_L {}, n_R {})\n{}{}{}",
                r.word,
                r.kind,
                r.length,
                r.n_l,
                r.n_r,
                canonical_lines(&r),
                trip_lines(&r),
                balance_lines(&r)
            );
            Ok(Output::new(text, &r))
        }
        WordCommand::Canonicalize { word: text } => {
            let r = word_report(&text)?;
            let body = json!({
                "word": r.word,
                "l_maximal": r.l_maximal,
                "r_minimal": r.r_minimal,
                "canonical_l_maximal": r.canonical_l_maximal,
                "canonical_r_minimal": r.canonical_r_minimal,
            });
            Ok(Output::new(canonical_lines(&r), &body))
        }
        WordCommand::Trip { word: text } => {
            let r = word_report(&text)?;
            let body =
                json!({ "word": r.word, "syllables": r.syllables, "trip_number": r.trip_number });
            Ok(Output::new(trip_lines(&r), &body))
        }
        WordCommand::Balance { word: text } => {
            let r = word_report(&text)?;
            let body = json!({
                "word": r.word,
                "evenly_distributed": r.evenly_distributed,
                "torus_permutation_of": r.torus_permutation_of,
            });
            Ok(Output::new(balance_lines(&r), &body))
        }
        WordCommand::Compare { a, b } => {
            let (a, b) = (word(&a)?, word(&b)?);
            let sign = match lex_compare(&a, &b) {
                Ordering::Less => "<",
                Ordering::Equal => "=",
                Ordering::Greater => ">",
            };
            let text = format!("{a} {sign} {b}\n");
            Ok(Output::new(text, &json!({ "a": a, "b": b, "order": sign })))
        }
        WordCommand::Shift { word: text, k } => {
            let w = word(&text)?;
            let s = shift(&w, k)?;
            Ok(Output::new(
                format!("{s}\n"),
                &json!({ "word": w, "k": k, "shift": s }),
            ))
        }
    }
}

pub fn cmd_pair(cmd: PairCommand) -> CmdResult {
    match cmd {
        PairCommand::Neighbors { a, b } => {
            let (a, b) = (finite(&a)?, finite(&b)?);
            let neighbors = are_farey_neighbors(&a, &b)?;
            let depth = neighbor_depth(&a, &b);
            let text = match depth {
                Some(d) => format!("{a} and {b} are Farey neighbours from level {d}\n"),
                None => format!("{a} and {b} are not Farey neighbours\n"),
            };
            Ok(Output::new(
                text,
                &json!({ "a": a, "b": b, "neighbors": neighbors, "level": depth }),
            ))
        }
        PairCommand::Make { x, s } => {
            let pair = make_farey_pair(&finite(&x)?, &finite(&s)?)?;
            let text = format!("X = {}\nY = {} = m({})\n", pair.x, pair.y, pair.s_parent);
            Ok(Output::new(text, &pair))
        }
        PairCommand::Admissible { x, y } => {
            let (x, y) = (word(&x)?, word(&y)?);
            let ok = is_admissible(&x, &y);
            let text = format!("({x}, {y}) is {}admissible\n", if ok { "" } else { "not " });
            Ok(Output::new(
                text,
                &json!({ "x": x, "y": y, "admissible": ok }),
            ))
        }
    }
}

fn render_report(r: &TorusPermutationReport) -> String {
    let opt = |v: Option<u64>| v.map_or("-".to_string(), |v| v.to_string());
    let mut text = String::new();
    writeln!(
        text,
        "(X, Y) * S = ({}, {}) * {} = {}",
        r.x, r.y, r.s, r.product
    )
    .unwrap();
    writeln!(text, "X: p1={} q1={} r1={}", r.p1, r.q1, opt(r.r1)).unwrap();
    writeln!(text, "Y: p2={} q2={} r2={}", r.p2, r.q2, opt(r.r2)).unwrap();
    writeln!(text, "p={} q={} k={} r={}", r.p, r.q, opt(r.k), opt(r.r)).unwrap();
    writeln!(text, "verdict: {}", r.verdict).unwrap();
    if let Some(reason) = r.reason {
        writeln!(
            text,
            "reason: {}",
            serde_json::to_value(reason).unwrap().as_str().unwrap()
        )
        .unwrap();
    }
    if let Some(kind) = r.certificate {
        writeln!(text, "shape: {kind}").unwrap();
    }
    let f = r.flags;
    writeln!(
        text,
        "p odd: {}, p > 4: {}, 3 does not divide p: {}",
        f.p_odd, f.p_greater_than_4, f.p_not_multiple_of_3
    )
    .unwrap();
    text
}

#[derive(Serialize)]
struct SweepCase {
    index: usize,
    x: FiniteWord,
    y: FiniteWord,
    s: FiniteWord,
    product: FiniteWord,
    applicable: bool,
    r: Option<u64>,
    passed: bool,
}

pub fn cmd_star(cmd: StarCommand) -> CmdResult {
    match cmd {
        StarCommand::Product { x, y, s } => {
            let z = star_product(&finite(&x)?, &finite(&y)?, &finite(&s)?)?;
            Ok(Output::new(format!("{z}\n"), &json!({ "product": z })))
        }
        StarCommand::Factorize { word: text } => {
            let w = word(&text)?;
            let fs = factorize(&w);
            let mut text = String::new();
            if fs.is_empty() {
                writeln!(text, "{w} is irreducible").unwrap();
            }
            for f in &fs {
                writeln!(text, "({}, {}) * {}", f.x, f.y, f.s).unwrap();
            }
            Ok(Output::new(
                text,
                &json!({ "word": w, "factorizations": fs }),
            ))
        }
        StarCommand::Classify { x, y, s } => {
            let pair = FareyPair::from_words(&finite(&x)?, &finite(&y)?)?;
            let report = classify_star(&pair, &finite(&s)?)?;
            Ok(Output::new(render_report(&report), &report))
        }
        StarCommand::Sweep { seed, count, depth } => {
            let sampler = FareySampler::new(depth)?;
            if sampler.is_empty() {
                return Err(Failure(format!("no Farey pairs up to depth {depth}")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut results = Vec::with_capacity(count);
            let mut summary = Summary::default();
            for index in 0..count {
                let pair = sampler.sample(&mut rng);
                let len = rng.gen_range(2..=8);
                let s: String = (0..len)
                    .map(|_| if rng.gen_bool(0.5) { 'L' } else { 'R' })
                    .collect();
                let s = FiniteWord::from_letters(&s)?;
                let report = classify_star(&pair, &s)?;
                let (cx, cy, cs, cz) = (
                    pair.x.counts(),
                    pair.y.counts(),
                    s.counts(),
                    report.product.counts(),
                );
                let counts_ok = cz.n_l == cs.n_l * cx.n_l + cs.n_r * cy.n_l
                    && cz.n_r == cs.n_l * cx.n_r + cs.n_r * cy.n_r;
                let range_ok =
                    !report.is_applicable() || report.r.is_some_and(|r| 1 < r && r + 1 < report.p);
                let passed = counts_ok && range_ok;
                if passed {
                    summary.passed += 1;
                } else {
                    summary.failed += 1;
                }
                results.push(SweepCase {
                    index,
                    applicable: report.is_applicable(),
                    r: report.r,
                    x: pair.x,
                    y: pair.y,
                    s,
                    product: report.product,
                    passed,
                });
            }
            let applicable = results.iter().filter(|c| c.applicable).count();
            let mut text = String::new();
            for c in results.iter().filter(|c| !c.passed) {
                writeln!(
                    text,
                    "FAIL #{}: ({}, {}) * {} = {}",
                    c.index, c.x, c.y, c.s, c.product
                )
                .unwrap();
            }
            writeln!(
                text,
                "{} products, {} applicable: {} passed, {} failed",
                count, applicable, summary.passed, summary.failed
            )
            .unwrap();
            let ok = summary.failed == 0;
            Ok(Output::new(text, &RunReport { results, summary }).checked(ok))
        }
    }
}

#[derive(Serialize)]
struct BraidReport {
    orbits: Vec<PeriodicWord>,
    strands: usize,
    permutation: Vec<usize>,
    crossings: usize,
    components: usize,
    cycles: Vec<Vec<usize>>,
    simple: bool,
    artin_word: String,
    genus: Option<usize>,
    braid_index: Option<usize>,
    torus_candidates: Vec<(u64, u64)>,
}

pub fn cmd_braid(texts: &[String], q_bound: u64) -> CmdResult {
    let orbits = texts
        .iter()
        .map(|t| orbit(t))
        .collect::<Result<Vec<_>, _>>()?;
    let b = lorenz_braid(&orbits)?;
    let genus = match positive_braid_genus(&b) {
        Ok(g) => Some(g),
        Err(Error::NotAKnot(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let index = (orbits.len() == 1).then(|| braid_index(&orbits[0]));
    let torus_candidates = match (index, genus) {
        (Some(i), Some(g)) => torus_matches(i as u64, g as u64, q_bound),
        _ => Vec::new(),
    };
    let report = BraidReport {
        strands: b.n,
        permutation: b.perm.clone(),
        crossings: b.crossing_count(),
        components: b.cycle_count(),
        cycles: b.cycles(),
        simple: b.is_simple_lorenz(),
        artin_word: artin_string(&emit_braid_word(&b)),
        genus,
        braid_index: index,
        torus_candidates,
        orbits: b.source_words.clone(),
    };
    let mut text = String::new();
    writeln!(text, "strands: {}", report.strands).unwrap();
    writeln!(text, "permutation: {}", b.perm_string()).unwrap();
    writeln!(text, "crossings: {}", report.crossings).unwrap();
    writeln!(text, "components: {}", report.components).unwrap();
    if let Some(g) = genus {
        writeln!(text, "genus: {g}").unwrap();
    }
    if let Some(i) = index {
        writeln!(text, "braid index: {i}").unwrap();
    }
    writeln!(text, "artin word: {}", report.artin_word).unwrap();
    for (p, q) in &report.torus_candidates {
        writeln!(text, "same invariants as T({p},{q})").unwrap();
    }
    Ok(Output::new(text, &report))
}

fn instance(args: &InstanceArgs) -> Result<FamilyInstance, Failure> {
    let inst = family_instance(args.id, args.k, args.n)?;
    Ok(if args.mirror { inst.mirror()? } else { inst })
}

fn render_certificate(c: &Certificate) -> String {
    let mut text = String::new();
    let mirrored = if c.mirrored { " (mirror)" } else { "" };
    writeln!(
        text,
        "family {} k={} n={}{}: T({}, {}) shape {}",
        c.family_id, c.k, c.n, mirrored, c.p, c.q, c.kind
    )
    .unwrap();
    for clause in &c.clauses {
        writeln!(
            text,
            "  [{}] {}",
            if clause.passed { "x" } else { " " },
            clause.clause
        )
        .unwrap();
    }
    let verdict = if c.issued {
        "issued, conditional on Morton's conjecture"
    } else {
        "not issued"
    };
    writeln!(text, "certificate {verdict}").unwrap();
    text
}

fn render_instance(inst: &FamilyInstance) -> String {
    let mut text = String::new();
    let mirrored = if inst.mirrored { " (mirror)" } else { "" };
    writeln!(
        text,
        "family {} k={} n={}{mirrored}",
        inst.family_id, inst.k, inst.n
    )
    .unwrap();
    writeln!(text, "X = {}", inst.pair.x).unwrap();
    writeln!(text, "Y = {} = m({})", inst.pair.y, inst.pair.s_parent).unwrap();
    writeln!(text, "S = {}", inst.s).unwrap();
    text.push_str(&render_report(&inst.report));
    text
}

pub fn cmd_family(cmd: FamilyCommand) -> CmdResult {
    match cmd {
        FamilyCommand::Generate(args) => {
            let inst = instance(&args)?;
            Ok(Output::new(render_instance(&inst), &inst))
        }
        FamilyCommand::Mirror(args) => {
            let inst = instance(&args)?.mirror()?;
            Ok(Output::new(render_instance(&inst), &inst))
        }
        FamilyCommand::Verify(args) => {
            let cert = verify_instance(&instance(&args)?)?;
            let ok = cert.issued;
            Ok(Output::new(render_certificate(&cert), &cert).checked(ok))
        }
    }
}

pub fn parse_range(text: &str, name: &str) -> Result<RangeInclusive<u64>, Failure> {
    let bad = || {
        Failure(format!(
            "--{name} expects a value like 3 or 1..3, got {text:?}"
        ))
    };
    let num = |s: &str| s.trim().parse::<u64>().map_err(|_| bad());
    let range = match text.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
        None => num(text)?..=num(text)?,
    };
    if range.is_empty() {
        return Err(bad());
    }
    Ok(range)
}

fn parse_families(text: &str) -> Result<Vec<u8>, Failure> {
    if text == "all" {
        return Ok(FAMILIES.iter().map(|f| f.id).collect());
    }
    let mut ids = Vec::new();
    for part in text.split(',') {
        let id: u8 = part
            .trim()
            .parse()
            .map_err(|_| Failure(format!("unknown family {part:?}")))?;
        family(id)?;
        if !ids.contains(&id) {
            ids.push(id);
        }
    }
    ids.sort();
    Ok(ids)
}

#[derive(Serialize)]
struct VerifyEntry {
    family: u8,
    k: u64,
    n: u64,
    mirrored: bool,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Certificate>,
}

pub fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    let ids = parse_families(&args.families)?;
    let ks = parse_range(&args.k, "k")?;
    let ns = parse_range(&args.n, "n")?;
    if *ks.start() == 0 {
        return Err(Failure("k > 0 required".into()));
    }
    if *ns.start() < 2 {
        return Err(Failure("n > 1 required".into()));
    }

    let mut results = Vec::new();
    let mut summary = Summary::default();
    for &id in &ids {
        for k in ks.clone() {
            for n in ns.clone() {
                let entry = |mirrored, status, reason, certificate| VerifyEntry {
                    family: id,
                    k,
                    n,
                    mirrored,
                    status,
                    reason,
                    certificate,
                };
                if let Err(e) = family(id)?.check_params(k, n) {
                    summary.skipped += 1;
                    results.push(entry(false, "skipped", Some(clause(&e)), None));
                    continue;
                }
                let inst = family_instance(id, k, n)?;
                let mut todo = vec![inst.clone()];
                if args.mirrors {
                    todo.push(inst.mirror()?);
                }
                for inst in todo {
                    let cert = verify_instance(&inst)?;
                    let (status, reason) = if cert.issued {
                        summary.passed += 1;
                        ("passed", None)
                    } else {
                        summary.failed += 1;
                        let failed: Vec<&str> = cert.failed_clauses().collect();
                        ("failed", Some(failed.join(", ")))
                    };
                    results.push(entry(inst.mirrored, status, reason, Some(cert)));
                }
            }
        }
    }

    let mut text = String::new();
    for e in &results {
        let mirrored = if e.mirrored { " mirror" } else { "" };
        let detail = match (&e.certificate, &e.reason) {
            (Some(c), None) => format!("T({}, {}) {}", c.p, c.q, c.kind),
            (_, Some(reason)) => reason.clone(),
            (None, None) => String::new(),
        };
        writeln!(
            text,
            "{:<7} family {:>2} k={} n={}{mirrored}: {detail}",
            e.status, e.family, e.k, e.n
        )
        .unwrap();
    }
    writeln!(
        text,
        "{} passed, {} failed, {} skipped",
        summary.passed, summary.failed, summary.skipped
    )
    .unwrap();
    let ok = summary.failed == 0;
    Ok(Output::new(text, &RunReport { results, summary }).checked(ok))
}

fn clause(e: &Error) -> String {
    match e {
        Error::FamilyConstraint { clause, .. } => clause.clone(),
        e => e.to_string(),
    }
}
