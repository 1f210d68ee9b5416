//! Acceptance suite: one PASS/FAIL/SKIP line per criterion, each under its
//! time budget.
//!
//! `STRONGREAL_EXTENDED=1` adds the A10 run; `STRONGREAL_J1=<file>` points at
//! permutation generators for J1 (degree 266) and enables that criterion.

use std::collections::HashMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};

use strongreal::classifier::{classify, classify_str, Outcome, SimpleGroupName};
use strongreal::constructions::{build_alternating, build_classical, load_permutation_group, ClassicalFamily};
use strongreal::groups::{Group, GroupElement, DEFAULT_CAP};
use strongreal::paperchecks::{check_klein_four, check_sl3_case, check_su3_case, check_unipotent_parametrization};
use strongreal::reality::{group_strong_reality, is_strongly_real, jordan_decomposition, two_involution_factorization};

type Outcome_ = Result<String, String>;

struct Groups {
    cache: HashMap<String, Group>,
}

impl Groups {
    fn get(&mut self, key: &str) -> &Group {
        if !self.cache.contains_key(key) {
            let g = build(key);
            self.cache.insert(key.to_string(), g);
        }
        &self.cache[key]
    }
}

fn build(key: &str) -> Group {
    use ClassicalFamily::*;
    let (fam, rest) = key.split_once('(').expect("spec");
    let arg: u64 = rest.trim_end_matches(')').parse().expect("parameter");
    let family = match fam {
        "A" => return build_alternating(arg as usize, DEFAULT_CAP).expect("alternating"),
        "PSL2" => PSL2,
        "PGL2" => PGL2,
        "SL2" => SL2,
        "PSL3" => PSL3,
        "PSp4" => PSp4,
        "PSU3" => return strongreal::constructions::GroupSpec::Classical { family: PSU3, q: arg }
            .build(DEFAULT_CAP)
            .expect("PSU3"),
        other => panic!("no builder for {other}"),
    };
    build_classical(family, arg, DEFAULT_CAP).expect("classical")
}

fn workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Brute force and classifier must both give `expected`.
fn agree(groups: &mut Groups, key: &str, name: &str, expected: bool) -> Result<(), String> {
    let g = groups.get(key);
    let brute = group_strong_reality(g, key, workers()).strongly_real;
    let verdict = classify_str(name).map_err(|e| e.to_string())?;
    let classified = verdict.strongly_real();
    if brute != expected || classified != Some(expected) {
        return Err(format!("{key}: brute force {brute}, classifier {classified:?}, expected {expected}"));
    }
    Ok(())
}

fn psl2_cases(groups: &mut Groups) -> Outcome_ {
    let qs = [4, 5, 7, 8, 9, 11, 13];
    for q in qs {
        agree(groups, &format!("PSL2({q})"), &format!("PSL(2,{q})"), q % 4 != 3)?;
    }
    Ok(format!("PSL2(q) strongly real iff q mod 4 != 3 for q in {qs:?}"))
}

fn pgl2_cases(groups: &mut Groups) -> Outcome_ {
    let qs = [3, 5, 7, 9, 11];
    for q in qs {
        let key = format!("PGL2({q})");
        if !group_strong_reality(groups.get(&key), &key, workers()).strongly_real {
            return Err(format!("{key} not strongly real"));
        }
    }
    Ok(format!("PGL2(q) strongly real for q in {qs:?}"))
}

fn psp4_3(groups: &mut Groups) -> Outcome_ {
    let g = groups.get("PSp4(3)");
    if g.order() != 25920 {
        return Err(format!("|PSp4(3)| = {}", g.order()));
    }
    let brute = group_strong_reality(g, "PSp4(3)", workers());
    let verdict = classify(SimpleGroupName::Psp { dim: 4, q: 3 });
    let consistent = verdict.strongly_real() == Some(brute.strongly_real);
    if brute.strongly_real || verdict.outcome != Outcome::NotStronglyReal || !consistent {
        return Err(format!("brute force {}, classifier {:?}", brute.strongly_real, verdict.outcome));
    }
    let failing = brute.failing_classes().count();
    Ok(format!("PSp4(3) not strongly real ({failing} failing classes), classifier agrees"))
}

fn off_list(groups: &mut Groups) -> Outcome_ {
    agree(groups, "PSL3(2)", "PSL(3,2)", false)?;
    agree(groups, "PSU3(3)", "PSU(3,3)", false)?;
    let (a, b) = (groups.get("PSL3(2)").order(), groups.get("PSU3(3)").order());
    if (a, b) != (168, 6048) {
        return Err(format!("orders {a}, {b}"));
    }
    Ok("PSL3(2) and PSU3(3) not strongly real, classifier agrees".into())
}

fn alternating(groups: &mut Groups) -> Outcome_ {
    agree(groups, "A(5)", "A(5)", true)?;
    agree(groups, "A(6)", "A(6)", true)?;
    agree(groups, "A(7)", "A(7)", false)?;
    for (n, q) in [("A(5)", 4), ("A(6)", 9)] {
        let v = classify_str(n).map_err(|e| e.to_string())?;
        if v.normalized != Some(SimpleGroupName::Psp { dim: 2, q }) || v.outcome.item() != Some(1) {
            return Err(format!("{n} normalized to {:?}", v.normalized));
        }
    }
    Ok("A5, A6 strongly real via PSL2(4), PSL2(9); A7 not".into())
}

fn alternating_10() -> Outcome_ {
    let g = build_alternating(10, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let brute = group_strong_reality(&g, "A(10)", workers()).strongly_real;
    let verdict = classify_str("A(10)").map_err(|e| e.to_string())?;
    if !brute || verdict.outcome.item() != Some(8) {
        return Err(format!("brute force {brute}, classifier {:?}", verdict.outcome));
    }
    Ok(format!("A10 (order {}) strongly real, item (8)", g.order()))
}

fn identity_checks() -> Outcome_ {
    let odd = [3, 5, 7, 9, 11, 13];
    let mut cases = 0;
    for q in odd {
        for r in [check_sl3_case(q), check_su3_case(q)] {
            let r = r.map_err(|e| e.to_string())?;
            if !r.passed {
                return Err(format!("{} q={q}: {:?}", r.check, r.failures.first()));
            }
            cases += r.cases;
        }
    }
    for q in [2, 3, 4, 5] {
        let r = check_unipotent_parametrization(q).map_err(|e| e.to_string())?;
        if !r.passed {
            return Err(format!("param q={q}: {:?}", r.failures.first()));
        }
        cases += r.cases;
    }
    Ok(format!("sl3/su3 for odd q <= 13 and parametrization for q in 2..=5, {cases} cases, 0 failures"))
}

fn is_involution(x: &GroupElement) -> bool {
    !x.is_identity() && x.mul(x).is_identity()
}

const ALL_GROUPS: [&str; 19] = [
    "SL2(5)", "PSL2(4)", "PSL2(5)", "PSL2(7)", "PSL2(8)", "PSL2(9)", "PSL2(11)", "PSL2(13)",
    "PGL2(3)", "PGL2(5)", "PGL2(7)", "PGL2(9)", "PGL2(11)", "PSL3(2)", "PSU3(3)", "PSp4(3)",
    "A(5)", "A(6)", "A(7)",
];

fn equivalence(groups: &mut Groups) -> Outcome_ {
    let mut checked = 0;
    for key in ALL_GROUPS {
        let g = groups.get(key);
        let invs = g.involutions();
        for class in g.conjugacy_classes() {
            let x = &class.representative;
            if g.element_order(class.rep_index) <= 2 {
                continue;
            }
            let strong = is_strongly_real(g, x).map_err(|e| e.to_string())?.is_some();
            let pair = two_involution_factorization(g, x).map_err(|e| e.to_string())?;
            // oracle: x = s t with s, t involutions iff s x is an involution for some involution s
            let oracle = invs.iter().any(|s| is_involution(&s.mul(x)));
            if strong != pair.is_some() || oracle != strong {
                return Err(format!("{key}, x={}: strong {strong}, pair {}, oracle {oracle}", x.to_text(), pair.is_some()));
            }
            if let Some((s, t)) = pair {
                if !(is_involution(&s) && is_involution(&t) && s.mul(&t) == *x) {
                    return Err(format!("{key}: pair for {} does not re-verify", x.to_text()));
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} classes of order > 2 across {} groups", ALL_GROUPS.len()))
}

fn klein_four(groups: &mut Groups) -> Outcome_ {
    let keys = [
        "A(5)", "A(6)", "A(7)", "PSL2(5)", "PSL2(7)", "PSL2(9)", "PSL2(11)", "PSL2(13)", "PSp4(3)", "PSU3(3)",
    ];
    let mut involutions = 0;
    for key in keys {
        let r = check_klein_four(groups.get(key));
        if !r.passed || r.cases == 0 {
            return Err(format!("{key}: {} of {} involutions lack a partner", r.failures.len(), r.cases));
        }
        involutions += r.cases;
    }
    Ok(format!("{involutions} involutions across {} groups all have a commuting partner", keys.len()))
}

fn p_part_only(n: u64, p: u64) -> bool {
    let mut n = n;
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Checks the returned pair against every factorization inside `<x>`.
fn jordan_ok(g: &Group, x: &GroupElement, p: u64) -> Result<(), String> {
    let jp = jordan_decomposition(g, x, p).map_err(|e| e.to_string())?;
    let (s, u) = (&jp.semisimple, &jp.unipotent);
    if s.mul(u) != *x || !s.commutes_with(u) || s.order() % p == 0 || !p_part_only(u.order(), p) {
        return Err(format!("bad pair for {}", x.to_text()));
    }
    let n = x.order();
    let powers: Vec<GroupElement> = (0..n).map(|k| x.pow(k)).collect();
    let mut found = Vec::new();
    for a in &powers {
        if a.order() % p == 0 {
            continue;
        }
        for b in &powers {
            if p_part_only(b.order(), p) && a.mul(b) == *x && a.commutes_with(b) {
                found.push((a, b));
            }
        }
    }
    if found.len() != 1 || found[0] != (s, u) {
        return Err(format!("{} factorizations in <x> for {}", found.len(), x.to_text()));
    }
    Ok(())
}

fn jordan(groups: &mut Groups) -> Outcome_ {
    let sl = groups.get("SL2(5)");
    for x in sl.elements() {
        jordan_ok(sl, x, 5)?;
    }
    let n_sl = sl.order();
    let psp = groups.get("PSp4(3)");
    let mut rng = rand::rngs::StdRng::seed_from_u64(20260);
    for _ in 0..200 {
        let x = psp.element(rng.gen_range(0..psp.order()));
        jordan_ok(psp, x, 3)?;
    }
    Ok(format!("all {n_sl} elements of SL2(5) and 200 sampled elements of PSp4(3)"))
}

fn classifier_table() -> Outcome_ {
    use Outcome::*;
    let sr = |item| StronglyReal { item };
    let table: &[(&str, Outcome)] = &[
        ("PSp(2,5)", sr(1)), ("PSp(6,9)", sr(1)), ("PSp(4,8)", sr(1)),
        ("PSp(4,3)", NotStronglyReal), ("PSp(2,11)", NotStronglyReal),
        ("Omega(7,5)", sr(2)), ("Omega(9,5)", sr(2)),
        ("Omega(7,3)", NotStronglyReal), ("Omega(11,3)", NotStronglyReal),
        ("Omega(5,5)", sr(1)), ("Omega(5,7)", NotStronglyReal),
        ("Omega(9,3)", sr(3)), ("Omega(9,7)", sr(3)), ("Omega(13,7)", NotStronglyReal),
        ("POmega-(8,3)", sr(4)), ("POmega-(12,7)", sr(4)),
        ("POmega-(4,3)", sr(1)), ("POmega-(10,3)", NotStronglyReal),
        ("POmega+(12,5)", sr(5)), ("POmega+(12,4)", sr(5)),
        ("POmega+(12,3)", NotStronglyReal), ("POmega+(16,7)", NotStronglyReal),
        ("POmega+(8,3)", sr(6)), ("POmega+(8,5)", sr(6)), ("POmega+(10,5)", NotStronglyReal),
        ("3D4(2)", sr(7)), ("3D4(3)", sr(7)),
        ("A(10)", sr(8)), ("A(14)", sr(8)), ("J1", sr(8)), ("J2", sr(8)),
        ("A(12)", NotStronglyReal), ("J3", NotStronglyReal),
        ("A(5)", sr(1)), ("A(6)", sr(1)), ("A(7)", NotStronglyReal),
        ("PSL(3,2)", NotStronglyReal), ("PSU(3,3)", NotStronglyReal),
        ("PSL(2,2)", NotSimple), ("A(4)", NotSimple), ("Foo(3)", UnknownName),
    ];
    for (name, expected) in table {
        let got = classify_str(name).map_err(|e| e.to_string())?.outcome;
        if got != *expected {
            return Err(format!("{name}: got {got:?}, expected {expected:?}"));
        }
    }
    Ok(format!("{} verdicts match the list's side conditions", table.len()))
}

fn j1(path: PathBuf) -> Outcome_ {
    let g = load_permutation_group(&path, DEFAULT_CAP).map_err(|e| e.to_string())?;
    if g.order() != 175_560 {
        return Err(format!("generators give order {}, expected 175560", g.order()));
    }
    let brute = group_strong_reality(&g, "J1", workers()).strongly_real;
    let item = classify_str("J1").map_err(|e| e.to_string())?.outcome.item();
    if !brute || item != Some(8) {
        return Err(format!("brute force {brute}, classifier item {item:?}"));
    }
    Ok("J1 strongly real, item (8)".into())
}

fn strip_header(report: &str) -> String {
    report
        .lines()
        .filter(|l| !["  \"elapsed_ms\"", "  \"workers\"", "  \"body_sha256\""].iter().any(|h| l.starts_with(h)))
        .collect::<Vec<_>>()
        .join("\n")
}

fn determinism() -> Outcome_ {
    let run = |w: &str| {
        let mut out = Vec::new();
        let status = strongreal_cli::run(["strongreal", "verify", "PSL2(7)", "--workers", w], &mut out, &mut Vec::new());
        (status, String::from_utf8(out).expect("utf8"))
    };
    let (s1, a) = run("1");
    let (s8, b) = run("8");
    if (s1, s8) != (0, 0) {
        return Err(format!("exit statuses {s1}, {s8}"));
    }
    let (a, b) = (strip_header(&a), strip_header(&b));
    if a != b {
        return Err("report bodies differ between 1 and 8 workers".into());
    }
    if a.contains("elapsed_ms") || a.len() < 100 {
        return Err("header stripping failed".into());
    }
    Ok(format!("verify PSL2(7) bodies byte-identical for 1 and 8 workers ({} bytes)", a.len()))
}

struct Suite {
    failed: usize,
}

impl Suite {
    fn run(&mut self, id: &str, budget: Duration, f: impl FnOnce() -> Outcome_) {
        let start = Instant::now();
        let result = f();
        let elapsed = start.elapsed();
        let (status, detail) = match result {
            Ok(d) if elapsed <= budget => ("PASS", d),
            Ok(d) => ("FAIL", format!("over budget {budget:?}: {d}")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            self.failed += 1;
        }
        println!("criterion {id:<6} {status} {:>8.2}s  {detail}", elapsed.as_secs_f64());
    }

    fn skip(&self, id: &str, why: &str) {
        println!("criterion {id:<6} SKIP {:>8}   {why}", "-");
    }
}

fn main() -> ExitCode {
    let mut groups = Groups { cache: HashMap::new() };
    let mut suite = Suite { failed: 0 };
    let secs = Duration::from_secs;

    suite.run("1", secs(60), || psl2_cases(&mut groups));
    suite.run("2", secs(60), || pgl2_cases(&mut groups));
    suite.run("3", secs(15 * 60), || psp4_3(&mut groups));
    suite.run("4", secs(5 * 60), || off_list(&mut groups));
    suite.run("5", secs(2 * 60), || alternating(&mut groups));
    if std::env::var("STRONGREAL_EXTENDED").is_ok_and(|v| v == "1") {
        suite.run("5-ext", secs(2 * 3600), alternating_10);
    } else {
        suite.skip("5-ext", "A10 run needs STRONGREAL_EXTENDED=1");
    }
    suite.run("6", secs(30), identity_checks);
    suite.run("7", secs(10 * 60), || equivalence(&mut groups));
    suite.run("8", secs(5 * 60), || klein_four(&mut groups));
    suite.run("9", secs(60), || jordan(&mut groups));
    suite.run("10", secs(1), classifier_table);
    match std::env::var_os("STRONGREAL_J1") {
        Some(path) => suite.run("11", secs(3600), || j1(PathBuf::from(path))),
        None => suite.skip("11", "J1 generators not supplied (set STRONGREAL_J1)"),
    }
    suite.run("12", secs(60), determinism);

    if suite.failed > 0 {
        println!("{} criteria failed", suite.failed);
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
