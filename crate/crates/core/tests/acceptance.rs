//! Acceptance criteria 1-7, one pass/fail line each.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use alternant::demo::{
    self, bundled, Expect, BCH121, BCH31, GOPPA19, GOPPA76, GOPPA_BINARY, GRS32, PRS13, PRS31, PRS7,
};
use alternant::linalg::Vector;
use alternant::oracle::{brute_force_decode, min_distance, verify_structure, BruteForce, OracleBudget};
use alternant::pgz::{
    alt_error_evaluator, decode, error_evaluator, forney, forney_alt, rd_error_vector, syndrome_polynomial, Algorithm,
    DecodeReport,
};
use alternant::{AlternantCode, DecodeStatus};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

const DEMO_CODES: [(&str, &str); 7] = [
    ("prs13", PRS13),
    ("prs31", PRS31),
    ("bch31", BCH31),
    ("grs32", GRS32),
    ("bch121", BCH121),
    ("goppa19", GOPPA19),
    ("goppa76", GOPPA76),
];

fn demo_codes() -> Vec<(&'static str, AlternantCode)> {
    DEMO_CODES.iter().map(|&(name, s)| (name, bundled(s).unwrap())).collect()
}

fn random_codeword(code: &AlternantCode, rng: &mut ChaCha8Rng) -> Vector {
    let f = code.base_field();
    let msg = (0..code.dimension()).map(|_| f.element(rng.random_range(0..f.order())).unwrap()).collect();
    code.encode(&Vector::new(f, msg)).unwrap()
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    if elapsed <= limit {
        Ok(())
    } else {
        Err(format!("{what} took {elapsed:.2?}, limit {limit:?}"))
    }
}

fn golden() -> Outcome {
    let start = Instant::now();
    let cases = demo::cases();
    let outcomes = demo::run_all(&cases);
    let mut failed = String::new();
    for o in outcomes.iter().filter(|o| !o.passed()) {
        failed.push_str(&o.to_string());
    }
    if !failed.is_empty() {
        return Err(failed);
    }
    // every value named by the criterion is among the fixture checks
    let needed: [(&str, Expect); 16] = [
        ("prs13-one-error", Expect::Syndrome("[9, 1, 3, 9]")),
        ("prs13-one-error", Expect::Hankel("[[9, 1, 3], [1, 3, 9]]")),
        ("prs13-one-error", Expect::Locator("[10, 1]")),
        ("prs13-one-error", Expect::Evaluator("[9]")),
        ("prs13-one-error", Expect::Positions("[4]")),
        ("prs13-one-error", Expect::Values("[3]")),
        ("prs13-two-errors", Expect::Syndrome("[5, 7, 7, 3]")),
        ("prs13-two-errors", Expect::Locator("[2, 5, 1]")),
        ("prs13-two-errors", Expect::Evaluator("[5, 6]")),
        ("prs13-two-errors", Expect::Values("[3, 7]")),
        ("bch31", Expect::Positions("[5, 19, 28]")),
        ("grs32", Expect::Values("[a^5, 1, a^19]")),
        ("bch121", Expect::Values("[1, 1, 2, 2, 1]")),
        ("goppa19", Expect::Values("[1, 3, 4]")),
        ("goppa76", Expect::Positions("[10, 46, 56, 63, 67]")),
        ("goppa76", Expect::Values("[2, 2, 1, 1, 2]")),
    ];
    for (name, exp) in needed {
        let case = cases.iter().find(|c| c.name == name).ok_or(format!("missing case {name}"))?;
        if !case.expect.contains(&exp) {
            return Err(format!("{name} does not check {exp:?}"));
        }
    }
    let checks: usize = outcomes.iter().map(|o| o.checks.len()).sum();
    within(start.elapsed(), Duration::from_secs(10), "golden cases")?;
    Ok(format!("{} cases, {checks} checks", outcomes.len()))
}

fn dimensions() -> Outcome {
    let expected = [
        (BCH31, "bch31", 16, None),
        (BCH121, "bch121", 86, Some(35)),
        (GOPPA19, "goppa19", 7, Some(12)),
        (GOPPA76, "goppa76", 44, Some(32)),
    ];
    let mut shown = Vec::new();
    for (spec, name, k, rank) in expected {
        let c = bundled(spec).map_err(|e| e.to_string())?;
        if c.dimension() != k || c.n() - c.base_rank() != k {
            return Err(format!("{name}: k = {}, expected {k}", c.dimension()));
        }
        if let Some(r) = rank {
            if c.base_rank() != r {
                return Err(format!("{name}: rank blow(H,K) = {}, expected {r}", c.base_rank()));
            }
        }
        shown.push(format!("{name} k={k}"));
    }
    Ok(shown.join(", "))
}

/// Statistics shared by criteria 3 and 4.
#[derive(Default)]
struct CapacityStats {
    trials: usize,
    decodes: usize,
    structure_checked: usize,
    failures: Vec<String>,
    structure_failures: Vec<String>,
}

fn forney_agreement(code: &AlternantCode, rep: &DecodeReport, e: &Vector) -> Result<(), String> {
    let locator = rep.locator.as_ref().ok_or("no locator")?;
    let s = &rep.syndrome;
    let ltilde = locator.reciprocal();
    let ev = error_evaluator(&syndrome_polynomial(s), &ltilde, code.r());
    let alt = alt_error_evaluator(s, locator, code.r());
    let ext = code.ext_field();
    for &m in &rep.positions {
        let a = forney(code, m, &ev, &ltilde).ok_or("Forney denominator vanished")?;
        let b = forney_alt(code, m, &alt, locator).ok_or("alternative denominator vanished")?;
        let want = e.embed(ext).map_err(|x| x.to_string())?[m];
        if a != b || a != want {
            return Err(format!("position {m}: Forney {} alt {} error {}", ext.show(a), ext.show(b), ext.show(want)));
        }
    }
    Ok(())
}

fn capacity_suite() -> CapacityStats {
    let mut stats = CapacityStats::default();
    for (i, (name, code)) in demo_codes().into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0300 + i as u64);
        for w in 1..=code.t() {
            for trial in 0..200 {
                stats.trials += 1;
                let x = random_codeword(&code, &mut rng);
                let e = rd_error_vector(code.base_field(), code.n(), w, &mut rng);
                let y = x.add(&e).unwrap();
                let tag = format!("{name} w={w} trial {trial}");
                for alg in [Algorithm::Pgz, Algorithm::Pgzm] {
                    stats.decodes += 1;
                    let rep = decode(alg, &y, &code).unwrap();
                    if rep.status != DecodeStatus::Corrected || rep.corrected.as_ref() != Some(&x) {
                        stats.failures.push(format!("{tag}: {}", rep.summary_line()));
                        continue;
                    }
                    let s = rep.hankel.clone().expect("nonzero syndrome");
                    let rank = s.rank();
                    if rank != w || rep.errors != w {
                        stats.failures.push(format!("{tag}: rank {rank}, l = {}", rep.errors));
                    }
                    if alg == Algorithm::Pgz {
                        if let Err(msg) = forney_agreement(&code, &rep, &e) {
                            stats.failures.push(format!("{tag}: {msg}"));
                        }
                    }
                    stats.structure_checked += 1;
                    if !verify_structure(&s, &rep, &code) {
                        stats.structure_failures.push(tag.clone());
                    }
                }
            }
        }
    }
    stats
}

fn summarize(failures: &[String], ok: String) -> Outcome {
    match failures.first() {
        None => Ok(ok),
        Some(first) => Err(format!("{} failures, first: {first}", failures.len())),
    }
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let budget = OracleBudget::default();
    let mut trials = 0;
    for (seed, spec) in [(51u64, PRS13), (52, GOPPA19)] {
        let code = bundled(spec).map_err(|e| e.to_string())?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for w in 1..=code.t() {
            for trial in 0..100 {
                trials += 1;
                let x = random_codeword(&code, &mut rng);
                let e = rd_error_vector(code.base_field(), code.n(), w, &mut rng);
                let y = x.add(&e).unwrap();
                let oracle = brute_force_decode(&code, &y, code.t(), budget).map_err(|e| e.to_string())?;
                let rep = decode(Algorithm::Pgz, &y, &code).unwrap();
                let agree = match &oracle {
                    BruteForce::Found(found) => *found == e && rep.error_vector(code.n()) == e && rep.is_success(),
                    _ => false,
                };
                if !agree {
                    return Err(format!(
                        "{} w={w} trial {trial}: oracle {oracle:?}, PGZ {}",
                        code.label(),
                        rep.summary_line()
                    ));
                }
            }
        }
    }
    let prs7 = bundled(PRS7).map_err(|e| e.to_string())?;
    let d = min_distance(&prs7, budget).map_err(|e| e.to_string())?;
    if d != 4 {
        return Err(format!("min distance of PRS(Z7, 3) is {d}, expected 4"));
    }
    within(start.elapsed(), Duration::from_secs(300), "oracle suite")?;
    Ok(format!("{trials} trials agree; d(PRS(Z7,3)) = 4"))
}

fn bounds() -> Outcome {
    for (name, code) in demo_codes() {
        let (n, k, r, m) = (code.n(), code.dimension(), code.r(), code.m());
        if !(n - r >= k && k + r * m >= n) {
            return Err(format!("{name}: n={n} k={k} r={r} m={m} violates n-r >= k >= n-rm"));
        }
    }
    let toy = bundled(GOPPA_BINARY).map_err(|e| e.to_string())?;
    let d = min_distance(&toy, OracleBudget::default()).map_err(|e| e.to_string())?;
    let want = 2 * toy.r() + 1;
    if toy.distance_bound() != want || d < want {
        return Err(format!("binary Goppa: d = {d}, bound {}, expected >= {want}", toy.distance_bound()));
    }
    Ok(format!("7 codes within bounds; binary Goppa n={} k={} d={d} >= {want}", toy.n(), toy.dimension()))
}

fn robustness() -> Outcome {
    let mut counts = [0usize; 3];
    for (i, (name, code)) in demo_codes().into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x7000 + i as u64);
        for trial in 0..100 {
            let x = random_codeword(&code, &mut rng);
            let y = x.add(&rd_error_vector(code.base_field(), code.n(), code.t() + 1, &mut rng)).unwrap();
            for alg in [Algorithm::Pgz, Algorithm::Pgzm] {
                let rep = panic::catch_unwind(AssertUnwindSafe(|| decode(alg, &y, &code)))
                    .map_err(|_| format!("{name} trial {trial}: {alg} panicked"))?
                    .map_err(|e| e.to_string())?;
                match rep.status {
                    DecodeStatus::Corrected | DecodeStatus::NoError => {
                        let c = rep.corrected.as_ref().ok_or("success without a vector")?;
                        if !code.contains(c) {
                            return Err(format!("{name} trial {trial}: {alg} returned a non-codeword"));
                        }
                        counts[if *c == x { 0 } else { 1 }] += 1;
                    }
                    DecodeStatus::Failure(_) => counts[2] += 1,
                }
            }
        }
    }
    Ok(format!(
        "{} decodes: {} failures reported, {} miscorrections to codewords",
        counts.iter().sum::<usize>(),
        counts[2],
        counts[1]
    ))
}

fn guarded(f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let out = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
        Err(format!("panicked: {}", msg.unwrap_or_default()))
    });
    (out, start.elapsed())
}

fn main() -> ExitCode {
    let (results, capacity) = std::thread::scope(|s| {
        let cap = s.spawn(|| {
            let start = Instant::now();
            let r = panic::catch_unwind(capacity_suite);
            (r, start.elapsed())
        });
        let others: Vec<_> = [
            (1, "golden worked examples", golden as fn() -> Outcome),
            (2, "dimensions", dimensions),
            (5, "oracle equivalence", oracle_equivalence),
            (6, "bounds", bounds),
            (7, "robustness beyond capacity", robustness),
        ]
        .into_iter()
        .map(|(n, name, f)| (n, name, s.spawn(move || guarded(f))))
        .collect();
        let results: Vec<_> = others.into_iter().map(|(n, name, h)| (n, name, h.join().unwrap())).collect();
        (results, cap.join().unwrap())
    });

    let mut lines: Vec<(u32, &str, Outcome, Duration)> =
        results.into_iter().map(|(n, name, (o, d))| (n, name, o, d)).collect();
    let (cap, cap_time) = capacity;
    match cap {
        Ok(stats) => {
            let limit = within(cap_time, Duration::from_secs(120), "capacity suite");
            let c3 = summarize(&stats.failures, format!("{} trials, {} decodes", stats.trials, stats.decodes))
                .and_then(|ok| limit.clone().map(|_| ok));
            let c4 =
                summarize(&stats.structure_failures, format!("{} successful decodes checked", stats.structure_checked))
                    .and_then(|ok| limit.map(|_| ok));
            lines.push((3, "capacity", c3, cap_time));
            lines.push((4, "structure identity", c4, cap_time));
        }
        Err(_) => {
            lines.push((3, "capacity", Err("panicked".into()), cap_time));
            lines.push((4, "structure identity", Err("panicked".into()), cap_time));
        }
    }
    lines.sort_by_key(|l| l.0);

    let mut all = true;
    for (n, name, out, time) in &lines {
        match out {
            Ok(detail) => println!("criterion {n} ({name}): PASS [{time:.2?}] {detail}"),
            Err(why) => {
                all = false;
                println!("criterion {n} ({name}): FAIL [{time:.2?}] {why}");
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
