//! End-to-end acceptance checks, one test per criterion. Each test writes a
//! single `criterion N: PASS|FAIL ...` line to stderr (bypassing output
//! capture) before asserting.

mod common;

use std::collections::BTreeMap;
use std::io::Write;
use std::time::{Duration, Instant};

use common::{check_reduction, lockstep, product_example, random_system, sum_example, SMALL};
use multiway::algebra::{
    check_rule_independence, convolve, product, sum, sum_series, verify_semiring_identity, Identity, IdentityVerdict,
    Independence,
};
use multiway::analysis::{check_interpolation_inverse, classify, GrowthClass, Regularity, Q};
use multiway::evolve::layer_counts;
use multiway::tm::{build_texp, compile_tm, enchain_with, expected_growth, t1, validate_t_halter, EnchainOptions};
use multiway::{evolve, EvolveOptions, GrowthSeries, MultiwaySystem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(n: u32, ok: bool, elapsed: Duration, limit: Duration, detail: &str) {
    let verdict = if ok && elapsed < limit { "PASS" } else { "FAIL" };
    let line = format!("criterion {n:>2}: {verdict} ({:.2?} of {:?}) {detail}\n", elapsed, limit);
    let _ = std::io::stderr().write_all(line.as_bytes());
    assert!(ok, "criterion {n}: {detail}");
    assert!(elapsed < limit, "criterion {n}: took {elapsed:?}, limit {limit:?}");
}

fn sys(init: &str, rules: &[(&str, &str)]) -> MultiwaySystem {
    MultiwaySystem::from_strs(init, rules)
}

fn series(m: &MultiwaySystem, horizon: usize) -> GrowthSeries {
    evolve(m, EvolveOptions::new(horizon).without_edges()).growth_series()
}

fn linear_pair() -> [MultiwaySystem; 2] {
    [sys("AA", &[("A", "AB")]), sys("AA", &[("A", "AB"), ("AB", "A")])]
}

fn constant_and_finite() -> [MultiwaySystem; 2] {
    [sys("A", &[("A", "AA")]), sys("A", &[("A", "BC"), ("B", "C"), ("C", "B")])]
}

const LEFT: [&str; 3] = ["A", "B", "C"];
const RIGHT: [&str; 3] = ["D", "E", "F"];

/// Twenty operand pairs over disjoint alphabets with fixed seeds.
fn random_pairs() -> Vec<(MultiwaySystem, MultiwaySystem)> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    (0..20).map(|_| (random_system(rng.random(), &LEFT, SMALL), random_system(rng.random(), &RIGHT, SMALL))).collect()
}

fn reduction_systems() -> Vec<MultiwaySystem> {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    (0..5).map(|_| random_system(rng.random(), &LEFT, SMALL)).collect()
}

/// Third operand for the semiring checks: the branching product operand on
/// letters disjoint from both sum operands.
fn third_operand() -> MultiwaySystem {
    sys("P", &[("P", "Q"), ("Q", "R"), ("Q", "S")])
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn params(kv: &[(&str, u64)]) -> BTreeMap<String, u64> {
    kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// Zoo entries with the horizons used for classification.
const CLASSIFY_CASES: [(&str, &[(&str, u64)], usize); 8] = [
    ("chain", &[], 16),
    ("constant", &[], 64),
    ("polynomial", &[("N", 3)], 64),
    ("exponential", &[("N", 3)], 12),
    ("intermediate", &[("N", 3)], 50),
    ("inverse_polynomial", &[], 400),
    ("log_system", &[], 2000),
    ("oscillating_composite", &[], 600),
];

#[test]
fn criterion_01_linear_pair() {
    let t = Instant::now();
    let expected: Vec<u64> = (1..=10).collect();
    let got: Vec<Vec<u64>> = linear_pair().iter().map(|m| layer_counts(m, 10)).collect();
    let ok = got.iter().all(|c| *c == expected);
    report(1, ok, t.elapsed(), Duration::from_secs(1), &format!("counts {got:?}"));
}

#[test]
fn criterion_02_constant_and_finite() {
    let t = Instant::now();
    let [constant, finite] = constant_and_finite();
    let ones = layer_counts(&constant, 10) == vec![1; 10];
    let s = series(&finite, 10);
    let class = classify(&s).map(|r| r.class());
    let ok = ones && class == Ok(GrowthClass::Fin) && s.first_zero() == Some(3);
    let detail = format!(
        "all-ones={ones} finite counts {:?} class {:?} first zero at d={:?} (required d=3)",
        s.counts,
        class.map(|c| c.name()),
        s.first_zero()
    );
    report(2, ok, t.elapsed(), Duration::from_secs(1), &detail);
}

#[test]
fn criterion_03_closed_forms() {
    let t = Instant::now();
    let mut bad = Vec::new();
    for n in [2u64, 3, 4] {
        let want: Vec<u64> = (0..=12).map(|d| binomial(d + n - 1, n - 1)).collect();
        if layer_counts(&multiway::zoo::polynomial(n).system, 13) != want {
            bad.push(format!("polynomial({n})"));
        }
    }
    for n in [2u64, 3] {
        let want: Vec<u64> = (0..=8).map(|d| n.pow(d)).collect();
        if layer_counts(&multiway::zoo::exponential(n).system, 9) != want {
            bad.push(format!("exponential({n})"));
        }
    }
    report(3, bad.is_empty(), t.elapsed(), Duration::from_secs(10), &format!("mismatches {bad:?}"));
}

#[test]
fn criterion_04_sum_and_product_laws() {
    let t = Instant::now();
    let h = 9;
    let mut failures = Vec::new();
    for (i, (a, b)) in random_pairs().iter().enumerate() {
        assert_eq!(check_rule_independence(a, b, h), Independence::Independent, "pair {i}");
        let (ca, cb) = (layer_counts(a, h), layer_counts(b, h));
        let s = layer_counts(&sum(a, b).unwrap().system, h);
        if s != sum_series(&ca, &cb) {
            failures.push(format!("pair {i} sum {s:?} vs {:?}", sum_series(&ca, &cb)));
        }
        let p = layer_counts(&product(a, b).unwrap().system, h);
        if p != convolve(&ca, &cb) {
            failures.push(format!("pair {i} product {p:?} vs {:?}", convolve(&ca, &cb)));
        }
    }
    report(4, failures.is_empty(), t.elapsed(), Duration::from_secs(60), &format!("20 pairs, failures {failures:?}"));
}

#[test]
fn criterion_05_occurrence_interpolation_identity() {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut bad = 0;
    for _ in 0..50 {
        let len = rng.random_range(1..=30);
        let f: Vec<u64> = (0..len).map(|_| rng.random_range(1..=20)).collect();
        let c = check_interpolation_inverse(&f, 1000).unwrap();
        if !c.holds || c.max_residual != Q::from_integer(0) {
            bad += 1;
        }
    }
    report(5, bad == 0, t.elapsed(), Duration::from_secs(10), &format!("{bad} of 50 sequences with nonzero residual"));
}

#[test]
fn criterion_06_successor_machine_compile() {
    let t = Instant::now();
    let m = compile_tm(&t1()).unwrap();
    let golden: std::collections::BTreeSet<String> = include_str!("golden/t1_reference_rules.txt")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(bracket_states)
        .collect();
    let got: std::collections::BTreeSet<String> =
        m.rules.iter().map(|r| format!("{} -> {}", m.render(&r.lhs), m.render(&r.rhs))).collect();
    let rules_ok = m.rules.len() == 12 && got == golden;
    let traces: Vec<Result<usize, String>> = (1..=4).map(|n| lockstep(&t1(), n)).collect();
    let ok = rules_ok && traces.iter().all(Result::is_ok);
    report(6, ok, t.elapsed(), Duration::from_secs(5), &format!("12 rules match={rules_ok} lockstep {traces:?}"));
}

/// Rewrites the golden `H2` notation into the rendered `H[q2]` form.
fn bracket_states(line: &str) -> String {
    let mut out = String::new();
    let mut chars = line.chars();
    while let Some(c) = chars.next() {
        out.push(c);
        if c == 'H' {
            out.push_str(&format!("[q{}]", chars.next().unwrap()));
        }
    }
    out
}

#[test]
fn criterion_07_counter_halting_function() {
    let t = Instant::now();
    let m = validate_t_halter(&build_texp(), 1..=8, 1 << 20);
    let ok = m.is_t_halter() && (1..=8u64).all(|n| m.values.get(&n) == Some(&((1 << (n + 2)) - 1)));
    report(7, ok, t.elapsed(), Duration::from_secs(5), &format!("T(n) {:?}", m.values));
}

#[test]
fn criterion_08_logarithmic_sandwich() {
    let t = Instant::now();
    let horizon = 2000;
    let e = enchain_with(&build_texp(), &EnchainOptions { probe: 1..=10, ..EnchainOptions::default() }).unwrap();
    let c = series(&e.system, horizon).counts;
    let holds = |d: usize| {
        let l = (d as f64).log2();
        l / 2.0 <= c[d] as f64 && c[d] as f64 <= l
    };
    // latest failure in the window decides the smallest usable burn-in
    let last_bad = (1..horizon).rev().find(|&d| !holds(d));
    let d0 = last_bad.map_or(1, |d| d + 1);
    let ok = d0 <= 32;
    let below = (32..horizon).filter(|&d| (c[d] as f64) < (d as f64).log2() / 2.0).count();
    let above = (32..horizon).filter(|&d| c[d] as f64 > (d as f64).log2()).count();
    let detail = format!(
        "smallest burn-in {d0}, last violation at d={last_bad:?} (c={:?}); on [32,{horizon}) {below} layers below log2(d)/2, {above} above log2(d)",
        last_bad.map(|d| c[d])
    );
    report(8, ok, t.elapsed(), Duration::from_secs(300), &detail);
}

#[test]
fn criterion_09_successor_staircase() {
    let t = Instant::now();
    let layers = 400;
    let e = enchain_with(&t1(), &EnchainOptions { probe: 1..=40, ..EnchainOptions::default() }).unwrap();
    let predicted = expected_growth(&e.measurement, layers).unwrap();
    let got = series(&e.system, layers).counts;
    let first_diff = got.iter().zip(&predicted).position(|(a, b)| a != b);
    report(9, first_diff.is_none(), t.elapsed(), Duration::from_secs(60), &format!("{layers} layers, first mismatch {first_diff:?}"));
}

#[test]
fn criterion_10_binary_reduction() {
    let t = Instant::now();
    let results: Vec<Result<(), String>> = reduction_systems().iter().map(|m| check_reduction(m, 5)).collect();
    let ok = results.iter().all(Result::is_ok);
    report(10, ok, t.elapsed(), Duration::from_secs(60), &format!("{results:?}"));
}

#[test]
fn criterion_11_semiring_identities() {
    let t = Instant::now();
    let [m1, m2] = sum_example();
    let m3 = third_operand();
    let mut lines = Vec::new();
    let mut ok = true;
    for id in Identity::ALL {
        let v = verify_semiring_identity(id, &m1, &m2, &m3, 5).unwrap();
        let expected_failure = id == Identity::Annihilation;
        let good = match v {
            IdentityVerdict::HoldsUpToHorizon => !expected_failure,
            IdentityVerdict::Counterexample { .. } => expected_failure,
            IdentityVerdict::Undecided => false,
        };
        ok &= good;
        lines.push(format!("{id:?}={v:?}{}", if good { "" } else { "!" }));
    }
    let [p1, p2] = product_example();
    for id in [Identity::ProdComm, Identity::ProdAssoc, Identity::ProdNeutral] {
        let v = verify_semiring_identity(id, &p1, &p2, &m3, 5).unwrap();
        ok &= v == IdentityVerdict::HoldsUpToHorizon;
        lines.push(format!("product operands {id:?}={v:?}"));
    }
    report(11, ok, t.elapsed(), Duration::from_secs(120), &lines.join(", "));
}

#[test]
fn criterion_12_classifier_suite() {
    let t = Instant::now();
    let mut lines = Vec::new();
    let mut ok = true;
    for (name, kv, h) in CLASSIFY_CASES {
        let entry = multiway::zoo::by_name(name, &params(kv)).unwrap();
        let r = classify(&series(&entry.system, h)).unwrap();
        let good = match name {
            "chain" => r.class() == GrowthClass::Fin,
            "constant" => r.class() == GrowthClass::Bnd,
            "polynomial" => matches!(r.class(), GrowthClass::Pol { degree } if (degree - 2.0).abs() <= 0.3),
            "exponential" => matches!(r.class(), GrowthClass::Exp { base } if (base - 3.0).abs() <= 0.05 * 3.0),
            "intermediate" => r.class() == GrowthClass::Int,
            "inverse_polynomial" => matches!(r.class(), GrowthClass::InvPol { .. }),
            "log_system" => r.class() == GrowthClass::InvExp,
            _ => {
                r.regular == Regularity::Oscillating
                    && matches!(r.upper_class, GrowthClass::Pol { degree } if (degree - 2.0).abs() <= 0.3)
                    && matches!(r.lower_class, GrowthClass::Pol { degree } if (degree - 1.0).abs() <= 0.3)
            }
        };
        ok &= good;
        lines.push(format!("{name}@{h}={:?}/{:?}{}", r.upper_class, r.lower_class, if good { "" } else { "!" }));
    }
    report(12, ok, t.elapsed(), Duration::from_secs(600), &lines.join(", "));
}

#[test]
fn criterion_13_length_ceiling_over_corpus() {
    let t = Instant::now();
    let mut corpus: Vec<(String, MultiwaySystem, usize)> = Vec::new();
    for (i, m) in linear_pair().into_iter().chain(constant_and_finite()).enumerate() {
        corpus.push((format!("worked system {i}"), m, 10));
    }
    for n in [2, 3, 4] {
        corpus.push((format!("polynomial({n})"), multiway::zoo::polynomial(n).system, 13));
    }
    for n in [2, 3] {
        corpus.push((format!("exponential({n})"), multiway::zoo::exponential(n).system, 9));
    }
    for (i, (a, b)) in random_pairs().into_iter().enumerate() {
        corpus.push((format!("pair {i} sum"), sum(&a, &b).unwrap().system, 9));
        corpus.push((format!("pair {i} product"), product(&a, &b).unwrap().system, 9));
        corpus.push((format!("pair {i} left"), a, 9));
        corpus.push((format!("pair {i} right"), b, 9));
    }
    for (i, m) in reduction_systems().into_iter().enumerate() {
        corpus.push((format!("reduced {i}"), multiway::algebra::reduce_to_binary(&m).system, 5));
        corpus.push((format!("reduction source {i}"), m, 5));
    }
    let m = compile_tm(&t1()).unwrap();
    for n in 1..=4 {
        let init = multiway::tm::initial_string(&t1(), n).unwrap();
        corpus.push((format!("compiled successor n={n}"), m.clone().with_init(init), 2 * n as usize + 5));
    }
    corpus.push(("enchained counter".into(), enchain_with(&build_texp(), &EnchainOptions { probe: 1..=10, ..EnchainOptions::default() }).unwrap().system, 2000));
    corpus.push(("enchained successor".into(), enchain_with(&t1(), &EnchainOptions { probe: 1..=40, ..EnchainOptions::default() }).unwrap().system, 400));
    let [s1, s2] = sum_example();
    let m3 = third_operand();
    for id in Identity::ALL {
        let (l, r) = id.sides(&s1, &s2, &m3).unwrap();
        corpus.push((format!("{id:?} left"), l, 5));
        corpus.push((format!("{id:?} right"), r, 5));
    }
    for (name, kv, h) in CLASSIFY_CASES {
        corpus.push((name.to_string(), multiway::zoo::by_name(name, &params(kv)).unwrap().system, h));
    }

    let mut violations = Vec::new();
    for (name, m, h) in &corpus {
        let s = series(m, *h);
        let v = s.ceiling_violations(m.alphabet.len());
        if let Some(&d) = v.first() {
            violations.push(format!("{name}: {} layers, first d={d} count={} max_len={}", v.len(), s.counts[d], s.max_len[d]));
        }
    }
    let detail = format!("{} systems scanned, violations {violations:?}", corpus.len());
    report(13, violations.is_empty(), t.elapsed(), Duration::from_secs(600), &detail);
}
