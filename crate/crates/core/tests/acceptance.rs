//! Acceptance suite: one test per shipping criterion, each printing a PASS
//! line (run with `--nocapture` to see them). The tests serialize on a
//! global lock so the timed criteria run without co-runners.

use std::process::Command;
use std::sync::{Mutex, MutexGuard, OnceLock, PoisonError};
use std::time::Instant;

use pointgb::cli::bench::{coefficient_of_variation, mean, run_grid, BenchConfig, BenchRecord};
use pointgb::essbm::{essbm, GroebnerResult, Variety};
use pointgb::field::PrimeField;
use pointgb::order::{Monomial, OrderKind, TermOrder};
use pointgb::parallel::run_all;
use pointgb::poly::{eliminate_inessential, Polynomial};
use pointgb::random::{random_variety, SplitMix64};
use pointgb::verify::{
    check_reduced, check_rel_shape, check_result_equivalence, check_sm, check_vanishing,
};

fn serial() -> MutexGuard<'static, ()> {
    static LOCK: OnceLock<Mutex<()>> = OnceLock::new();
    LOCK.get_or_init(|| Mutex::new(())).lock().unwrap_or_else(PoisonError::into_inner)
}

/// Deterministic instance family spanning p in {2,3,5,7}, n in 1..=8,
/// m in 1..=12 (capped by p^n), both term orders, and default plus
/// shuffled variable priorities.
#[derive(Clone, Debug)]
struct SmallInstance {
    p: u64,
    n: usize,
    m: usize,
    grevlex: bool,
    shuffled: bool,
    seed: u64,
}

fn small_instances(count: u64) -> Vec<SmallInstance> {
    (0..count)
        .map(|i| {
            let mut rng = SplitMix64::new(0xACCE5500 + i);
            let p = [2u64, 3, 5, 7][(i % 4) as usize];
            let n = 1 + ((i / 4) % 8) as usize;
            let capacity = (p as u128).pow(n as u32).min(12) as u64;
            let m = 1 + (rng.next_u64() % capacity) as usize;
            SmallInstance { p, n, m, grevlex: i % 2 == 0, shuffled: (i / 2) % 2 == 0, seed: i }
        })
        .collect()
}

fn build(spec: &SmallInstance) -> (Variety, TermOrder) {
    let field = PrimeField::new(spec.p).unwrap();
    let variety = random_variety(field, spec.n, spec.m, spec.seed).unwrap();
    let kind = if spec.grevlex { OrderKind::Grevlex } else { OrderKind::Lex };
    let mut priority: Vec<usize> = (0..spec.n).collect();
    if spec.shuffled {
        let mut rng = SplitMix64::new(spec.seed ^ 0x5155);
        for k in (1..spec.n).rev() {
            priority.swap(k, (rng.next_u64() % (k as u64 + 1)) as usize);
        }
    }
    (variety, TermOrder::new(kind, spec.n, priority).unwrap())
}

#[test]
fn criterion_1_oracle_equivalence() {
    let _guard = serial();
    let start = Instant::now();
    let specs = small_instances(512);
    let failures: Vec<String> = run_all(&specs, true, |spec| {
        let (variety, order) = build(spec);
        let result = essbm(&variety, &order).unwrap();
        let status = check_result_equivalence(&result, &variety, &order).unwrap();
        if status.passed() {
            None
        } else {
            Some(format!("{spec:?}: {status:?}"))
        }
    })
    .into_iter()
    .flatten()
    .collect();
    assert!(failures.is_empty(), "{} mismatches, first: {}", failures.len(), failures[0]);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "oracle sweep took {elapsed:.1?}, budget is 60 s");
    println!("criterion 1 (oracle equivalence on 512 instances in {elapsed:.1?}): PASS");
}

fn invariant_failure(
    result: &GroebnerResult,
    variety: &Variety,
    order: &TermOrder,
) -> Option<String> {
    let full = result.full_basis();
    let vanishing = check_vanishing(&full, variety);
    if !vanishing.passed() {
        return Some(format!("vanishing: {vanishing:?}"));
    }
    match check_reduced(&full, order) {
        Ok(status) if status.passed() => {}
        other => return Some(format!("reduced: {other:?}")),
    }
    let sm = check_sm(&result.standard_monomials, variety, &result.essential_vars);
    if !sm.passed() {
        return Some(format!("standard monomials: {sm:?}"));
    }
    let rel = check_rel_shape(result, order);
    if !rel.passed() {
        return Some(format!("relation shape: {rel:?}"));
    }
    if result.relations.len() != result.n_vars - result.essential_vars.len() {
        return Some(format!("{} relations, expected n - |EV|", result.relations.len()));
    }
    if result.essential_vars.len() > variety.len() {
        return Some(format!("|EV| = {} exceeds m = {}", result.essential_vars.len(), variety.len()));
    }
    None
}

#[test]
fn criterion_2_invariant_suite() {
    let _guard = serial();
    let specs = small_instances(512);
    let failures: Vec<String> = run_all(&specs, true, |spec| {
        let (variety, order) = build(spec);
        let result = essbm(&variety, &order).unwrap();
        invariant_failure(&result, &variety, &order).map(|msg| format!("{spec:?}: {msg}"))
    })
    .into_iter()
    .flatten()
    .collect();
    assert!(failures.is_empty(), "small-instance invariant failures: {failures:?}");

    // Large-n instances where the full-ring oracle is skipped.
    for p in [3u64, 17] {
        let field = PrimeField::new(p).unwrap();
        for n in [50usize, 100] {
            for m in [5usize, 10, 15] {
                for grevlex in [false, true] {
                    let order =
                        if grevlex { TermOrder::grevlex(n) } else { TermOrder::lex(n) };
                    let variety = random_variety(field, n, m, 7 + n as u64 + m as u64).unwrap();
                    let result = essbm(&variety, &order).unwrap();
                    if let Some(msg) = invariant_failure(&result, &variety, &order) {
                        panic!("p={p} n={n} m={m} grevlex={grevlex}: {msg}");
                    }
                }
            }
        }
    }
    println!("criterion 2 (invariant suite, 512 small + 24 large instances): PASS");
}

#[test]
fn criterion_3_worked_examples() {
    let _guard = serial();

    // Fixture 1: the line {0, 1, 2} in F_3.
    let f3 = PrimeField::new(3).unwrap();
    let line = Variety::from_values(f3, 1, &[vec![0], vec![1], vec![2]]).unwrap();
    let order1 = TermOrder::lex(1);
    let res = essbm(&line, &order1).unwrap();
    assert_eq!(render(&res.full_basis()), vec!["x1^3 + 2*x1"]);
    assert_eq!(render_monos(&res.standard_monomials), vec!["1", "x1", "x1^2"]);
    assert_oracle_agrees(&res, &line, &order1);

    // Fixture 2: {(0,0), (1,1)} in F_3^2 under lex.
    let two = Variety::from_values(f3, 2, &[vec![0, 0], vec![1, 1]]).unwrap();
    let order2 = TermOrder::lex(2);
    let res = essbm(&two, &order2).unwrap();
    assert_eq!(render(&res.full_basis()), vec!["x2^2 + 2*x2", "x1 + 2*x2"]);
    assert_eq!(render_monos(&res.standard_monomials), vec!["1", "x2"]);
    assert_oracle_agrees(&res, &two, &order2);

    // Fixture 3: {(0,0,0), (1,1,0), (2,1,0)} in F_3^3 under lex.
    let three =
        Variety::from_values(f3, 3, &[vec![0, 0, 0], vec![1, 1, 0], vec![2, 1, 0]]).unwrap();
    let order3 = TermOrder::lex(3);
    let res = essbm(&three, &order3).unwrap();
    assert_eq!(
        render(&res.full_basis()),
        vec!["x2^2 + 2*x2", "x1*x2 + 2*x1", "x1^2 + 2*x2", "x3"]
    );
    assert_eq!(render_monos(&res.standard_monomials), vec!["1", "x2", "x1"]);
    assert_eq!(res.essential_vars, vec![0, 1]);
    assert_oracle_agrees(&res, &three, &order3);

    println!("criterion 3 (worked examples recomputed against the full-ring run): PASS");
}

fn render(polys: &[Polynomial]) -> Vec<String> {
    polys.iter().map(ToString::to_string).collect()
}

fn render_monos(monos: &[Monomial]) -> Vec<String> {
    monos.iter().map(ToString::to_string).collect()
}

fn assert_oracle_agrees(result: &GroebnerResult, variety: &Variety, order: &TermOrder) {
    let status = check_result_equivalence(result, variety, order).unwrap();
    assert!(status.passed(), "{status:?}");
}

const SCALING_NS: [usize; 5] = [100, 150, 200, 250, 300];

fn scaling_records() -> &'static [BenchRecord] {
    static RECORDS: OnceLock<Vec<BenchRecord>> = OnceLock::new();
    RECORDS.get_or_init(|| {
        run_grid(&BenchConfig {
            primes: vec![3],
            n_values: SCALING_NS.to_vec(),
            m_values: vec![5],
            orders: vec!["lex".into()],
            seeds: 10,
            base_seed: 1,
            // Each measurement is the best of three runs so that scheduler
            // blips on a shared machine do not masquerade as algorithm
            // variance; the criteria below are unchanged.
            repeats: 3,
            parallel: false,
            verify: false,
        })
        .expect("scaling grid runs")
    })
}

fn cell_mean(records: &[BenchRecord], algorithm: &str, n: usize) -> f64 {
    let micros: Vec<f64> = records
        .iter()
        .filter(|r| r.algorithm == algorithm && r.n == n)
        .map(|r| r.micros as f64)
        .collect();
    assert_eq!(micros.len(), 10, "expected 10 seeds per cell");
    mean(&micros)
}

fn ranks(xs: &[f64]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..xs.len()).collect();
    idx.sort_by(|&a, &b| xs[a].partial_cmp(&xs[b]).unwrap());
    let mut out = vec![0.0; xs.len()];
    let mut i = 0;
    while i < idx.len() {
        let mut j = i;
        while j + 1 < idx.len() && xs[idx[j + 1]] == xs[idx[i]] {
            j += 1;
        }
        let avg = (i + j) as f64 / 2.0 + 1.0;
        for &k in &idx[i..=j] {
            out[k] = avg;
        }
        i = j + 1;
    }
    out
}

fn spearman(x: &[f64], y: &[f64]) -> f64 {
    let (rx, ry) = (ranks(x), ranks(y));
    let (mx, my) = (mean(&rx), mean(&ry));
    let cov: f64 = rx.iter().zip(&ry).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sx: f64 = rx.iter().map(|a| (a - mx) * (a - mx)).sum::<f64>().sqrt();
    let sy: f64 = ry.iter().map(|b| (b - my) * (b - my)).sum::<f64>().sqrt();
    cov / (sx * sy)
}

#[test]
fn criterion_4_scaling_trend() {
    let _guard = serial();
    let records = scaling_records();
    let essbm_means: Vec<f64> =
        SCALING_NS.iter().map(|&n| cell_mean(records, "essbm", n)).collect();
    let bma_means: Vec<f64> = SCALING_NS.iter().map(|&n| cell_mean(records, "bma", n)).collect();

    let essbm_ratio = essbm_means[4] / essbm_means[0];
    assert!(
        essbm_ratio <= 4.0,
        "essbm t(300)/t(100) = {essbm_ratio:.2}, expected near-linear growth (<= 4.0)"
    );

    let bma_ratio = bma_means[4] / bma_means[0];
    assert!(
        bma_ratio >= 1.5 * essbm_ratio,
        "bma t(300)/t(100) = {bma_ratio:.2} is not >= 1.5x the essbm ratio {essbm_ratio:.2}"
    );

    let rel: Vec<f64> = essbm_means.iter().zip(&bma_means).map(|(e, b)| e / b).collect();
    for (w, pair) in rel.windows(2).enumerate() {
        assert!(
            pair[1] <= pair[0] * 1.10,
            "essbm/bma ratio rose beyond the 10% slack between n={} and n={}: {rel:?}",
            SCALING_NS[w],
            SCALING_NS[w + 1]
        );
    }
    let ns: Vec<f64> = SCALING_NS.iter().map(|&n| n as f64).collect();
    let rho = spearman(&rel, &ns);
    assert!(rho < 0.0, "Spearman correlation of essbm/bma ratio vs n is {rho:.2}, expected < 0");

    println!(
        "criterion 4 (scaling: essbm x{essbm_ratio:.2}, bma x{bma_ratio:.2}, ratio Spearman {rho:.2}): PASS"
    );
}

#[test]
fn criterion_5_runtime_stability() {
    let _guard = serial();
    let records = scaling_records();
    let mut worst = 0.0f64;
    for &n in &SCALING_NS {
        let micros: Vec<f64> = records
            .iter()
            .filter(|r| r.algorithm == "essbm" && r.n == n)
            .map(|r| r.micros as f64)
            .collect();
        let cov = coefficient_of_variation(&micros).expect("ten samples");
        assert!(cov <= 0.5, "essbm timing CoV at n={n} is {cov:.3}, bound is 0.5");
        worst = worst.max(cov);
    }
    println!("criterion 5 (essbm timing CoV <= 0.5, worst {worst:.3}): PASS");
}

#[test]
fn criterion_6_leading_term_preserving_rewrites() {
    let _guard = serial();
    let mut found = 0u32;
    let mut instance_seed = 0u64;
    while found < 100 {
        instance_seed += 1;
        assert!(instance_seed < 2000, "could not assemble 100 test polynomials");
        let mut rng = SplitMix64::new(0x1e3 * instance_seed);
        let p = [3u64, 5][(rng.next_u64() % 2) as usize];
        let field = PrimeField::new(p).unwrap();
        let n = 4 + (rng.next_u64() % 5) as usize;
        let m = 3 + (rng.next_u64() % 7) as usize;
        let variety = random_variety(field, n, m, instance_seed).unwrap();
        let order = if instance_seed % 2 == 0 {
            TermOrder::grevlex(n)
        } else {
            TermOrder::lex(n)
        };
        let result = essbm(&variety, &order).unwrap();
        if result.basis.is_empty() || result.relations.is_empty() {
            continue;
        }
        let essential: Vec<usize> = result.essential_vars.clone();
        let relation_vars: std::collections::BTreeSet<usize> = result
            .relations
            .iter()
            .flat_map(|r| r.leading_term().unwrap().monomial.support())
            .collect();

        let mono_over_ev = |rng: &mut SplitMix64| {
            let mut exps = vec![0u32; n];
            for _ in 0..=(rng.next_u64() % 2) {
                let var = essential[(rng.next_u64() % essential.len() as u64) as usize];
                exps[var] += (rng.next_u64() % 2) as u32;
            }
            Monomial::from_exponents(&exps)
        };
        let nonzero = |rng: &mut SplitMix64| field.element(1 + rng.uniform(p - 1));

        let mut accepted_here = 0;
        for _attempt in 0..30 {
            if accepted_here == 3 || found == 100 {
                break;
            }
            // A member of the ideal: multiples of basis elements plus
            // multiples of relations.
            let mut f = Polynomial::zero();
            for _ in 0..=(rng.next_u64() % 2) {
                let g = &result.basis[(rng.next_u64() % result.basis.len() as u64) as usize];
                let mono = mono_over_ev(&mut rng);
                f = f.add(&g.mul_term(field, nonzero(&mut rng), &mono), field, &order);
            }
            for _ in 0..=(rng.next_u64() % 2) {
                let r =
                    &result.relations[(rng.next_u64() % result.relations.len() as u64) as usize];
                let mono = mono_over_ev(&mut rng);
                f = f.add(&r.mul_term(field, nonzero(&mut rng), &mono), field, &order);
            }
            let Some(lead) = f.leading_term().cloned() else { continue };
            if lead.monomial.support().any(|v| relation_vars.contains(&v)) {
                continue;
            }
            let rewritten = eliminate_inessential(&f, &result.relations, field, &order).unwrap();
            assert_eq!(
                rewritten.leading_term(),
                Some(&lead),
                "leading term not preserved (instance {instance_seed})"
            );
            assert!(
                rewritten.support().iter().all(|v| !relation_vars.contains(v)),
                "rewrite left an inessential variable (instance {instance_seed})"
            );
            let diff = f.sub(&rewritten, field, &order);
            for point in variety.points() {
                assert!(
                    diff.evaluate(field, point).is_zero(),
                    "f - f* does not vanish (instance {instance_seed})"
                );
            }
            found += 1;
            accepted_here += 1;
        }
    }
    println!("criterion 6 (100 leading-term-preserving rewrites, exact): PASS");
}

fn cli_bin() -> &'static str {
    env!("CARGO_BIN_EXE_pointgb")
}

fn run_cli(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(cli_bin()).args(args).output().expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn criterion_7_cli_determinism() {
    let _guard = serial();
    let dir = std::env::temp_dir().join(format!("pointgb-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let variety_path = dir.join("v.txt");
    let variety_str = variety_path.to_str().unwrap();

    // gen: identical stdout and identical files across runs.
    let (gen1, _, code1) = run_cli(&["gen", "--p", "5", "--n", "6", "--m", "4", "--seed", "9"]);
    let (gen2, _, code2) = run_cli(&["gen", "--p", "5", "--n", "6", "--m", "4", "--seed", "9"]);
    assert_eq!((code1, code2), (0, 0));
    assert_eq!(gen1, gen2, "gen stdout differs between runs");
    run_cli(&["gen", "--p", "5", "--n", "6", "--m", "4", "--seed", "9", "--out", variety_str]);
    let file1 = std::fs::read_to_string(&variety_path).unwrap();
    run_cli(&["gen", "--p", "5", "--n", "6", "--m", "4", "--seed", "9", "--out", variety_str]);
    let file2 = std::fs::read_to_string(&variety_path).unwrap();
    assert_eq!(file1, file2, "gen output file differs between runs");
    assert_eq!(file1, gen1, "gen file and stdout differ");

    // gb and verify: byte-identical stdout for every argument set.
    for args in [
        vec!["gb", variety_str],
        vec!["gb", variety_str, "--order", "grevlex"],
        vec!["gb", variety_str, "--order", "lex", "--varorder", "3,1,6,2,4,5"],
        vec!["gb", variety_str, "--algorithm", "bma"],
        vec!["verify", variety_str, "--oracle"],
    ] {
        let (out1, _, c1) = run_cli(&args);
        let (out2, _, c2) = run_cli(&args);
        assert_eq!(c1, 0, "{args:?} failed");
        assert_eq!(c1, c2);
        assert_eq!(out1, out2, "stdout differs for {args:?}");
        assert!(!out1.is_empty());
    }

    // bench: timings are wall-clock measurements, so rows are compared
    // with the micros column masked; everything else must be identical.
    let bench_args = [
        "bench", "--p", "3", "--n", "20,30", "--m", "4", "--order", "lex,grevlex", "--seeds",
        "2", "--seed", "3", "--verify",
    ];
    let (csv1, _, bc1) = run_cli(&bench_args);
    let (csv2, _, bc2) = run_cli(&bench_args);
    assert_eq!((bc1, bc2), (0, 0));
    let mask = |csv: &str| -> Vec<String> {
        csv.lines().map(|l| l.rsplit_once(',').map_or(l.to_string(), |(pre, _)| pre.to_string())).collect()
    };
    assert_eq!(mask(&csv1), mask(&csv2), "bench CSV structure differs between runs");
    // 2 algorithms x 4 cells x 2 seeds data rows plus the header.
    assert_eq!(csv1.lines().count(), 1 + 2 * 4 * 2);

    std::fs::remove_dir_all(&dir).ok();
    println!("criterion 7 (CLI determinism; bench compared with timings masked): PASS");
}
