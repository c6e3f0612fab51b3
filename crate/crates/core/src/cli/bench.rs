//! Benchmark harness: a seeded random grid of instances, both algorithms
//! timed on identical inputs, one CSV row per measurement.

use std::time::Instant;

use crate::bma::{buchberger_moller, PointSet};
use crate::cli::CliError;
use crate::error::Error;
use crate::essbm::essbm;
use crate::field::PrimeField;
use crate::order::TermOrder;
use crate::parallel::run_all;
use crate::random::random_variety;
use crate::verify::run_checks;

pub const CSV_HEADER: &str = "algorithm,p,n,m,order,seed,micros";

/// One timed run. `(algorithm, p, n, m, order, seed)` identifies a record
/// within one invocation.
#[derive(Clone, Debug)]
pub struct BenchRecord {
    pub algorithm: &'static str,
    pub p: u64,
    pub n: usize,
    pub m: usize,
    pub order: String,
    pub seed: u64,
    pub micros: u64,
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.algorithm, self.p, self.n, self.m, self.order, self.seed, self.micros
        )
    }
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub primes: Vec<u64>,
    pub n_values: Vec<usize>,
    pub m_values: Vec<usize>,
    /// Order spec strings, e.g. `lex`, `grevlex`.
    pub orders: Vec<String>,
    /// Number of seeds per cell; instance seeds are base_seed..base_seed+seeds.
    pub seeds: u64,
    pub base_seed: u64,
    /// Timed runs per measurement; the recorded duration is their minimum,
    /// which suppresses scheduler blips on busy machines.
    pub repeats: u32,
    /// Run grid cells on the rayon pool. Timings then reflect contention.
    pub parallel: bool,
    /// Check both results against each other and the invariant suite.
    pub verify: bool,
}

#[derive(Clone, Debug)]
struct Cell {
    p: u64,
    n: usize,
    m: usize,
    order: String,
}

/// Runs the whole grid. Infeasible cells are rejected before any timing;
/// one untimed warm-up run precedes measurement.
pub fn run_grid(cfg: &BenchConfig) -> Result<Vec<BenchRecord>, CliError> {
    let mut cells = Vec::new();
    for &p in &cfg.primes {
        for &n in &cfg.n_values {
            for &m in &cfg.m_values {
                for order in &cfg.orders {
                    PrimeField::new(p)?;
                    let mut capacity: u128 = 1;
                    for _ in 0..n {
                        capacity = capacity.saturating_mul(u128::from(p));
                    }
                    if m as u128 > capacity {
                        return Err(Error::TooManyPoints { m, capacity }.into());
                    }
                    cells.push(Cell { p, n, m, order: order.clone() });
                }
            }
        }
    }

    warm_up()?;

    let outcomes = run_all(&cells, cfg.parallel, |cell| run_cell(cell, cfg));
    let mut records = Vec::with_capacity(outcomes.len() * 2 * cfg.seeds as usize);
    for outcome in outcomes {
        records.extend(outcome?);
    }
    Ok(records)
}

fn warm_up() -> Result<(), CliError> {
    let field = PrimeField::new(3)?;
    let order = TermOrder::lex(10);
    let variety = random_variety(field, 10, 3, 0)?;
    let _ = essbm(&variety, &order)?;
    let full = PointSet::new(field, 10, (0..10).collect(), variety.points().to_vec(), order)?;
    let _ = buchberger_moller(&full)?;
    Ok(())
}

fn run_cell(cell: &Cell, cfg: &BenchConfig) -> Result<Vec<BenchRecord>, CliError> {
    let field = PrimeField::new(cell.p)?;
    let order = TermOrder::parse(&cell.order, None, cell.n)?;
    let repeats = cfg.repeats.max(1);
    let mut records = Vec::with_capacity(2 * cfg.seeds as usize);
    for s in 0..cfg.seeds {
        let seed = cfg.base_seed + s;
        let variety = random_variety(field, cell.n, cell.m, seed)?;

        let mut result = None;
        let mut essbm_micros = u64::MAX;
        for _ in 0..repeats {
            let start = Instant::now();
            let out = essbm(&variety, &order)?;
            essbm_micros = essbm_micros.min(start.elapsed().as_micros() as u64);
            result = Some(out);
        }
        let result = result.expect("at least one run");

        let full = PointSet::new(
            field,
            cell.n,
            (0..cell.n).collect(),
            variety.points().to_vec(),
            order.clone(),
        )?;
        let mut oracle = None;
        let mut bma_micros = u64::MAX;
        for _ in 0..repeats {
            let start = Instant::now();
            let out = buchberger_moller(&full)?;
            bma_micros = bma_micros.min(start.elapsed().as_micros() as u64);
            oracle = Some(out);
        }
        let (oracle_basis, oracle_standard) = oracle.expect("at least one run");

        if cfg.verify {
            // Both ran on the same variety, so the full-ring output doubles
            // as the reference: the bases must agree as canonical sets.
            let mut got = result.full_basis();
            got.sort_by(|a, b| {
                order.compare(
                    &a.leading_term().expect("nonzero").monomial,
                    &b.leading_term().expect("nonzero").monomial,
                )
            });
            if got != oracle_basis || result.standard_monomials != oracle_standard {
                return Err(CliError::Verification(format!(
                    "algorithms disagree on p={} n={} m={} order={} seed={seed}",
                    cell.p, cell.n, cell.m, cell.order
                )));
            }
            let report = run_checks(&result, &variety, &order, false);
            if !report.passed() {
                return Err(CliError::Verification(format!(
                    "invariant check failed on p={} n={} m={} order={} seed={seed}:\n{}",
                    cell.p,
                    cell.n,
                    cell.m,
                    cell.order,
                    report.render()
                )));
            }
        }

        for (algorithm, micros) in [("essbm", essbm_micros), ("bma", bma_micros)] {
            records.push(BenchRecord {
                algorithm,
                p: cell.p,
                n: cell.n,
                m: cell.m,
                order: cell.order.clone(),
                seed,
                micros,
            });
        }
    }
    Ok(records)
}

pub fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Sample standard deviation (n-1 denominator); `None` for fewer than two
/// samples.
pub fn sample_std(xs: &[f64]) -> Option<f64> {
    if xs.len() < 2 {
        return None;
    }
    let mu = mean(xs);
    let var = xs.iter().map(|x| (x - mu) * (x - mu)).sum::<f64>() / (xs.len() - 1) as f64;
    Some(var.sqrt())
}

/// Coefficient of variation: standard deviation over mean.
pub fn coefficient_of_variation(xs: &[f64]) -> Option<f64> {
    sample_std(xs).map(|sd| sd / mean(xs))
}

/// Per-cell summary: mean in milliseconds (3 decimals) and coefficient of
/// variation per algorithm, `NA` when a single seed leaves it undefined.
pub fn summarize(records: &[BenchRecord]) -> String {
    let mut cells: Vec<(u64, usize, usize, String)> = Vec::new();
    for r in records {
        let key = (r.p, r.n, r.m, r.order.clone());
        if !cells.contains(&key) {
            cells.push(key);
        }
    }
    let mut out = String::new();
    for (p, n, m, order) in cells {
        out.push_str(&format!("p={p} n={n} m={m} order={order}"));
        for algorithm in ["essbm", "bma"] {
            let micros: Vec<f64> = records
                .iter()
                .filter(|r| {
                    r.algorithm == algorithm
                        && r.p == p
                        && r.n == n
                        && r.m == m
                        && r.order == order
                })
                .map(|r| r.micros as f64)
                .collect();
            if micros.is_empty() {
                continue;
            }
            let cov = coefficient_of_variation(&micros)
                .map_or_else(|| "NA".to_string(), |c| format!("{c:.3}"));
            out.push_str(&format!(
                " | {algorithm} mean={:.3}ms cov={cov}",
                mean(&micros) / 1000.0
            ));
        }
        out.push('\n');
    }
    out
}
