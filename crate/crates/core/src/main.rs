use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pointgb::bma::{buchberger_moller, PointSet};
use pointgb::cli::bench::{run_grid, summarize, BenchConfig, CSV_HEADER};
use pointgb::cli::format::{parse_variety, render_variety, ParsedVariety};
use pointgb::cli::{render_result, CliError};
use pointgb::essbm::{essbm, Variety};
use pointgb::order::TermOrder;
use pointgb::random::random_variety;
use pointgb::verify::run_checks;

#[derive(Parser)]
#[command(name = "pointgb", version, about = "Groebner bases of vanishing ideals of point sets over prime fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Essbm,
    Bma,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the reduced Groebner basis and standard monomials of a
    /// variety file
    Gb {
        /// Variety file (see README for the format)
        file: PathBuf,
        /// Term order: lex | grevlex | matrix:<n*n row-major integers>
        #[arg(long, default_value = "lex")]
        order: String,
        /// Variable priority, 1-based indices, largest first (e.g. 2,1,3)
        #[arg(long)]
        varorder: Option<String>,
        #[arg(long, value_enum, default_value = "essbm")]
        algorithm: Algorithm,
        /// Reject duplicate points instead of dropping them
        #[arg(long)]
        strict: bool,
    },
    /// Compute and run the verification suite; exits 1 on any failed check
    Verify {
        file: PathBuf,
        #[arg(long, default_value = "lex")]
        order: String,
        #[arg(long)]
        varorder: Option<String>,
        /// Also compare against a from-scratch full-ring run (small inputs)
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        strict: bool,
    },
    /// Generate a seeded random variety file
    Gen {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time both algorithms over a seeded random grid and emit CSV
    Bench {
        /// Comma-separated prime moduli
        #[arg(long, value_delimiter = ',', default_value = "3")]
        p: Vec<u64>,
        /// Comma-separated variable counts
        #[arg(long, value_delimiter = ',', default_value = "100,150,200,250,300")]
        n: Vec<usize>,
        /// Comma-separated point counts
        #[arg(long, value_delimiter = ',', default_value = "5,10,15")]
        m: Vec<usize>,
        /// Comma-separated term orders (lex, grevlex)
        #[arg(long, value_delimiter = ',', default_value = "lex")]
        order: Vec<String>,
        /// Seeds per grid cell
        #[arg(long, default_value_t = 10)]
        seeds: u64,
        /// Base seed; instance seeds are seed..seed+seeds
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Timed runs per measurement; the minimum is recorded
        #[arg(long, default_value_t = 1)]
        repeats: u32,
        /// CSV output path (stdout when omitted); the summary goes to stderr
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads for grid cells; timings reflect contention when > 1
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Check the two algorithms against each other and the invariants
        #[arg(long)]
        verify: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn load_variety(file: &PathBuf, strict: bool) -> Result<Variety, CliError> {
    let text = fs::read_to_string(file)?;
    let ParsedVariety { variety, duplicates_removed } = parse_variety(&text, strict)?;
    if duplicates_removed > 0 {
        eprintln!("warning: removed {duplicates_removed} duplicate point row(s)");
    }
    Ok(variety)
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Gb { file, order, varorder, algorithm, strict } => {
            let variety = load_variety(&file, strict)?;
            let order = TermOrder::parse(&order, varorder.as_deref(), variety.n_vars())?;
            let text = match algorithm {
                Algorithm::Essbm => {
                    let res = essbm(&variety, &order)?;
                    render_result(
                        &res.full_basis(),
                        &res.standard_monomials,
                        Some(&res.essential_vars),
                    )
                }
                Algorithm::Bma => {
                    let full = PointSet::new(
                        variety.field(),
                        variety.n_vars(),
                        (0..variety.n_vars()).collect(),
                        variety.points().to_vec(),
                        order.clone(),
                    )?;
                    let (basis, standard) = buchberger_moller(&full)?;
                    render_result(&basis, &standard, None)
                }
            };
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { file, order, varorder, oracle, strict } => {
            let variety = load_variety(&file, strict)?;
            let order = TermOrder::parse(&order, varorder.as_deref(), variety.n_vars())?;
            let result = essbm(&variety, &order)?;
            let report = run_checks(&result, &variety, &order, oracle);
            print!("{}", report.render());
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Gen { p, n, m, seed, out } => {
            let field = pointgb::field::PrimeField::new(p)?;
            let variety = random_variety(field, n, m, seed)?;
            let text = render_variety(&variety);
            match out {
                Some(path) => fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench { p, n, m, order, seeds, seed, repeats, out, jobs, verify } => {
            let parallel = configure_jobs(jobs);
            let cfg = BenchConfig {
                primes: p,
                n_values: n,
                m_values: m,
                orders: order,
                seeds,
                base_seed: seed,
                repeats,
                parallel,
                verify,
            };
            let records = run_grid(&cfg)?;
            let mut csv = String::from(CSV_HEADER);
            csv.push('\n');
            for r in &records {
                csv.push_str(&r.csv_row());
                csv.push('\n');
            }
            match out {
                Some(path) => fs::write(path, csv)?,
                None => print!("{csv}"),
            }
            eprint!("{}", summarize(&records));
            Ok(ExitCode::SUCCESS)
        }
    }
}

#[cfg(feature = "parallel")]
fn configure_jobs(jobs: usize) -> bool {
    if jobs <= 1 {
        return false;
    }
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
        eprintln!("warning: could not size the thread pool: {e}");
    }
    true
}

#[cfg(not(feature = "parallel"))]
fn configure_jobs(jobs: usize) -> bool {
    if jobs > 1 {
        eprintln!("warning: built without the parallel feature; running sequentially");
    }
    false
}
