//! Command-line front end.
//!
//! Subcommands: `decompose`, `check`, `enumerate`, `cross-validate`,
//! `counterexample`, `render`. Human-readable text by default, stable JSON
//! with `--json`. Exit codes: 0 success, 1 failed assertion or impossible
//! request, 2 usage error.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use groemer::report::VerdictReport;
use groemer::search::{bounds_ok, complete_seq, side_window};
use groemer::{
    cross_validate, decompose, enumerate_exceptional, find_extremal, realize, BoundarySeq,
    Criterion, RenderOptions, SearchReport,
};

#[derive(Parser)]
#[command(
    name = "groemer",
    version,
    about = "Decide for which n an extremal Groemer packing of n unit discs exists",
    long_about = "Decides, for any n, whether an extremal Groemer (Wegner) packing of n unit \
discs exists, via three independent routes: exhaustive boundary-sequence search, the \
Boeroeczky-Ruzsa discriminant criterion, and a corrected form of Wegner's congruence \
conjecture. Cross-validation locates the inputs where the original conjecture is wrong."
)]
struct Cli {
    /// Emit machine-readable JSON on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Hexagonal parameters (a, b, c) and minimal boundary count p0 of n.
    Decompose {
        /// Disc count, at least 1.
        #[arg(value_parser = positive_u64())]
        n: u64,
    },
    /// Evaluate all exceptionality criteria at n.
    Check {
        /// Disc count, at least 1.
        #[arg(value_parser = positive_u64())]
        n: u64,
        /// Also run the exhaustive packing search.
        #[arg(long)]
        oracle: bool,
        /// Cap on the number of solutions listed in the report.
        #[arg(long, default_value_t = 32)]
        max_solutions: usize,
        /// List every solution regardless of --max-solutions.
        #[arg(long)]
        all_solutions: bool,
    },
    /// List all exceptional n up to a bound, by the chosen criterion.
    Enumerate {
        /// Upper end of the range (inclusive).
        #[arg(long, value_parser = positive_u64())]
        max: u64,
        /// Predicate to sweep: oracle, br, corrected or wegner.
        #[arg(long)]
        criterion: Criterion,
        /// Worker threads (output is identical for any value).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Compare Wegner's conjecture against the Boeroeczky-Ruzsa criterion on
    /// a range, settling every disagreement with the packing search.
    CrossValidate {
        /// Upper end of the range (inclusive).
        #[arg(long, value_parser = positive_u64())]
        max: u64,
        /// Worker threads (output is identical for any value).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Reproduce the counterexample to Wegner's conjecture at n = 1541551.
    Counterexample,
    /// Export a packing as CSV lattice coordinates or an SVG drawing.
    Render {
        /// Disc count; the first extremal solution is rendered.
        #[arg(value_parser = positive_u64(), required_unless_present = "seq")]
        n: Option<u64>,
        /// Render this explicit sequence p1,p2,p3,p4 instead (p5, p6 derived).
        #[arg(long, value_delimiter = ',')]
        seq: Option<Vec<u64>>,
        /// Output format.
        #[arg(long, value_enum)]
        format: Format,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Pixels per lattice unit (SVG only).
        #[arg(long, default_value_t = 10)]
        scale: u64,
        /// Give boundary discs a distinct style (SVG only).
        #[arg(long)]
        highlight: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Svg,
}

fn positive_u64() -> clap::builder::RangedU64ValueParser {
    clap::value_parser!(u64).range(1..)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.cmd {
        Cmd::Decompose { n } => cmd_decompose(n, cli.json),
        Cmd::Check {
            n,
            oracle,
            max_solutions,
            all_solutions,
        } => cmd_check(n, oracle, (!all_solutions).then_some(max_solutions), cli.json),
        Cmd::Enumerate {
            max,
            criterion,
            jobs,
        } => with_pool(jobs, || cmd_enumerate(max, criterion, cli.json)),
        Cmd::CrossValidate { max, jobs } => with_pool(jobs, || cmd_cross_validate(max, cli.json)),
        Cmd::Counterexample => cmd_counterexample(cli.json),
        Cmd::Render {
            n,
            seq,
            format,
            out,
            scale,
            highlight,
        } => cmd_render(n, seq, format, out, scale, highlight),
    }
}

/// Runs `f` inside a rayon pool of the requested size; on the default size,
/// just runs it. Sweep results are ordered merges, so the thread count never
/// changes any output byte.
fn with_pool<T>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T
where
    T: Send,
{
    match jobs {
        None => f(),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .expect("thread pool")
            .install(f),
    }
}

fn cmd_decompose(n: u64, json: bool) -> Result<(), String> {
    let params = decompose(n).map_err(|e| e.to_string())?;
    let p0 = params.min_boundary_count();
    if json {
        #[derive(Serialize)]
        struct Out {
            n: u64,
            a: u64,
            b: u64,
            c: u64,
            p0: u64,
        }
        print_json(&Out {
            n,
            a: params.a(),
            b: params.b(),
            c: params.c(),
            p0,
        });
    } else {
        println!(
            "a={} b={} c={} p0={}",
            params.a(),
            params.b(),
            params.c(),
            p0
        );
    }
    Ok(())
}

fn cmd_check(n: u64, oracle: bool, cap: Option<usize>, json: bool) -> Result<(), String> {
    let report = if oracle {
        VerdictReport::compute_with_oracle(n, cap)
    } else {
        VerdictReport::compute(n)
    }
    .map_err(|e| e.to_string())?;

    if json {
        print_json(&report);
        return Ok(());
    }

    let mut out = String::new();
    let _ = writeln!(
        out,
        "n={} a={} b={} c={} p0={}",
        report.n, report.a, report.b, report.c, report.p0
    );
    let w = &report.wegner_conjecture;
    if w.exceptional {
        let _ = writeln!(
            out,
            "wegner_conjecture: exceptional branch={} m={}",
            match w.branch {
                Some(groemer::WegnerBranch::B2) => "b2",
                Some(groemer::WegnerBranch::B5) => "b5",
                None => "?",
            },
            w.m.unwrap_or_default()
        );
    } else {
        let _ = writeln!(out, "wegner_conjecture: not exceptional");
    }
    let br = &report.boeroeczky_ruzsa;
    if br.exceptional {
        let _ = writeln!(
            out,
            "boeroeczky_ruzsa: exceptional k={} l={} discriminant={}",
            br.k.unwrap_or_default(),
            br.l.unwrap_or_default(),
            br.discriminant
        );
    } else {
        let _ = writeln!(
            out,
            "boeroeczky_ruzsa: not exceptional discriminant={}",
            br.discriminant
        );
    }
    let corr = &report.corrected;
    if corr.exceptional {
        let _ = writeln!(
            out,
            "corrected: exceptional k={} l={}",
            corr.k.unwrap_or_default(),
            corr.l.unwrap_or_default()
        );
    } else {
        let _ = writeln!(out, "corrected: not exceptional");
    }
    if let Some(oracle) = &report.oracle {
        let _ = writeln!(
            out,
            "oracle: {} solutions={}",
            if oracle.exceptional {
                "exceptional"
            } else {
                "not exceptional"
            },
            oracle.solution_count
        );
        for s in &oracle.solutions {
            let _ = writeln!(
                out,
                "  {},{},{},{},{},{}",
                s[0], s[1], s[2], s[3], s[4], s[5]
            );
        }
        if (oracle.solutions.len() as u64) < oracle.solution_count {
            let _ = writeln!(
                out,
                "  ... {} more (use --all-solutions)",
                oracle.solution_count - oracle.solutions.len() as u64
            );
        }
    }
    print!("{out}");
    Ok(())
}

fn cmd_enumerate(max: u64, criterion: Criterion, json: bool) -> Result<(), String> {
    let values = enumerate_exceptional(max, criterion).map_err(|e| e.to_string())?;
    if json {
        #[derive(Serialize)]
        struct Out {
            criterion: Criterion,
            max: u64,
            count: usize,
            exceptional: Vec<u64>,
        }
        print_json(&Out {
            criterion,
            max,
            count: values.len(),
            exceptional: values,
        });
    } else {
        let mut out = String::new();
        for n in values {
            let _ = writeln!(out, "{n}");
        }
        print!("{out}");
    }
    Ok(())
}

fn cmd_cross_validate(max: u64, json: bool) -> Result<(), String> {
    let report = cross_validate(max).map_err(|e| e.to_string())?;
    if json {
        print_json(&report);
        return Ok(());
    }
    let mut out = String::new();
    let _ = writeln!(out, "range: 1..={}", report.n_max);
    let _ = writeln!(
        out,
        "corrected_vs_br_mismatches: {}",
        report.corrected_mismatches
    );
    let _ = writeln!(out, "conjecture_only: {}", report.conjecture_only);
    let _ = writeln!(out, "conjecture_missed: {}", report.conjecture_missed);
    let _ = writeln!(out, "discrepancies: {}", report.discrepancies.len());
    for d in &report.discrepancies {
        let wegner = match &d.wegner_conjecture {
            Some(w) => format!(
                "exceptional(branch={},m={})",
                match w.branch {
                    groemer::WegnerBranch::B2 => "b2",
                    groemer::WegnerBranch::B5 => "b5",
                },
                w.m
            ),
            None => "not_exceptional".to_string(),
        };
        let br = match &d.boeroeczky_ruzsa {
            Some(w) => format!("exceptional(k={},l={})", w.k, w.l),
            None => "not_exceptional".to_string(),
        };
        let _ = writeln!(
            out,
            "n={} wegner={} br={} oracle={} solutions={}",
            d.n,
            wegner,
            br,
            if d.oracle_exceptional {
                "exceptional"
            } else {
                "not_exceptional"
            },
            d.oracle_solutions
        );
    }
    print!("{out}");
    Ok(())
}

/// The checks behind `counterexample`, shared by text and JSON paths.
struct CounterexampleRun {
    report: VerdictReport,
    window: (u64, u64),
    witness: BoundarySeq,
    witness_canonical: BoundarySeq,
    checks: Vec<(String, bool)>,
}

/// The known smallest input where Wegner's conjecture claims "exceptional"
/// while an extremal packing exists. `cross-validate --max 1600000` finds it
/// from scratch; this command re-verifies every part of the claim.
const COUNTEREXAMPLE_N: u64 = 1_541_551;
const WITNESS_QUAD: [u64; 4] = [702, 717, 714, 741];

fn run_counterexample() -> Result<CounterexampleRun, String> {
    let n = COUNTEREXAMPLE_N;
    let report = VerdictReport::compute_with_oracle(n, None).map_err(|e| e.to_string())?;
    let params = decompose(n).map_err(|e| e.to_string())?;
    let window = side_window(params).map_err(|e| e.to_string())?;
    let witness = complete_seq(
        WITNESS_QUAD[0],
        WITNESS_QUAD[1],
        WITNESS_QUAD[2],
        WITNESS_QUAD[3],
    )
    .ok_or("witness quadruple does not close")?;
    let witness_canonical = witness.canonical();

    let oracle = report.oracle.as_ref().expect("oracle requested");
    let mut checks: Vec<(String, bool)> = Vec::new();
    checks.push((
        format!(
            "wegner_conjecture reports exceptional with branch=b2 m=2 (got {})",
            match (report.wegner_conjecture.branch, report.wegner_conjecture.m) {
                (Some(groemer::WegnerBranch::B2), Some(m)) => format!("b2 m={m}"),
                _ => "no witness".into(),
            }
        ),
        report.wegner_conjecture.exceptional
            && report.wegner_conjecture.branch == Some(groemer::WegnerBranch::B2)
            && report.wegner_conjecture.m == Some(2),
    ));
    checks.push((
        format!(
            "boeroeczky_ruzsa reports not exceptional (discriminant={} has no factorization)",
            report.boeroeczky_ruzsa.discriminant
        ),
        !report.boeroeczky_ruzsa.exceptional && report.boeroeczky_ruzsa.discriminant == 8595,
    ));
    checks.push((
        "corrected form agrees: not exceptional".into(),
        !report.corrected.exceptional,
    ));
    checks.push((
        format!(
            "packing search finds solutions (got {})",
            oracle.solution_count
        ),
        !oracle.exceptional && oracle.solution_count > 0,
    ));
    checks.push((
        format!(
            "witness {} is among the solutions (canonical {})",
            witness, witness_canonical
        ),
        oracle.solutions.contains(&witness_canonical.sides()),
    ));
    checks.push((
        format!("witness point count == {n}"),
        witness.point_count() == n,
    ));
    checks.push((
        format!("witness perimeter == p0 == {}", report.p0),
        witness.perimeter() == report.p0 && report.p0 == 4299,
    ));
    checks.push((
        format!("witness sides lie in [{}, {}]", window.0, window.1),
        bounds_ok(&witness, params).unwrap_or(false) && window == (358, 1434),
    ));
    Ok(CounterexampleRun {
        report,
        window,
        witness,
        witness_canonical,
        checks,
    })
}

fn cmd_counterexample(json: bool) -> Result<(), String> {
    let run = run_counterexample()?;
    let pass = run.checks.iter().all(|(_, ok)| *ok);

    if json {
        #[derive(Serialize)]
        struct Out {
            pass: bool,
            n: u64,
            window: [u64; 2],
            witness: [u64; 6],
            checks: Vec<CheckOut>,
            verdict: VerdictReport,
        }
        #[derive(Serialize)]
        struct CheckOut {
            pass: bool,
            what: String,
        }
        let mut trimmed = run.report.clone();
        if let Some(oracle) = &mut trimmed.oracle {
            oracle.solutions.truncate(32);
        }
        print_json(&Out {
            pass,
            n: COUNTEREXAMPLE_N,
            window: [run.window.0, run.window.1],
            witness: run.witness.sides(),
            checks: run
                .checks
                .iter()
                .map(|(what, ok)| CheckOut {
                    pass: *ok,
                    what: what.clone(),
                })
                .collect(),
            verdict: trimmed,
        });
    } else {
        let mut out = String::new();
        let _ = writeln!(out, "counterexample n={COUNTEREXAMPLE_N}");
        let _ = writeln!(
            out,
            "decomposition: a={} b={} c={} p0={}",
            run.report.a, run.report.b, run.report.c, run.report.p0
        );
        let _ = writeln!(out, "side window: [{}, {}]", run.window.0, run.window.1);
        for (what, ok) in &run.checks {
            let _ = writeln!(out, "[{}] {}", if *ok { "PASS" } else { "FAIL" }, what);
        }
        let _ = writeln!(
            out,
            "result: the congruence conjecture disagrees with both the proven criterion and \
             the exhaustive search at n={COUNTEREXAMPLE_N} (witness canonical {})",
            run.witness_canonical
        );
        print!("{out}");
    }

    if pass {
        Ok(())
    } else {
        Err("counterexample checks failed".into())
    }
}

fn cmd_render(
    n: Option<u64>,
    seq: Option<Vec<u64>>,
    format: Format,
    out: Option<PathBuf>,
    scale: u64,
    highlight: bool,
) -> Result<(), String> {
    let seq = match (seq, n) {
        (Some(values), _) => {
            let [p1, p2, p3, p4]: [u64; 4] = match values.try_into() {
                Ok(quad) => quad,
                Err(_) => Cli::command()
                    .error(
                        clap::error::ErrorKind::WrongNumberOfValues,
                        "--seq needs exactly four side counts p1,p2,p3,p4",
                    )
                    .exit(),
            };
            complete_seq(p1, p2, p3, p4)
                .ok_or_else(|| "sequence does not close to a hexagon".to_string())?
        }
        (None, Some(n)) => {
            let report: SearchReport = find_extremal(n).map_err(|e| e.to_string())?;
            if report.exceptional {
                return Err(format!(
                    "n={n} is exceptional: no extremal packing exists (render an explicit \
                     hexagon with --seq)"
                ));
            }
            report.solutions[0]
        }
        (None, None) => unreachable!("clap enforces n or --seq"),
    };

    let realization = realize(&seq);
    let payload = match format {
        Format::Csv => groemer::geometry::export_csv(&realization),
        Format::Svg => groemer::geometry::export_svg(
            &realization,
            &RenderOptions {
                scale,
                highlight_boundary: highlight,
            },
        ),
    };
    let stats = format!(
        "points={} boundary={}",
        realization.point_count(),
        realization.boundary_count()
    );
    match out {
        Some(path) => {
            fs::write(&path, payload).map_err(|e| format!("{}: {e}", path.display()))?;
            println!("{stats}");
        }
        None => {
            print!("{payload}");
            eprintln!("{stats}");
        }
    }
    Ok(())
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("reports serialize")
    );
}
