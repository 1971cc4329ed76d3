//! `maxmatch`: analyze graphs for partitions into maximum matchings, build
//! extremal graphs, and run exhaustive verification suites.
//!
//! JSON goes to stdout, a short human summary to stderr.
//!
//! Exit codes: 0 success, 1 usage or invalid input, 2 parse error,
//! 3 undecided (search budget) or partial verification, 4 violation.

mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use maxmatch_core::enumeration::verify::{
    verify_class2_theorem, verify_decomposition_theorem, verify_edge_bound,
    verify_friendly_criterion, verify_uniqueness, VerificationReport,
};
use maxmatch_core::extremal::{construct_alternative, construct_attaining, construct_c};
use maxmatch_core::format::{write_edge_list, write_graph6};
use maxmatch_core::friendly::{check_class2_structure, decompose, is_friendly};
use maxmatch_core::{Budget, Error, Graph, VizingClass};
use serde::Serialize;

use input::InputFormat;
use report::{AnalysisResult, Labels};

const BUDGET_ENV: &str = "MAXMATCH_BUDGET";

#[derive(Parser)]
#[command(
    name = "maxmatch",
    version,
    about = "Maximum matchings, edge colorings and friendly graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of one graph: ν, χ', friendliness and structure.
    Analyze {
        /// Input file; stdin when omitted.
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
        format: InputFormat,
        /// Drop isolated vertices instead of rejecting the input.
        #[arg(long)]
        allow_isolated: bool,
    },
    /// Emit an extremal graph.
    Construct {
        #[command(subcommand)]
        which: Construction,
        #[arg(long, value_enum, default_value_t = OutputFormat::Graph6, global = true)]
        format: OutputFormat,
    },
    /// Split a friendly class I graph into stars and factor-critical parts.
    Decompose {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
        format: InputFormat,
    },
    /// Run an exhaustive verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Vertex cap (defaults: bound 8, friendly 16, class2 8, decomposition 7).
        #[arg(long)]
        max_vertices: Option<usize>,
        /// Edge cap for the friendly suite.
        #[arg(long, default_value_t = 8)]
        max_edges: usize,
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long)]
        nu: Option<usize>,
        /// Subtract this from the edge bound (harness self-test).
        #[arg(long, default_value_t = 0)]
        tighten: usize,
        /// Worker threads; defaults to the number of CPUs.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Subcommand)]
enum Construction {
    /// The connected extremal graph with ν = ⌈Δ/2⌉.
    C {
        #[arg(long)]
        delta: usize,
    },
    /// Disjoint stars and copies of C attaining the edge bound.
    Attaining {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        nu: usize,
    },
    /// A second attaining graph when ⌈Δ/2⌉ does not divide ν.
    Alternative {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        nu: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Graph6,
    EdgeList,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Bound,
    Uniqueness,
    Friendly,
    Class2,
    Decomposition,
}

/// A message and the process exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Graph6 { .. } | Error::EdgeList { .. } => 2,
            Error::Undecided { .. } => 3,
            Error::Violation(_) => 4,
            _ => 1,
        };
        let message = match &e {
            Error::ClassTwo => format!("{e} (run `maxmatch analyze` for the class II report)"),
            Error::IsolatedVertices(_) => format!("{e} (pass --allow-isolated to drop them)"),
            _ => e.to_string(),
        };
        Failure { code, message }
    }
}

fn budget() -> Result<Budget, Failure> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse::<u64>().map(Budget::new).map_err(|_| {
            Failure::usage(format!(
                "{BUDGET_ENV} must be a non-negative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(Budget::default()),
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn load(file: Option<&std::path::Path>, format: InputFormat) -> Result<Graph, Failure> {
    let bytes = input::read_input(file)?;
    Ok(input::parse(&bytes, format)?)
}

fn analyze(
    file: Option<PathBuf>,
    format: InputFormat,
    allow_isolated: bool,
) -> Result<(), Failure> {
    let budget = budget()?;
    let input = load(file.as_deref(), format)?;
    let isolated = input.isolated_vertices();
    if input.edge_count() == 0 {
        return Err(Error::Edgeless.into());
    }
    let (g, vertices) = if isolated.is_empty() {
        (input.clone(), (0..input.n()).collect())
    } else if allow_isolated {
        eprintln!("warning: dropping isolated vertices {isolated:?}");
        let s = input.strip_isolated();
        (s.graph, s.vertices)
    } else {
        return Err(Error::IsolatedVertices(isolated).into());
    };
    let labels = Labels(&vertices);

    let cert = is_friendly(&g, budget)?;
    let class2 = check_class2_structure(&g, budget)?;
    let decomposition = if cert.verdict && cert.class == VizingClass::ClassI {
        Some(report::decomposition_view(&decompose(&g, budget)?, &labels))
    } else {
        None
    };
    let class2_failed = class2.is_fail();
    let result = AnalysisResult {
        graph6: write_graph6(&input).ok(),
        n: input.n(),
        m: cert.m,
        delta: g.max_degree(),
        nu: cert.nu,
        chi_prime: cert.chi,
        vizing_class: cert.class,
        friendly: cert.verdict,
        partition: report::partition_view(&cert, &labels),
        witness: cert.witness.clone(),
        class2: report::class2_view(class2),
        decomposition,
        isolated,
    };
    print_json(&result);
    eprintln!(
        "n={} m={} delta={} nu={} chi'={} class {} {}",
        result.n,
        result.m,
        result.delta,
        result.nu,
        result.chi_prime,
        if cert.class == VizingClass::ClassI {
            "I"
        } else {
            "II"
        },
        if cert.verdict {
            "friendly"
        } else {
            "not friendly"
        }
    );
    if class2_failed {
        return Err(Failure {
            code: 4,
            message: "class II structure check failed".into(),
        });
    }
    Ok(())
}

fn construct(which: Construction, format: OutputFormat) -> Result<(), Failure> {
    let g = match which {
        Construction::C { delta } => construct_c(delta)?,
        Construction::Attaining { delta, nu } => construct_attaining(delta, nu)?,
        Construction::Alternative { delta, nu } => construct_alternative(delta, nu)?,
    };
    match format {
        OutputFormat::Graph6 => println!("{}", write_graph6(&g)?),
        OutputFormat::EdgeList => print!("{}", write_edge_list(&g)),
    }
    eprintln!("n={} m={} delta={}", g.n(), g.edge_count(), g.max_degree());
    Ok(())
}

fn decompose_cmd(file: Option<PathBuf>, format: InputFormat) -> Result<(), Failure> {
    let budget = budget()?;
    let g = load(file.as_deref(), format)?;
    let d = decompose(&g, budget)?;
    let ids: Vec<usize> = (0..g.n()).collect();
    print_json(&report::decomposition_view(&d, &Labels(&ids)));
    eprintln!("{} parts, {} stars", d.parts.len(), d.removal_order.len());
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn verify(
    suite: Suite,
    max_vertices: Option<usize>,
    max_edges: usize,
    delta: Option<usize>,
    nu: Option<usize>,
    tighten: usize,
    jobs: Option<usize>,
) -> Result<(), Failure> {
    let budget = budget()?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        if j == 0 {
            return Err(Failure::usage("--jobs must be at least 1"));
        }
        pool = pool.num_threads(j);
    }
    let pool = pool
        .build()
        .map_err(|e| Failure::usage(format!("cannot start worker pool: {e}")))?;
    let need = |x: Option<usize>, name: &str| {
        x.ok_or_else(|| Failure::usage(format!("--suite uniqueness requires --{name}")))
    };
    let report: VerificationReport = match suite {
        Suite::Bound => pool.install(|| verify_edge_bound(max_vertices.unwrap_or(8), tighten))?,
        Suite::Uniqueness => {
            let (d, n) = (need(delta, "delta")?, need(nu, "nu")?);
            pool.install(|| verify_uniqueness(d, n))?
        }
        Suite::Friendly => pool.install(|| {
            verify_friendly_criterion(max_vertices.unwrap_or(2 * max_edges), max_edges, budget)
        })?,
        Suite::Class2 => {
            pool.install(|| verify_class2_theorem(max_vertices.unwrap_or(8), budget))?
        }
        Suite::Decomposition => {
            pool.install(|| verify_decomposition_theorem(max_vertices.unwrap_or(7), budget))?
        }
    };
    print_json(&report);
    eprintln!(
        "{}: examined {}, hits {}, violations {}{} in {:.2?}",
        report.suite,
        report.examined,
        report.hits,
        report.violations.len(),
        if report.partial { ", partial" } else { "" },
        report.elapsed
    );
    if !report.violations.is_empty() {
        return Err(Failure {
            code: 4,
            message: "verification found violations".into(),
        });
    }
    if report.partial {
        return Err(Failure {
            code: 3,
            message: "verification is partial".into(),
        });
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze {
            file,
            format,
            allow_isolated,
        } => analyze(file, format, allow_isolated),
        Command::Construct { which, format } => construct(which, format),
        Command::Decompose { file, format } => decompose_cmd(file, format),
        Command::Verify {
            suite,
            max_vertices,
            max_edges,
            delta,
            nu,
            tighten,
            jobs,
        } => verify(suite, max_vertices, max_edges, delta, nu, tighten, jobs),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
