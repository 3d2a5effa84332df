//! `dspider`: label, verify, sweep and search double spiders.
//!
//! Exit codes: 0 success, 1 malformed input, 2 property failure, 3 internal
//! error, 4 search proved no labeling exists, 5 search budget exhausted.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};

use dspider::construct::strongly_antimagic_label;
use dspider::dot::to_dot;
use dspider::labeling::{format_labeling, parse_labeling, EdgeLabeling, VertexSum, VertexSumReport, Violation};
use dspider::oracle::{find_antimagic, find_strongly_antimagic, OracleOutcome, SearchBudget};
use dspider::spider::{canonicalize, parse_instance, SpiderLayout};
use dspider::sweep::{run_sweep, SweepConfig};

const MALFORMED: u8 = 1;
const PROPERTY_FAILURE: u8 = 2;
const INTERNAL: u8 = 3;
const PROVEN_NONE: u8 = 4;
const BUDGET: u8 = 5;

#[derive(Parser)]
#[command(name = "dspider", version, about = "Strongly antimagic labelings of double spiders")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a strongly antimagic labeling.
    Label {
        #[arg(long)]
        spec: PathBuf,
        /// Labeling file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Step-by-step assignments of the base rule.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Check a labeling file against an instance.
    Verify {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        labeling: PathBuf,
        /// Require the degree order as well as distinct sums.
        #[arg(long)]
        strong: bool,
    },
    /// Label and verify every double spider up to a size.
    Sweep {
        #[arg(long)]
        max_edges: usize,
        /// Also run the exact search on instances up to this size.
        #[arg(long)]
        oracle_max: Option<usize>,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Exact search for a labeling of a small instance.
    Oracle {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        strong: bool,
        #[arg(long)]
        timeout_seconds: Option<u64>,
    },
    /// Write the instance (and optionally a labeling) as Graphviz.
    ExportDot {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        labeling: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

struct Failure {
    code: u8,
    message: String,
}

type Outcome = Result<(), Failure>;

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| fail(MALFORMED, format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| fail(INTERNAL, format!("{}: {e}", path.display())))
}

fn load_layout(path: &Path) -> Result<SpiderLayout, Failure> {
    let spec = parse_instance(&read(path)?).map_err(|e| fail(MALFORMED, format!("{}: {e}", path.display())))?;
    let spider = canonicalize(&spec).map_err(|e| fail(MALFORMED, format!("{}: {e}", path.display())))?;
    Ok(spider.materialize())
}

fn load_labeling(path: &Path, layout: &SpiderLayout) -> Result<EdgeLabeling, Failure> {
    let file = parse_labeling(&read(path)?).map_err(|e| fail(MALFORMED, format!("{}: {e}", path.display())))?;
    file.to_labeling(layout).map_err(|e| fail(MALFORMED, format!("{}: {e}", path.display())))
}

fn label(spec: &Path, out: Option<&Path>, dot: Option<&Path>, trace: Option<&Path>) -> Outcome {
    let layout = load_layout(spec)?;
    let construction = strongly_antimagic_label(&layout.spider().to_spec())
        .map_err(|e| fail(INTERNAL, format!("construction failed: {e}")))?;
    let labeled = &construction.labeled;
    if !labeled.report.strong_ok {
        return Err(fail(INTERNAL, "constructed labeling failed verification"));
    }
    let text = format_labeling(&labeled.layout, &labeled.labeling);
    match out {
        Some(path) => write(path, &text)?,
        None => print!("{text}"),
    }
    if let Some(path) = dot {
        write(path, &to_dot(&labeled.layout, Some(&labeled.labeling)))?;
    }
    if let Some(path) = trace {
        let mut lines = format!("# residue {} rule={}\n", construction.residue, construction.base);
        for step in &construction.reductions {
            lines.push_str(&format!("# reduction {:?} {} -> {}\n", step.kind, step.before, step.after));
        }
        for entry in &construction.trace {
            lines.push_str(&format!("{entry}\n"));
        }
        write(path, &lines)?;
    }
    Ok(())
}

fn verify(spec: &Path, labeling: &Path, strong: bool) -> Outcome {
    let layout = load_layout(spec)?;
    let labeling = load_labeling(labeling, &layout)?;
    let report = VertexSumReport::evaluate(layout.tree(), &labeling);
    let ok = if strong { report.strong_ok } else { report.antimagic_ok };
    if ok {
        println!("pass");
        return Ok(());
    }
    let described = match &report.violation {
        Some(Violation::NotBijective(defect)) => format!("bijection: {defect}"),
        Some(Violation::EqualSums { first, second }) => {
            format!("equal sums: {} and {}", describe(&layout, first), describe(&layout, second))
        }
        Some(Violation::DegreeOrder { lower, higher }) => {
            format!("degree order: {} does not sum below {}", describe(&layout, lower), describe(&layout, higher))
        }
        None => "no witness".to_string(),
    };
    Err(fail(PROPERTY_FAILURE, format!("fail: {described}")))
}

fn describe(layout: &SpiderLayout, v: &VertexSum) -> String {
    format!("{} (degree {}, sum {})", layout.vertex_address(v.vertex), v.degree, v.sum)
}

fn sweep(max_edges: usize, oracle_max: Option<usize>, workers: Option<usize>, report: Option<&Path>) -> Outcome {
    if max_edges < 5 {
        return Err(fail(MALFORMED, format!("--max-edges must be at least 5, got {max_edges}")));
    }
    if workers == Some(0) {
        return Err(fail(MALFORMED, "--workers must be positive"));
    }
    let mut config = SweepConfig::new(max_edges);
    config.oracle_max = oracle_max;
    config.workers = workers;
    let result = run_sweep(&config).map_err(|e| fail(INTERNAL, e.to_string()))?;
    let text = result.to_text();
    if let Some(path) = report {
        write(path, &text)?;
    }
    for failure in result.failures() {
        eprintln!("{failure}");
    }
    print!("{}", text.lines().last().map(|l| format!("{l}\n")).unwrap_or_default());
    if result.all_passed() {
        Ok(())
    } else {
        Err(fail(PROPERTY_FAILURE, "some instances failed"))
    }
}

fn oracle(spec: &Path, strong: bool, timeout_seconds: Option<u64>) -> Outcome {
    let layout = load_layout(spec)?;
    let budget = SearchBudget { time_limit: timeout_seconds.map(Duration::from_secs), ..SearchBudget::default() };
    let search = if strong { find_strongly_antimagic } else { find_antimagic };
    match search(layout.tree(), &budget) {
        Ok(OracleOutcome::Found { labeling, .. }) => {
            print!("{}", format_labeling(&layout, &labeling));
            Ok(())
        }
        Ok(OracleOutcome::NoneExists { nodes }) => {
            Err(fail(PROVEN_NONE, format!("none (search completed, {nodes} nodes)")))
        }
        Ok(OracleOutcome::BudgetExhausted { nodes }) => {
            Err(fail(BUDGET, format!("budget exhausted after {nodes} nodes")))
        }
        Err(e) => Err(fail(BUDGET, e.to_string())),
    }
}

fn export_dot(spec: &Path, labeling: Option<&Path>, out: &Path) -> Outcome {
    let layout = load_layout(spec)?;
    let labeling = labeling.map(|p| load_labeling(p, &layout)).transpose()?;
    write(out, &to_dot(&layout, labeling.as_ref()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Label { spec, out, dot, trace } => label(spec, out.as_deref(), dot.as_deref(), trace.as_deref()),
        Command::Verify { spec, labeling, strong } => verify(spec, labeling, *strong),
        Command::Sweep { max_edges, oracle_max, workers, report } => {
            sweep(*max_edges, *oracle_max, *workers, report.as_deref())
        }
        Command::Oracle { spec, strong, timeout_seconds } => oracle(spec, *strong, *timeout_seconds),
        Command::ExportDot { spec, labeling, out } => export_dot(spec, labeling.as_deref(), out),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, message }) => {
            eprintln!("{message}");
            ExitCode::from(code)
        }
    }
}
