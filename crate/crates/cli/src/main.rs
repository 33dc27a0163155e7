use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cover_algebra::asl::domain_report_for;
use cover_algebra::complex::ComplexSummary;
use cover_algebra::cover_poset::order_complex_report_for;
use cover_algebra::covers::enumerate_basic_covers;
use cover_algebra::gdim::graphical_dimension;
use cover_algebra::poset::PosetSummary;
use cover_algebra::projection::{project, right_edges, satisfies_wsc};
use cover_algebra::{analyze, build_poset, fixtures, parse_graph, AnalysisOptions, Budget, Error, Graph};
use serde_json::{json, Value};

const INPUT_ERROR: u8 = 1;
const BUDGET_EXHAUSTED: u8 = 2;
const CHECK_FAILED: u8 = 3;

/// Exact combinatorics of basic vertex covers of a graph.
///
/// GRAPH is an edge-list or JSON graph file, `-` for standard input, or
/// `@NAME` for a bundled fixture (see `covalg fixtures`).
#[derive(Parser)]
#[command(name = "covalg", version)]
struct Cli {
    /// Node limit for each exact search.
    #[arg(long, global = true, env = "COVALG_BUDGET", value_name = "N")]
    budget: Option<u64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    /// JSON document.
    #[value(alias = "json")]
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Full pipeline with the cross-check table; exits 3 if a row fails.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Level of the cover listing.
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Largest h in the basic 2h-cover counts.
        #[arg(long, default_value_t = 8)]
        max_h: u32,
        /// Number of trailing differences that must vanish.
        #[arg(long, default_value_t = 3)]
        window: usize,
    },
    /// Lists the basic k-covers as `k=<level> v1 .. vn` lines.
    Covers {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Graphical dimension with a free parameter certificate.
    Gdim {
        #[command(flatten)]
        input: Input,
    },
    /// Right edges, complete bipartite blocks and the projected graph.
    Project {
        #[command(flatten)]
        input: Input,
    },
    /// Hasse diagram, order complex and straightening relations of the
    /// basic 1-cover poset of a bipartite graph.
    Poset {
        #[command(flatten)]
        input: Input,
    },
    /// Writes the bundled graph corpus as `<NAME>.txt` files.
    Fixtures {
        #[arg(long, value_name = "PATH")]
        fixtures_dir: PathBuf,
    },
}

#[derive(Args)]
struct Input {
    #[arg(value_name = "GRAPH")]
    graph: String,
}

enum Failure {
    Usage(String),
    Io(String),
    Engine(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Engine(e) if e.is_budget() => BUDGET_EXHAUSTED,
            Failure::Engine(Error::EquivalenceViolation(_) | Error::FixtureMismatch { .. }) => CHECK_FAILED,
            _ => INPUT_ERROR,
        }
    }

    fn document(&self) -> Value {
        let (kind, message) = match self {
            Failure::Usage(m) => ("Usage", m.clone()),
            Failure::Io(m) => ("Io", m.clone()),
            Failure::Engine(e) => (e.kind(), e.to_string()),
        };
        json!({ "error": { "kind": kind, "message": message, "exit_code": self.exit_code() } })
    }
}

struct Output {
    text: String,
    doc: Value,
    code: u8,
}

impl Output {
    fn ok(text: String, doc: Value) -> Self {
        Output { text, doc, code: 0 }
    }
}

fn load(arg: &str) -> Result<Graph, Failure> {
    let text = if let Some(name) = arg.strip_prefix('@') {
        fixtures::source(name)
            .ok_or_else(|| Failure::Io(format!("no bundled fixture named {name}")))?
            .to_string()
    } else if arg == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Failure::Io(format!("stdin: {e}")))?
    } else {
        fs::read_to_string(arg).map_err(|e| Failure::Io(format!("{arg}: {e}")))?
    };
    Ok(parse_graph(&text)?)
}

fn to_doc<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn cmd_analyze(g: &Graph, opts: &AnalysisOptions) -> Result<Output, Failure> {
    let report = analyze(g, opts)?;
    Ok(Output {
        text: report.to_text(),
        doc: to_doc(&report),
        code: if report.failed() { CHECK_FAILED } else { 0 },
    })
}

fn cmd_covers(g: &Graph, k: u32, budget: &Budget) -> Result<Output, Failure> {
    let covers = enumerate_basic_covers(g, k, budget)?;
    let mut text = String::new();
    for c in &covers {
        let _ = writeln!(text, "{}", c.to_line());
    }
    let values: Vec<&[u32]> = covers.iter().map(|c| c.values()).collect();
    let doc = json!({ "level": k, "count": covers.len(), "covers": values });
    Ok(Output::ok(text, doc))
}

fn cmd_gdim(g: &Graph, budget: &Budget) -> Result<Output, Failure> {
    let r = graphical_dimension(g, budget)?;
    let [a, b] = r.certificate.to_lines();
    Ok(Output::ok(format!("gdim {}, {a}, {b}\n", r.gdim), to_doc(&r)))
}

fn label_list(vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_project(g: &Graph) -> Result<Output, Failure> {
    let right: Vec<[usize; 2]> = right_edges(g).iter().map(|&(u, v)| [u + 1, v + 1]).collect();
    let wsc = satisfies_wsc(g);
    let pr = project(g)?;
    let mut text = String::new();
    let _ = writeln!(text, "right edges:");
    for [u, v] in &right {
        let _ = writeln!(text, "  {u} {v}");
    }
    let _ = writeln!(text, "weak square condition: {wsc}");
    let _ = writeln!(text, "blocks:");
    for (i, b) in pr.blocks.iter().enumerate() {
        let _ = writeln!(text, "  {}: {}", i + 1, label_list(b.labels()));
    }
    let _ = writeln!(text, "projected edges:");
    for [u, v] in &pr.pi_edges {
        let _ = writeln!(text, "  {u} {v}");
    }
    let _ = writeln!(text, "fixed point: {}", pr.is_fixed_point);
    let doc = json!({ "right_edges": right, "wsc": wsc, "projection": to_doc(&pr) });
    Ok(Output::ok(text, doc))
}

fn cmd_poset(g: &Graph, budget: &Budget) -> Result<Output, Failure> {
    let cp = build_poset(g, budget)?;
    let summary = PosetSummary::from(cp.poset());
    let delta = cp.order_complex()?;
    let complex = ComplexSummary::from(&delta);
    let order_report = order_complex_report_for(&cp, budget)?;
    let domain = domain_report_for(&cp)?;
    let mut text = String::new();
    let _ = writeln!(text, "side: {}", label_list(cp.side().labels()));
    let _ = writeln!(text, "elements: {}", summary.elements.join(" "));
    let _ = writeln!(text, "hasse:");
    for line in &summary.hasse {
        let _ = writeln!(text, "  {line}");
    }
    let distributive = summary.distributive.map_or("n/a".to_string(), |d| d.to_string());
    let _ = writeln!(
        text,
        "rank {}, pure {}, lattice {}, distributive {distributive}",
        summary.rank, summary.pure, summary.lattice
    );
    let _ = writeln!(text, "order complex facets:");
    for line in &complex.facets {
        let _ = writeln!(text, "  {line}");
    }
    let strongly = order_report
        .strongly_connected
        .map_or("n/a".to_string(), |b| b.to_string());
    let _ = writeln!(text, "strongly connected: {strongly}");
    let _ = writeln!(text, "shellable: {}", order_report.shellable);
    let _ = writeln!(text, "verdict: {:?} ({})", order_report.verdict, order_report.basis);
    let _ = writeln!(text, "relations:");
    for line in &domain.relations {
        let _ = writeln!(text, "  {line}");
    }
    if domain.lattice_diverges {
        let _ = writeln!(text, "note: latticehood differs from the weak square condition");
    }
    let doc = json!({
        "side": cp.side().labels(),
        "summary": to_doc(&summary),
        "order_complex": to_doc(&complex),
        "cohen_macaulay": to_doc(&order_report),
        "domain": to_doc(&domain),
    });
    Ok(Output::ok(text, doc))
}

fn cmd_fixtures(dir: &Path) -> Result<Output, Failure> {
    fs::create_dir_all(dir).map_err(|e| Failure::Io(format!("{}: {e}", dir.display())))?;
    let mut written = Vec::new();
    for &(name, source) in fixtures::SOURCES {
        let path = dir.join(format!("{name}.txt"));
        fs::write(&path, source).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
        written.push(path.display().to_string());
    }
    let text = written.iter().map(|p| format!("{p}\n")).collect();
    Ok(Output::ok(text, json!({ "written": written })))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    fixtures::validate_all()?;
    let mut budget = Budget::default();
    if let Some(n) = cli.budget {
        budget.max_nodes = n;
    }
    match &cli.command {
        Command::Analyze {
            input,
            k,
            max_h,
            window,
        } => {
            let opts = AnalysisOptions {
                k: *k,
                max_h: *max_h,
                window: *window,
                budget,
            };
            cmd_analyze(&load(&input.graph)?, &opts)
        }
        Command::Covers { input, k } => cmd_covers(&load(&input.graph)?, *k, &budget),
        Command::Gdim { input } => cmd_gdim(&load(&input.graph)?, &budget),
        Command::Project { input } => cmd_project(&load(&input.graph)?),
        Command::Poset { input } => cmd_poset(&load(&input.graph)?, &budget),
        Command::Fixtures { fixtures_dir } => cmd_fixtures(fixtures_dir),
    }
}

fn fail(f: Failure) -> ExitCode {
    eprintln!("{}", serde_json::to_string_pretty(&f.document()).expect("json"));
    ExitCode::from(f.exit_code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(Failure::Usage(e.render().to_string())),
    };
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Structured => println!("{}", serde_json::to_string_pretty(&out.doc).expect("json")),
            }
            ExitCode::from(out.code)
        }
        Err(f) => fail(f),
    }
}
