use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use cubic2ec::combiner::{support_bound, verify_certificate, Certificate, Certifier, DEFAULT_MAX_N};
use cubic2ec::connectivity::{edge_connectivity, is_essentially_4ec, verify_lemma3};
use cubic2ec::graph::{builtin, Graph};
use cubic2ec::oracle::{exact_opt, integrality_gap, lp_bound, MAX_ORACLE_VERTICES};
use cubic2ec::rational::to_display_string;
use cubic2ec::Error;

#[derive(Parser)]
#[command(name = "cubic2ec", version, about = "Uniform 7/9 certificates for cubic 3-edge-connected graphs")]
struct Cli {
    /// Print progress and diagnostics to stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a certificate and write it as JSON.
    Certify {
        #[command(flatten)]
        input: Input,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Check a certificate against a graph.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Minimum 2EC spanning subgraph size.
    Opt {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = MAX_ORACLE_VERTICES)]
        max_n: usize,
    },
    /// Cut LP optimum.
    Lp {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = MAX_ORACLE_VERTICES)]
        max_n: usize,
    },
    /// Integrality gap OPT / OPT_LP.
    Gap {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = MAX_ORACLE_VERTICES)]
        max_n: usize,
    },
    /// Run every check on each graph of a graph6 corpus and write CSV.
    Sweep {
        /// graph6 corpus, one graph per line.
        #[arg(long)]
        g6: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Exhaustive safe-pair check on one graph.
    Lemma3 {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Builtin graph: k4, k33, prism, petersen.
    #[arg(long)]
    graph: Option<String>,
    /// File holding a graph6 line (the first non-empty line is used).
    #[arg(long)]
    g6: Option<PathBuf>,
    /// Edge-list file: "n m" then one "u v" per line.
    #[arg(long)]
    edges: Option<PathBuf>,
}

/// Failure classes with their exit codes.
enum Failure {
    Check(String),
    Input(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Input(_) => 2,
            Failure::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Check(m) | Failure::Input(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(input: &Input) -> Result<Graph, Failure> {
    let graph = if let Some(name) = &input.graph {
        builtin(name)
    } else if let Some(path) = &input.g6 {
        let text = read(path)?;
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .ok_or_else(|| Failure::Input(format!("{}: no graph", path.display())))?;
        Graph::parse_graph6(line)
    } else if let Some(path) = &input.edges {
        Graph::parse_edge_list(&read(path)?)
    } else {
        unreachable!("clap requires one input")
    };
    graph.map_err(|e| Failure::Input(e.to_string()))
}

fn check_n(g: &Graph, max_n: usize) -> Outcome {
    if g.n() > max_n {
        return Err(Failure::Input(format!("n = {} exceeds --max-n {max_n}", g.n())));
    }
    Ok(())
}

fn write_output(path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Input(e.to_string())),
    }
}

fn certify(input: &Input, output: Option<&Path>, max_n: usize, verbose: u8) -> Outcome {
    let g = load(input)?;
    let certifier = Certifier::new(max_n);
    let cert = certifier.certify(&g)?;
    let report = verify_certificate(&g, &cert);
    if !report.passed() {
        let names: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        return Err(Failure::Internal(format!("fresh certificate fails {names:?}")));
    }
    if verbose > 0 {
        eprintln!(
            "trace records: {}, cached graphs: {}",
            cert.trace.len(),
            certifier.cached_graphs()
        );
    }
    write_output(output, &cert.to_json())?;
    let summary = format!(
        "n={} entries={} min_support={} bound={}",
        g.n(),
        cert.combination.len(),
        cert.min_support().map_or(0, |s| s.len()),
        support_bound(g.n())
    );
    if output.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(())
}

fn verify(input: &Input, cert_path: &Path) -> Outcome {
    let g = load(input)?;
    let cert = Certificate::from_json(&read(cert_path)?)?;
    let report = verify_certificate(&g, &cert);
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    if report.passed() {
        Ok(())
    } else {
        let names: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        Err(Failure::Check(format!("failed checks: {}", names.join(", "))))
    }
}

fn lemma3(input: &Input) -> Outcome {
    let g = load(input)?;
    let report = verify_lemma3(&g)?;
    println!(
        "four_cuts={} configurations={} pivots={} statement_violations={} orientation_violations={} divergences={}",
        report.four_cuts,
        report.configurations,
        report.pivots,
        report.statement_violations.len(),
        report.orientation_violations.len(),
        report.divergences
    );
    for c in &report.statement_violations {
        println!(
            "violation u={} v={} a={} c={} d={} S={:?} S'={:?}",
            c.u, c.v, c.a, c.c, c.d, c.s, c.s_prime
        );
    }
    if report.violations() > 0 {
        return Err(Failure::Check("safe-pair violations found".into()));
    }
    Ok(())
}

const SWEEP_HEADER: [&str; 12] = [
    "index",
    "graph6",
    "n",
    "essentially_4ec",
    "lemma3_violations",
    "opt",
    "lp",
    "gap",
    "cert_min_support",
    "bound",
    "bound_ok",
    "status",
];

struct Row {
    fields: Vec<String>,
    failure: Option<Failure>,
}

fn sweep_row(index: usize, line: &str, certifier: &Certifier) -> Row {
    let mut fields = vec![index.to_string(), line.to_string()];
    let result = sweep_fields(line, certifier, &mut fields);
    fields.resize(SWEEP_HEADER.len() - 1, String::new());
    let failure = result.err();
    fields.push(match &failure {
        None => "ok".to_string(),
        Some(f) => f.message().replace(['\n', '\r'], " "),
    });
    Row { fields, failure }
}

fn sweep_fields(line: &str, certifier: &Certifier, fields: &mut Vec<String>) -> Outcome {
    let g = Graph::parse_graph6(line).map_err(|e| Failure::Input(e.to_string()))?;
    fields.push(g.n().to_string());
    check_n(&g, certifier.max_n())?;
    if !g.is_cubic() || edge_connectivity(&g) < 3 {
        return Err(Failure::Input("not a cubic 3-edge-connected graph".into()));
    }
    let e4 = is_essentially_4ec(&g)?;
    fields.push(e4.to_string());
    let lemma3 = if e4 && g.n() > 6 {
        Some(verify_lemma3(&g)?.violations())
    } else {
        None
    };
    fields.push(lemma3.map_or(String::new(), |v| v.to_string()));
    let gap = integrality_gap(&g)?;
    fields.push(gap.opt.to_string());
    fields.push(to_display_string(&gap.lp));
    fields.push(to_display_string(&gap.gap));
    let cert = certifier.certify(&g)?;
    let report = verify_certificate(&g, &cert);
    let min = cert.min_support().map_or(0, |s| s.len());
    let bound = support_bound(g.n());
    fields.push(min.to_string());
    fields.push(bound.to_string());
    let lp_floor = gap.lp <= cubic2ec::rational::integer(gap.opt as i64);
    let ok = lp_floor && gap.opt <= min && min <= bound && report.passed() && lemma3.unwrap_or(0) == 0;
    fields.push(ok.to_string());
    if !report.passed() {
        let names: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        return Err(Failure::Check(format!("certificate fails {}", names.join(" "))));
    }
    if !ok {
        return Err(Failure::Check("bound chain violated".into()));
    }
    Ok(())
}

fn sweep(g6: &Path, output: Option<&Path>, max_n: usize, verbose: u8) -> Outcome {
    let text = read(g6)?;
    let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    let certifier = Certifier::new(max_n);
    let rows: Vec<Row> = lines
        .par_iter()
        .enumerate()
        .map(|(i, line)| {
            let row = sweep_row(i, line, &certifier);
            if verbose > 0 {
                eprintln!("[{i}] {}", row.fields.last().unwrap());
            }
            row
        })
        .collect();

    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(SWEEP_HEADER).expect("in-memory write");
    for row in &rows {
        writer.write_record(&row.fields).expect("in-memory write");
    }
    let bytes = writer.into_inner().expect("in-memory write");
    write_output(output, &String::from_utf8(bytes).expect("ascii fields"))?;

    let worst = rows
        .iter()
        .filter_map(|r| r.failure.as_ref())
        .max_by_key(|f| match f {
            Failure::Input(_) => 0,
            Failure::Check(_) => 1,
            Failure::Internal(_) => 2,
        });
    match worst {
        None => Ok(()),
        Some(f) => {
            let bad = rows.iter().filter(|r| r.failure.is_some()).count();
            let msg = format!("{bad} of {} rows failed", rows.len());
            Err(match f {
                Failure::Input(_) => Failure::Input(msg),
                Failure::Check(_) => Failure::Check(msg),
                Failure::Internal(_) => Failure::Internal(msg),
            })
        }
    }
}

fn run(cli: Cli) -> Outcome {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure::Input(format!("--jobs: {e}")))?;
    }
    let verbose = cli.verbose;
    match &cli.command {
        Command::Certify { input, output, max_n } => certify(input, output.as_deref(), *max_n, verbose),
        Command::Verify { input, cert } => verify(input, cert),
        Command::Opt { input, max_n } => {
            let g = load(input)?;
            check_n(&g, *max_n)?;
            let (opt, witness) = exact_opt(&g)?;
            println!("{opt}");
            if verbose > 0 {
                eprintln!("witness edges {:?}", witness.to_vec());
            }
            Ok(())
        }
        Command::Lp { input, max_n } => {
            let g = load(input)?;
            check_n(&g, *max_n)?;
            let lp = lp_bound(&g)?;
            println!("{}", to_display_string(&lp.value));
            if verbose > 0 {
                let x: Vec<String> = lp.x.iter().map(to_display_string).collect();
                eprintln!("x = [{}], tight cuts: {}", x.join(", "), lp.tight_cuts.len());
            }
            Ok(())
        }
        Command::Gap { input, max_n } => {
            let g = load(input)?;
            check_n(&g, *max_n)?;
            let report = integrality_gap(&g)?;
            println!("{}", to_display_string(&report.gap));
            if verbose > 0 {
                eprintln!("opt = {}, lp = {}", report.opt, to_display_string(&report.lp));
            }
            Ok(())
        }
        Command::Sweep { g6, output, max_n } => sweep(g6, output.as_deref(), *max_n, verbose),
        Command::Lemma3 { input } => lemma3(input),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
