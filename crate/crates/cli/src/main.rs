use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use pursuitlab::claims::{self, ClaimResult};
use pursuitlab::evasion;
use pursuitlab::game;
use pursuitlab::graph::{parse_graph6, write_graph6, Graph};
use pursuitlab::named::{self, ShrikhandeVertex};
use pursuitlab::patterns::{self, Obstruction};
use pursuitlab::survey::{self, PipelineOptions, Source, StageSpec};

const EXIT_CLAIM: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(name = "pursuitlab", version, about = "Exact cops-and-robber tools for small graphs")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Graph6,
    Edgelist,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named graph, or check the Shrikhande structure.
    Named {
        /// shrikhande, shrikhande-complement, petersen, Kn, Pn, Cn, En
        name: String,
        #[arg(long, value_enum, default_value = "graph6")]
        emit: Emit,
        /// Run the structural checks (Shrikhande graph only).
        #[arg(long)]
        verify: bool,
    },
    /// Cop number of a connected graph, or a certificate for k cops.
    Copnum {
        graph6: String,
        /// Emit a checkable certificate for this many cops.
        #[arg(long)]
        cert: bool,
        #[arg(short, long, requires = "cert")]
        k: Option<usize>,
    },
    /// Domination number and a minimum dominating set.
    Gamma { graph6: String },
    /// Test freeness of a pattern; prints FREE or an embedding.
    Free {
        /// e.g. 4K1, 2K2, 2K1+K2, P5, C6, co-C6, holes>=6, g6:<graph6>
        #[arg(long)]
        pattern: String,
        graph6: String,
    },
    /// Find an induced cycle of at least the given length.
    Holes {
        graph6: String,
        #[arg(long, default_value_t = 6)]
        min_len: usize,
    },
    /// Play or verify the two-cop evasion strategy on the Shrikhande complement.
    Evade {
        #[arg(long, default_value_t = 20)]
        rounds: usize,
        /// Seed for the random cop policy.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cop positions per round, one "u v" pair per line.
        #[arg(long, conflicts_with = "seed")]
        script: Option<PathBuf>,
        /// Run the exhaustive closure sweep instead of playing.
        #[arg(long, conflicts_with_all = ["script", "rounds"])]
        verify: bool,
    },
    /// Run a filter pipeline over a graph6 stream or the built-in enumeration.
    Survey {
        /// graph6 file, or - for stdin.
        #[arg(long, conflicts_with = "enumerate", required_unless_present = "enumerate")]
        source: Option<String>,
        /// Enumerate graphs on this many vertices (1..=7).
        #[arg(long = "enum")]
        enumerate: Option<usize>,
        /// Include disconnected graphs in the enumeration.
        #[arg(long, requires = "enumerate")]
        all: bool,
        /// JSON list of stage specs.
        #[arg(long, required_unless_present = "long_run")]
        stages: Option<PathBuf>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = 1000)]
        max_witnesses: usize,
        /// Run the twelve-vertex campaign and compare with the published ledger.
        #[arg(long, conflicts_with = "stages")]
        long_run: bool,
    },
    /// Run the desk-scale claim ledger.
    VerifyPaper {
        /// Replace the Shrikhande graph (fault injection).
        #[arg(long, hide = true)]
        shrikhande_override: Option<String>,
    },
}

enum Failure {
    Usage(String),
    Io(String),
    Claim(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Claim(_) => EXIT_CLAIM,
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Io(_) => EXIT_IO,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Io(m) | Failure::Claim(m) => m,
        }
    }
}

type CliResult = Result<(), Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn io_err(e: impl ToString) -> Failure {
    Failure::Io(e.to_string())
}

fn graph_arg(s: &str) -> Result<Graph, Failure> {
    parse_graph6(s.trim()).map_err(|e| usage(format!("bad graph6 argument: {e}")))
}

fn print_json(value: &impl Serialize) -> CliResult {
    let text = serde_json::to_string_pretty(value).map_err(io_err)?;
    writeln!(io::stdout(), "{text}").map_err(io_err)
}

fn say(text: impl AsRef<str>) -> CliResult {
    writeln!(io::stdout(), "{}", text.as_ref()).map_err(io_err)
}

fn edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out.pop();
    out
}

fn cmd_named(json: bool, name: &str, emit: Emit, verify: bool) -> CliResult {
    let g = named::by_name(name).ok_or_else(|| usage(format!("unknown graph name {name:?}")))?;
    if verify {
        if name != "shrikhande" {
            return Err(usage("--verify applies to the shrikhande graph"));
        }
        let report = named::verify_structure(&g);
        if json {
            print_json(&report)?;
        } else {
            for c in &report.checks {
                say(format!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.description))?;
            }
        }
        return if report.all_passed() {
            Ok(())
        } else {
            let failed: Vec<_> = report.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect();
            Err(Failure::Claim(format!("failed checks: {}", failed.join(", "))))
        };
    }
    match (json, emit) {
        (true, _) => print_json(&json!({
            "name": name,
            "vertices": g.n(),
            "edges": g.edges().collect::<Vec<_>>(),
            "graph6": write_graph6(&g),
        })),
        (false, Emit::Graph6) => say(write_graph6(&g)),
        (false, Emit::Edgelist) => say(edge_list(&g)),
    }
}

fn cmd_copnum(json: bool, g6: &str, cert: bool, k: Option<usize>) -> CliResult {
    let g = graph_arg(g6)?;
    if cert {
        let k = k.ok_or_else(|| usage("--cert needs -k"))?;
        let certificate = game::certificate(&g, k).map_err(usage)?;
        // certificates are always JSON
        return print_json(&certificate);
    }
    let c = game::cop_number(&g).map_err(usage)?;
    if json {
        print_json(&json!({ "graph6": write_graph6(&g), "cop_number": c }))
    } else {
        say(c.to_string())
    }
}

fn cmd_gamma(json: bool, g6: &str) -> CliResult {
    let g = graph_arg(g6)?;
    let set = game::minimum_dominating_set(&g);
    if json {
        print_json(&json!({ "graph6": write_graph6(&g), "domination_number": set.len(), "dominating_set": set }))
    } else {
        say(format!("{} {:?}", set.len(), set))
    }
}

fn cmd_free(json: bool, pattern: &str, g6: &str) -> CliResult {
    let obstruction: Obstruction = pattern.parse().map_err(usage)?;
    let g = graph_arg(g6)?;
    let found = obstruction.find(&g);
    if json {
        return print_json(&json!({
            "pattern": obstruction.to_string(),
            "free": found.is_none(),
            "embedding": found.as_ref().map(|e| &e.map),
        }));
    }
    match found {
        None => say("FREE"),
        Some(e) => say(e.map.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")),
    }
}

fn cmd_holes(json: bool, g6: &str, min_len: usize) -> CliResult {
    let g = graph_arg(g6)?;
    if min_len < 3 {
        return Err(usage("--min-len must be at least 3"));
    }
    let found = patterns::has_long_induced_cycle(&g, min_len);
    if json {
        return print_json(&json!({ "min_len": min_len, "cycle": found.as_ref().map(|e| &e.map) }));
    }
    match found {
        None => say("NONE"),
        Some(e) => say(e.map.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")),
    }
}

fn read_script(path: &PathBuf) -> Result<Vec<(usize, usize)>, Failure> {
    let file = File::open(path).map_err(|e| io_err(format!("{}: {e}", path.display())))?;
    let mut moves = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(io_err)?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parsed: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse())
            .collect::<Result<_, _>>()
            .map_err(|e| usage(format!("script line {}: {e}", i + 1)))?;
        match parsed[..] {
            [u, v] => moves.push((u, v)),
            _ => return Err(usage(format!("script line {}: expected two vertices", i + 1))),
        }
    }
    Ok(moves)
}

fn cmd_evade(json: bool, rounds: usize, seed: u64, script: Option<PathBuf>, verify: bool) -> CliResult {
    if verify {
        let report = evasion::verify_evasion_closure();
        if json {
            print_json(&report)?;
        } else {
            say(format!(
                "{} contexts, {} safe states, {} violations, {} outside region",
                report.contexts_checked,
                report.safe_states,
                report.violations.len(),
                report.outside_region.len()
            ))?;
        }
        return if report.passed() { Ok(()) } else { Err(Failure::Claim("evasion closure failed".into())) };
    }
    let board = evasion::board();
    let trace = match script {
        Some(path) => {
            let moves = read_script(&path)?;
            evasion::play(moves.len(), |round, _, _| moves[round - 1])
        }
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            evasion::play(rounds, |_, last, _| {
                let mut pick = |from: Option<usize>| match from {
                    None => rng.random_range(0..16),
                    Some(c) => {
                        let options = board.closed_neighbors(c).to_vec();
                        options[rng.random_range(0..options.len())]
                    }
                };
                (pick(last.map(|p| p.0)), pick(last.map(|p| p.1)))
            })
        }
    }
    .map_err(usage)?;
    if json {
        return print_json(&trace);
    }
    let show = |v: usize| ShrikhandeVertex::from_index(v).to_string();
    for r in &trace {
        say(format!(
            "round {}: cops {} {} robber {} ({:?})",
            r.round,
            show(r.cops.0),
            show(r.cops.1),
            show(r.robber),
            r.branch
        ))?;
    }
    Ok(())
}

struct SurveyArgs {
    source: Option<String>,
    enumerate: Option<usize>,
    all: bool,
    stages: Option<PathBuf>,
    out: Option<PathBuf>,
    jobs: Option<usize>,
    max_witnesses: usize,
    long_run: bool,
}

fn open_source(a: &SurveyArgs) -> Result<Source, Failure> {
    match (&a.source, a.enumerate) {
        (_, Some(n)) => Ok(Source::Enumerate { n, connected_only: !a.all }),
        (Some(s), None) if s == "-" => Ok(Source::Graph6(Box::new(BufReader::new(io::stdin())))),
        (Some(path), None) => {
            let file = File::open(path).map_err(|e| io_err(format!("{path}: {e}")))?;
            Ok(Source::Graph6(Box::new(BufReader::new(file))))
        }
        (None, None) => Err(usage("one of --source or --enum is required")),
    }
}

fn cmd_survey(json: bool, a: SurveyArgs) -> CliResult {
    if let Some(n) = a.enumerate {
        if !(1..=7).contains(&n) {
            return Err(usage("--enum supports 1..=7 vertices"));
        }
    }
    let options = PipelineOptions { jobs: a.jobs, max_witnesses: a.max_witnesses };
    let source = open_source(&a)?;
    let report = if a.long_run {
        survey::paper_campaign(source, &options).map_err(io_err)?
    } else {
        let path = a.stages.as_ref().ok_or_else(|| usage("--stages is required"))?;
        let text = std::fs::read_to_string(path).map_err(|e| io_err(format!("{}: {e}", path.display())))?;
        let stages: Vec<StageSpec> = serde_json::from_str(&text).map_err(|e| usage(format!("bad stage file: {e}")))?;
        survey::run_pipeline(source, &stages, &options).map_err(usage)?
    };
    let text = serde_json::to_string_pretty(&report).map_err(io_err)?;
    match &a.out {
        Some(path) => std::fs::write(path, text + "\n").map_err(|e| io_err(format!("{}: {e}", path.display())))?,
        None if json => say(text)?,
        None => {
            say(format!("{}: {} records, {} malformed", report.source, report.records, report.malformed))?;
            for s in &report.stages {
                say(format!("{:<28} {:>12} -> {:>12}", s.name, s.input, s.output))?;
            }
            for w in &report.witnesses {
                say(w)?;
            }
        }
    }
    if let Some(ledger) = &report.ledger {
        let mismatches = ledger.mismatches();
        if !mismatches.is_empty() {
            let lines: Vec<_> =
                mismatches.iter().map(|(k, want, got)| format!("{k}: expected {want}, got {got}")).collect();
            return Err(Failure::Claim(format!("campaign ledger differs: {}", lines.join("; "))));
        }
    }
    Ok(())
}

fn cmd_verify_paper(json: bool, override_g6: Option<String>) -> CliResult {
    let h = match override_g6 {
        Some(s) => graph_arg(&s)?,
        None => named::shrikhande(),
    };
    let results: Vec<ClaimResult> = claims::verify_all(&h);
    if json {
        print_json(&results)?;
    } else {
        for r in &results {
            say(r.verdict_line())?;
        }
    }
    let failed: Vec<_> = results.iter().filter(|r| !r.passed).map(|r| r.name.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Claim(format!("failed claims: {}", failed.join(", "))))
    }
}

fn run(cli: Cli) -> CliResult {
    let json = cli.json;
    match cli.command {
        Command::Named { name, emit, verify } => cmd_named(json, &name, emit, verify),
        Command::Copnum { graph6, cert, k } => cmd_copnum(json, &graph6, cert, k),
        Command::Gamma { graph6 } => cmd_gamma(json, &graph6),
        Command::Free { pattern, graph6 } => cmd_free(json, &pattern, &graph6),
        Command::Holes { graph6, min_len } => cmd_holes(json, &graph6, min_len),
        Command::Evade { rounds, seed, script, verify } => cmd_evade(json, rounds, seed, script, verify),
        Command::Survey { source, enumerate, all, stages, out, jobs, max_witnesses, long_run } => {
            cmd_survey(json, SurveyArgs { source, enumerate, all, stages, out, jobs, max_witnesses, long_run })
        }
        Command::VerifyPaper { shrikhande_override } => cmd_verify_paper(json, shrikhande_override),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
