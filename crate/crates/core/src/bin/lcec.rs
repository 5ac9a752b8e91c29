//! Command-line front end.
//!
//! Exit codes: 0 success or valid, 1 negative decision or invalid
//! certificate, 2 input error, 3 internal disagreement.

use std::io::Read;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lcec::aux::{count_colourings, recognize, verify_locally_complete, EdgeColouring, RecognitionResult};
use lcec::graph::{complement, is_connected, parse_graph, Graph};
use lcec::kaleidoscope::{extract_kaleidoscope, host_hash, verify_kaleidoscope, Kaleidoscope};
use lcec::oracle::{brute_force_colourings, equivalence_harness, generate, GeneratorSpec};
use lcec::orderings::{find_round, find_straight, OrderingJson};
use lcec::structure::{structural_recognize, ROUND_SEARCH_LIMIT};

#[derive(Parser)]
#[command(name = "lcec", version, about = "Locally complete 2-edge-colourings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Aux,
    Structural,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Decide colourability and print a colouring or a certificate.
    Recognize {
        /// Edge-list file, or '-' for standard input.
        input: String,
        #[arg(long, value_enum, default_value = "aux")]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Report orderings, canonical cover, type and pseudo-cutvertices.
    Classify { input: String },
    /// Check a colouring ("u v c" lines) or a kaleidoscope (JSON) against a graph.
    Certify { input: String, certificate: String },
    /// Print the graph described by a generator spec.
    Generate {
        /// Generator spec as JSON; a missing seed is filled from --seed.
        spec: String,
        #[arg(long, env = "LCEC_SEED", default_value_t = 0)]
        seed: u64,
        /// Print the graph and its witness as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Brute-force count compared with the auxiliary count.
    Oracle {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the equivalence harness over a JSON-lines manifest. A line
    /// `{"family":"exhaustive-all","n":N}` expands to every graph on N vertices.
    Sweep {
        manifest: String,
        /// Print one verdict line per instance.
        #[arg(long)]
        table: bool,
        #[arg(long)]
        json: bool,
    },
}

/// Failure that maps onto an exit code.
struct Exit(u8, String);

impl From<anyhow::Error> for Exit {
    fn from(e: anyhow::Error) -> Self {
        Exit(2, format!("{e:#}"))
    }
}

type Outcome = Result<u8, Exit>;

fn read_source(path: &str) -> anyhow::Result<String> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut text).context("reading standard input")?;
    } else {
        text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    }
    Ok(text)
}

fn read_graph(path: &str) -> anyhow::Result<Graph> {
    Ok(parse_graph(&read_source(path)?).with_context(|| format!("parsing {path}"))?.graph)
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn aux_json(g: &Graph, r: &RecognitionResult) -> Value {
    let mut v = serde_json::to_value(r.to_json(g)).expect("serializable");
    v["count"] = json!(count_colourings(g).to_string());
    if let RecognitionResult::NotColourable(cycle) = r {
        if let Ok(kal) = extract_kaleidoscope(g, cycle) {
            v["kaleidoscope"] = serde_json::to_value(kal).expect("serializable");
        }
    }
    v
}

fn recognize_cmd(input: &str, method: Method, as_json: bool) -> Outcome {
    let g = read_graph(input)?;
    let aux = (method != Method::Structural).then(|| recognize(&g));
    let structural = match method {
        Method::Aux => None,
        _ => Some(structural_recognize(&g).map_err(|e| Exit(3, format!("structural: {e}")))?),
    };
    if let (Some(a), Some(s)) = (&aux, &structural) {
        if a.is_colourable() != s.is_colourable() {
            return Err(Exit(3, format!("aux says {} but structural says {}", a.is_colourable(), s.is_colourable())));
        }
    }
    let colourable = aux.as_ref().map(|a| a.is_colourable()).or(structural.as_ref().map(|s| s.is_colourable()));
    let colourable = colourable.expect("one method ran");
    if as_json {
        let mut out = json!({});
        if let Some(a) = &aux {
            out = aux_json(&g, a);
        }
        if let Some(s) = &structural {
            if aux.is_none() {
                out["status"] = json!(if colourable { "colourable" } else { "not_colourable" });
                out["colouring"] = json!(s.colouring);
            }
            out["structural"] = serde_json::to_value(s).expect("serializable");
        }
        print_json(&out);
    } else {
        println!("{}", if colourable { "COLOURABLE" } else { "NOT COLOURABLE" });
        match (&aux, &structural) {
            (Some(RecognitionResult::Colourable(c)), _) => print!("{}", c.to_text(&g)),
            (Some(RecognitionResult::NotColourable(cycle)), _) => match extract_kaleidoscope(&g, cycle) {
                Ok(kal) => print_json(&kal),
                Err(e) => return Err(Exit(3, format!("kaleidoscope extraction: {e}"))),
            },
            (None, Some(s)) => match s.colouring() {
                Some(c) => print!("{}", c.to_text(&g)),
                None => println!("{}", s.reason.as_deref().unwrap_or("")),
            },
            (None, None) => unreachable!(),
        }
    }
    Ok(if colourable { 0 } else { 1 })
}

fn classify_cmd(input: &str) -> Outcome {
    let g = read_graph(input)?;
    let report = structural_recognize(&g).map_err(|e| Exit(3, format!("structural: {e}")))?;
    let mut out = serde_json::to_value(&report).expect("serializable");
    let ordering = if g.n() > 0 && is_connected(&g) {
        match find_straight(&g).map_err(|e| Exit(3, e.to_string()))? {
            Some(o) => Some(OrderingJson::from(&o)),
            None if g.n() <= ROUND_SEARCH_LIMIT => {
                find_round(&g).map_err(|e| Exit(3, e.to_string()))?.as_ref().map(OrderingJson::from)
            }
            None => None,
        }
    } else {
        None
    };
    out["ordering"] = serde_json::to_value(ordering).expect("serializable");
    print_json(&out);
    Ok(0)
}

fn certify_cmd(input: &str, certificate: &str) -> Outcome {
    let g = read_graph(input)?;
    let text = read_source(certificate)?;
    if text.trim_start().starts_with('{') {
        let kal: Kaleidoscope = serde_json::from_str(&text).context("parsing kaleidoscope")?;
        let co = complement(&g);
        let host = if kal.host_hash == host_hash(&g) { g } else { co };
        match verify_kaleidoscope(&host, &kal) {
            Ok(None) => {
                println!("VALID kaleidoscope of order {} and length {}", kal.k, kal.total_length());
                Ok(0)
            }
            Ok(Some(v)) => {
                println!("INVALID kaleidoscope: {v}");
                Ok(1)
            }
            Err(e) => {
                println!("INVALID kaleidoscope: {e}");
                Ok(1)
            }
        }
    } else {
        let c = EdgeColouring::parse(&g, &text).context("parsing colouring")?;
        match verify_locally_complete(&g, &c).context("checking colouring")? {
            None => {
                println!("VALID colouring");
                Ok(0)
            }
            Some(v) => {
                println!("INVALID colouring: monochromatic induced path {} {} {}", v.u, v.centre, v.v);
                Ok(1)
            }
        }
    }
}

fn generate_cmd(spec: &str, seed: u64, as_json: bool) -> Outcome {
    let mut value: Value = serde_json::from_str(spec).context("parsing spec")?;
    let needs_seed = matches!(
        value.get("family").and_then(Value::as_str),
        Some("gnp" | "staircase-pig" | "circular-arc-pca" | "bipartite-complement" | "type-template" | "pca-blocks")
    );
    if needs_seed && value.get("seed").is_none() {
        value["seed"] = json!(seed);
    }
    let spec: GeneratorSpec = serde_json::from_value(value).context("parsing spec")?;
    let gen = generate(&spec).map_err(|e| Exit(2, e.to_string()))?;
    if as_json {
        print_json(&json!({ "spec": spec, "graph": gen.graph.to_edge_list(), "witness": gen.witness }));
    } else {
        print!("{}", gen.graph.to_edge_list());
    }
    Ok(0)
}

fn oracle_cmd(input: &str, as_json: bool) -> Outcome {
    let g = read_graph(input)?;
    let bf = brute_force_colourings(&g, 0).map_err(|e| Exit(2, e.to_string()))?;
    let count = count_colourings(&g);
    let agree = count.to_string() == bf.count.to_string();
    if as_json {
        print_json(&json!({ "brute_force": bf.count, "count": count.to_string(), "agree": agree }));
    } else {
        println!("brute force {} / auxiliary count {count}", bf.count);
    }
    if !agree {
        return Err(Exit(3, "brute force and auxiliary counts differ".into()));
    }
    Ok(if bf.count > 0 { 0 } else { 1 })
}

fn sweep_cmd(manifest: &str, table: bool, as_json: bool) -> Outcome {
    let text = read_source(manifest)?;
    let mut specs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let value: Value = serde_json::from_str(line).with_context(|| format!("{manifest} line {}", i + 1))?;
        if value.get("family").and_then(Value::as_str) == Some("exhaustive-all") {
            let n = value.get("n").and_then(Value::as_u64).filter(|&n| n <= 8).with_context(|| {
                format!("{manifest} line {}: exhaustive-all needs n <= 8", i + 1)
            })? as usize;
            let pairs = n * n.saturating_sub(1) / 2;
            specs.extend((0..1u64 << pairs).map(|index| GeneratorSpec::Exhaustive { n, index }));
            continue;
        }
        let spec: GeneratorSpec =
            serde_json::from_value(value).with_context(|| format!("{manifest} line {}", i + 1))?;
        specs.push(spec);
    }
    let report = equivalence_harness(&specs);
    if as_json {
        print_json(&report);
    } else {
        for v in &report.instances {
            if table || !v.failures.is_empty() {
                let verdict = if v.aux { "colourable" } else { "not colourable" };
                let spec = serde_json::to_string(&v.spec).expect("serializable");
                let status = if v.failures.is_empty() { "ok".to_string() } else { v.failures.join("; ") };
                println!("{}\t{spec}\tn={} m={}\t{verdict}\tcount={}\t{status}", v.index, v.n, v.m, v.count);
            }
        }
        println!("{} disagreements / {} graphs", report.disagreements, report.total);
    }
    Ok(if report.disagreements == 0 { 0 } else { 3 })
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Recognize { input, method, json } => recognize_cmd(&input, method, json),
        Command::Classify { input } => classify_cmd(&input),
        Command::Certify { input, certificate } => certify_cmd(&input, &certificate),
        Command::Generate { spec, seed, json } => generate_cmd(&spec, seed, json),
        Command::Oracle { input, json } => oracle_cmd(&input, json),
        Command::Sweep { manifest, table, json } => sweep_cmd(&manifest, table, json),
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Exit(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
