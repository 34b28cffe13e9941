use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use twoswitch::io::{parse_edge_list, parse_sequence_json, sequence_to_json, write_edge_list};
use twoswitch::oracle::{all_graphs, build_metagraph, enumerate_family};
use twoswitch::params::{evaluate, interval_report};
use twoswitch::planner::{forest_transition, pseudoforest_transition, unicyclic_transition};
use twoswitch::random::{random_graph, random_switch};
use twoswitch::structure::{self, decompose, is_pseudoforest, is_tree};
use twoswitch::switch::canonical_matrices;
use twoswitch::{
    classify_family, classify_switch_direct, verify_sequence, DegreeFunction, Family, Graph,
    ParameterId, SwitchMatrix, SwitchSequence,
};

#[derive(Parser)]
#[command(
    name = "twoswitch",
    version,
    about = "2-switch transitions between graphs with equal degrees"
)]
struct Args {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(alias = "tree")]
    T,
    #[value(alias = "forest")]
    F,
    #[value(alias = "unicyclic")]
    U,
    #[value(alias = "pseudoforest")]
    P,
    #[value(alias = "g")]
    Plain,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::T => Family::Tree,
            FamilyArg::F => Family::Forest,
            FamilyArg::U => Family::Unicyclic,
            FamilyArg::P => Family::Pseudoforest,
            FamilyArg::Plain => Family::Plain,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Family, components and cycle structure of a graph.
    Classify { graph: PathBuf },
    /// Apply one switch matrix and classify it.
    Switch {
        graph: PathBuf,
        /// Matrix as "a b / c d": removes ab, cd and adds ac, bd.
        #[arg(long)]
        matrix: String,
    },
    /// Plan a switch sequence from one graph to another inside a family.
    Plan {
        #[arg(long, value_enum)]
        family: FamilyArg,
        from: PathBuf,
        to: PathBuf,
        /// Write the sequence JSON here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Replay a sequence JSON file and check every step.
    Verify {
        sequence: PathBuf,
        /// Expected final graph; overrides a target stored in the file.
        #[arg(long)]
        target: Option<PathBuf>,
    },
    /// List every labeled graph of a family with the given degrees.
    Enumerate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Comma-separated degrees of vertices 1..n.
        #[arg(long)]
        degrees: String,
    },
    /// Switch metagraph of a family with the given degrees.
    Metagraph {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        degrees: String,
        /// Also write a DOT rendering to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Range of a parameter over a family with the given degrees.
    Interval {
        #[arg(long)]
        param: String,
        #[arg(long, value_enum, default_value = "u")]
        family: FamilyArg,
        #[arg(long)]
        degrees: String,
    },
    /// Check that every parameter moves by at most one under every switch.
    Stability {
        /// Check all graphs up to this order exhaustively.
        #[arg(long)]
        max_n: usize,
        /// Additional random cases on orders up to 12.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Domain(#[from] twoswitch::Error),
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Domain(e) => e.kind(),
            CliError::Io { .. } => "io",
            CliError::Failed(_) => "check-failed",
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io {
                path: "-".into(),
                msg: e.to_string(),
            })?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

fn read_graph(path: &Path) -> Result<Graph> {
    Ok(parse_edge_list(&read_text(path)?)?)
}

fn degrees(text: &str) -> Result<DegreeFunction> {
    Ok(text.parse::<DegreeFunction>()?)
}

fn edge_json(g: &Graph) -> Value {
    json!(g.edge_pairs())
}

fn edge_text(edges: &[twoswitch::Edge]) -> String {
    let parts: Vec<String> = edges
        .iter()
        .map(|e| format!("{}-{}", e.lo(), e.hi()))
        .collect();
    if parts.is_empty() {
        "-".into()
    } else {
        parts.join(" ")
    }
}

/// What a command produced: text for humans and the JSON equivalent.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            ok: true,
        }
    }
}

fn classify(path: &Path) -> Result<Output> {
    let g = read_graph(path)?;
    let dec = decompose(&g);
    let label = classify_family(&g);
    let pseudo = is_pseudoforest(&g);
    let cycles = pseudo.then(|| structure::cycles(&g).unwrap());
    let zeta = pseudo.then(|| structure::zeta(&g).unwrap());
    let show = |x: Option<usize>| x.map_or("-".into(), |v| v.to_string());
    let mut text = String::new();
    let _ = writeln!(text, "{:<14}{label}", "family");
    let _ = writeln!(text, "{:<14}{}", "order", g.order());
    let _ = writeln!(text, "{:<14}{}", "size", g.size());
    let _ = writeln!(text, "{:<14}{}", "components", g.kappa());
    let _ = writeln!(text, "{:<14}{}", "cycles", show(cycles));
    let _ = writeln!(text, "{:<14}{}", "zeta", show(zeta));
    let _ = writeln!(text, "{:<14}{}", "degrees", g.degree_function());
    let _ = writeln!(
        text,
        "{:<14}{}",
        "cycle edges",
        edge_text(dec.cycle_edges())
    );
    let _ = write!(
        text,
        "{:<14}{}",
        "forest edges",
        edge_text(dec.forest_edges())
    );
    let pairs = |es: &[twoswitch::Edge]| -> Value {
        json!(es.iter().map(|e| [e.lo(), e.hi()]).collect::<Vec<_>>())
    };
    let json = json!({
        "family": label,
        "order": g.order(),
        "size": g.size(),
        "components": g.kappa(),
        "cycles": cycles,
        "zeta": zeta,
        "degrees": g.degree_function().as_slice(),
        "cycle_edges": pairs(dec.cycle_edges()),
        "forest_edges": pairs(dec.forest_edges()),
    });
    Ok(Output::ok(text, json))
}

fn switch(path: &Path, matrix: &str) -> Result<Output> {
    let g = read_graph(path)?;
    let m: SwitchMatrix = matrix.parse()?;
    let class = classify_switch_direct(m, &g);
    let image = m.apply(&g);
    let yes = |b: bool| if b { "yes" } else { "no" };
    let mut text = String::new();
    let _ = writeln!(text, "{:<16}{m}", "matrix");
    let _ = writeln!(
        text,
        "{:<16}{}",
        "interchangeable",
        yes(m.is_interchangeable(&g))
    );
    let _ = writeln!(
        text,
        "{:<16}{}",
        "tag",
        serde_json::to_value(class.tag).unwrap().as_str().unwrap()
    );
    let _ = writeln!(text, "{:<16}{} -> {}", "family", class.source, class.image);
    let _ = writeln!(text, "{:<16}{}", "breaker", yes(class.is_breaker));
    let flags = [
        ("t", class.t_switch),
        ("f", class.f_switch),
        ("u", class.u_switch),
        ("p", class.p_switch),
    ];
    let held: Vec<&str> = flags.iter().filter(|f| f.1).map(|f| f.0).collect();
    let _ = writeln!(
        text,
        "{:<16}{}",
        "switch kinds",
        if held.is_empty() {
            "-".into()
        } else {
            held.join(",")
        }
    );
    let _ = write!(text, "image\n{}", write_edge_list(&image).trim_end());
    let json = json!({
        "matrix": twoswitch::switch::MatrixJson::from(m),
        "interchangeable": m.is_interchangeable(&g),
        "class": class,
        "image": {"n": image.order(), "edges": edge_json(&image)},
    });
    Ok(Output::ok(text, json))
}

fn plan(family: FamilyArg, from: &Path, to: &Path, output: Option<&Path>) -> Result<Output> {
    let a = read_graph(from)?;
    let b = read_graph(to)?;
    let seq = match family {
        FamilyArg::T => {
            if !is_tree(&a) || !is_tree(&b) {
                return Err(twoswitch::Error::NotTree.into());
            }
            forest_transition(&a, &b)?
        }
        FamilyArg::F => {
            let s = forest_transition(&a, &b)?;
            SwitchSequence::new(Family::Forest, s.start, s.steps)
        }
        FamilyArg::U => unicyclic_transition(&a, &b)?,
        FamilyArg::P => pseudoforest_transition(&a, &b)?,
        FamilyArg::Plain => {
            return Err(CliError::Failed(
                "planning is available for the t, f, u and p families".into(),
            ))
        }
    };
    let text = sequence_to_json(&seq, Some(&b));
    let json: Value = serde_json::from_str(&text).expect("planner output is JSON");
    if let Some(path) = output {
        write_text(path, &format!("{text}\n"))?;
        let msg = format!("wrote {} steps to {}", seq.len(), path.display());
        return Ok(Output::ok(
            msg,
            json!({"steps": seq.len(), "output": path.display().to_string()}),
        ));
    }
    Ok(Output::ok(text, json))
}

fn verify(path: &Path, target: Option<&Path>) -> Result<Output> {
    let file = parse_sequence_json(&read_text(path)?)?;
    let seq = file.sequence()?;
    let target = match target {
        Some(p) => Some(read_graph(p)?),
        None => file.target_graph()?,
    };
    let report = verify_sequence(&seq);
    let reached = target.as_ref().map(|t| *t == report.final_graph);
    let (ok, text) = match (&report.violation, reached) {
        (Some(v), _) => {
            let kind = serde_json::to_value(v.kind).unwrap();
            (
                false,
                format!(
                    "FAIL at step {}: {}",
                    v.index,
                    kind["kind"].as_str().unwrap()
                ),
            )
        }
        (None, Some(false)) => (
            false,
            format!("FAIL, {} steps, final differs from target", seq.len()),
        ),
        (None, Some(true)) => (
            true,
            format!("OK, {} steps, final matches target", seq.len()),
        ),
        (None, None) => (true, format!("OK, {} steps", seq.len())),
    };
    let json = json!({
        "ok": ok,
        "steps": seq.len(),
        "checked": report.checked,
        "violation": report.violation,
        "matches_target": reached,
        "final": {"n": report.final_graph.order(), "edges": edge_json(&report.final_graph)},
    });
    Ok(Output { text, json, ok })
}

fn enumerate(family: FamilyArg, degrees_text: &str) -> Result<Output> {
    let s = degrees(degrees_text)?;
    let family = Family::from(family);
    let graphs = enumerate_family(&s, family)?;
    let mut text = format!("{} graphs", graphs.len());
    for g in &graphs {
        let _ = write!(text, "\n{}", edge_text(g.edges()));
    }
    let json = json!({
        "family": family.name(),
        "degrees": s.as_slice(),
        "count": graphs.len(),
        "graphs": graphs.iter().map(edge_json).collect::<Vec<_>>(),
    });
    Ok(Output::ok(text, json))
}

fn metagraph(family: FamilyArg, degrees_text: &str, dot: Option<&Path>) -> Result<Output> {
    let s = degrees(degrees_text)?;
    let meta = build_metagraph(&s, family.into())?;
    if let Some(path) = dot {
        write_text(path, &meta.to_dot())?;
    }
    let diameter = meta.diameter();
    let mut text = String::new();
    let _ = writeln!(text, "{:<12}{}", "family", meta.family);
    let _ = writeln!(text, "{:<12}{s}", "degrees");
    let _ = writeln!(text, "{:<12}{}", "nodes", meta.len());
    let _ = writeln!(text, "{:<12}{}", "links", meta.links.len() / 2);
    let _ = writeln!(
        text,
        "{:<12}{}",
        "connected",
        if meta.is_berge_connected() {
            "yes"
        } else {
            "no"
        }
    );
    let _ = write!(
        text,
        "{:<12}{}",
        "diameter",
        diameter.map_or("-".into(), |d| d.to_string())
    );
    let json = serde_json::to_value(meta.to_json()).unwrap();
    Ok(Output::ok(text, json))
}

fn interval(param: &str, family: FamilyArg, degrees_text: &str) -> Result<Output> {
    let p: ParameterId = param.parse()?;
    let s = degrees(degrees_text)?;
    let report = interval_report(p, &s, family.into())?;
    Ok(Output::ok(report.to_string(), report.to_json()))
}

#[derive(Default, Clone, Copy)]
struct Tally {
    compared: u64,
    violations: u64,
    max_delta: usize,
}

fn stability(max_n: usize, random: usize, seed: u64) -> Result<Output> {
    let mut tallies = [Tally::default(); 9];
    let mut record = |g: &Graph, m: SwitchMatrix| -> Result<()> {
        let h = m.apply(g);
        for (t, p) in tallies.iter_mut().zip(ParameterId::ALL) {
            match (evaluate(p, g), evaluate(p, &h)) {
                (Ok(x), Ok(y)) => {
                    t.compared += 1;
                    t.max_delta = t.max_delta.max(x.abs_diff(y));
                    if x.abs_diff(y) > 1 {
                        t.violations += 1;
                    }
                }
                (Err(twoswitch::Error::UndefinedParameter(_)), _) => {}
                (Err(e), _) | (_, Err(e)) => return Err(e.into()),
            }
        }
        Ok(())
    };
    let mut switches = 0u64;
    for n in 1..=max_n {
        for g in all_graphs(n)? {
            for m in canonical_matrices(&g) {
                if m.is_interchangeable(&g) {
                    switches += 1;
                    record(&g, m)?;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut drawn = 0;
    while drawn < random {
        let g = random_graph(rng.gen_range(4..=12), rng.gen_range(0.15..0.85), &mut rng);
        if let Some(m) = random_switch(&g, 200, &mut rng) {
            drawn += 1;
            record(&g, m)?;
        }
    }
    let total: u64 = tallies.iter().map(|t| t.violations).sum();
    let mut text =
        format!("{switches} exhaustive switches up to n = {max_n}, {random} random cases\n");
    let _ = write!(
        text,
        "{:<14}{:>12}{:>10}{:>12}",
        "parameter", "compared", "max delta", "violations"
    );
    for (t, p) in tallies.iter().zip(ParameterId::ALL) {
        let _ = write!(
            text,
            "\n{:<14}{:>12}{:>10}{:>12}",
            p.name(),
            t.compared,
            t.max_delta,
            t.violations
        );
    }
    let json = json!({
        "max_n": max_n,
        "switches": switches,
        "random": random,
        "seed": seed,
        "violations": total,
        "parameters": tallies.iter().zip(ParameterId::ALL).map(|(t, p)| json!({
            "parameter": p,
            "compared": t.compared,
            "max_delta": t.max_delta,
            "violations": t.violations,
        })).collect::<Vec<_>>(),
    });
    Ok(Output {
        text,
        json,
        ok: total == 0,
    })
}

fn run(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Classify { graph } => classify(graph),
        Command::Switch { graph, matrix } => switch(graph, matrix),
        Command::Plan {
            family,
            from,
            to,
            output,
        } => plan(*family, from, to, output.as_deref()),
        Command::Verify { sequence, target } => verify(sequence, target.as_deref()),
        Command::Enumerate { family, degrees } => enumerate(*family, degrees),
        Command::Metagraph {
            family,
            degrees,
            dot,
        } => metagraph(*family, degrees, dot.as_deref()),
        Command::Interval {
            param,
            family,
            degrees,
        } => interval(param, *family, degrees),
        Command::Stability {
            max_n,
            random,
            seed,
        } => stability(*max_n, *random, *seed),
    }
}

/// Prints to stdout, treating a closed pipe as success.
fn emit(text: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args.command) {
        Ok(out) => {
            if args.json {
                emit(&serde_json::to_string_pretty(&out.json).unwrap());
            } else {
                emit(&out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if args.json {
                let err = json!({"error": {"kind": e.kind(), "message": e.to_string()}});
                emit(&serde_json::to_string_pretty(&err).unwrap());
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(1)
        }
    }
}
