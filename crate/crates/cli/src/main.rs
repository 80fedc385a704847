//! `qtcat`: statistics, maps, polynomials, identity checks and enumeration.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 size cap exceeded.

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qtcat::{
    check_graph_size, check_semilength, enumerate_connected_graphs, enumerate_labelled_trees,
    enumerate_parking_functions, enumerate_paths, enumerate_trees, f_recursive, family_with, identity_check, lookup,
    verify_all, Config, DyckPath, Error, Limits, MapName, PolynomialFamily, Report, Strategy, IDENTITIES,
};

#[derive(Parser)]
#[command(name = "qtcat", version, about = "Dyck path statistics, bijections and q,t-polynomial identities")]
struct Cli {
    /// Worker threads for enumeration (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Output format; `json` emits one record per line.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// Dyck paths of semilength n
    Paths,
    /// plane trees with n + 1 vertices
    Trees,
    /// parking functions on n cars
    Parking,
    /// labelled trees on n vertices
    LabelledTrees,
    /// connected labelled graphs on n vertices
    Graphs,
}

#[derive(Subcommand)]
enum Command {
    /// Statistics of a Dyck path given as an N/E word.
    Stats { path: String },
    /// Applies a named map to a path (N/E word) or plane tree (parentheses).
    Map { name: String, input: String },
    /// Prints a polynomial family at semilength n.
    Poly {
        family: String,
        n: usize,
        /// Use the recursion instead of the sum over paths (F only).
        #[arg(long)]
        recursive: bool,
    },
    /// Checks one identity, or `all`, for every size up to --max-n.
    Verify {
        #[arg(required_unless_present = "list")]
        identity: Option<String>,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Lists the identity names and exits.
        #[arg(long)]
        list: bool,
    },
    /// Streams or counts a family of objects.
    Enumerate {
        #[arg(value_enum)]
        kind: Kind,
        n: usize,
        #[arg(long)]
        count: bool,
    },
}

enum Failure {
    Usage(String),
    Verification,
    Cap(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnsupportedSize { .. } => Failure::Cap(e.to_string()),
            Error::BadCharacter { .. }
            | Error::UnbalancedSteps { .. }
            | Error::BelowDiagonal { .. }
            | Error::InvalidAreaSequence { .. }
            | Error::EmptyPath
            | Error::NotInImage
            | Error::UnknownIdentity(_)
            | Error::UnknownFamily(_)
            | Error::NotConnected
            | Error::Malformed { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Other(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

struct Out {
    format: Format,
    w: BufWriter<io::Stdout>,
}

impl Out {
    /// Writes `text` or `record` depending on the format.
    fn emit(&mut self, text: impl FnOnce() -> String, record: impl FnOnce() -> Value) -> io::Result<()> {
        match self.format {
            Format::Text => writeln!(self.w, "{}", text()),
            Format::Json => writeln!(self.w, "{}", record()),
        }
    }
}

fn stats(out: &mut Out, text: &str) -> Result<(), Failure> {
    let p: DyckPath = text.parse()?;
    let (area_seq, area) = p.area_stats();
    let (depth_seq, depth) = p.depth_stats()?;
    let (ir, ret) = p.rise_return()?;
    let fields: Vec<(&str, Value)> = vec![
        ("path", json!(p.to_string())),
        ("area", json!(area)),
        ("dinv", json!(p.dinv())),
        ("bounce", json!(p.bounce().value)),
        ("depth", json!(depth)),
        ("ddinv", json!(p.ddinv()?)),
        ("ir", json!(ir)),
        ("ret", json!(ret)),
        ("area_sequence", json!(area_seq.to_string())),
        ("depth_sequence", json!(depth_seq.to_string())),
    ];
    match out.format {
        Format::Text => {
            for (k, v) in &fields {
                writeln!(out.w, "{k}={}", v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string()))?;
            }
        }
        Format::Json => writeln!(out.w, "{}", Value::Object(fields.into_iter().map(|(k, v)| (k.into(), v)).collect()))?,
    }
    Ok(())
}

fn map(out: &mut Out, name: &str, input: &str) -> Result<(), Failure> {
    let map: MapName = name.parse()?;
    let result = map.apply(&map.parse_input(input)?)?;
    out.emit(|| result.to_string(), || json!({"map": map.as_str(), "input": input, "output": result.to_string()}))?;
    Ok(())
}

fn poly(out: &mut Out, config: &Config, family: &str, n: usize, recursive: bool) -> Result<(), Failure> {
    let fam: PolynomialFamily = family.parse()?;
    let p = if recursive {
        if fam != PolynomialFamily::F {
            return Err(Failure::Usage(format!("--recursive is only available for F, not {fam}")));
        }
        check_semilength(n, config)?;
        f_recursive(n)
    } else {
        family_with(fam, n, config)?
    };
    out.emit(|| p.to_string(), || json!({"family": fam.as_str(), "n": n, "polynomial": p.to_string()}))?;
    Ok(())
}

fn report(out: &mut Out, r: &Report) -> io::Result<()> {
    out.emit(
        || r.to_string(),
        || {
            json!({
                "name": r.name,
                "n": r.n,
                "verdict": if r.passed() { "pass" } else { "fail" },
                "counterexample": r.counterexample,
            })
        },
    )
}

fn verify(out: &mut Out, config: &Config, identity: Option<&str>, max_n: usize, list: bool) -> Result<(), Failure> {
    if list {
        for id in IDENTITIES {
            out.emit(
                || format!("{:<28} n={}..{} ({})  {}", id.name, id.min_n, id.max_n, id.unit, id.statement),
                || {
                    json!({"name": id.name, "unit": id.unit.to_string(), "min_n": id.min_n,
                           "max_n": id.max_n, "statement": id.statement})
                },
            )?;
        }
        return Ok(());
    }
    let identity = identity.ok_or_else(|| Failure::Usage("missing identity name".into()))?;
    let reports = if identity.eq_ignore_ascii_case("all") {
        verify_all(max_n, config)?
    } else {
        let id = lookup(identity)?;
        (id.min_n..=max_n).map(|n| identity_check(id.name, n, config)).collect::<Result<Vec<_>, _>>()?
    };
    for r in &reports {
        report(out, r)?;
    }
    if reports.iter().all(Report::passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn enumerate(out: &mut Out, config: &Config, kind: Kind, n: usize, count: bool) -> Result<(), Failure> {
    let mut items: Box<dyn Iterator<Item = String>> = match kind {
        Kind::Paths => {
            check_semilength(n, config)?;
            Box::new(enumerate_paths(n).map(|p| p.to_string()))
        }
        Kind::Trees => {
            check_semilength(n, config)?;
            Box::new(enumerate_trees(n + 1).map(|t| t.to_string()))
        }
        Kind::Parking => {
            check_graph_size(n + 1, config)?;
            Box::new(enumerate_parking_functions(n).into_iter().map(|p| p.to_string()))
        }
        Kind::LabelledTrees => {
            check_graph_size(n, config)?;
            Box::new(enumerate_labelled_trees(n).into_iter().map(|t| t.to_string()))
        }
        Kind::Graphs => Box::new(enumerate_connected_graphs(n, config)?.into_iter().map(|g| g.to_string())),
    };
    let kind_name = kind.to_possible_value().expect("no skipped variants").get_name().to_string();
    if count {
        let c = items.by_ref().count();
        out.emit(|| c.to_string(), || json!({"kind": kind_name, "n": n, "count": c}))?;
    } else {
        for item in items {
            out.emit(|| item.clone(), || json!({"kind": kind_name, "n": n, "object": item}))?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    #[cfg(feature = "parallel")]
    if cli.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
            .map_err(|e| Failure::Other(e.to_string()))?;
    }
    let config = Config {
        strategy: if cli.jobs == 1 { Strategy::Sequential } else { Strategy::Parallel },
        limits: Limits::from_env(),
    };
    let mut out = Out {
        format: cli.format,
        w: BufWriter::new(io::stdout()),
    };
    let result = match &cli.command {
        Command::Stats { path } => stats(&mut out, path),
        Command::Map { name, input } => map(&mut out, name, input),
        Command::Poly { family, n, recursive } => poly(&mut out, &config, family, *n, *recursive),
        Command::Verify { identity, max_n, list } => verify(&mut out, &config, identity.as_deref(), *max_n, *list),
        Command::Enumerate { kind, n, count } => enumerate(&mut out, &config, *kind, *n, *count),
    };
    out.w.flush()?;
    result
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Other(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(4)
        }
    }
}
