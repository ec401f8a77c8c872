//! Command-line front end. [`run`] is the whole program; the binary only
//! forwards process arguments and exits with the returned code.
//!
//! Exit codes: 0 success (budget truncation included), 2 usage, 3 parse,
//! 4 validation, 5 resource or I/O.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{product, reduce_to_binary, sum};
use crate::analysis::classify;
use crate::dot::export_dot;
use crate::error::{Error, ErrorKind, Result};
use crate::evolve::{evolve, EvolveOptions, DEFAULT_MAX_STATES};
use crate::system::{parse_system, MultiwaySystem};
use crate::tm::{compile_tm, enchain, parse_tm};
use crate::zoo;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_VALIDATION: i32 = 4;
pub const EXIT_RESOURCE: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "multiway", version, about = "Simulate, classify, compile and combine string multiway systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Sum,
    Product,
    Reduce,
}

impl Op {
    fn name(self) -> &'static str {
        match self {
            Op::Sum => "sum",
            Op::Product => "product",
            Op::Reduce => "reduce",
        }
    }

    fn arity(self) -> usize {
        match self {
            Op::Reduce => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evolve a rule file and print its growth series.
    Simulate {
        file: PathBuf,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        horizon: u64,
        #[arg(long, env = "MULTIWAY_BUDGET", default_value_t = DEFAULT_MAX_STATES as u64, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evolve a rule file and print a JSON classification report.
    Classify {
        file: PathBuf,
        #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
        horizon: u64,
        #[arg(long, env = "MULTIWAY_BUDGET", default_value_t = DEFAULT_MAX_STATES as u64, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compile a Turing machine file into a rule file.
    CompileTm {
        file: PathBuf,
        /// Add the restart shuttle and Z branches.
        #[arg(long)]
        enchain: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Combine rule files; writes the result and a `.json` provenance sidecar.
    Combine {
        #[arg(long, value_enum)]
        op: Op,
        #[arg(required = true, num_args = 1..=2)]
        files: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Named example systems.
    Zoo {
        #[command(subcommand)]
        command: ZooCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum ZooCommand {
    /// List entries with their parameters and expected classes.
    List,
    /// Write an entry as a rule file; with `--out`, also a `.json` manifest.
    Emit {
        name: String,
        /// Parameters as `KEY=VALUE`, e.g. `N=4`.
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn emit(out: &Option<PathBuf>, stdout: &mut dyn Write, text: &str) -> Result<()> {
    match out {
        Some(p) => write_file(p, text),
        None => stdout.write_all(text.as_bytes()).map_err(Error::from),
    }
}

fn header(parts: &[(&str, String)]) -> String {
    let mut s = format!("multiway {VERSION}");
    for (k, v) in parts {
        let _ = write!(s, " {k}={v}");
    }
    s
}

fn sidecar(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

fn load_system(path: &Path) -> Result<MultiwaySystem> {
    parse_system(&read(path)?)
}

fn simulate(file: &Path, horizon: u64, budget: u64, format: Format, out: &Option<PathBuf>, stdout: &mut dyn Write) -> Result<()> {
    let m = load_system(file)?;
    let opts = EvolveOptions::new(horizon as usize).budget(budget as usize);
    let opts = if format == Format::Dot { opts } else { opts.without_edges() };
    let g = evolve(&m, opts);
    let s = g.growth_series();
    let head = header(&[
        ("command", "simulate".into()),
        ("input", file.display().to_string()),
        ("horizon", horizon.to_string()),
        ("budget", budget.to_string()),
    ]);
    let text = match format {
        Format::Csv => {
            let mut t = format!("# {head}\n# generation = d + 1\n# truncated={}\nd,count,maxlen\n", g.truncated);
            for d in 0..s.len() {
                let _ = writeln!(t, "{d},{},{}", s.counts[d], s.max_len[d]);
            }
            t
        }
        Format::Json => {
            let layers: Vec<_> = (0..s.len())
                .map(|d| json!({"d": d, "generation": d + 1, "count": s.counts[d], "maxlen": s.max_len[d]}))
                .collect();
            let v = json!({
                "generator": head,
                "truncated": g.truncated,
                "exhausted": g.exhausted,
                "layers": layers,
            });
            serde_json::to_string_pretty(&v).expect("serialisable") + "\n"
        }
        Format::Dot => format!("// {head}\n{}", export_dot(&g, &m.alphabet)),
    };
    emit(out, stdout, &text)
}

fn classify_cmd(file: &Path, horizon: u64, budget: u64, out: &Option<PathBuf>, stdout: &mut dyn Write) -> Result<()> {
    let m = load_system(file)?;
    let g = evolve(&m, EvolveOptions::new(horizon as usize).budget(budget as usize).without_edges());
    let report = classify(&g.growth_series())?;
    let head = header(&[
        ("command", "classify".into()),
        ("input", file.display().to_string()),
        ("horizon", horizon.to_string()),
        ("budget", budget.to_string()),
    ]);
    let mut v = serde_json::to_value(&report).expect("serialisable");
    v["generator"] = json!(head);
    v["truncated"] = json!(g.truncated);
    v["class"] = json!(report.class());
    emit(out, stdout, &(serde_json::to_string_pretty(&v).expect("serialisable") + "\n"))
}

fn compile_cmd(file: &Path, enchained: bool, out: &Option<PathBuf>, stdout: &mut dyn Write) -> Result<()> {
    let tm = parse_tm(&read(file)?)?;
    let m = if enchained { enchain(&tm)? } else { compile_tm(&tm)? };
    let head = header(&[
        ("command", "compile-tm".into()),
        ("input", file.display().to_string()),
        ("enchain", enchained.to_string()),
    ]);
    emit(out, stdout, &m.to_rule_file(&[head]))
}

fn combine_cmd(op: Op, files: &[PathBuf], out: &Path) -> Result<()> {
    let ops: Vec<MultiwaySystem> = files.iter().map(|f| load_system(f)).collect::<Result<_>>()?;
    let combined = match (op, ops.as_slice()) {
        (Op::Sum, [a, b]) => sum(a, b)?,
        (Op::Product, [a, b]) => product(a, b)?,
        (Op::Reduce, [a]) => reduce_to_binary(a),
        _ => unreachable!("arity checked by the caller"),
    };
    let op_name = op.name();
    let inputs: Vec<String> = files.iter().map(|f| f.display().to_string()).collect();
    let head = header(&[("command", "combine".into()), ("op", op_name.into()), ("inputs", inputs.join(","))]);
    write_file(out, &combined.system.to_rule_file(&[head.clone()]))?;
    let mut prov = combined.provenance_json();
    prov["generator"] = json!(head);
    write_file(&sidecar(out), &(serde_json::to_string_pretty(&prov).expect("serialisable") + "\n"))
}

fn zoo_cmd(cmd: &ZooCommand, stdout: &mut dyn Write) -> Result<()> {
    match cmd {
        ZooCommand::List => {
            let mut t = String::new();
            for (name, defaults) in zoo::ENTRIES {
                let e = zoo::by_name(name, &BTreeMap::new())?;
                let ps: Vec<String> = defaults.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(t, "{name}\t{}\t{}", ps.join(" "), e.expected_class.name());
            }
            emit(&None, stdout, &t)
        }
        ZooCommand::Emit { name, params, out } => {
            let mut p = BTreeMap::new();
            for kv in params {
                let (k, v) = kv.split_once('=').ok_or_else(|| Error::Zoo(format!("expected KEY=VALUE, got `{kv}`")))?;
                let v: u64 = v.parse().map_err(|_| Error::Zoo(format!("`{v}` is not a number")))?;
                p.insert(k.to_string(), v);
            }
            let e = zoo::by_name(name, &p)?;
            let ps: Vec<String> = e.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let head = header(&[("command", "zoo-emit".into()), ("name", name.clone()), ("params", ps.join(","))]);
            emit(out, stdout, &e.system.to_rule_file(&[head.clone()]))?;
            if let Some(path) = out {
                let mut manifest = e.manifest(16);
                manifest["generator"] = json!(head);
                write_file(&sidecar(path), &(serde_json::to_string_pretty(&manifest).expect("serialisable") + "\n"))?;
            }
            Ok(())
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e.kind() {
        ErrorKind::Parse => EXIT_PARSE,
        ErrorKind::Validation => EXIT_VALIDATION,
        ErrorKind::Resource => EXIT_RESOURCE,
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Diagnostics go to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match &cli.command {
        Command::Simulate { file, horizon, budget, format, out } => simulate(file, *horizon, *budget, *format, out, stdout),
        Command::Classify { file, horizon, budget, out } => classify_cmd(file, *horizon, *budget, out, stdout),
        Command::CompileTm { file, enchain, out } => compile_cmd(file, *enchain, out, stdout),
        Command::Combine { op, files, .. } if files.len() != op.arity() => {
            let _ = writeln!(stderr, "error: `--op {}` takes {} input file(s), got {}", op.name(), op.arity(), files.len());
            return EXIT_USAGE;
        }
        Command::Combine { op, files, out } => combine_cmd(*op, files, out),
        Command::Zoo { command } => zoo_cmd(command, stdout),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}
