//! `particat`: command-line access to partition categories, fusion and the matrix model.

mod commands;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use particat::{Error, Limits};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "particat", version, about = "Partition categories, fusion rules and the partition matrix model")]
pub struct Cli {
    /// TOML file overriding the size caps.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Report elapsed time; off by default so output is reproducible.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Fusion of two projective partitions or labels.
    ///
    /// Categories are p, p2, nc, nc2, ncb, nceven, ucol, the family names
    /// s, o, b, h, u, or gen:<file> with one generator per line.
    Fuse {
        #[arg(long)]
        category: String,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// Closure bound for `gen:` categories.
        #[arg(long)]
        max_points: Option<usize>,
    },
    /// Equivalence classes of projectives in `C(k, k)`, with ranks when `--N` is given.
    Decompose {
        #[arg(long)]
        category: String,
        #[arg(long)]
        power: usize,
        #[arg(long = "N")]
        n: Option<usize>,
        #[arg(long)]
        max_points: Option<usize>,
    },
    /// Membership of a partition.
    Member {
        #[arg(long)]
        category: String,
        partition: String,
        #[arg(long)]
        max_points: Option<usize>,
    },
    /// The symmetry group of a projective partition.
    Sym {
        #[arg(long)]
        category: String,
        partition: String,
        #[arg(long)]
        max_points: Option<usize>,
    },
    /// Runs an exhaustive check suite: functor, rank, fusion, structure or all.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 6)]
        max_points: usize,
        #[arg(long = "N", default_value_t = 3)]
        n: usize,
    },
    /// Kernel dimension of the map from `C(k, k)` to matrices.
    Brauer {
        #[arg(long)]
        category: String,
        #[arg(long)]
        k: usize,
        #[arg(long = "N")]
        n: usize,
        #[arg(long)]
        max_points: Option<usize>,
    },
    /// Fusion table of a free family on small labels, computed on partitions.
    Table {
        #[arg(long)]
        category: String,
        /// Largest label (`S`, `O`, `B`) or word length (`H`, `U`).
        #[arg(long, default_value_t = 2)]
        max_label: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Fuse { .. } => "fuse",
            Command::Decompose { .. } => "decompose",
            Command::Member { .. } => "member",
            Command::Sym { .. } => "sym",
            Command::Verify { .. } => "verify",
            Command::Brauer { .. } => "brauer",
            Command::Table { .. } => "table",
        }
    }
}

/// Failures of the front end, mapped to exit codes.
#[derive(Debug)]
pub enum Failure {
    Core(Error),
    Io(String),
    Config(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Core(Error::Parse { .. } | Error::ColorLength { .. }) => 2,
            Failure::Config(_) => 2,
            Failure::Core(Error::Bounds { .. }) => 3,
            Failure::Core(Error::UnknownMembership(_)) => 4,
            _ => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self.code() {
            2 => "parse",
            3 => "bounds",
            4 => "unknown",
            _ => "error",
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Io(m) | Failure::Config(m) => m.clone(),
        }
    }
}

/// What a command hands back: its echoed inputs, result and the number of checks run.
pub struct Output {
    pub inputs: Value,
    pub result: Value,
    pub checks: usize,
    /// Exit code for a completed run (4 when `member` answers unknown).
    pub code: u8,
}

fn load_limits(path: &Option<PathBuf>) -> Result<Limits, Failure> {
    match path {
        None => Ok(Limits::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?;
            toml::from_str(&text).map_err(|e| Failure::Config(format!("{}: {e}", p.display())))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let name = cli.command.name();
    let outcome = load_limits(&cli.config).and_then(|limits| commands::run(&cli.command, &limits));
    let elapsed = cli.timing.then(|| start.elapsed().as_millis() as u64);
    let (doc, code) = match outcome {
        Ok(out) => (
            json!({
                "schema": "particat/1",
                "command": name,
                "inputs": out.inputs,
                "result": out.result,
                "stats": { "elapsed_ms": elapsed, "checks": out.checks },
            }),
            out.code,
        ),
        Err(f) => {
            eprintln!("particat: {}", f.message());
            (
                json!({
                    "schema": "particat/1",
                    "command": name,
                    "error": { "kind": f.kind(), "message": f.message() },
                    "stats": { "elapsed_ms": elapsed, "checks": 0 },
                }),
                f.code(),
            )
        }
    };
    let text = if cli.pretty { serde_json::to_string_pretty(&doc) } else { serde_json::to_string(&doc) };
    println!("{}", text.expect("json values serialize"));
    ExitCode::from(code)
}
