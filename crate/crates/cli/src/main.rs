use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use atl_core::canon::{coordinates, ess_equal, LabelString};
use atl_core::projectors::{extremal, highest, jones_wenzl, lowest};
use atl_core::rep::phi;
use atl_core::verify::Suite;
use atl_core::{Mode, Morphism};
use clap::{Parser, Subcommand, ValueEnum};

mod render;

#[derive(Parser)]
#[command(name = "atl", version, about = "Exact affine Temperley-Lieb calculus at q = 1")]
struct Cli {
    /// Quotient by the essential circle, or keep it.
    #[arg(long, global = true, env = "ATL_MODE", default_value = "quotient", value_parser = parse_mode)]
    mode: Mode,
    /// Largest strand count accepted for projectors and inputs.
    #[arg(long, global = true, env = "ATL_MAX_STRANDS", default_value_t = 8)]
    max_strands: usize,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Build a projector.
    Projector {
        kind: Kind,
        m: usize,
        #[arg(long, value_enum, default_value_t = Out::Json)]
        out: Out,
        /// Write here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a verification suite; exit 0 iff every line passes.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(default_value_t = 3)]
        max: usize,
    },
    /// Apply an operation to morphism files: `LHS [RHS] OP`.
    Eval {
        #[arg(num_args = 2..=3, required = true, value_names = ["LHS", "RHS", "OP"])]
        args: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Draw a morphism file.
    Render {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Extremal,
    Jw,
    Highest,
    Lowest,
}

#[derive(Clone, Copy, ValueEnum)]
enum Out {
    Json,
    Matrix,
    Svg,
    Tikz,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Svg,
    Tikz,
    Ascii,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Op {
    Compose,
    Tensor,
    Ptrace,
    Phi,
    Coords,
    Eq,
}

impl Op {
    fn parse(s: &str) -> Result<Op> {
        Ok(match s {
            "compose" => Op::Compose,
            "tensor" => Op::Tensor,
            "ptrace" => Op::Ptrace,
            "phi" => Op::Phi,
            "coords" => Op::Coords,
            "eq" => Op::Eq,
            _ => bail!("unknown operation {s:?}; expected compose, tensor, ptrace, phi, coords or eq"),
        })
    }

    fn binary(self) -> bool {
        matches!(self, Op::Compose | Op::Tensor | Op::Eq)
    }
}

fn parse_mode(s: &str) -> std::result::Result<Mode, String> {
    s.parse().map_err(|e: atl_core::AtlError| e.to_string())
}

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse().map_err(|_| format!("expected one of {}", Suite::NAMES.join(", ")))
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(path: &str, cli: &Cli) -> Result<Morphism> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    let x = Morphism::from_json(&text, cli.mode).with_context(|| format!("parsing {path}"))?;
    if x.dom().max(x.cod()) > cli.max_strands {
        bail!("{path} has {} strands, above the bound {}", x.dom().max(x.cod()), cli.max_strands);
    }
    Ok(x)
}

fn projector(cli: &Cli, kind: Kind, m: usize, out: Out, output: Option<&Path>) -> Result<()> {
    if m > cli.max_strands {
        bail!("projector on {m} strands exceeds the bound {}", cli.max_strands);
    }
    let x = match kind {
        Kind::Extremal => extremal(m),
        Kind::Jw => jones_wenzl(m)?,
        Kind::Highest => highest(m)?,
        Kind::Lowest => lowest(m)?,
    };
    let x = x.with_mode(cli.mode);
    let text = match out {
        Out::Json => x.to_json_pretty() + "\n",
        Out::Matrix => phi(&x)?.to_json() + "\n",
        Out::Svg => render::svg(&x),
        Out::Tikz => render::tikz(&x),
    };
    emit(&text, output)
}

fn eval(cli: &Cli, args: &[String], output: Option<&Path>) -> Result<()> {
    let op = Op::parse(args.last().unwrap())?;
    let files = &args[..args.len() - 1];
    if op.binary() != (files.len() == 2) {
        bail!("operation {} takes {} file(s)", args.last().unwrap(), if op.binary() { 2 } else { 1 });
    }
    let x = load(&files[0], cli)?;
    let text = match op {
        Op::Compose => x.try_compose(&load(&files[1], cli)?)?.reduce().to_json_pretty() + "\n",
        Op::Tensor => x.tensor(&load(&files[1], cli)?)?.to_json_pretty() + "\n",
        Op::Ptrace => x.partial_trace()?.reduce().to_json_pretty() + "\n",
        Op::Phi => phi(&x)?.to_json() + "\n",
        Op::Coords => {
            let labels = LabelString::all(x.dom() + x.cod()).unwrap_or_default();
            let coords = coordinates(&x)?;
            let pairs: Vec<serde_json::Value> = labels
                .iter()
                .zip(&coords)
                .map(|(l, c)| serde_json::json!({ "labels": l.to_string(), "coeff": c.to_string() }))
                .collect();
            serde_json::to_string_pretty(&pairs)? + "\n"
        }
        Op::Eq => {
            let y = load(&files[1], cli)?;
            let syn = x == y;
            let ess = ess_equal(&x, &y)?;
            format!("syntactic {syn}\ness {ess}\n")
        }
    };
    emit(&text, output)
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.verb {
        Verb::Projector { kind, m, out, output } => projector(cli, *kind, *m, *out, output.as_deref())?,
        Verb::Verify { suite, max } => {
            let report = suite.run(*max)?;
            print!("{report}");
            let failed = report.failures().count();
            println!("{} checks, {} failed", report.checks.len(), failed);
            return Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE });
        }
        Verb::Eval { args, output } => eval(cli, args, output.as_deref())?,
        Verb::Render { input, format, output } => {
            let x = load(&input.to_string_lossy(), cli)?;
            let text = match format {
                Format::Svg => render::svg(&x),
                Format::Tikz => render::tikz(&x),
                Format::Ascii => render::ascii(&x),
            };
            emit(&text, output.as_deref())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
