//! Command-line front end: argument parsing, text and JSON output, the knot
//! catalog and the verification sweep.

mod catalog;
mod sweep;

pub use catalog::{Catalog, CatalogEntry, Mismatch};
pub use sweep::{enumerate, verify, verify_case, Failure, Signs, SweepSpec, SweepSummary};

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::diagram::{orient, parse_pd, plat_closure, write_pd, DiagramError, PlanarDiagram};
use crate::invariants::{
    analyze, check_mirror, check_sum, diagram_invariants, InvariantError, KnotSpec,
};

/// Catalog looked up when `--catalog` is not given; the builtin copy is
/// used if this file does not exist.
pub const DEFAULT_CATALOG: &str = "data/catalog.json";

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("catalog: {0}")]
    Catalog(String),
    #[error("{0}")]
    Io(String),
    #[error("{failed} of {total} checks failed")]
    Failed { failed: usize, total: usize },
}

impl CliError {
    /// 2 for unreadable input, 3 for links, 4 for failed identities.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invariant(e) if e.is_link() => 3,
            CliError::Invariant(InvariantError::Conway(_))
            | CliError::Invariant(InvariantError::Diagram(
                DiagramError::MalformedPd { .. }
                | DiagramError::BadPairing(_)
                | DiagramError::NotPlanar { .. }
                | DiagramError::Split
                | DiagramError::InconsistentOrientation(_),
            ))
            | CliError::Catalog(_) => 2,
            CliError::Io(_) => 1,
            CliError::Invariant(_) | CliError::Failed { .. } => 4,
        }
    }

    fn kind(&self) -> &'static str {
        match self.exit_code() {
            1 => "io",
            2 => "parse",
            3 => "link",
            _ => "identity",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "twobridge", version, about = "Exact invariants of two-bridge knots")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print the fork automaton state after every braid letter (stderr).
    #[arg(long, global = true)]
    pub trace: bool,
    /// Knot catalog; names in it may stand in for Conway notations.
    #[arg(long, global = true, value_name = "PATH")]
    pub catalog: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full invariant report of one knot, e.g. `invariants 2,1,1`.
    Invariants {
        #[arg(allow_hyphen_values = true)]
        conway: String,
    },
    /// Check every identity on all uniform-sign notations within bounds.
    Verify {
        #[arg(long)]
        max_sum: u32,
        #[arg(long, default_value_t = 5)]
        max_len: usize,
        #[arg(long, value_enum, default_value_t = Signs::Both)]
        signs: Signs,
        /// Run on one thread.
        #[arg(long)]
        serial: bool,
    },
    /// Connected sum law on the spliced diagram.
    Sum {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Mirror law through the mirrored braid; `""` is the unknot.
    Mirror {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Read or write PD codes.
    Pd {
        #[command(subcommand)]
        action: PdAction,
    },
    /// Check every catalog entry against its expected values.
    Catalog,
}

#[derive(Debug, Subcommand)]
pub enum PdAction {
    /// Write the plat diagram of a knot; `-` writes to stdout.
    Export {
        path: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        knot: String,
    },
    /// Diagram-level invariants of a PD file.
    Import { path: PathBuf },
}

struct Ctx<'a> {
    json: bool,
    trace: bool,
    catalog: Catalog,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn resolve(&self, text: &str) -> Result<KnotSpec, CliError> {
        if let Some(entry) = self.catalog.get(text.trim()) {
            return Ok(entry.conway.clone());
        }
        text.parse::<KnotSpec>()
            .map_err(|e| CliError::Invariant(e.into()))
    }

    fn emit<T: Serialize>(&mut self, value: &T, text: impl FnOnce() -> String) -> Result<(), CliError> {
        let body = if self.json {
            serde_json::to_string_pretty(value).expect("outputs serialize")
        } else {
            text()
        };
        writeln!(self.out, "{body}").map_err(|e| CliError::Io(e.to_string()))
    }
}

fn load_catalog(path: Option<&Path>) -> Result<Catalog, CliError> {
    match path {
        Some(p) => Catalog::load(p),
        None if Path::new(DEFAULT_CATALOG).is_file() => Catalog::load(Path::new(DEFAULT_CATALOG)),
        None => Ok(Catalog::builtin()),
    }
}

fn text_lines(value: &serde_json::Value) -> String {
    fn flat(v: &serde_json::Value) -> String {
        match v {
            serde_json::Value::Object(m) if m.contains_key("num") && m.len() == 2 => {
                if m["den"] == 1 {
                    m["num"].to_string()
                } else {
                    format!("{}/{}", m["num"], m["den"])
                }
            }
            serde_json::Value::String(s) => s.clone(),
            other => other.to_string(),
        }
    }
    let serde_json::Value::Object(map) = value else {
        return flat(value);
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    map.iter()
        .map(|(k, v)| format!("{k:<width$}  {}", flat(v)))
        .collect::<Vec<_>>()
        .join("\n")
}

fn cmd_invariants(ctx: &mut Ctx, conway: &str) -> Result<(), CliError> {
    let knot = ctx.resolve(conway)?;
    let a = analyze(&knot, ctx.trace)?;
    for line in &a.trace {
        writeln!(ctx.err, "{line}").map_err(|e| CliError::Io(e.to_string()))?;
    }
    let value = serde_json::to_value(&a.report).expect("reports serialize");
    ctx.emit(&a.report, || text_lines(&value))
}

fn cmd_verify(ctx: &mut Ctx, spec: SweepSpec, parallel: bool) -> Result<(), CliError> {
    let summary = verify(&spec, parallel);
    ctx.emit(&summary, || {
        let mut s = summary.to_string();
        if let Some(f) = summary.failures.first() {
            s.push_str(&format!("\nfirst failure {}: {}", f.conway, f.message));
        }
        s
    })?;
    if summary.passed() {
        Ok(())
    } else {
        Err(CliError::Failed {
            failed: summary.failures.len(),
            total: summary.cases,
        })
    }
}

fn cmd_sum(ctx: &mut Ctx, a: &str, b: &str) -> Result<(), CliError> {
    let v = check_sum(&ctx.resolve(a)?, &ctx.resolve(b)?)?;
    ctx.emit(&v, || {
        format!(
            "{} # {}\nsigma  {} + {} -> {}\ndet    {} * {} -> {}\nr      {} + {} -> {}\nadditive: {}",
            v.first, v.second,
            v.parts[0].sigma, v.parts[1].sigma, v.sum.sigma,
            v.parts[0].det, v.parts[1].det, v.sum.det,
            v.parts[0].r, v.parts[1].r, v.sum.r,
            v.additive
        )
    })?;
    if v.additive {
        Ok(())
    } else {
        Err(CliError::Failed { failed: 1, total: 1 })
    }
}

fn cmd_mirror(ctx: &mut Ctx, a: &str) -> Result<(), CliError> {
    let v = check_mirror(&ctx.resolve(a)?)?;
    let out = json!({
        "knot": v.knot,
        "sigma": v.original.sigma,
        "r": v.original.r,
        "det": v.original.det,
        "mirror": v.mirror,
        "sigma_antisymmetric": v.sigma_antisymmetric,
        "r_antisymmetric": v.r_antisymmetric,
        "det_equal": v.det_equal,
        "antisymmetric": v.antisymmetric,
    });
    ctx.emit(&out, || {
        format!(
            "{}\nsigma  {} -> {}\nr      {} -> {}\ndet    {} -> {}\nantisymmetric: {}",
            v.knot,
            v.original.sigma, v.mirror.sigma,
            v.original.r, v.mirror.r,
            v.original.det, v.mirror.det,
            v.antisymmetric
        )
    })?;
    if v.antisymmetric {
        Ok(())
    } else {
        Err(CliError::Failed { failed: 1, total: 1 })
    }
}

fn cmd_pd(ctx: &mut Ctx, action: &PdAction) -> Result<(), CliError> {
    match action {
        PdAction::Export { path, knot } => {
            let diagram = match ctx.resolve(knot)? {
                KnotSpec::Unknot => PlanarDiagram::unknot(),
                KnotSpec::Conway(c) => plat_closure(
                    &c.normalize_odd()
                        .to_braid()
                        .map_err(|e| CliError::Invariant(e.into()))?,
                ),
            };
            let oriented = orient(&diagram).map_err(|e| CliError::Invariant(e.into()))?;
            let text = write_pd(&oriented);
            if path.as_os_str() == "-" {
                write!(ctx.out, "{text}").map_err(|e| CliError::Io(e.to_string()))
            } else {
                std::fs::write(path, text)
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
            }
        }
        PdAction::Import { path } => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            let oriented = parse_pd(&text).map_err(|e| CliError::Invariant(e.into()))?;
            let inv = diagram_invariants(&oriented)?;
            let value = serde_json::to_value(&inv).expect("reports serialize");
            ctx.emit(&inv, || text_lines(&value))
        }
    }
}

fn cmd_catalog(ctx: &mut Ctx) -> Result<(), CliError> {
    let mut rows = Vec::new();
    let mut failed = 0;
    for entry in &ctx.catalog.entries {
        let (ok, detail) = match entry.check() {
            Ok(m) if m.is_empty() => (true, json!([])),
            Ok(m) => (false, json!(m)),
            Err(e) => (false, json!(e.to_string())),
        };
        failed += usize::from(!ok);
        rows.push(json!({"name": entry.name, "conway": entry.conway, "ok": ok, "detail": detail}));
    }
    let total = rows.len();
    let out = json!({"entries": rows, "failures": failed});
    ctx.emit(&out, || {
        let mut lines: Vec<String> = rows
            .iter()
            .map(|r| {
                let mark = if r["ok"] == true { "ok  " } else { "FAIL" };
                format!("{mark} {:<6} {}", r["name"].as_str().unwrap_or(""), r["conway"])
            })
            .collect();
        lines.push(format!("{total} entries, {failed} failures"));
        lines.join("\n")
    })?;
    if failed == 0 {
        Ok(())
    } else {
        Err(CliError::Failed { failed, total })
    }
}

/// Runs a parsed command line, writing results to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let catalog = match load_catalog(cli.catalog.as_deref()) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return e.exit_code();
        }
    };
    let json = cli.json;
    let mut ctx = Ctx {
        json,
        trace: cli.trace,
        catalog,
        out,
        err,
    };
    let result = match &cli.command {
        Command::Invariants { conway } => cmd_invariants(&mut ctx, conway),
        Command::Verify {
            max_sum,
            max_len,
            signs,
            serial,
        } => cmd_verify(
            &mut ctx,
            SweepSpec {
                max_len: *max_len,
                max_sum: *max_sum,
                signs: *signs,
            },
            !serial,
        ),
        Command::Sum { a, b } => cmd_sum(&mut ctx, a, b),
        Command::Mirror { a } => cmd_mirror(&mut ctx, a),
        Command::Pd { action } => cmd_pd(&mut ctx, action),
        Command::Catalog => cmd_catalog(&mut ctx),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let code = e.exit_code();
            if json && !matches!(e, CliError::Failed { .. }) {
                let body = json!({"error": e.kind(), "message": e.to_string(), "exit_code": code});
                let _ = writeln!(ctx.out, "{body}");
            } else {
                let _ = writeln!(ctx.err, "error: {e}");
            }
            code
        }
    }
}

/// Parses `args` (program name first) and runs them.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let _ = write!(err, "{e}");
            if e.use_stderr() {
                2
            } else {
                0
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("twobridge").chain(args.iter().copied());
        let code = run_from(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn invariants_json() {
        let (code, out, _) = call(&["--json", "invariants", "3"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["R"], json!({"num": 1, "den": 1}));
        assert_eq!(v["lens_space"], "L(3,1)");
    }

    #[test]
    fn invariants_text_and_names() {
        let (code, out, _) = call(&["invariants", "4_1"]);
        assert_eq!(code, 0);
        assert!(out.contains("det"), "{out}");
        assert!(out.contains("5/2"), "{out}");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["invariants", "2,-2"]).0, 2);
        assert_eq!(call(&["invariants", "2"]).0, 3);
        assert_eq!(call(&["invariants", "-3"]).0, 0);
        let (code, out, _) = call(&["--json", "invariants", "2"]);
        assert_eq!(code, 3);
        assert!(out.contains("\"link\""), "{out}");
    }

    #[test]
    fn even_notation_normalized() {
        let (_, out, _) = call(&["--json", "invariants", "2,2"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["conway"], json!([2, 1, 1]));
        assert_eq!(v["det"], 5);
    }

    #[test]
    fn trace_goes_to_stderr() {
        let (code, out, err) = call(&["--json", "--trace", "invariants", "2,1,1"]);
        assert_eq!(code, 0);
        assert_eq!(err.lines().count(), 5);
        assert!(serde_json::from_str::<serde_json::Value>(&out).is_ok());
    }

    #[test]
    fn sum_and_mirror() {
        let (code, out, _) = call(&["--json", "sum", "3", "3"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["r_total"], json!({"num": 3, "den": 1}));
        assert_eq!(v["additive"], true);
        let (code, out, _) = call(&["--json", "mirror", "3"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["mirror"]["r"], json!({"num": -3, "den": 2}));
        assert_eq!(v["antisymmetric"], true);
        let (code, out, _) = call(&["--json", "mirror", ""]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["sigma"], 0);
        assert_eq!(v["mirror"]["sigma"], 0);
    }

    #[test]
    fn verify_small() {
        let (code, out, _) = call(&["verify", "--max-sum", "0"]);
        assert_eq!((code, out.trim()), (0, "0 cases, 0 failures"));
        let (code, out, _) = call(&["verify", "--max-sum", "5", "--max-len", "3"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.ends_with("0 failures\n"), "{out}");
    }

    #[test]
    fn catalog_command_passes() {
        let (code, out, _) = call(&["catalog"]);
        assert_eq!(code, 0, "{out}");
    }
}
