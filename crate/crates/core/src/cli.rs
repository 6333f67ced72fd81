//! Command-line front end.
//!
//! Exit codes: `0` success, `1` a verification failed (catalog mismatch,
//! failed certificate, audit survivors), `2` invalid invocation (bad flags,
//! a type that does not exist at the requested index, unwritable output).

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::enumerator::{audit, classify, exceptional_graph, with_threads, SearchOptions};
use crate::error::Error;
use crate::multiplet::json::{multiplet_json, MultipletJson};
use crate::multiplet::CatalogType;
use crate::toric::{toric_report, ToricFamily};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "delpezzo", version, about = "Log del Pezzo surfaces of fixed index with large volume")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify surfaces of index `a` with volume at least `2a`.
    Classify {
        #[arg(long)]
        a: u32,
        /// Write the JSON report to PATH, or to stdout when PATH is omitted or `-`.
        #[arg(long, value_name = "PATH", num_args = 0..=1, default_missing_value = "-")]
        json: Option<String>,
        /// Worker threads; 0 uses every core.
        #[arg(long, env = "DELPEZZO_THREADS", default_value_t = 0)]
        threads: usize,
        /// Node limit per search cell.
        #[arg(long, default_value_t = SearchOptions::default().max_nodes)]
        max_nodes: u64,
    },
    /// Certify every configuration of a catalog type.
    VerifyType {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        a: u32,
        #[arg(long, value_name = "PATH", num_args = 0..=1, default_missing_value = "-")]
        json: Option<String>,
    },
    /// Resolve one of the toric families.
    Toric {
        #[arg(long)]
        family: String,
        #[arg(long)]
        a: u32,
        #[arg(long, value_name = "PATH", num_args = 0..=1, default_missing_value = "-")]
        json: Option<String>,
    },
    /// Export the weighted exceptional graph of a catalog configuration.
    Dualgraph {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        a: u32,
        /// Configuration label such as `II[1,1]`; defaults to the first one.
        #[arg(long)]
        config: Option<String>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_name = "PATH", num_args = 0..=1, default_missing_value = "-")]
        json: Option<String>,
    },
    /// Search the cells removed by the exclusion predicates.
    Audit {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        nmax: u32,
        /// Restrict the sweep to these values of `h0`.
        #[arg(long, value_delimiter = ',')]
        h0: Option<Vec<i64>>,
        #[arg(long, value_name = "PATH", num_args = 0..=1, default_missing_value = "-")]
        json: Option<String>,
        #[arg(long, env = "DELPEZZO_THREADS", default_value_t = 0)]
        threads: usize,
        #[arg(long, default_value_t = SearchOptions::default().max_nodes)]
        max_nodes: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

/// Output of a run: what goes to stdout and stderr, and the exit code.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct ErrorJson<'a> {
    error: &'a str,
    message: String,
    exit_code: i32,
}

struct Failure {
    code: i32,
    kind: &'static str,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        kind: "usage",
        message: message.into(),
    }
}

fn internal(e: Error) -> Failure {
    Failure {
        code: EXIT_VERIFICATION,
        kind: "verification",
        message: e.to_string(),
    }
}

fn check_a(a: u32) -> Result<(), Failure> {
    if a < 2 {
        return Err(usage(format!("--a must be at least 2, got {a}")));
    }
    Ok(())
}

fn catalog_type(name: &str, a: u32) -> Result<CatalogType, Failure> {
    check_a(a)?;
    let ty: CatalogType = name.parse().map_err(|e: Error| usage(e.to_string()))?;
    if !ty.valid_for(a) {
        return Err(usage(format!("type {ty} does not exist at a = {a}")));
    }
    Ok(ty)
}

/// Sends `json` to the `--json` destination; returns what belongs on stdout.
fn emit_json(dest: &str, json: &impl Serialize) -> Result<String, Failure> {
    let text = serde_json::to_string_pretty(json).map_err(|e| internal(Error::Inconsistent(e.to_string())))? + "\n";
    if dest == "-" {
        return Ok(text);
    }
    fs::write(dest, text).map_err(|e| usage(format!("cannot write {dest}: {e}")))?;
    Ok(String::new())
}

fn with_json(text: String, json: Option<&String>, value: &impl Serialize) -> Result<String, Failure> {
    match json {
        Some(dest) if dest == "-" => emit_json(dest, value),
        Some(dest) => {
            emit_json(dest, value)?;
            Ok(text)
        }
        None => Ok(text),
    }
}

#[derive(Serialize)]
struct VerifiedConfig {
    label: String,
    pass: bool,
    multiplet: MultipletJson,
}

fn verify_type_text(ty: CatalogType, a: u32, configs: &[VerifiedConfig]) -> String {
    use std::fmt::Write;
    let mut s = String::new();
    let _ = writeln!(s, "type {ty} at a = {a}: {} configuration(s)", configs.len());
    for c in configs {
        let m = &c.multiplet;
        let cert = &m.certificates;
        let _ = writeln!(s, "{}", c.label);
        let _ = writeln!(s, "  base {}  b = {}", m.base, m.b);
        let _ = writeln!(s, "  volume {}", m.volume);
        let _ = writeln!(s, "  index {}", m.index);
        let bp = &cert.basic_pair;
        let checks = [
            ("E_0 nonzero", bp.nonzero),
            ("E_0 effective", bp.effective),
            ("coefficients in 1..a-1", bp.coefficients_in_range),
            ("simple normal crossings", bp.snc),
            ("K + L_0 nef", bp.k_plus_l_nef),
            ("(K + L_0 . L_0) > 0", bp.k_plus_l_dot_l > 0),
            ("L_0 orthogonal to E_0", bp.l_orthogonal),
            ("component self-intersection bounds", bp.component_bounds),
            ("fundamental", cert.fundamental == Some(true)),
            ("ladder identities", cert.identities.is_empty()),
            ("local lemmas", cert.local_lemmas.is_empty()),
            ("index certificate", cert.index_is_a),
        ];
        for (name, ok) in checks {
            let _ = writeln!(s, "  [{}] {name}", if ok { "pass" } else { "FAIL" });
        }
    }
    let all = configs.iter().all(|c| c.pass);
    let _ = writeln!(s, "verdict: {}", if all { "pass" } else { "FAIL" });
    s
}

fn execute(cmd: &Command) -> Result<(i32, String), Failure> {
    match cmd {
        Command::Classify {
            a,
            json,
            threads,
            max_nodes,
        } => {
            check_a(*a)?;
            let opts = SearchOptions {
                max_nodes: *max_nodes,
                ..SearchOptions::default()
            };
            let report = with_threads(*threads, || classify(*a, &opts))
                .map_err(|e| usage(e.to_string()))?
                .map_err(internal)?;
            let code = if report.passed() || !report.within_hypotheses {
                EXIT_OK
            } else {
                EXIT_VERIFICATION
            };
            Ok((code, with_json(report.to_text(), json.as_ref(), &report)?))
        }
        Command::VerifyType { ty, a, json } => {
            let ty = catalog_type(ty, *a)?;
            let configs: Vec<VerifiedConfig> = ty
                .entries(*a)
                .map_err(internal)?
                .into_iter()
                .map(|e| {
                    let m = multiplet_json(&e.multiplet).map_err(internal)?;
                    Ok(VerifiedConfig {
                        label: e.label(),
                        pass: m.all_pass() && m.volume == ty.volume(*a).to_string(),
                        multiplet: m,
                    })
                })
                .collect::<Result<_, Failure>>()?;
            let code = if configs.iter().all(|c| c.pass) {
                EXIT_OK
            } else {
                EXIT_VERIFICATION
            };
            Ok((code, with_json(verify_type_text(ty, *a, &configs), json.as_ref(), &configs)?))
        }
        Command::Toric { family, a, json } => {
            check_a(*a)?;
            let fam: ToricFamily = family.parse().map_err(|e: Error| usage(e.to_string()))?;
            let r = toric_report(fam, *a).map_err(|e| usage(e.to_string()))?;
            let mut s = format!("toric family {} at a = {}\n", r.family, r.a);
            let rays: Vec<String> = r.rays.iter().map(|(x, y)| format!("({x},{y})")).collect();
            s += &format!("rays {}\n", rays.join(" "));
            for ((ray, d), c) in r.inserted.iter().zip(&r.discrepancies).zip(&r.coefficients) {
                s += &format!("inserted ({},{})  discrepancy {d}  coefficient {c}\n", ray.0, ray.1);
            }
            s += &format!("volume {}\nindex {}\n", r.volume, r.index);
            Ok((EXIT_OK, with_json(s, json.as_ref(), &r)?))
        }
        Command::Dualgraph {
            ty,
            a,
            config,
            format,
            out,
            json,
        } => {
            let t = catalog_type(ty, *a)?;
            let entries = t.entries(*a).map_err(internal)?;
            let entry = match config {
                Some(label) => entries
                    .iter()
                    .find(|e| e.label().eq_ignore_ascii_case(label))
                    .ok_or_else(|| usage(format!("no configuration {label} of type {t}")))?,
                None => &entries[0],
            };
            let pair = entry.multiplet.descend().map_err(internal)?.basic_pair();
            let graph = exceptional_graph(&pair);
            let body = match format {
                GraphFormat::Dot => graph.to_dot(&format!("{}_a{a}", entry.label())),
                GraphFormat::Json => {
                    serde_json::to_string_pretty(&graph).map_err(|e| internal(Error::Inconsistent(e.to_string())))?
                        + "\n"
                }
            };
            let text = match out {
                Some(path) => {
                    fs::write(path, &body).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
                    format!("wrote {}\n", path.display())
                }
                None => body,
            };
            Ok((EXIT_OK, with_json(text, json.as_ref(), &graph)?))
        }
        Command::Audit {
            a,
            nmax,
            h0,
            json,
            threads,
            max_nodes,
        } => {
            if *a < 4 {
                return Err(usage(format!("audit needs --a of at least 4, got {a}")));
            }
            let opts = SearchOptions {
                max_nodes: *max_nodes,
                ..SearchOptions::default()
            };
            let report = with_threads(*threads, || audit(*a, *nmax, h0.as_deref(), &opts))
                .map_err(|e| usage(e.to_string()))?
                .map_err(internal)?;
            let code = if report.passed() { EXIT_OK } else { EXIT_VERIFICATION };
            Ok((code, with_json(report.to_text(), json.as_ref(), &report)?))
        }
    }
}

fn wants_json(argv: &[OsString]) -> bool {
    argv.iter().any(|s| s.to_str().is_some_and(|s| s == "--json" || s.starts_with("--json=")))
}

fn failure(f: Failure, json: bool) -> Outcome {
    let stderr = if json {
        let e = ErrorJson {
            error: f.kind,
            message: f.message,
            exit_code: f.code,
        };
        serde_json::to_string(&e).unwrap_or_default() + "\n"
    } else {
        format!("error: {}\n", f.message)
    };
    Outcome {
        code: f.code,
        stdout: String::new(),
        stderr,
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let json = wants_json(&argv);
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: EXIT_OK,
                    stdout: e.to_string(),
                    stderr: String::new(),
                };
            }
            if json {
                return failure(usage(e.kind().to_string()), true);
            }
            return Outcome {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr: e.render().to_string(),
            };
        }
    };
    match execute(&cli.command) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(f) => failure(f, json),
    }
}
