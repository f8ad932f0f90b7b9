//! Command-line surface for the `noether-core` engine: load lattice actions
//! from files or the built-in registry, run cohomology computations and
//! irrationality tests, decide problem instances, and emit the end-to-end
//! negativity certificates — all as deterministic JSON reports.
//!
//! The entire CLI is a pure function [`run`] from argument list and output
//! sinks to an exit code, so integration tests drive it in-process.

use std::io::Write;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use noether_core::cohomology::{h1, nonvanishing_test, tate_minus1};
use noether_core::parity::{parity_test_refined, parity_test_simple};
use noether_core::registry::{paper_module, registry_names};
use noether_core::{
    certify_negativity, decide_group, CertifyError, LatticeAction, ProblemInstance,
    DEFAULT_MAX_GROUP_ORDER,
};
use serde_json::{json, Map, Value};

/// Tool version, stamped into every report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Environment variable capping group closure (non-termination guard).
pub const MAX_ORDER_ENV: &str = "NOETHER_MAX_GROUP_ORDER";

const EXIT_OK: i32 = 0;
const EXIT_INCONCLUSIVE: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "noether",
    version,
    about = "Exact-arithmetic decisions and machine-checkable irrationality \
             certificates for the negative three-dimensional monomial Noether \
             problems over the rationals",
    after_help = "MODULE SOURCES:\n  \
                  --module accepts either a JSON file path or `registry:NAME` \
                  (see `noether registry list`).\n\n\
                  ENVIRONMENT:\n  \
                  NOETHER_MAX_GROUP_ORDER caps group closure when loading \
                  modules (default 1024).\n\n\
                  EXIT CODES:\n  \
                  0  success\n  \
                  1  a requested certification came back inconclusive\n  \
                  2  usage or schema error (one-line diagnostic on stderr)"
)]
struct Cli {
    /// Pretty-print the JSON output
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute H¹ of a lattice action (full group, or every subgroup)
    Cohomology {
        /// Module source: a JSON file path or `registry:NAME`
        #[arg(long)]
        module: String,
        /// Report H¹ for every subgroup instead of only the full group
        #[arg(long)]
        all_subgroups: bool,
    },
    /// Compute the Tate group Ĥ⁻¹ of a lattice action
    Tate {
        /// Module source: a JSON file path or `registry:NAME`
        #[arg(long)]
        module: String,
    },
    /// Run an irrationality test and report its (replayable) evidence
    #[command(subcommand)]
    Test(TestCommand),
    /// Decide a problem instance from its group id, signs and coefficients
    #[command(
        after_help = "The schemas for the groups 3.4.2.1, 3.4.3.1 and \
                      3.4.4.1 take the coefficient b as normalized to 1; \
                      rescale instances with b ≠ 1 before invoking."
    )]
    Decide {
        /// Group id: one of 3.4.2.2, 3.1.2.1, 3.4.2.1, 3.2.3.1, 3.3.1.1,
        /// 3.4.3.1, 3.4.4.1, 3.3.3.1, R, R1, R2
        #[arg(long)]
        group: String,
        /// Comma-separated sign parameters, e.g. e1=-1,e2=-1,e3=-1
        #[arg(long)]
        signs: Option<String>,
        /// Comma-separated coefficients, e.g. a=2,b=3,c=5/4
        #[arg(long)]
        coeffs: Option<String>,
    },
    /// Produce one of the built-in end-to-end negativity certificates
    Certify {
        /// Case id: R.deg4.abcSquare, N3121.deg8, N3311.caseAB or R1.deg8
        #[arg(long)]
        case: String,
    },
    /// Inspect the built-in module registry
    #[command(subcommand)]
    Registry(RegistryCommand),
    /// Run a JSON array of jobs and emit one report per job, in input order
    Batch {
        /// Path to the jobs file (a JSON array of job objects, each with a
        /// "command" field plus that command's parameters)
        #[arg(long)]
        file: String,
    },
}

#[derive(Subcommand)]
enum TestCommand {
    /// Non-vanishing cohomology test: H¹ must vanish for every subgroup
    /// while Ĥ⁻¹ of the full group does not
    Nonvanishing {
        /// Module source: a JSON file path or `registry:NAME`
        #[arg(long)]
        module: String,
    },
    /// Simple parity test around the invariant basis vector u
    ParitySimple {
        /// Module source: a JSON file path or `registry:NAME`
        #[arg(long)]
        module: String,
        /// Basis index of the invariant vector u
        #[arg(long)]
        invariant: usize,
    },
    /// Refined parity test with an explicit flip witness
    ParityRefined {
        /// Module source: a JSON file path or `registry:NAME`
        #[arg(long)]
        module: String,
        /// Basis index of the invariant vector u
        #[arg(long)]
        invariant: usize,
        /// Name of the group element τ* carrying the flip
        #[arg(long)]
        tau_star: String,
        /// Basis index w with e_w ↦ e_u − e_w under τ*
        #[arg(long)]
        flip: usize,
    },
}

#[derive(Subcommand)]
enum RegistryCommand {
    /// List the registry module names with rank and group order
    List,
    /// Print one registry module as JSON loadable via `--module <file>`
    Show {
        /// Registry module name, e.g. paper.s3.M
        name: String,
    },
}

enum Output {
    /// A wrapped report: `{"report": body, "wall_clock_ms": n}`.
    Report { body: Value, code: i32 },
    /// Bare JSON (used by `registry show` so redirection yields a loadable
    /// module file).
    Raw(Value),
}

/// Runs the CLI on `args` (including argv[0]), writing structured output to
/// `out` and one-line diagnostics to `err`; returns the process exit code.
pub fn run(args: &[String], out: &mut impl Write, err: &mut impl Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let text = e.to_string();
                    let line = text.lines().next().unwrap_or("invalid usage");
                    let _ = writeln!(err, "{line}");
                    EXIT_USAGE
                }
            };
        }
    };
    let started = Instant::now();
    match execute(&cli.command) {
        Ok(Output::Report { body, code }) => {
            let mut body = body;
            body["version"] = json!(VERSION);
            let wrapped = json!({
                "report": body,
                "wall_clock_ms": started.elapsed().as_millis() as u64,
            });
            emit(out, &wrapped, cli.pretty);
            code
        }
        Ok(Output::Raw(v)) => {
            emit(out, &v, cli.pretty);
            EXIT_OK
        }
        Err(message) => {
            let line = message.lines().next().unwrap_or("error");
            let _ = writeln!(err, "error: {line}");
            EXIT_USAGE
        }
    }
}

fn emit(out: &mut impl Write, v: &Value, pretty: bool) {
    let text = if pretty {
        serde_json::to_string_pretty(v).expect("report serializes")
    } else {
        serde_json::to_string(v).expect("report serializes")
    };
    let _ = writeln!(out, "{text}");
}

fn execute(command: &Command) -> Result<Output, String> {
    match command {
        Command::Cohomology {
            module,
            all_subgroups,
        } => cohomology_report(module, *all_subgroups).map(|body| Output::Report {
            body,
            code: EXIT_OK,
        }),
        Command::Tate { module } => tate_report(module).map(|body| Output::Report {
            body,
            code: EXIT_OK,
        }),
        Command::Test(test) => {
            let (body, code) = match test {
                TestCommand::Nonvanishing { module } => nonvanishing_report(module)?,
                TestCommand::ParitySimple { module, invariant } => {
                    parity_simple_report(module, *invariant)?
                }
                TestCommand::ParityRefined {
                    module,
                    invariant,
                    tau_star,
                    flip,
                } => parity_refined_report(module, *invariant, tau_star, *flip)?,
            };
            Ok(Output::Report { body, code })
        }
        Command::Decide {
            group,
            signs,
            coeffs,
        } => {
            let instance = instance_from_args(group, signs.as_deref(), coeffs.as_deref())?;
            decide_report(&instance).map(|body| Output::Report {
                body,
                code: EXIT_OK,
            })
        }
        Command::Certify { case } => {
            let (body, code) = certify_report(case)?;
            Ok(Output::Report { body, code })
        }
        Command::Registry(RegistryCommand::List) => {
            let modules: Vec<Value> = registry_names()
                .iter()
                .map(|name| {
                    let action = paper_module(name).expect("registry module loads");
                    json!({
                        "name": name,
                        "rank": action.rank(),
                        "group_order": action.group().order(),
                    })
                })
                .collect();
            Ok(Output::Report {
                body: json!({"command": "registry-list", "modules": modules}),
                code: EXIT_OK,
            })
        }
        Command::Registry(RegistryCommand::Show { name }) => {
            let action = paper_module(name).map_err(|e| e.to_string())?;
            Ok(Output::Raw(action.to_json()))
        }
        Command::Batch { file } => {
            let text =
                std::fs::read_to_string(file).map_err(|e| format!("cannot read `{file}`: {e}"))?;
            let jobs: Value = serde_json::from_str(&text)
                .map_err(|e| format!("invalid JSON in `{file}`: {e}"))?;
            let jobs = jobs
                .as_array()
                .ok_or_else(|| format!("`{file}` must contain a JSON array of jobs"))?;
            let mut results = Vec::new();
            let mut code = EXIT_OK;
            for (index, job) in jobs.iter().enumerate() {
                match run_job(job) {
                    Ok((body, job_code)) => {
                        code = code.max(job_code);
                        results.push(json!({"job": index, "report": body}));
                    }
                    Err(message) => {
                        code = EXIT_USAGE;
                        results.push(json!({"job": index, "error": message}));
                    }
                }
            }
            Ok(Output::Report {
                body: json!({"command": "batch", "jobs": results}),
                code,
            })
        }
    }
}

// ---------------------------------------------------------------------------
// Report builders (shared between direct commands and batch jobs)
// ---------------------------------------------------------------------------

fn cohomology_report(module: &str, all_subgroups: bool) -> Result<Value, String> {
    let action = load_module(module)?;
    let mut body = json!({
        "command": "cohomology",
        "module": module,
        "rank": action.rank(),
        "group_order": action.group().order(),
    });
    if all_subgroups {
        let entries: Vec<Value> = action
            .group()
            .all_subgroups()
            .iter()
            .map(|sub| {
                let restricted = action.restrict(sub).expect("enumerated subgroup restricts");
                json!({
                    "subgroup": sub.label(),
                    "order": sub.order(),
                    "h1": h1(&restricted).to_json(&restricted),
                })
            })
            .collect();
        body["subgroups"] = Value::Array(entries);
    } else {
        body["h1"] = h1(&action).to_json(&action);
    }
    Ok(body)
}

fn tate_report(module: &str) -> Result<Value, String> {
    let action = load_module(module)?;
    Ok(json!({
        "command": "tate",
        "module": module,
        "rank": action.rank(),
        "group_order": action.group().order(),
        "tate_minus1": tate_minus1(&action).to_json(&action),
    }))
}

fn nonvanishing_report(module: &str) -> Result<(Value, i32), String> {
    let action = load_module(module)?;
    let report = nonvanishing_test(&action);
    let code = if report.is_certified() {
        EXIT_OK
    } else {
        EXIT_INCONCLUSIVE
    };
    let body = json!({
        "command": "test",
        "test": "nonvanishing",
        "module": module,
        "report": report.to_json(&action),
    });
    Ok((body, code))
}

fn parity_simple_report(module: &str, invariant: usize) -> Result<(Value, i32), String> {
    let action = load_module(module)?;
    let report = parity_test_simple(&action, invariant).map_err(|e| e.to_string())?;
    let code = if report.is_certified() {
        EXIT_OK
    } else {
        EXIT_INCONCLUSIVE
    };
    let body = json!({
        "command": "test",
        "test": "parity-simple",
        "module": module,
        "invariant": invariant,
        "report": report.to_json(),
    });
    Ok((body, code))
}

fn parity_refined_report(
    module: &str,
    invariant: usize,
    tau_star: &str,
    flip: usize,
) -> Result<(Value, i32), String> {
    let action = load_module(module)?;
    let report =
        parity_test_refined(&action, invariant, tau_star, flip).map_err(|e| e.to_string())?;
    let code = if report.is_certified() {
        EXIT_OK
    } else {
        EXIT_INCONCLUSIVE
    };
    let body = json!({
        "command": "test",
        "test": "parity-refined",
        "module": module,
        "invariant": invariant,
        "tau_star": tau_star,
        "flip": flip,
        "report": report.to_json(),
    });
    Ok((body, code))
}

fn decide_report(instance: &ProblemInstance) -> Result<Value, String> {
    let verdict = decide_group(instance).map_err(|e| e.to_string())?;
    Ok(json!({
        "command": "decide",
        "instance": instance.to_json(),
        "verdict": verdict.to_json(),
    }))
}

fn certify_report(case: &str) -> Result<(Value, i32), String> {
    match certify_negativity(case) {
        Ok(certificate) => Ok((
            json!({
                "command": "certify",
                "case": case,
                "certificate": certificate.to_json(),
            }),
            EXIT_OK,
        )),
        Err(e @ CertifyError::UnknownCase(_)) => Err(e.to_string()),
        Err(CertifyError::CertificationFailed { case, reason }) => Ok((
            json!({
                "command": "certify",
                "case": case,
                "error": reason,
            }),
            EXIT_INCONCLUSIVE,
        )),
    }
}

fn run_job(job: &Value) -> Result<(Value, i32), String> {
    let command = job
        .get("command")
        .and_then(Value::as_str)
        .ok_or_else(|| "job is missing the string field `command`".to_string())?;
    let module = || {
        job.get("module")
            .and_then(Value::as_str)
            .ok_or_else(|| format!("job `{command}` is missing the string field `module`"))
    };
    let index_field = |name: &str| {
        job.get(name)
            .and_then(Value::as_u64)
            .map(|n| n as usize)
            .ok_or_else(|| format!("job `{command}` is missing the integer field `{name}`"))
    };
    match command {
        "cohomology" => {
            let all = job
                .get("all_subgroups")
                .and_then(Value::as_bool)
                .unwrap_or(false);
            cohomology_report(module()?, all).map(|body| (body, EXIT_OK))
        }
        "tate" => tate_report(module()?).map(|body| (body, EXIT_OK)),
        "nonvanishing" => nonvanishing_report(module()?),
        "parity-simple" => parity_simple_report(module()?, index_field("invariant")?),
        "parity-refined" => {
            let tau_star = job
                .get("tau_star")
                .and_then(Value::as_str)
                .ok_or_else(|| format!("job `{command}` is missing the string field `tau_star`"))?;
            parity_refined_report(
                module()?,
                index_field("invariant")?,
                tau_star,
                index_field("flip")?,
            )
        }
        "decide" => {
            let instance = ProblemInstance::from_json(job).map_err(|e| e.to_string())?;
            decide_report(&instance).map(|body| (body, EXIT_OK))
        }
        "certify" => {
            let case = job
                .get("case")
                .and_then(Value::as_str)
                .ok_or_else(|| "job `certify` is missing the string field `case`".to_string())?;
            certify_report(case)
        }
        other => Err(format!("unknown job command `{other}`")),
    }
}

// ---------------------------------------------------------------------------
// Input plumbing
// ---------------------------------------------------------------------------

fn max_group_order() -> Result<usize, String> {
    match std::env::var(MAX_ORDER_ENV) {
        Ok(raw) => {
            let n: usize = raw
                .trim()
                .parse()
                .map_err(|_| format!("invalid {MAX_ORDER_ENV} value `{raw}`"))?;
            if n == 0 {
                Err(format!("{MAX_ORDER_ENV} must be positive"))
            } else {
                Ok(n)
            }
        }
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_GROUP_ORDER),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err(format!("{MAX_ORDER_ENV} is not valid UTF-8"))
        }
    }
}

fn load_module(source: &str) -> Result<LatticeAction, String> {
    if let Some(name) = source.strip_prefix("registry:") {
        return paper_module(name).map_err(|e| e.to_string());
    }
    let cap = max_group_order()?;
    let text =
        std::fs::read_to_string(source).map_err(|e| format!("cannot read `{source}`: {e}"))?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| format!("invalid JSON in `{source}`: {e}"))?;
    LatticeAction::from_json(&v, cap).map_err(|e| e.to_string())
}

fn parse_kv_list(spec: &str) -> Result<Vec<(String, String)>, String> {
    spec.split(',')
        .filter(|part| !part.trim().is_empty())
        .map(|part| {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, found `{part}`"))?;
            Ok((key.trim().to_string(), value.trim().to_string()))
        })
        .collect()
}

fn instance_from_args(
    group: &str,
    signs: Option<&str>,
    coeffs: Option<&str>,
) -> Result<ProblemInstance, String> {
    let mut coefficient_map = Map::new();
    if let Some(spec) = coeffs {
        for (key, value) in parse_kv_list(spec)? {
            coefficient_map.insert(key, Value::String(value));
        }
    }
    let mut sign_map = Map::new();
    if let Some(spec) = signs {
        for (key, value) in parse_kv_list(spec)? {
            let n: i64 = value
                .trim_start_matches('+')
                .parse()
                .map_err(|_| format!("sign `{key}` must be 1 or -1, found `{value}`"))?;
            sign_map.insert(key, Value::Number(n.into()));
        }
    }
    let payload = json!({
        "group": group,
        "coefficients": coefficient_map,
        "signs": sign_map,
    });
    ProblemInstance::from_json(&payload).map_err(|e| e.to_string())
}
