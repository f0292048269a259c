use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use contentalg_cli::config::{monoid_arg, ring_arg, validate, Checks, SuiteConfig};
use contentalg_cli::report::threads_from_env;
use contentalg_cli::text::{info, render_info, render_report, render_result};
use contentalg_cli::{load_config, run_suite, Report, EXIT_CONFIG, EXIT_FAIL, EXIT_OK};
use contentalg_core::contentlab::dm_exponent;
use contentalg_core::{Bounds, CoeffMode, Error, MonoidDescriptor, MonoidRing};

#[derive(Parser)]
#[command(name = "contentalg", version, about = "Content ideals and monoid algebras over finite commutative rings")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Sample,
}

/// Either a config file or an inline ring/monoid, with bound overrides.
#[derive(Args)]
struct InstanceArgs {
    /// JSON suite config to take the instance from.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Ring as zmod:N, trunc_poly:P,VARS,CAP or a JSON descriptor.
    #[arg(long)]
    ring: Option<String>,
    /// Monoid as free:K, group:FREE_RANK[,T1,...], trunc_add:CAP or JSON.
    #[arg(long)]
    monoid: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    support: Option<u32>,
    #[arg(long)]
    sample_size: Option<usize>,
    #[arg(long, value_enum)]
    coeff_mode: Option<Mode>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Units, radicals, spectrum and zero-divisor structure of R (and flags of S).
    Info {
        #[command(flatten)]
        inst: InstanceArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run one named check.
    Check {
        name: String,
        #[command(flatten)]
        inst: InstanceArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Dedekind-Mertens exponent of f and g (monoid defaults to N).
    Dm {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[command(flatten)]
        inst: InstanceArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the checks of a config file and emit a report.
    Suite {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Also write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-render a saved JSON report (from --input or stdin).
    Report {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

struct Failure(i32, String);

impl From<contentalg_cli::ConfigError> for Failure {
    fn from(e: contentalg_cli::ConfigError) -> Self {
        Failure(EXIT_CONFIG, e.to_string())
    }
}

fn config_error(msg: impl Into<String>) -> Failure {
    Failure(EXIT_CONFIG, msg.into())
}

fn instance_config(a: &InstanceArgs, default_monoid: Option<MonoidDescriptor>) -> Result<(SuiteConfig, String), Failure> {
    let (mut config, text) = match &a.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| config_error(format!("{}: {e}", path.display())))?;
            let config: SuiteConfig = serde_json::from_str(&text).map_err(|e| config_error(format!("schema error: {e}")))?;
            (config, text)
        }
        None => {
            let ring = a.ring.as_deref().ok_or_else(|| config_error("give --config or --ring"))?;
            let config = SuiteConfig {
                ring: ring_arg(ring).map_err(config_error)?,
                monoid: None,
                bounds: Bounds::default(),
                checks: Checks::default(),
                module_ranks: contentalg_core::suite::DEFAULT_MODULE_RANKS.to_vec(),
                valuation_samples: contentalg_core::suite::DEFAULT_VALUATION_SAMPLES,
            };
            (config, String::new())
        }
    };
    if let Some(m) = &a.monoid {
        config.monoid = Some(monoid_arg(m).map_err(config_error)?);
    }
    if config.monoid.is_none() {
        config.monoid = default_monoid;
    }
    if let Some(s) = a.seed {
        config.bounds.seed = s;
    }
    if let Some(s) = a.support {
        config.bounds.support = s;
    }
    if let Some(s) = a.sample_size {
        config.bounds.sample_size = s;
    }
    if let Some(m) = a.coeff_mode {
        config.bounds.coeff_mode = Some(match m {
            Mode::Exhaustive => CoeffMode::Exhaustive,
            Mode::Sample => CoeffMode::Sample,
        });
    }
    Ok((config, text))
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn threads() -> Result<Option<usize>, Failure> {
    threads_from_env().map_err(config_error)
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.cmd {
        Cmd::Info { inst, format } => {
            let (config, text) = instance_config(&inst, None)?;
            let v = validate(config, &text)?;
            let facts = info(&v.ring, v.monoid.as_deref(), v.config.bounds.gen_cap).map_err(|e| Failure(EXIT_FAIL, e))?;
            match format {
                Format::Json => println!("{}", json(&facts)),
                Format::Text => print!("{}", render_info(&facts)),
            }
            Ok(EXIT_OK)
        }
        Cmd::Check { name, inst, format } => {
            let (mut config, text) = instance_config(&inst, None)?;
            config.checks = Checks::List(vec![name]);
            let v = validate(config, &text)?;
            let report = run_suite(&v, threads()?).map_err(|e| Failure(EXIT_FAIL, e))?;
            match format {
                Format::Json => println!("{}", json(&report)),
                Format::Text => {
                    let mut out = String::new();
                    for r in &report.results {
                        render_result(&mut out, r, 0);
                    }
                    for e in &report.errors {
                        out.push_str(&format!("ERROR {}: {}\n", e.check, e.message));
                    }
                    print!("{out}");
                }
            }
            Ok(report.exit_code)
        }
        Cmd::Dm { f, g, inst, format } => {
            let (mut config, text) = instance_config(&inst, Some(MonoidDescriptor::Free { rank: 1 }))?;
            config.checks = Checks::List(vec![]);
            let v = validate(config, &text)?;
            let monoid = v.monoid.clone().expect("defaulted");
            if !monoid.is_ct() {
                eprintln!("warning: {monoid} is not cancellative and torsion-free; the exponent need not exist");
            }
            let b = MonoidRing::new(v.ring.clone(), Arc::clone(&monoid));
            let fe = b.parse(&f).map_err(|e| config_error(format!("--f: {e}")))?;
            let ge = b.parse(&g).map_err(|e| config_error(format!("--g: {e}")))?;
            let fg = b.mul(&fe, &ge);
            let exponent = dm_exponent(&b, &fe, &ge);
            let value = serde_json::json!({
                "algebra": b.label(),
                "f": b.fmt_elem(&fe),
                "g": b.fmt_elem(&ge),
                "fg": b.fmt_elem(&fg),
                "c(f)": b.content(&fe).to_string(),
                "c(g)": b.content(&ge).to_string(),
                "c(fg)": b.content(&fg).to_string(),
                "exponent": exponent.as_ref().ok(),
                "error": exponent.as_ref().err().map(|e| e.to_string()),
            });
            match format {
                Format::Json => println!("{}", json(&value)),
                Format::Text => {
                    for key in ["algebra", "f", "g", "fg", "c(f)", "c(g)", "c(fg)"] {
                        println!("{key}: {}", value[key].as_str().unwrap_or_default());
                    }
                    match &exponent {
                        Ok(n) => println!("exponent: {n}"),
                        Err(e) => println!("exponent: none ({e})"),
                    }
                }
            }
            match exponent {
                Ok(_) => Ok(EXIT_OK),
                Err(Error::CapExceeded { .. }) => Ok(EXIT_FAIL),
                Err(e) => Err(Failure(EXIT_FAIL, e.to_string())),
            }
        }
        Cmd::Suite { config, format, out } => {
            let v = load_config(&config)?;
            let report = run_suite(&v, threads()?).map_err(|e| Failure(EXIT_FAIL, e))?;
            if let Some(path) = out {
                std::fs::write(&path, json(&report)).map_err(|e| Failure(EXIT_FAIL, format!("{}: {e}", path.display())))?;
            }
            match format {
                Format::Json => println!("{}", json(&report)),
                Format::Text => print!("{}", render_report(&report)),
            }
            Ok(report.exit_code)
        }
        Cmd::Report { format, input } => {
            let mut text = String::new();
            match input {
                Some(p) => text = std::fs::read_to_string(&p).map_err(|e| config_error(format!("{}: {e}", p.display())))?,
                None => {
                    std::io::stdin().read_to_string(&mut text).map_err(|e| config_error(e.to_string()))?;
                }
            }
            let report: Report = serde_json::from_str(&text).map_err(|e| config_error(format!("not a report: {e}")))?;
            if !report.hash_is_valid() {
                return Err(config_error("report contents do not match its determinism hash"));
            }
            match format {
                Format::Json => println!("{}", json(&report)),
                Format::Text => print!("{}", render_report(&report)),
            }
            Ok(report.exit_code)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code as u8)
        }
    }
}
