mod cache;
mod closures;
mod commands;
mod error;
mod input;
mod report;

use braidslice_core::string_calculus::Family;
use braidslice_core::twisted_alexander::Frame;
use cache::{content_hash, Cache};
use clap::{Args, Parser, Subcommand, ValueEnum};
use error::CliError;
use input::Subject;
use report::{Human, Report, TOOL, VERSION};
use serde::de::DeserializeOwned;
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "braidslice",
    version,
    about = "Sliceness tools for alternating 3-braid closures"
)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Cache directory; overrides BRAIDSLICE_CACHE.
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SubjectArgs {
    /// Associated string such as `2,4,2,3`, a braid word with --braid, or K1/K2/K3.
    #[arg(allow_hyphen_values = true)]
    input: String,
    /// Read the input as a braid word: comma-separated letters, `1` for σ1 and `-2` for σ2⁻¹.
    #[arg(long)]
    braid: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FrameArg {
    RowShifted,
    Unshifted,
}

#[derive(Subcommand)]
enum Command {
    /// Families, x-string, crossings, components, I-invariant and signature.
    Classify(SubjectArgs),
    /// All strings up to a crossing bound, one per rotation/reversal class.
    Enumerate {
        #[arg(long)]
        max_crossings: u32,
        #[arg(long, value_parser = parse_family)]
        family: Option<Family>,
        /// Drop strings whose status is on the bundled list.
        #[arg(long)]
        potentially_nonslice: bool,
    },
    /// Seifert data, signatures, branched-cover homology and linking forms.
    Invariants {
        #[command(flatten)]
        subject: SubjectArgs,
        #[arg(long, default_value_t = 3)]
        p: u32,
        #[arg(long)]
        q: Option<u64>,
    },
    /// Twisted Alexander sliceness obstruction.
    Obstruct {
        #[command(flatten)]
        subject: SubjectArgs,
        #[arg(long, default_value_t = 3)]
        p: u32,
        #[arg(long)]
        q: Option<u64>,
        /// JSON file with `generators` (1-based) and/or dual words `a`, `b`.
        #[arg(long = "override", value_name = "FILE")]
        override_file: Option<PathBuf>,
        #[arg(long, value_enum)]
        frame: Option<FrameArg>,
    },
    /// Decide whether a polynomial over Q(ζ_q) is a norm f·f̄.
    NormTest {
        /// JSON list of coefficients; each an integer or a list of coordinates on 1, ζ, ζ², ….
        polynomial: String,
        #[arg(long)]
        q: u32,
        /// Exponent of the first coefficient.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        low: i64,
    },
    /// Check B Δ⁻¹ C = Δ⁻¹ for the sub-braids of a linear string and its dual.
    DualCheck {
        /// Linear string such as `2,3`.
        b: String,
        /// `x_l,x_r,y_l,y_r`; all of {0,1}⁴ when omitted.
        #[arg(long)]
        perturb: Option<String>,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
        .map_err(|e: braidslice_core::StringError| e.to_string())
}

struct Runner {
    cache: Cache,
    json: bool,
}

impl Runner {
    /// Computes or loads the report and prints it.
    fn run<T, F>(
        &self,
        command: &str,
        input: &str,
        params: serde_json::Value,
        compute: F,
    ) -> Result<(), CliError>
    where
        T: Serialize + DeserializeOwned + Human,
        F: FnOnce() -> Result<T, CliError>,
    {
        let canonical = serde_json::to_string(&serde_json::json!({
            "tool": TOOL,
            "version": VERSION,
            "command": command,
            "input": input,
            "parameters": params,
        }))?;
        let key = content_hash(&canonical);
        let text = match self.cache.get(&key) {
            Some(text) => text,
            None => {
                let report = Report {
                    tool: TOOL.into(),
                    version: VERSION.into(),
                    command: command.into(),
                    input: input.into(),
                    input_hash: key.clone(),
                    result: compute()?,
                };
                let mut text = serde_json::to_string_pretty(&report)?;
                text.push('\n');
                self.cache.put(&key, command, input, params, &text)?;
                text
            }
        };
        if self.json {
            print!("{text}");
        } else {
            let report: Report<T> = serde_json::from_str(&text)?;
            print!("{}", report.result.human());
        }
        Ok(())
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    let cache = if cli.no_cache {
        Cache::disabled()
    } else {
        Cache::open(cli.cache_dir)
    };
    let r = Runner {
        cache,
        json: cli.json,
    };
    match cli.command {
        Command::Classify(s) => {
            let subject = Subject::parse(&s.input, s.braid)?;
            r.run(
                "classify",
                &subject.canonical(),
                serde_json::json!({}),
                || commands::classify(&subject),
            )
        }
        Command::Enumerate {
            max_crossings,
            family,
            potentially_nonslice,
        } => {
            let params = serde_json::json!({
                "family": family.map(|f| f.name()),
                "potentially_nonslice": potentially_nonslice,
            });
            r.run(
                "enumerate",
                &format!("max_crossings:{max_crossings}"),
                params,
                || commands::enumerate_cmd(max_crossings, family, potentially_nonslice),
            )
        }
        Command::Invariants { subject: s, p, q } => {
            let subject = Subject::parse(&s.input, s.braid)?;
            r.run(
                "invariants",
                &subject.canonical(),
                serde_json::json!({ "p": p, "q": q }),
                || commands::invariants(&subject, p, q),
            )
        }
        Command::Obstruct {
            subject: s,
            p,
            q,
            override_file,
            frame,
        } => {
            let subject = Subject::parse(&s.input, s.braid)?;
            let ov_text = match &override_file {
                Some(path) => Some(std::fs::read_to_string(path)?),
                None => None,
            };
            let ov = ov_text
                .as_deref()
                .map(commands::Override::parse)
                .transpose()?;
            let frame = frame.map(|f| match f {
                FrameArg::RowShifted => Frame::RowShifted,
                FrameArg::Unshifted => Frame::Unshifted,
            });
            let params = serde_json::json!({
                "p": p,
                "q": q,
                "override": ov_text.as_deref().map(content_hash),
                "frame": frame.map(|f| format!("{f:?}")),
            });
            r.run("obstruct", &subject.canonical(), params, || {
                commands::obstruct(&subject, p, q, ov.as_ref(), frame)
            })
        }
        Command::NormTest { polynomial, q, low } => {
            let params = serde_json::json!({ "q": q, "low": low });
            r.run("norm-test", polynomial.trim(), params, || {
                commands::norm_test(&polynomial, q, low)
            })
        }
        Command::DualCheck { b, perturb } => {
            let params = serde_json::json!({ "perturb": perturb });
            r.run("dual-check", b.trim(), params, || {
                commands::dual_check(&b, perturb.as_deref())
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
