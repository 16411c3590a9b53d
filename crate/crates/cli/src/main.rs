use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cfk::format::{self, ComplexFile, ReportFile};
use cfk::harness::{run_property_suite, FuzzConfig};
use cfk::invariants::{epsilon, format_rational, upsilon_at, upsilon_pl, v0_equivalent};
use cfk::{catalogue, reduce, report, violations, CfkComplex, Level, Rational, ReportOptions};

#[derive(Parser)]
#[command(name = "cfk", version, about = "Knot Floer complexes and their concordance invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a complex against the axioms.
    Validate {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = LevelArg::Knotlike)]
        level: LevelArg,
    },
    /// Compute the full invariant report.
    Invariants {
        #[command(flatten)]
        input: Input,
        /// One table row instead of the full report.
        #[arg(long, conflicts_with = "json")]
        table: bool,
        #[arg(long)]
        json: bool,
        /// Compute Υ only at the --t samples.
        #[arg(long)]
        skip_upsilon_pl: bool,
        /// Υ sample points as p/q; defaults to k/4.
        #[arg(long = "t", value_name = "P/Q")]
        t: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Υ at given points or as a piecewise-linear function.
    Upsilon {
        #[command(flatten)]
        input: Input,
        #[arg(long = "t", value_name = "P/Q", required_unless_present = "pl")]
        t: Vec<String>,
        #[arg(long)]
        pl: bool,
    },
    /// Tensor product of two complexes.
    Tensor {
        #[command(flatten)]
        pair: Pair,
        /// Reduce the product before writing it.
        #[arg(long)]
        reduce: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Dual complex.
    Dual {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Cancel all filtered-isomorphism arrows.
    Reduce {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Compare two complexes in the ε order.
    Compare {
        #[command(flatten)]
        pair: Pair,
    },
    /// Run the randomized property suite.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        iterations: usize,
        #[arg(long, default_value_t = 6)]
        max_generators: usize,
        #[arg(long, default_value_t = 3)]
        max_u_power: u32,
        #[arg(long, default_value_t = -3, allow_hyphen_values = true)]
        alexander_min: i64,
        #[arg(long, default_value_t = 3, allow_hyphen_values = true)]
        alexander_max: i64,
        /// Corrupt one arrow per sample (negative control).
        #[arg(long)]
        corrupt: bool,
        /// Directory for violation reports.
        #[arg(short = 'o', long = "output")]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Expression such as "T(2,3) # -fig4".
    #[arg(long)]
    expr: Option<String>,
    /// Complex document.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct Pair {
    #[arg(long, required_unless_present = "a_file", conflicts_with = "a_file")]
    a: Option<String>,
    #[arg(long)]
    a_file: Option<PathBuf>,
    #[arg(long, required_unless_present = "b_file", conflicts_with = "b_file")]
    b: Option<String>,
    #[arg(long)]
    b_file: Option<PathBuf>,
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of standard output.
    #[arg(short = 'o', long = "output")]
    path: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Basic,
    Knotlike,
}

fn load(expr: Option<&str>, file: Option<&Path>) -> Result<CfkComplex> {
    match (expr, file) {
        (Some(e), _) => catalogue::named(e).with_context(|| format!("expression `{e}`")),
        (None, Some(p)) => format::load(p).with_context(|| format!("loading {}", p.display())),
        (None, None) => bail!("no input given"),
    }
}

impl Input {
    fn load(&self) -> Result<CfkComplex> {
        load(self.expr.as_deref(), self.file.as_deref())
    }
}

impl Pair {
    fn load(&self) -> Result<(CfkComplex, CfkComplex)> {
        Ok((load(self.a.as_deref(), self.a_file.as_deref())?, load(self.b.as_deref(), self.b_file.as_deref())?))
    }
}

impl Output {
    fn write(&self, text: &str) -> Result<()> {
        match &self.path {
            Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

fn parse_ts(ts: &[String]) -> Result<Vec<Rational>> {
    ts.iter().map(|s| Ok(format::parse_rational(s)?)).collect()
}

fn render_report(r: &cfk::InvariantReport) -> String {
    let mut out = String::new();
    let mut line = |k: &str, v: String| out.push_str(&format!("{k:<28}{v}\n"));
    line("name", r.name.clone());
    line("tau", r.tau.to_string());
    line("nu", r.nu.to_string());
    line("epsilon", r.epsilon.to_string());
    line("nu-", r.nu_minus.to_string());
    let vs: Vec<String> = r.v_sequence.iter().map(|(s, v)| format!("V{s}={v}")).collect();
    line("V_s", vs.join(" "));
    line("d(S^3_1)", r.d_plus_one_surgery.to_string());
    line("genus", r.genus.to_string());
    if let Some(b) = r.concordance_genus_lower_bound {
        line("concordance genus >=", b.to_string());
    }
    if let Some(pl) = &r.upsilon.pl {
        line("Upsilon", pl.to_string());
    }
    let samples: Vec<String> =
        r.upsilon.samples.iter().map(|(t, v)| format!("{}:{}", format_rational(*t), format_rational(*v))).collect();
    line("Upsilon samples", samples.join(" "));
    let hat: Vec<String> = r.hfk_hat.iter().map(|((s, m), d)| format!("({s},{m})x{d}")).collect();
    line("HFK-hat (s,M)", hat.join(" "));
    line("Alexander polynomial", r.alexander_poly.to_string());
    out
}

#[derive(Serialize)]
struct ViolationFile {
    property: String,
    detail: String,
    complex: ComplexFile,
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Validate { input, level } => {
            let c = input.load()?;
            let level = match level {
                LevelArg::Basic => Level::Basic,
                LevelArg::Knotlike => Level::Knotlike,
            };
            let found = violations(&c, level);
            if found.is_empty() {
                println!("{}: valid ({} generators, {} arrows)", c.name(), c.len(), c.arrows().len());
                return Ok(ExitCode::SUCCESS);
            }
            for v in &found {
                println!("{v}");
            }
            bail!("{}: {} violation(s)", c.name(), found.len());
        }
        Command::Invariants { input, table, json, skip_upsilon_pl, t, out } => {
            let c = input.load()?;
            let mut opts = ReportOptions { upsilon_pl: !skip_upsilon_pl, ..ReportOptions::default() };
            if !t.is_empty() {
                opts.samples = parse_ts(&t)?;
            }
            let r = report(&c, &opts)?;
            let text = if table {
                format!("{}\n", r.table_row())
            } else if json {
                format!("{}\n", serde_json::to_string_pretty(&ReportFile::from(&r))?)
            } else {
                render_report(&r)
            };
            out.write(&text)?;
        }
        Command::Upsilon { input, t, pl } => {
            let c = input.load()?;
            if pl {
                println!("{}", upsilon_pl(&c)?);
            }
            let ts = parse_ts(&t)?;
            if ts.len() == 1 && !pl {
                println!("{}", format_rational(upsilon_at(&c, ts[0])?));
            } else {
                for t in ts {
                    println!("{} {}", format_rational(t), format_rational(upsilon_at(&c, t)?));
                }
            }
        }
        Command::Tensor { pair, reduce: r, out } => {
            let (a, b) = pair.load()?;
            let mut c = a.tensor(&b);
            if r {
                c = reduce(&c).0;
            }
            out.write(&format::to_json(&c))?;
        }
        Command::Dual { input, out } => out.write(&format::to_json(&input.load()?.dual()))?,
        Command::Reduce { input, out } => out.write(&format::to_json(&reduce(&input.load()?).0))?,
        Command::Compare { pair } => {
            let (a, b) = pair.load()?;
            let e = epsilon(&reduce(&a.tensor(&b.dual())).0)?;
            let symbol = match e {
                1 => ">",
                -1 => "<",
                _ => "=",
            };
            println!("{symbol}");
            println!("epsilon {e}");
            println!("v0-equivalent {}", v0_equivalent(&a, &b)?);
        }
        Command::Fuzz { seed, iterations, max_generators, max_u_power, alexander_min, alexander_max, corrupt, out } => {
            if alexander_min > alexander_max {
                bail!("empty Alexander range {alexander_min}..{alexander_max}");
            }
            let cfg = FuzzConfig {
                max_generators,
                max_u_power,
                alexander_range: (alexander_min, alexander_max),
                seed,
                iterations,
                corrupt,
            };
            let suite = run_property_suite(&cfg);
            println!(
                "checked {} complexes: {} violations, {} findings",
                suite.checked,
                suite.violations.len(),
                suite.findings.len()
            );
            for v in suite.violations.iter().chain(&suite.findings) {
                println!("{}: {}", v.property, v.detail);
            }
            if let Some(dir) = out {
                fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
                for (k, v) in suite.violations.iter().chain(&suite.findings).enumerate() {
                    let complex: ComplexFile = serde_json::from_str(&v.reproducer)?;
                    let doc = ViolationFile { property: v.property.clone(), detail: v.detail.clone(), complex };
                    let path = dir.join(format!("violation-{k:03}.json"));
                    fs::write(&path, serde_json::to_string_pretty(&doc)? + "\n")
                        .with_context(|| format!("writing {}", path.display()))?;
                }
            }
            if !suite.violations.is_empty() {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
