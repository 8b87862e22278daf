//! Batch front end: every capability as a subcommand with reproducible,
//! machine-readable output.
//!
//! JSON is the canonical format (keys sorted, byte-identical across runs
//! and thread counts); CSV is available for facet tables only. Exit codes:
//! 0 success/agreement, 1 usage error, 2 size guard, 3 cross-check
//! disagreement.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::median::{median_order, Profile};
use crate::polytope::{orbit_count_in_class, VertexSet};
use crate::primaryineq::{classify_pio, classify_ppo, classify_pso_fdi, PrimaryInequality};
use crate::relations::{all_arcs, enumerate, OrderClass};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_GUARD: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
enum Format {
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(Error::Parse {
                msg: format!("unknown format `{other}` (expected json|csv|text)"),
                col: 0,
            }),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "ordpoly",
    version,
    about = "Exact toolkit for order polytopes: enumeration, facet checks, primary facet classification, median orders",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct IneqInput {
    /// Inequality in the DSL, e.g. "x(1,2)+x(2,3)-x(1,3)<=1"
    #[arg(long)]
    ineq: Option<String>,
    /// JSON file with {"n":..,"A":[[i,j]..],"B":[[i,j]..],"beta":..}
    #[arg(long)]
    file: Option<PathBuf>,
}

impl IneqInput {
    fn load(&self, n: usize) -> Result<PrimaryInequality> {
        match (&self.ineq, &self.file) {
            (Some(dsl), None) => PrimaryInequality::parse(dsl, n),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)?;
                let p: PrimaryInequality = serde_json::from_str(&text)?;
                if p.n() != n {
                    return Err(Error::GroundSetMismatch { left: p.n(), right: n });
                }
                Ok(p)
            }
            _ => Err(Error::Parse {
                msg: "provide exactly one of --ineq or --file".into(),
                col: 0,
            }),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List or count the relations of one order class
    Enum {
        #[arg(long)]
        n: usize,
        /// lo | swo | so | io | po
        #[arg(long)]
        class: String,
        /// Print only the cardinality
        #[arg(long)]
        count_only: bool,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Check an inequality against a polytope's vertex set (exact oracle)
    Check {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        class: String,
        #[command(flatten)]
        ineq: IneqInput,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Theorem-based verdict for po | io | so, no vertex enumeration
    Classify {
        #[arg(long)]
        n: usize,
        /// po | io | so
        #[arg(long)]
        polytope: String,
        #[command(flatten)]
        ineq: IneqInput,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Exhaustive theorem-vs-oracle agreement run; exits 3 on disagreement
    Crosscheck {
        #[arg(long)]
        n: usize,
        /// po | io | so
        #[arg(long)]
        polytope: String,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Exact facet enumeration plus orbit counts
    Facets {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        class: String,
        /// Raise the size guard after reading its documentation
        #[arg(long)]
        override_guard: bool,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Median orders of a profile (JSON list of relation objects)
    Median {
        /// Profile file
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        class: String,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Zero-pad an inequality onto a larger ground set
    Lift {
        /// Ground set of the input inequality
        #[arg(long)]
        n: usize,
        /// Target ground set (default n+1)
        #[arg(long)]
        to: Option<usize>,
        #[command(flatten)]
        ineq: IneqInput,
        #[arg(long, default_value = "json")]
        format: String,
    },
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are not usage errors
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::SizeGuard { .. } => EXIT_GUARD,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Enum { n, class, count_only, format } => {
            cmd_enum(n, &class, count_only, format.parse()?)
        }
        Command::Check { n, class, ineq, format } => cmd_check(n, &class, &ineq, format.parse()?),
        Command::Classify { n, polytope, ineq, format } => {
            cmd_classify(n, &polytope, &ineq, format.parse()?)
        }
        Command::Crosscheck { n, polytope, threads, format } => {
            cmd_crosscheck(n, &polytope, threads, format.parse()?)
        }
        Command::Facets { n, class, override_guard, threads, format } => {
            cmd_facets(n, &class, override_guard, threads, format.parse()?)
        }
        Command::Median { file, class, format } => cmd_median(&file, &class, format.parse()?),
        Command::Lift { n, to, ineq, format } => cmd_lift(n, to, &ineq, format.parse()?),
    }
}

fn default_threads() -> usize {
    std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1)
}

fn no_csv(format: Format) -> Result<()> {
    if format == Format::Csv {
        return Err(Error::Parse { msg: "csv output is available for `facets` only".into(), col: 0 });
    }
    Ok(())
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("valid json"));
}

fn to_sorted_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn cmd_enum(n: usize, class: &str, count_only: bool, format: Format) -> Result<i32> {
    no_csv(format)?;
    let class: OrderClass = class.parse()?;
    let relations = enumerate(n, class)?;
    match format {
        Format::Text => {
            if count_only {
                println!("{}", relations.len());
            } else {
                for r in &relations {
                    println!("{r}");
                }
            }
        }
        _ => {
            let mut obj = json!({
                "class": class.token(),
                "n": n,
                "count": relations.len(),
            });
            if !count_only {
                obj["relations"] = to_sorted_value(&relations);
            }
            print_json(&obj);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_check(n: usize, class: &str, input: &IneqInput, format: Format) -> Result<i32> {
    no_csv(format)?;
    let class: OrderClass = class.parse()?;
    let p = input.load(n)?;
    let vs = VertexSet::build(n, class)?;
    let report = vs.check_face(&p.to_general());
    match format {
        Format::Text => {
            println!(
                "{} on {}^{}: valid={} tight={} face_dim={} facet={}",
                p,
                class.token(),
                n,
                report.valid,
                report.tight_count,
                report.face_dim,
                report.is_facet
            );
            if let Some(w) = &report.violating_vertex {
                println!("violating vertex: {w}");
            }
        }
        _ => {
            let obj = json!({
                "class": class.token(),
                "n": n,
                "ineq": p.to_string(),
                "report": to_sorted_value(&report),
            });
            print_json(&obj);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_classify(n: usize, polytope: &str, input: &IneqInput, format: Format) -> Result<i32> {
    no_csv(format)?;
    let class: OrderClass = polytope.parse()?;
    let p = input.load(n)?;
    let verdict: Value = match class {
        OrderClass::PartialOrder => to_sorted_value(&classify_ppo(&p)),
        OrderClass::IntervalOrder => to_sorted_value(&classify_pio(&p)),
        OrderClass::Semiorder => to_sorted_value(&classify_pso_fdi(&p)),
        other => {
            return Err(Error::InvalidInequality(format!(
                "no primary classification theorem for {other}; use po, io or so"
            )))
        }
    };
    match format {
        Format::Text => {
            println!("{} on {}^{}: {}", p, class.token(), n, verdict);
        }
        _ => {
            let obj = json!({
                "polytope": class.token(),
                "n": n,
                "ineq": p.to_string(),
                "verdict": verdict,
            });
            print_json(&obj);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_crosscheck(n: usize, polytope: &str, threads: Option<usize>, format: Format) -> Result<i32> {
    no_csv(format)?;
    let class: OrderClass = polytope.parse()?;
    let threads = threads.unwrap_or_else(default_threads);
    let report = crate::crosscheck::crosscheck(n, class, threads)?;
    match format {
        Format::Text => {
            println!(
                "{}^{}: {} candidates, {} disagreements",
                class.token(),
                n,
                report.candidates,
                report.disagreements.len()
            );
            for d in &report.disagreements {
                println!(
                    "  {:?}: theorem=({},{}) oracle=({},{})",
                    d.ineq, d.theorem_valid, d.theorem_fdi, d.oracle_valid, d.oracle_fdi
                );
            }
        }
        _ => {
            let obj = json!({
                "polytope": class.token(),
                "n": n,
                "candidates": report.candidates,
                "disagreement_count": report.disagreements.len(),
                "disagreements": to_sorted_value(&report.disagreements),
            });
            print_json(&obj);
        }
    }
    Ok(if report.agreed() { EXIT_OK } else { EXIT_DISAGREEMENT })
}

fn cmd_facets(
    n: usize,
    class: &str,
    override_guard: bool,
    _threads: Option<usize>,
    format: Format,
) -> Result<i32> {
    let class: OrderClass = class.parse()?;
    let vs = VertexSet::build(n, class)?;
    let h = vs.enumerate_facets_with(override_guard)?;
    let orbits = orbit_count_in_class(&h.facets, n, class);
    match format {
        Format::Text => {
            println!(
                "{}^{}: dim={} vertices={} facets={} orbit_classes={} equalities={}",
                class.token(),
                n,
                vs.dim(),
                vs.len(),
                h.facets.len(),
                orbits,
                h.equalities.len()
            );
        }
        Format::Csv => {
            let arcs: Vec<String> =
                all_arcs(n).map(|a| format!("x({},{})", a.0, a.1)).collect();
            println!("{},rhs", arcs.join(","));
            for f in &h.facets {
                let (coeffs, rhs) = f.integer_form();
                let row: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
                println!("{},{}", row.join(","), rhs);
            }
        }
        Format::Json => {
            let obj = json!({
                "class": class.token(),
                "n": n,
                "dim": vs.dim(),
                "vertex_count": vs.len(),
                "facet_count": h.facets.len(),
                "orbit_count": orbits,
                "equalities": to_sorted_value(&h.equalities),
                "facets": to_sorted_value(&h.facets),
            });
            print_json(&obj);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_median(file: &PathBuf, class: &str, format: Format) -> Result<i32> {
    no_csv(format)?;
    let class: OrderClass = class.parse()?;
    let text = std::fs::read_to_string(file)?;
    let profile: Profile = serde_json::from_str(&text)?;
    let result = median_order(&profile, class)?;
    match format {
        Format::Text => {
            println!("remoteness {}", result.remoteness);
            for r in &result.optima {
                println!("{r}");
            }
        }
        _ => {
            let obj = json!({
                "class": class.token(),
                "n": profile.n(),
                "remoteness": result.remoteness,
                "optima": to_sorted_value(&result.optima),
            });
            print_json(&obj);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_lift(n: usize, to: Option<usize>, input: &IneqInput, format: Format) -> Result<i32> {
    no_csv(format)?;
    let p = input.load(n)?;
    let target = to.unwrap_or(n + 1);
    if target < n {
        return Err(Error::Parse { msg: format!("cannot lift from n={n} down to {target}"), col: 0 });
    }
    let lifted = p.lift_to(target);
    match format {
        Format::Text => println!("{lifted}"),
        _ => {
            let obj = json!({
                "from": n,
                "to": target,
                "ineq": to_sorted_value(&lifted),
            });
            print_json(&obj);
        }
    }
    Ok(EXIT_OK)
}
