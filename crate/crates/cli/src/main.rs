use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use silted::classify::{classify_all, dedupe};
use silted::complex::TwoTermCategory;
use silted::fixtures::{fixture, FIXTURES};
use silted::module_cat::{ArQuiver, ModuleCategory};
use silted::quiver::{parse_quiver, Quiver};
use silted::report;
use silted::silting::{brute_force_silting, brute_force_tilting, enumerate_silting, enumerate_tilting};
use silted::suite::run_suite;
use silted::Error;

#[derive(Parser)]
#[command(name = "silted", version, about = "Tilting modules, 2-term silting complexes and silted algebras of Dynkin quivers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Ascii)]
    format: Format,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Auslander-Reiten quiver of mod KQ, or of the 2-term complexes.
    Ar {
        /// Quiver file, or `fixture:NAME` for a bundled quiver.
        quiver: String,
        #[arg(long)]
        two_term: bool,
    },
    /// Basic 2-term silting complexes (or tilting modules).
    Silting {
        quiver: String,
        #[arg(long)]
        tilting_only: bool,
        /// Cross-check against the brute-force enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// Endomorphism algebras of all silting complexes, classified.
    Classify {
        quiver: String,
        #[arg(long)]
        oracle: bool,
    },
    /// Check the expected counts for all bundled quivers.
    #[command(name = "paper-suite")]
    Reproduce,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Ascii,
}

enum Failure {
    Check(String),
    Input(String),
    NotDynkin(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) | Failure::Internal(_) => 1,
            Failure::Input(_) => 2,
            Failure::NotDynkin(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Check(m) | Failure::Input(m) | Failure::NotDynkin(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::Cycle(_)
            | Error::DuplicateVertex(_)
            | Error::DuplicateArrow(_)
            | Error::UnknownVertex { .. } => Failure::Input(e.to_string()),
            Error::NotDynkin(_) => Failure::NotDynkin(e.to_string()),
            other => Failure::Internal(other.to_string()),
        }
    }
}

fn load(spec: &str) -> Result<Quiver, Failure> {
    if let Some(name) = spec.strip_prefix("fixture:") {
        if !FIXTURES.iter().any(|(n, _)| *n == name) {
            let known: Vec<&str> = FIXTURES.iter().map(|(n, _)| *n).collect();
            return Err(Failure::Input(format!("unknown fixture {name:?}; available: {}", known.join(", "))));
        }
        return Ok(fixture(name));
    }
    let text = std::fs::read_to_string(spec).map_err(|e| Failure::Input(format!("{spec}: {e}")))?;
    Ok(parse_quiver(&text)?)
}

fn unsupported(format: Format, command: &str) -> Failure {
    Failure::Input(format!("format {format:?} is not available for `{command}`").to_lowercase())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn cmd_ar(quiver: &str, two_term: bool, format: Format) -> Result<String, Failure> {
    let q = load(quiver)?;
    let cat = ModuleCategory::new(&q)?;
    let ar = if two_term { ArQuiver::two_term(&cat)? } else { ArQuiver::for_modules(&cat)? };
    Ok(match format {
        Format::Json => pretty(&ar.to_json(&q)),
        Format::Dot => ar.to_dot(),
        Format::Ascii => ar.to_ascii(None),
        Format::Csv => {
            let mut s = String::from("vertex,slice,row\n");
            for v in &ar.vertices {
                let _ = writeln!(s, "{},{},{}", v.label, v.slice, v.row);
            }
            s
        }
    })
}

fn cmd_silting(quiver: &str, tilting_only: bool, oracle: bool, format: Format) -> Result<String, Failure> {
    let q = load(quiver)?;
    let cat = TwoTermCategory::new(&q)?;
    let objects = if tilting_only { enumerate_tilting(&q)? } else { enumerate_silting(&q)? };
    if oracle {
        let brute =
            if tilting_only { brute_force_tilting(cat.module_category()) } else { brute_force_silting(&cat) };
        if brute != objects {
            return Err(Failure::Check(format!(
                "oracle mismatch: recursion found {}, brute force found {}",
                objects.len(),
                brute.len()
            )));
        }
    }
    Ok(match format {
        Format::Json => pretty(&report::objects_json(&cat, &objects)),
        Format::Csv => report::objects_csv(&cat, &objects),
        Format::Ascii => {
            let ar = ArQuiver::two_term(cat.module_category())?;
            let mut s = report::objects_ascii(&cat, &ar, &objects);
            let kind = if tilting_only { "basic tilting modules" } else { "basic 2-term silting complexes" };
            let _ = writeln!(s, "{} {kind}", objects.len());
            s
        }
        Format::Dot => return Err(unsupported(format, "silting")),
    })
}

fn cmd_classify(quiver: &str, oracle: bool, format: Format) -> Result<String, Failure> {
    let q = load(quiver)?;
    let cat = TwoTermCategory::new(&q)?;
    let objects = enumerate_silting(&q)?;
    if oracle && brute_force_silting(&cat) != objects {
        return Err(Failure::Check("oracle mismatch in the silting enumeration".into()));
    }
    let records = classify_all(&cat, &objects)?;
    let classes = dedupe(&records);
    let rows = report::summary_rows(&cat, &records, &classes);
    Ok(match format {
        Format::Json => {
            let summary: Vec<Value> = rows
                .iter()
                .map(|r| json!({"class": r.class, "type": r.label, "quiver": r.quiver, "relations": r.relations, "members": r.objects}))
                .collect();
            pretty(&json!({
                "records": report::records_json(&cat, &records, &classes),
                "classes": summary,
                "families": silted::classify::family_counts(&classes),
            }))
        }
        Format::Csv => report::summary_csv(&rows),
        Format::Ascii => report::summary_text(&rows),
        Format::Dot => {
            let mut s = String::new();
            for class in &classes {
                s.push_str(&records[class.members[0]].algebra.to_dot());
            }
            s
        }
    })
}

fn cmd_reproduce(format: Format) -> Result<(String, bool), Failure> {
    let suite = run_suite()?;
    let text = match format {
        Format::Ascii => suite.render(),
        Format::Json => pretty(&json!({
            "passed": suite.passed(),
            "counts": suite.counts.iter().map(|r| json!({
                "fixture": r.fixture, "quantity": r.quantity, "expected": r.expected, "computed": r.computed,
            })).collect::<Vec<_>>(),
            "criteria": suite.criteria.iter().map(|c| json!({
                "number": c.number, "title": c.title, "checks": c.checks, "passed": c.passed(), "failures": c.failures,
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut s = String::from("fixture,quantity,expected,computed,passed\n");
            for r in &suite.counts {
                let _ = writeln!(s, "{},{},{},{},{}", r.fixture, r.quantity, r.expected, r.computed, r.passed());
            }
            s
        }
        Format::Dot => return Err(unsupported(format, "paper-suite")),
    };
    Ok((text, suite.passed()))
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .map_err(|e| Failure::Internal(e.to_string()))?;
    }
    let (text, passed) = match &cli.command {
        Command::Ar { quiver, two_term } => (cmd_ar(quiver, *two_term, cli.format)?, true),
        Command::Silting { quiver, tilting_only, oracle } => (cmd_silting(quiver, *tilting_only, *oracle, cli.format)?, true),
        Command::Classify { quiver, oracle } => (cmd_classify(quiver, *oracle, cli.format)?, true),
        Command::Reproduce => cmd_reproduce(cli.format)?,
    };
    match &cli.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| Failure::Internal(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Check("reproduction suite reported failures".into()))
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("silted: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
