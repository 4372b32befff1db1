use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qflag_core::flagext::{associated_graded, build_relations};
use qflag_core::qpair::{omega, parse_generator};
use qflag_core::{Letter, Suite, VerificationReport};
use serde_json::json;

#[derive(Parser)]
#[command(name = "qflag", version, about = "Exact checks for the quantum exterior algebra of the full quantum flag manifold of SU(3)")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Run on the q = 1 algebra (relation-only suites).
    #[arg(long, global = true)]
    q_at_one: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite, or all of them.
    Verify {
        #[arg(value_parser = suite_names())]
        suite: String,
    },
    /// List the irreducible words of one degree.
    Basis {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=6))]
        degree: u8,
    },
    /// Print the rewriting rules.
    Relations {
        #[arg(long)]
        dump: bool,
        /// The associated graded relations instead.
        #[arg(long)]
        graded: bool,
    },
    /// Compute a derived quantity.
    Derive {
        #[command(subcommand)]
        what: Derive,
    },
}

#[derive(Subcommand)]
enum Derive {
    /// omega of a generator, after subtracting its counit.
    Omega {
        #[arg(long)]
        generator: String,
    },
}

fn suite_names() -> clap::builder::PossibleValuesParser {
    let mut names = vec!["all"];
    names.extend(Suite::ALL.iter().map(|s| s.name()));
    clap::builder::PossibleValuesParser::new(names)
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

/// Flips the check named by `QFLAG_FORCE_FAIL`, if any.
fn force_failure(report: &mut VerificationReport) {
    let Ok(id) = std::env::var("QFLAG_FORCE_FAIL") else { return };
    for c in report.checks.iter_mut().filter(|c| c.id == id) {
        c.expected = format!("not {}", c.expected);
        c.pass = false;
    }
    report.recompute();
}

fn text_table(r: &VerificationReport) -> String {
    let w_id = r.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
    let w_exp = r.checks.iter().map(|c| c.expected.len()).max().unwrap_or(0).min(48);
    let mut s = format!("suite {}\n", r.suite);
    for c in &r.checks {
        let status = if c.pass { "PASS" } else { "FAIL" };
        s.push_str(&format!("{status}  {:w_id$}  {:w_exp$}  {}\n", c.id, c.expected, c.actual));
        if !c.pass {
            s.push_str(&format!("      claim: {}\n", c.citation));
        }
    }
    s.push_str(&format!("overall {}\n", if r.overall { "PASS" } else { "FAIL" }));
    s
}

fn emit(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(report).expect("report serialises") + "\n",
        Format::Text => text_table(report),
    }
}

fn write_out(common: &Common, body: &str) -> io::Result<()> {
    match &common.out {
        Some(p) => fs::write(p, body),
        None => io::stdout().write_all(body.as_bytes()),
    }
}

fn verify(common: &Common, suite: &str) -> Result<(String, bool), ExitCode> {
    let selected: Vec<Suite> = match suite {
        "all" => Suite::ALL.into_iter().filter(|s| !common.q_at_one || s.runs_at_q_one()).collect(),
        name => {
            let s = Suite::parse(name).ok_or_else(|| usage(&format!("unknown suite `{name}`")))?;
            if common.q_at_one && !s.runs_at_q_one() {
                return Err(usage(&format!("suite `{name}` does not run at q = 1")));
            }
            vec![s]
        }
    };
    let alg = qflag_core::suites::algebra(common.q_at_one).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(1)
    })?;
    let results: Vec<_> = std::thread::scope(|scope| {
        let handles: Vec<_> = selected.iter().map(|s| scope.spawn(|| s.run(&alg, common.q_at_one))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread")).collect()
    });
    let mut reports = Vec::new();
    for r in results {
        reports.push(r.map_err(|e| {
            eprintln!("error: {e}");
            ExitCode::from(1)
        })?);
    }
    let mut report = if reports.len() == 1 {
        reports.pop().expect("one report")
    } else {
        let mut all = VerificationReport::new("all");
        for r in reports {
            all.absorb(r);
        }
        all
    };
    force_failure(&mut report);
    Ok((emit(&report, common.format), report.overall))
}

fn basis(common: &Common, degree: u8) -> String {
    let alg = build_relations();
    let words: Vec<String> = alg.basis(degree as usize).iter().map(|w| alg.render_word(w)).collect();
    match common.format {
        Format::Json => json!({ "degree": degree, "basis": words }).to_string() + "\n",
        Format::Text => words.iter().map(|w| format!("{w}\n")).collect(),
    }
}

fn relations(common: &Common, graded: bool) -> String {
    let alg = if graded { associated_graded() } else { build_relations() };
    match common.format {
        Format::Json => {
            let rules: Vec<_> = alg
                .system()
                .rules()
                .iter()
                .map(|r| json!({ "lhs": alg.render_word(&r.lhs()), "rhs": alg.render(r.rhs()) }))
                .collect();
            json!({ "graded": graded, "rules": rules }).to_string() + "\n"
        }
        Format::Text => alg.system().dump(),
    }
}

fn derive_omega(common: &Common, name: &str) -> Result<String, ExitCode> {
    let g = parse_generator(name).map_err(|e| usage(&e.to_string()))?;
    let plus = g.plus();
    let t = omega(&plus).expect("plus has zero counit");
    Ok(match common.format {
        Format::Json => {
            let mut terms = Vec::new();
            for a in Letter::ALL {
                for b in Letter::ALL {
                    let c = t.get(a, b);
                    if !c.is_zero() {
                        terms.push(json!({ "left": a.name(), "right": b.name(), "coefficient": c.to_string() }));
                    }
                }
            }
            json!({ "generator": name, "element": plus.to_string(), "omega": t.to_string(), "terms": terms }).to_string()
                + "\n"
        }
        Format::Text => format!("omega({name}^+) = {t}\n"),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = &cli.common;
    let (body, ok) = match &cli.command {
        Command::Verify { suite } => match verify(common, suite) {
            Ok(x) => x,
            Err(code) => return code,
        },
        Command::Basis { degree } => (basis(common, *degree), true),
        Command::Relations { dump, graded } => {
            if !dump {
                return usage("`relations` needs --dump");
            }
            (relations(common, *graded), true)
        }
        Command::Derive { what: Derive::Omega { generator } } => match derive_omega(common, generator) {
            Ok(b) => (b, true),
            Err(code) => return code,
        },
    };
    if let Err(e) = write_out(common, &body) {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
