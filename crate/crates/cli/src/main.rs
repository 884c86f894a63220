use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use barjanet::corners::corners_of;
use barjanet::io::{parse_points, parse_term_set};
use barjanet::report::{
    BarCodeReport, BasisReport, CompletedReport, CompletionJson, CornersReport, NmpReport,
    TermSetReport,
};
use barjanet::{
    complete_with_report, compute_basis, groebner_escalier, BarCode, Error, JanetTable, PointSet,
    TermSet,
};
use clap::{Parser, Subcommand, ValueEnum};

const EXIT_PARSE: u8 = 1;
const EXIT_CONSISTENCY: u8 = 2;
const EXIT_INCOMPLETE: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "barjanet",
    version,
    about = "Bar Codes, Janet-like division and ideals of points"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write the report to a file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Print nothing on standard output; only the exit status matters.
    #[arg(long, short, global = true)]
    quiet: bool,

    /// Check completeness on all cores.
    #[arg(long, global = true)]
    parallel: bool,

    /// Diagnostics on standard error (-v, -vv).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Draw the Bar Code of a term set, with stars.
    Render { input: String },
    /// Nonmultiplicative powers of every term.
    Nmp { input: String },
    /// Star positions of the Bar Code.
    Stars { input: String },
    /// Star set of an order ideal.
    StarSet { input: String },
    /// Check Janet-like completeness; exits 3 when incomplete.
    CheckComplete { input: String },
    /// Janet-like completion of a term set.
    Complete { input: String },
    /// Infinite corners of the Janet-like cones.
    Corners { input: String },
    /// Lex Groebner escalier of a points file.
    Escalier { input: String },
    /// Reduced Janet-like basis of the ideal of a points file.
    Basis { input: String },
}

impl Command {
    fn input(&self) -> &str {
        match self {
            Command::Render { input }
            | Command::Nmp { input }
            | Command::Stars { input }
            | Command::StarSet { input }
            | Command::CheckComplete { input }
            | Command::Complete { input }
            | Command::Corners { input }
            | Command::Escalier { input }
            | Command::Basis { input } => input,
        }
    }
}

enum Failure {
    Io(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) | Failure::Lib(Error::Parse { .. }) => EXIT_PARSE,
            Failure::Lib(Error::Singular | Error::BoundExceeded(_)) => EXIT_INTERNAL,
            Failure::Lib(_) => EXIT_CONSISTENCY,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Io(m) => m.clone(),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

struct Outcome {
    report: String,
    status: u8,
}

impl Outcome {
    fn ok(report: String) -> Self {
        Outcome { report, status: 0 }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Io(format!("reading standard input: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("reading {path}: {e}")))
    }
}

fn json<T: ?Sized + serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn term_lines(set: &TermSet) -> String {
    set.iter().map(|t| format!("{t}\n")).collect()
}

fn load_terms(text: &str) -> Result<TermSet, Failure> {
    Ok(parse_term_set(text)?)
}

fn load_points(text: &str) -> Result<PointSet, Failure> {
    Ok(parse_points(text)?)
}

fn nmp_table(table: &JanetTable) -> String {
    let rows: Vec<(String, String)> = table
        .annotations()
        .iter()
        .map(|a| {
            let powers = if a.nmp.is_empty() {
                "∅".to_string()
            } else {
                a.nmp
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            (a.term.to_string(), powers)
        })
        .collect();
    let width = rows
        .iter()
        .map(|(t, _)| t.chars().count())
        .chain(std::iter::once(1))
        .max()
        .unwrap();
    let mut out = format!("{:<width$}  NMP(t,U)\n", "t");
    for (t, p) in rows {
        writeln!(out, "{t:<width$}  {p}").unwrap();
    }
    out
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let text = read_input(cli.command.input())?;
    let start = Instant::now();
    let json_out = cli.format == Format::Json;
    let outcome = match &cli.command {
        Command::Render { .. } => {
            let code = BarCode::build(&load_terms(&text)?)?;
            let stars = code.star_positions();
            Outcome::ok(if json_out {
                json(&BarCodeReport::new(&code, &stars))
            } else {
                code.render_ascii(Some(&stars))
            })
        }
        Command::Nmp { .. } => {
            let table = JanetTable::new(&load_terms(&text)?)?;
            Outcome::ok(if json_out {
                json(&NmpReport::new(table.annotations()))
            } else {
                nmp_table(&table)
            })
        }
        Command::Stars { .. } => {
            let code = BarCode::build(&load_terms(&text)?)?;
            let stars = code.star_positions();
            Outcome::ok(if json_out {
                json(&BarCodeReport::new(&code, &stars).stars)
            } else {
                (1..=code.nvars())
                    .map(|i| {
                        let bars: Vec<String> = stars
                            .in_row(i)
                            .iter()
                            .map(|j| (j + 1).to_string())
                            .collect();
                        format!("row {i}: {}\n", bars.join(" "))
                    })
                    .collect()
            })
        }
        Command::StarSet { .. } => {
            let set = load_terms(&text)?;
            if let Some(t) = set.order_ideal_violation() {
                return Err(Error::NotOrderIdeal(t.to_string()).into());
            }
            let stars = BarCode::build(&set)?.star_set()?;
            Outcome::ok(if json_out {
                json(&TermSetReport::new(&stars))
            } else {
                term_lines(&stars)
            })
        }
        Command::CheckComplete { .. } => {
            let table = JanetTable::new(&load_terms(&text)?)?;
            let report = table.completeness(cli.parallel);
            let status = if report.complete { 0 } else { EXIT_INCOMPLETE };
            let body = if json_out {
                json(&CompletionJson::new(&report))
            } else {
                let mut out = String::from(if report.complete {
                    "complete\n"
                } else {
                    "incomplete\n"
                });
                for w in report.failing() {
                    writeln!(out, "{} * {}: no Janet-like divisor", w.term, w.power).unwrap();
                }
                out
            };
            Outcome {
                report: body,
                status,
            }
        }
        Command::Complete { .. } => {
            let set = load_terms(&text)?;
            let (done, report) = complete_with_report(&set)?;
            Outcome::ok(if json_out {
                json(&CompletedReport::new(&done, &report))
            } else {
                done.iter()
                    .map(|t| {
                        let mark = if report.added.contains(t) { "+" } else { " " };
                        format!("{mark} {t}\n")
                    })
                    .collect()
            })
        }
        Command::Corners { .. } => {
            let table = JanetTable::new(&load_terms(&text)?)?;
            let corners = corners_of(&table);
            Outcome::ok(if json_out {
                json(&CornersReport::new(&corners))
            } else {
                let width = corners
                    .iter()
                    .map(|(t, _)| t.to_string().len())
                    .max()
                    .unwrap_or(1);
                corners
                    .iter()
                    .map(|(t, c)| format!("{:<width$}  {c}\n", t.to_string()))
                    .collect()
            })
        }
        Command::Escalier { .. } => {
            let esc = groebner_escalier(&load_points(&text)?)?;
            Outcome::ok(if json_out {
                json(&TermSetReport::new(&esc))
            } else {
                term_lines(&esc)
            })
        }
        Command::Basis { .. } => {
            let comp = compute_basis(&load_points(&text)?)?;
            Outcome::ok(if json_out {
                json(&BasisReport::new(&comp))
            } else {
                comp.basis.iter().map(|f| format!("{f}\n")).collect()
            })
        }
    };
    if cli.verbose > 0 {
        eprintln!("{}: {:?}", subcommand_name(&cli.command), start.elapsed());
    }
    if cli.verbose > 1 {
        eprintln!("exit status {}", outcome.status);
    }
    Ok(outcome)
}

fn subcommand_name(c: &Command) -> &'static str {
    match c {
        Command::Render { .. } => "render",
        Command::Nmp { .. } => "nmp",
        Command::Stars { .. } => "stars",
        Command::StarSet { .. } => "star-set",
        Command::CheckComplete { .. } => "check-complete",
        Command::Complete { .. } => "complete",
        Command::Corners { .. } => "corners",
        Command::Escalier { .. } => "escalier",
        Command::Basis { .. } => "basis",
    }
}

fn emit(cli: &Cli, report: &str) -> Result<(), Failure> {
    if let Some(path) = &cli.output {
        std::fs::write(path, report)
            .map_err(|e| Failure::Io(format!("writing {}: {e}", path.display())))?;
    } else if !cli.quiet {
        let mut out = io::stdout().lock();
        out.write_all(report.as_bytes())
            .and_then(|_| out.flush())
            .map_err(|e| Failure::Io(format!("writing standard output: {e}")))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|o| emit(&cli, &o.report).map(|_| o.status)) {
        Ok(status) => ExitCode::from(status),
        Err(f) => {
            if !cli.quiet {
                eprintln!("error: {}", f.message());
            }
            ExitCode::from(f.code())
        }
    }
}
