//! Ring-definition files, reports and the `graded` command-line tool.

pub mod error;
pub mod file;
pub mod report;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use graded_core::audit::{self, AuditOptions, CorpusRing, Theorem};
use graded_core::{catalog, ideal, primality, quotient_ring, ElementSet, Limits, Reading};

pub use error::CliError;
pub use file::{emit_ring_file, parse_ring_file, RingFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Rings up to this order also get their non-graded right ideals listed.
const UNGRADED_LISTING_ORDER: usize = 64;

#[derive(Debug, Parser)]
#[command(
    name = "graded",
    version,
    about = "Exact algebra of finite graded rings"
)]
pub struct Cli {
    /// Cap on ring order for validation and ideal enumeration
    /// [default: 4096 for validation, 256 for enumeration]
    #[arg(long, global = true)]
    pub max_order: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReadingArg {
    Xr,
    Rxr,
    Both,
}

impl ReadingArg {
    fn readings(self) -> Vec<Reading> {
        match self {
            ReadingArg::Xr => vec![Reading::XrOnly],
            ReadingArg::Rxr => vec![Reading::Rxr],
            ReadingArg::Both => Reading::BOTH.to_vec(),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check ring, group and grading axioms
    Validate { file: PathBuf },
    /// List graded right (or two-sided) ideals in canonical order
    Ideals {
        file: PathBuf,
        #[arg(long)]
        twosided: bool,
    },
    /// Decide prime, weakly prime and almost prime for every proper graded right ideal
    Classify {
        file: PathBuf,
        /// Tab-separated output, one record per ideal
        #[arg(long)]
        machine: bool,
    },
    /// Audit the transfer results on a ring file or on the built-in corpus
    Audit {
        #[arg(required_unless_present = "corpus", conflicts_with = "corpus")]
        file: Option<PathBuf>,
        #[arg(long)]
        corpus: bool,
        /// Comma-separated audit ids (default: all)
        #[arg(long, value_delimiter = ',')]
        theorems: Vec<String>,
        #[arg(long, value_enum, default_value = "both")]
        reading: ReadingArg,
        /// Skip the search for converse failures of the quotient transfer
        #[arg(long)]
        no_converse: bool,
    },
    /// Emit the ring file of R/K for a graded two-sided ideal K
    Quotient {
        file: PathBuf,
        /// Elements of K, comma-separated
        #[arg(long, value_delimiter = ',', required = true)]
        ideal: Vec<usize>,
    },
    /// Emit the ring file of a catalog entry
    Catalog {
        /// Entry name, or `list`
        name: String,
        #[arg(long, allow_negative_numbers = true)]
        param: Option<i64>,
    },
}

/// Text written to stdout plus the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            code: EXIT_OK,
        }
    }
}

fn limits(cli: &Cli) -> Limits {
    cli.max_order
        .map(Limits::with_max_order)
        .unwrap_or_default()
}

fn load(path: &Path, limits: &Limits) -> Result<RingFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_ring_file(&text, limits)
}

/// Runs one parsed command. Errors map to exit codes through
/// [`CliError::exit_code`].
pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    let limits = limits(cli);
    match &cli.command {
        Command::Validate { file } => {
            let rf = load(file, &limits)?;
            let mut out = report::summary(&rf.name, &rf.ring);
            out.push_str("\nring, group and grading axioms: ok\n");
            Ok(Output::ok(out))
        }
        Command::Ideals { file, twosided } => {
            let rf = load(file, &limits)?;
            let ideals = if *twosided {
                ideal::enumerate_graded_twosided_ideals(&rf.ring, &limits)?
            } else {
                ideal::enumerate_graded_right_ideals(&rf.ring, &limits)?
            };
            Ok(Output::ok(report::ideals_text(&ideals)))
        }
        Command::Classify { file, machine } => {
            let rf = load(file, &limits)?;
            let report = primality::classify_all(&rf.ring, &limits)?;
            if *machine {
                return Ok(Output::ok(report::classification_machine(&report)));
            }
            let ungraded = if rf.ring.order() <= UNGRADED_LISTING_ORDER {
                ideal::enumerate_right_ideals(&rf.ring, &limits)
                    .ok()
                    .map(|all| {
                        all.into_iter()
                            .filter(|s| !ideal::is_graded(&rf.ring, s))
                            .collect::<Vec<_>>()
                    })
            } else {
                None
            };
            Ok(Output::ok(report::classification_text(
                &rf.name,
                &rf.ring,
                &report,
                ungraded.as_deref(),
            )))
        }
        Command::Audit {
            file,
            corpus,
            theorems,
            reading,
            no_converse,
        } => {
            let rings = if *corpus {
                audit::default_corpus()
            } else {
                let path = file
                    .as_ref()
                    .expect("clap requires a file without --corpus");
                let rf = load(path, &limits)?;
                vec![CorpusRing::new(rf.name, rf.ring)]
            };
            let ids = if theorems.is_empty() {
                Theorem::ALL.to_vec()
            } else {
                theorems
                    .iter()
                    .map(|t| Theorem::parse(t.trim()))
                    .collect::<Result<Vec<_>, _>>()?
            };
            let options = AuditOptions {
                limits,
                readings: reading.readings(),
                converse_search: !no_converse,
            };
            let results = audit::audit_many(&rings, &ids, &options)?;
            let code = if results.iter().all(|r| r.passed()) {
                EXIT_OK
            } else {
                EXIT_COUNTEREXAMPLE
            };
            Ok(Output {
                stdout: report::audit_text(&results),
                code,
            })
        }
        Command::Quotient { file, ideal: elems } => {
            let rf = load(file, &limits)?;
            let n = rf.ring.order();
            if let Some(&bad) = elems.iter().find(|&&x| x >= n) {
                return Err(CliError::Usage(format!(
                    "element {bad} is out of range [0, {n})"
                )));
            }
            let k = ElementSet::from_indices(n, elems.iter().copied());
            let gr = std::sync::Arc::new(rf.ring);
            let q = quotient_ring(&gr, &k)?;
            let list: Vec<String> = k.iter().map(|x| x.to_string()).collect();
            let name = format!("{}/{}", rf.name, list.join(","));
            Ok(Output::ok(emit_ring_file(&name, &q.ring)))
        }
        Command::Catalog { name, param } => {
            if name == "list" {
                let mut out = String::new();
                for e in catalog::ENTRIES {
                    out.push_str(&format!(
                        "{:<14}{:<26}{}\n",
                        e.name,
                        e.parameter.unwrap_or("-"),
                        e.description
                    ));
                }
                return Ok(Output::ok(out));
            }
            let gr = catalog::build(name, *param)?;
            Ok(Output::ok(emit_ring_file(
                &catalog::instance_name(name, *param),
                &gr,
            )))
        }
    }
}

/// Parses arguments and runs, returning the exit code. Usage errors exit
/// with 1 so that 2 stays reserved for counterexamples.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
