//! The `nfh` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use nfh_core::hfa::{self, Graph, Side};
use nfh_core::learn::{automated_teacher, learn_traced, LearnerConfig};
use nfh_core::{canon, hre, Fragment, Nfh, Sigma};

use crate::error::CliError;
use crate::format;

#[derive(Parser, Debug)]
#[command(name = "nfh", version, about = "Nondeterministic finite hyperautomata")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FragmentArg {
    Forall,
    Exists,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compile an HRE file into an NFH.
    Compile {
        hre: PathBuf,
        /// Comma-separated alphabet; defaults to the symbols the HRE mentions.
        #[arg(long)]
        sigma: Option<String>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Decide whether the NFH accepts the hyperword (exit 0 true, 1 false).
    Member { nfh: PathBuf, hyperword: PathBuf },
    /// Print a witness hyperword, or EMPTY (exit 1).
    Empty { nfh: PathBuf },
    /// Decide L(A1) ⊆ L(A2).
    Contains { nfh1: PathBuf, nfh2: PathBuf },
    /// Decide L(A1) = L(A2) for alternation-free operands.
    Equiv { nfh1: PathBuf, nfh2: PathBuf },
    /// Learn the target's hyperlanguage with the automated teacher.
    Learn {
        #[arg(long)]
        target: PathBuf,
        #[arg(long, value_enum)]
        fragment: FragmentArg,
        /// Write the learner trace as JSON lines.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Build the Hamiltonian-cycle membership instance of an edge list.
    GenHam {
        edges: PathBuf,
        #[arg(short)]
        o: PathBuf,
        /// Where to write the hyperword (also accepted as `-o-hw`).
        #[arg(long = "o-hw")]
        o_hw: PathBuf,
    },
    /// Print the underlying automaton in DOT.
    Dot { nfh: PathBuf },
    /// Canonical form of an alternation-free NFH.
    Canon {
        nfh: PathBuf,
        /// Stop after the sequence/permutation closure.
        #[arg(long)]
        close: bool,
        /// Only report whether the input is already complete.
        #[arg(long, conflicts_with = "close")]
        check: bool,
        #[arg(short)]
        o: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load(path: &Path) -> Result<Nfh, CliError> {
    format::read_nfh(&read(path)?)
}

/// Writes `text` to `path`, or to `out` when no path is given.
fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => write_file(p, text),
        None => out.write_all(text.as_bytes()).map_err(|source| CliError::Io {
            path: PathBuf::from("<stdout>"),
            source,
        }),
    }
}

fn say(out: &mut dyn Write, line: &str) -> Result<(), CliError> {
    emit(out, None, &format!("{line}\n"))
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Compile { hre: path, sigma, o } => {
            let ast = hre::parse(&read(&path)?)?;
            let sigma = match sigma {
                Some(s) => Sigma::new(s.split(','))?,
                None => {
                    let syms = ast.symbols();
                    if syms.is_empty() {
                        return Err(CliError::Usage(
                            "the HRE mentions no symbols; pass --sigma".into(),
                        ));
                    }
                    Sigma::new(syms)?
                }
            };
            let a = hre::compile(&ast, &sigma)?;
            emit(out, o.as_deref(), &format::write_nfh(&a))?;
            Ok(0)
        }
        Command::Member { nfh, hyperword } => {
            let a = load(&nfh)?;
            let s = format::read_hyperword(a.sigma(), &read(&hyperword)?)?;
            let v = hfa::member(&a, &s)?;
            say(out, if v { "true" } else { "false" })?;
            Ok(if v { 0 } else { 1 })
        }
        Command::Empty { nfh } => {
            let a = load(&nfh)?;
            match hfa::nonempty(&a)? {
                Some(w) => {
                    say(out, &w.display(a.sigma()))?;
                    Ok(0)
                }
                None => {
                    say(out, "EMPTY")?;
                    Ok(1)
                }
            }
        }
        Command::Contains { nfh1, nfh2 } => {
            let (a1, a2) = (load(&nfh1)?, load(&nfh2)?);
            match hfa::contains(&a1, &a2)? {
                None => {
                    say(out, "CONTAINED")?;
                    Ok(0)
                }
                Some(w) => {
                    say(out, &format!("counterexample {}", w.display(a1.sigma())))?;
                    Ok(1)
                }
            }
        }
        Command::Equiv { nfh1, nfh2 } => {
            let (a1, a2) = (load(&nfh1)?, load(&nfh2)?);
            match hfa::equivalent(&a1, &a2)? {
                None => {
                    say(out, "EQUIVALENT")?;
                    Ok(0)
                }
                Some(sep) => {
                    let side = match sep.accepted_by {
                        Side::Left => "first",
                        Side::Right => "second",
                    };
                    say(
                        out,
                        &format!(
                            "counterexample {} accepted by the {side} operand only",
                            sep.hyperword.display(a1.sigma())
                        ),
                    )?;
                    Ok(1)
                }
            }
        }
        Command::Learn {
            target,
            fragment,
            trace,
            o,
        } => {
            let t = load(&target)?;
            let cfg = LearnerConfig::default();
            let mut teacher = automated_teacher(&t, &cfg)?;
            let fragment = match fragment {
                FragmentArg::Forall => Fragment::ForallOnly,
                FragmentArg::Exists => Fragment::ExistsOnly,
            };
            let mut lines = String::new();
            let learned = learn_traced(&mut teacher, fragment, &cfg, &mut |e| {
                let v = serde_json::json!({
                    "event": e.event,
                    "iteration": e.iteration,
                    "k": e.k,
                    "detail": e.detail,
                });
                lines.push_str(&v.to_string());
                lines.push('\n');
            })?;
            if let Some(p) = trace {
                write_file(&p, &lines)?;
            }
            emit(out, o.as_deref(), &format::write_nfh(&learned))?;
            Ok(0)
        }
        Command::GenHam { edges, o, o_hw } => {
            let (n, e) = format::read_edges(&read(&edges)?)?;
            let (a, s) = hfa::gen_hamiltonian(&Graph::new(n, e)?)?;
            write_file(&o, &format::write_nfh(&a))?;
            write_file(&o_hw, &format::write_hyperword(a.sigma(), &s))?;
            Ok(0)
        }
        Command::Dot { nfh } => {
            let a = load(&nfh)?;
            emit(out, None, &format::to_dot(&a))?;
            Ok(0)
        }
        Command::Canon { nfh, close, check, o } => {
            let a = load(&nfh)?;
            if check {
                let r = canon::check_complete(&a)?;
                return match r.counterexample {
                    None => {
                        say(out, "COMPLETE")?;
                        Ok(0)
                    }
                    Some((w, z)) => {
                        say(out, &format!("INCOMPLETE {} {}", w.display(a.sigma()), z))?;
                        Ok(1)
                    }
                };
            }
            let c = if close {
                match a.fragment() {
                    Fragment::ForallOnly => canon::sequence_closure(&a)?,
                    _ => canon::permutation_closure(&a)?,
                }
            } else {
                canon::canonical_form(&a)?
            };
            emit(out, o.as_deref(), &format::write_nfh(&c))?;
            Ok(0)
        }
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
/// Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let args = args.into_iter().map(|a| {
        let a: OsString = a.into();
        if a == "-o-hw" {
            OsString::from("--o-hw")
        } else {
            a
        }
    });
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
