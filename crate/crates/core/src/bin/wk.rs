//! `wk` — command-line front end.
//!
//! Exit status: 0 accept/pass, 1 reject/fail, 2 usage or input error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use necklace_wk::bridge::{grammar_to_wk, wk_to_grammar};
use necklace_wk::harness::{self, Mode};
use necklace_wk::necklace::necklaces_of;
use necklace_wk::{engine, LinearGrammar, OracleId, WKAutomaton, Word};

#[derive(Parser)]
#[command(
    name = "wk",
    version,
    about = "Sensing 5'->3' WK automata over words and necklaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide membership of one word (`_` is the empty word)
    Accept {
        file: PathBuf,
        word: String,
        #[arg(long, default_value = "plain")]
        mode: Mode,
        /// Print an accepting computation (plain mode)
        #[arg(long)]
        trace: bool,
    },
    /// List accepted words up to a length
    Enum {
        file: PathBuf,
        #[arg(long, default_value = "plain")]
        mode: Mode,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        /// One least rotation per conjugate class
        #[arg(long)]
        necklaces: bool,
    },
    /// Print the restriction classes (N F S 1) the automaton belongs to
    Classify { file: PathBuf },
    /// Grammar to automaton, or automaton to grammar with --reverse
    Compile {
        input: PathBuf,
        output: PathBuf,
        #[arg(long)]
        reverse: bool,
    },
    /// Run the built-in witness suite
    Witness {
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Compare an automaton with a catalog oracle on a bounded slice
    Compare {
        file: PathBuf,
        #[arg(long, default_value = "weak")]
        mode: Mode,
        #[arg(long)]
        oracle: OracleId,
        #[arg(long)]
        max_len: Option<usize>,
    },
}

type CliResult = Result<bool, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn is_grammar(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .and_then(|l| l.split(':').next())
        .is_some_and(|d| matches!(d.trim(), "terminals" | "nonterminals" | "start" | "prod"))
}

/// Automaton files are used as is; grammar files are compiled first.
fn load(path: &Path) -> Result<WKAutomaton, String> {
    let text = read(path)?;
    let ctx = |e: necklace_wk::Error| format!("{}: {e}", path.display());
    if is_grammar(&text) {
        let g = LinearGrammar::parse(&text).map_err(ctx)?;
        grammar_to_wk(&g).map_err(ctx)
    } else {
        WKAutomaton::parse(&text).map_err(ctx)
    }
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Accept {
            file,
            word,
            mode,
            trace,
        } => {
            let m = load(&file)?;
            let w: Word = word.parse().map_err(|e| format!("{word}: {e}"))?;
            let e = |e: necklace_wk::Error| e.to_string();
            let ok = match mode {
                Mode::Plain => {
                    let run = engine::accepting_run(&m, &w).map_err(e)?;
                    println!("{}", if run.is_some() { "ACCEPT" } else { "REJECT" });
                    if let (true, Some(run)) = (trace, &run) {
                        println!("{run}");
                    }
                    run.is_some()
                }
                Mode::Weak => match engine::weak_witness(&m, &w).map_err(e)? {
                    Some(c) => {
                        println!("ACCEPT witness {c}");
                        true
                    }
                    None => {
                        println!("REJECT");
                        false
                    }
                },
                Mode::Strong => match engine::strong_counterexample(&m, &w).map_err(e)? {
                    None => {
                        println!("ACCEPT");
                        true
                    }
                    Some(c) => {
                        println!("REJECT failing {c}");
                        false
                    }
                },
            };
            Ok(ok)
        }
        Command::Enum {
            file,
            mode,
            max_len,
            necklaces,
        } => {
            let m = load(&file)?;
            let report = harness::enumerate(&m, mode, max_len);
            if necklaces {
                for n in necklaces_of(&report.words) {
                    println!("{}", n.canon());
                }
            } else {
                for w in &report.words {
                    println!("{w}");
                }
            }
            Ok(true)
        }
        Command::Classify { file } => {
            println!("{}", load(&file)?.classify());
            Ok(true)
        }
        Command::Compile {
            input,
            output,
            reverse,
        } => {
            let text = read(&input)?;
            let ctx = |e: necklace_wk::Error| format!("{}: {e}", input.display());
            let out = if reverse {
                let m = WKAutomaton::parse(&text).map_err(ctx)?;
                wk_to_grammar(&m).map_err(ctx)?.serialize()
            } else {
                let g = LinearGrammar::parse(&text).map_err(ctx)?;
                grammar_to_wk(&g).map_err(ctx)?.serialize()
            };
            fs::write(&output, out).map_err(|e| format!("{}: {e}", output.display()))?;
            Ok(true)
        }
        Command::Witness { max_len } => {
            let report = harness::run_witness_suite(max_len);
            print!("{report}");
            Ok(report.all_passed())
        }
        Command::Compare {
            file,
            mode,
            oracle,
            max_len,
        } => {
            let m = load(&file)?;
            let max_len = max_len.unwrap_or_else(|| harness::default_max_len(m.alphabet()));
            let v = harness::compare(&m, mode, &oracle, max_len).map_err(|e| e.to_string())?;
            let verdict = if v.equivalent {
                "EQUIVALENT"
            } else {
                "DIFFERENT"
            };
            let mut line = format!("{verdict} {mode} {oracle} {max_len}");
            for c in v.counterexamples() {
                line.push(' ');
                line.push_str(&c);
            }
            println!("{line}");
            Ok(v.equivalent)
        }
    }
}
