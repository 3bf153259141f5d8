//! The command-line front end.
//!
//! ```text
//! semigroups [--mode generic|regular|inverse] <command> …
//!
//!   size <file> [--breakdown]     number of elements
//!   classes <file>                numbers of R-, L-, H- and D-classes
//!   contains <file> <element>     exit 0 if the element belongs to the semigroup, 1 if not
//!   factorize <file> <element>    a word in the generators equal to the element
//!   idempotents <file> [--count]  the idempotents, one per line
//!   regular <file>                exit 0 if the semigroup is regular, 1 if not
//!   dorder <file> [--dot <path>]  the Hasse diagram of the D-class order in DOT
//!   selftest [--seed N] [--rounds N]
//! ```
//!
//! Exit codes: 0 success, 1 a negative answer or a semantic failure, 2 a parse or usage error.
//! A `mode` directive in the generator file overrides `--mode`.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::engine::{Green, Location, Mode, Semigroup};
use crate::error::Error;
use crate::oracle::{discrepancies, ExhaustiveSemigroup, DEFAULT_CAP};
use crate::random::{self, Kind};
use crate::text::{format_word, parse_element, parse_file, GeneratorFile};

/// The transformation semigroup of degree 5 used by the self-test.
pub const T_GENS: &str = include_str!("../../../data/T.gens");
/// The partial permutation semigroup of degree 9 used by the self-test.
pub const S_GENS: &str = include_str!("../../../data/S.gens");

#[derive(Debug, Parser)]
#[command(name = "semigroups", version, about = "Structure of finite semigroups given by generators")]
struct Cli {
    /// Enumeration mode; a `mode` line in the generator file takes precedence.
    #[arg(long, global = true)]
    mode: Option<Mode>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the number of elements.
    Size {
        file: PathBuf,
        /// Also print one line per strongly connected component of the λ-orbit.
        #[arg(long)]
        breakdown: bool,
    },
    /// Print the numbers of R-, L-, H- and D-classes.
    Classes { file: PathBuf },
    /// Test membership of an element (exit 1 if it is not a member).
    Contains { file: PathBuf, element: String },
    /// Print a word in the generators that evaluates to the element.
    Factorize { file: PathBuf, element: String },
    /// Print the idempotents.
    Idempotents {
        file: PathBuf,
        /// Print only their number.
        #[arg(long)]
        count: bool,
    },
    /// Test regularity (exit 1 if the semigroup is not regular).
    Regular { file: PathBuf },
    /// Print the Hasse diagram of the D-class order in DOT.
    Dorder {
        file: PathBuf,
        /// Write the DOT output to this file instead of standard output.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check the built-in examples and random instances against brute force.
    Selftest {
        /// Seed for the random instances.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of random instances.
        #[arg(long, default_value_t = 200)]
        rounds: usize,
    },
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Parse { .. } | Error::Invalid(_) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure { code: 2, message: e.to_string() }
    }
}

/// Runs the program on `args` (including the program name) and returns the exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn load(path: &PathBuf, flag: Option<Mode>) -> Result<(GeneratorFile, Semigroup), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure { code: 2, message: format!("cannot read {}: {e}", path.display()) })?;
    let file = parse_file(&text).map_err(|e| Failure { code: 2, message: format!("{}: {e}", path.display()) })?;
    let mode = file.mode.or(flag).unwrap_or(Mode::Generic);
    let sg = Semigroup::with_mode(file.generators.clone(), mode)?;
    Ok((file, sg))
}

fn element_argument(file: &GeneratorFile, text: &str) -> Result<crate::Element, Failure> {
    parse_element(text, file.context.as_ref()).map_err(|e| Failure { code: 2, message: format!("element {text:?}: {e}") })
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    match &cli.command {
        Command::Size { file, breakdown } => {
            let (_, sg) = load(file, cli.mode)?;
            writeln!(out, "{}", sg.size())?;
            if *breakdown {
                for (scc, group, reps) in sg.size_breakdown() {
                    writeln!(out, "{reps} x {scc} x {group} = {}", reps as u64 * scc as u64 * group)?;
                }
            }
            Ok(0)
        }
        Command::Classes { file } => {
            let (_, sg) = load(file, cli.mode)?;
            for which in [Green::R, Green::L, Green::H, Green::D] {
                writeln!(out, "{which:?} {}", sg.nr_classes(which)?)?;
            }
            Ok(0)
        }
        Command::Contains { file, element } => {
            let (gf, sg) = load(file, cli.mode)?;
            let y = element_argument(&gf, element)?;
            let found = matches!(sg.locate(&y)?, Location::Member(_));
            writeln!(out, "{found}")?;
            Ok(if found { 0 } else { 1 })
        }
        Command::Factorize { file, element } => {
            let (gf, sg) = load(file, cli.mode)?;
            let y = element_argument(&gf, element)?;
            let word = sg.factorize(&y)?;
            writeln!(out, "{}", format_word(&word))?;
            Ok(0)
        }
        Command::Idempotents { file, count } => {
            let (_, sg) = load(file, cli.mode)?;
            if *count {
                writeln!(out, "{}", sg.nr_idempotents()?)?;
            } else {
                for e in sg.idempotents()? {
                    writeln!(out, "{e}")?;
                }
            }
            Ok(0)
        }
        Command::Regular { file } => {
            let (_, sg) = load(file, cli.mode)?;
            let regular = sg.is_regular()?;
            writeln!(out, "{regular}")?;
            Ok(if regular { 0 } else { 1 })
        }
        Command::Dorder { file, dot } => {
            let (_, sg) = load(file, cli.mode)?;
            let order = sg.dorder()?;
            let mut labels = Vec::new();
            for d in 0..sg.dclass_reps().len() {
                let class = sg.dclass(d);
                labels.push(format!("{}, size {}", class.rep()?, class.size()?));
            }
            let text = order.to_dot(&labels);
            match dot {
                Some(path) => std::fs::write(path, text)?,
                None => write!(out, "{text}")?,
            }
            Ok(0)
        }
        Command::Selftest { seed, rounds } => selftest(*seed, *rounds, out),
    }
}

/// Checks the worked examples and `rounds` random instances; prints one line per check.
fn selftest(seed: u64, rounds: usize, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut failures = 0;
    let mut report = |out: &mut dyn Write, name: &str, ok: bool, detail: String| -> std::io::Result<()> {
        if !ok {
            failures += 1;
        }
        writeln!(out, "{} {name}: {detail}", if ok { "ok  " } else { "FAIL" })
    };

    let t = parse_file(T_GENS)?;
    let sg = Semigroup::new(t.generators.clone())?;
    let parts: Vec<u64> = sg.size_breakdown().iter().map(|&(scc, g, reps)| reps as u64 * scc as u64 * g).collect();
    report(out, "T size", sg.size() == 75, format!("{} = {parts:?}", sg.size()))?;
    report(out, "T R-classes", sg.rreps().len() == 12, format!("{}", sg.rreps().len()))?;
    let d = sg.nr_classes(Green::D)?;
    report(out, "T D-classes", d == 5, format!("{d}"))?;
    let x = parse_element("t [1,2,3,3,1]", None)?;
    let located = sg.locate(&x)?;
    report(out, "T rejects x at the kernel screen", located == Location::RhoScreen, format!("{located:?}"))?;
    let y = parse_element("t [2,3,3,2,2]", None)?;
    let word = sg.factorize(&y)?;
    report(out, "T factorizes y", sg.evaluate(&word) == y, format_word(&word))?;

    let s = parse_file(S_GENS)?;
    for mode in [Mode::Generic, Mode::Inverse] {
        let sg = Semigroup::with_mode(s.generators.clone(), mode)?;
        let ok = sg.size() == 172 && sg.rreps().len() == 16;
        report(out, &format!("S size ({mode})"), ok, format!("{} with {} R-classes", sg.size(), sg.rreps().len()))?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for round in 0..rounds {
        let kind = Kind::ALL[round % Kind::ALL.len()];
        let count = rng.gen_range(2..=3);
        let gens = random::generators(&mut rng, kind, count);
        let ex = ExhaustiveSemigroup::new(&gens, DEFAULT_CAP)?;
        let sg = Semigroup::new(gens.clone())?;
        let found = discrepancies(&sg, &ex)?;
        if !found.is_empty() {
            bad.push(format!("{gens:?}: {}", found.join("; ")));
        }
    }
    let detail = format!("{} of {rounds} instances agree (seed {seed})", rounds - bad.len());
    report(out, "random instances against brute force", bad.is_empty(), detail)?;
    for line in &bad {
        writeln!(out, "     {line}")?;
    }
    Ok(if failures == 0 { 0 } else { 1 })
}
