//! Command-line front end for the real stability checker.
//!
//! Exit codes: 0 stable (or preserver), 1 not stable (or not a preserver),
//! 2 input or usage error, 3 internal inconsistency.

pub mod document;
mod report;

use std::ffi::OsString;
use std::io::Read;

use clap::{Args, Parser, Subcommand};
use realstable::operators::{preserves_real_rootedness, spot_check, PolyOperator};
use realstable::stability::{gen_determinantal, sampling_oracle};
use realstable::{is_real_stable, Algorithm, BiPoly, Error};

use document::InputDocument;

pub const EXIT_STABLE: i32 = 0;
pub const EXIT_NOT_STABLE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "realstable", version, about = "Exact real stability checks for bivariate polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a bivariate polynomial is real stable.
    Check(CheckArgs),
    /// Decide whether a linear operator preserves real-rootedness.
    CheckOperator(CheckArgs),
    /// Print a random real stable determinantal polynomial.
    Gen {
        /// Matrix size; the polynomial has total degree at most this.
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Input document, or `-` for standard input.
    file: String,
    #[arg(long, default_value = "fast", value_parser = ["fast", "simple"])]
    algorithm: String,
    /// Also test this many random lines (and random inputs for operators).
    #[arg(long)]
    oracle_samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print a JSON report instead of text.
    #[arg(long)]
    json: bool,
}

/// What a command printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn out(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_STABLE };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(code, text)
            } else {
                Outcome::out(code, text)
            };
        }
    };
    match cli.command {
        Command::Check(a) => with_document(&a, stdin, check),
        Command::CheckOperator(a) => with_document(&a, stdin, check_operator),
        Command::Gen { size, seed } => gen(size, seed),
    }
}

fn with_document(
    args: &CheckArgs,
    stdin: &mut dyn Read,
    f: fn(&CheckArgs, InputDocument) -> Outcome,
) -> Outcome {
    let text = if args.file == "-" {
        let mut s = String::new();
        if let Err(e) = stdin.read_to_string(&mut s) {
            return Outcome::fail(EXIT_INPUT, format!("error: cannot read standard input: {e}\n"));
        }
        s
    } else {
        match std::fs::read_to_string(&args.file) {
            Ok(s) => s,
            Err(e) => return Outcome::fail(EXIT_INPUT, format!("error: cannot read {}: {e}\n", args.file)),
        }
    };
    match InputDocument::parse(&text) {
        Ok(doc) => f(args, doc),
        Err(e) => Outcome::fail(EXIT_INPUT, format!("error: {}: {e}\n", args.file)),
    }
}

fn algorithm(args: &CheckArgs) -> Algorithm {
    args.algorithm.parse().expect("validated by clap")
}

fn inconsistent(e: Error) -> Outcome {
    Outcome::fail(EXIT_INCONSISTENT, format!("error: {e}\n"))
}

fn check(args: &CheckArgs, doc: InputDocument) -> Outcome {
    let InputDocument::Bivariate { terms } = doc else {
        return Outcome::fail(EXIT_INPUT, "error: kind: expected a bivariate document\n".into());
    };
    let p = BiPoly::from_terms(terms.into_iter().map(|(i, j, c)| ((i, j), c)));
    let verdict = match is_real_stable(&p, algorithm(args)) {
        Ok(v) => v,
        Err(e) => return inconsistent(e),
    };
    let oracle = args
        .oracle_samples
        .map(|k| sampling_oracle(&p, k, args.seed));
    let falsified = verdict.stable && oracle.as_ref().is_some_and(|o| o.falsifier.is_some());
    let code = if falsified {
        EXIT_INCONSISTENT
    } else if verdict.stable {
        EXIT_STABLE
    } else {
        EXIT_NOT_STABLE
    };
    let text = if args.json {
        report::check_json(&verdict, oracle.as_ref())
    } else {
        report::check_text(&verdict, oracle.as_ref())
    };
    Outcome::out(code, text)
}

fn check_operator(args: &CheckArgs, doc: InputDocument) -> Outcome {
    let InputDocument::Operator { n, m, matrix } = doc else {
        return Outcome::fail(EXIT_INPUT, "error: kind: expected an operator document\n".into());
    };
    let t = match PolyOperator::new(n, m, matrix) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(EXIT_INPUT, format!("error: {}: {e}\n", args.file)),
    };
    let verdict = match preserves_real_rootedness(&t, algorithm(args)) {
        Ok(v) => v,
        Err(e) => return inconsistent(e),
    };
    let oracle = args
        .oracle_samples
        .map(|k| sampling_oracle(&verdict.symbol, k, args.seed));
    let counterexample = args
        .oracle_samples
        .and_then(|k| spot_check(&t, k, args.seed));
    let falsified = verdict.preserver()
        && (counterexample.is_some() || oracle.as_ref().is_some_and(|o| o.falsifier.is_some()));
    let code = if falsified {
        EXIT_INCONSISTENT
    } else if verdict.preserver() {
        EXIT_STABLE
    } else {
        EXIT_NOT_STABLE
    };
    let text = if args.json {
        report::operator_json(&verdict, oracle.as_ref(), args.oracle_samples.map(|_| &counterexample))
    } else {
        report::operator_text(&verdict, oracle.as_ref(), args.oracle_samples.map(|_| &counterexample))
    };
    Outcome::out(code, text)
}

fn gen(size: usize, seed: u64) -> Outcome {
    match gen_determinantal(size, seed) {
        Ok(p) => Outcome::out(EXIT_STABLE, InputDocument::from_bipoly(&p).print() + "\n"),
        Err(e) => Outcome::fail(EXIT_INPUT, format!("error: --size: {e}\n")),
    }
}
