//! Front end for the exact recoupling-symbol evaluator.
//!
//! Grammar:
//!
//! ```text
//! wigner <kind> <args...> [--digits N] [--json]
//! wigner batch <file>     [--digits N] [--json]
//! ```
//!
//! One result record is printed per evaluation. In text mode a record is a
//! single line `kind args... exact decimal`; with `--json` it is a one-line
//! JSON object. Exit codes: 0 on success (zero-valued symbols included),
//! 2 for unusable input, 1 for internal errors.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use wigner_exact::{
    evaluate, ratio_string, HalfInt, Surd, SymbolKind, SymbolSpec, WignerError,
};

/// Exit status 2: arguments or batch content the program cannot use.
const EXIT_USAGE: i32 = 2;
/// Exit status 1: an internal invariant failed while evaluating.
const EXIT_INTERNAL: i32 = 1;

enum CliError {
    Usage(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Internal(m) => m,
        }
    }
}

fn lift(err: WignerError, context: &str) -> CliError {
    match err {
        WignerError::HalfIntegerPhase(_)
        | WignerError::MixedRadicands(_)
        | WignerError::DivisionByZero => CliError::Internal(format!("{context}: {err}")),
        other => CliError::Usage(format!("{context}: {other}")),
    }
}

/// One evaluation result; field order is the JSON key order.
#[derive(Serialize)]
pub struct ResultRecord {
    pub kind: String,
    pub args: Vec<String>,
    pub exact: String,
    pub coeff: String,
    pub radicand: String,
    pub decimal: String,
}

impl ResultRecord {
    pub fn build(spec: &SymbolSpec, value: &Surd, digits: usize) -> ResultRecord {
        ResultRecord {
            kind: spec.kind().code().to_string(),
            args: spec.args().iter().map(|a| a.to_string()).collect(),
            exact: value.format_exact(),
            coeff: ratio_string(value.coeff()),
            radicand: ratio_string(value.radicand()),
            decimal: value.to_decimal(digits),
        }
    }

    pub fn text_line(&self) -> String {
        let mut line = self.kind.clone();
        for a in &self.args {
            let _ = write!(line, " {a}");
        }
        let _ = write!(line, " {} {}", self.exact, self.decimal);
        line
    }

    pub fn json_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

/// Parses one momentum token, naming the token on failure.
pub fn parse_halfint(token: &str) -> Result<HalfInt, String> {
    token
        .parse()
        .map_err(|_| format!("cannot parse token `{token}` as a half-integer"))
}

/// Parses the exact-representation grammar back into a value: `0`, `p`,
/// `p/q`, `p*(r)^(1/2)`, `p/q*(r/s)^(1/2)`. Inverse of
/// [`Surd::format_exact`] on canonical values.
pub fn parse_exact(s: &str) -> Result<Surd, String> {
    let err = || format!("malformed exact value `{s}`");
    let parse_ratio = |text: &str| -> Result<BigRational, String> {
        let (n, d) = match text.split_once('/') {
            Some((n, d)) => (n, d),
            None => (text, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| err())?;
        let d: BigInt = d.parse().map_err(|_| err())?;
        if d <= BigInt::from(0) {
            return Err(err());
        }
        Ok(BigRational::new(n, d))
    };
    match s.split_once('*') {
        None => Ok(Surd::from_rational(parse_ratio(s)?)),
        Some((coeff, root)) => {
            let inner = root
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(")^(1/2)"))
                .ok_or_else(err)?;
            let radicand = parse_ratio(inner)?;
            Surd::new(parse_ratio(coeff)?, radicand).map_err(|_| err())
        }
    }
}

struct Options {
    digits: usize,
    json: bool,
    positional: Vec<String>,
}

fn parse_options(args: &[String]) -> Result<Options, CliError> {
    let mut digits = 12usize;
    let mut json = false;
    let mut positional = Vec::new();
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--json" => json = true,
            "--digits" => {
                let value = it
                    .next()
                    .ok_or_else(|| CliError::Usage("--digits needs a value".into()))?;
                digits = value
                    .parse()
                    .ok()
                    .filter(|d| (1..=1000).contains(d))
                    .ok_or_else(|| {
                        CliError::Usage(format!(
                            "--digits must be an integer in 1..=1000, got `{value}`"
                        ))
                    })?;
            }
            other if other.starts_with("--") => {
                return Err(CliError::Usage(format!("unknown option `{other}`")));
            }
            _ => positional.push(arg.clone()),
        }
    }
    Ok(Options {
        digits,
        json,
        positional,
    })
}

fn eval_line(
    kind_token: &str,
    arg_tokens: &[String],
    digits: usize,
    context: &str,
) -> Result<ResultRecord, CliError> {
    let kind = SymbolKind::from_code(kind_token).ok_or_else(|| {
        CliError::Usage(format!("{context}: unknown symbol kind `{kind_token}`"))
    })?;
    if arg_tokens.len() != kind.arity() {
        return Err(CliError::Usage(format!(
            "{context}: {} takes {} arguments, got {}",
            kind.code(),
            kind.arity(),
            arg_tokens.len()
        )));
    }
    let mut args = Vec::with_capacity(arg_tokens.len());
    for (i, token) in arg_tokens.iter().enumerate() {
        let h = parse_halfint(token)
            .map_err(|m| CliError::Usage(format!("{context}: {m} (argument {})", i + 1)))?;
        args.push(h);
    }
    let spec = SymbolSpec::new(kind, args).map_err(|e| lift(e, context))?;
    let value = evaluate(&spec).map_err(|e| lift(e, context))?;
    Ok(ResultRecord::build(&spec, &value, digits))
}

fn run_inner(args: &[String], out: &mut dyn std::io::Write) -> Result<(), CliError> {
    let opts = parse_options(args)?;
    if opts.positional.is_empty() {
        return Err(CliError::Usage(USAGE.trim_end().to_string()));
    }
    let emit = |record: &ResultRecord, out: &mut dyn std::io::Write| {
        let line = if opts.json {
            record.json_line()
        } else {
            record.text_line()
        };
        writeln!(out, "{line}").map_err(|e| CliError::Internal(format!("write failed: {e}")))
    };
    if opts.positional[0] == "batch" {
        if opts.positional.len() != 2 {
            return Err(CliError::Usage(
                "batch takes exactly one file argument".into(),
            ));
        }
        let path = &opts.positional[1];
        let content = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read `{path}`: {e}")))?;
        for (idx, raw) in content.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tokens = line.split_whitespace().map(str::to_string);
            let kind = tokens.next().expect("nonempty line");
            let rest: Vec<String> = tokens.collect();
            let context = format!("line {}", idx + 1);
            let record = eval_line(&kind, &rest, opts.digits, &context)?;
            emit(&record, out)?;
        }
        Ok(())
    } else {
        let record = eval_line(
            &opts.positional[0],
            &opts.positional[1..],
            opts.digits,
            "arguments",
        )?;
        emit(&record, out)
    }
}

/// Entry point used by both the binary and the integration tests. Returns
/// the process exit code.
pub fn run(args: &[String]) -> i32 {
    if args.iter().any(|a| a == "--help" || a == "-h") {
        print!("{USAGE}");
        return 0;
    }
    match run_inner(args, &mut std::io::stdout()) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}

pub const USAGE: &str = "\
wigner - exact values of angular-momentum recoupling symbols

USAGE:
    wigner <kind> <args...> [--digits N] [--json]
    wigner batch <file>     [--digits N] [--json]

Momenta are written as integers (4), half-decimals (3.5) or fractions (7/2).
Each evaluation prints one record: `kind args... exact decimal` in text mode,
or a single-line JSON object {kind, args, exact, coeff, radicand, decimal}
with --json. `--digits N` sets the significant digits of the decimal column
(default 12). Zero-valued symbols print `0 0` and still exit 0.

Batch files are UTF-8 text with one `<kind> <args...>` evaluation per line;
blank lines and `#` comments are skipped.

EXIT STATUS:
    0  evaluated successfully
    2  unusable input: unknown kind, wrong arity, bad token, unreadable file
    1  internal error

ARGUMENT LAYOUTS (always row by row, left to right):

    3jm   j1 j2 j3 m1 m2 m3        ( j1 j2 j3 )
                                   ( m1 m2 m3 )

    6j    j1 j2 j3 l1 l2 l3        { j1 j2 j3 }
                                   { l1 l2 l3 }

    9j    j1 j2 j3 l1 l2 l3        { j1 j2 j3 }
          k1 k2 k3                 { l1 l2 l3 }
                                   { k1 k2 k3 }

    12j1  j1..j4 l1..l4 k1..k4     { j1    j2    j3    j4 }
    (and 12j2, same order)         {    l1    l2    l3    l4 }
                                   { k1    k2    k3    k4 }

    15j1  j1..j5 l1..l5 k1..k5     { j1    ...   j5 }   cyclic chains of
    15j2, 18j1, 18j2 likewise      {    l1   ...    l5 }   five or six columns
    (n = 5 or 6 columns)           { k1    ...   k5 }

    15j3  k1 k1' k k' k2 k2'       { k1   k1'  k    k'   k2   k2' }
          p1 p p2                  {    p1       p       p2      }
          j1 j1' j j' j2 j2'       { j1   j1'  j    j'   j2   j2' }

    15j4  j1 k1 s1 k1' j1'         {    j1   k1   s1   k1'  j1' }
          p l s l' p'              { p    l     s     l'      p' }
          j2 k2 s2 k2' j2'         {    j2   k2   s2   k2'  j2' }

    15j5  k1 k1' j1 l1 l1'         { k1 k1' j1 l1 l1' }
          k2 k2' j2 l2 l2'         { k2 k2' j2 l2 l2' }
          k3 k3' j3 l3 l3'         { k3 k3' j3 l3 l3' }

EXAMPLES:
    wigner 6j 1 1 1 1 1 1
    wigner 12j1 0 1 1 1 1 1 0 1 1 1 1 1
    wigner 12j2 5.5 4.5 6.5 3.5 6 6 5 4 1.5 4.5 6.5 0.5 --json
    wigner batch corpus.txt --digits 20
";
