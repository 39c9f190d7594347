//! Command-line orchestration. [`run`] is pure with respect to the process:
//! it returns the exit status and the text destined for stdout and stderr,
//! and only touches the filesystem for `--input` and `--out`.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{format_rational, parse_rational, Coeff, Indeterminate, LaurentPoly, Rational};
use crate::combinatorics::{bell_partial, stirling_a, stirling_numbers, StirlingKind};
use crate::frontend::{self, FrontendError};
use crate::implicit::{
    census, expand, first_mismatch, monomial_count, CoeffTable, ImplicitError, Method,
};

/// Process exit status. Every failure maps to a nonzero code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    Malformed = 1,
    NotExpandable = 2,
    Mismatch = 3,
    Internal = 4,
}

impl Status {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Builtin {
    /// f = y - x - x*y, solution x/(1-x)
    Geometric,
    /// f = y*exp(y) - x, solution the Lambert W series
    Lambert,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    Direct,
    Compose,
    Newton,
    All,
}

impl MethodChoice {
    fn methods(self) -> Vec<Method> {
        match self {
            MethodChoice::Direct => vec![Method::Direct],
            MethodChoice::Compose => vec![Method::Compose],
            MethodChoice::Newton => vec![Method::Newton],
            MethodChoice::All => Method::ALL.to_vec(),
        }
    }

    fn name(self) -> &'static str {
        match self {
            MethodChoice::Direct => "direct",
            MethodChoice::Compose => "compose",
            MethodChoice::Newton => "newton",
            MethodChoice::All => "all",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Rational,
    Symbolic,
}

/// Expand the implicit function y(x) defined by f(x, y) = 0 into its
/// Taylor series.
#[derive(Debug, Clone, Parser)]
#[command(name = "implicit-series", version)]
pub struct Cli {
    /// Number of coefficients y_1..y_N to compute
    #[arg(short = 'N', long)]
    pub order: Option<usize>,
    /// JSON coefficient table of f
    #[arg(long, group = "source")]
    pub input: Option<PathBuf>,
    /// Closed-form expression for f(x, y)
    #[arg(long, group = "source", allow_hyphen_values = true)]
    pub expr: Option<String>,
    /// Built-in example table
    #[arg(long, group = "source", value_enum)]
    pub builtin: Option<Builtin>,
    #[arg(long, value_enum, default_value_t = MethodChoice::Direct)]
    pub method: MethodChoice,
    #[arg(long, value_enum, default_value_t = Mode::Rational)]
    pub mode: Mode,
    /// Write the JSON result here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Report the number of monomials of each coefficient
    #[arg(long)]
    pub count_monomials: bool,
    /// Run the orthogonality and Stirling-sum self checks
    #[arg(long)]
    pub check: bool,
    /// Run the monomial census through y_15 (slow)
    #[arg(long = "census-15")]
    pub census_15: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    None,
    File(PathBuf),
    Expr(String),
    Builtin(Builtin),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub order: Option<usize>,
    pub source: Source,
    pub method: MethodChoice,
    pub mode: Mode,
    pub out: Option<PathBuf>,
    pub count_monomials: bool,
    pub check: bool,
    pub census_15: bool,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let source = match (cli.input, cli.expr, cli.builtin) {
            (Some(p), _, _) => Source::File(p),
            (_, Some(e), _) => Source::Expr(e),
            (_, _, Some(b)) => Source::Builtin(b),
            _ => Source::None,
        };
        RunConfig {
            order: cli.order,
            source,
            method: cli.method,
            mode: cli.mode,
            out: cli.out,
            count_monomials: cli.count_monomials,
            check: cli.check,
            census_15: cli.census_15,
        }
    }
}

impl RunConfig {
    pub fn new(source: Source, order: usize) -> Self {
        RunConfig {
            order: Some(order),
            source,
            method: MethodChoice::Direct,
            mode: Mode::Rational,
            out: None,
            count_monomials: false,
            check: false,
            census_15: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub stdout: String,
    pub stderr: String,
}

/// On-disk coefficient table: absent entries are zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    pub max_m: usize,
    pub max_n: usize,
    pub entries: Vec<TableEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    pub m: usize,
    pub n: usize,
    pub v: String,
}

#[derive(Debug, thiserror::Error)]
pub enum TableFileError {
    #[error("cannot read table: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed table JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("duplicate entry ({0},{1})")]
    Duplicate(usize, usize),
    #[error("entry ({m},{n}) exceeds max_m={max_m}, max_n={max_n}")]
    OutOfBounds { m: usize, n: usize, max_m: usize, max_n: usize },
    #[error("entry ({m},{n}): {source}")]
    Value { m: usize, n: usize, source: crate::algebra::ParseRationalError },
}

impl TableFile {
    pub fn parse(text: &str) -> Result<Self, TableFileError> {
        Ok(serde_json::from_str(text)?)
    }

    /// The square table of order `min(max_m, max_n)`; entries outside the
    /// square cannot influence `y_1..y_order` and are dropped.
    pub fn to_table(&self) -> Result<CoeffTable<Rational>, TableFileError> {
        let order = self.max_m.min(self.max_n);
        let mut seen = BTreeSet::new();
        let mut entries = Vec::new();
        for e in &self.entries {
            if e.m > self.max_m || e.n > self.max_n {
                return Err(TableFileError::OutOfBounds {
                    m: e.m,
                    n: e.n,
                    max_m: self.max_m,
                    max_n: self.max_n,
                });
            }
            if !seen.insert((e.m, e.n)) {
                return Err(TableFileError::Duplicate(e.m, e.n));
            }
            let v = parse_rational(&e.v)
                .map_err(|source| TableFileError::Value { m: e.m, n: e.n, source })?;
            if e.m <= order && e.n <= order {
                entries.push(((e.m, e.n), v));
            }
        }
        Ok(CoeffTable::from_entries(order, entries).expect("entries filtered to the box"))
    }

    /// Sparse file form of a rational table.
    pub fn from_table(table: &CoeffTable<Rational>) -> Self {
        let order = table.order();
        let mut entries = Vec::new();
        for m in 0..=order {
            for n in 0..=order {
                let v = table.get(m, n);
                if !Coeff::is_zero_elem(&v) {
                    entries.push(TableEntry { m, n, v: format_rational(&v) });
                }
            }
        }
        TableFile { max_m: order, max_n: order, entries }
    }
}

struct Failure {
    status: Status,
    message: String,
}

impl Failure {
    fn new(status: Status, message: impl Into<String>) -> Self {
        Failure { status, message: message.into() }
    }
}

impl From<ImplicitError> for Failure {
    fn from(e: ImplicitError) -> Self {
        let status = match e {
            ImplicitError::InvalidTable(_) => Status::NotExpandable,
            ImplicitError::Internal(_) => Status::Internal,
            ImplicitError::InsufficientOrder { .. }
            | ImplicitError::OutOfRange { .. }
            | ImplicitError::Series(_) => Status::Malformed,
        };
        Failure::new(status, e.to_string())
    }
}

impl From<FrontendError> for Failure {
    fn from(e: FrontendError) -> Self {
        let status = match e {
            FrontendError::NotExpandable(_) => Status::NotExpandable,
            FrontendError::Parse(_) | FrontendError::Series(_) => Status::Malformed,
        };
        Failure::new(status, e.to_string())
    }
}

/// Runs one invocation and reports what the process should print.
pub fn run(config: &RunConfig) -> Outcome {
    let mut out = Outcome { status: Status::Success, stdout: String::new(), stderr: String::new() };
    if let Err(f) = run_inner(config, &mut out) {
        out.status = f.status;
        out.stderr.push_str(&format!("error: {}\n", f.message));
    }
    out
}

fn run_inner(config: &RunConfig, out: &mut Outcome) -> Result<(), Failure> {
    let wants_expansion = config.source != Source::None || config.mode == Mode::Symbolic;
    if !wants_expansion && !config.check && !config.census_15 {
        return Err(Failure::new(
            Status::Malformed,
            "nothing to do: give --input, --expr, --builtin, --mode symbolic, --check or --census-15",
        ));
    }
    if config.check {
        run_checks(out)?;
    }
    if config.census_15 {
        run_census(out)?;
    }
    if wants_expansion {
        let json = match config.mode {
            Mode::Rational => expand_rational(config)?,
            Mode::Symbolic => expand_symbolic(config)?,
        };
        let mut text = serde_json::to_string(&json).expect("json value serializes");
        text.push('\n');
        match &config.out {
            Some(path) => fs::write(path, text).map_err(|e| {
                Failure::new(Status::Malformed, format!("cannot write {}: {e}", path.display()))
            })?,
            None => out.stdout.push_str(&text),
        }
    }
    Ok(())
}

fn require_order(config: &RunConfig) -> Result<usize, Failure> {
    match config.order {
        Some(0) => Err(Failure::new(Status::Malformed, "--order must be at least 1")),
        Some(n) => Ok(n),
        None => Err(Failure::new(Status::Malformed, "--order is required for this source")),
    }
}

fn load_table(config: &RunConfig) -> Result<(CoeffTable<Rational>, usize), Failure> {
    match &config.source {
        Source::File(path) => {
            let malformed = |e: TableFileError| Failure::new(Status::Malformed, e.to_string());
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::new(Status::Malformed, format!("{}: {e}", path.display())))?;
            let table = TableFile::parse(&text).and_then(|f| f.to_table()).map_err(malformed)?;
            let order = match config.order {
                Some(_) => require_order(config)?,
                None if table.order() == 0 => {
                    return Err(Failure::new(Status::Malformed, "table has order 0"))
                }
                None => table.order(),
            };
            Ok((table, order))
        }
        Source::Expr(src) => {
            let order = require_order(config)?;
            let expr = frontend::parse(src).map_err(FrontendError::from)?;
            Ok((frontend::eval_to_table(&expr, order)?, order))
        }
        Source::Builtin(b) => {
            let order = require_order(config)?;
            let table = match b {
                Builtin::Geometric => CoeffTable::geometric(order),
                Builtin::Lambert => CoeffTable::lambert(order),
            };
            Ok((table, order))
        }
        Source::None => Err(Failure::new(Status::Malformed, "no table source given")),
    }
}

/// Runs the requested methods; with several, they must agree exactly.
fn expand_checked<R: Coeff>(
    table: &CoeffTable<R>,
    order: usize,
    choice: MethodChoice,
) -> Result<Vec<R>, Failure> {
    table
        .validate()
        .map_err(|v| Failure::from(ImplicitError::InvalidTable(v)))?;
    let mut results: Vec<(Method, Vec<R>)> = Vec::new();
    for method in choice.methods() {
        results.push((method, expand(table, order, method)?.y));
    }
    let (first_method, first) = &results[0];
    for (method, y) in &results[1..] {
        if let Some((m, _, _)) = first_mismatch(first, y) {
            return Err(Failure::new(
                Status::Mismatch,
                format!("methods disagree at m={m}: {first_method} vs {method}"),
            ));
        }
    }
    Ok(results.swap_remove(0).1)
}

fn expand_rational(config: &RunConfig) -> Result<Value, Failure> {
    let (table, order) = load_table(config)?;
    let y = expand_checked(&table, order, config.method)?;
    let mut obj = json!({
        "order": order,
        "method": config.method.name(),
        "y": y.iter().map(format_rational).collect::<Vec<_>>(),
    });
    if config.count_monomials {
        let counts: Vec<usize> = y.iter().map(|v| usize::from(!Coeff::is_zero_elem(v))).collect();
        obj["monomials"] = json!(counts);
    }
    Ok(obj)
}

fn expand_symbolic(config: &RunConfig) -> Result<Value, Failure> {
    if config.source != Source::None {
        return Err(Failure::new(
            Status::Malformed,
            "symbolic mode expands the generic table f[m,n]; drop --input/--expr/--builtin",
        ));
    }
    let order = require_order(config)?;
    let table = CoeffTable::symbolic(order);
    let y = expand_checked(&table, order, config.method)?;
    let mut obj = json!({
        "order": order,
        "y": y.iter().map(LaurentPoly::to_json).collect::<Vec<_>>(),
    });
    if config.count_monomials {
        obj["monomials"] = json!(y.iter().map(monomial_count).collect::<Vec<_>>());
    }
    Ok(obj)
}

/// Orthogonality of `A` and `B` through n = 8 and Stirling coefficient sums
/// through n = 10.
pub fn self_check_report() -> (bool, Vec<String>) {
    let mut ok = true;
    let mut lines = Vec::new();
    let mut orth_failures = 0;
    for n in 1..=8 {
        for k in 1..=n {
            let mut sum = LaurentPoly::zero();
            for j in k..=n {
                sum = sum.plus(&stirling_a(n, j).times(&bell_partial(j, k)));
            }
            let expect = if n == k { LaurentPoly::one_elem() } else { LaurentPoly::zero() };
            if sum != expect {
                orth_failures += 1;
                lines.push(format!("FAIL orthogonality n={n} k={k}: got {sum}"));
            }
        }
    }
    ok &= orth_failures == 0;
    lines.push(format!(
        "{} orthogonality sum_j A(n,j) B(j,k) = delta(n,k), 1 <= k <= n <= 8",
        if orth_failures == 0 { "PASS" } else { "FAIL" }
    ));

    let mut sum_failures = 0;
    for n in 0..=10usize {
        let ones: Vec<Rational> = vec![Rational::one_elem(); n.max(1)];
        for k in 0..=n {
            let at_ones = |p: &LaurentPoly| {
                p.eval_with(|v| match v {
                    Indeterminate::X(i) if (i as usize) <= ones.len() => Some(ones[i as usize - 1].clone()),
                    _ => None,
                })
            };
            let b = at_ones(&bell_partial(n, k));
            let a = at_ones(&stirling_a(n, k));
            let s2 = Rational::from_integer(stirling_numbers(n, k, StirlingKind::Second));
            let s1 = Rational::from_integer(stirling_numbers(n, k, StirlingKind::First));
            if b.as_ref() != Ok(&s2) || a.as_ref() != Ok(&s1) {
                sum_failures += 1;
                lines.push(format!("FAIL coefficient sums n={n} k={k}"));
            }
        }
    }
    ok &= sum_failures == 0;
    lines.push(format!(
        "{} coefficient sums B(n,k)(1..1) = S(n,k), A(n,k)(1..1) = s(n,k), n <= 10",
        if sum_failures == 0 { "PASS" } else { "FAIL" }
    ));
    (ok, lines)
}

fn run_checks(out: &mut Outcome) -> Result<(), Failure> {
    let (ok, lines) = self_check_report();
    for l in lines {
        out.stderr.push_str(&l);
        out.stderr.push('\n');
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::new(Status::Internal, "self check failed"))
    }
}

/// Reports the census through y_15 against the published counts. A
/// disagreement is reported, not treated as a failure: the published counts
/// refer to a normal form of the derivatives that need not coincide with the
/// canonical monomials counted here.
fn run_census(out: &mut Outcome) -> Result<(), Failure> {
    let mut lines = Vec::new();
    let entries = census(15, |e, elapsed| {
        lines.push(format!("census m={} monomials={} ({:.2?})", e.m, e.monomials, elapsed));
    })?;
    for l in lines {
        out.stderr.push_str(&l);
        out.stderr.push('\n');
    }
    for e in entries.iter().filter(|e| e.reference.is_some()) {
        let reference = e.reference.expect("filtered");
        if e.agrees() {
            out.stderr.push_str(&format!(
                "census m={}: {} monomials, matches the published count {}\n",
                e.m, e.monomials, reference
            ));
        } else {
            out.stderr.push_str(&format!(
                "DISCREPANCY census m={}: {} canonical monomials over f[m,n] and f[0,1]^-1, \
                 published count {}\n",
                e.m, e.monomials, reference
            ));
        }
    }
    Ok(())
}
