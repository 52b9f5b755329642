//! Command-line front end: argument model, input parsing, dispatch and
//! report serialization.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use latfree::frobenius::semigroup_gaps;
use latfree::{
    frobenius_brauer_shockley, frobenius_by_mlfb, frobenius_ss3, Body, FrobeniusInstance, Geometry, IntMat, IntVec,
    MlfbResult, SimplicialData, Ss3Outcome, DEFAULT_BUDGET,
};
use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

/// Environment variable overriding the default enumeration budget.
pub const BUDGET_ENV: &str = "MLFB_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "latfree", version, about = "Maximal lattice-free bodies, test sets and Frobenius numbers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Frobenius number of coprime positive integers.
    Frob {
        /// Generators, e.g. `12,13,17`.
        #[arg(required = true, num_args = 1..)]
        generators: Vec<String>,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Canonical maximal lattice-free bodies of a simplicial matrix.
    Mlfb {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Test set of the perturbed integer programs of a simplicial matrix.
    Testset {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Basis of the kernel lattice of a coprime vector.
    KernelBasis {
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Coprime vector; its kernel lattice basis is used as the matrix.
    #[arg(long, allow_hyphen_values = true)]
    pub vector: Option<String>,
    /// Matrix file: an `m n` header line followed by `m` rows.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Cross-check the result.
    #[arg(long)]
    pub verify: bool,
    /// Enumeration budget (search nodes).
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// `ss3` for three generators, `mlfb` otherwise.
    Auto,
    Mlfb,
    Bs,
    Naive,
    Ss3,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Mlfb => "mlfb",
            Method::Bs => "bs",
            Method::Naive => "naive",
            Method::Ss3 => "ss3",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Frob,
    Mlfb,
    Testset,
    KernelBasis,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Frob => "frob",
            Command::Mlfb => "mlfb",
            Command::Testset => "testset",
            Command::KernelBasis => "kernel-basis",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Vector(IntVec),
    Matrix(IntMat),
}

/// A validated invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub input: Input,
    pub method: Method,
    pub verify: bool,
    pub budget: u64,
    pub format: Format,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CliError {
    #[error("line {line}, column {column}: {message}")]
    Malformed { line: usize, column: usize, message: String },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid budget: {0}")]
    Budget(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] latfree::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Library(e) if e.is_budget() => EXIT_BUDGET,
            CliError::Library(latfree::Error::CrossCheck(_)) => EXIT_MISMATCH,
            _ => EXIT_INVALID,
        }
    }
}

fn malformed(line: usize, column: usize, message: impl Into<String>) -> CliError {
    CliError::Malformed { line, column, message: message.into() }
}

/// Integers separated by commas and/or whitespace. `line` and the returned
/// columns are 1-based.
fn tokenize(text: &str, line: usize) -> Result<Vec<(BigInt, usize)>, CliError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut pending_comma: Option<usize> = None;
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == ',' {
            if out.is_empty() || pending_comma.is_some() {
                return Err(malformed(line, i + 1, "empty entry"));
            }
            pending_comma = Some(i + 1);
            i += 1;
        } else {
            let start = i;
            while i < chars.len() && !chars[i].is_whitespace() && chars[i] != ',' {
                i += 1;
            }
            let token: String = chars[start..i].iter().collect();
            let value = BigInt::from_str(&token)
                .map_err(|_| malformed(line, start + 1, format!("invalid integer '{token}'")))?;
            out.push((value, start + 1));
            pending_comma = None;
        }
    }
    if let Some(column) = pending_comma {
        return Err(malformed(line, column, "trailing comma"));
    }
    Ok(out)
}

/// Parses a vector such as `12,13,17` or `12 13 17`; newlines count as
/// whitespace.
pub fn parse_vector(text: &str) -> Result<IntVec, CliError> {
    let mut values = Vec::new();
    let mut last_line = 1;
    for (k, line) in text.lines().enumerate() {
        let tokens = tokenize(line, k + 1)?;
        if !tokens.is_empty() {
            last_line = k + 1;
        }
        values.extend(tokens.into_iter().map(|(v, _)| v));
    }
    if values.is_empty() {
        return Err(malformed(last_line, 1, "empty vector"));
    }
    Ok(IntVec::new(values))
}

/// Parses an `m n` header followed by `m` rows of `n` integers. Blank lines
/// and lines starting with `#` are skipped.
pub fn parse_matrix(text: &str) -> Result<IntMat, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let (header_line, header) = lines.next().ok_or_else(|| malformed(1, 1, "missing 'm n' header"))?;
    let dims = tokenize(header, header_line)?;
    if dims.len() != 2 {
        return Err(malformed(header_line, 1, "header must contain exactly two integers 'm n'"));
    }
    let dim = |(v, col): &(BigInt, usize)| -> Result<usize, CliError> {
        usize::try_from(v)
            .ok()
            .filter(|&d| d > 0)
            .ok_or_else(|| malformed(header_line, *col, "dimension must be a positive integer"))
    };
    let (m, n) = (dim(&dims[0])?, dim(&dims[1])?);
    let mut rows = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        if rows.len() == m {
            return Err(malformed(line_no, 1, format!("more than {m} rows")));
        }
        let tokens = tokenize(line, line_no)?;
        if tokens.len() != n {
            let column = tokens.get(n).map_or(line.len() + 1, |t| t.1);
            return Err(malformed(line_no, column, format!("expected {n} entries, found {}", tokens.len())));
        }
        rows.push(IntVec::new(tokens.into_iter().map(|(v, _)| v).collect()));
        last_line = line_no;
    }
    if rows.len() != m {
        return Err(malformed(last_line + 1, 1, format!("expected {m} rows, found {}", rows.len())));
    }
    Ok(IntMat::from_row_vecs(&rows)?)
}

fn resolve_budget(flag: Option<u64>, env: Option<&str>) -> Result<u64, CliError> {
    let budget = match (flag, env) {
        (Some(b), _) => b,
        (None, Some(text)) => {
            text.trim().parse::<u64>().map_err(|_| CliError::Budget(format!("{BUDGET_ENV}={text}")))?
        }
        (None, None) => DEFAULT_BUDGET,
    };
    if budget == 0 {
        return Err(CliError::Budget("budget must be at least 1".into()));
    }
    Ok(budget)
}

fn read_input(input: InputArgs) -> Result<Input, CliError> {
    match (input.vector, input.matrix) {
        (Some(v), None) => Ok(Input::Vector(parse_vector(&v)?)),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
            Ok(Input::Matrix(parse_matrix(&text)?))
        }
        _ => Err(CliError::Usage("exactly one of --vector and --matrix is required".into())),
    }
}

impl RunConfig {
    /// Validates parsed arguments; `env_budget` is the value of
    /// [`BUDGET_ENV`], used when `--budget` is absent.
    pub fn from_cli(cli: Cli, env_budget: Option<&str>) -> Result<Self, CliError> {
        let (command, input, method, common) = match cli.command {
            CliCommand::Frob { generators, method, common } => {
                (Command::Frob, Input::Vector(parse_vector(&generators.join(" "))?), method, common)
            }
            CliCommand::Mlfb { input, common } => (Command::Mlfb, read_input(input)?, Method::Mlfb, common),
            CliCommand::Testset { input, common } => (Command::Testset, read_input(input)?, Method::Mlfb, common),
            CliCommand::KernelBasis { vector, common } => {
                (Command::KernelBasis, Input::Vector(parse_vector(&vector)?), Method::Mlfb, common)
            }
        };
        Ok(RunConfig {
            command,
            input,
            method,
            verify: common.verify,
            budget: resolve_budget(common.budget, env_budget)?,
            format: common.format,
        })
    }
}

/// Exit code and the text destined for standard output and standard error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Report {
    fn failure(err: &CliError) -> Self {
        Report { code: err.exit_code(), stdout: String::new(), stderr: format!("error: {err}\n") }
    }
}

fn num(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integers are valid JSON numbers"))
}

fn vec_json(v: &IntVec) -> Value {
    Value::Array(v.iter().map(num).collect())
}

fn vecs_json(vs: &[IntVec]) -> Value {
    Value::Array(vs.iter().map(vec_json).collect())
}

fn rows_json(m: &IntMat) -> Value {
    vecs_json(&m.row_vecs())
}

fn body_json(body: &Body, witnesses: &[IntVec], weights: &IntVec) -> Value {
    json!({
        "b": vec_json(&body.b),
        "gens": vecs_json(&body.gens),
        "witnesses": vecs_json(witnesses),
        "a_dot_b": num(&weights.dot(&body.b)),
    })
}

fn bodies_json(result: &MlfbResult) -> Value {
    let y = result.data.annihilator();
    Value::Array(result.bodies.iter().zip(&result.witnesses).map(|(b, w)| body_json(b, w, y)).collect())
}

struct Output {
    result: Value,
    plain: String,
    verification: Value,
    mismatch: Option<String>,
}

fn simplicial(input: &Input) -> Result<SimplicialData, CliError> {
    Ok(match input {
        Input::Vector(a) => SimplicialData::from_frobenius(a)?,
        Input::Matrix(m) => SimplicialData::from_matrix(m.clone())?,
    })
}

fn input_json(input: &Input) -> Value {
    match input {
        Input::Vector(a) => json!({ "vector": vec_json(a) }),
        Input::Matrix(m) => json!({ "matrix": rows_json(m) }),
    }
}

/// Runs one configuration to completion.
pub fn run(config: &RunConfig) -> Report {
    let outcome = match config.command {
        Command::Frob => run_frob(config),
        Command::Mlfb => run_mlfb(config),
        Command::Testset => run_testset(config),
        Command::KernelBasis => run_kernel_basis(config),
    };
    let out = match outcome {
        Ok(out) => out,
        Err(e) => return Report::failure(&e),
    };
    let code = if out.mismatch.is_some() { EXIT_MISMATCH } else { EXIT_OK };
    let stderr = match &out.mismatch {
        Some(m) => format!("verification failed: {m}\n"),
        None => String::new(),
    };
    let stdout = match config.format {
        Format::Json => {
            let mut top = Map::new();
            top.insert("input".into(), input_json(&config.input));
            top.insert("command".into(), Value::String(config.command.name().into()));
            top.insert("result".into(), out.result);
            top.insert("verification".into(), out.verification);
            let mut s = serde_json::to_string_pretty(&Value::Object(top)).expect("serializable");
            s.push('\n');
            s
        }
        Format::Plain => out.plain,
    };
    Report { code, stdout, stderr }
}

/// Parses `args` (including the program name) and runs them.
pub fn execute<I, T>(args: I, env_budget: Option<&str>) -> Report
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Report { code, stdout: String::new(), stderr: text }
            } else {
                Report { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match RunConfig::from_cli(cli, env_budget) {
        Ok(config) => run(&config),
        Err(e) => Report::failure(&e),
    }
}

fn instance(config: &RunConfig) -> Result<FrobeniusInstance, CliError> {
    match &config.input {
        Input::Vector(a) => Ok(FrobeniusInstance::new(a.clone())?),
        Input::Matrix(_) => Err(CliError::Usage("frob takes a vector".into())),
    }
}

fn frob_with(inst: &FrobeniusInstance, method: Method, budget: u64) -> Result<(BigInt, Value), CliError> {
    let method = match method {
        Method::Auto if inst.len() == 3 => Method::Ss3,
        Method::Auto => Method::Mlfb,
        m => m,
    };
    let name = Value::String(method.name().into());
    Ok(match method {
        Method::Mlfb => {
            let (g, result) = frobenius_by_mlfb(inst, budget)?;
            let basis = result.data.matrix();
            let v = json!({
                "method": name,
                "g": num(&g),
                "basis": vecs_json(&basis.col_vecs()),
                "superset_size": result.superset_size,
                "bodies": bodies_json(&result),
            });
            (g, v)
        }
        Method::Bs => {
            let g = frobenius_brauer_shockley(inst, budget)?;
            (g.clone(), json!({ "method": name, "g": num(&g) }))
        }
        Method::Naive => {
            let gaps = semigroup_gaps(inst, budget)?;
            let g = gaps.last().cloned().unwrap_or_else(|| BigInt::from(-1));
            (g.clone(), json!({ "method": name, "g": num(&g), "gap_count": gaps.len() }))
        }
        Method::Ss3 => {
            if inst.len() != 3 {
                return Err(CliError::Usage(format!("ss3 needs exactly three generators, got {}", inst.len())));
            }
            match frobenius_ss3(inst, budget)? {
                Ss3Outcome::Reduced { g, state, bodies } => {
                    let data = SimplicialData::new(state.m.clone(), inst.generators().clone())?;
                    let geometry = Geometry::new(&data, budget);
                    let units = [IntVec::from_i64s(&[1, 0]), IntVec::from_i64s(&[0, 1])];
                    let both = IntVec::from_i64s(&[1, 1]);
                    let mut out = Vec::new();
                    for (b, unit) in bodies.iter().zip(units) {
                        let witnesses = geometry.facet_witnesses(b)?.unwrap_or_default();
                        let body = Body { b: b.clone(), gens: vec![IntVec::zeros(2), unit, both.clone()] };
                        out.push(body_json(&body, &witnesses, inst.generators()));
                    }
                    let v = json!({
                        "method": name,
                        "g": num(&g),
                        "fallback": false,
                        "basis": vecs_json(&state.m.col_vecs()),
                        "transform": rows_json(&state.u),
                        "gamma": num(&state.gamma),
                        "lambda": num(&state.lambda),
                        "mu": num(&state.mu),
                        "bodies": Value::Array(out),
                    });
                    (g, v)
                }
                Ss3Outcome::Fallback { g, result } => {
                    let v = json!({
                        "method": name,
                        "g": num(&g),
                        "fallback": true,
                        "basis": vecs_json(&result.data.matrix().col_vecs()),
                        "bodies": bodies_json(&result),
                    });
                    (g, v)
                }
            }
        }
        Method::Auto => unreachable!("resolved above"),
    })
}

fn run_frob(config: &RunConfig) -> Result<Output, CliError> {
    let inst = instance(config)?;
    let (g, result) = frob_with(&inst, config.method, config.budget)?;
    let mut plain = format!("{g}\n");
    let mut verification = Value::Null;
    let mut mismatch = None;
    if config.verify {
        let mut methods = vec![Method::Mlfb, Method::Bs, Method::Naive];
        if inst.len() == 3 {
            methods.push(Method::Ss3);
        }
        let mut values = Map::new();
        let mut skipped = Vec::new();
        for m in methods {
            match frob_with(&inst, m, config.budget) {
                Ok((v, _)) => {
                    if v != g && mismatch.is_none() {
                        mismatch = Some(format!("{} gives {v}, expected {g}", m.name()));
                    }
                    values.insert(m.name().into(), num(&v));
                }
                Err(e) if e.exit_code() == EXIT_BUDGET => skipped.push(Value::String(m.name().into())),
                Err(e) => return Err(e),
            }
        }
        let agree = mismatch.is_none();
        plain.push_str(if agree { "methods agree\n" } else { "methods disagree\n" });
        verification = json!({ "methods": values, "skipped": skipped, "methods_agree": agree });
    }
    Ok(Output { result, plain, verification, mismatch })
}

/// Re-checks lattice-freeness and every facet witness of every body.
fn verify_bodies(result: &MlfbResult, budget: u64) -> Result<(Value, Option<String>), CliError> {
    let data = &result.data;
    let geometry = Geometry::new(data, budget);
    let mut mismatch = None;
    for (body, witnesses) in result.bodies.iter().zip(&result.witnesses) {
        if !geometry.is_lattice_free(&body.b)? {
            mismatch.get_or_insert(format!("body {} is not lattice free", body.b));
        }
        for i in 0..=data.dim() {
            if geometry.facet_witness(&body.b, i)?.is_none() {
                mismatch.get_or_insert(format!("facet {i} of body {} has no witness", body.b));
            }
            let image = data.image(&witnesses[i]);
            let on_facet = image[i] == body.b[i];
            let inside = (0..=data.dim()).filter(|&j| j != i).all(|j| image[j] < body.b[j]);
            if !(on_facet && inside) {
                mismatch.get_or_insert(format!("emitted witness {} of facet {i} is invalid", witnesses[i]));
            }
        }
    }
    let v = json!({
        "bodies_checked": result.bodies.len(),
        "lattice_free": mismatch.is_none(),
        "facets_witnessed": mismatch.is_none(),
    });
    Ok((v, mismatch))
}

fn run_mlfb(config: &RunConfig) -> Result<Output, CliError> {
    let data = simplicial(&config.input)?;
    let (tests, _, result) = latfree::compute_mlfb(&data, config.budget)?;
    let mut plain = String::new();
    for (body, witnesses) in result.bodies.iter().zip(&result.witnesses) {
        let gens: Vec<String> = body.gens.iter().map(|g| g.to_string()).collect();
        let wit: Vec<String> = witnesses.iter().map(|w| w.to_string()).collect();
        plain.push_str(&format!("b = {}  gens = {}  witnesses = {}\n", body.b, gens.join(" "), wit.join(" ")));
    }
    let value = json!({
        "matrix": rows_json(data.matrix()),
        "annihilator": vec_json(data.annihilator()),
        "test_set_size": tests.len(),
        "superset_size": result.superset_size,
        "bodies": bodies_json(&result),
    });
    let (verification, mismatch) = if config.verify {
        let (v, m) = verify_bodies(&result, config.budget)?;
        plain.push_str(if m.is_none() { "all bodies verified\n" } else { "verification failed\n" });
        (v, m)
    } else {
        (Value::Null, None)
    };
    Ok(Output { result: value, plain, verification, mismatch })
}

fn run_testset(config: &RunConfig) -> Result<Output, CliError> {
    let data = simplicial(&config.input)?;
    let tests = latfree::compute_test_set(&data);
    let mut plain = String::new();
    let entries: Vec<Value> = tests
        .entries()
        .iter()
        .map(|t| {
            plain.push_str(&format!("{} | {}\n", t.z(), t.w()));
            json!({ "z": vec_json(t.z()), "w": vec_json(t.w()) })
        })
        .collect();
    let result = json!({
        "matrix": rows_json(data.matrix()),
        "annihilator": vec_json(data.annihilator()),
        "size": tests.len(),
        "entries": entries,
    });
    Ok(Output { result, plain, verification: Value::Null, mismatch: None })
}

fn run_kernel_basis(config: &RunConfig) -> Result<Output, CliError> {
    let Input::Vector(a) = &config.input else {
        return Err(CliError::Usage("kernel-basis takes a vector".into()));
    };
    let basis = latfree::kernel_lattice_basis(a)?;
    let minors = basis.signed_maximal_minors()?;
    let result = json!({
        "rows": rows_json(&basis),
        "columns": vecs_json(&basis.col_vecs()),
        "maximal_minors": vec_json(&minors),
    });
    Ok(Output { result, plain: format!("{basis}\n"), verification: Value::Null, mismatch: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_separators() {
        let want = IntVec::from_i64s(&[12, 13, 17]);
        for text in ["12,13,17", "12, 13,\t17", "12 13 17", " 12,13 ,17 \n"] {
            assert_eq!(parse_vector(text).unwrap(), want, "{text:?}");
        }
        assert_eq!(parse_vector("-3,4").unwrap(), IntVec::from_i64s(&[-3, 4]));
        let huge = "123456789012345678901234567890";
        assert_eq!(parse_vector(huge).unwrap()[0].to_string(), huge);
    }

    #[test]
    fn vector_diagnostics() {
        assert_eq!(parse_vector("1,,2"), Err(malformed(1, 3, "empty entry")));
        assert_eq!(parse_vector(",1"), Err(malformed(1, 1, "empty entry")));
        assert_eq!(parse_vector("1,2,"), Err(malformed(1, 4, "trailing comma")));
        assert_eq!(parse_vector("1,x2"), Err(malformed(1, 3, "invalid integer 'x2'")));
        assert_eq!(parse_vector("1\n2 y"), Err(malformed(2, 3, "invalid integer 'y'")));
        assert!(matches!(parse_vector("  "), Err(CliError::Malformed { .. })));
    }

    #[test]
    fn matrix_file() {
        let m = parse_matrix("3 2\n-1 2\n1 -3\n2 -1").unwrap();
        assert_eq!(m, IntMat::from_rows(&[&[-1, 2], &[1, -3], &[2, -1]]));
        let commented = parse_matrix("# triangle\n3 2\n\n-1, 2\n1 -3\n2 -1\n").unwrap();
        assert_eq!(commented, m);
    }

    #[test]
    fn matrix_diagnostics() {
        assert_eq!(parse_matrix(""), Err(malformed(1, 1, "missing 'm n' header")));
        assert_eq!(parse_matrix("3\n"), Err(malformed(1, 1, "header must contain exactly two integers 'm n'")));
        assert_eq!(parse_matrix("0 2\n"), Err(malformed(1, 1, "dimension must be a positive integer")));
        assert_eq!(parse_matrix("2 2\n1 2\n3 4 5\n"), Err(malformed(3, 5, "expected 2 entries, found 3")));
        assert_eq!(parse_matrix("2 2\n1 2\n"), Err(malformed(3, 1, "expected 2 rows, found 1")));
        assert_eq!(parse_matrix("1 2\n1 2\n3 4\n"), Err(malformed(3, 1, "more than 1 rows")));
    }

    #[test]
    fn budget_resolution() {
        assert_eq!(resolve_budget(None, None), Ok(DEFAULT_BUDGET));
        assert_eq!(resolve_budget(None, Some("500")), Ok(500));
        assert_eq!(resolve_budget(Some(7), Some("500")), Ok(7));
        assert!(resolve_budget(None, Some("lots")).is_err());
        assert!(resolve_budget(Some(0), None).is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Library(latfree::Error::BudgetExceeded { budget: 1 }).exit_code(), EXIT_BUDGET);
        assert_eq!(CliError::Library(latfree::Error::NonCoprime("2".into())).exit_code(), EXIT_INVALID);
        assert_eq!(CliError::Library(latfree::Error::CrossCheck("x".into())).exit_code(), EXIT_MISMATCH);
        assert_eq!(malformed(1, 1, "x").exit_code(), EXIT_INVALID);
    }
}
