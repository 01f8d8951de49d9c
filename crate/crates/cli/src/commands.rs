use std::io::Write;
use std::path::PathBuf;

use mqm_core::metrics::{bench_row, cross_check, MAX_ORACLE_VARIABLES};
use mqm_core::rng::Lcg;
use mqm_core::{
    canonicalize, minimize as run_minimize, parse_function_spec, parse_sop_expression, Alphabet,
    BooleanFunction, Error, Method, Minimization,
};
use serde::Serialize;

use crate::MethodArg;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_EMPTY: u8 = 2;
pub const EXIT_VERIFY: u8 = 3;

/// `compare` runs the 3^n oracle, so it is held to desk-scale functions.
const MAX_COMPARE_VARIABLES: u32 = 6;

fn fail(e: &Error) -> u8 {
    eprintln!("error: {e}");
    match e {
        Error::EmptyFunction => EXIT_EMPTY,
        _ => EXIT_INPUT,
    }
}

/// Variable names for an expression: `--vars` if given, otherwise the
/// letters it uses in alphabetical order.
fn expression_alphabet(expr: &str, vars: Option<&str>) -> Result<Alphabet, Error> {
    match vars {
        Some(v) => Alphabet::new(v),
        None => {
            let body = expr.split_once('=').map_or(expr, |(_, rhs)| rhs);
            let mut letters: Vec<char> = body.chars().filter(char::is_ascii_alphabetic).collect();
            letters.sort_unstable();
            letters.dedup();
            Alphabet::new(&letters.into_iter().collect::<String>())
        }
    }
}

enum Input {
    Spec(String),
    Expr(String),
}

fn load(input: &Input, vars: Option<&str>) -> Result<(BooleanFunction, Alphabet), Error> {
    match input {
        Input::Spec(text) => {
            let f = parse_function_spec(text)?;
            let alphabet = match vars {
                Some(v) => {
                    let a = Alphabet::new(v)?;
                    if a.len() != f.n() as usize {
                        return Err(Error::InvalidAlphabet(format!(
                            "{} names given for {} variables",
                            a.len(),
                            f.n()
                        )));
                    }
                    a
                }
                None => Alphabet::default_for(f.n())?,
            };
            Ok((f, alphabet))
        }
        Input::Expr(text) => {
            let alphabet = expression_alphabet(text, vars)?;
            let expr = parse_sop_expression(text, &alphabet)?;
            Ok((canonicalize(&expr).0, alphabet))
        }
    }
}

#[derive(Serialize)]
struct PrimeJson {
    least: u32,
    esum: u32,
    minterms: Vec<u32>,
}

#[derive(Serialize)]
struct ComparisonsJson<'a> {
    per_pass: &'a [u64],
    total: u64,
}

#[derive(Serialize)]
struct MinimizeJson<'a> {
    n: u32,
    method: &'static str,
    expression: String,
    terms: Vec<String>,
    prime_implicants: Vec<PrimeJson>,
    selected_cubes: usize,
    literals: u32,
    comparisons: ComparisonsJson<'a>,
}

fn report(
    out: &mut impl Write,
    result: &Minimization,
    alphabet: &Alphabet,
    json: bool,
) -> std::io::Result<()> {
    let names = alphabet.chars();
    let expression = result.to_text(names);
    if json {
        let doc = MinimizeJson {
            n: result.n,
            method: result.method.name(),
            expression,
            terms: result.terms.iter().map(|t| t.to_text(names)).collect(),
            prime_implicants: result
                .prime_implicants
                .iter()
                .map(|c| PrimeJson {
                    least: c.least(),
                    esum: c.esum(),
                    minterms: c
                        .members(result.n)
                        .expect("prime implicants are valid cubes"),
                })
                .collect(),
            selected_cubes: result.cover.len(),
            literals: result.literal_count(),
            comparisons: ComparisonsJson {
                per_pass: result.counter.per_pass(),
                total: result.counter.total(),
            },
        };
        let line = serde_json::to_string(&doc).expect("serializable");
        writeln!(out, "{line}")
    } else {
        let per_pass: Vec<String> = result
            .counter
            .per_pass()
            .iter()
            .map(u64::to_string)
            .collect();
        writeln!(out, "{expression}")?;
        writeln!(out, "method: {}", result.method.name())?;
        writeln!(out, "prime implicants: {}", result.prime_implicants.len())?;
        writeln!(out, "selected cubes: {}", result.cover.len())?;
        writeln!(out, "literals: {}", result.literal_count())?;
        writeln!(out, "comparisons per pass: {}", per_pass.join(" "))?;
        writeln!(out, "comparisons total: {}", result.counter.total())
    }
}

pub fn minimize(
    out: &mut impl Write,
    spec: Option<String>,
    expr: Option<String>,
    vars: Option<String>,
    file: Option<PathBuf>,
    method: MethodArg,
    json: bool,
) -> u8 {
    let method = match method {
        MethodArg::Qm => Method::Qm,
        MethodArg::Mqm => Method::Mqm,
    };
    let inputs: Vec<Input> = match (spec, expr, file) {
        (Some(s), None, None) => vec![Input::Spec(s)],
        (None, Some(e), None) => vec![Input::Expr(e)],
        (None, None, Some(path)) => match std::fs::read_to_string(&path) {
            Ok(text) => text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(|l| {
                    if l.starts_with("n=") {
                        Input::Spec(l.to_string())
                    } else {
                        Input::Expr(l.to_string())
                    }
                })
                .collect(),
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", path.display());
                return EXIT_INPUT;
            }
        },
        _ => {
            eprintln!("error: give exactly one of a spec, --expr, or --file");
            return EXIT_INPUT;
        }
    };

    for (i, input) in inputs.iter().enumerate() {
        let result = load(input, vars.as_deref())
            .and_then(|(f, alphabet)| Ok((run_minimize(&f, method)?, alphabet)));
        let (result, alphabet) = match result {
            Ok(r) => r,
            Err(e) => return fail(&e),
        };
        if i > 0 && !json {
            let _ = writeln!(out);
        }
        if report(out, &result, &alphabet, json).is_err() {
            return EXIT_INPUT;
        }
    }
    EXIT_OK
}

pub fn expand(out: &mut impl Write, vars: &str, expr: &str) -> u8 {
    let parsed = Alphabet::new(vars).and_then(|a| parse_sop_expression(expr, &a));
    let expr = match parsed {
        Ok(e) => e,
        Err(e) => return fail(&e),
    };
    let (f, stats) = canonicalize(&expr);
    let minterms: Vec<String> = f.minterms().iter().map(u32::to_string).collect();
    let _ = writeln!(out, "n={} m({})", f.n(), minterms.join(","));
    let _ = writeln!(
        out,
        "terms={} minterms={} added={}",
        stats.input_term_count, stats.canonical_minterm_count, stats.added
    );
    EXIT_OK
}

pub fn bench(out: &mut impl Write, n_min: u32, n_max: u32, timing: bool) -> u8 {
    if !(1..=MAX_ORACLE_VARIABLES).contains(&n_min)
        || !(1..=MAX_ORACLE_VARIABLES).contains(&n_max)
        || n_min > n_max
    {
        eprintln!("error: need 1 <= n-min <= n-max <= {MAX_ORACLE_VARIABLES}");
        return EXIT_INPUT;
    }
    let mut code = EXIT_OK;
    for n in n_min..=n_max {
        let start = std::time::Instant::now();
        let row = match bench_row(n) {
            Ok(row) => row,
            Err(e) => return fail(&e),
        };
        if timing {
            eprintln!("n={n}: {:.3?}", start.elapsed());
        }
        let _ = writeln!(out, "{row}");
        if !row.agrees() {
            eprintln!("error: measured counts diverge from the formulas at n={n}");
            code = EXIT_VERIFY;
        }
    }
    code
}

pub fn compare(out: &mut impl Write, n: u32, trials: u64, seed: u64) -> u8 {
    if !(1..=MAX_COMPARE_VARIABLES).contains(&n) {
        eprintln!("error: n={n} is outside 1..={MAX_COMPARE_VARIABLES}");
        return EXIT_INPUT;
    }
    let mut rng = Lcg::new(seed);
    for _ in 0..trials {
        let f = rng.random_function(n);
        if let Err(d) = cross_check(&f) {
            let _ = writeln!(out, "{f}");
            eprintln!("error: {d}");
            return EXIT_VERIFY;
        }
    }
    let _ = writeln!(out, "{trials}/{trials} ok");
    EXIT_OK
}
