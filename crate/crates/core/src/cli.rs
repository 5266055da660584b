//! The `dtmoment` command line front end.
//!
//! Subcommands:
//!
//! * `moment`: the exact limit moment of a word, or `M(k₁,ℓ₁,…)` from
//!   `--exponents`
//! * `conjecture`: recursion against `n^{nk}/(nk+1)!` over ranges of `n`, `k`
//! * `density`: a grid of the `T*T` density with a moment-check table
//! * `mc`: a Monte Carlo estimate next to its limit
//!
//! Exit codes: 0 success, 2 invalid input, 3 cap exceeded, 4 numeric failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::measures::MeasureModel;
use crate::moments::{
    dt_word_moment, parse_z_tokens, t_word_moment, z_word_moment_with_cap, DTWord, DtLetter, DtScale, ZWord,
    DEFAULT_Z_WORD_CAP,
};
use crate::ncpair::{Letter, StarWord};
use crate::quasinil::{
    canonicalize, conjecture_check_with_cap, conjecture_value, m_recursive, AltExponentSeq, Canonical,
    DEFAULT_CONJECTURE_CAP,
};
use crate::rmt::{
    elliptic_target_params, estimate_elliptic_moment, estimate_t_words, estimate_word_moment, McRecord, McWord,
};
use crate::spectral::{density_grid, density_moment};
use crate::value::{parse_rational, rational_to_f64, MomentValue};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_NUMERIC: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "dtmoment", version, about = "Moments of DT operators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact limit moment of a word in T/T*, D/D*/T/T*, or Z/Z*.
    Moment(MomentArgs),
    /// Compare the recursion with the conjectured closed form.
    Conjecture(ConjectureArgs),
    /// Density of T*T on a grid, with its moments.
    Density(DensityArgs),
    /// Monte Carlo estimate of a word moment.
    Mc(McArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args, Debug)]
struct MomentArgs {
    /// Whitespace-separated tokens from T, T*, D, D*, Z, Z*.
    #[arg(long, conflicts_with = "exponents")]
    word: Option<String>,
    /// Comma-separated exponents k₁,ℓ₁,…,k_n,ℓ_n of M(…).
    #[arg(long)]
    exponents: Option<String>,
    /// Measure: delta0, delta:<re>,<im>, disk:<R>, annulus:<c>, ellipse:<a>,<b>, or JSON.
    #[arg(long, default_value = "delta0")]
    measure: String,
    /// The scale c of Z = D + cT.
    #[arg(long, default_value = "1")]
    c: String,
    /// Longest Z-word expanded.
    #[arg(long, default_value_t = DEFAULT_Z_WORD_CAP)]
    max_degree: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct ConjectureArgs {
    /// Range of n, as `a..b` (inclusive) or a single value.
    #[arg(long, default_value = "1..3")]
    n_range: String,
    /// Range of k, as `a..b` (inclusive) or a single value.
    #[arg(long, default_value = "1..3")]
    k_range: String,
    /// Largest n·k evaluated; larger cells are reported as skipped.
    #[arg(long, default_value_t = DEFAULT_CONJECTURE_CAP)]
    max_degree: u32,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct DensityArgs {
    /// Number of grid points strictly inside (0, e).
    #[arg(long, default_value_t = 200)]
    grid: usize,
    /// Highest moment order checked.
    #[arg(long, alias = "order", default_value_t = 6)]
    p_max: u32,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct McArgs {
    /// Whitespace-separated tokens from T, T*, D, D*, Z, Z*.
    #[arg(long)]
    word: String,
    #[arg(long, default_value = "delta0")]
    measure: String,
    /// The scale c of Z = D + cT.
    #[arg(long, default_value = "1")]
    c: String,
    /// Matrix size.
    #[arg(long, default_value_t = 64)]
    n: usize,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sample Y_θ = cos θ·H₁ + i sin θ·H₂ instead; the word must use Z, Z*.
    #[arg(long)]
    theta: Option<f64>,
    #[command(flatten)]
    common: Common,
}

/// A parsed `--word`.
#[derive(Clone, Debug, PartialEq)]
pub enum WordSpec {
    T(StarWord),
    Dt(Vec<DtLetter>),
    Z(StarWord),
}

impl WordSpec {
    pub fn parse(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(Error::parse("empty word"));
        }
        if tokens.iter().all(|t| matches!(*t, "Z" | "Z*")) {
            return parse_z_tokens(s).map(WordSpec::Z);
        }
        let letters = tokens
            .iter()
            .map(|t| match *t {
                "D" => Ok(DtLetter::D),
                "D*" => Ok(DtLetter::DStar),
                "T" => Ok(DtLetter::T),
                "T*" => Ok(DtLetter::TStar),
                other => Err(Error::parse(format!(
                    "unexpected token {other:?}; a word uses T, T*, D, D* or only Z, Z*"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        if letters.iter().all(|l| matches!(l, DtLetter::T | DtLetter::TStar)) {
            let eps = letters
                .iter()
                .map(|l| if *l == DtLetter::T { Letter::One } else { Letter::Star })
                .collect();
            return Ok(WordSpec::T(StarWord::new(eps)));
        }
        Ok(WordSpec::Dt(letters))
    }
}

impl std::fmt::Display for WordSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tokens: Vec<&str> = match self {
            WordSpec::T(eps) => eps.letters().iter().map(|l| if *l == Letter::One { "T" } else { "T*" }).collect(),
            WordSpec::Z(eps) => eps.letters().iter().map(|l| if *l == Letter::One { "Z" } else { "Z*" }).collect(),
            WordSpec::Dt(ls) => ls
                .iter()
                .map(|l| match l {
                    DtLetter::D => "D",
                    DtLetter::DStar => "D*",
                    DtLetter::T => "T",
                    DtLetter::TStar => "T*",
                })
                .collect(),
        };
        f.write_str(&tokens.join(" "))
    }
}

/// Parses `a..b`, `a..=b` or a single value into an inclusive range.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u32>> {
    let num = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| Error::parse(format!("bad range bound {t:?}")))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo == 0 || lo > hi {
        return Err(Error::parse(format!("range {s:?} must be nonempty and start at 1 or above")));
    }
    Ok(lo..=hi)
}

fn parse_exponents(s: &str) -> Result<AltExponentSeq> {
    let v = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::parse(format!("bad exponent {t:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    AltExponentSeq::new(v).map_err(|e| Error::parse(e.to_string()))
}

fn parse_c(s: &str) -> Result<DtScale> {
    let c = parse_rational(s)
        .map(MomentValue::from_rational)
        .or_else(|_| s.trim().parse::<f64>().map(MomentValue::from_f64))
        .map_err(|_| Error::parse(format!("bad value for c: {s:?}")))?;
    DtScale::new(&c)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } | Error::TableDegree { .. } => EXIT_CAP,
        Error::Numeric(_) => EXIT_NUMERIC,
        Error::Parse(_) | Error::Domain(_) | Error::Incompatible(_) => EXIT_PARSE,
    }
}

/// Real and imaginary parts as strings: `p/q` when exact.
fn value_parts(v: &MomentValue) -> (String, String) {
    match v {
        MomentValue::Exact(z) => (z.re.to_string(), z.im.to_string()),
        MomentValue::Float(z) => (format!("{:e}", z.re), format!("{:e}", z.im)),
    }
}

#[derive(Serialize)]
struct MomentOutput {
    word: String,
    backend: String,
    value: String,
    re: String,
    im: String,
}

impl MomentOutput {
    fn new(word: String, v: &MomentValue) -> Self {
        let (re, im) = value_parts(v);
        MomentOutput {
            word,
            backend: v.backend().to_string(),
            value: v.to_string(),
            re,
            im,
        }
    }
}

fn cmd_moment(a: &MomentArgs) -> Result<String> {
    let out = match (&a.word, &a.exponents) {
        (_, Some(exps)) => {
            let seq = parse_exponents(exps)?;
            let v = MomentValue::from_rational(m_recursive(&seq));
            let mut o = MomentOutput::new(seq.to_string(), &v);
            if let Canonical::Seq(c) = canonicalize(&seq) {
                if c != seq {
                    o.word = format!("{} = {}", seq, c);
                }
            }
            o
        }
        (Some(word), None) => {
            let spec = WordSpec::parse(word)?;
            let mu = MeasureModel::parse(&a.measure)?;
            let v = match &spec {
                WordSpec::T(eps) => t_word_moment(eps),
                WordSpec::Dt(letters) => dt_word_moment(&DTWord::from_letters(letters), &mu)?,
                WordSpec::Z(eps) => {
                    let zw = ZWord::new(eps.clone(), parse_c(&a.c)?);
                    z_word_moment_with_cap(&zw, &mu, a.max_degree)?
                }
            };
            MomentOutput::new(spec.to_string(), &v)
        }
        (None, None) => return Err(Error::parse("one of --word or --exponents is required")),
    };
    Ok(match a.common.format {
        Format::Json => to_json(&out),
        Format::Csv => format!(
            "word,backend,value,re,im\n{},{},{},{},{}\n",
            csv_field(&out.word),
            out.backend,
            csv_field(&out.value),
            out.re,
            out.im
        ),
    })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn to_json(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct ConjectureRow {
    n: u32,
    k: u32,
    recursion_value: Option<String>,
    conjecture_value: String,
    /// `"true"`, `"false"` or `"skipped"`.
    equal: String,
}

fn cmd_conjecture(a: &ConjectureArgs) -> Result<String> {
    let ns = parse_range(&a.n_range)?;
    let ks = parse_range(&a.k_range)?;
    let mut rows = Vec::new();
    for n in ns {
        for k in ks.clone() {
            let conj = conjecture_value(k, n);
            let row = match conjecture_check_with_cap(k, n, a.max_degree) {
                Ok(eq) => ConjectureRow {
                    n,
                    k,
                    recursion_value: Some(m_recursive(&AltExponentSeq::repeated(k, n as usize)).to_string()),
                    conjecture_value: conj.to_string(),
                    equal: eq.to_string(),
                },
                Err(Error::CapExceeded { .. }) => ConjectureRow {
                    n,
                    k,
                    recursion_value: None,
                    conjecture_value: conj.to_string(),
                    equal: "skipped".into(),
                },
                Err(e) => return Err(e),
            };
            rows.push(row);
        }
    }
    Ok(match a.common.format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut s = String::from("n,k,recursion_value,conjecture_value,equal\n");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{}",
                    r.n,
                    r.k,
                    r.recursion_value.as_deref().unwrap_or(""),
                    r.conjecture_value,
                    r.equal
                );
            }
            s
        }
    })
}

#[derive(Serialize)]
struct MomentCheck {
    p: u32,
    integral: f64,
    exact: String,
    abs_error: f64,
}

fn cmd_density(a: &DensityArgs) -> Result<String> {
    let grid = density_grid(a.grid)?;
    let mut checks = Vec::new();
    for p in 0..=a.p_max {
        let integral = density_moment(p)?;
        let exact = crate::quasinil::tstt_moment(p);
        checks.push(MomentCheck {
            p,
            integral,
            exact: exact.to_string(),
            abs_error: (integral - rational_to_f64(&exact)).abs(),
        });
    }
    Ok(match a.common.format {
        Format::Json => to_json(&json!({
            "grid": grid.iter().map(|d| json!({"x": d.x, "phi": d.phi})).collect::<Vec<_>>(),
            "moments": checks,
        })),
        Format::Csv => {
            let mut s = String::from("x,phi\n");
            for d in &grid {
                let _ = writeln!(s, "{:.17e},{:.17e}", d.x, d.phi);
            }
            s.push_str("\np,integral,exact,abs_error\n");
            for c in &checks {
                let _ = writeln!(s, "{},{:.17e},{},{:.3e}", c.p, c.integral, c.exact, c.abs_error);
            }
            s
        }
    })
}

fn cmd_mc(a: &McArgs) -> Result<String> {
    let spec = WordSpec::parse(&a.word)?;
    let (est, target) = match (&spec, a.theta) {
        (WordSpec::Z(eps), Some(theta)) => {
            let est = estimate_elliptic_moment(theta, eps, a.n, a.trials, a.seed)?;
            let (mu, c) = elliptic_target_params(theta)?;
            let scale = DtScale::new(&MomentValue::from_f64(c))?;
            let target = z_word_moment_with_cap(&ZWord::new(eps.clone(), scale), &mu, DEFAULT_Z_WORD_CAP)?;
            (est, target.to_complex64())
        }
        (_, Some(_)) => return Err(Error::parse("--theta needs a word in Z, Z*")),
        (WordSpec::T(eps), None) => {
            let est = estimate_t_words(std::slice::from_ref(eps), a.n, a.trials, a.seed)?.remove(0);
            (est, t_word_moment(eps).to_complex64())
        }
        (WordSpec::Dt(letters), None) => {
            let mu = MeasureModel::parse(&a.measure)?;
            let target = dt_word_moment(&DTWord::from_letters(letters), &mu)?.to_complex64();
            let est = estimate_word_moment(
                &McWord::Dt {
                    letters: letters.clone(),
                    mu,
                },
                a.n,
                a.trials,
                a.seed,
            )?;
            (est, target)
        }
        (WordSpec::Z(eps), None) => {
            let mu = MeasureModel::parse(&a.measure)?;
            let scale = parse_c(&a.c)?;
            let target = z_word_moment_with_cap(&ZWord::new(eps.clone(), scale.clone()), &mu, DEFAULT_Z_WORD_CAP)?;
            let c = scale.c().to_complex64().re;
            let est = estimate_word_moment(
                &McWord::Z {
                    eps: eps.clone(),
                    mu,
                    c,
                },
                a.n,
                a.trials,
                a.seed,
            )?;
            (est, target.to_complex64())
        }
    };
    if !est.mean.re.is_finite() || !est.mean.im.is_finite() {
        return Err(Error::Numeric("non-finite Monte Carlo mean".into()));
    }
    let record = McRecord::new(spec.to_string(), &est, Complex64::new(target.re, target.im));
    Ok(match a.common.format {
        Format::Json => to_json(&record),
        Format::Csv => format!(
            "word,n,trials,seed,mean_re,mean_im,stderr,target_re,target_im\n{},{},{},{},{:e},{:e},{:e},{:e},{:e}\n",
            record.word,
            record.n,
            record.trials,
            record.seed,
            record.mean_re,
            record.mean_im,
            record.stderr,
            record.target_re,
            record.target_im
        ),
    })
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code. Results go to `out` or to the `--out` file; diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let (result, common) = match &cli.command {
        Command::Moment(a) => (cmd_moment(a), &a.common),
        Command::Conjecture(a) => (cmd_conjecture(a), &a.common),
        Command::Density(a) => (cmd_density(a), &a.common),
        Command::Mc(a) => (cmd_mc(a), &a.common),
    };
    match result {
        Ok(text) => {
            let written = match &common.out {
                Some(path) => std::fs::write(path, &text),
                None => out.write_all(text.as_bytes()),
            };
            match written {
                Ok(()) => EXIT_OK,
                Err(e) => {
                    let _ = writeln!(err, "error: could not write output: {e}");
                    EXIT_PARSE
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
