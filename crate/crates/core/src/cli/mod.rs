//! The `fibdense` command-line front end.
//!
//! Exit codes: 0 on success, 2 for input or limit errors, 3 when a claim that
//! is expected to hold fails. Diagnostics go to standard error only.

pub mod claims;
pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::density;
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::fibword::{self, DEFAULT_MAX_LEN};
use crate::genfunc::{kfib_gf, lemma22_gf, product_fib_gf, RationalGF};
use crate::num::{render_decimal, render_exact, Nat};
use crate::sequences::fib;
use crate::wordstats::{self, convergent_denominators, sturmian_index, ContinuedFraction};

use self::claims::{ClaimParams, Verdict};
pub use self::output::{Cell, Format, OutputSpec, Table};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CLAIM: i32 = 3;

/// Environment variable holding the default materialization cap.
pub const MAX_LEN_ENV: &str = "FIBDENSE_MAX_LEN";

#[derive(Debug, Parser)]
#[command(name = "fibdense", version, about = "Exact density, ratio and complexity tables for Fibonacci words")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,
    /// Fractional digits for decimal columns (0..=30); each command has its own default.
    #[arg(long, value_parser = clap::value_parser!(u32).range(0..=30), global = true)]
    pub decimals: Option<u32>,
    /// Largest word to materialize, in symbols [env: FIBDENSE_MAX_LEN].
    #[arg(long, global = true)]
    pub max_len: Option<u64>,
    /// Working precision in bits for floating evaluations.
    #[arg(long, default_value_t = 256, global = true)]
    pub prec: u32,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GfFamily {
    /// x^(k-1) / (1 - t x - x^2 - ... - x^k)
    Lemma22,
    /// x / (1 - k x - x^2)
    Kfib,
    /// F_j F_(j+lambda) over 1 - 2x - 2x^2 + x^3
    Product,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print FW(k) as a 0/1 stream, or its symbol counts.
    Word {
        k: u64,
        #[arg(long)]
        counts_only: bool,
    },
    /// Counts and densities of zeros and ones for k = 0..=K_MAX.
    DensityTable { k_max: u64 },
    /// Fibonacci length ratios L1..L7 for k = 1..=K_MAX.
    Ratios {
        k_max: u64,
        /// Print exact fractions instead of decimals.
        #[arg(long)]
        exact: bool,
    },
    /// Recompute claims and report a verdict per input.
    Claims {
        /// Claim ids to run (repeatable); all claims when omitted.
        #[arg(long = "id")]
        ids: Vec<String>,
        /// Index range `a..b` (inclusive) replacing the claim's default.
        #[arg(long, value_parser = parse_range)]
        k: Option<RangeInclusive<u64>>,
        /// Offset range `a..b` (inclusive) replacing the claim's default.
        #[arg(long, value_parser = parse_range)]
        lambda: Option<RangeInclusive<u64>>,
        /// List the claim ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Factor and palindrome counts of a Fibonacci prefix.
    Complexity {
        /// Prefix length (default F_24 = 46368).
        #[arg(long, default_value_t = 46368)]
        len: usize,
        #[arg(long, default_value_t = 64)]
        n_max: usize,
    },
    /// Palindrome count bound pal(k) < (16/k) fac(k + floor(k/4)).
    Palindromes {
        /// Prefix length (default F_26 = 121393).
        #[arg(long, default_value_t = 121393)]
        len: usize,
        #[arg(long, default_value_t = 64)]
        k_max: usize,
    },
    /// Partial index values of a continued fraction.
    Index {
        /// Partial quotients `a0,a1,...`; all ones when omitted.
        #[arg(long, value_delimiter = ',')]
        cf: Option<Vec<String>>,
        #[arg(long, default_value_t = 30)]
        depth: usize,
    },
    /// Series coefficients of a rational generating function.
    Gf {
        #[arg(value_enum)]
        family: GfFamily,
        #[arg(long, default_value_t = 1)]
        t: u64,
        #[arg(long, default_value_t = 2)]
        k: u64,
        #[arg(long, default_value_t = 0)]
        lambda: u64,
        #[arg(long, default_value_t = 20)]
        terms: usize,
    },
    /// Share of [1, x] taken by Fibonacci numbers.
    NaturalDensity {
        #[arg(required = true)]
        x: Vec<String>,
    },
    /// Rows k, F_k, F_k F_(k+1), product_norm(k, lambda) for plotting.
    FigureData {
        k_max: u64,
        #[arg(long, default_value_t = 1)]
        lambda: u64,
    },
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<u64>, String> {
    let parse = |v: &str| v.trim().parse::<u64>().map_err(|e| format!("`{v}`: {e}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (parse(a)?, parse(b)?);
            if a > b {
                return Err(format!("empty range {a}..{b}"));
            }
            Ok(a..=b)
        }
        None => parse(s).map(|v| v..=v),
    }
}

fn parse_nat(s: &str) -> Result<Nat> {
    s.trim()
        .parse::<Nat>()
        .map_err(|_| Error::InvalidSpec(format!("`{s}` is not a nonnegative integer")))
}

/// Output produced by a subcommand: a table, or raw text for `word`.
enum Rendered {
    Table(Table),
    Text(String),
}

struct Context {
    spec: OutputSpec,
    max_len: u64,
    prec: u32,
    meta: Value,
}

fn resolve_max_len(flag: Option<u64>) -> Result<u64> {
    if let Some(v) = flag {
        return Ok(v);
    }
    match std::env::var(MAX_LEN_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("{MAX_LEN_ENV}=`{v}` is not a length"))),
        Err(_) => Ok(DEFAULT_MAX_LEN),
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Word { .. } => "word",
        Command::DensityTable { .. } => "density-table",
        Command::Ratios { .. } => "ratios",
        Command::Claims { .. } => "claims",
        Command::Complexity { .. } => "complexity",
        Command::Palindromes { .. } => "palindromes",
        Command::Index { .. } => "index",
        Command::Gf { .. } => "gf",
        Command::NaturalDensity { .. } => "natural-density",
        Command::FigureData { .. } => "figure-data",
    }
}

/// Parses `args` (program name first) and runs the command; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("fibdense: {e}");
            EXIT_INPUT
        }
    }
}

fn meta(cli: &Cli, max_len: u64, decimals: u32) -> Value {
    let mut flags = Map::new();
    flags.insert("command".into(), json!(command_name(&cli.command)));
    flags.insert("format".into(), json!(cli.global.format.name()));
    flags.insert("decimals".into(), json!(decimals));
    flags.insert("max_len".into(), json!(max_len));
    flags.insert("prec".into(), json!(cli.global.prec));
    json!({ "version": env!("CARGO_PKG_VERSION"), "flags": flags })
}

fn default_decimals(cmd: &Command) -> u32 {
    match cmd {
        Command::DensityTable { .. } => 2,
        Command::Ratios { .. } => 1,
        Command::Index { .. } => 12,
        Command::NaturalDensity { .. } => 8,
        _ => 6,
    }
}

fn execute(cli: &Cli) -> Result<i32> {
    let g = &cli.global;
    let max_len = resolve_max_len(g.max_len)?;
    let decimals = g.decimals.unwrap_or_else(|| default_decimals(&cli.command));
    let ctx = Context {
        spec: OutputSpec { format: g.format, decimals, destination: g.out.clone() },
        max_len,
        prec: g.prec,
        meta: meta(cli, max_len, decimals),
    };
    let (rendered, code) = match &cli.command {
        Command::Word { k, counts_only } => (cmd_word(&ctx, *k, *counts_only)?, EXIT_OK),
        Command::DensityTable { k_max } => (Rendered::Table(cmd_density_table(&ctx, *k_max)), EXIT_OK),
        Command::Ratios { k_max, exact } => (Rendered::Table(cmd_ratios(&ctx, *k_max, *exact)?), EXIT_OK),
        Command::Claims { ids, k, lambda, list } => {
            if *list {
                let mut t = Table::new(&["id"]);
                for id in claims::CLAIM_IDS {
                    t.push(vec![Cell::text(*id)]);
                }
                (Rendered::Table(t), EXIT_OK)
            } else {
                let (t, failed) = cmd_claims(&ctx, ids, k.clone(), lambda.clone())?;
                (Rendered::Table(t), if failed { EXIT_CLAIM } else { EXIT_OK })
            }
        }
        Command::Complexity { len, n_max } => (Rendered::Table(cmd_complexity(&ctx, *len, *n_max)?), EXIT_OK),
        Command::Palindromes { len, k_max } => (Rendered::Table(cmd_palindromes(&ctx, *len, *k_max)?), EXIT_OK),
        Command::Index { cf, depth } => (Rendered::Table(cmd_index(&ctx, cf.as_deref(), *depth)?), EXIT_OK),
        Command::Gf { family, t, k, lambda, terms } => {
            (Rendered::Table(cmd_gf(*family, *t, *k, *lambda, *terms)?), EXIT_OK)
        }
        Command::NaturalDensity { x } => (Rendered::Table(cmd_natural_density(&ctx, x)?), EXIT_OK),
        Command::FigureData { k_max, lambda } => (Rendered::Table(cmd_figure_data(&ctx, *k_max, *lambda)?), EXIT_OK),
    };
    emit(&ctx, rendered).map_err(|e| Error::InvalidSpec(format!("cannot write output: {e}")))?;
    Ok(code)
}

fn emit(ctx: &Context, rendered: Rendered) -> std::io::Result<()> {
    let mut out = output::open(&ctx.spec)?;
    match rendered {
        Rendered::Table(t) => t.write_to(&mut out, ctx.spec.format, ctx.meta.clone()),
        Rendered::Text(s) => {
            out.write_all(s.as_bytes())?;
            out.write_all(b"\n")?;
            out.flush()
        }
    }
}

fn cmd_word(ctx: &Context, k: u64, counts_only: bool) -> Result<Rendered> {
    if counts_only {
        let (m, n) = fibword::counts(k);
        let mut t = Table::new(&["k", "length", "m", "n"]);
        t.push(vec![Cell::int(k), Cell::int(fibword::word_len(k)), Cell::int(m), Cell::int(n)]);
        return Ok(Rendered::Table(t));
    }
    let word = fibword::build(k, ctx.max_len)?;
    if ctx.spec.format == Format::Json {
        let mut t = Table::new(&["k", "word"]);
        t.push(vec![Cell::int(k), Cell::text(word.to_ascii())]);
        return Ok(Rendered::Table(t));
    }
    Ok(Rendered::Text(word.to_ascii()))
}

fn cmd_density_table(ctx: &Context, k_max: u64) -> Table {
    let d = ctx.spec.decimals;
    let mut t = Table::new(&["k", "m", "n", "DF_m", "DF_n"]);
    for rec in density::density_table(k_max) {
        t.push(vec![
            Cell::int(rec.k),
            Cell::int(&rec.m),
            Cell::int(&rec.n),
            Cell::text(render_decimal(&rec.df_m, d, false)),
            Cell::text(render_decimal(&rec.df_n, d, false)),
        ]);
    }
    t
}

fn cmd_ratios(ctx: &Context, k_max: u64, exact: bool) -> Result<Table> {
    if k_max == 0 {
        return Err(Error::OutOfDomain("ratios start at k = 1".into()));
    }
    let mut t = Table::new(&["k", "L1", "L2", "L3", "L4", "L5", "L6", "L7"]);
    for row in density::ratio_table(k_max) {
        let mut cells = vec![Cell::int(row.k)];
        cells.extend(row.values().iter().map(|v| {
            Cell::text(if exact { render_exact(v) } else { render_decimal(v, ctx.spec.decimals, true) })
        }));
        t.push(cells);
    }
    Ok(t)
}

fn cmd_claims(
    ctx: &Context,
    ids: &[String],
    k: Option<RangeInclusive<u64>>,
    lambda: Option<RangeInclusive<u64>>,
) -> Result<(Table, bool)> {
    let params = ClaimParams {
        k,
        lambda,
        prec: ctx.prec,
        decimals: ctx.spec.decimals,
        max_len: ctx.max_len,
        strategy: Strategy::default(),
    };
    let selected: Vec<String> = if ids.is_empty() {
        claims::CLAIM_IDS.iter().map(|s| s.to_string()).collect()
    } else {
        ids.to_vec()
    };
    let mut t = Table::new(&["id", "input", "exact", "value", "verdict", "note"]);
    let mut failed = false;
    for id in &selected {
        for r in claims::evaluate(id, &params)? {
            failed |= r.verdict == Verdict::Fails;
            t.push(vec![
                Cell::text(r.id),
                Cell::text(r.input),
                Cell::text(r.exact),
                Cell::text(r.value),
                Cell::text(r.verdict.as_str()),
                Cell::text(r.note),
            ]);
        }
    }
    Ok((t, failed))
}

fn cmd_complexity(ctx: &Context, len: usize, n_max: usize) -> Result<Table> {
    let prof = wordstats::fibonacci_profile(len, n_max, ctx.max_len)?;
    let mut t = Table::new(&["n", "fac", "pal", "stabilized"]);
    for n in 0..=n_max {
        t.push(vec![Cell::int(n), Cell::int(prof.fac[n]), Cell::int(prof.pal[n]), Cell::Bool(prof.stabilized[n])]);
    }
    Ok(t)
}

fn cmd_palindromes(ctx: &Context, len: usize, k_max: usize) -> Result<Table> {
    let word = fibword::prefix_symbols(len as u64, ctx.max_len)?;
    let c = wordstats::Complexity::of(&word);
    let mut t = Table::new(&["k", "pal", "fac_shift", "rhs", "holds"]);
    for k in 1..=k_max {
        let b = c.palindrome_bound(k)?;
        t.push(vec![
            Cell::int(k),
            Cell::int(c.pal[k]),
            Cell::int(c.fac[k + k / 4]),
            Cell::text(render_exact(&b.rhs)),
            Cell::Bool(b.holds),
        ]);
    }
    Ok(t)
}

#[allow(clippy::needless_range_loop)]
fn cmd_index(ctx: &Context, cf: Option<&[String]>, depth: usize) -> Result<Table> {
    let cf = match cf {
        Some(qs) => ContinuedFraction::new(qs.iter().map(|q| parse_nat(q)).collect::<Result<_>>()?)?,
        None => ContinuedFraction::all_ones(depth + 2),
    };
    let qs = convergent_denominators(&cf);
    let full = sturmian_index(&cf, depth)?;
    let d = ctx.spec.decimals;
    let mut t = Table::new(&["n", "a_next", "q_n", "term", "ind_partial", "ind_star_partial"]);
    for n in 0..=depth {
        let partial = sturmian_index(&cf, n)?;
        t.push(vec![
            Cell::int(n),
            Cell::int(&cf.quotients()[n + 1]),
            Cell::int(&qs[n]),
            Cell::text(render_decimal(&full.terms[n], d, false)),
            Cell::text(render_decimal(&partial.ind_partial, d, false)),
            Cell::text(render_decimal(&partial.ind_star_partial, d, false)),
        ]);
    }
    Ok(t)
}

fn cmd_gf(family: GfFamily, t: u64, k: u64, lambda: u64, terms: usize) -> Result<Table> {
    let gf: RationalGF = match family {
        GfFamily::Lemma22 => {
            if t == 0 || k == 0 {
                return Err(Error::InvalidSpec("lemma22 needs t, k >= 1".into()));
            }
            lemma22_gf(t, k)
        }
        GfFamily::Kfib => kfib_gf(k),
        GfFamily::Product => product_fib_gf(lambda),
    };
    let mut table = Table::new(&["index", "value"]);
    for (j, c) in gf.series(terms).iter().enumerate() {
        table.push(vec![Cell::int(j), Cell::text(render_exact(c))]);
    }
    Ok(table)
}

fn cmd_natural_density(ctx: &Context, xs: &[String]) -> Result<Table> {
    let mut t = Table::new(&["x", "count", "density_exact", "density"]);
    for x in xs {
        let x = parse_nat(x)?;
        let d = density::natural_density_fib(&x)?;
        t.push(vec![
            Cell::int(&x),
            Cell::int(density::fib_count_upto(&x)),
            Cell::text(render_exact(&d)),
            Cell::text(render_decimal(&d, ctx.spec.decimals, false)),
        ]);
    }
    Ok(t)
}

fn cmd_figure_data(ctx: &Context, k_max: u64, lambda: u64) -> Result<Table> {
    let d = ctx.spec.decimals;
    let mut t = Table::new(&["k", "fib_k", "fib_k_fib_k1", "product_norm_exact", "product_norm"]);
    let rows = Strategy::default().map_range(1..=k_max, |k| {
        density::product_norm(k, lambda, ctx.prec).map(|v| (k, v))
    });
    for row in rows {
        let (k, v) = row?;
        let fk = fib(k);
        let prod = &fk * fib(k + 1);
        t.push(vec![
            Cell::int(k),
            Cell::int(&fk),
            Cell::int(prod),
            Cell::text(render_exact(&density::product_norm_exact(k, lambda))),
            Cell::text(v.to_decimal(d)),
        ]);
    }
    Ok(t)
}
