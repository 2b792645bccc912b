//! `asmweak`: enumeration, queries, operators, polynomials, poset export
//! and exhaustive verification from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 malformed input,
//! 3 feasibility bound exceeded.

mod cache;
mod input;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use asmweak::antichain::{
    codim_anti, descents_anti, enumerate_antichains, groth_anti, maj_anti, pi_anti, pi_col_anti, schub_anti,
    strong_interval_anti, strong_poset_anti, weak_interval_anti, weak_poset_anti, DEFAULT_ANTI_BOUND,
};
use asmweak::groth::{groth_asm, schub_asm};
use asmweak::order::{
    bigrass_decomposition, codim, enumerate_asms_bounded, strong_interval, strong_poset, DEFAULT_ENUM_BOUND,
};
use asmweak::verify::{run_suite, suite_ids, suites};
use asmweak::weak::{descents, maj, pi_col_word, pi_word, weak_interval, weak_poset};
use asmweak::{Cell, Error, MultiPoly, PolyCache, PosetGraph, Variant};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use input::{parse_input, parse_word, Input};

/// Default largest `n` for polynomial computation.
const POLY_BOUND: usize = 5;

/// An error with its process exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    fn bound(what: &str, n: usize, bound: usize) -> Self {
        CliError {
            code: 3,
            message: format!("{what} at n = {n} exceeds the feasibility bound {bound}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::BoundExceeded { .. }) { 3 } else { 2 };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Machine-readable JSON (default except for posets).
    Json,
    /// Plain text; for posets this is DOT.
    Text,
    /// Graphviz DOT (posets only; default for posets).
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "asmweak", version, about = "Alternating sign matrices in strong and weak order")]
struct Cli {
    /// Feasibility bound on n, overriding each command's default.
    #[arg(long, global = true)]
    nmax: Option<usize>,
    /// Directory holding a persistent polynomial cache.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Asm,
    Antichain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    Rank,
    Diagram,
    Essential,
    PermSet,
    Codim,
    Descents,
    Maj,
    Bigrass,
    IdealGenerators,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Groth,
    Schub,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Single,
    Double,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Strong,
    Weak,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lists ASM(n) or anti(n), one object per line, then a count.
    Enumerate { kind: Kind, n: usize },
    /// Prints one datum of an ASM, permutation or antichain.
    Query {
        what: What,
        /// Fixture name, JSON, rows "0,1;1,0", antichain "{213,132}", file path or permutation.
        input: String,
    },
    /// Applies pi_i, or a word of them with the last letter applied first.
    Pi {
        input: String,
        /// Single operator index.
        #[arg(required_unless_present = "word", conflicts_with = "word")]
        index: Option<usize>,
        /// Comma-separated word, e.g. 3,2,1.
        #[arg(long)]
        word: Option<String>,
        /// Use the column operators.
        #[arg(long)]
        col: bool,
    },
    /// Grothendieck or Schubert polynomial.
    Poly {
        family: FamilyArg,
        variant: VariantArg,
        input: String,
    },
    /// Exports a poset, or the interval below a root.
    Poset {
        order: OrderArg,
        kind: Kind,
        /// Size; inferred from the root when omitted.
        n: Option<usize>,
        /// Export only the interval below this element.
        #[arg(long)]
        root: Option<String>,
        /// Write to a file instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Runs a verification suite, or all of them, up to size n.
    Verify {
        /// Suite id or "all".
        suite: String,
        /// Largest size checked; defaults to each suite's own cap.
        n: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    if let Some(dir) = &cli.cache_dir {
        let loaded = cache::load(dir, PolyCache::global()).map_err(CliError::input)?;
        eprintln!("cache: loaded {loaded} entries");
    }
    let mut out = String::new();
    let code = dispatch(cli, &mut out)?;
    print!("{out}");
    if let Some(dir) = &cli.cache_dir {
        let saved = cache::save(dir, PolyCache::global()).map_err(CliError::input)?;
        eprintln!("cache: saved {saved} entries");
    }
    Ok(code)
}

fn bound(cli: &Cli, default: usize) -> usize {
    cli.nmax.unwrap_or(default)
}

fn check_bound(what: &str, n: usize, limit: usize) -> Result<(), CliError> {
    if n > limit {
        return Err(CliError::bound(what, n, limit));
    }
    Ok(())
}

fn text_mode(cli: &Cli) -> Result<bool, CliError> {
    match cli.format {
        None | Some(Format::Json) => Ok(false),
        Some(Format::Text) => Ok(true),
        Some(Format::Dot) => Err(CliError::input("--format dot applies to posets only")),
    }
}

fn emit(out: &mut String, line: impl std::fmt::Display) {
    out.push_str(&line.to_string());
    out.push('\n');
}

fn dispatch(cli: &Cli, out: &mut String) -> Result<u8, CliError> {
    match &cli.command {
        Command::Enumerate { kind, n } => enumerate(cli, *kind, *n, out),
        Command::Query { what, input } => query(cli, *what, &parse_input(input)?, out),
        Command::Pi {
            input,
            index,
            word,
            col,
        } => {
            let word = match (index, word) {
                (Some(i), _) => vec![*i],
                (None, Some(w)) => parse_word(w)?,
                (None, None) => unreachable!("clap requires one"),
            };
            apply_pi(cli, &parse_input(input)?, &word, *col, out)
        }
        Command::Poly { family, variant, input } => poly(cli, *family, *variant, &parse_input(input)?, out),
        Command::Poset {
            order,
            kind,
            n,
            root,
            output,
        } => poset(cli, *order, *kind, *n, root.as_deref(), output.as_ref(), out),
        Command::Verify { suite, n } => verify(cli, suite, *n, out),
    }
}

fn element_json(x: &Input) -> Value {
    match x {
        Input::Asm(a) => json!({ "n": a.n(), "rows": a.rows(), "permutation": Value::Null }),
        Input::Perm(w) => json!({ "n": w.n(), "rows": w.to_asm().rows(), "permutation": w.oneline() }),
        Input::Anti(l) => l.to_json(),
    }
}

fn enumerate(cli: &Cli, kind: Kind, n: usize, out: &mut String) -> Result<u8, CliError> {
    let text = text_mode(cli)?;
    let items: Vec<Input> = match kind {
        Kind::Asm => enumerate_asms_bounded(n, bound(cli, DEFAULT_ENUM_BOUND))?
            .into_iter()
            .map(Input::from_asm)
            .collect(),
        Kind::Antichain => {
            check_bound("antichain enumeration", n, bound(cli, DEFAULT_ANTI_BOUND))?;
            enumerate_antichains(n)?.into_iter().map(Input::Anti).collect()
        }
    };
    for x in &items {
        if text {
            emit(out, x);
        } else {
            emit(out, element_json(x));
        }
    }
    if text {
        emit(out, format!("count {}", items.len()));
    } else {
        emit(out, json!({ "count": items.len() }));
    }
    Ok(0)
}

fn cells_json<'a>(cells: impl IntoIterator<Item = &'a Cell>) -> Value {
    cells.into_iter().map(|c| json!([c.row, c.col])).collect()
}

fn query(cli: &Cli, what: What, x: &Input, out: &mut String) -> Result<u8, CliError> {
    let text = text_mode(cli)?;
    let value = match what {
        What::PermSet => {
            let l = x.to_antichain();
            if text {
                emit(out, &l);
                return Ok(0);
            }
            l.to_json()
        }
        What::Codim => json!(match x {
            Input::Anti(l) => codim_anti(l),
            _ => codim(&x.to_asm()?),
        }),
        What::Descents => json!(match x {
            Input::Anti(l) => descents_anti(l),
            _ => descents(&x.to_asm()?),
        }),
        What::Maj => json!(match x {
            Input::Anti(l) => maj_anti(l),
            _ => maj(&x.to_asm()?),
        }),
        What::Rank => json!(x.to_asm()?.rank_matrix().rows()),
        What::Diagram => {
            let a = x.to_asm()?;
            json!({ "diagram": cells_json(&a.rothe_diagram()), "negatives": cells_json(&a.negatives()) })
        }
        What::Essential => cells_json(&x.to_asm()?.essential_set()),
        What::Bigrass => bigrass_decomposition(&x.to_asm()?)
            .iter()
            .map(|t| {
                let w = t.permutation();
                json!({ "cell": [t.row, t.col], "rank": t.rank, "name": t.to_string(), "permutation": w.oneline() })
            })
            .collect(),
        What::IdealGenerators => {
            // minors of size rk + 1 in the top-left i x j submatrix, per essential cell
            let a = x.to_asm()?;
            a.essential_set()
                .iter()
                .map(|c| {
                    json!({
                        "cell": [c.row, c.col],
                        "minor_size": a.rank(c.row, c.col) + 1,
                        "submatrix": { "rows": [1, c.row], "cols": [1, c.col] },
                    })
                })
                .collect()
        }
    };
    if text {
        emit(out, compact_text(&value));
    } else {
        emit(out, value);
    }
    Ok(0)
}

// JSON without quotes around plain strings, for --format text
fn compact_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn apply_pi(cli: &Cli, x: &Input, word: &[usize], col: bool, out: &mut String) -> Result<u8, CliError> {
    let text = text_mode(cli)?;
    let y = match x {
        Input::Anti(l) => {
            // last letter first, as for matrices
            let mut cur = l.clone();
            for &i in word.iter().rev() {
                cur = if col { pi_col_anti(&cur, i)? } else { pi_anti(&cur, i)? };
            }
            Input::Anti(cur)
        }
        _ => {
            let a = x.to_asm()?;
            let b = if col { pi_col_word(&a, word)? } else { pi_word(&a, word)? };
            Input::from_asm(b)
        }
    };
    if text {
        emit(out, &y);
    } else {
        emit(out, element_json(&y));
    }
    Ok(0)
}

fn poly(cli: &Cli, family: FamilyArg, variant: VariantArg, x: &Input, out: &mut String) -> Result<u8, CliError> {
    let text = text_mode(cli)?;
    check_bound("polynomial computation", x.n(), bound(cli, POLY_BOUND))?;
    let v = match variant {
        VariantArg::Single => Variant::Single,
        VariantArg::Double => Variant::Double,
    };
    let start = Instant::now();
    let p: MultiPoly = match (family, x) {
        (FamilyArg::Groth, Input::Anti(l)) => groth_anti(l, v),
        (FamilyArg::Schub, Input::Anti(l)) => schub_anti(l, v),
        (FamilyArg::Groth, _) => groth_asm(&x.to_asm()?, v),
        (FamilyArg::Schub, _) => schub_asm(&x.to_asm()?, v),
    };
    eprintln!("elapsed: {:.3?}", start.elapsed());
    if text {
        emit(out, &p);
    } else {
        emit(out, json!({ "input": x.to_string(), "text": p.to_string(), "poly": p.to_json() }));
    }
    Ok(0)
}

fn poset(
    cli: &Cli,
    order: OrderArg,
    kind: Kind,
    n: Option<usize>,
    root: Option<&str>,
    output: Option<&PathBuf>,
    out: &mut String,
) -> Result<u8, CliError> {
    let root = root.map(parse_input).transpose()?;
    let n = match (n, &root) {
        (Some(n), Some(r)) if n != r.n() => {
            return Err(CliError::input(format!("n = {n} but the root has size {}", r.n())));
        }
        (Some(n), _) => n,
        (None, Some(r)) => r.n(),
        (None, None) => return Err(CliError::input("give n or --root")),
    };
    if n == 0 {
        return Err(CliError::input("n must be positive"));
    }
    let limit = match kind {
        Kind::Asm => bound(cli, DEFAULT_ENUM_BOUND),
        Kind::Antichain => bound(cli, DEFAULT_ANTI_BOUND).min(DEFAULT_ANTI_BOUND),
    };
    check_bound("poset export", n, limit)?;
    let g: PosetGraph = match (kind, order, root) {
        (Kind::Asm, OrderArg::Strong, None) => strong_poset(n)?,
        (Kind::Asm, OrderArg::Weak, None) => weak_poset(n)?,
        (Kind::Antichain, OrderArg::Strong, None) => strong_poset_anti(n)?,
        (Kind::Antichain, OrderArg::Weak, None) => weak_poset_anti(n)?,
        (Kind::Asm, OrderArg::Strong, Some(r)) => strong_interval(&r.to_asm()?),
        (Kind::Asm, OrderArg::Weak, Some(r)) => weak_interval(&r.to_asm()?),
        (Kind::Antichain, OrderArg::Strong, Some(r)) => strong_interval_anti(&r.to_antichain())?,
        (Kind::Antichain, OrderArg::Weak, Some(r)) => weak_interval_anti(&r.to_antichain()),
    };
    let rendered = match cli.format {
        Some(Format::Json) => format!("{}\n", g.to_json()),
        _ => g.to_dot(),
    };
    eprintln!("poset: {} nodes, {} edges", g.node_count(), g.edge_count());
    match output {
        Some(path) => {
            fs::write(path, rendered).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        }
        None => out.push_str(&rendered),
    }
    Ok(0)
}

fn verify(cli: &Cli, suite: &str, n: Option<usize>, out: &mut String) -> Result<u8, CliError> {
    let text = text_mode(cli)?;
    let ids: Vec<&str> = if suite == "all" {
        suite_ids()
    } else if suite_ids().contains(&suite) {
        vec![suite]
    } else {
        return Err(CliError::input(format!(
            "unknown suite {suite:?}; expected \"all\" or one of: {}",
            suite_ids().join(", ")
        )));
    };
    let nmax = n.or(cli.nmax);
    let mut failed = 0;
    for id in ids {
        let cap = suites().iter().find(|s| s.id == id).map(|s| s.cap).expect("registered");
        let report = run_suite(id, nmax.unwrap_or(cap))?;
        eprintln!("{id}: {:.3?}", report.elapsed);
        if !report.passed() {
            failed += 1;
        }
        if text {
            let status = if report.passed() { "PASS" } else { "FAIL" };
            emit(
                out,
                format!("{status} {} [{}] checked {}, failures {}", report.theorem, report.universe, report.checked, report.failures.len()),
            );
            for f in &report.failures {
                emit(out, format!("  counterexample: {f}"));
            }
        } else {
            emit(out, report.to_json());
        }
    }
    Ok(if failed == 0 { 0 } else { 1 })
}
