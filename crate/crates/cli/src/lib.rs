//! Command-line front end for `schurlab`.
//!
//! [`run_cli`] parses an argument vector, runs one subcommand and writes the
//! report to `out`; diagnostics go to `err`. Output depends only on the
//! arguments (and the seed), so reports can be diffed across runs.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use schurlab::autocorrelation::{self, TwoLevelClass};
use schurlab::codes::{self, CodeSet};
use schurlab::constructions::{self, Status, TheoremReport, THEOREM_IDS};
use schurlab::perm_groups::{self, build_group, PermGroupSpec};
use schurlab::schur_ring;
use schurlab::word::{parse_word, render_word, Word};
use schurlab::{Error, Limits};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

/// Samples drawn by the randomized code check in `verify`.
pub const VERIFY_SAMPLES: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
    Csv,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Dot => "dot",
            Format::Csv => "csv",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "schurlab", version, about = "Schur rings over Z_2^n, codes and periodic autocorrelation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized checks; recorded in every JSON report.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest n for operations that enumerate Z_2^n.
    #[arg(long, global = true, env = "SCHURLAB_MAX_N", value_parser = clap::value_parser!(u64).range(1..=40))]
    max_n: Option<u64>,
}

#[derive(Debug, Args)]
struct GroupArg {
    /// Permutation group: sn, cn, dn, hn, hc, dc or hdc.
    #[arg(long, default_value = "cn")]
    group: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Orbit partition of Z_2^n under a permutation group.
    Partition {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        group: GroupArg,
    },
    /// Orbit of one word.
    Orbit {
        word: String,
        #[command(flatten)]
        group: GroupArg,
    },
    /// Decide whether a set of words is a code.
    CodeCheck {
        #[arg(required = true)]
        words: Vec<String>,
        /// Use the subset-product enumeration instead of the rank test.
        #[arg(long)]
        oracle: bool,
    },
    /// Subgroup generated by a set of words.
    Generate {
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Build one of the named subgroup families.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Divisor lattice of the period subgroups.
    Lattice {
        #[arg(long)]
        n: usize,
    },
    /// Structure constants of the weight-class S-ring.
    Lambda {
        #[arg(long)]
        n: usize,
        #[arg(long, requires_all = ["j", "k"])]
        i: Option<usize>,
        #[arg(long, requires_all = ["i", "k"])]
        j: Option<usize>,
        #[arg(long, requires_all = ["i", "j"])]
        k: Option<usize>,
    },
    /// Weight classes met by the product of two weight classes.
    Product {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// Periodic autocorrelation vector of a word.
    Autocorr { word: String },
    /// Exhaustive search for 2-level autocorrelation classes.
    #[command(name = "search-2level")]
    SearchTwoLevel {
        #[arg(long)]
        n: usize,
    },
    /// Run the theorem suite at length n.
    Verify {
        #[arg(long)]
        n: usize,
        /// Run only this check.
        #[arg(long)]
        theorem: Option<String>,
    },
    /// Count the subgroups generated by P(T)-codes.
    Census {
        #[arg(long)]
        n: usize,
        /// Include every construction.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Debug, Subcommand)]
enum Family {
    /// Period subgroup G_d(n).
    Gd {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Base word of weight n-1 (default: leading '-').
        #[arg(long)]
        base: Option<String>,
    },
    /// Decimation-invariant subgroup I_n(a).
    Inv {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        /// Base word of weight n-1 (default: leading '-').
        #[arg(long)]
        base: Option<String>,
    },
    /// Symmetric subgroup Sym(Z_2^n).
    Sym {
        #[arg(long)]
        n: usize,
        /// Base word of weight n-1 (default: centred '-' for odd n, trailing for even n).
        #[arg(long)]
        base: Option<String>,
    },
}

/// Resolved global settings for one invocation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub format: Format,
    pub seed: u64,
    pub max_n: usize,
}

impl RunConfig {
    fn check_n(&self, n: usize) -> Result<(), CliError> {
        if n > self.max_n {
            return Err(CliError::Cap(format!(
                "n = {n} exceeds the enumeration cap {} (raise it with --max-n or SCHURLAB_MAX_N)",
                self.max_n
            )));
        }
        Ok(())
    }

    fn limits(&self) -> Limits {
        Limits {
            max_n: self.max_n,
            ..Limits::default()
        }
    }
}

#[derive(Debug)]
enum CliError {
    Domain(Error),
    BadWord(String, Error),
    Cap(String),
    Format(Format, &'static str),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::BadWord(w, e) => write!(f, "malformed word {w:?}: {e}"),
            CliError::Cap(m) => write!(f, "cap exceeded: {m}"),
            CliError::Format(fmt, cmd) => {
                write!(f, "format {} is not supported by {cmd}", fmt.name())
            }
            CliError::Usage(m) => write!(f, "{m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => CliError::Cap(e.to_string()),
            e => CliError::Domain(e),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(format!("write failed: {e}"))
    }
}

type CliResult<T> = Result<T, CliError>;

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    EXIT_ERROR
                }
            };
        }
    };
    let config = RunConfig {
        format: cli.format,
        seed: cli.seed,
        max_n: cli.max_n.map_or(Limits::default().max_n, |m| m as usize),
    };
    match dispatch(&cli.command, &config, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn word_arg(s: &str) -> CliResult<Word> {
    parse_word(s).map_err(|e| CliError::BadWord(s.to_string(), e))
}

fn words_arg(items: &[String]) -> CliResult<Vec<Word>> {
    let words = items.iter().map(|s| word_arg(s)).collect::<CliResult<Vec<_>>>()?;
    let n = words[0].len();
    if let Some(w) = words.iter().find(|w| w.len() != n) {
        return Err(Error::LengthMismatch {
            left: n,
            right: w.len(),
        }
        .into());
    }
    Ok(words)
}

fn strings(words: &[Word]) -> Vec<String> {
    words.iter().map(render_word).collect()
}

fn group_of(name: &str, n: usize) -> CliResult<perm_groups::PermGroup> {
    let spec = PermGroupSpec::from_short_name(name, n)
        .map_err(|_| CliError::Usage(format!("unknown group {name:?}; expected one of sn, cn, dn, hn, hc, dc, hdc")))?;
    Ok(build_group(&spec)?)
}

fn envelope(command: &str, config: &RunConfig, params: Value, result: Value) -> Value {
    json!({
        "command": command,
        "seed": config.seed,
        "params": params,
        "result": result,
    })
}

fn emit_json(out: &mut dyn Write, v: &Value) -> CliResult<()> {
    let s = serde_json::to_string_pretty(v).expect("json values serialize");
    writeln!(out, "{s}")?;
    Ok(())
}

fn only(config: &RunConfig, cmd: &'static str, allowed: &[Format]) -> CliResult<()> {
    if allowed.contains(&config.format) {
        Ok(())
    } else {
        Err(CliError::Format(config.format, cmd))
    }
}

const TEXT_JSON: &[Format] = &[Format::Text, Format::Json];

fn dispatch(cmd: &Command, config: &RunConfig, out: &mut dyn Write) -> CliResult<i32> {
    match cmd {
        Command::Partition { n, group } => cmd_partition(*n, &group.group, config, out),
        Command::Orbit { word, group } => cmd_orbit(word, &group.group, config, out),
        Command::CodeCheck { words, oracle } => cmd_code_check(words, *oracle, config, out),
        Command::Generate { words } => cmd_generate(words, config, out),
        Command::Construct { family } => cmd_construct(family, config, out),
        Command::Lattice { n } => cmd_lattice(*n, config, out),
        Command::Lambda { n, i, j, k } => cmd_lambda(*n, (*i).zip(*j).zip(*k), config, out),
        Command::Product { n, a, b } => cmd_product(*n, *a, *b, config, out),
        Command::Autocorr { word } => cmd_autocorr(word, config, out),
        Command::SearchTwoLevel { n } => cmd_search(*n, config, out),
        Command::Verify { n, theorem } => cmd_verify(*n, theorem.as_deref(), config, out),
        Command::Census { n, list } => cmd_census(*n, *list, config, out),
    }
    .map(|code| code.unwrap_or(EXIT_OK))
}

fn cmd_partition(n: usize, group: &str, config: &RunConfig, out: &mut dyn Write) -> CliResult<Option<i32>> {
    only(config, "partition", TEXT_JSON)?;
    config.check_n(n)?;
    let g = group_of(group, n)?;
    let p = perm_groups::partition_with_limits(n, &g, &config.limits())?;
    let orbits = p.sorted_for_output();
    match config.format {
        Format::Json => {
            let list: Vec<Vec<String>> = orbits.iter().map(|o| strings(o)).collect();
            let v = envelope(
                "partition",
                config,
                json!({"n": n, "group": g.spec().short_name()}),
                json!({"orbit_count": list.len(), "orbits": list}),
            );
            emit_json(out, &v)?;
        }
        _ => {
            writeln!(out, "{} orbits of Z_2^{n} under {}", orbits.len(), g.spec().short_name())?;
            for o in orbits {
                writeln!(out, "{:>6}  {}", o.len(), strings(o).join(" "))?;
            }
        }
    }
    Ok(None)
}

fn cmd_orbit(word: &str, group: &str, config: &RunConfig, out: &mut dyn Write) -> CliResult<Option<i32>> {
    only(config, "orbit", TEXT_JSON)?;
    let x = word_arg(word)?;
    let g = group_of(group, x.len())?;
    if g.is_symmetric() {
        config.check_n(x.len())?;
    }
    let orbit = perm_groups::orbit(&x, &g)?;
    match config.format {
        Format::Json => emit_json(
            out,
            &envelope(
                "orbit",
                config,
                json!({"word": render_word(&x), "group": g.spec().short_name()}),
                json!({"size": orbit.len(), "representative": render_word(&orbit[0]), "words": strings(&orbit)}),
            ),
        )?,
        _ => {
            writeln!(out, "orbit of {} under {}: {} words", x, g.spec().short_name(), orbit.len())?;
            for w in &orbit {
                writeln!(out, "{w}")?;
            }
        }
    }
    Ok(None)
}

fn cmd_code_check(items: &[String], oracle: bool, config: &RunConfig, out: &mut dyn Write) -> CliResult<Option<i32>> {
    only(config, "code-check", TEXT_JSON)?;
    let words = words_arg(items)?;
    let n = words[0].len();
    let c = CodeSet::new(n, words)?;
    let verdict = if oracle {
        codes::check_code_oracle(&c)?
    } else {
        codes::check_code(&c)
    };
    let method = if oracle { "oracle" } else { "rank" };
    match config.format {
        Format::Json => {
            let witness = match &verdict {
                Ok(()) => Value::Null,
                Err(w) => serde_json::to_value(w).expect("witness serializes"),
            };
            emit_json(
                out,
                &envelope(
                    "code-check",
                    config,
                    json!({"n": n, "words": strings(c.words()), "method": method}),
                    json!({"is_code": verdict.is_ok(), "witness": witness}),
                ),
            )?;
        }
        _ => match &verdict {
            Ok(()) => writeln!(out, "code: yes ({} words, {method})", c.len())?,
            Err(w) => {
                let show = |ix: &[usize]| ix.iter().map(|i| c.words()[*i].to_string()).collect::<Vec<_>>().join(" * ");
                writeln!(out, "code: no ({method})")?;
                writeln!(out, "{} = {}", w.word, show(&w.left))?;
                writeln!(out, "{} = {}", w.word, show(&w.right))?;
            }
        },
    }
    Ok(None)
}

fn cmd_generate(items: &[String], config: &RunConfig, out: &mut dyn Write) -> CliResult<Option<i32>> {
    only(config, "generate", TEXT_JSON)?;
    let words = words_arg(items)?;
    let n = words[0].len();
    let rank = schurlab::gf2::rank(&words.iter().map(Word::mask).collect::<Vec<_>>());
    config.check_n(rank)?;
    let span = codes::span_of(n, &words)?;
    let is_code = rank == words.len() && words.iter().all(|w| !w.is_identity());
    match config.format {
        Format::Json => emit_json(
            out,
            &envelope(
                "generate",
                config,
                json!({"n": n, "words": strings(&words)}),
                json!({"rank": rank, "order": span.len(), "is_code": is_code, "elements": strings(&span)}),
            ),
        )?,
        _ => {
            writeln!(out, "order {} (rank {rank})", span.len())?;
            for w in &span {
                writeln!(out, "{w}")?;
            }
        }
    }
    Ok(None)
}

fn base_arg(base: &Option<String>, n: usize) -> CliResult<Option<Word>> {
    let Some(s) = base else { return Ok(None) };
    let w = word_arg(s)?;
    if w.len() != n {
        return Err(Error::LengthMismatch { left: n, right: w.len() }.into());
    }
    Ok(Some(w))
}

fn cmd_construct(family: &Family, config: &RunConfig, out: &mut dyn Write) -> CliResult<Option<i32>> {
    only(config, "construct", TEXT_JSON)?;
    let (name, params, code, group) = match family {
        Family::Gd { n, d, base } => {
            config.check_n(*n)?;
            let base = base_arg(base, *n)?;
            let code = match &base {
                Some(b) => constructions::xfd_code_with_base(*n, *d, b)?,
                None => constructions::xfd_code(*n, *d)?,
            };
            let group = codes::generated_subgroup(&code)?;
            if base.is_none() && group != constructions::g_subgroup_by_scan(*n, *d)? {
                return Err(Error::ConstructionMismatch(format!("G_{d}({n})")).into());
            }
            ("gd", json!({"n": n, "d": d, "base": base.map(|b| render_word(&b))}), code, group)
        }
        Family::Inv { n, a, base } => {
            config.check_n(*n)?;
            let base = match base_arg(base, *n)? {
                Some(b) => b,
                None => Word::unit(*n, 0)?,
            };
            let code = constructions::invariant_code_with_base(*n, *a, &base)?;
            let group = constructions::invariant_subgroup_with_base(*n, *a, &base)?;
            ("inv", json!({"n": n, "a": a, "base": render_word(&base)}), code, group)
        }
        Family::Sym { n, base } => {
            config.check_n(*n)?;
            let base = match base_arg(base, *n)? {
                Some(b) => b,
                None => constructions::sym_base(*n)?,
            };
            let code = constructions::sym_code_with_base(*n, &base)?;
            let group = codes::generated_subgroup(&code)?;
            if base == constructions::sym_base(*n)? && group != constructions::sym_subgroup(*n)? {
                return Err(Error::ConstructionMismatch(format!("Sym({n})")).into());
            }
            ("sym", json!({"n": n, "base": render_word(&base)}), code, group)
        }
    };
    match config.format {
        Format::Json => emit_json(
            out,
            &envelope(
                &format!("construct {name}"),
                config,
                params,
                json!({"code": strings(code.words()), "order": group.len(), "elements": strings(&group)}),
            ),
        )?,
        _ => {
            writeln!(out, "code ({} words):", code.len())?;
            for w in code.words() {
                writeln!(out, "  {w}")?;
            }
            writeln!(out, "subgroup (order {}):", group.len())?;
            for w in &group {
                writeln!(out, "  {w}")?;
            }
        }
    }
    Ok(None)
}

/// DOT rendering of the period-subgroup lattice, bottom to top.
pub fn lattice_dot(n: usize) -> String {
    let mut s = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
    for d in schurlab::arith::divisors(n as u64) {
        s.push_str(&format!("  g{d} [label=\"𝔾_{d}({n})\"];\n"));
    }
    for (d, e) in constructions::g_lattice(n) {
        s.push_str(&format!("  g{d} -> g{e};\n"));
    }
    s.push_str("}\n");
    s
}

fn cmd_lattice(n: usize, config: &RunConfig, out: &mut dyn Write) -> CliResult<Option<i32>> {
    only(config, "lattice", &[Format::Text, Format::Json, Format::Dot])?;
    if n == 0 || n > schurlab::word::MAX_LEN {
        return Err(Error::InvalidLength(n).into());
    }
    let nodes = schurlab::arith::divisors(n as u64);
    let edges = constructions::g_lattice(n);
    match config.format {
        Format::Dot => write!(out, "{}", lattice_dot(n))?,
        Format::Json => {
            let nodes: Vec<Value> = nodes
                .iter()
                .map(|&d| json!({"d": d, "order_log2": d}))
                .collect();
            let edges: Vec<Value> = edges.iter().map(|(d, e)| json!({"from": d, "to": e})).collect();
            emit_json(out, &envelope("lattice", config, json!({"n": n}), json!({"nodes": nodes, "edges": edges})))?;
        }
        _ => {
            writeln!(out, "{} subgroups, {} covering relations", nodes.len(), edges.len())?;
            for (d, e) in edges {
                writeln!(out, "G_{d}({n}) < G_{e}({n})")?;
            }
        }
    }
    Ok(None)
}

fn cmd_lambda(
    n: usize,
    ijk: Option<((usize, usize), usize)>,
    config: &RunConfig,
    out: &mut dyn Write,
) -> CliResult<Option<i32>> {
    only(config, "lambda", TEXT_JSON)?;
    if n == 0 || n > schurlab::word::MAX_LEN {
        return Err(Error::InvalidLength(n).into());
    }
    let mut entries = Vec::new();
    match ijk {
        Some(((i, j), k)) => {
            for v in [i, j, k] {
                if v > n {
                    return Err(Error::OutOfRange { value: v, max: n }.into());
                }
            }
            entries.push((i, j, k, schur_ring::lambda_formula(n, i, j, k)));
        }
        None => {
            for i in 0..=n {
                for j in 0..=n {
                    for k in 0..=n {
                        let l = schur_ring::lambda_formula(n, i, j, k);
                        if l != 0 {
                            entries.push((i, j, k, l));
                        }
                    }
                }
            }
        }
    }
    match config.format {
        Format::Json => {
            // u128 values are emitted as strings to stay exact
            let list: Vec<Value> = entries
                .iter()
                .map(|(i, j, k, l)| json!({"i": i, "j": j, "k": k, "lambda": l.to_string()}))
                .collect();
            emit_json(out, &envelope("lambda", config, json!({"n": n}), json!({"entries": list})))?;
        }
        _ => {
            for (i, j, k, l) in entries {
                writeln!(out, "lambda({i},{j},{k}) = {l}")?;
            }
        }
    }
    Ok(None)
}

fn cmd_product(n: usize, a: usize, b: usize, config: &RunConfig, out: &mut dyn Write) -> CliResult<Option<i32>> {
    only(config, "product", TEXT_JSON)?;
    let weights = schur_ring::gset_product_weights(n, a, b)?;
    match config.format {
        Format::Json => emit_json(
            out,
            &envelope("product", config, json!({"n": n, "a": a, "b": b}), json!({"weights": weights})),
        )?,
        _ => {
            let list: Vec<String> = weights.iter().map(|c| format!("G_{n}({c})")).collect();
            writeln!(out, "G_{n}({a}) G_{n}({b}) = {}", list.join(" + "))?;
        }
    }
    Ok(None)
}

fn cmd_autocorr(word: &str, config: &RunConfig, out: &mut dyn Write) -> CliResult<Option<i32>> {
    only(config, "autocorr", TEXT_JSON)?;
    let x = word_arg(word)?;
    let t = autocorrelation::autocorr_vector(&x);
    let off = t.off_peak();
    match config.format {
        Format::Json => emit_json(
            out,
            &envelope(
                "autocorr",
                config,
                json!({"word": render_word(&x)}),
                json!({"n": x.len(), "values": t.values, "two_level": off.is_some(), "off_peak": off}),
            ),
        )?,
        _ => {
            let vals: Vec<String> = t.values.iter().map(i64::to_string).collect();
            writeln!(out, "({})", vals.join(","))?;
            match off {
                Some(d) => writeln!(out, "2-level, off-peak {d}")?,
                None => writeln!(out, "not 2-level")?,
            }
        }
    }
    Ok(None)
}

fn class_json(c: &TwoLevelClass) -> Value {
    json!({
        "n": c.n,
        "representative": render_word(&c.representative),
        "weight": c.weight,
        "offpeak": c.off_peak,
        "orbit_size": c.orbit_size,
    })
}

fn cmd_search(n: usize, config: &RunConfig, out: &mut dyn Write) -> CliResult<Option<i32>> {
    only(config, "search-2level", &[Format::Text, Format::Json, Format::Csv])?;
    config.check_n(n)?;
    let classes = autocorrelation::search_two_level(n)?;
    match config.format {
        Format::Json => {
            let list: Vec<Value> = classes.iter().map(class_json).collect();
            emit_json(out, &envelope("search-2level", config, json!({"n": n}), json!({"classes": list})))?;
        }
        _ => {
            writeln!(out, "n,representative,weight,offpeak,orbit_size")?;
            for c in &classes {
                writeln!(out, "{},{},{},{},{}", c.n, c.representative, c.weight, c.off_peak, c.orbit_size)?;
            }
        }
    }
    Ok(None)
}

/// Random candidate sets: the rank test and the subset-product oracle must
/// agree on every one.
pub fn code_oracle_agreement(n: usize, seed: u64, samples: usize) -> schurlab::Result<TheoremReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let max_len = (n + 3).min(codes::ORACLE_MAX_WORDS).min(full as usize);
    for s in 0..samples {
        let len = rng.gen_range(1..=max_len);
        let mut masks = std::collections::BTreeSet::new();
        while masks.len() < len {
            masks.insert(rng.gen_range(1..=full));
        }
        let words = masks.into_iter().map(|m| Word::new(n, m)).collect::<schurlab::Result<Vec<_>>>()?;
        let c = CodeSet::new(n, words)?;
        if codes::is_code(&c) != codes::is_code_oracle(&c)? {
            return Ok(TheoremReport {
                theorem_id: "code_oracle_agreement",
                n,
                status: Status::Fail,
                witness: Some(format!("sample {s}: {:?}", strings(c.words()))),
            });
        }
    }
    Ok(TheoremReport {
        theorem_id: "code_oracle_agreement",
        n,
        status: Status::Pass,
        witness: None,
    })
}

fn cmd_verify(n: usize, theorem: Option<&str>, config: &RunConfig, out: &mut dyn Write) -> CliResult<Option<i32>> {
    only(config, "verify", TEXT_JSON)?;
    config.check_n(n)?;
    if n == 0 || n > constructions::theorems::SUITE_MAX_N {
        return Err(Error::CapExceeded {
            what: "word length for the theorem suite",
            value: n,
            cap: constructions::theorems::SUITE_MAX_N,
        }
        .into());
    }
    let ids: Vec<&str> = match theorem {
        Some(t) if t == "code_oracle_agreement" => Vec::new(),
        Some(t) if THEOREM_IDS.contains(&t) => vec![t],
        Some(t) => return Err(CliError::Usage(format!("unknown theorem {t:?}"))),
        None => THEOREM_IDS.to_vec(),
    };
    // checks run concurrently; results are collected in declaration order
    let mut reports: Vec<TheoremReport> = std::thread::scope(|s| {
        let handles: Vec<_> = ids
            .iter()
            .map(|id| s.spawn(move || constructions::run_theorem(id, n)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check thread panicked"))
            .collect::<schurlab::Result<Vec<_>>>()
    })?;
    if theorem.is_none() || theorem == Some("code_oracle_agreement") {
        reports.push(code_oracle_agreement(n, config.seed, VERIFY_SAMPLES)?);
    }
    let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
    match config.format {
        Format::Json => emit_json(
            out,
            &envelope(
                "verify",
                config,
                json!({"n": n, "theorem": theorem}),
                json!({"all_pass": failed == 0, "failed": failed, "reports": reports}),
            ),
        )?,
        _ => {
            for r in &reports {
                let tag = match r.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::NotApplicable => "N/A ",
                };
                match &r.witness {
                    Some(w) => writeln!(out, "{tag}  {}  {w}", r.theorem_id)?,
                    None => writeln!(out, "{tag}  {}", r.theorem_id)?,
                }
            }
            writeln!(out, "n={n}: {} checks, {failed} failed", reports.len())?;
        }
    }
    Ok((failed > 0).then_some(EXIT_VERIFY_FAILED))
}

fn cmd_census(n: usize, list: bool, config: &RunConfig, out: &mut dyn Write) -> CliResult<Option<i32>> {
    only(config, "census", TEXT_JSON)?;
    config.check_n(n)?;
    let c = codes::pt_census(n, list)?;
    match config.format {
        Format::Json => {
            let listing = c.listing.as_ref().map(|l| {
                l.iter()
                    .map(|s| {
                        json!({
                            "blocks": s.partition.blocks(),
                            "code": strings(s.code.words()),
                            "order": s.order,
                        })
                    })
                    .collect::<Vec<_>>()
            });
            emit_json(
                out,
                &envelope(
                    "census",
                    config,
                    json!({"n": n, "list": list}),
                    json!({
                        "formula": c.formula.to_string(),
                        "constructions": c.constructions,
                        "distinct_subgroups": c.distinct_subgroups,
                        "listing": listing,
                    }),
                ),
            )?;
        }
        _ => {
            writeln!(
                out,
                "n={n}: {} subgroups from {} constructions (formula {})",
                c.distinct_subgroups, c.constructions, c.formula
            )?;
            for s in c.listing.iter().flatten() {
                let blocks: Vec<String> = s
                    .partition
                    .blocks()
                    .iter()
                    .map(|b| format!("{{{}}}", b.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
                    .collect();
                writeln!(out, "order {:>4}  P(T) = [{}]  code: {}", s.order, blocks.join(" "), strings(s.code.words()).join(" "))?;
            }
        }
    }
    Ok(None)
}
