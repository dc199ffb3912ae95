//! The `posetc` command line.
//!
//! Exit codes: 0 success, 1 parse or usage error, 2 a verifier produced a
//! witness, 3 a size cap was exceeded. Diagnostics go to stderr.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::antichain::{
    all_antichains_capped, antichain_poset_capped, EnumLimit, DEFAULT_ENUM_CAP,
};
use crate::cayley::{embed, image_subposet, verify_embedding};
use crate::error::Error;
use crate::lattice::{join_homomorphism_witness_capped, lattice_tables, singleton_meet_check};
use crate::oracle::{are_isomorphic, is_order_isomorphism, random_poset, GenConfig, ISOMORPHISM_CAP};
use crate::poset::{ElementId, FinitePoset};
use crate::render::{embed_json, embed_table, grid, hasse_dot};
use crate::text::{parse_poset, write_poset};

/// Environment variable overriding the antichain enumeration cap.
pub const MAX_ENUM_VAR: &str = "POSETC_MAX_ENUM";

#[derive(Debug, Parser)]
#[command(name = "posetc", about = "Finite posets, antichain orders and their Cayley embedding")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a poset file and check the partial-order axioms
    Validate { file: PathBuf },
    /// List every antichain in canonical order
    Antichains {
        file: PathBuf,
        /// Print only the number of antichains
        #[arg(long)]
        count: bool,
    },
    /// Cover pairs of the antichain order
    AntichainPoset {
        file: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Table of the maps f_z (rows x, columns f_z)
    Embed {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check the embedding, the antichain order and the image isomorphism
    Verify { file: PathBuf },
    /// Lattice detection and the singleton-meet check
    Lattice { file: PathBuf },
    /// Search for a pair where a -> f_a fails to preserve joins or meets
    Counterexample { file: PathBuf },
    /// Hasse diagram (cover pairs) of the poset
    Hasse {
        file: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Emit a seeded random poset in the text format
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub max_enum: EnumLimit,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_enum: EnumLimit(DEFAULT_ENUM_CAP),
        }
    }
}

impl Config {
    /// Reads `POSETC_MAX_ENUM`, falling back to the default cap when unset.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var(MAX_ENUM_VAR) {
            Ok(v) => v
                .trim()
                .parse()
                .map(|cap| Config {
                    max_enum: EnumLimit(cap),
                })
                .map_err(|_| format!("{MAX_ENUM_VAR} must be a non-negative integer, got {v:?}")),
            Err(_) => Ok(Config::default()),
        }
    }
}

/// Captured result of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stdout: String, stderr: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr,
        }
    }
}

fn error_outcome(err: &Error) -> Outcome {
    let code = match err {
        Error::TooLarge { .. } => 3,
        _ => 1,
    };
    Outcome::fail(code, String::new(), format!("error: {err}\n"))
}

/// Runs one command; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Config::from_env() {
        Ok(cfg) => run_with_config(argv, cfg),
        Err(msg) => Outcome::fail(1, String::new(), format!("error: {msg}\n")),
    }
}

pub fn run_with_config<I, T>(argv: I, cfg: Config) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome::ok(text)
                }
                _ => Outcome::fail(1, String::new(), text),
            };
        }
    };
    match execute(cli.command, cfg) {
        Ok(outcome) => outcome,
        Err(e) => error_outcome(&e),
    }
}

fn load(path: &PathBuf) -> Result<FinitePoset, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    parse_poset(&text)
}

fn execute(cmd: Command, cfg: Config) -> Result<Outcome, Error> {
    match cmd {
        Command::Validate { file } => {
            let p = load(&file)?;
            Ok(Outcome::ok(format!(
                "valid poset: {} elements, {} strict relations, {} cover pairs\n",
                p.len(),
                p.strict_relation_count(),
                p.cover_pairs().len()
            )))
        }
        Command::Antichains { file, count } => {
            let p = load(&file)?;
            let all = all_antichains_capped(&p, cfg.max_enum)?;
            if count {
                return Ok(Outcome::ok(format!("{}\n", all.len())));
            }
            let mut out = String::new();
            for a in &all {
                writeln!(out, "{}", p.format_set(a)).unwrap();
            }
            Ok(Outcome::ok(out))
        }
        Command::AntichainPoset { file, dot } => {
            let p = load(&file)?;
            let ap = antichain_poset_capped(&p, cfg.max_enum)?;
            if dot {
                return Ok(Outcome::ok(hasse_dot(&ap.order, "antichains")));
            }
            Ok(Outcome::ok(cover_lines(&ap.order)))
        }
        Command::Embed { file, json } => {
            let p = load(&file)?;
            let family = embed(&p);
            if json {
                let mut text = serde_json::to_string_pretty(&embed_json(&family))
                    .expect("JSON values always serialize");
                text.push('\n');
                return Ok(Outcome::ok(text));
            }
            Ok(Outcome::ok(embed_table(&family)))
        }
        Command::Verify { file } => verify(&load(&file)?, cfg),
        Command::Lattice { file } => lattice(&load(&file)?),
        Command::Counterexample { file } => counterexample(&load(&file)?, cfg),
        Command::Hasse { file, dot } => {
            let p = load(&file)?;
            if dot {
                return Ok(Outcome::ok(hasse_dot(&p, "hasse")));
            }
            Ok(Outcome::ok(cover_lines(&p)))
        }
        Command::Random { n, p, seed, out } => {
            let cfg = GenConfig::new(n, p, seed)?;
            let text = write_poset(&random_poset(&cfg));
            match out {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| Error::Parse {
                        line: 0,
                        message: format!("cannot write {}: {e}", path.display()),
                    })?;
                    Ok(Outcome::ok(String::new()))
                }
                None => Ok(Outcome::ok(text)),
            }
        }
    }
}

fn cover_lines(p: &FinitePoset) -> String {
    let mut out = String::new();
    for (x, y) in p.cover_pairs() {
        writeln!(out, "{} < {}", p.name(x), p.name(y)).unwrap();
    }
    out
}

fn verify(p: &FinitePoset, cfg: Config) -> Result<Outcome, Error> {
    let n = p.len();
    let mut out = String::new();
    if let Some(w) = verify_embedding(p) {
        writeln!(out, "witness: {}", w.describe(p)).unwrap();
        return Ok(Outcome::fail(2, out, "error: embedding check failed\n".into()));
    }
    writeln!(out, "embedding verified: {n} elements, {} pairs", n * n).unwrap();

    match antichain_poset_capped(p, cfg.max_enum) {
        Ok(ap) => {
            writeln!(out, "antichain order verified: {} antichains", ap.len()).unwrap();
        }
        Err(Error::TooLarge { cap, .. }) => {
            writeln!(
                out,
                "antichain order check skipped: {n} elements exceeds enumeration cap {cap}"
            )
            .unwrap();
        }
        Err(Error::NotAPartialOrder(v)) => {
            writeln!(out, "witness: antichain order is not a partial order: {v}").unwrap();
            return Ok(Outcome::fail(2, out, "error: antichain order check failed\n".into()));
        }
        Err(e) => return Err(e),
    }

    if n <= ISOMORPHISM_CAP {
        let image = image_subposet(p);
        let identity: Vec<ElementId> = p.elements().collect();
        // a ↦ f_a itself is the expected isomorphism; fall back to search
        let ok = is_order_isomorphism(&image, p, &identity) || are_isomorphic(&image, p)?.is_some();
        if !ok {
            writeln!(out, "witness: image subposet is not isomorphic to the input").unwrap();
            return Ok(Outcome::fail(2, out, "error: isomorphism check failed\n".into()));
        }
        writeln!(out, "image subposet isomorphic to input").unwrap();
    } else {
        writeln!(
            out,
            "isomorphism check skipped: {n} elements exceeds cap {ISOMORPHISM_CAP}"
        )
        .unwrap();
    }
    Ok(Outcome::ok(out))
}

fn op_table(p: &FinitePoset, symbol: &str, get: impl Fn(ElementId, ElementId) -> ElementId) -> String {
    let mut rows = Vec::with_capacity(p.len() + 1);
    let mut header = vec![symbol.to_string()];
    header.extend(p.names().iter().cloned());
    rows.push(header);
    for a in p.elements() {
        let mut row = vec![p.name(a).to_string()];
        row.extend(p.elements().map(|b| p.name(get(a, b)).to_string()));
        rows.push(row);
    }
    grid(&rows)
}

fn lattice(p: &FinitePoset) -> Result<Outcome, Error> {
    let tables = lattice_tables(p);
    let mut out = String::new();
    if let Some(w) = &tables.failure {
        writeln!(out, "lattice: no").unwrap();
        writeln!(out, "reason: {}", w.describe(p)).unwrap();
        return Ok(Outcome::ok(out));
    }
    writeln!(out, "lattice: yes ({} elements)", p.len()).unwrap();
    if !p.is_empty() {
        out.push_str("\njoin\n");
        out.push_str(&op_table(p, "∨", |a, b| tables.join(a, b).unwrap()));
        out.push_str("\nmeet\n");
        out.push_str(&op_table(p, "∧", |a, b| tables.meet(a, b).unwrap()));
        out.push('\n');
    }
    match singleton_meet_check(p)? {
        None => {
            writeln!(out, "singleton meet check: passed, f_a(x) = {{a ∧ x}} for all {} pairs", p.len() * p.len()).unwrap();
            Ok(Outcome::ok(out))
        }
        Some(w) => {
            writeln!(out, "witness: {}", w.describe(p)).unwrap();
            Ok(Outcome::fail(2, out, "error: singleton meet check failed\n".into()))
        }
    }
}

fn counterexample(p: &FinitePoset, cfg: Config) -> Result<Outcome, Error> {
    let report = match join_homomorphism_witness_capped(p, cfg.max_enum) {
        Ok(r) => r,
        Err(Error::NotALattice(w)) => {
            return Ok(Outcome::fail(
                1,
                String::new(),
                format!("precondition failed: poset is not a lattice: {}\n", w.describe(p)),
            ))
        }
        Err(Error::AntichainOrderNotLattice(w)) => {
            return Ok(Outcome::fail(
                1,
                String::new(),
                format!("precondition failed: antichain order is not a lattice: {w}\n"),
            ))
        }
        Err(e) => return Err(e),
    };
    let Some(w) = report.witness else {
        let pairs = p.len() * (p.len() + 1) / 2;
        return Ok(Outcome::ok(format!(
            "homomorphism holds: f_(a∨b) = f_a ∨ f_b and f_(a∧b) = f_a ∧ f_b for all {pairs} pairs\n"
        )));
    };
    let (a, b, c, op) = (p.name(w.a), p.name(w.b), p.name(w.combined), w.op);
    let kind = match op {
        crate::lattice::LatticeOp::Join => "join",
        crate::lattice::LatticeOp::Meet => "meet",
    };
    let mut out = String::new();
    writeln!(out, "{kind} homomorphism fails at pair ({a}, {b}): {a} {op} {b} = {c}").unwrap();
    out.push('\n');
    let mut rows = vec![vec![
        "x".to_string(),
        format!("f_{a}"),
        format!("f_{b}"),
        format!("f_{c}"),
        format!("f_{a} {op} f_{b}"),
    ]];
    let (fa, fb) = (crate::cayley::cayley_map(p, w.a), crate::cayley::cayley_map(p, w.b));
    for x in p.elements() {
        rows.push(vec![
            p.name(x).to_string(),
            p.format_set(fa.get(x)),
            p.format_set(fb.get(x)),
            p.format_set(w.image.get(x)),
            p.format_set(w.pointwise.get(x)),
        ]);
    }
    out.push_str(&grid(&rows));
    out.push('\n');
    for &x in &w.differences {
        let at = p.name(x);
        writeln!(
            out,
            "f_{{{a}{op}{b}}}({at}) = {} but (f_{a} {op} f_{b})({at}) = {}",
            p.format_set(w.image.get(x)),
            p.format_set(w.pointwise.get(x))
        )
        .unwrap();
    }
    Ok(Outcome::ok(out))
}
