//! Command-line front end. Everything here is orchestration and rendering;
//! all computation lives in the other modules.

use std::fs;
use std::io::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::alexander::{classify_cyclic, nelson_equivalent};
use crate::autgroup::{aut_s6_conjugacy_classes, eta, parse_automorphism, xi};
use crate::classify::{classify, table_csv, verify_theorem};
use crate::invariants::{dc_alt_invariant, dc_full_diagnostic};
use crate::iso::are_isomorphic;
use crate::perm::parse_partition;
use crate::quandle::{general_alexander, FiniteQuandle, QuandleFile};
use crate::s6::SemiDirectGroup;
use crate::Error;

pub const DEFAULT_BUDGET: u64 = 1_000_000;
pub const DEFAULT_TABLE_CAP: u64 = 720;
pub const DEFAULT_ISO_CAP: usize = 200;
pub const SLOW_ISO_CAP: usize = 720;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "quandles",
    about = "Generalized Alexander quandles over symmetric groups: tables, invariants, classification"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Config {
    /// Cycle-type histogram cap (p(n)) for double-coset counting
    /// [env: QF_BUDGET]
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Largest quandle table to materialize [env: QF_TABLE_CAP]
    #[arg(long, global = true)]
    pub table_cap: Option<u64>,
    /// Allow the expensive paths (720-point isomorphism search, n=6 oracle)
    /// [env: QF_SLOW=1]
    #[arg(long, global = true)]
    pub slow: bool,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Seed for sampled spot checks
    #[arg(long, global = true, default_value = "1")]
    pub seed: u64,
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

impl Config {
    fn budget(&self) -> u64 {
        self.budget
            .or_else(|| env_u64("QF_BUDGET"))
            .unwrap_or(DEFAULT_BUDGET)
    }

    fn table_cap(&self) -> u64 {
        self.table_cap
            .or_else(|| env_u64("QF_TABLE_CAP"))
            .unwrap_or(DEFAULT_TABLE_CAP)
    }

    fn slow(&self) -> bool {
        self.slow || std::env::var("QF_SLOW").map(|v| v == "1").unwrap_or(false)
    }

    fn iso_cap(&self) -> usize {
        if self.slow() {
            SLOW_ISO_CAP
        } else {
            DEFAULT_ISO_CAP
        }
    }
}

fn env_u64(name: &str) -> Option<u64> {
    std::env::var(name).ok().and_then(|v| v.parse().ok())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Class table for S_n: one column per Aut-class, rows ord/fix/parity
    Table { n: usize },
    /// Run the full invariant pipeline over the Aut-classes of S_n
    Classify {
        n: usize,
        /// Skip the double-coset stage (iv)
        #[arg(long)]
        no_stage_iv: bool,
    },
    /// Classify a whole range (e.g. `verify 3..30`) and check the expected
    /// outcome: bijective everywhere except the single stuck pair at n=15
    Verify { range: String },
    /// Double-coset counts for the centralizer of the given shape
    Doublecosets {
        n: usize,
        partition: String,
        /// Also print |K \ S_n / K| (diagnostic, not a proven invariant)
        #[arg(long)]
        full: bool,
    },
    /// Brute-force isomorphism test between two quandle files
    /// (line 1: N, then N rows of N integers); exit 0 iff isomorphic
    Iso {
        file_a: String,
        file_b: String,
        #[arg(long)]
        witness: bool,
    },
    /// Alexander quandles over C_n: isomorphism classes of unit multipliers
    Alexander { n: u64 },
    /// Everything about Aut(S_6): classes, the named outer automorphisms,
    /// and the centralizer-spectrum separation of the two outer (4,2) classes
    S6Report,
    /// Materialize Q(S_n, psi) and print or save its table
    Quandle {
        n: usize,
        /// Automorphism: cycles like "(1 2 3)", or "xi", "eta0", "eta1",
        /// "inner:(...)", "outer:(...)"
        aut: String,
        #[arg(long)]
        out: Option<String>,
        /// Run the classification oracle instead of printing the table
        #[arg(long)]
        check: bool,
    },
}

/// Entry point: parse args from the environment and dispatch.
/// Exit codes: 0 success, 1 verification/assertion failure, 2 usage error.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(jobs) = cli.config.jobs {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_) | Error::NotAPermutation | Error::NotAUnit { .. } => 2,
                _ => 1,
            }
        }
    }
}

/// Insert thousands separators, matching how large counts are usually typeset.
pub fn group_thousands(v: &str) -> String {
    let (sign, digits) = v.strip_prefix('-').map_or(("", v), |d| ("-", d));
    let mut out = String::new();
    for (i, c) in digits.chars().enumerate() {
        if i > 0 && (digits.len() - i) % 3 == 0 {
            out.push(',');
        }
        out.push(c);
    }
    format!("{sign}{out}")
}

fn dispatch(cli: &Cli) -> Result<i32, Error> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Table { n } => cmd_table(*n, cfg),
        Command::Classify { n, no_stage_iv } => cmd_classify(*n, !*no_stage_iv, cfg),
        Command::Verify { range } => cmd_verify(range, cfg),
        Command::Doublecosets { n, partition, full } => cmd_doublecosets(*n, partition, *full, cfg),
        Command::Iso {
            file_a,
            file_b,
            witness,
        } => cmd_iso(file_a, file_b, *witness, cfg),
        Command::Alexander { n } => cmd_alexander(*n, cfg),
        Command::S6Report => cmd_s6_report(cfg),
        Command::Quandle { n, aut, out, check } => cmd_quandle(*n, aut, out.as_deref(), *check, cfg),
    }
}

fn cmd_table(n: usize, cfg: &Config) -> Result<i32, Error> {
    let csv = table_csv(n, cfg.budget())?;
    match cfg.format {
        Format::Csv => print!("{csv}"),
        Format::Json => {
            let labels = crate::classify::class_labels(n);
            let entries: Vec<serde_json::Value> = labels
                .iter()
                .map(|l| {
                    let p = crate::invariants::profile(n, l, false, cfg.budget())?;
                    Ok(serde_json::to_value(&p).expect("profile serializes"))
                })
                .collect::<Result<_, Error>>()?;
            println!("{}", serde_json::to_string_pretty(&json!({"n": n, "classes": entries})).unwrap());
        }
        Format::Text => {
            let rows: Vec<Vec<&str>> = csv.lines().map(|l| l.split(',').collect()).collect();
            let widths: Vec<usize> = (0..rows[0].len())
                .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap())
                .collect();
            println!("Aut(S_{n}) classes:");
            for r in &rows {
                let line: Vec<String> = r
                    .iter()
                    .zip(&widths)
                    .map(|(cell, w)| format!("{cell:>w$}"))
                    .collect();
                println!("  {}", line.join("  "));
            }
        }
    }
    Ok(0)
}

fn cmd_classify(n: usize, stage_iv: bool, cfg: &Config) -> Result<i32, Error> {
    let report = classify(n, cfg.budget(), stage_iv)?;
    match cfg.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
        Format::Csv => print!("{}", table_csv(n, cfg.budget())?),
        Format::Text => {
            println!(
                "n = {}: {} Aut-classes, {} pairs separated at stage (i)",
                report.n, report.summary.class_count, report.summary.separated_at_stage_i
            );
            for p in &report.pairs {
                let stage = match p.stage {
                    Some(crate::classify::Stage::OrdFix) => "stage i",
                    Some(crate::classify::Stage::InnDescriptor) => "stage ii",
                    Some(crate::classify::Stage::PowerChain) => "stage iii",
                    Some(crate::classify::Stage::DoubleCoset) => "stage iv",
                    Some(crate::classify::Stage::S6Spectrum) => "s6-spectrum",
                    None => match p.status {
                        crate::classify::PairStatus::UndeterminedBudget => "undetermined (budget)",
                        _ => "unresolved",
                    },
                };
                if p.stage != Some(crate::classify::Stage::OrdFix) {
                    println!("  {} vs {}: {} [{}]", p.a, p.b, stage, p.evidence);
                }
            }
            println!(
                "bijective with Aut-classes: {}",
                report.summary.bijective_with_aut_classes
            );
            for (a, b) in &report.summary.unresolved {
                println!("  unresolved: {a} vs {b}");
            }
        }
    }
    Ok(0)
}

fn parse_range(text: &str) -> Result<(usize, usize), Error> {
    let parts: Vec<&str> = text.split("..").collect();
    let parse = |s: &str| {
        s.trim_start_matches('=')
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad range `{text}`; expected like 3..30")))
    };
    match parts.as_slice() {
        [a] => {
            let v = parse(a)?;
            Ok((v, v))
        }
        [a, b] => Ok((parse(a)?, parse(b)?)),
        _ => Err(Error::Parse(format!("bad range `{text}`"))),
    }
}

fn cmd_verify(range: &str, cfg: &Config) -> Result<i32, Error> {
    let (lo, hi) = parse_range(range)?;
    let report = verify_theorem(lo, hi, cfg.budget())?;
    match cfg.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
        _ => {
            for row in &report.rows {
                let verdict = if row.bijective {
                    "bijective".to_string()
                } else if !row.unresolved.is_empty() {
                    format!("unresolved: {:?}", row.unresolved)
                } else {
                    format!("undetermined (budget): {:?}", row.undetermined)
                };
                println!("n = {:>2}: {:>5} classes, {verdict}", row.n, row.class_count);
            }
            println!("expected picture reproduced: {}", report.as_expected);
            for p in &report.problems {
                println!("  problem: {p}");
            }
        }
    }
    Ok(if report.as_expected { 0 } else { 1 })
}

fn cmd_doublecosets(n: usize, partition: &str, full: bool, cfg: &Config) -> Result<i32, Error> {
    let t = parse_partition(partition)?;
    if t.parts().iter().sum::<usize>() != n {
        return Err(Error::Parse(format!("partition {t} does not sum to {n}")));
    }
    let alt = dc_alt_invariant(n, &t, cfg.budget())?;
    match cfg.format {
        Format::Json => {
            let mut obj = json!({
                "n": n,
                "shape": t.to_string(),
                "dc_alt": alt.to_string(),
            });
            if full {
                let f = dc_full_diagnostic(n, &t, cfg.budget())?;
                obj["dc_full"] = json!(f.to_string());
                obj["dc_full_note"] = json!("diagnostic: not a proven invariant");
            }
            println!("{}", serde_json::to_string_pretty(&obj).unwrap());
        }
        _ => {
            println!(
                "|K_alt \\ S_{n} / K| for K = C(shape {t}): {}",
                group_thousands(&alt.to_string())
            );
            if full {
                let f = dc_full_diagnostic(n, &t, cfg.budget())?;
                println!(
                    "|K \\ S_{n} / K| (diagnostic, not a proven invariant): {}",
                    group_thousands(&f.to_string())
                );
            }
        }
    }
    Ok(0)
}

fn load_quandle(path: &str) -> Result<FiniteQuandle, Error> {
    let text = fs::read_to_string(path)?;
    let q = if text.trim_start().starts_with('{') {
        let f: QuandleFile =
            serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
        f.quandle()
    } else {
        FiniteQuandle::from_plain_text(&text)?
    };
    q.check_axioms()
        .map_err(|v| Error::Parse(format!("{path}: not a quandle table: {v:?}")))?;
    Ok(q)
}

fn cmd_iso(file_a: &str, file_b: &str, witness: bool, cfg: &Config) -> Result<i32, Error> {
    let qa = load_quandle(file_a)?;
    let qb = load_quandle(file_b)?;
    let res = are_isomorphic(&qa, &qb, cfg.iso_cap())?;
    match cfg.format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "isomorphic": res.isomorphic,
                    "witness": res.witness,
                }))
                .unwrap()
            );
        }
        _ => {
            println!("{}", if res.isomorphic { "isomorphic" } else { "not isomorphic" });
            if witness {
                if let Some(w) = &res.witness {
                    let items: Vec<String> = w.iter().map(|v| v.to_string()).collect();
                    println!("witness: [{}]", items.join(" "));
                }
            }
        }
    }
    Ok(if res.isomorphic { 0 } else { 1 })
}

fn cmd_alexander(n: u64, cfg: &Config) -> Result<i32, Error> {
    let classes = classify_cyclic(n)?;
    match cfg.format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({"n": n, "classes": classes})).unwrap()
            );
        }
        _ => {
            println!("Q(C_{n}) isomorphism classes of unit multipliers:");
            for c in &classes {
                let items: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                println!("  {{{}}}", items.join(", "));
            }
            if n == 9 {
                println!(
                    "note: 4 and 7 merge ({}), though they are distinct Aut(C_9)-classes",
                    if nelson_equivalent(9, 4, 7)? {
                        "N(9,4) = N(9,7) = 3 and 4 ≡ 7 mod 3"
                    } else {
                        unreachable!()
                    }
                );
            }
        }
    }
    Ok(0)
}

fn cmd_s6_report(cfg: &Config) -> Result<i32, Error> {
    let classes = aut_s6_conjugacy_classes();
    let g0 = SemiDirectGroup::build(6, &eta(0))?;
    let g1 = SemiDirectGroup::build(6, &eta(1))?;
    let s0 = g0.centralizer_size_spectrum();
    let s1 = g1.centralizer_size_spectrum();
    let separated = s0 != s1;

    // seeded spot check of the closed-form conjugation against b·a·b⁻¹
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(cfg.seed);
    let all: Vec<_> = g0.iter_elements().collect();
    for _ in 0..1000 {
        let a = all[rng.gen_range(0..all.len())];
        let b = all[rng.gen_range(0..all.len())];
        let direct = g0.multiply(g0.multiply(b, a), g0.inverse(b));
        assert_eq!(g0.conjugate_sd(a, b), direct);
    }

    match cfg.format {
        Format::Json => {
            let obj = json!({
                "aut_order": 1440,
                "classes": classes
                    .iter()
                    .map(|(l, sz)| json!({"label": l.to_string(), "size": sz}))
                    .collect::<Vec<_>>(),
                "xi_order": xi().order(),
                "eta": ([0u8, 1])
                    .iter()
                    .map(|&k| json!({
                        "k": k,
                        "order": eta(k).order(),
                        "fix_size": eta(k).fix_subgroup().len(),
                    }))
                    .collect::<Vec<_>>(),
                "spectrum_phi0": s0.iter().map(|(k, v)| (k.to_string(), v)).collect::<std::collections::BTreeMap<_,_>>(),
                "spectrum_phi1": s1.iter().map(|(k, v)| (k.to_string(), v)).collect::<std::collections::BTreeMap<_,_>>(),
                "outer_42_separated": separated,
            });
            println!("{}", serde_json::to_string_pretty(&obj).unwrap());
        }
        _ => {
            println!("|Aut(S_6)| = 1440, {} conjugacy classes:", classes.len());
            for (l, sz) in &classes {
                println!("  {l:<20} size {sz}");
            }
            println!("ord(xi) = {}", xi().order());
            for k in 0..2u8 {
                println!(
                    "eta{k}: order {}, fix subgroup of size {}",
                    eta(k).order(),
                    eta(k).fix_subgroup().len()
                );
            }
            let fmt_spec = |s: &std::collections::BTreeMap<u64, u64>| {
                s.iter()
                    .map(|(k, v)| format!("{k}^{v}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            println!("centralizer spectrum of A6⋊C8 (phi0): {}", fmt_spec(&s0));
            println!("centralizer spectrum of A6⋊C8 (phi1): {}", fmt_spec(&s1));
            println!(
                "outer (4,2) classes separated by spectrum: {} (40 in phi0: {}, in phi1: {})",
                separated,
                s0.contains_key(&40),
                s1.contains_key(&40)
            );
        }
    }
    Ok(if separated { 0 } else { 1 })
}

fn cmd_quandle(
    n: usize,
    aut: &str,
    out: Option<&str>,
    check: bool,
    cfg: &Config,
) -> Result<i32, Error> {
    let psi = parse_automorphism(n, aut)?;
    let q = general_alexander(n, &psi, cfg.table_cap())?;
    if check {
        q.check_axioms()
            .map_err(|v| Error::Other(format!("axiom violation: {v:?}")))?;
        println!(
            "Q(S_{n}, {psi}): {} elements, ord {}, {} distinct symmetries",
            q.size(),
            q.order()?,
            q.distinct_symmetry_count()
        );
        return Ok(0);
    }
    let payload = match cfg.format {
        Format::Json => {
            serde_json::to_string_pretty(&QuandleFile::new(&q, Some(n), Some(aut.to_string())))
                .unwrap()
                + "\n"
        }
        _ => q.to_plain_text(),
    };
    match out {
        Some(path) => {
            let mut f = fs::File::create(path)?;
            f.write_all(payload.as_bytes())?;
            eprintln!("wrote {} elements to {path}", q.size());
        }
        None => print!("{payload}"),
    }
    Ok(0)
}
