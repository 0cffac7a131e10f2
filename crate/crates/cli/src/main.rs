use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use weylinv::freeness::{
    verify_certificate, CertificateFile, CertificateHeader, FreenessSearch, FreenessStatus, PivotOrder, SearchConfig,
};
use weylinv::inversion::inversion_arrangement;
use weylinv::report::ElementReport;
use weylinv::smoothness::typea::{
    avoids_perm_pattern, contains_perm_pattern, element_of_perm, inversion_graph, is_chordal, perm_of, word_of,
};
use weylinv::smoothness::{patterns, theorem_audit, AuditOptions, Check};
use weylinv::weyl::{format_word, parse_word, WeylElement, WeylGroup};

mod tables;

/// Weyl group elements, their inversion arrangements, and rational smoothness.
///
/// Words are 1-based: `[2,3,2,1]`, `2,3,2,1` and `s2s3s2s1` all mean s2 s3 s2 s1.
/// Use `[]` or `e` for the identity.
#[derive(Parser)]
#[command(name = "weylinv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Lex,
    Height,
}

#[derive(clap::Args)]
struct SearchArgs {
    /// Pivot order for the inductive freeness search.
    #[arg(long, value_enum, default_value = "lex")]
    order: Order,
    /// Worker threads for the search.
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        let order = match self.order {
            Order::Lex => PivotOrder::Lex,
            Order::Height => PivotOrder::Height,
        };
        SearchConfig { order, threads: self.threads.max(1), ..SearchConfig::default() }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one element.
    Analyze {
        system: String,
        word: String,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Check the main theorems over every element of a group.
    Audit {
        system: String,
        /// Comma-separated subset of main, bp-modular, supersolvable, hlss, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Allow groups with more than 100000 elements.
        #[arg(long = "override")]
        override_guard: bool,
        /// Only test every n-th subset J in the bp-modular check.
        #[arg(long)]
        j_stride: Option<usize>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Recompute a reference table and compare with the expected values.
    Tables {
        which: u8,
        /// Include the E7 and E8 rows.
        #[arg(long)]
        long: bool,
    },
    /// Write an inductive freeness certificate for the inversion arrangement.
    Certify {
        system: String,
        word: String,
        out: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Check a certificate with the independent verifier.
    Verify { system: String, word: String, cert: PathBuf },
    /// Permutation utilities for type A.
    Patterns {
        #[command(subcommand)]
        command: PatternCommand,
    },
}

#[derive(Subcommand)]
enum PatternCommand {
    /// One-line notation, inversion graph and classical pattern tests for an element of A_n.
    Perm { system: String, word: String },
    /// Reduced word of a permutation given in one-line notation, e.g. `3412` or `3,4,1,2`.
    Word { perm: String },
    /// Whether a permutation contains a pattern.
    Contains { perm: String, pattern: String },
    /// List the rational smoothness patterns.
    List,
}

/// A failure with a specific exit status.
#[derive(Debug)]
struct Exit {
    code: u8,
    message: String,
}

impl fmt::Display for Exit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for Exit {}

const INPUT: u8 = 2;
const UNKNOWN_SYSTEM: u8 = 3;
const GUARD: u8 = 4;
const REJECT: u8 = 5;

fn fail(code: u8, message: impl Into<String>) -> anyhow::Error {
    Exit { code, message: message.into() }.into()
}

fn group(system: &str) -> Result<WeylGroup> {
    WeylGroup::from_label(system).map_err(|e| fail(UNKNOWN_SYSTEM, e.to_string()))
}

fn element(g: &WeylGroup, word: &str) -> Result<WeylElement> {
    let w = parse_word(word).ok_or_else(|| fail(INPUT, format!("cannot parse word `{word}`")))?;
    g.from_word(&w).map_err(|e| fail(INPUT, e.to_string()))
}

fn parse_perm(s: &str) -> Result<Vec<usize>> {
    let t = s.trim().trim_start_matches('[').trim_end_matches(']');
    let p: Option<Vec<usize>> = if t.contains(',') || t.contains(' ') {
        t.split(|c: char| c == ',' || c.is_whitespace()).filter(|x| !x.is_empty()).map(|x| x.parse().ok()).collect()
    } else {
        t.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
    };
    p.ok_or_else(|| fail(INPUT, format!("cannot parse permutation `{s}`")))
}

fn one_based(word: &[usize]) -> Vec<usize> {
    word.iter().map(|s| s + 1).collect()
}

fn opt_list(v: &Option<Vec<usize>>) -> String {
    v.as_ref().map_or("none".into(), |v| format!("{v:?}"))
}

fn print_report(r: &ElementReport) {
    println!("system: {}", r.system);
    println!("word: {:?}", r.word);
    println!("length: {}", r.length);
    println!("left descents: {:?}", r.left_descents);
    println!("right descents: {:?}", r.right_descents);
    println!("support: {:?}", r.support);
    println!("|[e,w]|: {}", r.interval_size);
    println!("P_w: {:?}", r.poincare);
    println!("rationally smooth: {}", r.palindromic);
    println!("exponents: {}", opt_list(&r.exponents));
    println!("HLSS: {} (nbc {})", r.hlss, r.nbc_count);
    println!("Q: {:?}", r.arrangement_poincare);
    println!("Q roots: {}", opt_list(&r.arrangement_factorization));
    println!("freeness: {}", r.freeness);
    println!("coexponents: {}", opt_list(&r.coexponents));
    println!("supersolvable: {}", r.supersolvable);
    match &r.chain_bp {
        None => println!("complete chain BP: none"),
        Some(steps) => {
            println!("complete chain BP: {} steps", steps.len());
            for s in steps {
                println!("  {} J={:?} u={:?} v={:?}", s.side, s.j, s.u, s.v);
            }
        }
    }
    println!("patterns: {:?}", r.patterns);
}

fn analyze(system: &str, word: &str, json: bool, search: &SearchArgs) -> Result<u8> {
    let g = group(system)?;
    let w = element(&g, word)?;
    let r = ElementReport::new(system, &g, &w, &FreenessSearch::new(search.config()));
    if json {
        println!("{}", r.to_canonical_json());
    } else {
        print_report(&r);
    }
    Ok(0)
}

fn audit(
    system: &str,
    checks: &str,
    override_guard: bool,
    j_stride: Option<usize>,
    json: bool,
    search: &SearchArgs,
) -> Result<u8> {
    let g = group(system)?;
    let checks: Vec<Check> = if checks == "all" {
        Check::ALL.to_vec()
    } else {
        checks
            .split(',')
            .map(|c| Check::from_name(c.trim()).ok_or_else(|| fail(INPUT, format!("unknown check `{c}`"))))
            .collect::<Result<_>>()?
    };
    let opts = AuditOptions { checks, override_guard, j_stride, search: SearchConfig::default() };
    let pool = rayon_pool(search.threads)?;
    let report = pool.install(|| theorem_audit(&g, &opts)).map_err(|e| match e {
        weylinv::Error::GuardExceeded { .. } => fail(GUARD, format!("{e}; pass --override to scan anyway")),
        other => fail(INPUT, other.to_string()),
    })?;
    if json {
        println!("{}", serde_json::to_value(&report).map(|v| v.to_string())?);
    } else {
        println!("{}: {} elements", report.system, report.elements);
        for c in &report.checks {
            println!("{}: {} checked, {} counterexamples", c.check.name(), c.checked, c.counterexamples.len());
            for x in c.counterexamples.iter().take(20) {
                println!("  {x}");
            }
        }
    }
    Ok(if report.total_counterexamples() == 0 { 0 } else { 1 })
}

fn rayon_pool(threads: usize) -> Result<rayon::ThreadPool> {
    Ok(rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build()?)
}

fn tables(which: u8, long: bool) -> Result<u8> {
    let (title, rows) = match which {
        1 => ("Exponents of w_kl", tables::table1(long)?),
        2 => ("Lengths of w_kl", tables::table2(long)?),
        3 => ("Patterns characterizing rational smoothness: Q(t), nbc, |[e,w]|", tables::table3()?),
        _ => return Err(fail(INPUT, format!("no table {which}; expected 1, 2 or 3"))),
    };
    println!("{title}");
    let mut ok = true;
    for r in rows {
        let status = match r.pass {
            Some(true) => "PASS",
            Some(false) => {
                ok = false;
                "FAIL"
            }
            None => "SKIP",
        };
        println!("{status} {}: computed {} | expected {}", r.label, r.computed, r.expected);
    }
    Ok(if ok { 0 } else { 1 })
}

fn certify(system: &str, word: &str, out: &PathBuf, search: &SearchArgs) -> Result<u8> {
    let g = group(system)?;
    let w = element(&g, word)?;
    let a = inversion_arrangement(&g, &w);
    let r = FreenessSearch::new(search.config()).run(&a);
    match r.status {
        FreenessStatus::Free { coexponents, certificate } => {
            let file = CertificateFile {
                header: CertificateHeader {
                    system: system.to_string(),
                    word: one_based(&g.reduced_word(&w)),
                    arrangement: a,
                },
                certificate,
            };
            std::fs::write(out, file.to_json()).with_context(|| format!("writing {}", out.display()))?;
            println!("inductively free, coexponents {coexponents:?}");
            Ok(0)
        }
        FreenessStatus::NotInductivelyFree => {
            println!("not inductively free; no certificate written");
            Ok(1)
        }
        FreenessStatus::Undetermined => Err(fail(GUARD, "memo budget exhausted; raise WEYLINV_MEMO_CAP")),
    }
}

fn verify(system: &str, word: &str, cert: &PathBuf) -> Result<u8> {
    let g = group(system)?;
    let w = element(&g, word)?;
    let text = std::fs::read_to_string(cert).map_err(|e| fail(INPUT, format!("reading {}: {e}", cert.display())))?;
    let file = CertificateFile::from_json(&text).map_err(|e| fail(INPUT, e.to_string()))?;
    let h = &file.header;
    let header_w = parse_word(&format!("{:?}", h.word))
        .and_then(|wd| g.from_word(&wd).ok())
        .filter(|_| h.system == system);
    if header_w.as_ref() != Some(&w) {
        return Err(fail(REJECT, format!("certificate is for {} {:?}, not {system} {word}", h.system, h.word)));
    }
    if h.arrangement != inversion_arrangement(&g, &w) {
        return Err(fail(REJECT, "header arrangement is not the inversion arrangement of the element"));
    }
    match verify_certificate(&h.arrangement, &file.certificate) {
        Ok(exps) => {
            println!("accepted, coexponents {exps:?}");
            Ok(0)
        }
        Err(r) => Err(fail(REJECT, r.to_string())),
    }
}

fn patterns_cmd(cmd: &PatternCommand) -> Result<u8> {
    match cmd {
        PatternCommand::Perm { system, word } => {
            let g = group(system)?;
            let w = element(&g, word)?;
            let p = perm_of(&g, &w).map_err(|e| fail(INPUT, e.to_string()))?;
            let gr = inversion_graph(&g, &w)?;
            let edges: Vec<String> = gr.edges().iter().map(|(a, b)| format!("{}-{}", a + 1, b + 1)).collect();
            println!("one-line: {}", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
            println!("inversion graph: {}", edges.join(" "));
            println!("chordal: {}", is_chordal(&gr));
            for pat in [&[3, 4, 1, 2][..], &[4, 2, 3, 1], &[3, 5, 1, 4, 2], &[4, 2, 5, 1, 3], &[3, 5, 1, 6, 2, 4]] {
                let name: String = pat.iter().map(|x| x.to_string()).collect();
                println!("avoids {name}: {}", avoids_perm_pattern(&p, pat));
            }
        }
        PatternCommand::Word { perm } => {
            let p = parse_perm(perm)?;
            let word = word_of(&p).map_err(|e| fail(INPUT, e.to_string()))?;
            let g = group(&format!("A{}", p.len().saturating_sub(1).max(1)))?;
            if p.len() > 1 {
                element_of_perm(&g, &p)?;
            }
            println!("{}", format_word(&word));
        }
        PatternCommand::Contains { perm, pattern } => {
            let p = parse_perm(perm)?;
            let q = parse_perm(pattern)?;
            println!("{}", contains_perm_pattern(&p, &q));
        }
        PatternCommand::List => {
            for p in patterns() {
                println!(
                    "{} [{}] {}",
                    p.id,
                    p.systems.join("/"),
                    format_word(&p.word.iter().map(|s| s - 1).collect::<Vec<_>>())
                );
            }
        }
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<u8> {
    match &cli.command {
        Command::Analyze { system, word, json, search } => analyze(system, word, *json, search),
        Command::Audit { system, checks, override_guard, j_stride, json, search } => {
            audit(system, checks, *override_guard, *j_stride, *json, search)
        }
        Command::Tables { which, long } => tables(*which, *long),
        Command::Certify { system, word, out, search } => certify(system, word, out, search),
        Command::Verify { system, word, cert } => verify(system, word, cert),
        Command::Patterns { command } => patterns_cmd(command),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let code = e.downcast_ref::<Exit>().map_or(INPUT, |x| x.code);
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}
