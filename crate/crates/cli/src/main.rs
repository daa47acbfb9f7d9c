use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use herm4::classifier::{exhaustive_classify, random_search, ClassifyOptions, Reduction, SearchOutcome};
use herm4::constructions::{load_codes, NamedCode};
use herm4::equivalence::{are_equivalent_with, Equivalence, EquivalenceBudget, EquivalenceKind};
use herm4::gleason::{check_bound, solve_possible_enumerator};
use herm4::quantum::{is_trace_self_dual, quantum_from_self_dual};
use herm4::reproduce::{reproduce, verify_code, ReproduceOptions, RunReport};
use herm4::tables;
use herm4::weight::{count_words, min_weight};
use herm4::{EnumerationBudget, Gf4};

#[derive(Parser)]
#[command(name = "herm4", version, about = "Quaternary Hermitian self-dual codes from modified four circulant matrices")]
struct Cli {
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Time budget in seconds for each enumeration.
    #[arg(long, global = true, env = "HERM4_BUDGET_SECONDS", default_value_t = 3600.0)]
    budget: f64,
    /// Also write a JSON report to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check self-duality and minimum weight of every code in a file.
    Verify {
        #[arg(long)]
        code: PathBuf,
    },
    /// Minimum weight of every code in a file.
    Minweight {
        #[arg(long)]
        code: PathBuf,
    },
    /// Count codewords of the given weights.
    CountWords {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<usize>,
    },
    /// Test the first two codes of a file for equivalence.
    Equiv {
        #[arg(long)]
        code: PathBuf,
        /// Also allow conjugation of coordinates.
        #[arg(long)]
        semilinear: bool,
    },
    /// Exhaustive classification for one block size and mu.
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        dmin: usize,
        #[arg(long, value_enum, default_value_t = ReductionArg::Orbits)]
        reduction: ReductionArg,
    },
    /// Seeded random search.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        dmin: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        trials: u64,
    },
    /// Possible weight enumerator as CSV.
    Gleason {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_delimiter = ',')]
        params: Vec<String>,
    },
    /// Quantum code parameters of each self-dual code in a file.
    Quantum {
        #[arg(long)]
        code: PathBuf,
    },
    /// Recheck a reference table or claim group.
    Reproduce {
        /// Table id (T2, T3, T4, T5, T32-1, T32-2, T32-3, T9) or claim group
        /// (classes, equiv, counts, gleason, quantum, constructions).
        target: String,
        /// Include jobs that take hours.
        #[arg(long)]
        long: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReductionArg {
    Orbits,
    LeadingOne,
}

fn read_codes(path: &Path) -> Result<Vec<NamedCode>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let codes = load_codes(&text).with_context(|| format!("parsing {}", path.display()))?;
    if codes.is_empty() {
        bail!("{} contains no codes", path.display());
    }
    Ok(codes)
}

fn write_json(path: &Option<PathBuf>, json: &str) -> Result<()> {
    if let Some(p) = path {
        std::fs::write(p, json).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(())
}

fn finish_report(report: &RunReport, json: &Option<PathBuf>) -> Result<ExitCode> {
    print!("{}", report.to_text());
    write_json(json, &report.to_json())?;
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn print_outcome(o: &SearchOutcome, json: &Option<PathBuf>) -> Result<()> {
    for (stage, count) in &o.log {
        println!("{stage}: {count}");
    }
    for r in &o.representatives {
        println!("representative {r}");
    }
    println!(
        "classes={} undecided={} max d found={} ({:.1} s)",
        o.class_count,
        o.undecided_pairs,
        o.max_weight_found.map_or("none".to_string(), |d| d.to_string()),
        o.elapsed_seconds
    );
    write_json(json, &o.to_json())
}

/// Printed claims for a code that appears in a reference table.
fn printed_claims(named: &NamedCode) -> (Option<usize>, BTreeMap<usize, u64>) {
    let found = tables::table_entries().iter().find(|e| {
        named.construction.as_ref().map(|c| c.to_record()) == Some(e.construction.to_record())
            || e.code_name == named.name
    });
    match found {
        Some(e) if e.construction.code() == named.code => (Some(e.d), e.counts.clone()),
        _ => (None, BTreeMap::new()),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global()?;
    }
    let budget = EnumerationBudget::new(cli.budget, usize::MAX)?;
    let equivalence = EquivalenceBudget {
        enumeration: budget,
        ..EquivalenceBudget::default()
    };
    let classify_opts = ClassifyOptions {
        enumeration: budget,
        equivalence,
        ..ClassifyOptions::default()
    };
    match cli.command {
        Command::Verify { code } => {
            let opts = ReproduceOptions {
                budget,
                equivalence,
                long: true,
            };
            let mut report = RunReport::new(format!("verify --code {}", code.display()));
            let t = std::time::Instant::now();
            for named in read_codes(&code)? {
                let (d, counts) = printed_claims(&named);
                report.claims.extend(verify_code(&named.name, &named.code, d, &counts, &opts));
                if d.is_none() {
                    let r = min_weight(&named.code, &budget)?;
                    println!("{}: d={:?} certified={}", named.name, r.d, r.certified);
                }
            }
            report.elapsed_seconds = t.elapsed().as_secs_f64();
            finish_report(&report, &cli.json)
        }
        Command::Minweight { code } => {
            let mut reports = Vec::new();
            for named in read_codes(&code)? {
                let r = min_weight(&named.code, &budget)?;
                println!(
                    "{}: [{}, {}] d={} certified={} lower bound={} ({:.2} s)",
                    named.name,
                    r.n,
                    r.k,
                    r.d.map_or("?".to_string(), |d| d.to_string()),
                    r.certified,
                    r.lower_bound,
                    r.elapsed_seconds
                );
                reports.push(serde_json::json!({ "name": named.name, "report": r }));
            }
            write_json(&cli.json, &serde_json::to_string_pretty(&reports)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::CountWords { code, weights } => {
            let mut all = Vec::new();
            for named in read_codes(&code)? {
                let counts = count_words(&named.code, &weights, &budget)?;
                for (w, a) in &counts {
                    println!("{} A{w}={a}", named.name);
                }
                all.push(serde_json::json!({ "name": named.name, "counts": counts }));
            }
            write_json(&cli.json, &serde_json::to_string_pretty(&all)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Equiv { code, semilinear } => {
            let codes = read_codes(&code)?;
            let [a, b, ..] = &codes[..] else {
                bail!("{} must contain two codes", code.display());
            };
            let kind = if semilinear { EquivalenceKind::Semilinear } else { EquivalenceKind::Monomial };
            let verdict = are_equivalent_with(&a.code, &b.code, kind, &equivalence);
            let json = match &verdict {
                Equivalence::Equivalent { map, conjugate } => {
                    println!("equivalent: {map}{}", if *conjugate { " after conjugation" } else { "" });
                    serde_json::json!({ "verdict": "equivalent", "map": map.to_string(), "conjugate": conjugate })
                }
                Equivalence::Inequivalent => {
                    println!("inequivalent");
                    serde_json::json!({ "verdict": "inequivalent" })
                }
                Equivalence::Undecided => {
                    println!("undecided within budget");
                    serde_json::json!({ "verdict": "undecided" })
                }
            };
            write_json(&cli.json, &serde_json::to_string_pretty(&json)?)?;
            Ok(if verdict == Equivalence::Undecided { ExitCode::FAILURE } else { ExitCode::SUCCESS })
        }
        Command::Classify { n, mu, dmin, reduction } => {
            let opts = ClassifyOptions {
                reduction: match reduction {
                    ReductionArg::Orbits => Reduction::Orbits,
                    ReductionArg::LeadingOne => Reduction::LeadingOne,
                },
                ..classify_opts
            };
            let o = exhaustive_classify(n, Gf4::parse_mu(&mu)?, dmin, &opts)?;
            print_outcome(&o, &cli.json)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Search { n, mu, dmin, seed, trials } => {
            let o = random_search(n, Gf4::parse_mu(&mu)?, dmin, seed, trials, &classify_opts)?;
            println!("seed={seed} trials={trials}");
            print_outcome(&o, &cli.json)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gleason { n, d, params } => {
            let sol = solve_possible_enumerator(n, d, &params)?;
            print!("{}", sol.to_csv());
            eprintln!("bound check: {:?}", check_bound(n, d)?);
            let rows: Vec<_> = sol
                .nonzero_rows()
                .map(|(w, p)| serde_json::json!({ "weight": w, "value": p.display(&sol.params).to_string() }))
                .collect();
            write_json(&cli.json, &serde_json::to_string_pretty(&rows)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Quantum { code } => {
            let mut all = Vec::new();
            for named in read_codes(&code)? {
                let r = min_weight(&named.code, &budget)?;
                let q = quantum_from_self_dual(&named.code, &r, &named.name)?;
                println!(
                    "{}: {q} (additive self-dual: {})",
                    named.name,
                    is_trace_self_dual(&named.code)
                );
                all.push(q);
            }
            write_json(&cli.json, &serde_json::to_string_pretty(&all)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Reproduce { target, long } => {
            let opts = ReproduceOptions {
                budget,
                equivalence,
                long,
            };
            let report = reproduce(&target, &opts)?;
            finish_report(&report, &cli.json)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
