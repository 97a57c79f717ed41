//! `discharger`: command-line front end for the discharging verifier.
//!
//! Exit codes: 0 = pass/success, 1 = FAIL or negative finding,
//! 2 = usage or input error. With `--json`, reports are byte-identical
//! across identical invocations.

use clap::{Parser, Subcommand, ValueEnum};
use discharge_core::configs::{self, ConfigId};
use discharge_core::discharge;
use discharge_core::embed::{classify_neighbor, generate_planar, EmbeddedGraph};
use discharge_core::listcolor::enumerate::{
    verify_even_cycle, verify_l2322, verify_star3, ChooseStatus, LemmaOutcome,
};
use discharge_core::reduce::{self, Tier};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "discharger", version, about = "Planar discharging verifier")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TierArg {
    Exhaustive,
    Sampled,
    Both,
}

#[derive(Subcommand)]
enum Cmd {
    /// Trace and print the faces of an embedded graph.
    Faces { file: String },
    /// Classify the edge (u, v): weak / semi-weak / other, plus any
    /// E/S class of v as a neighbor of u.
    Classify { file: String, u: u32, v: u32 },
    /// Find configuration matches in a graph.
    Match {
        file: String,
        /// Restrict to one configuration (C1..C11).
        #[arg(long)]
        config: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run the charge audit.
    Discharge {
        file: String,
        /// Also print the transfer log.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Verify one of the list-coloring lemmas.
    VerifyLemma {
        /// evencycle | l2322 | star3
        lemma: String,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check reducibility of one configuration's gadgets.
    VerifyConfig {
        config: String,
        /// Override the gadget's native tier.
        #[arg(long)]
        tier: Option<TierArg>,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Run every lemma and gadget check.
    RunAll {
        #[arg(long, value_enum, default_value_t = TierArg::Both)]
        tier: TierArg,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Generate a random planar graph.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(short, long)]
        output: Option<String>,
    },
}

fn load(path: &str) -> Result<EmbeddedGraph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    EmbeddedGraph::parse(&text).map_err(|e| format!("{path}: {e}"))
}

fn parse_config(s: &str) -> Result<ConfigId, String> {
    s.parse::<ConfigId>()
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Faces { file } => {
            let g = load(&file)?;
            for (i, f) in g.faces().iter().enumerate() {
                let walk: Vec<String> = f.vertices().map(|v| g.id(v).to_string()).collect();
                println!("f{i} (degree {}): {}", f.degree(), walk.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Classify { file, u, v } => {
            let g = load(&file)?;
            let ui = g.index_of(u).map_err(|e| e.to_string())?;
            let vi = g.index_of(v).map_err(|e| e.to_string())?;
            let cls = classify_neighbor(&g, ui, vi).map_err(|e| e.to_string())?;
            match cls.special {
                Some(s) => println!("{:?} {:?}", cls.base, s),
                None => println!("{:?}", cls.base),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Match { file, config, json } => {
            let g = load(&file)?;
            let matches = match config {
                Some(c) => {
                    configs::match_config(&g, parse_config(&c)?).map_err(|e| e.to_string())?
                }
                None => configs::match_all(&g).map_err(|e| e.to_string())?,
            };
            if json {
                let reports: Vec<_> = matches
                    .iter()
                    .map(|m| configs::report(&g, m).map_err(|e| e.to_string()))
                    .collect::<Result<_, _>>()?;
                println!("{}", serde_json::to_string(&reports).unwrap());
            } else {
                for m in &matches {
                    let b: Vec<String> =
                        m.binding.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    println!("{} {}", m.config, b.join(" "));
                }
                println!("{} match(es)", matches.len());
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Discharge { file, trace, json } => {
            let g = load(&file)?;
            if trace {
                let ledger = discharge::apply_rules(
                    &g,
                    discharge::initial_charges(&g).map_err(|e| e.to_string())?,
                )
                .map_err(|e| e.to_string())?;
                for t in &ledger.log {
                    println!(
                        "R{} {} -> {}: {} x{}",
                        t.rule, t.from, t.to, t.amount, t.multiplicity
                    );
                }
            }
            let report = discharge::audit(&g).map_err(|e| e.to_string())?;
            if json {
                println!("{}", serde_json::to_string(&report).unwrap());
            } else {
                println!("initial total: {}", report.initial_total);
                println!("final total:   {}", report.final_total);
                println!("negative elements: {}", report.negatives.len());
                for n in &report.negatives {
                    println!("  {} {}", n.element, n.charge);
                }
                for (c, k) in &report.configs_found {
                    println!("{c}: {k}");
                }
            }
            if report.contradiction_flag {
                eprintln!("contradiction: edge, max degree <= 8, but no configuration found");
                return Ok(ExitCode::FAILURE);
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::VerifyLemma {
            lemma,
            max_len,
            json,
        } => {
            let outcome: LemmaOutcome = match lemma.as_str() {
                "evencycle" => verify_even_cycle(max_len),
                "l2322" => verify_l2322(),
                "star3" => verify_star3(),
                other => return Err(format!("unknown lemma `{other}`")),
            };
            if json {
                println!("{}", serde_json::to_string(&outcome).unwrap());
            } else {
                for d in &outcome.detail {
                    println!("{d}");
                }
                println!("{}: {}", lemma, if outcome.pass { "PASS" } else { "FAIL" });
            }
            Ok(if outcome.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Cmd::VerifyConfig {
            config,
            tier,
            samples,
            seed,
            json,
        } => {
            let id = parse_config(&config)?;
            let gadgets: Vec<_> = reduce::catalog()
                .into_iter()
                .filter(|g| g.config == id)
                .collect();
            if gadgets.is_empty() {
                return Err(format!("no gadgets for {config}"));
            }
            let mut verdicts = Vec::new();
            for g in &gadgets {
                let effective = match tier {
                    Some(TierArg::Exhaustive) => Tier::Exhaustive,
                    Some(TierArg::Sampled) => Tier::Sampled,
                    _ => g.tier,
                };
                verdicts.push(match effective {
                    Tier::Exhaustive => reduce::check_reducible_exhaustive(g),
                    Tier::Sampled => reduce::check_reducible_sampled(g, samples, seed),
                });
            }
            emit_verdicts(&verdicts, json)
        }
        Cmd::RunAll {
            tier,
            samples,
            seed,
            json,
        } => {
            let t = match tier {
                TierArg::Exhaustive => Some(Tier::Exhaustive),
                TierArg::Sampled => Some(Tier::Sampled),
                TierArg::Both => None,
            };
            let report = reduce::run_all(t, samples, seed);
            if json {
                println!("{}", serde_json::to_string(&report).unwrap());
            } else {
                for v in &report.claims {
                    print_verdict(v);
                }
                println!("overall: {}", if report.pass { "PASS" } else { "FAIL" });
            }
            Ok(if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Cmd::Gen {
            n,
            max_degree,
            seed,
            output,
        } => {
            let g = generate_planar(seed, n, max_degree).map_err(|e| e.to_string())?;
            let text = g.serialize();
            match output {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| format!("{path}: {e}"))?
                }
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_verdict(v: &reduce::Verdict) {
    let name = if v.variant.is_empty() {
        v.claim.clone()
    } else {
        format!("{}-{}", v.claim, v.variant)
    };
    let status = match v.status {
        ChooseStatus::Pass => "PASS",
        ChooseStatus::Fail => "FAIL",
        ChooseStatus::Budget => "BUDGET",
    };
    let extra = match v.escaped {
        Some(e) if e > 0 => format!(" ({e} escaped)"),
        _ => String::new(),
    };
    println!("{name} [{}] {status} {} instances{extra}", v.tier, v.instances);
    if let Some(w) = &v.witness {
        println!("  witness: {w}");
    }
}

fn emit_verdicts(verdicts: &[reduce::Verdict], json: bool) -> Result<ExitCode, String> {
    if json {
        println!("{}", serde_json::to_string(&verdicts).unwrap());
    } else {
        for v in verdicts {
            print_verdict(v);
        }
    }
    if verdicts.iter().any(|v| v.status == ChooseStatus::Fail) {
        Ok(ExitCode::FAILURE)
    } else if verdicts.iter().any(|v| v.status == ChooseStatus::Budget) {
        Ok(ExitCode::from(2))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
