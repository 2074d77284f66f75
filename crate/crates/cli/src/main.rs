//! `sl2`: command-line front end for `sl2-branching`.
//!
//! Exit codes: 0 success, 1 a mathematical violation was found, 2 usage error.

mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sl2_branching::branching::{
    self, principal_character, principal_character_oracle, random_semigroup_cases,
    semigroup_violations, DEFAULT_ORACLE_BUDGET,
};
use sl2_branching::embeddings::{
    all_embeddings, embedding_character, embedding_character_oracle, verify_bound_embedding_with,
};
use sl2_branching::partitions::partitions_up_to;
use sl2_branching::sl2::{
    decompose, ext_power_character, lowest_type_closed_form, lowest_type_table,
    sym_power_character,
};
use sl2_branching::{EmbeddingSpec, Execution, LaurentPoly, Partition};

use render::{Format, Summary};

#[derive(Parser)]
#[command(name = "sl2", version, about = "Exact sl(2)-decompositions of sl(n)-representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose S^a(F_d) or Λ^a(F_d) into sl(2)-irreducibles.
    Decompose {
        kind: PowerKind,
        a: u32,
        d: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Include the character polynomial (json only).
        #[arg(long)]
        character: bool,
    },
    /// Print the table of lowest types ℓ(m,d).
    Table {
        #[arg(long, default_value_t = 15)]
        max_m: u32,
        #[arg(long, default_value_t = 15)]
        max_d: u32,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Restrict L(λ) to the principal or a composition-defined sl(2).
    Restrict {
        #[command(flatten)]
        target: RestrictTarget,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        character: bool,
    },
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PowerKind {
    Sym,
    Ext,
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "embedding")]
struct Embedding {
    /// Rank of sl(n); selects the principal sl(2).
    #[arg(long)]
    n: Option<usize>,
    /// Block sizes of a general embedding, e.g. 3,2,1.
    #[arg(long)]
    composition: Option<EmbeddingSpec>,
}

#[derive(Args)]
struct RestrictTarget {
    /// Highest weight as comma-separated parts, e.g. 2,1.
    #[arg(long)]
    lambda: Partition,
    #[command(flatten)]
    embedding: Embedding,
}

#[derive(Subcommand)]
enum Suite {
    /// Exhaustive min_dim search over partitions with few boxes.
    Bound {
        #[command(flatten)]
        embedding: Embedding,
        #[arg(long, default_value_t = 8)]
        max_boxes: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// S^m(F_d) = S^d(F_m) for all m, d ≤ max.
    Hermite {
        #[arg(long, default_value_t = 20)]
        max: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Closed-form ℓ(m,d) against direct computation for m, d ≤ max.
    ClosedForm {
        #[arg(long, default_value_t = 40)]
        max: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Branching semigroup property on random pairs.
    Semigroup {
        #[arg(long, default_value_t = 500)]
        pairs: usize,
        #[arg(long, default_value_t = 6)]
        max_size: u32,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Fast characters against tableau enumeration.
    Oracle {
        #[arg(long, default_value_t = 6)]
        max_boxes: u32,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

/// Failure modes that map onto exit codes.
enum Failure {
    Usage(String),
    Violation(String),
}

impl From<sl2_branching::Error> for Failure {
    fn from(e: sl2_branching::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<String, Failure>;

fn env_number<T: std::str::FromStr>(name: &str) -> Result<Option<T>, Failure> {
    match std::env::var(name) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("{name} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn oracle_budget() -> Result<u64, Failure> {
    Ok(env_number("ORACLE_BUDGET")?.unwrap_or(DEFAULT_ORACLE_BUDGET))
}

fn character_json(ch: &LaurentPoly) -> Value {
    serde_json::to_value(ch).expect("serializable")
}

fn run_decompose(kind: PowerKind, a: u32, d: u32, format: Format, with_char: bool) -> CmdResult {
    let (ch, label) = match kind {
        PowerKind::Sym => (sym_power_character(a, d), format!("S^{a}(F_{d})")),
        PowerKind::Ext => (ext_power_character(a, d), format!("Λ^{a}(F_{d})")),
    };
    let dec = decompose(&ch)?;
    let mut value = dec.to_json();
    if with_char {
        value["character"] = character_json(&ch);
    }
    Ok(render::decomposition(&label, &dec, value, None, format))
}

fn run_table(max_m: u32, max_d: u32, format: Format) -> CmdResult {
    let table = lowest_type_table(max_m, max_d, Execution::Parallel);
    Ok(render::table(&table, format))
}

fn run_restrict(target: RestrictTarget, format: Format, with_char: bool) -> CmdResult {
    let lambda = target.lambda;
    let (ch, label, mut value) = match (target.embedding.n, target.embedding.composition) {
        (Some(n), None) => (
            principal_character(&lambda, n)?,
            format!("Res L({lambda}) to principal sl(2) in sl({n})"),
            json!({ "lambda": lambda.to_string(), "n": n }),
        ),
        (None, Some(spec)) => (
            embedding_character(&lambda, &spec)?,
            format!("Res L({lambda}) along composition {spec}"),
            json!({ "lambda": lambda.to_string(), "composition": spec.to_string() }),
        ),
        _ => unreachable!("clap enforces exactly one of --n / --composition"),
    };
    let dec = decompose(&ch)?;
    let min_dim = dec.min_dim();
    for (k, v) in dec.to_json().as_object().expect("object") {
        value[k] = v.clone();
    }
    value["min_dim"] = json!(min_dim);
    if with_char {
        value["character"] = character_json(&ch);
    }
    Ok(render::decomposition(&label, &dec, value, min_dim, format))
}

fn finish(summary: Summary, format: Format) -> CmdResult {
    let text = render::summary(&summary, format);
    if summary.violations.is_empty() {
        Ok(text)
    } else {
        Err(Failure::Violation(text))
    }
}

fn run_verify(suite: Suite) -> CmdResult {
    match suite {
        Suite::Bound {
            embedding,
            max_boxes,
            format,
        } => {
            let report = match (embedding.n, embedding.composition) {
                (Some(n), None) => branching::verify_bound_with(n, max_boxes, Execution::Parallel)?,
                (None, Some(spec)) => {
                    verify_bound_embedding_with(&spec, max_boxes, Execution::Parallel)?
                }
                _ => unreachable!("clap enforces exactly one of --n / --composition"),
            };
            let violations = report.violations.iter().map(|p| format!("({p})")).collect();
            finish(
                Summary {
                    target: "bound",
                    checked: report.checked,
                    violations,
                    json: report.to_json(),
                },
                format,
            )
        }
        Suite::Hermite { max, format } => {
            let mut pairs = Vec::new();
            for m in 0..=max {
                for d in m..=max {
                    pairs.push((m, d));
                }
            }
            let bad: Vec<(u32, u32)> = pairs
                .iter()
                .copied()
                .filter(|&(m, d)| !sl2_branching::sl2::hermite_check(m, d))
                .collect();
            finish(
                Summary {
                    target: "hermite",
                    checked: pairs.len(),
                    violations: bad.iter().map(|(m, d)| format!("({m},{d})")).collect(),
                    json: json!({
                        "target": "hermite",
                        "max": max,
                        "checked": pairs.len(),
                        "violations": bad,
                    }),
                },
                format,
            )
        }
        Suite::ClosedForm { max, format } => {
            let table = lowest_type_table(max, max, Execution::Parallel);
            let mut bad = Vec::new();
            for (m, row) in table.iter().enumerate() {
                for (d, &direct) in row.iter().enumerate() {
                    let closed = lowest_type_closed_form(m as u32, d as u32);
                    if closed != direct {
                        bad.push(json!({ "m": m, "d": d, "direct": direct, "closed": closed }));
                    }
                }
            }
            let checked = ((max + 1) * (max + 1)) as usize;
            finish(
                Summary {
                    target: "closed-form",
                    checked,
                    violations: bad.iter().map(Value::to_string).collect(),
                    json: json!({
                        "target": "closed-form",
                        "max": max,
                        "checked": checked,
                        "violations": bad,
                    }),
                },
                format,
            )
        }
        Suite::Semigroup {
            pairs,
            max_size,
            max_n,
            seed,
            format,
        } => {
            if max_n < 2 {
                return Err(Failure::Usage("--max-n must be at least 2".into()));
            }
            let cases = random_semigroup_cases(pairs, max_size, max_n, seed);
            let bad = semigroup_violations(&cases, Execution::Parallel)?;
            let bad_json: Vec<Value> = bad
                .iter()
                .map(|c| {
                    json!({
                        "lambda1": c.lambda1.to_string(),
                        "lambda2": c.lambda2.to_string(),
                        "n": c.n,
                    })
                })
                .collect();
            finish(
                Summary {
                    target: "semigroup",
                    checked: cases.len(),
                    violations: bad_json.iter().map(Value::to_string).collect(),
                    json: json!({
                        "target": "semigroup",
                        "seed": seed,
                        "checked": cases.len(),
                        "violations": bad_json,
                    }),
                },
                format,
            )
        }
        Suite::Oracle {
            max_boxes,
            max_n,
            format,
        } => {
            let budget = oracle_budget()?;
            let mut checked = 0;
            let mut bad = Vec::new();
            for n in 2..=max_n {
                for lambda in partitions_up_to(max_boxes, n) {
                    checked += 1;
                    if principal_character(&lambda, n)?
                        != principal_character_oracle(&lambda, n, budget)?
                    {
                        bad.push(json!({ "lambda": lambda.to_string(), "n": n }));
                    }
                }
            }
            for n in 1..=max_n {
                for spec in all_embeddings(n) {
                    for lambda in partitions_up_to(max_boxes, n) {
                        checked += 1;
                        if embedding_character(&lambda, &spec)?
                            != embedding_character_oracle(&lambda, &spec, budget)?
                        {
                            bad.push(json!({
                                "lambda": lambda.to_string(),
                                "composition": spec.to_string(),
                            }));
                        }
                    }
                }
            }
            finish(
                Summary {
                    target: "oracle",
                    checked,
                    violations: bad.iter().map(Value::to_string).collect(),
                    json: json!({
                        "target": "oracle",
                        "max_boxes": max_boxes,
                        "max_n": max_n,
                        "checked": checked,
                        "violations": bad,
                    }),
                },
                format,
            )
        }
    }
}

fn run(cli: Cli) -> CmdResult {
    if let Some(workers) = env_number::<usize>("WORKERS")? {
        if workers == 0 {
            return Err(Failure::Usage("WORKERS must be at least 1".into()));
        }
        sl2_branching::par::init_workers(workers);
    }
    match cli.command {
        Command::Decompose {
            kind,
            a,
            d,
            format,
            character,
        } => run_decompose(kind, a, d, format, character),
        Command::Table {
            max_m,
            max_d,
            format,
        } => run_table(max_m, max_d, format),
        Command::Restrict {
            target,
            format,
            character,
        } => run_restrict(target, format, character),
        Command::Verify { suite } => run_verify(suite),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Violation(text)) => {
            print!("{text}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
