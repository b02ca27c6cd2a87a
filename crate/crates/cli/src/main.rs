use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rta_core::classify::{classify_arity, maximal_class_options, three_transitive_witness, StepKind};
use rta_core::closure::{slice_order, windowed_closure};
use rta_core::config::{DEFAULT_DEGREE_CAP, DEGREE_CAP_ENV};
use rta_core::{verify, ClosureMode, Config, Error, Gate, GateSet};

#[derive(Parser)]
#[command(name = "rta", version, about = "Exact computations on reversible gate classes")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest slice size k^n that may be built.
    #[arg(long, env = DEGREE_CAP_ENV, default_value_t = DEFAULT_DEGREE_CAP, global = true)]
    degree_cap: usize,
    /// Seed for randomized group computations and sampled checks.
    #[arg(long, default_value_t = Config::default().seed, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Par,
    Ser,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Plain,
    Borrow,
    Ancilla,
}

impl From<Mode> for ClosureMode {
    fn from(m: Mode) -> ClosureMode {
        match m {
            Mode::Plain => ClosureMode::Plain,
            Mode::Borrow => ClosureMode::Borrow,
            Mode::Ancilla => ClosureMode::Ancilla,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parallel (f ⊕ g) or serial (f • g) composition of two gates.
    Compose {
        #[arg(long, value_enum)]
        op: Op,
        f: PathBuf,
        g: PathBuf,
    },
    /// Parity of each gate in the file.
    Sign { f: PathBuf },
    /// Order of the arity-N slice of the class generated by the gates.
    Order {
        #[arg(long)]
        arity: usize,
        #[arg(required = true)]
        gates: Vec<PathBuf>,
    },
    /// Slices 1..=N of the plain, borrow or ancilla closure.
    Closure {
        #[arg(long, value_enum, default_value_t = Mode::Plain)]
        mode: Mode,
        #[arg(long)]
        max_arity: usize,
        #[arg(required = true)]
        gates: Vec<PathBuf>,
    },
    /// Structure report for the arity-N slice.
    Classify {
        #[arg(long)]
        arity: usize,
        #[arg(required = true)]
        gates: Vec<PathBuf>,
    },
    /// Possible maximal classes for an alphabet size and arity.
    Maxclass {
        #[arg(long)]
        alphabet: usize,
        #[arg(long)]
        arity: usize,
    },
    /// Word sending three distinct points of A^3 to 111, 112, 113.
    Witness3 {
        #[arg(long)]
        alphabet: usize,
        /// Three points as comma-separated 1-based symbols, e.g. 1,2,1.
        #[arg(long, num_args = 3, value_parser = parse_point)]
        triples: Vec<[usize; 3]>,
    },
    /// Run built-in checks by id, or `all`.
    Verify {
        #[arg(default_value = "all")]
        ids: Vec<String>,
    },
}

fn parse_point(s: &str) -> Result<[usize; 3], String> {
    let symbols = s
        .split(',')
        .map(|t| match t.trim().parse::<usize>() {
            Ok(0) | Err(_) => Err(format!("`{t}` is not a 1-based symbol")),
            Ok(v) => Ok(v - 1),
        })
        .collect::<Result<Vec<_>, _>>()?;
    symbols
        .try_into()
        .map_err(|_| format!("`{s}` does not have three coordinates"))
}

enum Failure {
    Check(String),
    Input(String),
    Cap(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Input(_) => 2,
            Failure::Cap(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            Error::FixpointDiverged(_) => Failure::Check(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn read_gates(path: &Path) -> Result<Vec<Gate>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let parsed = if text.trim_start().starts_with('[') {
        serde_json::from_str::<Vec<Gate>>(&text)
    } else {
        serde_json::from_str::<Gate>(&text).map(|g| vec![g])
    };
    let gates = parsed.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    if gates.is_empty() {
        return Err(Failure::Input(format!("{}: no gates", path.display())));
    }
    Ok(gates)
}

fn read_one(path: &Path) -> Result<Gate, Failure> {
    let mut gates = read_gates(path)?;
    if gates.len() != 1 {
        return Err(Failure::Input(format!("{}: expected a single gate", path.display())));
    }
    Ok(gates.remove(0))
}

fn read_set(paths: &[PathBuf]) -> Result<GateSet, Failure> {
    let mut gates = Vec::new();
    for p in paths {
        gates.extend(read_gates(p)?);
    }
    Ok(GateSet::new(gates[0].alphabet(), gates)?)
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output serialization cannot fail")
}

#[derive(Serialize)]
struct SliceLine {
    arity: usize,
    degree: usize,
    order: String,
    exact: bool,
}

#[derive(Serialize)]
struct ClosureOut {
    mode: ClosureMode,
    max_arity: usize,
    rounds: usize,
    slices: Vec<SliceLine>,
    reduced: Vec<Gate>,
}

fn run(cli: Cli) -> Result<String, Failure> {
    let cfg = Config {
        degree_cap: cli.degree_cap,
        seed: cli.seed,
    };
    cfg.validate().map_err(Failure::Input)?;
    let as_json = cli.format == Format::Json;
    let mut out = String::new();

    match cli.command {
        Command::Compose { op, f, g } => {
            let (f, g) = (read_one(&f)?, read_one(&g)?);
            let h = match op {
                Op::Par => f.parallel(&g)?,
                Op::Ser => f.serial(&g)?,
            };
            cfg.slice_degree(h.alphabet(), h.arity())?;
            out.push_str(&h.to_json());
        }
        Command::Sign { f } => {
            let signs: Vec<_> = read_gates(&f)?.iter().map(Gate::sign).collect();
            if as_json {
                out = json(&signs);
            } else {
                out = signs.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("\n");
            }
        }
        Command::Order { arity, gates } => {
            let set = read_set(&gates)?;
            let order = slice_order(&set, arity, &cfg)?;
            if as_json {
                out = json(&serde_json::json!({ "arity": arity, "order": order.to_string() }));
            } else {
                out = order.to_string();
            }
        }
        Command::Closure { mode, max_arity, gates } => {
            let set = read_set(&gates)?;
            let report = windowed_closure(&set, mode.into(), max_arity, &cfg)?;
            let slices: Vec<SliceLine> = report
                .slices
                .iter()
                .map(|s| SliceLine {
                    arity: s.arity,
                    degree: s.degree,
                    order: s.order.to_string(),
                    exact: s.exact,
                })
                .collect();
            if as_json {
                out = json(&ClosureOut {
                    mode: report.mode,
                    max_arity,
                    rounds: report.rounds,
                    slices,
                    reduced: report.reduced,
                });
            } else {
                writeln!(out, "mode {} after {} round(s)", report.mode, report.rounds).unwrap();
                for s in &slices {
                    let bound = if s.exact { "" } else { " (lower bound)" };
                    writeln!(out, "arity {} degree {} order {}{bound}", s.arity, s.degree, s.order).unwrap();
                }
                write!(out, "{} gate(s) found by reduction", report.reduced.len()).unwrap();
            }
        }
        Command::Classify { arity, gates } => {
            let set = read_set(&gates)?;
            let report = classify_arity(&set, arity, &cfg)?;
            if as_json {
                out = report.to_json();
            } else {
                let affine = report.affine_member.map_or("no".to_string(), |q| format!("over GF({q})"));
                writeln!(out, "alphabet {} arity {} degree {}", report.alphabet, report.arity, report.degree).unwrap();
                writeln!(out, "order {}", report.order).unwrap();
                writeln!(out, "transitive {}", report.transitive).unwrap();
                writeln!(out, "primitive {}", report.primitive).unwrap();
                writeln!(out, "in alternating {}", report.in_alternating).unwrap();
                writeln!(out, "wreath {}", report.wreath_member).unwrap();
                write!(out, "affine {affine}").unwrap();
            }
        }
        Command::Maxclass { alphabet, arity } => {
            if alphabet < 2 || arity == 0 {
                return Err(Failure::Input("alphabet must be at least 2 and arity at least 1".into()));
            }
            let table = maximal_class_options(alphabet, arity);
            if as_json {
                out = table.to_json();
            } else if table.entries.is_empty() {
                out = format!("no maximal class has its proper slice at arity {arity} for |A| = {alphabet}");
            } else {
                let lines: Vec<String> = table
                    .entries
                    .iter()
                    .map(|e| format!("case {} {:<13} {:<14} {:<28} {}", e.case, e.class, e.status, e.group, e.reason))
                    .collect();
                out = lines.join("\n");
            }
        }
        Command::Witness3 { alphabet, triples } => {
            let [a, b, c] = [triples[0], triples[1], triples[2]];
            let word = three_transitive_witness(alphabet, a, b, c)?;
            if as_json {
                out = json(&word);
            } else {
                let lines: Vec<String> = word
                    .steps
                    .iter()
                    .map(|s| {
                        let kind = match s.kind {
                            StepKind::Wire => "wire ",
                            StepKind::Local => "local",
                        };
                        let wires: Vec<String> = s.wires.iter().map(usize::to_string).collect();
                        format!("{kind} [{}] {}", wires.join(","), s.gate.to_json())
                    })
                    .collect();
                out = if lines.is_empty() {
                    "already canonical".to_string()
                } else {
                    lines.join("\n")
                };
            }
        }
        Command::Verify { ids } => {
            let ids: Vec<String> = if ids.iter().any(|i| i == "all") {
                verify::all_ids().into_iter().map(String::from).collect()
            } else {
                ids
            };
            let mut results = Vec::new();
            for id in &ids {
                results.push(verify::run_check(id, &cfg)?);
            }
            if as_json {
                out = json(&results);
            } else {
                for r in &results {
                    let verdict = if r.passed { "PASS" } else { "FAIL" };
                    writeln!(out, "{verdict} {} ({:.1} ms)", r.id, r.elapsed_ms).unwrap();
                    for o in &r.observations {
                        let mark = if o.computed == o.expected { "ok " } else { "BAD" };
                        writeln!(out, "  {mark} {}: {} (expected {}; {})", o.quantity, o.computed, o.expected, o.source).unwrap();
                    }
                }
                out.pop();
            }
            if let Some(r) = results.iter().find(|r| !r.passed) {
                println!("{out}");
                return Err(Failure::Check(format!("check {} failed", r.id)));
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            let (Failure::Check(msg) | Failure::Input(msg) | Failure::Cap(msg)) = &f;
            eprintln!("rta: {msg}");
            ExitCode::from(f.code())
        }
    }
}
