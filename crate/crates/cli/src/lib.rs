//! Command-line front end. [`run`] parses arguments and returns the exit code
//! and captured output, so the binary is a thin wrapper around it.
//!
//! Exit codes: 0 success, 1 domain refusal (malformed witness query or the
//! search resource guard), 2 strict audit mismatch, 3 filter soundness
//! violation, 64 usage error.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use primal_core::algebra::{verify_group_axioms_on, AxiomReport, OpKind};
use primal_core::conjecture::{
    cube_residue_profile, fermat_cycle_profile, ninth_power_equiv_check, power_cycle_check,
    witness_search_with_workers, WitnessQuery,
};
use primal_core::residue::{decode, encode, iterated_digital_root, MatrixCoord, SignedResidue};
use primal_core::search::{bench_compare, search, KStatus, SearchConfig, DEFAULT_CANDIDATE_CEILING};
use primal_core::tables::{audit_table, generate_by_id, render_table, Header, RenderFormat};
use primal_core::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUSED: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_UNSOUND: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn ok(stdout: String) -> Self {
        CommandOutcome {
            exit_code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(exit_code: i32, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        CommandOutcome {
            exit_code,
            stdout: String::new(),
            stderr,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "primal", version, about = "Signed digital-root arithmetic and mod-9 search tools")]
pub struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reduce an integer to its signed label, digit-sum trace and coordinate.
    #[command(allow_negative_numbers = true)]
    Reduce { value: i64 },
    /// Print the `label_row` coordinate of a nonzero integer.
    #[command(allow_negative_numbers = true)]
    Encode { value: i64 },
    /// Recover an integer from a label and row.
    #[command(allow_negative_numbers = true)]
    Decode {
        #[arg(value_parser = parse_label)]
        label: SignedResidue,
        row: i64,
    },
    /// Regenerate one of the operation tables 4..=9.
    Table {
        id: u32,
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: RenderFormat,
    },
    /// Compare a regenerated table with its published transcription.
    Audit {
        id: u32,
        /// Exit with status 2 when any cell differs.
        #[arg(long)]
        strict: bool,
    },
    /// Check the group laws for add or mul.
    Axioms {
        #[arg(value_parser = parse_op)]
        op: OpKind,
        /// Comma-separated positive labels (defaults to 1..=9).
        #[arg(long, value_delimiter = ',', value_parser = parse_label)]
        universe: Vec<SignedResidue>,
    },
    /// Conjecture checks.
    #[command(subcommand)]
    Conjecture(ConjectureCommand),
    /// Search for x^e + y^e + z^e = k over a bounded grid.
    Search(SearchArgs),
    /// Run the search with and without the residue filter and compare.
    Bench(SearchArgs),
}

#[derive(Debug, Subcommand)]
enum ConjectureCommand {
    /// Look for v_a (op) v_b = target with both operands in the given classes.
    #[command(allow_negative_numbers = true)]
    Witness {
        #[arg(value_parser = parse_op)]
        op: OpKind,
        #[arg(value_parser = parse_label)]
        class_a: SignedResidue,
        #[arg(value_parser = parse_label)]
        class_b: SignedResidue,
        target: i64,
        #[arg(long, default_value_t = 100)]
        bound: i64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Check a^n = a^(n+6) for every label.
    PowerCycle {
        #[arg(long, default_value_t = 200)]
        max_n: u64,
    },
    /// Residues mod 9 reachable by x^3 + y^3 + z^3.
    CubesProfile,
    /// Check x^9 ≡ x^3 (mod 9) for |x| <= bound.
    NinthEquiv {
        #[arg(long, default_value_t = 10_000)]
        bound: i64,
    },
    /// Residue profile of z^n + x^n against k^n.
    FermatProfile { n: u32 },
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct SearchArgs {
    /// Single target (sets both ends of the range).
    #[arg(long, conflicts_with_all = ["k_min", "k_max"])]
    k: Option<i64>,
    #[arg(long, requires = "k_max")]
    k_min: Option<i64>,
    #[arg(long, requires = "k_min")]
    k_max: Option<i64>,
    #[arg(long, default_value_t = 10)]
    bound: i64,
    #[arg(long, default_value_t = 3)]
    exponent: u32,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long)]
    no_filter: bool,
    #[arg(long, default_value_t = DEFAULT_CANDIDATE_CEILING)]
    ceiling: u128,
    /// Progress lines on stderr.
    #[arg(long)]
    progress: bool,
}

impl SearchArgs {
    fn config(&self) -> Result<SearchConfig, String> {
        let (k_min, k_max) = match (self.k, self.k_min, self.k_max) {
            (Some(k), _, _) => (k, k),
            (None, Some(lo), Some(hi)) => (lo, hi),
            _ => return Err("either --k or both --k-min and --k-max are required".into()),
        };
        Ok(SearchConfig {
            k_min,
            k_max,
            bound: self.bound,
            exponent: self.exponent,
            filter_enabled: !self.no_filter,
            worker_count: self.workers,
            candidate_ceiling: self.ceiling,
            progress: self.progress,
        })
    }
}

fn parse_label(s: &str) -> Result<SignedResidue, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_op(s: &str) -> Result<OpKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_format(s: &str) -> Result<RenderFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I) -> CommandOutcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => dispatch(cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                CommandOutcome::fail(EXIT_USAGE, text)
            } else {
                CommandOutcome::ok(text)
            }
        }
    }
}

/// Exit code for a library error.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::MalformedQuery(_) | Error::ResourceGuard { .. } => EXIT_REFUSED,
        Error::Unsound { .. } => EXIT_UNSOUND,
        _ => EXIT_USAGE,
    }
}

fn from_error(err: Error) -> CommandOutcome {
    CommandOutcome::fail(exit_code_for(&err), format!("error: {err}"))
}

fn emit<T: Serialize>(json: bool, payload: &T, text: impl FnOnce() -> String) -> String {
    if json {
        let mut out = serde_json::to_string_pretty(payload).expect("reports serialize");
        out.push('\n');
        out
    } else {
        text()
    }
}

fn dispatch(cli: Cli) -> CommandOutcome {
    let json = cli.json;
    let result = match cli.command {
        Command::Reduce { value } => Ok(cmd_reduce(value, json)),
        Command::Encode { value } => cmd_encode(value, json),
        Command::Decode { label, row } => cmd_decode(label, row, json),
        Command::Table { id, format } => cmd_table(id, format, json),
        Command::Audit { id, strict } => cmd_audit(id, strict, json),
        Command::Axioms { op, universe } => cmd_axioms(op, universe, json),
        Command::Conjecture(sub) => cmd_conjecture(sub, json),
        Command::Search(args) => args
            .config()
            .map_err(|m| CommandOutcome::fail(EXIT_USAGE, format!("error: {m}")))
            .and_then(|cfg| cmd_search(&cfg, json).map_err(from_error)),
        Command::Bench(args) => args
            .config()
            .map_err(|m| CommandOutcome::fail(EXIT_USAGE, format!("error: {m}")))
            .and_then(|cfg| cmd_bench(&cfg, json).map_err(from_error)),
    };
    result.unwrap_or_else(|outcome| outcome)
}

type Outcome = Result<CommandOutcome, CommandOutcome>;

#[derive(Serialize)]
struct ReduceReport {
    input: i64,
    label: SignedResidue,
    k: usize,
    steps: Vec<i64>,
    coord: Option<MatrixCoord<i64>>,
}

fn cmd_reduce(value: i64, json: bool) -> CommandOutcome {
    let trace = iterated_digital_root(value);
    let coord = encode(value).ok();
    let report = ReduceReport {
        input: value,
        label: trace.fixed_point,
        k: trace.k,
        steps: trace.steps.clone(),
        coord,
    };
    CommandOutcome::ok(emit(json, &report, || {
        let mut out = String::new();
        match coord {
            Some(c) => {
                let _ = writeln!(out, "{}, k={}, coord {}", trace.fixed_point, trace.k, c);
            }
            None => {
                let _ = writeln!(out, "∅ (null class), k={}", trace.k);
            }
        }
        let chain: Vec<String> = std::iter::once(value)
            .chain(trace.steps.iter().copied())
            .map(|v| v.to_string())
            .collect();
        let _ = writeln!(out, "trace: {}", chain.join(" -> "));
        out
    }))
}

fn cmd_encode(value: i64, json: bool) -> Outcome {
    let c = encode(value).map_err(from_error)?;
    Ok(CommandOutcome::ok(emit(json, &c, || format!("{c}\n"))))
}

fn cmd_decode(label: SignedResidue, row: i64, json: bool) -> Outcome {
    let c = MatrixCoord::new(label, row).map_err(from_error)?;
    let v = decode(&c).map_err(from_error)?;
    let payload = serde_json::json!({ "label": label, "row": row, "value": v });
    Ok(CommandOutcome::ok(emit(json, &payload, || format!("{v}\n"))))
}

fn cmd_table(id: u32, format: RenderFormat, json: bool) -> Outcome {
    let table = generate_by_id(id).map_err(from_error)?;
    Ok(CommandOutcome::ok(emit(json, &table, || render_table(&table, format))))
}

fn cmd_audit(id: u32, strict: bool, json: bool) -> Outcome {
    let audit = audit_table(id).map_err(from_error)?;
    let stdout = emit(json, &audit, || {
        let mut out = format!("table {}: {}/{} match\n", id, audit.match_count, audit.total());
        for m in &audit.mismatches {
            let col = match m.col {
                Header::Class(l) => format!("φ^{}", l.value()),
                Header::Exponent(n) => format!("()^{n}"),
            };
            let _ = writeln!(
                out,
                "  row φ^{}, col {}: published {}, computed {}",
                m.row.value(),
                col,
                m.published,
                m.computed
            );
        }
        out
    });
    let exit_code = if strict && audit.mismatch_count > 0 {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    };
    Ok(CommandOutcome {
        exit_code,
        stdout,
        stderr: String::new(),
    })
}

fn axiom_text(r: &AxiomReport) -> String {
    let yes = |b: bool| if b { "ok" } else { "FAILS" };
    let list = |ls: &[SignedResidue]| ls.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(", ");
    let mut out = String::new();
    let _ = writeln!(out, "op: {}", r.op);
    let _ = writeln!(out, "closure: {}", yes(r.closure_ok));
    let _ = writeln!(out, "associativity: {}", yes(r.associativity_ok));
    match r.neutral_label {
        Some(e) => {
            let _ = writeln!(out, "neutral: {e}");
        }
        None => {
            let _ = writeln!(out, "neutral: none");
        }
    }
    let pairs: Vec<String> = r.opposite_pairs.iter().map(|(a, o)| format!("{a}~{o}")).collect();
    let _ = writeln!(out, "opposites: {} ({})", yes(r.opposites_ok), pairs.join(", "));
    if !r.missing_opposites.is_empty() {
        let _ = writeln!(out, "  no opposite for: {}", list(&r.missing_opposites));
    }
    let _ = writeln!(out, "cancellation: {}", yes(r.cancellation_ok));
    let _ = writeln!(out, "counterexamples: {}", r.counterexamples.len());
    out
}

fn cmd_axioms(op: OpKind, universe: Vec<SignedResidue>, json: bool) -> Outcome {
    let universe = if universe.is_empty() {
        SignedResidue::positive_labels().collect()
    } else {
        universe
    };
    let report = verify_group_axioms_on(op, &universe).map_err(from_error)?;
    Ok(CommandOutcome::ok(emit(json, &report, || axiom_text(&report))))
}

fn residues(set: &std::collections::BTreeSet<u8>) -> String {
    let parts: Vec<String> = set.iter().map(u8::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn cmd_conjecture(sub: ConjectureCommand, json: bool) -> Outcome {
    let stdout = match sub {
        ConjectureCommand::Witness {
            op,
            class_a,
            class_b,
            target,
            bound,
            workers,
        } => {
            let q = WitnessQuery {
                op,
                class_a,
                class_b,
                target,
                bound,
            };
            let r = witness_search_with_workers(&q, workers).map_err(from_error)?;
            emit(json, &r, || {
                let mut out = String::new();
                if r.witnesses.is_empty() {
                    out.push_str("no witnesses, exhausted\n");
                } else {
                    let shown: Vec<String> =
                        r.witnesses.iter().map(|(a, b)| format!("({a}, {b})")).collect();
                    let _ = writeln!(out, "{} witness(es): {}", shown.len(), shown.join(", "));
                }
                if r.universal {
                    let _ = writeln!(out, "universal: every class member within the bound is reached");
                } else {
                    let sample: Vec<String> = r.unexpressed_sample.iter().map(i64::to_string).collect();
                    let _ = writeln!(
                        out,
                        "universal: no ({} class members unreached, e.g. {})",
                        r.unexpressed_count,
                        sample.join(", ")
                    );
                }
                let _ = writeln!(out, "scanned {} pairs", r.scan_size);
                out
            })
        }
        ConjectureCommand::PowerCycle { max_n } => {
            let r = power_cycle_check(max_n).map_err(from_error)?;
            emit(json, &r, || {
                let failures: Vec<String> = r.boundary_failures.iter().map(|l| l.to_string()).collect();
                format!(
                    "{} violations over {} checks (n in 2..={})\nn=1 breaks the cycle for: {}\n",
                    r.violations.len(),
                    r.checks,
                    r.max_n,
                    failures.join(", ")
                )
            })
        }
        ConjectureCommand::CubesProfile => {
            let p = cube_residue_profile();
            emit(json, &p, || {
                let mut out = format!(
                    "attainable residues {}\nunattainable residues {}\n",
                    residues(&p.attainable),
                    residues(&p.unattainable())
                );
                for (r, w) in &p.witness_per_residue {
                    let _ = writeln!(out, "  {r}: {w:?}");
                }
                out
            })
        }
        ConjectureCommand::NinthEquiv { bound } => {
            let r = ninth_power_equiv_check(bound).map_err(from_error)?;
            emit(json, &r, || {
                format!(
                    "{} violations for |x| <= {} ({} integers); three-term sums congruent: {}\n",
                    r.violations.len(),
                    r.bound,
                    r.checked,
                    r.sums_congruent
                )
            })
        }
        ConjectureCommand::FermatProfile { n } => {
            let p = fermat_cycle_profile(n).map_err(from_error)?;
            emit(json, &p, || {
                format!(
                    "n={}: lhs {} rhs {} common {}; same profile at n+6: {}\n",
                    p.n,
                    residues(&p.lhs),
                    residues(&p.rhs),
                    residues(&p.common),
                    p.shifted_equal
                )
            })
        }
    };
    Ok(CommandOutcome::ok(stdout))
}

fn triple(t: &[i64; 3]) -> String {
    format!("({}, {}, {})", t[0], t[1], t[2])
}

fn cmd_search(cfg: &SearchConfig, json: bool) -> Result<CommandOutcome, Error> {
    let report = search(cfg)?;
    Ok(CommandOutcome::ok(emit(json, &report, || {
        let mut out = String::new();
        for r in &report.results {
            match r.status {
                KStatus::FilteredOut => {
                    let _ = writeln!(out, "k={}: filtered-out ({} ≡ {} mod 9)", r.k, r.k, r.k.rem_euclid(9));
                }
                KStatus::Exhausted => {
                    let _ = writeln!(out, "k={}: exhausted, no solution with |x|,|y|,|z| <= {}", r.k, report.bound);
                }
                KStatus::Solved => {
                    let shown: Vec<String> = r.solutions.iter().map(triple).collect();
                    let _ = writeln!(out, "k={}: {}", r.k, shown.join(" "));
                }
            }
        }
        let _ = writeln!(
            out,
            "candidates examined: {}, filter skips: {}, elapsed: {} ms",
            report.candidates_examined, report.filter_skips, report.elapsed_ms
        );
        out
    })))
}

fn cmd_bench(cfg: &SearchConfig, json: bool) -> Result<CommandOutcome, Error> {
    let b = bench_compare(cfg)?;
    if !b.solution_sets_equal {
        return Err(Error::Unsound { k: cfg.k_min });
    }
    Ok(CommandOutcome::ok(emit(json, &b, || {
        let total = b.filtered.results.len();
        let fmt_ratio = |r: Option<f64>| r.map_or("n/a".to_string(), |x| format!("{x:.2}"));
        format!(
            "solution sets equal: {}\nskipped {}/{} k-values\ncandidates: filtered {}, unfiltered {} (ratio {})\nwall clock: filtered {} ms, unfiltered {} ms (ratio {})\n",
            b.solution_sets_equal,
            b.filtered.filter_skips,
            total,
            b.filtered.candidates_examined,
            b.unfiltered.candidates_examined,
            fmt_ratio(b.candidate_ratio),
            b.filtered.elapsed_ms,
            b.unfiltered.elapsed_ms,
            fmt_ratio(b.wall_clock_ratio),
        )
    })))
}
