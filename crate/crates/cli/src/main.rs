use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use oddferrers::bijections::{check_claims, sweep, BijectionTrace, MapFamily};
use oddferrers::enumeration::{enumerate_cell, Family, Member};
use oddferrers::fixtures::{worked_examples, PairsFixture, TraceFixture};
use oddferrers::identities::{registry, require, verify, verify_all, VerificationReport};
use oddferrers::{Error, Exec, OddFerrersGraph, Partition};

const MAX_FUZZ_N: u32 = 40;

#[derive(Parser)]
#[command(
    name = "oddferrers",
    version,
    about = "Odd Ferrers graphs, mock theta identities and bijections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Run checks on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Forward,
    Inverse,
}

#[derive(Subcommand)]
enum Command {
    /// Check identities coefficient by coefficient.
    Verify {
        /// Identity name, or `all`.
        name: String,
        #[arg(long, default_value_t = 20)]
        order: u32,
    },
    /// List registered identities.
    List,
    /// Regenerate one of the worked tables.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        which: u8,
        /// Compare with the bundled expected data.
        #[arg(long)]
        check: bool,
    },
    /// Apply a bijection or its inverse and print the trace.
    Map {
        direction: Direction,
        family: MapFamily,
        /// A partition such as "(6,4,3,3,2)", or a graph shape such as "F(7,3,2,2,1)".
        object: String,
    },
    /// Exhaustive round trips up to a size, plus seeded random samples.
    Fuzz {
        family: MapFamily,
        #[arg(long, default_value_t = 20)]
        max_n: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random objects of larger size to check after the exhaustive pass.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// List the members of a family with given length statistic and size.
    Enumerate {
        family: Family,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        n: u32,
    },
    /// Draw the odd Ferrers graph of a shape.
    Show { shape: String },
}

enum Failure {
    Verification(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn emit(format: Format, text: impl FnOnce() -> String, value: impl Serialize) {
    let body = match format {
        Format::Text => text(),
        Format::Json => serde_json::to_string_pretty(&value).expect("serializable"),
    };
    let _ = writeln!(std::io::stdout().lock(), "{body}");
}

fn parse_shape(s: &str) -> Result<OddFerrersGraph, Error> {
    let t = s.trim();
    let t = t.strip_prefix('F').unwrap_or(t);
    OddFerrersGraph::from_shape(t.parse()?)
}

fn report_line(r: &VerificationReport) -> String {
    match &r.discrepancy {
        None => format!("PASS  {} (order {})", r.name, r.order),
        Some(d) => format!(
            "FAIL  {} (order {}): q^{} y^{} z^{}: {} vs {}",
            r.name, r.order, d.q, d.y, d.z, d.lhs, d.rhs
        ),
    }
}

fn cmd_verify(name: &str, order: u32, format: Format, exec: Exec) -> Outcome {
    let order = i32::try_from(order).map_err(|_| Failure::Usage("order too large".into()))?;
    let reports = if name == "all" {
        verify_all(order, exec)?
    } else {
        vec![verify(require(name)?, order)?]
    };
    emit(
        format,
        || {
            reports
                .iter()
                .map(report_line)
                .collect::<Vec<_>>()
                .join("\n")
        },
        &reports,
    );
    let failed = reports.iter().filter(|r| !r.pass).count();
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "{failed} of {} identities failed",
            reports.len()
        )))
    }
}

fn cmd_list(format: Format) -> Outcome {
    let entries: Vec<_> = registry()
        .iter()
        .map(|e| json!({ "name": e.name, "formula": e.formula, "variables": e.variables }))
        .collect();
    emit(
        format,
        || {
            registry()
                .iter()
                .map(|e| format!("{:<36} {}", e.name, e.formula))
                .collect::<Vec<_>>()
                .join("\n")
        },
        &entries,
    );
    Ok(())
}

fn trace_text<A: std::fmt::Display, B: std::fmt::Display>(
    t: &BijectionTrace<A, B>,
    sym: &str,
) -> String {
    let mut lines = vec![format!("{sym}^0 = {}", t.start)];
    for s in &t.steps {
        lines.push(format!(
            "{sym}^{} = {}    diff {}",
            s.step, s.object, s.delta
        ));
    }
    lines.push(format!("sequence: {:?}", t.diffs.values));
    lines.push("rebuild:".into());
    for b in &t.rebuild {
        lines.push(format!("  {b}"));
    }
    lines.join("\n")
}

fn check_trace_fixture(
    fx: &TraceFixture,
) -> Result<
    (
        OddFerrersGraph,
        BijectionTrace<Partition, OddFerrersGraph>,
        bool,
    ),
    Error,
> {
    let (g, trace) = fx.family.forward(&fx.start()?)?;
    let steps: Vec<Partition> = trace.steps.iter().map(|s| s.object.clone()).collect();
    let matches = steps == fx.steps()? && trace.diffs.values == fx.diffs && g == fx.graph()?;
    Ok((g, trace, matches))
}

fn regenerate_pairs(fx: &PairsFixture) -> Result<Vec<(Partition, OddFerrersGraph)>, Error> {
    let mut out = Vec::new();
    for member in enumerate_cell(fx.family.partitions(), fx.m as i64, fx.n) {
        if let Member::Partition(p) = member {
            let (g, _) = fx.family.forward(&p)?;
            out.push((p, g));
        }
    }
    out.sort_by_key(|(p, _)| p.parts().iter().rev().copied().collect::<Vec<_>>());
    Ok(out)
}

fn cmd_table(which: u8, check: bool, format: Format) -> Outcome {
    let w = worked_examples();
    let matches = match which {
        1 | 3 => {
            let fx = if which == 1 { &w.table1 } else { &w.table3 };
            let (g, trace, matches) = check_trace_fixture(fx)?;
            emit(
                format,
                || format!("{}\nimage: {g}", trace_text(&trace, "lambda")),
                json!({ "table": which, "family": fx.family, "trace": trace, "image": g }),
            );
            matches
        }
        _ => {
            let fx = if which == 2 { &w.table2 } else { &w.table4 };
            let pairs = regenerate_pairs(fx)?;
            emit(
                format,
                || {
                    let mut lines = vec![format!(
                        "{} cell m={} n={}: {} pairs",
                        fx.family,
                        fx.m,
                        fx.n,
                        pairs.len()
                    )];
                    lines.extend(
                        pairs
                            .iter()
                            .map(|(p, g)| format!("{:<20} <-> {g}", p.to_string())),
                    );
                    lines.join("\n")
                },
                json!({ "table": which, "family": fx.family, "m": fx.m, "n": fx.n, "pairs": pairs }),
            );
            let mut expected = fx.pairs()?;
            let mut got = pairs;
            expected.sort();
            got.sort();
            expected == got
        }
    };
    if check && !matches {
        return Err(Failure::Verification(format!(
            "table {which} does not match the expected data"
        )));
    }
    if check {
        eprintln!("table {which}: matches expected data");
    }
    Ok(())
}

fn cmd_map(direction: Direction, family: MapFamily, object: &str, format: Format) -> Outcome {
    match direction {
        Direction::Forward => {
            let lambda: Partition = object.parse()?;
            let (g, trace) = family.forward(&lambda)?;
            emit(
                format,
                || format!("{}\nimage: {g}", trace_text(&trace, "lambda")),
                json!({ "direction": "forward", "family": family, "image": g, "trace": trace }),
            );
        }
        Direction::Inverse => {
            let g = parse_shape(object)?;
            let (lambda, trace) = family.inverse(&g)?;
            emit(
                format,
                || format!("{}\nimage: {lambda}", trace_text(&trace, "eta")),
                json!({ "direction": "inverse", "family": family, "image": lambda, "trace": trace }),
            );
        }
    }
    Ok(())
}

fn random_member(family: MapFamily, rng: &mut ChaCha8Rng, max_part: u32) -> Partition {
    loop {
        let len = rng.random_range(1..=8usize);
        let mut parts: Vec<u32> = (0..len).map(|_| rng.random_range(1..=max_part)).collect();
        if rng.random_bool(0.3) {
            parts.push(0);
        }
        let Ok(p) = Partition::from_unsorted(parts) else {
            continue;
        };
        let inside = match family {
            MapFamily::Omega => p.is_in_p_omega(),
            MapFamily::Nu => p.is_in_p_nu(),
        };
        if inside.unwrap_or(false) {
            return p;
        }
    }
}

fn sample_violation(family: MapFamily, p: &Partition) -> Option<String> {
    let (g, fwd) = match family.forward(p) {
        Ok(x) => x,
        Err(e) => return Some(format!("{p}: {e}")),
    };
    if !check_claims(&fwd.diffs) || !fwd.telescopes() {
        return Some(format!(
            "{p}: difference laws fail for {:?}",
            fwd.diffs.values
        ));
    }
    match family.inverse(&g) {
        Ok((back, _)) if &back == p => None,
        Ok((back, _)) => Some(format!("{p}: round trip gives {back}")),
        Err(e) => Some(format!("{p}: {e}")),
    }
}

fn cmd_fuzz(
    family: MapFamily,
    max_n: u32,
    seed: u64,
    samples: usize,
    format: Format,
    exec: Exec,
) -> Outcome {
    if max_n > MAX_FUZZ_N {
        return Err(Failure::Usage(format!(
            "--max-n must be at most {MAX_FUZZ_N}"
        )));
    }
    let report = sweep(family, max_n, exec);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_part = (max_n + 10).max(2);
    let drawn: Vec<Partition> = (0..samples)
        .map(|_| random_member(family, &mut rng, max_part))
        .collect();
    let sample_violations: Vec<String> = exec
        .map(drawn, |p| sample_violation(family, &p))
        .into_iter()
        .flatten()
        .collect();
    emit(
        format,
        || {
            let mut lines: Vec<String> = report
                .cells
                .iter()
                .map(|c| format!("m={:<3} n={:<3} {}", c.m, c.n, c.partitions))
                .collect();
            lines.push(format!(
                "{family}: {} objects checked up to n={max_n}, {samples} random samples (seed {seed})",
                report.traces_checked
            ));
            lines.extend(report.violations.iter().chain(&sample_violations).cloned());
            let total = report.violations.len() + sample_violations.len();
            lines.push(format!("{total} violations"));
            lines.join("\n")
        },
        json!({
            "family": family,
            "max_n": max_n,
            "seed": seed,
            "samples": samples,
            "cells": report.cells,
            "traces_checked": report.traces_checked,
            "violations": report.violations.iter().chain(&sample_violations).collect::<Vec<_>>(),
        }),
    );
    if report.ok() && sample_violations.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification("round-trip violations found".into()))
    }
}

fn cmd_enumerate(family: Family, m: i64, n: u32, format: Format) -> Outcome {
    let members = enumerate_cell(family, m, n);
    emit(
        format,
        || {
            let mut lines: Vec<String> = members.iter().map(ToString::to_string).collect();
            lines.push(format!(
                "{} members of {family} with m={m}, n={n}",
                members.len()
            ));
            lines.join("\n")
        },
        json!({ "family": family.name(), "m": m, "n": n, "count": members.len(), "members": members }),
    );
    Ok(())
}

fn cmd_show(shape: &str, format: Format) -> Outcome {
    let g = parse_shape(shape)?;
    emit(
        format,
        || {
            format!(
                "{g}\n{}\nsize {}  rows {}  cols {}  sharp {}",
                g.render(),
                g.size(),
                g.rows(),
                g.cols(),
                g.sharp()
            )
        },
        json!({
            "shape": g.shape(),
            "grid": g.grid(),
            "size": g.size(),
            "rows": g.rows(),
            "cols": g.cols(),
            "sharp": g.sharp(),
        }),
    );
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    };
    let f = cli.format;
    let outcome = match &cli.command {
        Command::Verify { name, order } => cmd_verify(name, *order, f, exec),
        Command::List => cmd_list(f),
        Command::Table { which, check } => cmd_table(*which, *check, f),
        Command::Map {
            direction,
            family,
            object,
        } => cmd_map(*direction, *family, object, f),
        Command::Fuzz {
            family,
            max_n,
            seed,
            samples,
        } => cmd_fuzz(*family, *max_n, *seed, *samples, f, exec),
        Command::Enumerate { family, m, n } => cmd_enumerate(*family, *m, *n, f),
        Command::Show { shape } => cmd_show(shape, f),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
