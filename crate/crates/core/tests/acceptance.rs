//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use oddferrers::bijections::{check_claims, nu_forward, omega_forward, sweep, MapFamily};
use oddferrers::enumeration::{
    checked_pairs, closed_forms, enumerate_cell, gf_from_enumeration, members_of_size, Member,
};
use oddferrers::fixtures::{worked_examples, PairsFixture};
use oddferrers::identities::{compare, verify_all};
use oddferrers::partition::partitions_of;
use oddferrers::{Exec, OddFerrersGraph, Partition};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn identities() -> Outcome {
    let start = Instant::now();
    let reports = verify_all(30, Exec::Parallel).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(
        reports.len() >= 22,
        format!("only {} identities registered", reports.len()),
    )?;
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.pass)
        .map(|r| r.name.as_str())
        .collect();
    ensure(failed.is_empty(), format!("failing: {}", failed.join(", ")))?;
    ensure(
        elapsed < Duration::from_secs(60),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!(
        "{} identities exact to q^30 in {:.1?}",
        reports.len(),
        elapsed
    ))
}

fn table1() -> Outcome {
    let fx = &worked_examples().table1;
    let (g, trace) =
        omega_forward(&fx.start().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let steps: Vec<Partition> = trace.steps.iter().map(|s| s.object.clone()).collect();
    ensure(
        trace.diffs.values == fx.diffs,
        format!("d = {:?}", trace.diffs.values),
    )?;
    ensure(
        steps == fx.steps().map_err(|e| e.to_string())?,
        "intermediates differ",
    )?;
    ensure(
        g == fx.graph().map_err(|e| e.to_string())?,
        format!("image {g}"),
    )?;
    Ok(format!(
        "d = {:?}, terminal {}",
        trace.diffs.values, trace.terminal
    ))
}

fn figures() -> Outcome {
    let w = worked_examples();
    let (g1, _) = omega_forward(&w.table1.start().unwrap()).map_err(|e| e.to_string())?;
    ensure(g1 == w.table1.graph().unwrap(), format!("omega image {g1}"))?;
    let (g3, t3) = nu_forward(&w.table3.start().unwrap()).map_err(|e| e.to_string())?;
    ensure(g3 == w.table3.graph().unwrap(), format!("nu image {g3}"))?;
    ensure(
        t3.diffs.values == w.table3.diffs,
        format!("nu d = {:?}", t3.diffs.values),
    )?;
    let steps: Vec<Partition> = t3.steps.iter().map(|s| s.object.clone()).collect();
    ensure(
        steps == w.table3.steps().unwrap(),
        "nu intermediates differ",
    )?;
    Ok(format!("{g1}, {g3} with d = {:?}", t3.diffs.values))
}

fn pairs(fx: &PairsFixture) -> Outcome {
    let expected = fx.pairs().map_err(|e| e.to_string())?;
    let cell = enumerate_cell(fx.family.partitions(), fx.m as i64, fx.n);
    ensure(
        cell.len() == expected.len(),
        format!(
            "cell has {} members, table has {}",
            cell.len(),
            expected.len()
        ),
    )?;
    for (p, g) in &expected {
        let (img, _) = fx.family.forward(p).map_err(|e| format!("{p}: {e}"))?;
        ensure(&img == g, format!("{p} maps to {img}, expected {g}"))?;
        let (back, _) = fx.family.inverse(g).map_err(|e| format!("{g}: {e}"))?;
        ensure(&back == p, format!("{g} maps back to {back}, expected {p}"))?;
    }
    Ok(format!(
        "{} pairs in cell (m={}, n={})",
        expected.len(),
        fx.m,
        fx.n
    ))
}

fn round_trips() -> Result<(String, Vec<oddferrers::SweepReport>), String> {
    let start = Instant::now();
    let reports: Vec<_> = [MapFamily::Omega, MapFamily::Nu]
        .into_iter()
        .map(|f| sweep(f, 25, Exec::Parallel))
        .collect();
    let elapsed = start.elapsed();
    for r in &reports {
        if let Some(v) = r.violations.first() {
            return Err(format!(
                "{}: {v} ({} violations)",
                r.family,
                r.violations.len()
            ));
        }
    }
    ensure(
        elapsed < Duration::from_secs(300),
        format!("took {elapsed:?}"),
    )?;
    let checked: usize = reports.iter().map(|r| r.traces_checked).sum();
    Ok((
        format!("{checked} objects round-tripped for n <= 25 in {elapsed:.1?}"),
        reports,
    ))
}

fn oracles() -> Outcome {
    let pairs = checked_pairs();
    for &(family, weight) in &pairs {
        let brute = gf_from_enumeration(family, 20, weight).map_err(|e| e.to_string())?;
        for (name, build) in closed_forms(family, weight).map_err(|e| e.to_string())? {
            let closed = build(20).map_err(|e| e.to_string())?;
            let report = compare(name, &brute, &closed);
            ensure(
                report.pass,
                format!("{family} {weight:?} vs {name}: {:?}", report.discrepancy),
            )?;
        }
    }
    Ok(format!("{} family/weight pairs agree to q^20", pairs.len()))
}

fn claims() -> Outcome {
    let mut traces = 0usize;
    for family in [MapFamily::Omega, MapFamily::Nu] {
        for n in 0..=25 {
            for lambda in members_of_size(family.partitions(), n) {
                let Member::Partition(lambda) = lambda else {
                    continue;
                };
                let (g, fwd) = family.forward(&lambda).map_err(|e| e.to_string())?;
                let (_, inv) = family.inverse(&g).map_err(|e| e.to_string())?;
                for diffs in [&fwd.diffs, &inv.diffs] {
                    ensure(
                        check_claims(diffs),
                        format!("{family} {lambda}: {:?}", diffs.values),
                    )?;
                }
                traces += 2;
            }
        }
    }
    Ok(format!("{traces} traces satisfy the difference laws"))
}

fn size_formula() -> Outcome {
    let g = OddFerrersGraph::from_shape("(6,6,3,2)".parse().unwrap()).map_err(|e| e.to_string())?;
    ensure(g.size() == 24, format!("size {}", g.size()))?;
    let mut shapes = 0usize;
    for k in 1..=30 {
        for shape in partitions_of(k) {
            let g = OddFerrersGraph::from_shape(shape).map_err(|e| e.to_string())?;
            ensure(
                g.size() == g.cell_sum(),
                format!("{g}: {} vs {}", g.size(), g.cell_sum()),
            )?;
            shapes += 1;
        }
    }
    Ok(format!("size of F(6,6,3,2) is 24; {shapes} shapes agree"))
}

fn main() -> ExitCode {
    let w = worked_examples();
    let results: Vec<(u8, &str, Outcome)> = vec![
        (1, "identity suite at order 30", identities()),
        (2, "first omega trace", table1()),
        (3, "omega and nu constructions", figures()),
        (4, "omega cell correspondence", pairs(&w.table2)),
        (5, "nu cell correspondence", pairs(&w.table4)),
        (6, "exhaustive round trips", round_trips().map(|(s, _)| s)),
        (7, "oracle equivalence", oracles()),
        (8, "difference-sequence laws", claims()),
        (9, "size formula", size_formula()),
    ];
    let mut ok = true;
    for (id, label, outcome) in &results {
        match outcome {
            Ok(detail) => println!("criterion {id}: PASS  {label}: {detail}"),
            Err(why) => {
                ok = false;
                println!("criterion {id}: FAIL  {label}: {why}");
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
