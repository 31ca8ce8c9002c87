//! The bijections `P_omega(m,n) → B¹_omega(m,n)` and `P_nu(m,n) → B¹_nu(m,n)`,
//! their inverses, and the difference-sequence laws they satisfy.
//!
//! Forward maps repeatedly shrink a partition with a destructive operator
//! and record the size drops; the graph is then grown from a single row by
//! replaying the drops in reverse. Inverse maps peel the graph and rebuild
//! the partition with the constructive operators.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::enumeration::{graphs_up_to, members_of_size, Family, Member};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::odd_ferrers::OddFerrersGraph;
use crate::operators::{phi_merge, phi_pointwise, phi_split, PhiKind};
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    One,
    Two,
}

/// Which rule of a destructive operator applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DestructiveCase {
    /// Trailing zero removed first.
    DropZero,
    /// Last two parts merged first.
    Merge,
    /// `φ⁻_o`.
    ShiftOdd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiffKind {
    OmegaD,
    OmegaH,
    NuD,
    NuH,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferenceSequence {
    pub values: Vec<u64>,
    pub kind: DiffKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep<T> {
    pub step: usize,
    pub object: T,
    pub delta: u64,
}

/// Record of one run of a map: the shrinking phase (`steps`, ending at
/// `terminal`), its difference sequence, and the objects built on the way
/// back, from the one-row object up to the final image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionTrace<A, B> {
    pub start: A,
    pub steps: Vec<TraceStep<A>>,
    pub terminal: A,
    pub diffs: DifferenceSequence,
    pub rebuild: Vec<B>,
}

pub type ForwardTrace = BijectionTrace<Partition, OddFerrersGraph>;
pub type InverseTrace = BijectionTrace<OddFerrersGraph, Partition>;

fn last_two(lambda: &Partition, op: &'static str) -> Result<(u32, u32)> {
    let p = lambda.parts();
    if p.len() < 2 {
        if p.is_empty() {
            return Err(Error::EmptyPartition);
        }
        return Err(Error::TooShort {
            op,
            needed: 2,
            got: p.len(),
        });
    }
    Ok((p[p.len() - 2], p[p.len() - 1]))
}

/// Every rule of `ψ⁻` whose condition holds; exactly one for members of
/// `P_omega` with at least two parts.
pub fn psi_minus_cases(lambda: &Partition) -> Result<Vec<DestructiveCase>> {
    let (prev, last) = last_two(lambda, "psi_minus")?;
    let mut out = Vec::new();
    if last == 0 && prev >= 2 {
        out.push(DestructiveCase::DropZero);
    }
    if prev == last + 1 {
        out.push(DestructiveCase::Merge);
    }
    if last >= 1 && prev >= last + 2 {
        out.push(DestructiveCase::ShiftOdd);
    }
    Ok(out)
}

/// Every rule of `ρ⁻` whose condition holds.
pub fn rho_minus_cases(lambda: &Partition) -> Result<Vec<DestructiveCase>> {
    let (prev, last) = last_two(lambda, "rho_minus")?;
    let mut out = Vec::new();
    if last == 0 {
        out.push(DestructiveCase::DropZero);
    }
    if last >= 1 && prev == last + 1 {
        out.push(DestructiveCase::Merge);
    }
    if last >= 1 && prev >= last + 2 {
        out.push(DestructiveCase::ShiftOdd);
    }
    Ok(out)
}

fn single_case(cases: Vec<DestructiveCase>) -> Result<DestructiveCase> {
    match cases.as_slice() {
        [c] => Ok(*c),
        _ => Err(Error::Unsupported(
            "destructive operator cases are not exclusive here",
        )),
    }
}

fn drop(before: &Partition, after: &Partition) -> u64 {
    before.size() - after.size()
}

/// `ψ⁻` on `P_omega`, with the size drop.
pub fn psi_minus(lambda: &Partition) -> Result<(Partition, u64)> {
    lambda.require_p_omega()?;
    let out = match single_case(psi_minus_cases(lambda)?)? {
        DestructiveCase::DropZero => phi_pointwise(PhiKind::Minus, &lambda.without_last()?)?,
        DestructiveCase::Merge => phi_pointwise(PhiKind::Minus, &phi_merge(lambda)?)?,
        DestructiveCase::ShiftOdd => phi_pointwise(PhiKind::MinusO, lambda)?,
    };
    let d = drop(lambda, &out);
    Ok((out, d))
}

/// `ψ⁺₁` (adds one part) or `ψ⁺₂` (`φ⁺_o`) on `P_omega`.
pub fn psi_plus(lambda: &Partition, branch: Branch) -> Result<Partition> {
    lambda.require_p_omega()?;
    match branch {
        Branch::Two => phi_pointwise(PhiKind::PlusO, lambda),
        Branch::One => {
            let p = lambda.parts();
            let (&last, body) = p.split_last().ok_or(Error::EmptyPartition)?;
            let raised = phi_pointwise(PhiKind::Plus, lambda)?;
            if last % 2 == 1 && body.iter().all(|x| x % 2 == 0) {
                raised.with_zero()
            } else {
                phi_split(&raised)
            }
        }
    }
}

/// `ρ⁻` on `P_nu`, with the size drop.
pub fn rho_minus(lambda: &Partition) -> Result<(Partition, u64)> {
    lambda.require_p_nu()?;
    let out = match single_case(rho_minus_cases(lambda)?)? {
        DestructiveCase::DropZero => phi_pointwise(PhiKind::MinusE, &lambda.without_last()?)?,
        DestructiveCase::Merge => phi_pointwise(PhiKind::MinusE, &phi_merge(lambda)?)?,
        DestructiveCase::ShiftOdd => phi_pointwise(PhiKind::MinusO, lambda)?,
    };
    let d = drop(lambda, &out);
    Ok((out, d))
}

/// `ρ⁺₁` (adds one part) or `ρ⁺₂` (`φ⁺_o`) on `P_nu`.
pub fn rho_plus(lambda: &Partition, branch: Branch) -> Result<Partition> {
    lambda.require_p_nu()?;
    match branch {
        Branch::Two => phi_pointwise(PhiKind::PlusO, lambda),
        Branch::One => {
            let raised = phi_pointwise(PhiKind::PlusE, lambda)?;
            if lambda.parts().iter().all(|x| x % 2 == 0) {
                raised.with_zero()
            } else {
                phi_split(&raised)
            }
        }
    }
}

fn graph(rows: &[u32]) -> OddFerrersGraph {
    OddFerrersGraph::from_shape(Partition::new(rows.to_vec()).expect("rows stay sorted"))
        .expect("rows stay positive")
}

fn shrink<F>(lambda: &Partition, mut op: F) -> Result<(Vec<TraceStep<Partition>>, Partition)>
where
    F: FnMut(&Partition) -> Result<(Partition, u64)>,
{
    let mut steps = Vec::new();
    let mut cur = lambda.clone();
    while cur.len() > 1 {
        let (next, delta) = op(&cur)?;
        steps.push(TraceStep {
            step: steps.len() + 1,
            object: next.clone(),
            delta,
        });
        cur = next;
    }
    Ok((steps, cur))
}

fn one_row(size: u64) -> Vec<u32> {
    vec![u32::try_from(size + 1).expect("size fits in u32")]
}

pub fn omega_forward(lambda: &Partition) -> Result<(OddFerrersGraph, ForwardTrace)> {
    lambda.require_p_omega()?;
    let (steps, terminal) = shrink(lambda, psi_minus)?;
    let values: Vec<u64> = steps.iter().map(|s| s.delta).collect();
    let mut rows = one_row(terminal.size());
    let mut rebuild = vec![graph(&rows)];
    for &d in values.iter().rev() {
        if d == 1 {
            rows.push(1);
        } else {
            rows.iter_mut().for_each(|r| *r += 1);
        }
        rebuild.push(graph(&rows));
    }
    let image = rebuild.last().cloned().expect("at least the one-row graph");
    Ok((
        image,
        BijectionTrace {
            start: lambda.clone(),
            steps,
            terminal,
            diffs: DifferenceSequence {
                values,
                kind: DiffKind::OmegaD,
            },
            rebuild,
        },
    ))
}

pub fn nu_forward(lambda: &Partition) -> Result<(OddFerrersGraph, ForwardTrace)> {
    lambda.require_p_nu()?;
    let (steps, terminal) = shrink(lambda, rho_minus)?;
    let values: Vec<u64> = steps.iter().map(|s| s.delta).collect();
    let mut rows = one_row(terminal.size());
    let mut rebuild = vec![graph(&rows)];
    for &d in values.iter().rev() {
        rows.iter_mut().for_each(|r| *r += 1);
        if d % 2 == 0 {
            rows.push(1);
        }
        rebuild.push(graph(&rows));
    }
    let image = rebuild.last().cloned().expect("at least the one-row graph");
    Ok((
        image,
        BijectionTrace {
            start: lambda.clone(),
            steps,
            terminal,
            diffs: DifferenceSequence {
                values,
                kind: DiffKind::NuD,
            },
            rebuild,
        },
    ))
}

fn peel<F>(
    g: &OddFerrersGraph,
    mut step: F,
) -> Result<(Vec<TraceStep<OddFerrersGraph>>, OddFerrersGraph)>
where
    F: FnMut(&Partition) -> Result<(Partition, u64)>,
{
    let mut steps = Vec::new();
    let mut cur = g.clone();
    while cur.rows() > 1 {
        let (shape, delta) = step(cur.shape())?;
        let next = OddFerrersGraph::from_shape(shape)?;
        steps.push(TraceStep {
            step: steps.len() + 1,
            object: next.clone(),
            delta,
        });
        cur = next;
    }
    Ok((steps, cur))
}

fn drop_zero(p: Partition) -> Result<Partition> {
    if p.has_zero() {
        p.without_last()
    } else {
        Ok(p)
    }
}

fn rebuild_partition<F>(
    terminal: &OddFerrersGraph,
    values: &[u64],
    mut op: F,
) -> Result<Vec<Partition>>
where
    F: FnMut(&Partition, u64) -> Result<Partition>,
{
    let base = u32::try_from(terminal.size()).expect("size fits in u32");
    let mut lam = Partition::single(base);
    let mut out = vec![lam.clone()];
    for &h in values.iter().rev() {
        lam = op(&lam, h)?;
        out.push(lam.clone());
    }
    Ok(out)
}

pub fn omega_inverse(g: &OddFerrersGraph) -> Result<(Partition, InverseTrace)> {
    let (steps, terminal) = peel(g, |shape| {
        let l = shape.len() as u64;
        if shape.smallest() >= Some(2) {
            // last box of every row: a 1 in the first row, 2s below
            Ok((phi_pointwise(PhiKind::Star, shape)?, 2 * l - 1))
        } else {
            Ok((shape.without_last()?, 1))
        }
    })?;
    let values: Vec<u64> = steps.iter().map(|s| s.delta).collect();
    let rebuild = rebuild_partition(&terminal, &values, |lam, h| {
        psi_plus(lam, if h == 1 { Branch::One } else { Branch::Two })
    })?;
    let image = rebuild
        .last()
        .cloned()
        .expect("at least the one-part partition");
    Ok((
        image,
        BijectionTrace {
            start: g.clone(),
            steps,
            terminal,
            diffs: DifferenceSequence {
                values,
                kind: DiffKind::OmegaH,
            },
            rebuild,
        },
    ))
}

pub fn nu_inverse(g: &OddFerrersGraph) -> Result<(Partition, InverseTrace)> {
    if !g.is_distinct() {
        return Err(Error::NotInSet {
            set: "B1_nu",
            input: g.to_string(),
            reason: "shape is not a distinct partition",
        });
    }
    let (steps, terminal) = peel(g, |shape| {
        let l = shape.len() as u64;
        // a row of length 1 loses its only box, a 1, and disappears
        let h = if shape.smallest() == Some(1) {
            2 * l - 2
        } else {
            2 * l - 1
        };
        Ok((drop_zero(phi_pointwise(PhiKind::Star, shape)?)?, h))
    })?;
    let values: Vec<u64> = steps.iter().map(|s| s.delta).collect();
    let rebuild = rebuild_partition(&terminal, &values, |lam, h| {
        rho_plus(lam, if h % 2 == 0 { Branch::One } else { Branch::Two })
    })?;
    let image = rebuild
        .last()
        .cloned()
        .expect("at least the one-part partition");
    Ok((
        image,
        BijectionTrace {
            start: g.clone(),
            steps,
            terminal,
            diffs: DifferenceSequence {
                values,
                kind: DiffKind::NuH,
            },
            rebuild,
        },
    ))
}

/// The first violated law of the difference sequence, if any.
pub fn claim_violation(diffs: &DifferenceSequence) -> Option<String> {
    let v = &diffs.values;
    let &last = v.last()?;
    let omega = matches!(diffs.kind, DiffKind::OmegaD | DiffKind::OmegaH);
    if v.contains(&0) {
        return Some("zero entry".into());
    }
    if omega {
        if let Some(i) = v.iter().position(|x| x % 2 == 0) {
            return Some(format!("entry {} = {} is even", i + 1, v[i]));
        }
        if last != 1 {
            return Some(format!("last entry is {last}, expected 1"));
        }
    } else if last != 2 {
        return Some(format!("last entry is {last}, expected 2"));
    }
    for (i, &x) in v.iter().enumerate() {
        if x % 2 == 0 || x == 1 {
            continue;
        }
        let k = (x - 1) / 2;
        let later = v[i + 1..]
            .iter()
            .filter(|&&y| if omega { y == 1 } else { y % 2 == 0 })
            .count() as u64;
        if later != k {
            let what = if omega { "1s" } else { "even entries" };
            return Some(format!(
                "entry {} = {x} needs {k} later {what}, found {later}",
                i + 1
            ));
        }
    }
    None
}

pub fn check_claims(diffs: &DifferenceSequence) -> bool {
    claim_violation(diffs).is_none()
}

impl<A, B> BijectionTrace<A, B> {
    pub fn total_delta(&self) -> u64 {
        self.diffs.values.iter().sum()
    }
}

pub trait Measured {
    fn measure(&self) -> u64;
}

impl Measured for Partition {
    fn measure(&self) -> u64 {
        self.size()
    }
}

impl Measured for OddFerrersGraph {
    fn measure(&self) -> u64 {
        self.size()
    }
}

impl<A: Measured, B> BijectionTrace<A, B> {
    /// `|start| = |terminal| + Σ diffs`.
    pub fn telescopes(&self) -> bool {
        self.start.measure() == self.terminal.measure() + self.total_delta()
    }
}

impl ForwardTrace {
    /// For the ν construction: replaying an entry `d` leaves a graph with
    /// `⌈(d+1)/2⌉` rows.
    pub fn nu_row_law_holds(&self) -> bool {
        let d = &self.diffs.values;
        // rebuild[j] is the graph after replaying the last j entries
        (1..self.rebuild.len()).all(|j| {
            let entry = d[d.len() - j];
            self.rebuild[j].rows() as u64 == (entry + 2) / 2
        })
    }
}

/// The two bijections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapFamily {
    Omega,
    Nu,
}

impl MapFamily {
    pub fn name(self) -> &'static str {
        match self {
            MapFamily::Omega => "omega",
            MapFamily::Nu => "nu",
        }
    }

    pub fn partitions(self) -> Family {
        match self {
            MapFamily::Omega => Family::POmega,
            MapFamily::Nu => Family::PNu,
        }
    }

    pub fn forward(self, lambda: &Partition) -> Result<(OddFerrersGraph, ForwardTrace)> {
        match self {
            MapFamily::Omega => omega_forward(lambda),
            MapFamily::Nu => nu_forward(lambda),
        }
    }

    pub fn inverse(self, g: &OddFerrersGraph) -> Result<(Partition, InverseTrace)> {
        match self {
            MapFamily::Omega => omega_inverse(g),
            MapFamily::Nu => nu_inverse(g),
        }
    }
}

impl fmt::Display for MapFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MapFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "omega" => Ok(MapFamily::Omega),
            "nu" => Ok(MapFamily::Nu),
            _ => Err(Error::Parse {
                input: s.to_owned(),
                reason: "expected omega or nu".into(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellReport {
    pub m: usize,
    pub n: u32,
    pub partitions: usize,
    pub graphs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub family: MapFamily,
    pub max_n: u32,
    pub cells: Vec<CellReport>,
    /// Forward plus inverse traces examined.
    pub traces_checked: usize,
    pub violations: Vec<String>,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn check_partition(family: MapFamily, lambda: &Partition, out: &mut Vec<String>) {
    let fail = |out: &mut Vec<String>, msg: String| out.push(format!("{family} {lambda}: {msg}"));
    let (g, trace) = match family.forward(lambda) {
        Ok(x) => x,
        Err(e) => return fail(out, format!("forward failed: {e}")),
    };
    if g.size() != lambda.size() || g.rows() != lambda.len() {
        fail(out, format!("image {g} does not preserve size and length"));
    }
    if family == MapFamily::Nu && !g.is_distinct() {
        fail(out, format!("image {g} is not distinct"));
    }
    if let Some(v) = claim_violation(&trace.diffs) {
        fail(out, format!("claim violated: {v}"));
    }
    if !trace.telescopes() {
        fail(out, "sizes do not telescope".into());
    }
    if family == MapFamily::Nu && !trace.nu_row_law_holds() {
        fail(out, "row-count law fails".into());
    }
    let in_family = |p: &Partition| match family {
        MapFamily::Omega => p.is_in_p_omega().unwrap_or(false),
        MapFamily::Nu => p.is_in_p_nu().unwrap_or(false),
    };
    if let Some(s) = trace.steps.iter().find(|s| !in_family(&s.object)) {
        fail(out, format!("intermediate {} left the family", s.object));
    }
    match family.inverse(&g) {
        Ok((back, _)) if &back == lambda => {}
        Ok((back, _)) => fail(out, format!("inverse gives {back}")),
        Err(e) => fail(out, format!("inverse failed: {e}")),
    }
}

fn check_graph(family: MapFamily, g: &OddFerrersGraph, out: &mut Vec<String>) {
    let fail = |out: &mut Vec<String>, msg: String| out.push(format!("{family} {g}: {msg}"));
    let (lambda, trace) = match family.inverse(g) {
        Ok(x) => x,
        Err(e) => return fail(out, format!("inverse failed: {e}")),
    };
    if lambda.size() != g.size() || lambda.len() != g.rows() {
        fail(
            out,
            format!("image {lambda} does not preserve size and length"),
        );
    }
    if let Some(v) = claim_violation(&trace.diffs) {
        fail(out, format!("claim violated: {v}"));
    }
    if !trace.telescopes() {
        fail(out, "sizes do not telescope".into());
    }
    match family.forward(&lambda) {
        Ok((back, fwd)) => {
            if &back != g {
                fail(out, format!("forward gives {back}"));
            }
            if fwd.diffs.values != trace.diffs.values {
                fail(
                    out,
                    "peeling and shrinking record different sequences".into(),
                );
            }
        }
        Err(e) => fail(out, format!("forward failed: {e}")),
    }
}

/// Exhaustive round trip over every `(m, n)` cell with `n ≤ max_n`.
pub fn sweep(family: MapFamily, max_n: u32, exec: Exec) -> SweepReport {
    let distinct = family == MapFamily::Nu;
    let mut by_size: BTreeMap<u32, Vec<OddFerrersGraph>> = BTreeMap::new();
    for g in graphs_up_to(max_n, distinct) {
        by_size.entry(g.size() as u32).or_default().push(g);
    }
    let jobs: Vec<(u32, Vec<OddFerrersGraph>)> = (0..=max_n)
        .map(|n| (n, by_size.remove(&n).unwrap_or_default()))
        .collect();
    let results = exec.map(jobs, |(n, graphs)| {
        let parts: Vec<Partition> = members_of_size(family.partitions(), n)
            .into_iter()
            .filter_map(|x| match x {
                Member::Partition(p) => Some(p),
                Member::Graph(_) => None,
            })
            .collect();
        let mut violations = Vec::new();
        for p in &parts {
            check_partition(family, p, &mut violations);
        }
        for g in &graphs {
            check_graph(family, g, &mut violations);
        }
        let mut cells: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for p in &parts {
            cells.entry(p.len() - 1).or_default().0 += 1;
        }
        for g in &graphs {
            cells.entry(g.rows() - 1).or_default().1 += 1;
        }
        let cells: Vec<CellReport> = cells
            .into_iter()
            .map(|(m, (partitions, graphs))| CellReport {
                m,
                n,
                partitions,
                graphs,
            })
            .collect();
        for c in &cells {
            if c.partitions != c.graphs {
                violations.push(format!(
                    "{family} cell (m={}, n={}): {} partitions but {} graphs",
                    c.m, c.n, c.partitions, c.graphs
                ));
            }
        }
        (cells, parts.len() + graphs.len(), violations)
    });
    let mut report = SweepReport {
        family,
        max_n,
        cells: Vec::new(),
        traces_checked: 0,
        violations: Vec::new(),
    };
    for (cells, checked, violations) in results {
        report.cells.extend(cells);
        report.traces_checked += checked;
        report.violations.extend(violations);
    }
    report
}
