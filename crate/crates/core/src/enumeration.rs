//! Brute-force enumeration of every family of partitions and odd Ferrers
//! graphs, and their generating functions built term by term.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::identities::Builder;
use crate::mock_theta as mt;
use crate::odd_ferrers::OddFerrersGraph;
use crate::partition::{partitions_of, partitions_with_length, Partition};
use crate::series::LaurentSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// Distinct graphs; `z` marks rows − 1, `y` marks columns − 1.
    BNu,
    /// All graphs; `z` marks rows − 1, `y` marks columns − 1.
    BOmega,
    /// Distinct graphs by rows − 1.
    B1Nu,
    /// Distinct graphs by columns − 1.
    B2Nu,
    /// Distinct graphs by columns − rows.
    B3Nu,
    /// Distinct graphs by number of 1-cells.
    B4Nu,
    /// All graphs by rows − 1.
    B1Omega,
    /// All graphs by columns − 1.
    B1pOmega,
    /// All graphs by rows − columns.
    B2Omega,
    /// All graphs by columns − rows.
    B2pOmega,
    /// All graphs by number of 1-cells.
    B3Omega,
    /// `P_omega` by length − 1.
    POmega,
    /// `P_nu` by length − 1.
    PNu,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Weight {
    #[default]
    Plain,
    /// Each graph weighted by `(−1)^♯`.
    SignedSharp,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Member {
    Partition(Partition),
    Graph(OddFerrersGraph),
}

impl Member {
    pub fn size(&self) -> u64 {
        match self {
            Member::Partition(p) => p.size(),
            Member::Graph(g) => g.size(),
        }
    }
}

impl fmt::Display for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Member::Partition(p) => p.fmt(f),
            Member::Graph(g) => g.fmt(f),
        }
    }
}

/// Exponents of `z` and `y` a member contributes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Stat {
    pub z: i64,
    pub y: i64,
}

impl Family {
    pub const ALL: [Family; 13] = [
        Family::BNu,
        Family::BOmega,
        Family::B1Nu,
        Family::B2Nu,
        Family::B3Nu,
        Family::B4Nu,
        Family::B1Omega,
        Family::B1pOmega,
        Family::B2Omega,
        Family::B2pOmega,
        Family::B3Omega,
        Family::POmega,
        Family::PNu,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::BNu => "b_nu",
            Family::BOmega => "b_omega",
            Family::B1Nu => "b1_nu",
            Family::B2Nu => "b2_nu",
            Family::B3Nu => "b3_nu",
            Family::B4Nu => "b4_nu",
            Family::B1Omega => "b1_omega",
            Family::B1pOmega => "b1p_omega",
            Family::B2Omega => "b2_omega",
            Family::B2pOmega => "b2p_omega",
            Family::B3Omega => "b3_omega",
            Family::POmega => "p_omega",
            Family::PNu => "p_nu",
        }
    }

    pub fn is_partition_family(self) -> bool {
        matches!(self, Family::POmega | Family::PNu)
    }

    pub fn is_trivariate(self) -> bool {
        matches!(self, Family::BNu | Family::BOmega)
    }

    /// Graph families restricted to distinct shapes.
    pub fn distinct_only(self) -> bool {
        matches!(
            self,
            Family::BNu | Family::B1Nu | Family::B2Nu | Family::B3Nu | Family::B4Nu
        )
    }

    pub fn stat(self, member: &Member) -> Stat {
        match member {
            Member::Partition(p) => Stat {
                z: p.len() as i64 - 1,
                y: 0,
            },
            Member::Graph(g) => {
                let rows = g.rows() as i64;
                let cols = i64::from(g.cols());
                let sharp = g.sharp() as i64;
                let z = match self {
                    Family::BNu | Family::BOmega | Family::B1Nu | Family::B1Omega => rows - 1,
                    Family::B2Nu | Family::B1pOmega => cols - 1,
                    Family::B3Nu | Family::B2pOmega => cols - rows,
                    Family::B2Omega => rows - cols,
                    Family::B4Nu | Family::B3Omega => sharp,
                    Family::POmega | Family::PNu => unreachable!("graph in a partition family"),
                };
                let y = if self.is_trivariate() { cols - 1 } else { 0 };
                Stat { z, y }
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse {
                input: s.to_owned(),
                reason: format!(
                    "unknown family; expected one of {}",
                    Family::ALL.map(Family::name).join(", ")
                ),
            })
    }
}

/// Every odd Ferrers graph of size at most `max_size`.
///
/// A graph of shape `λ` has size `2|λ| − λ₁ − ℓ ≥ |λ| − 1`, so shapes with
/// `|λ| ≤ max_size + 1` suffice.
pub fn graphs_up_to(max_size: u32, distinct: bool) -> Vec<OddFerrersGraph> {
    let mut out = Vec::new();
    for k in 1..=max_size + 1 {
        for shape in partitions_of(k) {
            if distinct && !shape.is_distinct() {
                continue;
            }
            let g = OddFerrersGraph::from_shape(shape).expect("positive nonempty shape");
            if g.size() <= u64::from(max_size) {
                out.push(g);
            }
        }
    }
    out
}

/// Partitions of `n` with exactly `m + 1` parts, one of which may be a
/// trailing zero.
pub fn partitions_with_length_and_zero(n: u32, m: usize) -> Vec<Partition> {
    let mut out = partitions_with_length(n, m + 1);
    if n == 0 {
        if m == 0 {
            out.push(Partition::single(0));
        }
        return out;
    }
    for p in partitions_with_length(n, m) {
        out.push(p.with_zero().expect("positive parts"));
    }
    out
}

fn in_family(family: Family, p: &Partition) -> bool {
    match family {
        Family::POmega => p.is_in_p_omega().unwrap_or(false),
        Family::PNu => p.is_in_p_nu().unwrap_or(false),
        _ => false,
    }
}

/// All members of size exactly `n`, sorted.
pub fn members_of_size(family: Family, n: u32) -> Vec<Member> {
    let mut out: Vec<Member> = if family.is_partition_family() {
        (0..=n as usize)
            .flat_map(|m| partitions_with_length_and_zero(n, m))
            .filter(|p| in_family(family, p))
            .map(Member::Partition)
            .collect()
    } else {
        (1..=n + 1)
            .flat_map(partitions_of)
            .filter(|s| !family.distinct_only() || s.is_distinct())
            .map(|s| OddFerrersGraph::from_shape(s).expect("positive nonempty shape"))
            .filter(|g| g.size() == u64::from(n))
            .map(Member::Graph)
            .collect()
    };
    out.sort();
    out
}

/// Members of size `n` whose `z`-statistic is `m`, sorted.
pub fn enumerate_cell(family: Family, m: i64, n: u32) -> Vec<Member> {
    if family.is_partition_family() {
        // generate the cell directly instead of filtering all lengths
        let Ok(m) = usize::try_from(m) else {
            return Vec::new();
        };
        let mut out: Vec<Member> = partitions_with_length_and_zero(n, m)
            .into_iter()
            .filter(|p| in_family(family, p))
            .map(Member::Partition)
            .collect();
        out.sort();
        return out;
    }
    members_of_size(family, n)
        .into_iter()
        .filter(|x| family.stat(x).z == m)
        .collect()
}

/// Members of a trivariate family with `z`-statistic `l` and
/// `y`-statistic `m`.
pub fn enumerate_triple(family: Family, l: i64, m: i64, n: u32) -> Result<Vec<Member>> {
    if !family.is_trivariate() {
        return Err(Error::Unsupported(
            "only b_nu and b_omega carry two statistics",
        ));
    }
    Ok(members_of_size(family, n)
        .into_iter()
        .filter(|x| family.stat(x) == Stat { z: l, y: m })
        .collect())
}

pub fn count(family: Family, m: i64, n: u32) -> usize {
    enumerate_cell(family, m, n).len()
}

/// Counts for every `(m, n)` with `n ≤ max_n`, as `(m, n, count)` with
/// nonzero counts only, ordered by `n` then `m`.
pub fn count_table(family: Family, max_n: u32, exec: Exec) -> Vec<(i64, u32, usize)> {
    let per_n = exec.map((0..=max_n).collect(), |n| {
        let mut cells: std::collections::BTreeMap<i64, usize> = Default::default();
        for x in members_of_size(family, n) {
            *cells.entry(family.stat(&x).z).or_default() += 1;
        }
        cells
            .into_iter()
            .map(|(m, c)| (m, n, c))
            .collect::<Vec<_>>()
    });
    per_n.into_iter().flatten().collect()
}

/// `Σ w(x) z^{stat_z} y^{stat_y} q^{size}` over all members of size at
/// most `order`.
pub fn gf_from_enumeration(family: Family, order: u32, weight: Weight) -> Result<LaurentSeries> {
    if family.is_partition_family() && weight == Weight::SignedSharp {
        return Err(Error::Unsupported(
            "signed weights apply to graph families only",
        ));
    }
    let mut s = LaurentSeries::zero(order as i32);
    let one = BigInt::from(1);
    let minus = BigInt::from(-1);
    let members: Vec<Member> = if family.is_partition_family() {
        (0..=order)
            .flat_map(|n| members_of_size(family, n))
            .collect()
    } else {
        graphs_up_to(order, family.distinct_only())
            .into_iter()
            .map(Member::Graph)
            .collect()
    };
    for x in members {
        let st = family.stat(&x);
        let c = match (&x, weight) {
            (Member::Graph(g), Weight::SignedSharp) if g.sharp() % 2 == 1 => &minus,
            _ => &one,
        };
        s.add_at(x.size() as i32, (st.y as i32, st.z as i32), c);
    }
    Ok(s)
}

/// Closed-form builders the enumerated generating function must equal:
/// both sides of the corresponding identity.
pub fn closed_forms(family: Family, weight: Weight) -> Result<Vec<(&'static str, Builder)>> {
    use Family::*;
    use Weight::*;
    Ok(match (family, weight) {
        (BNu, Plain) => vec![
            ("nu_yz", mt::nu_yz),
            ("nu_yz_finite_products", mt::nu_yz_finite_products),
        ],
        (BOmega, Plain) => vec![
            ("omega_yz", mt::omega_yz),
            ("omega_yz_y_sum", mt::omega_yz_y_sum),
            ("omega_yz_z_sum", mt::omega_yz_z_sum),
        ],
        (BNu | BOmega, SignedSharp) => {
            return Err(Error::Unsupported(
                "no signed trivariate closed form is registered",
            ))
        }
        (B1Nu, Plain) => vec![
            ("nu_rows", mt::nu_rows),
            ("nu_rows_finite_products", mt::nu_rows_finite_products),
        ],
        (B1Nu, SignedSharp) => vec![
            ("nu1_z", mt::nu1_z),
            ("nu1_z_finite_products", mt::nu1_z_finite_products),
        ],
        (B2Nu, Plain) => vec![
            ("nu_cols", mt::nu_cols),
            ("nu_cols_finite_products", mt::nu_cols_finite_products),
        ],
        (B2Nu, SignedSharp) => vec![
            ("nu_cols_signed", mt::nu_cols_signed),
            (
                "nu_cols_signed_finite_products",
                mt::nu_cols_signed_finite_products,
            ),
        ],
        (B3Nu, Plain) => vec![
            ("nu_cols_minus_rows", mt::nu_cols_minus_rows),
            (
                "nu_cols_minus_rows_finite_products",
                mt::nu_cols_minus_rows_finite_products,
            ),
        ],
        (B3Nu, SignedSharp) => vec![
            ("nu_z", mt::nu_z),
            ("nu_z_finite_products", mt::nu_z_finite_products),
        ],
        (B4Nu, Plain) => vec![
            ("nu_sharp", mt::nu_sharp),
            ("nu_sharp_finite_products", mt::nu_sharp_finite_products),
        ],
        (B4Nu, SignedSharp) => vec![
            ("nu_sharp_signed", mt::nu_sharp_signed),
            (
                "nu_sharp_signed_finite_products",
                mt::nu_sharp_signed_finite_products,
            ),
        ],
        (B1Omega, Plain) => vec![("omega_z", mt::omega_z), ("omega_rows", mt::omega_rows)],
        (B1Omega, SignedSharp) => vec![
            ("omega_z_signed", mt::omega_z_signed),
            ("omega_rows_signed", mt::omega_rows_signed),
        ],
        (B1pOmega, Plain) => vec![
            ("omega_z", mt::omega_z),
            ("omega_z_single_denominator", mt::omega_z_single_denominator),
        ],
        (B1pOmega, SignedSharp) => vec![
            ("omega_z_signed", mt::omega_z_signed),
            ("omega_cols_signed", mt::omega_cols_signed),
        ],
        (B2Omega, Plain) => vec![
            ("omega_rows_minus_cols", mt::omega_rows_minus_cols),
            (
                "omega_rows_minus_cols_z_sum",
                mt::omega_rows_minus_cols_z_sum,
            ),
        ],
        (B2Omega, SignedSharp) => vec![
            (
                "omega_rows_minus_cols_signed",
                mt::omega_rows_minus_cols_signed,
            ),
            (
                "omega_rows_minus_cols_signed_z_sum",
                mt::omega_rows_minus_cols_signed_z_sum,
            ),
        ],
        (B2pOmega, Plain) => vec![
            ("omega_rows_minus_cols", mt::omega_rows_minus_cols),
            (
                "omega_cols_minus_rows_z_sum",
                mt::omega_cols_minus_rows_z_sum,
            ),
        ],
        (B2pOmega, SignedSharp) => vec![
            (
                "omega_rows_minus_cols_signed",
                mt::omega_rows_minus_cols_signed,
            ),
            (
                "omega_cols_minus_rows_signed_z_sum",
                mt::omega_cols_minus_rows_signed_z_sum,
            ),
        ],
        (B3Omega, Plain) => vec![
            ("omega_sharp", mt::omega_sharp),
            ("omega_sharp_z_sum", mt::omega_sharp_z_sum),
        ],
        (B3Omega, SignedSharp) => vec![
            ("omega_sharp_signed", mt::omega_sharp_signed),
            ("omega_sharp_signed_z_sum", mt::omega_sharp_signed_z_sum),
        ],
        (POmega, Plain) => vec![("p_omega_gf", mt::p_omega_gf), ("omega_z", mt::omega_z)],
        (PNu, Plain) => vec![("p_nu_gf", mt::p_nu_gf), ("nu_rows", mt::nu_rows)],
        (POmega | PNu, SignedSharp) => {
            return Err(Error::Unsupported(
                "signed weights apply to graph families only",
            ))
        }
    })
}

/// Every `(family, weight)` pair that has closed forms.
pub fn checked_pairs() -> Vec<(Family, Weight)> {
    Family::ALL
        .into_iter()
        .flat_map(|f| [(f, Weight::Plain), (f, Weight::SignedSharp)])
        .filter(|&(f, w)| closed_forms(f, w).is_ok())
        .collect()
}
