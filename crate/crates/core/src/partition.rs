//! Integer partitions with an optional trailing zero part.
//!
//! A trailing zero is significant: `(2,1,0)` and `(2,1)` are different
//! partitions of 3, of lengths 3 and 2. Both sets `P_omega` and `P_nu`
//! admit a smallest part equal to 0.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates that `parts` is nonincreasing with at most one zero, in
    /// last position.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSorted(parts));
        }
        let len = parts.len();
        if len >= 2 && parts[len - 2] == 0 {
            return Err(Error::MisplacedZero(parts));
        }
        Ok(Self { parts })
    }

    /// Sorts into nonincreasing order, then validates.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The one-part partition `(n)`.
    pub fn single(n: u32) -> Self {
        Self { parts: vec![n] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    /// Number of parts, a trailing zero included.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    pub fn smallest(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    pub fn has_zero(&self) -> bool {
        self.smallest() == Some(0)
    }

    /// Strictly decreasing parts.
    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// `λ⁺`: appends a zero part.
    pub fn with_zero(&self) -> Result<Self> {
        self.nonempty("append zero")?;
        let mut parts = self.parts.clone();
        parts.push(0);
        Self::new(parts)
    }

    /// `λ⁻`: drops the last part.
    pub fn without_last(&self) -> Result<Self> {
        self.nonempty("drop last part")?;
        Ok(Self {
            parts: self.parts[..self.parts.len() - 1].to_vec(),
        })
    }

    pub(crate) fn nonempty(&self, _op: &'static str) -> Result<()> {
        if self.parts.is_empty() {
            Err(Error::EmptyPartition)
        } else {
            Ok(())
        }
    }

    /// `λ'_i = |{j : λ_j >= i}|`.
    pub fn conjugate(&self) -> Result<Self> {
        self.nonempty("conjugate")?;
        if self.has_zero() {
            return Err(Error::ZeroPart {
                op: "conjugate",
                input: self.to_string(),
            });
        }
        let cols = self.parts[0] as usize;
        let mut conj = vec![0u32; cols];
        for &p in &self.parts {
            for c in conj.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Ok(Self { parts: conj })
    }

    /// Side of the Durfee square, `max{i : λ_i >= i}`.
    pub fn durfee_side(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p as usize > i)
            .count()
    }

    pub fn frobenius(&self) -> Result<FrobeniusSymbol> {
        let conj = self.conjugate()?;
        let d = self.durfee_side();
        let top = (0..d).map(|i| self.parts[i] - (i as u32 + 1)).collect();
        let bottom = (0..d).map(|i| conj.parts[i] - (i as u32 + 1)).collect();
        Ok(FrobeniusSymbol {
            top: Self::new(top)?,
            bottom: Self::new(bottom)?,
        })
    }

    /// `λ ∈ P_omega`: unique smallest part (possibly 0) and every odd part
    /// at most twice the smallest part plus one.
    pub fn is_in_p_omega(&self) -> Result<bool> {
        Ok(self.p_omega_violation()?.is_none())
    }

    /// `λ ∈ P_nu`: distinct parts (smallest possibly 0) and every odd part
    /// strictly less than twice the smallest part.
    pub fn is_in_p_nu(&self) -> Result<bool> {
        Ok(self.p_nu_violation()?.is_none())
    }

    pub fn p_omega_violation(&self) -> Result<Option<&'static str>> {
        let s = self.smallest().ok_or(Error::EmptyPartition)?;
        let n = self.parts.len();
        if n >= 2 && self.parts[n - 2] == s {
            return Ok(Some("smallest part not unique"));
        }
        if self.parts.iter().any(|&p| p % 2 == 1 && p > 2 * s + 1) {
            return Ok(Some("an odd part exceeds twice the smallest part plus one"));
        }
        Ok(None)
    }

    pub fn p_nu_violation(&self) -> Result<Option<&'static str>> {
        let s = self.smallest().ok_or(Error::EmptyPartition)?;
        if !self.is_distinct() {
            return Ok(Some("parts not distinct"));
        }
        if self.parts.iter().any(|&p| p % 2 == 1 && p >= 2 * s) {
            return Ok(Some("an odd part is not less than twice the smallest part"));
        }
        Ok(None)
    }

    pub fn require_p_omega(&self) -> Result<()> {
        match self.p_omega_violation()? {
            None => Ok(()),
            Some(reason) => Err(Error::NotInSet {
                set: "P_omega",
                input: self.to_string(),
                reason,
            }),
        }
    }

    pub fn require_p_nu(&self) -> Result<()> {
        match self.p_nu_violation()? {
            None => Ok(()),
            Some(reason) => Err(Error::NotInSet {
                set: "P_nu",
                input: self.to_string(),
                reason,
            }),
        }
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Accepts `(a,b,c)` or `a,b,c`; whitespace is ignored. `()` is the empty
/// partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: String| Error::Parse {
            input: s.to_string(),
            reason,
        };
        let mut body = s.trim();
        if let Some(rest) = body.strip_prefix('(') {
            body = rest
                .strip_suffix(')')
                .ok_or_else(|| parse_err("unbalanced parenthesis".into()))?;
        } else if body.ends_with(')') {
            return Err(parse_err("unbalanced parenthesis".into()));
        }
        if body.trim().is_empty() {
            return Ok(Self::empty());
        }
        let parts = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| parse_err(format!("{:?}: {e}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// Two strictly decreasing rows of equal length, the Durfee side.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrobeniusSymbol {
    pub top: Partition,
    pub bottom: Partition,
}

impl FrobeniusSymbol {
    pub fn new(top: Partition, bottom: Partition) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::Parse {
                input: format!("{top} / {bottom}"),
                reason: "rows of a Frobenius symbol must have equal length".into(),
            });
        }
        for row in [&top, &bottom] {
            if !row.is_distinct() {
                return Err(Error::Parse {
                    input: row.to_string(),
                    reason: "Frobenius rows must be strictly decreasing".into(),
                });
            }
        }
        Ok(Self { top, bottom })
    }

    pub fn durfee_side(&self) -> usize {
        self.top.len()
    }

    /// Rebuilds the partition: `λ_i = μ_i + i` inside the Durfee square,
    /// and below it the row lengths of the columns `λ'_j = ν_j + j`.
    pub fn reconstruct(&self) -> Partition {
        let d = self.durfee_side();
        let cols: Vec<u32> = (0..d)
            .map(|j| self.bottom.parts()[j] + j as u32 + 1)
            .collect();
        let mut parts: Vec<u32> = (0..d).map(|i| self.top.parts()[i] + i as u32 + 1).collect();
        let mut row = d as u32 + 1;
        loop {
            let len = cols.iter().filter(|&&c| c >= row).count() as u32;
            if len == 0 {
                break;
            }
            parts.push(len);
            row += 1;
        }
        Partition { parts }
    }
}

impl fmt::Display for FrobeniusSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.top, self.bottom)
    }
}

/// All partitions of `n` into positive parts, each at most `max_part`, in
/// reverse lexicographic order.
pub fn partitions_bounded(n: u32, max_part: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, max_part, None, &mut cur, &mut out);
    out
}

pub fn partitions_of(n: u32) -> Vec<Partition> {
    partitions_bounded(n, n)
}

/// Partitions of `n` into exactly `k` positive parts.
pub fn partitions_with_length(n: u32, k: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, Some(k), &mut cur, &mut out);
    out
}

fn fill(rest: u32, max: u32, len: Option<usize>, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        if len.is_none_or(|k| cur.len() == k) {
            out.push(Partition { parts: cur.clone() });
        }
        return;
    }
    if let Some(k) = len {
        let slots = k.saturating_sub(cur.len()) as u32;
        // every remaining slot needs at least 1 and at most `max`
        if slots == 0 || rest < slots || rest > slots.saturating_mul(max) {
            return;
        }
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, len, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![3, 1, 2]).is_err());
        assert!(Partition::new(vec![3, 0, 0]).is_err());
        assert!(Partition::new(vec![0]).is_ok());
        assert_eq!(
            Partition::from_unsorted(vec![1, 3, 2]).unwrap(),
            p("(3,2,1)")
        );
        assert_eq!(p("(2,1,0)").len(), 3);
        assert_ne!(p("(2,1,0)"), p("(2,1)"));
    }

    #[test]
    fn text_and_json_forms() {
        assert_eq!(p("6, 4,3,3,2").to_string(), "(6,4,3,3,2)");
        assert_eq!(p("()"), Partition::empty());
        assert!("(3,1".parse::<Partition>().is_err());
        assert!("(a,1)".parse::<Partition>().is_err());
        assert!("(1,2)".parse::<Partition>().is_err());
        let json = serde_json::to_string(&p("(12,2,1,0)")).unwrap();
        assert_eq!(json, "[12,2,1,0]");
        let back: Partition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p("(12,2,1,0)"));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn p_omega_membership() {
        assert!(p("(6,4,3,3,2)").is_in_p_omega().unwrap());
        assert!(p("(0)").is_in_p_omega().unwrap());
        assert!(p("(5,2)").is_in_p_omega().unwrap());
        assert!(!p("(7,2)").is_in_p_omega().unwrap());
        assert!(!p("(3,3)").is_in_p_omega().unwrap());
        assert_eq!(
            Partition::empty().is_in_p_omega(),
            Err(Error::EmptyPartition)
        );
    }

    #[test]
    fn p_nu_membership() {
        assert!(p("(10,8,5,4,3)").is_in_p_nu().unwrap());
        assert!(p("(12,8,4,2,0)").is_in_p_nu().unwrap());
        assert!(!p("(3,1)").is_in_p_nu().unwrap());
        assert!(!p("(4,4,3)").is_in_p_nu().unwrap());
        assert_eq!(Partition::empty().is_in_p_nu(), Err(Error::EmptyPartition));
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("(6,6,3,2)").conjugate().unwrap(), p("(4,4,3,2,2,2)"));
        assert_eq!(p("(1)").conjugate().unwrap(), p("(1)"));
        assert_eq!(p("(5)").conjugate().unwrap(), p("(1,1,1,1,1)"));
        assert!(matches!(
            p("(2,0)").conjugate(),
            Err(Error::ZeroPart { .. })
        ));
        assert_eq!(Partition::empty().conjugate(), Err(Error::EmptyPartition));
    }

    /// Counts cells on the diagonal and along the arms directly on a grid.
    fn frobenius_by_cells(lambda: &Partition) -> (Vec<u32>, Vec<u32>) {
        let rows = lambda.parts();
        let mut top = Vec::new();
        let mut bottom = Vec::new();
        let mut i = 0;
        while i < rows.len() && rows[i] as usize > i {
            let arm = (i + 1..rows[i] as usize).count() as u32;
            let leg = rows[i + 1..].iter().filter(|&&r| r as usize > i).count() as u32;
            top.push(arm);
            bottom.push(leg);
            i += 1;
        }
        (top, bottom)
    }

    #[test]
    fn frobenius_examples() {
        let (top, bottom) = frobenius_by_cells(&p("(4,3,3,1)"));
        assert_eq!(
            (top.clone(), bottom.clone()),
            (vec![3, 1, 0], vec![3, 1, 0])
        );
        let fs = p("(4,3,3,1)").frobenius().unwrap();
        assert_eq!(fs.durfee_side(), 3);
        assert_eq!(fs.top.parts(), &top[..]);
        assert_eq!(fs.bottom.parts(), &bottom[..]);

        let fs = p("(1)").frobenius().unwrap();
        assert_eq!((fs.top, fs.bottom), (p("(0)"), p("(0)")));
        let fs = p("(2,2)").frobenius().unwrap();
        assert_eq!((fs.top, fs.bottom), (p("(1,0)"), p("(1,0)")));
        assert_eq!(Partition::empty().frobenius(), Err(Error::EmptyPartition));
    }

    #[test]
    fn frobenius_round_trip_exhaustive() {
        for n in 1..=30 {
            for lambda in partitions_of(n) {
                let fs = lambda.frobenius().unwrap();
                assert_eq!(fs.top.len(), lambda.durfee_side());
                assert_eq!(fs.reconstruct(), lambda);
                let (top, bottom) = frobenius_by_cells(&lambda);
                assert_eq!(fs.top.parts(), &top[..]);
                assert_eq!(fs.bottom.parts(), &bottom[..]);
            }
        }
    }

    #[test]
    fn partition_counts() {
        // p(n) for n = 0..=10
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(partitions_of(n as u32).len(), e);
        }
        assert_eq!(partitions_with_length(10, 3).len(), 8);
        assert!(partitions_with_length(10, 3)
            .iter()
            .all(|l| l.len() == 3 && l.size() == 10));
    }
}
