//! The elementary part-shifting operators the bijections are assembled from.
//!
//! Every operator rejects inputs whose image would not be a partition
//! (negative parts, a second zero) instead of clamping.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Operators that act on every part (or on the last part) by a fixed shift.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PhiKind {
    /// `φ⁺`: last part + 1, re-sorted.
    Plus,
    /// `φ⁻`: last part − 1.
    Minus,
    /// `φ⁺_e`: every part + 2.
    PlusE,
    /// `φ⁻_e`: every part − 2.
    MinusE,
    /// `φ⁺_o`: every part + 2 except the last, which gets + 1.
    PlusO,
    /// `φ⁻_o`: every part − 2 except the last, which gets − 1; re-sorted.
    MinusO,
    /// `φ*`: every part − 1.
    Star,
}

impl PhiKind {
    pub const ALL: [PhiKind; 7] = [
        PhiKind::Plus,
        PhiKind::Minus,
        PhiKind::PlusE,
        PhiKind::MinusE,
        PhiKind::PlusO,
        PhiKind::MinusO,
        PhiKind::Star,
    ];

    fn name(self) -> &'static str {
        match self {
            PhiKind::Plus => "phi_plus",
            PhiKind::Minus => "phi_minus",
            PhiKind::PlusE => "phi_plus_e",
            PhiKind::MinusE => "phi_minus_e",
            PhiKind::PlusO => "phi_plus_o",
            PhiKind::MinusO => "phi_minus_o",
            PhiKind::Star => "phi_star",
        }
    }

    /// Shift applied to (every part but the last, the last part).
    fn shifts(self) -> (i64, i64) {
        match self {
            PhiKind::Plus => (0, 1),
            PhiKind::Minus => (0, -1),
            PhiKind::PlusE => (2, 2),
            PhiKind::MinusE => (-2, -2),
            PhiKind::PlusO => (2, 1),
            PhiKind::MinusO => (-2, -1),
            PhiKind::Star => (-1, -1),
        }
    }
}

pub fn phi_pointwise(kind: PhiKind, lambda: &Partition) -> Result<Partition> {
    lambda.nonempty(kind.name())?;
    let (body, tail) = kind.shifts();
    let last = lambda.len() - 1;
    let shifted = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let v = i64::from(p) + if i == last { tail } else { body };
            u32::try_from(v).map_err(|_| Error::NegativePart {
                op: kind.name(),
                input: lambda.to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::from_unsorted(shifted)
}

/// `φ⁺_c`: replaces one largest odd part `2k+1` by the two parts `k+1, k`.
pub fn phi_split(lambda: &Partition) -> Result<Partition> {
    lambda.nonempty("phi_split")?;
    // leftmost maximal odd part; any maximal one gives the same multiset
    let idx = lambda
        .parts()
        .iter()
        .position(|&p| p % 2 == 1)
        .ok_or_else(|| Error::NoOddPart {
            op: "phi_split",
            input: lambda.to_string(),
        })?;
    let mut parts = lambda.parts().to_vec();
    let odd = parts.remove(idx);
    parts.push(odd.div_ceil(2));
    parts.push(odd / 2);
    Partition::from_unsorted(parts)
}

/// `φ⁻_c`: replaces the last two parts by their sum.
pub fn phi_merge(lambda: &Partition) -> Result<Partition> {
    let n = lambda.len();
    if n < 2 {
        if n == 0 {
            return Err(Error::EmptyPartition);
        }
        return Err(Error::TooShort {
            op: "phi_merge",
            needed: 2,
            got: n,
        });
    }
    let mut parts = lambda.parts().to_vec();
    let b = parts.pop().unwrap();
    let a = parts.pop().unwrap();
    parts.push(a + b);
    Partition::from_unsorted(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn pointwise_examples() {
        assert_eq!(
            phi_pointwise(PhiKind::PlusO, &p("(5,3,3,2)")).unwrap(),
            p("(7,5,5,3)")
        );
        assert_eq!(
            phi_pointwise(PhiKind::MinusO, &p("(8,7,5,5,3)")).unwrap(),
            p("(6,5,3,3,2)")
        );
        assert_eq!(
            phi_pointwise(PhiKind::MinusE, &p("(12,8,4,2)")).unwrap(),
            p("(10,6,2,0)")
        );
        assert_eq!(
            phi_pointwise(PhiKind::Plus, &p("(2,2)")).unwrap(),
            p("(3,2)")
        );
        assert_eq!(
            phi_pointwise(PhiKind::Star, &p("(3,1)")).unwrap(),
            p("(2,0)")
        );
    }

    #[test]
    fn pointwise_domain_errors() {
        for kind in PhiKind::ALL {
            assert_eq!(
                phi_pointwise(kind, &Partition::empty()),
                Err(Error::EmptyPartition)
            );
        }
        assert!(matches!(
            phi_pointwise(PhiKind::Minus, &p("(3,0)")),
            Err(Error::NegativePart { .. })
        ));
        assert!(matches!(
            phi_pointwise(PhiKind::MinusE, &p("(4,1)")),
            Err(Error::NegativePart { .. })
        ));
        // (0,0) is not a partition
        assert!(matches!(
            phi_pointwise(PhiKind::Star, &p("(1,1)")),
            Err(Error::MisplacedZero(_))
        ));
    }

    #[test]
    fn minus_o_resorts() {
        assert_eq!(
            phi_pointwise(PhiKind::MinusO, &p("(4,3,3)")).unwrap(),
            p("(2,2,1)")
        );
        assert_eq!(
            phi_pointwise(PhiKind::MinusO, &p("(5,5)")).unwrap(),
            p("(4,3)")
        );
    }

    #[test]
    fn split_examples() {
        assert_eq!(phi_split(&p("(8,8,4,3)")).unwrap(), p("(8,8,4,2,1)"));
        assert_eq!(phi_split(&p("(1)")).unwrap(), p("(1,0)"));
        assert_eq!(phi_split(&p("(6,5,4,4)")).unwrap(), p("(6,4,4,3,2)"));
        assert!(matches!(
            phi_split(&p("(4,2)")),
            Err(Error::NoOddPart { .. })
        ));
        assert!(matches!(
            phi_split(&p("(1,0)")),
            Err(Error::MisplacedZero(_))
        ));
    }

    #[test]
    fn merge_examples() {
        assert_eq!(phi_merge(&p("(10,8,7,7,5,4)")).unwrap(), p("(10,9,8,7,7)"));
        assert_eq!(phi_merge(&p("(1,1)")).unwrap(), p("(2)"));
        assert_eq!(phi_merge(&p("(3,2,1)")).unwrap(), p("(3,3)"));
        assert!(matches!(phi_merge(&p("(4)")), Err(Error::TooShort { .. })));
        assert_eq!(phi_merge(&Partition::empty()), Err(Error::EmptyPartition));
    }

    #[test]
    fn size_deltas_and_inverses_exhaustive() {
        for n in 1..=14 {
            for lambda in partitions_of(n) {
                let l = lambda.len() as i64;
                let size = lambda.size() as i64;
                let d = |kind| phi_pointwise(kind, &lambda).unwrap().size() as i64 - size;
                assert_eq!(d(PhiKind::Plus), 1);
                assert_eq!(d(PhiKind::PlusE), 2 * l);
                assert_eq!(d(PhiKind::PlusO), 2 * l - 1);
                if let Ok(star) = phi_pointwise(PhiKind::Star, &lambda) {
                    assert_eq!(star.size() as i64 - size, -l);
                }
                let up = phi_pointwise(PhiKind::PlusE, &lambda).unwrap();
                assert_eq!(phi_pointwise(PhiKind::MinusE, &up).unwrap(), lambda);
                let plus = phi_pointwise(PhiKind::Plus, &lambda).unwrap();
                // φ⁺ raised the last entry in place only if no re-sort happened
                if plus.parts()[..lambda.len() - 1] == lambda.parts()[..lambda.len() - 1] {
                    assert_eq!(phi_pointwise(PhiKind::Minus, &plus).unwrap(), lambda);
                }
                if lambda.len() >= 2 {
                    assert_eq!(phi_merge(&lambda).unwrap().size(), lambda.size());
                }
                if let Ok(s) = phi_split(&lambda) {
                    assert_eq!(s.size(), lambda.size());
                }
            }
        }
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(0u32..25, 1..9).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            // keep at most one zero
            while v.len() >= 2 && v[v.len() - 2] == 0 {
                v.pop();
            }
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn outputs_are_partitions(lambda in arb_partition()) {
            for kind in PhiKind::ALL {
                if let Ok(out) = phi_pointwise(kind, &lambda) {
                    prop_assert!(Partition::new(out.parts().to_vec()).is_ok());
                }
            }
        }

        #[test]
        fn split_is_independent_of_chosen_maximal_odd_part(lambda in arb_partition()) {
            let parts = lambda.parts();
            if let Some(max_odd) = parts.iter().copied().filter(|p| p % 2 == 1).max() {
                let expected = phi_split(&lambda);
                for idx in (0..parts.len()).filter(|&i| parts[i] == max_odd) {
                    let mut v = parts.to_vec();
                    v.remove(idx);
                    v.push(max_odd.div_ceil(2));
                    v.push(max_odd / 2);
                    prop_assert_eq!(&Partition::from_unsorted(v), &expected);
                }
            }
        }
    }
}
