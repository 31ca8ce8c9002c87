use num_bigint::BigInt;
use proptest::prelude::*;

use oddferrers::bijections::{check_claims, MapFamily};
use oddferrers::series::{LaurentSeries, Monomial};
use oddferrers::{OddFerrersGraph, Partition};

fn shape() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..15, 1..8).prop_map(|v| Partition::from_unsorted(v).unwrap())
}

fn distinct_shape() -> impl Strategy<Value = Partition> {
    prop::collection::btree_set(1u32..20, 1..7)
        .prop_map(|s| Partition::from_unsorted(s.into_iter().collect()).unwrap())
}

fn with_optional_zero(p: Partition, zero: bool) -> Partition {
    if zero {
        p.with_zero().unwrap()
    } else {
        p
    }
}

fn p_omega() -> impl Strategy<Value = Partition> {
    (shape(), any::<bool>())
        .prop_map(|(p, z)| with_optional_zero(p, z))
        .prop_filter("in P_omega", |p| p.is_in_p_omega().unwrap())
}

fn p_nu() -> impl Strategy<Value = Partition> {
    (distinct_shape(), any::<bool>())
        .prop_map(|(p, z)| with_optional_zero(p, z))
        .prop_filter("in P_nu", |p| p.is_in_p_nu().unwrap())
}

fn series() -> impl Strategy<Value = LaurentSeries> {
    prop::collection::vec((0i32..12, -3i32..4, -3i32..4, -20i64..20), 0..12).prop_map(|t| {
        LaurentSeries::from_terms(
            12,
            t.into_iter().map(|(q, y, z, c)| (q, y, z, BigInt::from(c))),
        )
    })
}

fn check_forward(family: MapFamily, lambda: &Partition) -> Result<(), TestCaseError> {
    let (g, trace) = family.forward(lambda).unwrap();
    prop_assert_eq!(g.size(), lambda.size());
    prop_assert_eq!(g.rows(), lambda.len());
    prop_assert!(check_claims(&trace.diffs), "{:?}", trace.diffs.values);
    prop_assert!(trace.telescopes());
    let (back, inv) = family.inverse(&g).unwrap();
    prop_assert_eq!(&back, lambda);
    prop_assert_eq!(inv.diffs.values, trace.diffs.values);
    Ok(())
}

proptest! {
    #[test]
    fn omega_round_trip(lambda in p_omega()) {
        check_forward(MapFamily::Omega, &lambda)?;
    }

    #[test]
    fn nu_round_trip(lambda in p_nu()) {
        check_forward(MapFamily::Nu, &lambda)?;
        let (g, _) = MapFamily::Nu.forward(&lambda).unwrap();
        prop_assert!(g.is_distinct());
    }

    #[test]
    fn omega_inverse_round_trip(s in shape()) {
        let g = OddFerrersGraph::from_shape(s).unwrap();
        let (lambda, _) = MapFamily::Omega.inverse(&g).unwrap();
        prop_assert!(lambda.is_in_p_omega().unwrap());
        prop_assert_eq!(MapFamily::Omega.forward(&lambda).unwrap().0, g);
    }

    #[test]
    fn nu_inverse_round_trip(s in distinct_shape()) {
        let g = OddFerrersGraph::from_shape(s).unwrap();
        let (lambda, _) = MapFamily::Nu.inverse(&g).unwrap();
        prop_assert!(lambda.is_in_p_nu().unwrap());
        prop_assert_eq!(MapFamily::Nu.forward(&lambda).unwrap().0, g);
    }

    #[test]
    fn graph_statistics(s in shape()) {
        let g = OddFerrersGraph::from_shape(s.clone()).unwrap();
        prop_assert_eq!(g.size(), g.cell_sum());
        let ones = g.grid().iter().flatten().filter(|&&c| c == 1).count() as u64;
        prop_assert_eq!(g.sharp(), ones);
        prop_assert_eq!(g.conjugate().conjugate(), g.clone());
        prop_assert_eq!(g.conjugate().size(), g.size());
        let c = g.conjugate();
        prop_assert_eq!(c.shape(), &s.conjugate().unwrap());
    }

    #[test]
    fn frobenius_round_trip(s in shape()) {
        prop_assert_eq!(s.frobenius().unwrap().reconstruct(), s);
    }

    #[test]
    fn one_minus_factor_cancels(a in series(), k in 1i32..5, y in -2i32..3, z in -2i32..3) {
        let m = Monomial::new(1, y, z, k);
        let back = a.mul_one_minus(m).div_one_minus(m).unwrap();
        prop_assert!(back.first_discrepancy(&a).is_none());
    }

    #[test]
    fn q_negate_is_an_involution(a in series()) {
        prop_assert!(a.q_negate().q_negate().first_discrepancy(&a).is_none());
    }

    #[test]
    fn canonical_text_is_stable(a in series()) {
        let b = LaurentSeries::from_terms(12, a.iter().flat_map(|(q, p)| {
            p.iter().map(move |((y, z), c)| (q, y, z, c.clone())).collect::<Vec<_>>()
        }));
        prop_assert_eq!(a.canonical_text(), b.canonical_text());
    }
}
