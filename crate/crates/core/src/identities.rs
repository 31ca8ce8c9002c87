//! Registry of named q-series identities, each checked by building both
//! sides independently and comparing every coefficient.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::mock_theta as mt;
use crate::series::{Discrepancy, LaurentSeries};

pub type Builder = fn(i32) -> Result<LaurentSeries>;

#[derive(Clone, Copy, Debug)]
pub struct IdentityEntry {
    /// Stable snake-case key.
    pub name: &'static str,
    /// The identity in plain text.
    pub formula: &'static str,
    /// Variables besides `q` that appear, e.g. `"yz"`.
    pub variables: &'static str,
    pub lhs: Builder,
    pub rhs: Builder,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub name: String,
    pub order: i32,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub discrepancy: Option<Discrepancy>,
}

macro_rules! entry {
    ($name:literal, $vars:literal, $formula:literal, $lhs:path, $rhs:path) => {
        IdentityEntry {
            name: $name,
            formula: $formula,
            variables: $vars,
            lhs: $lhs,
            rhs: $rhs,
        }
    };
}

static REGISTRY: &[IdentityEntry] = &[
    entry!(
        "andrews_omega_z",
        "z",
        "ω(z;q) = Σ z^n q^{2n²+2n}/((q;q²)_{n+1}(zq;q²)_{n+1}) = Σ z^n q^n/(q;q²)_{n+1}",
        mt::omega_z,
        mt::omega_z_single_denominator
    ),
    entry!(
        "andrews_nu_z",
        "z",
        "ν(z;q) = Σ q^{n²+n}/(−zq;q²)_{n+1} = Σ (q/z;q²)_n (−zq)^n",
        mt::nu_z,
        mt::nu_z_finite_products
    ),
    entry!(
        "ay_nu1",
        "z",
        "ν₁(z;q) = Σ z^n q^{n²+n}/(−q;q²)_{n+1} = Σ (zq;q²)_n (−q)^n",
        mt::nu1_z,
        mt::nu1_z_finite_products
    ),
    entry!(
        "base_omega",
        "",
        "Σ_{n≥1} q^n/((q^n;q)_{n+1}(q^{2n+2};q²)_∞) = Σ q^{2n²+2n+1}/(q;q²)²_{n+1}",
        mt::p_omega_single,
        mt::q_omega
    ),
    entry!(
        "base_nu",
        "",
        "Σ q^n (−q^{n+1};q)_n (−q^{2n+2};q²)_∞ = Σ q^{n²+n}/(q;q²)_{n+1}",
        mt::p_nu_single,
        mt::nu_at_neg_q
    ),
    entry!(
        "thm1_omega",
        "z",
        "Σ_{n≥1} q^n/((zq^n;q)_{n+1}(zq^{2n+2};q²)_∞) = Σ z^n q^{2n²+2n+1}/((q;q²)_{n+1}(zq;q²)_{n+1})",
        mt::p_omega_z,
        mt::q_omega_z
    ),
    entry!(
        "thm1_nu",
        "z",
        "Σ q^n (−zq^{n+1};q)_n (−zq^{2n+2};q²)_∞ = Σ z^n q^{n²+n}/(q;q²)_{n+1}",
        mt::p_nu_gf,
        mt::nu_rows
    ),
    entry!(
        "thm1_omega_shifted",
        "z",
        "Σ q^n/((zq^{n+1};q)_{n+2}(zq^{2n+4};q²)_∞) = Σ z^n q^{2n²+2n}/((q;q²)_{n+1}(zq;q²)_{n+1})",
        mt::p_omega_gf,
        mt::omega_z
    ),
    entry!(
        "thm3_newnu",
        "yz",
        "ν(y,z;q) = Σ y^n z^n q^{n²+n}/(yq;q²)_{n+1} = Σ (−zq;q²)_n (yq)^n",
        mt::nu_yz,
        mt::nu_yz_finite_products
    ),
    entry!(
        "thm4_newomega_y",
        "yz",
        "ω(y,z;q) = Σ y^n z^n q^{2n²+2n}/((yq;q²)_{n+1}(zq;q²)_{n+1}) = Σ y^n q^n/(zq;q²)_{n+1}",
        mt::omega_yz,
        mt::omega_yz_y_sum
    ),
    entry!(
        "thm4_newomega_z",
        "yz",
        "ω(y,z;q) = Σ z^n q^n/(yq;q²)_{n+1}",
        mt::omega_yz,
        mt::omega_yz_z_sum
    ),
    entry!(
        "cor21_rightofnu",
        "z",
        "Σ z^n q^{n²+n}/(q;q²)_{n+1} = Σ (−zq;q²)_n q^n",
        mt::nu_rows,
        mt::nu_rows_finite_products
    ),
    entry!(
        "cor21_dpcolumn",
        "z",
        "Σ z^n q^{n²+n}/(zq;q²)_{n+1} = Σ (−q;q²)_n (zq)^n",
        mt::nu_cols,
        mt::nu_cols_finite_products
    ),
    entry!(
        "cor21_dpcolumn_minus_row",
        "z",
        "Σ q^{n²+n}/(zq;q²)_{n+1} = Σ (−q/z;q²)_n (zq)^n",
        mt::nu_cols_minus_rows,
        mt::nu_cols_minus_rows_finite_products
    ),
    entry!(
        "cor21_dpcolumn_plus_row",
        "z",
        "Σ z^{2n} q^{n²+n}/(zq;q²)_{n+1} = Σ (−zq;q²)_n (zq)^n",
        mt::nu_sharp,
        mt::nu_sharp_finite_products
    ),
    entry!(
        "signed_dpcolumn",
        "z",
        "Σ z^n q^{n²+n}/(−zq;q²)_{n+1} = Σ (q;q²)_n (−zq)^n",
        mt::nu_cols_signed,
        mt::nu_cols_signed_finite_products
    ),
    entry!(
        "signed_dpcolumn_plus_row",
        "z",
        "Σ z^{2n} q^{n²+n}/(−zq;q²)_{n+1} = Σ (zq;q²)_n (−zq)^n",
        mt::nu_sharp_signed,
        mt::nu_sharp_signed_finite_products
    ),
    entry!(
        "cor22_opcolumn_rows",
        "z",
        "Σ z^n q^{2n²+2n}/((q;q²)_{n+1}(zq;q²)_{n+1}) = Σ q^n/(zq;q²)_{n+1}",
        mt::omega_z,
        mt::omega_rows
    ),
    entry!(
        "cor22_opcolumn_conjugate",
        "z",
        "Σ q^n/(zq;q²)_{n+1} = Σ z^n q^n/(q;q²)_{n+1}",
        mt::omega_rows,
        mt::omega_z_single_denominator
    ),
    entry!(
        "cor22_opcolumn_minus_row",
        "z",
        "Σ q^{2n²+2n}/((q/z;q²)_{n+1}(zq;q²)_{n+1}) = Σ z^{−n} q^n/(zq;q²)_{n+1}",
        mt::omega_rows_minus_cols,
        mt::omega_rows_minus_cols_z_sum
    ),
    entry!(
        "cor22_opcolumn_minus_row_conjugate",
        "z",
        "Σ q^{2n²+2n}/((q/z;q²)_{n+1}(zq;q²)_{n+1}) = Σ z^n q^n/(q/z;q²)_{n+1}",
        mt::omega_rows_minus_cols,
        mt::omega_cols_minus_rows_z_sum
    ),
    entry!(
        "cor22_opcolumn_plus_row",
        "z",
        "Σ z^{2n} q^{2n²+2n}/(zq;q²)²_{n+1} = Σ z^n q^n/(zq;q²)_{n+1}",
        mt::omega_sharp,
        mt::omega_sharp_z_sum
    ),
    entry!(
        "signed_oprow",
        "z",
        "Σ z^n q^{2n²+2n}/((−q;q²)_{n+1}(−zq;q²)_{n+1}) = Σ (−q)^n/(−zq;q²)_{n+1}",
        mt::omega_z_signed,
        mt::omega_rows_signed
    ),
    entry!(
        "signed_opcol",
        "z",
        "Σ z^n q^{2n²+2n}/((−q;q²)_{n+1}(−zq;q²)_{n+1}) = Σ z^n (−q)^n/(−q;q²)_{n+1}",
        mt::omega_z_signed,
        mt::omega_cols_signed
    ),
    entry!(
        "signed_oprow_minus_col",
        "z",
        "Σ q^{2n²+2n}/((−q/z;q²)_{n+1}(−zq;q²)_{n+1}) = Σ z^{−n} (−q)^n/(−zq;q²)_{n+1}",
        mt::omega_rows_minus_cols_signed,
        mt::omega_rows_minus_cols_signed_z_sum
    ),
    entry!(
        "signed_opcol_minus_row",
        "z",
        "Σ q^{2n²+2n}/((−q/z;q²)_{n+1}(−zq;q²)_{n+1}) = Σ z^n (−q)^n/(−q/z;q²)_{n+1}",
        mt::omega_rows_minus_cols_signed,
        mt::omega_cols_minus_rows_signed_z_sum
    ),
    entry!(
        "signed_oprow_plus_col",
        "z",
        "Σ z^{2n} q^{2n²+2n}/(−zq;q²)²_{n+1} = Σ z^n (−q)^n/(−zq;q²)_{n+1}",
        mt::omega_sharp_signed,
        mt::omega_sharp_signed_z_sum
    ),
    entry!(
        "choi_nu_bar",
        "yz",
        "ν(y,z;q) = ν̄(α,z;q) with α² = −q²/z, z² = yzq²",
        mt::nu_yz,
        mt::nu_yz_via_choi
    ),
    entry!(
        "choi_omega_bar",
        "yz",
        "ω(y,z;q) = z⁻² ω̄(α,z;q) with α² = yq²/z, z² = zq²",
        mt::omega_yz,
        mt::omega_yz_via_choi
    ),
    entry!(
        "choi_nu3_reduced",
        "yz",
        "Σ (−zq;q²)_n (yq)^n − 1 = Σ_{n≥1} α^{2n} q^{−n} (−q³/(αz)²;q²)_n with α² = yq², z² = 1/(yz)",
        mt::nu_yz_finite_products_minus_one,
        mt::nu3_sum_specialized
    ),
];

pub fn registry() -> &'static [IdentityEntry] {
    REGISTRY
}

pub fn lookup(name: &str) -> Option<&'static IdentityEntry> {
    REGISTRY.iter().find(|e| e.name == name)
}

pub fn require(name: &str) -> Result<&'static IdentityEntry> {
    lookup(name).ok_or_else(|| Error::UnknownIdentity(name.to_owned()))
}

/// Compares two already-built sides.
pub fn compare(name: &str, lhs: &LaurentSeries, rhs: &LaurentSeries) -> VerificationReport {
    let discrepancy = lhs.first_discrepancy(rhs);
    VerificationReport {
        name: name.to_owned(),
        order: lhs.order().min(rhs.order()),
        pass: discrepancy.is_none(),
        discrepancy,
    }
}

pub fn verify(entry: &IdentityEntry, order: i32) -> Result<VerificationReport> {
    if order < 0 {
        return Err(Error::Unsupported("truncation order must be nonnegative"));
    }
    let lhs = (entry.lhs)(order)?;
    let rhs = (entry.rhs)(order)?;
    Ok(compare(entry.name, &lhs, &rhs))
}

/// Verifies every registry entry; reports come back in registry order.
pub fn verify_all(order: i32, exec: Exec) -> Result<Vec<VerificationReport>> {
    exec.map(REGISTRY.to_vec(), |e| verify(&e, order))
        .into_iter()
        .collect()
}

pub fn coefficient_of(f: &LaurentSeries, q: i32, y: i32, z: i32) -> Result<BigInt> {
    f.coefficient(q, y, z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Monomial;
    use std::collections::HashSet;

    const ONE: Monomial = Monomial::one();

    fn mono(c: i64, y: i32, z: i32) -> Monomial {
        Monomial::new(c, y, z, 0)
    }

    #[test]
    fn registry_names_are_unique_snake_case() {
        let names: HashSet<_> = registry().iter().map(|e| e.name).collect();
        assert_eq!(names.len(), registry().len());
        assert!(registry().len() >= 22);
        for n in names {
            assert!(n
                .chars()
                .all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_'));
        }
    }

    #[test]
    fn lookups() {
        assert_eq!(lookup("thm3_newnu").unwrap().variables, "yz");
        assert!(lookup("thm1_nu").is_some());
        assert!(lookup("nonexistent").is_none());
        assert_eq!(
            require("nonexistent").unwrap_err(),
            Error::UnknownIdentity("nonexistent".into())
        );
    }

    #[test]
    fn every_entry_passes_at_low_order() {
        for e in registry() {
            let r = verify(e, 12).unwrap();
            assert!(r.pass, "{} failed: {:?}", e.name, r.discrepancy);
            assert_eq!(r.order, 12);
        }
    }

    #[test]
    fn perturbation_is_caught() {
        let e = lookup("thm3_newnu").unwrap();
        let lhs = (e.lhs)(12).unwrap();
        let mut rhs = (e.rhs)(12).unwrap();
        rhs.add_at(5, (0, 0), &BigInt::from(1));
        let r = compare(e.name, &lhs, &rhs);
        assert!(!r.pass);
        let d = r.discrepancy.unwrap();
        assert_eq!(d.q, 5);
        assert_eq!(&d.rhs - &d.lhs, BigInt::from(1));
    }

    #[test]
    fn report_json_shape() {
        let r = verify(lookup("ay_nu1").unwrap(), 4).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"name": "ay_nu1", "order": 4, "pass": true})
        );
    }

    #[test]
    fn trivariate_specializations() {
        let n = 14;
        let nu = mt::nu_yz(n).unwrap();
        let sub = |f: &LaurentSeries, y, z| f.substitute(y, z).unwrap();
        assert_eq!(sub(&nu, ONE, mono(1, 0, 1)), mt::nu_rows(n).unwrap());
        assert_eq!(
            sub(&nu, mono(-1, 0, 1), mono(-1, 0, -1)),
            mt::nu_z(n).unwrap()
        );
        assert_eq!(
            sub(&nu, mono(-1, 0, 0), mono(-1, 0, 1)),
            mt::nu1_z(n).unwrap()
        );
        assert_eq!(sub(&nu, mono(1, 0, 1), ONE), mt::nu_cols(n).unwrap());
        assert_eq!(
            sub(&nu, mono(1, 0, 1), mono(1, 0, -1)),
            mt::nu_cols_minus_rows(n).unwrap()
        );
        assert_eq!(
            sub(&nu, mono(1, 0, 1), mono(1, 0, 1)),
            mt::nu_sharp(n).unwrap()
        );

        let rhs = mt::nu_yz_finite_products(n).unwrap();
        assert_eq!(
            sub(&rhs, ONE, mono(1, 0, 1)),
            mt::nu_rows_finite_products(n).unwrap()
        );
        assert_eq!(
            sub(&rhs, mono(1, 0, 1), ONE),
            mt::nu_cols_finite_products(n).unwrap()
        );

        let om = mt::omega_yz(n).unwrap();
        assert_eq!(sub(&om, ONE, mono(1, 0, 1)), mt::omega_z(n).unwrap());
        assert_eq!(
            sub(&om, mono(1, 0, -1), mono(1, 0, 1)),
            mt::omega_rows_minus_cols(n).unwrap()
        );
        assert_eq!(
            sub(&om, mono(1, 0, 1), mono(1, 0, 1)),
            mt::omega_sharp(n).unwrap()
        );
        let ysum = mt::omega_yz_y_sum(n).unwrap();
        assert_eq!(sub(&ysum, ONE, mono(1, 0, 1)), mt::omega_rows(n).unwrap());
        assert_eq!(
            sub(&ysum, mono(1, 0, -1), mono(1, 0, 1)),
            mt::omega_rows_minus_cols_z_sum(n).unwrap()
        );
    }

    #[test]
    fn signed_identities_are_q_negations() {
        let n = 16;
        let pairs: [(Builder, Builder); 7] = [
            (mt::nu_cols, mt::nu_cols_signed),
            (mt::nu_sharp, mt::nu_sharp_signed),
            (mt::omega_z, mt::omega_z_signed),
            (mt::omega_rows, mt::omega_rows_signed),
            (mt::omega_z_single_denominator, mt::omega_cols_signed),
            (mt::omega_rows_minus_cols, mt::omega_rows_minus_cols_signed),
            (mt::omega_sharp, mt::omega_sharp_signed),
        ];
        for (plain, signed) in pairs {
            assert_eq!(plain(n).unwrap().q_negate(), signed(n).unwrap());
        }
    }

    #[test]
    fn p_omega_and_p_nu_coefficients() {
        let po = mt::p_omega_gf(30).unwrap();
        assert_eq!(coefficient_of(&po, 15, 0, 3).unwrap(), BigInt::from(12));
        let pn = mt::p_nu_gf(30).unwrap();
        assert_eq!(coefficient_of(&pn, 30, 0, 4).unwrap(), BigInt::from(10));
        assert_eq!(coefficient_of(&pn, 0, 0, 0).unwrap(), BigInt::from(1));
        assert!(matches!(
            coefficient_of(&pn, 31, 0, 0),
            Err(Error::OutOfOrder { .. })
        ));
    }
}
