//! Truncated Laurent series in `q` over `Z[y, 1/y, z, 1/z]`.
//!
//! A series with order `N` is known exactly for every q-degree `<= N`;
//! nothing is claimed above `N`. Products track precision the usual way:
//! `(f·g).order = min(f.order + val g, g.order + val f)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// `coeff · y^y z^z q^q`, all exponents signed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coeff: i64,
    pub y: i32,
    pub z: i32,
    pub q: i32,
}

impl Monomial {
    pub const fn new(coeff: i64, y: i32, z: i32, q: i32) -> Self {
        Self { coeff, y, z, q }
    }

    pub const fn one() -> Self {
        Self::new(1, 0, 0, 0)
    }

    pub const fn q_pow(k: i32) -> Self {
        Self::new(1, 0, 0, k)
    }

    pub fn pow(self, n: u32) -> Self {
        let e = n as i32;
        Self {
            coeff: self
                .coeff
                .checked_pow(n)
                .expect("monomial coefficient overflow"),
            y: self.y * e,
            z: self.z * e,
            q: self.q * e,
        }
    }

    /// Only unit coefficients are invertible over the integers.
    pub fn inverse(self) -> Result<Self> {
        if self.coeff.abs() != 1 {
            return Err(Error::NotInvertible("monomial coefficient is not a unit"));
        }
        Ok(Self::new(self.coeff, -self.y, -self.z, -self.q))
    }

    pub fn is_zero(self) -> bool {
        self.coeff == 0
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial {
            coeff: self
                .coeff
                .checked_mul(rhs.coeff)
                .expect("monomial coefficient overflow"),
            y: self.y + rhs.y,
            z: self.z + rhs.z,
            q: self.q + rhs.q,
        }
    }
}

impl Neg for Monomial {
    type Output = Monomial;

    fn neg(self) -> Monomial {
        Monomial {
            coeff: -self.coeff,
            ..self
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    order: i32,
    terms: BTreeMap<i32, LaurentPoly>,
}

/// First coefficient where two series disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub q: i32,
    pub y: i32,
    pub z: i32,
    #[serde(with = "bigint_string")]
    pub lhs: BigInt,
    #[serde(with = "bigint_string")]
    pub rhs: BigInt,
}

impl LaurentSeries {
    pub fn zero(order: i32) -> Self {
        Self {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: i32) -> Self {
        Self::from_monomial(Monomial::one(), order)
    }

    pub fn from_monomial(m: Monomial, order: i32) -> Self {
        let mut s = Self::zero(order);
        if m.q <= order && m.coeff != 0 {
            s.terms
                .insert(m.q, LaurentPoly::monomial(m.coeff, m.y, m.z));
        }
        s
    }

    /// Builds a series from `(q, y, z, coeff)` terms; repeated keys add.
    pub fn from_terms<I>(order: i32, terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, i32, i32, BigInt)>,
    {
        let mut s = Self::zero(order);
        for (q, y, z, c) in terms {
            if q <= order {
                s.add_at(q, (y, z), &c);
            }
        }
        s
    }

    pub fn order(&self) -> i32 {
        self.order
    }

    /// Lowest q-degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    fn val_bound(&self) -> i32 {
        self.valuation().unwrap_or(self.order + 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient polynomial of `q^d`, zero if absent.
    pub fn poly(&self, d: i32) -> Option<&LaurentPoly> {
        self.terms.get(&d)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, &LaurentPoly)> {
        self.terms.iter().map(|(&d, p)| (d, p))
    }

    pub fn coefficient(&self, q: i32, y: i32, z: i32) -> Result<BigInt> {
        if q > self.order {
            return Err(Error::OutOfOrder {
                requested: q,
                order: self.order,
            });
        }
        Ok(self
            .terms
            .get(&q)
            .map(|p| p.coefficient(y, z))
            .unwrap_or_default())
    }

    pub fn add_at(&mut self, q: i32, exps: (i32, i32), c: &BigInt) {
        if q > self.order {
            return;
        }
        let slot = self.terms.entry(q).or_default();
        slot.add_term(exps, c);
        if slot.is_zero() {
            self.terms.remove(&q);
        }
    }

    fn add_poly_at(&mut self, q: i32, p: &LaurentPoly, c: &BigInt, dy: i32, dz: i32) {
        if q > self.order {
            return;
        }
        let slot = self.terms.entry(q).or_default();
        slot.add_shifted(p, c, dy, dz);
        if slot.is_zero() {
            self.terms.remove(&q);
        }
    }

    /// Drops everything above `order`; fails if that would claim more
    /// precision than the series has.
    pub fn truncated(&self, order: i32) -> Result<Self> {
        if order > self.order {
            return Err(Error::OutOfOrder {
                requested: order,
                order: self.order,
            });
        }
        Ok(Self {
            order,
            terms: self
                .terms
                .range(..=order)
                .map(|(&d, p)| (d, p.clone()))
                .collect(),
        })
    }

    pub fn mul_monomial(&self, m: Monomial) -> Self {
        let order = self.order + m.q;
        if m.is_zero() {
            return Self::zero(order);
        }
        let c = BigInt::from(m.coeff);
        let mut out = Self::zero(order);
        for (&d, p) in &self.terms {
            out.add_poly_at(d + m.q, p, &c, m.y, m.z);
        }
        out
    }

    /// `self · (1 − a)`.
    pub fn mul_one_minus(&self, a: Monomial) -> Self {
        let order = self.order + a.q.min(0);
        let mut out = self.truncated_lossy(order);
        let c = BigInt::from(-a.coeff);
        for (&d, p) in &self.terms {
            out.add_poly_at(d + a.q, p, &c, a.y, a.z);
        }
        out
    }

    /// `self / (1 − a)` for `a` of positive q-degree, by the recurrence
    /// `g_d = f_d + a·g_{d−k}`.
    pub fn div_one_minus(&self, a: Monomial) -> Result<Self> {
        if a.q < 1 {
            return Err(Error::NotInvertible(
                "1 - a with q-degree of a below 1 has no expansion in this ring",
            ));
        }
        let c = BigInt::from(a.coeff);
        let mut out = self.clone();
        let Some(start) = self.valuation() else {
            return Ok(out);
        };
        for d in start + a.q..=self.order {
            if let Some(prev) = out.terms.get(&(d - a.q)).cloned() {
                out.add_poly_at(d, &prev, &c, a.y, a.z);
            }
        }
        Ok(out)
    }

    fn truncated_lossy(&self, order: i32) -> Self {
        Self {
            order,
            terms: self
                .terms
                .range(..=order)
                .map(|(&d, p)| (d, p.clone()))
                .collect(),
        }
    }

    /// `q ↦ −q`: flips the sign of every odd q-degree.
    pub fn q_negate(&self) -> Self {
        Self {
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(&d, p)| (d, if d % 2 == 0 { p.clone() } else { p.neg() }))
                .collect(),
        }
    }

    /// Substitutes `y` and `z` by monomials free of `q`.
    pub fn substitute(&self, y_to: Monomial, z_to: Monomial) -> Result<Self> {
        if y_to.q != 0 || z_to.q != 0 {
            return Err(Error::Unsupported(
                "substitutions must not carry a power of q",
            ));
        }
        let mut out = Self::zero(self.order);
        for (&d, p) in &self.terms {
            let s = p
                .substitute((y_to.coeff, y_to.y, y_to.z), (z_to.coeff, z_to.y, z_to.z))
                .ok_or(Error::NotInvertible(
                    "negative power of a non-unit substitution coefficient",
                ))?;
            out.add_poly_at(d, &s, &BigInt::one(), 0, 0);
        }
        Ok(out)
    }

    pub fn first_discrepancy(&self, other: &Self) -> Option<Discrepancy> {
        let order = self.order.min(other.order);
        let empty = LaurentPoly::zero();
        let degrees: std::collections::BTreeSet<i32> = self
            .terms
            .range(..=order)
            .chain(other.terms.range(..=order))
            .map(|(&d, _)| d)
            .collect();
        for d in degrees {
            let a = self.terms.get(&d).unwrap_or(&empty);
            let b = other.terms.get(&d).unwrap_or(&empty);
            if a == b {
                continue;
            }
            let keys: std::collections::BTreeSet<(i32, i32)> =
                a.iter().chain(b.iter()).map(|(e, _)| e).collect();
            for (y, z) in keys {
                let (ca, cb) = (a.coefficient(y, z), b.coefficient(y, z));
                if ca != cb {
                    return Some(Discrepancy {
                        q: d,
                        y,
                        z,
                        lhs: ca,
                        rhs: cb,
                    });
                }
            }
        }
        None
    }

    /// One line per q-degree: `q^d: <poly>`, ascending, followed by the
    /// truncation marker.
    pub fn canonical_text(&self) -> String {
        let mut out = String::new();
        for (d, p) in &self.terms {
            out.push_str(&format!("q^{d}: {p}\n"));
        }
        out.push_str(&format!("O(q^{})\n", self.order + 1));
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<SeriesTermJson> = self
            .terms
            .iter()
            .map(|(&q, p)| SeriesTermJson {
                q,
                terms: p
                    .iter()
                    .map(|((y, z), c)| CoeffJson {
                        y,
                        z,
                        c: c.to_string(),
                    })
                    .collect(),
            })
            .collect();
        serde_json::to_value(entries).expect("series json is always serializable")
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesTermJson {
    q: i32,
    terms: Vec<CoeffJson>,
}

#[derive(Serialize, Deserialize)]
struct CoeffJson {
    y: i32,
    z: i32,
    c: String,
}

mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (&d, p)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let q = match d {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{d}"),
            };
            let simple = p.len() == 1;
            match (p.as_constant(), q.is_empty()) {
                (Some(c), true) => write!(f, "{c}")?,
                (Some(c), false) if c.is_one() => write!(f, "{q}")?,
                (_, true) => write!(f, "{p}")?,
                _ if simple => write!(f, "{p}*{q}")?,
                _ => write!(f, "({p})*{q}")?,
            }
        }
        if !self.terms.is_empty() {
            f.write_str(" + ")?;
        }
        write!(f, "O(q^{})", self.order + 1)
    }
}

impl Add for &LaurentSeries {
    type Output = LaurentSeries;

    fn add(self, rhs: &LaurentSeries) -> LaurentSeries {
        let order = self.order.min(rhs.order);
        let mut out = self.truncated_lossy(order);
        for (&d, p) in rhs.terms.range(..=order) {
            out.add_poly_at(d, p, &BigInt::one(), 0, 0);
        }
        out
    }
}

impl Sub for &LaurentSeries {
    type Output = LaurentSeries;

    fn sub(self, rhs: &LaurentSeries) -> LaurentSeries {
        self + &(-rhs)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;

    fn neg(self) -> LaurentSeries {
        LaurentSeries {
            order: self.order,
            terms: self.terms.iter().map(|(&d, p)| (d, p.neg())).collect(),
        }
    }
}

impl Mul for &LaurentSeries {
    type Output = LaurentSeries;

    fn mul(self, rhs: &LaurentSeries) -> LaurentSeries {
        let order = (self.order + rhs.val_bound()).min(rhs.order + self.val_bound());
        let mut out = LaurentSeries::zero(order);
        for (&da, pa) in &self.terms {
            for (&db, pb) in rhs.terms.range(..=order - da) {
                let prod = pa.mul(pb);
                out.add_poly_at(da + db, &prod, &BigInt::one(), 0, 0);
            }
        }
        out
    }
}

/// `(a; q^step)_n = ∏_{k<n} (1 − a·q^{step·k})`, truncated at `order`.
pub fn poch(a: Monomial, step: u32, n: u32, order: i32) -> LaurentSeries {
    let mut out = LaurentSeries::one(order);
    for k in 0..n {
        out = out.mul_one_minus(a * Monomial::q_pow(step as i32 * k as i32));
    }
    out
}

/// `(a; q^step)_∞` truncated at `order`; factors of q-degree above `order`
/// are identically 1 and skipped.
pub fn poch_inf(a: Monomial, step: u32, order: i32) -> Result<LaurentSeries> {
    let n = inf_factor_count(a, step, order)?;
    Ok(poch(a, step, n, order))
}

/// `1 / (a; q^step)_n`, built factor by factor.
pub fn poch_inv(a: Monomial, step: u32, n: u32, order: i32) -> Result<LaurentSeries> {
    div_poch(&LaurentSeries::one(order), a, step, n)
}

pub fn poch_inf_inv(a: Monomial, step: u32, order: i32) -> Result<LaurentSeries> {
    let n = inf_factor_count(a, step, order)?;
    poch_inv(a, step, n, order)
}

/// `f / (a; q^step)_n`.
pub fn div_poch(f: &LaurentSeries, a: Monomial, step: u32, n: u32) -> Result<LaurentSeries> {
    let mut out = f.clone();
    for k in 0..n {
        out = out.div_one_minus(a * Monomial::q_pow(step as i32 * k as i32))?;
    }
    Ok(out)
}

/// `f · (a; q^step)_n`.
pub fn mul_poch(f: &LaurentSeries, a: Monomial, step: u32, n: u32) -> LaurentSeries {
    let mut out = f.clone();
    for k in 0..n {
        out = out.mul_one_minus(a * Monomial::q_pow(step as i32 * k as i32));
    }
    out
}

/// Number of factors of `(a; q^step)_∞` that differ from 1 below `order`.
pub fn inf_factor_count(a: Monomial, step: u32, order: i32) -> Result<u32> {
    if a.q < 1 || step == 0 {
        return Err(Error::NonConvergent { q_exp: a.q, step });
    }
    if a.q > order {
        return Ok(0);
    }
    Ok(((order - a.q) / step as i32 + 1) as u32)
}

/// Inverse of a series whose constant term is ±1 and which has no
/// negative q-degrees.
pub fn geom_inverse(f: &LaurentSeries, order: i32) -> Result<LaurentSeries> {
    if f.valuation().is_some_and(|v| v < 0) {
        return Err(Error::NotInvertible("series has negative q-degrees"));
    }
    let c0 = f
        .poly(0)
        .and_then(LaurentPoly::as_constant)
        .ok_or(Error::NotInvertible(
            "constant term is not an integer constant",
        ))?;
    if !(c0.is_one() || c0 == -BigInt::one()) {
        return Err(Error::NotInvertible("constant term is not 1 or -1"));
    }
    let order = order.min(f.order());
    let mut g: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
    g.insert(0, LaurentPoly::constant(c0.clone()));
    for k in 1..=order {
        let mut acc = LaurentPoly::zero();
        for (j, fj) in f.terms.range(1..=k) {
            if let Some(gk) = g.get(&(k - j)) {
                acc.add_assign_ref(&fj.mul(gk));
            }
        }
        // g_k = −c0⁻¹ Σ f_j g_{k−j}, and c0⁻¹ = c0 for units
        let mut gk = LaurentPoly::zero();
        gk.add_shifted(&acc, &-c0.clone(), 0, 0);
        if !gk.is_zero() {
            g.insert(k, gk);
        }
    }
    Ok(LaurentSeries { order, terms: g })
}

/// Sums `term(n, order)` over all `n` whose certified lower bound
/// `min_qdeg(n)` is at most `order`. The bound must be nondecreasing; the
/// first `n` exceeding `order` ends the sum.
pub fn sum_series<B, T>(order: i32, min_qdeg: B, mut term: T) -> Result<LaurentSeries>
where
    B: Fn(u32) -> i64,
    T: FnMut(u32, i32) -> Result<LaurentSeries>,
{
    let cap = sum_cap(order);
    let mut acc = LaurentSeries::zero(order);
    for n in 0..cap {
        let bound = min_qdeg(n);
        if bound > i64::from(order) {
            return Ok(acc);
        }
        let t = term(n, order)?;
        if let Some(v) = t.valuation() {
            if i64::from(v) < bound {
                return Err(Error::BoundViolated {
                    n,
                    bound,
                    actual: v,
                });
            }
        }
        if t.order() < order {
            return Err(Error::OutOfOrder {
                requested: order,
                order: t.order(),
            });
        }
        acc = &acc + &t;
    }
    Err(Error::Divergence { order, cap })
}

fn sum_cap(order: i32) -> u32 {
    (order.max(0) as u32 + 1) * 4 + 16
}

pub fn substitute_q_negate(f: &LaurentSeries) -> LaurentSeries {
    f.q_negate()
}
