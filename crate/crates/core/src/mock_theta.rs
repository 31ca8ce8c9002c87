//! Named q-series: the bivariate and trivariate mock theta generalizations
//! and every product/sum form they are compared against.
//!
//! Each builder transcribes one displayed formula. Builders never derive
//! one side of an identity from the other.

use crate::error::Result;
use crate::series::{div_poch, inf_factor_count, mul_poch, sum_series, LaurentSeries, Monomial};

const fn m(c: i64, y: i32, z: i32, q: i32) -> Monomial {
    Monomial::new(c, y, z, q)
}

const Q: Monomial = m(1, 0, 0, 1);
const NEG_Q: Monomial = m(-1, 0, 0, 1);
const Y: Monomial = m(1, 1, 0, 0);
const Z: Monomial = m(1, 0, 1, 0);
const YQ: Monomial = m(1, 1, 0, 1);
const ZQ: Monomial = m(1, 0, 1, 1);
const NEG_ZQ: Monomial = m(-1, 0, 1, 1);
const Q_OVER_Z: Monomial = m(1, 0, -1, 1);
const NEG_Q_OVER_Z: Monomial = m(-1, 0, -1, 1);

#[derive(Clone, Copy, Debug)]
enum Count {
    Finite(u32),
    Infinite,
}

/// `num · ∏ (a; q^s)_n / ∏ (b; q^t)_k` as one summand.
#[derive(Clone, Debug)]
struct Term {
    num: Monomial,
    times: Vec<(Monomial, u32, Count)>,
    over: Vec<(Monomial, u32, Count)>,
}

impl Term {
    fn new(num: Monomial) -> Self {
        Self {
            num,
            times: Vec::new(),
            over: Vec::new(),
        }
    }

    fn times(mut self, a: Monomial, step: u32, n: u32) -> Self {
        self.times.push((a, step, Count::Finite(n)));
        self
    }

    fn times_inf(mut self, a: Monomial, step: u32) -> Self {
        self.times.push((a, step, Count::Infinite));
        self
    }

    fn over(mut self, a: Monomial, step: u32, n: u32) -> Self {
        self.over.push((a, step, Count::Finite(n)));
        self
    }

    fn over_inf(mut self, a: Monomial, step: u32) -> Self {
        self.over.push((a, step, Count::Infinite));
        self
    }

    fn build(&self, order: i32) -> Result<LaurentSeries> {
        // the numerator shifts everything up by num.q
        let room = order - self.num.q;
        if room < 0 || self.num.is_zero() {
            return Ok(LaurentSeries::zero(order));
        }
        let mut s = LaurentSeries::one(room);
        for &(a, step, count) in &self.times {
            let n = match count {
                Count::Finite(n) => n,
                Count::Infinite => inf_factor_count(a, step, room)?,
            };
            s = mul_poch(&s, a, step, n);
        }
        for &(a, step, count) in &self.over {
            let n = match count {
                Count::Finite(n) => n,
                Count::Infinite => inf_factor_count(a, step, room)?,
            };
            s = div_poch(&s, a, step, n)?;
        }
        s.mul_monomial(self.num).truncated(order)
    }
}

fn sum<B, F>(order: i32, bound: B, term: F) -> Result<LaurentSeries>
where
    B: Fn(i64) -> i64,
    F: Fn(u32) -> Term,
{
    sum_series(order, |n| bound(i64::from(n)), |n, o| term(n).build(o))
}

fn qn(k: i64) -> Monomial {
    Monomial::q_pow(k as i32)
}

fn i(n: u32) -> i64 {
    i64::from(n)
}

// ---------------------------------------------------------------------------
// Andrews' bivariate functions

/// `ω(z;q) = Σ z^n q^{2n²+2n} / ((q;q²)_{n+1} (zq;q²)_{n+1})`.
pub fn omega_z(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| 2 * n * n + 2 * n,
        |n| {
            let k = i(n);
            Term::new(Z.pow(n) * qn(2 * k * k + 2 * k))
                .over(Q, 2, n + 1)
                .over(ZQ, 2, n + 1)
        },
    )
}

/// `Σ z^n q^n / (q;q²)_{n+1}`.
pub fn omega_z_single_denominator(order: i32) -> Result<LaurentSeries> {
    sum(order, |n| n, |n| Term::new(ZQ.pow(n)).over(Q, 2, n + 1))
}

/// `ν(z;q) = Σ q^{n²+n} / (−zq;q²)_{n+1}`.
pub fn nu_z(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| n * n + n,
        |n| {
            let k = i(n);
            Term::new(qn(k * k + k)).over(NEG_ZQ, 2, n + 1)
        },
    )
}

/// `Σ (q/z;q²)_n (−zq)^n`.
pub fn nu_z_finite_products(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| n,
        |n| Term::new(NEG_ZQ.pow(n)).times(Q_OVER_Z, 2, n),
    )
}

/// `ν₁(z;q) = Σ z^n q^{n²+n} / (−q;q²)_{n+1}`.
pub fn nu1_z(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| n * n + n,
        |n| {
            let k = i(n);
            Term::new(Z.pow(n) * qn(k * k + k)).over(NEG_Q, 2, n + 1)
        },
    )
}

/// `Σ (zq;q²)_n (−q)^n`.
pub fn nu1_z_finite_products(order: i32) -> Result<LaurentSeries> {
    sum(order, |n| n, |n| Term::new(NEG_Q.pow(n)).times(ZQ, 2, n))
}

// ---------------------------------------------------------------------------
// Partition-side generating functions

/// `Σ_{n≥1} q^n / ((q^n;q)_{n+1} (q^{2n+2};q²)_∞)`.
pub fn p_omega_single(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| n,
        |n| {
            if n == 0 {
                return Term::new(m(0, 0, 0, 0));
            }
            let k = i(n);
            Term::new(qn(k))
                .over(qn(k), 1, n + 1)
                .over_inf(qn(2 * k + 2), 2)
        },
    )
}

/// `q·ω(q) = Σ q^{2n²+2n+1} / (q;q²)²_{n+1}`.
pub fn q_omega(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| 2 * n * n + 2 * n + 1,
        |n| {
            let k = i(n);
            Term::new(qn(2 * k * k + 2 * k + 1))
                .over(Q, 2, n + 1)
                .over(Q, 2, n + 1)
        },
    )
}

/// `Σ q^n (−q^{n+1};q)_n (−q^{2n+2};q²)_∞`.
pub fn p_nu_single(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| n,
        |n| {
            let k = i(n);
            Term::new(qn(k))
                .times(-qn(k + 1), 1, n)
                .times_inf(-qn(2 * k + 2), 2)
        },
    )
}

/// `ν(−q) = Σ q^{n²+n} / (q;q²)_{n+1}`.
pub fn nu_at_neg_q(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| n * n + n,
        |n| {
            let k = i(n);
            Term::new(qn(k * k + k)).over(Q, 2, n + 1)
        },
    )
}

/// `Σ_{n≥1} q^n / ((zq^n;q)_{n+1} (zq^{2n+2};q²)_∞)`.
pub fn p_omega_z(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| n,
        |n| {
            if n == 0 {
                return Term::new(m(0, 0, 0, 0));
            }
            let k = i(n);
            Term::new(qn(k))
                .over(Z * qn(k), 1, n + 1)
                .over_inf(Z * qn(2 * k + 2), 2)
        },
    )
}

/// `Σ z^n q^{2n²+2n+1} / ((q;q²)_{n+1} (zq;q²)_{n+1})`.
pub fn q_omega_z(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| 2 * n * n + 2 * n + 1,
        |n| {
            let k = i(n);
            Term::new(Z.pow(n) * qn(2 * k * k + 2 * k + 1))
                .over(Q, 2, n + 1)
                .over(ZQ, 2, n + 1)
        },
    )
}

/// Generating function of `P_omega` by length and size:
/// `Σ_{n≥0} q^n / ((zq^{n+1};q)_{n+2} (zq^{2n+4};q²)_∞)`.
pub fn p_omega_gf(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| n,
        |n| {
            let k = i(n);
            Term::new(qn(k))
                .over(Z * qn(k + 1), 1, n + 2)
                .over_inf(Z * qn(2 * k + 4), 2)
        },
    )
}

/// Generating function of `P_nu` by length and size:
/// `Σ q^n (−zq^{n+1};q)_n (−zq^{2n+2};q²)_∞`.
pub fn p_nu_gf(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| n,
        |n| {
            let k = i(n);
            Term::new(qn(k))
                .times(-(Z * qn(k + 1)), 1, n)
                .times_inf(-(Z * qn(2 * k + 2)), 2)
        },
    )
}

/// `Σ z^n q^{n²+n} / (q;q²)_{n+1}`: distinct odd Ferrers graphs by rows.
pub fn nu_rows(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| n * n + n,
        |n| {
            let k = i(n);
            Term::new(Z.pow(n) * qn(k * k + k)).over(Q, 2, n + 1)
        },
    )
}

// ---------------------------------------------------------------------------
// Trivariate functions

/// `ν(y,z;q) = Σ y^n z^n q^{n²+n} / (yq;q²)_{n+1}`.
pub fn nu_yz(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| n * n + n,
        |n| {
            let k = i(n);
            Term::new((Y * Z).pow(n) * qn(k * k + k)).over(YQ, 2, n + 1)
        },
    )
}

/// `Σ (−zq;q²)_n (yq)^n`.
pub fn nu_yz_finite_products(order: i32) -> Result<LaurentSeries> {
    sum(order, |n| n, |n| Term::new(YQ.pow(n)).times(NEG_ZQ, 2, n))
}

/// `ω(y,z;q) = Σ y^n z^n q^{2n²+2n} / ((yq;q²)_{n+1} (zq;q²)_{n+1})`.
pub fn omega_yz(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| 2 * n * n + 2 * n,
        |n| {
            let k = i(n);
            Term::new((Y * Z).pow(n) * qn(2 * k * k + 2 * k))
                .over(YQ, 2, n + 1)
                .over(ZQ, 2, n + 1)
        },
    )
}

/// `Σ y^n q^n / (zq;q²)_{n+1}`.
pub fn omega_yz_y_sum(order: i32) -> Result<LaurentSeries> {
    sum(order, |n| n, |n| Term::new(YQ.pow(n)).over(ZQ, 2, n + 1))
}

/// `Σ z^n q^n / (yq;q²)_{n+1}`.
pub fn omega_yz_z_sum(order: i32) -> Result<LaurentSeries> {
    sum(order, |n| n, |n| Term::new(ZQ.pow(n)).over(YQ, 2, n + 1))
}

// ---------------------------------------------------------------------------
// Refinements over distinct odd Ferrers graphs

/// `Σ (−zq;q²)_n q^n`.
pub fn nu_rows_finite_products(order: i32) -> Result<LaurentSeries> {
    sum(order, |n| n, |n| Term::new(Q.pow(n)).times(NEG_ZQ, 2, n))
}

/// `Σ z^n q^{n²+n} / (zq;q²)_{n+1}`: distinct graphs by columns.
pub fn nu_cols(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| n * n + n,
        |n| {
            let k = i(n);
            Term::new(Z.pow(n) * qn(k * k + k)).over(ZQ, 2, n + 1)
        },
    )
}

/// `Σ (−q;q²)_n (zq)^n`.
pub fn nu_cols_finite_products(order: i32) -> Result<LaurentSeries> {
    sum(order, |n| n, |n| Term::new(ZQ.pow(n)).times(NEG_Q, 2, n))
}

/// `Σ q^{n²+n} / (zq;q²)_{n+1}`: distinct graphs by columns minus rows.
pub fn nu_cols_minus_rows(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| n * n + n,
        |n| {
            let k = i(n);
            Term::new(qn(k * k + k)).over(ZQ, 2, n + 1)
        },
    )
}

/// `Σ (−q/z;q²)_n (zq)^n`.
pub fn nu_cols_minus_rows_finite_products(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| n,
        |n| Term::new(ZQ.pow(n)).times(NEG_Q_OVER_Z, 2, n),
    )
}

/// `Σ z^{2n} q^{n²+n} / (zq;q²)_{n+1}`: distinct graphs by number of 1s.
pub fn nu_sharp(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| n * n + n,
        |n| {
            let k = i(n);
            Term::new(Z.pow(2 * n) * qn(k * k + k)).over(ZQ, 2, n + 1)
        },
    )
}

/// `Σ (−zq;q²)_n (zq)^n`.
pub fn nu_sharp_finite_products(order: i32) -> Result<LaurentSeries> {
    sum(order, |n| n, |n| Term::new(ZQ.pow(n)).times(NEG_ZQ, 2, n))
}

/// `Σ z^n q^{n²+n} / (−zq;q²)_{n+1}`.
pub fn nu_cols_signed(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| n * n + n,
        |n| {
            let k = i(n);
            Term::new(Z.pow(n) * qn(k * k + k)).over(NEG_ZQ, 2, n + 1)
        },
    )
}

/// `Σ (q;q²)_n (−zq)^n`.
pub fn nu_cols_signed_finite_products(order: i32) -> Result<LaurentSeries> {
    sum(order, |n| n, |n| Term::new(NEG_ZQ.pow(n)).times(Q, 2, n))
}

/// `Σ z^{2n} q^{n²+n} / (−zq;q²)_{n+1}`.
pub fn nu_sharp_signed(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| n * n + n,
        |n| {
            let k = i(n);
            Term::new(Z.pow(2 * n) * qn(k * k + k)).over(NEG_ZQ, 2, n + 1)
        },
    )
}

/// `Σ (zq;q²)_n (−zq)^n`.
pub fn nu_sharp_signed_finite_products(order: i32) -> Result<LaurentSeries> {
    sum(order, |n| n, |n| Term::new(NEG_ZQ.pow(n)).times(ZQ, 2, n))
}

// ---------------------------------------------------------------------------
// Refinements over all odd Ferrers graphs

/// `Σ q^n / (zq;q²)_{n+1}`: graphs by rows.
pub fn omega_rows(order: i32) -> Result<LaurentSeries> {
    sum(order, |n| n, |n| Term::new(Q.pow(n)).over(ZQ, 2, n + 1))
}

/// `Σ q^{2n²+2n} / ((q/z;q²)_{n+1} (zq;q²)_{n+1})`.
pub fn omega_rows_minus_cols(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| 2 * n * n + 2 * n,
        |n| {
            let k = i(n);
            Term::new(qn(2 * k * k + 2 * k))
                .over(Q_OVER_Z, 2, n + 1)
                .over(ZQ, 2, n + 1)
        },
    )
}

/// `Σ z^{−n} q^n / (zq;q²)_{n+1}`.
pub fn omega_rows_minus_cols_z_sum(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| n,
        |n| Term::new(Q_OVER_Z.pow(n)).over(ZQ, 2, n + 1),
    )
}

/// `Σ z^n q^n / (q/z;q²)_{n+1}`.
pub fn omega_cols_minus_rows_z_sum(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| n,
        |n| Term::new(ZQ.pow(n)).over(Q_OVER_Z, 2, n + 1),
    )
}

/// `Σ (z^n q^{n²+n} / (zq;q²)_{n+1})²`.
pub fn omega_sharp(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| 2 * n * n + 2 * n,
        |n| {
            let k = i(n);
            Term::new((Z.pow(n) * qn(k * k + k)).pow(2))
                .over(ZQ, 2, n + 1)
                .over(ZQ, 2, n + 1)
        },
    )
}

/// `Σ z^n q^n / (zq;q²)_{n+1}`.
pub fn omega_sharp_z_sum(order: i32) -> Result<LaurentSeries> {
    sum(order, |n| n, |n| Term::new(ZQ.pow(n)).over(ZQ, 2, n + 1))
}

/// `Σ z^n q^{2n²+2n} / ((−q;q²)_{n+1} (−zq;q²)_{n+1})`.
pub fn omega_z_signed(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| 2 * n * n + 2 * n,
        |n| {
            let k = i(n);
            Term::new(Z.pow(n) * qn(2 * k * k + 2 * k))
                .over(NEG_Q, 2, n + 1)
                .over(NEG_ZQ, 2, n + 1)
        },
    )
}

/// `Σ (−q)^n / (−zq;q²)_{n+1}`.
pub fn omega_rows_signed(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| n,
        |n| Term::new(NEG_Q.pow(n)).over(NEG_ZQ, 2, n + 1),
    )
}

/// `Σ z^n (−q)^n / (−q;q²)_{n+1}`.
pub fn omega_cols_signed(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| n,
        |n| Term::new(NEG_ZQ.pow(n)).over(NEG_Q, 2, n + 1),
    )
}

/// `Σ q^{2n²+2n} / ((−q/z;q²)_{n+1} (−zq;q²)_{n+1})`.
pub fn omega_rows_minus_cols_signed(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| 2 * n * n + 2 * n,
        |n| {
            let k = i(n);
            Term::new(qn(2 * k * k + 2 * k))
                .over(NEG_Q_OVER_Z, 2, n + 1)
                .over(NEG_ZQ, 2, n + 1)
        },
    )
}

/// `Σ z^{−n} (−q)^n / (−zq;q²)_{n+1}`.
pub fn omega_rows_minus_cols_signed_z_sum(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| n,
        |n| Term::new(NEG_Q_OVER_Z.pow(n)).over(NEG_ZQ, 2, n + 1),
    )
}

/// `Σ z^n (−q)^n / (−q/z;q²)_{n+1}`.
pub fn omega_cols_minus_rows_signed_z_sum(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| n,
        |n| Term::new(NEG_ZQ.pow(n)).over(NEG_Q_OVER_Z, 2, n + 1),
    )
}

/// `Σ (z^n q^{n²+n} / (−zq;q²)_{n+1})²`.
pub fn omega_sharp_signed(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| 2 * n * n + 2 * n,
        |n| {
            let k = i(n);
            Term::new((Z.pow(n) * qn(k * k + k)).pow(2))
                .over(NEG_ZQ, 2, n + 1)
                .over(NEG_ZQ, 2, n + 1)
        },
    )
}

/// `Σ z^n (−q)^n / (−zq;q²)_{n+1}`.
pub fn omega_sharp_signed_z_sum(order: i32) -> Result<LaurentSeries> {
    sum(
        order,
        |n| n,
        |n| Term::new(NEG_ZQ.pow(n)).over(NEG_ZQ, 2, n + 1),
    )
}

// ---------------------------------------------------------------------------
// Choi's functions, evaluated at squared arguments.
//
// Both series only involve α² and z², so the arguments are passed squared;
// no square roots or branch choices are needed.

/// `ν̄(α,z;q) = Σ q^{n(n−1)} z^{2n} / (−α²z²/q³;q²)_{n+1}`.
pub fn choi_nu_bar(alpha_sq: Monomial, z_sq: Monomial, order: i32) -> Result<LaurentSeries> {
    let den = -(alpha_sq * z_sq * Monomial::q_pow(-3));
    let zq = i64::from(z_sq.q);
    sum(
        order,
        |n| n * (n - 1) + n * zq,
        |n| {
            let k = i(n);
            Term::new(qn(k * (k - 1)) * z_sq.pow(n)).over(den, 2, n + 1)
        },
    )
}

/// `ω̄(α,z;q) = Σ q^{2(n−1)²−6} α^{2n} z^{4(n+1)} / ((z²/q;q²)_{n+1} (α²z²/q³;q²)_{n+1})`.
pub fn choi_omega_bar(alpha_sq: Monomial, z_sq: Monomial, order: i32) -> Result<LaurentSeries> {
    let den1 = z_sq * Monomial::q_pow(-1);
    let den2 = alpha_sq * z_sq * Monomial::q_pow(-3);
    let (aq, zq) = (i64::from(alpha_sq.q), i64::from(z_sq.q));
    sum(
        order,
        |n| 2 * (n - 1) * (n - 1) - 6 + n * aq + 2 * (n + 1) * zq,
        |n| {
            let k = i(n);
            Term::new(qn(2 * (k - 1) * (k - 1) - 6) * alpha_sq.pow(n) * z_sq.pow(2 * (n + 1)))
                .over(den1, 2, n + 1)
                .over(den2, 2, n + 1)
        },
    )
}

/// The sum in Choi's `ν₃(α,z;q)` without its rational prefactor
/// `1/(1+α²z²/q³)`: `Σ_{n≥1} α^{2n} q^{−n} (−q³/(αz)²;q²)_n`.
pub fn choi_nu3_sum(alpha_sq: Monomial, z_sq: Monomial, order: i32) -> Result<LaurentSeries> {
    let inner = -(Monomial::q_pow(3) * (alpha_sq * z_sq).inverse()?);
    let aq = i64::from(alpha_sq.q);
    sum(
        order,
        |n| n * (aq - 1),
        |n| {
            if n == 0 {
                return Term::new(m(0, 0, 0, 0));
            }
            Term::new(alpha_sq.pow(n) * qn(-i(n))).times(inner, 2, n)
        },
    )
}

/// `ν̄(iq/√z, √(yz)·q; q)`: `α² = −q²/z`, `z² = yzq²`.
pub fn nu_yz_via_choi(order: i32) -> Result<LaurentSeries> {
    choi_nu_bar(m(-1, 0, -1, 2), m(1, 1, 1, 2), order)
}

/// `z^{−2} ω̄(√y·q/√z, √z·q; q)`: `α² = yq²/z`, `z² = zq²`.
pub fn omega_yz_via_choi(order: i32) -> Result<LaurentSeries> {
    Ok(choi_omega_bar(m(1, 1, -1, 2), m(1, 0, 1, 2), order)?.mul_monomial(m(1, 0, -2, 0)))
}

/// `ν₃` sum at `α = √y·q`, `z = 1/√(yz)`: `α² = yq²`, `z² = 1/(yz)`.
pub fn nu3_sum_specialized(order: i32) -> Result<LaurentSeries> {
    choi_nu3_sum(m(1, 1, 0, 2), m(1, -1, -1, 0), order)
}

/// `Σ_{n≥0} (−zq;q²)_n (yq)^n − 1`.
pub fn nu_yz_finite_products_minus_one(order: i32) -> Result<LaurentSeries> {
    Ok(&nu_yz_finite_products(order)? - &LaurentSeries::one(order))
}
