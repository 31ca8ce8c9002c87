//! Laurent polynomials in `y` and `z` with arbitrary-precision integer
//! coefficients. These are the coefficients of every q-series.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(y, z)`.
pub type Exps = (i32, i32);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Exps, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, y: i32, z: i32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((y, z), c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value if this polynomial has no `y` or `z` dependence.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn coefficient(&self, y: i32, z: i32) -> BigInt {
        self.terms.get(&(y, z)).cloned().unwrap_or_default()
    }

    /// Terms in ascending `(y, z)` order.
    pub fn iter(&self) -> impl Iterator<Item = (Exps, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Exps, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    /// `self += c · y^dy z^dz · other`.
    pub fn add_shifted(&mut self, other: &LaurentPoly, c: &BigInt, dy: i32, dz: i32) {
        for (&(y, z), v) in &other.terms {
            self.add_term((y + dy, z + dz), &(v * c));
        }
    }

    pub fn add_assign_ref(&mut self, other: &LaurentPoly) {
        self.add_shifted(other, &BigInt::one(), 0, 0);
    }

    pub fn sub_assign_ref(&mut self, other: &LaurentPoly) {
        self.add_shifted(other, &-BigInt::one(), 0, 0);
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (&(y, z), c) in &self.terms {
            out.add_shifted(other, c, y, z);
        }
        out
    }

    /// Applies `y ↦ cy·y^a z^b`, `z ↦ cz·y^c z^d` where `cy`, `cz` must be
    /// ±1 whenever a negative power of them is needed.
    pub fn substitute(&self, y_map: (i64, i32, i32), z_map: (i64, i32, i32)) -> Option<Self> {
        let mut out = Self::zero();
        for (&(ey, ez), c) in &self.terms {
            let sign_y = int_pow(y_map.0, ey)?;
            let sign_z = int_pow(z_map.0, ez)?;
            let coeff = c * sign_y * sign_z;
            let y = ey * y_map.1 + ez * z_map.1;
            let z = ey * y_map.2 + ez * z_map.2;
            out.add_term((y, z), &coeff);
        }
        Some(out)
    }
}

/// `base^exp` for integer `base`; negative exponents only for units.
fn int_pow(base: i64, exp: i32) -> Option<BigInt> {
    if exp >= 0 {
        Some(num_traits::pow(BigInt::from(base), exp as usize))
    } else if base == 1 || base == -1 {
        Some(num_traits::pow(
            BigInt::from(base),
            exp.unsigned_abs() as usize,
        ))
    } else {
        None
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, name: &str, e: i32, first: &mut bool) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !*first {
        f.write_str("*")?;
    }
    *first = false;
    if e == 1 {
        f.write_str(name)
    } else {
        write!(f, "{name}^{e}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&(y, z), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let unit = abs.is_one();
            if !unit || (y == 0 && z == 0) {
                write!(f, "{abs}")?;
            }
            let mut first = unit;
            write_var(f, "y", y, &mut first)?;
            write_var(f, "z", z, &mut first)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_cancels() {
        let mut a = LaurentPoly::monomial(3, 1, -1);
        a.add_term((1, -1), &BigInt::from(-3));
        assert!(a.is_zero());
        let x = LaurentPoly::monomial(1, 1, 0);
        let inv = LaurentPoly::monomial(1, -1, 0);
        assert_eq!(x.mul(&inv), LaurentPoly::one());
    }

    #[test]
    fn display_is_sorted() {
        let mut p = LaurentPoly::monomial(1, 2, 0);
        p.add_term((1, 1), &BigInt::from(1));
        p.add_term((0, -1), &BigInt::from(-2));
        p.add_term((0, 0), &BigInt::from(1));
        assert_eq!(p.to_string(), "-2*z^-1 + 1 + y*z + y^2");
    }

    #[test]
    fn substitution() {
        // y*z^2 with y -> -z, z -> -z^-1 gives -z * z^-2 = -z^-1
        let p = LaurentPoly::monomial(1, 1, 2);
        let s = p.substitute((-1, 0, 1), (-1, 0, -1)).unwrap();
        assert_eq!(s, LaurentPoly::monomial(-1, 0, -1));
        // z^-1 with z -> 2 is not representable over the integers
        assert!(LaurentPoly::monomial(1, 0, -1)
            .substitute((1, 1, 0), (2, 0, 0))
            .is_none());
    }
}
