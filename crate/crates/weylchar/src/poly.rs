//! Integer-coefficient polynomials in q, with the exact rational-coefficient
//! arithmetic needed to evaluate alternating character sums.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use perm_core::{Error, Result};
use std::fmt;

/// Polynomial with integer coefficients, ascending degree, canonical
/// (no trailing zeros).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::from_coeffs(vec![BigInt::one()])
    }

    /// q^k
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPolynomial { coeffs }
    }

    /// q^d - 1
    pub fn q_pow_minus_one(d: usize) -> Self {
        let mut p = IntPolynomial::monomial(d);
        p.coeffs[0] = BigInt::from(-1);
        p
    }

    /// 1 + q + ... + q^{d-1}
    pub fn q_integer(d: usize) -> Self {
        IntPolynomial::from_coeffs(vec![BigInt::one(); d])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map(Zero::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        IntPolynomial::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        IntPolynomial::from_coeffs(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }

    /// Exact division; errors if the remainder is nonzero or the division
    /// leaves the integers.
    pub fn div_exact(&self, other: &Self) -> Result<Self> {
        let (q, r) = RatPoly::from_int(self).div_rem(&RatPoly::from_int(other))?;
        if !r.is_zero() {
            return Err(Error::Internal("polynomial division is not exact".into()));
        }
        q.into_int()
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        acc
    }

    /// Multiplicity of (q - 1) as a divisor.
    pub fn multiplicity_of_q_minus_one(&self) -> usize {
        let divisor = IntPolynomial::from_i64(&[-1, 1]);
        let mut m = 0;
        let mut cur = self.clone();
        while !cur.is_zero() {
            match cur.div_exact(&divisor) {
                Ok(next) => {
                    m += 1;
                    cur = next;
                }
                Err(_) => break,
            }
        }
        m
    }

    /// Ascending coefficient list like `4,11,20`.
    pub fn to_coeff_list(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let strs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strs.join(",")
    }

    pub fn parse_coeff_list(text: &str) -> Result<Self> {
        let coeffs: std::result::Result<Vec<BigInt>, _> =
            text.split(',').map(|t| t.trim().parse()).collect();
        Ok(IntPolynomial::from_coeffs(coeffs.map_err(|_| {
            Error::Input(format!("bad coefficient list `{text}`"))
        })?))
    }
}

impl fmt::Display for IntPolynomial {
    /// Descending powers: `q^12 + 2q^11 + ... + 11q + 4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{mag}q^{k}")?,
            }
        }
        Ok(())
    }
}

/// Rational-coefficient polynomial, the working type for alternating sums.
#[derive(Clone, PartialEq, Debug)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map(Zero::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_int(p: &IntPolynomial) -> Self {
        RatPoly::from_coeffs(
            p.coeffs
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        RatPoly::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        RatPoly::from_coeffs(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(out)
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, other: &Self) -> Result<(Self, Self)> {
        if other.is_zero() {
            return Err(Error::Input("division by the zero polynomial".into()));
        }
        let mut rem = self.coeffs.clone();
        let d = other.coeffs.len();
        if rem.len() < d {
            return Ok((RatPoly::zero(), self.clone()));
        }
        let lead = other.coeffs.last().unwrap();
        let mut quot = vec![BigRational::zero(); rem.len() - d + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d - 1] / lead;
            if c.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let v = &c * b;
                rem[k + j] -= v;
            }
            quot[k] = c;
        }
        Ok((RatPoly::from_coeffs(quot), RatPoly::from_coeffs(rem)))
    }

    /// Converts to an integer polynomial, failing on fractional coefficients.
    pub fn into_int(self) -> Result<IntPolynomial> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs {
            if !c.denom().is_one() {
                return Err(Error::Internal(format!(
                    "expected an integer polynomial, found coefficient {c}"
                )));
            }
            out.push(c.numer().clone());
        }
        Ok(IntPolynomial::from_coeffs(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_division() {
        // (q-1)(q+1) = q^2 - 1
        let a = IntPolynomial::from_i64(&[-1, 1]);
        let b = IntPolynomial::from_i64(&[1, 1]);
        let prod = a.mul(&b);
        assert_eq!(prod, IntPolynomial::from_i64(&[-1, 0, 1]));
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert!(prod.add(&IntPolynomial::one()).div_exact(&a).is_err());
    }

    #[test]
    fn q_minus_one_multiplicity() {
        // (q-1)^2 (q+1)
        let p = IntPolynomial::from_i64(&[-1, 1])
            .mul(&IntPolynomial::from_i64(&[-1, 1]))
            .mul(&IntPolynomial::from_i64(&[1, 1]));
        assert_eq!(p.multiplicity_of_q_minus_one(), 2);
        assert_eq!(IntPolynomial::q_pow_minus_one(6).multiplicity_of_q_minus_one(), 1);
        assert_eq!(IntPolynomial::from_i64(&[1, 1, 1]).multiplicity_of_q_minus_one(), 0);
    }

    #[test]
    fn eval_and_display() {
        let p = IntPolynomial::from_i64(&[4, 11, 2]);
        assert_eq!(p.eval(&BigInt::from(3)), BigInt::from(4 + 33 + 18));
        assert_eq!(p.to_string(), "2q^2 + 11q + 4");
        assert_eq!(p.to_coeff_list(), "4,11,2");
        assert_eq!(IntPolynomial::parse_coeff_list("4, 11, 2").unwrap(), p);
    }
}
