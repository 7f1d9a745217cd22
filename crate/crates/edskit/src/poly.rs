//! Dense univariate polynomials with rational coefficients.
//!
//! Internal workhorse for the coordinate-ring arithmetic in `divpoly`.
//! Coefficients are stored ascending with trailing zeros trimmed, so the
//! zero polynomial is the empty vector.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::arith::Rat;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        Poly::new(vec![Rat::zero(), Rat::from_integer(1.into())])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Exact division; fails if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        if d.is_zero() {
            return Err(Error::InexactPolynomialDivision);
        }
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let mut rem = self.coeffs.clone();
        let dd = d.coeffs.len() - 1;
        let lead = &d.coeffs[dd];
        if rem.len() < d.coeffs.len() {
            return Err(Error::InexactPolynomialDivision);
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = std::mem::replace(&mut rem[i], Rat::zero());
            if c.is_zero() {
                continue;
            }
            let q = c / lead;
            for (j, dc) in d.coeffs[..dd].iter().enumerate() {
                let t = dc * &q;
                rem[i - dd + j] -= t;
            }
            quot[i - dd] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactPolynomialDivision);
        }
        Ok(Poly::new(quot))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, c) in out.iter_mut().zip(short.coeffs.iter()) {
            *o += c;
        }
        Poly::new(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.coeffs.clone();
        if out.len() < rhs.coeffs.len() {
            out.resize(rhs.coeffs.len(), Rat::zero());
        }
        for (o, c) in out.iter_mut().zip(rhs.coeffs.iter()) {
            *o -= c;
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;

    fn p(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn mul_and_eval() {
        // (x + 1)(x - 1) = x^2 - 1
        let prod = &p(&[1, 1]) * &p(&[-1, 1]);
        assert_eq!(prod, p(&[-1, 0, 1]));
        assert_eq!(prod.eval(&rat_int(3)), rat_int(8));
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = p(&[2, 0, -3, 1]);
        let b = p(&[-1, 1]);
        let q = (&a * &b).div_exact(&b).unwrap();
        assert_eq!(q, a);
    }

    #[test]
    fn inexact_division_rejected() {
        let a = p(&[1, 1]);
        let b = p(&[0, 1]);
        assert_eq!(a.div_exact(&b), Err(Error::InexactPolynomialDivision));
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let a = p(&[1, 2, 0, 0]);
        assert_eq!(a.degree(), Some(1));
        assert!((&a - &a).is_zero());
    }
}
