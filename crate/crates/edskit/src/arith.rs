//! Exact integer and rational arithmetic primitives.
//!
//! Everything downstream works over [`Int`] (arbitrary-precision signed
//! integers) and [`Rat`] (reduced fractions with positive denominator).
//! This module adds the number-theoretic bits the rest of the crate needs:
//! an exact integer square root, perfect-power tests under the sign
//! convention used by the square/cube classification (a "square term" is
//! ±b² with b ≠ 0, while cubes keep their sign), and a Pell equation
//! solver based on the continued-fraction expansion of √D.
//!
//! All perfect-power tests use exact integer root extraction; sequence
//! terms grow with exponents quadratic in the index, far beyond what
//! floating point can certify.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Shorthand for small integer constants.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Shorthand for small rational constants.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(int(n), int(d))
}

/// Integer as a rational.
pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(int(v))
}

/// Exact power of a rational with a signed exponent.
pub fn rat_pow(base: &Rat, exp: i64) -> Rat {
    if exp == 0 {
        return Rat::one();
    }
    let mut b = if exp < 0 {
        assert!(!base.is_zero(), "zero raised to a negative power");
        base.recip()
    } else {
        base.clone()
    };
    let mut e = exp.unsigned_abs();
    let mut acc = Rat::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

/// Exact power of an integer with a nonnegative exponent.
pub fn int_pow(base: &Int, exp: u64) -> Int {
    let mut b = base.clone();
    let mut e = exp;
    let mut acc = Int::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

/// Floor of the square root of a nonnegative integer.
pub fn isqrt(n: &Int) -> Result<Int> {
    if n.is_negative() {
        return Err(Error::NegativeSquareRoot);
    }
    Ok(n.sqrt())
}

/// True iff `n` is ±b² for a nonzero integer b. Zero is not a square term,
/// and the test is blind to the sign of `n`.
pub fn is_square_term(n: &Int) -> bool {
    if n.is_zero() {
        return false;
    }
    let a = n.abs();
    let r = a.sqrt();
    &r * &r == a
}

/// True iff `n` is c³ for a nonzero integer c. Cubes keep their sign:
/// −27 is a cube term, −4 and 0 are not.
pub fn is_cube_term(n: &Int) -> bool {
    if n.is_zero() {
        return false;
    }
    let r = n.cbrt();
    &r * &r * &r == *n
}

/// A positive solution of x² − D·y² = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellSolution {
    pub x: Int,
    pub y: Int,
}

/// The `count` smallest positive solutions of x² − D·y² = 1, ascending in x.
///
/// The fundamental solution is the first convergent of the continued
/// fraction of √D that satisfies the equation; the rest follow from the
/// composition rule (x', y') = (x₁x + D·y₁y, x₁y + y₁x).
pub fn pell_solutions(d: &Int, count: usize) -> Result<Vec<PellSolution>> {
    if !d.is_positive() {
        return Err(Error::PellNonPositive);
    }
    let a0 = d.sqrt();
    if &a0 * &a0 == *d {
        return Err(Error::PellPerfectSquare);
    }

    // Continued fraction of sqrt(d): x_k = (m_k + sqrt(d)) / q_k.
    let mut m = Int::zero();
    let mut q = Int::one();
    let mut a = a0.clone();
    // Convergent numerators/denominators.
    let (mut h_prev, mut h) = (Int::one(), a0.clone());
    let (mut k_prev, mut k) = (Int::zero(), Int::one());

    let fundamental = loop {
        if &h * &h - d * (&k * &k) == Int::one() {
            break PellSolution { x: h, y: k };
        }
        m = &q * &a - m;
        q = (d - &m * &m) / &q;
        a = (&a0 + &m) / &q;
        let h_next = &a * &h + &h_prev;
        let k_next = &a * &k + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
    };

    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return Ok(out);
    }
    out.push(fundamental.clone());
    while out.len() < count {
        let last = out.last().unwrap();
        let x = &fundamental.x * &last.x + d * (&fundamental.y * &last.y);
        let y = &fundamental.x * &last.y + &fundamental.y * &last.x;
        out.push(PellSolution { x, y });
    }
    Ok(out)
}
