//! Integer polynomials in one parameter, used as the bases of closed-form
//! factorizations and as the left-hand sides of square/cube conditions.
//!
//! The menu of named polynomials below covers every base and condition the
//! curve families produce. A polynomial may carry a display label so that
//! factored forms print the way they are usually written ("(α−1)(2α−1)"
//! instead of the expanded "2α²−3α+1").

use std::fmt;

use num_traits::Zero;

use crate::arith::Int;

#[derive(Debug, Clone, Eq)]
pub struct IntPoly {
    /// Ascending coefficients, trailing zeros trimmed.
    coeffs: Vec<i64>,
    label: Option<&'static str>,
}

impl PartialEq for IntPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs, label: None }
    }

    pub fn labeled(coeffs: Vec<i64>, label: &'static str) -> Self {
        let mut p = IntPoly::new(coeffs);
        p.label = Some(label);
        p
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + Int::from(c);
        }
        acc
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(label) = self.label {
            return f.write_str(label);
        }
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("−")?;
                }
                first = false;
            } else if c < 0 {
                f.write_str("−")?;
            } else {
                f.write_str("+")?;
            }
            match deg {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if mag != 1 {
                        write!(f, "{}", mag)?;
                    }
                    f.write_str("α")?;
                    if deg > 1 {
                        write!(f, "{}", superscript(deg))?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

/// The named polynomials appearing in the general terms and the
/// square/cube conditions of the torsion families.
pub mod menu {
    use super::IntPoly;

    pub fn alpha() -> IntPoly {
        IntPoly::labeled(vec![0, 1], "α")
    }
    pub fn alpha_minus_one() -> IntPoly {
        IntPoly::labeled(vec![-1, 1], "α−1")
    }
    pub fn alpha_plus_one() -> IntPoly {
        IntPoly::labeled(vec![1, 1], "α+1")
    }
    pub fn two_alpha_minus_one() -> IntPoly {
        IntPoly::labeled(vec![-1, 2], "2α−1")
    }
    /// (α−1)(2α−1) = 2α²−3α+1
    pub fn am1_2am1() -> IntPoly {
        IntPoly::labeled(vec![1, -3, 2], "(α−1)(2α−1)")
    }
    /// α(α−1) = α²−α
    pub fn alpha_am1() -> IntPoly {
        IntPoly::labeled(vec![0, -1, 1], "α(α−1)")
    }
    /// α(α−1)(2α−1) = 2α³−3α²+α
    pub fn alpha_am1_2am1() -> IntPoly {
        IntPoly::labeled(vec![0, 1, -3, 2], "α(α−1)(2α−1)")
    }
    /// η = α²−α+1
    pub fn eta() -> IntPoly {
        IntPoly::labeled(vec![1, -1, 1], "α²−α+1")
    }
    /// α²−3α+1 (the negative of ζ below)
    pub fn alpha_sq_m3a_p1() -> IntPoly {
        IntPoly::labeled(vec![1, -3, 1], "α²−3α+1")
    }
    /// ζ = −α²+3α−1
    pub fn zeta() -> IntPoly {
        IntPoly::labeled(vec![-1, 3, -1], "−α²+3α−1")
    }
    /// λ = (3α²−3α+1)(α−2α²) = −6α⁴+9α³−5α²+α
    pub fn lambda() -> IntPoly {
        IntPoly::labeled(vec![0, 1, -5, 9, -6], "(3α²−3α+1)(α−2α²)")
    }
    /// θ = 2α−2α²−1
    pub fn theta() -> IntPoly {
        IntPoly::labeled(vec![-1, 2, -2], "2α−2α²−1")
    }
    /// The a4 coefficient of the order-2 family, as an identity polynomial.
    pub fn coeff_a4() -> IntPoly {
        IntPoly::labeled(vec![0, 1], "a4")
    }
    /// The a3 coefficient of the order-3 family, as an identity polynomial.
    pub fn coeff_a3() -> IntPoly {
        IntPoly::labeled(vec![0, 1], "a3")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn eval_menu_polys() {
        assert_eq!(menu::am1_2am1().eval(&int(5)), int(36));
        assert_eq!(menu::zeta().eval(&int(2)), int(1));
        assert_eq!(menu::lambda().eval(&int(2)), int(-42));
        assert_eq!(menu::theta().eval(&int(2)), int(-5));
        assert_eq!(menu::eta().eval(&int(3)), int(7));
    }

    #[test]
    fn lambda_factors_agree() {
        // λ = α(1−2α)(3α²−3α+1) as polynomials.
        for a in -6..=6 {
            let x = int(a);
            let direct = menu::lambda().eval(&x);
            let product = &x * (int(1) - int(2) * &x) * (int(3) * &x * &x - int(3) * &x + 1);
            assert_eq!(direct, product);
        }
    }

    #[test]
    fn display_expanded_and_labeled() {
        assert_eq!(menu::am1_2am1().to_string(), "(α−1)(2α−1)");
        assert_eq!(IntPoly::new(vec![1, -3, 2]).to_string(), "2α²−3α+1");
        assert_eq!(IntPoly::new(vec![0, 1]).to_string(), "α");
        assert_eq!(IntPoly::new(vec![-1]).to_string(), "−1");
    }
}
