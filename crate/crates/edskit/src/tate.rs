//! Constructors for the one-parameter curve families carrying a torsion
//! point of order N at (0, 0).
//!
//! For N in 4..=10, 12 the curve is the Tate normal form
//! y² + (1−c)xy − by = x³ − bx² with (b, c) polynomial in the integer
//! parameter α; for N = 8, 10, 12 the normal form has rational
//! coefficients, so the birationally equivalent integral models are used
//! instead. Orders 2 and 3 have no Tate normal form and come from the
//! two-parameter families y² = x³ + a2·x² + a4·x (a4 ≠ 0) and
//! y² + a1·xy + a3·y = x³ (a3 ≠ 0).
//!
//! Every constructor validates its output by computing the order of (0, 0)
//! with the group law, so a transcription error in any coefficient table
//! fails fast instead of poisoning downstream results.

use num_traits::{One, Zero};

use crate::arith::{Int, Rat};
use crate::curve::{Curve, OrderResult, Point};
use crate::error::{Error, Result};
use crate::intpoly::menu;

/// β = (2α−1)(α−1), shared by the integral models of orders 8 and 10.
pub fn beta(alpha: &Int) -> Int {
    menu::am1_2am1().eval(alpha)
}

/// ζ = −α²+3α−1, used by the order-10 integral model.
pub fn zeta(alpha: &Int) -> Int {
    menu::zeta().eval(alpha)
}

/// λ = (3α²−3α+1)(α−2α²), used by the order-12 integral model.
pub fn lambda(alpha: &Int) -> Int {
    menu::lambda().eval(alpha)
}

/// θ = 2α−2α²−1, used by the order-12 integral model.
pub fn theta(alpha: &Int) -> Int {
    menu::theta().eval(alpha)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TateParam {
    Alpha(Int),
    KubertTwo { a2: Int, a4: Int },
    KubertThree { a1: Int, a3: Int },
}

/// A curve from one of the torsion families, with (0, 0) of exact order N.
#[derive(Debug, Clone)]
pub struct TateCurve {
    pub order: u32,
    pub param: TateParam,
    pub curve: Curve,
    /// False exactly for the order-2 family, where F2 = 0 leaves the
    /// H-sequence without a general term.
    pub h_defined: bool,
}

impl TateCurve {
    /// The distinguished torsion point (0, 0).
    pub fn point(&self) -> Point {
        Point::affine(Rat::zero(), Rat::zero())
    }

    pub fn alpha(&self) -> Option<&Int> {
        match &self.param {
            TateParam::Alpha(a) => Some(a),
            _ => None,
        }
    }

    /// The (b, c) of the underlying Tate normal form, rational for
    /// N = 8, 10, 12 where the integral model rescales them away.
    pub fn tate_bc(&self) -> Option<(Rat, Rat)> {
        let alpha = Rat::from_integer(self.alpha()?.clone());
        let one = Rat::one();
        Some(match self.order {
            4 => (alpha, Rat::zero()),
            5 => (alpha.clone(), alpha),
            6 => (&alpha + &alpha * &alpha, alpha),
            7 => {
                let c = &alpha * &alpha - &alpha;
                (&alpha * &c, c)
            }
            8 => {
                let b = (&alpha + &alpha - &one) * (&alpha - &one);
                let c = &b / &alpha;
                (b, c)
            }
            9 => {
                let c = &alpha * &alpha * (&alpha - &one);
                let b = &c * (&alpha * &alpha - &alpha + &one);
                (b, c)
            }
            10 => {
                let z = &alpha - (&alpha - &one) * (&alpha - &one);
                let c = (&alpha + &alpha - &one) * (&alpha - &one) * &alpha / &z;
                let b = &c * &alpha * &alpha / &z;
                (b, c)
            }
            12 => {
                let am1 = &alpha - &one;
                let l = Rat::from_integer(lambda(self.alpha()?));
                let t = Rat::from_integer(theta(self.alpha()?));
                let c = &l / (&am1 * &am1 * &am1);
                let b = &c * &t / &am1;
                (b, c)
            }
            _ => return None,
        })
    }

    /// β, for the orders whose integral model uses it.
    pub fn beta(&self) -> Option<Int> {
        match self.order {
            8 | 10 => self.alpha().map(beta),
            _ => None,
        }
    }

    pub fn zeta(&self) -> Option<Int> {
        (self.order == 10).then(|| self.alpha().map(zeta)).flatten()
    }

    pub fn lambda(&self) -> Option<Int> {
        (self.order == 12).then(|| self.alpha().map(lambda)).flatten()
    }

    pub fn theta(&self) -> Option<Int> {
        (self.order == 12).then(|| self.alpha().map(theta)).flatten()
    }
}

fn excluded(family: u32, detail: &str) -> Error {
    Error::ExcludedParameter { family, detail: detail.to_string() }
}

fn validate_order(curve: Curve, order: u32, param: TateParam) -> Result<TateCurve> {
    let point = Point::affine(Rat::zero(), Rat::zero());
    match curve.point_order(&point, 16)? {
        OrderResult::Order(n) if n == order => Ok(TateCurve {
            order,
            param,
            curve,
            h_defined: order != 2,
        }),
        other => Err(Error::OrderValidationFailed {
            family: order,
            detail: format!("(0,0) has {:?}", other),
        }),
    }
}

/// Build the order-N family member for an integer α, N in 4..=10 or 12.
///
/// The admissibility exclusions are those of the parametrization,
/// restricted to integers: α ≠ 0 (N = 4, 5), α ∉ {−1, 0} (N = 6),
/// α ∉ {0, 1} (N = 7, 8, 9, 10, 12). The excluded value ½ for
/// N = 8, 10, 12 never arises over the integers.
pub fn tate_curve(order: u32, alpha: &Int) -> Result<TateCurve> {
    let zero = Int::zero();
    let one = Int::one();
    match order {
        4 | 5 if *alpha == zero => return Err(excluded(order, "alpha = 0")),
        6 if *alpha == zero || *alpha == -&one => {
            return Err(excluded(order, "alpha in {-1, 0}"))
        }
        7 | 8 | 9 | 10 | 12 if *alpha == zero || *alpha == one => {
            return Err(excluded(order, "alpha in {0, 1}"))
        }
        4..=10 | 12 => {}
        _ => {
            return Err(Error::InvalidParameter(format!(
                "no one-parameter torsion family of order {}",
                order
            )))
        }
    }

    let a = alpha;
    let r = |v: &Int| Rat::from_integer(v.clone());
    let curve = match order {
        4..=7 | 9 => {
            // Tate normal form y² + (1−c)xy − by = x³ − bx² with integral b, c.
            let (b, c) = match order {
                4 => (a.clone(), Int::zero()),
                5 => (a.clone(), a.clone()),
                6 => (a + a * a, a.clone()),
                7 => (a * a * (a - &one), a * (a - &one)),
                9 => {
                    let c = a * a * (a - &one);
                    let b = &c * &(a * a - a + &one);
                    (b, c)
                }
                _ => unreachable!(),
            };
            Curve::new(
                r(&(&one - &c)),
                r(&-&b),
                r(&-&b),
                Rat::zero(),
                Rat::zero(),
            )?
        }
        8 => {
            let b = beta(a);
            Curve::new(
                r(&(a - &b)),
                r(&-(a * a * &b)),
                r(&-(a * a * a * &b)),
                Rat::zero(),
                Rat::zero(),
            )?
        }
        10 => {
            let b = beta(a);
            let z = zeta(a);
            Curve::new(
                r(&(&z * &z - a * &b * &z)),
                r(&-(a * a * a * &b * &z * &z)),
                r(&-(a * a * a * &b * &z * &z * &z * &z)),
                Rat::zero(),
                Rat::zero(),
            )?
        }
        12 => {
            let l = lambda(a);
            let t = theta(a);
            let m = a - &one;
            let m4 = &m * &m * &m * &m;
            Curve::new(
                r(&(&m * (&m * &m * &m - &l))),
                r(&-(&m4 * &l * &t)),
                r(&-(&m4 * &m4 * &l * &t)),
                Rat::zero(),
                Rat::zero(),
            )?
        }
        _ => unreachable!(),
    };
    validate_order(curve, order, TateParam::Alpha(a.clone()))
}

/// Build the order-2 or order-3 family member.
///
/// Order 2: y² = x³ + c1·x² + c2·x with (c1, c2) = (a2, a4), a4 ≠ 0.
/// Order 3: y² + c1·xy + c2·y = x³ with (c1, c2) = (a1, a3), a3 ≠ 0.
pub fn kubert_curve(order: u32, c1: &Int, c2: &Int) -> Result<TateCurve> {
    let r = |v: &Int| Rat::from_integer(v.clone());
    match order {
        2 => {
            if c2.is_zero() {
                return Err(excluded(2, "a4 = 0"));
            }
            let curve = Curve::new(Rat::zero(), r(c1), Rat::zero(), r(c2), Rat::zero())?;
            validate_order(curve, 2, TateParam::KubertTwo { a2: c1.clone(), a4: c2.clone() })
        }
        3 => {
            if c2.is_zero() {
                return Err(excluded(3, "a3 = 0"));
            }
            let curve = Curve::new(r(c1), Rat::zero(), r(c2), Rat::zero(), Rat::zero())?;
            validate_order(curve, 3, TateParam::KubertThree { a1: c1.clone(), a3: c2.clone() })
        }
        _ => Err(Error::InvalidParameter(format!(
            "kubert_curve handles orders 2 and 3, got {}",
            order
        ))),
    }
}

/// All admissible integer parameters for the order-N family within
/// [lo, hi], skipping values that make the model singular.
pub fn admissible_alphas(order: u32, lo: i64, hi: i64) -> Vec<Int> {
    (lo..=hi)
        .map(Int::from)
        .filter(|a| tate_curve(order, a).is_ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat_int};

    #[test]
    fn printed_models_match() {
        // Order 8, α = 2: y² − xy − 24y = x³ − 12x² (β = 3).
        let t = tate_curve(8, &int(2)).unwrap();
        assert_eq!(t.curve, Curve::from_i64(-1, -12, -24, 0, 0).unwrap());
        assert_eq!(t.beta(), Some(int(3)));

        // Order 5, α = 1: y² − y = x³ − x².
        let t = tate_curve(5, &int(1)).unwrap();
        assert_eq!(t.curve, Curve::from_i64(0, -1, -1, 0, 0).unwrap());

        // Order 4, α = 1: y² + xy − y = x³ − x².
        let t = tate_curve(4, &int(1)).unwrap();
        assert_eq!(t.curve, Curve::from_i64(1, -1, -1, 0, 0).unwrap());
    }

    #[test]
    fn orders_validate_across_parameter_range() {
        for order in [4u32, 5, 6, 7, 8, 9, 10, 12] {
            for alpha in admissible_alphas(order, -20, 20) {
                let t = tate_curve(order, &alpha).unwrap();
                assert_eq!(t.order, order);
                assert!(!t.curve.discriminant().is_zero());
                // Coefficients must be integers for integer α.
                for c in [&t.curve.a1, &t.curve.a2, &t.curve.a3, &t.curve.a4, &t.curve.a6] {
                    assert!(c.is_integer());
                }
            }
        }
    }

    #[test]
    fn exclusions_rejected() {
        assert!(matches!(tate_curve(4, &int(0)), Err(Error::ExcludedParameter { .. })));
        assert!(matches!(tate_curve(6, &int(-1)), Err(Error::ExcludedParameter { .. })));
        assert!(matches!(tate_curve(8, &int(1)), Err(Error::ExcludedParameter { .. })));
        assert!(matches!(tate_curve(11, &int(2)), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn kubert_families() {
        let t = kubert_curve(2, &int(0), &int(1)).unwrap();
        assert_eq!(t.curve, Curve::from_i64(0, 0, 0, 1, 0).unwrap());
        assert_eq!(t.order, 2);
        assert!(!t.h_defined);

        let t = kubert_curve(3, &int(0), &int(1)).unwrap();
        assert_eq!(t.curve, Curve::from_i64(0, 0, 1, 0, 0).unwrap());
        assert_eq!(t.order, 3);
        assert!(t.h_defined);

        assert!(matches!(
            kubert_curve(2, &int(1), &int(0)),
            Err(Error::ExcludedParameter { .. })
        ));
    }

    #[test]
    fn tate_bc_matches_parametrization() {
        // For N ≤ 9 the (b, c) pair reproduces the curve directly.
        for order in [4u32, 5, 6, 7, 9] {
            for alpha in admissible_alphas(order, -6, 6) {
                let t = tate_curve(order, &alpha).unwrap();
                let (b, c) = t.tate_bc().unwrap();
                let expect = Curve::new(
                    rat_int(1) - &c,
                    -&b,
                    -b.clone(),
                    crate::arith::Rat::zero(),
                    crate::arith::Rat::zero(),
                )
                .unwrap();
                assert_eq!(t.curve, expect);
            }
        }
        // For N = 8 the Tate form is the integral model rescaled by α.
        let t = tate_curve(8, &int(3)).unwrap();
        let (b, c) = t.tate_bc().unwrap();
        assert_eq!(b, rat_int(10));
        assert_eq!(c, crate::arith::rat(10, 3));
    }

    #[test]
    fn derived_quantities() {
        let t = tate_curve(10, &int(2)).unwrap();
        assert_eq!(t.beta(), Some(int(3)));
        assert_eq!(t.zeta(), Some(int(1)));
        assert_eq!(t.lambda(), None);

        let t = tate_curve(12, &int(2)).unwrap();
        assert_eq!(t.lambda(), Some(int(-42)));
        assert_eq!(t.theta(), Some(int(-5)));
        assert_eq!(t.zeta(), None);
        // The printed integral model: y² + 43xy − 210y = x³ − 210x².
        assert_eq!(t.curve, Curve::from_i64(43, -210, -210, 0, 0).unwrap());
    }
}
