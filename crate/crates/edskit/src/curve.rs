//! Long Weierstrass curves over the rationals with the full chord-tangent
//! group law.
//!
//! This is the ground-truth oracle for everything else in the crate: any
//! identity claimed for the sequence values can be checked against honest
//! point arithmetic here. The full five-coefficient form is required
//! because the Tate normal forms have a1, a3 != 0; negation is
//! (x, y) -> (x, -y - a1 x - a3).

use num_traits::Zero;

use crate::arith::{rat_int, Rat};
use crate::error::{Error, Result};

/// y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6, nonsingular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    pub a1: Rat,
    pub a2: Rat,
    pub a3: Rat,
    pub a4: Rat,
    pub a6: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Point {
    Infinity,
    Affine { x: Rat, y: Rat },
}

impl Point {
    pub fn affine(x: Rat, y: Rat) -> Self {
        Point::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn xy(&self) -> Option<(&Rat, &Rat)> {
        match self {
            Point::Infinity => None,
            Point::Affine { x, y } => Some((x, y)),
        }
    }
}

/// Result of a bounded order computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderResult {
    /// Smallest N with [N]P = O.
    Order(u32),
    /// No multiple up to the bound was the identity (infinite or large order).
    ExceedsBound { bound: u32 },
}

impl Curve {
    pub fn new(a1: Rat, a2: Rat, a3: Rat, a4: Rat, a6: Rat) -> Result<Self> {
        let c = Curve { a1, a2, a3, a4, a6 };
        if c.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(c)
    }

    pub fn from_i64(a1: i64, a2: i64, a3: i64, a4: i64, a6: i64) -> Result<Self> {
        Curve::new(rat_int(a1), rat_int(a2), rat_int(a3), rat_int(a4), rat_int(a6))
    }

    /// The quantities b2 = a1²+4a2, b4 = 2a4+a1a3, b6 = a3²+4a6,
    /// b8 = a1²a6+4a2a6−a1a3a4+a2a3²−a4²; they satisfy 4b8 = b2b6 − b4².
    pub fn b_invariants(&self) -> (Rat, Rat, Rat, Rat) {
        let b2 = &self.a1 * &self.a1 + rat_int(4) * &self.a2;
        let b4 = rat_int(2) * &self.a4 + &self.a1 * &self.a3;
        let b6 = &self.a3 * &self.a3 + rat_int(4) * &self.a6;
        let b8 = &self.a1 * &self.a1 * &self.a6 + rat_int(4) * (&self.a2 * &self.a6)
            - &self.a1 * &self.a3 * &self.a4
            + &self.a2 * (&self.a3 * &self.a3)
            - &self.a4 * &self.a4;
        (b2, b4, b6, b8)
    }

    pub fn discriminant(&self) -> Rat {
        let (b2, b4, b6, b8) = self.b_invariants();
        -(&b2 * &b2) * &b8 - rat_int(8) * (&b4 * &b4 * &b4) - rat_int(27) * (&b6 * &b6)
            + rat_int(9) * (&b2 * &b4 * &b6)
    }

    pub fn is_on_curve(&self, p: &Point) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine { x, y } => {
                let lhs = y * y + &self.a1 * x * y + &self.a3 * y;
                let rhs = x * x * x + &self.a2 * (x * x) + &self.a4 * x + &self.a6;
                lhs == rhs
            }
        }
    }

    /// −P = (x, −y − a1·x − a3).
    pub fn negate(&self, p: &Point) -> Point {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::Affine {
                x: x.clone(),
                y: -y - &self.a1 * x - &self.a3,
            },
        }
    }

    /// Group sum; rejects inputs off the curve.
    pub fn add(&self, p: &Point, q: &Point) -> Result<Point> {
        if !self.is_on_curve(p) || !self.is_on_curve(q) {
            return Err(Error::PointOffCurve);
        }
        Ok(self.add_unchecked(p, q))
    }

    fn add_unchecked(&self, p: &Point, q: &Point) -> Point {
        let (x1, y1) = match p.xy() {
            None => return q.clone(),
            Some(v) => v,
        };
        let (x2, y2) = match q.xy() {
            None => return p.clone(),
            Some(v) => v,
        };
        let lambda = if x1 == x2 {
            // Either Q = −P, or the tangent line.
            let neg_y1 = -y1 - &self.a1 * x1 - &self.a3;
            if *y2 == neg_y1 {
                return Point::Infinity;
            }
            let num = rat_int(3) * (x1 * x1) + rat_int(2) * (&self.a2 * x1) + &self.a4
                - &self.a1 * y1;
            let den = rat_int(2) * y1 + &self.a1 * x1 + &self.a3;
            num / den
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = &lambda * &lambda + &self.a1 * &lambda - &self.a2 - x1 - x2;
        let y3 = lambda * (x1 - &x3) - y1 - &self.a1 * &x3 - &self.a3;
        Point::Affine { x: x3, y: y3 }
    }

    /// [n]P by double-and-add; [0]P = O.
    pub fn scalar_mul(&self, n: u64, p: &Point) -> Result<Point> {
        if !self.is_on_curve(p) {
            return Err(Error::PointOffCurve);
        }
        if n == 0 || p.is_infinity() {
            return Ok(Point::Infinity);
        }
        let mut acc = Point::Infinity;
        for i in (0..64 - n.leading_zeros()).rev() {
            acc = self.add_unchecked(&acc, &acc.clone());
            if (n >> i) & 1 == 1 {
                acc = self.add_unchecked(&acc, p);
            }
        }
        Ok(acc)
    }

    /// Smallest N ≤ bound with [N]P = O, or a marker that the scan ran out.
    pub fn point_order(&self, p: &Point, bound: u32) -> Result<OrderResult> {
        if !self.is_on_curve(p) {
            return Err(Error::PointOffCurve);
        }
        if p.is_infinity() {
            return Ok(OrderResult::Order(1));
        }
        let mut acc = p.clone();
        for k in 1..=bound {
            if acc.is_infinity() {
                return Ok(OrderResult::Order(k));
            }
            acc = self.add_unchecked(&acc, p);
        }
        Ok(OrderResult::ExceedsBound { bound })
    }
}
