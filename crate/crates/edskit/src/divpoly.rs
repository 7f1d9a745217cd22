//! Division polynomials ψ_n, φ_n, ω_n and the normalized sequences F, G, H.
//!
//! Symbolically, the polynomials live in the coordinate ring K[x, y] modulo
//! the curve equation, so every element has a canonical form A(x) + B(x)·y.
//! The ring is an integral domain and exact division works through the
//! hyperelliptic conjugate: U/V = U·V̄ / N(V) with V̄ obtained from
//! y ↦ −y − a1·x − a3 and N(V) = V·V̄ ∈ K[x].
//!
//! ψ_n is built from the initial values
//!   ψ0 = 0, ψ1 = 1, ψ2 = 2y + a1·x + a3,
//!   ψ3 = 3x⁴ + b2·x³ + 3b4·x² + 3b6·x + b8,
//!   ψ4 = ψ2·(2x⁶ + b2·x⁵ + 5b4·x⁴ + 10b6·x³ + 10b8·x² + (b2b8−b4b6)·x + b4b8−b6²)
//! and the recursions
//!   ψ_{2k+1} = ψ_{k+2}ψ_k³ − ψ_{k−1}ψ_{k+1}³,
//!   ψ_{2k}·ψ2 = ψ_{k−1}²ψ_kψ_{k+2} − ψ_{k−2}ψ_kψ_{k+1}²,
//! then
//!   φ_n = x·ψ_n² − ψ_{n+1}ψ_{n−1},
//!   ω_n = (ψ_{n−1}²ψ_{n+2} − ψ_{n−2}ψ_{n+1}² − ψ2ψ_n(a1·φ_n + a3·ψ_n²)) / (2ψ2).
//!
//! Numerically, [`eval_sequences`] exploits the classical parity split:
//! ψ_n is a polynomial in x alone for odd n and ψ2·(polynomial in x) for
//! even n. Writing w_n for the x-part, the recursions close over the w_n
//! with no division at all (only multiplications by ψ2(P)² = s), so a
//! 2-torsion base point — where ψ2(P) = 0 — evaluates exactly like any
//! other. The slower route through the symbolic polynomials is kept as a
//! cross-check and agrees term by term (see tests).

use num_traits::{One, Zero};

use crate::arith::{rat_int, rat_pow, Rat};
use crate::curve::{Curve, Point};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Canonical residue A(x) + B(x)·y in the coordinate ring of a curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvePoly {
    /// Coefficient of y⁰.
    pub y0: Poly,
    /// Coefficient of y¹.
    pub y1: Poly,
}

impl CurvePoly {
    pub fn zero() -> Self {
        CurvePoly { y0: Poly::zero(), y1: Poly::zero() }
    }

    pub fn one() -> Self {
        CurvePoly { y0: Poly::constant(Rat::one()), y1: Poly::zero() }
    }

    pub fn constant(c: Rat) -> Self {
        CurvePoly { y0: Poly::constant(c), y1: Poly::zero() }
    }

    /// The coordinate function x.
    pub fn x() -> Self {
        CurvePoly { y0: Poly::x(), y1: Poly::zero() }
    }

    /// The coordinate function y.
    pub fn y() -> Self {
        CurvePoly { y0: Poly::zero(), y1: Poly::constant(Rat::one()) }
    }

    pub fn is_zero(&self) -> bool {
        self.y0.is_zero() && self.y1.is_zero()
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        self.y0.eval(x) + self.y1.eval(x) * y
    }

    fn add(&self, rhs: &CurvePoly) -> CurvePoly {
        CurvePoly { y0: &self.y0 + &rhs.y0, y1: &self.y1 + &rhs.y1 }
    }

    fn sub(&self, rhs: &CurvePoly) -> CurvePoly {
        CurvePoly { y0: &self.y0 - &rhs.y0, y1: &self.y1 - &rhs.y1 }
    }

    fn scale(&self, s: &Rat) -> CurvePoly {
        CurvePoly { y0: self.y0.scale(s), y1: self.y1.scale(s) }
    }
}

/// The coordinate ring K[x, y]/(curve equation), with y² reduced via
/// y² = f(x) − g(x)·y where f = x³+a2x²+a4x+a6 and g = a1x+a3.
#[derive(Debug, Clone)]
pub struct CurveRing {
    curve: Curve,
    f: Poly,
    g: Poly,
}

impl CurveRing {
    pub fn new(curve: &Curve) -> Self {
        let f = Poly::new(vec![
            curve.a6.clone(),
            curve.a4.clone(),
            curve.a2.clone(),
            Rat::one(),
        ]);
        let g = Poly::new(vec![curve.a3.clone(), curve.a1.clone()]);
        CurveRing { curve: curve.clone(), f, g }
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn mul(&self, a: &CurvePoly, b: &CurvePoly) -> CurvePoly {
        let cross = &a.y1 * &b.y1;
        CurvePoly {
            y0: &(&a.y0 * &b.y0) + &(&cross * &self.f),
            y1: &(&(&a.y0 * &b.y1) + &(&a.y1 * &b.y0)) - &(&cross * &self.g),
        }
    }

    /// Image under the involution y ↦ −y − g(x).
    pub fn conj(&self, a: &CurvePoly) -> CurvePoly {
        CurvePoly { y0: &a.y0 - &(&a.y1 * &self.g), y1: -&a.y1 }
    }

    /// N(a) = a·ā, a polynomial in x alone.
    pub fn norm(&self, a: &CurvePoly) -> Poly {
        let prod = self.mul(a, &self.conj(a));
        debug_assert!(prod.y1.is_zero());
        prod.y0
    }

    /// Exact division in the ring; an inexact division is an internal error.
    pub fn div_exact(&self, num: &CurvePoly, den: &CurvePoly) -> Result<CurvePoly> {
        if den.is_zero() {
            return Err(Error::InexactPolynomialDivision);
        }
        let nd = self.norm(den);
        let w = self.mul(num, &self.conj(den));
        Ok(CurvePoly { y0: w.y0.div_exact(&nd)?, y1: w.y1.div_exact(&nd)? })
    }
}

/// Memoized table of division polynomials for one curve.
///
/// Growing the table mutates the memo, so shared use across threads needs
/// an external lock (single-writer); everything else in this module is
/// pure. `memo_limit` caps how many ψ polynomials may be cached, settable
/// through the `EDSKIT_MEMO_LIMIT` environment variable via [`DivisionPolys::from_env`].
pub struct DivisionPolys {
    ring: CurveRing,
    psi: Vec<CurvePoly>,
    memo_limit: Option<usize>,
}

impl DivisionPolys {
    pub fn new(curve: &Curve) -> Self {
        Self::with_memo_limit(curve, None)
    }

    /// Reads `EDSKIT_MEMO_LIMIT` (a positive integer; unset means unlimited).
    pub fn from_env(curve: &Curve) -> Self {
        let limit = std::env::var("EDSKIT_MEMO_LIMIT")
            .ok()
            .and_then(|v| v.parse::<usize>().ok());
        Self::with_memo_limit(curve, limit)
    }

    pub fn with_memo_limit(curve: &Curve, memo_limit: Option<usize>) -> Self {
        let ring = CurveRing::new(curve);
        let (b2, b4, b6, b8) = curve.b_invariants();

        let psi2 = CurvePoly { y0: ring.g.clone(), y1: Poly::constant(rat_int(2)) };
        let psi3 = CurvePoly {
            y0: Poly::new(vec![
                b8.clone(),
                rat_int(3) * &b6,
                rat_int(3) * &b4,
                b2.clone(),
                rat_int(3),
            ]),
            y1: Poly::zero(),
        };
        let v4 = CurvePoly {
            y0: Poly::new(vec![
                &b4 * &b8 - &b6 * &b6,
                &b2 * &b8 - &b4 * &b6,
                rat_int(10) * &b8,
                rat_int(10) * &b6,
                rat_int(5) * &b4,
                b2.clone(),
                rat_int(2),
            ]),
            y1: Poly::zero(),
        };
        let psi4 = ring.mul(&psi2, &v4);

        DivisionPolys {
            ring,
            psi: vec![CurvePoly::zero(), CurvePoly::one(), psi2, psi3, psi4],
            memo_limit,
        }
    }

    pub fn ring(&self) -> &CurveRing {
        &self.ring
    }

    fn ensure(&mut self, n: usize) -> Result<()> {
        if let Some(limit) = self.memo_limit {
            if n + 1 > limit.max(self.psi.len()) {
                return Err(Error::MemoLimitExceeded { limit, requested: n });
            }
        }
        while self.psi.len() <= n {
            let i = self.psi.len();
            let k = i / 2;
            let next = if i % 2 == 1 {
                let a = self.ring.mul(&self.psi[k + 2], &self.cube(k));
                let b = self.ring.mul(&self.psi[k - 1], &self.cube(k + 1));
                a.sub(&b)
            } else {
                let sq = self.ring.mul(&self.psi[k - 1], &self.psi[k - 1]);
                let a = self.ring.mul(&sq, &self.ring.mul(&self.psi[k], &self.psi[k + 2]));
                let sq2 = self.ring.mul(&self.psi[k + 1], &self.psi[k + 1]);
                let b = self.ring.mul(&self.psi[k - 2], &self.ring.mul(&self.psi[k], &sq2));
                self.ring.div_exact(&a.sub(&b), &self.psi[2])?
            };
            self.psi.push(next);
        }
        Ok(())
    }

    fn cube(&self, n: usize) -> CurvePoly {
        let sq = self.ring.mul(&self.psi[n], &self.psi[n]);
        self.ring.mul(&sq, &self.psi[n])
    }

    /// Canonical ψ_n.
    pub fn psi(&mut self, n: usize) -> Result<CurvePoly> {
        self.ensure(n)?;
        Ok(self.psi[n].clone())
    }

    /// Canonical (φ_n, ω_n); φ0 = ω0 = 1, φ1 = x, ω1 = y.
    pub fn phi_omega(&mut self, n: usize) -> Result<(CurvePoly, CurvePoly)> {
        match n {
            0 => return Ok((CurvePoly::one(), CurvePoly::one())),
            1 => return Ok((CurvePoly::x(), CurvePoly::y())),
            _ => {}
        }
        self.ensure(n + 2)?;
        let ring = &self.ring;
        let a1 = ring.curve.a1.clone();
        let a3 = ring.curve.a3.clone();

        let psi_n_sq = ring.mul(&self.psi[n], &self.psi[n]);
        let phi = ring
            .mul(&CurvePoly::x(), &psi_n_sq)
            .sub(&ring.mul(&self.psi[n + 1], &self.psi[n - 1]));

        let prev_sq = ring.mul(&self.psi[n - 1], &self.psi[n - 1]);
        let next_sq = ring.mul(&self.psi[n + 1], &self.psi[n + 1]);
        let lead = ring
            .mul(&prev_sq, &self.psi[n + 2])
            .sub(&ring.mul(&self.psi[n - 2], &next_sq));
        let inner = phi.scale(&a1).add(&psi_n_sq.scale(&a3));
        let num = lead.sub(&ring.mul(&self.psi[2], &ring.mul(&self.psi[n], &inner)));
        let omega = ring.div_exact(&num, &self.psi[2].scale(&rat_int(2)))?;
        Ok((phi, omega))
    }
}

/// Convenience wrapper building a fresh memo table; prefer
/// [`DivisionPolys`] when several indices are needed on one curve.
pub fn psi_poly(curve: &Curve, n: usize) -> Result<CurvePoly> {
    DivisionPolys::new(curve).psi(n)
}

/// Convenience wrapper; see [`DivisionPolys::phi_omega`].
pub fn phi_omega_poly(curve: &Curve, n: usize) -> Result<(CurvePoly, CurvePoly)> {
    DivisionPolys::new(curve).phi_omega(n)
}

/// The arrays F_n = γ^{1−n²}ψ_n(P), G_n = γ^{−2n²}φ_n(P),
/// H_n = γ^{−3n²}ω_n(P) for n = 0..=n_max.
///
/// `h_defined` is false when ψ2(P) = 0 (a 2-torsion base point): the H
/// values are still filled with the polynomial values ω_n(P), which remain
/// well defined, but the recursion that usually defines H divides by
/// F2 = 0 there, so the order-2 family reports H as unavailable.
#[derive(Debug, Clone)]
pub struct SequenceTriple {
    pub curve: Curve,
    pub point: Point,
    pub gamma: Rat,
    pub f: Vec<Rat>,
    pub g: Vec<Rat>,
    pub h: Vec<Rat>,
    pub h_defined: bool,
}

impl SequenceTriple {
    pub fn n_max(&self) -> usize {
        self.f.len() - 1
    }

    /// True when every stored value is an integer (expected for γ = 1 on
    /// an integral model with integral point).
    pub fn all_integral(&self) -> bool {
        self.f
            .iter()
            .chain(self.g.iter())
            .chain(self.h.iter())
            .all(|v| v.is_integer())
    }
}

/// Evaluate the three sequences at an affine point.
///
/// Works by specializing the parity-split ψ recursions at x(P), which
/// stays exact and division-free even when ψ2(P) = 0.
pub fn eval_sequences(curve: &Curve, p: &Point, gamma: &Rat, n_max: usize) -> Result<SequenceTriple> {
    let (x, y) = p.xy().ok_or(Error::InfinitePointInput)?;
    if !curve.is_on_curve(p) {
        return Err(Error::PointOffCurve);
    }
    if gamma.is_zero() {
        return Err(Error::InvalidParameter("gamma must be nonzero".into()));
    }
    if n_max < 1 {
        return Err(Error::InvalidParameter("n_max must be at least 1".into()));
    }

    let (b2, b4, b6, b8) = curve.b_invariants();
    let t = rat_int(2) * y + &curve.a1 * x + &curve.a3; // ψ2(P)
    let s = &t * &t;

    let top = (n_max + 2).max(4);
    let mut w = Vec::with_capacity(top + 1);
    w.push(Rat::zero());
    w.push(Rat::one());
    w.push(Rat::one());
    // ψ3 and ψ4/ψ2 as polynomials in x, evaluated directly.
    let x2 = x * x;
    let x3 = &x2 * x;
    let x4 = &x2 * &x2;
    w.push(rat_int(3) * &x4 + &b2 * &x3 + rat_int(3) * (&b4 * &x2) + rat_int(3) * (&b6 * x) + &b8);
    let x5 = &x4 * x;
    let x6 = &x4 * &x2;
    w.push(
        rat_int(2) * &x6
            + &b2 * &x5
            + rat_int(5) * (&b4 * &x4)
            + rat_int(10) * (&b6 * &x3)
            + rat_int(10) * (&b8 * &x2)
            + (&b2 * &b8 - &b4 * &b6) * x
            + (&b4 * &b8 - &b6 * &b6),
    );
    let s2 = &s * &s;
    for m in 5..=top {
        let k = m / 2;
        let value = if m % 2 == 1 {
            let t1 = &w[k + 2] * &w[k] * &w[k] * &w[k];
            let t2 = &w[k - 1] * &w[k + 1] * &w[k + 1] * &w[k + 1];
            if k % 2 == 0 {
                &s2 * t1 - t2
            } else {
                t1 - &s2 * t2
            }
        } else {
            &w[k] * (&w[k + 2] * (&w[k - 1] * &w[k - 1]) - &w[k - 2] * (&w[k + 1] * &w[k + 1]))
        };
        w.push(value);
    }

    // φ_n(P) and ω_n(P) from the parity split.
    let mut phi = Vec::with_capacity(n_max + 1);
    phi.push(Rat::one());
    for n in 1..=n_max {
        let cross = &w[n + 1] * &w[n - 1];
        let v = if n % 2 == 0 {
            x * &s * (&w[n] * &w[n]) - cross
        } else {
            x * (&w[n] * &w[n]) - &s * cross
        };
        phi.push(v);
    }

    let half = Rat::new(1.into(), 2.into());
    let mut omega = Vec::with_capacity(n_max + 1);
    omega.push(Rat::one());
    if n_max >= 1 {
        omega.push(y.clone());
    }
    for n in 2..=n_max {
        let lead = &w[n - 1] * &w[n - 1] * &w[n + 2] - &w[n - 2] * (&w[n + 1] * &w[n + 1]);
        let v = if n % 2 == 0 {
            let inner = &curve.a1 * &phi[n] + &curve.a3 * &s * (&w[n] * &w[n]);
            (lead - &t * &w[n] * inner) * &half
        } else {
            let inner = &curve.a1 * &phi[n] + &curve.a3 * (&w[n] * &w[n]);
            (&t * lead - &w[n] * inner) * &half
        };
        omega.push(v);
    }

    let gamma_is_one = gamma.is_one();
    let mut f = Vec::with_capacity(n_max + 1);
    let mut g = Vec::with_capacity(n_max + 1);
    let mut h = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let psi_val = if n % 2 == 0 { &t * &w[n] } else { w[n].clone() };
        if gamma_is_one {
            f.push(psi_val);
            g.push(phi[n].clone());
            h.push(omega[n].clone());
        } else {
            let nn = (n * n) as i64;
            f.push(rat_pow(gamma, 1 - nn) * psi_val);
            g.push(rat_pow(gamma, -2 * nn) * &phi[n]);
            h.push(rat_pow(gamma, -3 * nn) * &omega[n]);
        }
    }

    Ok(SequenceTriple {
        curve: curve.clone(),
        point: p.clone(),
        gamma: gamma.clone(),
        f,
        g,
        h,
        h_defined: !t.is_zero(),
    })
}

/// [n]P = (γ²G_n/F_n², γ³H_n/F_n³), or the point at infinity when F_n = 0.
pub fn multiple_from_sequences(seq: &SequenceTriple, n: usize) -> Result<Point> {
    if n < 1 || n > seq.n_max() {
        return Err(Error::IndexOutOfRange { n, n_max: seq.n_max() });
    }
    let fn_val = &seq.f[n];
    if fn_val.is_zero() {
        return Ok(Point::Infinity);
    }
    let g2 = &seq.gamma * &seq.gamma;
    let f2 = fn_val * fn_val;
    let x = &g2 * &seq.g[n] / &f2;
    let y = &g2 * &seq.gamma * &seq.h[n] / (f2 * fn_val);
    Ok(Point::affine(x, y))
}

/// A witness that a recurrence or divisibility instance failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdsViolation {
    Recurrence { m: usize, n: usize },
    Divisibility { n: usize, m: usize },
}

/// Outcome of checking a sequence against the elliptic divisibility laws.
#[derive(Debug, Clone)]
pub struct EdsReport {
    pub recurrence_ok: bool,
    pub divisibility_ok: bool,
    /// Divisibility is only meaningful for integer sequences.
    pub divisibility_checked: bool,
    pub proper: bool,
    pub discriminant: Rat,
    pub nonsingular: bool,
    pub violations: Vec<EdsViolation>,
}

/// Check h_{m+n}h_{m−n} = h_{m+1}h_{m−1}h_n² − h_{n+1}h_{n−1}h_m² for all
/// m ≥ n ≥ 1 with m+n within range, the divisibility law h_n | h_m for
/// n | m (integer sequences only), and the discriminant built from
/// h2, h3, h4. A proper sequence (h0 = 0, h1 = 1, h2h3 ≠ 0) that passes
/// the recurrence and has nonzero discriminant is reported nonsingular.
pub fn check_eds(h: &[Rat]) -> Result<EdsReport> {
    if h.len() < 5 {
        return Err(Error::SequenceTooShort { needed: 5, got: h.len() });
    }
    let n_max = h.len() - 1;
    let mut violations = Vec::new();

    for n in 1..=n_max {
        for m in n..=(n_max - n) {
            let lhs = &h[m + n] * &h[m - n];
            let rhs = &h[m + 1] * &h[m - 1] * (&h[n] * &h[n]) - &h[n + 1] * &h[n - 1] * (&h[m] * &h[m]);
            if lhs != rhs {
                violations.push(EdsViolation::Recurrence { m, n });
            }
        }
    }
    let recurrence_ok = violations.is_empty();

    let divisibility_checked = h.iter().all(|v| v.is_integer());
    let mut divisibility_ok = true;
    if divisibility_checked {
        let ints: Vec<_> = h.iter().map(|v| v.to_integer()).collect();
        for n in 1..=n_max {
            let mut m = 2 * n;
            while m <= n_max {
                let ok = if ints[n].is_zero() {
                    ints[m].is_zero()
                } else {
                    (&ints[m] % &ints[n]).is_zero()
                };
                if !ok {
                    divisibility_ok = false;
                    violations.push(EdsViolation::Divisibility { n, m });
                }
                m += n;
            }
        }
    }

    let (h2, h3, h4) = (&h[2], &h[3], &h[4]);
    let p = |v: &Rat, e: i64| rat_pow(v, e);
    let discriminant = h4 * p(h2, 15) - p(h3, 3) * p(h2, 12)
        + rat_int(3) * p(h4, 2) * p(h2, 10)
        - rat_int(20) * h4 * p(h3, 3) * p(h2, 7)
        + rat_int(3) * p(h4, 3) * p(h2, 5)
        + rat_int(16) * p(h3, 6) * p(h2, 4)
        + rat_int(8) * p(h4, 2) * p(h3, 3) * p(h2, 2)
        + p(h4, 4);

    let proper = h[0].is_zero() && h[1].is_one() && !(&h[2] * &h[3]).is_zero();
    let nonsingular = recurrence_ok && proper && !discriminant.is_zero();

    Ok(EdsReport {
        recurrence_ok,
        divisibility_ok,
        divisibility_checked,
        proper,
        discriminant,
        nonsingular,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    fn cubic_curve() -> Curve {
        Curve::from_i64(0, 0, 0, 0, 1).unwrap()
    }

    fn p23() -> Point {
        Point::affine(rat_int(2), rat_int(3))
    }

    #[test]
    fn psi_initial_values() {
        let c = cubic_curve();
        let mut t = DivisionPolys::new(&c);
        assert!(t.psi(0).unwrap().is_zero());
        assert_eq!(t.psi(1).unwrap(), CurvePoly::one());
        // ψ2 = 2y on this curve.
        let psi2 = t.psi(2).unwrap();
        assert_eq!(psi2.eval(&rat_int(2), &rat_int(3)), rat_int(6));
        // ψ3 = 3x⁴ + 12x here.
        let psi3 = t.psi(3).unwrap();
        assert!(psi3.y1.is_zero());
        assert_eq!(psi3.y0.coeffs()[4], rat_int(3));
        assert_eq!(psi3.y0.coeffs()[1], rat_int(12));
        assert_eq!(psi3.eval(&rat_int(2), &rat_int(3)), rat_int(72));
    }

    #[test]
    fn psi2_on_long_form() {
        let c = Curve::from_i64(1, -2, 3, -4, 6).unwrap();
        let mut t = DivisionPolys::new(&c);
        let psi2 = t.psi(2).unwrap();
        // 2y + x + 3 at (x, y) = (1, 2)
        assert_eq!(psi2.eval(&rat_int(1), &rat_int(2)), rat_int(8));
    }

    #[test]
    fn phi_omega_initial_values() {
        let c = cubic_curve();
        let mut t = DivisionPolys::new(&c);
        let (phi0, omega0) = t.phi_omega(0).unwrap();
        assert_eq!(phi0, CurvePoly::one());
        assert_eq!(omega0, CurvePoly::one());
        let (phi1, omega1) = t.phi_omega(1).unwrap();
        assert_eq!(phi1.eval(&rat_int(2), &rat_int(3)), rat_int(2));
        assert_eq!(omega1.eval(&rat_int(2), &rat_int(3)), rat_int(3));
    }

    #[test]
    fn phi_omega_2_worked_example() {
        let c = cubic_curve();
        let mut t = DivisionPolys::new(&c);
        let (phi2, omega2) = t.phi_omega(2).unwrap();
        assert_eq!(phi2.eval(&rat_int(2), &rat_int(3)), rat_int(0));
        assert_eq!(omega2.eval(&rat_int(2), &rat_int(3)), rat_int(216));
    }

    #[test]
    fn sequences_on_cubic() {
        let c = cubic_curve();
        let seq = eval_sequences(&c, &p23(), &Rat::one(), 4).unwrap();
        let f: Vec<_> = seq.f.iter().map(|v| v.to_integer()).collect();
        assert_eq!(f, [0, 1, 6, 72, 2592].map(crate::arith::int));
        assert_eq!(seq.g[0], rat_int(1));
        assert_eq!(seq.g[1], rat_int(2));
        assert_eq!(seq.g[2], rat_int(0));
        assert_eq!(seq.h[0], rat_int(1));
        assert_eq!(seq.h[1], rat_int(3));
        assert_eq!(seq.h[2], rat_int(216));
        assert!(seq.h_defined);
    }

    #[test]
    fn multiples_match_group_law() {
        let c = cubic_curve();
        let seq = eval_sequences(&c, &p23(), &Rat::one(), 12).unwrap();
        for n in 1..=12 {
            let from_seq = multiple_from_sequences(&seq, n).unwrap();
            let from_law = c.scalar_mul(n as u64, &p23()).unwrap();
            assert_eq!(from_seq, from_law, "n = {}", n);
        }
        // (2,3) has order 6, so F vanishes exactly at multiples of 6.
        for n in 1..=12 {
            assert_eq!(seq.f[n].is_zero(), n % 6 == 0, "n = {}", n);
        }
    }

    #[test]
    fn symbolic_and_numeric_paths_agree() {
        let cases: Vec<(Curve, Point)> = vec![
            (cubic_curve(), p23()),
            (Curve::from_i64(0, 0, 1, -1, 0).unwrap(), Point::affine(rat_int(0), rat_int(0))),
            (Curve::from_i64(0, -1, -1, 0, 0).unwrap(), Point::affine(rat_int(0), rat_int(0))),
            (Curve::from_i64(1, -1, 1, -2, 10).unwrap(), Point::affine(rat_int(1), rat_int(2))),
            // 2-torsion base point: ψ2(P) = 0.
            (Curve::from_i64(0, 0, 0, 1, 0).unwrap(), Point::affine(rat_int(0), rat_int(0))),
        ];
        for (curve, p) in cases {
            let (x, y) = p.xy().map(|(x, y)| (x.clone(), y.clone())).unwrap();
            let seq = eval_sequences(&curve, &p, &Rat::one(), 10).unwrap();
            let mut table = DivisionPolys::new(&curve);
            for n in 0..=10usize {
                let psi = table.psi(n).unwrap();
                assert_eq!(psi.eval(&x, &y), seq.f[n], "psi mismatch at n={}", n);
                let (phi, omega) = table.phi_omega(n).unwrap();
                assert_eq!(phi.eval(&x, &y), seq.g[n], "phi mismatch at n={}", n);
                assert_eq!(omega.eval(&x, &y), seq.h[n], "omega mismatch at n={}", n);
            }
        }
    }

    #[test]
    fn torsion_point_has_nonzero_phi_where_psi_vanishes() {
        // Order-5 point: ψ5(P) = 0 but φ5(P) != 0 since gcd(φ, ψ²) = 1.
        let c = Curve::from_i64(0, -1, -1, 0, 0).unwrap();
        let p = Point::affine(rat_int(0), rat_int(0));
        let seq = eval_sequences(&c, &p, &Rat::one(), 5).unwrap();
        assert!(seq.f[5].is_zero());
        assert!(!seq.g[5].is_zero());
    }

    #[test]
    fn two_torsion_point_evaluates() {
        // y² = x³ + x with (0,0) of order 2: the even-index F values vanish
        // and odd multiples return the point itself.
        let c = Curve::from_i64(0, 0, 0, 1, 0).unwrap();
        let p = Point::affine(rat_int(0), rat_int(0));
        let seq = eval_sequences(&c, &p, &Rat::one(), 9).unwrap();
        assert!(!seq.h_defined);
        for n in 1..=9 {
            assert_eq!(seq.f[n].is_zero(), n % 2 == 0, "n = {}", n);
            let got = multiple_from_sequences(&seq, n).unwrap();
            let want = c.scalar_mul(n as u64, &p).unwrap();
            assert_eq!(got, want, "n = {}", n);
        }
    }

    #[test]
    fn gamma_scaling_is_exact() {
        let c = cubic_curve();
        let g1 = Rat::one();
        let g2 = rat(2, 3);
        let s1 = eval_sequences(&c, &p23(), &g1, 8).unwrap();
        let s2 = eval_sequences(&c, &p23(), &g2, 8).unwrap();
        for n in 0..=8usize {
            let nn = (n * n) as i64;
            let ratio = rat(2, 3);
            assert_eq!(s2.f[n], rat_pow(&ratio, 1 - nn) * &s1.f[n]);
            assert_eq!(s2.g[n], rat_pow(&ratio, -2 * nn) * &s1.g[n]);
            assert_eq!(s2.h[n], rat_pow(&ratio, -3 * nn) * &s1.h[n]);
        }
        // The reconstructed multiples do not depend on γ.
        for n in 1..=8 {
            assert_eq!(
                multiple_from_sequences(&s1, n).unwrap(),
                multiple_from_sequences(&s2, n).unwrap()
            );
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let c = cubic_curve();
        assert!(matches!(
            eval_sequences(&c, &Point::Infinity, &Rat::one(), 4),
            Err(Error::InfinitePointInput)
        ));
        assert!(matches!(
            eval_sequences(&c, &p23(), &Rat::zero(), 4),
            Err(Error::InvalidParameter(_))
        ));
        let seq = eval_sequences(&c, &p23(), &Rat::one(), 4).unwrap();
        assert!(matches!(
            multiple_from_sequences(&seq, 5),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            multiple_from_sequences(&seq, 0),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn memo_limit_is_enforced() {
        let c = cubic_curve();
        let mut t = DivisionPolys::with_memo_limit(&c, Some(8));
        assert!(t.psi(7).is_ok());
        assert!(matches!(t.psi(20), Err(Error::MemoLimitExceeded { .. })));
    }

    #[test]
    fn classical_sequence_is_an_eds() {
        // y² + y = x³ − x at (0,0) generates 0, 1, 1, −1, 1, 2, −1, −3, −5, 7, −4, ...
        let c = Curve::from_i64(0, 0, 1, -1, 0).unwrap();
        let p = Point::affine(rat_int(0), rat_int(0));
        let seq = eval_sequences(&c, &p, &Rat::one(), 14).unwrap();
        let want: Vec<i64> = vec![0, 1, 1, -1, 1, 2, -1, -3, -5, 7, -4];
        for (n, v) in want.iter().enumerate() {
            assert_eq!(seq.f[n], rat_int(*v), "n = {}", n);
        }
        let report = check_eds(&seq.f).unwrap();
        assert!(report.recurrence_ok);
        assert!(report.divisibility_checked && report.divisibility_ok);
        assert!(report.proper);
        // The discriminant of this sequence equals the famous 37.
        assert_eq!(report.discriminant, rat_int(37));
        assert!(report.nonsingular);
    }

    #[test]
    fn degenerate_sequences() {
        // h_n = n satisfies the recurrence but has discriminant zero.
        let linear: Vec<Rat> = (0..=10).map(rat_int).collect();
        let r = check_eds(&linear).unwrap();
        assert!(r.recurrence_ok);
        assert!(r.proper);
        assert!(r.discriminant.is_zero());
        assert!(!r.nonsingular);

        // All ones from h1 on: the recurrence itself fails (first witness
        // at (m, n) = (3, 2)) and the discriminant comes out 11, so the
        // sequence is not a nonsingular EDS.
        let mut ones: Vec<Rat> = vec![Rat::zero()];
        ones.extend((1..=8).map(|_| Rat::one()));
        let r = check_eds(&ones).unwrap();
        assert!(!r.recurrence_ok);
        assert!(r.violations.contains(&EdsViolation::Recurrence { m: 3, n: 2 }));
        assert_eq!(r.discriminant, rat_int(11));
        assert!(!r.nonsingular);
    }

    #[test]
    fn divisibility_violation_is_reported() {
        // Tamper with a genuine EDS so that h2 no longer divides h4.
        let c = Curve::from_i64(0, 0, 1, -1, 0).unwrap();
        let p = Point::affine(rat_int(0), rat_int(0));
        let mut h = eval_sequences(&c, &p, &Rat::one(), 10).unwrap().f;
        h[2] = rat_int(2);
        let r = check_eds(&h).unwrap();
        assert!(!r.recurrence_ok || !r.divisibility_ok);
    }

    #[test]
    fn short_input_rejected() {
        let h: Vec<Rat> = (0..4).map(rat_int).collect();
        assert!(matches!(check_eds(&h), Err(Error::SequenceTooShort { .. })));
    }
}
