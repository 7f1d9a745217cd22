//! Exact arithmetic for the integer sequences attached to a rational point
//! on an elliptic curve.
//!
//! Writing the multiples of a point P as
//! [n]P = (γ²G_n/F_n², γ³H_n/F_n³), the normalized division-polynomial
//! values F_n, G_n, H_n form sequences with a lot of structure: F is an
//! elliptic divisibility sequence, the curve coefficients can be recovered
//! from G1, G2, H1, H2, and on the torsion families the general terms are
//! explicit products of powers of small polynomials in the family
//! parameter. This crate computes all of it exactly and cross-checks every
//! closed form against the honest group-law oracle:
//!
//! - [`arith`] — big integers/rationals, perfect-power tests, Pell solver;
//! - [`curve`] — long Weierstrass curves with the full chord-tangent law;
//! - [`divpoly`] — ψ/φ/ω polynomials, sequence evaluation, EDS checks;
//! - [`tate`] — the torsion families of orders 2..=10, 12;
//! - [`closedform`] — declarative exponent tables for the general terms;
//! - [`squarecube`] — which terms are squares or cubes, as exact verdicts;
//! - [`analytic`] — recovery of curve invariants from G1, G2, H1, H2.
//!
//! The `examples/` directory contains one runnable program per capability;
//! `edskit` is a thin CLI over the same functions with JSON output.

pub mod analytic;
pub mod arith;
pub mod closedform;
pub mod curve;
pub mod divpoly;
pub mod error;
pub mod intpoly;
pub mod poly;
pub mod squarecube;
pub mod tate;

pub use arith::{int, is_cube_term, is_square_term, isqrt, pell_solutions, Int, PellSolution, Rat};
pub use curve::{Curve, OrderResult, Point};
pub use divpoly::{
    check_eds, eval_sequences, multiple_from_sequences, CurvePoly, DivisionPolys, EdsReport,
    SequenceTriple,
};
pub use error::{Error, Result};
pub use tate::{kubert_curve, tate_curve, TateCurve};
