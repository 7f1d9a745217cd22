//! Compute the F, G, H sequences at a point and reconstruct the multiples
//! [n]P = (γ²G_n/F_n², γ³H_n/F_n³) from them, cross-checked against the
//! group law.
//!
//! Run with: cargo run --example sequences

use edskit::arith::{rat_int, Rat};
use edskit::curve::{Curve, Point};
use edskit::divpoly::{eval_sequences, multiple_from_sequences};
use num_traits::One;

fn main() {
    // y² = x³ + 1 with P = (2, 3), a point of order 6.
    let curve = Curve::from_i64(0, 0, 0, 0, 1).unwrap();
    let p = Point::affine(rat_int(2), rat_int(3));
    let seq = eval_sequences(&curve, &p, &Rat::one(), 12).unwrap();

    println!("y² = x³ + 1 at P = (2, 3), gamma = 1:");
    println!("{:>3} {:>22} {:>22} {:>22}", "n", "F", "G", "H");
    for n in 0..=seq.n_max() {
        println!("{:>3} {:>22} {:>22} {:>22}", n, seq.f[n], seq.g[n], seq.h[n]);
    }

    println!("\nmultiples from the sequences vs the chord-tangent law:");
    for n in 1..=seq.n_max() {
        let from_seq = multiple_from_sequences(&seq, n).unwrap();
        let from_law = curve.scalar_mul(n as u64, &p).unwrap();
        assert_eq!(from_seq, from_law);
        match from_seq.xy() {
            Some((x, y)) => println!("  [{}]P = ({}, {})", n, x, y),
            None => println!("  [{}]P = O   (F_{} = 0)", n, n),
        }
    }
}
