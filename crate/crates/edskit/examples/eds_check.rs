//! The F-sequence of a curve/point pair is an elliptic divisibility
//! sequence: it satisfies h_{m+n}h_{m−n} = h_{m+1}h_{m−1}h_n² −
//! h_{n+1}h_{n−1}h_m² and h_n | h_m whenever n | m. This example checks
//! the classical sequence 0, 1, 1, −1, 1, 2, −1, −3, −5, 7, −4, ... and a
//! couple of degenerate ones.
//!
//! Run with: cargo run --example eds_check

use edskit::arith::{rat_int, Rat};
use edskit::curve::{Curve, Point};
use edskit::divpoly::{check_eds, eval_sequences};
use num_traits::One;

fn main() {
    let curve = Curve::from_i64(0, 0, 1, -1, 0).unwrap();
    let p = Point::affine(rat_int(0), rat_int(0));
    let seq = eval_sequences(&curve, &p, &Rat::one(), 20).unwrap();

    let shown: Vec<String> = seq.f.iter().take(13).map(|v| v.to_string()).collect();
    println!("y² + y = x³ − x at (0,0): F = {}, ...", shown.join(", "));

    let report = check_eds(&seq.f).unwrap();
    println!(
        "recurrence: {}, divisibility: {}, discriminant: {}, nonsingular: {}",
        report.recurrence_ok, report.divisibility_ok, report.discriminant, report.nonsingular
    );
    assert!(report.nonsingular);

    // h_n = n satisfies the recurrence but its discriminant vanishes.
    let linear: Vec<Rat> = (0..=12).map(rat_int).collect();
    let report = check_eds(&linear).unwrap();
    println!(
        "\nh_n = n: recurrence {}, discriminant {}, nonsingular {}",
        report.recurrence_ok, report.discriminant, report.nonsingular
    );

    // All ones after h0 is not an EDS at all.
    let mut ones: Vec<Rat> = vec![Rat::from_integer(0.into())];
    ones.extend((1..=10).map(|_| Rat::one()));
    let report = check_eds(&ones).unwrap();
    println!(
        "0,1,1,1,...: recurrence {}, first witnesses {:?}",
        report.recurrence_ok,
        &report.violations[..report.violations.len().min(3)]
    );
}
