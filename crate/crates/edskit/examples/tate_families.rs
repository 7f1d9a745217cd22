//! Build every torsion family and confirm that (0, 0) has the advertised
//! order, that the models are integral, and that F_n vanishes exactly at
//! multiples of the order.
//!
//! Run with: cargo run --example tate_families

use edskit::arith::{Int, Rat};
use edskit::curve::OrderResult;
use edskit::divpoly::eval_sequences;
use edskit::tate::{admissible_alphas, kubert_curve, tate_curve};
use num_traits::One;

fn main() {
    for order in [4u32, 5, 6, 7, 8, 9, 10, 12] {
        let alpha = Int::from(2);
        let t = match tate_curve(order, &alpha) {
            Ok(t) => t,
            Err(_) => tate_curve(order, &Int::from(3)).unwrap(),
        };
        let c = &t.curve;
        println!(
            "order {:>2}: y² + ({})xy + ({})y = x³ + ({})x²   at alpha = {}",
            order,
            c.a1,
            c.a3,
            c.a2,
            t.alpha().unwrap()
        );
        assert_eq!(c.point_order(&t.point(), 16).unwrap(), OrderResult::Order(order));

        let seq = eval_sequences(c, &t.point(), &Rat::one(), 2 * order as usize).unwrap();
        for n in 1..=seq.n_max() {
            assert!(seq.f[n].is_integer());
            assert_eq!(seq.f[n].numer().sign() == num_bigint::Sign::NoSign, n % order as usize == 0);
        }
        println!("          admissible alpha in [-5, 5]: {:?}", admissible_alphas(order, -5, 5));
    }

    let two = kubert_curve(2, &Int::from(0), &Int::from(1)).unwrap();
    println!("order  2: y² = x³ + x, H sequence available: {}", two.h_defined);
    let three = kubert_curve(3, &Int::from(0), &Int::from(1)).unwrap();
    println!("order  3: y² + y = x³, H sequence available: {}", three.h_defined);
}
