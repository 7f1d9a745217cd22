//! Solve x² − D·y² = 1 by continued fractions and walk the branch that
//! parametrizes the order-8 square condition.
//!
//! Run with: cargo run --example pell_alphas

use edskit::arith::{pell_solutions, Int};
use edskit::intpoly::menu;
use edskit::squarecube::alphas_from_pell;

fn main() {
    for d in [2i64, 3, 5, 8, 13, 61] {
        let sols = pell_solutions(&Int::from(d), 3).unwrap();
        let shown: Vec<String> = sols.iter().map(|s| format!("({}, {})", s.x, s.y)).collect();
        println!("D = {:>2}: {}", d, shown.join(", "));
    }

    println!("\nD = 8 drives the order-8 square condition: τ = 4α − 3 needs");
    println!("τ ≡ 1 (mod 4), which every second solution satisfies:");
    for alpha in alphas_from_pell(6).unwrap() {
        let value = menu::am1_2am1().eval(&alpha);
        let root = value.sqrt();
        println!("  α = {:>12}: (α−1)(2α−1) = {} = {}²", alpha, value, root);
        assert_eq!(&root * &root, value);
    }
}
