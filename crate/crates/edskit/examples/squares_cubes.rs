//! Which terms of the G- and H-sequences are squares or cubes? The
//! verdicts are residue-class tables with polynomial conditions on the
//! parameter; this example queries a few, sweeps one table against brute
//! force, and lists the parameters where the order-8 condition
//! (α−1)(2α−1) = □ holds.
//!
//! Run with: cargo run --example squares_cubes

use edskit::arith::Int;
use edskit::closedform::Target;
use edskit::intpoly::menu;
use edskit::squarecube::{
    alphas_from_pell, classify, eval_condition, search_alphas, verify_classification,
    Classification, Condition, PowerKind, SquareCubeQuery,
};

fn main() {
    println!("order-8 G squares by residue class mod 8:");
    for n in 0..8u64 {
        let verdict = classify(&SquareCubeQuery {
            family: 8,
            target: Target::G,
            power: PowerKind::Square,
            n,
        })
        .unwrap();
        let text = match &verdict {
            Classification::Iff(c) => format!("iff {}", c),
            other => other.verdict_word().to_string(),
        };
        println!("  n ≡ {} (8): {}", n, text);
    }

    let cond = Condition::IsSquareTerm(menu::am1_2am1());
    println!("\nalpha in [−100, 100] with (α−1)(2α−1) = □: {:?}", search_alphas(
        &cond,
        &Int::from(-100),
        &Int::from(100),
        &[Int::from(0), Int::from(1)],
    ));
    println!("first five alpha > 1 from the Pell branch: {:?}", alphas_from_pell(5).unwrap());
    assert!(eval_condition(&cond, &Int::from(5)));

    println!("\nsweeping the order-8 verdicts against brute force (|α| ≤ 12, n ≤ 48):");
    let params: Vec<Int> = (-12..=12).map(Int::from).collect();
    for (target, power) in [
        (Target::G, PowerKind::Square),
        (Target::G, PowerKind::Cube),
        (Target::H, PowerKind::Square),
        (Target::H, PowerKind::Cube),
    ] {
        let report = verify_classification(8, target, power, &params, 48).unwrap();
        println!(
            "  {} {}: {} terms, disagreements: {}",
            target.letter(),
            power.word(),
            report.terms_checked,
            report.disagreements.len()
        );
        assert!(report.ok());
    }
}
