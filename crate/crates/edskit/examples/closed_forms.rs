//! Validate every built-in general-term table against the recursion
//! oracle, then print the worked factorization of a few terms.
//!
//! Run with: cargo run --example closed_forms

use edskit::arith::Int;
use edskit::closedform::{all_errata, g_closed, h_closed_n8, spec_for, validate_spec, Target};

fn main() {
    let params: Vec<Int> = (-6..=6).map(Int::from).collect();

    println!("table validation against the recursion oracle (|param| <= 6, n <= 2N):");
    let mut all_ok = true;
    for family in [2u32, 3, 4, 5, 6, 7, 8, 9, 10, 12] {
        for target in [Target::F, Target::G, Target::H] {
            let spec = match spec_for(family, target) {
                Ok(s) => s,
                Err(_) => continue,
            };
            let out = validate_spec(spec, &params, 2 * family as u64).expect("oracle run");
            let status = if out.ok() { "ok" } else { "MISMATCH" };
            all_ok &= out.ok();
            println!(
                "  {}[N={}]: {} ({} values, {} params skipped)",
                target.letter(),
                family,
                status,
                out.values_checked,
                out.params_skipped
            );
            for m in out.mismatches.iter().take(3) {
                println!(
                    "    first disagreement: param={} n={} closed={} oracle={}",
                    m.param, m.n, m.closed, m.oracle
                );
            }
        }
    }

    println!("\nknown errata (printed value kept alongside the fitted one):");
    for e in all_errata() {
        println!(
            "  {}[N={}] factor {} (tables mod {}): {:?}",
            e.target.letter(),
            e.family,
            e.base,
            e.modulus,
            e.detail
        );
    }

    println!("\nsample factored terms:");
    let two = Int::from(2);
    for n in 1..=8u64 {
        println!("  order-8 F at alpha=2, n={}: {:?}", n, h_closed_n8(&two, n).map(|v| v.expand().to_string()));
    }
    println!("  order-10 G table:\n{}", spec_for(10, Target::G).unwrap().audit_text());
    let five = Int::from(5);
    println!("  g_closed(10, 5, 13) = {}", g_closed(10, &five, 13).unwrap().expand());

    assert!(all_ok, "at least one table disagreed with the oracle");
    println!("\nall tables agree with the oracle on this grid");
}
