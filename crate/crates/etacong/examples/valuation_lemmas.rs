//! The l-adic structure of the S-polynomial coefficients: support windows,
//! floor-formula valuation bounds, and the exact-valuation dichotomy at the
//! extremal power.
//!
//!     cargo run --release --example valuation_lemmas

use etacong::modeq::{check_valuation_bounds, deep_residues, newton_s, support_min};
use etacong::qseries::padic_valuation;

fn main() -> Result<(), etacong::Error> {
    for (ell, lo, hi) in [(5u64, -20i64, 20i64), (7, -20, 20), (13, -10, 10)] {
        let report = check_valuation_bounds(ell, lo, hi)?;
        println!(
            "l = {ell}: {} values of r, {} coefficients checked, zero violations",
            report.r_checked.len(),
            report.terms_checked
        );
    }

    // the dichotomy in action: the extremal coefficient has valuation
    // exactly 1 unless r falls in the deep residue classes
    println!(
        "deep residue classes: l=5 -> {:?}, l=7 -> {:?}, l=13 -> {:?}",
        deep_residues(5),
        deep_residues(7),
        deep_residues(13)
    );
    for r in 1i64..=10 {
        let s = newton_s(5, r)?;
        let p_min = support_min(5, r);
        let v = padic_valuation(s.poly.coeff(p_min).unwrap(), 5);
        println!("  pi_5 of the g^{p_min} coefficient of S_{{{r},5}} = {v}");
    }
    Ok(())
}
