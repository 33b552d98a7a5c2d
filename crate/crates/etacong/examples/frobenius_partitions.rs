//! Colored generalized Frobenius partitions: Andrews' lattice sum against
//! the published eta-quotient representations, plus their congruences.
//!
//!     cargo run --release --example frobenius_partitions

use etacong::engine::{corollary_suite, EngineCaps};
use etacong::oracle::{frobenius_table, FrobeniusSpec};

fn main() -> Result<(), etacong::Error> {
    // the lattice sum is the definition: enumerate Z^{k-1} under the
    // quadratic form Q(m) = ((sum m)^2 + sum m^2)/2, then divide by (q;q)^k
    let t = frobenius_table(FrobeniusSpec { k: 5 }, 8, 1 << 24)?;
    println!(
        "cphi_5(0..8) = {:?}",
        t.iter().map(|x| x.to_string()).collect::<Vec<_>>()
    );

    for name in ["frobenius5", "frobenius7", "frobenius11", "frobenius13"] {
        let report = corollary_suite(name, &EngineCaps::default())?;
        println!("suite {}:", report.name);
        for step in &report.steps {
            println!(
                "  [{}] {:<28} {}",
                if step.passed { "pass" } else { "FAIL" },
                step.name,
                step.details
            );
        }
    }
    Ok(())
}
