//! l-regular and l-core partition congruences and incongruence witnesses.
//!
//!     cargo run --release --example regular_and_core

use etacong::engine::{corollary_suite, EngineCaps};
use etacong::tables::{audit_core, audit_regular};

fn main() -> Result<(), etacong::Error> {
    let caps = EngineCaps::default();
    for name in ["regular", "core"] {
        let report = corollary_suite(name, &caps)?;
        println!("suite {}:", report.name);
        for step in &report.steps {
            println!(
                "  [{}] {:<14} {}",
                if step.passed { "pass" } else { "FAIL" },
                step.name,
                step.details
            );
        }
    }

    // parameter audit against the published tables
    for (name, audit) in [("regular", audit_regular()), ("core", audit_core())] {
        println!("{name} table audit:");
        for f in &audit.findings {
            println!("  finding: {f}");
        }
        for n in &audit.notes {
            println!("  note: {n}");
        }
        if audit.findings.is_empty() && audit.notes.is_empty() {
            println!("  all parameters match");
        }
    }
    Ok(())
}
