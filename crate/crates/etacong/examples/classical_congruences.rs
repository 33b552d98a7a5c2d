//! The Ramanujan congruence ladder verified against the brute-force oracle.
//!
//!     cargo run --release --example classical_congruences

use etacong::engine::{verify_claim, EngineCaps};
use etacong::CongruenceClaim;

fn main() -> Result<(), etacong::Error> {
    let caps = EngineCaps::default();
    let lines = [
        "classical 5 0 0 1 1 congruence",  // p(5n+4) = 0 mod 5
        "classical 5 0 0 2 2 congruence",  // p(25n+24) = 0 mod 25
        "classical 7 0 0 1 1 congruence",  // p(7n+5) = 0 mod 7
        "classical 7 0 0 2 2 congruence",  // p(49n+47) = 0 mod 49
        "classical 11 0 0 1 1 congruence", // p(11n+6) = 0 mod 11
    ];
    for line in lines {
        let claim = CongruenceClaim::parse_line(line)?;
        let report = verify_claim(&claim, 500, &caps)?;
        println!("{:?}  {}  [{}]", report.status, claim, report.details);
    }
    Ok(())
}
