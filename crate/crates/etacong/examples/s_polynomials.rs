//! Power sums S_{r,l} of the modular equation roots, as Laurent polynomials
//! in the Hauptmodul, and the identity S_{r,l} = l * U_l(phi_l^r).
//!
//!     cargo run --release --example s_polynomials

use etacong::{newton_s, verify_s_identity};

fn main() -> Result<(), etacong::Error> {
    println!("small power sums at level 5:");
    for r in [1i64, 2, 3, -1, -2, -5] {
        println!("  S_{{{r},5}} = {}", newton_s(5, r)?.poly);
    }

    println!("negative closed forms at level 7:");
    for r in -7i64..=-1 {
        println!("  S_{{{r},7}} = {}", newton_s(7, r)?.poly);
    }

    println!("level 13 rows from the reciprocal equation:");
    for r in [-1i64, -2, -3] {
        println!("  S_{{{r},13}} = {}", newton_s(13, r)?.poly);
    }

    // every S polynomial is checked against l * U_l(phi^r) as q-series
    for (ell, r) in [(5u64, 3i64), (5, -5), (7, -4), (13, -2), (13, 4)] {
        let rep = verify_s_identity(ell, r, 150)?;
        println!(
            "S_{{{r},{ell}}} = {ell}*U_{ell}(phi^{r}) verified through q^{}",
            rep.max_verified_exponent
        );
    }
    Ok(())
}
