//! The parameter sequences lambda_r, mu_r, n_r, A_r and the growth rate
//! alpha_l for generalized partition families.
//!
//!     cargo run --release --example sequence_parameters

use etacong::sequence::{alpha, sequence_params};

fn main() {
    // the Ramanujan family: p(5^r m + n_r) = 0 mod 5^{A_r}
    let p = sequence_params(5, 1, 0, 4);
    println!("(l, c, d) = (5, 1, 0):");
    for r in 1..=4 {
        println!(
            "  r = {r}: step 5^{r}, canonical residue {}, A_{r} = {}",
            p.n_canonical[r],
            p.a.as_ref().unwrap()[r]
        );
    }

    // the 5-colored Frobenius family (0, 1): A grows like 2r - 1
    let p = sequence_params(5, 0, 1, 6);
    let a = p.a.as_ref().unwrap();
    println!("(5, 0, 1): A_2, A_4, A_6 = {}, {}, {}", a[2], a[4], a[6]);

    // alpha values reproduce the published rate tables
    for (ell, c, d) in [
        (5u64, 1i64, 0i64),
        (5, 0, 1),
        (7, 8, -7),
        (13, 8, 0),
        (17, 3, 3),
    ] {
        println!("alpha_{ell}({c}, {d}) = {}", alpha(ell, c, d).unwrap());
    }

    // l = 11 carries no theta table; A_r is externally sourced there
    let p11 = sequence_params(11, 0, 1, 4);
    println!("A_r available at l=11: {}", p11.a.is_some());
    println!(
        "external A_2 for (11, 0, 1): {:?}",
        etacong::sequence::a11_external(0, 1, 2)
    );
}
