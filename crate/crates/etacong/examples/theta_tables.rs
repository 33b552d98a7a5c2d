//! The divisibility bits theta_l(lambda, mu) and their reduction relations.
//!
//!     cargo run --release --example theta_tables

use etacong::basis::{export_theta_csv, theta};

fn main() -> Result<(), etacong::Error> {
    for ell in [5u64, 7, 13] {
        let row: Vec<u8> = (0..ell as i64)
            .map(|l| u8::from(theta(ell, l, 0).unwrap()))
            .collect();
        println!("theta_{ell}(lambda, 0), lambda = 0..{}: {row:?}", ell - 1);
    }

    // general arguments reduce through the operator relations
    println!("theta_5(7, 2)  = {}", u8::from(theta(5, 7, 2)?));
    println!("theta_13(0, 5) = {}", u8::from(theta(13, 0, 5)?));

    // l = 17 ships as a published 17 x 4 table with its own relations
    for mu in 0..4 {
        let row: Vec<u8> = (0..17)
            .map(|l| u8::from(theta(17, l, mu).unwrap()))
            .collect();
        println!("theta_17(lambda, {mu}): {row:?}");
    }

    // export in the CSV interchange format
    let mut buf = Vec::new();
    export_theta_csv(5, &mut buf).expect("write to memory");
    print!("{}", String::from_utf8(buf).unwrap());

    // l = 11 has no Hauptmodul power basis here
    println!("theta_11: {}", theta(11, 1, 0).unwrap_err());
    Ok(())
}
