//! Greedy reduction against the triangular basis {g_l^nu} and the matrix
//! entries C^lambda_{mu,nu} of f -> U_l(phi_l^lambda f).
//!
//!     cargo run --release --example basis_reduction

use etacong::{compute_c, expand_in_g_basis, EtaQuotient, GBasisOptions};

fn main() -> Result<(), etacong::Error> {
    // 5 U_5(phi_5) is the single basis element 25 g
    let image = EtaQuotient::phi(5).expand(300)?.u_op(5).scale_i64(5);
    let exp = expand_in_g_basis(&image, 5, GBasisOptions::for_window(&image))?;
    println!("5 U_5(phi_5) expands as:");
    for (nu, c) in &exp.entries {
        println!("  g^{nu}: {c}");
    }
    println!(
        "residual window checked through q^{}",
        exp.residual_checked_to
    );

    // U_13(phi_13^10) has every entry divisible by 13 (theta_13(10,0) = 1)
    let c = compute_c(13, 10, 0, Some(120))?;
    println!(
        "U_13(phi_13^10): {} basis entries, all divisible by 13: {}",
        c.entries.len(),
        c.all_divisible_by(13)
    );

    // Laurent reduction: negative powers of phi produce negative powers of g
    let c = compute_c(5, -5, 0, Some(120))?;
    println!("U_5(phi_5^-5) expands as:");
    for (nu, v) in &c.entries {
        println!("  g^{nu}: {v}");
    }
    Ok(())
}
