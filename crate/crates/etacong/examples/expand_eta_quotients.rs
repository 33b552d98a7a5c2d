//! Expanding eta quotients to exact q-series and applying the basic
//! operators: dilation q -> q^t and coefficient extraction U_p.
//!
//!     cargo run --example expand_eta_quotients

use etacong::eta::delta;
use etacong::EtaQuotient;

fn main() -> Result<(), etacong::Error> {
    // phi_5 = eta(25z)/eta(z): its coefficients are partition numbers
    let phi5 = EtaQuotient::phi(5).expand(12)?;
    println!("phi_5   = {phi5}");

    // the Hauptmodul g_5 = (eta(5z)/eta(z))^6
    let g5 = EtaQuotient::g(5).expand(8)?;
    println!("g_5     = {g5}");

    // g_5(5z) via dilation; its order of vanishing at infinity is 5
    let g5_at_5z = g5.dilate(5);
    println!("g_5(5z) = {g5_at_5z}");
    assert_eq!(g5_at_5z.valuation(), Some(5));

    // U_5 undoes dilation: U_5(f(z) g(5z)) = g(z) U_5(f(z))
    let f = EtaQuotient::phi_pow(5, 2).expand(60)?;
    let lhs = f.mul(&g5_at_5z).u_op(5);
    let rhs = g5.mul(&f.u_op(5));
    assert!(lhs.agrees_with(&rhs));
    println!("U_5(phi_5^2(z) g_5(5z)) = g_5(z) U_5(phi_5^2(z))  [checked]");

    // the leading exponent of phi_l is delta_l = (l^2 - 1)/24
    for ell in [5u64, 7, 11, 13, 17] {
        let phi = EtaQuotient::phi(ell).expand(delta(ell) + 2)?;
        println!(
            "phi_{ell:<2} vanishes to order {} at infinity",
            phi.valuation().unwrap()
        );
    }

    // a non-integral prefactor is rejected: eta(z)^-1 alone needs q^(-1/24)
    let err = EtaQuotient::new(vec![(1, -1)]).expand(10).unwrap_err();
    println!("eta(z)^-1 alone: {err}");
    Ok(())
}
