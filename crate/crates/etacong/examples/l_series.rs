//! The iterated-U generating functions L_r: kernel route vs oracle route,
//! and the valuation bound pi(L_r) >= A_r.
//!
//!     cargo run --release --example l_series

use etacong::engine::{build_l, oracle_product_form};
use etacong::sequence::sequence_params;

fn main() -> Result<(), etacong::Error> {
    for (ell, c, d, r) in [(5u64, 1i64, 0i64, 2usize), (7, 0, 1, 2), (5, 6, -5, 2)] {
        let params = sequence_params(ell, c, d, r);
        let a_r = params.a_r(r).unwrap();

        // series kernel: L_r = U(phi^{lambda_{r-1}} ... U(phi^{lambda_0}))
        let built = build_l(ell, c, d, r, params.mu[r] + 41)?;

        // oracle: prefactor * sum of p_[1^c l^d](l^r m + n_r) q^m
        let oracle = oracle_product_form(ell, c, d, r, 20);
        let mismatch =
            (oracle.lead()..oracle.lead() + 20).find(|&n| built.coeff(n) != oracle.coeff(n));
        println!(
            "l={ell} (c,d)=({c},{d}) r={r}: product form {}, pi(L_{r}) = {:?} >= A_{r} = {a_r}",
            if mismatch.is_none() {
                "matches"
            } else {
                "MISMATCH"
            },
            built.min_valuation(ell, (built.prec() - built.lead()) as usize),
        );
        assert!(mismatch.is_none());
    }
    Ok(())
}
