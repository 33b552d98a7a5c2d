//! Symbolic eta quotients and their exact q-expansions.
//!
//! An [`EtaQuotient`] is a finite product `prod_i eta(m_i z)^{e_i}` with
//! `eta(z) = q^{1/24} prod_{n>=1} (1 - q^n)`. Its q-expansion is
//! `q^{sum(m_i e_i)/24} * prod_i (q^{m_i}; q^{m_i})_inf^{e_i}`, which lives in
//! integer powers of q exactly when 24 divides `sum(m_i e_i)`.
//!
//! Euler factors are handled through the pentagonal number theorem:
//! `(q^m; q^m)_inf` is the sparse series `sum_k (-1)^k q^{m k(3k-1)/2}`,
//! so multiplying or dividing by one factor costs `O(N sqrt(N/m))` integer
//! additions. A factor power `e` is applied as `|e|` such passes.
//!
//! The two quotients the congruence machinery lives on:
//!
//! - `phi_l(z) = eta(l^2 z)/eta(z)`, leading exponent `delta_l = (l^2-1)/24`;
//! - `g_l(z) = (eta(l z)/eta(z))^{24/gcd(24, l-1)}`, leading exponent 1 for
//!   `l = 5, 7, 13`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qseries::QSeries;

/// Symbolic product `prod eta(m z)^e` over the listed `(scale, exponent)` factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaQuotient {
    factors: Vec<(u64, i64)>,
}

/// 24 / gcd(24, l-1): the least positive r with r(l-1) = 0 mod 24.
pub fn g_exponent(ell: u64) -> i64 {
    24 / (24i64).gcd(&(ell as i64 - 1))
}

/// `delta_l = (l^2 - 1)/24`, the leading exponent of `phi_l`.
pub fn delta(ell: u64) -> i64 {
    ((ell * ell - 1) / 24) as i64
}

impl EtaQuotient {
    pub fn new(factors: Vec<(u64, i64)>) -> Self {
        assert!(
            factors.iter().all(|&(m, _)| m >= 1),
            "eta scale must be positive"
        );
        EtaQuotient { factors }
    }

    /// `phi_l(z) = eta(l^2 z) / eta(z)`.
    pub fn phi(ell: u64) -> Self {
        Self::phi_pow(ell, 1)
    }

    /// `phi_l(z)^k`.
    pub fn phi_pow(ell: u64, k: i64) -> Self {
        EtaQuotient::new(vec![(ell * ell, k), (1, -k)])
    }

    /// The Hauptmodul `g_l(z) = (eta(l z)/eta(z))^{24/gcd(24, l-1)}`.
    pub fn g(ell: u64) -> Self {
        Self::g_pow(ell, 1)
    }

    /// `g_l(z)^p`.
    pub fn g_pow(ell: u64, p: i64) -> Self {
        let e = g_exponent(ell) * p;
        EtaQuotient::new(vec![(ell, e), (1, -e)])
    }

    /// `phi_l(z)^lambda * g_l(z)^mu` as one quotient.
    pub fn phi_g(ell: u64, lambda: i64, mu: i64) -> Self {
        let e = g_exponent(ell) * mu;
        EtaQuotient::new(vec![(ell * ell, lambda), (ell, e), (1, -lambda - e)])
    }

    pub fn factors(&self) -> &[(u64, i64)] {
        &self.factors
    }

    /// `sum m_i e_i`, i.e. 24 times the q-prefactor exponent.
    pub fn prefactor_numerator(&self) -> i64 {
        self.factors.iter().map(|&(m, e)| m as i64 * e).sum()
    }

    /// Expands to a [`QSeries`] with window `[prefactor, prec)`.
    ///
    /// Fails with [`Error::NonIntegralPrefactor`] when 24 does not divide
    /// `sum m_i e_i`. Requires `prec` to exceed the prefactor exponent.
    pub fn expand(&self, prec: i64) -> Result<QSeries> {
        let num = self.prefactor_numerator();
        if num.rem_euclid(24) != 0 {
            return Err(Error::NonIntegralPrefactor { numerator: num });
        }
        let shift = num / 24;
        assert!(
            prec > shift,
            "prec {prec} does not reach past the q^{shift} prefactor"
        );
        Ok(euler_product(&self.factors, prec - shift).shift(shift))
    }
}

/// Expands `prod (q^{m}; q^{m})_inf^{e}` over the given `(m, e)` factors to
/// the window `[0, prec)`. This is the prefactor-free part of an eta
/// quotient; it always has integer exponents and leading coefficient 1.
pub fn euler_product(factors: &[(u64, i64)], prec: i64) -> QSeries {
    assert!(prec >= 1);
    let len = prec as usize;
    let mut acc = vec![BigInt::zero(); len];
    acc[0] = BigInt::from(1);
    for &(m, e) in factors {
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                euler_mul_in_place(&mut acc, m as usize);
            } else {
                euler_div_in_place(&mut acc, m as usize);
            }
        }
    }
    QSeries::from_coeffs(0, acc)
}

/// Generalized pentagonal exponents `k(3k-1)/2, k(3k+1)/2` with sign
/// `(-1)^k`, for all values `<= max`.
fn pentagonal_terms(max: usize) -> Vec<(usize, i8)> {
    let mut out = Vec::new();
    let mut k = 1usize;
    loop {
        let g1 = k * (3 * k - 1) / 2;
        if g1 > max {
            break;
        }
        let sign = if k % 2 == 1 { -1 } else { 1 };
        out.push((g1, sign));
        let g2 = k * (3 * k + 1) / 2;
        if g2 <= max {
            out.push((g2, sign));
        }
        k += 1;
    }
    out
}

/// Multiplies `a` in place by `(q^m; q^m)_inf`, descending so each slot reads
/// only not-yet-updated entries.
fn euler_mul_in_place(a: &mut [BigInt], m: usize) {
    if a.len() <= m {
        return;
    }
    let terms = pentagonal_terms((a.len() - 1) / m);
    for n in (0..a.len()).rev() {
        for &(g, sign) in &terms {
            let off = m * g;
            if off > n {
                break;
            }
            if !a[n - off].is_zero() {
                if sign > 0 {
                    let t = a[n - off].clone();
                    a[n] += t;
                } else {
                    let t = a[n - off].clone();
                    a[n] -= t;
                }
            }
        }
    }
}

/// Divides `a` in place by `(q^m; q^m)_inf`, ascending: with
/// `E = 1 + sum_k s_k q^{m g_k}` the quotient satisfies
/// `h[n] = a[n] - sum_k s_k h[n - m g_k]`.
fn euler_div_in_place(a: &mut [BigInt], m: usize) {
    if a.len() <= m {
        return;
    }
    let terms = pentagonal_terms((a.len() - 1) / m);
    for n in 0..a.len() {
        for &(g, sign) in &terms {
            let off = m * g;
            if off > n {
                break;
            }
            if !a[n - off].is_zero() {
                if sign > 0 {
                    let t = a[n - off].clone();
                    a[n] -= t;
                } else {
                    let t = a[n - off].clone();
                    a[n] += t;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn pentagonal_series_signs() {
        // (q;q)_inf = 1 - q - q^2 + q^5 + q^7 - q^12 - q^15 + ...
        let e = euler_product(&[(1, 1)], 16);
        let expect = [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1];
        for (n, x) in expect.iter().enumerate() {
            assert_eq!(e.coeff(n as i64), &big(*x), "at q^{n}");
        }
    }

    #[test]
    fn euler_inverse_is_partition_series() {
        let p = euler_product(&[(1, -1)], 12);
        let expect = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56];
        for (n, x) in expect.iter().enumerate() {
            assert_eq!(p.coeff(n as i64), &big(*x));
        }
    }

    #[test]
    fn g5_expansion() {
        // g_5 = q + 6q^2 + 27q^3 + 98q^4 + ...
        let g = EtaQuotient::g(5).expand(5).unwrap();
        assert_eq!(g.lead(), 1);
        assert_eq!(g.coeff(1), &big(1));
        assert_eq!(g.coeff(2), &big(6));
        assert_eq!(g.coeff(3), &big(27));
        assert_eq!(g.coeff(4), &big(98));
    }

    #[test]
    fn phi5_expansion() {
        // phi_5 = q + q^2 + 2q^3 + ...
        let phi = EtaQuotient::phi(5).expand(4).unwrap();
        assert_eq!(phi.lead(), 1);
        assert_eq!(phi.coeff(1), &big(1));
        assert_eq!(phi.coeff(2), &big(1));
        assert_eq!(phi.coeff(3), &big(2));
    }

    #[test]
    fn eta24_leading_term() {
        // eta(z)^24 = q * (1 - 24q + ...)
        let d = EtaQuotient::new(vec![(1, 24)]).expand(4).unwrap();
        assert_eq!(d.lead(), 1);
        assert!(d.coeff(1).is_one());
        assert_eq!(d.coeff(2), &big(-24));
    }

    #[test]
    fn non_integral_prefactor_rejected() {
        let eq = EtaQuotient::new(vec![(1, -1)]);
        assert_eq!(
            eq.expand(10).unwrap_err(),
            Error::NonIntegralPrefactor { numerator: -1 }
        );
        assert_eq!(
            EtaQuotient::new(vec![(5, -1)]).expand(10).unwrap_err(),
            Error::NonIntegralPrefactor { numerator: -5 }
        );
    }

    #[test]
    fn leading_exponents_match_orders_at_infinity() {
        // order at infinity of phi_5 is 1, of g_5(5z) is 5
        let phi = EtaQuotient::phi(5).expand(8).unwrap();
        assert_eq!(phi.valuation(), Some(1));
        let g5z = EtaQuotient::g(5).expand(4).unwrap().dilate(5);
        assert_eq!(g5z.valuation(), Some(5));
        for ell in [5u64, 7, 11, 13, 17] {
            let phi = EtaQuotient::phi(ell).expand(delta(ell) + 3).unwrap();
            assert_eq!(phi.valuation(), Some(delta(ell)));
        }
        for ell in [5u64, 7, 13] {
            let g = EtaQuotient::g(ell).expand(4).unwrap();
            assert_eq!(g.valuation(), Some(1), "g_{ell} should vanish to order 1");
        }
    }

    #[test]
    fn hauptmodul_inverse_power() {
        let g = EtaQuotient::g(5).expand(40).unwrap();
        let prod = g.pow(-1).unwrap().mul(&g);
        assert!(prod.agrees_with(&QSeries::one(30)));
        let phi5 = EtaQuotient::phi(5).expand(12).unwrap();
        assert_eq!(phi5.pow(5).unwrap().valuation(), Some(5));
    }

    #[test]
    fn hauptmodul_splitting_identity() {
        // g_l(z) g_l(l z) = phi_l(z)^{g_exponent(l)}
        for ell in [5u64, 7, 13] {
            let prec = 60;
            let g = EtaQuotient::g(ell).expand(prec).unwrap();
            let gl = EtaQuotient::g(ell).expand(prec).unwrap().dilate(ell);
            let phi = EtaQuotient::phi(ell)
                .expand(prec + delta(ell) * g_exponent(ell))
                .unwrap();
            let lhs = g.mul(&gl);
            let rhs = phi.pow(g_exponent(ell)).unwrap();
            assert!(lhs.agrees_with(&rhs), "splitting fails for l = {ell}");
        }
    }
}
