//! The modular equations for l = 5, 7, 13 and their Newton machinery.
//!
//! Each equation is a monic polynomial relation
//! `phi_l^l(z) + sum_{i=1}^{l} c_i(G) phi_l^{l-i}(z) = 0` with `G = g_l(l z)`
//! and Laurent-polynomial coefficients `c_i`. The equations ship as text data
//! files (one monomial per line) and [`verify_modular_equation`] checks them
//! coefficientwise as q-series identities, which is the mandatory gate
//! against transcription errors.
//!
//! Newton's identities applied to the equation produce the power sums
//! `S_{r,l}(z) = l * U_l(phi_l^r(z))` as Laurent polynomials in `g_l(z)`.
//! Negative r goes through the reciprocal equation (reverse the coefficient
//! list and divide by the constant term, which is a signed monomial in G for
//! all three levels); that equation is derived programmatically rather than
//! transcribed, eliminating a second transcription surface.
//!
//! [`check_valuation_bounds`] asserts the l-adic structure of the S
//! coefficients: support windows, the floor-function valuation lower bounds,
//! and the exact-valuation dichotomy at the extremal power.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::eta::EtaQuotient;
use crate::gpoly::GPolynomial;
use crate::qseries::{padic_valuation, QSeries};

/// Monic equation `phi^l + sum c_i(G) phi^{l-i} = 0`; `coeffs[i-1]` is `c_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularEquation {
    ell: u64,
    coeffs: Vec<GPolynomial>,
}

/// A power sum `S_{r,l}` as a Laurent polynomial in `g_l(z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SPolynomial {
    pub r: i64,
    pub poly: GPolynomial,
}

impl ModularEquation {
    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// `c_i` for `i = 1..=l`.
    pub fn coefficient(&self, i: usize) -> &GPolynomial {
        &self.coeffs[i - 1]
    }

    /// Parses the data-file format: `phi_power<TAB>g_power<TAB>coeff` lines,
    /// `#` comments and blank lines allowed. The monic term (phi_power = l,
    /// g_power = 0, coeff = 1) must be present.
    pub fn parse(ell: u64, text: &str) -> Result<ModularEquation> {
        let deg = ell as i64;
        let mut coeffs = vec![GPolynomial::zero(); ell as usize];
        let mut monic_seen = false;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split('\t');
            let bad = || Error::Data(format!("modeq line {}: `{raw}`", lineno + 1));
            let phi_pow: i64 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let g_pow: i64 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let coeff: BigInt = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if parts.next().is_some() || phi_pow < 0 || phi_pow > deg {
                return Err(bad());
            }
            if phi_pow == deg {
                if g_pow != 0 || !coeff.is_one() {
                    return Err(Error::Data(format!("equation for l={ell} is not monic")));
                }
                monic_seen = true;
            } else {
                coeffs[(deg - 1 - phi_pow) as usize].add_term(g_pow, &coeff);
            }
        }
        if !monic_seen {
            return Err(Error::Data(format!("missing monic term for l={ell}")));
        }
        Ok(ModularEquation { ell, coeffs })
    }

    /// Canonical serialization; `parse . to_data_string` is the identity on
    /// the equation data and the output is byte-stable.
    pub fn to_data_string(&self) -> String {
        let deg = self.ell as i64;
        let mut out = format!("{deg}\t0\t1\n");
        for (i, c) in self.coeffs.iter().enumerate() {
            let phi_pow = deg - 1 - i as i64;
            for (g_pow, a) in c.iter() {
                out.push_str(&format!("{phi_pow}\t{g_pow}\t{a}\n"));
            }
        }
        out
    }

    /// The built-in, identity-verified equations for l = 5, 7, 13.
    pub fn builtin(ell: u64) -> Result<&'static ModularEquation> {
        static EQ5: OnceLock<ModularEquation> = OnceLock::new();
        static EQ7: OnceLock<ModularEquation> = OnceLock::new();
        static EQ13: OnceLock<ModularEquation> = OnceLock::new();
        let parse =
            |ell, text| ModularEquation::parse(ell, text).expect("embedded modular equation data");
        match ell {
            5 => Ok(EQ5.get_or_init(|| parse(5, include_str!("data/modeq5.txt")))),
            7 => Ok(EQ7.get_or_init(|| parse(7, include_str!("data/modeq7.txt")))),
            13 => Ok(EQ13.get_or_init(|| parse(13, include_str!("data/modeq13.txt")))),
            _ => Err(Error::Unsupported { ell }),
        }
    }

    /// Checks the equation coefficientwise as a q-series identity to the
    /// given precision by expanding `phi_l(z)` and `g_l(l z)`.
    pub fn verify(&self, prec: i64) -> Result<ModEqVerification> {
        assert!(
            prec >= 10 * self.ell as i64,
            "prec below the contract minimum"
        );
        let ell = self.ell;
        let deg = self.coeffs.len();
        let phi = EtaQuotient::phi(ell).expand(prec)?;
        let g_at_ell = {
            let inner = Integer::div_ceil(&prec, &(ell as i64)) + 1;
            EtaQuotient::g(ell).expand(inner)?.dilate(ell)
        };
        let max_g = self
            .coeffs
            .iter()
            .filter_map(|c| c.support().map(|(_, hi)| hi))
            .max()
            .unwrap_or(0);
        let g_powers = power_ladder(&g_at_ell, max_g);
        let phi_powers = power_ladder(&phi, deg as i64);

        // phi^l plus the lower terms must vanish identically
        let mut sum = phi_powers[deg].clone();
        for (i, c) in self.coeffs.iter().enumerate() {
            let phi_pow = &phi_powers[deg - 1 - i];
            for (p, a) in c.iter() {
                assert!(p >= 0, "builtin equations have nonnegative G powers");
                sum = sum.add(&g_powers[p as usize].scale(a).mul(phi_pow));
            }
        }
        if let Some(e) = sum.valuation() {
            let lhs = phi_powers[deg].coeff(e).clone();
            return Err(Error::IdentityViolated {
                exponent: e,
                lhs: lhs.clone(),
                rhs: &lhs - sum.coeff(e),
            });
        }
        Ok(ModEqVerification {
            ell,
            requested_prec: prec,
            max_verified_exponent: sum.prec() - 1,
        })
    }

    /// The monic equation satisfied by `1/phi`: reverse the coefficients and
    /// divide by the constant term, which must be a signed monomial `+-G^t`.
    pub fn reciprocal(&self) -> Result<ModularEquation> {
        let deg = self.coeffs.len();
        let last = &self.coeffs[deg - 1];
        let (t, eps) = match last.support() {
            Some((lo, hi)) if lo == hi => {
                let c = last.coeff(lo).unwrap();
                if c.magnitude().is_one() {
                    (lo, c.clone())
                } else {
                    return Err(Error::NonMonomialLowTerm);
                }
            }
            _ => return Err(Error::NonMonomialLowTerm),
        };
        // c'_i = c_{l-i} / (eps G^t) for i < l, with c_0 = 1; c'_l = 1/(eps G^t)
        let mut coeffs = Vec::with_capacity(deg);
        for i in 1..deg {
            coeffs.push(self.coeffs[deg - 1 - i].mul_monomial(-t, &eps));
        }
        coeffs.push(GPolynomial::monomial(-t, eps));
        Ok(ModularEquation {
            ell: self.ell,
            coeffs,
        })
    }

    /// Power sums `S_1 .. S_count` of the equation's roots via Newton's
    /// identities: `S_h = -sum_{i<h} c_i S_{h-i} - h c_h` for `h <= l` and
    /// `S_h = -sum_{i<=l} c_i S_{h-i}` beyond.
    pub fn power_sums(&self, count: usize) -> Vec<GPolynomial> {
        let deg = self.coeffs.len();
        let mut s: Vec<GPolynomial> = Vec::with_capacity(count);
        for h in 1..=count {
            let mut acc = GPolynomial::zero();
            for i in 1..h.min(deg + 1) {
                acc = acc.sub(&self.coeffs[i - 1].mul(&s[h - i - 1]));
            }
            if h <= deg {
                acc = acc.sub(&self.coeffs[h - 1].scale_i64(h as i64));
            }
            s.push(acc);
        }
        s
    }
}

fn power_ladder(base: &QSeries, up_to: i64) -> Vec<QSeries> {
    let mut out = Vec::with_capacity(up_to as usize + 1);
    out.push(QSeries::one(base.prec() - base.lead()));
    for k in 1..=up_to {
        let prev = &out[(k - 1) as usize];
        out.push(prev.mul(base));
    }
    out
}

/// Successful equation check.
#[derive(Debug, Clone)]
pub struct ModEqVerification {
    pub ell: u64,
    pub requested_prec: i64,
    pub max_verified_exponent: i64,
}

impl fmt::Display for ModEqVerification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "modular equation l={} verified coefficientwise through q^{}",
            self.ell, self.max_verified_exponent
        )
    }
}

/// Verifies the built-in equation for `l` to the given precision.
pub fn verify_modular_equation(ell: u64, prec: i64) -> Result<ModEqVerification> {
    ModularEquation::builtin(ell)?.verify(prec)
}

/// `S_{r,l}` for nonzero r, from Newton's identities on the built-in
/// equation (r > 0) or its programmatically derived reciprocal (r < 0).
pub fn newton_s(ell: u64, r: i64) -> Result<SPolynomial> {
    assert!(r != 0, "S_0 is not defined");
    let eq = ModularEquation::builtin(ell)?;
    let poly = if r > 0 {
        eq.power_sums(r as usize).pop().unwrap()
    } else {
        eq.reciprocal()?.power_sums((-r) as usize).pop().unwrap()
    };
    Ok(SPolynomial { r, poly })
}

/// Report of a successful `S_{r,l} = l U_l(phi_l^r)` check.
#[derive(Debug, Clone)]
pub struct SIdentityReport {
    pub ell: u64,
    pub r: i64,
    pub max_verified_exponent: i64,
}

/// Evaluates `newton_s(l, r)` at the q-expansion of `g_l(z)` and compares
/// with `l * U_l(phi_l^r)` coefficientwise up to `prec`.
pub fn verify_s_identity(ell: u64, r: i64, prec: i64) -> Result<SIdentityReport> {
    let s = newton_s(ell, r)?;
    let lhs = s.poly.eval_at_g(ell, prec)?;
    let phi_r = EtaQuotient::phi_pow(ell, r).expand(prec * ell as i64)?;
    let rhs = phi_r.u_op(ell).scale_i64(ell as i64);
    if let Some((e, l, rr)) = lhs.first_disagreement(&rhs) {
        return Err(Error::IdentityViolated {
            exponent: e,
            lhs: l,
            rhs: rr,
        });
    }
    Ok(SIdentityReport {
        ell,
        r,
        max_verified_exponent: lhs.prec().min(rhs.prec()) - 1,
    })
}

/// Lower support end of `S_{r,l}`.
pub fn support_min(ell: u64, r: i64) -> i64 {
    match ell {
        5 => Integer::div_floor(&(r + 4), &5),
        7 => Integer::div_floor(&(2 * r + 6), &7),
        13 => Integer::div_floor(&(7 * r + 12), &13),
        _ => unreachable!("no support lemma for l={ell}"),
    }
}

/// Upper support end of `S_{r,l}`: `w_l * r` for positive r, 0 for negative.
pub fn support_max(ell: u64, r: i64) -> i64 {
    if r < 0 {
        return 0;
    }
    match ell {
        5 => r,
        7 => 2 * r,
        13 => 7 * r,
        _ => unreachable!("no support lemma for l={ell}"),
    }
}

/// Floor-formula lower bound for the l-adic valuation of the coefficient of
/// `g^p` in `S_{r,l}`.
pub fn valuation_floor(ell: u64, r: i64, p: i64) -> i64 {
    match ell {
        5 => Integer::div_floor(&(5 * p - r + 1), &2),
        7 => Integer::div_floor(&(7 * p - 2 * r + 3), &4),
        13 => Integer::div_floor(&(13 * p - 7 * r + 13), &14),
        _ => unreachable!("no valuation lemma for l={ell}"),
    }
}

/// Residues of r mod l for which the extremal coefficient has valuation >= 2
/// instead of exactly 1.
pub fn deep_residues(ell: u64) -> &'static [i64] {
    match ell {
        5 => &[1, 2],
        7 => &[1, 4],
        13 => &[10],
        _ => unreachable!(),
    }
}

/// Summary of a valuation sweep over a range of r.
#[derive(Debug, Clone)]
pub struct ValuationReport {
    pub ell: u64,
    pub r_checked: Vec<i64>,
    pub terms_checked: usize,
}

/// Checks, for every nonzero r in `lo..=hi`:
/// support windows, the floor valuation bounds, full nonvanishing on the
/// support range for r > 0, the exact-valuation dichotomy at the extremal
/// power, and (r > 0) that the whole-polynomial valuation is attained there.
pub fn check_valuation_bounds(ell: u64, lo: i64, hi: i64) -> Result<ValuationReport> {
    assert!(lo <= hi);
    let eq = ModularEquation::builtin(ell)?;
    let pos = if hi > 0 {
        eq.power_sums(hi as usize)
    } else {
        Vec::new()
    };
    let neg = if lo < 0 {
        eq.reciprocal()?.power_sums((-lo) as usize)
    } else {
        Vec::new()
    };
    let mut r_checked = Vec::new();
    let mut terms_checked = 0usize;
    for r in lo..=hi {
        if r == 0 {
            continue;
        }
        r_checked.push(r);
        let poly = if r > 0 {
            &pos[(r - 1) as usize]
        } else {
            &neg[(-r - 1) as usize]
        };
        let p_lo = support_min(ell, r);
        let p_hi = support_max(ell, r);
        let fail = |power: i64, detail: String| Error::BoundViolated { r, power, detail };

        if let Some((lo_p, hi_p)) = poly.support() {
            if lo_p < p_lo || hi_p > p_hi {
                return Err(fail(
                    if lo_p < p_lo { lo_p } else { hi_p },
                    "support bound".into(),
                ));
            }
        }
        if r > 0 {
            for p in p_lo..=p_hi {
                if poly.coeff(p).is_none() {
                    return Err(fail(p, "vanishing inside the support range".into()));
                }
            }
        }
        for (p, a) in poly.iter() {
            terms_checked += 1;
            let v = padic_valuation(a, ell) as i64;
            let bound = valuation_floor(ell, r, p);
            if v < bound {
                return Err(fail(p, format!("valuation {v} below floor bound {bound}")));
            }
        }
        // dichotomy at the extremal power
        let deep = deep_residues(ell)
            .iter()
            .any(|&x| (r - x).rem_euclid(ell as i64) == 0);
        let v_min = poly.coeff(p_lo).map(|a| padic_valuation(a, ell));
        if deep {
            let whole = poly.min_valuation(ell);
            if let Some(w) = whole {
                if w < 2 {
                    return Err(fail(p_lo, format!("expected valuation >= 2, found {w}")));
                }
            }
        } else {
            if v_min != Some(1) {
                return Err(fail(
                    p_lo,
                    format!("expected exact valuation 1, found {v_min:?}"),
                ));
            }
            if r > 0 && poly.min_valuation(ell) != Some(1) {
                return Err(fail(
                    p_lo,
                    "whole-polynomial valuation not attained at p_min".into(),
                ));
            }
        }
    }
    Ok(ValuationReport {
        ell,
        r_checked,
        terms_checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i64, i64)]) -> GPolynomial {
        GPolynomial::from_terms(terms.iter().map(|&(p, c)| (p, BigInt::from(c))))
    }

    #[test]
    fn data_round_trip_is_byte_stable() {
        for ell in [5u64, 7, 13] {
            let eq = ModularEquation::builtin(ell).unwrap();
            let s1 = eq.to_data_string();
            let re = ModularEquation::parse(ell, &s1).unwrap();
            assert_eq!(&re, eq);
            assert_eq!(re.to_data_string(), s1);
        }
    }

    #[test]
    fn equations_verify_at_low_precision() {
        verify_modular_equation(5, 80).unwrap();
        verify_modular_equation(7, 90).unwrap();
        verify_modular_equation(13, 140).unwrap();
    }

    #[test]
    fn perturbed_matrix_entry_is_caught() {
        let eq = ModularEquation::builtin(13).unwrap();
        let mut bad = eq.clone();
        // bump m_{5,4} (phi^8, G^4) by one
        bad.coeffs[4].add_term(4, &BigInt::from(1));
        let err = bad.verify(140).unwrap_err();
        assert!(matches!(err, Error::IdentityViolated { .. }), "got {err:?}");
    }

    #[test]
    fn newton_small_positive_sums() {
        assert_eq!(newton_s(5, 1).unwrap().poly, poly(&[(1, 25)]));
        assert_eq!(newton_s(5, 2).unwrap().poly, poly(&[(2, 625), (1, 50)]));
        assert_eq!(
            newton_s(5, 3).unwrap().poly,
            poly(&[(3, 15625), (2, 1875), (1, 45)])
        );
    }

    #[test]
    fn listed_negative_closed_forms_level5() {
        let expect = [
            poly(&[(0, -5)]),
            poly(&[(0, -5)]),
            poly(&[(0, 25)]),
            poly(&[(0, -25)]),
            poly(&[(-1, 5)]),
        ];
        for (i, want) in expect.iter().enumerate() {
            assert_eq!(
                &newton_s(5, -(i as i64) - 1).unwrap().poly,
                want,
                "S_-{}",
                i + 1
            );
        }
    }

    #[test]
    fn listed_negative_closed_forms_level7() {
        let expect = [
            poly(&[(0, -7)]),
            poly(&[(0, 7)]),
            poly(&[(0, -49)]),
            poly(&[(0, -49), (-1, -28)]),
            poly(&[(0, 343), (-1, 70)]),
            poly(&[(0, 343)]),
            poly(&[(-1, 343), (-2, 7)]),
        ];
        for (i, want) in expect.iter().enumerate() {
            assert_eq!(
                &newton_s(7, -(i as i64) - 1).unwrap().poly,
                want,
                "S_-{}",
                i + 1
            );
        }
    }

    #[test]
    fn negative_matrix_spot_rows_level13() {
        assert_eq!(newton_s(13, -1).unwrap().poly, poly(&[(0, 13)]));
        assert_eq!(newton_s(13, -2).unwrap().poly, poly(&[(-1, -26), (0, -13)]));
        assert_eq!(newton_s(13, -3).unwrap().poly, poly(&[(0, 169)]));
    }

    #[test]
    fn s_identity_small_windows() {
        verify_s_identity(5, 3, 40).unwrap();
        verify_s_identity(5, -5, 40).unwrap();
        verify_s_identity(7, -4, 40).unwrap();
        verify_s_identity(13, -2, 50).unwrap();
    }

    #[test]
    fn newton_consistency_theorem() {
        // S_h - p_1 S_{h-1} + ... + (-1)^h p_h h = 0 exactly, for h <= l
        for ell in [5u64, 7] {
            let eq = ModularEquation::builtin(ell).unwrap();
            let s = eq.power_sums(ell as usize);
            for h in 1..=ell as usize {
                let mut acc = s[h - 1].clone();
                for i in 1..h {
                    // (-1)^i p_i = c_i, so the alternating Newton sum is
                    // S_h + sum c_i S_{h-i} + h c_h
                    acc = acc.add(&eq.coefficient(i).mul(&s[h - i - 1]));
                }
                acc = acc.add(&eq.coefficient(h).scale_i64(h as i64));
                assert!(acc.is_zero(), "Newton fails at l={ell} h={h}");
            }
        }
    }

    #[test]
    fn valuation_sweep_small() {
        check_valuation_bounds(5, -8, 8).unwrap();
        check_valuation_bounds(7, -8, 8).unwrap();
        check_valuation_bounds(13, -4, 4).unwrap();
    }

    #[test]
    fn exact_dichotomy_examples() {
        // r = 2: extremal coefficient 50 = 2 * 5^2 has valuation 2 (deep residue)
        let s2 = newton_s(5, 2).unwrap().poly;
        assert_eq!(padic_valuation(s2.coeff(1).unwrap(), 5), 2);
        // r = 3: extremal coefficient 45 = 9 * 5 has valuation exactly 1
        let s3 = newton_s(5, 3).unwrap().poly;
        assert_eq!(padic_valuation(s3.coeff(1).unwrap(), 5), 1);
    }
}
