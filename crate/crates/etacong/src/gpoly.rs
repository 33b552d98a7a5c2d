//! Laurent polynomials in the Hauptmodul `g_l` with integer coefficients.
//!
//! These are the coefficient objects of the modular equations and the home
//! of the power sums `S_{r,l}` and of basis-expansion results. Terms are kept
//! in a sorted map from (possibly negative) powers of g to nonzero integers.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::eta::EtaQuotient;
use crate::qseries::QSeries;

/// `sum_p a_p g^p` with finitely many nonzero integer terms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl GPolynomial {
    pub fn zero() -> Self {
        GPolynomial::default()
    }

    pub fn constant(c: i64) -> Self {
        GPolynomial::monomial(0, BigInt::from(c))
    }

    pub fn monomial(power: i64, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(power, coeff);
        }
        GPolynomial { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(it: I) -> Self {
        let mut p = GPolynomial::zero();
        for (pow, c) in it {
            p.add_term(pow, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, power: i64) -> Option<&BigInt> {
        self.terms.get(&power)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&p, c)| (p, c))
    }

    /// Lowest and highest powers with nonzero coefficient.
    pub fn support(&self) -> Option<(i64, i64)> {
        let min = *self.terms.keys().next()?;
        let max = *self.terms.keys().next_back()?;
        Some((min, max))
    }

    pub fn add_term(&mut self, power: i64, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(power).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&power);
        }
    }

    pub fn add(&self, other: &GPolynomial) -> GPolynomial {
        let mut out = self.clone();
        for (p, c) in other.iter() {
            out.add_term(p, c);
        }
        out
    }

    pub fn sub(&self, other: &GPolynomial) -> GPolynomial {
        let mut out = self.clone();
        for (p, c) in other.iter() {
            out.add_term(p, &(-c));
        }
        out
    }

    pub fn negate(&self) -> GPolynomial {
        GPolynomial {
            terms: self.terms.iter().map(|(&p, c)| (p, -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> GPolynomial {
        if k.is_zero() {
            return GPolynomial::zero();
        }
        GPolynomial {
            terms: self.terms.iter().map(|(&p, c)| (p, c * k)).collect(),
        }
    }

    pub fn scale_i64(&self, k: i64) -> GPolynomial {
        self.scale(&BigInt::from(k))
    }

    pub fn mul(&self, other: &GPolynomial) -> GPolynomial {
        let mut out = GPolynomial::zero();
        for (p, c) in self.iter() {
            for (q, d) in other.iter() {
                out.add_term(p + q, &(c * d));
            }
        }
        out
    }

    /// Multiplies by `k * g^power`.
    pub fn mul_monomial(&self, power: i64, k: &BigInt) -> GPolynomial {
        if k.is_zero() {
            return GPolynomial::zero();
        }
        GPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&p, c)| (p + power, c * k))
                .collect(),
        }
    }

    /// Minimum l-adic valuation over the coefficients (`None` when zero).
    pub fn min_valuation(&self, ell: u64) -> Option<u64> {
        self.terms
            .values()
            .map(|c| crate::qseries::padic_valuation(c, ell))
            .min()
    }

    /// Evaluates at the q-expansion of `g_l(z)`: each term becomes an
    /// eta-quotient expansion of `g_l^p` to the window `[p, prec)`.
    pub fn eval_at_g(&self, ell: u64, prec: i64) -> Result<QSeries> {
        let mut acc: Option<QSeries> = None;
        for (p, c) in self.iter() {
            let gp = EtaQuotient::g_pow(ell, p).expand(prec)?.scale(c);
            acc = Some(match acc {
                None => gp,
                Some(s) => s.add(&gp),
            });
        }
        Ok(acc.unwrap_or_else(|| QSeries::zero(prec)))
    }
}

impl fmt::Display for GPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest power first, matching how the power sums are usually read
        let mut first = true;
        for (&p, c) in self.terms.iter().rev() {
            if first {
                write!(f, "{c}")?;
                first = false;
            } else {
                write!(
                    f,
                    " {} {}",
                    if c.is_negative() { "-" } else { "+" },
                    c.abs()
                )?;
            }
            match p {
                0 => {}
                1 => write!(f, "*g")?,
                _ => write!(f, "*g^{p}")?,
            }
        }
        Ok(())
    }
}
