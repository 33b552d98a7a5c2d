//! Truncated Laurent series in q with exact integer coefficients.
//!
//! A [`QSeries`] stores the coefficients of `q^lead .. q^(prec-1)` and
//! maintains the invariant that the represented series is identically zero
//! below `lead`. Every constructor in this crate (eta-quotient expansion and
//! the polynomial operations below) preserves that invariant, so coefficient
//! queries below the stored window are answered with 0 while queries at or
//! above `prec` are a contract violation.
//!
//! Precision is tracked pessimistically, one documented rule per operation;
//! no operation ever extends a window beyond what its inputs justify.

use std::fmt;
use std::io::{self, Write};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

fn zero_ref() -> &'static BigInt {
    static ZERO: OnceLock<BigInt> = OnceLock::new();
    ZERO.get_or_init(BigInt::zero)
}

/// Truncated Laurent series `sum_{n=lead}^{prec-1} a(n) q^n`, zero below `lead`.
#[derive(Debug, Clone)]
pub struct QSeries {
    lead: i64,
    prec: i64,
    coeffs: Vec<BigInt>,
}

impl QSeries {
    /// Builds a series from the coefficients of `q^lead, q^(lead+1), ...`.
    /// The caller asserts that the underlying series vanishes below `lead`.
    pub fn from_coeffs(lead: i64, coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "empty coefficient window");
        let prec = lead + coeffs.len() as i64;
        QSeries { lead, prec, coeffs }
    }

    /// Convenience constructor from `(exponent, coefficient)` pairs.
    pub fn from_terms(terms: &[(i64, i64)], prec: i64) -> Self {
        let lead = terms.iter().map(|&(e, _)| e).min().unwrap_or(0);
        assert!(prec > lead, "prec must exceed the lowest exponent");
        let mut coeffs = vec![BigInt::zero(); (prec - lead) as usize];
        for &(e, c) in terms {
            assert!(e < prec, "term exponent outside window");
            coeffs[(e - lead) as usize] += c;
        }
        QSeries { lead, prec, coeffs }
    }

    /// The zero series on the window `[0, prec)`.
    pub fn zero(prec: i64) -> Self {
        assert!(prec > 0);
        QSeries {
            lead: 0,
            prec,
            coeffs: vec![BigInt::zero(); prec as usize],
        }
    }

    /// The constant series 1 on the window `[0, prec)`.
    pub fn one(prec: i64) -> Self {
        let mut s = QSeries::zero(prec);
        s.coeffs[0] = BigInt::from(1);
        s
    }

    pub fn lead(&self) -> i64 {
        self.lead
    }

    /// Exclusive upper bound of known exponents.
    pub fn prec(&self) -> i64 {
        self.prec
    }

    /// Number of stored coefficients, `prec - lead`.
    pub fn window_len(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `q^n`. Panics if `n >= prec`; exponents below `lead`
    /// return 0 by the zero-below-lead invariant.
    pub fn coeff(&self, n: i64) -> &BigInt {
        assert!(
            n < self.prec,
            "coefficient query at q^{n} beyond precision {}",
            self.prec
        );
        if n < self.lead {
            zero_ref()
        } else {
            &self.coeffs[(n - self.lead) as usize]
        }
    }

    /// Exponent of the first nonzero known coefficient, if any.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|i| self.lead + i as i64)
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero_window(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn iter_terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        let lead = self.lead;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (lead + i as i64, c))
    }

    /// Restricts the window to `[lead, new_prec)`.
    pub fn truncate(&self, new_prec: i64) -> QSeries {
        assert!(new_prec > self.lead && new_prec <= self.prec);
        QSeries {
            lead: self.lead,
            prec: new_prec,
            coeffs: self.coeffs[..(new_prec - self.lead) as usize].to_vec(),
        }
    }

    /// Multiplies by `q^s` (exponent shift).
    pub fn shift(&self, s: i64) -> QSeries {
        QSeries {
            lead: self.lead + s,
            prec: self.prec + s,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Sum; the result window is the intersection rule
    /// `lead = min(leads)`, `prec = min(precs)`.
    pub fn add(&self, other: &QSeries) -> QSeries {
        let lead = self.lead.min(other.lead);
        let prec = self.prec.min(other.prec);
        assert!(lead < prec, "windows do not overlap");
        let mut coeffs = vec![BigInt::zero(); (prec - lead) as usize];
        for s in [self, other] {
            for (e, c) in s.iter_terms() {
                if e < prec {
                    coeffs[(e - lead) as usize] += c;
                }
            }
        }
        QSeries { lead, prec, coeffs }
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.negate())
    }

    pub fn negate(&self) -> QSeries {
        QSeries {
            lead: self.lead,
            prec: self.prec,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Multiplies every coefficient by the integer `k`.
    pub fn scale(&self, k: &BigInt) -> QSeries {
        QSeries {
            lead: self.lead,
            prec: self.prec,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn scale_i64(&self, k: i64) -> QSeries {
        self.scale(&BigInt::from(k))
    }

    /// Exact convolution on the valid window.
    /// Precision rule: `prec = min(a.prec + b.lead, b.prec + a.lead)`,
    /// `lead = a.lead + b.lead`. The relative window is the minimum of the
    /// operand windows.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let lead = self.lead + other.lead;
        let prec = (self.prec + other.lead).min(other.prec + self.lead);
        assert!(lead < prec, "windows do not overlap");
        let len = (prec - lead) as usize;
        let mut coeffs = vec![BigInt::zero(); len];
        // iterate the sparser operand on the outside
        let (a, b) = if self.coeffs.len() <= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (i, ca) in a.coeffs.iter().enumerate() {
            if ca.is_zero() || i >= len {
                continue;
            }
            let bmax = len - i;
            for (j, cb) in b.coeffs.iter().take(bmax).enumerate() {
                if !cb.is_zero() {
                    coeffs[i + j] += ca * cb;
                }
            }
        }
        QSeries { lead, prec, coeffs }
    }

    /// Multiplicative inverse. Requires the first nonzero coefficient to be
    /// +-1 (true for every eta-built unit in this crate).
    /// Precision rule: if the valuation is `v`, the result has
    /// `lead = -v`, `prec = a.prec - 2v` (relative window preserved).
    pub fn inverse(&self) -> Result<QSeries> {
        let v = self.valuation().ok_or(Error::NonUnitLeading)?;
        let unit = self.coeff(v).clone();
        if !(unit.magnitude().is_one()) {
            return Err(Error::NonUnitLeading);
        }
        let len = (self.prec - v) as usize;
        let start = (v - self.lead) as usize;
        let a = &self.coeffs[start..start + len];
        // invert the unit power series a[0] + a[1] q + ...: b[0] = 1/a[0],
        // b[n] = -1/a[0] * sum_{k=1}^{n} a[k] b[n-k]
        let mut b = vec![BigInt::zero(); len];
        b[0] = unit.clone(); // 1/(+-1) = +-1
        for n in 1..len {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                if !a[k].is_zero() && !b[n - k].is_zero() {
                    acc += &a[k] * &b[n - k];
                }
            }
            b[n] = if unit.is_negative() { acc } else { -acc };
        }
        Ok(QSeries {
            lead: -v,
            prec: self.prec - 2 * v,
            coeffs: b,
        })
    }

    /// Integer power by square-and-multiply; `pow(a, 0) = 1` on the relative
    /// window of `a`. Negative exponents invert first and therefore require
    /// a unit leading coefficient.
    pub fn pow(&self, k: i64) -> Result<QSeries> {
        if k == 0 {
            return Ok(QSeries::one(self.prec - self.lead));
        }
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc: Option<QSeries> = None;
        let mut sq = base;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => sq.clone(),
                    Some(r) => r.mul(&sq),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            sq = sq.mul(&sq);
        }
        Ok(acc.unwrap())
    }

    /// Substitutes `q -> q^t`; exponent `n` maps to `t n` and
    /// `prec` scales to `t * prec` (intermediate exponents are exact zeros).
    pub fn dilate(&self, t: u64) -> QSeries {
        assert!(t >= 1);
        let t = t as i64;
        let lead = self.lead * t;
        let prec = self.prec * t;
        let mut coeffs = vec![BigInt::zero(); (prec - lead) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[i * t as usize] = c.clone();
            }
        }
        QSeries { lead, prec, coeffs }
    }

    /// The operator `U_p`: picks the coefficients at exponents divisible by
    /// `p`, i.e. the result coefficient at `n` is this series' coefficient
    /// at `p n`. Precision rule: `prec = ceil(prec / p)`,
    /// `lead = ceil(lead / p)`.
    pub fn u_op(&self, p: u64) -> QSeries {
        assert!(p >= 1);
        let p = p as i64;
        let lead = Integer::div_ceil(&self.lead, &p);
        let prec = Integer::div_ceil(&self.prec, &p);
        assert!(lead < prec, "U_{p} leaves an empty window");
        let coeffs = (lead..prec).map(|n| self.coeff(p * n).clone()).collect();
        QSeries { lead, prec, coeffs }
    }

    /// Minimum l-adic valuation over the first `window` known coefficients;
    /// `None` plays the role of +infinity (all inspected coefficients are
    /// zero). A statement about the inspected window only.
    pub fn min_valuation(&self, ell: u64, window: usize) -> Option<u64> {
        assert!(
            window <= self.window_len(),
            "window exceeds known coefficients"
        );
        self.coeffs[..window]
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| padic_valuation(c, ell))
            .min()
    }

    /// True when both series agree at every exponent where both windows are
    /// defined (exponents below a lead count as zero).
    pub fn agrees_with(&self, other: &QSeries) -> bool {
        self.first_disagreement(other).is_none()
    }

    /// First exponent (below the common precision) where the series differ.
    pub fn first_disagreement(&self, other: &QSeries) -> Option<(i64, BigInt, BigInt)> {
        let lo = self.lead.min(other.lead);
        let hi = self.prec.min(other.prec);
        for n in lo..hi {
            if self.coeff(n) != other.coeff(n) {
                return Some((n, self.coeff(n).clone(), other.coeff(n).clone()));
            }
        }
        None
    }

    /// Debug dump: one coefficient per line, `exponent<TAB>integer`,
    /// exponents ascending.
    pub fn write_tsv<W: Write>(&self, mut w: W) -> io::Result<()> {
        for (i, c) in self.coeffs.iter().enumerate() {
            writeln!(w, "{}\t{}", self.lead + i as i64, c)?;
        }
        Ok(())
    }
}

/// Exponent of `ell` in a nonzero integer.
pub fn padic_valuation(a: &BigInt, ell: u64) -> u64 {
    assert!(!a.is_zero(), "valuation of zero");
    let ell = BigInt::from(ell);
    let mut v = 0;
    let mut cur = a.clone();
    loop {
        let (q, r) = cur.div_rem(&ell);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        cur = q;
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.iter_terms().take(12) {
            if first {
                write!(f, "{c}*q^{e}")?;
                first = false;
            } else if c.is_negative() {
                write!(f, " - {}*q^{e}", -c)?;
            } else {
                write!(f, " + {c}*q^{e}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.prec)
    }
}
