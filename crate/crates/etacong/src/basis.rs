//! Expansion in the triangular basis `{g_l^nu}` and the theta tables.
//!
//! For `l = 5, 7, 13` the powers of the Hauptmodul `g_l` form a triangular
//! basis of the relevant space of modular functions: `g_l^p` has leading
//! exponent exactly p, so a function known to be a Laurent polynomial in
//! `g_l` is reduced greedily, peeling one leading term per step. The matrix
//! entries `C^lambda_{mu,nu}` of `f -> U_l(phi_l^lambda f)` against that
//! basis come out of [`compute_c`], and the bit
//! `theta_l(lambda, mu) = [all C^lambda_{mu,nu} divisible by l]`
//! out of [`theta`].
//!
//! theta is computed from C reduced mod l (the definition), not from
//! valuation shortcuts; the fundamental rows live at `mu = 0`,
//! `lambda in [0, l)`, and general arguments reduce through the exact
//! operator relations
//!
//! - l = 5:  `theta(lambda, mu) = theta(lambda + 5, mu) = theta(lambda - 6, mu + 1)`
//! - l = 7:  `theta(lambda, mu) = theta(lambda - 7, mu) = theta(lambda - 4, mu + 1)`
//! - l = 13: `theta(lambda, mu) = theta(lambda - 13, mu) = theta(lambda - 2, mu + 1)`
//!
//! which all follow from `g_l(z) g_l(l z) = phi_l(z)^{24/gcd(24, l-1)}` and
//! `U_l(f(z) h(l z)) = h(z) U_l(f(z))`.
//!
//! For l = 17 the basis is not a Hauptmodul power basis; the published table
//! ships as data (`data/theta17.csv`) together with its reduction relations
//! `theta(lambda, mu) = theta(lambda - 17, mu) = theta(lambda + 6, mu - 4)`.
//! l = 11 is intentionally unsupported here.

use std::collections::HashMap;
use std::io::{self, Write};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::eta::{g_exponent, EtaQuotient};
use crate::qseries::QSeries;

/// Result of a greedy reduction: the integer coefficients `C_nu` of
/// `f = sum C_nu g^nu`, plus the exponent through which the residual was
/// checked to vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GBasisExpansion {
    pub entries: std::collections::BTreeMap<i64, BigInt>,
    pub residual_checked_to: i64,
}

impl GBasisExpansion {
    /// True when every entry is divisible by `m`.
    pub fn all_divisible_by(&self, m: u64) -> bool {
        let m = BigInt::from(m);
        self.entries.values().all(|c| (c % &m).is_zero())
    }
}

/// Controls for the greedy reduction.
#[derive(Debug, Clone, Copy)]
pub struct GBasisOptions {
    /// Abort with [`Error::NonTerminating`] after this many peeling steps.
    pub step_cap: usize,
    /// Refuse (with [`Error::NonzeroResidual`]) to attribute a leading term
    /// to `g^p` for `p` beyond this power; coefficients that far up the
    /// window are the signature of an input outside the span.
    pub max_power: i64,
}

impl GBasisOptions {
    /// Defaults for a bare call on a window `[lead, prec)`: allow as many
    /// steps as the window has exponents and treat the top eighth of the
    /// window as residual territory.
    pub fn for_window(f: &QSeries) -> Self {
        let len = f.prec() - f.lead();
        GBasisOptions {
            step_cap: len as usize,
            max_power: f.prec() - len / 8 - 1,
        }
    }
}

/// Greedy triangular reduction of `f` against `{g_l^nu}`.
///
/// While the remainder has a nonzero known coefficient at exponent p, it
/// subtracts `C g_l^p` where C is that coefficient; each step strictly
/// raises the remainder's first nonzero exponent, so a genuine Laurent
/// polynomial in `g_l` terminates with an identically zero window.
pub fn expand_in_g_basis(f: &QSeries, ell: u64, opts: GBasisOptions) -> Result<GBasisExpansion> {
    assert!(
        matches!(ell, 5 | 7 | 13),
        "power basis only exists for l = 5, 7, 13"
    );
    let mut rem = f.clone();
    let mut entries = std::collections::BTreeMap::new();
    let mut cache: HashMap<i64, QSeries> = HashMap::new();
    let mut steps = 0usize;
    while let Some(p) = rem.valuation() {
        if p > opts.max_power {
            return Err(Error::NonzeroResidual { exponent: p });
        }
        if steps >= opts.step_cap {
            return Err(Error::NonTerminating { steps });
        }
        let c = rem.coeff(p).clone();
        let prec = rem.prec();
        let gp = match cache.get(&p) {
            Some(s) => s.clone(),
            None => {
                let s = EtaQuotient::g_pow(ell, p).expand(prec)?;
                cache.insert(p, s.clone());
                s
            }
        };
        rem = rem.sub(&gp.scale(&c));
        entries.insert(p, c);
        steps += 1;
    }
    Ok(GBasisExpansion {
        entries,
        residual_checked_to: rem.prec() - 1,
    })
}

/// Expansion of `U_l(phi_l^lambda g_l^mu)` in the `g_l` basis.
///
/// `prec` is the window of the U image; `None` picks the documented default
/// `40 + 10 (|lambda| + |mu|) l`. The step cap is `10 (|lambda| + |mu| + 1) l`.
pub fn compute_c(ell: u64, lambda: i64, mu: i64, prec: Option<i64>) -> Result<GBasisExpansion> {
    let prec = prec.unwrap_or(40 + 10 * (lambda.abs() + mu.abs()) * ell as i64);
    let inner = EtaQuotient::phi_g(ell, lambda, mu).expand(prec * ell as i64)?;
    let image = inner.u_op(ell);
    let w = support_width(ell);
    let opts = GBasisOptions {
        step_cap: (10 * (lambda.abs() + mu.abs() + 1) * ell as i64) as usize,
        max_power: w * (lambda.abs() + g_exponent(ell) * mu.abs() + 2),
    };
    expand_in_g_basis(&image, ell, opts)
}

fn support_width(ell: u64) -> i64 {
    match ell {
        5 => 1,
        7 => 2,
        13 => 7,
        _ => unreachable!(),
    }
}

/// mu-shift in the reduction `theta_l(lambda, mu+1) = theta_l(lambda + shift, mu)`.
fn mu_shift(ell: u64) -> i64 {
    match ell {
        5 => 6,
        7 => 4,
        13 => 2,
        _ => unreachable!(),
    }
}

fn fundamental_row(ell: u64) -> &'static [bool] {
    static ROW5: OnceLock<Vec<bool>> = OnceLock::new();
    static ROW7: OnceLock<Vec<bool>> = OnceLock::new();
    static ROW13: OnceLock<Vec<bool>> = OnceLock::new();
    let cell = match ell {
        5 => &ROW5,
        7 => &ROW7,
        13 => &ROW13,
        _ => unreachable!(),
    };
    cell.get_or_init(|| {
        // enough window to resolve the full support w*(l-1) of U(phi^lambda)
        let row_prec = support_width(ell) * (ell as i64 - 1) + 48;
        (0..ell as i64)
            .map(|lam| {
                compute_c(ell, lam, 0, Some(row_prec))
                    .expect("fundamental theta row must reduce")
                    .all_divisible_by(ell)
            })
            .collect()
    })
}

fn theta17_table() -> &'static [[bool; 17]; 4] {
    static T: OnceLock<[[bool; 17]; 4]> = OnceLock::new();
    T.get_or_init(|| {
        let mut t = [[false; 17]; 4];
        for line in include_str!("data/theta17.csv").lines().skip(1) {
            let mut it = line.split(',');
            let ell: u64 = it.next().unwrap().parse().unwrap();
            let lam: usize = it.next().unwrap().parse().unwrap();
            let mu: usize = it.next().unwrap().parse().unwrap();
            let bit: u8 = it.next().unwrap().parse().unwrap();
            assert_eq!(ell, 17);
            t[mu][lam] = bit == 1;
        }
        t
    })
}

/// `theta_l(lambda, mu)`: 1 when all basis coefficients of
/// `U_l(phi_l^lambda g_l^mu)` are divisible by l.
///
/// l = 5, 7, 13 reduce to the computed fundamental row; l = 17 reduces into
/// the embedded table; l = 11 is unsupported (its table lives in external
/// work on the genus-one basis).
pub fn theta(ell: u64, lambda: i64, mu: i64) -> Result<bool> {
    match ell {
        5 | 7 | 13 => {
            let idx = (lambda + mu_shift(ell) * mu).rem_euclid(ell as i64) as usize;
            Ok(fundamental_row(ell)[idx])
        }
        17 => {
            // theta(lambda, mu) = theta(lambda + 6, mu - 4) = theta(lambda - 17, mu)
            let (q, b) = (Integer::div_floor(&mu, &4), mu.rem_euclid(4));
            let lam = (lambda + 6 * q).rem_euclid(17) as usize;
            Ok(theta17_table()[b as usize][lam])
        }
        11 => Err(Error::Unsupported { ell }),
        _ => Err(Error::ThetaUnavailable { ell }),
    }
}

/// theta as a 0/1 count for accumulation into `A_r`.
pub fn theta_bit(ell: u64, lambda: i64, mu: i64) -> Result<u32> {
    theta(ell, lambda, mu).map(u32::from)
}

/// Writes the theta table as CSV (`ell,lambda,mu,theta`): the fundamental
/// row for l = 5, 7, 13, the full stored grid for l = 17.
pub fn export_theta_csv<W: Write>(ell: u64, mut w: W) -> io::Result<()> {
    writeln!(w, "ell,lambda,mu,theta")?;
    match ell {
        5 | 7 | 13 => {
            for (lam, bit) in fundamental_row(ell).iter().enumerate() {
                writeln!(w, "{ell},{lam},0,{}", u8::from(*bit))?;
            }
        }
        17 => {
            for (mu, row) in theta17_table().iter().enumerate() {
                for (lam, bit) in row.iter().enumerate() {
                    writeln!(w, "17,{lam},{mu},{}", u8::from(*bit))?;
                }
            }
        }
        _ => unreachable!("export only defined for l = 5, 7, 13, 17"),
    }
    Ok(())
}
