//! The parameter sequences attached to a generalized partition family.
//!
//! For integers c, d and a prime l, the iterated-U construction works with
//!
//! - `lambda_r`: c for even r, d for odd r;
//! - `mu_r`: the recursion `mu_0 = 0`, `mu_r = ceil((delta_l lambda_{r-1} + mu_{r-1}) / l)`,
//!   which also equals the least m with `l^r m + n_r >= 0`;
//! - `n_r`: exponent offsets with `24 n_r = c + l d  (mod l^r)`, built by the
//!   recursion `n_r = -delta_l lambda_{r-1} l^{r-1} + n_{r-1}` and matching the
//!   geometric-series closed forms;
//! - `omega(c, d)`: 1 exactly when `c + l d` is negative and divisible by 24
//!   (the ceiling correction for the stabilized mu values);
//! - `A_r = sum_{i<r} theta_l(lambda_i, mu_i)`: the proved power of l;
//! - `alpha_l(c, d) = theta_l(d, ceil((l c + d)/24) + omega) + theta_l(c, ceil((c + l d)/24) + omega)`:
//!   the per-two-steps growth rate of `A_r` once mu has stabilized.
//!
//! Canonical residues are always recomputed through the inverse of 24 modulo
//! `l^r` rather than trusted from printed closed forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::basis::theta_bit;
use crate::error::{Error, Result};
use crate::eta::delta;

/// All sequence data for one family `(l, c, d)` up to index `r_max`.
#[derive(Debug, Clone)]
pub struct SequenceParams {
    pub ell: u64,
    pub c: i64,
    pub d: i64,
    /// `lambda_0 .. lambda_{r_max - 1}`.
    pub lambda: Vec<i64>,
    /// `mu_0 .. mu_{r_max}`.
    pub mu: Vec<i64>,
    /// `n_0 .. n_{r_max}` from the exact recursion.
    pub n_exact: Vec<BigInt>,
    /// `n_r mod l^r`, reduced into `[0, l^r)`.
    pub n_canonical: Vec<BigInt>,
    /// The ceiling correction `omega_l(c, d)`.
    pub omega: bool,
    /// `A_0 .. A_{r_max}`; `None` when no theta table exists (l = 11).
    pub a: Option<Vec<u32>>,
}

impl SequenceParams {
    pub fn a_r(&self, r: usize) -> Result<u32> {
        self.a
            .as_ref()
            .map(|v| v[r])
            .ok_or(Error::ThetaUnavailable { ell: self.ell })
    }
}

/// `omega_l(c, d)`.
pub fn omega(ell: u64, c: i64, d: i64) -> bool {
    let s = c + ell as i64 * d;
    s < 0 && s % 24 == 0
}

fn ceil_div_i64(a: i64, b: i64) -> i64 {
    Integer::div_ceil(&a, &b)
}

/// Closed form for `n_r` (geometric series):
/// `n_{2r-1} = -c (l^{2r} - 1)/24 - l d (l^{2r-2} - 1)/24`,
/// `n_{2r}   = -(c + l d)(l^{2r} - 1)/24`.
pub fn n_closed(ell: u64, c: i64, d: i64, r: usize) -> BigInt {
    if r == 0 {
        return BigInt::zero();
    }
    let l = BigInt::from(ell);
    let pow = |k: usize| l.pow(k as u32);
    let twenty_four = BigInt::from(24);
    if r % 2 == 1 {
        let a = (pow(r + 1) - 1) / &twenty_four;
        let b = (pow(r - 1) - 1) / &twenty_four;
        -BigInt::from(c) * a - BigInt::from(ell) * BigInt::from(d) * b
    } else {
        let a = (pow(r) - 1) / &twenty_four;
        -(BigInt::from(c) + BigInt::from(ell) * BigInt::from(d)) * a
    }
}

/// Least m with `l^r m + n_r >= 0`, i.e. `ceil(-n_r / l^r)`; this is the
/// exact ceiling form of mu.
pub fn mu_least(ell: u64, c: i64, d: i64, r: usize) -> i64 {
    if r == 0 {
        return 0;
    }
    let n = n_closed(ell, c, d, r);
    let m = -Integer::div_floor(&n, &BigInt::from(ell).pow(r as u32));
    i64::try_from(&m).expect("mu fits in i64")
}

/// The stabilized mu of parity `odd`/`even` (valid once `|c + l d| < l^r`):
/// `ceil((l c + d)/24) + omega` resp. `ceil((c + l d)/24) + omega`.
pub fn mu_stable(ell: u64, c: i64, d: i64, odd: bool) -> i64 {
    let w = i64::from(omega(ell, c, d));
    if odd {
        ceil_div_i64(ell as i64 * c + d, 24) + w
    } else {
        ceil_div_i64(c + ell as i64 * d, 24) + w
    }
}

/// Canonical residue `(c + l d) * 24^{-1} mod l^r` in `[0, l^r)`.
pub fn canonical_residue(ell: u64, c: i64, d: i64, r: usize) -> BigInt {
    let modulus = BigInt::from(ell).pow(r as u32);
    let e = BigInt::from(24).extended_gcd(&modulus);
    debug_assert!(e.gcd.is_one());
    let inv = e.x.mod_floor(&modulus);
    ((BigInt::from(c) + BigInt::from(ell) * BigInt::from(d)) * inv).mod_floor(&modulus)
}

/// Builds the full parameter set for `(l, c, d)` up to `r_max`.
/// `A_r` is populated for l = 5, 7, 13, 17 and absent for l = 11.
pub fn sequence_params(ell: u64, c: i64, d: i64, r_max: usize) -> SequenceParams {
    assert!(matches!(ell, 5 | 7 | 11 | 13 | 17), "prime out of range");
    let dl = delta(ell);
    let lambda: Vec<i64> = (0..r_max).map(|i| if i % 2 == 0 { c } else { d }).collect();

    let mut mu = vec![0i64];
    for i in 1..=r_max {
        let prev = mu[i - 1];
        mu.push(ceil_div_i64(dl * lambda[i - 1] + prev, ell as i64));
    }

    let mut n_exact = vec![BigInt::zero()];
    let mut power = BigInt::one(); // l^{r-1}
    for i in 1..=r_max {
        let step = BigInt::from(dl) * BigInt::from(lambda[i - 1]) * &power;
        n_exact.push(&n_exact[i - 1] - step);
        power *= ell;
    }

    let n_canonical = (0..=r_max)
        .map(|r| canonical_residue(ell, c, d, r))
        .collect();

    let a = if ell == 11 {
        None
    } else {
        let mut acc = 0u32;
        let mut v = vec![0u32];
        for i in 0..r_max {
            acc += theta_bit(ell, lambda[i], mu[i]).expect("theta available");
            v.push(acc);
        }
        Some(v)
    };

    SequenceParams {
        ell,
        c,
        d,
        lambda,
        mu,
        n_exact,
        n_canonical,
        omega: omega(ell, c, d),
        a,
    }
}

/// `alpha_l(c, d)` from the stabilized theta arguments.
/// Not available for l = 11 (no theta table).
pub fn alpha(ell: u64, c: i64, d: i64) -> Result<u32> {
    if ell == 11 {
        return Err(Error::ThetaUnavailable { ell });
    }
    let odd = theta_bit(ell, d, mu_stable(ell, c, d, true))?;
    let even = theta_bit(ell, c, mu_stable(ell, c, d, false))?;
    Ok(odd + even)
}

/// Externally sourced `A_r` values for l = 11 (Hauptmodul basis does not
/// exist; the published genus-one analysis gives these for the two families
/// the corollary suites need). `(1, 0)`: `A_r = r` for all r; `(0, 1)`:
/// `A_{2r} = 2r - 1`.
pub fn a11_external(c: i64, d: i64, r: usize) -> Option<u32> {
    match (c, d) {
        (1, 0) => Some(r as u32),
        (0, 1) => {
            if r >= 2 && r % 2 == 0 {
                Some(r as u32 - 1)
            } else {
                None
            }
        }
        _ => None,
    }
}
