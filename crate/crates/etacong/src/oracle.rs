//! Brute-force partition counters used as ground truth.
//!
//! Everything here is deliberately independent of the series kernel in
//! [`crate::qseries`]: tables are built by plain in-place dynamic programming
//! over the factors `(1 - q^j)^{+-1}`, and colored Frobenius counts come from
//! Andrews' lattice sum. The two code paths act as independent witnesses when
//! the test suites compare them.
//!
//! `gp_table(c, d, l, N)` returns the coefficients of
//! `prod_{n>=1} (1 - q^n)^{-c} (1 - q^{l n})^{-d}`, written `p_[1^c l^d](n)`.
//! Specializations: `p(n)` at `(1, 0)`, the l-regular counts `b_l(n)` at
//! `(1, -1)`, the l-core counts `a_l(n)` at `(1, -l)`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Parameters of the generalized partition family `p_[1^c l^d]`.
/// `c` and `d` may be negative (numerator factors).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneralizedPartitionSpec {
    pub c: i64,
    pub d: i64,
    pub ell: u64,
}

/// Multiply the table in place by `(1 - q^j)^{-1}` (ascending prefix pass).
fn inv_factor_pass(a: &mut [BigInt], j: usize) {
    for i in j..a.len() {
        let t = a[i - j].clone();
        a[i] += t;
    }
}

/// Multiply the table in place by `(1 - q^j)` (descending pass).
fn fwd_factor_pass(a: &mut [BigInt], j: usize) {
    for i in (j..a.len()).rev() {
        let t = a[i - j].clone();
        a[i] -= t;
    }
}

/// Coefficient table of `prod (1-q^n)^{-c} (1-q^{l n})^{-d}` for `n = 0..=n_max`,
/// by successive multiplication of single factors.
pub fn gp_table(spec: GeneralizedPartitionSpec, n_max: usize) -> Vec<BigInt> {
    let mut a = vec![BigInt::zero(); n_max + 1];
    a[0] = BigInt::from(1);
    let GeneralizedPartitionSpec { c, d, ell } = spec;
    for j in 1..=n_max {
        for _ in 0..c.unsigned_abs() {
            if c > 0 {
                inv_factor_pass(&mut a, j);
            } else {
                fwd_factor_pass(&mut a, j);
            }
        }
    }
    let step = ell as usize;
    if step <= n_max {
        for j in (step..=n_max).step_by(step) {
            for _ in 0..d.unsigned_abs() {
                if d > 0 {
                    inv_factor_pass(&mut a, j);
                } else {
                    fwd_factor_pass(&mut a, j);
                }
            }
        }
    }
    a
}

/// `p(0..=n_max)`: the ordinary partition numbers.
pub fn partitions(n_max: usize) -> Vec<BigInt> {
    gp_table(GeneralizedPartitionSpec { c: 1, d: 0, ell: 2 }, n_max)
}

/// `b_l(0..=n_max)`: partitions with no part divisible by l.
pub fn regular_table(ell: u64, n_max: usize) -> Vec<BigInt> {
    gp_table(GeneralizedPartitionSpec { c: 1, d: -1, ell }, n_max)
}

/// `a_l(0..=n_max)`: l-core partitions (no hook length divisible by l).
pub fn core_table(ell: u64, n_max: usize) -> Vec<BigInt> {
    gp_table(
        GeneralizedPartitionSpec {
            c: 1,
            d: -(ell as i64),
            ell,
        },
        n_max,
    )
}

/// Number of colors of a generalized Frobenius partition family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrobeniusSpec {
    pub k: u32,
}

/// `cphi_k(0..=n_max)` from Andrews' definition: the theta sum
/// `sum_{m in Z^{k-1}} q^{Q(m)}` with `Q(m) = ((sum m_i)^2 + sum m_i^2)/2`
/// divided by `(q; q)_inf^k`.
///
/// The lattice is enumerated recursively; since `Q(m) >= (sum m_i^2)/2`,
/// only points with `sum m_i^2 <= 2 n_max` are visited. Enumeration aborts
/// with [`Error::CapExceeded`] once the count of visited points passes `cap`.
pub fn frobenius_table(spec: FrobeniusSpec, n_max: usize, cap: u64) -> Result<Vec<BigInt>> {
    assert!(spec.k >= 1);
    let dim = (spec.k - 1) as usize;
    let budget = 2 * n_max as i64;
    let mut counts = vec![0u64; n_max + 1];
    let mut visited = 0u64;
    enumerate(dim, 0, 0, budget, &mut counts, &mut visited, cap)?;
    let mut a: Vec<BigInt> = counts.into_iter().map(BigInt::from).collect();
    for j in 1..=n_max {
        for _ in 0..spec.k {
            inv_factor_pass(&mut a, j);
        }
    }
    Ok(a)
}

fn enumerate(
    remaining: usize,
    sum: i64,
    sumsq: i64,
    budget: i64,
    counts: &mut [u64],
    visited: &mut u64,
    cap: u64,
) -> Result<()> {
    if remaining == 0 {
        *visited += 1;
        if *visited > cap {
            return Err(Error::CapExceeded {
                visited: *visited,
                cap,
            });
        }
        let q2 = sum * sum + sumsq;
        debug_assert!(q2 % 2 == 0);
        let q = q2 / 2;
        if q >= 0 && (q as usize) < counts.len() {
            counts[q as usize] += 1;
        }
        return Ok(());
    }
    let room = budget - sumsq;
    if room < 0 {
        return Ok(());
    }
    let bound = (room as f64).sqrt() as i64 + 1;
    for m in -bound..=bound {
        if sumsq + m * m <= budget {
            enumerate(
                remaining - 1,
                sum + m,
                sumsq + m * m,
                budget,
                counts,
                visited,
                cap,
            )?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vals(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn partition_numbers() {
        let p = partitions(10);
        assert_eq!(vals(&p), [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn parts_divisible_by_five() {
        let t = gp_table(GeneralizedPartitionSpec { c: 0, d: 1, ell: 5 }, 5);
        assert_eq!(vals(&t), [1, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn five_regular_counts() {
        let b = regular_table(5, 10);
        assert_eq!(vals(&b), [1, 1, 2, 3, 5, 6, 10, 13, 19, 25, 34]);
        assert_eq!(b[4], BigInt::from(5)); // all 5 partitions of 4 are 5-regular
    }

    #[test]
    fn five_core_counts() {
        let a = core_table(5, 10);
        assert_eq!(vals(&a), [1, 1, 2, 3, 5, 2, 6, 5, 7, 5, 12]);
        assert_eq!(a[4], BigInt::from(5)); // no hook of a partition of 4 reaches 5
    }

    #[test]
    fn seven_core_value_divisible_by_seven() {
        let a = core_table(7, 10);
        assert_eq!(a[5], BigInt::from(7));
    }

    #[test]
    fn regular_and_core_bounded_by_partitions() {
        use num_traits::Zero;
        let p = partitions(60);
        for ell in [5u64, 7, 11, 13, 17] {
            let b = regular_table(ell, 60);
            let a = core_table(ell, 60);
            for n in 0..=60 {
                assert!(b[n] >= BigInt::zero() && b[n] <= p[n]);
                assert!(a[n] >= BigInt::zero() && a[n] <= p[n]);
            }
        }
    }

    #[test]
    fn single_euler_factor() {
        let t = gp_table(
            GeneralizedPartitionSpec {
                c: -1,
                d: 0,
                ell: 5,
            },
            8,
        );
        assert_eq!(vals(&t), [1, -1, -1, 0, 0, 1, 0, 1, 0]);
    }

    #[test]
    fn frobenius_one_color_is_partitions() {
        let t = frobenius_table(FrobeniusSpec { k: 1 }, 10, 1 << 20).unwrap();
        assert_eq!(vals(&t), vals(&partitions(10)));
    }

    #[test]
    fn frobenius_two_colors() {
        let t = frobenius_table(FrobeniusSpec { k: 2 }, 8, 1 << 20).unwrap();
        assert_eq!(vals(&t), [1, 4, 9, 20, 42, 80, 147, 260, 445]);
    }

    #[test]
    fn frobenius_five_colors_leading_values() {
        let t = frobenius_table(FrobeniusSpec { k: 5 }, 6, 1 << 24).unwrap();
        assert_eq!(vals(&t), [1, 25, 150, 675, 2450, 7876, 22825]);
    }

    #[test]
    fn frobenius_empty_symbol() {
        for k in [1u32, 3, 5, 7] {
            let t = frobenius_table(FrobeniusSpec { k }, 0, 1 << 22).unwrap();
            assert_eq!(t[0], BigInt::from(1));
        }
    }

    #[test]
    fn cap_exceeded() {
        let err = frobenius_table(FrobeniusSpec { k: 7 }, 30, 100).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn hook_length_spot_check() {
        // direct l-core counting over Ferrers diagrams at tiny n
        fn hooks_ok(parts: &[usize], ell: usize) -> bool {
            let cols: Vec<usize> = (0..parts.first().copied().unwrap_or(0))
                .map(|j| parts.iter().filter(|&&p| p > j).count())
                .collect();
            for (i, &pi) in parts.iter().enumerate() {
                for j in 0..pi {
                    let hook = pi - j + cols[j] - i - 1;
                    if hook % ell == 0 {
                        return false;
                    }
                }
            }
            true
        }
        fn all_partitions(n: usize) -> Vec<Vec<usize>> {
            fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                if n == 0 {
                    out.push(cur.clone());
                    return;
                }
                for next in (1..=max.min(n)).rev() {
                    cur.push(next);
                    rec(n - next, next, cur, out);
                    cur.pop();
                }
            }
            let mut out = Vec::new();
            rec(n, n, &mut Vec::new(), &mut out);
            out
        }
        for ell in [5u64, 7] {
            let table = core_table(ell, 8);
            for n in 0..=8usize {
                let direct = all_partitions(n)
                    .iter()
                    .filter(|p| hooks_ok(p, ell as usize))
                    .count();
                assert_eq!(table[n], BigInt::from(direct), "l={ell} n={n}");
            }
        }
    }
}
