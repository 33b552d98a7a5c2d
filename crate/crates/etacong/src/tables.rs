//! Regeneration and audit of the published parameter tables.
//!
//! The published alpha tables ship verbatim as CSV data
//! (`data/alpha_table1.csv` for l = 5, 7, 13 over residues mod 24,
//! `data/alpha_table2.csv` for l = 17 over residues mod 96, both with a
//! positive and a negative `c + l d` regime). [`audit_alpha`] recomputes
//! every entry from the theta machinery through [`crate::sequence::alpha`]
//! and diffs against the data.
//!
//! The diff is not expected to be empty: the regeneration disagrees with the
//! printed tables at a documented set of entries, each adjudicated by
//! independent oracle computation (congruences hold where the regenerated
//! value is larger; witnesses exist where it is smaller). The frozen set
//! lives in [`expected_alpha_diffs`] and the audit reports are compared
//! against it rather than against emptiness.
//!
//! [`audit_regular`] and [`audit_core`] recompute the l-regular and l-core
//! table parameters (canonical residues via the inverse of 24, mu and A
//! values via the recursions) and flag the known misprint in the published
//! 7-regular residue formula, whose displayed numerator is not divisible by
//! its denominator.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::sequence::{alpha, canonical_residue, sequence_params};

/// One disagreement between a regenerated alpha value and the printed table.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AlphaDiff {
    pub ell: u64,
    pub residue: u32,
    pub negative_regime: bool,
    pub regenerated: u32,
    pub printed: u32,
}

fn parse_alpha_csv(text: &str, with_ell: bool) -> Vec<((u64, u32, bool), u32)> {
    let mut out = Vec::new();
    for line in text.lines().skip(1) {
        let mut it = line.split(',');
        let ell: u64 = if with_ell {
            it.next().unwrap().parse().unwrap()
        } else {
            17
        };
        let residue: u32 = it.next().unwrap().parse().unwrap();
        let regime = it.next().unwrap();
        let value: u32 = it.next().unwrap().parse().unwrap();
        out.push(((ell, residue, regime == "neg"), value));
    }
    out
}

fn printed_alpha() -> &'static Vec<((u64, u32, bool), u32)> {
    static T: OnceLock<Vec<((u64, u32, bool), u32)>> = OnceLock::new();
    T.get_or_init(|| {
        let mut v = parse_alpha_csv(include_str!("data/alpha_table1.csv"), true);
        v.extend(parse_alpha_csv(
            include_str!("data/alpha_table2.csv"),
            false,
        ));
        v
    })
}

/// Printed alpha value for the residue class of `c + l d` (mod 24, or mod 96
/// for l = 17), in the positive or negative regime.
pub fn printed_alpha_value(ell: u64, residue: u32, negative: bool) -> Option<u32> {
    printed_alpha()
        .iter()
        .find(|((l, s, n), _)| *l == ell && *s == residue && *n == negative)
        .map(|&(_, v)| v)
}

/// Recomputes an alpha row from theta. Representatives: `(c, d) = (s, 0)`
/// for the positive regime and `(s - 2*period, 0)` for the negative one;
/// alpha depends only on the residue class and the sign regime.
pub fn regenerate_alpha(ell: u64) -> Result<(Vec<u32>, Vec<u32>)> {
    let period: i64 = if ell == 17 { 96 } else { 24 };
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for s in 1..=period {
        pos.push(alpha(ell, s, 0)?);
        neg.push(alpha(ell, s - 2 * period, 0)?);
    }
    Ok((pos, neg))
}

/// Regenerates all rows and diffs them against the printed tables.
pub fn audit_alpha() -> Result<Vec<AlphaDiff>> {
    let mut diffs = Vec::new();
    for ell in [5u64, 7, 13, 17] {
        let period = if ell == 17 { 96u32 } else { 24 };
        let (pos, neg) = regenerate_alpha(ell)?;
        for s in 1..=period {
            for (negative, row) in [(false, &pos), (true, &neg)] {
                let regenerated = row[(s - 1) as usize];
                let printed = printed_alpha_value(ell, s, negative)
                    .ok_or_else(|| Error::Data(format!("missing printed alpha {ell},{s}")))?;
                if regenerated != printed {
                    diffs.push(AlphaDiff {
                        ell,
                        residue: s,
                        negative_regime: negative,
                        regenerated,
                        printed,
                    });
                }
            }
        }
    }
    diffs.sort();
    Ok(diffs)
}

/// The documented finding set: every entry where the regeneration is known
/// to disagree with the printed tables, adjudicated by oracle computation.
pub fn expected_alpha_diffs() -> Vec<AlphaDiff> {
    let mut v = Vec::new();
    // l = 13 row: printed 1,0,0 at residues 8,9,21 where theta gives 2,1,1
    for negative in [false, true] {
        v.push(AlphaDiff {
            ell: 13,
            residue: 8,
            negative_regime: negative,
            regenerated: 2,
            printed: 1,
        });
        v.push(AlphaDiff {
            ell: 13,
            residue: 9,
            negative_regime: negative,
            regenerated: 1,
            printed: 0,
        });
        v.push(AlphaDiff {
            ell: 13,
            residue: 21,
            negative_regime: negative,
            regenerated: 1,
            printed: 0,
        });
    }
    // negative-regime last column: printed as 1 for l = 5, 7; theta gives 2
    v.push(AlphaDiff {
        ell: 5,
        residue: 24,
        negative_regime: true,
        regenerated: 2,
        printed: 1,
    });
    v.push(AlphaDiff {
        ell: 7,
        residue: 24,
        negative_regime: true,
        regenerated: 2,
        printed: 1,
    });
    // l = 17 row "24": the printed 1 sits one column early (36 instead of 37)
    for negative in [false, true] {
        v.push(AlphaDiff {
            ell: 17,
            residue: 36,
            negative_regime: negative,
            regenerated: 0,
            printed: 1,
        });
        v.push(AlphaDiff {
            ell: 17,
            residue: 37,
            negative_regime: negative,
            regenerated: 1,
            printed: 0,
        });
    }
    // l = 17 residue 71: theta_17(3, 3) = 1 feeds residues 54 and 71 alike,
    // but the printed row carries the 1 only at 54; the class-71 congruence
    // p_[1^c 17^d](17m + 15) = 0 (mod 17) holds for multiple representatives
    for negative in [false, true] {
        v.push(AlphaDiff {
            ell: 17,
            residue: 71,
            negative_regime: negative,
            regenerated: 1,
            printed: 0,
        });
    }
    v.sort();
    v
}

/// A printed residue entry from the l-regular / l-core tables.
#[derive(Debug, Clone, Copy)]
pub enum Printed {
    /// A plain integer representative (possibly negative).
    Int(i64),
    /// A displayed fraction whose numerator is not divisible by the
    /// denominator; always a finding.
    NonIntegral { num: i64, den: i64 },
}

/// One audited row.
#[derive(Debug, Clone)]
pub struct AuditRow {
    pub ell: u64,
    pub r: usize,
    pub source: &'static str,
    pub printed: Printed,
    pub derived: BigInt,
    pub matches: bool,
}

/// Audit output for one of the two application tables.
#[derive(Debug, Clone, Default)]
pub struct TableAudit {
    pub rows: Vec<AuditRow>,
    pub findings: Vec<String>,
    pub notes: Vec<String>,
}

fn audit_rows(
    c: i64,
    d_of: impl Fn(u64) -> i64,
    printed: &[(u64, usize, &'static str, Printed)],
) -> TableAudit {
    let mut audit = TableAudit::default();
    for &(ell, r, source, p) in printed {
        let derived = canonical_residue(ell, c, d_of(ell), r);
        let modulus = BigInt::from(ell).pow(r as u32);
        let (matches, finding) = match p {
            Printed::Int(v) => {
                let same = BigInt::from(v).mod_floor(&modulus) == derived;
                let f = if same {
                    None
                } else {
                    Some(format!(
                        "l={ell} {source}: printed residue {v} differs from derived {derived} (mod {modulus})"
                    ))
                };
                (same, f)
            }
            Printed::NonIntegral { num, den } => (
                false,
                Some(format!(
                    "l={ell} {source}: printed residue {num}/{den} is not an integer; derived {derived} (mod {modulus})"
                )),
            ),
        };
        if let Some(f) = finding {
            audit.findings.push(f);
        }
        audit.rows.push(AuditRow {
            ell,
            r,
            source,
            printed: p,
            derived,
            matches,
        });
    }
    audit
}

/// Recomputes the l-regular table parameters (family `(1, -1)`).
/// Expected finding: the printed 7-regular residue formula evaluates to
/// 146/4 at r = 1; the corollary variant (unit leading coefficient) gives
/// the derived 12.
pub fn audit_regular() -> TableAudit {
    let printed: &[(u64, usize, &'static str, Printed)] = &[
        (5, 2, "table n_2", Printed::Int(4)),
        (7, 2, "table n_2", Printed::NonIntegral { num: 146, den: 4 }),
        (7, 2, "corollary n_2", Printed::Int(12)),
        (11, 2, "table n_2", Printed::Int(50)),
        (13, 1, "table n_1", Printed::Int(-7)),
        (13, 2, "corollary n_2", Printed::Int(84)),
        (17, 1, "table n_1", Printed::Int(-12)),
    ];
    let mut audit = audit_rows(1, |_| -1, printed);
    // informational: published A rates for 5, 7, 11 are A_{2r} = r; derived
    // chains agree where theta exists
    for ell in [5u64, 7] {
        let p = sequence_params(ell, 1, -1, 4);
        let a = p.a.as_ref().unwrap();
        if (a[2], a[4]) != (1, 2) {
            audit.notes.push(format!(
                "l={ell} regular: derived A_2,A_4 = {},{} differ from printed rate r",
                a[2], a[4]
            ));
        }
    }
    audit
}

/// Recomputes the l-core table parameters (family `(1, -l)`).
/// All printed residues match; the printed mu and A columns for l = 7 and
/// l = 5 disagree with the recursion and are reported as notes.
pub fn audit_core() -> TableAudit {
    let printed: &[(u64, usize, &'static str, Printed)] = &[
        (5, 1, "table n", Printed::Int(-1)),
        (5, 2, "corollary n", Printed::Int(-1)),
        (7, 1, "table n", Printed::Int(-2)),
        (7, 2, "corollary n", Printed::Int(-2)),
        (11, 1, "table n", Printed::Int(-5)),
        (11, 2, "corollary n", Printed::Int(-5)),
        (13, 2, "table n_2", Printed::Int(-7)),
        (17, 1, "table n_1", Printed::Int(-12)),
    ];
    let mut audit = audit_rows(1, |ell| -(ell as i64), printed);
    let p7 = sequence_params(7, 1, -7, 4);
    if p7.mu[2] != 0 {
        audit.notes.push(format!(
            "l=7 core: printed mu_2r = 0, recursion gives {} (omega = 1 case)",
            p7.mu[2]
        ));
    }
    let p5 = sequence_params(5, 1, -5, 4);
    let a5 = p5.a.as_ref().unwrap();
    if a5[2] != 1 {
        audit.notes.push(format!(
            "l=5 core: printed rate A_2r = r, derived chain gives A_2 = {} (mod-25 congruence at step 25 verified)",
            a5[2]
        ));
    }
    audit
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_tables_parse_completely() {
        for ell in [5u64, 7, 13] {
            for s in 1..=24 {
                assert!(printed_alpha_value(ell, s, false).is_some());
                assert!(printed_alpha_value(ell, s, true).is_some());
            }
        }
        for s in 1..=96 {
            assert!(printed_alpha_value(17, s, false).is_some());
            assert!(printed_alpha_value(17, s, true).is_some());
        }
        // published spot values
        assert_eq!(printed_alpha_value(5, 1, false), Some(2));
        assert_eq!(printed_alpha_value(13, 8, false), Some(1));
        assert_eq!(printed_alpha_value(17, 54, false), Some(2));
        assert_eq!(printed_alpha_value(17, 48, true), Some(2));
        assert_eq!(printed_alpha_value(5, 24, true), Some(1));
    }

    #[test]
    fn regular_audit_has_exactly_the_b7_finding() {
        let audit = audit_regular();
        assert_eq!(audit.findings.len(), 1, "{:?}", audit.findings);
        assert!(audit.findings[0].contains("146/4"));
        assert!(audit.rows.iter().filter(|r| !r.matches).count() == 1);
        assert!(audit.notes.is_empty(), "{:?}", audit.notes);
    }

    #[test]
    fn core_audit_residues_all_match() {
        let audit = audit_core();
        assert!(audit.findings.is_empty(), "{:?}", audit.findings);
        assert!(audit.rows.iter().all(|r| r.matches));
        // two informational notes: the 7-core mu and the 5-core A rate
        assert_eq!(audit.notes.len(), 2, "{:?}", audit.notes);
    }
}
