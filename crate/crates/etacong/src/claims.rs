//! Congruence claims and their machine-readable reports.
//!
//! A claim names a partition family, a prime power step `l^r`, a modulus
//! exponent and a direction. The residue of the arithmetic progression is
//! never part of the claim text: it is always recomputed canonically through
//! the inverse of 24 modulo `l^r` for the family's `(c, d)` parameters.
//!
//! Claim files carry one claim per line,
//! `family ell c d r modulus_exponent direction`,
//! where `ell` doubles as the color count for the `frobenius` family.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sequence::canonical_residue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Classical,
    Generalized,
    Frobenius,
    Regular,
    Core,
}

impl Family {
    fn as_str(self) -> &'static str {
        match self {
            Family::Classical => "classical",
            Family::Generalized => "generalized",
            Family::Frobenius => "frobenius",
            Family::Regular => "regular",
            Family::Core => "core",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Congruence,
    Incongruence,
}

impl Direction {
    fn as_str(self) -> &'static str {
        match self {
            Direction::Congruence => "congruence",
            Direction::Incongruence => "incongruence",
        }
    }
}

/// One verifiable statement about an arithmetic progression of partition
/// values: `x(l^r m + n_r) = 0 mod l^A` for all m in the window
/// (congruence) or for some m a witness with nonzero value mod `l^A`
/// (incongruence).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CongruenceClaim {
    pub family: Family,
    /// The prime l; for `frobenius` this is the color count k as well.
    pub ell: u64,
    pub c: i64,
    pub d: i64,
    pub r: usize,
    pub modulus_exponent: u32,
    pub direction: Direction,
}

impl CongruenceClaim {
    /// The generalized-family parameters whose table realizes this claim.
    pub fn underlying(&self) -> (i64, i64) {
        match self.family {
            Family::Classical => (1, 0),
            Family::Generalized => (self.c, self.d),
            Family::Frobenius => (0, 1),
            Family::Regular => (1, -1),
            Family::Core => (1, -(self.ell as i64)),
        }
    }

    /// `l^r` as a u64; claims keep r small enough for this to be exact.
    pub fn step(&self) -> u64 {
        self.ell
            .checked_pow(self.r as u32)
            .expect("step overflows u64")
    }

    /// Canonical residue of the progression, in `[0, l^r)`.
    pub fn residue(&self) -> u64 {
        let (c, d) = self.underlying();
        let res = canonical_residue(self.ell, c, d, self.r);
        u64::try_from(&res).expect("residue fits u64")
    }

    pub fn modulus(&self) -> BigInt {
        BigInt::from(self.ell).pow(self.modulus_exponent)
    }

    /// Canonical one-line form, also used as the deterministic report key.
    pub fn to_line(&self) -> String {
        format!(
            "{} {} {} {} {} {} {}",
            self.family.as_str(),
            self.ell,
            self.c,
            self.d,
            self.r,
            self.modulus_exponent,
            self.direction.as_str()
        )
    }

    pub fn parse_line(line: &str) -> Result<CongruenceClaim> {
        let bad = || Error::Data(format!("claim line `{line}`"));
        let mut it = line.split_whitespace();
        let family = match it.next().ok_or_else(bad)? {
            "classical" => Family::Classical,
            "generalized" => Family::Generalized,
            "frobenius" => Family::Frobenius,
            "regular" => Family::Regular,
            "core" => Family::Core,
            _ => return Err(bad()),
        };
        let ell: u64 = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let c: i64 = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let d: i64 = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let r: usize = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let modulus_exponent: u32 = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let direction = match it.next().ok_or_else(bad)? {
            "congruence" => Direction::Congruence,
            "incongruence" => Direction::Incongruence,
            _ => return Err(bad()),
        };
        if it.next().is_some() {
            return Err(bad());
        }
        Ok(CongruenceClaim {
            family,
            ell,
            c,
            d,
            r,
            modulus_exponent,
            direction,
        })
    }

    /// Parses a whole claim file (blank lines and `#` comments allowed).
    pub fn parse_file(text: &str) -> Result<Vec<CongruenceClaim>> {
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(CongruenceClaim::parse_line)
            .collect()
    }
}

impl fmt::Display for CongruenceClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_line())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimStatus {
    Verified,
    Violated,
    WitnessFound,
    WitnessNotFound,
    Skipped,
}

impl ClaimStatus {
    pub fn is_success(self) -> bool {
        matches!(self, ClaimStatus::Verified | ClaimStatus::WitnessFound)
    }
}

/// Verification outcome for one claim.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub claim: String,
    pub status: ClaimStatus,
    pub details: String,
}

/// Renders reports as the canonical JSON document (stable field order,
/// claims sorted by key).
pub fn reports_to_json(reports: &[ClaimReport]) -> String {
    let mut sorted: Vec<&ClaimReport> = reports.iter().collect();
    sorted.sort_by(|a, b| a.claim.cmp(&b.claim));
    serde_json::to_string_pretty(&sorted).expect("report serialization")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_round_trip() {
        let text = "generalized 5 6 -5 2 2 congruence";
        let c = CongruenceClaim::parse_line(text).unwrap();
        assert_eq!(c.to_line(), text);
        assert_eq!(c.step(), 25);
        assert_eq!(c.residue(), 19);
    }

    #[test]
    fn canonical_residues_per_family() {
        let p = CongruenceClaim::parse_line("classical 5 0 0 1 1 congruence").unwrap();
        assert_eq!(p.residue(), 4);
        let f = CongruenceClaim::parse_line("frobenius 5 0 0 2 1 congruence").unwrap();
        assert_eq!(f.residue(), 20);
        let b = CongruenceClaim::parse_line("regular 7 0 0 2 1 congruence").unwrap();
        assert_eq!(b.residue(), 12);
        let a = CongruenceClaim::parse_line("core 13 0 0 2 1 incongruence").unwrap();
        assert_eq!(a.residue(), 162);
    }

    #[test]
    fn file_parsing_skips_comments() {
        let text = "# header\n\nclassical 5 0 0 1 1 congruence\ncore 17 0 0 1 1 incongruence\n";
        let v = CongruenceClaim::parse_file(text).unwrap();
        assert_eq!(v.len(), 2);
        assert!(CongruenceClaim::parse_file("nonsense").is_err());
    }

    #[test]
    fn json_is_sorted_and_stable() {
        let r1 = ClaimReport {
            claim: "b".into(),
            status: ClaimStatus::Verified,
            details: String::new(),
        };
        let r2 = ClaimReport {
            claim: "a".into(),
            status: ClaimStatus::WitnessFound,
            details: String::new(),
        };
        let j1 = reports_to_json(&[r1.clone(), r2.clone()]);
        let j2 = reports_to_json(&[r2, r1]);
        assert_eq!(j1, j2);
        assert!(j1.find("\"a\"").unwrap() < j1.find("\"b\"").unwrap());
        assert!(j1.contains("witness_found"));
    }
}
