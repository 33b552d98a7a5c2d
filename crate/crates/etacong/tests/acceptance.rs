//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.
//! Every tolerance here is exact equality or an exact divisibility bound;
//! nothing is floating point.

use std::collections::HashMap;

use etacong::basis::{compute_c, theta};
use etacong::claims::{ClaimStatus, CongruenceClaim, Direction, Family};
use etacong::engine::{build_l, corollary_suite, oracle_product_form, verify_claim, EngineCaps};
use etacong::eta::g_exponent;
use etacong::modeq::{
    check_valuation_bounds, newton_s, verify_modular_equation, verify_s_identity,
};
use etacong::sequence::sequence_params;
use etacong::tables::{audit_alpha, audit_core, audit_regular, expected_alpha_diffs};
use etacong::GPolynomial;
use num_bigint::BigInt;

/// The desk-scale family sample of the main theorem.
fn theorem_pairs(ell: u64) -> Vec<(i64, i64)> {
    vec![
        (1, 0),
        (2, 0),
        (0, 1),
        (6, -5),
        (4, -3),
        (8, -7),
        (1, -1),
        (1, -(ell as i64)),
    ]
}

fn gpoly(terms: &[(i64, i64)]) -> GPolynomial {
    GPolynomial::from_terms(terms.iter().map(|&(p, c)| (p, BigInt::from(c))))
}

#[test]
fn criterion_01_modular_equation_identities() {
    for (ell, prec) in [(5u64, 300i64), (7, 300), (13, 600)] {
        let rep = verify_modular_equation(ell, prec)
            .unwrap_or_else(|e| panic!("modular equation l={ell} failed: {e}"));
        assert!(rep.max_verified_exponent >= prec - 1);
    }
    println!("criterion 1 (modular equations l=5,7 to q^300, l=13 to q^600, exact): PASS");
}

#[test]
fn criterion_02_s_polynomial_identities() {
    let prec = 200;
    for ell in [5u64, 7] {
        for r in -20i64..=20 {
            if r != 0 {
                verify_s_identity(ell, r, prec)
                    .unwrap_or_else(|e| panic!("S identity l={ell} r={r}: {e}"));
            }
        }
    }
    for r in -10i64..=10 {
        if r != 0 {
            verify_s_identity(13, r, prec).unwrap_or_else(|e| panic!("S identity l=13 r={r}: {e}"));
        }
    }
    // one deep window against the displayed 13-matrix row
    let deep = verify_s_identity(13, -2, 400).expect("S_{-2,13} at q^400");
    assert!(deep.max_verified_exponent >= 399);
    // listed closed forms
    assert_eq!(newton_s(5, -1).unwrap().poly, gpoly(&[(0, -5)]));
    assert_eq!(newton_s(5, -5).unwrap().poly, gpoly(&[(-1, 5)]));
    assert_eq!(newton_s(7, -4).unwrap().poly, gpoly(&[(0, -49), (-1, -28)]));
    assert_eq!(newton_s(7, -7).unwrap().poly, gpoly(&[(-1, 343), (-2, 7)]));
    println!("criterion 2 (S_[r,l] = l*U_l(phi^r), l=5,7 r in [-20,20], l=13 r in [-10,10], q^200): PASS");
}

#[test]
fn criterion_03_valuation_lemmas() {
    let r5 = check_valuation_bounds(5, -20, 20).expect("l=5 valuation sweep");
    let r7 = check_valuation_bounds(7, -20, 20).expect("l=7 valuation sweep");
    let r13 = check_valuation_bounds(13, -10, 10).expect("l=13 valuation sweep");
    assert_eq!(r5.r_checked.len(), 40);
    assert_eq!(r7.r_checked.len(), 40);
    assert_eq!(r13.r_checked.len(), 20);
    println!(
        "criterion 3 (valuation floor bounds + exact dichotomy, {} coefficient checks): PASS",
        r5.terms_checked + r7.terms_checked + r13.terms_checked
    );
}

/// Direct theta bit at one argument: all basis coefficients of
/// `U_l(phi^lambda g^mu)` divisible by l, via an honest integer reduction.
fn theta_direct(ell: u64, lam: i64, mu: i64, memo: &mut HashMap<(i64, i64), bool>) -> bool {
    if let Some(&b) = memo.get(&(lam, mu)) {
        return b;
    }
    let w = match ell {
        5 => 1,
        7 => 2,
        _ => 7,
    };
    let width = w * (lam + g_exponent(ell) * mu) - mu;
    let prec = width.max(0) + 48;
    let c = compute_c(ell, lam, mu, Some(prec))
        .unwrap_or_else(|e| panic!("compute_c l={ell} ({lam},{mu}): {e}"));
    let bit = c.all_divisible_by(ell);
    memo.insert((lam, mu), bit);
    bit
}

#[test]
fn criterion_04_theta_tables() {
    // fundamental rows equal the published tables exactly
    let row5: Vec<bool> = (0..5).map(|l| theta(5, l, 0).unwrap()).collect();
    assert_eq!(row5, [false, true, true, false, false], "theta_5 row");
    let row7: Vec<bool> = (0..7).map(|l| theta(7, l, 0).unwrap()).collect();
    assert_eq!(
        row7,
        [false, true, false, false, true, false, false],
        "theta_7 row"
    );
    let row13: Vec<bool> = (0..13).map(|l| theta(13, l, 0).unwrap()).collect();
    let mut expect13 = [false; 13];
    expect13[10] = true;
    assert_eq!(row13, expect13, "theta_13 row");

    // periodicity relations by direct double computation on the grid
    // lambda in [-12,12], mu in [-3,3]; shifts chosen toward the cheap side
    for (ell, lam_shift, mu_shift) in [(5u64, 5i64, 6i64), (7, -7, 4), (13, -13, 2)] {
        let mut memo = HashMap::new();
        for lam in -12..=12 {
            for mu in -3..=3 {
                let base = theta_direct(ell, lam, mu, &mut memo);
                let shifted = theta_direct(ell, lam + lam_shift, mu, &mut memo);
                assert_eq!(base, shifted, "l={ell}: theta({lam},{mu}) vs lambda shift");
                let mu_down = theta_direct(ell, lam + mu_shift, mu - 1, &mut memo);
                assert_eq!(base, mu_down, "l={ell}: theta({lam},{mu}) vs mu shift");
                // and both agree with the table-reduction route
                assert_eq!(
                    base,
                    theta(ell, lam, mu).unwrap(),
                    "l={ell}: table reduction at ({lam},{mu})"
                );
            }
        }
    }

    // embedded theta_17 satisfies its reduction relations consistently
    for lam in -20i64..=20 {
        for mu in -6i64..=9 {
            let direct = theta(17, lam, mu).unwrap();
            assert_eq!(direct, theta(17, lam - 17, mu).unwrap());
            assert_eq!(direct, theta(17, lam + 6, mu - 4).unwrap());
        }
    }
    assert!(theta(17, 3, 3).unwrap() && theta(17, 14, 3).unwrap());
    println!("criterion 4 (theta tables + periodicity by double computation): PASS");
}

#[test]
fn criterion_05_alpha_reproduction() {
    let diffs = audit_alpha().expect("alpha regeneration");
    let expected = expected_alpha_diffs();
    assert_eq!(
        diffs, expected,
        "alpha regeneration diff set does not match the documented findings"
    );
    println!(
        "criterion 5 (alpha tables regenerated: 24x2 columns for l=5,7,13 and 96x2 for l=17; \
         {} documented divergences from the printed tables, all oracle-adjudicated): PASS",
        expected.len()
    );
}

#[test]
fn criterion_06_classical_congruences() {
    let caps = EngineCaps::default();
    let cases = [
        ("classical 5 0 0 1 1 congruence", 4u64),
        ("classical 5 0 0 2 2 congruence", 24),
        ("classical 7 0 0 1 1 congruence", 5),
        ("classical 7 0 0 2 2 congruence", 47),
        ("classical 11 0 0 1 1 congruence", 6),
    ];
    for (line, residue) in cases {
        let claim = CongruenceClaim::parse_line(line).unwrap();
        assert_eq!(claim.residue(), residue);
        let rep = verify_claim(&claim, 500, &caps).unwrap();
        assert_eq!(rep.status, ClaimStatus::Verified, "{line}: {}", rep.details);
    }
    println!("criterion 6 (Ramanujan ladder p(5n+4), p(25n+24), p(7n+5), p(49n+47), p(11n+6), n <= 500): PASS");
}

#[test]
fn criterion_07_theorem_desk_scale() {
    let caps = EngineCaps::default();
    let mut checked = 0;
    for ell in [5u64, 7, 13] {
        for (c, d) in theorem_pairs(ell) {
            let params = sequence_params(ell, c, d, 2);
            for r in 1..=2usize {
                let a = params.a_r(r).unwrap();
                let claim = CongruenceClaim {
                    family: Family::Generalized,
                    ell,
                    c,
                    d,
                    r,
                    modulus_exponent: a,
                    direction: Direction::Congruence,
                };
                let rep = verify_claim(&claim, 40, &caps).unwrap();
                assert_eq!(
                    rep.status,
                    ClaimStatus::Verified,
                    "l={ell} (c,d)=({c},{d}) r={r} A={a}: {}",
                    rep.details
                );
                checked += 1;
            }
        }
    }
    println!("criterion 7 (main congruence at r <= 2 for 8 families x l=5,7,13: {checked} claims, zero violations): PASS");
}

#[test]
fn criterion_08_l_series_bounds_and_product_form() {
    // valuation bound pi(L_r) >= A_r on windows of >= 40 coefficients
    for ell in [5u64, 7, 13] {
        for (c, d) in theorem_pairs(ell) {
            let params = sequence_params(ell, c, d, 2);
            for r in 1..=2usize {
                let a = params.a_r(r).unwrap() as u64;
                let prec = params.mu[r] + 41;
                let l_series = build_l(ell, c, d, r, prec).unwrap();
                let window = (l_series.prec() - l_series.lead()) as usize;
                assert!(window >= 40, "window {window} too small");
                match l_series.min_valuation(ell, window) {
                    None => {}
                    Some(v) => assert!(
                        v >= a,
                        "pi(L_{r}) = {v} < A_{r} = {a} for l={ell} (c,d)=({c},{d})"
                    ),
                }
            }
        }
    }
    // oracle-backed product form, exact coefficientwise match
    let mut product_cases: Vec<(u64, i64, i64, usize, usize)> = Vec::new();
    for (c, d) in theorem_pairs(5) {
        product_cases.push((5, c, d, 3, 25));
    }
    for (c, d) in [(1, 0), (0, 1), (2, 0), (1, -1)] {
        product_cases.push((7, c, d, 3, 15));
    }
    for (c, d) in [(1, 0), (0, 1)] {
        product_cases.push((13, c, d, 3, 8));
    }
    for ell in [5u64, 7, 13] {
        for (c, d) in theorem_pairs(ell) {
            product_cases.push((ell, c, d, 1, 30));
            product_cases.push((ell, c, d, 2, 20));
        }
    }
    for (ell, c, d, r, w) in product_cases {
        let oracle = oracle_product_form(ell, c, d, r, w);
        let built = build_l(ell, c, d, r, oracle.lead() + w as i64).unwrap();
        for n in oracle.lead()..oracle.lead() + w as i64 {
            assert_eq!(
                built.coeff(n),
                oracle.coeff(n),
                "L_{r} product form mismatch at q^{n}, l={ell} (c,d)=({c},{d})"
            );
        }
    }
    println!("criterion 8 (pi(L_r) >= A_r on 40-coefficient windows; L_r = oracle product form for r <= 3): PASS");
}

#[test]
fn criterion_09_frobenius_congruences() {
    let caps = EngineCaps::default();
    for name in ["frobenius5", "frobenius7", "frobenius11"] {
        let rep = corollary_suite(name, &caps).unwrap();
        for step in &rep.steps {
            assert!(step.passed, "{name}/{}: {}", step.name, step.details);
        }
    }
    println!("criterion 9 (cphi_5, cphi_7, cphi_11 chains: component congruences, finals, lattice cross-checks): PASS");
}

#[test]
fn criterion_10_incongruence_witnesses() {
    let caps = EngineCaps::default();
    let cases = [
        ("frobenius 13 0 0 2 1 incongruence", 78u64),
        ("regular 13 0 0 2 1 incongruence", 84),
        ("regular 17 0 0 1 1 incongruence", 5),
        ("core 13 0 0 2 1 incongruence", 162),
        ("core 17 0 0 1 1 incongruence", 5),
    ];
    for (line, residue) in cases {
        let claim = CongruenceClaim::parse_line(line).unwrap();
        assert_eq!(claim.residue(), residue, "{line}");
        let rep = verify_claim(&claim, 50, &caps).unwrap();
        assert_eq!(
            rep.status,
            ClaimStatus::WitnessFound,
            "{line}: {}",
            rep.details
        );
        // every one of these families has its first witness at m = 0
        assert!(rep.details.contains("m = 0"), "{line}: {}", rep.details);
    }
    // The published cphi_13 statement carries a sign slip: its progression
    // 169m + 91 sits in the 24n = -13 class rather than the theorem's
    // canonical 169m + 78. Both classes carry witnesses mod 13; check the
    // printed one directly (cphi_13 = p_[1^0 13^1] mod 13).
    let table = etacong::oracle::gp_table(
        etacong::oracle::GeneralizedPartitionSpec {
            c: 0,
            d: 1,
            ell: 13,
        },
        169 * 50 + 91,
    );
    let thirteen = BigInt::from(13);
    let witness = (0..=50u64).find(|m| {
        use num_integer::Integer as _;
        use num_traits::Zero as _;
        !table[(169 * m + 91) as usize]
            .mod_floor(&thirteen)
            .is_zero()
    });
    assert!(
        witness.is_some(),
        "no witness in the printed 169m+91 progression"
    );
    println!(
        "criterion 10 (incongruence witnesses within m <= 50 for cphi_13 (both residue classes), b_13, b_17, a_13, a_17): PASS"
    );
}

#[test]
fn criterion_11_table_audit() {
    let reg = audit_regular();
    assert_eq!(
        reg.findings.len(),
        1,
        "expected exactly the 7-regular finding: {:?}",
        reg.findings
    );
    assert!(reg.findings[0].contains("146/4"), "{}", reg.findings[0]);
    assert_eq!(reg.rows.iter().filter(|r| !r.matches).count(), 1);
    let core = audit_core();
    assert!(core.findings.is_empty(), "{:?}", core.findings);
    assert!(core.rows.iter().all(|r| r.matches));
    println!(
        "criterion 11 (regular/core parameter audit: the 7-regular residue misprint is the only finding; \
         {} informational notes): PASS",
        reg.notes.len() + core.notes.len()
    );
}
