mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::*;
use gf4sss::catalog;
use gf4sss::linear::{
    access_structure_linear, accessibility_linear, mask_of, minimal_group_counts, recover_linear,
    size_distribution_linear, size_distribution_linear_verified, LinearScheme,
};
use gf4sss::{Code, CodeKind, Error, Field, F4};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn scheme(name: &str) -> LinearScheme {
    LinearScheme::new(catalog::get(name).unwrap().code.unwrap()).unwrap()
}

/// Coalitions whose shares fix coordinate 0 of every codeword consistent with them.
fn oracle_qualified(words: &BTreeSet<Vector>, coalition: u64) -> bool {
    words
        .iter()
        .filter(|c| (1..c.len()).all(|i| coalition >> i & 1 == 0 || c[i] == 0))
        .all(|c| c[0] == 0)
}

#[test]
fn hexacode_access_structure() {
    let s = scheme("hexacode_linear");
    let a = access_structure_linear(&s);
    assert_eq!(a.size_distribution().to_string(), "10y^3 + 6y^5");
    assert_eq!(a.gamma.len(), 16);
    assert_eq!(a.accessibility().to_string(), "16/32 = 0.5");
    assert_eq!(*a.accessibility().ratio().denom(), 2);
    assert_eq!(a.min_group_size(), Some(3));
    // every weight-6 entry shares the full group {1..5}
    assert_eq!(a.distinct_groups(), 11);
    assert_eq!(a.minimal_size_distribution().to_string(), "10y^3");
}

#[test]
fn hexacode_groups_match_oracle() {
    let s = scheme("hexacode_linear");
    let a = access_structure_linear(&s);
    let dual_oracle = euclid_dual(
        &span(&HEXACODE.iter().map(|r| sym(r)).collect::<Vec<_>>(), true),
        6,
    );
    let mut oracle: Vec<BTreeSet<usize>> = dual_oracle
        .iter()
        .filter(|v| v[0] == 1)
        .map(|v| group(v))
        .collect();
    let mut got: Vec<BTreeSet<usize>> = a
        .gamma
        .iter()
        .map(|c| (1..6).filter(|&i| !c.get(i).is_zero()).collect())
        .collect();
    oracle.sort();
    got.sort();
    assert_eq!(got, oracle);
}

#[test]
fn coalition_recovery_iff_qualified() {
    for name in ["hexacode_linear", "e12"] {
        let s = scheme(name);
        let n = s.code().len();
        let words: BTreeSet<Vector> = s
            .code()
            .codewords()
            .unwrap()
            .map(|c| sym(&c.symbols()))
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for coalition in (0u64..1 << n).step_by(2) {
            let found = s.find_recovery(coalition);
            assert_eq!(
                found.is_some(),
                oracle_qualified(&words, coalition),
                "{name} {coalition:b}"
            );
            if let Some(coeffs) = found {
                let secret = F4::ALL[(coalition as usize / 2) % 4];
                let d = s.deal(secret, &mut rng).unwrap();
                assert_eq!(
                    recover_linear(&d.shares.restricted(coalition), &coeffs).unwrap(),
                    secret
                );
            }
        }
    }
}

#[test]
fn every_recovery_vector_recovers_every_secret() {
    let s = scheme("hexacode_linear");
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for secret in F4::ALL {
        let d = s.deal(secret, &mut rng).unwrap();
        for w in s.recovery_words() {
            let coeffs = s.find_recovery(gf4sss::linear::group_of(w)).unwrap();
            assert_eq!(recover_linear(&d.shares, &coeffs).unwrap(), secret);
        }
    }
}

#[test]
fn e12_access_structure_by_enumeration() {
    let s = scheme("e12");
    let a = access_structure_linear(&s);
    assert_eq!(
        a.size_distribution().to_string(),
        "5y^3 + 36y^5 + 390y^7 + 500y^9 + 93y^11"
    );
    assert_eq!(a.gamma.len(), 1024);
    assert_eq!(a.accessibility().to_string(), "1024/2048 = 0.5");
}

#[test]
fn golay_access_structure() {
    let s = scheme("golay24");
    let a = access_structure_linear(&s);
    let sizes = a.size_distribution();
    assert_eq!(
        sizes.terms(),
        &BTreeMap::from([(7, 253), (11, 1288), (15, 506), (23, 1)])
    );
    assert_eq!(sizes.total(), 2048);
    assert_eq!(a.min_group_size(), Some(7));
    let minimal = a.minimal_size_distribution();
    assert_eq!(minimal.get(7), 253);
    assert_eq!(minimal.get(11), 1288);
    // each weight-16 group holds an octad group through the same dealer coordinate
    assert_eq!(minimal.get(15), 0);
    let groups: Vec<u64> = a.gamma.iter().map(gf4sss::linear::group_of).collect();
    let octads: Vec<u64> = groups
        .iter()
        .copied()
        .filter(|g| g.count_ones() == 7)
        .collect();
    for g in groups.iter().filter(|g| g.count_ones() == 15) {
        assert!(octads.iter().any(|o| o & !g == 0));
    }
}

#[test]
fn analytic_size_distributions() {
    let hex = catalog::get("hexacode_linear")
        .unwrap()
        .weight_enumerator()
        .unwrap();
    assert_eq!(
        size_distribution_linear(&hex, Field::Gf4)
            .unwrap()
            .to_string(),
        "10y^3 + 6y^5"
    );
    let golay = catalog::get("golay24")
        .unwrap()
        .weight_enumerator()
        .unwrap();
    assert_eq!(
        size_distribution_linear(&golay, Field::Gf2)
            .unwrap()
            .to_string(),
        "253y^7 + 1288y^11 + 506y^15 + 1y^23"
    );
    let s = scheme("hexacode_linear");
    assert_eq!(
        size_distribution_linear_verified(s.dual())
            .unwrap()
            .to_string(),
        "10y^3 + 6y^5"
    );
}

#[test]
fn accessibility_values() {
    assert_eq!(accessibility_linear(0, 5).to_string(), "0/32 = 0");
    assert_eq!(accessibility_linear(2048, 23).decimal(), 2048.0 / 8388608.0);
}

#[test]
fn minimal_group_counts_on_simplex() {
    // columns: every nonzero vector of GF(2)^3
    let c = Code::from_symbol_rows(
        CodeKind::Linear,
        Field::Gf2,
        &["1010101", "0110011", "0001111"],
    )
    .unwrap();
    let r = minimal_group_counts(&c).unwrap();
    assert_eq!(r.formula_minimal_groups, 4);
    assert_eq!(r.brute_minimal_groups, 4);
    assert!(r.dictatorial.is_empty());
    assert_eq!(r.formula_membership, 2);
    assert!(r.brute_membership.values().all(|&m| m == 2));
    assert!(r.agrees());
}

#[test]
fn minimal_group_counts_with_dictatorial_participant() {
    // columns (1,0) (w,0) (0,1) (1,1) (1,w) (1,W); column 1 is a multiple of column 0
    let c = Code::from_symbol_rows(CodeKind::Linear, Field::Gf4, &["1w0111", "0011wW"]).unwrap();
    let r = minimal_group_counts(&c).unwrap();
    assert_eq!(r.formula_minimal_groups, 4);
    assert_eq!(r.brute_minimal_groups, 4);
    assert_eq!(r.dictatorial, vec![1]);
    assert_eq!(r.brute_dictatorial, vec![1]);
    assert_eq!(r.formula_membership, 3);
    assert!(r.agrees(), "{r:?}");
}

#[test]
fn minimal_group_counts_hypothesis_fails_on_hexacode() {
    let c = catalog::get("hexacode_linear").unwrap().code.unwrap();
    assert!(matches!(
        minimal_group_counts(&c),
        Err(Error::HypothesisFailed(_))
    ));
}

#[test]
fn golay_secrets_are_binary() {
    let s = scheme("golay24");
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    assert!(matches!(
        s.deal(F4::OMEGA, &mut rng),
        Err(Error::UnreachableSecret('w'))
    ));
    let d = s.deal(F4::ONE, &mut rng).unwrap();
    let coeffs = s
        .find_recovery(mask_of(&(1..24).collect::<Vec<_>>()))
        .unwrap();
    assert_eq!(coeffs.participants().len(), 7);
    assert_eq!(recover_linear(&d.shares, &coeffs).unwrap(), F4::ONE);
}
