//! One line per acceptance criterion. Exits non-zero if any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use gf4sss::additive::{
    accessibility_additive, analytic_access_from_enumerator, cheater_radii, count_minimal_additive,
    detect_cheaters, minimal_pairs, pair_generating_function, recover_additive, AdditiveScheme,
    CheaterOutcome, RECOVERY_TABLE,
};
use gf4sss::catalog;
use gf4sss::codes::{
    c_cover, dual_code, enumerate_codewords, is_self_dual, same_codewords, weight_distribution,
};
use gf4sss::designs::{verify_t_design, words_of_weight, BlockMultiset};
use gf4sss::linear::{access_structure_linear, group_of, recover_linear, LinearScheme};
use gf4sss::shares::ShareVector;
use gf4sss::{Code, Codeword, F4};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check, u64);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn code(name: &str) -> Code {
    catalog::get(name).unwrap().code.unwrap()
}

fn terms(c: &Code) -> Vec<(usize, u64)> {
    weight_distribution(c).unwrap().terms()
}

fn c1_enumerators() -> Check {
    let expect: [(&str, &[(usize, u64)]); 4] = [
        ("hexacode_additive", &[(0, 1), (4, 45), (6, 18)]),
        (
            "qc12",
            &[(0, 1), (6, 396), (8, 1485), (10, 1980), (12, 234)],
        ),
        (
            "e12",
            &[(0, 1), (4, 45), (6, 216), (8, 1755), (10, 1800), (12, 279)],
        ),
        (
            "golay24",
            &[(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)],
        ),
    ];
    for (name, want) in expect {
        let got = terms(&code(name));
        ensure!(got == want, "{name}: {got:?}");
    }
    Ok(())
}

fn c2_hexacode_additive() -> Check {
    let s = AdditiveScheme::new(code("hexacode_additive")).unwrap();
    let triples: BTreeSet<Vec<usize>> = (1..=5)
        .flat_map(|a| (a + 1..=5).flat_map(move |b| (b + 1..=5).map(move |c| vec![a, b, c])))
        .collect();
    for h in s.classes() {
        ensure!(h.len() == 16, "{} has {} members", h.class, h.len());
        ensure!(
            h.mu_table() == BTreeMap::from([(4, 10), (6, 6)]),
            "{} split {:?}",
            h.class,
            h.mu_table()
        );
        let small: BTreeSet<Vec<usize>> = h
            .vectors
            .iter()
            .filter(|v| v.weight() == 4)
            .map(|v| v.participants())
            .collect();
        ensure!(
            small == triples,
            "{} weight-4 groups differ from the table",
            h.class
        );
        ensure!(
            h.vectors
                .iter()
                .filter(|v| v.weight() == 6)
                .all(|v| v.participants() == vec![1, 2, 3, 4, 5]),
            "{} weight-6 groups",
            h.class
        );
    }
    let t = pair_generating_function(&s.classes()[0], &s.classes()[1]).unwrap();
    ensure!(
        t.to_string() == "100 (3,3)  60 (3,5)  60 (5,3)  36 (5,5)",
        "pairs {t}"
    );
    let minimal = minimal_pairs(s.classes()).canonical_count();
    ensure!(minimal == 256, "minimal pairs {minimal}");
    let acc = accessibility_additive(t.total() as u64, 5).ratio();
    ensure!(
        *acc.numer() == 1 && *acc.denom() == 4,
        "accessibility {acc}"
    );
    Ok(())
}

fn c3_linear() -> Check {
    for (name, sizes, total) in [
        ("hexacode_linear", "10y^3 + 6y^5", 16),
        ("e12", "5y^3 + 36y^5 + 390y^7 + 500y^9 + 93y^11", 1024),
    ] {
        let a = access_structure_linear(&LinearScheme::new(code(name)).unwrap());
        let got = a.size_distribution().to_string();
        ensure!(got == sizes, "{name}: {got}");
        ensure!(a.gamma.len() == total, "{name}: |Γ| = {}", a.gamma.len());
        let r = a.accessibility().ratio();
        ensure!(
            *r.numer() == 1 && *r.denom() == 2,
            "{name}: accessibility {r}"
        );
    }
    Ok(())
}

fn c4_qc12() -> Check {
    let c = code("qc12");
    let s = AdditiveScheme::new(c.clone()).unwrap();
    for h in s.classes() {
        let mu = h.mu_table();
        ensure!(
            mu == BTreeMap::from([(6, 66), (8, 330), (10, 550), (12, 78)]),
            "{} μ {mu:?}",
            h.class
        );
    }
    let t = pair_generating_function(&s.classes()[0], &s.classes()[1]).unwrap();
    let want: [u128; 16] = [
        4356, 21780, 36300, 5148, 21780, 108900, 181500, 25740, 36300, 181500, 302500, 42900, 5148,
        25740, 42900, 6084,
    ];
    let keys = [5, 7, 9, 11];
    let got: Vec<u128> = keys
        .iter()
        .flat_map(|&p| keys.iter().map(move |&q| (p, q)))
        .map(|(p, q)| t.get(p, q))
        .collect();
    ensure!(got == want && t.terms().len() == 16, "table {t}");
    let acc = accessibility_additive(t.total() as u64, 11).ratio();
    ensure!(
        *acc.numer() == 1 && *acc.denom() == 4,
        "accessibility {acc}"
    );
    let w6 = words_of_weight(&c, 6).unwrap();
    let blocks = BlockMultiset::from_supports(12, &w6).unwrap();
    let l = verify_t_design(&blocks, 5)
        .unwrap()
        .ok_or("weight 6 is not a 5-design")?;
    ensure!(l.raw == 3, "support λ5 = {}", l.raw);
    let profile = blocks.multiplicity_profile();
    let tripled = profile.get(&3).copied().unwrap_or(0) * 3;
    let simple = profile.get(&1).copied().unwrap_or(0);
    ensure!(tripled == 18 && simple == 378, "profile {profile:?}");
    for (w, want) in [(8, 105), (10, 630), (12, 234)] {
        let b = BlockMultiset::from_supports(12, &words_of_weight(&c, w).unwrap()).unwrap();
        let got = verify_t_design(&b, 5).unwrap().map(|l| l.raw);
        ensure!(got == Some(want), "weight {w}: λ5 {got:?}");
    }
    Ok(())
}

fn c5_s18() -> Check {
    let w = catalog::get("s18").unwrap().weight_enumerator().unwrap();
    let a = analytic_access_from_enumerator(&w, 18).map_err(|e| e.to_string())?;
    let mu: Vec<u64> = a.mu.values().copied().collect();
    ensure!(mu == [408, 3400, 17136, 28560, 15096, 936], "μ {mu:?}");
    let l1: Vec<u64> = a.lambda1.values().copied().collect();
    ensure!(l1 == [1224, 10200, 51408, 85680, 45288, 2808], "λ1 {l1:?}");
    let want: [u128; 36] = [
        166464, 1387200, 6991488, 11652480, 6159168, 381888, 1387200, 11560000, 58262400, 97104000,
        51326400, 3182400, 6991488, 58262400, 293642496, 489404160, 258685056, 16039296, 11652480,
        97104000, 489404160, 815673600, 431141760, 26732160, 6159168, 51326400, 258685056,
        431141760, 227889216, 14129856, 381888, 3182400, 16039296, 26732160, 14129856, 876096,
    ];
    let keys = [7, 9, 11, 13, 15, 17];
    let got: Vec<u128> = keys
        .iter()
        .flat_map(|&p| keys.iter().map(move |&q| (p, q)))
        .map(|(p, q)| a.table.get(p, q))
        .collect();
    ensure!(
        got == want && a.table.terms().len() == 36,
        "table {}",
        a.table
    );
    let r = a.accessibility.ratio();
    ensure!(*r.numer() == 1 && *r.denom() == 4, "accessibility {r}");
    Ok(())
}

fn c6_golay() -> Check {
    let a = access_structure_linear(&LinearScheme::new(code("golay24")).unwrap());
    let sizes = a.size_distribution();
    ensure!(
        sizes.terms() == &BTreeMap::from([(7, 253), (11, 1288), (15, 506), (23, 1)]),
        "Γ sizes {sizes}"
    );
    ensure!(
        a.min_group_size() == Some(7),
        "smallest group {:?}",
        a.min_group_size()
    );
    let minimal = a.minimal_size_distribution();
    ensure!(
        minimal.terms() == &BTreeMap::from([(7, 253), (11, 1288), (15, 253)]),
        "minimal structure {minimal} (expected 253y^7 + 1288y^11 + 253y^15)"
    );
    Ok(())
}

fn c7_round_trips() -> Check {
    let hex = AdditiveScheme::new(code("hexacode_additive")).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut cases = 0;
    for secret in F4::ALL {
        let d = hex.deal(secret, &mut rng).unwrap();
        for (a, b) in [(0, 1), (0, 2), (1, 2), (1, 0), (2, 0), (2, 1)] {
            for x in &hex.classes()[a].vectors {
                for y in &hex.classes()[b].vectors {
                    let only = d.shares.restricted(x.group() | y.group());
                    let got = recover_additive(x, y, &only).map_err(|e| e.to_string())?;
                    ensure!(got == secret, "hexacode {secret} recovered as {got}");
                    cases += 1;
                }
            }
        }
    }
    ensure!(cases >= 1024, "only {cases} cases");
    let qc = AdditiveScheme::new(code("qc12")).unwrap();
    for _ in 0..1000 {
        let secret = F4::ALL[rng.gen_range(0..4)];
        let d = qc.deal(secret, &mut rng).unwrap();
        let a = rng.gen_range(0..3);
        let b = (a + rng.gen_range(1..3)) % 3;
        let x = &qc.classes()[a].vectors[rng.gen_range(0..qc.classes()[a].len())];
        let y = &qc.classes()[b].vectors[rng.gen_range(0..qc.classes()[b].len())];
        let got = recover_additive(x, y, &d.shares.restricted(x.group() | y.group()))
            .map_err(|e| e.to_string())?;
        ensure!(got == secret, "qc12 {secret} recovered as {got}");
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let keys: BTreeSet<(u8, u8)> = RECOVERY_TABLE.iter().map(|(r, _)| (r[i], r[j])).collect();
        ensure!(keys.len() == 4, "columns {i},{j} do not separate secrets");
    }
    Ok(())
}

/// Coalition can determine coordinate 0 from the code alone.
fn qualified(words: &[Codeword], coalition: u64) -> bool {
    words
        .iter()
        .filter(|c| group_of(c) & coalition == 0)
        .all(|c| c.get(0).is_zero())
}

fn c8_recovery_equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let lin = LinearScheme::new(code("hexacode_linear")).unwrap();
    let lin_words: Vec<Codeword> = enumerate_codewords(lin.code()).unwrap().collect();
    let add = AdditiveScheme::new(code("hexacode_additive")).unwrap();
    let add_words: Vec<Codeword> = enumerate_codewords(add.code()).unwrap().collect();
    let dual_lin: Vec<Codeword> = enumerate_codewords(lin.dual()).unwrap().collect();
    let dual_add: Vec<Codeword> = enumerate_codewords(add.dual()).unwrap().collect();
    for subset in 0u64..32 {
        let coalition = subset << 1;
        let exists_lin = dual_lin
            .iter()
            .any(|x| x.get(0) == F4::ONE && group_of(x) & !coalition == 0);
        let classes: BTreeSet<F4> = dual_add
            .iter()
            .filter(|x| !x.get(0).is_zero() && group_of(x) & !coalition == 0)
            .map(|x| x.get(0))
            .collect();
        let exists_add = classes.len() >= 2;
        for secret in F4::ALL {
            let d = lin.deal(secret, &mut rng).unwrap();
            let shares = d.shares.restricted(coalition);
            let ok = lin
                .find_recovery(coalition)
                .map(|c| recover_linear(&shares, &c).ok() == Some(secret));
            ensure!(ok.unwrap_or(false) == exists_lin, "linear {coalition:b}");
            let d = add.deal(secret, &mut rng).unwrap();
            let got = add.recover_auto(&d.shares.restricted(coalition)).ok();
            ensure!(
                (got == Some(secret)) == exists_add,
                "additive {coalition:b}"
            );
        }
        ensure!(
            exists_lin == qualified(&lin_words, coalition),
            "linear oracle {coalition:b}"
        );
        ensure!(
            exists_add == qualified(&add_words, coalition),
            "additive oracle {coalition:b}"
        );
    }
    Ok(())
}

fn c9_structure() -> Check {
    for name in [
        "hexacode_linear",
        "hexacode_additive",
        "e12",
        "qc12",
        "golay24",
    ] {
        let c = code(name);
        let d = dual_code(&c).unwrap();
        ensure!(
            same_codewords(&dual_code(&d).unwrap(), &c),
            "{name}: dual of dual"
        );
        let q = c.field().order() as u128;
        ensure!(
            c.size() * d.size() == q.pow(c.len() as u32),
            "{name}: |C||C⊥|"
        );
    }
    // the hexacode is self-dual under the trace inner product
    for name in ["hexacode_additive", "qc12", "e12", "golay24"] {
        ensure!(is_self_dual(&code(name)).unwrap(), "{name} not self-dual");
    }
    let words: Vec<Codeword> = enumerate_codewords(&code("qc12")).unwrap().collect();
    let w6: Vec<&Codeword> = words.iter().filter(|w| w.weight() == 6).collect();
    for big in words.iter().filter(|w| w.weight() == 8) {
        for small in &w6 {
            ensure!(!c_cover(small, big).unwrap(), "weight 8 covers weight 6");
        }
    }
    Ok(())
}

fn corrupt(shares: &ShareVector, who: &[usize], rng: &mut ChaCha8Rng) -> ShareVector {
    let mut out = shares.clone();
    for &p in who {
        let old = out.get(p).unwrap();
        let shift = F4::NONZERO[rng.gen_range(0..3)];
        out.insert(p, old + shift);
    }
    out
}

fn pick(rng: &mut ChaCha8Rng, m: usize, k: usize) -> Vec<usize> {
    let mut all: Vec<usize> = (1..=m).collect();
    for i in 0..k {
        let j = rng.gen_range(i..all.len());
        all.swap(i, j);
    }
    let mut v = all[..k].to_vec();
    v.sort();
    v
}

fn c10_cheaters() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let hex = AdditiveScheme::new(code("hexacode_additive")).unwrap();
    ensure!(
        cheater_radii(hex.code(), false).unwrap().correct == 1,
        "hexacode radius"
    );
    for _ in 0..100 {
        let secret = F4::ALL[rng.gen_range(0..4)];
        let d = hex.deal(secret, &mut rng).unwrap();
        let who = pick(&mut rng, 5, 1);
        let bad = corrupt(&d.shares, &who, &mut rng);
        let got = detect_cheaters(hex.code(), &bad, None).unwrap();
        ensure!(
            got == CheaterOutcome::Corrected {
                cheaters: who.clone(),
                secret: secret.symbol()
            },
            "hexacode {got:?}"
        );
    }
    let qc = AdditiveScheme::new(code("qc12")).unwrap();
    let radii = cheater_radii(qc.code(), true).unwrap();
    ensure!(
        radii.correct == 2 && radii.detect == 5,
        "qc12 radii {radii:?}"
    );
    for trial in 0..100 {
        let secret = F4::ALL[rng.gen_range(0..4)];
        let d = qc.deal(secret, &mut rng).unwrap();
        let k = 1 + trial % 5;
        let who = pick(&mut rng, 11, k);
        let bad = corrupt(&d.shares, &who, &mut rng);
        let got = detect_cheaters(qc.code(), &bad, Some(secret)).unwrap();
        ensure!(
            got != CheaterOutcome::Clean,
            "qc12 accepted {k} corrupted shares"
        );
        if k <= 2 {
            ensure!(
                got == CheaterOutcome::Corrected {
                    cheaters: who.clone(),
                    secret: secret.symbol()
                },
                "qc12 {k} errors: {got:?}"
            );
        }
    }
    Ok(())
}

fn c11_discrepancy() -> Check {
    let r = count_minimal_additive(&code("hexacode_additive")).map_err(|e| e.to_string())?;
    ensure!(r.formula_total == 768, "formula {}", r.formula_total);
    ensure!(
        r.single_pair_count == 256,
        "single pair {}",
        r.single_pair_count
    );
    ensure!(
        r.brute_unordered == 768 && r.brute_ordered == 1536,
        "brute {} / {}",
        r.brute_unordered,
        r.brute_ordered
    );
    ensure!(
        r.flags
            .iter()
            .any(|f| f.contains("768") && f.contains("256")),
        "no discrepancy flag: {:?}",
        r.flags
    );
    Ok(())
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("weight enumerators", c1_enumerators, 1),
        ("hexacode additive scheme", c2_hexacode_additive, 1),
        ("linear hexacode and E12 schemes", c3_linear, 5),
        ("QC12 access structure and designs", c4_qc12, 30),
        ("S18 analytic path", c5_s18, 1),
        ("Golay scheme", c6_golay, 10),
        ("protocol round trips", c7_round_trips, 30),
        ("recovery iff dual codeword", c8_recovery_equivalence, 5),
        ("structural properties", c9_structure, 30),
        ("cheater detection", c10_cheaters, 60),
        ("discrepancy surfacing", c11_discrepancy, 1),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let slow = took > Duration::from_secs(limit);
        match (&result, slow) {
            (Ok(()), false) => println!("PASS {:>2} {name} ({:.2}s)", i + 1, took.as_secs_f64()),
            (Ok(()), true) => println!(
                "FAIL {:>2} {name}: took {:.2}s, limit {limit}s",
                i + 1,
                took.as_secs_f64()
            ),
            (Err(msg), _) => println!("FAIL {:>2} {name}: {msg}", i + 1),
        }
        if result.is_err() || slow {
            failed += 1;
        }
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
