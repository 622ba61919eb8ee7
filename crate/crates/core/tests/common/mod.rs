//! Brute-force oracles that share no code with the library: elements are
//! plain `u8` symbols 0..4 and arithmetic comes from hand-written tables.
#![allow(dead_code)]

use std::collections::BTreeSet;

/// 0, 1, ω, ω̄ as 0, 1, 2, 3.
pub const ADD: [[u8; 4]; 4] = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];
pub const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
pub const CONJ: [u8; 4] = [0, 1, 3, 2];

pub type Vector = Vec<u8>;

pub fn sym(s: &str) -> Vector {
    s.chars()
        .map(|c| match c {
            '0' => 0,
            '1' => 1,
            'w' => 2,
            'W' => 3,
            _ => panic!("bad symbol {c}"),
        })
        .collect()
}

pub fn to_sym(v: &[u8]) -> String {
    v.iter()
        .map(|&x| ['0', '1', 'w', 'W'][x as usize])
        .collect()
}

pub fn add(a: &[u8], b: &[u8]) -> Vector {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| ADD[x as usize][y as usize])
        .collect()
}

pub fn scale(c: u8, a: &[u8]) -> Vector {
    a.iter().map(|&x| MUL[c as usize][x as usize]).collect()
}

pub fn weight(a: &[u8]) -> usize {
    a.iter().filter(|&&x| x != 0).count()
}

/// Trace of an element: 1 for ω and ω̄.
pub fn trace(x: u8) -> u8 {
    ADD[x as usize][MUL[x as usize][x as usize] as usize]
}

/// `Σ Tr(a_i · conj(b_i))` mod 2.
pub fn trace_ip(a: &[u8], b: &[u8]) -> u8 {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| trace(MUL[x as usize][CONJ[y as usize] as usize]))
        .fold(0, |s, t| s ^ t)
}

/// `Σ a_i b_i` over GF(4).
pub fn euclid_ip(a: &[u8], b: &[u8]) -> u8 {
    a.iter().zip(b).fold(0, |s, (&x, &y)| {
        ADD[s as usize][MUL[x as usize][y as usize] as usize]
    })
}

/// Closure of `rows` under addition (and under scaling when `linear`).
pub fn span(rows: &[Vector], linear: bool) -> BTreeSet<Vector> {
    let n = rows[0].len();
    let mut set: BTreeSet<Vector> = BTreeSet::from([vec![0; n]]);
    let gens: Vec<Vector> = if linear {
        rows.iter().flat_map(|r| [r.clone(), scale(2, r)]).collect()
    } else {
        rows.to_vec()
    };
    for g in &gens {
        let extra: Vec<Vector> = set.iter().map(|v| add(v, g)).collect();
        set.extend(extra);
    }
    set
}

/// Every vector of GF(4)^n.
pub fn all_vectors(n: usize) -> impl Iterator<Item = Vector> {
    (0..4usize.pow(n as u32)).map(move |mut i| {
        (0..n)
            .map(|_| {
                let d = (i % 4) as u8;
                i /= 4;
                d
            })
            .collect()
    })
}

pub fn trace_dual(code: &BTreeSet<Vector>, n: usize) -> BTreeSet<Vector> {
    all_vectors(n)
        .filter(|v| code.iter().all(|c| trace_ip(v, c) == 0))
        .collect()
}

pub fn euclid_dual(code: &BTreeSet<Vector>, n: usize) -> BTreeSet<Vector> {
    all_vectors(n)
        .filter(|v| code.iter().all(|c| euclid_ip(v, c) == 0))
        .collect()
}

pub fn weight_counts(code: &BTreeSet<Vector>, n: usize) -> Vec<u64> {
    let mut w = vec![0u64; n + 1];
    for c in code {
        w[weight(c)] += 1;
    }
    w
}

/// `a ≤ b` coordinatewise in the c-cover sense.
pub fn covers(big: &[u8], small: &[u8]) -> bool {
    big.iter().zip(small).all(|(&b, &s)| s == 0 || s == b)
}

pub fn support_set(v: &[u8]) -> BTreeSet<usize> {
    (0..v.len()).filter(|&i| v[i] != 0).collect()
}

/// Participants (coordinates 1..n) on the support.
pub fn group(v: &[u8]) -> BTreeSet<usize> {
    (1..v.len()).filter(|&i| v[i] != 0).collect()
}

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub const HEXACODE: [&str; 3] = ["1001ww", "010w1w", "001ww1"];
