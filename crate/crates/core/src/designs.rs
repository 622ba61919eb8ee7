//! t-designs held by codeword supports.
//!
//! Blocks built from a code are taken per codeword, so a support shared by
//! several codewords (for example the three scalar multiples of a word in a
//! GF(4)-linear code) appears with that multiplicity. [`verify_t_design`]
//! reports λ for this multiset and also λ divided by the g.c.d. of the block
//! multiplicities.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::codes::{
    bits_of, c_covers, dual_code, enumerate_codewords, weight_distribution, Code, CodeKind,
    Codeword, WeightDistribution,
};
use crate::error::{Error, Result};

/// Multiset of equal-size subsets of `{0, …, v-1}`, stored as bit masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockMultiset {
    v: usize,
    block_size: usize,
    blocks: Vec<u64>,
}

impl BlockMultiset {
    pub fn new(v: usize, blocks: Vec<u64>) -> Result<Self> {
        let first = *blocks.first().ok_or(Error::EmptyBlockSet)?;
        let block_size = first.count_ones() as usize;
        if v > 64
            || blocks
                .iter()
                .any(|b| b.count_ones() as usize != block_size || (v < 64 && b >> v != 0))
        {
            return Err(Error::InvalidCode(
                "blocks must be equal-size subsets of the point set".into(),
            ));
        }
        Ok(BlockMultiset {
            v,
            block_size,
            blocks,
        })
    }

    /// One block per codeword: its support.
    pub fn from_supports<'a>(
        v: usize,
        words: impl IntoIterator<Item = &'a Codeword>,
    ) -> Result<Self> {
        BlockMultiset::new(v, words.into_iter().map(Codeword::support_mask).collect())
    }

    pub fn points(&self) -> usize {
        self.v
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `repetition number → number of distinct blocks repeated that often`.
    pub fn multiplicity_profile(&self) -> BTreeMap<u64, u64> {
        let mut per_block: HashMap<u64, u64> = HashMap::new();
        for &b in &self.blocks {
            *per_block.entry(b).or_default() += 1;
        }
        let mut profile = BTreeMap::new();
        for m in per_block.into_values() {
            *profile.entry(m).or_default() += 1;
        }
        profile
    }
}

/// Parameters of a t-(v, k, λ) design.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DesignParams {
    pub t: usize,
    pub v: usize,
    pub block_size: usize,
    pub lambda: u64,
}

/// λ_t of a verified design, raw and reduced by the multiplicity g.c.d.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DesignLambda {
    pub raw: u64,
    pub multiplicity_gcd: u64,
    pub reduced: u64,
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Calls `f` with every `t`-subset (as a mask) of the given points.
fn for_each_subset(points: &[usize], t: usize, f: &mut impl FnMut(u64)) {
    fn rec(points: &[usize], t: usize, start: usize, acc: u64, f: &mut impl FnMut(u64)) {
        if t == 0 {
            f(acc);
            return;
        }
        for i in start..=points.len() - t {
            rec(points, t - 1, i + 1, acc | 1u64 << points[i], f);
        }
    }
    if t <= points.len() {
        rec(points, t, 0, 0, f);
    }
}

/// Colex rank of a subset among all subsets of the same size.
struct SubsetRanker {
    table: Vec<Vec<u128>>,
}

impl SubsetRanker {
    fn new(v: usize, t: usize) -> Self {
        SubsetRanker {
            table: (0..=v)
                .map(|n| (0..=t).map(|k| binomial(n, k)).collect())
                .collect(),
        }
    }

    fn rank(&self, mask: u64) -> usize {
        bits_of(mask)
            .into_iter()
            .enumerate()
            .map(|(j, p)| self.table[p][j + 1] as usize)
            .sum()
    }
}

/// λ_t if every t-subset of points lies in the same number of blocks.
pub fn verify_t_design(blocks: &BlockMultiset, t: usize) -> Result<Option<DesignLambda>> {
    if blocks.is_empty() {
        return Err(Error::EmptyBlockSet);
    }
    if t > blocks.block_size {
        return Err(Error::StrengthOutOfRange {
            t,
            d: blocks.block_size,
        });
    }
    let ranker = SubsetRanker::new(blocks.v, t);
    let mut counts = vec![0u64; binomial(blocks.v, t) as usize];
    for &b in &blocks.blocks {
        for_each_subset(&bits_of(b), t, &mut |s| counts[ranker.rank(s)] += 1);
    }
    let raw = counts[0];
    if counts.iter().any(|&c| c != raw) || raw == 0 {
        return Ok(None);
    }
    let g = blocks
        .multiplicity_profile()
        .keys()
        .fold(0, |g, &m| gcd(g, m));
    Ok(Some(DesignLambda {
        raw,
        multiplicity_gcd: g,
        reduced: raw / g,
    }))
}

/// `λ_i = λ · C(v-i, t-i) / C(k-i, t-i)` for `0 ≤ i ≤ t`.
pub fn lambda_convert(p: DesignParams, i: usize) -> Result<u64> {
    if i > p.t || p.t > p.block_size || p.block_size > p.v {
        return Err(Error::StrengthOutOfRange { t: i, d: p.t });
    }
    let num = p.lambda as u128 * binomial(p.v - i, p.t - i);
    let den = binomial(p.block_size - i, p.t - i);
    if !num.is_multiple_of(den) {
        return Err(Error::NonIntegral(format!("λ_{i} = {num}/{den}")));
    }
    Ok((num / den) as u64)
}

/// λ_t of a design with `blocks` blocks: `b · C(k, t) / C(v, t)`.
pub fn lambda_from_block_count(blocks: u64, t: usize, v: usize, block_size: usize) -> Result<u64> {
    let num = blocks as u128 * binomial(block_size, t);
    let den = binomial(v, t);
    if den == 0 || !num.is_multiple_of(den) {
        return Err(Error::NonIntegral(format!("λ_{t} = {num}/{den}")));
    }
    Ok((num / den) as u64)
}

/// μ_t if every weight-t vector of GF(4)^n is c-covered by the same number
/// of `words` (a generalized t-design of type 3).
pub fn verify_generalized_design(words: &[Codeword], t: usize) -> Result<Option<u64>> {
    let first = words.first().ok_or(Error::EmptyBlockSet)?;
    let (n, k) = (first.len(), first.weight());
    if let Some(w) = words.iter().find(|w| w.len() != n) {
        return Err(Error::LengthMismatch(w.len(), n));
    }
    if words.iter().any(|w| w.weight() != k) {
        return Err(Error::MixedWeights);
    }
    if t > k {
        return Ok(None);
    }
    // index = rank(support) · 3^t + base-3 digits of the values (1, ω, ω̄ → 0, 1, 2)
    let ranker = SubsetRanker::new(n, t);
    let per_support = 3usize.pow(t as u32);
    let mut counts = vec![0u64; binomial(n, t) as usize * per_support];
    for w in words {
        for_each_subset(&w.support(), t, &mut |s| {
            let digits = bits_of(s)
                .into_iter()
                .fold(0usize, |acc, p| acc * 3 + (w.get(p).bits() as usize - 1));
            counts[ranker.rank(s) * per_support + digits] += 1;
        });
    }
    let mu = counts[0];
    Ok((mu > 0 && counts.iter().all(|&c| c == mu)).then_some(mu))
}

/// Whether `d ≥ (n + 2) / 3`, the condition for every weight class of an even
/// self-dual additive code to hold a 1-design.
pub fn one_design_condition(n: usize, d: usize) -> bool {
    3 * d >= n + 2
}

/// `λ_1 = A_w · w / n` by double counting point-block incidences.
pub fn lambda1_from_enumerator(a_w: u64, w: usize, n: usize) -> Result<u64> {
    let num = a_w as u128 * w as u128;
    if n == 0 || !num.is_multiple_of(n as u128) {
        return Err(Error::NonIntegral(format!("λ_1 = {num}/{n}")));
    }
    Ok((num / n as u128) as u64)
}

/// Design strengths guaranteed for an extremal even additive self-dual code
/// of length `n`: (classical strength with repeated blocks, generalized
/// strength of type 3 if any).
pub fn extremal_strengths(n: usize) -> Result<(usize, Option<usize>)> {
    if n == 0 {
        return Err(Error::UnsupportedLength(n));
    }
    match n % 6 {
        0 => Ok((5, Some(2))),
        2 => Ok((3, Some(1))),
        4 => Ok((1, None)),
        _ => Err(Error::UnsupportedLength(n)),
    }
}

/// One weight class checked against a design guarantee.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightCheck {
    pub weight: usize,
    pub count: u64,
    pub lambda: Option<DesignLambda>,
}

/// Outcome of an Assmus–Mattson style check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AmReport {
    pub t: usize,
    pub n: usize,
    pub d: usize,
    pub dual_d: usize,
    /// Number of dual weights in `1..=n-t`.
    pub s: usize,
    pub condition_holds: bool,
    /// Weight bound `w` (only for linear codes; `n` for additive ones).
    pub weight_bound: usize,
    pub dual_weight_bound: usize,
    pub code_weights: Vec<WeightCheck>,
    pub dual_weights: Vec<WeightCheck>,
    /// Repetition profile of minimum-weight supports (`multiplicity → blocks`).
    pub min_weight_multiplicities: BTreeMap<u64, u64>,
}

impl AmReport {
    pub fn all_verified(&self) -> bool {
        self.code_weights
            .iter()
            .chain(&self.dual_weights)
            .all(|w| w.lambda.is_some())
    }

    pub fn guaranteed_weights(&self) -> Vec<usize> {
        self.code_weights.iter().map(|w| w.weight).collect()
    }
}

/// Largest `w ≤ n` with `w - ⌊(w + q - 2)/(q - 1)⌋ < d`.
fn am_weight_bound(n: usize, q: usize, d: usize) -> usize {
    (0..=n)
        .rev()
        .find(|&w| w - (w + q - 2) / (q - 1) < d)
        .unwrap_or(0)
}

fn words_by_weight(code: &Code) -> Result<BTreeMap<usize, Vec<Codeword>>> {
    let mut by_weight: BTreeMap<usize, Vec<Codeword>> = BTreeMap::new();
    for c in enumerate_codewords(code)? {
        by_weight.entry(c.weight()).or_default().push(c);
    }
    Ok(by_weight)
}

fn check_weights(
    n: usize,
    t: usize,
    words: &BTreeMap<usize, Vec<Codeword>>,
    weights: impl Iterator<Item = usize>,
) -> Result<Vec<WeightCheck>> {
    weights
        .filter_map(|w| words.get(&w).map(|ws| (w, ws)))
        .filter(|(w, _)| *w > 0)
        .map(|(weight, ws)| {
            let blocks = BlockMultiset::from_supports(n, ws)?;
            Ok(WeightCheck {
                weight,
                count: ws.len() as u64,
                lambda: verify_t_design(&blocks, t)?,
            })
        })
        .collect()
}

fn am_report(code: &Code, t: usize, linear_bounds: bool) -> Result<AmReport> {
    let n = code.len();
    let dual = dual_code(code)?;
    let a = weight_distribution(code)?;
    let b = weight_distribution(&dual)?;
    let d = a.min_weight().ok_or(Error::ZeroCode)?;
    let dual_d = b.min_weight().unwrap_or(n + 1);
    if t == 0 || t >= d {
        return Err(Error::StrengthOutOfRange { t, d });
    }
    let q = code.field().order() as usize;
    let (weight_bound, dual_weight_bound) = if linear_bounds {
        (am_weight_bound(n, q, d), am_weight_bound(n, q, dual_d))
    } else {
        (n, n)
    };
    let s = (1..=n - t).filter(|&i| b.get(i) != 0).count();
    let condition_holds = s <= d - t;
    let words = words_by_weight(code)?;
    let min_weight_multiplicities =
        BlockMultiset::from_supports(n, &words[&d])?.multiplicity_profile();
    let (code_weights, dual_weights) = if condition_holds {
        let dual_words = words_by_weight(&dual)?;
        (
            check_weights(n, t, &words, d..=weight_bound)?,
            check_weights(n, t, &dual_words, dual_d..=(n - t).min(dual_weight_bound))?,
        )
    } else {
        (Vec::new(), Vec::new())
    };
    Ok(AmReport {
        t,
        n,
        d,
        dual_d,
        s,
        condition_holds,
        weight_bound,
        dual_weight_bound,
        code_weights,
        dual_weights,
        min_weight_multiplicities,
    })
}

/// Assmus–Mattson check for a linear code, each guaranteed weight class
/// verified with [`verify_t_design`].
pub fn am_linear_report(code: &Code, t: usize) -> Result<AmReport> {
    if code.kind() != CodeKind::Linear {
        return Err(Error::InvalidCode("expected a linear code".into()));
    }
    am_report(code, t, true)
}

/// The additive analogue: weight classes `d..=n` of `C` and `d'..=n-t` of the
/// trace dual hold t-designs with possibly repeated blocks when `s ≤ d - t`.
pub fn am_additive_report(code: &Code, t: usize) -> Result<AmReport> {
    if code.kind() != CodeKind::Additive {
        return Err(Error::InvalidCode("expected an additive code".into()));
    }
    am_report(code, t, false)
}

/// Codewords of a given weight.
pub fn words_of_weight(code: &Code, w: usize) -> Result<Vec<Codeword>> {
    Ok(enumerate_codewords(code)?
        .filter(|c| c.weight() == w)
        .collect())
}

/// λ_1 of every nonzero weight class computed from an enumerator.
pub fn lambda1_table(weights: &WeightDistribution) -> Result<BTreeMap<usize, u64>> {
    let n = weights.len();
    weights
        .nonzero_weights()
        .into_iter()
        .map(|w| Ok((w, lambda1_from_enumerator(weights.get(w), w, n)?)))
        .collect()
}

/// Number of `words` c-covering `e`.
pub fn mu(words: &[Codeword], e: &Codeword) -> u64 {
    words.iter().filter(|w| c_covers(w, e)).count() as u64
}
