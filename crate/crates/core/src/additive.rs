//! Two-step secret sharing over an additive code over GF(4).
//!
//! The dealer picks `u ∈ GF(2)^k` with `u·g_0 = s` and hands out
//! coordinates `1..n` of `uG`. A trace-dual codeword `x` with `x_0 ≠ 0`
//! satisfies `x ⋆ uG = 0`, so the coalition on its support learns the single
//! bit `Tr(s·conj(x_0))`. Dual words are split into classes `H1`, `H2`, `H3`
//! by `x_0 ∈ {1, ω, ω̄}`; two bits from different classes pin down `s`:
//!
//! | α₁ = Tr(s) | α₂ = Tr(sω̄) | α₃ = Tr(sω) | s |
//! |-----------|-------------|-------------|---|
//! | 0         | 0           | 0           | 0 |
//! | 0         | 1           | 1           | 1 |
//! | 1         | 0           | 1           | ω |
//! | 1         | 1           | 0           | ω̄ |
//!
//! Recovery classes are multisets of dual codewords, not of supports: the
//! counts μᵢ(p, e1) below count codewords.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::codes::{
    bits_of, c_covers, dual_code, enumerate_codewords, len_mask, minimal_codewords, Code, CodeKind,
    Codeword, Minimality, WeightDistribution,
};
use crate::designs::{
    extremal_strengths, lambda1_from_enumerator, lambda_convert, lambda_from_block_count,
    DesignParams,
};
use crate::error::{Error, Result};
use crate::field::{F2, F4};
use crate::linear::group_of;
use crate::report::{Accessibility, PairTable};
use crate::shares::{Dealt, ShareVector};

/// Class of a recovery vector, fixed by its coordinate 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RecoveryClass {
    H1,
    H2,
    H3,
}

impl RecoveryClass {
    pub const ALL: [RecoveryClass; 3] = [RecoveryClass::H1, RecoveryClass::H2, RecoveryClass::H3];

    /// Coordinate-0 value of the class: 1, ω, ω̄.
    pub fn leading(self) -> F4 {
        F4::NONZERO[self.index()]
    }

    /// 0-based position (H1 → 0).
    pub fn index(self) -> usize {
        self as usize
    }

    /// 1-based number used in labels (H1 → 1).
    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    pub fn of_leading(x0: F4) -> Option<RecoveryClass> {
        match x0 {
            F4::ONE => Some(RecoveryClass::H1),
            F4::OMEGA => Some(RecoveryClass::H2),
            F4::OMEGA_BAR => Some(RecoveryClass::H3),
            _ => None,
        }
    }
}

impl fmt::Display for RecoveryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H{}", self.number())
    }
}

/// A dual codeword with `x_0 ≠ 0` and at least one participant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RecoveryVector {
    word: Codeword,
    class: RecoveryClass,
}

impl RecoveryVector {
    pub fn new(word: Codeword) -> Option<Self> {
        let class = RecoveryClass::of_leading(word.get(0))?;
        (group_of(&word) != 0).then_some(RecoveryVector { word, class })
    }

    pub fn word(&self) -> &Codeword {
        &self.word
    }

    pub fn class(&self) -> RecoveryClass {
        self.class
    }

    pub fn weight(&self) -> usize {
        self.word.weight()
    }

    /// Participant mask (support without the dealer).
    pub fn group(&self) -> u64 {
        group_of(&self.word)
    }

    pub fn participants(&self) -> Vec<usize> {
        bits_of(self.group())
    }

    /// Number of participants, `wt - 1`.
    pub fn group_size(&self) -> usize {
        self.weight() - 1
    }
}

/// All recovery vectors of one class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HClass {
    pub class: RecoveryClass,
    pub vectors: Vec<RecoveryVector>,
}

impl HClass {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// `weight → μᵢ(weight, e1)`.
    pub fn mu_table(&self) -> BTreeMap<usize, u64> {
        let mut t = BTreeMap::new();
        for v in &self.vectors {
            *t.entry(v.weight()).or_default() += 1;
        }
        t
    }
}

/// The three recovery classes.
pub type HClasses = [HClass; 3];

/// Trace bits `(α₁, α₂, α₃)` of the secret; any two determine it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AlphaTriple(pub [Option<F2>; 3]);

impl AlphaTriple {
    pub fn with(mut self, class: RecoveryClass, alpha: F2) -> Self {
        self.0[class.index()] = Some(alpha);
        self
    }

    /// The secret consistent with the known values, when at least two are known.
    pub fn secret(&self) -> Option<F4> {
        if self.0.iter().flatten().count() < 2 {
            return None;
        }
        let mut matches = RECOVERY_TABLE.iter().filter(|(row, _)| {
            row.iter()
                .zip(&self.0)
                .all(|(&b, a)| a.is_none_or(|a| a.as_u8() == b))
        });
        let (_, s) = matches.next()?;
        matches.next().is_none().then_some(*s)
    }
}

/// `(α₁, α₂, α₃) → s`.
pub const RECOVERY_TABLE: [([u8; 3], F4); 4] = [
    ([0, 0, 0], F4::ZERO),
    ([0, 1, 1], F4::ONE),
    ([1, 0, 1], F4::OMEGA),
    ([1, 1, 0], F4::OMEGA_BAR),
];

/// The scheme over an additive code.
#[derive(Debug, Clone)]
pub struct AdditiveScheme {
    code: Code,
    dual: Code,
    classes: HClasses,
}

impl AdditiveScheme {
    pub fn new(code: Code) -> Result<Self> {
        if code.kind() != CodeKind::Additive {
            return Err(Error::InvalidCode(
                "additive scheme needs an additive code".into(),
            ));
        }
        if let Some(i) = code.zero_columns().first() {
            return Err(Error::InvalidCode(format!("generator column {i} is zero")));
        }
        let dual = dual_code(&code)?;
        let classes = extract_h(&dual)?;
        Ok(AdditiveScheme {
            code,
            dual,
            classes,
        })
    }

    pub fn code(&self) -> &Code {
        &self.code
    }

    pub fn dual(&self) -> &Code {
        &self.dual
    }

    pub fn classes(&self) -> &HClasses {
        &self.classes
    }

    pub fn class(&self, c: RecoveryClass) -> &HClass {
        &self.classes[c.index()]
    }

    pub fn participants(&self) -> usize {
        self.code.len() - 1
    }

    pub fn deal<R: Rng + ?Sized>(&self, secret: F4, rng: &mut R) -> Result<Dealt> {
        deal_additive(self, secret, rng)
    }

    /// Secrets reachable from `g_0`: the GF(2)-span of its entries.
    pub fn reachable_secrets(&self) -> Vec<F4> {
        let g0 = self.code.column(0);
        F4::ALL
            .into_iter()
            .filter(|&s| solve_gf2(&g0, s).is_some())
            .collect()
    }

    /// Minimum-weight vector of `class` whose group lies inside `available`;
    /// ties go to enumeration order.
    pub fn best_in_class(&self, class: RecoveryClass, available: u64) -> Option<&RecoveryVector> {
        self.class(class)
            .vectors
            .iter()
            .filter(|v| v.group() & !available == 0)
            .min_by_key(|v| v.weight())
    }

    /// Recovers from whatever shares are present, using the lightest usable
    /// vector of each of the first two classes that have one.
    pub fn recover_auto(&self, shares: &ShareVector) -> Result<F4> {
        let avail = shares.mask();
        let picks: Vec<&RecoveryVector> = RecoveryClass::ALL
            .iter()
            .filter_map(|&c| self.best_in_class(c, avail))
            .take(2)
            .collect();
        match picks.as_slice() {
            [x, y] => recover_additive(x, y, shares),
            _ => Err(Error::HypothesisFailed(
                "present shares cover recovery groups of fewer than two classes".into(),
            )),
        }
    }

    /// Whether the participants in `available` can recover the secret.
    pub fn can_recover(&self, available: u64) -> bool {
        RecoveryClass::ALL
            .iter()
            .filter(|&&c| self.best_in_class(c, available).is_some())
            .count()
            >= 2
    }
}

/// Solution set of `u·g_0 = s` over GF(2): a particular solution and a kernel
/// basis, or `None` when `s` is unreachable.
fn solve_gf2(g0: &[F4], s: F4) -> Option<(u128, Vec<u128>)> {
    // equations for the two bit planes; bit j of a mask is variable u_j
    let lo = g0
        .iter()
        .enumerate()
        .fold(0u128, |m, (j, x)| m | (x.lo() as u128) << j);
    let hi = g0
        .iter()
        .enumerate()
        .fold(0u128, |m, (j, x)| m | (x.hi() as u128) << j);
    let mut rows: Vec<(u128, bool)> = vec![(lo, s.lo()), (hi, s.hi())];
    let mut pivots = Vec::new();
    let mut r = 0;
    for j in 0..g0.len() {
        let bit = 1u128 << j;
        let Some(p) = (r..rows.len()).find(|&i| rows[i].0 & bit != 0) else {
            continue;
        };
        rows.swap(r, p);
        let piv = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.0 & bit != 0 {
                row.0 ^= piv.0;
                row.1 ^= piv.1;
            }
        }
        pivots.push(j);
        r += 1;
    }
    if rows[r..].iter().any(|&(m, b)| m == 0 && b) {
        return None;
    }
    let pivot_mask = pivots.iter().fold(0u128, |m, &j| m | 1u128 << j);
    let particular = rows[..r]
        .iter()
        .zip(&pivots)
        .fold(0u128, |m, (&(_, b), &j)| m | (b as u128) << j);
    let kernel = (0..g0.len())
        .filter(|&j| pivot_mask >> j & 1 == 0)
        .map(|free| {
            let mut v = 1u128 << free;
            for (&(m, _), &j) in rows[..r].iter().zip(&pivots) {
                if m >> free & 1 == 1 {
                    v |= 1u128 << j;
                }
            }
            v
        })
        .collect();
    Some((particular, kernel))
}

/// Deals `secret`, drawing `u` uniformly among the solutions of `u·g_0 = s`.
pub fn deal_additive<R: Rng + ?Sized>(
    scheme: &AdditiveScheme,
    secret: F4,
    rng: &mut R,
) -> Result<Dealt> {
    let g0 = scheme.code.column(0);
    let (particular, kernel) =
        solve_gf2(&g0, secret).ok_or(Error::UnreachableSecret(secret.symbol()))?;
    let u = kernel.iter().fold(
        particular,
        |acc, &v| if rng.gen::<bool>() { acc ^ v } else { acc },
    );
    let info: Vec<F4> = (0..g0.len())
        .map(|j| F4::from_bits((u >> j & 1) as u8))
        .collect();
    let codeword = scheme.code.encode(&info)?;
    debug_assert_eq!(codeword.get(0), secret);
    Ok(Dealt {
        shares: ShareVector::from_codeword(&codeword),
        info,
        codeword,
    })
}

/// Number of information vectors `u ∈ GF(2)^k` with `u·g_0 = s`.
pub fn solution_count(code: &Code, secret: F4) -> u128 {
    solve_gf2(&code.column(0), secret).map_or(0, |(_, k)| 1u128 << k.len())
}

/// Partitions the dual codewords with `x_0 ≠ 0` and weight ≥ 2 into H1, H2,
/// H3 (enumeration order within each class).
pub fn extract_h(dual: &Code) -> Result<HClasses> {
    let mut classes = RecoveryClass::ALL.map(|class| HClass {
        class,
        vectors: Vec::new(),
    });
    for c in enumerate_codewords(dual)? {
        if let Some(v) = RecoveryVector::new(c) {
            classes[v.class.index()].vectors.push(v);
        }
    }
    Ok(classes)
}

/// `α = Σ_{i ∈ group} Tr(t_i · conj(x_i))`, which equals `Tr(s · conj(x_0))`.
pub fn alpha_from_recovery(x: &RecoveryVector, shares: &ShareVector) -> Result<F2> {
    x.participants().into_iter().try_fold(F2::ZERO, |acc, i| {
        let t = shares.share(i)?;
        Ok(acc + (t * x.word.get(i).conj()).trace())
    })
}

/// Recovers the secret from two vectors of different classes.
pub fn recover_additive(
    x: &RecoveryVector,
    y: &RecoveryVector,
    shares: &ShareVector,
) -> Result<F4> {
    if x.class == y.class {
        return Err(Error::SameClass(x.class.number()));
    }
    let alphas = AlphaTriple::default()
        .with(x.class, alpha_from_recovery(x, shares)?)
        .with(y.class, alpha_from_recovery(y, shares)?);
    Ok(alphas
        .secret()
        .expect("two distinct classes determine the secret"))
}

/// `μᵢ(p, e1)`: members of `h` of weight `p`.
pub fn mu_count(h: &HClass, p: usize) -> u64 {
    h.vectors.iter().filter(|v| v.weight() == p).count() as u64
}

/// `(p-1, q-1) → μᵢ(p, e1)·μⱼ(q, e1)` for one ordered class pair.
pub fn pair_generating_function(hi: &HClass, hj: &HClass) -> Result<PairTable> {
    if hi.class == hj.class {
        return Err(Error::SameClass(hi.class.number()));
    }
    Ok(PairTable::from_mu(&hi.mu_table(), &hj.mu_table()))
}

/// Sum of [`pair_generating_function`] over all six ordered class pairs.
pub fn ordered_pair_sum(classes: &HClasses) -> PairTable {
    let mut total = PairTable::default();
    for a in &RecoveryClass::ALL {
        for b in &RecoveryClass::ALL {
            if a != b {
                total.add(&PairTable::from_mu(
                    &classes[a.index()].mu_table(),
                    &classes[b.index()].mu_table(),
                ));
            }
        }
    }
    total
}

/// Per-class indices of the members that c-cover no other member of their
/// own class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalPairs {
    pub minimal: [Vec<usize>; 3],
}

impl MinimalPairs {
    /// Minimal pairs in `Γ_{H_a} × Γ_{H_b}`.
    pub fn count(&self, a: RecoveryClass, b: RecoveryClass) -> u64 {
        if a == b {
            return 0;
        }
        (self.minimal[a.index()].len() * self.minimal[b.index()].len()) as u64
    }

    /// Count for the canonical pair (H1, H2).
    pub fn canonical_count(&self) -> u64 {
        self.count(RecoveryClass::H1, RecoveryClass::H2)
    }

    /// Count over the three unordered class pairs.
    pub fn unordered_count(&self) -> u64 {
        use RecoveryClass::*;
        self.count(H1, H2) + self.count(H1, H3) + self.count(H2, H3)
    }

    pub fn ordered_count(&self) -> u64 {
        2 * self.unordered_count()
    }

    /// `group size → minimal members` per class.
    pub fn minimal_sizes(&self, classes: &HClasses) -> [BTreeMap<usize, u64>; 3] {
        RecoveryClass::ALL.map(|c| {
            let mut m = BTreeMap::new();
            for &i in &self.minimal[c.index()] {
                *m.entry(classes[c.index()].vectors[i].group_size())
                    .or_default() += 1;
            }
            m
        })
    }

    /// The minimal pairs of `(a, b)`.
    pub fn pairs<'a>(
        &'a self,
        classes: &'a HClasses,
        a: RecoveryClass,
        b: RecoveryClass,
    ) -> impl Iterator<Item = (&'a RecoveryVector, &'a RecoveryVector)> + 'a {
        let (xs, ys) = (&self.minimal[a.index()], &self.minimal[b.index()]);
        let same = a == b;
        xs.iter().filter(move |_| !same).flat_map(move |&i| {
            ys.iter().map(move |&j| {
                (
                    &classes[a.index()].vectors[i],
                    &classes[b.index()].vectors[j],
                )
            })
        })
    }
}

fn minimal_members(h: &HClass) -> Vec<usize> {
    use rayon::prelude::*;
    (0..h.vectors.len())
        .into_par_iter()
        .filter(|&i| {
            let x = &h.vectors[i].word;
            h.vectors
                .iter()
                .all(|y| y.word == *x || !c_covers(x, &y.word))
        })
        .collect()
}

/// Minimal access structure: pairs whose components c-cover no other member
/// of their own class.
pub fn minimal_pairs(classes: &HClasses) -> MinimalPairs {
    MinimalPairs {
        minimal: [0, 1, 2].map(|i| minimal_members(&classes[i])),
    }
}

/// `|Γ| / 2^{2m}`.
pub fn accessibility_additive(gamma_pairs: u64, participants: usize) -> Accessibility {
    Accessibility::new(gamma_pairs as u128, 2 * participants as u32)
}

/// Minimal-access counting for the scheme whose recovery vectors are the
/// codewords of `c`. Formula values and brute-force counts are reported side
/// by side and every disagreement is listed in `flags`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalCountReport {
    pub k: usize,
    pub class_sizes: [u64; 3],
    pub formula_class_size: u64,
    /// `3 · 2^{2k-4}`.
    pub formula_total: u64,
    /// Minimal pairs in `Γ_{H1} × Γ_{H2}`, the convention of the worked examples.
    pub single_pair_count: u64,
    pub brute_unordered: u64,
    pub brute_ordered: u64,
    /// `3³ · 2^{2k-8}`.
    pub formula_per_participant: u64,
    /// Minimal pairs (over unordered class pairs) with the participant in either group.
    pub brute_per_participant_either: BTreeMap<usize, u64>,
    /// Minimal pairs (over unordered class pairs) with the participant in both groups.
    pub brute_per_participant_both: BTreeMap<usize, u64>,
    pub dictatorial: Vec<usize>,
    pub brute_dictatorial: Vec<usize>,
    pub flags: Vec<String>,
}

pub fn count_minimal_additive(c: &Code) -> Result<MinimalCountReport> {
    if c.kind() != CodeKind::Additive {
        return Err(Error::InvalidCode("expected an additive code".into()));
    }
    let nonzero = c.size() as usize - 1;
    let minimal = minimal_codewords(c, Minimality::CCover)?;
    if minimal.len() != nonzero {
        return Err(Error::HypothesisFailed(format!(
            "{} of {nonzero} nonzero codewords are c-cover minimal",
            minimal.len()
        )));
    }
    let k = c.dimension();
    let classes = extract_h(c)?;
    let mp = minimal_pairs(&classes);
    let n = c.len();

    let pow2 = |e: i64| -> u64 {
        if e >= 0 {
            1u64 << e
        } else {
            0
        }
    };
    let formula_total = 3 * pow2(2 * k as i64 - 4);
    let formula_per_participant = 27 * pow2(2 * k as i64 - 8);
    let formula_class_size = pow2(k as i64 - 2);

    let mut either = BTreeMap::new();
    let mut both = BTreeMap::new();
    for p in 1..n {
        let bit = 1u64 << p;
        let (mut e, mut b) = (0u64, 0u64);
        for (x, y) in [(0, 1), (0, 2), (1, 2)] {
            let (a, bb) = (RecoveryClass::ALL[x], RecoveryClass::ALL[y]);
            for (u, v) in mp.pairs(&classes, a, bb) {
                let (iu, iv) = (u.group() & bit != 0, v.group() & bit != 0);
                e += (iu || iv) as u64;
                b += (iu && iv) as u64;
            }
        }
        either.insert(p, e);
        both.insert(p, b);
    }

    let g0 = c.column(0);
    let dictatorial: Vec<usize> = (1..n).filter(|&i| c.column(i) == g0).collect();
    let brute_dictatorial: Vec<usize> = (1..n)
        .filter(|&p| {
            classes
                .iter()
                .all(|h| h.vectors.iter().all(|v| v.group() >> p & 1 == 1))
        })
        .collect();

    let class_sizes = [0, 1, 2].map(|i| classes[i].len() as u64);
    let single_pair_count = mp.canonical_count();
    let brute_unordered = mp.unordered_count();
    let mut flags = Vec::new();
    if formula_total != single_pair_count {
        flags.push(format!(
            "total: formula 3*2^(2k-4) = {formula_total} but the single class-pair count is {single_pair_count} \
             (unordered class pairs: {brute_unordered}, ordered: {})",
            mp.ordered_count()
        ));
    }
    if formula_total != brute_unordered {
        flags.push(format!(
            "total: formula {formula_total} differs from unordered brute force {brute_unordered}"
        ));
    }
    for (p, &e) in &either {
        if !dictatorial.contains(p) && e != formula_per_participant {
            flags.push(format!(
                "P{p}: formula 3^3*2^(2k-8) = {formula_per_participant} but P{p} is in {e} minimal pairs \
                 ({} with P{p} in both groups)",
                both[p]
            ));
        }
    }
    if class_sizes.iter().any(|&s| s != formula_class_size) {
        flags.push(format!(
            "class sizes {class_sizes:?} differ from 2^(k-2) = {formula_class_size}"
        ));
    }
    if dictatorial != brute_dictatorial {
        flags.push(format!(
            "dictatorial columns {dictatorial:?} vs brute force {brute_dictatorial:?}"
        ));
    }
    Ok(MinimalCountReport {
        k,
        class_sizes,
        formula_class_size,
        formula_total,
        single_pair_count,
        brute_unordered,
        brute_ordered: mp.ordered_count(),
        formula_per_participant,
        brute_per_participant_either: either,
        brute_per_participant_both: both,
        dictatorial,
        brute_dictatorial,
        flags,
    })
}

/// Access-structure figures derived from a weight enumerator alone, for an
/// extremal even additive self-dual code whose weight classes hold
/// generalized 1-designs of type 3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalyticAccess {
    pub n: usize,
    /// Design strength `t` used for the λ chain.
    pub strength: usize,
    /// `weight → λ_t` from the block count.
    pub lambda_t: BTreeMap<usize, u64>,
    /// `weight → λ_1` converted from `λ_t`.
    pub lambda1: BTreeMap<usize, u64>,
    /// `weight → μᵢ(weight, e1) = A_w·w / (3n)`.
    pub mu: BTreeMap<usize, u64>,
    pub class_size: u64,
    pub table: PairTable,
    pub ordered_sum_total: u128,
    pub accessibility: Accessibility,
}

pub fn analytic_access_from_enumerator(
    weights: &WeightDistribution,
    n: usize,
) -> Result<AnalyticAccess> {
    if weights.len() != n {
        return Err(Error::LengthMismatch(weights.len(), n));
    }
    let strength = extremal_strengths(n)?.0;
    let mut lambda_t = BTreeMap::new();
    let mut lambda1 = BTreeMap::new();
    let mut mu = BTreeMap::new();
    for w in weights.nonzero_weights() {
        let a = weights.get(w);
        let lt = lambda_from_block_count(a, strength, n, w)?;
        let l1 = lambda_convert(
            DesignParams {
                t: strength,
                v: n,
                block_size: w,
                lambda: lt,
            },
            1,
        )?;
        if l1 != lambda1_from_enumerator(a, w, n)? {
            return Err(Error::NonIntegral(format!(
                "λ chain inconsistent at weight {w}"
            )));
        }
        if l1 % 3 != 0 {
            return Err(Error::NonIntegral(format!("μ(w={w}) = {l1}/3")));
        }
        lambda_t.insert(w, lt);
        lambda1.insert(w, l1);
        mu.insert(w, l1 / 3);
    }
    let table = PairTable::from_mu(&mu, &mu);
    let class_size = mu.values().sum();
    let accessibility = accessibility_additive(table.total() as u64, n - 1);
    Ok(AnalyticAccess {
        n,
        strength,
        lambda_t,
        lambda1,
        mu,
        class_size,
        ordered_sum_total: 6 * table.total(),
        table,
        accessibility,
    })
}

/// Outcome of a cheater search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum CheaterOutcome {
    /// The claimed shares form a codeword.
    Clean,
    /// A unique codeword lies within the correction radius.
    Corrected { cheaters: Vec<usize>, secret: char },
    /// Not a codeword, and no codeword within the correction radius.
    DetectedOnly { nearest_distance: usize },
    /// Nearest codeword is farther than the detection radius.
    Undecidable { nearest_distance: usize },
}

/// Distances for cheater handling on the compared coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CheaterRadii {
    /// Minimum distance of the code restricted to the compared coordinates.
    pub distance: usize,
    pub correct: usize,
    pub detect: usize,
}

fn compare_mask(n: usize, secret_known: bool) -> u64 {
    len_mask(n) & if secret_known { u64::MAX } else { !1 }
}

pub fn cheater_radii(code: &Code, secret_known: bool) -> Result<CheaterRadii> {
    let mask = compare_mask(code.len(), secret_known);
    let distance = enumerate_codewords(code)?
        .filter(|c| !c.is_zero())
        .map(|c| (c.support_mask() & mask).count_ones() as usize)
        .min()
        .ok_or(Error::ZeroCode)?;
    Ok(CheaterRadii {
        distance,
        correct: distance.saturating_sub(1) / 2,
        detect: distance.saturating_sub(1),
    })
}

/// Nearest-codeword search over all of `code`. Coordinate 0 is compared only
/// when `secret` is given.
pub fn detect_cheaters(
    code: &Code,
    claimed: &ShareVector,
    secret: Option<F4>,
) -> Result<CheaterOutcome> {
    let n = code.len();
    for p in 1..n {
        claimed.share(p)?;
    }
    let radii = cheater_radii(code, secret.is_some())?;
    let mask = compare_mask(n, secret.is_some());
    let target = claimed.to_codeword(n, secret.unwrap_or(F4::ZERO));
    let mut best = usize::MAX;
    let mut nearest: Vec<Codeword> = Vec::new();
    for c in enumerate_codewords(code)? {
        let d = c.distance_on(&target, mask);
        if d < best {
            best = d;
            nearest.clear();
        }
        if d == best {
            nearest.push(c);
        }
    }
    let distinct: BTreeSet<Codeword> = nearest.iter().copied().collect();
    Ok(if best == 0 {
        CheaterOutcome::Clean
    } else if best <= radii.correct && distinct.len() == 1 {
        let c = nearest[0];
        let cheaters = (1..n).filter(|&i| c.get(i) != target.get(i)).collect();
        CheaterOutcome::Corrected {
            cheaters,
            secret: c.get(0).symbol(),
        }
    } else if best <= radii.detect {
        CheaterOutcome::DetectedOnly {
            nearest_distance: best,
        }
    } else {
        CheaterOutcome::Undecidable {
            nearest_distance: best,
        }
    })
}
