//! One-step secret sharing over a linear code.
//!
//! The dealer hides the secret as coordinate 0 of a random codeword `uG`;
//! participant `P_i` receives coordinate `i`. A coalition recovers the secret
//! exactly when the dual code has a word `(1, 0, …, c_i, …)` supported on the
//! dealer plus coalition members, and then `s = Σ c_i t_i`.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use serde::Serialize;

use crate::codes::{
    bits_of, dual_code, enumerate_codewords, minimal_codewords, Code, CodeKind, Codeword, Field,
    Minimality, WeightDistribution,
};
use crate::designs::{lambda1_from_enumerator, verify_t_design, BlockMultiset};
use crate::error::{Error, Result};
use crate::field::F4;
use crate::report::{Accessibility, SizeDistribution};
use crate::shares::{Dealt, ShareVector};

/// Participant mask of a codeword: its support without coordinate 0.
pub fn group_of(c: &Codeword) -> u64 {
    c.support_mask() & !1
}

/// Mask with the given participant indices set.
pub fn mask_of(participants: &[usize]) -> u64 {
    participants.iter().fold(0, |m, &i| m | 1u64 << i)
}

/// The scheme over `code`; the dealer is coordinate 0.
#[derive(Debug, Clone)]
pub struct LinearScheme {
    code: Code,
    dual: Code,
    /// Dual codewords with `c_0 = 1` and at least one participant.
    recovery: Vec<Codeword>,
}

/// A dual codeword normalised to `c_0 = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RecoveryCoeffs {
    word: Codeword,
}

impl RecoveryCoeffs {
    pub fn word(&self) -> &Codeword {
        &self.word
    }

    pub fn group(&self) -> u64 {
        group_of(&self.word)
    }

    pub fn participants(&self) -> Vec<usize> {
        bits_of(self.group())
    }

    /// `participant → coefficient`.
    pub fn coefficients(&self) -> BTreeMap<usize, F4> {
        self.participants()
            .into_iter()
            .map(|i| (i, self.word.get(i)))
            .collect()
    }
}

impl LinearScheme {
    pub fn new(code: Code) -> Result<Self> {
        if code.kind() != CodeKind::Linear {
            return Err(Error::InvalidCode(
                "linear scheme needs a linear code".into(),
            ));
        }
        if let Some(i) = code.zero_columns().first() {
            return Err(Error::InvalidCode(format!("generator column {i} is zero")));
        }
        let dual = dual_code(&code)?;
        let recovery = enumerate_codewords(&dual)?
            .filter(|c| c.get(0) == F4::ONE && group_of(c) != 0)
            .collect();
        Ok(LinearScheme {
            code,
            dual,
            recovery,
        })
    }

    pub fn code(&self) -> &Code {
        &self.code
    }

    pub fn dual(&self) -> &Code {
        &self.dual
    }

    pub fn participants(&self) -> usize {
        self.code.len() - 1
    }

    /// Draws `u` uniformly among the `q^{k-1}` solutions of `u·g_0 = s`.
    pub fn deal<R: Rng + ?Sized>(&self, secret: F4, rng: &mut R) -> Result<Dealt> {
        deal_linear(self, secret, rng)
    }

    /// Recovery vector for `group` (a participant mask), if it can recover.
    pub fn find_recovery(&self, group: u64) -> Option<RecoveryCoeffs> {
        self.recovery
            .iter()
            .filter(|c| group_of(c) & !group == 0)
            .min_by_key(|c| c.weight())
            .map(|&word| RecoveryCoeffs { word })
    }

    /// Dual codewords with `c_0 = 1`, one per access group entry.
    pub fn recovery_words(&self) -> &[Codeword] {
        &self.recovery
    }
}

fn field_elements(field: Field) -> &'static [F4] {
    match field {
        Field::Gf2 => &[F4::ZERO, F4::ONE],
        Field::Gf4 => &F4::ALL,
    }
}

pub fn deal_linear<R: Rng + ?Sized>(
    scheme: &LinearScheme,
    secret: F4,
    rng: &mut R,
) -> Result<Dealt> {
    let code = &scheme.code;
    if code.field() == Field::Gf2 && !secret.is_binary() {
        return Err(Error::UnreachableSecret(secret.symbol()));
    }
    let g0 = code.column(0);
    let pivot = g0.iter().position(|x| !x.is_zero()).expect("g0 is nonzero");
    let elems = field_elements(code.field());
    let mut info: Vec<F4> = (0..g0.len())
        .map(|_| elems[rng.gen_range(0..elems.len())])
        .collect();
    let rest = info
        .iter()
        .zip(&g0)
        .enumerate()
        .filter(|&(j, _)| j != pivot)
        .fold(F4::ZERO, |acc, (_, (&u, &g))| acc + u * g);
    info[pivot] = (secret + rest) * g0[pivot].inv().expect("pivot is nonzero");
    let codeword = code.encode(&info)?;
    debug_assert_eq!(codeword.get(0), secret);
    Ok(Dealt {
        shares: ShareVector::from_codeword(&codeword),
        info,
        codeword,
    })
}

/// Searches `dual` for a word with `c_0 ≠ 0` supported on `{0} ∪ group`,
/// normalised to `c_0 = 1`. Minimum weight wins; ties go to enumeration order.
pub fn find_recovery_linear(dual: &Code, group: u64) -> Result<Option<RecoveryCoeffs>> {
    let mut best: Option<Codeword> = None;
    for c in enumerate_codewords(dual)? {
        let c0 = c.get(0);
        if c0.is_zero() || group_of(&c) == 0 || group_of(&c) & !group != 0 {
            continue;
        }
        let normalised = c.scale(c0.inv().expect("nonzero"));
        if best.is_none_or(|b| normalised.weight() < b.weight()) {
            best = Some(normalised);
        }
    }
    Ok(best.map(|word| RecoveryCoeffs { word }))
}

/// `s = Σ c_i t_i` over the recovery group.
pub fn recover_linear(shares: &ShareVector, coeffs: &RecoveryCoeffs) -> Result<F4> {
    coeffs
        .coefficients()
        .into_iter()
        .try_fold(F4::ZERO, |acc, (i, c)| Ok(acc + c * shares.share(i)?))
}

/// Access structure: one entry per dual codeword with `c_0 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearAccessStructure {
    pub participants: usize,
    pub gamma: Vec<Codeword>,
    /// Entries whose group has no other group of Γ as a proper subset.
    pub minimal: Vec<Codeword>,
}

impl LinearAccessStructure {
    /// `group size → number of entries`.
    pub fn size_distribution(&self) -> SizeDistribution {
        SizeDistribution::from_sizes(self.gamma.iter().map(|c| group_of(c).count_ones() as usize))
    }

    pub fn minimal_size_distribution(&self) -> SizeDistribution {
        SizeDistribution::from_sizes(
            self.minimal
                .iter()
                .map(|c| group_of(c).count_ones() as usize),
        )
    }

    /// Number of distinct participant groups in Γ.
    pub fn distinct_groups(&self) -> usize {
        self.gamma
            .iter()
            .map(group_of)
            .collect::<BTreeSet<_>>()
            .len()
    }

    pub fn accessibility(&self) -> Accessibility {
        accessibility_linear(self.gamma.len() as u64, self.participants)
    }

    /// Smallest group size in Γ.
    pub fn min_group_size(&self) -> Option<usize> {
        self.gamma
            .iter()
            .map(|c| group_of(c).count_ones() as usize)
            .min()
    }
}

fn minimal_entries(gamma: &[Codeword]) -> Vec<Codeword> {
    let groups: BTreeSet<u64> = gamma.iter().map(group_of).collect();
    let minimal_groups: BTreeSet<u64> = groups
        .iter()
        .copied()
        .filter(|&g| !groups.iter().any(|&h| h != g && h & !g == 0))
        .collect();
    gamma
        .iter()
        .filter(|c| minimal_groups.contains(&group_of(c)))
        .copied()
        .collect()
}

pub fn access_structure_linear(scheme: &LinearScheme) -> LinearAccessStructure {
    let gamma = scheme.recovery.clone();
    let minimal = minimal_entries(&gamma);
    LinearAccessStructure {
        participants: scheme.participants(),
        gamma,
        minimal,
    }
}

/// Minimal-access counts for the scheme on `C^⊥`, with `c` the code whose
/// codewords are the recovery vectors: formula values next to brute force.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalGroupCounts {
    pub q: u64,
    pub k: usize,
    pub formula_minimal_groups: u64,
    pub brute_minimal_groups: u64,
    pub dictatorial: Vec<usize>,
    pub brute_dictatorial: Vec<usize>,
    pub formula_membership: u64,
    /// `participant → number of minimal groups containing it`.
    pub brute_membership: BTreeMap<usize, u64>,
}

impl MinimalGroupCounts {
    pub fn agrees(&self) -> bool {
        self.formula_minimal_groups == self.brute_minimal_groups
            && self.dictatorial == self.brute_dictatorial
            && self
                .brute_membership
                .iter()
                .filter(|(i, _)| !self.dictatorial.contains(i))
                .all(|(_, &m)| m == self.formula_membership)
    }
}

pub fn minimal_group_counts(c: &Code) -> Result<MinimalGroupCounts> {
    if c.kind() != CodeKind::Linear {
        return Err(Error::InvalidCode("expected a linear code".into()));
    }
    let nonzero = c.size() as usize - 1;
    let minimal = minimal_codewords(c, Minimality::Support)?;
    if minimal.len() != nonzero {
        return Err(Error::HypothesisFailed(format!(
            "{} of {nonzero} nonzero codewords are minimal",
            minimal.len()
        )));
    }
    let q = c.field().order();
    let k = c.dimension();
    let g0 = c.column(0);
    let dictatorial: Vec<usize> = (1..c.len())
        .filter(|&i| {
            let gi = c.column(i);
            c.field()
                .units()
                .iter()
                .any(|&a| gi.iter().zip(&g0).all(|(&x, &y)| x == a * y))
        })
        .collect();

    let scheme = LinearScheme::new(dual_code(c)?)?;
    let access = access_structure_linear(&scheme);
    let brute_minimal_groups = access.minimal.len() as u64;
    let mut brute_membership = BTreeMap::new();
    for i in 1..c.len() {
        let count = access
            .minimal
            .iter()
            .filter(|m| m.get(i) != F4::ZERO)
            .count() as u64;
        brute_membership.insert(i, count);
    }
    let brute_dictatorial = brute_membership
        .iter()
        .filter(|(_, &m)| m == brute_minimal_groups)
        .map(|(&i, _)| i)
        .collect();
    Ok(MinimalGroupCounts {
        q,
        k,
        formula_minimal_groups: q.pow(k as u32 - 1),
        brute_minimal_groups,
        dictatorial,
        brute_dictatorial,
        formula_membership: if k >= 2 {
            (q - 1) * q.pow(k as u32 - 2)
        } else {
            0
        },
        brute_membership,
    })
}

/// `Σ_w λ_1(D_w) y^{w-1}` from the weight distribution of the recovery-side
/// code, with `λ_1 = A_w · w / n`. For GF(4) the count is divided by 3 so
/// that each projective class of recovery vectors is counted once.
pub fn size_distribution_linear(
    weights: &WeightDistribution,
    field: Field,
) -> Result<SizeDistribution> {
    let n = weights.len();
    let units = field.units().len() as u64;
    let mut terms = BTreeMap::new();
    for w in weights.nonzero_weights() {
        let lambda1 =
            lambda1_from_enumerator(weights.get(w), w, n).map_err(|_| Error::NotOneDesign(w))?;
        if lambda1 % units != 0 {
            return Err(Error::NotOneDesign(w));
        }
        terms.insert(w - 1, lambda1 / units);
    }
    Ok(SizeDistribution::from_terms(terms))
}

/// [`size_distribution_linear`] after checking that every weight class of
/// `recovery_code` really holds a 1-design.
pub fn size_distribution_linear_verified(recovery_code: &Code) -> Result<SizeDistribution> {
    let n = recovery_code.len();
    let mut classes: BTreeMap<usize, Vec<Codeword>> = BTreeMap::new();
    for c in enumerate_codewords(recovery_code)? {
        if !c.is_zero() {
            classes.entry(c.weight()).or_default().push(c);
        }
    }
    let mut counts = vec![0u64; n + 1];
    counts[0] = 1;
    for (&w, words) in &classes {
        let blocks = BlockMultiset::from_supports(n, words)?;
        if verify_t_design(&blocks, 1)?.is_none() {
            return Err(Error::NotOneDesign(w));
        }
        counts[w] = words.len() as u64;
    }
    size_distribution_linear(
        &WeightDistribution::from_counts(counts),
        recovery_code.field(),
    )
}

/// `|Γ| / 2^m`.
pub fn accessibility_linear(gamma_size: u64, participants: usize) -> Accessibility {
    Accessibility::new(gamma_size as u128, participants as u32)
}
