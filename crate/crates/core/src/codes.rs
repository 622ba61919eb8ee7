//! Additive and linear codes over GF(2)/GF(4).
//!
//! Vectors are bit-packed into two `u64` planes (see [`crate::field`] for the
//! element encoding), which caps the length at [`MAX_LEN`]. Every code is
//! enumerated through its *additive generators*: the rows themselves for
//! additive and binary codes, and `rows ∪ ω·rows` for GF(4)-linear codes, so
//! a single Gray-code sweep serves both kinds.

use std::collections::HashSet;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{F2, F4};
use crate::linalg;

/// Longest supported code.
pub const MAX_LEN: usize = 64;
/// Largest number of GF(2) generators that may be enumerated.
pub const MAX_GENERATORS: usize = 26;

/// A vector in GF(4)^n.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword {
    lo: u64,
    hi: u64,
    len: u8,
}

impl Codeword {
    pub fn zero(len: usize) -> Self {
        assert!(len <= MAX_LEN, "length {len} exceeds {MAX_LEN}");
        Codeword {
            lo: 0,
            hi: 0,
            len: len as u8,
        }
    }

    pub fn from_elems(elems: &[F4]) -> Self {
        let mut c = Codeword::zero(elems.len());
        for (i, &e) in elems.iter().enumerate() {
            c.set(i, e);
        }
        c
    }

    /// Parses a string of symbols `0`, `1`, `w`, `W`; whitespace is ignored.
    pub fn parse(s: &str) -> Result<Self> {
        let elems = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(F4::from_symbol)
            .collect::<Result<Vec<_>>>()?;
        if elems.len() > MAX_LEN {
            return Err(Error::Parse(format!("vector longer than {MAX_LEN}")));
        }
        Ok(Codeword::from_elems(&elems))
    }

    pub(crate) fn from_planes(lo: u64, hi: u64, len: usize) -> Self {
        let mask = len_mask(len);
        Codeword {
            lo: lo & mask,
            hi: hi & mask,
            len: len as u8,
        }
    }

    pub(crate) fn planes(&self) -> (u64, u64) {
        (self.lo, self.hi)
    }

    /// `lo` plane in bits 0..64 and `hi` plane in bits 64..128.
    pub(crate) fn to_u128(self) -> u128 {
        (self.hi as u128) << 64 | self.lo as u128
    }

    pub(crate) fn from_u128(v: u128, len: usize) -> Self {
        Codeword::from_planes(v as u64, (v >> 64) as u64, len)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> F4 {
        debug_assert!(i < self.len());
        F4::from_bits(((self.lo >> i) & 1) as u8 | (((self.hi >> i) & 1) as u8) << 1)
    }

    pub fn set(&mut self, i: usize, v: F4) {
        assert!(i < self.len(), "coordinate {i} out of range");
        let bit = 1u64 << i;
        self.lo = (self.lo & !bit) | if v.lo() { bit } else { 0 };
        self.hi = (self.hi & !bit) | if v.hi() { bit } else { 0 };
    }

    pub fn elems(&self) -> Vec<F4> {
        (0..self.len()).map(|i| self.get(i)).collect()
    }

    pub fn support_mask(&self) -> u64 {
        self.lo | self.hi
    }

    pub fn support(&self) -> Vec<usize> {
        bits_of(self.support_mask())
    }

    pub fn weight(&self) -> usize {
        self.support_mask().count_ones() as usize
    }

    pub fn is_zero(&self) -> bool {
        self.support_mask() == 0
    }

    /// True when every coordinate lies in GF(2).
    pub fn is_binary(&self) -> bool {
        self.hi == 0
    }

    /// Scalar multiple `a·self`.
    pub fn scale(&self, a: F4) -> Codeword {
        let (lo, hi) = (self.lo, self.hi);
        match a.bits() {
            0 => Codeword {
                lo: 0,
                hi: 0,
                len: self.len,
            },
            1 => *self,
            // ω: 1→ω, ω→ω̄, ω̄→1
            2 => Codeword {
                lo: hi,
                hi: lo ^ hi,
                len: self.len,
            },
            // ω̄: 1→ω̄, ω→1, ω̄→ω
            _ => Codeword {
                lo: lo ^ hi,
                hi: lo,
                len: self.len,
            },
        }
    }

    /// Hamming distance counted only on the coordinates set in `mask`.
    pub fn distance_on(&self, other: &Codeword, mask: u64) -> usize {
        (((self.lo ^ other.lo) | (self.hi ^ other.hi)) & mask).count_ones() as usize
    }

    pub fn distance(&self, other: &Codeword) -> usize {
        self.distance_on(other, u64::MAX)
    }

    /// Symbols `0 1 w W` without separators.
    pub fn symbols(&self) -> String {
        (0..self.len()).map(|i| self.get(i).symbol()).collect()
    }

    fn check_len(&self, other: &Codeword) -> Result<()> {
        if self.len != other.len {
            Err(Error::LengthMismatch(self.len(), other.len()))
        } else {
            Ok(())
        }
    }
}

impl std::ops::Add for Codeword {
    type Output = Codeword;
    fn add(self, rhs: Codeword) -> Codeword {
        debug_assert_eq!(self.len, rhs.len);
        Codeword {
            lo: self.lo ^ rhs.lo,
            hi: self.hi ^ rhs.hi,
            len: self.len,
        }
    }
}

impl std::ops::AddAssign for Codeword {
    fn add_assign(&mut self, rhs: Codeword) {
        debug_assert_eq!(self.len, rhs.len);
        self.lo ^= rhs.lo;
        self.hi ^= rhs.hi;
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Codeword({})", self.symbols())
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbols())
    }
}

impl FromStr for Codeword {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Codeword::parse(s)
    }
}

pub(crate) fn len_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

pub(crate) fn bits_of(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

/// `x ⋆ y = Σ Tr(x_i · conj(y_i))`.
pub fn trace_inner_product(x: &Codeword, y: &Codeword) -> Result<F2> {
    x.check_len(y)?;
    Ok(trace_pair(x, y))
}

// Tr(a·conj(b)) = a0·b1 + a1·b0 in the {1, ω} bit basis.
#[inline]
pub(crate) fn trace_pair(x: &Codeword, y: &Codeword) -> F2 {
    F2::new(((x.lo & y.hi) ^ (x.hi & y.lo)).count_ones() % 2 == 1)
}

/// `Σ x_i y_i` over GF(4) (over GF(2) for binary vectors).
pub fn euclidean_inner_product(x: &Codeword, y: &Codeword) -> Result<F4> {
    x.check_len(y)?;
    Ok(euclidean_pair(x, y))
}

pub(crate) fn euclidean_pair(x: &Codeword, y: &Codeword) -> F4 {
    bits_of(x.support_mask() & y.support_mask())
        .into_iter()
        .fold(F4::ZERO, |acc, i| acc + x.get(i) * y.get(i))
}

/// `a ≤ b`: every nonzero coordinate of `a` equals the same coordinate of `b`.
pub fn c_cover(a: &Codeword, b: &Codeword) -> Result<bool> {
    a.check_len(b)?;
    Ok(c_covers(b, a))
}

/// Whether `big` c-covers `small`.
#[inline]
pub(crate) fn c_covers(big: &Codeword, small: &Codeword) -> bool {
    let m = small.support_mask();
    (small.lo ^ big.lo) & m == 0 && (small.hi ^ big.hi) & m == 0
}

/// `supp(a) ⊆ supp(b)`.
pub fn support_cover(a: &Codeword, b: &Codeword) -> Result<bool> {
    a.check_len(b)?;
    Ok(a.support_mask() & !b.support_mask() == 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CodeKind {
    Additive,
    Linear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Gf2,
    Gf4,
}

impl Field {
    pub fn order(self) -> u64 {
        match self {
            Field::Gf2 => 2,
            Field::Gf4 => 4,
        }
    }

    /// Nonzero scalars of the field.
    pub fn units(self) -> &'static [F4] {
        match self {
            Field::Gf2 => &[F4::ONE],
            Field::Gf4 => &F4::NONZERO,
        }
    }
}

impl fmt::Display for CodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodeKind::Additive => "additive",
            CodeKind::Linear => "linear",
        })
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::Gf2 => "gf2",
            Field::Gf4 => "gf4",
        })
    }
}

/// A code given by a generator matrix.
///
/// Additive codes are the GF(2)-span of their rows; linear codes the span
/// over their field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Code {
    kind: CodeKind,
    field: Field,
    n: usize,
    rows: Vec<Codeword>,
    name: Option<String>,
}

impl Code {
    /// Builds a code, checking lengths, alphabet and row independence.
    pub fn new(kind: CodeKind, field: Field, n: usize, rows: Vec<Codeword>) -> Result<Self> {
        if n == 0 || n > MAX_LEN {
            return Err(Error::InvalidCode(format!(
                "length {n} outside 1..={MAX_LEN}"
            )));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch(r.len(), n));
        }
        if field == Field::Gf2 && rows.iter().any(|r| !r.is_binary()) {
            return Err(Error::InvalidCode(
                "gf2 code with non-binary entries".into(),
            ));
        }
        if kind == CodeKind::Additive && field == Field::Gf2 {
            return Err(Error::InvalidCode("additive codes live over gf4".into()));
        }
        let code = Code {
            kind,
            field,
            n,
            rows,
            name: None,
        };
        let rank = match kind {
            CodeKind::Additive => {
                let v: Vec<u128> = code.rows.iter().map(|r| r.to_u128()).collect();
                linalg::gf2_rank(&v)
            }
            CodeKind::Linear => linalg::f4_rank(&code.matrix()),
        };
        if rank != code.rows.len() {
            return Err(Error::InvalidCode(format!(
                "rows are dependent (rank {rank} of {})",
                code.rows.len()
            )));
        }
        Ok(code)
    }

    pub fn additive(n: usize, rows: Vec<Codeword>) -> Result<Self> {
        Code::new(CodeKind::Additive, Field::Gf4, n, rows)
    }

    pub fn linear(field: Field, n: usize, rows: Vec<Codeword>) -> Result<Self> {
        Code::new(CodeKind::Linear, field, n, rows)
    }

    /// Parses rows given as symbol strings.
    pub fn from_symbol_rows(kind: CodeKind, field: Field, rows: &[&str]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| Codeword::parse(r))
            .collect::<Result<Vec<_>>>()?;
        let n = rows.first().map_or(0, Codeword::len);
        Code::new(kind, field, n, rows)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Number of generator rows.
    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Codeword] {
        &self.rows
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn label(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("({}, {}) {} code", self.n, self.dimension(), self.kind))
    }

    fn matrix(&self) -> Vec<Vec<F4>> {
        self.rows.iter().map(Codeword::elems).collect()
    }

    /// Column `g_i` of the generator matrix.
    pub fn column(&self, i: usize) -> Vec<F4> {
        self.rows.iter().map(|r| r.get(i)).collect()
    }

    /// Indices of all-zero columns.
    pub fn zero_columns(&self) -> Vec<usize> {
        let used = self.rows.iter().fold(0u64, |acc, r| acc | r.support_mask());
        bits_of(!used & len_mask(self.n))
    }

    /// GF(2) generators of the codeword set.
    pub fn additive_generators(&self) -> Vec<Codeword> {
        match (self.kind, self.field) {
            (CodeKind::Linear, Field::Gf4) => self
                .rows
                .iter()
                .flat_map(|r| [*r, r.scale(F4::OMEGA)])
                .collect(),
            _ => self.rows.clone(),
        }
    }

    /// Number of codewords, `2^K` for `K` additive generators.
    pub fn size(&self) -> u128 {
        1u128 << self.additive_generators().len()
    }

    /// Combination of the rows: `Σ u_j · row_j`. `u` holds GF(2) values for
    /// additive codes and field values for linear ones.
    pub fn encode(&self, u: &[F4]) -> Result<Codeword> {
        if u.len() != self.rows.len() {
            return Err(Error::LengthMismatch(u.len(), self.rows.len()));
        }
        if self.kind == CodeKind::Additive || self.field == Field::Gf2 {
            if let Some(x) = u.iter().find(|x| !x.is_binary()) {
                return Err(Error::InvalidCode(format!("coefficient {x} outside GF(2)")));
            }
        }
        Ok(u.iter()
            .zip(&self.rows)
            .fold(Codeword::zero(self.n), |acc, (&a, r)| acc + r.scale(a)))
    }

    /// Whether `v` is a codeword.
    pub fn contains(&self, v: &Codeword) -> bool {
        if v.len() != self.n {
            return false;
        }
        let mut gens: Vec<u128> = self
            .additive_generators()
            .iter()
            .map(|g| g.to_u128())
            .collect();
        let r = linalg::gf2_rank(&gens);
        gens.push(v.to_u128());
        linalg::gf2_rank(&gens) == r
    }

    pub fn codewords(&self) -> Result<Codewords> {
        enumerate_codewords(self)
    }

    /// All codewords in enumeration order.
    pub fn codeword_vec(&self) -> Result<Vec<Codeword>> {
        Ok(self.codewords()?.collect())
    }

    /// Text form used by code files.
    pub fn to_file_string(&self) -> String {
        let mut s = String::new();
        if let Some(name) = &self.name {
            s.push_str(&format!("# {name}\n"));
        }
        s.push_str(&format!(
            "kind: {}\nfield: {}\nn: {}\n",
            self.kind, self.field, self.n
        ));
        for r in &self.rows {
            s.push_str(&r.symbols());
            s.push('\n');
        }
        s
    }

    /// Parses the code file format (`kind:`, `field:`, `n:` headers, then rows).
    pub fn parse_file(text: &str) -> Result<Self> {
        let mut kind = None;
        let mut field = None;
        let mut n = None;
        let mut rows = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
            if let Some((key, value)) = line.split_once(':') {
                let value = value.trim();
                match key.trim() {
                    "kind" => {
                        kind = Some(match value {
                            "additive" => CodeKind::Additive,
                            "linear" => CodeKind::Linear,
                            _ => return Err(bad("kind must be additive or linear")),
                        })
                    }
                    "field" => {
                        field = Some(match value {
                            "gf2" => Field::Gf2,
                            "gf4" => Field::Gf4,
                            _ => return Err(bad("field must be gf2 or gf4")),
                        })
                    }
                    "n" => n = Some(value.parse::<usize>().map_err(|_| bad("bad length"))?),
                    _ => return Err(bad("unknown header")),
                }
                continue;
            }
            let row = Codeword::parse(line).map_err(|e| bad(&e.to_string()))?;
            if Some(row.len()) != n {
                return Err(bad("row length differs from n"));
            }
            rows.push(row);
        }
        let kind = kind.ok_or_else(|| Error::Parse("missing kind header".into()))?;
        let field = field.ok_or_else(|| Error::Parse("missing field header".into()))?;
        let n = n.ok_or_else(|| Error::Parse("missing n header".into()))?;
        Code::new(kind, field, n, rows)
    }

    pub fn read_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let code = Code::parse_file(&text)?;
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned());
        Ok(match name {
            Some(name) => code.with_name(name),
            None => code,
        })
    }

    pub fn write_file(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_file_string())?;
        Ok(())
    }
}

/// Gray-code sweep over all GF(2) combinations of the additive generators.
///
/// Step `i` flips generator `trailing_zeros(i)`, so each codeword costs one
/// XOR.
#[derive(Debug, Clone)]
pub struct Codewords {
    gens: Vec<Codeword>,
    current: Codeword,
    next: u64,
    end: u64,
}

impl Codewords {
    fn new(gens: Vec<Codeword>, n: usize, start: u64, end: u64) -> Self {
        let gray = start ^ (start >> 1);
        let current = bits_of(gray)
            .into_iter()
            .fold(Codeword::zero(n), |acc, j| acc + gens[j]);
        Codewords {
            gens,
            current,
            next: start,
            end,
        }
    }
}

impl Iterator for Codewords {
    type Item = Codeword;

    fn next(&mut self) -> Option<Codeword> {
        if self.next >= self.end {
            return None;
        }
        let out = self.current;
        self.next += 1;
        if self.next < self.end {
            self.current += self.gens[self.next.trailing_zeros() as usize];
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = (self.end - self.next) as usize;
        (r, Some(r))
    }
}

impl ExactSizeIterator for Codewords {}

fn checked_generators(code: &Code) -> Result<Vec<Codeword>> {
    let gens = code.additive_generators();
    if gens.len() > MAX_GENERATORS {
        return Err(Error::BudgetExceeded {
            generators: gens.len(),
            limit: MAX_GENERATORS,
        });
    }
    Ok(gens)
}

/// Every codeword exactly once, in Gray-code order of the combination index.
pub fn enumerate_codewords(code: &Code) -> Result<Codewords> {
    let gens = checked_generators(code)?;
    let end = 1u64 << gens.len();
    Ok(Codewords::new(gens, code.n, 0, end))
}

/// The codewords with combination index in `start..end`; concatenating
/// consecutive ranges reproduces [`enumerate_codewords`].
pub fn enumerate_range(code: &Code, start: u64, end: u64) -> Result<Codewords> {
    let gens = checked_generators(code)?;
    let total = 1u64 << gens.len();
    let end = end.min(total);
    Ok(Codewords::new(gens, code.n, start.min(end), end))
}

/// Weight distribution `A_0, …, A_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    /// From `(weight, count)` terms over length `n`; missing weights are 0.
    pub fn from_terms(n: usize, terms: &[(usize, u64)]) -> Self {
        let mut counts = vec![0; n + 1];
        for &(w, a) in terms {
            counts[w] += a;
        }
        WeightDistribution { counts }
    }

    pub fn from_counts(counts: Vec<u64>) -> Self {
        WeightDistribution { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.counts.len() <= 1
    }

    pub fn get(&self, w: usize) -> u64 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Nonzero weights `w > 0` with `A_w ≠ 0`.
    pub fn nonzero_weights(&self) -> Vec<usize> {
        (1..self.counts.len())
            .filter(|&w| self.counts[w] != 0)
            .collect()
    }

    /// Smallest positive weight present.
    pub fn min_weight(&self) -> Option<usize> {
        self.nonzero_weights().first().copied()
    }

    pub fn terms(&self) -> Vec<(usize, u64)> {
        (0..self.counts.len())
            .filter(|&w| self.counts[w] != 0)
            .map(|w| (w, self.counts[w]))
            .collect()
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms()
            .into_iter()
            .map(|(w, a)| match w {
                0 => a.to_string(),
                1 => format!("{a}y"),
                _ => format!("{a}y^{w}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

pub fn weight_distribution(code: &Code) -> Result<WeightDistribution> {
    let mut counts = vec![0u64; code.len() + 1];
    for c in enumerate_codewords(code)? {
        counts[c.weight()] += 1;
    }
    Ok(WeightDistribution { counts })
}

/// Same result as [`weight_distribution`], with the combination range split
/// into `chunks` pieces swept on the rayon pool.
pub fn weight_distribution_parallel(code: &Code, chunks: u64) -> Result<WeightDistribution> {
    let total = code.size() as u64;
    let gens = checked_generators(code)?.len();
    debug_assert_eq!(total, 1 << gens);
    let chunks = chunks.clamp(1, total);
    let step = total.div_ceil(chunks);
    let n = code.len();
    let partials = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut counts = vec![0u64; n + 1];
            for w in enumerate_range(code, c * step, (c + 1) * step)? {
                counts[w.weight()] += 1;
            }
            Ok(counts)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut counts = vec![0u64; n + 1];
    for p in partials {
        for (a, b) in counts.iter_mut().zip(p) {
            *a += b;
        }
    }
    Ok(WeightDistribution { counts })
}

/// Minimum weight of a nonzero codeword, which equals the minimum distance.
pub fn minimum_distance(code: &Code) -> Result<usize> {
    enumerate_codewords(code)?
        .filter(|c| !c.is_zero())
        .map(|c| c.weight())
        .min()
        .ok_or(Error::ZeroCode)
}

/// Dual code: the trace dual `(n, 2^{2n-k})` for additive codes and the
/// Euclidean dual `[n, n-k]` for linear codes.
pub fn dual_code(code: &Code) -> Result<Code> {
    let n = code.len();
    let rows = match code.kind() {
        CodeKind::Additive => {
            // x ⋆ r = Σ x.lo·r.hi + x.hi·r.lo: the functional of r is r with
            // its two planes swapped.
            let functionals: Vec<u128> = code
                .rows()
                .iter()
                .map(|r| {
                    let (lo, hi) = r.planes();
                    (lo as u128) << 64 | hi as u128
                })
                .collect();
            let cols = (len_mask(n) as u128) << 64 | len_mask(n) as u128;
            linalg::gf2_nullspace(&functionals, cols)
                .into_iter()
                .map(|v| Codeword::from_u128(v, n))
                .collect()
        }
        CodeKind::Linear => linalg::f4_nullspace(&code.matrix(), n)
            .into_iter()
            .map(|v| Codeword::from_elems(&v))
            .collect(),
    };
    let dual = Code::new(code.kind(), code.field(), n, rows)?;
    Ok(match code.name() {
        Some(name) => dual.with_name(format!("{name}-dual")),
        None => dual,
    })
}

/// Whether two codes have the same codeword set.
pub fn same_codewords(a: &Code, b: &Code) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let ga: Vec<u128> = a
        .additive_generators()
        .iter()
        .map(|g| g.to_u128())
        .collect();
    let gb: Vec<u128> = b
        .additive_generators()
        .iter()
        .map(|g| g.to_u128())
        .collect();
    let ra = linalg::gf2_rank(&ga);
    let rb = linalg::gf2_rank(&gb);
    let joint: Vec<u128> = ga.into_iter().chain(gb).collect();
    ra == rb && linalg::gf2_rank(&joint) == ra
}

pub fn is_self_dual(code: &Code) -> Result<bool> {
    Ok(same_codewords(code, &dual_code(code)?))
}

/// Minimality notion for [`minimal_codewords`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Minimality {
    /// `c` covers (by support) only its own scalar multiples.
    Support,
    /// `c` c-covers no other nonzero codeword.
    CCover,
}

/// Nonzero codewords that are minimal under `notion`, in enumeration order.
pub fn minimal_codewords(code: &Code, notion: Minimality) -> Result<Vec<Codeword>> {
    let words: Vec<Codeword> = enumerate_codewords(code)?
        .filter(|c| !c.is_zero())
        .collect();
    let present: HashSet<Codeword> = words.iter().copied().collect();
    let units = code.field().units();
    let minimal = |c: &Codeword| -> bool {
        let mask = c.support_mask();
        match notion {
            Minimality::Support => {
                let multiples: Vec<Codeword> = units
                    .iter()
                    .map(|&a| c.scale(a))
                    .filter(|m| present.contains(m))
                    .collect();
                words
                    .iter()
                    .filter(|o| o.support_mask() & !mask == 0)
                    .all(|o| multiples.contains(o))
            }
            Minimality::CCover => words.iter().all(|o| o == c || !c_covers(c, o)),
        }
    };
    Ok(words.par_iter().filter(|c| minimal(c)).copied().collect())
}
