//! Access-structure summaries and their text and JSON-lines renderings.
//!
//! Both renderings are pure functions of the report. Maps are ordered, so
//! the same report always yields the same bytes.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::additive::{
    accessibility_additive, count_minimal_additive, minimal_pairs, ordered_pair_sum,
    AdditiveScheme, AnalyticAccess, RecoveryClass,
};
use crate::codes::{weight_distribution, Code, WeightDistribution};
use crate::designs::verify_generalized_design;
use crate::error::{Error, Result};
use crate::linear::{access_structure_linear, size_distribution_linear_verified, LinearScheme};
use crate::shares::SchemeKind;

/// `count / 2^exponent`, kept exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Accessibility {
    count: u128,
    exponent: u32,
}

impl Accessibility {
    pub fn new(count: u128, exponent: u32) -> Self {
        Accessibility { count, exponent }
    }

    pub fn count(&self) -> u128 {
        self.count
    }

    pub fn denominator(&self) -> u128 {
        1u128 << self.exponent
    }

    /// Reduced fraction.
    pub fn ratio(&self) -> Ratio<u128> {
        Ratio::new(self.count, self.denominator())
    }

    pub fn decimal(&self) -> f64 {
        self.count as f64 / self.denominator() as f64
    }
}

impl fmt::Display for Accessibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/{} = {}",
            self.count,
            self.denominator(),
            self.decimal()
        )
    }
}

impl Serialize for Accessibility {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let r = self.ratio();
        let mut st = s.serialize_struct("Accessibility", 4)?;
        st.serialize_field("count", &self.count.to_string())?;
        st.serialize_field("denominator", &self.denominator().to_string())?;
        st.serialize_field("reduced", &format!("{}/{}", r.numer(), r.denom()))?;
        st.serialize_field("decimal", &self.decimal())?;
        st.end()
    }
}

/// `Σ count · y^size` over group sizes.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct SizeDistribution {
    terms: BTreeMap<usize, u64>,
}

impl SizeDistribution {
    pub fn from_sizes(sizes: impl IntoIterator<Item = usize>) -> Self {
        let mut terms = BTreeMap::new();
        for s in sizes {
            *terms.entry(s).or_default() += 1;
        }
        SizeDistribution { terms }
    }

    pub fn from_terms(terms: BTreeMap<usize, u64>) -> Self {
        SizeDistribution {
            terms: terms.into_iter().filter(|&(_, c)| c != 0).collect(),
        }
    }

    pub fn terms(&self) -> &BTreeMap<usize, u64> {
        &self.terms
    }

    pub fn get(&self, size: usize) -> u64 {
        self.terms.get(&size).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }
}

impl fmt::Display for SizeDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(s, c)| format!("{c}y^{s}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `(p-1, q-1) → count` for pairs of recovery groups.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PairTable {
    terms: BTreeMap<(usize, usize), u128>,
}

impl PairTable {
    /// Product table from two `weight → μ` maps.
    pub fn from_mu(mu_i: &BTreeMap<usize, u64>, mu_j: &BTreeMap<usize, u64>) -> Self {
        let mut terms = BTreeMap::new();
        for (&p, &a) in mu_i {
            for (&q, &b) in mu_j {
                if p > 0 && q > 0 && a * b > 0 {
                    terms.insert((p - 1, q - 1), a as u128 * b as u128);
                }
            }
        }
        PairTable { terms }
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), u128> {
        &self.terms
    }

    pub fn get(&self, p: usize, q: usize) -> u128 {
        self.terms.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.terms.values().sum()
    }

    pub fn add(&mut self, other: &PairTable) {
        for (&k, &v) in &other.terms {
            *self.terms.entry(k).or_default() += v;
        }
    }
}

impl fmt::Display for PairTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((p, q), c)| format!("{c} ({p},{q})"))
            .collect();
        f.write_str(&parts.join("  "))
    }
}

impl Serialize for PairTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (&(p, q), &c) in &self.terms {
            seq.serialize_element(&(p, q, c.to_string()))?;
        }
        seq.end()
    }
}

/// One weight class and the design it holds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DesignLine {
    pub weight: usize,
    pub t: usize,
    pub lambda: u64,
    /// `true` when checked on the blocks, `false` when derived from counts.
    pub verified: bool,
}

/// Per-class recovery-vector counts (`weight → μ`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    pub class: String,
    pub size: u64,
    pub mu: BTreeMap<usize, u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalSummary {
    /// Minimal entries: groups (linear) or pairs over one class pair (additive).
    pub count: u128,
    /// Group-size distribution of the minimal entries, one per class.
    pub sizes: Vec<SizeDistribution>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AccessReport {
    pub code: String,
    pub scheme: SchemeKind,
    pub n: usize,
    pub participants: usize,
    pub enumerator: Option<WeightDistribution>,
    pub designs: Vec<DesignLine>,
    pub classes: Vec<ClassSummary>,
    /// Group-size distribution of Γ (linear scheme).
    pub size_distribution: Option<SizeDistribution>,
    /// Pair table for the class pair (H1, H2) (additive scheme).
    pub pairs: Option<PairTable>,
    /// Sum of the pair tables over the six ordered class pairs.
    pub ordered_pair_total: Option<u128>,
    pub gamma_size: u128,
    pub accessibility: Accessibility,
    pub minimal: Option<MinimalSummary>,
    pub flags: Vec<String>,
}

impl Serialize for SchemeKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    JsonLines,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "text" => Ok(Format::Text),
            "json-lines" | "jsonl" => Ok(Format::JsonLines),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

impl AccessReport {
    /// Brute-force report for the additive scheme.
    pub fn additive(scheme: &AdditiveScheme) -> Result<AccessReport> {
        let classes = scheme.classes();
        let mp = minimal_pairs(classes);
        let pairs = crate::additive::pair_generating_function(&classes[0], &classes[1])?;
        let mut designs = Vec::new();
        let dual_wd = weight_distribution(scheme.dual())?;
        for w in dual_wd.nonzero_weights() {
            let words = crate::designs::words_of_weight(scheme.dual(), w)?;
            if let Some(mu1) = verify_generalized_design(&words, 1)? {
                designs.push(DesignLine {
                    weight: w,
                    t: 1,
                    lambda: mu1,
                    verified: true,
                });
            }
        }
        let flags = match count_minimal_additive(scheme.dual()) {
            Ok(c) => c.flags,
            Err(e) => vec![format!("minimal-count formula does not apply: {e}")],
        };
        let gamma = pairs.total();
        let sizes = mp.minimal_sizes(classes).map(SizeDistribution::from_terms);
        Ok(AccessReport {
            code: scheme.code().label(),
            scheme: SchemeKind::Additive,
            n: scheme.code().len(),
            participants: scheme.participants(),
            enumerator: Some(weight_distribution(scheme.code())?),
            designs,
            classes: classes
                .iter()
                .map(|h| ClassSummary {
                    class: h.class.to_string(),
                    size: h.len() as u64,
                    mu: h.mu_table(),
                })
                .collect(),
            size_distribution: None,
            ordered_pair_total: Some(ordered_pair_sum(classes).total()),
            pairs: Some(pairs),
            gamma_size: gamma,
            accessibility: accessibility_additive(gamma as u64, scheme.participants()),
            minimal: Some(MinimalSummary {
                count: mp.count(RecoveryClass::H1, RecoveryClass::H2) as u128,
                sizes: sizes.to_vec(),
            }),
            flags,
        })
    }

    /// Brute-force report for the linear scheme.
    pub fn linear(scheme: &LinearScheme) -> Result<AccessReport> {
        let access = access_structure_linear(scheme);
        let sizes = access.size_distribution();
        let mut flags = Vec::new();
        let mut designs = Vec::new();
        match size_distribution_linear_verified(scheme.dual()) {
            Ok(predicted) if predicted != sizes => flags.push(format!(
                "size distribution from designs {predicted} differs from enumeration {sizes}"
            )),
            Ok(_) => {
                let wd = weight_distribution(scheme.dual())?;
                for w in wd.nonzero_weights() {
                    let lambda = crate::designs::lambda1_from_enumerator(wd.get(w), w, wd.len())?;
                    designs.push(DesignLine {
                        weight: w,
                        t: 1,
                        lambda,
                        verified: true,
                    });
                }
            }
            Err(e) => flags.push(format!("no 1-design size distribution: {e}")),
        }
        Ok(AccessReport {
            code: scheme.code().label(),
            scheme: SchemeKind::Linear,
            n: scheme.code().len(),
            participants: scheme.participants(),
            enumerator: Some(weight_distribution(scheme.code())?),
            designs,
            classes: Vec::new(),
            size_distribution: Some(sizes),
            pairs: None,
            ordered_pair_total: None,
            gamma_size: access.gamma.len() as u128,
            accessibility: access.accessibility(),
            minimal: Some(MinimalSummary {
                count: access.minimal.len() as u128,
                sizes: vec![access.minimal_size_distribution()],
            }),
            flags,
        })
    }

    /// Report computed from the weight enumerator alone.
    pub fn analytic(
        label: &str,
        enumerator: &WeightDistribution,
        a: &AnalyticAccess,
    ) -> AccessReport {
        let mut designs = Vec::new();
        for (&w, &lt) in &a.lambda_t {
            designs.push(DesignLine {
                weight: w,
                t: a.strength,
                lambda: lt,
                verified: false,
            });
        }
        for (&w, &l1) in &a.lambda1 {
            designs.push(DesignLine {
                weight: w,
                t: 1,
                lambda: l1,
                verified: false,
            });
        }
        let classes = RecoveryClass::ALL
            .iter()
            .map(|c| ClassSummary {
                class: c.to_string(),
                size: a.class_size,
                mu: a.mu.clone(),
            })
            .collect();
        AccessReport {
            code: label.to_string(),
            scheme: SchemeKind::Additive,
            n: a.n,
            participants: a.n - 1,
            enumerator: Some(enumerator.clone()),
            designs,
            classes,
            size_distribution: None,
            pairs: Some(a.table.clone()),
            ordered_pair_total: Some(a.ordered_sum_total),
            gamma_size: a.table.total(),
            accessibility: a.accessibility,
            minimal: None,
            flags: Vec::new(),
        }
    }

    /// Report for a code of either kind.
    pub fn for_code(code: &Code) -> Result<AccessReport> {
        match code.kind() {
            crate::codes::CodeKind::Additive => {
                AccessReport::additive(&AdditiveScheme::new(code.clone())?)
            }
            crate::codes::CodeKind::Linear => {
                AccessReport::linear(&LinearScheme::new(code.clone())?)
            }
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::JsonLines => self.render_json_lines(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("code {}", self.code));
        line(format!("scheme {}", self.scheme));
        line(format!("length {}", self.n));
        line(format!("participants {}", self.participants));
        if let Some(e) = &self.enumerator {
            line(format!("enumerator {e}"));
        }
        for d in &self.designs {
            let how = if d.verified { "verified" } else { "derived" };
            line(format!(
                "design weight {} t={} lambda={} {how}",
                d.weight, d.t, d.lambda
            ));
        }
        for c in &self.classes {
            let mu: Vec<String> = c.mu.iter().map(|(w, m)| format!("{m}@{w}")).collect();
            line(format!(
                "class {} size {} mu {}",
                c.class,
                c.size,
                mu.join(" ")
            ));
        }
        if let Some(s) = &self.size_distribution {
            line(format!("sizes {s}"));
        }
        if let Some(p) = &self.pairs {
            line(format!("pairs {p}"));
        }
        if let Some(t) = self.ordered_pair_total {
            line(format!("ordered-pair-total {t}"));
        }
        line(format!("gamma {}", self.gamma_size));
        line(format!("accessibility {}", self.accessibility));
        if let Some(m) = &self.minimal {
            let sizes: Vec<String> = m.sizes.iter().map(ToString::to_string).collect();
            line(format!("minimal {} sizes {}", m.count, sizes.join(" | ")));
        }
        for f in &self.flags {
            line(format!("flag {f}"));
        }
        out
    }

    fn render_json_lines(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let serde_json::Value::Object(map) = value else {
            unreachable!()
        };
        let mut out = String::new();
        // serde_json's default map is ordered by key; emit in declaration order instead
        for key in [
            "code",
            "scheme",
            "n",
            "participants",
            "enumerator",
            "designs",
            "classes",
            "size_distribution",
            "pairs",
            "ordered_pair_total",
            "gamma_size",
            "accessibility",
            "minimal",
            "flags",
        ] {
            let v = &map[key];
            if v.is_null() {
                continue;
            }
            let rec = serde_json::json!({ "field": key, "value": v });
            out.push_str(&rec.to_string());
            out.push('\n');
        }
        out
    }
}

/// `H<k> <weight> <symbols>` per recovery vector, grouped by class.
pub fn render_recovery_vectors(scheme: &AdditiveScheme) -> String {
    let mut out = String::new();
    for h in scheme.classes() {
        for v in &h.vectors {
            out.push_str(&format!(
                "{} {} {}\n",
                h.class,
                v.weight(),
                v.word().symbols()
            ));
        }
    }
    out
}

/// Renders a weight enumerator with its length, e.g. `n=6 1 + 45y^4 + 18y^6`.
pub fn render_enumerator(w: &WeightDistribution) -> String {
    format!("n={} {w}", w.len())
}
