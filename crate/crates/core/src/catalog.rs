//! Built-in codes and weight enumerators.

use crate::codes::{weight_distribution, Code, CodeKind, Codeword, Field, WeightDistribution};
use crate::error::{Error, Result};

/// Names accepted by [`get`].
pub const NAMES: [&str; 6] = [
    "hexacode_linear",
    "hexacode_additive",
    "e12",
    "qc12",
    "golay24",
    "s18",
];

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub code: Option<Code>,
    pub enumerator: Option<WeightDistribution>,
    pub provenance: &'static str,
}

impl CatalogEntry {
    /// The stored code, or [`Error::HypothesisFailed`] for enumerator-only entries.
    pub fn require_code(&self) -> Result<&Code> {
        self.code.as_ref().ok_or_else(|| {
            Error::HypothesisFailed(format!("{} has no generator matrix", self.name))
        })
    }

    /// The stored enumerator, or the computed one when only a code is present.
    pub fn weight_enumerator(&self) -> Result<WeightDistribution> {
        match (&self.enumerator, &self.code) {
            (Some(e), _) => Ok(e.clone()),
            (None, Some(c)) => weight_distribution(c),
            (None, None) => unreachable!("catalog entries carry a code or an enumerator"),
        }
    }
}

const HEXACODE_LINEAR: [&str; 3] = ["1001ww", "010w1w", "001ww1"];

const HEXACODE_ADDITIVE: [&str; 6] = ["1001ww", "w00wWW", "010w1w", "0w0WwW", "001ww1", "00wWWw"];

const E12: [&str; 6] = [
    "111100000000",
    "001111000000",
    "000011110000",
    "000000111100",
    "000000001111",
    "101010101010",
];

const QC12: [&str; 12] = [
    "000000111111",
    "000000wwwwww",
    "111111000000",
    "wwwwww000000",
    "0001wW0001wW",
    "000wW1000wW1",
    "1Ww0001Ww000",
    "w1W000w1W000",
    "0001WwwW1000",
    "000w1W1wW000",
    "1wW000000Ww1",
    "W1w0000001Ww",
];

/// Generator polynomial of the cyclic [23,12,7] binary Golay code,
/// `x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1`, low degree first.
const GOLAY_POLY: [usize; 7] = [0, 2, 4, 5, 6, 10, 11];

fn parse_rows(kind: CodeKind, field: Field, rows: &[&str]) -> Code {
    Code::from_symbol_rows(kind, field, rows).expect("catalog matrices are well formed")
}

/// Extended [24,12,8] Golay code: shifts of the cyclic generator plus an
/// overall parity coordinate at position 23.
pub fn golay24() -> Code {
    let rows = (0..12)
        .map(|shift| {
            let mut elems = vec![crate::field::F4::ZERO; 24];
            for &e in &GOLAY_POLY {
                elems[e + shift] = crate::field::F4::ONE;
            }
            // g(x) has odd weight, so the parity bit is 1
            elems[23] = crate::field::F4::ONE;
            Codeword::from_elems(&elems)
        })
        .collect();
    Code::linear(Field::Gf2, 24, rows)
        .expect("Golay rows are independent")
        .with_name("golay24")
}

pub fn get(name: &str) -> Result<CatalogEntry> {
    let entry = match name {
        "hexacode_linear" => CatalogEntry {
            name: "hexacode_linear",
            code: Some(parse_rows(CodeKind::Linear, Field::Gf4, &HEXACODE_LINEAR).with_name("hexacode_linear")),
            enumerator: Some(WeightDistribution::from_terms(6, &[(0, 1), (4, 45), (6, 18)])),
            provenance: "[6,3,4] hexacode over GF(4), systematic generator",
        },
        "hexacode_additive" => CatalogEntry {
            name: "hexacode_additive",
            code: Some(parse_rows(CodeKind::Additive, Field::Gf4, &HEXACODE_ADDITIVE).with_name("hexacode_additive")),
            enumerator: Some(WeightDistribution::from_terms(6, &[(0, 1), (4, 45), (6, 18)])),
            provenance: "hexacode as a (6, 2^6) additive code: linear rows interleaved with their ω-multiples",
        },
        "e12" => CatalogEntry {
            name: "e12",
            code: Some(parse_rows(CodeKind::Linear, Field::Gf4, &E12).with_name("e12")),
            enumerator: Some(WeightDistribution::from_terms(
                12,
                &[(0, 1), (4, 45), (6, 216), (8, 1755), (10, 1800), (12, 279)],
            )),
            provenance: "self-dual [12,6,4] code E12 over GF(4) with a binary generator",
        },
        "qc12" => CatalogEntry {
            name: "qc12",
            code: Some(parse_rows(CodeKind::Additive, Field::Gf4, &QC12).with_name("qc12")),
            enumerator: Some(WeightDistribution::from_terms(
                12,
                &[(0, 1), (6, 396), (8, 1485), (10, 1980), (12, 234)],
            )),
            provenance: "extremal even additive self-dual (12, 2^12) dodecacode",
        },
        "golay24" => CatalogEntry {
            name: "golay24",
            code: Some(golay24()),
            enumerator: Some(WeightDistribution::from_terms(
                24,
                &[(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)],
            )),
            provenance: "extended binary Golay code from the cyclic [23,12,7] code",
        },
        "s18" => CatalogEntry {
            name: "s18",
            code: None,
            enumerator: Some(WeightDistribution::from_terms(
                18,
                &[(0, 1), (8, 2754), (10, 18360), (12, 77112), (14, 110160), (16, 50949), (18, 2808)],
            )),
            provenance: "extremal even additive self-dual (18, 2^18) code S18; enumerator only",
        },
        other => return Err(Error::UnknownName(other.to_string())),
    };
    Ok(entry)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_name() {
        assert!(matches!(get("nope"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn shapes() {
        let qc = get("qc12").unwrap();
        let code = qc.code.unwrap();
        assert_eq!((code.dimension(), code.len()), (12, 12));
        let s18 = get("s18").unwrap();
        assert!(s18.code.is_none());
        let e = s18.enumerator.unwrap();
        assert_eq!((e.get(8), e.get(18)), (2754, 2808));
        assert_eq!(e.total(), 1 << 18);
    }

    #[test]
    fn every_name_resolves_and_stored_enumerators_match() {
        for name in NAMES {
            let entry = get(name).unwrap();
            if let (Some(code), Some(e)) = (&entry.code, &entry.enumerator) {
                assert_eq!(&weight_distribution(code).unwrap(), e, "{name}");
            }
        }
    }
}
