//! Participant shares and the shares file format.
//!
//! ```text
//! scheme: additive
//! code: hexacode_additive
//! P1 w
//! P2 0
//! ```
//!
//! The dealer's coordinate (the secret) is never written.

use std::collections::BTreeMap;
use std::fmt;

use crate::codes::Codeword;
use crate::error::{Error, Result};
use crate::field::F4;

/// Which scheme produced a shares file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemeKind {
    Linear,
    Additive,
}

impl fmt::Display for SchemeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SchemeKind::Linear => "linear",
            SchemeKind::Additive => "additive",
        })
    }
}

/// Shares held by participants `P1..P_{n-1}`; participant `i` holds
/// coordinate `i` of the dealt codeword.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ShareVector {
    entries: BTreeMap<usize, F4>,
}

impl ShareVector {
    pub fn new() -> Self {
        ShareVector::default()
    }

    /// Coordinates `1..n` of a dealt codeword.
    pub fn from_codeword(t: &Codeword) -> Self {
        ShareVector {
            entries: (1..t.len()).map(|i| (i, t.get(i))).collect(),
        }
    }

    pub fn insert(&mut self, participant: usize, share: F4) {
        self.entries.insert(participant, share);
    }

    pub fn remove(&mut self, participant: usize) -> Option<F4> {
        self.entries.remove(&participant)
    }

    pub fn get(&self, participant: usize) -> Option<F4> {
        self.entries.get(&participant).copied()
    }

    pub fn share(&self, participant: usize) -> Result<F4> {
        self.get(participant)
            .ok_or(Error::MissingShare(participant))
    }

    pub fn participants(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }

    /// Bit mask of the participants present.
    pub fn mask(&self) -> u64 {
        self.entries.keys().fold(0, |m, &i| m | 1u64 << i)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Keeps only the participants in `mask`.
    pub fn restricted(&self, mask: u64) -> ShareVector {
        ShareVector {
            entries: self
                .entries
                .iter()
                .filter(|(&i, _)| mask >> i & 1 == 1)
                .map(|(&i, &v)| (i, v))
                .collect(),
        }
    }

    /// Length-`n` vector with `secret` at coordinate 0 and zeros where shares
    /// are missing.
    pub fn to_codeword(&self, n: usize, secret: F4) -> Codeword {
        let mut c = Codeword::zero(n);
        c.set(0, secret);
        for (&i, &v) in &self.entries {
            if i < n {
                c.set(i, v);
            }
        }
        c
    }
}

/// Result of dealing a secret.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dealt {
    pub shares: ShareVector,
    /// Information vector `u` with `u·g_0 = s`.
    pub info: Vec<F4>,
    /// The full codeword `uG`; coordinate 0 is the secret.
    pub codeword: Codeword,
}

/// Parsed shares file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharesFile {
    pub scheme: SchemeKind,
    pub code: String,
    pub shares: ShareVector,
}

impl SharesFile {
    pub fn render(&self) -> String {
        let mut s = format!("scheme: {}\ncode: {}\n", self.scheme, self.code);
        for (i, v) in &self.shares.entries {
            s.push_str(&format!("P{i} {}\n", v.symbol()));
        }
        s
    }

    pub fn parse(text: &str) -> Result<SharesFile> {
        let mut scheme = None;
        let mut code = None;
        let mut shares = ShareVector::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
            if let Some(v) = line.strip_prefix("scheme:") {
                scheme = Some(match v.trim() {
                    "linear" => SchemeKind::Linear,
                    "additive" => SchemeKind::Additive,
                    _ => return Err(bad("scheme must be linear or additive")),
                });
            } else if let Some(v) = line.strip_prefix("code:") {
                code = Some(v.trim().to_string());
            } else if let Some(rest) = line.strip_prefix('P') {
                let mut it = rest.split_whitespace();
                let idx: usize = it
                    .next()
                    .and_then(|s| s.parse().ok())
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| bad("bad participant index"))?;
                let sym = it.next().ok_or_else(|| bad("missing share symbol"))?;
                let mut chars = sym.chars();
                let value = match (chars.next(), chars.next()) {
                    (Some(c), None) => F4::from_symbol(c)?,
                    _ => return Err(bad("share must be a single symbol")),
                };
                if shares.get(idx).is_some() {
                    return Err(bad("duplicate participant"));
                }
                shares.insert(idx, value);
            } else {
                return Err(bad("unrecognised line"));
            }
        }
        Ok(SharesFile {
            scheme: scheme.ok_or_else(|| Error::Parse("missing scheme header".into()))?,
            code: code.ok_or_else(|| Error::Parse("missing code header".into()))?,
            shares,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_and_parse() {
        let t = Codeword::parse("w1Ww0").unwrap();
        let file = SharesFile {
            scheme: SchemeKind::Additive,
            code: "hexacode_additive".into(),
            shares: ShareVector::from_codeword(&t),
        };
        let text = file.render();
        assert_eq!(
            text,
            "scheme: additive\ncode: hexacode_additive\nP1 1\nP2 W\nP3 w\nP4 0\n"
        );
        assert_eq!(SharesFile::parse(&text).unwrap(), file);
    }

    #[test]
    fn parse_errors() {
        assert!(SharesFile::parse("code: x\nP1 1\n").is_err());
        assert!(SharesFile::parse("scheme: linear\ncode: x\nP0 1\n").is_err());
        assert!(SharesFile::parse("scheme: linear\ncode: x\nP1 1\nP1 w\n").is_err());
        assert!(SharesFile::parse("scheme: linear\ncode: x\nP1 ww\n").is_err());
        assert!(SharesFile::parse("scheme: other\ncode: x\n").is_err());
    }

    #[test]
    fn missing_share_error() {
        let s = ShareVector::new();
        assert!(matches!(s.share(3), Err(Error::MissingShare(3))));
    }
}
