//! Command-line front end. [`run`] returns the exit status and the text that
//! belongs on stdout (or stderr for failures), so it can be driven in tests.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::additive::{
    analytic_access_from_enumerator, detect_cheaters, AdditiveScheme, CheaterOutcome, RecoveryClass,
};
use crate::catalog;
use crate::codes::{
    dual_code, is_self_dual, minimum_distance, weight_distribution, Code, CodeKind,
};
use crate::designs::{
    am_additive_report, am_linear_report, extremal_strengths, one_design_condition,
    verify_generalized_design, verify_t_design, words_of_weight, BlockMultiset,
};
use crate::error::{Error, Result};
use crate::field::F4;
use crate::linear::{recover_linear, LinearScheme};
use crate::report::{render_recovery_vectors, AccessReport, Format};
use crate::shares::{SchemeKind, SharesFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "gf4sss",
    about = "Secret sharing from codes over GF(4)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Weight enumerator, minimum distance, duality and design guarantees.
    Analyze { code: String },
    /// Deal a secret and write a shares file.
    Deal {
        code: String,
        #[arg(long)]
        secret: char,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recover the secret from a shares file.
    Recover {
        code: String,
        #[arg(long)]
        shares: PathBuf,
        /// Recovery classes to combine, e.g. `1,3` (additive scheme only).
        #[arg(long)]
        pair: Option<String>,
    },
    /// Access-structure report.
    Access {
        code: String,
        /// Use the weight enumerator and design guarantees instead of enumeration.
        #[arg(long)]
        analytic: bool,
        #[arg(long, default_value = "text")]
        format: String,
        /// Also list every recovery vector.
        #[arg(long)]
        vectors: bool,
    },
    /// Check which weight classes hold t-designs.
    Designs {
        code: String,
        #[arg(long)]
        t: usize,
    },
    /// Nearest-codeword check of a shares file.
    Cheaters {
        code: String,
        #[arg(long)]
        shares: PathBuf,
        /// Known secret; coordinate 0 is then compared too.
        #[arg(long)]
        secret: Option<char>,
    },
    /// Write a catalog code in the code file format.
    Export {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    match execute(cli.command) {
        Ok(out) => (EXIT_OK, out),
        Err(e) if e.is_budget() => (EXIT_BUDGET, format!("error: {e}\n")),
        Err(e) => (EXIT_DOMAIN, format!("error: {e}\n")),
    }
}

/// A catalog name, or else a path to a code file.
fn load_code(source: &str) -> Result<Code> {
    if catalog::NAMES.contains(&source) {
        return catalog::get(source)?.require_code().cloned();
    }
    let path = Path::new(source);
    if path.exists() {
        Code::read_file(path)
    } else {
        Err(Error::UnknownName(source.to_string()))
    }
}

fn parse_secret(c: char) -> Result<F4> {
    F4::from_symbol(c)
}

fn execute(cmd: Command) -> Result<String> {
    match cmd {
        Command::Analyze { code } => analyze(&load_code(&code)?),
        Command::Deal {
            code,
            secret,
            seed,
            out,
        } => {
            let c = load_code(&code)?;
            let text = deal(&c, &code, parse_secret(secret)?, seed)?;
            match out {
                Some(path) => {
                    std::fs::write(&path, &text)?;
                    Ok(format!("wrote {}\n", path.display()))
                }
                None => Ok(text),
            }
        }
        Command::Recover { code, shares, pair } => {
            let c = load_code(&code)?;
            let file = SharesFile::parse(&std::fs::read_to_string(shares)?)?;
            let s = recover(&c, &file, pair.as_deref())?;
            Ok(format!("{}\n", s.symbol()))
        }
        Command::Access {
            code,
            analytic,
            format,
            vectors,
        } => {
            let format: Format = format.parse()?;
            let mut out = if analytic {
                let entry = catalog::get(&code);
                let (label, enumerator) = match entry {
                    Ok(e) => (e.name.to_string(), e.weight_enumerator()?),
                    Err(_) => {
                        let c = load_code(&code)?;
                        (c.label(), weight_distribution(&c)?)
                    }
                };
                let n = enumerator.len();
                let a = analytic_access_from_enumerator(&enumerator, n)?;
                AccessReport::analytic(&label, &enumerator, &a).render(format)
            } else {
                AccessReport::for_code(&load_code(&code)?)?.render(format)
            };
            if vectors {
                let c = load_code(&code)?;
                if c.kind() != CodeKind::Additive {
                    return Err(Error::InvalidCode(
                        "--vectors needs an additive code".into(),
                    ));
                }
                out.push_str(&render_recovery_vectors(&AdditiveScheme::new(c)?));
            }
            Ok(out)
        }
        Command::Designs { code, t } => designs(&load_code(&code)?, t),
        Command::Cheaters {
            code,
            shares,
            secret,
        } => {
            let c = load_code(&code)?;
            let file = SharesFile::parse(&std::fs::read_to_string(shares)?)?;
            let secret = secret.map(parse_secret).transpose()?;
            let outcome = detect_cheaters(&c, &file.shares, secret)?;
            Ok(match outcome {
                CheaterOutcome::Clean => "clean\n".to_string(),
                CheaterOutcome::Corrected { cheaters, secret } => {
                    let ids: Vec<String> = cheaters.iter().map(|i| format!("P{i}")).collect();
                    format!("cheaters {}\nsecret {secret}\n", ids.join(" "))
                }
                CheaterOutcome::DetectedOnly { nearest_distance } => {
                    format!("detected nearest-distance {nearest_distance}\n")
                }
                CheaterOutcome::Undecidable { nearest_distance } => {
                    format!("undecidable nearest-distance {nearest_distance}\n")
                }
            })
        }
        Command::Export { name, out } => {
            let entry = catalog::get(&name)?;
            let text = entry.require_code()?.to_file_string();
            match out {
                Some(path) => {
                    std::fs::write(&path, &text)?;
                    Ok(format!("wrote {}\n", path.display()))
                }
                None => Ok(text),
            }
        }
    }
}

fn analyze(code: &Code) -> Result<String> {
    let mut out = String::new();
    let wd = weight_distribution(code)?;
    let d = minimum_distance(code)?;
    out.push_str(&format!("code {}\n", code.label()));
    out.push_str(&format!("kind {} field {}\n", code.kind(), code.field()));
    out.push_str(&format!(
        "length {} dimension {}\n",
        code.len(),
        code.dimension()
    ));
    out.push_str(&format!("enumerator {wd}\n"));
    out.push_str(&format!("distance {d}\n"));
    out.push_str(&format!("self-dual {}\n", is_self_dual(code)?));
    let dual = dual_code(code)?;
    out.push_str(&format!(
        "dual-enumerator {}\n",
        weight_distribution(&dual)?
    ));
    out.push_str(&format!(
        "one-design-condition {}\n",
        one_design_condition(code.len(), d)
    ));
    if code.kind() == CodeKind::Additive {
        match extremal_strengths(code.len()) {
            Ok((t, g)) => {
                let g = g.map_or("none".to_string(), |g| g.to_string());
                out.push_str(&format!("extremal-strengths t={t} generalized={g}\n"));
            }
            Err(e) => out.push_str(&format!("extremal-strengths {e}\n")),
        }
    }
    // largest strength the Assmus-Mattson condition guarantees
    for t in (1..d).rev() {
        let r = match code.kind() {
            CodeKind::Linear => am_linear_report(code, t)?,
            CodeKind::Additive => am_additive_report(code, t)?,
        };
        if !r.condition_holds {
            continue;
        }
        out.push_str(&format!(
            "assmus-mattson t={t} s={} d={} dual-d={}\n",
            r.s, r.d, r.dual_d
        ));
        for (side, checks) in [("code", &r.code_weights), ("dual", &r.dual_weights)] {
            for w in checks {
                let lambda = w.lambda.map_or("not a design".to_string(), |l| {
                    format!(
                        "lambda={} gcd={} reduced={}",
                        l.raw, l.multiplicity_gcd, l.reduced
                    )
                });
                out.push_str(&format!(
                    "  {side} weight {} blocks {} {lambda}\n",
                    w.weight, w.count
                ));
            }
        }
        break;
    }
    Ok(out)
}

fn deal(code: &Code, source: &str, secret: F4, seed: Option<u64>) -> Result<String> {
    let seed = seed.unwrap_or_else(rand::random);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (scheme, dealt) = match code.kind() {
        CodeKind::Additive => (
            SchemeKind::Additive,
            AdditiveScheme::new(code.clone())?.deal(secret, &mut rng)?,
        ),
        CodeKind::Linear => (
            SchemeKind::Linear,
            LinearScheme::new(code.clone())?.deal(secret, &mut rng)?,
        ),
    };
    let file = SharesFile {
        scheme,
        code: source.to_string(),
        shares: dealt.shares,
    };
    Ok(format!("# seed {seed}\n{}", file.render()))
}

fn parse_pair(s: &str) -> Result<(RecoveryClass, RecoveryClass)> {
    let class = |t: &str| -> Result<RecoveryClass> {
        match t.trim() {
            "1" => Ok(RecoveryClass::H1),
            "2" => Ok(RecoveryClass::H2),
            "3" => Ok(RecoveryClass::H3),
            _ => Err(Error::Parse(format!("class {t:?} is not 1, 2 or 3"))),
        }
    };
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| Error::Parse("pair must look like i,j".into()))?;
    Ok((class(a)?, class(b)?))
}

fn recover(code: &Code, file: &SharesFile, pair: Option<&str>) -> Result<F4> {
    match code.kind() {
        CodeKind::Linear => {
            if pair.is_some() {
                return Err(Error::InvalidCode(
                    "--pair applies to additive codes".into(),
                ));
            }
            let scheme = LinearScheme::new(code.clone())?;
            let coeffs = scheme.find_recovery(file.shares.mask()).ok_or_else(|| {
                Error::HypothesisFailed("present shares contain no access group".into())
            })?;
            recover_linear(&file.shares, &coeffs)
        }
        CodeKind::Additive => {
            let scheme = AdditiveScheme::new(code.clone())?;
            let Some(pair) = pair else {
                return scheme.recover_auto(&file.shares);
            };
            let (a, b) = parse_pair(pair)?;
            if a == b {
                return Err(Error::SameClass(a.number()));
            }
            let avail = file.shares.mask();
            let pick = |c: RecoveryClass| {
                scheme.best_in_class(c, avail).ok_or_else(|| {
                    Error::HypothesisFailed(format!(
                        "no {c} group is covered by the present shares"
                    ))
                })
            };
            crate::additive::recover_additive(pick(a)?, pick(b)?, &file.shares)
        }
    }
}

fn designs(code: &Code, t: usize) -> Result<String> {
    let mut out = String::new();
    let n = code.len();
    let wd = weight_distribution(code)?;
    for w in wd.nonzero_weights() {
        let words = words_of_weight(code, w)?;
        let blocks = BlockMultiset::from_supports(n, &words)?;
        let profile: Vec<String> = blocks
            .multiplicity_profile()
            .iter()
            .map(|(m, c)| format!("{c}x{m}"))
            .collect();
        let classical = if t > w {
            "t exceeds block size".to_string()
        } else {
            match verify_t_design(&blocks, t)? {
                Some(l) => format!(
                    "{t}-design lambda={} gcd={} reduced={}",
                    l.raw, l.multiplicity_gcd, l.reduced
                ),
                None => format!("not a {t}-design"),
            }
        };
        let generalized = match verify_generalized_design(&words, t)? {
            Some(mu) => format!("generalized mu={mu}"),
            None => "not generalized".to_string(),
        };
        out.push_str(&format!(
            "weight {w} words {} blocks {} {classical}; {generalized}\n",
            words.len(),
            profile.join(" ")
        ));
    }
    Ok(out)
}
