//! Code and shares files: export a catalog code, read it back, deal into a
//! shares file and recover from the parsed file.

use gf4sss::additive::AdditiveScheme;
use gf4sss::shares::{SchemeKind, SharesFile};
use gf4sss::{catalog, Code, F4};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> gf4sss::Result<()> {
    let dir = std::env::temp_dir().join("gf4sss-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("qc12.code");
    catalog::get("qc12")?.code.unwrap().write_file(&path)?;
    print!("{}", std::fs::read_to_string(&path)?);

    let code = Code::read_file(&path)?;
    let scheme = AdditiveScheme::new(code)?;
    let dealt = scheme.deal(F4::OMEGA_BAR, &mut ChaCha8Rng::seed_from_u64(9))?;
    let file = SharesFile {
        scheme: SchemeKind::Additive,
        code: path.display().to_string(),
        shares: dealt.shares,
    };
    let text = file.render();
    print!("{text}");

    let parsed = SharesFile::parse(&text)?;
    println!("recovered {}", scheme.recover_auto(&parsed.shares)?);
    Ok(())
}
