//! The two-step scheme on the additive hexacode: deal a secret, recover it
//! from two recovery vectors of different classes, print the access report.

use gf4sss::additive::{alpha_from_recovery, recover_additive, AdditiveScheme, RecoveryClass};
use gf4sss::catalog;
use gf4sss::report::{AccessReport, Format};
use gf4sss::F4;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> gf4sss::Result<()> {
    let code = catalog::get("hexacode_additive")?.code.unwrap();
    let scheme = AdditiveScheme::new(code)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    let dealt = scheme.deal(F4::OMEGA, &mut rng)?;
    println!("codeword {}  (coordinate 0 is the secret)", dealt.codeword);

    let x = scheme
        .best_in_class(RecoveryClass::H1, dealt.shares.mask())
        .unwrap();
    let y = scheme
        .best_in_class(RecoveryClass::H3, dealt.shares.mask())
        .unwrap();
    for v in [x, y] {
        println!(
            "{} {} participants {:?} alpha {}",
            v.class(),
            v.word(),
            v.participants(),
            alpha_from_recovery(v, &dealt.shares)?
        );
    }
    println!("recovered {}", recover_additive(x, y, &dealt.shares)?);

    print!("{}", AccessReport::additive(&scheme)?.render(Format::Text));
    Ok(())
}
