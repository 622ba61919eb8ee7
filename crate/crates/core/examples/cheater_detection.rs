//! Corrupt dealt shares and locate the cheaters by nearest-codeword search.

use gf4sss::additive::{cheater_radii, detect_cheaters, AdditiveScheme};
use gf4sss::catalog;
use gf4sss::F4;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> gf4sss::Result<()> {
    let scheme = AdditiveScheme::new(catalog::get("qc12")?.code.unwrap())?;
    println!("secret unknown: {:?}", cheater_radii(scheme.code(), false)?);
    println!("secret known:   {:?}", cheater_radii(scheme.code(), true)?);

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let dealt = scheme.deal(F4::ONE, &mut rng)?;
    for cheaters in [vec![], vec![4], vec![2, 9], vec![1, 5, 7]] {
        let mut claimed = dealt.shares.clone();
        for &p in &cheaters {
            claimed.insert(p, claimed.get(p).unwrap() + F4::OMEGA);
        }
        println!(
            "{cheaters:?} -> {:?}",
            detect_cheaters(scheme.code(), &claimed, Some(F4::ONE))?
        );
    }
    Ok(())
}
