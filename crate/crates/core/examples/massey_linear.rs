//! The one-step scheme over linear codes: the hexacode over GF(4) and the
//! extended binary Golay code.

use gf4sss::catalog;
use gf4sss::linear::{access_structure_linear, mask_of, recover_linear, LinearScheme};
use gf4sss::F4;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> gf4sss::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (name, secret) in [("hexacode_linear", F4::OMEGA_BAR), ("golay24", F4::ONE)] {
        let scheme = LinearScheme::new(catalog::get(name)?.code.unwrap())?;
        let dealt = scheme.deal(secret, &mut rng)?;
        let everyone = mask_of(&(1..=scheme.participants()).collect::<Vec<_>>());
        let coeffs = scheme.find_recovery(everyone).unwrap();
        println!(
            "{name}: group {:?} recovers {}",
            coeffs.participants(),
            recover_linear(&dealt.shares, &coeffs)?
        );

        let access = access_structure_linear(&scheme);
        println!("  sizes       {}", access.size_distribution());
        println!("  minimal     {}", access.minimal_size_distribution());
        println!("  accessible  {}", access.accessibility());
    }
    Ok(())
}
