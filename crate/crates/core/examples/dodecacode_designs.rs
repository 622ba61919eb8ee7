//! Designs held by the weight classes of the dodecacode: classical 5-designs
//! with repeated blocks and generalized designs of type 3.

use gf4sss::catalog;
use gf4sss::codes::weight_distribution;
use gf4sss::designs::{
    am_additive_report, verify_generalized_design, verify_t_design, words_of_weight, BlockMultiset,
};

fn main() -> gf4sss::Result<()> {
    let code = catalog::get("qc12")?.code.unwrap();
    let wd = weight_distribution(&code)?;
    println!("enumerator {wd}");
    for w in wd.nonzero_weights() {
        let words = words_of_weight(&code, w)?;
        let blocks = BlockMultiset::from_supports(12, &words)?;
        let l5 = verify_t_design(&blocks, 5)?.unwrap();
        let mu2 = verify_generalized_design(&words, 2)?.unwrap();
        println!(
            "weight {w:>2}: lambda5 {:>3} (reduced {:>3}), repeats {:?}, generalized mu2 {mu2}",
            l5.raw,
            l5.reduced,
            blocks.multiplicity_profile()
        );
    }
    let am = am_additive_report(&code, 5)?;
    println!(
        "s = {}, condition holds: {}, all verified: {}",
        am.s,
        am.condition_holds,
        am.all_verified()
    );
    Ok(())
}
