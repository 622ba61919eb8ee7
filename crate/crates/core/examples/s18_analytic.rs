//! Access structure of a length-18 code known only by its weight enumerator.

use gf4sss::additive::analytic_access_from_enumerator;
use gf4sss::catalog;
use gf4sss::report::{AccessReport, Format};

fn main() -> gf4sss::Result<()> {
    let entry = catalog::get("s18")?;
    let enumerator = entry.weight_enumerator()?;
    let analytic = analytic_access_from_enumerator(&enumerator, 18)?;
    for (w, mu) in &analytic.mu {
        println!(
            "weight {w:>2}: lambda5 {:>5}  lambda1 {:>5}  mu {mu}",
            analytic.lambda_t[w], analytic.lambda1[w]
        );
    }
    print!(
        "{}",
        AccessReport::analytic(entry.name, &enumerator, &analytic).render(Format::JsonLines)
    );
    Ok(())
}
