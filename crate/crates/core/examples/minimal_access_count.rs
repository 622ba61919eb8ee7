//! Minimal-access counting: closed-form values next to brute force, with
//! every disagreement listed.

use gf4sss::additive::count_minimal_additive;
use gf4sss::catalog;
use gf4sss::linear::minimal_group_counts;
use gf4sss::{Code, CodeKind, Field};

fn main() -> gf4sss::Result<()> {
    let r = count_minimal_additive(&catalog::get("hexacode_additive")?.code.unwrap())?;
    println!(
        "formula total {}, one class pair {}, unordered {}, ordered {}",
        r.formula_total, r.single_pair_count, r.brute_unordered, r.brute_ordered
    );
    for flag in &r.flags {
        println!("flag: {flag}");
    }

    // a linear code whose nonzero codewords are all minimal
    let simplex = Code::from_symbol_rows(
        CodeKind::Linear,
        Field::Gf2,
        &["1010101", "0110011", "0001111"],
    )?;
    let t = minimal_group_counts(&simplex)?;
    println!(
        "simplex: {} minimal groups (formula {}), agrees {}",
        t.brute_minimal_groups,
        t.formula_minimal_groups,
        t.agrees()
    );

    match count_minimal_additive(&catalog::get("qc12")?.code.unwrap()) {
        Ok(_) => println!("qc12 satisfies the hypothesis"),
        Err(e) => println!("qc12: {e}"),
    }
    Ok(())
}
