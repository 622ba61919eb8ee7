//! GF(4) arithmetic, conjugation and trace, and the two inner products on
//! packed vectors.

use gf4sss::codes::{euclidean_inner_product, trace_inner_product};
use gf4sss::{Codeword, F4};

fn main() {
    println!("  * | 0 1 w W");
    for a in F4::ALL {
        let row: Vec<String> = F4::ALL.iter().map(|&b| (a * b).to_string()).collect();
        println!("  {a} | {}", row.join(" "));
    }
    for a in F4::ALL {
        println!("conj({a}) = {}  Tr({a}) = {}", a.conj(), a.trace());
    }

    let x: Codeword = "1w0W1".parse().unwrap();
    let y: Codeword = "ww1W0".parse().unwrap();
    println!("x = {x}, y = {y}, x + y = {}", x + y);
    println!("wt(x) = {}, w·x = {}", x.weight(), x.scale(F4::OMEGA));
    println!("trace product  {}", trace_inner_product(&x, &y).unwrap());
    println!(
        "euclidean      {}",
        euclidean_inner_product(&x, &y).unwrap()
    );
}
