//! The classical oracles: Weyl dimensions, Freudenthal dominant characters,
//! and Weyl orbits with canonical words.
//!
//!     cargo run --example weight_oracles

use qchar::classical::{classical_decomposition, dominant_char, weyl_dim};
use qchar::root_system::{Kind, RootSystem, Weight};

fn main() {
    let rs = RootSystem::new(Kind::C, 3).unwrap();
    let lam = Weight::fundamental(3, 2);
    println!("C3, V(w_2): dim = {}", weyl_dim(&rs, &lam).unwrap());
    println!("dominant multiplicities:");
    for (mu, m) in dominant_char(&rs, &lam).unwrap() {
        let orbit = rs.weyl_orbit(&mu).unwrap().len();
        println!("  {mu}  mult {m}  (orbit size {orbit})");
    }

    let d4 = RootSystem::new(Kind::D, 4).unwrap();
    println!(
        "\nD4 node 2 decomposes classically as {:?}",
        classical_decomposition(&d4, 2)
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
    );
    println!("dim V(w_2) = {}", weyl_dim(&d4, &Weight::fundamental(4, 2)).unwrap());

    // canonical minimal-length words for a small orbit
    let a2 = RootSystem::new(Kind::A, 2).unwrap();
    println!("\nA2 orbit of w_1:");
    for (mu, word) in a2.weyl_orbit(&Weight::fundamental(2, 1)).unwrap() {
        println!("  {mu}  via {:?}", word.0);
    }
}
