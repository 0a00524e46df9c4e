//! Minuscule nodes: the q-character is the braid orbit of the highest loop
//! weight over the minimal-length coset representatives.
//!
//!     cargo run --example minuscule_orbit

use qchar::braid::braid_apply_word;
use qchar::lweight::LWeight;
use qchar::root_system::{Kind, RootSystem, Weight};

fn main() {
    let rs = RootSystem::new(Kind::A, 3).unwrap();
    let node = 2;
    let top = LWeight::generator(node, 0);
    println!("A3 node {node}: orbit of the highest loop weight");
    for (mu, word) in rs.weyl_orbit(&Weight::fundamental(3, node)).unwrap() {
        let img = braid_apply_word(&rs, &word.0, &top).unwrap();
        println!("  word {:<12} weight {:<10} {}", format!("{:?}", word.0), mu.to_string(), img);
    }

    // spin node of B3: 2^3 = 8 monomials
    let b3 = RootSystem::new(Kind::B, 3).unwrap();
    let ch = qchar::qcharacter::full_character(&b3, 3, 0).unwrap();
    println!("\nB3 spin node: {} monomials, all multiplicity one", ch.len());
}
