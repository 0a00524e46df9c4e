//! Compute the q-character of a fundamental module and print it.
//!
//!     cargo run --example full_character

use qchar::output::{character_document, render_text, Notation};
use qchar::qcharacter::full_character;
use qchar::root_system::{Kind, RootSystem};

fn main() {
    let rs = RootSystem::new(Kind::C, 2).unwrap();
    let ch = full_character(&rs, 2, 0).unwrap();
    print!("{}", render_text(&character_document(&ch), Notation::Omega));

    // the same module with every spectral exponent shifted by 3
    let shifted = full_character(&rs, 2, 3).unwrap();
    println!("\nshifted base: highest loop weight becomes one of");
    for (x, m) in shifted.entries.iter().take(2) {
        println!("  {x}  (multiplicity {m})");
    }

    // a bigger case: the 29-dimensional module of D4 at node 2
    let d4 = RootSystem::new(Kind::D, 4).unwrap();
    let ch = full_character(&d4, 2, 0).unwrap();
    println!(
        "\nD4 node 2: {} distinct monomials, mass {} (28 + 1 classically)",
        ch.len(),
        ch.mass()
    );
    let doubled = ch.entries.values().filter(|&&m| m == 2).count();
    println!("monomials of multiplicity 2: {doubled}");
}
