//! The braid action on loop weights: single generators, words, simple loop
//! roots, and the closed evaluation of the descent operators.
//!
//!     cargo run --example braid_action

use qchar::braid::{braid_apply, braid_apply_word, closed_trj, simple_l_root, wrj_word};
use qchar::lweight::LWeight;
use qchar::root_system::{Kind, RootSystem};

fn main() {
    let c2 = RootSystem::new(Kind::C, 2).unwrap();
    let top = LWeight::generator(2, 0);
    println!("C2: T_2(w[2;0])     = {}", braid_apply(&c2, 2, &top).unwrap());
    println!("C2: alpha[2;0]      = {}", simple_l_root(&c2, 2, 0).unwrap());
    println!(
        "C2: T_1 T_2 (w[2;0]) = {}",
        braid_apply_word(&c2, &[1, 2], &top).unwrap()
    );

    // descent operators and their closed forms
    let b3 = RootSystem::new(Kind::B, 3).unwrap();
    let word = wrj_word(&b3, 1, 3).unwrap();
    println!("\nB3: w_(1,3) has word {:?}", word.0);
    let direct = braid_apply_word(&b3, &word.0, &LWeight::generator(1, 0)).unwrap();
    let table = closed_trj(&b3, 1, 3, 1, 0).unwrap();
    println!("    word action : {direct}");
    println!("    closed form : {table}");
    assert_eq!(direct, table);

    let d4 = RootSystem::new(Kind::D, 4).unwrap();
    let word = wrj_word(&d4, 2, 4).unwrap();
    println!("\nD4: w_(2,4) has word {:?}", word.0);
    for l in [3, 4] {
        println!(
            "    T_(2,4)(w[{l};0]) = {}",
            closed_trj(&d4, 2, 4, l, 0).unwrap()
        );
    }
}
