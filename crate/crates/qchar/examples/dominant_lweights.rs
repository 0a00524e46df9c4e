//! List the dominant loop weights of a fundamental module, residue by
//! residue, with the partitions that produce them.
//!
//!     cargo run --example dominant_lweights

use qchar::qcharacter::dominant_lweights;
use qchar::root_system::{Kind, RootSystem};

fn main() {
    let rs = RootSystem::new(Kind::D, 5).unwrap();
    let node = 3;
    println!("dominant loop weights of D5, node {node}");
    for (r, entries) in dominant_lweights(&rs, node).unwrap() {
        let mass: u64 = entries.iter().map(|e| e.multiplicity).sum();
        println!("  r = {r} (dominant mass {mass})");
        for e in entries {
            let parts: Vec<String> = e.partitions.iter().map(|p| p.to_string()).collect();
            let sign = e
                .sign
                .map(|s| format!(" sign {s}"))
                .unwrap_or_default();
            println!(
                "    {:<34} mult {} = 2^{}{}  from {}",
                e.monomial.to_string(),
                e.multiplicity,
                e.mult_exponent,
                sign,
                parts.join(" ~ ")
            );
        }
    }
}
