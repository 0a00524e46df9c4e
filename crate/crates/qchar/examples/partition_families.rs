//! Enumerate the constrained partition families and check their sizes
//! against the closed binomial formulas.
//!
//!     cargo run --example partition_families

use qchar::partitions::{count_j, enumerate_j, PartitionCtx};
use qchar::root_system::{Kind, RootSystem};

fn main() {
    for (kind, n, i) in [(Kind::C, 4, 4), (Kind::B, 4, 3), (Kind::D, 5, 3)] {
        let rs = RootSystem::new(kind, n).unwrap();
        println!("{kind}{n}, node {i}:");
        for r in PartitionCtx::residues(&rs, i) {
            let ctx = PartitionCtx::new(&rs, i, r).unwrap();
            let total = count_j(&ctx).unwrap();
            print!("  r = {r}: |J_{r}| = {total}  ");
            for (k, list) in enumerate_j(&ctx) {
                let shown: Vec<String> = list.iter().map(|p| p.to_string()).collect();
                print!("k={k}: {}  ", shown.join(" "));
            }
            println!();
        }
    }
}
