//! Run the exact descent identities that relate dominant monomials at
//! neighbouring residues through the braid action.
//!
//!     cargo run --example ladder_identities

use qchar::partitions::PartitionCtx;
use qchar::qcharacter::{ladder_cases, ladder_check};
use qchar::root_system::{Kind, RootSystem};

fn main() {
    for (kind, n, i) in [(Kind::C, 3, 3), (Kind::B, 3, 2), (Kind::D, 6, 4)] {
        let rs = RootSystem::new(kind, n).unwrap();
        println!("{kind}{n}, node {i}:");
        for r in PartitionCtx::residues(&rs, i) {
            if r == i {
                continue;
            }
            let ctx = PartitionCtx::new(&rs, i, r).unwrap();
            for (p, case) in ladder_cases(&ctx).unwrap() {
                let ok = ladder_check(&ctx, &p, case).unwrap();
                println!("  r = {r} {:<8} {case:?}: {}", p.to_string(), if ok { "holds" } else { "FAILS" });
                assert!(ok);
            }
        }
    }
}
