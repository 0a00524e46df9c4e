//! Type-D flip combinatorics: signed supports, interval flips, equivalence
//! classes and their canonical representatives.
//!
//!     cargo run --example flip_classes

use qchar::partitions::{
    canonical_rep, enumerate_j, equivalence_class, flip, mult_exponent, supp_pm, tau, PartitionCtx,
    Sign,
};
use qchar::qcharacter::pi_of_partition;
use qchar::root_system::{Kind, RootSystem};

fn main() {
    let rs = RootSystem::new(Kind::D, 6).unwrap();
    let ctx = PartitionCtx::new(&rs, 4, 0).unwrap();
    println!("D6, node 4, r = 0  (N = {})", ctx.support_offset());
    for (k, list) in enumerate_j(&ctx) {
        println!("length {k}:");
        for p in &list {
            let plus = supp_pm(&ctx, p, Sign::Plus).unwrap();
            let minus = supp_pm(&ctx, p, Sign::Minus).unwrap();
            let class = equivalence_class(&ctx, p).unwrap();
            let members: Vec<String> = class.iter().map(|q| q.to_string()).collect();
            println!(
                "  {:<10} supp+ {:?} supp- {:?}  M = {}  class {{{}}}  canonical {}",
                p.to_string(),
                plus,
                minus,
                mult_exponent(&ctx, p).unwrap(),
                members.join(","),
                canonical_rep(&ctx, p).unwrap()
            );
            // class members share the partition monomial
            let value = pi_of_partition(&ctx, p).unwrap();
            for q in &class {
                assert_eq!(pi_of_partition(&ctx, q).unwrap(), value);
            }
        }
    }

    // one explicit flip
    let p = qchar::partitions::Partition(vec![2, 3]);
    println!(
        "\nflip of {} at 2 (up): interval [2,{}] gives {}",
        p,
        tau(&p, 2, Sign::Plus).unwrap(),
        flip(&p, 2, Sign::Plus).unwrap()
    );
}
