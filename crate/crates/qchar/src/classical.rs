//! Classical character oracles: Weyl dimension formula and Freudenthal
//! multiplicities. These are independent of the braid-side machinery and are
//! used to cross-check it.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::root_system::{Kind, RootSystem, Weight};

/// Dimension of the irreducible module `V(lambda)` by the Weyl formula,
/// evaluated as an exact quotient of integer factor lists.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<u64> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let rho = Weight(vec![1; rs.rank()]);
    let shifted = lambda.add(&rho);
    let mut nums: Vec<i64> = Vec::new();
    let mut dens: Vec<i64> = Vec::new();
    for alpha in rs.positive_roots() {
        nums.push(rs.pair_root(&shifted, alpha));
        dens.push(rs.pair_root(&rho, alpha));
    }
    // cancel denominators into the numerator list; the quotient is an integer
    for mut d in dens {
        for n in nums.iter_mut() {
            if d == 1 {
                break;
            }
            let g = gcd(*n, d);
            *n /= g;
            d /= g;
        }
        assert_eq!(d, 1, "Weyl dimension quotient must be integral");
    }
    let mut out: u128 = 1;
    for n in nums {
        out = out.checked_mul(n as u128).expect("dimension overflow");
    }
    Ok(out as u64)
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Multiplicities of the dominant weights of `V(lambda)` by Freudenthal's
/// recursion; the multiplicity of `lambda` itself is 1.
pub fn dominant_char(rs: &RootSystem, lambda: &Weight) -> Result<BTreeMap<Weight, u64>> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let mut doms = dominant_weights_of(rs, lambda);
    doms.sort_by_key(|mu| {
        let c = rs.root_coords(&lambda.sub(mu)).expect("support weight");
        (c.iter().sum::<i64>(), mu.clone())
    });

    let rho = Weight(vec![1; rs.rank()]);
    let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
    mult.insert(lambda.clone(), 1);
    for mu in &doms {
        if mu == lambda {
            continue;
        }
        let mut num: i64 = 0;
        for alpha in rs.positive_roots() {
            let norm2 = 2 * rs.root_norm_half(alpha);
            let alpha_w = root_to_weight(rs, alpha);
            let mut t = 1i64;
            loop {
                let nu = Weight(
                    mu.0.iter()
                        .zip(&alpha_w.0)
                        .map(|(a, b)| a + t * b)
                        .collect(),
                );
                let nud = to_dominant(rs, &nu);
                let m = match rs.root_coords(&lambda.sub(&nud)) {
                    Some(c) if c.iter().all(|&x| x >= 0) => {
                        *mult.get(&nud).unwrap_or(&0) as i64
                    }
                    _ => 0,
                };
                if m == 0 {
                    break;
                }
                num += m * (rs.pair_root(mu, alpha) + t * norm2);
                t += 1;
            }
        }
        // denominator (|lambda+rho|^2 - |mu+rho|^2) = (lambda+mu+2rho, lambda-mu)
        let sum = lambda.add(mu).add(&rho).add(&rho);
        let diff = rs
            .root_coords(&lambda.sub(mu))
            .expect("dominant weight below lambda");
        let den: i64 = rs.pair_root(&sum, &diff);
        assert!(den > 0 && (2 * num) % den == 0, "Freudenthal recursion");
        mult.insert(mu.clone(), (2 * num / den) as u64);
    }
    Ok(mult)
}

/// All weights of `V(lambda)` with multiplicity, expanded over Weyl orbits.
pub fn full_char(rs: &RootSystem, lambda: &Weight) -> Result<BTreeMap<Weight, u64>> {
    let mut out = BTreeMap::new();
    for (mu, m) in dominant_char(rs, lambda)? {
        for (nu, _) in rs.weyl_orbit(&mu)? {
            *out.entry(nu).or_insert(0) += m;
        }
    }
    Ok(out)
}

fn root_to_weight(rs: &RootSystem, alpha: &[i64]) -> Weight {
    let n = rs.rank();
    Weight(
        (1..=n)
            .map(|j| (1..=n).map(|i| alpha[i - 1] * rs.a(j, i)).sum())
            .collect(),
    )
}

fn to_dominant(rs: &RootSystem, mu: &Weight) -> Weight {
    let mut mu = mu.clone();
    loop {
        match (0..rs.rank()).find(|&i| mu.0[i] < 0) {
            Some(i) => mu = rs.reflect(i + 1, &mu).expect("valid node"),
            None => return mu,
        }
    }
}

/// Dominant weights in the support of `V(lambda)`: BFS through the weight
/// support, where membership means the dominant conjugate lies under `lambda`.
fn dominant_weights_of(rs: &RootSystem, lambda: &Weight) -> Vec<Weight> {
    let mut seen = std::collections::BTreeSet::new();
    let mut doms = Vec::new();
    let mut frontier = vec![lambda.clone()];
    seen.insert(lambda.clone());
    doms.push(lambda.clone());
    while let Some(mu) = frontier.pop() {
        for i in 1..=rs.rank() {
            let alpha = rs.simple_root(i);
            let nu = mu.sub(&alpha);
            if seen.contains(&nu) {
                continue;
            }
            let nud = to_dominant(rs, &nu);
            let inside = matches!(rs.root_coords(&lambda.sub(&nud)),
                Some(c) if c.iter().all(|&x| x >= 0));
            if inside {
                seen.insert(nu.clone());
                if nu.is_dominant() {
                    doms.push(nu.clone());
                }
                frontier.push(nu);
            }
        }
    }
    doms
}

/// Restriction of the fundamental module to the underlying finite-type
/// algebra: a single irreducible for types A and C and for minuscule nodes,
/// and the alternating sum pattern `w_i, w_{i-2}, ...` for types B and D.
pub fn classical_decomposition(rs: &RootSystem, i: usize) -> Result<Vec<Weight>> {
    rs.check_node(i)?;
    let single = matches!(rs.kind(), Kind::A | Kind::C) || crate::qcharacter::is_minuscule(rs, i);
    if single {
        return Ok(vec![Weight::fundamental(rs.rank(), i)]);
    }
    Ok((0..=i / 2)
        .map(|l| Weight::fundamental(rs.rank(), i - 2 * l))
        .collect())
}
