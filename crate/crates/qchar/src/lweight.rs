//! Exact arithmetic in the loop-weight lattice, restricted to spectral
//! parameters in integer powers of `q`.
//!
//! A loop weight is a finitely supported multiplicity map on generator slots
//! `(node i, exponent k)`, standing for the product of `w[i;k]^m` over its
//! entries, where `w[i;k]` is the fundamental generator with `(1 - q^k u)` in
//! coordinate `i`. The map is kept in canonical sorted form at all times, so
//! equality, ordering and hashing are structural.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::root_system::{RootSystem, Weight};

/// An element of the free abelian group on the generators `w[i;k]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LWeight {
    entries: BTreeMap<(usize, i64), i64>,
}

impl LWeight {
    /// The identity element.
    pub fn one() -> Self {
        LWeight::default()
    }

    /// The generator `w[i;k]`. The node index is validated against a root
    /// system by [`RootSystem::check_node`] in rank-aware callers.
    pub fn generator(i: usize, k: i64) -> Self {
        assert!(i >= 1, "node indices are 1-based");
        let mut entries = BTreeMap::new();
        entries.insert((i, k), 1);
        LWeight { entries }
    }

    pub fn is_one(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct generator slots.
    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, i64), &i64)> {
        self.entries.iter()
    }

    pub fn exponent(&self, i: usize, k: i64) -> i64 {
        *self.entries.get(&(i, k)).unwrap_or(&0)
    }

    pub fn mul(&self, other: &LWeight) -> LWeight {
        let mut entries = self.entries.clone();
        for (&key, &m) in &other.entries {
            let e = entries.entry(key).or_insert(0);
            *e += m;
            if *e == 0 {
                entries.remove(&key);
            }
        }
        LWeight { entries }
    }

    pub fn inv(&self) -> LWeight {
        LWeight {
            entries: self.entries.iter().map(|(&k, &m)| (k, -m)).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> LWeight {
        if e == 0 {
            return LWeight::one();
        }
        LWeight {
            entries: self.entries.iter().map(|(&k, &m)| (k, m * e)).collect(),
        }
    }

    /// Multiply in a single generator power without building a temporary.
    pub fn mul_gen(&mut self, i: usize, k: i64, m: i64) {
        if m == 0 {
            return;
        }
        let e = self.entries.entry((i, k)).or_insert(0);
        *e += m;
        if *e == 0 {
            self.entries.remove(&(i, k));
        }
    }

    /// Shift every spectral exponent by `delta` (substitution `u -> q^-delta u`).
    pub fn shift(&self, delta: i64) -> LWeight {
        LWeight {
            entries: self
                .entries
                .iter()
                .map(|(&(i, k), &m)| ((i, k + delta), m))
                .collect(),
        }
    }

    /// True when every generator exponent is nonnegative (identity included).
    pub fn is_l_dominant(&self) -> bool {
        self.entries.values().all(|&m| m > 0)
    }

    /// Image under the weight homomorphism `w[i;k] -> w_i`.
    pub fn weight(&self, rank: usize) -> Weight {
        let mut v = vec![0i64; rank];
        for (&(i, _), &m) in &self.entries {
            assert!(i <= rank, "node {i} exceeds rank {rank}");
            v[i - 1] += m;
        }
        Weight(v)
    }

    /// The content of coordinate `j`: a map exponent -> multiplicity
    /// describing the rational function `prod (1 - q^k u)^m` in slot `j`.
    pub fn coordinate(&self, j: usize) -> CoordinatePoly {
        CoordinatePoly {
            node: j,
            factors: self
                .entries
                .iter()
                .filter(|(&(i, _), _)| i == j)
                .map(|(&(_, k), &m)| (k, m))
                .collect(),
        }
    }

    /// Rebuild from per-coordinate content; inverse of [`LWeight::coordinate`].
    pub fn from_coordinates<I: IntoIterator<Item = CoordinatePoly>>(polys: I) -> LWeight {
        let mut out = LWeight::one();
        for p in polys {
            for (k, m) in p.factors {
                out.mul_gen(p.node, k, m);
            }
        }
        out
    }

    /// Sorted `[node, exponent, multiplicity]` triples, the wire form.
    pub fn to_triples(&self) -> Vec<[i64; 3]> {
        self.entries
            .iter()
            .map(|(&(i, k), &m)| [i as i64, k, m])
            .collect()
    }

    pub fn from_triples(triples: &[[i64; 3]]) -> LWeight {
        let mut out = LWeight::one();
        for &[i, k, m] in triples {
            assert!(i >= 1);
            out.mul_gen(i as usize, k, m);
        }
        out
    }
}

impl fmt::Display for LWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (&(i, k), &m) in &self.entries {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "w[{i};{k}]")?;
            if m != 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

/// One coordinate of a loop weight seen as an n-tuple of rational functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinatePoly {
    pub node: usize,
    /// exponent -> multiplicity of the factor `(1 - q^exponent u)`.
    pub factors: BTreeMap<i64, i64>,
}

impl CoordinatePoly {
    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }
}

/// Rank-checked generator constructor.
pub fn gen(rs: &RootSystem, i: usize, k: i64) -> Result<LWeight> {
    rs.check_node(i)
        .map_err(|_| Error::NodeOutOfRange {
            index: i,
            rank: rs.rank(),
        })?;
    Ok(LWeight::generator(i, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::Kind;

    #[test]
    fn group_laws() {
        let a = LWeight::generator(1, 0);
        assert!(a.mul(&a.inv()).is_one());
        assert_eq!(a.mul(&a), a.pow(2));
        assert_eq!(LWeight::generator(2, 3).pow(-2).exponent(2, 3), -2);
    }

    #[test]
    fn weight_homomorphism() {
        let rs = RootSystem::new(Kind::A, 3).unwrap();
        assert_eq!(LWeight::one().weight(3), Weight::zero(3));
        assert_eq!(
            gen(&rs, 2, 5).unwrap().weight(3),
            Weight::fundamental(3, 2)
        );
        let x = LWeight::generator(1, 1).mul(&LWeight::generator(1, 5).inv());
        assert_eq!(x.weight(3), Weight::zero(3));
        assert!(gen(&rs, 4, 0).is_err());
    }

    #[test]
    fn coordinates_roundtrip() {
        let x = LWeight::generator(1, 1)
            .mul(&LWeight::generator(1, 5).inv())
            .mul(&LWeight::generator(2, 0).pow(3));
        let c1 = x.coordinate(1);
        assert_eq!(c1.factors.get(&1), Some(&1));
        assert_eq!(c1.factors.get(&5), Some(&-1));
        assert!(x.coordinate(3).is_one());
        let rebuilt = LWeight::from_coordinates((1..=3).map(|j| x.coordinate(j)));
        assert_eq!(rebuilt, x);
    }

    #[test]
    fn dominance() {
        assert!(LWeight::one().is_l_dominant());
        assert!(LWeight::generator(1, 0).is_l_dominant());
        assert!(!LWeight::generator(1, 0).inv().is_l_dominant());
    }

    #[test]
    fn triples_roundtrip() {
        let x = LWeight::generator(2, -1).mul(&LWeight::generator(1, 4).pow(-2));
        let t = x.to_triples();
        assert_eq!(t, vec![[1, 4, -2], [2, -1, 1]]);
        assert_eq!(LWeight::from_triples(&t), x);
    }

    #[test]
    fn group_axioms_on_random_elements() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let rank = 5;
        for _ in 0..200 {
            let a = crate::verify::random_lweight(&mut rng, rank);
            let b = crate::verify::random_lweight(&mut rng, rank);
            let c = crate::verify::random_lweight(&mut rng, rank);
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.mul(&b), b.mul(&a));
            assert!(a.mul(&a.inv()).is_one());
            assert_eq!(a.mul(&LWeight::one()), a);
            // the weight map is a homomorphism
            assert_eq!(
                a.mul(&b).weight(rank),
                a.weight(rank).add(&b.weight(rank))
            );
            // coordinate split rebuilds the element
            let rebuilt = LWeight::from_coordinates((1..=rank).map(|j| a.coordinate(j)));
            assert_eq!(rebuilt, a);
        }
    }
}
