//! The braid-group action on the loop-weight lattice.
//!
//! A single generator acts coordinate-wise: coordinate `i` is inverted with
//! every exponent shifted by `2 d_i`, and a neighbouring coordinate `j` gains
//! a copy of the old `i`-content shifted by `d_i` when `a_ji = -1`, by `3, 1`
//! when `a_ji = -2`, and by `5, 3, 1` when `a_ji = -3`.

use crate::error::{Error, Result};
use crate::lweight::LWeight;
use crate::root_system::{Kind, RootSystem};

/// A braid word; letters are node indices, the rightmost acting first,
/// so a word matches `T_w = T_{i1} ... T_{ik}` for `w = s_{i1} ... s_{ik}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BraidWord(pub Vec<usize>);

impl BraidWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<crate::root_system::ReducedWord> for BraidWord {
    fn from(w: crate::root_system::ReducedWord) -> Self {
        BraidWord(w.0)
    }
}

fn neighbour_shifts(a_ji: i64, d_i: i64) -> &'static [i64] {
    // shift lists per the three off-diagonal cases; -1 uses d_i units
    match a_ji {
        -1 => match d_i {
            1 => &[1],
            2 => &[2],
            3 => &[3],
            _ => unreachable!("classical symmetrizers are 1..=3"),
        },
        -2 => &[3, 1],
        -3 => &[5, 3, 1],
        _ => &[],
    }
}

/// Apply the generator `T_i` to a loop weight.
pub fn braid_apply(rs: &RootSystem, i: usize, x: &LWeight) -> Result<LWeight> {
    rs.check_node(i)?;
    let coord_i: Vec<(i64, i64)> = x
        .coordinate(i)
        .factors
        .into_iter()
        .collect();
    let mut out = LWeight::one();
    for (&(j, k), &m) in x.iter() {
        if j != i {
            out.mul_gen(j, k, m);
        }
    }
    let di = rs.d(i);
    for &(k, m) in &coord_i {
        out.mul_gen(i, k + 2 * di, -m);
    }
    for j in 1..=rs.rank() {
        if j == i {
            continue;
        }
        for &s in neighbour_shifts(rs.a(j, i), di) {
            for &(k, m) in &coord_i {
                out.mul_gen(j, k + s, m);
            }
        }
    }
    Ok(out)
}

/// Exact inverse of [`braid_apply`]: coordinate `i` is recovered first, then
/// its contributions are removed from the neighbours.
pub fn braid_apply_inv(rs: &RootSystem, i: usize, y: &LWeight) -> Result<LWeight> {
    rs.check_node(i)?;
    let di = rs.d(i);
    let coord_i: Vec<(i64, i64)> = y
        .coordinate(i)
        .factors
        .into_iter()
        .map(|(k, m)| (k - 2 * di, -m))
        .collect();
    let mut out = LWeight::one();
    for (&(j, k), &m) in y.iter() {
        if j != i {
            out.mul_gen(j, k, m);
        }
    }
    for &(k, m) in &coord_i {
        out.mul_gen(i, k, m);
    }
    for j in 1..=rs.rank() {
        if j == i {
            continue;
        }
        for &s in neighbour_shifts(rs.a(j, i), di) {
            for &(k, m) in &coord_i {
                out.mul_gen(j, k + s, -m);
            }
        }
    }
    Ok(out)
}

/// Apply `T_w` for a word, rightmost letter first; the empty word is the identity.
pub fn braid_apply_word(rs: &RootSystem, word: &[usize], x: &LWeight) -> Result<LWeight> {
    let mut y = x.clone();
    for &i in word.iter().rev() {
        y = braid_apply(rs, i, &y)?;
    }
    Ok(y)
}

/// The loop analogue `alpha[i;k]` of a simple root, defined as
/// `(T_i(w[i;k]))^{-1} w[i;k]`.
pub fn simple_l_root(rs: &RootSystem, i: usize, k: i64) -> Result<LWeight> {
    let om = crate::lweight::gen(rs, i, k)?;
    Ok(braid_apply(rs, i, &om)?.inv().mul(&om))
}

fn desc(from: i64, to: i64) -> impl Iterator<Item = usize> {
    (to..=from).rev().map(|x| x as usize)
}

fn asc(from: i64, to: i64) -> impl Iterator<Item = usize> {
    (from..=to).map(|x| x as usize)
}

/// The defining word of the coset representative `w_{r,j}` used by the
/// descent identities, instantiated verbatim per type.
pub fn wrj_word(rs: &RootSystem, r: usize, j: usize) -> Result<BraidWord> {
    let n = rs.rank() as i64;
    let (r_i, j_i) = (r as i64, j as i64);
    let bad = || Error::NoSuchWord { kind: rs.kind(), r, j };
    let letters: Vec<usize> = match rs.kind() {
        Kind::C => {
            if !(r_i > 1 && r_i - 1 <= j_i && j_i < n) {
                return Err(bad());
            }
            desc(j_i - 1, r_i - 1)
                .chain(asc(j_i + 1, n - 1))
                .chain(desc(n, r_i))
                .collect()
        }
        Kind::B => {
            if j_i == n {
                if !(r_i >= 1 && r_i < n) {
                    return Err(bad());
                }
                desc(n - 1, r_i).collect()
            } else {
                if !(r_i > 1 && r_i < n && r_i - 1 <= j_i && j_i < n) {
                    return Err(bad());
                }
                desc(j_i - 1, r_i - 1)
                    .chain(asc(j_i + 1, n - 1))
                    .chain(desc(n, r_i))
                    .collect()
            }
        }
        Kind::D => {
            if !(r_i > 1 && r_i <= n - 2 && r_i - 1 <= j_i && j_i <= n) {
                return Err(bad());
            }
            if j_i <= n - 2 {
                desc(j_i - 1, r_i - 1)
                    .chain(asc(j_i + 1, n - 2))
                    .chain(std::iter::once(n as usize))
                    .chain(desc(n - 1, r_i))
                    .collect()
            } else {
                let other = if j_i == n { n - 1 } else { n } as usize;
                desc(n - 2, r_i - 1)
                    .chain(std::iter::once(other))
                    .chain(desc(n - 2, r_i))
                    .collect()
            }
        }
        Kind::A => return Err(bad()),
    };
    Ok(BraidWord(letters))
}

/// Closed-form value of `T_{r,j}(w[l;k])`, read off branch by branch from the
/// per-type evaluation tables. Errors when no branch covers the arguments.
pub fn closed_trj(rs: &RootSystem, r: usize, j: usize, l: usize, k: i64) -> Result<LWeight> {
    // validity of (r, j) for the word itself
    wrj_word(rs, r, j)?;
    let n = rs.rank() as i64;
    let (r_i, j_i, l_i) = (r as i64, j as i64, l as i64);
    let none = || Error::NoClosedForm { kind: rs.kind(), r, j, l };
    if l < 1 || l_i > n {
        return Err(none());
    }
    let mut out = LWeight::one();
    let mut put = |node: i64, exp: i64, m: i64| {
        if node > 0 {
            out.mul_gen(node as usize, exp, m);
        }
    };
    match rs.kind() {
        Kind::C => {
            let a = k;
            if !(r_i <= l_i) {
                return Err(none());
            }
            if l_i <= j_i {
                put(l_i - 2, a + 2, 1);
                put(j_i - 1, a + j_i - l_i + 3, -1);
                put(j_i, a + j_i - l_i + 2, 1);
                put(j_i, a + 2 * n - j_i - l_i + 2, 1);
                put(j_i + 1, a + 2 * n - j_i - l_i + 3, -1);
            } else {
                put(l_i, a + 2, 1);
                put(j_i, a + l_i - j_i, 1);
                put(j_i, a + 2 * n - j_i - l_i + 2, 1);
                put(j_i + 1, a + l_i - j_i + 1, -1);
                put(j_i + 1, a + 2 * n - j_i - l_i + 3, -1);
            }
        }
        Kind::B => {
            let q1 = rs.d(1); // long-root unit: exponents q1^m = q^{2m}
            if j_i == n {
                if !(r_i <= l_i && l_i < n) {
                    return Err(none());
                }
                let a = k;
                put(l_i - 1, a + q1, 1);
                put(n - 1, a + q1 * (n - l_i + 1), -1);
                put(n, a + 2 * (n - l_i) - 1, 1);
                put(n, a + 2 * (n - l_i) + 1, 1);
            } else if j_i < n - 1 {
                if l_i < n {
                    if !(r_i <= l_i) {
                        return Err(none());
                    }
                    let a = k;
                    if l_i <= j_i {
                        put(l_i - 2, a + q1 * 2, 1);
                        put(j_i - 1, a + q1 * (j_i - l_i + 3), -1);
                        put(j_i, a + q1 * (j_i - l_i + 2), 1);
                        put(j_i, a + q1 * (2 * n - j_i - l_i - 1), 1);
                        put(j_i + 1, a + q1 * (2 * n - j_i - l_i), -1);
                    } else {
                        put(l_i, a + q1 * 2, 1);
                        put(j_i, a + q1 * (l_i - j_i), 1);
                        put(j_i, a + q1 * (2 * n - j_i - l_i - 1), 1);
                        put(j_i + 1, a + q1 * (l_i - j_i + 1), -1);
                        put(j_i + 1, a + q1 * (2 * n - j_i - l_i), -1);
                    }
                } else {
                    // spin-node input, displayed with base exponent -1
                    let a = k + 1;
                    put(j_i, a + q1 * (n - j_i - 1), 1);
                    put(j_i + 1, a + q1 * (n - j_i), -1);
                    put(n, a + 3, 1);
                }
            } else {
                // j = n-1
                if l_i < n {
                    if !(r_i <= l_i) {
                        return Err(none());
                    }
                    let a = k;
                    put(l_i - 2, a + q1 * 2, 1);
                    put(n - 2, a + q1 * (n - l_i + 2), -1);
                    put(n - 1, a + q1 * (n - l_i + 1), 1);
                    put(n - 1, a + q1 * (n - l_i), 1);
                    put(n, a + 2 * (n - l_i) + 1, -1);
                    put(n, a + 2 * (n - l_i) + 3, -1);
                } else {
                    let a = k + 1;
                    put(n - 1, a, 1);
                    put(n, a + 1, -1);
                }
            }
        }
        Kind::D => {
            let a = k;
            if l_i <= n - 2 {
                if j_i < l_i {
                    put(l_i, a + 2, 1);
                    put(j_i, a + l_i - j_i, 1);
                    put(j_i, a + 2 * n - l_i - 2 - j_i, 1);
                    put(j_i + 1, a + l_i - j_i + 1, -1);
                    put(j_i + 1, a + 2 * n - l_i - j_i - 1, -1);
                } else if l_i <= j_i && j_i <= n - 2 {
                    if !(r_i <= l_i) {
                        return Err(none());
                    }
                    put(l_i - 2, a + 2, 1);
                    put(j_i - 1, a + j_i - l_i + 3, -1);
                    put(j_i, a + j_i - l_i + 2, 1);
                    put(j_i, a + 2 * n - l_i - j_i - 2, 1);
                    put(j_i + 1, a + 2 * n - l_i - j_i - 1, -1);
                    if j_i == n - 2 {
                        // at the fork the successor factor lands on both spin nodes
                        put(n, a + 2 * n - l_i - j_i - 1, -1);
                    }
                } else {
                    if !(r_i <= l_i) {
                        return Err(none());
                    }
                    put(l_i - 2, a + 2, 1);
                    put(n - 2, a + n - l_i + 2, -1);
                    put(j_i, a + n - l_i - 1, 1);
                    put(j_i, a + n - l_i + 1, 1);
                }
            } else {
                let other = if l_i == n { n - 1 } else { n };
                if j_i < n - 2 {
                    put(j_i, a + n - 1 - j_i, 1);
                    put(j_i + 1, a + n - j_i, -1);
                    put(other, a + 2, 1);
                } else if j_i == n - 2 {
                    put(n - 2, a + 1, 1);
                    put(l_i, a + 2, -1);
                } else if j_i == l_i {
                    put(l_i, a, 1);
                } else {
                    put(n - 3, a + 2, 1);
                    put(n - 2, a + 3, -1);
                    put(other, a + 2, 1);
                }
            }
        }
        Kind::A => return Err(none()),
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lweight::gen;
    use crate::root_system::Weight;

    fn rs(kind: Kind, n: usize) -> RootSystem {
        RootSystem::new(kind, n).unwrap()
    }

    fn lw(triples: &[[i64; 3]]) -> LWeight {
        LWeight::from_triples(triples)
    }

    #[test]
    fn generator_action_examples() {
        let c2 = rs(Kind::C, 2);
        let t = braid_apply(&c2, 2, &gen(&c2, 2, 0).unwrap()).unwrap();
        assert_eq!(t, lw(&[[1, 1, 1], [1, 3, 1], [2, 4, -1]]));

        assert!(braid_apply(&c2, 1, &LWeight::one()).unwrap().is_one());
        assert!(braid_apply(&c2, 3, &LWeight::one()).is_err());

        let a2 = rs(Kind::A, 2);
        let fixed = braid_apply(&a2, 1, &gen(&a2, 2, 0).unwrap()).unwrap();
        assert_eq!(fixed, gen(&a2, 2, 0).unwrap());
    }

    #[test]
    fn word_action() {
        let a2 = rs(Kind::A, 2);
        let x = gen(&a2, 1, 0).unwrap();
        assert_eq!(braid_apply_word(&a2, &[], &x).unwrap(), x);
        // two reduced words of the longest element act identically
        let y = LWeight::generator(1, 2).mul(&LWeight::generator(2, -1).pow(-1));
        assert_eq!(
            braid_apply_word(&a2, &[1, 2, 1], &y).unwrap(),
            braid_apply_word(&a2, &[2, 1, 2], &y).unwrap()
        );
        // weight equivariance along s_2 s_1
        let img = braid_apply_word(&a2, &[2, 1], &x).unwrap();
        let w = a2
            .apply_word(&[2, 1], &Weight::fundamental(2, 1))
            .unwrap();
        assert_eq!(img.weight(2), w);
        assert_eq!(img, lw(&[[2, 3, -1]]));
    }

    #[test]
    fn simple_l_root_examples() {
        let a2 = rs(Kind::A, 2);
        assert_eq!(
            simple_l_root(&a2, 1, 0).unwrap(),
            lw(&[[1, 0, 1], [1, 2, 1], [2, 1, -1]])
        );
        let c2 = rs(Kind::C, 2);
        assert_eq!(
            simple_l_root(&c2, 2, 0).unwrap(),
            lw(&[[1, 1, -1], [1, 3, -1], [2, 0, 1], [2, 4, 1]])
        );
    }

    #[test]
    fn simple_l_root_matches_product_formula() {
        for (kind, lo) in [(Kind::A, 1), (Kind::B, 2), (Kind::C, 2), (Kind::D, 3)] {
            for n in lo..=5 {
                let r = rs(kind, n);
                for i in 1..=n {
                    for k in -10..=10 {
                        let di = r.d(i);
                        let mut expect = LWeight::generator(i, k);
                        expect.mul_gen(i, k + 2 * di, 1);
                        for j in 1..=n {
                            if j == i {
                                continue;
                            }
                            for &s in neighbour_shifts(r.a(j, i), di) {
                                expect.mul_gen(j, k + s, -1);
                            }
                        }
                        assert_eq!(simple_l_root(&r, i, k).unwrap(), expect);
                        // weight projection is the simple root
                        assert_eq!(
                            simple_l_root(&r, i, k).unwrap().weight(n),
                            r.simple_root(i)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_round_trip() {
        let b3 = rs(Kind::B, 3);
        let x = LWeight::generator(1, -2)
            .mul(&LWeight::generator(3, 1).pow(2))
            .mul(&LWeight::generator(2, 4).inv());
        for i in 1..=3 {
            let y = braid_apply(&b3, i, &x).unwrap();
            assert_eq!(braid_apply_inv(&b3, i, &y).unwrap(), x);
            let z = braid_apply_inv(&b3, i, &x).unwrap();
            assert_eq!(braid_apply(&b3, i, &z).unwrap(), x);
        }
    }

    #[test]
    fn wrj_examples() {
        let c3 = rs(Kind::C, 3);
        assert_eq!(wrj_word(&c3, 2, 2).unwrap().0, vec![1, 3, 2]);
        let b3 = rs(Kind::B, 3);
        assert_eq!(wrj_word(&b3, 1, 3).unwrap().0, vec![2, 1]);
        let d4 = rs(Kind::D, 4);
        assert_eq!(wrj_word(&d4, 2, 4).unwrap().0, vec![2, 1, 3, 2]);
        assert!(wrj_word(&c3, 1, 1).is_err());
        assert!(wrj_word(&rs(Kind::A, 3), 2, 2).is_err());
    }

    #[test]
    fn wrj_weight_identities() {
        // w_{r,j} w_r = w_{r-2} + alpha_j, and w_{r,n} w_r = w_{r-1} + alpha_n for B
        for (kind, lo) in [(Kind::B, 2), (Kind::C, 2), (Kind::D, 4)] {
            for n in lo..=6 {
                let r_sys = rs(kind, n);
                for r in 1..=n {
                    for j in 1..=n {
                        let word = match wrj_word(&r_sys, r, j) {
                            Ok(w) => w,
                            Err(_) => continue,
                        };
                        let img = r_sys
                            .apply_word(&word.0, &Weight::fundamental(n, r))
                            .unwrap();
                        let target = if kind == Kind::B && j == n {
                            Weight::fundamental(n, r - 1).add(&r_sys.simple_root(n))
                        } else {
                            Weight::fundamental(n, r - 2).add(&r_sys.simple_root(j))
                        };
                        assert_eq!(img, target, "{kind}{n} w_{{{r},{j}}}");
                    }
                }
            }
        }
    }

    #[test]
    fn closed_forms_match_word_action() {
        for (kind, lo) in [(Kind::B, 2), (Kind::C, 2), (Kind::D, 4)] {
            for n in lo..=5 {
                let r_sys = rs(kind, n);
                for r in 1..=n {
                    for j in 1..=n {
                        let word = match wrj_word(&r_sys, r, j) {
                            Ok(w) => w,
                            Err(_) => continue,
                        };
                        for l in 1..=n {
                            for k in -3..=3 {
                                let cf = match closed_trj(&r_sys, r, j, l, k) {
                                    Ok(v) => v,
                                    Err(_) => continue,
                                };
                                let direct = braid_apply_word(
                                    &r_sys,
                                    &word.0,
                                    &LWeight::generator(l, k),
                                )
                                .unwrap();
                                assert_eq!(cf, direct, "{kind}{n} r={r} j={j} l={l} k={k}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn closed_form_spot_values() {
        // B: T_{r,n} on a non-spin generator
        let b3 = rs(Kind::B, 3);
        assert_eq!(
            closed_trj(&b3, 1, 3, 1, 0).unwrap(),
            lw(&[[2, 6, -1], [3, 3, 1], [3, 5, 1]])
        );
        // D: unchanged spin generator when j = l
        let d4 = rs(Kind::D, 4);
        assert_eq!(
            closed_trj(&d4, 2, 4, 4, 0).unwrap(),
            LWeight::generator(4, 0)
        );
        assert!(closed_trj(&b3, 2, 2, 1, 0).is_err());
    }
}
