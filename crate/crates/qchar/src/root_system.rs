//! Root-system data for the classical series and Weyl-group orbit machinery.
//!
//! Weights are always stored in fundamental-weight coordinates. Simple roots
//! enter through the columns of the Cartan matrix: `alpha_j = sum_i a[i][j] w_i`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Classical Dynkin type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Kind {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Kind::A => 'A',
            Kind::B => 'B',
            Kind::C => 'C',
            Kind::D => 'D',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Kind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "A" | "a" => Ok(Kind::A),
            "B" | "b" => Ok(Kind::B),
            "C" | "c" => Ok(Kind::C),
            "D" | "d" => Ok(Kind::D),
            other => Err(format!("unknown type {other:?}, expected one of A, B, C, D")),
        }
    }
}

/// An integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `w_r`; `r = 0` is the zero weight.
    pub fn fundamental(rank: usize, r: usize) -> Self {
        let mut v = vec![0; rank];
        if r > 0 {
            v[r - 1] = 1;
        }
        Weight(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, x) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A reduced word `s_{i1} ... s_{ik}`, letters being 1-based node indices.
/// Words act on the right-hand factor first, matching `T_w = T_{i1} ... T_{ik}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ReducedWord(pub Vec<usize>);

impl ReducedWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A classical root system with Bourbaki node labels.
///
/// `d` is the minimal positive symmetrizer (`d_i a_ij = d_j a_ji`) and `hstar`
/// the constant entering the partition-monomial exponents: the dual Coxeter
/// number for types A, B, D and twice it for type C.
#[derive(Debug, Clone)]
pub struct RootSystem {
    kind: Kind,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    d: Vec<i64>,
    hstar: i64,
    positive_roots: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(kind: Kind, rank: usize) -> Result<Self> {
        let min = match kind {
            Kind::A => 1,
            Kind::B | Kind::C => 2,
            Kind::D => 3,
        };
        if rank < min {
            return Err(Error::RankOutOfRange { kind, rank, min });
        }
        let cartan = build_cartan(kind, rank);
        let d = build_symmetrizer(kind, rank);
        let hstar = match kind {
            Kind::A => rank as i64 + 1,
            Kind::B => 2 * rank as i64 - 1,
            Kind::C => 2 * rank as i64 + 2,
            Kind::D => 2 * rank as i64 - 2,
        };
        let rs = RootSystem {
            kind,
            rank,
            cartan,
            d,
            hstar,
            positive_roots: Vec::new(),
        };
        let mut rs = rs;
        rs.positive_roots = rs.enumerate_positive_roots();
        rs.check_invariants();
        Ok(rs)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Cartan matrix entry `a_ij`, 1-based.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Symmetrizer entry `d_i`, 1-based.
    pub fn d(&self, i: usize) -> i64 {
        self.d[i - 1]
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.d
    }

    pub fn hstar(&self) -> i64 {
        self.hstar
    }

    pub fn check_node(&self, i: usize) -> Result<()> {
        if i >= 1 && i <= self.rank {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                index: i,
                rank: self.rank,
            })
        }
    }

    /// Simple root `alpha_i` in fundamental coordinates (column `i` of the Cartan matrix).
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight((1..=self.rank).map(|j| self.a(j, i)).collect())
    }

    /// Simple reflection `s_i` applied to a weight.
    pub fn reflect(&self, i: usize, lambda: &Weight) -> Result<Weight> {
        self.check_node(i)?;
        Ok(self.reflect_unchecked(i, lambda))
    }

    fn reflect_unchecked(&self, i: usize, lambda: &Weight) -> Weight {
        let li = lambda.0[i - 1];
        Weight(
            (1..=self.rank)
                .map(|j| lambda.0[j - 1] - li * self.a(j, i))
                .collect(),
        )
    }

    /// Apply a word `s_{i1} ... s_{ik}` to a weight, rightmost letter first.
    pub fn apply_word(&self, word: &[usize], lambda: &Weight) -> Result<Weight> {
        let mut mu = lambda.clone();
        for &i in word.iter().rev() {
            mu = self.reflect(i, &mu)?;
        }
        Ok(mu)
    }

    /// The Weyl orbit of a dominant weight, each point paired with the
    /// canonical reduced word of its minimal-length coset representative.
    ///
    /// BFS processes each frontier in lexicographic order and descends through
    /// nodes in increasing order, so the output (and every word) is deterministic.
    pub fn weyl_orbit(&self, lambda: &Weight) -> Result<Vec<(Weight, ReducedWord)>> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.0.clone()));
        }
        let mut words: std::collections::BTreeMap<Weight, ReducedWord> =
            std::collections::BTreeMap::new();
        let mut out = vec![(lambda.clone(), ReducedWord::default())];
        words.insert(lambda.clone(), ReducedWord::default());
        let mut frontier = vec![lambda.clone()];
        while !frontier.is_empty() {
            frontier.sort();
            let mut next = Vec::new();
            for mu in &frontier {
                let word_mu = words.get(mu).expect("frontier weight has a word").clone();
                for i in 1..=self.rank {
                    if mu.0[i - 1] > 0 {
                        let nu = self.reflect_unchecked(i, mu);
                        if !words.contains_key(&nu) {
                            let mut letters = Vec::with_capacity(word_mu.len() + 1);
                            letters.push(i);
                            letters.extend_from_slice(&word_mu.0);
                            let w = ReducedWord(letters);
                            words.insert(nu.clone(), w.clone());
                            out.push((nu.clone(), w));
                            next.push(nu);
                        }
                    }
                }
            }
            frontier = next;
        }
        Ok(out)
    }

    /// Order of the full Weyl group, from the closed formula for the type.
    pub fn weyl_order(&self) -> u64 {
        let n = self.rank as u32;
        match self.kind {
            Kind::A => factorial(n + 1),
            Kind::B | Kind::C => (1u64 << n) * factorial(n),
            Kind::D => (1u64 << (n - 1)) * factorial(n),
        }
    }

    /// Order of the stabilizer `W(lambda)`, the parabolic generated by the
    /// reflections fixing `lambda`. Computed from the sub-diagram on the
    /// nodes with vanishing coordinate, component by component.
    pub fn stabilizer_order(&self, lambda: &Weight) -> u64 {
        let nodes: Vec<usize> = (1..=self.rank).filter(|&i| lambda.0[i - 1] == 0).collect();
        let mut seen = vec![false; self.rank + 1];
        let mut order = 1u64;
        for &start in &nodes {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &nodes {
                    if !seen[w] && self.a(v, w) != 0 {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            order *= self.component_weyl_order(&comp);
        }
        order
    }

    fn component_weyl_order(&self, comp: &[usize]) -> u64 {
        let m = comp.len() as u32;
        let mut has_double_bond = false;
        let mut has_fork = false;
        for &v in comp {
            let mut deg = 0;
            for &w in comp {
                if v != w && self.a(v, w) != 0 {
                    deg += 1;
                    if self.a(v, w) * self.a(w, v) == 2 {
                        has_double_bond = true;
                    }
                }
            }
            if deg >= 3 {
                has_fork = true;
            }
        }
        if has_double_bond {
            (1u64 << m) * factorial(m)
        } else if has_fork {
            (1u64 << (m - 1)) * factorial(m)
        } else {
            factorial(m + 1)
        }
    }

    /// Positive roots in simple-root coordinates.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    fn enumerate_positive_roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut roots: std::collections::BTreeSet<Vec<i64>> = std::collections::BTreeSet::new();
        let mut frontier: Vec<Vec<i64>> = Vec::new();
        for i in 0..n {
            let mut c = vec![0i64; n];
            c[i] = 1;
            roots.insert(c.clone());
            frontier.push(c);
        }
        // closure under the simple reflections, staying positive
        while let Some(c) = frontier.pop() {
            let wt: Vec<i64> = (0..n)
                .map(|j| (0..n).map(|i| c[i] * self.cartan[j][i]).sum())
                .collect();
            for (i, &k) in wt.iter().enumerate() {
                if k < 0 {
                    let mut nc = c.clone();
                    nc[i] -= k;
                    if roots.insert(nc.clone()) {
                        frontier.push(nc);
                    }
                }
            }
        }
        roots.into_iter().collect()
    }

    /// Pairing `(mu, alpha)` for `mu` in weight coordinates and `alpha` in
    /// simple-root coordinates; always an integer.
    pub fn pair_root(&self, mu: &Weight, alpha: &[i64]) -> i64 {
        (0..self.rank)
            .map(|i| alpha[i] * self.d[i] * mu.0[i])
            .sum()
    }

    /// Half the squared length `(alpha, alpha)/2` of a root.
    pub fn root_norm_half(&self, alpha: &[i64]) -> i64 {
        let n = self.rank;
        let mut tot = 0i64;
        for i in 0..n {
            for j in 0..n {
                tot += alpha[i] * alpha[j] * self.d[i] * self.cartan[i][j];
            }
        }
        debug_assert!(tot % 2 == 0);
        tot / 2
    }

    /// Express `mu` in simple-root coordinates if it lies in the root lattice
    /// with the given sign constraint dropped; `None` if not in the lattice.
    pub fn root_coords(&self, mu: &Weight) -> Option<Vec<i64>> {
        // solve cartan^T c = mu by fraction-free elimination (ranks are small)
        let n = self.rank;
        let mut m = vec![vec![0i128; n + 1]; n];
        for r in 0..n {
            for c in 0..n {
                m[r][c] = self.cartan[r][c] as i128;
            }
            m[r][n] = mu.0[r] as i128;
        }
        for col in 0..n {
            let piv = (col..n).find(|&r| m[r][col] != 0)?;
            m.swap(col, piv);
            for r in 0..n {
                if r != col && m[r][col] != 0 {
                    let (a, b) = (m[col][col], m[r][col]);
                    for c in 0..=n {
                        m[r][c] = m[r][c] * a - m[col][c] * b;
                    }
                }
            }
        }
        let mut out = Vec::with_capacity(n);
        for r in 0..n {
            let (den, num) = (m[r][r], m[r][n]);
            if num % den != 0 {
                return None;
            }
            out.push((num / den) as i64);
        }
        Some(out)
    }

    /// Highest root in simple-root coordinates (the unique root of maximal height).
    pub fn highest_root(&self) -> Vec<i64> {
        self.positive_roots
            .iter()
            .max_by_key(|c| c.iter().sum::<i64>())
            .expect("nonempty root system")
            .clone()
    }

    fn check_invariants(&self) {
        let n = self.rank;
        for i in 1..=n {
            assert_eq!(self.a(i, i), 2);
            for j in 1..=n {
                if i != j {
                    assert!(self.a(i, j) <= 0);
                    assert_eq!(self.a(i, j) == 0, self.a(j, i) == 0);
                }
                assert_eq!(self.d(i) * self.a(i, j), self.d(j) * self.a(j, i));
            }
        }
        // hstar against 1 + sum of dual marks of the highest root
        let theta = self.highest_root();
        let dmax = *self.d.iter().max().unwrap();
        let mut s = 0i64;
        for i in 0..n {
            s += theta[i] * self.d[i];
        }
        assert_eq!(s % dmax, 0);
        let hdual = 1 + s / dmax;
        let expected = if self.kind == Kind::C { 2 * hdual } else { hdual };
        assert_eq!(self.hstar, expected, "hstar cross-check failed");
    }
}

fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}

fn build_cartan(kind: Kind, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    match kind {
        Kind::D => {
            // chain 1..n-2 with a fork at n-2
            for i in 0..n.saturating_sub(3) {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            if n >= 3 {
                a[n - 3][n - 2] = -1;
                a[n - 2][n - 3] = -1;
                a[n - 3][n - 1] = -1;
                a[n - 1][n - 3] = -1;
            }
        }
        _ => {
            for i in 0..n - 1 {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            if kind == Kind::B {
                a[n - 2][n - 1] = -1;
                a[n - 1][n - 2] = -2;
            } else if kind == Kind::C {
                a[n - 2][n - 1] = -2;
                a[n - 1][n - 2] = -1;
            }
        }
    }
    a
}

fn build_symmetrizer(kind: Kind, n: usize) -> Vec<i64> {
    match kind {
        Kind::A | Kind::D => vec![1; n],
        Kind::B => {
            let mut d = vec![2; n];
            d[n - 1] = 1;
            d
        }
        Kind::C => {
            let mut d = vec![1; n];
            d[n - 1] = 2;
            d
        }
    }
}
