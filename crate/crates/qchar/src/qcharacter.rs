//! Partition monomials, dominant loop weights, and full q-character assembly.
//!
//! Every dominant loop weight of a fundamental module is a closed-form
//! monomial attached to a partition from [`crate::partitions`], possibly with
//! a spin-node correction. The full character is the braid orbit of those
//! monomials over minimal-length coset representatives.

use std::collections::BTreeMap;

use crate::braid::{braid_apply_word, simple_l_root, wrj_word};
use crate::error::{Error, Result};
use crate::lweight::LWeight;
use crate::partitions::{
    enumerate_j, iota, sigma, supp_pm, Partition, PartitionCtx, Sign,
};
use crate::root_system::{Kind, RootSystem, Weight};

/// Nodes whose fundamental module has a single Weyl orbit of weights; the
/// q-character is then the bare braid orbit of the highest loop weight.
pub fn is_minuscule(rs: &RootSystem, i: usize) -> bool {
    match rs.kind() {
        Kind::A => true,
        Kind::B => i == rs.rank(),
        Kind::C => i == 1,
        Kind::D => i == 1 || i == rs.rank() - 1 || i == rs.rank(),
    }
}

/// The two-factor building block `pi_r(j, s)` with the quarter-integer shift
/// carried as `s4 = 4s`: `w[j; d1(i+j-2s-2r)]^{-1} w[j; d1(h-i-j+2s)]`.
/// `j = 0` gives the identity.
pub fn pi_factor(ctx: &PartitionCtx, j: usize, s4: i64) -> Result<LWeight> {
    if j == 0 {
        return Ok(LWeight::one());
    }
    ctx.root_system().check_node(j)?;
    let d1 = ctx.root_system().d(1);
    if (d1 * s4) % 2 != 0 {
        return Err(Error::FractionalExponent { s4 });
    }
    let half = d1 * s4 / 2;
    let (i, r, h) = (ctx.node() as i64, ctx.residue() as i64, ctx.root_system().hstar());
    let e_neg = d1 * (i + j as i64 - 2 * r) - half;
    let e_pos = d1 * (h - i - j as i64) + half;
    let mut out = LWeight::one();
    out.mul_gen(j, e_neg, -1);
    out.mul_gen(j, e_pos, 1);
    Ok(out)
}

/// The partition monomial `pi_r(p)`. Its weight projection is `w_r` for every
/// family member; equivalent type-D partitions produce equal monomials.
pub fn pi_of_partition(ctx: &PartitionCtx, p: &Partition) -> Result<LWeight> {
    if !ctx.admits(p) {
        return Err(Error::PartitionOutsideFamily(p.0.clone()));
    }
    let n = ctx.rank();
    let k = p.len();
    let d1 = ctx.root_system().d(1);
    let mut out = LWeight::one();
    if ctx.residue() > 0 {
        out.mul_gen(
            ctx.residue(),
            d1 * (ctx.node() as i64 - ctx.residue() as i64),
            1,
        );
    }
    let spin_tail = match ctx.kind() {
        Kind::B => p.last() == Some(n),
        Kind::D => p.last() == Some(n - 1),
        _ => false,
    };
    let plain = if spin_tail && ctx.kind() == Kind::B { k - 1 } else { k };
    for (s, &js) in p.0.iter().take(plain).enumerate() {
        let s = s as i64 + 1;
        out = out.mul(&pi_factor(ctx, js - 1, 4 * (s - 1))?);
        out = out.mul(&pi_factor(ctx, js, 4 * s)?.inv());
    }
    if spin_tail {
        match ctx.kind() {
            Kind::B => {
                out = out.mul(&pi_factor(ctx, n - 1, 4 * (k as i64 - 1))?);
                out = out.mul(&pi_factor(ctx, n, 4 * k as i64 - 1)?.inv());
            }
            Kind::D => {
                out = out.mul(&pi_factor(ctx, n, 4 * k as i64 + 2)?.inv());
            }
            _ => unreachable!(),
        }
    }
    Ok(out)
}

/// The type-B spin correction `pi_r(p, *)`. It is nontrivial exactly when the
/// partition length satisfies `2k != i - r` and the last part is not the spin
/// node. (In the source formulation the length cutoff is the rational
/// `(i-r)/2`, which only coincides with its floor for even `i - r`.)
pub fn pi_star(ctx: &PartitionCtx, p: &Partition) -> Result<LWeight> {
    require_kind(ctx, Kind::B)?;
    let n = ctx.rank();
    let k = p.len() as i64;
    let (i, r) = (ctx.node() as i64, ctx.residue() as i64);
    if 2 * k == i - r || p.last() == Some(n) {
        return Ok(LWeight::one());
    }
    let n_i = n as i64;
    let mut out = LWeight::one();
    out.mul_gen(n, 2 * (n_i - i + 2 * k) - 1, 1);
    out.mul_gen(n, 2 * (n_i + i - 2 * k - 2 * r) - 1, -1);
    Ok(out)
}

/// The type-D spin corrections `pi_r(p, +-)`, supported on the spin node `n`
/// (plus) or `n - 1` (minus). They depend on the partition only through its
/// length and vanish at the maximal length.
pub fn pi_pm(ctx: &PartitionCtx, p: &Partition, sign: Sign) -> Result<LWeight> {
    require_kind(ctx, Kind::D)?;
    let n = ctx.rank();
    let k = p.len() as i64;
    let (i, r) = (ctx.node() as i64, ctx.residue() as i64);
    let node = match sign {
        Sign::Plus => n,
        Sign::Minus => n - 1,
    };
    let e1 = n as i64 - i + 2 * k - 1;
    let e2 = n as i64 + i - 2 * r - 2 * k - 1;
    if e1 == e2 {
        return Ok(LWeight::one());
    }
    let mut out = LWeight::one();
    out.mul_gen(node, e1, 1);
    out.mul_gen(node, e2, -1);
    Ok(out)
}

fn require_kind(ctx: &PartitionCtx, expected: Kind) -> Result<()> {
    if ctx.kind() == expected {
        Ok(())
    } else {
        Err(Error::WrongKind { expected, got: ctx.kind() })
    }
}

/// The dominant monomial of a partition with its correction attached:
/// `pi(p) pi(p,*)` for B, `pi(p) pi(p,sign)` for D (sign ignored at maximal
/// length), plain `pi(p)` for C.
pub fn corrected_monomial(
    ctx: &PartitionCtx,
    p: &Partition,
    sign: Option<Sign>,
) -> Result<LWeight> {
    let base = pi_of_partition(ctx, p)?;
    match ctx.kind() {
        Kind::B => Ok(base.mul(&pi_star(ctx, p)?)),
        Kind::D => match sign {
            Some(s) if p.len() < ctx.max_len() => Ok(base.mul(&pi_pm(ctx, p, s)?)),
            _ => Ok(base),
        },
        _ => Ok(base),
    }
}

/// One dominant loop weight at residue `r`, with full provenance.
#[derive(Debug, Clone)]
pub struct DominantEntry {
    pub monomial: LWeight,
    /// Dimension of the attached loop-weight space: `2^{mult_exponent}`.
    pub multiplicity: u64,
    /// The partitions producing this monomial (an equivalence class for D,
    /// a singleton otherwise), sorted.
    pub partitions: Vec<Partition>,
    /// Spin-correction variant for type D below maximal length.
    pub sign: Option<Sign>,
    pub mult_exponent: u32,
}

/// All dominant loop weights of the fundamental module at node `i`, keyed by
/// the residue `r` of their classical weight `w_r`.
///
/// C and B produce one entry per partition, each of multiplicity one. D
/// produces one entry per partition class and sign variant, of multiplicity
/// `2^{M_p}`; at maximal length the two variants coincide and are unsigned.
pub fn dominant_lweights(
    rs: &RootSystem,
    i: usize,
) -> Result<BTreeMap<usize, Vec<DominantEntry>>> {
    let mut out = BTreeMap::new();
    for r in PartitionCtx::residues(rs, i) {
        let ctx = PartitionCtx::new(rs, i, r)?;
        out.insert(r, dominant_entries(&ctx)?);
    }
    Ok(out)
}

/// The dominant entries of a single residue context.
pub fn dominant_entries(ctx: &PartitionCtx) -> Result<Vec<DominantEntry>> {
    let mut entries = Vec::new();
    for (k, list) in enumerate_j(ctx) {
        match ctx.kind() {
            Kind::D => {
                let mut by_value: BTreeMap<LWeight, Vec<Partition>> = BTreeMap::new();
                for p in list {
                    by_value
                        .entry(pi_of_partition(ctx, &p)?)
                        .or_default()
                        .push(p);
                }
                let mut classes: Vec<(LWeight, Vec<Partition>)> = by_value.into_iter().collect();
                classes.sort_by(|a, b| a.1.cmp(&b.1));
                for (base, class) in classes {
                    let me = crate::partitions::mult_exponent(ctx, &class[0])?;
                    let signs: &[Option<Sign>] = if k < ctx.max_len() {
                        &[Some(Sign::Plus), Some(Sign::Minus)]
                    } else {
                        &[None]
                    };
                    for &sign in signs {
                        let monomial = match sign {
                            Some(s) => base.mul(&pi_pm(ctx, &class[0], s)?),
                            None => base.clone(),
                        };
                        entries.push(DominantEntry {
                            monomial,
                            multiplicity: 1 << me,
                            partitions: class.clone(),
                            sign,
                            mult_exponent: me,
                        });
                    }
                }
            }
            _ => {
                for p in list {
                    entries.push(DominantEntry {
                        monomial: corrected_monomial(ctx, &p, None)?,
                        multiplicity: 1,
                        partitions: vec![p],
                        sign: None,
                        mult_exponent: 0,
                    });
                }
            }
        }
    }
    Ok(entries)
}

/// A q-character: loop weights with positive multiplicities, plus the data
/// identifying the module it belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LCharacter {
    pub kind: Kind,
    pub rank: usize,
    pub node: usize,
    pub base_exp: i64,
    pub entries: BTreeMap<LWeight, u64>,
}

impl LCharacter {
    /// Total multiplicity.
    pub fn mass(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Multiplicities pushed through the weight homomorphism.
    pub fn weight_multiplicities(&self) -> BTreeMap<Weight, u64> {
        let mut out = BTreeMap::new();
        for (x, m) in &self.entries {
            *out.entry(x.weight(self.rank)).or_insert(0) += m;
        }
        out
    }
}

/// The q-character of the fundamental module at node `i`, with every spectral
/// exponent shifted by `base`.
///
/// Minuscule nodes take the bare braid orbit of the highest loop weight. The
/// remaining nodes sum braid images of every corrected partition monomial
/// (both sign variants below maximal length for D); collecting equal
/// monomials reproduces the type-D multiplicities.
pub fn full_character(rs: &RootSystem, i: usize, base: i64) -> Result<LCharacter> {
    rs.check_node(i)?;
    let mut entries: BTreeMap<LWeight, u64> = BTreeMap::new();
    if is_minuscule(rs, i) {
        let top = crate::lweight::gen(rs, i, 0)?;
        for (_, word) in rs.weyl_orbit(&Weight::fundamental(rs.rank(), i))? {
            let img = braid_apply_word(rs, &word.0, &top)?;
            *entries.entry(img.shift(base)).or_insert(0) += 1;
        }
    } else {
        for r in PartitionCtx::residues(rs, i) {
            let ctx = PartitionCtx::new(rs, i, r)?;
            let mut monomials: Vec<LWeight> = Vec::new();
            for (k, list) in enumerate_j(&ctx) {
                for p in &list {
                    match ctx.kind() {
                        Kind::D if k < ctx.max_len() => {
                            monomials.push(corrected_monomial(&ctx, p, Some(Sign::Plus))?);
                            monomials.push(corrected_monomial(&ctx, p, Some(Sign::Minus))?);
                        }
                        _ => monomials.push(corrected_monomial(&ctx, p, None)?),
                    }
                }
            }
            for (_, word) in rs.weyl_orbit(&Weight::fundamental(rs.rank(), r))? {
                for x in &monomials {
                    let img = braid_apply_word(rs, &word.0, x)?;
                    *entries.entry(img.shift(base)).or_insert(0) += 1;
                }
            }
        }
    }
    Ok(LCharacter {
        kind: rs.kind(),
        rank: rs.rank(),
        node: i,
        base_exp: base,
        entries,
    })
}

/// Which descent identity applies to a partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderCase {
    /// Type C: drop the last part, descend two residues.
    C,
    /// Type B, length below the rational cutoff, last part off the spin node:
    /// descend one residue through the spin word.
    BShort,
    /// Type B, last part on the spin node.
    BSpin,
    /// Type B at the even-gap cutoff `2k = i - r`: descend two residues.
    BFull,
    /// Type D: descend two residues through the chain of `j` in the positive
    /// support (requires empty negative support).
    D { j: usize, sign: Sign },
}

/// Verify one descent identity exactly: the corrected monomial at residue `r`
/// times a simple loop root equals the braid image of the corrected monomial
/// of the derived partition at the higher residue, and the coordinate of the
/// braid image at the descent node factors as displayed. Errors when the case
/// hypotheses do not hold for `(ctx, p)`.
pub fn ladder_check(ctx: &PartitionCtx, p: &Partition, case: LadderCase) -> Result<bool> {
    if !ctx.admits(p) {
        return Err(Error::PartitionOutsideFamily(p.0.clone()));
    }
    let rs = ctx.root_system();
    let n = rs.rank();
    let (i, r, k) = (ctx.node(), ctx.residue(), p.len());
    let (n_i, i_i, r_i, k_i) = (n as i64, i as i64, r as i64, k as i64);
    let bad = || Error::PartitionOutsideFamily(p.0.clone());
    match case {
        LadderCase::C => {
            require_kind(ctx, Kind::C)?;
            if k == 0 {
                return Err(bad());
            }
            let j = p.last().unwrap();
            let up = PartitionCtx::new(rs, i, r + 2)?;
            let pp = Partition(p.0[..k - 1].iter().map(|&x| x + 2).collect());
            let m = ctx.max_len() as i64;
            let a = 2 * n_i + i_i - j as i64 - 2 * r_i - 2 * m;
            let t = braid_apply_word(rs, &wrj_word(rs, r + 2, j)?.0, &pi_of_partition(&up, &pp)?)?;
            let lhs = t.mul(&simple_l_root(rs, j, a)?.inv());
            let rhs = pi_of_partition(ctx, p)?;
            let coord_ok = coordinate_is(&t, j, &[i_i + j as i64 - 2 * r_i - 2 * m, a]);
            Ok(lhs == rhs && coord_ok)
        }
        LadderCase::BShort => {
            require_kind(ctx, Kind::B)?;
            if 2 * k_i >= i_i - r_i || p.last() == Some(n) {
                return Err(bad());
            }
            let up = PartitionCtx::new(rs, i, r + 1)?;
            let pp = Partition(p.0.iter().map(|&x| x + 1).collect());
            let a = 2 * (n_i + i_i - 2 * r_i - 2 * k_i) - 3;
            let t = braid_apply_word(
                rs,
                &wrj_word(rs, r + 1, n)?.0,
                &corrected_monomial(&up, &pp, None)?,
            )?;
            let lhs = t.mul(&simple_l_root(rs, n, a)?.inv());
            let rhs = corrected_monomial(ctx, p, None)?;
            // the spin coordinate branches on whether the lifted partition
            // still carries a nontrivial star factor
            let second = if p.last() == Some(n - 1) || 2 * k_i < i_i - r_i - 1 {
                2 * (n_i - i_i + 2 * k_i) - 1
            } else {
                2 * (n_i + i_i - 2 * r_i - 2 * k_i) - 5
            };
            let coord_ok = coordinate_is(&t, n, &[a, second]);
            Ok(lhs == rhs && coord_ok)
        }
        LadderCase::BSpin => {
            require_kind(ctx, Kind::B)?;
            if p.last() != Some(n) {
                return Err(bad());
            }
            let up = PartitionCtx::new(rs, i, r + 1)?;
            let pp = Partition(p.0[..k - 1].iter().map(|&x| x + 1).collect());
            let a = 2 * (n_i - i_i + 2 * k_i) - 5;
            let t = braid_apply_word(
                rs,
                &wrj_word(rs, r + 1, n)?.0,
                &corrected_monomial(&up, &pp, None)?,
            )?;
            let lhs = t.mul(&simple_l_root(rs, n, a)?.inv());
            let rhs = corrected_monomial(ctx, p, None)?;
            let coord_ok = coordinate_is(&t, n, &[a, 2 * (n_i + i_i - 2 * r_i - 2 * k_i) + 1]);
            Ok(lhs == rhs && coord_ok)
        }
        LadderCase::BFull => {
            require_kind(ctx, Kind::B)?;
            if 2 * k_i != i_i - r_i || k == 0 || p.last() == Some(n) {
                return Err(bad());
            }
            let j = p.last().unwrap();
            let up = PartitionCtx::new(rs, i, r + 2)?;
            let pp = Partition(p.0[..k - 1].iter().map(|&x| x + 2).collect());
            let q1 = rs.d(1);
            let a = q1 * (2 * n_i - j as i64 - r_i - 3);
            let t = braid_apply_word(
                rs,
                &wrj_word(rs, r + 2, j)?.0,
                &corrected_monomial(&up, &pp, None)?,
            )?;
            let lhs = t.mul(&simple_l_root(rs, j, a)?.inv());
            let rhs = corrected_monomial(ctx, p, None)?;
            let coord_ok = coordinate_is(&t, j, &[q1 * (j as i64 - r_i), a]);
            Ok(lhs == rhs && coord_ok)
        }
        LadderCase::D { j, sign } => {
            require_kind(ctx, Kind::D)?;
            if !supp_pm(ctx, p, Sign::Minus)?.is_empty() {
                return Err(bad());
            }
            if !supp_pm(ctx, p, Sign::Plus)?.contains(&j) {
                return Err(Error::NotInSupport(j));
            }
            let l = sigma(p, j, Sign::Plus)?;
            let il = iota(p, l)? as i64;
            let up = PartitionCtx::new(rs, i, r + 2)?;
            let mut parts: Vec<usize> = Vec::new();
            for &jp in &p.0 {
                if r < jp && jp < l {
                    parts.push(jp + 2);
                } else if l < jp && jp < n {
                    parts.push(jp);
                }
            }
            parts.sort_unstable();
            let pp = Partition(parts);
            let a = 2 * n_i - i_i - l as i64 + 2 * il - 4;
            // the descent word carries each spin letter once and exchanges
            // the two spin corrections, so the lifted partition takes the
            // opposite sign
            let lifted_sign = if pp.len() < up.max_len() {
                Some(sign.flipped())
            } else {
                None
            };
            let t = braid_apply_word(
                rs,
                &wrj_word(rs, r + 2, l)?.0,
                &corrected_monomial(&up, &pp, lifted_sign)?,
            )?;
            let lhs = t.mul(&simple_l_root(rs, l, a)?.inv());
            let own_sign = if k < ctx.max_len() { Some(sign) } else { None };
            let rhs = corrected_monomial(ctx, p, own_sign)?;
            let mut coord_ok = coordinate_is(&t, l, &[a, i_i + l as i64 - 2 * r_i - 2 * il]);
            if l == j {
                // chain of length one: the coordinate is a perfect square
                coord_ok = coord_ok && coordinate_is(&t, l, &[n_i - r_i - 2, n_i - r_i - 2]);
            }
            Ok(lhs == rhs && coord_ok)
        }
    }
}

/// True when coordinate `node` of `x` is exactly the product of the factors
/// `(1 - q^e u)` over the given exponents (with multiplicity, all positive).
fn coordinate_is(x: &LWeight, node: usize, exponents: &[i64]) -> bool {
    let mut want: BTreeMap<i64, i64> = BTreeMap::new();
    for &e in exponents {
        *want.entry(e).or_insert(0) += 1;
    }
    x.coordinate(node).factors == want
}

/// Every applicable `(case, partition)` pair for one context, used by the
/// verification sweep.
pub fn ladder_cases(ctx: &PartitionCtx) -> Result<Vec<(Partition, LadderCase)>> {
    let mut out = Vec::new();
    let (i, r, n) = (ctx.node() as i64, ctx.residue() as i64, ctx.rank());
    for (_, list) in enumerate_j(ctx) {
        for p in list {
            let k = p.len() as i64;
            match ctx.kind() {
                Kind::C => {
                    if !p.is_empty() {
                        out.push((p, LadderCase::C));
                    }
                }
                Kind::B => {
                    if p.last() == Some(n) {
                        out.push((p, LadderCase::BSpin));
                    } else if 2 * k == i - r {
                        if k > 0 {
                            out.push((p, LadderCase::BFull));
                        }
                    } else {
                        out.push((p, LadderCase::BShort));
                    }
                }
                Kind::D => {
                    if supp_pm(ctx, &p, Sign::Minus)?.is_empty() {
                        for &j in supp_pm(ctx, &p, Sign::Plus)?.iter() {
                            out.push((p.clone(), LadderCase::D { j, sign: Sign::Plus }));
                            out.push((p.clone(), LadderCase::D { j, sign: Sign::Minus }));
                        }
                    }
                }
                Kind::A => {}
            }
        }
    }
    Ok(out)
}
