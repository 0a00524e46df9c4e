//! Executable identity suite: every combinatorial statement the library
//! relies on, run exhaustively over desk-scale ranks with reproducible
//! randomness where sampling is involved.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::braid::{braid_apply, braid_apply_inv, braid_apply_word, closed_trj, wrj_word};
use crate::classical;
use crate::error::Result;
use crate::lweight::LWeight;
use crate::partitions::{
    binom, count_j, enumerate_j, equivalence_class, mult_exponent, supp_pm, Partition,
    PartitionCtx, Sign,
};
use crate::qcharacter::{
    dominant_entries, full_character, is_minuscule, ladder_cases, ladder_check, pi_of_partition,
};
use crate::root_system::{Kind, RootSystem, Weight};

/// Outcome of one named check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyReport {
    pub check: String,
    pub params: String,
    pub cases: u64,
    pub passed: bool,
    /// Minimal failing instance (smallest rank first, then lexicographic).
    pub counterexample: Option<String>,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    pub fn status_line(&self) -> String {
        let mut s = format!(
            "{:<8} {:>6} cases  {:>6} ms  {}",
            self.check,
            self.cases,
            self.elapsed_ms,
            if self.passed { "pass" } else { "FAIL" }
        );
        if let Some(ce) = &self.counterexample {
            let _ = write!(s, "  ({ce})");
        }
        s
    }
}

/// Options shared by the suites.
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub max_rank: usize,
    pub samples: u32,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_rank: 5, samples: 100, seed: 0 }
    }
}

struct Recorder {
    cases: u64,
    counterexample: Option<String>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { cases: 0, counterexample: None }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    fn finish(self, check: &str, params: String, start: Instant) -> VerifyReport {
        VerifyReport {
            check: check.to_string(),
            params,
            cases: self.cases,
            passed: self.counterexample.is_none(),
            counterexample: self.counterexample,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }
}

fn each_system(max_rank: usize) -> Vec<RootSystem> {
    let mut out = Vec::new();
    for (kind, lo) in [(Kind::A, 1), (Kind::B, 2), (Kind::C, 2), (Kind::D, 4)] {
        for n in lo..=max_rank {
            out.push(RootSystem::new(kind, n).expect("valid rank"));
        }
    }
    out
}

/// Enumerated partition-family sizes against the closed binomial formulas,
/// including the type-D three-term identity.
pub fn verify_counts(max_rank: usize) -> VerifyReport {
    let start = Instant::now();
    let mut rec = Recorder::new();
    for rs in each_system(max_rank) {
        if rs.kind() == Kind::A {
            continue;
        }
        let n = rs.rank() as u64;
        for i in 1..=rs.rank() {
            for r in PartitionCtx::residues(&rs, i) {
                let ctx = match PartitionCtx::new(&rs, i, r) {
                    Ok(c) => c,
                    Err(_) => continue,
                };
                rec.case(count_j(&ctx).is_ok(), || {
                    format!("{}{} i={i} r={r}: enumeration vs closed form", rs.kind(), n)
                });
                if rs.kind() == Kind::D {
                    let by_len = enumerate_j(&ctx);
                    let m = ctx.max_len();
                    let lhs = by_len[&m].len() as u64
                        + 2 * (0..m).map(|k| by_len[&k].len() as u64).sum::<u64>();
                    let rhs: u64 = (0..=m as u64).map(|l| binom(n - r as u64, l)).sum();
                    rec.case(lhs == rhs, || {
                        format!("D{n} i={i} r={r}: three-term identity {lhs} != {rhs}")
                    });
                }
            }
        }
    }
    rec.finish("counts", format!("max_rank={max_rank}"), start)
}

/// Character mass against the Weyl dimension oracle, and per-residue dominant
/// mass against the Freudenthal oracle.
pub fn verify_dimensions(max_rank: usize) -> VerifyReport {
    let start = Instant::now();
    let mut rec = Recorder::new();
    for rs in each_system(max_rank) {
        for i in 1..=rs.rank() {
            rec_dimensions(&mut rec, &rs, i);
        }
    }
    rec.finish("dims", format!("max_rank={max_rank}"), start)
}

fn rec_dimensions(rec: &mut Recorder, rs: &RootSystem, i: usize) {
    let label = |what: &str| format!("{}{} i={i}: {what}", rs.kind(), rs.rank());
    let ch = full_character(rs, i, 0).expect("valid node");
    let expect: u64 = classical::classical_decomposition(rs, i)
        .expect("valid node")
        .iter()
        .map(|lam| classical::weyl_dim(rs, lam).expect("dominant"))
        .sum();
    rec.case(ch.mass() == expect, || {
        format!("{} mass {} != {}", label("total"), ch.mass(), expect)
    });
    if is_minuscule(rs, i) {
        return;
    }
    // dominant mass per residue
    let mut oracle: BTreeMap<usize, u64> = BTreeMap::new();
    for lam in classical::classical_decomposition(rs, i).expect("valid node") {
        for (mu, m) in classical::dominant_char(rs, &lam).expect("dominant") {
            if let Some(r) = fundamental_index(&mu) {
                *oracle.entry(r).or_insert(0) += m;
            }
        }
    }
    for (r, entries) in crate::qcharacter::dominant_lweights(rs, i).expect("in range") {
        let mass: u64 = entries.iter().map(|e| e.multiplicity).sum();
        rec.case(mass == *oracle.get(&r).unwrap_or(&0), || {
            format!("{} at r={r}: {mass} != {:?}", label("dominant mass"), oracle.get(&r))
        });
    }
}

fn fundamental_index(mu: &Weight) -> Option<usize> {
    if mu.is_zero() {
        return Some(0);
    }
    let mut idx = None;
    for (pos, &x) in mu.0.iter().enumerate() {
        match x {
            0 => {}
            1 if idx.is_none() => idx = Some(pos + 1),
            _ => return None,
        }
    }
    idx
}

/// Weight pushforward of the q-character against the classical character,
/// and braid/Weyl equivariance of the dominant loop-weight sets.
pub fn verify_weight_projection(max_rank: usize) -> VerifyReport {
    let start = Instant::now();
    let mut rec = Recorder::new();
    for rs in each_system(max_rank) {
        for i in 1..=rs.rank() {
            let label = |what: &str| format!("{}{} i={i}: {what}", rs.kind(), rs.rank());
            let ch = full_character(&rs, i, 0).expect("valid node");
            let mut oracle: BTreeMap<Weight, u64> = BTreeMap::new();
            for lam in classical::classical_decomposition(&rs, i).expect("valid node") {
                for (mu, m) in classical::full_char(&rs, &lam).expect("dominant") {
                    *oracle.entry(mu).or_insert(0) += m;
                }
            }
            rec.case(ch.weight_multiplicities() == oracle, || label("weight projection"));
            // images of dominant entries land at w * w_r
            if !is_minuscule(&rs, i) {
                for (r, entries) in crate::qcharacter::dominant_lweights(&rs, i).expect("in range")
                {
                    let lam = Weight::fundamental(rs.rank(), r);
                    for (mu, word) in rs.weyl_orbit(&lam).expect("dominant") {
                        for e in &entries {
                            let img = braid_apply_word(&rs, &word.0, &e.monomial)
                                .expect("valid word");
                            rec.case(img.weight(rs.rank()) == mu, || {
                                format!("{} r={r} w={:?}", label("equivariance"), word.0)
                            });
                        }
                    }
                }
            }
        }
    }
    rec.finish("proj", format!("max_rank={max_rank}"), start)
}

/// Random loop weight with the documented distribution: length geometric of
/// mean 4, nodes uniform, exponents uniform in [-5, 5], powers in {-2,-1,1,2}.
pub fn random_lweight(rng: &mut ChaCha8Rng, rank: usize) -> LWeight {
    let mut len = 1;
    while rng.gen_range(0..4u8) != 0 {
        len += 1;
    }
    let mut x = LWeight::one();
    for _ in 0..len {
        let node = rng.gen_range(1..=rank);
        let exp = rng.gen_range(-5..=5i64);
        let pow = *[-2i64, -1, 1, 2].get(rng.gen_range(0..4usize)).unwrap();
        x.mul_gen(node, exp, pow);
    }
    x
}

/// Braid relations on seeded random loop weights, generator invertibility,
/// the closed evaluation tables, and the reflection identities of the
/// descent words.
pub fn verify_braid_and_closed_forms(max_rank: usize, samples: u32, seed: u64) -> VerifyReport {
    let start = Instant::now();
    let mut rec = Recorder::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for rs in each_system(max_rank) {
        let n = rs.rank();
        for i in 1..=n {
            for j in i + 1..=n {
                let m = rs.a(i, j) * rs.a(j, i);
                for s in 0..samples {
                    let x = random_lweight(&mut rng, n);
                    let (lhs, rhs) = match m {
                        0 => (
                            braid_apply_word(&rs, &[i, j], &x),
                            braid_apply_word(&rs, &[j, i], &x),
                        ),
                        1 => (
                            braid_apply_word(&rs, &[i, j, i], &x),
                            braid_apply_word(&rs, &[j, i, j], &x),
                        ),
                        2 => (
                            braid_apply_word(&rs, &[i, j, i, j], &x),
                            braid_apply_word(&rs, &[j, i, j, i], &x),
                        ),
                        _ => unreachable!("classical bonds"),
                    };
                    rec.case(lhs == rhs, || {
                        format!("{}{} relation ({i},{j}) sample {s}", rs.kind(), n)
                    });
                }
            }
            // identity is fixed, and T_i round-trips on random input
            rec.case(
                braid_apply(&rs, i, &LWeight::one()).expect("node").is_one(),
                || format!("{}{} T_{i}(1)", rs.kind(), n),
            );
            let x = random_lweight(&mut rng, n);
            let round = braid_apply_inv(&rs, i, &braid_apply(&rs, i, &x).expect("node"))
                .expect("node");
            rec.case(round == x, || format!("{}{} T_{i} round-trip", rs.kind(), n));
        }
        // weight equivariance of random words on random loop weights
        for s in 0..samples.min(20) {
            let x = random_lweight(&mut rng, n);
            let len = rng.gen_range(0..=6usize);
            let word: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=n)).collect();
            let img = braid_apply_word(&rs, &word, &x).expect("valid word");
            let w = rs.apply_word(&word, &x.weight(n)).expect("valid word");
            rec.case(img.weight(n) == w, || {
                format!("{}{} wt equivariance sample {s}", rs.kind(), n)
            });
        }
        if rs.kind() == Kind::A {
            continue;
        }
        for r in 1..=n {
            for j in 1..=n {
                let word = match wrj_word(&rs, r, j) {
                    Ok(w) => w,
                    Err(_) => continue,
                };
                // reflection identity of the word
                let img = rs
                    .apply_word(&word.0, &Weight::fundamental(n, r))
                    .expect("valid word");
                let target = if rs.kind() == Kind::B && j == n {
                    Weight::fundamental(n, r - 1).add(&rs.simple_root(n))
                } else {
                    Weight::fundamental(n, r - 2).add(&rs.simple_root(j))
                };
                rec.case(img == target, || {
                    format!("{}{} w_({r},{j}) reflection identity", rs.kind(), n)
                });
                for l in 1..=n {
                    for k in -3..=3 {
                        let cf = match closed_trj(&rs, r, j, l, k) {
                            Ok(v) => v,
                            Err(_) => continue,
                        };
                        let direct =
                            braid_apply_word(&rs, &word.0, &LWeight::generator(l, k))
                                .expect("valid word");
                        rec.case(cf == direct, || {
                            format!("{}{} T_({r},{j}) on w[{l};{k}]", rs.kind(), n)
                        });
                    }
                }
            }
        }
    }
    rec.finish(
        "braid",
        format!("max_rank={max_rank} samples={samples} seed={seed}"),
        start,
    )
}

/// Type-D class structure (flip classes against value grouping, class sizes,
/// collected multiplicities) and every descent identity of all three types.
pub fn verify_dn_classes_and_ladders(max_rank: usize) -> VerifyReport {
    let start = Instant::now();
    let mut rec = Recorder::new();
    for rs in each_system(max_rank) {
        let n = rs.rank();
        match rs.kind() {
            Kind::A => continue,
            Kind::D => {
                for i in 2..=n.saturating_sub(2) {
                    for r in PartitionCtx::residues(&rs, i) {
                        let ctx = match PartitionCtx::new(&rs, i, r) {
                            Ok(c) => c,
                            Err(_) => continue,
                        };
                        rec_dn_classes(&mut rec, &ctx);
                    }
                    rec_collected_multiplicities(&mut rec, &rs, i);
                }
            }
            _ => {
                for i in 1..=n {
                    if is_minuscule(&rs, i) {
                        continue;
                    }
                    rec_injectivity(&mut rec, &rs, i);
                    rec_collected_multiplicities(&mut rec, &rs, i);
                }
            }
        }
        // descent identities for every applicable (ctx, partition, case)
        for i in 1..=n {
            if is_minuscule(&rs, i) {
                continue;
            }
            for r in PartitionCtx::residues(&rs, i) {
                if r == i {
                    continue;
                }
                let ctx = match PartitionCtx::new(&rs, i, r) {
                    Ok(c) => c,
                    Err(_) => continue,
                };
                for (p, case) in ladder_cases(&ctx).expect("valid ctx") {
                    rec.case(
                        ladder_check(&ctx, &p, case).unwrap_or(false),
                        || format!("{}{} i={i} r={r} {p} {case:?}", rs.kind(), n),
                    );
                }
            }
        }
    }
    rec.finish("classes", format!("max_rank={max_rank}"), start)
}

fn rec_dn_classes(rec: &mut Recorder, ctx: &PartitionCtx) {
    let label = format!("D{} i={} r={}", ctx.rank(), ctx.node(), ctx.residue());
    for (_, list) in enumerate_j(ctx) {
        let mut by_value: BTreeMap<LWeight, Vec<Partition>> = BTreeMap::new();
        for p in &list {
            by_value
                .entry(pi_of_partition(ctx, p).expect("family member"))
                .or_default()
                .push(p.clone());
        }
        for (_, group) in by_value {
            let class = equivalence_class(ctx, &group[0]).expect("type D");
            rec.case(
                class.iter().cloned().collect::<Vec<_>>() == group,
                || format!("{label} {}: flip class != value class", group[0]),
            );
            let me = mult_exponent(ctx, &group[0]).expect("type D");
            rec.case(group.len() as u64 == 1 << me, || {
                format!("{label} {}: class size != 2^{me}", group[0])
            });
            let plus = supp_pm(ctx, &group[0], Sign::Plus).expect("type D").len();
            let minus = supp_pm(ctx, &group[0], Sign::Minus).expect("type D").len();
            rec.case(me as usize == plus + minus, || {
                format!("{label} {}: exponent != |supp+|+|supp-|", group[0])
            });
        }
    }
}

fn rec_injectivity(rec: &mut Recorder, rs: &RootSystem, i: usize) {
    for r in PartitionCtx::residues(rs, i) {
        let ctx = match PartitionCtx::new(rs, i, r) {
            Ok(c) => c,
            Err(_) => continue,
        };
        let mut seen: BTreeMap<LWeight, Partition> = BTreeMap::new();
        for (_, list) in enumerate_j(&ctx) {
            for p in list {
                let v = crate::qcharacter::corrected_monomial(&ctx, &p, None)
                    .expect("family member");
                let dup = seen.insert(v, p.clone());
                rec.case(dup.is_none(), || {
                    format!(
                        "{}{} i={i} r={r}: {} and {:?} share a monomial",
                        rs.kind(),
                        rs.rank(),
                        p,
                        dup
                    )
                });
            }
        }
    }
}

/// Collected multiplicities of the assembled character are exactly the class
/// sizes: powers of two for D, all ones for B and C.
fn rec_collected_multiplicities(rec: &mut Recorder, rs: &RootSystem, i: usize) {
    let ch = full_character(rs, i, 0).expect("valid node");
    let label = format!("{}{} i={i}", rs.kind(), rs.rank());
    if rs.kind() != Kind::D {
        rec.case(ch.entries.values().all(|&m| m == 1), || {
            format!("{label}: collected multiplicity above 1")
        });
        return;
    }
    let mut expected: BTreeMap<u64, u64> = BTreeMap::new();
    for r in PartitionCtx::residues(rs, i) {
        let ctx = PartitionCtx::new(rs, i, r).expect("in range");
        let orbit = rs
            .weyl_orbit(&Weight::fundamental(rs.rank(), r))
            .expect("dominant")
            .len() as u64;
        for e in dominant_entries(&ctx).expect("in range") {
            *expected.entry(e.multiplicity).or_insert(0) += orbit;
        }
    }
    let mut got: BTreeMap<u64, u64> = BTreeMap::new();
    for &m in ch.entries.values() {
        *got.entry(m).or_insert(0) += 1;
    }
    rec.case(got == expected, || {
        format!("{label}: multiplicity histogram {got:?} != {expected:?}")
    });
}

/// The five suites by CLI name.
pub const SUITES: &[&str] = &["counts", "dims", "proj", "braid", "classes"];

/// Run one suite (or `"all"`).
pub fn run_suite(name: &str, opts: VerifyOptions) -> Result<Vec<VerifyReport>> {
    let reports = match name {
        "counts" => vec![verify_counts(opts.max_rank.max(2))],
        "dims" => vec![verify_dimensions(opts.max_rank)],
        "proj" => vec![verify_weight_projection(opts.max_rank)],
        "braid" => vec![verify_braid_and_closed_forms(opts.max_rank, opts.samples, opts.seed)],
        "classes" => vec![verify_dn_classes_and_ladders(opts.max_rank)],
        "all" => {
            let mut out = Vec::new();
            for s in SUITES {
                out.extend(run_suite(s, opts)?);
            }
            out
        }
        other => return Err(crate::error::Error::UnknownSuite(other.to_string())),
    };
    Ok(reports)
}

/// Identity families covered by the suite, paired with the check that owns
/// them. The manifest test fails if a family loses its check.
pub const COVERAGE: &[(&str, &str)] = &[
    ("family-count.closed-form.C", "counts"),
    ("family-count.closed-form.B", "counts"),
    ("family-count.closed-form.D", "counts"),
    ("family-count.three-term.D", "counts"),
    ("mass.dimension-oracle", "dims"),
    ("mass.dominant-per-residue", "dims"),
    ("weights.pushforward", "proj"),
    ("weights.orbit-equivariance", "proj"),
    ("braid.relations", "braid"),
    ("braid.invertibility", "braid"),
    ("braid.weight-equivariance", "braid"),
    ("descent-word.reflection-identity", "braid"),
    ("descent-word.closed-evaluation", "braid"),
    ("classes.flips-equal-value-grouping", "classes"),
    ("classes.size-power-of-two", "classes"),
    ("classes.support-exponent", "classes"),
    ("injectivity.partition-monomials", "classes"),
    ("multiplicity.collected-equality", "classes"),
    ("ladder.C", "classes"),
    ("ladder.B-short", "classes"),
    ("ladder.B-spin", "classes"),
    ("ladder.B-full", "classes"),
    ("ladder.D-chain", "classes"),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coverage_manifest_names_real_checks() {
        for (family, check) in COVERAGE {
            assert!(
                SUITES.contains(check),
                "{family} is assigned to unknown check {check}"
            );
        }
        for suite in SUITES {
            assert!(
                COVERAGE.iter().any(|(_, c)| c == suite),
                "suite {suite} covers no identity family"
            );
        }
    }

    #[test]
    fn reports_are_reproducible() {
        let a = verify_braid_and_closed_forms(3, 10, 42);
        let b = verify_braid_and_closed_forms(3, 10, 42);
        assert_eq!(a.cases, b.cases);
        assert_eq!(a.passed, b.passed);
        assert_eq!(a.counterexample, b.counterexample);
    }

    #[test]
    fn small_suites_pass() {
        for name in SUITES {
            let reports = run_suite(
                name,
                VerifyOptions { max_rank: 4, samples: 20, seed: 0 },
            )
            .unwrap();
            for r in reports {
                assert!(r.passed, "{}", r.status_line());
            }
        }
        assert!(run_suite("bogus", VerifyOptions::default()).is_err());
    }

    #[test]
    fn report_serializes() {
        let r = verify_counts(3);
        let json = serde_json::to_string(&r).unwrap();
        let back: VerifyReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.check, "counts");
    }
}
