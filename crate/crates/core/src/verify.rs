//! Exhaustive and randomized checks of every identity the library relies on.
//!
//! Per-partition checks fan out over RGS prefixes with rayon and report the
//! first counterexample in RGS order, so results do not depend on thread
//! scheduling.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::matrix::{
    orbit_invariance_trial, rank_control, rank_control_of, rank_oracle_rational, ZeroOneMatrix,
    DEFAULT_PRIME,
};
use crate::partition::{enumerate, enumerate_with_prefix, rgs_prefixes, SetPartition};
use crate::poly::IntPolynomial;
use crate::poset::{Poset, POSET_LIMIT};
use crate::qpoly::{
    bell_at_minus_one, bell_at_minus_one_table, check_borel_point_count, generating_polynomial,
    h_identity_lhs, h_polynomial, q_stirling, q_stirling_enum, Statistic,
};
use crate::stats::{
    classical_stats, crossing_index, depth_index, dimension_exponent_by_blocks, dual_major_index,
    intertwining, partial_depth_index, partial_intertwining, parviainen_phi, IntertwiningMethod,
};

/// Deepest `n` for the q = −1 recurrence check.
pub const BELL_RECURRENCE_MAX: usize = 60;
/// Deepest `n` for the cleared-denominator H-polynomial identity.
pub const H_IDENTITY_MAX: usize = 40;
/// Enumerated `X_n(−1)` is compared with the recurrence up to this `n`.
pub const BELL_ENUMERATION_MAX: usize = 10;
/// The rational elimination oracle is run up to this `n`.
pub const RANK_ORACLE_MAX: usize = 7;
/// Finite-field invariance trials sweep `Π_n` up to this `n`.
pub const ORBIT_MAX: usize = 6;
/// Comparing the poset against oracle rank matrices stops here.
pub const POSET_ORACLE_MAX: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    TPlusI,
    Partials,
    IntertwiningMethods,
    RankCounting,
    RankStatistics,
    OrbitInvariance,
    Phi,
    StirlingEnum,
    GeneratingFunctions,
    BellMinusOne,
    HIdentity,
    BorelPointCount,
    PosetGraded,
    PosetOracle,
    CrossingIndex,
    NestingsCrossings,
    DimensionExponent,
}

impl Check {
    pub const ALL: [Check; 17] = [
        Check::TPlusI,
        Check::Partials,
        Check::IntertwiningMethods,
        Check::RankCounting,
        Check::RankStatistics,
        Check::OrbitInvariance,
        Check::Phi,
        Check::StirlingEnum,
        Check::GeneratingFunctions,
        Check::BellMinusOne,
        Check::HIdentity,
        Check::BorelPointCount,
        Check::PosetGraded,
        Check::PosetOracle,
        Check::CrossingIndex,
        Check::NestingsCrossings,
        Check::DimensionExponent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::TPlusI => "t-plus-i",
            Check::Partials => "partials",
            Check::IntertwiningMethods => "intertwining-methods",
            Check::RankCounting => "rank-counting",
            Check::RankStatistics => "rank-statistics",
            Check::OrbitInvariance => "orbit-invariance",
            Check::Phi => "phi-bijection",
            Check::StirlingEnum => "stirling-enum",
            Check::GeneratingFunctions => "generating-functions",
            Check::BellMinusOne => "bell-minus-one",
            Check::HIdentity => "h-identity",
            Check::BorelPointCount => "borel-point-count",
            Check::PosetGraded => "poset-graded",
            Check::PosetOracle => "poset-oracle",
            Check::CrossingIndex => "crossing-index",
            Check::NestingsCrossings => "nestings-crossings",
            Check::DimensionExponent => "dimension-exponent",
        }
    }

    /// Range of `n` actually examined for a requested maximum.
    pub fn range(self, max_n: usize) -> RangeInclusive<usize> {
        let max_n = max_n.max(1);
        match self {
            Check::RankCounting => 1..=max_n.min(RANK_ORACLE_MAX),
            Check::OrbitInvariance => 1..=max_n.min(ORBIT_MAX),
            Check::PosetGraded => 1..=max_n.min(POSET_LIMIT),
            Check::PosetOracle => 1..=max_n.min(POSET_ORACLE_MAX),
            Check::BellMinusOne => 0..=BELL_RECURRENCE_MAX,
            Check::HIdentity => 0..=H_IDENTITY_MAX,
            Check::StirlingEnum => 0..=max_n,
            _ => 1..=max_n,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown check {0:?}")]
pub struct UnknownCheck(pub String);

impl FromStr for Check {
    type Err = UnknownCheck;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| UnknownCheck(s.into()))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub seed: u64,
    pub prime: u64,
    pub trials: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 8,
            seed: 0,
            prime: DEFAULT_PRIME,
            trials: 100,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationOutcome {
    pub check: String,
    pub n_min: usize,
    pub n_max: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
    pub elapsed_ms: f64,
}

impl fmt::Display for VerificationOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} n={}..={} ({:.1} ms)",
            if self.passed { "PASS" } else { "FAIL" },
            self.check,
            self.n_min,
            self.n_max,
            self.elapsed_ms
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, " counterexample: {c}")?;
        }
        Ok(())
    }
}

pub fn run(check: Check, config: &VerifyConfig) -> VerificationOutcome {
    let range = check.range(config.max_n);
    let start = Instant::now();
    let result = run_inner(check, range.clone(), config);
    VerificationOutcome {
        check: check.name().into(),
        n_min: *range.start(),
        n_max: *range.end(),
        passed: result.is_ok(),
        counterexample: result.err(),
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

pub fn run_all(config: &VerifyConfig) -> Vec<VerificationOutcome> {
    Check::ALL.iter().map(|&c| run(c, config)).collect()
}

/// Runs `f` on every partition of every `n` in the range; `Err` carries the
/// first failure in (n, RGS) order.
pub fn for_each_partition<F>(range: RangeInclusive<usize>, f: F) -> Result<(), String>
where
    F: Fn(&SetPartition) -> Result<(), String> + Sync,
{
    for n in range.filter(|&n| n >= 1) {
        let failures: Vec<Option<String>> = rgs_prefixes(n, 4)
            .par_iter()
            .map(|prefix| {
                enumerate_with_prefix(n, None, prefix)
                    .expect("valid prefix")
                    .find_map(|p| f(&p).err().map(|why| format!("{p}: {why}")))
            })
            .collect();
        if let Some(first) = failures.into_iter().flatten().next() {
            return Err(first);
        }
    }
    Ok(())
}

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn run_inner(
    check: Check,
    range: RangeInclusive<usize>,
    config: &VerifyConfig,
) -> Result<(), String> {
    match check {
        Check::TPlusI => for_each_partition(range, |p| {
            let d = p.to_arc_diagram();
            let (t, i) = (
                depth_index(&d),
                intertwining(&d, IntertwiningMethod::ExtendedArcs),
            );
            ensure(t + i == binom2(p.n()), || format!("t={t} i={i}"))
        }),
        Check::Partials => for_each_partition(range, |p| {
            let d = p.to_arc_diagram();
            let tv = partial_depth_index(&d);
            let iv = partial_intertwining(&d);
            let t = depth_index(&d);
            let i = intertwining(&d, IntertwiningMethod::ExtendedArcs);
            ensure(tv.iter().sum::<usize>() == t, || {
                format!("sum t_v != t = {t}")
            })?;
            ensure(iv.iter().sum::<usize>() == i, || {
                format!("sum i_v != i = {i}")
            })?;
            match (0..p.n()).find(|&v| tv[v] + iv[v] != v) {
                Some(v) => Err(format!("t_v + i_v != v - 1 at v = {}", v + 1)),
                None => Ok(()),
            }
        }),
        Check::IntertwiningMethods => for_each_partition(range, |p| {
            let d = p.to_arc_diagram();
            let a = intertwining(&d, IntertwiningMethod::ExtendedArcs);
            let b = intertwining(&d, IntertwiningMethod::BlockPairs);
            let c: usize = partial_intertwining(&d).iter().sum();
            ensure(a == b && b == c, || {
                format!("extended={a} block_pairs={b} partial_sum={c}")
            })
        }),
        Check::RankCounting => for_each_partition(range, |p| {
            let m = ZeroOneMatrix::adjacency(&p.to_arc_diagram());
            let counted = rank_control(&m).map_err(|e| e.to_string())?;
            let oracle = rank_oracle_rational(&m.to_rational()).map_err(|e| e.to_string())?;
            ensure(counted.is_monotone(), || {
                "rank-control matrix not monotone".into()
            })?;
            ensure(counted == oracle, || {
                format!("counted {:?} != oracle {:?}", counted.rows(), oracle.rows())
            })
        }),
        Check::RankStatistics => for_each_partition(range, |p| {
            let d = p.to_arc_diagram();
            let r = rank_control_of(&d);
            let (dd, e) = (r.d_statistic(), r.e_statistic());
            let (t, i) = (
                depth_index(&d),
                intertwining(&d, IntertwiningMethod::ExtendedArcs),
            );
            ensure(dd == t && e == i && dd + e == binom2(p.n()), || {
                format!("D={dd} t={t} E={e} i={i}")
            })
        }),
        Check::OrbitInvariance => {
            let (seed, prime, trials) = (config.seed, config.prime, config.trials);
            for_each_partition(range, |p| {
                let m = ZeroOneMatrix::adjacency(&p.to_arc_diagram());
                let tag = p
                    .to_rgs()
                    .as_slice()
                    .iter()
                    .fold(p.n() as u64, |h, &w| h * 31 + w as u64);
                for trial in 0..trials {
                    let s = seed ^ tag.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ trial;
                    match orbit_invariance_trial(&m, prime, s) {
                        Ok(true) => {}
                        Ok(false) => return Err(format!("rank-control changed (trial seed {s})")),
                        Err(e) => return Err(e.to_string()),
                    }
                }
                Ok(())
            })
        }
        Check::Phi => {
            for_each_partition(range.clone(), |p| {
                let image = parviainen_phi(p);
                let i = intertwining(&p.to_arc_diagram(), IntertwiningMethod::ExtendedArcs);
                ensure(image.num_blocks() == p.num_blocks(), || {
                    format!("phi = {image} changes block count")
                })?;
                ensure(dual_major_index(&image) == i, || {
                    format!("dualmaj(phi) = {} != i = {i}", dual_major_index(&image))
                })
            })?;
            for n in range.filter(|&n| n >= 1) {
                for k in 1..=n {
                    let mut images: Vec<SetPartition> = enumerate(n, Some(k))
                        .expect("valid k")
                        .map(|p| parviainen_phi(&p))
                        .collect();
                    let total = images.len();
                    images.sort();
                    images.dedup();
                    ensure(images.len() == total, || {
                        format!("phi not injective on n={n} k={k}")
                    })?;
                }
            }
            Ok(())
        }
        Check::StirlingEnum => {
            for n in range {
                for k in 0..=n {
                    let a = q_stirling_enum(n, k);
                    let b = q_stirling(n, k);
                    ensure(a == b, || {
                        format!("n={n} k={k}: enumeration {a} != recurrence {b}")
                    })?;
                }
            }
            Ok(())
        }
        Check::GeneratingFunctions => {
            for n in range {
                let x = generating_polynomial(n, Statistic::DepthIndex);
                let y = generating_polynomial(n, Statistic::Intertwining);
                let b = generating_polynomial(n, Statistic::DualMajor);
                let s = (0..=n).fold(IntPolynomial::zero(), |acc, k| &acc + &q_stirling(n, k));
                ensure(y == b, || format!("n={n}: Y_n != B_n"))?;
                ensure(y == s, || format!("n={n}: Y_n != sum_k S_q(n,k)"))?;
                ensure(x.reversed(binom2(n) + 1) == y, || {
                    format!("n={n}: reversed X_n != Y_n")
                })?;
            }
            Ok(())
        }
        Check::BellMinusOne => {
            for n in range {
                let got = bell_at_minus_one(n);
                let want = BigInt::from(bell_at_minus_one_table(n));
                ensure(got == want, || {
                    format!("n={n}: recurrence {got} != table {want}")
                })?;
            }
            for n in 1..=config.max_n.min(BELL_ENUMERATION_MAX) {
                let x = generating_polynomial(n, Statistic::DepthIndex).eval_i64(-1);
                let want = bell_at_minus_one(n);
                ensure(x == want, || {
                    format!("n={n}: enumerated X_n(-1) = {x} != {want}")
                })?;
            }
            Ok(())
        }
        Check::HIdentity => {
            let displayed = [(0, "1"), (1, "t"), (2, "t + q*t^2")];
            for (n, text) in displayed {
                let h = h_polynomial(n).to_string();
                ensure(h == text, || format!("H_{n} = {h}, expected {text}"))?;
            }
            for n in range {
                let lhs = h_identity_lhs(n);
                ensure(lhs.is_one(), || {
                    format!("n={n}: sum_k S_q(n,k)(1-q)^(n-k) = {lhs}")
                })?;
            }
            Ok(())
        }
        Check::BorelPointCount => {
            for n in range {
                ensure(check_borel_point_count(n), || {
                    format!("n={n}: point count differs from q^C(n,2)")
                })?;
            }
            Ok(())
        }
        Check::PosetGraded => {
            for n in range {
                let poset = Poset::build(n).map_err(|e| e.to_string())?;
                let report = poset.check_graded();
                ensure(report.is_graded(), || {
                    format!("n={n}: {:?}", report.violations)
                })?;
                let hit: std::collections::BTreeSet<usize> =
                    poset.ranks().iter().copied().collect();
                ensure(hit.len() == binom2(n) + 1, || {
                    format!("n={n}: some rank in 0..=C(n,2) unused")
                })?;
                let x = generating_polynomial(n, Statistic::DepthIndex);
                ensure(poset.rank_polynomial() == x, || {
                    format!("n={n}: rank polynomial != X_n")
                })?;
            }
            Ok(())
        }
        Check::PosetOracle => {
            for n in range {
                let poset = Poset::build(n).map_err(|e| e.to_string())?;
                let oracle: Vec<_> = poset
                    .elements()
                    .iter()
                    .map(|p| {
                        rank_oracle_rational(
                            &ZeroOneMatrix::adjacency(&p.to_arc_diagram()).to_rational(),
                        )
                        .expect("square")
                    })
                    .collect();
                for x in 0..poset.len() {
                    for y in 0..poset.len() {
                        let want = oracle[x].leq(&oracle[y]).expect("same n");
                        ensure(poset.leq(x, y) == want, || {
                            format!("n={n}: {} vs {}", poset.elements()[x], poset.elements()[y])
                        })?;
                    }
                }
            }
            Ok(())
        }
        Check::CrossingIndex => for_each_partition(range, |p| {
            let d = p.to_arc_diagram();
            let (c, t) = (crossing_index(&d), depth_index(&d));
            ensure(c == t, || format!("c={c} t={t}"))
        }),
        Check::NestingsCrossings => {
            for n in range {
                let (mut nest, mut cross): (Vec<usize>, Vec<usize>) = enumerate(n, None)
                    .expect("n >= 1")
                    .map(|p| {
                        let s = classical_stats(&p.to_arc_diagram());
                        (s.nestings, s.crossings)
                    })
                    .unzip();
                nest.sort_unstable();
                cross.sort_unstable();
                ensure(nest == cross, || {
                    format!("n={n}: nestings and crossings not equidistributed")
                })?;
            }
            Ok(())
        }
        Check::DimensionExponent => for_each_partition(range, |p| {
            let a = classical_stats(&p.to_arc_diagram()).dimension_exponent;
            let b = dimension_exponent_by_blocks(p);
            ensure(a == b, || format!("vertex depths {a} != block spans {b}"))
        }),
    }
}
