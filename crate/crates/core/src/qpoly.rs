//! q-Stirling numbers, q-Bell generating functions and the H-polynomial.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::Path;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::partition::{enumerate, enumerate_with_prefix, rgs_prefixes, SetPartition};
use crate::poly::{BivariatePolynomial, IntPolynomial};
use crate::stats::{depth_index, dual_major_index, intertwining, IntertwiningMethod};

/// `[k]_q = 1 + q + … + q^{k−1}`, with `[0]_q = 0`.
pub fn q_integer(k: usize) -> IntPolynomial {
    IntPolynomial::from_coeffs(vec![BigInt::one(); k])
}

/// One step of the q-Stirling recurrence: row `n` from row `n − 1`.
///
/// `S_q(n, k) = q^{k−1} S_q(n−1, k−1) + [k]_q S_q(n−1, k)`.
fn next_row(prev: &[IntPolynomial]) -> Vec<IntPolynomial> {
    let n = prev.len();
    (0..=n)
        .map(|k| {
            if k == 0 {
                return IntPolynomial::zero();
            }
            let mut s = prev[k - 1].shift(k - 1);
            if k < n {
                s += &prev[k].mul_q_integer(k);
            }
            s
        })
        .collect()
}

/// Row `n` of the q-Stirling triangle, `[S_q(n, 0), …, S_q(n, n)]`, without
/// touching the shared table.
pub fn q_stirling_row(n: usize) -> Vec<IntPolynomial> {
    let mut row = vec![IntPolynomial::one()];
    for _ in 0..n {
        row = next_row(&row);
    }
    row
}

/// Memoized triangle of q-Stirling numbers.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct QStirlingTable {
    rows: Vec<Vec<IntPolynomial>>,
}

impl QStirlingTable {
    pub fn new() -> Self {
        QStirlingTable {
            rows: vec![vec![IntPolynomial::one()]],
        }
    }

    /// Largest `n` whose row is present.
    pub fn max_n(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn extend_to(&mut self, n: usize) {
        if self.rows.is_empty() {
            self.rows.push(vec![IntPolynomial::one()]);
        }
        while self.rows.len() <= n {
            let next = next_row(self.rows.last().unwrap());
            self.rows.push(next);
        }
    }

    /// `S_q(n, k)` if row `n` is present; zero for `k > n`.
    pub fn get(&self, n: usize, k: usize) -> Option<IntPolynomial> {
        self.rows
            .get(n)
            .map(|row| row.get(k).cloned().unwrap_or_default())
    }

    pub fn row(&self, n: usize) -> Option<&[IntPolynomial]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    pub fn save(&self, path: &Path) -> io::Result<()> {
        fs::write(path, serde_json::to_vec(self)?)
    }

    /// Loads a table written by [`QStirlingTable::save`], recomputing and
    /// rejecting it if any stored row disagrees with the recurrence.
    pub fn load(path: &Path) -> io::Result<Self> {
        let table: QStirlingTable = serde_json::from_slice(&fs::read(path)?)?;
        let mut fresh = QStirlingTable::new();
        fresh.extend_to(table.max_n());
        if fresh.rows != table.rows {
            return Err(io::Error::new(
                io::ErrorKind::InvalidData,
                "stale or corrupt q-Stirling cache",
            ));
        }
        Ok(table)
    }
}

fn shared_table() -> &'static RwLock<QStirlingTable> {
    static TABLE: OnceLock<RwLock<QStirlingTable>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(QStirlingTable::new()))
}

/// `S_q(n, k)` from the recurrence, memoized in a process-wide table.
pub fn q_stirling(n: usize, k: usize) -> IntPolynomial {
    if let Some(v) = shared_table().read().unwrap().get(n, k) {
        return v;
    }
    let mut table = shared_table().write().unwrap();
    table.extend_to(n);
    table.get(n, k).expect("row just computed")
}

/// `Σ_{A ∈ Π_{n,k}} q^{i(A)}` by enumeration.
pub fn q_stirling_enum(n: usize, k: usize) -> IntPolynomial {
    if n == 0 || k == 0 || k > n {
        return if n == k {
            IntPolynomial::one()
        } else {
            IntPolynomial::zero()
        };
    }
    let mut counts = vec![0u64; n * (n - 1) / 2 + 1];
    for p in enumerate(n, Some(k)).expect("1 <= k <= n") {
        counts[intertwining(&p.to_arc_diagram(), IntertwiningMethod::ExtendedArcs)] += 1;
    }
    IntPolynomial::from_counts(&counts)
}

/// Which statistic [`generating_polynomial`] sums over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Statistic {
    /// depth index; gives `X_n(q)`
    DepthIndex,
    /// intertwining number; gives `Y_n(q)`
    Intertwining,
    /// dual major index; gives `B_n(q)`
    DualMajor,
}

impl Statistic {
    pub fn of(self, p: &SetPartition) -> usize {
        match self {
            Statistic::DepthIndex => depth_index(&p.to_arc_diagram()),
            Statistic::Intertwining => {
                intertwining(&p.to_arc_diagram(), IntertwiningMethod::ExtendedArcs)
            }
            Statistic::DualMajor => dual_major_index(p),
        }
    }
}

/// `Σ_{A ∈ Π_n} q^{stat(A)}`, streamed over RGS prefixes in parallel.
pub fn generating_polynomial(n: usize, stat: Statistic) -> IntPolynomial {
    assert!(n >= 1, "n must be positive");
    let len = n * (n - 1) / 2 + 1;
    let counts = rgs_prefixes(n, 4)
        .par_iter()
        .map(|prefix| {
            let mut counts = vec![0u64; len];
            for p in enumerate_with_prefix(n, None, prefix).expect("valid prefix") {
                counts[stat.of(&p)] += 1;
            }
            counts
        })
        .reduce(
            || vec![0u64; len],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    IntPolynomial::from_counts(&counts)
}

/// `X_n(−1) = (−1)^{C(n,2)} B_n(−1)` from the q-Stirling recurrence at
/// `q = −1`, where `[k]_{−1}` is 1 for odd `k` and 0 for even `k`.
pub fn bell_at_minus_one(n: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for (k, slot) in next.iter_mut().enumerate().skip(1) {
            let sign = if (k - 1) % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            let mut v = sign * &row[k - 1];
            if k < m && k % 2 == 1 {
                v += &row[k];
            }
            *slot = v;
        }
        row = next;
    }
    let total: BigInt = row.iter().sum();
    if (n * n.saturating_sub(1) / 2) % 2 == 1 {
        -total
    } else {
        total
    }
}

/// Value of `X_n(−1)` predicted by its residue of `n` mod 12.
pub fn bell_at_minus_one_table(n: usize) -> i32 {
    match n % 12 {
        0 | 1 | 3 | 10 => 1,
        4 | 6 | 7 | 9 => -1,
        _ => 0,
    }
}

/// `H_n(q, t) = Σ_k S_q(n, k) t^k`.
pub fn h_polynomial(n: usize) -> BivariatePolynomial {
    BivariatePolynomial::from_t_coefficients(&q_stirling_row(n))
}

/// `Σ_k S_q(n, k) (1 − q)^{n−k}`, which must be 1: the statement
/// `H_n(q, 1/(1 − q)) = 1/(1 − q)^n` with denominators cleared.
pub fn h_identity_lhs(n: usize) -> IntPolynomial {
    let row = q_stirling_row(n);
    let one_minus_q = IntPolynomial::linear(1, -1);
    // Horner in (1 − q): Σ_k S(n,k) (1−q)^{n−k}
    row.iter()
        .fold(IntPolynomial::zero(), |acc, s| &(&acc * &one_minus_q) + s)
}

pub fn check_h_identity(n: usize) -> bool {
    h_identity_lhs(n).is_one()
}

/// `Σ_{A ∈ Π_n} q^{t(A) − a(A)} (q − 1)^{a(A)}` with `a(A)` the number of arcs.
pub fn borel_point_count(n: usize) -> IntPolynomial {
    assert!(n >= 1, "n must be positive");
    let mut hist: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for p in enumerate(n, None).expect("n >= 1") {
        let d = p.to_arc_diagram();
        *hist.entry((depth_index(&d), d.num_arcs())).or_default() += 1;
    }
    let q_minus_one = IntPolynomial::linear(-1, 1);
    let powers: Vec<IntPolynomial> = (0..n).map(|a| q_minus_one.pow(a as u32)).collect();
    let mut total = IntPolynomial::zero();
    for ((t, a), count) in hist {
        let exp = t
            .checked_sub(a)
            .expect("depth index is at least the arc count");
        total += &powers[a].shift(exp).scale(&BigInt::from(count));
    }
    total
}

pub fn check_borel_point_count(n: usize) -> bool {
    borel_point_count(n) == IntPolynomial::monomial(BigInt::one(), n * (n - 1) / 2)
}
