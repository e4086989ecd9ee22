//! Adjacency matrices, rank-control matrices and the antidiagonal
//! statistics `D` and `E`.
//!
//! All matrix indices in the public API are 1-based, matching the
//! `(row, column)` arcs of an arc diagram. Entry `r(k, l)` of a rank-control
//! matrix is the rank of the corner submatrix on rows `k..=n` and columns
//! `1..=l`; the lower-left corners are exactly what the doubled Borel action
//! `X ↦ B X C` (with `B`, `C` invertible upper triangular) preserves.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::MatrixError;
use crate::partition::ArcDiagram;

/// Prime used by the finite-field invariance trials unless overridden.
pub const DEFAULT_PRIME: u64 = 101;

/// Square matrix over `{0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZeroOneMatrix {
    n: usize,
    entries: Vec<bool>,
}

impl ZeroOneMatrix {
    pub fn zero(n: usize) -> Self {
        ZeroOneMatrix {
            n,
            entries: vec![false; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 1..=n {
            m.set(i, i, true);
        }
        m
    }

    /// The matrix with a 1 at `(i, j)` exactly when `(i, j)` is an arc.
    pub fn adjacency(d: &ArcDiagram) -> Self {
        let mut m = Self::zero(d.n());
        for (i, j) in d.arcs() {
            m.set(i, j, true);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self, MatrixError> {
        let n = rows.len();
        let mut m = Self::zero(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(MatrixError::NotSquare);
            }
            for (j, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 => m.set(i + 1, j + 1, true),
                    _ => return Err(MatrixError::NotZeroOne),
                }
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.entries[(i - 1) * self.n + (j - 1)] = value;
    }

    pub fn count_ones(&self) -> usize {
        self.entries.iter().filter(|&&e| e).count()
    }

    pub fn is_strictly_upper_triangular(&self) -> bool {
        (1..=self.n).all(|i| (1..=i).all(|j| !self.get(i, j)))
    }

    /// First row or column (1-based) holding two or more ones, if any.
    pub fn partial_permutation_violation(&self) -> Option<usize> {
        (1..=self.n).find(|&i| {
            (1..=self.n).filter(|&j| self.get(i, j)).count() > 1
                || (1..=self.n).filter(|&j| self.get(j, i)).count() > 1
        })
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        self.entries
            .chunks(self.n.max(1))
            .take(self.n)
            .map(|r| r.iter().map(|&b| b as u8).collect())
            .collect()
    }

    pub fn to_rational(&self) -> Vec<Vec<BigRational>> {
        (1..=self.n)
            .map(|i| {
                (1..=self.n)
                    .map(|j| {
                        if self.get(i, j) {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

impl Serialize for ZeroOneMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

/// `r(k, l)` = rank of rows `k..=n`, columns `1..=l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankControlMatrix {
    n: usize,
    r: Vec<u32>,
}

impl RankControlMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, k: usize, l: usize) -> u32 {
        self.r[(k - 1) * self.n + (l - 1)]
    }

    fn set(&mut self, k: usize, l: usize, value: u32) {
        self.r[(k - 1) * self.n + (l - 1)] = value;
    }

    fn zero(n: usize) -> Self {
        RankControlMatrix {
            n,
            r: vec![0; n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self, MatrixError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(MatrixError::NotSquare);
        }
        Ok(RankControlMatrix {
            n,
            r: rows.concat(),
        })
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.r
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[u32]>::to_vec)
            .collect()
    }

    /// Flat row-major entries.
    pub fn as_slice(&self) -> &[u32] {
        &self.r
    }

    /// Weakly increasing along rows, weakly decreasing down columns, and
    /// `r(k, l) <= min(n − k + 1, l)`.
    pub fn is_monotone(&self) -> bool {
        let n = self.n;
        for k in 1..=n {
            for l in 1..=n {
                let v = self.get(k, l);
                if v as usize > (n - k + 1).min(l) {
                    return false;
                }
                if l > 1 && self.get(k, l - 1) > v {
                    return false;
                }
                if k > 1 && self.get(k - 1, l) < v {
                    return false;
                }
            }
        }
        true
    }

    /// Number of `(i, j)`, `2 <= i <= n`, `1 <= j <= n − 1`, with
    /// `r(i, j) != r(i − 1, j + 1)`.
    pub fn d_statistic(&self) -> usize {
        let n = self.n;
        let mut count = 0;
        for i in 2..=n {
            for j in 1..n {
                if self.get(i, j) != self.get(i - 1, j + 1) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Number of `(i, j)`, `2 <= i <= j + 1 <= n`, with
    /// `r(i, j) == r(i − 1, j + 1)`.
    pub fn e_statistic(&self) -> usize {
        let n = self.n;
        let mut count = 0;
        for j in 1..n {
            for i in 2..=j + 1 {
                if self.get(i, j) == self.get(i - 1, j + 1) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Entrywise comparison.
    pub fn leq(&self, other: &RankControlMatrix) -> Result<bool, MatrixError> {
        if self.n != other.n {
            return Err(MatrixError::SizeMismatch(self.n, other.n));
        }
        Ok(self.r.iter().zip(&other.r).all(|(a, b)| a <= b))
    }
}

impl Serialize for RankControlMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RankControlMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<u32>>::deserialize(d)?;
        RankControlMatrix::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}

/// Rank-control matrix of a partial permutation matrix by counting: with at
/// most one 1 per row and column, the rank of any submatrix is its number of
/// ones.
pub fn rank_control(m: &ZeroOneMatrix) -> Result<RankControlMatrix, MatrixError> {
    if let Some(bad) = m.partial_permutation_violation() {
        return Err(MatrixError::NotPartialPermutation(bad));
    }
    let n = m.n();
    let mut r = RankControlMatrix::zero(n);
    for k in (1..=n).rev() {
        let mut row_ones = 0;
        for l in 1..=n {
            row_ones += m.get(k, l) as u32;
            let below = if k < n { r.get(k + 1, l) } else { 0 };
            r.set(k, l, below + row_ones);
        }
    }
    Ok(r)
}

/// Counting shortcut when valid, exact elimination otherwise.
pub fn rank_control_any(m: &ZeroOneMatrix) -> RankControlMatrix {
    rank_control(m)
        .unwrap_or_else(|_| rank_oracle_rational(&m.to_rational()).expect("square by construction"))
}

pub fn adjacency_matrix(d: &ArcDiagram) -> ZeroOneMatrix {
    ZeroOneMatrix::adjacency(d)
}

/// Shorthand for `rank_control(adjacency_matrix(d))`.
pub fn rank_control_of(d: &ArcDiagram) -> RankControlMatrix {
    rank_control(&ZeroOneMatrix::adjacency(d)).expect("adjacency matrices are partial permutations")
}

/// Field operations used by the elimination below.
trait Field: Clone {
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// `target − factor · pivot_row_entry` where `factor = target_lead / pivot_lead`.
    fn eliminate(&self, target: &mut [Self::Elem], pivot: &[Self::Elem], col: usize);
    type Elem: Clone;
}

#[derive(Clone)]
struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn eliminate(&self, target: &mut [BigRational], pivot: &[BigRational], col: usize) {
        if target[col].is_zero() {
            return;
        }
        let factor = &target[col] / &pivot[col];
        for (t, p) in target.iter_mut().zip(pivot).skip(col) {
            *t -= &factor * p;
        }
    }
}

#[derive(Clone)]
struct PrimeField(u64);

impl PrimeField {
    fn inverse(&self, a: u64) -> u64 {
        pow_mod(a, self.0 - 2, self.0)
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn eliminate(&self, target: &mut [u64], pivot: &[u64], col: usize) {
        let p = self.0;
        if target[col] == 0 {
            return;
        }
        let factor = target[col] * self.inverse(pivot[col]) % p;
        for (t, &v) in target.iter_mut().zip(pivot).skip(col) {
            *t = (*t + p - factor * v % p) % p;
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// For each `k`, row-reduce rows `k..=n` one column at a time; the number of
/// pivots among the first `l` columns is the rank of the `(k, l)` corner.
fn corner_ranks<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> RankControlMatrix {
    let n = rows.len();
    let mut r = RankControlMatrix::zero(n);
    for k in 1..=n {
        let mut work: Vec<Vec<F::Elem>> = rows[k - 1..].to_vec();
        let mut used = vec![false; work.len()];
        let mut rank = 0;
        for col in 0..n {
            if let Some(piv) = (0..work.len()).find(|&x| !used[x] && !field.is_zero(&work[x][col]))
            {
                used[piv] = true;
                rank += 1;
                let pivot_row = work[piv].clone();
                for (x, row) in work.iter_mut().enumerate() {
                    if !used[x] {
                        field.eliminate(row, &pivot_row, col);
                    }
                }
            }
            r.set(k, col + 1, rank);
        }
    }
    r
}

/// Rank-control matrix by exact Gaussian elimination over the rationals.
pub fn rank_oracle_rational(rows: &[Vec<BigRational>]) -> Result<RankControlMatrix, MatrixError> {
    if rows.iter().any(|r| r.len() != rows.len()) {
        return Err(MatrixError::NotSquare);
    }
    Ok(corner_ranks(&Rationals, rows))
}

/// Square matrix over the integers mod a prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMatrix {
    n: usize,
    p: u64,
    entries: Vec<u64>,
}

impl FieldMatrix {
    pub fn new(p: u64, rows: &[Vec<u64>]) -> Result<Self, MatrixError> {
        if !is_prime(p) {
            return Err(MatrixError::NotPrime(p));
        }
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(MatrixError::NotSquare);
        }
        Ok(FieldMatrix {
            n,
            p,
            entries: rows.iter().flatten().map(|&x| x % p).collect(),
        })
    }

    pub fn from_zero_one(m: &ZeroOneMatrix, p: u64) -> Result<Self, MatrixError> {
        let rows: Vec<Vec<u64>> = m
            .rows()
            .into_iter()
            .map(|r| r.into_iter().map(u64::from).collect())
            .collect();
        FieldMatrix::new(p, &rows)
    }

    pub fn identity(n: usize, p: u64) -> Result<Self, MatrixError> {
        let rows: Vec<Vec<u64>> = (0..n)
            .map(|i| (0..n).map(|j| (i == j) as u64).collect())
            .collect();
        FieldMatrix::new(p, &rows)
    }

    /// A uniformly random invertible upper-triangular matrix.
    pub fn random_upper_triangular<R: Rng>(
        n: usize,
        p: u64,
        rng: &mut R,
    ) -> Result<Self, MatrixError> {
        if !is_prime(p) {
            return Err(MatrixError::NotPrime(p));
        }
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = rng.gen_range(1..p);
            for j in i + 1..n {
                entries[i * n + j] = rng.gen_range(0..p);
            }
        }
        Ok(FieldMatrix { n, p, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// 1-based entry.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.entries
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[u64]>::to_vec)
            .collect()
    }

    pub fn mul(&self, other: &FieldMatrix) -> Result<FieldMatrix, MatrixError> {
        if self.n != other.n {
            return Err(MatrixError::SizeMismatch(self.n, other.n));
        }
        let (n, p) = (self.n, self.p);
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] = (entries[i * n + j] + a * other.entries[k * n + j]) % p;
                }
            }
        }
        Ok(FieldMatrix { n, p, entries })
    }

    /// Rank-control matrix by exact elimination mod `p`.
    pub fn rank_control(&self) -> RankControlMatrix {
        corner_ranks(&PrimeField(self.p), &self.rows())
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Whether `B · M · C` has the same rank-control matrix as `M` mod `p`.
pub fn orbit_invariance_with(
    m: &ZeroOneMatrix,
    b: &FieldMatrix,
    c: &FieldMatrix,
) -> Result<bool, MatrixError> {
    let x = FieldMatrix::from_zero_one(m, b.prime())?;
    let y = b.mul(&x)?.mul(c)?;
    Ok(y.rank_control() == x.rank_control())
}

/// Draws `B`, `C` invertible upper triangular mod `p` from `seed` and checks
/// that `B · M · C` keeps every corner rank of `M`.
pub fn orbit_invariance_trial(m: &ZeroOneMatrix, p: u64, seed: u64) -> Result<bool, MatrixError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b = FieldMatrix::random_upper_triangular(m.n(), p, &mut rng)?;
    let c = FieldMatrix::random_upper_triangular(m.n(), p, &mut rng)?;
    orbit_invariance_with(m, &b, &c)
}
