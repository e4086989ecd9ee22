//! Dense polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Polynomial in one variable; `coeffs[d]` is the coefficient of `q^d`.
///
/// Never stores a trailing zero, so the zero polynomial has no coefficients
/// and [`IntPolynomial::degree`] returns `None` for it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c · q^d`
    pub fn monomial(c: BigInt, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c;
        Self::from_coeffs(coeffs)
    }

    /// `1 − q`, `q − 1` and friends: `a + b·q`.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_coeffs(vec![a.into(), b.into()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// Polynomial whose coefficient of `q^d` is `counts[d]`.
    pub fn from_counts(counts: &[u64]) -> Self {
        Self::from_coeffs(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiply by `q^d`.
    pub fn shift(&self, d: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// Multiply by `[k]_q = 1 + q + … + q^{k−1}` with a sliding window sum.
    pub fn mul_q_integer(&self, k: usize) -> Self {
        if k == 0 || self.is_zero() {
            return Self::zero();
        }
        let len = self.coeffs.len() + k - 1;
        let mut out = Vec::with_capacity(len);
        let mut window = BigInt::zero();
        for d in 0..len {
            if let Some(c) = self.coeffs.get(d) {
                window += c;
            }
            if d >= k {
                window -= &self.coeffs[d - k];
            }
            out.push(window.clone());
        }
        Self::from_coeffs(out)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// `q^{len−1} · p(1/q)`: coefficient `d` moves to `len − 1 − d`.
    ///
    /// Panics if the degree is at least `len`.
    pub fn reversed(&self, len: usize) -> Self {
        assert!(self.coeffs.len() <= len, "degree exceeds reversal length");
        let mut coeffs = vec![BigInt::zero(); len];
        for (d, c) in self.coeffs.iter().enumerate() {
            coeffs[len - 1 - d] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    /// Formats with the given variable name, lowest degree first.
    pub fn display_in(&self, var: &str) -> String {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| (c.clone(), monomial_text(&[(var, d)])));
        join_terms(terms)
    }
}

fn monomial_text(parts: &[(&str, usize)]) -> String {
    parts
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| {
            if *e == 1 {
                v.to_string()
            } else {
                format!("{v}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn join_terms(terms: impl Iterator<Item = (BigInt, String)>) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let negative = c.is_negative();
        let mag = c.abs();
        let body = if mono.is_empty() {
            mag.to_string()
        } else if mag.is_one() {
            mono
        } else {
            format!("{mag}*{mono}")
        };
        match (out.is_empty(), negative) {
            (true, false) => {}
            (true, true) => out.push('-'),
            (false, false) => out.push_str(" + "),
            (false, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("q"))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;

    fn add(mut self, rhs: IntPolynomial) -> IntPolynomial {
        self += &rhs;
        self
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out += &-rhs;
        out
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    var: String,
    coeffs: Vec<String>,
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            var: "q".into(),
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|c| c.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::from_coeffs(coeffs))
    }
}

/// Polynomial in `q` and `t`; `grid[i][j]` is the coefficient of `q^i t^j`.
///
/// Rows all have the same length and neither the last row nor the last
/// column is entirely zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BivariatePolynomial {
    grid: Vec<Vec<BigInt>>,
}

impl BivariatePolynomial {
    /// `Σ_k by_t[k] · t^k`.
    pub fn from_t_coefficients(by_t: &[IntPolynomial]) -> Self {
        let rows = by_t
            .iter()
            .filter_map(IntPolynomial::degree)
            .max()
            .map_or(0, |d| d + 1);
        let mut grid = vec![vec![BigInt::zero(); by_t.len()]; rows];
        for (j, p) in by_t.iter().enumerate() {
            for (i, c) in p.coeffs().iter().enumerate() {
                grid[i][j] = c.clone();
            }
        }
        Self::from_grid(grid)
    }

    pub fn from_grid(mut grid: Vec<Vec<BigInt>>) -> Self {
        let width = grid.iter().map(Vec::len).max().unwrap_or(0);
        for row in &mut grid {
            row.resize(width, BigInt::zero());
        }
        while grid.last().is_some_and(|r| r.iter().all(Zero::is_zero)) {
            grid.pop();
        }
        let mut width = grid.first().map_or(0, Vec::len);
        while width > 0 && grid.iter().all(|r| r[width - 1].is_zero()) {
            width -= 1;
        }
        for row in &mut grid {
            row.truncate(width);
        }
        if width == 0 {
            grid.clear();
        }
        BivariatePolynomial { grid }
    }

    pub fn grid(&self) -> &[Vec<BigInt>] {
        &self.grid
    }

    pub fn coeff(&self, q_exp: usize, t_exp: usize) -> BigInt {
        self.grid
            .get(q_exp)
            .and_then(|r| r.get(t_exp))
            .cloned()
            .unwrap_or_default()
    }

    pub fn t_degree(&self) -> Option<usize> {
        self.grid.first().and_then(|r| r.len().checked_sub(1))
    }

    /// Coefficient of `t^k` as a polynomial in `q`.
    pub fn t_coefficient(&self, k: usize) -> IntPolynomial {
        IntPolynomial::from_coeffs(
            self.grid
                .iter()
                .map(|r| r.get(k).cloned().unwrap_or_default())
                .collect(),
        )
    }

    /// Substitute a polynomial in `q` for `t`.
    pub fn substitute_t(&self, t: &IntPolynomial) -> IntPolynomial {
        let Some(deg) = self.t_degree() else {
            return IntPolynomial::zero();
        };
        (0..=deg).rev().fold(IntPolynomial::zero(), |acc, k| {
            &(&acc * t) + &self.t_coefficient(k)
        })
    }
}

impl fmt::Display for BivariatePolynomial {
    /// Terms ordered by `t` exponent, then `q` exponent.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.t_degree().map_or(0, |d| d + 1);
        let terms = (0..width).flat_map(|j| {
            self.grid
                .iter()
                .enumerate()
                .filter(move |(_, r)| !r[j].is_zero())
                .map(move |(i, r)| (r[j].clone(), monomial_text(&[("q", i), ("t", j)])))
        });
        f.write_str(&join_terms(terms))
    }
}

#[derive(Serialize, Deserialize)]
struct BivariateRepr {
    vars: [String; 2],
    coeffs: Vec<Vec<String>>,
}

impl Serialize for BivariatePolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        BivariateRepr {
            vars: ["q".into(), "t".into()],
            coeffs: self
                .grid
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BivariatePolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = BivariateRepr::deserialize(d)?;
        let grid = repr
            .coeffs
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| c.parse::<BigInt>().map_err(serde::de::Error::custom))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BivariatePolynomial::from_grid(grid))
    }
}
