use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::binomial::{binomial, next_pascal_row};
use super::poly::IntPolynomial;
use super::series::Rational;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// `B_0..=B_{n_max}` via the Bell (Aitken) triangle: additions only.
pub fn bell_numbers(n_max: usize, limits: &Limits) -> Result<Vec<BigInt>> {
    limits.check_bell_index(n_max as u64)?;
    let mut bells = Vec::with_capacity(n_max + 1);
    let mut row = vec![BigInt::one()];
    bells.push(BigInt::one());
    for _ in 1..=n_max {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().unwrap().clone());
        for (j, above) in row.iter().enumerate() {
            let v = &next[j] + above;
            next.push(v);
        }
        bells.push(next[0].clone());
        row = next;
    }
    Ok(bells)
}

/// `B_0..=B_{n_max}` via `B_{n+1} = sum_k binom(n, k) B_k`, carrying one Pascal row.
pub fn bell_numbers_by_recurrence(n_max: usize, limits: &Limits) -> Result<Vec<BigInt>> {
    limits.check_bell_index(n_max as u64)?;
    let mut bells = vec![BigInt::one()];
    let mut pascal = vec![BigInt::one()];
    for n in 0..n_max {
        let next: BigInt = pascal.iter().zip(&bells).map(|(c, b)| c * b).sum();
        bells.push(next);
        if n + 1 < n_max {
            pascal = next_pascal_row(&pascal);
        }
    }
    Ok(bells)
}

/// Streams rows of `S(n, k)` using `S(n,k) = k S(n-1,k) + S(n-1,k-1)`.
///
/// Only the current row is retained.
#[derive(Debug, Clone)]
pub struct Stirling2Rows {
    row: Vec<BigInt>,
    started: bool,
}

impl Stirling2Rows {
    pub fn new() -> Self {
        Self {
            row: vec![BigInt::one()],
            started: false,
        }
    }
}

impl Default for Stirling2Rows {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for Stirling2Rows {
    type Item = Vec<BigInt>;

    fn next(&mut self) -> Option<Vec<BigInt>> {
        if self.started {
            let prev = &self.row;
            let n = prev.len();
            let mut next = Vec::with_capacity(n + 1);
            next.push(BigInt::zero());
            for k in 1..=n {
                let mut v = prev[k - 1].clone();
                if k < n {
                    v += &prev[k] * BigInt::from(k);
                }
                next.push(v);
            }
            self.row = next;
        }
        self.started = true;
        Some(self.row.clone())
    }
}

/// Full triangle of `S(n, k)` for `0 <= k <= n <= n_max`; row `n` has `n + 1` entries.
pub fn stirling2_table(n_max: usize, limits: &Limits) -> Result<Vec<Vec<BigInt>>> {
    limits.check_bell_index(n_max as u64)?;
    Ok(Stirling2Rows::new().take(n_max + 1).collect())
}

/// `S(n, k)` from `k! S(n,k) = sum_j binom(k,j) (-1)^(k-j) j^n`.
pub fn stirling2_explicit(n: u64, k: u64) -> Result<BigInt> {
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "need k <= n, got n={n} k={k}"
        )));
    }
    let exp = u32::try_from(n).map_err(|_| Error::InvalidArgument("n too large".into()))?;
    let mut sum = BigInt::zero();
    for j in 0..=k {
        let term = binomial(k as i64, j) * num_traits::pow(BigInt::from(j), exp as usize);
        if (k - j).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let kfact = factorial(k);
    let (q, r) = sum.div_rem(&kfact);
    if !r.is_zero() {
        return Err(Error::InexactArithmetic(format!(
            "k! does not divide the Stirling sum for n={n} k={k}"
        )));
    }
    Ok(q)
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `B_n(x) = sum_k S(n, k) x^k`.
pub fn bell_polynomial(n: usize, limits: &Limits) -> Result<IntPolynomial> {
    limits.check_bell_index(n as u64)?;
    let row = Stirling2Rows::new()
        .nth(n)
        .expect("stirling rows are unbounded");
    Ok(IntPolynomial::from_coeffs(row))
}

/// `B_0(x)..=B_{n_max}(x)` from the Stirling rows.
pub fn bell_polynomials(n_max: usize, limits: &Limits) -> Result<Vec<IntPolynomial>> {
    limits.check_bell_index(n_max as u64)?;
    Ok(Stirling2Rows::new()
        .take(n_max + 1)
        .map(IntPolynomial::from_coeffs)
        .collect())
}

/// `B_0(x)..=B_{n_max}(x)` from `B_{m+1}(x) = x sum_k binom(m, k) B_k(x)`.
pub fn bell_polynomial_via_recurrence(n_max: usize, limits: &Limits) -> Result<Vec<IntPolynomial>> {
    limits.check_bell_index(n_max as u64)?;
    let mut polys = vec![IntPolynomial::one()];
    let mut pascal = vec![BigInt::one()];
    for m in 0..n_max {
        let mut acc = IntPolynomial::zero();
        for (c, b) in pascal.iter().zip(&polys) {
            acc.add_scaled(b, c);
        }
        polys.push(acc.shift(1));
        if m + 1 < n_max {
            pascal = next_pascal_row(&pascal);
        }
    }
    Ok(polys)
}

/// `D_0..=D_{n_max}` from `D_n = n! sum_{k<=n} (-1)^k / k!`, with an integrality check.
pub fn derangements(n_max: usize, limits: &Limits) -> Result<Vec<BigInt>> {
    limits.check_bell_index(n_max as u64)?;
    let mut out = Vec::with_capacity(n_max + 1);
    let mut partial = Rational::zero();
    let mut fact = BigInt::one();
    for n in 0..=n_max {
        if n > 0 {
            fact *= BigInt::from(n);
        }
        let term = Rational::new(BigInt::one(), fact.clone());
        if n % 2 == 0 {
            partial += term;
        } else {
            partial -= term;
        }
        let d = &partial * Rational::from_integer(fact.clone());
        if !d.is_integer() {
            return Err(Error::InexactArithmetic(format!(
                "n! times the alternating sum is not an integer at n={n}"
            )));
        }
        out.push(d.to_integer());
    }
    Ok(out)
}
