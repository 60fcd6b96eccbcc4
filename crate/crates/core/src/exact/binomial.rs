use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Generalized binomial coefficient `prod_{0<i<=k} (n-i+1)/i` for any integer `n`.
///
/// Negative upper arguments follow `binom(n, k) = (-1)^k binom(k-n-1, k)`.
pub fn binomial(n: i64, k: u64) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    if n >= 0 && (n as u64) < k {
        return BigInt::zero();
    }
    // Running product of i consecutive integers is divisible by i!, so every
    // step divides exactly.
    let mut acc = BigInt::one();
    let n = BigInt::from(n);
    for i in 1..=k {
        acc = acc * (&n - BigInt::from(i) + 1u32) / BigInt::from(i);
    }
    acc
}

/// Rows `0..=n_max` of Pascal's triangle, exact.
#[derive(Debug, Clone)]
pub struct PascalTriangle {
    rows: Vec<Vec<BigInt>>,
}

impl PascalTriangle {
    pub fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![BigInt::one()]);
        for n in 1..=n_max {
            rows.push(next_pascal_row(&rows[n - 1]));
        }
        Self { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `binom(n, k)` for `0 <= n <= n_max`; zero when `k > n`.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        self.rows[n].get(k).cloned().unwrap_or_default()
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }
}

pub(crate) fn next_pascal_row(prev: &[BigInt]) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(prev.len() + 1);
    row.push(BigInt::one());
    for w in prev.windows(2) {
        row.push(&w[0] + &w[1]);
    }
    row.push(BigInt::one());
    row
}
