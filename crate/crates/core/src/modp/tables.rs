use super::poly::ModPolynomial;
use super::prime::PrimeModulus;
use super::scalar::ModScalar;
use crate::error::Result;
use crate::exact::binomial;
use crate::limits::Limits;

/// Rows of `S(n, k) mod p` from the triangle recurrence, two rows at a time.
#[derive(Debug, Clone)]
pub struct Stirling2RowsModp {
    modulus: PrimeModulus,
    prev: Vec<u64>,
    cur: Vec<u64>,
    started: bool,
}

impl Stirling2RowsModp {
    pub fn new(modulus: PrimeModulus) -> Self {
        Self {
            modulus,
            prev: Vec::new(),
            cur: vec![1 % modulus.get()],
            started: false,
        }
    }
}

impl Iterator for Stirling2RowsModp {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.started {
            let m = self.modulus;
            std::mem::swap(&mut self.prev, &mut self.cur);
            let n = self.prev.len();
            self.cur.clear();
            self.cur.push(0);
            for k in 1..=n {
                let mut v = self.prev[k - 1];
                if k < n {
                    v = m.add(v, m.mul(m.reduce_u64(k as u64), self.prev[k]));
                }
                self.cur.push(v);
            }
        }
        self.started = true;
        Some(self.cur.clone())
    }
}

/// Streams rows `0..=n_max` of `S(n, k) mod p`; row `n` has `n + 1` residues.
pub fn stirling2_table_modp(
    n_max: usize,
    p: PrimeModulus,
    limits: &Limits,
) -> Result<std::iter::Take<Stirling2RowsModp>> {
    limits.check_modp_rows(n_max as u64)?;
    Ok(Stirling2RowsModp::new(p).take(n_max + 1))
}

/// `B_0(x)..=B_{n_max}(x) mod p`, built from the Stirling rows only.
pub fn bell_polynomials_modp(
    n_max: usize,
    p: PrimeModulus,
    limits: &Limits,
) -> Result<Vec<ModPolynomial>> {
    limits.check_poly_degree(n_max as u64)?;
    Ok(stirling2_table_modp(n_max, p, limits)?
        .map(|row| ModPolynomial::from_residues(p, row))
        .collect())
}

/// `B_0..=B_{n_max} mod p` via the Bell triangle reduced mod `p`.
pub fn bell_numbers_modp(n_max: usize, p: PrimeModulus, limits: &Limits) -> Result<Vec<u64>> {
    limits.check_bell_index(n_max as u64)?;
    let mut out = Vec::with_capacity(n_max + 1);
    let mut row = vec![1 % p.get()];
    let mut next = Vec::with_capacity(n_max + 1);
    out.push(row[0]);
    for _ in 1..=n_max {
        next.clear();
        next.push(*row.last().unwrap());
        for (j, &above) in row.iter().enumerate() {
            let v = p.add(next[j], above);
            next.push(v);
        }
        out.push(next[0]);
        std::mem::swap(&mut row, &mut next);
    }
    Ok(out)
}

/// Exact generalized binomial reduced mod `p`.
pub fn binomial_modp(n: i64, k: u64, p: PrimeModulus) -> ModScalar {
    ModScalar::from_bigint(&binomial(n, k), p)
}

/// Lucas' theorem, extended to negative `n` by `binom(n,k) = (-1)^k binom(k-n-1, k)`.
pub fn binomial_lucas(n: i64, k: u64, p: PrimeModulus) -> ModScalar {
    if n < 0 {
        let upper = (k as i128 - n as i128 - 1) as u64;
        return ModScalar::sign(k, p) * lucas_nonneg(upper, k, p);
    }
    lucas_nonneg(n as u64, k, p)
}

fn lucas_nonneg(mut n: u64, mut k: u64, p: PrimeModulus) -> ModScalar {
    let pv = p.get();
    let mut acc = ModScalar::one(p);
    while k > 0 || n > 0 {
        let (nd, kd) = (n % pv, k % pv);
        if kd > nd {
            return ModScalar::zero(p);
        }
        // small digit binomial, computed in F_p
        let mut num = ModScalar::one(p);
        let mut den = ModScalar::one(p);
        for i in 0..kd {
            num = num * ModScalar::new(nd - i, p);
            den = den * ModScalar::new(i + 1, p);
        }
        acc = acc * num * super::scalar::mod_inverse(den).expect("digit factorial is a unit");
        n /= pv;
        k /= pv;
    }
    acc
}
