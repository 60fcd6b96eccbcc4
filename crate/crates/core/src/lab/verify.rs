use std::fmt::Display;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;

use super::case::CongruenceCase;
use super::report::{Status, VerificationReport};
use super::tables::SharedTables;
use crate::error::Result;
use crate::exact::{bell_polynomials, binomial, IntPolynomial};
use crate::modp::{
    binomial_modp, mod_inverse, poly_equal, valued_unit_of, ModPolynomial, ModScalar, PrimeModulus,
    PrimePower, ValuedUnit,
};

struct Outcome {
    status: Status,
    lhs: String,
    rhs: String,
}

impl Outcome {
    fn compare(pass: bool, lhs: impl Display, rhs: impl Display) -> Self {
        Self {
            status: if pass { Status::Pass } else { Status::Fail },
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    fn skipped(hypothesis: &str) -> Self {
        Self {
            status: Status::SkippedHypothesis {
                hypothesis: hypothesis.to_string(),
            },
            lhs: String::new(),
            rhs: String::new(),
        }
    }
}

const P_DIVIDES_N: &str = "p divides n";

impl SharedTables {
    /// Checks one case against the prebuilt tables.
    pub fn verify(&self, case: &CongruenceCase) -> Result<VerificationReport> {
        let start = Instant::now();
        case.check_limits(&self.limits)?;
        let outcome = match *case {
            CongruenceCase::SunZagier { p, n } => {
                scalar_outcome(self.scaled_sun_zagier_sides(p, p.get(), 1, n)?)
            }
            CongruenceCase::PrimePowerSunZagier { q, n } => {
                scalar_outcome(self.prime_power_sun_zagier_sides(q, n)?)
            }
            CongruenceCase::PolynomialSunZagier { q, n } => {
                match self.polynomial_sun_zagier_sides(q, n)? {
                    Some((lhs, rhs)) => Outcome::compare(poly_equal(&lhs, &rhs)?, lhs, rhs),
                    None => Outcome::skipped(P_DIVIDES_N),
                }
            }
            CongruenceCase::Touchard { p, m, n } => self.touchard(p, m, n)?,
            CongruenceCase::GertschRobert { q, n } => self.gertsch_robert(q, n)?,
            CongruenceCase::BinomialRatio { q, j, k } => self.binomial_ratio(q, j, k)?,
            CongruenceCase::BellPolynomialAtPrimePower { q } => self.bell_poly_at_prime_power(q)?,
            CongruenceCase::BellPolynomialRecurrence { n_max } => {
                bell_polynomial_recurrence(n_max, &self.limits)?
            }
            CongruenceCase::BinomialAlternation { q, j } => self.binomial_alternation(q, j),
        };
        Ok(VerificationReport {
            case: *case,
            status: outcome.status,
            lhs: outcome.lhs,
            rhs: outcome.rhs,
            elapsed: start.elapsed(),
        })
    }

    /// Both sides of `sum_{k=1}^{upper-1} B_k c^k == a (-1)^(n-1) D_{n-1}` with
    /// `c = (-n)^{-1} mod p`; `None` when `p | n`.
    fn scaled_sun_zagier_sides(
        &self,
        p: PrimeModulus,
        upper: u64,
        a: u32,
        n: u64,
    ) -> Result<Option<(ModScalar, ModScalar)>> {
        if n.is_multiple_of(p.get()) {
            return Ok(None);
        }
        let c = mod_inverse(-ModScalar::new(n, p))?;
        let bells = self.bells(p, upper - 1)?;
        let mut lhs = ModScalar::zero(p);
        let mut ck = ModScalar::one(p);
        for &b in &bells[1..upper as usize] {
            ck = ck * c;
            lhs = lhs + ModScalar::new(b, p) * ck;
        }
        let d = ModScalar::from_bigint(self.derangement(n - 1)?, p);
        let rhs = ModScalar::new(u64::from(a), p) * ModScalar::sign(n - 1, p) * d;
        Ok(Some((lhs, rhs)))
    }

    /// Residues of both sides of the prime-power congruence for Bell numbers;
    /// `None` when `p | n`.
    pub fn prime_power_sun_zagier_sides(
        &self,
        q: PrimePower,
        n: u64,
    ) -> Result<Option<(ModScalar, ModScalar)>> {
        self.scaled_sun_zagier_sides(q.modulus(), q.value(), q.exponent(), n)
    }

    /// Both sides of the Bell-polynomial congruence as elements of `F_p[x]`:
    ///
    /// ```text
    /// lhs = (-x)^n sum_{k=1}^{p^a-1} B_k(x) (-n)^{-k}
    /// rhs = -sum_{r=1}^{a} x^{p^r} sum_{k=0}^{n-1} ((n-1)!/k!) (-x)^k
    /// ```
    ///
    /// `None` when `p | n`.
    pub fn polynomial_sun_zagier_sides(
        &self,
        q: PrimePower,
        n: u64,
    ) -> Result<Option<(ModPolynomial, ModPolynomial)>> {
        let p = q.modulus();
        if n.is_multiple_of(p.get()) {
            return Ok(None);
        }
        let c = mod_inverse(-ModScalar::new(n, p))?;
        let polys = self.polys(p, q.value() - 1)?;

        let mut sum = ModPolynomial::zero(p);
        let mut ck = ModScalar::one(p);
        for b in &polys[1..q.value() as usize] {
            ck = ck * c;
            sum.add_scaled_shifted(b, ck, 0)?;
        }
        let mut lhs = ModPolynomial::zero(p);
        lhs.add_scaled_shifted(&sum, ModScalar::sign(n, p), n as usize)?;

        // (n-1)!/k! as exact integers, from k = n-1 down to 0
        let mut inner = vec![0u64; n as usize];
        let mut ratio = BigInt::one();
        for k in (0..n).rev() {
            let term = ModScalar::sign(k, p) * ModScalar::from_bigint(&ratio, p);
            inner[k as usize] = term.residue();
            ratio *= BigInt::from(k);
        }
        let inner = ModPolynomial::from_residues(p, inner);
        let mut rhs = ModPolynomial::zero(p);
        let minus_one = -ModScalar::one(p);
        for pr in q.powers() {
            rhs.add_scaled_shifted(&inner, minus_one, pr as usize)?;
        }
        Ok(Some((lhs, rhs)))
    }

    fn touchard(&self, p: PrimeModulus, m: u32, n: u64) -> Result<Outcome> {
        let shift = p.get().pow(m);
        let bells = self.bells(p, shift + n)?;
        let at = |i: u64| ModScalar::new(bells[i as usize], p);
        let lhs = at(shift + n);
        let rhs = ModScalar::new(u64::from(m), p) * at(n) + at(n + 1);
        Ok(Outcome::compare(lhs == rhs, lhs, rhs))
    }

    fn gertsch_robert(&self, q: PrimePower, n: u64) -> Result<Outcome> {
        let p = q.modulus();
        let polys = self.polys(p, q.value() + n)?;
        let lhs = &polys[(q.value() + n) as usize];
        let mut rhs = polys[n as usize + 1].clone();
        for pr in q.powers() {
            rhs.add_scaled_shifted(&polys[n as usize], ModScalar::one(p), pr as usize)?;
        }
        Ok(Outcome::compare(poly_equal(lhs, &rhs)?, lhs, rhs))
    }

    fn bell_poly_at_prime_power(&self, q: PrimePower) -> Result<Outcome> {
        let p = q.modulus();
        let polys = self.polys(p, q.value())?;
        let lhs = &polys[q.value() as usize];
        let mut rhs = ModPolynomial::monomial(p, 1, ModScalar::one(p));
        for pr in q.powers() {
            rhs.add_scaled_shifted(&ModPolynomial::one(p), ModScalar::one(p), pr as usize)?;
        }
        Ok(Outcome::compare(poly_equal(lhs, &rhs)?, lhs, rhs))
    }

    /// Compares `binom(p^a-1-k, j)` and `binom(-1-k, j)` as p-adic numbers:
    /// equal valuations and unit parts whose ratio is `1 mod p`.
    fn binomial_ratio(&self, q: PrimePower, j: u64, k: u64) -> Result<Outcome> {
        let p = q.modulus();
        let top = q.value() - 1 - k;
        let (num, den) = match &self.pascal {
            Some(t) if t.n_max() as u64 >= k + j && t.n_max() as u64 >= top => {
                let sign = if j.is_multiple_of(2) { 1 } else { -1 };
                (
                    t.get(top as usize, j as usize),
                    BigInt::from(sign) * t.get((k + j) as usize, j as usize),
                )
            }
            _ => (binomial(top as i64, j), binomial(-1 - k as i64, j)),
        };
        let vn = valued_unit_of(&num, p)?;
        let vd = valued_unit_of(&den, p)?;
        let pass =
            vn.valuation == vd.valuation && vn.unit * mod_inverse(vd.unit)? == ModScalar::one(p);
        Ok(Outcome::compare(pass, render_valued(vn), render_valued(vd)))
    }

    fn binomial_alternation(&self, q: PrimePower, j: u64) -> Outcome {
        let p = q.modulus();
        let top = q.value() - 1;
        let lhs = match &self.pascal {
            Some(t) if t.n_max() as u64 >= top => {
                ModScalar::from_bigint(&t.get(top as usize, j as usize), p)
            }
            _ => binomial_modp(top as i64, j, p),
        };
        let rhs = ModScalar::sign(j, p);
        Outcome::compare(lhs == rhs, lhs, rhs)
    }
}

fn scalar_outcome(sides: Option<(ModScalar, ModScalar)>) -> Outcome {
    match sides {
        Some((lhs, rhs)) => Outcome::compare(lhs == rhs, lhs, rhs),
        None => Outcome::skipped(P_DIVIDES_N),
    }
}

fn render_valued(v: ValuedUnit) -> String {
    format!("p^{}*{}", v.valuation, v.unit)
}

/// `B_{m+1}(x) = x sum_k binom(m,k) B_k(x)` for every `m < n_max`, with the
/// `B_k(x)` taken from the Stirling rows.
fn bell_polynomial_recurrence(n_max: u64, limits: &crate::Limits) -> Result<Outcome> {
    let polys = bell_polynomials(n_max as usize, limits)?;
    let mut pascal = vec![BigInt::one()];
    let mut last = (polys[0].clone(), polys[0].clone());
    for m in 0..n_max as usize {
        let mut acc = IntPolynomial::zero();
        for (c, b) in pascal.iter().zip(&polys) {
            acc.add_scaled(b, c);
        }
        let rhs = acc.shift(1);
        let lhs = &polys[m + 1];
        if *lhs != rhs {
            return Ok(Outcome::compare(false, lhs, rhs));
        }
        last = (lhs.clone(), rhs);
        pascal = crate::exact::next_pascal_row(&pascal);
    }
    Ok(Outcome::compare(true, last.0, last.1))
}
