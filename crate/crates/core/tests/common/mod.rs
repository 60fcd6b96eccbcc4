//! Brute-force oracles shared by the integration tests. None of these touch the
//! library's sequence generators.

#![allow(dead_code)]

use bellcong::exact::{BigInt, Rational};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Counts of set partitions of an `n`-set by block count, via restricted growth strings.
pub fn set_partitions_by_blocks(n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    if n == 0 {
        counts[0] = 1;
        return counts;
    }
    let mut rgs = vec![0usize; n];
    fn walk(rgs: &mut Vec<usize>, i: usize, max: usize, counts: &mut [u64]) {
        if i == rgs.len() {
            counts[max + 1] += 1;
            return;
        }
        for v in 0..=max + 1 {
            rgs[i] = v;
            walk(rgs, i + 1, max.max(v), counts);
        }
    }
    walk(&mut rgs, 1, 0, &mut counts);
    counts
}

/// Fixed-point-free permutations of `n` elements, by exhaustive enumeration.
pub fn derangement_count(n: usize) -> u64 {
    fn walk(used: &mut [bool], pos: usize) -> u64 {
        let n = used.len();
        if pos == n {
            return 1;
        }
        let mut total = 0;
        for v in 0..n {
            if !used[v] && v != pos {
                used[v] = true;
                total += walk(used, pos + 1);
                used[v] = false;
            }
        }
        total
    }
    walk(&mut vec![false; n], 0)
}

/// Bell numbers by the binomial recurrence, written out independently of the
/// library.
pub fn bell_by_hand(n_max: usize) -> Vec<BigInt> {
    let mut bells = vec![BigInt::one()];
    for n in 0..n_max {
        let mut acc = BigInt::zero();
        let mut c = BigInt::one();
        for (k, b) in bells.iter().enumerate() {
            acc += &c * b;
            c = c * BigInt::from(n - k) / BigInt::from(k + 1);
        }
        bells.push(acc);
    }
    bells
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// A p-integral rational reduced into `[0, p)`.
pub fn rational_mod(r: &Rational, p: u64) -> u64 {
    let pb = BigInt::from(p);
    let num = r.numer().mod_floor(&pb).to_u64().unwrap();
    let den = r.denom().mod_floor(&pb).to_u64().unwrap();
    assert_ne!(den, 0, "denominator divisible by p");
    (num as u128 * pow_mod(den, p - 2, p) as u128 % p as u128) as u64
}

/// `sum_{k=1}^{upper-1} B_k / (-n)^k` as an exact rational, then mod p.
pub fn bell_sum_mod(bells: &[BigInt], upper: usize, n: u64, p: u64) -> u64 {
    let mut acc = Rational::zero();
    let mut den = BigInt::one();
    let neg_n = -BigInt::from(n);
    for b in &bells[1..upper] {
        den *= &neg_n;
        acc += Rational::new(b.clone(), den.clone());
    }
    rational_mod(&acc, p)
}

/// `a (-1)^(n-1) D_{n-1} mod p` with `D` from the alternating factorial sum in plain integers.
pub fn derangement_side_mod(a: u64, n: u64, p: u64) -> u64 {
    let m = n - 1;
    let mut d = BigInt::zero();
    let mut ratio = BigInt::one(); // m!/k!, k descending
    for k in (0..=m).rev() {
        if k % 2 == 0 {
            d += &ratio;
        } else {
            d -= &ratio;
        }
        ratio *= BigInt::from(k.max(1));
    }
    let mut v = d * BigInt::from(a);
    if m % 2 == 1 {
        v = -v;
    }
    let pb = BigInt::from(p);
    let r = v.mod_floor(&pb);
    assert!(!r.is_negative());
    r.to_u64().unwrap()
}

pub fn is_prime_naive(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}
