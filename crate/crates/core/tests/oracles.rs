mod common;

use bellcong::exact::{
    bell_numbers, bell_polynomial, bell_polynomial_via_recurrence, bell_polynomials, derangements,
    egf_bell_oracle, root_ratio_monotonicity, stirling2_table, BigInt,
};
use bellcong::Limits;
use num_traits::{One, Zero};

use common::{bell_by_hand, derangement_count, set_partitions_by_blocks};

#[test]
fn brute_force_partitions_and_derangements() {
    let l = Limits::default();
    let stirling = stirling2_table(8, &l).unwrap();
    let bells = bell_numbers(8, &l).unwrap();
    let ders = derangements(8, &l).unwrap();
    for n in 0..=8usize {
        let counts = set_partitions_by_blocks(n);
        for k in 0..=n {
            assert_eq!(stirling[n][k], BigInt::from(counts[k]), "S({n},{k})");
        }
        assert_eq!(bells[n], BigInt::from(counts.iter().sum::<u64>()), "B_{n}");
        assert_eq!(ders[n], BigInt::from(derangement_count(n)), "D_{n}");
    }
    // S(4,2) = 7 by enumeration
    assert_eq!(set_partitions_by_blocks(4)[2], 7);
    assert_eq!(derangement_count(4), 9);
}

#[test]
fn three_bell_paths_agree_to_200() {
    let l = Limits::default();
    let tri = bell_numbers(200, &l).unwrap();
    let egf = egf_bell_oracle(200, &l).unwrap();
    let polys = bell_polynomials(200, &l).unwrap();
    assert_eq!(tri, egf);
    assert_eq!(tri, bell_by_hand(200));
    for (n, poly) in polys.iter().enumerate() {
        assert_eq!(poly.eval(&BigInt::one()), tri[n], "n={n}");
    }
    assert_eq!(bell_polynomial(17, &l).unwrap(), polys[17]);
}

#[test]
fn polynomial_paths_agree_to_200() {
    let l = Limits::default();
    let stirling = bell_polynomials(200, &l).unwrap();
    let recurrence = bell_polynomial_via_recurrence(200, &l).unwrap();
    assert_eq!(stirling, recurrence);
    for (n, poly) in stirling.iter().enumerate().skip(1) {
        assert_eq!(poly.degree(), Some(n));
        assert!(poly.coeff(0).is_zero() || n == 0);
    }
}

#[test]
fn root_ratio_decreasing_to_60() {
    let steps = root_ratio_monotonicity(60, &Limits::default()).unwrap();
    assert_eq!(steps.len(), 59);
    assert!(steps.iter().all(|s| s.decreasing));
    assert_eq!(steps.first().unwrap().n, 1);
}
