use bellcong::exact::{binomial, BigInt};
use bellcong::modp::{
    binomial_lucas, binomial_modp, mod_inverse, poly_add, poly_equal, poly_scale, valued_unit_of,
    ModPolynomial, ModScalar, PrimeModulus,
};
use num_traits::Zero;
use proptest::prelude::*;

const TEST_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn pm(p: u64) -> PrimeModulus {
    PrimeModulus::new(p).unwrap()
}

fn arb_poly(p: u64) -> impl Strategy<Value = ModPolynomial> {
    prop::collection::vec(0..p, 0..=33).prop_map(move |c| ModPolynomial::from_residues(pm(p), c))
}

fn arb_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(TEST_PRIMES.to_vec())
}

fn arb_poly_triple() -> impl Strategy<Value = (ModPolynomial, ModPolynomial, ModPolynomial, u64)> {
    arb_prime().prop_flat_map(|p| (arb_poly(p), arb_poly(p), arb_poly(p), 0..p))
}

const TEN_30: i128 = 1_000_000_000_000_000_000_000_000_000_000;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn valued_unit_reconstructs(n in -TEN_30..=TEN_30) {
        prop_assume!(n != 0);
        let n = BigInt::from(n);
        for p in TEST_PRIMES {
            let v = valued_unit_of(&n, pm(p)).unwrap();
            prop_assert!(!v.unit.is_zero());
            let pv = num_traits::pow(BigInt::from(p), v.valuation as usize);
            let modulus = &pv * BigInt::from(p);
            let diff = &pv * BigInt::from(v.unit.residue()) - &n;
            prop_assert!((diff % modulus).is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn ring_axioms((a, b, c, s) in arb_poly_triple()) {
        let p = a.modulus();
        let s = ModScalar::new(s, p);
        prop_assert!(poly_equal(&poly_add(&a, &b).unwrap(), &poly_add(&b, &a).unwrap()).unwrap());
        let left = poly_add(&poly_add(&a, &b).unwrap(), &c).unwrap();
        let right = poly_add(&a, &poly_add(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let distributed = poly_add(&poly_scale(&a, s).unwrap(), &poly_scale(&b, s).unwrap()).unwrap();
        prop_assert_eq!(poly_scale(&poly_add(&a, &b).unwrap(), s).unwrap(), distributed);
        let x = ModScalar::new(3, p);
        prop_assert_eq!(poly_add(&a, &b).unwrap().eval(x), a.eval(x) + b.eval(x));
    }

    #[test]
    fn inverse_is_inverse(p in arb_prime(), s in 1u64..1000) {
        let s = ModScalar::new(s, pm(p));
        prop_assume!(!s.is_zero());
        prop_assert_eq!((mod_inverse(s).unwrap() * s).residue(), 1);
    }

    #[test]
    fn lucas_agrees_with_exact(p in arb_prime(), n in -300i64..3000, k in 0u64..200) {
        prop_assert_eq!(binomial_lucas(n, k, pm(p)), binomial_modp(n, k, pm(p)));
    }

    #[test]
    fn binomial_pascal_rule(n in -200i64..200, k in 1u64..60) {
        prop_assert_eq!(binomial(n, k), binomial(n - 1, k) + binomial(n - 1, k - 1));
    }
}
