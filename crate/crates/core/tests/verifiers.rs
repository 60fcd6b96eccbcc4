mod common;

use bellcong::exact::bell_numbers;
use bellcong::lab::{
    run_sweep, verify_bell_polynomial_at_prime_power, verify_bell_polynomial_recurrence,
    verify_binomial_alternation, verify_binomial_ratio, verify_gertsch_robert,
    verify_polynomial_sun_zagier, verify_prime_power_sun_zagier, verify_sun_zagier,
    verify_touchard, CongruenceCase, Status,
};
use bellcong::modp::{PrimeModulus, PrimePower};
use bellcong::{Error, Limits};

use common::{bell_sum_mod, derangement_side_mod};

fn pm(p: u64) -> PrimeModulus {
    PrimeModulus::new(p).unwrap()
}

fn pp(p: u64, a: u32) -> PrimePower {
    PrimePower::new(pm(p), a).unwrap()
}

fn lim() -> Limits {
    Limits::default()
}

#[test]
fn sun_zagier_examples() {
    let r = verify_sun_zagier(pm(5), 1, &lim()).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!((r.lhs.as_str(), r.rhs.as_str()), ("1", "1"));
    let r = verify_sun_zagier(pm(5), 2, &lim()).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!((r.lhs.as_str(), r.rhs.as_str()), ("0", "0"));
    let r = verify_sun_zagier(pm(3), 3, &lim()).unwrap();
    assert_eq!(
        r.status,
        Status::SkippedHypothesis {
            hypothesis: "p divides n".into()
        }
    );
}

#[test]
fn prime_power_hand_witness() {
    // -1 + 2 - 5 + 15 - 52 + 203 - 877 + 4140 = 3425 = 3 * 1141 + 2
    let bells = bell_numbers(8, &lim()).unwrap();
    let alternating: i64 = bells[1..]
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let v: i64 = b.try_into().unwrap();
            if i % 2 == 0 {
                -v
            } else {
                v
            }
        })
        .sum();
    assert_eq!(alternating, 3425);
    assert_eq!(alternating % 3, 2);

    let r = verify_prime_power_sun_zagier(pp(3, 2), 1, &lim()).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!((r.lhs.as_str(), r.rhs.as_str()), ("2", "2"));
}

#[test]
fn prime_power_matches_rational_oracle() {
    let bells = bell_numbers(400, &lim()).unwrap();
    for (p, a) in [(2u64, 3u32), (2, 8), (3, 4), (5, 3), (7, 2), (19, 2)] {
        let q = pp(p, a);
        for n in 1..=12u64 {
            let r = verify_prime_power_sun_zagier(q, n, &lim()).unwrap();
            if n % p == 0 {
                assert!(matches!(r.status, Status::SkippedHypothesis { .. }));
                continue;
            }
            let lhs = bell_sum_mod(&bells, q.value() as usize, n, p);
            let rhs = derangement_side_mod(u64::from(a), n, p);
            assert_eq!(r.lhs, lhs.to_string(), "p={p} a={a} n={n}");
            assert_eq!(r.rhs, rhs.to_string(), "p={p} a={a} n={n}");
            assert_eq!(r.status, Status::Pass);
        }
    }
}

#[test]
fn a_equals_one_specializes() {
    for p in [2u64, 3, 5, 7, 11] {
        for n in 1..=15 {
            let sz = verify_sun_zagier(pm(p), n, &lim()).unwrap();
            let pp1 = verify_prime_power_sun_zagier(pp(p, 1), n, &lim()).unwrap();
            assert_eq!(sz.status, pp1.status);
            assert_eq!(sz.lhs, pp1.lhs);
        }
    }
}

#[test]
fn polynomial_examples() {
    let r = verify_polynomial_sun_zagier(pp(2, 1), 1, &lim()).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!((r.lhs.as_str(), r.rhs.as_str()), ("x^2", "x^2"));
    // lhs = (-x)(-x + x + x^2) = -x^3 == 2 x^3 (mod 3)
    let r = verify_polynomial_sun_zagier(pp(3, 1), 1, &lim()).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!((r.lhs.as_str(), r.rhs.as_str()), ("2*x^3", "2*x^3"));
    let r = verify_polynomial_sun_zagier(pp(3, 1), 3, &lim()).unwrap();
    assert!(matches!(r.status, Status::SkippedHypothesis { .. }));
}

#[test]
fn touchard_examples() {
    for (p, m, n) in [(2u64, 1u32, 0u64), (3, 1, 1), (5, 0, 0)] {
        let r = verify_touchard(pm(p), m, n, &lim()).unwrap();
        assert_eq!(r.status, Status::Pass, "p={p} m={m} n={n}");
    }
    let r = verify_touchard(pm(3), 1, 1, &lim()).unwrap();
    assert_eq!((r.lhs.as_str(), r.rhs.as_str()), ("0", "0"));
}

#[test]
fn gertsch_robert_examples() {
    let r = verify_gertsch_robert(pp(2, 1), 0, &lim()).unwrap();
    assert_eq!(
        (r.status.clone(), r.lhs.as_str()),
        (Status::Pass, "x + x^2")
    );
    let r = verify_gertsch_robert(pp(3, 1), 0, &lim()).unwrap();
    assert_eq!(
        (r.status.clone(), r.lhs.as_str()),
        (Status::Pass, "x + x^3")
    );
    // B_5(x) = x + 15x^2 + 25x^3 + 10x^4 + x^5 == x + x^2 + x^3 + x^5 (mod 2)
    let r = verify_gertsch_robert(pp(2, 2), 1, &lim()).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.lhs, "x + x^2 + x^3 + x^5");
}

#[test]
fn bell_polynomial_at_prime_power_examples() {
    let r = verify_bell_polynomial_at_prime_power(pp(2, 1), &lim()).unwrap();
    assert_eq!(
        (r.status.clone(), r.rhs.as_str()),
        (Status::Pass, "x + x^2")
    );
    let r = verify_bell_polynomial_at_prime_power(pp(3, 1), &lim()).unwrap();
    assert_eq!(
        (r.status.clone(), r.rhs.as_str()),
        (Status::Pass, "x + x^3")
    );
    let r = verify_bell_polynomial_at_prime_power(pp(2, 3), &lim()).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.lhs, "x + x^2 + x^4 + x^8");
}

#[test]
fn binomial_ratio_examples() {
    let r = verify_binomial_ratio(pp(3, 2), 3, 0, &lim()).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!((r.lhs.as_str(), r.rhs.as_str()), ("p^0*2", "p^0*2"));
    let r = verify_binomial_ratio(pp(2, 2), 1, 1, &lim()).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!((r.lhs.as_str(), r.rhs.as_str()), ("p^1*1", "p^1*1"));
    assert!(matches!(
        verify_binomial_ratio(pp(2, 2), 2, 2, &lim()),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn binomial_alternation_examples() {
    for j in 0..9 {
        let r = verify_binomial_alternation(pp(3, 2), j, &lim()).unwrap();
        assert_eq!(r.status, Status::Pass);
    }
    let r = verify_binomial_alternation(pp(3, 2), 3, &lim()).unwrap();
    assert_eq!(r.lhs, "2");
}

#[test]
fn recurrence_sweep() {
    let r = verify_bell_polynomial_recurrence(0, &lim()).unwrap();
    assert_eq!(r.status, Status::Pass);
    let r = verify_bell_polynomial_recurrence(1, &lim()).unwrap();
    assert_eq!((r.lhs.as_str(), r.rhs.as_str()), ("x", "x"));
    let r = verify_bell_polynomial_recurrence(50, &lim()).unwrap();
    assert_eq!(r.status, Status::Pass);
}

#[test]
fn theorem_verifiers_reject_zero_n() {
    assert!(verify_sun_zagier(pm(5), 0, &lim()).is_err());
    assert!(verify_polynomial_sun_zagier(pp(5, 1), 0, &lim()).is_err());
}

#[test]
fn caps_are_enforced() {
    let tight = Limits {
        max_prime_power: 100,
        ..Limits::default()
    };
    assert!(matches!(
        verify_prime_power_sun_zagier(pp(11, 2), 1, &tight),
        Err(Error::ResourceLimit { .. })
    ));
}

#[test]
fn sweep_handles_empty_skips_and_errors() {
    assert!(run_sweep([], 4, &lim(), None).is_empty());

    let tight = Limits {
        max_prime_power: 30,
        ..Limits::default()
    };
    let cases = vec![
        CongruenceCase::SunZagier { p: pm(3), n: 3 },
        CongruenceCase::SunZagier { p: pm(3), n: 2 },
        CongruenceCase::PrimePowerSunZagier { q: pp(7, 2), n: 1 },
        CongruenceCase::SunZagier { p: pm(3), n: 2 },
    ];
    let reports = run_sweep(cases, 2, &tight, None);
    assert_eq!(reports.len(), 3);
    assert_eq!(
        reports[0].case,
        CongruenceCase::SunZagier { p: pm(3), n: 2 }
    );
    assert_eq!(reports[0].status, Status::Pass);
    assert!(matches!(
        reports[1].status,
        Status::SkippedHypothesis { .. }
    ));
    assert!(matches!(reports[2].status, Status::Error { .. }));
}

#[test]
fn sweep_grid_all_pass() {
    let mut cases = Vec::new();
    for p in bellcong::modp::primes_in(2, 19) {
        for a in 1..=2 {
            let q = pp(p, a);
            for n in 1..=30 {
                cases.push(CongruenceCase::PrimePowerSunZagier { q, n });
            }
        }
    }
    let reports = run_sweep(cases, 4, &lim(), None);
    for r in &reports {
        let expect_skip = r.case.n().unwrap() % r.case.p().unwrap() == 0;
        if expect_skip {
            assert!(matches!(r.status, Status::SkippedHypothesis { .. }));
        } else {
            assert_eq!(r.status, Status::Pass, "{}", r.case);
        }
    }
}
