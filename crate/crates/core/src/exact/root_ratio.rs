use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::sequences::bell_numbers;
use crate::error::Result;
use crate::limits::Limits;

/// Outcome of comparing `r_n = B_{n+1}^{1/(n+1)} / B_n^{1/n}` with `r_{n+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootRatioStep {
    pub n: u64,
    /// `true` iff `r_n > r_{n+1}` strictly.
    pub decreasing: bool,
}

/// Decides `r_n > r_{n+1}` for every `1 <= n < n_max` without floating point.
///
/// Raising both sides to the power `n(n+1)(n+2)` gives the integer comparison
/// `B_{n+1}^{2n(n+2)} > B_n^{(n+1)(n+2)} * B_{n+2}^{n(n+1)}`.
pub fn root_ratio_monotonicity(n_max: u64, limits: &Limits) -> Result<Vec<RootRatioStep>> {
    limits.check_root_ratio(n_max)?;
    let bells = bell_numbers(n_max as usize + 1, limits)?;
    Ok((1..n_max)
        .into_par_iter()
        .map(|n| RootRatioStep {
            n,
            decreasing: strictly_decreasing_at(&bells, n),
        })
        .collect())
}

fn strictly_decreasing_at(bells: &[BigInt], n: u64) -> bool {
    let i = n as usize;
    let pow = |b: &BigInt, e: u64| num_traits::pow(b.clone(), e as usize);
    let lhs = pow(&bells[i + 1], 2 * n * (n + 2));
    let rhs = pow(&bells[i], (n + 1) * (n + 2)) * pow(&bells[i + 2], n * (n + 1));
    lhs > rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_comparison() {
        // 2^6 = 64 > 1 * 5^2 = 25
        let steps = root_ratio_monotonicity(2, &Limits::default()).unwrap();
        assert_eq!(
            steps,
            vec![RootRatioStep {
                n: 1,
                decreasing: true
            }]
        );
    }

    #[test]
    fn second_comparison_by_hand() {
        // 5^16 vs 2^12 * 15^6
        let lhs = num_traits::pow(BigInt::from(5), 16);
        let rhs = num_traits::pow(BigInt::from(2), 12) * num_traits::pow(BigInt::from(15), 6);
        let steps = root_ratio_monotonicity(3, &Limits::default()).unwrap();
        assert_eq!(steps[1].decreasing, lhs > rhs);
        assert!(steps[1].decreasing);
    }

    #[test]
    fn degenerate_and_capped() {
        assert!(root_ratio_monotonicity(1, &Limits::default())
            .unwrap()
            .is_empty());
        assert!(root_ratio_monotonicity(0, &Limits::default())
            .unwrap()
            .is_empty());
        assert!(root_ratio_monotonicity(201, &Limits::default()).is_err());
    }
}
