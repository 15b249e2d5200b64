//! Naive reference searches for differential testing of the pruned paths.
//!
//! Nothing here reuses the rearranged relation, the divisor listing or the
//! closed forms from [`crate::invariants`]; each condition is tested as
//! written.

use num_bigint::BigInt;

use crate::types::{CandidateTuple, CurveClass, SingularityProfile};

/// Every `(a, b, m, l)` with `2 <= a <= a_max`, `a <= b <= b_max`,
/// `m = ab/d >= 2` integral and `l_min <= l <= l_max` satisfying the basic
/// relation. Canonically sorted.
pub fn brute_force_candidates(
    curve: CurveClass,
    a_max: i64,
    b_max: i64,
    l_min: i64,
    l_max: i64,
) -> Vec<CandidateTuple> {
    let (d, g) = (curve.d() as i128, curve.g() as i128);
    let mut out = Vec::new();
    for a in 2..=a_max as i128 {
        for b in a..=b_max as i128 {
            if (a * b) % d != 0 {
                continue;
            }
            let m = a * b / d;
            if m < 2 {
                continue;
            }
            for l in l_min as i128..=l_max as i128 {
                if 2 * g - 2 + l * (m - 1) == d * (a + b - 4) {
                    out.push(CandidateTuple::new(a as i64, b as i64, m as i64, l as i64));
                }
            }
        }
    }
    out.sort_by_key(CandidateTuple::canonical_key);
    out
}

/// Every `(alpha, n, k)` with `alpha k = A + l`, `1 <= n <= n_max`,
/// `2k <= n + 1`, `(n + 1)(lb - d^2) = alpha b k^2` and
/// `3 alpha n (n + 2) <= 2b(b - 1)^2 (n + 1)`. Sorted by `k`.
///
/// `n_max` defaults to `2b(b - 1)^2 / 3`; for each pair the scan also stops
/// at `alpha n < 2b(b - 1)^2 / 3`, which the last condition implies.
pub fn brute_force_profiles(
    curve: CurveClass,
    t: &CandidateTuple,
    n_max: Option<i64>,
) -> Vec<SingularityProfile> {
    let (d, g) = (curve.d() as i128, curve.g() as i128);
    let (b, l) = (t.b as i128, t.l as i128);
    let den = l * b - d * d;
    if b <= 4 || den <= 0 {
        return Vec::new();
    }
    let target = d * (b - 4) - 2 * g + 2 + l;
    let twice_budget_x3 = 2 * b * (b - 1) * (b - 1);
    let n_max = n_max.map(|n| n as i128).unwrap_or(twice_budget_x3 / 3);
    let mut out = Vec::new();
    for alpha in 1..=target {
        for k in 1..=target {
            if alpha * k > target {
                break;
            }
            if alpha * k != target {
                continue;
            }
            // alpha n < 2b(b-1)^2/3
            let cap = n_max.min((twice_budget_x3 - 1) / (3 * alpha));
            for n in 1..=cap {
                if 2 * k > n + 1 {
                    continue;
                }
                if (n + 1) * den != alpha * b * k * k {
                    continue;
                }
                let lhs = BigInt::from(3) * alpha * n * (n + 2);
                let rhs = BigInt::from(twice_budget_x3) * (n + 1);
                if lhs <= rhs {
                    out.push(SingularityProfile {
                        alpha: alpha as i64,
                        n: n as i64,
                        k: k as i64,
                    });
                }
            }
        }
    }
    out.sort_by_key(|p| p.k);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::quartic_table_canonical;

    fn curve(d: i64, g: i64) -> CurveClass {
        CurveClass::new(d, g).unwrap()
    }

    #[test]
    fn quartic_box() {
        assert_eq!(
            brute_force_candidates(curve(4, 0), 50, 250, 1, 8),
            quartic_table_canonical()
        );
        assert!(brute_force_candidates(curve(4, 0), 50, 250, -10, 0).is_empty());
    }

    #[test]
    fn degenerate_family_in_box() {
        let found = brute_force_candidates(curve(8, 9), 4, 100, 16, 16);
        let expected: Vec<_> = (4..=100)
            .step_by(2)
            .map(|b| CandidateTuple::new(4, b, b / 2, 16))
            .collect();
        assert_eq!(found, expected);
    }

    #[test]
    fn quartic_profiles() {
        let t = CandidateTuple::new(4, 7, 7, 5);
        assert_eq!(
            brute_force_profiles(curve(4, 0), &t, Some(200)),
            vec![
                SingularityProfile {
                    alpha: 19,
                    n: 6,
                    k: 1
                },
                SingularityProfile {
                    alpha: 1,
                    n: 132,
                    k: 19
                },
            ]
        );
        assert!(
            brute_force_profiles(curve(4, 0), &CandidateTuple::new(5, 5, 0, 1), None).is_empty()
        );
    }
}
