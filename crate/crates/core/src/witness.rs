//! Explicit tuples satisfying every five-condition check for any `(d, g)`,
//! showing the conditions can never exclude a curve class on their own.
//!
//! With `l = 1` and `a = d^2 + 1` the basic relation gives
//! `b = d^4 - 3d^2 + 3d - 2gd`, and the profile `alpha = A + 1, n = k = 1`
//! meets the remaining conditions.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{capital_a, miyaoka_budget};
use crate::rational::ExactRational;
use crate::screen::{condition5_check, profile_search, Condition5};
use crate::types::{
    basic_relation_sides, validate_candidate, CandidateTuple, CurveClass, SingularityProfile,
};

/// `floor((d - 2)^2 / 4)`, the largest genus of a smooth non-planar curve of
/// degree `d`.
pub fn castelnuovo_bound(d: i64) -> i64 {
    (d - 2) * (d - 2) / 4
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FiveConditions {
    pub degree_relation: bool,
    pub basic_relation: bool,
    pub alpha_k: bool,
    pub alpha_n_below_budget: bool,
    pub condition5: bool,
}

impl FiveConditions {
    pub fn all(&self) -> bool {
        self.degree_relation
            && self.basic_relation
            && self.alpha_k
            && self.alpha_n_below_budget
            && self.condition5
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub curve: CurveClass,
    pub candidate: CandidateTuple,
    pub profile: SingularityProfile,
    pub conditions: FiveConditions,
    pub condition5: Condition5,
    /// `2b^3 - b^2(4 + 5d^2) + 2b(1 + 4d^2) - 2d^2 - 3d^3`; positivity is a
    /// sufficient (not necessary) route to condition 5.
    pub reduced_polynomial: BigInt,
    /// `b >= d^4 - d^3`.
    pub b_lower_bound: bool,
    /// `A + 1 <= d b`.
    pub alpha_le_db: bool,
    /// Whether the stronger A_n^k profile search also finds a profile.
    pub strong_profile_exists: bool,
}

impl WitnessReport {
    pub fn reduced_polynomial_positive(&self) -> bool {
        self.reduced_polynomial > BigInt::from(0)
    }
}

pub fn witness_tuple(curve: CurveClass) -> Result<WitnessReport> {
    let (d, g) = (curve.d(), curve.g());
    if d < 2 {
        return Err(Error::InvalidArgument(format!(
            "witness construction needs d >= 2, got d={d}"
        )));
    }
    let bound = castelnuovo_bound(d);
    if g > bound {
        return Err(Error::AboveCastelnuovo { d, g, bound });
    }

    let a = d * d + 1;
    let b = d.pow(4) - 3 * d * d + 3 * d - 2 * g * d;
    let m = a * (d.pow(3) - 3 * d + 3 - 2 * g);
    let candidate = CandidateTuple::new(a, b, m, 1);
    if a > b {
        return Err(Error::Invariant(format!("witness {candidate} has a > b")));
    }
    if let Some(v) = validate_candidate(curve, &candidate).violations().first() {
        return Err(Error::Invariant(format!("witness {candidate}: {v}")));
    }

    let a_cap = capital_a(d, g, b);
    let alpha =
        i64::try_from(a_cap + 1).map_err(|_| Error::Invariant("A + 1 overflows i64".into()))?;
    let profile = SingularityProfile::new(alpha, 1, 1)?;
    let condition5 = condition5_check(curve, &candidate);
    let (lhs, rhs) = basic_relation_sides(curve, &candidate);
    let conditions = FiveConditions {
        degree_relation: m as i128 * d as i128 == a as i128 * b as i128,
        basic_relation: lhs == rhs,
        alpha_k: alpha as i128 * profile.k as i128 == a_cap + candidate.l as i128,
        alpha_n_below_budget: ExactRational::from(alpha as i128 * profile.n as i128)
            < miyaoka_budget(b),
        condition5: condition5.pass,
    };
    if !conditions.all() {
        return Err(Error::Invariant(format!(
            "witness {candidate} for {curve} fails {conditions:?}"
        )));
    }

    let (bd, dd) = (BigInt::from(b), BigInt::from(d));
    let d2 = &dd * &dd;
    let d3 = &d2 * &dd;
    let reduced_polynomial = 2 * &bd * &bd * &bd - &bd * &bd * (4 + 5 * &d2)
        + 2 * &bd * (1 + 4 * &d2)
        - 2 * &d2
        - 3 * &d3;
    let strong_profile_exists = profile_search(curve, &candidate)
        .map(|p| !p.profiles().is_empty())
        .unwrap_or(false);

    Ok(WitnessReport {
        curve,
        candidate,
        profile,
        conditions,
        condition5,
        reduced_polynomial,
        b_lower_bound: b as i128 >= (d as i128).pow(4) - (d as i128).pow(3),
        alpha_le_db: a_cap < d as i128 * b as i128,
        strong_profile_exists,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(d: i64, g: i64) -> CurveClass {
        CurveClass::new(d, g).unwrap()
    }

    #[test]
    fn castelnuovo_examples() {
        assert_eq!(castelnuovo_bound(4), 1);
        assert_eq!(castelnuovo_bound(2), 0);
        assert_eq!(castelnuovo_bound(8), 9);
        assert_eq!(castelnuovo_bound(5), 2);
        assert_eq!(castelnuovo_bound(1), 0);
    }

    #[test]
    fn quartic_witness_is_last_table_row() {
        let w = witness_tuple(curve(4, 0)).unwrap();
        assert_eq!(w.candidate, CandidateTuple::new(17, 220, 935, 1));
        assert_eq!(
            w.profile,
            SingularityProfile {
                alpha: 867,
                n: 1,
                k: 1
            }
        );
        assert!(w.conditions.all());
        assert!(w.reduced_polynomial_positive());
    }

    #[test]
    fn conic_witness() {
        let w = witness_tuple(curve(2, 0)).unwrap();
        assert_eq!(w.candidate, CandidateTuple::new(5, 10, 25, 1));
        assert!(w.conditions.all());
        // 2000 - 2400 + 340 - 8 - 24: the reduced polynomial is not positive
        // here even though condition 5 holds (6480 < 9720)
        assert_eq!(w.reduced_polynomial, BigInt::from(-92));
        assert_eq!(w.condition5.lhs, ExactRational::from(6480i64));
        assert_eq!(w.condition5.rhs, ExactRational::from(9720i64));
    }

    #[test]
    fn castelnuovo_gate() {
        assert_eq!(
            witness_tuple(curve(4, 2)),
            Err(Error::AboveCastelnuovo {
                d: 4,
                g: 2,
                bound: 1
            })
        );
        assert!(matches!(
            witness_tuple(curve(1, 0)),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn witness_is_enumerated() {
        use crate::enumerate::{enumerate_candidates, EnumerationOptions};
        for d in 2..=6 {
            for g in 0..=castelnuovo_bound(d) {
                let c = curve(d, g);
                let w = witness_tuple(c).unwrap();
                let e = enumerate_candidates(c, &EnumerationOptions::default());
                assert!(e.candidates.contains(&w.candidate), "({d},{g})");
            }
        }
    }

    #[test]
    fn auxiliary_bounds_hold_for_d_at_least_3() {
        for d in 3..=30 {
            for g in 0..=castelnuovo_bound(d) {
                let w = witness_tuple(curve(d, g)).unwrap();
                assert!(w.b_lower_bound && w.alpha_le_db, "{d},{g}");
                assert!(w.reduced_polynomial_positive(), "{d},{g}");
            }
        }
    }
}
