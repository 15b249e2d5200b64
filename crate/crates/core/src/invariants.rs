//! Closed-form numerical invariants of multiple structures, A_n^k
//! singularities and degree-`b` surfaces with rational double points.
//!
//! Integer-valued formulas return `i128` so that the sweeps over large
//! witness tuples (b ~ d^4) cannot overflow; rational ones return
//! [`ExactRational`].

use crate::error::{Error, Result};
use crate::rational::ExactRational;

/// Arithmetic genus of a primitive structure of multiplicity `m` and type
/// `L` with `deg L = l` on a curve of genus `g`:
/// `m(g - 1) + 1 + l m (m - 1) / 2`.
pub fn pa_primitive(g: i64, l: i64, m: i64) -> i128 {
    assert!(m >= 1, "multiplicity must be positive");
    let (g, l, m) = (g as i128, l as i128, m as i128);
    // m(m - 1) is even
    m * (g - 1) + 1 + l * (m * (m - 1) / 2)
}

/// Arithmetic genus `1 + ab(a + b - 4)/2` of a complete intersection of
/// surfaces of degrees `a` and `b`.
pub fn pa_ci(a: i64, b: i64) -> i128 {
    assert!(a >= 1 && b >= 1, "surface degrees must be positive");
    let (a, b) = (a as i128, b as i128);
    let twice = a * b * (a + b - 4);
    assert_eq!(twice % 2, 0, "ab(a+b-4) is always even");
    1 + twice / 2
}

/// `A = d(b - 4) - 2g + 2`.
pub fn capital_a(d: i64, g: i64, b: i64) -> i128 {
    d as i128 * (b as i128 - 4) - 2 * g as i128 + 2
}

/// The value `A + l` that `alpha * k` must take.
pub fn alpha_k_target(d: i64, g: i64, b: i64, l: i64) -> i128 {
    capital_a(d, g, b) + l as i128
}

/// Contribution `deg L + d(s - 4) - 2g + 2` of the singularities of a
/// degree-`s` surface to the normal bundle of the curve. Only `s = b` is
/// used elsewhere in the crate.
pub fn normal_contribution(d: i64, g: i64, s: i64, l: i64) -> i128 {
    l as i128 + d as i128 * (s as i128 - 4) - 2 * g as i128 + 2
}

/// Local contribution `min(k, n - k + 1)` of an A_n^k point.
pub fn n_local(n: i64, k: i64) -> Result<i64> {
    check_branch(n, k)?;
    Ok(k.min(n - k + 1))
}

/// Coefficient `k(n + 1 - k)/(n + 1)` of the exceptional divisor met by the
/// strict transform at an A_n^k point.
pub fn exceptional_coefficient(n: i64, k: i64) -> Result<ExactRational> {
    check_branch(n, k)?;
    Ok(ExactRational::new(
        k as i128 * (n - k + 1) as i128,
        n as i128 + 1,
    ))
}

fn check_branch(n: i64, k: i64) -> Result<()> {
    if n < 1 || k < 1 || k > n {
        return Err(Error::BranchOutOfRange { n, k });
    }
    Ok(())
}

/// `d(b - 4) + d^2/b + 2 - 2g`.
pub fn cbar_dot_e(d: i64, g: i64, b: i64) -> ExactRational {
    assert!(b >= 1, "surface degree must be positive");
    let d2 = d as i128 * d as i128;
    ExactRational::from(capital_a(d, g, b)) + ExactRational::new(d2, b as i128)
}

/// `c_1^2 = b(b - 4)^2` of the minimal resolution of a degree-`b` surface
/// with rational double points.
pub fn chern_c1_sq(b: i64) -> i128 {
    let b = b as i128;
    b * (b - 4) * (b - 4)
}

/// `c_2 = b^3 - 4b^2 + 6b`.
pub fn chern_c2(b: i64) -> i128 {
    let b = b as i128;
    b * b * b - 4 * b * b + 6 * b
}

/// Upper bound `c_2 - c_1^2/3` on the summed orbifold Euler corrections,
/// which simplifies to `2b(b - 1)^2 / 3`.
pub fn miyaoka_budget(b: i64) -> ExactRational {
    assert!(b >= 1, "surface degree must be positive");
    let budget = ExactRational::from(chern_c2(b)) - ExactRational::new(chern_c1_sq(b), 3);
    let bb = b as i128;
    let closed = ExactRational::new(2 * bb * (bb - 1) * (bb - 1), 3);
    assert_eq!(budget, closed, "miyaoka budget identity failed at b={b}");
    budget
}

/// `n + 1 - 1/(n + 1)` for an A_n point.
pub fn euler_nu(n: i64) -> ExactRational {
    assert!(n >= 1, "A_n index must be positive");
    let n1 = n as i128 + 1;
    ExactRational::from(n1) - ExactRational::new(1, n1)
}
