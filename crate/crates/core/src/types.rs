//! Domain types shared across the crate and the candidate validity check.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::witness::castelnuovo_bound;

/// Degree and genus of a smooth irreducible space curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CurveClass {
    d: i64,
    g: i64,
}

impl CurveClass {
    /// Requires `d >= 1` and `g >= 0`.
    pub fn new(d: i64, g: i64) -> Result<Self> {
        if d < 1 {
            return Err(Error::InvalidCurve {
                d,
                g,
                reason: "degree must be at least 1".into(),
            });
        }
        if g < 0 {
            return Err(Error::InvalidCurve {
                d,
                g,
                reason: "genus must be non-negative".into(),
            });
        }
        Ok(Self { d, g })
    }

    /// Like [`CurveClass::new`], additionally rejecting genera that no smooth
    /// non-planar curve of degree `d` can have.
    pub fn existence_checked(d: i64, g: i64) -> Result<Self> {
        let curve = Self::new(d, g)?;
        let bound = castelnuovo_bound(d);
        if g > bound {
            return Err(Error::AboveCastelnuovo { d, g, bound });
        }
        Ok(curve)
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn g(&self) -> i64 {
        self.g
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(d={}, g={})", self.d, self.g)
    }
}

/// Surface degrees `a <= b`, multiplicity `m` and the degree `l` of the
/// line bundle attached to the primitive structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CandidateTuple {
    pub a: i64,
    pub b: i64,
    pub m: i64,
    pub l: i64,
}

impl CandidateTuple {
    pub const fn new(a: i64, b: i64, m: i64, l: i64) -> Self {
        Self { a, b, m, l }
    }

    /// The ordered record `(d, g, a, b, m, l)` every output format uses.
    pub fn canonical_record(&self, curve: CurveClass) -> [i64; 6] {
        [curve.d(), curve.g(), self.a, self.b, self.m, self.l]
    }

    /// Sort key: `l` descending, then `a`, then `b` ascending.
    pub fn canonical_key(&self) -> (std::cmp::Reverse<i64>, i64, i64, i64) {
        (std::cmp::Reverse(self.l), self.a, self.b, self.m)
    }
}

impl fmt::Display for CandidateTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(a={}, b={}, m={}, l={})",
            self.a, self.b, self.m, self.l
        )
    }
}

/// `alpha` singular points of type A_n^k along the curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SingularityProfile {
    pub alpha: i64,
    pub n: i64,
    pub k: i64,
}

impl SingularityProfile {
    /// Enforces `alpha, n, k >= 1` and `2k <= n + 1`.
    pub fn new(alpha: i64, n: i64, k: i64) -> Result<Self> {
        if alpha < 1 || n < 1 || k < 1 {
            return Err(Error::InvalidArgument(format!(
                "profile entries must be positive: alpha={alpha}, n={n}, k={k}"
            )));
        }
        if 2 * k > n + 1 {
            return Err(Error::BranchOutOfRange { n, k });
        }
        Ok(Self { alpha, n, k })
    }

    /// A profile exempt from the `2k <= n + 1` normalization. Only the weak
    /// screening form produces these.
    pub(crate) fn unnormalized(alpha: i64, n: i64, k: i64) -> Self {
        Self { alpha, n, k }
    }
}

impl fmt::Display for SingularityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}xA_{}^{}", self.alpha, self.n, self.k)
    }
}

/// Lower limits on `a` and `m` that a candidate must respect.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CandidatePolicy {
    pub min_a: i64,
    pub allow_m1: bool,
}

impl Default for CandidatePolicy {
    fn default() -> Self {
        Self {
            min_a: 2,
            allow_m1: false,
        }
    }
}

impl CandidatePolicy {
    pub fn min_m(&self) -> i64 {
        if self.allow_m1 {
            1
        } else {
            2
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `m d != a b`.
    DegreeRelation {
        md: i128,
        ab: i128,
    },
    /// `2g - 2 + l(m - 1) != d(a + b - 4)`.
    BasicRelation {
        lhs: i128,
        rhs: i128,
    },
    Ordering {
        a: i64,
        b: i64,
    },
    /// `a` below the policy minimum; `a = 1` would put the curve in a plane.
    SurfaceDegree {
        a: i64,
        min_a: i64,
    },
    Multiplicity {
        m: i64,
        min_m: i64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DegreeRelation { md, ab } => {
                write!(f, "degree relation md = ab fails: {md} != {ab}")
            }
            Violation::BasicRelation { lhs, rhs } => write!(
                f,
                "basic relation 2g-2+l(m-1) = d(a+b-4) fails: {lhs} != {rhs}"
            ),
            Violation::Ordering { a, b } => write!(f, "expected a <= b, got a={a} > b={b}"),
            Violation::SurfaceDegree { a, min_a } => {
                write!(f, "surface degree a={a} below minimum {min_a}")
            }
            Violation::Multiplicity { m, min_m } => {
                write!(f, "multiplicity m={m} below minimum {min_m}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validity {
    Valid,
    Invalid(Vec<Violation>),
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            Validity::Valid => &[],
            Validity::Invalid(v) => v,
        }
    }
}

/// Both sides of the basic relation `2g - 2 + l(m - 1) = d(a + b - 4)`.
pub fn basic_relation_sides(curve: CurveClass, t: &CandidateTuple) -> (i128, i128) {
    let (d, g) = (curve.d() as i128, curve.g() as i128);
    let lhs = 2 * g - 2 + t.l as i128 * (t.m as i128 - 1);
    let rhs = d * (t.a as i128 + t.b as i128 - 4);
    (lhs, rhs)
}

/// Checks the degree relation, the basic relation, `a <= b` and the
/// default policy lower bounds.
pub fn validate_candidate(curve: CurveClass, t: &CandidateTuple) -> Validity {
    validate_candidate_with(curve, t, CandidatePolicy::default())
}

pub fn validate_candidate_with(
    curve: CurveClass,
    t: &CandidateTuple,
    policy: CandidatePolicy,
) -> Validity {
    let mut violations = Vec::new();
    let md = t.m as i128 * curve.d() as i128;
    let ab = t.a as i128 * t.b as i128;
    if md != ab {
        violations.push(Violation::DegreeRelation { md, ab });
    }
    let (lhs, rhs) = basic_relation_sides(curve, t);
    if lhs != rhs {
        violations.push(Violation::BasicRelation { lhs, rhs });
    }
    if t.a > t.b {
        violations.push(Violation::Ordering { a: t.a, b: t.b });
    }
    if t.a < policy.min_a {
        violations.push(Violation::SurfaceDegree {
            a: t.a,
            min_a: policy.min_a,
        });
    }
    if t.m < policy.min_m() {
        violations.push(Violation::Multiplicity {
            m: t.m,
            min_m: policy.min_m(),
        });
    }
    if violations.is_empty() {
        Validity::Valid
    } else {
        Validity::Invalid(violations)
    }
}
