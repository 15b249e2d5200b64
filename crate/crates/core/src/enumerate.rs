//! Enumeration of every candidate `(a, b, m, l)` for a curve class.
//!
//! For `l > 0` the Gauss-map bound caps `l`, the rearranged basic relation
//! caps `a`, and each `(l, a)` determines `b` through
//!
//! ```text
//! b (l a - d^2) = d^2 a - 4 d^2 - d(2g - 2) + d l
//! ```
//!
//! unless `l a = d^2`, where the relation either has no solution or holds
//! for every `b`. The latter families are reported, never expanded. For
//! `l <= 0` the relation forces `d(a + b - 4) <= 2g - 2`, a finite box.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::types::{validate_candidate_with, CandidatePolicy, CandidateTuple, CurveClass};

pub const DEFAULT_B_MAX: i64 = 1_000_000;

/// Gauss-map bound `3d + 2g - 4` on `l` for a non-planar curve.
pub fn l_max_bound(curve: CurveClass) -> i64 {
    3 * curve.d() + 2 * curve.g() - 4
}

/// Exclusive upper bound on `a` for a given `l > 0`: the least integer
/// `>= 2d^2/l + d`, so every admissible `a` is strictly below it.
pub fn a_upper_bound(d: i64, l: i64) -> Result<i64> {
    if l <= 0 {
        return Err(Error::InvalidArgument(format!(
            "a_upper_bound needs l >= 1, got l={l}"
        )));
    }
    let numer = 2 * d as i128 * d as i128 + d as i128 * l as i128;
    let l = l as i128;
    let ceil = (numer + l - 1).div_euclid(l);
    Ok(ceil as i64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BSolution {
    Found(i64),
    NoSolution,
    /// `l a = d^2` and the relation holds for every `b`.
    DegenerateFamily,
}

/// Solves the basic relation (with `m = ab/d` substituted) for `b`.
///
/// Integrality of `m` is not checked here.
pub fn solve_b(curve: CurveClass, l: i64, a: i64) -> BSolution {
    let (d, g) = (curve.d() as i128, curve.g() as i128);
    let (l, a) = (l as i128, a as i128);
    let coeff = l * a - d * d;
    let rhs = d * d * a - 4 * d * d - d * (2 * g - 2) + d * l;
    if coeff == 0 {
        return if rhs == 0 {
            BSolution::DegenerateFamily
        } else {
            BSolution::NoSolution
        };
    }
    if rhs % coeff != 0 {
        return BSolution::NoSolution;
    }
    let b = rhs / coeff;
    if b >= a && b >= 1 {
        BSolution::Found(b as i64)
    } else {
        BSolution::NoSolution
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Replaces the Gauss-map bound on `l`.
    pub l_max: Option<i64>,
    /// Truncation for degenerate families.
    pub b_max: i64,
    pub include_m1: bool,
    pub a_min: i64,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        Self {
            l_max: None,
            b_max: DEFAULT_B_MAX,
            include_m1: false,
            a_min: 2,
        }
    }
}

impl EnumerationOptions {
    pub fn policy(&self) -> CandidatePolicy {
        CandidatePolicy {
            min_a: self.a_min,
            allow_m1: self.include_m1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    /// Every `b` in the family satisfies the basic relation; `members` counts
    /// those with `a <= b <= b_max` and admissible integral `m`.
    DegenerateFamily {
        l: i64,
        a: i64,
        b_max: i64,
        members: u64,
        smallest_b: Option<i64>,
    },
    /// With `m = 1` the basic relation no longer involves `l`, so the pair
    /// `(a, b)` is a complete intersection for every `l <= 0`.
    UnconstrainedL { a: i64, b: i64 },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::DegenerateFamily {
                l,
                a,
                b_max,
                members,
                smallest_b,
            } => {
                write!(
                    f,
                    "degenerate-family l={l} a={a}: {members} members with b <= {b_max}"
                )?;
                if let Some(b) = smallest_b {
                    write!(f, " (smallest b={b})")?;
                }
                Ok(())
            }
            Diagnostic::UnconstrainedL { a, b } => {
                write!(
                    f,
                    "unconstrained-l a={a} b={b} m=1: any l <= 0 satisfies the relation"
                )
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Enumeration {
    pub candidates: Vec<CandidateTuple>,
    pub diagnostics: Vec<Diagnostic>,
}

pub fn enumerate_candidates(curve: CurveClass, options: &EnumerationOptions) -> Enumeration {
    let l_max = options.l_max.unwrap_or_else(|| l_max_bound(curve));
    let min_m = options.policy().min_m();

    let per_l: Vec<(Vec<CandidateTuple>, Vec<Diagnostic>)> = (1..=l_max)
        .into_par_iter()
        .map(|l| positive_branch(curve, l, options, min_m))
        .collect();

    let mut out = Enumeration::default();
    for (cands, diags) in per_l {
        out.candidates.extend(cands);
        out.diagnostics.extend(diags);
    }

    let (cands, diags) = non_positive_branch(curve, options);
    out.candidates.extend(cands);
    out.diagnostics.extend(diags);

    out.candidates.sort_by_key(CandidateTuple::canonical_key);
    out.candidates.dedup();
    debug_assert!(out.candidates.iter().all(|t| validate_candidate_with(
        curve,
        t,
        options.policy()
    )
    .is_valid()));
    out
}

fn positive_branch(
    curve: CurveClass,
    l: i64,
    options: &EnumerationOptions,
    min_m: i64,
) -> (Vec<CandidateTuple>, Vec<Diagnostic>) {
    let d = curve.d();
    let mut cands = Vec::new();
    let mut diags = Vec::new();
    let a_end = a_upper_bound(d, l).expect("l >= 1");
    for a in options.a_min..a_end {
        match solve_b(curve, l, a) {
            BSolution::Found(b) => {
                let ab = a as i128 * b as i128;
                if ab % d as i128 == 0 {
                    let m = (ab / d as i128) as i64;
                    if m >= min_m {
                        cands.push(CandidateTuple::new(a, b, m, l));
                    }
                }
            }
            BSolution::NoSolution => {}
            BSolution::DegenerateFamily => {
                diags.push(degenerate_family(d, l, a, options.b_max, min_m));
            }
        }
    }
    (cands, diags)
}

/// Members `(a, b, m, l)` of a degenerate family with `a <= b <= b_max`,
/// integral `m = ab/d` and `m >= min_m`.
pub fn degenerate_family_members(
    d: i64,
    l: i64,
    a: i64,
    b_max: i64,
    min_m: i64,
) -> impl Iterator<Item = CandidateTuple> {
    (a..=b_max).filter_map(move |b| {
        let ab = a as i128 * b as i128;
        (ab % d as i128 == 0 && ab / d as i128 >= min_m as i128)
            .then(|| CandidateTuple::new(a, b, (ab / d as i128) as i64, l))
    })
}

fn degenerate_family(d: i64, l: i64, a: i64, b_max: i64, min_m: i64) -> Diagnostic {
    let mut members = 0u64;
    let mut smallest_b = None;
    for t in degenerate_family_members(d, l, a, b_max, min_m) {
        members += 1;
        smallest_b.get_or_insert(t.b);
    }
    Diagnostic::DegenerateFamily {
        l,
        a,
        b_max,
        members,
        smallest_b,
    }
}

fn non_positive_branch(
    curve: CurveClass,
    options: &EnumerationOptions,
) -> (Vec<CandidateTuple>, Vec<Diagnostic>) {
    let (d, g) = (curve.d() as i128, curve.g() as i128);
    let budget = 2 * g - 2;
    let mut cands = Vec::new();
    let mut diags = Vec::new();
    let mut a = options.a_min.max(1) as i128;
    while d * (2 * a - 4) <= budget {
        let mut b = a;
        while d * (a + b - 4) <= budget {
            let ab = a * b;
            if ab % d == 0 {
                let m = ab / d;
                let numer = d * (a + b - 4) - 2 * g + 2;
                if m == 1 {
                    if options.include_m1 && numer == 0 {
                        diags.push(Diagnostic::UnconstrainedL {
                            a: a as i64,
                            b: b as i64,
                        });
                    }
                } else if m >= 2 && numer % (m - 1) == 0 {
                    let l = numer / (m - 1);
                    if l <= 0 {
                        cands.push(CandidateTuple::new(a as i64, b as i64, m as i64, l as i64));
                    }
                }
            }
            b += 1;
        }
        a += 1;
    }
    (cands, diags)
}
