//! The full regression run behind `stci selftest`: published quartic
//! tables, oracle equivalences and invariant sweeps.

use std::fmt;

use crate::enumerate::{
    degenerate_family_members, enumerate_candidates, l_max_bound, Diagnostic, EnumerationOptions,
};
use crate::error::Result;
use crate::invariants::{exceptional_coefficient, miyaoka_budget, pa_ci, pa_primitive};
use crate::oracle::{brute_force_candidates, brute_force_profiles};
use crate::rational::ExactRational;
use crate::reference::{
    quartic_sharp_enumeration, quartic_table_canonical, rational_quartic,
    QUARTIC_CONFIRMED_CONDITION5_EXCLUSIONS, QUARTIC_TEN_CASES,
};
use crate::screen::{
    check_report_invariants, profile_search, screen_candidate, ScreenMode, Verdict,
};
use crate::types::{basic_relation_sides, CandidateTuple, CurveClass};
use crate::witness::{castelnuovo_bound, witness_tuple};

/// Curve classes used for enumeration-versus-oracle comparisons.
pub const ORACLE_CURVES: [(i64, i64); 7] = [(3, 0), (4, 0), (4, 1), (5, 0), (5, 1), (5, 2), (6, 4)];
pub const ORACLE_A_MAX: i64 = 60;
pub const ORACLE_B_MAX: i64 = 300;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {}: {}", self.name, self.detail)
    }
}

fn check(name: &'static str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name,
        passed,
        detail: detail.into(),
    }
}

fn curve(d: i64, g: i64) -> CurveClass {
    CurveClass::new(d, g).expect("fixed curve classes are valid")
}

/// Enumeration inside the oracle box, with degenerate families expanded to
/// their members in the box.
pub fn enumeration_in_box(c: CurveClass, a_max: i64, b_max: i64) -> Vec<CandidateTuple> {
    let options = EnumerationOptions {
        b_max,
        ..Default::default()
    };
    let e = enumerate_candidates(c, &options);
    let mut rows: Vec<_> = e
        .candidates
        .into_iter()
        .filter(|t| t.a <= a_max && t.b <= b_max)
        .collect();
    for diag in &e.diagnostics {
        if let Diagnostic::DegenerateFamily { l, a, .. } = diag {
            if *a <= a_max {
                rows.extend(degenerate_family_members(c.d(), *l, *a, b_max, 2));
            }
        }
    }
    rows.sort_by_key(CandidateTuple::canonical_key);
    rows
}

/// Lowest `l` any candidate with `a + b >= 4` and `m >= 2` can take:
/// `l (m - 1) = d(a + b - 4) - 2g + 2 >= 2 - 2g`.
pub fn oracle_l_min(c: CurveClass) -> i64 {
    (2 - 2 * c.g()).min(0)
}

pub fn quartic_enumeration() -> Check {
    let e = enumerate_candidates(rational_quartic(), &EnumerationOptions::default());
    let ok = e.candidates == quartic_table_canonical()
        && e.candidates == quartic_sharp_enumeration()
        && e.diagnostics.is_empty();
    check(
        "quartic enumeration",
        ok,
        format!("{} tuples, expected 15", e.candidates.len()),
    )
}

pub fn quartic_condition5() -> Check {
    let c = rational_quartic();
    let mut excluded = Vec::new();
    for t in quartic_table_canonical() {
        match screen_candidate(c, &t, ScreenMode::Weak) {
            Ok(r) if r.verdict() == Verdict::ExcludedByCondition5 => excluded.push((t.a, t.b)),
            Ok(_) => {}
            Err(e) => return check("quartic condition 5", false, e.to_string()),
        }
    }
    let mut expected = QUARTIC_CONFIRMED_CONDITION5_EXCLUSIONS.to_vec();
    expected.sort();
    excluded.sort();
    check(
        "quartic condition 5",
        excluded == expected,
        format!("excluded {excluded:?}"),
    )
}

pub fn quartic_survivors() -> Check {
    let c = rational_quartic();
    let mut failures = Vec::new();
    for (a, b, l) in QUARTIC_TEN_CASES {
        let t = CandidateTuple::new(a, b, a * b / 4, l);
        for mode in [ScreenMode::Weak, ScreenMode::Strong] {
            match screen_candidate(c, &t, mode) {
                Ok(r) if r.verdict() == Verdict::Survives => {}
                Ok(r) => failures.push(format!("{t} {mode:?}: {}", r.verdict())),
                Err(e) => failures.push(format!("{t}: {e}")),
            }
        }
    }
    check(
        "quartic survivors",
        failures.is_empty(),
        if failures.is_empty() {
            "all ten cases survive both screens".to_string()
        } else {
            failures.join("; ")
        },
    )
}

pub fn witness_sweep() -> Check {
    let quartic_ok = witness_tuple(rational_quartic())
        .map(|w| w.candidate == CandidateTuple::new(17, 220, 935, 1))
        .unwrap_or(false);
    let mut count = 0;
    let mut failures = Vec::new();
    for d in 2..=30 {
        for g in 0..=castelnuovo_bound(d) {
            count += 1;
            if let Err(e) = witness_tuple(curve(d, g)) {
                failures.push(format!("({d},{g}): {e}"));
            }
        }
    }
    check(
        "witness sweep",
        quartic_ok && failures.is_empty(),
        format!("{count} curve classes, quartic witness ok: {quartic_ok}, failures: {failures:?}"),
    )
}

pub fn oracle_equivalence() -> Check {
    let mut failures = Vec::new();
    for (d, g) in ORACLE_CURVES {
        let c = curve(d, g);
        let fast = enumeration_in_box(c, ORACLE_A_MAX, ORACLE_B_MAX);
        let slow = brute_force_candidates(
            c,
            ORACLE_A_MAX,
            ORACLE_B_MAX,
            oracle_l_min(c),
            l_max_bound(c),
        );
        if fast != slow {
            failures.push(format!(
                "candidates ({d},{g}): {} vs {}",
                fast.len(),
                slow.len()
            ));
        }
    }
    let c = rational_quartic();
    for t in quartic_table_canonical().iter().filter(|t| t.b > 4) {
        let fast = profile_search(c, t).map(|p| p.profiles().to_vec());
        let slow = brute_force_profiles(c, t, None);
        if fast.as_deref() != Ok(slow.as_slice()) {
            failures.push(format!("profiles {t}"));
        }
    }
    check(
        "oracle equivalence",
        failures.is_empty(),
        if failures.is_empty() {
            "enumeration and profile search agree with brute force".to_string()
        } else {
            failures.join("; ")
        },
    )
}

pub fn invariant_suite() -> Check {
    let mut failures = Vec::new();
    for (d, g) in ORACLE_CURVES {
        let c = curve(d, g);
        let e = enumerate_candidates(c, &EnumerationOptions::default());
        for t in &e.candidates {
            let (lhs, rhs) = basic_relation_sides(c, t);
            if (lhs == rhs) != (pa_primitive(g, t.l, t.m) == pa_ci(t.a, t.b)) {
                failures.push(format!("genus identity {t}"));
            }
            match screen_candidate(c, t, ScreenMode::Strong).map(|r| check_report_invariants(&r)) {
                Ok(Ok(())) => {}
                Ok(Err(e)) | Err(e) => failures.push(e.to_string()),
            }
        }
    }
    for n in 1..=60 {
        for k in 1..=n {
            let ok =
                exceptional_coefficient(n, k).ok() == exceptional_coefficient(n, n + 1 - k).ok();
            if !ok {
                failures.push(format!("symmetry A_{n}^{k}"));
            }
        }
    }
    for b in 1..=1000i64 {
        let bb = b as i128;
        if miyaoka_budget(b) != ExactRational::new(2 * bb * (bb - 1) * (bb - 1), 3) {
            failures.push(format!("budget b={b}"));
        }
    }
    check(
        "invariant suite",
        failures.is_empty(),
        if failures.is_empty() {
            "all identities hold exactly".to_string()
        } else {
            failures.join("; ")
        },
    )
}

pub fn degenerate_detection() -> Check {
    let options = EnumerationOptions::default();
    let e = enumerate_candidates(curve(8, 9), &options);
    let flagged = e
        .diagnostics
        .iter()
        .any(|d| matches!(d, Diagnostic::DegenerateFamily { l: 16, a: 4, .. }));
    let emitted = e.candidates.iter().any(|t| t.l == 16 && t.a == 4);
    check(
        "degenerate family",
        flagged && !emitted,
        format!(
            "{} candidates, {} diagnostics",
            e.candidates.len(),
            e.diagnostics.len()
        ),
    )
}

pub fn run_all() -> Vec<Check> {
    vec![
        quartic_enumeration(),
        quartic_condition5(),
        quartic_survivors(),
        witness_sweep(),
        oracle_equivalence(),
        invariant_suite(),
        degenerate_detection(),
    ]
}

/// Fails with the first failing check.
pub fn run_strict() -> Result<Vec<Check>> {
    let checks = run_all();
    if let Some(bad) = checks.iter().find(|c| !c.passed) {
        return Err(crate::error::Error::Invariant(bad.to_string()));
    }
    Ok(checks)
}
