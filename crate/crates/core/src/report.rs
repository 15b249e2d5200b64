//! Rendering of enumeration and screening results as JSON, CSV or Markdown.
//!
//! Every format carries the canonical record `(d, g, a, b, m, l)`; rationals
//! go out as decimal-digit strings. Output is a pure function of its input.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::enumerate::Diagnostic;
use crate::invariants::pa_ci;
use crate::rational::ExactRational;
use crate::screen::{ProfileSearch, ScreenReport};
use crate::types::{CandidateTuple, CurveClass, SingularityProfile};
use crate::witness::WitnessReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Markdown,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Markdown),
            other => Err(format!(
                "unknown format '{other}' (expected json, csv or md)"
            )),
        }
    }
}

#[derive(Serialize)]
struct CandidateRow {
    d: i64,
    g: i64,
    a: i64,
    b: i64,
    m: i64,
    l: i64,
    pa: String,
}

impl CandidateRow {
    fn new(curve: CurveClass, t: &CandidateTuple) -> Self {
        let [d, g, a, b, m, l] = t.canonical_record(curve);
        Self {
            d,
            g,
            a,
            b,
            m,
            l,
            pa: pa_ci(a, b).to_string(),
        }
    }
}

#[derive(Serialize)]
struct Condition5Row<'a> {
    lhs: &'a ExactRational,
    rhs: &'a ExactRational,
    pass: bool,
}

#[derive(Serialize)]
struct ScreenRow<'a> {
    d: i64,
    g: i64,
    a: i64,
    b: i64,
    m: i64,
    l: i64,
    pa: String,
    verdict: &'static str,
    condition5: Condition5Row<'a>,
    profiles: &'a [SingularityProfile],
    flags: Vec<&'static str>,
}

impl<'a> ScreenRow<'a> {
    fn new(r: &'a ScreenReport) -> Self {
        let base = CandidateRow::new(r.curve, &r.candidate);
        Self {
            d: base.d,
            g: base.g,
            a: base.a,
            b: base.b,
            m: base.m,
            l: base.l,
            pa: base.pa,
            verdict: r.verdict().as_str(),
            condition5: Condition5Row {
                lhs: &r.condition5.lhs,
                rhs: &r.condition5.rhs,
                pass: r.condition5.pass,
            },
            profiles: &r.profiles,
            flags: r.flags.iter().map(|f| f.as_str()).collect(),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable rows");
    s.push('\n');
    s
}

fn to_csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
}

pub fn format_candidates(
    curve: CurveClass,
    candidates: &[CandidateTuple],
    format: Format,
) -> String {
    let rows: Vec<CandidateRow> = candidates
        .iter()
        .map(|t| CandidateRow::new(curve, t))
        .collect();
    match format {
        Format::Json => to_json(&rows),
        Format::Csv => to_csv(
            &["d", "g", "a", "b", "m", "l", "pa"],
            rows.iter().map(|r| {
                vec![
                    r.d.to_string(),
                    r.g.to_string(),
                    r.a.to_string(),
                    r.b.to_string(),
                    r.m.to_string(),
                    r.l.to_string(),
                    r.pa.clone(),
                ]
            }),
        ),
        Format::Markdown => {
            let mut s = String::new();
            s.push_str("| l | (a,b) | m | p_a |\n|---|---|---|---|\n");
            for r in &rows {
                let _ = writeln!(s, "| {} | ({},{}) | {} | {} |", r.l, r.a, r.b, r.m, r.pa);
            }
            s
        }
    }
}

fn profile_list(profiles: &[SingularityProfile]) -> String {
    profiles
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

/// With `list_profiles`, the Markdown table spells out every profile
/// instead of counting them.
pub fn format_screen(reports: &[ScreenReport], format: Format, list_profiles: bool) -> String {
    let rows: Vec<ScreenRow> = reports.iter().map(ScreenRow::new).collect();
    match format {
        Format::Json => to_json(&rows),
        Format::Csv => to_csv(
            &[
                "d", "g", "a", "b", "m", "l", "pa", "verdict", "c5_lhs", "c5_rhs", "c5_pass",
                "profiles", "flags",
            ],
            rows.iter().map(|r| {
                vec![
                    r.d.to_string(),
                    r.g.to_string(),
                    r.a.to_string(),
                    r.b.to_string(),
                    r.m.to_string(),
                    r.l.to_string(),
                    r.pa.clone(),
                    r.verdict.to_string(),
                    r.condition5.lhs.to_string(),
                    r.condition5.rhs.to_string(),
                    r.condition5.pass.to_string(),
                    if list_profiles {
                        profile_list(r.profiles)
                    } else {
                        r.profiles.len().to_string()
                    },
                    r.flags.join(";"),
                ]
            }),
        ),
        Format::Markdown => {
            let mut s = String::new();
            s.push_str(
                "| l | (a,b) | m | verdict | condition 5 (LHS < RHS) | profiles | flags |\n\
                 |---|---|---|---|---|---|---|\n",
            );
            for r in &rows {
                let relation = if r.condition5.pass { "<" } else { ">=" };
                let profiles = if list_profiles {
                    profile_list(r.profiles)
                } else {
                    r.profiles.len().to_string()
                };
                let _ = writeln!(
                    s,
                    "| {} | ({},{}) | {} | {} | {} {} {} | {} | {} |",
                    r.l,
                    r.a,
                    r.b,
                    r.m,
                    r.verdict,
                    r.condition5.lhs,
                    relation,
                    r.condition5.rhs,
                    profiles,
                    r.flags.join(", ")
                );
            }
            s
        }
    }
}

pub fn format_diagnostics(diagnostics: &[Diagnostic]) -> String {
    diagnostics.iter().map(|d| format!("{d}\n")).collect()
}

pub fn format_witness(w: &WitnessReport) -> String {
    let mut s = String::new();
    let t = &w.candidate;
    let verdict = if w.conditions.all() {
        "all five conditions hold"
    } else {
        "conditions FAIL"
    };
    let _ = writeln!(s, "{}: {verdict}", t);
    let _ = writeln!(s, "curve: {}", w.curve);
    let _ = writeln!(
        s,
        "profile: {} (alpha={}, n={}, k={})",
        w.profile, w.profile.alpha, w.profile.n, w.profile.k
    );
    let _ = writeln!(
        s,
        "condition 5: {} {} {}",
        w.condition5.lhs,
        if w.condition5.pass { "<" } else { ">=" },
        w.condition5.rhs
    );
    let _ = writeln!(
        s,
        "reduced polynomial: {} (positive: {})",
        w.reduced_polynomial,
        w.reduced_polynomial_positive()
    );
    let _ = writeln!(s, "b >= d^4 - d^3: {}", w.b_lower_bound);
    let _ = writeln!(s, "A + 1 <= d b: {}", w.alpha_le_db);
    let _ = writeln!(
        s,
        "A_n^k profile with integral n: {}",
        w.strong_profile_exists
    );
    s
}

pub fn format_profile_search(
    curve: CurveClass,
    t: &CandidateTuple,
    search: &ProfileSearch,
    oracle: &[SingularityProfile],
) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "curve {curve}, candidate {t}");
    match search {
        ProfileSearch::LbLeD2 => {
            let _ = writeln!(s, "no profiles: lb <= d^2");
        }
        ProfileSearch::Found(profiles) => {
            let _ = writeln!(s, "{} profile(s)", profiles.len());
            for p in profiles {
                let _ = writeln!(s, "  alpha={} n={} k={}", p.alpha, p.n, p.k);
            }
        }
    }
    let agree = search.profiles() == oracle;
    let _ = writeln!(
        s,
        "brute-force oracle: {} profile(s), {}",
        oracle.len(),
        if agree { "agrees" } else { "DISAGREES" }
    );
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::{quartic_table_canonical, rational_quartic};
    use crate::screen::{screen_candidate, ScreenMode};

    #[test]
    fn markdown_candidates() {
        let curve = rational_quartic();
        let md = format_candidates(curve, &quartic_table_canonical()[..2], Format::Markdown);
        assert_eq!(
            md,
            "| l | (a,b) | m | p_a |\n|---|---|---|---|\n| 7 | (3,4) | 3 | 19 |\n| 6 | (3,8) | 6 | 85 |\n"
        );
    }

    #[test]
    fn csv_candidates() {
        let curve = rational_quartic();
        let csv = format_candidates(curve, &quartic_table_canonical()[..1], Format::Csv);
        assert_eq!(csv, "d,g,a,b,m,l,pa\n4,0,3,4,3,7,19\n");
    }

    #[test]
    fn json_screen_schema() {
        let curve = rational_quartic();
        let r =
            screen_candidate(curve, &CandidateTuple::new(4, 7, 7, 5), ScreenMode::Strong).unwrap();
        let json = format_screen(&[r], Format::Json, true);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let obj = &v[0];
        let keys: Vec<_> = obj.as_object().unwrap().keys().cloned().collect();
        let mut expected = vec![
            "d",
            "g",
            "a",
            "b",
            "m",
            "l",
            "pa",
            "verdict",
            "condition5",
            "profiles",
            "flags",
        ];
        expected.sort();
        let mut keys_sorted = keys.clone();
        keys_sorted.sort();
        assert_eq!(keys_sorted, expected);
        assert_eq!(obj["verdict"], "survives");
        assert_eq!(obj["condition5"]["lhs"]["num"], "6498");
        assert_eq!(obj["condition5"]["rhs"]["den"], "1");
        assert_eq!(obj["condition5"]["pass"], true);
        assert_eq!(obj["profiles"][1]["n"], 132);
    }

    #[test]
    fn format_parsing() {
        assert_eq!("json".parse(), Ok(Format::Json));
        assert_eq!("md".parse(), Ok(Format::Markdown));
        assert!("xml".parse::<Format>().is_err());
    }
}
