// Screens the fifteen quartic candidates with both condition sets and
// prints the exact sides of condition 5.
//
// cargo run -p stci --example screen_quartic

use stci::enumerate::{enumerate_candidates, EnumerationOptions};
use stci::reference::rational_quartic;
use stci::report::{format_screen, Format};
use stci::screen::{screen_candidate, ScreenMode, Verdict};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let curve = rational_quartic();
    let candidates = enumerate_candidates(curve, &EnumerationOptions::default()).candidates;
    for mode in [ScreenMode::Weak, ScreenMode::Strong] {
        let reports = candidates
            .iter()
            .map(|t| screen_candidate(curve, t, mode))
            .collect::<Result<Vec<_>, _>>()?;
        println!("## {mode:?}");
        print!("{}", format_screen(&reports, Format::Markdown, false));
        let survivors = reports
            .iter()
            .filter(|r| r.verdict() == Verdict::Survives)
            .count();
        println!("{survivors} of {} survive\n", reports.len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
