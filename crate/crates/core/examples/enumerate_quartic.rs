// Lists every candidate (a, b, m, l) for the smooth rational quartic and
// checks the generic bounds against the quartic-specific ones.
//
// cargo run -p stci --example enumerate_quartic

use stci::enumerate::{enumerate_candidates, EnumerationOptions};
use stci::reference::{quartic_sharp_enumeration, rational_quartic};
use stci::report::{format_candidates, Format};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let curve = rational_quartic();
    let found = enumerate_candidates(curve, &EnumerationOptions::default());
    print!(
        "{}",
        format_candidates(curve, &found.candidates, Format::Markdown)
    );

    let sharp = quartic_sharp_enumeration();
    if found.candidates != sharp {
        return Err("generic and quartic-specific bounds disagree".into());
    }
    println!(
        "{} candidates; generic bound l <= 8 and sharp bound l <= 7 agree",
        sharp.len()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
