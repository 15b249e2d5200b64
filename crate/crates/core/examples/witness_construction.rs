// Builds the l = 1, a = d^2 + 1 witness for a range of curve classes and
// confirms all five conditions hold for each.
//
// cargo run -p stci --example witness_construction

use stci::report::format_witness;
use stci::{castelnuovo_bound, witness_tuple, CurveClass};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    print!(
        "{}",
        format_witness(&witness_tuple(CurveClass::new(4, 0)?)?)
    );

    let mut checked = 0;
    for d in 2..=12 {
        for g in 0..=castelnuovo_bound(d) {
            let w = witness_tuple(CurveClass::new(d, g)?)?;
            assert!(w.conditions.all());
            checked += 1;
        }
    }
    println!("witness verified for {checked} curve classes with 2 <= d <= 12");

    // above the Castelnuovo bound there is no smooth curve to speak of
    assert!(witness_tuple(CurveClass::new(4, 2)?).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
