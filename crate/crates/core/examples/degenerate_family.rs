// Shows a curve class where la = d^2 and the basic relation holds for
// every b: the family is reported, not expanded.
//
// cargo run -p stci --example degenerate_family

use stci::enumerate::{enumerate_candidates, solve_b, BSolution, EnumerationOptions};
use stci::report::format_diagnostics;
use stci::CurveClass;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let curve = CurveClass::existence_checked(8, 9)?;
    assert_eq!(solve_b(curve, 16, 4), BSolution::DegenerateFamily);

    let options = EnumerationOptions {
        b_max: 10_000,
        ..Default::default()
    };
    let found = enumerate_candidates(curve, &options);
    println!("{} finite candidates for {curve}", found.candidates.len());
    print!("{}", format_diagnostics(&found.diagnostics));
    assert!(found.candidates.iter().all(|t| !(t.l == 16 && t.a == 4)));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
