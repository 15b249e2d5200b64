// Finds every A_n^k profile compatible with a candidate and checks it
// against the brute-force search and the exceptional-divisor identity.
//
// cargo run -p stci --example singularity_profiles

use stci::invariants::{cbar_dot_e, exceptional_coefficient};
use stci::oracle::brute_force_profiles;
use stci::reference::rational_quartic;
use stci::screen::profile_search;
use stci::{CandidateTuple, ExactRational};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let curve = rational_quartic();
    for t in [
        CandidateTuple::new(4, 7, 7, 5),
        CandidateTuple::new(12, 18, 54, 2),
    ] {
        let found = profile_search(curve, &t)?;
        println!("{t}: {} profile(s)", found.profiles().len());
        let target = cbar_dot_e(curve.d(), curve.g(), t.b);
        for p in found.profiles() {
            let ce = ExactRational::from(p.alpha) * exceptional_coefficient(p.n, p.k)?;
            println!("  {p}: alpha * C.E = {ce} (expected {target})");
            assert_eq!(ce, target);
        }
        assert_eq!(
            found.profiles(),
            brute_force_profiles(curve, &t, None).as_slice()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
