// Differential check of the pruned enumeration against a naive triple
// loop over (a, b, l) in a fixed box.
//
// cargo run -p stci --example oracle_differential

use stci::enumerate::l_max_bound;
use stci::oracle::brute_force_candidates;
use stci::selftest::{enumeration_in_box, oracle_l_min, ORACLE_A_MAX, ORACLE_B_MAX, ORACLE_CURVES};
use stci::CurveClass;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (d, g) in ORACLE_CURVES {
        let curve = CurveClass::new(d, g)?;
        let fast = enumeration_in_box(curve, ORACLE_A_MAX, ORACLE_B_MAX);
        let slow = brute_force_candidates(
            curve,
            ORACLE_A_MAX,
            ORACLE_B_MAX,
            oracle_l_min(curve),
            l_max_bound(curve),
        );
        println!("{curve}: {} candidates, oracle {}", fast.len(), slow.len());
        if fast != slow {
            return Err(format!("mismatch for {curve}").into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
