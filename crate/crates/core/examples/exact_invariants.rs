// Tour of the exact invariants: arithmetic genera, C.E, Chern numbers and
// the Miyaoka budget, all as exact integers or rationals.
//
// cargo run -p stci --example exact_invariants

use stci::invariants::{
    capital_a, cbar_dot_e, chern_c1_sq, chern_c2, euler_nu, miyaoka_budget, pa_ci, pa_primitive,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // the (4, 7) quartic candidate: m = 7, l = 5
    println!("p_a primitive (g=0, l=5, m=7) = {}", pa_primitive(0, 5, 7));
    println!("p_a complete intersection (4, 7) = {}", pa_ci(4, 7));
    println!("A(d=4, g=0, b=7) = {}", capital_a(4, 0, 7));
    println!("C.E(d=4, g=0, b=7) = {}", cbar_dot_e(4, 0, 7));
    for b in [4, 7, 18, 220] {
        println!(
            "b={b}: c1^2 = {}, c2 = {}, budget = {}",
            chern_c1_sq(b),
            chern_c2(b),
            miyaoka_budget(b)
        );
    }
    println!("nu(A_6) = {}", euler_nu(6));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
