//! Spectra in D = 3, 4, 5 under a combination scheme, the inter-dimensional
//! identity E(n_r, ell, D) = E(n_r, ell+1, D-2), and a state that stops
//! being bound as the dimension grows.
//!
//! ```bash
//! cargo run --release --example dimensional_spectra
//! ```

use eckart::centrifugal::{default_r0, make_f5};
use eckart::{spectrum, EckartModel, QuantumNumbers};

fn main() {
    let a = 1.0 / 0.025;
    let model = EckartModel::new(1.0 / a, 0.0001, a).expect("valid parameters");
    let r0 = default_r0(&model).expect("alpha > beta");
    let scheme = make_f5([0.1, 0.0, 0.0, 0.9], 1.1, 0.98, &model, r0).expect("weights");

    println!("-E(n_r, ell) under the (0.1, 0, 0, 0.9) combination scheme");
    println!("{:>4} {:>4} {:>12} {:>12} {:>12}", "n_r", "ell", "D=3", "D=4", "D=5");
    for n_r in 0..3 {
        for ell in 1..=4 {
            print!("{n_r:>4} {ell:>4}");
            for d in [3, 4, 5] {
                let q = QuantumNumbers::new(n_r, ell, d).expect("D >= 3");
                match spectrum::energy(&model, &scheme, &q) {
                    Ok(state) => print!(" {:>12.7}", -state.energy),
                    Err(_) => print!(" {:>12}", "…"),
                }
            }
            println!();
        }
    }

    println!("\nThe spectrum depends on (ell, D) only through L = ell + (D-3)/2:");
    let q5 = QuantumNumbers::new(0, 2, 5).expect("valid");
    let q3 = QuantumNumbers::new(0, 3, 3).expect("valid");
    let e5 = spectrum::energy(&model, &scheme, &q5).expect("bound").energy;
    let e3 = spectrum::energy(&model, &scheme, &q3).expect("bound").energy;
    println!("  E{q5} = {e5:.15}");
    println!("  E{q3} = {e3:.15}");

    let missing = QuantumNumbers::new(2, 4, 5).expect("valid");
    println!("\nHighest states are squeezed out with growing D:");
    println!("  n_max(ell=4, D=5) = {}", spectrum::n_max(&model, &scheme, 4, 5).expect("valid"));
    println!("  exists{missing} = {}", spectrum::exists(&model, &scheme, &missing).expect("valid"));
}
