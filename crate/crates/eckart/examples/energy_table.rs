//! Closed-form bound-state energies under all five approximation schemes,
//! printed as a grid over (n_r, ell) for two well depths.
//!
//! ```bash
//! cargo run --release --example energy_table
//! ```

use eckart::centrifugal::{default_r0, make_f1, make_f2, make_f3, make_f4, make_f5};
use eckart::{spectrum, EckartModel, QuantumNumbers};

fn main() {
    for beta in [0.0001, 0.0005] {
        let a = 1.0 / 0.025;
        let model = EckartModel::new(1.0 / a, beta, a).expect("valid parameters");
        let r0 = default_r0(&model).expect("alpha > beta");
        let schemes = [
            ("f1", make_f1()),
            ("f2", make_f2(1.1, 0.98)),
            ("f3", make_f3()),
            ("f4", make_f4(&model, r0).expect("r0 > 0")),
            ("f5c", make_f5([0.5, 0.2, 0.2, 0.1], 1.1, 0.98, &model, r0).expect("weights")),
            ("f5d", make_f5([0.1, 0.0, 0.0, 0.9], 1.1, 0.98, &model, r0).expect("weights")),
        ];

        println!("-E(n_r, ell) for beta = {beta}, a = {a}, alpha = 1/a, D = 3");
        print!("{:>4} {:>4}", "n_r", "ell");
        for (name, _) in &schemes {
            print!(" {name:>10}");
        }
        println!();
        for n_r in 0..3 {
            for ell in 1..=3 {
                let q = QuantumNumbers::new(n_r, ell, 3).expect("D >= 3");
                print!("{:>4} {:>4}", n_r, ell);
                for (_, scheme) in &schemes {
                    match spectrum::energy(&model, scheme, &q) {
                        Ok(state) => print!(" {:>10.7}", -state.energy),
                        Err(_) => print!(" {:>10}", "…"),
                    }
                }
                println!();
            }
        }
        println!();
    }
}
