//! Quadrature check of the closed-form normalization constants: the
//! integral of R^2 over (0, 60 a) must come back as 1, and the radial
//! function must oscillate exactly n_r times.
//!
//! ```bash
//! cargo run --release --example normalization_check
//! ```

use eckart::centrifugal::{default_r0, make_f1, make_f5};
use eckart::wavefunction::RadialWavefunction;
use eckart::{EckartModel, QuantumNumbers};

fn main() {
    let a = 1.0 / 0.025;
    let model = EckartModel::new(1.0 / a, 0.0001, a).expect("valid parameters");
    let r0 = default_r0(&model).expect("alpha > beta");
    let schemes = [
        ("f1", make_f1()),
        ("f5d", make_f5([0.1, 0.0, 0.0, 0.9], 1.1, 0.98, &model, r0).expect("weights")),
    ];

    println!(
        "{:>5} {:>4} {:>4} {:>12} {:>22} {:>6}",
        "", "n_r", "ell", "norm N", "integral of R^2", "nodes"
    );
    for (name, scheme) in &schemes {
        for n_r in 0..3 {
            for ell in 1..=3 {
                let q = QuantumNumbers::new(n_r, ell, 3).expect("D >= 3");
                let w = RadialWavefunction::new(&model, scheme, &q).expect("bound state");
                let integral = w.norm_integral(&model, 60.0 * a, 1e-10);
                let nodes = w.node_count(&model, 60.0 * a, 10_000);
                println!(
                    "{name:>5} {n_r:>4} {ell:>4} {:>12.4} {integral:>22.15} {nodes:>6}",
                    w.norm
                );
            }
        }
    }
}
