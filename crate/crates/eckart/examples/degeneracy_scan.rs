//! Zero-energy and degeneracy points in the range parameter with the depth
//! coupled as alpha = 1/a, certified by back-substitution into the
//! closed-form spectrum.
//!
//! ```bash
//! cargo run --release --example degeneracy_scan
//! ```

use eckart::centrifugal::make_f1;
use eckart::degeneracy::{
    scan_degeneracies, zero_energy_a, zero_energy_residual, AlphaLaw, PairDegeneracy,
};
use eckart::model::PhysicalConstants;
use eckart::{spectrum, EckartModel, QuantumNumbers};

fn main() {
    let beta = 0.0001;
    let law = AlphaLaw::InverseA;
    let constants = PhysicalConstants::default();
    let f1 = make_f1();

    println!("zero-energy points a0 (state reaches E = 0):");
    for (n_r, ell) in [(0u32, 1u32), (1, 1), (0, 2)] {
        let a0 = zero_energy_a(n_r, ell, 3, &law, beta, &constants, (1.0, 100.0)).expect("root");
        let residual = zero_energy_residual(n_r, ell, 3, &law, beta, &constants, a0);
        let model = EckartModel::new(1.0 / a0, beta, a0).expect("valid");
        let q = QuantumNumbers::new(n_r, ell, 3).expect("valid");
        let e = spectrum::energy_formal(&model, &f1, &q).expect("valid");
        println!("  (n_r={n_r}, ell={ell}): a0 = {a0:.12}   residual = {residual:.2e}   E(a0) = {e:.2e}");
    }

    println!("\ndegeneracy points a12 (two states share one energy):");
    let pairs = [
        (QuantumNumbers::new(0, 2, 3).unwrap(), QuantumNumbers::new(1, 1, 3).unwrap()),
        (QuantumNumbers::new(0, 3, 3).unwrap(), QuantumNumbers::new(1, 2, 3).unwrap()),
        (QuantumNumbers::new(0, 2, 3).unwrap(), QuantumNumbers::new(0, 1, 5).unwrap()),
    ];
    let entries =
        scan_degeneracies(&pairs, &law, beta, &constants, (1.0, 100.0), 400).expect("scan");
    for entry in &entries {
        let (s1, s2) = entry.pair;
        match entry.result {
            PairDegeneracy::Root(a12) => {
                let model = EckartModel::new(1.0 / a12, beta, a12).expect("valid");
                let e1 = spectrum::energy_formal(&model, &f1, &s1).expect("valid");
                let e2 = spectrum::energy_formal(&model, &f1, &s2).expect("valid");
                println!("  {s1} ~ {s2}: a12 = {a12:.12}   |E1-E2| = {:.2e}", (e1 - e2).abs());
            }
            PairDegeneracy::AlwaysDegenerate => {
                println!("  {s1} ~ {s2}: equal effective L, degenerate for every a");
            }
        }
    }
}
