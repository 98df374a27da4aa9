//! Sampling the eigenfunctions: the radial profile R(r), a hyperspherical
//! harmonic on the 3-sphere, and the full eigenfunction
//! psi = r^{(1-D)/2} R(r) Y(angles) in D = 4.
//!
//! ```bash
//! cargo run --release --example wavefunction_sampling
//! ```

use eckart::centrifugal::make_f1;
use eckart::wavefunction::{full_eigenfunction, AngularState, RadialWavefunction};
use eckart::{EckartModel, QuantumNumbers};

fn main() {
    let a = 1.0 / 0.025;
    let model = EckartModel::new(1.0 / a, 0.0001, a).expect("valid parameters");
    let f1 = make_f1();

    // radial profile of the first excited ell = 1 state
    let q = QuantumNumbers::new(1, 1, 3).expect("D >= 3");
    let w = RadialWavefunction::new(&model, &f1, &q).expect("bound state");
    println!("R(r) for {q}, E = {:.8}:", w.state.energy);
    for r in [0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0] {
        println!("  R({r:>5}) = {:>13.6e}", w.value(&model, r).expect("r > 0"));
    }

    // a harmonic on the 3-sphere (D = 4): chain (ell, mu2, m) = (2, 1, 1)
    let ang = AngularState::new(4, vec![2, 1, 1]).expect("valid chain");
    println!("\nY on the 3-sphere for chain (2, 1, 1), N = {:.10}:", ang.norm_constant().unwrap());
    for (t1, t2, phi) in [(0.7, 1.1, 0.4), (1.2, 0.6, 2.0), (2.2, 2.8, 5.5)] {
        let y = ang.value(&[t1, t2, phi]).expect("angles in range");
        println!("  Y({t1}, {t2}, {phi}) = {:.6} + {:.6} i", y.re, y.im);
    }

    // full eigenfunction in D = 4
    let q4 = QuantumNumbers::new(0, 2, 4).expect("D >= 3");
    let w4 = RadialWavefunction::new(&model, &f1, &q4).expect("bound state");
    println!("\npsi = r^{{(1-D)/2}} R(r) Y for {q4}:");
    for r in [1.0, 5.0, 20.0] {
        let psi = full_eigenfunction(&w4, &ang, &model, r, &[0.7, 1.1, 0.4]).expect("valid");
        println!("  psi(r = {r:>4}) = {:.6e} + {:.6e} i", psi.re, psi.im);
    }
}
