//! Closed-form bound-state spectrum of the Eckart potential under a
//! centrifugal-term approximation.
//!
//! With `L = ell + (D-3)/2` and a scheme `(y1, y2, y3)`, the dimensionless
//! decay exponent of a state is
//!
//! ```text
//! Q = [mu a^2 alpha / hbar^2 - L(L+1)(y2 - y3)/2] / (n_r + L1) - (n_r + L1)/2,
//! L1 = 1/2 + sqrt(1/4 + 2 mu a^2 beta / hbar^2 + L(L+1) y3),
//! ```
//!
//! and the energy is
//!
//! ```text
//! E = hbar^2 L(L+1) y1 / (2 mu a^2) - hbar^2 Q^2 / (2 mu a^2).
//! ```
//!
//! A state is a genuine bound state when the radial function is
//! normalizable (`Q > 0`) and the energy lies below the potential's own
//! asymptote (`E < 0`). The second condition matters for schemes with
//! `y1 > 0`, whose effective potential tends to a positive constant at
//! infinity: near that threshold the closed form produces normalizable
//! solutions with `E > 0` that do not correspond to bound states of the
//! original problem.

use crate::centrifugal::ApproximationScheme;
use crate::model::{EckartModel, QuantumNumbers};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SpectrumError {
    #[error("scheme invalid for {q}: discriminant 1/4 + 2 mu a^2 beta/hbar^2 + L(L+1) y3 = {disc} < 0")]
    SchemeInvalid { q: QuantumNumbers, disc: f64 },
    #[error("state {0} does not exist (not a bound state)")]
    StateDoesNotExist(QuantumNumbers),
}

/// The constants of the hypergeometric-type reduction, mostly useful for
/// inspection and cross-checks: `sigma~(s) = -(quadratic) s^2 + (linear) s -
/// (constant)` with `constant = eps0_sq + L(L+1) y1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NuConstants {
    pub quadratic: f64,
    pub linear: f64,
    pub constant: f64,
    /// `-2 mu a^2 E / hbar^2`.
    pub eps0_sq: f64,
    pub l1: f64,
}

/// A bound state: quantum numbers, energy, and the decay exponent
/// `sqrt(C) = Q` needed by the radial wavefunction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundState {
    pub q: QuantumNumbers,
    pub energy: f64,
    pub sqrt_c: f64,
    pub scheme: ApproximationScheme,
}

/// Exponent `L1 = 1/2 + sqrt(1/4 + 2 mu a^2 beta / hbar^2 + L(L+1) y3)`.
pub fn l1(
    model: &EckartModel,
    scheme: &ApproximationScheme,
    q: &QuantumNumbers,
) -> Result<f64, SpectrumError> {
    let disc = 0.25 + model.constants.energy_scale(model.a) * model.beta + q.l_term() * scheme.y3;
    if disc < 0.0 {
        return Err(SpectrumError::SchemeInvalid { q: *q, disc });
    }
    Ok(0.5 + disc.sqrt())
}

/// Decay exponent `Q` of the closed form; positive for normalizable states.
pub fn sqrt_c(
    model: &EckartModel,
    scheme: &ApproximationScheme,
    q: &QuantumNumbers,
) -> Result<f64, SpectrumError> {
    let c = model.constants;
    let t = q.n_r as f64 + l1(model, scheme, q)?;
    let g = c.mu * model.a * model.a * model.alpha / (c.hbar * c.hbar);
    Ok((g - q.l_term() * (scheme.y2 - scheme.y3) / 2.0) / t - t / 2.0)
}

/// Closed-form energy evaluated without the existence check. Used by the
/// degeneracy analysis, whose conditions are statements about this formula
/// even at parameter points where one of the states is at or beyond its
/// binding threshold.
pub fn energy_formal(
    model: &EckartModel,
    scheme: &ApproximationScheme,
    q: &QuantumNumbers,
) -> Result<f64, SpectrumError> {
    let big_q = sqrt_c(model, scheme, q)?;
    let scale = model.constants.energy_scale(model.a);
    Ok((q.l_term() * scheme.y1 - big_q * big_q) / scale)
}

/// Whether `(n_r, ell, D)` is a bound state under the given scheme.
pub fn exists(
    model: &EckartModel,
    scheme: &ApproximationScheme,
    q: &QuantumNumbers,
) -> Result<bool, SpectrumError> {
    let big_q = sqrt_c(model, scheme, q)?;
    let e = (q.l_term() * scheme.y1 - big_q * big_q) / model.constants.energy_scale(model.a);
    Ok(big_q > 0.0 && e < 0.0)
}

/// Closed-form bound-state energy together with its decay exponent.
pub fn energy(
    model: &EckartModel,
    scheme: &ApproximationScheme,
    q: &QuantumNumbers,
) -> Result<BoundState, SpectrumError> {
    let big_q = sqrt_c(model, scheme, q)?;
    let e = (q.l_term() * scheme.y1 - big_q * big_q) / model.constants.energy_scale(model.a);
    if !(big_q > 0.0 && e < 0.0) {
        return Err(SpectrumError::StateDoesNotExist(*q));
    }
    Ok(BoundState { q: *q, energy: e, sqrt_c: big_q, scheme: *scheme })
}

/// The reduction constants for an existing state.
pub fn nu_constants(
    model: &EckartModel,
    scheme: &ApproximationScheme,
    q: &QuantumNumbers,
) -> Result<NuConstants, SpectrumError> {
    let state = energy(model, scheme, q)?;
    let scale = model.constants.energy_scale(model.a);
    let eps0_sq = -scale * state.energy;
    let constant = eps0_sq + q.l_term() * scheme.y1;
    Ok(NuConstants {
        quadratic: scale * model.alpha - q.l_term() * (scheme.y2 - scheme.y3) + constant,
        linear: scale * (model.alpha - model.beta) - q.l_term() * scheme.y2 + 2.0 * constant,
        constant,
        eps0_sq,
        l1: l1(model, scheme, q)?,
    })
}

/// Largest `n_r` with a bound state at fixed `(ell, D)`, or -1 if none.
pub fn n_max(
    model: &EckartModel,
    scheme: &ApproximationScheme,
    ell: u32,
    d: u32,
) -> Result<i64, SpectrumError> {
    let mut last = -1i64;
    for n in 0..u32::MAX {
        let q = QuantumNumbers { n_r: n, ell, d };
        if !exists(model, scheme, &q)? {
            break;
        }
        last = n as i64;
    }
    Ok(last)
}

/// All bound states with `ell <= ell_max` at dimension `d`, sorted by
/// energy ascending.
pub fn enumerate_bound_states(
    model: &EckartModel,
    scheme: &ApproximationScheme,
    ell_max: u32,
    d: u32,
) -> Result<Vec<BoundState>, SpectrumError> {
    let mut states = Vec::new();
    for ell in 0..=ell_max {
        for n in 0..=n_max(model, scheme, ell, d)? {
            let q = QuantumNumbers { n_r: n as u32, ell, d };
            states.push(energy(model, scheme, &q)?);
        }
    }
    states.sort_by(|a, b| a.energy.partial_cmp(&b.energy).expect("finite energies"));
    Ok(states)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centrifugal::{default_r0, make_f1, make_f2, make_f3, make_f4, make_f5};
    use approx::assert_relative_eq;

    fn table_model(beta: f64) -> EckartModel {
        EckartModel::new(0.025, beta, 40.0).unwrap()
    }

    fn f5d(model: &EckartModel) -> ApproximationScheme {
        make_f5([0.1, 0.0, 0.0, 0.9], 1.1, 0.98, model, default_r0(model).unwrap()).unwrap()
    }

    #[test]
    fn l1_special_values() {
        let m = table_model(0.0001);
        // ell = 0: L1 is scheme independent
        let q0 = QuantumNumbers::new(0, 0, 3).unwrap();
        let expect = 0.5 + (0.25 + 2.0 * 1600.0 * 0.0001f64).sqrt();
        for s in [make_f1(), make_f2(1.1, 0.98), make_f3()] {
            assert_relative_eq!(l1(&m, &s, &q0).unwrap(), expect, max_relative = 1e-15);
        }
        // beta -> 0, y3 = 1, L = 2 gives a perfect square: L1 = 3
        let tiny_beta = EckartModel::new(0.025, 1e-300, 40.0).unwrap();
        let q2 = QuantumNumbers::new(0, 2, 3).unwrap();
        assert_relative_eq!(l1(&tiny_beta, &make_f1(), &q2).unwrap(), 3.0, max_relative = 1e-12);
        // frozen from a 40-digit evaluation: 1/2 + sqrt(2.57)
        let q1 = QuantumNumbers::new(0, 1, 3).unwrap();
        assert_relative_eq!(
            l1(&m, &make_f1(), &q1).unwrap(),
            2.103121954188139917,
            max_relative = 1e-15
        );
    }

    #[test]
    fn scheme_invalid_discriminant() {
        let m = table_model(0.0001);
        let q = QuantumNumbers::new(0, 3, 3).unwrap();
        let bad = make_f2(1.0, -1.0); // y3 < 0 drives the discriminant negative
        assert!(matches!(
            l1(&m, &bad, &q),
            Err(SpectrumError::SchemeInvalid { .. })
        ));
        assert!(exists(&m, &bad, &q).is_err());
    }

    // a sample of reference -E values (7 printed decimals)
    #[test]
    fn spot_check_reference_energies() {
        let m1 = table_model(0.0001);
        let m5 = table_model(0.0005);
        let cases: [(&EckartModel, ApproximationScheme, (u32, u32), f64); 4] = [
            (&m1, make_f1(), (0, 1), 0.1008879),
            (&m1, f5d(&m1), (0, 1), 0.1008410),
            (&m1, make_f3(), (0, 1), 0.1008358),
            (&m5, make_f2(1.1, 0.98), (2, 3), 0.0033048),
        ];
        for (m, s, (n, ell), expect) in cases {
            let q = QuantumNumbers::new(n, ell, 3).unwrap();
            let st = energy(m, &s, &q).unwrap();
            assert!((-st.energy - expect).abs() < 5e-8, "{q}: {} vs {expect}", -st.energy);
        }
    }

    #[test]
    fn s_wave_is_scheme_independent() {
        let m = table_model(0.0001);
        let q = QuantumNumbers::new(1, 0, 3).unwrap();
        let r0 = default_r0(&m).unwrap();
        let schemes = [
            make_f1(),
            make_f2(1.1, 0.98),
            make_f3(),
            make_f4(&m, r0).unwrap(),
            f5d(&m),
        ];
        let energies: Vec<f64> =
            schemes.iter().map(|s| energy(&m, s, &q).unwrap().energy).collect();
        let spread = energies.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b))
            - energies.iter().fold(f64::INFINITY, |a, &b| a.min(b));
        assert!(spread.abs() <= 1e-15 * energies[0].abs());
        // f2 with zero coefficients reproduces the same s-wave form for all ell
        let q1 = QuantumNumbers::new(1, 3, 3).unwrap();
        let zero = make_f2(0.0, 0.0);
        assert_relative_eq!(
            energy(&m, &zero, &q1).unwrap().energy,
            energies[0],
            max_relative = 1e-15
        );
    }

    #[test]
    fn interdimensional_degeneracy_is_exact() {
        let m = table_model(0.0001);
        let s = f5d(&m);
        for ell in 0..4u32 {
            for d in [5u32, 7] {
                for n in 0..3u32 {
                    let qa = QuantumNumbers::new(n, ell, d).unwrap();
                    let qb = QuantumNumbers::new(n, ell + 1, d - 2).unwrap();
                    let ea = energy_formal(&m, &s, &qa).unwrap();
                    let eb = energy_formal(&m, &s, &qb).unwrap();
                    assert_eq!(ea, eb);
                }
            }
        }
    }

    #[test]
    fn state_2_4_does_not_exist_in_d5() {
        let m = table_model(0.0001);
        let s = f5d(&m);
        let q = QuantumNumbers::new(2, 4, 5).unwrap();
        assert!(!exists(&m, &s, &q).unwrap());
        assert_eq!(energy(&m, &s, &q), Err(SpectrumError::StateDoesNotExist(q)));
        // its neighbor (1, 4) does exist
        assert!(exists(&m, &s, &QuantumNumbers::new(1, 4, 5).unwrap()).unwrap());
        assert_eq!(n_max(&m, &s, 4, 5).unwrap(), 1);
    }

    #[test]
    fn n_max_decreases_with_ell_and_handles_empty() {
        let m = table_model(0.0001);
        let s = make_f1();
        let mut last = i64::MAX;
        for ell in 0..=10u32 {
            let n = n_max(&m, &s, ell, 3).unwrap();
            assert!(n <= last);
            last = n;
        }
        // a small enough range parameter binds nothing at high ell
        let tiny = EckartModel::new(0.025, 0.0001, 0.05).unwrap();
        assert_eq!(n_max(&tiny, &s, 5, 3).unwrap(), -1);
    }

    #[test]
    fn existence_fails_for_large_n() {
        let m = table_model(0.0001);
        let s = make_f1();
        let mut seen_false = false;
        for n in 0..200u32 {
            if !exists(&m, &s, &QuantumNumbers::new(n, 1, 3).unwrap()).unwrap() {
                seen_false = true;
                break;
            }
        }
        assert!(seen_false);
    }

    #[test]
    fn enumerate_is_sorted_and_contains_reference_grid() {
        let m = table_model(0.0001);
        let s = make_f1();
        let states = enumerate_bound_states(&m, &s, 3, 3).unwrap();
        assert!(states.windows(2).all(|w| w[0].energy <= w[1].energy));
        for n in 0..3u32 {
            for ell in 1..=3u32 {
                assert!(states.iter().any(|st| st.q.n_r == n && st.q.ell == ell));
            }
        }
        // every enumerated state is consistent: sqrt_c equals the direct formula
        for st in &states {
            let direct = sqrt_c(&m, &s, &st.q).unwrap();
            assert_relative_eq!(st.sqrt_c, direct, max_relative = 1e-15);
        }
        // no bound state at all when the well is too shallow to hold one
        let mut a = 2.0;
        loop {
            let m = EckartModel::new(0.025, 0.0001, a).unwrap();
            let states = enumerate_bound_states(&m, &s, 3, 3).unwrap();
            if states.is_empty() {
                break;
            }
            a *= 0.5;
            assert!(a > 1e-4, "expected an empty spectrum for small a");
        }
    }

    #[test]
    fn energy_monotone_in_n_and_ell_over_reference_range() {
        for beta in [0.0001, 0.0005] {
            let m = table_model(beta);
            for s in [make_f1(), make_f3(), f5d(&m)] {
                for ell in 1..=3u32 {
                    for n in 0..2u32 {
                        let e0 = energy(&m, &s, &QuantumNumbers::new(n, ell, 3).unwrap())
                            .unwrap()
                            .energy;
                        let e1 = energy(&m, &s, &QuantumNumbers::new(n + 1, ell, 3).unwrap())
                            .unwrap()
                            .energy;
                        assert!(e1 > e0);
                    }
                }
                for ell in 1..3u32 {
                    let e0 = energy(&m, &s, &QuantumNumbers::new(0, ell, 3).unwrap())
                        .unwrap()
                        .energy;
                    let e1 = energy(&m, &s, &QuantumNumbers::new(0, ell + 1, 3).unwrap())
                        .unwrap()
                        .energy;
                    assert!(e1 > e0);
                }
            }
        }
    }

    #[test]
    fn sqrt_c_consistency_with_energy() {
        let m = table_model(0.0001);
        let s = f5d(&m);
        for ell in 1..=3u32 {
            for n in 0..3u32 {
                let q = QuantumNumbers::new(n, ell, 3).unwrap();
                let st = energy(&m, &s, &q).unwrap();
                let c = -m.constants.energy_scale(m.a) * st.energy + q.l_term() * s.y1;
                assert_relative_eq!(st.sqrt_c, c.sqrt(), max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn nu_constants_satisfy_definitions() {
        let m = table_model(0.0001);
        let s = make_f1();
        let q = QuantumNumbers::new(0, 1, 3).unwrap();
        let nu = nu_constants(&m, &s, &q).unwrap();
        let st = energy(&m, &s, &q).unwrap();
        assert_relative_eq!(nu.constant, nu.eps0_sq + q.l_term() * s.y1, max_relative = 1e-14);
        assert_relative_eq!(nu.constant.sqrt(), st.sqrt_c, max_relative = 1e-12);
        assert!(nu.l1 >= 0.5);
        let scale = m.constants.energy_scale(m.a);
        assert_relative_eq!(
            nu.quadratic,
            scale * m.alpha - q.l_term() * (s.y2 - s.y3) + nu.constant,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            nu.linear,
            scale * (m.alpha - m.beta) - q.l_term() * s.y2 + 2.0 * nu.constant,
            max_relative = 1e-14
        );
    }
}
