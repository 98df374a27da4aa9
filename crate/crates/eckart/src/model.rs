//! Physical model: the Eckart potential, its parameters, and quantum numbers.
//!
//! The potential is
//!
//! ```text
//! V(r) = -alpha s/(1-s) + beta s/(1-s)^2,   s = e^{-r/a},   alpha, beta, a > 0.
//! ```
//!
//! For `alpha > beta` it has a single minimum `-(alpha-beta)^2/(4 beta)` at
//! `r0 = a ln((alpha+beta)/(alpha-beta))`. All energies are expressed in the
//! natural units fixed by `PhysicalConstants` (`hbar = mu = 1` by default).

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ModelError {
    #[error("{0} must be strictly positive")]
    NonPositiveParameter(&'static str),
    #[error("radius must be strictly positive, got {0}")]
    NonPositiveRadius(f64),
    #[error("potential has no minimum unless alpha > beta (alpha = {alpha}, beta = {beta})")]
    NoMinimum { alpha: f64, beta: f64 },
    #[error("dimension must be an integer >= 3, got {0}")]
    DimensionTooLow(u32),
}

/// Fundamental constants of the radial problem. Natural units `hbar = mu = 1`
/// are the defaults used throughout the reference tables.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    pub hbar: f64,
    /// Reduced mass of the diatomic molecule.
    pub mu: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self { hbar: 1.0, mu: 1.0 }
    }
}

impl PhysicalConstants {
    pub fn new(hbar: f64, mu: f64) -> Result<Self, ModelError> {
        if !(hbar > 0.0) {
            return Err(ModelError::NonPositiveParameter("hbar"));
        }
        if !(mu > 0.0) {
            return Err(ModelError::NonPositiveParameter("mu"));
        }
        Ok(Self { hbar, mu })
    }

    /// `2 mu a^2 / hbar^2`, the factor converting an energy into the
    /// dimensionless form used by the closed-form spectrum.
    pub fn energy_scale(&self, a: f64) -> f64 {
        2.0 * self.mu * a * a / (self.hbar * self.hbar)
    }
}

/// Eckart potential parameters together with the physical constants.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EckartModel {
    /// Depth parameter of the attractive term (an energy in natural units).
    pub alpha: f64,
    /// Depth parameter of the repulsive core term (an energy).
    pub beta: f64,
    /// Range parameter (a length).
    pub a: f64,
    pub constants: PhysicalConstants,
}

impl EckartModel {
    pub fn new(alpha: f64, beta: f64, a: f64) -> Result<Self, ModelError> {
        Self::with_constants(alpha, beta, a, PhysicalConstants::default())
    }

    pub fn with_constants(
        alpha: f64,
        beta: f64,
        a: f64,
        constants: PhysicalConstants,
    ) -> Result<Self, ModelError> {
        if !(alpha > 0.0) {
            return Err(ModelError::NonPositiveParameter("alpha"));
        }
        if !(beta > 0.0) {
            return Err(ModelError::NonPositiveParameter("beta"));
        }
        if !(a > 0.0) {
            return Err(ModelError::NonPositiveParameter("a"));
        }
        Ok(Self { alpha, beta, a, constants })
    }

    /// Potential value at radius `r > 0`.
    ///
    /// `1 - e^{-r/a}` is evaluated with `expm1` so the value stays accurate
    /// for `r/a` far below machine precision thresholds; the reference
    /// parameter sets use `a = 40`, which makes `r/a` small over the whole
    /// physically interesting region.
    pub fn eval_potential(&self, r: f64) -> Result<f64, ModelError> {
        if !(r > 0.0) {
            return Err(ModelError::NonPositiveRadius(r));
        }
        let s = (-r / self.a).exp();
        let one_minus_s = -(-r / self.a).exp_m1();
        Ok(-self.alpha * s / one_minus_s + self.beta * s / (one_minus_s * one_minus_s))
    }

    /// Location and value of the potential minimum, defined for `alpha > beta`.
    pub fn potential_minimum(&self) -> Result<(f64, f64), ModelError> {
        if !(self.alpha > self.beta) {
            return Err(ModelError::NoMinimum { alpha: self.alpha, beta: self.beta });
        }
        let r0 = self.a * ((self.alpha + self.beta) / (self.alpha - self.beta)).ln();
        let v_min = -(self.alpha - self.beta).powi(2) / (4.0 * self.beta);
        Ok((r0, v_min))
    }
}

/// Quantum numbers of a radial state in `D >= 3` dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuantumNumbers {
    /// Radial quantum number (number of radial nodes).
    pub n_r: u32,
    /// Orbital quantum number.
    pub ell: u32,
    /// Spatial dimension, `D = 3, 4, 5, ...`.
    pub d: u32,
}

impl QuantumNumbers {
    pub fn new(n_r: u32, ell: u32, d: u32) -> Result<Self, ModelError> {
        if d < 3 {
            return Err(ModelError::DimensionTooLow(d));
        }
        Ok(Self { n_r, ell, d })
    }

    /// Effective angular momentum `L = ell + (D-3)/2`. The spectrum depends
    /// on `(ell, D)` only through this combination.
    pub fn effective_l(&self) -> f64 {
        self.ell as f64 + (self.d as f64 - 3.0) / 2.0
    }

    /// `L (L + 1)` for the effective angular momentum.
    pub fn l_term(&self) -> f64 {
        let l = self.effective_l();
        l * (l + 1.0)
    }
}

impl std::fmt::Display for QuantumNumbers {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(n_r={}, ell={}, D={})", self.n_r, self.ell, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn table_model() -> EckartModel {
        EckartModel::new(0.025, 0.0001, 40.0).unwrap()
    }

    #[test]
    fn minimum_matches_closed_form() {
        let m = table_model();
        let (r0, v_min) = m.potential_minimum().unwrap();
        // the log of a near-1 ratio amplifies argument rounding by ~1/ln
        assert_relative_eq!(r0, 40.0 * (0.0251f64 / 0.0249).ln(), max_relative = 1e-12);
        assert_relative_eq!(v_min, -1.5500250, max_relative = 1e-7);
        // the potential evaluated at r0 reproduces the minimum value
        assert_relative_eq!(m.eval_potential(r0).unwrap(), v_min, max_relative = 1e-12);
        // and it is a true minimum
        for h in [0.1 * m.a, 0.5 * m.a] {
            assert!(m.eval_potential(r0 + h).unwrap() > v_min);
            assert!(m.eval_potential(r0 - h).unwrap_or(f64::INFINITY) > v_min);
        }
    }

    #[test]
    fn minimum_special_cases() {
        // alpha = 2 beta: r0 = a ln 3, V_min = -beta/4
        let m = EckartModel::new(0.2, 0.1, 5.0).unwrap();
        let (r0, v_min) = m.potential_minimum().unwrap();
        assert_relative_eq!(r0, 5.0 * 3.0f64.ln(), max_relative = 1e-15);
        assert_relative_eq!(v_min, -0.1 / 4.0, max_relative = 1e-15);
        // alpha -> beta+: the minimum runs away to infinity
        let mut last = 0.0;
        for eps in [1e-2, 1e-4, 1e-6] {
            let m = EckartModel::new(0.1 + eps, 0.1, 1.0).unwrap();
            let (r0, _) = m.potential_minimum().unwrap();
            assert!(r0 > last);
            last = r0;
        }
    }

    #[test]
    fn no_minimum_for_alpha_not_above_beta() {
        let m = EckartModel::new(0.1, 0.1, 1.0).unwrap();
        assert_eq!(
            m.potential_minimum(),
            Err(ModelError::NoMinimum { alpha: 0.1, beta: 0.1 })
        );
    }

    #[test]
    fn tail_and_core_behavior() {
        let m = table_model();
        let (r0, v_min) = m.potential_minimum().unwrap();
        // exponential decay: negligible at 100 a
        let far = m.eval_potential(100.0 * m.a).unwrap();
        assert!(far < 0.0);
        assert!(far.abs() < 1e-3 * v_min.abs());
        // repulsive core ~ beta a^2 / r^2 as r -> 0; checked where the
        // 1/r correction is small relative to the leading term
        let m2 = EckartModel::new(0.5, 0.2, 2.0).unwrap();
        let r = 1e-3 * m2.a;
        let lead = m2.a * m2.a * m2.beta;
        assert!((r * r * m2.eval_potential(r).unwrap() - lead).abs() / lead < 0.05);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(EckartModel::new(0.0, 0.1, 1.0).is_err());
        assert!(EckartModel::new(0.1, -0.1, 1.0).is_err());
        assert!(EckartModel::new(0.1, 0.1, 0.0).is_err());
        assert!(PhysicalConstants::new(0.0, 1.0).is_err());
        let m = table_model();
        assert_eq!(m.eval_potential(0.0), Err(ModelError::NonPositiveRadius(0.0)));
        assert!(m.eval_potential(-1.0).is_err());
        assert_eq!(QuantumNumbers::new(0, 0, 2), Err(ModelError::DimensionTooLow(2)));
    }

    #[test]
    fn effective_l_values() {
        assert_eq!(QuantumNumbers::new(0, 2, 3).unwrap().effective_l(), 2.0);
        assert_eq!(QuantumNumbers::new(0, 1, 5).unwrap().effective_l(), 2.0);
        assert_eq!(QuantumNumbers::new(0, 1, 4).unwrap().effective_l(), 1.5);
    }

    #[test]
    fn effective_l_interdimensional_identity() {
        for ell in 0..6u32 {
            for d in [5u32, 6, 7, 9] {
                let a = QuantumNumbers::new(0, ell + 1, d - 2).unwrap();
                let b = QuantumNumbers::new(0, ell, d).unwrap();
                // identity reads L(ell+1, D-2) = L(ell, D); swap to match
                assert_eq!(a.effective_l(), b.effective_l());
            }
        }
    }
}
