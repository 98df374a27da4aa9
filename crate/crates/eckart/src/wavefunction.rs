//! Radial and angular eigenfunctions.
//!
//! The radial part of a bound state with decay exponent `q = sqrt(C)` and
//! exponent `L1` is
//!
//! ```text
//! R(r) = N s^q (1-s)^{L1} 2F1(-n_r, n_r + 2q + 2 L1; 2q + 1; s),  s = e^{-r/a},
//! ```
//!
//! normalized so that the integral of `R^2` over `(0, infinity)` is one:
//!
//! ```text
//! N^2 = 2 q (n_r + q + L1) Gamma(n_r + 2q + 1) Gamma(n_r + 2q + 2 L1)
//!     / [ a n_r! (n_r + L1) Gamma(n_r + 2 L1) Gamma(2q + 1)^2 ].
//! ```
//!
//! The angular part in `D` dimensions is the hyperspherical harmonic
//!
//! ```text
//! Y_{l,{mu}} = N_{l,{mu}} e^{i m theta_{D-1}}
//!              prod_j C^{alpha_j + mu_{j+1}}_{mu_j - mu_{j+1}}(cos theta_j)
//!              (sin theta_j)^{mu_{j+1}},    alpha_j = (D - j - 1)/2,
//! ```
//!
//! and the full eigenfunction is `psi = r^{(1-D)/2} R(r) Y(angles)`, which
//! makes the radial and angular normalizations multiply to the full one.

use crate::model::{EckartModel, QuantumNumbers};
use crate::quadrature;
use crate::special::{hyp2f1_terminating, log_gamma, SpecialError};
use crate::spectrum::{self, BoundState, SpectrumError};
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum WavefunctionError {
    #[error("radius must be strictly positive, got {0}")]
    NonPositiveRadius(f64),
    #[error("angular chain invalid: {0}")]
    InvalidChain(String),
    #[error("angle {index} = {value} outside its domain")]
    AngleOutOfRange { index: usize, value: f64 },
    #[error("angular state has D = {angular} but radial state has D = {radial}")]
    DimensionMismatch { angular: u32, radial: u32 },
    #[error("angular mu_1 = {mu1} does not match the radial ell = {ell}")]
    EllMismatch { mu1: i64, ell: u32 },
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Special(#[from] SpecialError),
}

/// A normalized radial eigenfunction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialWavefunction {
    pub state: BoundState,
    pub l1: f64,
    /// Normalization constant `N` of the closed form.
    pub norm: f64,
}

/// Normalization constant of the radial closed form, by log-gamma
/// differences (the gamma arguments reach ~75 at the reference tables'
/// parameters, far beyond what direct `Gamma` ratios survive).
pub fn radial_norm_constant(
    state: &BoundState,
    model: &EckartModel,
) -> Result<f64, WavefunctionError> {
    let q = state.sqrt_c;
    let l1 = spectrum::l1(model, &state.scheme, &state.q)?;
    let n = state.q.n_r as f64;
    let ln_n2 = (2.0 * q).ln() + (n + q + l1).ln()
        + log_gamma(n + 2.0 * q + 1.0)?
        + log_gamma(n + 2.0 * q + 2.0 * l1)?
        - model.a.ln()
        - log_gamma(n + 1.0)?
        - (n + l1).ln()
        - log_gamma(n + 2.0 * l1)?
        - 2.0 * log_gamma(2.0 * q + 1.0)?;
    Ok((0.5 * ln_n2).exp())
}

impl RadialWavefunction {
    /// Build the normalized radial function of a bound state.
    pub fn new(
        model: &EckartModel,
        scheme: &crate::centrifugal::ApproximationScheme,
        q: &QuantumNumbers,
    ) -> Result<Self, WavefunctionError> {
        let state = spectrum::energy(model, scheme, q)?;
        let l1 = spectrum::l1(model, scheme, q)?;
        let norm = radial_norm_constant(&state, model)?;
        Ok(Self { state, l1, norm })
    }

    /// `R(r)` for `r > 0`.
    pub fn value(&self, model: &EckartModel, r: f64) -> Result<f64, WavefunctionError> {
        if !(r > 0.0) {
            return Err(WavefunctionError::NonPositiveRadius(r));
        }
        let q = self.state.sqrt_c;
        let x = r / model.a;
        let s = (-x).exp();
        let one_minus_s = -(-x).exp_m1();
        let n = self.state.q.n_r;
        let f = hyp2f1_terminating(n, n as f64 + 2.0 * q + 2.0 * self.l1, 2.0 * q + 1.0, s)?;
        Ok(self.norm * (-q * x).exp() * (self.l1 * one_minus_s.ln()).exp() * f)
    }

    /// Quadrature of `R^2` from 0 to `r_max`; equals 1 for a correctly
    /// normalized state once `r_max` covers the decay.
    pub fn norm_integral(&self, model: &EckartModel, r_max: f64, abs_tol: f64) -> f64 {
        let floor = 1e-300_f64;
        quadrature::integrate(
            |r| {
                let v = self.value(model, r.max(floor)).unwrap_or(0.0);
                v * v
            },
            floor,
            r_max,
            abs_tol,
        )
    }

    /// Number of interior sign changes on a uniform grid over `(0, r_max)`.
    pub fn node_count(&self, model: &EckartModel, r_max: f64, n_grid: usize) -> usize {
        let h = r_max / n_grid as f64;
        let mut nodes = 0;
        let mut prev = 0.0f64;
        for i in 1..n_grid {
            let v = self.value(model, i as f64 * h).unwrap();
            if prev != 0.0 && v != 0.0 && prev.signum() != v.signum() {
                nodes += 1;
            }
            if v != 0.0 {
                prev = v;
            }
        }
        nodes
    }
}

/// Angular quantum numbers `(mu_1, mu_2, ..., mu_{D-1})` with
/// `ell = mu_1 >= mu_2 >= ... >= |mu_{D-1}| = |m|`. The last entry is the
/// azimuthal number `m` and may be negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AngularState {
    pub d: u32,
    pub mu_chain: Vec<i64>,
}

impl AngularState {
    pub fn new(d: u32, mu_chain: Vec<i64>) -> Result<Self, WavefunctionError> {
        if d < 3 {
            return Err(WavefunctionError::InvalidChain(format!("D = {d} < 3")));
        }
        if mu_chain.len() != (d - 1) as usize {
            return Err(WavefunctionError::InvalidChain(format!(
                "chain length {} != D - 1 = {}",
                mu_chain.len(),
                d - 1
            )));
        }
        for (i, &mu) in mu_chain.iter().enumerate() {
            let is_last = i + 1 == mu_chain.len();
            if !is_last && mu < 0 {
                return Err(WavefunctionError::InvalidChain(format!(
                    "mu_{} = {mu} must be non-negative",
                    i + 1
                )));
            }
            if i > 0 {
                let prev = mu_chain[i - 1];
                let cur = if is_last { mu.abs() } else { mu };
                if cur > prev {
                    return Err(WavefunctionError::InvalidChain(format!(
                        "ordering violated at mu_{}: {} > {}",
                        i + 1,
                        cur,
                        prev
                    )));
                }
            }
        }
        Ok(Self { d, mu_chain })
    }

    pub fn ell(&self) -> i64 {
        self.mu_chain[0]
    }

    pub fn m(&self) -> i64 {
        *self.mu_chain.last().unwrap()
    }

    /// The chain entry used inside factor `j` (1-based); the azimuthal
    /// number enters through its absolute value.
    fn mu_abs(&self, index_1based: usize) -> i64 {
        let v = self.mu_chain[index_1based - 1];
        if index_1based == self.mu_chain.len() {
            v.abs()
        } else {
            v
        }
    }

    /// Normalization constant making the harmonic orthonormal on the
    /// `(D-1)`-sphere, evaluated through log-gamma.
    pub fn norm_constant(&self) -> Result<f64, WavefunctionError> {
        let d = self.d as f64;
        let ln2 = std::f64::consts::LN_2;
        let ln_pi = std::f64::consts::PI.ln();
        let mut ln_n2 = -(2.0 * std::f64::consts::PI).ln();
        for j in 1..=(self.d - 2) as usize {
            let alpha_j = (d - j as f64 - 1.0) / 2.0;
            let mu_j = self.mu_abs(j) as f64;
            let mu_next = self.mu_abs(j + 1) as f64;
            ln_n2 += (alpha_j + mu_j).ln()
                + log_gamma(mu_j - mu_next + 1.0)?
                + 2.0 * log_gamma(alpha_j + mu_next)?
                - ln_pi
                - (1.0 - 2.0 * alpha_j - 2.0 * mu_next) * ln2
                - log_gamma(2.0 * alpha_j + mu_j + mu_next)?;
        }
        Ok((0.5 * ln_n2).exp())
    }

    /// `Y_{l,{mu}}(theta_1, ..., theta_{D-1})`.
    pub fn value(&self, angles: &[f64]) -> Result<Complex64, WavefunctionError> {
        if angles.len() != (self.d - 1) as usize {
            return Err(WavefunctionError::InvalidChain(format!(
                "expected {} angles, got {}",
                self.d - 1,
                angles.len()
            )));
        }
        for (i, &t) in angles.iter().enumerate() {
            let is_last = i + 1 == angles.len();
            let upper = if is_last { 2.0 * std::f64::consts::PI } else { std::f64::consts::PI };
            if !(0.0..upper).contains(&t) {
                return Err(WavefunctionError::AngleOutOfRange { index: i, value: t });
            }
        }
        let d = self.d as f64;
        let mut real = self.norm_constant()?;
        for j in 1..=(self.d - 2) as usize {
            let alpha_j = (d - j as f64 - 1.0) / 2.0;
            let mu_j = self.mu_abs(j);
            let mu_next = self.mu_abs(j + 1);
            let theta = angles[j - 1];
            let degree = (mu_j - mu_next) as u32;
            let param = alpha_j + mu_next as f64;
            real *= crate::special::gegenbauer_c(degree, param, theta.cos())?
                * theta.sin().powi(mu_next as i32);
        }
        let phase = self.m() as f64 * angles[(self.d - 2) as usize];
        Ok(Complex64::from_polar(1.0, phase) * real)
    }
}

/// Full eigenfunction `psi = r^{(1-D)/2} R(r) Y(angles)`.
pub fn full_eigenfunction(
    radial: &RadialWavefunction,
    angular: &AngularState,
    model: &EckartModel,
    r: f64,
    angles: &[f64],
) -> Result<Complex64, WavefunctionError> {
    if angular.d != radial.state.q.d {
        return Err(WavefunctionError::DimensionMismatch {
            angular: angular.d,
            radial: radial.state.q.d,
        });
    }
    if angular.ell() != radial.state.q.ell as i64 {
        return Err(WavefunctionError::EllMismatch {
            mu1: angular.ell(),
            ell: radial.state.q.ell,
        });
    }
    let radial_part = radial.value(model, r)?;
    let y = angular.value(angles)?;
    let power = (1.0 - radial.state.q.d as f64) / 2.0;
    Ok(y * radial_part * r.powf(power))
}
