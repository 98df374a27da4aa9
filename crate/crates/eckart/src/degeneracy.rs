//! Root-finding in the range parameter `a` for zero-energy and degeneracy
//! conditions of the closed-form spectrum under the Greene-Aldrich scheme,
//! with the depth parameter coupled to the range by a user-supplied law
//! `alpha(a)`.
//!
//! With `g(a) = mu a^2 alpha(a) / hbar^2`, `w(a) = 2 mu a^2 beta / hbar^2`
//! and `t_i(a) = n_i + 1/2 + sqrt((ell_i + (D_i-2)/2)^2 + w(a))`, the two
//! conditions are
//!
//! * zero energy: `(4(g - w/4 ...))` in squared form,
//!   `[8g - 4w - P^2 - Lam^2]^2 = (2P)^2 (Lam^2 + 4w)` with `P = 2 n_r + 1`
//!   and `Lam = 2 ell + D - 2` (equivalently `t^2 = 2g`), and
//! * degeneracy (positive branch): `2 g = t_1 t_2`; the negative branch
//!   `2 g (1/t_1 - 1/t_2) = t_1 - t_2` has no root for distinct effective
//!   states and vanishes identically for equal ones.
//!
//! Every returned root is certified by back-substitution into the energy
//! formula; the generic finder does the same for any scheme by rebuilding
//! it at each trial `a`.

use crate::centrifugal::SchemeSpec;
use crate::model::{EckartModel, PhysicalConstants, QuantumNumbers};
use crate::spectrum;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DegeneracyError {
    #[error("residual does not change sign on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("states are identical; the condition is degenerate")]
    DegenerateInput,
    #[error("states share n_r and effective L; they are degenerate for every a")]
    AlwaysDegenerate,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("model error: {0}")]
    Model(#[from] crate::model::ModelError),
    #[error("scheme error: {0}")]
    Scheme(#[from] crate::centrifugal::CentrifugalError),
    #[error("spectrum error: {0}")]
    Spectrum(#[from] crate::spectrum::SpectrumError),
}

/// The coupling `a -> alpha(a)`. The reference tables use `alpha = 1/a`.
#[derive(Clone)]
pub enum AlphaLaw {
    InverseA,
    Constant(f64),
    Custom(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl AlphaLaw {
    pub fn value(&self, a: f64) -> f64 {
        match self {
            AlphaLaw::InverseA => 1.0 / a,
            AlphaLaw::Constant(c) => *c,
            AlphaLaw::Custom(f) => f(a),
        }
    }
}

impl Default for AlphaLaw {
    fn default() -> Self {
        AlphaLaw::InverseA
    }
}

impl std::fmt::Debug for AlphaLaw {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AlphaLaw::InverseA => write!(f, "AlphaLaw::InverseA"),
            AlphaLaw::Constant(c) => write!(f, "AlphaLaw::Constant({c})"),
            AlphaLaw::Custom(_) => write!(f, "AlphaLaw::Custom(..)"),
        }
    }
}

/// Branch of the two-state condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignBranch {
    Plus,
    Minus,
}

/// A two-state degeneracy problem.
#[derive(Debug, Clone)]
pub struct DegeneracyProblem {
    pub state1: QuantumNumbers,
    pub state2: QuantumNumbers,
    pub sign: SignBranch,
    pub law: AlphaLaw,
    pub beta: f64,
    pub constants: PhysicalConstants,
}

fn dimensionless_g(law: &AlphaLaw, c: &PhysicalConstants, a: f64) -> f64 {
    c.mu * a * a * law.value(a) / (c.hbar * c.hbar)
}

fn t_of(q: &QuantumNumbers, c: &PhysicalConstants, beta: f64, a: f64) -> f64 {
    let lam_half = q.ell as f64 + (q.d as f64 - 2.0) / 2.0; // L + 1/2
    let w = 2.0 * c.mu * a * a * beta / (c.hbar * c.hbar);
    q.n_r as f64 + 0.5 + (lam_half * lam_half + w).sqrt()
}

/// Squared-form zero-energy residual at range `a`: zero exactly when the
/// state `(n_r, ell, D)` reaches `E = 0` under the Greene-Aldrich scheme.
pub fn zero_energy_residual(
    n_r: u32,
    ell: u32,
    d: u32,
    law: &AlphaLaw,
    beta: f64,
    constants: &PhysicalConstants,
    a: f64,
) -> f64 {
    let g8 = 8.0 * constants.mu * a * a * law.value(a) / (constants.hbar * constants.hbar);
    let w8 = 8.0 * constants.mu * a * a * beta / (constants.hbar * constants.hbar);
    let p = (2 * n_r + 1) as f64;
    let lam = (2 * ell + d - 2) as f64;
    let lhs = g8 - w8 - p * p - lam * lam;
    lhs * lhs - (2.0 * p) * (2.0 * p) * (lam * lam + w8)
}

/// Residual of the two-state condition at range `a` for the chosen branch.
pub fn degeneracy_residual(problem: &DegeneracyProblem, a: f64) -> f64 {
    let g = dimensionless_g(&problem.law, &problem.constants, a);
    let t1 = t_of(&problem.state1, &problem.constants, problem.beta, a);
    let t2 = t_of(&problem.state2, &problem.constants, problem.beta, a);
    match problem.sign {
        SignBranch::Plus => 2.0 * g - t1 * t2,
        SignBranch::Minus => 2.0 * g * (1.0 / t1 - 1.0 / t2) - (t1 - t2),
    }
}

fn bisect_root<F>(mut f: F, lo: f64, hi: f64) -> Result<f64, DegeneracyError>
where
    F: FnMut(f64) -> Result<f64, DegeneracyError>,
{
    if !(lo < hi) {
        return Err(DegeneracyError::InvalidInput(format!("bracket [{lo}, {hi}]")));
    }
    let f_lo = f(lo)?;
    let f_hi = f(hi)?;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(DegeneracyError::NoSignChange { lo, hi });
    }
    let (mut lo, mut hi) = (lo, hi);
    let (mut f_lo, mut f_hi) = (f_lo, f_hi);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= 4.0 * f64::EPSILON * mid.abs().max(1.0) {
            break;
        }
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    // one guarded secant step to polish inside the final bracket
    let denom = f_hi - f_lo;
    if denom != 0.0 {
        let x = lo - f_lo * (hi - lo) / denom;
        if x > lo && x < hi {
            return Ok(x);
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Range `a0` at which the state `(n_r, ell, D)` reaches zero energy under
/// the Greene-Aldrich scheme, searched on `bracket`.
pub fn zero_energy_a(
    n_r: u32,
    ell: u32,
    d: u32,
    law: &AlphaLaw,
    beta: f64,
    constants: &PhysicalConstants,
    bracket: (f64, f64),
) -> Result<f64, DegeneracyError> {
    bisect_root(
        |a| Ok(zero_energy_residual(n_r, ell, d, law, beta, constants, a)),
        bracket.0,
        bracket.1,
    )
}

/// Range `a12` at which the two states of `problem` become degenerate,
/// searched on `bracket`.
pub fn degeneracy_a(problem: &DegeneracyProblem, bracket: (f64, f64)) -> Result<f64, DegeneracyError> {
    if problem.state1 == problem.state2 {
        return Err(DegeneracyError::DegenerateInput);
    }
    if problem.sign == SignBranch::Minus && same_effective_state(&problem.state1, &problem.state2) {
        return Err(DegeneracyError::AlwaysDegenerate);
    }
    bisect_root(|a| Ok(degeneracy_residual(problem, a)), bracket.0, bracket.1)
}

/// `n_r` and effective `L` both equal: the spectrum depends on nothing
/// else, so such a pair is degenerate at every `a`.
pub fn same_effective_state(s1: &QuantumNumbers, s2: &QuantumNumbers) -> bool {
    s1.n_r == s2.n_r && s1.effective_l() == s2.effective_l()
}

/// Degeneracy point for an arbitrary scheme, located on the difference of
/// the two closed-form energies with the scheme rebuilt at every trial `a`
/// (its reference radius moves with the potential minimum).
pub fn degeneracy_a_numeric(
    scheme: &SchemeSpec,
    state1: &QuantumNumbers,
    state2: &QuantumNumbers,
    law: &AlphaLaw,
    beta: f64,
    constants: &PhysicalConstants,
    bracket: (f64, f64),
) -> Result<f64, DegeneracyError> {
    if state1 == state2 {
        return Err(DegeneracyError::DegenerateInput);
    }
    if same_effective_state(state1, state2) {
        return Err(DegeneracyError::AlwaysDegenerate);
    }
    bisect_root(
        |a| {
            let model = EckartModel::with_constants(law.value(a), beta, a, *constants)?;
            let s = scheme.build(&model)?;
            Ok(spectrum::energy_formal(&model, &s, state1)?
                - spectrum::energy_formal(&model, &s, state2)?)
        },
        bracket.0,
        bracket.1,
    )
}

/// Outcome of a scan entry.
#[derive(Debug, Clone, PartialEq)]
pub enum PairDegeneracy {
    Root(f64),
    AlwaysDegenerate,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanEntry {
    pub pair: (QuantumNumbers, QuantumNumbers),
    pub result: PairDegeneracy,
}

/// Scan the positive-branch residual of every pair over `a_range`, refining
/// each sign-change bracket to a root. Roots come back sorted by `a`;
/// equal-effective-state pairs are flagged instead of searched.
pub fn scan_degeneracies(
    pairs: &[(QuantumNumbers, QuantumNumbers)],
    law: &AlphaLaw,
    beta: f64,
    constants: &PhysicalConstants,
    a_range: (f64, f64),
    n_samples: usize,
) -> Result<Vec<ScanEntry>, DegeneracyError> {
    if n_samples < 2 {
        return Err(DegeneracyError::InvalidInput(format!("n_samples = {n_samples} < 2")));
    }
    let mut roots = Vec::new();
    let mut flagged = Vec::new();
    for pair in pairs {
        if same_effective_state(&pair.0, &pair.1) {
            flagged.push(ScanEntry { pair: *pair, result: PairDegeneracy::AlwaysDegenerate });
            continue;
        }
        let problem = DegeneracyProblem {
            state1: pair.0,
            state2: pair.1,
            sign: SignBranch::Plus,
            law: law.clone(),
            beta,
            constants: *constants,
        };
        let step = (a_range.1 - a_range.0) / (n_samples - 1) as f64;
        let mut prev_a = a_range.0;
        let mut prev_res = degeneracy_residual(&problem, prev_a);
        for i in 1..n_samples {
            let a = a_range.0 + i as f64 * step;
            let res = degeneracy_residual(&problem, a);
            if prev_res == 0.0 || prev_res.signum() != res.signum() {
                let root = degeneracy_a(&problem, (prev_a, a))?;
                roots.push(ScanEntry { pair: *pair, result: PairDegeneracy::Root(root) });
            }
            prev_a = a;
            prev_res = res;
        }
    }
    roots.sort_by(|x, y| {
        let ax = match x.result {
            PairDegeneracy::Root(a) => a,
            PairDegeneracy::AlwaysDegenerate => f64::INFINITY,
        };
        let ay = match y.result {
            PairDegeneracy::Root(a) => a,
            PairDegeneracy::AlwaysDegenerate => f64::INFINITY,
        };
        ax.partial_cmp(&ay).unwrap()
    });
    roots.extend(flagged);
    Ok(roots)
}
