//! Approximations to the centrifugal term `1/r^2`.
//!
//! Every scheme replaces `1/r^2` by
//!
//! ```text
//! f(r) = (1/a^2) * (y1 + y2 s/(1-s) + y3 s^2/(1-s)^2),   s = e^{-r/a},
//! ```
//!
//! and is therefore fully described by the coefficient triple `(y1, y2, y3)`:
//!
//! * `f1` (Greene-Aldrich): `(0, 1, 1)` — exact as `r -> 0`.
//! * `f2`: `(0, xi1, xi2)` with two adjustable dimensionless parameters.
//! * `f3`: `(1/12, 1, 1)`.
//! * `f4` (Pekeris-type): matches `1/r^2` and its first two derivatives at a
//!   reference radius `r0`.
//! * `f5`: a weight-sum `y_i = sum_j lambda_j x_{ij}` over the four schemes
//!   above, with `sum_j lambda_j = 1`.

use crate::model::{EckartModel, QuantumNumbers};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum CentrifugalError {
    #[error("reference radius r0 must be strictly positive, got {0}")]
    NonPositiveR0(f64),
    #[error("radius must be strictly positive, got {0}")]
    NonPositiveRadius(f64),
    #[error("combination weights must sum to 1 within 1e-12, got sum {0}")]
    WeightSum(f64),
    #[error("empty radial grid")]
    EmptyGrid,
    #[error("model error: {0}")]
    Model(#[from] crate::model::ModelError),
}

/// Tolerance on `sum lambda_j = 1` for combination schemes.
pub const WEIGHT_SUM_TOL: f64 = 1e-12;

/// Which construction produced a scheme, together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Provenance {
    F1,
    F2 { xi1: f64, xi2: f64 },
    F3,
    F4 { r0: f64 },
    F5 { lambdas: [f64; 4], xi1: f64, xi2: f64, r0: f64 },
}

/// A concrete `(y1, y2, y3)` coefficient triple with its provenance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ApproximationScheme {
    pub y1: f64,
    pub y2: f64,
    pub y3: f64,
    pub provenance: Provenance,
}

impl ApproximationScheme {
    /// The approximated `1/r^2` at radius `r` for range parameter `a`.
    pub fn evaluate_inv_r2(&self, r: f64, a: f64) -> Result<f64, CentrifugalError> {
        if !(r > 0.0) {
            return Err(CentrifugalError::NonPositiveRadius(r));
        }
        let s = (-r / a).exp();
        let one_minus_s = -(-r / a).exp_m1();
        let t = s / one_minus_s;
        Ok((self.y1 + self.y2 * t + self.y3 * t * t) / (a * a))
    }

    fn coefficients(&self) -> [f64; 3] {
        [self.y1, self.y2, self.y3]
    }
}

/// Greene-Aldrich scheme `(0, 1, 1)`.
pub fn make_f1() -> ApproximationScheme {
    ApproximationScheme { y1: 0.0, y2: 1.0, y3: 1.0, provenance: Provenance::F1 }
}

/// Two-parameter scheme `(0, xi1, xi2)`.
pub fn make_f2(xi1: f64, xi2: f64) -> ApproximationScheme {
    ApproximationScheme { y1: 0.0, y2: xi1, y3: xi2, provenance: Provenance::F2 { xi1, xi2 } }
}

/// Scheme `(1/12, 1, 1)`.
pub fn make_f3() -> ApproximationScheme {
    ApproximationScheme { y1: 1.0 / 12.0, y2: 1.0, y3: 1.0, provenance: Provenance::F3 }
}

// Maclaurin coefficients of the three f4 bracket functions. The closed-form
// expressions below cancel to O(u^4) (respectively O(u^2), O(u)) against
// terms of order one, so a direct evaluation loses up to six digits at the
// reference tables' u ~ 0.008. The series evaluation is exact to machine
// precision for u < 1; the closed form takes over above, where the
// cancellation is harmless.
//
// x14(u) = sum_k X14_SERIES[k] u^k
const X14_SERIES: [f64; 26] = [
    0.083333333333333333333,
    0.0,
    -0.025,
    0.016666666666666666667,
    -0.0068948412698412698413,
    0.0021825396825396825397,
    -0.00057153880070546737213,
    0.00012896825396825396825,
    -0.000025715989257655924323,
    4.6095879429212762546e-6,
    -7.5213678884313804949e-7,
    1.1278954731335683717e-7,
    -1.5663207524153291349e-8,
    2.0268807471188423569e-9,
    -2.4567544356131087120e-10,
    2.8015234387134999232e-11,
    -3.0170051959885908410e-12,
    3.0785668322846936983e-13,
    -2.9852722663573769724e-14,
    2.7581298867391720269e-15,
    -2.4336431132418324792e-16,
    2.0550760328144309326e-17,
    -1.6640290278531946088e-18,
    1.2942447426861702264e-19,
    -9.6848243961588071742e-21,
    6.9827886753471014370e-22,
];
// x24(u) = 2 (delta/u)^2 sum_k X24_SERIES[k] u^k, delta = 1 - e^{-u}
const X24_SERIES: [f64; 26] = [
    0.5,
    0.5,
    0.20833333333333333333,
    0.058333333333333333333,
    0.0125,
    0.0021825396825396825397,
    0.00032242063492063492063,
    0.000041335978835978835979,
    4.6847442680776014109e-6,
    4.7599005932339265673e-7,
    4.3841189674523007856e-8,
    3.6935800824689713579e-9,
    2.8676863994324311785e-10,
    2.0647342075913504485e-11,
    1.3860484263923417363e-12,
    8.7155174884711143659e-14,
    5.1543382996334547325e-15,
    2.8772223363185154009e-16,
    1.5208175206255009976e-17,
    7.6334470147225918800e-19,
    3.6476844709047350476e-20,
    1.6633131733711941362e-21,
    7.2528190699325325707e-23,
    3.0300666336607024962e-24,
    1.2150021689801507554e-25,
    4.6836818305357285357e-27,
];
// x34(u) = -(delta/u)^3 sum_k X34_SERIES[k] u^k
const X34_SERIES: [f64; 26] = [
    -1.0,
    -1.5,
    -1.0,
    -0.375,
    -0.066666666666666666667,
    0.0125,
    0.014682539682539682540,
    0.0066220238095238095238,
    0.0021494708994708994709,
    0.00056795634920634920635,
    0.00012861752445085778419,
    0.000025684674122174122174,
    4.6070184959073847963e-6,
    7.5194178616797664417e-7,
    1.1277578241863956150e-7,
    1.5662299423460137746e-8,
    2.0268245179737554465e-9,
    2.4567216352784746809e-10,
    2.8015053533159573496e-11,
    3.0169957422580572230e-12,
    3.0785621347788384844e-13,
    2.9852700421595288598e-14,
    2.7581288810149276629e-15,
    2.4336426780726882833e-16,
    2.0550758522998229698e-17,
    1.6640289559449029753e-18,
];

fn horner(coeffs: &[f64], u: f64) -> f64 {
    let mut acc = 0.0;
    for &c in coeffs.iter().rev() {
        acc = acc * u + c;
    }
    acc
}

/// The `(x14, x24, x34)` coefficients of the Pekeris-type scheme for
/// `u = r0 / a`.
fn f4_coefficients(u: f64) -> [f64; 3] {
    if u < 1.0 {
        let delta_over_u = -(-u).exp_m1() / u;
        let x14 = horner(&X14_SERIES, u);
        let x24 = 2.0 * delta_over_u * delta_over_u * horner(&X24_SERIES, u);
        let x34 = delta_over_u.powi(3) * horner(&X34_SERIES, u);
        [x14, x24, -x34]
    } else {
        let s0 = (-u).exp();
        let delta = -(-u).exp_m1();
        let u4 = u.powi(4);
        let x14 = ((3.0 + u) * s0 * s0 + (2.0 * u - 6.0) * s0 + (3.0 - 3.0 * u + u * u)) / u4;
        let x24 = 2.0 * delta * delta * (3.0 + u + (2.0 * u - 3.0) / s0) / u4;
        let x34 = -delta.powi(3) * ((3.0 + u) / s0 + (u - 3.0) / (s0 * s0)) / u4;
        [x14, x24, x34]
    }
}

/// Pekeris-type scheme matching `1/r^2` to second order at `r0 > 0`.
pub fn make_f4(model: &EckartModel, r0: f64) -> Result<ApproximationScheme, CentrifugalError> {
    if !(r0 > 0.0) {
        return Err(CentrifugalError::NonPositiveR0(r0));
    }
    let [x14, x24, x34] = f4_coefficients(r0 / model.a);
    Ok(ApproximationScheme { y1: x14, y2: x24, y3: x34, provenance: Provenance::F4 { r0 } })
}

/// The conventional reference radius for `f4`/`f5`: the potential minimum.
pub fn default_r0(model: &EckartModel) -> Result<f64, CentrifugalError> {
    Ok(model.potential_minimum()?.0)
}

/// Weight-sum scheme `y_i = sum_j lambda_j x_{ij}` over `f1..f4`.
///
/// The weights must sum to one; they need not be convex (negative weights
/// are admitted and judged by `validate`).
pub fn make_f5(
    lambdas: [f64; 4],
    xi1: f64,
    xi2: f64,
    model: &EckartModel,
    r0: f64,
) -> Result<ApproximationScheme, CentrifugalError> {
    let sum: f64 = lambdas.iter().sum();
    if (sum - 1.0).abs() > WEIGHT_SUM_TOL {
        return Err(CentrifugalError::WeightSum(sum));
    }
    let components = [make_f1(), make_f2(xi1, xi2), make_f3(), make_f4(model, r0)?];
    let mut y = [0.0; 3];
    for (lambda, comp) in lambdas.iter().zip(components.iter()) {
        for (yi, xi) in y.iter_mut().zip(comp.coefficients()) {
            *yi += lambda * xi;
        }
    }
    Ok(ApproximationScheme {
        y1: y[0],
        y2: y[1],
        y3: y[2],
        provenance: Provenance::F5 { lambdas, xi1, xi2, r0 },
    })
}

/// A buildable description of a scheme, used wherever the coefficients must
/// be reconstructed for varying model parameters (configuration files,
/// degeneracy scans over `a`). `r0 = None` selects the potential minimum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum SchemeSpec {
    F1,
    F2 { xi1: f64, xi2: f64 },
    F3,
    F4 { r0: Option<f64> },
    F5 { lambdas: [f64; 4], xi1: f64, xi2: f64, r0: Option<f64> },
}

impl SchemeSpec {
    pub fn build(&self, model: &EckartModel) -> Result<ApproximationScheme, CentrifugalError> {
        match self {
            SchemeSpec::F1 => Ok(make_f1()),
            SchemeSpec::F2 { xi1, xi2 } => Ok(make_f2(*xi1, *xi2)),
            SchemeSpec::F3 => Ok(make_f3()),
            SchemeSpec::F4 { r0 } => {
                let r0 = match r0 {
                    Some(v) => *v,
                    None => default_r0(model)?,
                };
                make_f4(model, r0)
            }
            SchemeSpec::F5 { lambdas, xi1, xi2, r0 } => {
                let r0 = match r0 {
                    Some(v) => *v,
                    None => default_r0(model)?,
                };
                make_f5(*lambdas, *xi1, *xi2, model, r0)
            }
        }
    }
}

/// Admissibility checks for a scheme at a given model and state.
///
/// A report rather than an error: non-convex weights are allowed whenever
/// these inequalities hold, and the caller decides what to do with a
/// failing scheme.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ValidityReport {
    /// Combination weights sum to one (vacuously true for `f1..f4`).
    pub sum_ok: bool,
    /// `y1 >= 0`.
    pub y1_ok: bool,
    /// `1/4 + 2 mu a^2 beta / hbar^2 + L (L+1) y3 >= 0`, which keeps the
    /// closed-form exponent `L1` real.
    pub l1_ok: bool,
}

impl ValidityReport {
    pub fn is_admissible(&self) -> bool {
        self.sum_ok && self.y1_ok && self.l1_ok
    }
}

pub fn validate(
    scheme: &ApproximationScheme,
    model: &EckartModel,
    q: &QuantumNumbers,
) -> ValidityReport {
    let sum_ok = match scheme.provenance {
        Provenance::F5 { lambdas, .. } => {
            (lambdas.iter().sum::<f64>() - 1.0).abs() <= WEIGHT_SUM_TOL
        }
        _ => true,
    };
    let y1_ok = scheme.y1 >= 0.0;
    let disc = 0.25 + model.constants.energy_scale(model.a) * model.beta + q.l_term() * scheme.y3;
    ValidityReport { sum_ok, y1_ok, l1_ok: disc >= 0.0 }
}

/// Pointwise error `L(L+1) (1/r^2 - f(r))` of a scheme on a radial grid.
///
/// `d = 3` reproduces the conventional `ell (ell+1)` weighting.
pub fn error_profile(
    scheme: &ApproximationScheme,
    model: &EckartModel,
    ell: u32,
    d: u32,
    r_grid: &[f64],
) -> Result<Vec<(f64, f64)>, CentrifugalError> {
    if r_grid.is_empty() {
        return Err(CentrifugalError::EmptyGrid);
    }
    let l_term = QuantumNumbers::new(0, ell, d)?.l_term();
    r_grid
        .iter()
        .map(|&r| {
            let f = scheme.evaluate_inv_r2(r, model.a)?;
            Ok((r, l_term * (1.0 / (r * r) - f)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn table_model() -> EckartModel {
        EckartModel::new(0.025, 0.0001, 40.0).unwrap()
    }

    #[test]
    fn fixed_coefficient_triples() {
        let f1 = make_f1();
        assert_eq!(f1.coefficients(), [0.0, 1.0, 1.0]);
        assert_eq!(make_f2(1.1, 0.98).coefficients(), [0.0, 1.1, 0.98]);
        assert_eq!(make_f2(1.0, 1.0).coefficients(), f1.coefficients());
        assert_eq!(make_f3().coefficients(), [1.0 / 12.0, 1.0, 1.0]);
    }

    #[test]
    fn f1_matches_singularity_at_origin() {
        let f1 = make_f1();
        let a = 40.0;
        let mut last = f64::INFINITY;
        for frac in [1e-2, 1e-3, 1e-4] {
            let r = frac * a;
            let err = (r * r * f1.evaluate_inv_r2(r, a).unwrap() - 1.0).abs();
            assert!(err < 2e-3 * (frac / 1e-3));
            assert!(err < last);
            last = err;
        }
    }

    // frozen from a 40-digit evaluation at u = ln(251/249) (the reference
    // tables' default r0) and at two generic u values
    const F4_REF: [(f64, [f64; 3]); 3] = [
        (
            0.008000042667076271347868,
            [0.08333174182156582349338, 1.000000017015881389652, 0.9999999999487986129652],
        ),
        (0.5, [0.07879592859009612104537, 1.003506089154912622491, 0.999200980512273468808]),
        (2.0, [0.05130672674815284485504, 1.157827093030600862707, 0.7132446815223065682145]),
    ];

    #[test]
    fn f4_coefficients_match_high_precision_reference() {
        for (u, expect) in F4_REF {
            let got = f4_coefficients(u);
            for (g, e) in got.iter().zip(expect) {
                assert_relative_eq!(*g, e, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn f4_is_tangent_at_r0() {
        let m = table_model();
        let (r0, _) = m.potential_minimum().unwrap();
        let f4 = make_f4(&m, r0).unwrap();
        // value
        let v = f4.evaluate_inv_r2(r0, m.a).unwrap();
        assert_relative_eq!(v, 1.0 / (r0 * r0), max_relative = 1e-10);
        // first and second derivatives by central differences
        let h = 1e-4 * r0;
        let eval = |r: f64| f4.evaluate_inv_r2(r, m.a).unwrap();
        let exact = |r: f64| 1.0 / (r * r);
        let d1 = (eval(r0 + h) - eval(r0 - h)) / (2.0 * h);
        let d1_exact = (exact(r0 + h) - exact(r0 - h)) / (2.0 * h);
        assert_relative_eq!(d1, d1_exact, max_relative = 1e-6);
        let d2 = (eval(r0 + h) - 2.0 * eval(r0) + eval(r0 - h)) / (h * h);
        let d2_exact = (exact(r0 + h) - 2.0 * exact(r0) + exact(r0 - h)) / (h * h);
        assert_relative_eq!(d2, d2_exact, max_relative = 1e-6);
    }

    #[test]
    fn f5_unit_weights_reproduce_components() {
        let m = table_model();
        let r0 = default_r0(&m).unwrap();
        let (xi1, xi2) = (1.1, 0.98);
        let components =
            [make_f1(), make_f2(xi1, xi2), make_f3(), make_f4(&m, r0).unwrap()];
        for (j, comp) in components.iter().enumerate() {
            let mut lambdas = [0.0; 4];
            lambdas[j] = 1.0;
            let f5 = make_f5(lambdas, xi1, xi2, &m, r0).unwrap();
            for (a, b) in f5.coefficients().iter().zip(comp.coefficients()) {
                assert_relative_eq!(*a, b, max_relative = 1e-15, epsilon = 1e-300);
            }
        }
    }

    #[test]
    fn f5_linearity_and_permutation() {
        let m = table_model();
        let r0 = default_r0(&m).unwrap();
        let (xi1, xi2) = (1.1, 0.98);
        let lambdas = [0.5, 0.2, 0.2, 0.1];
        let f5 = make_f5(lambdas, xi1, xi2, &m, r0).unwrap();
        let comps = [make_f1(), make_f2(xi1, xi2), make_f3(), make_f4(&m, r0).unwrap()];
        for i in 0..3 {
            let manual: f64 =
                lambdas.iter().zip(&comps).map(|(l, c)| l * c.coefficients()[i]).sum();
            assert_relative_eq!(f5.coefficients()[i], manual, max_relative = 1e-15, epsilon = 1e-300);
        }
        // weight-scheme pairs may be listed in any order
        let swapped = {
            let l = [0.1, 0.2, 0.2, 0.5];
            let comps = [comps[3], comps[1], comps[2], comps[0]];
            let mut y = [0.0; 3];
            for (lam, c) in l.iter().zip(&comps) {
                for (yi, xi) in y.iter_mut().zip(c.coefficients()) {
                    *yi += lam * xi;
                }
            }
            y
        };
        for (a, b) in f5.coefficients().iter().zip(swapped) {
            assert!((a - b).abs() <= 1e-15 * a.abs().max(1.0));
        }
    }

    #[test]
    fn f5_rejects_bad_weight_sum() {
        let m = table_model();
        let r0 = default_r0(&m).unwrap();
        let err = make_f5([0.5, 0.5, 0.5, 0.0], 1.1, 0.98, &m, r0).unwrap_err();
        assert!(matches!(err, CentrifugalError::WeightSum(_)));
        assert!(make_f4(&m, 0.0).is_err());
        assert!(make_f4(&m, -1.0).is_err());
    }

    #[test]
    fn f2_zero_coefficients_drop_the_centrifugal_term() {
        let f = make_f2(0.0, 0.0);
        assert_eq!(f.evaluate_inv_r2(1.0, 40.0).unwrap(), 0.0);
    }

    #[test]
    fn inv_r2_limits() {
        let m = table_model();
        let f1 = make_f1();
        // as r -> infinity the value tends to y1/a^2
        let f3 = make_f3();
        let far = f3.evaluate_inv_r2(1e4 * m.a, m.a).unwrap();
        assert_relative_eq!(far, (1.0 / 12.0) / (m.a * m.a), max_relative = 1e-10);
        assert!(f1.evaluate_inv_r2(1e4 * m.a, m.a).unwrap() < 1e-40);
        assert!(f1.evaluate_inv_r2(0.0, m.a).is_err());
    }

    #[test]
    fn validate_convex_and_nonconvex() {
        let m = table_model();
        let r0 = default_r0(&m).unwrap();
        let q = QuantumNumbers::new(0, 1, 3).unwrap();
        // a grid of convex combinations all pass
        for l1 in [0.0, 0.25, 0.5, 1.0] {
            for l2 in [0.0, 0.3] {
                for l3 in [0.0, 0.2] {
                    let l4 = 1.0 - l1 - l2 - l3;
                    if l4 < 0.0 {
                        continue;
                    }
                    let f5 = make_f5([l1, l2, l3, l4], 1.1, 0.98, &m, r0).unwrap();
                    assert!(validate(&f5, &m, &q).is_admissible());
                }
            }
        }
        // the non-convex (2, -1, 0, 0) combination also satisfies all three
        // inequalities at the reference parameters and ell = 1
        let f5 = make_f5([2.0, -1.0, 0.0, 0.0], 1.1, 0.98, &m, r0).unwrap();
        let report = validate(&f5, &m, &q);
        assert!(report.sum_ok && report.y1_ok && report.l1_ok);
        // a coefficient triple with y1 < 0 trips y1_ok
        let bad = ApproximationScheme {
            y1: -0.5,
            y2: 1.0,
            y3: 1.0,
            provenance: Provenance::F2 { xi1: 1.0, xi2: 1.0 },
        };
        assert!(!validate(&bad, &m, &q).y1_ok);
        // weights not summing to one trip sum_ok
        let bad_sum = ApproximationScheme {
            y1: 0.0,
            y2: 1.0,
            y3: 1.0,
            provenance: Provenance::F5 { lambdas: [0.5, 0.0, 0.0, 0.0], xi1: 1.0, xi2: 1.0, r0 },
        };
        assert!(!validate(&bad_sum, &m, &q).sum_ok);
    }

    #[test]
    fn error_profile_basics() {
        let m = table_model();
        let (r0, _) = m.potential_minimum().unwrap();
        let f4 = make_f4(&m, r0).unwrap();
        let prof = error_profile(&f4, &m, 2, 3, &[r0]).unwrap();
        assert!(prof[0].1.abs() < 1e-12);
        // ell = 0 kills the prefactor
        let f1 = make_f1();
        for (_, e) in error_profile(&f1, &m, 0, 3, &[0.5, 1.0, 2.0]).unwrap() {
            assert_eq!(e, 0.0);
        }
        assert!(error_profile(&f1, &m, 2, 3, &[]).is_err());
    }

    #[test]
    fn near_origin_error_ordering() {
        // f3 and the mostly-f3 combination track 1/r^2 near the origin much
        // more closely than f1 and f2
        let m = table_model();
        let r0 = default_r0(&m).unwrap();
        let grid: Vec<f64> = (1..=500).map(|i| 0.01 * i as f64).collect();
        let max_abs = |s: &ApproximationScheme| {
            error_profile(s, &m, 2, 3, &grid)
                .unwrap()
                .iter()
                .map(|(_, e)| e.abs())
                .fold(0.0f64, f64::max)
        };
        let e1 = max_abs(&make_f1());
        let e2 = max_abs(&make_f2(1.1, 0.98));
        let e3 = max_abs(&make_f3());
        let e5a = max_abs(&make_f5([0.0, 0.0, 0.98, 0.02], 1.1, 0.98, &m, r0).unwrap());
        assert!(e3 < e1 && e3 < e2);
        assert!(e5a < e1 && e5a < e2);
    }
}
