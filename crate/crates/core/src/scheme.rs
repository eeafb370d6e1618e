//! Public evaluator: parameter selection, domain boundary and dispatch.

use num_complex::Complex;
use rayon::prelude::*;

use crate::coeffs::FoldTable;
use crate::dawson::dawson_cf_unchecked;
use crate::error::{Result, VoigtError};
use crate::laplace::{external_depth, laplace_w_unchecked};
use crate::real::{gaussian, Real};
use crate::taylor::{build_y_coefficients, eval_with_coefficients, SeriesParams, VoigtValue, YCoefficientSet};

/// Target accuracy; selects the internal/external boundary and the truncation parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum AccuracyLevel {
    #[default]
    E16,
    E20,
    E40,
    E60,
    E80,
    E100,
}

impl AccuracyLevel {
    pub const ALL: [AccuracyLevel; 6] = [Self::E16, Self::E20, Self::E40, Self::E60, Self::E80, Self::E100];

    pub fn epsilon(self) -> f64 {
        match self {
            Self::E16 => 1e-16,
            Self::E20 => 1e-20,
            Self::E40 => 1e-40,
            Self::E60 => 1e-60,
            Self::E80 => 1e-80,
            Self::E100 => 1e-100,
        }
    }

    pub fn from_epsilon(eps: f64) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|l| l.epsilon() == eps)
            .ok_or(VoigtError::UnsupportedLevel(eps))
    }

    /// Cubic in `ln y` for the boundary at this level.
    pub fn boundary_model(self) -> BoundaryModel {
        let c = match self {
            Self::E16 => [6.4908, -6.9856e-2, -1.8237e-4, -3.0026e-7],
            Self::E20 => [7.1461, -6.5589e-2, -1.6308e-4, -2.6500e-7],
            Self::E40 => [9.8625, -5.0156e-2, -9.3640e-5, -1.3861e-7],
            Self::E60 => [11.9611, -4.2288e-2, -6.5582e-5, -9.4912e-8],
            Self::E80 => [13.7687, -3.6042e-2, -3.6111e-5, -3.1788e-8],
            Self::E100 => [15.3784, -3.1655e-2, -1.9984e-5, -2.0282e-9],
        };
        BoundaryModel { c }
    }
}

/// `z_c = c0 + c1 u + c2 u^2 + c3 u^3` with `u = ln y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryModel {
    pub c: [f64; 4],
}

impl BoundaryModel {
    pub fn z_c(&self, y: f64) -> f64 {
        let u = y.ln();
        let [c0, c1, c2, c3] = self.c;
        ((c3 * u + c2) * u + c1) * u + c0
    }
}

/// How the internal/external switch radius is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum BoundaryRule {
    /// `z_c(y)` from the level's boundary model.
    #[default]
    Model,
    /// A fixed radius independent of `y`.
    Fixed(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EvalOptions {
    pub accuracy: AccuracyLevel,
    /// Used as-is instead of the tabulated parameters, including the Laplace depth.
    pub override_params: Option<SeriesParams>,
    pub boundary: BoundaryRule,
}

impl EvalOptions {
    pub fn with_accuracy(accuracy: AccuracyLevel) -> Self {
        Self { accuracy, ..Self::default() }
    }
}

/// Internal/external switch radius at `0 < y <= 0.1`.
pub fn boundary_z_c(y: f64, level: AccuracyLevel) -> Result<f64> {
    if !(y > 0.0 && y <= 0.1) {
        return Err(VoigtError::YOutOfRange(y));
    }
    Ok(level.boundary_model().z_c(y))
}

const TABLE_E16: [(f64, SeriesParams); 7] = [
    (1e-7, SeriesParams::new(1, 61, 6)),
    (2.5119e-4, SeriesParams::new(2, 61, 6)),
    (3.9811e-3, SeriesParams::new(3, 61, 6)),
    (0.015849, SeriesParams::new(4, 61, 6)),
    (0.039811, SeriesParams::new(5, 61, 6)),
    (0.063096, SeriesParams::new(6, 61, 6)),
    (f64::INFINITY, SeriesParams::new(7, 61, 6)),
];

const TABLE_E100: [(f64, SeriesParams); 16] = [
    (6.3096e-49, SeriesParams::new(1, 344, 65)),
    (1.5849e-24, SeriesParams::new(2, 344, 65)),
    (1.5849e-16, SeriesParams::new(3, 344, 65)),
    (1.5849e-12, SeriesParams::new(4, 344, 65)),
    (3.9811e-10, SeriesParams::new(5, 344, 65)),
    (1.5849e-8, SeriesParams::new(6, 344, 65)),
    (1.5849e-7, SeriesParams::new(7, 344, 65)),
    (1.5849e-6, SeriesParams::new(8, 344, 65)),
    (6.3096e-6, SeriesParams::new(9, 344, 65)),
    (2.5119e-5, SeriesParams::new(10, 344, 65)),
    (6.3096e-5, SeriesParams::new(11, 344, 65)),
    (1.5849e-4, SeriesParams::new(12, 344, 65)),
    (3.9811e-3, SeriesParams::new(13, 254, 43)),
    (0.025119, SeriesParams::new(14, 197, 30)),
    (0.063096, SeriesParams::new(15, 169, 25)),
    (f64::INFINITY, SeriesParams::new(16, 154, 22)),
];

/// Band boundaries `(upper, params)` for a level with a published table.
pub fn parameter_table(level: AccuracyLevel) -> Result<&'static [(f64, SeriesParams)]> {
    match level {
        AccuracyLevel::E16 => Ok(&TABLE_E16),
        AccuracyLevel::E100 => Ok(&TABLE_E100),
        other => Err(VoigtError::UnsupportedLevel(other.epsilon())),
    }
}

/// Tabulated parameters for `0 <= y <= 0.1`. Bands are `[lower, upper)`; the last is closed.
pub fn select_params(y: f64, level: AccuracyLevel) -> Result<SeriesParams> {
    if !(0.0..=0.1).contains(&y) {
        return Err(VoigtError::YOutOfRange(y));
    }
    let table = parameter_table(level)?;
    Ok(table.iter().find(|&&(upper, _)| y < upper).expect("last band is unbounded").1)
}

fn check_y<T: Real>(y: T) -> Result<f64> {
    if !y.is_finite() {
        return Err(VoigtError::NonFinite("y"));
    }
    let yf = y.to_f64().unwrap_or(f64::NAN);
    if y < T::zero() || y > T::lit(0.1) {
        return Err(VoigtError::YOutOfRange(yf));
    }
    Ok(yf.min(0.1))
}

/// Laplace branch at `x >= 0`. Unless the caller fixed the parameters, the
/// depth grows towards the boundary so the fraction itself stays exact to
/// rounding there.
#[inline]
fn external<T: Real>(x: T, y: T, params: SeriesParams, fixed_depth: bool) -> VoigtValue<T> {
    let n_c = if fixed_depth {
        params.n_c
    } else {
        let r = x.hypot(y).to_f64().unwrap_or(f64::INFINITY);
        params.n_c.max(external_depth(r))
    };
    let w = laplace_w_unchecked(Complex::new(x, y), n_c);
    VoigtValue { k: w.re, l: w.im }
}

enum Plan<T> {
    /// `y = 0`: `K = exp(-x^2)`, `L = (2/sqrt(pi)) F(x)`.
    Axis { n_d: usize },
    Series {
        y: T,
        z_c: T,
        params: SeriesParams,
        fixed_depth: bool,
        coeffs: YCoefficientSet<T>,
    },
}

/// Evaluator for one fixed `y`, with the per-`y` fold done once.
pub struct Evaluator<T> {
    plan: Plan<T>,
}

impl<T: Real> Evaluator<T> {
    pub fn new(y: T, opts: &EvalOptions) -> Result<Self> {
        let yf = check_y(y)?;
        let (params, fixed_depth) = match opts.override_params {
            Some(p) => (p, true),
            None => (select_params(yf, opts.accuracy)?, false),
        };
        let tables = FoldTable::global();
        params.validate(tables.m_max)?;
        if y == T::zero() {
            return Ok(Self { plan: Plan::Axis { n_d: params.n_d } });
        }
        let z_c = match opts.boundary {
            BoundaryRule::Model => opts.accuracy.boundary_model().z_c(yf),
            BoundaryRule::Fixed(r) => r,
        };
        let coeffs = build_y_coefficients(y, params, tables)?;
        Ok(Self { plan: Plan::Series { y, z_c: T::lit(z_c), params, fixed_depth, coeffs } })
    }

    /// Parameters in effect, if the point is served by the series.
    pub fn params(&self) -> Option<SeriesParams> {
        match &self.plan {
            Plan::Axis { .. } => None,
            Plan::Series { params, .. } => Some(*params),
        }
    }

    /// Switch radius; `None` on the real axis, where no switch is made.
    pub fn z_c(&self) -> Option<T> {
        match &self.plan {
            Plan::Axis { .. } => None,
            Plan::Series { z_c, .. } => Some(*z_c),
        }
    }

    pub fn eval(&self, x: T) -> Result<VoigtValue<T>> {
        if !x.is_finite() {
            return Err(VoigtError::NonFinite("x"));
        }
        let ax = x.abs();
        let mut v = match &self.plan {
            Plan::Axis { n_d } => VoigtValue {
                k: gaussian(ax),
                l: T::FRAC_2_SQRT_PI() * dawson_cf_unchecked(ax, *n_d),
            },
            Plan::Series { y, z_c, params, fixed_depth, coeffs } => {
                if ax.hypot(*y) < *z_c {
                    eval_with_coefficients(ax, coeffs, *params)
                } else {
                    external(ax, *y, *params, *fixed_depth)
                }
            }
        };
        if x.is_sign_negative() {
            v.l = -v.l;
        }
        Ok(v)
    }

    /// Forced internal-branch value at `x`, whatever `|z|` is. `None` on the real axis.
    pub fn eval_internal(&self, x: T) -> Option<VoigtValue<T>> {
        match &self.plan {
            Plan::Axis { .. } => None,
            Plan::Series { coeffs, params, .. } => Some(eval_with_coefficients(x.abs(), coeffs, *params)),
        }
    }

    /// Forced external-branch value at `x`, at the depth the dispatcher would use.
    pub fn eval_external(&self, x: T) -> Option<VoigtValue<T>> {
        match &self.plan {
            Plan::Axis { .. } => None,
            Plan::Series { y, params, fixed_depth, .. } => Some(external(x.abs(), *y, *params, *fixed_depth)),
        }
    }

    pub fn eval_slice(&self, xs: &[T]) -> Result<Vec<VoigtValue<T>>> {
        xs.par_iter().map(|&x| self.eval(x)).collect()
    }
}

/// `w(x + iy) = K + iL` for any finite `x` and `0 <= y <= 0.1`.
pub fn eval_w<T: Real>(x: T, y: T, opts: &EvalOptions) -> Result<VoigtValue<T>> {
    if !x.is_finite() {
        return Err(VoigtError::NonFinite("x"));
    }
    Evaluator::new(y, opts)?.eval(x)
}

/// [`eval_w`] over many `x` at a shared `y`; bit-identical to the pointwise calls.
pub fn eval_w_batch<T: Real>(xs: &[T], y: T, opts: &EvalOptions) -> Result<Vec<VoigtValue<T>>> {
    Evaluator::new(y, opts)?.eval_slice(xs)
}
