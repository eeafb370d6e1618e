//! Reference values of the Faddeeva function, for testing only.
//!
//! Values are computed in multiple precision (`astro-float`) and rounded
//! once to `f64`:
//!
//! * `|z| < 10`: the Maclaurin series of the complex Dawson function, with
//!   the working precision raised to absorb its cancellation;
//! * `|z| >= 10`: the asymptotic series, truncated at its smallest term;
//! * a Gauss-Legendre quadrature of the integral representation, for `x <= 8`,
//!   as a route independent of both series.
//!
//! None of this shares code with `voigt-core`'s evaluation path.

mod mp;
pub mod quad;
mod series;

use num_complex::Complex64;
use thiserror::Error;
use voigt_core::ComplexArg64;

pub use quad::{w_quadrature, QuadConfig, QUADRATURE_X_MAX};
pub use series::Method;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("{what} = {value} is outside the oracle's domain")]
    OutOfDomain { what: &'static str, value: f64 },
    #[error("arguments must be finite")]
    NonFinite,
    #[error("asymptotic series did not reach the target accuracy at z = {x} + {y}i")]
    NoConvergence { x: f64, y: f64 },
    #[error("relative error undefined: reference {0} component is zero")]
    ZeroReference(&'static str),
}

/// `w(x + iy)` for any finite `x` and `y >= 0`.
pub fn ref_w_any(x: f64, y: f64) -> Result<Complex64, OracleError> {
    ref_w_method(x, y, Method::Auto)
}

/// [`ref_w_any`] with the series chosen by the caller.
pub fn ref_w_method(x: f64, y: f64, method: Method) -> Result<Complex64, OracleError> {
    if !(x.is_finite() && y.is_finite()) {
        return Err(OracleError::NonFinite);
    }
    if y < 0.0 {
        return Err(OracleError::OutOfDomain { what: "y", value: y });
    }
    let w = series::w_mp(x.abs(), y, method)?;
    let v = Complex64::new(mp::to_f64(&w.re), mp::to_f64(&w.im));
    Ok(if x.is_sign_negative() { Complex64::new(v.re, -v.im) } else { v })
}

/// `w(x + iy)` on the evaluator's domain `0 <= y <= 0.1`.
pub fn ref_w(x: f64, y: f64) -> Result<Complex64, OracleError> {
    if y.is_finite() && !(0.0..=0.1).contains(&y) {
        return Err(OracleError::OutOfDomain { what: "y", value: y });
    }
    ref_w_any(x, y)
}

/// Dawson's integral `D(x)`.
pub fn ref_dawson(x: f64) -> Result<f64, OracleError> {
    if !x.is_finite() {
        return Err(OracleError::NonFinite);
    }
    let d = mp::to_f64(&series::dawson_mp(x.abs())?);
    Ok(if x.is_sign_negative() { -d } else { d })
}

/// `erfcx(y) = e^(y^2) erfc(y) = K(0, y)`, for `y >= 0`.
pub fn ref_erfcx(y: f64) -> Result<f64, OracleError> {
    Ok(ref_w_any(0.0, y)?.re)
}

/// Componentwise relative errors of one evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorReport {
    pub delta_re: f64,
    pub delta_im: f64,
    pub point: ComplexArg64,
}

impl ErrorReport {
    /// The larger of the two componentwise errors.
    pub fn delta_c(&self) -> f64 {
        self.delta_re.max(self.delta_im)
    }
}

/// `|a - r| / |r|`, or `None` when `r == 0`.
pub fn relative_error(approx: f64, reference: f64) -> Option<f64> {
    if reference == 0.0 {
        None
    } else {
        Some(((approx - reference) / reference).abs())
    }
}

/// `(|Re a - Re r| / |Re r|, |Im a - Im r| / |Im r|)`.
pub fn rel_errors(approx: Complex64, reference: Complex64, point: ComplexArg64) -> Result<ErrorReport, OracleError> {
    let delta_re = relative_error(approx.re, reference.re).ok_or(OracleError::ZeroReference("re"))?;
    let delta_im = relative_error(approx.im, reference.im).ok_or(OracleError::ZeroReference("im"))?;
    Ok(ErrorReport { delta_re, delta_im, point })
}
