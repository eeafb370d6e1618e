//! Empirical switch radius: where the Laplace fraction alone first meets a tolerance.

use num_complex::Complex64;
use voigt_core::{laplace_w, ComplexArg64};
use voigt_oracle::{ref_w, relative_error};

use crate::{CliError, Result};

/// Depths tried at each radius; the best one counts.
pub const DEPTH_GRID: [usize; 8] = [6, 12, 25, 50, 100, 200, 500, 1000];
pub const SEARCH_LO: f64 = 0.5;
pub const SEARCH_HI: f64 = 30.0;
/// Width of the final bracket.
pub const RESOLUTION: f64 = 0.01;

/// Smallest componentwise error of the fraction at `|z| = r`, over [`DEPTH_GRID`].
pub fn best_fraction_error(r: f64, y: f64) -> Result<f64> {
    let x = (r * r - y * y).sqrt();
    let z = ComplexArg64::new(x, y)?;
    let reference: Complex64 = ref_w(x, y)?;
    let mut best = f64::INFINITY;
    for n_c in DEPTH_GRID {
        let w = laplace_w(z, n_c)?;
        let e = relative_error(w.re, reference.re)
            .unwrap_or(w.re.abs())
            .max(relative_error(w.im, reference.im).unwrap_or(w.im.abs()));
        best = best.min(e);
    }
    Ok(best)
}

/// Bisects `|z|` in `[0.5, 30]` at fixed `y`. The result satisfies the tolerance
/// and lies within 0.01 above the first radius that does.
pub fn find_boundary(y: f64, eps: f64) -> Result<f64> {
    if !(y > 0.0 && y <= 0.1) {
        return Err(CliError::Domain(format!("y = {y} must lie in (0, 0.1]")));
    }
    if !(1e-13..=1e-6).contains(&eps) {
        return Err(CliError::Domain(format!("eps = {eps:e} must lie in [1e-13, 1e-6]")));
    }
    let ok = |r: f64| best_fraction_error(r, y).map(|e| e <= eps);
    let (mut lo, mut hi) = (SEARCH_LO, SEARCH_HI);
    if ok(lo)? {
        return Ok(lo);
    }
    if !ok(hi)? {
        return Err(CliError::NoBoundary { y, eps, lo, hi });
    }
    while hi - lo > RESOLUTION {
        let mid = 0.5 * (lo + hi);
        if ok(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}
