//! The Laplace continued fraction for `w(z)` away from the origin.
//!
//! ```text
//! w(z) ~ (i/sqrt(pi)) / (z - (1/2)/(z - 1/(z - (3/2)/(z - ... - (N/2)/z))))
//! ```

use num_complex::Complex;

use crate::error::{Result, VoigtError};
use crate::real::Real;

/// Evaluation point `z = x + iy` with `y >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexArg<T> {
    pub x: T,
    pub y: T,
}

impl<T: Real> ComplexArg<T> {
    pub fn new(x: T, y: T) -> Result<Self> {
        if !x.is_finite() {
            return Err(VoigtError::NonFinite("x"));
        }
        if !y.is_finite() {
            return Err(VoigtError::NonFinite("y"));
        }
        if y < T::zero() {
            return Err(VoigtError::YOutOfRange(y.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(Self { x, y })
    }

    /// `|z|`, without intermediate overflow.
    pub fn abs(&self) -> T {
        self.x.hypot(self.y)
    }

    pub fn to_complex(self) -> Complex<T> {
        Complex::new(self.x, self.y)
    }
}

/// `1/d` by Smith's method. Mirrors exactly under `d -> -conj(d)`.
#[inline]
fn recip<T: Real>(d: Complex<T>) -> Complex<T> {
    if d.re.abs() >= d.im.abs() {
        let r = d.im / d.re;
        let den = d.re + d.im * r;
        Complex::new(T::one() / den, -r / den)
    } else {
        let r = d.re / d.im;
        let den = d.re * r + d.im;
        Complex::new(r / den, -T::one() / den)
    }
}

/// Depth-`n_c` truncation of the Laplace fraction, evaluated bottom-up.
pub fn laplace_w<T: Real>(z: ComplexArg<T>, n_c: usize) -> Result<Complex<T>> {
    if n_c == 0 {
        return Err(VoigtError::ZeroDepth);
    }
    if z.x == T::zero() && z.y == T::zero() {
        return Err(VoigtError::ZeroArgument);
    }
    Ok(laplace_w_unchecked(z.to_complex(), n_c))
}

#[inline]
pub(crate) fn laplace_w_unchecked<T: Real>(z: Complex<T>, n_c: usize) -> Complex<T> {
    let half = T::lit(0.5);
    let mut d = z;
    for k in (1..=n_c).rev() {
        d = z - recip(d) * (T::lit(k as f64) * half);
    }
    let q = recip(d);
    let c = T::frac_1_sqrt_pi();
    Complex::new(-q.im * c, q.re * c)
}

/// `max(|Re - Re_ref|/|Re_ref|, |Im - Im_ref|/|Im_ref|)` for the depth-`n_c` fraction.
pub fn laplace_rel_error<T: Real>(z: ComplexArg<T>, n_c: usize, reference: Complex<T>) -> Result<T> {
    if reference.re == T::zero() {
        return Err(VoigtError::ZeroReference("re"));
    }
    if reference.im == T::zero() {
        return Err(VoigtError::ZeroReference("im"));
    }
    let w = laplace_w(z, n_c)?;
    let dre = ((w.re - reference.re) / reference.re).abs();
    let dim = ((w.im - reference.im) / reference.im).abs();
    Ok(dre.max(dim))
}

/// Smallest depths that keep the truncation error of the fraction below
/// double-precision rounding, as `(lower bound of |z|, depth)`.
const EXTERNAL_DEPTHS: [(f64, usize); 12] = [
    (25.0, 6),
    (17.0, 7),
    (14.0, 8),
    (12.0, 9),
    (10.0, 10),
    (9.5, 11),
    (8.5, 12),
    (8.0, 13),
    (7.5, 15),
    (7.25, 16),
    (7.0, 17),
    (6.8, 19),
];

/// Depth used by the external branch at distance `r = |z|` from the origin.
pub fn external_depth(r: f64) -> usize {
    EXTERNAL_DEPTHS
        .iter()
        .find(|&&(lo, _)| r >= lo)
        .map_or(20, |&(_, n)| n)
}
