//! Dawson's integral by a finite continued fraction.
//!
//! ```text
//! D(x) ~ x / (1 + 2x^2 - 4x^2 / (3 + 2x^2 - 8x^2 / ( ... - 4N x^2 / (2N + 1 + 2x^2))))
//! ```
//!
//! The fraction is evaluated from the innermost level outwards. Rounding
//! errors made deep inside are damped on the way out, so only the outermost
//! levels are carried in two-term arithmetic, together with the exact `x^2`.

use crate::error::{Result, VoigtError};
use crate::real::{Real, TwoFloat};

/// Outermost levels evaluated with compensated arithmetic.
const COMPENSATED_LEVELS: usize = 8;

/// Depth-`n_d` truncation `F(x, n_d)` of the Dawson continued fraction.
pub fn dawson_cf<T: Real>(x: T, n_d: usize) -> Result<T> {
    if n_d == 0 {
        return Err(VoigtError::ZeroDepth);
    }
    if !x.is_finite() {
        return Err(VoigtError::NonFinite("x"));
    }
    Ok(dawson_cf_unchecked(x, n_d))
}

/// [`dawson_cf`] without argument validation; `n_d >= 1` and finite `x`.
///
/// Level `k` of the fraction is `d_k = 2k + 1 + 2x^2 - 4(k+1) x^2 / d_(k+1)`,
/// starting from `d_(n_d) = 2 n_d + 1 + 2x^2`; the result is `x / d_0`.
#[inline]
pub(crate) fn dawson_cf_unchecked<T: Real>(x: T, n_d: usize) -> T {
    let (d0, _) = outer_levels(x, n_d);
    TwoFloat::from_hi(x).div(d0).hi
}

/// `(F, 1 - 2x F)`. The second is formed from the two outer levels as
/// `(1 - 4x^2/d_1) / d_0`, so it keeps full relative accuracy where `2x F -> 1`.
#[inline]
pub(crate) fn dawson_cf_with_complement<T: Real>(x: T, n_d: usize) -> (T, T) {
    let (d0, q) = outer_levels(x, n_d);
    let f = TwoFloat::from_hi(x).div(d0).hi;
    let g = TwoFloat::from_hi(T::one()).sub(q).div(d0).hi;
    (f, g)
}

/// `d_0` and `4x^2 / d_1`, both in two-term form.
#[inline]
fn outer_levels<T: Real>(x: T, n_d: usize) -> (TwoFloat<T>, TwoFloat<T>) {
    let x2 = TwoFloat::product(x, x);
    let two = T::lit(2.0);
    let two_x2_hi = two * x2.hi;
    let compensated = COMPENSATED_LEVELS.min(n_d);

    let mut d = T::lit((2 * n_d + 1) as f64) + two_x2_hi;
    for k in (compensated..n_d).rev() {
        let num = T::lit((4 * (k + 1)) as f64) * x2.hi;
        d = (T::lit((2 * k + 1) as f64) + two_x2_hi) - num / d;
    }

    let two_x2 = x2.scale(two);
    let mut d = TwoFloat::from_hi(d);
    for k in (1..compensated).rev() {
        let num = x2.scale(T::lit((4 * (k + 1)) as f64));
        d = TwoFloat::from_hi(T::lit((2 * k + 1) as f64))
            .add(two_x2)
            .sub(num.div(d));
    }
    let q = x2.scale(T::lit(4.0)).div(d);
    (TwoFloat::from_hi(T::one()).add(two_x2).sub(q), q)
}
