//! Taylor expansion in `y` about the real axis.
//!
//! With `F = F(x, N_D)` and `c = 1/sqrt(pi)`:
//!
//! ```text
//! L = c F sum(alpha_n x^2n) + x e^(-x^2) sum(beta_n x^2n) + c x sum(gamma_n x^2n)
//! K = c (F/x) sum(alpha'_n x^2n) + e^(-x^2) sum(beta'_n x^2n) + c sum(gamma'_n x^2n)
//! ```
//!
//! Both are summed in equivalent forms, with `G = 1 - 2xF`:
//!
//! ```text
//! L = c F alpha_0 + c x (sum(eta_n x^2n) - (G/2) sum(alpha_(n+1) x^2n)) + x e^(-x^2) sum(beta_n x^2n)
//! K = c (F/x) alpha'_0 + c sum(delta_n x^2n) - (c/2) G sum(alpha'_(n+1) x^2n) + e^(-x^2) sum(beta'_n x^2n)
//! ```
//!
//! where `eta_n = alpha_(n+1)/2 + gamma_n` and `delta_n = alpha'_(n+1)/2 + gamma'_n`.
//! For large `x` the `alpha` and `gamma` sums nearly cancel, since `2xF -> 1`;
//! the cancelling parts are combined exactly in the coefficient tables instead.

use crate::coeffs::FoldTable;
use crate::dawson::dawson_cf_with_complement;
use crate::error::{Result, VoigtError};
use crate::real::{gaussian, Real};

/// Truncation triple: Taylor order, Dawson depth, Laplace depth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeriesParams {
    pub n: usize,
    pub n_d: usize,
    pub n_c: usize,
}

impl SeriesParams {
    pub const fn new(n: usize, n_d: usize, n_c: usize) -> Self {
        Self { n, n_d, n_c }
    }

    pub fn validate(&self, m_max: usize) -> Result<()> {
        if self.n > m_max {
            return Err(VoigtError::TruncationTooLarge { n: self.n, m_max });
        }
        if self.n_d == 0 || self.n_c == 0 {
            return Err(VoigtError::ZeroDepth);
        }
        Ok(())
    }
}

/// Coefficients of the three even polynomials in `x`, folded for one `y`.
#[derive(Debug, Clone, PartialEq)]
pub struct YCoefficientSet<T> {
    pub y: T,
    pub alpha: Vec<T>,
    pub beta: Vec<T>,
    pub gamma: Vec<T>,
    pub alpha_p: Vec<T>,
    pub beta_p: Vec<T>,
    pub gamma_p: Vec<T>,
    pub delta: Vec<T>,
    pub eta: Vec<T>,
}

/// `K(x, y)` and `L(x, y)`, the real and imaginary parts of `w`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VoigtValue<T> {
    pub k: T,
    pub l: T,
}

/// `sum c_i t^i` by Horner's rule, smallest terms first.
#[inline]
fn horner<T: Real>(c: &[T], t: T) -> T {
    c.iter().rev().fold(T::zero(), |s, &v| s * t + v)
}

fn horner_f64<T: Real>(c: impl DoubleEndedIterator<Item = f64>, t: T) -> T {
    c.rev().fold(T::zero(), |s, v| s * t + T::lit(v))
}

fn check_y<T: Real>(y: T) -> Result<()> {
    if !y.is_finite() {
        return Err(VoigtError::NonFinite("y"));
    }
    if y < T::zero() || y > T::lit(0.1) {
        return Err(VoigtError::YOutOfRange(y.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(())
}

/// Fold the coefficient tables with powers of `y` for truncation order `params.n`.
pub fn build_y_coefficients<T: Real>(
    y: T,
    params: SeriesParams,
    tables: &FoldTable,
) -> Result<YCoefficientSet<T>> {
    check_y(y)?;
    params.validate(tables.m_max)?;
    let nn = params.n;
    let t = y * y;
    let pw = |e: usize| y.powi(e as i32);

    let alpha = (0..=nn)
        .map(|n| pw(2 * n) * horner_f64((n..=nn).map(|m| tables.a[m][n]), t))
        .collect();
    let beta = (0..=nn)
        .map(|n| pw(2 * n + 1) * horner_f64((n..=nn).map(|m| tables.b[m][n]), t))
        .collect();
    let gamma = (0..nn)
        .map(|n| pw(2 * n + 2) * horner_f64((n + 1..=nn).map(|m| tables.c[m][n]), t))
        .collect();

    let alpha_p = (0..=nn)
        .map(|n| {
            let upper = (n..nn).map(|j| tables.g[j][n]).chain([tables.a[nn][n]]);
            let tail = pw(2 * n + 1) * horner_f64(upper, t);
            if n == 0 {
                tail
            } else {
                T::lit(tables.alpha_p_low[n]) * pw(2 * n - 1) + tail
            }
        })
        .collect();
    let beta_p = (0..=nn)
        .map(|n| {
            let c = [tables.beta_p_low[n]]
                .into_iter()
                .chain((n + 1..=nn).map(|j| tables.hh[j][n]))
                .chain([tables.b[nn][n]]);
            pw(2 * n) * horner_f64(c, t)
        })
        .collect();
    let gamma_p = (0..nn)
        .map(|n| {
            let c = [tables.gamma_p_low[n]]
                .into_iter()
                .chain((n + 1..nn).map(|j| tables.jj[j][n]))
                .chain([tables.c[nn][n]]);
            pw(2 * n + 1) * horner_f64(c, t)
        })
        .collect();

    let delta = (0..nn)
        .map(|n| {
            let c = [tables.delta_low[n]]
                .into_iter()
                .chain((n + 1..nn).map(|j| tables.dd[j][n]))
                .chain([tables.ac[nn][n]]);
            pw(2 * n + 1) * horner_f64(c, t)
        })
        .collect();

    let eta = (0..nn)
        .map(|n| pw(2 * n + 2) * horner_f64((n + 1..=nn).map(|m| tables.ac[m][n]), t))
        .collect();

    Ok(YCoefficientSet { y, alpha, beta, gamma, alpha_p, beta_p, gamma_p, delta, eta })
}

#[inline]
fn eval_l_parts<T: Real>(x: T, x2: T, f: T, g: T, e: T, cs: &YCoefficientSet<T>) -> T {
    let c = T::frac_1_sqrt_pi();
    let half = T::lit(0.5);
    c * f * cs.alpha[0] + c * x * (horner(&cs.eta, x2) - half * g * horner(&cs.alpha[1..], x2))
        + x * e * horner(&cs.beta, x2)
}

#[inline]
fn eval_k_parts<T: Real>(x: T, x2: T, f: T, g: T, e: T, cs: &YCoefficientSet<T>) -> T {
    let c = T::frac_1_sqrt_pi();
    if x == T::zero() {
        let gp0 = cs.gamma_p.first().copied().unwrap_or_else(T::zero);
        return c * cs.alpha_p[0] + cs.beta_p[0] + c * gp0;
    }
    let half = T::lit(0.5);
    c * (f / x) * cs.alpha_p[0] + c * horner(&cs.delta, x2) - c * half * g * horner(&cs.alpha_p[1..], x2)
        + e * horner(&cs.beta_p, x2)
}

/// `L(x, y)` for `x >= 0` from folded coefficients.
pub fn eval_l<T: Real>(x: T, coeffs: &YCoefficientSet<T>, params: SeriesParams) -> T {
    let (f, g) = dawson_cf_with_complement(x, params.n_d.max(1));
    eval_l_parts(x, x * x, f, g, gaussian(x), coeffs)
}

/// `K(x, y)` for `x >= 0` from folded coefficients.
pub fn eval_k<T: Real>(x: T, coeffs: &YCoefficientSet<T>, params: SeriesParams) -> T {
    let (f, g) = dawson_cf_with_complement(x, params.n_d.max(1));
    eval_k_parts(x, x * x, f, g, gaussian(x), coeffs)
}

/// Both parts at `x >= 0`, sharing the Dawson and Gaussian factors.
#[inline]
pub fn eval_with_coefficients<T: Real>(
    x: T,
    coeffs: &YCoefficientSet<T>,
    params: SeriesParams,
) -> VoigtValue<T> {
    let x2 = x * x;
    let (f, g) = dawson_cf_with_complement(x, params.n_d.max(1));
    let e = gaussian(x);
    VoigtValue { k: eval_k_parts(x, x2, f, g, e, coeffs), l: eval_l_parts(x, x2, f, g, e, coeffs) }
}

/// Internal-domain evaluation at `x >= 0`, folding the coefficients for `y`.
pub fn eval_w_internal<T: Real>(
    x: T,
    y: T,
    params: SeriesParams,
    tables: &FoldTable,
) -> Result<VoigtValue<T>> {
    if !x.is_finite() {
        return Err(VoigtError::NonFinite("x"));
    }
    let coeffs = build_y_coefficients(y, params, tables)?;
    Ok(eval_with_coefficients(x, &coeffs, params))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize) -> SeriesParams {
        SeriesParams::new(n, 61, 6)
    }

    #[test]
    fn zero_y_collapses() {
        let cs = build_y_coefficients(0.0f64, params(4), FoldTable::global()).unwrap();
        assert_eq!(cs.alpha, vec![2.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(cs.beta_p, vec![1.0, 0.0, 0.0, 0.0, 0.0]);
        assert!(cs.beta.iter().chain(&cs.gamma).chain(&cs.alpha_p).chain(&cs.gamma_p).all(|&v| v == 0.0));
        assert_eq!(cs.alpha.len(), 5);
        assert_eq!(cs.beta.len(), 5);
        assert_eq!(cs.gamma.len(), 4);
    }

    #[test]
    fn alpha_zero_is_exponential() {
        let cs = build_y_coefficients(0.1f64, params(7), FoldTable::global()).unwrap();
        assert!((cs.alpha[0] - 2.0 * 0.01f64.exp()).abs() <= 4.0 * f64::EPSILON);
    }

    #[test]
    fn axis_values() {
        let p = params(7);
        let zero = build_y_coefficients(0.0f64, p, FoldTable::global()).unwrap();
        assert_eq!(eval_k(1.0, &zero, p), (-1.0f64).exp());
        assert_eq!(eval_k(0.0, &zero, p), 1.0);
        assert_eq!(eval_l(0.0, &zero, p), 0.0);
        let l1 = eval_l(1.0, &zero, p);
        assert!((l1 - 0.607_157_705_841_393_7).abs() <= 2.0 * f64::EPSILON);

        let y = build_y_coefficients(0.1f64, p, FoldTable::global()).unwrap();
        let k0 = eval_k(0.0, &y, p);
        assert!((k0 - 0.896_456_979_969_126_6).abs() <= 2e-16);
        assert_eq!(eval_l(0.0, &y, p), 0.0);
    }

    #[test]
    fn interior_point() {
        // w(1 + 0.05i), 40-digit reference.
        let v = eval_w_internal(1.0f64, 0.05, params(6), FoldTable::global()).unwrap();
        let (k, l) = (0.371_305_291_671_537, 0.571_642_529_690_967_8);
        assert!((v.k - k).abs() <= 1e-15 * k, "{}", v.k);
        assert!((v.l - l).abs() <= 1e-15 * l, "{}", v.l);
    }

    #[test]
    fn rearranged_k_matches_literal_sum() {
        // Where nothing cancels, both forms agree to rounding.
        for &(x, y, n) in &[(0.3f64, 0.1f64, 7usize), (1.0, 0.05, 6), (2.0, 0.01, 4), (1e-3, 0.1, 7)] {
            let p = params(n);
            let cs = build_y_coefficients(y, p, FoldTable::global()).unwrap();
            let c = std::f64::consts::FRAC_2_SQRT_PI / 2.0;
            let f = crate::dawson::dawson_cf(x, 61).unwrap();
            let literal = c * (f / x) * horner(&cs.alpha_p, x * x)
                + (-x * x).exp() * horner(&cs.beta_p, x * x)
                + c * horner(&cs.gamma_p, x * x);
            let k = eval_k(x, &cs, p);
            assert!((k - literal).abs() <= 8.0 * f64::EPSILON * k, "({x}, {y}): {k} vs {literal}");
        }
    }

    #[test]
    fn delta_has_no_linear_term() {
        let t = FoldTable::global();
        assert_eq!(t.delta_low[0], 0.0);
        let cs = build_y_coefficients(1e-100f64, params(1), t).unwrap();
        assert_eq!(cs.delta, vec![0.0]);
    }

    #[test]
    fn rejects_bad_arguments() {
        let t = FoldTable::global();
        assert!(matches!(build_y_coefficients(0.2f64, params(2), t), Err(VoigtError::YOutOfRange(_))));
        assert!(matches!(build_y_coefficients(-1e-300f64, params(2), t), Err(VoigtError::YOutOfRange(_))));
        assert_eq!(
            build_y_coefficients(0.01f64, params(17), t),
            Err(VoigtError::TruncationTooLarge { n: 17, m_max: 16 })
        );
        assert_eq!(
            build_y_coefficients(0.01f64, SeriesParams::new(2, 0, 6), t),
            Err(VoigtError::ZeroDepth)
        );
    }

    #[test]
    fn order_zero_has_no_gamma() {
        let cs = build_y_coefficients(0.01f64, params(0), FoldTable::global()).unwrap();
        assert!(cs.gamma.is_empty() && cs.gamma_p.is_empty());
        assert_eq!(cs.alpha_p, vec![0.02]);
    }
}
