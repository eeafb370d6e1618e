//! `w(z)` from convergent and asymptotic series in multiple precision.
//!
//! ```text
//! w(z) = e^(-z^2) + (2i/sqrt(pi)) F(z),    F(z) = sum (-1)^n 2^n z^(2n+1) / (2n+1)!!
//! w(z) ~ e^(-z^2) + (i/(sqrt(pi) z)) sum (2n-1)!! / (2z^2)^n
//! ```
//!
//! The Maclaurin sum of `F` cancels by about `2|z|^2/ln 2` bits, so the
//! working precision grows with `|z|^2`. The asymptotic sum is cut at its
//! smallest term, which for `|z| >= ASYMPTOTIC_RADIUS` is below `2^-140`
//! relative. Near the real axis its error is further damped by `e^(-x^2)`.

use astro_float::BigFloat;

use crate::mp::{cos, exp, float, int, sin, sqrt_pi, Cx, RM};
use crate::OracleError;

/// Radius beyond which the asymptotic sum is used near the real axis.
pub(crate) const ASYMPTOTIC_RADIUS: f64 = 10.0;

/// Relative size of the smallest asymptotic term that is accepted.
const ASYMPTOTIC_GUARD_BITS: i32 = 120;

fn round_up(bits: f64) -> usize {
    let b = bits.ceil() as usize;
    b.div_ceil(64) * 64
}

/// Working precision for the Maclaurin sum at `z = x + iy`.
pub(crate) fn maclaurin_precision(x: f64, y: f64) -> usize {
    let r2 = x * x + y * y;
    round_up(192.0 + 2.0 * std::f64::consts::LOG2_E * r2 + std::f64::consts::LOG2_E * x * x)
}

/// `e^(-z^2) = e^(y^2 - x^2) (cos 2xy - i sin 2xy)`.
pub(crate) fn exp_minus_z2(x: f64, y: f64, p: usize) -> Cx {
    let bx = float(x, p);
    let by = float(y, p);
    let modulus = exp(&by.mul(&by, p, RM).sub(&bx.mul(&bx, p, RM), p, RM), p);
    let phase = bx.mul(&by, p, RM).mul(&int(2, p), p, RM);
    Cx::new(modulus.mul(&cos(&phase, p), p, RM), modulus.mul(&sin(&phase, p), p, RM).neg())
}

/// Maclaurin sum for the complex Dawson function `F(z)`.
pub(crate) fn dawson_maclaurin(x: f64, y: f64, p: usize) -> Cx {
    let z = Cx::from_f64(x, y, p);
    let Some(z_mag) = z.mag() else {
        return z;
    };
    let m2z2 = z.mul(&z, p).scale(&int(2, p).neg(), p);
    let r2 = x * x + y * y;
    let mut t = z.clone();
    let mut s = z;
    let mut peak = z_mag;
    for n in 0u64.. {
        t = t.mul(&m2z2, p).div_real(&int(2 * n + 3, p), p);
        s = s.add(&t, p);
        let Some(e) = t.mag() else { break };
        peak = peak.max(e);
        if (n as f64) > r2 && e < peak - p as i32 {
            break;
        }
    }
    s
}

/// Sum `sum (2n-1)!!/(2z^2)^n`, cut before its terms start growing.
pub(crate) fn asymptotic_sum(x: f64, y: f64, p: usize) -> Result<Cx, OracleError> {
    let z = Cx::from_f64(x, y, p);
    let inv = z.mul(&z, p).scale(&int(2, p), p).recip(p);
    let one = Cx::new(int(1, p), int(0, p));
    let mut a = one.clone();
    let mut last = one.mag().expect("nonzero");
    let mut s = one;
    for n in 0u64.. {
        let next = a.mul(&inv, p).scale(&int(2 * n + 1, p), p);
        let e = next.mag().unwrap_or(i32::MIN);
        if e >= last {
            break;
        }
        s = s.add(&next, p);
        a = next;
        last = e;
        if e < -(p as i32) {
            break;
        }
    }
    if last > -ASYMPTOTIC_GUARD_BITS {
        return Err(OracleError::NoConvergence { x, y });
    }
    Ok(s)
}

/// Series used for a reference value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Asymptotic for `|z| >= 10` near the real axis, Maclaurin otherwise.
    Auto,
    Maclaurin,
    Asymptotic,
}

/// `w(z)` for `x >= 0`, `y >= 0`.
pub(crate) fn w_mp(x: f64, y: f64, method: Method) -> Result<Cx, OracleError> {
    let asymptotic = match method {
        Method::Auto => x.hypot(y) >= ASYMPTOTIC_RADIUS && y <= 1.0,
        Method::Maclaurin => false,
        Method::Asymptotic => true,
    };
    if asymptotic {
        let p = 256;
        let s = asymptotic_sum(x, y, p)?;
        let z = Cx::from_f64(x, y, p);
        let g = s.mul(&z.recip(p), p).mul_i().div_real(&sqrt_pi(p), p);
        return Ok(exp_minus_z2(x, y, p).add(&g, p));
    }
    let p = maclaurin_precision(x, y);
    let f = dawson_maclaurin(x, y, p);
    let two_over_sqrt_pi = int(2, p).div(&sqrt_pi(p), p, RM);
    let g = f.mul_i().scale(&two_over_sqrt_pi, p);
    Ok(exp_minus_z2(x, y, p).add(&g, p))
}

/// Dawson's integral `D(x)` for `x >= 0`.
pub(crate) fn dawson_mp(x: f64) -> Result<BigFloat, OracleError> {
    if x >= ASYMPTOTIC_RADIUS {
        let p = 256;
        let s = asymptotic_sum(x, 0.0, p)?;
        return Ok(s.re.div(&float(2.0 * x, p), p, RM));
    }
    let p = maclaurin_precision(x, 0.0);
    Ok(dawson_maclaurin(x, 0.0, p).re)
}
