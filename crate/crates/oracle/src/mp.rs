//! Thin complex layer over `astro_float`, plus rounding to `f64`.

use std::cell::RefCell;

use astro_float::{BigFloat, Consts, RoundingMode, Sign};

pub(crate) const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
}

pub(crate) fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

pub(crate) fn int(v: u64, p: usize) -> BigFloat {
    BigFloat::from_u64(v, p)
}

/// Exact conversion of a double. Subnormals are scaled into the normal range
/// first: `BigFloat::from_f64` places their exponent one too low.
pub(crate) fn float(v: f64, p: usize) -> BigFloat {
    if v.is_subnormal() {
        let scale = BigFloat::from_u64(1 << 60, p);
        BigFloat::from_f64(v * 2f64.powi(60), p).div(&scale, p, RM)
    } else {
        BigFloat::from_f64(v, p)
    }
}

pub(crate) fn exp(v: &BigFloat, p: usize) -> BigFloat {
    with_consts(|cc| v.exp(p, RM, cc))
}

pub(crate) fn cos(v: &BigFloat, p: usize) -> BigFloat {
    with_consts(|cc| v.cos(p, RM, cc))
}

pub(crate) fn sin(v: &BigFloat, p: usize) -> BigFloat {
    with_consts(|cc| v.sin(p, RM, cc))
}

pub(crate) fn pi(p: usize) -> BigFloat {
    with_consts(|cc| cc.pi(p, RM))
}

pub(crate) fn sqrt_pi(p: usize) -> BigFloat {
    pi(p).sqrt(p, RM)
}

/// Binary exponent of `v`, or `None` for zero.
pub(crate) fn mag(v: &BigFloat) -> Option<i32> {
    if v.is_zero() {
        None
    } else {
        v.exponent()
    }
}

/// `v * 2^k` without spurious overflow or underflow in the scale factor.
fn ldexp(mut v: f64, mut k: i64) -> f64 {
    let step = 960;
    while k > step {
        v *= 2f64.powi(step as i32);
        k -= step;
    }
    while k < -step {
        v *= 2f64.powi(-step as i32);
        k += step;
    }
    v * 2f64.powi(k as i32)
}

/// Round to the nearest `f64`.
///
/// The top 128 mantissa bits, with a sticky bit for the rest, are rounded by
/// the integer conversion; only results in the subnormal range can be rounded
/// a second time.
pub(crate) fn to_f64(v: &BigFloat) -> f64 {
    if v.is_nan() {
        return f64::NAN;
    }
    if v.is_inf_pos() {
        return f64::INFINITY;
    }
    if v.is_inf_neg() {
        return f64::NEG_INFINITY;
    }
    if v.is_zero() {
        return 0.0;
    }
    let (m, _, sign, e, _) = v.as_raw_parts().expect("finite value");
    let len = m.len();
    let hi = m[len - 1] as u128;
    let lo = if len >= 2 { m[len - 2] as u128 } else { 0 };
    let mut top = (hi << 64) | lo;
    if len > 2 && m[..len - 2].iter().any(|&w| w != 0) {
        top |= 1;
    }
    let r = ldexp(top as f64, e as i64 - 128);
    if sign == Sign::Neg {
        -r
    } else {
        r
    }
}

/// Complex number with `BigFloat` parts.
#[derive(Debug, Clone)]
pub(crate) struct Cx {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl Cx {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        Self { re, im }
    }

    pub fn from_f64(re: f64, im: f64, p: usize) -> Self {
        Self::new(float(re, p), float(im, p))
    }

    pub fn add(&self, o: &Cx, p: usize) -> Cx {
        Cx::new(self.re.add(&o.re, p, RM), self.im.add(&o.im, p, RM))
    }

    pub fn mul(&self, o: &Cx, p: usize) -> Cx {
        let re = self.re.mul(&o.re, p, RM).sub(&self.im.mul(&o.im, p, RM), p, RM);
        let im = self.re.mul(&o.im, p, RM).add(&self.im.mul(&o.re, p, RM), p, RM);
        Cx::new(re, im)
    }

    pub fn scale(&self, k: &BigFloat, p: usize) -> Cx {
        Cx::new(self.re.mul(k, p, RM), self.im.mul(k, p, RM))
    }

    pub fn div_real(&self, k: &BigFloat, p: usize) -> Cx {
        Cx::new(self.re.div(k, p, RM), self.im.div(k, p, RM))
    }

    /// `i * self`.
    pub fn mul_i(&self) -> Cx {
        Cx::new(self.im.neg(), self.re.clone())
    }

    pub fn recip(&self, p: usize) -> Cx {
        let n = self.re.mul(&self.re, p, RM).add(&self.im.mul(&self.im, p, RM), p, RM);
        Cx::new(self.re.div(&n, p, RM), self.im.neg().div(&n, p, RM))
    }

    /// Largest binary exponent of the two parts, `None` for zero.
    pub fn mag(&self) -> Option<i32> {
        match (mag(&self.re), mag(&self.im)) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        }
    }
}
