use std::fmt::Debug;

use num_traits::{Float, FloatConst, FromPrimitive, NumCast};

/// Scalar type the evaluators are generic over.
///
/// Implemented for `f32` and `f64`. The published parameter tables target
/// IEEE double precision; `f32` simply gets more terms than it needs.
pub trait Real: Float + FloatConst + FromPrimitive + NumCast + Debug + Send + Sync + 'static {
    /// Lossy conversion from an `f64` literal or table entry.
    #[inline]
    fn lit(v: f64) -> Self {
        <Self as NumCast>::from(v).expect("f64 literal fits the scalar type")
    }

    /// `1/sqrt(pi)`, formed as an exact halving of `2/sqrt(pi)`.
    #[inline]
    fn frac_1_sqrt_pi() -> Self {
        Self::FRAC_2_SQRT_PI() / (Self::one() + Self::one())
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// `exp(-x^2)`, with the rounding error of `x^2` carried into the result.
///
/// `exp(-x*x)` alone is off by up to `x^2` ulps, since the exponential
/// magnifies the error of its argument.
#[inline]
pub fn gaussian<T: Real>(x: T) -> T {
    let x2 = TwoFloat::product(x, x);
    let e = (-x2.hi).exp();
    e.mul_add(-x2.lo, e)
}

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct TwoFloat<T> {
    pub hi: T,
    pub lo: T,
}

impl<T: Real> TwoFloat<T> {
    #[inline]
    pub fn from_hi(hi: T) -> Self {
        Self { hi, lo: T::zero() }
    }

    /// Exact product of two scalars.
    #[inline]
    pub fn product(a: T, b: T) -> Self {
        let hi = a * b;
        let lo = a.mul_add(b, -hi);
        Self { hi, lo }
    }

    #[inline]
    fn two_sum(a: T, b: T) -> Self {
        let s = a + b;
        let bb = s - a;
        let lo = (a - (s - bb)) + (b - bb);
        Self { hi: s, lo }
    }

    #[inline]
    fn renorm(hi: T, lo: T) -> Self {
        let s = hi + lo;
        Self { hi: s, lo: lo - (s - hi) }
    }

    #[inline]
    pub fn add(self, other: Self) -> Self {
        let s = Self::two_sum(self.hi, other.hi);
        Self::renorm(s.hi, s.lo + self.lo + other.lo)
    }

    #[inline]
    pub fn sub(self, other: Self) -> Self {
        self.add(Self { hi: -other.hi, lo: -other.lo })
    }

    #[inline]
    pub fn scale(self, k: T) -> Self {
        let p = Self::product(self.hi, k);
        Self::renorm(p.hi, self.lo.mul_add(k, p.lo))
    }

    #[inline]
    pub fn div(self, other: Self) -> Self {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.scale(q1));
        let q2 = r.hi / other.hi;
        Self::renorm(q1, q2)
    }
}
