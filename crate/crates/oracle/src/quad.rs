//! `w(z)` from its integral representation, for moderate `x`:
//!
//! ```text
//! K + iL = (1/sqrt(pi)) int_0^inf exp(-t^2/4 - y t) (cos xt + i sin xt) dt
//! ```
//!
//! The half line is cut at `T`, where the Gaussian is below `2^-280`, and
//! `[0, T]` is split into equal panels, each integrated with an `n`-point
//! Gauss-Legendre rule. The integrand is entire, so the rule converges
//! geometrically in `n`; two configurations with different panelizations
//! check each other.

use std::cell::RefCell;
use std::collections::HashMap;

use astro_float::BigFloat;
use num_complex::Complex64;

use crate::mp::{cos, exp, float, int, sin, sqrt_pi, to_f64, Cx, RM};
use crate::OracleError;

const CUTOFF: f64 = 28.0;
/// Largest `x` accepted. The integrand cancels to `e^(-x^2)` here.
pub const QUADRATURE_X_MAX: f64 = 8.0;

/// Panel count and Gauss-Legendre order of a quadrature configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadConfig {
    pub panels: usize,
    pub order: usize,
}

impl QuadConfig {
    pub const COARSE: QuadConfig = QuadConfig { panels: 7, order: 48 };
    pub const FINE: QuadConfig = QuadConfig { panels: 14, order: 48 };

    pub fn nodes(&self) -> usize {
        self.panels * self.order
    }
}

type Rule = Vec<(BigFloat, BigFloat)>;

thread_local! {
    static RULES: RefCell<HashMap<(usize, usize), std::rc::Rc<Rule>>> = RefCell::new(HashMap::new());
}

/// `(P_n(t), P_(n-1)(t))` by the three-term recurrence.
fn legendre(n: usize, t: &BigFloat, p: usize) -> (BigFloat, BigFloat) {
    let mut prev = int(1, p);
    let mut cur = t.clone();
    for k in 1..n {
        let kk = k as u64;
        let a = t.mul(&cur, p, RM).mul(&int(2 * kk + 1, p), p, RM);
        let b = prev.mul(&int(kk, p), p, RM);
        let next = a.sub(&b, p, RM).div(&int(kk + 1, p), p, RM);
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

/// Nodes and weights of the `n`-point rule on `[0, 1]`.
fn unit_rule(n: usize, p: usize) -> std::rc::Rc<Rule> {
    if let Some(r) = RULES.with(|c| c.borrow().get(&(n, p)).cloned()) {
        return r;
    }
    let one = int(1, p);
    let two = int(2, p);
    let nn = int(n as u64, p);
    let mut rule = Vec::with_capacity(n);
    for i in 1..=n {
        let guess = (std::f64::consts::PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
        let mut t = float(guess, p);
        let mut dp = int(0, p);
        for _ in 0..64 {
            let (pn, pm) = legendre(n, &t, p);
            // P'_n = n (t P_n - P_(n-1)) / (t^2 - 1)
            let t2m1 = t.mul(&t, p, RM).sub(&one, p, RM);
            dp = nn.mul(&t.mul(&pn, p, RM).sub(&pm, p, RM), p, RM).div(&t2m1, p, RM);
            let step = pn.div(&dp, p, RM);
            t = t.sub(&step, p, RM);
            let small = match (step.exponent(), t.exponent()) {
                _ if step.is_zero() => true,
                (Some(es), Some(et)) => es < et - p as i32 + 4,
                _ => false,
            };
            if small {
                let (pn, pm) = legendre(n, &t, p);
                let t2m1 = t.mul(&t, p, RM).sub(&one, p, RM);
                dp = nn.mul(&t.mul(&pn, p, RM).sub(&pm, p, RM), p, RM).div(&t2m1, p, RM);
                break;
            }
        }
        // weight on [-1, 1] is 2/((1 - t^2) P'_n^2); map to [0, 1].
        let omt2 = one.sub(&t.mul(&t, p, RM), p, RM);
        let w = one.div(&omt2.mul(&dp.mul(&dp, p, RM), p, RM), p, RM);
        let node = one.add(&t, p, RM).div(&two, p, RM);
        rule.push((node, w));
    }
    let rule = std::rc::Rc::new(rule);
    RULES.with(|c| c.borrow_mut().insert((n, p), rule.clone()));
    rule
}

/// `w(x + iy)` by quadrature, for `0 <= x <= QUADRATURE_X_MAX`, `0 <= y <= 0.1`.
pub fn w_quadrature(x: f64, y: f64, cfg: QuadConfig) -> Result<Complex64, OracleError> {
    if !(x.is_finite() && y.is_finite()) {
        return Err(OracleError::NonFinite);
    }
    if !(0.0..=QUADRATURE_X_MAX).contains(&x) {
        return Err(OracleError::OutOfDomain { what: "x", value: x });
    }
    if !(0.0..=0.1).contains(&y) {
        return Err(OracleError::OutOfDomain { what: "y", value: y });
    }
    let p = ((160.0 + 1.5 * x * x) / 64.0).ceil() as usize * 64;
    let rule = unit_rule(cfg.order, p);
    let bx = float(x, p);
    let by = float(y, p);
    let quarter = int(1, p).div(&int(4, p), p, RM);
    let width = float(CUTOFF, p).div(&int(cfg.panels as u64, p), p, RM);
    let mut acc = Cx::new(int(0, p), int(0, p));
    for panel in 0..cfg.panels {
        let a = width.mul(&int(panel as u64, p), p, RM);
        for (node, weight) in rule.iter() {
            let t = a.add(&width.mul(node, p, RM), p, RM);
            let damp = t.mul(&t, p, RM).mul(&quarter, p, RM).add(&by.mul(&t, p, RM), p, RM);
            let amp = exp(&damp.neg(), p).mul(weight, p, RM);
            let phase = bx.mul(&t, p, RM);
            let term = Cx::new(cos(&phase, p), sin(&phase, p)).scale(&amp, p);
            acc = acc.add(&term, p);
        }
    }
    let norm = width.div(&sqrt_pi(p), p, RM);
    let w = acc.scale(&norm, p);
    Ok(Complex64::new(to_f64(&w.re), to_f64(&w.im)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_rule_integrates_polynomials() {
        let p = 192;
        let rule = unit_rule(8, p);
        // int_0^1 t^k dt = 1/(k+1) for k < 16.
        for k in [0usize, 1, 7, 15] {
            let mut s = int(0, p);
            for (t, w) in rule.iter() {
                s = s.add(&t.powi(k, p, RM).mul(w, p, RM), p, RM);
            }
            assert_eq!(to_f64(&s), 1.0 / (k as f64 + 1.0), "k = {k}");
        }
    }
}
