//! Single-point evaluation.

use std::fmt;

use num_complex::Complex64;
use voigt_core::{eval_w, AccuracyLevel, EvalOptions, VoigtValue64};
use voigt_oracle::{ref_w, relative_error};

use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalReport {
    pub x: f64,
    pub y: f64,
    pub value: VoigtValue64,
    /// Reference value and componentwise errors, when requested.
    /// An error is `None` where the reference component is zero.
    pub check: Option<Check>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Check {
    pub reference: Complex64,
    pub delta_re: Option<f64>,
    pub delta_im: Option<f64>,
}

pub fn run_eval(x: f64, y: f64, accuracy: AccuracyLevel, check: bool) -> Result<EvalReport> {
    let value = eval_w(x, y, &EvalOptions::with_accuracy(accuracy))?;
    let check = if check {
        let reference = ref_w(x, y)?;
        Some(Check {
            reference,
            delta_re: relative_error(value.k, reference.re),
            delta_im: relative_error(value.l, reference.im),
        })
    } else {
        None
    };
    Ok(EvalReport { x, y, value, check })
}

fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "undefined".to_string(), |d| format!("{d:.3e}"))
}

impl fmt::Display for EvalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "K = {:.16e}", self.value.k)?;
        writeln!(f, "L = {:.16e}", self.value.l)?;
        if let Some(c) = &self.check {
            writeln!(f, "K_ref = {:.16e}", c.reference.re)?;
            writeln!(f, "L_ref = {:.16e}", c.reference.im)?;
            writeln!(f, "delta_re = {}", opt(c.delta_re))?;
            writeln!(f, "delta_im = {}", opt(c.delta_im))?;
        }
        Ok(())
    }
}
