//! Relative-error maps against the reference oracle.

use std::io::{self, Write};

use num_complex::Complex64;
use rayon::prelude::*;
use voigt_core::{EvalOptions, Evaluator64};
use voigt_oracle::{ref_w, relative_error};

use crate::grid::GridSpec;
use crate::{fmt_shortest, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrRow {
    pub x: f64,
    pub y: f64,
    /// `None` where the reference component is zero.
    pub delta_re: Option<f64>,
    pub delta_im: Option<f64>,
}

/// Per-`y` maxima and means over the points where the error is defined.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrSummary {
    pub y: f64,
    pub e_re: f64,
    pub e_im: f64,
    pub mean_re: f64,
    pub mean_im: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrMap {
    /// `y`-major, `x` ascending within each `y`.
    pub rows: Vec<ErrRow>,
    pub summary: Vec<ErrSummary>,
}

fn max_mean(vals: impl Iterator<Item = f64>) -> (f64, f64) {
    let (mut max, mut sum, mut n) = (0.0f64, 0.0, 0usize);
    for v in vals {
        max = max.max(v);
        sum += v;
        n += 1;
    }
    if n == 0 {
        (f64::NAN, f64::NAN)
    } else {
        (max, sum / n as f64)
    }
}

fn summarize(y: f64, rows: &[ErrRow]) -> ErrSummary {
    let (e_re, mean_re) = max_mean(rows.iter().filter_map(|r| r.delta_re));
    let (e_im, mean_im) = max_mean(rows.iter().filter_map(|r| r.delta_im));
    ErrSummary { y, e_re, e_im, mean_re, mean_im }
}

/// Errors of the evaluator on the tensor grid `xs x ys`.
pub fn error_map(xs: &[f64], ys: &[f64], opts: &EvalOptions) -> Result<ErrMap> {
    let per_y: Vec<Vec<ErrRow>> = ys
        .iter()
        .map(|&y| {
            let ev = Evaluator64::new(y, opts)?;
            xs.par_iter()
                .map(|&x| {
                    let v = ev.eval(x)?;
                    let r: Complex64 = ref_w(x, y)?;
                    Ok(ErrRow {
                        x,
                        y,
                        delta_re: relative_error(v.k, r.re),
                        delta_im: relative_error(v.l, r.im),
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let summary = ys.iter().zip(&per_y).map(|(&y, rows)| summarize(y, rows)).collect();
    Ok(ErrMap { rows: per_y.into_iter().flatten().collect(), summary })
}

pub fn run_errmap(grid: &GridSpec, opts: &EvalOptions) -> Result<ErrMap> {
    grid.validate()?;
    error_map(&grid.x.nodes(), &grid.y.nodes(), opts)
}

impl ErrMap {
    /// Point table, a blank line, then the per-`y` summary. Undefined errors are `NaN`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        let f = |v: Option<f64>| fmt_shortest(v.unwrap_or(f64::NAN));
        writeln!(w, "x,y,delta_re,delta_im")?;
        for r in &self.rows {
            writeln!(w, "{},{},{},{}", fmt_shortest(r.x), fmt_shortest(r.y), f(r.delta_re), f(r.delta_im))?;
        }
        writeln!(w)?;
        writeln!(w, "y,e_re,e_im,mean_re,mean_im")?;
        for s in &self.summary {
            writeln!(
                w,
                "{},{},{},{},{}",
                fmt_shortest(s.y),
                fmt_shortest(s.e_re),
                fmt_shortest(s.e_im),
                fmt_shortest(s.mean_re),
                fmt_shortest(s.mean_im)
            )?;
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("ascii")
    }
}
