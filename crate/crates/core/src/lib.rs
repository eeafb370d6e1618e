//! The Faddeeva function `w(z) = K(x, y) + i L(x, y)` for `0 <= y <= 0.1`.
//!
//! Inside a `y`-dependent radius the value comes from a Taylor expansion in
//! `y` around the real axis, whose coefficients are generated exactly from
//! integer tables. Outside it a truncated Laplace continued fraction is used.
//!
//! ```
//! use voigt_core::{eval_w, EvalOptions};
//!
//! let v = eval_w(1.0f64, 0.05, &EvalOptions::default()).unwrap();
//! assert!((v.k - 0.371_305_291_671_537).abs() < 1e-15);
//! ```

pub mod coeffs;
pub mod dawson;
pub mod error;
pub mod laplace;
mod real;
pub mod scheme;
pub mod taylor;

pub use coeffs::{CoeffTables, FoldTable};
pub use dawson::dawson_cf;
pub use error::{Result, VoigtError};
pub use laplace::{laplace_rel_error, laplace_w, ComplexArg};
pub use real::{gaussian, Real};
pub use scheme::{
    boundary_z_c, eval_w, eval_w_batch, select_params, AccuracyLevel, BoundaryModel, BoundaryRule,
    EvalOptions, Evaluator,
};
pub use taylor::{build_y_coefficients, eval_k, eval_l, eval_w_internal, SeriesParams, VoigtValue, YCoefficientSet};

pub type VoigtValue64 = VoigtValue<f64>;
pub type VoigtValue32 = VoigtValue<f32>;
pub type ComplexArg64 = ComplexArg<f64>;
pub type ComplexArg32 = ComplexArg<f32>;
pub type YCoefficientSet64 = YCoefficientSet<f64>;
pub type YCoefficientSet32 = YCoefficientSet<f32>;
pub type Evaluator64 = Evaluator<f64>;
pub type Evaluator32 = Evaluator<f32>;
