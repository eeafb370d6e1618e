//! Rectangular evaluation grids.

use std::fmt;
use std::str::FromStr;

use crate::{CliError, Result};

/// Node spacing along one axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Scale {
    Linear,
    Log,
    /// Half the nodes evenly on `[min, knee)`, the rest log-spaced on `[knee, max]`.
    Mixed { knee: f64 },
}

impl fmt::Display for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scale::Linear => f.write_str("linear"),
            Scale::Log => f.write_str("log"),
            Scale::Mixed { knee } => write!(f, "mixed:{knee}"),
        }
    }
}

impl FromStr for Scale {
    type Err = String;

    /// `linear`, `log`, or `mixed:<knee>`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "linear" => Ok(Scale::Linear),
            "log" => Ok(Scale::Log),
            _ => match s.strip_prefix("mixed:") {
                Some(k) => k
                    .parse::<f64>()
                    .map(|knee| Scale::Mixed { knee })
                    .map_err(|e| format!("bad knee {k:?}: {e}")),
                None => Err(format!("unknown scale {s:?} (linear, log, mixed:<knee>)")),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub min: f64,
    pub max: f64,
    pub count: usize,
    pub scale: Scale,
}

impl Axis {
    pub fn new(min: f64, max: f64, count: usize, scale: Scale) -> Self {
        Self { min, max, count, scale }
    }

    pub fn validate(&self, name: &str) -> Result<()> {
        let bad = |msg: String| Err(CliError::Domain(format!("{name} axis: {msg}")));
        if self.count == 0 {
            return bad("count must be at least 1".into());
        }
        if !(self.min.is_finite() && self.max.is_finite()) {
            return bad("bounds must be finite".into());
        }
        if self.min > self.max {
            return bad(format!("min {} exceeds max {}", self.min, self.max));
        }
        match self.scale {
            Scale::Linear => Ok(()),
            Scale::Log if self.min > 0.0 => Ok(()),
            Scale::Log => bad("log scale needs a positive min".into()),
            Scale::Mixed { knee } => {
                if !(knee > 0.0 && self.min < knee && knee < self.max) {
                    bad(format!("knee {knee} must be positive and inside ({}, {})", self.min, self.max))
                } else if self.count < 2 {
                    bad("mixed scale needs at least 2 nodes".into())
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Node positions, ascending, with both ends hit exactly.
    pub fn nodes(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.min];
        }
        match self.scale {
            Scale::Linear => spaced(self.min, self.max, self.count, false),
            Scale::Log => spaced(self.min, self.max, self.count, true),
            Scale::Mixed { knee } => {
                let n_lin = self.count / 2;
                let mut v: Vec<f64> =
                    (0..n_lin).map(|i| self.min + (knee - self.min) * i as f64 / n_lin as f64).collect();
                v.extend(spaced(knee, self.max, self.count - n_lin, true));
                v
            }
        }
    }
}

fn spaced(a: f64, b: f64, n: usize, log: bool) -> Vec<f64> {
    if n == 1 {
        return vec![a];
    }
    let (la, lb) = if log { (a.ln(), b.ln()) } else { (a, b) };
    (0..n)
        .map(|i| {
            if i == 0 {
                a
            } else if i == n - 1 {
                b
            } else {
                let t = la + (lb - la) * i as f64 / (n - 1) as f64;
                if log {
                    t.exp()
                } else {
                    t
                }
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x: Axis,
    pub y: Axis,
}

impl GridSpec {
    /// Both axes well formed and every `y` inside `[0, 0.1]`.
    pub fn validate(&self) -> Result<()> {
        self.x.validate("x")?;
        self.y.validate("y")?;
        if self.y.min < 0.0 || self.y.max > 0.1 {
            return Err(CliError::Domain(format!(
                "y range [{}, {}] leaves the supported domain 0 <= y <= 0.1",
                self.y.min, self.y.max
            )));
        }
        Ok(())
    }
}
