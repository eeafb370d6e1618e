//! Throughput measurement on either side of the switch radius.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use voigt_core::{eval_w_batch, EvalOptions, VoigtValue64};

use crate::{fmt_shortest, CliError, Result};

/// Radius separating the two benchmark populations.
pub const SPLIT_RADIUS: f64 = 22.0;
/// Outer radius of the external population.
pub const OUTER_RADIUS: f64 = 4000.0;
/// Smallest `x` drawn for the internal population.
pub const INNER_X_MIN: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    /// `|z| < 22`.
    Internal,
    /// `22 <= |z| <= 4000`.
    External,
}

impl Domain {
    pub fn contains(self, x: f64, y: f64) -> bool {
        let r = x.hypot(y);
        match self {
            Domain::Internal => r < SPLIT_RADIUS,
            Domain::External => (SPLIT_RADIUS..=OUTER_RADIUS).contains(&r),
        }
    }

    /// `x` interval matching the domain at this `y`.
    fn x_range(self, y: f64) -> (f64, f64) {
        let at = |r: f64| (r * r - y * y).sqrt();
        match self {
            Domain::Internal => (INNER_X_MIN, at(SPLIT_RADIUS)),
            Domain::External => (at(SPLIT_RADIUS), at(OUTER_RADIUS)),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Domain::Internal => "internal",
            Domain::External => "external",
        })
    }
}

impl FromStr for Domain {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "internal" => Ok(Domain::Internal),
            "external" => Ok(Domain::External),
            _ => Err(format!("unknown domain {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub count: usize,
    pub y_values: Vec<f64>,
    pub domains: Vec<Domain>,
    pub seed: u64,
    pub opts: EvalOptions,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            count: 1_000_000,
            y_values: vec![1e-8],
            domains: vec![Domain::Internal, Domain::External],
            seed: 0,
            opts: EvalOptions::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub y: f64,
    pub domain: Domain,
    pub xs: Vec<f64>,
    pub values: Vec<VoigtValue64>,
    pub seconds: f64,
}

impl BenchRecord {
    pub fn count(&self) -> usize {
        self.xs.len()
    }

    pub fn points_per_second(&self) -> f64 {
        self.count() as f64 / self.seconds
    }

    pub fn all_finite(&self) -> bool {
        self.values.iter().all(|v| v.k.is_finite() && v.l.is_finite())
    }

    /// `bench,<y>,<domain>,<count>,<seconds>,<points per second>`.
    pub fn line(&self) -> String {
        format!(
            "bench,{},{},{},{:.6},{:.0}",
            fmt_shortest(self.y),
            self.domain,
            self.count(),
            self.seconds,
            self.points_per_second()
        )
    }

    /// `y,domain,x,k,l` per point, shortest round-trip decimals.
    pub fn write_points<W: Write>(&self, mut w: W) -> io::Result<()> {
        for (x, v) in self.xs.iter().zip(&self.values) {
            writeln!(w, "{},{},{},{},{}", fmt_shortest(self.y), self.domain, fmt_shortest(*x), fmt_shortest(v.k), fmt_shortest(v.l))?;
        }
        Ok(())
    }
}

/// `count` log-uniform `x` in the domain at `y`; the stream is fixed by `(seed, stream)`.
pub fn sample_points(y: f64, domain: Domain, count: usize, seed: u64, stream: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let (lo, hi) = domain.x_range(y);
    let (la, lb) = (lo.ln(), hi.ln());
    let mut xs = Vec::with_capacity(count);
    while xs.len() < count {
        let x = rng.gen_range(la..lb).exp();
        if domain.contains(x, y) {
            xs.push(x);
        }
    }
    xs
}

pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRecord>> {
    if cfg.count == 0 {
        return Err(CliError::Domain("count must be at least 1".into()));
    }
    let mut out = Vec::new();
    for (i, &y) in cfg.y_values.iter().enumerate() {
        if !(y.is_finite() && (0.0..=0.1).contains(&y)) {
            return Err(CliError::Domain(format!("y = {y} leaves the supported domain 0 <= y <= 0.1")));
        }
        for &domain in &cfg.domains {
            let stream = 2 * i as u64 + u64::from(domain == Domain::External);
            let xs = sample_points(y, domain, cfg.count, cfg.seed, stream);
            let start = Instant::now();
            let values = eval_w_batch(&xs, y, &cfg.opts)?;
            let seconds = start.elapsed().as_secs_f64();
            out.push(BenchRecord { y, domain, xs, values, seconds });
        }
    }
    Ok(out)
}
