//! Exact integer coefficient tables.
//!
//! `H_n(x)` for odd `n` contributes only odd powers, `P_m(x)` only even powers
//! and `Q_m(x)` only odd powers, so every row stores the non-zero coefficients
//! in ascending order of the power:
//!
//! * `h_rows[n][k]` multiplies `x^(2k+1)` in `H_n`,
//! * `p_rows[m][k]` multiplies `x^(2k)` in `P_m`,
//! * `q_rows[m][k]` multiplies `x^(2k+1)` in `Q_m` (`Q_0` is the empty row).
//!
//! Everything here is exact; floating point enters only in [`FoldTable`],
//! where each integer is divided by its factorial and rounded once.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Result, VoigtError};

/// Largest `m` generated by default: the largest truncation `N` in any
/// parameter table.
pub const DEFAULT_M_MAX: usize = 16;

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn double_factorial(n: usize) -> BigInt {
    (1..=n)
        .rev()
        .step_by(2)
        .fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

/// Coefficients `[h_{n,0}, ..., h_{n,(n-1)/2}]` of the physicists' Hermite
/// polynomial `H_n(x) = sum_k h_{n,k} x^(2k+1)` for odd `n`, from the
/// factorial closed form.
pub fn hermite_coeffs(n: i64) -> Result<Vec<BigInt>> {
    if n <= 0 || n % 2 == 0 {
        return Err(VoigtError::InvalidHermiteOrder(n));
    }
    let n = n as usize;
    let half = (n - 1) / 2;
    let n_fact = factorial(n);
    Ok((0..=half)
        .map(|k| {
            let den = factorial(half - k) * factorial(2 * k + 1);
            let (mag, rem) = (&n_fact * pow2(2 * k + 1)).div_rem(&den);
            debug_assert!(rem.is_zero());
            if (half - k) % 2 == 1 {
                -mag
            } else {
                mag
            }
        })
        .collect())
}

/// One step of `R_m = (8m - 6 - 4x^2) R_{m-1} - 8(m-1)(2m-3) R_{m-2}` on
/// coefficient vectors in `x^2` steps; `len` is the length of the new row.
fn recurrence_step(m: usize, prev: &[BigInt], prev2: &[BigInt], len: usize) -> Vec<BigInt> {
    let a = BigInt::from(8 * m - 6);
    let b = BigInt::from(8 * (m - 1) * (2 * m - 3));
    let four = BigInt::from(4);
    let mut row = vec![BigInt::zero(); len];
    for (k, c) in prev.iter().enumerate() {
        row[k] += &a * c;
        row[k + 1] -= &four * c;
    }
    for (k, c) in prev2.iter().enumerate() {
        row[k] -= &b * c;
    }
    row
}

/// Rows `0..=m_max` of the `P_m` and `Q_m` tables, generated by the shared
/// three-term recurrence with exact integer arithmetic.
pub fn build_pq_tables(m_max: usize) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let mut p: Vec<Vec<BigInt>> = vec![vec![BigInt::from(2)]];
    let mut q: Vec<Vec<BigInt>> = vec![Vec::new()];
    if m_max >= 1 {
        p.push(vec![BigInt::from(4), BigInt::from(-8)]);
        q.push(vec![BigInt::from(4)]);
    }
    for m in 2..=m_max {
        let pm = recurrence_step(m, &p[m - 1], &p[m - 2], m + 1);
        let qm = recurrence_step(m, &q[m - 1], &q[m - 2], m);
        p.push(pm);
        q.push(qm);
    }
    (p, q)
}

/// Closed form of `p_{m,k}`:
/// `(-1)^k (2m)! 2^(k+1) / ((m-k)! k! (2k - sign k)!!)` with `sign(0) = 0`.
pub fn p_closed_form(m: usize, k: usize) -> Result<BigInt> {
    if k > m {
        return Err(VoigtError::IndexOutOfRange { m, k });
    }
    let sign_k = usize::from(k > 0);
    let num = factorial(2 * m) * pow2(k + 1);
    let den = factorial(m - k) * factorial(k) * double_factorial(2 * k - sign_k);
    let (mag, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    Ok(if k % 2 == 1 { -mag } else { mag })
}

/// The exact `h`, `p` and `q` tables up to `m_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffTables {
    /// Keyed by odd `n = 1, 3, ..., 2 m_max + 1`.
    pub h_rows: BTreeMap<usize, Vec<BigInt>>,
    pub p_rows: Vec<Vec<BigInt>>,
    pub q_rows: Vec<Vec<BigInt>>,
    pub m_max: usize,
}

impl CoeffTables {
    pub fn new(m_max: usize) -> Self {
        let (p_rows, q_rows) = build_pq_tables(m_max);
        let h_rows = (0..=m_max)
            .map(|m| {
                let n = 2 * m + 1;
                (n, hermite_coeffs(n as i64).expect("odd order"))
            })
            .collect();
        Self { h_rows, p_rows, q_rows, m_max }
    }

    /// Process-wide tables with `m_max = 16`, built on first use.
    pub fn global() -> &'static CoeffTables {
        static TABLES: OnceLock<CoeffTables> = OnceLock::new();
        TABLES.get_or_init(|| CoeffTables::new(DEFAULT_M_MAX))
    }

    /// `H_{2m+1}` row.
    pub fn h(&self, m: usize) -> &[BigInt] {
        &self.h_rows[&(2 * m + 1)]
    }

    /// Audit dump: one row per table and index, exact decimal integers.
    /// Short rows leave their trailing cells empty.
    pub fn to_csv(&self) -> String {
        let width = self.m_max + 1;
        let mut out = String::from("table,index");
        for k in 0..width {
            let _ = write!(out, ",k{k}");
        }
        out.push('\n');
        let mut push_row = |name: &str, index: usize, row: &[BigInt]| {
            let _ = write!(out, "{name},{index}");
            for k in 0..width {
                out.push(',');
                if let Some(c) = row.get(k) {
                    let _ = write!(out, "{c}");
                }
            }
            out.push('\n');
        };
        for (n, row) in &self.h_rows {
            push_row("h", *n, row);
        }
        for (m, row) in self.p_rows.iter().enumerate() {
            push_row("p", m, row);
        }
        for (m, row) in self.q_rows.iter().enumerate() {
            push_row("q", m, row);
        }
        out
    }
}

/// Factorial-scaled coefficients for folding with powers of `y`.
///
/// With `A[m][n] = p_{m,n}/(2m)!`, `B[m][n] = (-1)^(m+1) h_{2m+1,n}/(2m+1)!`,
/// `C[m][n] = q_{m,n}/(2m)!` the folded coefficients are polynomials in `y`:
///
/// ```text
/// alpha_n = sum_{m=n}^{N}   A[m][n] y^(2m)
/// beta_n  = sum_{m=n}^{N}   B[m][n] y^(2m+1)
/// gamma_n = sum_{m=n+1}^{N} C[m][n] y^(2m)
/// ```
///
/// The primed coefficients are `c' = y c - (1/2) dc/dy`. Subtracting the
/// derivative term by term cancels almost completely (for `n = 0` every
/// interior term of `alpha'_0` is exactly zero), so the combined per-power
/// coefficients `g`, `hh` and `jj` below are formed in exact rational
/// arithmetic before rounding.
#[derive(Debug, Clone)]
pub struct FoldTable {
    pub m_max: usize,
    /// `A[m][n]`, `n <= m`.
    pub a: Vec<Vec<f64>>,
    /// `B[m][n]`, `n <= m`.
    pub b: Vec<Vec<f64>>,
    /// `C[m][n]`, `n < m`.
    pub c: Vec<Vec<f64>>,
    /// `g[j][n] = A[j][n] - A[j+1][n] (2j+2)/2`: coefficient of `y^(2j+1)` in `alpha'_n`.
    pub g: Vec<Vec<f64>>,
    /// `hh[j][n] = B[j-1][n] - (2j+1) B[j][n]/2`: coefficient of `y^(2j)` in `beta'_n`.
    pub hh: Vec<Vec<f64>>,
    /// `jj[j][n] = C[j][n] - (2j+2) C[j+1][n]/2`: coefficient of `y^(2j+1)` in `gamma'_n`.
    pub jj: Vec<Vec<f64>>,
    /// Lowest-order term of `alpha'_n`, `n >= 1`: coefficient of `y^(2n-1)`.
    pub alpha_p_low: Vec<f64>,
    /// Lowest-order term of `beta'_n`: coefficient of `y^(2n)`.
    pub beta_p_low: Vec<f64>,
    /// Lowest-order term of `gamma'_n`: coefficient of `y^(2n+1)`.
    pub gamma_p_low: Vec<f64>,
    /// `delta_n = alpha'_(n+1)/2 + gamma'_n`, combined before rounding:
    /// the coefficient of `y^(2n+1)`.
    pub delta_low: Vec<f64>,
    /// `dd[j][n]`, `n < j`: coefficient of `y^(2j+1)` in `delta_n`.
    pub dd: Vec<Vec<f64>>,
    /// `ac[m][n] = A[m][n+1]/2 + C[m][n]`, `n < m`. Coefficient of `y^(2m+1)`
    /// in `delta_n` at order `m`, and of `y^(2m)` in `eta_n = alpha_(n+1)/2 + gamma_n`.
    pub ac: Vec<Vec<f64>>,
}

fn ratio(num: &BigInt, den: &BigInt) -> BigRational {
    BigRational::new(num.clone(), den.clone())
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().expect("scaled coefficient is representable")
}

impl FoldTable {
    pub fn new(tables: &CoeffTables) -> Self {
        let mm = tables.m_max;
        let fact: Vec<BigInt> = (0..=2 * mm + 2).map(factorial).collect();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));

        let a_ex: Vec<Vec<BigRational>> = (0..=mm)
            .map(|m| tables.p_rows[m].iter().map(|p| ratio(p, &fact[2 * m])).collect())
            .collect();
        // p_{m,n}/(2m-1)!
        let ap_ex: Vec<Vec<BigRational>> = (0..=mm)
            .map(|m| {
                if m == 0 {
                    Vec::new()
                } else {
                    tables.p_rows[m].iter().map(|p| ratio(p, &fact[2 * m - 1])).collect()
                }
            })
            .collect();
        let b_ex: Vec<Vec<BigRational>> = (0..=mm)
            .map(|m| {
                tables
                    .h(m)
                    .iter()
                    .map(|h| {
                        let r = ratio(h, &fact[2 * m + 1]);
                        if m % 2 == 0 {
                            -r
                        } else {
                            r
                        }
                    })
                    .collect()
            })
            .collect();
        // (-1)^(m+1) h_{2m+1,n}/(2m)!
        let bp_ex: Vec<Vec<BigRational>> = (0..=mm)
            .map(|m| {
                tables
                    .h(m)
                    .iter()
                    .map(|h| {
                        let r = ratio(h, &fact[2 * m]);
                        if m % 2 == 0 {
                            -r
                        } else {
                            r
                        }
                    })
                    .collect()
            })
            .collect();
        let c_ex: Vec<Vec<BigRational>> = (0..=mm)
            .map(|m| tables.q_rows[m].iter().map(|q| ratio(q, &fact[2 * m])).collect())
            .collect();
        let cp_ex: Vec<Vec<BigRational>> = (0..=mm)
            .map(|m| {
                if m == 0 {
                    Vec::new()
                } else {
                    tables.q_rows[m].iter().map(|q| ratio(q, &fact[2 * m - 1])).collect()
                }
            })
            .collect();

        let round_all = |rows: &Vec<Vec<BigRational>>| -> Vec<Vec<f64>> {
            rows.iter().map(|r| r.iter().map(to_f64).collect()).collect()
        };

        let g_ex: Vec<Vec<BigRational>> = (0..mm)
            .map(|j| (0..=j).map(|n| &a_ex[j][n] - &half * &ap_ex[j + 1][n]).collect())
            .collect();
        let hh = (0..=mm)
            .map(|j| {
                (0..j)
                    .map(|n| to_f64(&(&b_ex[j - 1][n] - &half * &bp_ex[j][n])))
                    .collect()
            })
            .collect();
        let jj_ex: Vec<Vec<BigRational>> = (0..mm)
            .map(|j| (0..j).map(|n| &c_ex[j][n] - &half * &cp_ex[j + 1][n]).collect())
            .collect();
        let ap_low_ex: Vec<BigRational> = (0..=mm)
            .map(|n| if n == 0 { BigRational::zero() } else { -&half * &ap_ex[n][n] })
            .collect();
        let cp_low_ex: Vec<BigRational> = (0..mm).map(|n| -&half * &cp_ex[n + 1][n]).collect();

        let delta_low = (0..mm).map(|n| to_f64(&(&half * &ap_low_ex[n + 1] + &cp_low_ex[n]))).collect();
        let dd = (0..mm)
            .map(|j| (0..j).map(|n| to_f64(&(&half * &g_ex[j][n + 1] + &jj_ex[j][n]))).collect())
            .collect();
        let ac = (0..=mm)
            .map(|nn| (0..nn).map(|n| to_f64(&(&half * &a_ex[nn][n + 1] + &c_ex[nn][n]))).collect())
            .collect();

        let g = round_all(&g_ex);
        let jj = round_all(&jj_ex);
        let alpha_p_low = ap_low_ex.iter().map(to_f64).collect();
        let beta_p_low = (0..=mm).map(|n| to_f64(&(-&half * &bp_ex[n][n]))).collect();
        let gamma_p_low = cp_low_ex.iter().map(to_f64).collect();

        Self {
            m_max: mm,
            a: round_all(&a_ex),
            b: round_all(&b_ex),
            c: round_all(&c_ex),
            g,
            hh,
            jj,
            alpha_p_low,
            beta_p_low,
            gamma_p_low,
            delta_low,
            dd,
            ac,
        }
    }

    /// Fold table for [`CoeffTables::global`].
    pub fn global() -> &'static FoldTable {
        static FOLD: OnceLock<FoldTable> = OnceLock::new();
        FOLD.get_or_init(|| FoldTable::new(CoeffTables::global()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn hermite_small_orders() {
        assert_eq!(hermite_coeffs(1).unwrap(), ints(&[2]));
        assert_eq!(hermite_coeffs(3).unwrap(), ints(&[-12, 8]));
        assert_eq!(hermite_coeffs(5).unwrap(), ints(&[120, -160, 32]));
    }

    #[test]
    fn hermite_rejects_even_and_nonpositive() {
        for n in [0, 2, -1, -3, 34] {
            assert_eq!(hermite_coeffs(n), Err(VoigtError::InvalidHermiteOrder(n)));
        }
    }

    #[test]
    fn pq_base_rows() {
        let (p, q) = build_pq_tables(2);
        assert_eq!(p[0], ints(&[2]));
        assert!(q[0].is_empty());
        assert_eq!(p[1], ints(&[4, -8]));
        assert_eq!(q[1], ints(&[4]));
        assert_eq!(p[2], ints(&[24, -96, 32]));
        assert_eq!(q[2], ints(&[40, -16]));
    }

    #[test]
    fn build_with_zero_m_max() {
        let (p, q) = build_pq_tables(0);
        assert_eq!(p, vec![ints(&[2])]);
        assert_eq!(q, vec![Vec::<BigInt>::new()]);
    }

    #[test]
    fn closed_form_spot_values() {
        assert_eq!(p_closed_form(0, 0).unwrap(), BigInt::from(2));
        assert_eq!(p_closed_form(2, 2).unwrap(), BigInt::from(32));
        assert_eq!(p_closed_form(3, 0).unwrap(), BigInt::from(240));
        assert_eq!(
            p_closed_form(2, 3),
            Err(VoigtError::IndexOutOfRange { m: 2, k: 3 })
        );
    }

    #[test]
    fn row_lengths() {
        let t = CoeffTables::global();
        for m in 0..=t.m_max {
            assert_eq!(t.p_rows[m].len(), m + 1);
            assert_eq!(t.q_rows[m].len(), m);
            assert_eq!(t.h(m).len(), m + 1);
        }
    }

    #[test]
    fn q_row_seven_exact_values() {
        let t = CoeffTables::global();
        assert_eq!(
            t.q_rows[7],
            ints(&[130556160, -373416960, 284691456, -86630400, 11939840, -737280, 16384])
        );
    }

    #[test]
    fn csv_has_one_row_per_index() {
        let t = CoeffTables::new(3);
        let csv = t.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "table,index,k0,k1,k2,k3");
        assert_eq!(lines.len(), 1 + 4 + 4 + 4);
        assert!(lines.contains(&"q,0,,,,"));
        assert!(lines.contains(&"q,3,528,-448,64,"));
        assert!(lines.contains(&"h,3,-12,8,,"));
        assert!(lines.iter().all(|l| l.split(',').count() == 6));
    }

    #[test]
    fn alpha_prime_zero_interior_vanishes() {
        // y alpha_0 - alpha_0'/2 with alpha_0 = 2 exp(y^2) truncated.
        let f = FoldTable::global();
        for j in 0..f.m_max {
            assert_eq!(f.g[j][0], 0.0, "j = {j}");
        }
        assert_eq!(f.beta_p_low[0], 1.0);
        assert_eq!(f.alpha_p_low[0], 0.0);
    }
}
