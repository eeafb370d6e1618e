//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::{Command, ExitCode};
use std::time::Instant;

use num_bigint::BigInt;
use voigt_cli::bench::{run_bench, BenchConfig};
use voigt_cli::boundary::find_boundary;
use voigt_cli::errmap::run_errmap;
use voigt_cli::grid::{Axis, GridSpec, Scale};
use voigt_core::coeffs::{hermite_coeffs, p_closed_form};
use voigt_core::{
    boundary_z_c, dawson_cf, eval_w, gaussian, select_params, AccuracyLevel, CoeffTables, EvalOptions, Evaluator64,
    SeriesParams,
};
use voigt_oracle::{ref_dawson, ref_erfcx, ref_w, relative_error};

type Outcome = Result<String, String>;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

// ═══ 1. coefficient tables ═══

const Q_ROWS: [&[i64]; 7] = [
    &[4],
    &[40, -16],
    &[528, -448, 64],
    &[8928, -11840, 3456, -256],
    &[185280, -337920, 150528, -22528, 1024],
    &[4567680, -10671360, 6429696, -1456128, 133120, -4096],
    &[130556160, -373416960, 284691456, -86630400, 11939840, -737280, 16384],
];

/// Full coefficient vectors of `H_0..=H_n_max` by `H_(n+1) = 2x H_n - 2n H_(n-1)`.
fn hermite_by_recurrence(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut h = vec![vec![BigInt::from(1)], vec![BigInt::from(0), BigInt::from(2)]];
    for n in 1..n_max {
        let mut next = vec![BigInt::from(0); n + 2];
        for (k, c) in h[n].iter().enumerate() {
            next[k + 1] += c * 2;
        }
        for (k, c) in h[n - 1].iter().enumerate() {
            next[k] -= c * (2 * n as i64);
        }
        h.push(next);
    }
    h
}

fn coefficients() -> Outcome {
    let start = Instant::now();
    let t = CoeffTables::new(16);
    let mut bad = Vec::new();
    for m in 0..=16 {
        for k in 0..=m {
            if t.p_rows[m][k] != p_closed_form(m, k).unwrap() {
                bad.push(format!("p[{m}][{k}]"));
            }
        }
    }
    for (i, row) in Q_ROWS.iter().enumerate() {
        let want: Vec<BigInt> = row.iter().map(|&v| BigInt::from(v)).collect();
        if t.q_rows[i + 1] != want {
            bad.push(format!("q[{}]", i + 1));
        }
    }
    let rec = hermite_by_recurrence(33);
    for n in (1..=33).step_by(2) {
        let odd: Vec<BigInt> = rec[n].iter().skip(1).step_by(2).cloned().collect();
        if hermite_coeffs(n as i64).unwrap() != odd || t.h((n - 1) / 2) != odd.as_slice() {
            bad.push(format!("H_{n}"));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    check(bad.is_empty() && secs < 1.0, format!("mismatches {bad:?}, {secs:.3} s"))
}

// ═══ 2. Dawson integral ═══

fn ulps(a: f64, b: f64) -> u64 {
    a.to_bits().abs_diff(b.to_bits())
}

fn dawson() -> Outcome {
    let n = 10_000;
    let mut worst = (0u64, 0.0f64, 0.0f64);
    for i in 1..=n {
        let x = 22.0 * i as f64 / n as f64;
        let d = dawson_cf(x, 61).unwrap();
        let r = ref_dawson(x).unwrap();
        let u = ulps(d, r);
        if u > worst.0 || i == 1 {
            worst = (u.max(worst.0), x, relative_error(d, r).unwrap());
        }
    }
    check(worst.0 <= 2, format!("max {} ulp at x = {} (rel {:.2e})", worst.0, worst.1, worst.2))
}

// ═══ 3, 4. accuracy over the plane ═══

fn accuracy_grid() -> GridSpec {
    GridSpec {
        x: Axis::new(0.0, 4000.0, 200, Scale::Mixed { knee: 22.0 }),
        y: Axis::new(1e-100, 0.1, 30, Scale::Log),
    }
}

fn plane_accuracy() -> (Outcome, Outcome) {
    let map = match run_errmap(&accuracy_grid(), &EvalOptions::default()) {
        Ok(m) => m,
        Err(e) => return (Err(e.to_string()), Err(e.to_string())),
    };
    let fold = |f: fn(&voigt_cli::errmap::ErrSummary) -> f64| map.summary.iter().map(f).fold(0.0, f64::max);
    let (max_re, mean_re) = (fold(|s| s.e_re), fold(|s| s.mean_re));
    let (max_im, mean_im) = (fold(|s| s.e_im), fold(|s| s.mean_im));
    let re = check(
        max_re <= 5e-13 && mean_re <= 1e-15,
        format!("max {max_re:.3e} (<= 5e-13), worst per-y mean {mean_re:.3e} (<= 1e-15)"),
    );
    let im = check(
        max_im <= 2e-15 && mean_im <= 1e-15,
        format!("max {max_im:.3e} (<= 2e-15), worst per-y mean {mean_im:.3e} (<= 1e-15)"),
    );
    (re, im)
}

// ═══ 5. continuity across the switch radius ═══

fn continuity() -> Outcome {
    let (mut re, mut im) = (0.0f64, 0.0f64);
    for &y in &[1e-1, 1e-4, 1e-10, 1e-30] {
        let ev = Evaluator64::new(y, &EvalOptions::default()).unwrap();
        let zc = ev.z_c().unwrap();
        for i in 0..100 {
            let r = zc + 1e-6 * (i as f64 - 49.5) / 49.5;
            let x = (r * r - y * y).sqrt();
            let a = ev.eval_internal(x).unwrap();
            let b = ev.eval_external(x).unwrap();
            re = re.max(relative_error(a.k, b.k).unwrap());
            im = im.max(relative_error(a.l, b.l).unwrap());
        }
    }
    check(re <= 1e-13 && im <= 1e-15, format!("Re {re:.3e} (<= 1e-13), Im {im:.3e} (<= 1e-15)"))
}

// ═══ 6. derivative relation ═══

fn derivative() -> Outcome {
    let opts = EvalOptions::default();
    let h = 1e-6;
    let mut worst = 0.0f64;
    for &y in &[0.01, 0.05, 0.09] {
        for &x in &[0.5, 1.0, 2.0, 5.0] {
            let v = eval_w(x, y, &opts).unwrap();
            let fd = (eval_w(x, y + h, &opts).unwrap().l - eval_w(x, y - h, &opts).unwrap().l) / (2.0 * h);
            let exact = 2.0 * y * v.l - 2.0 * x * v.k;
            worst = worst.max(relative_error(fd, exact).unwrap());
        }
    }
    check(worst <= 1e-6, format!("12 points, max rel {worst:.3e} (<= 1e-6)"))
}

// ═══ 7. the two axes ═══

fn axes() -> Outcome {
    let opts = EvalOptions::default();
    let mut bitwise = 0;
    let mut gauss_ulps = 0u64;
    for i in 0..1000 {
        let x = -27.0 + 54.0 * i as f64 / 999.0;
        let v = eval_w(x, 0.0, &opts).unwrap();
        let l = std::f64::consts::FRAC_2_SQRT_PI * dawson_cf(x, 61).unwrap();
        if v.k.to_bits() != gaussian(x).to_bits() || v.l.to_bits() != l.to_bits() {
            bitwise += 1;
        }
        gauss_ulps = gauss_ulps.max(ulps(gaussian(x), ref_w(x, 0.0).unwrap().re));
    }
    let mut erfcx = 0.0f64;
    for i in 0..100 {
        let y = 10f64.powf(-100.0 + 99.0 * i as f64 / 99.0);
        erfcx = erfcx.max(relative_error(eval_w(0.0, y, &opts).unwrap().k, ref_erfcx(y).unwrap()).unwrap());
    }
    check(
        bitwise == 0 && gauss_ulps <= 1 && erfcx <= 1e-15,
        format!("{bitwise} bitwise mismatches, exp(-x^2) within {gauss_ulps} ulp, erfcx {erfcx:.3e} (<= 1e-15)"),
    )
}

// ═══ 8. parameter tables ═══

fn e16_rows() -> Vec<(f64, SeriesParams)> {
    let uppers = [1e-7, 2.5119e-4, 3.9811e-3, 0.015849, 0.039811, 0.063096];
    (1..=7).map(|n| (uppers.get(n - 1).copied().unwrap_or(f64::NAN), SeriesParams::new(n, 61, 6))).collect()
}

fn e100_rows() -> Vec<(f64, SeriesParams)> {
    let uppers = [
        6.3096e-49, 1.5849e-24, 1.5849e-16, 1.5849e-12, 3.9811e-10, 1.5849e-8, 1.5849e-7, 1.5849e-6, 6.3096e-6,
        2.5119e-5, 6.3096e-5, 1.5849e-4, 3.9811e-3, 0.025119, 0.063096,
    ];
    (1..=16)
        .map(|n| {
            let (n_d, n_c) = match n {
                1..=12 => (344, 65),
                13 => (254, 43),
                14 => (197, 30),
                15 => (169, 25),
                _ => (154, 22),
            };
            (uppers.get(n - 1).copied().unwrap_or(f64::NAN), SeriesParams::new(n, n_d, n_c))
        })
        .collect()
}

fn tables() -> Outcome {
    let mut bad = Vec::new();
    let mut probes = 0;
    for (level, rows) in [(AccuracyLevel::E16, e16_rows()), (AccuracyLevel::E100, e100_rows())] {
        let mut expect = |y: f64, p: SeriesParams| {
            probes += 1;
            if select_params(y, level).ok() != Some(p) {
                bad.push(format!("{level:?} at y = {y:e}"));
            }
        };
        expect(0.0, rows[0].1);
        expect(0.1, rows[rows.len() - 1].1);
        for w in rows.windows(2) {
            let upper = w[0].0;
            expect(f64::from_bits(upper.to_bits() - 1), w[0].1);
            expect(upper, w[1].1);
        }
    }
    check(bad.is_empty(), format!("{probes} probes, mismatches {bad:?}"))
}

// ═══ 9. switch-radius formula ═══

fn switch_radius() -> Outcome {
    let a = boundary_z_c(0.1, AccuracyLevel::E16).unwrap();
    let b = boundary_z_c(1e-20, AccuracyLevel::E100).unwrap();
    check(
        (a - 6.6507).abs() <= 0.01 && (b - 16.79).abs() <= 0.01,
        format!("z_c(0.1, 1e-16) = {a:.4}, z_c(1e-20, 1e-100) = {b:.4}"),
    )
}

// ═══ 10. empirical boundary ═══

fn boundary_finder() -> Outcome {
    let run = |y: f64, eps: f64| find_boundary(y, eps).map_err(|e| e.to_string());
    let a = run(0.1, 1e-13)?;
    let zc = boundary_z_c(0.1, AccuracyLevel::E16).unwrap();
    let (b8, b13) = (run(0.01, 1e-8)?, run(0.01, 1e-13)?);
    let (small, large) = (run(1e-6, 1e-10)?, run(0.1, 1e-10)?);
    check(
        a <= zc + 0.01 && b8 <= b13 && small >= large,
        format!(
            "b(0.1, 1e-13) = {a:.2} vs z_c {zc:.4}; b(0.01, 1e-8) = {b8:.2} <= b(0.01, 1e-13) = {b13:.2}; \
             b(1e-6, 1e-10) = {small:.2} >= b(0.1, 1e-10) = {large:.2}"
        ),
    )
}

// ═══ 11. throughput ═══

fn throughput() -> Outcome {
    let cfg = BenchConfig { count: 1_000_000, y_values: vec![1e-8], ..BenchConfig::default() };
    let records = run_bench(&cfg).map_err(|e| e.to_string())?;
    let ok = records.len() == 2 && records.iter().all(|r| r.seconds <= 10.0 && r.all_finite() && r.count() == 1_000_000);
    let lines: Vec<String> = records.iter().map(|r| r.line()).collect();
    check(ok, lines.join("; "))
}

// ═══ 12. determinism ═══

fn voigt(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_voigt")).args(args).output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(String::from_utf8_lossy(&out.stderr).into_owned());
    }
    Ok(out.stdout)
}

fn strip_timing(stdout: &[u8]) -> String {
    String::from_utf8_lossy(stdout)
        .lines()
        .map(|l| l.split(',').take(4).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join("\n")
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    let mut files = Vec::new();
    let mut stdouts = Vec::new();
    for run in 0..2 {
        let (map, dump) = (path(&format!("map{run}.csv")), path(&format!("dump{run}.csv")));
        voigt(&[
            "errmap", "--x-min", "0", "--x-max", "4000", "--x-count", "40", "--x-scale", "mixed:22", "--y-min",
            "1e-100", "--y-max", "0.1", "--y-count", "6", "--out", &map,
        ])?;
        let out = voigt(&["bench", "--count", "20000", "--y", "1e-8", "--y", "0.05", "--seed", "42", "--dump", &dump])?;
        stdouts.push(strip_timing(&out));
        files.push((std::fs::read(&map).map_err(|e| e.to_string())?, std::fs::read(&dump).map_err(|e| e.to_string())?));
    }
    check(
        files[0] == files[1] && stdouts[0] == stdouts[1] && !files[0].0.is_empty(),
        format!("errmap {} bytes, bench dump {} bytes, identical across runs", files[0].0.len(), files[0].1.len()),
    )
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |id: u32, name: &str, outcome: Outcome| {
        let (tag, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} {id:>2} {name}: {detail}");
    };
    report(1, "coefficient tables", coefficients());
    report(2, "Dawson integral", dawson());
    let (re, im) = plane_accuracy();
    report(3, "real-part accuracy", re);
    report(4, "imaginary-part accuracy", im);
    report(5, "boundary continuity", continuity());
    report(6, "derivative relation", derivative());
    report(7, "axis values", axes());
    report(8, "parameter tables", tables());
    report(9, "switch-radius formula", switch_radius());
    report(10, "boundary finder", boundary_finder());
    report(11, "throughput", throughput());
    report(12, "determinism", determinism());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
