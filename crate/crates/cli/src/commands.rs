//! One function per subcommand, each returning a finished `RunReport`.

use std::f64::consts::PI;
use std::time::Instant;

use eulerkern::kernel::{closed_form, verify_recurrence};
use eulerkern::mc::{mc_volume, mc_zeta_odd, McConfig, McEstimate};
use eulerkern::zeta::series::{alternating, series_s_bounded, series_zeta_bounded};
use eulerkern::zeta::{
    delta, s_odd, s_odd_in_volume_range, s_value, zeta_even, zeta_odd_logtan, zeta_odd_quadrature, DeltaMethod,
    ExactConstant, QuadratureConfig, SeriesConfig,
};
use eulerkern::{identities, Result};
use serde_json::Value;

use crate::report::{check, num, Row, RunReport, Status};

/// Oracle tolerances per table.
pub const DELTA_TOL: f64 = 1e-10;
pub const S_TOL: f64 = 1e-10;
pub const ZETA_EVEN_TOL: f64 = 1e-12;
pub const QUADRATURE_TOL: f64 = 1e-10;
pub const LOGTAN_TOL: f64 = 1e-8;

fn oracle() -> SeriesConfig {
    SeriesConfig { tolerance: 1e-14, max_terms: 200_000_000 }
}

macro_rules! row {
    ($($key:expr => $value:expr),* $(,)?) => {{
        let mut r = Row::new();
        $( r.insert($key.to_string(), Value::from($value)); )*
        r
    }};
}

fn exact_columns(r: &mut Row, c: &ExactConstant) {
    r.insert("rational_part".into(), c.rational_part.to_string().into());
    r.insert("pi_power".into(), c.pi_power.into());
    r.insert("value".into(), num(c.to_f64()));
}

fn oracle_columns(r: &mut Row, value: f64, reference: f64, tol: f64) -> bool {
    let err = (value - reference).abs();
    let passed = err < tol;
    r.insert("oracle".into(), num(reference));
    r.insert("abs_err".into(), num(err));
    r.insert("check".into(), check(passed));
    passed
}

pub fn kernel_show(n: u32) -> Result<RunReport> {
    let start = Instant::now();
    let k = closed_form(n)?;
    let (le, ge) = match k.split() {
        eulerkern::Split::Diagonal => ("u <= v", "u >= v"),
        eulerkern::Split::AntiDiagonal => ("u + v <= 1", "u + v >= 1"),
    };
    let mut report = RunReport::new("kernel show").param("n", n).param("split", k.split().describe());
    report.results = vec![
        row!("branch" => "branch_le", "region" => le, "polynomial" => k.branch_le().to_string()),
        row!("branch" => "branch_ge", "region" => ge, "polynomial" => k.branch_ge().to_string()),
    ];
    report.notes.push(format!("split line {}", k.split().describe()));
    Ok(report.timed(start.elapsed()))
}

pub fn kernel_verify(max_n: u32) -> Result<RunReport> {
    let start = Instant::now();
    let checks = verify_recurrence(max_n)?;
    let mut report = RunReport::new("kernel verify").param("max_n", max_n);
    report.status = Status::from_checks(checks.iter().all(|c| c.passed));
    report.results = checks
        .iter()
        .map(|c| {
            row!(
                "order" => c.order,
                "from" => format!("K_{} -> K_{}", c.order - 1, c.order),
                "elapsed_s" => num(c.elapsed.as_secs_f64()),
                "check" => check(c.passed),
            )
        })
        .collect();
    Ok(report.timed(start.elapsed()))
}

pub fn identities() -> Result<RunReport> {
    let start = Instant::now();
    let checks = identities::identity_suite()?;
    let mut report = RunReport::new("identities");
    report.status = Status::from_checks(checks.iter().all(|c| c.passed()));
    report.results = checks
        .iter()
        .map(|c| {
            let failures: Vec<String> = c.failures.iter().map(u32::to_string).collect();
            row!(
                "identity" => c.name,
                "statement" => c.statement,
                "range" => format!("{}..{}", c.range.start(), c.range.end()),
                "failures" => failures.join(" "),
                "elapsed_s" => num(c.elapsed.as_secs_f64()),
                "check" => check(c.passed()),
            )
        })
        .collect();
    Ok(report.timed(start.elapsed()))
}

pub fn delta_table(max_n: u32) -> Result<RunReport> {
    let start = Instant::now();
    let mut all = true;
    let mut rows = Vec::new();
    for n in 2..=max_n {
        let exact = delta(n, DeltaMethod::Closed)?;
        let routes_agree = delta(n, DeltaMethod::Trace)? == exact;
        let from_series = series_s_bounded(n, &oracle())?.value * (2.0 / PI).powi(n as i32);
        let mut r = row!("n" => n, "delta" => exact.to_string(), "value" => num(exact.to_f64()), "trace_route" => check(routes_agree));
        all &= oracle_columns(&mut r, exact.to_f64(), from_series, DELTA_TOL) && routes_agree;
        rows.push(r);
    }
    let mut report = RunReport::new("delta").param("max_n", max_n).param("tolerance", DELTA_TOL);
    report.results = rows;
    report.status = Status::from_checks(all);
    Ok(report.timed(start.elapsed()))
}

/// The Leibniz sum `S(1) = Σ_j (-1)^j/(2j+1)`.
fn leibniz() -> Result<f64> {
    let cfg = oracle();
    Ok(alternating(|j| 1.0 / (2.0 * j as f64 + 1.0), cfg.tolerance, cfg.max_terms)?.value)
}

/// `S(n)` for `n = 1..=max_n`. The `n = 1` row comes from the odd formula
/// and is flagged as lying outside the polytope-volume range.
pub fn s_table(max_n: u32) -> Result<RunReport> {
    let start = Instant::now();
    let mut all = true;
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let (exact, reference) =
            if n == 1 { (s_odd(0)?, leibniz()?) } else { (s_value(n)?, series_s_bounded(n, &oracle())?.value) };
        let mut r = row!("n" => n);
        exact_columns(&mut r, &exact);
        r.insert("volume_range".into(), (n >= 2 || s_odd_in_volume_range(0)).into());
        all &= oracle_columns(&mut r, exact.to_f64(), reference, S_TOL);
        rows.push(r);
    }
    let mut report = RunReport::new("s").param("max_n", max_n).param("tolerance", S_TOL);
    report.results = rows;
    report.status = Status::from_checks(all);
    report.notes.push("n = 1 is the Leibniz sum pi/4, outside the polytope-volume range".into());
    Ok(report.timed(start.elapsed()))
}

fn zeta_even_row(n: u32) -> Result<(Row, bool)> {
    let exact = zeta_even(n)?;
    let mut r = row!("n" => n, "s" => 2 * n);
    exact_columns(&mut r, &exact);
    let passed = oracle_columns(&mut r, exact.to_f64(), series_zeta_bounded(2 * n, &oracle())?.value, ZETA_EVEN_TOL);
    Ok((r, passed))
}

pub fn zeta_even_one(n: u32) -> Result<RunReport> {
    let start = Instant::now();
    let (r, passed) = zeta_even_row(n)?;
    let mut report = RunReport::new("zeta even").param("n", n).param("tolerance", ZETA_EVEN_TOL);
    report.results.push(r);
    report.status = Status::from_checks(passed);
    Ok(report.timed(start.elapsed()))
}

pub fn zeta_table(max_n: u32) -> Result<RunReport> {
    let start = Instant::now();
    let mut report = RunReport::new("zeta table").param("max_n", max_n).param("tolerance", ZETA_EVEN_TOL);
    let mut all = true;
    for n in 1..=max_n {
        let (r, passed) = zeta_even_row(n)?;
        all &= passed;
        report.results.push(r);
    }
    report.status = Status::from_checks(all);
    Ok(report.timed(start.elapsed()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OddMethod {
    /// Exact `S(2n+1)` from the Euler numbers (the odd companion of the
    /// even-zeta formula; `ζ(2n+1)` itself has no such form).
    Formula,
    Quadrature,
    Logtan,
    Series,
}

pub fn zeta_odd(n: u32, method: OddMethod, quad: &QuadratureConfig) -> Result<RunReport> {
    let start = Instant::now();
    let name = match method {
        OddMethod::Formula => "formula",
        OddMethod::Quadrature => "quadrature",
        OddMethod::Logtan => "logtan",
        OddMethod::Series => "series",
    };
    let mut report = RunReport::new("zeta odd").param("n", n).param("method", name);
    let passed = match method {
        OddMethod::Formula => {
            let exact = s_odd(n)?;
            let reference = if n == 0 { leibniz()? } else { series_s_bounded(2 * n + 1, &oracle())?.value };
            let mut r = row!("n" => n, "quantity" => format!("S({})", 2 * n + 1));
            exact_columns(&mut r, &exact);
            r.insert("volume_range".into(), s_odd_in_volume_range(n).into());
            let passed = oracle_columns(&mut r, exact.to_f64(), reference, S_TOL);
            if !s_odd_in_volume_range(n) {
                report.notes.push("S(1) = pi/4 lies outside the polytope-volume range".into());
            }
            report = report.param("tolerance", S_TOL);
            report.results.push(r);
            passed
        }
        OddMethod::Series => {
            let s = 2 * n + 1;
            let v = series_zeta_bounded(s, &oracle())?;
            let reference = zeta_odd_quadrature(n, quad)?;
            let mut r = row!("n" => n, "quantity" => format!("zeta({s})"), "value" => num(v.value),
                "error_bound" => num(v.error_bound), "terms" => v.terms);
            report = report.param("tolerance", QUADRATURE_TOL).param("oracle", "quadrature");
            let passed = oracle_columns(&mut r, v.value, reference, QUADRATURE_TOL);
            report.results.push(r);
            passed
        }
        OddMethod::Quadrature | OddMethod::Logtan => {
            let s = 2 * n + 1;
            let (value, tol) = if method == OddMethod::Quadrature {
                (zeta_odd_quadrature(n, quad)?, QUADRATURE_TOL)
            } else {
                (zeta_odd_logtan(n, quad)?, LOGTAN_TOL)
            };
            let mut r = row!("n" => n, "quantity" => format!("zeta({s})"), "value" => num(value));
            report = report
                .param("tolerance", tol)
                .param("oracle", "series")
                .param("panels", quad.panels)
                .param("nodes_per_panel", quad.nodes_per_panel);
            let passed = oracle_columns(&mut r, value, series_zeta_bounded(s, &oracle())?.value, tol);
            report.results.push(r);
            passed
        }
    };
    report.status = Status::from_checks(passed);
    Ok(report.timed(start.elapsed()))
}

fn mc_row(est: &McEstimate, reference_exact: Option<String>, reference: f64) -> Row {
    let (lo, hi) = est.interval95();
    let mut r = row!(
        "samples" => est.samples,
        "seed" => est.seed,
        "mean" => num(est.mean),
        "stderr" => num(est.stderr),
        "ci95_low" => num(lo),
        "ci95_high" => num(hi),
    );
    if let Some(exact) = reference_exact {
        r.insert("reference_exact".into(), exact.into());
    }
    r.insert("reference".into(), num(reference));
    r.insert("z_score".into(), num(est.z_score(reference)));
    r
}

pub fn mc_volume_cmd(cfg: &McConfig) -> Result<RunReport> {
    let start = Instant::now();
    let est = mc_volume(cfg)?;
    let exact = delta(cfg.dimension as u32, DeltaMethod::Trace)?;
    let mut row = row!("n" => cfg.dimension);
    row.extend(mc_row(&est, Some(exact.to_string()), exact.to_f64()));
    let mut report = RunReport::new("mc volume")
        .param("n", cfg.dimension)
        .param("samples", cfg.samples)
        .param("seed", cfg.seed)
        .param("chunk", cfg.chunk_size);
    report.results.push(row);
    Ok(report.timed(start.elapsed()))
}

pub fn mc_zeta_odd_cmd(n: u32, cfg: &McConfig) -> Result<RunReport> {
    let start = Instant::now();
    let est = mc_zeta_odd(n, cfg)?;
    let reference = series_zeta_bounded(2 * n + 1, &oracle())?.value;
    let mut row = row!("n" => n, "quantity" => format!("zeta({})", 2 * n + 1));
    row.extend(mc_row(&est, None, reference));
    row.insert("clamped".into(), est.clamped.into());
    let mut report = RunReport::new("mc zeta-odd")
        .param("n", n)
        .param("dimension", cfg.dimension)
        .param("samples", cfg.samples)
        .param("seed", cfg.seed)
        .param("chunk", cfg.chunk_size);
    report.results.push(row);
    Ok(report.timed(start.elapsed()))
}
