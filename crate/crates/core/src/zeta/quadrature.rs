//! Composite Gauss–Legendre quadrature and the two one-dimensional integral
//! representations of `ζ(2n+1)`.

use std::f64::consts::PI;

use rayon::prelude::*;

use super::sum::NeumaierSum;
use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::kernel::closed_form;
use crate::special::euler_poly;

/// How the removable endpoint singularity of `E_{2n}(u)/sin(πu)` is treated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndpointHandling {
    /// Evaluate through the continuous extension, substituting the
    /// L'Hôpital limit wherever `sin(πu)` vanishes in floating point.
    LimitValue,
    /// Rely on the rule's nodes being strictly interior.
    OpenShifted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadratureConfig {
    pub panels: usize,
    pub nodes_per_panel: usize,
    pub endpoint_handling: EndpointHandling,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig { panels: 16, nodes_per_panel: 20, endpoint_handling: EndpointHandling::OpenShifted }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.panels < 1 {
            return Err(Error::InvalidConfig("panels must be >= 1".into()));
        }
        if self.nodes_per_panel < 2 {
            return Err(Error::InvalidConfig("nodes_per_panel must be >= 2".into()));
        }
        Ok(())
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
#[derive(Clone, Debug)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Nodes by Newton's method on `P_n`, started from the Tricomi
    /// approximation; weights `2 / ((1 - x^2) P_n'(x)^2)`.
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidConfig("Gauss-Legendre needs at least 2 nodes".into()));
        }
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Ok(GaussLegendre { nodes, weights })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn integrate(&self, a: f64, b: f64, f: impl Fn(f64) -> f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut acc = NeumaierSum::default();
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc.add(w * f(mid + half * x));
        }
        half * acc.total()
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// A panel `[a, b]` of `[0, 1]`.
#[derive(Clone, Copy, Debug)]
struct Panel {
    a: f64,
    b: f64,
    /// Panel lies in the right half and is parametrised by distance to 1.
    from_right: bool,
}

/// Uniform panels on `[0, 1]`.
fn uniform_panels(count: usize) -> Vec<Panel> {
    (0..count)
        .map(|i| Panel { a: i as f64 / count as f64, b: (i + 1) as f64 / count as f64, from_right: false })
        .collect()
}

/// Panel widths halve this many times toward each endpoint.
pub const GRADING_LEVELS: u32 = 48;

/// Uniform panels whose two end panels are replaced by geometric grading.
/// Right-end panels are stored as distances from 1 (`a`, `b` measure
/// `1 - u`). At least two uniform panels are used.
fn graded_panels(count: usize) -> Vec<Panel> {
    let count = count.max(2);
    let h = 1.0 / count as f64;
    let mut ends = Vec::new();
    let mut hi = h;
    for _ in 0..GRADING_LEVELS {
        ends.push((hi * 0.5, hi));
        hi *= 0.5;
    }
    ends.push((0.0, hi));
    ends.reverse();

    let mut out: Vec<Panel> = ends.iter().map(|&(a, b)| Panel { a, b, from_right: false }).collect();
    out.extend((1..count - 1).map(|i| Panel { a: i as f64 * h, b: (i + 1) as f64 * h, from_right: false }));
    out.extend(ends.iter().rev().map(|&(a, b)| Panel { a, b, from_right: true }));
    out
}

/// Sums `f(u, 1 - u)` over all panels. Panels are evaluated in parallel and
/// reduced in panel order, so the result does not depend on thread count.
fn integrate_panels(rule: &GaussLegendre, panels: &[Panel], f: impl Fn(f64, f64) -> f64 + Sync) -> f64 {
    let parts: Vec<f64> = panels
        .par_iter()
        .map(|p| {
            if p.from_right {
                // integrate over d = 1 - u in [a, b]
                rule.integrate(p.a, p.b, |d| f(1.0 - d, d))
            } else {
                rule.integrate(p.a, p.b, |u| f(u, 1.0 - u))
            }
        })
        .collect();
    let mut acc = NeumaierSum::default();
    for x in parts {
        acc.add(x);
    }
    acc.total()
}

/// Horner evaluation of ascending coefficients.
pub fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// `E_{2n}(u) / sin(πu)` extended continuously to `[0, 1]`; at the
/// endpoints the value is `2n E_{2n-1}(u*) / (π cos(πu*))`.
pub fn continuous_integrand(n: u32, u: f64) -> f64 {
    let e = euler_poly(2 * n).to_f64_coeffs();
    let de = euler_poly(2 * n - 1).to_f64_coeffs();
    extended_ratio(&e, &de, n, u, 1.0 - u)
}

fn extended_ratio(e: &[f64], de: &[f64], n: u32, u: f64, one_minus_u: f64) -> f64 {
    // sin(πu) = sin(π(1-u)); use the smaller argument for accuracy
    let s = if u <= 0.5 { (PI * u).sin() } else { (PI * one_minus_u).sin() };
    if s.abs() < f64::MIN_POSITIVE {
        let at = if u <= 0.5 { 0.0 } else { 1.0 };
        return 2.0 * n as f64 * horner(de, at) / (PI * (PI * at).cos());
    }
    horner(e, u) / s
}

fn odd_index_checked(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::IndexOutOfRange { what: "odd zeta integral", n, min: 1 });
    }
    Ok(())
}

/// `(-1)^n π^{2n+1} / (4 [1 - 2^{-(2n+1)}] (2n)!)`, the constant in front of
/// `∫ E_{2n}(u)/sin(πu) du`.
pub fn sine_integral_prefactor(n: u32) -> f64 {
    let r = Rational::sign_pow(n as u64)
        / (Rational::from(4) * (Rational::one() - Rational::pow2(-(2 * n as i64 + 1))))
        / Rational::from(crate::algebra::factorial(2 * n));
    r.to_f64() * PI.powi(2 * n as i32 + 1)
}

/// `ζ(2n+1)` from `∫_0^1 E_{2n}(u)/sin(πu) du` by composite Gauss–Legendre.
pub fn zeta_odd_quadrature(n: u32, cfg: &QuadratureConfig) -> Result<f64> {
    odd_index_checked(n)?;
    cfg.validate()?;
    let rule = GaussLegendre::new(cfg.nodes_per_panel)?;
    let e = euler_poly(2 * n).to_f64_coeffs();
    let de = euler_poly(2 * n - 1).to_f64_coeffs();
    let panels = uniform_panels(cfg.panels);
    let integral = match cfg.endpoint_handling {
        EndpointHandling::LimitValue => integrate_panels(&rule, &panels, |u, w| extended_ratio(&e, &de, n, u, w)),
        EndpointHandling::OpenShifted => integrate_panels(&rule, &panels, |u, w| {
            let s = if u <= 0.5 { (PI * u).sin() } else { (PI * w).sin() };
            horner(&e, u) / s
        }),
    };
    let value = sine_integral_prefactor(n) * integral;
    if !value.is_finite() {
        return Err(Error::NonFinite("zeta_odd_quadrature"));
    }
    Ok(value)
}

/// `ln tan(πu/2)`, taking `1 - u` separately so both endpoints are accurate.
fn ln_tan_half_pi(u: f64, one_minus_u: f64) -> f64 {
    if u <= 0.5 {
        (0.5 * PI * u).tan().ln()
    } else {
        -(0.5 * PI * one_minus_u).tan().ln()
    }
}

/// `ζ(2n+1) = -2π^{2n}/(2^{2n+1} - 1) ∫_0^1 ln tan(πu/2) K_{2n}(u,u) du`.
///
/// The logarithm is integrable but singular at both ends, so the end panels
/// are graded geometrically ([`GRADING_LEVELS`] halvings). Only
/// [`EndpointHandling::OpenShifted`] makes sense here: the integrand has no
/// finite limit at the endpoints.
pub fn zeta_odd_logtan(n: u32, cfg: &QuadratureConfig) -> Result<f64> {
    odd_index_checked(n)?;
    cfg.validate()?;
    if cfg.endpoint_handling == EndpointHandling::LimitValue {
        return Err(Error::InvalidConfig("the log-tan integrand has no endpoint limit; use open_shifted".into()));
    }
    let rule = GaussLegendre::new(cfg.nodes_per_panel)?;
    let (diag, _, _) = closed_form(2 * n)?.diagonal();
    let k = diag.to_f64_coeffs();
    let panels = graded_panels(cfg.panels);
    let integral = integrate_panels(&rule, &panels, |u, w| ln_tan_half_pi(u, w) * horner(&k, u));
    let pre = Rational::from(-2) / (Rational::pow2(2 * n as i64 + 1) - Rational::one());
    let value = pre.to_f64() * PI.powi(2 * n as i32) * integral;
    if !value.is_finite() {
        return Err(Error::NonFinite("zeta_odd_logtan"));
    }
    Ok(value)
}
