//! Direct series oracles: `S(n) = Σ_k (4k+1)^{-n}` and `ζ(s)` via the
//! alternating eta series.
//!
//! Both stop on a rigorous truncation bound rather than a term count. The
//! tail is not simply dropped: it is bracketed, the midpoint of the bracket
//! is added, and the half-width is the reported error bound.

use super::sum::NeumaierSum;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesConfig {
    /// Absolute tolerance on the truncation error.
    pub tolerance: f64,
    pub max_terms: u64,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig { tolerance: 1e-13, max_terms: 100_000_000 }
    }
}

impl SeriesConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0) {
            return Err(Error::InvalidConfig("series tolerance must be positive".into()));
        }
        if self.max_terms == 0 {
            return Err(Error::InvalidConfig("max_terms must be positive".into()));
        }
        Ok(())
    }
}

/// A series value with its truncation bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub error_bound: f64,
    pub terms: u64,
}

/// `Σ_{k>=0} (-1)^k a(k)` for `a` positive, decreasing and convex (true of
/// every `k -> (ck + d)^{-s}` used here).
///
/// With `T = a(N) - a(N+1) + ...` the tail after `N` terms, convexity gives
/// `a(N)/2 <= T <= (a(N) + d)/2` where `d = a(N) - a(N+1)`. The midpoint
/// `a(N)/2 + d/4` is added and `d/4` is the bound.
pub fn alternating(a: impl Fn(u64) -> f64, tolerance: f64, max_terms: u64) -> Result<SeriesValue> {
    let mut acc = NeumaierSum::default();
    let mut current = a(0);
    for n in 0..max_terms {
        let next = a(n + 1);
        let d = current - next;
        if d / 4.0 <= tolerance {
            let tail = current / 2.0 + d / 4.0;
            acc.add(if n % 2 == 0 { tail } else { -tail });
            return Ok(SeriesValue { value: acc.total(), error_bound: d / 4.0, terms: n });
        }
        acc.add(if n % 2 == 0 { current } else { -current });
        current = next;
    }
    Err(Error::SeriesNotConverged { tolerance, max_terms })
}

fn inv_pow(base: f64, n: u32) -> f64 {
    base.powi(-(n as i32))
}

/// `S(n)` summed directly.
///
/// Even `n`: `k` and `-k-1` contribute `(4k+1)^{-n}` and `(4k+3)^{-n}`, so
/// `S(n) = Σ_j (2j+1)^{-n}`. With `f(x) = (2x+1)^{-n}` convex and
/// decreasing, the tail after `J` terms lies in `[I(J), I(J - 1/2)]` where
/// `I(x) = ∫_x^∞ f = (2x+1)^{1-n} / (2(n-1))`.
///
/// Odd `n`: `(-3)^{-n} = -3^{-n}` and the sum becomes
/// `Σ_m [(4m+1)^{-n} - (4m+3)^{-n}]`, the alternating series
/// `Σ_j (-1)^j (2j+1)^{-n}`.
pub fn series_s_bounded(n: u32, cfg: &SeriesConfig) -> Result<SeriesValue> {
    if n < 2 {
        return Err(Error::IndexOutOfRange { what: "series S(n)", n, min: 2 });
    }
    cfg.validate()?;
    if n % 2 == 1 {
        return alternating(|j| inv_pow(2.0 * j as f64 + 1.0, n), cfg.tolerance, cfg.max_terms);
    }
    let tail_integral = |x: f64| inv_pow(2.0 * x + 1.0, n - 1) / (2.0 * (n - 1) as f64);
    let mut acc = NeumaierSum::default();
    for j in 0..cfg.max_terms {
        let lo = tail_integral(j as f64);
        let hi = tail_integral(j as f64 - 0.5);
        let half_width = 0.5 * (hi - lo);
        if half_width <= cfg.tolerance {
            acc.add(0.5 * (lo + hi));
            return Ok(SeriesValue { value: acc.total(), error_bound: half_width, terms: j });
        }
        acc.add(inv_pow(2.0 * j as f64 + 1.0, n));
    }
    Err(Error::SeriesNotConverged { tolerance: cfg.tolerance, max_terms: cfg.max_terms })
}

pub fn series_s(n: u32, cfg: &SeriesConfig) -> Result<f64> {
    series_s_bounded(n, cfg).map(|s| s.value)
}

/// `ζ(s) = η(s) / (1 - 2^{1-s})` with `η(s) = Σ_{k>=1} (-1)^{k+1} k^{-s}`.
/// The eta tolerance is tightened by the same factor so the bound on `ζ`
/// meets `cfg.tolerance`.
pub fn series_zeta_bounded(s: u32, cfg: &SeriesConfig) -> Result<SeriesValue> {
    if s < 2 {
        return Err(Error::IndexOutOfRange { what: "series zeta(s)", n: s, min: 2 });
    }
    cfg.validate()?;
    let factor = 1.0 - 2f64.powi(1 - s as i32);
    let eta = alternating(|k| inv_pow(k as f64 + 1.0, s), cfg.tolerance * factor, cfg.max_terms)?;
    Ok(SeriesValue { value: eta.value / factor, error_bound: eta.error_bound / factor, terms: eta.terms })
}

pub fn series_zeta(s: u32, cfg: &SeriesConfig) -> Result<f64> {
    series_zeta_bounded(s, cfg).map(|v| v.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn zeta_reference_values() {
        let cfg = SeriesConfig::default();
        // ζ(2) = π²/6, ζ(4) = π⁴/90 in closed form; ζ(3) is Apéry's constant.
        let cases = [(2, PI * PI / 6.0), (3, 1.202_056_903_159_594_3), (4, PI.powi(4) / 90.0)];
        for (s, expect) in cases {
            let got = series_zeta(s, &cfg).unwrap();
            assert!((got - expect).abs() < 1e-12, "s={s}: {got} vs {expect}");
        }
    }

    #[test]
    fn s_reference_values() {
        let cfg = SeriesConfig::default();
        let cases = [(2, PI * PI / 8.0), (3, PI.powi(3) / 32.0), (4, PI.powi(4) / 96.0)];
        for (n, expect) in cases {
            let got = series_s_bounded(n, &cfg).unwrap();
            assert!(got.error_bound <= cfg.tolerance);
            assert!((got.value - expect).abs() < 2.0 * cfg.tolerance, "n={n}: {}", got.value);
        }
    }

    #[test]
    fn leibniz_series_through_the_alternating_helper() {
        let v = alternating(|j| 1.0 / (2.0 * j as f64 + 1.0), 1e-12, 10_000_000).unwrap();
        assert!((v.value - PI / 4.0).abs() < 1e-12);
    }

    #[test]
    fn errors() {
        let cfg = SeriesConfig::default();
        assert!(series_s(1, &cfg).is_err());
        assert!(series_zeta(1, &cfg).is_err());
        let starved = SeriesConfig { tolerance: 1e-15, max_terms: 10 };
        assert!(matches!(series_zeta(2, &starved), Err(Error::SeriesNotConverged { .. })));
        assert!(matches!(series_s(2, &starved), Err(Error::SeriesNotConverged { .. })));
        let bad = SeriesConfig { tolerance: 0.0, max_terms: 10 };
        assert!(series_zeta(3, &bad).is_err());
    }
}
