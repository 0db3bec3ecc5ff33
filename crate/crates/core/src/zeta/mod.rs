//! Polytope volumes, exact zeta constants and their numeric cross-checks.
//!
//! Exact results are [`ExactConstant`]s, a rational times a power of `π`,
//! and stay exact until [`ExactConstant::to_f64`]. Numeric routes
//! ([`quadrature`], [`series`]) work in double precision throughout.

pub mod quadrature;
pub mod series;
mod sum;

use std::f64::consts::PI;
use std::fmt;

use crate::algebra::{factorial, Rational};
use crate::error::{Error, Result};
use crate::kernel::{closed_form, PiecewiseKernel};
use crate::special::{bernoulli, euler_number, euler_poly};

pub use quadrature::{zeta_odd_logtan, zeta_odd_quadrature, EndpointHandling, GaussLegendre, QuadratureConfig};
pub use series::{series_s, series_zeta, SeriesConfig, SeriesValue};
pub use sum::NeumaierSum;

/// `rational_part * π^pi_power`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactConstant {
    pub rational_part: Rational,
    pub pi_power: u32,
}

impl ExactConstant {
    pub fn new(rational_part: Rational, pi_power: u32) -> Self {
        ExactConstant { rational_part, pi_power }
    }

    /// Double rendering: the rational part is rounded once to the nearest
    /// double and multiplied by `π.powi(pi_power)` with `π` itself the
    /// nearest double, so the relative error is a few ulps times
    /// `pi_power + 1`.
    pub fn to_f64(&self) -> f64 {
        self.rational_part.to_f64() * PI.powi(self.pi_power as i32)
    }
}

impl fmt::Display for ExactConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_power {
            0 => write!(f, "{}", self.rational_part),
            1 => write!(f, "({})*pi", self.rational_part),
            p => write!(f, "({})*pi^{p}", self.rational_part),
        }
    }
}

/// How [`delta`] obtains `δ_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaMethod {
    /// `∫_0^1 K_n(u, u) du` of the closed-form kernel.
    Trace,
    /// `(-1)^m 2^{2m-2}/(2m-1)! E_{2m-1}(0)` for `n = 2m`,
    /// `(-1)^m 2^{2m-1}/(2m)! E_{2m}(1/2)` for `n = 2m + 1`.
    Closed,
}

fn at_least(what: &'static str, n: u32, min: u32) -> Result<()> {
    if n < min {
        return Err(Error::IndexOutOfRange { what, n, min });
    }
    Ok(())
}

/// `δ_n = Vol(Δ_n)`. Only `n >= 2` is accepted: the identity
/// `S(n) = (π/2)^n δ_n` that gives the volume its meaning holds from 2 on.
pub fn delta(n: u32, method: DeltaMethod) -> Result<Rational> {
    at_least("delta", n, 2)?;
    match method {
        DeltaMethod::Trace => Ok(closed_form(n)?.trace()),
        DeltaMethod::Closed => {
            let c = PiecewiseKernel::prefactor(n)?;
            let e = euler_poly(n - 1);
            Ok(if n % 2 == 0 { c * e.coeff(0) } else { c * e.eval(&Rational::frac(1, 2)) })
        }
    }
}

/// `S(n) = (π/2)^n δ_n`.
pub fn s_value(n: u32) -> Result<ExactConstant> {
    let d = delta(n, DeltaMethod::Closed)?;
    Ok(ExactConstant::new(d * Rational::pow2(-(n as i64)), n))
}

/// `ζ(2n) = (-1)^{n+1} 2^{2n-1}/(2n)! B_{2n} π^{2n}`.
pub fn zeta_even(n: u32) -> Result<ExactConstant> {
    at_least("zeta_even", n, 1)?;
    let r = Rational::sign_pow(n as u64 + 1) * Rational::pow2(2 * n as i64 - 1) / Rational::from(factorial(2 * n))
        * bernoulli(2 * n);
    Ok(ExactConstant::new(r, 2 * n))
}

/// `S(2n+1) = (-1)^n / (2 (2n)!) (π/2)^{2n+1} E_{2n}`.
///
/// `n = 0` is accepted and yields `S(1) = π/4`, the Leibniz sum, which lies
/// outside the polytope-volume range; see [`s_odd_in_volume_range`].
pub fn s_odd(n: u32) -> Result<ExactConstant> {
    let r = Rational::sign_pow(n as u64) / (Rational::from(2) * Rational::from(factorial(2 * n)))
        * Rational::pow2(-(2 * n as i64 + 1))
        * euler_number(2 * n)?;
    Ok(ExactConstant::new(r, 2 * n + 1))
}

/// Whether `S(2n+1)` is also a polytope volume, i.e. `2n + 1 >= 2`.
pub fn s_odd_in_volume_range(n: u32) -> bool {
    n >= 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn delta_values() {
        for method in [DeltaMethod::Trace, DeltaMethod::Closed] {
            assert_eq!(delta(2, method).unwrap(), q(1, 2));
            assert_eq!(delta(3, method).unwrap(), q(1, 4));
            assert_eq!(delta(4, method).unwrap(), q(1, 6));
            assert_eq!(delta(5, method).unwrap(), q(5, 48));
        }
        assert!(matches!(delta(1, DeltaMethod::Trace), Err(Error::IndexOutOfRange { n: 1, min: 2, .. })));
        assert!(delta(0, DeltaMethod::Closed).is_err());
    }

    #[test]
    fn delta_routes_agree() {
        for n in 2..=12 {
            assert_eq!(delta(n, DeltaMethod::Trace).unwrap(), delta(n, DeltaMethod::Closed).unwrap(), "n={n}");
        }
    }

    #[test]
    fn s_values() {
        assert_eq!(s_value(2).unwrap(), ExactConstant::new(q(1, 8), 2));
        assert_eq!(s_value(3).unwrap(), ExactConstant::new(q(1, 32), 3));
        assert_eq!(s_value(4).unwrap(), ExactConstant::new(q(1, 96), 4));
        assert!(s_value(1).is_err());
    }

    #[test]
    fn even_zeta_values() {
        assert_eq!(zeta_even(1).unwrap(), ExactConstant::new(q(1, 6), 2));
        assert_eq!(zeta_even(2).unwrap(), ExactConstant::new(q(1, 90), 4));
        assert_eq!(zeta_even(3).unwrap(), ExactConstant::new(q(1, 945), 6));
        assert!(zeta_even(0).is_err());
        assert!((zeta_even(3).unwrap().to_f64() - 1.017_343_061_984_449).abs() < 1e-12);
    }

    #[test]
    fn odd_s_values() {
        assert_eq!(s_odd(0).unwrap(), ExactConstant::new(q(1, 4), 1));
        assert_eq!(s_odd(1).unwrap(), ExactConstant::new(q(1, 32), 3));
        assert_eq!(s_odd(2).unwrap(), ExactConstant::new(q(5, 1536), 5));
        assert!(!s_odd_in_volume_range(0));
        assert!(s_odd_in_volume_range(1));
    }

    #[test]
    fn exact_route_agreement() {
        for n in 1..=6u32 {
            let s = s_value(2 * n).unwrap();
            let z = zeta_even(n).unwrap();
            let factor = Rational::one() - Rational::pow2(-(2 * n as i64));
            assert_eq!(s.rational_part, factor * z.rational_part, "n={n}");
            assert_eq!(s.pi_power, z.pi_power);
        }
        for n in 1..=5 {
            assert_eq!(s_value(2 * n + 1).unwrap(), s_odd(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn display() {
        assert_eq!(zeta_even(1).unwrap().to_string(), "(1/6)*pi^2");
        assert_eq!(s_odd(0).unwrap().to_string(), "(1/4)*pi");
    }
}
