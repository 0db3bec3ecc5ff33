//! Exact identity checks over Euler polynomials, Bernoulli numbers and the
//! kernels. Each check is a polynomial or rational equality, so a pass is a
//! proof for the indices covered.

use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use crate::algebra::{factorial, Poly, Rational};
use crate::error::Result;
use crate::kernel::closed_form;
use crate::special::{bernoulli, euler_poly};

#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub statement: &'static str,
    pub range: RangeInclusive<u32>,
    /// Indices at which the identity failed.
    pub failures: Vec<u32>,
    pub elapsed: Duration,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check(
    name: &'static str,
    statement: &'static str,
    range: RangeInclusive<u32>,
    holds: impl Fn(u32) -> Result<bool>,
) -> Result<IdentityCheck> {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in range.clone() {
        if !holds(n)? {
            failures.push(n);
        }
    }
    Ok(IdentityCheck { name, statement, range, failures, elapsed: start.elapsed() })
}

fn q(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

/// `E_n'(x) = n E_{n-1}(x)`.
pub fn derivative(n: u32) -> bool {
    euler_poly(n).derivative() == euler_poly(n - 1).scale(&Rational::from(n as i64))
}

/// `E_{2n-1}(x) = E_{2n}'(x) / (2n)`.
pub fn odd_from_even_derivative(n: u32) -> bool {
    let two_n = Rational::from(2 * n as i64);
    *euler_poly(2 * n - 1) == euler_poly(2 * n).derivative().scale(&two_n.recip().unwrap())
}

/// `E_n(1 - x) = (-1)^n E_n(x)`.
pub fn reflection(n: u32) -> bool {
    let e = euler_poly(n);
    e.compose_linear(&q(-1, 1), &q(1, 1)) == e.scale(&Rational::sign_pow(n as u64))
}

/// `E_{2n-1}(0) = -(2/(2n)) (2^{2n} - 1) B_{2n}`.
pub fn odd_value_at_zero(n: u32) -> bool {
    let lhs = euler_poly(2 * n - 1).coeff(0);
    let rhs = -(q(2, 2 * n as i64)) * (Rational::pow2(2 * n as i64) - Rational::one()) * bernoulli(2 * n);
    lhs == rhs
}

/// `E_{2n+1}((1-v)/2) + E_{2n+1}((1+v)/2) = 0` as a polynomial in `v`.
pub fn half_shift_cancellation(n: u32) -> bool {
    let e = euler_poly(2 * n + 1);
    let (zero, half) = (Rational::zero(), q(1, 2));
    let minus = e.compose_affine(&zero, &-&half, &half);
    let plus = e.compose_affine(&zero, &half, &half);
    (&minus + &plus).is_zero()
}

/// `E_{2n}(0) = E_{2n}(1) = 0`.
pub fn even_endpoint_zeros(n: u32) -> bool {
    let e = euler_poly(2 * n);
    e.eval(&Rational::zero()).is_zero() && e.eval(&Rational::one()).is_zero()
}

/// `K_{2n}(u,u) = c_{2n} [E_{2n-1}(u) + E_{2n-1}(0)]`.
pub fn even_kernel_diagonal(n: u32) -> Result<bool> {
    let k = closed_form(2 * n)?;
    let c = crate::kernel::PiecewiseKernel::prefactor(2 * n)?;
    let e = euler_poly(2 * n - 1);
    let expect = (&*e + &Poly::constant(e.coeff(0))).scale(&c);
    let (lo, hi, _) = k.diagonal();
    Ok(lo == expect && hi == expect)
}

/// `K_{2n+1}(u,u) + K_{2n+1}(1-u,1-u) = (-1)^n 2^{2n}/(2n)! E_{2n}(1/2)` for
/// all `u`; below `1/2` the first term uses the lower branch and the second
/// the upper one.
pub fn odd_kernel_constant_sum(n: u32) -> Result<bool> {
    let k = closed_form(2 * n + 1)?;
    let (lo, hi, _) = k.diagonal();
    let flipped_hi = hi.compose_linear(&q(-1, 1), &q(1, 1));
    let flipped_lo = lo.compose_linear(&q(-1, 1), &q(1, 1));
    let c = Rational::sign_pow(n as u64) * Rational::pow2(2 * n as i64) / Rational::from(factorial(2 * n));
    let expect = Poly::constant(c * euler_poly(2 * n).eval(&q(1, 2)));
    Ok(&lo + &flipped_hi == expect && &hi + &flipped_lo == expect)
}

/// `K_{2n}(u,u) - K_{2n}(1-u,1-u) = (-1)^n 2^{2n-1}/(2n)! E_{2n}'(u)`.
pub fn even_kernel_difference(n: u32) -> Result<bool> {
    let k = closed_form(2 * n)?;
    let (diag, _, _) = k.diagonal();
    let lhs = &diag - &diag.compose_linear(&q(-1, 1), &q(1, 1));
    let c = Rational::sign_pow(n as u64) * Rational::pow2(2 * n as i64 - 1) / Rational::from(factorial(2 * n));
    Ok(lhs == euler_poly(2 * n).derivative().scale(&c))
}

/// Swap symmetry `K(u,v) = K(v,u)` at the branch level.
pub fn kernel_symmetry(order: u32) -> Result<bool> {
    Ok(closed_form(order)?.is_symmetric())
}

/// Branches agree on the split line.
pub fn kernel_continuity(order: u32) -> Result<bool> {
    Ok(closed_form(order)?.is_continuous())
}

/// The full suite at the index ranges it is documented for.
pub fn identity_suite() -> Result<Vec<IdentityCheck>> {
    let ok = |f: fn(u32) -> bool| move |n| Ok(f(n));
    Ok(vec![
        check("derivative", "E_n'(x) = n E_{n-1}(x)", 1..=24, ok(derivative))?,
        check("odd-from-even-derivative", "E_{2n-1}(x) = E_{2n}'(x) / (2n)", 1..=12, ok(odd_from_even_derivative))?,
        check("reflection", "E_n(1-x) = (-1)^n E_n(x)", 0..=24, ok(reflection))?,
        check("bernoulli-link", "E_{2n-1}(0) = -(2/(2n)) (2^{2n}-1) B_{2n}", 1..=12, ok(odd_value_at_zero))?,
        check(
            "half-shift-cancellation",
            "E_{2n+1}((1-v)/2) + E_{2n+1}((1+v)/2) = 0",
            0..=11,
            ok(half_shift_cancellation),
        )?,
        check("even-endpoint-zeros", "E_{2n}(0) = E_{2n}(1) = 0", 1..=12, ok(even_endpoint_zeros))?,
        check(
            "even-kernel-diagonal",
            "K_{2n}(u,u) = (-1)^n 2^{2n-2}/(2n-1)! [E_{2n-1}(u) + E_{2n-1}(0)]",
            1..=6,
            even_kernel_diagonal,
        )?,
        check(
            "odd-kernel-constant-sum",
            "K_{2n+1}(u,u) + K_{2n+1}(1-u,1-u) = (-1)^n 2^{2n}/(2n)! E_{2n}(1/2)",
            0..=6,
            odd_kernel_constant_sum,
        )?,
        check(
            "even-kernel-difference",
            "K_{2n}(u,u) - K_{2n}(1-u,1-u) = (-1)^n 2^{2n-1}/(2n)! E_{2n}'(u)",
            1..=6,
            even_kernel_difference,
        )?,
        check("kernel-symmetry", "K_n(u,v) = K_n(v,u)", 1..=10, kernel_symmetry)?,
        check("kernel-continuity", "K_n continuous across its split line", 2..=10, kernel_continuity)?,
    ])
}
