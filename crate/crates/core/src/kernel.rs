//! Kernels `K_n(u, v)` of the operator `(Tf)(u) = ∫_0^{1-u} f(v) dv` and its
//! powers.
//!
//! Every `K_n` is a pair of polynomials glued along one line: `u = v` for
//! even `n`, `u + v = 1` for odd `n`. Two independent constructions exist:
//!
//! * [`PiecewiseKernel::closed_form`] writes the branches down from Euler
//!   polynomials;
//! * [`PiecewiseKernel::recurrence_step`] integrates `K_1(u, t) K_n(t, v)`
//!   over `t` symbolically.
//!
//! Equality of the two for every order is the central check of this crate.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};
use std::time::{Duration, Instant};

use crate::algebra::{factorial, BivarPoly, Poly, Rational, Var};
use crate::error::{Error, Result};
use crate::special::euler_poly;

/// Default highest order exercised by the exact suites.
pub const DEFAULT_MAX_ORDER: u32 = 12;

/// Line along which the two branches meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Split {
    /// `u - v = 0`, even orders.
    Diagonal,
    /// `u + v - 1 = 0`, odd orders.
    AntiDiagonal,
}

impl Split {
    pub fn for_order(order: u32) -> Split {
        if order % 2 == 0 {
            Split::Diagonal
        } else {
            Split::AntiDiagonal
        }
    }

    /// The split expression `s(u, v)`; `branch_le` holds where `s <= 0`.
    pub fn expression(self, u: &Rational, v: &Rational) -> Rational {
        match self {
            Split::Diagonal => u - v,
            Split::AntiDiagonal => u + v - Rational::one(),
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Split::Diagonal => "u = v",
            Split::AntiDiagonal => "u + v = 1",
        }
    }
}

/// `K_n` as two exact polynomial branches.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiecewiseKernel {
    order: u32,
    split: Split,
    branch_le: BivarPoly,
    branch_ge: BivarPoly,
}

static CLOSED_FORMS: RwLock<Option<HashMap<u32, Arc<PiecewiseKernel>>>> = RwLock::new(None);

/// Memoized [`PiecewiseKernel::closed_form`].
pub fn closed_form(n: u32) -> Result<Arc<PiecewiseKernel>> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    if let Some(k) = CLOSED_FORMS.read().expect("kernel cache poisoned").as_ref().and_then(|m| m.get(&n)) {
        return Ok(Arc::clone(k));
    }
    let built = Arc::new(PiecewiseKernel::closed_form(n)?);
    let mut guard = CLOSED_FORMS.write().expect("kernel cache poisoned");
    let entry = guard.get_or_insert_with(HashMap::new).entry(n).or_insert(built);
    Ok(Arc::clone(entry))
}

impl PiecewiseKernel {
    pub fn new(order: u32, branch_le: BivarPoly, branch_ge: BivarPoly) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(PiecewiseKernel { order, split: Split::for_order(order), branch_le, branch_ge })
    }

    /// `K_1(u, v) = θ(1 - u - v)`.
    pub fn first() -> Self {
        PiecewiseKernel {
            order: 1,
            split: Split::AntiDiagonal,
            branch_le: BivarPoly::one(),
            branch_ge: BivarPoly::zero(),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn split(&self) -> Split {
        self.split
    }

    pub fn branch_le(&self) -> &BivarPoly {
        &self.branch_le
    }

    pub fn branch_ge(&self) -> &BivarPoly {
        &self.branch_ge
    }

    /// Scalar in front of the Euler-polynomial bracket: `(-1)^m 2^{2m-2}/(2m-1)!`
    /// for `n = 2m`, `(-1)^m 2^{2m-1}/(2m)!` for `n = 2m + 1`.
    pub fn prefactor(n: u32) -> Result<Rational> {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        let m = n / 2;
        let sign = Rational::sign_pow(m as u64);
        let (exp, fact) =
            if n % 2 == 0 { (2 * m as i64 - 2, factorial(2 * m - 1)) } else { (2 * m as i64 - 1, factorial(2 * m)) };
        Ok(sign * Rational::pow2(exp) / Rational::from(fact))
    }

    /// Builds `K_n` directly from the Euler-polynomial formulas.
    ///
    /// Even `n = 2m`, with `E = E_{2m-1}`:
    /// `u >= v`: `c [E((u+v)/2) + E((u-v)/2)]`,
    /// `u <= v`: `c [E((u+v)/2) + E((v-u)/2)]`.
    ///
    /// Odd `n = 2m + 1`, with `E = E_{2m}`:
    /// `u + v <= 1`: `c [E((1-u+v)/2) + E((1-u-v)/2)]`,
    /// `u + v >= 1`: `c [E((1-u+v)/2) - E((u+v-1)/2)]`.
    pub fn closed_form(n: u32) -> Result<Self> {
        let c = Self::prefactor(n)?;
        let half = Rational::frac(1, 2);
        let mhalf = -&half;
        let zero = Rational::zero();
        let (le, ge) = if n % 2 == 0 {
            let e = euler_poly(n - 1);
            let sum = e.compose_affine(&half, &half, &zero);
            let u_minus_v = e.compose_affine(&half, &mhalf, &zero);
            let v_minus_u = e.compose_affine(&mhalf, &half, &zero);
            (&sum + &v_minus_u, &sum + &u_minus_v)
        } else {
            let e = euler_poly(n - 1);
            let shifted = e.compose_affine(&mhalf, &half, &half);
            let inside = e.compose_affine(&mhalf, &mhalf, &half);
            let outside = e.compose_affine(&half, &half, &mhalf);
            (&shifted + &inside, &shifted - &outside)
        };
        Self::new(n, le.scale(&c), ge.scale(&c))
    }

    /// `K_{n+1}(u, v) = ∫_0^{1-u} K_n(t, v) dt`, integrated exactly.
    ///
    /// The inner kernel changes branch at `t = v` (even `n`) or `t = 1 - v`
    /// (odd `n`). Whether that breakpoint falls inside `[0, 1 - u]` depends
    /// on which side of the new split line `(u, v)` lies, which is why the
    /// split orientation flips with every step.
    pub fn recurrence_step(&self) -> PiecewiseKernel {
        let zero = Rational::zero();
        let one = Rational::one();
        let minus_one = -&one;
        // Integration bounds for t, as affine forms (a_u, a_v, c) in (u, v).
        let t_zero = (&zero, &zero, &zero);
        let t_one_minus_u = (&minus_one, &zero, &one);
        let t_v = (&zero, &one, &zero);
        let t_one_minus_v = (&zero, &minus_one, &one);

        // The branches are polynomials in (t, v) stored in the (u, v) slots;
        // integrating over the first slot and substituting bounds that
        // mention u yields a polynomial in the new (u, v).
        let le = &self.branch_le;
        let ge = &self.branch_ge;
        let (new_le, new_ge) = match self.split {
            Split::Diagonal => {
                // Inner branch changes at t = v.
                // u + v >= 1: the whole range [0, 1-u] has t <= v, only the
                // lower branch contributes.
                let outside = le.integrate_between(Var::U, t_zero, t_one_minus_u);
                // u + v <= 1: [0, v] on the lower branch, [v, 1-u] on the upper.
                let inside =
                    &le.integrate_between(Var::U, t_zero, t_v) + &ge.integrate_between(Var::U, t_v, t_one_minus_u);
                (inside, outside)
            }
            Split::AntiDiagonal => {
                // Inner branch changes at t = 1 - v.
                // u >= v: 1-u <= 1-v, so all of [0, 1-u] sits below the
                // breakpoint.
                let above = le.integrate_between(Var::U, t_zero, t_one_minus_u);
                // u <= v: [0, 1-v] on the lower branch, [1-v, 1-u] on the upper.
                let below = &le.integrate_between(Var::U, t_zero, t_one_minus_v)
                    + &ge.integrate_between(Var::U, t_one_minus_v, t_one_minus_u);
                (below, above)
            }
        };
        PiecewiseKernel {
            order: self.order + 1,
            split: Split::for_order(self.order + 1),
            branch_le: new_le,
            branch_ge: new_ge,
        }
    }

    /// `K_n(u, v)` with `θ(0) = 1/2`: on the split line the two branches are
    /// averaged.
    pub fn eval(&self, u: &Rational, v: &Rational) -> Result<Rational> {
        let unit = |x: &Rational| !x.is_negative() && x <= &Rational::one();
        if !unit(u) || !unit(v) {
            return Err(Error::OutsideUnitSquare { u: u.to_string(), v: v.to_string() });
        }
        let s = self.split.expression(u, v);
        Ok(if s.is_negative() {
            self.branch_le.eval(u, v)
        } else if s.is_zero() {
            (self.branch_le.eval(u, v) + self.branch_ge.eval(u, v)) * Rational::frac(1, 2)
        } else {
            self.branch_ge.eval(u, v)
        })
    }

    /// `K(u, u)` as two polynomials in `u`: the first holds for
    /// `u <= breakpoint`, the second above it. The breakpoint is where the
    /// diagonal meets the split line (`1/2` for odd orders; for even orders
    /// the whole diagonal is the split line and both pieces are returned).
    pub fn diagonal(&self) -> (Poly, Poly, Rational) {
        let lo = self.branch_le.diagonal();
        let hi = self.branch_ge.diagonal();
        let bp = match self.split {
            Split::Diagonal => Rational::zero(),
            Split::AntiDiagonal => Rational::frac(1, 2),
        };
        (lo, hi, bp)
    }

    /// `∫_0^1 K(u, u) du`, exactly.
    pub fn trace(&self) -> Rational {
        let zero = Rational::zero();
        let one = Rational::one();
        match self.split {
            // Both branches agree on the diagonal for order >= 2; the average
            // keeps the θ(0) = 1/2 convention meaningful for any input.
            Split::Diagonal => {
                let avg = &self.branch_le.diagonal() + &self.branch_ge.diagonal();
                avg.integrate(&zero, &one) * Rational::frac(1, 2)
            }
            Split::AntiDiagonal => {
                let half = Rational::frac(1, 2);
                self.branch_le.diagonal().integrate(&zero, &half) + self.branch_ge.diagonal().integrate(&half, &one)
            }
        }
    }

    /// Branches agree on the split line.
    pub fn is_continuous(&self) -> bool {
        let (zero, one) = (Rational::zero(), Rational::one());
        let (a, c) = match self.split {
            Split::Diagonal => (one.clone(), zero),
            Split::AntiDiagonal => (-&one, one),
        };
        self.branch_le.eval_substitute(Var::V, &a, &c) == self.branch_ge.eval_substitute(Var::V, &a, &c)
    }

    /// `K(u, v) = K(v, u)` as an exact statement about the branches.
    pub fn is_symmetric(&self) -> bool {
        match self.split {
            Split::Diagonal => self.branch_le.swap() == self.branch_ge,
            Split::AntiDiagonal => self.branch_le.swap() == self.branch_le && self.branch_ge.swap() == self.branch_ge,
        }
    }
}

impl fmt::Display for PiecewiseKernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (le, ge) = match self.split {
            Split::Diagonal => ("u <= v", "u >= v"),
            Split::AntiDiagonal => ("u + v <= 1", "u + v >= 1"),
        };
        writeln!(f, "K_{}: split {}", self.order, self.split.describe())?;
        writeln!(f, "  branch_le [{le}]: {}", self.branch_le)?;
        write!(f, "  branch_ge [{ge}]: {}", self.branch_ge)
    }
}

/// Outcome of comparing `recurrence_step(K_n)` with the closed form of
/// `K_{n+1}`.
#[derive(Clone, Debug)]
pub struct RecurrenceCheck {
    /// Order of the kernel produced, `n + 1`.
    pub order: u32,
    pub passed: bool,
    pub elapsed: Duration,
}

/// Runs the recurrence oracle for produced orders `2..=max_order`.
pub fn verify_recurrence(max_order: u32) -> Result<Vec<RecurrenceCheck>> {
    (2..=max_order)
        .map(|order| {
            let start = Instant::now();
            let prev = PiecewiseKernel::closed_form(order - 1)?;
            let next = PiecewiseKernel::closed_form(order)?;
            let passed = prev.recurrence_step() == next;
            Ok(RecurrenceCheck { order, passed, elapsed: start.elapsed() })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn order_one_is_the_triangle() {
        let k1 = PiecewiseKernel::closed_form(1).unwrap();
        assert_eq!(k1, PiecewiseKernel::first());
        assert_eq!(k1.split(), Split::AntiDiagonal);
        assert_eq!(k1.eval(&q(1, 5), &q(3, 10)).unwrap(), q(1, 1));
        assert_eq!(k1.eval(&q(1, 2), &q(1, 2)).unwrap(), q(1, 2));
        assert_eq!(k1.eval(&q(3, 4), &q(1, 2)).unwrap(), q(0, 1));
    }

    #[test]
    fn order_two_by_hand() {
        // K_2 = (1 - v) θ(v - u) + (1 - u) θ(u - v)
        let k2 = PiecewiseKernel::closed_form(2).unwrap();
        assert_eq!(k2.split(), Split::Diagonal);
        assert_eq!(k2.branch_le().to_string(), "-v + 1");
        assert_eq!(k2.branch_ge().to_string(), "-u + 1");
        assert_eq!(k2.eval(&q(1, 4), &q(3, 4)).unwrap(), q(1, 4));
    }

    #[test]
    fn zero_order_rejected() {
        assert_eq!(PiecewiseKernel::closed_form(0), Err(Error::ZeroOrder));
        assert!(closed_form(0).is_err());
    }

    #[test]
    fn eval_domain() {
        let k = PiecewiseKernel::closed_form(3).unwrap();
        assert!(k.eval(&q(-1, 10), &q(1, 2)).is_err());
        assert!(k.eval(&q(1, 2), &q(11, 10)).is_err());
        assert!(k.eval(&q(1, 1), &q(0, 1)).is_ok());
    }

    // K_2(t, 0) = 1 - t, so K_3(0, 0) = ∫_0^1 (1 - t) dt = 1/2.
    #[test]
    fn order_three_at_origin() {
        let k3 = PiecewiseKernel::closed_form(3).unwrap();
        assert_eq!(k3.eval(&q(0, 1), &q(0, 1)).unwrap(), q(1, 2));
        let via_recurrence = PiecewiseKernel::first().recurrence_step().recurrence_step();
        assert_eq!(via_recurrence.eval(&q(0, 1), &q(0, 1)).unwrap(), q(1, 2));
    }

    #[test]
    fn first_recurrence_steps() {
        let k1 = PiecewiseKernel::first();
        assert_eq!(k1.recurrence_step(), PiecewiseKernel::closed_form(2).unwrap());
        assert_eq!(
            PiecewiseKernel::closed_form(2).unwrap().recurrence_step(),
            PiecewiseKernel::closed_form(3).unwrap()
        );
    }

    #[test]
    fn small_traces() {
        let tr = |n| PiecewiseKernel::closed_form(n).unwrap().trace();
        assert_eq!(tr(1), q(1, 2));
        assert_eq!(tr(2), q(1, 2));
        assert_eq!(tr(3), q(1, 4));
        assert_eq!(tr(4), q(1, 6));
        assert_eq!(tr(5), q(5, 48));
    }

    #[test]
    fn memo_cache_returns_same_kernel() {
        let a = closed_form(7).unwrap();
        let b = closed_form(7).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(*a, PiecewiseKernel::closed_form(7).unwrap());
    }

    #[test]
    fn display_lists_split_and_branches() {
        let s = PiecewiseKernel::first().to_string();
        assert!(s.contains("split u + v = 1"));
        assert!(s.contains("branch_le [u + v <= 1]: 1"));
        assert!(s.contains("branch_ge [u + v >= 1]: 0"));
    }
}
