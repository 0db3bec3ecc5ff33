//! Bivariate polynomials in `(u, v)` over the rationals.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::Poly;
use super::rational::Rational;
use super::write_terms;

/// One of the two indeterminates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    U,
    V,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::U => Var::V,
            Var::V => Var::U,
        }
    }
}

/// Sparse polynomial: exponent pair `(i, j)` for `u^i v^j` to a nonzero
/// coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * u^i * v^j`.
    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term((i, j), &c);
        p
    }

    pub fn var(var: Var) -> Self {
        match var {
            Var::U => Self::monomial(Rational::one(), 1, 0),
            Var::V => Self::monomial(Rational::one(), 0, 1),
        }
    }

    /// `a_u*u + a_v*v + c`.
    pub fn affine(a_u: &Rational, a_v: &Rational, c: &Rational) -> Self {
        let mut p = Self::zero();
        p.add_term((1, 0), a_u);
        p.add_term((0, 1), a_v);
        p.add_term((0, 0), c);
        p
    }

    /// Embeds a univariate polynomial as a polynomial in `var`.
    pub fn from_poly(p: &Poly, var: Var) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            let k = k as u32;
            let exps = match var {
                Var::U => (k, 0),
                Var::V => (0, k),
            };
            out.add_term(exps, c);
        }
        out
    }

    fn add_term(&mut self, exps: (u32, u32), c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    /// Nonzero terms in storage order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest exponent of `var`, `None` for the zero polynomial.
    pub fn degree_in(&self, var: Var) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| if var == Var::U { i } else { j }).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn scale(&self, c: &Rational) -> BivarPoly {
        let mut out = Self::zero();
        for (e, a) in self.terms() {
            out.add_term(e, &(a * c));
        }
        out
    }

    /// `(u, v) -> (v, u)`.
    pub fn swap(&self) -> BivarPoly {
        BivarPoly { terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect() }
    }

    pub fn derivative(&self, var: Var) -> BivarPoly {
        let mut out = Self::zero();
        for ((i, j), c) in self.terms() {
            match var {
                Var::U if i > 0 => out.add_term((i - 1, j), &(c * Rational::from(i as i64))),
                Var::V if j > 0 => out.add_term((i, j - 1), &(c * Rational::from(j as i64))),
                _ => {}
            }
        }
        out
    }

    /// Antiderivative in `var` with no `var`-free terms added.
    pub fn antiderivative(&self, var: Var) -> BivarPoly {
        let mut out = Self::zero();
        for ((i, j), c) in self.terms() {
            match var {
                Var::U => out.add_term((i + 1, j), &(c / Rational::from(i as i64 + 1))),
                Var::V => out.add_term((i, j + 1), &(c / Rational::from(j as i64 + 1))),
            }
        }
        out
    }

    /// Replaces `var` by the affine form `a_u*u + a_v*v + c`. The form may
    /// mention `var` itself, e.g. `u := 1 - u`.
    pub fn substitute(&self, var: Var, a_u: &Rational, a_v: &Rational, c: &Rational) -> BivarPoly {
        let form = BivarPoly::affine(a_u, a_v, c);
        let max = self.degree_in(var).unwrap_or(0) as usize;
        let mut powers = Vec::with_capacity(max + 1);
        powers.push(BivarPoly::one());
        for k in 1..=max {
            let next = &powers[k - 1] * &form;
            powers.push(next);
        }
        let mut out = Self::zero();
        for ((i, j), coeff) in self.terms() {
            let (k, rest) = match var {
                Var::U => (i, BivarPoly::monomial(coeff.clone(), 0, j)),
                Var::V => (j, BivarPoly::monomial(coeff.clone(), i, 0)),
            };
            out = &out + &(&rest * &powers[k as usize]);
        }
        out
    }

    /// Replaces `var` by `a*other + c`; the result no longer depends on `var`.
    pub fn eval_substitute(&self, var: Var, a: &Rational, c: &Rational) -> BivarPoly {
        let zero = Rational::zero();
        match var {
            Var::U => self.substitute(var, &zero, a, c),
            Var::V => self.substitute(var, a, &zero, c),
        }
    }

    /// `∫_lower^upper p d(var)` where each bound is an affine form
    /// `(a_u, a_v, c)` in the two variables.
    pub fn integrate_between(
        &self,
        var: Var,
        lower: (&Rational, &Rational, &Rational),
        upper: (&Rational, &Rational, &Rational),
    ) -> BivarPoly {
        let anti = self.antiderivative(var);
        &anti.substitute(var, upper.0, upper.1, upper.2) - &anti.substitute(var, lower.0, lower.1, lower.2)
    }

    pub fn eval(&self, u: &Rational, v: &Rational) -> Rational {
        self.terms().map(|((i, j), c)| c * u.pow(i) * v.pow(j)).sum()
    }

    /// The univariate polynomial `x -> p(su*x + tu, sv*x + tv)`.
    pub fn restrict_to_line(&self, su: &Rational, tu: &Rational, sv: &Rational, tv: &Rational) -> Poly {
        let lu = Poly::from_coeffs(vec![tu.clone(), su.clone()]);
        let lv = Poly::from_coeffs(vec![tv.clone(), sv.clone()]);
        let mut out = Poly::zero();
        for ((i, j), c) in self.terms() {
            let mut t = Poly::constant(c.clone());
            for _ in 0..i {
                t = &t * &lu;
            }
            for _ in 0..j {
                t = &t * &lv;
            }
            out = &out + &t;
        }
        out
    }

    /// `x -> p(x, x)`.
    pub fn diagonal(&self) -> Poly {
        let (one, zero) = (Rational::one(), Rational::zero());
        self.restrict_to_line(&one, &zero, &one, &zero)
    }

    /// Reads a polynomial free of `var.other()` as univariate in `var`.
    /// Returns `None` if the other variable occurs.
    pub fn to_univariate(&self, var: Var) -> Option<Poly> {
        if self.degree_in(var.other()).is_some_and(|d| d > 0) {
            return None;
        }
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for ((i, j), c) in self.terms() {
            coeffs[if var == Var::U { i } else { j } as usize] = c.clone();
        }
        Some(Poly::from_coeffs(coeffs))
    }

    /// Terms in graded-lex order: total degree descending, then `u`
    /// exponent descending.
    pub fn graded_terms(&self) -> Vec<((u32, u32), &Rational)> {
        let mut ts: Vec<_> = self.terms().collect();
        ts.sort_by_key(|&((i, j), _)| (Reverse(i + j), Reverse(i)));
        ts
    }
}

fn monomial_text(i: u32, j: u32) -> String {
    let factor = |name: &str, k: u32| match k {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{k}")),
    };
    [factor("u", i), factor("v", j)].into_iter().flatten().collect::<Vec<_>>().join("*")
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.graded_terms().into_iter().map(|((i, j), c)| (c.clone(), monomial_text(i, j)));
        f.write_str(&write_terms(terms))
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPoly({self})")
    }
}

impl Add for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, &-c);
        }
        out
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for ((i, j), a) in self.terms() {
            for ((k, l), b) in rhs.terms() {
                out.add_term((i + k, j + l), &(a * b));
            }
        }
        out
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        self.scale(&-Rational::one())
    }
}
