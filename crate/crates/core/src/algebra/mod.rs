//! Exact scalars and polynomials: the substrate for every symbolic step.
//!
//! Text form: rationals print as `p/q` (`q` omitted when 1); polynomials
//! print highest degree first, bivariate ones in graded-lex order with `u`
//! before `v`, e.g. `1/4*u^2*v - 1/2*v`.

mod bivar;
mod poly;
mod rational;

pub use bivar::{BivarPoly, Var};
pub use poly::Poly;
pub use rational::{binomial, factorial, reduced_gcd, Rational};

/// Joins `(coefficient, monomial)` pairs into `a*m1 + b*m2 - ...`.
fn write_terms(terms: impl Iterator<Item = (Rational, String)>) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        match (mono.is_empty(), mag.is_one()) {
            (true, _) => out.push_str(&mag.to_string()),
            (false, true) => out.push_str(&mono),
            (false, false) => {
                out.push_str(&mag.to_string());
                out.push('*');
                out.push_str(&mono);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
