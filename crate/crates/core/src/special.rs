//! Euler polynomials, Bernoulli numbers and Euler numbers, exactly.
//!
//! Euler polynomials come from the translation identity
//! `E_n(x+1) + E_n(x) = 2x^n`, which with the Appell property gives
//!
//! ```text
//! E_n(x) = x^n - 1/2 * sum_{k<n} C(n,k) E_k(x)
//! ```
//!
//! Bernoulli numbers use `sum_{j=0}^{m} C(m+1,j) B_j = 0` with `B_0 = 1`
//! (so `B_1 = -1/2`). The two constructions share nothing, which is what
//! lets [`crate::identities`] cross-check one against the other.
//!
//! Both tables are memoized behind a lock and grow on demand.

use std::sync::{Arc, RwLock};

use crate::algebra::{binomial, Poly, Rational};
use crate::error::{Error, Result};

/// Append-only memo table. A miss extends the table in index order under
/// the write lock, so readers see exactly what a serial run would build.
struct Table<T> {
    rows: RwLock<Vec<Arc<T>>>,
}

impl<T> Table<T> {
    const fn new() -> Self {
        Table { rows: RwLock::new(Vec::new()) }
    }

    fn get_or_extend(&self, n: usize, next: impl Fn(&[Arc<T>]) -> T) -> Arc<T> {
        if let Some(hit) = self.rows.read().expect("memo lock poisoned").get(n) {
            return Arc::clone(hit);
        }
        let mut rows = self.rows.write().expect("memo lock poisoned");
        while rows.len() <= n {
            let value = next(&rows);
            rows.push(Arc::new(value));
        }
        Arc::clone(&rows[n])
    }
}

static EULER_POLYS: Table<Poly> = Table::new();
static BERNOULLI: Table<Rational> = Table::new();

/// `E_n(x)`.
pub fn euler_poly(n: u32) -> Arc<Poly> {
    EULER_POLYS.get_or_extend(n as usize, |prev| {
        let n = prev.len() as u32;
        let mut acc = Poly::zero();
        for (k, ek) in prev.iter().enumerate() {
            acc = &acc + &ek.scale(&Rational::from(binomial(n, k as u32)));
        }
        &Poly::monomial(Rational::one(), n as usize) - &acc.scale(&Rational::frac(1, 2))
    })
}

/// `B_n`, with `B_1 = -1/2`.
pub fn bernoulli(n: u32) -> Rational {
    let b = BERNOULLI.get_or_extend(n as usize, |prev| {
        let m = prev.len() as u32;
        if m == 0 {
            return Rational::one();
        }
        let s: Rational =
            prev.iter().enumerate().map(|(j, bj)| Rational::from(binomial(m + 1, j as u32)) * bj.as_ref()).sum();
        -s / Rational::from(m as i64 + 1)
    });
    (*b).clone()
}

/// Euler number `E_n = 2^n E_n(1/2)` for even `n`.
pub fn euler_number(n: u32) -> Result<Rational> {
    if n % 2 == 1 {
        return Err(Error::OddEulerIndex(n));
    }
    Ok(Rational::pow2(n as i64) * euler_poly(n).eval(&Rational::frac(1, 2)))
}

/// Everything known about index `n` in one place.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecialValues {
    pub n: u32,
    pub euler_poly: Arc<Poly>,
    pub bernoulli: Rational,
    /// Present for even `n` only.
    pub euler_number: Option<Rational>,
}

impl SpecialValues {
    pub fn new(n: u32) -> Self {
        SpecialValues { n, euler_poly: euler_poly(n), bernoulli: bernoulli(n), euler_number: euler_number(n).ok() }
    }
}
