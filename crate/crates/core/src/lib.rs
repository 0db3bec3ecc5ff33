//! Exact kernels of the operator `(Tf)(u) = ∫_0^{1-u} f(v) dv` on `L^2(0,1)`,
//! the volumes `δ_n` of the cyclic polytopes
//! `{u_i > 0, u_i + u_{i+1} < 1}` they trace out, and the values of
//! `ζ(2n)`, `ζ(2n+1)` and `S(n) = Σ_k (4k+1)^{-n}` that follow from them.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: exact rationals, univariate and bivariate polynomials;
//! * [`special`]: Euler polynomials, Bernoulli and Euler numbers;
//! * [`kernel`]: closed-form and recurrence-built kernels `K_n(u, v)`;
//! * [`identities`]: the exact identity suite;
//! * [`zeta`]: volumes, exact constants, quadrature and series oracles;
//! * [`mc`]: seeded Monte Carlo estimates over the polytopes.

pub mod algebra;
pub mod error;
pub mod identities;
pub mod kernel;
pub mod mc;
pub mod special;
pub mod zeta;

pub use algebra::{BivarPoly, Poly, Rational, Var};
pub use error::{Error, Result};
pub use kernel::{closed_form, PiecewiseKernel, Split};
pub use mc::{McConfig, McEstimate};
pub use special::{bernoulli, euler_number, euler_poly, SpecialValues};
pub use zeta::{ExactConstant, QuadratureConfig, SeriesConfig};
