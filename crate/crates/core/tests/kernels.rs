use eulerkern::algebra::{BivarPoly, Poly, Rational, Var};
use eulerkern::kernel::{closed_form, verify_recurrence, PiecewiseKernel, Split, DEFAULT_MAX_ORDER};
use eulerkern::special::euler_poly;
use proptest::prelude::*;

/// Brute-force `K_{n+1}(u, v) = ∫_0^{1-u} K_n(t, v) dt` at one rational
/// point, by splitting `[0, 1-u]` at the inner breakpoint and integrating
/// the univariate restriction of each branch. Shares nothing with
/// `recurrence_step` beyond `Poly::integrate`.
fn convolve_at(k: &PiecewiseKernel, u: &Rational, v: &Rational) -> Rational {
    let zero = Rational::zero();
    let one = Rational::one();
    let upper = &one - u;
    let breakpoint = match k.split() {
        Split::Diagonal => v.clone(),
        Split::AntiDiagonal => &one - v,
    };
    let in_t = |b: &BivarPoly| -> Poly { b.eval_substitute(Var::V, &zero, v).to_univariate(Var::U).unwrap() };
    let (lo, hi) = (in_t(k.branch_le()), in_t(k.branch_ge()));
    if breakpoint >= upper {
        lo.integrate(&zero, &upper)
    } else {
        lo.integrate(&zero, &breakpoint) + hi.integrate(&breakpoint, &upper)
    }
}

#[test]
fn recurrence_matches_closed_form_through_default_order() {
    for check in verify_recurrence(DEFAULT_MAX_ORDER + 1).unwrap() {
        assert!(check.passed, "order {}", check.order);
    }
}

#[test]
fn pointwise_convolution_oracle() {
    let pts = [(1, 7), (2, 7), (3, 7), (1, 2), (5, 7), (6, 7)];
    for n in 1..=8 {
        let k = closed_form(n).unwrap();
        let next = closed_form(n + 1).unwrap();
        for &(a, b) in &pts {
            for &(c, d) in &pts {
                let (u, v) = (Rational::frac(a, b), Rational::frac(c, d));
                assert_eq!(convolve_at(&k, &u, &v), next.eval(&u, &v).unwrap(), "n={n} u={u} v={v}");
            }
        }
    }
}

#[test]
fn split_alternates_with_parity() {
    for n in 1..=10 {
        let k = closed_form(n).unwrap();
        let expect = if n % 2 == 0 { Split::Diagonal } else { Split::AntiDiagonal };
        assert_eq!(k.split(), expect);
        assert_eq!(k.recurrence_step().split(), Split::for_order(n + 1));
    }
}

#[test]
fn continuity_from_order_two() {
    for n in 2..=10 {
        assert!(closed_form(n).unwrap().is_continuous(), "n={n}");
    }
}

#[test]
fn even_diagonal_matches_euler_polynomial() {
    for m in 1..=6u32 {
        let k = closed_form(2 * m).unwrap();
        let e = euler_poly(2 * m - 1);
        let c = PiecewiseKernel::prefactor(2 * m).unwrap();
        let expect = (&*e + &Poly::constant(e.coeff(0))).scale(&c);
        assert_eq!(k.diagonal().0, expect);
    }
}

#[test]
fn branches_printed_in_graded_order() {
    let k3 = closed_form(3).unwrap();
    // K_3 below the anti-diagonal: -(E_2((1-u+v)/2) + E_2((1-u-v)/2))
    assert_eq!(k3.branch_le().to_string(), "-1/2*u^2 - 1/2*v^2 + 1/2");
    assert!(k3.to_string().starts_with("K_3: split u + v = 1"));
}

fn unit_rational() -> impl Strategy<Value = Rational> {
    (0i64..=97).prop_map(|k| Rational::frac(k, 97))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn kernels_are_symmetric(u in unit_rational(), v in unit_rational()) {
        for n in 1..=10 {
            let k = closed_form(n).unwrap();
            prop_assert_eq!(k.eval(&u, &v).unwrap(), k.eval(&v, &u).unwrap(), "n={}", n);
        }
    }

    #[test]
    fn kernels_are_nonnegative(u in unit_rational(), v in unit_rational()) {
        // each K_n is an iterated integral of an indicator
        for n in 1..=10 {
            prop_assert!(!closed_form(n).unwrap().eval(&u, &v).unwrap().is_negative());
        }
    }
}
