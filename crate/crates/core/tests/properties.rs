//! Randomized invariants of the arithmetic and calculus layers.

use proptest::prelude::*;
use sce_core::arith::is_canonical;
use sce_core::{ExpPoly, GaussianRational, LaurentPoly, Poly, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-200i64..200, 1i64..60).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational()).prop_map(|(re, im)| GaussianRational::new(re, im))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(gaussian(), 0..8).prop_map(Poly::new)
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..5, gaussian()), 0..5).prop_map(LaurentPoly::from_terms)
}

fn exp_poly() -> impl Strategy<Value = ExpPoly> {
    let rate = (-2i64..3, -2i64..3).prop_map(|(a, b)| GaussianRational::new(a.into(), b.into()));
    prop::collection::vec((rate, laurent()), 0..4).prop_map(|terms| {
        terms.into_iter().fold(ExpPoly::zero(), |acc, (r, p)| &acc + &ExpPoly::term(r, p))
    })
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a - &a, Rational::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip().unwrap(), Rational::one());
        }
    }

    #[test]
    fn rational_stays_canonical(a in rational(), b in rational()) {
        for v in [&a + &b, &a - &b, &a * &b] {
            prop_assert!(is_canonical(&v));
        }
        if let Ok(q) = a.checked_div(&b) {
            prop_assert!(is_canonical(&q));
        }
    }

    #[test]
    fn rational_text_round_trip(a in rational()) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn gaussian_field_axioms(a in gaussian(), b in gaussian(), c in gaussian()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a * &a.conj()).re, a.norm_sqr());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip().unwrap(), GaussianRational::one());
        }
    }

    #[test]
    fn derivative_is_linear(p in poly(), q in poly(), k in gaussian()) {
        prop_assert_eq!((&p + &q).derivative(), &p.derivative() + &q.derivative());
        prop_assert_eq!(p.scale(&k).derivative(), p.derivative().scale(&k));
    }

    #[test]
    fn product_rule_and_degree(p in poly(), q in poly()) {
        prop_assert_eq!((&p * &q).derivative(), &(&p.derivative() * &q) + &(&p * &q.derivative()));
        if let (Some(dp), Some(dq)) = (p.degree(), q.degree()) {
            prop_assert_eq!((&p * &q).degree(), Some(dp + dq));
        }
    }

    #[test]
    fn derivative_past_degree_vanishes(p in poly()) {
        let n = p.degree().unwrap_or(0);
        prop_assert!(p.nth_derivative(n + 1).is_zero());
        if !p.is_zero() {
            prop_assert!(!p.nth_derivative(n).is_zero());
        }
    }

    #[test]
    fn scaling_by_i_twice_is_reflection(p in poly()) {
        let i = GaussianRational::i();
        prop_assert_eq!(p.scale_arg(&i).scale_arg(&i), p.scale_arg(&GaussianRational::from_int(-1)));
    }

    #[test]
    fn evaluation_is_a_ring_map(p in poly(), q in poly(), z in gaussian()) {
        prop_assert_eq!((&p * &q).eval(&z), &p.eval(&z) * &q.eval(&z));
        prop_assert_eq!((&p + &q).eval(&z), &p.eval(&z) + &q.eval(&z));
    }

    #[test]
    fn exp_poly_derivative_is_linear(f in exp_poly(), g in exp_poly()) {
        prop_assert_eq!((&f + &g).derivative(), &f.derivative() + &g.derivative());
        prop_assert_eq!((&f * &g).derivative(), &(&f.derivative() * &g) + &(&f * &g.derivative()));
    }

    #[test]
    fn exp_poly_derivative_orders_add(f in exp_poly(), a in 0usize..4, b in 0usize..4) {
        prop_assert_eq!(f.nth_derivative(a + b), f.nth_derivative(a).nth_derivative(b));
    }

    #[test]
    fn exp_poly_sub_self_is_zero(f in exp_poly()) {
        prop_assert!((&f - &f).is_zero());
        prop_assert!(f.rates().all(|r| !f.part(r).is_zero()));
    }
}
