use std::sync::Arc;

use milnor_core::polyring::{parse_polynomial, Monomial, MonomialOrder, Polynomial};
use milnor_core::{Fbig, Field, QPolynomial, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

fn var_names(n: usize) -> Arc<[String]> {
    ["x", "y", "z", "w", "u", "t"][..n]
        .iter()
        .map(|s| s.to_string())
        .collect()
}

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn poly_with(nvars: usize, max_terms: usize, max_exp: u32) -> impl Strategy<Value = QPolynomial> {
    let term = (prop::collection::vec(0..=max_exp, nvars), rational());
    prop::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
        Polynomial::from_terms(
            var_names(nvars),
            MonomialOrder::DegRevLex,
            terms
                .into_iter()
                .map(|(e, c)| (Monomial::from_exponents(&e), c)),
        )
    })
}

fn triple() -> impl Strategy<Value = (QPolynomial, QPolynomial, QPolynomial)> {
    (1usize..=4).prop_flat_map(|n| (poly_with(n, 6, 4), poly_with(n, 6, 4), poly_with(n, 6, 4)))
}

proptest! {
    #[test]
    fn ring_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn leibniz_rule((a, b, _) in triple(), i in 0usize..4) {
        let i = i % a.nvars();
        let lhs = (&a * &b).partial_derivative(i);
        let rhs = &(&a.partial_derivative(i) * &b) + &(&a * &b.partial_derivative(i));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn prime_field_image_is_a_ring_map((a, b, _) in triple()) {
        let to_fp = |p: &QPolynomial| p.try_convert::<Fbig>().expect("small denominators");
        prop_assert_eq!(to_fp(&(&a * &b)), &to_fp(&a) * &to_fp(&b));
        prop_assert_eq!(to_fp(&(&a + &b)), &to_fp(&a) + &to_fp(&b));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn parse_render_round_trip(p in (1usize..=6).prop_flat_map(|n| poly_with(n, 30, 25))) {
        let vars: Vec<String> = p.vars().to_vec();
        let back = parse_polynomial(&p.to_string(), Some(&vars)).unwrap();
        prop_assert_eq!(back, p);
    }
}

#[test]
fn homogeneous_examples() {
    let f = parse_polynomial("u^25 + w^24*z - x^22*y*z^2", None).unwrap();
    assert_eq!(f.homogeneous_degree().unwrap(), Some(25));
    assert!(!parse_polynomial("x^2 + y", None)
        .unwrap()
        .is_homogeneous()
        .unwrap());
    let g = parse_polynomial("4*y^2 - 3*x^3", None).unwrap();
    assert_eq!(
        g.try_convert::<Fbig>().unwrap().leading_coeff().copied(),
        Some(Fbig::from_i64(-3))
    );
}
