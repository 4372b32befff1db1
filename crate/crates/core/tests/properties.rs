use proptest::prelude::*;
use qflag_core::flagext::{associated_graded, build_relations, star};
use qflag_core::{Coefficient, LaurentPoly, NCPolynomial, Symbol, Word};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i32..=3, -3i64..=3), 0..4).prop_map(|t| LaurentPoly::from_int_terms(&t))
}

fn scalar() -> impl Strategy<Value = Coefficient> {
    (laurent(), laurent()).prop_map(|(n, d)| {
        let d = if d.is_zero() { LaurentPoly::one() } else { d };
        Coefficient::from_ratio(n, d).unwrap()
    })
}

fn coefficient() -> impl Strategy<Value = Coefficient> {
    (scalar(), scalar(), 0usize..4).prop_map(|(a, b, s)| match s {
        3 => a,
        s => &a + &(&b * &Coefficient::symbol(Symbol::ALL[s])),
    })
}

fn poly(max_len: usize) -> impl Strategy<Value = NCPolynomial> {
    prop::collection::vec((prop::collection::vec(0u8..6, max_len), -2i64..=2, -2i32..=2), 0..4).prop_map(|t| {
        NCPolynomial::from_terms(t.into_iter().map(|(w, c, e)| (Word(w), &Coefficient::from(c) * &Coefficient::q_pow(e))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in coefficient(), b in coefficient(), c in coefficient()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Coefficient::one(), a.clone());
    }

    #[test]
    fn canonical_form_is_stable(a in coefficient(), b in scalar()) {
        prop_assert_eq!(a.normalized(), a.clone());
        let x = &a * &b;
        prop_assert_eq!(x.normalized(), x.clone());
        prop_assert_eq!(x.to_string(), x.normalized().to_string());
    }

    #[test]
    fn division_inverts_multiplication(a in coefficient(), b in scalar()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
        prop_assert_eq!((&a * &b).checked_div(&b).unwrap(), a);
    }

    #[test]
    fn normal_form_idempotent_and_linear(x in poly(3), y in poly(3), c in scalar()) {
        let a = build_relations();
        let nx = a.normal_form(&x);
        prop_assert_eq!(a.normal_form(&nx), nx.clone());
        for (w, _) in nx.terms() {
            prop_assert!(a.system().is_irreducible(w));
        }
        let lhs = a.normal_form(&(&x + &y.scale(&c)));
        let rhs = &nx + &a.normal_form(&y).scale(&c);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn graded_product_is_associative(x in poly(1), y in poly(2), z in poly(1)) {
        let a = associated_graded();
        let left = a.wedge(&a.wedge(&x, &y), &z);
        let right = a.wedge(&x, &a.wedge(&y, &z));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn star_is_an_involution_in_degree_two(x in poly(2)) {
        let a = build_relations();
        let nx = a.normal_form(&x);
        prop_assert_eq!(star(&a, &star(&a, &nx)), nx);
    }
}

#[test]
fn relations_are_star_closed() {
    let a = build_relations();
    for r in a.system().rules() {
        assert!(star(&a, &r.relation()).is_zero(), "{}", a.render(&r.relation()));
    }
}
