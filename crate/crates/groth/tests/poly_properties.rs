//! Property tests for the exact polynomial layer: ring axioms, canonical
//! forms, the formal-group operations, and the β-grading.

use proptest::prelude::*;

use groth::poly::{Family, LocPoly, Mono, Poly, VarId};

fn arb_var() -> impl Strategy<Value = VarId> {
    (prop_oneof![Just(Family::A), Just(Family::B), Just(Family::X)], 1u32..=3)
        .prop_map(|(f, i)| VarId::new(f, i))
}

fn arb_mono() -> impl Strategy<Value = Mono> {
    (0u32..=2, proptest::collection::btree_map(arb_var(), 1u32..=2, 0..3))
        .prop_map(|(beta, vars)| Mono::from_exps(beta, vars.into_iter().collect()))
}

fn arb_poly() -> impl Strategy<Value = Poly> {
    proptest::collection::vec((arb_mono(), -4i64..=4), 0..5)
        .prop_map(|terms| Poly::from_terms(terms.into_iter().map(|(m, c)| (m, c.into()))))
}

fn arb_locpoly() -> impl Strategy<Value = LocPoly> {
    (arb_poly(), proptest::collection::btree_map(arb_var(), 1u32..=1, 0..2))
        .prop_map(|(num, den)| LocPoly::new(num, den))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &Poly::one(), p.clone());
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn locpoly_ring_axioms(p in arb_locpoly(), q in arb_locpoly(), r in arb_locpoly()) {
        prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn oplus_is_assoc_commut(p in arb_locpoly(), q in arb_locpoly(), r in arb_locpoly()) {
        prop_assert_eq!(p.oplus(&q), q.oplus(&p));
        prop_assert_eq!(p.oplus(&q).oplus(&r), p.oplus(&q.oplus(&r)));
        prop_assert_eq!(LocPoly::zero().oplus(&p), p);
    }

    #[test]
    fn bar_involution_and_cancellation(v in arb_var()) {
        let b = LocPoly::bar(v);
        prop_assert!(LocPoly::var(v).oplus(&b).is_zero());
        let bb = LocPoly::zero().ominus(&b).unwrap();
        prop_assert_eq!(bb, LocPoly::var(v));
    }

    #[test]
    fn canonicalization_is_idempotent(p in arb_locpoly()) {
        // rebuilding from the stored parts must be a fixed point
        let again = LocPoly::new(p.num().clone(), p.den().clone());
        prop_assert_eq!(&again, &p);
        // multiplying num and den by the same unit cancels back
        for &v in again.num().vars_present().iter().take(1) {
            let unit = Poly::one_plus_beta(&Poly::var(v));
            let mut den = p.den().clone();
            *den.entry(v).or_insert(0) += 1;
            let blown = LocPoly::new(&(p.num().clone()) * &unit, den);
            prop_assert_eq!(blown, p.clone());
        }
    }

    #[test]
    fn grading_is_additive(p in arb_mono(), q in arb_mono()) {
        let pp = Poly::from_term(p.clone(), 2.into());
        let qq = Poly::from_term(q.clone(), 3.into());
        let prod = &pp * &qq;
        prop_assert_eq!(
            prod.homogeneous_grade(),
            Some(p.grade() + q.grade())
        );
    }

    #[test]
    fn exact_division_recovers_factor(p in arb_poly(), q in arb_poly()) {
        prop_assume!(!q.is_zero());
        let prod = &p * &q;
        let back = prod.exact_div(&q).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn text_and_json_roundtrip(p in arb_poly()) {
        let text = p.to_string();
        let parsed: Poly = text.parse().unwrap();
        prop_assert_eq!(&parsed, &p);
        let json = serde_json::to_string(&p.to_json()).unwrap();
        let back: groth::poly::PolyJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(Poly::from_json(&back).unwrap(), p);
    }
}
