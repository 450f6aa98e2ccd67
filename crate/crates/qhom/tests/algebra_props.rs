//! Property tests for the canonical-form algebra: ring laws over F2, square
//! roots, the decomposable split, and the print/parse round trip.

use proptest::prelude::*;

use qhom::dyer_lashof::{admissibilize, DLWord};
use qhom::f2poly::ClassExpr;
use qhom::loopspace::SpaceSpec;

fn model() -> SpaceSpec {
    SpaceSpec::from_toml_str(
        r#"
        name = "props"
        variant = "free"
        loops = "inf"
        [[generators]]
        name = "x"
        degree = 2
        [[generators]]
        name = "y"
        degree = 3
        "#,
    )
    .unwrap()
}

fn word_class() -> impl Strategy<Value = ClassExpr> {
    (
        prop::sample::select(vec!["x", "y"]),
        prop::collection::vec(1u32..=12, 0..=2),
    )
        .prop_map(|(name, indices)| {
            let gen = model().generator(name).unwrap().clone();
            admissibilize(&DLWord::new(gen, indices))
        })
}

fn expr() -> impl Strategy<Value = ClassExpr> {
    prop::collection::vec(prop::collection::vec(word_class(), 1..=3), 0..=3).prop_map(|terms| {
        let mut out = ClassExpr::zero();
        for factors in terms {
            let mut term = ClassExpr::unit();
            for f in factors {
                term = term.mul(&f);
            }
            out = out.add(&term);
        }
        out
    })
}

proptest! {
    #[test]
    fn addition_is_involutive(a in expr()) {
        prop_assert!(a.add(&a).is_zero());
    }

    #[test]
    fn multiplication_commutes(a in expr(), b in expr()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn multiplication_associates(a in expr(), b in expr(), c in expr()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn multiplication_distributes(a in expr(), b in expr(), c in expr()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn square_root_inverts_squaring(a in expr()) {
        prop_assert_eq!(a.mul(&a).square_root(), Some(a));
    }

    #[test]
    fn decomposable_split_is_a_splitting(a in expr()) {
        let (dec, ind) = a.split_decomposable();
        prop_assert_eq!(dec.add(&ind), a);
        let (dd, di) = dec.split_decomposable();
        prop_assert_eq!(dd, dec);
        prop_assert!(di.is_zero());
        let (id, ii) = ind.split_decomposable();
        prop_assert!(id.is_zero());
        prop_assert_eq!(ii, ind);
    }

    #[test]
    fn printed_form_reparses(a in expr()) {
        let printed = a.to_string();
        let back = model().parse(&printed).unwrap();
        prop_assert_eq!(back, a);
    }
}
