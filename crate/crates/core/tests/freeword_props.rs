mod common;

use lgtypes::freeword::{
    abelianize, apply_f2_endo, apply_letter_map, freduce, s3_image, semigroup_extend, FWord, Letter, SgWord,
};
use proptest::prelude::*;

fn letters() -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(
        (0u8..2, any::<bool>()).prop_map(|(gen, inverse)| Letter { gen, inverse }),
        0..12,
    )
}

fn word() -> impl Strategy<Value = FWord> {
    letters().prop_map(freduce)
}

fn sg_words(k: usize) -> impl Strategy<Value = Vec<SgWord>> {
    prop::collection::vec(
        prop::collection::vec(0..k, 1..=4).prop_map(|l| SgWord::new(l).unwrap()),
        0..=3,
    )
}

proptest! {
    #![proptest_config(common::config(512))]

    #[test]
    fn reduction_is_idempotent(ls in letters()) {
        let w = freduce(ls);
        prop_assert!(w.letters().windows(2).all(|p| p[1] != p[0].inv()));
        prop_assert_eq!(freduce(w.letters().iter().copied()), w);
    }

    #[test]
    fn words_form_a_group(u in word(), v in word(), w in word()) {
        prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
        prop_assert_eq!(&u * &u.inverse(), FWord::identity());
        prop_assert_eq!(u.inverse().inverse(), u);
    }

    #[test]
    fn s3_image_is_a_homomorphism(u in word(), v in word()) {
        prop_assert_eq!(s3_image(&(&u * &v)), s3_image(&u) * s3_image(&v));
        prop_assert_eq!(s3_image(&u.inverse()), s3_image(&u).inverse());
    }

    #[test]
    fn abelianization_is_additive(u in word(), v in word()) {
        let (a, b) = (abelianize(&u), abelianize(&v));
        prop_assert_eq!(abelianize(&(&u * &v)), (a.0 + b.0, a.1 + b.1));
        prop_assert_eq!(abelianize(&u.inverse()), (-a.0, -a.1));
    }

    #[test]
    fn endomorphisms_respect_products(w1 in word(), w2 in word(), u in word(), v in word()) {
        let phi = |x: &FWord| apply_f2_endo((&w1, &w2), x);
        prop_assert_eq!(phi(&(&u * &v)), &phi(&u) * &phi(&v));
        prop_assert_eq!(phi(&FWord::generator(0)), w1.clone());
    }

    #[test]
    fn semigroup_extension_maps_words_both_ways(
        (k, a, alpha) in (1usize..=5).prop_flat_map(|k| (Just(k), sg_words(k), Just((0..k).collect::<Vec<_>>()).prop_shuffle()))
    ) {
        let b: Vec<SgWord> = a.iter().map(|w| apply_letter_map(&alpha, w)).collect();
        let got = semigroup_extend(k, &a, &b).unwrap();
        let mut inverse = vec![0; k];
        for (i, &y) in got.iter().enumerate() {
            inverse[y] = i;
        }
        for (u, v) in a.iter().zip(&b) {
            prop_assert_eq!(&apply_letter_map(&got, u), v);
            prop_assert_eq!(&apply_letter_map(&inverse, v), u);
        }
    }

    #[test]
    fn semigroup_extension_agrees_with_bijection_search(
        (k, a, b) in (1usize..=4).prop_flat_map(|k| (Just(k), sg_words(k), sg_words(k)))
    ) {
        let b: Vec<SgWord> = b.into_iter().take(a.len()).collect();
        let a: Vec<SgWord> = a.into_iter().take(b.len()).collect();
        let exists = itertools::Itertools::permutations(0..k, k)
            .any(|alpha| a.iter().zip(&b).all(|(u, v)| &apply_letter_map(&alpha, u) == v));
        prop_assert_eq!(semigroup_extend(k, &a, &b).is_ok(), exists);
    }
}
