mod common;

use lgtypes::formula::enumerate_formulas;
use lgtypes::random::{random_formula, random_pool, random_signature};
use lgtypes::{Kind, MsFormula, Sort, Term, Var};
use proptest::prelude::*;
use rand::Rng;

fn length(f: &MsFormula) -> usize {
    match f.kind() {
        Kind::Eq(..) => 0,
        Kind::Not(b) | Kind::Exists(_, b) | Kind::Subst(_, b) => length(b) + 1,
        Kind::And(a, b) | Kind::Or(a, b) => length(a) + length(b) + 1,
    }
}

proptest! {
    #![proptest_config(common::config(256))]

    #[test]
    fn random_formulas_are_well_formed(key in any::<u64>()) {
        let mut rng = common::rng(key);
        let sig = random_signature(&mut rng);
        let pool = random_pool(&mut rng, &sig, 3, 2);
        let sort = Sort::numbered("x", rng.gen_range(1..=2));
        if let Some(f) = random_formula(&mut rng, &sort, &sig, &pool, 5, 3) {
            prop_assert!(f.is_well_formed());
            prop_assert_eq!(f.length(), length(&f));
        }
    }

    #[test]
    fn ill_sorted_constructions_are_rejected(n in 1usize..4) {
        let sort = Sort::numbered("x", n);
        let stranger = Var::new("z");
        prop_assert!(MsFormula::eq(sort.clone(), Term::Var(stranger.clone()), Term::Var(Var::indexed("x", 1))).is_err());
        let e = MsFormula::eq(sort.clone(), Term::Var(Var::indexed("x", 1)), Term::Var(Var::indexed("x", n))).unwrap();
        prop_assert!(MsFormula::exists(stranger, e.clone()).is_err());
        let other = MsFormula::eq(Sort::numbered("y", 1), Term::Var(Var::indexed("y", 1)), Term::Var(Var::indexed("y", 1))).unwrap();
        prop_assert!(MsFormula::and(e.clone(), other.clone()).is_err());
        prop_assert!(MsFormula::or(other, e).is_err());
    }
}

proptest! {
    #![proptest_config(common::config(24))]

    #[test]
    fn enumeration_extends_the_shorter_bound(key in any::<u64>(), l in 1usize..=2, t in 0usize..=1) {
        let mut rng = common::rng(key);
        let sig = random_signature(&mut rng);
        let pool = random_pool(&mut rng, &sig, 1, 1);
        let sort = Sort::numbered("x", 1);
        let long: Vec<_> = enumerate_formulas(&sort, &sig, l, t, &pool).take(5_000).collect();
        let short: Vec<_> = enumerate_formulas(&sort, &sig, l - 1, t, &pool).collect();
        prop_assume!(long.len() < 5_000);
        prop_assert!(long.len() >= short.len());
        prop_assert_eq!(&long[..short.len()], &short[..]);
        for f in &long {
            prop_assert!(f.length() <= l && f.term_depth() <= t && f.is_well_formed());
            prop_assert_eq!(f.length(), length(f));
        }
    }
}
