mod common;

use lgtypes::random::{random_algebra, random_formula, random_matrix, random_point, random_pool, random_signature};
use lgtypes::text::{parse_algebra, parse_formula, parse_matrix, parse_point, parse_pool, print_algebra, print_pool};
use lgtypes::Sort;
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #![proptest_config(common::config(256))]

    #[test]
    fn algebras_round_trip(key in any::<u64>()) {
        let mut rng = common::rng(key);
        let sig = random_signature(&mut rng);
        let size = rng.gen_range(1..=4);
        let h = random_algebra(&mut rng, &sig, size);
        let text = print_algebra(&h);
        prop_assert_eq!(parse_algebra(&text).unwrap(), h.clone());
        prop_assert_eq!(print_algebra(&h), text);
    }

    #[test]
    fn formulas_and_pools_round_trip(key in any::<u64>()) {
        let mut rng = common::rng(key);
        let sig = random_signature(&mut rng);
        let pool = random_pool(&mut rng, &sig, 3, 2);
        let sort = Sort::numbered("x", rng.gen_range(1..=2));
        let u = random_formula(&mut rng, &sort, &sig, &pool, 5, 3).unwrap();
        prop_assert_eq!(parse_formula(&u.to_document()).unwrap(), u);
        prop_assert_eq!(parse_pool(&print_pool(&pool)).unwrap(), pool);
    }

    #[test]
    fn matrices_and_points_round_trip(key in any::<u64>()) {
        let mut rng = common::rng(key);
        let (r, c) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let m = random_matrix(&mut rng, r, c, 1000);
        prop_assert_eq!(parse_matrix(&m.to_string()).unwrap(), m);
        let sig = random_signature(&mut rng);
        let h = random_algebra(&mut rng, &sig, 7);
        let sort = Sort::numbered("y", rng.gen_range(1..=3));
        let p = random_point(&mut rng, &h, &sort);
        prop_assert_eq!(parse_point(&p.to_string()).unwrap(), p);
    }
}
