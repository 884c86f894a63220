mod common;

use barjanet::janet::oracle;
use barjanet::{complete_with_report, infinite_corners, JanetTable, TermSet};
use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn bar_code_paths_match_definitions(u in term_set_strategy(4, 25, 5)) {
        let table = JanetTable::new(&u).unwrap();
        for a in table.annotations() {
            prop_assert_eq!(&a.multiplicative, &oracle::multiplicative_vars(&u, &a.term));
            prop_assert_eq!(&a.nmp, &oracle::nmp(&u, &a.term));
            for p in &a.nmp {
                let product = a.term.mul_var(p.var, p.exp);
                prop_assert_eq!(
                    table.divisors_for_nm_product(&a.term, *p).unwrap(),
                    oracle::janet_like_divisors(&u, &product)
                );
            }
        }
        prop_assert_eq!(table.completeness(false).complete, oracle::is_complete(&u));
        prop_assert_eq!(table.completeness(true), table.completeness(false));
    }

    #[test]
    fn completion_is_sound(u in term_set_strategy(3, 10, 4)) {
        let (done, report) = complete_with_report(&u).unwrap();
        prop_assert!(report.complete);
        prop_assert!(oracle::is_complete(&done));
        prop_assert!(u.is_subset(&done));
        let bound = u.bounding_box();
        for t in done.iter() {
            prop_assert!(t.exponents().iter().zip(&bound).all(|(e, b)| e <= b));
        }
        let (again, r2) = complete_with_report(&done).unwrap();
        prop_assert_eq!(&again, &done);
        prop_assert!(r2.added.is_empty());
        let probe: Vec<u32> = bound.iter().map(|b| b + 2).collect();
        for w in box_terms(&probe) {
            prop_assert_eq!(in_ideal(&u, &w), in_ideal(&done, &w));
        }
    }

    #[test]
    fn complete_sets_have_disjoint_cones(u in term_set_strategy(3, 8, 3)) {
        let done = barjanet::complete(&u).unwrap();
        let table = JanetTable::new(&done).unwrap();
        for w in terms_up_to_degree(done.nvars(), 8) {
            let janet = table.janet_divisors(&w);
            prop_assert!(janet.len() <= 1);
            let like = table.janet_like_divisors(&w);
            for t in &janet {
                prop_assert!(like.contains(t));
            }
            if in_ideal(&done, &w) {
                prop_assert_eq!(like.len(), 1, "{} in the ideal", w);
            } else {
                prop_assert!(like.is_empty());
            }
        }
    }

    #[test]
    fn janet_cones_are_disjoint_for_any_set(u in term_set_strategy(3, 10, 3)) {
        let table = JanetTable::new(&u).unwrap();
        for w in box_terms(&[4, 4, 4][..u.nvars()]) {
            prop_assert!(table.janet_divisors(&w).len() <= 1);
            prop_assert_eq!(table.janet_divisors(&w), oracle::janet_divisors(&u, &w));
        }
    }

    #[test]
    fn corners_bound_janet_like_cones(u in term_set_strategy(3, 10, 4)) {
        let table = JanetTable::new(&u).unwrap();
        let corners = infinite_corners(&u).unwrap();
        prop_assert!(corners[0].1.is_all_infinite());
        prop_assert_eq!(&corners[0].0, u.terms().last().unwrap());
        let probe: Vec<u32> = u.bounding_box().iter().map(|b| b + 2).collect();
        for (t, corner) in &corners {
            let ann = table.annotation(t).unwrap();
            for i in 1..=u.nvars() {
                prop_assert_eq!(corner.entry(i).is_infinite(), ann.multiplicative.contains(&i));
            }
            for w in box_terms(&probe) {
                if t.divides(&w) {
                    let divides_like = table.janet_like_divisors(&w).contains(t);
                    prop_assert_eq!(divides_like, corner.covers(&w));
                }
            }
        }
    }
}

#[test]
fn fixed_completion_case() {
    let u = TermSet::parse(3, ["x2", "x1*x3"]).unwrap();
    let (done, report) = complete_with_report(&u).unwrap();
    assert_eq!(done, TermSet::parse(3, ["x2", "x1*x3", "x2*x3"]).unwrap());
    assert_eq!(report.added, vec![term(&[0, 1, 1])]);
}
