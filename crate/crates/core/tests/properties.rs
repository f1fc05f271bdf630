use normsum_core::classdata::class_reps;
use normsum_core::make_field;
use normsum_core::quadfield::{supported_fields, CLASS_THREE, CLASS_TWO};
use normsum_core::repsearch::{cross_class_map, find_certificate, min_terms, LatticeQuery};
use normsum_core::verify::{expected_table, verify_field};
use proptest::prelude::*;

fn any_supported() -> impl Strategy<Value = u64> {
    prop::sample::select(supported_fields().map(|f| f.d()).collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimal_certificates_validate(d in any_supported(), class in 1usize..=3, r in 1u64..=120) {
        let f = make_field(d).unwrap();
        prop_assume!(class <= class_reps(&f).len());
        let q = LatticeQuery::new(f, class, r).unwrap();
        match min_terms(&q).unwrap().count() {
            Some(m) => {
                let c = find_certificate(&q, m as usize).unwrap().expect("minimum is attainable");
                prop_assert_eq!(c.m(), m as usize);
                prop_assert_eq!(c.check(), Ok(r * q.rep().k));
                if m > 1 {
                    prop_assert!(find_certificate(&q, m as usize - 1).unwrap().is_none());
                }
            }
            None => {
                for m in 1..=6 {
                    prop_assert!(find_certificate(&q, m).unwrap().is_none());
                }
            }
        }
    }

    #[test]
    fn cross_map_preserves_norm_and_involutes(i in 0usize..16, a in -500i64..500, b in -500i64..500) {
        let f = make_field(CLASS_THREE[i]).unwrap();
        let e = normsum_core::RingElement::new(a, b);
        let m = cross_class_map(&f, e).unwrap();
        prop_assert_eq!(f.norm(m).unwrap(), f.norm(e).unwrap());
        prop_assert_eq!(cross_class_map(&f, m).unwrap(), e);
    }
}

#[test]
fn every_row_verifies_at_its_minimum_window() {
    for &d in CLASS_TWO.iter().chain(CLASS_THREE.iter()) {
        let t = expected_table(d).unwrap();
        let report = verify_field(d, t.min_window()).unwrap();
        assert!(
            report.exceptions_match(),
            "d={d}: {:?}",
            report.exception_mismatches
        );
    }
}
