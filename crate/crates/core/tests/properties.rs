//! Randomised properties on larger ranks than the exhaustive checks reach.

mod common;

use common::{simple_profile, Algebra};
use nakayama::bijections::{lk, lk_periodic, phi, reflected_path, reflected_periodic_path};
use nakayama::cli::ClassifyReport;
use nakayama::dyck::{DyckPath, PeriodicDyckPath};
use nakayama::homology::{regular1, regular2};
use nakayama::kupisch::KupischSeries;
use proptest::prelude::*;

/// Linear series built from the end: `c_{n−1} = 1`, `2 ≤ c_i ≤ c_{i+1} + 1`.
fn linear_series(max_rank: usize) -> impl Strategy<Value = KupischSeries> {
    prop::collection::vec(0usize..1000, 0..max_rank).prop_map(|choices| {
        let mut c = vec![1usize];
        for x in choices {
            let next = *c.last().unwrap();
            c.push(2 + x % next);
        }
        c.reverse();
        KupischSeries::linear(c).expect("valid by construction")
    })
}

/// Cyclic series with entries in `2..=max_entry`, kept when valid.
fn cyclic_series(max_rank: usize, max_entry: usize) -> impl Strategy<Value = KupischSeries> {
    prop::collection::vec(2usize..=max_entry, 1..=max_rank)
        .prop_filter_map("not a cyclic series", |c| KupischSeries::cyclic(c).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn criteria_match_representation_oracle(k in linear_series(10)) {
        let alg = Algebra::new(k.entries(), false);
        for i in 0..k.rank() {
            let p = simple_profile(&alg, i);
            prop_assert_eq!(regular1(&k, i), p.regular(1), "S_{} of {}", i, k);
            prop_assert_eq!(regular2(&k, i), p.regular(2), "S_{} of {}", i, k);
        }
    }

    #[test]
    fn cyclic_criteria_match_representation_oracle(k in cyclic_series(6, 6)) {
        let alg = Algebra::new(k.entries(), true);
        for i in 0..k.rank() {
            let p = simple_profile(&alg, i);
            prop_assert_eq!(regular1(&k, i), p.regular(1), "S_{} of {}", i, k);
            prop_assert_eq!(regular2(&k, i), p.regular(2), "S_{} of {}", i, k);
        }
    }

    #[test]
    fn involution_transports_regular_simples(k in linear_series(24)) {
        let st = lk(&reflected_path(&k)).stats();
        let r1: Vec<usize> = (0..k.rank()).filter(|&i| regular1(&k, i)).collect();
        let r2: Vec<usize> = (0..k.rank()).filter(|&i| regular2(&k, i)).collect();
        prop_assert_eq!(&st.one_cuts, &r1);
        prop_assert_eq!(st.hills_of(2), r2);
    }

    #[test]
    fn involution_law(k in linear_series(40)) {
        let d = DyckPath::from_kupisch(&k);
        prop_assert_eq!(lk(&lk(&d)), d.clone());
        prop_assert_eq!(d.reverse_swap().reverse_swap(), d);
    }

    #[test]
    fn phi_preserves_semilength(k in linear_series(30)) {
        let d = reflected_path(&k);
        prop_assert_eq!(phi(&d).semilength(), d.semilength());
    }

    #[test]
    fn periodic_reflection_is_an_involution(k in cyclic_series(8, 9)) {
        let p = PeriodicDyckPath::from_kupisch(&k);
        prop_assert_eq!(p.reverse_swap().reverse_swap(), p);
    }

    #[test]
    fn periodic_involution_round_trips(k in cyclic_series(7, 8)) {
        let p = reflected_periodic_path(&k);
        if p.in_dyck_p() || p.in_dyck_h() {
            let img = lk_periodic(&p).expect("in the domain");
            prop_assert_eq!(lk_periodic(&img).expect("image in the domain"), p);
        }
    }

    #[test]
    fn classify_report_round_trips_through_json(k in linear_series(12)) {
        let report = ClassifyReport::of(&k);
        let json = serde_json::to_string(&report).unwrap();
        let back: ClassifyReport = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, report);
    }
}
