use proptest::prelude::*;

use rado::{
    ceiling_formula, closed_form, decompose, exact_rado_number, exact_rado_number_with,
    find_mono_solution, is_valid_coloring, known_rado_number, naive_find_mono_solution,
    verify_witness, Coloring, RadoEquation, SearchConfig, SolutionTemplate,
};

fn coloring(n: usize, mask: u64) -> Coloring {
    Coloring::new(n, (1..=n).filter(|x| mask >> (x - 1) & 1 == 1)).unwrap()
}

proptest! {
    #[test]
    fn splitting_a_group_preserves_truth(
        m in 3u64..60, a in 1u64..20, at in 0u64..60,
    ) {
        let eq = RadoEquation::new(m, a).unwrap();
        let t = SolutionTemplate::new([(m - 1, a), (1, m - 1)]).unwrap();
        let split = t.split_group(0, at % m).unwrap();
        prop_assert_eq!(split.evaluate(&eq).unwrap(), t.evaluate(&eq).unwrap());
        prop_assert!(split.evaluate(&eq).unwrap());
    }

    #[test]
    fn scaling_preserves_truth_either_way(
        groups in prop::collection::vec((1u64..5, 1u64..30), 1..5),
        a in 1u64..6,
        factor in 1u64..9,
    ) {
        let t = SolutionTemplate::new(groups).unwrap();
        let m = t.slots().unwrap();
        prop_assume!(m >= 2);
        let eq = RadoEquation::new(m, a).unwrap();
        prop_assert_eq!(t.scaled(factor).unwrap().evaluate(&eq).unwrap(), t.evaluate(&eq).unwrap());
    }

    #[test]
    fn template_json_round_trip(groups in prop::collection::vec((0u64..50, 1u64..1000), 1..6)) {
        prop_assume!(groups.iter().any(|g| g.0 > 0));
        let t = SolutionTemplate::new(groups).unwrap();
        let text = serde_json::to_string(&t).unwrap();
        let back: SolutionTemplate = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(t.to_string().parse::<SolutionTemplate>().unwrap(), t);
    }

    #[test]
    fn coloring_json_round_trip(n in 0usize..80, mask in any::<u64>()) {
        let c = coloring(n.min(64), mask);
        let text = serde_json::to_string(&c).unwrap();
        let back: Coloring = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
        prop_assert_eq!(back, c);
    }

    #[test]
    fn closed_form_matches_nested_ceiling(m in 2u64..3_000_000_000, a in 2u64..5000) {
        let eq = RadoEquation::new(m, a).unwrap();
        prop_assert_eq!(closed_form(&eq).unwrap(), ceiling_formula(&eq).unwrap());
    }

    #[test]
    fn decompose_reassembles(m in 2u64..1_000_000, a in 2u64..300) {
        let eq = RadoEquation::new(m, a).unwrap();
        let b = decompose(&eq).unwrap();
        prop_assert!(b.v < a && b.c < a);
        prop_assert_eq!(b.u * a * a + b.v * a + b.c, m);
        // u maximal: one more a^2 would overshoot
        prop_assert!((b.u + 1) * a * a > m);
    }

    #[test]
    fn every_witness_verifies(n in 0usize..14, mask in any::<u64>(), m in 2u64..7, a in 1u64..5) {
        let eq = RadoEquation::new(m, a).unwrap();
        let col = coloring(n, mask);
        if let Some(w) = find_mono_solution(&col, &eq) {
            prop_assert!(verify_witness(&w, &col, &eq));
        }
    }

    #[test]
    fn dp_agrees_with_naive(n in 0usize..10, mask in any::<u64>(), m in 2u64..6, a in 1u64..5) {
        let eq = RadoEquation::new(m, a).unwrap();
        let col = coloring(n, mask);
        prop_assert_eq!(
            find_mono_solution(&col, &eq).is_some(),
            naive_find_mono_solution(&col, &eq).unwrap().is_some()
        );
    }

    #[test]
    fn extending_never_removes_solutions(
        n in 1usize..14, mask in any::<u64>(), extra in any::<u64>(), more in 1usize..8,
        m in 2u64..7, a in 1u64..5,
    ) {
        let eq = RadoEquation::new(m, a).unwrap();
        let col = coloring(n, mask);
        if find_mono_solution(&col, &eq).is_some() {
            let mut ext = col.clone();
            for i in 0..more {
                let c = if extra >> i & 1 == 1 { rado::Color::Red } else { rado::Color::Blue };
                ext = ext.extended(c);
            }
            prop_assert!(find_mono_solution(&ext, &eq).is_some());
        }
    }

    #[test]
    fn swapping_colors_swaps_witness_color(n in 0usize..14, mask in any::<u64>(), m in 2u64..7, a in 1u64..5) {
        let eq = RadoEquation::new(m, a).unwrap();
        let col = coloring(n, mask);
        let sw = col.swapped();
        prop_assert_eq!(is_valid_coloring(&col, &eq), is_valid_coloring(&sw, &eq));
        if let Some(w) = find_mono_solution(&col, &eq) {
            let mut flipped = w.clone();
            flipped.color = w.color.other();
            prop_assert!(verify_witness(&flipped, &sw, &eq));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn search_is_deterministic_across_workers(m in 2u64..9, a in 1u64..5, threads in 2usize..6, split in 1usize..6) {
        let eq = RadoEquation::new(m, a).unwrap();
        let seq = exact_rado_number(&eq, 18);
        let mut cfg = SearchConfig::new(18).threads(threads);
        cfg.split_depth = split;
        let par = exact_rado_number_with(&eq, &cfg);
        prop_assert_eq!(par.status, seq.status);
        prop_assert_eq!(par.rado_number, seq.rado_number);
        prop_assert_eq!(par.deepest_valid, seq.deepest_valid);
        prop_assert_eq!(&par.certificate, &seq.certificate);
        prop_assert!(is_valid_coloring(&seq.certificate, &eq));
        prop_assert_eq!(seq.certificate.n(), seq.deepest_valid);
    }
}

#[test]
fn known_values_match_formula_in_theorem_ranges() {
    for a in 3..=10u64 {
        let lo = if a == 3 { 7 } else { 2 * a * a - a + 2 };
        for m in lo..lo + 300 {
            let eq = RadoEquation::new(m, a).unwrap();
            let k = known_rado_number(&eq).unwrap();
            assert_eq!(k.value, ceiling_formula(&eq).unwrap(), "{eq}");
        }
    }
}

#[test]
fn search_respects_lower_bound() {
    for a in 3..=5u64 {
        for m in 3..=14u64 {
            let eq = RadoEquation::new(m, a).unwrap();
            let c = ceiling_formula(&eq).unwrap() as usize;
            let out = exact_rado_number(&eq, 30);
            assert!(
                out.deepest_valid + 1 >= c,
                "{eq}: deepest {} < C-1 = {}",
                out.deepest_valid,
                c - 1
            );
        }
    }
}
