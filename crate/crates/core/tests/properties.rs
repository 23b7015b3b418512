mod common;

use fieldsim::{compute_ssnc, levenshtein, similarity, similarity_str, Field, Mode, Score};
use proptest::prelude::*;

use common::{contiguous, replay, window_oracle};

fn text() -> impl Strategy<Value = String> {
    prop_oneof![
        "[ab]{0,12}",
        "[abc ]{0,16}",
        "[ACGT]{0,24}",
        "[a-zA-Z0-9 ]{0,20}",
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4000))]

    #[test]
    fn score_in_unit_interval(x in text(), y in text()) {
        for mode in [Mode::Mmcwpa, Mode::McwpaLegacy, Mode::Levenshtein] {
            let v = similarity_str(&x, &y, mode).score.value();
            prop_assert!((0.0..=1.0).contains(&v), "{mode}: {v}");
        }
    }

    #[test]
    fn identical_fields_score_one(x in "[a-z ]{1,30}") {
        let r = similarity_str(&x, &x, Mode::Mmcwpa);
        prop_assert_eq!(r.score, Score::ONE);
        prop_assert_eq!(r.trace.len(), 1);
        prop_assert_eq!(r.ssnc, (2 * r.n as u64).pow(2));
    }

    #[test]
    fn disjoint_alphabets_score_zero(x in "[a-m]{0,15}", y in "[n-z]{0,15}") {
        prop_assume!(!(x.is_empty() && y.is_empty()));
        let r = similarity_str(&x, &y, Mode::Mmcwpa);
        prop_assert_eq!(r.score, Score::ZERO);
        prop_assert!(r.trace.is_empty());
    }

    #[test]
    fn trace_is_conservative_and_exact(x in text(), y in text()) {
        for (mode, legacy) in [(Mode::Mmcwpa, false), (Mode::McwpaLegacy, true)] {
            let r = similarity_str(&x, &y, mode);
            let positions = replay(&x, &y, &r.trace, legacy).map_err(TestCaseError::fail)?;

            let mut x_seen = vec![false; r.n];
            let mut y_seen = vec![false; r.m];
            for (xp, yp) in &positions {
                for &i in xp { prop_assert!(!x_seen[i]); x_seen[i] = true; }
                for &j in yp { prop_assert!(!y_seen[j]); y_seen[j] = true; }
            }
            let matched: usize = r.trace.iter().map(|m| m.pattern_length).sum();
            prop_assert!(matched <= r.n.min(r.m));

            for m in &r.trace {
                prop_assert_eq!(m.ssnc_contribution, (2 * m.pattern_length as u64).pow(2));
            }
            prop_assert!(r.trace.windows(2).all(|w| w[0].pattern_length >= w[1].pattern_length));
            prop_assert_eq!(r.ssnc, r.trace.iter().map(|m| m.ssnc_contribution).sum::<u64>());
            prop_assert!(r.ssnc <= ((r.n + r.m) as u64).pow(2));
        }
    }

    #[test]
    fn corrected_matches_never_span_boundaries(x in text(), y in text()) {
        let r = similarity_str(&x, &y, Mode::Mmcwpa);
        let positions = replay(&x, &y, &r.trace, false).map_err(TestCaseError::fail)?;
        for (xp, yp) in positions {
            prop_assert!(contiguous(&xp) && contiguous(&yp));
        }
    }

    #[test]
    fn agrees_with_masked_oracle(x in text(), y in text()) {
        for (mode, legacy) in [(Mode::Mmcwpa, false), (Mode::McwpaLegacy, true)] {
            let (ssnc, trace) = compute_ssnc(&Field::new(&x), &Field::new(&y), mode);
            let patterns: Vec<String> = trace.into_iter().map(|m| m.pattern).collect();
            prop_assert_eq!((ssnc, patterns), window_oracle(&x, &y, legacy));
        }
    }

    #[test]
    fn first_match_is_mode_independent(x in "[abc]{1,10}", y in "[abc]{1,10}") {
        // No boundaries exist before the first match.
        let a = similarity_str(&x, &y, Mode::Mmcwpa);
        let b = similarity_str(&x, &y, Mode::McwpaLegacy);
        prop_assume!(!a.trace.is_empty());
        prop_assert_eq!(&a.trace[0].pattern, &b.trace[0].pattern);
    }

    #[test]
    fn levenshtein_ratio_definition(x in text(), y in text()) {
        let r = levenshtein(&Field::new(&x), &Field::new(&y));
        let longest = x.chars().count().max(y.chars().count());
        prop_assert!(r.distance <= longest);
        prop_assert_eq!(r.distance == 0, x == y);
        if longest > 0 {
            prop_assert_eq!(r.ratio, Score::ratio((longest - r.distance) as u64, longest as u64));
        }
    }
}

#[test]
fn levenshtein_metric_axioms_exhaustive() {
    let strings = common::all_strings(&['a', 'b'], 4);
    let fields: Vec<Field> = strings.iter().map(|s| Field::new(s)).collect();
    let d = |i: usize, j: usize| levenshtein(&fields[i], &fields[j]).distance;
    let n = fields.len();
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| d(i, j)).collect()).collect();
    for i in 0..n {
        for j in 0..n {
            assert_eq!(table[i][j], table[j][i]);
            assert_eq!(table[i][j] == 0, i == j);
            for k in 0..n {
                assert!(table[i][k] <= table[i][j] + table[j][k]);
            }
        }
    }
}

/// Records (does not assert) how often swapping the arguments changes the
/// score.
#[test]
fn direction_asymmetry_is_recorded() {
    let strings = common::all_strings(&['a', 'b', 'c'], 5);
    let fields: Vec<Field> = strings.iter().map(|s| Field::new(s)).collect();
    let mut asymmetric = Vec::new();
    let mut total = 0usize;
    for (i, x) in fields.iter().enumerate() {
        for y in &fields[i + 1..] {
            total += 1;
            let forward = similarity(x, y, Mode::Mmcwpa).score;
            let backward = similarity(y, x, Mode::Mmcwpa).score;
            if forward != backward {
                asymmetric.push((x.to_string(), y.to_string(), forward, backward));
            }
        }
    }
    eprintln!(
        "direction asymmetry: {} of {total} unordered pairs",
        asymmetric.len()
    );
    for (x, y, f, b) in asymmetric.iter().take(5) {
        eprintln!("  {x:?} / {y:?}: {f} forward, {b} backward");
    }
}
