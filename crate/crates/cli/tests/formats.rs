use proptest::prelude::*;
use trimulti::{generate_valid_sequence, RealizationDocument};
use trimulti_core::realize;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn json_round_trip_is_byte_identical(seed in any::<u64>(), sorted in any::<bool>()) {
        let seq = generate_valid_sequence(seed, 3..=40, 4..=30).unwrap();
        let doc = RealizationDocument::from_realization(&realize(&seq).unwrap(), sorted);
        let text = doc.to_json();
        let back = RealizationDocument::from_json(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
        let line = doc.to_json_line();
        prop_assert_eq!(RealizationDocument::from_json(&line).unwrap().to_json_line(), line);
        prop_assert!(back.reverify().is_ok());
    }

    #[test]
    fn tsv_and_dot_list_every_edge(seed in any::<u64>()) {
        let seq = generate_valid_sequence(seed, 3..=40, 4..=30).unwrap();
        let doc = RealizationDocument::from_realization(&realize(&seq).unwrap(), false);
        let tsv_rows = doc.to_tsv().lines().filter(|l| !l.starts_with('#')).count();
        let dot_rows = doc.to_dot().lines().filter(|l| l.contains(" -- ")).count();
        prop_assert_eq!(tsv_rows, doc.edges.len());
        prop_assert_eq!(dot_rows, doc.edges.len());
    }
}
