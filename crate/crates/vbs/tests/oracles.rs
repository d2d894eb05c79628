mod support;

use support::oracles;

#[test]
fn dice_matches_brute_force() {
    oracles::dice_suite(1000).unwrap();
}

#[test]
fn classification_matches_reference() {
    oracles::classification_suite(200).unwrap();
}

#[test]
fn miscellaneous_picks_match_exhaustive_search() {
    oracles::misc_selection_suite(200).unwrap();
}

#[test]
fn coverage_matches_label_enumeration() {
    oracles::coverage_suite(200).unwrap();
}
