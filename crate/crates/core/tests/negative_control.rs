//! A deliberately wrong quiver rule must be caught by the suite.

use clusterpos::seeds::QuiverRule;
use clusterpos::selfcheck::{run, Options};

#[test]
fn dropping_same_letter_arrows_breaks_exchange_relations() {
    let opts = Options {
        rule: QuiverRule::DropSameLetterArrows,
        ..Options::default()
    };
    let result = run(3, &opts).unwrap();
    println!("{result}");
    assert!(!result.passed);
}

#[test]
fn dropping_same_letter_arrows_breaks_a3_mutations() {
    let opts = Options {
        rule: QuiverRule::DropSameLetterArrows,
        ..Options::default()
    };
    assert!(!run(10, &opts).unwrap().passed);
}
