//! Archived outcomes of enumeration runs and counterexample hunts.
//!
//! Class counts for n ≤ 3 were first produced by the brute-force oracle in
//! the acceptance suite; order-4 counts agree between both isomorphism
//! strategies.

use gag_core::search::{enumerate, find_counterexample, SearchSpec, Strategy};
use gag_core::theorems::{check, Status, TheoremId};
use gag_core::{Axioms, Filter};

const COUNTS: [(usize, usize, usize, usize); 7] = [
    // (n, m, AG classes, AG** classes)
    (1, 1, 1, 1),
    (1, 2, 1, 1),
    (2, 1, 3, 3),
    (2, 2, 6, 6),
    (3, 1, 20, 16),
    (3, 2, 112, 52),
    (4, 1, 331, 101),
];

#[test]
fn class_counts() {
    for (n, m, ag, agss) in COUNTS {
        let count = |axioms| {
            enumerate(&SearchSpec::new(n, m, axioms))
                .unwrap()
                .models
                .len()
        };
        assert_eq!(count(Axioms::AG), ag, "n={n} m={m}");
        assert_eq!(count(Axioms::AG_STAR_STAR), agss, "n={n} m={m}");
    }
}

#[test]
fn order_four_strategies_agree() {
    let spec = SearchSpec::new(4, 1, Axioms::AG_STAR_STAR);
    let seen = enumerate(&spec.clone().strategy(Strategy::SeenSet)).unwrap();
    let lex = enumerate(&spec.strategy(Strategy::LexLeader)).unwrap();
    assert_eq!(seen, lex);
}

#[test]
fn ag_star_star_models_are_paramedial() {
    for (n, m, _, _) in COUNTS {
        for f in enumerate(&SearchSpec::new(n, m, Axioms::AG_STAR_STAR))
            .unwrap()
            .models
        {
            assert!(f.to_model().is_paramedial(), "{:?}", f.cells());
        }
    }
    // left invertive alone does not force it from order 4 on
    let li_only = enumerate(&SearchSpec::new(4, 1, Axioms::AG)).unwrap();
    let non_paramedial = li_only
        .models
        .iter()
        .filter(|f| !f.to_model().is_paramedial())
        .count();
    assert_eq!(non_paramedial, 5);
}

#[test]
fn converse_gaps_on_order_three() {
    let spec = SearchSpec::new(3, 1, Axioms::AG_STAR_STAR);
    let expected: [(TheoremId, &[&str]); 3] = [
        (TheoremId::RSemiprimeEq, &["(ii)⇒(i) ideal-wise"]),
        (
            TheoremId::Rintl,
            &["(ii)⇒(i) element-wise", "(ii)⇒(i) ideal-wise"],
        ),
        (
            TheoremId::Lrl,
            &["(iii)⇒(ii) element-wise", "(iii)⇒(ii) ideal-wise"],
        ),
    ];
    for (id, tags) in expected {
        let hunt = find_counterexample(&spec, id).unwrap();
        let (form, report) = hunt.found.expect("gap witness");
        assert_eq!(form.cells(), &[0, 0, 0, 0, 0, 2, 0, 1, 0], "{id}");
        assert_eq!(hunt.searched, 7);
        let failing: Vec<_> = report
            .clauses
            .iter()
            .filter(|c| c.status == Status::Fail)
            .map(|c| c.tag.as_str())
            .collect();
        assert_eq!(failing, tags, "{id}");
        let g = form.to_model();
        assert!(!gag_core::regularity::is_intra_regular(&g));
        assert!(report.counterexample.unwrap().revalidate(&g));
    }
}

#[test]
fn no_ideal_idempotency_gap_up_to_order_four() {
    for (n, m) in [(3, 2), (4, 1)] {
        let hunt = find_counterexample(&SearchSpec::new(n, m, Axioms::AG_STAR_STAR), TheoremId::Ii)
            .unwrap();
        assert!(hunt.found.is_none() && !hunt.truncated, "n={n} m={m}");
    }
}

#[test]
fn proved_directions_hold_on_intra_regular_space() {
    let spec = SearchSpec::new(3, 2, Axioms::AG_STAR_STAR).filter(Filter::IntraRegular);
    for id in [
        TheoremId::Ki,
        TheoremId::Aw,
        TheoremId::Ij,
        TheoremId::TotalOrder,
    ] {
        assert!(
            find_counterexample(&spec, id).unwrap().found.is_none(),
            "{id}"
        );
    }
}

#[test]
fn singleton_space_has_no_counterexamples() {
    let spec = SearchSpec::new(1, 1, Axioms::AG_STAR_STAR);
    for &id in TheoremId::ALL {
        assert!(find_counterexample(&spec, id).unwrap().found.is_none());
        assert_eq!(check(&spec_model(), id).status, Status::Pass, "{id}");
    }
}

fn spec_model() -> gag_core::GammaGroupoid {
    gag_core::GammaGroupoid::new(1, 1, vec![0]).unwrap()
}
