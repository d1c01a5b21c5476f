use gag_core::ideals::{self, IdealKind};
use gag_core::regularity::{intra_witness, IntraWitness};
use gag_core::subset::{carrier, subset_product};
use gag_core::theorems::{check, run_suite, Status, SuiteDocument, TheoremId};
use gag_core::{format, GammaGroupoid, Subset};

fn m5() -> GammaGroupoid {
    format::parse_model(format::PAPER_EXAMPLE).unwrap()
}

fn set(g: &GammaGroupoid, names: &str) -> Subset {
    let idx = names.chars().map(|c| (c as u8 - b'a') as usize);
    Subset::from_elements(g.order(), idx).unwrap()
}

#[test]
fn published_certificates_validate() {
    let g = m5();
    // (element, x, y) in a = (x·(a·a))·y
    for (a, x, y) in [(0, 0, 0), (1, 2, 4), (2, 3, 4), (3, 2, 2), (4, 1, 4)] {
        let w = IntraWitness {
            x,
            y,
            beta: 0,
            delta: 0,
            gamma: 0,
        };
        assert!(w.certifies(&g, a), "{}", w.render(&g, a));
        assert!(intra_witness(&g, a).unwrap().unwrap() <= w);
    }
    let b = IntraWitness {
        x: 2,
        y: 4,
        beta: 0,
        delta: 0,
        gamma: 0,
    };
    assert_eq!(b.render(&g, 1), "b = (c·(b·b))·e");
}

/// Every non-empty subset tested directly against the ideal definitions.
fn brute_family(g: &GammaGroupoid, keep: impl Fn(Subset, Subset) -> bool) -> Vec<Subset> {
    let s = carrier(g);
    (1u64..1 << g.order())
        .map(|b| Subset::from_bits(g.order(), b))
        .filter(|&a| keep(a, s))
        .collect()
}

#[test]
fn ideal_families_match_definitions() {
    let g = m5();
    let p = |a, b| subset_product(&g, a, b).unwrap();
    let left = brute_family(&g, |a, s| p(s, a).is_subset_of(a));
    let two_sided = brute_family(&g, |a, s| {
        p(s, a).is_subset_of(a) && p(a, s).is_subset_of(a)
    });
    let bi = brute_family(&g, |a, s| {
        p(a, a).is_subset_of(a) && p(p(a, s), a).is_subset_of(a)
    });
    let quasi = brute_family(&g, |a, s| p(s, a).intersection(p(a, s)).is_subset_of(a));
    assert_eq!(IdealKind::Left.family(&g, 12).unwrap(), left);
    assert_eq!(IdealKind::TwoSided.family(&g, 12).unwrap(), two_sided);
    assert_eq!(IdealKind::Bi.family(&g, 12).unwrap(), bi);
    assert_eq!(IdealKind::Quasi.family(&g, 12).unwrap(), quasi);
    assert_eq!(two_sided, vec![set(&g, "a"), set(&g, "abcde")]);
}

#[test]
fn families_coincide_on_example() {
    let g = m5();
    let left = IdealKind::Left.family(&g, 12).unwrap();
    for kind in [
        IdealKind::Right,
        IdealKind::TwoSided,
        IdealKind::Bi,
        IdealKind::GeneralizedBi,
        IdealKind::Interior,
        IdealKind::Quasi,
        IdealKind::OneTwo,
    ] {
        assert_eq!(kind.family(&g, 12).unwrap(), left, "{kind}");
    }
    assert_eq!(check(&g, TheoremId::Equalient).status, Status::Pass);
}

#[test]
fn bi_ideal_products() {
    let g = m5();
    let s = carrier(&g);
    let p = |a, b| subset_product(&g, a, b).unwrap();
    for (b, want) in [("a", "a"), ("abcde", "abcde")] {
        let b = set(&g, b);
        assert_eq!(p(p(b, s), b), set(&g, want));
    }
}

#[test]
fn prime_type_predicates() {
    let g = m5();
    let s = carrier(&g);
    let a = set(&g, "a");
    assert!(ideals::is_prime(&g, s).unwrap());
    assert!(ideals::is_semiprime(&g, a).unwrap());
    assert!(ideals::is_elementwise_semiprime(&g, a).unwrap());
    assert!(ideals::is_strongly_irreducible(&g, s).unwrap());
}

#[test]
fn suite_statuses() {
    let g = m5();
    let reports = run_suite(&g, &[]);
    assert_eq!(reports.len(), TheoremId::ALL.len());
    for r in &reports {
        let want = match r.theorem {
            TheoremId::Ji | TheoremId::JiCor => Status::Vacuous,
            _ => Status::Pass,
        };
        assert_eq!(r.status, want, "{}", r.theorem);
    }
    let ids: Vec<_> = reports.iter().map(|r| r.theorem).collect();
    assert_eq!(ids, TheoremId::ALL);
}

#[test]
fn suite_document_is_stable() {
    let g = m5();
    let a = serde_json::to_string(&SuiteDocument::new(&g, run_suite(&g, &[]))).unwrap();
    let b = serde_json::to_string(&SuiteDocument::new(&g, run_suite(&g, &[]))).unwrap();
    assert_eq!(a, b);
    let relabeled = g.relabeled(gag_core::Labels::numeric(5, 1)).unwrap();
    assert_ne!(
        gag_core::theorems::model_hash(&g),
        gag_core::theorems::model_hash(&relabeled)
    );
}
