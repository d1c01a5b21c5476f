use std::sync::OnceLock;

use gag_core::ideals::{self, IdealKind};
use gag_core::regularity::{intra_oracle, intra_witness};
use gag_core::search::{canonicalize, enumerate, CanonicalForm, SearchSpec};
use gag_core::subset::{
    carrier, generated_left_ideal, generated_right_ideal, generated_two_sided_ideal, subset_product,
};
use gag_core::{format, Axioms, GammaGroupoid, Law, Subset};
use proptest::prelude::*;
use proptest::sample::Index;

fn table(max_n: usize, max_m: usize) -> impl Strategy<Value = GammaGroupoid> {
    (1..=max_n, 1..=max_m).prop_flat_map(|(n, m)| {
        prop::collection::vec(0..n as u8, n * n * m)
            .prop_map(move |cells| GammaGroupoid::new(n, m, cells).unwrap())
    })
}

fn subset_of(g: &GammaGroupoid, bits: u64) -> Subset {
    Subset::from_bits(g.order(), bits)
}

fn ag_models() -> &'static [CanonicalForm] {
    static MODELS: OnceLock<Vec<CanonicalForm>> = OnceLock::new();
    MODELS.get_or_init(|| {
        [(2, 1), (2, 2), (3, 1), (3, 2)]
            .into_iter()
            .flat_map(|(n, m)| {
                enumerate(&SearchSpec::new(n, m, Axioms::AG))
                    .unwrap()
                    .models
            })
            .collect()
    })
}

/// `σ` on elements and `τ` on operators applied to every cell.
fn relabel(g: &GammaGroupoid, s: &[usize], t: &[usize]) -> GammaGroupoid {
    let (n, m) = (g.order(), g.gammas());
    let mut cells = vec![0u8; n * n * m];
    for i in 0..n {
        for k in 0..m {
            for j in 0..n {
                cells[(s[i] * m + t[k]) * n + s[j]] = s[g.op(i, k, j)] as u8;
            }
        }
    }
    GammaGroupoid::new(n, m, cells).unwrap()
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn witness_agrees_with_set_oracle(g in table(4, 2)) {
        for a in 0..g.order() {
            let w = intra_witness(&g, a).unwrap();
            prop_assert_eq!(w.is_some(), intra_oracle(&g, a).unwrap());
            if let Some(w) = w {
                prop_assert!(w.certifies(&g, a));
            }
        }
    }

    #[test]
    fn law_witnesses_reproduce(g in table(3, 2)) {
        for law in Law::ALL {
            match g.violation(law) {
                Some(w) => prop_assert!(w.reproduces_on(&g)),
                None => prop_assert!(g.satisfies(law)),
            }
        }
    }

    #[test]
    fn left_invertive_models_are_medial_under_relabeling(
        pick in any::<Index>(),
        s in permutation(3),
        t in permutation(2),
    ) {
        let form = pick.get(ag_models());
        let g = form.to_model();
        let (n, m) = (g.order(), g.gammas());
        let s: Vec<_> = s.into_iter().filter(|&x| x < n).collect();
        let t: Vec<_> = t.into_iter().filter(|&x| x < m).collect();
        let h = relabel(&g, &s, &t);
        prop_assert!(h.is_left_invertive());
        prop_assert!(h.is_medial());
        prop_assert_eq!(&canonicalize(&h).unwrap(), form);
    }

    #[test]
    fn product_is_monotone(g in table(4, 2), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (a, b, c) = (subset_of(&g, a), subset_of(&g, b), subset_of(&g, c));
        let small = subset_product(&g, a.intersection(c), b).unwrap();
        prop_assert!(small.is_subset_of(subset_product(&g, a, b).unwrap()));
        let small = subset_product(&g, a, b.intersection(c)).unwrap();
        prop_assert!(small.is_subset_of(subset_product(&g, a, b).unwrap()));
    }

    #[test]
    fn generated_ideals_are_least(g in table(4, 2), bits in 1u64..16) {
        let x = subset_of(&g, bits);
        prop_assume!(!x.is_empty());
        let cases = [
            (IdealKind::Left, generated_left_ideal(&g, x).unwrap()),
            (IdealKind::Right, generated_right_ideal(&g, x).unwrap()),
            (IdealKind::TwoSided, generated_two_sided_ideal(&g, x).unwrap()),
        ];
        for (kind, generated) in cases {
            prop_assert!(x.is_subset_of(generated));
            prop_assert!(kind.holds(&g, generated).unwrap());
            for ideal in kind.family(&g, 12).unwrap() {
                if x.is_subset_of(ideal) {
                    prop_assert!(generated.is_subset_of(ideal));
                }
            }
        }
    }

    #[test]
    fn ideal_kinds_nest(g in table(4, 2), bits in 1u64..16) {
        let a = subset_of(&g, bits);
        prop_assume!(!a.is_empty());
        let holds = |k: IdealKind| k.holds(&g, a).unwrap();
        if holds(IdealKind::TwoSided) {
            for k in [IdealKind::Left, IdealKind::Right, IdealKind::Bi, IdealKind::Interior,
                      IdealKind::Quasi, IdealKind::OneTwo] {
                prop_assert!(holds(k), "two-sided but not {}", k);
            }
        }
        if holds(IdealKind::Left) || holds(IdealKind::Right) {
            prop_assert!(holds(IdealKind::Quasi) && holds(IdealKind::Subgroupoid));
        }
        if holds(IdealKind::Bi) {
            prop_assert!(holds(IdealKind::GeneralizedBi) && holds(IdealKind::Subgroupoid));
        }
    }

    #[test]
    fn prime_ideals_are_semiprime(g in table(4, 1)) {
        let family = ideals::two_sided_family(&g, 12).unwrap();
        for &p in &family {
            if ideals::prime_over(&g, &family, p) {
                prop_assert!(ideals::semiprime_over(&g, &family, p));
                // AΓB ⊆ A∩B for two-sided A, B
                prop_assert!(ideals::strongly_irreducible_over(&family, p));
            }
        }
        prop_assert!(family.contains(&carrier(&g)));
    }

    #[test]
    fn text_format_round_trips(g in table(5, 3)) {
        let text = format::serialize_model(&g);
        prop_assert_eq!(format::parse_model(&text).unwrap(), g.clone());
        prop_assert_eq!(format::parse_any(&format::model_to_json(&g)).unwrap(), g);
    }
}
