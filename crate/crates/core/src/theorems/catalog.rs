//! Statements of every checked result, split into direction-tagged clauses.

use super::formula::build::*;
use super::formula::{Domain, Elem, Formula, Set};
use super::{Guard, TheoremId};
use crate::ideals::IdealKind::{self, *};

type SetPredicate = Box<dyn Fn(Set) -> Formula>;

pub struct Clause {
    pub tag: String,
    pub formula: Formula,
}

fn clause(tag: impl Into<String>, formula: Formula) -> Clause {
    Clause {
        tag: tag.into(),
        formula,
    }
}

#[derive(Clone, Copy)]
enum Sense {
    Element,
    Ideal,
}

impl Sense {
    const BOTH: [Sense; 2] = [Sense::Element, Sense::Ideal];

    fn tag(self) -> &'static str {
        match self {
            Sense::Element => "element-wise",
            Sense::Ideal => "ideal-wise",
        }
    }

    fn semiprime(self, s: Set) -> Formula {
        match self {
            Sense::Element => Formula::SemiprimeElement(s),
            Sense::Ideal => Formula::SemiprimeIdeal(s),
        }
    }
}

fn s() -> Set {
    full()
}

/// `∀a ∈ S. a is intra-regular`.
fn intra_regular() -> Formula {
    all("a", Domain::Elements, Formula::IntraRegular(Elem::Var("a")))
}

fn idempotent(a: Set) -> Formula {
    eq(prod(a.clone(), a.clone()), a)
}

fn every(k: IdealKind, body: impl Fn(Set) -> Formula) -> Formula {
    all("A", family(k), body(var("A")))
}

/// `∀A. k1(A) ⇒ k2(A)`, quantified over the `k1` family.
fn kind_implies(k1: IdealKind, k2: IdealKind) -> Formula {
    every(k1, |a| kind(k2, a))
}

fn both_ways(k1: IdealKind, k2: IdealKind) -> Vec<Clause> {
    vec![
        clause(format!("{k1} ⇒ {k2}"), kind_implies(k1, k2)),
        clause(format!("{k2} ⇒ {k1}"), kind_implies(k2, k1)),
    ]
}

/// `(i) ⇒ (ii)` and `(ii) ⇒ (i)` for a characterization `k(A) ⟺ cond(A)`.
fn characterization(k: IdealKind, cond: impl Fn(Set) -> Formula) -> Vec<Clause> {
    vec![
        clause("(i)⇒(ii)", every(k, &cond)),
        clause(
            "(ii)⇒(i)",
            all(
                "A",
                Domain::Subsets,
                implies(cond(var("A")), kind(k, var("A"))),
            ),
        ),
    ]
}

/// Both directions of `S intra-regular ⟺ statement`.
fn equivalent_to_regularity(statement: Formula, suffix: &str) -> Vec<Clause> {
    vec![
        clause(
            format!("(i)⇒(ii){suffix}"),
            implies(intra_regular(), statement.clone()),
        ),
        clause(
            format!("(ii)⇒(i){suffix}"),
            implies(statement, intra_regular()),
        ),
    ]
}

fn both_products_fix(a: Set) -> Formula {
    and(vec![
        eq(prod(a.clone(), s()), a.clone()),
        eq(prod(s(), a.clone()), a),
    ])
}

fn for_ideal_pairs(body: Formula) -> Formula {
    all("I", family(TwoSided), all("J", family(TwoSided), body))
}

/// `∀R right. semiprime(R) ⇒ ∀L left. body(R, L)`.
fn semiprime_right_left(sense: Sense, body: Formula) -> Formula {
    all(
        "R",
        family(Right),
        implies(sense.semiprime(var("R")), all("L", family(Left), body)),
    )
}

pub fn statement(id: TheoremId) -> (Guard, Vec<Clause>) {
    use TheoremId::*;
    let ir = Guard::IntraRegularAgStarStar;
    let ag = Guard::AgStarStar;
    match id {
        Ji => (
            ag,
            vec![
                clause(
                    "SΓa=S for all a ⇒ intra-regular",
                    implies(
                        all("a", Domain::Elements, eq(prod(s(), single("a")), s())),
                        intra_regular(),
                    ),
                ),
                clause(
                    "aΓS=S for all a ⇒ intra-regular",
                    implies(
                        all("a", Domain::Elements, eq(prod(single("a"), s()), s())),
                        intra_regular(),
                    ),
                ),
            ],
        ),
        JiCor => (
            ag,
            vec![clause(
                "aΓS=S for all a ⇒ SΓa=S for all a",
                implies(
                    all("a", Domain::Elements, eq(prod(single("a"), s()), s())),
                    all("a", Domain::Elements, eq(prod(s(), single("a")), s())),
                ),
            )],
        ),
        Ki | KiCor => {
            let rhs = |b: Set| {
                if id == Ki {
                    meet(b, s())
                } else {
                    b
                }
            };
            let body = |b: Set| eq(prod(prod(b.clone(), s()), b.clone()), rhs(b));
            (
                ir,
                vec![
                    clause("bi-ideals", every(Bi, body)),
                    clause("generalized bi-ideals", every(GeneralizedBi, body)),
                ],
            )
        }
        Aw | AwCor => {
            let rhs = |b: Set| {
                if id == Aw {
                    meet(s(), b)
                } else {
                    b
                }
            };
            (
                ir,
                vec![clause(
                    "interior ideals",
                    every(Interior, |b| eq(prod(prod(s(), b.clone()), s()), rhs(b))),
                )],
            )
        }
        Jk => (ir, vec![clause("SΓS=S", eq(prod(s(), s()), s()))]),
        LisR => (ir, both_ways(Left, Right)),
        Biiid => {
            let cond = |a: Set| {
                and(vec![
                    eq(prod(prod(a.clone(), s()), a.clone()), a.clone()),
                    idempotent(a),
                ])
            };
            let mut clauses = vec![
                clause("(i)⇒(ii) bi", every(Bi, cond)),
                clause("(i)⇒(ii) gbi", every(GeneralizedBi, cond)),
            ];
            clauses.push(clause(
                "(ii)⇒(i)",
                all(
                    "A",
                    Domain::Subsets,
                    implies(cond(var("A")), kind(Bi, var("A"))),
                ),
            ));
            (ir, clauses)
        }
        TOneTwo => (
            ir,
            characterization(OneTwo, |a| {
                and(vec![
                    eq(
                        prod(prod(a.clone(), s()), prod(a.clone(), a.clone())),
                        a.clone(),
                    ),
                    idempotent(a),
                ])
            }),
        ),
        TInterior => (
            ir,
            characterization(Interior, |a| eq(prod(prod(s(), a.clone()), s()), a)),
        ),
        TQuasi => (
            ir,
            characterization(Quasi, |q| {
                eq(meet(prod(s(), q.clone()), prod(q.clone(), s())), q)
            }),
        ),
        T12 => (ir, both_ways(OneTwo, TwoSided)),
        Plo => (ir, both_ways(OneTwo, Interior)),
        Bint => (ir, both_ways(Bi, Interior)),
        Quo => (ir, both_ways(OneTwo, Quasi)),
        Li => (ir, characterization(TwoSided, both_products_fix)),
        Equalient => {
            let others: [(&str, SetPredicate); 8] = [
                ("right", Box::new(|a| kind(Right, a))),
                ("two-sided", Box::new(|a| kind(TwoSided, a))),
                ("AΓS=A and SΓA=A", Box::new(both_products_fix)),
                ("quasi", Box::new(|a| kind(Quasi, a))),
                ("one-two", Box::new(|a| kind(OneTwo, a))),
                ("gbi", Box::new(|a| kind(GeneralizedBi, a))),
                ("bi", Box::new(|a| kind(Bi, a))),
                ("interior", Box::new(|a| kind(Interior, a))),
            ];
            let clauses = others
                .iter()
                .map(|(name, f)| {
                    clause(
                        format!("left = {name}"),
                        all("A", Domain::Subsets, iff(kind(Left, var("A")), f(var("A")))),
                    )
                })
                .collect();
            (ir, clauses)
        }
        Ii => (ag, equivalent_to_regularity(every(Bi, idempotent), "")),
        Idl => (
            ir,
            vec![clause(
                "I∩J two-sided",
                for_ideal_pairs(kind(TwoSided, meet(var("I"), var("J")))),
            )],
        ),
        Ij => (
            ir,
            vec![clause(
                "IΓJ = I∩J",
                for_ideal_pairs(eq(prod(var("I"), var("J")), meet(var("I"), var("J")))),
            )],
        ),
        Iffff => (ag, equivalent_to_regularity(every(Left, idempotent), "")),
        Sla2 => (
            ag,
            equivalent_to_regularity(
                every(Left, |a| {
                    eq(a.clone(), prod(prod(s(), a.clone()), prod(s(), a)))
                }),
                "",
            ),
        ),
        Rlt => {
            let mut clauses = Vec::new();
            for k in [Right, Left, TwoSided] {
                for sense in Sense::BOTH {
                    clauses.push(clause(
                        format!("{k} ideals semiprime ({})", sense.tag()),
                        every(k, |r| sense.semiprime(r)),
                    ));
                }
            }
            (ir, clauses)
        }
        RSemiprimeEq => {
            let mut clauses = Vec::new();
            for sense in Sense::BOTH {
                clauses.extend(equivalent_to_regularity(
                    every(Right, |r| sense.semiprime(r)),
                    &format!(" {}", sense.tag()),
                ));
            }
            (ag, clauses)
        }
        Rintl => {
            let mut clauses = Vec::new();
            for sense in Sense::BOTH {
                clauses.extend(equivalent_to_regularity(
                    semiprime_right_left(
                        sense,
                        eq(meet(var("R"), var("L")), prod(var("R"), var("L"))),
                    ),
                    &format!(" {}", sense.tag()),
                ));
            }
            (ag, clauses)
        }
        Lrl => {
            let mut clauses = Vec::new();
            for sense in Sense::BOTH {
                let ii = semiprime_right_left(
                    sense,
                    sub(meet(var("L"), var("R")), prod(var("L"), var("R"))),
                );
                let iii = semiprime_right_left(
                    sense,
                    sub(
                        meet(var("L"), var("R")),
                        prod(prod(var("L"), var("R")), var("L")),
                    ),
                );
                let t = sense.tag();
                clauses.push(clause(
                    format!("(i)⇒(iii) {t}"),
                    implies(intra_regular(), iii.clone()),
                ));
                clauses.push(clause(format!("(iii)⇒(ii) {t}"), implies(iii, ii.clone())));
                clauses.push(clause(
                    format!("(ii)⇒(i) {t}"),
                    implies(ii, intra_regular()),
                ));
            }
            (ag, clauses)
        }
        PrimeIrr => {
            let prime = || Formula::Prime(var("P"));
            let irr = || Formula::StronglyIrreducible(var("P"));
            (
                ir,
                vec![
                    clause(
                        "prime ⇒ strongly irreducible",
                        all("P", family(TwoSided), implies(prime(), irr())),
                    ),
                    clause(
                        "strongly irreducible ⇒ prime",
                        all("P", family(TwoSided), implies(irr(), prime())),
                    ),
                ],
            )
        }
        TotalOrder => {
            let all_prime = all("P", family(TwoSided), Formula::Prime(var("P")));
            let chain = all(
                "P",
                family(TwoSided),
                all(
                    "Q",
                    family(TwoSided),
                    or(vec![sub(var("P"), var("Q")), sub(var("Q"), var("P"))]),
                ),
            );
            (
                ir,
                vec![
                    clause(
                        "all ideals prime ⇒ totally ordered",
                        implies(all_prime.clone(), chain.clone()),
                    ),
                    clause(
                        "totally ordered ⇒ all ideals prime",
                        implies(chain, all_prime),
                    ),
                ],
            )
        }
        Semilattice => {
            let (a, b, c) = (|| var("A"), || var("B"), || var("C"));
            let pairs = |body| all("A", family(TwoSided), all("B", family(TwoSided), body));
            (
                ir,
                vec![
                    clause("closure", pairs(kind(TwoSided, prod(a(), b())))),
                    clause("commutativity", pairs(eq(prod(a(), b()), prod(b(), a())))),
                    clause("idempotency", every(TwoSided, idempotent)),
                    clause(
                        "associativity",
                        pairs(all(
                            "C",
                            family(TwoSided),
                            eq(prod(prod(a(), b()), c()), prod(a(), prod(b(), c()))),
                        )),
                    ),
                ],
            )
        }
        Minimal => {
            let min = |v| Formula::Minimal(var(v));
            (
                ir,
                vec![
                    clause(
                        "minimal ⇒ meet of two minimal ideals",
                        all(
                            "Q",
                            family(TwoSided),
                            implies(
                                min("Q"),
                                any(
                                    "I",
                                    family(TwoSided),
                                    any(
                                        "J",
                                        family(TwoSided),
                                        and(vec![
                                            min("I"),
                                            min("J"),
                                            eq(var("Q"), meet(var("I"), var("J"))),
                                        ]),
                                    ),
                                ),
                            ),
                        ),
                    ),
                    clause(
                        "meet of two minimal ideals ⇒ minimal",
                        for_ideal_pairs(implies(
                            and(vec![
                                min("I"),
                                min("J"),
                                kind(TwoSided, meet(var("I"), var("J"))),
                            ]),
                            Formula::Minimal(meet(var("I"), var("J"))),
                        )),
                    ),
                ],
            )
        }
    }
}
