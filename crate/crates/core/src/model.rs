//! Finite Γ-AG-groupoids as total operation tables.
//!
//! A model has a carrier `0..order` and operators `0..gammas`; the table maps
//! `(i, k, j)` to the element written `i γk j`. Cells are stored row-major in
//! `(i, k, j)` order, which is also the order used by canonical forms and by
//! the enumerator's fill order.

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;

/// Largest carrier supported; subsets are single-word bitsets.
pub const MAX_ORDER: usize = 64;

/// Display names for elements and operators. Presentation only: two models
/// with the same table but different names are isomorphic by the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Labels {
    pub elements: Vec<String>,
    pub gammas: Vec<String>,
}

impl Labels {
    pub fn numeric(order: usize, gammas: usize) -> Self {
        Labels {
            elements: (0..order).map(|i| i.to_string()).collect(),
            gammas: (0..gammas).map(|k| format!("g{k}")).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GammaGroupoid {
    order: usize,
    gammas: usize,
    table: Vec<u8>,
    labels: Labels,
}

impl GammaGroupoid {
    /// Builds a model from a flat `(i, k, j)`-ordered table with numeric labels.
    pub fn new(order: usize, gammas: usize, table: Vec<u8>) -> Result<Self, AlgebraError> {
        Self::with_labels(order, gammas, table, Labels::numeric(order, gammas))
    }

    pub fn with_labels(
        order: usize,
        gammas: usize,
        table: Vec<u8>,
        labels: Labels,
    ) -> Result<Self, AlgebraError> {
        if order == 0 || gammas == 0 {
            return Err(AlgebraError::InvalidModel(
                "carrier and operator set must be non-empty".into(),
            ));
        }
        if order > MAX_ORDER {
            return Err(AlgebraError::InvalidModel(format!(
                "order {order} exceeds the supported maximum of {MAX_ORDER}"
            )));
        }
        if gammas > u8::MAX as usize {
            return Err(AlgebraError::InvalidModel(format!(
                "{gammas} operators exceed the supported maximum of 255"
            )));
        }
        if table.len() != order * gammas * order {
            return Err(AlgebraError::InvalidModel(format!(
                "table has {} cells, expected {}",
                table.len(),
                order * gammas * order
            )));
        }
        if let Some(pos) = table.iter().position(|&v| v as usize >= order) {
            return Err(AlgebraError::InvalidModel(format!(
                "cell {pos} holds {} which is not an element",
                table[pos]
            )));
        }
        if labels.elements.len() != order || labels.gammas.len() != gammas {
            return Err(AlgebraError::InvalidModel(
                "label counts do not match the carrier and operator set".into(),
            ));
        }
        Ok(GammaGroupoid {
            order,
            gammas,
            table,
            labels,
        })
    }

    /// Builds a model from a closure `op(i, k, j)`.
    pub fn from_fn(
        order: usize,
        gammas: usize,
        op: impl Fn(usize, usize, usize) -> usize,
    ) -> Result<Self, AlgebraError> {
        let mut table = Vec::with_capacity(order * gammas * order);
        for i in 0..order {
            for k in 0..gammas {
                for j in 0..order {
                    let v = op(i, k, j);
                    table.push(u8::try_from(v).unwrap_or(u8::MAX));
                }
            }
        }
        Self::new(order, gammas, table)
    }

    /// The five-element single-operator example bundled with the crate.
    pub fn paper_example() -> Self {
        crate::format::parse_model(crate::format::PAPER_EXAMPLE).expect("bundled example parses")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn gammas(&self) -> usize {
        self.gammas
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    pub fn cells(&self) -> &[u8] {
        &self.table
    }

    pub fn element_name(&self, i: usize) -> &str {
        &self.labels.elements[i]
    }

    pub fn gamma_name(&self, k: usize) -> &str {
        &self.labels.gammas[k]
    }

    pub fn relabeled(&self, labels: Labels) -> Result<Self, AlgebraError> {
        Self::with_labels(self.order, self.gammas, self.table.clone(), labels)
    }

    /// `i γk j`, bounds-checked.
    pub fn product(&self, i: usize, k: usize, j: usize) -> Result<usize, AlgebraError> {
        if i >= self.order {
            return Err(AlgebraError::IndexOutOfRange {
                what: "element",
                index: i,
                bound: self.order,
            });
        }
        if j >= self.order {
            return Err(AlgebraError::IndexOutOfRange {
                what: "element",
                index: j,
                bound: self.order,
            });
        }
        if k >= self.gammas {
            return Err(AlgebraError::IndexOutOfRange {
                what: "operator",
                index: k,
                bound: self.gammas,
            });
        }
        Ok(self.op(i, k, j))
    }

    /// `i γk j`; panics on out-of-range indices.
    #[inline]
    pub fn op(&self, i: usize, k: usize, j: usize) -> usize {
        self.table[(i * self.gammas + k) * self.order + j] as usize
    }

    pub fn violation(&self, law: Law) -> Option<LawWitness> {
        match law {
            Law::LeftInvertive => self.left_invertive_violation(),
            Law::Medial => self.medial_violation(),
            Law::AgStarStar => self.ag_star_star_violation(),
            Law::Paramedial => self.paramedial_violation(),
        }
    }

    pub fn satisfies(&self, law: Law) -> bool {
        self.violation(law).is_none()
    }

    pub fn is_left_invertive(&self) -> bool {
        self.satisfies(Law::LeftInvertive)
    }

    pub fn is_medial(&self) -> bool {
        self.satisfies(Law::Medial)
    }

    pub fn is_ag_star_star(&self) -> bool {
        self.satisfies(Law::AgStarStar)
    }

    pub fn is_paramedial(&self) -> bool {
        self.satisfies(Law::Paramedial)
    }

    /// `(xγy)δz = (zγy)δx`, scanned in `(x, y, z, γ, δ)` order.
    pub fn left_invertive_violation(&self) -> Option<LawWitness> {
        let (n, m) = (self.order, self.gammas);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for g in 0..m {
                        for d in 0..m {
                            if Law::LeftInvertive
                                .sides(self, &[x, y, z], &[g, d])
                                .is_none()
                            {
                                return Some(LawWitness::new(
                                    Law::LeftInvertive,
                                    vec![x, y, z],
                                    vec![g, d],
                                ));
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// `(xαy)β(lγm) = (xαl)β(yγm)`, scanned in `(x, y, l, m, α, β, γ)` order.
    pub fn medial_violation(&self) -> Option<LawWitness> {
        self.four_variable_violation(Law::Medial)
    }

    /// `(xαy)β(lγm) = (mαl)β(yγx)`, scanned in `(x, y, l, m, α, β, γ)` order.
    pub fn paramedial_violation(&self) -> Option<LawWitness> {
        self.four_variable_violation(Law::Paramedial)
    }

    fn four_variable_violation(&self, law: Law) -> Option<LawWitness> {
        let (n, m) = (self.order, self.gammas);
        for x in 0..n {
            for y in 0..n {
                for l in 0..n {
                    for w in 0..n {
                        for a in 0..m {
                            for b in 0..m {
                                for c in 0..m {
                                    if law.sides(self, &[x, y, l, w], &[a, b, c]).is_none() {
                                        return Some(LawWitness::new(
                                            law,
                                            vec![x, y, l, w],
                                            vec![a, b, c],
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// `aα(bβc) = bα(aβc)`, scanned in `(a, b, c, α, β)` order.
    pub fn ag_star_star_violation(&self) -> Option<LawWitness> {
        let (n, m) = (self.order, self.gammas);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for al in 0..m {
                        for be in 0..m {
                            if Law::AgStarStar.sides(self, &[a, b, c], &[al, be]).is_none() {
                                return Some(LawWitness::new(
                                    Law::AgStarStar,
                                    vec![a, b, c],
                                    vec![al, be],
                                ));
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// Every `e` with `e γ x = x` for all `x` and all `γ`, ascending.
    pub fn left_identities(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&e| (0..self.gammas).all(|k| (0..self.order).all(|x| self.op(e, k, x) == x)))
            .collect()
    }

    pub fn axiom_profile(&self) -> AxiomProfile {
        AxiomProfile {
            left_invertive: self.is_left_invertive(),
            medial: self.is_medial(),
            ag_star_star: self.is_ag_star_star(),
            paramedial: self.is_paramedial(),
            left_identities: self.left_identities(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    LeftInvertive,
    Medial,
    AgStarStar,
    Paramedial,
}

impl Law {
    pub const ALL: [Law; 4] = [
        Law::LeftInvertive,
        Law::Medial,
        Law::AgStarStar,
        Law::Paramedial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::LeftInvertive => "left-invertive",
            Law::Medial => "medial",
            Law::AgStarStar => "ag-star-star",
            Law::Paramedial => "paramedial",
        }
    }

    pub fn element_arity(self) -> usize {
        match self {
            Law::LeftInvertive | Law::AgStarStar => 3,
            Law::Medial | Law::Paramedial => 4,
        }
    }

    pub fn gamma_arity(self) -> usize {
        match self {
            Law::LeftInvertive | Law::AgStarStar => 2,
            Law::Medial | Law::Paramedial => 3,
        }
    }

    /// Evaluates both sides of one ground instance; `None` when they differ.
    fn sides(self, g: &GammaGroupoid, e: &[usize], k: &[usize]) -> Option<usize> {
        let (lhs, rhs) = self.evaluate(g, e, k);
        (lhs == rhs).then_some(lhs)
    }

    /// Both sides of the instance given by `elements` and `gammas`.
    pub fn evaluate(self, g: &GammaGroupoid, e: &[usize], k: &[usize]) -> (usize, usize) {
        match self {
            Law::LeftInvertive => {
                let (x, y, z, gm, d) = (e[0], e[1], e[2], k[0], k[1]);
                (g.op(g.op(x, gm, y), d, z), g.op(g.op(z, gm, y), d, x))
            }
            Law::AgStarStar => {
                let (a, b, c, al, be) = (e[0], e[1], e[2], k[0], k[1]);
                (g.op(a, al, g.op(b, be, c)), g.op(b, al, g.op(a, be, c)))
            }
            Law::Medial => {
                let (x, y, l, w, a, b, c) = (e[0], e[1], e[2], e[3], k[0], k[1], k[2]);
                (
                    g.op(g.op(x, a, y), b, g.op(l, c, w)),
                    g.op(g.op(x, a, l), b, g.op(y, c, w)),
                )
            }
            Law::Paramedial => {
                let (x, y, l, w, a, b, c) = (e[0], e[1], e[2], e[3], k[0], k[1], k[2]);
                (
                    g.op(g.op(x, a, y), b, g.op(l, c, w)),
                    g.op(g.op(w, a, l), b, g.op(y, c, x)),
                )
            }
        }
    }
}

/// The lexicographically least failing instance of a law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawWitness {
    pub law: Law,
    pub elements: Vec<usize>,
    pub gammas: Vec<usize>,
}

impl LawWitness {
    fn new(law: Law, elements: Vec<usize>, gammas: Vec<usize>) -> Self {
        LawWitness {
            law,
            elements,
            gammas,
        }
    }

    /// True when the instance still fails on `g`.
    pub fn reproduces_on(&self, g: &GammaGroupoid) -> bool {
        if self.elements.len() != self.law.element_arity()
            || self.gammas.len() != self.law.gamma_arity()
            || self.elements.iter().any(|&x| x >= g.order())
            || self.gammas.iter().any(|&k| k >= g.gammas())
        {
            return false;
        }
        let (lhs, rhs) = self.law.evaluate(g, &self.elements, &self.gammas);
        lhs != rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct AxiomProfile {
    pub left_invertive: bool,
    pub medial: bool,
    pub ag_star_star: bool,
    pub paramedial: bool,
    pub left_identities: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trivial() -> GammaGroupoid {
        GammaGroupoid::new(1, 1, vec![0]).unwrap()
    }

    #[test]
    fn product_on_example() {
        let g = GammaGroupoid::paper_example();
        // a..e -> 0..4
        assert_eq!(g.product(1, 0, 2).unwrap(), 2);
        assert_eq!(g.product(2, 0, 1).unwrap(), 4);
        assert_eq!(g.product(0, 0, 4).unwrap(), 0);
    }

    #[test]
    fn product_rejects_bad_indices() {
        let g = GammaGroupoid::paper_example();
        assert!(matches!(
            g.product(5, 0, 0),
            Err(AlgebraError::IndexOutOfRange {
                what: "element",
                ..
            })
        ));
        assert!(matches!(
            g.product(0, 1, 0),
            Err(AlgebraError::IndexOutOfRange {
                what: "operator",
                ..
            })
        ));
        assert!(g.product(0, 0, 5).is_err());
    }

    #[test]
    fn construction_rejects_non_total_tables() {
        assert!(GammaGroupoid::new(2, 1, vec![0, 1, 1]).is_err());
        assert!(GammaGroupoid::new(2, 1, vec![0, 1, 1, 2]).is_err());
        assert!(GammaGroupoid::new(0, 1, vec![]).is_err());
        assert!(GammaGroupoid::new(1, 0, vec![]).is_err());
    }

    #[test]
    fn example_satisfies_every_law() {
        let g = GammaGroupoid::paper_example();
        let p = g.axiom_profile();
        assert!(p.left_invertive && p.medial && p.ag_star_star && p.paramedial);
        assert_eq!(p.left_identities, vec![1]);
    }

    #[test]
    fn singleton_model() {
        let p = trivial().axiom_profile();
        assert_eq!(
            p,
            AxiomProfile {
                left_invertive: true,
                medial: true,
                ag_star_star: true,
                paramedial: true,
                left_identities: vec![0],
            }
        );
    }

    #[test]
    fn second_projection_fails_left_invertive() {
        let g = GammaGroupoid::from_fn(2, 1, |_, _, j| j).unwrap();
        let w = g.left_invertive_violation().unwrap();
        assert_eq!(w.elements, vec![0, 0, 1]);
        assert_eq!(w.gammas, vec![0, 0]);
        assert!(w.reproduces_on(&g));
        assert!(!g.axiom_profile().left_invertive);
        assert!(g.is_ag_star_star());
    }

    #[test]
    fn first_projection_is_medial() {
        let g = GammaGroupoid::from_fn(3, 2, |i, _, _| i).unwrap();
        assert!(g.is_medial());
    }

    #[test]
    fn constant_model() {
        let g = GammaGroupoid::from_fn(3, 1, |_, _, _| 0).unwrap();
        assert!(g.is_paramedial());
        assert!(g.left_identities().is_empty());
    }

    #[test]
    fn witness_is_least_instance() {
        // Brute force over all instances in (x, y, z, γ, δ) order.
        let g = GammaGroupoid::from_fn(3, 2, |i, k, j| (i * 2 + j + k) % 3).unwrap();
        let mut first = None;
        'outer: for x in 0..3 {
            for y in 0..3 {
                for z in 0..3 {
                    for a in 0..2 {
                        for b in 0..2 {
                            if g.op(g.op(x, a, y), b, z) != g.op(g.op(z, a, y), b, x) {
                                first = Some((vec![x, y, z], vec![a, b]));
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
        let w = g.left_invertive_violation();
        assert_eq!(w.map(|w| (w.elements, w.gammas)), first);
    }
}
