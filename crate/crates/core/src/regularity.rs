//! Intra-regularity: `a = (x β (a δ a)) γ y` for some `x, y, β, δ, γ`.

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::model::GammaGroupoid;
use crate::subset::{carrier, subset_product, Subset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntraWitness {
    pub x: usize,
    pub y: usize,
    pub beta: usize,
    pub delta: usize,
    pub gamma: usize,
}

impl IntraWitness {
    /// Evaluates `(x β (a δ a)) γ y`.
    pub fn evaluate(&self, g: &GammaGroupoid, a: usize) -> usize {
        let square = g.op(a, self.delta, a);
        g.op(g.op(self.x, self.beta, square), self.gamma, self.y)
    }

    pub fn certifies(&self, g: &GammaGroupoid, a: usize) -> bool {
        a < g.order()
            && self.x < g.order()
            && self.y < g.order()
            && [self.beta, self.delta, self.gamma]
                .iter()
                .all(|&k| k < g.gammas())
            && self.evaluate(g, a) == a
    }

    /// `b = (c·(b·b))·e` for one operator, `b = (c g0 (b g1 b)) g0 e` otherwise.
    pub fn render(&self, g: &GammaGroupoid, a: usize) -> String {
        let e = |i: usize| g.element_name(i);
        if g.gammas() == 1 {
            format!(
                "{} = ({}·({}·{}))·{}",
                e(a),
                e(self.x),
                e(a),
                e(a),
                e(self.y)
            )
        } else {
            let k = |i: usize| g.gamma_name(i);
            format!(
                "{} = ({} {} ({} {} {})) {} {}",
                e(a),
                e(self.x),
                k(self.beta),
                e(a),
                k(self.delta),
                e(a),
                k(self.gamma),
                e(self.y)
            )
        }
    }
}

fn check_element(g: &GammaGroupoid, a: usize) -> Result<(), AlgebraError> {
    if a >= g.order() {
        Err(AlgebraError::IndexOutOfRange {
            what: "element",
            index: a,
            bound: g.order(),
        })
    } else {
        Ok(())
    }
}

/// The least witness in `(x, y, β, δ, γ)` order, if `a` is intra-regular.
pub fn intra_witness(g: &GammaGroupoid, a: usize) -> Result<Option<IntraWitness>, AlgebraError> {
    check_element(g, a)?;
    let (n, m) = (g.order(), g.gammas());
    for x in 0..n {
        for y in 0..n {
            for beta in 0..m {
                for delta in 0..m {
                    for gamma in 0..m {
                        let w = IntraWitness {
                            x,
                            y,
                            beta,
                            delta,
                            gamma,
                        };
                        if w.evaluate(g, a) == a {
                            return Ok(Some(w));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Elements with no intra-regularity witness, ascending.
pub fn non_intra_regular_elements(g: &GammaGroupoid) -> Vec<usize> {
    (0..g.order())
        .filter(|&a| matches!(intra_witness(g, a), Ok(None)))
        .collect()
}

pub fn is_intra_regular(g: &GammaGroupoid) -> bool {
    (0..g.order()).all(|a| matches!(intra_witness(g, a), Ok(Some(_))))
}

/// Set-level test `a ∈ (SΓ{aδa : δ ∈ Γ})ΓS`, built only from subset products.
pub fn intra_oracle(g: &GammaGroupoid, a: usize) -> Result<bool, AlgebraError> {
    check_element(g, a)?;
    let single = Subset::singleton(g.order(), a);
    let squares = subset_product(g, single, single)?;
    let s = carrier(g);
    let lhs = subset_product(g, s, squares)?;
    Ok(subset_product(g, lhs, s)?.contains(a))
}
