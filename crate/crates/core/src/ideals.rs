//! Ideal classes of a Γ-AG-groupoid, decided extensionally on subsets.
//!
//! Every predicate takes a non-empty subset of the model's carrier and
//! returns [`AlgebraError::EmptySubset`] otherwise. Prime, semiprime and
//! strongly irreducible are quantified over the two-sided ideal family, which
//! is obtained by an exhaustive sweep.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::model::GammaGroupoid;
use crate::subset::{
    carrier, check_operand, list_subsets_satisfying_capped, product_unchecked, Subset,
    DEFAULT_SWEEP_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IdealKind {
    #[serde(rename = "subgroupoid")]
    Subgroupoid,
    #[serde(rename = "left")]
    Left,
    #[serde(rename = "right")]
    Right,
    #[serde(rename = "two-sided")]
    TwoSided,
    #[serde(rename = "bi")]
    Bi,
    #[serde(rename = "gbi")]
    GeneralizedBi,
    #[serde(rename = "interior")]
    Interior,
    #[serde(rename = "quasi")]
    Quasi,
    #[serde(rename = "one-two")]
    OneTwo,
}

impl IdealKind {
    pub const ALL: [IdealKind; 9] = [
        IdealKind::Subgroupoid,
        IdealKind::Left,
        IdealKind::Right,
        IdealKind::TwoSided,
        IdealKind::Bi,
        IdealKind::GeneralizedBi,
        IdealKind::Interior,
        IdealKind::Quasi,
        IdealKind::OneTwo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdealKind::Subgroupoid => "subgroupoid",
            IdealKind::Left => "left",
            IdealKind::Right => "right",
            IdealKind::TwoSided => "two-sided",
            IdealKind::Bi => "bi",
            IdealKind::GeneralizedBi => "gbi",
            IdealKind::Interior => "interior",
            IdealKind::Quasi => "quasi",
            IdealKind::OneTwo => "one-two",
        }
    }

    pub fn holds(self, g: &GammaGroupoid, a: Subset) -> Result<bool, AlgebraError> {
        match self {
            IdealKind::Subgroupoid => is_subgroupoid(g, a),
            IdealKind::Left => is_left_ideal(g, a),
            IdealKind::Right => is_right_ideal(g, a),
            IdealKind::TwoSided => is_two_sided_ideal(g, a),
            IdealKind::Bi => is_bi_ideal(g, a),
            IdealKind::GeneralizedBi => is_generalized_bi_ideal(g, a),
            IdealKind::Interior => is_interior_ideal(g, a),
            IdealKind::Quasi => is_quasi_ideal(g, a),
            IdealKind::OneTwo => is_one_two_ideal(g, a),
        }
    }

    /// All non-empty subsets of this kind, ascending.
    pub fn family(self, g: &GammaGroupoid, cap: usize) -> Result<Vec<Subset>, AlgebraError> {
        list_subsets_satisfying_capped(g, cap, |g, a| self.holds(g, a))
    }
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdealKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdealKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown ideal kind `{s}`"))
    }
}

fn prod(g: &GammaGroupoid, a: Subset, b: Subset) -> Subset {
    product_unchecked(g, a, b)
}

/// `AΓA ⊆ A`.
pub fn is_subgroupoid(g: &GammaGroupoid, a: Subset) -> Result<bool, AlgebraError> {
    check_operand(g, a)?;
    Ok(prod(g, a, a).is_subset_of(a))
}

/// `SΓA ⊆ A`.
pub fn is_left_ideal(g: &GammaGroupoid, a: Subset) -> Result<bool, AlgebraError> {
    check_operand(g, a)?;
    Ok(prod(g, carrier(g), a).is_subset_of(a))
}

/// `AΓS ⊆ A`.
pub fn is_right_ideal(g: &GammaGroupoid, a: Subset) -> Result<bool, AlgebraError> {
    check_operand(g, a)?;
    Ok(prod(g, a, carrier(g)).is_subset_of(a))
}

pub fn is_two_sided_ideal(g: &GammaGroupoid, a: Subset) -> Result<bool, AlgebraError> {
    Ok(is_left_ideal(g, a)? && is_right_ideal(g, a)?)
}

/// Subgroupoid with `(AΓS)ΓA ⊆ A`.
pub fn is_bi_ideal(g: &GammaGroupoid, a: Subset) -> Result<bool, AlgebraError> {
    Ok(is_subgroupoid(g, a)? && is_generalized_bi_ideal(g, a)?)
}

/// `(AΓS)ΓA ⊆ A`, without the subgroupoid requirement.
pub fn is_generalized_bi_ideal(g: &GammaGroupoid, a: Subset) -> Result<bool, AlgebraError> {
    check_operand(g, a)?;
    let as_ = prod(g, a, carrier(g));
    Ok(prod(g, as_, a).is_subset_of(a))
}

/// Subgroupoid with `(SΓA)ΓS ⊆ A`.
pub fn is_interior_ideal(g: &GammaGroupoid, a: Subset) -> Result<bool, AlgebraError> {
    if !is_subgroupoid(g, a)? {
        return Ok(false);
    }
    let s = carrier(g);
    Ok(prod(g, prod(g, s, a), s).is_subset_of(a))
}

/// `SΓA ∩ AΓS ⊆ A`; no subgroupoid requirement.
pub fn is_quasi_ideal(g: &GammaGroupoid, a: Subset) -> Result<bool, AlgebraError> {
    Ok(quasi_violation(g, a)?.is_none())
}

/// Least element of `SΓA ∩ AΓS` outside `A`, if any.
pub fn quasi_violation(g: &GammaGroupoid, a: Subset) -> Result<Option<usize>, AlgebraError> {
    check_operand(g, a)?;
    let s = carrier(g);
    let meet = prod(g, s, a).intersection(prod(g, a, s));
    Ok(meet.iter().find(|&x| !a.contains(x)))
}

/// Subgroupoid with `(AΓS)Γ(AΓA) ⊆ A`.
pub fn is_one_two_ideal(g: &GammaGroupoid, a: Subset) -> Result<bool, AlgebraError> {
    if !is_subgroupoid(g, a)? {
        return Ok(false);
    }
    let as_ = prod(g, a, carrier(g));
    Ok(prod(g, as_, prod(g, a, a)).is_subset_of(a))
}

/// `AΓA = A`.
pub fn is_idempotent_subset(g: &GammaGroupoid, a: Subset) -> Result<bool, AlgebraError> {
    check_operand(g, a)?;
    Ok(prod(g, a, a) == a)
}

/// The non-empty two-sided ideals of `g`, ascending.
pub fn two_sided_family(g: &GammaGroupoid, cap: usize) -> Result<Vec<Subset>, AlgebraError> {
    IdealKind::TwoSided.family(g, cap)
}

fn require_ideal(g: &GammaGroupoid, p: Subset) -> Result<(), AlgebraError> {
    if is_two_sided_ideal(g, p)? {
        Ok(())
    } else {
        Err(AlgebraError::NotAnIdeal)
    }
}

/// Prime: `AΓB ⊆ P ⇒ A ⊆ P ∨ B ⊆ P` over all two-sided ideals `A, B`.
pub fn is_prime(g: &GammaGroupoid, p: Subset) -> Result<bool, AlgebraError> {
    require_ideal(g, p)?;
    let family = two_sided_family(g, DEFAULT_SWEEP_CAP)?;
    Ok(prime_over(g, &family, p))
}

/// Semiprime: `AΓA ⊆ P ⇒ A ⊆ P` over all two-sided ideals `A`.
pub fn is_semiprime(g: &GammaGroupoid, p: Subset) -> Result<bool, AlgebraError> {
    require_ideal(g, p)?;
    let family = two_sided_family(g, DEFAULT_SWEEP_CAP)?;
    Ok(semiprime_over(g, &family, p))
}

/// Strongly irreducible: `A ∩ B ⊆ P ⇒ A ⊆ P ∨ B ⊆ P` over two-sided ideals.
pub fn is_strongly_irreducible(g: &GammaGroupoid, p: Subset) -> Result<bool, AlgebraError> {
    require_ideal(g, p)?;
    let family = two_sided_family(g, DEFAULT_SWEEP_CAP)?;
    Ok(strongly_irreducible_over(&family, p))
}

/// The prime condition for `p` against a precomputed ideal family. `p` need
/// not itself be an ideal.
pub fn prime_over(g: &GammaGroupoid, family: &[Subset], p: Subset) -> bool {
    family.iter().all(|&a| {
        family
            .iter()
            .all(|&b| !prod(g, a, b).is_subset_of(p) || a.is_subset_of(p) || b.is_subset_of(p))
    })
}

pub fn semiprime_over(g: &GammaGroupoid, family: &[Subset], p: Subset) -> bool {
    family
        .iter()
        .all(|&a| !prod(g, a, a).is_subset_of(p) || a.is_subset_of(p))
}

pub fn strongly_irreducible_over(family: &[Subset], p: Subset) -> bool {
    family.iter().all(|&a| {
        family
            .iter()
            .all(|&b| !a.intersection(b).is_subset_of(p) || a.is_subset_of(p) || b.is_subset_of(p))
    })
}

/// Element-wise semiprime: `aΓa ⊆ P ⇒ a ∈ P` for every element `a`.
pub fn is_elementwise_semiprime(g: &GammaGroupoid, p: Subset) -> Result<bool, AlgebraError> {
    check_operand(g, p)?;
    Ok((0..g.order()).all(|a| {
        let single = Subset::singleton(g.order(), a);
        !prod(g, single, single).is_subset_of(p) || p.contains(a)
    }))
}
