//! Subsets of a model's carrier and the subset product `AΓB`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::AlgebraError;
use crate::model::GammaGroupoid;

/// Default largest carrier for which all `2^n` subsets are swept.
pub const DEFAULT_SWEEP_CAP: usize = 12;

/// Environment variable that overrides [`DEFAULT_SWEEP_CAP`].
pub const SWEEP_CAP_ENV: &str = "GAG_SWEEP_CAP";

/// A subset of `0..order`, compared by extension. Ordering is by bitmask
/// value with element 0 as the least significant bit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    order: u8,
    bits: u64,
}

impl Subset {
    pub fn empty(order: usize) -> Self {
        debug_assert!(order <= 64);
        Subset {
            order: order as u8,
            bits: 0,
        }
    }

    pub fn full(order: usize) -> Self {
        Subset {
            order: order as u8,
            bits: mask_for(order),
        }
    }

    pub fn singleton(order: usize, x: usize) -> Self {
        debug_assert!(x < order);
        Subset {
            order: order as u8,
            bits: 1 << x,
        }
    }

    pub fn from_bits(order: usize, bits: u64) -> Self {
        Subset {
            order: order as u8,
            bits: bits & mask_for(order),
        }
    }

    pub fn from_elements(
        order: usize,
        elements: impl IntoIterator<Item = usize>,
    ) -> Result<Self, AlgebraError> {
        let mut s = Subset::empty(order);
        for x in elements {
            if x >= order {
                return Err(AlgebraError::IndexOutOfRange {
                    what: "element",
                    index: x,
                    bound: order,
                });
            }
            s.bits |= 1 << x;
        }
        Ok(s)
    }

    pub fn order(self) -> usize {
        self.order as usize
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn contains(self, x: usize) -> bool {
        x < self.order() && self.bits >> x & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn is_full(self) -> bool {
        self.bits == mask_for(self.order())
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset {
            order: self.order,
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset {
            order: self.order,
            bits: self.bits & other.bits,
        }
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.bits;
        (0..64).filter(move |&i| bits >> i & 1 == 1)
    }

    pub fn elements(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// `{a, c}` using the model's element names.
    pub fn display_with(self, g: &GammaGroupoid) -> String {
        let names: Vec<&str> = self.iter().map(|x| g.element_name(x)).collect();
        format!("{{{}}}", names.join(", "))
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

fn mask_for(order: usize) -> u64 {
    if order >= 64 {
        u64::MAX
    } else {
        (1u64 << order) - 1
    }
}

fn check_carrier(g: &GammaGroupoid, a: Subset) -> Result<(), AlgebraError> {
    if a.order() != g.order() {
        Err(AlgebraError::CarrierMismatch {
            subset: a.order(),
            model: g.order(),
        })
    } else {
        Ok(())
    }
}

fn require_non_empty(a: Subset) -> Result<(), AlgebraError> {
    if a.is_empty() {
        Err(AlgebraError::EmptySubset)
    } else {
        Ok(())
    }
}

pub(crate) fn check_operand(g: &GammaGroupoid, a: Subset) -> Result<(), AlgebraError> {
    check_carrier(g, a)?;
    require_non_empty(a)
}

/// The whole carrier of `g`.
pub fn carrier(g: &GammaGroupoid) -> Subset {
    Subset::full(g.order())
}

/// `AΓB = { aγb : a ∈ A, b ∈ B, γ ∈ Γ }`.
pub fn subset_product(g: &GammaGroupoid, a: Subset, b: Subset) -> Result<Subset, AlgebraError> {
    check_carrier(g, a)?;
    check_carrier(g, b)?;
    Ok(product_unchecked(g, a, b))
}

pub(crate) fn product_unchecked(g: &GammaGroupoid, a: Subset, b: Subset) -> Subset {
    let mut bits = 0u64;
    for x in a.iter() {
        for k in 0..g.gammas() {
            for y in b.iter() {
                bits |= 1 << g.op(x, k, y);
            }
        }
    }
    Subset::from_bits(g.order(), bits)
}

/// `AΓA`.
pub fn square(g: &GammaGroupoid, a: Subset) -> Result<Subset, AlgebraError> {
    subset_product(g, a, a)
}

/// Least `A ⊇ X` with `SΓA ⊆ A`.
pub fn generated_left_ideal(g: &GammaGroupoid, x: Subset) -> Result<Subset, AlgebraError> {
    check_operand(g, x)?;
    let s = carrier(g);
    Ok(close(x, |a| product_unchecked(g, s, a)))
}

/// Least `A ⊇ X` with `AΓS ⊆ A`.
pub fn generated_right_ideal(g: &GammaGroupoid, x: Subset) -> Result<Subset, AlgebraError> {
    check_operand(g, x)?;
    let s = carrier(g);
    Ok(close(x, |a| product_unchecked(g, a, s)))
}

/// Least `A ⊇ X` with `SΓA ∪ AΓS ⊆ A`.
pub fn generated_two_sided_ideal(g: &GammaGroupoid, x: Subset) -> Result<Subset, AlgebraError> {
    check_operand(g, x)?;
    let s = carrier(g);
    Ok(close(x, |a| {
        product_unchecked(g, s, a).union(product_unchecked(g, a, s))
    }))
}

/// Iterates `A ↦ A ∪ step(A)` to its fixpoint; at most `order` rounds.
fn close(start: Subset, step: impl Fn(Subset) -> Subset) -> Subset {
    let mut a = start;
    loop {
        let next = a.union(step(a));
        if next == a {
            return a;
        }
        a = next;
    }
}

/// Resolves the sweep cap from [`SWEEP_CAP_ENV`], falling back to the default.
pub fn sweep_cap_from_env() -> usize {
    std::env::var(SWEEP_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_SWEEP_CAP)
}

/// Every non-empty subset of `g` in ascending order, or a capacity error.
pub fn all_non_empty_subsets(
    g: &GammaGroupoid,
    cap: usize,
) -> Result<impl Iterator<Item = Subset>, AlgebraError> {
    let n = g.order();
    if n > cap || n >= 63 {
        return Err(AlgebraError::SweepCapExceeded {
            order: n,
            cap: cap.min(62),
        });
    }
    Ok((1u64..1 << n).map(move |bits| Subset::from_bits(n, bits)))
}

/// Non-empty subsets satisfying `predicate`, ascending. Uses the default cap.
pub fn list_subsets_satisfying(
    g: &GammaGroupoid,
    predicate: impl Fn(&GammaGroupoid, Subset) -> Result<bool, AlgebraError>,
) -> Result<Vec<Subset>, AlgebraError> {
    list_subsets_satisfying_capped(g, DEFAULT_SWEEP_CAP, predicate)
}

pub fn list_subsets_satisfying_capped(
    g: &GammaGroupoid,
    cap: usize,
    predicate: impl Fn(&GammaGroupoid, Subset) -> Result<bool, AlgebraError>,
) -> Result<Vec<Subset>, AlgebraError> {
    let mut out = Vec::new();
    for a in all_non_empty_subsets(g, cap)? {
        if predicate(g, a)? {
            out.push(a);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals;

    fn m5() -> GammaGroupoid {
        GammaGroupoid::paper_example()
    }

    fn set(xs: &[usize]) -> Subset {
        Subset::from_elements(5, xs.iter().copied()).unwrap()
    }

    #[test]
    fn products_on_example() {
        let g = m5();
        let s = carrier(&g);
        assert_eq!(subset_product(&g, set(&[1]), set(&[1])).unwrap(), set(&[1]));
        assert_eq!(
            subset_product(&g, Subset::empty(5), s).unwrap(),
            Subset::empty(5)
        );
        assert_eq!(subset_product(&g, s, s).unwrap(), s);
    }

    #[test]
    fn squares_on_example() {
        let g = m5();
        assert_eq!(square(&g, set(&[2])).unwrap(), set(&[1]));
        assert_eq!(square(&g, Subset::empty(5)).unwrap(), Subset::empty(5));
        assert_eq!(square(&g, set(&[0, 1])).unwrap(), set(&[0, 1]));
    }

    #[test]
    fn generated_ideals_on_example() {
        let g = m5();
        let s = carrier(&g);
        assert_eq!(generated_left_ideal(&g, set(&[0])).unwrap(), set(&[0]));
        assert_eq!(generated_left_ideal(&g, set(&[1])).unwrap(), s);
        assert_eq!(generated_left_ideal(&g, s).unwrap(), s);
        assert_eq!(generated_right_ideal(&g, set(&[0])).unwrap(), set(&[0]));
        assert_eq!(generated_two_sided_ideal(&g, set(&[0])).unwrap(), set(&[0]));
        assert_eq!(generated_two_sided_ideal(&g, set(&[2])).unwrap(), s);
        assert_eq!(generated_right_ideal(&g, s).unwrap(), s);
    }

    #[test]
    fn generators_reject_empty_and_foreign_sets() {
        let g = m5();
        assert_eq!(
            generated_left_ideal(&g, Subset::empty(5)),
            Err(AlgebraError::EmptySubset)
        );
        assert!(matches!(
            subset_product(&g, Subset::full(3), Subset::full(5)),
            Err(AlgebraError::CarrierMismatch {
                subset: 3,
                model: 5
            })
        ));
    }

    #[test]
    fn sweep_lists_example_ideals() {
        let g = m5();
        let ideals = list_subsets_satisfying(&g, ideals::is_two_sided_ideal).unwrap();
        assert!(ideals.contains(&set(&[0])));
        assert!(ideals.contains(&carrier(&g)));
        // brute force: A is an ideal iff SA ∪ AS ⊆ A, checked elementwise
        let mut expected = Vec::new();
        for bits in 1u64..32 {
            let a = Subset::from_bits(5, bits);
            let closed = a
                .iter()
                .all(|x| (0..5).all(|s| a.contains(g.op(s, 0, x)) && a.contains(g.op(x, 0, s))));
            if closed {
                expected.push(a);
            }
        }
        assert_eq!(ideals, expected);
        let left = list_subsets_satisfying(&g, ideals::is_left_ideal).unwrap();
        let right = list_subsets_satisfying(&g, ideals::is_right_ideal).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn sweep_on_singleton_model() {
        let g = GammaGroupoid::new(1, 1, vec![0]).unwrap();
        let fam = list_subsets_satisfying(&g, ideals::is_left_ideal).unwrap();
        assert_eq!(fam, vec![Subset::full(1)]);
    }

    #[test]
    fn sweep_cap_enforced() {
        let g = GammaGroupoid::from_fn(13, 1, |_, _, _| 0).unwrap();
        assert!(matches!(
            list_subsets_satisfying(&g, ideals::is_left_ideal),
            Err(AlgebraError::SweepCapExceeded { order: 13, cap: 12 })
        ));
        assert!(list_subsets_satisfying_capped(&g, 13, ideals::is_left_ideal).is_ok());
    }
}
