//! Canonical forms: the least relabeled table over all element and operator permutations.

use std::cmp::Ordering;

use itertools::Itertools;
use serde::Serialize;

use crate::error::AlgebraError;
use crate::model::GammaGroupoid;

pub const MAX_CANON_ORDER: usize = 6;
pub const MAX_CANON_GAMMAS: usize = 3;

/// Cells of the least relabeling, in `(i, γ, j)` order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm {
    order: usize,
    gammas: usize,
    cells: Vec<u8>,
}

impl CanonicalForm {
    pub(crate) fn from_cells(order: usize, gammas: usize, cells: Vec<u8>) -> Self {
        CanonicalForm {
            order,
            gammas,
            cells,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn gammas(&self) -> usize {
        self.gammas
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    /// The representative model, with numeric labels.
    pub fn to_model(&self) -> GammaGroupoid {
        GammaGroupoid::new(self.order, self.gammas, self.cells.clone())
            .expect("canonical cells form a total table")
    }
}

pub(crate) fn check_guard(order: usize, gammas: usize) -> Result<(), AlgebraError> {
    if order > MAX_CANON_ORDER || gammas > MAX_CANON_GAMMAS {
        Err(AlgebraError::CanonGuard {
            order,
            gammas,
            max_order: MAX_CANON_ORDER,
            max_gammas: MAX_CANON_GAMMAS,
        })
    } else {
        Ok(())
    }
}

pub fn canonicalize(g: &GammaGroupoid) -> Result<CanonicalForm, AlgebraError> {
    check_guard(g.order(), g.gammas())?;
    let sym = Symmetries::new(g.order(), g.gammas());
    Ok(CanonicalForm::from_cells(
        g.order(),
        g.gammas(),
        sym.minimum(g.cells()),
    ))
}

/// `(forward, inverse)` pairs for every permutation of `0..n`.
fn permutations(n: usize) -> Vec<(Vec<u8>, Vec<u8>)> {
    (0..n as u8)
        .permutations(n)
        .map(|p| {
            let mut inv = vec![0; n];
            for (i, &x) in p.iter().enumerate() {
                inv[x as usize] = i as u8;
            }
            (p, inv)
        })
        .collect()
}

/// All simultaneous relabelings of one table shape.
pub(crate) struct Symmetries {
    n: usize,
    m: usize,
    elements: Vec<(Vec<u8>, Vec<u8>)>,
    operators: Vec<(Vec<u8>, Vec<u8>)>,
}

impl Symmetries {
    pub(crate) fn new(n: usize, m: usize) -> Self {
        Symmetries {
            n,
            m,
            elements: permutations(n),
            operators: permutations(m),
        }
    }

    /// Cell of the original table that lands at position `p` after relabeling.
    #[inline]
    fn source(&self, p: usize, sinv: &[u8], tinv: &[u8]) -> usize {
        let (n, m) = (self.n, self.m);
        let (i, k, j) = (p / (m * n), (p / n) % m, p % n);
        (sinv[i] as usize * m + tinv[k] as usize) * n + sinv[j] as usize
    }

    pub(crate) fn minimum(&self, cells: &[u8]) -> Vec<u8> {
        let mut best = cells.to_vec();
        let mut buf = vec![0u8; cells.len()];
        for (s, sinv) in &self.elements {
            for (_, tinv) in &self.operators {
                let mut ord = Ordering::Equal;
                let mut abandoned = false;
                for (p, slot) in buf.iter_mut().enumerate() {
                    let v = s[cells[self.source(p, sinv, tinv)] as usize];
                    if ord == Ordering::Equal {
                        match v.cmp(&best[p]) {
                            Ordering::Greater => {
                                abandoned = true;
                                break;
                            }
                            Ordering::Less => ord = Ordering::Less,
                            Ordering::Equal => {}
                        }
                    }
                    *slot = v;
                }
                if !abandoned && ord == Ordering::Less {
                    best.copy_from_slice(&buf);
                }
            }
        }
        best
    }

    /// True when some relabeling is strictly smaller on a prefix determined
    /// by the first `assigned` cells alone, so no completion is least.
    pub(crate) fn improvable(&self, cells: &[u8], assigned: usize) -> bool {
        for (s, sinv) in &self.elements {
            for (_, tinv) in &self.operators {
                for (p, &orig) in cells.iter().enumerate().take(assigned) {
                    let src = self.source(p, sinv, tinv);
                    if src >= assigned {
                        break;
                    }
                    match s[cells[src] as usize].cmp(&orig) {
                        Ordering::Less => return true,
                        Ordering::Greater => break,
                        Ordering::Equal => {}
                    }
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

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

    #[test]
    fn invariant_under_relabeling() {
        let g = GammaGroupoid::paper_example();
        let c = canonicalize(&g).unwrap();
        for s in (0..5).permutations(5).step_by(7) {
            assert_eq!(canonicalize(&relabel(&g, &s, &[0])).unwrap(), c);
        }
        assert!(c.cells() <= g.cells());
        assert_eq!(canonicalize(&c.to_model()).unwrap(), c);
    }

    #[test]
    fn operator_permutations_count() {
        let g = GammaGroupoid::from_fn(2, 2, |i, k, j| if k == 0 { i } else { j }).unwrap();
        let swapped = relabel(&g, &[0, 1], &[1, 0]);
        assert_ne!(g, swapped);
        assert_eq!(canonicalize(&g).unwrap(), canonicalize(&swapped).unwrap());
    }

    #[test]
    fn guard() {
        let g = GammaGroupoid::from_fn(7, 1, |_, _, _| 0).unwrap();
        assert!(matches!(
            canonicalize(&g),
            Err(AlgebraError::CanonGuard { .. })
        ));
    }

    #[test]
    fn improvable_matches_minimum_on_complete_tables() {
        let sym = Symmetries::new(2, 2);
        for bits in 0u32..256 {
            let cells: Vec<u8> = (0..8).map(|b| ((bits >> b) & 1) as u8).collect();
            let least = sym.minimum(&cells) == cells;
            assert_eq!(!sym.improvable(&cells, cells.len()), least);
        }
    }
}
