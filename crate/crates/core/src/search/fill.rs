//! Row-major table filling with incremental law checks.
//!
//! Cells are assigned in `(i, γ, j)` order. After assigning a cell, only the
//! law instances that read it on the left-hand side are re-checked; every
//! right-hand side is the left-hand side of a swapped instance, so this sees
//! each instance once all four of its cells are known.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use super::canon::Symmetries;
use super::Axioms;

pub(crate) const UNSET: u8 = u8::MAX;

pub(crate) struct Filler<'a> {
    n: usize,
    m: usize,
    axioms: Axioms,
    cells: Vec<u8>,
    lex_leader: Option<&'a Symmetries>,
    deadline: Option<Instant>,
    stop: &'a AtomicBool,
    nodes: u64,
}

impl<'a> Filler<'a> {
    pub(crate) fn new(
        n: usize,
        m: usize,
        axioms: Axioms,
        lex_leader: Option<&'a Symmetries>,
        deadline: Option<Instant>,
        stop: &'a AtomicBool,
    ) -> Self {
        Filler {
            n,
            m,
            axioms,
            cells: vec![UNSET; n * n * m],
            lex_leader,
            deadline,
            stop,
            nodes: 0,
        }
    }

    #[inline]
    fn get(&self, i: u8, k: usize, j: u8) -> Option<u8> {
        let v = self.cells[(i as usize * self.m + k) * self.n + j as usize];
        (v != UNSET).then_some(v)
    }

    /// Law instances reading cell `p` on a left-hand side all hold where defined.
    fn consistent(&self, p: usize) -> bool {
        let (n, m) = (self.n, self.m);
        let (i, k, j) = ((p / (m * n)) as u8, (p / n) % m, (p % n) as u8);
        let v = self.cells[p];
        if self.axioms.left_invertive {
            // (x γ y) δ z = (z γ y) δ x
            for delta in 0..m {
                for z in 0..n as u8 {
                    // new cell is the inner product x γ y
                    if let (Some(l), Some(r1)) = (self.get(v, delta, z), self.get(z, k, j)) {
                        if self.get(r1, delta, i).is_some_and(|r| r != l) {
                            return false;
                        }
                    }
                }
            }
            // new cell is the outer product u δ z with u = x γ y
            for x in 0..n as u8 {
                for gamma in 0..m {
                    for y in 0..n as u8 {
                        if self.get(x, gamma, y) != Some(i) {
                            continue;
                        }
                        let rhs = self.get(j, gamma, y).and_then(|r1| self.get(r1, k, x));
                        if rhs.is_some_and(|r| r != v) {
                            return false;
                        }
                    }
                }
            }
        }
        if self.axioms.ag_star_star {
            // a α (b β c) = b α (a β c)
            for a in 0..n as u8 {
                for alpha in 0..m {
                    // new cell is the inner product b β c
                    if let (Some(l), Some(r1)) = (self.get(a, alpha, v), self.get(a, k, j)) {
                        if self.get(i, alpha, r1).is_some_and(|r| r != l) {
                            return false;
                        }
                    }
                }
            }
            // new cell is the outer product a α w with w = b β c
            for b in 0..n as u8 {
                for beta in 0..m {
                    for c in 0..n as u8 {
                        if self.get(b, beta, c) != Some(j) {
                            continue;
                        }
                        let rhs = self.get(i, beta, c).and_then(|r1| self.get(b, k, r1));
                        if rhs.is_some_and(|r| r != v) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn expired(&mut self) -> bool {
        self.nodes += 1;
        if self.stop.load(Ordering::Relaxed) {
            return true;
        }
        if self.nodes.is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.stop.store(true, Ordering::Relaxed);
                    return true;
                }
            }
        }
        false
    }

    /// Extends cells `from..to`, calling `emit` on every consistent prefix of length `to`.
    pub(crate) fn extend(&mut self, from: usize, to: usize, emit: &mut dyn FnMut(&[u8])) {
        if from == to {
            emit(&self.cells[..to]);
            return;
        }
        if self.expired() {
            return;
        }
        for v in 0..self.n as u8 {
            self.cells[from] = v;
            if !self.consistent(from) {
                continue;
            }
            if let Some(sym) = self.lex_leader {
                if sym.improvable(&self.cells, from + 1) {
                    continue;
                }
            }
            self.extend(from + 1, to, emit);
        }
        self.cells[from] = UNSET;
    }

    /// Installs a prefix produced by an earlier [`Filler::extend`] call.
    pub(crate) fn load(&mut self, prefix: &[u8]) {
        self.cells.fill(UNSET);
        self.cells[..prefix.len()].copy_from_slice(prefix);
    }
}
