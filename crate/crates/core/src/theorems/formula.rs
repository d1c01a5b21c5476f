//! A small first-order language over elements and subsets of one model.
//!
//! Theorem statements are written as [`Formula`] values; an [`Evaluator`]
//! decides them exhaustively and, when a statement is false, descends through
//! its universal quantifiers and conjunctions to the ground instance that
//! fails. That instance is self-contained and can be re-evaluated later.

use std::cell::{Cell, OnceCell};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::AlgebraError;
use crate::ideals::{self, IdealKind};
use crate::model::GammaGroupoid;
use crate::regularity;
use crate::subset::{all_non_empty_subsets, carrier, product_unchecked, Subset};

pub type Var = &'static str;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Elem {
    Var(Var),
    Lit(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Set {
    Var(Var),
    Lit(Subset),
    Full,
    Single(Elem),
    Product(Box<Set>, Box<Set>),
    Meet(Box<Set>, Box<Set>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    Elements,
    Subsets,
    Family(IdealKind),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    Eq(Set, Set),
    Sub(Set, Set),
    Member(Elem, Set),
    Kind(IdealKind, Set),
    IntraRegular(Elem),
    Prime(Set),
    SemiprimeIdeal(Set),
    SemiprimeElement(Set),
    StronglyIrreducible(Set),
    Minimal(Set),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    ForAll(Var, Domain, Box<Formula>),
    Exists(Var, Domain, Box<Formula>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Value {
    Element(usize),
    Subset(Subset),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Binding {
    pub var: String,
    pub value: Value,
}

type Env = Vec<(Var, Value)>;

/// Decides formulas on one model, caching ideal families and regularity.
pub struct Evaluator<'g> {
    g: &'g GammaGroupoid,
    cap: usize,
    families: [OnceCell<Vec<Subset>>; 9],
    subsets: OnceCell<Vec<Subset>>,
    regular: OnceCell<Vec<bool>>,
    instances: Cell<u64>,
    witnessed: Cell<u64>,
}

impl<'g> Evaluator<'g> {
    pub fn new(g: &'g GammaGroupoid, cap: usize) -> Self {
        Evaluator {
            g,
            cap,
            families: Default::default(),
            subsets: OnceCell::new(),
            regular: OnceCell::new(),
            instances: Cell::new(0),
            witnessed: Cell::new(0),
        }
    }

    pub fn model(&self) -> &GammaGroupoid {
        self.g
    }

    /// Sweeps every family once so later evaluation cannot hit the cap.
    pub fn prepare(&self) -> Result<(), AlgebraError> {
        self.all_subsets()?;
        for kind in IdealKind::ALL {
            self.family(kind)?;
        }
        Ok(())
    }

    fn all_subsets(&self) -> Result<&[Subset], AlgebraError> {
        if let Some(v) = self.subsets.get() {
            return Ok(v);
        }
        let v: Vec<Subset> = all_non_empty_subsets(self.g, self.cap)?.collect();
        Ok(self.subsets.get_or_init(|| v))
    }

    pub fn family(&self, kind: IdealKind) -> Result<&[Subset], AlgebraError> {
        let cell = &self.families[kind as usize];
        if let Some(v) = cell.get() {
            return Ok(v);
        }
        let mut v = Vec::new();
        for &a in self.all_subsets()? {
            if kind.holds(self.g, a)? {
                v.push(a);
            }
        }
        Ok(cell.get_or_init(|| v))
    }

    fn regular(&self) -> &[bool] {
        self.regular.get_or_init(|| {
            (0..self.g.order())
                .map(|a| matches!(regularity::intra_witness(self.g, a), Ok(Some(_))))
                .collect()
        })
    }

    fn domain(&self, d: Domain) -> Result<Vec<Value>, AlgebraError> {
        Ok(match d {
            Domain::Elements => (0..self.g.order()).map(Value::Element).collect(),
            Domain::Subsets => self
                .all_subsets()?
                .iter()
                .map(|&s| Value::Subset(s))
                .collect(),
            Domain::Family(k) => self.family(k)?.iter().map(|&s| Value::Subset(s)).collect(),
        })
    }

    pub fn reset_counters(&self) {
        self.instances.set(0);
        self.witnessed.set(0);
    }

    /// Quantifier instances evaluated since the last reset.
    pub fn instances(&self) -> u64 {
        self.instances.get()
    }

    /// Instances where a hypothesis held (or an unconditional body was checked).
    pub fn witnessed(&self) -> u64 {
        self.witnessed.get()
    }

    pub fn holds(&self, f: &Formula) -> Result<bool, AlgebraError> {
        if !matches!(f, Formula::ForAll(..) | Formula::Implies(..)) {
            self.instances.set(self.instances.get() + 1);
            self.witnessed.set(self.witnessed.get() + 1);
        }
        self.eval(f, &mut Vec::new(), true)
    }

    fn set(&self, s: &Set, env: &Env) -> Result<Subset, AlgebraError> {
        let n = self.g.order();
        Ok(match s {
            Set::Var(v) => match lookup(env, v) {
                Some(Value::Subset(s)) => s,
                _ => return Err(unbound(v)),
            },
            Set::Lit(s) => *s,
            Set::Full => carrier(self.g),
            Set::Single(e) => Subset::singleton(n, self.elem(e, env)?),
            Set::Product(a, b) => product_unchecked(self.g, self.set(a, env)?, self.set(b, env)?),
            Set::Meet(a, b) => self.set(a, env)?.intersection(self.set(b, env)?),
        })
    }

    fn elem(&self, e: &Elem, env: &Env) -> Result<usize, AlgebraError> {
        match e {
            Elem::Lit(x) => Ok(*x),
            Elem::Var(v) => match lookup(env, v) {
                Some(Value::Element(x)) => Ok(x),
                _ => Err(unbound(v)),
            },
        }
    }

    fn eval(&self, f: &Formula, env: &mut Env, witnessing: bool) -> Result<bool, AlgebraError> {
        let g = self.g;
        Ok(match f {
            Formula::Eq(a, b) => self.set(a, env)? == self.set(b, env)?,
            Formula::Sub(a, b) => self.set(a, env)?.is_subset_of(self.set(b, env)?),
            Formula::Member(x, a) => self.set(a, env)?.contains(self.elem(x, env)?),
            Formula::Kind(k, a) => {
                let a = self.set(a, env)?;
                !a.is_empty() && k.holds(g, a)?
            }
            Formula::IntraRegular(x) => self.regular()[self.elem(x, env)?],
            Formula::Prime(p) => {
                let p = self.set(p, env)?;
                ideals::prime_over(g, self.family(IdealKind::TwoSided)?, p)
            }
            Formula::SemiprimeIdeal(p) => {
                let p = self.set(p, env)?;
                ideals::semiprime_over(g, self.family(IdealKind::TwoSided)?, p)
            }
            Formula::SemiprimeElement(p) => {
                let p = self.set(p, env)?;
                !p.is_empty() && ideals::is_elementwise_semiprime(g, p)?
            }
            Formula::StronglyIrreducible(p) => {
                let p = self.set(p, env)?;
                ideals::strongly_irreducible_over(self.family(IdealKind::TwoSided)?, p)
            }
            Formula::Minimal(q) => {
                let q = self.set(q, env)?;
                let fam = self.family(IdealKind::TwoSided)?;
                fam.contains(&q) && !fam.iter().any(|&i| i != q && i.is_subset_of(q))
            }
            Formula::Not(inner) => !self.eval(inner, env, witnessing)?,
            Formula::And(fs) => {
                for f in fs {
                    if !self.eval(f, env, witnessing)? {
                        return Ok(false);
                    }
                }
                true
            }
            Formula::Or(fs) => {
                for f in fs {
                    if self.eval(f, env, witnessing)? {
                        return Ok(true);
                    }
                }
                false
            }
            Formula::Implies(a, b) => {
                if self.eval(a, env, false)? {
                    if witnessing {
                        self.witnessed.set(self.witnessed.get() + 1);
                    }
                    self.eval(b, env, witnessing)?
                } else {
                    true
                }
            }
            Formula::Iff(a, b) => self.eval(a, env, false)? == self.eval(b, env, false)?,
            Formula::ForAll(v, d, body) => {
                let direct = !matches!(**body, Formula::Implies(..));
                for value in self.domain(*d)? {
                    self.instances.set(self.instances.get() + 1);
                    if witnessing && direct {
                        self.witnessed.set(self.witnessed.get() + 1);
                    }
                    env.push((v, value));
                    let ok = self.eval(body, env, witnessing);
                    env.pop();
                    if !ok? {
                        return Ok(false);
                    }
                }
                true
            }
            Formula::Exists(v, d, body) => {
                for value in self.domain(*d)? {
                    self.instances.set(self.instances.get() + 1);
                    env.push((v, value));
                    let ok = self.eval(body, env, false);
                    env.pop();
                    if ok? {
                        return Ok(true);
                    }
                }
                false
            }
        })
    }

    /// For a false formula, the failing bindings and the violated ground
    /// instance reached by descending through `∀` and `∧`.
    pub fn explain(&self, f: &Formula) -> Result<(Vec<Binding>, Formula), AlgebraError> {
        let mut env = Vec::new();
        let mut bindings = Vec::new();
        let mut cur = f;
        loop {
            match cur {
                Formula::ForAll(v, d, body) => {
                    let mut found = None;
                    for value in self.domain(*d)? {
                        env.push((*v, value));
                        let ok = self.eval(body, &mut env, false)?;
                        if !ok {
                            found = Some(value);
                            break;
                        }
                        env.pop();
                    }
                    match found {
                        Some(value) => {
                            bindings.push(Binding {
                                var: v.to_string(),
                                value,
                            });
                            cur = body;
                        }
                        None => break,
                    }
                }
                Formula::Implies(a, b) if matches!(**b, Formula::ForAll(..) | Formula::And(_)) => {
                    if self.eval(a, &mut env, false)? && !self.eval(b, &mut env, false)? {
                        cur = b;
                    } else {
                        break;
                    }
                }
                Formula::And(fs) => {
                    let mut next = None;
                    for f in fs {
                        if !self.eval(f, &mut env, false)? {
                            next = Some(f);
                            break;
                        }
                    }
                    match next {
                        Some(f) => cur = f,
                        None => break,
                    }
                }
                _ => break,
            }
        }
        Ok((bindings, substitute(cur, &env)))
    }
}

fn lookup(env: &Env, v: &str) -> Option<Value> {
    env.iter()
        .rev()
        .find(|(name, _)| *name == v)
        .map(|(_, val)| *val)
}

fn unbound(v: &str) -> AlgebraError {
    AlgebraError::InvalidModel(format!("formula variable `{v}` is unbound"))
}

/// Replaces free variables bound in `env` by literals.
pub fn substitute(f: &Formula, env: &Env) -> Formula {
    let sub_set = |s: &Set| substitute_set(s, env);
    let sub_elem = |e: &Elem| substitute_elem(e, env);
    match f {
        Formula::Eq(a, b) => Formula::Eq(sub_set(a), sub_set(b)),
        Formula::Sub(a, b) => Formula::Sub(sub_set(a), sub_set(b)),
        Formula::Member(x, a) => Formula::Member(sub_elem(x), sub_set(a)),
        Formula::Kind(k, a) => Formula::Kind(*k, sub_set(a)),
        Formula::IntraRegular(x) => Formula::IntraRegular(sub_elem(x)),
        Formula::Prime(a) => Formula::Prime(sub_set(a)),
        Formula::SemiprimeIdeal(a) => Formula::SemiprimeIdeal(sub_set(a)),
        Formula::SemiprimeElement(a) => Formula::SemiprimeElement(sub_set(a)),
        Formula::StronglyIrreducible(a) => Formula::StronglyIrreducible(sub_set(a)),
        Formula::Minimal(a) => Formula::Minimal(sub_set(a)),
        Formula::Not(a) => Formula::Not(Box::new(substitute(a, env))),
        Formula::And(fs) => Formula::And(fs.iter().map(|f| substitute(f, env)).collect()),
        Formula::Or(fs) => Formula::Or(fs.iter().map(|f| substitute(f, env)).collect()),
        Formula::Implies(a, b) => {
            Formula::Implies(Box::new(substitute(a, env)), Box::new(substitute(b, env)))
        }
        Formula::Iff(a, b) => {
            Formula::Iff(Box::new(substitute(a, env)), Box::new(substitute(b, env)))
        }
        Formula::ForAll(v, d, body) | Formula::Exists(v, d, body) => {
            let inner: Env = env.iter().filter(|(n, _)| n != v).cloned().collect();
            let body = Box::new(substitute(body, &inner));
            if matches!(f, Formula::ForAll(..)) {
                Formula::ForAll(v, *d, body)
            } else {
                Formula::Exists(v, *d, body)
            }
        }
    }
}

fn substitute_set(s: &Set, env: &Env) -> Set {
    match s {
        Set::Var(v) => match lookup(env, v) {
            Some(Value::Subset(x)) => Set::Lit(x),
            _ => s.clone(),
        },
        Set::Lit(_) | Set::Full => s.clone(),
        Set::Single(e) => Set::Single(substitute_elem(e, env)),
        Set::Product(a, b) => Set::Product(
            Box::new(substitute_set(a, env)),
            Box::new(substitute_set(b, env)),
        ),
        Set::Meet(a, b) => Set::Meet(
            Box::new(substitute_set(a, env)),
            Box::new(substitute_set(b, env)),
        ),
    }
}

fn substitute_elem(e: &Elem, env: &Env) -> Elem {
    match e {
        Elem::Var(v) => match lookup(env, v) {
            Some(Value::Element(x)) => Elem::Lit(x),
            _ => e.clone(),
        },
        Elem::Lit(_) => e.clone(),
    }
}

/// Human-readable rendering using the model's names.
pub fn render(f: &Formula, g: &GammaGroupoid) -> String {
    let mut out = String::new();
    render_into(f, g, &mut out);
    out
}

fn render_set(s: &Set, g: &GammaGroupoid) -> String {
    match s {
        Set::Var(v) => v.to_string(),
        Set::Lit(x) => x.display_with(g),
        Set::Full => "S".into(),
        Set::Single(e) => format!("{{{}}}", render_elem(e, g)),
        Set::Product(a, b) => format!("({}Γ{})", render_set(a, g), render_set(b, g)),
        Set::Meet(a, b) => format!("({} ∩ {})", render_set(a, g), render_set(b, g)),
    }
}

fn render_elem(e: &Elem, g: &GammaGroupoid) -> String {
    match e {
        Elem::Var(v) => v.to_string(),
        Elem::Lit(x) => g.element_name(*x).to_string(),
    }
}

fn render_domain(d: Domain) -> String {
    match d {
        Domain::Elements => "S".into(),
        Domain::Subsets => "P(S)".into(),
        Domain::Family(k) => format!("{}-ideals", k.name()),
    }
}

fn render_into(f: &Formula, g: &GammaGroupoid, out: &mut String) {
    let s = |x: &Set| render_set(x, g);
    let _ = match f {
        Formula::Eq(a, b) => write!(out, "{} = {}", s(a), s(b)),
        Formula::Sub(a, b) => write!(out, "{} ⊆ {}", s(a), s(b)),
        Formula::Member(x, a) => write!(out, "{} ∈ {}", render_elem(x, g), s(a)),
        Formula::Kind(k, a) => write!(out, "{}({})", k.name(), s(a)),
        Formula::IntraRegular(x) => write!(out, "intra-regular({})", render_elem(x, g)),
        Formula::Prime(a) => write!(out, "prime({})", s(a)),
        Formula::SemiprimeIdeal(a) => write!(out, "semiprime({})", s(a)),
        Formula::SemiprimeElement(a) => write!(out, "semiprime-elementwise({})", s(a)),
        Formula::StronglyIrreducible(a) => write!(out, "strongly-irreducible({})", s(a)),
        Formula::Minimal(a) => write!(out, "minimal({})", s(a)),
        Formula::Not(a) => {
            out.push_str("¬(");
            render_into(a, g, out);
            write!(out, ")")
        }
        Formula::And(fs) | Formula::Or(fs) => {
            let sep = if matches!(f, Formula::And(_)) {
                " ∧ "
            } else {
                " ∨ "
            };
            out.push('(');
            for (i, f) in fs.iter().enumerate() {
                if i > 0 {
                    out.push_str(sep);
                }
                render_into(f, g, out);
            }
            write!(out, ")")
        }
        Formula::Implies(a, b) | Formula::Iff(a, b) => {
            let op = if matches!(f, Formula::Implies(..)) {
                " ⇒ "
            } else {
                " ⇔ "
            };
            out.push('(');
            render_into(a, g, out);
            out.push_str(op);
            render_into(b, g, out);
            write!(out, ")")
        }
        Formula::ForAll(v, d, body) | Formula::Exists(v, d, body) => {
            let q = if matches!(f, Formula::ForAll(..)) {
                "∀"
            } else {
                "∃"
            };
            let _ = write!(out, "{q}{v}∈{}. ", render_domain(*d));
            render_into(body, g, out);
            Ok(())
        }
    };
}

/// Builders used by the theorem catalog.
pub mod build {
    use super::*;

    pub fn var(v: Var) -> Set {
        Set::Var(v)
    }

    pub fn full() -> Set {
        Set::Full
    }

    pub fn single(v: Var) -> Set {
        Set::Single(Elem::Var(v))
    }

    pub fn prod(a: Set, b: Set) -> Set {
        Set::Product(Box::new(a), Box::new(b))
    }

    pub fn meet(a: Set, b: Set) -> Set {
        Set::Meet(Box::new(a), Box::new(b))
    }

    pub fn eq(a: Set, b: Set) -> Formula {
        Formula::Eq(a, b)
    }

    pub fn sub(a: Set, b: Set) -> Formula {
        Formula::Sub(a, b)
    }

    pub fn kind(k: IdealKind, a: Set) -> Formula {
        Formula::Kind(k, a)
    }

    pub fn and(fs: Vec<Formula>) -> Formula {
        Formula::And(fs)
    }

    pub fn or(fs: Vec<Formula>) -> Formula {
        Formula::Or(fs)
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn all(v: Var, d: Domain, body: Formula) -> Formula {
        Formula::ForAll(v, d, Box::new(body))
    }

    pub fn any(v: Var, d: Domain, body: Formula) -> Formula {
        Formula::Exists(v, d, Box::new(body))
    }

    pub fn family(k: IdealKind) -> Domain {
        Domain::Family(k)
    }
}
