//! Enumeration of models up to isomorphism and counterexample hunts.

mod canon;
mod fill;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::AtomicBool;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

pub use canon::{canonicalize, CanonicalForm, MAX_CANON_GAMMAS, MAX_CANON_ORDER};

use crate::error::AlgebraError;
use crate::model::GammaGroupoid;
use crate::regularity::is_intra_regular;
use crate::theorems::{self, Status, TheoremId, TheoremReport};
use canon::Symmetries;
use fill::Filler;

/// Laws every enumerated table must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct Axioms {
    pub left_invertive: bool,
    pub ag_star_star: bool,
}

impl Axioms {
    pub const AG: Axioms = Axioms {
        left_invertive: true,
        ag_star_star: false,
    };
    pub const AG_STAR_STAR: Axioms = Axioms {
        left_invertive: true,
        ag_star_star: true,
    };

    pub fn holds(&self, g: &GammaGroupoid) -> bool {
        (!self.left_invertive || g.is_left_invertive())
            && (!self.ag_star_star || g.is_ag_star_star())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    #[default]
    Any,
    IntraRegular,
    NotIntraRegular,
}

impl Filter {
    pub fn accepts(self, g: &GammaGroupoid) -> bool {
        match self {
            Filter::Any => true,
            Filter::IntraRegular => is_intra_regular(g),
            Filter::NotIntraRegular => !is_intra_regular(g),
        }
    }
}

impl FromStr for Filter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "any" => Ok(Filter::Any),
            "intra-regular" => Ok(Filter::IntraRegular),
            "non-intra-regular" | "not-intra-regular" => Ok(Filter::NotIntraRegular),
            _ => Err(format!("unknown filter `{s}`")),
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Filter::Any => "any",
            Filter::IntraRegular => "intra-regular",
            Filter::NotIntraRegular => "non-intra-regular",
        })
    }
}

/// How isomorphic copies are discarded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Seen-set for order ≤ 4, lex-leader above.
    #[default]
    Auto,
    /// Canonicalize every complete table and deduplicate.
    SeenSet,
    /// Prune partial tables that a relabeling provably improves.
    LexLeader,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub order: usize,
    pub gammas: usize,
    pub axioms: Axioms,
    pub filter: Filter,
    pub limit: Option<usize>,
    pub time_budget: Option<Duration>,
    pub workers: usize,
    pub strategy: Strategy,
}

impl SearchSpec {
    pub fn new(order: usize, gammas: usize, axioms: Axioms) -> Self {
        SearchSpec {
            order,
            gammas,
            axioms,
            filter: Filter::Any,
            limit: None,
            time_budget: None,
            workers: 1,
            strategy: Strategy::Auto,
        }
    }

    pub fn filter(mut self, filter: Filter) -> Self {
        self.filter = filter;
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    fn validate(&self) -> Result<(), AlgebraError> {
        if self.order == 0 || self.gammas == 0 {
            return Err(AlgebraError::InvalidModel(
                "search needs at least one element and one operator".into(),
            ));
        }
        canon::check_guard(self.order, self.gammas)
    }

    fn lex_leader(&self) -> bool {
        match self.strategy {
            Strategy::Auto => self.order > 4,
            Strategy::SeenSet => false,
            Strategy::LexLeader => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Enumeration {
    /// One representative per class, ascending.
    pub models: Vec<CanonicalForm>,
    /// Set when the limit or the time budget cut the run short.
    pub truncated: bool,
}

/// Representatives of every isomorphism class meeting the axioms and filter.
pub fn enumerate(spec: &SearchSpec) -> Result<Enumeration, AlgebraError> {
    spec.validate()?;
    let (n, m) = (spec.order, spec.gammas);
    let sym = Symmetries::new(n, m);
    let lex = spec.lex_leader().then_some(&sym);
    let deadline = spec.time_budget.map(|b| Instant::now() + b);
    let stop = AtomicBool::new(false);

    let row = n * m;
    let mut prefixes = Vec::new();
    Filler::new(n, m, spec.axioms, lex, deadline, &stop)
        .extend(0, row, &mut |p| prefixes.push(p.to_vec()));

    let subtree = |prefix: &Vec<u8>| {
        let mut found = BTreeSet::new();
        let mut filler = Filler::new(n, m, spec.axioms, lex, deadline, &stop);
        filler.load(prefix);
        filler.extend(row, n * row, &mut |cells| {
            let form = if lex.is_some() {
                cells.to_vec()
            } else {
                sym.minimum(cells)
            };
            found.insert(form);
        });
        found
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.workers.max(1))
        .build()
        .map_err(|e| AlgebraError::InvalidModel(format!("worker pool: {e}")))?;
    let forms: BTreeSet<Vec<u8>> = pool.install(|| {
        prefixes
            .par_iter()
            .map(subtree)
            .reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                a
            })
    });

    let mut truncated = stop.load(std::sync::atomic::Ordering::Relaxed);
    let mut models: Vec<CanonicalForm> = forms
        .into_iter()
        .map(|cells| CanonicalForm::from_cells(n, m, cells))
        .filter(|f| spec.filter.accepts(&f.to_model()))
        .collect();
    if let Some(limit) = spec.limit {
        if models.len() > limit {
            models.truncate(limit);
            truncated = true;
        }
    }
    Ok(Enumeration { models, truncated })
}

pub fn count(spec: &SearchSpec) -> Result<(usize, bool), AlgebraError> {
    let e = enumerate(spec)?;
    Ok((e.models.len(), e.truncated))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Hunt {
    /// The first failing representative and its report.
    pub found: Option<(CanonicalForm, TheoremReport)>,
    pub searched: usize,
    pub truncated: bool,
}

/// Scans representatives in canonical order for a failing report of `theorem`.
/// Every reported failure is re-validated before it is returned.
pub fn find_counterexample(spec: &SearchSpec, theorem: TheoremId) -> Result<Hunt, AlgebraError> {
    let e = enumerate(spec)?;
    let mut searched = 0;
    for form in e.models {
        searched += 1;
        let g = form.to_model();
        let report = theorems::check(&g, theorem);
        if report.status == Status::Fail {
            let ce = report
                .counterexample
                .as_ref()
                .expect("failing reports carry a counterexample");
            if !ce.revalidate(&g) {
                return Err(AlgebraError::InvalidModel(format!(
                    "counterexample for {theorem} did not re-validate: {}",
                    ce.violated
                )));
            }
            return Ok(Hunt {
                found: Some((form, report)),
                searched,
                truncated: e.truncated,
            });
        }
    }
    Ok(Hunt {
        found: None,
        searched,
        truncated: e.truncated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every table, filtered and quotiented by canonical form.
    fn naive(n: usize, m: usize, axioms: Axioms) -> BTreeSet<CanonicalForm> {
        let cells = n * n * m;
        let total = n.pow(cells as u32);
        (0..total)
            .filter_map(|mut code| {
                let t: Vec<u8> = (0..cells)
                    .map(|_| {
                        let v = (code % n) as u8;
                        code /= n;
                        v
                    })
                    .collect();
                let g = GammaGroupoid::new(n, m, t).unwrap();
                axioms.holds(&g).then(|| canonicalize(&g).unwrap())
            })
            .collect()
    }

    #[test]
    fn small_spaces_match_naive() {
        for (n, m) in [(1, 1), (2, 1), (2, 2), (3, 1)] {
            for axioms in [Axioms::AG, Axioms::AG_STAR_STAR] {
                let got = enumerate(&SearchSpec::new(n, m, axioms)).unwrap();
                let want: Vec<_> = naive(n, m, axioms).into_iter().collect();
                assert_eq!(got.models, want, "n={n} m={m} {axioms:?}");
                assert!(!got.truncated);
            }
        }
    }

    #[test]
    fn strategies_agree() {
        for (n, m) in [(3, 1), (2, 2), (4, 1)] {
            let base = SearchSpec::new(n, m, Axioms::AG);
            let seen = enumerate(&base.clone().strategy(Strategy::SeenSet)).unwrap();
            let lex = enumerate(&base.strategy(Strategy::LexLeader)).unwrap();
            assert_eq!(seen, lex, "n={n} m={m}");
        }
    }

    #[test]
    fn workers_do_not_change_output() {
        let spec = SearchSpec::new(3, 1, Axioms::AG);
        let one = enumerate(&spec).unwrap();
        let four = enumerate(&spec.workers(4)).unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn singleton_space() {
        let e = enumerate(&SearchSpec::new(1, 1, Axioms::AG)).unwrap();
        assert_eq!(e.models.len(), 1);
        let hunt = find_counterexample(&SearchSpec::new(1, 1, Axioms::AG), TheoremId::Ii).unwrap();
        assert!(hunt.found.is_none());
    }

    #[test]
    fn limit_truncates_after_sorting() {
        let full = enumerate(&SearchSpec::new(3, 1, Axioms::AG)).unwrap();
        let mut spec = SearchSpec::new(3, 1, Axioms::AG);
        spec.limit = Some(2);
        let cut = enumerate(&spec).unwrap();
        assert!(cut.truncated);
        assert_eq!(cut.models, full.models[..2]);
    }

    #[test]
    fn guard_rejects_large_spaces() {
        assert!(enumerate(&SearchSpec::new(7, 1, Axioms::AG)).is_err());
        assert!(enumerate(&SearchSpec::new(0, 1, Axioms::AG)).is_err());
    }
}
