//! Executable statements of the structure theory, with per-clause reports.

mod catalog;
pub mod formula;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::AlgebraError;
use crate::format::serialize_model;
use crate::model::{AxiomProfile, GammaGroupoid};
use crate::subset::DEFAULT_SWEEP_CAP;
use formula::{render, Binding, Evaluator, Formula};

macro_rules! theorem_ids {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// Identifier of one checked result, in canonical suite order.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum TheoremId {
            $($variant),*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $name),*
                }
            }
        }

        impl FromStr for TheoremId {
            type Err = UnknownTheorem;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s.to_ascii_uppercase().replace('-', "_").as_str() {
                    $($name => Ok(TheoremId::$variant),)*
                    _ => Err(UnknownTheorem(s.to_string())),
                }
            }
        }
    };
}

theorem_ids! {
    Ji => "JI",
    JiCor => "JI_COR",
    Ki => "KI",
    KiCor => "KI_COR",
    Aw => "AW",
    AwCor => "AW_COR",
    Jk => "JK",
    LisR => "LISR",
    Biiid => "BIIID",
    TOneTwo => "T_ONE_TWO",
    TInterior => "T_INTERIOR",
    TQuasi => "T_QUASI",
    T12 => "T12",
    Plo => "PLO",
    Bint => "BINT",
    Quo => "QUO",
    Li => "LI",
    Equalient => "EQUALIENT",
    Ii => "II",
    Idl => "IDL",
    Ij => "IJ",
    Iffff => "IFFFF",
    Sla2 => "SLA2",
    Rlt => "RLT",
    RSemiprimeEq => "RSEMIPRIME_EQ",
    Rintl => "RINTL",
    Lrl => "LRL",
    PrimeIrr => "PRIME_IRR",
    TotalOrder => "TOTAL_ORDER",
    Semilattice => "SEMILATTICE",
    Minimal => "MINIMAL",
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown theorem id `{0}`")]
pub struct UnknownTheorem(pub String);

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Hypotheses a model must meet before a statement is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Guard {
    /// Left invertive and AG**.
    AgStarStar,
    /// Left invertive, AG** and intra-regular.
    IntraRegularAgStarStar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
    Skipped(String),
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Vacuous => "vacuous",
            Status::Skipped(_) => "skipped",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Skipped(reason) => write!(f, "skipped ({reason})"),
            other => f.write_str(other.label()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct ClauseReport {
    pub tag: String,
    #[serde(flatten)]
    pub status: Status,
    pub instances: u64,
}

/// A failing ground instance. `ground` is closed and evaluates to false.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub clause: String,
    pub bindings: Vec<Binding>,
    pub violated: String,
    #[serde(skip)]
    pub ground: Formula,
}

impl Counterexample {
    /// Re-evaluates the violated instance from scratch; true when it is still false.
    pub fn revalidate(&self, g: &GammaGroupoid) -> bool {
        matches!(Evaluator::new(g, g.order()).holds(&self.ground), Ok(false))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct TheoremReport {
    #[serde(rename = "id")]
    pub theorem: TheoremId,
    #[serde(flatten)]
    pub status: Status,
    pub clauses: Vec<ClauseReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub instances_checked: u64,
}

impl TheoremReport {
    fn skipped(theorem: TheoremId, reason: &str) -> Self {
        TheoremReport {
            theorem,
            status: Status::Skipped(reason.to_string()),
            clauses: Vec::new(),
            counterexample: None,
            instances_checked: 0,
        }
    }

    pub fn clause(&self, tag: &str) -> Option<&ClauseReport> {
        self.clauses.iter().find(|c| c.tag == tag)
    }
}

/// Suite-wide settings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub sweep_cap: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            sweep_cap: DEFAULT_SWEEP_CAP,
        }
    }
}

struct GuardState {
    left_invertive: bool,
    ag_star_star: bool,
    intra_regular: bool,
}

impl GuardState {
    fn of(g: &GammaGroupoid) -> Self {
        let left_invertive = g.is_left_invertive();
        let ag_star_star = g.is_ag_star_star();
        GuardState {
            left_invertive,
            ag_star_star,
            intra_regular: left_invertive && ag_star_star && crate::regularity::is_intra_regular(g),
        }
    }

    fn failure(&self, guard: Guard) -> Option<&'static str> {
        if !self.left_invertive {
            Some("not an AG-groupoid")
        } else if !self.ag_star_star {
            Some("not an AG**-groupoid")
        } else if guard == Guard::IntraRegularAgStarStar && !self.intra_regular {
            Some("not intra-regular")
        } else {
            None
        }
    }
}

/// The statement's guard and its direction-tagged clauses.
pub fn statement(id: TheoremId) -> (Guard, Vec<(String, Formula)>) {
    let (guard, clauses) = catalog::statement(id);
    (
        guard,
        clauses.into_iter().map(|c| (c.tag, c.formula)).collect(),
    )
}

fn check_with(ev: &Evaluator<'_>, guards: &GuardState, id: TheoremId) -> TheoremReport {
    let (guard, clauses) = catalog::statement(id);
    if let Some(reason) = guards.failure(guard) {
        return TheoremReport::skipped(id, reason);
    }
    if let Err(AlgebraError::SweepCapExceeded { .. }) = ev.prepare() {
        return TheoremReport::skipped(id, "order above sweep cap");
    }
    let mut reports = Vec::with_capacity(clauses.len());
    let mut counterexample = None;
    let mut total = 0;
    for c in clauses {
        ev.reset_counters();
        let outcome = ev.holds(&c.formula);
        let instances = ev.instances();
        total += instances;
        let status = match outcome {
            Ok(true) if ev.witnessed() == 0 => Status::Vacuous,
            Ok(true) => Status::Pass,
            Ok(false) => {
                if counterexample.is_none() {
                    if let Ok((bindings, ground)) = ev.explain(&c.formula) {
                        counterexample = Some(Counterexample {
                            clause: c.tag.clone(),
                            bindings,
                            violated: render(&ground, ev.model()),
                            ground,
                        });
                    }
                }
                Status::Fail
            }
            Err(e) => Status::Skipped(e.to_string()),
        };
        reports.push(ClauseReport {
            tag: c.tag,
            status,
            instances,
        });
    }
    let status = if reports.iter().any(|c| c.status == Status::Fail) {
        Status::Fail
    } else if reports.iter().any(|c| c.status == Status::Pass) {
        Status::Pass
    } else if let Some(Status::Skipped(r)) = reports
        .iter()
        .map(|c| &c.status)
        .find(|s| matches!(s, Status::Skipped(_)))
    {
        Status::Skipped(r.clone())
    } else {
        Status::Vacuous
    };
    TheoremReport {
        theorem: id,
        status,
        clauses: reports,
        counterexample,
        instances_checked: total,
    }
}

pub fn check(g: &GammaGroupoid, id: TheoremId) -> TheoremReport {
    check_configured(g, id, SuiteConfig::default())
}

pub fn check_configured(g: &GammaGroupoid, id: TheoremId, config: SuiteConfig) -> TheoremReport {
    let ev = Evaluator::new(g, config.sweep_cap);
    check_with(&ev, &GuardState::of(g), id)
}

/// Reports for `selection` (all theorems when empty), in [`TheoremId`] order.
pub fn run_suite(g: &GammaGroupoid, selection: &[TheoremId]) -> Vec<TheoremReport> {
    run_suite_configured(g, selection, SuiteConfig::default())
}

pub fn run_suite_configured(
    g: &GammaGroupoid,
    selection: &[TheoremId],
    config: SuiteConfig,
) -> Vec<TheoremReport> {
    let ev = Evaluator::new(g, config.sweep_cap);
    let guards = GuardState::of(g);
    TheoremId::ALL
        .iter()
        .copied()
        .filter(|id| selection.is_empty() || selection.contains(id))
        .map(|id| check_with(&ev, &guards, id))
        .collect()
}

/// Hex SHA-256 of the canonical text serialization.
pub fn model_hash(g: &GammaGroupoid) -> String {
    let digest = Sha256::digest(serialize_model(g).as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct SuiteDocument {
    pub model_hash: String,
    pub axiom_profile: AxiomProfile,
    pub reports: Vec<TheoremReport>,
}

impl SuiteDocument {
    pub fn new(g: &GammaGroupoid, reports: Vec<TheoremReport>) -> Self {
        SuiteDocument {
            model_hash: model_hash(g),
            axiom_profile: g.axiom_profile(),
            reports,
        }
    }
}

/// 2 if anything failed, 3 if every report was skipped, 0 otherwise.
pub fn suite_exit_code(reports: &[TheoremReport]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Fail) {
        2
    } else if !reports.is_empty()
        && reports
            .iter()
            .all(|r| matches!(r.status, Status::Skipped(_)))
    {
        3
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        assert_eq!(TheoremId::ALL.len(), 31);
        for &id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert_eq!("ki-cor".parse::<TheoremId>().unwrap(), TheoremId::KiCor);
        assert!("NOPE".parse::<TheoremId>().is_err());
    }

    #[test]
    fn example_has_no_failures() {
        let g = GammaGroupoid::paper_example();
        let reports = run_suite(&g, &[]);
        assert_eq!(reports.len(), 31);
        for r in &reports {
            assert_ne!(
                r.status,
                Status::Fail,
                "{}: {:?}",
                r.theorem,
                r.counterexample
            );
        }
        assert_eq!(suite_exit_code(&reports), 0);
    }

    #[test]
    fn ji_is_vacuous_on_example() {
        // the zero element a gives SΓa = {a}, so neither hypothesis holds
        let g = GammaGroupoid::paper_example();
        assert_eq!(check(&g, TheoremId::Ji).status, Status::Vacuous);
    }

    #[test]
    fn non_ag_model_is_skipped_everywhere() {
        let g = GammaGroupoid::from_fn(2, 1, |_, _, j| j).unwrap();
        let reports = run_suite(&g, &[]);
        assert!(reports
            .iter()
            .all(|r| r.status == Status::Skipped("not an AG-groupoid".into())));
        assert_eq!(suite_exit_code(&reports), 3);
    }

    #[test]
    fn selection_and_singleton() {
        let g = GammaGroupoid::new(1, 1, vec![0]).unwrap();
        let reports = run_suite(&g, &[TheoremId::Ki]);
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].status, Status::Pass);
        assert!(run_suite(&g, &[]).iter().all(|r| r.status != Status::Fail));
    }

    #[test]
    fn report_json_shape() {
        let g = GammaGroupoid::paper_example();
        let doc = SuiteDocument::new(&g, run_suite(&g, &[TheoremId::Ki]));
        let v = serde_json::to_value(&doc).unwrap();
        assert_eq!(v["reports"][0]["id"], "KI");
        assert_eq!(v["reports"][0]["status"], "pass");
        assert!(v["reports"][0]["instances-checked"].as_u64().unwrap() > 0);
        assert_eq!(v["model-hash"].as_str().unwrap().len(), 64);
    }
}
