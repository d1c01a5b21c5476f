//! Finite Γ-AG-groupoids: operation tables indexed by a family of operators,
//! checked against the left invertive, medial, AG** and paramedial laws.
//!
//! The crate covers law checking with least witnesses, subset products and
//! generated ideals, nine ideal classes with prime-type predicates,
//! intra-regularity witnesses, an exhaustive theorem checker with
//! counterexamples, and enumeration of models up to isomorphism.
//!
//! ```
//! use gag_core::{GammaGroupoid, regularity};
//!
//! let g = GammaGroupoid::paper_example();
//! assert!(g.is_left_invertive() && g.is_ag_star_star());
//! assert_eq!(g.left_identities(), vec![1]);
//! assert!(regularity::is_intra_regular(&g));
//! ```

pub mod error;
pub mod format;
pub mod ideals;
pub mod model;
pub mod regularity;
pub mod search;
pub mod subset;
pub mod theorems;

pub use error::{AlgebraError, ParseError, ParseErrorKind};
pub use format::{parse_any, parse_model, serialize_model, ModelDocument};
pub use ideals::IdealKind;
pub use model::{AxiomProfile, GammaGroupoid, Labels, Law, LawWitness};
pub use regularity::IntraWitness;
pub use search::{Axioms, CanonicalForm, Filter, SearchSpec};
pub use subset::Subset;
pub use theorems::{Status, TheoremId, TheoremReport};
