//! Exact local invariants of weighted plane-curve germs: multiplicities,
//! intersection numbers, log-canonicality tests and thresholds via iterated
//! blow-ups, plus exact linear-inequality auditing tools.

pub mod blowup;
pub mod config;
pub mod factor;
pub mod field;
pub mod fuzz;
pub mod germ;
pub mod invariants;
pub mod linfeas;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod scenarios;
pub mod theorems;

pub use blowup::BlowupOptions;
pub use config::{ConfigError, ConfigFile, ResolvedConfig};
pub use fuzz::{CampaignReport, GenSpec};
pub use germ::{CurveGerm, GermError, WeightedGerm};
pub use invariants::{
    intersection_multiplicity, is_log_canonical_at_origin, lct_at_origin,
    lct_threshold_in_family, pair_mult, InvariantError, LcReport, LctReport, LctValue,
};
pub use linfeas::{audit_proof_chains, AuditReport, LinSystem, Verdict};
pub use parse::{parse_poly_xy, ParseError};
pub use poly::BivarPoly;
pub use rational::Rational;
pub use scenarios::{run_all as run_all_scenarios, scenario_names, ScenarioReport};
pub use theorems::{BoundParams, LocalConfig, TheoremError};
