//! The shared configuration-file format: a TOML document naming curves,
//! assembling a weighted divisor from them, and optionally designating two
//! smooth transverse branches and theorem parameters.
//!
//! ```toml
//! a1 = "1/2"                 # optional branch weights
//! a2 = "1/2"
//!
//! [curves]                   # name -> polynomial in x and y
//! delta1 = "x"
//! delta2 = "y"
//! c = "y - x^4"
//!
//! [deltas]                   # optional: the two designated branches
//! delta1 = "delta1"
//! delta2 = "delta2"
//!
//! [bounds]                   # optional six-parameter block, rationals
//! alpha = "1"
//! beta = "1"
//! a = "1/3"
//! b = "4"
//! m = "1"
//! n = "0"
//!
//! [integer_bounds]           # optional integer-parameter block
//! n = 3
//!
//! [family]                   # optional: variable curve for threshold queries
//! curve = "c"
//!
//! [[divisor]]                # the weighted divisor, one entry per component
//! curve = "c"
//! coefficient = "3/4"
//! ```
//!
//! # Conventions
//!
//! - All rationals are strings `"p"` or `"p/q"`; never decimals.
//! - For the theorem subcommands the divisor is the residual part (the
//!   designated branches enter through `deltas`/`a1`/`a2`); for threshold
//!   and log-canonicality queries it is the whole divisor.
//!
//! # Invariants
//!
//! - Every referenced curve name exists in `curves`.
//! - Divisor coefficients are non-negative.
//! - Re-serializing a resolved configuration produces a document that
//!   resolves to the same data.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::germ::{CurveGerm, GermError, WeightedGerm};
use crate::rational::Rational;
use crate::theorems::{BoundParams, LocalConfig, TheoremError};

/// One weighted component of the divisor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorEntry {
    pub curve: String,
    pub coefficient: String,
}

/// Names of the two designated smooth transverse branches.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaNames {
    pub delta1: String,
    pub delta2: String,
}

/// The six-parameter block, all rationals as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsBlock {
    pub alpha: String,
    pub beta: String,
    pub a: String,
    pub b: String,
    pub m: String,
    pub n: String,
}

/// The integer-parameter block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegerBoundsBlock {
    pub n: i64,
}

/// The family block: the variable curve of a threshold query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyBlock {
    pub curve: String,
}

/// A parsed (but not yet resolved) configuration document.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ConfigFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a1: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a2: Option<String>,
    #[serde(default)]
    pub curves: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deltas: Option<DeltaNames>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integer_bounds: Option<IntegerBoundsBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyBlock>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub divisor: Vec<DivisorEntry>,
}

/// Errors raised while reading or resolving a configuration.
#[derive(Debug)]
pub enum ConfigError {
    Toml(String),
    UnknownCurve { name: String, place: &'static str },
    BadRational { field: String, text: String },
    NegativeCoefficient { curve: String, value: Rational },
    MissingField { field: &'static str, needed_for: &'static str },
    Germ(GermError),
    Theorem(TheoremError),
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::Toml(message) => write!(f, "config syntax error: {message}"),
            ConfigError::UnknownCurve { name, place } => {
                write!(f, "{place} references unknown curve `{name}`")
            }
            ConfigError::BadRational { field, text } => {
                write!(f, "field {field} has malformed rational `{text}`")
            }
            ConfigError::NegativeCoefficient { curve, value } => {
                write!(f, "divisor coefficient on `{curve}` is negative ({value})")
            }
            ConfigError::MissingField { field, needed_for } => {
                write!(f, "field {field} is required for {needed_for}")
            }
            ConfigError::Germ(e) => write!(f, "{e}"),
            ConfigError::Theorem(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ConfigError {}

impl From<GermError> for ConfigError {
    fn from(e: GermError) -> Self {
        ConfigError::Germ(e)
    }
}

impl From<TheoremError> for ConfigError {
    fn from(e: TheoremError) -> Self {
        ConfigError::Theorem(e)
    }
}

/// A configuration with every string resolved to exact values.
#[derive(Clone, Debug)]
pub struct ResolvedConfig {
    pub curves: BTreeMap<String, CurveGerm>,
    pub divisor: WeightedGerm,
    pub deltas: Option<(CurveGerm, CurveGerm)>,
    pub a1: Option<Rational>,
    pub a2: Option<Rational>,
    pub bounds: Option<BoundParams>,
    pub integer_bounds: Option<i64>,
    pub family: Option<CurveGerm>,
}

fn parse_rational(field: &str, text: &str) -> Result<Rational, ConfigError> {
    Rational::from_str(text).map_err(|_| ConfigError::BadRational {
        field: field.to_string(),
        text: text.to_string(),
    })
}

impl ConfigFile {
    pub fn from_toml_str(text: &str) -> Result<ConfigFile, ConfigError> {
        toml::from_str(text).map_err(|e| ConfigError::Toml(e.to_string()))
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("configuration documents always serialize")
    }

    /// Parse every curve, coefficient, and parameter into exact values.
    pub fn resolve(&self) -> Result<ResolvedConfig, ConfigError> {
        let mut curves = BTreeMap::new();
        for (name, equation) in &self.curves {
            curves.insert(name.clone(), CurveGerm::from_equation(name.clone(), equation)?);
        }
        let lookup = |name: &str, place: &'static str| -> Result<CurveGerm, ConfigError> {
            curves
                .get(name)
                .cloned()
                .ok_or_else(|| ConfigError::UnknownCurve { name: name.to_string(), place })
        };

        let mut parts = Vec::with_capacity(self.divisor.len());
        for entry in &self.divisor {
            let germ = lookup(&entry.curve, "divisor")?;
            let coefficient =
                parse_rational(&format!("divisor coefficient on `{}`", entry.curve), &entry.coefficient)?;
            if coefficient.is_negative() {
                return Err(ConfigError::NegativeCoefficient {
                    curve: entry.curve.clone(),
                    value: coefficient,
                });
            }
            parts.push((germ, coefficient));
        }
        let divisor = WeightedGerm::new(parts)?;

        let deltas = match &self.deltas {
            Some(names) => Some((
                lookup(&names.delta1, "deltas")?,
                lookup(&names.delta2, "deltas")?,
            )),
            None => None,
        };
        let a1 = self.a1.as_deref().map(|t| parse_rational("a1", t)).transpose()?;
        let a2 = self.a2.as_deref().map(|t| parse_rational("a2", t)).transpose()?;
        let bounds = match &self.bounds {
            Some(b) => Some(BoundParams {
                alpha: parse_rational("bounds.alpha", &b.alpha)?,
                beta: parse_rational("bounds.beta", &b.beta)?,
                a: parse_rational("bounds.a", &b.a)?,
                b: parse_rational("bounds.b", &b.b)?,
                m: parse_rational("bounds.m", &b.m)?,
                n: parse_rational("bounds.n", &b.n)?,
            }),
            None => None,
        };
        let family = match &self.family {
            Some(f) => Some(lookup(&f.curve, "family")?),
            None => None,
        };
        Ok(ResolvedConfig {
            curves,
            divisor,
            deltas,
            a1,
            a2,
            bounds,
            integer_bounds: self.integer_bounds.as_ref().map(|b| b.n),
            family,
        })
    }
}

impl ResolvedConfig {
    /// Assemble the designated branches, their weights, and the divisor as
    /// residual part into a theorem configuration. Requires `deltas`, `a1`,
    /// and `a2`.
    pub fn local_config(&self) -> Result<LocalConfig, ConfigError> {
        let (delta1, delta2) = self.deltas.clone().ok_or(ConfigError::MissingField {
            field: "deltas",
            needed_for: "a theorem configuration",
        })?;
        let a1 = self.a1.clone().ok_or(ConfigError::MissingField {
            field: "a1",
            needed_for: "a theorem configuration",
        })?;
        let a2 = self.a2.clone().ok_or(ConfigError::MissingField {
            field: "a2",
            needed_for: "a theorem configuration",
        })?;
        Ok(LocalConfig::new(delta1, delta2, a1, a2, self.divisor.clone())?)
    }
}

/// Serialize a theorem configuration back into a re-runnable document.
/// Branches are named `delta1`/`delta2`, residual components `omega0`,
/// `omega1`, ...
pub fn dump_local_config(cfg: &LocalConfig) -> ConfigFile {
    let mut curves = BTreeMap::new();
    curves.insert("delta1".to_string(), cfg.delta1().poly().display("x", "y"));
    curves.insert("delta2".to_string(), cfg.delta2().poly().display("x", "y"));
    let mut divisor = Vec::new();
    for (i, (germ, weight)) in cfg.omega().components().iter().enumerate() {
        let name = format!("omega{i}");
        curves.insert(name.clone(), germ.poly().display("x", "y"));
        divisor.push(DivisorEntry { curve: name, coefficient: weight.to_string() });
    }
    ConfigFile {
        a1: Some(cfg.a1().to_string()),
        a2: Some(cfg.a2().to_string()),
        curves,
        deltas: Some(DeltaNames {
            delta1: "delta1".to_string(),
            delta2: "delta2".to_string(),
        }),
        bounds: None,
        integer_bounds: None,
        family: None,
        divisor,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FULL: &str = r#"
a1 = "1/2"
a2 = "1/2"

[curves]
delta1 = "x"
delta2 = "y"
c = "y - x^4"

[deltas]
delta1 = "delta1"
delta2 = "delta2"

[bounds]
alpha = "1"
beta = "1"
a = "1/3"
b = "4"
m = "1"
n = "0"

[integer_bounds]
n = 3

[family]
curve = "c"

[[divisor]]
curve = "c"
coefficient = "3/4"
"#;

    #[test]
    fn full_document_resolves() {
        let file = ConfigFile::from_toml_str(FULL).unwrap();
        let resolved = file.resolve().unwrap();
        assert_eq!(resolved.curves.len(), 3);
        assert_eq!(resolved.divisor.components().len(), 1);
        assert_eq!(resolved.a1, Some(Rational::ratio(1, 2)));
        assert_eq!(resolved.integer_bounds, Some(3));
        let bounds = resolved.bounds.as_ref().unwrap();
        assert_eq!(bounds.a, Rational::ratio(1, 3));
        assert_eq!(bounds.b, Rational::from_int(4));
        assert_eq!(resolved.family.as_ref().unwrap().label(), "c");
        let local = resolved.local_config().unwrap();
        assert_eq!(local.omega_mult(), Rational::ratio(3, 4));
    }

    #[test]
    fn unknown_curve_and_bad_rational_are_reported() {
        let text = r#"
[curves]
delta1 = "x"

[[divisor]]
curve = "ghost"
coefficient = "1"
"#;
        let err = ConfigFile::from_toml_str(text).unwrap().resolve().unwrap_err();
        assert!(matches!(err, ConfigError::UnknownCurve { .. }));

        let text = r#"
[curves]
c = "y"

[[divisor]]
curve = "c"
coefficient = "0.5"
"#;
        let err = ConfigFile::from_toml_str(text).unwrap().resolve().unwrap_err();
        assert!(matches!(err, ConfigError::BadRational { .. }));
    }

    #[test]
    fn negative_coefficient_is_rejected() {
        let text = r#"
[curves]
c = "y"

[[divisor]]
curve = "c"
coefficient = "-1/2"
"#;
        let err = ConfigFile::from_toml_str(text).unwrap().resolve().unwrap_err();
        assert!(matches!(err, ConfigError::NegativeCoefficient { .. }));
    }

    #[test]
    fn missing_pieces_block_local_config() {
        let text = r#"
[curves]
c = "y - x"

[[divisor]]
curve = "c"
coefficient = "1"
"#;
        let resolved = ConfigFile::from_toml_str(text).unwrap().resolve().unwrap();
        let err = resolved.local_config().unwrap_err();
        assert!(matches!(err, ConfigError::MissingField { field: "deltas", .. }));
    }

    #[test]
    fn empty_divisor_is_allowed_at_this_layer() {
        let text = r#"
[curves]
c = "y"
"#;
        let resolved = ConfigFile::from_toml_str(text).unwrap().resolve().unwrap();
        assert!(resolved.divisor.is_empty());
    }

    #[test]
    fn dump_round_trips_through_resolution() {
        use crate::germ::CurveGerm;
        let delta1 = CurveGerm::from_equation("delta1", "x").unwrap();
        let delta2 = CurveGerm::from_equation("delta2", "y").unwrap();
        let branch = CurveGerm::from_equation("c", "y - 2*x - 1/3*x^2").unwrap();
        let omega = WeightedGerm::new(vec![(branch, Rational::ratio(5, 7))]).unwrap();
        let cfg = LocalConfig::new(
            delta1,
            delta2,
            Rational::ratio(1, 3),
            Rational::ratio(2, 3),
            omega,
        )
        .unwrap();
        let dump = dump_local_config(&cfg);
        let text = dump.to_toml_string();
        let back = ConfigFile::from_toml_str(&text).unwrap().resolve().unwrap();
        let cfg2 = back.local_config().unwrap();
        assert_eq!(cfg2.a1(), cfg.a1());
        assert_eq!(cfg2.a2(), cfg.a2());
        assert_eq!(cfg2.delta1().poly(), cfg.delta1().poly());
        // The dump renames residual components, so compare content, not labels.
        let (before, after) = (cfg.omega().components(), cfg2.omega().components());
        assert_eq!(before.len(), after.len());
        for ((g1, w1), (g2, w2)) in before.iter().zip(after) {
            assert_eq!(g1.poly(), g2.poly());
            assert_eq!(w1, w2);
        }
    }
}
