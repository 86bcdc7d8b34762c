//! Exact feasibility of small linear-inequality systems over the rationals,
//! by Fourier-Motzkin elimination, with independently checkable outcomes:
//! a satisfying point for feasible systems, a non-negative combination of
//! the constraints deriving an absurdity for infeasible ones.
//!
//! The module also carries a built-in catalog of the contradiction branches
//! used in the proofs this crate audits; [`audit_proof_chains`] runs every
//! cataloged system and cross-checks its verdict, its certificate or
//! witness, and the independence of the verdict from elimination order.
//!
//! # Conventions
//!
//! - A constraint is `sum_i coeffs[i] * x_i REL rhs` with `REL` one of
//!   `<=`, `<`, `=`. Parsing accepts `>=` and `>` and normalizes them by
//!   negation.
//! - Strictness is tracked natively through elimination: a combination is
//!   strict exactly when a strict row enters it with positive multiplier.
//!   No epsilon perturbation anywhere.
//! - Certificates index the original constraint list. Multipliers on
//!   inequality rows must be non-negative; multipliers on equality rows may
//!   take either sign.
//!
//! # Invariants
//!
//! - Every `Infeasible` verdict carries a certificate that re-verifies by
//!   direct exact arithmetic over the original constraints.
//! - Every `Feasible` verdict carries a witness satisfying every original
//!   constraint exactly.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

use crate::rational::Rational;

/// Relation of a linear constraint, after normalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rel {
    /// `<=`
    Le,
    /// `<` (strict)
    Lt,
    /// `=`
    Eq,
}

impl fmt::Display for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rel::Le => write!(f, "<="),
            Rel::Lt => write!(f, "<"),
            Rel::Eq => write!(f, "="),
        }
    }
}

/// One linear constraint `coeffs . x REL rhs`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub rel: Rel,
    pub rhs: Rational,
}

/// Errors raised by system construction and constraint parsing.
#[derive(Clone, Debug, PartialEq)]
pub enum LinError {
    ArityMismatch { expected: usize, got: usize },
    EmptyVariables,
    UnknownVariable { name: String },
    BadConstraint { text: String, message: String },
    BadOrder { message: String },
}

impl fmt::Display for LinError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinError::ArityMismatch { expected, got } => {
                write!(f, "coefficient vector has {got} entries, expected {expected}")
            }
            LinError::EmptyVariables => {
                write!(f, "a system with constraints needs at least one variable")
            }
            LinError::UnknownVariable { name } => {
                write!(f, "unknown variable `{name}` in constraint")
            }
            LinError::BadConstraint { text, message } => {
                write!(f, "cannot parse constraint `{text}`: {message}")
            }
            LinError::BadOrder { message } => {
                write!(f, "bad elimination order: {message}")
            }
        }
    }
}

impl std::error::Error for LinError {}

/// A finite system of linear constraints over named rational variables.
#[derive(Clone, Debug, Serialize)]
pub struct LinSystem {
    variables: Vec<String>,
    constraints: Vec<Constraint>,
}

impl LinSystem {
    pub fn new(variables: Vec<String>) -> Self {
        LinSystem { variables, constraints: Vec::new() }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn push(
        &mut self,
        coeffs: Vec<Rational>,
        rel: Rel,
        rhs: Rational,
    ) -> Result<(), LinError> {
        if self.variables.is_empty() {
            return Err(LinError::EmptyVariables);
        }
        if coeffs.len() != self.variables.len() {
            return Err(LinError::ArityMismatch {
                expected: self.variables.len(),
                got: coeffs.len(),
            });
        }
        self.constraints.push(Constraint { coeffs, rel, rhs });
        Ok(())
    }

    /// Parse and append one constraint written as `LINEAR REL LINEAR`, e.g.
    /// `2*a1 - a2 >= m` or `a1 + a3 <= 1`. Relations `>=`/`>` are
    /// normalized by negation; both sides may mix variables and constants.
    pub fn push_str(&mut self, text: &str) -> Result<(), LinError> {
        let constraint = parse_constraint(text, &self.variables)?;
        if self.variables.is_empty() {
            return Err(LinError::EmptyVariables);
        }
        self.constraints.push(constraint);
        Ok(())
    }

    /// Build a system from variable names and constraint strings.
    pub fn from_strings(
        variables: &[&str],
        constraints: &[&str],
    ) -> Result<Self, LinError> {
        let mut sys = LinSystem::new(variables.iter().map(|s| s.to_string()).collect());
        for text in constraints {
            sys.push_str(text)?;
        }
        Ok(sys)
    }
}

/// Non-negative combination of the original constraints that sums to an
/// absurd row (`0 <= c` with `c < 0`, or `0 < c` with `c <= 0`).
/// `multipliers[i]` scales constraint `i`; entries on equality rows may be
/// negative.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub multipliers: Vec<Rational>,
}

/// Outcome of a feasibility query.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum Verdict {
    Feasible { witness: Vec<Rational> },
    Infeasible { certificate: Certificate },
}

impl Verdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Verdict::Feasible { .. })
    }
}

/// A working row of the eliminator: a `<=`/`<` constraint plus the
/// multipliers over the original constraints that produced it.
#[derive(Clone, Debug)]
struct Row {
    coeffs: Vec<Rational>,
    strict: bool,
    rhs: Rational,
    prov: Vec<Rational>,
}

impl Row {
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// An all-zero row reading `0 <= rhs` (or `0 < rhs`) is absurd exactly
    /// when the rhs is negative, or zero under a strict relation.
    fn is_absurd(&self) -> bool {
        debug_assert!(self.is_zero());
        if self.strict {
            !self.rhs.is_positive()
        } else {
            self.rhs.is_negative()
        }
    }

    fn scaled_sum(&self, other: &Row, self_mul: &Rational, other_mul: &Rational) -> Row {
        debug_assert!(self_mul.is_positive() && other_mul.is_positive());
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| &(a * self_mul) + &(b * other_mul))
            .collect();
        let prov = self
            .prov
            .iter()
            .zip(&other.prov)
            .map(|(a, b)| &(a * self_mul) + &(b * other_mul))
            .collect();
        Row {
            coeffs,
            strict: self.strict || other.strict,
            rhs: &(&self.rhs * self_mul) + &(&other.rhs * other_mul),
            prov,
        }
    }
}

/// Feasibility with the natural (left-to-right) elimination order.
pub fn is_feasible(sys: &LinSystem) -> Result<Verdict, LinError> {
    let order: Vec<usize> = (0..sys.variables.len()).collect();
    is_feasible_with_order(sys, &order)
}

/// Feasibility, eliminating variables in the given order (a permutation of
/// `0..variables.len()`).
pub fn is_feasible_with_order(sys: &LinSystem, order: &[usize]) -> Result<Verdict, LinError> {
    let arity = sys.variables.len();
    if order.len() != arity {
        return Err(LinError::BadOrder {
            message: format!("expected {} indices, got {}", arity, order.len()),
        });
    }
    let mut seen = vec![false; arity];
    for &j in order {
        if j >= arity || seen[j] {
            return Err(LinError::BadOrder {
                message: "order must be a permutation of the variable indices".to_string(),
            });
        }
        seen[j] = true;
    }

    // Split equalities into opposite inequalities, with signed provenance.
    let total = sys.constraints.len();
    let mut rows: Vec<Row> = Vec::new();
    for (i, c) in sys.constraints.iter().enumerate() {
        let mut prov = vec![Rational::zero(); total];
        prov[i] = Rational::one();
        match c.rel {
            Rel::Le | Rel::Lt => rows.push(Row {
                coeffs: c.coeffs.clone(),
                strict: c.rel == Rel::Lt,
                rhs: c.rhs.clone(),
                prov,
            }),
            Rel::Eq => {
                rows.push(Row {
                    coeffs: c.coeffs.clone(),
                    strict: false,
                    rhs: c.rhs.clone(),
                    prov: prov.clone(),
                });
                let neg_coeffs = c.coeffs.iter().map(|v| -v).collect();
                let mut neg_prov = vec![Rational::zero(); total];
                neg_prov[i] = -Rational::one();
                rows.push(Row {
                    coeffs: neg_coeffs,
                    strict: false,
                    rhs: -&c.rhs,
                    prov: neg_prov,
                });
            }
        }
    }

    // Stage snapshots for witness back-substitution: the rows present when
    // each variable was eliminated.
    let mut stages: Vec<(usize, Vec<Row>)> = Vec::new();

    for &j in order {
        // Absurd zero rows surface as soon as they exist.
        for row in &rows {
            if row.is_zero() && row.is_absurd() {
                return Ok(Verdict::Infeasible {
                    certificate: Certificate { multipliers: row.prov.clone() },
                });
            }
        }
        stages.push((j, rows.clone()));
        let mut pos: Vec<Row> = Vec::new();
        let mut neg: Vec<Row> = Vec::new();
        let mut rest: Vec<Row> = Vec::new();
        for row in rows {
            if row.coeffs[j].is_positive() {
                pos.push(row);
            } else if row.coeffs[j].is_negative() {
                neg.push(row);
            } else if !row.is_zero() {
                rest.push(row);
            }
            // Satisfiable zero rows are dropped; absurd ones were caught
            // above.
        }
        for p in &pos {
            for n in &neg {
                let p_mul = p.coeffs[j].recip().expect("positive pivot");
                let n_mul = (-&n.coeffs[j]).recip().expect("negative pivot");
                let combined = p.scaled_sum(n, &p_mul, &n_mul);
                debug_assert!(combined.coeffs[j].is_zero());
                if combined.is_zero() && combined.is_absurd() {
                    return Ok(Verdict::Infeasible {
                        certificate: Certificate { multipliers: combined.prov },
                    });
                }
                if !combined.is_zero() {
                    rest.push(combined);
                }
            }
        }
        rows = rest;
    }

    for row in &rows {
        debug_assert!(row.is_zero());
        if row.is_absurd() {
            return Ok(Verdict::Infeasible {
                certificate: Certificate { multipliers: row.prov.clone() },
            });
        }
    }

    // Feasible: back-substitute a witness, innermost elimination first.
    let mut values: Vec<Option<Rational>> = vec![None; arity];
    for (j, stage_rows) in stages.iter().rev() {
        let mut lower: Option<(Rational, bool)> = None;
        let mut upper: Option<(Rational, bool)> = None;
        for row in stage_rows {
            let cj = &row.coeffs[*j];
            if cj.is_zero() {
                continue;
            }
            let mut rest = row.rhs.clone();
            for (i, c) in row.coeffs.iter().enumerate() {
                if i == *j || c.is_zero() {
                    continue;
                }
                let v = values[i]
                    .as_ref()
                    .expect("later-eliminated variables are already assigned");
                rest -= &(c * v);
            }
            let bound = rest.checked_div(cj).expect("nonzero pivot");
            if cj.is_positive() {
                // x_j <= bound
                let tighter = match &upper {
                    None => true,
                    Some((u, strict)) => bound < *u || (bound == *u && !strict),
                };
                if tighter {
                    upper = Some((bound, row.strict));
                }
            } else {
                // x_j >= bound
                let tighter = match &lower {
                    None => true,
                    Some((l, strict)) => bound > *l || (bound == *l && !strict),
                };
                if tighter {
                    lower = Some((bound, row.strict));
                }
            }
        }
        values[*j] = Some(pick_in_interval(&lower, &upper));
    }
    let witness: Vec<Rational> = values
        .into_iter()
        .map(|v| v.expect("every variable was eliminated"))
        .collect();
    debug_assert!(verify_witness(sys, &witness));
    Ok(Verdict::Feasible { witness })
}

/// A rational value inside the (possibly unbounded, possibly strict)
/// interval, preferring 0, then endpoints, then the midpoint.
fn pick_in_interval(
    lower: &Option<(Rational, bool)>,
    upper: &Option<(Rational, bool)>,
) -> Rational {
    let zero = Rational::zero();
    let zero_ok_low = match lower {
        None => true,
        Some((l, strict)) => *l < zero || (*l == zero && !strict),
    };
    let zero_ok_high = match upper {
        None => true,
        Some((u, strict)) => *u > zero || (*u == zero && !strict),
    };
    if zero_ok_low && zero_ok_high {
        return zero;
    }
    match (lower, upper) {
        (None, None) => zero,
        (Some((l, strict)), None) => {
            if *strict {
                l + &Rational::one()
            } else {
                l.clone()
            }
        }
        (None, Some((u, strict))) => {
            if *strict {
                u - &Rational::one()
            } else {
                u.clone()
            }
        }
        (Some((l, l_strict)), Some((u, u_strict))) => {
            if !l_strict && *l == *u {
                return l.clone();
            }
            if !l_strict && !zero_ok_high {
                // l is attainable and below the upper bound.
                if *l < *u {
                    return l.clone();
                }
            }
            if !u_strict && *u > *l {
                return u.clone();
            }
            &(l + u) / &Rational::from_int(2)
        }
    }
}

/// Independent exact check of an infeasibility certificate: non-negative
/// multipliers on inequality rows, cancellation of every variable, and an
/// absurd combined relation.
pub fn verify_certificate(sys: &LinSystem, cert: &Certificate) -> bool {
    if cert.multipliers.len() != sys.constraints.len() {
        return false;
    }
    let arity = sys.variables.len();
    let mut combined = vec![Rational::zero(); arity];
    let mut rhs = Rational::zero();
    let mut strict = false;
    for (mult, c) in cert.multipliers.iter().zip(&sys.constraints) {
        match c.rel {
            Rel::Le | Rel::Lt => {
                if mult.is_negative() {
                    return false;
                }
            }
            Rel::Eq => {}
        }
        if mult.is_zero() {
            continue;
        }
        if c.rel == Rel::Lt && mult.is_positive() {
            strict = true;
        }
        for (acc, coeff) in combined.iter_mut().zip(&c.coeffs) {
            *acc += &(coeff * mult);
        }
        rhs += &(&c.rhs * mult);
    }
    if combined.iter().any(|c| !c.is_zero()) {
        return false;
    }
    if strict {
        !rhs.is_positive()
    } else {
        rhs.is_negative()
    }
}

/// Exact check that a point satisfies every constraint of the system.
pub fn verify_witness(sys: &LinSystem, witness: &[Rational]) -> bool {
    if witness.len() != sys.variables.len() {
        return false;
    }
    sys.constraints.iter().all(|c| {
        let mut lhs = Rational::zero();
        for (coeff, v) in c.coeffs.iter().zip(witness) {
            lhs += &(coeff * v);
        }
        match c.rel {
            Rel::Le => lhs <= c.rhs,
            Rel::Lt => lhs < c.rhs,
            Rel::Eq => lhs == c.rhs,
        }
    })
}

// ---------------------------------------------------------------------------
// Constraint-string parsing
// ---------------------------------------------------------------------------

/// Parse `LINEAR REL LINEAR` over the given variables into a normalized
/// constraint (`<=`, `<`, or `=`; `>=`/`>` are flipped by negation).
pub fn parse_constraint(text: &str, variables: &[String]) -> Result<Constraint, LinError> {
    let bad = |message: &str| LinError::BadConstraint {
        text: text.to_string(),
        message: message.to_string(),
    };
    let (lhs_text, rel_text, rhs_text) = split_relation(text).ok_or_else(|| {
        bad("expected exactly one relation among <=, <, >=, >, =")
    })?;
    let (mut coeffs, lhs_const) = parse_linear_side(lhs_text, variables, text)?;
    let (r_coeffs, rhs_const) = parse_linear_side(rhs_text, variables, text)?;
    for (c, r) in coeffs.iter_mut().zip(&r_coeffs) {
        *c -= r;
    }
    let mut rhs = &rhs_const - &lhs_const;
    let rel = match rel_text {
        "<=" => Rel::Le,
        "<" => Rel::Lt,
        "=" => Rel::Eq,
        ">=" | ">" => {
            for c in coeffs.iter_mut() {
                *c = -&*c;
            }
            rhs = -&rhs;
            if rel_text == ">=" {
                Rel::Le
            } else {
                Rel::Lt
            }
        }
        _ => unreachable!("split_relation yields known relations"),
    };
    Ok(Constraint { coeffs, rel, rhs })
}

fn split_relation(text: &str) -> Option<(&str, &'static str, &str)> {
    for rel in ["<=", ">=", "<", ">", "="] {
        if let Some(pos) = text.find(rel) {
            let (lhs, rest) = text.split_at(pos);
            return Some((lhs, rel, &rest[rel.len()..]));
        }
    }
    None
}

/// Parse one side of a constraint: a signed sum of terms, each a rational
/// constant, a variable, or `constant*variable`. Returns the coefficient
/// vector and the constant part.
fn parse_linear_side(
    side: &str,
    variables: &[String],
    whole: &str,
) -> Result<(Vec<Rational>, Rational), LinError> {
    let bad = |message: String| LinError::BadConstraint {
        text: whole.to_string(),
        message,
    };
    let mut coeffs = vec![Rational::zero(); variables.len()];
    let mut constant = Rational::zero();
    let chars: Vec<char> = side.chars().collect();
    let mut i = 0;
    let mut expect_term = true;
    let mut sign = Rational::one();
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
            continue;
        }
        if ch == '+' || ch == '-' {
            if expect_term && ch == '-' {
                sign = -&sign;
                i += 1;
                continue;
            }
            if expect_term {
                i += 1;
                continue;
            }
            sign = if ch == '-' { -Rational::one() } else { Rational::one() };
            expect_term = true;
            i += 1;
            continue;
        }
        if !expect_term {
            return Err(bad(format!("expected `+` or `-` before `{ch}`")));
        }
        if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let mut numer: String = chars[start..i].iter().collect();
            if i < chars.len() && chars[i] == '/' {
                i += 1;
                let dstart = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if dstart == i {
                    return Err(bad("missing denominator".to_string()));
                }
                numer.push('/');
                numer.extend(&chars[dstart..i]);
            }
            let value: Rational = numer
                .parse()
                .map_err(|e| bad(format!("bad rational `{numer}`: {e}")))?;
            // Optional `*variable`.
            let mut k = i;
            while k < chars.len() && chars[k].is_whitespace() {
                k += 1;
            }
            if k < chars.len() && chars[k] == '*' {
                k += 1;
                while k < chars.len() && chars[k].is_whitespace() {
                    k += 1;
                }
                let vstart = k;
                while k < chars.len() && (chars[k].is_alphanumeric() || chars[k] == '_') {
                    k += 1;
                }
                if vstart == k {
                    return Err(bad("expected a variable after `*`".to_string()));
                }
                let name: String = chars[vstart..k].iter().collect();
                let idx = variables
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| LinError::UnknownVariable { name: name.clone() })?;
                coeffs[idx] += &(&sign * &value);
                i = k;
            } else {
                constant += &(&sign * &value);
            }
        } else if ch.is_alphabetic() || ch == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let name: String = chars[start..i].iter().collect();
            let idx = variables
                .iter()
                .position(|v| *v == name)
                .ok_or_else(|| LinError::UnknownVariable { name: name.clone() })?;
            coeffs[idx] += &sign;
        } else {
            return Err(bad(format!("unexpected character `{ch}`")));
        }
        sign = Rational::one();
        expect_term = false;
    }
    if expect_term && !(coeffs.iter().all(|c| c.is_zero()) && constant.is_zero()) {
        return Err(bad("dangling sign".to_string()));
    }
    Ok((coeffs, constant))
}

// ---------------------------------------------------------------------------
// Built-in proof-chain catalog
// ---------------------------------------------------------------------------

const CATALOG_SOURCE: &str = include_str!("../data/proof_catalog.json");

#[derive(Deserialize)]
struct RawCatalog {
    bases: BTreeMap<String, RawBase>,
    entries: Vec<RawEntry>,
}

#[derive(Deserialize)]
struct RawBase {
    variables: Vec<String>,
    constraints: Vec<String>,
}

#[derive(Deserialize)]
struct RawEntry {
    group: String,
    name: String,
    anchor: String,
    expect: String,
    #[serde(default)]
    base: Option<String>,
    #[serde(default)]
    variables: Option<Vec<String>>,
    #[serde(default)]
    constraints: Option<Vec<String>>,
    #[serde(default)]
    extra: Vec<String>,
}

/// One cataloged proof-branch system, ready to run.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub group: String,
    pub name: String,
    pub anchor: String,
    pub expect_infeasible: bool,
    pub system: LinSystem,
}

/// The built-in catalog of proof-branch systems.
pub fn proof_catalog() -> Vec<CatalogEntry> {
    let raw: RawCatalog =
        serde_json::from_str(CATALOG_SOURCE).expect("built-in catalog parses");
    raw.entries
        .iter()
        .map(|e| {
            let (variables, mut constraints): (Vec<String>, Vec<String>) = match &e.base {
                Some(name) => {
                    let base = raw
                        .bases
                        .get(name)
                        .unwrap_or_else(|| panic!("catalog base `{name}` exists"));
                    (base.variables.clone(), base.constraints.clone())
                }
                None => (
                    e.variables.clone().expect("free-standing entry lists variables"),
                    e.constraints.clone().expect("free-standing entry lists constraints"),
                ),
            };
            constraints.extend(e.extra.iter().cloned());
            let mut sys = LinSystem::new(variables);
            for text in &constraints {
                sys.push_str(text).unwrap_or_else(|err| {
                    panic!("catalog entry `{}/{}`: {err}", e.group, e.name)
                });
            }
            let expect_infeasible = match e.expect.as_str() {
                "infeasible" => true,
                "feasible" => false,
                other => panic!("catalog entry `{}/{}`: bad expectation `{other}`", e.group, e.name),
            };
            CatalogEntry {
                group: e.group.clone(),
                name: e.name.clone(),
                anchor: e.anchor.clone(),
                expect_infeasible,
                system: sys,
            }
        })
        .collect()
}

/// Audit outcome for one catalog entry.
#[derive(Clone, Debug, Serialize)]
pub struct AuditEntry {
    pub group: String,
    pub name: String,
    pub anchor: String,
    pub expect_infeasible: bool,
    pub infeasible: bool,
    /// For infeasible verdicts: the certificate from the natural-order run,
    /// independently re-verified.
    pub certificate: Option<Certificate>,
    /// For feasible verdicts: the witness from the natural-order run,
    /// checked against every constraint.
    pub witness: Option<Vec<Rational>>,
    /// The natural-order evidence re-verified exactly.
    pub evidence_verified: bool,
    /// Three elimination orders (natural, reversed, shuffled) agree, each
    /// with verified evidence.
    pub order_independent: bool,
    pub passed: bool,
}

/// Audit report over the whole catalog, in catalog order.
#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub entries: Vec<AuditEntry>,
}

impl AuditReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn group_entries<'a>(&'a self, group: &'a str) -> impl Iterator<Item = &'a AuditEntry> {
        self.entries.iter().filter(move |e| e.group == group)
    }

    pub fn failures(&self) -> Vec<&AuditEntry> {
        self.entries.iter().filter(|e| !e.passed).collect()
    }
}

fn shuffled_order(arity: usize, seed: u64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..arity).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in (1..arity).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        order.swap(i, j);
    }
    order
}

fn run_entry(index: usize, entry: &CatalogEntry) -> AuditEntry {
    let sys = &entry.system;
    let arity = sys.variables().len();
    let natural: Vec<usize> = (0..arity).collect();
    let reversed: Vec<usize> = (0..arity).rev().collect();
    let shuffled = shuffled_order(arity, 0x9e3779b97f4a7c15 ^ index as u64);

    let verdicts: Vec<Verdict> = [natural, reversed, shuffled]
        .iter()
        .map(|order| is_feasible_with_order(sys, order).expect("catalog systems are well-formed"))
        .collect();

    let mut all_verified = true;
    for v in &verdicts {
        let ok = match v {
            Verdict::Feasible { witness } => verify_witness(sys, witness),
            Verdict::Infeasible { certificate } => verify_certificate(sys, certificate),
        };
        all_verified &= ok;
    }
    let infeasible = !verdicts[0].is_feasible();
    let order_independent = verdicts
        .iter()
        .all(|v| v.is_feasible() == verdicts[0].is_feasible())
        && all_verified;

    let (certificate, witness, evidence_verified) = match &verdicts[0] {
        Verdict::Infeasible { certificate } => {
            let ok = verify_certificate(sys, certificate);
            (Some(certificate.clone()), None, ok)
        }
        Verdict::Feasible { witness } => {
            let ok = verify_witness(sys, witness);
            (None, Some(witness.clone()), ok)
        }
    };

    let passed =
        infeasible == entry.expect_infeasible && evidence_verified && order_independent;
    AuditEntry {
        group: entry.group.clone(),
        name: entry.name.clone(),
        anchor: entry.anchor.clone(),
        expect_infeasible: entry.expect_infeasible,
        infeasible,
        certificate,
        witness,
        evidence_verified,
        order_independent,
        passed,
    }
}

/// Run every cataloged proof-branch system: decide feasibility under three
/// elimination orders, re-verify certificates and witnesses independently,
/// and compare against the cataloged expectation.
pub fn audit_proof_chains() -> AuditReport {
    let catalog = proof_catalog();
    let entries: Vec<AuditEntry> = catalog
        .par_iter()
        .enumerate()
        .map(|(i, e)| run_entry(i, e))
        .collect();
    AuditReport { entries }
}
