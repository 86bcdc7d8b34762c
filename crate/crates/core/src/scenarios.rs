//! Named, self-checking worked examples: each scenario builds a concrete
//! configuration, computes every quantity with the exact oracles of this
//! crate, and records expected-versus-actual pairs instead of asserting, so
//! a front end can render the full table and a caller can gate on
//! [`ScenarioReport::passed`].
//!
//! # Conventions
//!
//! - Scenario names are stable kebab-case strings; [`scenario_names`] lists
//!   them and [`by_name`] dispatches on them.
//! - Every check renders its expected and actual values exactly (rationals
//!   in lowest terms); no floating point anywhere.
//! - An `anchor` sentence on each report says which geometric situation the
//!   scenario reproduces.
//!
//! # Invariants
//!
//! - Scenario execution is deterministic: the same inputs produce
//!   byte-identical serialized reports.
//! - A report passes iff every one of its checks passes; failures carry the
//!   offending expected/actual pair.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::blowup::BlowupOptions;
use crate::germ::{CurveGerm, GermError, WeightedGerm};
use crate::invariants::{
    is_log_canonical_at_origin, lct_at_origin, lct_threshold_in_family, pair_mult,
    InvariantError, LctValue,
};
use crate::linfeas::{is_feasible, verify_certificate, verify_witness, LinError, LinSystem, Rel, Verdict};
use crate::rational::Rational;
use crate::theorems::{
    bound_conclusion, bound_hypotheses, transverse_pair_conclusion, BoundParams, LocalConfig,
    TheoremError,
};

/// Errors raised by scenario construction and dispatch.
#[derive(Debug)]
pub enum ScenarioError {
    UnknownScenario { name: String },
    BadParameter { name: &'static str, value: String, requirement: &'static str },
    Germ(GermError),
    Invariant(InvariantError),
    Theorem(TheoremError),
    Lin(LinError),
}

impl fmt::Display for ScenarioError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScenarioError::UnknownScenario { name } => {
                write!(f, "unknown scenario `{name}`")
            }
            ScenarioError::BadParameter { name, value, requirement } => {
                write!(f, "scenario parameter {name} = {value} must be {requirement}")
            }
            ScenarioError::Germ(e) => write!(f, "germ error: {e}"),
            ScenarioError::Invariant(e) => write!(f, "invariant error: {e}"),
            ScenarioError::Theorem(e) => write!(f, "theorem error: {e}"),
            ScenarioError::Lin(e) => write!(f, "linear-system error: {e}"),
        }
    }
}

impl std::error::Error for ScenarioError {}

impl From<GermError> for ScenarioError {
    fn from(e: GermError) -> Self {
        ScenarioError::Germ(e)
    }
}

impl From<InvariantError> for ScenarioError {
    fn from(e: InvariantError) -> Self {
        ScenarioError::Invariant(e)
    }
}

impl From<TheoremError> for ScenarioError {
    fn from(e: TheoremError) -> Self {
        ScenarioError::Theorem(e)
    }
}

impl From<LinError> for ScenarioError {
    fn from(e: LinError) -> Self {
        ScenarioError::Lin(e)
    }
}

/// One expected-versus-actual comparison inside a scenario.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

/// A named scenario run: an anchor sentence describing the configuration
/// and the full list of checks.
#[derive(Clone, Debug, Serialize)]
pub struct ScenarioReport {
    pub name: String,
    pub anchor: String,
    pub checks: Vec<Check>,
}

impl ScenarioReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// Builder collecting checks for one report.
struct Checks(Vec<Check>);

impl Checks {
    fn new() -> Self {
        Checks(Vec::new())
    }

    fn eq<T: PartialEq + fmt::Display>(&mut self, label: impl Into<String>, expected: &T, actual: &T) {
        self.0.push(Check {
            label: label.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            passed: expected == actual,
        });
    }

    fn is_true(&mut self, label: impl Into<String>, actual: bool) {
        self.eq(label, &true, &actual);
    }

    fn is_false(&mut self, label: impl Into<String>, actual: bool) {
        self.eq(label, &false, &actual);
    }
}

/// The stable scenario registry, in execution order for [`run_all`].
pub fn scenario_names() -> &'static [&'static str] {
    &["axis-tangent-family", "germ-lct-table", "fibonacci-weights", "line-conic-params"]
}

/// Run one scenario by registry name.
pub fn by_name(name: &str, opts: &BlowupOptions) -> Result<ScenarioReport, ScenarioError> {
    match name {
        "axis-tangent-family" => axis_tangent_family_grid(opts),
        "germ-lct-table" => germ_lct_table(opts),
        "fibonacci-weights" => fibonacci_weights(50, opts),
        "line-conic-params" => line_conic_params(opts),
        _ => Err(ScenarioError::UnknownScenario { name: name.to_string() }),
    }
}

/// Run every registered scenario, in registry order.
pub fn run_all(opts: &BlowupOptions) -> Result<Vec<ScenarioReport>, ScenarioError> {
    scenario_names().iter().map(|name| by_name(name, opts)).collect()
}

// ---------------------------------------------------------------------------
// Axis-tangent family
// ---------------------------------------------------------------------------

/// One instance of the axis-tangent family: weighted coordinate axes
/// `(1/m)*{x=0} + (1 - 1/m)*{y=0}` plus a variable multiple of the smooth
/// branch `y = x^r` with `r = k*m*(m-1)`, tangent to the second axis.
///
/// Checks, for `m, k >= 2`:
/// - the largest log-canonical multiple of the branch is exactly
///   `1/m + 1/(k*m^2)`;
/// - the branch pairs with the axes to `lambda` and `r*lambda`;
/// - the six-parameter bound applies with
///   `(alpha, beta, m, a, b, n) = (1, 1, 1, 1/(k*m - 1), k*m, 0)` and its
///   second threshold is `k*(m-1) - 1/m`;
/// - for sampled `lambda` strictly between the threshold and
///   `k/(k*m - 1)`, the pair is not log canonical and both the
///   six-parameter bound and the transverse-pair bound hold;
/// - the six-parameter second threshold strictly exceeds the
///   transverse-pair one, `2*(1 - 1/m)`.
pub fn axis_tangent_family(m: i64, k: i64, opts: &BlowupOptions) -> Result<ScenarioReport, ScenarioError> {
    let mut checks = Checks::new();
    axis_instance_checks(m, k, "", &mut checks, opts)?;
    Ok(ScenarioReport {
        name: "axis-tangent-family".to_string(),
        anchor: "a smooth branch tangent to high order to one of two weighted coordinate axes; \
                 the second-branch bound strictly sharpens the transverse-pair bound"
            .to_string(),
        checks: checks.0,
    })
}

/// The axis-tangent family over the grid `(m, k)` in `{2,3} x {2,3,4}`.
pub fn axis_tangent_family_grid(opts: &BlowupOptions) -> Result<ScenarioReport, ScenarioError> {
    let mut checks = Checks::new();
    for m in [2i64, 3] {
        for k in [2i64, 3, 4] {
            let prefix = format!("(m, k) = ({m}, {k}): ");
            axis_instance_checks(m, k, &prefix, &mut checks, opts)?;
        }
    }
    Ok(ScenarioReport {
        name: "axis-tangent-family".to_string(),
        anchor: "a smooth branch tangent to high order to one of two weighted coordinate axes, \
                 over the parameter grid m in {2, 3}, k in {2, 3, 4}"
            .to_string(),
        checks: checks.0,
    })
}

fn axis_instance_checks(
    m: i64,
    k: i64,
    prefix: &str,
    checks: &mut Checks,
    opts: &BlowupOptions,
) -> Result<(), ScenarioError> {
    if m < 2 {
        return Err(ScenarioError::BadParameter {
            name: "m",
            value: m.to_string(),
            requirement: "an integer at least 2",
        });
    }
    if k < 2 {
        return Err(ScenarioError::BadParameter {
            name: "k",
            value: k.to_string(),
            requirement: "an integer at least 2",
        });
    }
    let r = k * m * (m - 1);
    let delta1 = CurveGerm::from_equation("delta1", "x")?;
    let delta2 = CurveGerm::from_equation("delta2", "y")?;
    let branch = CurveGerm::from_equation("branch", &format!("y - x^{r}"))?;
    let a1 = Rational::ratio(1, m);
    let a2 = Rational::ratio(m - 1, m);

    let fixed = WeightedGerm::new(vec![(delta1.clone(), a1.clone()), (delta2.clone(), a2.clone())])?;
    let threshold = lct_threshold_in_family(&fixed, &branch, opts)?;
    let expected_threshold = Rational::ratio(k * m + 1, k * m * m);
    checks.eq(
        format!("{prefix}largest log-canonical multiple of the branch"),
        &expected_threshold,
        &threshold,
    );

    let params = BoundParams {
        alpha: Rational::one(),
        beta: Rational::one(),
        a: Rational::ratio(1, k * m - 1),
        b: Rational::from_int(k * m),
        m: Rational::one(),
        n: Rational::zero(),
    };
    let clauses = bound_hypotheses(&params, &a1, &a2)?;
    checks.is_true(
        format!("{prefix}all parameter clauses hold at (1, 1, 1, 1/(k*m - 1), k*m, 0)"),
        clauses.all_hold(),
    );

    // k*(m - 1) - 1/m, the second-branch bound of the six-parameter
    // predicate; the transverse-pair one is 2*(1 - 1/m).
    let sharp_bound = Rational::ratio(k * m * (m - 1) - 1, m);
    let pair_bound = Rational::ratio(2 * (m - 1), m);
    checks.is_true(
        format!("{prefix}second-branch bound {sharp_bound} strictly exceeds the pair bound {pair_bound}"),
        sharp_bound > pair_bound,
    );

    let hi = Rational::ratio(k, k * m - 1);
    let gap = &hi - &expected_threshold;
    for (qn, qd) in [(1i64, 4i64), (1, 2), (3, 4)] {
        let lambda = &expected_threshold + &(&gap * &Rational::ratio(qn, qd));
        let omega = WeightedGerm::new(vec![(branch.clone(), lambda.clone())])?;

        let p1 = pair_mult(&omega, &delta1, opts)?;
        checks.eq(
            format!("{prefix}pairing with the first axis at lambda = {lambda}"),
            &lambda,
            &p1,
        );
        let p2 = pair_mult(&omega, &delta2, opts)?;
        checks.eq(
            format!("{prefix}pairing with the second axis at lambda = {lambda}"),
            &(&Rational::from_int(r) * &lambda),
            &p2,
        );

        let cfg = LocalConfig::new(
            delta1.clone(),
            delta2.clone(),
            a1.clone(),
            a2.clone(),
            omega,
        )?;
        let lc = is_log_canonical_at_origin(&cfg.boundary(), opts)?;
        checks.is_false(
            format!("{prefix}log canonical at lambda = {lambda} above the threshold"),
            lc.is_lc,
        );

        let sharp = bound_conclusion(&cfg, &params, opts)?;
        checks.eq(
            format!("{prefix}six-parameter second threshold at lambda = {lambda}"),
            &sharp_bound,
            &sharp.second.threshold,
        );
        checks.is_true(
            format!("{prefix}six-parameter bound holds at lambda = {lambda}"),
            sharp.holds(),
        );

        let pair = transverse_pair_conclusion(&cfg, opts)?;
        checks.eq(
            format!("{prefix}transverse-pair second threshold at lambda = {lambda}"),
            &pair_bound,
            &pair.second.threshold,
        );
        checks.is_true(
            format!("{prefix}transverse-pair bound holds at lambda = {lambda}"),
            pair.holds(),
        );
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Germ lct table
// ---------------------------------------------------------------------------

/// Log canonical thresholds of the six reference germs, each at weight 1:
/// smooth branch, node, cusp, tacnode, ordinary triple point, and a tacnode
/// with an irrational tangent (which forces the resolution through a
/// quadratic extension).
pub fn germ_lct_table(opts: &BlowupOptions) -> Result<ScenarioReport, ScenarioError> {
    let rows: [(&str, &str, Rational); 6] = [
        ("smooth", "x", Rational::one()),
        ("node", "x*y", Rational::one()),
        ("cusp", "y^2 - x^3", Rational::ratio(5, 6)),
        ("tacnode", "y^2 - x^4", Rational::ratio(3, 4)),
        ("ordinary-triple", "x^3 - y^3", Rational::ratio(2, 3)),
        ("irrational-tacnode", "y^2 - 2*x^4", Rational::ratio(3, 4)),
    ];
    let mut checks = Checks::new();
    for (label, equation, expected) in rows {
        let germ = CurveGerm::from_equation(label, equation)?;
        let divisor = WeightedGerm::new(vec![(germ, Rational::one())])?;
        let report = lct_at_origin(&divisor, opts)?;
        let actual = match &report.lct {
            LctValue::Finite(v) => v.clone(),
            LctValue::Infinity => {
                checks.0.push(Check {
                    label: format!("lct of {label} ({equation})"),
                    expected: expected.to_string(),
                    actual: "infinity".to_string(),
                    passed: false,
                });
                continue;
            }
        };
        checks.eq(format!("lct of {label} ({equation})"), &expected, &actual);
    }
    Ok(ScenarioReport {
        name: "germ-lct-table".to_string(),
        anchor: "the reference table of log canonical thresholds for the classical \
                 plane-curve germs at full weight"
            .to_string(),
        checks: checks.0,
    })
}

// ---------------------------------------------------------------------------
// Fibonacci weights
// ---------------------------------------------------------------------------

/// Arithmetic identities for the Fibonacci-weighted anticanonical pencils,
/// plus one local surrogate.
///
/// With `a_1 = a_2 = 1` the Fibonacci convention is fixed by the displayed
/// `k = 0` coefficients `1/3` and `2/3`. For each `k` up to `k_max`:
/// - degree identity
///   `5*a_{2k+3} + (4*a_{2k+1} - a_{2k+3}) = 4*(a_{2k+1} + a_{2k+3})`;
/// - the line coefficient `(4*a_{2k+1} - a_{2k+3})/(a_{2k+1} + a_{2k+3})`
///   lies strictly between 0 and 1;
/// - the threshold value `T/(1 + T)` with
///   `T = a_{2k+3}*(a_{2k+1} + a_{2k+3})` is strictly below 1.
///
/// For `k = 0` the local picture is five transverse smooth branches at
/// weight `1/3` plus a sixth at `2/3`; the blow-up oracle must give the
/// same threshold `6/7` as the formula.
pub fn fibonacci_weights(k_max: u32, opts: &BlowupOptions) -> Result<ScenarioReport, ScenarioError> {
    let top = 2 * k_max as usize + 3;
    let mut fib: Vec<BigInt> = vec![BigInt::from(0); top + 1];
    fib[1] = BigInt::from(1);
    if top >= 2 {
        fib[2] = BigInt::from(1);
        for i in 3..=top {
            fib[i] = &fib[i - 1] + &fib[i - 2];
        }
    }

    let mut identity_violation: Option<u32> = None;
    let mut coeff_violation: Option<u32> = None;
    let mut value_violation: Option<u32> = None;
    for k in 0..=k_max {
        let a = &fib[2 * k as usize + 1];
        let c = &fib[2 * k as usize + 3];
        let lhs = BigInt::from(5) * c + (BigInt::from(4) * a - c);
        let rhs = BigInt::from(4) * (a + c);
        if lhs != rhs && identity_violation.is_none() {
            identity_violation = Some(k);
        }
        let coeff = Rational::from_big(BigInt::from(4) * a - c, a + c)
            .expect("Fibonacci numbers are positive");
        if !(coeff.is_positive() && coeff < Rational::one()) && coeff_violation.is_none() {
            coeff_violation = Some(k);
        }
        let t = c * (a + c);
        let value = Rational::from_big(t.clone(), t + BigInt::from(1))
            .expect("T + 1 is positive");
        if value >= Rational::one() && value_violation.is_none() {
            value_violation = Some(k);
        }
    }

    let mut checks = Checks::new();
    let aggregate = |violation: Option<u32>| -> String {
        match violation {
            None => format!("holds for every k through {k_max}"),
            Some(k) => format!("fails at k = {k}"),
        }
    };
    let clean = format!("holds for every k through {k_max}");
    checks.eq(
        "degree identity 5*a_{2k+3} + (4*a_{2k+1} - a_{2k+3}) = 4*(a_{2k+1} + a_{2k+3})",
        &clean,
        &aggregate(identity_violation),
    );
    checks.eq(
        "line coefficient (4*a_{2k+1} - a_{2k+3})/(a_{2k+1} + a_{2k+3}) lies in (0, 1)",
        &clean,
        &aggregate(coeff_violation),
    );
    checks.eq(
        "threshold value T/(1 + T) lies below 1",
        &clean,
        &aggregate(value_violation),
    );

    // Frozen k = 0 instance: coefficients 1/3 and 2/3, T = 6, value 6/7.
    checks.eq(
        "k = 0: branch coefficient 1/(a_1 + a_3)",
        &Rational::ratio(1, 3),
        &Rational::from_big(BigInt::from(1), &fib[1] + &fib[3]).expect("positive"),
    );
    checks.eq(
        "k = 0: line coefficient (4*a_1 - a_3)/(a_1 + a_3)",
        &Rational::ratio(2, 3),
        &Rational::from_big(BigInt::from(4) * &fib[1] - &fib[3], &fib[1] + &fib[3])
            .expect("positive"),
    );
    let t0 = &fib[3] * (&fib[1] + &fib[3]);
    checks.eq("k = 0: T = a_3*(a_1 + a_3)", &BigInt::from(6), &t0);
    let value0 = Rational::from_big(t0.clone(), &t0 + BigInt::from(1)).expect("positive");
    checks.eq("k = 0: formula value T/(1 + T)", &Rational::ratio(6, 7), &value0);

    // Local surrogate for k = 0: five transverse smooth branches at 1/3
    // plus one more at 2/3; an ordinary sextuple crossing.
    let mut parts: Vec<(CurveGerm, Rational)> = Vec::new();
    for i in 1..=5i64 {
        let germ = CurveGerm::from_equation(format!("b{i}"), &format!("y - {i}*x"))?;
        parts.push((germ, Rational::ratio(1, 3)));
    }
    parts.push((CurveGerm::from_equation("line", "x")?, Rational::ratio(2, 3)));
    let surrogate = WeightedGerm::new(parts)?;
    let report = lct_at_origin(&surrogate, opts)?;
    let lct = report
        .lct
        .as_rational()
        .expect("a positively weighted divisor has a finite threshold")
        .clone();
    checks.eq("k = 0: surrogate oracle threshold", &value0, &lct);

    // Frozen k = 1 instance: a_3 = 2, a_5 = 5, coefficient 3/7, T = 35.
    if k_max >= 1 {
        checks.eq(
            "k = 1: line coefficient (4*a_3 - a_5)/(a_3 + a_5)",
            &Rational::ratio(3, 7),
            &Rational::from_big(BigInt::from(4) * &fib[3] - &fib[5], &fib[3] + &fib[5])
                .expect("positive"),
        );
        let t1 = &fib[5] * (&fib[3] + &fib[5]);
        checks.eq("k = 1: T = a_5*(a_3 + a_5)", &BigInt::from(35), &t1);
        let value1 = Rational::from_big(t1.clone(), &t1 + BigInt::from(1)).expect("positive");
        checks.eq("k = 1: formula value T/(1 + T)", &Rational::ratio(35, 36), &value1);
    }

    Ok(ScenarioReport {
        name: "fibonacci-weights".to_string(),
        anchor: "Fibonacci-weighted pencil coefficients: anticanonical degree identity, \
                 coefficient bounds, and the ordinary-crossing surrogate for the first member"
            .to_string(),
        checks: checks.0,
    })
}

// ---------------------------------------------------------------------------
// Line-conic parameters
// ---------------------------------------------------------------------------

/// A linear polynomial in the two symbolic weights `n` and `m`.
#[derive(Clone, Debug, PartialEq)]
struct LinearPoly {
    constant: Rational,
    n: Rational,
    m: Rational,
}

impl LinearPoly {
    fn new(constant: Rational, n: Rational, m: Rational) -> Self {
        LinearPoly { constant, n, m }
    }

    fn scale(&self, r: &Rational) -> Self {
        LinearPoly {
            constant: &self.constant * r,
            n: &self.n * r,
            m: &self.m * r,
        }
    }

    fn add(&self, other: &Self) -> Self {
        LinearPoly {
            constant: &self.constant + &other.constant,
            n: &self.n + &other.n,
            m: &self.m + &other.m,
        }
    }

    fn sub(&self, other: &Self) -> Self {
        LinearPoly {
            constant: &self.constant - &other.constant,
            n: &self.n - &other.n,
            m: &self.m - &other.m,
        }
    }
}

impl fmt::Display for LinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut term = |f: &mut fmt::Formatter<'_>,
                        coeff: &Rational,
                        var: Option<&str>|
         -> fmt::Result {
            if coeff.is_zero() {
                return Ok(());
            }
            let mag = coeff.abs();
            if first {
                first = false;
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match var {
                None => write!(f, "{mag}"),
                Some(v) => {
                    if mag.is_one() {
                        write!(f, "{v}")
                    } else {
                        write!(f, "{mag}*{v}")
                    }
                }
            }
        };
        term(f, &self.constant, None)?;
        term(f, &self.n, Some("n"))?;
        term(f, &self.m, Some("m"))?;
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Symbolic certification of the unit-parameter instance of the
/// six-parameter bound at the satellite point of a line-conic tangency.
///
/// After one blow-up the two branches carry the symbolic weights
/// `a1 = n + m - 1` (the exceptional curve) and `a2 = n` (the line
/// transform), constrained to the strip `2*n + m <= 2` coming from pairing
/// the boundary with the conic. With parameters
/// `(alpha, beta, m, a, b, n) = (1, 1, 1, 1, 2, 0)`:
/// - the weight clause reduces exactly to the strip bound and is certified
///   infeasible to violate;
/// - the remaining clauses are weight-free and hold with equality or
///   slack;
/// - both conclusion thresholds collapse to the attained pairings `m` and
///   `1 + n - m` themselves.
///
/// A concrete surrogate at `(n, m) = (1/2, 3/4)` exercises the collapse on
/// an honest germ configuration.
pub fn line_conic_params(opts: &BlowupOptions) -> Result<ScenarioReport, ScenarioError> {
    let mut checks = Checks::new();
    let params = BoundParams {
        alpha: Rational::one(),
        beta: Rational::one(),
        a: Rational::one(),
        b: Rational::from_int(2),
        m: Rational::one(),
        n: Rational::zero(),
    };
    // Symbolic weights after the blow-up.
    let a1 = LinearPoly::new(-Rational::one(), Rational::one(), Rational::one());
    let a2 = LinearPoly::new(Rational::zero(), Rational::one(), Rational::zero());

    // Weight clause alpha*a1 + beta*a2 <= 1, as a symbolic combination.
    let combo = a1.scale(&params.alpha).add(&a2.scale(&params.beta));
    checks.eq(
        "weight clause alpha*a1 + beta*a2 reduces to",
        &LinearPoly::new(-Rational::one(), Rational::from_int(2), Rational::one()),
        &combo,
    );

    let region = LinSystem::from_strings(&["n", "m"], &["n >= 0", "m >= 0", "2*n + m <= 2"])?;
    let witness_ok = match is_feasible(&region)? {
        Verdict::Feasible { witness } => verify_witness(&region, &witness),
        Verdict::Infeasible { .. } => false,
    };
    checks.is_true("the pairing strip 2*n + m <= 2 is nonempty", witness_ok);

    // Violating the weight clause inside the strip is infeasible, with a
    // re-verified certificate: combo > 1.
    let mut violated = region.clone();
    let bound = &Rational::one() - &combo.constant;
    violated.push(vec![-&combo.n, -&combo.m], Rel::Lt, -&bound)?;
    let certified = match is_feasible(&violated)? {
        Verdict::Infeasible { certificate } => verify_certificate(&violated, &certificate),
        Verdict::Feasible { .. } => false,
    };
    checks.is_true(
        "weight clause holds throughout the strip (violation certified infeasible)",
        certified,
    );

    // The remaining clauses never mention the branch weights; evaluate them
    // through the shared clause code at zero weights.
    let clauses = bound_hypotheses(&params, &Rational::zero(), &Rational::zero())?;
    checks.is_true("self-pairing clause a*(b - 1) >= 1 (equality 1 >= 1)", clauses.c2);
    checks.is_true("first fixed bound m <= 1 (equality)", clauses.c3);
    checks.is_true("second fixed bound n <= 1 (0 <= 1)", clauses.c4);
    checks.is_true(
        "balance clause alpha*(a + m - 1) >= a^2*(b + n - 1)*beta (equality 1 >= 1)",
        clauses.c5,
    );
    checks.is_true(
        "transfer clause alpha*(1 - m) + a*beta >= a (equality 1 >= 1)",
        clauses.c6,
    );
    checks.is_true("closing clause 2*m + a*n <= 2 (equality 2 <= 2)", clauses.c7_first);
    checks.is_true("the seventh clause disjunction", clauses.c7());

    // The conclusion thresholds collapse to the attained pairings.
    let t1 = LinearPoly::new(params.m.clone(), Rational::zero(), Rational::zero())
        .add(&a1.scale(&params.a))
        .sub(&a2);
    checks.eq(
        "first threshold m + a*a1 - a2 simplifies to",
        &LinearPoly::new(Rational::zero(), Rational::zero(), Rational::one()),
        &t1,
    );
    let t2 = LinearPoly::new(params.n.clone(), Rational::zero(), Rational::zero())
        .add(&a2.scale(&params.b))
        .sub(&a1);
    checks.eq(
        "second threshold n + b*a2 - a1 simplifies to",
        &LinearPoly::new(Rational::one(), Rational::one(), -Rational::one()),
        &t2,
    );

    // Concrete surrogate at (n, m) = (1/2, 3/4): coordinate axes at weights
    // a1 = 1/4, a2 = 1/2 plus (3/4) times a branch pairing 1 and 4 with
    // them, so the attained pairings are m = 3/4 and 3.
    let n_val = Rational::ratio(1, 2);
    let m_val = Rational::ratio(3, 4);
    let point = [n_val.clone(), m_val.clone()];
    checks.is_true(
        "the surrogate point (n, m) = (1/2, 3/4) lies in the strip",
        verify_witness(&region, &point),
    );
    let a1_val = &(&n_val + &m_val) - &Rational::one();
    let a2_val = n_val.clone();
    let delta1 = CurveGerm::from_equation("delta1", "x")?;
    let delta2 = CurveGerm::from_equation("delta2", "y")?;
    let branch = CurveGerm::from_equation("branch", "y - x^4")?;
    let omega = WeightedGerm::new(vec![(branch, m_val.clone())])?;
    let cfg = LocalConfig::new(delta1, delta2, a1_val, a2_val, omega)?;
    let lc = is_log_canonical_at_origin(&cfg.boundary(), opts)?;
    checks.is_false("surrogate pair is log canonical", lc.is_lc);

    let outcome = bound_conclusion(&cfg, &params, opts)?;
    checks.eq(
        "surrogate first threshold equals the residual multiplicity",
        &cfg.omega_mult(),
        &outcome.first.threshold,
    );
    checks.eq("surrogate first pairing", &m_val, &outcome.first.pair_mult);
    checks.is_false(
        "surrogate first disjunct strict (equality is not enough)",
        outcome.first.holds,
    );
    checks.eq(
        "surrogate second threshold 1 + n - m",
        &Rational::ratio(3, 4),
        &outcome.second.threshold,
    );
    checks.eq(
        "surrogate second pairing",
        &Rational::from_int(3),
        &outcome.second.pair_mult,
    );
    checks.is_true("six-parameter bound holds on the surrogate", outcome.holds());

    let pair = transverse_pair_conclusion(&cfg, opts)?;
    checks.is_true("transverse-pair bound holds on the surrogate", pair.holds());

    Ok(ScenarioReport {
        name: "line-conic-params".to_string(),
        anchor: "unit parameters at the satellite point of a line-conic tangency: \
                 the weight clause is the conic-pairing strip and both bound \
                 thresholds collapse to the attained pairings"
            .to_string(),
        checks: checks.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> BlowupOptions {
        BlowupOptions::default()
    }

    fn expect_by_label<'a>(report: &'a ScenarioReport, fragment: &str) -> &'a Check {
        report
            .checks
            .iter()
            .find(|c| c.label.contains(fragment))
            .unwrap_or_else(|| panic!("no check labeled with `{fragment}`"))
    }

    #[test]
    fn axis_family_rejects_bad_parameters() {
        assert!(matches!(
            axis_tangent_family(1, 2, &opts()),
            Err(ScenarioError::BadParameter { name: "m", .. })
        ));
        assert!(matches!(
            axis_tangent_family(2, 1, &opts()),
            Err(ScenarioError::BadParameter { name: "k", .. })
        ));
    }

    #[test]
    fn axis_family_smallest_instance_freezes_values() {
        let report = axis_tangent_family(2, 2, &opts()).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures());
        let threshold = expect_by_label(&report, "largest log-canonical multiple");
        assert_eq!(threshold.expected, "5/8");
        assert_eq!(threshold.actual, "5/8");
        let sharp = expect_by_label(&report, "six-parameter second threshold");
        assert_eq!(sharp.expected, "3/2");
        let pair = expect_by_label(&report, "transverse-pair second threshold");
        assert_eq!(pair.expected, "1");
    }

    #[test]
    fn axis_family_other_instances_freeze_thresholds() {
        let report = axis_tangent_family(2, 3, &opts()).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures());
        assert_eq!(
            expect_by_label(&report, "largest log-canonical multiple").actual,
            "7/12"
        );
        assert_eq!(
            expect_by_label(&report, "six-parameter second threshold").actual,
            "5/2"
        );

        let report = axis_tangent_family(3, 2, &opts()).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures());
        assert_eq!(
            expect_by_label(&report, "largest log-canonical multiple").actual,
            "7/18"
        );
    }

    #[test]
    fn axis_family_grid_passes() {
        let report = axis_tangent_family_grid(&opts()).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures());
        // Six instances, each with one threshold check, two parameter
        // checks, and seven per-sample checks for three samples.
        assert_eq!(report.checks.len(), 6 * (3 + 3 * 7));
    }

    #[test]
    fn germ_table_matches_frozen_column() {
        let report = germ_lct_table(&opts()).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures());
        let column: Vec<&str> = report.checks.iter().map(|c| c.actual.as_str()).collect();
        assert_eq!(column, vec!["1", "1", "5/6", "3/4", "2/3", "3/4"]);
    }

    #[test]
    fn fibonacci_identities_hold_through_fifty() {
        let report = fibonacci_weights(50, &opts()).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures());
        assert_eq!(expect_by_label(&report, "k = 0: line coefficient").actual, "2/3");
        assert_eq!(expect_by_label(&report, "k = 0: branch coefficient").actual, "1/3");
        assert_eq!(expect_by_label(&report, "k = 0: T = ").actual, "6");
        assert_eq!(expect_by_label(&report, "k = 0: formula value").actual, "6/7");
        assert_eq!(expect_by_label(&report, "surrogate oracle threshold").actual, "6/7");
        assert_eq!(expect_by_label(&report, "k = 1: line coefficient").actual, "3/7");
        assert_eq!(expect_by_label(&report, "k = 1: T = ").actual, "35");
        assert_eq!(expect_by_label(&report, "k = 1: formula value").actual, "35/36");
    }

    #[test]
    fn fibonacci_with_zero_cap_skips_the_second_instance() {
        let report = fibonacci_weights(0, &opts()).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures());
        assert!(report.checks.iter().all(|c| !c.label.starts_with("k = 1")));
    }

    #[test]
    fn line_conic_thresholds_collapse() {
        let report = line_conic_params(&opts()).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures());
        assert_eq!(expect_by_label(&report, "first threshold m + a*a1 - a2").actual, "m");
        assert_eq!(
            expect_by_label(&report, "second threshold n + b*a2 - a1").actual,
            "1 + n - m"
        );
        assert_eq!(expect_by_label(&report, "surrogate second pairing").actual, "3");
        let first = expect_by_label(&report, "surrogate first disjunct strict");
        assert_eq!(first.actual, "false");
    }

    #[test]
    fn registry_dispatches_and_rejects_unknown_names() {
        for name in scenario_names() {
            let report = by_name(name, &opts()).unwrap();
            assert_eq!(&report.name, name);
            assert!(report.passed(), "{name} failures: {:?}", report.failures());
        }
        assert!(matches!(
            by_name("no-such-scenario", &opts()),
            Err(ScenarioError::UnknownScenario { .. })
        ));
    }

    #[test]
    fn reports_are_byte_identical_across_runs() {
        let first = run_all(&opts()).unwrap();
        let second = run_all(&opts()).unwrap();
        let a = serde_json::to_string(&first).unwrap();
        let b = serde_json::to_string(&second).unwrap();
        assert_eq!(a, b);
        assert!(first.iter().all(|r| r.passed()));
    }
}
