//! Local inequality predicates for weighted germ configurations anchored on
//! two transverse smooth branches.
//!
//! Each predicate has two halves: a hypothesis checker and a conclusion
//! checker. The conclusion checkers evaluate their inequalities exactly via
//! [`pair_mult`] and report each side of the disjunction separately, so
//! callers can see which branch carried the bound.
//!
//! # Conventions
//!
//! - All pairs are tested at the origin of the affine plane.
//! - A configuration consists of two smooth transverse branch germs
//!   `delta1`, `delta2` with non-negative weights `a1`, `a2`, plus a
//!   residual weighted germ `omega` sharing no component with either
//!   branch. The boundary divisor is `a1*delta1 + a2*delta2 + omega`.
//! - Disjunction reports always list the `delta1` inequality first.
//! - A failed hypothesis is an error ([`TheoremError::HypothesisNotMet`]),
//!   never a silent vacuous pass: a conclusion report is only produced when
//!   the predicate genuinely applies, so campaign tallies can count vacuous
//!   cases separately from falsified ones.
//!
//! # Invariants
//!
//! - Conclusion checkers require the boundary pair to be *not* log
//!   canonical at the origin (checked against the resolution oracle) before
//!   evaluating any inequality.
//! - All arithmetic is exact rational arithmetic; comparisons are exact.

use serde::Serialize;
use std::fmt;

use crate::blowup::BlowupOptions;
use crate::germ::{are_transverse_at_origin, CurveGerm, GermError, WeightedGerm};
use crate::invariants::{is_log_canonical_at_origin, pair_mult, InvariantError};
use crate::rational::Rational;

/// Errors raised by configuration validation and predicate evaluation.
#[derive(Clone, Debug, PartialEq)]
pub enum TheoremError {
    /// A germ-level validation failed (shared components, bad weights, ...).
    Germ(GermError),
    /// The resolution oracle failed (depth cap, non-coprime input, ...).
    Invariant(InvariantError),
    /// A branch germ is singular at the origin.
    NotSmooth { label: String },
    /// The two branch germs are not transverse at the origin.
    NotTransverse { first: String, second: String },
    /// A weight or parameter that must be non-negative is negative.
    NegativeValue { name: String, value: Rational },
    /// The integer parameter of the integer-bound predicate is below 3.
    IntegerBoundTooSmall { n: i64 },
    /// A hypothesis of the predicate fails on this input; the conclusion is
    /// not evaluated. Distinct from a conclusion that evaluates to false.
    HypothesisNotMet { reason: String },
    /// The dominance check was queried outside its region of applicability.
    NotApplicable { reason: String },
}

impl fmt::Display for TheoremError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoremError::Germ(e) => write!(f, "{e}"),
            TheoremError::Invariant(e) => write!(f, "{e}"),
            TheoremError::NotSmooth { label } => {
                write!(f, "branch `{label}` is singular at the origin")
            }
            TheoremError::NotTransverse { first, second } => {
                write!(
                    f,
                    "branches `{first}` and `{second}` are not transverse at the origin"
                )
            }
            TheoremError::NegativeValue { name, value } => {
                write!(f, "`{name}` must be non-negative, got {value}")
            }
            TheoremError::IntegerBoundTooSmall { n } => {
                write!(f, "integer bound parameter must be at least 3, got {n}")
            }
            TheoremError::HypothesisNotMet { reason } => {
                write!(f, "hypothesis not met: {reason}")
            }
            TheoremError::NotApplicable { reason } => {
                write!(f, "not applicable: {reason}")
            }
        }
    }
}

impl std::error::Error for TheoremError {}

impl From<GermError> for TheoremError {
    fn from(e: GermError) -> Self {
        TheoremError::Germ(e)
    }
}

impl From<InvariantError> for TheoremError {
    fn from(e: InvariantError) -> Self {
        TheoremError::Invariant(e)
    }
}

/// A weighted germ configuration on two transverse smooth branches.
///
/// Validation at construction: both branches smooth at the origin and
/// transverse there, weights non-negative, and the residual part coprime
/// with both branches.
#[derive(Clone, Debug)]
pub struct LocalConfig {
    delta1: CurveGerm,
    delta2: CurveGerm,
    a1: Rational,
    a2: Rational,
    omega: WeightedGerm,
}

impl LocalConfig {
    pub fn new(
        delta1: CurveGerm,
        delta2: CurveGerm,
        a1: Rational,
        a2: Rational,
        omega: WeightedGerm,
    ) -> Result<Self, TheoremError> {
        if !delta1.is_smooth_at_origin() {
            return Err(TheoremError::NotSmooth { label: delta1.label().to_string() });
        }
        if !delta2.is_smooth_at_origin() {
            return Err(TheoremError::NotSmooth { label: delta2.label().to_string() });
        }
        if !are_transverse_at_origin(&delta1, &delta2) {
            return Err(TheoremError::NotTransverse {
                first: delta1.label().to_string(),
                second: delta2.label().to_string(),
            });
        }
        for (name, value) in [("a1", &a1), ("a2", &a2)] {
            if value.is_negative() {
                return Err(TheoremError::NegativeValue {
                    name: name.to_string(),
                    value: value.clone(),
                });
            }
        }
        // Coprimality of every part with every other, including the residual
        // part against both branches, via the weighted-germ validator.
        // Weight 1 placeholders so zero weights cannot mask a shared
        // component.
        let mut probe: Vec<(CurveGerm, Rational)> = vec![
            (delta1.clone(), Rational::one()),
            (delta2.clone(), Rational::one()),
        ];
        for (g, _) in omega.components() {
            probe.push((g.clone(), Rational::one()));
        }
        WeightedGerm::new(probe)?;
        Ok(LocalConfig { delta1, delta2, a1, a2, omega })
    }

    pub fn delta1(&self) -> &CurveGerm {
        &self.delta1
    }

    pub fn delta2(&self) -> &CurveGerm {
        &self.delta2
    }

    pub fn a1(&self) -> &Rational {
        &self.a1
    }

    pub fn a2(&self) -> &Rational {
        &self.a2
    }

    pub fn omega(&self) -> &WeightedGerm {
        &self.omega
    }

    /// The boundary divisor `a1*delta1 + a2*delta2 + omega`.
    pub fn boundary(&self) -> WeightedGerm {
        let mut parts: Vec<(CurveGerm, Rational)> = vec![
            (self.delta1.clone(), self.a1.clone()),
            (self.delta2.clone(), self.a2.clone()),
        ];
        for (g, c) in self.omega.components() {
            parts.push((g.clone(), c.clone()));
        }
        WeightedGerm::new(parts).expect("validated at construction")
    }

    /// `mult_P(omega)`: the weighted multiplicity of the residual part.
    pub fn omega_mult(&self) -> Rational {
        self.omega.total_mult()
    }
}

/// Parameters of the six-clause bound predicate, all non-negative.
///
/// `a` and `b` play the role of the two self-intersection magnitudes and
/// `m`, `n` the two fixed local intersection bounds in the inequality
/// system; `alpha` and `beta` weight the two branch coefficients.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub a: Rational,
    pub b: Rational,
    pub m: Rational,
    pub n: Rational,
}

impl BoundParams {
    fn check_non_negative(&self) -> Result<(), TheoremError> {
        let fields = [
            ("alpha", &self.alpha),
            ("beta", &self.beta),
            ("a", &self.a),
            ("b", &self.b),
            ("m", &self.m),
            ("n", &self.n),
        ];
        for (name, value) in fields {
            if value.is_negative() {
                return Err(TheoremError::NegativeValue {
                    name: name.to_string(),
                    value: value.clone(),
                });
            }
        }
        Ok(())
    }
}

/// Truth values of the seven parameter clauses, in statement order. The
/// seventh clause is a disjunction; both sides are reported.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClauseReport {
    /// `alpha*a1 + beta*a2 <= 1`
    pub c1: bool,
    /// `a*(b - 1) >= 1`
    pub c2: bool,
    /// `m <= 1`
    pub c3: bool,
    /// `n <= 1`
    pub c4: bool,
    /// `alpha*(a + m - 1) >= a^2*(b + n - 1)*beta`
    pub c5: bool,
    /// `alpha*(1 - m) + a*beta >= a`
    pub c6: bool,
    /// first side of clause 7: `2m + a*n <= 2`
    pub c7_first: bool,
    /// second side of clause 7:
    /// `alpha*(b + 1 - m*b - n) + beta*(a + 1 - a*n - m) >= a*b - 1`
    pub c7_second: bool,
}

impl ClauseReport {
    /// Clause 7 is the disjunction of its two sides.
    pub fn c7(&self) -> bool {
        self.c7_first || self.c7_second
    }

    pub fn all_hold(&self) -> bool {
        self.c1 && self.c2 && self.c3 && self.c4 && self.c5 && self.c6 && self.c7()
    }

    /// Names of failed clauses, for diagnostics.
    pub fn failed(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        for (name, ok) in [
            ("c1", self.c1),
            ("c2", self.c2),
            ("c3", self.c3),
            ("c4", self.c4),
            ("c5", self.c5),
            ("c6", self.c6),
            ("c7", self.c7()),
        ] {
            if !ok {
                out.push(name);
            }
        }
        out
    }
}

/// One side of a two-sided multiplicity bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Disjunct {
    /// `mult_P(omega . delta_i)`, exactly.
    pub pair_mult: Rational,
    /// The bound it is compared against.
    pub threshold: Rational,
    /// Whether `pair_mult > threshold` (strict).
    pub holds: bool,
}

/// Outcome of a disjunctive conclusion; the `delta1` side is listed first.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DisjunctionReport {
    pub first: Disjunct,
    pub second: Disjunct,
}

impl DisjunctionReport {
    pub fn holds(&self) -> bool {
        self.first.holds || self.second.holds
    }
}

/// Outcome of the single-branch adjunction bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AdjunctionReport {
    /// `mult_P(omega . delta)`, exactly.
    pub pair_mult: Rational,
    /// Whether `pair_mult > 1` (strict).
    pub holds: bool,
}

/// Truth values of the five claimed consequences of membership in the
/// dominance region, evaluated at one rational point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegionCheck {
    /// `a1 <= 1/2`
    pub a1_at_most_half: bool,
    /// `a2 <= 1`
    pub a2_at_most_one: bool,
    /// `m <= 1`
    pub m_at_most_one: bool,
    /// `2*(1 - a2) >= 2*a1 - a2`
    pub first_dominates: bool,
    /// `2*(1 - a1) >= (2n-2)/(n+1)*a1 + 2/(n+1)*a2`, as claimed
    pub second_dominates: bool,
}

impl RegionCheck {
    pub fn all_hold(&self) -> bool {
        self.a1_at_most_half
            && self.a2_at_most_one
            && self.m_at_most_one
            && self.first_dominates
            && self.second_dominates
    }
}

fn require_non_negative(name: &str, value: &Rational) -> Result<(), TheoremError> {
    if value.is_negative() {
        return Err(TheoremError::NegativeValue {
            name: name.to_string(),
            value: value.clone(),
        });
    }
    Ok(())
}

fn require_not_lc(boundary: &WeightedGerm, opts: &BlowupOptions) -> Result<(), TheoremError> {
    let report = is_log_canonical_at_origin(boundary, opts)?;
    if report.is_lc {
        return Err(TheoremError::HypothesisNotMet {
            reason: "the pair is log canonical at the origin".to_string(),
        });
    }
    Ok(())
}

/// Adjunction bound for a single smooth branch: if `a <= 1` and the pair
/// `a*delta + omega` is not log canonical at the origin, then
/// `mult_P(omega . delta) > 1`.
///
/// The report is expected to hold whenever this returns `Ok`; returning it
/// rather than asserting lets campaign code count and display the margin.
pub fn adjunction_conclusion(
    delta: &CurveGerm,
    a: &Rational,
    omega: &WeightedGerm,
    opts: &BlowupOptions,
) -> Result<AdjunctionReport, TheoremError> {
    if !delta.is_smooth_at_origin() {
        return Err(TheoremError::NotSmooth { label: delta.label().to_string() });
    }
    require_non_negative("a", a)?;
    if *a > Rational::one() {
        return Err(TheoremError::HypothesisNotMet {
            reason: format!("branch coefficient a = {a} exceeds 1"),
        });
    }
    let boundary = omega.with_component(delta.clone(), a.clone())?;
    require_not_lc(&boundary, opts)?;
    let pm = pair_mult(omega, delta, opts)?;
    let holds = pm > Rational::one();
    Ok(AdjunctionReport { pair_mult: pm, holds })
}

/// Weight bound of the integer-parameter predicate:
/// `(2n-2)/(n+1)*a1 + 2/(n+1)*a2 <= 1` for an integer `n >= 3`.
pub fn integer_bound_hypothesis(
    a1: &Rational,
    a2: &Rational,
    n: i64,
) -> Result<bool, TheoremError> {
    if n < 3 {
        return Err(TheoremError::IntegerBoundTooSmall { n });
    }
    require_non_negative("a1", a1)?;
    require_non_negative("a2", a2)?;
    let np1 = Rational::from_int(n + 1);
    let lhs = &(&Rational::from_int(2 * n - 2) * a1) + &(&Rational::from_int(2) * a2);
    Ok(lhs <= np1)
}

/// Integer-parameter bound: under [`integer_bound_hypothesis`] and a
/// non-log-canonical boundary pair,
/// `mult_P(omega . delta1) > 2*a1 - a2` or
/// `mult_P(omega . delta2) > n/(n-1)*a2 - a1`.
pub fn integer_bound_conclusion(
    cfg: &LocalConfig,
    n: i64,
    opts: &BlowupOptions,
) -> Result<DisjunctionReport, TheoremError> {
    if !integer_bound_hypothesis(&cfg.a1, &cfg.a2, n)? {
        return Err(TheoremError::HypothesisNotMet {
            reason: format!(
                "weight bound (2n-2)/(n+1)*a1 + 2/(n+1)*a2 <= 1 fails for n = {n}"
            ),
        });
    }
    require_not_lc(&cfg.boundary(), opts)?;
    let two = Rational::from_int(2);
    let t1 = &(&two * &cfg.a1) - &cfg.a2;
    let t2 = &(&Rational::ratio(n, n - 1) * &cfg.a2) - &cfg.a1;
    disjunction(cfg, t1, t2, opts)
}

/// The seven parameter clauses of the six-parameter bound predicate,
/// evaluated exactly. Returns the per-clause breakdown; combine with
/// [`ClauseReport::all_hold`].
pub fn bound_hypotheses(
    p: &BoundParams,
    a1: &Rational,
    a2: &Rational,
) -> Result<ClauseReport, TheoremError> {
    p.check_non_negative()?;
    require_non_negative("a1", a1)?;
    require_non_negative("a2", a2)?;
    let one = Rational::one();
    let two = Rational::from_int(2);
    let c1 = &(&p.alpha * a1) + &(&p.beta * a2) <= one;
    let c2 = &p.a * &(&p.b - &one) >= one;
    let c3 = p.m <= one;
    let c4 = p.n <= one;
    let c5 = {
        let lhs = &p.alpha * &(&(&p.a + &p.m) - &one);
        let rhs = &(&(&p.a * &p.a) * &(&(&p.b + &p.n) - &one)) * &p.beta;
        lhs >= rhs
    };
    let c6 = &(&p.alpha * &(&one - &p.m)) + &(&p.a * &p.beta) >= p.a;
    let c7_first = &(&two * &p.m) + &(&p.a * &p.n) <= two;
    let c7_second = {
        let left = &(&(&p.b + &one) - &(&p.m * &p.b)) - &p.n;
        let right = &(&(&p.a + &one) - &(&p.a * &p.n)) - &p.m;
        let lhs = &(&p.alpha * &left) + &(&p.beta * &right);
        let rhs = &(&p.a * &p.b) - &one;
        lhs >= rhs
    };
    Ok(ClauseReport { c1, c2, c3, c4, c5, c6, c7_first, c7_second })
}

/// Six-parameter bound: under [`bound_hypotheses`] and a non-log-canonical
/// boundary pair, `mult_P(omega . delta1) > m + a*a1 - a2` or
/// `mult_P(omega . delta2) > n + b*a2 - a1`.
pub fn bound_conclusion(
    cfg: &LocalConfig,
    p: &BoundParams,
    opts: &BlowupOptions,
) -> Result<DisjunctionReport, TheoremError> {
    let clauses = bound_hypotheses(p, &cfg.a1, &cfg.a2)?;
    if !clauses.all_hold() {
        return Err(TheoremError::HypothesisNotMet {
            reason: format!("parameter clauses failed: {}", clauses.failed().join(", ")),
        });
    }
    require_not_lc(&cfg.boundary(), opts)?;
    let t1 = &(&p.m + &(&p.a * &cfg.a1)) - &cfg.a2;
    let t2 = &(&p.n + &(&p.b * &cfg.a2)) - &cfg.a1;
    disjunction(cfg, t1, t2, opts)
}

/// Transverse-pair bound: if `mult_P(omega) <= 1` and the boundary pair is
/// not log canonical at the origin, then
/// `mult_P(omega . delta1) > 2*(1 - a2)` or
/// `mult_P(omega . delta2) > 2*(1 - a1)`.
pub fn transverse_pair_conclusion(
    cfg: &LocalConfig,
    opts: &BlowupOptions,
) -> Result<DisjunctionReport, TheoremError> {
    let m = cfg.omega_mult();
    if m > Rational::one() {
        return Err(TheoremError::HypothesisNotMet {
            reason: format!("residual multiplicity m = {m} exceeds 1"),
        });
    }
    require_not_lc(&cfg.boundary(), opts)?;
    let two = Rational::from_int(2);
    let one = Rational::one();
    let t1 = &two * &(&one - &cfg.a2);
    let t2 = &two * &(&one - &cfg.a1);
    disjunction(cfg, t1, t2, opts)
}

fn disjunction(
    cfg: &LocalConfig,
    t1: Rational,
    t2: Rational,
    opts: &BlowupOptions,
) -> Result<DisjunctionReport, TheoremError> {
    let p1 = pair_mult(&cfg.omega, &cfg.delta1, opts)?;
    let p2 = pair_mult(&cfg.omega, &cfg.delta2, opts)?;
    let first = Disjunct { holds: p1 > t1, pair_mult: p1, threshold: t1 };
    let second = Disjunct { holds: p2 > t2, pair_mult: p2, threshold: t2 };
    Ok(DisjunctionReport { first, second })
}

/// Consequence check for the region where the integer-parameter bound says
/// something beyond the trivial estimate `mult_P(omega . delta_i) >= m`:
///
/// ```text
/// 2*a1 - a2 >= m,   n/(n-1)*a2 - a1 >= m,   (2n-2)/(n+1)*a1 + 2/(n+1)*a2 <= 1
/// ```
///
/// At a point of this region the claimed consequences are `a1 <= 1/2`,
/// `a2 <= 1`, `m <= 1`, and that the transverse-pair thresholds dominate:
/// `2*(1 - a2) >= 2*a1 - a2` and
/// `2*(1 - a1) >= (2n-2)/(n+1)*a1 + 2/(n+1)*a2`. Each claim is evaluated
/// exactly and reported separately; none is assumed.
///
/// Errors with [`TheoremError::NotApplicable`] outside the region.
pub fn dominance_region_check(
    a1: &Rational,
    a2: &Rational,
    m: &Rational,
    n: i64,
) -> Result<RegionCheck, TheoremError> {
    if n < 3 {
        return Err(TheoremError::IntegerBoundTooSmall { n });
    }
    require_non_negative("a1", a1)?;
    require_non_negative("a2", a2)?;
    require_non_negative("m", m)?;
    let one = Rational::one();
    let two = Rational::from_int(2);
    let first_constraint = &(&two * a1) - a2 >= *m;
    let second_constraint = &(&Rational::ratio(n, n - 1) * a2) - a1 >= *m;
    let weight_combination =
        &(&Rational::ratio(2 * n - 2, n + 1) * a1) + &(&Rational::ratio(2, n + 1) * a2);
    let third_constraint = weight_combination <= one;
    if !(first_constraint && second_constraint && third_constraint) {
        return Err(TheoremError::NotApplicable {
            reason: format!(
                "point (a1, a2, m) = ({a1}, {a2}, {m}) lies outside the dominance \
                 region for n = {n}"
            ),
        });
    }
    Ok(RegionCheck {
        a1_at_most_half: *a1 <= Rational::ratio(1, 2),
        a2_at_most_one: *a2 <= one,
        m_at_most_one: *m <= one,
        first_dominates: &two * &(&one - a2) >= &(&two * a1) - a2,
        second_dominates: &two * &(&one - a1) >= weight_combination,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn germ(label: &str, src: &str) -> CurveGerm {
        CurveGerm::from_equation(label, src).unwrap()
    }

    fn weighted(parts: &[(&str, i64, i64)]) -> WeightedGerm {
        let comps = parts
            .iter()
            .enumerate()
            .map(|(i, &(src, p, q))| {
                (germ(&format!("g{i}"), src), Rational::ratio(p, q))
            })
            .collect();
        WeightedGerm::new(comps).unwrap()
    }

    fn opts() -> BlowupOptions {
        BlowupOptions::default()
    }

    fn rat(p: i64, q: i64) -> Rational {
        Rational::ratio(p, q)
    }

    fn axes_config(a1: Rational, a2: Rational, omega: WeightedGerm) -> LocalConfig {
        LocalConfig::new(germ("d1", "x"), germ("d2", "y"), a1, a2, omega).unwrap()
    }

    #[test]
    fn adjunction_bound_holds_on_non_lc_pairs() {
        // Coefficient above 1 alone breaks log canonicity.
        let r = adjunction_conclusion(
            &germ("d", "x"),
            &Rational::zero(),
            &weighted(&[("y", 3, 2)]),
            &opts(),
        )
        .unwrap();
        assert!(r.holds);
        assert_eq!(r.pair_mult, rat(3, 2));

        // A full-weight cusp against a transverse smooth branch.
        let r = adjunction_conclusion(
            &germ("d", "y"),
            &rat(1, 2),
            &weighted(&[("y^2 - x^3", 1, 1)]),
            &opts(),
        )
        .unwrap();
        assert!(r.holds);
        assert_eq!(r.pair_mult, rat(3, 1));

        // Two extra lines through the origin on top of a full branch.
        let r = adjunction_conclusion(
            &germ("d", "y"),
            &Rational::one(),
            &weighted(&[("y - x", 2, 3), ("y + x", 2, 3)]),
            &opts(),
        )
        .unwrap();
        assert!(r.holds);
        assert_eq!(r.pair_mult, rat(4, 3));
    }

    #[test]
    fn adjunction_requires_a_non_lc_pair_and_small_coefficient() {
        let lc = adjunction_conclusion(
            &germ("d", "y"),
            &rat(1, 2),
            &weighted(&[("y - x", 1, 2)]),
            &opts(),
        );
        assert!(matches!(lc, Err(TheoremError::HypothesisNotMet { .. })));

        let too_big = adjunction_conclusion(
            &germ("d", "y"),
            &rat(3, 2),
            &weighted(&[("y - x", 1, 2)]),
            &opts(),
        );
        assert!(matches!(too_big, Err(TheoremError::HypothesisNotMet { .. })));

        let singular = adjunction_conclusion(
            &germ("d", "y^2 - x^3"),
            &Rational::one(),
            &weighted(&[("y - x", 1, 2)]),
            &opts(),
        );
        assert!(matches!(singular, Err(TheoremError::NotSmooth { .. })));
    }

    #[test]
    fn integer_bound_hypothesis_matches_hand_arithmetic() {
        assert!(integer_bound_hypothesis(&rat(1, 2), &rat(1, 2), 3).unwrap());
        assert!(!integer_bound_hypothesis(&rat(1, 1), &rat(1, 1), 3).unwrap());
        assert!(integer_bound_hypothesis(&Rational::zero(), &Rational::zero(), 100).unwrap());
        assert!(matches!(
            integer_bound_hypothesis(&rat(1, 2), &rat(1, 2), 2),
            Err(TheoremError::IntegerBoundTooSmall { n: 2 })
        ));
    }

    #[test]
    fn integer_bound_conclusion_on_tangent_line_family() {
        // Axis weights 1/2 each, residual 41/64 * (y - x^4); the boundary is
        // not log canonical since 41/64 exceeds the family threshold 5/8.
        let cfg = axes_config(rat(1, 2), rat(1, 2), weighted(&[("y - x^4", 41, 64)]));
        let r = integer_bound_conclusion(&cfg, 3, &opts()).unwrap();
        assert!(r.first.holds);
        assert_eq!(r.first.pair_mult, rat(41, 64));
        assert_eq!(r.first.threshold, rat(1, 2));
        assert_eq!(r.second.threshold, rat(1, 4));
        assert!(r.holds());
    }

    #[test]
    fn integer_bound_conclusion_on_heavy_line() {
        let cfg = axes_config(rat(1, 4), rat(1, 4), weighted(&[("y - x", 5, 4)]));
        let r = integer_bound_conclusion(&cfg, 3, &opts()).unwrap();
        assert!(r.first.holds);
        assert_eq!(r.first.pair_mult, rat(5, 4));
        assert_eq!(r.first.threshold, rat(1, 4));
    }

    #[test]
    fn integer_bound_conclusion_rejects_lc_pairs() {
        let cfg = axes_config(rat(1, 4), rat(1, 4), weighted(&[("y - x", 1, 2)]));
        let r = integer_bound_conclusion(&cfg, 3, &opts());
        assert!(matches!(r, Err(TheoremError::HypothesisNotMet { .. })));
    }

    #[test]
    fn clause_breakdown_matches_hand_checks() {
        // Tangent-line family parameters: every clause holds, three of them
        // with equality.
        let p = BoundParams {
            alpha: rat(1, 1),
            beta: rat(1, 1),
            a: rat(1, 3),
            b: rat(4, 1),
            m: rat(1, 1),
            n: rat(0, 1),
        };
        let r = bound_hypotheses(&p, &rat(1, 2), &rat(1, 2)).unwrap();
        assert!(r.all_hold(), "failed clauses: {:?}", r.failed());

        // Line-and-conic parameters.
        let p = BoundParams {
            alpha: rat(1, 1),
            beta: rat(1, 1),
            a: rat(1, 1),
            b: rat(2, 1),
            m: rat(1, 1),
            n: rat(0, 1),
        };
        let r = bound_hypotheses(&p, &rat(0, 1), &rat(1, 2)).unwrap();
        assert!(r.all_hold(), "failed clauses: {:?}", r.failed());

        // b = 1 kills the second clause and nothing else.
        let p = BoundParams {
            alpha: rat(1, 1),
            beta: rat(1, 1),
            a: rat(1, 1),
            b: rat(1, 1),
            m: rat(1, 1),
            n: rat(1, 1),
        };
        let r = bound_hypotheses(&p, &rat(0, 1), &rat(0, 1)).unwrap();
        assert!(!r.c2);
        assert!(!r.all_hold());
        assert_eq!(r.failed(), vec!["c2"]);
    }

    #[test]
    fn bound_conclusion_on_tangent_line_family() {
        let cfg = axes_config(rat(1, 2), rat(1, 2), weighted(&[("y - x^4", 41, 64)]));
        let p = BoundParams {
            alpha: rat(1, 1),
            beta: rat(1, 1),
            a: rat(1, 3),
            b: rat(4, 1),
            m: rat(1, 1),
            n: rat(0, 1),
        };
        let r = bound_conclusion(&cfg, &p, &opts()).unwrap();
        assert_eq!(r.first.threshold, rat(2, 3));
        assert_eq!(r.second.threshold, rat(3, 2));
        assert_eq!(r.first.pair_mult, rat(41, 64));
        assert_eq!(r.second.pair_mult, rat(41, 16));
        assert!(!r.first.holds);
        assert!(r.second.holds);
        assert!(r.holds());
    }

    #[test]
    fn bound_conclusion_rejects_failed_clauses() {
        let cfg = axes_config(rat(1, 2), rat(1, 2), weighted(&[("y - x^4", 41, 64)]));
        let p = BoundParams {
            alpha: rat(1, 1),
            beta: rat(1, 1),
            a: rat(1, 1),
            b: rat(1, 1),
            m: rat(1, 1),
            n: rat(1, 1),
        };
        match bound_conclusion(&cfg, &p, &opts()) {
            Err(TheoremError::HypothesisNotMet { reason }) => {
                assert!(reason.contains("c2"), "reason: {reason}");
            }
            other => panic!("expected clause failure, got {other:?}"),
        }
    }

    #[test]
    fn transverse_pair_conclusion_on_two_cusps() {
        // Quarter-weight cusps with half-weight axes: residual multiplicity
        // is exactly 1 and the pair is not log canonical.
        let omega = weighted(&[("y^2 - x^3", 1, 4), ("y^2 - 2*x^3", 1, 4)]);
        let cfg = axes_config(rat(1, 2), rat(1, 2), omega);
        assert_eq!(cfg.omega_mult(), rat(1, 1));
        let r = transverse_pair_conclusion(&cfg, &opts()).unwrap();
        assert_eq!(r.first.threshold, rat(1, 1));
        assert_eq!(r.second.threshold, rat(1, 1));
        assert_eq!(r.first.pair_mult, rat(1, 1));
        assert_eq!(r.second.pair_mult, rat(3, 2));
        assert!(!r.first.holds);
        assert!(r.second.holds);
    }

    #[test]
    fn transverse_pair_conclusion_on_tangent_line_family() {
        let cfg = axes_config(rat(1, 2), rat(1, 2), weighted(&[("y - x^4", 41, 64)]));
        let r = transverse_pair_conclusion(&cfg, &opts()).unwrap();
        assert_eq!(r.first.threshold, rat(1, 1));
        assert_eq!(r.second.threshold, rat(1, 1));
        assert!(!r.first.holds);
        assert!(r.second.holds);
    }

    #[test]
    fn transverse_pair_conclusion_with_full_axes() {
        // Full-weight axes leave zero slack: any residual through the origin
        // breaks log canonicity, and both thresholds drop to zero.
        let cfg = axes_config(rat(1, 1), rat(1, 1), weighted(&[("y - x", 1, 2)]));
        let r = transverse_pair_conclusion(&cfg, &opts()).unwrap();
        assert_eq!(r.first.threshold, rat(0, 1));
        assert!(r.first.holds);
        assert!(r.second.holds);
    }

    #[test]
    fn transverse_pair_conclusion_rejects_large_residual_multiplicity() {
        let omega = weighted(&[("y^2 - x^3", 1, 2), ("y^2 - 2*x^3", 1, 2)]);
        let cfg = axes_config(Rational::zero(), Rational::zero(), omega);
        match transverse_pair_conclusion(&cfg, &opts()) {
            Err(TheoremError::HypothesisNotMet { reason }) => {
                assert!(reason.contains("m = 2"), "reason: {reason}");
            }
            other => panic!("expected residual multiplicity gate, got {other:?}"),
        }
    }

    #[test]
    fn transverse_pair_conclusion_rejects_lc_pairs() {
        let cfg = axes_config(rat(1, 2), rat(1, 2), weighted(&[("y - x", 1, 2)]));
        let r = transverse_pair_conclusion(&cfg, &opts());
        assert!(matches!(r, Err(TheoremError::HypothesisNotMet { .. })));
    }

    #[test]
    fn dominance_region_flags_match_hand_checks() {
        let r = dominance_region_check(&rat(1, 2), &rat(3, 4), &rat(1, 4), 3).unwrap();
        assert!(r.all_hold());

        let r = dominance_region_check(&Rational::zero(), &Rational::zero(), &Rational::zero(), 3)
            .unwrap();
        assert!(r.all_hold());

        let outside = dominance_region_check(&rat(1, 1), &rat(1, 1), &Rational::zero(), 3);
        assert!(matches!(outside, Err(TheoremError::NotApplicable { .. })));
    }

    #[test]
    fn dominance_region_admits_points_violating_two_claims() {
        // (a1, a2, m) = (3/4, 1/2, 0) lies in the region for n = 3, yet has
        // a1 > 1/2, and the claimed second dominance fails there:
        // 2*(1 - 3/4) = 1/2 < 1 = (2n-2)/(n+1)*a1 + 2/(n+1)*a2.
        let r = dominance_region_check(&rat(3, 4), &rat(1, 2), &Rational::zero(), 3).unwrap();
        assert!(!r.a1_at_most_half);
        assert!(!r.second_dominates);
        assert!(r.a2_at_most_one);
        assert!(r.m_at_most_one);
        assert!(r.first_dominates);
        assert!(!r.all_hold());
    }

    #[test]
    fn config_validation_rejects_bad_inputs() {
        let singular = LocalConfig::new(
            germ("d1", "y^2 - x^3"),
            germ("d2", "y"),
            rat(1, 2),
            rat(1, 2),
            WeightedGerm::empty(),
        );
        assert!(matches!(singular, Err(TheoremError::NotSmooth { .. })));

        let tangent = LocalConfig::new(
            germ("d1", "y"),
            germ("d2", "y - x^2"),
            rat(1, 2),
            rat(1, 2),
            WeightedGerm::empty(),
        );
        assert!(matches!(tangent, Err(TheoremError::NotTransverse { .. })));

        let shared = LocalConfig::new(
            germ("d1", "x"),
            germ("d2", "y"),
            rat(1, 2),
            rat(1, 2),
            weighted(&[("y", 1, 4)]),
        );
        assert!(matches!(shared, Err(TheoremError::Germ(_))));

        let negative = LocalConfig::new(
            germ("d1", "x"),
            germ("d2", "y"),
            rat(-1, 2),
            rat(1, 2),
            WeightedGerm::empty(),
        );
        assert!(matches!(negative, Err(TheoremError::NegativeValue { .. })));
    }
}
