//! Report documents: one JSON schema per subcommand, plus the builders that
//! produce them and the renderer for terminal output.
//!
//! # Conventions
//!
//! Every machine-readable report is a single JSON object with a `kind` tag
//! matching the subcommand, the options the run used, an echo of the parsed
//! input, and a `result` section. Rationals serialize as `"p/q"` strings,
//! never decimals. Identical inputs produce byte-identical JSON: maps are
//! ordered, struct fields serialize in declaration order, and nothing
//! depends on wall time or thread scheduling.
//!
//! # Invariants
//!
//! * The builders here are the only way reports are produced, so the `check`
//!   subcommand re-verifies any report by re-running the same builder on the
//!   embedded input and comparing structurally.
//! * `assertion_failure` is `None` exactly when every property the report
//!   asserts actually held; the process exit code is derived from it.

use germlct::config::dump_local_config;
use germlct::fuzz::run_campaign;
use germlct::invariants::{LcReport, LctBinding, LctValue};
use germlct::linfeas::AuditEntry;
use germlct::scenarios::{by_name, ScenarioError};
use germlct::theorems::{
    adjunction_conclusion, bound_conclusion, bound_hypotheses, integer_bound_conclusion,
    integer_bound_hypothesis, transverse_pair_conclusion, ClauseReport, Disjunct,
    DisjunctionReport,
};
use germlct::{
    audit_proof_chains, intersection_multiplicity, is_log_canonical_at_origin, lct_at_origin,
    lct_threshold_in_family, run_all_scenarios, scenario_names, BlowupOptions, BoundParams,
    CampaignReport, ConfigFile, GenSpec, Rational, ScenarioReport, TheoremError,
};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

use crate::error::CliError;

/// Run options echoed into every report so a checker can reproduce it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Options {
    pub depth_cap: u32,
}

impl Default for Options {
    fn default() -> Self {
        Options { depth_cap: BlowupOptions::default().depth_cap }
    }
}

impl Options {
    pub fn with_depth_cap(depth_cap: Option<u32>) -> Self {
        Options { depth_cap: depth_cap.unwrap_or(BlowupOptions::default().depth_cap) }
    }

    fn blowup(&self) -> BlowupOptions {
        BlowupOptions { depth_cap: self.depth_cap, ..BlowupOptions::default() }
    }
}

/// Scenario selection echo: a registry name, or `"all"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioInput {
    pub scenario: String,
}

#[derive(Serialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum LctResult {
    /// Threshold of the divisor itself at the origin.
    Origin {
        lct: Rational,
        binding: Option<LctBinding>,
        node_count: usize,
        resolution_depth: u32,
    },
    /// Largest multiple of the family curve that keeps the pair log
    /// canonical on top of the fixed divisor.
    Family { curve: String, threshold: Rational },
}

#[derive(Serialize)]
pub struct ImultResult {
    pub first: String,
    pub second: String,
    pub multiplicity: u64,
}

/// One predicate outcome: either evaluated against the oracle, or skipped
/// because a hypothesis fails on this input.
#[derive(Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum AdjunctionOutcome {
    Asserted { pair_mult: Rational, holds: bool },
    NotApplicable { reason: String },
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum DisjunctionOutcome {
    Asserted { first: Disjunct, second: Disjunct, holds: bool },
    NotApplicable { reason: String },
}

#[derive(Serialize)]
pub struct IntegerParameterOutcome {
    pub n: i64,
    /// The weight bound `(2n-2)/(n+1)*a1 + 2/(n+1)*a2 <= 1`.
    pub admissible: bool,
    pub conclusion: DisjunctionOutcome,
}

#[derive(Serialize)]
pub struct SixParameterOutcome {
    pub params: BoundParams,
    pub clauses: ClauseReport,
    pub all_clauses_hold: bool,
    pub conclusion: DisjunctionOutcome,
}

#[derive(Serialize)]
pub struct TheoremResult {
    pub log_canonical: bool,
    pub omega_mult: Rational,
    /// Canonical echo of the two-branch configuration under test.
    pub configuration: ConfigFile,
    pub adjunction_first: AdjunctionOutcome,
    pub adjunction_second: AdjunctionOutcome,
    pub transverse_pair: DisjunctionOutcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub integer_parameter: Option<IntegerParameterOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub six_parameter: Option<SixParameterOutcome>,
}

#[derive(Serialize)]
pub struct AuditResult {
    pub total: usize,
    pub passed: usize,
    pub all_passed: bool,
    pub entries: Vec<AuditEntry>,
}

#[derive(Serialize)]
pub struct ScenarioResult {
    pub all_passed: bool,
    pub reports: Vec<ScenarioReport>,
}

/// The top-level report document, tagged by subcommand.
#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Report {
    Lct { options: Options, input: ConfigFile, result: LctResult },
    Loglc { options: Options, input: ConfigFile, result: LcReport },
    Imult { options: Options, input: ConfigFile, result: ImultResult },
    Theorem { options: Options, input: ConfigFile, result: TheoremResult },
    Audit { result: AuditResult },
    Scenario { options: Options, input: ScenarioInput, result: ScenarioResult },
    Fuzz { options: Options, input: GenSpec, result: CampaignReport },
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(self).expect("reports always serialize");
        text.push('\n');
        text
    }

    /// The first asserted property that failed, if any. Verdicts (a pair
    /// being log canonical or not) are not failures; only asserted
    /// properties count.
    pub fn assertion_failure(&self) -> Option<String> {
        match self {
            Report::Lct { .. } | Report::Loglc { .. } | Report::Imult { .. } => None,
            Report::Theorem { result, .. } => {
                let mut failed = Vec::new();
                for (name, outcome) in [
                    ("adjunction (first branch)", &result.adjunction_first),
                    ("adjunction (second branch)", &result.adjunction_second),
                ] {
                    if let AdjunctionOutcome::Asserted { holds: false, .. } = outcome {
                        failed.push(name.to_string());
                    }
                }
                let disjunctions = [
                    ("transverse pair", Some(&result.transverse_pair)),
                    (
                        "integer parameter",
                        result.integer_parameter.as_ref().map(|o| &o.conclusion),
                    ),
                    (
                        "six parameter",
                        result.six_parameter.as_ref().map(|o| &o.conclusion),
                    ),
                ];
                for (name, outcome) in disjunctions {
                    if let Some(DisjunctionOutcome::Asserted { holds: false, .. }) = outcome {
                        failed.push(name.to_string());
                    }
                }
                if failed.is_empty() {
                    None
                } else {
                    Some(format!("asserted conclusions failed: {}", failed.join(", ")))
                }
            }
            Report::Audit { result } => {
                if result.all_passed {
                    None
                } else {
                    let names: Vec<String> = result
                        .entries
                        .iter()
                        .filter(|e| !e.passed)
                        .map(|e| format!("{}/{}", e.group, e.name))
                        .collect();
                    Some(format!("audit entries failed: {}", names.join(", ")))
                }
            }
            Report::Scenario { result, .. } => {
                if result.all_passed {
                    None
                } else {
                    let mut names = Vec::new();
                    for report in &result.reports {
                        for check in report.failures() {
                            names.push(format!("{}: {}", report.name, check.label));
                        }
                    }
                    Some(format!("scenario checks failed: {}", names.join("; ")))
                }
            }
            Report::Fuzz { result, .. } => {
                if result.passed() {
                    None
                } else if !result.failures.is_empty() {
                    Some(format!(
                        "campaign recorded {} property failure(s); the report carries re-runnable configuration dumps",
                        result.failures.len()
                    ))
                } else {
                    Some(format!(
                        "campaign coverage too low: {} non-vacuous transverse-pair assertions required",
                        result.coverage_required
                    ))
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

pub fn build_lct(input: ConfigFile, options: Options) -> Result<Report, CliError> {
    let resolved = input.resolve()?;
    if resolved.divisor.is_empty() {
        return Err(CliError::Semantic("empty divisor".to_string()));
    }
    let opts = options.blowup();
    let result = match &resolved.family {
        Some(curve) => {
            let threshold = lct_threshold_in_family(&resolved.divisor, curve, &opts)?;
            LctResult::Family { curve: curve.label().to_string(), threshold }
        }
        None => {
            let report = lct_at_origin(&resolved.divisor, &opts)?;
            let lct = match report.lct {
                LctValue::Finite(r) => r,
                LctValue::Infinity => {
                    return Err(CliError::Semantic(
                        "threshold is unbounded for this divisor".to_string(),
                    ))
                }
            };
            LctResult::Origin {
                lct,
                binding: report.binding,
                node_count: report.node_count,
                resolution_depth: report.resolution_depth,
            }
        }
    };
    Ok(Report::Lct { options, input, result })
}

pub fn build_loglc(input: ConfigFile, options: Options) -> Result<Report, CliError> {
    let resolved = input.resolve()?;
    let result = is_log_canonical_at_origin(&resolved.divisor, &options.blowup())?;
    Ok(Report::Loglc { options, input, result })
}

pub fn build_imult(input: ConfigFile, options: Options) -> Result<Report, CliError> {
    let resolved = input.resolve()?;
    if input.divisor.len() != 2 {
        return Err(CliError::Semantic(format!(
            "intersection multiplicity needs exactly two divisor entries, got {}",
            input.divisor.len()
        )));
    }
    let first = &input.divisor[0].curve;
    let second = &input.divisor[1].curve;
    let f = &resolved.curves[first];
    let g = &resolved.curves[second];
    let multiplicity = intersection_multiplicity(f, g, &options.blowup())?;
    let result =
        ImultResult { first: first.clone(), second: second.clone(), multiplicity };
    Ok(Report::Imult { options, input, result })
}

/// Hypothesis rejections leave the predicate unasserted; anything else is a
/// real error.
fn disjunction_outcome(
    res: Result<DisjunctionReport, TheoremError>,
) -> Result<DisjunctionOutcome, CliError> {
    match res {
        Ok(r) => {
            let holds = r.holds();
            Ok(DisjunctionOutcome::Asserted { first: r.first, second: r.second, holds })
        }
        Err(
            e @ (TheoremError::HypothesisNotMet { .. } | TheoremError::NotApplicable { .. }),
        ) => Ok(DisjunctionOutcome::NotApplicable { reason: e.to_string() }),
        Err(e) => Err(e.into()),
    }
}

pub fn build_theorem(input: ConfigFile, options: Options) -> Result<Report, CliError> {
    let resolved = input.resolve()?;
    let cfg = resolved.local_config()?;
    let opts = options.blowup();

    let lc_report = is_log_canonical_at_origin(&cfg.boundary(), &opts)?;
    let one = Rational::one();

    let sides = [
        (cfg.delta1(), cfg.a1(), cfg.delta2(), cfg.a2()),
        (cfg.delta2(), cfg.a2(), cfg.delta1(), cfg.a1()),
    ];
    let mut adjunction = Vec::with_capacity(2);
    for (delta, a, other, other_a) in sides {
        if *a > one {
            adjunction.push(AdjunctionOutcome::NotApplicable {
                reason: format!("branch coefficient a = {a} exceeds 1"),
            });
            continue;
        }
        let rest = cfg.omega().with_component(other.clone(), other_a.clone())?;
        adjunction.push(match adjunction_conclusion(delta, a, &rest, &opts) {
            Ok(r) => AdjunctionOutcome::Asserted { pair_mult: r.pair_mult, holds: r.holds },
            Err(
                e @ (TheoremError::HypothesisNotMet { .. }
                | TheoremError::NotApplicable { .. }),
            ) => AdjunctionOutcome::NotApplicable { reason: e.to_string() },
            Err(e) => return Err(e.into()),
        });
    }
    let adjunction_second = adjunction.pop().expect("two sides evaluated");
    let adjunction_first = adjunction.pop().expect("two sides evaluated");

    let transverse_pair = disjunction_outcome(transverse_pair_conclusion(&cfg, &opts))?;

    let integer_parameter = match resolved.integer_bounds {
        Some(n) => {
            let admissible = integer_bound_hypothesis(cfg.a1(), cfg.a2(), n)?;
            let conclusion = disjunction_outcome(integer_bound_conclusion(&cfg, n, &opts))?;
            Some(IntegerParameterOutcome { n, admissible, conclusion })
        }
        None => None,
    };

    let six_parameter = match &resolved.bounds {
        Some(params) => {
            let clauses = bound_hypotheses(params, cfg.a1(), cfg.a2())?;
            let all_clauses_hold = clauses.all_hold();
            let conclusion = disjunction_outcome(bound_conclusion(&cfg, params, &opts))?;
            Some(SixParameterOutcome {
                params: params.clone(),
                clauses,
                all_clauses_hold,
                conclusion,
            })
        }
        None => None,
    };

    let result = TheoremResult {
        log_canonical: lc_report.is_lc,
        omega_mult: cfg.omega_mult(),
        configuration: dump_local_config(&cfg),
        adjunction_first,
        adjunction_second,
        transverse_pair,
        integer_parameter,
        six_parameter,
    };
    Ok(Report::Theorem { options, input, result })
}

pub fn build_audit() -> Report {
    let audit = audit_proof_chains();
    let total = audit.entries.len();
    let passed = audit.entries.iter().filter(|e| e.passed).count();
    let all_passed = audit.all_passed();
    Report::Audit {
        result: AuditResult { total, passed, all_passed, entries: audit.entries },
    }
}

pub fn build_scenario(input: ScenarioInput, options: Options) -> Result<Report, CliError> {
    let opts = options.blowup();
    let reports = if input.scenario == "all" {
        run_all_scenarios(&opts)?
    } else {
        vec![by_name(&input.scenario, &opts).map_err(|e| match e {
            ScenarioError::UnknownScenario { name } => CliError::Semantic(format!(
                "unknown scenario `{name}`; available: all, {}",
                scenario_names().join(", ")
            )),
            other => other.into(),
        })?]
    };
    let all_passed = reports.iter().all(|r| r.passed());
    Ok(Report::Scenario { options, input, result: ScenarioResult { all_passed, reports } })
}

pub fn build_fuzz(input: GenSpec, options: Options) -> Report {
    let result = run_campaign(&input, &options.blowup());
    Report::Fuzz { options, input, result }
}

// ---------------------------------------------------------------------------
// Re-verification
// ---------------------------------------------------------------------------

fn section<T: for<'de> Deserialize<'de>>(
    value: &serde_json::Value,
    key: &str,
) -> Result<T, CliError> {
    let field = value
        .get(key)
        .ok_or_else(|| CliError::Semantic(format!("report is missing its `{key}` section")))?;
    serde_json::from_value(field.clone())
        .map_err(|e| CliError::Semantic(format!("report `{key}` section is malformed: {e}")))
}

/// Rebuild the report a stored document claims to be, from its own embedded
/// input and options. The caller compares the two structurally.
pub fn recompute(stored: &serde_json::Value) -> Result<Report, CliError> {
    let kind = stored
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or_else(|| CliError::Semantic("report has no `kind` tag".to_string()))?;
    match kind {
        "lct" => build_lct(section(stored, "input")?, section(stored, "options")?),
        "loglc" => build_loglc(section(stored, "input")?, section(stored, "options")?),
        "imult" => build_imult(section(stored, "input")?, section(stored, "options")?),
        "theorem" => build_theorem(section(stored, "input")?, section(stored, "options")?),
        "audit" => Ok(build_audit()),
        "scenario" => build_scenario(section(stored, "input")?, section(stored, "options")?),
        "fuzz" => Ok(build_fuzz(section(stored, "input")?, section(stored, "options")?)),
        other => Err(CliError::Semantic(format!("unknown report kind `{other}`"))),
    }
}

// ---------------------------------------------------------------------------
// Terminal rendering
// ---------------------------------------------------------------------------

fn render_binding(binding: &Option<LctBinding>) -> String {
    match binding {
        Some(LctBinding::Node { id }) => format!("node {id}"),
        Some(LctBinding::Component { index, label }) => {
            format!("component `{label}` (index {index})")
        }
        None => "none".to_string(),
    }
}

fn render_disjunct(side: &str, d: &Disjunct) -> String {
    let rel = if d.holds { ">" } else { "<=" };
    format!("{side} side: pair multiplicity {} {rel} threshold {}", d.pair_mult, d.threshold)
}

fn render_disjunction(out: &mut String, name: &str, outcome: &DisjunctionOutcome) {
    match outcome {
        DisjunctionOutcome::Asserted { first, second, holds } => {
            let verdict = if *holds { "holds" } else { "FAILS" };
            let _ = writeln!(out, "{name}: {verdict}");
            let _ = writeln!(out, "  {}", render_disjunct("first", first));
            let _ = writeln!(out, "  {}", render_disjunct("second", second));
        }
        DisjunctionOutcome::NotApplicable { reason } => {
            let _ = writeln!(out, "{name}: not applicable ({reason})");
        }
    }
}

/// Human-readable rendering of any report, used when `--json` is absent.
pub fn render_human(report: &Report) -> String {
    let mut out = String::new();
    match report {
        Report::Lct { result, .. } => match result {
            LctResult::Origin { lct, binding, node_count, resolution_depth } => {
                let _ = writeln!(out, "lct = {lct}");
                let _ = writeln!(out, "binding: {}", render_binding(binding));
                let _ = writeln!(
                    out,
                    "resolution depth: {resolution_depth} ({node_count} tree nodes)"
                );
            }
            LctResult::Family { curve, threshold } => {
                let _ = writeln!(out, "threshold = {threshold}");
                let _ = writeln!(out, "family curve: `{curve}`");
            }
        },
        Report::Loglc { result, .. } => {
            let verdict = if result.is_lc { "yes" } else { "no" };
            let _ = writeln!(out, "log canonical: {verdict}");
            if let Some(witness) = &result.witness {
                let _ = writeln!(out, "witness: {witness}");
            }
            let _ = writeln!(out, "nodes examined: {}", result.nodes.len());
        }
        Report::Imult { result, .. } => {
            let _ = writeln!(out, "curves: `{}`, `{}`", result.first, result.second);
            let _ = writeln!(out, "intersection multiplicity = {}", result.multiplicity);
        }
        Report::Theorem { result, .. } => {
            let verdict = if result.log_canonical { "yes" } else { "no" };
            let _ = writeln!(out, "boundary log canonical: {verdict}");
            let _ = writeln!(out, "residual multiplicity = {}", result.omega_mult);
            for (name, outcome) in [
                ("adjunction, first branch", &result.adjunction_first),
                ("adjunction, second branch", &result.adjunction_second),
            ] {
                match outcome {
                    AdjunctionOutcome::Asserted { pair_mult, holds } => {
                        let rel = if *holds { ">" } else { "<=" };
                        let verdict = if *holds { "holds" } else { "FAILS" };
                        let _ = writeln!(
                            out,
                            "{name}: pair multiplicity {pair_mult} {rel} 1 — {verdict}"
                        );
                    }
                    AdjunctionOutcome::NotApplicable { reason } => {
                        let _ = writeln!(out, "{name}: not applicable ({reason})");
                    }
                }
            }
            render_disjunction(&mut out, "transverse pair", &result.transverse_pair);
            if let Some(ip) = &result.integer_parameter {
                let adm = if ip.admissible { "admissible" } else { "not admissible" };
                let _ = writeln!(out, "integer parameter n = {} ({adm})", ip.n);
                render_disjunction(&mut out, "integer-parameter bound", &ip.conclusion);
            }
            if let Some(sp) = &result.six_parameter {
                let clauses = if sp.all_clauses_hold {
                    "all clauses hold".to_string()
                } else {
                    format!("clauses failed: {}", sp.clauses.failed().join(", "))
                };
                let _ = writeln!(out, "six-parameter tuple: {clauses}");
                render_disjunction(&mut out, "six-parameter bound", &sp.conclusion);
            }
        }
        Report::Audit { result } => {
            for entry in &result.entries {
                let mark = if entry.passed { "ok " } else { "FAIL" };
                let expected = if entry.expect_infeasible { "infeasible" } else { "feasible" };
                let _ = writeln!(
                    out,
                    "[{mark}] {}/{} — expected {expected}, evidence verified: {}, order independent: {}",
                    entry.group, entry.name, entry.evidence_verified, entry.order_independent
                );
            }
            let _ = writeln!(
                out,
                "{} of {} systems passed; all passed: {}",
                result.passed, result.total, result.all_passed
            );
        }
        Report::Scenario { result, .. } => {
            for report in &result.reports {
                let _ = writeln!(out, "scenario: {} ({})", report.name, report.anchor);
                for check in &report.checks {
                    let mark = if check.passed { "ok " } else { "FAIL" };
                    let _ = writeln!(
                        out,
                        "  [{mark}] {}: expected {}, got {}",
                        check.label, check.expected, check.actual
                    );
                }
            }
            let checks: usize = result.reports.iter().map(|r| r.checks.len()).sum();
            let _ = writeln!(
                out,
                "{} scenario(s), {} check(s), all passed: {}",
                result.reports.len(),
                checks,
                result.all_passed
            );
        }
        Report::Fuzz { result, .. } => {
            let _ = writeln!(
                out,
                "seed {}, {} configuration(s): {} log canonical, {} not",
                result.spec.seed, result.generated, result.lc, result.not_lc
            );
            for (predicate, tally) in &result.tallies {
                let _ = writeln!(
                    out,
                    "{predicate}: {} asserted, {} vacuous",
                    tally.asserted, tally.vacuous
                );
            }
            let coverage = if result.coverage_ok { "met" } else { "NOT met" };
            let _ = writeln!(
                out,
                "coverage: {} non-vacuous transverse-pair assertions required — {coverage}",
                result.coverage_required
            );
            if result.failures.is_empty() {
                let _ = writeln!(out, "failures: none");
            } else {
                for failure in &result.failures {
                    let _ = writeln!(
                        out,
                        "FAILURE at index {} ({}): {}",
                        failure.index, failure.predicate, failure.detail
                    );
                }
            }
        }
    }
    out
}
