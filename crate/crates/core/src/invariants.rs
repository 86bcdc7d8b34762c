//! Local invariants of weighted germ configurations at the origin:
//! intersection multiplicity, log-canonicality, and log canonical
//! thresholds, all computed exactly from the blow-up tree.
//!
//! # Conventions
//! - For a weighted divisor `D = sum_j c_j C_j` and an exceptional divisor
//!   `E` of the tree, `ord_E(D) = sum_j c_j ord_E(C_j)` and the *excess* of
//!   `E` is `ord_E(D) - (logdisc(E) - 1)`. The pair is log canonical at the
//!   origin iff every weight satisfies `c_j <= 1` and every node's excess is
//!   at most `1`.
//! - The log canonical threshold is
//!   `min(min_j 1/c_j, min_E logdisc(E) / ord_E(D))`; at the threshold the
//!   pair is still log canonical.
//! - Intersection multiplicities are computed twice, by design: through the
//!   tree (sum of products of point multiplicities over all common
//!   infinitely-near points) and through a sheared resultant. The two
//!   routes are independent and must agree; tests enforce this.
//!
//! # Invariants
//! - All arithmetic is exact; thresholds and excesses are rationals.
//! - Reports name the first binding component or tree node deterministically
//!   (components in input order first, then nodes in tree order).

use std::fmt;

use serde::Serialize;

use crate::blowup::{build_tree, BlowupError, BlowupOptions, ResolutionTree};
use crate::germ::{CurveGerm, WeightedGerm};
use crate::poly::{resultant_y, BivarPoly};
use crate::rational::Rational;

/// Shear offsets `x -> x + t*y` are tried for `t = 0, 1, 2, ...` up to this
/// bound; only finitely many offsets can fail the genericity guards, and in
/// practice the first few succeed.
const SHEAR_LIMIT: i64 = 200;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantError {
    Blowup(BlowupError),
    /// The divisor has no components with positive weight.
    AllZeroDivisor,
    /// Two germs that must not share a component do.
    NotCoprime { first: String, second: String },
    /// The fixed part of a family is already not log canonical, so no
    /// nonnegative multiple of the variable part can be added.
    FixedPartNotLc { witness: LcWitness },
    /// No shear offset within the search bound passed the genericity guards
    /// (not reachable for coprime inputs; reported rather than looping).
    ShearExhausted,
}

impl fmt::Display for InvariantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantError::Blowup(e) => write!(f, "{e}"),
            InvariantError::AllZeroDivisor => {
                write!(f, "divisor has no components with positive weight")
            }
            InvariantError::NotCoprime { first, second } => {
                write!(f, "germs `{first}` and `{second}` share a component")
            }
            InvariantError::FixedPartNotLc { witness } => {
                write!(f, "fixed part is not log canonical ({witness})")
            }
            InvariantError::ShearExhausted => {
                write!(f, "no generic shear found within the search bound")
            }
        }
    }
}

impl std::error::Error for InvariantError {}

impl From<BlowupError> for InvariantError {
    fn from(e: BlowupError) -> Self {
        InvariantError::Blowup(e)
    }
}

/// First found log-canonicality violation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LcWitness {
    /// A component weight exceeds 1.
    Component { index: usize, label: String, weight: Rational },
    /// A tree node's excess exceeds 1.
    Node { id: usize, excess: Rational },
}

impl fmt::Display for LcWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LcWitness::Component { label, weight, .. } => {
                write!(f, "component `{label}` has weight {weight} > 1")
            }
            LcWitness::Node { id, excess } => {
                write!(f, "node {id} has excess {excess} > 1")
            }
        }
    }
}

/// Per-node log-canonicality accounting.
#[derive(Clone, Debug, Serialize)]
pub struct NodeExcess {
    pub node: usize,
    pub logdisc: u64,
    /// `ord_E(D)`, the weighted order of the divisor along the node.
    pub weighted_ord: Rational,
    /// `ord_E(D) - (logdisc - 1)`; log canonical iff `<= 1`.
    pub excess: Rational,
}

#[derive(Clone, Debug, Serialize)]
pub struct LcReport {
    pub is_lc: bool,
    pub witness: Option<LcWitness>,
    pub nodes: Vec<NodeExcess>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LctValue {
    Finite(Rational),
    /// No constraint binds (cannot arise for a divisor with a positive
    /// weight, but the sentinel keeps the minimum total).
    Infinity,
}

impl LctValue {
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            LctValue::Finite(r) => Some(r),
            LctValue::Infinity => None,
        }
    }
}

/// What achieves the threshold minimum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LctBinding {
    Component { index: usize, label: String },
    Node { id: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct LctReport {
    pub lct: LctValue,
    pub binding: Option<LctBinding>,
    pub node_count: usize,
    pub resolution_depth: u32,
}

/// `ord_E(D)` for node `id` of a tree built over the divisor's components in
/// order.
fn weighted_ord(d: &WeightedGerm, tree: &ResolutionTree, id: usize) -> Rational {
    let mut acc = Rational::zero();
    for (j, (_, c)) in d.components().iter().enumerate() {
        let ord = Rational::from_int(tree.nodes[id].ords[j] as i64);
        acc = acc + c.clone() * ord;
    }
    acc
}

fn divisor_tree(d: &WeightedGerm, opts: &BlowupOptions) -> Result<ResolutionTree, InvariantError> {
    let germs: Vec<CurveGerm> = d.components().iter().map(|(g, _)| g.clone()).collect();
    Ok(build_tree(&germs, opts)?)
}

/// Log-canonicality of the pair at the origin, with the first violation
/// (components in input order, then nodes in tree order) as witness.
pub fn is_log_canonical_at_origin(
    d: &WeightedGerm,
    opts: &BlowupOptions,
) -> Result<LcReport, InvariantError> {
    if d.is_empty() {
        return Ok(LcReport { is_lc: true, witness: None, nodes: Vec::new() });
    }
    let tree = divisor_tree(d, opts)?;
    let mut witness = None;
    for (j, (germ, c)) in d.components().iter().enumerate() {
        if *c > Rational::one() {
            witness = Some(LcWitness::Component {
                index: j,
                label: germ.label().to_string(),
                weight: c.clone(),
            });
            break;
        }
    }
    let mut nodes = Vec::with_capacity(tree.nodes.len());
    for node in &tree.nodes {
        let w = weighted_ord(d, &tree, node.id);
        let excess = w.clone() - Rational::from_int(node.logdisc as i64 - 1);
        if witness.is_none() && excess > Rational::one() {
            witness = Some(LcWitness::Node { id: node.id, excess: excess.clone() });
        }
        nodes.push(NodeExcess {
            node: node.id,
            logdisc: node.logdisc,
            weighted_ord: w,
            excess,
        });
    }
    Ok(LcReport { is_lc: witness.is_none(), witness, nodes })
}

/// Log canonical threshold of the divisor at the origin. The pair
/// `lct * D` is itself log canonical; any larger multiple is not.
pub fn lct_at_origin(
    d: &WeightedGerm,
    opts: &BlowupOptions,
) -> Result<LctReport, InvariantError> {
    if d.is_empty() {
        return Err(InvariantError::AllZeroDivisor);
    }
    let tree = divisor_tree(d, opts)?;
    let mut best: Option<(Rational, LctBinding)> = None;
    let mut consider = |cand: Rational, binding: LctBinding| {
        let better = match &best {
            None => true,
            Some((cur, _)) => cand < *cur,
        };
        if better {
            best = Some((cand, binding));
        }
    };
    for (j, (germ, c)) in d.components().iter().enumerate() {
        consider(
            c.recip().expect("weights are positive after normalization"),
            LctBinding::Component { index: j, label: germ.label().to_string() },
        );
    }
    for node in &tree.nodes {
        let denom = weighted_ord(d, &tree, node.id);
        debug_assert!(denom.is_positive());
        consider(
            Rational::from_int(node.logdisc as i64).checked_div(&denom).unwrap(),
            LctBinding::Node { id: node.id },
        );
    }
    let (lct, binding) = best.expect("divisor has at least one component");
    Ok(LctReport {
        lct: LctValue::Finite(lct),
        binding: Some(binding),
        node_count: tree.nodes.len(),
        resolution_depth: tree.max_depth,
    })
}

/// Largest `t` such that `fixed + t * var` is log canonical at the origin:
/// `min(1, min_E (logdisc(E) - ord_E(fixed)) / ord_E(var))`. Errors if the
/// fixed part alone is already not log canonical.
pub fn lct_threshold_in_family(
    fixed: &WeightedGerm,
    var: &CurveGerm,
    opts: &BlowupOptions,
) -> Result<Rational, InvariantError> {
    for (g, _) in fixed.components() {
        if !g.poly().is_coprime_with(var.poly()) {
            return Err(InvariantError::NotCoprime {
                first: g.label().to_string(),
                second: var.label().to_string(),
            });
        }
    }
    let mut germs: Vec<CurveGerm> =
        fixed.components().iter().map(|(g, _)| g.clone()).collect();
    let var_index = germs.len();
    germs.push(var.clone());
    let tree = build_tree(&germs, opts)?;

    // The joint tree is a log resolution of the union, so it is a valid
    // place to test the fixed part alone.
    for (j, (germ, c)) in fixed.components().iter().enumerate() {
        if *c > Rational::one() {
            return Err(InvariantError::FixedPartNotLc {
                witness: LcWitness::Component {
                    index: j,
                    label: germ.label().to_string(),
                    weight: c.clone(),
                },
            });
        }
    }
    let fixed_ord = |id: usize| -> Rational {
        let mut acc = Rational::zero();
        for (j, (_, c)) in fixed.components().iter().enumerate() {
            acc = acc + c.clone() * Rational::from_int(tree.nodes[id].ords[j] as i64);
        }
        acc
    };
    for node in &tree.nodes {
        let excess =
            fixed_ord(node.id) - Rational::from_int(node.logdisc as i64 - 1);
        if excess > Rational::one() {
            return Err(InvariantError::FixedPartNotLc {
                witness: LcWitness::Node { id: node.id, excess },
            });
        }
    }

    let mut t = Rational::one();
    for node in &tree.nodes {
        let ord_var = tree.nodes[node.id].ords[var_index];
        if ord_var == 0 {
            continue;
        }
        let headroom = Rational::from_int(node.logdisc as i64) - fixed_ord(node.id);
        let cand = headroom
            .checked_div(&Rational::from_int(ord_var as i64))
            .expect("positive order");
        t = t.min(cand);
    }
    Ok(t)
}

/// Intersection multiplicity of two coprime germs at the origin, by summing
/// `m_P(f) * m_P(g)` over all common infinitely-near points of the blow-up
/// tree (including the normal-crossing stopping points).
pub fn intersection_multiplicity(
    f: &CurveGerm,
    g: &CurveGerm,
    opts: &BlowupOptions,
) -> Result<u64, InvariantError> {
    if !f.poly().is_coprime_with(g.poly()) {
        return Err(InvariantError::NotCoprime {
            first: f.label().to_string(),
            second: g.label().to_string(),
        });
    }
    let tree = build_tree(&[f.clone(), g.clone()], opts)?;
    Ok(noether_pairing(&tree, 0, 1))
}

/// The tree-side pairing for germs `a` and `b` of an existing resolution.
pub fn noether_pairing(tree: &ResolutionTree, a: usize, b: usize) -> u64 {
    let mut total: u64 = 0;
    for node in &tree.nodes {
        total += node.orbit * node.germ_mults[a] as u64 * node.germ_mults[b] as u64;
    }
    for crossing in &tree.leaf_crossings {
        if (crossing.germ_a, crossing.germ_b) == (a, b)
            || (crossing.germ_a, crossing.germ_b) == (b, a)
        {
            total += crossing.orbit;
        }
    }
    total
}

/// Intersection multiplicity through the independent resultant route: shear
/// `x -> x + t*y` until the leading `y`-coefficients of both polynomials are
/// nonzero constants and the two restrictions to `{x = 0}` share at most the
/// root `y = 0`; then the answer is the order of vanishing at `x = 0` of the
/// resultant in `y`.
pub fn intersection_multiplicity_resultant(
    f: &CurveGerm,
    g: &CurveGerm,
) -> Result<u64, InvariantError> {
    if !f.poly().is_coprime_with(g.poly()) {
        return Err(InvariantError::NotCoprime {
            first: f.label().to_string(),
            second: g.label().to_string(),
        });
    }
    let field = f.poly().field().clone();
    for t in 0..=SHEAR_LIMIT {
        let te = field.from_int(t);
        let ft = f.poly().shear_x_by_y(&te);
        let gt = g.poly().shear_x_by_y(&te);
        if !shear_is_generic(&ft) || !shear_is_generic(&gt) {
            continue;
        }
        let u = ft.restrict_x0();
        let v = gt.restrict_x0();
        let common = crate::field::UniPoly::gcd(&u, &v);
        let monomial = common
            .coeffs()
            .iter()
            .take(common.coeffs().len().saturating_sub(1))
            .all(|c| field.is_zero(c));
        if !monomial {
            continue;
        }
        let r = resultant_y(&ft, &gt);
        assert!(!r.is_zero(), "resultant of coprime germs vanished");
        return Ok(r.valuation().expect("nonzero resultant") as u64);
    }
    Err(InvariantError::ShearExhausted)
}

/// The leading `y`-coefficient must be a nonzero constant, so that no
/// intersection escapes to infinity in the `y`-direction over `x = 0`.
fn shear_is_generic(p: &BivarPoly) -> bool {
    if p.degree_y() != p.total_degree() {
        return false;
    }
    let lead = p.y_coeff_list().pop().expect("nonzero polynomial");
    !lead.is_zero() && lead.degree() == 0
}

/// `mult_P(Omega . Delta) = sum_j c_j * I(C_j, Delta)` for a weighted germ
/// and a germ sharing no component with it.
pub fn pair_mult(
    omega: &WeightedGerm,
    delta: &CurveGerm,
    opts: &BlowupOptions,
) -> Result<Rational, InvariantError> {
    if omega.is_empty() {
        return Ok(Rational::zero());
    }
    for (g, _) in omega.components() {
        if !g.poly().is_coprime_with(delta.poly()) {
            return Err(InvariantError::NotCoprime {
                first: g.label().to_string(),
                second: delta.label().to_string(),
            });
        }
    }
    let mut germs: Vec<CurveGerm> = vec![delta.clone()];
    germs.extend(omega.components().iter().map(|(g, _)| g.clone()));
    let tree = build_tree(&germs, opts)?;
    let mut acc = Rational::zero();
    for (j, (_, c)) in omega.components().iter().enumerate() {
        let pairing = noether_pairing(&tree, 0, j + 1);
        acc = acc + c.clone() * Rational::from_int(pairing as i64);
    }
    Ok(acc)
}
