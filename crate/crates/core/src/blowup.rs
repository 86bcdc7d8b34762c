//! Iterated blow-ups of plane-curve germ collections at the origin, producing
//! the exceptional-divisor tree that drives every invariant downstream.
//!
//! # Conventions
//! - One blow-up of a chart origin is covered by two standard charts: the
//!   substitution `(x, y) -> (x, x*y)` (first chart, new exceptional line
//!   `{x = 0}`, parametrized by `y`) and `(x, y) -> (x*y, y)` (second chart;
//!   the point at infinity of the exceptional line is that chart's origin).
//! - Each blow-up event is a tree node; node ids number the events in
//!   breadth-first order. At every blown-up point, children are visited in a
//!   canonical order: finite directions by coefficient-element order, then
//!   direction clusters by (degree, minimal-polynomial coefficients), then
//!   the point at infinity.
//! - Non-rational directions are "clusters": an irreducible factor of the
//!   restricted equation of degree `d >= 2` stands for `d` conjugate points.
//!   The tower is extended by one root and a single representative point is
//!   blown up; all numerical data at the conjugates is identical, so the
//!   representative carries an `orbit` multiplier instead.
//!
//! # Invariants
//! - At most two exceptional divisors pass through any point, and their local
//!   equations are the coordinate axes.
//! - `logdisc` recursion: a node's log discrepancy is `2` plus the sum of
//!   `logdisc - 1` over the earlier exceptional divisors through the blown-up
//!   point; the first blow-up has `logdisc = 2`.
//! - `ord` recursion: the order of a germ's total transform along a new
//!   exceptional divisor is the multiplicity of its proper transform at the
//!   blown-up point plus the sum of `ord` over the earlier exceptional
//!   divisors through that point.
//! - Expansion stops at a point exactly when the union of the resident
//!   proper transforms and the exceptional axes is normal crossings there:
//!   total multiplicity at most `1`, or exactly `2` with the quadratic
//!   leading form a product of two distinct lines.
//! - The proper transform of a squarefree germ stays squarefree; the engine
//!   re-checks this at every step and reports a breach as an error.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::factor::factor;
use crate::field::{CoeffField, FieldElem, FieldError, UniPoly, DEFAULT_TOWER_CAP};
use crate::germ::CurveGerm;
use crate::poly::BivarPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlowupError {
    EmptyInput,
    DepthCapExceeded { cap: u32 },
    TowerCapExceeded { cap: u32 },
    NonSquarefreeTransform { germ: usize, depth: u32 },
}

impl fmt::Display for BlowupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlowupError::EmptyInput => write!(f, "no germs to resolve"),
            BlowupError::DepthCapExceeded { cap } => {
                write!(f, "resolution did not stabilize within depth cap {cap}")
            }
            BlowupError::TowerCapExceeded { cap } => {
                write!(f, "direction field tower exceeded height cap {cap}")
            }
            BlowupError::NonSquarefreeTransform { germ, depth } => write!(
                f,
                "proper transform of germ #{germ} at depth {depth} is not squarefree"
            ),
        }
    }
}

impl std::error::Error for BlowupError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    fn poly(self, field: &CoeffField) -> BivarPoly {
        match self {
            Axis::X => BivarPoly::var_x(field.clone()),
            Axis::Y => BivarPoly::var_y(field.clone()),
        }
    }
}

/// Where a blown-up point sits on its parent exceptional line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Direction {
    /// The original point on the base surface.
    Origin,
    /// A point of the exceptional line at finite coordinate (rendered over
    /// the point's coefficient field).
    Finite(String),
    /// A Galois orbit of conjugate points with the given irreducible minimal
    /// polynomial over the parent field.
    Cluster { minpoly: String, degree: u32 },
    /// The point at infinity of the exceptional line.
    Infinity,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Origin => write!(f, "origin"),
            Direction::Finite(v) => write!(f, "direction {v}"),
            Direction::Cluster { minpoly, degree } => {
                write!(f, "cluster of {degree} conjugate directions, {minpoly} = 0")
            }
            Direction::Infinity => write!(f, "direction at infinity"),
        }
    }
}

/// One blow-up event: the exceptional divisor it creates plus the numerical
/// records attached to it.
#[derive(Clone, Debug, Serialize)]
pub struct TreeNode {
    pub id: usize,
    /// Node whose exceptional line carries the blown-up point; `None` for the
    /// first blow-up at the origin.
    pub parent: Option<usize>,
    /// Ids of the earlier exceptional divisors through the blown-up point
    /// (at most two).
    pub prior_through: Vec<usize>,
    pub depth: u32,
    /// Number of conjugate copies of this blow-up (product of cluster
    /// degrees along the way down).
    pub orbit: u64,
    pub direction: Direction,
    /// Log discrepancy of the new exceptional divisor over the base point.
    pub logdisc: u64,
    /// Multiplicity of each input germ's proper transform at the blown-up
    /// point (`0` when the transform misses the point).
    pub germ_mults: Vec<u32>,
    /// Order of each input germ's total transform along the new exceptional
    /// divisor.
    pub ords: Vec<u64>,
}

/// A stopping point at which exactly two input germs still meet: a normal
/// crossing of two smooth branches, which contributes to intersection
/// numbers but needs no further blow-up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeafCrossing {
    pub germ_a: usize,
    pub germ_b: usize,
    pub orbit: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolutionTree {
    pub nodes: Vec<TreeNode>,
    pub leaf_crossings: Vec<LeafCrossing>,
    pub germ_count: usize,
    /// Maximum site depth examined (equals the deepest node depth + 1 unless
    /// the input was already normal crossings).
    pub max_depth: u32,
}

impl ResolutionTree {
    pub fn node(&self, id: usize) -> &TreeNode {
        &self.nodes[id]
    }
}

#[derive(Clone, Copy, Debug)]
pub struct BlowupOptions {
    pub depth_cap: u32,
    pub tower_cap: u32,
}

impl Default for BlowupOptions {
    fn default() -> Self {
        BlowupOptions { depth_cap: 64, tower_cap: DEFAULT_TOWER_CAP }
    }
}

/// A chart centered at a point of interest: the resident proper transforms
/// that pass through the center, and the exceptional divisors through it
/// with their local coordinate equations.
#[derive(Clone, Debug)]
pub struct Chart {
    pub field: CoeffField,
    /// (input germ index, proper transform vanishing at the center).
    pub germs: Vec<(usize, BivarPoly)>,
    /// (creating node id, local equation) for each exceptional divisor
    /// through the center.
    pub exceptionals: Vec<(usize, Axis)>,
}

/// An infinitely-near point found on a freshly created exceptional line.
#[derive(Clone, Debug)]
pub struct InfNearPoint {
    pub direction: Direction,
    /// Number of conjugate points this entry stands for.
    pub degree: u32,
    /// The chart recentered at (a representative of) the point.
    pub chart: Chart,
}

/// Proper transform of one polynomial under one blow-up chart substitution.
/// `first_chart = true` applies `(x, y) -> (x, x*y)`, otherwise
/// `(x, y) -> (x*y, y)`; the result is divided by the new exceptional
/// coordinate raised to the multiplicity.
pub fn blow_up_origin(f: &BivarPoly, first_chart: bool) -> BivarPoly {
    let m = if f.is_zero() { 0 } else { f.multiplicity() };
    if first_chart {
        f.chart_a_transform(m)
    } else {
        f.chart_b_transform(m)
    }
}

struct Site {
    field: CoeffField,
    germs: Vec<(usize, BivarPoly)>,
    excs: Vec<(usize, Axis)>,
    orbit: u64,
    depth: u32,
    created_by: Option<usize>,
    direction: Direction,
}

impl Site {
    /// Product of everything through the site center: resident transforms
    /// and exceptional axes.
    fn crossing_poly(&self) -> BivarPoly {
        let mut h = BivarPoly::constant(self.field.clone(), self.field.one());
        for (_, g) in &self.germs {
            h = h.mul(g);
        }
        for (_, axis) in &self.excs {
            h = h.mul(&axis.poly(&self.field));
        }
        h
    }

    /// Normal-crossings test at the center.
    fn is_normal_crossing(&self) -> bool {
        let h = self.crossing_poly();
        if h.is_constant() {
            return true;
        }
        match h.multiplicity() {
            0 | 1 => true,
            2 => h.leading_form().nondegenerate_quadratic_form(),
            _ => false,
        }
    }
}

/// Decomposes the points of the new exceptional line lying on the given
/// transforms into recentered child charts. `excs` are the exceptional
/// divisors through the blown-up point (before this blow-up); `new_id` names
/// the exceptional divisor the blow-up created.
fn children_of_blowup(
    field: &CoeffField,
    transforms: &[(usize, BivarPoly, BivarPoly)],
    excs: &[(usize, Axis)],
    new_id: usize,
    tower_cap: u32,
) -> Result<Vec<InfNearPoint>, BlowupError> {
    // Finite directions keyed by coordinate; clusters keyed by minimal
    // polynomial coefficients.
    let mut finite: BTreeMap<FieldElem, Vec<(usize, BivarPoly)>> = BTreeMap::new();
    let mut clusters: BTreeMap<(usize, Vec<FieldElem>), (UniPoly, Vec<(usize, BivarPoly)>)> =
        BTreeMap::new();
    let mut at_infinity: Vec<(usize, BivarPoly)> = Vec::new();

    for (gi, fa, fb) in transforms {
        if fb.vanishes_at_origin() {
            at_infinity.push((*gi, fb.clone()));
        }
        let restriction = fa.restrict_x0();
        assert!(
            fa.is_constant() || !restriction.is_zero(),
            "proper transform contains the exceptional line"
        );
        if restriction.is_zero() || restriction.degree() == 0 {
            continue;
        }
        for (p, _) in factor(&restriction) {
            if p.degree() == 1 {
                let root = field.neg(&p.coeff(0));
                let recentered = fa.translate_y(&root);
                finite.entry(root).or_default().push((*gi, recentered));
            } else {
                let key = (p.degree(), p.coeffs().to_vec());
                clusters
                    .entry(key)
                    .or_insert_with(|| (p.clone(), Vec::new()))
                    .1
                    .push((*gi, fa.clone()));
            }
        }
    }

    let mut out = Vec::new();
    for (root, germs) in finite {
        let mut child_excs: Vec<(usize, Axis)> = Vec::new();
        if field.is_zero(&root) {
            // The old axis-y exceptional survives into the direction-0 chart.
            child_excs.extend(
                excs.iter().filter(|(_, a)| *a == Axis::Y).copied(),
            );
        }
        child_excs.push((new_id, Axis::X));
        out.push(InfNearPoint {
            direction: Direction::Finite(field.display_elem(&root)),
            degree: 1,
            chart: Chart { field: field.clone(), germs, exceptionals: child_excs },
        });
    }
    for ((_, _), (p, members)) in clusters {
        let ext = field.extend_capped(&p, tower_cap).map_err(|e| match e {
            FieldError::TowerCapExceeded { cap, .. } => {
                BlowupError::TowerCapExceeded { cap }
            }
            other => panic!("irreducible factor rejected as minimal polynomial: {other}"),
        })?;
        let theta = ext.generator();
        let germs: Vec<(usize, BivarPoly)> = members
            .iter()
            .map(|(gi, fa)| (*gi, fa.embed_into(&ext).translate_y(&theta)))
            .collect();
        out.push(InfNearPoint {
            direction: Direction::Cluster {
                minpoly: p.display(ext.gen_name()),
                degree: p.degree() as u32,
            },
            degree: p.degree() as u32,
            chart: Chart {
                field: ext,
                germs,
                exceptionals: vec![(new_id, Axis::X)],
            },
        });
    }
    if !at_infinity.is_empty() {
        let mut child_excs: Vec<(usize, Axis)> = excs
            .iter()
            .filter(|(_, a)| *a == Axis::X)
            .copied()
            .collect();
        child_excs.push((new_id, Axis::Y));
        out.push(InfNearPoint {
            direction: Direction::Infinity,
            degree: 1,
            chart: Chart {
                field: field.clone(),
                germs: at_infinity,
                exceptionals: child_excs,
            },
        });
    }
    Ok(out)
}

/// Points of the new exceptional line on the given chart's resident
/// transforms, after blowing up the chart center. Exposed for inspection;
/// [`build_tree`] drives the same decomposition.
pub fn points_on_exceptional(chart: &Chart, new_id: usize) -> Result<Vec<InfNearPoint>, BlowupError> {
    let transforms: Vec<(usize, BivarPoly, BivarPoly)> = chart
        .germs
        .iter()
        .map(|(gi, f)| (*gi, blow_up_origin(f, true), blow_up_origin(f, false)))
        .collect();
    children_of_blowup(
        &chart.field,
        &transforms,
        &chart.exceptionals,
        new_id,
        DEFAULT_TOWER_CAP,
    )
}

/// Resolves the union of the germs (plus accumulating exceptional lines) to
/// normal crossings by iterated blow-ups, recording log discrepancies and
/// total-transform orders along the way.
///
/// Germs must be squarefree and pairwise coprime (the weighted-germ
/// constructor enforces this).
pub fn build_tree(
    germs: &[CurveGerm],
    opts: &BlowupOptions,
) -> Result<ResolutionTree, BlowupError> {
    if germs.is_empty() {
        return Err(BlowupError::EmptyInput);
    }
    let field = CoeffField::rationals();
    let germ_count = germs.len();
    let root = Site {
        field: field.clone(),
        germs: germs
            .iter()
            .enumerate()
            .map(|(i, g)| (i, g.poly().clone()))
            .collect(),
        excs: Vec::new(),
        orbit: 1,
        depth: 0,
        created_by: None,
        direction: Direction::Origin,
    };

    let mut nodes: Vec<TreeNode> = Vec::new();
    let mut leaf_crossings: Vec<LeafCrossing> = Vec::new();
    let mut max_depth = 0;
    let mut queue: VecDeque<Site> = VecDeque::new();
    queue.push_back(root);

    while let Some(site) = queue.pop_front() {
        max_depth = max_depth.max(site.depth);
        if site.is_normal_crossing() {
            if site.germs.len() == 2 {
                leaf_crossings.push(LeafCrossing {
                    germ_a: site.germs[0].0,
                    germ_b: site.germs[1].0,
                    orbit: site.orbit,
                });
            }
            continue;
        }
        if site.depth >= opts.depth_cap {
            return Err(BlowupError::DepthCapExceeded { cap: opts.depth_cap });
        }

        let id = nodes.len();
        let logdisc = 2 + site
            .excs
            .iter()
            .map(|&(e, _)| nodes[e].logdisc - 1)
            .sum::<u64>();
        let mut germ_mults = vec![0u32; germ_count];
        for (gi, f) in &site.germs {
            germ_mults[*gi] = f.multiplicity();
        }
        let ords: Vec<u64> = (0..germ_count)
            .map(|g| {
                germ_mults[g] as u64
                    + site.excs.iter().map(|&(e, _)| nodes[e].ords[g]).sum::<u64>()
            })
            .collect();
        nodes.push(TreeNode {
            id,
            parent: site.created_by,
            prior_through: site.excs.iter().map(|&(e, _)| e).collect(),
            depth: site.depth,
            orbit: site.orbit,
            direction: site.direction.clone(),
            logdisc,
            germ_mults,
            ords,
        });

        let transforms: Vec<(usize, BivarPoly, BivarPoly)> = site
            .germs
            .iter()
            .map(|(gi, f)| (*gi, blow_up_origin(f, true), blow_up_origin(f, false)))
            .collect();
        for (gi, fa, fb) in &transforms {
            let check = if !fa.is_constant() { fa } else { fb };
            if !check.is_squarefree() {
                return Err(BlowupError::NonSquarefreeTransform {
                    germ: *gi,
                    depth: site.depth,
                });
            }
        }
        let children =
            children_of_blowup(&site.field, &transforms, &site.excs, id, opts.tower_cap)?;
        for child in children {
            queue.push_back(Site {
                field: child.chart.field,
                germs: child.chart.germs,
                excs: child.chart.exceptionals,
                orbit: site.orbit * child.degree as u64,
                depth: site.depth + 1,
                created_by: Some(id),
                direction: child.direction,
            });
        }
    }

    Ok(ResolutionTree { nodes, leaf_crossings, germ_count, max_depth })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn germ(label: &str, src: &str) -> CurveGerm {
        CurveGerm::from_equation(label, src).unwrap()
    }

    fn tree(srcs: &[&str]) -> ResolutionTree {
        let germs: Vec<CurveGerm> = srcs
            .iter()
            .enumerate()
            .map(|(i, s)| germ(&format!("g{i}"), s))
            .collect();
        build_tree(&germs, &BlowupOptions::default()).unwrap()
    }

    fn logdiscs(t: &ResolutionTree) -> Vec<u64> {
        t.nodes.iter().map(|n| n.logdisc).collect()
    }

    fn ords_of(t: &ResolutionTree, g: usize) -> Vec<u64> {
        t.nodes.iter().map(|n| n.ords[g]).collect()
    }

    #[test]
    fn single_step_transforms() {
        let cusp = germ("c", "y^2 - x^3");
        let t = blow_up_origin(cusp.poly(), true);
        assert_eq!(t.display("x", "y"), "-x + y^2");
        let node = germ("n", "x*y");
        assert_eq!(blow_up_origin(node.poly(), true).display("x", "y"), "y");
        assert_eq!(blow_up_origin(node.poly(), false).display("x", "y"), "x");
        let smooth = germ("s", "y - x^4");
        assert_eq!(blow_up_origin(smooth.poly(), true).display("x", "y"), "y - x^3");
    }

    #[test]
    fn exceptional_points_of_first_blowups() {
        let chart = |srcs: &[&str]| Chart {
            field: CoeffField::rationals(),
            germs: srcs
                .iter()
                .enumerate()
                .map(|(i, s)| (i, germ(&format!("g{i}"), s).poly().clone()))
                .collect(),
            exceptionals: Vec::new(),
        };
        // The cusp has the single direction 0.
        let pts = points_on_exceptional(&chart(&["y^2 - x^3"]), 0).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].direction, Direction::Finite("0".into()));
        // The node x*y separates into direction 0 and the infinity point.
        let pts = points_on_exceptional(&chart(&["x*y"]), 0).unwrap();
        assert_eq!(pts.len(), 2);
        assert_eq!(pts[0].direction, Direction::Finite("0".into()));
        assert_eq!(pts[1].direction, Direction::Infinity);
        // y^2 - 2x^2 restricts to an irreducible quadratic: one cluster.
        let pts = points_on_exceptional(&chart(&["y^2 - 2*x^2"]), 0).unwrap();
        assert_eq!(pts.len(), 1);
        assert!(matches!(pts[0].direction, Direction::Cluster { degree: 2, .. }));
    }

    #[test]
    fn cusp_resolution_matches_hand_run() {
        let t = tree(&["y^2 - x^3"]);
        assert_eq!(logdiscs(&t), vec![2, 3, 5]);
        assert_eq!(ords_of(&t, 0), vec![2, 3, 6]);
        assert_eq!(
            t.nodes.iter().map(|n| n.depth).collect::<Vec<_>>(),
            vec![0, 1, 2]
        );
        assert_eq!(t.nodes[1].prior_through, vec![0]);
        assert_eq!(t.nodes[2].prior_through, vec![0, 1]);
        assert_eq!(t.nodes[2].direction, Direction::Infinity);
        assert!(t.leaf_crossings.is_empty());
        assert!(t.nodes.iter().all(|n| n.orbit == 1));
    }

    #[test]
    fn tacnode_resolution_matches_hand_run() {
        let t = tree(&["(y - x^2)*(y + x^2)"]);
        assert_eq!(logdiscs(&t), vec![2, 3]);
        assert_eq!(ords_of(&t, 0), vec![2, 4]);
    }

    #[test]
    fn ordinary_triple_point_stops_after_one_step() {
        let t = tree(&["x^3 - y^3"]);
        assert_eq!(logdiscs(&t), vec![2]);
        assert_eq!(ords_of(&t, 0), vec![3]);
    }

    #[test]
    fn conjugate_tangents_are_tracked_as_one_cluster() {
        let t = tree(&["y^2 - 2*x^4"]);
        assert_eq!(logdiscs(&t), vec![2, 3]);
        assert_eq!(ords_of(&t, 0), vec![2, 4]);
        // Both tangent directions sqrt(2), -sqrt(2) live in one orbit; they
        // stop immediately after the second blow-up, so no extension node is
        // created, but the second node's children were examined over the
        // extended field without error.
        assert_eq!(t.max_depth, 2);
    }

    #[test]
    fn coordinate_axes_are_already_normal_crossings() {
        let t = tree(&["x", "y"]);
        assert!(t.nodes.is_empty());
        assert_eq!(
            t.leaf_crossings,
            vec![LeafCrossing { germ_a: 0, germ_b: 1, orbit: 1 }]
        );
    }

    #[test]
    fn simple_tangency_needs_two_blowups() {
        let t = tree(&["y - x^2", "y"]);
        assert_eq!(logdiscs(&t), vec![2, 3]);
        assert_eq!(ords_of(&t, 0), vec![1, 2]);
        assert_eq!(ords_of(&t, 1), vec![1, 2]);
        assert!(t.leaf_crossings.is_empty());
    }

    #[test]
    fn axis_tangent_family_table() {
        // x, y, and y - x^4: the chain of four blow-ups over the y-axis
        // tangency point.
        let t = tree(&["x", "y", "y - x^4"]);
        assert_eq!(logdiscs(&t), vec![2, 3, 4, 5]);
        assert_eq!(ords_of(&t, 0), vec![1, 1, 1, 1]);
        assert_eq!(ords_of(&t, 1), vec![1, 2, 3, 4]);
        assert_eq!(ords_of(&t, 2), vec![1, 2, 3, 4]);
    }

    #[test]
    fn two_cusp_configuration_with_axes() {
        let t = tree(&["y^2 - x^3", "y^2 - 2*x^3", "x", "y"]);
        assert_eq!(logdiscs(&t), vec![2, 3, 5]);
        assert_eq!(ords_of(&t, 0), vec![2, 3, 6]);
        assert_eq!(ords_of(&t, 1), vec![2, 3, 6]);
        assert_eq!(ords_of(&t, 2), vec![1, 1, 2]);
        assert_eq!(ords_of(&t, 3), vec![1, 2, 3]);
    }

    #[test]
    fn nodal_germ_is_normal_crossings_at_once() {
        let t = tree(&["x*y"]);
        assert!(t.nodes.is_empty());
        assert!(t.leaf_crossings.is_empty());
        let t = tree(&["(y - x)*(y + x)"]);
        assert!(t.nodes.is_empty());
    }

    #[test]
    fn depth_cap_is_enforced() {
        let germs = vec![germ("a", "y^2 - x^3")];
        let err = build_tree(&germs, &BlowupOptions { depth_cap: 2, tower_cap: 4 })
            .unwrap_err();
        assert_eq!(err, BlowupError::DepthCapExceeded { cap: 2 });
    }

    #[test]
    fn tower_cap_is_enforced() {
        // Six branches y = s*x + c*x^2 with s^2 = 2, c^3 = 3: the first
        // blow-up needs one extension for the tangent pair, and the cone of
        // three conjugate lines at that point needs a second.
        let src = "(y^2 - 2*x^2)^3 - 6*x^6*y^3 - 36*x^8*y + 9*x^12";
        let germs = vec![germ("a", src)];
        let result = build_tree(&germs, &BlowupOptions { depth_cap: 64, tower_cap: 1 });
        match result {
            Err(BlowupError::TowerCapExceeded { cap: 1 }) => {}
            other => panic!("expected tower cap error, got {other:?}"),
        }
        // With the default cap the same germ resolves: two blow-ups, the
        // second at a two-point cluster.
        let t = build_tree(&germs, &BlowupOptions::default()).unwrap();
        assert_eq!(logdiscs(&t), vec![2, 3]);
        assert_eq!(ords_of(&t, 0), vec![6, 9]);
        assert_eq!(t.nodes.iter().map(|n| n.orbit).collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn empty_input_is_an_error() {
        assert_eq!(
            build_tree(&[], &BlowupOptions::default()).unwrap_err(),
            BlowupError::EmptyInput
        );
    }
}
