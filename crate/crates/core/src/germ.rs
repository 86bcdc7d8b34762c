//! Curve germs at the origin and nonnegatively weighted combinations of them.
//!
//! # Conventions
//! - A germ is a nonzero squarefree polynomial with rational coefficients
//!   vanishing at the origin; it represents the reduced local curve it cuts
//!   out. Labels are free-form strings used in reports and error messages.
//! - A weighted germ is a formal sum `sum_j c_j * C_j` with `c_j >= 0`; terms
//!   with zero weight are dropped at construction.
//!
//! # Invariants
//! - Components of a weighted germ are pairwise coprime: no two share a curve
//!   component. (Weights on the same curve must be merged by the caller; this
//!   keeps multiplicity bookkeeping linear in the components.)
//! - All polynomials here live over the plain rationals; field extensions
//!   appear only inside resolution computations.

use std::fmt;

use crate::parse::{parse_poly_xy, ParseError};
use crate::poly::BivarPoly;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GermError {
    ZeroPolynomial { label: String },
    NotThroughOrigin { label: String },
    NotSquarefree { label: String },
    NotRationalCoefficients { label: String },
    NegativeWeight { label: String, weight: Rational },
    SharedComponent { first: String, second: String },
    Parse(ParseError),
}

impl fmt::Display for GermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GermError::ZeroPolynomial { label } => {
                write!(f, "germ `{label}` is the zero polynomial")
            }
            GermError::NotThroughOrigin { label } => {
                write!(f, "germ `{label}` does not pass through the origin")
            }
            GermError::NotSquarefree { label } => {
                write!(f, "germ `{label}` has a repeated component")
            }
            GermError::NotRationalCoefficients { label } => {
                write!(f, "germ `{label}` must have rational coefficients")
            }
            GermError::NegativeWeight { label, weight } => {
                write!(f, "component `{label}` has negative weight {weight}")
            }
            GermError::SharedComponent { first, second } => {
                write!(f, "components `{first}` and `{second}` share a curve component")
            }
            GermError::Parse(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for GermError {}

impl From<ParseError> for GermError {
    fn from(e: ParseError) -> Self {
        GermError::Parse(e)
    }
}

/// A reduced plane-curve germ at the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveGerm {
    label: String,
    poly: BivarPoly,
}

impl CurveGerm {
    pub fn new(label: impl Into<String>, poly: BivarPoly) -> Result<Self, GermError> {
        let label = label.into();
        if !poly.field().is_rationals() {
            return Err(GermError::NotRationalCoefficients { label });
        }
        if poly.is_zero() {
            return Err(GermError::ZeroPolynomial { label });
        }
        if !poly.vanishes_at_origin() {
            return Err(GermError::NotThroughOrigin { label });
        }
        if !poly.is_squarefree() {
            return Err(GermError::NotSquarefree { label });
        }
        Ok(CurveGerm { label, poly })
    }

    pub fn from_equation(label: impl Into<String>, equation: &str) -> Result<Self, GermError> {
        Self::new(label, parse_poly_xy(equation)?)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn poly(&self) -> &BivarPoly {
        &self.poly
    }

    pub fn mult_at_origin(&self) -> u32 {
        self.poly.multiplicity()
    }

    pub fn is_smooth_at_origin(&self) -> bool {
        self.mult_at_origin() == 1
    }
}

/// True iff both germs are smooth at the origin and their tangent lines
/// there are distinct.
pub fn are_transverse_at_origin(a: &CurveGerm, b: &CurveGerm) -> bool {
    if !a.is_smooth_at_origin() || !b.is_smooth_at_origin() {
        return false;
    }
    let la = a.poly.leading_form();
    let lb = b.poly.leading_form();
    let field = la.field().clone();
    // Tangent lines p*x + q*y and r*x + s*y are distinct iff p*s - q*r != 0.
    let det = field.sub(
        &field.mul(&la.coeff(1, 0), &lb.coeff(0, 1)),
        &field.mul(&la.coeff(0, 1), &lb.coeff(1, 0)),
    );
    !field.is_zero(&det)
}

/// A nonnegative rational combination of pairwise coprime curve germs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGerm {
    components: Vec<(CurveGerm, Rational)>,
}

impl WeightedGerm {
    pub fn new(components: Vec<(CurveGerm, Rational)>) -> Result<Self, GermError> {
        for (germ, weight) in &components {
            if weight.is_negative() {
                return Err(GermError::NegativeWeight {
                    label: germ.label().to_string(),
                    weight: weight.clone(),
                });
            }
        }
        let components: Vec<_> = components
            .into_iter()
            .filter(|(_, w)| !w.is_zero())
            .collect();
        for i in 0..components.len() {
            for j in (i + 1)..components.len() {
                let (a, b) = (&components[i].0, &components[j].0);
                if !a.poly().is_coprime_with(b.poly()) {
                    return Err(GermError::SharedComponent {
                        first: a.label().to_string(),
                        second: b.label().to_string(),
                    });
                }
            }
        }
        Ok(WeightedGerm { components })
    }

    pub fn empty() -> Self {
        WeightedGerm { components: Vec::new() }
    }

    pub fn components(&self) -> &[(CurveGerm, Rational)] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Multiplicity of the weighted divisor at the origin:
    /// `sum_j c_j * mult_0(C_j)`.
    pub fn total_mult(&self) -> Rational {
        let mut acc = Rational::zero();
        for (germ, weight) in &self.components {
            acc = acc + weight.clone() * Rational::from_int(germ.mult_at_origin() as i64);
        }
        acc
    }

    /// Multiplies every weight by `t >= 0`.
    pub fn scale(&self, t: &Rational) -> Result<Self, GermError> {
        if t.is_negative() {
            return Err(GermError::NegativeWeight {
                label: "<scale>".to_string(),
                weight: t.clone(),
            });
        }
        let scaled: Vec<_> = self
            .components
            .iter()
            .map(|(g, w)| (g.clone(), w.clone() * t.clone()))
            .filter(|(_, w)| !w.is_zero())
            .collect();
        Ok(WeightedGerm { components: scaled })
    }

    /// Adds one more weighted component, revalidating coprimality.
    pub fn with_component(&self, germ: CurveGerm, weight: Rational) -> Result<Self, GermError> {
        let mut components = self.components.clone();
        components.push((germ, weight));
        Self::new(components)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn germ(label: &str, src: &str) -> CurveGerm {
        CurveGerm::from_equation(label, src).unwrap()
    }

    #[test]
    fn multiplicity_and_smoothness() {
        assert_eq!(germ("cusp", "y^2 - x^3").mult_at_origin(), 2);
        assert!(!germ("cusp", "y^2 - x^3").is_smooth_at_origin());
        assert!(germ("axis", "x").is_smooth_at_origin());
        assert!(germ("graph", "y - x^4").is_smooth_at_origin());
        assert_eq!(germ("triple", "x^3 - y^3").mult_at_origin(), 3);
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(matches!(
            CurveGerm::from_equation("c", "x - x"),
            Err(GermError::ZeroPolynomial { .. })
        ));
        assert!(matches!(
            CurveGerm::from_equation("c", "x + 1"),
            Err(GermError::NotThroughOrigin { .. })
        ));
        assert!(matches!(
            CurveGerm::from_equation("c", "(y - x)*(y - x)"),
            Err(GermError::NotSquarefree { .. })
        ));
        assert!(matches!(
            CurveGerm::from_equation("c", "y^2 - z^3"),
            Err(GermError::Parse(_))
        ));
    }

    #[test]
    fn transversality_needs_smoothness_and_distinct_tangents() {
        let x = germ("d1", "x");
        let y = germ("d2", "y");
        let diag = germ("diag", "y - x");
        let tangent = germ("tangent", "y - x^2");
        let cusp = germ("cusp", "y^2 - x^3");
        assert!(are_transverse_at_origin(&x, &y));
        assert!(are_transverse_at_origin(&y, &diag));
        assert!(are_transverse_at_origin(&diag, &tangent));
        assert!(!are_transverse_at_origin(&y, &tangent));
        assert!(!are_transverse_at_origin(&x, &cusp));
    }

    #[test]
    fn weighted_germ_bookkeeping() {
        let d = WeightedGerm::new(vec![
            (germ("cusp", "y^2 - x^3"), Rational::ratio(1, 2)),
            (germ("axis", "x"), Rational::ratio(1, 3)),
            (germ("ghost", "y"), Rational::zero()),
        ])
        .unwrap();
        assert_eq!(d.components().len(), 2);
        assert_eq!(d.total_mult(), Rational::ratio(4, 3));
        let half = d.scale(&Rational::ratio(1, 2)).unwrap();
        assert_eq!(half.total_mult(), Rational::ratio(2, 3));
        assert!(d.scale(&Rational::from_int(-1)).is_err());
        assert!(d.scale(&Rational::zero()).unwrap().is_empty());
    }

    #[test]
    fn weighted_germ_rejects_overlap_and_negative_weights() {
        let err = WeightedGerm::new(vec![
            (germ("a", "x*y"), Rational::one()),
            (germ("b", "y - x^2"), Rational::one()),
            (germ("c", "(y - x^2)*(y + x)"), Rational::one()),
        ])
        .unwrap_err();
        assert!(matches!(err, GermError::SharedComponent { .. }));
        assert!(matches!(
            WeightedGerm::new(vec![(germ("a", "x"), Rational::from_int(-1))]),
            Err(GermError::NegativeWeight { .. })
        ));
    }
}
