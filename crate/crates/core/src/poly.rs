//! Sparse bivariate polynomials over a coefficient-field tower, with the
//! substitution toolkit used by iterated point blow-ups.
//!
//! # Conventions
//! - The two variables are fixed internally as `x` and `y`; a term map key
//!   `(i, j)` is the exponent pair of `x^i * y^j`.
//! - No zero coefficients are ever stored; the zero polynomial is the empty
//!   map. Equality is coefficient-wise.
//! - "Multiplicity" means the order of vanishing at the origin, i.e. the
//!   minimal total degree `i + j` over stored terms.
//!
//! # Invariants
//! - All coefficients are elements of `self.field`; cross-field arithmetic is
//!   a bug and is guarded by debug assertions.
//! - `chart_a_transform` / `chart_b_transform` implement the two standard
//!   blow-up substitutions `(x, y) -> (x, x*y)` and `(x, y) -> (x*y, y)`
//!   followed by exact division by the exceptional coordinate to the
//!   multiplicity: the proper transform of a germ never contains the
//!   exceptional line as a component.
//! - The bivariate gcd is computed by a primitive polynomial-remainder
//!   sequence in `(K[x])[y]`; it is used for squarefree and coprimality
//!   checks, so only its degree and value up to a unit matter, but the result
//!   is normalized to a canonical unit multiple for determinism.

use std::collections::BTreeMap;

use serde::ser::{Serialize, Serializer};

use crate::field::{CoeffField, FieldElem, UniPoly};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivarPoly {
    field: CoeffField,
    terms: BTreeMap<(u32, u32), FieldElem>,
}

impl BivarPoly {
    pub fn zero(field: CoeffField) -> Self {
        BivarPoly { field, terms: BTreeMap::new() }
    }

    pub fn constant(field: CoeffField, c: FieldElem) -> Self {
        Self::from_terms(field, vec![((0, 0), c)])
    }

    pub fn var_x(field: CoeffField) -> Self {
        let one = field.one();
        Self::from_terms(field, vec![((1, 0), one)])
    }

    pub fn var_y(field: CoeffField) -> Self {
        let one = field.one();
        Self::from_terms(field, vec![((0, 1), one)])
    }

    pub fn monomial(field: CoeffField, i: u32, j: u32, c: FieldElem) -> Self {
        Self::from_terms(field, vec![((i, j), c)])
    }

    /// Builds a polynomial from (exponent pair, coefficient) entries, summing
    /// duplicates and dropping zeros.
    pub fn from_terms(
        field: CoeffField,
        entries: impl IntoIterator<Item = ((u32, u32), FieldElem)>,
    ) -> Self {
        let mut terms: BTreeMap<(u32, u32), FieldElem> = BTreeMap::new();
        for (key, c) in entries {
            let cur = match terms.remove(&key) {
                Some(prev) => field.add(&prev, &c),
                None => c,
            };
            if !field.is_zero(&cur) {
                terms.insert(key, cur);
            }
        }
        BivarPoly { field, terms }
    }

    pub fn from_rational_terms(
        field: CoeffField,
        entries: impl IntoIterator<Item = ((u32, u32), Rational)>,
    ) -> Self {
        let mapped: Vec<_> = entries
            .into_iter()
            .map(|(key, r)| (key, field.from_rational(r)))
            .collect();
        Self::from_terms(field, mapped)
    }

    /// Lifts a univariate polynomial in `x` to a bivariate one.
    pub fn from_x_poly(u: &UniPoly) -> Self {
        let field = u.field().clone();
        let entries: Vec<_> = u
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| ((i as u32, 0), c.clone()))
            .collect();
        Self::from_terms(field, entries)
    }

    pub fn field(&self) -> &CoeffField {
        &self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &FieldElem)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    pub fn coeff(&self, i: u32, j: u32) -> FieldElem {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn degree_x(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn degree_y(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|&(i, j)| i + j).max().unwrap_or(0)
    }

    /// Order of vanishing at the origin. Panics on the zero polynomial.
    pub fn multiplicity(&self) -> u32 {
        self.terms
            .keys()
            .map(|&(i, j)| i + j)
            .min()
            .expect("multiplicity of the zero polynomial")
    }

    /// The homogeneous part of minimal total degree.
    pub fn leading_form(&self) -> BivarPoly {
        let m = self.multiplicity();
        let entries: Vec<_> = self
            .terms
            .iter()
            .filter(|(&(i, j), _)| i + j == m)
            .map(|(&k, c)| (k, c.clone()))
            .collect();
        Self::from_terms(self.field.clone(), entries)
    }

    pub fn vanishes_at_origin(&self) -> bool {
        !self.terms.contains_key(&(0, 0))
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert!(self.field == other.field);
        let entries = self
            .terms
            .iter()
            .chain(other.terms.iter())
            .map(|(&k, c)| (k, c.clone()));
        Self::from_terms(self.field.clone(), entries)
    }

    pub fn neg(&self) -> Self {
        let entries: Vec<_> = self
            .terms
            .iter()
            .map(|(&k, c)| (k, self.field.neg(c)))
            .collect();
        Self::from_terms(self.field.clone(), entries)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert!(self.field == other.field);
        let mut acc: BTreeMap<(u32, u32), FieldElem> = BTreeMap::new();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                let key = (i1 + i2, j1 + j2);
                let prod = self.field.mul(c1, c2);
                let cur = match acc.remove(&key) {
                    Some(prev) => self.field.add(&prev, &prod),
                    None => prod,
                };
                acc.insert(key, cur);
            }
        }
        acc.retain(|_, c| !self.field.is_zero(c));
        BivarPoly { field: self.field.clone(), terms: acc }
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(self.field.clone());
        }
        let entries: Vec<_> = self
            .terms
            .iter()
            .map(|(&k, v)| (k, self.field.mul(v, c)))
            .collect();
        Self::from_terms(self.field.clone(), entries)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::constant(self.field.clone(), self.field.one());
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn derivative_x(&self) -> Self {
        let entries: Vec<_> = self
            .terms
            .iter()
            .filter(|(&(i, _), _)| i > 0)
            .map(|(&(i, j), c)| {
                ((i - 1, j), self.field.mul(c, &self.field.from_int(i as i64)))
            })
            .collect();
        Self::from_terms(self.field.clone(), entries)
    }

    pub fn derivative_y(&self) -> Self {
        let entries: Vec<_> = self
            .terms
            .iter()
            .filter(|(&(_, j), _)| j > 0)
            .map(|(&(i, j), c)| {
                ((i, j - 1), self.field.mul(c, &self.field.from_int(j as i64)))
            })
            .collect();
        Self::from_terms(self.field.clone(), entries)
    }

    pub fn eval(&self, x0: &FieldElem, y0: &FieldElem) -> FieldElem {
        let mut acc = self.field.zero();
        for (&(i, j), c) in &self.terms {
            let xp = self.field.pow(x0, i);
            let yp = self.field.pow(y0, j);
            acc = self.field.add(&acc, &self.field.mul(&self.field.mul(c, &xp), &yp));
        }
        acc
    }

    /// Proper transform in the first blow-up chart: substitute
    /// `(x, y) -> (x, x*y)` and divide by `x^m`. Requires `m <= multiplicity`.
    /// The new exceptional line is `{x = 0}`.
    pub fn chart_a_transform(&self, m: u32) -> Self {
        assert!(self.is_zero() || m <= self.multiplicity());
        let entries: Vec<_> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| ((i + j - m, j), c.clone()))
            .collect();
        Self::from_terms(self.field.clone(), entries)
    }

    /// Proper transform in the second blow-up chart: substitute
    /// `(x, y) -> (x*y, y)` and divide by `y^m`. The new exceptional line is
    /// `{y = 0}`.
    pub fn chart_b_transform(&self, m: u32) -> Self {
        assert!(self.is_zero() || m <= self.multiplicity());
        let entries: Vec<_> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| ((i, i + j - m), c.clone()))
            .collect();
        Self::from_terms(self.field.clone(), entries)
    }

    /// `f(x, y + a)`: recenters the origin at `(0, a)`.
    pub fn translate_y(&self, a: &FieldElem) -> Self {
        if self.field.is_zero(a) {
            return self.clone();
        }
        // Shift each x-slice (a univariate polynomial in y) by `a`.
        let mut slices: BTreeMap<u32, Vec<FieldElem>> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            let slice = slices.entry(i).or_default();
            if slice.len() <= j as usize {
                slice.resize(j as usize + 1, self.field.zero());
            }
            slice[j as usize] = c.clone();
        }
        let mut entries = Vec::new();
        for (i, coeffs) in slices {
            let shifted = UniPoly::new(self.field.clone(), coeffs).compose_shift(a);
            for (j, c) in shifted.coeffs().iter().enumerate() {
                entries.push(((i, j as u32), c.clone()));
            }
        }
        Self::from_terms(self.field.clone(), entries)
    }

    /// `f(a*x + b*y, c*x + d*y)`: linear substitution. For a coordinate
    /// change the caller should ensure `a*d - b*c != 0`.
    pub fn linear_substitute(
        &self,
        a: &FieldElem,
        b: &FieldElem,
        c: &FieldElem,
        d: &FieldElem,
    ) -> Self {
        let f = &self.field;
        let u = Self::from_terms(
            f.clone(),
            vec![((1, 0), a.clone()), ((0, 1), b.clone())],
        );
        let v = Self::from_terms(
            f.clone(),
            vec![((1, 0), c.clone()), ((0, 1), d.clone())],
        );
        let mut u_pows = vec![Self::constant(f.clone(), f.one())];
        for _ in 0..self.degree_x() {
            u_pows.push(u_pows.last().unwrap().mul(&u));
        }
        let mut v_pows = vec![Self::constant(f.clone(), f.one())];
        for _ in 0..self.degree_y() {
            v_pows.push(v_pows.last().unwrap().mul(&v));
        }
        let mut out = Self::zero(f.clone());
        for (&(i, j), coef) in &self.terms {
            let term = u_pows[i as usize].mul(&v_pows[j as usize]).scale(coef);
            out = out.add(&term);
        }
        out
    }

    /// `f(x + t*y, y)`: the shear used to put a pair of germs in generically
    /// finite position over the `x`-line.
    pub fn shear_x_by_y(&self, t: &FieldElem) -> Self {
        let f = &self.field;
        self.linear_substitute(&f.one(), t, &f.zero(), &f.one())
    }

    /// Restriction to the line `{x = 0}`, as a univariate polynomial in `y`.
    pub fn restrict_x0(&self) -> UniPoly {
        let mut coeffs = vec![self.field.zero(); self.degree_y() as usize + 1];
        for (&(i, j), c) in &self.terms {
            if i == 0 {
                coeffs[j as usize] = c.clone();
            }
        }
        UniPoly::new(self.field.clone(), coeffs)
    }

    /// Restriction to the line `{y = 0}`, as a univariate polynomial in `x`.
    pub fn restrict_y0(&self) -> UniPoly {
        let mut coeffs = vec![self.field.zero(); self.degree_x() as usize + 1];
        for (&(i, j), c) in &self.terms {
            if j == 0 {
                coeffs[i as usize] = c.clone();
            }
        }
        UniPoly::new(self.field.clone(), coeffs)
    }

    /// Coefficients of powers of `y`, each a univariate polynomial in `x`,
    /// ascending in `y`-degree with a nonzero last entry. Panics on zero.
    pub fn y_coeff_list(&self) -> Vec<UniPoly> {
        assert!(!self.is_zero(), "y-coefficients of the zero polynomial");
        let dy = self.degree_y() as usize;
        let dx = self.degree_x() as usize;
        let mut rows = vec![vec![self.field.zero(); dx + 1]; dy + 1];
        for (&(i, j), c) in &self.terms {
            rows[j as usize][i as usize] = c.clone();
        }
        rows.into_iter()
            .map(|row| UniPoly::new(self.field.clone(), row))
            .collect()
    }

    /// Re-expresses every coefficient in `target`, which must be a one-step
    /// extension of this polynomial's field.
    pub fn embed_into(&self, target: &CoeffField) -> Self {
        assert!(
            target.base() == Some(&self.field),
            "embed_into requires a one-step extension of the coefficient field"
        );
        let entries: Vec<_> = self
            .terms
            .iter()
            .map(|(&k, c)| (k, target.embed(c.clone())))
            .collect();
        Self::from_terms(target.clone(), entries)
    }

    /// Content with respect to `y`: the (monic) gcd in `K[x]` of all
    /// `y`-coefficients.
    pub fn cont_y(&self) -> UniPoly {
        let mut c = UniPoly::zero(self.field.clone());
        for u in self.y_coeff_list() {
            c = UniPoly::gcd(&c, &u);
        }
        c
    }

    fn primitive_part_y(&self) -> Self {
        let c = self.cont_y();
        if !c.is_zero() && c.degree() == 0 && self.field.is_one(c.lead()) {
            return self.clone();
        }
        let parts: Vec<UniPoly> = self
            .y_coeff_list()
            .into_iter()
            .map(|u| if u.is_zero() { u } else { u.div_exact(&c) })
            .collect();
        Self::from_y_coeff_list(self.field.clone(), &parts)
    }

    pub fn from_y_coeff_list(field: CoeffField, list: &[UniPoly]) -> Self {
        let mut entries = Vec::new();
        for (j, u) in list.iter().enumerate() {
            for (i, c) in u.coeffs().iter().enumerate() {
                entries.push(((i as u32, j as u32), c.clone()));
            }
        }
        Self::from_terms(field, entries)
    }

    fn mul_y_power(&self, k: u32) -> Self {
        let entries: Vec<_> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| ((i, j + k), c.clone()))
            .collect();
        Self::from_terms(self.field.clone(), entries)
    }

    fn mul_x_poly(&self, u: &UniPoly) -> Self {
        self.mul(&Self::from_x_poly(u))
    }

    /// Scales so the coefficient of the `y`-major leading term is 1.
    fn unit_normalize(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let key = self
            .terms
            .keys()
            .max_by_key(|&&(i, j)| (j, i))
            .copied()
            .unwrap();
        let lead = self.terms.get(&key).unwrap();
        if self.field.is_one(lead) {
            return self.clone();
        }
        self.scale(&self.field.inv(lead))
    }

    /// Bivariate gcd via a primitive remainder sequence in `(K[x])[y]`,
    /// normalized to a canonical unit multiple.
    pub fn gcd(f: &Self, g: &Self) -> Self {
        debug_assert!(f.field == g.field);
        if f.is_zero() {
            return g.unit_normalize();
        }
        if g.is_zero() {
            return f.unit_normalize();
        }
        if f.degree_y() == 0 && g.degree_y() == 0 {
            let u = UniPoly::gcd(&f.restrict_y0(), &g.restrict_y0());
            return Self::from_x_poly(&u);
        }
        if f.degree_y() == 0 {
            let u = UniPoly::gcd(&f.restrict_y0(), &g.cont_y());
            return Self::from_x_poly(&u);
        }
        if g.degree_y() == 0 {
            let u = UniPoly::gcd(&g.restrict_y0(), &f.cont_y());
            return Self::from_x_poly(&u);
        }
        let content = UniPoly::gcd(&f.cont_y(), &g.cont_y());
        let mut a = f.primitive_part_y();
        let mut b = g.primitive_part_y();
        if a.degree_y() < b.degree_y() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = Self::pseudo_rem_y(&a, &b);
            if r.is_zero() {
                // b divides a (up to content): the primitive-part gcd is b.
                return b.primitive_part_y().mul_x_poly(&content).unit_normalize();
            }
            if r.degree_y() == 0 {
                // Coprime as polynomials in y: only the contents survive.
                return Self::from_x_poly(&content).unit_normalize();
            }
            a = b;
            b = r.primitive_part_y();
        }
    }

    /// Pseudo-remainder of `a` by `b` with respect to `y` (`b.degree_y() >= 1`).
    fn pseudo_rem_y(a: &Self, b: &Self) -> Self {
        let db = b.degree_y();
        debug_assert!(db >= 1);
        let lead_b = b.y_coeff_list().pop().unwrap();
        let mut rem = a.clone();
        while !rem.is_zero() && rem.degree_y() >= db {
            let dr = rem.degree_y();
            let lead_r = rem.y_coeff_list().pop().unwrap();
            rem = rem
                .mul_x_poly(&lead_b)
                .sub(&b.mul_x_poly(&lead_r).mul_y_power(dr - db));
            debug_assert!(rem.is_zero() || rem.degree_y() < dr);
        }
        rem
    }

    /// True iff the polynomial has no repeated factor: equivalently
    /// `gcd(f, df/dx, df/dy)` is a nonzero constant (exact in characteristic
    /// zero).
    pub fn is_squarefree(&self) -> bool {
        assert!(!self.is_zero(), "squarefree test on the zero polynomial");
        if self.is_constant() {
            return true;
        }
        let g1 = Self::gcd(self, &self.derivative_x());
        if g1.is_constant() {
            return true;
        }
        let g2 = Self::gcd(&g1, &self.derivative_y());
        g2.is_constant()
    }

    pub fn is_coprime_with(&self, other: &Self) -> bool {
        Self::gcd(self, other).is_constant()
    }

    /// For a homogeneous quadratic `a*x^2 + b*x*y + c*y^2`, decides whether it
    /// splits into two distinct linear forms (discriminant `b^2 - 4ac != 0`).
    pub fn nondegenerate_quadratic_form(&self) -> bool {
        let f = &self.field;
        let a = self.coeff(2, 0);
        let b = self.coeff(1, 1);
        let c = self.coeff(0, 2);
        let disc = f.sub(&f.mul(&b, &b), &f.mul(&f.from_int(4), &f.mul(&a, &c)));
        !f.is_zero(&disc)
    }

    /// Renders with the given variable names; terms ascend by total degree,
    /// then by `x`-degree. Output re-parses to the same polynomial when all
    /// coefficients are rational.
    pub fn display(&self, vx: &str, vy: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<(u32, u32)> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| (i + j, i));
        let mut out = String::new();
        for (pos, &(i, j)) in keys.iter().enumerate() {
            let c = self.terms.get(&(i, j)).unwrap();
            let (negative, mag) = match self.field.as_rational(c) {
                Some(r) if r.is_negative() => (true, self.field.from_rational(-r)),
                _ => (false, c.clone()),
            };
            if pos == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut pieces: Vec<String> = Vec::new();
            let mag_is_one = self.field.is_one(&mag);
            if !mag_is_one || (i == 0 && j == 0) {
                if self.field.elem_is_atomic(&mag) {
                    pieces.push(self.field.display_elem(&mag));
                } else {
                    pieces.push(format!("({})", self.field.display_elem(&mag)));
                }
            }
            if i > 0 {
                pieces.push(if i == 1 { vx.to_string() } else { format!("{vx}^{i}") });
            }
            if j > 0 {
                pieces.push(if j == 1 { vy.to_string() } else { format!("{vy}^{j}") });
            }
            out.push_str(&pieces.join("*"));
        }
        out
    }
}

impl Serialize for BivarPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.display("x", "y"))
    }
}

/// Resultant of `f` and `g` with respect to `y`: a univariate polynomial in
/// `x`. Zero iff the two share a factor of positive `y`-degree.
pub fn resultant_y(f: &BivarPoly, g: &BivarPoly) -> UniPoly {
    assert!(!f.is_zero() && !g.is_zero(), "resultant of a zero polynomial");
    crate::factor::resultant_poly_coeffs(&f.y_coeff_list(), &g.y_coeff_list())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> CoeffField {
        CoeffField::rationals()
    }

    fn p(pairs: &[(u32, u32, i64)]) -> BivarPoly {
        BivarPoly::from_rational_terms(
            q(),
            pairs.iter().map(|&(i, j, c)| ((i, j), Rational::from_int(c))),
        )
    }

    fn cusp() -> BivarPoly {
        p(&[(0, 2, 1), (3, 0, -1)])
    }

    #[test]
    fn multiplicity_is_additive_under_product() {
        let f = cusp();
        let g = p(&[(1, 0, 1), (0, 1, 2), (2, 0, 5)]);
        assert_eq!(f.multiplicity(), 2);
        assert_eq!(g.multiplicity(), 1);
        assert_eq!(f.mul(&g).multiplicity(), 3);
    }

    #[test]
    fn chart_transforms_match_hand_substitution() {
        // y^2 - x^3 -> (chart a, m = 2) y^2 - x.
        let t = cusp().chart_a_transform(2);
        assert_eq!(t, p(&[(0, 2, 1), (1, 0, -1)]));
        // x*y -> (chart a, m = 2) y; (chart b, m = 2) x.
        let node = p(&[(1, 1, 1)]);
        assert_eq!(node.chart_a_transform(2), p(&[(0, 1, 1)]));
        assert_eq!(node.chart_b_transform(2), p(&[(1, 0, 1)]));
        // y - x^4 -> (chart a, m = 1) y - x^3.
        let smooth = p(&[(0, 1, 1), (4, 0, -1)]);
        assert_eq!(smooth.chart_a_transform(1), p(&[(0, 1, 1), (3, 0, -1)]));
    }

    #[test]
    fn translate_y_matches_evaluation() {
        let f = p(&[(0, 2, 1), (3, 0, -1), (1, 1, 7)]);
        let a = q().from_rational(Rational::ratio(3, 2));
        let g = f.translate_y(&a);
        for (x0, y0) in [(0i64, 0i64), (1, 2), (-3, 5)] {
            let xe = q().from_int(x0);
            let ye = q().from_int(y0);
            let shifted = q().add(&ye, &a);
            assert_eq!(g.eval(&xe, &ye), f.eval(&xe, &shifted));
        }
    }

    #[test]
    fn linear_substitution_composes_and_inverts() {
        let f = cusp();
        let one = q().one();
        let zero = q().zero();
        let t = q().from_int(3);
        let sheared = f.shear_x_by_y(&t);
        let back = sheared.linear_substitute(&one, &q().from_int(-3), &zero, &one);
        assert_eq!(back, f);
    }

    #[test]
    fn gcd_finds_common_factor_and_detects_coprime() {
        let common = p(&[(1, 0, 1), (0, 1, 1)]); // x + y
        let f = common.mul(&cusp());
        let g = common.mul(&p(&[(0, 1, 1), (1, 0, -1)]));
        let d = BivarPoly::gcd(&f, &g);
        assert_eq!(d, common.unit_normalize());
        assert!(cusp().is_coprime_with(&p(&[(0, 1, 1)])));
        assert!(!f.is_coprime_with(&g));
    }

    #[test]
    fn squarefree_check_flags_squares() {
        assert!(cusp().is_squarefree());
        assert!(p(&[(1, 1, 1)]).is_squarefree()); // x*y
        let line = p(&[(0, 1, 1), (1, 0, -1)]); // y - x
        assert!(!line.mul(&line).is_squarefree());
        // y*(y - x^2) is squarefree even though gcd(f, f_x) is nonconstant.
        let f = p(&[(0, 1, 1)]).mul(&p(&[(0, 1, 1), (2, 0, -1)]));
        assert!(f.is_squarefree());
    }

    #[test]
    fn quadratic_form_discriminant() {
        assert!(p(&[(1, 1, 1)]).nondegenerate_quadratic_form()); // xy
        assert!(p(&[(0, 2, 1), (2, 0, -1)]).nondegenerate_quadratic_form()); // y^2 - x^2
        assert!(!p(&[(0, 2, 1)]).nondegenerate_quadratic_form()); // y^2
        assert!(p(&[(0, 2, 1), (2, 0, -2)]).nondegenerate_quadratic_form()); // y^2 - 2x^2
    }

    #[test]
    fn resultant_bridges_to_univariate_machinery() {
        // res_y(y - x^2, y - x) = x^2 - x.
        let f = p(&[(0, 1, 1), (2, 0, -1)]);
        let g = p(&[(0, 1, 1), (1, 0, -1)]);
        let r = resultant_y(&f, &g);
        assert_eq!(r, UniPoly::from_rationals(
            q(),
            &[Rational::zero(), Rational::from_int(-1), Rational::from_int(1)],
        ));
        assert_eq!(r.valuation(), Some(1));
    }

    #[test]
    fn display_is_stable_and_readable() {
        assert_eq!(cusp().display("x", "y"), "y^2 - x^3");
        assert_eq!(p(&[(0, 1, 1), (4, 0, -1)]).display("x", "y"), "y - x^4");
        assert_eq!(p(&[(0, 0, -2), (1, 1, 1)]).display("x", "y"), "-2 + x*y");
        assert_eq!(BivarPoly::zero(q()).display("x", "y"), "0");
    }

    #[test]
    fn restrictions_pick_out_axis_slices() {
        let f = p(&[(0, 2, 1), (3, 0, -1), (1, 1, 5)]);
        let ry = f.restrict_x0();
        assert_eq!(ry.coeffs().len(), 3);
        assert!(q().is_zero(&ry.coeff(0)) && q().is_zero(&ry.coeff(1)));
        let rx = f.restrict_y0();
        assert_eq!(rx.degree(), 3);
    }
}
