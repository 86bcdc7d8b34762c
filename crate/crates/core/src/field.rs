//! Coefficient fields: the rationals and explicit algebraic extension towers
//! Q(t1)(t2)..., plus univariate polynomial arithmetic over any tower level.
//!
//! # Representation
//! A [`CoeffField`] is a cheap handle (Arc) to a tower level. An element of an
//! extension level is the coefficient vector of its residue polynomial in the
//! level's generator, reduced mod the generator's minimal polynomial, with no
//! trailing zeros. The representation is canonical per level, so structural
//! equality is field equality and the derived ordering is a total order
//! (used only for deterministic traversal, it is not numeric).
//!
//! # Invariants
//! - A minimal polynomial is monic, of degree >= 2, and irreducible over the
//!   level below it (checked at construction via factorization).
//! - Elements are level-homogeneous: `Rat` only at the ground level, `Ext`
//!   vectors whose entries are elements of the level below.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::rational::Rational;

/// Default bound on extension-tower height. Resolutions of the supported germ
/// families rarely need more than one extension; the cap converts a runaway
/// tower into a diagnosable error.
pub const DEFAULT_TOWER_CAP: u32 = 4;

#[derive(Clone, Debug)]
pub struct CoeffField(Arc<Level>);

#[derive(Debug)]
struct Level {
    /// `None` for the rationals.
    base: Option<CoeffField>,
    /// Minimal polynomial coefficients over `base`, ascending, monic. Empty
    /// for the rationals.
    minpoly: Vec<FieldElem>,
    gen_name: String,
    height: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FieldElem {
    Rat(Rational),
    Ext(Vec<FieldElem>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    NotMonic,
    DegreeTooSmall,
    Reducible(String),
    TowerCapExceeded { height: u32, cap: u32 },
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotMonic => write!(f, "minimal polynomial must be monic"),
            FieldError::DegreeTooSmall => {
                write!(f, "minimal polynomial must have degree at least 2")
            }
            FieldError::Reducible(p) => {
                write!(f, "minimal polynomial `{p}` is reducible over the base field")
            }
            FieldError::TowerCapExceeded { height, cap } => {
                write!(f, "extension tower height {height} exceeds cap {cap}")
            }
        }
    }
}

impl std::error::Error for FieldError {}

static RATIONALS: OnceLock<CoeffField> = OnceLock::new();

impl PartialEq for CoeffField {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        match (&self.0.base, &other.0.base) {
            (None, None) => true,
            (Some(a), Some(b)) => self.0.minpoly == other.0.minpoly && a == b,
            _ => false,
        }
    }
}

impl Eq for CoeffField {}

impl CoeffField {
    pub fn rationals() -> CoeffField {
        RATIONALS
            .get_or_init(|| {
                CoeffField(Arc::new(Level {
                    base: None,
                    minpoly: Vec::new(),
                    gen_name: String::new(),
                    height: 0,
                }))
            })
            .clone()
    }

    /// Extends this field by a root of `minpoly` (monic, degree >= 2,
    /// irreducible over `self`). The new generator is named `t<height>`.
    ///
    /// The tower is capped at height `cap` (see `DEFAULT_TOWER_CAP`): a
    /// request that would push past it fails with `TowerCapExceeded` rather
    /// than letting a runaway resolution build unbounded extensions.
    pub fn extend_capped(&self, minpoly: &UniPoly, cap: u32) -> Result<CoeffField, FieldError> {
        if self.0.height + 1 > cap {
            return Err(FieldError::TowerCapExceeded { height: self.0.height + 1, cap });
        }
        self.extend(minpoly)
    }

    pub fn extend(&self, minpoly: &UniPoly) -> Result<CoeffField, FieldError> {
        assert!(minpoly.field() == self, "minimal polynomial over wrong field");
        if minpoly.is_zero() || minpoly.degree() < 2 {
            return Err(FieldError::DegreeTooSmall);
        }
        if !self.is_one(minpoly.lead()) {
            return Err(FieldError::NotMonic);
        }
        if !minpoly.is_squarefree() {
            return Err(FieldError::Reducible(minpoly.display("t")));
        }
        let factors = crate::factor::factor_squarefree_monic(minpoly);
        if factors.len() != 1 {
            return Err(FieldError::Reducible(minpoly.display("t")));
        }
        let height = self.0.height + 1;
        Ok(CoeffField(Arc::new(Level {
            base: Some(self.clone()),
            minpoly: minpoly.coeffs().to_vec(),
            gen_name: format!("t{height}"),
            height,
        })))
    }

    pub fn is_rationals(&self) -> bool {
        self.0.base.is_none()
    }

    pub fn base(&self) -> Option<&CoeffField> {
        self.0.base.as_ref()
    }

    pub fn height(&self) -> u32 {
        self.0.height
    }

    pub fn gen_name(&self) -> &str {
        &self.0.gen_name
    }

    /// Degree of the top extension step (1 for the rationals).
    pub fn step_degree(&self) -> usize {
        if self.is_rationals() {
            1
        } else {
            self.0.minpoly.len() - 1
        }
    }

    /// Degree of the whole tower over the rationals.
    pub fn absolute_degree(&self) -> u64 {
        match &self.0.base {
            None => 1,
            Some(b) => b.absolute_degree() * self.step_degree() as u64,
        }
    }

    pub fn minpoly(&self) -> UniPoly {
        let base = self.0.base.as_ref().expect("rationals have no minimal polynomial");
        UniPoly::new(base.clone(), self.0.minpoly.clone())
    }

    /// The generator as an element of this field.
    pub fn generator(&self) -> FieldElem {
        let base = self.0.base.as_ref().expect("rationals have no generator");
        FieldElem::Ext(vec![base.zero(), base.one()])
    }

    pub fn zero(&self) -> FieldElem {
        if self.is_rationals() {
            FieldElem::Rat(Rational::zero())
        } else {
            FieldElem::Ext(Vec::new())
        }
    }

    pub fn one(&self) -> FieldElem {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, r: Rational) -> FieldElem {
        match &self.0.base {
            None => FieldElem::Rat(r),
            Some(b) => {
                if r.is_zero() {
                    FieldElem::Ext(Vec::new())
                } else {
                    FieldElem::Ext(vec![b.from_rational(r)])
                }
            }
        }
    }

    pub fn from_int(&self, n: i64) -> FieldElem {
        self.from_rational(Rational::from_int(n))
    }

    /// Lifts an element of the base field into this extension.
    pub fn embed(&self, e: FieldElem) -> FieldElem {
        let base = self.0.base.as_ref().expect("embed requires an extension level");
        if base.is_zero(&e) {
            FieldElem::Ext(Vec::new())
        } else {
            FieldElem::Ext(vec![e])
        }
    }

    pub fn is_zero(&self, e: &FieldElem) -> bool {
        match e {
            FieldElem::Rat(r) => r.is_zero(),
            FieldElem::Ext(v) => v.is_empty(),
        }
    }

    pub fn is_one(&self, e: &FieldElem) -> bool {
        match (e, &self.0.base) {
            (FieldElem::Rat(r), None) => r.is_one(),
            (FieldElem::Ext(v), Some(b)) => v.len() == 1 && b.is_one(&v[0]),
            _ => false,
        }
    }

    /// Is the element a rational number (possibly embedded)? Returns it if so.
    pub fn as_rational(&self, e: &FieldElem) -> Option<Rational> {
        match e {
            FieldElem::Rat(r) => Some(r.clone()),
            FieldElem::Ext(v) => match v.len() {
                0 => Some(Rational::zero()),
                1 => self.0.base.as_ref().unwrap().as_rational(&v[0]),
                _ => None,
            },
        }
    }

    fn vecs<'a>(&self, a: &'a FieldElem, b: &'a FieldElem) -> (&'a [FieldElem], &'a [FieldElem]) {
        match (a, b) {
            (FieldElem::Ext(x), FieldElem::Ext(y)) => (x, y),
            _ => panic!("element does not belong to this extension level"),
        }
    }

    fn trim(&self, mut v: Vec<FieldElem>) -> FieldElem {
        let base = self.0.base.as_ref().unwrap();
        while v.last().is_some_and(|c| base.is_zero(c)) {
            v.pop();
        }
        FieldElem::Ext(v)
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match &self.0.base {
            None => match (a, b) {
                (FieldElem::Rat(x), FieldElem::Rat(y)) => FieldElem::Rat(x + y),
                _ => panic!("element does not belong to the rationals"),
            },
            Some(base) => {
                let (x, y) = self.vecs(a, b);
                let n = x.len().max(y.len());
                let mut out = Vec::with_capacity(n);
                for i in 0..n {
                    let zero = base.zero();
                    let xi = x.get(i).unwrap_or(&zero);
                    let yi = y.get(i).unwrap_or(&zero);
                    out.push(base.add(xi, yi));
                }
                self.trim(out)
            }
        }
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        match a {
            FieldElem::Rat(x) => FieldElem::Rat(-x),
            FieldElem::Ext(v) => {
                let base = self.0.base.as_ref().unwrap();
                FieldElem::Ext(v.iter().map(|c| base.neg(c)).collect())
            }
        }
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match &self.0.base {
            None => match (a, b) {
                (FieldElem::Rat(x), FieldElem::Rat(y)) => FieldElem::Rat(x * y),
                _ => panic!("element does not belong to the rationals"),
            },
            Some(base) => {
                let (x, y) = self.vecs(a, b);
                if x.is_empty() || y.is_empty() {
                    return FieldElem::Ext(Vec::new());
                }
                let mut prod = vec![base.zero(); x.len() + y.len() - 1];
                for (i, xi) in x.iter().enumerate() {
                    for (j, yj) in y.iter().enumerate() {
                        let t = base.mul(xi, yj);
                        prod[i + j] = base.add(&prod[i + j], &t);
                    }
                }
                self.reduce_vec(prod)
            }
        }
    }

    /// Remainder of a coefficient vector mod the minimal polynomial.
    fn reduce_vec(&self, mut v: Vec<FieldElem>) -> FieldElem {
        let base = self.0.base.as_ref().unwrap();
        let deg = self.step_degree();
        while v.len() > deg {
            let top = v.pop().unwrap();
            if base.is_zero(&top) {
                continue;
            }
            let k = v.len() - deg;
            // minpoly is monic: x^deg = -(lower part), shifted by k.
            for (i, m) in self.0.minpoly[..deg].iter().enumerate() {
                let t = base.mul(&top, m);
                v[k + i] = base.sub(&v[k + i], &t);
            }
        }
        self.trim(v)
    }

    pub fn inv(&self, a: &FieldElem) -> FieldElem {
        assert!(!self.is_zero(a), "inverse of zero field element");
        match &self.0.base {
            None => match a {
                FieldElem::Rat(x) => FieldElem::Rat(x.recip().unwrap()),
                _ => panic!("element does not belong to the rationals"),
            },
            Some(base) => {
                let v = match a {
                    FieldElem::Ext(v) => v.clone(),
                    _ => panic!("element does not belong to this extension level"),
                };
                let ap = UniPoly::new(base.clone(), v);
                let (g, s, _) = UniPoly::ext_gcd(&ap, &self.minpoly());
                // minpoly irreducible and a != 0 mod it, so gcd is a unit.
                assert!(!g.is_zero() && g.degree() == 0, "non-invertible element: reducible minimal polynomial?");
                let ginv = base.inv(g.lead());
                let inv = s.scale(&ginv);
                let mut coeffs = inv.coeffs().to_vec();
                coeffs.truncate(self.step_degree());
                self.trim(coeffs)
            }
        }
    }

    pub fn div(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let binv = self.inv(b);
        self.mul(a, &binv)
    }

    pub fn pow(&self, a: &FieldElem, mut n: u32) -> FieldElem {
        let mut result = self.one();
        let mut base = a.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = self.mul(&result, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    /// Human-readable form; composite elements are parenthesized by callers
    /// that splice them into larger expressions.
    pub fn display_elem(&self, e: &FieldElem) -> String {
        match e {
            FieldElem::Rat(r) => r.to_string(),
            FieldElem::Ext(v) => {
                if v.is_empty() {
                    return "0".to_string();
                }
                let base = self.0.base.as_ref().unwrap();
                let gen = self.gen_name();
                let mut parts = Vec::new();
                for (i, c) in v.iter().enumerate() {
                    if base.is_zero(c) {
                        continue;
                    }
                    let cs = base.display_elem(c);
                    let cs = if cs.contains('+') || (cs.contains('-') && !cs.starts_with('-')) {
                        format!("({cs})")
                    } else {
                        cs
                    };
                    let term = match i {
                        0 => cs,
                        1 if base.is_one(c) => gen.to_string(),
                        1 if cs == "-1" => format!("-{gen}"),
                        1 => format!("{cs}*{gen}"),
                        _ if base.is_one(c) => format!("{gen}^{i}"),
                        _ if cs == "-1" => format!("-{gen}^{i}"),
                        _ => format!("{cs}*{gen}^{i}"),
                    };
                    parts.push(term);
                }
                parts.join(" + ").replace("+ -", "- ")
            }
        }
    }

    /// Is the composite element syntactically atomic for splicing into
    /// product expressions?
    pub fn elem_is_atomic(&self, e: &FieldElem) -> bool {
        let s = self.display_elem(e);
        !s.contains('+') && !(s.len() > 1 && s[1..].contains('-')) && !s.contains('*')
    }
}

/// Univariate polynomial over a tower level. Coefficients ascending; no
/// trailing zeros (the zero polynomial has an empty coefficient vector).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    field: CoeffField,
    coeffs: Vec<FieldElem>,
}

impl UniPoly {
    pub fn new(field: CoeffField, mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn zero(field: CoeffField) -> Self {
        UniPoly { field, coeffs: Vec::new() }
    }

    pub fn constant(field: CoeffField, c: FieldElem) -> Self {
        Self::new(field, vec![c])
    }

    pub fn one(field: CoeffField) -> Self {
        let c = field.one();
        Self::constant(field, c)
    }

    pub fn var(field: CoeffField) -> Self {
        let coeffs = vec![field.zero(), field.one()];
        Self::new(field, coeffs)
    }

    pub fn monomial(field: CoeffField, c: FieldElem, deg: usize) -> Self {
        let mut coeffs = vec![field.zero(); deg];
        coeffs.push(c);
        Self::new(field, coeffs)
    }

    pub fn from_rationals(field: CoeffField, rs: &[Rational]) -> Self {
        let coeffs = rs.iter().map(|r| field.from_rational(r.clone())).collect();
        Self::new(field, coeffs)
    }

    pub fn field(&self) -> &CoeffField {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial.
    pub fn degree(&self) -> usize {
        assert!(!self.is_zero(), "degree of the zero polynomial");
        self.coeffs.len() - 1
    }

    pub fn lead(&self) -> &FieldElem {
        self.coeffs.last().expect("leading coefficient of the zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Index of the lowest nonzero coefficient (order of vanishing at 0).
    /// `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !self.field.is_zero(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert!(self.field == other.field);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.field.add(&self.coeff(i), &other.coeff(i)));
        }
        Self::new(self.field.clone(), out)
    }

    pub fn neg(&self) -> Self {
        let out = self.coeffs.iter().map(|c| self.field.neg(c)).collect();
        UniPoly { field: self.field.clone(), coeffs: out }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert!(self.field == other.field);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field.clone());
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if self.field.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = self.field.mul(a, b);
                out[i + j] = self.field.add(&out[i + j], &t);
            }
        }
        Self::new(self.field.clone(), out)
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(self.field.clone());
        }
        let out = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        Self::new(self.field.clone(), out)
    }

    /// Multiplication by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = vec![self.field.zero(); k];
        out.extend_from_slice(&self.coeffs);
        UniPoly { field: self.field.clone(), coeffs: out }
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let field = self.field.clone();
        if self.is_zero() || self.degree() < d.degree() {
            return (Self::zero(field), self.clone());
        }
        let dlead_inv = field.inv(d.lead());
        let mut rem = self.coeffs.clone();
        let dn = d.degree();
        let mut quot = vec![field.zero(); rem.len() - dn];
        while rem.len() > dn {
            let top = rem.last().unwrap().clone();
            let k = rem.len() - 1 - dn;
            if !field.is_zero(&top) {
                let q = field.mul(&top, &dlead_inv);
                for i in 0..dn {
                    let t = field.mul(&q, &d.coeffs[i]);
                    rem[k + i] = field.sub(&rem[k + i], &t);
                }
                quot[k] = q;
            }
            rem.pop();
        }
        (Self::new(field.clone(), quot), Self::new(field, rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Division known to be exact; panics if a remainder appears.
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> Self {
        assert!(!self.is_zero());
        if self.field.is_one(self.lead()) {
            return self.clone();
        }
        let inv = self.field.inv(self.lead());
        self.scale(&inv)
    }

    /// Monic greatest common divisor (Euclid). gcd(0, b) = monic b.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let r = x.rem(&y);
            x = y;
            y = r;
        }
        if x.is_zero() {
            x
        } else {
            x.monic()
        }
    }

    /// Extended Euclid: returns (g, s, t) with s*a + t*b = g.
    pub fn ext_gcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let field = a.field.clone();
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(field.clone()), Self::zero(field.clone()));
        let (mut t0, mut t1) = (Self::zero(field.clone()), Self::one(field));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        (r0, s0, t0)
    }

    pub fn derivative(&self) -> Self {
        if self.is_zero() || self.degree() == 0 {
            return Self::zero(self.field.clone());
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let k = self.field.from_int(i as i64);
            out.push(self.field.mul(c, &k));
        }
        Self::new(self.field.clone(), out)
    }

    pub fn eval(&self, at: &FieldElem) -> FieldElem {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = self.field.mul(&acc, at);
            acc = self.field.add(&acc, c);
        }
        acc
    }

    /// f(x + c).
    pub fn compose_shift(&self, c: &FieldElem) -> Self {
        let field = self.field.clone();
        let shift = Self::new(field.clone(), vec![c.clone(), field.one()]);
        let mut acc = Self::zero(field.clone());
        for coeff in self.coeffs.iter().rev() {
            acc = acc.mul(&shift);
            acc = acc.add(&Self::constant(field.clone(), coeff.clone()));
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        assert!(!self.is_zero());
        if self.degree() == 0 {
            return true;
        }
        let g = Self::gcd(self, &self.derivative());
        g.degree() == 0
    }

    /// Squarefree part (product of distinct irreducible factors).
    pub fn squarefree_part(&self) -> Self {
        assert!(!self.is_zero());
        if self.degree() == 0 {
            return Self::one(self.field.clone());
        }
        let g = Self::gcd(self, &self.derivative());
        if g.degree() == 0 {
            self.monic()
        } else {
            self.div_exact(&g).monic()
        }
    }

    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if self.field.is_zero(c) {
                continue;
            }
            let cs = self.field.display_elem(c);
            let wrapped = if cs.contains('+') || cs.contains('*') || (cs.len() > 1 && cs[1..].contains('-')) {
                format!("({cs})")
            } else {
                cs
            };
            let term = match i {
                0 => wrapped,
                1 if self.field.is_one(c) => var.to_string(),
                1 if wrapped == "-1" => format!("-{var}"),
                1 => format!("{wrapped}*{var}"),
                _ if self.field.is_one(c) => format!("{var}^{i}"),
                _ if wrapped == "-1" => format!("-{var}^{i}"),
                _ => format!("{wrapped}*{var}^{i}"),
            };
            parts.push(term);
        }
        let joined = parts.join(" + ");
        joined.replace("+ -", "- ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> CoeffField {
        CoeffField::rationals()
    }

    fn qpoly(cs: &[i64]) -> UniPoly {
        let f = q();
        let coeffs = cs.iter().map(|&c| f.from_int(c)).collect();
        UniPoly::new(f, coeffs)
    }

    #[test]
    fn divrem_over_rationals() {
        // x^3 - 1 = (x - 1)(x^2 + x + 1)
        let f = qpoly(&[-1, 0, 0, 1]);
        let d = qpoly(&[-1, 1]);
        let (quot, rem) = f.divrem(&d);
        assert!(rem.is_zero());
        assert_eq!(quot, qpoly(&[1, 1, 1]));
    }

    #[test]
    fn gcd_is_monic() {
        // gcd(x^2 - 1, x^2 - 2x + 1) = x - 1
        let g = UniPoly::gcd(&qpoly(&[-1, 0, 1]), &qpoly(&[1, -2, 1]));
        assert_eq!(g, qpoly(&[-1, 1]));
    }

    #[test]
    fn quadratic_extension_arithmetic() {
        // K = Q(t), t^2 = 2.
        let minpoly = qpoly(&[-2, 0, 1]);
        let k = q().extend(&minpoly).unwrap();
        let t = k.generator();
        let t2 = k.mul(&t, &t);
        assert_eq!(t2, k.from_int(2));
        // (1 + t)^2 = 3 + 2t
        let e = k.add(&k.one(), &t);
        let sq = k.mul(&e, &e);
        let expected = k.add(&k.from_int(3), &k.mul(&k.from_int(2), &t));
        assert_eq!(sq, expected);
        // 1/(1 + t) = t - 1  (since (1+t)(t-1) = t^2 - 1 = 1)
        let inv = k.inv(&e);
        let check = k.mul(&e, &inv);
        assert!(k.is_one(&check));
    }

    #[test]
    fn reducible_minpoly_rejected() {
        // x^2 - 1 = (x-1)(x+1)
        let bad = qpoly(&[-1, 0, 1]);
        assert!(matches!(q().extend(&bad), Err(FieldError::Reducible(_))));
    }

    #[test]
    fn tower_of_height_two() {
        let k1 = q().extend(&qpoly(&[-2, 0, 1])).unwrap(); // Q(sqrt 2)
        // x^2 - 3 stays irreducible over Q(sqrt 2).
        let c = k1.from_int(-3);
        let minpoly2 = UniPoly::new(k1.clone(), vec![c, k1.zero(), k1.one()]);
        let k2 = k1.extend(&minpoly2).unwrap();
        assert_eq!(k2.absolute_degree(), 4);
        let s2 = k2.embed(k1.generator());
        let s3 = k2.generator();
        let prod = k2.mul(&s2, &s3);
        let sq = k2.mul(&prod, &prod);
        assert_eq!(sq, k2.from_int(6));
    }

    #[test]
    fn shift_composition() {
        // f = x^2, f(x + 1) = x^2 + 2x + 1
        let f = qpoly(&[0, 0, 1]);
        assert_eq!(f.compose_shift(&q().one()), qpoly(&[1, 2, 1]));
    }

    #[test]
    fn display_readable() {
        assert_eq!(qpoly(&[-2, 0, 1]).display("t"), "-2 + t^2");
        assert_eq!(qpoly(&[1, -1]).display("y"), "1 - y");
    }
}
