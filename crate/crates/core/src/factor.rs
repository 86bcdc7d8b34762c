//! Univariate polynomial factorization over the rationals and over explicit
//! algebraic extension towers, plus the polynomial-entry resultant shared
//! with the bivariate elimination code.
//!
//! # Pipeline
//! - Squarefree decomposition: Yun's algorithm (characteristic zero).
//! - Over Q: clear denominators, monicize by the leading coefficient
//!   substitution, reduce mod a good small prime, deterministic Berlekamp
//!   split, quadratic Hensel lifting to a Mignotte-style bound, then subset
//!   recombination.
//! - Over an extension K(θ): Trager's norm method — shift by multiples of θ
//!   until the norm (a resultant eliminating the generator) is squarefree,
//!   factor the norm one level down, and pull factors back through gcds.
//!
//! # Conventions
//! - All returned factors are monic; input units are discarded.
//! - Factor lists are sorted by (degree, coefficient vector) so output order
//!   is reproducible run to run.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::field::{CoeffField, FieldElem, UniPoly};
use crate::rational::Rational;

/// Squarefree decomposition of a nonzero polynomial: returns monic pairwise
/// coprime squarefree `g_i` with multiplicities `e_i` so that the monic
/// normalization of the input is the product of `g_i^{e_i}`.
pub fn squarefree_decomposition(f: &UniPoly) -> Vec<(UniPoly, u32)> {
    assert!(!f.is_zero(), "squarefree decomposition of zero");
    if f.degree() == 0 {
        return Vec::new();
    }
    let a = f.monic();
    let c = UniPoly::gcd(&a, &a.derivative());
    let mut out = Vec::new();
    if c.degree() == 0 {
        out.push((a, 1));
        return out;
    }
    let mut w = a.div_exact(&c);
    let mut y = a.derivative().div_exact(&c);
    let mut i = 1u32;
    while !(w.degree() == 0) {
        let z = y.sub(&w.derivative());
        let g = UniPoly::gcd(&w, &z);
        if g.degree() > 0 {
            out.push((g.clone(), i));
        }
        w = w.div_exact(&g);
        y = z.div_exact(&g);
        i += 1;
    }
    out
}

/// Monic irreducible factors with multiplicities of any nonzero, nonconstant
/// polynomial over a tower level. The scalar unit is dropped.
pub fn factor(f: &UniPoly) -> Vec<(UniPoly, u32)> {
    assert!(!f.is_zero(), "factoring the zero polynomial");
    let mut out = Vec::new();
    for (g, mult) in squarefree_decomposition(f) {
        for h in factor_squarefree_monic(&g) {
            out.push((h, mult));
        }
    }
    sort_factors_with_mult(&mut out);
    out
}

pub fn is_irreducible(f: &UniPoly) -> bool {
    if f.is_zero() || f.degree() == 0 {
        return false;
    }
    if !f.is_squarefree() {
        return false;
    }
    factor_squarefree_monic(&f.monic()).len() == 1
}

/// Monic irreducible factors of a monic squarefree polynomial of degree >= 1.
pub fn factor_squarefree_monic(f: &UniPoly) -> Vec<UniPoly> {
    assert!(!f.is_zero() && f.degree() >= 1);
    debug_assert!(f.field().is_one(f.lead()), "input must be monic");
    let mut out = if f.degree() == 1 {
        vec![f.clone()]
    } else if f.field().is_rationals() {
        factor_squarefree_rational(f)
    } else {
        factor_squarefree_tower(f)
    };
    sort_factors(&mut out);
    let total: usize = out.iter().map(|g| g.degree()).sum();
    assert_eq!(total, f.degree(), "factor degrees must sum to the input degree");
    out
}

fn sort_factors(fs: &mut [UniPoly]) {
    fs.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
}

fn sort_factors_with_mult(fs: &mut [(UniPoly, u32)]) {
    fs.sort_by(|(a, ma), (b, mb)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
            .then_with(|| ma.cmp(mb))
    });
}

// ---------------------------------------------------------------------------
// Rational coefficients: Berlekamp mod p, Hensel lifting, recombination.
// ---------------------------------------------------------------------------

fn rational_coeff(e: &FieldElem) -> Rational {
    match e {
        FieldElem::Rat(r) => r.clone(),
        _ => panic!("expected a rational coefficient"),
    }
}

fn factor_squarefree_rational(f: &UniPoly) -> Vec<UniPoly> {
    let q = f.field().clone();
    // Clear denominators, then divide by the content to get a primitive
    // integer polynomial with positive leading coefficient.
    let rats: Vec<Rational> = f.coeffs().iter().map(rational_coeff).collect();
    let mut den = BigInt::one();
    for r in &rats {
        den = num_integer::lcm(den, r.denom().clone());
    }
    let mut ints: Vec<BigInt> = rats
        .iter()
        .map(|r| r.numer() * (&den / r.denom()))
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = num_integer::gcd(content, c.clone());
    }
    for c in ints.iter_mut() {
        *c = &*c / &content;
    }
    if ints.last().unwrap().is_negative() {
        for c in ints.iter_mut() {
            *c = -&*c;
        }
    }
    let n = ints.len() - 1;
    let lead = ints[n].clone();
    // Monicize: G(x) = lead^(n-1) * f(x/lead) has integer coefficients.
    let mut monic = Vec::with_capacity(n + 1);
    for (i, c) in ints.iter().enumerate().take(n) {
        monic.push(c * lead.pow((n - 1 - i) as u32));
    }
    monic.push(BigInt::one());
    let factors = factor_monic_integer(&monic);
    // Undo the substitution: H(x) = G_i(lead * x) / lead^(deg G_i).
    let mut out = Vec::new();
    for g in factors {
        let d = g.len() - 1;
        let mut coeffs = Vec::with_capacity(g.len());
        for (j, c) in g.iter().enumerate() {
            let num = c * lead.pow(j as u32);
            let scale = Rational::from_big(num, lead.pow(d as u32)).expect("nonzero lead");
            coeffs.push(q.from_rational(scale));
        }
        out.push(UniPoly::new(q.clone(), coeffs));
    }
    out
}

/// Factors a monic squarefree integer polynomial of degree >= 2 into monic
/// integer irreducibles.
fn factor_monic_integer(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n == 1 {
        return vec![f.to_vec()];
    }
    // Find an odd prime where the reduction stays squarefree. Only primes
    // dividing the discriminant fail, so the search terminates.
    let mut p = 3u64;
    let fp = loop {
        if is_small_prime(p) {
            let fp = fp_from_bigint(f, p);
            if fp.len() == f.len() {
                let deriv = fp_derivative(&fp, p);
                let g = fp_gcd(&fp, &deriv, p);
                if fp_deg(&g) == 0 {
                    break fp;
                }
            }
        }
        p += 2;
    };
    let modular = berlekamp(&fp, p);
    if modular.len() == 1 {
        return vec![f.to_vec()];
    }
    // Mignotte-style bound: coefficients of any monic divisor are below
    // 2^n * |f|_1. Lift to a modulus with a power-of-two exponent past 2B.
    let norm1: BigInt = f.iter().map(|c| c.abs()).sum();
    let bound = (BigInt::from(2).pow(n as u32) * norm1 * 2) + 1;
    let mut modulus = BigInt::from(p);
    let mut steps = 0u32;
    while modulus < bound {
        modulus = &modulus * &modulus;
        steps += 1;
    }
    let f_mod = zmod_poly(f, &modulus);
    let lifted = lift_tree(&f_mod, &modular, p, steps, &modulus);
    recombine(f, &lifted, &modulus)
}

fn recombine(f: &[BigInt], lifted: &[Vec<BigInt>], modulus: &BigInt) -> Vec<Vec<BigInt>> {
    let mut active: Vec<Vec<BigInt>> = lifted.to_vec();
    let mut remaining = f.to_vec();
    let mut out = Vec::new();
    assert!(active.len() < 63, "too many modular factors to recombine");
    'outer: loop {
        let r = active.len();
        if r == 0 {
            assert_eq!(remaining.len(), 1, "leftover factor after recombination");
            return out;
        }
        for size in 1..=(r / 2) {
            // Gosper's hack: subsets of fixed popcount in increasing mask order.
            let mut mask: u64 = (1u64 << size) - 1;
            while mask < (1u64 << r) {
                let mut prod = vec![BigInt::one()];
                for (i, g) in active.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        prod = zmul_mod(&prod, g, modulus);
                    }
                }
                let candidate = zsymmetric(&prod, modulus);
                if let Some(quot) = zdiv_exact_monic(&remaining, &candidate) {
                    out.push(candidate);
                    remaining = quot;
                    active = active
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << *i) == 0)
                        .map(|(_, g)| g.clone())
                        .collect();
                    continue 'outer;
                }
                let c = mask & mask.wrapping_neg();
                let r2 = mask + c;
                mask = (((r2 ^ mask) >> 2) / c) | r2;
            }
        }
        // No small subset divides: what remains is irreducible.
        out.push(remaining);
        return out;
    }
}

/// Quadratic Hensel lifting of a full modular factorization, splitting the
/// factor list in halves and lifting each pair.
fn lift_tree(
    f_mod: &[BigInt],
    modular: &[Vec<u64>],
    p: u64,
    steps: u32,
    modulus: &BigInt,
) -> Vec<Vec<BigInt>> {
    if modular.len() == 1 {
        return vec![f_mod.to_vec()];
    }
    let (left, right) = modular.split_at(modular.len() / 2);
    let g0 = fp_product(left, p);
    let h0 = fp_product(right, p);
    let (s0, t0) = fp_bezout(&g0, &h0, p);
    let (g, h) = lift_pair(
        f_mod,
        &fp_to_bigint(&g0),
        &fp_to_bigint(&h0),
        &fp_to_bigint(&s0),
        &fp_to_bigint(&t0),
        p,
        steps,
        modulus,
    );
    let mut out = lift_tree(&g, left, p, steps, modulus);
    out.extend(lift_tree(&h, right, p, steps, modulus));
    out
}

/// One quadratic Hensel chain: lifts f = g*h with s*g + t*h = 1 from mod p
/// to mod p^(2^steps).
#[allow(clippy::too_many_arguments)]
fn lift_pair(
    f: &[BigInt],
    g0: &[BigInt],
    h0: &[BigInt],
    s0: &[BigInt],
    t0: &[BigInt],
    p: u64,
    steps: u32,
    modulus: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let deg_f = f.len() - 1;
    let deg_g = g0.len() - 1;
    let deg_h = h0.len() - 1;
    let mut m = BigInt::from(p);
    let (mut g, mut h, mut s, mut t) = (g0.to_vec(), h0.to_vec(), s0.to_vec(), t0.to_vec());
    for _ in 0..steps {
        let m2 = &m * &m;
        let f_step = zmod_poly(&zmod_poly(f, modulus), &m2);
        // e = f - g*h; split t*e across g so g stays monic of fixed degree.
        let e = zsub_mod(&f_step, &zmul_mod(&g, &h, &m2), &m2);
        let (quo, rem) = zdivrem_mod(&zmul_mod(&t, &e, &m2), &g, &m2);
        g = ztrim_bounded(zadd_mod(&g, &rem, &m2), deg_g, &m2);
        let se = zmul_mod(&s, &e, &m2);
        let qh = zmul_mod(&quo, &h, &m2);
        h = ztrim_bounded(zadd_mod(&zadd_mod(&h, &se, &m2), &qh, &m2), deg_f - deg_g, &m2);
        // Refresh the Bezout pair: b = s*g + t*h - 1.
        let mut b = zadd_mod(&zmul_mod(&s, &g, &m2), &zmul_mod(&t, &h, &m2), &m2);
        b = zsub_mod(&b, &[BigInt::one()], &m2);
        let (c, d) = zdivrem_mod(&zmul_mod(&s, &b, &m2), &h, &m2);
        s = ztrim_bounded(zsub_mod(&s, &d, &m2), deg_h - 1, &m2);
        let tb = zmul_mod(&t, &b, &m2);
        let cg = zmul_mod(&c, &g, &m2);
        t = ztrim_bounded(zsub_mod(&zsub_mod(&t, &tb, &m2), &cg, &m2), deg_g - 1, &m2);
        m = m2;
    }
    assert_eq!(&m, modulus, "lift chain must end at the target modulus");
    (g, h)
}

// --- integer / modular polynomial helpers (coefficients ascending) --------

fn ztrim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Trims zeros, asserting the true degree stays within `max_deg`.
fn ztrim_bounded(v: Vec<BigInt>, max_deg: usize, _m: &BigInt) -> Vec<BigInt> {
    let v = ztrim(v);
    assert!(
        v.len() <= max_deg + 1,
        "lifted polynomial exceeds its degree bound"
    );
    v
}

fn bnorm(a: BigInt, m: &BigInt) -> BigInt {
    let r = a % m;
    if r.is_negative() {
        r + m
    } else {
        r
    }
}

fn zmod_poly(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    ztrim(v.iter().map(|c| bnorm(c.clone(), m)).collect())
}

fn zadd_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    let zero = BigInt::zero();
    for i in 0..n {
        let x = a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero);
        out.push(bnorm(x, m));
    }
    ztrim(out)
}

fn zsub_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    let zero = BigInt::zero();
    for i in 0..n {
        let x = a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero);
        out.push(bnorm(x, m));
    }
    ztrim(out)
}

fn zmul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(out.into_iter().map(|c| bnorm(c, m)).collect())
}

/// Division with remainder mod m by a divisor whose leading coefficient is
/// congruent to 1 mod a divisor of m (a unit in Z/m).
fn zdivrem_mod(a: &[BigInt], d: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    assert!(!d.is_empty());
    let dn = d.len() - 1;
    let lead = d.last().unwrap();
    // lead = 1 + p*u with (p*u)^2 = 0 mod m, so the inverse is 2 - lead.
    let lead_inv = if lead.is_one() {
        BigInt::one()
    } else {
        bnorm(BigInt::from(2) - lead, m)
    };
    debug_assert!(bnorm(lead * &lead_inv, m).is_one(), "divisor lead must be a unit");
    let mut rem: Vec<BigInt> = a.to_vec();
    if rem.len() <= dn {
        return (Vec::new(), ztrim(rem));
    }
    let mut quo = vec![BigInt::zero(); rem.len() - dn];
    while rem.len() > dn {
        let top = rem.last().unwrap().clone();
        let k = rem.len() - 1 - dn;
        if !top.is_zero() {
            let q = bnorm(&top * &lead_inv, m);
            for i in 0..dn {
                let t = &rem[k + i] - &q * &d[i];
                rem[k + i] = bnorm(t, m);
            }
            quo[k] = q;
        }
        rem.pop();
    }
    (ztrim(quo), ztrim(rem))
}

/// Exact division over Z by a monic divisor; None if it does not divide.
fn zdiv_exact_monic(a: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
    assert!(d.last().is_some_and(|c| c.is_one()), "divisor must be monic");
    let dn = d.len() - 1;
    if a.len() <= dn {
        return None;
    }
    let mut rem = a.to_vec();
    let mut quo = vec![BigInt::zero(); rem.len() - dn];
    while rem.len() > dn {
        let top = rem.last().unwrap().clone();
        let k = rem.len() - 1 - dn;
        if !top.is_zero() {
            for i in 0..dn {
                let t = &rem[k + i] - &top * &d[i];
                rem[k + i] = t;
            }
            quo[k] = top;
        }
        rem.pop();
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(ztrim(quo))
    } else {
        None
    }
}

/// Symmetric representative in (-m/2, m/2] of each coefficient.
fn zsymmetric(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    ztrim(
        v.iter()
            .map(|c| {
                let c = bnorm(c.clone(), m);
                if &c * 2 > *m {
                    c - m
                } else {
                    c
                }
            })
            .collect(),
    )
}

// --- arithmetic mod a small prime (coefficients ascending, u64) -----------

fn is_small_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn fp_from_bigint(v: &[BigInt], p: u64) -> Vec<u64> {
    let bp = BigInt::from(p);
    fp_trim(v.iter().map(|c| u64::try_from(bnorm(c.clone(), &bp)).unwrap()).collect())
}

fn fp_to_bigint(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

fn fp_trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn fp_deg(v: &[u64]) -> usize {
    assert!(!v.is_empty(), "degree of zero");
    v.len() - 1
}

fn fp_powmod_scalar(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn fp_inv_scalar(a: u64, p: u64) -> u64 {
    fp_powmod_scalar(a, p - 2, p)
}

fn fp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push((p + a.get(i).copied().unwrap_or(0) - b.get(i).copied().unwrap_or(0)) % p);
    }
    fp_trim(out)
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(out)
}

fn fp_scale(a: &[u64], c: u64, p: u64) -> Vec<u64> {
    fp_trim(a.iter().map(|&x| x * c % p).collect())
}

fn fp_product(fs: &[Vec<u64>], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    for f in fs {
        acc = fp_mul(&acc, f, p);
    }
    acc
}

fn fp_divrem(a: &[u64], d: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(!d.is_empty(), "division by zero polynomial");
    let dn = d.len() - 1;
    let lead_inv = fp_inv_scalar(*d.last().unwrap(), p);
    let mut rem = a.to_vec();
    if rem.len() <= dn {
        return (Vec::new(), fp_trim(rem));
    }
    let mut quo = vec![0u64; rem.len() - dn];
    while rem.len() > dn {
        let top = *rem.last().unwrap();
        let k = rem.len() - 1 - dn;
        if top != 0 {
            let q = top * lead_inv % p;
            for i in 0..dn {
                rem[k + i] = (rem[k + i] + p - q * d[i] % p) % p;
            }
            quo[k] = q;
        }
        rem.pop();
    }
    (fp_trim(quo), fp_trim(rem))
}

fn fp_monic(a: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() {
        return Vec::new();
    }
    fp_scale(a, fp_inv_scalar(*a.last().unwrap(), p), p)
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let (_, r) = fp_divrem(&x, &y, p);
        x = y;
        y = r;
    }
    fp_monic(&x, p)
}

fn fp_derivative(a: &[u64], p: u64) -> Vec<u64> {
    if a.len() <= 1 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(a.len() - 1);
    for (i, &c) in a.iter().enumerate().skip(1) {
        out.push(c * (i as u64 % p) % p);
    }
    fp_trim(out)
}

/// Bezout pair for coprime monic g, h mod p: s*g + t*h = 1 with
/// deg s < deg h and deg t < deg g.
fn fp_bezout(g: &[u64], h: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let (mut r0, mut r1) = (g.to_vec(), h.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let qs = fp_mul(&q, &s1, p);
        let s = fp_sub(&s0, &qs, p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    assert_eq!(fp_deg(&r0), 0, "modular factors must be coprime");
    let scale = fp_inv_scalar(r0[0], p);
    let s_raw = fp_scale(&s0, scale, p);
    // Reduce s mod h, then recover t by exact division.
    let (_, s) = fp_divrem(&s_raw, h, p);
    let sg = fp_mul(&s, g, p);
    let num = fp_sub(&[1], &sg, p);
    let (t, rem) = fp_divrem(&num, h, p);
    assert!(rem.is_empty(), "Bezout recovery must divide exactly");
    (s, t)
}

/// Deterministic Berlekamp splitting of a monic squarefree polynomial mod a
/// small odd prime. Returns the monic irreducible factors.
fn berlekamp(f: &[u64], p: u64) -> Vec<Vec<u64>> {
    let n = fp_deg(f);
    if n == 1 {
        return vec![f.to_vec()];
    }
    // Rows of the Frobenius matrix: x^(p*i) mod f.
    let xp = {
        let x = vec![0u64, 1];
        let mut acc = vec![1u64];
        let mut base = x.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = fp_divrem(&fp_mul(&acc, &base, p), f, p).1;
            }
            base = fp_divrem(&fp_mul(&base, &base, p), f, p).1;
            e >>= 1;
        }
        acc
    };
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut cur = vec![1u64];
    for _ in 0..n {
        let mut row = cur.clone();
        row.resize(n, 0);
        rows.push(row);
        cur = fp_divrem(&fp_mul(&cur, &xp, p), f, p).1;
    }
    // Kernel of (Q - I) acting on coefficient rows: solve (Q - I)^T v = 0.
    let mut a = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            a[j][i] = rows[i][j];
        }
    }
    for i in 0..n {
        a[i][i] = (a[i][i] + p - 1) % p;
    }
    let basis = fp_kernel(&mut a, p);
    let r = basis.len();
    let mut factors = vec![f.to_vec()];
    for v in &basis {
        if factors.len() == r {
            break;
        }
        let vp = fp_trim(v.clone());
        if vp.len() <= 1 {
            continue;
        }
        let mut next = Vec::new();
        for u in &factors {
            if fp_deg(u) == 1 {
                next.push(u.clone());
                continue;
            }
            let mut rem_u = u.clone();
            for c in 0..p {
                if fp_deg(&rem_u) == 0 {
                    break;
                }
                let shifted = fp_sub(&vp, &[c], p);
                let g = fp_gcd(&rem_u, &shifted, p);
                if !g.is_empty() && fp_deg(&g) > 0 && fp_deg(&g) < fp_deg(&rem_u) {
                    let (quo, r0) = fp_divrem(&rem_u, &g, p);
                    assert!(r0.is_empty());
                    next.push(g);
                    rem_u = fp_monic(&quo, p);
                }
            }
            if fp_deg(&rem_u) > 0 {
                next.push(rem_u);
            }
        }
        factors = next;
    }
    assert_eq!(factors.len(), r, "Berlekamp split must reach the kernel dimension");
    factors.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    factors
}

/// Kernel basis of a square matrix over F_p via full row reduction.
fn fp_kernel(a: &mut [Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(r) = (row..n).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, r);
        let inv = fp_inv_scalar(a[row][col], p);
        for j in 0..n {
            a[row][j] = a[row][j] * inv % p;
        }
        for i in 0..n {
            if i != row && a[i][col] != 0 {
                let factor = a[i][col];
                for j in 0..n {
                    a[i][j] = (a[i][j] + p - factor * a[row][j] % p) % p;
                }
            }
        }
        pivots.push((row, col));
        row += 1;
        if row == n {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for j in 0..n {
        if pivot_cols.contains(&j) {
            continue;
        }
        let mut v = vec![0u64; n];
        v[j] = 1;
        for &(r, c) in &pivots {
            v[c] = (p - a[r][j]) % p;
        }
        basis.push(v);
    }
    basis
}

// ---------------------------------------------------------------------------
// Extension towers: Trager's norm method.
// ---------------------------------------------------------------------------

fn factor_squarefree_tower(f: &UniPoly) -> Vec<UniPoly> {
    let k = f.field().clone();
    let base = k.base().unwrap().clone();
    let minpoly = k.minpoly();
    let theta = k.generator();
    let n = f.degree();
    let min_consts: Vec<UniPoly> = minpoly
        .coeffs()
        .iter()
        .map(|c| UniPoly::constant(base.clone(), c.clone()))
        .collect();
    for s in 0..200i64 {
        let shift = k.mul(&k.from_int(s), &theta);
        let neg_shift = k.neg(&shift);
        let g = f.compose_shift(&neg_shift);
        // Transpose K[x] into polynomials in the generator with coefficients
        // in base[x].
        let depth = k.step_degree();
        let mut tcoeffs: Vec<Vec<FieldElem>> = vec![vec![base.zero(); g.coeffs().len()]; depth];
        for (xi, c) in g.coeffs().iter().enumerate() {
            let v = match c {
                FieldElem::Ext(v) => v,
                _ => unreachable!("tower element expected"),
            };
            for (ti, cv) in v.iter().enumerate() {
                tcoeffs[ti][xi] = cv.clone();
            }
        }
        let gt: Vec<UniPoly> = tcoeffs
            .into_iter()
            .map(|cs| UniPoly::new(base.clone(), cs))
            .collect();
        let norm = resultant_poly_coeffs(&min_consts, &gt);
        if norm.is_zero() || norm.degree() == 0 || !norm.is_squarefree() {
            continue;
        }
        let parts = factor_squarefree_monic(&norm.monic());
        let mut out = Vec::new();
        for h in parts {
            let hk = UniPoly::new(
                k.clone(),
                h.coeffs().iter().map(|c| k.embed(c.clone())).collect(),
            );
            let gi = UniPoly::gcd(&g, &hk);
            if !gi.is_zero() && gi.degree() > 0 {
                out.push(gi.compose_shift(&shift));
            }
        }
        let total: usize = out.iter().map(|q| q.degree()).sum();
        assert_eq!(total, n, "norm factors must account for the full degree");
        return out;
    }
    panic!("no squarefree norm within the shift search bound");
}

/// Resultant of two polynomials given by their coefficient lists (ascending)
/// in the eliminated variable; entries live in a univariate polynomial ring,
/// and the determinant is taken fraction-free (Bareiss) with exact division.
pub fn resultant_poly_coeffs(a: &[UniPoly], b: &[UniPoly]) -> UniPoly {
    let field = a
        .iter()
        .chain(b.iter())
        .next()
        .expect("resultant of empty coefficient lists")
        .field()
        .clone();
    let mut a: Vec<UniPoly> = a.to_vec();
    let mut b: Vec<UniPoly> = b.to_vec();
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    while b.last().is_some_and(|c| c.is_zero()) {
        b.pop();
    }
    if a.is_empty() || b.is_empty() {
        return UniPoly::zero(field);
    }
    let da = a.len() - 1;
    let db = b.len() - 1;
    if da == 0 {
        return pow_poly(&a[0], db);
    }
    if db == 0 {
        return pow_poly(&b[0], da);
    }
    let nn = da + db;
    let zero = UniPoly::zero(field.clone());
    let mut m = vec![vec![zero.clone(); nn]; nn];
    for i in 0..db {
        for (j, c) in a.iter().rev().enumerate() {
            m[i][i + j] = c.clone();
        }
    }
    for i in 0..da {
        for (j, c) in b.iter().rev().enumerate() {
            m[db + i][i + j] = c.clone();
        }
    }
    bareiss_determinant(m, field)
}

fn pow_poly(f: &UniPoly, e: usize) -> UniPoly {
    let mut acc = UniPoly::one(f.field().clone());
    for _ in 0..e {
        acc = acc.mul(f);
    }
    acc
}

/// Fraction-free determinant over a polynomial ring with row pivoting.
fn bareiss_determinant(mut m: Vec<Vec<UniPoly>>, field: CoeffField) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::one(field);
    }
    let mut sign_flip = false;
    let mut prev = UniPoly::one(field.clone());
    for k in 0..n {
        let Some(pivot_row) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return UniPoly::zero(field);
        };
        if pivot_row != k {
            m.swap(pivot_row, k);
            sign_flip = !sign_flip;
        }
        if k == n - 1 {
            break;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev);
            }
            m[i][k] = UniPoly::zero(field.clone());
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
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
    fn squarefree_split_of_powers() {
        // (x-1)^2 (x+2)^3
        let f = qpoly(&[-1, 1]);
        let g = qpoly(&[2, 1]);
        let prod = f.mul(&f).mul(&g.mul(&g).mul(&g));
        let parts = squarefree_decomposition(&prod);
        assert_eq!(parts, vec![(f, 2), (g, 3)]);
        // x^3 alone
        let parts = squarefree_decomposition(&qpoly(&[0, 0, 0, 1]));
        assert_eq!(parts, vec![(qpoly(&[0, 1]), 3)]);
    }

    #[test]
    fn factor_cyclotomic_product() {
        // x^6 - 1 = (x-1)(x+1)(x^2+x+1)(x^2-x+1)
        let f = qpoly(&[-1, 0, 0, 0, 0, 0, 1]);
        let fs = factor(&f);
        let expected = vec![
            (qpoly(&[-1, 1]), 1),
            (qpoly(&[1, 1]), 1),
            (qpoly(&[1, -1, 1]), 1),
            (qpoly(&[1, 1, 1]), 1),
        ];
        assert_eq!(fs, expected);
    }

    #[test]
    fn factor_requires_recombination() {
        // x^4 - 10x^2 + 1 is irreducible over Q but splits mod every prime.
        let f = qpoly(&[1, 0, -10, 0, 1]);
        let fs = factor(&f);
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].0, f);
        assert!(is_irreducible(&f));
    }

    #[test]
    fn factor_non_monic_input() {
        // 12x^2 - x - 1 = 12(x - 1/3)(x + 1/4)
        let f = qpoly(&[-1, -1, 12]);
        let fs = factor(&f);
        assert_eq!(fs.len(), 2);
        let roots: Vec<Rational> = fs
            .iter()
            .map(|(g, _)| match &g.coeffs()[0] {
                FieldElem::Rat(r) => -r.clone(),
                _ => unreachable!(),
            })
            .collect();
        assert!(roots.contains(&Rational::ratio(1, 3)));
        assert!(roots.contains(&Rational::ratio(-1, 4)));
    }

    #[test]
    fn factor_over_quadratic_extension() {
        // Over Q(t) with t^2 = 2: x^2 - 2 = (x - t)(x + t), x^2 - 3 stays prime.
        let k = q().extend(&qpoly(&[-2, 0, 1])).unwrap();
        let x2m2 = UniPoly::new(k.clone(), vec![k.from_int(-2), k.zero(), k.one()]);
        let fs = factor_squarefree_monic(&x2m2);
        assert_eq!(fs.len(), 2);
        let t = k.generator();
        let prod = fs[0].mul(&fs[1]);
        assert_eq!(prod, x2m2);
        assert!(fs.iter().any(|g| g.coeffs()[0] == k.neg(&t)));
        let x2m3 = UniPoly::new(k.clone(), vec![k.from_int(-3), k.zero(), k.one()]);
        assert!(is_irreducible(&x2m3));
    }

    #[test]
    fn resultant_of_linear_pencils() {
        // Res_y(y - x^2, y - x) = x^2 - x.
        let f = q();
        let x = UniPoly::var(f.clone());
        let x2 = x.mul(&x);
        let one = UniPoly::one(f.clone());
        let res = resultant_poly_coeffs(&[x2.neg(), one.clone()], &[x.neg(), one]);
        assert_eq!(res, x2.sub(&x));
    }

    #[test]
    fn resultant_detects_common_factor() {
        // Res_y(y^2 - x^2, y - x) = 0 identically.
        let f = q();
        let x = UniPoly::var(f.clone());
        let one = UniPoly::one(f.clone());
        let zero = UniPoly::zero(f.clone());
        let res = resultant_poly_coeffs(
            &[x.mul(&x).neg(), zero, one.clone()],
            &[x.neg(), one],
        );
        assert!(res.is_zero());
    }
}
