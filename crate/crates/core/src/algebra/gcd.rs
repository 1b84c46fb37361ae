//! Multivariate gcd over `Q(ζ_d)` by recursive content / primitive-part
//! reduction with a primitive pseudo-remainder sequence in the main variable.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::LaurentPoly;

fn main_var(p: &LaurentPoly) -> Option<usize> {
    p.terms()
        .keys()
        .filter_map(|e| e.iter().rposition(|&x| x != 0))
        .max()
}

fn degree_in(p: &LaurentPoly, v: usize) -> i32 {
    p.terms().keys().map(|e| e[v]).max().unwrap_or(0)
}

/// Coefficients of `p` viewed as a polynomial in variable `v`.
fn coefficients_in(p: &LaurentPoly, v: usize) -> BTreeMap<i32, LaurentPoly> {
    let mut groups: BTreeMap<i32, Vec<_>> = BTreeMap::new();
    for (e, c) in p.terms() {
        let mut e2 = e.clone();
        e2[v] = 0;
        groups.entry(e[v]).or_default().push((e2, c.clone()));
    }
    groups
        .into_iter()
        .map(|(k, ts)| (k, LaurentPoly::from_terms(p.vars(), p.order(), ts)))
        .collect()
}

fn x_pow(p: &LaurentPoly, v: usize, k: i32) -> Vec<i32> {
    let mut e = vec![0; p.vars().len()];
    e[v] = k;
    e
}

fn monic(p: LaurentPoly) -> LaurentPoly {
    match p.leading() {
        Some((_, c)) if !c.is_one() => {
            let inv = c.inv().expect("nonzero leading coefficient");
            p.scale(&inv)
        }
        _ => p,
    }
}

/// Pseudo-remainder of `a` by `b` in variable `v`, up to a nonzero factor
/// free of `v`.
fn pseudo_remainder(a: &LaurentPoly, b: &LaurentPoly, v: usize) -> LaurentPoly {
    let db = degree_in(b, v);
    let lb = coefficients_in(b, v).remove(&db).expect("leading coefficient");
    let mut r = a.clone();
    while !r.is_zero() {
        let dr = degree_in(&r, v);
        if dr < db {
            break;
        }
        let lr = coefficients_in(&r, v).remove(&dr).expect("leading coefficient");
        let shifted = b.mul(&lr).shift(&x_pow(b, v, dr - db));
        r = r.mul(&lb).sub(&shifted);
    }
    r
}

fn content_in(p: &LaurentPoly, v: usize) -> LaurentPoly {
    coefficients_in(p, v)
        .into_values()
        .fold(LaurentPoly::zero(p.vars(), p.order()), |g, c| gcd_polynomial(&g, &c))
}

fn primitive_part_in(p: &LaurentPoly, v: usize) -> LaurentPoly {
    let c = content_in(p, v);
    p.div_exact_polynomial(&c).expect("content divides")
}

/// Monic gcd of two polynomials (nonnegative exponents).
pub(crate) fn gcd_polynomial(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return monic(b.clone());
    }
    if b.is_zero() {
        return monic(a.clone());
    }
    let one = LaurentPoly::one(a.vars(), a.order());
    let v = match (main_var(a), main_var(b)) {
        (None, _) | (_, None) => return one,
        (Some(x), Some(y)) => x.max(y),
    };
    if degree_in(a, v) == 0 {
        return gcd_polynomial(a, &content_in(b, v));
    }
    if degree_in(b, v) == 0 {
        return gcd_polynomial(&content_in(a, v), b);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd_polynomial(&ca, &cb);
    let mut p = a.div_exact_polynomial(&ca).expect("content divides");
    let mut q = b.div_exact_polynomial(&cb).expect("content divides");
    if degree_in(&p, v) < degree_in(&q, v) {
        std::mem::swap(&mut p, &mut q);
    }
    let g = loop {
        let r = pseudo_remainder(&p, &q, v);
        if r.is_zero() {
            break q;
        }
        if degree_in(&r, v) == 0 {
            break one;
        }
        p = q;
        q = monic(primitive_part_in(&r, v));
    };
    monic(c.mul(&primitive_part_in(&g, v)))
}

/// `gcd(numerators) / lcm(denominators)` of the rational coefficients.
fn rational_content(p: &LaurentPoly) -> BigRational {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for c in p.terms().values() {
        let q = c.as_rational().expect("rational coefficients");
        num = num.gcd(q.numer());
        den = den.lcm(q.denom());
    }
    BigRational::new(num, den)
}

/// Greatest common divisor in `Q(ζ_d)[vars, vars⁻¹]`.
///
/// The result is a polynomial with every minimum exponent zero. For `d = 1`
/// its content is the gcd of the input contents and its leading coefficient
/// is positive; otherwise it is monic. The gcd of no inputs, or of only
/// zeros, is zero.
pub fn laurent_gcd(ps: &[LaurentPoly]) -> LaurentPoly {
    let nonzero: Vec<&LaurentPoly> = ps.iter().filter(|p| !p.is_zero()).collect();
    let Some(first) = nonzero.first() else {
        return match ps.first() {
            Some(p) => LaurentPoly::zero(p.vars(), p.order()),
            None => LaurentPoly::zero(&[], 1),
        };
    };
    let mut g = first.to_polynomial();
    g = monic(g);
    for p in &nonzero[1..] {
        if g.is_one() {
            break;
        }
        g = gcd_polynomial(&g, &p.to_polynomial());
    }
    if g.order() != 1 || !nonzero.iter().all(|p| p.terms().values().all(|c| c.as_rational().is_some())) {
        return g;
    }
    let content = nonzero
        .iter()
        .map(|p| rational_content(p))
        .reduce(|a, b| BigRational::new(a.numer().gcd(b.numer()), a.denom().lcm(b.denom())))
        .unwrap();
    // g is monic; clear denominators and make primitive
    let prim = g.scale_rational(&rational_content(&g).recip());
    let prim = match prim.leading() {
        Some((_, c)) if c.as_rational().is_some_and(|q| q.is_negative()) => prim.neg(),
        _ => prim,
    };
    prim.scale_rational(&content)
}
