use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::Cyclo;
use crate::{Error, Result};

/// Exponent vector, one entry per variable; entries may be negative.
pub type Monomial = Vec<i32>;

/// Multivariate Laurent polynomial over `Q(ζ_d)`.
///
/// Terms are kept in a map keyed by exponent vector (lexicographic order);
/// zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: Arc<[String]>,
    d: u32,
    terms: BTreeMap<Monomial, Cyclo>,
}

impl LaurentPoly {
    pub fn zero(vars: &[String], d: u32) -> Self {
        LaurentPoly {
            vars: vars.into(),
            d,
            terms: BTreeMap::new(),
        }
    }

    fn empty_like(&self) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            d: self.d,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &[String], d: u32) -> Self {
        Self::constant(vars, Cyclo::one(d))
    }

    pub fn constant(vars: &[String], c: Cyclo) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn from_int(vars: &[String], d: u32, n: i64) -> Self {
        Self::constant(vars, Cyclo::from_int(d, n))
    }

    pub fn monomial(vars: &[String], exps: Monomial, c: Cyclo) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars, c.order());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The variable `vars[i]` raised to the power one.
    pub fn var(vars: &[String], d: u32, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, e, Cyclo::one(d))
    }

    /// Univariate polynomial in `var` from `(exponent, integer coefficient)` pairs.
    pub fn univariate(var: &str, d: u32, terms: &[(i32, i64)]) -> Self {
        let vars = vec![var.to_string()];
        let mut p = Self::zero(&vars, d);
        for &(e, c) in terms {
            p.add_term(vec![e], Cyclo::from_int(d, c));
        }
        p
    }

    pub fn from_terms(vars: &[String], d: u32, terms: impl IntoIterator<Item = (Monomial, Cyclo)>) -> Self {
        let mut p = Self::zero(vars, d);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Monomial, c: Cyclo) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> u32 {
        self.d
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Cyclo> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    /// True for `c · monomial` with `c` nonzero.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// Coefficient of the lexicographically largest exponent vector.
    pub fn leading(&self) -> Option<(&Monomial, &Cyclo)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, e: &[i32]) -> Option<&Cyclo> {
        self.terms.get(e)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch);
        }
        if self.d != other.d {
            return Err(Error::OrderMismatch(self.d, other.d));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul(other))
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert!(self.check(other).is_ok());
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert!(self.check(other).is_ok());
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            d: self.d,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert!(self.check(other).is_ok());
        let mut out = self.empty_like();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Monomial = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        if c.is_zero() {
            return self.empty_like();
        }
        LaurentPoly {
            vars: self.vars.clone(),
            d: self.d,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x.mul(c))).collect(),
        }
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        self.scale(&Cyclo::from_rational(self.d, q.clone()))
    }

    pub fn shift(&self, by: &[i32]) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            d: self.d,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(by).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.vars, self.d);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Per-variable minimum exponent over the support (zeros for the zero polynomial).
    pub fn min_exponents(&self) -> Monomial {
        let mut mins: Option<Monomial> = None;
        for e in self.terms.keys() {
            match &mut mins {
                None => mins = Some(e.clone()),
                Some(m) => m.iter_mut().zip(e).for_each(|(a, b)| *a = (*a).min(*b)),
            }
        }
        mins.unwrap_or_else(|| vec![0; self.vars.len()])
    }

    pub fn max_exponents(&self) -> Monomial {
        let mut maxs: Option<Monomial> = None;
        for e in self.terms.keys() {
            match &mut maxs {
                None => maxs = Some(e.clone()),
                Some(m) => m.iter_mut().zip(e).for_each(|(a, b)| *a = (*a).max(*b)),
            }
        }
        maxs.unwrap_or_else(|| vec![0; self.vars.len()])
    }

    /// Multiplies by the monomial that moves every minimum exponent to zero.
    pub fn to_polynomial(&self) -> Self {
        let m: Monomial = self.min_exponents().iter().map(|x| -x).collect();
        self.shift(&m)
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    /// Exact quotient `self / divisor` in the Laurent ring, if one exists.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.empty_like());
        }
        let ma = self.min_exponents();
        let mb = divisor.min_exponents();
        let q = self.to_polynomial().div_exact_polynomial(&divisor.to_polynomial())?;
        let offset: Monomial = ma.iter().zip(&mb).map(|(a, b)| a - b).collect();
        Some(q.shift(&offset))
    }

    /// Exact division of polynomials with nonnegative exponents, lex order.
    pub(crate) fn div_exact_polynomial(&self, divisor: &Self) -> Option<Self> {
        let (lb, cb) = divisor.leading()?;
        let lb = lb.clone();
        let cb_inv = cb.inv().ok()?;
        let mut rem = self.clone();
        let mut quot = self.empty_like();
        while let Some((la, ca)) = rem.leading() {
            let e: Monomial = la.iter().zip(&lb).map(|(a, b)| a - b).collect();
            if e.iter().any(|&x| x < 0) {
                return None;
            }
            let c = ca.mul(&cb_inv);
            let term = Self::monomial(&self.vars, e, c);
            rem = rem.sub(&divisor.mul(&term));
            quot = quot.add(&term);
        }
        Some(quot)
    }

    /// Ring homomorphism sending variable `i` to the monomial `images[i]` in `new_vars`.
    pub fn specialize(&self, new_vars: &[String], images: &[Monomial]) -> Self {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        let mut out = Self::zero(new_vars, self.d);
        for (e, c) in &self.terms {
            let mut img = vec![0; new_vars.len()];
            for (k, &x) in e.iter().enumerate() {
                for (slot, y) in img.iter_mut().zip(&images[k]) {
                    *slot += x * y;
                }
            }
            out.add_term(img, c.clone());
        }
        out
    }

    /// Maps every coefficient, keeping exponents.
    pub fn map_coefficients(&self, d: u32, f: impl Fn(&Cyclo) -> Cyclo) -> Self {
        let mut out = Self::zero(&self.vars, d);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Canonical representative of `{± ζ^j · monomial · self}`.
    ///
    /// The support is shifted so every variable has minimum exponent 0, then
    /// among the `2d` sign/root rotations the one whose coefficient sequence,
    /// read from the highest term down, is largest is kept. So for `d = 1`
    /// the leading coefficient ends up positive.
    pub fn unit_normalize(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let base = self.to_polynomial();
        let mut best: Option<Self> = None;
        for j in 0..self.d as i64 {
            let u = Cyclo::root_power(self.d, j);
            for cand in [base.scale(&u), base.scale(&u.neg())] {
                let better = match &best {
                    None => true,
                    Some(b) => cand.terms.values().rev().cmp(b.terms.values().rev()).is_gt(),
                };
                if better {
                    best = Some(cand);
                }
            }
        }
        best.unwrap()
    }

    /// Same orbit under multiplication by `± ζ^j · monomial`.
    pub fn unit_equivalent(&self, other: &Self) -> bool {
        self.vars == other.vars && self.d == other.d && self.unit_normalize() == other.unit_normalize()
    }

    /// Total degree spread in a single variable: `max - min` exponent.
    pub fn span(&self, var: usize) -> i32 {
        if self.is_zero() {
            return 0;
        }
        self.max_exponents()[var] - self.min_exponents()[var]
    }

    fn monomial_string(&self, e: &[i32]) -> String {
        let parts: Vec<String> = e
            .iter()
            .zip(self.vars.iter())
            .filter(|(&x, _)| x != 0)
            .map(|(&x, v)| if x == 1 { v.clone() } else { format!("{v}^{x}") })
            .collect();
        parts.join("*")
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in ascending exponent order, e.g. `1 - 2*t + t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let m = self.monomial_string(e);
            match c.as_rational() {
                Some(q) => {
                    let neg = q.is_negative();
                    if first {
                        if neg {
                            write!(f, "-")?;
                        }
                    } else {
                        write!(f, "{}", if neg { " - " } else { " + " })?;
                    }
                    let mag = q.abs();
                    if m.is_empty() {
                        write!(f, "{mag}")?;
                    } else if mag.is_one() {
                        write!(f, "{m}")?;
                    } else {
                        write!(f, "{mag}*{m}")?;
                    }
                }
                None => {
                    if !first {
                        write!(f, " + ")?;
                    }
                    if m.is_empty() {
                        write!(f, "({c})")?;
                    } else {
                        write!(f, "({c})*{m}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
