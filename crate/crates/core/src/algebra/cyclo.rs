use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub fn euler_phi(d: u32) -> usize {
    (1..=d).filter(|k| k.gcd(&d) == 1).count()
}

/// Integer coefficients of the `d`-th cyclotomic polynomial, ascending degree.
///
/// Computed as `x^d - 1` divided by `Φ_e` for every proper divisor `e` of `d`.
pub fn cyclotomic_polynomial(d: u32) -> Vec<BigInt> {
    assert!(d >= 1, "cyclotomic polynomial of order 0");
    let mut num = vec![BigInt::zero(); d as usize + 1];
    num[0] = BigInt::from(-1);
    num[d as usize] = BigInt::one();
    for e in (1..d).filter(|e| d % e == 0) {
        num = div_exact_monic(&num, &cyclotomic_polynomial(e));
    }
    num
}

/// Quotient of `a` by the monic polynomial `b`; the division must be exact.
fn div_exact_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let dq = rem.len() - 1 - db;
    let mut q = vec![BigInt::zero(); dq + 1];
    for k in (0..=dq).rev() {
        let c = rem[k + db].clone();
        if c.is_zero() {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            rem[k + i] -= &c * bi;
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    q
}

fn modulus_for(d: u32) -> Arc<[BigRational]> {
    let poly: Vec<BigRational> = match d {
        1 => vec![BigRational::from_integer((-1).into()), BigRational::one()],
        2 => vec![BigRational::one(), BigRational::one()],
        _ => cyclotomic_polynomial(d)
            .into_iter()
            .map(BigRational::from_integer)
            .collect(),
    };
    poly.into()
}

/// Element of the cyclotomic field `Q(ζ_d)`, stored as a rational coefficient
/// vector of length `φ(d)` in the power basis `1, ζ, ζ², …`.
#[derive(Clone)]
pub struct Cyclo {
    d: u32,
    coeffs: Vec<BigRational>,
    modulus: Arc<[BigRational]>,
}

impl Cyclo {
    /// Reduces an arbitrary-length coefficient vector modulo `Φ_d`.
    pub fn new(d: u32, coeffs: Vec<BigRational>) -> Self {
        assert!(d >= 1, "root-of-unity order must be positive");
        Self::reduce_with(d, modulus_for(d), coeffs)
    }

    fn reduce_with(d: u32, modulus: Arc<[BigRational]>, mut coeffs: Vec<BigRational>) -> Self {
        let phi = modulus.len() - 1;
        while coeffs.len() > phi {
            let c = coeffs.pop().unwrap();
            if c.is_zero() {
                continue;
            }
            let shift = coeffs.len() - phi;
            // modulus is monic: x^phi == -(lower terms)
            for (i, m) in modulus[..phi].iter().enumerate() {
                coeffs[shift + i] -= &c * m;
            }
        }
        coeffs.resize(phi, BigRational::zero());
        Cyclo { d, coeffs, modulus }
    }

    pub fn zero(d: u32) -> Self {
        Self::new(d, Vec::new())
    }

    pub fn one(d: u32) -> Self {
        Self::from_rational(d, BigRational::one())
    }

    pub fn from_int(d: u32, n: i64) -> Self {
        Self::from_rational(d, BigRational::from_integer(n.into()))
    }

    pub fn from_rational(d: u32, q: BigRational) -> Self {
        Self::new(d, vec![q])
    }

    /// `ζ_d^k` for any integer `k`.
    pub fn root_power(d: u32, k: i64) -> Self {
        let e = k.rem_euclid(d as i64) as usize;
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = BigRational::one();
        Self::new(d, coeffs)
    }

    pub fn order(&self) -> u32 {
        self.d
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.first().is_some_and(One::is_one) && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            self.coeffs.first()
        } else {
            None
        }
    }

    fn check(&self, other: &Cyclo) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.d, other.d))
        }
    }

    pub fn try_add(&self, other: &Cyclo) -> Result<Cyclo> {
        self.check(other)?;
        Ok(self.add(other))
    }

    pub fn try_mul(&self, other: &Cyclo) -> Result<Cyclo> {
        self.check(other)?;
        Ok(self.mul(other))
    }

    pub fn add(&self, other: &Cyclo) -> Cyclo {
        debug_assert_eq!(self.d, other.d);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Cyclo {
            d: self.d,
            coeffs,
            modulus: self.modulus.clone(),
        }
    }

    pub fn sub(&self, other: &Cyclo) -> Cyclo {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Cyclo {
        Cyclo {
            d: self.d,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            modulus: self.modulus.clone(),
        }
    }

    pub fn scale(&self, q: &BigRational) -> Cyclo {
        Cyclo {
            d: self.d,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
            modulus: self.modulus.clone(),
        }
    }

    pub fn mul(&self, other: &Cyclo) -> Cyclo {
        debug_assert_eq!(self.d, other.d);
        if self.coeffs.len() == 1 {
            return other.scale(&self.coeffs[0]);
        }
        let mut prod = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        Self::reduce_with(self.d, self.modulus.clone(), prod)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against `Φ_d`.
    pub fn inv(&self) -> Result<Cyclo> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            return Ok(Cyclo::from_rational(self.d, self.coeffs[0].recip()));
        }
        // invariant: r0 = s0 * a (mod Φ), r1 = s1 * a (mod Φ)
        let mut r0: Vec<BigRational> = self.modulus.to_vec();
        let mut r1: Vec<BigRational> = trim(self.coeffs.clone());
        let mut s0: Vec<BigRational> = Vec::new();
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while r1.len() > 1 {
            let (q, r) = poly_divrem(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r1 is a nonzero constant since Φ_d is irreducible
        let c = r1[0].recip();
        Ok(Self::reduce_with(
            self.d,
            self.modulus.clone(),
            s1.into_iter().map(|v| v * &c).collect(),
        ))
    }

    pub fn div(&self, other: &Cyclo) -> Result<Cyclo> {
        self.check(other)?;
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, mut e: u32) -> Cyclo {
        let mut base = self.clone();
        let mut acc = Cyclo::one(self.d);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Image under `ζ ↦ ζ^k` (a field automorphism when `gcd(k, d) = 1`).
    pub fn substitute_root_power(&self, k: i64) -> Cyclo {
        let mut acc = Cyclo::zero(self.d);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&Cyclo::root_power(self.d, k * i as i64).scale(c));
        }
        acc
    }
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = trim(b.to_vec());
    let mut rem = trim(a.to_vec());
    let lead = b.last().expect("division by zero polynomial").clone();
    let mut q = vec![BigRational::zero(); rem.len().saturating_sub(b.len()) + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() / &lead;
        for (i, bi) in b.iter().enumerate() {
            rem[shift + i] -= &c * bi;
        }
        q[shift] = c;
        rem = trim(rem);
    }
    (trim(q), rem)
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclo {}

impl PartialOrd for Cyclo {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the power-basis coefficients, highest power first.
impl Ord for Cyclo {
    fn cmp(&self, other: &Self) -> Ordering {
        self.d
            .cmp(&other.d)
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl std::hash::Hash for Cyclo {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.d.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclo {
    /// Terms in ascending powers of the root, written `z<d>^k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "z{}", self.d)?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn root_arithmetic() {
        let z2 = Cyclo::root_power(2, 1);
        assert!(z2.mul(&z2).is_one());

        let z6 = Cyclo::root_power(6, 1);
        assert_eq!(z6.mul(&z6), z6.sub(&Cyclo::one(6)));

        let z4 = Cyclo::root_power(4, 1);
        assert_eq!(z4.inv().unwrap(), z4.neg());
    }

    #[test]
    fn root_is_a_zero_of_its_polynomial() {
        for d in 1..=15 {
            let z = Cyclo::root_power(d, 1);
            let mut acc = Cyclo::zero(d);
            for (k, c) in cyclotomic_polynomial(d).into_iter().enumerate() {
                acc = acc.add(&z.pow(k as u32).scale(&BigRational::from_integer(c)));
            }
            assert!(acc.is_zero(), "Φ_{d}(ζ_{d}) != 0");
        }
    }

    #[test]
    fn errors() {
        assert_eq!(Cyclo::zero(5).inv(), Err(Error::DivisionByZero));
        assert_eq!(
            Cyclo::one(3).try_add(&Cyclo::one(4)),
            Err(Error::OrderMismatch(3, 4))
        );
    }

    #[test]
    fn display() {
        let z6 = Cyclo::root_power(6, 1);
        assert_eq!(z6.mul(&z6).to_string(), "-1 + z6");
        assert_eq!(Cyclo::from_int(1, -3).to_string(), "-3");
    }
}
