//! Exact coefficient fields: the rationals and prime fields F_p.
//!
//! Arithmetic is passed around as a context object rather than baked into
//! element types, so the prime modulus can be a runtime parameter.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact field used for all polynomial coefficients.
///
/// Implementors are lightweight handles (a prime modulus or nothing at all)
/// and are stored inside every polynomial.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero; callers guard.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;
    /// Sign and magnitude text for display. Prime-field elements use the
    /// symmetric representative in (-p/2, p/2] so small negative integers
    /// print naturally.
    fn display_parts(&self, a: &Self::Elem) -> (bool, String);
    /// Rescale a coefficient slice in place to its canonical form and
    /// return true if anything changed. For F_p this makes the first
    /// coefficient 1; for Q it clears denominators and content, leaving a
    /// primitive integer vector with positive first coefficient.
    fn canonicalize_scale(&self, coeffs: &mut [Self::Elem]);
    /// Coefficient pair (a, b) with a*c0 = b*lc, used to cancel a leading
    /// coefficient c0 against a reducer with leading coefficient lc as
    /// work := a*work - b*x^q*g. Over a prime field a = 1; over Q the pair
    /// is chosen to keep integral coefficients integral (fraction-free
    /// pseudo-reduction).
    fn pseudo_pair(&self, c0: &Self::Elem, lc: &Self::Elem) -> (Self::Elem, Self::Elem) {
        (self.one(), self.div(c0, lc))
    }
    fn descriptor(&self) -> String;
}

/// F_p for a u64 prime p.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_i64(&self, n: i64) -> u64 {
        let m = n.rem_euclid(self.p as i64);
        m as u64
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mulmod(acc, base, self.p);
            }
            base = mulmod(base, base, self.p);
            exp >>= 1;
        }
        acc
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u64) -> bool {
        *a == 1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mulmod(*a, *b, self.p)
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        self.pow(*a, self.p - 2)
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        let m = n % BigInt::from(self.p);
        let m = if m.is_negative() { m + BigInt::from(self.p) } else { m };
        let (_, digits) = m.to_u64_digits();
        *digits.first().unwrap_or(&0)
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn display_parts(&self, a: &u64) -> (bool, String) {
        if *a > self.p / 2 {
            (true, (self.p - a).to_string())
        } else {
            (false, a.to_string())
        }
    }
    fn canonicalize_scale(&self, coeffs: &mut [u64]) {
        if let Some(&lead) = coeffs.iter().find(|c| **c != 0) {
            if lead != 1 {
                let s = self.inv(&lead);
                for c in coeffs.iter_mut() {
                    *c = self.mul(c, &s);
                }
            }
        }
    }
    fn descriptor(&self) -> String {
        format!("fp:{}", self.p)
    }
}

/// The rational numbers.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn display_parts(&self, a: &BigRational) -> (bool, String) {
        let neg = a.is_negative();
        let m = if neg { -a } else { a.clone() };
        if m.is_integer() {
            (neg, m.numer().to_string())
        } else {
            (neg, format!("{}/{}", m.numer(), m.denom()))
        }
    }
    fn canonicalize_scale(&self, coeffs: &mut [BigRational]) {
        use num::Integer;
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in coeffs.iter() {
            if !c.is_zero() {
                den_lcm = den_lcm.lcm(c.denom());
                num_gcd = num_gcd.gcd(c.numer());
            }
        }
        if num_gcd.is_zero() {
            return;
        }
        let mut scale = BigRational::new(den_lcm, num_gcd);
        if let Some(lead) = coeffs.iter().find(|c| !c.is_zero()) {
            if (lead * &scale).is_negative() {
                scale = -scale;
            }
        }
        if !scale.is_one() {
            for c in coeffs.iter_mut() {
                *c *= &scale;
            }
        }
    }
    fn pseudo_pair(&self, c0: &BigRational, lc: &BigRational) -> (BigRational, BigRational) {
        use num::Integer;
        if c0.is_integer() && lc.is_integer() {
            let d = c0.numer().gcd(lc.numer());
            return (
                BigRational::from_integer(lc.numer() / &d),
                BigRational::from_integer(c0.numer() / &d),
            );
        }
        (BigRational::one(), c0 / lc)
    }
    fn descriptor(&self) -> String {
        "qq".to_string()
    }
}

/// Runtime field selection (CLI flag `--field`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

/// Default modulus for fast mode.
pub const DEFAULT_PRIME: u64 = 1_048_583;

impl FieldSpec {
    pub fn parse(s: &str) -> Result<FieldSpec> {
        if s.eq_ignore_ascii_case("qq") {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = s.strip_prefix("fp:") {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::BadFieldSpec(s.to_string()))?;
            if !is_prime_u64(p) {
                return Err(Error::NotPrime(p));
            }
            return Ok(FieldSpec::Prime(p));
        }
        Err(Error::BadFieldSpec(s.to_string()))
    }

    pub fn descriptor(&self) -> String {
        match self {
            FieldSpec::Prime(p) => format!("fp:{p}"),
            FieldSpec::Rationals => "qq".to_string(),
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Prime(DEFAULT_PRIME)
    }
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}
