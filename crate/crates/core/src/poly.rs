//! Sparse homogeneous polynomials in x, y, z over an exact field.
//!
//! Terms are kept sorted in descending degrevlex order with no zero
//! coefficients, so the leading term is always `terms[0]`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, NVARS};

#[derive(Clone, PartialEq)]
pub struct Poly<K: Field> {
    field: K,
    terms: Vec<(Monomial, K::Elem)>,
}

/// Homogeneity classification of a polynomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Homogeneity {
    Zero,
    Degree(u32),
    Mixed,
}

impl<K: Field> Poly<K> {
    pub fn zero(field: &K) -> Self {
        Poly { field: field.clone(), terms: Vec::new() }
    }

    pub fn constant(field: &K, c: K::Elem) -> Self {
        if field.is_zero(&c) {
            return Self::zero(field);
        }
        Poly { field: field.clone(), terms: vec![(Monomial::one(), c)] }
    }

    pub fn from_i64(field: &K, n: i64) -> Self {
        Self::constant(field, field.from_i64(n))
    }

    pub fn variable(field: &K, i: usize) -> Self {
        assert!(i < NVARS);
        Poly { field: field.clone(), terms: vec![(Monomial::var(i), field.one())] }
    }

    pub fn monomial(field: &K, m: Monomial, c: K::Elem) -> Self {
        if field.is_zero(&c) {
            return Self::zero(field);
        }
        Poly { field: field.clone(), terms: vec![(m, c)] }
    }

    /// Build from arbitrary (monomial, coefficient) pairs: sorts, merges
    /// duplicates, drops zeros.
    pub fn from_terms(field: &K, mut terms: Vec<(Monomial, K::Elem)>) -> Self {
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, K::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = field.add(&last.1, &c);
                    if field.is_zero(&last.1) {
                        out.pop();
                    }
                    continue;
                }
            }
            if !field.is_zero(&c) {
                out.push((m, c));
            }
        }
        Poly { field: field.clone(), terms: out }
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn terms(&self) -> &[(Monomial, K::Elem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn leading(&self) -> Option<(&Monomial, &K::Elem)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn homogeneity(&self) -> Homogeneity {
        match self.terms.first() {
            None => Homogeneity::Zero,
            Some((m0, _)) => {
                let d = m0.degree();
                if self.terms.iter().all(|(m, _)| m.degree() == d) {
                    Homogeneity::Degree(d)
                } else {
                    Homogeneity::Mixed
                }
            }
        }
    }

    /// Degree of a homogeneous polynomial; Ok(None) for zero.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        match self.homogeneity() {
            Homogeneity::Zero => Ok(None),
            Homogeneity::Degree(d) => Ok(Some(d)),
            Homogeneity::Mixed => Err(Error::NotHomogeneous),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled_mono(other, &self.field.one(), &Monomial::one(), false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled_mono(other, &self.field.one(), &Monomial::one(), true)
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        Poly {
            field: f.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, f.neg(c))).collect(),
        }
    }

    /// self + sign * c * x^m * other, by sorted merge.
    pub fn add_scaled_mono(&self, other: &Self, c: &K::Elem, m: &Monomial, negate: bool) -> Self {
        let f = &self.field;
        let scale = |x: &K::Elem| {
            let v = f.mul(c, x);
            if negate {
                f.neg(&v)
            } else {
                v
            }
        };
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < other.terms.len() {
            let mb = other.terms[j].0.mul(m);
            match self.terms[i].0.cmp(&mb) {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let v = scale(&other.terms[j].1);
                    if !f.is_zero(&v) {
                        out.push((mb, v));
                    }
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let v = f.add(&self.terms[i].1, &scale(&other.terms[j].1));
                    if !f.is_zero(&v) {
                        out.push((mb, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        while j < other.terms.len() {
            let v = scale(&other.terms[j].1);
            if !f.is_zero(&v) {
                out.push((other.terms[j].0.mul(m), v));
            }
            j += 1;
        }
        Poly { field: f.clone(), terms: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        // multiply by the shorter operand termwise
        let (a, b) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Self::zero(f);
        for (m, c) in &a.terms {
            acc = acc.add_scaled_mono(b, c, m, false);
        }
        acc
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        let f = &self.field;
        if f.is_zero(c) {
            return Self::zero(f);
        }
        Poly {
            field: f.clone(),
            terms: self.terms.iter().map(|(m, x)| (*m, f.mul(x, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Poly {
            field: self.field.clone(),
            terms: self.terms.iter().map(|(mm, c)| (mm.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let f = &self.field;
        let mut base = self.clone();
        let mut acc = Self::constant(f, f.one());
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

    /// Partial derivative with respect to variable i.
    pub fn derivative(&self, i: usize) -> Self {
        assert!(i < NVARS);
        let f = &self.field;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let v = f.mul(c, &f.from_i64(e as i64));
            if f.is_zero(&v) {
                continue; // characteristic divides the exponent
            }
            let mut exps = m.exponents();
            exps[i] -= 1;
            terms.push((Monomial::new(exps), v));
        }
        // termwise derivative preserves degrevlex order within fixed i? Not
        // in general, so rebuild.
        Self::from_terms(f, terms)
    }

    /// Exact division: returns q with self = q * divisor, or NotDivisible.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self> {
        let f = &self.field;
        if divisor.is_zero() {
            return Err(Error::NotDivisible);
        }
        let (dm, dc) = divisor.leading().unwrap();
        let (dm, dc) = (*dm, dc.clone());
        let dc_inv = f.inv(&dc);
        let mut rem = self.clone();
        let mut q: Vec<(Monomial, K::Elem)> = Vec::new();
        while let Some((rm, rc)) = rem.leading() {
            let Some(qm) = rm.try_div(&dm) else {
                return Err(Error::NotDivisible);
            };
            let qc = f.mul(rc, &dc_inv);
            rem = rem.add_scaled_mono(divisor, &qc, &qm, true);
            q.push((qm, qc));
        }
        Ok(Self::from_terms(f, q))
    }

    /// True if divisor divides self exactly.
    pub fn divisible_by(&self, divisor: &Self) -> bool {
        self.exact_divide(divisor).is_ok()
    }

    /// Rescale to the field's canonical form (monic over F_p, primitive
    /// integer with positive leading coefficient over Q).
    pub fn canonicalized(&self) -> Self {
        let mut coeffs: Vec<K::Elem> = self.terms.iter().map(|(_, c)| c.clone()).collect();
        self.field.canonicalize_scale(&mut coeffs);
        Poly {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .zip(coeffs)
                .map(|((m, _), c)| (*m, c))
                .collect(),
        }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                if self.field.is_one(c) {
                    self.clone()
                } else {
                    let inv = self.field.inv(&c.clone());
                    self.scale(&inv)
                }
            }
        }
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coefficient(&self, m: &Monomial) -> K::Elem {
        match self.terms.binary_search_by(|(mm, _)| m.cmp(mm)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.field.zero(),
        }
    }
}

impl<K: Field> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = self.field.display_parts(c);
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<K: Field> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The Euler triple (x, y, z) used as the first row of the pairing
/// determinant.
pub fn euler_vector<K: Field>(field: &K) -> [Poly<K>; 3] {
    [
        Poly::variable(field, 0),
        Poly::variable(field, 1),
        Poly::variable(field, 2),
    ]
}

/// The three partial derivatives (f_x, f_y, f_z).
///
/// Requires a homogeneous nonzero input of degree >= 1.
pub fn partial_derivatives<K: Field>(f: &Poly<K>) -> Result<[Poly<K>; 3]> {
    match f.homogeneous_degree()? {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::DegreeTooSmall(0)),
        Some(_) => Ok([f.derivative(0), f.derivative(1), f.derivative(2)]),
    }
}
