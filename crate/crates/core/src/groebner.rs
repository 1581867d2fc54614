//! Gröbner bases for graded submodules of S^r, syzygies, minimal
//! generating sets, ideal quotients and saturation.
//!
//! The engine works on flattened module elements (component, monomial,
//! coefficient) sorted under one of two orders:
//!
//! * term-over-position degrevlex for ordinary Gröbner bases, and
//! * a block elimination order for syzygy computations: the original
//!   ambient components dominate the adjoined syzygy coordinates, and the
//!   syzygy block carries the order induced by the leading terms of the
//!   input generators (Schreyer order).
//!
//! Syzygies are read off an elimination run: a basis element whose terms
//! all lie in the syzygy block is a syzygy of the inputs, and the set of
//! such elements generates the full syzygy module.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hilbert::HilbertData;
use crate::monomial::Monomial;
use crate::poly::Poly;

/// An element of a free module S^r, one polynomial per component.
#[derive(Clone, PartialEq)]
pub struct ModuleElement<K: Field> {
    pub entries: Vec<Poly<K>>,
}

impl<K: Field> ModuleElement<K> {
    pub fn new(entries: Vec<Poly<K>>) -> Self {
        ModuleElement { entries }
    }

    pub fn zero(field: &K, rank: usize) -> Self {
        ModuleElement { entries: vec![Poly::zero(field); rank] }
    }

    pub fn from_poly(p: Poly<K>) -> Self {
        ModuleElement { entries: vec![p] }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    /// Degree with respect to the shift vector: deg(entry_c) + shifts[c],
    /// equal over all nonzero components. None for the zero element.
    pub fn graded_degree(&self, shifts: &[i64]) -> Result<Option<i64>> {
        let mut deg: Option<i64> = None;
        for (c, p) in self.entries.iter().enumerate() {
            if let Some(d) = p.homogeneous_degree()? {
                let total = d as i64 + shifts[c];
                match deg {
                    None => deg = Some(total),
                    Some(t) if t == total => {}
                    Some(_) => return Err(Error::NotHomogeneous),
                }
            }
        }
        Ok(deg)
    }

    /// Canonical rescaling of all entries by one common factor.
    pub fn canonicalized(&self, field: &K) -> Self {
        let mut coeffs: Vec<K::Elem> = Vec::new();
        for p in &self.entries {
            coeffs.extend(p.terms().iter().map(|(_, c)| c.clone()));
        }
        let before = coeffs.clone();
        field.canonicalize_scale(&mut coeffs);
        if coeffs == before {
            return self.clone();
        }
        let mut it = coeffs.into_iter();
        let entries = self
            .entries
            .iter()
            .map(|p| {
                let terms = p
                    .terms()
                    .iter()
                    .map(|(m, _)| (*m, it.next().unwrap()))
                    .collect();
                Poly::from_terms(field, terms)
            })
            .collect();
        ModuleElement { entries }
    }
}

impl<K: Field> fmt::Debug for ModuleElement<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A graded submodule of S^r given by homogeneous generators.
#[derive(Clone, Debug)]
pub struct GradedSubmodule<K: Field> {
    field: K,
    rank: usize,
    shifts: Vec<i64>,
    gens: Vec<ModuleElement<K>>,
}

impl<K: Field> GradedSubmodule<K> {
    pub fn new(
        field: &K,
        rank: usize,
        shifts: Vec<i64>,
        gens: Vec<ModuleElement<K>>,
    ) -> Result<Self> {
        if shifts.len() != rank {
            return Err(Error::RankMismatch { expected: rank, got: shifts.len() });
        }
        for g in &gens {
            if g.rank() != rank {
                return Err(Error::RankMismatch { expected: rank, got: g.rank() });
            }
            g.graded_degree(&shifts)?;
        }
        Ok(GradedSubmodule { field: field.clone(), rank, shifts, gens })
    }

    /// A homogeneous ideal, as a rank-1 submodule with zero shift.
    pub fn ideal(field: &K, gens: Vec<Poly<K>>) -> Result<Self> {
        Self::new(field, 1, vec![0], gens.into_iter().map(ModuleElement::from_poly).collect())
    }

    pub fn unit_ideal(field: &K) -> Self {
        Self::ideal(field, vec![Poly::constant(field, field.one())]).unwrap()
    }

    pub fn zero_ideal(field: &K) -> Self {
        Self::ideal(field, vec![]).unwrap()
    }

    /// The maximal ideal (x, y, z).
    pub fn maximal_ideal(field: &K) -> Self {
        Self::ideal(
            field,
            vec![
                Poly::variable(field, 0),
                Poly::variable(field, 1),
                Poly::variable(field, 2),
            ],
        )
        .unwrap()
    }

    /// m^k; by convention m^0 = S.
    pub fn maximal_ideal_power(field: &K, k: u32) -> Self {
        let gens = crate::monomial::monomials_of_degree(k)
            .into_iter()
            .map(|m| Poly::monomial(field, m, field.one()))
            .collect();
        Self::ideal(field, gens).unwrap()
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn gens(&self) -> &[ModuleElement<K>] {
        &self.gens
    }

    /// Generators as plain polynomials (rank-1 modules).
    pub fn ideal_gens(&self) -> Vec<Poly<K>> {
        assert_eq!(self.rank, 1);
        self.gens.iter().map(|g| g.entries[0].clone()).collect()
    }

    pub fn is_zero_module(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero())
    }

    /// Reduced Gröbner basis under term-over-position degrevlex.
    pub fn groebner_basis(&self) -> GroebnerBasis<K> {
        let engine = Engine {
            field: self.field.clone(),
            order: MOrder::Top,
            shifts: self.shifts.clone(),
        };
        let inputs: Vec<Flat<K>> = self
            .gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| engine.flat_from_element(g))
            .collect();
        let flats = engine.buchberger(inputs, self.rank == 1);
        GroebnerBasis::from_flats(&engine, self.rank, self.shifts.clone(), flats)
    }

    /// Generators of the syzygy module {(c_1..c_k) : sum c_i gens_i = 0},
    /// as a graded submodule of S^k with shifts the generator degrees.
    pub fn syzygy_basis(&self) -> GradedSubmodule<K> {
        let field = &self.field;
        let k_all = self.gens.len();
        let degs: Vec<i64> = self
            .gens
            .iter()
            .map(|g| {
                g.graded_degree(&self.shifts)
                    .expect("validated at construction")
                    .unwrap_or(0)
            })
            .collect();
        let nonzero: Vec<usize> = (0..k_all).filter(|&i| !self.gens[i].is_zero()).collect();

        let top = Engine {
            field: field.clone(),
            order: MOrder::Top,
            shifts: self.shifts.clone(),
        };
        let mut induced = Vec::with_capacity(nonzero.len());
        let mut hat_inputs = Vec::with_capacity(nonzero.len());
        let split = self.rank as u32;
        for (pos, &i) in nonzero.iter().enumerate() {
            let upper = top.flat_from_element(&self.gens[i]);
            induced.push(upper.terms[0].0);
            let mut terms = upper.terms;
            terms.push((
                Key { comp: split + pos as u32, mono: Monomial::one() },
                field.one(),
            ));
            hat_inputs.push(Flat { terms });
        }
        let mut hat_shifts = self.shifts.clone();
        hat_shifts.extend(nonzero.iter().map(|&i| degs[i]));
        let engine = Engine {
            field: field.clone(),
            order: MOrder::Elim { split, induced },
            shifts: hat_shifts,
        };
        let hat_inputs: Vec<Flat<K>> = hat_inputs
            .into_iter()
            .map(|f: Flat<K>| Flat { terms: engine.sorted_terms(f.terms) })
            .collect();
        let gb = engine.buchberger_with(hat_inputs, false, Some(split));

        let mut syzygies: Vec<ModuleElement<K>> = Vec::new();
        for f in &gb {
            if f.terms.iter().any(|(key, _)| key.comp < split) {
                continue;
            }
            let mut entries = vec![Poly::zero(field); k_all];
            for (pos, &orig) in nonzero.iter().enumerate() {
                let terms: Vec<(Monomial, K::Elem)> = f
                    .terms
                    .iter()
                    .filter(|(key, _)| key.comp == split + pos as u32)
                    .map(|(key, c)| (key.mono, c.clone()))
                    .collect();
                entries[orig] = Poly::from_terms(field, terms);
            }
            syzygies.push(ModuleElement::new(entries));
        }
        // a zero generator is annihilated by the corresponding unit vector
        for i in 0..k_all {
            if self.gens[i].is_zero() {
                let mut e = ModuleElement::zero(field, k_all);
                e.entries[i] = Poly::constant(field, field.one());
                syzygies.push(e);
            }
        }
        GradedSubmodule::new(field, k_all, degs, syzygies).expect("syzygies are homogeneous")
    }

    /// A minimal generating subset, greedily selected in increasing degree
    /// with deterministic tie-breaking.
    pub fn minimalize_generators(&self) -> GradedSubmodule<K> {
        let field = &self.field;
        let mut sorted: Vec<&ModuleElement<K>> =
            self.gens.iter().filter(|g| !g.is_zero()).collect();
        let top = Engine {
            field: field.clone(),
            order: MOrder::Top,
            shifts: self.shifts.clone(),
        };
        let sort_key = |g: &ModuleElement<K>| {
            let deg = g
                .graded_degree(&self.shifts)
                .expect("validated at construction")
                .unwrap_or(0);
            (deg, format!("{g:?}"))
        };
        sorted.sort_by(|a, b| {
            let (da, sa) = sort_key(a);
            let (db, sb) = sort_key(b);
            da.cmp(&db)
                .then_with(|| {
                    let fa = top.flat_from_element(a);
                    let fb = top.flat_from_element(b);
                    top.cmp_key(&fb.terms[0].0, &fa.terms[0].0)
                })
                .then(sa.cmp(&sb))
        });
        let mut kept: Vec<ModuleElement<K>> = Vec::new();
        let mut kept_gb: Option<GroebnerBasis<K>> = None;
        for g in sorted {
            let redundant = match &kept_gb {
                None => false,
                Some(gb) => gb.contains(g).expect("rank fixed"),
            };
            if redundant {
                continue;
            }
            kept.push(g.canonicalized(field));
            kept_gb = Some(
                GradedSubmodule::new(field, self.rank, self.shifts.clone(), kept.clone())
                    .unwrap()
                    .groebner_basis(),
            );
        }
        GradedSubmodule { field: field.clone(), rank: self.rank, shifts: self.shifts.clone(), gens: kept }
    }

    /// Ideal quotient I : J = { g : g J ⊆ I } for rank-1 submodules.
    ///
    /// Computed from one syzygy run: with J = (g_1..g_s), a polynomial a
    /// lies in I : J exactly when a·(g_1,...,g_s) is a componentwise
    /// combination of the generators of I, so the first coordinates of the
    /// syzygies of [(g_1..g_s), f_i e_j] generate the quotient.
    pub fn ideal_quotient(&self, other: &GradedSubmodule<K>) -> Result<GradedSubmodule<K>> {
        if self.rank != 1 || other.rank != 1 {
            return Err(Error::RankMismatch { expected: 1, got: self.rank.max(other.rank) });
        }
        let field = &self.field;
        let j_gens: Vec<Poly<K>> = other
            .gens
            .iter()
            .map(|g| g.entries[0].clone())
            .filter(|p| !p.is_zero())
            .collect();
        if j_gens.is_empty() {
            // I : (0) = S
            return Ok(Self::unit_ideal(field));
        }
        let i_gens: Vec<Poly<K>> = self
            .gens
            .iter()
            .map(|g| g.entries[0].clone())
            .filter(|p| !p.is_zero())
            .collect();
        if i_gens.is_empty() {
            return Ok(Self::zero_ideal(field));
        }
        let s = j_gens.len();
        let mut shifts: Vec<i64> = Vec::with_capacity(s);
        for g in &j_gens {
            let d = g.homogeneous_degree()?.expect("zero generators were filtered");
            shifts.push(-(d as i64));
        }
        let mut gens: Vec<ModuleElement<K>> = Vec::with_capacity(1 + i_gens.len() * s);
        gens.push(ModuleElement::new(j_gens.clone()));
        for f in &i_gens {
            for j in 0..s {
                let mut e = ModuleElement::zero(field, s);
                e.entries[j] = f.clone();
                gens.push(e);
            }
        }
        let module = GradedSubmodule::new(field, s, shifts, gens)?;
        let syz = module.syzygy_basis();
        let quotient_gens: Vec<Poly<K>> = syz
            .gens
            .iter()
            .map(|v| v.entries[0].clone())
            .filter(|p| !p.is_zero())
            .collect();
        Ok(Self::ideal(field, quotient_gens)?.minimalize_generators())
    }

    /// Saturation I : m^∞.
    ///
    /// Fast path: divide the maximal power of one variable out of every
    /// Gröbner basis element (for the last variable under degrevlex this
    /// yields generators of I : z^∞). The candidate S is accepted only
    /// under two exact certificates, so correctness does not depend on
    /// that heuristic:
    ///
    /// * S/I has finite length (Hilbert numerator difference divisible by
    ///   (1-t)^3), hence S ⊆ I : m^∞;
    /// * S : v = S for the chosen variable v, so v is a nonzerodivisor on
    ///   S/S, S is saturated, and therefore S ⊇ I : m^∞.
    ///
    /// When no variable certifies (a singular point on each coordinate
    /// line), fall back to iterated quotients by m until stabilization.
    pub fn saturation(&self) -> Result<GradedSubmodule<K>> {
        if self.rank != 1 {
            return Err(Error::RankMismatch { expected: 1, got: self.rank });
        }
        let field = &self.field;
        let gb = self.groebner_basis();
        if gb.elements.is_empty() {
            return Ok(Self::zero_ideal(field));
        }
        let n_self = gb.quotient_hilbert();
        for var in [2usize, 1, 0] {
            let candidate_gens: Vec<Poly<K>> = gb
                .elements
                .iter()
                .map(|e| divide_out_variable(&e.entries[0], var))
                .collect();
            let candidate = Self::ideal(field, candidate_gens)?;
            let cand_gb = candidate.groebner_basis();
            // certificate 1: S/I has finite length
            if !finite_length_difference(&n_self, &cand_gb.quotient_hilbert()) {
                continue;
            }
            // certificate 2: the variable is a nonzerodivisor mod S
            let v = Self::ideal(field, vec![Poly::variable(field, var)])?;
            let colon = candidate.ideal_quotient(&v)?;
            let mut nzd = true;
            for g in colon.gens() {
                if !cand_gb.contains(g)? {
                    nzd = false;
                    break;
                }
            }
            if nzd {
                return Ok(candidate.minimalize_generators());
            }
        }
        // fallback: iterated colon by m
        let m = Self::maximal_ideal(field);
        let mut current = self.clone();
        loop {
            let current_gb = current.groebner_basis();
            let next = current.ideal_quotient(&m)?;
            // I ⊆ I : m always, so equality needs only one containment
            let mut stable = true;
            for g in next.gens() {
                if !current_gb.contains(g)? {
                    stable = false;
                    break;
                }
            }
            if stable {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Exact equality as submodules, by mutual membership of generators.
    pub fn equal(&self, other: &GradedSubmodule<K>) -> Result<bool> {
        if self.rank != other.rank || self.shifts != other.shifts {
            return Err(Error::RankMismatch { expected: self.rank, got: other.rank });
        }
        mutual_membership(&self.groebner_basis(), &other.groebner_basis())
    }

    /// Hilbert data of the quotient S^r(shifts) / self.
    pub fn hilbert_series(&self) -> HilbertData {
        self.groebner_basis().quotient_hilbert()
    }

    /// Krull dimension of S/I as a cone: -1 for the unit ideal, 3 for the
    /// zero ideal.
    pub fn krull_dimension_of_quotient(&self) -> Result<i32> {
        if self.rank != 1 {
            return Err(Error::RankMismatch { expected: 1, got: self.rank });
        }
        Ok(self.hilbert_series().cone_dimension())
    }
}

/// p / v^a for the largest variable power v^a dividing every term.
fn divide_out_variable<K: Field>(p: &Poly<K>, var: usize) -> Poly<K> {
    let a = p.terms().iter().map(|(m, _)| m.exponent(var)).min().unwrap_or(0);
    if a == 0 {
        return p.clone();
    }
    let mut div = [0u16; crate::monomial::NVARS];
    div[var] = a;
    let d = Monomial::new(div);
    Poly::from_terms(
        p.field(),
        p.terms()
            .iter()
            .map(|(m, c)| (m.try_div(&d).unwrap(), c.clone()))
            .collect(),
    )
}

/// Whether the module between the two quotients has finite length, read
/// off the Hilbert numerators: H(S/I) - H(S/J) must be a polynomial
/// divisible by (1-t)^3 when I ⊆ J.
fn finite_length_difference(inner: &HilbertData, outer: &HilbertData) -> bool {
    let (s1, n1) = inner.numerator();
    let (s2, n2) = outer.numerator();
    let lo = s1.min(s2);
    let hi = (s1 + n1.len() as i64).max(s2 + n2.len() as i64);
    let mut diff = vec![0i64; (hi - lo) as usize];
    for (i, c) in n1.iter().enumerate() {
        diff[(s1 - lo) as usize + i] += c;
    }
    for (i, c) in n2.iter().enumerate() {
        diff[(s2 - lo) as usize + i] -= c;
    }
    let mut acc0 = 0i64;
    let mut acc1 = 0i64;
    let mut acc2 = 0i64;
    for &c in &diff {
        acc0 += c;
        acc1 += acc0;
        acc2 += acc1;
    }
    // divisible by (1-t)^3 iff the value and first two derivative-style
    // partial sums vanish at t = 1
    acc0 == 0 && acc1 == 0 && acc2 == 0
}

fn mutual_membership<K: Field>(a: &GroebnerBasis<K>, b: &GroebnerBasis<K>) -> Result<bool> {
    for g in &a.elements {
        if !b.contains(g)? {
            return Ok(false);
        }
    }
    for g in &b.elements {
        if !a.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A reduced Gröbner basis under term-over-position degrevlex.
#[derive(Clone)]
pub struct GroebnerBasis<K: Field> {
    field: K,
    rank: usize,
    shifts: Vec<i64>,
    pub elements: Vec<ModuleElement<K>>,
    flats: Vec<Flat<K>>,
}

impl<K: Field> GroebnerBasis<K> {
    fn from_flats(engine: &Engine<K>, rank: usize, shifts: Vec<i64>, flats: Vec<Flat<K>>) -> Self {
        let elements = flats
            .iter()
            .map(|f| engine.element_from_flat(f, rank))
            .collect();
        GroebnerBasis { field: engine.field.clone(), rank, shifts, elements, flats }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    /// Leading terms (component, monomial) of the basis elements.
    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.flats
            .iter()
            .map(|f| (f.terms[0].0.comp as usize, f.terms[0].0.mono))
            .collect()
    }

    /// Fully reduced normal form; zero exactly when v lies in the module.
    pub fn normal_form(&self, v: &ModuleElement<K>) -> Result<ModuleElement<K>> {
        if v.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, got: v.rank() });
        }
        let engine = Engine {
            field: self.field.clone(),
            order: MOrder::Top,
            shifts: self.shifts.clone(),
        };
        let flat = engine.flat_from_element(v);
        let red = engine.reduce(flat, &self.flats, usize::MAX);
        Ok(engine.element_from_flat(&red, self.rank))
    }

    pub fn contains(&self, v: &ModuleElement<K>) -> Result<bool> {
        if v.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, got: v.rank() });
        }
        let engine = Engine {
            field: self.field.clone(),
            order: MOrder::Top,
            shifts: self.shifts.clone(),
        };
        let flat = engine.flat_from_element(v);
        // membership only needs zero-testing, so scaled reduction is fine
        Ok(engine.reduce_impl(flat, &self.flats, usize::MAX, true).terms.is_empty())
    }

    pub fn contains_poly(&self, p: &Poly<K>) -> Result<bool> {
        self.contains(&ModuleElement::from_poly(p.clone()))
    }

    /// Hilbert data of the quotient by this basis's module.
    pub fn quotient_hilbert(&self) -> HilbertData {
        let lts = self.leading_terms();
        HilbertData::from_leading_terms(self.rank, &self.shifts, &lts)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Key {
    comp: u32,
    mono: Monomial,
}

#[derive(Clone)]
struct Flat<K: Field> {
    terms: Vec<(Key, K::Elem)>,
}

impl<K: Field> Flat<K> {
    fn lt(&self) -> &Key {
        &self.terms[0].0
    }
}

enum MOrder {
    Top,
    Elim { split: u32, induced: Vec<Key> },
}

/// Term-over-position: degrevlex on the monomial, earlier components
/// larger on ties.
fn cmp_top(a: &Key, b: &Key) -> Ordering {
    a.mono.cmp(&b.mono).then_with(|| b.comp.cmp(&a.comp))
}

struct Engine<K: Field> {
    field: K,
    order: MOrder,
    shifts: Vec<i64>,
}

impl<K: Field> Engine<K> {
    fn cmp_key(&self, a: &Key, b: &Key) -> Ordering {
        match &self.order {
            MOrder::Top => cmp_top(a, b),
            MOrder::Elim { split, induced } => {
                let a_upper = a.comp < *split;
                let b_upper = b.comp < *split;
                match (a_upper, b_upper) {
                    (true, false) => Ordering::Greater,
                    (false, true) => Ordering::Less,
                    (true, true) => cmp_top(a, b),
                    (false, false) => {
                        let i = (a.comp - split) as usize;
                        let j = (b.comp - split) as usize;
                        let ka = Key { comp: induced[i].comp, mono: a.mono.mul(&induced[i].mono) };
                        let kb = Key { comp: induced[j].comp, mono: b.mono.mul(&induced[j].mono) };
                        cmp_top(&ka, &kb).then_with(|| b.comp.cmp(&a.comp))
                    }
                }
            }
        }
    }

    fn sorted_terms(&self, mut terms: Vec<(Key, K::Elem)>) -> Vec<(Key, K::Elem)> {
        terms.sort_unstable_by(|a, b| self.cmp_key(&b.0, &a.0));
        let f = &self.field;
        let mut out: Vec<(Key, K::Elem)> = Vec::with_capacity(terms.len());
        for (k, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == k {
                    last.1 = f.add(&last.1, &c);
                    if f.is_zero(&last.1) {
                        out.pop();
                    }
                    continue;
                }
            }
            if !f.is_zero(&c) {
                out.push((k, c));
            }
        }
        out
    }

    fn flat_from_element(&self, v: &ModuleElement<K>) -> Flat<K> {
        let mut terms = Vec::new();
        for (c, p) in v.entries.iter().enumerate() {
            for (m, coeff) in p.terms() {
                terms.push((Key { comp: c as u32, mono: *m }, coeff.clone()));
            }
        }
        Flat { terms: self.sorted_terms(terms) }
    }

    fn element_from_flat(&self, f: &Flat<K>, rank: usize) -> ModuleElement<K> {
        let field = &self.field;
        let mut buckets: Vec<Vec<(Monomial, K::Elem)>> = vec![Vec::new(); rank];
        for (k, c) in &f.terms {
            buckets[k.comp as usize].push((k.mono, c.clone()));
        }
        ModuleElement::new(
            buckets
                .into_iter()
                .map(|b| Poly::from_terms(field, b))
                .collect(),
        )
    }

    /// a - c * x^m * b, merging sorted term lists.
    fn sub_scaled(&self, a: &Flat<K>, c: &K::Elem, m: &Monomial, b: &Flat<K>) -> Flat<K> {
        let f = &self.field;
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < a.terms.len() && j < b.terms.len() {
            let bk = Key { comp: b.terms[j].0.comp, mono: b.terms[j].0.mono.mul(m) };
            match self.cmp_key(&a.terms[i].0, &bk) {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let v = f.neg(&f.mul(c, &b.terms[j].1));
                    if !f.is_zero(&v) {
                        out.push((bk, v));
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let v = f.sub(&a.terms[i].1, &f.mul(c, &b.terms[j].1));
                    if !f.is_zero(&v) {
                        out.push((bk, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a.terms[i..]);
        while j < b.terms.len() {
            let bk = Key { comp: b.terms[j].0.comp, mono: b.terms[j].0.mono.mul(m) };
            let v = f.neg(&f.mul(c, &b.terms[j].1));
            if !f.is_zero(&v) {
                out.push((bk, v));
            }
            j += 1;
        }
        Flat { terms: out }
    }

    fn make_monic(&self, flat: &mut Flat<K>) {
        if let Some((_, lc)) = flat.terms.first() {
            if !self.field.is_one(lc) {
                let inv = self.field.inv(&lc.clone());
                for (_, c) in flat.terms.iter_mut() {
                    *c = self.field.mul(c, &inv);
                }
            }
        }
    }

    /// Full normal form; `skip` excludes one reducer index (usize::MAX for
    /// none). With `rescale` the result may differ from the true normal
    /// form by a nonzero scalar: zero-testing and Gröbner-internal
    /// reductions allow that, and it enables fraction-free steps over Q
    /// instead of letting denominators pile up.
    fn reduce_impl(&self, v: Flat<K>, basis: &[Flat<K>], skip: usize, rescale: bool) -> Flat<K> {
        let strip = rescale && self.field.characteristic() == 0;
        let mut work = v;
        if strip {
            self.strip_content(&mut work);
        }
        let mut steps = 0usize;
        let mut done = 0;
        'outer: while done < work.terms.len() {
            let (k0, c0) = work.terms[done].clone();
            for (gi, g) in basis.iter().enumerate() {
                if gi == skip {
                    continue;
                }
                let glt = g.lt();
                if glt.comp == k0.comp {
                    if let Some(q) = k0.mono.try_div(&glt.mono) {
                        let lc = &g.terms[0].1;
                        let coef = if rescale {
                            let (a, b) = self.field.pseudo_pair(&c0, lc);
                            if !self.field.is_one(&a) {
                                for (_, c) in work.terms.iter_mut() {
                                    *c = self.field.mul(c, &a);
                                }
                            }
                            b
                        } else if self.field.is_one(lc) {
                            c0.clone()
                        } else {
                            self.field.div(&c0, lc)
                        };
                        let suffix = Flat { terms: work.terms.split_off(done) };
                        let reduced = self.sub_scaled(&suffix, &coef, &q, g);
                        work.terms.extend(reduced.terms);
                        if strip {
                            steps += 1;
                            if steps % 16 == 0 {
                                self.strip_content(&mut work);
                            }
                        }
                        continue 'outer;
                    }
                }
            }
            done += 1;
        }
        if strip {
            self.strip_content(&mut work);
        }
        work
    }

    fn reduce(&self, v: Flat<K>, basis: &[Flat<K>], skip: usize) -> Flat<K> {
        self.reduce_impl(v, basis, skip, false)
    }

    /// Buchberger with normal (lowest pair degree first) selection. The
    /// chain criterion is applied in the strict-lcm form; the coprimality
    /// criterion only in rank-1 ideal runs where it is valid.
    ///
    /// In syzygy mode (`syzygy_split`), pairs with both leading terms in
    /// the adjoined syzygy block are never processed: the zero-reduction
    /// certificates of the upper-block pairs already generate the full
    /// syzygy module, so the extra pairs would only turn the generating
    /// set into a Gröbner basis of it. The raw basis is then returned
    /// without minimalization, since the syzygy block is not a GB.
    fn buchberger_with(
        &self,
        inputs: Vec<Flat<K>>,
        allow_coprime_criterion: bool,
        syzygy_split: Option<u32>,
    ) -> Vec<Flat<K>> {
        let mut basis: Vec<Flat<K>> = Vec::new();
        let mut heap: BinaryHeap<Reverse<(i64, usize, usize)>> = BinaryHeap::new();

        let pair_degree = |a: &Flat<K>, b: &Flat<K>| -> Option<i64> {
            let (ka, kb) = (a.lt(), b.lt());
            if ka.comp != kb.comp {
                return None;
            }
            if let Some(split) = syzygy_split {
                if ka.comp >= split {
                    return None;
                }
            }
            let l = ka.mono.lcm(&kb.mono);
            Some(l.degree() as i64 + self.shifts[ka.comp as usize])
        };

        for mut input in inputs {
            if input.terms.is_empty() {
                continue;
            }
            self.canonicalize(&mut input);
            let idx = basis.len();
            for i in 0..idx {
                if let Some(d) = pair_degree(&basis[i], &input) {
                    heap.push(Reverse((d, idx, i)));
                }
            }
            basis.push(input);
        }

        while let Some(Reverse((_, j, i))) = heap.pop() {
            let (ki, kj) = (*basis[i].lt(), *basis[j].lt());
            let lcm = ki.mono.lcm(&kj.mono);
            if allow_coprime_criterion && ki.mono.is_coprime(&kj.mono) {
                continue;
            }
            let chain_skip = basis.iter().enumerate().any(|(k2, g)| {
                if k2 == i || k2 == j {
                    return false;
                }
                let kk = g.lt();
                kk.comp == ki.comp
                    && kk.mono.divides(&lcm)
                    && ki.mono.lcm(&kk.mono) < lcm
                    && kj.mono.lcm(&kk.mono) < lcm
            });
            if chain_skip {
                continue;
            }
            let qi = lcm.try_div(&ki.mono).unwrap();
            let qj = lcm.try_div(&kj.mono).unwrap();
            // S-pair: cj * x^qi * g_i - ci * x^qj * g_j
            let ci = basis[i].terms[0].1.clone();
            let cj = basis[j].terms[0].1.clone();
            let shifted_i = Flat {
                terms: basis[i]
                    .terms
                    .iter()
                    .map(|(k, c)| {
                        (Key { comp: k.comp, mono: k.mono.mul(&qi) }, self.field.mul(c, &cj))
                    })
                    .collect(),
            };
            let spair = self.sub_scaled(&shifted_i, &ci, &qj, &basis[j]);
            let mut r = self.reduce_impl(spair, &basis, usize::MAX, true);
            if r.terms.is_empty() {
                continue;
            }
            self.canonicalize(&mut r);
            let idx = basis.len();
            for i2 in 0..idx {
                if let Some(d) = pair_degree(&basis[i2], &r) {
                    heap.push(Reverse((d, idx, i2)));
                }
            }
            basis.push(r);
        }

        if syzygy_split.is_some() {
            basis.sort_by(|a, b| self.cmp_key(a.lt(), b.lt()));
            return basis;
        }

        // minimalize by leading terms, then tail-reduce to the reduced GB
        basis.sort_by(|a, b| self.cmp_key(a.lt(), b.lt()));
        let mut kept: Vec<Flat<K>> = Vec::new();
        for f in basis {
            let lt = *f.lt();
            if !kept
                .iter()
                .any(|g| g.lt().comp == lt.comp && g.lt().mono.divides(&lt.mono))
            {
                kept.push(f);
            }
        }
        for i in 0..kept.len() {
            let me = kept[i].clone();
            let mut r = self.reduce_impl(me, &kept, i, true);
            self.canonicalize(&mut r);
            kept[i] = r;
        }
        // reduced Gröbner bases are reported monic
        for f in kept.iter_mut() {
            self.make_monic(f);
        }
        kept
    }

    fn buchberger(&self, inputs: Vec<Flat<K>>, allow_coprime_criterion: bool) -> Vec<Flat<K>> {
        self.buchberger_with(inputs, allow_coprime_criterion, None)
    }

    /// Field-canonical rescaling: monic over F_p, primitive integer with
    /// positive leading coefficient over Q.
    fn canonicalize(&self, flat: &mut Flat<K>) {
        let mut coeffs: Vec<K::Elem> = flat.terms.iter().map(|(_, c)| c.clone()).collect();
        self.field.canonicalize_scale(&mut coeffs);
        for ((_, c), nc) in flat.terms.iter_mut().zip(coeffs) {
            *c = nc;
        }
    }

    /// Clear denominators and content over Q; no-op over F_p. Keeps
    /// Buchberger intermediates small.
    fn strip_content(&self, flat: &mut Flat<K>) {
        if self.field.characteristic() == 0 {
            self.canonicalize(flat);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::parser::parse_polynomial;

    fn qp(s: &str) -> Poly<Rationals> {
        parse_polynomial(s, &Rationals).unwrap()
    }

    fn ideal(gens: &[&str]) -> GradedSubmodule<Rationals> {
        GradedSubmodule::ideal(&Rationals, gens.iter().map(|s| qp(s)).collect()).unwrap()
    }

    fn gb_polys(gb: &GroebnerBasis<Rationals>) -> Vec<String> {
        gb.elements.iter().map(|e| format!("{}", e.entries[0])).collect()
    }

    #[test]
    fn already_reduced_basis() {
        let gb = ideal(&["x", "y", "z"]).groebner_basis();
        assert_eq!(gb_polys(&gb), vec!["z", "y", "x"]);
    }

    #[test]
    fn linear_combination_basis() {
        let gb = ideal(&["x^2-y^2", "x^2+y^2"]).groebner_basis();
        assert_eq!(gb_polys(&gb), vec!["y^2", "x^2"]);
    }

    #[test]
    fn jacobian_ideal_of_fermat_cubic() {
        let gb = ideal(&["3*x^2", "3*y^2", "3*z^2"]).groebner_basis();
        assert_eq!(gb_polys(&gb), vec!["z^2", "y^2", "x^2"]);
    }

    #[test]
    fn normal_form_examples() {
        let gb = ideal(&["x", "y", "z"]).groebner_basis();
        let one = ModuleElement::from_poly(qp("1"));
        assert_eq!(gb.normal_form(&one).unwrap().entries[0], qp("1"));
        let gb2 = ideal(&["x^2", "y^2"]).groebner_basis();
        assert!(gb2.contains_poly(&qp("x^2*y")).unwrap());
        assert!(gb2.contains_poly(&qp("x^2+y^2")).unwrap());
        assert!(!gb2.contains_poly(&qp("x*y")).unwrap());
    }

    #[test]
    fn normal_form_is_independent_of_basis_order() {
        let gb = ideal(&["x^2 - y*z", "y^3 + z^3"]).groebner_basis();
        let shuffled = GradedSubmodule::ideal(
            &Rationals,
            gb.elements.iter().rev().map(|e| e.entries[0].clone()).collect(),
        )
        .unwrap()
        .groebner_basis();
        for probe in ["x^4 + x*y*z", "x^3*y^3 - z", "x^2*y^2*z^2 + x^5 - y^5"] {
            let v = ModuleElement::from_poly(qp(probe));
            assert_eq!(
                gb.normal_form(&v).unwrap(),
                shuffled.normal_form(&v).unwrap()
            );
        }
    }

    #[test]
    fn syzygies_of_a_single_nonzerodivisor_vanish() {
        let syz = ideal(&["x"]).syzygy_basis();
        assert!(syz.is_zero_module());
    }

    #[test]
    fn koszul_syzygy_of_two_variables() {
        let syz = ideal(&["x", "y"]).syzygy_basis().minimalize_generators();
        assert_eq!(syz.gens().len(), 1);
        let g = &syz.gens()[0];
        assert_eq!(g.entries[0], qp("y"));
        assert_eq!(g.entries[1], qp("-x"));
    }

    #[test]
    fn syzygies_annihilate_their_generators() {
        let gens = ["y*z", "x*z", "x*y"];
        let module = ideal(&gens);
        let syz = module.syzygy_basis();
        assert!(!syz.is_zero_module());
        for s in syz.gens() {
            let mut acc = qp("0");
            for (c, g) in s.entries.iter().zip(gens.iter()) {
                acc = acc.add(&c.mul(&qp(g)));
            }
            assert!(acc.is_zero(), "broken syzygy {s:?}");
        }
        let min = syz.minimalize_generators();
        assert_eq!(min.gens().len(), 2);
        for g in min.gens() {
            assert_eq!(g.graded_degree(min.shifts()).unwrap(), Some(3));
        }
    }

    #[test]
    fn minimalize_drops_redundant_generators() {
        let m = ideal(&["x", "x^2", "y"]);
        let min = m.minimalize_generators();
        let polys: Vec<String> = min.gens().iter().map(|g| format!("{}", g.entries[0])).collect();
        assert_eq!(polys, vec!["x", "y"]);
        // an already-minimal set survives unchanged
        let m2 = ideal(&["x", "y"]).minimalize_generators();
        assert_eq!(m2.gens().len(), 2);
    }

    #[test]
    fn removing_any_minimal_generator_shrinks_the_module() {
        let min = ideal(&["y*z", "x*z", "x*y"]).syzygy_basis().minimalize_generators();
        for omit in 0..min.gens().len() {
            let rest: Vec<ModuleElement<Rationals>> = min
                .gens()
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != omit)
                .map(|(_, g)| g.clone())
                .collect();
            let sub = GradedSubmodule::new(&Rationals, min.rank(), min.shifts().to_vec(), rest)
                .unwrap()
                .groebner_basis();
            assert!(!sub.contains(&min.gens()[omit]).unwrap());
        }
    }

    #[test]
    fn ideal_quotients() {
        let q1 = ideal(&["x^2"]).ideal_quotient(&ideal(&["x"])).unwrap();
        assert!(q1.equal(&ideal(&["x"])).unwrap());

        let q2 = ideal(&["x", "y"]).ideal_quotient(&ideal(&["z"])).unwrap();
        assert!(q2.equal(&ideal(&["x", "y"])).unwrap());

        let m = GradedSubmodule::maximal_ideal(&Rationals);
        let m2 = GradedSubmodule::maximal_ideal_power(&Rationals, 2);
        assert!(m2.ideal_quotient(&m).unwrap().equal(&m).unwrap());
    }

    #[test]
    fn saturation_examples() {
        let m2 = GradedSubmodule::maximal_ideal_power(&Rationals, 2);
        assert!(m2.saturation().unwrap().equal(&GradedSubmodule::unit_ideal(&Rationals)).unwrap());

        let principal = ideal(&["x"]);
        assert!(principal.saturation().unwrap().equal(&principal).unwrap());

        // Jacobian ideal of a smooth curve is m-primary
        let j = ideal(&["3*x^2", "3*y^2", "3*z^2"]);
        assert!(j.saturation().unwrap().equal(&GradedSubmodule::unit_ideal(&Rationals)).unwrap());

        // idempotence
        let j2 = ideal(&["y*z", "x*z", "x*y"]);
        let s1 = j2.saturation().unwrap();
        let s2 = s1.saturation().unwrap();
        assert!(s1.equal(&s2).unwrap());
    }

    #[test]
    fn ideal_equality() {
        assert!(ideal(&["x", "y"]).equal(&ideal(&["y", "x"])).unwrap());
        assert!(ideal(&["x", "y"]).equal(&ideal(&["x+y", "x-y"])).unwrap());
        assert!(!ideal(&["x"]).equal(&ideal(&["x^2"])).unwrap());
    }

    #[test]
    fn hilbert_series_of_quotients() {
        let h = GradedSubmodule::maximal_ideal(&Rationals).hilbert_series();
        assert_eq!(h.finite_dimensions(), Some((0, vec![1])));

        let h2 = ideal(&["x^2", "y^2", "z^2"]).hilbert_series();
        assert_eq!(h2.finite_dimensions(), Some((0, vec![1, 3, 3, 1])));
    }

    #[test]
    fn krull_dimensions() {
        let field = Rationals;
        assert_eq!(GradedSubmodule::unit_ideal(&field).krull_dimension_of_quotient().unwrap(), -1);
        assert_eq!(GradedSubmodule::zero_ideal(&field).krull_dimension_of_quotient().unwrap(), 3);
        assert_eq!(GradedSubmodule::maximal_ideal(&field).krull_dimension_of_quotient().unwrap(), 0);
        assert_eq!(ideal(&["y*z", "x*z", "x*y"]).krull_dimension_of_quotient().unwrap(), 1);
        assert_eq!(ideal(&["x"]).krull_dimension_of_quotient().unwrap(), 2);
    }

    #[test]
    fn buchberger_criterion_spot_check() {
        // every S-pair of the output reduces to zero
        let gb = ideal(&["x^2 - y*z", "x*y - z^2", "y^2*z - x*z^2"]).groebner_basis();
        let n = gb.elements.len();
        for i in 0..n {
            for j in i + 1..n {
                let fi = &gb.elements[i].entries[0];
                let fj = &gb.elements[j].entries[0];
                let (mi, _) = fi.leading().unwrap();
                let (mj, _) = fj.leading().unwrap();
                let l = mi.lcm(mj);
                let s = fi
                    .mul_monomial(&l.try_div(mi).unwrap())
                    .sub(&fj.mul_monomial(&l.try_div(mj).unwrap()));
                assert!(gb.contains_poly(&s).unwrap());
            }
        }
    }

    #[test]
    fn works_over_prime_fields() {
        let fp = PrimeField::new(1_048_583).unwrap();
        let p = |s: &str| parse_polynomial(s, &fp).unwrap();
        let i = GradedSubmodule::ideal(&fp, vec![p("x^2-y^2"), p("x^2+y^2")]).unwrap();
        let gb = i.groebner_basis();
        let polys: Vec<String> = gb.elements.iter().map(|e| format!("{}", e.entries[0])).collect();
        assert_eq!(polys, vec!["y^2", "x^2"]);
    }
}
