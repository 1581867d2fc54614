//! Invariants of a reduced plane curve C : f = 0 derived from its
//! Jacobian syzygies.
//!
//! The chain of objects: the syzygy module AR(f) with a minimal
//! generating set and its exponents; the skew pairing
//! phi(r, s) = det(E, r, s) / f whose values generate the ideal I(C); the
//! matrix H of second-order syzygies with its degree bookkeeping; the
//! signed maximal minors of H and the Fitting ideal they generate; and
//! the graded data of the Jacobian module N(f) = I_f / J_f (tau, sigma,
//! nu and the dimension vector n_k).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{GradedSubmodule, ModuleElement};
use crate::hilbert::HilbertData;
use crate::matrix::{det3, determinant, kernel_basis};
use crate::monomial::Monomial;
use crate::poly::{euler_vector, partial_derivatives, Poly};

/// A Jacobian syzygy: (a, b, c) with a f_x + b f_y + c f_z = 0, all three
/// components homogeneous of the same degree.
#[derive(Clone, Debug)]
pub struct SyzygyVector<K: Field> {
    pub triple: [Poly<K>; 3],
    pub degree: u32,
}

impl<K: Field> SyzygyVector<K> {
    /// Exact check of the defining relation against the given partials.
    pub fn annihilates(&self, partials: &[Poly<K>; 3]) -> bool {
        let mut acc = Poly::zero(self.triple[0].field());
        for (c, p) in self.triple.iter().zip(partials.iter()) {
            acc = acc.add(&c.mul(p));
        }
        acc.is_zero()
    }
}

/// Degrees d_1 <= ... <= d_m of a minimal generating set of AR(f).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exponents {
    pub d: u32,
    pub degrees: Vec<u32>,
}

impl Exponents {
    pub fn m(&self) -> usize {
        self.degrees.len()
    }

    /// mdr(f) = d_1, the minimal degree of a Jacobian syzygy.
    pub fn mdr(&self) -> u32 {
        self.degrees[0]
    }
}

/// The (m-2) x m matrix H of second-order syzygies together with its
/// degree bookkeeping: row i satisfies sum_k h_ik rho_k = 0, the row
/// degrees e_i and the epsilon_i from e_i = d + d_{i+2} - 1 + eps_i.
#[derive(Clone, Debug)]
pub struct SecondSyzygyData<K: Field> {
    pub h: Vec<Vec<Poly<K>>>,
    pub row_degrees_e: Vec<i64>,
    pub epsilons: Vec<i64>,
    pub exponents: Exponents,
}

impl<K: Field> SecondSyzygyData<K> {
    pub fn rows(&self) -> usize {
        self.h.len()
    }

    pub fn cols(&self) -> usize {
        self.exponents.m()
    }
}

/// Graded data of the Jacobian module N(f) = I_f / J_f.
#[derive(Clone, Debug)]
pub struct JacobianModuleData {
    /// Stabilized dimension of the Milnor algebra: the global Tjurina
    /// number.
    pub tau: u64,
    /// Initial degree of N(f); None when N(f) = 0 (free curves).
    pub sigma: Option<i64>,
    /// Maximal graded dimension of N(f).
    pub nu: u64,
    /// Duality center bound: n_k = n_{T-k} with T = 3(d-2).
    pub t_degree: i64,
    /// n_k for k = 0..=T.
    pub n_vector: Vec<u64>,
    /// Hilbert data of the Milnor algebra S/J_f.
    pub milnor: HilbertData,
    /// Hilbert data of S/I_f for the saturated ideal.
    pub saturated: HilbertData,
}

impl JacobianModuleData {
    /// n_k at any degree.
    pub fn n_at(&self, k: i64) -> u64 {
        if k < 0 || k > self.t_degree {
            0
        } else {
            self.n_vector[k as usize]
        }
    }
}

/// Checks that f defines a reduced, non-cone curve of degree >= 2 and
/// returns the degree.
///
/// Reducedness is read off the Jacobian ideal: a reduced curve has a
/// finite singular scheme, so the Hilbert polynomial of S/J_f is a
/// constant (cone dimension <= 1). A degree-zero syzygy (linearly
/// dependent partials) flags a union of lines through one point.
pub fn validate_curve<K: Field>(f: &Poly<K>) -> Result<u32> {
    let d = match f.homogeneous_degree()? {
        None => return Err(Error::ZeroPolynomial),
        Some(d) => d,
    };
    if d < 2 {
        return Err(Error::DegreeTooSmall(d));
    }
    let p = f.field().characteristic();
    if p != 0 && p <= 2 * d as u64 {
        return Err(Error::CharacteristicTooSmall { p, d });
    }
    let partials = partial_derivatives(f)?;
    let jacobian = GradedSubmodule::ideal(f.field(), partials.to_vec())?;
    if jacobian.krull_dimension_of_quotient()? > 1 {
        return Err(Error::NonReduced);
    }
    if constant_syzygy_exists(f.field(), &partials) {
        return Err(Error::ConeCurve);
    }
    Ok(d)
}

fn constant_syzygy_exists<K: Field>(field: &K, partials: &[Poly<K>; 3]) -> bool {
    let monos: std::collections::BTreeSet<Monomial> = partials
        .iter()
        .flat_map(|p| p.terms().iter().map(|(m, _)| *m))
        .collect();
    let rows: Vec<Vec<K::Elem>> = monos
        .iter()
        .map(|m| partials.iter().map(|p| p.coefficient(m)).collect())
        .collect();
    !kernel_basis(field, rows, 3).is_empty()
}

/// Minimal generators of AR(f) with their exponents, sorted by degree and
/// leading term; deterministic for a fixed field.
pub fn compute_ar<K: Field>(f: &Poly<K>) -> Result<(Vec<SyzygyVector<K>>, Exponents)> {
    let d = match f.homogeneous_degree()? {
        None => return Err(Error::ZeroPolynomial),
        Some(d) => d,
    };
    let partials = partial_derivatives(f)?;
    let jacobian = GradedSubmodule::ideal(f.field(), partials.to_vec())?;
    let minimal = jacobian.syzygy_basis().minimalize_generators();
    let mut rhos = Vec::with_capacity(minimal.gens().len());
    let mut degrees = Vec::with_capacity(minimal.gens().len());
    for g in minimal.gens() {
        let graded = g
            .graded_degree(minimal.shifts())?
            .ok_or_else(|| Error::Internal("zero syzygy generator".into()))?;
        let degree = graded - (d as i64 - 1);
        if degree < 0 {
            return Err(Error::ConeCurve);
        }
        if degree == 0 {
            return Err(Error::ConeCurve);
        }
        let triple = [g.entries[0].clone(), g.entries[1].clone(), g.entries[2].clone()];
        let v = SyzygyVector { triple, degree: degree as u32 };
        if !v.annihilates(&partials) {
            return Err(Error::Internal("computed syzygy fails its defining relation".into()));
        }
        degrees.push(v.degree);
        rhos.push(v);
    }
    if rhos.len() < 2 {
        return Err(Error::Internal(format!(
            "AR(f) reported {} generators; the module has rank two",
            rhos.len()
        )));
    }
    if degrees.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Internal("syzygy generators not sorted by degree".into()));
    }
    Ok((rhos, Exponents { d, degrees }))
}

/// The pairing phi(r1, r2) = det(E, r1, r2) / f. NotDivisible signals that
/// the inputs are not genuine syzygies of f.
pub fn phi_pairing<K: Field>(
    r1: &SyzygyVector<K>,
    r2: &SyzygyVector<K>,
    f: &Poly<K>,
) -> Result<Poly<K>> {
    let e = euler_vector(f.field());
    let rows = [e, r1.triple.clone(), r2.triple.clone()];
    let delta = det3(&rows);
    if delta.is_zero() {
        return Ok(delta);
    }
    delta.exact_divide(f)
}

/// The ideal I(C) generated by all pairings g_jk = phi(rho_j, rho_k),
/// j < k, with the labeled generators (0-indexed pairs).
pub struct PairingIdeal<K: Field> {
    pub ideal: GradedSubmodule<K>,
    pub pairings: BTreeMap<(usize, usize), Poly<K>>,
}

pub fn ideal_ic<K: Field>(rhos: &[SyzygyVector<K>], f: &Poly<K>) -> Result<PairingIdeal<K>> {
    let mut pairings = BTreeMap::new();
    for j in 0..rhos.len() {
        for k in j + 1..rhos.len() {
            pairings.insert((j, k), phi_pairing(&rhos[j], &rhos[k], f)?);
        }
    }
    let ideal = GradedSubmodule::ideal(f.field(), pairings.values().cloned().collect())?;
    Ok(PairingIdeal { ideal, pairings })
}

/// Minimal second-order syzygies among the rho_k, assembled into H with
/// the (res2B)/(res2C) degree bookkeeping verified. For a free curve
/// (m = 2) the matrix is empty and the identities degenerate to
/// d_1 + d_2 = d - 1, which is checked.
pub fn second_syzygy_matrix<K: Field>(
    rhos: &[SyzygyVector<K>],
    exponents: &Exponents,
) -> Result<SecondSyzygyData<K>> {
    let field = rhos[0].triple[0].field().clone();
    let m = rhos.len();
    let d = exponents.d as i64;
    let gens: Vec<ModuleElement<K>> = rhos
        .iter()
        .map(|r| ModuleElement::new(r.triple.to_vec()))
        .collect();
    let module = GradedSubmodule::new(&field, 3, vec![0, 0, 0], gens)?;
    let minimal = module.syzygy_basis().minimalize_generators();
    if minimal.gens().len() != m - 2 {
        return Err(Error::Internal(format!(
            "second syzygies: expected {} minimal relations, found {}",
            m - 2,
            minimal.gens().len()
        )));
    }
    let mut h = Vec::with_capacity(m - 2);
    let mut row_degrees_e = Vec::with_capacity(m - 2);
    let mut epsilons = Vec::with_capacity(m - 2);
    for (i, row) in minimal.gens().iter().enumerate() {
        // verify the relation sum_k h_ik rho_k = 0 componentwise
        for c in 0..3 {
            let mut acc = Poly::zero(&field);
            for (hk, rho) in row.entries.iter().zip(rhos.iter()) {
                acc = acc.add(&hk.mul(&rho.triple[c]));
            }
            if !acc.is_zero() {
                return Err(Error::Internal("second syzygy fails its relation".into()));
            }
        }
        let graded = row
            .graded_degree(minimal.shifts())?
            .ok_or_else(|| Error::Internal("zero second syzygy".into()))?;
        let e_i = graded + d - 1;
        let eps = e_i - (d + exponents.degrees[i + 2] as i64 - 1);
        if eps < 1 {
            return Err(Error::Internal(format!(
                "second syzygy degree identity violated: epsilon_{} = {eps}",
                i + 1
            )));
        }
        for (k, entry) in row.entries.iter().enumerate() {
            if let Some(deg) = entry.homogeneous_degree()? {
                let expected = e_i - exponents.degrees[k] as i64 + 1 - d;
                if deg as i64 != expected {
                    return Err(Error::Internal(format!(
                        "entry degree {} at ({}, {}) does not match e_i - d_k + 1 - d = {expected}",
                        deg,
                        i + 1,
                        k + 1
                    )));
                }
            }
        }
        row_degrees_e.push(e_i);
        epsilons.push(eps);
        h.push(row.entries.clone());
    }
    let eps_sum: i64 = epsilons.iter().sum();
    let expected_sum = exponents.degrees[0] as i64 + exponents.degrees[1] as i64 - d + 1;
    if eps_sum != expected_sum {
        return Err(Error::Internal(format!(
            "sum of epsilons {eps_sum} differs from d_1 + d_2 - d + 1 = {expected_sum}"
        )));
    }
    Ok(SecondSyzygyData { h, row_degrees_e, epsilons, exponents: exponents.clone() })
}

/// All signed maximal minors m_ab = (-1)^(a+b) det H_ab of H, where H_ab
/// drops columns a and b (1-indexed in the sign; the returned map is
/// 0-indexed). For m = 2 the empty matrix yields the unit minor.
pub fn signed_minors<K: Field>(
    data: &SecondSyzygyData<K>,
    field: &K,
) -> Result<BTreeMap<(usize, usize), Poly<K>>> {
    let m = data.cols();
    let mut minors = BTreeMap::new();
    for a in 0..m {
        for b in a + 1..m {
            let sub: Vec<Vec<Poly<K>>> = data
                .h
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != a && *k != b)
                        .map(|(_, p)| p.clone())
                        .collect()
                })
                .collect();
            let mut det = determinant(field, &sub)?;
            if (a + b) % 2 == 1 {
                det = det.neg();
            }
            minors.insert((a, b), det);
        }
    }
    Ok(minors)
}

/// The 0-th Fitting ideal of N(f): the ideal of all maximal minors of H.
/// For a free curve this is the unit ideal.
pub fn fitting_ideal<K: Field>(
    minors: &BTreeMap<(usize, usize), Poly<K>>,
    field: &K,
) -> Result<GradedSubmodule<K>> {
    GradedSubmodule::ideal(field, minors.values().cloned().collect())
}

/// Saturate the Jacobian ideal and extract the graded data of the
/// Jacobian module N(f) = I_f / J_f, with the duality n_k = n_{T-k}
/// verified (a violation aborts with a diagnostic).
pub fn jacobian_module_data<K: Field>(f: &Poly<K>) -> Result<JacobianModuleData> {
    let d = match f.homogeneous_degree()? {
        None => return Err(Error::ZeroPolynomial),
        Some(d) => d as i64,
    };
    let partials = partial_derivatives(f)?;
    let jacobian = GradedSubmodule::ideal(f.field(), partials.to_vec())?;
    let milnor = jacobian.hilbert_series();
    let saturated_ideal = jacobian.saturation()?;
    let saturated = saturated_ideal.hilbert_series();
    jacobian_data_from_series(d, milnor, saturated)
}

pub(crate) fn jacobian_data_from_series(
    d: i64,
    milnor: HilbertData,
    saturated: HilbertData,
) -> Result<JacobianModuleData> {
    let t_degree = 3 * (d - 2);
    let mut n_vector = Vec::with_capacity((t_degree + 1).max(0) as usize);
    for k in 0..=t_degree.max(0) {
        let mj = milnor.dim_at(k);
        let mi = saturated.dim_at(k);
        if mi > mj {
            return Err(Error::Internal(
                "saturation lost Jacobian ideal elements".into(),
            ));
        }
        if k <= t_degree {
            n_vector.push(mj - mi);
        }
    }
    // N(f) must vanish beyond T
    for k in t_degree + 1..=t_degree + 4 {
        if milnor.dim_at(k) != saturated.dim_at(k) {
            return Err(Error::Internal(format!(
                "Jacobian module does not vanish in degree {k} > T = {t_degree}"
            )));
        }
    }
    // duality across the center
    for k in 0..=t_degree {
        let dual = t_degree - k;
        if n_vector[k as usize] != n_vector[dual as usize] {
            return Err(Error::Internal(format!(
                "duality n_k = n_(T-k) fails at k = {k}: {} vs {}",
                n_vector[k as usize], n_vector[dual as usize]
            )));
        }
    }
    let sigma = n_vector.iter().position(|&x| x != 0).map(|i| i as i64);
    let nu = n_vector.iter().copied().max().unwrap_or(0);
    // support must be exactly sigma..T-sigma
    if let Some(s) = sigma {
        for k in s..=(t_degree - s) {
            if n_vector[k as usize] == 0 {
                return Err(Error::Internal(format!(
                    "Jacobian module support has a gap at degree {k}"
                )));
            }
        }
    }
    let tau = stabilized_value(&milnor, d)?;
    Ok(JacobianModuleData { tau, sigma, nu, t_degree, n_vector, milnor, saturated })
}

/// The Tjurina number as the stabilized dimension of the Milnor algebra:
/// three consecutive equal values probed from 2(d-2) up to 4d.
fn stabilized_value(milnor: &HilbertData, d: i64) -> Result<u64> {
    let lo = (2 * (d - 2)).max(0);
    let hi = 4 * d;
    for k in lo..=hi - 2 {
        let v = milnor.dim_at(k);
        if milnor.dim_at(k + 1) == v && milnor.dim_at(k + 2) == v {
            return Ok(v);
        }
    }
    Err(Error::Internal(format!(
        "Milnor algebra dimensions failed to stabilize below {hi}"
    )))
}

/// Closed-form Hilbert series of N(f) for a 3-syzygy curve with exponents
/// (d1, d2, d3): the shifted product of three geometric-sum factors.
/// Returns the series and sigma = 3(d-1) - (d1+d2+d3).
pub fn hilbert_series_n_formula(d: u32, d1: u32, d2: u32, d3: u32) -> Result<(HilbertData, i64)> {
    let (d, d1, d2, d3) = (d as i64, d1 as i64, d2 as i64, d3 as i64);
    let sigma = 3 * (d - 1) - (d1 + d2 + d3);
    let factors = [d1 + d2 - d + 1, d1 + d3 - d + 1, d2 + d3 - d + 1];
    if factors.iter().any(|&a| a < 1) || sigma < 0 {
        return Err(Error::Internal(format!(
            "series formula outside the 3-syzygy regime: factors {factors:?}, sigma {sigma}"
        )));
    }
    let mut coeffs = vec![1u64];
    for &a in &factors {
        let mut next = vec![0u64; coeffs.len() + a as usize - 1];
        for (i, &c) in coeffs.iter().enumerate() {
            for j in 0..a as usize {
                next[i + j] += c;
            }
        }
        coeffs = next;
    }
    Ok((HilbertData::from_finite_vector(sigma, coeffs), sigma))
}

/// H presents N(f) up to a degree shift: the cokernel of the columns of H
/// inside the twisted free module must align degreewise with the n-vector
/// for exactly one shift s (the Hilbert function of the cokernel at k
/// equals n_(k+s)). For a 3-syzygy curve s = 3(d-1) - (d1+d2+d3); for
/// free curves both sides vanish and s = 0.
pub fn presentation_shift_check<K: Field>(
    data: &SecondSyzygyData<K>,
    jd: &JacobianModuleData,
    field: &K,
) -> Result<i64> {
    let m = data.cols();
    let n_is_zero = jd.n_vector.iter().all(|&x| x == 0);
    if m == 2 {
        if n_is_zero {
            return Ok(0);
        }
        return Err(Error::NoAligningShift);
    }
    let total_d: i64 = data.exponents.degrees.iter().map(|&x| x as i64).sum();
    let shifts: Vec<i64> = data.row_degrees_e.iter().map(|&e| total_d - e).collect();
    let cols: Vec<ModuleElement<K>> = (0..m)
        .map(|k| ModuleElement::new(data.h.iter().map(|row| row[k].clone()).collect()))
        .collect();
    let module = GradedSubmodule::new(field, m - 2, shifts, cols)?;
    let hilbert = module.hilbert_series();
    let Some((q_start, q)) = hilbert.finite_dimensions() else {
        return Err(Error::NoAligningShift);
    };
    if q.is_empty() {
        if n_is_zero {
            return Ok(0);
        }
        return Err(Error::NoAligningShift);
    }
    if n_is_zero {
        return Err(Error::NoAligningShift);
    }
    let n_first = jd
        .n_vector
        .iter()
        .position(|&x| x != 0)
        .expect("nonzero checked") as i64;
    let shift = n_first - q_start;
    let lo = q_start.min(n_first - shift) - 2;
    let hi = (q_start + q.len() as i64).max(jd.t_degree - shift) + 2;
    for k in lo..=hi {
        let qk = hilbert.dim_at(k);
        if qk != jd.n_at(k + shift) {
            return Err(Error::NoAligningShift);
        }
    }
    Ok(shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::parser::parse_polynomial;

    fn qp(s: &str) -> Poly<Rationals> {
        parse_polynomial(s, &Rationals).unwrap()
    }

    #[test]
    fn validation_catches_the_spec_cases() {
        assert!(matches!(validate_curve(&qp("x^2*y")), Err(Error::NonReduced)));
        assert_eq!(validate_curve(&qp("x^2+y*z")).unwrap(), 2);
        assert!(matches!(
            validate_curve(&qp("x*y*(x+y)")),
            Err(Error::ConeCurve)
        ));
        assert!(matches!(validate_curve(&qp("x^2+y")), Err(Error::NotHomogeneous)));
        assert!(matches!(validate_curve(&qp("x")), Err(Error::DegreeTooSmall(1))));
        assert!(matches!(validate_curve(&qp("0")), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn small_characteristic_is_refused() {
        let f7 = crate::field::PrimeField::new(7).unwrap();
        let f = parse_polynomial("x^4+y^4+z^4", &f7).unwrap();
        assert!(matches!(
            validate_curve(&f),
            Err(Error::CharacteristicTooSmall { p: 7, d: 4 })
        ));
    }

    #[test]
    fn triangle_is_free_with_exponents_one_one() {
        let f = qp("x*y*z");
        let (rhos, exp) = compute_ar(&f).unwrap();
        assert_eq!(exp.degrees, vec![1, 1]);
        assert_eq!(rhos.len(), 2);
    }

    #[test]
    fn fermat_cubic_has_koszul_syzygies() {
        let f = qp("x^3+y^3+z^3");
        let (rhos, exp) = compute_ar(&f).unwrap();
        assert_eq!(exp.degrees, vec![2, 2, 2]);
        let partials = partial_derivatives(&f).unwrap();
        for r in &rhos {
            assert!(r.annihilates(&partials));
        }
    }

    #[test]
    fn phi_pairing_examples() {
        let field = Rationals;
        let f = qp("x*y*z");
        let r1 = SyzygyVector { triple: [qp("x"), qp("-y"), qp("0")], degree: 1 };
        let r2 = SyzygyVector { triple: [qp("x"), qp("0"), qp("-z")], degree: 1 };
        // skew-symmetry: phi(r, r) = 0
        assert!(phi_pairing(&r1, &r1, &f).unwrap().is_zero());
        assert_eq!(phi_pairing(&r1, &r2, &f).unwrap(), Poly::from_i64(&field, 3));

        let g = qp("x^3+y^3+z^3");
        let s1 = SyzygyVector { triple: [qp("y^2"), qp("-x^2"), qp("0")], degree: 2 };
        let s2 = SyzygyVector { triple: [qp("z^2"), qp("0"), qp("-x^2")], degree: 2 };
        assert_eq!(phi_pairing(&s1, &s2, &g).unwrap(), qp("x^2"));
    }

    #[test]
    fn pairing_ideal_of_fermat_cubic_is_the_jacobian_ideal() {
        let f = qp("x^3+y^3+z^3");
        let (rhos, _) = compute_ar(&f).unwrap();
        let pairing = ideal_ic(&rhos, &f).unwrap();
        assert_eq!(pairing.pairings.len(), 3);
        let j = GradedSubmodule::ideal(&Rationals, vec![qp("x^2"), qp("y^2"), qp("z^2")]).unwrap();
        assert!(pairing.ideal.equal(&j).unwrap());
    }

    #[test]
    fn free_curve_pairing_is_a_unit() {
        let f = qp("x*y*z");
        let (rhos, _) = compute_ar(&f).unwrap();
        let pairing = ideal_ic(&rhos, &f).unwrap();
        let g = &pairing.pairings[&(0, 1)];
        assert!(g.is_constant());
    }

    #[test]
    fn second_syzygies_of_the_fermat_cubic_are_koszul() {
        let f = qp("x^3+y^3+z^3");
        let (rhos, exp) = compute_ar(&f).unwrap();
        let data = second_syzygy_matrix(&rhos, &exp).unwrap();
        assert_eq!(data.rows(), 1);
        assert_eq!(data.row_degrees_e, vec![6]); // 3(d-1) for d = 3
        assert_eq!(data.epsilons, vec![2]); // d - 1
        // the single row spans (f_x, f_y, f_z) up to scale
        let row = GradedSubmodule::ideal(&Rationals, data.h[0].clone()).unwrap();
        let j = GradedSubmodule::ideal(&Rationals, vec![qp("x^2"), qp("y^2"), qp("z^2")]).unwrap();
        assert!(row.equal(&j).unwrap());
    }

    #[test]
    fn free_curve_second_syzygy_data_is_empty() {
        let f = qp("x*y*z");
        let (rhos, exp) = compute_ar(&f).unwrap();
        let data = second_syzygy_matrix(&rhos, &exp).unwrap();
        assert_eq!(data.rows(), 0);
        let minors = signed_minors(&data, &Rationals).unwrap();
        assert_eq!(minors.len(), 1);
        assert!(minors[&(0, 1)].is_constant());
        let fitt = fitting_ideal(&minors, &Rationals).unwrap();
        assert!(fitt.equal(&GradedSubmodule::unit_ideal(&Rationals)).unwrap());
    }

    #[test]
    fn fermat_cubic_fitting_ideal_is_the_jacobian_ideal() {
        let f = qp("x^3+y^3+z^3");
        let (rhos, exp) = compute_ar(&f).unwrap();
        let data = second_syzygy_matrix(&rhos, &exp).unwrap();
        let minors = signed_minors(&data, &Rationals).unwrap();
        assert_eq!(minors.len(), 3);
        for p in minors.values() {
            assert_eq!(p.homogeneous_degree().unwrap(), Some(2));
        }
        let fitt = fitting_ideal(&minors, &Rationals).unwrap();
        let j = GradedSubmodule::ideal(&Rationals, vec![qp("x^2"), qp("y^2"), qp("z^2")]).unwrap();
        assert!(fitt.equal(&j).unwrap());
    }

    #[test]
    fn jacobian_module_of_smooth_cubic() {
        let jd = jacobian_module_data(&qp("x^3+y^3+z^3")).unwrap();
        assert_eq!(jd.tau, 0);
        assert_eq!(jd.n_vector, vec![1, 3, 3, 1]);
        assert_eq!(jd.sigma, Some(0));
        assert_eq!(jd.nu, 3);
        assert_eq!(jd.t_degree, 3);
    }

    #[test]
    fn jacobian_module_of_the_triangle() {
        let jd = jacobian_module_data(&qp("x*y*z")).unwrap();
        assert_eq!(jd.tau, 3);
        assert_eq!(jd.nu, 0);
        assert_eq!(jd.sigma, None);
    }

    #[test]
    fn series_formula_matches_smooth_cubic() {
        let (h, sigma) = hilbert_series_n_formula(3, 2, 2, 2).unwrap();
        assert_eq!(sigma, 0);
        assert_eq!(h.finite_dimensions(), Some((0, vec![1, 3, 3, 1])));
    }

    #[test]
    fn presentation_shift_of_fermat_cubic_is_sigma() {
        let f = qp("x^3+y^3+z^3");
        let (rhos, exp) = compute_ar(&f).unwrap();
        let data = second_syzygy_matrix(&rhos, &exp).unwrap();
        let jd = jacobian_module_data(&f).unwrap();
        let shift = presentation_shift_check(&data, &jd, &Rationals).unwrap();
        assert_eq!(shift, 0); // 3(d-1) - (d1+d2+d3) = 6 - 6
    }

    #[test]
    fn presentation_shift_of_free_curve_is_zero() {
        let f = qp("x*y*z");
        let (rhos, exp) = compute_ar(&f).unwrap();
        let data = second_syzygy_matrix(&rhos, &exp).unwrap();
        let jd = jacobian_module_data(&f).unwrap();
        assert_eq!(presentation_shift_check(&data, &jd, &Rationals).unwrap(), 0);
    }
}
