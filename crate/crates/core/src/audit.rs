//! Computational audits of the structural results: the pairing/Fitting
//! identity with its scalar proportionality, the 3-syzygy complete
//! intersection picture, and the four-way maximal-Tjurina equivalence.

use std::collections::BTreeMap;

use crate::classify::dpw_bound;
use crate::curve::{
    hilbert_series_n_formula, JacobianModuleData, PairingIdeal, SecondSyzygyData,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{GradedSubmodule, GroebnerBasis};
use crate::hilbert::HilbertData;
use crate::matrix::rank_of_span;
use crate::monomial::dim_of_degree;
use crate::poly::Poly;

/// Audit of the pairing ideal against the Fitting ideal, with the
/// nonvanishing and degree facts that feed it.
#[derive(Clone, Debug)]
pub struct PairingFittingAudit {
    /// Every pairing g_jk is nonzero.
    pub pairings_nonzero: bool,
    /// Every signed minor m_ab is nonzero.
    pub minors_nonzero: bool,
    /// deg g_jk = d_j + d_k + 1 - d and deg m_ab matches it.
    pub degrees_match: bool,
    /// I(C) = Fitt_0(N(f)) as ideals.
    pub ic_equals_fitting: bool,
    /// S/I(C) is Artinian (both are the unit ideal for free curves).
    pub ic_m_primary: bool,
    /// g_jk * m_ab = +- g_ab * m_jk for all pairs of index pairs.
    pub proportionality: bool,
}

impl PairingFittingAudit {
    pub fn all_pass(&self) -> bool {
        self.pairings_nonzero
            && self.minors_nonzero
            && self.degrees_match
            && self.ic_equals_fitting
            && self.ic_m_primary
            && self.proportionality
    }
}

pub fn pairing_fitting_audit<K: Field>(
    pairing: &PairingIdeal<K>,
    minors: &BTreeMap<(usize, usize), Poly<K>>,
    fitting: &GradedSubmodule<K>,
    data: &SecondSyzygyData<K>,
    ic_hilbert: &HilbertData,
) -> Result<PairingFittingAudit> {
    let d = data.exponents.d as i64;
    let degs = &data.exponents.degrees;
    let pairings_nonzero = pairing.pairings.values().all(|g| !g.is_zero());
    let minors_nonzero = minors.values().all(|m| !m.is_zero());

    let mut degrees_match = true;
    for ((j, k), g) in &pairing.pairings {
        let expected = degs[*j] as i64 + degs[*k] as i64 + 1 - d;
        match g.homogeneous_degree()? {
            Some(deg) if deg as i64 == expected => {}
            _ => degrees_match = false,
        }
    }
    for ((a, b), mab) in minors {
        let expected = degs[*a] as i64 + degs[*b] as i64 + 1 - d;
        match mab.homogeneous_degree()? {
            Some(deg) if deg as i64 == expected => {}
            None => {} // zero minors are caught by minors_nonzero
            _ => degrees_match = false,
        }
    }

    let ic_equals_fitting = pairing.ideal.equal(fitting)?;
    let ic_m_primary = ic_hilbert.cone_dimension() <= 0;

    let mut proportionality = true;
    let keys: Vec<(usize, usize)> = pairing.pairings.keys().copied().collect();
    'outer: for (i, jk) in keys.iter().enumerate() {
        for ab in keys.iter().skip(i + 1) {
            let lhs = pairing.pairings[jk].mul(&minors[ab]);
            let rhs = pairing.pairings[ab].mul(&minors[jk]);
            if lhs != rhs && lhs != rhs.neg() {
                proportionality = false;
                break 'outer;
            }
        }
    }

    Ok(PairingFittingAudit {
        pairings_nonzero,
        minors_nonzero,
        degrees_match,
        ic_equals_fitting,
        ic_m_primary,
        proportionality,
    })
}

/// Audit of the 3-syzygy picture: I(C) = (h1, h2, h3) is a complete
/// intersection presenting N(f) as a shifted Gorenstein quotient, with
/// the pairings proportional to the h's by one scalar.
#[derive(Clone, Debug)]
pub struct ThreeSyzygyAudit {
    /// I(C) = (h1, h2, h3) as ideals.
    pub ic_equals_h_ideal: bool,
    /// g12 = c h3, g13 = -c h2, g23 = c h1 for one nonzero scalar c.
    pub scalar_pattern: bool,
    /// Closed-form series equals the saturation-computed n-vector.
    pub series_matches: bool,
    /// sigma from the formula equals the observed initial degree.
    pub sigma_matches: bool,
    /// S/I(C) Hilbert vector is symmetric.
    pub gorenstein_symmetric: bool,
    /// S/I(C) has the complete-intersection product series.
    pub complete_intersection: bool,
    /// Fitt_0 * I_f lands in J_f (here Fitt_0 = Ann N(f)).
    pub annihilation: bool,
}

impl ThreeSyzygyAudit {
    pub fn all_pass(&self) -> bool {
        self.ic_equals_h_ideal
            && self.scalar_pattern
            && self.series_matches
            && self.sigma_matches
            && self.gorenstein_symmetric
            && self.complete_intersection
            && self.annihilation
    }
}

pub fn three_syzygy_audit<K: Field>(
    f: &Poly<K>,
    pairing: &PairingIdeal<K>,
    data: &SecondSyzygyData<K>,
    jd: &JacobianModuleData,
    ic_hilbert: &HilbertData,
    jacobian_gb: &GroebnerBasis<K>,
    saturated: &GradedSubmodule<K>,
) -> Result<ThreeSyzygyAudit> {
    if data.cols() != 3 || data.rows() != 1 {
        return Err(Error::NotThreeSyzygy(data.cols()));
    }
    let field = f.field();
    let exp = &data.exponents;
    let h = &data.h[0];

    let h_ideal = GradedSubmodule::ideal(field, h.to_vec())?;
    let ic_equals_h_ideal = pairing.ideal.equal(&h_ideal)?;

    // one scalar c with g12 = c h3, g13 = -c h2, g23 = c h1
    let scalar_pattern = (|| -> Result<bool> {
        let g12 = &pairing.pairings[&(0, 1)];
        let g13 = &pairing.pairings[&(0, 2)];
        let g23 = &pairing.pairings[&(1, 2)];
        if h.iter().any(|x| x.is_zero()) || g12.is_zero() {
            return Ok(false);
        }
        let Ok(c) = g12.exact_divide(&h[2]) else {
            return Ok(false);
        };
        if !c.is_constant() {
            return Ok(false);
        }
        let c_val = c.terms()[0].1.clone();
        let want_g13 = h[1].scale(&field.neg(&c_val));
        let want_g23 = h[0].scale(&c_val);
        Ok(*g13 == want_g13 && *g23 == want_g23)
    })()?;

    let (formula, sigma) = hilbert_series_n_formula(
        exp.d,
        exp.degrees[0],
        exp.degrees[1],
        exp.degrees[2],
    )?;
    let lo = sigma.min(0) - 1;
    let hi = jd.t_degree.max(sigma) + 2;
    let series_matches = (lo..=hi).all(|k| formula.dim_at(k) == jd.n_at(k));
    let sigma_matches = match jd.sigma {
        Some(s) => s == sigma,
        None => formula.finite_dimensions().map(|(_, v)| v.is_empty()) == Some(true),
    };

    let gorenstein_symmetric = ic_hilbert.is_symmetric() == Some(true);

    // complete intersection: the quotient series is the product of
    // geometric sums with the h-degrees
    let complete_intersection = (|| -> Result<bool> {
        let mut expected = vec![1u64];
        for hi_poly in h {
            let Some(a) = hi_poly.homogeneous_degree()? else {
                return Ok(false);
            };
            let a = a as usize;
            let mut next = vec![0u64; expected.len() + a.saturating_sub(1)];
            for (i, &c) in expected.iter().enumerate() {
                for j in 0..a {
                    next[i + j] += c;
                }
            }
            expected = next;
        }
        while expected.last() == Some(&0) {
            expected.pop();
        }
        Ok(ic_hilbert.finite_dimensions() == Some((0, expected)))
    })()?;

    // Fitt_0 = Ann here, so every h_i multiplies the saturation into J_f
    let mut annihilation = true;
    'ann: for hi_poly in h {
        for g in saturated.gens() {
            let product = hi_poly.mul(&g.entries[0]);
            if !jacobian_gb.contains_poly(&product)? {
                annihilation = false;
                break 'ann;
            }
        }
    }

    Ok(ThreeSyzygyAudit {
        ic_equals_h_ideal,
        scalar_pattern,
        series_matches,
        sigma_matches,
        gorenstein_symmetric,
        complete_intersection,
        annihilation,
    })
}

/// The four equivalent characterizations of a maximal Tjurina curve,
/// each evaluated independently. They must agree; disagreement is an
/// equivalence violation.
#[derive(Clone, Debug)]
pub struct MaximalTjurinaAudit {
    /// (1) equal exponents, m = 2 d1 - d + 3, tau at the bound.
    pub char_type: bool,
    /// (2) H has only linear entries.
    pub char_linear_entries: bool,
    /// (3) I(C) = m^(2 d1 - d + 1), with the minors spanning that graded
    /// piece.
    pub char_power_ideal: bool,
    /// (4) the S/I(C) series is the truncated full series.
    pub char_series: bool,
}

impl MaximalTjurinaAudit {
    pub fn verdict(&self) -> bool {
        self.char_type
    }

    pub fn booleans(&self) -> [bool; 4] {
        [
            self.char_type,
            self.char_linear_entries,
            self.char_power_ideal,
            self.char_series,
        ]
    }
}

pub fn maximal_tjurina_audit<K: Field>(
    pairing: &PairingIdeal<K>,
    minors: &BTreeMap<(usize, usize), Poly<K>>,
    data: &SecondSyzygyData<K>,
    jd: &JacobianModuleData,
    ic_hilbert: &HilbertData,
) -> Result<MaximalTjurinaAudit> {
    let m = data.cols();
    if m < 3 {
        return Err(Error::NotThreeSyzygy(m));
    }
    let field = pairing.ideal.field().clone();
    let d = data.exponents.d;
    let d1 = data.exponents.mdr();
    let degs = &data.exponents.degrees;

    // (1) type condition with tau at the independently evaluated bound
    let char_type = degs.iter().all(|&x| x == d1)
        && 2 * d1 as i64 - d as i64 + 3 == m as i64
        && 2 * d1 >= d
        && dpw_bound(d, d1)? == jd.tau as i64;

    // (2) every nonzero entry of H is a linear form
    let mut char_linear_entries = true;
    'rows: for row in &data.h {
        for entry in row {
            match entry.homogeneous_degree()? {
                None | Some(1) => {}
                Some(_) => {
                    char_linear_entries = false;
                    break 'rows;
                }
            }
        }
    }

    // (3) I(C) = m^k for k = 2 d1 - d + 1, and the minors span S_k
    let k = 2 * d1 as i64 - d as i64 + 1;
    let char_power_ideal;
    let minors_span;
    if k < 0 {
        char_power_ideal = false;
        minors_span = false;
    } else {
        let power = GradedSubmodule::maximal_ideal_power(&field, k as u32);
        char_power_ideal = pairing.ideal.equal(&power)?;
        let minor_polys: Vec<Poly<K>> = minors.values().cloned().collect();
        minors_span = minor_polys
            .iter()
            .map(|p| p.homogeneous_degree())
            .collect::<Result<Vec<_>>>()?
            .iter()
            .all(|deg| *deg == Some(k as u32))
            && rank_of_span(&field, &minor_polys, k as u32)? as u64 == dim_of_degree(k);
    }
    if char_power_ideal != minors_span {
        return Err(Error::Internal(format!(
            "power-ideal test ({char_power_ideal}) disagrees with the minor span test ({minors_span})"
        )));
    }

    // (4) truncated-full-ring series
    let char_series = if k < 0 {
        false
    } else {
        let expected: Vec<u64> = (0..k).map(dim_of_degree).collect();
        ic_hilbert.finite_dimensions() == Some((0, expected))
    };

    let audit = MaximalTjurinaAudit {
        char_type,
        char_linear_entries,
        char_power_ideal,
        char_series,
    };
    let b = audit.booleans();
    if b.iter().any(|&x| x != b[0]) {
        return Err(Error::EquivalenceViolated(format!(
            "maximal-Tjurina characterizations disagree: {b:?}"
        )));
    }
    Ok(audit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{compute_ar, ideal_ic, jacobian_module_data, second_syzygy_matrix, signed_minors};
    use crate::field::Rationals;
    use crate::parser::parse_polynomial;

    fn analyze_parts(
        src: &str,
    ) -> (
        Poly<Rationals>,
        PairingIdeal<Rationals>,
        SecondSyzygyData<Rationals>,
        BTreeMap<(usize, usize), Poly<Rationals>>,
        JacobianModuleData,
        HilbertData,
    ) {
        let f = parse_polynomial(src, &Rationals).unwrap();
        let (rhos, exp) = compute_ar(&f).unwrap();
        let pairing = ideal_ic(&rhos, &f).unwrap();
        let data = second_syzygy_matrix(&rhos, &exp).unwrap();
        let minors = signed_minors(&data, &Rationals).unwrap();
        let jd = jacobian_module_data(&f).unwrap();
        let ic_hilbert = pairing.ideal.hilbert_series();
        (f, pairing, data, minors, jd, ic_hilbert)
    }

    #[test]
    fn fermat_cubic_pairing_fitting_audit_passes() {
        let (_, pairing, data, minors, _, ic_hilbert) = analyze_parts("x^3+y^3+z^3");
        let fitting = crate::curve::fitting_ideal(&minors, &Rationals).unwrap();
        let audit =
            pairing_fitting_audit(&pairing, &minors, &fitting, &data, &ic_hilbert).unwrap();
        assert!(audit.all_pass(), "{audit:?}");
    }

    #[test]
    fn fermat_cubic_three_syzygy_audit_passes() {
        let (f, pairing, data, _, jd, ic_hilbert) = analyze_parts("x^3+y^3+z^3");
        let partials = crate::poly::partial_derivatives(&f).unwrap();
        let jacobian = GradedSubmodule::ideal(&Rationals, partials.to_vec()).unwrap();
        let jacobian_gb = jacobian.groebner_basis();
        let saturated = jacobian.saturation().unwrap();
        let audit = three_syzygy_audit(
            &f, &pairing, &data, &jd, &ic_hilbert, &jacobian_gb, &saturated,
        )
        .unwrap();
        assert!(audit.all_pass(), "{audit:?}");
    }

    #[test]
    fn smooth_conic_is_maximal_tjurina() {
        let (_, pairing, data, minors, jd, ic_hilbert) = analyze_parts("x^2+y*z");
        let audit =
            maximal_tjurina_audit(&pairing, &minors, &data, &jd, &ic_hilbert).unwrap();
        assert!(audit.verdict());
        assert_eq!(audit.booleans(), [true; 4]);
    }

    #[test]
    fn smooth_cubic_is_not_maximal_tjurina() {
        let (_, pairing, data, minors, jd, ic_hilbert) = analyze_parts("x^3+y^3+z^3");
        let audit =
            maximal_tjurina_audit(&pairing, &minors, &data, &jd, &ic_hilbert).unwrap();
        assert!(!audit.verdict());
        assert_eq!(audit.booleans(), [false; 4]);
    }
}
