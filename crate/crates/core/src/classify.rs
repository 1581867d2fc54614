//! Curve taxonomy: free, nearly free, plus-one generated, 3-syzygy and
//! maximal Tjurina labels, plus the du Plessis-Wall bound.

use std::fmt;

use crate::curve::{Exponents, JacobianModuleData};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CurveLabel {
    Free,
    NearlyFree,
    PlusOneGenerated,
    ThreeSyzygy,
    MaximalTjurina { d: u32, d1: u32 },
}

impl fmt::Display for CurveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveLabel::Free => write!(f, "free"),
            CurveLabel::NearlyFree => write!(f, "nearly-free"),
            CurveLabel::PlusOneGenerated => write!(f, "plus-one-generated"),
            CurveLabel::ThreeSyzygy => write!(f, "three-syzygy"),
            CurveLabel::MaximalTjurina { d, d1 } => {
                write!(f, "maximal-tjurina({d},{d1})")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub labels: Vec<CurveLabel>,
    /// Number of minimal generators of AR(f).
    pub m: usize,
    /// du Plessis-Wall upper bound for tau, when d1 >= d/2.
    pub dpw_bound: Option<i64>,
    /// bound - tau, when the bound applies.
    pub tau_margin: Option<i64>,
}

impl Classification {
    pub fn is(&self, label: CurveLabel) -> bool {
        self.labels.contains(&label)
    }

    pub fn is_maximal_tjurina(&self) -> bool {
        self.labels
            .iter()
            .any(|l| matches!(l, CurveLabel::MaximalTjurina { .. }))
    }
}

/// The du Plessis-Wall upper bound for the global Tjurina number:
/// (d-1)(d-d1-1) + d1^2 - C(2d1-d+2, 2), asserted for d1 >= d/2.
pub fn dpw_bound(d: u32, d1: u32) -> Result<i64> {
    if d < 2 || d1 + 1 > d {
        return Err(Error::OutOfRegime { d, d1 });
    }
    if 2 * d1 < d {
        return Err(Error::OutOfRegime { d, d1 });
    }
    let (d, d1) = (d as i64, d1 as i64);
    let b = 2 * d1 - d + 2;
    let binom = if b < 2 { 0 } else { b * (b - 1) / 2 };
    Ok((d - 1) * (d - d1 - 1) + d1 * d1 - binom)
}

/// Labels per the syzygy-count definitions, cross-checked against the
/// Jacobian-module invariant nu (nu = 0 iff free, nu = 1 iff nearly
/// free); a mismatch is an internal inconsistency.
pub fn classify(exp: &Exponents, jd: &JacobianModuleData) -> Result<Classification> {
    let m = exp.m();
    let d = exp.d;
    let degs = &exp.degrees;
    let mut labels = Vec::new();

    let free = m == 2;
    if free {
        labels.push(CurveLabel::Free);
    }
    let three_syzygy = m == 3;
    let plus_one = three_syzygy && degs[0] + degs[1] == d;
    let nearly_free = plus_one && degs[1] == degs[2];
    if three_syzygy {
        labels.push(CurveLabel::ThreeSyzygy);
    }
    if plus_one {
        labels.push(CurveLabel::PlusOneGenerated);
    }
    if nearly_free {
        labels.push(CurveLabel::NearlyFree);
    }

    let d1 = exp.mdr();
    let mut dpw = None;
    let mut margin = None;
    if 2 * d1 >= d {
        let bound = dpw_bound(d, d1)?;
        dpw = Some(bound);
        margin = Some(bound - jd.tau as i64);
    }
    if m >= 3 {
        let all_equal = degs.iter().all(|&x| x == d1);
        let count_matches = 2 * d1 as i64 - d as i64 + 3 == m as i64;
        let tau_maximal = dpw == Some(jd.tau as i64);
        if all_equal && count_matches && tau_maximal {
            labels.push(CurveLabel::MaximalTjurina { d, d1 });
        }
    }

    if free != (jd.nu == 0) {
        return Err(Error::Internal(format!(
            "freeness disagrees with nu: m = {m}, nu = {}",
            jd.nu
        )));
    }
    if nearly_free != (jd.nu == 1) {
        return Err(Error::Internal(format!(
            "near-freeness disagrees with nu: exponents {degs:?}, nu = {}",
            jd.nu
        )));
    }

    Ok(Classification { labels, m, dpw_bound: dpw, tau_margin: margin })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dpw_bound_worked_examples() {
        assert_eq!(dpw_bound(5, 3).unwrap(), 10);
        assert_eq!(dpw_bound(4, 3).unwrap(), 3);
        assert_eq!(dpw_bound(5, 4).unwrap(), 6);
        // binomial term reduces to 1 at d = 2*d1
        assert_eq!(dpw_bound(4, 2).unwrap(), 3 * 1 + 4 - 1);
        assert!(matches!(dpw_bound(5, 2), Err(Error::OutOfRegime { .. })));
    }

    fn jd_stub(tau: u64, nu: u64) -> JacobianModuleData {
        JacobianModuleData {
            tau,
            sigma: if nu == 0 { None } else { Some(0) },
            nu,
            t_degree: 0,
            n_vector: vec![nu],
            milnor: crate::hilbert::HilbertData::from_finite_vector(0, vec![]),
            saturated: crate::hilbert::HilbertData::from_finite_vector(0, vec![]),
        }
    }

    #[test]
    fn label_logic() {
        // free triangle
        let exp = Exponents { d: 3, degrees: vec![1, 1] };
        let c = classify(&exp, &jd_stub(3, 0)).unwrap();
        assert!(c.is(CurveLabel::Free));
        assert_eq!(c.m, 2);

        // smooth cubic: three-syzygy but d1 + d2 = 4 != 3
        let exp = Exponents { d: 3, degrees: vec![2, 2, 2] };
        let c = classify(&exp, &jd_stub(0, 3)).unwrap();
        assert!(c.is(CurveLabel::ThreeSyzygy));
        assert!(!c.is(CurveLabel::PlusOneGenerated));

        // smooth conic: nearly free and maximal Tjurina of type (2,1)
        let exp = Exponents { d: 2, degrees: vec![1, 1, 1] };
        let c = classify(&exp, &jd_stub(0, 1)).unwrap();
        assert!(c.is(CurveLabel::NearlyFree));
        assert!(c.is(CurveLabel::MaximalTjurina { d: 2, d1: 1 }));

        // nu mismatch is flagged
        let exp = Exponents { d: 3, degrees: vec![1, 1] };
        assert!(classify(&exp, &jd_stub(3, 2)).is_err());
    }
}
