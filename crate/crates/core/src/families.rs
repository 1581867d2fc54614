//! Named curve families available from the CLI.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default)]
pub struct FamilyParams {
    pub r: Option<u32>,
    pub p: Option<u32>,
    pub d: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyCurve {
    pub label: String,
    pub text: String,
    pub degree: u32,
}

fn power(var: &str, e: u32) -> Option<String> {
    match e {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{e}")),
    }
}

fn product(parts: &[Option<String>]) -> String {
    let joined: Vec<String> = parts.iter().flatten().cloned().collect();
    joined.join("*")
}

/// The polynomial of a named family:
///
/// * `triangle` — xyz, three lines in general position;
/// * `fermat` with d >= 2 — x^d + y^d + z^d;
/// * `ex2` — the septic y^7 + x^7 + z(x^2+yz)^3 with five sextic
///   syzygies;
/// * `odd-m4` with r >= 3 — (y^3 - x^2 z) x^(r-3) y^(r-1) + x^d + y^d of
///   odd degree d = 2r - 1, with four syzygies;
/// * `even-max` with p >= 2 — (x^2 - yz)^(p-1) yz + x^2p + y^2p of degree
///   d = 2p with m = d + 1 syzygies;
/// * `odd-max` with p >= 2 — (x^2 - yz)^(p-1) xyz + x^(2p+1) + y^(2p+1)
///   of degree d = 2p + 1 with m = d + 1 syzygies.
pub fn family_polynomial(name: &str, params: &FamilyParams) -> Result<FamilyCurve> {
    match name {
        "triangle" => Ok(FamilyCurve {
            label: "triangle".into(),
            text: "x*y*z".into(),
            degree: 3,
        }),
        "fermat" => {
            let d = params
                .d
                .ok_or_else(|| Error::ParamOutOfRange("fermat needs --d".into()))?;
            if d < 2 {
                return Err(Error::ParamOutOfRange(format!("fermat needs d >= 2, got {d}")));
            }
            Ok(FamilyCurve {
                label: format!("fermat({d})"),
                text: format!("x^{d}+y^{d}+z^{d}"),
                degree: d,
            })
        }
        "ex2" => Ok(FamilyCurve {
            label: "ex2".into(),
            text: "y^7+x^7+z*(x^2+y*z)^3".into(),
            degree: 7,
        }),
        "odd-m4" => {
            let r = params
                .r
                .ok_or_else(|| Error::ParamOutOfRange("odd-m4 needs --r".into()))?;
            if r < 3 {
                return Err(Error::ParamOutOfRange(format!("odd-m4 needs r >= 3, got {r}")));
            }
            let d = 2 * r - 1;
            let head = product(&[
                Some("(y^3-x^2*z)".into()),
                power("x", r - 3),
                power("y", r - 1),
            ]);
            Ok(FamilyCurve {
                label: format!("odd-m4(r={r})"),
                text: format!("{head}+x^{d}+y^{d}"),
                degree: d,
            })
        }
        "even-max" => {
            let p = params
                .p
                .ok_or_else(|| Error::ParamOutOfRange("even-max needs --p".into()))?;
            if p < 2 {
                return Err(Error::ParamOutOfRange(format!("even-max needs p >= 2, got {p}")));
            }
            let d = 2 * p;
            let head = product(&[power("(x^2-y*z)", p - 1), Some("y*z".into())]);
            Ok(FamilyCurve {
                label: format!("even-max(p={p})"),
                text: format!("{head}+x^{d}+y^{d}"),
                degree: d,
            })
        }
        "odd-max" => {
            let p = params
                .p
                .ok_or_else(|| Error::ParamOutOfRange("odd-max needs --p".into()))?;
            if p < 2 {
                return Err(Error::ParamOutOfRange(format!("odd-max needs p >= 2, got {p}")));
            }
            let d = 2 * p + 1;
            let head = product(&[power("(x^2-y*z)", p - 1), Some("x*y*z".into())]);
            Ok(FamilyCurve {
                label: format!("odd-max(p={p})"),
                text: format!("{head}+x^{d}+y^{d}"),
                degree: d,
            })
        }
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::parser::parse_polynomial;

    fn params(r: Option<u32>, p: Option<u32>, d: Option<u32>) -> FamilyParams {
        FamilyParams { r, p, d }
    }

    #[test]
    fn family_texts() {
        let f = family_polynomial("ex2", &FamilyParams::default()).unwrap();
        assert_eq!(f.text, "y^7+x^7+z*(x^2+y*z)^3");

        let f = family_polynomial("odd-m4", &params(Some(3), None, None)).unwrap();
        assert_eq!(f.text, "(y^3-x^2*z)*y^2+x^5+y^5");
        let f = family_polynomial("odd-m4", &params(Some(4), None, None)).unwrap();
        assert_eq!(f.text, "(y^3-x^2*z)*x*y^3+x^7+y^7");

        let f = family_polynomial("even-max", &params(None, Some(2), None)).unwrap();
        assert_eq!(f.text, "(x^2-y*z)*y*z+x^4+y^4");
        let f = family_polynomial("even-max", &params(None, Some(3), None)).unwrap();
        assert_eq!(f.text, "(x^2-y*z)^2*y*z+x^6+y^6");

        let f = family_polynomial("odd-max", &params(None, Some(2), None)).unwrap();
        assert_eq!(f.text, "(x^2-y*z)*x*y*z+x^5+y^5");

        let f = family_polynomial("fermat", &params(None, None, Some(4))).unwrap();
        assert_eq!(f.text, "x^4+y^4+z^4");
    }

    #[test]
    fn family_degrees_match_their_polynomials() {
        let cases = [
            family_polynomial("triangle", &FamilyParams::default()).unwrap(),
            family_polynomial("ex2", &FamilyParams::default()).unwrap(),
            family_polynomial("odd-m4", &params(Some(5), None, None)).unwrap(),
            family_polynomial("even-max", &params(None, Some(4), None)).unwrap(),
            family_polynomial("odd-max", &params(None, Some(3), None)).unwrap(),
            family_polynomial("fermat", &params(None, None, Some(6))).unwrap(),
        ];
        for c in cases {
            let f = parse_polynomial(&c.text, &Rationals).unwrap();
            assert_eq!(f.homogeneous_degree().unwrap(), Some(c.degree), "{}", c.label);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(family_polynomial("odd-m4", &params(Some(2), None, None)).is_err());
        assert!(family_polynomial("even-max", &params(None, Some(1), None)).is_err());
        assert!(family_polynomial("fermat", &params(None, None, Some(1))).is_err());
        assert!(family_polynomial("fermat", &FamilyParams::default()).is_err());
        assert!(matches!(
            family_polynomial("nope", &FamilyParams::default()),
            Err(Error::UnknownFamily(_))
        ));
    }
}
