//! Monomials in x, y, z under graded reverse lexicographic order.

use std::cmp::Ordering;
use std::fmt;

pub const NVARS: usize = 3;
pub const VAR_NAMES: [char; NVARS] = ['x', 'y', 'z'];

/// A power product x^a y^b z^c. Exponents are u16; total degrees in this
/// library stay far below that (the CLI guards curve degree at 16 by
/// default and intermediate minors stay under a few hundred).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    e: [u16; NVARS],
}

impl Monomial {
    pub fn new(e: [u16; NVARS]) -> Self {
        Monomial { e }
    }

    pub fn one() -> Self {
        Monomial { e: [0; NVARS] }
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; NVARS];
        e[i] = 1;
        Monomial { e }
    }

    pub fn exponents(&self) -> [u16; NVARS] {
        self.e
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.e[i]
    }

    pub fn degree(&self) -> u32 {
        self.e.iter().map(|&x| x as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.e == [0; NVARS]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = [0; NVARS];
        for i in 0..NVARS {
            e[i] = self.e[i] + other.e[i];
        }
        Monomial { e }
    }

    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = [0; NVARS];
        for i in 0..NVARS {
            e[i] = self.e[i].checked_sub(other.e[i])?;
        }
        Some(Monomial { e })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..NVARS).all(|i| self.e[i] <= other.e[i])
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut e = [0; NVARS];
        for i in 0..NVARS {
            e[i] = self.e[i].max(other.e[i]);
        }
        Monomial { e }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..NVARS).all(|i| self.e[i] == 0 || other.e[i] == 0)
    }
}

/// Degrevlex with x > y > z: compare total degree, then the monomial with
/// the smaller exponent on the last variable is larger, breaking further
/// ties on the middle variable.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.e[2].cmp(&self.e[2]))
            .then_with(|| other.e[1].cmp(&self.e[1]))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for i in 0..NVARS {
            if self.e[i] == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if self.e[i] == 1 {
                write!(f, "{}", VAR_NAMES[i])?;
            } else {
                write!(f, "{}^{}", VAR_NAMES[i], self.e[i])?;
            }
        }
        Ok(())
    }
}

/// All monomials of a given total degree, listed in descending degrevlex
/// order.
pub fn monomials_of_degree(d: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(((d + 1) * (d + 2) / 2) as usize);
    for a in 0..=d {
        for b in 0..=(d - a) {
            let c = d - a - b;
            out.push(Monomial::new([a as u16, b as u16, c as u16]));
        }
    }
    out.sort_unstable_by(|u, v| v.cmp(u));
    out
}

/// dim_K S_d = C(d+2, 2) for d >= 0, else 0.
pub fn dim_of_degree(d: i64) -> u64 {
    if d < 0 {
        0
    } else {
        ((d + 1) * (d + 2) / 2) as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrevlex_textbook_comparisons() {
        let m = |a, b, c| Monomial::new([a, b, c]);
        assert!(m(1, 0, 0) > m(0, 1, 0)); // x > y
        assert!(m(0, 1, 0) > m(0, 0, 1)); // y > z
        assert!(m(2, 0, 0) > m(1, 1, 0)); // x^2 > xy
        assert!(m(1, 1, 0) > m(0, 2, 0)); // xy > y^2
        assert!(m(0, 2, 0) > m(1, 0, 1)); // y^2 > xz (degrevlex quirk)
        assert!(m(1, 2, 0) > m(2, 0, 1)); // xy^2 > x^2 z
        assert!(m(0, 0, 2) < m(0, 1, 1));
        assert_eq!(m(1, 2, 3).cmp(&m(1, 2, 3)), std::cmp::Ordering::Equal);
    }

    #[test]
    fn division_and_lcm() {
        let m = |a, b, c| Monomial::new([a, b, c]);
        assert_eq!(m(2, 1, 0).try_div(&m(1, 1, 0)), Some(m(1, 0, 0)));
        assert_eq!(m(2, 1, 0).try_div(&m(0, 2, 0)), None);
        assert_eq!(m(2, 1, 0).lcm(&m(0, 2, 1)), m(2, 2, 1));
        assert!(m(1, 0, 0).is_coprime(&m(0, 1, 1)));
        assert!(!m(1, 1, 0).is_coprime(&m(0, 1, 1)));
    }

    #[test]
    fn enumeration_counts_match_binomials() {
        for d in 0..8u32 {
            let ms = monomials_of_degree(d);
            assert_eq!(ms.len() as u64, dim_of_degree(d as i64));
            assert!(ms.windows(2).all(|w| w[0] > w[1]));
        }
    }
}
