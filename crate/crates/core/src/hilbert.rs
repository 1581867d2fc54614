//! Hilbert functions and series of graded quotients S^r / M.
//!
//! Everything is derived from the leading-term module of a Gröbner basis:
//! graded dimensions are counted directly on a window of degrees, and the
//! series numerator over (1-t)^3 is recovered by finite differencing. The
//! numerator makes the Hilbert function exactly evaluable at every degree.

use crate::monomial::{dim_of_degree, monomials_of_degree, Monomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    window_start: i64,
    window: Vec<u64>,
    numerator_start: i64,
    numerator: Vec<i64>,
}

impl HilbertData {
    /// Hilbert data of S^r(shifts) / (module with the given leading
    /// terms). An element of component c with polynomial degree n sits in
    /// graded degree n + shifts[c].
    pub(crate) fn from_leading_terms(
        rank: usize,
        shifts: &[i64],
        lts: &[(usize, Monomial)],
    ) -> Self {
        assert_eq!(shifts.len(), rank);
        if rank == 0 {
            return HilbertData {
                window_start: 0,
                window: vec![],
                numerator_start: 0,
                numerator: vec![],
            };
        }
        let mut gens_per: Vec<Vec<Monomial>> = vec![Vec::new(); rank];
        for (c, m) in lts {
            gens_per[*c].push(*m);
        }
        for gens in &mut gens_per {
            minimalize_monomials(gens);
        }
        let lo = *shifts.iter().min().unwrap();
        let hi = (0..rank)
            .map(|c| {
                let d = gens_per[c].iter().map(|m| m.degree()).max().unwrap_or(0);
                shifts[c] + 3 * d as i64
            })
            .max()
            .unwrap()
            + 3;
        let mut window = Vec::with_capacity((hi - lo + 1) as usize);
        for k in lo..=hi {
            let mut total = 0u64;
            for c in 0..rank {
                let n = k - shifts[c];
                if n < 0 {
                    continue;
                }
                total += count_standard_monomials(n as u32, &gens_per[c]);
            }
            window.push(total);
        }
        let (numerator_start, numerator) = numerator_from_window(lo, &window);
        HilbertData { window_start: lo, window, numerator_start, numerator }
    }

    /// Hilbert data of a finite-length module given its full dimension
    /// vector (dims[i] lives in degree start + i).
    pub fn from_finite_vector(start: i64, dims: Vec<u64>) -> Self {
        let mut start = start;
        let mut dims = dims;
        while dims.first() == Some(&0) {
            dims.remove(0);
            start += 1;
        }
        while dims.last() == Some(&0) {
            dims.pop();
        }
        // extend the window far enough that differencing recovers the full
        // numerator (degree len+2) plus three trailing zero checks
        let mut window = dims.clone();
        window.extend([0, 0, 0, 0, 0, 0]);
        let (numerator_start, numerator) = numerator_from_window(start, &window);
        HilbertData { window_start: start, window, numerator_start, numerator }
    }

    /// Graded dimension at any degree, exact.
    pub fn dim_at(&self, k: i64) -> u64 {
        if k < self.window_start {
            return 0;
        }
        let idx = (k - self.window_start) as usize;
        if idx < self.window.len() {
            return self.window[idx];
        }
        let mut acc: i64 = 0;
        for (i, n) in self.numerator.iter().enumerate() {
            let d = k - (self.numerator_start + i as i64);
            acc += n * dim_of_degree(d) as i64;
        }
        debug_assert!(acc >= 0);
        acc as u64
    }

    /// Numerator N(t) of the series H(t) = N(t) / (1-t)^3, as
    /// (degree of first coefficient, coefficients).
    pub fn numerator(&self) -> (i64, &[i64]) {
        (self.numerator_start, &self.numerator)
    }

    /// For finite-length modules, the full dimension vector trimmed to its
    /// support; None if the module has positive dimension. The zero module
    /// yields an empty vector.
    pub fn finite_dimensions(&self) -> Option<(i64, Vec<u64>)> {
        if self.numerator.is_empty() {
            return Some((0, Vec::new()));
        }
        let mut q: Vec<i64> = self.numerator.clone();
        for _ in 0..3 {
            q = divide_by_one_minus_t(&q)?;
        }
        if q.iter().any(|&x| x < 0) {
            return None;
        }
        let mut start = self.numerator_start;
        while q.first() == Some(&0) {
            q.remove(0);
            start += 1;
        }
        Some((start, q.into_iter().map(|x| x as u64).collect()))
    }

    /// Krull dimension of the module as a cone: 3 minus the multiplicity
    /// of (1-t) in the numerator. The zero module gives -1.
    pub fn cone_dimension(&self) -> i32 {
        if self.numerator.is_empty() {
            return -1;
        }
        let mut n = self.numerator.clone();
        let mut e = 0;
        while e < 3 {
            match divide_by_one_minus_t(&n) {
                Some(q) => {
                    n = q;
                    e += 1;
                }
                None => break,
            }
        }
        3 - e
    }

    /// Whether the finite dimension vector is a palindrome; None when the
    /// module is not finite.
    pub fn is_symmetric(&self) -> Option<bool> {
        let (_, v) = self.finite_dimensions()?;
        Some(v.iter().eq(v.iter().rev()))
    }
}

/// Remove monomials divisible by another in the list.
fn minimalize_monomials(gens: &mut Vec<Monomial>) {
    gens.sort_unstable_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens.iter() {
        if !out.iter().any(|g| g.divides(m)) {
            out.push(*m);
        }
    }
    *gens = out;
}

fn count_standard_monomials(n: u32, gens: &[Monomial]) -> u64 {
    if gens.iter().any(|m| m.is_one()) {
        return 0;
    }
    if gens.is_empty() {
        return dim_of_degree(n as i64);
    }
    monomials_of_degree(n)
        .iter()
        .filter(|m| !gens.iter().any(|g| g.divides(m)))
        .count() as u64
}

fn numerator_from_window(lo: i64, window: &[u64]) -> (i64, Vec<i64>) {
    let h = |i: i64| -> i64 {
        if i < 0 {
            0
        } else {
            window[i as usize] as i64
        }
    };
    let mut numerator: Vec<i64> = (0..window.len() as i64)
        .map(|i| h(i) - 3 * h(i - 1) + 3 * h(i - 2) - h(i - 3))
        .collect();
    debug_assert!(
        numerator.iter().rev().take(3).all(|&x| x == 0),
        "Hilbert window too short to capture the numerator"
    );
    let mut start = lo;
    while numerator.first() == Some(&0) {
        numerator.remove(0);
        start += 1;
    }
    while numerator.last() == Some(&0) {
        numerator.pop();
    }
    (start, numerator)
}

/// Exact division of a coefficient vector by (1 - t); None if the
/// remainder is nonzero.
fn divide_by_one_minus_t(n: &[i64]) -> Option<Vec<i64>> {
    let mut acc = 0i64;
    let mut q = Vec::with_capacity(n.len());
    for &c in n {
        acc += c;
        q.push(acc);
    }
    if acc != 0 {
        return None;
    }
    q.pop();
    while q.last() == Some(&0) {
        q.pop();
    }
    Some(q)
}
