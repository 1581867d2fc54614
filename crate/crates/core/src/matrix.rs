//! Small determinants of polynomial matrices and dense exact linear
//! algebra over the coefficient field.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::Poly;

/// Cofactor-expansion determinant of a 3x3 polynomial matrix.
pub fn det3<K: Field>(rows: &[[Poly<K>; 3]; 3]) -> Poly<K> {
    let minor = |a: &Poly<K>, b: &Poly<K>, c: &Poly<K>, d: &Poly<K>| a.mul(d).sub(&b.mul(c));
    let m0 = minor(&rows[1][1], &rows[1][2], &rows[2][1], &rows[2][2]);
    let m1 = minor(&rows[1][0], &rows[1][2], &rows[2][0], &rows[2][2]);
    let m2 = minor(&rows[1][0], &rows[1][1], &rows[2][0], &rows[2][1]);
    rows[0][0]
        .mul(&m0)
        .sub(&rows[0][1].mul(&m1))
        .add(&rows[0][2].mul(&m2))
}

/// Determinant of a square polynomial matrix by fraction-free Bareiss
/// elimination; every internal division is exact.
pub fn determinant<K: Field>(field: &K, mat: &[Vec<Poly<K>>]) -> Result<Poly<K>> {
    let n = mat.len();
    for row in mat {
        if row.len() != n {
            return Err(Error::Internal("determinant of a non-square matrix".into()));
        }
    }
    if n == 0 {
        return Ok(Poly::constant(field, field.one()));
    }
    if n == 1 {
        return Ok(mat[0][0].clone());
    }
    if n == 2 {
        return Ok(mat[0][0].mul(&mat[1][1]).sub(&mat[0][1].mul(&mat[1][0])));
    }
    let mut a: Vec<Vec<Poly<K>>> = mat.to_vec();
    let mut sign_flip = false;
    let mut prev: Poly<K> = Poly::constant(field, field.one());
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(pivot_row) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(Poly::zero(field));
            };
            a.swap(k, pivot_row);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = if num.is_zero() {
                    num
                } else {
                    num.exact_divide(&prev).map_err(|_| {
                        Error::Internal("Bareiss elimination division was not exact".into())
                    })?
                };
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if sign_flip { det.neg() } else { det })
}

/// Row-reduce in place; returns the rank. Rows are coefficient vectors
/// over the field.
pub fn row_reduce<K: Field>(field: &K, rows: &mut Vec<Vec<K::Elem>>) -> usize {
    let ncols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    for r in rows.iter_mut() {
        r.resize(ncols, field.zero());
    }
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&i| !field.is_zero(&rows[i][col])) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(&rows[rank][col].clone());
        for x in rows[rank].iter_mut() {
            *x = field.mul(x, &inv);
        }
        for i in 0..rows.len() {
            if i != rank && !field.is_zero(&rows[i][col]) {
                let c = rows[i][col].clone();
                for j in col..ncols {
                    let t = field.mul(&c, &rows[rank][j]);
                    rows[i][j] = field.sub(&rows[i][j], &t);
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn rank<K: Field>(field: &K, mut rows: Vec<Vec<K::Elem>>) -> usize {
    row_reduce(field, &mut rows)
}

/// Basis of the right kernel of the matrix (rows are equations over the
/// unknown vector).
pub fn kernel_basis<K: Field>(field: &K, mut rows: Vec<Vec<K::Elem>>, ncols: usize) -> Vec<Vec<K::Elem>> {
    for r in &mut rows {
        r.resize(ncols, field.zero());
    }
    row_reduce(field, &mut rows);
    // locate pivot columns
    let mut pivot_of_col = vec![None; ncols];
    let mut r = 0;
    for col in 0..ncols {
        if r < rows.len() && !field.is_zero(&rows[r][col]) {
            pivot_of_col[col] = Some(r);
            r += 1;
        }
    }
    let mut basis = Vec::new();
    for free_col in 0..ncols {
        if pivot_of_col[free_col].is_some() {
            continue;
        }
        let mut v = vec![field.zero(); ncols];
        v[free_col] = field.one();
        for col in 0..ncols {
            if let Some(pr) = pivot_of_col[col] {
                v[col] = field.neg(&rows[pr][free_col]);
            }
        }
        basis.push(v);
    }
    basis
}

/// Dimension of the K-span of the degree-`deg` homogeneous polynomials in
/// the list (entries of other degrees are rejected).
pub fn rank_of_span<K: Field>(field: &K, polys: &[Poly<K>], deg: u32) -> Result<usize> {
    let basis: Vec<Monomial> = monomials_of_degree(deg);
    let index_of: std::collections::HashMap<Monomial, usize> =
        basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut rows = Vec::with_capacity(polys.len());
    for p in polys {
        if p.is_zero() {
            continue;
        }
        if p.homogeneous_degree()? != Some(deg) {
            return Err(Error::Internal(format!(
                "rank_of_span: expected degree {deg}, got {:?}",
                p.degree()
            )));
        }
        let mut row = vec![field.zero(); basis.len()];
        for (m, c) in p.terms() {
            row[index_of[m]] = c.clone();
        }
        rows.push(row);
    }
    Ok(rank(field, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::parser::parse_polynomial;

    fn qp(s: &str) -> Poly<Rationals> {
        parse_polynomial(s, &Rationals).unwrap()
    }

    #[test]
    fn det3_identity_pattern() {
        let rows = [
            [qp("x"), qp("0"), qp("0")],
            [qp("0"), qp("y"), qp("0")],
            [qp("0"), qp("0"), qp("z")],
        ];
        assert_eq!(det3(&rows), qp("x*y*z"));
    }

    #[test]
    fn det3_equal_rows_vanish() {
        let rows = [
            [qp("x"), qp("y^2"), qp("z")],
            [qp("x"), qp("y^2"), qp("z")],
            [qp("x+y"), qp("0"), qp("z^2")],
        ];
        assert!(det3(&rows).is_zero());
    }

    #[test]
    fn det3_hand_expansion() {
        let rows = [
            [qp("x"), qp("y"), qp("z")],
            [qp("x"), qp("-y"), qp("0")],
            [qp("x"), qp("0"), qp("-z")],
        ];
        assert_eq!(det3(&rows), qp("3*x*y*z"));
    }

    #[test]
    fn bareiss_matches_cofactor_on_3x3() {
        let rows3 = [
            [qp("x"), qp("y"), qp("z")],
            [qp("y"), qp("z"), qp("x")],
            [qp("z"), qp("x"), qp("y")],
        ];
        let mat: Vec<Vec<_>> = rows3.iter().map(|r| r.to_vec()).collect();
        assert_eq!(determinant(&Rationals, &mat).unwrap(), det3(&rows3));
    }

    #[test]
    fn bareiss_handles_zero_pivots_and_singular_input() {
        let mat = vec![
            vec![qp("0"), qp("x"), qp("y")],
            vec![qp("x"), qp("0"), qp("z")],
            vec![qp("y"), qp("z"), qp("0")],
        ];
        // det = x(x*0 - z*y)... expand by hand: 2xyz
        assert_eq!(determinant(&Rationals, &mat).unwrap(), qp("2*x*y*z"));
        let sing = vec![
            vec![qp("x"), qp("y"), qp("z")],
            vec![qp("2*x"), qp("2*y"), qp("2*z")],
            vec![qp("z"), qp("x"), qp("y")],
        ];
        assert!(determinant(&Rationals, &sing).unwrap().is_zero());
    }

    #[test]
    fn bareiss_4x4_with_polynomial_entries() {
        // companion-style matrix whose determinant is easy by expansion
        let z = || qp("0");
        let mat = vec![
            vec![qp("x"), qp("1"), z(), z()],
            vec![z(), qp("x"), qp("1"), z()],
            vec![z(), z(), qp("x"), qp("1")],
            vec![qp("1"), z(), z(), qp("x")],
        ];
        assert_eq!(determinant(&Rationals, &mat).unwrap(), qp("x^4-1"));
    }

    #[test]
    fn kernel_and_rank() {
        let f = PrimeField::new(101).unwrap();
        let rows = vec![vec![1u64, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank(&f, rows.clone()), 2);
        let ker = kernel_basis(&f, rows, 3);
        assert_eq!(ker.len(), 1);
        // kernel vector satisfies both equations
        let v = &ker[0];
        let dot = |r: &[u64]| {
            let mut acc = 0u64;
            for (a, b) in r.iter().zip(v) {
                acc = f.add(&acc, &f.mul(a, b));
            }
            acc
        };
        assert_eq!(dot(&[1, 2, 3]), 0);
        assert_eq!(dot(&[0, 1, 1]), 0);
    }

    #[test]
    fn rank_of_span_detects_dependence() {
        let polys = vec![qp("x^2+y^2"), qp("x^2-y^2"), qp("2*x^2"), qp("x*z")];
        assert_eq!(rank_of_span(&Rationals, &polys, 2).unwrap(), 3);
    }
}
