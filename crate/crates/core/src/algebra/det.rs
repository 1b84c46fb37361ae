use itertools::Itertools;

use super::LaurentPoly;
use crate::{Error, Result};

/// Determinant of a square matrix of Laurent polynomials by fraction-free
/// (Bareiss) elimination; every division is exact in the Laurent ring.
pub fn determinant(m: &[Vec<LaurentPoly>], vars: &[String], d: u32) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one(vars, d);
    }
    let mut a: Vec<Vec<LaurentPoly>> = m.to_vec();
    let mut prev = LaurentPoly::one(vars, d);
    let mut negate = false;
    for k in 0..n {
        // fewest terms first keeps intermediate expressions small
        let Some(p) = (k..n)
            .filter(|&i| !a[i][k].is_zero())
            .min_by_key(|&i| a[i][k].num_terms())
        else {
            return LaurentPoly::zero(vars, d);
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = if prev.is_one() {
                    num
                } else {
                    num.div_exact(&prev).expect("Bareiss division is exact")
                };
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// All `k × k` minors, rows chosen in lexicographic order, then columns.
pub fn size_k_minors(m: &[Vec<LaurentPoly>], cols: usize, k: usize, vars: &[String], d: u32) -> Result<Vec<LaurentPoly>> {
    let rows = m.len();
    if k == 0 || k > rows.min(cols) {
        return Err(Error::OutOfRange(format!(
            "minor size {k} for a {rows}x{cols} matrix"
        )));
    }
    let mut out = Vec::new();
    for rsel in (0..rows).combinations(k) {
        for csel in (0..cols).combinations(k) {
            let sub: Vec<Vec<LaurentPoly>> = rsel
                .iter()
                .map(|&i| csel.iter().map(|&j| m[i][j].clone()).collect())
                .collect();
            out.push(determinant(&sub, vars, d));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tv() -> Vec<String> {
        vec!["t".to_string()]
    }

    fn t(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::univariate("t", 1, terms)
    }

    /// Cofactor expansion along the first row.
    fn cofactor_det(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
        let n = m.len();
        if n == 0 {
            return t(&[(0, 1)]);
        }
        let mut acc = t(&[]);
        for j in 0..n {
            let minor: Vec<Vec<LaurentPoly>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = m[0][j].mul(&cofactor_det(&minor));
            acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    #[test]
    fn identity_two_minors() {
        let one = t(&[(0, 1)]);
        let zero = t(&[]);
        let id: Vec<Vec<LaurentPoly>> = (0..3)
            .map(|i| (0..3).map(|j| if i == j { one.clone() } else { zero.clone() }).collect())
            .collect();
        let minors = size_k_minors(&id, 3, 2, &tv(), 1).unwrap();
        assert_eq!(minors.len(), 9);
        let ones: Vec<usize> = minors.iter().positions(|m| m.is_one()).collect();
        assert_eq!(ones, vec![0, 4, 8]);
        assert!(minors.iter().all(|m| m.is_one() || m.is_zero()));
    }

    #[test]
    fn torus_block_is_singular() {
        let a = t(&[(1, 1), (0, -1)]);
        let b = a.neg();
        let z = t(&[]);
        let m = vec![
            vec![a.clone(), b.clone(), z.clone()],
            vec![a.clone(), z.clone(), b.clone()],
            vec![z.clone(), b.clone(), a.clone()],
        ];
        assert_eq!(size_k_minors(&m, 3, 3, &tv(), 1).unwrap(), vec![t(&[])]);
    }

    #[test]
    fn two_by_two() {
        let m = vec![vec![t(&[(1, 1)]), t(&[(0, 1)])], vec![t(&[(0, 1)]), t(&[(1, 1)])]];
        assert_eq!(
            size_k_minors(&m, 2, 2, &tv(), 1).unwrap(),
            vec![t(&[(2, 1), (0, -1)])]
        );
    }

    #[test]
    fn out_of_range() {
        let m = vec![vec![t(&[(1, 1)])]];
        assert!(size_k_minors(&m, 1, 2, &tv(), 1).is_err());
        assert!(size_k_minors(&m, 1, 0, &tv(), 1).is_err());
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let e = |a: i64, b: i64, c: i64| t(&[(-1, a), (0, b), (1, c)]);
        let m = vec![
            vec![e(1, 0, 2), e(0, -1, 1), e(3, 0, 0), e(0, 1, 0)],
            vec![e(0, 0, 1), e(2, 2, 0), e(0, 0, 0), e(1, -1, 1)],
            vec![e(1, 1, 1), e(0, 0, -1), e(0, 5, 0), e(0, 0, 0)],
            vec![e(0, 0, 0), e(1, 0, -1), e(2, 0, 1), e(0, 3, 0)],
        ];
        assert_eq!(determinant(&m, &tv(), 1), cofactor_det(&m));
    }
}
