//! Dense linear algebra over a [`Field`], plus a fraction-free determinant
//! for rational matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::field::Field;

pub type Matrix<E> = Vec<Vec<E>>;

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
pub fn rref<F: Field>(field: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !field.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, p);
        let inv = field.inv(&m[r][c]).expect("nonzero pivot");
        for j in c..cols {
            m[r][j] = field.mul(&m[r][j], &inv);
        }
        for i in 0..rows {
            if i == r || field.is_zero(&m[i][c]) {
                continue;
            }
            let factor = m[i][c].clone();
            for j in c..cols {
                if field.is_zero(&m[r][j]) {
                    continue;
                }
                let t = field.mul(&factor, &m[r][j]);
                m[i][j] = field.sub(&m[i][j], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut work = m.clone();
    rref(field, &mut work).len()
}

/// One solution of `a x = b`, or `None` if the system is inconsistent.
pub fn solve<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut aug: Matrix<F::Elem> = a
        .iter()
        .zip(b)
        .map(|(row, v)| {
            let mut r = row.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let pivots = rref(field, &mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![field.zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][cols].clone();
    }
    Some(x)
}

/// Basis of the right kernel `{x : a x = 0}`.
pub fn kernel<F: Field>(field: &F, a: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut work = a.clone();
    let pivots = rref(field, &mut work);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![field.zero(); cols];
        v[free] = field.one();
        for (i, &c) in pivots.iter().enumerate() {
            v[c] = field.neg(&work[i][free]);
        }
        basis.push(v);
    }
    basis
}

pub fn determinant<F: Field>(field: &F, a: &Matrix<F::Elem>) -> F::Elem {
    let n = a.len();
    let mut m = a.clone();
    let mut det = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !field.is_zero(&m[i][c])) else {
            return field.zero();
        };
        if p != c {
            m.swap(p, c);
            det = field.neg(&det);
        }
        det = field.mul(&det, &m[c][c]);
        let inv = field.inv(&m[c][c]).expect("nonzero pivot");
        for i in c + 1..n {
            if field.is_zero(&m[i][c]) {
                continue;
            }
            let factor = field.mul(&m[i][c], &inv);
            for j in c..n {
                let t = field.mul(&factor, &m[c][j]);
                m[i][j] = field.sub(&m[i][j], &t);
            }
        }
    }
    det
}

pub fn inverse<F: Field>(field: &F, a: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    let n = a.len();
    let mut aug: Matrix<F::Elem> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    let pivots = rref(field, &mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec<F: Field>(field: &F, a: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    a.iter()
        .map(|row| {
            row.iter().zip(v).fold(field.zero(), |acc, (x, y)| {
                if field.is_zero(x) || field.is_zero(y) {
                    acc
                } else {
                    field.add(&acc, &field.mul(x, y))
                }
            })
        })
        .collect()
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn det_integer(a: &Matrix<BigInt>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Determinant of a rational matrix: clear each row's denominators, then
/// run the integer Bareiss determinant.
pub fn det_rational(a: &Matrix<BigRational>) -> BigRational {
    let mut scale = BigInt::one();
    let int_rows: Matrix<BigInt> = a
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            row.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    BigRational::new(det_integer(&int_rows), scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn qm(rows: &[&[i64]]) -> Matrix<BigRational> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn determinants_agree() {
        let m = qm(&[&[2, -1, 0, 3], &[1, 4, 2, 0], &[0, 5, -3, 1], &[7, 0, 1, 1]]);
        let d1 = determinant(&Rationals, &m);
        let d2 = det_rational(&m);
        assert_eq!(d1, d2);
        let mut half = m.clone();
        half[0] = half[0].iter().map(|x| x / q(2)).collect();
        assert_eq!(det_rational(&half), d1 / q(2));
    }

    #[test]
    fn solve_and_kernel() {
        let a = qm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let b = vec![q(6), q(12), q(2)];
        let x = solve(&Rationals, &a, &b).unwrap();
        assert_eq!(mat_vec(&Rationals, &a, &x), b);
        let k = kernel(&Rationals, &a);
        assert_eq!(k.len(), 1);
        assert!(mat_vec(&Rationals, &a, &k[0]).iter().all(|v| v.is_zero()));
        assert!(solve(&Rationals, &a, &[q(1), q(1), q(1)]).is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = qm(&[&[2, 1], &[5, 3]]);
        let inv = inverse(&Rationals, &a).unwrap();
        assert_eq!(inv, qm(&[&[3, -1], &[-5, 2]]));
        assert!(inverse(&Rationals, &qm(&[&[1, 2], &[2, 4]])).is_none());
    }
}
