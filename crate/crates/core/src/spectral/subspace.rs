//! Subspaces of `ℚ^d` in reduced row-echelon form.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::SpectralError;

pub type Q = BigRational;
pub type Matrix = Vec<Vec<Q>>;

/// Reduces `rows` to reduced row-echelon form in place, dropping zero rows.
/// Returns the pivot columns.
pub fn rref(rows: &mut Matrix) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (v, p) in rows[i].iter_mut().zip(pivot_row) {
                    *v -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// A subspace of `ℚ^d`, stored as the unique reduced echelon basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalSubspace {
    d: usize,
    basis: Matrix,
}

impl fmt::Debug for RationalSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "span{:?}",
            self.basis
                .iter()
                .map(|r| r.iter().map(|q| q.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        )
    }
}

impl RationalSubspace {
    pub fn zero(d: usize) -> Self {
        RationalSubspace {
            d,
            basis: Vec::new(),
        }
    }

    pub fn full(d: usize) -> Self {
        let basis = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { Q::one() } else { Q::zero() })
                    .collect()
            })
            .collect();
        RationalSubspace { d, basis }
    }

    /// Span of the given vectors, each of length `d`.
    pub fn span(d: usize, vectors: &[Vec<Q>]) -> Result<Self, SpectralError> {
        if let Some(v) = vectors.iter().find(|v| v.len() != d) {
            return Err(SpectralError::DimensionMismatch(d, v.len()));
        }
        let mut basis = vectors.to_vec();
        rref(&mut basis);
        Ok(RationalSubspace { d, basis })
    }

    /// Span of integer vectors; convenience for tests and examples.
    pub fn span_ints(d: usize, vectors: &[&[i64]]) -> Result<Self, SpectralError> {
        let v: Vec<Vec<Q>> = vectors
            .iter()
            .map(|r| r.iter().map(|&x| Q::from_integer(x.into())).collect())
            .collect();
        Self::span(d, &v)
    }

    pub fn ambient(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.d
    }

    fn same_ambient(&self, other: &Self) -> Result<(), SpectralError> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(SpectralError::DimensionMismatch(self.d, other.d))
        }
    }

    pub fn contains_vector(&self, v: &[Q]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rref(&mut rows);
        rows.len() == self.basis.len()
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool, SpectralError> {
        self.same_ambient(other)?;
        Ok(self.basis.iter().all(|v| other.contains_vector(v)))
    }

    pub fn sum(&self, other: &Self) -> Result<Self, SpectralError> {
        self.same_ambient(other)?;
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        rref(&mut rows);
        Ok(RationalSubspace {
            d: self.d,
            basis: rows,
        })
    }

    /// Zassenhaus: reduce `[[v, v], [w, 0]]`; rows with zero left half span
    /// the intersection in their right half.
    pub fn intersect(&self, other: &Self) -> Result<Self, SpectralError> {
        self.same_ambient(other)?;
        let d = self.d;
        let mut rows: Matrix = self
            .basis
            .iter()
            .map(|v| v.iter().chain(v.iter()).cloned().collect())
            .chain(other.basis.iter().map(|w| {
                w.iter()
                    .cloned()
                    .chain(std::iter::repeat_n(Q::zero(), d))
                    .collect()
            }))
            .collect();
        rref(&mut rows);
        let right: Matrix = rows
            .into_iter()
            .filter(|r| r[..d].iter().all(Zero::is_zero))
            .map(|r| r[d..].to_vec())
            .collect();
        Self::span(d, &right)
    }

    /// Orthogonal complement for the standard dot product (the null space of
    /// the basis matrix).
    pub fn orthocomplement(&self) -> Self {
        let d = self.d;
        let pivots: Vec<usize> = self
            .basis
            .iter()
            .map(|r| {
                r.iter()
                    .position(|x| !x.is_zero())
                    .expect("echelon rows are nonzero")
            })
            .collect();
        let free = (0..d).filter(|c| !pivots.contains(c));
        let vectors: Matrix = free
            .map(|f| {
                let mut v = vec![Q::zero(); d];
                v[f] = Q::one();
                for (row, &p) in self.basis.iter().zip(&pivots) {
                    v[p] = -row[f].clone();
                }
                v
            })
            .collect();
        Self::span(d, &vectors).expect("dimensions agree")
    }

    /// Orthogonal projection matrix `Bᵀ (B Bᵀ)⁻¹ B`.
    pub fn projection_matrix(&self) -> Matrix {
        let d = self.d;
        let r = self.dim();
        if r == 0 {
            return vec![vec![Q::zero(); d]; d];
        }
        let b = &self.basis;
        let gram: Matrix = (0..r)
            .map(|i| (0..r).map(|j| dot(&b[i], &b[j])).collect())
            .collect();
        let g = invert(&gram).expect("Gram matrix of a basis is invertible");
        (0..d)
            .map(|x| {
                (0..d)
                    .map(|y| {
                        let mut s = Q::zero();
                        for i in 0..r {
                            for j in 0..r {
                                s += &b[i][x] * &g[i][j] * &b[j][y];
                            }
                        }
                        s
                    })
                    .collect()
            })
            .collect()
    }
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn invert(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Exact positive-semidefiniteness of a symmetric matrix by symmetric
/// elimination with diagonal pivots.
pub fn is_psd(m: &Matrix) -> bool {
    let n = m.len();
    let mut a = m.clone();
    for k in 0..n {
        let p = a[k][k].clone();
        if p.is_negative() {
            return false;
        }
        if p.is_zero() {
            if (k + 1..n).any(|j| !a[k][j].is_zero()) {
                return false;
            }
            continue;
        }
        for i in k + 1..n {
            let f = &a[i][k] / &p;
            for j in k + 1..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    #[test]
    fn sum_of_axes() {
        let e1 = RationalSubspace::span_ints(3, &[&[1, 0, 0]]).unwrap();
        let e2 = RationalSubspace::span_ints(3, &[&[0, 1, 0]]).unwrap();
        let both = RationalSubspace::span_ints(3, &[&[1, 0, 0], &[0, 1, 0]]).unwrap();
        assert_eq!(e1.sum(&e2).unwrap(), both);
        assert!(e1.intersect(&e2).unwrap().is_zero());
    }

    #[test]
    fn orthocomplement_of_a_line() {
        let v = RationalSubspace::span_ints(3, &[&[1, 1, 0]]).unwrap();
        let c = v.orthocomplement();
        assert_eq!(
            c,
            RationalSubspace::span_ints(3, &[&[1, -1, 0], &[0, 0, 1]]).unwrap()
        );
        assert!(v.intersect(&c).unwrap().is_zero());
        assert!(v.sum(&c).unwrap().is_full());
    }

    #[test]
    fn plane_intersection() {
        let a = RationalSubspace::span_ints(3, &[&[1, 0, 0], &[0, 1, 0]]).unwrap();
        let b = RationalSubspace::span_ints(3, &[&[1, 1, 1], &[0, 0, 1]]).unwrap();
        assert_eq!(
            a.intersect(&b).unwrap(),
            RationalSubspace::span_ints(3, &[&[1, 1, 0]]).unwrap()
        );
    }

    #[test]
    fn projection_onto_diagonal() {
        let v = RationalSubspace::span_ints(2, &[&[1, 1]]).unwrap();
        let h = q(1, 2);
        assert_eq!(
            v.projection_matrix(),
            vec![vec![h.clone(), h.clone()], vec![h.clone(), h]]
        );
    }

    #[test]
    fn psd_examples() {
        let m = |r: [[i64; 2]; 2]| -> Matrix {
            r.iter()
                .map(|row| row.iter().map(|&x| q(x, 1)).collect())
                .collect()
        };
        assert!(is_psd(&m([[1, 1], [1, 1]])));
        assert!(is_psd(&m([[0, 0], [0, 3]])));
        assert!(!is_psd(&m([[0, 1], [1, 0]])));
        assert!(!is_psd(&m([[1, 2], [2, 1]])));
    }

    #[test]
    fn mismatched_dimensions() {
        let a = RationalSubspace::zero(2);
        let b = RationalSubspace::zero(3);
        assert_eq!(
            a.sum(&b).unwrap_err(),
            SpectralError::DimensionMismatch(2, 3)
        );
    }
}
