//! Truncations of the shift representation on `span{e_0, e_1, ...}`:
//! `x e_n = e_(n+1)`, `y e_n = e_(n-1)`, `y e_0 = 0`.

use std::fmt;

use num_traits::Zero;

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncMatrix {
    n: usize,
    entries: Vec<Vec<Scalar>>,
}

impl TruncMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![vec![Scalar::zero(); n]; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for k in 0..n {
            m.entries[k][k] = scalar::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row][col]
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.entries
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let mut out = Self::zeros(self.n);
        for r in 0..self.n {
            for k in 0..self.n {
                let a = &self.entries[r][k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..self.n {
                    let b = &rhs.entries[k][c];
                    if !b.is_zero() {
                        out.entries[r][c] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let mut out = self.clone();
        for r in 0..self.n {
            for c in 0..self.n {
                out.entries[r][c] += &rhs.entries[r][c];
            }
        }
        out
    }

    /// Top-left `k x k` block.
    pub fn block(&self, k: usize) -> Self {
        let k = k.min(self.n);
        Self {
            n: k,
            entries: self.entries[..k]
                .iter()
                .map(|row| row[..k].to_vec())
                .collect(),
        }
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|r| (0..self.n).map(move |c| (r, c)))
            .find(|&(r, c)| !self.entries[r][c].is_zero())
    }
}

impl fmt::Display for TruncMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(scalar::format).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `n x n` truncation of the shift representation of `a`.
///
/// `x^i y^j` sends `e_c` to `e_(c - j + i)` when `c >= j`; entries are those of
/// the infinite operator, so the map is injective on elements of degree `< n`
/// and multiplicative on the top-left `(n - d)` block, `d = deg a + deg b`.
pub fn to_matrix(a: &AlgebraElement, n: usize) -> Result<TruncMatrix> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut m = TruncMatrix::zeros(n);
    for (mono, c) in a.terms() {
        let (i, j) = (mono.i as usize, mono.j as usize);
        for col in j..n {
            let row = col - j + i;
            if row < n {
                m.entries[row][col] += c;
            }
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::matrix_unit;

    #[test]
    fn x_is_subdiagonal() {
        let m = to_matrix(&AlgebraElement::x(), 3).unwrap();
        for r in 0..3 {
            for c in 0..3 {
                let expect = if r == c + 1 { 1 } else { 0 };
                assert_eq!(*m.get(r, c), scalar::int(expect));
            }
        }
        let y = to_matrix(&AlgebraElement::y(), 3).unwrap();
        assert_eq!(*y.get(0, 1), scalar::one());
        assert_eq!(*y.get(1, 0), scalar::zero());
    }

    #[test]
    fn unit_and_idempotent() {
        assert_eq!(
            to_matrix(&AlgebraElement::one(), 5).unwrap(),
            TruncMatrix::identity(5)
        );
        let m = to_matrix(&matrix_unit(0, 0), 4).unwrap();
        let mut expect = TruncMatrix::zeros(4);
        expect.entries[0][0] = scalar::one();
        assert_eq!(m, expect);
    }

    #[test]
    fn zero_dimension_rejected() {
        assert!(matches!(
            to_matrix(&AlgebraElement::x(), 0),
            Err(Error::ZeroDimension)
        ));
    }

    #[test]
    fn matrix_units_are_elementary() {
        let m = to_matrix(&matrix_unit(2, 1), 6).unwrap();
        assert_eq!(m.first_nonzero(), Some((2, 1)));
        let ones = m.rows().iter().flatten().filter(|c| !c.is_zero()).count();
        assert_eq!(ones, 1);
    }
}
