use std::fmt;

use num::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Dimension {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(RationalMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Dimension {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    out[(r, c)] += a * &other[(k, c)];
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Row of the pivot for column `col` among rows `from..`: the nonzero
    /// entry with the largest numerator magnitude.
    fn pivot_row(&self, col: usize, from: usize) -> Option<usize> {
        (from..self.rows)
            .filter(|&r| !self[(r, col)].is_zero())
            .max_by(|&a, &b| {
                self[(a, col)]
                    .numer()
                    .abs()
                    .cmp(&self[(b, col)].numer().abs())
            })
    }

    /// Gauss-Jordan elimination on `[self | rhs]`. Returns the reduced
    /// right-hand side and the determinant of `self`.
    fn eliminate(&self, rhs: &RationalMatrix) -> Result<(RationalMatrix, Rational)> {
        if self.rows != self.cols {
            return Err(Error::Dimension {
                expected: self.rows,
                found: self.cols,
            });
        }
        if rhs.rows != self.rows {
            return Err(Error::Dimension {
                expected: self.rows,
                found: rhs.rows,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut b = rhs.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let p = a.pivot_row(col, col).ok_or(Error::Singular)?;
            if p != col {
                a.swap_rows(p, col);
                b.swap_rows(p, col);
                det = -det;
            }
            let pivot = a[(col, col)].clone();
            det *= &pivot;
            let inv = pivot.recip();
            for c in 0..n {
                a[(col, c)] *= &inv;
            }
            for c in 0..b.cols {
                b[(col, c)] *= &inv;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for c in col..n {
                    let delta = &factor * &a[(col, c)];
                    a[(r, c)] -= delta;
                }
                for c in 0..b.cols {
                    let delta = &factor * &b[(col, c)];
                    b[(r, c)] -= delta;
                }
            }
        }
        Ok((b, det))
    }

    pub fn inverse(&self) -> Result<RationalMatrix> {
        Ok(self.eliminate(&Self::identity(self.rows))?.0)
    }

    pub fn solve(&self, rhs: &[Rational]) -> Result<Vec<Rational>> {
        let b = RationalMatrix::from_rows(rhs.iter().map(|x| vec![x.clone()]).collect())?;
        let (x, _) = self.eliminate(&b)?;
        Ok(x.data)
    }

    /// Determinant; zero for singular matrices.
    pub fn determinant(&self) -> Result<Rational> {
        match self.eliminate(&Self::zeros(self.rows, 0)) {
            Ok((_, det)) => Ok(det),
            Err(Error::Singular) => Ok(Rational::zero()),
            Err(e) => Err(e),
        }
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;

    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {}", cells.join(", "))?;
        }
        f.write_str("]")
    }
}

/// Row-echelon span of the vectors accepted so far; used to test linear
/// independence one vector at a time.
#[derive(Debug, Clone, Default)]
pub struct EchelonSpan {
    /// `(pivot column, vector normalized to 1 at the pivot)`.
    rows: Vec<(usize, Vec<Rational>)>,
}

impl EchelonSpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let factor = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &factor * r;
                }
            }
        }
        v
    }

    /// Adds `v` if it is independent of the span; returns whether it was.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        r.iter_mut().for_each(|x| *x *= &inv);
        // Keep earlier rows reduced against the new pivot.
        for (_, row) in &mut self.rows {
            if !row[p].is_zero() {
                let factor = row[p].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    *x -= &factor * y;
                }
            }
        }
        self.rows.push((p, r));
        true
    }
}
