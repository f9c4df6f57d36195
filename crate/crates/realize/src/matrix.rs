use matroid_core::{Matroid, Subset};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::RealizeError;

/// A rational matrix whose rows and columns carry labels (usually vertex
/// indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub entries: Vec<Vec<BigRational>>,
}

impl ExactMatrix {
    pub fn zeros(rows: Vec<usize>, cols: Vec<usize>) -> ExactMatrix {
        let entries = vec![vec![BigRational::zero(); cols.len()]; rows.len()];
        ExactMatrix { rows, cols, entries }
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> ExactMatrix {
        let nr = rows.len();
        let nc = rows.first().map_or(0, |r| r.len());
        let entries = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
            .collect();
        ExactMatrix { rows: (0..nr).collect(), cols: (0..nc).collect(), entries }
    }

    pub fn identity(n: usize) -> ExactMatrix {
        let mut m = ExactMatrix::zeros((0..n).collect(), (0..n).collect());
        for i in 0..n {
            m.entries[i][i] = BigRational::one();
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i][j]
    }

    /// The submatrix on the given row and column positions.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> ExactMatrix {
        ExactMatrix {
            rows: rows.iter().map(|&i| self.rows[i]).collect(),
            cols: cols.iter().map(|&j| self.cols[j]).collect(),
            entries: rows.iter().map(|&i| cols.iter().map(|&j| self.entries[i][j].clone()).collect()).collect(),
        }
    }

    pub fn row_subset(&self, x: Subset) -> ExactMatrix {
        let rows: Vec<usize> = x.iter().collect();
        let cols: Vec<usize> = (0..self.n_cols()).collect();
        self.submatrix(&rows, &cols)
    }

    /// Rows scaled to integers (each row by the lcm of its denominators).
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        self.entries
            .iter()
            .map(|row| {
                let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                row.iter().map(|v| v.numer() * (&l / v.denom())).collect()
            })
            .collect()
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn det(&self) -> Result<BigRational, RealizeError> {
        let n = self.n_rows();
        if n != self.n_cols() {
            return Err(RealizeError::NonSquare(n, self.n_cols()));
        }
        let scale = self.entries.iter().fold(BigInt::one(), |acc, row| {
            acc * row.iter().fold(BigInt::one(), |l, v| l.lcm(v.denom()))
        });
        let mut a = self.integer_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return Ok(BigRational::zero());
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let d = if n == 0 { BigInt::one() } else { a[n - 1][n - 1].clone() };
        Ok(BigRational::new(sign * d, scale))
    }

    /// Rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.integer_rows();
        let (nr, nc) = (self.n_rows(), self.n_cols());
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..nc {
            if r == nr {
                break;
            }
            let Some(p) = (r..nr).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(r, p);
            for i in r + 1..nr {
                for j in c + 1..nc {
                    let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                    a[i][j] = v / &prev;
                }
                a[i][c] = BigInt::zero();
            }
            prev = a[r][c].clone();
            r += 1;
        }
        r
    }

    /// 1 iff some maximal square submatrix is nonsingular.
    pub fn idet(&self) -> u8 {
        u8::from(self.rank() == self.n_rows().min(self.n_cols()))
    }

    /// Pivot at `(row, col)`: clear the column with row operations, then
    /// drop the row and the column. The matroid of the result is the
    /// contraction by that row.
    pub fn contract(&self, row: usize, col: usize) -> Result<ExactMatrix, RealizeError> {
        let p = self.entries[row][col].clone();
        if p.is_zero() {
            return Err(RealizeError::ZeroPivot(row, col));
        }
        let mut e = self.entries.clone();
        for i in 0..self.n_rows() {
            if i == row || e[i][col].is_zero() {
                continue;
            }
            let f = &e[i][col] / &p;
            for j in 0..self.n_cols() {
                let v = &f * &self.entries[row][j];
                e[i][j] -= v;
            }
        }
        let keep_rows: Vec<usize> = (0..self.n_rows()).filter(|&i| i != row).collect();
        let keep_cols: Vec<usize> = (0..self.n_cols()).filter(|&j| j != col).collect();
        let m = ExactMatrix { entries: e, ..self.clone() };
        Ok(m.submatrix(&keep_rows, &keep_cols))
    }

    /// Keep only a set of columns spanning the column space.
    pub fn column_basis(&self) -> ExactMatrix {
        let mut keep = Vec::new();
        let rows: Vec<usize> = (0..self.n_rows()).collect();
        for j in 0..self.n_cols() {
            keep.push(j);
            if self.submatrix(&rows, &keep).rank() < keep.len() {
                keep.pop();
            }
        }
        self.submatrix(&rows, &keep)
    }

    /// The row matroid: `X` is independent iff its rows are.
    pub fn matroid(&self) -> Matroid {
        let r = self.rank();
        Matroid::from_rank_fn(self.n_rows(), r, |x| self.row_subset(x).rank())
    }

    /// `p/q` strings (or plain integers), comma separated, one row per line.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        s
    }

    pub fn max_abs_bits(&self) -> u64 {
        self.entries.iter().flatten().map(|v| v.numer().abs().bits()).max().unwrap_or(0)
    }
}

pub fn exact_det(m: &ExactMatrix) -> Result<BigRational, RealizeError> {
    m.det()
}

pub fn idet(m: &ExactMatrix) -> u8 {
    m.idet()
}

pub fn matrix_matroid(m: &ExactMatrix) -> Matroid {
    m.matroid()
}

pub fn matrix_contract(m: &ExactMatrix, row: usize, col: usize) -> Result<ExactMatrix, RealizeError> {
    m.contract(row, col)
}
