use std::fmt;

use super::vector::Codeword;
use crate::error::{Error, Result};
use crate::gf2e::FieldSpec;

/// A dense matrix over F_q with bit-sliced rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    spec: FieldSpec,
    cols: usize,
    rows: Vec<Codeword>,
}

impl Matrix {
    pub fn new(spec: FieldSpec, cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| {
                if r.len() != cols {
                    return Err(Error::LengthMismatch { expected: cols, found: r.len() });
                }
                Codeword::from_values(spec, r)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix { spec, cols, rows })
    }

    pub fn from_rows(spec: FieldSpec, cols: usize, rows: Vec<Codeword>) -> Result<Self> {
        for r in &rows {
            if r.spec() != spec {
                return Err(Error::FieldMismatch(spec.s(), r.spec().s()));
            }
            if r.len() != cols {
                return Err(Error::LengthMismatch { expected: cols, found: r.len() });
            }
        }
        Ok(Matrix { spec, cols, rows })
    }

    pub fn identity(spec: FieldSpec, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut r = Codeword::zeros(spec, n);
                r.set(i, 1);
                r
            })
            .collect();
        Matrix { spec, cols: n, rows }
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.rows[r].get(c)
    }

    pub fn rows(&self) -> &[Codeword] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Codeword> {
        self.rows
    }

    pub fn to_values(&self) -> Vec<Vec<u32>> {
        self.rows.iter().map(|r| r.values()).collect()
    }

    /// Row vector times matrix: `sum_i m_i * row_i`.
    pub fn left_mul(&self, m: &[u32]) -> Result<Codeword> {
        if m.len() != self.rows.len() {
            return Err(Error::LengthMismatch { expected: self.rows.len(), found: m.len() });
        }
        let mut acc = Codeword::zeros(self.spec, self.cols);
        for (&c, row) in m.iter().zip(&self.rows) {
            if c != 0 {
                acc.xor_assign(&row.scale(c));
            }
        }
        Ok(acc)
    }

    /// Reduced row-echelon form with zero rows removed, and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let pivots = rref_in_place(&mut rows, self.cols);
        (Matrix { spec: self.spec, cols: self.cols, rows }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
}

/// Gauss-Jordan elimination; leaves only the nonzero rows, pivots normalized to 1.
pub(crate) fn rref_in_place(rows: &mut Vec<Codeword>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(found) = (rank..rows.len()).find(|&r| rows[r].get(col) != 0) else {
            continue;
        };
        rows.swap(rank, found);
        let lead = rows[rank].get(col);
        if lead != 1 {
            let spec = rows[rank].spec();
            let inv = spec.inv(lead).expect("pivot is nonzero");
            rows[rank] = rows[rank].scale(inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank {
                continue;
            }
            let c = row.get(col);
            if c == 1 {
                row.xor_assign(&pivot_row);
            } else if c != 0 {
                row.xor_assign(&pivot_row.scale(c));
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    pivots
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} matrix {}x{}", self.spec, self.rows.len(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {:?}", r.values())?;
        }
        Ok(())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}
