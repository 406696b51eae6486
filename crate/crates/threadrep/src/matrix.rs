//! Dense matrices over an exact field, with reduced row echelon form,
//! kernel bases, solving, and inversion. Sizes here are desk scale; no
//! sparsity or blocking tricks.

use crate::scalar::{FieldCtx, Scalar};
use crate::Error;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub ctx: FieldCtx,
    entries: Vec<Scalar>,
}

/// Result of row reduction: rank, pivot columns, and a kernel basis whose
/// columns span the null space.
#[derive(Debug, Clone)]
pub struct Rref {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub kernel: Matrix,
    /// The reduced matrix itself.
    pub reduced: Matrix,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, ctx: &FieldCtx) -> Matrix {
        Matrix {
            rows,
            cols,
            ctx: ctx.clone(),
            entries: vec![ctx.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, ctx: &FieldCtx) -> Matrix {
        let mut m = Matrix::zero(n, n, ctx);
        for i in 0..n {
            m.set(i, i, ctx.one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, ctx: &FieldCtx) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            entries.extend(row);
        }
        Matrix { rows: r, cols: c, ctx: ctx.clone(), entries }
    }

    pub fn from_fn(rows: usize, cols: usize, ctx: &FieldCtx, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut m = Matrix::zero(rows, cols, ctx);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.at(i, j).is_one()
                    } else {
                        self.at(i, j).is_zero()
                    }
                })
            })
    }

    /// Checks all entries live in one field.
    pub fn check_uniform(&self) -> Result<(), Error> {
        for e in &self.entries {
            if e.ctx() != self.ctx {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, &self.ctx, |i, j| self.at(j, i).clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, &self.ctx, |i, j| {
            self.at(i, j).add(other.at(i, j))
        })
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, &self.ctx, |i, j| {
            self.at(i, j).sub(other.at(i, j))
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, &self.ctx, |i, j| self.at(i, j).mul(c))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let mut out = Matrix::zero(self.rows, other.cols, &self.ctx);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    /// Horizontal stack [self | other].
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.rows, self.cols + other.cols, &self.ctx, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                other.at(i, j - self.cols).clone()
            }
        })
    }

    /// Block diagonal of two matrices.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zero(self.rows + other.rows, self.cols + other.cols, &self.ctx);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.at(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.at(i, j).clone());
            }
        }
        out
    }

    /// Reduced row echelon form with rank, pivots and kernel basis.
    pub fn rref(&self) -> Result<Rref, Error> {
        self.check_uniform()?;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            // find pivot
            let mut piv = None;
            for r in row..m.rows {
                if !m.at(r, col).is_zero() {
                    piv = Some(r);
                    break;
                }
            }
            let Some(piv) = piv else { continue };
            // swap into place
            if piv != row {
                for j in 0..m.cols {
                    let a = m.at(row, j).clone();
                    let b = m.at(piv, j).clone();
                    m.set(row, j, b);
                    m.set(piv, j, a);
                }
            }
            // normalize
            let inv = m.at(row, col).inv();
            for j in col..m.cols {
                let v = m.at(row, j).mul(&inv);
                m.set(row, j, v);
            }
            // eliminate everywhere else
            for r in 0..m.rows {
                if r == row || m.at(r, col).is_zero() {
                    continue;
                }
                let f = m.at(r, col).clone();
                for j in col..m.cols {
                    let v = m.at(r, j).sub(&f.mul(m.at(row, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
            if row == m.rows {
                break;
            }
        }
        let rank = pivots.len();
        // kernel basis: one column per free column
        let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
        let mut kernel = Matrix::zero(m.cols, free.len(), &self.ctx);
        for (k, &fc) in free.iter().enumerate() {
            kernel.set(fc, k, self.ctx.one());
            for (r, &pc) in pivots.iter().enumerate() {
                kernel.set(pc, k, m.at(r, fc).neg());
            }
        }
        Ok(Rref { rank, pivots, kernel, reduced: m })
    }

    pub fn rank(&self) -> usize {
        self.rref().expect("uniform field").rank
    }

    /// Solves self * x = b for one column vector; None when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let bmat = Matrix::from_fn(self.rows, 1, &self.ctx, |i, _| b[i].clone());
        let aug = self.hstack(&bmat);
        let r = aug.rref().expect("uniform field");
        // inconsistent iff a pivot lands in the last column
        if r.pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![self.ctx.zero(); self.cols];
        for (row, &pc) in r.pivots.iter().enumerate() {
            x[pc] = r.reduced.at(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let aug = self.hstack(&Matrix::identity(self.rows, &self.ctx));
        let r = aug.rref().ok()?;
        if r.rank < self.rows {
            return None;
        }
        Some(Matrix::from_fn(self.rows, self.rows, &self.ctx, |i, j| {
            r.reduced.at(i, self.cols + j).clone()
        }))
    }

    /// Column-space basis as a matrix whose columns are independent
    /// columns of self (in original order).
    pub fn column_space(&self) -> Matrix {
        let r = self.transpose().rref().expect("uniform field");
        // pivots of the transpose's rref are row indices of the transpose,
        // i.e. column indices of self... use rank profile on self directly:
        let rr = self.rref().expect("uniform field");
        let mut out = Matrix::zero(self.rows, rr.pivots.len(), &self.ctx);
        for (k, &c) in rr.pivots.iter().enumerate() {
            for i in 0..self.rows {
                out.set(i, k, self.at(i, c).clone());
            }
        }
        let _ = r;
        out
    }

    /// Re-embeds all entries into a (larger) field.
    pub fn embed(&self, ctx: &FieldCtx) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, ctx, |i, j| ctx.embed(self.at(i, j)))
    }
}

impl std::fmt::Display for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rng64;
    use num::bigint::BigInt;
    use num::BigRational;

    fn fp(p: u64) -> FieldCtx {
        FieldCtx::Prime(p)
    }

    #[test]
    fn identity_rref() {
        let m = Matrix::identity(3, &fp(7));
        let r = m.rref().unwrap();
        assert_eq!(r.rank, 3);
        assert_eq!(r.kernel.cols, 0);
    }

    #[test]
    fn zero_matrix_kernel() {
        let m = Matrix::zero(2, 4, &fp(7));
        let r = m.rref().unwrap();
        assert_eq!(r.rank, 0);
        assert_eq!(r.kernel.cols, 4);
    }

    #[test]
    fn kernel_columns_annihilate() {
        let ctx = fp(32003);
        let mut rng = Rng64::new(42);
        for _ in 0..20 {
            let m = Matrix::from_fn(4, 6, &ctx, |_, _| rng.scalar(&ctx));
            let r = m.rref().unwrap();
            assert_eq!(r.rank + r.kernel.cols, m.cols);
            let prod = m.mul(&r.kernel);
            assert!(prod.is_zero());
        }
    }

    #[test]
    fn mixed_fields_detected() {
        let ctx = fp(7);
        let mut m = Matrix::identity(2, &ctx);
        m.set(0, 1, FieldCtx::Prime(11).one());
        assert!(matches!(m.rref(), Err(Error::FieldMismatch)));
    }

    /// Fraction-free (Bareiss) elimination over the integers: the
    /// independent rank oracle for prime-field reduction.
    fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
        let rows = a.len();
        if rows == 0 {
            return 0;
        }
        let cols = a[0].len();
        let mut prev = BigInt::from(1);
        let mut rank = 0;
        let mut row = 0;
        for col in 0..cols {
            let piv = (row..rows).find(|&r| a[r][col] != BigInt::from(0));
            let Some(piv) = piv else { continue };
            a.swap(row, piv);
            for r in 0..rows {
                if r == row {
                    continue;
                }
                for c in 0..cols {
                    if c == col {
                        continue;
                    }
                    let num = &a[row][col] * &a[r][c] - &a[r][col] * &a[row][c];
                    a[r][c] = num / &prev;
                }
                a[r][col] = BigInt::from(0);
            }
            prev = a[row][col].clone();
            rank += 1;
            row += 1;
            if row == rows {
                break;
            }
        }
        rank
    }

    #[test]
    fn rank_agrees_with_fraction_free_oracle() {
        // random 5x5 over F_32003, lifted to small integers so the ranks
        // agree over Q and mod p
        let p = 32003u64;
        let ctx = fp(p);
        let mut rng = Rng64::new(2024);
        for _ in 0..25 {
            // build with small entries and random rank via products
            let k = (rng.below(5) + 1) as usize;
            let left = Matrix::from_fn(5, k, &ctx, |_, _| ctx.from_i64(rng.below(7) as i64 - 3));
            let right = Matrix::from_fn(k, 5, &ctx, |_, _| ctx.from_i64(rng.below(7) as i64 - 3));
            let m = left.mul(&right);
            let lifted: Vec<Vec<BigInt>> = (0..5)
                .map(|i| {
                    (0..5)
                        .map(|j| match m.at(i, j) {
                            Scalar::Fp { v, .. } => {
                                // symmetric lift to (-p/2, p/2)
                                let v = *v;
                                if v > p / 2 {
                                    BigInt::from(v as i64 - p as i64)
                                } else {
                                    BigInt::from(v as i64)
                                }
                            }
                            _ => unreachable!(),
                        })
                        .collect()
                })
                .collect();
            let oracle = bareiss_rank(lifted);
            assert_eq!(m.rank(), oracle);
        }
    }

    #[test]
    fn solve_and_inverse_over_q() {
        let ctx = FieldCtx::Rational;
        let m = Matrix::from_rows(
            vec![
                vec![ctx.from_i64(2), ctx.from_i64(1)],
                vec![ctx.from_i64(1), ctx.from_i64(1)],
            ],
            &ctx,
        );
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let b = vec![ctx.from_i64(3), ctx.from_i64(2)];
        let x = m.solve(&b).unwrap();
        assert!(x[0].eq_scalar(&ctx.from_i64(1)));
        assert!(x[1].eq_scalar(&ctx.from_i64(1)));
        let half = Scalar::Rat(BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert!(!half.is_zero());
    }
}
