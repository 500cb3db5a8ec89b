//! Dense linear algebra over the prime fields F_2, F_3, F_5.
//!
//! Matrices here are tiny (vertex spaces of interval sums), so everything is
//! plain row-major Gaussian elimination; no pivoting subtleties needed over a
//! field.

use crate::error::{Error, Result};

pub fn check_char(p: u8) -> Result<u8> {
    match p {
        2 | 3 | 5 => Ok(p),
        _ => Err(Error::BadField(p)),
    }
}

fn inv_mod(a: u8, p: u8) -> u8 {
    // p <= 5: brute force is the honest option
    (1..p).find(|&x| (a as u16 * x as u16) % p as u16 == 1).unwrap()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub p: u8,
    data: Vec<u8>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize, p: u8) -> Self {
        Mat { rows, cols, p, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize, p: u8) -> Self {
        let mut m = Mat::zero(n, n, p);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.p, other.p);
        let mut out = Mat::zero(self.rows, other.cols, self.p);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = (out.get(r, c) as u16 + a as u16 * other.get(k, c) as u16)
                        % self.p as u16;
                    out.set(r, c, v as u8);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(self.cols, self.rows, self.p);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    /// Row-reduce in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let p = self.p as u16;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(pr) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            for c in 0..self.cols {
                let (a, b) = (self.get(row, c), self.get(pr, c));
                self.set(row, c, b);
                self.set(pr, c, a);
            }
            let inv = inv_mod(self.get(row, col), self.p) as u16;
            for c in 0..self.cols {
                self.set(row, c, ((self.get(row, c) as u16 * inv) % p) as u8);
            }
            for r in 0..self.rows {
                if r != row && self.get(r, col) != 0 {
                    let f = self.get(r, col) as u16;
                    for c in 0..self.cols {
                        let v = (self.get(r, c) as u16 + (p - 1) * f % p * self.get(row, c) as u16)
                            % p;
                        self.set(r, c, v as u8);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    /// Basis of the right kernel, returned as columns of a (cols x nullity) matrix.
    pub fn kernel_basis(&self) -> Mat {
        let p = self.p;
        let mut red = self.clone();
        let pivots = red.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zero(self.cols, free.len(), p);
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                let v = red.get(r, fc);
                if v != 0 {
                    out.set(pc, k, (p - v) % p);
                }
            }
        }
        out
    }

    /// Basis of the left kernel (row vectors y with y * self = 0), as rows of a
    /// (corank x rows) matrix.
    pub fn left_kernel_basis(&self) -> Mat {
        self.transpose().kernel_basis().transpose()
    }

    /// Right inverse of a full-row-rank matrix: self * out = identity.
    pub fn right_inverse(&self) -> Mat {
        // Solve self * X = I column by column via the RREF of [self | I].
        let mut aug = Mat::zero(self.rows, self.cols + self.rows, self.p);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols + r, 1);
        }
        let pivots = aug.rref();
        assert_eq!(pivots.len(), self.rows, "right_inverse needs full row rank");
        let mut out = Mat::zero(self.cols, self.rows, self.p);
        for (r, &pc) in pivots.iter().enumerate() {
            assert!(pc < self.cols);
            for c in 0..self.rows {
                out.set(pc, c, aug.get(r, self.cols + c));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_rank() {
        let mut m = Mat::zero(2, 3, 2);
        m.set(0, 0, 1);
        m.set(0, 2, 1);
        m.set(1, 0, 1);
        m.set(1, 2, 1);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.nullity(), 2);
    }

    #[test]
    fn kernel_really_kills() {
        for p in [2u8, 3, 5] {
            let mut m = Mat::zero(2, 4, p);
            let mut x = 1u8;
            for r in 0..2 {
                for c in 0..4 {
                    m.set(r, c, x % p);
                    x = x.wrapping_mul(3).wrapping_add(1);
                }
            }
            let k = m.kernel_basis();
            assert_eq!(k.cols, m.nullity());
            let prod = m.mul(&k);
            assert_eq!(prod, Mat::zero(2, k.cols, p));
        }
    }

    #[test]
    fn right_inverse_works() {
        let mut m = Mat::zero(2, 3, 5);
        m.set(0, 0, 2);
        m.set(0, 1, 1);
        m.set(1, 2, 3);
        let r = m.right_inverse();
        assert_eq!(m.mul(&r), Mat::identity(2, 5));
    }
}
