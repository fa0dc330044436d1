//! Small dense symmetric matrices.
//!
//! Every covariance and scale matrix in the crate goes through [`SymMatrix`].
//! Dimensions are expected to stay in the tens, so storage is a plain
//! row-major `Vec<f64>` and the eigensolver is cyclic Jacobi.

#![allow(clippy::needless_range_loop)]

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default relative cutoff used by [`SymMatrix::pseudo_inverse`].
pub const PINV_REL_TOL: f64 = 1e-10;

/// A dense `d x d` symmetric matrix. Symmetry is exact: construction rejects
/// visibly asymmetric input and averages away round-off differences.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<f64>>", into = "Vec<Vec<f64>>")]
pub struct SymMatrix {
    dim: usize,
    data: Vec<f64>,
}

/// Lower-triangular Cholesky factor, row-major with the upper part zeroed.
#[derive(Debug, Clone, PartialEq)]
pub struct Cholesky {
    dim: usize,
    data: Vec<f64>,
}

/// Eigenpairs of a symmetric matrix. `vectors[k]` is the unit eigenvector
/// belonging to `values[k]`.
#[derive(Debug, Clone)]
pub struct SymEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

impl SymMatrix {
    /// Builds from row-major entries. Entries whose transposes differ by more
    /// than `1e-12` relative to the largest magnitude are rejected.
    pub fn from_row_major(dim: usize, entries: &[f64]) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Domain("matrix dimension must be at least 1".into()));
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        if entries.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("matrix entries must be finite".into()));
        }
        let scale = entries
            .iter()
            .fold(0.0f64, |m, v| m.max(v.abs()))
            .max(f64::MIN_POSITIVE);
        let mut data = entries.to_vec();
        for i in 0..dim {
            for j in (i + 1)..dim {
                let (a, b) = (entries[i * dim + j], entries[j * dim + i]);
                if (a - b).abs() > 1e-12 * scale {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
                let m = 0.5 * (a + b);
                data[i * dim + j] = m;
                data[j * dim + i] = m;
            }
        }
        Ok(Self { dim, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        let mut flat = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
            flat.extend_from_slice(row);
        }
        Self::from_row_major(dim, &flat)
    }

    pub fn identity(dim: usize) -> Self {
        Self::scaled_identity(dim, 1.0)
    }

    pub fn scaled_identity(dim: usize, s: f64) -> Self {
        let mut data = vec![0.0; dim * dim];
        for i in 0..dim {
            data[i * dim + i] = s;
        }
        Self { dim, data }
    }

    pub fn diag(values: &[f64]) -> Self {
        let dim = values.len();
        let mut data = vec![0.0; dim * dim];
        for (i, v) in values.iter().enumerate() {
            data[i * dim + i] = *v;
        }
        Self { dim, data }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    pub fn as_row_major(&self) -> &[f64] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    /// `a * self + b * other`.
    pub fn lin_comb(&self, a: f64, other: &SymMatrix, b: f64) -> Result<Self> {
        self.check_dim(other.dim)?;
        Ok(Self {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(x, y)| a * x + b * y)
                .collect(),
        })
    }

    pub fn mul_vec(&self, v: &[f64]) -> Result<Vec<f64>> {
        self.check_dim(v.len())?;
        Ok(self
            .data
            .chunks(self.dim)
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// `vᵀ M v`.
    pub fn quad_form(&self, v: &[f64]) -> Result<f64> {
        let mv = self.mul_vec(v)?;
        Ok(mv.iter().zip(v).map(|(a, b)| a * b).sum())
    }

    /// Dense product `self * other`, row-major. The result is generally not
    /// symmetric, hence the plain vector.
    pub fn matmul(&self, other: &SymMatrix) -> Result<Vec<f64>> {
        self.check_dim(other.dim)?;
        let d = self.dim;
        let mut out = vec![0.0; d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                if a == 0.0 {
                    continue;
                }
                for j in 0..d {
                    out[i * d + j] += a * other.data[k * d + j];
                }
            }
        }
        Ok(out)
    }

    fn check_dim(&self, got: usize) -> Result<()> {
        if got != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got,
            });
        }
        Ok(())
    }

    fn max_diag(&self) -> f64 {
        (0..self.dim)
            .map(|i| self.get(i, i).abs())
            .fold(0.0, f64::max)
    }

    /// Cholesky factorization `M = L Lᵀ`. A pivot at or below
    /// `dim * eps * max|diag|` is treated as a failure.
    pub fn cholesky(&self) -> Result<Cholesky> {
        let d = self.dim;
        let tol = d as f64 * f64::EPSILON * self.max_diag();
        let mut l = vec![0.0; d * d];
        for j in 0..d {
            let mut pivot = self.get(j, j);
            for k in 0..j {
                pivot -= l[j * d + k] * l[j * d + k];
            }
            if !(pivot > tol) {
                return Err(Error::NotPositiveDefinite { index: j, pivot });
            }
            let ljj = pivot.sqrt();
            l[j * d + j] = ljj;
            for i in (j + 1)..d {
                let mut s = self.get(i, j);
                for k in 0..j {
                    s -= l[i * d + k] * l[j * d + k];
                }
                l[i * d + j] = s / ljj;
            }
        }
        Ok(Cholesky { dim: d, data: l })
    }

    /// Determinant and inverse of a positive definite matrix.
    pub fn det_and_inverse_spd(&self) -> Result<(f64, SymMatrix)> {
        let chol = self.cholesky()?;
        Ok((chol.log_det().exp(), chol.inverse()))
    }

    /// Eigendecomposition by cyclic Jacobi rotations.
    pub fn eigen_sym(&self) -> SymEigen {
        let d = self.dim;
        let mut a = self.data.clone();
        let mut v = vec![0.0; d * d];
        for i in 0..d {
            v[i * d + i] = 1.0;
        }
        let frob: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
        for _sweep in 0..100 {
            let off: f64 = (0..d)
                .flat_map(|i| (0..d).filter(move |&j| j != i).map(move |j| (i, j)))
                .map(|(i, j)| a[i * d + j] * a[i * d + j])
                .sum::<f64>()
                .sqrt();
            if off <= 1e-15 * frob || off == 0.0 {
                break;
            }
            for p in 0..d {
                for q in (p + 1)..d {
                    let apq = a[p * d + q];
                    if apq == 0.0 {
                        continue;
                    }
                    let app = a[p * d + p];
                    let aqq = a[q * d + q];
                    let theta = (aqq - app) / (2.0 * apq);
                    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                    let t = if theta == 0.0 { 1.0 } else { t };
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;
                    for k in 0..d {
                        let akp = a[k * d + p];
                        let akq = a[k * d + q];
                        a[k * d + p] = c * akp - s * akq;
                        a[k * d + q] = s * akp + c * akq;
                    }
                    for k in 0..d {
                        let apk = a[p * d + k];
                        let aqk = a[q * d + k];
                        a[p * d + k] = c * apk - s * aqk;
                        a[q * d + k] = s * apk + c * aqk;
                    }
                    for k in 0..d {
                        let vkp = v[k * d + p];
                        let vkq = v[k * d + q];
                        v[k * d + p] = c * vkp - s * vkq;
                        v[k * d + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
        SymEigen {
            values: (0..d).map(|i| a[i * d + i]).collect(),
            vectors: (0..d)
                .map(|k| (0..d).map(|i| v[i * d + k]).collect())
                .collect(),
        }
    }

    /// Moore–Penrose inverse. Eigenvalues with `|λ| <= rel_tol * max|λ|`
    /// are dropped.
    pub fn pseudo_inverse(&self, rel_tol: f64) -> SymMatrix {
        let eig = self.eigen_sym();
        let d = self.dim;
        let cutoff = rel_tol * eig.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let mut data = vec![0.0; d * d];
        for (lambda, vec) in eig.values.iter().zip(&eig.vectors) {
            if lambda.abs() <= cutoff {
                continue;
            }
            let inv = 1.0 / lambda;
            for i in 0..d {
                for j in 0..d {
                    data[i * d + j] += inv * vec[i] * vec[j];
                }
            }
        }
        symmetrized(d, data)
    }
}

impl TryFrom<Vec<Vec<f64>>> for SymMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<f64>>) -> Result<Self> {
        Self::from_rows(&rows)
    }
}

impl From<SymMatrix> for Vec<Vec<f64>> {
    fn from(m: SymMatrix) -> Self {
        m.rows()
    }
}

fn symmetrized(d: usize, mut data: Vec<f64>) -> SymMatrix {
    for i in 0..d {
        for j in (i + 1)..d {
            let m = 0.5 * (data[i * d + j] + data[j * d + i]);
            data[i * d + j] = m;
            data[j * d + i] = m;
        }
    }
    SymMatrix { dim: d, data }
}

impl Cholesky {
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    pub fn log_det(&self) -> f64 {
        2.0 * (0..self.dim).map(|i| self.get(i, i).ln()).sum::<f64>()
    }

    /// Solves `L y = b` in place.
    pub fn forward_solve(&self, b: &mut [f64]) {
        let d = self.dim;
        for i in 0..d {
            let mut s = b[i];
            for k in 0..i {
                s -= self.data[i * d + k] * b[k];
            }
            b[i] = s / self.data[i * d + i];
        }
    }

    /// `xᵀ M⁻¹ x` where `M = L Lᵀ`.
    pub fn inv_quad_form(&self, x: &[f64], scratch: &mut [f64]) -> f64 {
        scratch.copy_from_slice(x);
        self.forward_solve(scratch);
        scratch.iter().map(|v| v * v).sum()
    }

    /// `out = L z`.
    pub fn mul_lower(&self, z: &[f64], out: &mut [f64]) {
        let d = self.dim;
        for i in 0..d {
            out[i] = (0..=i).map(|k| self.data[i * d + k] * z[k]).sum();
        }
    }

    pub fn inverse(&self) -> SymMatrix {
        let d = self.dim;
        let mut inv = vec![0.0; d * d];
        let mut col = vec![0.0; d];
        for j in 0..d {
            col.iter_mut().for_each(|c| *c = 0.0);
            col[j] = 1.0;
            self.forward_solve(&mut col);
            // back substitution with Lᵀ
            for i in (0..d).rev() {
                let mut s = col[i];
                for k in (i + 1)..d {
                    s -= self.data[k * d + i] * col[k];
                }
                col[i] = s / self.data[i * d + i];
            }
            for i in 0..d {
                inv[i * d + j] = col[i];
            }
        }
        symmetrized(d, inv)
    }

    pub fn to_row_major(&self) -> Vec<f64> {
        self.data.clone()
    }
}
