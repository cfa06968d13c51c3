//! Self-contained convex solver kernels.
//!
//! Two problem shapes are supported, matching what the optimization blocks
//! need:
//!
//! * [`sdp::solve_unit_diag`] — minimize `tr(C V)` over Hermitian `V >= 0`
//!   with `diag(V) = 1`, via a dual log-det barrier;
//! * [`nlp::solve`] — minimize a smooth convex objective under affine,
//!   second-order-cone and smooth convex inequality constraints, via a
//!   primal log-barrier method with damped Newton centering.
//!
//! Neither is a modeling language; both are sized for dense problems with
//! at most a few hundred variables.

pub mod nlp;
pub mod sdp;

use nalgebra::DMatrix;
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum KernelError {
    #[error("matrix is not Hermitian (relative asymmetry {0:.3e})")]
    NonHermitian(f64),
    #[error("infeasible start point: {0}")]
    InfeasibleStart(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

/// Complex square matrix equal to its conjugate transpose.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    mat: DMatrix<Complex64>,
}

impl HermitianMatrix {
    /// Validates Hermitian symmetry to `1e-12` relative and symmetrizes
    /// the roundoff away.
    pub fn new(mat: DMatrix<Complex64>) -> Result<Self, KernelError> {
        if mat.nrows() != mat.ncols() {
            return Err(KernelError::Dimension(format!(
                "{}x{} matrix is not square",
                mat.nrows(),
                mat.ncols()
            )));
        }
        let scale = mat.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
        let asym = (&mat - mat.adjoint())
            .iter()
            .map(|c| c.norm())
            .fold(0.0f64, f64::max);
        if asym > 1e-12 * scale.max(1e-300) {
            return Err(KernelError::NonHermitian(asym / scale.max(1e-300)));
        }
        let sym = (&mat + mat.adjoint()).scale(0.5);
        Ok(Self { mat: sym })
    }

    /// Rank-1 Hermitian matrix `w w^H`.
    pub fn from_rank1(w: &nalgebra::DVector<Complex64>) -> Self {
        Self { mat: w * w.adjoint() }
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn as_matrix(&self) -> &DMatrix<Complex64> {
        &self.mat
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.mat
    }

    /// `tr(self * other)`; real for Hermitian arguments.
    pub fn trace_product(&self, other: &HermitianMatrix) -> f64 {
        trace_product(&self.mat, &other.mat)
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = self
            .mat
            .clone()
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .copied()
            .collect();
        ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
        ev
    }
}

/// Real part of `tr(A B)` for Hermitian `A`, `B`.
pub fn trace_product(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
    debug_assert_eq!(a.nrows(), b.nrows());
    let mut acc = 0.0;
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            acc += (a[(i, j)] * b[(j, i)]).re;
        }
    }
    acc
}

/// Cholesky factorization of a Hermitian positive-definite complex matrix.
///
/// nalgebra's complex `Cholesky` happily factors indefinite Hermitian
/// matrices by taking complex square roots of negative pivots, so it
/// cannot be used as a positive-definiteness test; this one fails on any
/// non-positive pivot.
pub(crate) struct HermCholesky {
    l: DMatrix<Complex64>,
}

impl HermCholesky {
    /// `None` when the matrix is not positive definite.
    pub fn new(s: &DMatrix<Complex64>) -> Option<Self> {
        let m = s.nrows();
        debug_assert_eq!(m, s.ncols());
        let mut l: DMatrix<Complex64> = DMatrix::zeros(m, m);
        for j in 0..m {
            let mut d = s[(j, j)].re;
            for k in 0..j {
                d -= l[(j, k)].norm_sqr();
            }
            if !(d > 0.0 && d.is_finite()) {
                return None;
            }
            let ljj = d.sqrt();
            l[(j, j)] = Complex64::new(ljj, 0.0);
            for i in j + 1..m {
                let mut acc = s[(i, j)];
                for k in 0..j {
                    acc -= l[(i, k)] * l[(j, k)].conj();
                }
                l[(i, j)] = acc / ljj;
            }
        }
        Some(Self { l })
    }

    pub fn log_det(&self) -> f64 {
        (0..self.l.nrows()).map(|i| self.l[(i, i)].re.ln()).sum::<f64>() * 2.0
    }

    /// Inverse of the factored matrix, Hermitian-symmetrized.
    pub fn inverse(&self) -> DMatrix<Complex64> {
        let m = self.l.nrows();
        let mut inv = DMatrix::zeros(m, m);
        let mut col = vec![Complex64::new(0.0, 0.0); m];
        for e in 0..m {
            // Forward solve L y = e_e.
            for i in 0..m {
                let mut acc = if i == e {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                };
                for k in 0..i {
                    acc -= self.l[(i, k)] * col[k];
                }
                col[i] = acc / self.l[(i, i)];
            }
            // Back solve L^H x = y.
            for i in (0..m).rev() {
                let mut acc = col[i];
                for k in i + 1..m {
                    acc -= self.l[(k, i)].conj() * col[k];
                }
                col[i] = acc / self.l[(i, i)];
            }
            for i in 0..m {
                inv[(i, e)] = col[i];
            }
        }
        (&inv + inv.adjoint()).scale(0.5)
    }
}
