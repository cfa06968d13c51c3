//! Unit-diagonal complex semidefinite programming.
//!
//! Solves `min tr(C V)` subject to `V >= 0`, `diag(V) = 1` for Hermitian
//! `C`. The dual is `max sum(y)` subject to `C - Diag(y) >= 0`, a problem
//! in `m` real variables; we run a log-det barrier on the dual and recover
//! the primal from the barrier relation `V = t S^{-1}`, `S = C - Diag(y)`.
//! On the central path `diag(V) = 1` holds at Newton stationarity and the
//! duality gap equals `t * m`, so driving `t` down yields both primal
//! feasibility and the target gap.
//!
//! The tolerance applies to `C` normalized to unit max-entry; for larger
//! inputs the achieved gap scales with `max |C_ij|`, for smaller inputs it
//! shrinks with it, which keeps the solve meaningful across the wide
//! dynamic range of cost matrices the phase block produces.

use nalgebra::{Cholesky, DMatrix, DVector};
use num_complex::Complex64;

use super::{trace_product, HermCholesky, HermitianMatrix, KernelError};

/// Iteration budget for the whole solve (all Newton steps).
pub const MAX_ITER: usize = 200;

#[derive(Debug, Clone)]
pub struct SdpSolution {
    /// Optimal matrix, PSD with unit diagonal.
    pub v: HermitianMatrix,
    /// Primal objective `tr(C V)`.
    pub objective: f64,
    /// Duality gap plus feasibility residual actually achieved.
    pub kkt_residual: f64,
    /// Dual lower bound `sum(y)` with `C - Diag(y) >= 0`.
    pub dual_bound: f64,
    /// Newton iterations spent.
    pub iterations: usize,
    /// True when the iteration budget ran out before reaching the target
    /// residual; the best iterate is still returned.
    pub capped: bool,
}

/// Minimizes `tr(C V)` over `{V >= 0, diag(V) = 1}`.
pub fn solve_unit_diag(c: &HermitianMatrix, tol: f64) -> Result<SdpSolution, KernelError> {
    let m = c.dim();
    let c_raw = c.as_matrix();

    let gamma = c_raw.iter().map(|z| z.norm()).fold(0.0f64, f64::max);
    if gamma == 0.0 || m == 1 {
        // Any feasible point is optimal; the identity is the natural pick.
        let v = HermitianMatrix::new(DMatrix::identity(m, m)).unwrap();
        let objective = trace_product(c_raw, v.as_matrix());
        return Ok(SdpSolution {
            v,
            objective,
            kkt_residual: 0.0,
            dual_bound: objective,
            iterations: 0,
            capped: false,
        });
    }
    let c_hat = c_raw.map(|z| z / gamma);
    let target_gap = tol / gamma.max(1.0);

    // Strictly dual-feasible start: y = (lambda_min - 1) * 1 gives
    // S = C - Diag(y) >= I.
    let lambda_min = c
        .eigenvalues()
        .first()
        .copied()
        .expect("nonempty spectrum")
        / gamma;
    let mut y = DVector::from_element(m, lambda_min - 1.0);

    let s_of = |y: &DVector<f64>| -> DMatrix<Complex64> {
        let mut s = c_hat.clone();
        for i in 0..m {
            s[(i, i)] -= Complex64::new(y[i], 0.0);
        }
        s
    };

    // Initial barrier weight from the gap of the starting pair
    // (V = t S^{-1} has gap exactly t*m on the central path).
    let gap0 = (trace_product(&c_hat, &DMatrix::identity(m, m)) - y.sum()).max(1.0);
    let mut t = gap0 / m as f64;
    let t_final = 0.45 * target_gap / m as f64;

    let mut iterations = 0usize;
    let mut capped = false;

    'stages: loop {
        // Newton centering of f(y) = -1'y - t log det S(y).
        loop {
            if iterations >= MAX_ITER {
                capped = true;
                break 'stages;
            }
            let s = s_of(&y);
            let chol = HermCholesky::new(&s).expect("iterates stay strictly dual feasible");
            let s_inv = chol.inverse();
            let mut grad = DVector::zeros(m);
            for i in 0..m {
                grad[i] = -1.0 + t * s_inv[(i, i)].re;
            }
            let mut hess = DMatrix::zeros(m, m);
            for i in 0..m {
                for j in 0..m {
                    hess[(i, j)] = t * s_inv[(i, j)].norm_sqr();
                }
            }
            for i in 0..m {
                hess[(i, i)] += 1e-14 * t.max(1.0);
            }
            let step = Cholesky::new(hess)
                .map(|ch| ch.solve(&(-&grad)))
                .unwrap_or_else(|| -&grad);
            let decrement = -grad.dot(&step);
            iterations += 1;
            if decrement.abs() < 1e-16 {
                break;
            }

            // Backtrack to keep S positive definite and descend f.
            let f_val = |y: &DVector<f64>| -> Option<f64> {
                let chol = HermCholesky::new(&s_of(y))?;
                Some(-y.sum() - t * chol.log_det())
            };
            let f0 = f_val(&y).expect("current iterate is feasible");
            let mut alpha = 1.0;
            let mut moved = false;
            for _ in 0..60 {
                let cand = &y + alpha * &step;
                if let Some(fc) = f_val(&cand) {
                    if fc <= f0 - 0.25 * alpha * decrement {
                        y = cand;
                        moved = true;
                        break;
                    }
                }
                alpha *= 0.5;
            }
            if !moved || decrement / 2.0 < 1e-13 {
                break;
            }
        }
        if t <= t_final {
            break;
        }
        t = (t / 10.0).max(t_final);
    }

    // Primal recovery: V = t S^{-1}, rescaled to an exactly unit diagonal.
    let s = s_of(&y);
    let chol = HermCholesky::new(&s).expect("final iterate is dual feasible");
    let mut v = chol.inverse().map(|z| z * t);
    v = (&v + v.adjoint()).scale(0.5);
    let scales: Vec<f64> = (0..m).map(|i| v[(i, i)].re.max(1e-300).sqrt()).collect();
    for i in 0..m {
        for j in 0..m {
            v[(i, j)] /= Complex64::new(scales[i] * scales[j], 0.0);
        }
        v[(i, i)] = Complex64::new(1.0, 0.0);
    }

    let objective_hat = trace_product(&c_hat, &v);
    let dual_hat = y.sum();
    let gap = (objective_hat - dual_hat).max(0.0);
    if gap > target_gap && iterations >= MAX_ITER {
        capped = true;
    }
    Ok(SdpSolution {
        v: HermitianMatrix::new(v).expect("rescaled primal stays Hermitian"),
        objective: gamma * objective_hat,
        kkt_residual: gamma * gap,
        dual_bound: gamma * dual_hat,
        iterations,
        capped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn herm(entries: Vec<Complex64>, m: usize) -> HermitianMatrix {
        HermitianMatrix::new(DMatrix::from_row_slice(m, m, &entries)).unwrap()
    }

    pub(crate) fn random_hermitian(m: usize, rng: &mut impl Rng) -> HermitianMatrix {
        let mut mat = DMatrix::zeros(m, m);
        for i in 0..m {
            mat[(i, i)] = Complex64::new(rng.gen_range(-1.0..1.0), 0.0);
            for j in i + 1..m {
                let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                mat[(i, j)] = z;
                mat[(j, i)] = z.conj();
            }
        }
        HermitianMatrix::new(mat).unwrap()
    }

    #[test]
    fn two_by_two_negative_offdiagonal() {
        let c = herm(
            vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(-1.0, 0.0),
                Complex64::new(-1.0, 0.0),
                Complex64::new(0.0, 0.0),
            ],
            2,
        );
        let sol = solve_unit_diag(&c, 1e-8).unwrap();
        assert_relative_eq!(sol.objective, -2.0, epsilon = 1e-6);
        assert_relative_eq!(sol.v.as_matrix()[(0, 1)].re, 1.0, epsilon = 1e-5);
        assert!(sol.kkt_residual <= 1e-8);
    }

    #[test]
    fn identity_cost_is_trace_bound() {
        for m in [2usize, 5, 9] {
            let c = HermitianMatrix::new(DMatrix::identity(m, m)).unwrap();
            let sol = solve_unit_diag(&c, 1e-8).unwrap();
            assert_relative_eq!(sol.objective, m as f64, epsilon = 1e-6);
        }
    }

    #[test]
    fn relaxation_lower_bounds_unit_modulus_grid() {
        // 2 degree grid over the two free phases of a rank-1 feasible
        // V = v v^H (global phase fixed); the SDP optimum can only be lower.
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..3 {
            let c = random_hermitian(3, &mut rng);
            let sol = solve_unit_diag(&c, 1e-8).unwrap();
            let mut grid_best = f64::INFINITY;
            let steps = 180;
            for i in 0..steps {
                for j in 0..steps {
                    let v = DVector::from_vec(vec![
                        Complex64::new(1.0, 0.0),
                        Complex64::from_polar(1.0, std::f64::consts::TAU * i as f64 / steps as f64),
                        Complex64::from_polar(1.0, std::f64::consts::TAU * j as f64 / steps as f64),
                    ]);
                    let val = trace_product(
                        c.as_matrix(),
                        HermitianMatrix::from_rank1(&v).as_matrix(),
                    );
                    grid_best = grid_best.min(val);
                }
            }
            assert!(
                sol.objective <= grid_best + 1e-6,
                "SDP {} should not exceed grid oracle {}",
                sol.objective,
                grid_best
            );
        }
    }

    #[test]
    fn weak_duality_and_sampled_optimality() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let m = rng.gen_range(2..8);
            let c = random_hermitian(m, &mut rng);
            let sol = solve_unit_diag(&c, 1e-7).unwrap();
            assert!(sol.objective >= sol.dual_bound - 1e-12);
            assert!(sol.objective - sol.dual_bound <= 1e-7 + 1e-12);
            // Any sampled feasible point does at least as badly.
            for _ in 0..20 {
                let v = DVector::from_iterator(
                    m,
                    (0..m).map(|_| {
                        Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU))
                    }),
                );
                let feas = HermitianMatrix::from_rank1(&v);
                assert!(sol.objective <= c.trace_product(&feas) + 1e-7);
            }
        }
    }

    #[test]
    fn solution_is_psd_with_unit_diagonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..5 {
            let m = rng.gen_range(2..10);
            let c = random_hermitian(m, &mut rng);
            let sol = solve_unit_diag(&c, 1e-7).unwrap();
            for i in 0..m {
                assert_eq!(sol.v.as_matrix()[(i, i)], Complex64::new(1.0, 0.0));
            }
            let min_ev = sol.v.eigenvalues()[0];
            assert!(min_ev >= -1e-9, "min eigenvalue {min_ev}");
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let mat = DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(1.0, 0.0),
                Complex64::new(1.0, 0.0),
                Complex64::new(0.5, 0.0),
                Complex64::new(1.0, 0.0),
            ],
        );
        assert!(matches!(
            HermitianMatrix::new(mat),
            Err(KernelError::NonHermitian(_))
        ));
    }

    #[test]
    fn tiny_cost_matrices_solve_to_relative_precision() {
        // Cost scale mimics the phase block: entries around 1e-8.
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let c_unit = random_hermitian(4, &mut rng);
        let scaled =
            HermitianMatrix::new(c_unit.as_matrix().map(|z| z * 1e-8)).unwrap();
        let a = solve_unit_diag(&c_unit, 1e-6).unwrap();
        let b = solve_unit_diag(&scaled, 1e-6).unwrap();
        assert_relative_eq!(b.objective, a.objective * 1e-8, max_relative = 1e-5);
        assert!(b.kkt_residual <= 1e-6 * 1e-8 * 10.0);
    }
}
