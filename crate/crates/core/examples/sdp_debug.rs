use jamshield_core::convex::{sdp, HermitianMatrix};
use nalgebra::DMatrix;
use num_complex::Complex64;

fn main() {
    let c = HermitianMatrix::new(DMatrix::from_row_slice(
        2,
        2,
        &[
            Complex64::new(0.0, 0.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(0.0, 0.0),
        ],
    ))
    .unwrap();
    let sol = sdp::solve_unit_diag(&c, 1e-8).unwrap();
    println!("objective {} dual {} gap {} iters {} capped {}",
        sol.objective, sol.dual_bound, sol.kkt_residual, sol.iterations, sol.capped);
    println!("V = {}", sol.v.as_matrix());
}
