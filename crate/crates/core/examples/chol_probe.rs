use nalgebra::DMatrix;
use num_complex::Complex64;

fn main() {
    // Hermitian with complex off-diagonal; eigenvalues of [[2, i],[-i, 2]] are 1 and 3.
    let h = DMatrix::from_row_slice(
        2, 2,
        &[Complex64::new(2.0, 0.0), Complex64::new(0.0, 1.0),
          Complex64::new(0.0, -1.0), Complex64::new(2.0, 0.0)],
    );
    let se = h.clone().symmetric_eigen();
    println!("eigenvalues: {:?}", se.eigenvalues.as_slice());
    // reconstruct
    let mut rec = DMatrix::zeros(2, 2);
    for k in 0..2 {
        let v = se.eigenvectors.column(k).into_owned();
        rec += &v * v.adjoint() * Complex64::new(se.eigenvalues[k], 0.0);
    }
    println!("reconstruction error: {}", (&rec - &h).iter().map(|z| z.norm()).fold(0.0f64, f64::max));

    let m3 = DMatrix::from_row_slice(
        3, 3,
        &[Complex64::new(1.0, 0.0), Complex64::new(0.5, -0.25), Complex64::new(0.0, 0.7),
          Complex64::new(0.5, 0.25), Complex64::new(-2.0, 0.0), Complex64::new(0.3, 0.0),
          Complex64::new(0.0, -0.7), Complex64::new(0.3, 0.0), Complex64::new(0.5, 0.0)],
    );
    let se3 = m3.clone().symmetric_eigen();
    println!("3x3 eigenvalues: {:?}", se3.eigenvalues.as_slice());
    let mut rec3: DMatrix<Complex64> = DMatrix::zeros(3, 3);
    for k in 0..3 {
        let v = se3.eigenvectors.column(k).into_owned();
        rec3 += &v * v.adjoint() * Complex64::new(se3.eigenvalues[k], 0.0);
    }
    println!("3x3 reconstruction error: {}", (&rec3 - &m3).iter().map(|z| z.norm()).fold(0.0f64, f64::max));
}
