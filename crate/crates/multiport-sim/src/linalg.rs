//! Small complex-matrix helpers shared across modules.

use nalgebra::DMatrix;
use num_complex::Complex64;

/// Max |M[i,j] - conj(M[j,i])| over all entries.
pub fn hermiticity_asymmetry(m: &DMatrix<Complex64>) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

/// Smallest eigenvalue of a Hermitian matrix. The input is symmetrized
/// first so that rounding-level asymmetry cannot leak complex eigenvalues.
pub fn hermitian_min_eigenvalue(m: &DMatrix<Complex64>) -> f64 {
    hermitian_eigenvalues(m).into_iter().fold(f64::INFINITY, f64::min)
}

/// All eigenvalues of a Hermitian matrix, unordered.
pub fn hermitian_eigenvalues(m: &DMatrix<Complex64>) -> Vec<f64> {
    let half = Complex64::new(0.5, 0.0);
    let symmetrized = (m + m.adjoint()) * half;
    symmetrized.symmetric_eigen().eigenvalues.iter().copied().collect()
}

/// Max-entry residual of U†U - I.
pub fn unitarity_residual(u: &DMatrix<Complex64>) -> f64 {
    let n = u.nrows();
    let product = u.adjoint() * u;
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let expected = if i == j { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) };
            worst = worst.max((product[(i, j)] - expected).norm());
        }
    }
    worst
}

/// Reduces an angle to the half-open interval (-pi, pi].
pub fn normalize_angle(theta: f64) -> f64 {
    let two_pi = std::f64::consts::TAU;
    let mut reduced = theta % two_pi;
    if reduced <= -std::f64::consts::PI {
        reduced += two_pi;
    } else if reduced > std::f64::consts::PI {
        reduced -= two_pi;
    }
    reduced
}
