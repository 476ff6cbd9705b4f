//! Seeded random objects: Haar-distributed unitaries, pure states, and
//! density matrices. Used by the CLI's `random` multiport spec and by the
//! test suites; everything is deterministic given the RNG state.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::states::{MixedState, PureState};

fn standard_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re / 2f64.sqrt(), im / 2f64.sqrt())
}

/// Complex Ginibre matrix with unit-variance entries.
pub fn ginibre<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DMatrix<Complex64> {
    DMatrix::from_fn(dim, dim, |_, _| standard_complex(rng))
}

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the
/// R-diagonal phases folded back into Q.
pub fn haar_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DMatrix<Complex64> {
    let gaussian = ginibre(dim, rng);
    let qr = gaussian.qr();
    let r = qr.r();
    let mut q = qr.q();
    for col in 0..dim {
        let pivot = r[(col, col)];
        let phase = if pivot.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            pivot / pivot.norm()
        };
        for row in 0..dim {
            q[(row, col)] *= phase;
        }
    }
    q
}

/// Uniform pure state on the unit sphere.
pub fn random_pure_state<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> PureState {
    let amplitudes: Vec<Complex64> = (0..dim).map(|_| standard_complex(rng)).collect();
    PureState::normalized(amplitudes).expect("Gaussian vector is nonzero almost surely")
}

/// Wishart-style random density matrix G G† / Tr(G G†).
pub fn random_density_matrix<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> MixedState {
    let g = ginibre(dim, rng);
    let mut w = &g * g.adjoint();
    let trace = w.trace().re;
    w /= Complex64::new(trace, 0.0);
    // round off the anti-Hermitian dust before validation
    let w = (&w + w.adjoint()) * Complex64::new(0.5, 0.0);
    MixedState::new(w).expect("Wishart matrix is a density matrix")
}
