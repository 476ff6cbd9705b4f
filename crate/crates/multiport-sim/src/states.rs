//! Internal-state algebra: pure vectors, density operators, trace products,
//! and the Gaussian spectral-polarization model of single photons.
//!
//! "Internal" refers to every degree of freedom a multiport does not touch
//! (spectrum, polarization, arrival time). Dimensions are finite; for N pure
//! states a dimension of N always suffices.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermiticity_asymmetry, hermitian_min_eigenvalue, normalize_angle};

/// Tolerance on norms and traces.
pub const NORM_TOL: f64 = 1e-12;
/// Eigenvalue floor admitted as "positive semidefinite".
pub const PSD_TOL: f64 = 1e-10;

/// A normalized pure state on a finite-dimensional internal space.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: DVector<Complex64>,
}

impl PureState {
    /// Wraps an amplitude vector, requiring unit norm within [`NORM_TOL`].
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let v = DVector::from_vec(amplitudes);
        let norm = v.norm();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidState(format!("pure state norm {norm} is not 1")));
        }
        Ok(Self { amplitudes: v })
    }

    /// Normalizes an arbitrary nonzero amplitude vector.
    pub fn normalized(amplitudes: Vec<Complex64>) -> Result<Self> {
        let v = DVector::from_vec(amplitudes);
        let norm = v.norm();
        if norm == 0.0 {
            return Err(Error::InvalidState("cannot normalize the zero vector".into()));
        }
        Ok(Self { amplitudes: v / Complex64::new(norm, 0.0) })
    }

    /// The basis vector |index> in a `dim`-dimensional space.
    pub fn basis_vector(dim: usize, index: usize) -> Self {
        let mut v = DVector::zeros(dim);
        v[index] = Complex64::new(1.0, 0.0);
        Self { amplitudes: v }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &DVector<Complex64> {
        &self.amplitudes
    }

    /// Density operator |state><state|.
    pub fn projector(&self) -> MixedState {
        let d = self.dim();
        let mut m = DMatrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                m[(i, j)] = self.amplitudes[i] * self.amplitudes[j].conj();
            }
        }
        MixedState { matrix: m }
    }
}

/// Inner product <a|b>, conjugate-linear in the first argument.
pub fn overlap(a: &PureState, b: &PureState) -> Result<Complex64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { left: a.dim(), right: b.dim() });
    }
    Ok(a.amplitudes.dotc(&b.amplitudes))
}

/// A density operator: Hermitian, positive semidefinite, unit trace.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedState {
    matrix: DMatrix<Complex64>,
}

impl MixedState {
    pub fn new(matrix: DMatrix<Complex64>) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() {
            return Err(Error::DimensionMismatch {
                left: matrix.nrows(),
                right: matrix.ncols(),
            });
        }
        let asymmetry = hermiticity_asymmetry(&matrix);
        if asymmetry > NORM_TOL {
            return Err(Error::NotHermitian { max_asymmetry: asymmetry });
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > NORM_TOL || trace.im.abs() > NORM_TOL {
            return Err(Error::InvalidState(format!("density matrix trace {trace} is not 1")));
        }
        let min_eig = hermitian_min_eigenvalue(&matrix);
        if min_eig < -PSD_TOL {
            return Err(Error::NotPositiveSemidefinite { min_eigenvalue: min_eig });
        }
        Ok(Self { matrix })
    }

    pub fn from_pure(state: &PureState) -> Self {
        state.projector()
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        let scale = Complex64::new(1.0 / dim as f64, 0.0);
        Self { matrix: DMatrix::identity(dim, dim) * scale }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }
}

/// A particle's internal state, pure or mixed.
#[derive(Debug, Clone, PartialEq)]
pub enum InternalState {
    Pure(PureState),
    Mixed(MixedState),
}

impl InternalState {
    pub fn dim(&self) -> usize {
        match self {
            Self::Pure(s) => s.dim(),
            Self::Mixed(s) => s.dim(),
        }
    }

    pub fn is_pure(&self) -> bool {
        matches!(self, Self::Pure(_))
    }

    pub fn to_density(&self) -> MixedState {
        match self {
            Self::Pure(s) => s.projector(),
            Self::Mixed(s) => s.clone(),
        }
    }
}

impl From<PureState> for InternalState {
    fn from(s: PureState) -> Self {
        Self::Pure(s)
    }
}

impl From<MixedState> for InternalState {
    fn from(s: MixedState) -> Self {
        Self::Mixed(s)
    }
}

/// `Tr(rho_R ... rho_1)` for a chain of internal states listed in cycle
/// order `[rho_1, ..., rho_R]`.
///
/// For an all-pure chain this is the product of neighbor overlaps
/// `prod_a <phi_{a+1}|phi_a>` (cyclically), which keeps exact zeros exact;
/// otherwise the states are densified and multiplied out.
pub fn chain_trace(chain: &[&InternalState]) -> Result<Complex64> {
    if chain.is_empty() {
        return Err(Error::InvalidInput("chain_trace needs a nonempty chain".into()));
    }
    if chain.iter().all(|s| s.is_pure()) {
        let pures: Vec<&PureState> = chain
            .iter()
            .map(|s| match s {
                InternalState::Pure(p) => p,
                InternalState::Mixed(_) => unreachable!(),
            })
            .collect();
        let mut product = Complex64::new(1.0, 0.0);
        for alpha in 0..pures.len() {
            let next = (alpha + 1) % pures.len();
            product *= overlap(pures[next], pures[alpha])?;
        }
        return Ok(product);
    }
    let densities: Vec<MixedState> = chain.iter().map(|s| s.to_density()).collect();
    trace_product(&densities)
}

/// Trace of the right-to-left product of a chain of density operators:
/// `trace_product([a, b, c]) = Tr(c b a)`.
pub fn trace_product(chain: &[MixedState]) -> Result<Complex64> {
    let first = chain.first().ok_or_else(|| {
        Error::InvalidInput("trace_product needs a nonempty chain".into())
    })?;
    let dim = first.dim();
    for state in chain {
        if state.dim() != dim {
            return Err(Error::DimensionMismatch { left: dim, right: state.dim() });
        }
    }
    let mut product = first.matrix.clone();
    for state in &chain[1..] {
        product = &state.matrix * product;
    }
    Ok(product.trace())
}

/// Single-photon spectral-polarization parameters: a Gaussian spectral
/// amplitude centered at `center_frequency` with width `width`, carrying
/// the linear spectral phase of arrival time `arrival_time`, tensored with
/// a polarization qubit.
///
/// The spectral amplitude is
/// `phi(w) = (sqrt(pi) width)^(-1/2) exp(-(w - w0)^2 / (2 width^2) + i tau (w - w0))`,
/// with the sign of the phase chosen so that a positive `tau` delays the
/// wavepacket under the e^(-i w t) time convention.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianPhotonSpec {
    pub center_frequency: f64,
    pub width: f64,
    pub arrival_time: f64,
    polarization: [Complex64; 2],
}

impl GaussianPhotonSpec {
    pub fn new(
        center_frequency: f64,
        width: f64,
        arrival_time: f64,
        polarization: [Complex64; 2],
    ) -> Result<Self> {
        if !(width > 0.0) {
            return Err(Error::InvalidState(format!("spectral width {width} must be > 0")));
        }
        let norm_sq = polarization[0].norm_sqr() + polarization[1].norm_sqr();
        if (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidState(format!(
                "polarization norm^2 {norm_sq} is not 1"
            )));
        }
        Ok(Self { center_frequency, width, arrival_time, polarization })
    }

    /// Convenience constructor with a real linear polarization at `angle`
    /// from the vertical axis.
    pub fn linear_polarization(
        center_frequency: f64,
        width: f64,
        arrival_time: f64,
        angle: f64,
    ) -> Self {
        Self {
            center_frequency,
            width,
            arrival_time,
            polarization: [
                Complex64::new(angle.cos(), 0.0),
                Complex64::new(angle.sin(), 0.0),
            ],
        }
    }

    pub fn polarization(&self) -> [Complex64; 2] {
        self.polarization
    }

    pub fn with_polarization(&self, polarization: [Complex64; 2]) -> Result<Self> {
        Self::new(self.center_frequency, self.width, self.arrival_time, polarization)
    }

    /// Closed-form spectral overlap `int dw phi_k*(w) phi_j(w)`:
    ///
    /// `sqrt(2 dk dj / (dk^2 + dj^2)) exp(-eta + i xi)` with
    /// `eta = [dk^2 dj^2 (tk - tj)^2 + (wk - wj)^2] / (2 (dk^2 + dj^2))` and
    /// `xi = tk (wk - wbar) - tj (wj - wbar)`, where `wbar` is the
    /// width-weighted mean `(wk dj^2 + wj dk^2) / (dk^2 + dj^2)`.
    pub fn spectral_overlap(&self, other: &Self) -> Complex64 {
        let (wk, dk, tk) = (self.center_frequency, self.width, self.arrival_time);
        let (wj, dj, tj) = (other.center_frequency, other.width, other.arrival_time);
        let d2_sum = dk * dk + dj * dj;
        let prefactor = (2.0 * dk * dj / d2_sum).sqrt();
        let eta = (dk * dk * dj * dj * (tk - tj).powi(2) + (wk - wj).powi(2)) / (2.0 * d2_sum);
        let mean_frequency = (wk * dj * dj + wj * dk * dk) / d2_sum;
        let xi = tk * (wk - mean_frequency) - tj * (wj - mean_frequency);
        Complex64::from_polar(prefactor * (-eta).exp(), xi)
    }
}

/// Full single-photon overlap `<Phi_k|Phi_j>`: polarization inner product
/// times the spectral overlap.
pub fn gaussian_overlap(k: &GaussianPhotonSpec, j: &GaussianPhotonSpec) -> Result<Complex64> {
    if !(k.width > 0.0) || !(j.width > 0.0) {
        return Err(Error::InvalidState("spectral widths must be > 0".into()));
    }
    let polarization = k.polarization[0].conj() * j.polarization[0]
        + k.polarization[1].conj() * j.polarization[1];
    Ok(polarization * k.spectral_overlap(j))
}

/// The polarization pattern that opens a 4-vertex circle: photons 1 and 3
/// orthogonal, photons 2 and 4 orthogonal, neighbors overlapping through
/// the mixing angle `chi`.
pub fn circle_dance_polarizations(chi: f64) -> [[Complex64; 2]; 4] {
    let c = Complex64::new(chi.cos(), 0.0);
    let s = Complex64::new(chi.sin(), 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    [[one, zero], [c, s], [zero, one], [s, -c]]
}

/// Magnitudes and phases of the four cyclic-edge overlaps of the Gaussian
/// circle-dance configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct CircleDanceEdges {
    /// |<Phi_k|Phi_{k+1}>| for edges (1,2), (2,3), (3,4), (4,1).
    pub r: [f64; 4],
    /// arg <Phi_k|Phi_{k+1}> for the same edges, in (-pi, pi]; zero where r = 0.
    pub theta: [f64; 4],
}

/// Overwrites the four specs' polarizations with the circle pattern at
/// angle `chi` and returns the edge overlaps. All non-adjacent overlaps
/// vanish exactly by polarization orthogonality.
pub fn circle_dance_gaussian_params(
    specs: &[GaussianPhotonSpec; 4],
    chi: f64,
) -> Result<CircleDanceEdges> {
    let polarizations = circle_dance_polarizations(chi);
    let mut dressed = Vec::with_capacity(4);
    for (spec, polarization) in specs.iter().zip(polarizations) {
        dressed.push(spec.with_polarization(polarization)?);
    }
    let mut r = [0.0; 4];
    let mut theta = [0.0; 4];
    for edge in 0..4 {
        let value = gaussian_overlap(&dressed[edge], &dressed[(edge + 1) % 4])?;
        r[edge] = value.norm();
        theta[edge] = if r[edge] == 0.0 { 0.0 } else { normalize_angle(value.arg()) };
    }
    Ok(CircleDanceEdges { r, theta })
}

/// Collective four-particle phase of the Gaussian circle dance with equal
/// spectral widths:
/// `pi + [(w04 - w02)(t1 - t3) + (w03 - w01)(t4 - t2)] / 2`, in (-pi, pi].
pub fn four_particle_phase_gaussian(specs: &[GaussianPhotonSpec; 4]) -> Result<f64> {
    let width = specs[0].width;
    for spec in specs.iter().skip(1) {
        if (spec.width - width).abs() > 1e-12 * width.abs() {
            return Err(Error::Unsupported(
                "collective-phase closed form requires equal spectral widths".into(),
            ));
        }
    }
    let w = |i: usize| specs[i].center_frequency;
    let t = |i: usize| specs[i].arrival_time;
    let phase = std::f64::consts::PI
        + 0.5 * ((w(3) - w(1)) * (t(0) - t(2)) + (w(2) - w(0)) * (t(3) - t(1)));
    Ok(normalize_angle(phase))
}
