//! Floating-point signature of `B(e^{iθ})` from eigenvalues. Not certified;
//! used to cross-check the exact engine.

use nalgebra::{Complex, DMatrix, RealField};
use num_traits::ToPrimitive;

use crate::IntMatrix;

/// Default threshold below which an eigenvalue counts as zero.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Approximate `(σ, nullity)` of `B(e^{iθ})` in precision `T`.
pub fn float_oracle_in<T: RealField + Copy>(v: &IntMatrix, theta: T, tol: T) -> (i64, usize) {
    let n = v.rows();
    if n == 0 {
        return (0, 0);
    }
    let eig = b_matrix(v, theta).symmetric_eigenvalues();
    let pos = eig.iter().filter(|&&e| e > tol).count();
    let neg = eig.iter().filter(|&&e| e < -tol).count();
    (pos as i64 - neg as i64, n - pos - neg)
}

/// [`float_oracle_in`] in double precision with tolerance `1e-9`.
pub fn float_oracle(v: &IntMatrix, theta: f64) -> (i64, usize) {
    float_oracle_in(v, theta, DEFAULT_TOLERANCE)
}

/// The complex hermitian matrix `B(e^{iθ})`.
pub fn b_matrix<T: RealField + Copy>(v: &IntMatrix, theta: T) -> DMatrix<Complex<T>> {
    let n = v.rows();
    let z = Complex::new(theta.cos(), theta.sin());
    let one = Complex::new(T::one(), T::zero());
    DMatrix::from_fn(n, n, |i, j| {
        let vij = T::from_f64(v[(i, j)].to_f64().unwrap()).unwrap();
        let vji = T::from_f64(v[(j, i)].to_f64().unwrap()).unwrap();
        (one - z).scale(vij) + (one - z.conj()).scale(vji)
    })
}
