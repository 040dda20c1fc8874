//! Dense matrix helpers shared by the transform builders.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

pub type RMatrix = DMatrix<f64>;
pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

/// Largest absolute entry.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn max_abs_real(m: &RMatrix) -> f64 {
    m.iter().map(|x| x.abs()).fold(0.0, f64::max)
}

/// `‖U†U − I‖_max`.
pub fn unitarity_residual(u: &CMatrix) -> f64 {
    let g = u.adjoint() * u;
    max_abs(&(g - CMatrix::identity(u.ncols(), u.ncols())))
}

pub fn orthogonality_residual(m: &RMatrix) -> f64 {
    let g = m.transpose() * m;
    max_abs_real(&(g - RMatrix::identity(m.ncols(), m.ncols())))
}

pub fn to_complex(m: &RMatrix) -> CMatrix {
    m.map(|x| Complex64::new(x, 0.0))
}

/// Block-diagonal direct sum.
pub fn direct_sum(blocks: &[CMatrix]) -> CMatrix {
    let rows = blocks.iter().map(|b| b.nrows()).sum();
    let cols = blocks.iter().map(|b| b.ncols()).sum();
    let mut out = CMatrix::zeros(rows, cols);
    let (mut r, mut c) = (0, 0);
    for b in blocks {
        out.view_mut((r, c), (b.nrows(), b.ncols())).copy_from(b);
        r += b.nrows();
        c += b.ncols();
    }
    out
}

/// Haar-random `d×d` unitary: QR of a complex Gaussian matrix with the phases of
/// `diag(R)` divided out.
pub fn haar_unitary<R: Rng + ?Sized>(d: usize, rng: &mut R) -> CMatrix {
    let z = CMatrix::from_fn(d, d, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re, im) / std::f64::consts::SQRT_2
    });
    let qr = z.qr();
    let (mut q, r) = (qr.q(), qr.r());
    for j in 0..d {
        let rjj = r[(j, j)];
        let phase = if rjj.norm() > 0.0 { rjj / rjj.norm() } else { Complex64::new(1.0, 0.0) };
        for i in 0..d {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// Random unit vector with complex Gaussian amplitudes.
pub fn random_state<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> CVector {
    let v = CVector::from_fn(dim, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re, im)
    });
    let norm = v.norm();
    v / Complex64::new(norm, 0.0)
}

/// Principal logarithm of a unitary matrix through its complex Schur form.
///
/// For a normal matrix the Schur factor is diagonal, so `u = Q diag(e^{iθ}) Q†`
/// and `log u = Q diag(iθ) Q†` is anti-Hermitian.
pub fn unitary_log(u: &CMatrix) -> CMatrix {
    let (q, t) = u.clone().schur().unpack();
    let n = u.nrows();
    let mut diag = CMatrix::zeros(n, n);
    for i in 0..n {
        diag[(i, i)] = Complex64::new(0.0, t[(i, i)].arg());
    }
    let x = &q * diag * q.adjoint();
    // Clean up the Hermitian part left by rounding.
    (&x - x.adjoint()) * Complex64::new(0.5, 0.0)
}

/// `exp(A)` for anti-Hermitian `A`, via the eigendecomposition of the Hermitian `−iA`.
pub fn exp_anti_hermitian(a: &CMatrix) -> CMatrix {
    let n = a.nrows();
    if n == 0 {
        return CMatrix::zeros(0, 0);
    }
    let h = a * Complex64::new(0.0, -1.0);
    let h = (&h + h.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = h.symmetric_eigen();
    let phases = eig.eigenvalues.map(|mu| Complex64::new(0.0, mu).exp());
    let v = eig.eigenvectors;
    &v * CMatrix::from_diagonal(&phases) * v.adjoint()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn haar_is_unitary_and_log_inverts_exp() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for d in 1..=4 {
            let u = haar_unitary(d, &mut rng);
            assert!(unitarity_residual(&u) < 1e-12);
            let x = unitary_log(&u);
            assert!(max_abs(&(&x + x.adjoint())) < 1e-12);
            let back = exp_anti_hermitian(&x);
            assert!(max_abs(&(back - &u)) < 1e-10, "d = {d}");
        }
    }

    #[test]
    fn direct_sum_places_blocks_on_the_diagonal() {
        let a = CMatrix::identity(2, 2);
        let b = CMatrix::from_element(1, 1, Complex64::new(3.0, 0.0));
        let s = direct_sum(&[a, b]);
        assert_eq!(s.nrows(), 3);
        assert_eq!(s[(2, 2)], Complex64::new(3.0, 0.0));
        assert_eq!(s[(0, 2)], Complex64::new(0.0, 0.0));
    }
}
