use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::gt::{gt_generator_real, unitary_irrep, GtKind, GtOperator};
use super::transform::{index_to_tuple, tuple_to_index, DualSchur};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::linalg::{direct_sum, max_abs, to_complex, CMatrix, CVector, RMatrix};
use crate::symgroup::{Permutation, YoungIrrep};

/// `P(π)|e⟩ = |π·e⟩` on `(ℂ^d)^{⊗n}`.
pub fn tensor_permutation(pi: &Permutation, d: usize) -> RMatrix {
    let n = pi.degree();
    let dim = d.pow(n as u32);
    let mut m = RMatrix::zeros(dim, dim);
    for c in 0..dim {
        let e = index_to_tuple(c, n, d);
        m[(tuple_to_index(&pi.act_on_tuple(&e), d), c)] = 1.0;
    }
    m
}

/// `u^{⊗n}` with the first factor most significant.
pub fn tensor_power(u: &CMatrix, n: usize) -> CMatrix {
    (0..n).fold(CMatrix::identity(1, 1), |acc, _| acc.kronecker(u))
}

/// Conjugate `m` (on `(ℂ^d)^{⊗n}`) into the Schur basis.
fn conjugate(t: &DualSchur, m: &CMatrix) -> CMatrix {
    let u = to_complex(&t.real_matrix());
    &u * m * u.adjoint()
}

/// `‖U P(π) U† − ⊕_λ I_mult ⊗ λ(π)‖_max`.
pub fn verify_schur_weyl_perm(t: &DualSchur, pi: &Permutation) -> Result<f64> {
    if pi.degree() != t.n() {
        return Err(Error::SizeMismatch { left: pi.degree(), right: t.n() });
    }
    let lhs = conjugate(t, &to_complex(&tensor_permutation(pi, t.d())));
    let blocks: Vec<CMatrix> = t
        .layout()
        .blocks
        .iter()
        .map(|b| {
            let irrep = YoungIrrep::new(&b.lambda).matrix(pi);
            to_complex(&RMatrix::identity(b.qs.len(), b.qs.len()).kronecker(&irrep))
        })
        .collect();
    Ok(max_abs(&(lhs - direct_sum(&blocks))))
}

/// `‖U u^{⊗n} U† − ⊕_λ ρ_λ(u) ⊗ I_{d_λ}‖_max`.
pub fn verify_schur_weyl_unitary(t: &DualSchur, u: &CMatrix) -> Result<f64> {
    let lhs = conjugate(t, &tensor_power(u, t.n()));
    let blocks = t
        .layout()
        .blocks
        .iter()
        .map(|b| {
            let rho = unitary_irrep(&b.lambda, t.d(), u)?;
            Ok(rho.kronecker(&CMatrix::identity(b.ps.len(), b.ps.len())))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(max_abs(&(lhs - direct_sum(&blocks))))
}

/// `Σ_m E^{ab}_m` acting on `(ℂ^d)^{⊗n}` (letters 1-based).
pub fn tensor_matrix_unit(n: usize, d: usize, a: usize, b: usize) -> RMatrix {
    let dim = d.pow(n as u32);
    let mut m = RMatrix::zeros(dim, dim);
    for c in 0..dim {
        let e = index_to_tuple(c, n, d);
        for pos in 0..n {
            if e[pos] == b {
                let mut f = e.clone();
                f[pos] = a;
                m[(tuple_to_index(&f, d), c)] += 1.0;
            }
        }
    }
    m
}

/// Largest deviation between the conjugated `J₀, J₊, J₋` of every `l` and
/// [`gt_generator_real`] on each `q` register.
pub fn verify_gt_basis(t: &DualSchur) -> Result<f64> {
    let (n, d) = (t.n(), t.d());
    let u = t.real_matrix();
    let mut worst: f64 = 0.0;
    for l in 1..d {
        let e_lp = tensor_matrix_unit(n, d, l, l + 1);
        let e_pl = tensor_matrix_unit(n, d, l + 1, l);
        let e_ll = tensor_matrix_unit(n, d, l, l);
        let e_pp = tensor_matrix_unit(n, d, l + 1, l + 1);
        let ops = [
            (GtKind::J0, (e_ll - e_pp) * 0.5),
            (GtKind::Jplus, e_lp),
            (GtKind::Jminus, e_pl),
        ];
        for (kind, m) in ops {
            let lhs = &u * m * u.transpose();
            let blocks = t
                .layout()
                .blocks
                .iter()
                .map(|b| {
                    let g = gt_generator_real(&b.lambda, d, GtOperator { kind, l })?;
                    Ok(to_complex(&g.kronecker(&RMatrix::identity(b.ps.len(), b.ps.len()))))
                })
                .collect::<Result<Vec<_>>>()?;
            worst = worst.max(max_abs(&(to_complex(&lhs) - direct_sum(&blocks))));
        }
    }
    Ok(worst)
}

/// Largest `|⟨λ,q,p| diag(z)^{⊗n} |λ,q,p⟩ − Π z_i^{content(q)_i}|` together
/// with the largest off-diagonal entry.
pub fn verify_weights(t: &DualSchur, z: &[Complex64]) -> Result<f64> {
    if z.len() != t.d() {
        return Err(Error::SizeMismatch { left: z.len(), right: t.d() });
    }
    let diag = CMatrix::from_diagonal(&CVector::from_column_slice(z));
    let lhs = conjugate(t, &tensor_power(&diag, t.n()));
    let mut expected = CMatrix::zeros(t.dim(), t.dim());
    for (i, label) in t.layout().labels().iter().enumerate() {
        let c = label.q.content(t.d())?;
        expected[(i, i)] = (1..=t.d()).fold(Complex64::new(1.0, 0.0), |acc, v| acc * z[v - 1].powu(c.count(v) as u32));
    }
    Ok(max_abs(&(lhs - expected)))
}

/// Computational-basis state serialized as `{n, d, amps: [[re, im], …]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateVector {
    pub n: usize,
    pub d: usize,
    pub amps: Vec<[f64; 2]>,
}

impl StateVector {
    pub fn from_vector(n: usize, d: usize, v: &CVector) -> Self {
        StateVector { n, d, amps: v.iter().map(|z| [z.re, z.im]).collect() }
    }

    pub fn to_vector(&self) -> Result<CVector> {
        let dim = super::transform::hilbert_dim(self.n, self.d);
        if dim != self.amps.len() as u128 {
            return Err(Error::SizeMismatch { left: self.amps.len(), right: dim.min(usize::MAX as u128) as usize });
        }
        Ok(CVector::from_iterator(self.amps.len(), self.amps.iter().map(|&[re, im]| Complex64::new(re, im))))
    }
}

/// Probability of each `λ` when measuring only the irrep label of `U|ψ⟩`.
pub fn weak_schur_distribution(psi: &StateVector, budget: u128) -> Result<Vec<(Partition, f64)>> {
    let v = psi.to_vector()?;
    let norm = v.norm();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Error::NotNormalized(norm));
    }
    DualSchur::new(psi.n, psi.d, budget)?.weak_distribution(&v)
}
