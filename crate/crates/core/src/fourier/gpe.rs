use num_complex::Complex64;
use rayon::prelude::*;

use super::labels::{Label, LabeledUnitary};
use super::qft::qft_young;
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, CVector};
use crate::symgroup::{Permutation, YoungSubgroup};

/// Generalized phase estimation of `S_n` right multiplication restricted to a
/// Young subgroup `Y`.
///
/// Acts on `AB ⊗ C` where `AB` is the group register (lexicographic basis)
/// and `C` carries the Fourier labels of `Y`, index `(g, c) ↦ g·|Y| + c`. The
/// operator is `(I ⊗ F_Y) · Σ_h R(h) ⊗ |h⟩⟨h| · (I ⊗ F_Y†)` with
/// `R(h)|g⟩ = |g ∘ h⟩`. Starting `C` in the trivial label (index 0) prepares
/// the uniform superposition over `Y`.
#[derive(Clone, Debug)]
pub struct Gpe {
    qft_y: LabeledUnitary,
    /// `right[h][g]` is the index of `g ∘ h`.
    right: Vec<Vec<usize>>,
    group_dim: usize,
    n: usize,
}

impl Gpe {
    pub fn new(y: &YoungSubgroup) -> Self {
        let n = y.degree();
        let qft_y = qft_young(y);
        let group = Permutation::all(n);
        let right = qft_y
            .cols
            .iter()
            .map(|l| {
                let Label::Group { perm: h } = l else { unreachable!("group columns") };
                group.iter().map(|g| g.compose(h).lex_rank()).collect()
            })
            .collect();
        Gpe { qft_y, right, group_dim: group.len(), n }
    }

    pub fn subgroup_dim(&self) -> usize {
        self.qft_y.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.group_dim * self.subgroup_dim()
    }

    /// Labels of the `C` register.
    pub fn subgroup_labels(&self) -> &[Label] {
        &self.qft_y.rows
    }

    fn apply_on_c(&self, m: &CMatrix, psi: &mut CVector) {
        let y = self.subgroup_dim();
        psi.as_mut_slice().par_chunks_mut(y).for_each(|chunk| {
            let v = m * CVector::from_column_slice(chunk);
            chunk.copy_from_slice(v.as_slice());
        });
    }

    pub fn apply(&self, psi: &CVector) -> Result<CVector> {
        if psi.len() != self.dim() {
            return Err(Error::SizeMismatch { left: psi.len(), right: self.dim() });
        }
        let y = self.subgroup_dim();
        let mut state = psi.clone();
        self.apply_on_c(&self.qft_y.matrix.adjoint(), &mut state);
        let mut moved = CVector::zeros(self.dim());
        for (h, map) in self.right.iter().enumerate() {
            for (g, &gh) in map.iter().enumerate() {
                moved[gh * y + h] = state[g * y + h];
            }
        }
        self.apply_on_c(&self.qft_y.matrix, &mut moved);
        Ok(moved)
    }

    /// Dense matrix, built column by column.
    pub fn to_matrix(&self) -> LabeledUnitary {
        let dim = self.dim();
        let mut m = CMatrix::zeros(dim, dim);
        for c in 0..dim {
            let mut e = CVector::zeros(dim);
            e[c] = Complex64::new(1.0, 0.0);
            m.set_column(c, &self.apply(&e).expect("dimension matches"));
        }
        let group: Vec<Label> = (0..self.group_dim)
            .map(|r| Label::Group { perm: Permutation::from_lex_rank(self.n, r) })
            .collect();
        let labels: Vec<Label> = group
            .iter()
            .flat_map(|g| {
                self.qft_y.rows.iter().map(move |c| Label::Product { factors: vec![g.clone(), c.clone()] })
            })
            .collect();
        LabeledUnitary::new(m, labels.clone(), labels).expect("consistent sizes")
    }

    /// Probability of each irrep label of `Y` on the `C` register after
    /// running on `|ψ⟩ ⊗ |trivial⟩`.
    pub fn irrep_probabilities(&self, psi: &CVector) -> Result<Vec<(Vec<Partition>, f64)>> {
        if psi.len() != self.group_dim {
            return Err(Error::SizeMismatch { left: psi.len(), right: self.group_dim });
        }
        let y = self.subgroup_dim();
        let mut input = CVector::zeros(self.dim());
        for g in 0..self.group_dim {
            input[g * y] = psi[g];
        }
        let out = self.apply(&input)?;
        let mut probs: Vec<(Vec<Partition>, f64)> = Vec::new();
        for (c, label) in self.qft_y.rows.iter().enumerate() {
            let key = irrep_key(label);
            let p: f64 = (0..self.group_dim).map(|g| out[g * y + c].norm_sqr()).sum();
            match probs.iter_mut().find(|(k, _)| *k == key) {
                Some(entry) => entry.1 += p,
                None => probs.push((key, p)),
            }
        }
        Ok(probs)
    }
}

/// Partitions of the blocks named by a subgroup Fourier label.
pub fn irrep_key(label: &Label) -> Vec<Partition> {
    match label {
        Label::Product { factors } => factors
            .iter()
            .map(|f| match f {
                Label::Fourier { lambda, .. } => lambda.clone(),
                _ => unreachable!("Fourier factors"),
            })
            .collect(),
        _ => unreachable!("product label"),
    }
}
