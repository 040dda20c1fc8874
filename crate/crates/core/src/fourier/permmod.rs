use nalgebra::DVector;
use rayon::prelude::*;

use super::labels::{Block, BlockOrder, BlockStructure, Label, LabeledUnitary, MultLabel};
use crate::combinatorics::{enumerate_partitions, enumerate_ssyt, Composition, Partition, SemistandardTableau, StandardTableau};
use crate::error::{Error, Result};
use crate::linalg::{to_complex, RMatrix};
use crate::symgroup::{tuple_to_coset, tuples_of_type, YoungIrrep, YoungSubgroup};

/// Flip `v` so its first entry above `1e-12` in magnitude is positive.
fn fix_sign(v: &mut DVector<f64>) {
    if let Some(x) = v.iter().find(|x| x.abs() > 1e-12) {
        if *x < 0.0 {
            v.neg_mut();
        }
    }
}

fn normalized_average(p: &RMatrix, col: usize) -> Option<DVector<f64>> {
    let mut v = p.column(col).into_owned();
    let norm = v.norm();
    if norm < 1e-12 {
        return None;
    }
    v /= norm;
    fix_sign(&mut v);
    Some(v)
}

/// Normalized `λ(Y)|T⟩`, or `None` when the average vanishes.
pub fn trivial_vector(lambda: &Partition, t: &StandardTableau, y: &YoungSubgroup) -> Result<Option<DVector<f64>>> {
    if &t.shape() != lambda {
        return Err(Error::InvalidTableau(format!("{t} does not have shape {lambda}")));
    }
    if y.degree() != lambda.size() {
        return Err(Error::SizeMismatch { left: y.degree(), right: lambda.size() });
    }
    let irrep = YoungIrrep::new(lambda);
    let idx = irrep.basis().iter().position(|b| b == t).expect("tableau of shape lambda");
    Ok(normalized_average(&irrep.group_average(y), idx))
}

/// Orthonormal basis of the `Y`-fixed vectors of `λ`, one column per
/// semistandard tableau of content `ty`.
///
/// Column `q` is the normalized average of the standardization of `q`, with
/// its first nonzero coordinate positive.
pub fn multiplicity_basis(irrep: &YoungIrrep, ty: &Composition) -> (Vec<SemistandardTableau>, RMatrix) {
    let p = irrep.group_average(&YoungSubgroup::new(ty.clone()));
    let mult = enumerate_ssyt(irrep.lambda(), ty);
    let mut basis = RMatrix::zeros(irrep.dim(), mult.len());
    for (c, q) in mult.iter().enumerate() {
        let std = q.standardize();
        let idx = irrep.basis().iter().position(|b| *b == std).expect("standardization has shape lambda");
        let v = normalized_average(&p, idx).expect("standardized tableaux have nonzero averages");
        basis.set_column(c, &v);
    }
    (mult, basis)
}

/// One isotypic block of a permutation module.
#[derive(Clone, Debug)]
pub struct PermBlock {
    pub irrep: YoungIrrep,
    pub mult: Vec<SemistandardTableau>,
    /// `d_λ × K` matrix whose columns are the multiplicity vectors.
    pub basis: RMatrix,
}

/// Fourier transform of the permutation module spanned by the tuples of a
/// fixed type.
#[derive(Clone, Debug)]
pub struct PermModule {
    ty: Composition,
    tuples: Vec<Vec<usize>>,
    blocks: Vec<PermBlock>,
}

impl PermModule {
    pub fn new(ty: &Composition) -> Self {
        let n = ty.size();
        let blocks = enumerate_partitions(n, n)
            .into_par_iter()
            .filter_map(|lambda| {
                if enumerate_ssyt(&lambda, ty).is_empty() {
                    return None;
                }
                let irrep = YoungIrrep::new(&lambda);
                let (mult, basis) = multiplicity_basis(&irrep, ty);
                Some(PermBlock { irrep, mult, basis })
            })
            .collect();
        PermModule { ty: ty.clone(), tuples: tuples_of_type(ty), blocks }
    }

    pub fn ty(&self) -> &Composition {
        &self.ty
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    pub fn blocks(&self) -> &[PermBlock] {
        &self.blocks
    }

    pub fn dim(&self) -> usize {
        self.tuples.len()
    }

    /// Image of the basis tuple `e`: `√(d_λ/|W|)·[λ(t)w_q]_p` for the coset
    /// representative `t` of `e`, in `(λ, q, p)` order.
    pub fn column(&self, e: &[usize]) -> DVector<f64> {
        let (_, t) = tuple_to_coset(e, self.ty.len()).expect("tuple of the module type");
        let w = self.tuples.len() as f64;
        let mut out = Vec::with_capacity(self.tuples.len());
        for b in &self.blocks {
            let d = b.irrep.dim();
            let image = b.irrep.matrix(&t.perm) * &b.basis * (d as f64 / w).sqrt();
            for q in 0..b.mult.len() {
                out.extend(image.column(q).iter());
            }
        }
        DVector::from_vec(out)
    }

    /// Real `|W| × |W|` matrix; columns follow [`PermModule::tuples`].
    pub fn real_matrix(&self) -> RMatrix {
        let cols: Vec<DVector<f64>> = self.tuples.par_iter().map(|e| self.column(e)).collect();
        RMatrix::from_columns(&cols)
    }

    pub fn row_labels(&self) -> Vec<Label> {
        self.blocks
            .iter()
            .flat_map(|b| {
                b.mult.iter().flat_map(move |q| {
                    b.irrep.basis().iter().map(move |p| Label::PermModule {
                        lambda: b.irrep.lambda().clone(),
                        q: q.clone(),
                        p: p.clone(),
                    })
                })
            })
            .collect()
    }

    pub fn block_structure(&self) -> BlockStructure {
        let blocks = self
            .blocks
            .iter()
            .map(|b| Block {
                lambda: b.irrep.lambda().clone(),
                mult_labels: b.mult.iter().cloned().map(MultLabel::Semistandard).collect(),
                irrep_labels: b.irrep.basis().to_vec(),
            })
            .collect();
        BlockStructure::new(blocks, BlockOrder::MultMajor)
    }
}

/// Fourier transform of the permutation module of type `ty` (values
/// `1..=n`, zero counts allowed). Rows `|λ, q, p⟩`, columns the tuples of
/// that type in lexicographic order.
pub fn qft_permmod(ty: &Composition, n: usize) -> Result<(LabeledUnitary, BlockStructure)> {
    if ty.size() != n {
        return Err(Error::SizeMismatch { left: ty.size(), right: n });
    }
    let module = PermModule::new(ty);
    let cols = module.tuples().iter().map(|t| Label::Tuple { tuple: t.clone() }).collect();
    let u = LabeledUnitary::new(to_complex(&module.real_matrix()), module.row_labels(), cols)?;
    Ok((u, module.block_structure()))
}
