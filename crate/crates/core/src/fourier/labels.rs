use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{Partition, SemistandardTableau, StandardTableau};
use crate::error::{Error, Result};
use crate::linalg::{unitarity_residual, CMatrix};
use crate::symgroup::Permutation;

/// Name of one basis vector of a transform's domain or codomain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Label {
    /// Group element in the regular representation.
    Group { perm: Permutation },
    /// Fourier basis vector `|λ, row, col⟩`; `row` carries the left action.
    Fourier { lambda: Partition, row: StandardTableau, col: StandardTableau },
    /// Computational basis vector `|e₁ … e_n⟩`.
    Tuple { tuple: Vec<usize> },
    /// Permutation-module basis vector: multiplicity label `q` (content equal
    /// to the module type) and irrep label `p`.
    PermModule { lambda: Partition, q: SemistandardTableau, p: StandardTableau },
    /// Schur basis vector `|λ, q, p⟩` with `q` over `[d]`.
    Schur { lambda: Partition, q: SemistandardTableau, p: StandardTableau },
    /// Tensor product, first factor most significant.
    Product { factors: Vec<Label> },
}

/// A dense matrix with labelled rows and columns.
///
/// Serializes as `{rows, cols, data}` where `data` lists `[re, im]` pairs in
/// row-major order.
#[derive(Clone, Debug, PartialEq)]
pub struct LabeledUnitary {
    pub matrix: CMatrix,
    pub rows: Vec<Label>,
    pub cols: Vec<Label>,
}

impl LabeledUnitary {
    pub fn new(matrix: CMatrix, rows: Vec<Label>, cols: Vec<Label>) -> Result<Self> {
        if matrix.nrows() != rows.len() {
            return Err(Error::SizeMismatch { left: matrix.nrows(), right: rows.len() });
        }
        if matrix.ncols() != cols.len() {
            return Err(Error::SizeMismatch { left: matrix.ncols(), right: cols.len() });
        }
        Ok(LabeledUnitary { matrix, rows, cols })
    }

    /// `‖U†U − I‖_max`.
    pub fn unitarity_residual(&self) -> f64 {
        unitarity_residual(&self.matrix)
    }

    pub fn row_index(&self, label: &Label) -> Option<usize> {
        self.rows.iter().position(|l| l == label)
    }

    pub fn col_index(&self, label: &Label) -> Option<usize> {
        self.cols.iter().position(|l| l == label)
    }
}

#[derive(Serialize, Deserialize)]
struct LabeledUnitaryJson {
    rows: Vec<Label>,
    cols: Vec<Label>,
    data: Vec<[f64; 2]>,
}

impl Serialize for LabeledUnitary {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let m = &self.matrix;
        let data = (0..m.nrows())
            .flat_map(|i| (0..m.ncols()).map(move |j| [m[(i, j)].re, m[(i, j)].im]))
            .collect();
        LabeledUnitaryJson { rows: self.rows.clone(), cols: self.cols.clone(), data }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LabeledUnitary {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = LabeledUnitaryJson::deserialize(d)?;
        let (r, c) = (raw.rows.len(), raw.cols.len());
        if raw.data.len() != r * c {
            return Err(serde::de::Error::custom(format!("expected {} entries, found {}", r * c, raw.data.len())));
        }
        let matrix = CMatrix::from_row_iterator(r, c, raw.data.iter().map(|&[re, im]| Complex64::new(re, im)));
        Ok(LabeledUnitary { matrix, rows: raw.rows, cols: raw.cols })
    }
}

/// Label of a vector inside a multiplicity space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MultLabel {
    Standard(StandardTableau),
    Semistandard(SemistandardTableau),
}

/// Index order inside one isotypic block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockOrder {
    /// Irrep label most significant (Fourier rows `|λ, i, j⟩`).
    IrrepMajor,
    /// Multiplicity label most significant (`|λ, q, p⟩`).
    MultMajor,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub lambda: Partition,
    pub mult_labels: Vec<MultLabel>,
    pub irrep_labels: Vec<StandardTableau>,
}

impl Block {
    pub fn dim(&self) -> usize {
        self.mult_labels.len() * self.irrep_labels.len()
    }
}

/// Decomposition of a representation into isotypic blocks, in partition order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockStructure {
    pub blocks: Vec<Block>,
    pub order: BlockOrder,
    pub total_dim: usize,
}

impl BlockStructure {
    pub fn new(blocks: Vec<Block>, order: BlockOrder) -> Self {
        let total_dim = blocks.iter().map(Block::dim).sum();
        BlockStructure { blocks, order, total_dim }
    }

    /// Start offset of each block.
    pub fn offsets(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .scan(0, |acc, b| {
                let o = *acc;
                *acc += b.dim();
                Some(o)
            })
            .collect()
    }

    pub fn block(&self, lambda: &Partition) -> Option<&Block> {
        self.blocks.iter().find(|b| &b.lambda == lambda)
    }
}
