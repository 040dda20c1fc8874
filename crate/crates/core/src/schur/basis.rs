use serde::{Deserialize, Serialize};

use crate::combinatorics::{enumerate_partitions, enumerate_ssyt_bounded, enumerate_syt, Partition, SemistandardTableau, StandardTableau};
use crate::fourier::{Block, BlockOrder, BlockStructure, Label, MultLabel};

/// Schur basis vector `|λ, q, p⟩`: `q` labels the `U(d)` irrep (entries in
/// `[d]`) and `p` the `S_n` irrep.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SchurBasisLabel {
    pub lambda: Partition,
    pub q: SemistandardTableau,
    pub p: StandardTableau,
}

impl From<SchurBasisLabel> for Label {
    fn from(l: SchurBasisLabel) -> Self {
        Label::Schur { lambda: l.lambda, q: l.q, p: l.p }
    }
}

/// Index layout of the Schur basis: partitions with at most `d` parts in
/// order, then `q` by reading word, then `p` in last-letter order.
#[derive(Clone, Debug)]
pub struct SchurLayout {
    pub(crate) blocks: Vec<SchurBlock>,
    pub(crate) offsets: Vec<usize>,
}

#[derive(Clone, Debug)]
pub(crate) struct SchurBlock {
    pub lambda: Partition,
    pub qs: Vec<SemistandardTableau>,
    pub ps: Vec<StandardTableau>,
}

impl SchurLayout {
    pub fn new(n: usize, d: usize) -> Self {
        let blocks: Vec<SchurBlock> = enumerate_partitions(n, d)
            .into_iter()
            .map(|lambda| SchurBlock {
                qs: enumerate_ssyt_bounded(&lambda, d),
                ps: enumerate_syt(&lambda),
                lambda,
            })
            .collect();
        let offsets = blocks
            .iter()
            .scan(0, |acc, b| {
                let o = *acc;
                *acc += b.qs.len() * b.ps.len();
                Some(o)
            })
            .collect();
        SchurLayout { blocks, offsets }
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|b| b.qs.len() * b.ps.len()).sum()
    }

    pub fn labels(&self) -> Vec<SchurBasisLabel> {
        self.blocks
            .iter()
            .flat_map(|b| {
                b.qs.iter().flat_map(move |q| {
                    b.ps.iter().map(move |p| SchurBasisLabel { lambda: b.lambda.clone(), q: q.clone(), p: p.clone() })
                })
            })
            .collect()
    }

    pub fn block_structure(&self) -> BlockStructure {
        let blocks = self
            .blocks
            .iter()
            .map(|b| Block {
                lambda: b.lambda.clone(),
                mult_labels: b.qs.iter().cloned().map(MultLabel::Semistandard).collect(),
                irrep_labels: b.ps.clone(),
            })
            .collect();
        BlockStructure::new(blocks, BlockOrder::MultMajor)
    }

    /// Range of rows belonging to block `i`.
    pub fn block_range(&self, i: usize) -> std::ops::Range<usize> {
        let b = &self.blocks[i];
        self.offsets[i]..self.offsets[i] + b.qs.len() * b.ps.len()
    }

    pub fn partitions(&self) -> impl Iterator<Item = &Partition> {
        self.blocks.iter().map(|b| &b.lambda)
    }
}

/// The Schur basis of `(ℂ^d)^{⊗n}`, `dⁿ` labels in transform row order.
pub fn schur_basis(n: usize, d: usize) -> Vec<SchurBasisLabel> {
    SchurLayout::new(n, d).labels()
}
