use nalgebra::DMatrix;

use super::labels::{Block, BlockOrder, BlockStructure, Label, LabeledUnitary, MultLabel};
use crate::combinatorics::{enumerate_partitions, factorial, Partition};
use crate::linalg::{to_complex, CMatrix, RMatrix};
use crate::symgroup::{tuples_of_type, tuple_to_coset, Permutation, YoungIrrep, YoungSubgroup};

/// Row layout of the Fourier basis of `S_n`: partitions in order, then row
/// tableau, then column tableau.
#[derive(Clone, Debug)]
pub struct FourierLayout {
    irreps: Vec<YoungIrrep>,
    offsets: Vec<usize>,
}

impl FourierLayout {
    pub fn new(n: usize) -> Self {
        let irreps: Vec<YoungIrrep> = enumerate_partitions(n, n).iter().map(YoungIrrep::new).collect();
        let offsets = irreps
            .iter()
            .scan(0, |acc, r| {
                let o = *acc;
                *acc += r.dim() * r.dim();
                Some(o)
            })
            .collect();
        FourierLayout { irreps, offsets }
    }

    pub fn irreps(&self) -> &[YoungIrrep] {
        &self.irreps
    }

    pub fn dim(&self) -> usize {
        self.irreps.iter().map(|r| r.dim() * r.dim()).sum()
    }

    /// Row of `|λ_a, i, j⟩`.
    pub fn index(&self, a: usize, i: usize, j: usize) -> usize {
        self.offsets[a] + i * self.irreps[a].dim() + j
    }

    fn position(&self, lambda: &Partition) -> usize {
        self.irreps.iter().position(|r| r.lambda() == lambda).expect("partition of n")
    }

    pub fn labels(&self) -> Vec<Label> {
        self.irreps
            .iter()
            .flat_map(|r| {
                r.basis().iter().flat_map(move |row| {
                    r.basis().iter().map(move |col| Label::Fourier {
                        lambda: r.lambda().clone(),
                        row: row.clone(),
                        col: col.clone(),
                    })
                })
            })
            .collect()
    }

    pub fn block_structure(&self) -> BlockStructure {
        let blocks = self
            .irreps
            .iter()
            .map(|r| Block {
                lambda: r.lambda().clone(),
                mult_labels: r.basis().iter().cloned().map(MultLabel::Standard).collect(),
                irrep_labels: r.basis().to_vec(),
            })
            .collect();
        BlockStructure::new(blocks, BlockOrder::IrrepMajor)
    }
}

/// `s_m ∘ s_{m+1} ∘ … ∘ s_{k−1}`, which sends `k` to `m`.
fn coset_rep(k: usize, m: usize) -> Permutation {
    (m..k).fold(Permutation::identity(k), |acc, j| acc.compose(&Permutation::adjacent(k, j).expect("j < k")))
}

/// Real Fourier matrix of `S_n` built up the tower `S₁ ⊂ S₂ ⊂ … ⊂ S_n`.
///
/// Every `g ∈ S_k` factors uniquely as `t_m ∘ h` with `m = g(k)` and `h`
/// fixing `k`. Since Young's orthogonal form restricts block-diagonally to
/// `S_{k−1}`, column `g` of the level-`k` matrix is `λ(t_m)` applied to the
/// level-`k−1` column of `h`, embedded along the branching.
pub fn qft_sn_real(n: usize) -> RMatrix {
    let mut prev = DMatrix::from_element(1, 1, 1.0);
    let mut prev_layout = FourierLayout::new(1);
    for k in 2..=n {
        let layout = FourierLayout::new(k);
        let size = factorial(k) as usize;
        let sub = factorial(k - 1) as usize;
        let mut f = RMatrix::zeros(size, size);
        let sub_perms = Permutation::all(k - 1);
        for m in 1..=k {
            let t = coset_rep(k, m);
            let cols: Vec<usize> = sub_perms
                .iter()
                .map(|h| {
                    let mut images = h.one_line();
                    images.push(k);
                    t.compose(&Permutation::from_one_line(images).expect("extension of h")).lex_rank()
                })
                .collect();
            for (a, irrep) in layout.irreps().iter().enumerate() {
                let d = irrep.dim();
                let lt = irrep.matrix(&t);
                let mut start = 0;
                for r in irrep.lambda().removable_rows() {
                    let mu = irrep.lambda().remove_cell(r).expect("removable");
                    let b = prev_layout.position(&mu);
                    let dm = prev_layout.irreps()[b].dim();
                    let coef = (d as f64 / (k * dm) as f64).sqrt();
                    for jj in 0..dm {
                        let gathered = RMatrix::from_fn(dm, sub, |ii, hc| prev[(prev_layout.index(b, ii, jj), hc)]);
                        let mixed = lt.columns(start, dm) * gathered;
                        for i in 0..d {
                            let row = layout.index(a, i, start + jj);
                            for (hc, &g) in cols.iter().enumerate() {
                                f[(row, g)] = coef * mixed[(i, hc)];
                            }
                        }
                    }
                    start += dm;
                }
            }
        }
        prev = f;
        prev_layout = layout;
    }
    prev
}

/// Fourier transform over `S_n`: rows `|λ, i, j⟩`, columns the group in
/// lexicographic order, entries `√(d_λ/n!)·λ(g)_{ij}`.
pub fn qft_sn(n: usize) -> LabeledUnitary {
    let layout = FourierLayout::new(n);
    let cols = Permutation::all(n).into_iter().map(|perm| Label::Group { perm }).collect();
    LabeledUnitary::new(to_complex(&qft_sn_real(n)), layout.labels(), cols).expect("consistent sizes")
}

/// Embed a permutation of the block `[a, b]` into `S_n`.
fn embed(n: usize, a: usize, local: &Permutation) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    for (i, v) in local.one_line().into_iter().enumerate() {
        images[a - 1 + i] = a - 1 + v;
    }
    Permutation::from_one_line(images).expect("block permutation")
}

/// Fourier transform over a Young subgroup: the Kronecker product of the
/// transforms of its blocks. Columns follow [`YoungSubgroup::elements`].
pub fn qft_young(y: &YoungSubgroup) -> LabeledUnitary {
    let n = y.degree();
    let mut matrix = CMatrix::identity(1, 1);
    let mut rows = vec![Vec::new()];
    let mut cols = vec![Permutation::identity(n)];
    for &(a, b) in y.blocks() {
        let q = qft_sn(b - a + 1);
        matrix = matrix.kronecker(&q.matrix);
        rows = rows
            .iter()
            .flat_map(|prefix| {
                q.rows.iter().map(move |l| {
                    let mut f: Vec<Label> = prefix.clone();
                    f.push(l.clone());
                    f
                })
            })
            .collect();
        cols = cols
            .iter()
            .flat_map(|g| {
                q.cols.iter().map(move |l| match l {
                    Label::Group { perm } => g.compose(&embed(n, a, perm)),
                    _ => unreachable!("group columns"),
                })
            })
            .collect();
    }
    let rows = rows.into_iter().map(|factors| Label::Product { factors }).collect();
    let cols = cols.into_iter().map(|perm| Label::Group { perm }).collect();
    LabeledUnitary::new(matrix, rows, cols).expect("consistent sizes")
}

/// Fourier transform of the permutation module induced from the trivial
/// representation of `y`, with the subgroup register kept as an ancilla.
///
/// Columns are `|tuple⟩ ⊗ |Y-Fourier label⟩`, tuples of type `y.ty()` in
/// lexicographic order. The ancilla is taken back to the group basis of `Y`,
/// merged with the transversal element into `t ∘ h`, and the result is
/// Fourier transformed over `S_n`. The columns whose ancilla is the trivial
/// label (index 0) span the image of the permutation module.
pub fn induced_qft(y: &YoungSubgroup, n: usize) -> crate::Result<LabeledUnitary> {
    if y.degree() != n {
        return Err(crate::Error::SizeMismatch { left: y.degree(), right: n });
    }
    let qy = qft_young(y);
    let ydim = qy.rows.len();
    let tuples = tuples_of_type(y.ty());
    let size = factorial(n) as usize;
    let mut merge = CMatrix::zeros(size, size);
    let mut cols = Vec::with_capacity(size);
    for (ti, tuple) in tuples.iter().enumerate() {
        let (_, t) = tuple_to_coset(tuple, n)?;
        for r in 0..ydim {
            for (hc, h) in qy.cols.iter().enumerate() {
                let Label::Group { perm: h } = h else { unreachable!("group columns") };
                let g = t.perm.compose(h).lex_rank();
                merge[(g, ti * ydim + r)] = qy.matrix[(r, hc)].conj();
            }
            cols.push(Label::Product { factors: vec![Label::Tuple { tuple: tuple.clone() }, qy.rows[r].clone()] });
        }
    }
    let q = qft_sn(n);
    LabeledUnitary::new(q.matrix * merge, q.rows, cols)
}
