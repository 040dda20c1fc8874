use std::collections::{HashMap, VecDeque};

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::basis::SchurLayout;
use crate::combinatorics::{enumerate_compositions, index_map, Composition, Partition, SemistandardTableau};
use crate::error::{Error, Result};
use crate::fourier::{Label, LabeledUnitary, PermModule};
use crate::linalg::{CVector, RMatrix};
use crate::rsk::swap_content;
use crate::symgroup::{relabel_for_values, relabel_large_entries, tuple_to_coset, tuples_of_type, Permutation, Relabel};

/// Default limit on `dⁿ` for building the dense transform.
pub const DEFAULT_BUDGET: u128 = 4096;

/// `dⁿ`, saturating.
pub fn hilbert_dim(n: usize, d: usize) -> u128 {
    (d as u128).checked_pow(n as u32).unwrap_or(u128::MAX)
}

/// Index of a tuple over `[d]` in the computational basis (`e₁` most significant).
pub fn tuple_to_index(e: &[usize], d: usize) -> usize {
    e.iter().fold(0, |acc, &v| acc * d + (v - 1))
}

/// Inverse of [`tuple_to_index`].
pub fn index_to_tuple(mut idx: usize, n: usize, d: usize) -> Vec<usize> {
    let mut e = vec![0; n];
    for slot in e.iter_mut().rev() {
        *slot = idx % d + 1;
        idx /= d;
    }
    e
}

/// The part of the transform acting on the tuples of one content.
#[derive(Clone, Debug)]
pub struct ClassBlock {
    /// Content over `[d]`.
    pub content: Composition,
    /// Relabelling of values above `n` shared by the whole class.
    pub relabel: Relabel,
    /// Type of the relabelled tuples, over `[n]`.
    pub ty: Composition,
    /// Global computational-basis indices, in lexicographic tuple order.
    pub cols: Vec<usize>,
    /// Global Schur-basis indices.
    pub rows: Vec<usize>,
    pub matrix: RMatrix,
}

/// Intermediate values of the pipeline for one basis tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineTrace {
    pub tuple: Vec<usize>,
    pub relabel: Relabel,
    pub relabeled: Vec<usize>,
    pub ty: Composition,
    pub transversal: Permutation,
    pub content: Composition,
}

/// Run the classical steps of the pipeline on one basis tuple over `[d]`.
pub fn pipeline_trace(e: &[usize], n: usize, d: usize) -> Result<PipelineTrace> {
    let content = Composition::of_tuple(e, d)?;
    let (relabel, relabeled) = relabel_large_entries(e, n)?;
    let (ty, t) = tuple_to_coset(&relabeled, n)?;
    Ok(PipelineTrace { tuple: e.to_vec(), relabel, relabeled, ty, transversal: t.perm, content })
}

/// Combinatorial renaming of a multiplicity label with content `ty` over
/// `[n]` into one with content `c` over `[d]`: content swaps move the counts
/// into the order of `c`, then the support is renamed in order.
pub fn nominal_label(q: &SemistandardTableau, ty: &Composition, c: &Composition) -> Result<SemistandardTableau> {
    let n = ty.len();
    let from = ty.support();
    let to = c.support();
    if from.len() != to.len() {
        return Err(Error::InvalidArgument(format!("contents {ty:?} and {c:?} have different supports")));
    }
    let mut target = vec![0; n];
    for (&v, &u) in from.iter().zip(&to) {
        target[v - 1] = c.count(u);
    }
    let mut cur = ty.counts().to_vec();
    let mut t = q.clone();
    for i in 0..n {
        if cur[i] == target[i] {
            continue;
        }
        let j = (i + 1..n).find(|&j| cur[j] == target[i]).ok_or_else(|| {
            Error::InvalidArgument(format!("contents {ty:?} and {c:?} are not rearrangements"))
        })?;
        for k in (i..j).rev() {
            t = swap_content(&t, k + 1)?;
            cur.swap(k, k + 1);
        }
    }
    let rename: HashMap<usize, usize> = from.iter().copied().zip(to.iter().copied()).collect();
    t.map_values(|v| rename[&v])
}

/// Shared per-type data: permutation modules keyed by type.
type ModuleCache = HashMap<Composition, PermModule>;

fn build_modules(contents: &[Composition], n: usize) -> ModuleCache {
    let mut keys: Vec<Composition> = Vec::new();
    for c in contents {
        let support = c.support();
        let p = relabel_for_values(&support, n);
        let ty = Composition::of_tuple(&p.apply_tuple(&c.sorted_tuple()), n).expect("relabelled into [n]");
        keys.push(ty);
        keys.push(c.compressed());
    }
    keys.sort();
    keys.dedup();
    keys.into_par_iter().map(|k| (k.clone(), PermModule::new(&k))).collect()
}

/// Unsigned block: relabel, coset, permutation-module transform of the
/// relabelled type, then the rotation onto the multiplicity basis of `c`.
fn class_block(c: &Composition, n: usize, d: usize, layout: &SchurLayout, qindex: &[HashMap<SemistandardTableau, usize>], modules: &ModuleCache) -> ClassBlock {
    let support = c.support();
    let relabel = relabel_for_values(&support, n);
    let e0 = relabel.apply_tuple(&c.sorted_tuple());
    let (ty, pi0) = tuple_to_coset(&e0, n).expect("relabelled into [n]");
    let module = &modules[&ty];
    let native = &modules[&c.compressed()];
    let tuples = tuples_of_type(c);
    let cols: Vec<usize> = tuples.iter().map(|e| tuple_to_index(e, d)).collect();
    let images: Vec<DVector<f64>> = tuples.par_iter().map(|e| module.column(&relabel.apply_tuple(e))).collect();

    let mut rows = Vec::new();
    let mut matrix = RMatrix::zeros(module.dim(), tuples.len());
    let mut src_offset = 0;
    for (bt, bc) in module.blocks().iter().zip(native.blocks()) {
        debug_assert_eq!(bt.irrep.lambda(), bc.irrep.lambda());
        let lambda = bt.irrep.lambda();
        let dl = bt.irrep.dim();
        let k = bt.mult.len();
        let a = layout.blocks.iter().position(|b| &b.lambda == lambda).expect("at most d parts");
        // O[q, q'] = ⟨w^c_q, λ(π₀) w^𝒯_{q'}⟩
        let o = bc.basis.transpose() * bt.irrep.matrix(&pi0.perm) * &bt.basis;
        let row_start = rows.len();
        for q in &bc.mult {
            let q_d = q.map_values(|v| support[v - 1]).expect("renamed into [d]");
            let qi = qindex[a][&q_d];
            rows.extend((0..dl).map(|p| layout.offsets[a] + qi * dl + p));
        }
        for (ci, img) in images.iter().enumerate() {
            let m = DMatrix::from_column_slice(dl, k, &img.as_slice()[src_offset..src_offset + dl * k]);
            let rotated = m * o.transpose();
            matrix.view_mut((row_start, ci), (dl * k, 1)).copy_from_slice(rotated.as_slice());
        }
        src_offset += dl * k;
    }
    ClassBlock { content: c.clone(), relabel, ty, cols, rows, matrix }
}

/// The dual Schur transform on `(ℂ^d)^{⊗n}`, stored as one dense block per
/// content class.
#[derive(Clone, Debug)]
pub struct DualSchur {
    n: usize,
    d: usize,
    layout: SchurLayout,
    classes: Vec<ClassBlock>,
}

impl DualSchur {
    /// Build the class blocks. `budget` bounds the size of the largest class.
    pub fn new(n: usize, d: usize, budget: u128) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::InvalidArgument("n and d must be positive".into()));
        }
        let contents = enumerate_compositions(n, d);
        let largest = contents.iter().map(|c| tuples_of_type_count(c)).max().unwrap_or(1);
        if largest > budget {
            return Err(Error::BudgetExceeded { required: largest, budget });
        }
        let layout = SchurLayout::new(n, d);
        let qindex: Vec<HashMap<SemistandardTableau, usize>> = layout.blocks.iter().map(|b| index_map(&b.qs)).collect();
        let modules = build_modules(&contents, n);
        let mut classes: Vec<ClassBlock> =
            contents.par_iter().map(|c| class_block(c, n, d, &layout, &qindex, &modules)).collect();
        align_signs(&mut classes, &layout, &qindex, n, d);
        Ok(DualSchur { n, d, layout, classes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.layout.dim()
    }

    pub fn layout(&self) -> &SchurLayout {
        &self.layout
    }

    pub fn classes(&self) -> &[ClassBlock] {
        &self.classes
    }

    pub fn real_matrix(&self) -> RMatrix {
        let dim = self.dim();
        let mut u = RMatrix::zeros(dim, dim);
        for b in &self.classes {
            for (ci, &c) in b.cols.iter().enumerate() {
                for (ri, &r) in b.rows.iter().enumerate() {
                    u[(r, c)] = b.matrix[(ri, ci)];
                }
            }
        }
        u
    }

    pub fn to_labeled(&self) -> LabeledUnitary {
        let rows = self.layout.labels().into_iter().map(Label::from).collect();
        let cols = (0..self.dim()).map(|i| Label::Tuple { tuple: index_to_tuple(i, self.n, self.d) }).collect();
        LabeledUnitary::new(crate::linalg::to_complex(&self.real_matrix()), rows, cols).expect("square transform")
    }

    /// `U|ψ⟩`, one class block at a time.
    pub fn apply(&self, psi: &CVector) -> Result<CVector> {
        if psi.len() != self.dim() {
            return Err(Error::SizeMismatch { left: psi.len(), right: self.dim() });
        }
        let mut out = CVector::zeros(self.dim());
        for b in &self.classes {
            let local = CVector::from_iterator(b.cols.len(), b.cols.iter().map(|&c| psi[c]));
            let image = b.matrix.map(|x| Complex64::new(x, 0.0)) * local;
            for (ri, &r) in b.rows.iter().enumerate() {
                out[r] = image[ri];
            }
        }
        Ok(out)
    }

    /// Weight of each `λ` block in `U|ψ⟩`.
    pub fn weak_distribution(&self, psi: &CVector) -> Result<Vec<(Partition, f64)>> {
        let norm = psi.norm();
        if (norm - 1.0).abs() > 1e-9 {
            return Err(Error::NotNormalized(norm));
        }
        let image = self.apply(psi)?;
        Ok(self
            .layout
            .partitions()
            .enumerate()
            .map(|(i, l)| (l.clone(), self.layout.block_range(i).map(|r| image[r].norm_sqr()).sum()))
            .collect())
    }
}

fn tuples_of_type_count(c: &Composition) -> u128 {
    let mut total = crate::combinatorics::factorial(c.size());
    for &k in c.counts() {
        total /= crate::combinatorics::factorial(k);
    }
    total
}

/// Fix the sign of each multiplicity vector so that every lowering operator
/// `J₋^{(l)} = Σ_m E^{l+1,l}_m` has nonnegative matrix elements, starting
/// from the highest weight vector of each `λ`.
fn align_signs(classes: &mut [ClassBlock], layout: &SchurLayout, qindex: &[HashMap<SemistandardTableau, usize>], n: usize, d: usize) {
    let class_of: HashMap<Composition, usize> = classes.iter().enumerate().map(|(i, b)| (b.content.clone(), i)).collect();
    let row_pos: Vec<HashMap<usize, usize>> =
        classes.iter().map(|b| b.rows.iter().enumerate().map(|(i, &r)| (r, i)).collect()).collect();
    let col_pos: Vec<HashMap<usize, usize>> =
        classes.iter().map(|b| b.cols.iter().enumerate().map(|(i, &c)| (c, i)).collect()).collect();

    for (a, block) in layout.blocks.iter().enumerate() {
        let dl = block.ps.len();
        let row_of = |qi: usize| layout.offsets[a] + qi * dl;
        let content_of = |q: &SemistandardTableau| q.content(d).expect("entries in [d]");
        let mut sign: Vec<Option<f64>> = vec![None; block.qs.len()];
        let hw: Vec<Vec<usize>> = block.lambda.parts().iter().enumerate().map(|(i, &len)| vec![i + 1; len]).collect();
        let hw = qindex[a][&SemistandardTableau::new(hw).expect("highest weight tableau")];
        sign[hw] = Some(1.0);
        let mut queue = VecDeque::from([hw]);
        while let Some(qi) = queue.pop_front() {
            let c = content_of(&block.qs[qi]);
            let src = class_of[&c];
            let src_row = classes[src].matrix.row(row_pos[src][&row_of(qi)]).into_owned();
            for l in 1..d {
                if c.count(l) == 0 {
                    continue;
                }
                let mut counts = c.counts().to_vec();
                counts[l - 1] -= 1;
                counts[l] += 1;
                let dst = class_of[&Composition::new(counts)];
                // (J₋ v)[e'] = Σ_{m : e'_m = l+1} v[e' with m lowered to l]
                let lowered: Vec<f64> = classes[dst]
                    .cols
                    .iter()
                    .map(|&col| {
                        let e = index_to_tuple(col, n, d);
                        (0..n)
                            .filter(|&m| e[m] == l + 1)
                            .map(|m| {
                                let mut f = e.clone();
                                f[m] = l;
                                src_row[col_pos[src][&tuple_to_index(&f, d)]]
                            })
                            .sum()
                    })
                    .collect();
                let lowered = DVector::from_vec(lowered);
                for (qj, q) in block.qs.iter().enumerate() {
                    if sign[qj].is_some() || content_of(q) != classes[dst].content {
                        continue;
                    }
                    let r = row_pos[dst][&row_of(qj)];
                    let overlap = classes[dst].matrix.row(r).transpose().dot(&lowered);
                    if overlap.abs() > 1e-9 {
                        sign[qj] = Some(sign[qi].expect("visited") * overlap.signum());
                        queue.push_back(qj);
                    }
                }
            }
        }
        for (qi, s) in sign.iter().enumerate() {
            let s = s.expect("every tableau is reached by lowering");
            if s > 0.0 {
                continue;
            }
            let c = content_of(&block.qs[qi]);
            let k = class_of[&c];
            for p in 0..dl {
                let r = row_pos[k][&(row_of(qi) + p)];
                classes[k].matrix.row_mut(r).neg_mut();
            }
        }
    }
}

/// Dense dual Schur transform; `dⁿ` must fit in `budget`.
pub fn dual_schur(n: usize, d: usize, budget: u128) -> Result<LabeledUnitary> {
    let required = hilbert_dim(n, d);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(DualSchur::new(n, d, budget)?.to_labeled())
}
