//! Permutations, Young subgroups, coset transversals and Young's orthogonal
//! form for the irreducible representations of `S_n`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{enumerate_syt, index_map, Composition, Partition, StandardTableau};
use crate::error::{Error, Result};
use crate::linalg::RMatrix;

/// Bijection of `{1, …, n}`, stored 0-based. Serialized in 1-based one-line
/// notation, e.g. `[2,1,3]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation(images.into_iter().map(|v| v - 1).collect()))
    }

    /// Product of 1-based cycles, the rightmost cycle applied first.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut p = Permutation::identity(n);
        for cycle in cycles.iter().rev() {
            let mut c = Permutation::identity(n);
            let mut seen = std::collections::HashSet::new();
            for &v in cycle {
                if v == 0 || v > n || !seen.insert(v) {
                    return Err(Error::InvalidPermutation(cycle.clone()));
                }
            }
            for i in 0..cycle.len() {
                c.0[cycle[i] - 1] = cycle[(i + 1) % cycle.len()] - 1;
            }
            p = c.compose(&p);
        }
        Ok(p)
    }

    /// The adjacent transposition `(k, k+1)`, `1 ≤ k < n`.
    pub fn adjacent(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::OutOfRange { value: k, max: n.saturating_sub(1) });
        }
        let mut p = Permutation::identity(n);
        p.0.swap(k - 1, k);
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] + 1
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }

    /// Moves entry `i` of the tuple to position `π(i)`.
    pub fn act_on_tuple<T: Clone>(&self, e: &[T]) -> Vec<T> {
        let mut out = e.to_vec();
        for (i, &v) in self.0.iter().enumerate() {
            out[v] = e[i].clone();
        }
        out
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.0.len();
        (0..n).map(|i| (i + 1..n).filter(|&j| self.0[i] > self.0[j]).count()).sum()
    }

    /// Position in the lexicographic order of one-line notations.
    pub fn lex_rank(&self) -> usize {
        let n = self.0.len();
        let mut rank = 0;
        for i in 0..n {
            let smaller = (i + 1..n).filter(|&j| self.0[j] < self.0[i]).count();
            rank = rank * (n - i) + smaller;
        }
        rank
    }

    pub fn from_lex_rank(n: usize, mut rank: usize) -> Permutation {
        let mut digits = vec![0; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<usize> = (0..n).collect();
        Permutation(digits.into_iter().map(|d| pool.remove(d)).collect())
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let total = (1..=n).product::<usize>();
        (0..total).map(|r| Permutation::from_lex_rank(n, r)).collect()
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::from_one_line(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.one_line()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.one_line().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// Reduced word: `π = s_{k₁} ∘ s_{k₂} ∘ … ∘ s_{k_m}` with `s_k = (k, k+1)`.
pub fn factor_adjacent(pi: &Permutation) -> Vec<usize> {
    let mut w = pi.0.clone();
    let mut word = Vec::new();
    // Strip right descents until w is the identity.
    while let Some(k) = (0..w.len().saturating_sub(1)).find(|&k| w[k] > w[k + 1]) {
        w.swap(k, k + 1);
        word.push(k + 1);
    }
    word.reverse();
    word
}

/// One nonzero pattern of `M_k` in the tableau basis: `M[i][i] = diag`,
/// `M[partner][i] = off`.
#[derive(Clone, Copy, Debug)]
struct Action {
    diag: f64,
    partner: Option<(usize, f64)>,
}

/// Young's orthogonal form for one partition, with the tableau basis and the
/// sparse adjacent-transposition matrices precomputed.
#[derive(Clone, Debug)]
pub struct YoungIrrep {
    lambda: Partition,
    basis: Vec<StandardTableau>,
    actions: Vec<Vec<Action>>,
}

impl YoungIrrep {
    pub fn new(lambda: &Partition) -> Self {
        let basis = enumerate_syt(lambda);
        let index = index_map(&basis);
        let n = lambda.size();
        let actions = (1..n)
            .map(|k| {
                basis
                    .iter()
                    .map(|t| {
                        let dist = (t.content_of(k + 1) - t.content_of(k)) as f64;
                        let a = 1.0 / dist;
                        let partner = t
                            .swap_adjacent(k)
                            .map(|s| (index[&s], (1.0 - a * a).max(0.0).sqrt()));
                        Action { diag: a, partner }
                    })
                    .collect()
            })
            .collect();
        YoungIrrep { lambda: lambda.clone(), basis, actions }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn basis(&self) -> &[StandardTableau] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Dense `M_k`.
    pub fn transposition(&self, k: usize) -> Result<RMatrix> {
        let n = self.lambda.size();
        if k == 0 || k >= n {
            return Err(Error::OutOfRange { value: k, max: n.saturating_sub(1) });
        }
        let d = self.dim();
        let mut m = DMatrix::zeros(d, d);
        for (i, act) in self.actions[k - 1].iter().enumerate() {
            m[(i, i)] = act.diag;
            if let Some((j, b)) = act.partner {
                m[(j, i)] = b;
            }
        }
        Ok(m)
    }

    /// `m ← M_k · m`.
    pub fn left_mul_adjacent(&self, k: usize, m: &mut RMatrix) {
        let src = m.clone();
        for (i, act) in self.actions[k - 1].iter().enumerate() {
            let mut row = src.row(i) * act.diag;
            if let Some((j, b)) = act.partner {
                row += src.row(j) * b;
            }
            m.set_row(i, &row);
        }
    }

    /// `m ← m · M_k`.
    pub fn right_mul_adjacent(&self, k: usize, m: &mut RMatrix) {
        let src = m.clone();
        for (i, act) in self.actions[k - 1].iter().enumerate() {
            let mut col = src.column(i) * act.diag;
            if let Some((j, b)) = act.partner {
                col += src.column(j) * b;
            }
            m.set_column(i, &col);
        }
    }

    /// `λ(π)`.
    pub fn matrix(&self, pi: &Permutation) -> RMatrix {
        let mut m = DMatrix::identity(self.dim(), self.dim());
        for k in factor_adjacent(pi) {
            self.right_mul_adjacent(k, &mut m);
        }
        m
    }

    /// `λ(π)ᵀ`, which is `λ(π⁻¹)`.
    pub fn matrix_transpose(&self, pi: &Permutation) -> RMatrix {
        self.matrix(&pi.inverse())
    }

    /// Average of `λ(g)` over the Young subgroup, built block by block from
    /// coset sums so no group elements are enumerated.
    pub fn group_average(&self, y: &YoungSubgroup) -> RMatrix {
        let d = self.dim();
        let mut p = DMatrix::identity(d, d);
        for &(a, b) in &y.blocks {
            // S_{[a,c]} = ⊔_j (s_j ⋯ s_{c-1}) S_{[a,c-1]}
            for c in a + 1..=b {
                let mut t = DMatrix::identity(d, d);
                let mut sum = t.clone();
                for j in (a..c).rev() {
                    self.left_mul_adjacent(j, &mut t);
                    sum += &t;
                }
                p = sum * p / (c - a + 1) as f64;
            }
        }
        p
    }
}

/// Dense `M_k` for `λ` in the standard-tableau basis.
pub fn young_orthogonal_transposition(lambda: &Partition, k: usize) -> Result<RMatrix> {
    YoungIrrep::new(lambda).transposition(k)
}

/// `λ(π)` in Young's orthogonal form.
pub fn irrep_matrix(lambda: &Partition, pi: &Permutation) -> Result<RMatrix> {
    if pi.degree() != lambda.size() {
        return Err(Error::SizeMismatch { left: pi.degree(), right: lambda.size() });
    }
    Ok(YoungIrrep::new(lambda).matrix(pi))
}

/// Projector onto the vectors of `λ` fixed by every element of `y`.
pub fn group_average(lambda: &Partition, y: &YoungSubgroup) -> Result<RMatrix> {
    if y.degree() != lambda.size() {
        return Err(Error::SizeMismatch { left: y.degree(), right: lambda.size() });
    }
    Ok(YoungIrrep::new(lambda).group_average(y))
}

/// `S_{X₁} × S_{X₂} × …` where the `X_i` are consecutive runs of lengths
/// `ty[i]`. Zero entries contribute empty blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct YoungSubgroup {
    ty: Composition,
    /// 1-based inclusive intervals of the nonempty blocks.
    blocks: Vec<(usize, usize)>,
}

impl YoungSubgroup {
    pub fn new(ty: Composition) -> Self {
        let mut blocks = Vec::new();
        let mut start = 1;
        for &c in ty.counts() {
            if c > 0 {
                blocks.push((start, start + c - 1));
            }
            start += c;
        }
        YoungSubgroup { ty, blocks }
    }

    pub fn trivial(n: usize) -> Self {
        Self::new(Composition::new(vec![1; n]))
    }

    pub fn full(n: usize) -> Self {
        Self::new(Composition::new(vec![n]))
    }

    pub fn ty(&self) -> &Composition {
        &self.ty
    }

    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    pub fn degree(&self) -> usize {
        self.ty.size()
    }

    pub fn order(&self) -> u128 {
        self.blocks.iter().map(|&(a, b)| crate::combinatorics::factorial(b - a + 1)).product()
    }

    /// All elements; the first block varies slowest, each block in lex order.
    pub fn elements(&self) -> Vec<Permutation> {
        let n = self.degree();
        let mut out = vec![Permutation::identity(n)];
        for &(a, b) in &self.blocks {
            let local = Permutation::all(b - a + 1);
            out = out
                .iter()
                .flat_map(|p| {
                    local.iter().map(move |l| {
                        let mut images = p.0.clone();
                        for (i, &v) in l.0.iter().enumerate() {
                            images[a - 1 + i] = a - 1 + v;
                        }
                        Permutation(images)
                    })
                })
                .collect();
        }
        out
    }

    pub fn contains(&self, pi: &Permutation) -> bool {
        pi.degree() == self.degree()
            && self.blocks.iter().all(|&(a, b)| (a - 1..b).all(|i| (a - 1..b).contains(&pi.0[i])))
            && (0..pi.degree()).all(|i| self.blocks.iter().any(|&(a, b)| (a - 1..b).contains(&i)) || pi.0[i] == i)
    }
}

/// Canonical representative of a coset `t·Y_𝒯`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TransversalElement {
    pub perm: Permutation,
}

/// Type of `e` over `[n]` and the shortest `t` with `t · E₀ = e`, where `E₀`
/// is `e` sorted.
pub fn tuple_to_coset(e: &[usize], n: usize) -> Result<(Composition, TransversalElement)> {
    let ty = Composition::of_tuple(e, n)?;
    let starts = ty.prefix_sums();
    let mut next = starts;
    // The j-th occurrence of v in E₀ goes to the j-th occurrence of v in e.
    let mut images = vec![0; e.len()];
    for (pos, &v) in e.iter().enumerate() {
        images[next[v - 1]] = pos;
        next[v - 1] += 1;
    }
    Ok((ty, TransversalElement { perm: Permutation(images) }))
}

/// Inverse of [`tuple_to_coset`].
pub fn coset_to_tuple(ty: &Composition, t: &TransversalElement) -> Result<Vec<usize>> {
    if ty.size() != t.perm.degree() {
        return Err(Error::SizeMismatch { left: ty.size(), right: t.perm.degree() });
    }
    Ok(t.perm.act_on_tuple(&ty.sorted_tuple()))
}

/// Distinct rearrangements of `E₀(ty)` in lexicographic order.
pub fn tuples_of_type(ty: &Composition) -> Vec<Vec<usize>> {
    fn rec(counts: &mut [usize], prefix: &mut Vec<usize>, left: usize, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for v in 0..counts.len() {
            if counts[v] > 0 {
                counts[v] -= 1;
                prefix.push(v + 1);
                rec(counts, prefix, left - 1, out);
                prefix.pop();
                counts[v] += 1;
            }
        }
    }
    let mut counts = ty.counts().to_vec();
    let mut out = Vec::new();
    rec(&mut counts, &mut Vec::new(), ty.size(), &mut out);
    out
}

/// Lex index of each tuple of a type, as produced by [`tuples_of_type`].
pub fn tuple_index(ty: &Composition) -> HashMap<Vec<usize>, usize> {
    tuples_of_type(ty).into_iter().enumerate().map(|(i, t)| (t, i)).collect()
}

/// Injection of the values above `n` into unused values of `[n]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relabel {
    forward: BTreeMap<usize, usize>,
}

impl Relabel {
    pub fn forward(&self) -> &BTreeMap<usize, usize> {
        &self.forward
    }

    pub fn is_identity(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.forward.get(&v).copied().unwrap_or(v)
    }

    pub fn apply_tuple(&self, e: &[usize]) -> Vec<usize> {
        e.iter().map(|&v| self.apply(v)).collect()
    }

    pub fn invert(&self, v: usize) -> usize {
        self.forward.iter().find(|&(_, &w)| w == v).map_or(v, |(&k, _)| k)
    }

    pub fn invert_tuple(&self, e: &[usize]) -> Vec<usize> {
        e.iter().map(|&v| self.invert(v)).collect()
    }
}

/// Map each distinct value above `n`, largest first, to the smallest value
/// of `[n]` not present in `e`.
///
/// The map depends only on which values occur, so every tuple with the same
/// content gets the same relabelling.
pub fn relabel_for_values(present: &[usize], n: usize) -> Relabel {
    let mut large: Vec<usize> = present.iter().copied().filter(|&v| v > n).collect();
    large.sort_unstable_by(|a, b| b.cmp(a));
    large.dedup();
    let mut unused = (1..=n).filter(|v| !present.contains(v));
    let forward = large.into_iter().map(|v| (v, unused.next().expect("at most n distinct values"))).collect();
    Relabel { forward }
}

/// Relabel the large entries of `e` (see [`relabel_for_values`]).
pub fn relabel_large_entries(e: &[usize], n: usize) -> Result<(Relabel, Vec<usize>)> {
    if e.len() != n {
        return Err(Error::SizeMismatch { left: e.len(), right: n });
    }
    if e.contains(&0) {
        return Err(Error::InvalidArgument("tuple entries must be positive".into()));
    }
    let p = relabel_for_values(e, n);
    let t = p.apply_tuple(e);
    Ok((p, t))
}
