use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// Integer partition with weakly decreasing positive parts.
///
/// Serialized as its part list, e.g. `[3,3,1]`. The empty partition is the
/// unique partition of zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    /// Drops trailing zeros, then validates.
    pub fn from_row_lengths(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Self::new(rows)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Single row `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// Single column `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `n = Σ parts`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `i` (0-based), zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((0..width).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
    }

    /// Cellwise containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().enumerate().all(|(i, &p)| p <= self.0[i])
    }

    /// Rows whose last cell can be removed leaving a partition.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.len()).filter(|&r| self.part(r) > self.part(r + 1)).collect()
    }

    /// Rows where a cell can be appended leaving a partition (including a new row).
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.len()).filter(|&r| r == 0 || self.part(r - 1) > self.part(r)).collect()
    }

    pub fn remove_cell(&self, row: usize) -> Result<Partition> {
        let mut rows = self.0.clone();
        match rows.get_mut(row) {
            Some(p) if *p > 0 => *p -= 1,
            _ => return Err(Error::InvalidPartition(self.0.clone())),
        }
        Partition::from_row_lengths(rows)
    }

    pub fn add_cell(&self, row: usize) -> Result<Partition> {
        let mut rows = self.0.clone();
        if row == rows.len() {
            rows.push(1);
        } else if row < rows.len() {
            rows[row] += 1;
        } else {
            return Err(Error::InvalidPartition(self.0.clone()));
        }
        Partition::new(rows)
    }

    /// Cells `(row, col)`, 0-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// Hook length of cell `(r, c)`: arm + leg + 1.
    pub fn hook(&self, r: usize, c: usize) -> usize {
        let arm = self.part(r) - c - 1;
        let leg = self.0.iter().skip(r + 1).filter(|&&p| p > c).count();
        arm + leg + 1
    }

    /// Descending lexicographic order key comparison: `self` precedes `other`.
    pub fn precedes(&self, other: &Partition) -> bool {
        self.0 > other.0
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Multiplicity vector of values `1..=len`; zero entries are kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(counts: Vec<usize>) -> Self {
        Composition(counts)
    }

    /// Counts of each value `1..=d` in `tuple`. Values outside the range are an error.
    pub fn of_tuple(tuple: &[usize], d: usize) -> Result<Self> {
        let mut counts = vec![0; d];
        for &v in tuple {
            if v == 0 || v > d {
                return Err(Error::OutOfRange { value: v, max: d });
            }
            counts[v - 1] += 1;
        }
        Ok(Composition(counts))
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Count of value `v` (1-based), zero past the end.
    pub fn count(&self, v: usize) -> usize {
        if v == 0 {
            0
        } else {
            self.0.get(v - 1).copied().unwrap_or(0)
        }
    }

    /// Prefix sums `σ_l = μ_1 + … + μ_l` for `l = 0..=len`.
    pub fn prefix_sums(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.0.len() + 1);
        out.push(0);
        let mut acc = 0;
        for &c in &self.0 {
            acc += c;
            out.push(acc);
        }
        out
    }

    /// Nonzero counts sorted in decreasing order.
    pub fn sorted_partition(&self) -> Partition {
        let mut parts: Vec<usize> = self.0.iter().copied().filter(|&c| c > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Nonzero counts in their original order.
    pub fn compressed(&self) -> Composition {
        Composition(self.0.iter().copied().filter(|&c| c > 0).collect())
    }

    /// Values `v` with nonzero count, ascending.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.0.len()).filter(|&v| self.0[v - 1] > 0).collect()
    }

    /// Exchange the counts of `k` and `k+1`.
    pub fn swapped(&self, k: usize) -> Composition {
        let mut c = self.0.clone();
        let len = c.len().max(k + 1);
        c.resize(len, 0);
        c.swap(k - 1, k);
        Composition(c)
    }

    /// Pad with zeros to `len` entries.
    pub fn padded(&self, len: usize) -> Composition {
        let mut c = self.0.clone();
        if c.len() < len {
            c.resize(len, 0);
        }
        Composition(c)
    }

    /// The sorted tuple `E₀ = (1^{t₁}, 2^{t₂}, …)`.
    pub fn sorted_tuple(&self) -> Vec<usize> {
        self.0.iter().enumerate().flat_map(|(i, &c)| std::iter::repeat_n(i + 1, c)).collect()
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition(p.0)
    }
}

/// All partitions of `n` with at most `max_parts` parts, descending lexicographic.
pub fn enumerate_partitions(n: usize, max_parts: usize) -> Vec<Partition> {
    fn rec(rem: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for k in (1..=rem.min(cap)).rev() {
            cur.push(k);
            rec(rem - k, k, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, max_parts, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `n` into exactly `len` non-negative parts, lexicographically descending.
pub fn enumerate_compositions(n: usize, len: usize) -> Vec<Composition> {
    fn rec(rem: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if slots == 1 {
            cur.push(rem);
            out.push(Composition(cur.clone()));
            cur.pop();
            return;
        }
        for k in (0..=rem).rev() {
            cur.push(k);
            rec(rem - k, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        if n == 0 {
            out.push(Composition(Vec::new()));
        }
        return out;
    }
    rec(n, len, &mut Vec::new(), &mut out);
    out
}

/// Dimension of the symmetric-group irrep: `n! / ∏ hooks`.
pub fn hook_dimension(lambda: &Partition) -> u128 {
    let n = lambda.size() as u128;
    let mut num: u128 = (1..=n).product();
    let mut den: u128 = 1;
    for (r, c) in lambda.cells() {
        den *= lambda.hook(r, c) as u128;
        // Keep the intermediate values small.
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Dominance order `λ ⊵ μ`; sizes must agree.
pub fn dominates(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { left: lambda.size(), right: mu.size() });
    }
    let len = lambda.len().max(mu.len());
    let (mut a, mut b) = (0, 0);
    for k in 0..len {
        a += lambda.part(k);
        b += mu.part(k);
        if a < b {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumerates_small_partitions() {
        assert_eq!(enumerate_partitions(3, 3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(enumerate_partitions(3, 2), vec![p(&[3]), p(&[2, 1])]);
        assert_eq!(enumerate_partitions(0, 1), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(7, 7).len(), 15);
    }

    #[test]
    fn rejects_malformed_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_row_lengths(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn hook_formula() {
        assert_eq!(hook_dimension(&p(&[2, 1])), 2);
        assert_eq!(hook_dimension(&p(&[5])), 1);
        assert_eq!(hook_dimension(&p(&[3, 3, 1])), 21);
        assert_eq!(hook_dimension(&p(&[2, 2])), 2);
        assert_eq!(hook_dimension(&Partition::empty()), 1);
    }

    #[test]
    fn dominance() {
        assert!(dominates(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap());
        assert!(dominates(&p(&[2, 2]), &p(&[2, 2])).unwrap());
        assert!(!dominates(&p(&[2, 2]), &p(&[3, 1])).unwrap());
        assert!(dominates(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn composition_accessors() {
        let c = Composition::new(vec![1, 1, 1, 0, 2]);
        assert_eq!(c.sorted_partition(), p(&[2, 1, 1, 1]));
        assert_eq!(c.prefix_sums(), vec![0, 1, 2, 3, 3, 5]);
        assert_eq!(c.sorted_tuple(), vec![1, 2, 3, 5, 5]);
        assert_eq!(c.support(), vec![1, 2, 3, 5]);
        assert_eq!(c.swapped(4).counts(), &[1, 1, 1, 2, 0]);
        assert_eq!(enumerate_compositions(5, 5).len(), 126);
    }

    #[test]
    fn conjugate_and_serialization() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(serde_json::to_string(&p(&[3, 3, 1])).unwrap(), "[3,3,1]");
        let back: Partition = serde_json::from_str("[2,1]").unwrap();
        assert_eq!(back, p(&[2, 1]));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
