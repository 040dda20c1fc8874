use serde::{Deserialize, Serialize};

use super::partition::Partition;
use super::tableau::{SemistandardTableau, StandardTableau};
use crate::error::{Error, Result};

/// Skew shape `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewStrip {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewStrip {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidArgument(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewStrip { outer, inner })
    }

    /// Cells `(row, col)`, 0-based.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.outer.len())
            .flat_map(|r| (self.inner.part(r)..self.outer.part(r)).map(move |c| (r, c)))
            .collect()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

/// At most one cell per column.
pub fn is_horizontal_strip(s: &SkewStrip) -> bool {
    (0..s.outer.len()).all(|r| s.inner.part(r) >= s.outer.part(r + 1))
}

/// The skew shape occupied by `value` in a semistandard tableau.
pub fn horizontal_strip_positions(t: &SemistandardTableau, value: usize) -> SkewStrip {
    let count = |bound: usize| {
        Partition::from_row_lengths(t.rows().iter().map(|r| r.iter().filter(|&&v| v <= bound).count()).collect())
            .expect("prefix of a semistandard tableau is a partition")
    };
    SkewStrip { outer: count(value), inner: count(value.saturating_sub(1)) }
}

/// The skew shape occupied by the entries `lo..=hi` of a standard tableau.
pub fn interval_strip(t: &StandardTableau, lo: usize, hi: usize) -> SkewStrip {
    let count = |bound: usize| {
        Partition::from_row_lengths(t.rows().iter().map(|r| r.iter().filter(|&&v| v <= bound).count()).collect())
            .expect("prefix of a standard tableau is a partition")
    };
    SkewStrip { outer: count(hi), inner: count(lo.saturating_sub(1)) }
}

/// Every `μ ⊆ λ` with `λ/μ` a horizontal strip, descending lexicographic.
pub fn strip_removals(lambda: &Partition) -> Vec<Partition> {
    let parts = lambda.parts();
    let mut out = Vec::new();
    let mut cur = vec![0; parts.len()];
    fn rec(i: usize, parts: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == parts.len() {
            out.push(Partition::from_row_lengths(cur.clone()).expect("interlacing rows are weakly decreasing"));
            return;
        }
        let lo = parts.get(i + 1).copied().unwrap_or(0);
        for m in (lo..=parts[i]).rev() {
            cur[i] = m;
            rec(i + 1, parts, cur, out);
        }
    }
    rec(0, parts, &mut cur, &mut out);
    out
}
