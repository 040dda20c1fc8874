use serde::{Deserialize, Serialize};
use std::fmt;

use super::partition::{Composition, Partition};
use super::tableau::SemistandardTableau;
use crate::error::{Error, Result};

/// Gelfand-Tsetlin pattern, stored top-down: `rows[0]` is `(m_{1,d}, …, m_{d,d})`
/// and `rows[d-1]` is `(m_{1,1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct GtPattern {
    rows: Vec<Vec<usize>>,
}

impl GtPattern {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let d = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != d - i {
                return Err(Error::InvalidPattern(format!("row {i} has length {}, expected {}", row.len(), d - i)));
            }
        }
        let m = GtPattern { rows };
        for l in 2..=d {
            for k in 1..l {
                let (upper, mid, lower) = (m.entry(k, l), m.entry(k, l - 1), m.entry(k + 1, l));
                if !(upper >= mid && mid >= lower) {
                    return Err(Error::InvalidPattern(format!(
                        "in-betweenness fails at k={k}, l={l}: {upper} ≥ {mid} ≥ {lower}"
                    )));
                }
            }
        }
        Ok(m)
    }

    pub fn d(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `m_{k,l}`, 1-based; zero when `k > l` or `l = 0`.
    pub fn entry(&self, k: usize, l: usize) -> usize {
        if l == 0 || k == 0 || k > l || l > self.d() {
            0
        } else {
            self.rows[self.d() - l][k - 1]
        }
    }

    pub fn row_sum(&self, l: usize) -> usize {
        (1..=l).map(|k| self.entry(k, l)).sum()
    }

    /// Top row as a partition.
    pub fn shape(&self) -> Partition {
        Partition::from_row_lengths(self.rows.first().cloned().unwrap_or_default()).expect("top row is weakly decreasing")
    }

    /// Weight: `w_l = Σ_k m_{k,l} − Σ_k m_{k,l−1}`.
    pub fn weight(&self) -> Composition {
        Composition::new((1..=self.d()).map(|l| self.row_sum(l) - self.row_sum(l - 1)).collect())
    }

    /// Pattern with `m_{k,l}` shifted by `delta`; `None` if the result is invalid.
    pub fn shifted(&self, k: usize, l: usize, delta: i64) -> Option<GtPattern> {
        if k == 0 || k > l || l >= self.d() {
            return None;
        }
        let mut rows = self.rows.clone();
        let cell = &mut rows[self.d() - l][k - 1];
        let v = *cell as i64 + delta;
        if v < 0 {
            return None;
        }
        *cell = v as usize;
        GtPattern::new(rows).ok()
    }
}

impl TryFrom<Vec<Vec<usize>>> for GtPattern {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        GtPattern::new(rows)
    }
}

impl From<GtPattern> for Vec<Vec<usize>> {
    fn from(m: GtPattern) -> Self {
        m.rows
    }
}

impl fmt::Display for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serde_json::to_string(&self.rows).map_err(|_| fmt::Error)?)
    }
}

/// `m_{k,l}` counts the cells of row `k` holding values `≤ l`.
pub fn ssyt_to_gt(t: &SemistandardTableau, d: usize) -> Result<GtPattern> {
    if t.max_entry() > d {
        return Err(Error::OutOfRange { value: t.max_entry(), max: d });
    }
    if t.rows().len() > d {
        return Err(Error::InvalidPattern(format!("shape {} has more than {d} rows", t.shape())));
    }
    let rows = (1..=d)
        .rev()
        .map(|l| (0..l).map(|k| t.rows().get(k).map_or(0, |row| row.iter().filter(|&&v| v <= l).count())).collect())
        .collect();
    GtPattern::new(rows)
}

/// Row `k` receives `m_{k,l} − m_{k,l−1}` cells labelled `l`, for `l = 1..=d`.
pub fn gt_to_ssyt(m: &GtPattern) -> SemistandardTableau {
    let d = m.d();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); d];
    for l in 1..=d {
        for k in 1..=l {
            let added = m.entry(k, l) - m.entry(k, l - 1);
            rows[k - 1].extend(std::iter::repeat_n(l, added));
        }
    }
    while rows.last().is_some_and(Vec::is_empty) {
        rows.pop();
    }
    SemistandardTableau::from_rows_unchecked(rows)
}

/// Every pattern with top row `λ` (padded to length `d`).
pub fn enumerate_gt(lambda: &Partition, d: usize) -> Vec<GtPattern> {
    super::tableau::enumerate_ssyt_bounded(lambda, d)
        .iter()
        .map(|t| ssyt_to_gt(t, d).expect("bounded tableau converts"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn converts_the_worked_tableau() {
        let t = SemistandardTableau::new(vec![vec![1, 1, 2], vec![2, 3, 3], vec![3]]).unwrap();
        let m = ssyt_to_gt(&t, 3).unwrap();
        assert_eq!(m.rows(), &[vec![3, 3, 1], vec![3, 1], vec![2]]);
        assert_eq!(m.weight().counts(), &[2, 2, 3]);
        assert_eq!(gt_to_ssyt(&m), t);
    }

    #[test]
    fn single_box() {
        let t = SemistandardTableau::new(vec![vec![1]]).unwrap();
        let m = ssyt_to_gt(&t, 1).unwrap();
        assert_eq!(m.rows(), &[vec![1]]);
        assert_eq!(gt_to_ssyt(&m), t);
    }

    #[test]
    fn rejects_in_betweenness_violation() {
        assert!(GtPattern::new(vec![vec![2, 0], vec![3]]).is_err());
        assert!(GtPattern::new(vec![vec![2, 1], vec![0]]).is_err());
        assert!(GtPattern::new(vec![vec![2, 1], vec![1, 1]]).is_err());
        let t = SemistandardTableau::new(vec![vec![1, 4]]).unwrap();
        assert!(ssyt_to_gt(&t, 3).is_err());
    }
}
