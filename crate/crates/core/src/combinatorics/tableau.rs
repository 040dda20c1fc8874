use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

use super::partition::{Composition, Partition};
use super::strip::strip_removals;
use crate::error::{Error, Result};

fn shape_of(rows: &[Vec<usize>]) -> Result<Partition> {
    Partition::new(rows.iter().map(Vec::len).collect())
        .map_err(|_| Error::InvalidTableau(format!("rows {rows:?} do not form a Young diagram")))
}

fn write_rows(f: &mut fmt::Formatter<'_>, rows: &[Vec<usize>]) -> fmt::Result {
    write!(f, "[")?;
    for (i, row) in rows.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "[")?;
        for (j, v) in row.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")?;
    }
    write!(f, "]")
}

/// Filling of a Young diagram by `1..=n`, increasing along rows and columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = shape_of(&rows)?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for &v in rows.iter().flatten() {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidTableau(format!("{rows:?} is not a filling by 1..={n}")));
            }
            seen[v] = true;
        }
        let t = StandardTableau { rows };
        if !t.strictly_increasing() {
            return Err(Error::InvalidTableau(format!("{:?} is not standard", t.rows)));
        }
        Ok(t)
    }

    fn strictly_increasing(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below));
        rows_ok && cols_ok
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("validated shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Position `(row, col)`, 0-based, of entry `v`.
    pub fn position(&self, v: usize) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(r, row)| row.iter().position(|&x| x == v).map(|c| (r, c)))
    }

    /// Content `col − row` of the cell holding `v`.
    pub fn content_of(&self, v: usize) -> i64 {
        let (r, c) = self.position(v).expect("entry present");
        c as i64 - r as i64
    }

    /// Exchange `k` and `k+1`; `None` when the result is not standard.
    pub fn swap_adjacent(&self, k: usize) -> Option<StandardTableau> {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| if v == k { k + 1 } else if v == k + 1 { k } else { v })
                    .collect()
            })
            .collect();
        let t = StandardTableau { rows };
        t.strictly_increasing().then_some(t)
    }

    /// Remove the cell holding the largest entry.
    pub fn without_max(&self) -> StandardTableau {
        let n = self.size();
        let mut rows = self.rows.clone();
        for row in rows.iter_mut() {
            if row.last() == Some(&n) {
                row.pop();
            }
        }
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        StandardTableau { rows }
    }

    pub fn to_semistandard(&self) -> SemistandardTableau {
        SemistandardTableau { rows: self.rows.clone() }
    }
}

impl TryFrom<Vec<Vec<usize>>> for StandardTableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        StandardTableau::new(rows)
    }
}

impl From<StandardTableau> for Vec<Vec<usize>> {
    fn from(t: StandardTableau) -> Self {
        t.rows
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

/// Filling with positive integers, weakly increasing along rows and strictly down columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct SemistandardTableau {
    rows: Vec<Vec<usize>>,
}

impl SemistandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let mut rows = rows;
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        shape_of(&rows)?;
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        let t = SemistandardTableau { rows };
        if !t.is_semistandard() {
            return Err(Error::InvalidTableau(format!("{:?} is not semistandard", t.rows)));
        }
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        SemistandardTableau { rows }
    }

    pub fn empty() -> Self {
        SemistandardTableau { rows: Vec::new() }
    }

    fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below));
        rows_ok && cols_ok
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("validated shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Counts of `1..=d`; entries above `d` are an error.
    pub fn content(&self, d: usize) -> Result<Composition> {
        let word: Vec<usize> = self.rows.iter().flatten().copied().collect();
        Composition::of_tuple(&word, d)
    }

    /// Rows top to bottom, each left to right. Defines the enumeration order.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Rows bottom to top, each left to right; inserting this word into the
    /// empty tableau reproduces the tableau.
    pub fn row_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Cells holding values in `range`, as `(row, col, value)`.
    pub fn cells_with(&self, range: std::ops::RangeInclusive<usize>) -> Vec<(usize, usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (r, c, v)))
            .filter(|(_, _, v)| range.contains(v))
            .collect()
    }

    /// Replace each value by its image under `f`; the result is validated.
    pub fn map_values(&self, f: impl Fn(usize) -> usize) -> Result<SemistandardTableau> {
        SemistandardTableau::new(self.rows.iter().map(|r| r.iter().map(|&v| f(v)).collect()).collect())
    }

    /// Standardization: the cells of each value receive consecutive integers
    /// from left to right.
    pub fn standardize(&self) -> StandardTableau {
        let mut cells: Vec<(usize, usize, usize)> = self.cells_with(1..=usize::MAX);
        cells.sort_by_key(|&(r, c, v)| (v, c, r));
        let mut rows: Vec<Vec<usize>> = self.rows.iter().map(|r| vec![0; r.len()]).collect();
        for (i, (r, c, _)) in cells.into_iter().enumerate() {
            rows[r][c] = i + 1;
        }
        StandardTableau::new(rows).expect("standardization of a semistandard tableau is standard")
    }
}

impl TryFrom<Vec<Vec<usize>>> for SemistandardTableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        SemistandardTableau::new(rows)
    }
}

impl From<SemistandardTableau> for Vec<Vec<usize>> {
    fn from(t: SemistandardTableau) -> Self {
        t.rows
    }
}

impl fmt::Display for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

/// Standard tableaux of shape `λ` in last-letter order: grouped by the row
/// holding `n` (top row first), recursively on the remaining entries.
pub fn enumerate_syt(lambda: &Partition) -> Vec<StandardTableau> {
    let n = lambda.size();
    if n == 0 {
        return vec![StandardTableau { rows: Vec::new() }];
    }
    let mut out = Vec::new();
    for r in lambda.removable_rows() {
        let mu = lambda.remove_cell(r).expect("removable row");
        for t in enumerate_syt(&mu) {
            let mut rows = t.rows;
            if r < rows.len() {
                rows[r].push(n);
            } else {
                rows.push(vec![n]);
            }
            out.push(StandardTableau { rows });
        }
    }
    out
}

/// Index of each tableau in `tableaux`.
pub fn index_map<T: Clone + Eq + std::hash::Hash>(tableaux: &[T]) -> HashMap<T, usize> {
    tableaux.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect()
}

fn append_strip(inner: &SemistandardTableau, outer: &Partition, value: usize) -> SemistandardTableau {
    let mut rows = inner.rows.clone();
    rows.resize(outer.len(), Vec::new());
    for (r, row) in rows.iter_mut().enumerate() {
        row.resize(outer.part(r), value);
    }
    SemistandardTableau { rows }
}

fn sort_by_reading_word(v: &mut [SemistandardTableau]) {
    v.sort_by_cached_key(SemistandardTableau::reading_word);
}

/// Semistandard tableaux of shape `λ` with exact content, sorted by reading word.
pub fn enumerate_ssyt(lambda: &Partition, content: &Composition) -> Vec<SemistandardTableau> {
    if lambda.size() != content.size() {
        return Vec::new();
    }
    fn rec(shape: &Partition, content: &[usize]) -> Vec<SemistandardTableau> {
        let Some((&last, rest)) = content.split_last() else {
            return if shape.is_empty() { vec![SemistandardTableau::empty()] } else { Vec::new() };
        };
        let value = content.len();
        let mut out = Vec::new();
        for mu in strip_removals(shape) {
            if shape.size() - mu.size() != last || mu.len() > rest.len() {
                continue;
            }
            for inner in rec(&mu, rest) {
                out.push(append_strip(&inner, shape, value));
            }
        }
        out
    }
    let mut out = rec(lambda, content.counts());
    sort_by_reading_word(&mut out);
    out
}

/// All semistandard tableaux of shape `λ` with entries in `1..=d`, sorted by reading word.
/// These label the Gelfand-Tsetlin basis of the `U(d)` irrep `λ`.
pub fn enumerate_ssyt_bounded(lambda: &Partition, d: usize) -> Vec<SemistandardTableau> {
    fn rec(shape: &Partition, d: usize) -> Vec<SemistandardTableau> {
        if shape.len() > d {
            return Vec::new();
        }
        if d == 0 {
            return vec![SemistandardTableau::empty()];
        }
        let mut out = Vec::new();
        for mu in strip_removals(shape) {
            for inner in rec(&mu, d - 1) {
                out.push(append_strip(&inner, shape, d));
            }
        }
        out
    }
    let mut out = rec(lambda, d);
    sort_by_reading_word(&mut out);
    out
}

/// Number of semistandard tableaux of shape `λ` over `[d]`.
pub fn unitary_dimension(lambda: &Partition, d: usize) -> u128 {
    fn rec(shape: &Partition, d: usize, memo: &mut HashMap<(Partition, usize), u128>) -> u128 {
        if shape.len() > d {
            return 0;
        }
        if d == 0 || shape.is_empty() {
            return 1;
        }
        if let Some(&v) = memo.get(&(shape.clone(), d)) {
            return v;
        }
        let total = strip_removals(shape).iter().map(|mu| rec(mu, d - 1, memo)).sum();
        memo.insert((shape.clone(), d), total);
        total
    }
    rec(lambda, d, &mut HashMap::new())
}

/// Kostka number `K_{λμ}`.
pub fn kostka(lambda: &Partition, content: &Composition) -> usize {
    enumerate_ssyt(lambda, content).len()
}
