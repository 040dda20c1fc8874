//! Row insertion, the RSK correspondence, tableau products and content swaps.

use serde::{Deserialize, Serialize};

use crate::combinatorics::SemistandardTableau;
use crate::error::{Error, Result};

/// Insert `x` by row bumping. Returns the new tableau and the 1-based
/// `(row, col)` of the cell it created.
pub fn row_insert(t: &SemistandardTableau, x: usize) -> Result<(SemistandardTableau, (usize, usize))> {
    if x < 1 {
        return Err(Error::InvalidArgument("inserted letters must be positive".into()));
    }
    let mut rows = t.rows().to_vec();
    let cell = bump(&mut rows, x);
    Ok((SemistandardTableau::from_rows_unchecked(rows), cell))
}

fn bump(rows: &mut Vec<Vec<usize>>, mut x: usize) -> (usize, usize) {
    for (r, row) in rows.iter_mut().enumerate() {
        // smallest entry strictly greater than x
        match row.iter().position(|&y| y > x) {
            Some(c) => x = std::mem::replace(&mut row[c], x),
            None => {
                row.push(x);
                return (r + 1, row.len());
            }
        }
    }
    rows.push(vec![x]);
    (rows.len(), 1)
}

/// Insert a word letter by letter into the empty tableau.
pub fn insert_word(word: &[usize]) -> SemistandardTableau {
    let mut rows = Vec::new();
    for &x in word {
        bump(&mut rows, x);
    }
    SemistandardTableau::from_rows_unchecked(rows)
}

/// Two-line array `(u, v)` with `u` weakly increasing and `v` weakly
/// increasing inside each run of equal `u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Biword {
    u: Vec<usize>,
    v: Vec<usize>,
}

impl Biword {
    pub fn new(u: Vec<usize>, v: Vec<usize>) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::InvalidBiword(format!("lengths {} and {} differ", u.len(), v.len())));
        }
        if u.iter().chain(&v).any(|&x| x == 0) {
            return Err(Error::InvalidBiword("letters must be positive".into()));
        }
        for k in 1..u.len() {
            if u[k - 1] > u[k] || (u[k - 1] == u[k] && v[k - 1] > v[k]) {
                return Err(Error::InvalidBiword(format!("not ordered at position {k}")));
            }
        }
        Ok(Biword { u, v })
    }

    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }
}

/// RSK: `P` collects the row insertions of `v`, `Q` records where each new
/// cell appeared, labelled by `u`.
pub fn rsk(w: &Biword) -> (SemistandardTableau, SemistandardTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (&a, &b) in w.u.iter().zip(&w.v) {
        let (r, _) = bump(&mut p, b);
        if q.len() < r {
            q.push(Vec::new());
        }
        q[r - 1].push(a);
    }
    (SemistandardTableau::from_rows_unchecked(p), SemistandardTableau::from_rows_unchecked(q))
}

/// `S · T`: row-insert the entries of `T` into `S`, bottom row first, each row
/// left to right.
pub fn tableau_product(s: &SemistandardTableau, t: &SemistandardTableau) -> SemistandardTableau {
    let mut rows = s.rows().to_vec();
    for x in t.row_word() {
        bump(&mut rows, x);
    }
    SemistandardTableau::from_rows_unchecked(rows)
}

/// The three pieces behind a content swap of `k` and `k+1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapFactors {
    /// Entries `< k`; a straight-shape tableau.
    pub a: SemistandardTableau,
    /// Rectification of the entries in `{k, k+1}`.
    pub b: SemistandardTableau,
    /// Rectification of the entries `> k+1`.
    pub c: SemistandardTableau,
    /// Overhang of `b`: `s` copies of `k` and `t` copies of `k+1` in the
    /// first row past the end of the second row.
    pub overhang: (usize, usize),
}

/// Split `u` into the `A`, `B`, `C` pieces by entry range.
pub fn swap_factors(u: &SemistandardTableau, k: usize) -> SwapFactors {
    let word = u.row_word();
    let a_rows: Vec<Vec<usize>> = u
        .rows()
        .iter()
        .map(|r| r.iter().copied().filter(|&v| v < k).collect::<Vec<_>>())
        .filter(|r| !r.is_empty())
        .collect();
    let a = SemistandardTableau::from_rows_unchecked(a_rows);
    let b = insert_word(&word.iter().copied().filter(|&v| v == k || v == k + 1).collect::<Vec<_>>());
    let c = insert_word(&word.iter().copied().filter(|&v| v > k + 1).collect::<Vec<_>>());
    let first = b.rows().first().map_or(&[][..], Vec::as_slice);
    let second_len = b.rows().get(1).map_or(0, Vec::len);
    let ks = first.iter().filter(|&&v| v == k).count();
    let ls = first.len() - ks;
    SwapFactors { a, b, c, overhang: (ks - second_len, ls) }
}

/// Two-row tableau in letters `k < k+1` with the given overhang.
fn two_letter_tableau(k: usize, paired: usize, s: usize, t: usize) -> SemistandardTableau {
    let mut first = vec![k; paired + s];
    first.extend(std::iter::repeat_n(k + 1, t));
    let mut rows = vec![first];
    if paired > 0 {
        rows.push(vec![k + 1; paired]);
    }
    rows.retain(|r| !r.is_empty());
    SemistandardTableau::from_rows_unchecked(rows)
}

/// Exchange the number of `k`s and `k+1`s while keeping the shape.
///
/// The `{k, k+1}` letters of the row word are paired like brackets (`k+1`
/// opens, `k` closes). The paired letters make up the second row of `B` and
/// the unpaired ones `k^s (k+1)^t` are its overhang. Those unpaired letters
/// are rewritten as `k^t (k+1)^s`, which turns `B` into `B′`. The result is
/// then recomposed row by row through [`tableau_product`].
pub fn swap_content(u: &SemistandardTableau, k: usize) -> Result<SemistandardTableau> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let factors = swap_factors(u, k);
    let (s, t) = factors.overhang;

    // Bracket pairing over the reading word, tracked per cell.
    let cells: Vec<(usize, usize)> = u
        .rows()
        .iter()
        .enumerate()
        .rev()
        .flat_map(|(r, row)| (0..row.len()).map(move |c| (r, c)))
        .collect();
    let mut open: Vec<usize> = Vec::new();
    let mut paired = vec![false; cells.len()];
    for (i, &(r, c)) in cells.iter().enumerate() {
        let v = u.rows()[r][c];
        if v == k + 1 {
            open.push(i);
        } else if v == k {
            if let Some(j) = open.pop() {
                paired[i] = true;
                paired[j] = true;
            }
        }
    }
    let free: Vec<usize> = (0..cells.len())
        .filter(|&i| !paired[i] && {
            let (r, c) = cells[i];
            let v = u.rows()[r][c];
            v == k || v == k + 1
        })
        .collect();
    debug_assert_eq!(free.len(), s + t);

    let mut rows = u.rows().to_vec();
    for (n, &i) in free.iter().enumerate() {
        let (r, c) = cells[i];
        rows[r][c] = if n < t { k } else { k + 1 };
    }

    // Recompose from the bottom row up.
    let mut out = SemistandardTableau::empty();
    for row in rows.iter().rev() {
        out = tableau_product(&out, &SemistandardTableau::from_rows_unchecked(vec![row.clone()]));
    }

    let paired_len = factors.b.rows().get(1).map_or(0, Vec::len);
    let expected_b = two_letter_tableau(k, paired_len, t, s);
    let b_prime = insert_word(&out.row_word().into_iter().filter(|&v| v == k || v == k + 1).collect::<Vec<_>>());
    if out.shape() != u.shape() || b_prime != expected_b {
        return Err(Error::InvalidTableau(format!("content swap of {u} at k={k} did not preserve its shape")));
    }
    Ok(out)
}
