use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{enumerate_gt, index_map, GtPattern, Partition};
use crate::error::{Error, Result};
use crate::linalg::{exp_anti_hermitian, unitarity_residual, unitary_log, CMatrix, RMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GtKind {
    J0,
    Jplus,
    Jminus,
}

/// One of the `sl₂` generators attached to the pair of letters `l, l+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GtOperator {
    pub kind: GtKind,
    pub l: usize,
}

impl GtOperator {
    pub fn new(kind: GtKind, l: usize, d: usize) -> Result<Self> {
        if l == 0 || l >= d {
            return Err(Error::OutOfRange { value: l, max: d.saturating_sub(1) });
        }
        Ok(GtOperator { kind, l })
    }
}

fn signed(m: &GtPattern, k: usize, l: usize) -> i64 {
    m.entry(k, l) as i64
}

/// `⟨M ± δ_{k,l}| J± |M⟩` from the Gelfand-Tsetlin formulas; `raise` picks
/// `J₊`. Zero when the product under the root is not positive.
fn ladder_element(m: &GtPattern, k: usize, l: usize, raise: bool) -> f64 {
    let mkl = signed(m, k, l);
    let k = k as i64;
    let shift = if raise { 0 } else { 1 };
    let mut num = -1.0;
    for kp in 1..=(l as i64 + 1) {
        num *= (signed(m, kp as usize, l + 1) - mkl + k - kp + shift) as f64;
    }
    for kp in 1..=(l as i64 - 1) {
        num *= (signed(m, kp as usize, l - 1) - mkl + k - kp - 1 + shift) as f64;
    }
    let mut den = 1.0;
    for kp in (1..=l as i64).filter(|&kp| kp != k) {
        let base = signed(m, kp as usize, l) - mkl + k - kp + shift;
        den *= (base * (base - 1)) as f64;
    }
    if num <= 0.0 || den == 0.0 {
        0.0
    } else {
        (num / den).sqrt()
    }
}

/// Real matrix of a generator on the Gelfand-Tsetlin basis of `λ` over `[d]`,
/// in [`enumerate_gt`] order.
pub fn gt_generator_real(lambda: &Partition, d: usize, op: GtOperator) -> Result<RMatrix> {
    if lambda.len() > d {
        return Err(Error::InvalidArgument(format!("{lambda} has more than {d} parts")));
    }
    if op.l == 0 || op.l >= d {
        return Err(Error::OutOfRange { value: op.l, max: d.saturating_sub(1) });
    }
    let basis = enumerate_gt(lambda, d);
    let index = index_map(&basis);
    let l = op.l;
    let mut out = RMatrix::zeros(basis.len(), basis.len());
    for (c, m) in basis.iter().enumerate() {
        match op.kind {
            GtKind::J0 => {
                let v = m.row_sum(l) as f64 - 0.5 * (m.row_sum(l + 1) + m.row_sum(l - 1)) as f64;
                out[(c, c)] = v;
            }
            GtKind::Jplus | GtKind::Jminus => {
                let raise = op.kind == GtKind::Jplus;
                for k in 1..=l {
                    let target = m.shifted(k, l, if raise { 1 } else { -1 });
                    if let Some(r) = target.and_then(|t| index.get(&t).copied()) {
                        out[(r, c)] = ladder_element(m, k, l, raise);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Complex form of [`gt_generator_real`].
pub fn gt_generator(lambda: &Partition, d: usize, op: GtOperator) -> Result<CMatrix> {
    Ok(crate::linalg::to_complex(&gt_generator_real(lambda, d, op)?))
}

/// Images `ρ(E^{ab})` of all matrix units, `a, b ∈ [d]`, on the GT basis.
pub fn matrix_units(lambda: &Partition, d: usize) -> Result<Vec<Vec<RMatrix>>> {
    if lambda.len() > d {
        return Err(Error::InvalidArgument(format!("{lambda} has more than {d} parts")));
    }
    let basis = enumerate_gt(lambda, d);
    let dim = basis.len();
    let mut e = vec![vec![RMatrix::zeros(dim, dim); d]; d];
    for (a, row) in e.iter_mut().enumerate() {
        let l = a + 1;
        row[a] = RMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
            dim,
            basis.iter().map(|m| (m.row_sum(l) - m.row_sum(l - 1)) as f64),
        ));
    }
    for l in 1..d {
        e[l - 1][l] = gt_generator_real(lambda, d, GtOperator { kind: GtKind::Jplus, l })?;
        e[l][l - 1] = gt_generator_real(lambda, d, GtOperator { kind: GtKind::Jminus, l })?;
    }
    // E^{ac} = [E^{ab}, E^{bc}] for distinct a, b, c, filled by increasing distance.
    for gap in 2..d {
        for a in 0..d - gap {
            let c = a + gap;
            let b = c - 1;
            e[a][c] = &e[a][b] * &e[b][c] - &e[b][c] * &e[a][b];
            e[c][a] = &e[c][b] * &e[b][a] - &e[b][a] * &e[c][b];
        }
    }
    Ok(e)
}

/// `ρ_λ(u)` on the Gelfand-Tsetlin basis.
///
/// With `u = exp(X)` for the principal logarithm `X`, the image is
/// `exp(Σ X_{ab} ρ(E^{ab}))`.
pub fn unitary_irrep(lambda: &Partition, d: usize, u: &CMatrix) -> Result<CMatrix> {
    if u.nrows() != d || u.ncols() != d {
        return Err(Error::SizeMismatch { left: u.nrows(), right: d });
    }
    let residual = unitarity_residual(u);
    if residual > 1e-9 {
        return Err(Error::NotUnitary(residual));
    }
    let units = matrix_units(lambda, d)?;
    let dim = units.first().map_or(1, |r| r[0].nrows());
    let x = unitary_log(u);
    let mut generator = CMatrix::zeros(dim, dim);
    for a in 0..d {
        for b in 0..d {
            if x[(a, b)] != Complex64::new(0.0, 0.0) {
                generator += units[a][b].map(|v| x[(a, b)] * v);
            }
        }
    }
    Ok(exp_anti_hermitian(&generator))
}
