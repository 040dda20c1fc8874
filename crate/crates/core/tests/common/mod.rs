//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;
use schurkit::combinatorics::{enumerate_partitions, factorial, hook_dimension};
use schurkit::linalg::{CMatrix, RMatrix};
use schurkit::symgroup::{irrep_matrix, Permutation, YoungSubgroup};
use schurkit::{Partition, SemistandardTableau};

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Fourier matrix straight from `√(d_λ/n!)·λ(g)_{ij}`.
pub fn direct_qft(n: usize) -> RMatrix {
    let group = Permutation::all(n);
    let size = group.len();
    let mut f = RMatrix::zeros(size, size);
    let mut row = 0;
    for lambda in enumerate_partitions(n, n) {
        let d = hook_dimension(&lambda) as usize;
        let scale = (d as f64 / factorial(n) as f64).sqrt();
        let mats: Vec<RMatrix> = group.iter().map(|g| irrep_matrix(&lambda, g).unwrap()).collect();
        for i in 0..d {
            for j in 0..d {
                for (col, m) in mats.iter().enumerate() {
                    f[(row, col)] = scale * m[(i, j)];
                }
                row += 1;
            }
        }
    }
    f
}

/// Left regular representation on the lexicographic group basis.
pub fn left_regular(g: &Permutation) -> RMatrix {
    let group = Permutation::all(g.degree());
    let mut m = RMatrix::zeros(group.len(), group.len());
    for (c, h) in group.iter().enumerate() {
        m[(g.compose(h).lex_rank(), c)] = 1.0;
    }
    m
}

/// `(1/|Y|) Σ_{h∈Y} λ(h)` by enumerating the subgroup.
pub fn brute_average(lambda: &Partition, y: &YoungSubgroup) -> RMatrix {
    let elems = y.elements();
    let d = hook_dimension(lambda) as usize;
    let mut sum = DMatrix::zeros(d, d);
    for h in &elems {
        sum += irrep_matrix(lambda, h).unwrap();
    }
    sum / elems.len() as f64
}

/// The Bender-Knuth involution: in each row, the free `k`s and `k+1`s
/// (those not stacked in a column with the other letter) are flipped from
/// `k^a (k+1)^b` to `k^b (k+1)^a`.
pub fn bender_knuth(t: &SemistandardTableau, k: usize) -> SemistandardTableau {
    let rows = t.rows();
    let mut out = rows.to_vec();
    for r in 0..rows.len() {
        let free: Vec<usize> = (0..rows[r].len())
            .filter(|&c| {
                let v = rows[r][c];
                if v == k {
                    !(r + 1 < rows.len() && c < rows[r + 1].len() && rows[r + 1][c] == k + 1)
                } else if v == k + 1 {
                    !(r > 0 && rows[r - 1][c] == k)
                } else {
                    false
                }
            })
            .collect();
        let a = free.iter().filter(|&&c| rows[r][c] == k).count();
        let b = free.len() - a;
        for (i, &c) in free.iter().enumerate() {
            out[r][c] = if i < b { k } else { k + 1 };
        }
    }
    SemistandardTableau::new(out).unwrap()
}

pub fn to_c(m: &RMatrix) -> CMatrix {
    m.map(c)
}
