//! Named verification suites producing residual reports.

use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::combinatorics::{
    dominates, enumerate_compositions, enumerate_partitions, enumerate_syt, factorial, hook_dimension, kostka,
    unitary_dimension,
};
use crate::error::{Error, Result};
use crate::fourier::{qft_permmod, qft_sn_real, Gpe, PermModule};
use crate::linalg::{haar_unitary, max_abs_real, orthogonality_residual, CVector, RMatrix};
use crate::schur::{
    gt_generator_real, verify_gt_basis, verify_schur_weyl_perm, verify_schur_weyl_unitary, verify_weights, DualSchur,
    GtKind, GtOperator, DEFAULT_BUDGET,
};
use crate::symgroup::{tuple_to_coset, Permutation, YoungIrrep, YoungSubgroup};

/// Parameters shared by every suite.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub n: usize,
    pub d: usize,
    pub tolerance: f64,
    pub seed: u64,
    /// Largest `dⁿ` for which dense transforms are built.
    pub memory_budget: u128,
    pub output_path: Option<std::path::PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { n: 3, d: 2, tolerance: 1e-9, seed: 0, memory_budget: DEFAULT_BUDGET, output_path: None }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.d == 0 {
            return Err(Error::InvalidArgument("n and d must be at least 1".into()));
        }
        if !(self.tolerance > 0.0) {
            return Err(Error::InvalidArgument(format!("tolerance must be positive, got {}", self.tolerance)));
        }
        Ok(())
    }
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub params: Value,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckRecord {
    fn new(check: &str, params: Value, residual: f64, tolerance: f64) -> Self {
        CheckRecord { check: check.into(), params, residual, tolerance, pass: residual < tolerance }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Dims,
    Coxeter,
    Permmod,
    SchurWeyl,
    GtBasis,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "dims" => Suite::Dims,
            "coxeter" => Suite::Coxeter,
            "permmod" => Suite::Permmod,
            "schur-weyl" => Suite::SchurWeyl,
            "gt-basis" => Suite::GtBasis,
            "all" => Suite::All,
            other => return Err(Error::InvalidArgument(format!("unknown suite {other}"))),
        })
    }
}

/// Run a suite. Checks that would need more than the memory budget are
/// reported as errors rather than skipped.
pub fn run(suite: Suite, cfg: &RunConfig) -> Result<Vec<CheckRecord>> {
    cfg.validate()?;
    match suite {
        Suite::Dims => Ok(dims(cfg)),
        Suite::Coxeter => Ok(coxeter(cfg)),
        Suite::Permmod => permmod(cfg),
        Suite::SchurWeyl => schur_weyl(cfg),
        Suite::GtBasis => gt_basis(cfg),
        Suite::All => {
            let mut out = dims(cfg);
            out.extend(coxeter(cfg));
            out.extend(permmod(cfg)?);
            out.extend(schur_weyl(cfg)?);
            out.extend(gt_basis(cfg)?);
            Ok(out)
        }
    }
}

fn dims(cfg: &RunConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for m in 0..=cfg.n {
        let parts = enumerate_partitions(m, m.max(1));
        let regular: u128 = parts.iter().map(|l| hook_dimension(l).pow(2)).sum();
        out.push(CheckRecord::new(
            "sum_of_squared_dimensions",
            json!({ "n": m }),
            regular.abs_diff(factorial(m)) as f64,
            cfg.tolerance,
        ));
        let syt = parts.iter().map(|l| (enumerate_syt(l).len() as u128).abs_diff(hook_dimension(l))).sum::<u128>();
        out.push(CheckRecord::new("standard_tableaux_count", json!({ "n": m }), syt as f64, cfg.tolerance));
        let schur_weyl: u128 =
            enumerate_partitions(m, cfg.d).iter().map(|l| hook_dimension(l) * unitary_dimension(l, cfg.d)).sum();
        out.push(CheckRecord::new(
            "schur_weyl_dimension",
            json!({ "n": m, "d": cfg.d }),
            schur_weyl.abs_diff((cfg.d as u128).pow(m as u32)) as f64,
            cfg.tolerance,
        ));
    }
    out
}

fn coxeter(cfg: &RunConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for lambda in enumerate_partitions(cfg.n, cfg.n) {
        let irrep = YoungIrrep::new(&lambda);
        let n = cfg.n;
        let m: Vec<RMatrix> = (1..n).map(|k| irrep.transposition(k).expect("k < n")).collect();
        let id = RMatrix::identity(irrep.dim(), irrep.dim());
        let mut worst: f64 = 0.0;
        for k in 0..m.len() {
            worst = worst.max(max_abs_real(&(&m[k] * &m[k] - &id)));
            worst = worst.max(orthogonality_residual(&m[k]));
            if k + 1 < m.len() {
                worst = worst.max(max_abs_real(&(&m[k] * &m[k + 1] * &m[k] - &m[k + 1] * &m[k] * &m[k + 1])));
            }
            for j in k + 2..m.len() {
                worst = worst.max(max_abs_real(&(&m[k] * &m[j] - &m[j] * &m[k])));
            }
        }
        out.push(CheckRecord::new("coxeter_relations", json!({ "lambda": lambda }), worst, cfg.tolerance));
    }
    out
}

fn budget_check(required: u128, cfg: &RunConfig) -> Result<()> {
    if required > cfg.memory_budget {
        return Err(Error::BudgetExceeded { required, budget: cfg.memory_budget });
    }
    Ok(())
}

fn permmod(cfg: &RunConfig) -> Result<Vec<CheckRecord>> {
    let n = cfg.n;
    budget_check(factorial(n), cfg)?;
    let mut out = Vec::new();
    let f = qft_sn_real(n);
    out.push(CheckRecord::new("qft_sn_unitarity", json!({ "n": n }), orthogonality_residual(&f), cfg.tolerance));

    let types: Vec<_> = enumerate_compositions(n, n).into_iter().filter(|t| t.counts().iter().all(|&c| c > 0)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for ty in types {
        let params = json!({ "n": n, "type": ty });
        let (u, blocks) = qft_permmod(&ty, n)?;
        out.push(CheckRecord::new("permmod_isometry", params.clone(), u.unitarity_residual(), cfg.tolerance));
        let mu = ty.sorted_partition();
        let expected: Vec<_> =
            enumerate_partitions(n, n).into_iter().filter(|l| dominates(l, &mu).unwrap_or(false)).collect();
        let got: Vec<_> = blocks.blocks.iter().map(|b| b.lambda.clone()).collect();
        out.push(CheckRecord::new(
            "permmod_blocks_dominate",
            params.clone(),
            if got == expected { 0.0 } else { 1.0 },
            cfg.tolerance,
        ));
        let kostka_gap: usize = blocks.blocks.iter().map(|b| b.mult_labels.len().abs_diff(kostka(&b.lambda, &ty))).sum();
        out.push(CheckRecord::new("permmod_kostka_multiplicity", params.clone(), kostka_gap as f64, cfg.tolerance));

        // A random state on the cosets of Y must leave the subgroup register trivial.
        let y = YoungSubgroup::new(ty.clone());
        let gpe = Gpe::new(&y);
        let module = PermModule::new(&ty);
        let elems = y.elements();
        let mut psi = CVector::zeros(factorial(n) as usize);
        let amps: Vec<Complex64> = (0..module.dim())
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        for (e, a) in module.tuples().iter().zip(&amps) {
            let (_, t) = tuple_to_coset(e, n)?;
            for h in &elems {
                psi[t.perm.compose(h).lex_rank()] += *a;
            }
        }
        psi /= Complex64::new(psi.norm(), 0.0);
        let trivial = gpe.irrep_probabilities(&psi)?[0].1;
        out.push(CheckRecord::new("gpe_trivial_probability", params, (trivial - 1.0).abs(), cfg.tolerance));
    }
    Ok(out)
}

fn schur_weyl(cfg: &RunConfig) -> Result<Vec<CheckRecord>> {
    let (n, d) = (cfg.n, cfg.d);
    budget_check(crate::schur::hilbert_dim(n, d), cfg)?;
    let t = DualSchur::new(n, d, cfg.memory_budget)?;
    let params = json!({ "n": n, "d": d });
    let mut out = vec![CheckRecord::new(
        "dual_schur_unitarity",
        params.clone(),
        orthogonality_residual(&t.real_matrix()),
        cfg.tolerance,
    )];
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut perm_worst: f64 = 0.0;
    let mut unitary_worst: f64 = 0.0;
    for _ in 0..10 {
        let pi = Permutation::from_lex_rank(n, rng.random_range(0..factorial(n) as usize));
        perm_worst = perm_worst.max(verify_schur_weyl_perm(&t, &pi)?);
        let u = haar_unitary(d, &mut rng);
        unitary_worst = unitary_worst.max(verify_schur_weyl_unitary(&t, &u)?);
    }
    out.push(CheckRecord::new("schur_weyl_permutations", params.clone(), perm_worst, cfg.tolerance));
    out.push(CheckRecord::new("schur_weyl_unitaries", params, unitary_worst, cfg.tolerance));
    Ok(out)
}

fn gt_basis(cfg: &RunConfig) -> Result<Vec<CheckRecord>> {
    let (n, d) = (cfg.n, cfg.d);
    let mut out = Vec::new();
    let mut comm_worst: f64 = 0.0;
    for lambda in enumerate_partitions(n, d) {
        for l in 1..d {
            let g = |kind| gt_generator_real(&lambda, d, GtOperator { kind, l });
            let (j0, jp, jm) = (g(GtKind::J0)?, g(GtKind::Jplus)?, g(GtKind::Jminus)?);
            comm_worst = comm_worst.max(max_abs_real(&(&jp * &jm - &jm * &jp - j0 * 2.0)));
        }
    }
    out.push(CheckRecord::new("sl2_commutators", json!({ "n": n, "d": d }), comm_worst, cfg.tolerance));
    budget_check(crate::schur::hilbert_dim(n, d), cfg)?;
    let t = DualSchur::new(n, d, cfg.memory_budget)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let z: Vec<Complex64> = (0..d).map(|_| Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU))).collect();
    out.push(CheckRecord::new("diagonal_weights", json!({ "n": n, "d": d }), verify_weights(&t, &z)?, cfg.tolerance));
    out.push(CheckRecord::new("gt_ladder_operators", json!({ "n": n, "d": d }), verify_gt_basis(&t)?, cfg.tolerance));
    Ok(out)
}
