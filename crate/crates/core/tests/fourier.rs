mod common;

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schurkit::combinatorics::{
    dominates, enumerate_compositions, enumerate_partitions, enumerate_syt, factorial, hook_dimension,
    interval_strip, is_horizontal_strip, kostka,
};
use schurkit::fourier::{
    induced_qft, irrep_key, qft_permmod, qft_sn, qft_sn_real, qft_young, trivial_vector, Gpe, Label, PermModule,
};
use schurkit::linalg::{max_abs, max_abs_real, random_state, CMatrix, CVector};
use schurkit::symgroup::{irrep_matrix, tuple_to_coset, Permutation, YoungSubgroup};
use schurkit::{Composition, Partition, StandardTableau};

use common::{brute_average, c, direct_qft, left_regular};

#[test]
fn qft_matches_direct_formula() {
    for n in 1..=5 {
        let f = qft_sn_real(n);
        assert!(max_abs_real(&(&f - direct_qft(n))) < 1e-12, "n={n}");
    }
    let h = qft_sn_real(2);
    let s = std::f64::consts::FRAC_1_SQRT_2;
    assert!(max_abs_real(&(h - DMatrix::from_row_slice(2, 2, &[s, s, s, -s]))) < 1e-15);
    assert_eq!(qft_sn_real(1)[(0, 0)], 1.0);
}

#[test]
fn qft_intertwines_left_regular() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=5 {
        let f = qft_sn(n);
        assert!(f.unitarity_residual() < 1e-12);
        for _ in 0..10 {
            let g = Permutation::from_lex_rank(n, rng.random_range(0..factorial(n) as usize));
            let lhs = &f.matrix * common::to_c(&left_regular(&g)) * f.matrix.adjoint();
            let blocks: Vec<CMatrix> = enumerate_partitions(n, n)
                .iter()
                .map(|l| {
                    let m = irrep_matrix(l, &g).unwrap();
                    common::to_c(&m.kronecker(&DMatrix::identity(m.nrows(), m.nrows())))
                })
                .collect();
            let rhs = schurkit::linalg::direct_sum(&blocks);
            assert!(max_abs(&(lhs - rhs)) < 1e-10);
        }
    }
}

#[test]
fn young_qft_is_a_kronecker_product() {
    let y = YoungSubgroup::new(Composition::new(vec![2, 2]));
    let q = qft_young(&y);
    let h = qft_sn(2).matrix;
    assert!(max_abs(&(&q.matrix - h.kronecker(&h))) < 1e-15);
    let triv = qft_young(&YoungSubgroup::trivial(3));
    assert!(max_abs(&(triv.matrix - CMatrix::identity(1, 1))) < 1e-15);
    for n in 1..=6 {
        for ty in enumerate_compositions(n, n).into_iter().filter(|t| t.counts().iter().all(|&x| x > 0)) {
            let q = qft_young(&YoungSubgroup::new(ty.clone()));
            assert!(q.unitarity_residual() < 1e-12, "{ty:?}");
        }
    }
}

#[test]
fn induced_qft_special_cases() {
    let n = 4;
    let full = induced_qft(&YoungSubgroup::full(n), n).unwrap();
    // A single tuple; its trivial ancilla column lands on the trivial irrep.
    assert!((full.matrix[(0, 0)] - c(1.0)).norm() < 1e-12);
    let trivial = induced_qft(&YoungSubgroup::trivial(n), n).unwrap();
    // Same transform, columns indexed by tuples instead of group elements.
    let q = qft_sn(n);
    for (ci, label) in trivial.cols.iter().enumerate() {
        let Label::Product { factors } = label else { panic!("product label") };
        let Label::Tuple { tuple } = &factors[0] else { panic!("tuple factor") };
        let g = tuple_to_coset(tuple, n).unwrap().1.perm.lex_rank();
        assert!((trivial.matrix.column(ci) - q.matrix.column(g)).norm() < 1e-12);
    }
    for n in 1..=5 {
        for ty in enumerate_compositions(n, n) {
            let u = induced_qft(&YoungSubgroup::new(ty.clone()), n).unwrap();
            assert!(u.unitarity_residual() < 1e-10, "{ty:?}");
        }
    }
}

fn coset_state(ty: &Composition, a: &[CVector]) -> CVector {
    // Σ_t a_t |t Y⟩ on the group register.
    let n = ty.size();
    let y = YoungSubgroup::new(ty.clone());
    let elems = y.elements();
    let tuples = schurkit::symgroup::tuples_of_type(ty);
    let mut psi = CVector::zeros(factorial(n) as usize);
    for (i, e) in tuples.iter().enumerate() {
        let (_, t) = tuple_to_coset(e, n).unwrap();
        for h in &elems {
            psi[t.perm.compose(h).lex_rank()] += a[0][i] / c((elems.len() as f64).sqrt());
        }
    }
    psi
}

#[test]
fn gpe_projects_cosets_onto_trivial_irrep() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 1..=5 {
        for ty in enumerate_compositions(n, n).into_iter().filter(|t| t.counts().iter().all(|&x| x > 0)) {
            let gpe = Gpe::new(&YoungSubgroup::new(ty.clone()));
            let w = schurkit::symgroup::tuples_of_type(&ty).len();
            let a = random_state(w, &mut rng);
            let psi = coset_state(&ty, &[a]);
            let probs = gpe.irrep_probabilities(&psi).unwrap();
            let trivial = &probs[0];
            assert!(trivial.0.iter().all(|l| l.len() == 1), "first label is trivial");
            assert!((trivial.1 - 1.0).abs() < 1e-10, "{ty:?}: {}", trivial.1);
        }
    }
}

#[test]
fn gpe_probabilities_match_isotypic_projectors() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let n = 4;
    for ty in [vec![2, 2], vec![3, 1], vec![1, 2, 1], vec![4]] {
        let y = YoungSubgroup::new(Composition::new(ty.clone()));
        let gpe = Gpe::new(&y);
        let psi = random_state(24, &mut rng);
        let group = Permutation::all(n);
        for (key, p) in gpe.irrep_probabilities(&psi).unwrap() {
            // Π = (d/|Y|) Σ_h χ(h) R(h), with χ the product character.
            let dim: usize = key.iter().map(|l| hook_dimension(l) as usize).product();
            let mut proj = CMatrix::zeros(24, 24);
            for h in y.elements() {
                let mut chi = 1.0;
                for (l, &(a, b)) in key.iter().zip(y.blocks()) {
                    let local: Vec<usize> = (a..=b).map(|i| h.apply(i) - a + 1).collect();
                    chi *= irrep_matrix(l, &Permutation::from_one_line(local).unwrap()).unwrap().trace();
                }
                for (gi, g) in group.iter().enumerate() {
                    proj[(g.compose(&h).lex_rank(), gi)] += c(chi * dim as f64 / y.order() as f64);
                }
            }
            let expected = (psi.adjoint() * &proj * &psi)[(0, 0)].re;
            assert!((expected - p).abs() < 1e-10, "{ty:?} {key:?}");
        }
    }
    let gpe = Gpe::new(&YoungSubgroup::new(Composition::new(vec![2, 1])));
    let m = gpe.to_matrix();
    assert!(m.unitarity_residual() < 1e-12);
    assert_eq!(irrep_key(&gpe.subgroup_labels()[0]).len(), 2);
}

#[test]
fn permutation_modules_decompose_by_kostka_numbers() {
    for n in 1..=5 {
        for ty in enumerate_compositions(n, n) {
            let (u, blocks) = qft_permmod(&ty, n).unwrap();
            assert!(u.unitarity_residual() < 1e-10, "{ty:?}");
            let mu = ty.sorted_partition();
            let expected: Vec<Partition> = enumerate_partitions(n, n)
                .into_iter()
                .filter(|l| dominates(l, &mu).unwrap())
                .collect();
            let got: Vec<Partition> = blocks.blocks.iter().map(|b| b.lambda.clone()).collect();
            assert_eq!(got, expected);
            for b in &blocks.blocks {
                assert_eq!(b.mult_labels.len(), kostka(&b.lambda, &ty));
                assert_eq!(b.mult_labels.len(), kostka(&b.lambda, &Composition::from(mu.clone())));
            }
        }
    }
    let (one, blocks) = qft_permmod(&Composition::new(vec![3]), 3).unwrap();
    assert_eq!(one.matrix.shape(), (1, 1));
    assert_eq!(blocks.blocks[0].lambda, Partition::row(3));
    let (_, regular) = qft_permmod(&Composition::new(vec![1; 4]), 4).unwrap();
    for b in &regular.blocks {
        assert_eq!(b.mult_labels.len() as u128, hook_dimension(&b.lambda));
    }
}

#[test]
fn permutation_module_agrees_with_induced_transform() {
    // Coset states through the ancilla-based transform land in the span of
    // the multiplicity vectors, with the same coefficients.
    for n in 2..=4 {
        for ty in enumerate_compositions(n, n) {
            let y = YoungSubgroup::new(ty.clone());
            let induced = induced_qft(&y, n).unwrap();
            let module = PermModule::new(&ty);
            let v = module.real_matrix();
            let ydim = y.order() as usize;
            for (ti, _) in module.tuples().iter().enumerate() {
                let col = induced.matrix.column(ti * ydim);
                let mut row = 0;
                for b in module.blocks() {
                    let lambda = b.irrep.lambda();
                    let d = b.irrep.dim();
                    for (qi, _) in b.mult.iter().enumerate() {
                        for p in 0..d {
                            // ⟨λ, p, w_q| applied to the Fourier column
                            let mut amp = c(0.0);
                            for j in 0..d {
                                let label = Label::Fourier {
                                    lambda: lambda.clone(),
                                    row: b.irrep.basis()[p].clone(),
                                    col: b.irrep.basis()[j].clone(),
                                };
                                amp += col[induced.row_index(&label).unwrap()] * b.basis[(j, qi)];
                            }
                            assert!((amp.re - v[(row, ti)]).abs() < 1e-10 && amp.im.abs() < 1e-10);
                            row += 1;
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn two_by_two_multiplicity_example() {
    let lambda = Partition::new(vec![2, 2]).unwrap();
    let y = YoungSubgroup::new(Composition::new(vec![2, 2]));
    let kept = StandardTableau::new(vec![vec![1, 2], vec![3, 4]]).unwrap();
    let killed = StandardTableau::new(vec![vec![1, 3], vec![2, 4]]).unwrap();
    assert!(trivial_vector(&lambda, &kept, &y).unwrap().is_some());
    assert!(trivial_vector(&lambda, &killed, &y).unwrap().is_none());
    let module = PermModule::new(&Composition::new(vec![2, 2]));
    let block = module.blocks().iter().find(|b| b.irrep.lambda() == &lambda).unwrap();
    assert_eq!(block.mult.len(), 1);
    assert_eq!(block.mult[0].to_string(), "[[1,1],[2,2]]");
}

#[test]
fn averages_vanish_exactly_off_horizontal_strips() {
    let mut counterexamples = 0;
    for n in 1..=5 {
        for lambda in enumerate_partitions(n, n) {
            for lo in 1..=n {
                for hi in lo..=n {
                    let mut ty = vec![1; lo - 1];
                    ty.push(hi - lo + 1);
                    ty.extend(std::iter::repeat_n(1, n - hi));
                    let y = YoungSubgroup::new(Composition::new(ty));
                    let avg = brute_average(&lambda, &y);
                    for (i, t) in enumerate_syt(&lambda).iter().enumerate() {
                        let zero = avg.column(i).norm() < 1e-12;
                        let strip = is_horizontal_strip(&interval_strip(t, lo, hi));
                        let fast = trivial_vector(&lambda, t, &y).unwrap().is_none();
                        if zero == strip || fast != zero {
                            counterexamples += 1;
                        }
                    }
                }
            }
        }
    }
    assert_eq!(counterexamples, 0);
}

#[test]
fn trivial_vectors_are_identified_with_semistandard_tableaux() {
    for n in 2..=5 {
        for ty in enumerate_compositions(n, n).into_iter().filter(|t| t.counts().iter().all(|&x| x > 0)) {
            let y = YoungSubgroup::new(ty.clone());
            let prefix = ty.prefix_sums();
            for lambda in enumerate_partitions(n, n) {
                let vecs: Vec<(String, nalgebra::DVector<f64>)> = enumerate_syt(&lambda)
                    .iter()
                    .filter_map(|t| {
                        trivial_vector(&lambda, t, &y).unwrap().map(|v| {
                            let block = |x: usize| prefix.iter().position(|&p| p >= x).unwrap();
                            let label = t
                                .rows()
                                .iter()
                                .map(|r| r.iter().map(|&x| block(x).to_string()).collect::<Vec<_>>().join(","))
                                .collect::<Vec<_>>()
                                .join("/");
                            (label, v)
                        })
                    })
                    .collect();
                for (la, va) in &vecs {
                    for (lb, vb) in &vecs {
                        let overlap = va.dot(vb).abs();
                        if la == lb {
                            assert!((overlap - 1.0).abs() < 1e-10);
                        } else {
                            assert!(overlap < 1e-10);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn fourier_json_round_trip() {
    let u = qft_sn(3);
    let text = serde_json::to_string(&u).unwrap();
    let back: schurkit::fourier::LabeledUnitary = serde_json::from_str(&text).unwrap();
    assert_eq!(back.rows, u.rows);
    assert!(max_abs(&(back.matrix - &u.matrix)) < 1e-15);
    assert!(text.contains("\"kind\":\"fourier\""));
}
