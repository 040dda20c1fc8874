use proptest::prelude::*;
use schurkit::combinatorics::{
    dominates, enumerate_compositions, enumerate_gt, enumerate_partitions, enumerate_ssyt, enumerate_ssyt_bounded,
    enumerate_syt, factorial, gt_to_ssyt, hook_dimension, is_horizontal_strip, kostka, ssyt_to_gt, strip_removals,
    unitary_dimension, SkewStrip,
};
use schurkit::{Composition, Partition};

#[test]
fn regular_representation_dimensions() {
    for n in 0..=7 {
        let total: u128 = enumerate_partitions(n, n.max(1)).iter().map(|l| hook_dimension(l).pow(2)).sum();
        assert_eq!(total, factorial(n));
        for l in enumerate_partitions(n, n.max(1)) {
            assert_eq!(enumerate_syt(&l).len() as u128, hook_dimension(&l));
        }
    }
}

#[test]
fn schur_weyl_dimension_count() {
    for n in 1..=6 {
        for d in 1..=4 {
            let total: u128 =
                enumerate_partitions(n, d).iter().map(|l| hook_dimension(l) * unitary_dimension(l, d)).sum();
            assert_eq!(total, (d as u128).pow(n as u32));
            for l in enumerate_partitions(n, d) {
                assert_eq!(enumerate_ssyt_bounded(&l, d).len() as u128, unitary_dimension(&l, d));
            }
        }
    }
}

#[test]
fn kostka_positive_exactly_under_dominance() {
    for n in 1..=6 {
        for mu in enumerate_compositions(n, n) {
            let sorted = mu.sorted_partition();
            for l in enumerate_partitions(n, n) {
                assert_eq!(kostka(&l, &mu) > 0, dominates(&l, &sorted).unwrap(), "{l} {mu:?}");
            }
        }
    }
}

#[test]
fn kostka_symmetric_under_reordering_content() {
    fn permutations(v: &[usize]) -> Vec<Vec<usize>> {
        if v.len() <= 1 {
            return vec![v.to_vec()];
        }
        let mut out = Vec::new();
        for i in 0..v.len() {
            let mut rest = v.to_vec();
            let x = rest.remove(i);
            for mut p in permutations(&rest) {
                p.insert(0, x);
                out.push(p);
            }
        }
        out
    }
    for n in 1..=5 {
        for mu in enumerate_compositions(n, n) {
            for l in enumerate_partitions(n, n) {
                let k = kostka(&l, &mu);
                for p in permutations(mu.counts()) {
                    assert_eq!(kostka(&l, &Composition::new(p)), k);
                }
            }
        }
    }
}

#[test]
fn strip_removals_match_containment_oracle() {
    for n in 0..=6 {
        for l in enumerate_partitions(n, n.max(1)) {
            let mut oracle = Vec::new();
            for m in 0..=n {
                for mu in enumerate_partitions(m, m.max(1)) {
                    if l.contains(&mu) && is_horizontal_strip(&SkewStrip::new(l.clone(), mu.clone()).unwrap()) {
                        oracle.push(mu);
                    }
                }
            }
            let mut got = strip_removals(&l);
            got.sort();
            oracle.sort();
            assert_eq!(got, oracle);
        }
    }
}

#[test]
fn gt_patterns_round_trip() {
    for n in 0..=6 {
        for d in 1..=4 {
            for l in enumerate_partitions(n, d) {
                for m in enumerate_gt(&l, d) {
                    assert_eq!(ssyt_to_gt(&gt_to_ssyt(&m), d).unwrap(), m);
                }
                for t in enumerate_ssyt_bounded(&l, d) {
                    let m = ssyt_to_gt(&t, d).unwrap();
                    assert_eq!(gt_to_ssyt(&m), t);
                    let w = m.weight();
                    assert_eq!(w, t.content(d).unwrap());
                }
            }
        }
    }
}

fn partition_strategy() -> impl Strategy<Value = Partition> {
    (1usize..=7).prop_flat_map(|n| {
        let all = enumerate_partitions(n, n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(l in partition_strategy()) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(hook_dimension(&l), hook_dimension(&l.conjugate()));
    }

    #[test]
    fn dominance_is_reflexive_and_reversed_by_conjugation(l in partition_strategy(), seed in 0usize..100) {
        let n = l.size();
        let all = enumerate_partitions(n, n);
        let mu = &all[seed % all.len()];
        prop_assert!(dominates(&l, &l).unwrap());
        prop_assert_eq!(dominates(&l, mu).unwrap(), dominates(&mu.conjugate(), &l.conjugate()).unwrap());
    }

    #[test]
    fn ssyt_content_and_shape_are_respected(l in partition_strategy(), d in 1usize..=4) {
        for t in enumerate_ssyt_bounded(&l, d) {
            prop_assert_eq!(t.shape(), l.clone());
            let c = t.content(d).unwrap();
            prop_assert!(enumerate_ssyt(&l, &c).contains(&t));
        }
    }
}
