mod common;

use proptest::prelude::*;
use schurkit::combinatorics::{enumerate_compositions, enumerate_partitions, enumerate_ssyt, enumerate_ssyt_bounded};
use schurkit::rsk::{insert_word, row_insert, rsk, swap_content, tableau_product, Biword};
use schurkit::SemistandardTableau;

use common::bender_knuth;

fn word() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=5, 0..8)
}

proptest! {
    #[test]
    fn insertion_keeps_tableaux_semistandard(w in word(), x in 1usize..=6) {
        let t = insert_word(&w);
        let (out, (r, c)) = row_insert(&t, x).unwrap();
        prop_assert!(SemistandardTableau::new(out.rows().to_vec()).is_ok());
        prop_assert_eq!(out.size(), t.size() + 1);
        prop_assert_eq!(out.rows()[r - 1].len(), c);
        prop_assert_eq!(out.shape().remove_cell(r - 1).unwrap(), t.shape());
    }

    #[test]
    fn tableau_product_is_associative(a in word(), b in word(), c in word()) {
        let (s, t, u) = (insert_word(&a), insert_word(&b), insert_word(&c));
        let left = tableau_product(&tableau_product(&s, &t), &u);
        let right = tableau_product(&s, &tableau_product(&t, &u));
        prop_assert_eq!(&left, &right);
        let mut all = a.clone();
        all.extend(&b);
        all.extend(&c);
        prop_assert_eq!(left, insert_word(&all));
    }

    #[test]
    fn rsk_shapes_and_contents(pairs in prop::collection::vec((1usize..=4, 1usize..=4), 0..9)) {
        let mut pairs = pairs;
        pairs.sort();
        let (u, v): (Vec<usize>, Vec<usize>) = pairs.into_iter().unzip();
        let (p, q) = rsk(&Biword::new(u.clone(), v.clone()).unwrap());
        prop_assert_eq!(p.shape(), q.shape());
        let mut pv = p.reading_word();
        pv.sort();
        let mut sv = v;
        sv.sort();
        prop_assert_eq!(pv, sv);
        let mut qv = q.reading_word();
        qv.sort();
        prop_assert_eq!(qv, u);
    }

    #[test]
    fn swapping_twice_is_the_identity(w in prop::collection::vec(1usize..=4, 1..7), k in 1usize..4) {
        let t = insert_word(&w);
        prop_assert_eq!(swap_content(&swap_content(&t, k).unwrap(), k).unwrap(), t);
    }
}

#[test]
fn swap_content_is_a_bijection_between_kostka_classes() {
    let mut disagreements = 0;
    let mut checked = 0;
    for n in 1..=6 {
        for d in 2..=4 {
            for lambda in enumerate_partitions(n, d) {
                for t in enumerate_ssyt_bounded(&lambda, d) {
                    for k in 1..d {
                        let s = swap_content(&t, k).unwrap();
                        let bk = bender_knuth(&t, k);
                        assert_eq!(s.shape(), t.shape());
                        assert_eq!(s.content(d).unwrap(), t.content(d).unwrap().swapped(k).padded(d));
                        assert_eq!(bk.shape(), s.shape());
                        assert_eq!(bk.content(d).unwrap(), s.content(d).unwrap());
                        if bk != s {
                            disagreements += 1;
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    println!("swap_content vs Bender-Knuth: {disagreements} of {checked} tableaux differ pointwise");
    for n in 1..=6 {
        for mu in enumerate_compositions(n, 4) {
            for lambda in enumerate_partitions(n, 4) {
                for k in 1..4 {
                    let mut image: Vec<_> =
                        enumerate_ssyt(&lambda, &mu).iter().map(|t| swap_content(t, k).unwrap()).collect();
                    image.sort_by_key(|t| t.reading_word());
                    assert_eq!(image, enumerate_ssyt(&lambda, &mu.swapped(k)));
                }
            }
        }
    }
}
