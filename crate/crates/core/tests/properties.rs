use std::cmp::Ordering;

use lorenz_core::farey::{make_farey_pair, tree_level, Side};
use lorenz_core::words::{
    canonical_l_maximal, counts, is_l_maximal, lex_compare, shift, to_periodic, trip_number,
    FiniteWord, Letter, PeriodicWord, Word,
};
use proptest::prelude::*;

fn letters(max: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(prop_oneof![Just(Letter::L), Just(Letter::R)], 1..=max)
}

fn word(max: usize) -> impl Strategy<Value = Word> {
    (letters(max), any::<bool>()).prop_map(|(ls, finite)| {
        if finite {
            Word::Finite(FiniteWord::new(ls).unwrap())
        } else {
            Word::Periodic(PeriodicWord::new(ls).unwrap())
        }
    })
}

fn all_words(len: usize) -> impl Iterator<Item = Vec<Letter>> {
    (0u32..1 << len).map(move |bits| {
        (0..len)
            .map(|i| {
                if bits >> i & 1 == 1 {
                    Letter::R
                } else {
                    Letter::L
                }
            })
            .collect()
    })
}

proptest! {
    #[test]
    fn order_is_antisymmetric(a in word(10), b in word(10)) {
        let ab = lex_compare(&a, &b);
        prop_assert_eq!(ab, lex_compare(&b, &a).reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
    }

    #[test]
    fn order_is_transitive(a in word(10), b in word(10), c in word(10)) {
        let mut v = [a, b, c];
        v.sort();
        prop_assert!(lex_compare(&v[0], &v[2]) != Ordering::Greater);
    }

    #[test]
    fn periodic_shift(ls in letters(12), k in 0usize..30) {
        let p = PeriodicWord::new(ls).unwrap();
        let w = Word::Periodic(p.clone());
        let period = p.period();
        prop_assert_eq!(shift(&w, period).unwrap(), w.clone());
        let s = shift(&w, k).unwrap();
        prop_assert_eq!(s == w, k % period == 0);
    }

    #[test]
    fn finite_shifts_compose(ls in letters(12), a in 0usize..12, b in 0usize..12) {
        let w = Word::Finite(FiniteWord::new(ls).unwrap());
        prop_assume!(a + b <= w.len());
        prop_assert_eq!(shift(&shift(&w, a).unwrap(), b).unwrap(), shift(&w, a + b).unwrap());
    }

    #[test]
    fn counts_add_up(a in letters(12), b in letters(12)) {
        let (x, y) = (FiniteWord::new(a).unwrap(), FiniteWord::new(b).unwrap());
        let c = x.concat(&y).counts();
        prop_assert_eq!(c, x.counts() + y.counts());
        prop_assert_eq!(c.len(), x.len() + y.len());
    }

    #[test]
    fn mirror_is_an_order_reversing_involution(a in word(10), b in word(10)) {
        prop_assert_eq!(a.mirror().mirror(), a.clone());
        prop_assert_eq!(lex_compare(&a.mirror(), &b.mirror()), lex_compare(&a, &b).reverse());
        let c = counts(&a.mirror());
        prop_assert_eq!((c.n_l, c.n_r), (counts(&a).n_r, counts(&a).n_l));
        prop_assert_eq!(trip_number(&a.mirror()), trip_number(&a));
    }

    #[test]
    fn canonical_form_is_a_rotation_and_l_maximal(ls in letters(12)) {
        prop_assume!(ls.contains(&Letter::L));
        let p = PeriodicWord::new(ls).unwrap();
        let c = canonical_l_maximal(&p).unwrap();
        prop_assert!(is_l_maximal(&Word::Finite(c.clone())));
        prop_assert!(p.same_class(&to_periodic(&c).unwrap()));
    }

    #[test]
    fn trip_number_is_rotation_invariant(ls in letters(12), k in 0usize..12) {
        let p = PeriodicWord::new(ls).unwrap();
        prop_assert_eq!(
            trip_number(&Word::Periodic(p.rotate(k))),
            trip_number(&Word::Periodic(p)),
        );
    }
}

#[test]
fn canonical_round_trip_to_length_12() {
    let mut checked = 0;
    for len in 1..=12 {
        for ls in all_words(len) {
            let f = FiniteWord::new(ls).unwrap();
            let w = Word::Finite(f.clone());
            if !is_l_maximal(&w) || to_periodic(&f).is_err() {
                continue;
            }
            checked += 1;
            assert_eq!(canonical_l_maximal(&to_periodic(&f).unwrap()).unwrap(), f);
        }
    }
    assert!(checked > 300);
}

#[test]
fn farey_pairs_to_depth_8_are_admissible() {
    for depth in 1..=8 {
        let level = tree_level(Side::Minus, depth).unwrap();
        for (s, x) in level.adjacent_pairs() {
            if !s.letters().contains(&Letter::R) {
                continue;
            }
            let pair = make_farey_pair(x, s).unwrap();
            assert!(pair.is_admissible(), "{x} {s}");
        }
    }
}
