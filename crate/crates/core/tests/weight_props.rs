use proptest::prelude::*;
use strongdiv::weight::{in_a, in_weight_ge, win_strip, Exponents, WLaurent, WTerm, Weight};
use strongdiv::Rat;

fn term() -> impl Strategy<Value = WTerm> {
    (
        (-3i64..=3).prop_filter("nonzero", |c| *c != 0),
        prop::collection::btree_map(1u32..=4, -2i64..=3, 0..3),
    )
        .prop_map(|(c, exps)| WTerm {
            coef: Rat::from_int(c),
            exps: exps.into_iter().filter(|(_, e)| *e != 0).collect(),
        })
}

fn laurent() -> impl Strategy<Value = WLaurent> {
    prop::collection::vec(term(), 0..4).prop_map(WLaurent::from_terms)
}

/// Weight straight from the definition: least `sum e_n / n` over terms.
fn weight_oracle(f: &WLaurent) -> Weight {
    f.terms()
        .map(|t| {
            t.exps
                .iter()
                .fold(Rat::zero(), |acc, (&n, &e)| acc + Rat::frac(e, n as i64))
        })
        .min()
        .map_or(Weight::Infinite, Weight::Finite)
}

fn add_weights(a: &Weight, b: &Weight) -> Weight {
    match (a, b) {
        (Weight::Finite(x), Weight::Finite(y)) => Weight::Finite(x + y),
        _ => Weight::Infinite,
    }
}

proptest! {
    #[test]
    fn weight_matches_definition(f in laurent()) {
        prop_assert_eq!(f.weight(), weight_oracle(&f));
    }

    #[test]
    fn weight_and_win_are_multiplicative(f in laurent(), g in laurent()) {
        let fg = &f * &g;
        prop_assert_eq!(fg.weight(), add_weights(&f.weight(), &g.weight()));
        prop_assert_eq!(fg.win(), &f.win() * &g.win());
    }

    #[test]
    fn win_is_homogeneous_of_the_weight(f in laurent()) {
        let w = f.win();
        prop_assert!(w.terms().all(|t| Weight::Finite(t.weight()) == f.weight()));
        prop_assert!((&f - &w).weight() > f.weight() || f.is_zero());
    }

    #[test]
    fn strip_reconstructs_and_increases(h in laurent()) {
        let seq = win_strip(&h, 12).unwrap();
        for pair in seq.windows(2) {
            prop_assert!(pair[0].weight < pair[1].weight);
            prop_assert_eq!(&pair[0].h - &pair[1].h, pair[0].h.win());
        }
        // Each step removes at least one term.
        prop_assert!(seq.len() <= h.len() + 1);
        prop_assert!(seq.last().unwrap().h.is_zero() || seq.len() == 13);
    }

    #[test]
    fn a_is_a_subring(f in laurent(), g in laurent()) {
        if in_a(&f) && in_a(&g) {
            prop_assert!(in_a(&(&f + &g)));
            prop_assert!(in_a(&(&f * &g)));
        }
    }

    #[test]
    fn a_membership_matches_definition(f in laurent()) {
        let tail = WLaurent::from_terms(f.terms().filter(|t| !t.exps.values().all(|&e| e >= 0)));
        prop_assert_eq!(in_a(&f), in_weight_ge(&tail, &Rat::one()));
    }

    #[test]
    fn json_round_trip(f in laurent()) {
        prop_assert_eq!(WLaurent::from_json(&f.to_json()).unwrap(), f.clone());
        prop_assert_eq!(WLaurent::parse(&f.to_string()).unwrap(), f);
    }
}

#[test]
fn the_witness_has_weight_zero_and_is_outside_a() {
    let f = WLaurent::parse("X1*X2^-2").unwrap();
    assert_eq!(f.weight(), Weight::Finite(Rat::zero()));
    assert!(in_weight_ge(&f, &Rat::zero()));
    assert!(!in_a(&f));
    let exps: Exponents = [(1, 1), (2, -2)].into();
    assert_eq!(f, WLaurent::term(Rat::one(), exps));
}
