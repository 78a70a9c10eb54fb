use ordgap_core::gap::gap_leq;
use ordgap_core::linear::lin_cmp;
use ordgap_core::order::Chain;
use ordgap_core::{Family, SeqTerm, System};
use proptest::prelude::*;
use std::cmp::Ordering;

/// Builds a well-formed term inside out from index offsets above the chain bound.
fn term_from_offsets(offsets: &[u32], leaf: u32) -> SeqTerm<u32> {
    let mut s = SeqTerm::base(leaf);
    for &r in offsets.iter().rev() {
        let i = (s.deg() - 1).max(0) as u32 + r;
        s = SeqTerm::theta(i, s).expect("chain bound respected");
    }
    s
}

fn arb_term() -> impl Strategy<Value = SeqTerm<u32>> {
    (prop::collection::vec(0u32..3, 0..8), 0u32..3).prop_map(|(o, x)| term_from_offsets(&o, x))
}

proptest! {
    #[test]
    fn k_bounds_height_and_degree(s in arb_term(), i in -1i32..5) {
        let k = s.k(i);
        prop_assert!(k.height() <= s.height());
        prop_assert!(k.deg() <= i);
    }

    #[test]
    fn k_is_idempotent(s in arb_term(), i in -1i32..5) {
        prop_assert_eq!(s.k(i).k(i), s.k(i));
    }

    #[test]
    fn k_composes_downwards(s in arb_term(), i in -1i32..5, d in 0i32..5) {
        let j = (i - d).max(-1);
        prop_assert_eq!(s.k(i).k(j), s.k(j));
    }

    #[test]
    fn k_base_ignores_indices(s in arb_term()) {
        prop_assert_eq!(s.k(-1), SeqTerm::base(*s.k_base()));
    }

    #[test]
    fn validate_is_monotone_in_n(s in arb_term(), n in 0u32..6) {
        for family in [Family::T, Family::T0, Family::S, Family::S0] {
            if System::new(family, n).validate(&s, &Chain(3)) {
                prop_assert!(System::new(family, n + 1).validate(&s, &Chain(3)));
            }
        }
    }

    #[test]
    fn collapse_below_theta(s in arb_term(), r in 0u32..3) {
        let i = (s.deg() - 1).max(0) as u32 + r;
        let t = SeqTerm::theta(i, s.clone()).unwrap();
        prop_assert_eq!(lin_cmp(&Chain(3), &s.k(i as i32), &t), Ordering::Less);
    }

    #[test]
    fn gap_order_is_monotone_in_height_and_degree(s in arb_term(), t in arb_term()) {
        if gap_leq(&Chain(3), &s, &t) {
            prop_assert!(s.height() <= t.height());
            prop_assert!(s.deg() <= t.deg());
            for i in 0..5 {
                prop_assert!(gap_leq(&Chain(3), &s.k(i), &t.k(i)));
            }
        }
    }

    #[test]
    fn sequences_round_trip(s in arb_term()) {
        let s = s.map_leaf(|_| 0);
        let seq = s.to_sequence();
        let n = seq.iter().max().map_or(0, |m| m + 1);
        prop_assert_eq!(SeqTerm::from_sequence(&seq, n).unwrap(), s);
    }
}

#[test]
fn from_sequence_rejects_out_of_range() {
    assert!(SeqTerm::from_sequence(&[2, 0], 2).is_err());
    assert!(SeqTerm::from_sequence(&[], 0).unwrap().is_base());
    assert_eq!(SeqTerm::from_sequence(&[0, 1], 2).unwrap().to_sequence(), vec![0, 1]);
}
