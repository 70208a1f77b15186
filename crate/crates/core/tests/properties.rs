use kpieri_core::{
    decompose, enumerate_x, level, recompose, swap_relations, zero_split, InterlacingPattern, Limits, Orientation,
    SlWeight,
};
use proptest::prelude::*;

fn weight(m: usize) -> impl Strategy<Value = SlWeight> {
    prop::collection::vec(0u64..12, m - 1).prop_map(move |mut e| {
        e.sort_unstable_by(|x, y| y.cmp(x));
        SlWeight::new(m, e).unwrap()
    })
}

fn pattern() -> impl Strategy<Value = InterlacingPattern> {
    (2usize..=6, any::<bool>()).prop_flat_map(|(m, dual)| pattern_of(m, dual))
}

fn pattern_of(m: usize, dual: bool) -> impl Strategy<Value = InterlacingPattern> {
    (prop::collection::vec(0u64..=20, 6), prop::collection::vec(0.0f64..1.0, 5)).prop_map(move |(mut top, fracs)| {
        top.truncate(m);
        top.sort_unstable_by(|x, y| y.cmp(x));
        let bottom =
            (0..m - 1).map(|i| top[i + 1] + ((top[i] - top[i + 1]) as f64 * fracs[i]).round() as u64).collect();
        let o = if dual { Orientation::Dual } else { Orientation::Normal };
        InterlacingPattern::new(o, top, bottom).unwrap()
    })
}

proptest! {
    #[test]
    fn dual_is_an_involution(w in (2usize..=6).prop_flat_map(weight)) {
        prop_assert_eq!(w.dual().dual(), w);
    }

    #[test]
    fn lift_then_reduce(w in (2usize..=6).prop_flat_map(weight), c in 0u64..10) {
        prop_assert_eq!(w.gl_lift(c).sl_reduce(), w);
    }

    #[test]
    fn decomposition_round_trips(p in pattern()) {
        let gens = decompose(&p);
        prop_assert_eq!(gens.values().sum::<u64>(), level(&p));
        prop_assert_eq!(recompose(p.rank(), p.orientation(), &gens).unwrap(), p);
    }

    #[test]
    fn level_is_additive((p, q) in (2usize..=6, any::<bool>()).prop_flat_map(|(m, d)| (pattern_of(m, d), pattern_of(m, d)))) {
        prop_assert_eq!(level(&p.checked_add(&q).unwrap()), level(&p) + level(&q));
    }
}

#[test]
fn swaps_preserve_the_chain_sum() {
    for leveled in [false, true] {
        for rel in swap_relations(3, 3, 3, leveled, &Limits::default()).unwrap() {
            let k = leveled.then_some(1);
            let lhs = rel.lhs.0.chain(k).checked_add(&rel.lhs.1.chain(k)).unwrap();
            let rhs = rel.rhs.0.chain(k).checked_add(&rel.rhs.1.chain(k)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn zero_split_is_a_factorisation() {
    for m in 2..=4 {
        for t in enumerate_x(m, 3, 4, &Limits::default()).unwrap() {
            if let Ok((l, r)) = zero_split(&t) {
                assert_eq!(l.chain(None).checked_add(&r.chain(None)).unwrap(), t.chain(None));
                assert_eq!(l.weights(false).checked_add(&r.weights(false)).unwrap(), t.weights(false));
            }
        }
    }
}
