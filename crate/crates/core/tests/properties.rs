use proptest::prelude::*;

use permclass::class5::check_structure;
use permclass::classes::{schroder_pair, PatternClass};
use permclass::enumerate::{counting_sequence, enumerate_avoiders, triple_orbits};
use permclass::perm::standardize;
use permclass::schroder::{enumerate_paths, phi, phi_inverse};
use permclass::{PatternSet, Permutation, SizeGuard, Symmetry};

fn perm_up_to(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn symmetry() -> impl Strategy<Value = Symmetry> {
    (0..8usize).prop_map(|i| Symmetry::all()[i])
}

fn class() -> impl Strategy<Value = PatternClass> {
    (0..5usize).prop_map(|i| PatternClass::ALL[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn basic_symmetries_are_involutions(p in perm_up_to(10)) {
        prop_assert_eq!(p.reverse().reverse(), p.clone());
        prop_assert_eq!(p.complement().complement(), p.clone());
        prop_assert_eq!(p.inverse().inverse(), p.clone());
    }

    #[test]
    fn composition_matches_sequential_application(p in perm_up_to(8), g in symmetry(), h in symmetry()) {
        prop_assert_eq!(g.compose(h).apply(&p), g.apply(&h.apply(&p)));
        prop_assert_eq!(g.group_inverse().apply(&g.apply(&p)), p);
    }

    #[test]
    fn avoidance_is_symmetry_invariant(p in perm_up_to(8), g in symmetry(), c in class()) {
        let set = c.patterns();
        prop_assert_eq!(p.avoids(&set), g.apply(&p).avoids(&g.apply_set(&set)));
    }

    #[test]
    fn occurrences_are_genuine(p in perm_up_to(9), c in class()) {
        for tau in c.patterns().iter() {
            if let Some(pos) = p.find_occurrence(tau) {
                let sub: Vec<usize> = pos.iter().map(|&i| p.at(i)).collect();
                prop_assert_eq!(&standardize(&sub), tau);
                prop_assert!(pos.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn standardize_is_idempotent(v in proptest::collection::btree_set(1usize..100, 0..12), seed in any::<u64>()) {
        let mut w: Vec<usize> = v.into_iter().collect();
        let len = w.len().max(1);
        w.rotate_left(seed as usize % len);
        let s = standardize(&w);
        prop_assert_eq!(standardize(s.values()), s.clone());
        for i in 0..w.len() {
            for j in 0..w.len() {
                prop_assert_eq!(w[i] < w[j], s.values()[i] < s.values()[j]);
            }
        }
    }

    #[test]
    fn components_rebuild_the_permutation(p in perm_up_to(9)) {
        let parts = p.components();
        prop_assert!(parts.iter().all(|c| c.is_indecomposable()));
        let rebuilt = parts.iter().fold(Permutation::empty(), |acc, c| acc.direct_sum(c));
        prop_assert_eq!(rebuilt, p);
    }

    #[test]
    fn structure_test_agrees_with_avoidance(p in perm_up_to(10)) {
        prop_assert_eq!(check_structure(&p).holds(), p.avoids(&PatternClass::Pi5.patterns()));
    }

    #[test]
    fn phi_roundtrip_on_random_avoiders(p in perm_up_to(9)) {
        prop_assume!(!p.is_empty() && p.avoids(&schroder_pair()));
        let path = phi(&p).unwrap();
        prop_assert_eq!(path.size(), p.len() - 1);
        prop_assert_eq!(phi_inverse(&path).unwrap(), p);
    }

    #[test]
    fn phi_inverse_roundtrip_on_paths(n in 0..=7usize, pick in any::<prop::sample::Index>()) {
        let paths = enumerate_paths(n, SizeGuard::default()).unwrap();
        let path = &paths[pick.index(paths.len())];
        let p = phi_inverse(path).unwrap();
        prop_assert!(p.avoids(&schroder_pair()));
        prop_assert_eq!(&phi(&p).unwrap(), path);
    }
}

#[test]
fn counting_sequences_are_symmetry_invariant() {
    for c in PatternClass::ALL {
        let base = counting_sequence(&c.patterns(), 7, SizeGuard::default()).unwrap();
        for g in Symmetry::all() {
            let image =
                counting_sequence(&g.apply_set(&c.patterns()), 7, SizeGuard::default()).unwrap();
            assert_eq!(image, base, "{c} under {g}");
        }
    }
}

#[test]
fn pruned_enumeration_matches_filtering_on_sampled_orbits() {
    let orbits: Vec<PatternSet> = triple_orbits().into_keys().collect();
    let step = orbits.len() / 50;
    let sample: Vec<&PatternSet> = orbits.iter().step_by(step).take(50).collect();
    assert_eq!(sample.len(), 50);
    for n in 0..=7 {
        let all: Vec<Permutation> = Permutation::all(n).collect();
        for set in &sample {
            let filtered: Vec<Permutation> =
                all.iter().filter(|p| p.avoids(set)).cloned().collect();
            assert_eq!(enumerate_avoiders(n, set), filtered, "{set} at n = {n}");
        }
    }
}

#[test]
fn orbit_bookkeeping() {
    let orbits = triple_orbits();
    assert_eq!(orbits.values().sum::<usize>(), 2024);
    for (rep, &size) in &orbits {
        assert_eq!(rep.orbit().len(), size);
        assert_eq!(8 % size, 0);
        assert_eq!(&rep.canonical(), rep);
    }
}
