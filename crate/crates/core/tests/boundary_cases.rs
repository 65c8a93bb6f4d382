//! Instances where a natural strengthening of a statement fails. Each test
//! pins the counterexample so that a regression in either direction shows up.

use std::collections::{BTreeMap, BTreeSet};

use schurlab::autocorrelation::square_orbit_profile;
use schurlab::codes::{self, CodeSet};
use schurlab::constructions::{
    fundamental_period, invariant_code, invariant_subgroup, invariant_subgroup_with_base,
    run_theorem, shift_closure, sym_base, sym_subgroup, theorems::Status,
};
use schurlab::perm_groups::{build_group, PermGroupSpec};
use schurlab::schur_ring::{self, CompleteSSetQuery};
use schurlab::word::{self, Word};

#[test]
fn odd_length_freeness_breaks_at_fifteen() {
    let y = Word::new(15, 443).unwrap();
    assert_eq!(fundamental_period(&y), 15);
    let z = y.mul(&y.cyclic_shift(3)).unwrap();
    assert_eq!(z, Word::new(15, 12684).unwrap());
    assert_eq!(fundamental_period(&z), 5);
    for n in [5, 7, 9, 11] {
        assert_eq!(run_theorem("odd_length_freeness", n).unwrap().status, Status::Pass);
    }
}

#[test]
fn complete_sset_with_all_parities_present() {
    // weights 1 and 3 cover weight 6 in every pairwise product, and the set
    // cannot be extended, yet they generate all of Z₂⁸
    let q = CompleteSSetQuery {
        n: 8,
        candidate: BTreeSet::from([1, 3]),
        target: 6,
    };
    assert!(schur_ring::is_complete_sset(&q).unwrap().complete);
    let support = schur_ring::generated_weight_support(8, &q.candidate).unwrap();
    assert_eq!(support, (0..=8).collect());
    assert!(schur_ring::find_complete_ssets(8, 6).unwrap().contains(&q.candidate));
}

#[test]
fn singleton_weight_classes_are_complete() {
    let found = schur_ring::find_complete_ssets(6, 6).unwrap();
    assert!(found.iter().any(|s| s.len() == 1));
    let empty = CompleteSSetQuery {
        n: 6,
        candidate: BTreeSet::new(),
        target: 6,
    };
    assert!(!schur_ring::is_complete_sset(&empty).unwrap().complete);
}

#[test]
fn weight_one_class_is_symmetric_code_only_for_even_n() {
    let sn = |n| build_group(&PermGroupSpec::symmetric(n).unwrap()).unwrap();
    for n in 2..=8 {
        let class = CodeSet::new(n, word::weight_class(n, 1).unwrap()).unwrap();
        assert_eq!(codes::is_g_code(&class, &sn(n)).unwrap(), n % 2 == 0, "n={n}");
    }
}

#[test]
fn square_of_near_base_class_is_not_a_multiple() {
    // the per-word profile holds, but the algebra square has three classes
    let n = 7;
    let g = word::weight_class(n, n - 2).unwrap();
    let sq = schur_ring::algebra_mul(
        &schur_ring::simple_quantity(&g).unwrap(),
        &schur_ring::simple_quantity(&g).unwrap(),
    )
    .unwrap();
    let mut by_weight: BTreeMap<usize, BTreeSet<i64>> = BTreeMap::new();
    for (w, &c) in sq.terms() {
        by_weight.entry(w.weight()).or_default().insert(c);
    }
    assert_eq!(by_weight[&7], BTreeSet::from([21]));
    assert_eq!(by_weight[&5], BTreeSet::from([2 * 5]));
    assert_eq!(by_weight[&3], BTreeSet::from([6]));
    let y = g[0];
    assert_eq!(square_orbit_profile(&y), BTreeMap::from([(7, 1), (5, 2), (3, 4)]));
    // antipodal words at even length fall outside the profile
    let anti = Word::from_minus_positions(8, [0, 4]).unwrap();
    assert_ne!(square_orbit_profile(&anti), BTreeMap::from([(8, 1), (6, 2), (4, 5)]));
}

#[test]
fn second_table_word_is_fixed_by_two_not_three() {
    let w = Word::from_minus_positions(7, [6, 5, 3]).unwrap();
    assert_eq!(w.decimate(2).unwrap(), w);
    assert_ne!(w.decimate(3).unwrap(), w);
    assert!(invariant_code(7, 2).unwrap().words().contains(&w));
    assert!(invariant_subgroup(7, 3).unwrap().binary_search(&w).is_err());
}

#[test]
fn symmetric_subgroup_needs_centred_base() {
    for m in 1..=5usize {
        let n = 2 * m + 1;
        let sym = sym_subgroup(n).unwrap();
        let centred = invariant_subgroup_with_base(n, n as i64 - 1, &sym_base(n).unwrap()).unwrap();
        assert_eq!(sym, centred);
        let leading = invariant_subgroup(n, n as i64 - 1).unwrap();
        assert_ne!(sym, leading);
        let mut moved: Vec<Word> = leading.iter().map(|w| w.cyclic_shift(-(m as i64))).collect();
        moved.sort();
        assert_eq!(moved, sym);
    }
}

#[test]
fn orbit_closed_sets_need_not_be_subgroups() {
    let sym_c = shift_closure(&sym_subgroup(7).unwrap());
    let closed = sym_c
        .iter()
        .all(|x| sym_c.iter().all(|y| sym_c.binary_search(&x.mul(y).unwrap()).is_ok()));
    assert!(!closed);
}
