use std::collections::BTreeSet;

use proptest::prelude::*;

use schurlab::arith;
use schurlab::autocorrelation::{autocorr_vector, check_divisibility, cross_correlation, decimation_diagram_check};
use schurlab::codes::{self, CodeSet};
use schurlab::gf2;
use schurlab::perm_groups::{self, build_group, PermGroupSpec};
use schurlab::schur_ring;
use schurlab::word::{parse_word, render_word, Word};

fn word_of_len(n: usize) -> impl Strategy<Value = Word> {
    let top = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    (0..=top).prop_map(move |m| Word::new(n, m).unwrap())
}

fn any_word() -> impl Strategy<Value = Word> {
    (1usize..=64).prop_flat_map(word_of_len)
}

fn word_pair() -> impl Strategy<Value = (Word, Word)> {
    (1usize..=64).prop_flat_map(|n| (word_of_len(n), word_of_len(n)))
}

fn word_and_unit() -> impl Strategy<Value = (Word, i64)> {
    (2usize..=40).prop_flat_map(|n| {
        let us: Vec<i64> = arith::units(n as u64).into_iter().map(|a| a as i64).collect();
        (word_of_len(n), proptest::sample::select(us))
    })
}

proptest! {
    #[test]
    fn text_round_trip(x in any_word()) {
        prop_assert_eq!(parse_word(&render_word(&x)).unwrap(), x);
        prop_assert_eq!(render_word(&x).len(), x.len());
    }

    #[test]
    fn json_round_trip(x in any_word()) {
        let s = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Word>(&s).unwrap(), x);
    }

    #[test]
    fn group_axioms((x, y) in word_pair()) {
        let one = Word::identity(x.len()).unwrap();
        prop_assert_eq!(x.mul(&one).unwrap(), x);
        prop_assert!(x.mul(&x).unwrap().is_identity());
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
        prop_assert_eq!(x.weight() + x.minus_count(), x.len());
        prop_assert_eq!(x.negate(), x.mul(&Word::minus_one(x.len()).unwrap()).unwrap());
    }

    #[test]
    fn symmetries_are_automorphisms((x, y) in word_pair(), k in -100i64..100) {
        let xy = x.mul(&y).unwrap();
        prop_assert_eq!(xy.cyclic_shift(k), x.cyclic_shift(k).mul(&y.cyclic_shift(k)).unwrap());
        prop_assert_eq!(xy.reverse(), x.reverse().mul(&y.reverse()).unwrap());
        prop_assert_eq!(x.cyclic_shift(k).weight(), x.weight());
        prop_assert_eq!(x.reverse().reverse(), x);
        prop_assert_eq!(x.cyclic_shift(k).cyclic_shift(-k), x);
        prop_assert_eq!(x.cyclic_shift(x.len() as i64), x);
    }

    #[test]
    fn shift_reversal_relation(x in any_word(), i in 0i64..64) {
        let n = x.len() as i64;
        prop_assert_eq!(x.cyclic_shift(i).reverse(), x.reverse().cyclic_shift(n - i));
    }

    #[test]
    fn shift_decimation_relation((x, a) in word_and_unit(), i in 0i64..64) {
        let n = x.len() as u64;
        let inv = arith::mod_inverse(a, n).unwrap() as i64;
        prop_assert_eq!(x.cyclic_shift(i).decimate(a).unwrap(), x.decimate(a).unwrap().cyclic_shift(i * inv));
        prop_assert_eq!(x.decimate(a).unwrap().weight(), x.weight());
        prop_assert_eq!(x.decimate(a).unwrap().decimate(inv).unwrap(), x);
    }

    #[test]
    fn correlation_identities((x, a) in word_and_unit()) {
        let t = autocorr_vector(&x);
        let n = x.len();
        prop_assert_eq!(t.values[0], n as i64);
        for k in 1..n {
            prop_assert_eq!(t.values[k], t.values[n - k]);
        }
        prop_assert_eq!(&autocorr_vector(&x.negate()), &t);
        prop_assert_eq!(&autocorr_vector(&x.cyclic_shift(3)), &t);
        prop_assert!(check_divisibility(&x));
        prop_assert!(decimation_diagram_check(&x, a).unwrap());
        let total: i64 = t.values.iter().sum();
        let s = n as i64 - 2 * x.minus_count() as i64;
        prop_assert_eq!(total, s * s);
    }

    #[test]
    fn cross_correlation_bounds((x, y) in word_pair(), k in -70i64..70) {
        let p = cross_correlation(&x, &y, k).unwrap();
        prop_assert!(p.abs() <= x.len() as i64);
        prop_assert_eq!((x.len() as i64 - p) % 2, 0);
        prop_assert_eq!(p, cross_correlation(&y, &x, -k).unwrap());
    }

    #[test]
    fn rank_matches_oracle(n in 1usize..=12, masks in proptest::collection::vec(1u64..4096, 1..10)) {
        let full = (1u64 << n) - 1;
        let words: BTreeSet<Word> = masks.iter().map(|m| m & full).filter(|&m| m != 0).map(|m| Word::new(n, m).unwrap()).collect();
        prop_assume!(!words.is_empty());
        let c = CodeSet::new(n, words.into_iter().collect()).unwrap();
        prop_assert_eq!(codes::is_code(&c), codes::is_code_oracle(&c).unwrap());
        let span = codes::generated_subgroup(&c).unwrap();
        let r = gf2::rank(&c.words().iter().map(Word::mask).collect::<Vec<_>>());
        prop_assert_eq!(span.len(), 1usize << r);
        prop_assert_eq!(codes::is_code(&c), r == c.len());
    }

    #[test]
    fn witness_is_a_real_double_factorization(n in 2usize..=10, masks in proptest::collection::vec(1u64..1024, 2..12)) {
        let full = (1u64 << n) - 1;
        let words: BTreeSet<Word> = masks.iter().map(|m| m & full).filter(|&m| m != 0).map(|m| Word::new(n, m).unwrap()).collect();
        let c = CodeSet::new(n, words.into_iter().collect()).unwrap();
        for w in [codes::check_code(&c).err(), codes::check_code_oracle(&c).unwrap().err()].into_iter().flatten() {
            prop_assert_ne!(&w.left, &w.right);
            let prod = |ix: &[usize]| Word::product(n, ix.iter().map(|&i| &c.words()[i])).unwrap();
            prop_assert_eq!(prod(&w.left), w.word);
            prop_assert_eq!(prod(&w.right), w.word);
        }
    }

    #[test]
    fn structure_constants_are_symmetric_and_count(n in 1usize..=30, i in 0usize..=30, j in 0usize..=30) {
        let (i, j) = (i % (n + 1), j % (n + 1));
        let mut total = 0u128;
        for k in 0..=n {
            let l = schur_ring::lambda_formula(n, i, j, k);
            prop_assert_eq!(l, schur_ring::lambda_formula(n, j, i, k));
            total += l * arith::binomial(n as i64, k as i64);
        }
        prop_assert_eq!(total, arith::binomial(n as i64, i as i64) * arith::binomial(n as i64, j as i64));
    }
}

#[test]
fn orbits_partition_the_space() {
    for name in ["sn", "cn", "dn", "hn", "hc", "dc", "hdc"] {
        for n in 2..=9 {
            let g = build_group(&PermGroupSpec::from_short_name(name, n).unwrap()).unwrap();
            let p = perm_groups::partition(n, &g).unwrap();
            let total: usize = p.orbits().iter().map(Vec::len).sum();
            assert_eq!(total, 1 << n, "{name} n={n}");
            assert_eq!(p.orbits()[p.orbit_index(&Word::identity(n).unwrap())].len(), 1);
            p.validate_axioms(Some(2000)).unwrap();
        }
    }
}

#[test]
fn necklace_count_matches_burnside() {
    for n in 1..=14usize {
        let g = build_group(&PermGroupSpec::cyclic(n).unwrap()).unwrap();
        let orbits = perm_groups::partition(n, &g).unwrap().len() as u64;
        let burnside: u64 = arith::divisors(n as u64)
            .into_iter()
            .map(|d| arith::phi(n as u64 / d) * (1u64 << d))
            .sum::<u64>()
            / n as u64;
        assert_eq!(orbits, burnside, "n={n}");
    }
}
