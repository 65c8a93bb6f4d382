//! Periodic correlation of ±1 sequences and the search for sequences with
//! 2-level autocorrelation.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::word::{self, Word};

/// P_{X,Y}(k) = Σ xᵢ y_{i+k} = n − 2·#{i : xᵢ ≠ y_{i+k}}.
pub fn cross_correlation(x: &Word, y: &Word, k: i64) -> Result<i64> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(correlation_unchecked(x, y, k))
}

#[inline]
fn correlation_unchecked(x: &Word, y: &Word, k: i64) -> i64 {
    let diff = (x.mask() ^ y.cyclic_shift(k).mask()).count_ones() as i64;
    x.len() as i64 - 2 * diff
}

/// θ(X) = (P_X(0), …, P_X(n−1)).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AutocorrVector {
    pub n: usize,
    pub values: Vec<i64>,
}

impl AutocorrVector {
    /// The common off-peak value when it is constant (n ≥ 2).
    pub fn off_peak(&self) -> Option<i64> {
        let (&first, rest) = self.values.get(1..)?.split_first()?;
        rest.iter().all(|&v| v == first).then_some(first)
    }
}

pub fn autocorr_vector(x: &Word) -> AutocorrVector {
    AutocorrVector {
        n: x.len(),
        values: (0..x.len() as i64).map(|k| correlation_unchecked(x, x, k)).collect(),
    }
}

/// Checks that n − P_X(k) is divisible by 4 and that P_X(k) = n − 4a + 4i_k
/// where `a` is the weight and `i_k` counts the `+` positions kept by the shift.
pub fn check_divisibility(x: &Word) -> bool {
    let n = x.len() as i64;
    let a = x.weight() as i64;
    let plus = !x.mask() & word::full_mask(x.len());
    autocorr_vector(x).values.iter().enumerate().all(|(k, &p)| {
        let shifted = Word::from_raw(x.len(), plus).cyclic_shift(k as i64).mask();
        let i_k = (plus & shifted).count_ones() as i64;
        (n - p) % 4 == 0 && p == n - 4 * a + 4 * i_k && (0..=a).contains(&i_k)
    })
}

/// θ(δₐX)[k] = θ(X)[k·a mod n] for every k.
pub fn decimation_diagram_check(x: &Word, a: i64) -> Result<bool> {
    let y = x.decimate(a)?;
    let n = x.len() as i64;
    let tx = autocorr_vector(x);
    let ty = autocorr_vector(&y);
    Ok((0..n).all(|k| ty.values[k as usize] == tx.values[(k * a).rem_euclid(n) as usize]))
}

/// Histogram of the weights of Y·CᵏY over k = 0..n−1.
pub fn square_orbit_profile(y: &Word) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for k in 0..y.len() as i64 {
        *out.entry(Word::from_raw(y.len(), y.mask() ^ y.cyclic_shift(k).mask()).weight())
            .or_insert(0) += 1;
    }
    out
}

/// One equivalence class of 2-level sequences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoLevelClass {
    pub n: usize,
    /// Least mask in the orbit under shifts, reversal, decimations and negation.
    pub representative: Word,
    /// Weight of the representative.
    pub weight: usize,
    pub off_peak: i64,
    pub orbit_size: usize,
}

pub const SEARCH_MAX_N: usize = 28;

/// Symmetry orbit used by the 2-level search.
pub fn symmetry_orbit(x: &Word) -> Vec<Word> {
    let n = x.len();
    let units: Vec<u64> = arith::units(n as u64).into_iter().filter(|&a| a > 1).collect();
    let mut seen: HashSet<Word> = HashSet::from([*x]);
    let mut queue = VecDeque::from([*x]);
    while let Some(y) = queue.pop_front() {
        let mut next = vec![y.cyclic_shift(1), y.reverse(), y.negate()];
        for &a in &units {
            next.push(y.decimate(a as i64).expect("unit"));
        }
        for z in next {
            if seen.insert(z) {
                queue.push_back(z);
            }
        }
    }
    let mut out: Vec<Word> = seen.into_iter().collect();
    out.sort();
    out
}

/// All classes of words of length `n` whose off-peak autocorrelation is
/// constant. Only minus-counts `p` with `(n − 2p)² = n + (n−1)·d` for an
/// integer `d` can qualify, since Σ_k P_X(k) = (Σ xᵢ)².
pub fn search_two_level(n: usize) -> Result<Vec<TwoLevelClass>> {
    if n < 2 {
        return Err(Error::InvalidLength(n));
    }
    if n > SEARCH_MAX_N {
        return Err(Error::CapExceeded {
            what: "word length for 2-level search",
            value: n,
            cap: SEARCH_MAX_N,
        });
    }
    let ni = n as i64;
    let mut reps: BTreeSet<Word> = BTreeSet::new();
    let mut covered: HashSet<u64> = HashSet::new();
    let mut classes = Vec::new();
    for p in 0..=n {
        let s = (ni - 2 * p as i64).pow(2) - ni;
        if s % (ni - 1) != 0 {
            continue;
        }
        let d = s / (ni - 1);
        let is_hit = |m: u64| {
            let x = Word::from_raw(n, m);
            (1..ni).all(|k| correlation_unchecked(&x, &x, k) == d)
        };
        let hits: Vec<u64> = if p <= 1 {
            // p = 0 is the all-plus word; otherwise position 0 is a `-`
            // in some rotation of every candidate
            let m = if p == 0 { 0 } else { 1 };
            if is_hit(m) { vec![m] } else { Vec::new() }
        } else {
            sharded_hits(n, p, &is_hit)
        };
        for m in hits {
            if covered.contains(&m) {
                continue;
            }
            let orbit = symmetry_orbit(&Word::from_raw(n, m));
            covered.extend(orbit.iter().map(Word::mask));
            let rep = orbit[0];
            if reps.insert(rep) {
                classes.push(TwoLevelClass {
                    n,
                    representative: rep,
                    weight: rep.weight(),
                    off_peak: d,
                    orbit_size: orbit.len(),
                });
            }
        }
    }
    classes.sort_by_key(|c| c.representative);
    Ok(classes)
}

/// Masks with `p` minus signs, bit 0 set, passing `is_hit`, in ascending
/// order. The p−1 free bits are sharded by their highest set bit and the
/// shards are scanned on worker threads.
fn sharded_hits(n: usize, p: usize, is_hit: &(dyn Fn(u64) -> bool + Sync)) -> Vec<u64> {
    let shards: Vec<usize> = (p - 2..n - 1).collect();
    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism().map_or(1, |w| w.get()).min(shards.len());
    let mut hits: Vec<u64> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                scope.spawn(|| {
                    let mut found = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some(&top) = shards.get(i) else { break };
                        for low in word::masks_with_popcount(top, p - 2) {
                            let m = ((1u64 << top) | low) << 1 | 1;
                            if is_hit(m) {
                                found.push(m);
                            }
                        }
                    }
                    found
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("search worker panicked"))
            .collect()
    });
    hits.sort_unstable();
    hits
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(x: &Word, y: &Word, k: usize) -> i64 {
        let n = x.len();
        let s = |w: &Word, i: usize| if w.is_minus(i % n) { -1 } else { 1 };
        (0..n).map(|i| s(x, i) * s(y, i + k)).sum()
    }

    #[test]
    fn matches_naive_sum() {
        let xs: Vec<Word> = word::all_words(6).collect();
        for x in &xs {
            for y in xs.iter().step_by(7) {
                for k in 0..6 {
                    assert_eq!(cross_correlation(x, y, k as i64).unwrap(), naive(x, y, k));
                }
            }
        }
    }

    #[test]
    fn table_vectors() {
        let x = Word::unit(9, 0).unwrap();
        assert_eq!(autocorr_vector(&x).values, [vec![9], vec![5; 8]].concat());
        let m7 = Word::from_minus_positions(7, [6, 5, 3]).unwrap();
        assert_eq!(autocorr_vector(&m7).off_peak(), Some(-1));
        let d13 = Word::from_minus_positions(13, [0, 12, 10, 4]).unwrap();
        assert_eq!(autocorr_vector(&d13).off_peak(), Some(1));
    }

    #[test]
    fn identity_and_divisibility() {
        let one = Word::identity(5).unwrap();
        assert!(check_divisibility(&one));
        for k in 0..5 {
            let y = Word::new(5, 0b10110).unwrap();
            assert_eq!(cross_correlation(&one, &y, k).unwrap(), -1);
        }
    }

    #[test]
    fn diagram_rejects_non_units() {
        let x = Word::new(6, 0b1011).unwrap();
        assert!(decimation_diagram_check(&x, 3).is_err());
        assert!(decimation_diagram_check(&x, 5).unwrap());
    }

    #[test]
    fn search_small() {
        let found = search_two_level(7).unwrap();
        let m7 = Word::from_minus_positions(7, [6, 5, 3]).unwrap();
        let rep = symmetry_orbit(&m7)[0];
        assert!(found.iter().any(|c| c.representative == rep && c.off_peak == -1));
        assert!(found.iter().any(|c| c.off_peak == 3 && c.orbit_size == 14));
        assert!(search_two_level(29).is_err());
    }

    #[test]
    fn sharded_scan_matches_plain_scan() {
        let n = 12;
        for p in 2..=n {
            let is_hit = |m: u64| m.count_ones() % 3 == 0 && m & 0b110 != 0;
            let plain: Vec<u64> = word::masks_with_popcount(n - 1, p - 1)
                .map(|m| m << 1 | 1)
                .filter(|&m| is_hit(m))
                .collect();
            assert_eq!(sharded_hits(n, p, &is_hit), plain);
        }
    }
}
