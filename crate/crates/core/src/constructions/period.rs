//! Cyclic periods, the arithmetic-progression codes 𝒳_{F,d} and the period
//! subgroups 𝔾_d(n).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::arith;
use crate::codes::{self, CodeSet};
use crate::error::{Error, Result};
use crate::word::{self, Word};
use crate::Limits;

/// Least `d | n` with `Cᵈx = x`.
pub fn fundamental_period(x: &Word) -> usize {
    let n = x.len();
    arith::divisors(n as u64)
        .into_iter()
        .map(|d| d as usize)
        .find(|&d| x.cyclic_shift(d as i64) == *x)
        .expect("n itself is a period")
}

/// Words of Z₂ⁿ grouped by fundamental period.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodDecomposition {
    pub n: usize,
    /// F_d for every divisor d, each sorted by mask.
    pub classes: BTreeMap<usize, Vec<Word>>,
}

pub fn period_decomposition(n: usize) -> Result<PeriodDecomposition> {
    if n == 0 || n > word::MAX_LEN {
        return Err(Error::InvalidLength(n));
    }
    Limits::default().check_n(n)?;
    let mut classes: BTreeMap<usize, Vec<Word>> = arith::divisors(n as u64)
        .into_iter()
        .map(|d| (d as usize, Vec::new()))
        .collect();
    for w in word::all_words(n) {
        classes.get_mut(&fundamental_period(&w)).expect("divisor").push(w);
    }
    Ok(PeriodDecomposition { n, classes })
}

/// |F_d| = Σ_{r | d} μ(d/r)·2^r, computed without touching any word.
pub fn mobius_period_count(d: usize) -> i128 {
    arith::divisors(d as u64)
        .into_iter()
        .map(|r| arith::mobius(d as u64 / r) as i128 * (1i128 << r))
        .sum()
}

fn check_divisor(n: usize, d: usize) -> Result<()> {
    if n == 0 || n > word::MAX_LEN {
        return Err(Error::InvalidLength(n));
    }
    if d == 0 || !n.is_multiple_of(d) {
        return Err(Error::NotDivisor { d, n });
    }
    Ok(())
}

/// Position of the single `-` of a word in 𝒢ₙ(n−1).
pub(crate) fn base_position(base: &Word) -> Result<usize> {
    if base.minus_count() != 1 {
        return Err(Error::NotBaseWord(base.to_string()));
    }
    Ok(base.mask().trailing_zeros() as usize)
}

/// 𝒳_{F,d} with base X₀ = `-+⋯+`.
pub fn xfd_code(n: usize, d: usize) -> Result<CodeSet> {
    check_divisor(n, d)?;
    xfd_code_with_base(n, d, &Word::unit(n, 0)?)
}

/// 𝒳_{F,d} = {A_{i,d}X : 0 ≤ i < d} with A_{i,d}X = CⁱX·C^{i+d}X⋯C^{i+n−d}X.
pub fn xfd_code_with_base(n: usize, d: usize, base: &Word) -> Result<CodeSet> {
    check_divisor(n, d)?;
    if base.len() != n {
        return Err(Error::LengthMismatch {
            left: n,
            right: base.len(),
        });
    }
    base_position(base)?;
    let words = (0..d)
        .map(|i| {
            let factors: Vec<Word> = (0..n / d)
                .map(|j| base.cyclic_shift((i + j * d) as i64))
                .collect();
            Word::product(n, &factors)
        })
        .collect::<Result<Vec<_>>>()?;
    CodeSet::new(n, words)
}

/// 𝔾_d(n) = 𝒳_{F,d}*, sorted by mask.
pub fn g_subgroup(n: usize, d: usize) -> Result<Vec<Word>> {
    codes::generated_subgroup(&xfd_code(n, d)?)
}

/// Words whose fundamental period divides `d`, by scanning Z₂ⁿ.
pub fn g_subgroup_by_scan(n: usize, d: usize) -> Result<Vec<Word>> {
    check_divisor(n, d)?;
    Limits::default().check_n(n)?;
    Ok(word::all_words(n)
        .filter(|w| w.cyclic_shift(d as i64) == *w)
        .collect())
}

/// Covering pairs `(d, d')` of the divisor lattice of `n`: `d | d'`, `d ≠ d'`,
/// and no divisor strictly between. Sorted.
pub fn g_lattice(n: usize) -> Vec<(usize, usize)> {
    let divs: Vec<usize> = arith::divisors(n as u64).into_iter().map(|d| d as usize).collect();
    let mut edges = Vec::new();
    for &d in &divs {
        for &e in &divs {
            if e == d || e % d != 0 {
                continue;
            }
            let between = divs.iter().any(|&m| m != d && m != e && m % d == 0 && e % m == 0);
            if !between {
                edges.push((d, e));
            }
        }
    }
    edges.sort();
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn periods() {
        assert_eq!(fundamental_period(&w("+++++")), 1);
        assert_eq!(fundamental_period(&w("-++-++-++")), 3);
        for x in word::weight_class(8, 7).unwrap() {
            assert_eq!(fundamental_period(&x), 8);
        }
    }

    #[test]
    fn xfd_small_cases() {
        let c = xfd_code(6, 1).unwrap();
        assert_eq!(c.words(), &[w("------")]);
        assert_eq!(g_subgroup(6, 1).unwrap(), vec![w("++++++"), w("------")]);
        let c = xfd_code(5, 5).unwrap();
        assert_eq!(c.sorted_words(), word::weight_class(5, 4).unwrap());
        assert_eq!(xfd_code(9, 4), Err(Error::NotDivisor { d: 4, n: 9 }));
    }

    #[test]
    fn g39_example() {
        let mut expected: Vec<Word> = [
            "+++++++++", "---------", "-++-++-++", "++-++-++-",
            "+-++-++-+", "-+--+--+-", "--+--+--+", "+--+--+--",
        ]
        .iter()
        .map(|s| w(s))
        .collect();
        expected.sort();
        assert_eq!(xfd_code(9, 3).unwrap().len(), 3);
        assert_eq!(g_subgroup(9, 3).unwrap(), expected);
    }

    #[test]
    fn lattice_of_twelve() {
        assert_eq!(
            g_lattice(12),
            vec![(1, 2), (1, 3), (2, 4), (2, 6), (3, 6), (4, 12), (6, 12)]
        );
        let g2 = g_subgroup(12, 2).unwrap();
        let g4 = g_subgroup(12, 4).unwrap();
        assert!(g2.iter().all(|x| g4.binary_search(x).is_ok()));
    }

    #[test]
    fn mobius_counts() {
        assert_eq!(mobius_period_count(1), 2);
        assert_eq!(mobius_period_count(3), 6);
        assert_eq!(mobius_period_count(4), 12);
    }
}
