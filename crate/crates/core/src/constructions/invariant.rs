//! Cyclotomic cosets and the decimation-invariant subgroups 𝕀ₙ(a).

use serde::Serialize;

use crate::arith;
use crate::codes::{self, CodeSet};
use crate::error::{Error, Result};
use crate::word::{self, Word};
use crate::Limits;

use super::period::base_position;

/// The orbits of `x ↦ a·x` on Z_n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclotomicCosets {
    pub n: usize,
    pub a: usize,
    /// Cosets ordered by least element, each listed as `[s, sa, sa², …]`
    /// starting from its least element `s`.
    pub cosets: Vec<Vec<usize>>,
    /// Least elements of the nonzero cosets.
    pub representatives: Vec<usize>,
}

impl CyclotomicCosets {
    /// Number of nonzero cosets (the `r` of the order formula 2^{r+1}).
    pub fn nonzero_count(&self) -> usize {
        self.representatives.len()
    }
}

fn unit_mod(n: usize, a: i64) -> Result<usize> {
    if n == 0 || n > word::MAX_LEN {
        return Err(Error::InvalidLength(n));
    }
    if !arith::is_unit(a, n as u64) {
        return Err(Error::NotUnit { a, n });
    }
    Ok(a.rem_euclid(n as i64) as usize)
}

pub fn cyclotomic_cosets(n: usize, a: i64) -> Result<CyclotomicCosets> {
    let a = unit_mod(n, a)?;
    let mut seen = vec![false; n];
    let mut cosets = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut coset = vec![s];
        seen[s] = true;
        let mut x = s * a % n;
        while x != s {
            seen[x] = true;
            coset.push(x);
            x = x * a % n;
        }
        cosets.push(coset);
    }
    let representatives = cosets.iter().skip(1).map(|c| c[0]).collect();
    Ok(CyclotomicCosets {
        n,
        a,
        cosets,
        representatives,
    })
}

/// The split of 𝒢ₙ(n−1) = {CⁱX₀} under Δₙ: the fixed word X₀, the shifts by
/// units, and the shifts by nonzero non-units.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaSplit {
    pub fixed: Word,
    pub units: Vec<Word>,
    pub non_units: Vec<Word>,
}

pub fn delta_partition_of_base(n: usize) -> Result<DeltaSplit> {
    if n < 2 {
        return Err(Error::DecimationNeedsTwo);
    }
    let x = Word::unit(n, 0)?;
    let (units, non_units): (Vec<usize>, Vec<usize>) =
        (1..n).partition(|&i| arith::gcd(i as u64, n as u64) == 1);
    let shifts = |is: Vec<usize>| {
        let mut v: Vec<Word> = is.into_iter().map(|i| x.cyclic_shift(i as i64)).collect();
        v.sort();
        v
    };
    Ok(DeltaSplit {
        fixed: x,
        units: shifts(units),
        non_units: shifts(non_units),
    })
}

/// 𝒳_{𝕀(a)} with base X₀: one codeword 𝖢_sX = ∏_{i ∈ 𝖢_s} CⁱX per coset,
/// starting with X itself.
pub fn invariant_code(n: usize, a: i64) -> Result<CodeSet> {
    invariant_code_with_base(n, a, &Word::unit(n, 0)?)
}

/// As [`invariant_code`] for an arbitrary base word of 𝒢ₙ(n−1). With the
/// `-` of the base at position `c`, the generated subgroup is the fixed
/// set of decimation about `c` (see [`Word::decimate_about`]).
pub fn invariant_code_with_base(n: usize, a: i64, base: &Word) -> Result<CodeSet> {
    let cos = cyclotomic_cosets(n, a)?;
    if base.len() != n {
        return Err(Error::LengthMismatch {
            left: n,
            right: base.len(),
        });
    }
    base_position(base)?;
    let words = cos
        .cosets
        .iter()
        .map(|coset| {
            let factors: Vec<Word> = coset.iter().map(|&i| base.cyclic_shift(i as i64)).collect();
            Word::product(n, &factors)
        })
        .collect::<Result<Vec<_>>>()?;
    CodeSet::new(n, words)
}

/// Fixed points of decimation by `a` about `pivot`, by scanning Z₂ⁿ.
pub fn invariant_subgroup_by_scan(n: usize, a: i64, pivot: usize) -> Result<Vec<Word>> {
    unit_mod(n, a)?;
    Limits::default().check_n(n)?;
    let mut out = Vec::new();
    for w in word::all_words(n) {
        if w.decimate_about(a, pivot)? == w {
            out.push(w);
        }
    }
    Ok(out)
}

/// 𝕀ₙ(a) = {Y : δₐY = Y}, computed from the code and by a fixed-point scan;
/// the two must agree, as must the order 2^{r+1}.
pub fn invariant_subgroup(n: usize, a: i64) -> Result<Vec<Word>> {
    invariant_subgroup_with_base(n, a, &Word::unit(n, 0)?)
}

pub fn invariant_subgroup_with_base(n: usize, a: i64, base: &Word) -> Result<Vec<Word>> {
    let code = invariant_code_with_base(n, a, base)?;
    let generated = codes::generated_subgroup(&code)?;
    let scanned = invariant_subgroup_by_scan(n, a, base_position(base)?)?;
    if generated != scanned {
        return Err(Error::ConstructionMismatch(format!(
            "invariant subgroup n={n} a={a}: code generates {} words, scan finds {}",
            generated.len(),
            scanned.len()
        )));
    }
    let r = cyclotomic_cosets(n, a)?.nonzero_count();
    if generated.len() != 1 << (r + 1) {
        return Err(Error::ConstructionMismatch(format!(
            "invariant subgroup n={n} a={a}: order {} but 2^(r+1) = {}",
            generated.len(),
            1usize << (r + 1)
        )));
    }
    Ok(generated)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosets_examples() {
        let c = cyclotomic_cosets(7, 3).unwrap();
        assert_eq!(c.cosets, vec![vec![0], vec![1, 3, 2, 6, 4, 5]]);
        assert_eq!(c.representatives, vec![1]);
        let c = cyclotomic_cosets(9, 8).unwrap();
        assert_eq!(c.cosets, vec![vec![0], vec![1, 8], vec![2, 7], vec![3, 6], vec![4, 5]]);
        assert_eq!(cyclotomic_cosets(6, 1).unwrap().cosets.len(), 6);
        assert_eq!(cyclotomic_cosets(6, 2), Err(Error::NotUnit { a: 2, n: 6 }));
    }

    #[test]
    fn delta_split_sizes() {
        let s = delta_partition_of_base(7).unwrap();
        assert_eq!((s.units.len(), s.non_units.len()), (6, 0));
        let s = delta_partition_of_base(6).unwrap();
        assert_eq!((s.units.len(), s.non_units.len()), (2, 3));
    }

    #[test]
    fn invariant_examples() {
        let i73 = invariant_subgroup(7, 3).unwrap();
        assert_eq!(i73.len(), 4);
        let c = invariant_code(7, 2).unwrap();
        let m_seq = Word::from_minus_positions(7, [6, 5, 3]).unwrap();
        assert!(c.words().contains(&m_seq));
        let i15 = invariant_subgroup(15, 4).unwrap();
        let row = Word::from_minus_positions(15, [0, 10, 8, 5, 4, 2, 1]).unwrap();
        assert!(i15.binary_search(&row).is_ok());
    }

    #[test]
    fn shifted_base_matches_pivoted_scan() {
        let base = Word::unit(9, 4).unwrap();
        for a in [2i64, 4, 5, 7, 8] {
            let g = invariant_subgroup_with_base(9, a, &base).unwrap();
            assert!(g.iter().all(|w| w.decimate_about(a, 4).unwrap() == *w));
        }
    }
}
