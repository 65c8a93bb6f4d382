//! Symmetric (reversal-fixed) words and their codes.

use crate::codes::{self, CodeSet};
use crate::error::{Error, Result};
use crate::word::{self, Word};
use crate::Limits;

use super::period::base_position;

/// Default base: the centred `+⋯+-+⋯+` for odd n, `+⋯+-` for even n.
pub fn sym_base(n: usize) -> Result<Word> {
    if n % 2 == 1 {
        Word::unit(n, (n - 1) / 2)
    } else {
        Word::unit(n, n.saturating_sub(1))
    }
}

/// 𝒳_{Sym} with the default base.
///
/// Odd n: X and CⁱXC^{n−i}X for 1 ≤ i ≤ (n−1)/2. Even n: CⁱXC^{n−1−i}X for
/// 0 ≤ i ≤ (n−2)/2. Every codeword is fixed by R.
pub fn sym_code(n: usize) -> Result<CodeSet> {
    if n < 2 {
        return Err(Error::InvalidLength(n));
    }
    sym_code_with_base(n, &sym_base(n)?)
}

/// The same construction from any base of 𝒢ₙ(n−1). With the `-` of the
/// base at `c` the codewords are fixed by the reflection `j ↦ 2c − j`
/// (odd n) or `j ↦ 2c + 1 − j` (even n) instead of R.
pub fn sym_code_with_base(n: usize, base: &Word) -> Result<CodeSet> {
    if n < 2 {
        return Err(Error::InvalidLength(n));
    }
    if base.len() != n {
        return Err(Error::LengthMismatch {
            left: n,
            right: base.len(),
        });
    }
    base_position(base)?;
    let pair = |i: usize, j: usize| base.cyclic_shift(i as i64).mul(&base.cyclic_shift(j as i64));
    let words = if n % 2 == 1 {
        std::iter::once(Ok(*base))
            .chain((1..=(n - 1) / 2).map(|i| pair(i, n - i)))
            .collect::<Result<Vec<_>>>()?
    } else {
        (0..n / 2).map(|i| pair(i, n - 1 - i)).collect::<Result<Vec<_>>>()?
    };
    CodeSet::new(n, words)
}

/// Words with `RY = Y`, by scanning Z₂ⁿ.
pub fn sym_subgroup_by_scan(n: usize) -> Result<Vec<Word>> {
    Limits::default().check_n(n)?;
    if n == 0 || n > word::MAX_LEN {
        return Err(Error::InvalidLength(n));
    }
    Ok(word::all_words(n).filter(|w| w.reverse() == *w).collect())
}

/// Sym(Z₂ⁿ), from the code and by scanning; the two must agree.
pub fn sym_subgroup(n: usize) -> Result<Vec<Word>> {
    let scanned = sym_subgroup_by_scan(n)?;
    if n == 1 {
        return Ok(scanned);
    }
    let generated = codes::generated_subgroup(&sym_code(n)?)?;
    if generated != scanned {
        return Err(Error::ConstructionMismatch(format!(
            "symmetric subgroup n={n}: code generates {} words, scan finds {}",
            generated.len(),
            scanned.len()
        )));
    }
    Ok(generated)
}
