//! ±1 sequences of length `n` as elements of Z₂ⁿ.
//!
//! A [`Word`] stores its components as a bitmask where bit `i` is set iff
//! component `i` is `-`. The all-plus word **1** is the zero mask, the group
//! product is XOR, and the unit generator Xᵢ (a single `-` at position `i`)
//! is bit `i`.
//!
//! The cyclic shift C moves every component one index down,
//! `C(x₀, x₁, …, x_{n-1}) = (x₁, x₂, …, x₀)`, so `CⁱX₀ = X_{(n-i) mod n}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

pub const MAX_LEN: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawWord")]
pub struct Word {
    n: u8,
    mask: u64,
}

#[derive(Deserialize)]
struct RawWord {
    n: usize,
    mask: u64,
}

impl TryFrom<RawWord> for Word {
    type Error = Error;

    fn try_from(raw: RawWord) -> Result<Self> {
        Word::new(raw.n, raw.mask)
    }
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_len(n: usize) -> Result<()> {
    if n == 0 || n > MAX_LEN {
        return Err(Error::InvalidLength(n));
    }
    Ok(())
}

impl Word {
    pub fn new(n: usize, mask: u64) -> Result<Self> {
        check_len(n)?;
        if mask & !full_mask(n) != 0 {
            return Err(Error::MaskOutOfRange { n, mask });
        }
        Ok(Self { n: n as u8, mask })
    }

    /// Caller guarantees `1 <= n <= 64` and no bits at or above `n`.
    #[inline]
    pub(crate) fn from_raw(n: usize, mask: u64) -> Self {
        debug_assert!((1..=MAX_LEN).contains(&n) && mask & !full_mask(n) == 0);
        Self { n: n as u8, mask }
    }

    /// The identity **1** = `++…+`.
    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    /// −**1** = `--…-`.
    pub fn minus_one(n: usize) -> Result<Self> {
        Self::new(n, full_mask(n))
    }

    /// The generator Xᵢ: a single `-` at position `i`.
    pub fn unit(n: usize, i: usize) -> Result<Self> {
        check_len(n)?;
        if i >= n {
            return Err(Error::OutOfRange { value: i, max: n - 1 });
        }
        Ok(Self::from_raw(n, 1 << i))
    }

    /// Word whose `-` components sit exactly at `positions` (reduced mod n).
    pub fn from_minus_positions<I: IntoIterator<Item = usize>>(n: usize, positions: I) -> Result<Self> {
        check_len(n)?;
        let mask = positions.into_iter().fold(0u64, |m, p| m | 1 << (p % n));
        Ok(Self::from_raw(n, mask))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n as usize
    }

    /// Always false; a word has length at least one.
    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.mask
    }

    #[inline]
    pub fn is_identity(&self) -> bool {
        self.mask == 0
    }

    /// True iff component `i` is `-`.
    #[inline]
    pub fn is_minus(&self, i: usize) -> bool {
        self.mask >> i & 1 == 1
    }

    /// Positions of the `-` components, ascending.
    pub fn minus_positions(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_minus(i)).collect()
    }

    /// Componentwise product (XOR of masks).
    pub fn mul(&self, other: &Word) -> Result<Word> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Self::from_raw(self.len(), self.mask ^ other.mask))
    }

    /// Number of `+` components.
    #[inline]
    pub fn weight(&self) -> usize {
        self.len() - self.minus_count()
    }

    #[inline]
    pub fn minus_count(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// Cᵏ: `result_i = x_{(i+k) mod n}`; negative `k` is reduced mod n.
    pub fn cyclic_shift(&self, k: i64) -> Word {
        let n = self.len();
        let k = k.rem_euclid(n as i64) as u32;
        if k == 0 {
            return *self;
        }
        let mask = if n == 64 {
            self.mask.rotate_right(k)
        } else {
            ((self.mask >> k) | (self.mask << (n as u32 - k))) & full_mask(n)
        };
        Self::from_raw(n, mask)
    }

    /// R: `result_i = x_{n-1-i}`.
    pub fn reverse(&self) -> Word {
        let n = self.len();
        Self::from_raw(n, self.mask.reverse_bits() >> (64 - n))
    }

    /// δₐ: `result_i = x_{a·i mod n}`; `a` must be a unit mod n.
    pub fn decimate(&self, a: i64) -> Result<Word> {
        self.decimate_about(a, 0)
    }

    /// Decimation conjugated so that it fixes position `pivot`:
    /// `result_j = x_{pivot + a·(j − pivot) mod n}`. With `pivot = 0` this is δₐ.
    pub fn decimate_about(&self, a: i64, pivot: usize) -> Result<Word> {
        let n = self.len();
        if !arith::is_unit(a, n as u64) {
            return Err(Error::NotUnit { a, n });
        }
        let a = a.rem_euclid(n as i64) as usize;
        let pivot = pivot % n;
        let mut mask = 0u64;
        for j in 0..n {
            let src = (pivot + a * ((j + n - pivot) % n)) % n;
            mask |= (self.mask >> src & 1) << j;
        }
        Ok(Self::from_raw(n, mask))
    }

    /// Flip every component.
    pub fn negate(&self) -> Word {
        Self::from_raw(self.len(), !self.mask & full_mask(self.len()))
    }

    /// Product of the words in `words`; the identity when empty.
    pub fn product<'a, I: IntoIterator<Item = &'a Word>>(n: usize, words: I) -> Result<Word> {
        let mut acc = Self::identity(n)?;
        for w in words {
            acc = acc.mul(w)?;
        }
        Ok(acc)
    }
}

/// Render as a `+`/`-` string.
pub fn render_word(w: &Word) -> String {
    (0..w.len())
        .map(|i| if w.is_minus(i) { '-' } else { '+' })
        .collect()
}

/// Parse a `+`/`-` string. The Unicode minus sign `−` is accepted as `-`.
pub fn parse_word(text: &str) -> Result<Word> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut mask = 0u64;
    let mut n = 0usize;
    for (pos, ch) in text.chars().enumerate() {
        if pos >= MAX_LEN {
            return Err(Error::InvalidLength(text.chars().count()));
        }
        match ch {
            '+' => {}
            '-' | '−' => mask |= 1 << pos,
            other => return Err(Error::IllegalCharacter { ch: other, pos }),
        }
        n = pos + 1;
    }
    Ok(Word::from_raw(n, mask))
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_word(self))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", render_word(self))
    }
}

/// Identifies the weight class 𝒢ₙ(a): all words with exactly `a` plus signs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightClassId {
    pub n: usize,
    pub a: usize,
}

impl WeightClassId {
    pub fn new(n: usize, a: usize) -> Result<Self> {
        check_len(n)?;
        if a > n {
            return Err(Error::OutOfRange { value: a, max: n });
        }
        Ok(Self { n, a })
    }

    pub fn of(w: &Word) -> Self {
        Self {
            n: w.len(),
            a: w.weight(),
        }
    }

    pub fn size(&self) -> u128 {
        arith::binomial(self.n as i64, self.a as i64)
    }
}

/// All masks of `n` bits with exactly `k` set bits, ascending (Gosper's hack).
pub(crate) fn masks_with_popcount(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = full_mask(n);
    let mut next = if k > n {
        None
    } else if k == 0 {
        Some(0u64)
    } else {
        Some(full_mask(k))
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 || cur == limit {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let nx = (((r ^ cur) >> 2) / c) | r;
                (nx <= limit && nx != 0).then_some(nx)
            }
        };
        Some(cur)
    })
}

/// The weight class 𝒢ₙ(a), sorted by mask.
pub fn weight_class(n: usize, a: usize) -> Result<Vec<Word>> {
    WeightClassId::new(n, a)?;
    Ok(masks_with_popcount(n, n - a).map(|m| Word::from_raw(n, m)).collect())
}

/// Every word of length `n`, in mask order. Callers enforce their own caps.
pub(crate) fn all_words(n: usize) -> impl Iterator<Item = Word> {
    debug_assert!(n < 64);
    (0..1u64 << n).map(move |m| Word::from_raw(n, m))
}
