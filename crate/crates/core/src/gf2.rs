//! Linear algebra over the two-element field on 64-bit masks.
//!
//! Words of Z₂ⁿ are vectors over GF(2); the subgroup generated by a set of
//! words is their span. [`XorBasis`] keeps an echelon basis together with
//! the combination of input vectors that produced each basis row, so that
//! dependencies can be reported as explicit index sets.

/// Echelon basis over GF(2) with provenance tracking.
#[derive(Debug, Clone)]
pub struct XorBasis {
    /// `rows[b]` has highest set bit `b`, if present.
    rows: [Option<(u64, u128)>; 64],
    rank: usize,
}

/// Outcome of inserting a vector into an [`XorBasis`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Insert {
    /// Vector was independent and extended the basis.
    Independent,
    /// Vector lies in the span; the payload lists the input indices (a subset
    /// of those inserted independently before) whose XOR equals it.
    Dependent(Vec<usize>),
}

impl Default for XorBasis {
    fn default() -> Self {
        Self {
            rows: [None; 64],
            rank: 0,
        }
    }
}

impl XorBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Insert vector number `index` (< 128). Indices are only used for provenance.
    pub fn insert(&mut self, index: usize, v: u64) -> Insert {
        debug_assert!(index < 128);
        let (rest, combo) = self.reduce(v);
        if rest == 0 {
            return Insert::Dependent(bits_of(combo));
        }
        let top = 63 - rest.leading_zeros() as usize;
        self.rows[top] = Some((rest, combo ^ (1u128 << index)));
        self.rank += 1;
        Insert::Independent
    }

    /// Reduce `v` against the basis; returns the remainder and the input
    /// combination that was XORed away.
    fn reduce(&self, mut v: u64) -> (u64, u128) {
        let mut combo = 0u128;
        while v != 0 {
            let top = 63 - v.leading_zeros() as usize;
            match self.rows[top] {
                Some((row, c)) => {
                    v ^= row;
                    combo ^= c;
                }
                None => break,
            }
        }
        (v, combo)
    }

    pub fn contains(&self, v: u64) -> bool {
        let mut v = v;
        while v != 0 {
            let top = 63 - v.leading_zeros() as usize;
            match self.rows[top] {
                Some((row, _)) => v ^= row,
                None => return false,
            }
        }
        true
    }

    /// Input indices whose XOR is `v`, if `v` is in the span.
    pub fn express(&self, v: u64) -> Option<Vec<usize>> {
        let (rest, combo) = self.reduce(v);
        (rest == 0).then(|| bits_of(combo))
    }

    /// Reduced row echelon form, rows sorted descending. Two spans are equal
    /// iff their canonical forms are equal.
    pub fn canonical(&self) -> Vec<u64> {
        let mut rows: Vec<u64> = self.rows.iter().rev().flatten().map(|r| r.0).collect();
        // clear every pivot column from all other rows
        for i in 0..rows.len() {
            let pivot = 63 - rows[i].leading_zeros();
            for j in 0..rows.len() {
                if j != i && rows[j] >> pivot & 1 == 1 {
                    rows[j] ^= rows[i];
                }
            }
        }
        rows.sort_unstable_by(|a, b| b.cmp(a));
        rows
    }

    /// Basis vectors (not reduced), highest pivot first.
    pub fn vectors(&self) -> Vec<u64> {
        self.rows.iter().rev().flatten().map(|r| r.0).collect()
    }

    /// Every element of the span, in ascending order. Caller bounds the rank.
    pub fn span(&self) -> Vec<u64> {
        let basis = self.vectors();
        let mut out = Vec::with_capacity(1 << basis.len());
        out.push(0u64);
        for b in basis {
            let len = out.len();
            for i in 0..len {
                out.push(out[i] ^ b);
            }
        }
        out.sort_unstable();
        out
    }
}

fn bits_of(x: u128) -> Vec<usize> {
    (0..128).filter(|&i| x >> i & 1 == 1).collect()
}

/// Rank of a list of masks.
pub fn rank(vectors: &[u64]) -> usize {
    let mut b = XorBasis::new();
    for (i, &v) in vectors.iter().enumerate() {
        b.insert(i % 128, v);
    }
    b.rank()
}
