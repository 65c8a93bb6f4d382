//! Codes over Z₂ⁿ: sets of words with unique factorization.
//!
//! Since every word is its own inverse and the group is abelian, a set is a
//! code iff all of its subset products are distinct, iff it is linearly
//! independent over GF(2). Both criteria are implemented and kept.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::gf2::{Insert, XorBasis};
use crate::perm_groups::{self, PermGroup};
use crate::word::{self, parse_word, render_word, Word};
use crate::Limits;

/// A set of nonidentity words of common length, in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawCodeSet", into = "RawCodeSet")]
pub struct CodeSet {
    n: usize,
    words: Vec<Word>,
}

#[derive(Serialize, Deserialize)]
struct RawCodeSet {
    n: usize,
    words: Vec<String>,
}

impl TryFrom<RawCodeSet> for CodeSet {
    type Error = Error;

    fn try_from(raw: RawCodeSet) -> Result<Self> {
        let words = raw
            .words
            .iter()
            .map(|s| parse_word(s))
            .collect::<Result<Vec<_>>>()?;
        CodeSet::new(raw.n, words)
    }
}

impl From<CodeSet> for RawCodeSet {
    fn from(c: CodeSet) -> Self {
        RawCodeSet {
            n: c.n,
            words: c.words.iter().map(render_word).collect(),
        }
    }
}

impl CodeSet {
    pub fn new(n: usize, words: Vec<Word>) -> Result<Self> {
        if n == 0 || n > word::MAX_LEN {
            return Err(Error::InvalidLength(n));
        }
        let mut seen = HashSet::new();
        for w in &words {
            if w.len() != n {
                return Err(Error::LengthMismatch {
                    left: n,
                    right: w.len(),
                });
            }
            if w.is_identity() {
                return Err(Error::IdentityInCode);
            }
            if !seen.insert(*w) {
                return Err(Error::DuplicateWord(render_word(w)));
            }
        }
        Ok(Self { n, words })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Words sorted by mask, for set comparisons.
    pub fn sorted_words(&self) -> Vec<Word> {
        let mut v = self.words.clone();
        v.sort();
        v
    }
}

/// A word with two different factorizations over a candidate code, given as
/// index sets into the code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationWitness {
    #[serde(with = "word_string")]
    pub word: Word,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

mod word_string {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::word::{parse_word, render_word, Word};

    pub fn serialize<S: Serializer>(w: &Word, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&render_word(w))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Word, D::Error> {
        let s = String::deserialize(d)?;
        parse_word(&s).map_err(serde::de::Error::custom)
    }
}

fn product_of(n: usize, words: &[Word], idx: &[usize]) -> Word {
    Word::from_raw(n, idx.iter().fold(0, |m, &i| m ^ words[i].mask()))
}

/// Rank criterion. On failure the witness is the first word that depends on
/// earlier ones: `{j}` against the earlier indices whose product equals it.
pub fn check_code(c: &CodeSet) -> std::result::Result<(), FactorizationWitness> {
    let mut basis = XorBasis::new();
    for (j, w) in c.words.iter().enumerate() {
        // at most 64 independent words, so j < 65 here
        if let Insert::Dependent(earlier) = basis.insert(j, w.mask()) {
            return Err(FactorizationWitness {
                word: *w,
                left: vec![j],
                right: earlier,
            });
        }
    }
    Ok(())
}

pub fn is_code(c: &CodeSet) -> bool {
    check_code(c).is_ok()
}

pub const ORACLE_MAX_WORDS: usize = 30;

/// Subset-product criterion: enumerate all 2^|c| subset products. The witness
/// is the first repeated product in increasing subset-bitmask order.
pub fn check_code_oracle(c: &CodeSet) -> Result<std::result::Result<(), FactorizationWitness>> {
    let m = c.len();
    if m > ORACLE_MAX_WORDS {
        return Err(Error::CapExceeded {
            what: "code size for the subset-product oracle",
            value: m,
            cap: ORACLE_MAX_WORDS,
        });
    }
    let mut first: HashMap<u64, u32> = HashMap::with_capacity(1 << m.min(20));
    // Gray-code walk would be faster; plain order keeps the witness canonical.
    for s in 0u32..(1u32 << m) {
        let p = (0..m)
            .filter(|&i| s >> i & 1 == 1)
            .fold(0u64, |acc, i| acc ^ c.words[i].mask());
        if let Some(&t) = first.get(&p) {
            let idx = |x: u32| (0..m).filter(|&i| x >> i & 1 == 1).collect::<Vec<_>>();
            return Ok(Err(FactorizationWitness {
                word: Word::from_raw(c.n, p),
                left: idx(t),
                right: idx(s),
            }));
        }
        first.insert(p, s);
    }
    Ok(Ok(()))
}

pub fn is_code_oracle(c: &CodeSet) -> Result<bool> {
    Ok(check_code_oracle(c)?.is_ok())
}

/// Every subset of code indices whose product is `w`, in increasing
/// subset-bitmask order.
pub fn factorizations(c: &CodeSet, w: &Word) -> Result<Vec<Vec<usize>>> {
    let m = c.len();
    if m > ORACLE_MAX_WORDS {
        return Err(Error::CapExceeded {
            what: "code size for factorization enumeration",
            value: m,
            cap: ORACLE_MAX_WORDS,
        });
    }
    if w.len() != c.n {
        return Err(Error::LengthMismatch {
            left: c.n,
            right: w.len(),
        });
    }
    let all: Vec<usize> = (0..m).collect();
    Ok((0u32..(1u32 << m))
        .map(|s| all.iter().copied().filter(|&i| s >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|idx| product_of(c.n, &c.words, idx) == *w)
        .collect())
}

/// The subgroup generated by arbitrary words (identity and repeats allowed),
/// sorted by mask.
pub fn span_of(n: usize, words: &[Word]) -> Result<Vec<Word>> {
    let mut basis = XorBasis::new();
    for w in words {
        if w.len() != n {
            return Err(Error::LengthMismatch {
                left: n,
                right: w.len(),
            });
        }
        if !basis.contains(w.mask()) {
            basis.insert(0, w.mask());
        }
    }
    let cap = Limits::default().max_set_size;
    if basis.rank() >= 63 || 1usize << basis.rank() > cap {
        return Err(Error::CapExceeded {
            what: "generated subgroup size",
            value: 1usize.checked_shl(basis.rank() as u32).unwrap_or(usize::MAX),
            cap,
        });
    }
    Ok(basis.span().into_iter().map(|m| Word::from_raw(n, m)).collect())
}

/// c*, the closure of `c` under the product, including **1**.
pub fn generated_subgroup(c: &CodeSet) -> Result<Vec<Word>> {
    span_of(c.n, &c.words)
}

/// Canonical key of the subgroup generated by `words`: its reduced echelon basis.
pub fn subgroup_key(words: &[Word]) -> Vec<u64> {
    let mut basis = XorBasis::new();
    for w in words {
        if !basis.contains(w.mask()) {
            basis.insert(0, w.mask());
        }
    }
    basis.canonical()
}

/// The base code 𝒳ₙ = {X₀, …, X_{n−1}}.
pub fn base_code(n: usize) -> Result<CodeSet> {
    let words = (0..n).map(|i| Word::unit(n, i)).collect::<Result<Vec<_>>>()?;
    CodeSet::new(n, words)
}

/// A set partition P(T) of a subset T of the positions {0, …, n−1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SetPartitionPT {
    n: usize,
    /// Blocks ordered by least element; each block ascending.
    blocks: Vec<BTreeSet<usize>>,
}

impl SetPartitionPT {
    pub fn new(n: usize, blocks: Vec<BTreeSet<usize>>) -> Result<Self> {
        if n == 0 || n > word::MAX_LEN {
            return Err(Error::InvalidLength(n));
        }
        let mut seen = BTreeSet::new();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &i in b {
                if i >= n {
                    return Err(Error::InvalidPartition(format!(
                        "position {i} outside 0..{n}"
                    )));
                }
                if !seen.insert(i) {
                    return Err(Error::InvalidPartition(format!(
                        "position {i} is in two blocks"
                    )));
                }
            }
        }
        let mut blocks = blocks;
        blocks.sort_by_key(|b| *b.first().expect("nonempty"));
        Ok(Self { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[BTreeSet<usize>] {
        &self.blocks
    }

    /// T, the union of the blocks.
    pub fn support(&self) -> BTreeSet<usize> {
        self.blocks.iter().flatten().copied().collect()
    }
}

/// One codeword per block: the product of the Xᵢ over the block.
pub fn pt_code(p: &SetPartitionPT) -> CodeSet {
    let words = p
        .blocks
        .iter()
        .map(|b| Word::from_raw(p.n, b.iter().fold(0u64, |m, &i| m | 1 << i)))
        .collect();
    CodeSet { n: p.n, words }
}

/// The partition behind `c` when `c` is a P(T)-code, i.e. when the minus
/// supports of its words are pairwise disjoint.
pub fn as_pt_code(c: &CodeSet) -> Option<SetPartitionPT> {
    let mut used = 0u64;
    for w in &c.words {
        if used & w.mask() != 0 {
            return None;
        }
        used |= w.mask();
    }
    let blocks = c
        .words
        .iter()
        .map(|w| w.minus_positions().into_iter().collect())
        .collect();
    SetPartitionPT::new(c.n, blocks).ok()
}

pub fn is_pt_code(c: &CodeSet) -> bool {
    as_pt_code(c).is_some()
}

/// Σ_{k=0}^{n} C(n,k)·B_k, which equals B_{n+1}.
pub fn count_pt_free_subgroups(n: usize) -> u128 {
    let bell = arith::bell_numbers(n);
    (0..=n)
        .map(|k| arith::binomial(n as i64, k as i64) * bell[k])
        .sum()
}

/// One P(T)-free subgroup found by enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PtSubgroup {
    pub partition: SetPartitionPT,
    pub code: CodeSet,
    pub order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PtCensus {
    pub n: usize,
    /// Σ C(n,k)·B_k.
    pub formula: u128,
    /// Number of (T, P(T)) pairs enumerated.
    pub constructions: u64,
    /// Number of distinct generated subgroups among them.
    pub distinct_subgroups: u64,
    /// Every construction, when requested.
    pub listing: Option<Vec<PtSubgroup>>,
}

pub const CENSUS_MAX_N: usize = 10;

/// Enumerate every set partition of every T ⊆ {0, …, n−1} and count the
/// distinct subgroups generated by the resulting P(T)-codes.
pub fn pt_census(n: usize, with_listing: bool) -> Result<PtCensus> {
    if n > CENSUS_MAX_N {
        return Err(Error::CapExceeded {
            what: "word length for the P(T) census",
            value: n,
            cap: CENSUS_MAX_N,
        });
    }
    let mut constructions = 0u64;
    let mut keys: HashSet<Vec<u64>> = HashSet::new();
    let mut listing = with_listing.then(Vec::new);
    // n = 0 has only the trivial group; Word needs n ≥ 1, so count it directly.
    if n == 0 {
        return Ok(PtCensus {
            n,
            formula: count_pt_free_subgroups(0),
            constructions: 1,
            distinct_subgroups: 1,
            listing: with_listing.then(Vec::new),
        });
    }
    for t in 0u64..(1 << n) {
        let elems: Vec<usize> = (0..n).filter(|&i| t >> i & 1 == 1).collect();
        for_each_set_partition(elems.len(), &mut |labels: &[usize], nblocks: usize| {
            let mut masks = vec![0u64; nblocks];
            for (pos, &l) in labels.iter().enumerate() {
                masks[l] |= 1 << elems[pos];
            }
            constructions += 1;
            let words: Vec<Word> = masks.iter().map(|&m| Word::from_raw(n, m)).collect();
            keys.insert(subgroup_key(&words));
            if let Some(list) = listing.as_mut() {
                let blocks = masks
                    .iter()
                    .map(|&m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
                    .collect();
                let partition = SetPartitionPT::new(n, blocks).expect("valid partition");
                let code = pt_code(&partition);
                list.push(PtSubgroup {
                    order: 1u64 << code.len(),
                    partition,
                    code,
                });
            }
        });
    }
    if let Some(list) = listing.as_mut() {
        list.sort_by(|a, b| {
            b.code
                .len()
                .cmp(&a.code.len())
                .then_with(|| a.partition.cmp(&b.partition))
        });
    }
    Ok(PtCensus {
        n,
        formula: count_pt_free_subgroups(n),
        constructions,
        distinct_subgroups: keys.len() as u64,
        listing,
    })
}

/// Calls `f(labels, blocks)` once per set partition of {0, …, m−1}, given as a
/// restricted growth string.
fn for_each_set_partition(m: usize, f: &mut dyn FnMut(&[usize], usize)) {
    fn rec(labels: &mut Vec<usize>, m: usize, used: usize, f: &mut dyn FnMut(&[usize], usize)) {
        if labels.len() == m {
            f(labels, used);
            return;
        }
        for l in 0..=used {
            labels.push(l);
            rec(labels, m, used.max(l + 1), f);
            labels.pop();
        }
    }
    rec(&mut Vec::with_capacity(m), m, 0, f);
}

/// (∪ cᵢ)* for P(T)-codes with pairwise disjoint supports.
pub fn disjoint_union_product(codes: &[CodeSet]) -> Result<Vec<Word>> {
    let first = codes.first().ok_or(Error::EmptySet)?;
    let n = first.n;
    let mut used = 0u64;
    let mut all = Vec::new();
    for (i, c) in codes.iter().enumerate() {
        if c.n != n {
            return Err(Error::LengthMismatch {
                left: n,
                right: c.n,
            });
        }
        let p = as_pt_code(c).ok_or(Error::NotPtCode(i))?;
        let support = p.support().into_iter().fold(0u64, |m, i| m | 1 << i);
        if used & support != 0 {
            return Err(Error::OverlappingSupports(
                (used & support).trailing_zeros() as usize,
            ));
        }
        used |= support;
        all.extend_from_slice(&c.words);
    }
    span_of(n, &all)
}

/// A G-code is a code that is a single `g`-orbit.
pub fn is_g_code(c: &CodeSet, g: &PermGroup) -> Result<bool> {
    let Some(first) = c.words.first() else {
        return Ok(false);
    };
    if !is_code(c) {
        return Ok(false);
    }
    let orbit = perm_groups::orbit(first, g)?;
    Ok(orbit == c.sorted_words())
}

/// True iff `set` is a union of `g`-orbits (no closure under products implied).
pub fn is_g_invariant(set: &[Word], g: &PermGroup) -> bool {
    let members: HashSet<Word> = set.iter().copied().collect();
    if g.is_symmetric() {
        let mut per_weight: HashMap<usize, u128> = HashMap::new();
        for w in &members {
            *per_weight.entry(w.minus_count()).or_default() += 1;
        }
        let n = g.n() as i64;
        return per_weight
            .into_iter()
            .all(|(k, c)| c == arith::binomial(n, k as i64));
    }
    members
        .iter()
        .all(|w| g.generators().iter().all(|p| members.contains(&p.apply(w))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm_groups::{build_group, PermGroupSpec};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn x7_prime() -> CodeSet {
        let blocks = [[3, 5, 6], [2, 4, 5], [1, 3, 4], [0, 2, 3], [6, 1, 2], [5, 0, 1], [4, 6, 0]];
        let words = blocks
            .iter()
            .map(|b| Word::from_minus_positions(7, b.iter().copied()).unwrap())
            .collect();
        CodeSet::new(7, words).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            CodeSet::new(3, vec![w("+++")]),
            Err(Error::IdentityInCode)
        );
        assert!(matches!(
            CodeSet::new(3, vec![w("-++"), w("-++")]),
            Err(Error::DuplicateWord(_))
        ));
        assert!(CodeSet::new(3, vec![w("-+")]).is_err());
    }

    #[test]
    fn base_code_is_code() {
        for n in 1..=12 {
            let c = base_code(n).unwrap();
            assert!(is_code(&c));
            assert!(is_code_oracle(&c).unwrap());
            assert_eq!(generated_subgroup(&c).unwrap().len(), 1 << n);
        }
    }

    #[test]
    fn seven_prime_is_not_a_code() {
        let c = x7_prime();
        assert!(!is_code(&c));
        assert!(!is_code_oracle(&c).unwrap());
        assert_eq!(generated_subgroup(&c).unwrap().len(), 16);
        let target = Word::from_minus_positions(7, [0, 2, 5, 6]).unwrap();
        let f = factorizations(&c, &target).unwrap();
        assert!(f.contains(&vec![0, 3]));
        assert!(f.contains(&vec![1, 6]));
        let witness = check_code(&c).unwrap_err();
        assert_eq!(product_of(7, c.words(), &witness.left), witness.word);
        assert_eq!(product_of(7, c.words(), &witness.right), witness.word);
    }

    #[test]
    fn single_words_are_codes() {
        assert!(is_code(&CodeSet::new(5, vec![w("--+-+")]).unwrap()));
        assert_eq!(
            generated_subgroup(&CodeSet::new(5, vec![]).unwrap()).unwrap(),
            vec![Word::identity(5).unwrap()]
        );
    }

    #[test]
    fn pt_codes() {
        let singletons: Vec<BTreeSet<usize>> = (0..5).map(|i| BTreeSet::from([i])).collect();
        let p = SetPartitionPT::new(5, singletons).unwrap();
        assert_eq!(pt_code(&p), base_code(5).unwrap());
        let p = SetPartitionPT::new(3, vec![BTreeSet::from([0, 1, 2])]).unwrap();
        let c = pt_code(&p);
        assert_eq!(c.words(), &[w("---")]);
        assert_eq!(generated_subgroup(&c).unwrap(), vec![w("+++"), w("---")]);
        assert!(SetPartitionPT::new(3, vec![BTreeSet::from([0, 1]), BTreeSet::from([1])]).is_err());
        assert!(SetPartitionPT::new(3, vec![BTreeSet::new()]).is_err());
        assert!(is_pt_code(&c));
        assert!(!is_pt_code(&x7_prime()));
    }

    #[test]
    fn census_small() {
        assert_eq!(count_pt_free_subgroups(0), 1);
        assert_eq!(count_pt_free_subgroups(3), 15);
        assert_eq!(count_pt_free_subgroups(4), 52);
        let c = pt_census(3, true).unwrap();
        assert_eq!((c.constructions, c.distinct_subgroups), (15, 15));
        assert_eq!(c.listing.unwrap().len(), 15);
        let c = pt_census(4, false).unwrap();
        assert_eq!((c.constructions, c.distinct_subgroups), (52, 52));
    }

    #[test]
    fn disjoint_unions() {
        let a = CodeSet::new(3, vec![w("-++")]).unwrap();
        let b = CodeSet::new(3, vec![w("+-+")]).unwrap();
        assert_eq!(disjoint_union_product(&[a.clone(), b]).unwrap().len(), 4);
        assert_eq!(
            disjoint_union_product(&[a.clone(), a.clone()]),
            Err(Error::OverlappingSupports(0))
        );
        let not_pt = CodeSet::new(3, vec![w("--+"), w("+--")]).unwrap();
        assert_eq!(disjoint_union_product(&[a, not_pt]), Err(Error::NotPtCode(1)));
        let singles: Vec<CodeSet> = (0..6)
            .map(|i| CodeSet::new(6, vec![Word::unit(6, i).unwrap()]).unwrap())
            .collect();
        assert_eq!(disjoint_union_product(&singles).unwrap().len(), 64);
    }

    #[test]
    fn g_codes() {
        let c7 = build_group(&PermGroupSpec::cyclic(7).unwrap()).unwrap();
        assert!(is_g_code(&base_code(7).unwrap(), &c7).unwrap());
        assert!(!is_g_code(&x7_prime(), &c7).unwrap());
        let s6 = build_group(&PermGroupSpec::symmetric(6).unwrap()).unwrap();
        let g61 = CodeSet::new(6, word::weight_class(6, 1).unwrap()).unwrap();
        assert!(is_g_code(&g61, &s6).unwrap());
        let s5 = build_group(&PermGroupSpec::symmetric(5).unwrap()).unwrap();
        let g51 = CodeSet::new(5, word::weight_class(5, 1).unwrap()).unwrap();
        assert!(!is_g_code(&g51, &s5).unwrap());
    }
}
