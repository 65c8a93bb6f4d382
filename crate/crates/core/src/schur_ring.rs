//! The group algebra of Z₂ⁿ and the weight-class S-ring 𝔖(Z₂ⁿ, Sₙ).
//!
//! The public API is indexed by weight (number of `+`), so 𝒢ₙ(a) is the
//! class of weight `a`. The structure constants λ_{i,j,k} are indexed the
//! other way, by `T_i = 𝒢ₙ(n − i)`, i.e. by the number of `-` components;
//! that translation happens only inside the `lambda_*` functions.

use std::collections::{BTreeMap, BTreeSet};

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::word::{self, render_word, Word};
use crate::Limits;

/// A finite formal sum Σ c_w · w with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupAlgebraElement {
    n: usize,
    coeffs: BTreeMap<Word, i64>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, i64)>>(n: usize, terms: I) -> Result<Self> {
        let mut e = Self::zero(n);
        for (w, c) in terms {
            if w.len() != n {
                return Err(Error::LengthMismatch {
                    left: n,
                    right: w.len(),
                });
            }
            e.add_term(w, c);
        }
        Ok(e)
    }

    fn add_term(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry(w).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&w);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, w: &Word) -> i64 {
        self.coeffs.get(w).copied().unwrap_or(0)
    }

    /// Nonzero terms in mask order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &i64)> {
        self.coeffs.iter()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut out = self.clone();
        for (&w, &c) in &other.coeffs {
            out.add_term(w, c);
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero(self.n);
        for (&w, &c) in &self.coeffs {
            out.add_term(w, c * k);
        }
        out
    }

    /// Coefficients per block when this element is constant on every block of
    /// `blocks` (which must cover the support), in block order.
    pub fn in_block_basis(&self, blocks: &[Vec<Word>]) -> Option<Vec<i64>> {
        let mut covered = 0usize;
        let mut out = Vec::with_capacity(blocks.len());
        for block in blocks {
            let c = self.coeff(block.first()?);
            if block.iter().any(|w| self.coeff(w) != c) {
                return None;
            }
            if c != 0 {
                covered += block.len();
            }
            out.push(c);
        }
        (covered == self.coeffs.len()).then_some(out)
    }
}

impl Serialize for GroupAlgebraElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            word: String,
            coeff: i64,
        }
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for (w, &c) in &self.coeffs {
            seq.serialize_element(&Term {
                word: render_word(w),
                coeff: c,
            })?;
        }
        seq.end()
    }
}

/// The simple quantity T̄ of a set of words: coefficient 1 on each member.
pub fn simple_quantity(set: &[Word]) -> Result<GroupAlgebraElement> {
    let first = set.first().ok_or(Error::EmptySet)?;
    GroupAlgebraElement::from_terms(first.len(), set.iter().map(|&w| (w, 1)))
}

/// Convolution: the coefficient of `w` is Σ_{uv=w} p(u)q(v).
pub fn algebra_mul(p: &GroupAlgebraElement, q: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
    if p.n != q.n {
        return Err(Error::LengthMismatch {
            left: p.n,
            right: q.n,
        });
    }
    let mut acc: BTreeMap<u64, i64> = BTreeMap::new();
    for (u, &cu) in &p.coeffs {
        for (v, &cv) in &q.coeffs {
            *acc.entry(u.mask() ^ v.mask()).or_insert(0) += cu * cv;
        }
    }
    Ok(GroupAlgebraElement {
        n: p.n,
        coeffs: acc
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(m, c)| (Word::from_raw(p.n, m), c))
            .collect(),
    })
}

/// Closed form of λ_{i,j,k} for 𝔖(Z₂ⁿ, Sₙ), with `T_i` the words having
/// `i` minus signs.
pub fn lambda_formula(n: usize, i: usize, j: usize, k: usize) -> u128 {
    let (n, i, j, k) = (n as i64, i as i64, j as i64, k as i64);
    if (i + j - k).rem_euclid(2) == 1 {
        return 0;
    }
    binomial(k, (j - i + k) / 2) * binomial(n - k, (j + i - k) / 2)
}

const LAMBDA_BRUTE_MAX_N: usize = 16;

fn check_lambda_args(n: usize, idx: &[usize]) -> Result<()> {
    if n == 0 || n > LAMBDA_BRUTE_MAX_N {
        return Err(Error::CapExceeded {
            what: "word length for brute-force structure constants",
            value: n,
            cap: LAMBDA_BRUTE_MAX_N,
        });
    }
    for &x in idx {
        if x > n {
            return Err(Error::OutOfRange { value: x, max: n });
        }
    }
    Ok(())
}

/// λ_{i,j,k} by counting: for every `w` in `T_k`, the number of `u ∈ T_i`
/// with `u·w ∈ T_j`. Fails if the count depends on `w`.
pub fn lambda_bruteforce(n: usize, i: usize, j: usize, k: usize) -> Result<u128> {
    check_lambda_args(n, &[i, j, k])?;
    let mut value = None;
    for w in word::masks_with_popcount(n, k) {
        let count = word::masks_with_popcount(n, i)
            .filter(|u| (u ^ w).count_ones() as usize == j)
            .count() as u128;
        match value {
            None => value = Some(count),
            Some(v) if v != count => {
                return Err(Error::WitnessDependent(format!(
                    "λ({i},{j},{k}) at n={n}: {v} vs {count} at {}",
                    render_word(&Word::from_raw(n, w))
                )))
            }
            _ => {}
        }
    }
    value.ok_or(Error::EmptySet)
}

/// The full table `t[i][j][k]` = λ_{i,j,k} by counting, checking witness
/// independence for every `w`. Costs about 4ⁿ word operations.
pub fn lambda_table_bruteforce(n: usize) -> Result<Vec<Vec<Vec<u128>>>> {
    check_lambda_args(n, &[])?;
    let mut table = vec![vec![vec![0u128; n + 1]; n + 1]; n + 1];
    let mut counts = vec![vec![0u128; n + 1]; n + 1];
    for k in 0..=n {
        let mut first = true;
        for w in word::masks_with_popcount(n, k) {
            counts.iter_mut().for_each(|r| r.iter_mut().for_each(|c| *c = 0));
            for u in 0..1u64 << n {
                counts[u.count_ones() as usize][(u ^ w).count_ones() as usize] += 1;
            }
            for i in 0..=n {
                for j in 0..=n {
                    if first {
                        table[i][j][k] = counts[i][j];
                    } else if table[i][j][k] != counts[i][j] {
                        return Err(Error::WitnessDependent(format!(
                            "λ({i},{j},{k}) at n={n}: {} vs {} at {}",
                            table[i][j][k],
                            counts[i][j],
                            render_word(&Word::from_raw(n, w))
                        )));
                    }
                }
            }
            first = false;
        }
    }
    Ok(table)
}

fn check_weights(n: usize, ws: &[usize]) -> Result<()> {
    if n == 0 || n > word::MAX_LEN {
        return Err(Error::InvalidLength(n));
    }
    for &w in ws {
        if w > n {
            return Err(Error::OutOfRange { value: w, max: n });
        }
    }
    Ok(())
}

/// Weights `c` with 𝒢ₙ(c) ⊆ 𝒢ₙ(a)𝒢ₙ(b).
///
/// The closed form has two cases, `a ≤ ⌊n/2⌋, a ≤ b ≤ n−a` and
/// `a > ⌊n/2⌋, n−a ≤ b ≤ a`; every other pair falls into one of them after
/// swapping `a` and `b`.
pub fn gset_product_weights(n: usize, a: usize, b: usize) -> Result<BTreeSet<usize>> {
    check_weights(n, &[a, b])?;
    let half = n / 2;
    let in_case_1 = |a: usize, b: usize| a <= half && a <= b && b <= n - a;
    let in_case_2 = |a: usize, b: usize| a > half && n - a <= b && b <= a;
    let (a, b) = if in_case_1(a, b) || in_case_2(a, b) {
        (a, b)
    } else {
        (b, a)
    };
    let out = if in_case_1(a, b) {
        (0..=a).map(|i| n - a - b + 2 * i).collect()
    } else if in_case_2(a, b) {
        (0..=n - a).map(|i| a + b - n + 2 * i).collect()
    } else {
        unreachable!("every (a, b) is covered by one of the two cases up to order")
    };
    Ok(out)
}

/// Weight support of 𝒢ₙ(a)𝒢ₙ(b) by multiplying every pair of words.
pub fn gset_product_weights_bruteforce(n: usize, a: usize, b: usize) -> Result<BTreeSet<usize>> {
    check_weights(n, &[a, b])?;
    Limits::default().check_n(n)?;
    let vs: Vec<u64> = word::masks_with_popcount(n, n - b).collect();
    let mut seen = BTreeSet::new();
    for u in word::masks_with_popcount(n, n - a) {
        for &v in &vs {
            seen.insert(n - (u ^ v).count_ones() as usize);
        }
    }
    Ok(seen)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// ℰₙ (even weights) or 𝒪ₙ (odd weights), sorted by mask.
pub fn parity_subgroup(n: usize, parity: Parity) -> Result<Vec<Word>> {
    check_weights(n, &[])?;
    Limits::default().check_n(n)?;
    let want = match parity {
        Parity::Even => 0,
        Parity::Odd => 1,
    };
    Ok(word::all_words(n)
        .filter(|w| w.weight() % 2 == want)
        .collect())
}

/// Is the set of weight classes `candidate` a 𝒢ₙ(target)-complete S-set?
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompleteSSetQuery {
    pub n: usize,
    pub candidate: BTreeSet<usize>,
    pub target: usize,
}

/// Why a candidate is not complete.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CompletenessWitness {
    Empty,
    /// 𝒢ₙ(i)𝒢ₙ(j) misses the target class.
    MissingCover { i: usize, j: usize },
    /// 𝒢ₙ(b) could be added without breaking the covering condition.
    Extendable { b: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletenessReport {
    pub complete: bool,
    pub witness: Option<CompletenessWitness>,
}

fn covers(n: usize, i: usize, j: usize, target: usize) -> bool {
    gset_product_weights(n, i, j)
        .map(|s| s.contains(&target))
        .unwrap_or(false)
}

/// Checks both conditions of completeness. The empty set is never complete.
pub fn is_complete_sset(q: &CompleteSSetQuery) -> Result<CompletenessReport> {
    let n = q.n;
    check_weights(n, &[q.target])?;
    check_weights(n, &q.candidate.iter().copied().collect::<Vec<_>>())?;
    let fail = |w| {
        Ok(CompletenessReport {
            complete: false,
            witness: Some(w),
        })
    };
    if q.candidate.is_empty() {
        return fail(CompletenessWitness::Empty);
    }
    for &i in &q.candidate {
        for &j in q.candidate.range(i..) {
            if !covers(n, i, j, q.target) {
                return fail(CompletenessWitness::MissingCover { i, j });
            }
        }
    }
    for b in (0..=n).filter(|b| !q.candidate.contains(b)) {
        if covers(n, b, b, q.target) && q.candidate.iter().all(|&k| covers(n, b, k, q.target)) {
            return fail(CompletenessWitness::Extendable { b });
        }
    }
    Ok(CompletenessReport {
        complete: true,
        witness: None,
    })
}

const COMPLETE_SEARCH_MAX_N: usize = 20;

/// Every 𝒢ₙ(target)-complete S-set, as sets of weights in lexicographic order.
pub fn find_complete_ssets(n: usize, target: usize) -> Result<Vec<BTreeSet<usize>>> {
    check_weights(n, &[target])?;
    if n > COMPLETE_SEARCH_MAX_N {
        return Err(Error::CapExceeded {
            what: "word length for complete S-set search",
            value: n,
            cap: COMPLETE_SEARCH_MAX_N,
        });
    }
    // Complete sets are the maximal cliques of the graph on admissible weights.
    let admissible: Vec<usize> = (0..=n).filter(|&b| covers(n, b, b, target)).collect();
    let m = admissible.len();
    let mut adj = vec![0u32; m];
    for x in 0..m {
        for y in 0..m {
            if x != y && covers(n, admissible[x], admissible[y], target) {
                adj[x] |= 1 << y;
            }
        }
    }
    let mut found = Vec::new();
    for subset in 1u32..1 << m {
        let is_clique = (0..m)
            .filter(|&x| subset >> x & 1 == 1)
            .all(|x| subset & !(1 << x) & !adj[x] == 0);
        if !is_clique {
            continue;
        }
        let maximal = (0..m)
            .filter(|&y| subset >> y & 1 == 0)
            .all(|y| subset & !adj[y] != 0);
        if maximal {
            found.push(
                (0..m)
                    .filter(|&x| subset >> x & 1 == 1)
                    .map(|x| admissible[x])
                    .collect::<BTreeSet<usize>>(),
            );
        }
    }
    found.sort();
    Ok(found)
}

/// Weights of the subgroup generated by the union of the given weight classes.
pub fn generated_weight_support(n: usize, weights: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
    check_weights(n, &weights.iter().copied().collect::<Vec<_>>())?;
    let mut support: BTreeSet<usize> = weights.clone();
    support.insert(n);
    loop {
        let mut next = support.clone();
        for &a in &support {
            for &b in weights {
                next.extend(gset_product_weights(n, a, b)?);
            }
        }
        if next == support {
            return Ok(support);
        }
        support = next;
    }
}

/// Weight support of 𝒢ₙ(a)^e.
pub fn power_classes(n: usize, a: usize, e: usize) -> Result<BTreeSet<usize>> {
    check_weights(n, &[a])?;
    if e == 0 {
        return Err(Error::OutOfRange { value: 0, max: usize::MAX });
    }
    let mut support = BTreeSet::from([a]);
    for _ in 1..e {
        let mut next = BTreeSet::new();
        for &c in &support {
            next.extend(gset_product_weights(n, c, a)?);
        }
        support = next;
    }
    Ok(support)
}
