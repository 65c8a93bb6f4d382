//! Coordinate-permutation subgroups of Aut(Z₂ⁿ) and the S-partitions they induce.
//!
//! Only the families needed here are supported: the full symmetric group
//! Sₙ, the cyclic group Cₙ = ⟨C⟩, the decimation group Δₙ ≅ Zₙ*, the
//! reversal group Hₙ = {1, R}, and groups generated by unions of these.
//! Sₙ is never materialized; its orbits are the weight classes.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::word::{self, Word};
use crate::Limits;

/// A permutation of coordinate positions acting by `(σ·x)_i = x_{σ(i)}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    sigma: Vec<u8>,
}

impl Permutation {
    pub fn new(sigma: Vec<usize>) -> Result<Self> {
        let n = sigma.len();
        if n == 0 || n > word::MAX_LEN {
            return Err(Error::InvalidLength(n));
        }
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s >= n || seen[s] {
                return Err(Error::InvalidPartition(format!(
                    "{sigma:?} is not a bijection on 0..{n}"
                )));
            }
            seen[s] = true;
        }
        Ok(Self {
            sigma: sigma.into_iter().map(|s| s as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            sigma: (0..n as u8).collect(),
        }
    }

    /// C: position `i` reads position `i+1`.
    pub fn cyclic(n: usize) -> Self {
        Self {
            sigma: (0..n).map(|i| ((i + 1) % n) as u8).collect(),
        }
    }

    pub fn reversal(n: usize) -> Self {
        Self {
            sigma: (0..n).rev().map(|i| i as u8).collect(),
        }
    }

    pub fn decimation(n: usize, a: u64) -> Self {
        Self {
            sigma: (0..n as u64).map(|i| (a * i % n as u64) as u8).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    pub fn apply(&self, x: &Word) -> Word {
        let mut mask = 0u64;
        for (i, &s) in self.sigma.iter().enumerate() {
            mask |= (x.mask() >> s & 1) << i;
        }
        Word::from_raw(x.len(), mask)
    }

    /// `self.then(other)` acts as `other · (self · x)`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        // (o·(s·x))_i = (s·x)_{o(i)} = x_{s(o(i))}
        Permutation {
            sigma: other.sigma.iter().map(|&o| self.sigma[o as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.len()];
        for (i, &s) in self.sigma.iter().enumerate() {
            inv[s as usize] = i as u8;
        }
        Permutation { sigma: inv }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupKind {
    FullSymmetric,
    Cyclic,
    Decimation,
    Reversal,
}

/// Which group to build: a set of generating families on length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PermGroupSpec {
    pub n: usize,
    pub kinds: BTreeSet<GroupKind>,
}

impl PermGroupSpec {
    pub fn new<I: IntoIterator<Item = GroupKind>>(n: usize, kinds: I) -> Result<Self> {
        if n == 0 || n > word::MAX_LEN {
            return Err(Error::InvalidLength(n));
        }
        let kinds: BTreeSet<GroupKind> = kinds.into_iter().collect();
        if kinds.contains(&GroupKind::Decimation) && n < 2 {
            return Err(Error::DecimationNeedsTwo);
        }
        Ok(Self { n, kinds })
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        Self::new(n, [GroupKind::FullSymmetric])
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(n, [GroupKind::Cyclic])
    }

    pub fn decimation(n: usize) -> Result<Self> {
        Self::new(n, [GroupKind::Decimation])
    }

    pub fn reversal(n: usize) -> Result<Self> {
        Self::new(n, [GroupKind::Reversal])
    }

    pub fn is_symmetric(&self) -> bool {
        self.kinds.contains(&GroupKind::FullSymmetric)
    }

    /// Conventional short name: `sn`, `cn`, `dn`, `hn`, `hc`, `dc`, `hdc`, …
    pub fn short_name(&self) -> String {
        if self.is_symmetric() {
            return "sn".into();
        }
        let mut s = String::new();
        if self.kinds.contains(&GroupKind::Reversal) {
            s.push('h');
        }
        if self.kinds.contains(&GroupKind::Decimation) {
            s.push('d');
        }
        if self.kinds.contains(&GroupKind::Cyclic) {
            s.push('c');
        }
        match s.as_str() {
            "" => "trivial".into(),
            "c" | "d" | "h" => format!("{s}n"),
            _ => s,
        }
    }

    /// Inverse of [`short_name`](Self::short_name).
    pub fn from_short_name(name: &str, n: usize) -> Result<Self> {
        use GroupKind::*;
        let kinds: &[GroupKind] = match name {
            "sn" => &[FullSymmetric],
            "cn" => &[Cyclic],
            "dn" => &[Decimation],
            "hn" => &[Reversal],
            "hc" => &[Reversal, Cyclic],
            "dc" => &[Decimation, Cyclic],
            "hd" => &[Reversal, Decimation],
            "hdc" => &[Reversal, Decimation, Cyclic],
            "trivial" => &[],
            other => {
                return Err(Error::InvalidPartition(format!("unknown group name {other:?}")))
            }
        };
        Self::new(n, kinds.iter().copied())
    }

    fn generators(&self) -> Vec<Permutation> {
        let n = self.n;
        let mut gens = Vec::new();
        for kind in &self.kinds {
            match kind {
                GroupKind::FullSymmetric => {
                    gens.push(Permutation::cyclic(n));
                    if n >= 2 {
                        let mut t: Vec<usize> = (0..n).collect();
                        t.swap(0, 1);
                        gens.push(Permutation::new(t).expect("transposition"));
                    }
                }
                GroupKind::Cyclic => gens.push(Permutation::cyclic(n)),
                GroupKind::Reversal => gens.push(Permutation::reversal(n)),
                GroupKind::Decimation => {
                    for a in arith::units(n as u64) {
                        if a > 1 {
                            gens.push(Permutation::decimation(n, a));
                        }
                    }
                }
            }
        }
        gens.retain(|g| *g != Permutation::identity(n));
        gens.sort();
        gens.dedup();
        gens
    }
}

impl fmt::Display for PermGroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={})", self.short_name(), self.n)
    }
}

/// A permutation group given by generators and, unless it is Sₙ, its full element list.
#[derive(Debug, Clone)]
pub struct PermGroup {
    spec: PermGroupSpec,
    generators: Vec<Permutation>,
    elements: Option<Vec<Permutation>>,
}

impl PermGroup {
    pub fn spec(&self) -> &PermGroupSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.spec.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Explicit elements; `None` for Sₙ.
    pub fn elements(&self) -> Option<&[Permutation]> {
        self.elements.as_deref()
    }

    /// |G|. For Sₙ this is n! (saturating).
    pub fn order(&self) -> u128 {
        match &self.elements {
            Some(e) => e.len() as u128,
            None => (1..=self.n() as u128).fold(1u128, |acc, k| acc.saturating_mul(k)),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.spec.is_symmetric()
    }
}

pub fn build_group(spec: &PermGroupSpec) -> Result<PermGroup> {
    build_group_with_limits(spec, &Limits::default())
}

/// Closure of the generators under composition.
pub fn build_group_with_limits(spec: &PermGroupSpec, limits: &Limits) -> Result<PermGroup> {
    let generators = spec.generators();
    if spec.is_symmetric() {
        return Ok(PermGroup {
            spec: spec.clone(),
            generators,
            elements: None,
        });
    }
    let id = Permutation::identity(spec.n);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut elements = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in &generators {
            let q = p.then(g);
            if seen.insert(q.clone()) {
                if seen.len() > limits.max_group_order {
                    return Err(Error::CapExceeded {
                        what: "permutation group order",
                        value: seen.len(),
                        cap: limits.max_group_order,
                    });
                }
                elements.push(q.clone());
                queue.push_back(q);
            }
        }
    }
    elements.sort();
    Ok(PermGroup {
        spec: spec.clone(),
        generators,
        elements: Some(elements),
    })
}

/// Orbit of `x` under `g`, sorted by mask; the first entry is the canonical
/// representative. For Sₙ the orbit is the weight class of `x`.
pub fn orbit(x: &Word, g: &PermGroup) -> Result<Vec<Word>> {
    if x.len() != g.n() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: g.n(),
        });
    }
    if g.is_symmetric() {
        let size = arith::binomial(x.len() as i64, x.minus_count() as i64);
        let cap = Limits::default().max_set_size;
        if size > cap as u128 {
            return Err(Error::CapExceeded {
                what: "orbit size",
                value: usize::try_from(size).unwrap_or(usize::MAX),
                cap,
            });
        }
        return word::weight_class(x.len(), x.weight());
    }
    Ok(orbit_by_generators(x, g.generators()))
}

pub(crate) fn orbit_by_generators(x: &Word, gens: &[Permutation]) -> Vec<Word> {
    let mut seen: HashSet<Word> = HashSet::from([*x]);
    let mut out = vec![*x];
    let mut queue = VecDeque::from([*x]);
    while let Some(y) = queue.pop_front() {
        for g in gens {
            let z = g.apply(&y);
            if seen.insert(z) {
                out.push(z);
                queue.push_back(z);
            }
        }
    }
    out.sort();
    out
}

/// The partition of Z₂ⁿ into orbits of a permutation group.
#[derive(Debug, Clone)]
pub struct SPartition {
    n: usize,
    group: PermGroupSpec,
    /// Orbits in order of their least mask; each orbit sorted.
    orbits: Vec<Vec<Word>>,
    orbit_of: Vec<u32>,
}

impl SPartition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> &PermGroupSpec {
        &self.group
    }

    pub fn orbits(&self) -> &[Vec<Word>] {
        &self.orbits
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn orbit_index(&self, w: &Word) -> usize {
        self.orbit_of[w.mask() as usize] as usize
    }

    pub fn orbit_of(&self, w: &Word) -> &[Word] {
        &self.orbits[self.orbit_index(w)]
    }

    /// Orbits ordered by (size, representative), the order used in dumps.
    pub fn sorted_for_output(&self) -> Vec<&[Word]> {
        let mut v: Vec<&[Word]> = self.orbits.iter().map(|o| o.as_slice()).collect();
        v.sort_by_key(|o| (o.len(), o[0]));
        v
    }

    /// True iff `set` is a union of orbits.
    pub fn is_union_of_orbits(&self, set: &[Word]) -> bool {
        let members: HashSet<u64> = set.iter().map(Word::mask).collect();
        let mut touched = BTreeSet::new();
        for w in set {
            touched.insert(self.orbit_index(w));
        }
        touched
            .into_iter()
            .all(|i| self.orbits[i].iter().all(|w| members.contains(&w.mask())))
    }

    /// Check the S-partition axioms: the identity is a singleton block, blocks
    /// are closed under inversion, and the product of any two block sums is
    /// constant on every block. `max_pairs` bounds how many block pairs are
    /// multiplied (all pairs when `None`); pairs are taken in index order.
    pub fn validate_axioms(&self, max_pairs: Option<usize>) -> std::result::Result<(), String> {
        let id = Word::from_raw(self.n, 0);
        if self.orbit_of(&id).len() != 1 {
            return Err("identity is not a singleton block".into());
        }
        // Every word is its own inverse, so each block is its own transpose.
        let mut counts = vec![0i64; 1 << self.n];
        let r = self.orbits.len();
        let mut done = 0usize;
        for i in 0..r {
            for j in i..r {
                if max_pairs.is_some_and(|m| done >= m) {
                    return Ok(());
                }
                done += 1;
                counts.iter_mut().for_each(|c| *c = 0);
                for u in &self.orbits[i] {
                    for v in &self.orbits[j] {
                        counts[(u.mask() ^ v.mask()) as usize] += 1;
                    }
                }
                for (k, block) in self.orbits.iter().enumerate() {
                    let c0 = counts[block[0].mask() as usize];
                    if let Some(w) = block.iter().find(|w| counts[w.mask() as usize] != c0) {
                        return Err(format!(
                            "product of blocks {i} and {j} is not constant on block {k}: {} vs {w}",
                            block[0]
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

pub fn partition(n: usize, g: &PermGroup) -> Result<SPartition> {
    partition_with_limits(n, g, &Limits::default())
}

pub fn partition_with_limits(n: usize, g: &PermGroup, limits: &Limits) -> Result<SPartition> {
    if n != g.n() {
        return Err(Error::LengthMismatch {
            left: n,
            right: g.n(),
        });
    }
    limits.check_n(n)?;
    if n >= 32 {
        return Err(Error::CapExceeded {
            what: "word length for exhaustive enumeration",
            value: n,
            cap: 31,
        });
    }
    const UNSEEN: u32 = u32::MAX;
    let size = 1usize << n;
    let mut orbit_of = vec![UNSEEN; size];
    let mut orbits: Vec<Vec<Word>> = Vec::new();
    if g.is_symmetric() {
        for minus in 0..=n {
            let class = word::weight_class(n, n - minus)?;
            let idx = orbits.len() as u32;
            for w in &class {
                orbit_of[w.mask() as usize] = idx;
            }
            orbits.push(class);
        }
        orbits.sort_by_key(|o| o[0]);
        for (idx, o) in orbits.iter().enumerate() {
            for w in o {
                orbit_of[w.mask() as usize] = idx as u32;
            }
        }
    } else {
        for m in 0..size as u64 {
            if orbit_of[m as usize] != UNSEEN {
                continue;
            }
            let o = orbit_by_generators(&Word::from_raw(n, m), g.generators());
            let idx = orbits.len() as u32;
            for w in &o {
                orbit_of[w.mask() as usize] = idx;
            }
            orbits.push(o);
        }
    }
    Ok(SPartition {
        n,
        group: g.spec().clone(),
        orbits,
        orbit_of,
    })
}

/// True iff `words` is a subgroup of Z₂ⁿ that is a union of `g`-orbits.
pub fn is_s_subgroup(words: &[Word], g: &PermGroup) -> bool {
    let Some(first) = words.first() else {
        return false;
    };
    let n = first.len();
    if n != g.n() || words.iter().any(|w| w.len() != n) {
        return false;
    }
    let set: HashSet<u64> = words.iter().map(Word::mask).collect();
    if !set.contains(&0) {
        return false;
    }
    // |set| = 2^rank and set ⊆ span ⇒ set = span
    let masks: Vec<u64> = set.iter().copied().collect();
    let r = crate::gf2::rank(&masks);
    if r >= 64 || set.len() as u128 != 1u128 << r {
        return false;
    }
    if g.is_symmetric() {
        let mut per_weight = vec![0u128; n + 1];
        for &m in &set {
            per_weight[m.count_ones() as usize] += 1;
        }
        return per_weight
            .iter()
            .enumerate()
            .all(|(k, &c)| c == 0 || c == arith::binomial(n as i64, k as i64));
    }
    set.iter().all(|&m| {
        let w = Word::from_raw(n, m);
        g.generators()
            .iter()
            .all(|p| set.contains(&p.apply(&w).mask()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn group(name: &str, n: usize) -> PermGroup {
        build_group(&PermGroupSpec::from_short_name(name, n).unwrap()).unwrap()
    }

    #[test]
    fn group_orders() {
        assert_eq!(group("cn", 7).order(), 7);
        assert_eq!(group("dn", 7).order(), 6);
        assert_eq!(group("hc", 5).order(), 10);
        assert_eq!(group("hn", 6).order(), 2);
        assert_eq!(group("dn", 12).order(), 4);
        assert_eq!(group("sn", 5).order(), 120);
        // δ₋₁ C is the reflection i ↦ -i-1... so HC = DC-with-(-1) only up to conjugacy
        assert_eq!(group("dc", 7).order(), 42);
        assert_eq!(group("hdc", 7).order(), 42);
    }

    #[test]
    fn decimation_needs_two() {
        assert_eq!(PermGroupSpec::decimation(1), Err(Error::DecimationNeedsTwo));
    }

    #[test]
    fn group_size_cap() {
        let spec = PermGroupSpec::from_short_name("hdc", 13).unwrap();
        let limits = Limits {
            max_group_order: 20,
            ..Limits::default()
        };
        assert!(matches!(
            build_group_with_limits(&spec, &limits),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn permutation_action_matches_word_ops() {
        let x = w("--+-+++-+");
        assert_eq!(Permutation::cyclic(9).apply(&x), x.cyclic_shift(1));
        assert_eq!(Permutation::reversal(9).apply(&x), x.reverse());
        assert_eq!(Permutation::decimation(9, 4).apply(&x), x.decimate(4).unwrap());
        let c = Permutation::cyclic(9);
        let r = Permutation::reversal(9);
        assert_eq!(c.then(&r).apply(&x), r.apply(&c.apply(&x)));
        assert_eq!(c.then(&c.inverse()), Permutation::identity(9));
    }

    #[test]
    fn orbit_examples() {
        let o = orbit(&w("-+++"), &group("cn", 4)).unwrap();
        assert_eq!(o, vec![w("-+++"), w("+-++"), w("++-+"), w("+++-")]);
        let x = w("+++-+++");
        let o = orbit(&x, &group("sn", 7)).unwrap();
        assert_eq!(o, word::weight_class(7, 6).unwrap());
        assert_eq!(orbit(&w("-++-++-++"), &group("cn", 9)).unwrap().len(), 3);
        assert!(orbit(&w("-++"), &group("cn", 4)).is_err());
    }

    #[test]
    fn partition_counts() {
        let p = partition(4, &group("sn", 4)).unwrap();
        assert_eq!(p.len(), 5);
        let p = partition(4, &group("cn", 4)).unwrap();
        assert_eq!(p.len(), 6);
        for o in p.orbits() {
            assert_eq!(4 % o.len(), 0);
        }
        assert_eq!(p.orbit_of(&w("++++")), &[w("++++")]);
        let limits = Limits {
            max_n: 3,
            ..Limits::default()
        };
        assert!(partition_with_limits(4, &group("cn", 4), &limits).is_err());
    }

    #[test]
    fn s_subgroup_examples() {
        let c7 = group("cn", 7);
        assert!(is_s_subgroup(&[w("+++++++"), w("-------")], &c7));
        assert!(!is_s_subgroup(&[w("++++"), w("-+++")], &group("cn", 4)));
        let sn = group("sn", 4);
        let even: Vec<Word> = (0..16u64)
            .filter(|m| m.count_ones() % 2 == 0)
            .map(|m| Word::new(4, m).unwrap())
            .collect();
        assert!(is_s_subgroup(&even, &sn));
    }

    #[test]
    fn axioms_hold() {
        for name in ["sn", "cn", "dn", "hn", "hc", "dc", "hdc"] {
            let p = partition(6, &group(name, 6)).unwrap();
            p.validate_axioms(None).unwrap();
        }
    }
}
