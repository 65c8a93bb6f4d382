//! Schur rings over the elementary abelian group Z₂ⁿ.
//!
//! Elements of Z₂ⁿ are ±1 sequences of length `n`, encoded as bitmasks
//! (bit `i` set means component `i` is `-`). On top of that encoding the
//! crate provides:
//!
//! * the four coordinate symmetries (cyclic shift, reversal, decimation,
//!   negation) and the permutation groups they generate ([`perm_groups`]);
//! * the group algebra, the structure constants of the weight-class
//!   S-ring and complete S-sets ([`schur_ring`]);
//! * code (unique factorization) checks, P(T)-codes and G-codes ([`codes`]);
//! * the named S-subgroup families built from codes: period subgroups,
//!   decimation-invariant subgroups and symmetric subgroups, together with a
//!   theorem-verification suite ([`constructions`]);
//! * periodic correlation tooling and 2-level autocorrelation search
//!   ([`autocorrelation`]).

pub mod arith;
pub mod autocorrelation;
pub mod codes;
pub mod constructions;
pub mod error;
pub mod gf2;
pub mod perm_groups;
pub mod schur_ring;
pub mod word;

pub use error::{Error, Result};
pub use word::Word;

/// Enumeration caps shared by every operation that walks the whole word
/// space or materializes a large set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for which all 2ⁿ words may be enumerated.
    pub max_n: usize,
    /// Largest explicit permutation group that may be materialized.
    pub max_group_order: usize,
    /// Largest subgroup (or orbit) that may be materialized.
    pub max_set_size: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_n: 24,
            max_group_order: 1_000_000,
            max_set_size: 1 << 24,
        }
    }
}

impl Limits {
    pub(crate) fn check_n(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::CapExceeded {
                what: "word length for exhaustive enumeration",
                value: n,
                cap: self.max_n,
            });
        }
        Ok(())
    }
}
