//! Named S-subgroup families built from codes, and a suite that checks the
//! statements about them at a given length.
//!
//! * period subgroups 𝔾_d(n), generated by the arithmetic-progression codes
//!   𝒳_{F,d};
//! * decimation-invariant subgroups 𝕀ₙ(a), generated by one codeword per
//!   cyclotomic coset of `a`;
//! * the symmetric subgroup Sym(Z₂ⁿ) of reversal-fixed words.
//!
//! Each family is computed twice, from its code and by scanning Z₂ⁿ, and
//! the two results must agree.

mod invariant;
mod period;
mod sym;
pub mod theorems;

pub use invariant::{
    cyclotomic_cosets, delta_partition_of_base, invariant_code, invariant_code_with_base,
    invariant_subgroup, invariant_subgroup_by_scan, invariant_subgroup_with_base,
    CyclotomicCosets, DeltaSplit,
};
pub use period::{
    fundamental_period, g_lattice, g_subgroup, g_subgroup_by_scan, mobius_period_count,
    period_decomposition, xfd_code, xfd_code_with_base, PeriodDecomposition,
};
pub use sym::{sym_base, sym_code, sym_code_with_base, sym_subgroup, sym_subgroup_by_scan};
pub use theorems::{run_theorem, theorem_suite, Status, TheoremReport, THEOREM_IDS};

use std::collections::BTreeSet;

use crate::word::Word;

/// Union of the cyclic-shift orbits of the words in `set`, sorted.
pub fn shift_closure(set: &[Word]) -> Vec<Word> {
    let mut out = BTreeSet::new();
    for w in set {
        for k in 0..w.len() as i64 {
            out.insert(w.cyclic_shift(k));
        }
    }
    out.into_iter().collect()
}
