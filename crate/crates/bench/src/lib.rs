//! Shared fixtures for the criterion benches, kept here so the bench file
//! stays a plain list of measurements.

use fbplab_core::monoid::FiniteMonoid;
use fbplab_core::presentation::{catalan_presentation, complete_default, RewriteSystem};
use fbplab_core::transform::{family_monoid, FamilyKind};
use fbplab_core::word::{build_u_n_m, Word};

pub fn chain_monoid(m: usize) -> FiniteMonoid {
    family_monoid(FamilyKind::C, m).expect("chain family is enumerable")
}

pub fn injection_monoid(m: usize) -> FiniteMonoid {
    family_monoid(FamilyKind::IC, m).expect("injection family is enumerable")
}

pub fn completed_chain_presentation(m: usize) -> RewriteSystem {
    complete_default(&catalan_presentation(m).expect("valid size"))
}

pub fn chain_word(n: usize, m: usize) -> Word {
    build_u_n_m(n, m).expect("valid parameters").word
}
