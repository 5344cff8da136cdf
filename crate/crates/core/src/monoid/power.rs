//! Subset monoids over a small base: subsets containing the identity,
//! multiplied setwise. Subsets live in single machine words, so the base
//! must have at most 64 elements.

use super::{cap_bytes, closure_from_generators, table_bytes, FiniteMonoid};
use crate::error::{Error, Result};

fn setwise_product(base: &FiniteMonoid, a: u64, b: u64) -> u64 {
    let mut out = 0u64;
    let mut x = a;
    while x != 0 {
        let i = x.trailing_zeros() as usize;
        x &= x - 1;
        let mut y = b;
        while y != 0 {
            let j = y.trailing_zeros() as usize;
            y &= y - 1;
            out |= 1 << base.mul(i, j);
        }
    }
    out
}

fn subset_label(base: &FiniteMonoid, mask: u64) -> String {
    let parts: Vec<&str> = (0..base.size())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| base.label(i))
        .collect();
    format!("{{{}}}", parts.join(","))
}

/// The monoid of all identity-containing subsets of `base`. Index 0 is the
/// singleton of the identity; index `i` places the bits of `i` on the
/// non-identity elements in increasing order.
pub fn unitary_power_monoid(base: &FiniteMonoid) -> Result<FiniteMonoid> {
    if base.size() > 64 {
        return Err(Error::cap("subset bit width", base.size() as u128, 64));
    }
    let n: u128 = 1u128 << (base.size() - 1);
    if table_bytes(n) > cap_bytes() {
        return Err(Error::cap(
            "subset monoid table",
            table_bytes(n),
            cap_bytes(),
        ));
    }
    let n = n as usize;

    let id = base.identity_index();
    let free: Vec<usize> = (0..base.size()).filter(|&i| i != id).collect();
    let to_mask = |code: usize| -> u64 {
        let mut mask = 1u64 << id;
        for (r, &p) in free.iter().enumerate() {
            if code >> r & 1 == 1 {
                mask |= 1 << p;
            }
        }
        mask
    };
    let to_code = |mask: u64| -> usize {
        let mut code = 0usize;
        for (r, &p) in free.iter().enumerate() {
            if mask >> p & 1 == 1 {
                code |= 1 << r;
            }
        }
        code
    };

    let masks: Vec<u64> = (0..n).map(to_mask).collect();
    let mut table = vec![0u32; n * n];
    for (i, &a) in masks.iter().enumerate() {
        for (j, &b) in masks.iter().enumerate() {
            table[i * n + j] = to_code(setwise_product(base, a, b)) as u32;
        }
    }
    let labels = masks.iter().map(|&m| subset_label(base, m)).collect();
    FiniteMonoid::assemble(n, table, 0, (1..n).collect(), labels)
}

/// Closure of chosen identity-containing subsets under setwise product,
/// without materializing the full subset monoid; this is how subset monoids
/// over larger groups stay tractable.
pub fn unitary_closure(base: &FiniteMonoid, generators: &[Vec<usize>]) -> Result<FiniteMonoid> {
    if base.size() > 64 {
        return Err(Error::cap("subset bit width", base.size() as u128, 64));
    }
    let id_mask = 1u64 << base.identity_index();
    let mut gen_masks = Vec::with_capacity(generators.len());
    for g in generators {
        let mut mask = id_mask;
        for &e in g {
            if e >= base.size() {
                return Err(Error::invalid("subset member out of range"));
            }
            mask |= 1 << e;
        }
        gen_masks.push(mask);
    }
    closure_from_generators(
        id_mask,
        &gen_masks,
        |&a, &b| setwise_product(base, a, b),
        |&m| subset_label(base, m),
    )
}
