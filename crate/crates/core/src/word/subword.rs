//! Scattered (non-contiguous) subwords and the identity sets built on them.
//!
//! `u` occurs as a scattered subword of `v` when `v` can be written as
//! `v0 u1 v1 u2 v2 ... uk vk` with possibly empty fillers `vi`. An occurrence
//! is recorded as the strictly increasing position sequence of the `ui`.

use super::{Identity, VariableId, Word};
use std::collections::{BTreeMap, BTreeSet};

/// Number of distinct position sequences embedding `u` into `v`, saturated
/// at `cap`. The saturation keeps long hosts cheap: callers only ever need
/// to distinguish zero / one / many.
pub fn count_scattered_embeddings(u: &Word, v: &Word, cap: usize) -> usize {
    if u.is_empty() {
        return 1.min(cap);
    }
    // dp[i] = number of embeddings of u[..i] into the scanned prefix of v
    let mut dp = vec![0usize; u.len() + 1];
    dp[0] = 1;
    for c in v.symbols() {
        for i in (1..=u.len()).rev() {
            if &u.symbols()[i - 1] == c {
                dp[i] = (dp[i] + dp[i - 1]).min(cap);
            }
        }
    }
    dp[u.len()]
}

/// Greedy left-to-right embedding. By construction its positions are
/// pointwise minimal among all embeddings of `u` into `v`.
pub fn leftmost_embedding(u: &Word, v: &Word) -> Option<Vec<usize>> {
    let mut positions = Vec::with_capacity(u.len());
    let mut from = 0usize;
    for c in u.symbols() {
        let hit = (from..v.len()).find(|&i| &v.symbols()[i] == c)?;
        positions.push(hit);
        from = hit + 1;
    }
    Some(positions)
}

pub fn is_unambiguously_scattered(u: &Word, v: &Word) -> bool {
    count_scattered_embeddings(u, v, 2) == 1
}

/// All distinct nonempty scattered subwords of `v` with length at most `k`.
///
/// Enumeration walks each subword through its leftmost embedding (branch on
/// the first occurrence of each distinct next symbol), so every subword is
/// produced exactly once without a dedup pass.
pub fn scattered_subwords_upto(v: &Word, k: usize) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    let mut stack: Vec<VariableId> = Vec::new();
    fn rec(v: &Word, from: usize, k: usize, stack: &mut Vec<VariableId>, out: &mut BTreeSet<Word>) {
        if stack.len() == k {
            return;
        }
        let mut seen: Vec<&VariableId> = Vec::new();
        for i in from..v.len() {
            let c = &v.symbols()[i];
            if seen.contains(&c) {
                continue;
            }
            seen.push(c);
            stack.push(c.clone());
            out.insert(Word::from_symbols(stack.clone()));
            rec(v, i + 1, k, stack, out);
            stack.pop();
        }
    }
    rec(v, 0, k, &mut stack, &mut out);
    out
}

/// The subwords of `v` (length ≤ k) with exactly one embedding.
pub fn unambiguous_subwords_upto(v: &Word, k: usize) -> BTreeSet<Word> {
    scattered_subwords_upto(v, k)
        .into_iter()
        .filter(|u| is_unambiguously_scattered(u, v))
        .collect()
}

/// For `u` unambiguously scattered in `v = v0 u1 v1 ... uk vk`, the alphabets
/// of the fillers `v0..vk` (k+1 of them). `None` when `u` is not a subword of
/// `v` or is ambiguous there.
pub fn gap_alphabets(u: &Word, v: &Word) -> Option<Vec<BTreeSet<VariableId>>> {
    if !is_unambiguously_scattered(u, v) {
        return None;
    }
    let p = leftmost_embedding(u, v)?;
    let mut gaps = Vec::with_capacity(u.len() + 1);
    let mut prev = 0usize;
    for &q in &p {
        gaps.push(alphabet_of_range(v, prev, q));
        prev = q + 1;
    }
    gaps.push(alphabet_of_range(v, prev, v.len()));
    Some(gaps)
}

fn alphabet_of_range(v: &Word, from: usize, to: usize) -> BTreeSet<VariableId> {
    v.symbols()[from..to].iter().cloned().collect()
}

/// Everything the relation "same scattered subwords up to length m" can see
/// of a single word. Two words are J_m-equivalent iff their signatures agree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JmSignature {
    pub m: usize,
    pub subwords: BTreeSet<Word>,
}

pub fn jm_signature(w: &Word, m: usize) -> JmSignature {
    JmSignature {
        m,
        subwords: if m == 0 {
            BTreeSet::new()
        } else {
            scattered_subwords_upto(w, m)
        },
    }
}

/// `id` lies in J_m: both sides have the same scattered subwords of length
/// ≤ m. J_0 contains every identity.
pub fn in_jm(id: &Identity, m: usize) -> bool {
    jm_signature(&id.lhs, m) == jm_signature(&id.rhs, m)
}

/// The per-word data underlying U_m membership: the alphabet, plus every
/// unambiguous subword of length ≤ m together with its filler alphabets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UmSignature {
    pub m: usize,
    pub alphabet: BTreeSet<VariableId>,
    pub unambiguous: BTreeMap<Word, Vec<BTreeSet<VariableId>>>,
}

pub fn um_signature(w: &Word, m: usize) -> UmSignature {
    let alphabet = w.symbols().iter().cloned().collect();
    let mut unambiguous = BTreeMap::new();
    if m > 0 {
        for u in unambiguous_subwords_upto(w, m) {
            let gaps = gap_alphabets(&u, w).expect("unambiguous subword has gaps");
            unambiguous.insert(u, gaps);
        }
    }
    UmSignature {
        m,
        alphabet,
        unambiguous,
    }
}

/// `id` lies in U_m: same alphabets, same unambiguous subwords of length
/// ≤ m, and matching filler alphabets around each one. U_0 asks only for
/// equal alphabets.
///
/// Comparing whole signatures is equivalent to the three conditions: when
/// the unambiguous-subword sets differ the maps differ, and when they agree
/// every common subword's fillers get compared.
pub fn in_um(id: &Identity, m: usize) -> bool {
    um_signature(&id.lhs, m) == um_signature(&id.rhs, m)
}
