//! Bounded equational reasoning over a finite monoid: which short identities
//! hold, which words admit no equivalent partner, and structural certificates
//! that bypass substitution search entirely.

use super::{satisfies_identity, ElementSubstitution, FiniteMonoid};
use crate::error::{Error, Result};
use crate::word::{enumerate_words, Identity, VariableId, Word};
use std::collections::{BTreeSet, HashMap};
use std::ops::Range;

const EVALUATION_BUDGET: u128 = 200_000_000;

/// All words over a fixed variable set up to a length bound, arranged so
/// each word knows its one-symbol-shorter prefix. Evaluating every word
/// under one substitution is then a single pass with one table lookup per
/// word.
pub struct WordUniverse {
    variables: Vec<VariableId>,
    words: Vec<Word>,
    parent: Vec<u32>,
    last: Vec<u32>,
    index: HashMap<Word, usize>,
}

const NO_PARENT: u32 = u32::MAX;

impl WordUniverse {
    pub fn new(variables: &[VariableId], max_len: usize) -> Result<Self> {
        let words = enumerate_words(variables, max_len)?;
        let mut index = HashMap::with_capacity(words.len());
        for (i, w) in words.iter().enumerate() {
            index.insert(w.clone(), i);
        }
        let var_index: HashMap<&VariableId, u32> = variables
            .iter()
            .enumerate()
            .map(|(i, v)| (v, i as u32))
            .collect();
        let mut parent = Vec::with_capacity(words.len());
        let mut last = Vec::with_capacity(words.len());
        for w in &words {
            let symbols = w.symbols();
            last.push(var_index[&symbols[symbols.len() - 1]]);
            if symbols.len() == 1 {
                parent.push(NO_PARENT);
            } else {
                let prefix = w.slice(0..symbols.len() - 1);
                parent.push(index[&prefix] as u32);
            }
        }
        Ok(WordUniverse {
            variables: variables.to_vec(),
            words,
            parent,
            last,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn variables(&self) -> &[VariableId] {
        &self.variables
    }

    pub fn position(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// `assignment[i]` is the element substituted for `variables[i]`;
    /// `out[j]` receives the value of word `j`.
    pub fn eval_into(&self, m: &FiniteMonoid, assignment: &[usize], out: &mut [u32]) {
        for i in 0..self.words.len() {
            let sym = assignment[self.last[i] as usize] as u32;
            out[i] = if self.parent[i] == NO_PARENT {
                sym
            } else {
                m.mul(out[self.parent[i] as usize] as usize, sym as usize) as u32
            };
        }
    }
}

/// Words of the universe partitioned by their value vectors over every
/// substitution into `m`: two words share a class exactly when `m` satisfies
/// the identity between them.
pub struct TheoryFragment {
    pub universe: WordUniverse,
    pub class_of: Vec<u32>,
    pub class_count: usize,
}

impl TheoryFragment {
    pub fn equivalent(&self, i: usize, j: usize) -> bool {
        self.class_of[i] == self.class_of[j]
    }

    /// Whether the fragment settles `id`; `None` when a side is outside the
    /// universe.
    pub fn satisfies(&self, id: &Identity) -> Option<bool> {
        let l = self.universe.position(&id.lhs)?;
        let r = self.universe.position(&id.rhs)?;
        Some(self.equivalent(l, r))
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count];
        for (i, &c) in self.class_of.iter().enumerate() {
            out[c as usize].push(i);
        }
        out
    }

    /// Every nontrivial identity the fragment contains, one canonical
    /// representative per renaming-and-swap orbit.
    pub fn identities(&self) -> Vec<Identity> {
        let mut seen = BTreeSet::new();
        for class in self.classes() {
            for (a, &i) in class.iter().enumerate() {
                for &j in &class[a + 1..] {
                    let id = canonical_identity(&self.universe.words[i], &self.universe.words[j]);
                    if id.lhs != id.rhs {
                        seen.insert(id);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }
}

/// Partition the universe over `variables`/`max_len` by evaluation under all
/// substitutions. Runs one refinement round per substitution; the class ids
/// are renumbered by first appearance, so the result is deterministic.
pub fn bounded_identity_theory(
    m: &FiniteMonoid,
    variables: &[VariableId],
    max_len: usize,
) -> Result<TheoryFragment> {
    let universe = WordUniverse::new(variables, max_len)?;
    let subs = (m.size() as u128)
        .checked_pow(variables.len() as u32)
        .ok_or_else(|| Error::cap("theory substitutions", u128::MAX, EVALUATION_BUDGET))?;
    let work = subs.saturating_mul(universe.len() as u128);
    if work > EVALUATION_BUDGET {
        return Err(Error::cap("theory evaluations", work, EVALUATION_BUDGET));
    }

    let mut class_of = vec![0u32; universe.len()];
    let mut values = vec![0u32; universe.len()];
    let mut renumber: HashMap<(u32, u32), u32> = HashMap::new();
    let mut assignment = vec![0usize; variables.len()];
    'subs: loop {
        universe.eval_into(m, &assignment, &mut values);
        renumber.clear();
        for i in 0..universe.len() {
            let next = renumber.len() as u32;
            class_of[i] = *renumber.entry((class_of[i], values[i])).or_insert(next);
        }
        if renumber.len() == universe.len() {
            break; // discrete already; nothing left to separate
        }
        for pos in (0..assignment.len()).rev() {
            assignment[pos] += 1;
            if assignment[pos] < m.size() {
                continue 'subs;
            }
            assignment[pos] = 0;
        }
        break;
    }
    let class_count = class_of.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
    Ok(TheoryFragment {
        universe,
        class_of,
        class_count,
    })
}

/// Normal form of an unordered pair of words: variables renamed to x1,x2,..
/// in order of first appearance across the pair, sides ordered so the
/// rendered pair is lexicographically least.
pub fn canonical_identity(u: &Word, v: &Word) -> Identity {
    let a = rename_pair(u, v);
    let b = rename_pair(v, u);
    if (&a.lhs, &a.rhs) <= (&b.lhs, &b.rhs) {
        a
    } else {
        b
    }
}

fn rename_pair(first: &Word, second: &Word) -> Identity {
    let mut map: HashMap<VariableId, VariableId> = HashMap::new();
    let mut fresh = 0usize;
    let rename = |w: &Word, map: &mut HashMap<VariableId, VariableId>, fresh: &mut usize| {
        w.symbols()
            .iter()
            .map(|s| {
                map.entry(s.clone())
                    .or_insert_with(|| {
                        *fresh += 1;
                        VariableId::new(format!("x{fresh}"))
                    })
                    .clone()
            })
            .collect::<Word>()
    };
    let lhs = rename(first, &mut map, &mut fresh);
    let rhs = rename(second, &mut map, &mut fresh);
    Identity::new(lhs, rhs)
}

/// Outcome of the bounded isoterm search; `is_isoterm` is relative to the
/// recorded bounds, never an absolute claim.
#[derive(Clone, Debug)]
pub struct IsotermVerdict {
    pub is_isoterm: bool,
    pub witness: Option<Word>,
    pub max_len: usize,
    pub extra_fresh: usize,
}

impl IsotermVerdict {
    pub fn describe(&self) -> String {
        match (&self.is_isoterm, &self.witness) {
            (true, _) => format!(
                "no equivalent partner up to length {} with {} fresh variables (bounded verdict)",
                self.max_len, self.extra_fresh
            ),
            (false, Some(w)) => format!("equivalent partner found: {w}"),
            (false, None) => unreachable!("failure always carries a witness"),
        }
    }
}

/// Search for a word `v ≠ u` with `u ≈ v` holding in `m`, over the alphabet
/// of `u` plus `extra_fresh` new variables and lengths up to `max_len`
/// (defaults: `|u| + 2` and one fresh variable).
pub fn is_isoterm_bounded(
    m: &FiniteMonoid,
    u: &Word,
    max_len: Option<usize>,
    extra_fresh: Option<usize>,
) -> Result<IsotermVerdict> {
    if u.is_empty() {
        return Err(Error::invalid("isoterm candidate must be nonempty"));
    }
    let max_len = max_len.unwrap_or(u.len() + 2);
    let extra_fresh = extra_fresh.unwrap_or(1);

    let mut variables = u.alphabet();
    let mut counter = 0usize;
    for _ in 0..extra_fresh {
        let fresh = loop {
            counter += 1;
            let cand = VariableId::new(format!("t{counter}"));
            if !variables.contains(&cand) {
                break cand;
            }
        };
        variables.push(fresh);
    }

    let universe = WordUniverse::new(&variables, max_len)?;
    let subs = (m.size() as u128)
        .checked_pow(variables.len() as u32)
        .ok_or_else(|| Error::cap("isoterm substitutions", u128::MAX, EVALUATION_BUDGET))?;
    let work = subs.saturating_mul(universe.len() as u128);
    if work > EVALUATION_BUDGET {
        return Err(Error::cap("isoterm evaluations", work, EVALUATION_BUDGET));
    }

    let u_pos = universe.position(u);
    let mut alive = vec![true; universe.len()];
    let mut alive_count = universe.len();
    let mut values = vec![0u32; universe.len()];
    let mut assignment = vec![0usize; variables.len()];
    let goal = usize::from(u_pos.is_some());

    'subs: loop {
        universe.eval_into(m, &assignment, &mut values);
        let u_val = match u_pos {
            Some(i) => values[i],
            None => {
                let mut sub = ElementSubstitution::new();
                for (v, &e) in variables.iter().zip(&assignment) {
                    sub.bind(v.clone(), e);
                }
                m.evaluate_word(&sub, u)? as u32
            }
        };
        for i in 0..universe.len() {
            if alive[i] && values[i] != u_val {
                alive[i] = false;
                alive_count -= 1;
            }
        }
        if alive_count == goal {
            break;
        }
        for pos in (0..assignment.len()).rev() {
            assignment[pos] += 1;
            if assignment[pos] < m.size() {
                continue 'subs;
            }
            assignment[pos] = 0;
        }
        break;
    }

    let witness = alive
        .iter()
        .enumerate()
        .find(|&(i, &a)| a && Some(i) != u_pos)
        .map(|(i, _)| universe.words[i].clone());
    Ok(IsotermVerdict {
        is_isoterm: witness.is_none(),
        witness,
        max_len,
        extra_fresh,
    })
}

/// Verify `blocks` partitions `u` and the block alphabets weakly descend,
/// ending above the alphabet of `v`. This is the structural certificate
/// that `u ≈ uv` survives any R-trivial monoid with fewer elements than
/// there are blocks.
pub fn check_alphabet_chain(u: &Word, blocks: &[Range<usize>], v: &Word) -> Result<bool> {
    if blocks.is_empty() {
        return Err(Error::invalid("chain needs at least one block"));
    }
    let mut expected = 0usize;
    for b in blocks {
        if b.start != expected || b.end <= b.start {
            return Err(Error::invalid(
                "blocks must partition the word without gaps",
            ));
        }
        expected = b.end;
    }
    if expected != u.len() {
        return Err(Error::invalid("blocks must cover the whole word"));
    }

    let alphabets: Vec<BTreeSet<&VariableId>> = blocks
        .iter()
        .map(|b| u.symbols()[b.clone()].iter().collect())
        .collect();
    for pair in alphabets.windows(2) {
        if !pair[0].is_superset(&pair[1]) {
            return Ok(false);
        }
    }
    let v_alphabet: BTreeSet<&VariableId> = v.symbols().iter().collect();
    Ok(alphabets.last().unwrap().is_superset(&v_alphabet))
}

/// Map block ranges into the coordinates of the reversed word, preserving
/// left-to-right reading order there. Feeding the result to
/// [`check_alphabet_chain`] against the reversed word is the dual (left
/// ideal) certificate.
pub fn reversed_blocks(len: usize, blocks: &[Range<usize>]) -> Vec<Range<usize>> {
    blocks
        .iter()
        .rev()
        .map(|r| (len - r.end)..(len - r.start))
        .collect()
}

/// Exhaustively confirm `u x v ≈ u v` in an idempotent monoid, after
/// checking the shape makes the identity a candidate: `x` occurs in `u` and
/// both outer words use exactly the same variables.
pub fn band_identity_check(b: &FiniteMonoid, u: &Word, x: &VariableId, v: &Word) -> Result<bool> {
    if !b.structure_flags().band {
        return Err(Error::invalid("monoid is not a band"));
    }
    let ua: BTreeSet<&VariableId> = u.symbols().iter().collect();
    let va: BTreeSet<&VariableId> = v.symbols().iter().collect();
    if ua != va {
        return Err(Error::invalid("the two sides must share an alphabet"));
    }
    if !ua.contains(x) {
        return Err(Error::invalid(
            "the deleted variable must occur in the left part",
        ));
    }
    let mid = Word::from_symbols(vec![x.clone()]);
    let lhs = u.concat(&mid).concat(v);
    let rhs = u.concat(v);
    Ok(satisfies_identity(b, &Identity::new(lhs, rhs))?.holds())
}
