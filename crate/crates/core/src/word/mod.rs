//! Words over named variables: the raw material for identities.
//!
//! A [`Word`] is a finite sequence of [`VariableId`]s. Identities pair two
//! words. Everything here is immutable and cheap to clone; symbol storage is
//! shared through `Arc<str>` so long constructed words (which repeat the same
//! few hundred variables) stay small.

mod build;
mod subword;

pub use build::{
    build_u_n_m, build_w_n, check_p1, check_p2, enumerate_words, f_expand, fbar_expand,
    first_repeated_factor, zimin, ChainWord, HeadTailWord, WORD_LENGTH_CAP,
};
pub use subword::{
    count_scattered_embeddings, gap_alphabets, in_jm, in_um, is_unambiguously_scattered,
    jm_signature, leftmost_embedding, scattered_subwords_upto, um_signature,
    unambiguous_subwords_upto, JmSignature, UmSignature,
};

use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// An interned variable name. Equality and ordering are by the label text.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariableId(Arc<str>);

impl VariableId {
    pub fn new(label: impl AsRef<str>) -> Self {
        VariableId(Arc::from(label.as_ref()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v`{}`", self.0)
    }
}

impl From<&str> for VariableId {
    fn from(s: &str) -> Self {
        VariableId::new(s)
    }
}

/// A word: a possibly empty sequence of variables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<VariableId>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_symbols(symbols: Vec<VariableId>) -> Self {
        Word(symbols)
    }

    /// Parse whitespace-separated tokens: `"x p0_1 y"` has three symbols.
    /// The bare token `ε` reads back as the empty word, mirroring `Display`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim() == "ε" {
            return Ok(Word::empty());
        }
        let symbols: Vec<VariableId> = text.split_whitespace().map(VariableId::new).collect();
        if symbols.is_empty() {
            return Err(Error::Parse(format!("no symbols in word `{text}`")));
        }
        Ok(Word(symbols))
    }

    /// One variable per character; handy in tests (`Word::from_chars("xxyy")`).
    pub fn from_chars(text: &str) -> Self {
        Word(
            text.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| VariableId::new(c.to_string()))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[VariableId] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, v: VariableId) {
        self.0.push(v);
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().cloned().collect())
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    /// Distinct variables in order of first occurrence.
    pub fn alphabet(&self) -> Vec<VariableId> {
        let mut seen = Vec::new();
        for s in &self.0 {
            if !seen.contains(s) {
                seen.push(s.clone());
            }
        }
        seen
    }

    /// All positions of each variable, keyed deterministically.
    pub fn classify_occurrences(&self) -> BTreeMap<VariableId, Vec<usize>> {
        let mut map: BTreeMap<VariableId, Vec<usize>> = BTreeMap::new();
        for (i, s) in self.0.iter().enumerate() {
            map.entry(s.clone()).or_default().push(i);
        }
        map
    }

    /// A variable is linear when it occurs exactly once.
    pub fn is_linear(&self, v: &VariableId) -> bool {
        self.0.iter().filter(|s| *s == v).count() == 1
    }

    /// Sparse: between consecutive occurrences of every repeated variable
    /// there is at least one variable that is linear in the whole word.
    /// Checking consecutive pairs suffices; any wider gap contains one.
    pub fn is_sparse(&self) -> bool {
        let occ = self.classify_occurrences();
        let linear_at: Vec<bool> = self.0.iter().map(|s| occ[s].len() == 1).collect();
        for positions in occ.values() {
            for pair in positions.windows(2) {
                let gap_has_linear = (pair[0] + 1..pair[1]).any(|i| linear_at[i]);
                if !gap_has_linear {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        let mut first = true;
        for s in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            f.write_str(s.as_str())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w`{self}`")
    }
}

impl FromIterator<VariableId> for Word {
    fn from_iter<I: IntoIterator<Item = VariableId>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// A formal identity `lhs ≈ rhs`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Identity {
    pub lhs: Word,
    pub rhs: Word,
}

impl Identity {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        Identity { lhs, rhs }
    }

    /// Parse `lhs ~ rhs` with whitespace-separated symbols on each side.
    pub fn parse(text: &str) -> Result<Self> {
        let (l, r) = text
            .split_once('~')
            .ok_or_else(|| Error::Parse(format!("identity `{text}` has no `~`")))?;
        Ok(Identity::new(Word::parse(l)?, Word::parse(r)?))
    }

    /// Union of both sides' alphabets, in order of first occurrence
    /// (left side first).
    pub fn variables(&self) -> Vec<VariableId> {
        let mut vars = self.lhs.alphabet();
        for v in self.rhs.alphabet() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        vars
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ~ {}", self.lhs, self.rhs)
    }
}

impl fmt::Debug for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "id`{self}`")
    }
}

/// A substitution assigning a replacement word to each variable.
#[derive(Clone, Default, Debug)]
pub struct Substitution(BTreeMap<VariableId, Word>);

impl Substitution {
    pub fn new() -> Self {
        Substitution(BTreeMap::new())
    }

    pub fn bind(&mut self, v: VariableId, w: Word) -> &mut Self {
        self.0.insert(v, w);
        self
    }

    pub fn get(&self, v: &VariableId) -> Option<&Word> {
        self.0.get(v)
    }
}

/// Replace every symbol of `w` by its image. Errors on unbound variables.
pub fn apply_substitution(w: &Word, theta: &Substitution) -> Result<Word> {
    let mut out = Vec::new();
    for s in w.symbols() {
        let image = theta
            .get(s)
            .ok_or_else(|| Error::UnboundVariable(s.as_str().to_string()))?;
        out.extend_from_slice(image.symbols());
    }
    Ok(Word::from_symbols(out))
}
