//! Constructions of the structured long words the test suites feed to
//! monoids, plus the factor/separation predicates they are built to satisfy.

use super::{VariableId, Word};
use crate::error::{Error, Result};
use std::collections::HashSet;
use std::ops::Range;

/// Hard ceiling on the length of any constructed word. The chain words grow
/// like 2^m, so builders predict their length first and refuse beyond this.
pub const WORD_LENGTH_CAP: usize = 1_000_000;

const ENUMERATION_CAP: u128 = 2_000_000;

fn fresh(level: usize, slot: usize) -> VariableId {
    VariableId::new(format!("p{level}_{slot}"))
}

/// Interleave `w` with the fresh pool of the given level:
/// `f(s1 s2 .. sk) = p_0 s1 p_1 s2 .. p_{k-1} sk p_k`.
/// Length law: `|f(w)| = 2|w| + 1`.
pub fn f_expand(w: &Word, level: usize) -> Word {
    let mut out = Vec::with_capacity(2 * w.len() + 1);
    for (i, s) in w.symbols().iter().enumerate() {
        out.push(fresh(level, i));
        out.push(s.clone());
    }
    out.push(fresh(level, w.len()));
    Word::from_symbols(out)
}

/// Same pool as [`f_expand`] but dealt out in reverse: slot j of a length-k
/// word gets `p_{k-j}`, so the final slot gets `p_0`.
pub fn fbar_expand(w: &Word, level: usize) -> Word {
    let k = w.len();
    let mut out = Vec::with_capacity(2 * k + 1);
    for (i, s) in w.symbols().iter().enumerate() {
        out.push(fresh(level, k - i));
        out.push(s.clone());
    }
    out.push(fresh(level, 0));
    Word::from_symbols(out)
}

/// A word together with a partition into blocks whose alphabets (weakly)
/// shrink left to right; the chain certificate in the monoid layer consumes
/// exactly this metadata.
#[derive(Clone, Debug)]
pub struct ChainWord {
    pub word: Word,
    pub blocks: Vec<Range<usize>>,
}

impl ChainWord {
    pub fn block_words(&self) -> Vec<Word> {
        self.blocks
            .iter()
            .map(|r| self.word.slice(r.clone()))
            .collect()
    }
}

/// `x f^{m-1}(y) x f^{m-2}(y) ... x f(y) x y` over `y = y1..yn`, with one
/// block per `x f^k(y)` segment. Deeper expansions sit further left, so the
/// block alphabets form a descending chain ending at `{x, y1..yn}`.
pub fn build_u_n_m(n: usize, m: usize) -> Result<ChainWord> {
    if n < 1 || m < 1 {
        return Err(Error::invalid("chain word needs n >= 1 and m >= 1"));
    }
    let predicted = (n as u128 + 1) * ((1u128 << m) - 1);
    if predicted > WORD_LENGTH_CAP as u128 {
        return Err(Error::cap(
            "chain word length",
            predicted,
            WORD_LENGTH_CAP as u128,
        ));
    }

    let expansions = stacked_expansions(&y_word(n), m - 1, f_expand);
    let x = VariableId::new("x");
    let mut symbols = Vec::with_capacity(predicted as usize);
    let mut blocks = Vec::with_capacity(m);
    for level in (0..m).rev() {
        let start = symbols.len();
        symbols.push(x.clone());
        symbols.extend(expansions[level].symbols().iter().cloned());
        blocks.push(start..symbols.len());
    }
    Ok(ChainWord {
        word: Word::from_symbols(symbols),
        blocks,
    })
}

/// A chain word glued to its mirror image: head blocks certify the chain
/// read left to right, tail blocks certify it read right to left.
#[derive(Clone, Debug)]
pub struct HeadTailWord {
    pub word: Word,
    /// Ranges of the head blocks `x f^k(y)`, leftmost first.
    pub head_blocks: Vec<Range<usize>>,
    /// Ranges of the tail blocks `fbar^k(y') x`, leftmost first.
    pub tail_blocks: Vec<Range<usize>>,
    /// Index where the tail begins.
    pub split: usize,
}

impl HeadTailWord {
    pub fn head(&self) -> Word {
        self.word.slice(0..self.split)
    }

    pub fn tail(&self) -> Word {
        self.word.slice(self.split..self.word.len())
    }
}

/// Head `u` over `y1..y_{2n}` followed by the mirrored tail
/// `y' x fbar(y') x ... x fbar^{m-1}(y') x`, where `y'` lists the odd-indexed
/// variables then the even-indexed ones. The tail reuses the head's fresh
/// pools level by level, dealt in reverse, and ends with a trailing `x`.
pub fn build_w_n(n: usize, m: usize) -> Result<HeadTailWord> {
    if n < 2 {
        return Err(Error::invalid("head-tail word needs n >= 2"));
    }
    let head = build_u_n_m(2 * n, m)?;
    let predicted = 2 * head.word.len() as u128;
    if predicted > WORD_LENGTH_CAP as u128 {
        return Err(Error::cap(
            "head-tail word length",
            predicted,
            WORD_LENGTH_CAP as u128,
        ));
    }

    let expansions = stacked_expansions(&y_prime_word(n), m - 1, fbar_expand);
    let x = VariableId::new("x");
    let mut symbols: Vec<VariableId> = head.word.symbols().to_vec();
    let split = symbols.len();
    let mut tail_blocks = Vec::with_capacity(m);
    for expansion in &expansions {
        let start = symbols.len();
        symbols.extend(expansion.symbols().iter().cloned());
        symbols.push(x.clone());
        tail_blocks.push(start..symbols.len());
    }
    Ok(HeadTailWord {
        word: Word::from_symbols(symbols),
        head_blocks: head.blocks,
        tail_blocks,
        split,
    })
}

fn y_word(n: usize) -> Word {
    (1..=n).map(|i| VariableId::new(format!("y{i}"))).collect()
}

/// `y1 y3 .. y_{2n-1} y2 y4 .. y_{2n}`.
fn y_prime_word(n: usize) -> Word {
    (1..=2 * n)
        .step_by(2)
        .chain((2..=2 * n).step_by(2))
        .map(|i| VariableId::new(format!("y{i}")))
        .collect()
}

/// `expansions[k]` is the k-fold expansion, applied innermost-first so level
/// 0 is the deepest pool.
fn stacked_expansions(base: &Word, depth: usize, expand: fn(&Word, usize) -> Word) -> Vec<Word> {
    let mut out = vec![base.clone()];
    for level in 0..depth {
        out.push(expand(&out[level], level));
    }
    out
}

/// `Z_1 = x1`, `Z_{k+1} = Z_k x_{k+1} Z_k`; length `2^n - 1`.
pub fn zimin(n: usize) -> Result<Word> {
    if n < 1 {
        return Err(Error::invalid("zimin index must be >= 1"));
    }
    let predicted = (1u128 << n.min(64)) - 1;
    if n >= 64 || predicted > WORD_LENGTH_CAP as u128 {
        return Err(Error::cap(
            "zimin word length",
            predicted,
            WORD_LENGTH_CAP as u128,
        ));
    }
    let mut w = Word::from_symbols(vec![VariableId::new("x1")]);
    for k in 2..=n {
        let mid = Word::from_symbols(vec![VariableId::new(format!("x{k}"))]);
        w = w.concat(&mid).concat(&w);
    }
    Ok(w)
}

/// First ordered two-symbol factor occurring twice, if any.
pub fn first_repeated_factor(w: &Word) -> Option<(VariableId, VariableId)> {
    let mut seen = HashSet::new();
    for pair in w.symbols().windows(2) {
        let key = (pair[0].clone(), pair[1].clone());
        if !seen.insert(key.clone()) {
            return Some(key);
        }
    }
    None
}

/// Every ordered two-symbol word occurs as a contiguous factor at most once.
pub fn check_p1(w: &Word) -> bool {
    first_repeated_factor(w).is_none()
}

/// Between consecutive occurrences of every variable lie at least `n`
/// pairwise distinct variables. Consecutive pairs suffice: the variables
/// between a wider pair include those between any consecutive pair inside.
pub fn check_p2(w: &Word, n: usize) -> bool {
    for positions in w.classify_occurrences().values() {
        for pair in positions.windows(2) {
            let distinct: HashSet<&VariableId> = w.symbols()[pair[0] + 1..pair[1]].iter().collect();
            if distinct.len() < n {
                return false;
            }
        }
    }
    true
}

/// All words over `alphabet` of length 1..=max_len in shortlex order.
pub fn enumerate_words(alphabet: &[VariableId], max_len: usize) -> Result<Vec<Word>> {
    if alphabet.is_empty() || max_len < 1 {
        return Err(Error::invalid(
            "enumeration needs a nonempty alphabet and max_len >= 1",
        ));
    }
    let a = alphabet.len() as u128;
    let mut total = 0u128;
    let mut power = 1u128;
    for _ in 0..max_len {
        power = power
            .checked_mul(a)
            .ok_or_else(|| Error::cap("word enumeration", u128::MAX, ENUMERATION_CAP))?;
        total += power;
        if total > ENUMERATION_CAP {
            return Err(Error::cap("word enumeration", total, ENUMERATION_CAP));
        }
    }

    let mut out = Vec::with_capacity(total as usize);
    for len in 1..=max_len {
        let mut indices = vec![0usize; len];
        'words: loop {
            out.push(indices.iter().map(|&i| alphabet[i].clone()).collect());
            for pos in (0..len).rev() {
                indices[pos] += 1;
                if indices[pos] < alphabet.len() {
                    continue 'words;
                }
                indices[pos] = 0;
            }
            break;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn alphabet_set(w: &Word) -> BTreeSet<VariableId> {
        w.symbols().iter().cloned().collect()
    }

    #[test]
    fn expansion_shapes() {
        let z = Word::parse("z1 z2 z3").unwrap();
        assert_eq!(f_expand(&z, 0).to_string(), "p0_0 z1 p0_1 z2 p0_2 z3 p0_3");

        let yp = Word::parse("y1 y3 y2 y4").unwrap();
        assert_eq!(
            fbar_expand(&yp, 0).to_string(),
            "p0_4 y1 p0_3 y3 p0_2 y2 p0_1 y4 p0_0"
        );
    }

    #[test]
    fn expansion_length_law() {
        let mut w = Word::parse("a").unwrap();
        for level in 0.. {
            if w.len() > 64 {
                break;
            }
            let f = f_expand(&w, level);
            assert_eq!(f.len(), 2 * w.len() + 1);
            assert!(alphabet_set(&f).is_superset(&alphabet_set(&w)));
            let fb = fbar_expand(&w, level);
            assert_eq!(alphabet_set(&fb), alphabet_set(&f));
            w = f;
        }
    }

    #[test]
    fn small_chain_words() {
        assert_eq!(build_u_n_m(1, 1).unwrap().word.to_string(), "x y1");
        assert_eq!(
            build_u_n_m(2, 2).unwrap().word.to_string(),
            "x p0_0 y1 p0_1 y2 p0_2 x y1 y2"
        );
        assert_eq!(build_u_n_m(3, 3).unwrap().word.len(), 28);
        assert!(build_u_n_m(0, 1).is_err());
        assert!(build_u_n_m(4, 40).is_err());
    }

    #[test]
    fn chain_word_block_structure() {
        for n in 1..=5 {
            for m in 1..=4 {
                let u = build_u_n_m(n, m).unwrap();
                assert_eq!(u.word.len(), (n + 1) * ((1 << m) - 1));
                assert_eq!(u.blocks.len(), m);
                assert_eq!(u.blocks[0].start, 0);
                assert_eq!(u.blocks[m - 1].end, u.word.len());
                for pair in u.blocks.windows(2) {
                    assert_eq!(pair[0].end, pair[1].start);
                }
                let alphabets: Vec<_> = u.block_words().iter().map(alphabet_set).collect();
                for pair in alphabets.windows(2) {
                    assert!(pair[0].is_superset(&pair[1]));
                }
                assert!(check_p1(&u.word), "repeated factor in u({n},{m})");
                assert!(check_p2(&u.word, n));
            }
        }
    }

    #[test]
    fn head_tail_word_matches_printed_form() {
        let w = build_w_n(2, 2).unwrap();
        assert_eq!(
            w.word.to_string(),
            "x p0_0 y1 p0_1 y2 p0_2 y3 p0_3 y4 p0_4 x y1 y2 y3 y4 \
             y1 y3 y2 y4 x p0_4 y1 p0_3 y3 p0_2 y2 p0_1 y4 p0_0 x"
        );
        assert_eq!(
            w.head().to_string(),
            "x p0_0 y1 p0_1 y2 p0_2 y3 p0_3 y4 p0_4 x y1 y2 y3 y4"
        );
        assert!(check_p1(&w.word));
        assert!(check_p2(&w.word, 2));
    }

    #[test]
    fn head_tail_structure() {
        for m in 1..=4 {
            let w = build_w_n(2, m).unwrap();
            let x = VariableId::new("x");
            assert!(alphabet_set(&w.head()).contains(&x));
            assert!(alphabet_set(&w.tail()).contains(&x));
            assert_eq!(alphabet_set(&w.head()), alphabet_set(&w.tail()));
            assert_eq!(w.head_blocks.len(), m);
            assert_eq!(w.tail_blocks.len(), m);
            assert_eq!(w.tail_blocks[0].start, w.split);
            assert_eq!(w.tail_blocks[m - 1].end, w.word.len());
            assert!(check_p1(&w.word), "repeated factor at m={m}");
            assert!(check_p2(&w.word, 2));

            // tail alphabets grow left to right; reversed they form the
            // descending chain the dual certificate reads
            let alphabets: Vec<_> = w
                .tail_blocks
                .iter()
                .map(|r| alphabet_set(&w.word.slice(r.clone())))
                .collect();
            for pair in alphabets.windows(2) {
                assert!(pair[1].is_superset(&pair[0]));
            }
        }
    }

    #[test]
    fn head_tail_pool_collision_outside_n_2_mod_3() {
        // Sharing fresh pools between head and tail makes the pair
        // (p0_4, y5) a factor of both halves at n = 3. The two-symbol
        // factor condition survives only the n = 2 (mod 3) cases; the
        // separation condition holds regardless.
        let w = build_w_n(3, 2).unwrap();
        assert!(check_p2(&w.word, 3));
        assert_eq!(
            first_repeated_factor(&w.word),
            Some((VariableId::new("p0_4"), VariableId::new("y5")))
        );
        assert!(check_p1(&build_w_n(5, 2).unwrap().word));
        assert!(!check_p1(&build_w_n(4, 2).unwrap().word));
    }

    #[test]
    fn zimin_words() {
        assert_eq!(zimin(1).unwrap().to_string(), "x1");
        assert_eq!(zimin(2).unwrap().to_string(), "x1 x2 x1");
        assert_eq!(zimin(5).unwrap().len(), 31);
        assert_eq!(zimin(5).unwrap().alphabet().len(), 5);
        assert!(zimin(0).is_err());
        assert!(zimin(63).is_err());
    }

    #[test]
    fn factor_and_separation_predicates() {
        assert!(!check_p1(&Word::from_chars("xyxy")));
        assert!(check_p1(&Word::from_chars("xyx")));
        assert!(check_p2(&Word::from_chars("xabcx"), 3));
        assert!(!check_p2(&Word::from_chars("xabax"), 3));
        assert!(check_p2(&Word::from_chars("xyz"), 5));
    }

    #[test]
    fn shortlex_enumeration() {
        let xs = [VariableId::new("x")];
        let words: Vec<String> = enumerate_words(&xs, 2)
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(words, ["x", "x x"]);

        let xy = [VariableId::new("x"), VariableId::new("y")];
        let words: Vec<String> = enumerate_words(&xy, 2)
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(words, ["x", "y", "x x", "x y", "y x", "y y"]);

        let xyz = [
            VariableId::new("x"),
            VariableId::new("y"),
            VariableId::new("z"),
        ];
        assert_eq!(enumerate_words(&xyz, 5).unwrap().len(), 363);
        assert!(enumerate_words(&xyz, 20).is_err());
    }
}
