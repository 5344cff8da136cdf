use std::collections::VecDeque;

use crate::error::{Error, Result};

use super::Presentation;

pub const DEFAULT_RULE_CAP: usize = 10_000;
pub const DEFAULT_LENGTH_CAP: usize = 40;

/// Bail out if unresolved critical pairs pile up faster than they resolve;
/// none of the built-in presentations come anywhere near this.
const PENDING_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompletionStatus {
    Complete,
    Capped,
}

/// Shortlex-oriented rewriting rules for a presentation. Reduction always
/// terminates because every rule strictly decreases the shortlex order. When
/// the status is `Complete`, normal forms are canonical: two words are equal
/// in the presented monoid exactly when they normalize to the same word. A
/// `Capped` system still rewrites soundly but distinct normal forms may
/// represent equal elements.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    generators: Vec<String>,
    rules: Vec<(Vec<usize>, Vec<usize>)>,
    status: CompletionStatus,
    semigroup: bool,
}

impl RewriteSystem {
    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn rules(&self) -> &[(Vec<usize>, Vec<usize>)] {
        &self.rules
    }

    pub fn status(&self) -> CompletionStatus {
        self.status
    }

    pub fn is_complete(&self) -> bool {
        self.status == CompletionStatus::Complete
    }

    pub fn presents_semigroup(&self) -> bool {
        self.semigroup
    }

    pub fn normalize(&self, word: &[usize]) -> Vec<usize> {
        normalize_with(&self.rules, word)
    }
}

fn shortlex_greater(a: &[usize], b: &[usize]) -> bool {
    (a.len(), a) > (b.len(), b)
}

fn normalize_with(rules: &[(Vec<usize>, Vec<usize>)], word: &[usize]) -> Vec<usize> {
    let max_lhs = rules.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
    let mut w = word.to_vec();
    if max_lhs == 0 {
        return w;
    }
    // No redex starts left of `i`; a rewrite at i can only create new
    // redexes reaching back max_lhs - 1 positions.
    let mut i = 0;
    while i < w.len() {
        match rules.iter().find(|(lhs, _)| w[i..].starts_with(lhs)) {
            Some((lhs, rhs)) => {
                w.splice(i..i + lhs.len(), rhs.iter().copied());
                i = i.saturating_sub(max_lhs - 1);
            }
            None => i += 1,
        }
    }
    w
}

fn contains_factor(hay: &[usize], needle: &[usize]) -> bool {
    hay.len() >= needle.len() && hay.windows(needle.len()).any(|w| w == needle)
}

/// Critical pairs of (l1 → r1) with (l2 → r2): words that l1 and l2 can both
/// rewrite, reduced one step each way.
fn push_critical_pairs(
    (l1, r1): (&[usize], &[usize]),
    (l2, r2): (&[usize], &[usize]),
    out: &mut VecDeque<(Vec<usize>, Vec<usize>)>,
) {
    // a proper suffix of l1 equals a proper prefix of l2
    for k in 1..l1.len().min(l2.len()) {
        if l1[l1.len() - k..] == l2[..k] {
            let mut left = r1.to_vec();
            left.extend_from_slice(&l2[k..]);
            let mut right = l1[..l1.len() - k].to_vec();
            right.extend_from_slice(r2);
            out.push_back((left, right));
        }
    }
    // l2 occurs strictly inside l1
    if l2.len() < l1.len() {
        for i in 0..=l1.len() - l2.len() {
            if l1[i..].starts_with(l2) {
                let mut right = l1[..i].to_vec();
                right.extend_from_slice(r2);
                right.extend_from_slice(&l1[i + l2.len()..]);
                out.push_back((r1.to_vec(), right));
            }
        }
    }
}

/// Naive Knuth-Bendix completion under the shortlex order. All critical pairs
/// are enumerated without indexing; the desk-scale inputs this library
/// builds finish with well under a hundred rules. Cap exhaustion is reported
/// through the status, not as an error.
pub fn complete(p: &Presentation, rule_cap: usize, length_cap: usize) -> Result<RewriteSystem> {
    if rule_cap == 0 || length_cap == 0 {
        return Err(Error::invalid("completion caps must be positive"));
    }
    let mut rules: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    let mut pending: VecDeque<(Vec<usize>, Vec<usize>)> = p.relations().iter().cloned().collect();
    let mut status = CompletionStatus::Complete;
    while let Some((a, b)) = pending.pop_front() {
        let a = normalize_with(&rules, &a);
        let b = normalize_with(&rules, &b);
        if a == b {
            continue;
        }
        let (lhs, rhs) = if shortlex_greater(&a, &b) {
            (a, b)
        } else {
            (b, a)
        };
        if rules.len() == rule_cap || lhs.len() > length_cap || pending.len() > PENDING_CAP {
            status = CompletionStatus::Capped;
            break;
        }
        let new_lhs = lhs.clone();
        rules.push((lhs, rhs));

        // Older rules whose left side the new rule rewrites go back into the
        // queue as plain equations.
        let taken = std::mem::take(&mut rules);
        let last = taken.len() - 1;
        for (i, (l, r)) in taken.into_iter().enumerate() {
            if i != last && contains_factor(&l, &new_lhs) {
                pending.push_back((l, r));
            } else {
                rules.push((l, r));
            }
        }
        // Right sides are safe to renormalize in place: a right side can
        // never contain its own left side (it is strictly shortlex-smaller),
        // and shrinking it keeps the rule oriented.
        for i in 0..rules.len() {
            let reduced = normalize_with(&rules, &rules[i].1);
            rules[i].1 = reduced;
        }

        let last = rules.len() - 1;
        for i in 0..rules.len() {
            let new_rule = (&rules[last].0[..], &rules[last].1[..]);
            let old_rule = (&rules[i].0[..], &rules[i].1[..]);
            push_critical_pairs(old_rule, new_rule, &mut pending);
            if i != last {
                push_critical_pairs(new_rule, old_rule, &mut pending);
            }
        }
    }
    Ok(RewriteSystem {
        generators: p.generators().to_vec(),
        rules,
        status,
        semigroup: p.presents_semigroup(),
    })
}

pub fn complete_default(p: &Presentation) -> RewriteSystem {
    complete(p, DEFAULT_RULE_CAP, DEFAULT_LENGTH_CAP).expect("default caps are positive")
}
