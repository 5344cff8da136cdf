//! Monoids given by generators and relations: the classical presentations the
//! library needs, a small Knuth-Bendix engine for their word problems, and
//! Coxeter group models for the 0-Hecke constructions.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;

mod coxeter;
mod kb;

pub use coxeter::{
    coxeter_group_model, hecke0_via_unitary, CoxeterDiagram, CoxeterMatrix, CoxeterModel,
};
pub use kb::{
    complete, complete_default, CompletionStatus, RewriteSystem, DEFAULT_LENGTH_CAP,
    DEFAULT_RULE_CAP,
};

/// Generators with defining relations, stored as pairs of words over
/// generator indices. Relation sides must be nonempty; that keeps the empty
/// word alone in its congruence class, which is what lets a semigroup
/// presentation ride on the monoid machinery (the empty normal form plays
/// the adjoined identity and is simply not counted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relations: Vec<(Vec<usize>, Vec<usize>)>,
    semigroup: bool,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relations: Vec<(Vec<usize>, Vec<usize>)>) -> Result<Self> {
        Self::build(generators, relations, false)
    }

    /// Same validation, but sizes reported downstream exclude the empty word.
    pub fn new_semigroup(
        generators: Vec<String>,
        relations: Vec<(Vec<usize>, Vec<usize>)>,
    ) -> Result<Self> {
        Self::build(generators, relations, true)
    }

    fn build(
        generators: Vec<String>,
        relations: Vec<(Vec<usize>, Vec<usize>)>,
        semigroup: bool,
    ) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for g in &generators {
            if g.is_empty() || g.contains(char::is_whitespace) || g == "=" {
                return Err(Error::invalid(format!("bad generator name {g:?}")));
            }
            if !seen.insert(g.clone()) {
                return Err(Error::invalid(format!("duplicate generator {g}")));
            }
        }
        for (l, r) in &relations {
            if l.is_empty() || r.is_empty() {
                return Err(Error::invalid("relation sides must be nonempty"));
            }
            if l.iter().chain(r).any(|&g| g >= generators.len()) {
                return Err(Error::invalid("relation uses an unknown generator"));
            }
        }
        Ok(Presentation {
            generators,
            relations,
            semigroup,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relations(&self) -> &[(Vec<usize>, Vec<usize>)] {
        &self.relations
    }

    pub fn presents_semigroup(&self) -> bool {
        self.semigroup
    }

    pub fn render_word(&self, word: &[usize]) -> String {
        if word.is_empty() {
            return "1".into();
        }
        word.iter()
            .map(|&g| self.generators[g].as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Text form: a `gens:` line followed by one `lhs = rhs` line per
    /// relation, words as space-separated generator names.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let head = lines
            .next()
            .ok_or_else(|| Error::Parse("empty presentation".into()))?;
        let rest = head
            .trim()
            .strip_prefix("gens:")
            .ok_or_else(|| Error::Parse("presentation must start with a gens: line".into()))?;
        let generators: Vec<String> = rest.split_whitespace().map(String::from).collect();
        let index: HashMap<&str, usize> = generators
            .iter()
            .enumerate()
            .map(|(i, g)| (g.as_str(), i))
            .collect();
        let mut relations = Vec::new();
        for line in lines {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let eq = tokens
                .iter()
                .position(|&t| t == "=")
                .ok_or_else(|| Error::Parse(format!("relation line without '=': {line}")))?;
            if tokens.iter().skip(eq + 1).any(|&t| t == "=") {
                return Err(Error::Parse(format!("relation line with two '=': {line}")));
            }
            let side = |toks: &[&str]| -> Result<Vec<usize>> {
                toks.iter()
                    .map(|t| {
                        index
                            .get(t)
                            .copied()
                            .ok_or_else(|| Error::Parse(format!("unknown generator {t}")))
                    })
                    .collect()
            };
            relations.push((side(&tokens[..eq])?, side(&tokens[eq + 1..])?));
        }
        Presentation::new(generators, relations)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens:")?;
        for g in &self.generators {
            write!(f, " {g}")?;
        }
        writeln!(f)?;
        for (l, r) in &self.relations {
            writeln!(f, "{} = {}", self.render_word(l), self.render_word(r))?;
        }
        Ok(())
    }
}

fn alternating(first: usize, second: usize, factors: usize) -> Vec<usize> {
    (0..factors)
        .map(|t| if t % 2 == 0 { first } else { second })
        .collect()
}

/// Solomon's presentation of the monoid of order-preserving extensive maps on
/// the m-chain: idempotent generators a1..a(m-1), distant generators commute,
/// and adjacent ones satisfy a_i a_{i+1} a_i = a_{i+1} a_i a_{i+1} = a_{i+1} a_i.
pub fn catalan_presentation(m: usize) -> Result<Presentation> {
    if m < 2 {
        return Err(Error::invalid("catalan presentation needs m >= 2"));
    }
    let k = m - 1;
    let generators = (1..=k).map(|i| format!("a{i}")).collect();
    let mut relations = Vec::new();
    for i in 0..k {
        relations.push((vec![i, i], vec![i]));
    }
    for i in 0..k {
        for j in i + 2..k {
            relations.push((vec![i, j], vec![j, i]));
        }
    }
    for i in 0..k.saturating_sub(1) {
        relations.push((vec![i, i + 1, i], vec![i + 1, i, i + 1]));
        relations.push((vec![i + 1, i, i + 1], vec![i + 1, i]));
    }
    Presentation::new(generators, relations)
}

/// Idempotent generators a1..an with a_k a_i a_k = a_k a_i whenever i < k.
pub fn free_tree_presentation(n: usize) -> Result<Presentation> {
    if n == 0 {
        return Err(Error::invalid("free tree presentation needs n >= 1"));
    }
    let generators = (1..=n).map(|i| format!("a{i}")).collect();
    let mut relations = Vec::new();
    for i in 0..n {
        relations.push((vec![i, i], vec![i]));
    }
    for k in 1..n {
        for i in 0..k {
            relations.push((vec![k, i, k], vec![k, i]));
        }
    }
    Presentation::new(generators, relations)
}

/// 0-Hecke monoid of a Coxeter matrix: the braid relations, with every
/// generator an idempotent instead of an involution.
pub fn hecke0_presentation(cd: &CoxeterMatrix) -> Result<Presentation> {
    let n = cd.size();
    let generators = (1..=n).map(|i| format!("s{i}")).collect();
    let mut relations = Vec::new();
    for i in 0..n {
        relations.push((vec![i, i], vec![i]));
    }
    for i in 0..n {
        for j in i + 1..n {
            if let Some(m) = cd.entry(i, j) {
                let m = m as usize;
                relations.push((alternating(i, j, m), alternating(j, i, m)));
            }
        }
    }
    Presentation::new(generators, relations)
}

/// The monoid on two idempotents e, f where the alternating product of
/// length n starting with e equals both alternating products of length n+1.
/// Its 2n+1 elements are the alternating words of length up to n.
pub fn lee_monoid_presentation(n: usize) -> Result<Presentation> {
    if n < 3 {
        return Err(Error::invalid("lee monoid presentation needs n >= 3"));
    }
    let generators = vec!["e".to_string(), "f".to_string()];
    let relations = vec![
        (vec![0, 0], vec![0]),
        (vec![1, 1], vec![1]),
        (alternating(0, 1, n), alternating(1, 0, n + 1)),
        (alternating(1, 0, n + 1), alternating(0, 1, n + 1)),
    ];
    Presentation::new(generators, relations)
}

/// The 6-element semigroup on idempotents e, f with efe = (ef)^2 = (fe)^2.
pub fn lee_l3_presentation() -> Presentation {
    let generators = vec!["e".to_string(), "f".to_string()];
    let relations = vec![
        (vec![0, 0], vec![0]),
        (vec![1, 1], vec![1]),
        (vec![0, 1, 0], vec![0, 1, 0, 1]),
        (vec![0, 1, 0, 1], vec![1, 0, 1, 0]),
    ];
    Presentation::new_semigroup(generators, relations).expect("fixed data")
}

/// The 8-element semigroup on idempotents e, f with (ef)^2 = (ef)^2 e = (fe)^2 f.
pub fn lee_l4_presentation() -> Presentation {
    let generators = vec!["e".to_string(), "f".to_string()];
    let relations = vec![
        (vec![0, 0], vec![0]),
        (vec![1, 1], vec![1]),
        (vec![0, 1, 0, 1], vec![0, 1, 0, 1, 0]),
        (vec![0, 1, 0, 1, 0], vec![1, 0, 1, 0, 1]),
    ];
    Presentation::new_semigroup(generators, relations).expect("fixed data")
}

/// Sizes of the free tree monoids: t(0) = 1 and t(n) = t(n-1) (t(n-1) + 1).
/// Overflows 128-bit arithmetic from n = 8 on.
pub fn t_sequence(n: usize) -> Result<u128> {
    let mut t: u128 = 1;
    for step in 0..n {
        let succ = t
            .checked_add(1)
            .and_then(|s| t.checked_mul(s))
            .ok_or_else(|| {
                Error::invalid(format!("t({}) overflows 128-bit arithmetic", step + 1))
            })?;
        t = succ;
    }
    Ok(t)
}

fn bfs_normal_forms(rs: &RewriteSystem, size_cap: usize) -> Result<(Vec<Vec<usize>>, Vec<usize>)> {
    if size_cap == 0 {
        return Err(Error::invalid("size cap must be positive"));
    }
    let gens = rs.generators().len();
    let mut forms: Vec<Vec<usize>> = vec![Vec::new()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    index.insert(Vec::new(), 0);
    // gen_targets[i * gens + g] = index of normalize(forms[i] . g)
    let mut gen_targets: Vec<usize> = Vec::new();
    let mut i = 0;
    while i < forms.len() {
        for g in 0..gens {
            let mut w = forms[i].clone();
            w.push(g);
            let nf = rs.normalize(&w);
            let next = match index.get(&nf) {
                Some(&j) => j,
                None => {
                    if forms.len() >= size_cap {
                        return Err(Error::cap(
                            "presented monoid size",
                            forms.len() as u128 + 1,
                            size_cap as u128,
                        ));
                    }
                    let j = forms.len();
                    forms.push(nf.clone());
                    index.insert(nf, j);
                    j
                }
            };
            gen_targets.push(next);
        }
        i += 1;
    }
    Ok((forms, gen_targets))
}

/// A finite monoid realized as the normal forms of a completed presentation.
pub struct PresentedMonoid {
    /// Normal forms under concatenate-then-normalize; index 0 is the empty
    /// word and element labels spell the normal forms.
    pub monoid: FiniteMonoid,
    /// Size of the presented object. Equals `monoid.size()` for a monoid
    /// presentation; one less for a semigroup presentation, whose empty
    /// normal form is engine plumbing rather than an element.
    pub size: usize,
}

/// Breadth-first closure of the normal forms under right multiplication by
/// generators. Requires a complete system: without canonical forms the
/// element count and the table would both be unreliable.
pub fn enumerate_presented(rs: &RewriteSystem, size_cap: usize) -> Result<PresentedMonoid> {
    if !rs.is_complete() {
        return Err(Error::Incomplete(
            "rewriting system is capped; elements cannot be told apart reliably".into(),
        ));
    }
    let (forms, gen_targets) = bfs_normal_forms(rs, size_cap)?;
    let n = forms.len();
    let bytes = crate::monoid::table_bytes(n as u128);
    let cap = crate::monoid::cap_bytes();
    if bytes > cap {
        return Err(Error::cap("presented monoid table", bytes, cap));
    }
    let gens = rs.generators().len();
    // Products walk the generator columns symbol by symbol, which is valid
    // exactly because normal forms are canonical here.
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for (b, form) in forms.iter().enumerate() {
            let mut acc = a;
            for &g in form {
                acc = gen_targets[acc * gens + g];
            }
            table[a * n + b] = acc as u32;
        }
    }
    let mut generator_indices: Vec<usize> = Vec::new();
    for &idx in &gen_targets[..gens] {
        if !generator_indices.contains(&idx) {
            generator_indices.push(idx);
        }
    }
    let labels: Vec<String> = forms
        .iter()
        .map(|f| {
            if f.is_empty() {
                "1".to_string()
            } else {
                f.iter()
                    .map(|&g| rs.generators()[g].as_str())
                    .collect::<Vec<_>>()
                    .join(" ")
            }
        })
        .collect();
    let monoid = FiniteMonoid::assemble(n, table, 0, generator_indices, labels)?;
    let size = if rs.presents_semigroup() { n - 1 } else { n };
    Ok(PresentedMonoid { monoid, size })
}

/// Count of normal forms reachable from the empty word, without building a
/// table. For a complete system this is the presented monoid's order (the
/// empty form included). For a capped system the residual words are still
/// pairwise distinct as words, but possibly equal as elements, so the figure
/// is only an upper estimate of whatever the cap let the search see.
pub fn normal_form_count(rs: &RewriteSystem, size_cap: usize) -> Result<usize> {
    let (forms, _) = bfs_normal_forms(rs, size_cap)?;
    Ok(forms.len())
}

/// Outcome of pushing a generator assignment through Dyck's criterion.
#[derive(Debug)]
pub enum HomomorphismOutcome {
    /// Every defining relation held, so the assignment extends to a
    /// homomorphism onto the submonoid the images generate.
    Extends {
        image: FiniteMonoid,
        /// target index of each image element
        inclusion: Vec<usize>,
        /// whether the image is the whole target
        surjective: bool,
    },
    /// The first relation whose two sides evaluated differently.
    Violated { lhs: String, rhs: String },
}

impl HomomorphismOutcome {
    pub fn extends(&self) -> bool {
        matches!(self, HomomorphismOutcome::Extends { .. })
    }
}

/// Checks whether generator images satisfy every relation of `source`; if so
/// the map extends to a homomorphism into `target` and the image submonoid
/// is returned. A broken relation is an answer, not an error.
pub fn extend_homomorphism(
    source: &Presentation,
    target: &FiniteMonoid,
    images: &[usize],
) -> Result<HomomorphismOutcome> {
    if images.len() != source.generators().len() {
        return Err(Error::invalid(format!(
            "{} generators need {} images, got {}",
            source.generators().len(),
            source.generators().len(),
            images.len()
        )));
    }
    if let Some(&bad) = images.iter().find(|&&e| e >= target.size()) {
        return Err(Error::invalid(format!(
            "image index {bad} outside the target monoid"
        )));
    }
    for (l, r) in source.relations() {
        let lv = target.evaluate_generator_word(images, l)?;
        let rv = target.evaluate_generator_word(images, r)?;
        if lv != rv {
            return Ok(HomomorphismOutcome::Violated {
                lhs: source.render_word(l),
                rhs: source.render_word(r),
            });
        }
    }
    let (image, inclusion) = target.submonoid_generated(images)?;
    let surjective = image.size() == target.size();
    Ok(HomomorphismOutcome::Extends {
        image,
        inclusion,
        surjective,
    })
}
