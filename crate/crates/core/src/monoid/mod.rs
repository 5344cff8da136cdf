//! Finite monoids as dense multiplication tables: closure from generators,
//! ideal-based triviality tests, identity satisfaction, duals and products.

mod power;
mod theory;

pub use power::{unitary_closure, unitary_power_monoid};
pub use theory::{
    band_identity_check, bounded_identity_theory, canonical_identity, check_alphabet_chain,
    is_isoterm_bounded, reversed_blocks, IsotermVerdict, TheoryFragment, WordUniverse,
};

use crate::error::{Error, Result};
use crate::word::{Identity, VariableId, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;

/// Memory ceiling for constructed tables, in bytes. Overridable through the
/// `FBPLAB_CAP_MB` environment variable (a number of megabytes).
pub(crate) fn cap_bytes() -> u128 {
    let mb = std::env::var("FBPLAB_CAP_MB")
        .ok()
        .and_then(|s| s.trim().parse::<u64>().ok())
        .unwrap_or(512);
    (mb as u128) << 20
}

pub(crate) fn table_bytes(n: u128) -> u128 {
    n * n * 4
}

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    size: usize,
    table: Vec<u32>,
    identity: usize,
    generators: Vec<usize>,
    labels: Vec<String>,
}

impl fmt::Debug for FiniteMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteMonoid(size={}, gens={:?})",
            self.size, self.generators
        )
    }
}

impl FiniteMonoid {
    /// Build from an explicit table (row-major, `table[a*size+b] = a·b`).
    /// Checks closure bounds and the identity law always, associativity
    /// exhaustively up to size 200; larger tables are expected to come from
    /// concrete associative carriers via [`closure_from_generators`].
    pub fn from_table(table: Vec<u32>, identity: usize, generators: Vec<usize>) -> Result<Self> {
        let size = (table.len() as f64).sqrt().round() as usize;
        if size * size != table.len() {
            return Err(Error::invalid("table is not square"));
        }
        let labels = (0..size).map(|i| format!("e{i}")).collect();
        let m = Self::assemble(size, table, identity, generators, labels)?;
        if m.size <= 200 && !m.is_associative() {
            return Err(Error::invalid("table is not associative"));
        }
        Ok(m)
    }

    /// Constructor for closure paths whose associativity is inherited from a
    /// concrete carrier; validates everything except associativity.
    pub(crate) fn assemble(
        size: usize,
        table: Vec<u32>,
        identity: usize,
        generators: Vec<usize>,
        labels: Vec<String>,
    ) -> Result<Self> {
        if size == 0 {
            return Err(Error::invalid("monoid cannot be empty"));
        }
        if table.len() != size * size || labels.len() != size {
            return Err(Error::invalid("table or label size mismatch"));
        }
        if identity >= size || generators.iter().any(|&g| g >= size) {
            return Err(Error::invalid("identity or generator index out of range"));
        }
        if table.iter().any(|&x| x as usize >= size) {
            return Err(Error::invalid("table entry out of range"));
        }
        let m = FiniteMonoid {
            size,
            table,
            identity,
            generators,
            labels,
        };
        for a in 0..size {
            if m.mul(m.identity, a) != a || m.mul(a, m.identity) != a {
                return Err(Error::invalid("identity law fails"));
            }
        }
        Ok(m)
    }

    pub fn trivial() -> Self {
        FiniteMonoid {
            size: 1,
            table: vec![0],
            identity: 0,
            generators: vec![],
            labels: vec!["1".into()],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b] as usize
    }

    pub fn is_associative(&self) -> bool {
        for a in 0..self.size {
            for b in 0..self.size {
                let ab = self.mul(a, b);
                for c in 0..self.size {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size).filter(|&a| self.is_idempotent(a)).collect()
    }

    /// Product of a sequence of element indices; the identity for an empty
    /// sequence.
    pub fn evaluate_indices(&self, elements: &[usize]) -> usize {
        elements
            .iter()
            .fold(self.identity, |acc, &e| self.mul(acc, e))
    }

    /// Image of a word over abstract generators: `images[g]` is the element
    /// standing in for generator number `g`.
    pub fn evaluate_generator_word(&self, images: &[usize], word: &[usize]) -> Result<usize> {
        let mut acc = self.identity;
        for &g in word {
            let img = *images
                .get(g)
                .ok_or_else(|| Error::invalid(format!("generator index {g} has no image")))?;
            acc = self.mul(acc, img);
        }
        Ok(acc)
    }

    /// Value of `w` under a variable assignment, folded left to right.
    pub fn evaluate_word(&self, sub: &ElementSubstitution, w: &Word) -> Result<usize> {
        let mut acc = self.identity;
        for v in w.symbols() {
            let e = sub
                .get(v)
                .ok_or_else(|| Error::UnboundVariable(v.as_str().to_string()))?;
            acc = self.mul(acc, e);
        }
        Ok(acc)
    }

    /// Same multiplication read right to left. Left and right ideals swap.
    pub fn dual(&self) -> FiniteMonoid {
        let mut table = vec![0u32; self.size * self.size];
        for a in 0..self.size {
            for b in 0..self.size {
                table[a * self.size + b] = self.table[b * self.size + a];
            }
        }
        FiniteMonoid {
            size: self.size,
            table,
            identity: self.identity,
            generators: self.generators.clone(),
            labels: self.labels.clone(),
        }
    }

    /// Closure of `{identity} ∪ gens` under the table product, together with
    /// the map from new indices back to indices in `self`.
    pub fn submonoid_generated(&self, gens: &[usize]) -> Result<(FiniteMonoid, Vec<usize>)> {
        for &g in gens {
            if g >= self.size {
                return Err(Error::invalid("generator index out of range"));
            }
        }
        let m = closure_from_generators(
            self.identity,
            gens,
            |&a: &usize, &b: &usize| self.mul(a, b),
            |&e| self.labels[e].clone(),
        )?;
        // rebuild the discovery order to recover old indices; same traversal,
        // so it matches the closure's indexing
        let mut elems = vec![self.identity];
        let mut seen = vec![false; self.size];
        seen[self.identity] = true;
        for &g in gens {
            if !seen[g] {
                seen[g] = true;
                elems.push(g);
            }
        }
        let mut i = 0;
        while i < elems.len() {
            for &g in gens {
                let t = self.mul(elems[i], g);
                if !seen[t] {
                    seen[t] = true;
                    elems.push(t);
                }
            }
            i += 1;
        }
        debug_assert_eq!(m.size, elems.len());
        Ok((m, elems))
    }

    fn bitset_words(&self) -> usize {
        self.size.div_ceil(64)
    }

    fn right_ideals(&self) -> Vec<Vec<u64>> {
        let words = self.bitset_words();
        (0..self.size)
            .map(|a| {
                let mut bits = vec![0u64; words];
                for x in 0..self.size {
                    let t = self.mul(a, x);
                    bits[t / 64] |= 1 << (t % 64);
                }
                bits
            })
            .collect()
    }

    fn left_ideals(&self) -> Vec<Vec<u64>> {
        let words = self.bitset_words();
        (0..self.size)
            .map(|a| {
                let mut bits = vec![0u64; words];
                for x in 0..self.size {
                    let t = self.mul(x, a);
                    bits[t / 64] |= 1 << (t % 64);
                }
                bits
            })
            .collect()
    }

    pub fn right_ideal_sizes(&self) -> Vec<usize> {
        self.right_ideals()
            .iter()
            .map(|bits| bits.iter().map(|w| w.count_ones() as usize).sum())
            .collect()
    }

    /// Each triviality flag asks whether distinct elements ever generate the
    /// same principal ideal of the corresponding kind.
    pub fn triviality(&self) -> Triviality {
        let rows = self.right_ideals();
        let r_trivial = all_ideals_distinct(&rows);
        let l_trivial = all_ideals_distinct(&self.left_ideals());

        // two-sided ideal of a = union of right ideals of x·a over all x
        let words = self.bitset_words();
        let mut two_sided = Vec::with_capacity(self.size);
        for a in 0..self.size {
            let mut bits = vec![0u64; words];
            for x in 0..self.size {
                let xa = self.mul(x, a);
                for (b, r) in bits.iter_mut().zip(&rows[xa]) {
                    *b |= r;
                }
            }
            two_sided.push(bits);
        }
        let j_trivial = all_ideals_distinct(&two_sided);

        Triviality {
            r_trivial,
            l_trivial,
            j_trivial,
        }
    }

    pub fn structure_flags(&self) -> StructureFlags {
        let aperiodic = (0..self.size).all(|a| {
            // follow powers of a until they repeat; aperiodic = cycle of
            // length one, i.e. a^k = a^{k+1} eventually
            let mut seen = vec![usize::MAX; self.size];
            let mut cur = a;
            let mut step = 0;
            loop {
                if seen[cur] != usize::MAX {
                    break step - seen[cur] == 1;
                }
                seen[cur] = step;
                cur = self.mul(cur, a);
                step += 1;
            }
        });
        let idem = self.idempotents();
        let idempotents_commute = idem
            .iter()
            .all(|&e| idem.iter().all(|&f| self.mul(e, f) == self.mul(f, e)));
        let band = idem.len() == self.size;
        StructureFlags {
            aperiodic,
            idempotents_commute,
            band,
        }
    }

    pub fn to_dump(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{}\n", self.size));
        for a in 0..self.size {
            let row: Vec<String> = (0..self.size).map(|b| self.mul(a, b).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out.push_str(&format!("identity {}\n", self.identity));
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        out.push_str(&format!("generators {}\n", gens.join(" ")));
        out
    }

    pub fn parse_dump(text: &str) -> Result<FiniteMonoid> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let size: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty dump".into()))?
            .trim()
            .parse()
            .map_err(|_| Error::Parse("bad size line".into()))?;
        let mut table = Vec::with_capacity(size * size);
        for _ in 0..size {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("missing table row".into()))?;
            for tok in line.split_whitespace() {
                let v: u32 = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad table entry {tok}")))?;
                table.push(v);
            }
        }
        let mut identity = None;
        let mut generators = Vec::new();
        for line in lines {
            let mut toks = line.split_whitespace();
            match toks.next() {
                Some("identity") => {
                    identity = Some(
                        toks.next()
                            .ok_or_else(|| Error::Parse("identity line needs an index".into()))?
                            .parse::<usize>()
                            .map_err(|_| Error::Parse("bad identity index".into()))?,
                    );
                }
                Some("generators") => {
                    for t in toks {
                        generators.push(
                            t.parse::<usize>()
                                .map_err(|_| Error::Parse("bad generator index".into()))?,
                        );
                    }
                }
                Some(other) => return Err(Error::Parse(format!("unexpected line `{other}`"))),
                None => {}
            }
        }
        let identity = identity.ok_or_else(|| Error::Parse("dump has no identity line".into()))?;
        FiniteMonoid::from_table(table, identity, generators)
    }
}

fn all_ideals_distinct(ideals: &[Vec<u64>]) -> bool {
    let mut seen: HashMap<&[u64], usize> = HashMap::with_capacity(ideals.len());
    for (i, bits) in ideals.iter().enumerate() {
        if let Some(&_first) = seen.get(bits.as_slice()) {
            return false;
        }
        seen.insert(bits.as_slice(), i);
    }
    true
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Triviality {
    pub r_trivial: bool,
    pub l_trivial: bool,
    pub j_trivial: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StructureFlags {
    pub aperiodic: bool,
    pub idempotents_commute: bool,
    pub band: bool,
}

/// BFS closure of `{identity} ∪ generators` under `compose`, indexed in
/// discovery order (identity first, then the generators, then products), so
/// two runs over the same input produce identical tables.
pub fn closure_from_generators<T, F, L>(
    identity: T,
    generators: &[T],
    compose: F,
    label: L,
) -> Result<FiniteMonoid>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
    L: Fn(&T) -> String,
{
    let cap = cap_bytes();
    let mut elems: Vec<T> = vec![identity.clone()];
    let mut index: HashMap<T, usize> = HashMap::new();
    index.insert(identity, 0);
    let mut gen_indices = Vec::with_capacity(generators.len());
    for g in generators {
        let idx = *index.entry(g.clone()).or_insert_with(|| {
            elems.push(g.clone());
            elems.len() - 1
        });
        gen_indices.push(idx);
    }

    let mut i = 0;
    while i < elems.len() {
        for &g in &gen_indices {
            let t = compose(&elems[i], &elems[g]);
            if !index.contains_key(&t) {
                if table_bytes(elems.len() as u128 + 1) > cap {
                    return Err(Error::cap(
                        "closure table",
                        table_bytes(elems.len() as u128 + 1),
                        cap,
                    ));
                }
                index.insert(t.clone(), elems.len());
                elems.push(t);
            }
        }
        i += 1;
    }

    let n = elems.len();
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            let t = compose(&elems[a], &elems[b]);
            let idx = *index.get(&t).ok_or_else(|| {
                Error::invalid("product escaped the closure; compose is not associative")
            })?;
            table[a * n + b] = idx as u32;
        }
    }
    let labels = elems.iter().map(&label).collect();
    FiniteMonoid::assemble(n, table, 0, gen_indices, labels)
}

/// Componentwise product on pairs, indexed `a * |B| + b`. Generated by the
/// two factors' generators paired with the opposite identity.
pub fn direct_product(a: &FiniteMonoid, b: &FiniteMonoid) -> Result<FiniteMonoid> {
    let n = a.size as u128 * b.size as u128;
    if table_bytes(n) > cap_bytes() {
        return Err(Error::cap("product table", table_bytes(n), cap_bytes()));
    }
    let n = n as usize;
    let mut table = vec![0u32; n * n];
    for a1 in 0..a.size {
        for b1 in 0..b.size {
            let p = a1 * b.size + b1;
            for a2 in 0..a.size {
                for b2 in 0..b.size {
                    let q = a2 * b.size + b2;
                    table[p * n + q] = (a.mul(a1, a2) * b.size + b.mul(b1, b2)) as u32;
                }
            }
        }
    }
    let identity = a.identity * b.size + b.identity;
    let mut generators: Vec<usize> = a
        .generators
        .iter()
        .map(|&g| g * b.size + b.identity)
        .collect();
    generators.extend(b.generators.iter().map(|&h| a.identity * b.size + h));
    let labels = (0..n)
        .map(|p| format!("{}|{}", a.labels[p / b.size], b.labels[p % b.size]))
        .collect();
    FiniteMonoid::assemble(n, table, identity, generators, labels)
}

/// Looks for an isomorphism `a → b` that sends the identity to the identity
/// and `a_gens[k]` to `b_gens[k]`. Since `a_gens` must generate `a`, such a
/// map is unique if it exists; the return value is the image index of every
/// element of `a`, or `None` when the correspondence breaks down.
pub fn generator_isomorphism(
    a: &FiniteMonoid,
    a_gens: &[usize],
    b: &FiniteMonoid,
    b_gens: &[usize],
) -> Option<Vec<usize>> {
    if a.size != b.size || a_gens.len() != b_gens.len() {
        return None;
    }
    if a_gens.iter().any(|&g| g >= a.size) || b_gens.iter().any(|&g| g >= b.size) {
        return None;
    }
    const UNSET: usize = usize::MAX;
    let mut map = vec![UNSET; a.size];
    map[a.identity] = b.identity;
    let mut queue = vec![a.identity];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&g, &h) in a_gens.iter().zip(b_gens) {
            let y = a.mul(x, g);
            let y_img = b.mul(map[x], h);
            if map[y] == UNSET {
                map[y] = y_img;
                queue.push(y);
            } else if map[y] != y_img {
                return None;
            }
        }
    }
    if queue.len() != a.size {
        return None; // a_gens do not generate a
    }
    let mut seen = vec![false; b.size];
    for &img in &map {
        if seen[img] {
            return None;
        }
        seen[img] = true;
    }
    for x in 0..a.size {
        for y in 0..a.size {
            if map[a.mul(x, y)] != b.mul(map[x], map[y]) {
                return None;
            }
        }
    }
    Some(map)
}

/// Add an outside identity to a semigroup table; original indices keep their
/// places, the new identity sits at index `size`.
pub fn adjoin_identity(table: &[u32], size: usize) -> Result<FiniteMonoid> {
    if table.len() != size * size {
        return Err(Error::invalid("semigroup table is not square"));
    }
    let n = size + 1;
    let mut t = vec![0u32; n * n];
    for a in 0..size {
        for b in 0..size {
            t[a * n + b] = table[a * size + b];
        }
    }
    for a in 0..n {
        t[a * n + size] = a as u32;
        t[size * n + a] = a as u32;
    }
    let mut labels: Vec<String> = (0..size).map(|i| format!("s{i}")).collect();
    labels.push("1".into());
    FiniteMonoid::assemble(n, t, size, (0..size).collect(), labels)
}

/// Every associative table on `{0..n-1}`, by brute force over all `n^(n²)`
/// candidates; practical only for n ≤ 3.
pub fn enumerate_semigroup_tables(n: usize) -> Result<Vec<Vec<u32>>> {
    if n == 0 || n > 3 {
        return Err(Error::invalid(
            "semigroup table enumeration supports 1 ≤ n ≤ 3",
        ));
    }
    let cells = n * n;
    let total = (n as u64).pow(cells as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut table = vec![0u32; cells];
        for cell in table.iter_mut() {
            *cell = (c % n as u64) as u32;
            c /= n as u64;
        }
        let assoc = (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = table[a * n + b] as usize;
                (0..n).all(|c| {
                    let bc = table[b * n + c] as usize;
                    table[ab * n + c] == table[a * n + bc]
                })
            })
        });
        if assoc {
            out.push(table);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ElementSubstitution(BTreeMap<VariableId, usize>);

impl ElementSubstitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(&mut self, v: VariableId, element: usize) -> &mut Self {
        self.0.insert(v, element);
        self
    }

    pub fn get(&self, v: &VariableId) -> Option<usize> {
        self.0.get(v).copied()
    }

    pub fn assignments(&self) -> impl Iterator<Item = (&VariableId, usize)> {
        self.0.iter().map(|(v, &e)| (v, e))
    }
}

impl fmt::Display for ElementSubstitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(v, e)| format!("{v}->{e}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentityCheck {
    Holds,
    Fails(ElementSubstitution),
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        matches!(self, IdentityCheck::Holds)
    }
}

const SUBSTITUTION_BUDGET: u128 = 100_000_000;

/// Exhaustive check of `id` over all substitutions into `m`.
pub fn satisfies_identity(m: &FiniteMonoid, id: &Identity) -> Result<IdentityCheck> {
    let allowed: Vec<usize> = (0..m.size()).collect();
    satisfies_identity_over(m, id, &allowed)
}

/// Exhaustive check with substitutions restricted to `allowed` (used to ask
/// whether an identity holds in a subsemigroup without an identity of its
/// own, inside its table extension).
pub fn satisfies_identity_over(
    m: &FiniteMonoid,
    id: &Identity,
    allowed: &[usize],
) -> Result<IdentityCheck> {
    let vars = id.variables();
    let k = vars.len();
    if allowed.is_empty() {
        return Err(Error::invalid("empty substitution range"));
    }
    let needed = (allowed.len() as u128).checked_pow(k as u32);
    match needed {
        Some(t) if t <= SUBSTITUTION_BUDGET => {}
        _ => {
            return Err(Error::cap(
                "identity substitutions",
                needed.unwrap_or(u128::MAX),
                SUBSTITUTION_BUDGET,
            ))
        }
    }

    let mut choice = vec![0usize; k];
    loop {
        let mut sub = ElementSubstitution::new();
        for (v, &c) in vars.iter().zip(&choice) {
            sub.bind(v.clone(), allowed[c]);
        }
        if m.evaluate_word(&sub, &id.lhs)? != m.evaluate_word(&sub, &id.rhs)? {
            return Ok(IdentityCheck::Fails(sub));
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(IdentityCheck::Holds);
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < allowed.len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// Randomized check: `samples` independent substitutions drawn from a seeded
/// generator. A returned counterexample is re-verified before reporting, so
/// it is always genuine; absence of one is only evidence.
pub fn satisfies_identity_sampled(
    m: &FiniteMonoid,
    id: &Identity,
    samples: usize,
    seed: u64,
) -> IdentityCheck {
    let allowed: Vec<usize> = (0..m.size()).collect();
    satisfies_identity_sampled_over(m, id, &allowed, samples, seed)
}

pub fn satisfies_identity_sampled_over(
    m: &FiniteMonoid,
    id: &Identity,
    allowed: &[usize],
    samples: usize,
    seed: u64,
) -> IdentityCheck {
    let vars = id.variables();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let mut sub = ElementSubstitution::new();
        for v in &vars {
            sub.bind(v.clone(), allowed[rng.random_range(0..allowed.len())]);
        }
        let l = m.evaluate_word(&sub, &id.lhs).expect("all variables bound");
        let r = m.evaluate_word(&sub, &id.rhs).expect("all variables bound");
        if l != r {
            return IdentityCheck::Fails(sub);
        }
    }
    IdentityCheck::Holds
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_semilattice() -> FiniteMonoid {
        // {1, e} with e² = e
        FiniteMonoid::from_table(vec![0, 1, 1, 1], 0, vec![1]).unwrap()
    }

    fn cyclic_group(n: usize) -> FiniteMonoid {
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = ((a + b) % n) as u32;
            }
        }
        FiniteMonoid::from_table(table, 0, vec![1 % n]).unwrap()
    }

    #[test]
    fn table_validation() {
        assert!(FiniteMonoid::from_table(vec![0, 1, 1], 0, vec![]).is_err());
        assert!(FiniteMonoid::from_table(vec![0, 1, 1, 0], 1, vec![]).is_err());
        // right-zero table has no identity
        assert!(FiniteMonoid::from_table(vec![0, 1, 0, 1], 0, vec![]).is_err());
    }

    #[test]
    fn closure_discovers_cyclic_group() {
        let m = closure_from_generators(0u8, &[1u8], |&a, &b| (a + b) % 5, |&a| format!("g{a}"))
            .unwrap();
        assert_eq!(m.size(), 5);
        assert_eq!(m.identity_index(), 0);
        assert!(m.is_associative());
        assert_eq!(m.label(3), "g3");
        let m2 = closure_from_generators(0u8, &[1u8], |&a, &b| (a + b) % 5, |&a| format!("g{a}"))
            .unwrap();
        assert_eq!(m, m2);
    }

    #[test]
    fn empty_generating_set() {
        let m = closure_from_generators(7u8, &[], |&a, &b| a.max(b), |&a| a.to_string()).unwrap();
        assert_eq!(m.size(), 1);
    }

    #[test]
    fn triviality_flags() {
        let s = two_semilattice();
        let t = s.triviality();
        assert!(t.r_trivial && t.l_trivial && t.j_trivial);

        let g = cyclic_group(3);
        let t = g.triviality();
        assert!(!t.r_trivial && !t.l_trivial && !t.j_trivial);
    }

    #[test]
    fn structure_flags_cover_bands_and_groups() {
        let s = two_semilattice();
        let f = s.structure_flags();
        assert!(f.aperiodic && f.idempotents_commute && f.band);

        let g = cyclic_group(4);
        let f = g.structure_flags();
        assert!(!f.aperiodic);
        assert!(!f.band);
    }

    #[test]
    fn dual_swaps_sidedness() {
        // left-zero semigroup with identity: xy = x for x,y ≠ 1
        let m = adjoin_identity(&[0, 0, 1, 1], 2).unwrap();
        let t = m.triviality();
        let td = m.dual().triviality();
        assert_eq!(t.r_trivial, td.l_trivial);
        assert_eq!(t.l_trivial, td.r_trivial);
        assert_eq!(m.dual().dual(), m);
    }

    #[test]
    fn product_size_and_mixed_triviality() {
        let s = two_semilattice();
        let p = direct_product(&s, &s).unwrap();
        assert_eq!(p.size(), 4);
        assert!(p.is_associative());

        let left_zero = adjoin_identity(&[0, 0, 1, 1], 2).unwrap();
        let right_zero = left_zero.dual();
        let mixed = direct_product(&left_zero, &right_zero).unwrap();
        let t = mixed.triviality();
        assert!(!t.r_trivial && !t.l_trivial);

        let trivial = direct_product(&s, &FiniteMonoid::trivial()).unwrap();
        assert_eq!(trivial.size(), s.size());
        for a in 0..s.size() {
            for b in 0..s.size() {
                assert_eq!(trivial.mul(a, b), s.mul(a, b));
            }
        }
    }

    #[test]
    fn submonoid_closure() {
        let g = cyclic_group(6);
        let (sub, incl) = g.submonoid_generated(&[2]).unwrap();
        assert_eq!(sub.size(), 3);
        assert_eq!(incl, vec![0, 2, 4]);
        let (whole, _) = g.submonoid_generated(&[1]).unwrap();
        assert_eq!(whole.size(), 6);
        let (unit, incl) = g.submonoid_generated(&[]).unwrap();
        assert_eq!(unit.size(), 1);
        assert_eq!(incl, vec![0]);
    }

    #[test]
    fn identity_satisfaction() {
        let s = two_semilattice();
        let comm = Identity::parse("x y ~ y x").unwrap();
        assert!(satisfies_identity(&s, &comm).unwrap().holds());
        let idem = Identity::parse("x x ~ x").unwrap();
        assert!(satisfies_identity(&s, &idem).unwrap().holds());

        let g = cyclic_group(3);
        match satisfies_identity(&g, &idem).unwrap() {
            IdentityCheck::Fails(sub) => {
                let x = VariableId::new("x");
                let e = sub.get(&x).unwrap();
                assert_ne!(g.mul(e, e), e);
            }
            IdentityCheck::Holds => panic!("x² ≈ x cannot hold in a nontrivial group"),
        }

        let refl = Identity::parse("x y x ~ x y x").unwrap();
        assert!(satisfies_identity(&g, &refl).unwrap().holds());
    }

    #[test]
    fn restricted_range_changes_the_answer() {
        // zero multiplication on {s0, s1}: xy ≈ zt holds in the semigroup
        // but not once the outside identity joins the range
        let m = adjoin_identity(&[0, 0, 0, 0], 2).unwrap();
        let id = Identity::parse("x y ~ z t").unwrap();
        assert!(satisfies_identity_over(&m, &id, &[0, 1]).unwrap().holds());
        assert!(!satisfies_identity(&m, &id).unwrap().holds());
    }

    #[test]
    fn sampling_is_seed_stable_and_sound() {
        let g = cyclic_group(3);
        let idem = Identity::parse("x x ~ x").unwrap();
        let a = satisfies_identity_sampled(&g, &idem, 100, 11);
        let b = satisfies_identity_sampled(&g, &idem, 100, 11);
        assert_eq!(a, b);
        match a {
            IdentityCheck::Fails(sub) => {
                let e = sub.get(&VariableId::new("x")).unwrap();
                assert_ne!(g.mul(e, e), e);
            }
            IdentityCheck::Holds => panic!("sampling missed a dense counterexample"),
        }

        let comm = Identity::parse("x y ~ y x").unwrap();
        assert!(satisfies_identity_sampled(&g, &comm, 1000, 5).holds());
    }

    #[test]
    fn substitution_budget_guard() {
        let g = cyclic_group(3);
        let vars: Vec<String> = (0..80).map(|i| format!("v{i}")).collect();
        let long = vars.join(" ");
        let id = Identity::parse(&format!("{long} ~ {long} {long}")).unwrap();
        assert!(satisfies_identity(&g, &id).is_err());
    }

    #[test]
    fn dump_round_trip() {
        let s = two_semilattice();
        let text = s.to_dump();
        let back = FiniteMonoid::parse_dump(&text).unwrap();
        assert_eq!(back.size(), s.size());
        assert_eq!(back.identity_index(), s.identity_index());
        assert_eq!(back.generator_indices(), s.generator_indices());
        for a in 0..s.size() {
            for b in 0..s.size() {
                assert_eq!(back.mul(a, b), s.mul(a, b));
            }
        }
        assert!(FiniteMonoid::parse_dump("2\n0 1\n1 0\n").is_err());
    }

    #[test]
    fn semigroup_catalogue() {
        let tables = enumerate_semigroup_tables(2).unwrap();
        assert_eq!(tables.len(), 8);
        for t in &tables {
            // associativity survives the identity extension
            assert!(adjoin_identity(t, 2).unwrap().is_associative());
        }
        assert!(enumerate_semigroup_tables(4).is_err());
    }

    #[test]
    fn generator_word_evaluation() {
        let g = cyclic_group(5);
        assert_eq!(g.evaluate_generator_word(&[2, 3], &[0, 1, 0]).unwrap(), 2);
        assert_eq!(g.evaluate_generator_word(&[2], &[]).unwrap(), 0);
        assert!(g.evaluate_generator_word(&[2], &[1]).is_err());
        assert_eq!(g.evaluate_indices(&[1, 1, 1]), 3);
        assert_eq!(g.evaluate_indices(&[]), 0);
    }
}
