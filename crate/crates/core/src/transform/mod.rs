//! Partial transformations of a finite chain, the classical monoid families
//! built from them, and the degree-shifting bijection between the injective
//! and total order-preserving extensive worlds.

mod digraph;

pub use digraph::{
    build_gamma_n, catalan_of_digraph, digraph_analysis, longest_path_vertices, tau_edge, Digraph,
    DigraphAnalysis,
};

use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;
use std::fmt;
use std::str::FromStr;

/// A partial transformation of `{0..m-1}`, written on the right of its
/// argument: `x.apply(α)` then feeds `β`. Displayed 1-based as
/// `[a1,...,am]` with `-` on undefined points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialMap {
    m: usize,
    image: Vec<Option<u16>>,
}

impl PartialMap {
    pub fn new(m: usize, image: Vec<Option<usize>>) -> Result<Self> {
        if image.len() != m {
            return Err(Error::invalid("image length must equal the base size"));
        }
        if m > u16::MAX as usize {
            return Err(Error::invalid("base set too large"));
        }
        let image = image
            .into_iter()
            .map(|v| match v {
                None => Ok(None),
                Some(p) if p < m => Ok(Some(p as u16)),
                Some(p) => Err(Error::invalid(format!(
                    "image point {p} outside the base set"
                ))),
            })
            .collect::<Result<_>>()?;
        Ok(PartialMap { m, image })
    }

    pub fn identity(m: usize) -> Self {
        PartialMap {
            m,
            image: (0..m).map(|i| Some(i as u16)).collect(),
        }
    }

    pub fn empty(m: usize) -> Self {
        PartialMap {
            m,
            image: vec![None; m],
        }
    }

    pub fn base_size(&self) -> usize {
        self.m
    }

    pub fn get(&self, x: usize) -> Option<usize> {
        self.image[x].map(|v| v as usize)
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.m).filter(|&x| self.image[x].is_some())
    }

    pub fn compose(&self, other: &PartialMap) -> Result<PartialMap> {
        if self.m != other.m {
            return Err(Error::BaseMismatch {
                left: self.m,
                right: other.m,
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &PartialMap) -> PartialMap {
        PartialMap {
            m: self.m,
            image: self
                .image
                .iter()
                .map(|v| v.and_then(|p| other.image[p as usize]))
                .collect(),
        }
    }

    pub fn properties(&self) -> MapProperties {
        let defined: Vec<(usize, usize)> = (0..self.m)
            .filter_map(|x| self.image[x].map(|v| (x, v as usize)))
            .collect();
        let total = defined.len() == self.m;
        let extensive = defined.iter().all(|&(x, v)| v >= x);
        // domain points come out sorted, so order preservation and
        // injectivity read off adjacent image pairs
        let order_preserving = defined.windows(2).all(|w| w[0].1 <= w[1].1);
        let injective = {
            let mut seen = vec![false; self.m];
            defined
                .iter()
                .all(|&(_, v)| !std::mem::replace(&mut seen[v], true))
        };
        MapProperties {
            total,
            injective,
            order_preserving,
            extensive,
        }
    }

    /// Parse the display form: `[2,-,3]` is 1-based with `-` undefined.
    pub fn parse(text: &str) -> Result<Self> {
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("map literal must be bracketed: `{text}`")))?;
        if inner.trim().is_empty() {
            return PartialMap::new(0, vec![]);
        }
        let mut image = Vec::new();
        for tok in inner.split(',') {
            let tok = tok.trim();
            if tok == "-" {
                image.push(None);
            } else {
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad image point `{tok}`")))?;
                if v == 0 {
                    return Err(Error::Parse("image points are 1-based".into()));
                }
                image.push(Some(v - 1));
            }
        }
        let m = image.len();
        PartialMap::new(m, image)
    }
}

impl fmt::Display for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .image
            .iter()
            .map(|v| match v {
                Some(p) => (*p as usize + 1).to_string(),
                None => "-".to_string(),
            })
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m`{self}`")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MapProperties {
    pub total: bool,
    pub injective: bool,
    pub order_preserving: bool,
    pub extensive: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyKind {
    /// Total extensive.
    E,
    /// Total extensive order-preserving.
    C,
    /// Partial injective extensive order-preserving.
    IC,
    /// Partial extensive.
    PE,
    /// Partial extensive order-preserving.
    PC,
    /// Partial injective extensive.
    IE,
    /// Partial injective order-preserving.
    POI,
    /// Total order-preserving fixing the top point.
    OPFixTop,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 8] = [
        FamilyKind::E,
        FamilyKind::C,
        FamilyKind::IC,
        FamilyKind::PE,
        FamilyKind::PC,
        FamilyKind::IE,
        FamilyKind::POI,
        FamilyKind::OPFixTop,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::E => "E",
            FamilyKind::C => "C",
            FamilyKind::IC => "IC",
            FamilyKind::PE => "PE",
            FamilyKind::PC => "PC",
            FamilyKind::IE => "IE",
            FamilyKind::POI => "POI",
            FamilyKind::OPFixTop => "OPFixTop",
        }
    }

    fn admits(&self, map: &PartialMap) -> bool {
        let p = map.properties();
        match self {
            FamilyKind::E => p.total && p.extensive,
            FamilyKind::C => p.total && p.extensive && p.order_preserving,
            FamilyKind::IC => p.injective && p.extensive && p.order_preserving,
            FamilyKind::PE => p.extensive,
            FamilyKind::PC => p.extensive && p.order_preserving,
            FamilyKind::IE => p.injective && p.extensive,
            FamilyKind::POI => p.injective && p.order_preserving,
            FamilyKind::OPFixTop => {
                p.total
                    && p.order_preserving
                    && map.base_size() > 0
                    && map.get(map.base_size() - 1) == Some(map.base_size() - 1)
            }
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown family `{s}`")))
    }
}

const FAMILY_DEGREE_CAP: usize = 8;

/// All members of a family on `{0..m-1}`, by filtering every one of the
/// `(m+1)^m` partial maps. Ordered by the enumeration odometer, so the
/// result is deterministic.
pub fn enumerate_family(kind: FamilyKind, m: usize) -> Result<Vec<PartialMap>> {
    enumerate_family_with_cap(kind, m, FAMILY_DEGREE_CAP)
}

pub fn enumerate_family_with_cap(
    kind: FamilyKind,
    m: usize,
    degree_cap: usize,
) -> Result<Vec<PartialMap>> {
    if m < 1 {
        return Err(Error::invalid("family needs m >= 1"));
    }
    if m > degree_cap {
        return Err(Error::cap(
            "family enumeration degree",
            m as u128,
            degree_cap as u128,
        ));
    }
    let mut out = Vec::new();
    // counter in base m+1: digit 0 = undefined, digit v = point v-1
    let mut digits = vec![0usize; m];
    'maps: loop {
        let image: Vec<Option<u16>> = digits
            .iter()
            .map(|&d| if d == 0 { None } else { Some((d - 1) as u16) })
            .collect();
        let map = PartialMap { m, image };
        if kind.admits(&map) {
            out.push(map);
        }
        for pos in (0..m).rev() {
            digits[pos] += 1;
            if digits[pos] <= m {
                continue 'maps;
            }
            digits[pos] = 0;
        }
        break;
    }
    Ok(out)
}

/// The family as a finite monoid: elements in enumeration order, products by
/// composition.
pub fn family_monoid(kind: FamilyKind, m: usize) -> Result<FiniteMonoid> {
    let maps = enumerate_family(kind, m)?;
    monoid_from_maps(&maps)
}

/// Assemble a multiplication table from a composition-closed set of maps.
pub fn monoid_from_maps(maps: &[PartialMap]) -> Result<FiniteMonoid> {
    let n = maps.len();
    let index: std::collections::HashMap<&PartialMap, usize> =
        maps.iter().enumerate().map(|(i, m)| (m, i)).collect();
    if index.len() != n {
        return Err(Error::invalid("duplicate maps"));
    }
    let mut table = vec![0u32; n * n];
    for (i, a) in maps.iter().enumerate() {
        for (j, b) in maps.iter().enumerate() {
            let c = a.compose(b)?;
            let k = *index
                .get(&c)
                .ok_or_else(|| Error::invalid("map set is not closed under composition"))?;
            table[i * n + j] = k as u32;
        }
    }
    let identity = maps
        .iter()
        .position(|m| *m == PartialMap::identity(m.base_size()))
        .ok_or_else(|| Error::invalid("map set lacks the identity"))?;
    let generators: Vec<usize> = (0..n).filter(|&i| i != identity).collect();
    let labels = maps.iter().map(|m| m.to_string()).collect();
    FiniteMonoid::assemble(n, table, identity, generators, labels)
}

/// Send a partial map on `{0..m-1}` to a total map on `{0..m}`: each point
/// goes where the nearest domain point at or above it goes, and points with
/// no such neighbour (always including the new top) go to the top.
pub fn bar_map(alpha: &PartialMap) -> PartialMap {
    let m = alpha.base_size();
    let top = m as u16;
    let mut image = vec![Some(top); m + 1];
    let mut next_defined: Option<u16> = None;
    for k in (0..m).rev() {
        if let Some(v) = alpha.image[k] {
            next_defined = Some(v);
        }
        if let Some(v) = next_defined {
            image[k] = Some(v);
        }
    }
    PartialMap { m: m + 1, image }
}

/// Inverse direction: restrict a total top-fixing map on `{0..m}` to the
/// maximal point of each fiber, dropping everything that lands on the top.
pub fn hat_map(beta: &PartialMap) -> Result<PartialMap> {
    let n = beta.base_size();
    if n == 0 {
        return Err(Error::invalid("map must have at least the top point"));
    }
    let m = n - 1;
    if !beta.properties().total {
        return Err(Error::invalid("map must be total"));
    }
    if beta.get(m) != Some(m) {
        return Err(Error::invalid("map must fix the top point"));
    }
    let mut image = vec![None; m];
    for (k, slot) in image.iter_mut().enumerate() {
        let v = beta.get(k).expect("total");
        if v == m {
            continue;
        }
        let is_fiber_max = (k + 1..n).all(|i| beta.get(i) != Some(v));
        if is_fiber_max {
            *slot = Some(v as u16);
        }
    }
    Ok(PartialMap { m, image })
}

/// Faithfully represent an R-trivial monoid by extensive total maps on its
/// own elements: order elements by weakly decreasing right ideal size (the
/// identity comes first), then let each element act by right multiplication.
pub fn embed_rtrivial_extensive(m: &FiniteMonoid) -> Result<Vec<PartialMap>> {
    if !m.triviality().r_trivial {
        return Err(Error::NotRTrivial);
    }
    let sizes = m.right_ideal_sizes();
    let mut order: Vec<usize> = (0..m.size()).collect();
    order.sort_by_key(|&e| (std::cmp::Reverse(sizes[e]), e));
    let mut position = vec![0usize; m.size()];
    for (pos, &e) in order.iter().enumerate() {
        position[e] = pos;
    }
    let maps = (0..m.size())
        .map(|a| PartialMap {
            m: m.size(),
            image: order
                .iter()
                .map(|&x| Some(position[m.mul(x, a)] as u16))
                .collect(),
        })
        .collect();
    Ok(maps)
}

pub fn catalan_number(n: usize) -> u128 {
    // C(n) = binom(2n, n) / (n+1), built up without overflow for n ≤ 30
    let mut c: u128 = 1;
    for i in 0..n as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::satisfies_identity;
    use crate::word::Identity;
    use std::collections::BTreeSet;

    #[test]
    fn literal_round_trip() {
        for text in ["[2,-,3]", "[1,2,3]", "[-,-]", "[4,4,4,4]"] {
            assert_eq!(PartialMap::parse(text).unwrap().to_string(), text);
        }
        assert!(PartialMap::parse("[0,1]").is_err());
        assert!(PartialMap::parse("[5]").is_err());
        assert!(PartialMap::parse("2,3").is_err());
    }

    #[test]
    fn composition_feeds_left_to_right() {
        let a = PartialMap::parse("[2,-]").unwrap();
        let b = PartialMap::parse("[-,2]").unwrap();
        assert_eq!(a.compose(&b).unwrap().to_string(), "[2,-]");
        assert_eq!(b.compose(&a).unwrap().to_string(), "[-,-]");

        let id = PartialMap::identity(2);
        assert_eq!(id.compose(&a).unwrap(), a);
        assert_eq!(a.compose(&id).unwrap(), a);
        assert!(a.compose(&PartialMap::identity(3)).is_err());
    }

    #[test]
    fn property_flags() {
        let id = PartialMap::identity(4);
        let p = id.properties();
        assert!(p.total && p.injective && p.order_preserving && p.extensive);

        let constant_top = PartialMap::parse("[3,3,3]").unwrap();
        let p = constant_top.properties();
        assert!(p.total && p.order_preserving && p.extensive && !p.injective);

        let down = PartialMap::parse("[-,1,-]").unwrap();
        let p = down.properties();
        assert!(p.injective && p.order_preserving && !p.extensive && !p.total);
    }

    #[test]
    fn extensive_maps_compose_to_extensive_maps() {
        let e3 = enumerate_family(FamilyKind::E, 3).unwrap();
        for a in &e3 {
            for b in &e3 {
                assert!(a.compose(b).unwrap().properties().extensive);
            }
        }
    }

    #[test]
    fn family_cardinalities() {
        let factorial = |m: usize| (1..=m).product::<usize>();
        for m in 1..=5 {
            assert_eq!(
                enumerate_family(FamilyKind::E, m).unwrap().len(),
                factorial(m)
            );
            assert_eq!(
                enumerate_family(FamilyKind::C, m).unwrap().len() as u128,
                catalan_number(m)
            );
            assert_eq!(
                enumerate_family(FamilyKind::IC, m).unwrap().len() as u128,
                catalan_number(m + 1)
            );
        }
        assert_eq!(enumerate_family(FamilyKind::C, 5).unwrap().len(), 42);
        assert_eq!(enumerate_family(FamilyKind::IC, 4).unwrap().len(), 42);
        assert_eq!(enumerate_family(FamilyKind::POI, 2).unwrap().len(), 6);
        assert_eq!(enumerate_family(FamilyKind::OPFixTop, 3).unwrap().len(), 6);
        assert!(enumerate_family(FamilyKind::C, 9).is_err());
    }

    #[test]
    fn families_are_closed_monoids() {
        for kind in FamilyKind::ALL {
            let m = family_monoid(kind, 3).unwrap();
            assert!(m.is_associative(), "{kind} composition table broken");
        }
    }

    #[test]
    fn family_triviality_landscape() {
        let c4 = family_monoid(FamilyKind::C, 4).unwrap();
        assert!(c4.triviality().j_trivial);

        let e3 = family_monoid(FamilyKind::E, 3).unwrap();
        let t = e3.triviality();
        assert!(t.r_trivial && !t.l_trivial);
        assert!(e3.structure_flags().aperiodic);

        let ic3 = family_monoid(FamilyKind::IC, 3).unwrap();
        assert!(ic3.triviality().j_trivial);
        assert!(ic3.structure_flags().idempotents_commute);
    }

    #[test]
    fn square_commutation_separates_the_families() {
        let id = Identity::parse("x x y y ~ y y x x").unwrap();
        let ic2 = family_monoid(FamilyKind::IC, 2).unwrap();
        assert!(satisfies_identity(&ic2, &id).unwrap().holds());
        let c3 = family_monoid(FamilyKind::C, 3).unwrap();
        assert!(!satisfies_identity(&c3, &id).unwrap().holds());
    }

    #[test]
    fn degree_shift_examples() {
        assert_eq!(bar_map(&PartialMap::empty(3)).to_string(), "[4,4,4,4]");
        assert_eq!(
            bar_map(&PartialMap::parse("[-,3,-]").unwrap()).to_string(),
            "[3,3,4,4]"
        );
        assert_eq!(bar_map(&PartialMap::identity(3)), PartialMap::identity(4));

        assert_eq!(
            hat_map(&PartialMap::parse("[2,2,4,4]").unwrap())
                .unwrap()
                .to_string(),
            "[-,2,-]"
        );
        assert_eq!(
            hat_map(&PartialMap::identity(4)).unwrap(),
            PartialMap::identity(3)
        );
        assert!(hat_map(&PartialMap::parse("[1,1,1]").unwrap()).is_err());
        assert!(hat_map(&PartialMap::parse("[2,-,3]").unwrap()).is_err());
    }

    #[test]
    fn degree_shift_is_a_bijection() {
        for m in 1..=4 {
            let ic: Vec<PartialMap> = enumerate_family(FamilyKind::IC, m).unwrap();
            let c_next: BTreeSet<PartialMap> = enumerate_family(FamilyKind::C, m + 1)
                .unwrap()
                .into_iter()
                .collect();
            let mut images = BTreeSet::new();
            for alpha in &ic {
                let beta = bar_map(alpha);
                assert!(c_next.contains(&beta), "bar left the target family");
                assert_eq!(&hat_map(&beta).unwrap(), alpha);
                images.insert(beta);
            }
            assert_eq!(images.len(), ic.len());
            assert_eq!(images.len(), c_next.len());
            for beta in &c_next {
                assert_eq!(&bar_map(&hat_map(beta).unwrap()), beta);
            }
        }
    }

    #[test]
    fn degree_shift_pairs_the_small_injection_and_top_fixing_families() {
        let poi2: Vec<PartialMap> = enumerate_family(FamilyKind::POI, 2).unwrap();
        let target: BTreeSet<PartialMap> = enumerate_family(FamilyKind::OPFixTop, 3)
            .unwrap()
            .into_iter()
            .collect();
        let images: BTreeSet<PartialMap> = poi2.iter().map(bar_map).collect();
        assert_eq!(images, target);
    }

    #[test]
    fn degree_shift_preserves_the_defining_properties() {
        for m in 1..=4 {
            for alpha in enumerate_family(FamilyKind::POI, m).unwrap() {
                let before = alpha.properties();
                let after = bar_map(&alpha).properties();
                assert!(after.total);
                if before.order_preserving {
                    assert!(after.order_preserving);
                }
                if before.extensive {
                    assert!(after.extensive);
                }
            }
        }
    }

    #[test]
    fn right_action_embedding_lands_in_extensive_maps() {
        let c3 = family_monoid(FamilyKind::C, 3).unwrap();
        let maps = embed_rtrivial_extensive(&c3).unwrap();
        assert_eq!(maps.len(), c3.size());
        let distinct: BTreeSet<&PartialMap> = maps.iter().collect();
        assert_eq!(distinct.len(), maps.len());
        for (a, map) in maps.iter().enumerate() {
            let p = map.properties();
            assert!(p.total && p.extensive, "element {a} is not extensive");
        }
        for a in 0..c3.size() {
            for b in 0..c3.size() {
                let ab = maps[a].compose(&maps[b]).unwrap();
                assert_eq!(ab, maps[c3.mul(a, b)]);
            }
        }

        let z3 = {
            let mut t = vec![0u32; 9];
            for a in 0..3 {
                for b in 0..3 {
                    t[a * 3 + b] = ((a + b) % 3) as u32;
                }
            }
            FiniteMonoid::from_table(t, 0, vec![1]).unwrap()
        };
        assert!(embed_rtrivial_extensive(&z3).is_err());
    }

    #[test]
    fn catalan_prefix() {
        let expect = [1u128, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (n, &c) in expect.iter().enumerate() {
            assert_eq!(catalan_number(n), c);
        }
    }
}
