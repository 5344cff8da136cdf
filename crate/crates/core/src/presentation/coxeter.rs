use std::fmt;

use crate::error::{Error, Result};
use crate::monoid::{closure_from_generators, unitary_closure, FiniteMonoid};
use crate::transform::PartialMap;

/// Symmetric order matrix of a Coxeter system: diagonal entries are 1,
/// off-diagonal entries at least 2, `None` standing for infinity. Only the
/// strict upper triangle is stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterMatrix {
    n: usize,
    upper: Vec<Option<u32>>,
}

impl CoxeterMatrix {
    pub fn from_upper_triangle(n: usize, upper: Vec<Option<u32>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid(
                "a Coxeter matrix needs at least one generator",
            ));
        }
        if upper.len() != n * (n - 1) / 2 {
            return Err(Error::invalid(format!(
                "upper triangle of a {n}x{n} matrix has {} entries, got {}",
                n * (n - 1) / 2,
                upper.len()
            )));
        }
        if let Some(m) = upper.iter().flatten().find(|&&m| m < 2) {
            return Err(Error::invalid(format!("off-diagonal order {m} below 2")));
        }
        Ok(CoxeterMatrix { n, upper })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// m_{ij}; `None` means infinite order. Indices are 0-based.
    pub fn entry(&self, i: usize, j: usize) -> Option<u32> {
        assert!(i < self.n && j < self.n, "index outside the matrix");
        if i == j {
            return Some(1);
        }
        let (i, j) = (i.min(j), i.max(j));
        let row_start = i * (2 * self.n - i - 1) / 2;
        self.upper[row_start + (j - i - 1)]
    }

    /// Text form: the size, then the strict upper triangle row by row with
    /// `inf` for infinite entries.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty Coxeter matrix".into()))?
            .trim()
            .parse()
            .map_err(|_| Error::Parse("first line must be the matrix size".into()))?;
        if n == 0 {
            return Err(Error::Parse("matrix size must be positive".into()));
        }
        let mut upper = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n.saturating_sub(1) {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing row {}", i + 1)))?;
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != n - 1 - i {
                return Err(Error::Parse(format!(
                    "row {} should have {} entries, got {}",
                    i + 1,
                    n - 1 - i,
                    tokens.len()
                )));
            }
            for t in tokens {
                if t == "inf" {
                    upper.push(None);
                } else {
                    let m: u32 = t
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad order entry {t}")))?;
                    upper.push(Some(m));
                }
            }
        }
        if lines.next().is_some() {
            return Err(Error::Parse(
                "trailing rows after the upper triangle".into(),
            ));
        }
        CoxeterMatrix::from_upper_triangle(n, upper).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        let mut at = 0;
        for i in 0..self.n.saturating_sub(1) {
            let row: Vec<String> = (i + 1..self.n)
                .map(|_| {
                    let s = match self.upper[at] {
                        Some(m) => m.to_string(),
                        None => "inf".into(),
                    };
                    at += 1;
                    s
                })
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// The diagram catalogue with concrete permutation carriers. Three shapes
/// cover everything the library verifies: simple paths, dihedral pairs, and
/// the cube group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoxeterDiagram {
    /// path on n vertices, adjacent orders 3; the group is S_{n+1} acting by
    /// adjacent transpositions
    A(usize),
    /// two generators whose product has order n; the dihedral group of order
    /// 2n acting on Z_n by the reflections i -> -i and i -> 1-i
    I2(u32),
    /// orders 4, 2, 3; the symmetries of the cube acting on its six faces
    B3,
}

impl CoxeterDiagram {
    pub fn name(&self) -> String {
        match self {
            CoxeterDiagram::A(n) => format!("A{n}"),
            CoxeterDiagram::I2(n) => format!("I2({n})"),
            CoxeterDiagram::B3 => "B3".into(),
        }
    }

    /// Accepts `A<n>`, `I2(<n>)` or the shorthand `I<n>`, and `B3`, case
    /// insensitively.
    pub fn from_name(name: &str) -> Result<Self> {
        let s = name.trim().to_ascii_lowercase();
        if s == "b3" {
            return Ok(CoxeterDiagram::B3);
        }
        if let Some(rest) = s.strip_prefix("i2(").and_then(|r| r.strip_suffix(')')) {
            if let Ok(n) = rest.parse() {
                return Ok(CoxeterDiagram::I2(n));
            }
        } else if let Some(rest) = s.strip_prefix('a') {
            if let Ok(n) = rest.parse() {
                return Ok(CoxeterDiagram::A(n));
            }
        } else if let Some(rest) = s.strip_prefix('i') {
            if let Ok(n) = rest.parse() {
                return Ok(CoxeterDiagram::I2(n));
            }
        }
        Err(Error::invalid(format!(
            "unknown Coxeter diagram {name}; known shapes are A<n>, I<n>, B3"
        )))
    }

    pub fn matrix(&self) -> Result<CoxeterMatrix> {
        match *self {
            CoxeterDiagram::A(n) => {
                if n == 0 {
                    return Err(Error::invalid("path diagram needs at least one vertex"));
                }
                let mut upper = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        upper.push(Some(if j == i + 1 { 3 } else { 2 }));
                    }
                }
                CoxeterMatrix::from_upper_triangle(n, upper)
            }
            CoxeterDiagram::I2(n) => {
                if n < 3 {
                    return Err(Error::invalid("dihedral diagram needs order >= 3"));
                }
                CoxeterMatrix::from_upper_triangle(2, vec![Some(n)])
            }
            CoxeterDiagram::B3 => {
                CoxeterMatrix::from_upper_triangle(3, vec![Some(4), Some(2), Some(3)])
            }
        }
    }

    fn generator_maps(&self) -> Result<Vec<PartialMap>> {
        let total = |images: Vec<usize>| {
            PartialMap::new(images.len(), images.into_iter().map(Some).collect())
        };
        match *self {
            CoxeterDiagram::A(n) => {
                if n == 0 {
                    return Err(Error::invalid("path diagram needs at least one vertex"));
                }
                (1..=n)
                    .map(|i| {
                        let mut images: Vec<usize> = (0..=n).collect();
                        images.swap(i - 1, i);
                        total(images)
                    })
                    .collect()
            }
            CoxeterDiagram::I2(n) => {
                if n < 3 {
                    return Err(Error::invalid("dihedral diagram needs order >= 3"));
                }
                let n = n as usize;
                let negate = total((0..n).map(|j| (n - j) % n).collect())?;
                let reflect = total((0..n).map(|j| (1 + n - j) % n).collect())?;
                Ok(vec![negate, reflect])
            }
            CoxeterDiagram::B3 => Ok(vec![
                total(vec![3, 1, 2, 0, 4, 5])?,
                total(vec![1, 0, 2, 4, 3, 5])?,
                total(vec![0, 2, 1, 3, 5, 4])?,
            ]),
        }
    }
}

/// A Coxeter group realized on a concrete point set, with its abstract order
/// matrix and the closure of the generator maps.
pub struct CoxeterModel {
    pub diagram: CoxeterDiagram,
    pub matrix: CoxeterMatrix,
    pub generators: Vec<PartialMap>,
    pub group: FiniteMonoid,
    /// index of each generator inside `group`
    pub generator_indices: Vec<usize>,
}

/// Builds the permutation carrier for a catalogued diagram and closes it.
/// The defining relations (s_i s_j)^{m_ij} = 1 are re-verified on the result,
/// diagonal included, so the carrier really is a quotient of the abstract
/// group; equal orders then make it the group itself.
pub fn coxeter_group_model(diagram: CoxeterDiagram) -> Result<CoxeterModel> {
    let matrix = diagram.matrix()?;
    let maps = diagram.generator_maps()?;
    let base = maps[0].base_size();
    let group = closure_from_generators(
        PartialMap::identity(base),
        &maps,
        |a, b| a.compose_unchecked(b),
        |m| m.to_string(),
    )?;
    let generator_indices = group.generator_indices().to_vec();
    let id = group.identity_index();
    for i in 0..matrix.size() {
        for j in 0..matrix.size() {
            if let Some(m) = matrix.entry(i, j) {
                let mut acc = id;
                for _ in 0..m {
                    acc = group.mul(acc, generator_indices[i]);
                    acc = group.mul(acc, generator_indices[j]);
                }
                if acc != id {
                    return Err(Error::RelationBroken {
                        lhs: format!("(s{} s{})^{}", i + 1, j + 1, m),
                        rhs: "1".into(),
                    });
                }
            }
        }
    }
    for a in 0..group.size() {
        let invertible = (0..group.size()).any(|b| group.mul(a, b) == id && group.mul(b, a) == id);
        if !invertible {
            return Err(Error::invalid("carrier closure is not a group"));
        }
    }
    Ok(CoxeterModel {
        diagram,
        matrix,
        generators: maps,
        group,
        generator_indices,
    })
}

/// The submonoid of the unitary power monoid of W generated by the subsets
/// {1, s_i}. It always comes out the same size as the group itself, which is
/// checked here rather than trusted.
pub fn hecke0_via_unitary(diagram: CoxeterDiagram) -> Result<FiniteMonoid> {
    let model = coxeter_group_model(diagram)?;
    let id = model.group.identity_index();
    let subsets: Vec<Vec<usize>> = model
        .generator_indices
        .iter()
        .map(|&g| vec![id, g])
        .collect();
    let hecke = unitary_closure(&model.group, &subsets)?;
    if hecke.size() != model.group.size() {
        return Err(Error::invalid(format!(
            "unitary closure has {} elements, the group has {}",
            hecke.size(),
            model.group.size()
        )));
    }
    Ok(hecke)
}
