//! Loop-free directed graphs and the transformation monoids their edges
//! generate: each edge acts by collapsing its source onto its target.

use super::PartialMap;
use crate::error::{Error, Result};
use crate::monoid::{closure_from_generators, FiniteMonoid};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Digraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Digraph {
    /// Vertices are `0..n`; edges are ordered pairs without loops. The edge
    /// list is deduplicated and sorted so equal graphs compare equal.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut edges = edges;
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("edge ({u},{v}) outside 0..{n}")));
            }
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Digraph { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The directed path on `m` vertices: `0 → 1 → ... → m-1`.
    pub fn path(m: usize) -> Digraph {
        Digraph {
            n: m,
            edges: (0..m.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
        }
    }

    /// Text form: first line the vertex count, then one `u v` edge per line,
    /// 1-based.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty digraph".into()))?
            .trim()
            .parse()
            .map_err(|_| Error::Parse("first line must be the vertex count".into()))?;
        let mut edges = Vec::new();
        for line in lines {
            let mut toks = line.split_whitespace();
            let u: usize = toks
                .next()
                .ok_or_else(|| Error::Parse("edge line missing source".into()))?
                .parse()
                .map_err(|_| Error::Parse(format!("bad edge line `{line}`")))?;
            let v: usize = toks
                .next()
                .ok_or_else(|| Error::Parse(format!("edge line `{line}` missing target")))?
                .parse()
                .map_err(|_| Error::Parse(format!("bad edge line `{line}`")))?;
            if toks.next().is_some() {
                return Err(Error::Parse(format!("edge line `{line}` has extra tokens")));
            }
            if u == 0 || v == 0 {
                return Err(Error::Parse("vertices are 1-based".into()));
            }
            edges.push((u - 1, v - 1));
        }
        Digraph::new(n, edges)
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for &(u, v) in &self.edges {
            writeln!(f, "{} {}", u + 1, v + 1)?;
        }
        Ok(())
    }
}

/// A spine `0 → 1 → ... → n` with one pendant hung off each spine vertex
/// except the last; pendant of spine vertex `i` is vertex `n+1+i`.
pub fn build_gamma_n(n: usize) -> Result<Digraph> {
    if n < 1 {
        return Err(Error::invalid("spine needs n >= 1"));
    }
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, i + 1)).collect();
    edges.extend((0..n).map(|i| (i, n + 1 + i)));
    Digraph::new(2 * n + 1, edges)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DigraphAnalysis {
    pub is_acyclic: bool,
    /// Vertex count of a longest directed path; absent on cyclic input.
    pub longest_path_vertices: Option<usize>,
}

pub fn digraph_analysis(g: &Digraph) -> DigraphAnalysis {
    let order = topological_order(g);
    match order {
        Some(order) => {
            // longest path ending at v, in vertices
            let mut best = vec![1usize; g.n.max(1)];
            let mut adj_in: Vec<Vec<usize>> = vec![Vec::new(); g.n];
            for &(u, v) in &g.edges {
                adj_in[v].push(u);
            }
            let mut overall = if g.n == 0 { 0 } else { 1 };
            for &v in &order {
                for &u in &adj_in[v] {
                    best[v] = best[v].max(best[u] + 1);
                }
                overall = overall.max(best[v]);
            }
            DigraphAnalysis {
                is_acyclic: true,
                longest_path_vertices: Some(overall),
            }
        }
        None => DigraphAnalysis {
            is_acyclic: false,
            longest_path_vertices: None,
        },
    }
}

/// The longest-path count alone; cyclic graphs are an error here rather than
/// a missing value.
pub fn longest_path_vertices(g: &Digraph) -> Result<usize> {
    digraph_analysis(g)
        .longest_path_vertices
        .ok_or_else(|| Error::invalid("graph has a directed cycle"))
}

fn topological_order(g: &Digraph) -> Option<Vec<usize>> {
    let mut indegree = vec![0usize; g.n];
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); g.n];
    for &(u, v) in &g.edges {
        indegree[v] += 1;
        adj[u].push(v);
    }
    let mut queue: Vec<usize> = (0..g.n).filter(|&v| indegree[v] == 0).collect();
    let mut order = Vec::with_capacity(g.n);
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        order.push(v);
        for &w in &adj[v] {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                queue.push(w);
            }
        }
    }
    (order.len() == g.n).then_some(order)
}

/// The total map that sends `p` to `q` and fixes every other vertex.
pub fn tau_edge(p: usize, q: usize, n: usize) -> Result<PartialMap> {
    if p >= n || q >= n {
        return Err(Error::invalid("edge endpoint outside the vertex set"));
    }
    if p == q {
        return Err(Error::invalid("edge maps must move their source"));
    }
    let image = (0..n).map(|i| Some(if i == p { q } else { i })).collect();
    PartialMap::new(n, image)
}

/// Submonoid of total maps on the vertex set generated by the edge maps.
pub fn catalan_of_digraph(g: &Digraph) -> Result<FiniteMonoid> {
    let taus: Vec<PartialMap> = g
        .edges
        .iter()
        .map(|&(u, v)| tau_edge(u, v, g.n))
        .collect::<Result<_>>()?;
    closure_from_generators(
        PartialMap::identity(g.n),
        &taus,
        |a, b| a.compose_unchecked(b),
        |m| m.to_string(),
    )
}
