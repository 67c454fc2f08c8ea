//! Simple undirected and directed graphs with an edge-list text format.
//!
//! The format is a header line `p <n> <m>` followed by `m` lines `u v`
//! (0-indexed). Blank lines and lines starting with `c` or `#` are ignored.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bits::BitString;
use crate::error::{HamError, Result};
use crate::verifier::Verifier;

/// Undirected graph without self-loops. Edges are stored as `(lo, hi)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Self { vertex_count, edges: BTreeSet::new() }
    }

    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::new(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.edges.insert((u, v));
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
    }

    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid star")
    }

    /// Returns whether the edge was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        if u == v {
            return Err(HamError::InvalidParameter(format!("self-loop at {u}")));
        }
        if u >= self.vertex_count || v >= self.vertex_count {
            return Err(HamError::InvalidParameter(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.vertex_count
            )));
        }
        Ok(self.edges.insert((u.min(v), u.max(v))))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.vertex_count).filter(|&w| w != v && self.has_edge(v, w)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn complement(&self) -> Self {
        let mut g = Self::new(self.vertex_count);
        for u in 0..self.vertex_count {
            for v in u + 1..self.vertex_count {
                if !self.has_edge(u, v) {
                    g.edges.insert((u, v));
                }
            }
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_vertex_cover(&self, set: &BitString) -> bool {
        set.len() == self.vertex_count && self.edges.iter().all(|&(u, v)| set.get(u) || set.get(v))
    }

    pub fn is_independent_set(&self, set: &BitString) -> bool {
        set.len() == self.vertex_count && self.edges.iter().all(|&(u, v)| !(set.get(u) && set.get(v)))
    }

    pub fn is_clique(&self, set: &BitString) -> bool {
        let members = set.ones_positions();
        set.len() == self.vertex_count
            && members
                .iter()
                .enumerate()
                .all(|(i, &u)| members[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("p {} {}\n", self.vertex_count, self.edges.len());
        for (u, v) in &self.edges {
            writeln!(out, "{u} {v}").expect("write to string");
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let (n, pairs) = parse_pairs(text)?;
        let mut g = Self::new(n);
        for (line, u, v) in pairs {
            g.add_edge(u, v).map_err(|e| HamError::Parse { line, msg: e.to_string() })?;
        }
        Ok(g)
    }
}

/// Directed graph without self-loops or parallel edges. Edge indices follow
/// the sorted order of `(from, to)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Digraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Digraph {
    pub fn new(vertex_count: usize) -> Self {
        Self { vertex_count, edges: BTreeSet::new() }
    }

    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::new(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, from: usize, to: usize) -> Result<bool> {
        if from == to {
            return Err(HamError::InvalidParameter(format!("self-loop at {from}")));
        }
        if from >= self.vertex_count || to >= self.vertex_count {
            return Err(HamError::InvalidParameter(format!(
                "arc ({from}, {to}) out of range for {} vertices",
                self.vertex_count
            )));
        }
        Ok(self.edges.insert((from, to)))
    }

    pub fn remove_edge(&mut self, from: usize, to: usize) -> bool {
        self.edges.remove(&(from, to))
    }

    /// Appends a fresh vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        self.vertex_count += 1;
        self.vertex_count - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.edges.contains(&(from, to))
    }

    pub fn edge_index(&self, from: usize, to: usize) -> Option<usize> {
        self.edges.iter().position(|&e| e == (from, to))
    }

    pub fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.range((v, 0)..(v + 1, 0)).map(|&(_, to)| to)
    }

    /// Encodes an edge set as a bit string over edge indices.
    pub fn edge_set_bits(&self, set: &BTreeSet<(usize, usize)>) -> BitString {
        self.edges.iter().map(|e| set.contains(e)).collect()
    }

    pub fn edges_of_bits(&self, bits: &BitString) -> BTreeSet<(usize, usize)> {
        self.edges.iter().zip(bits.iter()).filter_map(|(&e, b)| b.then_some(e)).collect()
    }

    /// True when the arcs form one directed cycle through every vertex.
    pub fn is_hamiltonian_cycle(&self, arcs: &BTreeSet<(usize, usize)>) -> bool {
        let n = self.vertex_count;
        if n < 2 || arcs.len() != n || !arcs.iter().all(|&(u, v)| self.has_edge(u, v)) {
            return false;
        }
        let mut next = vec![usize::MAX; n];
        for &(u, v) in arcs {
            if next[u] != usize::MAX {
                return false;
            }
            next[u] = v;
        }
        let mut seen = vec![false; n];
        let mut v = 0;
        for _ in 0..n {
            if seen[v] || next[v] == usize::MAX {
                return false;
            }
            seen[v] = true;
            v = next[v];
        }
        v == 0
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("p {} {}\n", self.vertex_count, self.edges.len());
        for (u, v) in &self.edges {
            writeln!(out, "{u} {v}").expect("write to string");
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let (n, pairs) = parse_pairs(text)?;
        let mut g = Self::new(n);
        for (line, u, v) in pairs {
            g.add_edge(u, v).map_err(|e| HamError::Parse { line, msg: e.to_string() })?;
        }
        Ok(g)
    }
}

type Pairs = Vec<(usize, usize, usize)>;

fn parse_pairs(text: &str) -> Result<(usize, Pairs)> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>().map_err(|_| HamError::Parse { line, msg: format!("bad integer {s:?}") })
        };
        match (header, fields.as_slice()) {
            (None, ["p", n, m]) => header = Some((num(n)?, num(m)?)),
            (None, _) => return Err(HamError::Parse { line, msg: "expected header `p <n> <m>`".into() }),
            (Some(_), [u, v]) => pairs.push((line, num(u)?, num(v)?)),
            (Some(_), _) => return Err(HamError::Parse { line, msg: "expected `u v`".into() }),
        }
    }
    let (n, m) = header.ok_or(HamError::Parse { line: 0, msg: "missing header".into() })?;
    if pairs.len() != m {
        return Err(HamError::Parse { line: 0, msg: format!("header says {m} edges, found {}", pairs.len()) });
    }
    Ok((n, pairs))
}

/// Accepts vertex covers with at most `k` vertices.
#[derive(Debug, Clone)]
pub struct VertexCoverVerifier {
    pub graph: Graph,
    pub k: usize,
}

impl Verifier for VertexCoverVerifier {
    fn witness_length(&self) -> usize {
        self.graph.vertex_count()
    }

    fn accepts(&self, w: &BitString) -> bool {
        w.weight() <= self.k && self.graph.is_vertex_cover(w)
    }

    fn label(&self) -> String {
        format!("vertex-cover(n={}, k<={})", self.graph.vertex_count(), self.k)
    }
}

/// Accepts independent sets with at least `k` vertices.
#[derive(Debug, Clone)]
pub struct IndependentSetVerifier {
    pub graph: Graph,
    pub k: usize,
}

impl Verifier for IndependentSetVerifier {
    fn witness_length(&self) -> usize {
        self.graph.vertex_count()
    }

    fn accepts(&self, w: &BitString) -> bool {
        w.weight() >= self.k && self.graph.is_independent_set(w)
    }

    fn label(&self) -> String {
        format!("independent-set(n={}, k>={})", self.graph.vertex_count(), self.k)
    }
}

/// Accepts cliques with at least `k` vertices.
#[derive(Debug, Clone)]
pub struct CliqueVerifier {
    pub graph: Graph,
    pub k: usize,
}

impl Verifier for CliqueVerifier {
    fn witness_length(&self) -> usize {
        self.graph.vertex_count()
    }

    fn accepts(&self, w: &BitString) -> bool {
        w.weight() >= self.k && self.graph.is_clique(w)
    }

    fn label(&self) -> String {
        format!("clique(n={}, k>={})", self.graph.vertex_count(), self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_out_of_range() {
        let mut g = Graph::new(3);
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 3).is_err());
        assert!(g.add_edge(2, 0).unwrap());
        assert!(!g.add_edge(0, 2).unwrap());
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2)]);
    }

    #[test]
    fn complement_of_complete_is_empty() {
        assert_eq!(Graph::complete(5).complement(), Graph::new(5));
        assert_eq!(Graph::new(3).complement(), Graph::complete(3));
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = Graph::star(3);
        let text = g.to_edge_list();
        assert!(text.starts_with("p 4 3\n"));
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
        let d = Digraph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(Digraph::parse_edge_list(&d.to_edge_list()).unwrap(), d);
    }

    #[test]
    fn edge_list_errors() {
        assert!(Graph::parse_edge_list("0 1\n").is_err());
        assert!(Graph::parse_edge_list("p 2 2\n0 1\n").is_err());
        assert!(Graph::parse_edge_list("p 2 1\n0 x\n").is_err());
        assert!(Graph::parse_edge_list("c comment\np 2 1\n\n0 1\n").is_ok());
    }

    #[test]
    fn set_predicates() {
        let k3 = Graph::complete(3);
        assert!(k3.is_vertex_cover(&"110".parse().unwrap()));
        assert!(!k3.is_vertex_cover(&"100".parse().unwrap()));
        assert!(k3.is_independent_set(&"010".parse().unwrap()));
        assert!(k3.is_clique(&"111".parse().unwrap()));
        assert!(!Graph::path(3).is_clique(&"101".parse().unwrap()));
    }

    #[test]
    fn hamiltonian_cycle_check() {
        let d = Digraph::from_edges(3, [(0, 1), (1, 2), (2, 0), (1, 0)]).unwrap();
        let cycle: BTreeSet<_> = [(0, 1), (1, 2), (2, 0)].into();
        assert!(d.is_hamiltonian_cycle(&cycle));
        let not: BTreeSet<_> = [(0, 1), (1, 0)].into();
        assert!(!d.is_hamiltonian_cycle(&not));
        let bits = d.edge_set_bits(&cycle);
        assert_eq!(d.edges_of_bits(&bits), cycle);
    }
}
