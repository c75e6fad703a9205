//! Simple undirected graphs with a fixed lexicographic edge indexing.
//!
//! Every bit vector in the crate (signatures, cuts, canonical keys) is indexed
//! by the position of an edge in [`Graph::edges`], which is sorted by `(u, v)`
//! with `u < v`.

mod automorphism;
mod builtin;
mod cycles;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::bits::{EdgeSet, MAX_EDGES, MAX_VERTICES};
use crate::error::{Error, Result};

pub use automorphism::{
    automorphism_group, Permutation, PermutationGroup, MAX_GROUP_ORDER, MAX_SEARCH_VERTICES,
};
pub use builtin::builtin_graph;
pub use cycles::{enumerate_cycles, Cycle};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    edge_index: HashMap<(usize, usize), usize>,
    adjacency: Vec<Vec<usize>>,
    components: usize,
}

impl Graph {
    /// Builds a graph on vertices `0..n`. Pairs may be given in either
    /// orientation; they are stored as `(min, max)` in sorted order.
    pub fn new(n: usize, edge_pairs: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(format!(
                "{n} vertices (limit {MAX_VERTICES})"
            )));
        }
        let mut edges = Vec::with_capacity(edge_pairs.len());
        for &(u, v) in edge_pairs {
            if u == v || u >= n || v >= n {
                return Err(Error::InvalidEdge(u, v));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        if edges.len() > MAX_EDGES {
            return Err(Error::TooLarge(format!(
                "{} edges (limit {MAX_EDGES})",
                edges.len()
            )));
        }

        let edge_index = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        let mut g = Graph {
            n,
            edges,
            edge_index,
            adjacency,
            components: 0,
        };
        g.components = g.component_roots().len();
        Ok(g)
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Graph> {
        let pairs: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::new(n, &pairs)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    /// Dimension of the cycle space, `m - n + c`.
    pub fn cyclomatic_number(&self) -> usize {
        self.edge_count() + self.components - self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_index.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// All edges of the graph as a set.
    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::from_indices(0..self.edge_count())
    }

    /// The cut `δ({v})`: edges incident to `v`.
    pub fn star(&self, v: usize) -> EdgeSet {
        self.adjacency[v]
            .iter()
            .map(|&w| self.edge_index[&(v.min(w), v.max(w))])
            .collect()
    }

    /// Smallest vertex of each connected component, in increasing order.
    pub fn component_roots(&self) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut roots = Vec::new();
        for r in 0..self.n {
            if seen[r] {
                continue;
            }
            roots.push(r);
            seen[r] = true;
            let mut stack = vec![r];
            while let Some(u) = stack.pop() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        roots
    }

    /// Breadth-first spanning forest rooted at the smallest vertex of each
    /// component; has exactly `n - c` edges.
    pub fn spanning_forest(&self) -> EdgeSet {
        let mut seen = vec![false; self.n];
        let mut forest = EdgeSet::EMPTY;
        for r in self.component_roots() {
            seen[r] = true;
            let mut queue = VecDeque::from([r]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        forest.insert(self.edge_index(u, w).expect("adjacent"));
                        queue.push_back(w);
                    }
                }
            }
        }
        forest
    }

    /// Parses the line-oriented text format:
    ///
    /// ```text
    /// # comment
    /// n 4
    /// e 0 1
    /// e 2 3
    /// ```
    pub fn parse(text: &str) -> Result<Graph> {
        let mut n = None;
        let mut pairs = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = || Error::Parse(format!("line {}: `{}`", lineno + 1, raw.trim()));
            let fields: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
            match fields.as_slice() {
                ["n", count] if n.is_none() => n = Some(num(count)?),
                ["e", u, v] if n.is_some() => pairs.push((num(u)?, num(v)?)),
                _ => return Err(bad()),
            }
        }
        let n = n.ok_or_else(|| Error::Parse("missing `n <count>` line".into()))?;
        Graph::new(n, &pairs)
    }

    /// Serializes to the text format accepted by [`Graph::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for &(u, v) in &self.edges {
            out.push_str(&format!("e {u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.edges.len())
            .field("c", &self.components)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!((g.edge_count(), g.component_count()), (3, 1));
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.edge_index(2, 1), Some(2));
    }

    #[test]
    fn k6_has_fifteen_edges() {
        let pairs: Vec<_> = (0..6)
            .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
            .collect();
        let g = Graph::new(6, &pairs).unwrap();
        assert_eq!((g.edge_count(), g.component_count()), (15, 1));
        assert!(g.is_complete());
        assert_eq!(g, Graph::complete(6).unwrap());
    }

    #[test]
    fn disjoint_edges_form_two_components() {
        let g = Graph::new(4, &[(2, 3), (0, 1)]).unwrap();
        assert_eq!((g.edge_count(), g.component_count()), (2, 2));
        assert_eq!(g.spanning_forest(), g.all_edges());
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(Error::InvalidEdge(1, 1)));
        assert_eq!(Graph::new(3, &[(0, 3)]), Err(Error::InvalidEdge(0, 3)));
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(matches!(Graph::complete(17), Err(Error::TooLarge(_))));
    }

    #[test]
    fn isolated_vertices_count_as_components() {
        let g = Graph::new(5, &[(0, 1)]).unwrap();
        assert_eq!(g.component_count(), 4);
        assert_eq!(g.component_roots(), vec![0, 2, 3, 4]);
        assert_eq!(g.cyclomatic_number(), 0);
    }

    #[test]
    fn spanning_forest_sizes() {
        for (g, size) in [
            (Graph::complete(3).unwrap(), 2),
            (Graph::complete(6).unwrap(), 5),
        ] {
            assert_eq!(g.spanning_forest().len(), size);
        }
        // BFS from 0 in K6 takes the star at 0.
        let k6 = Graph::complete(6).unwrap();
        assert_eq!(k6.spanning_forest(), k6.star(0));
    }

    #[test]
    fn text_format() {
        let g = Graph::parse("# square\nn 4\ne 0 1\ne 1 2 # side\n\ne 2 3\ne 3 0\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
        assert!(matches!(Graph::parse("e 0 1\n"), Err(Error::Parse(_))));
        assert!(matches!(Graph::parse("n 2\ne 0 x\n"), Err(Error::Parse(_))));
        assert!(matches!(Graph::parse(""), Err(Error::Parse(_))));
        assert_eq!(Graph::parse("n 2\ne 0 2\n"), Err(Error::InvalidEdge(0, 2)));
    }
}
