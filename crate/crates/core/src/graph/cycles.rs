use super::Graph;
use crate::bits::EdgeSet;
use crate::error::{Error, Result};

/// A simple cycle in canonical orientation: the first vertex is the smallest,
/// and its successor is smaller than its predecessor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle {
    vertices: Vec<usize>,
    edge_indices: Vec<usize>,
    edges: EdgeSet,
}

// The vertex sequence determines the edges.
impl Ord for Cycle {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.vertices.cmp(&other.vertices)
    }
}

impl PartialOrd for Cycle {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Cycle {
    /// Builds a cycle from a cyclic vertex sequence in any rotation or direction.
    pub fn new(g: &Graph, sequence: &[usize]) -> Result<Cycle> {
        let k = sequence.len();
        if k < 3 {
            return Err(Error::InvalidParam(format!("cycle of length {k}")));
        }
        let mut seen = vec![false; g.vertex_count()];
        for &v in sequence {
            if v >= g.vertex_count() {
                return Err(Error::InvalidVertex(v));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidParam(format!("vertex {v} repeats on cycle")));
            }
        }
        let start = (0..k).min_by_key(|&i| sequence[i]).unwrap();
        let next = sequence[(start + 1) % k];
        let prev = sequence[(start + k - 1) % k];
        let vertices: Vec<usize> = if next < prev {
            (0..k).map(|j| sequence[(start + j) % k]).collect()
        } else {
            (0..k).map(|j| sequence[(start + k - j) % k]).collect()
        };
        Cycle::from_canonical(g, vertices)
    }

    fn from_canonical(g: &Graph, vertices: Vec<usize>) -> Result<Cycle> {
        let k = vertices.len();
        let edge_indices = (0..k)
            .map(|i| {
                let (u, v) = (vertices[i], vertices[(i + 1) % k]);
                g.edge_index(u, v)
                    .ok_or(Error::NotAnEdge(u.min(v), u.max(v)))
            })
            .collect::<Result<Vec<_>>>()?;
        let edges = edge_indices.iter().copied().collect();
        Ok(Cycle {
            vertices,
            edge_indices,
            edges,
        })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Edge indices in traversal order, starting with the edge leaving `vertices[0]`.
    pub fn edge_indices(&self) -> &[usize] {
        &self.edge_indices
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Every simple cycle of length `3..=max_len`, each once in canonical
/// orientation, sorted lexicographically by vertex sequence.
pub fn enumerate_cycles(g: &Graph, max_len: usize) -> Result<Vec<Cycle>> {
    if max_len < 3 || max_len > g.vertex_count() {
        return Err(Error::InvalidParam(format!(
            "max cycle length {max_len} outside 3..={}",
            g.vertex_count()
        )));
    }
    let mut sequences = if g.is_complete() {
        complete_cycles(g.vertex_count(), max_len)
    } else {
        dfs_cycles(g, max_len)
    };
    sequences.sort_unstable();
    sequences
        .into_iter()
        .map(|vs| Cycle::from_canonical(g, vs))
        .collect()
}

// Every k-subset of K_n carries (k-1)!/2 cycles: fix the minimum first and
// order the rest so the second vertex is below the last.
fn complete_cycles(n: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 3..=max_len {
        for subset in k_subsets(n, k) {
            let mut rest = subset[1..].to_vec();
            permute(&mut rest, 0, &mut |p| {
                if p[0] < p[p.len() - 1] {
                    let mut vs = Vec::with_capacity(k);
                    vs.push(subset[0]);
                    vs.extend_from_slice(p);
                    out.push(vs);
                }
            });
        }
    }
    out
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in start..n {
            if n - v < k - current.len() {
                break;
            }
            current.push(v);
            go(v + 1, n, k, current, out);
            current.pop();
        }
    }
    go(0, n, k, &mut current, &mut out);
    out
}

fn permute(items: &mut [usize], at: usize, visit: &mut impl FnMut(&[usize])) {
    if at == items.len() {
        visit(items);
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permute(items, at + 1, visit);
        items.swap(at, i);
    }
}

// Rooted DFS: a cycle is found from its smallest vertex, using only larger
// vertices, and kept in the direction where the second vertex is below the last.
fn dfs_cycles(g: &Graph, max_len: usize) -> Vec<Vec<usize>> {
    struct Search<'a> {
        g: &'a Graph,
        max_len: usize,
        path: Vec<usize>,
        on_path: Vec<bool>,
        out: Vec<Vec<usize>>,
    }

    impl Search<'_> {
        fn extend(&mut self, root: usize) {
            let last = *self.path.last().unwrap();
            for &w in self.g.neighbors(last) {
                if w == root && self.path.len() >= 3 && self.path[1] < last {
                    self.out.push(self.path.clone());
                } else if w > root && !self.on_path[w] && self.path.len() < self.max_len {
                    self.on_path[w] = true;
                    self.path.push(w);
                    self.extend(root);
                    self.path.pop();
                    self.on_path[w] = false;
                }
            }
        }
    }

    let mut search = Search {
        g,
        max_len,
        path: Vec::with_capacity(max_len),
        on_path: vec![false; g.vertex_count()],
        out: Vec::new(),
    };
    for root in 0..g.vertex_count() {
        search.path.push(root);
        search.extend(root);
        search.path.pop();
    }
    search.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin_graph;
    use std::collections::BTreeSet;

    // Oracle: every ordering of every vertex subset, normalized through
    // `Cycle::new`, collected into a set.
    fn brute_force(g: &Graph, max_len: usize) -> BTreeSet<Vec<usize>> {
        let n = g.vertex_count();
        let mut out = BTreeSet::new();
        for mask in 0u32..1 << n {
            let subset: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            if subset.len() < 3 || subset.len() > max_len {
                continue;
            }
            let mut seq = subset.clone();
            permute(&mut seq, 0, &mut |p| {
                if let Ok(c) = Cycle::new(g, p) {
                    out.insert(c.vertices().to_vec());
                }
            });
        }
        out
    }

    fn per_length(cycles: &[Cycle]) -> Vec<usize> {
        let max = cycles.iter().map(Cycle::len).max().unwrap_or(0);
        (3..=max)
            .map(|k| cycles.iter().filter(|c| c.len() == k).count())
            .collect()
    }

    #[test]
    fn k6_triangles() {
        let k6 = Graph::complete(6).unwrap();
        assert_eq!(enumerate_cycles(&k6, 3).unwrap().len(), 20);
    }

    #[test]
    fn k6_up_to_five() {
        let k6 = Graph::complete(6).unwrap();
        let cycles = enumerate_cycles(&k6, 5).unwrap();
        assert_eq!(per_length(&cycles), vec![20, 45, 72]);
        assert_eq!(cycles.len(), 137);
    }

    #[test]
    fn k3_has_one_cycle() {
        let k3 = Graph::complete(3).unwrap();
        let cycles = enumerate_cycles(&k3, 3).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].vertices(), &[0, 1, 2]);
        assert_eq!(cycles[0].edge_indices(), &[0, 2, 1]);
    }

    #[test]
    fn matches_brute_force_oracle() {
        let graphs = [
            Graph::complete(5).unwrap(),
            Graph::complete(7).unwrap(),
            builtin_graph("cycle", Some(6)).unwrap(),
            Graph::new(
                7,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 0),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 3),
                    (1, 4),
                    (0, 6),
                    (6, 5),
                ],
            )
            .unwrap(),
            Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3), (4, 5)]).unwrap(),
        ];
        for g in &graphs {
            let n = g.vertex_count();
            for max_len in 3..=n {
                let got: Vec<Vec<usize>> = enumerate_cycles(g, max_len)
                    .unwrap()
                    .iter()
                    .map(|c| c.vertices().to_vec())
                    .collect();
                let want: Vec<Vec<usize>> = brute_force(g, max_len).into_iter().collect();
                assert_eq!(got, want, "{g:?} max_len {max_len}");
            }
        }
    }

    #[test]
    fn complete_and_dfs_strategies_agree() {
        let k6 = Graph::complete(6).unwrap();
        let mut dfs = dfs_cycles(&k6, 6);
        dfs.sort_unstable();
        let mut sub = complete_cycles(6, 6);
        sub.sort_unstable();
        assert_eq!(dfs, sub);
    }

    #[test]
    fn petersen_cycle_counts() {
        // Petersen: 12 pentagons, 10 hexagons, no cycles shorter than 5, none of length 7.
        let p = builtin_graph("petersen", None).unwrap();
        let counts = per_length(&enumerate_cycles(&p, 7).unwrap());
        assert_eq!(counts, vec![0, 0, 12, 10]);
    }

    #[test]
    fn canonical_orientation() {
        let k4 = Graph::complete(4).unwrap();
        let c = Cycle::new(&k4, &[3, 1, 0, 2]).unwrap();
        assert_eq!(c.vertices(), &[0, 1, 3, 2]);
        assert_eq!(Cycle::new(&k4, &[2, 0, 1, 3]).unwrap(), c);
        for c in enumerate_cycles(&k4, 4).unwrap() {
            let vs = c.vertices();
            assert!(vs.iter().all(|&v| v >= vs[0]));
            assert!(vs[1] < vs[vs.len() - 1]);
        }
    }

    #[test]
    fn rejects_bad_lengths() {
        let k4 = Graph::complete(4).unwrap();
        assert!(matches!(
            enumerate_cycles(&k4, 2),
            Err(Error::InvalidParam(_))
        ));
        assert!(matches!(
            enumerate_cycles(&k4, 5),
            Err(Error::InvalidParam(_))
        ));
    }
}
