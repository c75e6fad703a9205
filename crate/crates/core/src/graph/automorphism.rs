use super::Graph;
use crate::bits::EdgeSet;
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`automorphism_group`].
pub const MAX_SEARCH_VERTICES: usize = 14;
/// Largest group order [`automorphism_group`] will materialize.
pub const MAX_GROUP_ORDER: usize = 1_000_000;

/// A vertex permutation of a graph that maps edges to edges, together with the
/// induced permutation of edge indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
    edge_images: Vec<usize>,
}

impl Permutation {
    /// Checks that `images` is a permutation of the vertices preserving adjacency.
    pub fn new(g: &Graph, images: Vec<usize>) -> Result<Permutation> {
        let n = g.vertex_count();
        if images.len() != n {
            return Err(Error::NotAutomorphism);
        }
        let mut hit = vec![false; n];
        for &v in &images {
            if v >= n || std::mem::replace(&mut hit[v], true) {
                return Err(Error::NotAutomorphism);
            }
        }
        // A bijection on vertices that maps every edge to an edge is an
        // automorphism, since the edge count is finite and preserved.
        let edge_images = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                g.edge_index(images[u], images[v])
                    .ok_or(Error::NotAutomorphism)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Permutation {
            images,
            edge_images,
        })
    }

    pub fn identity(g: &Graph) -> Permutation {
        Permutation {
            images: (0..g.vertex_count()).collect(),
            edge_images: (0..g.edge_count()).collect(),
        }
    }

    /// Vertex images in one-line notation: `images()[v]` is where `v` goes.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn edge_images(&self) -> &[usize] {
        &self.edge_images
    }

    pub fn apply_vertex(&self, v: usize) -> usize {
        self.images[v]
    }

    /// Image of an edge set under the induced edge action.
    pub fn apply_edges(&self, set: EdgeSet) -> EdgeSet {
        set.iter().map(|e| self.edge_images[e]).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (v, &w) in self.images.iter().enumerate() {
            images[w] = v;
        }
        let mut edge_images = vec![0; self.edge_images.len()];
        for (e, &f) in self.edge_images.iter().enumerate() {
            edge_images[f] = e;
        }
        Permutation {
            images,
            edge_images,
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
            edge_images: other
                .edge_images
                .iter()
                .map(|&e| self.edge_images[e])
                .collect(),
        }
    }
}

/// The full automorphism group of a graph as an explicit element list.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

impl PermutationGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in lexicographic order of their image lists; the identity is first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.elements.iter()
    }

    pub fn contains(&self, images: &[usize]) -> bool {
        self.elements
            .binary_search_by(|p| p.images.as_slice().cmp(images))
            .is_ok()
    }
}

/// Backtracking search over vertex images, pruned by degree and by adjacency
/// to the already-mapped prefix.
pub fn automorphism_group(g: &Graph) -> Result<PermutationGroup> {
    let n = g.vertex_count();
    if n > MAX_SEARCH_VERTICES {
        return Err(Error::TooLarge(format!(
            "automorphism search on {n} vertices (limit {MAX_SEARCH_VERTICES})"
        )));
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | 1 << w))
        .collect();

    struct Search<'a> {
        g: &'a Graph,
        adj: Vec<u64>,
        images: Vec<usize>,
        used: u64,
        found: Vec<Vec<usize>>,
        overflow: bool,
    }

    impl Search<'_> {
        fn assign(&mut self, v: usize) {
            let n = self.g.vertex_count();
            if v == n {
                if self.found.len() == MAX_GROUP_ORDER {
                    self.overflow = true;
                } else {
                    self.found.push(self.images.clone());
                }
                return;
            }
            for w in 0..n {
                if self.overflow {
                    return;
                }
                if self.used >> w & 1 == 1 || self.g.degree(w) != self.g.degree(v) {
                    continue;
                }
                let consistent = (0..v).all(|u| {
                    let before = self.adj[v] >> u & 1;
                    let after = self.adj[w] >> self.images[u] & 1;
                    before == after
                });
                if !consistent {
                    continue;
                }
                self.images[v] = w;
                self.used |= 1 << w;
                self.assign(v + 1);
                self.used &= !(1 << w);
            }
        }
    }

    let mut search = Search {
        g,
        adj,
        images: vec![0; n],
        used: 0,
        found: Vec::new(),
        overflow: false,
    };
    search.assign(0);
    if search.overflow {
        return Err(Error::TooLarge(format!(
            "automorphism group exceeds {MAX_GROUP_ORDER} elements"
        )));
    }
    let elements = search
        .found
        .into_iter()
        .map(|images| Permutation::new(g, images))
        .collect::<Result<Vec<_>>>()?;
    Ok(PermutationGroup {
        degree: n,
        elements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin_graph;
    use std::collections::HashSet;

    fn order(g: &Graph) -> usize {
        automorphism_group(g).unwrap().order()
    }

    #[test]
    fn complete_graph_orders() {
        for (n, fact) in [(1, 1), (2, 2), (3, 6), (4, 24), (5, 120), (6, 720)] {
            assert_eq!(order(&Graph::complete(n).unwrap()), fact);
        }
    }

    #[test]
    fn named_graph_orders() {
        assert_eq!(order(&builtin_graph("petersen", None).unwrap()), 120);
        assert_eq!(order(&builtin_graph("heawood", None).unwrap()), 336);
        assert_eq!(order(&builtin_graph("path", Some(3)).unwrap()), 2);
        assert_eq!(order(&builtin_graph("cycle", Some(7)).unwrap()), 14);
    }

    #[test]
    fn elements_preserve_adjacency_exhaustively() {
        let g = builtin_graph("petersen", None).unwrap();
        let group = automorphism_group(&g).unwrap();
        for p in group.iter() {
            for u in 0..10 {
                for v in 0..10 {
                    if u != v {
                        assert_eq!(
                            g.has_edge(u, v),
                            g.has_edge(p.apply_vertex(u), p.apply_vertex(v))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn closed_under_composition_and_inverse() {
        let g = builtin_graph("petersen", None).unwrap();
        let group = automorphism_group(&g).unwrap();
        assert!(group.elements()[0].is_identity());
        let all: HashSet<&[usize]> = group.iter().map(|p| p.images()).collect();
        for a in group.iter() {
            assert!(all.contains(a.inverse().images()));
            assert!(a.compose(&a.inverse()).is_identity());
            for b in group.iter().step_by(7) {
                let ab = a.compose(b);
                assert!(group.contains(ab.images()));
                assert_eq!(Permutation::new(&g, ab.images().to_vec()).unwrap(), ab);
            }
        }
    }

    #[test]
    fn rejects_non_automorphisms() {
        let p3 = builtin_graph("path", Some(3)).unwrap();
        assert_eq!(
            Permutation::new(&p3, vec![1, 0, 2]),
            Err(Error::NotAutomorphism)
        );
        assert_eq!(
            Permutation::new(&p3, vec![0, 0, 2]),
            Err(Error::NotAutomorphism)
        );
        assert!(Permutation::new(&p3, vec![2, 1, 0]).is_ok());
    }

    #[test]
    fn guards() {
        let big = Graph::new(15, &[]).unwrap();
        assert!(matches!(automorphism_group(&big), Err(Error::TooLarge(_))));
        let k10 = Graph::complete(10).unwrap();
        assert!(matches!(automorphism_group(&k10), Err(Error::TooLarge(_))));
    }
}
