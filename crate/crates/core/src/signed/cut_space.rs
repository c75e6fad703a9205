use std::sync::Arc;

use crate::bits::{EdgeSet, VertexSet};
use crate::graph::Graph;

/// Row-echelon basis over GF(2) of the cut space of a graph, the span of the
/// vertex stars `δ({v})`.
///
/// Each row's pivot is its lowest set edge index and pivots strictly
/// increase. Every row also records which vertex stars it sums, so a
/// reduction can report the switching set that realizes it.
#[derive(Clone, Debug)]
pub struct Gf2Basis {
    graph: Arc<Graph>,
    rows: Vec<EdgeSet>,
    pivots: Vec<usize>,
    combos: Vec<VertexSet>,
}

impl Gf2Basis {
    pub fn new(graph: Arc<Graph>) -> Gf2Basis {
        let mut rows: Vec<EdgeSet> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        let mut combos: Vec<VertexSet> = Vec::new();
        for v in 0..graph.vertex_count() {
            let mut row = graph.star(v);
            let mut combo = VertexSet::from_vertices([v]);
            // Reduce against existing rows, in pivot order.
            for (i, &p) in pivots.iter().enumerate() {
                if row.contains(p) {
                    row = row.xor(rows[i]);
                    combo = VertexSet(combo.0 ^ combos[i].0);
                }
            }
            let Some(pivot) = row.lowest() else { continue };
            let at = pivots.partition_point(|&p| p < pivot);
            // Keep earlier rows free of the new pivot so that reducing in pivot
            // order never reintroduces a cleared coordinate.
            for i in 0..at {
                if rows[i].contains(pivot) {
                    rows[i] = rows[i].xor(row);
                    combos[i] = VertexSet(combos[i].0 ^ combo.0);
                }
            }
            rows.insert(at, row);
            pivots.insert(at, pivot);
            combos.insert(at, combo);
        }
        Gf2Basis {
            graph,
            rows,
            pivots,
            combos,
        }
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[EdgeSet] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Vertex set `S` with `δ(S)` equal to row `i`.
    pub fn row_switch_set(&self, i: usize) -> VertexSet {
        self.combos[i]
    }

    /// Pivot positions as a mask.
    pub fn pivot_mask(&self) -> EdgeSet {
        self.pivots.iter().copied().collect()
    }

    /// Reduces `x` to the unique coset member vanishing on every pivot, and
    /// returns it with the vertex set whose cut was added.
    pub fn reduce_with_witness(&self, x: EdgeSet) -> (EdgeSet, VertexSet) {
        let mut x = x;
        let mut switch = VertexSet::EMPTY;
        for (i, &p) in self.pivots.iter().enumerate() {
            if x.contains(p) {
                x = x.xor(self.rows[i]);
                switch = VertexSet(switch.0 ^ self.combos[i].0);
            }
        }
        (x, switch)
    }

    pub fn reduce(&self, x: EdgeSet) -> EdgeSet {
        self.reduce_with_witness(x).0
    }

    /// Whether `x` is a cut, i.e. lies in the span.
    pub fn contains(&self, x: EdgeSet) -> bool {
        self.reduce(x).is_empty()
    }

    /// A vertex set `S` with `δ(S) = x`, if `x` is a cut.
    pub fn cut_preimage(&self, x: EdgeSet) -> Option<VertexSet> {
        let (rest, switch) = self.reduce_with_witness(x);
        rest.is_empty().then_some(switch)
    }

    /// Number of cosets of the cut space, `2^(m - rank)`, as a base-2 exponent.
    pub fn coset_exponent(&self) -> usize {
        self.graph.edge_count() - self.rank()
    }

    /// Edge positions that are free in a coset representative.
    pub fn free_positions(&self) -> Vec<usize> {
        let pivots = self.pivot_mask();
        (0..self.graph.edge_count())
            .filter(|&e| !pivots.contains(e))
            .collect()
    }
}

/// `δ(S)`: edges with exactly one endpoint in `s`.
pub fn cut(g: &Graph, s: VertexSet) -> EdgeSet {
    g.edges()
        .iter()
        .enumerate()
        .filter(|&(_, &(u, v))| s.contains(u) != s.contains(v))
        .map(|(i, _)| i)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin_graph;

    fn basis(g: Graph) -> Gf2Basis {
        Gf2Basis::new(Arc::new(g))
    }

    #[test]
    fn ranks() {
        let k6 = basis(Graph::complete(6).unwrap());
        assert_eq!(k6.rank(), 5);
        assert_eq!(k6.coset_exponent(), 10);
        let k3 = basis(Graph::complete(3).unwrap());
        assert_eq!((k3.rank(), k3.coset_exponent()), (2, 1));
        let forest = basis(Graph::new(4, &[(0, 1), (2, 3)]).unwrap());
        assert_eq!((forest.rank(), forest.coset_exponent()), (2, 0));
        let p = basis(builtin_graph("petersen", None).unwrap());
        assert_eq!(p.coset_exponent(), 6);
    }

    #[test]
    fn echelon_shape() {
        for g in [
            Graph::complete(6).unwrap(),
            builtin_graph("heawood", None).unwrap(),
        ] {
            let b = basis(g);
            assert!(b.pivots().windows(2).all(|w| w[0] < w[1]));
            for (i, (&row, &p)) in b.rows().iter().zip(b.pivots()).enumerate() {
                assert_eq!(row.lowest(), Some(p));
                // no other row touches this pivot
                for (j, other) in b.rows().iter().enumerate() {
                    assert_eq!(other.contains(p), i == j);
                }
                assert_eq!(cut(b.graph(), b.row_switch_set(i)), row);
            }
            assert_eq!(
                b.rank(),
                b.graph().vertex_count() - b.graph().component_count()
            );
        }
    }

    #[test]
    fn cuts_reduce_to_zero_with_a_preimage() {
        let g = Graph::complete(6).unwrap();
        let b = basis(g.clone());
        for s in 0u64..64 {
            let x = cut(&g, VertexSet(s));
            let pre = b.cut_preimage(x).expect("a cut");
            assert_eq!(cut(&g, pre), x);
        }
    }

    #[test]
    fn reduction_is_idempotent_and_zero_on_pivots() {
        let b = basis(Graph::complete(5).unwrap());
        for x in 0u128..1 << 10 {
            let r = b.reduce(EdgeSet(x));
            assert_eq!(b.reduce(r), r);
            assert!(r.and(b.pivot_mask()).is_empty());
        }
    }
}
