use std::collections::BTreeSet;

use crate::bits::EdgeSet;
use crate::error::Result;
use crate::graph::{automorphism_group, Graph, PermutationGroup};

use super::CanonicalKey;

/// Orbit representatives of the automorphism group acting on edge subsets
/// of the given size whose subgraph has maximum degree at most `max_deg`.
///
/// Switching is not applied; each representative is the least image of its
/// orbit in bit-vector order.
pub fn automorphic_types(g: &Graph, size: usize, max_deg: usize) -> Result<Vec<EdgeSet>> {
    let group = automorphism_group(g)?;
    let mut reps = BTreeSet::new();
    for_each_subset(g.edge_count(), size, &mut |subset| {
        if max_degree(g, subset) <= max_deg {
            reps.insert(least_image(&group, subset));
        }
    });
    Ok(reps.into_iter().map(|k| k.0).collect())
}

/// Number of automorphic types; see [`automorphic_types`].
pub fn automorphic_type_count(g: &Graph, size: usize, max_deg: usize) -> Result<usize> {
    Ok(automorphic_types(g, size, max_deg)?.len())
}

fn least_image(group: &PermutationGroup, set: EdgeSet) -> CanonicalKey {
    group
        .iter()
        .map(|p| CanonicalKey(p.apply_edges(set)))
        .min()
        .expect("identity")
}

fn max_degree(g: &Graph, set: EdgeSet) -> usize {
    let mut degree = vec![0usize; g.vertex_count()];
    for e in set.iter() {
        let (u, v) = g.edge(e);
        degree[u] += 1;
        degree[v] += 1;
    }
    degree.into_iter().max().unwrap_or(0)
}

fn for_each_subset(m: usize, size: usize, visit: &mut impl FnMut(EdgeSet)) {
    fn go(start: usize, m: usize, left: usize, acc: EdgeSet, visit: &mut impl FnMut(EdgeSet)) {
        if left == 0 {
            visit(acc);
            return;
        }
        for e in start..=m.saturating_sub(left) {
            let mut next = acc;
            next.insert(e);
            go(e + 1, m, left - 1, next, visit);
        }
    }
    if size <= m {
        go(0, m, size, EdgeSet::EMPTY, visit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin_graph;

    #[test]
    fn k6_types_with_degree_two() {
        let k6 = Graph::complete(6).unwrap();
        let counts: Vec<usize> = (0..=6)
            .map(|s| automorphic_type_count(&k6, s, 2).unwrap())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 5, 4, 2]);
    }

    #[test]
    fn unrestricted_degree_counts_graphs_on_six_vertices() {
        // Orbits of S6 on 2-edge and 3-edge subsets of K6 are the isomorphism
        // types of 6-vertex graphs with that many edges: 2 and 5.
        let k6 = Graph::complete(6).unwrap();
        assert_eq!(automorphic_type_count(&k6, 2, 5).unwrap(), 2);
        assert_eq!(automorphic_type_count(&k6, 3, 5).unwrap(), 5);
        // C(15,15): only the whole graph.
        assert_eq!(automorphic_type_count(&k6, 15, 5).unwrap(), 1);
        assert_eq!(automorphic_type_count(&k6, 16, 5).unwrap(), 0);
    }

    #[test]
    fn petersen_is_edge_transitive() {
        let p = builtin_graph("petersen", None).unwrap();
        assert_eq!(automorphic_type_count(&p, 1, 3).unwrap(), 1);
    }

    #[test]
    fn subsets_enumerated_once() {
        let mut seen = Vec::new();
        for_each_subset(6, 3, &mut |s| seen.push(s.0));
        assert_eq!(seen.len(), 20);
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), 20);
    }
}
