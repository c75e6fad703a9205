use std::cmp::Ordering;
use std::sync::Arc;

use crate::bits::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::signed::Signature;

use super::enumerate_isomorphism_classes;

/// Largest `n - c` for which every switching of a signature is scanned.
pub const MAX_SWITCH_BITS: usize = 24;

/// Frustration index: the fewest negative edges over all switchings of
/// `sig`, with the minimizer whose sorted edge list is lexicographically least.
///
/// Switching at `S` and at its complement within a component coincide, so
/// the smallest vertex of every component stays out of the scanned sets.
pub fn frustration_index(sig: &Signature) -> Result<(usize, Signature)> {
    let g = sig.graph();
    let roots = g.component_roots();
    let free: Vec<usize> = (0..g.vertex_count())
        .filter(|v| roots.binary_search(v).is_err())
        .collect();
    if free.len() > MAX_SWITCH_BITS {
        return Err(Error::TooLarge(format!(
            "2^{} switchings (limit 2^{MAX_SWITCH_BITS})",
            free.len()
        )));
    }
    let stars: Vec<EdgeSet> = free.iter().map(|&v| g.star(v)).collect();

    // Gray-code walk: each step toggles one vertex in the switching set.
    let mut current = sig.bits();
    let mut best = current;
    for step in 1u64..1 << free.len() {
        current = current.xor(stars[step.trailing_zeros() as usize]);
        if better(current, best) {
            best = current;
        }
    }
    Ok((best.len(), Signature::from_bits(Arc::clone(g), best)?))
}

fn better(candidate: EdgeSet, best: EdgeSet) -> bool {
    match candidate.len().cmp(&best.len()) {
        Ordering::Less => true,
        Ordering::Equal => candidate.cmp_members(best) == Ordering::Less,
        Ordering::Greater => false,
    }
}

/// Largest vertex degree in the subgraph of negative edges.
pub fn max_negative_degree(sig: &Signature) -> usize {
    let mut degree = vec![0usize; sig.graph().vertex_count()];
    for (u, v) in sig.negative_edges() {
        degree[u] += 1;
        degree[v] += 1;
    }
    degree.into_iter().max().unwrap_or(0)
}

/// For a complete graph on `n` vertices, checks that every class's minimal
/// representative has negative degree at most `⌊(n-1)/2⌋`.
pub fn check_min_degree_bound(g: Arc<Graph>) -> Result<bool> {
    if !g.is_complete() {
        return Err(Error::InvalidParam(
            "degree bound check needs a complete graph".into(),
        ));
    }
    let bound = g.vertex_count().saturating_sub(1) / 2;
    Ok(enumerate_isomorphism_classes(g, 1)?
        .iter()
        .all(|class| max_negative_degree(&class.min_rep) <= bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::VertexSet;
    use crate::signed::cut;

    fn k(n: usize) -> Arc<Graph> {
        Arc::new(Graph::complete(n).unwrap())
    }

    // Oracle: every vertex subset, no root pinning, no Gray code.
    fn brute_force(sig: &Signature) -> (usize, EdgeSet) {
        let g = sig.graph();
        (0u64..1 << g.vertex_count())
            .map(|s| sig.bits().xor(cut(g, VertexSet(s))))
            .min_by(|a, b| a.len().cmp(&b.len()).then(a.cmp_members(*b)))
            .map(|b| (b.len(), b))
            .unwrap()
    }

    #[test]
    fn triangle() {
        let k3 = k(3);
        let all = Signature::parse(k3.clone(), "0-1,1-2,0-2").unwrap();
        let (size, rep) = frustration_index(&all).unwrap();
        assert_eq!(size, 1);
        assert_eq!(rep.to_string(), "0-1");
    }

    #[test]
    fn balanced_is_zero() {
        let k6 = k(6);
        let s = Signature::empty(k6.clone()).switch(&[1, 4]).unwrap();
        let (size, rep) = frustration_index(&s).unwrap();
        assert_eq!(size, 0);
        assert_eq!(rep, Signature::empty(k6));
    }

    #[test]
    fn matches_oracle_on_k5() {
        let k5 = k(5);
        for x in 0u128..1 << 10 {
            let s = Signature::from_bits(k5.clone(), EdgeSet(x)).unwrap();
            let (size, rep) = frustration_index(&s).unwrap();
            assert_eq!((size, rep.bits()), brute_force(&s));
            assert_eq!(size == 0, s.is_balanced());
        }
    }

    #[test]
    fn disconnected_graph() {
        let g = Arc::new(Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap());
        let s = Signature::parse(g, "0-1,1-2,0-2,3-4").unwrap();
        let (size, rep) = frustration_index(&s).unwrap();
        assert_eq!((size, rep.bits()), brute_force(&s));
        assert_eq!(size, 2);
    }

    #[test]
    fn degree_bounds() {
        for n in 3..=6 {
            assert!(check_min_degree_bound(k(n)).unwrap(), "K{n}");
        }
        let p = Arc::new(Graph::new(3, &[(0, 1), (1, 2)]).unwrap());
        assert!(matches!(
            check_min_degree_bound(p),
            Err(Error::InvalidParam(_))
        ));
    }

    #[test]
    fn negative_degree() {
        let k6 = k(6);
        assert_eq!(max_negative_degree(&Signature::empty(k6.clone())), 0);
        let s = Signature::parse(k6, "0-1,0-2,0-3,4-5").unwrap();
        assert_eq!(max_negative_degree(&s), 3);
    }
}
