//! Switching isomorphism: automorphisms acting on signatures, canonical keys,
//! and exhaustive enumeration of classes.
//!
//! Two signatures on the same graph are switching isomorphic when an
//! automorphism carries one into the switching class of the other. The
//! switching class is decided by GF(2) reduction against the cut space, and
//! the automorphism by an explicit scan of the group, so the canonical key of
//! a signature is the least reduced image over the whole group.

mod frustration;
mod types;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;
use std::thread;

use serde::Serialize;

use crate::bits::{EdgeSet, VertexSet};
use crate::error::{Error, Result};
use crate::graph::{automorphism_group, Graph, Permutation, PermutationGroup};
use crate::signed::{CycleSpectrum, CycleTable, Gf2Basis, Signature};

pub use frustration::{
    check_min_degree_bound, frustration_index, max_negative_degree, MAX_SWITCH_BITS,
};
pub use types::{automorphic_type_count, automorphic_types};

/// Largest number of coset representatives the enumerators will visit, as a power of two.
pub const MAX_COSET_BITS: usize = 24;
/// Largest automorphism group the class enumerator will scan.
pub const MAX_ENUMERATION_GROUP: usize = 100_000;

/// The least coset-reduced image of a signature over all automorphisms.
///
/// Keys are ordered lexicographically as bit vectors indexed by edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalKey(pub EdgeSet);

impl CanonicalKey {
    pub fn bits(self) -> EdgeSet {
        self.0
    }
}

impl Ord for CanonicalKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp_bitwise(other.0)
    }
}

impl PartialOrd for CanonicalKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Certificate that `switch(apply_automorphism(from, perm), switch_set) == to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub perm: Permutation,
    pub switch_set: VertexSet,
}

impl IsoWitness {
    pub fn verify(&self, from: &Signature, to: &Signature) -> bool {
        apply_automorphism(from, &self.perm)
            .map(|s| s.switch_set(self.switch_set) == *to)
            .unwrap_or(false)
    }
}

/// One switching-isomorphism class.
#[derive(Clone, Debug)]
pub struct ClassReport {
    pub canonical: CanonicalKey,
    /// Number of raw signatures (out of `2^m`) in the class.
    pub class_size: u128,
    pub spectrum: CycleSpectrum,
    pub frustration: usize,
    pub min_rep: Signature,
}

#[derive(Serialize)]
struct ClassReportJson<'a> {
    canonical: String,
    class_size: u128,
    spectrum: &'a CycleSpectrum,
    frustration: usize,
    min_rep: String,
}

impl ClassReport {
    pub fn canonical_signature(&self) -> Signature {
        Signature::from_bits(Arc::clone(self.min_rep.graph()), self.canonical.0)
            .expect("key fits graph")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ClassReportJson {
            canonical: self.canonical_signature().to_string(),
            class_size: self.class_size,
            spectrum: &self.spectrum,
            frustration: self.frustration,
            min_rep: self.min_rep.to_string(),
        })
        .expect("plain data")
    }
}

/// `apply_automorphism(sig, ψ)`: edge `uv` is negative in the result iff
/// `ψ⁻¹(u)ψ⁻¹(v)` is negative in `sig`.
pub fn apply_automorphism(sig: &Signature, perm: &Permutation) -> Result<Signature> {
    let g = sig.graph();
    if perm.edge_images().len() != g.edge_count()
        || Permutation::new(g, perm.images().to_vec())? != *perm
    {
        return Err(Error::NotAutomorphism);
    }
    Signature::from_bits(Arc::clone(g), perm.apply_edges(sig.bits()))
}

/// Precomputed cut basis, automorphism group and cycle table for one graph.
#[derive(Clone, Debug)]
pub struct Classifier {
    graph: Arc<Graph>,
    basis: Gf2Basis,
    group: PermutationGroup,
    cycles: CycleTable,
}

impl Classifier {
    pub fn new(graph: Arc<Graph>) -> Result<Classifier> {
        let group = automorphism_group(&graph)?;
        Ok(Classifier {
            basis: Gf2Basis::new(Arc::clone(&graph)),
            cycles: CycleTable::with_default_len(&graph),
            graph,
            group,
        })
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn basis(&self) -> &Gf2Basis {
        &self.basis
    }

    pub fn group(&self) -> &PermutationGroup {
        &self.group
    }

    pub fn cycle_table(&self) -> &CycleTable {
        &self.cycles
    }

    fn check(&self, sig: &Signature) -> Result<()> {
        if Arc::ptr_eq(sig.graph(), &self.graph) || **sig.graph() == *self.graph {
            Ok(())
        } else {
            Err(Error::GraphMismatch)
        }
    }

    fn key_of(&self, bits: EdgeSet) -> CanonicalKey {
        self.group
            .iter()
            .map(|p| CanonicalKey(self.basis.reduce(p.apply_edges(bits))))
            .min()
            .expect("group contains the identity")
    }

    pub fn canonical_form(&self, sig: &Signature) -> Result<CanonicalKey> {
        self.check(sig)?;
        Ok(self.key_of(sig.bits()))
    }

    /// Scans the group for an automorphism carrying `s1` into the switching
    /// class of `s2`; the first one found (in group order) is returned.
    pub fn is_switching_isomorphic(
        &self,
        s1: &Signature,
        s2: &Signature,
    ) -> Result<Option<IsoWitness>> {
        self.check(s1)?;
        self.check(s2)?;
        let target = self.basis.reduce(s2.bits());
        for perm in self.group.iter() {
            let image = perm.apply_edges(s1.bits());
            if self.basis.reduce(image) == target {
                let switch_set = self
                    .basis
                    .cut_preimage(image.xor(s2.bits()))
                    .expect("same coset");
                return Ok(Some(IsoWitness {
                    perm: perm.clone(),
                    switch_set,
                }));
            }
        }
        Ok(None)
    }

    /// One reduced representative per switching class, in bit-vector order.
    pub fn switching_classes(&self) -> Result<Vec<Signature>> {
        Ok(self
            .coset_representatives()?
            .into_iter()
            .map(|bits| Signature::from_bits(Arc::clone(&self.graph), bits).expect("in range"))
            .collect())
    }

    fn coset_representatives(&self) -> Result<Vec<EdgeSet>> {
        let free = self.basis.free_positions();
        if free.len() > MAX_COSET_BITS {
            return Err(Error::TooLarge(format!(
                "2^{} switching classes (limit 2^{MAX_COSET_BITS})",
                free.len()
            )));
        }
        let mut reps: Vec<EdgeSet> = (0u64..1 << free.len())
            .map(|t| {
                free.iter()
                    .enumerate()
                    .filter(|&(j, _)| t >> j & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect()
            })
            .collect();
        reps.sort_unstable_by(|a, b| a.cmp_bitwise(*b));
        Ok(reps)
    }

    /// All switching-isomorphism classes, sorted by canonical key.
    ///
    /// Canonical keys of the coset representatives are computed on up to
    /// `workers` threads; the result does not depend on the worker count.
    pub fn isomorphism_classes(&self, workers: usize) -> Result<Vec<ClassReport>> {
        if self.group.order() > MAX_ENUMERATION_GROUP {
            return Err(Error::TooLarge(format!(
                "automorphism group of order {} (limit {MAX_ENUMERATION_GROUP})",
                self.group.order()
            )));
        }
        let reps = self.coset_representatives()?;
        let keys = self.keys_parallel(&reps, workers.max(1));

        let mut orbit_sizes: BTreeMap<CanonicalKey, u128> = BTreeMap::new();
        for key in keys {
            *orbit_sizes.entry(key).or_default() += 1;
        }
        let switchings: u128 = 1 << self.basis.rank();
        orbit_sizes
            .into_iter()
            .map(|(canonical, cosets)| {
                let sig = Signature::from_bits(Arc::clone(&self.graph), canonical.0)?;
                let (frustration, min_rep) = frustration_index(&sig)?;
                Ok(ClassReport {
                    canonical,
                    class_size: cosets * switchings,
                    spectrum: self.cycles.spectrum(canonical.0),
                    frustration,
                    min_rep,
                })
            })
            .collect()
    }

    fn keys_parallel(&self, reps: &[EdgeSet], workers: usize) -> Vec<CanonicalKey> {
        if workers == 1 || reps.len() < 2 {
            return reps.iter().map(|&r| self.key_of(r)).collect();
        }
        let chunk = reps.len().div_ceil(workers);
        thread::scope(|scope| {
            let handles: Vec<_> = reps
                .chunks(chunk)
                .map(|part| {
                    scope.spawn(move || part.iter().map(|&r| self.key_of(r)).collect::<Vec<_>>())
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("worker panicked"))
                .collect()
        })
    }
}

/// Coset representatives of all switching classes of `g`.
pub fn enumerate_switching_classes(g: Arc<Graph>) -> Result<Vec<Signature>> {
    check_coset_guard(&g)?;
    Classifier::new(g)?.switching_classes()
}

/// All switching-isomorphism classes of signatures on `g`.
pub fn enumerate_isomorphism_classes(g: Arc<Graph>, workers: usize) -> Result<Vec<ClassReport>> {
    check_coset_guard(&g)?;
    Classifier::new(g)?.isomorphism_classes(workers)
}

// Fails fast, before the automorphism search.
fn check_coset_guard(g: &Graph) -> Result<()> {
    let exponent = g.cyclomatic_number();
    if exponent > MAX_COSET_BITS {
        return Err(Error::TooLarge(format!(
            "2^{exponent} switching classes (limit 2^{MAX_COSET_BITS})"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin_graph;

    fn k(n: usize) -> Arc<Graph> {
        Arc::new(Graph::complete(n).unwrap())
    }

    fn sig(g: &Arc<Graph>, text: &str) -> Signature {
        Signature::parse(Arc::clone(g), text).unwrap()
    }

    #[test]
    fn automorphism_action() {
        let k6 = k(6);
        let s1 = sig(&k6, "0-1");
        let id = Permutation::identity(&k6);
        assert_eq!(apply_automorphism(&s1, &id).unwrap(), s1);
        let swap = Permutation::new(&k6, vec![1, 0, 2, 3, 4, 5]).unwrap();
        assert_eq!(apply_automorphism(&s1, &swap).unwrap(), s1);
        let psi = Permutation::new(&k6, vec![2, 4, 0, 3, 1, 5]).unwrap();
        assert_eq!(apply_automorphism(&s1, &psi).unwrap().to_string(), "2-4");
    }

    #[test]
    fn action_laws() {
        let g = Arc::new(builtin_graph("petersen", None).unwrap());
        let group = automorphism_group(&g).unwrap();
        let s = sig(&g, "0-1,2-7,5-7");
        for a in group.iter().step_by(11) {
            for b in group.iter().step_by(13) {
                let lhs = apply_automorphism(&apply_automorphism(&s, b).unwrap(), a).unwrap();
                let rhs = apply_automorphism(&s, &a.compose(b)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn foreign_permutation_rejected() {
        let p = Arc::new(builtin_graph("path", Some(4)).unwrap());
        let k4 = k(4);
        let perm = Permutation::new(&k4, vec![1, 0, 2, 3]).unwrap();
        assert_eq!(
            apply_automorphism(&sig(&p, "0-1"), &perm),
            Err(Error::NotAutomorphism)
        );
    }

    #[test]
    fn empty_signature_has_zero_key() {
        let c = Classifier::new(k(6)).unwrap();
        let key = c.canonical_form(&Signature::empty(k(6))).unwrap();
        assert!(key.bits().is_empty());
    }

    #[test]
    fn key_reduces_to_itself() {
        let k5 = k(5);
        let c = Classifier::new(k5.clone()).unwrap();
        for x in (0u128..1 << 10).step_by(7) {
            let key = c
                .canonical_form(&Signature::from_bits(k5.clone(), EdgeSet(x)).unwrap())
                .unwrap();
            assert_eq!(c.basis().reduce(key.0), key.0);
            assert_eq!(c.key_of(key.0), key);
        }
    }

    #[test]
    fn published_witnesses_verify() {
        let k6 = k(6);
        let c = Classifier::new(k6.clone()).unwrap();
        let s6 = sig(&k6, "0-1,2-5,3-4");
        let s17 = sig(&k6, "0-1,1-2,2-3,3-4,4-5,0-5");
        let w = c
            .is_switching_isomorphic(&s6, &s17)
            .unwrap()
            .expect("isomorphic");
        assert!(w.verify(&s6, &s17));

        let s1 = sig(&k6, "0-1");
        let s2 = sig(&k6, "0-1,1-2");
        assert_eq!(c.is_switching_isomorphic(&s1, &s2).unwrap(), None);
        assert_ne!(
            c.canonical_form(&s1).unwrap(),
            c.canonical_form(&s2).unwrap()
        );

        let self_w = c.is_switching_isomorphic(&s2, &s2).unwrap().unwrap();
        assert!(self_w.perm.is_identity());
        assert!(self_w.switch_set.is_empty());
    }

    #[test]
    fn mismatched_graphs() {
        let c = Classifier::new(k(5)).unwrap();
        let s = Signature::empty(k(6));
        assert_eq!(c.canonical_form(&s), Err(Error::GraphMismatch));
    }

    #[test]
    fn switching_class_counts() {
        assert_eq!(enumerate_switching_classes(k(6)).unwrap().len(), 1024);
        assert_eq!(enumerate_switching_classes(k(3)).unwrap().len(), 2);
        let p = Arc::new(builtin_graph("petersen", None).unwrap());
        assert_eq!(enumerate_switching_classes(p).unwrap().len(), 64);
        let reps = enumerate_switching_classes(k(4)).unwrap();
        assert!(reps
            .windows(2)
            .all(|w| w[0].bits().cmp_bitwise(w[1].bits()) == Ordering::Less));
    }

    #[test]
    fn class_counts_small() {
        for (n, want) in [(3, 2), (4, 3), (5, 7)] {
            assert_eq!(enumerate_isomorphism_classes(k(n), 1).unwrap().len(), want);
        }
    }

    #[test]
    fn forest_has_one_class() {
        let g = Arc::new(Graph::new(4, &[(0, 1), (2, 3)]).unwrap());
        let classes = enumerate_isomorphism_classes(g, 2).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].class_size, 4);
        assert_eq!(classes[0].frustration, 0);
    }

    #[test]
    fn worker_count_does_not_change_result() {
        let one = enumerate_isomorphism_classes(k(6), 1).unwrap();
        let four = enumerate_isomorphism_classes(k(6), 4).unwrap();
        let json = |v: &[ClassReport]| v.iter().map(ClassReport::to_json).collect::<Vec<_>>();
        assert_eq!(json(&one), json(&four));
    }

    #[test]
    fn guards() {
        let heawood = Arc::new(builtin_graph("heawood", None).unwrap());
        assert_eq!(enumerate_switching_classes(heawood).unwrap().len(), 256);
        // K9: 2^28 switching classes
        assert!(matches!(
            enumerate_isomorphism_classes(k(9), 1),
            Err(Error::TooLarge(_))
        ));
    }
}
