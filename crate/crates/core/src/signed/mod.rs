//! Signatures, switching, and the switching-equivalence tests built on the
//! GF(2) cut space.

mod cut_space;
mod spectrum;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::bits::{EdgeSet, VertexSet};
use crate::error::{Error, Result};
use crate::graph::{Cycle, Graph};

pub use cut_space::{cut, Gf2Basis};
pub use spectrum::{default_max_cycle_len, CycleSpectrum, CycleTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

/// The set of negative edges of a signed graph.
#[derive(Clone)]
pub struct Signature {
    graph: Arc<Graph>,
    bits: EdgeSet,
}

impl Signature {
    /// The all-positive signature.
    pub fn empty(graph: Arc<Graph>) -> Signature {
        Signature {
            graph,
            bits: EdgeSet::EMPTY,
        }
    }

    pub fn from_bits(graph: Arc<Graph>, bits: EdgeSet) -> Result<Signature> {
        if bits.0 & !graph.all_edges().0 != 0 {
            return Err(Error::InvalidParam(format!(
                "bit vector has bits beyond edge {}",
                graph.edge_count()
            )));
        }
        Ok(Signature { graph, bits })
    }

    /// Negative edges given as vertex pairs in either orientation.
    pub fn from_pairs(graph: Arc<Graph>, pairs: &[(usize, usize)]) -> Result<Signature> {
        let mut bits = EdgeSet::EMPTY;
        for &(u, v) in pairs {
            let (a, b) = (u.min(v), u.max(v));
            let e = graph.edge_index(a, b).ok_or(Error::NotAnEdge(a, b))?;
            if bits.contains(e) {
                return Err(Error::DuplicateEdge(a, b));
            }
            bits.insert(e);
        }
        Ok(Signature { graph, bits })
    }

    /// Parses `0-1,2-3`; the empty string is the all-positive signature.
    pub fn parse(graph: Arc<Graph>, text: &str) -> Result<Signature> {
        let text = text.trim();
        let mut pairs = Vec::new();
        if !text.is_empty() {
            for item in text.split(',') {
                let bad = || Error::Parse(format!("bad edge `{}` in signature", item.trim()));
                let (u, v) = item.trim().split_once('-').ok_or_else(bad)?;
                let u = u.trim().parse().map_err(|_| bad())?;
                let v = v.trim().parse().map_err(|_| bad())?;
                pairs.push((u, v));
            }
        }
        Signature::from_pairs(graph, &pairs)
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn bits(&self) -> EdgeSet {
        self.bits
    }

    /// Number of negative edges.
    pub fn size(&self) -> usize {
        self.bits.len()
    }

    pub fn negative_edges(&self) -> Vec<(usize, usize)> {
        self.bits.iter().map(|e| self.graph.edge(e)).collect()
    }

    pub fn is_negative(&self, edge: usize) -> bool {
        self.bits.contains(edge)
    }

    fn with_bits(&self, bits: EdgeSet) -> Signature {
        Signature {
            graph: Arc::clone(&self.graph),
            bits,
        }
    }

    fn check_same_graph(&self, other: &Signature) -> Result<()> {
        if Arc::ptr_eq(&self.graph, &other.graph) || *self.graph == *other.graph {
            Ok(())
        } else {
            Err(Error::GraphMismatch)
        }
    }

    /// Switching at `s`: flips every edge with exactly one endpoint in `s`.
    pub fn switch(&self, s: &[usize]) -> Result<Signature> {
        if let Some(&v) = s.iter().find(|&&v| v >= self.graph.vertex_count()) {
            return Err(Error::InvalidVertex(v));
        }
        Ok(self.switch_set(VertexSet::from_vertices(s.iter().copied())))
    }

    /// [`Signature::switch`] for a vertex bit set; bits beyond `n` are ignored.
    pub fn switch_set(&self, s: VertexSet) -> Signature {
        self.with_bits(self.bits.xor(cut(&self.graph, s)))
    }

    /// The unique member of this switching class vanishing on every pivot of `basis`.
    pub fn coset_reduce(&self, basis: &Gf2Basis) -> Result<Signature> {
        if !Arc::ptr_eq(&self.graph, basis.graph()) && *self.graph != **basis.graph() {
            return Err(Error::GraphMismatch);
        }
        Ok(self.with_bits(basis.reduce(self.bits)))
    }

    /// A vertex set `S` with `self.switch(S) == other`, if one exists.
    pub fn switching_witness(&self, other: &Signature) -> Result<Option<VertexSet>> {
        self.check_same_graph(other)?;
        let basis = Gf2Basis::new(Arc::clone(&self.graph));
        Ok(basis.cut_preimage(self.bits.xor(other.bits)))
    }

    pub fn is_switching_equivalent(&self, other: &Signature) -> Result<bool> {
        Ok(self.switching_witness(other)?.is_some())
    }

    /// Sign of a cycle: negative iff it carries an odd number of negative edges.
    pub fn cycle_sign(&self, cycle: &Cycle) -> Result<Sign> {
        let vs = cycle.vertices();
        let k = vs.len();
        for (i, &e) in cycle.edge_indices().iter().enumerate() {
            if self.graph.edge_index(vs[i], vs[(i + 1) % k]) != Some(e) {
                return Err(Error::GraphMismatch);
            }
        }
        Ok(if self.bits.odd_overlap(cycle.edge_set()) {
            Sign::Negative
        } else {
            Sign::Positive
        })
    }

    /// Balanced iff the signature is a cut, i.e. switches to all-positive.
    pub fn is_balanced(&self) -> bool {
        Gf2Basis::new(Arc::clone(&self.graph)).contains(self.bits)
    }

    /// Negative cycles counted by length, for lengths `3..=max_len`.
    pub fn negative_cycle_spectrum(&self, max_len: usize) -> Result<CycleSpectrum> {
        Ok(CycleTable::new(&self.graph, max_len)?.spectrum(self.bits))
    }

    /// All negative cycles of every length.
    pub fn unbalanced_cycle_set(&self) -> BTreeSet<Cycle> {
        CycleTable::all(&self.graph)
            .cycles()
            .iter()
            .filter(|c| self.bits.odd_overlap(c.edge_set()))
            .cloned()
            .collect()
    }
}

impl PartialEq for Signature {
    fn eq(&self, other: &Signature) -> bool {
        self.bits == other.bits && self.check_same_graph(other).is_ok()
    }
}

impl Eq for Signature {}

/// Formats as the text form accepted by [`Signature::parse`].
impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (u, v)) in self.negative_edges().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{u}-{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Signature({{{self}}})")
    }
}
