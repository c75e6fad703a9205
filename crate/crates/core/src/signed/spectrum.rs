use std::collections::BTreeMap;

use serde::Serialize;

use crate::bits::EdgeSet;
use crate::error::Result;
use crate::graph::{enumerate_cycles, Cycle, Graph};

/// Counts of negative cycles keyed by cycle length.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CycleSpectrum {
    counts: BTreeMap<usize, usize>,
}

impl CycleSpectrum {
    /// Number of negative cycles of length `k`; zero outside the computed range.
    pub fn count(&self, k: usize) -> usize {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<usize, usize> {
        &self.counts
    }

    pub fn is_zero(&self) -> bool {
        self.counts.values().all(|&c| c == 0)
    }

    /// Counts for lengths 3, 4 and 5.
    pub fn triple(&self) -> (usize, usize, usize) {
        (self.count(3), self.count(4), self.count(5))
    }
}

/// `min(n, 6)`: spectra default to cycles of length at most six.
pub fn default_max_cycle_len(g: &Graph) -> usize {
    g.vertex_count().min(6)
}

/// The cycles of a graph up to some length, kept as edge masks for fast
/// sign evaluation over many signatures.
#[derive(Clone, Debug)]
pub struct CycleTable {
    max_len: usize,
    cycles: Vec<Cycle>,
}

impl CycleTable {
    pub fn new(g: &Graph, max_len: usize) -> Result<CycleTable> {
        Ok(CycleTable {
            max_len,
            cycles: enumerate_cycles(g, max_len)?,
        })
    }

    /// Table with the default length bound; empty for graphs on fewer than three vertices.
    pub fn with_default_len(g: &Graph) -> CycleTable {
        Self::up_to(g, default_max_cycle_len(g))
    }

    /// Every cycle of the graph.
    pub fn all(g: &Graph) -> CycleTable {
        Self::up_to(g, g.vertex_count())
    }

    fn up_to(g: &Graph, max_len: usize) -> CycleTable {
        if max_len < 3 {
            return CycleTable {
                max_len,
                cycles: Vec::new(),
            };
        }
        Self::new(g, max_len).expect("length within 3..=n")
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn spectrum(&self, negative: EdgeSet) -> CycleSpectrum {
        let mut counts: BTreeMap<usize, usize> = (3..=self.max_len).map(|k| (k, 0)).collect();
        for c in &self.cycles {
            if negative.odd_overlap(c.edge_set()) {
                *counts.get_mut(&c.len()).expect("length in range") += 1;
            }
        }
        CycleSpectrum { counts }
    }

    /// Positions in [`CycleTable::cycles`] of the negative cycles, as a sorted list.
    pub fn negative_cycles(&self, negative: EdgeSet) -> Vec<usize> {
        (0..self.cycles.len())
            .filter(|&i| negative.odd_overlap(self.cycles[i].edge_set()))
            .collect()
    }
}
