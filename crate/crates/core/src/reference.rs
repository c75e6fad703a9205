//! Published reference values for signed `K6` and the small complete graphs,
//! and a battery that checks the library against them.
//!
//! Vertex `u_i` of the published labeling is vertex `i - 1` here.
//!
//! | published | here |
//! |-----------|------|
//! | u1 .. u6  | 0 .. 5 |

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::Serialize;

use crate::bits::VertexSet;
use crate::classify::{
    apply_automorphism, automorphic_type_count, frustration_index, max_negative_degree, Classifier,
};
use crate::error::Result;
use crate::graph::{builtin_graph, Graph};
use crate::signed::Signature;

/// The nineteen named automorphic types `Σ0..Σ18` on `K6`, 0-based.
pub const K6_REPRESENTATIVES: [&[(usize, usize)]; 19] = [
    &[],
    &[(0, 1)],
    &[(0, 1), (1, 2)],
    &[(0, 1), (2, 3)],
    &[(0, 1), (1, 2), (2, 3)],
    &[(0, 1), (1, 2), (3, 4)],
    &[(0, 1), (5, 2), (4, 3)],
    &[(0, 1), (1, 2), (2, 0)],
    &[(0, 1), (1, 2), (2, 3), (3, 4)],
    &[(0, 1), (1, 2), (2, 3), (4, 5)],
    &[(0, 1), (5, 0), (2, 3), (3, 4)],
    &[(0, 1), (1, 2), (2, 0), (4, 5)],
    &[(0, 1), (1, 2), (2, 5), (5, 0)],
    &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)],
    &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5)],
    &[(0, 1), (1, 2), (2, 0), (3, 5), (4, 5)],
    &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
    &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)],
    &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)],
];

/// Negative (3-, 4-, 5-)cycle counts of the sixteen signed `K6`, keyed by the
/// index of the named representative, as published.
pub const K6_SPECTRA: [(usize, (usize, usize, usize)); 16] = [
    (0, (0, 0, 0)),
    (1, (4, 12, 24)),
    (2, (6, 18, 24)),
    (3, (8, 20, 32)),
    (4, (8, 24, 40)),
    (5, (10, 22, 36)),
    (6, (12, 24, 24)),
    (7, (10, 18, 36)),
    (8, (10, 26, 36)),
    (9, (12, 24, 32)),
    (10, (12, 20, 40)),
    (11, (14, 18, 36)),
    (12, (8, 24, 48)),
    (15, (16, 12, 48)),
    (16, (10, 30, 36)),
    (18, (20, 0, 72)),
];

/// `(from, switching set, to)`: switching `Σfrom` at the set gives a
/// signature automorphic to `Σto`.
pub const K6_SWITCHING_WITNESSES: [(usize, &[usize], usize); 3] = [
    (6, &[1, 2, 3], 17),
    (10, &[0, 2, 4], 14),
    (13, &[1, 3, 5], 9),
];

/// Number of signed graphs up to switching isomorphism.
pub const CLASS_COUNTS: [(&str, usize); 5] = [
    ("complete:3", 2),
    ("complete:4", 3),
    ("complete:5", 7),
    ("complete:6", 16),
    ("petersen", 6),
];

/// Automorphic types of `K6` with maximum degree two, by size 0..=6.
pub const K6_TYPE_COUNTS: [usize; 7] = [1, 1, 2, 4, 5, 4, 2];

pub const K6_SWITCHING_CLASSES: usize = 1024;
pub const K6_MAX_FRUSTRATION: usize = 6;
pub const K6_MAX_NEGATIVE_DEGREE: usize = 2;

pub fn label(index: usize) -> String {
    format!("Σ{index}")
}

/// The named representatives as signatures on `graph`, which must be `K6`.
pub fn k6_representatives_on(graph: &Arc<Graph>) -> Result<BTreeMap<usize, Signature>> {
    K6_REPRESENTATIVES
        .iter()
        .enumerate()
        .map(|(i, pairs)| Ok((i, Signature::from_pairs(Arc::clone(graph), pairs)?)))
        .collect()
}

/// The named representatives `Σ0..Σ18` on a fresh `K6`.
pub fn k6_representatives() -> BTreeMap<usize, Signature> {
    let k6 = Arc::new(Graph::complete(6).expect("K6"));
    k6_representatives_on(&k6).expect("representatives are edges of K6")
}

/// Label of the named representative lying in each class, keyed by canonical key bits.
pub fn k6_class_labels(classifier: &Classifier) -> Result<BTreeMap<u128, String>> {
    let reps = k6_representatives_on(classifier.graph())?;
    let mut labels = BTreeMap::new();
    for &(i, _) in &K6_SPECTRA {
        labels.insert(classifier.canonical_form(&reps[&i])?.0 .0, label(i));
    }
    Ok(labels)
}

/// Parses `complete:6`, `cycle:5`, `petersen`, ... into a builtin graph.
pub fn parse_builtin(spec: &str) -> Result<Graph> {
    let (name, param) = match spec.split_once(':') {
        Some((name, p)) => (
            name,
            Some(
                p.parse::<usize>()
                    .map_err(|_| crate::Error::InvalidParam(format!("bad size `{p}`")))?,
            ),
        ),
        None => (spec, None),
    };
    builtin_graph(name, param)
}

/// One line of the reproduction report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub item: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl CheckItem {
    fn new(item: impl Into<String>, expected: impl ToString, got: impl ToString) -> CheckItem {
        let (expected, got) = (expected.to_string(), got.to_string());
        CheckItem {
            item: item.into(),
            pass: expected == got,
            expected,
            got,
        }
    }
}

/// Alterations of the reference data, for exercising the harness itself.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tamper {
    /// Replace the `Σ1` spectrum with `(0, 0, 0)`.
    pub corrupt_spectrum: bool,
}

fn triple((a, b, c): (usize, usize, usize)) -> String {
    format!("({a},{b},{c})")
}

fn triple_set(set: &BTreeSet<(usize, usize, usize)>) -> String {
    let items: Vec<String> = set.iter().map(|&t| triple(t)).collect();
    format!("{{{}}}", items.join(","))
}

/// Runs every reference check and reports one item per value.
pub fn reproduce(workers: usize, tamper: Tamper) -> Result<Vec<CheckItem>> {
    let mut items = Vec::new();

    for (spec, want) in CLASS_COUNTS {
        let g = Arc::new(parse_builtin(spec)?);
        let got = Classifier::new(g)?.isomorphism_classes(workers)?.len();
        items.push(CheckItem::new(format!("class count {spec}"), want, got));
    }

    let k6 = Arc::new(Graph::complete(6)?);
    let classifier = Classifier::new(Arc::clone(&k6))?;
    items.push(CheckItem::new(
        "automorphism group order K6",
        720,
        classifier.group().order(),
    ));
    items.push(CheckItem::new(
        "switching classes K6",
        K6_SWITCHING_CLASSES,
        classifier.switching_classes()?.len(),
    ));

    let classes = classifier.isomorphism_classes(workers)?;
    let reps = k6_representatives_on(&k6)?;

    let mut spectra = K6_SPECTRA;
    if tamper.corrupt_spectrum {
        spectra[1].1 = (0, 0, 0);
    }
    let expected: BTreeSet<_> = spectra.iter().map(|&(_, t)| t).collect();
    let got: BTreeSet<_> = classes.iter().map(|c| c.spectrum.triple()).collect();
    items.push(CheckItem::new(
        "K6 spectrum triples (as a set)",
        triple_set(&expected),
        triple_set(&got),
    ));
    for &(i, want) in &spectra {
        let key = classifier.canonical_form(&reps[&i])?;
        let class = classes
            .iter()
            .find(|c| c.canonical == key)
            .expect("every key is a class");
        items.push(CheckItem::new(
            format!("K6 spectrum of the class of {}", label(i)),
            triple(want),
            triple(class.spectrum.triple()),
        ));
    }

    for (size, &want) in K6_TYPE_COUNTS.iter().enumerate() {
        items.push(CheckItem::new(
            format!("K6 automorphic types of size {size}, max degree 2"),
            want,
            automorphic_type_count(&k6, size, 2)?,
        ));
    }
    items.push(CheckItem::new(
        "K6 automorphic types of size 0..6, total",
        K6_TYPE_COUNTS.iter().sum::<usize>(),
        (0..=6)
            .map(|s| automorphic_type_count(&k6, s, 2))
            .sum::<Result<usize>>()?,
    ));

    for &(from, set, to) in &K6_SWITCHING_WITNESSES {
        let switched = reps[&from].switch(set)?;
        let automorphic = classifier.group().iter().any(|p| {
            apply_automorphism(&switched, p)
                .map(|s| s == reps[&to])
                .unwrap_or(false)
        });
        items.push(CheckItem::new(
            format!(
                "{} switched at {:?} is automorphic to {}",
                label(from),
                VertexSet::from_vertices(set.iter().copied()),
                label(to)
            ),
            true,
            automorphic,
        ));
    }

    let max_frustration = classes.iter().map(|c| c.frustration).max().unwrap_or(0);
    items.push(CheckItem::new(
        "K6 frustration index at most 6",
        true,
        max_frustration <= K6_MAX_FRUSTRATION,
    ));
    let max_degree = classes
        .iter()
        .map(|c| max_negative_degree(&c.min_rep))
        .max()
        .unwrap_or(0);
    items.push(CheckItem::new(
        "K6 minimal signatures have negative degree at most 2",
        true,
        max_degree <= K6_MAX_NEGATIVE_DEGREE,
    ));
    items.push(CheckItem::new(
        "K6 frustration of named representatives within bound",
        true,
        reps.values()
            .map(frustration_index)
            .collect::<Result<Vec<_>>>()?
            .iter()
            .all(|(size, _)| *size <= K6_MAX_FRUSTRATION),
    ));

    Ok(items)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representatives_spot_checks() {
        let reps = k6_representatives();
        assert_eq!(reps.len(), 19);
        assert_eq!(reps[&7].to_string(), "0-1,0-2,1-2");
        assert_eq!(reps[&16].to_string(), "0-1,0-4,1-2,2-3,3-4");
        assert_eq!(reps[&12].to_string(), "0-1,0-5,1-2,2-5");
        for (i, s) in &reps {
            let size = match i {
                0 => 0,
                1 => 1,
                2..=3 => 2,
                4..=7 => 3,
                8..=12 => 4,
                13..=16 => 5,
                _ => 6,
            };
            assert_eq!(s.size(), size, "Σ{i}");
        }
    }

    #[test]
    fn named_types_are_pairwise_non_automorphic() {
        let k6 = Arc::new(Graph::complete(6).unwrap());
        let group = crate::graph::automorphism_group(&k6).unwrap();
        let reps = k6_representatives_on(&k6).unwrap();
        let orbit_min = |s: &Signature| {
            group
                .iter()
                .map(|p| p.apply_edges(s.bits()).0.reverse_bits())
                .min()
        };
        let mins: BTreeSet<_> = reps.values().map(orbit_min).collect();
        assert_eq!(mins.len(), 19);
    }

    #[test]
    fn builtin_specs() {
        assert_eq!(parse_builtin("complete:4").unwrap().edge_count(), 6);
        assert_eq!(parse_builtin("petersen").unwrap().vertex_count(), 10);
        assert!(parse_builtin("complete:x").is_err());
        assert!(parse_builtin("moebius").is_err());
    }
}
