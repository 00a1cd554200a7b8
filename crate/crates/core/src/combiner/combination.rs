use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet};
use crate::rational::{ratio, to_fraction_string, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub weight: Rational,
    pub edges: EdgeSet,
}

/// Weighted spanning subgraphs of a host graph with `num_edges` edges.
///
/// Values built through [`ConvexCombination::new`] have positive weights
/// summing to one, distinct edge sets, and entries sorted by edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexCombination {
    num_edges: usize,
    entries: Vec<Entry>,
}

impl ConvexCombination {
    /// Validates and normalizes: merges entries with equal edge sets and
    /// sorts by edge set.
    pub fn new<I>(num_edges: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, EdgeSet)>,
    {
        let host = EdgeSet::full(num_edges);
        let mut merged: HashMap<EdgeSet, Rational> = HashMap::new();
        for (weight, edges) in entries {
            if !weight.is_positive() {
                return Err(Error::Precondition(format!(
                    "non-positive weight {}",
                    to_fraction_string(&weight)
                )));
            }
            if !edges.is_subset(host) {
                return Err(Error::Precondition(format!(
                    "subgraph {edges:?} uses edges outside a host with {num_edges} edges"
                )));
            }
            *merged.entry(edges).or_insert_with(Rational::zero) += weight;
        }
        let total: Rational = merged.values().sum();
        if !total.is_one() {
            return Err(Error::Precondition(format!(
                "weights sum to {}, not 1",
                to_fraction_string(&total)
            )));
        }
        let mut entries: Vec<Entry> = merged
            .into_iter()
            .map(|(edges, weight)| Entry { weight, edges })
            .collect();
        entries.sort_by(|a, b| a.edges.cmp(&b.edges));
        Ok(ConvexCombination { num_edges, entries })
    }

    /// Takes entries as given, without any validation. Meant for loading
    /// certificates that are about to be verified.
    pub fn from_entries_unchecked(num_edges: usize, entries: Vec<Entry>) -> Self {
        ConvexCombination { num_edges, entries }
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Relabels edges: `map[old] = new` for a host of `num_edges` edges.
    pub fn map_edges(&self, num_edges: usize, map: &[EdgeId]) -> Result<Self> {
        Self::new(
            num_edges,
            self.entries
                .iter()
                .map(|e| (e.weight.clone(), e.edges.iter().map(|x| map[x]).collect())),
        )
    }
}

/// Per-edge total weight of the members containing the edge.
pub fn edge_occurrences(c: &ConvexCombination) -> Vec<Rational> {
    let mut occ = vec![Rational::zero(); c.num_edges];
    for entry in &c.entries {
        for e in entry.edges.iter() {
            if e < occ.len() {
                occ[e] += &entry.weight;
            }
        }
    }
    occ
}

/// Weighted merge of combinations over the same host.
pub fn average(parts: &[(Rational, &ConvexCombination)]) -> Result<ConvexCombination> {
    let Some((_, first)) = parts.first() else {
        return Err(Error::Precondition("nothing to average".into()));
    };
    let m = first.num_edges;
    if parts.iter().any(|(_, c)| c.num_edges != m) {
        return Err(Error::Precondition("combinations over different hosts".into()));
    }
    let total: Rational = parts.iter().map(|(w, _)| w.clone()).sum();
    if !total.is_one() {
        return Err(Error::Precondition(format!(
            "part weights sum to {}, not 1",
            to_fraction_string(&total)
        )));
    }
    let mut merged: HashMap<EdgeSet, Rational> = HashMap::new();
    for (w, c) in parts {
        if w.is_zero() {
            continue;
        }
        for entry in &c.entries {
            *merged.entry(entry.edges).or_insert_with(Rational::zero) += w * &entry.weight;
        }
    }
    ConvexCombination::new(m, merged.into_iter().map(|(e, w)| (w, e)))
}

/// Raises every edge to exactly `target` by adding deficient edges to
/// members that lack them.
///
/// Edges are processed in ascending id order; for each, members without the
/// edge are visited in entry order and either receive the edge outright or,
/// when their weight exceeds the remaining deficit, are split in two.
/// Adding edges keeps a 2-edge-connected spanning subgraph 2-edge-connected.
pub fn pad_to_uniform(c: &ConvexCombination, target: &Rational) -> Result<ConvexCombination> {
    let occ = edge_occurrences(c);
    if let Some(e) = occ.iter().position(|o| o > target) {
        return Err(Error::Precondition(format!(
            "edge {e} already occurs {} > {}",
            to_fraction_string(&occ[e]),
            to_fraction_string(target)
        )));
    }
    let mut work: Vec<(Rational, EdgeSet)> = c
        .entries
        .iter()
        .map(|e| (e.weight.clone(), e.edges))
        .collect();
    for (e, o) in occ.iter().enumerate() {
        let mut deficit = target - o;
        let len = work.len();
        for i in 0..len {
            if deficit.is_zero() {
                break;
            }
            if work[i].1.contains(e) {
                continue;
            }
            if work[i].0 <= deficit {
                deficit -= &work[i].0;
                work[i].1.insert(e);
            } else {
                work[i].0 -= &deficit;
                let edges = work[i].1.with(e);
                work.push((deficit.clone(), edges));
                deficit = Rational::zero();
            }
        }
        if deficit.is_positive() {
            return Err(Error::Internal(format!("could not pad edge {e}")));
        }
    }
    ConvexCombination::new(c.num_edges, work)
}

/// Weights of the local patterns at a degree-3 vertex with incident edges
/// `edges`: members omitting exactly `edges[i]`, and members keeping all
/// three. Members omitting two or more of them are a pattern mismatch.
pub fn vertex_patterns(
    c: &ConvexCombination,
    edges: [EdgeId; 3],
) -> Result<([Rational; 3], Rational)> {
    let mut omit = [Rational::zero(), Rational::zero(), Rational::zero()];
    let mut all = Rational::zero();
    for entry in &c.entries {
        let missing: Vec<usize> = (0..3).filter(|&i| !entry.edges.contains(edges[i])).collect();
        match missing.as_slice() {
            [] => all += &entry.weight,
            [i] => omit[*i] += &entry.weight,
            _ => {
                return Err(Error::PatternMismatch(format!(
                    "member {:?} omits {} of the edges {edges:?}",
                    entry.edges,
                    missing.len()
                )))
            }
        }
    }
    Ok((omit, all))
}

/// Whether the patterns are exactly 2/9, 2/9, 2/9 and 1/3.
pub fn is_uniform_pattern(patterns: &([Rational; 3], Rational)) -> bool {
    let two_ninths = ratio(2, 9);
    patterns.0.iter().all(|w| *w == two_ninths) && patterns.1 == ratio(1, 3)
}
