use std::collections::{BTreeMap, BTreeSet};

use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::simplex::{NodeId, Simplex};

/// A set of node groups unrestricted in size. Groups are deduplicated per
/// size (a hyperedge either exists or not), but the observation count of
/// each group is retained separately for tie-strength features.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Hypergraph {
    edges_by_size: BTreeMap<usize, BTreeSet<Simplex>>,
    multiplicities: BTreeMap<Simplex, u64>,
}

impl Hypergraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_groups<I>(groups: I) -> Self
    where
        I: IntoIterator<Item = Simplex>,
    {
        let mut h = Self::new();
        for g in groups {
            h.insert(g);
        }
        h
    }

    pub fn insert(&mut self, group: Simplex) {
        *self.multiplicities.entry(group.clone()).or_insert(0) += 1;
        self.edges_by_size
            .entry(group.len())
            .or_default()
            .insert(group);
    }

    /// Deduplicated hyperedges with exactly `g` nodes, in lexicographic order.
    pub fn edges_of_size(&self, g: usize) -> impl Iterator<Item = &Simplex> + '_ {
        self.edges_by_size.get(&g).into_iter().flatten()
    }

    pub fn edge_count(&self, g: usize) -> usize {
        self.edges_by_size.get(&g).map_or(0, BTreeSet::len)
    }

    /// Group sizes present, ascending.
    pub fn sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges_by_size.keys().copied()
    }

    pub fn total_edges(&self) -> usize {
        self.edges_by_size.values().map(BTreeSet::len).sum()
    }

    /// How many times `group` was observed (0 if absent).
    pub fn multiplicity(&self, group: &Simplex) -> u64 {
        self.multiplicities.get(group).copied().unwrap_or(0)
    }

    pub fn vertices(&self) -> BTreeSet<NodeId> {
        self.multiplicities
            .keys()
            .flat_map(|s| s.vertices().iter().copied())
            .collect()
    }

    /// The downward closure of the hyperedges: every recorded group becomes
    /// a simplex with all faces present.
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_simplices(self.multiplicities.keys().cloned())
    }

    /// Closure capped at `max_dim`; see
    /// [`SimplicialComplex::from_simplices_capped`].
    pub fn to_complex_capped(&self, max_dim: usize) -> Result<SimplicialComplex> {
        SimplicialComplex::from_simplices_capped(self.multiplicities.keys().cloned(), max_dim)
    }
}
