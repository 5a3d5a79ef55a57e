use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Dense node index. Ingestion remaps arbitrary external ids onto `0..n`;
/// the mapping back to the original ids lives with the dataset, not here.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
#[repr(transparent)]
pub struct NodeId(pub u32);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u32> for NodeId {
    fn from(v: u32) -> Self {
        NodeId(v)
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A set of `k + 1` distinct nodes, i.e. a `k`-simplex. 0-simplices are
/// nodes, 1-simplices edges, 2-simplices filled triangles.
///
/// Vertices are stored strictly sorted, so two simplices are equal exactly
/// when their vertex sequences are equal, and the derived `Ord` is the
/// lexicographic order used as the canonical enumeration order throughout.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Simplex {
    vertices: Vec<NodeId>,
}

impl Simplex {
    /// Builds a simplex from an arbitrary vertex order. Rejects empty vertex
    /// sets and repeated vertices.
    pub fn new(mut vertices: Vec<NodeId>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptySimplex);
        }
        vertices.sort_unstable();
        for w in vertices.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateVertex {
                    vertex: w[0].0,
                    vertices: vertices.iter().map(|v| v.0).collect(),
                });
            }
        }
        Ok(Self { vertices })
    }

    pub fn from_ids<I: IntoIterator<Item = u32>>(ids: I) -> Result<Self> {
        Self::new(ids.into_iter().map(NodeId).collect())
    }

    /// Internal constructor for vertex lists already known to be strictly
    /// sorted (e.g. combinations of a sorted list).
    pub(crate) fn from_sorted(vertices: Vec<NodeId>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(!vertices.is_empty());
        Self { vertices }
    }

    pub fn vertices(&self) -> &[NodeId] {
        &self.vertices
    }

    /// Number of vertices minus one.
    pub fn dimension(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: NodeId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// The codimension-1 faces (each obtained by dropping one vertex).
    /// A 0-simplex has no faces.
    pub fn faces(&self) -> Vec<Simplex> {
        if self.dimension() == 0 {
            return Vec::new();
        }
        (0..self.vertices.len())
            .map(|drop| {
                let mut vs = Vec::with_capacity(self.vertices.len() - 1);
                vs.extend(
                    self.vertices
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != drop)
                        .map(|(_, v)| *v),
                );
                Simplex::from_sorted(vs)
            })
            .collect()
    }

    /// All sub-simplices with exactly `size` vertices, in lexicographic order.
    pub fn subsets_of_size(&self, size: usize) -> Vec<Simplex> {
        if size == 0 || size > self.vertices.len() {
            return Vec::new();
        }
        self.vertices
            .iter()
            .copied()
            .combinations(size)
            .map(Simplex::from_sorted)
            .collect()
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.vertices.iter().join(","))
    }
}

/// A simplex observed at a point in time. Timestamps are totally ordered
/// and ties are permitted; streams resolve ties by stable input order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TimestampedSimplex {
    pub simplex: Simplex,
    pub time: i64,
}
