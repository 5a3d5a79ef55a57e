use crate::error::{Error, Result};
use crate::simplex::NodeId;

/// A total map from dense node ids to one of `m >= 2` class labels,
/// with per-class counts kept alongside.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassLabeling {
    labels: Vec<u32>,
    class_counts: Vec<u64>,
}

impl ClassLabeling {
    /// `labels[v]` is the class of node `v`; every entry must be below
    /// `num_classes`. Classes may be empty, but at least two must be declared.
    pub fn new(labels: Vec<u32>, num_classes: usize) -> Result<Self> {
        if num_classes < 2 {
            return Err(Error::Domain(format!(
                "a labeling needs at least 2 classes, got {num_classes}"
            )));
        }
        let mut class_counts = vec![0u64; num_classes];
        for &c in &labels {
            if c as usize >= num_classes {
                return Err(Error::UnknownClass {
                    class: c,
                    classes: num_classes,
                });
            }
            class_counts[c as usize] += 1;
        }
        Ok(Self {
            labels,
            class_counts,
        })
    }

    /// Labeling where the first `sizes[0]` nodes are class 0, the next
    /// `sizes[1]` class 1, and so on.
    pub fn from_community_sizes(sizes: &[usize]) -> Result<Self> {
        let mut labels = Vec::with_capacity(sizes.iter().sum());
        for (c, &s) in sizes.iter().enumerate() {
            labels.extend(std::iter::repeat(c as u32).take(s));
        }
        Self::new(labels, sizes.len())
    }

    pub fn num_nodes(&self) -> usize {
        self.labels.len()
    }

    pub fn num_classes(&self) -> usize {
        self.class_counts.len()
    }

    pub fn class_counts(&self) -> &[u64] {
        &self.class_counts
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, v: NodeId) -> Result<u32> {
        self.labels
            .get(v.index())
            .copied()
            .ok_or(Error::MissingLabel(v.0))
    }

    /// True when every vertex carries the same label. A single vertex is
    /// vacuously homogeneous.
    pub fn is_homogeneous(&self, vertices: &[NodeId]) -> Result<bool> {
        let Some((first, rest)) = vertices.split_first() else {
            return Err(Error::InvalidInput("empty group".into()));
        };
        let c = self.label(*first)?;
        for v in rest {
            if self.label(*v)? != c {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Number of vertices of `vertices` labeled `class` (the group's type
    /// with respect to that class).
    pub fn type_count(&self, vertices: &[NodeId], class: u32) -> Result<usize> {
        if class as usize >= self.num_classes() {
            return Err(Error::UnknownClass {
                class,
                classes: self.num_classes(),
            });
        }
        let mut t = 0;
        for v in vertices {
            if self.label(*v)? == class {
                t += 1;
            }
        }
        Ok(t)
    }

    /// Class counts over an arbitrary node subset (e.g. the vertices actually
    /// present in a complex, which may be fewer than the labeled universe).
    pub fn counts_for<I: IntoIterator<Item = NodeId>>(&self, nodes: I) -> Result<Vec<u64>> {
        let mut counts = vec![0u64; self.num_classes()];
        for v in nodes {
            counts[self.label(v)? as usize] += 1;
        }
        Ok(counts)
    }

    /// Labeling for a node subset remapped to dense ids: `nodes[i]` becomes
    /// node `i` of the restriction.
    pub fn restrict(&self, nodes: &[NodeId]) -> Result<ClassLabeling> {
        let labels = nodes
            .iter()
            .map(|&v| self.label(v))
            .collect::<Result<Vec<_>>>()?;
        ClassLabeling::new(labels, self.num_classes())
    }
}
