//! Downward-closed simplex store with per-dimension indexes and an
//! adjacency view of the 1-skeleton.
//!
//! The dominant workloads are membership tests and closed-triangle
//! enumeration, so simplices live in per-dimension ordered sets (canonical
//! iteration order for free) and the 1-skeleton is mirrored as sorted
//! neighbor lists for wedge intersection.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::simplex::{NodeId, Simplex};

/// A downward-closed family of simplices: every face of a stored simplex is
/// stored as well. Immutable after construction; all read operations are
/// safe to run concurrently.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimplicialComplex {
    /// `by_dimension[j]` is the set of `j`-simplices. No trailing empty sets.
    by_dimension: Vec<BTreeSet<Simplex>>,
    /// Sorted neighbor lists of the 1-skeleton, indexed by node id.
    adjacency: Vec<Vec<NodeId>>,
}

impl SimplicialComplex {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds the closure of the given simplices: every subset of every input
    /// simplex is inserted, duplicates collapse to one.
    pub fn from_simplices<I>(simplices: I) -> Result<Self>
    where
        I: IntoIterator<Item = Simplex>,
    {
        Self::from_simplices_capped(simplices, usize::MAX)
    }

    /// Like [`from_simplices`](Self::from_simplices) but keeps only
    /// dimensions `<= max_dim`, i.e. the `max_dim`-skeleton of the closure.
    ///
    /// Large recorded groups make the full closure exponential in group size
    /// (a 25-node group has 2^25 subsets); analyses at a fixed dimension `k`
    /// only ever look at dimensions `<= k`, so loaders cap the build.
    pub fn from_simplices_capped<I>(simplices: I, max_dim: usize) -> Result<Self>
    where
        I: IntoIterator<Item = Simplex>,
    {
        let mut by_dimension: Vec<BTreeSet<Simplex>> = Vec::new();
        for s in simplices {
            let top = s.dimension().min(max_dim);
            if by_dimension.len() <= top {
                by_dimension.resize_with(top + 1, BTreeSet::new);
            }
            for dim in 0..=top {
                for face in s.subsets_of_size(dim + 1) {
                    by_dimension[dim].insert(face);
                }
            }
        }
        while by_dimension.last().is_some_and(BTreeSet::is_empty) {
            by_dimension.pop();
        }
        let adjacency = build_adjacency(&by_dimension);
        Ok(Self {
            by_dimension,
            adjacency,
        })
    }

    /// Fast path for plain graphs: nodes `0..num_nodes` (isolated ones
    /// included) plus the given edges.
    pub fn from_edges(num_nodes: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut simplices: Vec<Simplex> =
            (0..num_nodes as u32).map(|v| Simplex::from_sorted(vec![NodeId(v)])).collect();
        for &(u, v) in edges {
            simplices.push(Simplex::from_ids([u, v])?);
        }
        Self::from_simplices(simplices)
    }

    /// Highest dimension with at least one simplex; `None` for the empty
    /// complex.
    pub fn max_dimension(&self) -> Option<usize> {
        self.by_dimension.len().checked_sub(1)
    }

    pub fn simplices(&self, dim: usize) -> impl Iterator<Item = &Simplex> + '_ {
        self.by_dimension.get(dim).into_iter().flatten()
    }

    pub fn simplex_count(&self, dim: usize) -> usize {
        self.by_dimension.get(dim).map_or(0, BTreeSet::len)
    }

    pub fn all_simplices(&self) -> impl Iterator<Item = &Simplex> + '_ {
        self.by_dimension.iter().flatten()
    }

    pub fn num_vertices(&self) -> usize {
        self.simplex_count(0)
    }

    /// Vertices in increasing id order.
    pub fn vertices(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.simplices(0).map(|s| s.vertices()[0])
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.by_dimension
            .get(s.dimension())
            .is_some_and(|set| set.contains(s))
    }

    /// Neighbors of `v` in the 1-skeleton, sorted by id.
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        self.adjacency.get(v.index()).map_or(&[], Vec::as_slice)
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.neighbors(v).len()
    }

    /// Restriction to dimensions `<= k`. A `k` beyond the maximal dimension
    /// views the whole complex.
    pub fn k_skeleton(&self, k: usize) -> SkeletonView<'_> {
        SkeletonView { complex: self, k }
    }

    /// Exhaustive face check; the constructors guarantee this holds, so this
    /// is mainly useful for validating hand-assembled or generated data.
    pub fn is_closed(&self) -> bool {
        self.all_simplices()
            .all(|s| s.faces().iter().all(|f| self.contains(f)))
    }

    /// All `(k+1)`-node sets whose size-`k` subsets are all `(k-1)`-simplices
    /// of this complex: the positions where a `k`-simplex could be added
    /// without breaking closure. Simplices already present in dimension `k`
    /// are *not* excluded. For `k = 2` these are exactly the closed (filled
    /// or unfilled) triangles of the 1-skeleton; for `k = 1`, every vertex
    /// pair.
    ///
    /// Results are in lexicographic vertex order.
    pub fn potential_k_simplices(&self, k: usize) -> Result<Vec<Simplex>> {
        let mut out = Vec::new();
        self.for_each_potential_k_simplex(k, |vs| {
            out.push(Simplex::from_sorted(vs.to_vec()));
        })?;
        out.sort_unstable();
        Ok(out)
    }

    pub fn count_potential_k_simplices(&self, k: usize) -> Result<u64> {
        let mut n = 0u64;
        self.for_each_potential_k_simplex(k, |_| n += 1)?;
        Ok(n)
    }

    /// Visits each potential `k`-simplex exactly once as a sorted vertex
    /// slice, without materializing the set. The visit order is
    /// deterministic but unspecified; use [`potential_k_simplices`]
    /// (Self::potential_k_simplices) when canonical order matters.
    pub fn for_each_potential_k_simplex<F>(&self, k: usize, mut f: F) -> Result<()>
    where
        F: FnMut(&[NodeId]),
    {
        match k {
            0 => Err(Error::Domain(
                "potential k-simplices are defined for k >= 1".into(),
            )),
            1 => {
                // The 0-skeleton imposes no constraint: every vertex pair is
                // a legal position for an edge.
                let vs: Vec<NodeId> = self.vertices().collect();
                for i in 0..vs.len() {
                    for j in i + 1..vs.len() {
                        f(&[vs[i], vs[j]]);
                    }
                }
                Ok(())
            }
            2 => {
                self.for_each_closed_triangle(|t| f(t));
                Ok(())
            }
            k => {
                self.for_each_potential_general(k, f);
                Ok(())
            }
        }
    }

    /// Degree-ordered neighbor intersection; each closed triangle is reported
    /// exactly once, at its lowest-rank vertex. Triples are passed sorted by
    /// node id.
    fn for_each_closed_triangle<F>(&self, mut f: F)
    where
        F: FnMut(&[NodeId; 3]),
    {
        let n = self.adjacency.len();
        let mut order: Vec<u32> = (0..n as u32).collect();
        order.sort_unstable_by_key(|&v| (self.adjacency[v as usize].len(), v));
        let mut rank = vec![0u32; n];
        for (r, &v) in order.iter().enumerate() {
            rank[v as usize] = r as u32;
        }
        // Forward lists: neighbors of strictly higher rank, sorted by rank.
        let mut fwd: Vec<Vec<u32>> = vec![Vec::new(); n];
        for v in 0..n {
            let rv = rank[v];
            for w in &self.adjacency[v] {
                if rank[w.index()] > rv {
                    fwd[v].push(w.0);
                }
            }
            fwd[v].sort_unstable_by_key(|&w| rank[w as usize]);
        }
        for &v in &order {
            let fv = &fwd[v as usize];
            for (i, &w) in fv.iter().enumerate() {
                let fw = &fwd[w as usize];
                // fv[i+1..] holds ranks above rank(w); merge with fw.
                let (mut a, mut b) = (i + 1, 0);
                while a < fv.len() && b < fw.len() {
                    let (ra, rb) = (rank[fv[a] as usize], rank[fw[b] as usize]);
                    match ra.cmp(&rb) {
                        std::cmp::Ordering::Equal => {
                            let mut t = [v, w, fv[a]];
                            t.sort_unstable();
                            f(&[NodeId(t[0]), NodeId(t[1]), NodeId(t[2])]);
                            a += 1;
                            b += 1;
                        }
                        std::cmp::Ordering::Less => a += 1,
                        std::cmp::Ordering::Greater => b += 1,
                    }
                }
            }
        }
    }

    /// Recursive-extension enumeration for `k >= 3`: extend each
    /// `(k-1)`-simplex by a common neighbor above its maximum vertex, then
    /// verify every size-`k` subface. Candidates come out in lexicographic
    /// order. Only exercised at small scales.
    fn for_each_potential_general<F>(&self, k: usize, mut f: F)
    where
        F: FnMut(&[NodeId]),
    {
        let Some(faces) = self.by_dimension.get(k - 1) else {
            return;
        };
        let mut candidate: Vec<NodeId> = Vec::with_capacity(k + 1);
        let mut sub: Vec<NodeId> = Vec::with_capacity(k);
        let mut common: Vec<NodeId> = Vec::new();
        let mut next: Vec<NodeId> = Vec::new();
        for s in faces {
            let vs = s.vertices();
            let max = vs[k - 1];
            // Common neighbors of all vertices of `s`, above max(s). Every
            // extension vertex must be adjacent to all of them because the
            // pair edges are faces of the required subfaces.
            common.clear();
            common.extend(
                self.neighbors(vs[0])
                    .iter()
                    .copied()
                    .filter(|w| *w > max),
            );
            for v in &vs[1..] {
                if common.is_empty() {
                    break;
                }
                next.clear();
                intersect_sorted(&common, self.neighbors(*v), &mut next);
                std::mem::swap(&mut common, &mut next);
            }
            'extension: for &w in &common {
                for drop in 0..k {
                    sub.clear();
                    sub.extend(
                        vs.iter()
                            .enumerate()
                            .filter(|(i, _)| *i != drop)
                            .map(|(_, v)| *v),
                    );
                    sub.push(w); // w > max(s), so the list stays sorted
                    if !faces.contains(&Simplex::from_sorted(sub.clone())) {
                        continue 'extension;
                    }
                }
                candidate.clear();
                candidate.extend_from_slice(vs);
                candidate.push(w);
                f(&candidate);
            }
        }
    }
}

fn intersect_sorted(a: &[NodeId], b: &[NodeId], out: &mut Vec<NodeId>) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
        }
    }
}

fn build_adjacency(by_dimension: &[BTreeSet<Simplex>]) -> Vec<Vec<NodeId>> {
    let max_id = by_dimension
        .first()
        .and_then(|vs| vs.iter().last())
        .map(|s| s.vertices()[0].index());
    let Some(max_id) = max_id else {
        return Vec::new();
    };
    let mut adjacency = vec![Vec::new(); max_id + 1];
    if let Some(edges) = by_dimension.get(1) {
        for e in edges {
            let [u, v] = e.vertices() else { unreachable!() };
            adjacency[u.index()].push(*v);
            adjacency[v.index()].push(*u);
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    adjacency
}

/// A read-only view of a complex restricted to dimensions `<= k`
/// (the `k`-skeleton).
#[derive(Clone, Copy, Debug)]
pub struct SkeletonView<'a> {
    complex: &'a SimplicialComplex,
    k: usize,
}

impl<'a> SkeletonView<'a> {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn complex(&self) -> &'a SimplicialComplex {
        self.complex
    }

    pub fn max_dimension(&self) -> Option<usize> {
        self.complex.max_dimension().map(|d| d.min(self.k))
    }

    pub fn simplices(&self, dim: usize) -> impl Iterator<Item = &'a Simplex> + '_ {
        let dim = if dim <= self.k { dim } else { usize::MAX };
        self.complex.simplices(dim)
    }

    pub fn simplex_count(&self, dim: usize) -> usize {
        if dim <= self.k {
            self.complex.simplex_count(dim)
        } else {
            0
        }
    }

    pub fn all_simplices(&self) -> impl Iterator<Item = &'a Simplex> + '_ {
        (0..=self.k.min(self.complex.by_dimension.len().saturating_sub(1)))
            .flat_map(|d| self.complex.simplices(d))
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        s.dimension() <= self.k && self.complex.contains(s)
    }

    /// Materializes the view as an owned complex.
    pub fn to_complex(&self) -> SimplicialComplex {
        let by_dimension: Vec<BTreeSet<Simplex>> = self
            .complex
            .by_dimension
            .iter()
            .take(self.k + 1)
            .cloned()
            .collect();
        let adjacency = build_adjacency(&by_dimension);
        SimplicialComplex {
            by_dimension,
            adjacency,
        }
    }
}
