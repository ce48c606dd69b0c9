//! Simple d-uniform hypergraphs on labelled vertices.
//!
//! Induced subhypergraphs keep the labels of their parent, so a hypergraph
//! carries its vertex set explicitly rather than assuming `{0, .., n-1}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{binomial, VertexSet, MAX_VERTICES};

#[derive(Clone)]
pub struct Hypergraph {
    vertices: VertexSet,
    d: usize,
    /// Sorted lexicographically, no duplicates.
    edges: Vec<VertexSet>,
    /// `neighbors[v]` is `N[v]` for `v` in `vertices`, empty otherwise.
    neighbors: Vec<VertexSet>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.d == other.d && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl std::hash::Hash for Hypergraph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.vertices.hash(state);
        self.d.hash(state);
        self.edges.hash(state);
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypergraph")
            .field("vertices", &self.vertices)
            .field("d", &self.d)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Hypergraph {
    /// Validating constructor on an explicit vertex set.
    pub fn new(vertices: VertexSet, d: usize, edges: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroUniformity);
        }
        let mut list: Vec<VertexSet> = Vec::new();
        for e in edges {
            if e.len() != d {
                return Err(Error::EdgeCardinality { edge: e.to_vec(), expected: d, found: e.len() });
            }
            if let Some(v) = e.difference(vertices).min() {
                return Err(Error::VertexOutOfRange { vertex: v, bound: vertices.label_bound() });
            }
            list.push(e);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge { edge: w[0].to_vec() });
        }
        Ok(Self::from_sorted_unchecked(vertices, d, list))
    }

    /// Hypergraph on `{0, .., n-1}`.
    pub fn on_range(n: usize, d: usize, edges: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        Self::new(VertexSet::range(n)?, d, edges)
    }

    pub fn from_lists(n: usize, d: usize, edges: &[&[usize]]) -> Result<Self> {
        let sets = edges.iter().map(|e| VertexSet::try_from_iter(e.iter().copied())).collect::<Result<Vec<_>>>()?;
        Self::on_range(n, d, sets)
    }

    pub(crate) fn from_sorted_unchecked(vertices: VertexSet, d: usize, edges: Vec<VertexSet>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut neighbors = vec![VertexSet::EMPTY; vertices.label_bound()];
        for v in vertices {
            neighbors[v] = VertexSet::EMPTY.with(v);
        }
        for &e in &edges {
            for v in e {
                neighbors[v] = neighbors[v].union(e);
            }
        }
        Hypergraph { vertices, d, edges, neighbors }
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, e: VertexSet) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    fn check_vertex(&self, x: usize) -> Result<()> {
        if self.vertices.contains(x) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: x, bound: self.vertices.label_bound() })
        }
    }

    fn check_subset(&self, v: VertexSet) -> Result<()> {
        match v.difference(self.vertices).min() {
            Some(x) => Err(Error::VertexOutOfRange { vertex: x, bound: self.vertices.label_bound() }),
            None => Ok(()),
        }
    }

    /// `N[x]`: `x` together with every vertex sharing an edge with it.
    pub fn closed_neighborhood(&self, x: usize) -> Result<VertexSet> {
        self.check_vertex(x)?;
        Ok(self.neighbors[x])
    }

    /// `N_V[x]`, the closed neighborhood of `x` inside the induced hypergraph
    /// `H_V`. For graphs this equals `N[x] ∩ V`; for hypergraphs it can be
    /// strictly smaller, because an edge through `x` and `y` may leave `V`.
    pub fn closed_neighborhood_within(&self, x: usize, within: VertexSet) -> Result<VertexSet> {
        self.check_vertex(x)?;
        self.check_subset(within)?;
        if !within.contains(x) {
            return Err(Error::VertexOutOfRange { vertex: x, bound: within.label_bound() });
        }
        Ok(self.neighborhood_within_unchecked(x, within))
    }

    pub(crate) fn neighborhood_within_unchecked(&self, x: usize, within: VertexSet) -> VertexSet {
        // Every edge through x lies inside N[x].
        if self.neighbors[x].is_subset(within) {
            return self.neighbors[x];
        }
        let mut acc = VertexSet::EMPTY.with(x);
        for &e in &self.edges {
            if e.contains(x) && e.is_subset(within) {
                acc = acc.union(e);
            }
        }
        acc
    }

    pub(crate) fn neighbors_unchecked(&self, x: usize) -> VertexSet {
        self.neighbors[x]
    }

    /// True iff `x` lies in no edge of `H_V`.
    pub(crate) fn is_isolated_within(&self, x: usize, within: VertexSet) -> bool {
        !self.edges.iter().any(|&e| e.contains(x) && e.is_subset(within))
    }

    pub(crate) fn edges_within(&self, within: VertexSet) -> impl Iterator<Item = VertexSet> + '_ {
        self.edges.iter().copied().filter(move |e| e.is_subset(within))
    }

    /// True iff `|V| >= d` and every d-subset of `V` is an edge, i.e. `H_V`
    /// is a d-complete hypergraph `K_m^d` with `m >= d`.
    pub fn is_complete_on(&self, v: VertexSet) -> bool {
        if v.len() < self.d || !v.is_subset(self.vertices) {
            return false;
        }
        let need = binomial(v.len(), self.d);
        need <= self.edges.len() as u64 && self.edges_within(v).count() as u64 == need
    }

    /// `H_V`, keeping the original labels.
    pub fn induced(&self, v: VertexSet) -> Result<Hypergraph> {
        self.check_subset(v)?;
        Ok(Self::from_sorted_unchecked(v, self.d, self.edges_within(v).collect()))
    }

    /// The complementary hypergraph on the same vertex set.
    pub fn complement(&self) -> Hypergraph {
        let mut edges = Vec::new();
        for e in self.vertices.subsets_of_size(self.d) {
            if !self.has_edge(e) {
                edges.push(e);
            }
        }
        edges.sort_unstable();
        Self::from_sorted_unchecked(self.vertices, self.d, edges)
    }

    /// Removes one vertex and every edge through it.
    pub fn remove_vertex(&self, x: usize) -> Hypergraph {
        let keep = self.vertices.without(x);
        Self::from_sorted_unchecked(keep, self.d, self.edges_within(keep).collect())
    }

    /// Removes one edge if present; vertices are kept.
    pub fn remove_edge(&self, e: VertexSet) -> Hypergraph {
        let edges = self.edges.iter().copied().filter(|&f| f != e).collect();
        Self::from_sorted_unchecked(self.vertices, self.d, edges)
    }

    /// Adds a d-set on existing vertices. Errors if it is already an edge.
    pub fn add_edge(&self, e: VertexSet) -> Result<Hypergraph> {
        if e.len() != self.d {
            return Err(Error::EdgeCardinality { edge: e.to_vec(), expected: self.d, found: e.len() });
        }
        self.check_subset(e)?;
        let pos = match self.edges.binary_search(&e) {
            Ok(_) => return Err(Error::DuplicateEdge { edge: e.to_vec() }),
            Err(p) => p,
        };
        let mut edges = self.edges.clone();
        edges.insert(pos, e);
        Ok(Self::from_sorted_unchecked(self.vertices, self.d, edges))
    }
}

/// `K_n^d`: all d-subsets of `{0, .., n-1}`; `n` isolated points when `n < d`.
pub fn make_complete(n: usize, d: usize) -> Result<Hypergraph> {
    let ground = VertexSet::range(n)?;
    Hypergraph::new(ground, d, ground.subsets_of_size(d))
}

/// `K_{n,m}^d`: sides `{0..n-1}` and `{n..n+m-1}`; edges are the d-sets
/// meeting both sides.
pub fn make_complete_bipartite(n: usize, m: usize, d: usize) -> Result<Hypergraph> {
    make_complete_multipartite(&[n, m], d)
}

/// `K_{n_1,..,n_t}^d`: parts laid out consecutively; edges are the d-sets not
/// contained in a single part.
pub fn make_complete_multipartite(parts: &[usize], d: usize) -> Result<Hypergraph> {
    if parts.is_empty() {
        return Err(Error::Input("multipartite hypergraph needs at least one part".into()));
    }
    let total: usize = parts.iter().sum();
    if total > MAX_VERTICES {
        return Err(Error::TooManyVertices { n: total });
    }
    let mut sides = Vec::with_capacity(parts.len());
    let mut offset = 0;
    for &p in parts {
        sides.push(VertexSet::range(offset + p)?.difference(VertexSet::range(offset)?));
        offset += p;
    }
    let ground = VertexSet::range(total)?;
    let edges = ground.subsets_of_size(d).filter(|e| !sides.iter().any(|s| e.is_subset(*s)));
    Hypergraph::new(ground, d, edges)
}

/// `K_{n,m}^{d(a,b)}` with `d = a + b`: edges are `A ∪ B` for an a-subset `A`
/// of the first side and a b-subset `B` of the second.
pub fn make_dab_complete(n: usize, m: usize, a: usize, b: usize) -> Result<Hypergraph> {
    if a == 0 || b == 0 {
        return Err(Error::Input("d(a,b)-complete hypergraph needs a >= 1 and b >= 1".into()));
    }
    if n + m > MAX_VERTICES {
        return Err(Error::TooManyVertices { n: n + m });
    }
    let left = VertexSet::range(n)?;
    let right = VertexSet::range(n + m)?.difference(left);
    let rights: Vec<VertexSet> = right.subsets_of_size(b).collect();
    let mut edges = Vec::new();
    for l in left.subsets_of_size(a) {
        edges.extend(rights.iter().map(|r| l.union(*r)));
    }
    Hypergraph::new(left.union(right), a + b, edges)
}
