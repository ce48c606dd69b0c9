//! Simplicial complexes stored as facet antichains.
//!
//! The void complex `{}` has no facets at all; the empty complex `{∅}` has
//! the single facet `∅`. Faces are every subset of a facet and are only
//! materialized on demand.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{maximal_sets, minimal_sets, VertexSet};
use crate::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground: VertexSet,
    /// Sorted, pairwise incomparable. Empty iff the complex is void.
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Strict constructor: facets must lie in `ground` and form an antichain.
    pub fn new(ground: VertexSet, facets: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let mut list: Vec<VertexSet> = facets.into_iter().collect();
        for f in &list {
            if let Some(v) = f.difference(ground).min() {
                return Err(Error::VertexOutOfRange { vertex: v, bound: ground.label_bound() });
            }
        }
        list.sort_unstable();
        list.dedup();
        for (i, a) in list.iter().enumerate() {
            if let Some(b) = list.iter().enumerate().find(|&(j, b)| i != j && a.is_subset(*b)).map(|(_, b)| b) {
                return Err(Error::NotAntichain { inner: a.to_vec(), outer: b.to_vec() });
            }
        }
        Ok(SimplicialComplex { ground, facets: list })
    }

    /// Keeps only the inclusion-maximal generators.
    pub fn from_generators(ground: VertexSet, generators: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let list: Vec<VertexSet> = generators.into_iter().collect();
        for f in &list {
            if let Some(v) = f.difference(ground).min() {
                return Err(Error::VertexOutOfRange { vertex: v, bound: ground.label_bound() });
            }
        }
        Ok(SimplicialComplex { ground, facets: maximal_sets(list) })
    }

    pub(crate) fn from_maximal_unchecked(ground: VertexSet, facets: Vec<VertexSet>) -> Self {
        SimplicialComplex { ground, facets: maximal_sets(facets) }
    }

    pub fn void(ground: VertexSet) -> Self {
        SimplicialComplex { ground, facets: Vec::new() }
    }

    /// `{∅}`.
    pub fn empty(ground: VertexSet) -> Self {
        SimplicialComplex { ground, facets: vec![VertexSet::EMPTY] }
    }

    /// The full simplex on `ground`.
    pub fn simplex(ground: VertexSet) -> Self {
        SimplicialComplex { ground, facets: vec![ground] }
    }

    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the void complex, `-1` for `{∅}`.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_face(&self, f: VertexSet) -> bool {
        self.facets.iter().any(|g| f.is_subset(*g))
    }

    /// Vertices appearing in some face.
    pub fn support(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    /// Every face, ordered by size and then lexicographically.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for f in &self.facets {
            seen.extend(f.subsets());
        }
        let mut out: Vec<VertexSet> = seen.into_iter().collect();
        out.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    /// `faces_by_size()[k]` lists the faces with `k` vertices, lexicographically.
    pub fn faces_by_size(&self) -> Vec<Vec<VertexSet>> {
        let mut out: Vec<Vec<VertexSet>> = Vec::new();
        for f in self.faces() {
            if out.len() <= f.len() {
                out.resize_with(f.len() + 1, Vec::new);
            }
            out[f.len()].push(f);
        }
        out
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }
}

/// `Δ_H`: the sets all of whose d-subsets are edges of `H` (every set with
/// fewer than `d` vertices qualifies).
///
/// Maximal faces are found by an extension search: a face grows one vertex
/// at a time while every new d-subset stays an edge, with an exclusion set
/// certifying maximality.
pub fn flag_complex_of(h: &Hypergraph, limits: &Limits) -> Result<SimplicialComplex> {
    limits.check(h.n())?;
    let d = h.d();
    let start = if d == 1 { h.edges().iter().fold(VertexSet::EMPTY, |a, e| a.union(*e)) } else { h.vertices() };
    let mut facets = Vec::new();
    extend_faces(h, VertexSet::EMPTY, start, VertexSet::EMPTY, &mut facets);
    Ok(SimplicialComplex::from_maximal_unchecked(h.vertices(), facets))
}

fn extend_faces(h: &Hypergraph, face: VertexSet, mut candidates: VertexSet, mut excluded: VertexSet, out: &mut Vec<VertexSet>) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            out.push(face);
        }
        return;
    }
    for u in candidates {
        let next = face.with(u);
        let keep = |pool: VertexSet| -> VertexSet {
            pool.without(u).iter().filter(|&v| extends_with_pair(h, face, u, v)).collect()
        };
        extend_faces(h, next, keep(candidates), keep(excluded), out);
        candidates = candidates.without(u);
        excluded = excluded.with(u);
    }
}

/// Given faces `F ∪ {u}` and `F ∪ {v}`, decides whether `F ∪ {u, v}` is a
/// face: every d-subset through both `u` and `v` must be an edge.
fn extends_with_pair(h: &Hypergraph, face: VertexSet, u: usize, v: usize) -> bool {
    let d = h.d();
    if d < 2 || face.len() + 2 < d {
        return true;
    }
    let pair = VertexSet::EMPTY.with(u).with(v);
    face.subsets_of_size(d - 2).all(|s| h.has_edge(s.union(pair)))
}

/// `Δ(H)`: sets containing no edge. Facets are complements of the minimal
/// transversals of the edge set.
pub fn independence_complex(h: &Hypergraph, limits: &Limits) -> Result<SimplicialComplex> {
    limits.check(h.n())?;
    let ground = h.vertices();
    let facets = minimal_transversals(h.edges()).into_iter().map(|t| ground.difference(t)).collect();
    Ok(SimplicialComplex::from_maximal_unchecked(ground, facets))
}

/// Inclusion-minimal sets meeting every member of `family` (Berge's
/// incremental algorithm). The empty family has the single transversal `∅`;
/// a family containing `∅` has none.
pub fn minimal_transversals(family: &[VertexSet]) -> Vec<VertexSet> {
    let mut sets = family.to_vec();
    sets.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    let mut current = vec![VertexSet::EMPTY];
    for s in sets {
        let mut next = Vec::with_capacity(current.len());
        for t in &current {
            if !t.is_disjoint(s) {
                next.push(*t);
            } else {
                next.extend(s.iter().map(|v| t.with(v)));
            }
        }
        current = minimal_sets(next);
        if current.is_empty() {
            break;
        }
    }
    current
}

/// `H_d(Δ)`: the d-uniform hypergraph whose edges are the faces of size `d`.
pub fn uniform_hypergraph_of(c: &SimplicialComplex, d: usize) -> Result<Hypergraph> {
    if d == 0 {
        return Err(Error::ZeroUniformity);
    }
    let mut edges: Vec<VertexSet> = c.facets.iter().flat_map(|f| f.subsets_of_size(d)).collect();
    edges.sort_unstable();
    edges.dedup();
    Ok(Hypergraph::from_sorted_unchecked(c.ground, d, edges))
}

/// Minimal non-faces (the generators of the Stanley–Reisner ideal), via
/// minimal transversals of the facet complements.
pub fn minimal_nonfaces(c: &SimplicialComplex, limits: &Limits) -> Result<Vec<VertexSet>> {
    limits.check(c.ground.len())?;
    let complements: Vec<VertexSet> = c.facets.iter().map(|f| c.ground.difference(*f)).collect();
    Ok(minimal_transversals(&complements))
}

/// Minimal non-faces by testing every subset of the ground set.
pub fn minimal_nonfaces_direct(c: &SimplicialComplex, limits: &Limits) -> Result<Vec<VertexSet>> {
    limits.check(c.ground.len())?;
    let out = c
        .ground
        .subsets()
        .filter(|&s| !c.is_face(s) && s.iter().all(|v| c.is_face(s.without(v))))
        .collect::<Vec<_>>();
    Ok(minimal_sets(out))
}

/// `Δ* = {F : ground ∖ F ∉ Δ}`, built from complements of minimal non-faces.
pub fn alexander_dual(c: &SimplicialComplex, limits: &Limits) -> Result<SimplicialComplex> {
    let facets = minimal_nonfaces(c, limits)?.into_iter().map(|n| c.ground.difference(n)).collect();
    Ok(SimplicialComplex::from_maximal_unchecked(c.ground, facets))
}

/// `Δ*` straight from the definition, enumerating all subsets.
pub fn alexander_dual_direct(c: &SimplicialComplex, limits: &Limits) -> Result<SimplicialComplex> {
    limits.check(c.ground.len())?;
    let faces = c.ground.subsets().filter(|&f| !c.is_face(c.ground.difference(f))).collect();
    Ok(SimplicialComplex::from_maximal_unchecked(c.ground, faces))
}

/// `Δ_V`, on ground set `V`.
pub fn induced_subcomplex(c: &SimplicialComplex, v: VertexSet) -> Result<SimplicialComplex> {
    if let Some(x) = v.difference(c.ground).min() {
        return Err(Error::VertexOutOfRange { vertex: x, bound: c.ground.label_bound() });
    }
    let facets = c.facets.iter().map(|f| f.intersection(v)).collect();
    Ok(SimplicialComplex::from_maximal_unchecked(v, facets))
}

/// Faces of dimension at most `r` (`r >= -1`).
pub fn skeleton(c: &SimplicialComplex, r: isize) -> Result<SimplicialComplex> {
    if r < -1 {
        return Err(Error::Input(format!("skeleton dimension must be >= -1, got {r}")));
    }
    let size = (r + 1) as usize;
    let mut gens = Vec::new();
    for &f in &c.facets {
        if f.len() <= size {
            gens.push(f);
        } else {
            gens.extend(f.subsets_of_size(size));
        }
    }
    Ok(SimplicialComplex::from_maximal_unchecked(c.ground, gens))
}

/// `Δ ∪ E`: inserts `E` as a facet, absorbing facets it contains. The
/// ground set grows to include `E`.
pub fn add_facet(c: &SimplicialComplex, e: VertexSet) -> SimplicialComplex {
    let mut facets = c.facets.clone();
    facets.push(e);
    SimplicialComplex::from_maximal_unchecked(c.ground.union(e), facets)
}

/// `lk F = {G : G ∩ F = ∅, G ∪ F ∈ Δ}` on ground `ground ∖ F`.
pub fn link(c: &SimplicialComplex, f: VertexSet) -> Result<SimplicialComplex> {
    if !f.is_subset(c.ground) || !c.is_face(f) {
        return Err(Error::NotAFace { face: f.to_vec() });
    }
    let facets = c.facets.iter().filter(|g| f.is_subset(**g)).map(|g| g.difference(f)).collect();
    Ok(SimplicialComplex { ground: c.ground.difference(f), facets })
}

/// Cone with apex `v`, which must be a new vertex.
pub fn cone(c: &SimplicialComplex, apex: usize) -> Result<SimplicialComplex> {
    if c.ground.contains(apex) {
        return Err(Error::Input(format!("cone apex {apex} is already a vertex")));
    }
    let ground = c.ground.union(VertexSet::singleton(apex)?);
    let facets = c.facets.iter().map(|f| f.with(apex)).collect();
    Ok(SimplicialComplex { ground, facets })
}
