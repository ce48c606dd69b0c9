//! Construction scripts: a replayable certificate that a hypergraph is
//! chordal (start and glue moves only) or generalized chordal (edge
//! additions allowed too).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Move {
    /// `K_n^d` on vertices `0..n`.
    Start { n: usize, d: usize },
    /// Glue `K_i^d` along `overlap`; the `i - |overlap|` new vertices take the
    /// next unused labels.
    Glue { i: usize, overlap: Vec<usize> },
    /// Add one d-set with a (d-1)-subset covered by no current edge.
    AddEdge { edge: Vec<usize> },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionScript {
    pub moves: Vec<Move>,
}

impl ConstructionScript {
    pub fn new(moves: Vec<Move>) -> Self {
        ConstructionScript { moves }
    }

    /// True when the script uses only start and glue moves.
    pub fn is_chordal(&self) -> bool {
        !self.moves.iter().any(|m| matches!(m, Move::AddEdge { .. }))
    }
}

fn invalid(index: usize, reason: impl Into<String>) -> Error {
    Error::InvalidMove { index, reason: reason.into() }
}

fn vertex_set(index: usize, list: &[usize], within: VertexSet) -> Result<VertexSet> {
    let mut v = VertexSet::EMPTY;
    for &x in list {
        if x >= MAX_VERTICES || !within.contains(x) {
            return Err(invalid(index, format!("vertex {x} is not in the current hypergraph")));
        }
        if v.contains(x) {
            return Err(invalid(index, format!("vertex {x} is listed twice")));
        }
        v = v.with(x);
    }
    Ok(v)
}

/// True when some (d-1)-subset of `e` lies in no edge of `h`.
pub fn has_uncovered_facet(h: &Hypergraph, e: VertexSet) -> bool {
    let d = h.d();
    e.subsets_of_size(d - 1).any(|s| !h.edges().iter().any(|f| s.is_subset(*f)))
}

/// Applies one move to `h`, checking its side conditions.
pub fn apply_move(h: &Hypergraph, m: &Move, index: usize) -> Result<Hypergraph> {
    let d = h.d();
    match m {
        Move::Start { .. } => Err(invalid(index, "start may only appear as the first move")),
        Move::Glue { i, overlap } => {
            let overlap = vertex_set(index, overlap, h.vertices())?;
            let j = overlap.len();
            if j >= *i {
                return Err(invalid(index, format!("overlap size {j} is not below i = {i}")));
            }
            if j >= d && !h.is_complete_on(overlap) {
                return Err(invalid(index, format!("overlap {overlap} is not d-complete")));
            }
            let first = h.vertices().label_bound();
            let fresh = i - j;
            if first + fresh > MAX_VERTICES {
                return Err(invalid(index, format!("glue would exceed {MAX_VERTICES} vertex labels")));
            }
            let new: VertexSet = (first..first + fresh).collect();
            let block = overlap.union(new);
            let mut edges: Vec<VertexSet> = h.edges().to_vec();
            edges.extend(block.subsets_of_size(d).filter(|e| !e.is_disjoint(new)));
            Hypergraph::new(h.vertices().union(new), d, edges)
        }
        Move::AddEdge { edge } => {
            let e = vertex_set(index, edge, h.vertices())?;
            if e.len() != d {
                return Err(invalid(index, format!("edge {e} has {} vertices, expected {d}", e.len())));
            }
            if h.has_edge(e) {
                return Err(invalid(index, format!("{e} is already an edge")));
            }
            if !has_uncovered_facet(h, e) {
                return Err(invalid(index, format!("every (d-1)-subset of {e} already lies in an edge")));
            }
            h.add_edge(e)
        }
    }
}

/// Replays a script, validating every move.
pub fn replay_script(s: &ConstructionScript) -> Result<Hypergraph> {
    let (n, d) = match s.moves.first() {
        Some(&Move::Start { n, d }) => (n, d),
        Some(_) => return Err(invalid(0, "the first move must be start")),
        None => return Err(invalid(0, "empty script")),
    };
    if d == 0 {
        return Err(invalid(0, "d must be at least 1"));
    }
    if n > MAX_VERTICES {
        return Err(invalid(0, format!("n = {n} exceeds {MAX_VERTICES} vertex labels")));
    }
    let mut h = crate::hypergraph::make_complete(n, d)?;
    for (index, m) in s.moves.iter().enumerate().skip(1) {
        h = apply_move(&h, m, index)?;
    }
    Ok(h)
}

/// Renames vertex `k` of `h` to `map[k]`.
pub fn relabel(h: &Hypergraph, map: &[usize]) -> Result<Hypergraph> {
    let image = |v: VertexSet| -> Result<VertexSet> {
        VertexSet::try_from_iter(v.iter().map(|x| map.get(x).copied().unwrap_or(usize::MAX)))
            .map_err(|_| Error::Input("vertex map does not cover the hypergraph".into()))
    };
    let vertices = image(h.vertices())?;
    if vertices.len() != h.n() {
        return Err(Error::Input("vertex map is not injective".into()));
    }
    let edges = h.edges().iter().map(|&e| image(e)).collect::<Result<Vec<_>>>()?;
    Hypergraph::new(vertices, h.d(), edges)
}
