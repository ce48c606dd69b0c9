//! Reverse search for construction scripts.
//!
//! Each construction move has an inverse that shrinks the hypergraph:
//! a glue that adds one vertex `x` is undone by deleting a vertex whose
//! closed neighborhood is d-complete (or which is isolated), and an edge
//! addition is undone by deleting an edge with a (d-1)-subset covered by no
//! other edge. Gluing `K_i^d` along `K_j^d` is the same as `i - j` single
//! vertex glues, so single-vertex deletions cover every glue. The search
//! backtracks over all inverse moves and memoizes failed states exactly.

use std::collections::HashSet;

use serde::Serialize;

use super::script::{ConstructionScript, Move};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum SearchOutcome {
    /// `vertex_map[k]` is the label in the input of script vertex `k`.
    Yes { script: ConstructionScript, vertex_map: Vec<usize> },
    /// Every inverse sequence was explored without reaching a start state.
    No { nodes: usize },
    /// The node budget ran out first.
    Inconclusive { nodes: usize },
}

impl SearchOutcome {
    pub fn is_yes(&self) -> bool {
        matches!(self, SearchOutcome::Yes { .. })
    }
}

#[derive(Clone, Copy, Debug)]
enum Inverse {
    RemoveVertex { x: usize, neighbors: VertexSet },
    RemoveEdge(VertexSet),
}

struct OutOfBudget;

struct Search {
    allow_edges: bool,
    budget: usize,
    nodes: usize,
    failed: HashSet<Hypergraph>,
}

fn is_start_state(h: &Hypergraph) -> bool {
    h.n() < h.d() || h.is_complete_on(h.vertices())
}

/// Edges having a (d-1)-subset that no other edge contains.
fn removable_edges(h: &Hypergraph) -> Vec<VertexSet> {
    let d = h.d();
    h.edges()
        .iter()
        .copied()
        .filter(|&e| e.subsets_of_size(d - 1).any(|s| !h.edges().iter().any(|&f| f != e && s.is_subset(f))))
        .collect()
}

impl Search {
    fn run(&mut self, h: &Hypergraph, path: &mut Vec<Inverse>) -> Result<bool, OutOfBudget> {
        if is_start_state(h) {
            return Ok(true);
        }
        if self.failed.contains(h) {
            return Ok(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OutOfBudget);
        }
        for x in h.vertices().iter() {
            let nb = h.neighbors_unchecked(x);
            if nb.len() == 1 || h.is_complete_on(nb) {
                path.push(Inverse::RemoveVertex { x, neighbors: nb.without(x) });
                if self.run(&h.remove_vertex(x), path)? {
                    return Ok(true);
                }
                path.pop();
            }
        }
        if self.allow_edges {
            for e in removable_edges(h) {
                path.push(Inverse::RemoveEdge(e));
                if self.run(&h.remove_edge(e), path)? {
                    return Ok(true);
                }
                path.pop();
            }
        }
        self.failed.insert(h.clone());
        Ok(false)
    }
}

/// Turns the inverse moves taken from `h` into a forward script.
fn build_script(h: &Hypergraph, path: &[Inverse]) -> (ConstructionScript, Vec<usize>) {
    let mut base = h.vertices();
    for m in path {
        if let Inverse::RemoveVertex { x, .. } = m {
            base = base.without(*x);
        }
    }
    let mut vertex_map: Vec<usize> = base.to_vec();
    let mut moves = vec![Move::Start { n: vertex_map.len(), d: h.d() }];
    let ids = |set: VertexSet, map: &[usize]| -> Vec<usize> {
        let mut v: Vec<usize> = set.iter().map(|x| map.iter().position(|&y| y == x).expect("vertex already placed")).collect();
        v.sort_unstable();
        v
    };
    for m in path.iter().rev() {
        match *m {
            Inverse::RemoveVertex { x, neighbors } => {
                moves.push(Move::Glue { i: neighbors.len() + 1, overlap: ids(neighbors, &vertex_map) });
                vertex_map.push(x);
            }
            Inverse::RemoveEdge(e) => moves.push(Move::AddEdge { edge: ids(e, &vertex_map) }),
        }
    }
    (ConstructionScript::new(moves), vertex_map)
}

fn search(h: &Hypergraph, budget: usize, allow_edges: bool) -> SearchOutcome {
    let mut s = Search { allow_edges, budget, nodes: 0, failed: HashSet::new() };
    let mut path = Vec::new();
    match s.run(h, &mut path) {
        Ok(true) => {
            let (script, vertex_map) = build_script(h, &path);
            SearchOutcome::Yes { script, vertex_map }
        }
        Ok(false) => SearchOutcome::No { nodes: s.nodes },
        Err(OutOfBudget) => SearchOutcome::Inconclusive { nodes: s.nodes },
    }
}

/// Looks for a generalized chordal construction of `h` within `budget`
/// expanded states.
pub fn is_generalized_chordal_search(h: &Hypergraph, budget: usize) -> SearchOutcome {
    search(h, budget, true)
}

/// The same search restricted to start and glue moves.
pub fn is_chordal_search(h: &Hypergraph, budget: usize) -> SearchOutcome {
    search(h, budget, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordality::script::{relabel, replay_script};
    use crate::hypergraph::{make_complete, make_complete_bipartite};

    fn certified(h: &Hypergraph, outcome: &SearchOutcome) -> bool {
        match outcome {
            SearchOutcome::Yes { script, vertex_map } => relabel(&replay_script(script).unwrap(), vertex_map).unwrap() == *h,
            _ => false,
        }
    }

    #[test]
    fn k4_minus_edge_is_generalized_chordal() {
        let h = Hypergraph::from_lists(4, 3, &[&[0, 1, 2], &[0, 2, 3], &[0, 1, 3]]).unwrap();
        let out = is_generalized_chordal_search(&h, 10_000);
        assert!(certified(&h, &out), "{out:?}");
        assert!(matches!(is_chordal_search(&h, 10_000), SearchOutcome::No { .. }));
    }

    #[test]
    fn complete_needs_no_moves() {
        let h = make_complete(5, 3).unwrap();
        match is_chordal_search(&h, 1) {
            SearchOutcome::Yes { script, .. } => assert_eq!(script.moves, vec![Move::Start { n: 5, d: 3 }]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bipartite_complement_is_chordal() {
        let h = make_complete_bipartite(3, 4, 3).unwrap().complement();
        let out = is_chordal_search(&h, 10_000);
        assert!(certified(&h, &out));
    }

    #[test]
    fn four_cycle_is_not_generalized_chordal() {
        let h = Hypergraph::from_lists(4, 2, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]).unwrap();
        assert!(matches!(is_generalized_chordal_search(&h, 10_000), SearchOutcome::No { .. }));
        assert!(matches!(is_generalized_chordal_search(&h, 0), SearchOutcome::Inconclusive { .. }));
    }

    #[test]
    fn labels_survive_the_round_trip() {
        let h = Hypergraph::new(
            VertexSet::from_iter([2, 5, 9, 11]),
            2,
            [VertexSet::from_iter([2, 9]), VertexSet::from_iter([9, 11]), VertexSet::from_iter([5, 11])],
        )
        .unwrap();
        let out = is_chordal_search(&h, 1_000);
        assert!(certified(&h, &out), "{out:?}");
    }
}
