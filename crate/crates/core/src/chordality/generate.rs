//! Seeded random generalized chordal hypergraphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::script::{apply_move, has_uncovered_facet, replay_script, ConstructionScript, Move};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Relative weights of the two growth moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MoveMix {
    pub glue: u32,
    pub add_edge: u32,
}

impl Default for MoveMix {
    fn default() -> Self {
        MoveMix { glue: 2, add_edge: 1 }
    }
}

const EDGE_TRIES: usize = 64;

/// A random d-complete vertex set: an edge grown greedily in random order.
fn random_clique(h: &Hypergraph, rng: &mut ChaCha8Rng) -> VertexSet {
    let Some(&start) = h.edges().choose(rng) else {
        return VertexSet::EMPTY;
    };
    let mut others: Vec<usize> = h.vertices().difference(start).to_vec();
    others.shuffle(rng);
    let mut clique = start;
    for y in others {
        if h.is_complete_on(clique.with(y)) {
            clique = clique.with(y);
        }
    }
    clique
}

fn random_subset(from: VertexSet, size: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut v = from.to_vec();
    v.shuffle(rng);
    v.truncate(size);
    v.sort_unstable();
    v
}

fn random_glue(h: &Hypergraph, n_target: usize, rng: &mut ChaCha8Rng) -> Move {
    let d = h.d();
    let fresh = rng.gen_range(1..=(n_target - h.n()).min(d + 1));
    let overlap = if rng.gen_bool(0.5) {
        let clique = random_clique(h, rng);
        let j = rng.gen_range(0..=clique.len());
        random_subset(clique, j, rng)
    } else {
        let j = rng.gen_range(0..=h.n().min(d - 1));
        random_subset(h.vertices(), j, rng)
    };
    Move::Glue { i: overlap.len() + fresh, overlap }
}

fn random_add_edge(h: &Hypergraph, rng: &mut ChaCha8Rng) -> Option<Move> {
    let d = h.d();
    if h.n() < d {
        return None;
    }
    (0..EDGE_TRIES).find_map(|_| {
        let e: VertexSet = random_subset(h.vertices(), d, rng).into_iter().collect();
        (!h.has_edge(e) && has_uncovered_facet(h, e)).then(|| Move::AddEdge { edge: e.to_vec() })
    })
}

/// Samples a construction script move by move until the hypergraph has
/// `n_target` vertices, then possibly a few trailing edge additions.
pub fn random_generalized_chordal(n_target: usize, d: usize, seed: u64, mix: MoveMix) -> Result<(Hypergraph, ConstructionScript)> {
    if d < 2 || n_target < d {
        return Err(Error::Input(format!("need d >= 2 and n >= d, got n = {n_target}, d = {d}")));
    }
    if n_target > MAX_VERTICES {
        return Err(Error::TooManyVertices { n: n_target });
    }
    if mix.glue == 0 && mix.add_edge == 0 {
        return Err(Error::Input("move weights are both zero".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = Move::Start { n: rng.gen_range(1..=(d + 1).min(n_target)), d };
    let mut moves = vec![start];
    let mut h = replay_script(&ConstructionScript::new(moves.clone()))?;
    let total = mix.glue + mix.add_edge;
    loop {
        let growing = h.n() < n_target;
        if !growing && (mix.add_edge == 0 || rng.gen_bool(0.5)) {
            break;
        }
        let want_edge = rng.gen_range(0..total) < mix.add_edge;
        let m = match (want_edge, growing) {
            (true, _) => match random_add_edge(&h, &mut rng) {
                Some(m) => m,
                None if growing => random_glue(&h, n_target, &mut rng),
                None => break,
            },
            (false, true) => random_glue(&h, n_target, &mut rng),
            (false, false) => continue,
        };
        h = apply_move(&h, &m, moves.len())?;
        moves.push(m);
    }
    Ok((h, ConstructionScript::new(moves)))
}
