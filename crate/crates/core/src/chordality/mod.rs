//! Recognizers for chordal d-uniform hypergraphs: the brute-force
//! triangulated and triangulated* tests, greedy perfect elimination, and an
//! independent order checker.
//!
//! Inside a vertex subset `V`, the neighborhood of `x` is taken in the
//! induced hypergraph `H_V`. The literal alternative, `N[x] ∩ V` with `N[x]`
//! computed in all of `H`, is available through [`NeighborhoodRule::Ambient`]
//! for experiments; it does not characterize the glued hypergraphs (see
//! `ambient_rule_rejects_a_glued_hypergraph` below).

pub mod generate;
pub mod script;
pub mod search;

use serde::Serialize;

use crate::complex::flag_complex_of;
use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{binomial, VertexSet};
use crate::Limits;

pub use generate::{random_generalized_chordal, MoveMix};
pub use script::{replay_script, ConstructionScript, Move};
pub use search::{is_chordal_search, is_generalized_chordal_search, SearchOutcome};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum NeighborhoodRule {
    /// Closed neighborhood inside the induced hypergraph.
    #[default]
    Induced,
    /// Closed neighborhood in the whole hypergraph, intersected afterwards.
    Ambient,
}

impl NeighborhoodRule {
    fn closed(self, h: &Hypergraph, x: usize, within: VertexSet) -> VertexSet {
        match self {
            NeighborhoodRule::Induced => h.neighborhood_within_unchecked(x, within),
            NeighborhoodRule::Ambient => h.neighbors_unchecked(x).intersection(within),
        }
    }
}

/// Why vertex `x` may be eliminated from the remaining set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// The remaining hypergraph is d-complete on this neighborhood.
    Complete {
        #[serde(serialize_with = "serialize_set")]
        neighborhood: VertexSet,
    },
    Isolated,
}

fn serialize_set<S: serde::Serializer>(v: &VertexSet, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EliminationOrder {
    pub order: Vec<usize>,
    pub certificates: Vec<Certificate>,
}

/// Greedy elimination got stuck: no vertex of `witness` qualifies while
/// `H_witness` still has edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeoFailure {
    #[serde(serialize_with = "serialize_set")]
    pub witness: VertexSet,
    /// The vertices eliminated before getting stuck.
    pub prefix: Vec<usize>,
}

/// The first vertex of `v` that qualifies for elimination.
fn eliminable(h: &Hypergraph, v: VertexSet, rule: NeighborhoodRule) -> Option<(usize, Certificate)> {
    v.iter().find_map(|x| {
        let nb = rule.closed(h, x, v);
        if h.is_complete_on(nb) {
            Some((x, Certificate::Complete { neighborhood: nb }))
        } else if h.is_isolated_within(x, v) {
            Some((x, Certificate::Isolated))
        } else {
            None
        }
    })
}

/// Greedy perfect elimination, smallest qualifying id first.
pub fn find_peo(h: &Hypergraph) -> std::result::Result<EliminationOrder, PeoFailure> {
    find_peo_with(h, NeighborhoodRule::Induced)
}

pub fn find_peo_with(h: &Hypergraph, rule: NeighborhoodRule) -> std::result::Result<EliminationOrder, PeoFailure> {
    let mut remaining = h.vertices();
    let mut order = Vec::with_capacity(h.n());
    let mut certificates = Vec::with_capacity(h.n());
    while !remaining.is_empty() {
        match eliminable(h, remaining, rule) {
            Some((x, cert)) => {
                order.push(x);
                certificates.push(cert);
                remaining = remaining.without(x);
            }
            None => return Err(PeoFailure { witness: remaining, prefix: order }),
        }
    }
    Ok(EliminationOrder { order, certificates })
}

pub fn is_chordal(h: &Hypergraph) -> bool {
    find_peo(h).is_ok()
}

/// The first nonempty `V` (in bitmask order) on which the triangulated
/// condition fails.
pub fn triangulated_witness(h: &Hypergraph, rule: NeighborhoodRule, limits: &Limits) -> Result<Option<VertexSet>> {
    limits.check(h.n())?;
    Ok(h.vertices().subsets().skip(1).find(|&v| h.edges_within(v).next().is_some() && !v.iter().any(|x| h.is_complete_on(rule.closed(h, x, v)))))
}

pub fn is_triangulated_bruteforce(h: &Hypergraph, limits: &Limits) -> Result<bool> {
    Ok(triangulated_witness(h, NeighborhoodRule::Induced, limits)?.is_none())
}

/// Same shape as [`triangulated_witness`], but the neighborhood test goes
/// through the flag complex: `N ∩ V` must be a facet of `(Δ_H)_V` with at
/// least `d` vertices.
pub fn triangulated_star_witness(h: &Hypergraph, rule: NeighborhoodRule, limits: &Limits) -> Result<Option<VertexSet>> {
    limits.check(h.n())?;
    let flag = flag_complex_of(h, limits)?;
    let d = h.d();
    let is_facet_within = |f: VertexSet, v: VertexSet| {
        flag.is_face(f) && v.difference(f).iter().all(|y| !flag.is_face(f.with(y)))
    };
    Ok(h.vertices().subsets().skip(1).find(|&v| {
        h.edges_within(v).next().is_some()
            && !v.iter().any(|x| {
                let nb = rule.closed(h, x, v);
                nb.len() >= d && is_facet_within(nb, v)
            })
    }))
}

pub fn is_triangulated_star_bruteforce(h: &Hypergraph, limits: &Limits) -> Result<bool> {
    Ok(triangulated_star_witness(h, NeighborhoodRule::Induced, limits)?.is_none())
}

/// Where and why an order fails to be a perfect elimination order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderViolation {
    pub position: usize,
    pub reason: String,
}

/// Re-checks an order from scratch, scanning the edge list directly rather
/// than trusting any stored certificate.
pub fn verify_elimination_order(h: &Hypergraph, order: &[usize]) -> std::result::Result<(), OrderViolation> {
    let fail = |position: usize, reason: String| Err(OrderViolation { position, reason });
    let as_set: Option<VertexSet> = VertexSet::try_from_iter(order.iter().copied()).ok();
    if order.len() != h.n() || as_set != Some(h.vertices()) {
        return fail(0, "not a permutation of the vertex set".into());
    }
    let d = h.d();
    for (pos, &x) in order.iter().enumerate() {
        let rest: VertexSet = order[pos..].iter().copied().collect();
        let through_x: Vec<VertexSet> = h.edges().iter().copied().filter(|e| e.contains(x) && e.is_subset(rest)).collect();
        if through_x.is_empty() {
            continue;
        }
        let nb = through_x.iter().fold(VertexSet::EMPTY, |acc, &e| acc.union(e));
        let inside = h.edges().iter().filter(|e| e.is_subset(nb)).count() as u64;
        if inside != binomial(nb.len(), d) {
            return fail(pos, format!("vertex {x}: {inside} of {} d-subsets of {nb} are edges", binomial(nb.len(), d)));
        }
    }
    Ok(())
}

/// Moves the leading run of isolated vertices to the end, so that the first
/// vertex of the result is not isolated. Returns `None` when every vertex was
/// eliminated as isolated.
pub fn rotate_non_isolated_first(peo: &EliminationOrder) -> Option<EliminationOrder> {
    let t = peo.certificates.iter().position(|c| matches!(c, Certificate::Complete { .. }))?;
    let mut order = peo.order.clone();
    let mut certificates = peo.certificates.clone();
    order.rotate_left(t);
    certificates.rotate_left(t);
    Some(EliminationOrder { order, certificates })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{make_complete, make_complete_bipartite};

    fn s(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    fn k4_minus_edge() -> Hypergraph {
        Hypergraph::from_lists(4, 3, &[&[0, 1, 2], &[0, 2, 3], &[0, 1, 3]]).unwrap()
    }

    fn glued_triples() -> Hypergraph {
        Hypergraph::from_lists(5, 3, &[&[0, 1, 2], &[0, 3, 4], &[1, 2, 3]]).unwrap()
    }

    #[test]
    fn complete_hypergraphs_are_chordal() {
        for (n, d) in [(1, 3), (3, 3), (5, 3), (6, 2), (4, 4)] {
            let k = make_complete(n, d).unwrap();
            let peo = find_peo(&k).unwrap();
            assert_eq!(peo.order, (0..n).collect::<Vec<_>>());
            assert!(is_triangulated_bruteforce(&k, &lim()).unwrap());
            assert!(is_triangulated_star_bruteforce(&k, &lim()).unwrap());
        }
    }

    #[test]
    fn k4_minus_edge_is_not_chordal() {
        let h = k4_minus_edge();
        let fail = find_peo(&h).unwrap_err();
        assert_eq!(fail.witness, s(&[0, 1, 2, 3]));
        assert!(fail.prefix.is_empty());
        assert!(!is_triangulated_bruteforce(&h, &lim()).unwrap());
        assert!(!is_triangulated_star_bruteforce(&h, &lim()).unwrap());
    }

    #[test]
    fn bipartite_not_chordal_complement_chordal() {
        let k = make_complete_bipartite(3, 2, 3).unwrap();
        assert!(!is_chordal(&k));
        assert!(!is_triangulated_bruteforce(&k, &lim()).unwrap());
        assert!(is_chordal(&k.complement()));
    }

    #[test]
    fn ambient_rule_rejects_a_glued_hypergraph() {
        // K_3^3 on 012, glue 123 along 12, glue 034 along 03
        let h = glued_triples();
        assert!(is_chordal(&h));
        assert!(is_triangulated_bruteforce(&h, &lim()).unwrap());
        assert!(find_peo_with(&h, NeighborhoodRule::Ambient).is_err());
        assert!(triangulated_witness(&h, NeighborhoodRule::Ambient, &lim()).unwrap().is_some());
    }

    #[test]
    fn ambient_rule_splits_the_recognizers() {
        // abc plus three pendant edges z-a-p, z-b-q, z-c-r:
        // a = 0, b = 1, c = 2, z = 3, p = 4, q = 5, r = 6
        let h = Hypergraph::from_lists(7, 3, &[&[0, 1, 2], &[0, 3, 4], &[1, 3, 5], &[2, 3, 6]]).unwrap();
        let order = [4, 5, 6, 3, 0, 1, 2];
        assert!(verify_elimination_order(&h, &order).is_ok());
        let w = triangulated_witness(&h, NeighborhoodRule::Ambient, &lim()).unwrap();
        assert_eq!(w, Some(s(&[0, 1, 2, 3])));
        assert!(is_triangulated_bruteforce(&h, &lim()).unwrap());
    }

    #[test]
    fn verifier_catches_bad_orders() {
        let h = k4_minus_edge();
        let v = verify_elimination_order(&h, &[0, 1, 2, 3]).unwrap_err();
        assert_eq!(v.position, 0);
        assert!(verify_elimination_order(&h, &[0, 1, 2]).is_err());
        assert!(verify_elimination_order(&h, &[0, 1, 2, 2]).is_err());
    }

    #[test]
    fn rotation_puts_a_simplicial_vertex_first() {
        let h = Hypergraph::from_lists(4, 2, &[&[2, 3]]).unwrap();
        let peo = find_peo(&h).unwrap();
        assert_eq!(peo.order, vec![0, 1, 2, 3]);
        let rotated = rotate_non_isolated_first(&peo).unwrap();
        assert_eq!(rotated.order, vec![2, 3, 0, 1]);
        assert!(verify_elimination_order(&h, &rotated.order).is_ok());
        let empty = Hypergraph::from_lists(2, 2, &[]).unwrap();
        assert!(rotate_non_isolated_first(&find_peo(&empty).unwrap()).is_none());
    }

    #[test]
    fn peo_certificates_are_recorded() {
        let h = Hypergraph::from_lists(4, 2, &[&[0, 1], &[1, 2], &[2, 3]]).unwrap();
        let peo = find_peo(&h).unwrap();
        assert_eq!(peo.order, vec![0, 1, 2, 3]);
        assert_eq!(peo.certificates[0], Certificate::Complete { neighborhood: s(&[0, 1]) });
        assert_eq!(peo.certificates[3], Certificate::Isolated);
    }
}
