//! Betti numbers of Stanley–Reisner rings through Hochster's formula
//! `β_{i,V}(R/I_Δ) = dim H̃_{|V|-i-1}(Δ_V)`, together with a linear
//! resolution test, a Reisner-criterion Cohen–Macaulay check, and the
//! Eagon–Reiner comparison between the two.
//!
//! Subsets `V` of the ground set are addressed by an index in
//! `0..2^n` whose bit `k` selects the `k`-th smallest ground vertex. Work is
//! split into contiguous index ranges, one per worker, and merged in range
//! order, so results never depend on the worker count.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::Serialize;

use crate::complex::{alexander_dual, link, minimal_nonfaces, SimplicialComplex};
use crate::error::Result;
use crate::homology::{homology_from_faces, reduced_homology, FieldSpec, HomologyDims};
use crate::vertex_set::VertexSet;
use crate::Limits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    ground: VertexSet,
    /// Nonzero `β_{i,V}` only.
    multigraded: BTreeMap<(usize, VertexSet), usize>,
    /// Nonzero `β_{i,j}` only.
    graded: BTreeMap<(usize, usize), usize>,
}

impl BettiTable {
    fn from_multigraded(ground: VertexSet, multigraded: BTreeMap<(usize, VertexSet), usize>) -> Self {
        let mut graded = BTreeMap::new();
        for (&(i, v), &b) in &multigraded {
            *graded.entry((i, v.len())).or_insert(0) += b;
        }
        BettiTable { ground, multigraded, graded }
    }

    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    pub fn multigraded(&self, i: usize, v: VertexSet) -> usize {
        self.multigraded.get(&(i, v)).copied().unwrap_or(0)
    }

    pub fn graded(&self, i: usize, j: usize) -> usize {
        self.graded.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> usize {
        self.graded.range((i, 0)..=(i, usize::MAX)).map(|(_, b)| b).sum()
    }

    pub fn multigraded_entries(&self) -> impl Iterator<Item = (usize, VertexSet, usize)> + '_ {
        self.multigraded.iter().map(|(&(i, v), &b)| (i, v, b))
    }

    pub fn graded_entries(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.graded.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    /// Largest homological index with a nonzero entry.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.graded.keys().map(|&(i, _)| i).max()
    }

    /// Reads linearity straight off the graded table: the generators
    /// (`i = 1`) must share one degree `d`, and every entry with `i > 0` must
    /// sit in degree `i + d - 1`. `None` when there are no generators.
    pub fn linear_degree(&self) -> Option<(bool, usize)> {
        let gens: Vec<usize> = self.graded.keys().filter(|&&(i, _)| i == 1).map(|&(_, j)| j).collect();
        let &d = gens.first()?;
        if gens.len() > 1 {
            return Some((false, d));
        }
        let linear = self.graded.keys().all(|&(i, j)| i == 0 || j + 1 == i + d);
        Some((linear, d))
    }

    /// Rows `i`, columns `j - i`, as in a Betti diagram turned on its side.
    pub fn diagram(&self) -> String {
        let max_i = self.projective_dimension().unwrap_or(0);
        let max_shift = self.graded.keys().map(|&(i, j)| j - i).max().unwrap_or(0);
        let cell = |x: usize| if x == 0 { ".".to_string() } else { x.to_string() };
        let width = self.graded.values().map(|b| b.to_string().len()).max().unwrap_or(1).max(max_shift.to_string().len());
        let mut out = format!("{:>4} |", "i");
        for s in 0..=max_shift {
            out.push_str(&format!(" {:>width$}", s));
        }
        out.push('\n');
        out.push_str(&format!("{}\n", "-".repeat(6 + (width + 1) * (max_shift + 1))));
        for i in 0..=max_i {
            out.push_str(&format!("{:>4} |", i));
            for s in 0..=max_shift {
                out.push_str(&format!(" {:>width$}", cell(self.graded(i, i + s))));
            }
            out.push('\n');
        }
        out.push_str(&format!("total:{}\n", (0..=max_i).map(|i| format!(" {}", self.total(i))).collect::<String>()));
        out
    }
}

impl BettiTable {
    /// `{"graded": {"i,j": b}, "total": {"i": b}}` with keys in numeric
    /// order, optionally with every multigraded entry.
    pub fn to_json(&self, with_multigraded: bool) -> serde_json::Value {
        use serde_json::{json, Map, Value};
        let graded: Map<String, Value> = self.graded.iter().map(|(&(i, j), &b)| (format!("{i},{j}"), json!(b))).collect();
        let max_i = self.projective_dimension().unwrap_or(0);
        let total: Map<String, Value> = (0..=max_i).map(|i| (i.to_string(), json!(self.total(i)))).collect();
        let mut out = Map::new();
        out.insert("graded".into(), Value::Object(graded));
        out.insert("total".into(), Value::Object(total));
        if with_multigraded {
            let entries: Vec<Value> =
                self.multigraded.iter().map(|(&(i, v), &b)| json!({"i": i, "subset": v.to_vec(), "value": b})).collect();
            out.insert("multigraded".into(), Value::from(entries));
        }
        Value::Object(out)
    }
}

/// Faces of a complex kept in (size, lex) order so that restricting to a
/// subset `V` is a filter that preserves the order.
struct FacePool {
    faces: Vec<VertexSet>,
}

impl FacePool {
    fn new(c: &SimplicialComplex) -> Self {
        FacePool { faces: c.faces() }
    }

    fn restricted(&self, v: VertexSet) -> Vec<Vec<VertexSet>> {
        let mut by_size: Vec<Vec<VertexSet>> = Vec::new();
        for &f in &self.faces {
            if f.is_subset(v) {
                if by_size.len() <= f.len() {
                    by_size.resize_with(f.len() + 1, Vec::new);
                }
                by_size[f.len()].push(f);
            }
        }
        by_size
    }

    fn homology(&self, v: VertexSet, field: FieldSpec) -> HomologyDims {
        homology_from_faces(&self.restricted(v), field)
    }
}

/// Splits `0..total` into `workers` contiguous ranges.
fn chunks(total: u64, workers: usize) -> Vec<(u64, u64)> {
    let w = (workers.max(1) as u64).min(total.max(1));
    let step = total.div_ceil(w);
    (0..w).map(|k| (k * step, ((k + 1) * step).min(total))).filter(|(a, b)| a < b).collect()
}

/// Every multigraded Betti number of `R/I_Δ` by Hochster's formula.
pub fn hochster_betti(c: &SimplicialComplex, field: FieldSpec, limits: &Limits) -> Result<BettiTable> {
    let ground = c.ground();
    limits.check(ground.len())?;
    let pool = FacePool::new(c);
    let total = 1u64 << ground.len();

    let work = |(lo, hi): (u64, u64)| -> Vec<((usize, VertexSet), usize)> {
        let mut out = Vec::new();
        for index in lo..hi {
            let v = ground.deposit(index);
            let h = pool.homology(v, field);
            for (degree, dim) in h.iter() {
                if dim > 0 {
                    let i = (v.len() as isize - degree - 1) as usize;
                    out.push(((i, v), dim));
                }
            }
        }
        out
    };

    let ranges = chunks(total, limits.workers);
    let parts: Vec<Vec<_>> = if ranges.len() <= 1 {
        ranges.into_iter().map(work).collect()
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = ranges.into_iter().map(|r| scope.spawn(move || work(r))).collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        })
    };
    let multigraded = parts.into_iter().flatten().collect();
    Ok(BettiTable::from_multigraded(ground, multigraded))
}

/// Why a resolution fails to be linear.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LinearityWitness {
    /// `H̃_degree(Δ_subset)` is nonzero off the linear strand.
    Homology {
        #[serde(serialize_with = "serialize_set")]
        subset: VertexSet,
        degree: isize,
        dim: usize,
    },
    /// Two minimal non-faces of different sizes.
    MixedGenerators {
        #[serde(serialize_with = "serialize_set")]
        smaller: VertexSet,
        #[serde(serialize_with = "serialize_set")]
        larger: VertexSet,
    },
}

fn serialize_set<S: serde::Serializer>(v: &VertexSet, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearityReport {
    pub linear: bool,
    /// Common generator degree, when the generators share one.
    pub d: Option<usize>,
    /// Set when the ideal is zero (full simplex) or the unit ideal (void
    /// complex); such rings count as linear by convention.
    pub trivial: bool,
    pub witness: Option<LinearityWitness>,
}

/// Decides whether `R/I_Δ` has a linear resolution.
///
/// The degree `d` is the common size of the minimal non-faces. Linearity
/// then means `H̃_r(Δ_V) = 0` for every `V` and every `r ≠ d - 2` in the
/// range `r <= |V| - 2` (the `i > 0` part of Hochster's formula). Subsets are
/// visited by size, smallest first, and the search stops at the first
/// off-strand class.
pub fn has_linear_resolution(c: &SimplicialComplex, field: FieldSpec, limits: &Limits) -> Result<LinearityReport> {
    let ground = c.ground();
    limits.check(ground.len())?;
    let mut gens = minimal_nonfaces(c, limits)?;
    if gens.is_empty() || c.is_void() {
        return Ok(LinearityReport { linear: true, d: None, trivial: true, witness: None });
    }
    gens.sort_by_key(|g| g.len());
    let (first, last) = (gens[0], gens[gens.len() - 1]);
    if first.len() != last.len() {
        return Ok(LinearityReport {
            linear: false,
            d: None,
            trivial: false,
            witness: Some(LinearityWitness::MixedGenerators { smaller: first, larger: last }),
        });
    }
    let d = first.len();
    let strand = d as isize - 2;
    let pool = FacePool::new(c);

    let check = |v: VertexSet| -> Option<LinearityWitness> {
        let h = pool.homology(v, field);
        let hit = h.iter().find(|&(r, dim)| dim > 0 && r != strand && r <= v.len() as isize - 2);
        hit.map(|(r, dim)| LinearityWitness::Homology { subset: v, degree: r, dim })
    };

    for size in 0..=ground.len() {
        let level: Vec<VertexSet> = ground.subsets_of_size(size).collect();
        if let Some(w) = first_hit(&level, limits.workers, &check) {
            return Ok(LinearityReport { linear: false, d: Some(d), trivial: false, witness: Some(w) });
        }
    }
    Ok(LinearityReport { linear: true, d: Some(d), trivial: false, witness: None })
}

/// The first item (in slice order) for which `f` returns `Some`, evaluated
/// across workers. Worker `k` stops as soon as some earlier worker has a hit.
fn first_hit<T, F>(items: &[VertexSet], workers: usize, f: &F) -> Option<T>
where
    T: Send,
    F: Fn(VertexSet) -> Option<T> + Sync,
{
    let ranges = chunks(items.len() as u64, workers);
    if ranges.len() <= 1 {
        return items.iter().find_map(|&v| f(v));
    }
    let best = AtomicUsize::new(usize::MAX);
    let results: Vec<Option<T>> = std::thread::scope(|scope| {
        let best = &best;
        let handles: Vec<_> = ranges
            .iter()
            .enumerate()
            .map(|(k, &(lo, hi))| {
                scope.spawn(move || {
                    for &v in &items[lo as usize..hi as usize] {
                        if best.load(Ordering::Relaxed) < k {
                            return None;
                        }
                        if let Some(t) = f(v) {
                            best.fetch_min(k, Ordering::Relaxed);
                            return Some(t);
                        }
                    }
                    None
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    results.into_iter().flatten().next()
}

/// A face whose link has homology below its top dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReisnerObstruction {
    #[serde(serialize_with = "serialize_set")]
    pub face: VertexSet,
    pub degree: isize,
    pub dim: usize,
}

/// Reisner's criterion; `None` means Cohen–Macaulay. The void complex has
/// no faces to test and passes, which keeps it dual to the full simplex.
pub fn reisner_obstruction(c: &SimplicialComplex, field: FieldSpec, limits: &Limits) -> Result<Option<ReisnerObstruction>> {
    limits.check(c.ground().len())?;
    for face in c.faces() {
        let lk = link(c, face)?;
        let top = lk.dimension().expect("link of a face is not void");
        let h = reduced_homology(&lk, field, limits)?;
        let hit = h.iter().find(|&(i, dim)| i < top && dim > 0);
        if let Some((degree, dim)) = hit {
            return Ok(Some(ReisnerObstruction { face, degree, dim }));
        }
    }
    Ok(None)
}

pub fn is_cohen_macaulay(c: &SimplicialComplex, field: FieldSpec, limits: &Limits) -> Result<bool> {
    Ok(reisner_obstruction(c, field, limits)?.is_none())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EagonReinerReport {
    pub cohen_macaulay: bool,
    pub dual_linear: bool,
    pub agree: bool,
    pub dual_report: LinearityReport,
}

/// Runs both sides of the Eagon–Reiner equivalence: Cohen–Macaulayness of
/// `Δ` by Reisner's criterion and linearity of the dual by Hochster.
pub fn eagon_reiner_verify(c: &SimplicialComplex, field: FieldSpec, limits: &Limits) -> Result<EagonReinerReport> {
    let cm = is_cohen_macaulay(c, field, limits)?;
    let dual = alexander_dual(c, limits)?;
    let report = has_linear_resolution(&dual, field, limits)?;
    Ok(EagonReinerReport { cohen_macaulay: cm, dual_linear: report.linear, agree: cm == report.linear, dual_report: report })
}
