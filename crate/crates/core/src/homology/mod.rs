//! Reduced simplicial homology over a prime field or the rationals.
//!
//! The chain complex always includes the empty face in degree −1 (for
//! non-void complexes), with augmentation `∂_0` sending every vertex to `∅`.
//! Faces of each size are ordered lexicographically and a boundary entry is
//! `(-1)^k` when the removed vertex sits at position `k`.

mod rank;

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use crate::Limits;

/// A prime below 2^31, so that products of residues fit in a `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime { p });
        }
        Ok(Prime(p as u32))
    }

    pub fn get(self) -> u64 {
        self.0 as u64
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2;
    while q * q <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime(Prime),
    Rationals,
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec::Prime(Prime(2));

    pub fn gf(p: u64) -> Result<Self> {
        Prime::new(p).map(FieldSpec::Prime)
    }

    /// 0 for the rationals.
    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Prime(p) => p.get(),
            FieldSpec::Rationals => 0,
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::GF2
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// `gf2`, `gf<p>`, `q` (also `qq`, `rationals`).
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "q" | "qq" | "rationals" => return Ok(FieldSpec::Rationals),
            _ => {}
        }
        let digits = lower.strip_prefix("gf").ok_or_else(|| Error::UnknownField(s.to_string()))?;
        let p: u64 = digits.parse().map_err(|_| Error::UnknownField(s.to_string()))?;
        FieldSpec::gf(p)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "gf{}", p.get()),
            FieldSpec::Rationals => f.write_str("q"),
        }
    }
}

/// Matrix of a boundary map, stored column by column. Rows index the faces
/// one dimension down; entries are ±1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    rows: usize,
    columns: Vec<Vec<(u32, i8)>>,
}

impl BoundaryMatrix {
    /// `columns[c]` lists `(row, ±1)` pairs.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(u32, i8)>>) -> Self {
        BoundaryMatrix { rows, columns }
    }

    /// Boundary map from the faces in `upper` (all of one size `k >= 1`) to
    /// the faces in `lower` (size `k - 1`). Both slices must be sorted.
    pub fn between(lower: &[VertexSet], upper: &[VertexSet]) -> Self {
        let columns = upper
            .iter()
            .map(|face| {
                face.iter()
                    .enumerate()
                    .map(|(k, v)| {
                        let row = lower.binary_search(&face.without(v)).expect("complex is closed under subsets");
                        (row as u32, if k % 2 == 0 { 1 } else { -1 })
                    })
                    .collect()
            })
            .collect();
        BoundaryMatrix { rows: lower.len(), columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> i8 {
        self.columns[col].iter().find(|(r, _)| *r as usize == row).map_or(0, |(_, s)| *s)
    }

    pub fn rank(&self, field: FieldSpec) -> usize {
        match field {
            FieldSpec::Prime(p) => rank::rank_mod_p(self, p.get()),
            FieldSpec::Rationals => rank::rank_rational(self),
        }
    }

    /// True iff `self ∘ next` is the zero matrix over `field`, where `next`
    /// maps into the domain of `self`.
    pub fn composition_vanishes(&self, next: &BoundaryMatrix, field: FieldSpec) -> bool {
        assert_eq!(self.cols(), next.rows, "incompatible boundary maps");
        let modulus = field.characteristic() as i64;
        let mut acc = vec![0i64; self.rows];
        for col in &next.columns {
            acc.iter_mut().for_each(|x| *x = 0);
            for &(k, s2) in col {
                for &(r, s1) in &self.columns[k as usize] {
                    acc[r as usize] += (s1 as i64) * (s2 as i64);
                }
            }
            let nonzero = |x: &i64| if modulus == 0 { *x != 0 } else { x.rem_euclid(modulus) != 0 };
            if acc.iter().any(nonzero) {
                return false;
            }
        }
        true
    }
}

/// All boundary maps of the reduced chain complex; entry `r` is
/// `∂_r : C_r → C_{r-1}` for `r = 0..=dim` (so entry 0 is the augmentation).
pub fn boundary_matrices(c: &SimplicialComplex, limits: &Limits) -> Result<Vec<BoundaryMatrix>> {
    limits.check(c.ground().len())?;
    let by_size = c.faces_by_size();
    Ok((1..by_size.len()).map(|k| BoundaryMatrix::between(&by_size[k - 1], &by_size[k])).collect())
}

/// `dim_k H̃_i` for `i = -1, 0, 1, ...`; degrees beyond the stored range are 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologyDims {
    /// `dims[i + 1]` is the dimension in degree `i`.
    dims: Vec<usize>,
}

impl HomologyDims {
    pub fn get(&self, degree: isize) -> usize {
        if degree < -1 {
            return 0;
        }
        self.dims.get((degree + 1) as usize).copied().unwrap_or(0)
    }

    /// `(degree, dimension)` pairs from −1 up to the top stored degree.
    pub fn iter(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.dims.iter().enumerate().map(|(i, &d)| (i as isize - 1, d))
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Alternating sum `Σ (-1)^i dim H̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter().map(|(i, d)| if i.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) }).sum()
    }

    /// Degrees with nonzero homology.
    pub fn support(&self) -> impl Iterator<Item = isize> + '_ {
        self.iter().filter(|&(_, d)| d > 0).map(|(i, _)| i)
    }
}

impl Serialize for HomologyDims {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.dims.len()))?;
        for (i, d) in self.iter() {
            map.serialize_entry(&i.to_string(), &d)?;
        }
        map.end()
    }
}

/// Reduced homology of the complex whose faces, grouped by size, are given.
/// `by_size[k]` must be sorted and closed under taking subsets; an empty
/// slice is the void complex.
pub(crate) fn homology_from_faces(by_size: &[Vec<VertexSet>], field: FieldSpec) -> HomologyDims {
    if by_size.is_empty() {
        return HomologyDims { dims: vec![0] };
    }
    // rank_out[k] = rank of the boundary from size-k faces to size-(k-1) faces
    let mut rank_out = vec![0usize; by_size.len() + 1];
    for k in 1..by_size.len() {
        rank_out[k] = BoundaryMatrix::between(&by_size[k - 1], &by_size[k]).rank(field);
    }
    let dims = (0..by_size.len()).map(|k| by_size[k].len() - rank_out[k] - rank_out[k + 1]).collect();
    HomologyDims { dims }
}

pub fn reduced_homology(c: &SimplicialComplex, field: FieldSpec, limits: &Limits) -> Result<HomologyDims> {
    limits.check(c.ground().len())?;
    Ok(homology_from_faces(&c.faces_by_size(), field))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{cone, skeleton};

    fn s(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::new(s(&[0, 1, 2]), [s(&[0, 1]), s(&[0, 2]), s(&[1, 2])]).unwrap()
    }

    #[test]
    fn field_parsing() {
        assert_eq!("gf2".parse::<FieldSpec>().unwrap(), FieldSpec::GF2);
        assert_eq!("GF3".parse::<FieldSpec>().unwrap().characteristic(), 3);
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("gf4".parse::<FieldSpec>(), Err(Error::NotPrime { p: 4 }));
        assert!(matches!("r".parse::<FieldSpec>(), Err(Error::UnknownField(_))));
        assert_eq!(FieldSpec::gf(7).unwrap().to_string(), "gf7");
    }

    #[test]
    fn hollow_triangle_is_a_circle() {
        for field in [FieldSpec::GF2, FieldSpec::gf(3).unwrap(), FieldSpec::Rationals] {
            let h = reduced_homology(&hollow_triangle(), field, &lim()).unwrap();
            assert_eq!((h.get(-1), h.get(0), h.get(1)), (0, 0, 1));
        }
    }

    #[test]
    fn simplex_is_acyclic() {
        for n in 1..=6 {
            let c = SimplicialComplex::simplex(VertexSet::range(n).unwrap());
            assert!(reduced_homology(&c, FieldSpec::GF2, &lim()).unwrap().is_acyclic());
        }
    }

    #[test]
    fn two_points() {
        let c = SimplicialComplex::new(s(&[0, 1]), [s(&[0]), s(&[1])]).unwrap();
        let h = reduced_homology(&c, FieldSpec::Rationals, &lim()).unwrap();
        assert_eq!(h.get(0), 1);
        assert_eq!(h.support().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn void_and_empty_conventions() {
        let v = reduced_homology(&SimplicialComplex::void(s(&[0])), FieldSpec::GF2, &lim()).unwrap();
        assert!(v.is_acyclic());
        let e = reduced_homology(&SimplicialComplex::empty(s(&[0])), FieldSpec::GF2, &lim()).unwrap();
        assert_eq!(e.get(-1), 1);
        assert_eq!(serde_json::to_string(&e).unwrap(), r#"{"-1":1}"#);
    }

    #[test]
    fn boundary_of_hollow_triangle() {
        let by_size = hollow_triangle().faces_by_size();
        let d1 = BoundaryMatrix::between(&by_size[1], &by_size[2]);
        assert_eq!((d1.rows(), d1.cols()), (3, 3));
        // edge {0,1}: +{1} −{0}
        assert_eq!((d1.entry(0, 0), d1.entry(1, 0)), (-1, 1));
        assert_eq!(d1.rank(FieldSpec::GF2), 2);
        assert_eq!(d1.rank(FieldSpec::Rationals), 2);
        let d0 = BoundaryMatrix::between(&by_size[0], &by_size[1]);
        assert!(d0.composition_vanishes(&d1, FieldSpec::Rationals));
    }

    #[test]
    fn octahedral_sphere() {
        // boundary of the cross-polytope on pairs {0,1},{2,3},{4,5}: a 2-sphere
        let mut facets = Vec::new();
        for a in [0, 1] {
            for b in [2, 3] {
                for c in [4, 5] {
                    facets.push(s(&[a, b, c]));
                }
            }
        }
        let sphere = SimplicialComplex::new(VertexSet::range(6).unwrap(), facets).unwrap();
        let h = reduced_homology(&sphere, FieldSpec::Rationals, &lim()).unwrap();
        assert_eq!(h.iter().collect::<Vec<_>>(), vec![(-1, 0), (0, 0), (1, 0), (2, 1)]);
        let apex = cone(&sphere, 6).unwrap();
        assert!(reduced_homology(&apex, FieldSpec::GF2, &lim()).unwrap().is_acyclic());
    }

    #[test]
    fn skeleton_of_simplex_has_top_homology() {
        // 1-skeleton of the 3-simplex: graph K_4 with 3 independent cycles
        let k4 = skeleton(&SimplicialComplex::simplex(VertexSet::range(4).unwrap()), 1).unwrap();
        let h = reduced_homology(&k4, FieldSpec::gf(5).unwrap(), &lim()).unwrap();
        assert_eq!((h.get(0), h.get(1)), (0, 3));
    }
}
