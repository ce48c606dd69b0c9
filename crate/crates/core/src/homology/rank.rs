//! Exact matrix rank over GF(2), GF(p), and the rationals.
//!
//! All three routines reduce the columns one by one against a pivot table
//! keyed by leading row index, so they share the same shape and differ only
//! in arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::BoundaryMatrix;

pub(super) fn rank_gf2(m: &BoundaryMatrix) -> usize {
    let words = m.rows.div_ceil(64);
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; m.rows];
    let mut rank = 0;
    for col in &m.columns {
        let mut v = vec![0u64; words];
        for &(r, _) in col {
            v[r as usize / 64] ^= 1u64 << (r % 64);
        }
        while let Some(lead) = leading_bit(&v) {
            match &pivots[lead] {
                Some(p) => v.iter_mut().zip(p).for_each(|(a, b)| *a ^= b),
                None => {
                    pivots[lead] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn leading_bit(v: &[u64]) -> Option<usize> {
    v.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

pub(super) fn rank_mod_p(m: &BoundaryMatrix, p: u64) -> usize {
    if p == 2 {
        return rank_gf2(m);
    }
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; m.rows];
    let mut rank = 0;
    for col in &m.columns {
        let mut v = vec![0u64; m.rows];
        for &(r, s) in col {
            v[r as usize] = if s > 0 { 1 } else { p - 1 };
        }
        while let Some(lead) = v.iter().position(|&x| x != 0) {
            match &pivots[lead] {
                Some(piv) => {
                    let f = p - v[lead];
                    for (a, b) in v.iter_mut().zip(piv).skip(lead) {
                        *a = (*a + f * b) % p;
                    }
                }
                None => {
                    let inv = mod_inverse(v[lead], p);
                    for a in v.iter_mut().skip(lead) {
                        *a = *a * inv % p;
                    }
                    pivots[lead] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and below 2^31 so products fit in u64.
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Integers usable for fraction-free elimination. `None` signals overflow.
trait ExactInt: Clone + PartialEq + Sized {
    fn zero() -> Self;
    fn from_sign(s: i8) -> Self;
    fn is_zero(&self) -> bool;
    /// `a * b - c * d`
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, by: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl ExactInt for i64 {
    fn zero() -> Self {
        0
    }
    fn from_sign(s: i8) -> Self {
        s as i64
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, by: &Self) -> Self {
        self / by
    }
    fn is_unit(&self) -> bool {
        self.abs() == 1
    }
}

impl ExactInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_sign(s: i8) -> Self {
        BigInt::from(s)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        Some(a * b - c * d)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, by: &Self) -> Self {
        self / by
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
}

/// Rank over the rationals by fraction-free elimination with row content
/// removal. Runs on `i64` and restarts on big integers if anything overflows.
pub(super) fn rank_rational(m: &BoundaryMatrix) -> usize {
    rank_integer::<i64>(m).unwrap_or_else(|| rank_integer::<BigInt>(m).expect("big integers do not overflow"))
}

fn rank_integer<T: ExactInt>(m: &BoundaryMatrix) -> Option<usize> {
    let mut pivots: Vec<Option<Vec<T>>> = vec![None; m.rows];
    let mut rank = 0;
    for col in &m.columns {
        let mut v = vec![T::zero(); m.rows];
        for &(r, s) in col {
            v[r as usize] = T::from_sign(s);
        }
        while let Some(lead) = v.iter().position(|x| !x.is_zero()) {
            match &pivots[lead] {
                Some(piv) => {
                    let (a, b) = (piv[lead].clone(), v[lead].clone());
                    for i in lead..v.len() {
                        v[i] = T::cross(&a, &v[i], &b, &piv[i])?;
                    }
                    remove_content(&mut v[lead..]);
                }
                None => {
                    pivots[lead] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    Some(rank)
}

fn remove_content<T: ExactInt>(v: &mut [T]) {
    let mut g = T::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_unit() {
                return;
            }
        }
    }
    if g.is_zero() {
        return;
    }
    for x in v.iter_mut() {
        *x = x.div_exact(&g);
    }
}
