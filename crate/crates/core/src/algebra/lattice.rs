//! Character lattices `Z^r`, their elements and homomorphisms between them.

use crate::algebra::rational::{int, Rational};
use crate::error::{Error, Result};
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// An element of `Z^r`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    pub fn scalar(x: i64) -> Self {
        Weight(vec![x])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    /// gcd of the coordinates (0 for the zero vector).
    pub fn content(&self) -> i64 {
        self.0.iter().fold(0i64, |g, &c| g.gcd(&c))
    }

    pub fn to_rational(&self) -> Vec<Rational> {
        self.0.iter().map(|&c| int(c)).collect()
    }

    /// Sign of the first nonzero coordinate.
    pub fn leading_sign(&self) -> i64 {
        self.0.iter().find(|&&c| c != 0).map_or(0, |c| c.signum())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        assert_eq!(self.rank(), o.rank());
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        assert_eq!(self.rank(), o.rank());
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// Lattice homomorphism `Z^r -> Z^s` given by an `s x r` integer matrix.
///
/// Rows are expected to be primitive (coordinate gcd 1). A matrix with a
/// non-primitive row must be built through [`Projection::non_primitive`],
/// which records that fact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    rows: Vec<Vec<i64>>,
    source_rank: usize,
    non_primitive: bool,
}

impl Projection {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let p = Self::build(rows)?;
        if let Some(i) = p.rows.iter().position(|r| !row_primitive(r)) {
            return Err(Error::InvalidArgument(format!(
                "row {i} of the projection is not primitive; use Projection::non_primitive"
            )));
        }
        Ok(p)
    }

    pub fn non_primitive(rows: Vec<Vec<i64>>) -> Result<Self> {
        let mut p = Self::build(rows)?;
        p.non_primitive = p.rows.iter().any(|r| !row_primitive(r));
        Ok(p)
    }

    fn build(rows: Vec<Vec<i64>>) -> Result<Self> {
        let source_rank = rows
            .first()
            .map(Vec::len)
            .ok_or(Error::Empty("projection rows"))?;
        if source_rank == 0 {
            return Err(Error::Empty("projection columns"));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != source_rank) {
            return Err(Error::RankMismatch {
                expected: source_rank,
                got: r.len(),
            });
        }
        Ok(Projection {
            rows,
            source_rank,
            non_primitive: false,
        })
    }

    pub fn identity(rank: usize) -> Self {
        let rows = (0..rank).map(|i| Weight::unit(rank, i).0).collect();
        Projection {
            rows,
            source_rank: rank,
            non_primitive: false,
        }
    }

    /// The single-row projection onto coordinate `i`.
    pub fn coordinate(rank: usize, i: usize) -> Self {
        Projection {
            rows: vec![Weight::unit(rank, i).0],
            source_rank: rank,
            non_primitive: false,
        }
    }

    pub fn source_rank(&self) -> usize {
        self.source_rank
    }

    pub fn target_rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn is_flagged_non_primitive(&self) -> bool {
        self.non_primitive
    }

    pub fn is_identity(&self) -> bool {
        self.target_rank() == self.source_rank
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(i, r)| r.iter().enumerate().all(|(j, &c)| c == i64::from(i == j)))
    }

    pub fn apply_rational(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.source_rank {
            return Err(Error::RankMismatch {
                expected: self.source_rank,
                got: v.len(),
            });
        }
        Ok(self
            .rows
            .iter()
            .map(|row| row.iter().zip(v).map(|(&a, x)| int(a) * x).sum())
            .collect())
    }
}

fn row_primitive(r: &[i64]) -> bool {
    r.iter().fold(0i64, |g, &c| g.gcd(&c)) == 1
}

/// Matrix-vector product over the integers.
pub fn project(w: &Weight, p: &Projection) -> Result<Weight> {
    if w.rank() != p.source_rank {
        return Err(Error::RankMismatch {
            expected: p.source_rank,
            got: w.rank(),
        });
    }
    Ok(Weight(
        p.rows
            .iter()
            .map(|row| row.iter().zip(&w.0).map(|(a, b)| a * b).sum())
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_coordinate() {
        let p = Projection::coordinate(3, 0);
        assert_eq!(
            project(&Weight(vec![2, 0, 0]), &p).unwrap(),
            Weight::scalar(2)
        );
        assert_eq!(project(&Weight::zero(3), &p).unwrap(), Weight::scalar(0));
    }

    #[test]
    fn rank_mismatch() {
        let p = Projection::coordinate(3, 0);
        assert!(matches!(
            project(&Weight(vec![1, 2]), &p),
            Err(Error::RankMismatch {
                expected: 3,
                got: 2
            })
        ));
    }

    #[test]
    fn primitive_rows_enforced() {
        assert!(Projection::new(vec![vec![2, 4]]).is_err());
        let p = Projection::non_primitive(vec![vec![2, 4]]).unwrap();
        assert!(p.is_flagged_non_primitive());
        assert!(!Projection::new(vec![vec![1, 1, 0]])
            .unwrap()
            .is_flagged_non_primitive());
    }

    #[test]
    fn identity_detection() {
        assert!(Projection::identity(3).is_identity());
        assert!(!Projection::coordinate(2, 0).is_identity());
    }
}
