//! Classical root systems in their standard coordinates.

use crate::algebra::lattice::{project, Projection, Weight};
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootKind {
    A,
    B,
    C,
    D,
}

impl FromStr for RootKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(RootKind::A),
            "B" | "b" => Ok(RootKind::B),
            "C" | "c" => Ok(RootKind::C),
            "D" | "d" => Ok(RootKind::D),
            _ => Err(Error::Unsupported(format!("root system type `{s}`"))),
        }
    }
}

impl fmt::Display for RootKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub kind: RootKind,
    pub rank: usize,
    /// Sorted list of roots.
    pub roots: Vec<Weight>,
}

impl RootSystem {
    /// Rank of the ambient lattice holding the roots.
    pub fn ambient_rank(&self) -> usize {
        match self.kind {
            RootKind::A => self.rank + 1,
            _ => self.rank,
        }
    }
}

/// `A_r` as `e_i - e_j` in `Z^{r+1}`; `B_r`, `C_r`, `D_r` in `Z^r`.
pub fn root_system(kind: RootKind, rank: usize) -> Result<RootSystem> {
    let min = match kind {
        RootKind::A | RootKind::B | RootKind::C => 1,
        RootKind::D => 2,
    };
    if rank < min {
        return Err(Error::OutOfRange(format!("{kind}_{rank} is not defined")));
    }
    let amb = if kind == RootKind::A { rank + 1 } else { rank };
    let e = |i: usize| Weight::unit(amb, i);
    let mut roots = Vec::new();
    for i in 0..amb {
        for j in 0..amb {
            if i == j {
                continue;
            }
            roots.push(&e(i) - &e(j));
            if kind != RootKind::A && i < j {
                roots.push(&e(i) + &e(j));
                roots.push(-&(&e(i) + &e(j)));
            }
        }
        match kind {
            RootKind::B => {
                roots.push(e(i));
                roots.push(-&e(i));
            }
            RootKind::C => {
                roots.push(e(i).scale(2));
                roots.push(e(i).scale(-2));
            }
            _ => {}
        }
    }
    roots.sort();
    Ok(RootSystem { kind, rank, roots })
}

/// Images of the roots as a multiset.
pub fn project_roots(rs: &RootSystem, p: &Projection) -> Result<BTreeMap<Weight, u32>> {
    let mut out = BTreeMap::new();
    for r in &rs.roots {
        *out.entry(project(r, p)?).or_insert(0) += 1;
    }
    Ok(out)
}

/// Weights of the adjoint representation under `p`: the projected roots
/// together with the zero weight of the Cartan subalgebra, multiplicity
/// equal to the rank.
pub fn project_adjoint(rs: &RootSystem, p: &Projection) -> Result<BTreeMap<Weight, u32>> {
    let mut out = project_roots(rs, p)?;
    *out.entry(Weight::zero(p.target_rank())).or_insert(0) += rs.rank as u32;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        for r in 1..6 {
            assert_eq!(
                root_system(RootKind::A, r).unwrap().roots.len(),
                r * (r + 1)
            );
            assert_eq!(root_system(RootKind::B, r).unwrap().roots.len(), 2 * r * r);
            assert_eq!(root_system(RootKind::C, r).unwrap().roots.len(), 2 * r * r);
        }
        for r in 2..6 {
            assert_eq!(
                root_system(RootKind::D, r).unwrap().roots.len(),
                2 * r * (r - 1)
            );
        }
        assert!(root_system(RootKind::D, 1).is_err());
        assert!("E".parse::<RootKind>().is_err());
    }

    #[test]
    fn closed_under_negation() {
        for k in [RootKind::A, RootKind::B, RootKind::C, RootKind::D] {
            let rs = root_system(k, 3).unwrap();
            for r in &rs.roots {
                assert!(rs.roots.binary_search(&-r).is_ok());
            }
        }
    }

    #[test]
    fn adjoint_dimension() {
        let rs = root_system(RootKind::A, 3).unwrap();
        let p = Projection::new(vec![vec![1, -1, 0, 0], vec![0, 1, -1, 0]]).unwrap();
        let m = project_adjoint(&rs, &p).unwrap();
        assert_eq!(m.values().sum::<u32>(), 15);
    }
}
