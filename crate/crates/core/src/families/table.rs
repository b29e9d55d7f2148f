//! Adjoint varieties of classical groups and the bandwidth-3 data of their
//! `SL_3`-downgrading.

use crate::error::{Error, Result};
use crate::families::so_adjoint::build_so_adjoint;
use crate::grid::model::FixedComponent;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupFamily {
    /// `SO_{n+4}`
    SO,
    /// `Sp_{2n+2}`
    Sp,
    /// `SL_{n+2}`
    SL,
}

impl FromStr for GroupFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "so" => Ok(GroupFamily::SO),
            "sp" => Ok(GroupFamily::Sp),
            "sl" => Ok(GroupFamily::SL),
            _ => Err(Error::Unsupported(format!("group family `{s}`"))),
        }
    }
}

/// One row: `n | G | rk G | X_adj | X_i | Y_* | Y_0`, where the adjoint
/// variety has dimension `2n + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub n: u32,
    pub group: String,
    pub rank: u32,
    pub x_adj: String,
    pub x_i: String,
    pub y_star: String,
    pub y0: String,
}

pub const POINT: &str = "•";
pub const EMPTY: &str = "∅";
pub const DISJOINT: &str = "⊔";

impl TableRow {
    pub const CSV_HEADER: &'static str = "n,G,rk G,X_adj,X_i,Y_*,Y_0";

    pub fn to_csv(&self) -> String {
        [
            self.n.to_string(),
            self.group.clone(),
            self.rank.to_string(),
            self.x_adj.clone(),
            self.x_i.clone(),
            self.y_star.clone(),
            self.y0.clone(),
        ]
        .join(",")
    }
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_csv())
    }
}

fn proj(d: u32) -> String {
    if d == 0 {
        POINT.to_string()
    } else {
        format!("P^{d}")
    }
}

/// The tabulated row for a group family and `n >= 3`.
pub fn adjoint_table_row(group: GroupFamily, n: u32) -> Result<TableRow> {
    if n < 3 {
        return Err(Error::OutOfRange(format!(
            "table rows start at n = 3, got {n}"
        )));
    }
    let row = match group {
        GroupFamily::SO => TableRow {
            n,
            group: format!("SO_{}", n + 4),
            rank: (n + 4) / 2,
            x_adj: format!("G(1,Q^{})", n + 2),
            x_i: match n {
                3 => "P^1xP^1".to_string(),
                4 => "P^1xP^1xP^1".to_string(),
                _ => format!("P^1xQ^{}", n - 2),
            },
            y_star: match n {
                3 => POINT.to_string(),
                4 => [POINT; 3].join(DISJOINT),
                5 => format!("{POINT}{DISJOINT}P^1"),
                6 => format!("{POINT}{DISJOINT}P^1xP^1"),
                _ => format!("{POINT}{DISJOINT}Q^{}", n - 4),
            },
            y0: match n {
                3..=5 => EMPTY.to_string(),
                6 => format!("P^1{DISJOINT}P^1"),
                7 => "P^3".to_string(),
                _ => format!("G(1,Q^{})", n - 4),
            },
        },
        GroupFamily::Sp => TableRow {
            n,
            group: format!("Sp_{}", 2 * n + 2),
            rank: n + 1,
            x_adj: format!("P^{}", 2 * n + 1),
            x_i: "P^1".to_string(),
            y_star: EMPTY.to_string(),
            y0: proj(2 * n - 5),
        },
        GroupFamily::SL => TableRow {
            n,
            group: format!("SL_{}", n + 2),
            rank: n + 1,
            x_adj: format!("P(TP^{})", n + 1),
            x_i: format!("{}{DISJOINT}{}", proj(n - 2), proj(n - 2)),
            y_star: proj(n - 3),
            y0: format!("P(TP^{})", n - 2),
        },
    };
    Ok(row)
}

fn render(cs: &[&FixedComponent]) -> String {
    if cs.is_empty() {
        return EMPTY.to_string();
    }
    cs.iter()
        .map(|c| {
            if c.dim == 0 {
                POINT.to_string()
            } else {
                c.label.clone()
            }
        })
        .collect::<Vec<_>>()
        .join(DISJOINT)
}

/// Row for `SO_m` with the `Y_*` and `Y_0` columns read off
/// [`build_so_adjoint`]. `X_i` is taken from the table, or `-` below it.
pub fn so_table_from_builder(m: u32) -> Result<TableRow> {
    let g = build_so_adjoint(m)?;
    let n = m - 4;
    let over_beta: Vec<&FixedComponent> = g
        .components
        .iter()
        .filter(|c| c.id.starts_with("b0_"))
        .collect();
    let central: Vec<&FixedComponent> = g
        .components
        .iter()
        .filter(|c| c.id.starts_with("z_"))
        .collect();
    let x_i = if n >= 3 {
        adjoint_table_row(GroupFamily::SO, n)?.x_i
    } else {
        "-".to_string()
    };
    Ok(TableRow {
        n,
        group: format!("SO_{m}"),
        rank: m / 2,
        x_adj: format!("G(1,Q^{})", m - 2),
        x_i,
        y_star: render(&over_beta),
        y0: render(&central),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_matches_table() {
        for m in 7..=16 {
            assert_eq!(
                so_table_from_builder(m).unwrap(),
                adjoint_table_row(GroupFamily::SO, m - 4).unwrap()
            );
        }
        assert_eq!(so_table_from_builder(6).unwrap().x_i, "-");
    }

    #[test]
    fn rows() {
        assert_eq!(adjoint_table_row(GroupFamily::SO, 6).unwrap().y0, "P^1⊔P^1");
        assert_eq!(
            adjoint_table_row(GroupFamily::SO, 5).unwrap().y_star,
            "•⊔P^1"
        );
        assert_eq!(adjoint_table_row(GroupFamily::SO, 9).unwrap().rank, 6);
        let sp = adjoint_table_row(GroupFamily::Sp, 4).unwrap();
        assert_eq!((sp.x_i.as_str(), sp.y_star.as_str()), ("P^1", "∅"));
        assert!(adjoint_table_row(GroupFamily::SL, 2).is_err());
    }
}
