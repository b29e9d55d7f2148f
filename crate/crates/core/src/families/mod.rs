//! Generators for the standard example grids, downgrading and restriction
//! of torus actions, classical root systems and the adjoint-variety data.

pub mod bw3;
pub mod contact;
pub mod downgrade;
pub mod projective;
pub mod quadric;
pub mod roots;
pub mod so_adjoint;
pub mod table;

pub use bw3::{
    build_cube_torus, build_p1cubed, build_quadric_bundle, build_scroll, build_sp6,
    bw3_single_inner_grid, ScrollSplit,
};
pub use contact::{contact_compasses, restrict_compass, ContactHexagonData};
pub use downgrade::{downgrade, Merge};
pub use projective::build_projective_space;
pub use quadric::{build_quadric_full_torus, downgrade_quadric_diagonal, downgrade_quadric_e1};
pub use roots::{project_adjoint, project_roots, root_system, RootKind, RootSystem};
pub use so_adjoint::{build_so_adjoint, so_slice};
pub use table::{adjoint_table_row, so_table_from_builder, GroupFamily, TableRow};

/// Label of a projective space of dimension `d`.
pub fn projective_label(d: u32) -> String {
    if d == 0 {
        "point".to_string()
    } else {
        format!("P^{d}")
    }
}

/// Label of a smooth quadric of dimension `k >= 1`, using the classical
/// identifications in dimensions 1 and 2.
pub fn quadric_label(k: u32) -> String {
    match k {
        0 => "2 points".to_string(),
        1 => "P^1".to_string(),
        2 => "P^1xP^1".to_string(),
        _ => format!("Q^{k}"),
    }
}
