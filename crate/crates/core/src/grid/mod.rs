pub mod dot;
pub mod model;
pub mod ops;
pub mod validate;

pub use model::{
    Compass, CompassData, EdgeTag, FixedComponent, GridData, GridFlags, OrbitEdge, SplitEntry,
    BUNDLE_ADJOINT, BUNDLE_L, BUNDLE_MINUS_K, SCHEMA,
};
pub use ops::{
    amfm_degree, bandwidth, is_compass_symmetric, is_nef, minimal_edges, mu_adjoint, mu_canonical,
    normalize_linearization, reverse_action, rk_minus, rk_plus,
};
pub use validate::{validate, Violation, ViolationKind};
