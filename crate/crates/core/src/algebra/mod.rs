pub mod lattice;
pub mod laurent;
pub mod polytope;
pub mod rational;

pub use lattice::{project, Projection, Weight};
pub use laurent::{lr_add, lr_div, lr_mul, lr_normalize, lr_sub, LaurentPoly, LaurentRational};
pub use polytope::{is_centrally_symmetric, vertices, LatticePolytope};
pub use rational::{int, rat, Rational};
