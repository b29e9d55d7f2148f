pub mod adjunction;
pub mod algebra;
pub mod error;
pub mod families;
pub mod grid;
pub mod localization;
pub mod verify;

pub use error::{Error, Result};
