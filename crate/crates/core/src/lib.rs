//! Matroid and positroid computations on small ground sets.

pub mod connectivity;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod flats;
pub mod io;
pub mod iso;
pub mod matroid;
pub mod minors;
pub mod oriented;
pub mod positroid;
pub mod subset;
pub mod verify;

pub use error::{Error, Result};
pub use matroid::Matroid;
pub use subset::Subset;
