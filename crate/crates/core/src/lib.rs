//! Equitably 2-colourable odd-cycle decompositions of complete graphs.
//!
//! Every construction here returns a [`CycleSystem`](design::CycleSystem)
//! that has already passed [`verify::verify`]; nothing unverified leaves the
//! library.

pub mod assembly;
pub mod blowup;
pub mod certificate;
pub mod design;
pub mod difference;
pub mod error;
pub mod gadgets;
pub mod oracle;
pub mod rotational;
pub mod verify;

pub use error::{Error, Result};
