//! Domain types shared by every construction: vertices, cycles, colourings,
//! host graphs and the certificate object.

mod colouring;
mod cycle;
mod graph;
mod system;
mod vertex;

pub use colouring::{Colour, Colouring};
pub use cycle::{canonical_form, Cycle, Edge};
pub use graph::{CayleyGroup, GraphSpec, VertexFamily};
pub use system::{CycleSystem, NamedCycle, Provenance, Route};
pub use vertex::{FamilyKind, Vertex};
