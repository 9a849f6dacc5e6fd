//! Constructive building blocks shared by the rotational and blow-up
//! constructions.

mod graceful;
mod hamiltonian;
mod infinity;
mod paths;

pub use graceful::{graceful_path, is_graceful};
pub use hamiltonian::{
    circulant_connection, circulant_ham_decomposition, walecki, HamiltonianDecomposition,
};
pub use infinity::infinity_cycle;
pub(crate) use paths::close_chain;
pub use paths::{p_gadget, y_gadget, y_terminal, z_gadget, Path};
