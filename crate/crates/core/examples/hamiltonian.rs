//! Walecki factorisations of K_l and Hamiltonian decompositions of the
//! circulants Cay[Z_l, ±{3, ..., (l-1)/2}].

use std::time::Instant;

use equicycle::gadgets::{circulant_ham_decomposition, walecki};

fn main() -> equicycle::Result<()> {
    let w = walecki(9)?;
    println!("K_9 Walecki factorisation:");
    for c in &w.cycles {
        println!("  {c}");
    }

    for ell in (7..=61).step_by(2) {
        let t = Instant::now();
        let d = circulant_ham_decomposition(ell)?;
        println!(
            "l={ell:>2}: {} Hamiltonian cycles over {} edges in {:.1?}",
            d.cycles.len(),
            d.host.num_edges(),
            t.elapsed()
        );
    }
    Ok(())
}
