//! Equitable l-cycle systems of the blow-ups C_3[l] and C_5[l].

use equicycle::blowup::{c5_base_cycles, decompose_c3_blowup, decompose_c5_blowup, project};
use equicycle::verify::verify_certificate;

fn main() -> equicycle::Result<()> {
    println!("projection of (0 2 4 6 1 3 5) onto C_5[7]:");
    println!("  forward {}", project(&[0, 2, 4, 6, 1, 3, 5], 5, false)?);
    println!("  reverse {}", project(&[0, 2, 4, 6, 1, 3, 5], 5, true)?);

    println!("\nC_5[11] base cycles on the near differences:");
    for b in c5_base_cycles(11)? {
        println!("  {}", b.cycle);
    }

    for ell in [7, 9, 11, 21] {
        let c3 = decompose_c3_blowup(ell)?;
        let c5 = decompose_c5_blowup(ell)?;
        println!(
            "l={ell:>2}: C_3[l] {:>3} cycles ({}), C_5[l] {:>3} cycles ({})",
            c3.cycle_count(),
            verify_certificate(&c3).passed(),
            c5.cycle_count(),
            verify_certificate(&c5).passed()
        );
    }
    Ok(())
}
