//! The two rotational systems: K_{2l+1} from three base cycles and
//! K_{4l+1} from six, with the difference ledger that shows why they work.

use equicycle::difference::audit_coverage;
use equicycle::rotational::{plan_k2l1, plan_k4l1};
use equicycle::verify::verify_certificate;

fn main() -> equicycle::Result<()> {
    let plan = plan_k2l1(9)?;
    println!("K_19, l = 9, developed mod {}:", plan.modulus);
    for b in &plan.base_cycles {
        println!("  {:<8} {}", b.name, b.cycle);
    }

    let plan = plan_k4l1(17)?;
    println!(
        "\nK_69, l = 17, developed mod {} (m = {:?}):",
        plan.modulus, plan.m
    );
    for b in &plan.base_cycles {
        println!("  {:<8} {}", b.name, b.cycle);
    }
    let report = audit_coverage(&plan.base_cycles, plan.modulus)?;
    println!("\nwho supplies what:");
    for e in report.entries.iter().filter(|e| e.suppliers.len() == 1) {
        println!("  {:<14} <- {}", e.class.to_string(), e.suppliers[0]);
    }

    let system = plan.into_system(
        equicycle::design::Route::Rotational4l1,
        equicycle::rotational::colouring_k4l1(17),
    )?;
    let (red, blue) = system.colouring.class_sizes();
    println!(
        "\n{} cycles, red {red}, blue {blue}, verified: {}",
        system.cycle_count(),
        verify_certificate(&system).passed()
    );
    Ok(())
}
