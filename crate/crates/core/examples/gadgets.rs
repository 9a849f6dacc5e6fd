//! Graceful paths and the cycles through the fixed point.

use equicycle::difference::{differences, DifferenceKind};
use equicycle::gadgets::{graceful_path, infinity_cycle};

fn main() -> equicycle::Result<()> {
    for h in [4, 6, 9] {
        println!(
            "h={h}: leaf 0 {}   leaf 1 {}",
            graceful_path(h, 0)?,
            graceful_path(h, 1)?
        );
    }

    let c = infinity_cycle(17, &[14, 13, 12, 11, 10, 9, 8], 0)?;
    println!("\n{c}");
    println!(
        "0-pure differences: {:?}",
        differences(&c, 34)?.values_of(DifferenceKind::Pure(0))
    );
    Ok(())
}
