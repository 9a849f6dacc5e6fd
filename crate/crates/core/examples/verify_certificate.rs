//! Writing a certificate, breaking it, and reading the verdict.

use equicycle::certificate::{read_text, write_text};
use equicycle::design::Colour;
use equicycle::rotational::decompose_k2l1;
use equicycle::verify::verify_certificate;

fn main() -> equicycle::Result<()> {
    let system = decompose_k2l1(7)?;
    let text = write_text(&system);
    println!("{}", text.lines().take(8).collect::<Vec<_>>().join("\n"));
    println!("...\n");

    let back = read_text(&text)?;
    println!("{}\n", verify_certificate(&back));

    let v = "0_0".parse()?;
    let mut broken = back.clone();
    broken.colouring = broken.colouring.with(v, Colour::Blue);
    println!(
        "after recolouring 0_0 blue:\n{}\n",
        verify_certificate(&broken)
    );

    let mut broken = back;
    broken.cycles.pop();
    println!("after dropping a cycle:\n{}", verify_certificate(&broken));
    Ok(())
}
