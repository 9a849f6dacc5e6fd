//! The brute-force oracle next to the verifier on small hosts.

use equicycle::design::{Colour, Colouring, CycleSystem, GraphSpec, Provenance, Route};
use equicycle::oracle::{enumerate_graceful, exact_cover_decompose, judge, recount};
use equicycle::verify::{verify, Expectations};

fn main() -> equicycle::Result<()> {
    for h in 2..=10 {
        println!(
            "h={h:>2}: {:>4} graceful paths, {} from leaf 0, {} from leaf 1",
            enumerate_graceful(h, None)?.len(),
            enumerate_graceful(h, Some(0))?.len(),
            enumerate_graceful(h, Some(1))?.len()
        );
    }

    let host = GraphSpec::complete_plain(7);
    let cycles = exact_cover_decompose(&host, &[3; 7])?.expect("K_7 has a triple system");
    println!("\nK_7 into triangles:");
    for c in &cycles {
        println!("  {c}");
    }

    let colouring: Colouring = host
        .vertices()
        .into_iter()
        .enumerate()
        .map(|(i, v)| (v, if i < 3 { Colour::Red } else { Colour::Blue }))
        .collect();
    let sys = CycleSystem::new(
        host,
        cycles,
        colouring,
        Provenance::new(Route::Custom, 3, 7),
    )?;
    let t = recount(&sys);
    println!(
        "\nedges covered once {}, uncovered {}, profiles {:?}",
        t.covered_once(),
        t.uncovered(),
        t.profiles
    );
    // The Fano plane has no 2-colouring without a monochromatic line, so
    // both sides must reject every colouring of this system.
    let exp = Expectations::default();
    println!(
        "verifier {}, oracle {}",
        verify(&sys, &exp).passed(),
        judge(&sys, &exp)
    );
    Ok(())
}
