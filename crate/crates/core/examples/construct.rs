//! Top-level construction for any supported (l, v).
//!
//! `cargo run --example construct -- 7 43`

use std::time::Instant;

use equicycle::assembly::{construct, Options};
use equicycle::verify::verify_certificate;

fn main() -> equicycle::Result<()> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let pairs: Vec<(u32, u32)> = match args.as_slice() {
        [ell, v] => vec![(*ell, *v)],
        _ => vec![
            (9, 19),
            (9, 37),
            (7, 43),
            (7, 7),
            (7, 21),
            (9, 45),
            (11, 77),
            (7, 20),
        ],
    };
    for (ell, v) in pairs {
        let t = Instant::now();
        match construct(ell, v, &Options::default()) {
            Ok(sys) => {
                let (red, blue) = sys.colouring.class_sizes();
                println!(
                    "l={ell:>2} v={v:>3}: {:<16} {:>4} cycles, red {red}, blue {blue}, verified {} in {:.1?}",
                    sys.provenance.route.as_str(),
                    sys.cycle_count(),
                    verify_certificate(&sys).passed(),
                    t.elapsed()
                );
            }
            Err(e) => println!("l={ell:>2} v={v:>3}: {e}"),
        }
    }
    Ok(())
}
