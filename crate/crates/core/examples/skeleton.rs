//! Triangle and pentagon decompositions of K_{2k+1} and K_{2k} - I.

use equicycle::assembly::{decompose_into_3_5_cycles, solve_3m_5n, standard_factor, Budget};
use equicycle::design::{GraphSpec, VertexFamily};

fn main() -> equicycle::Result<()> {
    let mut hosts: Vec<(String, GraphSpec)> = (1..=8)
        .map(|k| {
            (
                format!("K_{}", 2 * k + 1),
                GraphSpec::complete_plain(2 * k + 1),
            )
        })
        .collect();
    hosts.extend((3..=8).map(|k| {
        (
            format!("K_{} - I", 2 * k),
            GraphSpec::CompleteMinusFactor {
                family: VertexFamily::Plain { order: 2 * k },
                factor: standard_factor(2 * k),
            },
        )
    }));
    for (name, host) in hosts {
        let (m, n) = solve_3m_5n(host.num_edges() as u64)?;
        let d = decompose_into_3_5_cycles(&host, m, n, 0, &Budget::millis(10_000))?;
        print!("{name:<9} {:>3} edges = 3*{m} + 5*{n}", host.num_edges());
        if let Some(p) = d.pentagons.first() {
            print!(", e.g. pentagon {p}");
        }
        println!();
    }
    Ok(())
}
