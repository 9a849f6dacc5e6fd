//! Equitably coloured `l`-cycle systems of the blow-ups `C_3[l]` and
//! `C_5[l]` on `Z_s x Z_l`.
//!
//! `C_s[l]` is `Cay[Z_s x Z_l, Ω]` with `Ω = {(±1, ±i) : 0 <= i <= (l-1)/2}`.
//! `Ω` is split in two: the far differences are lifted from Hamiltonian
//! cycles of a circulant by projection, the near ones come from explicit
//! base cycles developed modulo `s` in the first coordinate.

mod c3;
mod c5;
mod omega;

pub use c3::{c3_base_cycles, decompose_c3_blowup};
pub use c5::{c5_base_cycles, c5_seven_starters, decompose_c5_blowup};
pub use omega::{decompose_omega2, project, project_all, OmegaSplit};

use crate::design::{
    Colour, Colouring, Cycle, CycleSystem, GraphSpec, NamedCycle, Provenance, Route, Vertex,
};
use crate::error::{Error, Result};
use crate::verify::{require_pass, Expectations};

/// Red second coordinates shared by every part: `0..=(l-1)/2` when
/// `l ≡ 1 (mod 4)`, `(l-1)/2..l` when `l ≡ 3 (mod 4)`. Either way
/// `(l+1)/2` per part.
pub fn standard_red(ell: u32) -> Vec<bool> {
    (0..ell)
        .map(|h| {
            if ell % 4 == 1 {
                h <= (ell - 1) / 2
            } else {
                h > (ell - 3) / 2
            }
        })
        .collect()
}

pub(crate) fn pattern_colouring(s: u32, ell: u32, red: &[bool]) -> Colouring {
    let graph = GraphSpec::Blowup { s, ell };
    Colouring::from_fn(graph.vertices(), |v| match v {
        Vertex::Blown { point, .. } if red[*point as usize] => Colour::Red,
        _ => Colour::Blue,
    })
}

pub(crate) fn check_ell(ell: u32) -> Result<()> {
    if ell < 7 || ell.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "l must be odd and at least 7, got {ell}"
        )));
    }
    Ok(())
}

/// Develops `bases` modulo `s`, adds the projected cycles, and verifies.
pub(crate) fn finish(
    s: u32,
    ell: u32,
    route: Route,
    bases: Vec<NamedCycle>,
    projected: Vec<Cycle>,
    red: &[bool],
) -> Result<CycleSystem> {
    let mut cycles: Vec<Cycle> = Vec::with_capacity((s * ell) as usize);
    for b in &bases {
        cycles.extend((0..s).map(|i| b.cycle.shift_part(i, s)));
    }
    cycles.extend(projected);
    let mut provenance = Provenance::new(route, ell, s * ell);
    provenance.base_cycles = bases;
    let system = CycleSystem::new(
        GraphSpec::Blowup { s, ell },
        cycles,
        pattern_colouring(s, ell, red),
        provenance,
    )?;
    require_pass(&system, &Expectations::from_provenance(&system.provenance))?;
    Ok(system)
}

pub(crate) fn blown_cycle(s: u32, ell: u32, pts: &[(i64, i64)]) -> Result<Cycle> {
    Cycle::new(
        pts.iter()
            .map(|&(g, h)| Vertex::blown(g, h, s, ell))
            .collect(),
    )
}
