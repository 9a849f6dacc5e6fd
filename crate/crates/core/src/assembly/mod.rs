//! Equitable `l`-cycle systems of `K_v` for `v ≡ 1` and `v ≡ l (mod 2l)`.
//!
//! Both routes blow a small triangle/pentagon skeleton up by `l` and tile
//! each blown-up cycle with a `C_3[l]` or `C_5[l]` system. The `v ≡ 1` route
//! adds `k` copies of `K_{2l+1}` through a common fixed point; the `v ≡ l`
//! route adds a Hamiltonian decomposition of `K_l` on every part.
//!
//! Every part `{x} x Z_l` uses the same red set, the one of
//! [`standard_red`], so pieces line up: a blown-up piece is moved onto it by
//! permuting second coordinates inside each part, which fixes the host.

mod budget;
mod skeleton;

pub use budget::Budget;
pub use skeleton::{
    decompose_into_3_5_cycles, solve_3m_5n, standard_factor, SkeletonDecomposition,
};

use std::collections::BTreeMap;

use crate::blowup::{decompose_c3_blowup, decompose_c5_blowup, standard_red};
use crate::design::{
    Colour, Colouring, Cycle, CycleSystem, GraphSpec, Provenance, Route, Vertex, VertexFamily,
};
use crate::error::{Error, Result};
use crate::gadgets::walecki;
use crate::rotational::{decompose_k2l1, decompose_k4l1};
use crate::verify::{require_pass, Expectations};

/// Seed and time allowance for the skeleton search.
#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    pub seed: u64,
    pub budget: Budget,
}

fn check_ell(ell: u32) -> Result<()> {
    if ell == 3 || ell == 5 {
        return Err(Error::Unsupported(format!(
            "l = {ell} is outside this construction, which needs odd l >= 7"
        )));
    }
    if ell < 7 || ell.is_multiple_of(2) {
        return Err(Error::Unsupported(format!(
            "l must be odd and at least 7, got {ell}"
        )));
    }
    Ok(())
}

fn global_colouring(family: VertexFamily, ell: u32) -> Colouring {
    let red = standard_red(ell);
    Colouring::from_fn(family.vertices(), |v| match v {
        Vertex::Blown { point, .. } if red[*point as usize] => Colour::Red,
        _ => Colour::Blue,
    })
}

/// Moves the cycles of a system of a complete graph onto `targets`, sending
/// red to blue and blue to red, each in sorted order. Any bijection keeps a
/// decomposition of a complete graph, and swapping colours keeps every
/// cycle equitable.
fn place_complete(
    piece: &CycleSystem,
    targets: &[Vertex],
    colouring: &Colouring,
) -> Result<Vec<Cycle>> {
    let by = |c: Colour, vs: &mut dyn Iterator<Item = (&Vertex, &Colour)>| -> Vec<Vertex> {
        let mut out: Vec<Vertex> = vs.filter(|(_, k)| **k == c).map(|(v, _)| *v).collect();
        out.sort();
        out
    };
    let mut map = BTreeMap::new();
    for c in [Colour::Red, Colour::Blue] {
        let from = by(c, &mut piece.colouring.iter());
        let mut to: Vec<Vertex> = targets
            .iter()
            .copied()
            .filter(|v| colouring.get(v) == Some(c.flipped()))
            .collect();
        to.sort();
        if from.len() != to.len() {
            return Err(Error::InvariantViolation(format!(
                "cannot place a block: {} {c} vertices onto {} {} ones",
                from.len(),
                to.len(),
                c.flipped()
            )));
        }
        map.extend(from.into_iter().zip(to));
    }
    piece.cycles.iter().map(|c| c.map(|v| map[v])).collect()
}

/// Moves a `C_s[l]` system onto the parts `skeleton`, part `g` going to
/// `skeleton[g]` with red points sent to red points in sorted order.
fn place_blowup(piece: &CycleSystem, skeleton: &[u32], ell: u32) -> Result<Vec<Cycle>> {
    let global = standard_red(ell);
    let (red_to, blue_to): (Vec<u32>, Vec<u32>) = (0..ell).partition(|&h| global[h as usize]);
    let mut perms: Vec<Vec<u32>> = Vec::with_capacity(skeleton.len());
    for g in 0..skeleton.len() as u32 {
        let mut perm = vec![0; ell as usize];
        let (mut r, mut b) = (red_to.iter(), blue_to.iter());
        for h in 0..ell {
            let colour = piece.colouring.get(&Vertex::Blown { part: g, point: h });
            let slot = if colour == Some(Colour::Red) {
                r.next()
            } else {
                b.next()
            };
            perm[h as usize] = *slot.ok_or_else(|| {
                Error::InvariantViolation(format!("part {g} of the piece has the wrong red count"))
            })?;
        }
        perms.push(perm);
    }
    piece
        .cycles
        .iter()
        .map(|c| {
            c.map(|v| match *v {
                Vertex::Blown { part, point } => Vertex::Blown {
                    part: skeleton[part as usize],
                    point: perms[part as usize][point as usize],
                },
                other => other,
            })
        })
        .collect()
}

fn skeleton_points(c: &Cycle) -> Vec<u32> {
    c.vertices()
        .iter()
        .map(|v| match v {
            Vertex::Plain(x) => *x,
            _ => unreachable!("skeleton cycles are plain"),
        })
        .collect()
}

/// Tiles the blow-up of every skeleton cycle.
fn tile_skeleton(skeleton: &SkeletonDecomposition, ell: u32) -> Result<Vec<Cycle>> {
    let c3 = if skeleton.triangles.is_empty() {
        None
    } else {
        Some(decompose_c3_blowup(ell)?)
    };
    let c5 = if skeleton.pentagons.is_empty() {
        None
    } else {
        Some(decompose_c5_blowup(ell)?)
    };
    let mut out = Vec::new();
    for c in skeleton.cycles() {
        let piece = if c.len() == 3 {
            c3.as_ref()
        } else {
            c5.as_ref()
        };
        out.extend(place_blowup(
            piece.expect("piece built above"),
            &skeleton_points(c),
            ell,
        )?);
    }
    Ok(out)
}

fn skeleton_for(host: GraphSpec, options: &Options) -> Result<SkeletonDecomposition> {
    let (m, n) = solve_3m_5n(host.num_edges() as u64)?;
    decompose_into_3_5_cycles(&host, m, n, options.seed, &options.budget)
}

fn finish(
    route: Route,
    ell: u32,
    k: u32,
    family: VertexFamily,
    cycles: Vec<Cycle>,
    options: &Options,
) -> Result<CycleSystem> {
    let mut provenance = Provenance::new(route, ell, family.order());
    provenance.k = Some(k);
    provenance.seed = options.seed;
    let colouring = global_colouring(family, ell);
    let system = CycleSystem::new(GraphSpec::Complete(family), cycles, colouring, provenance)?;
    require_pass(&system, &Expectations::from_provenance(&system.provenance))?;
    Ok(system)
}

/// An equitable `l`-cycle system of `K_{2kl+1}`.
///
/// `k = 1` and `k = 2` are the rotational systems. For `k >= 3` the points
/// are `Z_{2k} x Z_l` plus a fixed point: `K_{2l+1}` blocks sit on parts
/// `{2i, 2i+1}` and the fixed point, and the remaining edges are the blow-up
/// of `K_{2k} - {01, 23, ...}`.
pub fn decompose_v1(ell: u32, k: u32, options: &Options) -> Result<CycleSystem> {
    check_ell(ell)?;
    match k {
        0 => return Err(Error::Unsupported("v = 1 has no edges to decompose".into())),
        1 => return decompose_k2l1(ell),
        2 => return decompose_k4l1(ell),
        _ => {}
    }
    let family = VertexFamily::Blown {
        parts: 2 * k,
        part_size: ell,
        infinity: true,
    };
    let colouring = global_colouring(family, ell);
    let block = decompose_k2l1(ell)?;
    let mut cycles = Vec::new();
    for i in 0..k {
        let mut targets: Vec<Vertex> = (0..ell)
            .flat_map(|h| {
                [
                    Vertex::Blown {
                        part: 2 * i,
                        point: h,
                    },
                    Vertex::Blown {
                        part: 2 * i + 1,
                        point: h,
                    },
                ]
            })
            .collect();
        targets.push(Vertex::Infinity);
        cycles.extend(place_complete(&block, &targets, &colouring)?);
    }
    let host = GraphSpec::CompleteMinusFactor {
        family: VertexFamily::Plain { order: 2 * k },
        factor: standard_factor(2 * k),
    };
    cycles.extend(tile_skeleton(&skeleton_for(host, options)?, ell)?);
    finish(Route::BlowupOneMod, ell, k, family, cycles, options)
}

/// An equitable `l`-cycle system of `K_{(2k+1)l}` on `Z_{2k+1} x Z_l`: the
/// blow-up of `K_{2k+1}` plus a Walecki decomposition of every part.
pub fn decompose_vl(ell: u32, k: u32, options: &Options) -> Result<CycleSystem> {
    check_ell(ell)?;
    let parts = 2 * k + 1;
    let family = VertexFamily::Blown {
        parts,
        part_size: ell,
        infinity: false,
    };
    let mut cycles = Vec::new();
    if k > 0 {
        cycles.extend(tile_skeleton(
            &skeleton_for(GraphSpec::complete_plain(parts), options)?,
            ell,
        )?);
    }
    let ham = walecki(ell)?;
    for p in 0..parts {
        for c in &ham.cycles {
            cycles.push(c.map(|v| match *v {
                Vertex::Plain(x) => Vertex::Blown { part: p, point: x },
                other => other,
            })?);
        }
    }
    finish(Route::BlowupEllMod, ell, k, family, cycles, options)
}

/// An equitably 2-coloured `l`-cycle system of `K_v` for odd `l >= 7` and
/// `v ≡ 1` or `l (mod 2l)`.
pub fn construct(ell: u32, v: u32, options: &Options) -> Result<CycleSystem> {
    check_ell(ell)?;
    let m = 2 * ell;
    if v % m == 1 && v > 1 {
        decompose_v1(ell, (v - 1) / m, options)
    } else if v % m == ell {
        decompose_vl(ell, (v - ell) / m, options)
    } else {
        Err(Error::Unsupported(format!(
            "v = {v} satisfies neither v ≡ 1 nor v ≡ {ell} (mod {m})"
        )))
    }
}
