use std::collections::BTreeSet;

use crate::design::{Cycle, Vertex};
use crate::error::{Error, Result};
use crate::gadgets::circulant_ham_decomposition;

/// A split of `Ω = {(±1, ±i)}` into two negation-closed halves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaSplit {
    pub omega1: Vec<Vertex>,
    pub omega2: Vec<Vertex>,
}

fn signed(s: u32, ell: u32, seconds: &[u32]) -> Vec<Vertex> {
    let mut out = BTreeSet::new();
    for &i in seconds {
        for g in [1, s - 1] {
            out.insert(Vertex::Blown {
                part: g,
                point: i % ell,
            });
            out.insert(Vertex::Blown {
                part: g,
                point: (ell - i % ell) % ell,
            });
        }
    }
    out.into_iter().collect()
}

impl OmegaSplit {
    /// `Ω_1` holds the second coordinates in `near`, `Ω_2` the rest.
    pub fn with_near(s: u32, ell: u32, near: &[u32]) -> OmegaSplit {
        let far: Vec<u32> = (0..=(ell - 1) / 2).filter(|i| !near.contains(i)).collect();
        OmegaSplit {
            omega1: signed(s, ell, near),
            omega2: signed(s, ell, &far),
        }
    }

    /// `Ω_1 = {(±1, ±i) : i = 0, 1, 2}`.
    pub fn standard(s: u32, ell: u32) -> OmegaSplit {
        OmegaSplit::with_near(s, ell, &[0, 1, 2])
    }

    /// Disjoint, negation-closed, and jointly equal to `Ω`.
    pub fn validate(&self, s: u32, ell: u32) -> Result<()> {
        let a: BTreeSet<Vertex> = self.omega1.iter().copied().collect();
        let b: BTreeSet<Vertex> = self.omega2.iter().copied().collect();
        if !a.is_disjoint(&b) {
            return Err(Error::InvalidParameter("Ω halves overlap".into()));
        }
        let all: BTreeSet<Vertex> = a.union(&b).copied().collect();
        let want: BTreeSet<Vertex> = signed(s, ell, &(0..=(ell - 1) / 2).collect::<Vec<_>>())
            .into_iter()
            .collect();
        if all != want {
            return Err(Error::InvalidParameter("Ω halves do not cover Ω".into()));
        }
        Ok(())
    }
}

/// Lifts a directed Hamiltonian cycle `(c_0, ..., c_{l-1})` of `K_l` to an
/// `l`-cycle of `C_s[l]`: once around the parts, then back and forth between
/// parts 0 and 1. The reverse projection goes round the other way and then
/// alternates between parts 0 and `s-1`.
pub fn project(c: &[u32], s: u32, reversed: bool) -> Result<Cycle> {
    let ell = c.len() as u32;
    let distinct: BTreeSet<u32> = c.iter().copied().collect();
    if distinct.len() != c.len() || c.iter().any(|&x| x >= ell) {
        return Err(Error::InvalidParameter(format!(
            "{c:?} is not a Hamiltonian cycle of K_{ell}"
        )));
    }
    if s < 3 || s.is_multiple_of(2) || ell <= s || !(ell - s).is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "projection needs odd s >= 3 and l > s of the same parity, got s = {s}, l = {ell}"
        )));
    }
    let part = |i: u32| -> u32 {
        if i < s {
            if reversed {
                (s - i) % s
            } else {
                i
            }
        } else if (i - s).is_multiple_of(2) {
            0
        } else if reversed {
            s - 1
        } else {
            1
        }
    };
    Cycle::new(
        c.iter()
            .enumerate()
            .map(|(i, &h)| Vertex::Blown {
                part: part(i as u32),
                point: h,
            })
            .collect(),
    )
}

/// The `s`-developments of the projection and reverse projection of every
/// cycle in `hams`.
pub fn project_all(s: u32, hams: &[Vec<u32>]) -> Result<Vec<Cycle>> {
    let mut out = Vec::with_capacity(2 * s as usize * hams.len());
    for h in hams {
        for reversed in [false, true] {
            let c = project(h, s, reversed)?;
            out.extend((0..s).map(|i| c.shift_part(i, s)));
        }
    }
    Ok(out)
}

/// `s(l-5)` cycles partitioning `Cay[Z_s x Z_l, {±1} x ±{3, ..., (l-1)/2}]`.
pub fn decompose_omega2(s: u32, ell: u32) -> Result<Vec<Cycle>> {
    let hams: Vec<Vec<u32>> = circulant_ham_decomposition(ell)?
        .cycles
        .iter()
        .map(|c| {
            c.vertices()
                .iter()
                .map(|v| match v {
                    Vertex::Plain(x) => *x,
                    _ => unreachable!("circulant cycles are over Z_l"),
                })
                .collect()
        })
        .collect();
    project_all(s, &hams)
}
