use super::{check_ell, RotationalPlan};
use crate::design::{
    Colour, Colouring, Cycle, CycleSystem, NamedCycle, Route, Vertex, VertexFamily,
};
use crate::error::Result;
use crate::gadgets::graceful_path;

/// Even labels red in part 0, odd labels red in part 1, `∞` blue.
/// Classes: `l` red, `l + 1` blue.
pub fn colouring_k2l1(ell: u32) -> Colouring {
    let family = VertexFamily::Rotational {
        modulus: ell,
        infinity: true,
    };
    Colouring::from_fn(family.vertices(), |v| match *v {
        Vertex::Rotational { part, residue } if (residue + u32::from(part)) % 2 == 0 => Colour::Red,
        _ => Colour::Blue,
    })
}

fn labels_of(p: &crate::gadgets::Path) -> Vec<i64> {
    p.vertices()
        .iter()
        .map(|v| match v {
            Vertex::Plain(x) => i64::from(*x),
            _ => unreachable!("graceful paths are labelled by integers"),
        })
        .collect()
}

/// The three base cycles over `Z_l`: `c_inf` through `∞` built from two
/// graceful paths, `c_mixed`, and `c_half` stepping by `(l-1)/2`.
pub fn plan_k2l1(ell: u32) -> Result<RotationalPlan> {
    check_ell(ell)?;
    let n = ell;
    let l = i64::from(ell);
    let h = (ell - 1) / 2;
    let r = |a: i64, i: u8| Vertex::rot(a, i, n);

    let mut p0 = labels_of(&graceful_path(h, 0)?);
    p0.reverse();
    let p1 = labels_of(&graceful_path(h, 1)?);
    let mut inf = vec![Vertex::Infinity];
    inf.extend(p0.iter().map(|&x| r(x, 0)));
    inf.extend(p1.iter().map(|&x| r(x, 1)));

    let mut mixed = Vec::with_capacity(ell as usize);
    for j in 0..=(l - 3) / 2 {
        mixed.push(r(j, 1));
        mixed.push(r(l - 2 - j, 0));
    }
    mixed.push(r((l - 1) / 2, 1));

    let half: Vec<Vertex> = (0..l).map(|j| r(j * (l - 1) / 2, 0)).collect();

    Ok(RotationalPlan {
        ell,
        modulus: n,
        base_cycles: vec![
            NamedCycle::new("c_inf", Cycle::new(inf)?),
            NamedCycle::new("c_mixed", Cycle::new(mixed)?),
            NamedCycle::new("c_half", Cycle::new(half)?),
        ],
        m: None,
        s0: Vec::new(),
        s1: Vec::new(),
    })
}

/// The `K_{2l+1}` system: `2l + 1` cycles in orbits of length `l`, `l`, 1.
pub fn decompose_k2l1(ell: u32) -> Result<CycleSystem> {
    plan_k2l1(ell)?.into_system(Route::Rotational2l1, colouring_k2l1(ell))
}
