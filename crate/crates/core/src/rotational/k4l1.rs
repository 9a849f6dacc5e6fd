use super::{check_ell, RotationalPlan};
use crate::design::{
    Colour, Colouring, Cycle, CycleSystem, NamedCycle, Route, Vertex, VertexFamily,
};
use crate::difference::{differences, DifferenceKind};
use crate::error::{Error, Result};
use crate::gadgets::{close_chain, infinity_cycle, y_gadget, y_terminal, z_gadget, Path};

/// Part 0: labels `0..l` red, `l..2l` blue; part 1 the other way round;
/// `∞` blue. Classes: `2l` red, `2l + 1` blue.
pub fn colouring_k4l1(ell: u32) -> Colouring {
    let family = VertexFamily::Rotational {
        modulus: 2 * ell,
        infinity: true,
    };
    Colouring::from_fn(family.vertices(), |v| match *v {
        Vertex::Rotational { part: 0, residue } if residue < ell => Colour::Red,
        Vertex::Rotational { part: 1, residue } if residue >= ell => Colour::Red,
        _ => Colour::Blue,
    })
}

/// Builder for a cycle assembled from gadgets and explicit runs.
struct Chain {
    n: u32,
    segments: Vec<Vec<Vertex>>,
}

impl Chain {
    fn new(n: u32) -> Chain {
        Chain {
            n,
            segments: Vec::new(),
        }
    }

    fn z(&mut self, x: i64, a: i64, b: i64, i: u8) -> Result<&mut Chain> {
        let b = u32::try_from(b)
            .map_err(|_| Error::InvariantViolation(format!("negative z-gadget length {b}")))?;
        let p = z_gadget(x, a, b, i, self.n)?;
        self.segments.push(p.vertices().to_vec());
        Ok(self)
    }

    fn path(&mut self, p: &Path) -> &mut Chain {
        self.segments.push(p.vertices().to_vec());
        self
    }

    fn run(&mut self, pts: &[(i64, u8)]) -> &mut Chain {
        let n = self.n;
        self.segments
            .push(pts.iter().map(|&(a, i)| Vertex::rot(a, i, n)).collect());
        self
    }

    fn close(&self) -> Result<Cycle> {
        let refs: Vec<&[Vertex]> = self.segments.iter().map(Vec::as_slice).collect();
        close_chain(&refs)
    }
}

/// The two cycles carrying every mixed difference except `0` and `l`,
/// plus one `i`-pure edge `±m` in `C_i`. Returns `(C_0, C_1, m)`.
pub fn build_c0_c1(ell: u32) -> Result<(Cycle, Cycle, u32)> {
    check_ell(ell)?;
    let n = 2 * ell;
    let l = i64::from(ell);
    let (mut c0, mut c1) = (Chain::new(n), Chain::new(n));
    let m = match ell % 8 {
        7 => {
            let x = (l - 3) / 2;
            c0.z(x, 3, (l - 3) / 4, 1)?
                .run(&[(0, 1), (x, 0)])
                .z(x, 3, (l - 3) / 4, 0)?
                .run(&[(0, 0), ((l - 1) / 2, 0), (x, 1)]);
            c1.z(x, 2, (l - 7) / 8, 0)?
                .z((l + 1) / 4, (l + 1) / 2, (l + 1) / 8, 0)?
                .run(&[(0, 0), (x, 1)])
                .z(x, 2, (l - 7) / 8, 1)?
                .z((l + 1) / 4, (l + 1) / 2, (l + 1) / 8, 1)?
                .run(&[(0, 1), ((l - 1) / 2, 1), (x, 0)]);
            (ell - 1) / 2
        }
        1 => {
            if ell < 9 {
                return Err(Error::InvalidParameter(format!("l = {ell} too small")));
            }
            let x = (l - 5) / 2;
            let mm = (l - 3) / 2;
            c0.z(x, 3, (l - 5) / 4, 0)?
                .run(&[(0, 0), (x, 1)])
                .z(x, 3, (l - 5) / 4, 1)?
                .run(&[(0, 1), (l - 1, 0), (l - 1 + mm, 0), (l - 1 + x, 1), (x, 0)]);
            c1.z(x, 2, (l - 9) / 8, 1)?
                .z((l - 1) / 4, (l - 1) / 2, (l - 1) / 8, 1)?
                .run(&[(0, 1), (x, 0)])
                .z(x, 2, (l - 9) / 8, 0)?
                .z((l - 1) / 4, (l - 1) / 2, (l - 1) / 8, 0)?
                .run(&[(0, 0), (l - 2, 1), (l - 2 + mm, 1), (l - 2 + x, 0), (x, 1)]);
            mm as u32
        }
        5 => {
            if ell < 13 {
                return Err(Error::InvalidParameter(format!("l = {ell} too small")));
            }
            let x = (l - 5) / 2;
            let half = (l - 1) / 2;
            c0.z(x, 1, (l - 5) / 4, 0)?
                .run(&[(0, 0), (x, 1)])
                .z(x, 1, (l - 5) / 4, 1)?
                .run(&[
                    (0, 1),
                    (l - 2, 0),
                    (l - 2 + half, 0),
                    (l - 2 + x, 1),
                    (x, 0),
                ]);
            c1.z(x, 4, (l - 13) / 8, 1)?
                .z((l + 3) / 4, half, (l + 3) / 8, 1)?
                .run(&[(0, 1), (x, 0)])
                .z(x, 4, (l - 13) / 8, 0)?
                .z((l + 3) / 4, half, (l + 3) / 8, 0)?
                .run(&[
                    (0, 0),
                    (l - 4, 1),
                    (l - 4 + half, 1),
                    (l - 4 + x, 0),
                    (x, 1),
                ]);
            half as u32
        }
        3 => {
            if ell < 11 {
                return Err(Error::InvalidParameter(format!("l = {ell} too small")));
            }
            let x = (l - 7) / 2;
            let b = (l - 11) / 8;
            for (i, chain) in [(0u8, &mut c0), (1u8, &mut c1)] {
                let j = 1 - i;
                let (a, inner, hi) = if i == 0 {
                    (2, [(3 * l - 13) / 4, (3 * l - 9) / 4], (l + 13) / 2)
                } else {
                    (3, [(3 * l + 3) / 4, (3 * l + 7) / 4], (l + 11) / 2)
                };
                for (p, q) in [(i, j), (j, i)] {
                    chain
                        .z(x, a, b, p)?
                        .run(&[
                            ((l - 3) / 4, p),
                            (inner[0], q),
                            ((l - 7) / 4, p),
                            (inner[1], q),
                            ((l - 11) / 4, p),
                        ])
                        .z((l - 11) / 4, hi, b, p)?
                        .run(&[(0, p), (x, q)]);
                }
                // the second link becomes the closing run
                chain.segments.pop();
                chain.run(&[(0, j), (2 * l - 1, i), (x, i)]);
            }
            (ell - 5) / 2
        }
        _ => unreachable!("l is odd"),
    };
    Ok((c0.close()?, c1.close()?, m))
}

/// The mixed-free base cycle: mixed differences `0` and `l`, and pure
/// differences avoiding `±2`, `±m`, `l` in part 0 and `±m`, `l` in part 1.
/// Every translate contains `x_1` whenever it contains `x_0`.
pub fn build_cp(ell: u32, m: u32) -> Result<Cycle> {
    check_ell(ell)?;
    let n = 2 * ell;
    let l = i64::from(ell);
    let mi = i64::from(m);
    let r = |a: i64, i: u8| Vertex::rot(a, i, n);

    if ell % 8 == 3 && m == (ell - 5) / 2 {
        if ell == 11 {
            return Cycle::new(
                [
                    (0, 0),
                    (1, 0),
                    (11, 0),
                    (2, 0),
                    (6, 0),
                    (6, 1),
                    (2, 1),
                    (7, 1),
                    (0, 1),
                    (1, 1),
                    (11, 1),
                ]
                .iter()
                .map(|&(a, i)| r(a, i))
                .collect(),
            );
        }
        let b = (l - 15) / 2;
        let t = y_terminal(4, 3, b);
        let mut ch = Chain::new(n);
        ch.run(&[(0, 0), (1, 0), (l, 0), (2, 0), ((l + 1) / 2, 0), (4, 0)])
            .path(&y_gadget(4, 3, b, 0, false, n)?)
            .run(&[(t, 0), (t, 1)])
            .path(&y_gadget(4, 3, b, 1, true, n)?)
            .run(&[
                (4, 1),
                ((l + 1) / 2, 1),
                (2, 1),
                ((l + 3) / 2, 1),
                (0, 1),
                (1, 1),
                (l, 1),
                (0, 0),
            ]);
        return ch.close();
    }
    if ell == 7 {
        if m != 3 {
            return Err(Error::InvalidParameter(format!(
                "l = 7 needs m = 3, got {m}"
            )));
        }
        return Cycle::new(
            [(0, 0), (1, 0), (5, 0), (5, 1), (0, 1), (1, 1), (7, 1)]
                .iter()
                .map(|&(a, i)| r(a, i))
                .collect(),
        );
    }
    if mi < (l - 3) / 2 || mi > l - 3 {
        return Err(Error::InvalidParameter(format!(
            "m = {m} outside {}..={} for l = {ell}",
            (ell - 3) / 2,
            ell - 3
        )));
    }
    let u = ((l + 1) / 2..=l - 2)
        .find(|&u| mi != u - 2 && mi != u)
        .expect("two consecutive candidates cannot both be blocked");
    let b = (l - 11) / 2;
    let t = y_terminal(2, 3, b);
    let mut ch = Chain::new(n);
    ch.run(&[(0, 0), (1, 0), (l, 0), (2, 0)])
        .path(&y_gadget(2, 3, b, 0, false, n)?)
        .run(&[(t, 0), (t, 1)])
        .path(&y_gadget(2, 3, b, 1, true, n)?)
        .run(&[(2, 1), (u, 1), (0, 1), (1, 1), (l, 1), (0, 0)]);
    ch.close()
}

/// The six base cycles over `Z_{2l}`.
pub fn plan_k4l1(ell: u32) -> Result<RotationalPlan> {
    check_ell(ell)?;
    let n = 2 * ell;
    let (c0, c1, m) = build_c0_c1(ell)?;
    let cp = build_cp(ell, m)?;

    let cp_diffs = differences(&cp, n)?;
    let s0 = cp_diffs.values_of(DifferenceKind::Pure(0));
    let s1 = cp_diffs.values_of(DifferenceKind::Pure(1));
    let remaining = |used: &[u32], extra: &[u32]| -> Vec<u32> {
        (1..ell)
            .rev()
            .filter(|d| !used.contains(d) && !extra.contains(d))
            .collect()
    };
    let d0 = remaining(&s0, &[2, m]);
    let d1 = remaining(&s1, &[m]);
    let want = ((ell - 3) / 2) as usize;
    if d0.len() != want || d1.len() != want {
        return Err(Error::InvariantViolation(format!(
            "l = {ell}: {} and {} pure classes left for the cycles through ∞, need {want}",
            d0.len(),
            d1.len()
        )));
    }
    let c2 = Cycle::new(
        (0..i64::from(ell))
            .map(|j| Vertex::rot(2 * j, 0, n))
            .collect(),
    )?;

    Ok(RotationalPlan {
        ell,
        modulus: n,
        base_cycles: vec![
            NamedCycle::new("c_pure", cp),
            NamedCycle::new("c_0", c0),
            NamedCycle::new("c_1", c1),
            NamedCycle::new("c_inf_0", infinity_cycle(ell, &d0, 0)?),
            NamedCycle::new("c_inf_1", infinity_cycle(ell, &d1, 1)?),
            NamedCycle::new("c_2_0", c2),
        ],
        m: Some(m),
        s0,
        s1,
    })
}

/// The `K_{4l+1}` system: `8l + 2` cycles in orbits of length
/// `2l, 2l, 2l, l, l, 2`.
pub fn decompose_k4l1(ell: u32) -> Result<CycleSystem> {
    plan_k4l1(ell)?.into_system(Route::Rotational4l1, colouring_k4l1(ell))
}
