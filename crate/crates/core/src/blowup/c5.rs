use super::c3::c3_points;
use super::{blown_cycle, check_ell, decompose_omega2, finish, project_all, standard_red};
use crate::design::{CycleSystem, NamedCycle, Route};
use crate::error::{Error, Result};

/// A closed walk written as second coordinates plus the part step taken
/// after each vertex.
struct Walk {
    points: Vec<i64>,
    steps: Vec<i64>,
}

impl Walk {
    fn from_c3(pts: &[(i64, i64)]) -> Walk {
        let n = pts.len();
        let steps = (0..n)
            .map(|i| {
                if (pts[(i + 1) % n].0 - pts[i].0).rem_euclid(3) == 1 {
                    1
                } else {
                    -1
                }
            })
            .collect();
        Walk {
            points: pts.iter().map(|p| p.1).collect(),
            steps,
        }
    }

    /// Turns the first backward step from `from` to `to` into a forward one.
    /// For `from != to` this trades the edge's difference element for its
    /// negative; for a loop the element is unchanged.
    fn flip(&mut self, from: i64, to: i64) -> Result<()> {
        let n = self.points.len();
        let i = (0..n)
            .find(|&i| {
                self.points[i] == from && self.points[(i + 1) % n] == to && self.steps[i] == -1
            })
            .ok_or_else(|| Error::InvariantViolation(format!("no backward step {from} -> {to}")))?;
        self.steps[i] = 1;
        Ok(())
    }

    fn flip_first_loop(&mut self) -> Result<()> {
        let n = self.points.len();
        let i = (0..n)
            .find(|&i| self.points[i] == self.points[(i + 1) % n] && self.steps[i] == -1)
            .ok_or_else(|| Error::InvariantViolation("no backward loop step".into()))?;
        self.steps[i] = 1;
        Ok(())
    }

    fn lift(&self) -> Result<Vec<(i64, i64)>> {
        let winding: i64 = self.steps.iter().sum();
        if winding != 5 {
            return Err(Error::InvariantViolation(format!(
                "walk winds {winding}, not 5"
            )));
        }
        let mut g = 0;
        Ok(self
            .points
            .iter()
            .zip(&self.steps)
            .map(|(&h, &e)| {
                let v = (g, h);
                g += e;
                v
            })
            .collect())
    }
}

/// Five base cycles on `Ω_1 = {(±1, 0), (±1, ±1), (±1, ±2)}` of `C_5[l]`.
///
/// They reuse the second-coordinate walks of the `C_3[l]` base cycles, so
/// each still uses every difference element once and keeps its colour
/// counts. Three changes lift the winding from 3 to 5: the first and fourth
/// cycles swap the two orientations of the edge `{3, 4}`, the second and
/// fifth those of `{3, 5}`, and the third turns a backward loop forward.
/// Repeated second coordinates in a walk are always consecutive, so the lift
/// stays a cycle.
pub fn c5_base_cycles(ell: u32) -> Result<Vec<NamedCycle>> {
    check_ell(ell)?;
    let mut walks: Vec<Walk> = c3_points(ell).iter().map(|p| Walk::from_c3(p)).collect();
    walks[0].flip(4, 3)?;
    walks[3].flip(3, 4)?;
    walks[1].flip(5, 3)?;
    walks[4].flip(3, 5)?;
    walks[2].flip_first_loop()?;
    walks
        .iter()
        .enumerate()
        .map(|(i, w)| {
            Ok(NamedCycle::new(
                format!("omega1_{}", i + 1),
                blown_cycle(5, ell, &w.lift()?)?,
            ))
        })
        .collect()
}

/// Five starters for `C_5[7]` covering `{(±1, 0), (±1, ±1), (±1, ±3)}`.
pub fn c5_seven_starters() -> Vec<NamedCycle> {
    const STARTERS: [[(i64, i64); 7]; 5] = [
        [(0, 1), (1, 2), (2, 2), (3, 3), (4, 0), (0, 0), (1, 1)],
        [(0, 3), (1, 2), (2, 5), (3, 2), (4, 6), (0, 6), (1, 3)],
        [(0, 5), (1, 6), (2, 0), (3, 3), (4, 4), (0, 4), (1, 5)],
        [(0, 1), (1, 0), (2, 4), (3, 3), (4, 6), (0, 5), (1, 4)],
        [(0, 4), (1, 0), (2, 6), (3, 2), (4, 1), (0, 5), (1, 1)],
    ];
    STARTERS
        .iter()
        .enumerate()
        .map(|(i, pts)| {
            NamedCycle::new(
                format!("starter_{}", i + 1),
                blown_cycle(5, 7, pts).expect("starters are 7-cycles"),
            )
        })
        .collect()
}

/// `5l` equitable `l`-cycles of `C_5[l]`.
///
/// For `l = 7` the far half is `{(±1, ±2)}`, lifted from the stride-two
/// Hamiltonian cycle, the rest comes from the five starters, and red is the
/// even second coordinates. Larger `l` use [`c5_base_cycles`] and the
/// circulant projections with the usual interval colouring.
pub fn decompose_c5_blowup(ell: u32) -> Result<CycleSystem> {
    check_ell(ell)?;
    if ell == 7 {
        let projected = project_all(5, &[vec![0, 2, 4, 6, 1, 3, 5]])?;
        let red: Vec<bool> = (0..7).map(|h| h % 2 == 0).collect();
        return finish(5, 7, Route::C5Blowup, c5_seven_starters(), projected, &red);
    }
    let bases = c5_base_cycles(ell)?;
    let projected = decompose_omega2(5, ell)?;
    finish(
        5,
        ell,
        Route::C5Blowup,
        bases,
        projected,
        &standard_red(ell),
    )
}
