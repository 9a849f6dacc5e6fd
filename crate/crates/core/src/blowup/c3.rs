use super::{blown_cycle, check_ell, decompose_omega2, finish, standard_red};
use crate::design::{CycleSystem, NamedCycle, Route};
use crate::error::Result;

/// The five base cycles on `Ω_1 = {(±1, 0), (±1, ±1), (±1, ±2)}` of
/// `C_3[l]`, as `(part, point)` sequences. Each winds once around `Z_3`.
pub(crate) fn c3_points(ell: u32) -> Vec<Vec<(i64, i64)>> {
    let l = ell as i64;
    let mut c1 = vec![(0, 0)];
    c1.extend((2..l).rev().map(|j| (if j % 2 == 0 { 1 } else { 0 }, j)));
    c1.push((2, 2));

    let mut c2 = vec![(0, 1), (1, 0), (2, 0)];
    for j in (3..=l - 2).rev().step_by(2) {
        c2.extend([(1, j), (2, j)]);
    }

    let mut c3 = vec![(0, 2), (1, 1), (2, 1)];
    for j in (4..=l - 1).rev().step_by(2) {
        c3.extend([(0, j), (2, j)]);
    }

    let mut c4 = vec![(0, 0), (1, 1), (2, 2)];
    c4.extend((3..l).map(|j| (if j % 2 == 1 { 0 } else { 2 }, j)));

    let half = (l - 1) / 2;
    let a = half % 3;
    let mut c5: Vec<(i64, i64)> = (0..=half).map(|j| (j % 3, 2 * j)).collect();
    for (t, h) in (1..=l - 2).step_by(2).enumerate() {
        let t = t as i64;
        let g = if t == 0 { a + 1 } else { (a + 3 - t) % 3 };
        c5.push((g, h));
    }
    vec![c1, c2, c3, c4, c5]
}

pub fn c3_base_cycles(ell: u32) -> Result<Vec<NamedCycle>> {
    check_ell(ell)?;
    c3_points(ell)
        .iter()
        .enumerate()
        .map(|(i, pts)| {
            Ok(NamedCycle::new(
                format!("omega1_{}", i + 1),
                blown_cycle(3, ell, pts)?,
            ))
        })
        .collect()
}

/// `3l` equitable `l`-cycles of `C_3[l]`: five base cycles developed modulo 3
/// plus projections of a Hamiltonian decomposition of the circulant on
/// `±{3, ..., (l-1)/2}`.
pub fn decompose_c3_blowup(ell: u32) -> Result<CycleSystem> {
    let bases = c3_base_cycles(ell)?;
    let projected = decompose_omega2(3, ell)?;
    finish(
        3,
        ell,
        Route::C3Blowup,
        bases,
        projected,
        &standard_red(ell),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify_certificate;

    #[test]
    fn c3_small_cases_verify() {
        for ell in (7..=31).step_by(2) {
            let sys = decompose_c3_blowup(ell).unwrap();
            assert_eq!(sys.cycle_count(), 3 * ell as usize);
            assert!(verify_certificate(&sys).passed());
        }
    }

    #[test]
    fn c3_base_cycle_for_nine() {
        let pts = &c3_points(9)[0];
        assert_eq!(
            pts,
            &vec![
                (0, 0),
                (1, 8),
                (0, 7),
                (1, 6),
                (0, 5),
                (1, 4),
                (0, 3),
                (1, 2),
                (2, 2)
            ]
        );
    }
}
