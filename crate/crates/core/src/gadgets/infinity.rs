use crate::design::{Cycle, Vertex};
use crate::error::{Error, Result};

/// The cycle through the fixed point carrying the `part`-pure differences
/// `±D` twice each and the difference `l` once, over `Z_{2l} x {part}`.
///
/// With `s_k` the alternating sums `d_1 - d_2 + d_3 - ...`, the cycle is
/// `(∞, 0, s_1, ..., s_r, s_r + l, ..., s_1 + l, l)` where `r = (l-3)/2`.
/// `d` must already be strictly decreasing; it is not sorted here.
pub fn infinity_cycle(ell: u32, d: &[u32], part: u8) -> Result<Cycle> {
    if ell < 5 || ell.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "l must be odd and at least 5, got {ell}"
        )));
    }
    let r = ((ell - 3) / 2) as usize;
    if d.len() != r {
        return Err(Error::InvalidParameter(format!(
            "need {r} differences for l = {ell}, got {}",
            d.len()
        )));
    }
    if let Some(bad) = d.iter().find(|&&x| x == 0 || x >= ell) {
        return Err(Error::InvalidParameter(format!(
            "difference {bad} outside 1..{}",
            ell - 1
        )));
    }
    if d.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::InvalidParameter(format!(
            "differences must be strictly decreasing, got {d:?}"
        )));
    }
    let l = i64::from(ell);
    let n = 2 * ell;
    let mut sums = Vec::with_capacity(r);
    let mut s = 0i64;
    for (k, &x) in d.iter().enumerate() {
        s += if k % 2 == 0 {
            i64::from(x)
        } else {
            -i64::from(x)
        };
        if s <= 0 || s >= l {
            return Err(Error::InvariantViolation(format!(
                "partial sum {s} left (0, {ell}) for {d:?}"
            )));
        }
        sums.push(s);
    }
    let mut vs = vec![Vertex::Infinity, Vertex::rot(0, part, n)];
    vs.extend(sums.iter().map(|&s| Vertex::rot(s, part, n)));
    vs.extend(sums.iter().rev().map(|&s| Vertex::rot(s + l, part, n)));
    vs.push(Vertex::rot(l, part, n));
    Cycle::new(vs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::difference::{differences, DifferenceKind};

    fn residues(c: &Cycle) -> Vec<String> {
        c.vertices().iter().map(|v| v.to_string()).collect()
    }

    #[test]
    fn seventeen_part_zero() {
        let c = infinity_cycle(17, &[14, 13, 12, 11, 10, 9, 8], 0).unwrap();
        let want: Vec<String> = [
            "inf", "0", "14", "1", "13", "2", "12", "3", "11", "28", "20", "29", "19", "30", "18",
            "31", "17",
        ]
        .iter()
        .map(|t| {
            if *t == "inf" {
                t.to_string()
            } else {
                format!("{t}_0")
            }
        })
        .collect();
        assert_eq!(residues(&c), want);
    }

    #[test]
    fn seven_with_two_differences() {
        let c = infinity_cycle(7, &[3, 2], 1).unwrap();
        assert_eq!(
            residues(&c),
            ["inf", "0_1", "3_1", "1_1", "8_1", "10_1", "7_1"]
        );
        let diffs = differences(&c, 14).unwrap();
        assert_eq!(
            diffs.values_of(DifferenceKind::Pure(1)),
            vec![2, 2, 3, 3, 7]
        );
        assert_eq!(diffs.infinity_incidences(), &[(0, 1), (7, 1)]);
    }

    #[test]
    fn rejects_bad_sets() {
        assert!(infinity_cycle(9, &[5, 6, 2], 0).is_err());
        assert!(infinity_cycle(9, &[6, 5], 0).is_err());
        assert!(infinity_cycle(9, &[9, 5, 2], 0).is_err());
        assert!(infinity_cycle(8, &[5, 2], 0).is_err());
    }

    #[test]
    fn half_and_half_colouring_is_equitable() {
        // One colour on 0..l-1, the other on l..2l-1, the fixed point blue.
        let c = infinity_cycle(17, &[15, 14, 13, 12, 11, 9, 2], 1).unwrap();
        let red = c
            .vertices()
            .iter()
            .filter(|v| matches!(v, Vertex::Rotational { residue, .. } if *residue < 17))
            .count();
        let blue = c.len() - red;
        assert!(red.abs_diff(blue) == 1, "{red} vs {blue}");
    }
}
