//! Published listings used as fixtures, plus small helpers.
#![allow(dead_code)]

use equicycle::design::{canonical_form, Cycle, Vertex};

pub fn cyc(listing: &str) -> Cycle {
    let vs: Vec<Vertex> = listing
        .split_whitespace()
        .map(|t| t.parse().unwrap())
        .collect();
    canonical_form(&vs).unwrap()
}

pub fn blown(pts: &[(u32, u32)]) -> Cycle {
    canonical_form(
        &pts.iter()
            .map(|&(part, point)| Vertex::Blown { part, point })
            .collect::<Vec<_>>(),
    )
    .unwrap()
}

/// Base cycles of the K_19 system, l = 9.
pub const K19_BASES: [(&str, &str); 3] = [
    ("c_inf", "inf 2_0 1_0 3_0 0_0 1_1 2_1 0_1 3_1"),
    ("c_mixed", "0_1 7_0 1_1 6_0 2_1 5_0 3_1 4_0 4_1"),
    ("c_half", "0_0 4_0 8_0 3_0 7_0 2_0 6_0 1_0 5_0"),
];

/// Base cycles of the K_69 system, l = 17.
pub const K69_BASES: [(&str, &str); 6] = [
    (
        "c_pure",
        "0_0 1_0 17_0 2_0 8_0 3_0 7_0 4_0 4_1 7_1 3_1 8_1 2_1 10_1 0_1 1_1 17_1",
    ),
    (
        "c_0",
        "6_0 9_1 4_0 11_1 2_0 13_1 0_0 6_1 9_0 4_1 11_0 2_1 13_0 0_1 16_0 23_0 22_1",
    ),
    (
        "c_1",
        "6_1 8_0 4_1 12_0 2_1 14_0 0_1 6_0 8_1 4_0 12_1 2_0 14_1 0_0 15_1 22_1 21_0",
    ),
    (
        "c_inf_0",
        "inf 0_0 14_0 1_0 13_0 2_0 12_0 3_0 11_0 28_0 20_0 29_0 19_0 30_0 18_0 31_0 17_0",
    ),
    (
        "c_inf_1",
        "inf 0_1 15_1 1_1 14_1 2_1 13_1 4_1 6_1 23_1 21_1 30_1 19_1 31_1 18_1 32_1 17_1",
    ),
    (
        "c_2_0",
        "0_0 2_0 4_0 6_0 8_0 10_0 12_0 14_0 16_0 18_0 20_0 22_0 24_0 26_0 28_0 30_0 32_0",
    ),
];

pub const K69_S0: [u32; 7] = [1, 3, 4, 5, 6, 15, 16];
pub const K69_S1: [u32; 8] = [1, 3, 4, 5, 6, 8, 10, 16];
pub const K69_M: u32 = 7;

/// `(l, C_0, C_1, m)` for the other residues mod 8.
pub const C0_C1: [(u32, &str, &str, u32); 3] = [
    (
        15,
        "6_1 9_0 4_1 11_0 2_1 13_0 0_1 6_0 9_1 4_0 11_1 2_0 13_1 0_0 7_0",
        "6_0 8_1 4_0 12_1 2_0 14_1 0_0 6_1 8_0 4_1 12_0 2_1 14_0 0_1 7_1",
        7,
    ),
    (
        21,
        "8_0 9_1 6_0 11_1 4_0 13_1 2_0 15_1 0_0 8_1 9_0 6_1 11_0 4_1 13_0 2_1 15_0 0_1 19_0 29_0 27_1",
        "8_1 12_0 6_1 16_0 4_1 18_0 2_1 20_0 0_1 8_0 12_1 6_0 16_1 4_0 18_1 2_0 20_1 0_0 17_1 27_1 25_0",
        10,
    ),
    (
        19,
        "6_0 8_1 4_0 11_1 3_0 12_1 2_0 18_1 0_0 6_1 8_0 4_1 11_0 3_1 12_0 2_1 18_0 0_1 37_0",
        "6_1 9_0 4_1 15_0 3_1 16_0 2_1 17_0 0_1 6_0 9_1 4_0 15_1 3_0 16_1 2_0 17_1 0_0 37_1",
        7,
    ),
];

/// `(l, m, C_p)`.
pub const CP: [(u32, u32, &str); 4] = [
    (7, 3, "0_0 1_0 5_0 5_1 0_1 1_1 7_1"),
    (
        13,
        5,
        "0_0 1_0 13_0 2_0 6_0 3_0 3_1 6_1 2_1 8_1 0_1 1_1 13_1",
    ),
    (11, 3, "0_0 1_0 11_0 2_0 6_0 6_1 2_1 7_1 0_1 1_1 11_1"),
    (
        19,
        7,
        "0_0 1_0 19_0 2_0 10_0 4_0 9_0 5_0 8_0 8_1 5_1 9_1 4_1 10_1 2_1 11_1 0_1 1_1 19_1",
    ),
];

/// The five C_5[7] starters.
pub const C5_SEVEN: [[(u32, u32); 7]; 5] = [
    [(0, 1), (1, 2), (2, 2), (3, 3), (4, 0), (0, 0), (1, 1)],
    [(0, 3), (1, 2), (2, 5), (3, 2), (4, 6), (0, 6), (1, 3)],
    [(0, 5), (1, 6), (2, 0), (3, 3), (4, 4), (0, 4), (1, 5)],
    [(0, 1), (1, 0), (2, 4), (3, 3), (4, 6), (0, 5), (1, 4)],
    [(0, 4), (1, 0), (2, 6), (3, 2), (4, 1), (0, 5), (1, 1)],
];

/// Fourth C_3[l] base cycle at l = 7.
pub const C3_SEVEN_FOURTH: [(u32, u32); 7] =
    [(0, 0), (1, 1), (2, 2), (0, 3), (2, 4), (0, 5), (2, 6)];
