//! The plotted parameter grids for the sweep subcommand, kept verbatim so
//! regenerated CSVs line up point-for-point with the reference curves.

/// Prime powers on the k = 2 curve.
pub const TQ2_Q: &[u64] = &[
    2, 3, 4, 5, 7, 8, 9, 11, 13, 16,
    17, 19, 23, 25, 27, 29, 31, 32, 37, 41,
    43, 47, 49, 53, 59, 61, 64, 67, 71, 73,
    79, 81, 83, 89, 97, 101, 103, 107, 109, 113,
    121, 125, 127, 128, 131, 137, 139, 149, 151, 157,
];

pub const K4_ALPHAS_X5: &[f64] = &[
    0.2, 0.4, 0.6, 0.8, 1.0, 1.2,
    1.4, 1.6, 1.8, 2.0,
];

pub const K4_ALPHAS_X10: &[f64] = &[
    0.1, 0.2, 0.3, 0.4, 0.5, 0.6,
    0.7, 0.8, 0.9, 1.0, 1.1, 1.2,
    1.3, 1.4, 1.5, 1.6, 1.7, 1.8,
    1.9, 2.0,
];

pub const K4_ALPHAS_X100: &[f64] = &[
    0.1, 0.2, 0.25, 0.35, 0.4, 0.45,
    0.5, 0.55, 0.65, 0.7, 0.75, 0.8,
    0.85, 0.9, 0.95, 1.0, 1.1, 1.15,
    1.25, 1.3, 1.35, 1.4, 1.45, 1.5,
    1.55, 1.6, 1.65, 1.7, 1.75, 1.8,
    1.85, 1.9, 1.95, 2.0,
];

pub const K4_ALPHAS_X1000: &[f64] = &[
    0.1, 0.15, 0.2, 0.25, 0.3, 0.35,
    0.4, 0.45, 0.5, 0.55, 0.6, 0.65,
    0.7, 0.75, 0.8, 0.85, 0.9, 0.95,
    1.0, 1.05, 1.1, 1.15, 1.2, 1.25,
    1.3, 1.35, 1.4, 1.45, 1.5, 1.55,
    1.6, 1.65, 1.7, 1.75, 1.8, 1.85,
    1.9, 1.95, 2.0,
];

/// The four (x, alpha-grid) series of the k = 4 curve.
pub fn k4_series() -> [(u64, &'static [f64]); 4] {
    [
        (5, K4_ALPHAS_X5),
        (10, K4_ALPHAS_X10),
        (100, K4_ALPHAS_X100),
        (1000, K4_ALPHAS_X1000),
    ]
}

/// k range of the p = P bound curve.
pub const UBFIN_K: std::ops::RangeInclusive<usize> = 3..=200;
