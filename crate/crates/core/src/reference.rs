//! Published reference values used as golden data.
//!
//! Tables are indexed `[k - 1][n - 1]` for `1 <= n, k <= 10`.

use crate::qseries::Coeff;

/// `p_(k)(n)`, rows `k = 1..=10`, columns `n = 1..=10`.
pub const ORDINARY_TABLE: [[u64; 10]; 10] = [
    [1, 2, 4, 7, 12, 19, 30, 45, 67, 97],
    [0, 2, 2, 6, 8, 16, 22, 38, 52, 82],
    [0, 0, 3, 3, 6, 12, 18, 27, 45, 63],
    [0, 0, 0, 4, 4, 8, 12, 24, 32, 52],
    [0, 0, 0, 0, 5, 5, 10, 15, 25, 40],
    [0, 0, 0, 0, 0, 6, 6, 12, 18, 30],
    [0, 0, 0, 0, 0, 0, 7, 7, 14, 21],
    [0, 0, 0, 0, 0, 0, 0, 8, 8, 16],
    [0, 0, 0, 0, 0, 0, 0, 0, 9, 9],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 10],
];

/// `b_{2,k}(n)`, rows `k = 1..=10`, columns `n = 1..=10`.
pub const TWO_REGULAR_TABLE: [[u64; 10]; 10] = [
    [1, 1, 2, 3, 4, 6, 8, 11, 14, 19],
    [0, 1, 2, 2, 4, 6, 8, 11, 15, 20],
    [0, 0, 2, 1, 2, 5, 5, 7, 11, 15],
    [0, 0, 0, 2, 2, 3, 5, 5, 10, 13],
    [0, 0, 0, 0, 3, 1, 3, 5, 6, 10],
    [0, 0, 0, 0, 0, 3, 2, 4, 5, 7],
    [0, 0, 0, 0, 0, 0, 4, 1, 4, 5],
    [0, 0, 0, 0, 0, 0, 0, 4, 2, 5],
    [0, 0, 0, 0, 0, 0, 0, 0, 5, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 5],
];

/// Nonzero terms of the published expansion of `Σ (b_{3,2}(n) − b_{3,1}(n)) q^n`
/// through `q^70`, as `(n, coefficient)`. Exponents not listed are 0.
///
/// The entries for `n = 59` and `61 <= n <= 70` disagree with exhaustive
/// enumeration; see [`DIFF_3_12_PRINTED_ERRATA`].
pub const DIFF_3_12_PRINTED: [(usize, Coeff); 67] = [
    (1, -1),
    (3, -2),
    (5, -3),
    (6, -1),
    (7, -4),
    (8, -2),
    (9, -6),
    (10, -3),
    (11, -9),
    (12, -4),
    (13, -12),
    (14, -6),
    (15, -15),
    (16, -8),
    (17, -19),
    (18, -9),
    (19, -22),
    (20, -9),
    (21, -24),
    (22, -7),
    (23, -23),
    (25, -17),
    (26, 14),
    (27, -2),
    (28, 40),
    (29, 27),
    (30, 84),
    (31, 77),
    (32, 156),
    (33, 159),
    (34, 267),
    (35, 289),
    (36, 435),
    (37, 486),
    (38, 685),
    (39, 778),
    (40, 1049),
    (41, 1202),
    (42, 1570),
    (43, 1809),
    (44, 2307),
    (45, 2665),
    (46, 3335),
    (47, 3859),
    (48, 4756),
    (49, 5504),
    (50, 6701),
    (51, 7750),
    (52, 9341),
    (53, 10791),
    (54, 12895),
    (55, 14877),
    (56, 17646),
    (57, 20326),
    (58, 23956),
    (59, 27548),
    (60, 32286),
    (61, 37059),
    (62, 43219),
    (63, 49518),
    (64, 57494),
    (65, 65749),
    (66, 76038),
    (67, 86796),
    (68, 100016),
    (69, 113959),
    (70, 130885),
];

/// Highest exponent covered by [`DIFF_3_12_PRINTED`].
pub const DIFF_3_12_PRINTED_MAX: usize = 70;

/// `(n, printed, enumerated)` for every printed coefficient of `b_{3,2} − b_{3,1}`
/// that differs from the count obtained by enumerating all 3-regular partitions.
pub const DIFF_3_12_PRINTED_ERRATA: [(usize, Coeff, Coeff); 11] = [
    (59, 27548, 27547),
    (61, 37059, 37057),
    (62, 43219, 43218),
    (63, 49518, 49514),
    (64, 57494, 57491),
    (65, 65749, 65743),
    (66, 76038, 76031),
    (67, 86796, 86785),
    (68, 100016, 100004),
    (69, 113959, 113940),
    (70, 130885, 130864),
];

/// Dense printed coefficients `c[0..=70]`, with 0 for absent exponents.
pub fn diff_3_12_printed_dense() -> Vec<Coeff> {
    let mut out = vec![0; DIFF_3_12_PRINTED_MAX + 1];
    for &(n, c) in &DIFF_3_12_PRINTED {
        out[n] = c;
    }
    out
}

/// `p_(k)(n)` from [`ORDINARY_TABLE`]; `None` outside `1..=10`.
pub fn ordinary_cell(k: usize, n: usize) -> Option<u64> {
    cell(&ORDINARY_TABLE, k, n)
}

/// `b_{2,k}(n)` from [`TWO_REGULAR_TABLE`]; `None` outside `1..=10`.
pub fn two_regular_cell(k: usize, n: usize) -> Option<u64> {
    cell(&TWO_REGULAR_TABLE, k, n)
}

fn cell(table: &[[u64; 10]; 10], k: usize, n: usize) -> Option<u64> {
    table.get(k.checked_sub(1)?)?.get(n.checked_sub(1)?).copied()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::{gf_diff, GfId};

    #[test]
    fn cell_lookup() {
        assert_eq!(ordinary_cell(10, 10), Some(10));
        assert_eq!(two_regular_cell(7, 7), Some(4));
        assert_eq!(two_regular_cell(1, 1), Some(1));
        assert_eq!(two_regular_cell(8, 9), Some(2));
        assert_eq!(ordinary_cell(0, 3), None);
        assert_eq!(ordinary_cell(3, 11), None);
    }

    #[test]
    fn printed_expansion_shape() {
        let dense = diff_3_12_printed_dense();
        assert_eq!(dense.len(), 71);
        for n in [0, 2, 4, 24] {
            assert_eq!(dense[n], 0);
        }
        assert!(DIFF_3_12_PRINTED.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn errata_list_is_exactly_the_disagreement() {
        let computed = gf_diff(GfId::Diff312, DIFF_3_12_PRINTED_MAX).unwrap();
        let printed = diff_3_12_printed_dense();
        let mismatches: Vec<(usize, Coeff, Coeff)> = (0..=DIFF_3_12_PRINTED_MAX)
            .filter(|&n| printed[n] != computed.coeff(n))
            .map(|n| (n, printed[n], computed.coeff(n)))
            .collect();
        assert_eq!(mismatches, DIFF_3_12_PRINTED_ERRATA.to_vec());
    }
}
