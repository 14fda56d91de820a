// Generated by `ultracrystal trop freeze`. Do not edit by hand.
use super::Increment;

#[rustfmt::skip]
pub static TABLES: [Increment; 11] = [
    Increment { index: 0, coord: 0, source: "R0",
        num: &[(0, [1, 1, 1, 1, 1, 0, 1]), (0, [1, 1, 1, 1, 0, 1, 0]), (0, [1, 1, 1, 0, 3, 0, 0]), (0, [1, 1, 0, 1, 2, 0, 0]), (0, [2, 2, 0, 1, 1, 0, 0]), (0, [0, 0, 1, 1, 2, 0, 1])],
        den: &[(0, [1, 1, 1, 1, 1, 0, 1]), (0, [1, 1, 1, 1, 0, 1, 0]), (0, [1, 1, 1, 0, 3, 0, 0]), (0, [1, 1, 0, 1, 2, 0, 0]), (0, [1, 2, 0, 1, 1, 0, 0]), (0, [1, 0, 1, 1, 2, 0, 1])] },
    Increment { index: 0, coord: 1, source: "R1",
        num: &[(0, [1, 1, 1, 1, 1, 0, 1]), (0, [1, 1, 1, 1, 0, 1, 0]), (0, [1, 1, 1, 0, 3, 0, 0]), (0, [1, 2, 0, 1, 1, 0, 0]), (0, [0, 1, 0, 1, 2, 0, 0]), (0, [0, 0, 1, 1, 2, 0, 1])],
        den: &[(0, [1, 1, 1, 1, 1, 0, 1]), (0, [1, 1, 1, 1, 0, 1, 0]), (0, [1, 1, 1, 0, 3, 0, 0]), (0, [1, 1, 0, 1, 2, 0, 0]), (0, [1, 2, 0, 1, 1, 0, 0]), (0, [1, 0, 1, 1, 2, 0, 1])] },
    Increment { index: 0, coord: 2, source: "R2",
        num: &[(0, [3, 3, 3, 1, 6, 1, 0]), (0, [3, 3, 3, 3, 3, 0, 3]), (0, [3, 3, 3, 3, 0, 3, 0]), (0, [3, 6, 0, 3, 3, 0, 0]), (0, [0, 3, 3, 2, 3, 2, 0]), (0, [0, 3, 3, 0, 9, 0, 0]), (0, [0, 3, 0, 3, 6, 0, 0]), (0, [0, 0, 3, 3, 6, 0, 3])],
        den: &[(0, [3, 3, 3, 3, 3, 0, 3]), (0, [3, 3, 3, 3, 0, 3, 0]), (0, [3, 3, 3, 0, 9, 0, 0]), (0, [3, 3, 0, 3, 6, 0, 0]), (0, [3, 6, 0, 3, 3, 0, 0]), (0, [3, 0, 3, 3, 6, 0, 3])] },
    Increment { index: 0, coord: 3, source: "R3",
        num: &[(0, [1, 1, 1, 2, 4, 0, 1]), (0, [1, 1, 2, 1, 5, 0, 1]), (0, [1, 1, 2, 2, 2, 1, 1]), (0, [1, 2, 2, 1, 4, 0, 1]), (0, [1, 2, 2, 2, 1, 1, 1]), (0, [1, 2, 2, 2, 0, 2, 0]), (0, [1, 2, 2, 0, 6, 0, 0]), (0, [1, 2, 0, 2, 4, 0, 0]), (0, [2, 2, 2, 1, 4, 0, 1]), (0, [2, 2, 2, 2, 1, 1, 1]), (0, [2, 2, 2, 2, 2, 0, 2]), (0, [2, 3, 1, 2, 2, 0, 1]), (0, [3, 3, 1, 2, 2, 0, 1]), (0, [3, 4, 0, 2, 2, 0, 0]), (0, [0, 1, 1, 2, 4, 0, 1]), (0, [0, 1, 2, 1, 5, 0, 1]), (0, [0, 1, 2, 2, 2, 1, 1]), (0, [0, 0, 2, 2, 4, 0, 2])],
        den: &[(0, [2, 1, 2, 1, 5, 0, 1]), (0, [2, 1, 2, 2, 2, 1, 1]), (0, [2, 1, 2, 2, 3, 0, 2]), (0, [2, 2, 1, 1, 5, 0, 0]), (0, [2, 2, 1, 2, 2, 1, 0]), (0, [2, 2, 0, 2, 4, 0, 0]), (0, [2, 3, 0, 2, 3, 0, 0]), (0, [2, 0, 2, 2, 4, 0, 2]), (0, [3, 1, 2, 1, 5, 0, 1]), (0, [3, 1, 2, 2, 2, 1, 1]), (0, [3, 1, 2, 2, 3, 0, 2]), (0, [3, 2, 1, 1, 5, 0, 0]), (0, [3, 2, 1, 2, 2, 1, 0]), (0, [3, 2, 2, 2, 2, 0, 2]), (0, [3, 2, 2, 2, 0, 2, 0]), (0, [3, 2, 2, 0, 6, 0, 0]), (0, [3, 3, 0, 2, 3, 0, 0]), (0, [3, 4, 0, 2, 2, 0, 0])] },
    Increment { index: 0, coord: 4, source: "R4",
        num: &[(0, [3, 3, 3, 3, 3, 0, 3]), (0, [3, 3, 3, 3, 0, 3, 0]), (0, [3, 3, 3, 0, 9, 0, 0]), (0, [3, 3, 0, 3, 6, 0, 0]), (0, [6, 6, 0, 3, 3, 0, 0]), (0, [0, 0, 3, 3, 6, 0, 3])],
        den: &[(0, [3, 3, 3, 2, 3, 2, 0]), (0, [3, 3, 3, 0, 9, 0, 0]), (0, [3, 3, 0, 3, 6, 0, 0]), (0, [3, 0, 3, 3, 6, 0, 3]), (0, [6, 3, 3, 1, 6, 1, 0]), (0, [6, 3, 3, 3, 3, 0, 3]), (0, [6, 3, 3, 3, 0, 3, 0]), (0, [6, 6, 0, 3, 3, 0, 0])] },
    Increment { index: 0, coord: 5, source: "R5",
        num: &[(0, [1, 1, 1, 1, 1, 0, 1]), (0, [1, 1, 1, 1, 0, 1, 0]), (0, [1, 1, 1, 0, 3, 0, 0]), (0, [1, 1, 0, 1, 2, 0, 0]), (0, [2, 2, 0, 1, 1, 0, 0]), (0, [0, 0, 1, 1, 2, 0, 1])],
        den: &[(0, [1, 1, 1, 1, 0, 1, 0]), (0, [1, 1, 1, 0, 3, 0, 0]), (0, [1, 1, 0, 1, 2, 0, 0]), (0, [1, 0, 1, 1, 2, 0, 1]), (0, [2, 1, 1, 1, 1, 0, 1]), (0, [2, 2, 0, 1, 1, 0, 0])] },
    Increment { index: 1, coord: 1, source: "C1",
        num: &[(0, [1, 1, -1, 0, 0, 0, 0]), (0, [0, 1, -2, 1, -2, 1, -1]), (0, [0, 1, -2, 1, -1, 0, 0])],
        den: &[(0, [0, 1, -2, 1, -2, 1, -1]), (0, [0, 1, -2, 1, -1, 0, 0]), (0, [0, 1, -1, 0, 0, 0, 0])] },
    Increment { index: 1, coord: 3, source: "C3",
        num: &[(0, [1, 1, -2, 1, -1, 0, 0]), (0, [1, 1, -1, 0, 0, 0, 0]), (0, [0, 1, -2, 1, -2, 1, -1])],
        den: &[(0, [1, 1, -1, 0, 0, 0, 0]), (0, [0, 1, -2, 1, -2, 1, -1]), (0, [0, 1, -2, 1, -1, 0, 0])] },
    Increment { index: 1, coord: 5, source: "C5",
        num: &[(0, [1, 1, -2, 1, -2, 1, -1]), (0, [1, 1, -2, 1, -1, 0, 0]), (0, [1, 1, -1, 0, 0, 0, 0])],
        den: &[(0, [1, 1, -2, 1, -1, 0, 0]), (0, [1, 1, -1, 0, 0, 0, 0]), (0, [0, 1, -2, 1, -2, 1, -1])] },
    Increment { index: 2, coord: 2, source: "C2",
        num: &[(0, [1, 0, 3, -1, 0, 0, 0]), (0, [0, 0, 3, -2, 3, -1, 0])],
        den: &[(0, [0, 0, 3, -2, 3, -1, 0]), (0, [0, 0, 3, -1, 0, 0, 0])] },
    Increment { index: 2, coord: 4, source: "C4",
        num: &[(0, [1, 0, 3, -2, 3, -1, 0]), (0, [1, 0, 3, -1, 0, 0, 0])],
        den: &[(0, [1, 0, 3, -1, 0, 0, 0]), (0, [0, 0, 3, -2, 3, -1, 0])] },
];
