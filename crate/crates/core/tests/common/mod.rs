//! Printed tables shared by the integration tests.

/// Printed T² action on H¹ in the basis e1..e18.
pub const T2_PRINTED: [[i64; 18]; 18] = [
    [0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 2, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0],
    [0, 2, 0, 0, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [-2, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0],
];

/// Printed S² action.
pub const S2_PRINTED: [[i64; 18]; 18] = [
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, -2, 0, 0, 0, 0, 1, 0, 2, 0, 0, 1, 0, 0, 3, 0],
    [0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 2, 0, 0, 1, 0, 0, 2],
    [-1, 0, 2, 0, 0, 2, 0, 0, 0, -2, 0, 0, -2, 0, 0, -3, 0, 0],
    [0, 0, 0, -1, 0, 0, 1, 0, 2, 0, 0, 0, 0, 1, 0, 0, 1, 0],
    [0, 0, 0, 0, 6, 0, 0, -1, 0, 0, 0, -4, 0, 0, -4, 0, 0, -6],
    [1, 0, 3, 0, 0, 1, 0, 0, 0, -2, 0, 0, 0, 0, 0, -4, 0, 0],
    [0, 0, 0, -1, 0, 0, -2, 0, -1, 0, 0, 0, 0, 0, 0, 0, 2, 0],
    [-1, 0, -2, 0, 0, -1, 0, 0, 0, 2, 0, 0, 0, 0, 0, 3, 0, 0],
    [0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, -2],
    [0, 0, 2, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0, -2, 0, 0],
    [0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 2, 0],
    [0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, -2, 0, 0, -1, 0, 0, -2],
    [0, 0, -2, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 2, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, -2, 0],
    [0, 0, 0, 0, 2, 0, 0, -1, 0, 0, 0, 0, 0, 0, -2, 0, 0, -1],
    [0, 0, 2, 0, 0, 2, 0, 0, 0, -2, 0, 0, -2, 0, 0, -3, 0, 0],
    [0, 0, 0, -1, 0, 0, 2, 0, 3, 0, 0, 0, 0, 2, 0, 0, 1, 0],
];
