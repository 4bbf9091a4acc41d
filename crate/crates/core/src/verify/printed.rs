//! Values as printed in the source tables, kept verbatim for comparison.

/// Induced action of T² on `H¹` in the basis e₁..e₁₈ (row `i`, column `j`).
pub const T2: [[i64; 18]; 18] = [
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

/// Induced action of S² on `H¹` in the basis e₁..e₁₈.
pub const S2: [[i64; 18]; 18] = [
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

/// Char poly of g₁, constant term first.
pub const P: [i64; 7] = [1, -2, -125, -404, -125, -2, 1];
/// Char poly of h₁, constant term first.
pub const P_TILDE: [i64; 7] = [1, -30, -781, -2540, -781, -30, 1];
/// Trace polynomial of `P`, constant term first.
pub const Q: [i64; 4] = [-160, -108, -8, 1];

pub const P_ROOTS: [f64; 6] = [13.51, -7.69, -3.47, -0.28, -0.13, 0.07];
pub const P_TILDE_ROOTS: [f64; 6] = [47.55, -13.72, -3.49, -0.28, -0.07, 0.02];

/// Irreducible orbit representatives on a..i, one string per generator.
pub const REPRESENTATIVES: [[&str; 9]; 4] = [
    ["j", "i", "-k", "-j", "k", "-i", "-1", "1", "1"],
    ["j", "i", "-k", "-j", "k", "-i", "1", "1", "1"],
    ["-j", "-i", "k", "j", "-k", "i", "1", "-1", "-1"],
    ["-j", "-i", "k", "j", "-k", "i", "-1", "-1", "-1"],
];

/// Zeros of the six twisted sections on the EW curve, as pairs of places
/// (`"0"`, `"1"`, `"λ"`, `"∞"`), each of order 2, in basis order.
pub const EW_DIVISORS: [[&str; 2]; 6] = [
    ["0", "∞"],
    ["1", "λ"],
    ["1", "∞"],
    ["0", "λ"],
    ["λ", "∞"],
    ["0", "1"],
];
