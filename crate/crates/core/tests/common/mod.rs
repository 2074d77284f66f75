#![allow(dead_code)]

/// ℓ(m,d) for 0 ≤ m,d ≤ 15 as published (rows m, columns d).
pub const PUBLISHED_TABLE: [[u32; 16]; 16] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15],
    [0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2],
    [0, 3, 2, 3, 0, 3, 2, 3, 0, 3, 2, 3, 0, 3, 2, 3],
    [0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 5, 2, 3, 0, 1, 2, 1, 0, 1, 2, 1, 0, 1, 2, 1],
    [0, 6, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 0],
    [0, 7, 2, 3, 0, 1, 2, 1, 0, 1, 2, 1, 0, 1, 0, 1],
    [0, 8, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 9, 2, 3, 0, 1, 2, 1, 0, 1, 0, 1, 0, 1, 0, 1],
    [0, 10, 0, 2, 0, 2, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 11, 2, 3, 0, 1, 2, 1, 0, 1, 0, 1, 0, 1, 0, 1],
    [0, 12, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 13, 2, 3, 0, 1, 2, 1, 0, 1, 0, 1, 0, 1, 0, 1],
    [0, 14, 0, 2, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 15, 2, 3, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1],
];
