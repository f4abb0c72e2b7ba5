//! Reference iteration functions for 4-bit states.

/// Balanced, chaotic 4-bit iteration functions obtained from the negation by
/// one to eight paired mutations.
pub const KNOWN_BALANCED: [(&str, &[u32]); 8] = [
    ("F'1", &[14, 15, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0]),
    ("F'2", &[14, 15, 13, 12, 9, 10, 11, 8, 7, 6, 5, 4, 3, 2, 1, 0]),
    ("F'3", &[14, 15, 9, 4, 11, 8, 13, 10, 7, 6, 5, 12, 3, 2, 1, 0]),
    ("F'4", &[14, 15, 9, 12, 3, 8, 13, 10, 7, 6, 5, 4, 11, 2, 1, 0]),
    ("F'5", &[14, 15, 9, 4, 11, 8, 13, 10, 7, 6, 5, 12, 3, 2, 0, 1]),
    ("F'6", &[14, 15, 9, 4, 11, 8, 13, 10, 3, 6, 5, 12, 7, 2, 0, 1]),
    ("F'7", &[14, 15, 9, 4, 3, 8, 13, 10, 5, 2, 7, 12, 11, 6, 1, 0]),
    ("F'8", &[14, 15, 5, 8, 9, 2, 11, 12, 3, 4, 13, 6, 7, 10, 0, 1]),
];

/// Unbalanced 4-bit function used in the worked generator trace.
pub const TRACE_EXAMPLE: [u32; 16] = [14, 14, 12, 12, 10, 10, 9, 9, 6, 6, 4, 4, 2, 2, 1, 0];

/// Worked trace: initial state, per-round PRNG1 bits (with `k = 4`) and the
/// coordinate strategy.
pub const TRACE_SEED_STATE: u32 = 0b0100;
pub const TRACE_K: u32 = 4;
pub const TRACE_M_BITS: [u64; 3] = [0, 1, 0];
pub const TRACE_STRATEGY: [u64; 13] = [2, 4, 2, 3, 4, 1, 1, 4, 4, 3, 2, 3, 3];
