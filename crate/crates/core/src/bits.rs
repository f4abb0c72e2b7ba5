//! Bit-sequence helpers shared by the generator, the battery and the exporters.
//!
//! A bit sequence is a `[u8]` holding one bit per element (`0` or `1`). Byte
//! packing is always MSB-first: the first bit lands in bit 7 of the first byte.

use crate::error::ParseError;

/// Appends the `n_bits`-wide big-endian representation of `state`
/// (coordinate `x_1` first).
pub fn push_state(out: &mut Vec<u8>, state: u32, n_bits: u32) {
    for shift in (0..n_bits).rev() {
        out.push(((state >> shift) & 1) as u8);
    }
}

/// Packs bits MSB-first. A trailing partial byte is zero-padded.
pub fn pack_msb_first(bits: &[u8]) -> Vec<u8> {
    bits.chunks(8)
        .map(|chunk| {
            chunk
                .iter()
                .enumerate()
                .fold(0u8, |acc, (i, &b)| acc | ((b & 1) << (7 - i)))
        })
        .collect()
}

pub fn unpack_msb_first(bytes: &[u8]) -> Vec<u8> {
    let mut bits = Vec::with_capacity(bytes.len() * 8);
    for &byte in bytes {
        for shift in (0..8).rev() {
            bits.push((byte >> shift) & 1);
        }
    }
    bits
}

pub fn to_ascii(bits: &[u8]) -> String {
    bits.iter().map(|&b| if b == 0 { '0' } else { '1' }).collect()
}

/// Parses a `'0'`/`'1'` string. Whitespace is skipped; anything else is an error.
pub fn parse_ascii(text: &str) -> Result<Vec<u8>, ParseError> {
    let mut bits = Vec::with_capacity(text.len());
    for (line_no, line) in text.lines().enumerate() {
        for (col, ch) in line.chars().enumerate() {
            match ch {
                '0' => bits.push(0),
                '1' => bits.push(1),
                c if c.is_whitespace() => {}
                c => {
                    return Err(ParseError::new(
                        line_no + 1,
                        col + 1,
                        format!("unexpected character {c:?} in bit stream"),
                    ))
                }
            }
        }
    }
    Ok(bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packs_msb_first() {
        assert_eq!(pack_msb_first(&[0, 1, 0, 0, 0, 1, 1, 0]), vec![0x46]);
        assert_eq!(pack_msb_first(&[1]), vec![0x80]);
    }

    #[test]
    fn state_bits_are_big_endian() {
        let mut out = Vec::new();
        push_state(&mut out, 0b0100, 4);
        assert_eq!(out, vec![0, 1, 0, 0]);
    }

    #[test]
    fn ascii_rejects_garbage() {
        let err = parse_ascii("0101\n01x1").unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
    }

    #[test]
    fn ascii_ignores_whitespace() {
        assert_eq!(parse_ascii("01 1\n0\n").unwrap(), vec![0, 1, 1, 0]);
    }
}
