//! Boolean iteration functions `f: B^N -> B^N` stored as vectors of images.
//!
//! Index conventions used throughout the crate:
//!
//! * storage is 0-based: `images[q] = f(q)`. Formulas stated with a 1-based
//!   position `j` are translated with `q = j - 1`;
//! * bit `i` of a state counts from the right starting at 1, so it has weight
//!   `2^(i-1)`;
//! * coordinate `p` (the `x_p` of a state `(x_1, ..., x_N)`) has weight
//!   `2^(N-p)`: `x_1` is the most significant bit.

mod balance;
mod matrix;
mod search;

use std::fs;
use std::path::Path;

use crate::error::{Error, ParseError, Result};

pub use balance::{balance_rule_check, is_balanced, mutate_pair, BalanceVerdict, Violation};
pub use matrix::{mapping_matrix, MappingMatrix};
pub use search::{search_functions, search_functions_with_limits};

pub const MIN_BITS: u32 = 2;

/// Size limits for exhaustive operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Widest state for which `2^N`-sized tables are built.
    pub max_table_bits: u32,
    /// Widest state for which full iteration graphs are analysed.
    pub max_graph_bits: u32,
    /// Upper bound on the number of candidates a search may visit.
    pub max_candidates: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_table_bits: 16,
            max_graph_bits: 12,
            max_candidates: 1_000_000,
        }
    }
}

impl Limits {
    pub(crate) fn check_table(&self, n_bits: u32) -> Result<()> {
        check_width(n_bits, self.max_table_bits)
    }

    pub(crate) fn check_graph(&self, n_bits: u32) -> Result<()> {
        check_width(n_bits, self.max_graph_bits)
    }
}

fn check_width(n_bits: u32, max: u32) -> Result<()> {
    if (MIN_BITS..=max).contains(&n_bits) {
        Ok(())
    } else {
        Err(Error::Width {
            n_bits,
            min: MIN_BITS,
            max,
        })
    }
}

/// Weight of coordinate `p` (1-based, `x_1` leftmost) in an `n_bits`-wide state.
#[inline]
pub fn coordinate_weight(n_bits: u32, p: u32) -> u32 {
    debug_assert!((1..=n_bits).contains(&p));
    1 << (n_bits - p)
}

/// The vector of images `(f(0), ..., f(2^N - 1))` of an iteration function.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorOfImages {
    n_bits: u32,
    images: Vec<u32>,
}

impl VectorOfImages {
    pub fn new(n_bits: u32, images: Vec<u32>) -> Result<Self> {
        Self::with_limits(n_bits, images, &Limits::default())
    }

    pub fn with_limits(n_bits: u32, images: Vec<u32>, limits: &Limits) -> Result<Self> {
        limits.check_table(n_bits)?;
        let expected = 1usize << n_bits;
        if images.len() != expected {
            return Err(Error::Length {
                expected,
                actual: images.len(),
            });
        }
        let max = (expected - 1) as u32;
        if let Some((position, &value)) = images.iter().enumerate().find(|(_, &v)| v > max) {
            return Err(Error::ImageOutOfRange {
                position,
                value,
                max,
            });
        }
        Ok(VectorOfImages { n_bits, images })
    }

    /// The vectorial Boolean negation: `images[q] = 2^N - 1 - q`.
    pub fn negation(n_bits: u32) -> Result<Self> {
        Self::negation_with_limits(n_bits, &Limits::default())
    }

    pub fn negation_with_limits(n_bits: u32, limits: &Limits) -> Result<Self> {
        limits.check_table(n_bits)?;
        let mask = mask_for(n_bits);
        Ok(VectorOfImages {
            n_bits,
            images: (0..=mask).map(|q| mask ^ q).collect(),
        })
    }

    pub fn identity(n_bits: u32) -> Result<Self> {
        Limits::default().check_table(n_bits)?;
        Ok(VectorOfImages {
            n_bits,
            images: (0..=mask_for(n_bits)).collect(),
        })
    }

    pub fn n_bits(&self) -> u32 {
        self.n_bits
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn into_images(self) -> Vec<u32> {
        self.images
    }

    /// Number of states, `2^N`.
    pub fn state_count(&self) -> usize {
        self.images.len()
    }

    /// `2^N - 1`, the all-ones state.
    pub fn mask(&self) -> u32 {
        mask_for(self.n_bits)
    }

    #[inline]
    pub fn image(&self, q: u32) -> u32 {
        self.images[q as usize]
    }

    /// The state reached from `x` by updating coordinate `p` only.
    #[inline]
    pub fn update(&self, x: u32, p: u32) -> u32 {
        let w = coordinate_weight(self.n_bits, p);
        (x & !w) | (self.images[x as usize] & w)
    }

    pub(crate) fn images_mut(&mut self) -> &mut [u32] {
        &mut self.images
    }

    /// Parses the two-line text format: `N` on line 1, the `2^N` images on line 2.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| ParseError::new(1, 1, "empty function file"))?;
        let n_bits: u32 = header.trim().parse().map_err(|_| {
            ParseError::new(1, 1, format!("expected state width N, found {header:?}"))
        })?;
        if let Err(e) = Limits::default().check_table(n_bits) {
            return Err(ParseError::new(1, 1, e.to_string()).into());
        }
        let expected = 1usize << n_bits;
        let body = lines
            .next()
            .ok_or_else(|| ParseError::new(2, 1, format!("missing line of {expected} images")))?;

        let max = mask_for(n_bits);
        let mut images = Vec::with_capacity(expected);
        for (column, token) in tokens_with_columns(body) {
            let value: u32 = token.parse().map_err(|_| {
                ParseError::new(2, column, format!("expected an integer, found {token:?}"))
            })?;
            if value > max {
                return Err(ParseError::new(
                    2,
                    column,
                    format!("image {value} exceeds 2^N - 1 = {max}"),
                )
                .into());
            }
            if images.len() == expected {
                return Err(ParseError::new(
                    2,
                    column,
                    format!("too many images: expected {expected}"),
                )
                .into());
            }
            images.push(value);
        }
        if images.len() != expected {
            return Err(ParseError::new(
                2,
                body.chars().count() + 1,
                format!("expected {expected} images, found {}", images.len()),
            )
            .into());
        }
        if let Some((offset, extra)) = lines.enumerate().find(|(_, l)| !l.trim().is_empty()) {
            let column = extra.len() - extra.trim_start().len() + 1;
            return Err(ParseError::new(offset + 3, column, "unexpected trailing content").into());
        }
        Ok(VectorOfImages { n_bits, images })
    }

    /// Serializes to the two-line text format, newline-terminated.
    pub fn to_text(&self) -> String {
        let images: Vec<String> = self.images.iter().map(u32::to_string).collect();
        format!("{}\n{}\n", self.n_bits, images.join(" "))
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&fs::read_to_string(path)?)
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_text())?;
        Ok(())
    }
}

/// Free-function form of [`VectorOfImages::negation`].
pub fn negation(n_bits: u32) -> Result<VectorOfImages> {
    VectorOfImages::negation(n_bits)
}

#[inline]
pub(crate) fn mask_for(n_bits: u32) -> u32 {
    ((1u64 << n_bits) - 1) as u32
}

fn tokens_with_columns(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut column = 0;
    line.split(' ').filter_map(move |token| {
        let start = column + 1;
        column += token.chars().count() + 1;
        let trimmed = token.trim();
        (!trimmed.is_empty()).then_some((start, trimmed))
    })
}
