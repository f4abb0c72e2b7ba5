//! The chaotic-iteration generator `CI_f(PRNG1, PRNG2)`.
//!
//! One round draws `m = PRNG1() + k`, then applies `m` single-coordinate
//! updates: each draws a coordinate `S` from PRNG2 and sets `x_S = f(x)_S`.
//! The state after the last update is the round's output. Coordinate `S`
//! has weight `2^(N-S)`, so `x_1` is the most significant bit.

use crate::bits;
use crate::error::{Error, Result};
use crate::func::VectorOfImages;
use crate::sources::EntropySource;

/// How the round-length constant `k` is validated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum KMode {
    /// Requires `k > 3N`.
    #[default]
    Strict,
    /// Accepts any `k >= 1`, e.g. `k = N = 4` for hand-worked traces.
    Compat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub f: VectorOfImages,
    pub k: u32,
    pub seed_state: u32,
    pub mode: KMode,
}

impl GeneratorConfig {
    pub fn new(f: VectorOfImages, k: u32, seed_state: u32) -> Self {
        GeneratorConfig {
            f,
            k,
            seed_state,
            mode: KMode::Strict,
        }
    }

    /// Smallest `k` accepted in strict mode: `3N + 1`.
    pub fn strict_k(n_bits: u32) -> u32 {
        3 * n_bits + 1
    }

    pub fn compat(mut self) -> Self {
        self.mode = KMode::Compat;
        self
    }

    pub fn n_bits(&self) -> u32 {
        self.f.n_bits()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n_bits();
        if self.k == 0 {
            return Err(Error::Config("k must be at least 1".into()));
        }
        if self.mode == KMode::Strict && self.k <= 3 * n {
            return Err(Error::Config(format!(
                "strict mode requires k > 3N = {} (got k = {}); use compat mode to relax",
                3 * n,
                self.k
            )));
        }
        if self.seed_state > self.f.mask() {
            return Err(Error::StateOutOfRange {
                value: self.seed_state as u64,
                n_bits: n,
            });
        }
        Ok(())
    }
}

/// A running generator: configuration, current state and the two sources.
#[derive(Clone, Debug)]
pub struct Generator<P1, P2> {
    config: GeneratorConfig,
    x: u32,
    prng1: P1,
    prng2: P2,
    rounds_emitted: u64,
}

impl<P1: EntropySource, P2: EntropySource> Generator<P1, P2> {
    pub fn new(config: GeneratorConfig, prng1: P1, prng2: P2) -> Result<Self> {
        config.validate()?;
        Ok(Generator {
            x: config.seed_state,
            config,
            prng1,
            prng2,
            rounds_emitted: 0,
        })
    }

    pub fn config(&self) -> &GeneratorConfig {
        &self.config
    }

    pub fn state(&self) -> u32 {
        self.x
    }

    pub fn rounds_emitted(&self) -> u64 {
        self.rounds_emitted
    }

    /// One round; returns the new state.
    pub fn round(&mut self) -> Result<u32> {
        self.round_observed(|_, _| {})
    }

    /// One round, calling `observe(coordinate, new_state)` after every update.
    pub fn round_observed(&mut self, mut observe: impl FnMut(u32, u32)) -> Result<u32> {
        let n = self.config.n_bits();
        let m = self.prng1.next_bit()? + self.config.k;
        let f = &self.config.f;
        let mut x = self.x;
        for _ in 0..m {
            let s = self.prng2.next_coordinate(n)?;
            x = f.update(x, s);
            observe(s, x);
        }
        self.x = x;
        self.rounds_emitted += 1;
        Ok(x)
    }

    /// Outputs of the next `n_rounds` rounds.
    pub fn states(&mut self, n_rounds: usize) -> Result<Vec<u32>> {
        (0..n_rounds).map(|_| self.round()).collect()
    }

    /// Concatenated `N`-bit big-endian round outputs. With `include_seed`
    /// the current state is emitted first.
    pub fn bit_stream(&mut self, n_rounds: usize, include_seed: bool) -> Result<Vec<u8>> {
        let n = self.config.n_bits();
        let mut out = Vec::with_capacity((n_rounds + include_seed as usize) * n as usize);
        if include_seed {
            bits::push_state(&mut out, self.x, n);
        }
        for _ in 0..n_rounds {
            let x = self.round()?;
            bits::push_state(&mut out, x, n);
        }
        Ok(out)
    }

    /// `n_bytes` bytes packed MSB-first from `ceil(8 * n_bytes / N)` rounds;
    /// surplus bits of the last round are dropped.
    pub fn byte_stream(&mut self, n_bytes: usize) -> Result<Vec<u8>> {
        let n = self.config.n_bits() as usize;
        let bit_count = 8 * n_bytes;
        let mut stream = self.bit_stream(bit_count.div_ceil(n), false)?;
        stream.truncate(bit_count);
        Ok(bits::pack_msb_first(&stream))
    }
}
