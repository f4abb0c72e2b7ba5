use super::nist::igamc;
use crate::error::{Error, Result};

/// Chi-square goodness of fit of round outputs against the uniform
/// distribution on `[0, 2^N - 1]`, with `2^N - 1` degrees of freedom.
/// Needs at least five expected samples per cell.
pub fn chi_square_symbols(states: &[u32], n_bits: u32) -> Result<f64> {
    if !(1..=24).contains(&n_bits) {
        return Err(Error::Config(format!("symbol width {n_bits} outside 1..=24")));
    }
    let cells = 1usize << n_bits;
    let minimum = 5 * cells;
    if states.len() < minimum {
        return Err(Error::TooFewSamples {
            minimum,
            actual: states.len(),
        });
    }
    let mut histogram = vec![0u64; cells];
    for &s in states {
        let slot = histogram.get_mut(s as usize).ok_or(Error::StateOutOfRange {
            value: s as u64,
            n_bits,
        })?;
        *slot += 1;
    }
    let expected = states.len() as f64 / cells as f64;
    let chi: f64 = histogram
        .iter()
        .map(|&o| {
            let d = o as f64 - expected;
            d * d / expected
        })
        .sum();
    Ok(igamc((cells - 1) as f64 / 2.0, chi / 2.0).clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_histogram_scores_one() {
        let states: Vec<u32> = (0..16).cycle().take(160).collect();
        assert_eq!(chi_square_symbols(&states, 4).unwrap(), 1.0);
    }

    #[test]
    fn constant_output_scores_zero() {
        let p = chi_square_symbols(&[3; 1000], 4).unwrap();
        assert!(p < 1e-100, "{p}");
    }

    #[test]
    fn known_statistic() {
        // counts [6, 4] over two cells: chi = 0.4, df = 1
        // scipy.stats.chi2.sf(0.4, 1) = 0.5270892568655381
        let mut states = vec![0u32; 6];
        states.extend([1; 4]);
        let p = chi_square_symbols(&states, 1).unwrap();
        assert!((p - 0.5270892568655381).abs() < 1e-12, "{p}");
    }

    #[test]
    fn errors() {
        assert!(matches!(
            chi_square_symbols(&[0; 79], 4),
            Err(Error::TooFewSamples { minimum: 80, actual: 79 })
        ));
        assert!(matches!(
            chi_square_symbols(&[16; 80], 4),
            Err(Error::StateOutOfRange { value: 16, .. })
        ));
    }
}
