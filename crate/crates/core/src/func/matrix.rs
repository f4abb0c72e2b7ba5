use super::{coordinate_weight, VectorOfImages};

/// The `N x 2^N` table of successors under single-coordinate updates.
///
/// Cell `(p, q)` is the state obtained from `q` by replacing coordinate `p`
/// with the `p`-th coordinate of `f(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MappingMatrix {
    n_bits: u32,
    // row-major, row p-1 holds coordinate p
    cells: Vec<u32>,
}

impl MappingMatrix {
    pub fn n_bits(&self) -> u32 {
        self.n_bits
    }

    pub fn state_count(&self) -> usize {
        1 << self.n_bits
    }

    /// Cell `(p, q)`, `p` in `1..=N`.
    #[inline]
    pub fn cell(&self, p: u32, q: u32) -> u32 {
        self.cells[(p as usize - 1) * self.state_count() + q as usize]
    }

    pub fn row(&self, p: u32) -> &[u32] {
        let len = self.state_count();
        let start = (p as usize - 1) * len;
        &self.cells[start..start + len]
    }

    pub fn column(&self, q: u32) -> Vec<u32> {
        (1..=self.n_bits).map(|p| self.cell(p, q)).collect()
    }
}

pub fn mapping_matrix(f: &VectorOfImages) -> MappingMatrix {
    let n_bits = f.n_bits();
    let states = f.state_count();
    let mut cells = Vec::with_capacity(n_bits as usize * states);
    for p in 1..=n_bits {
        let w = coordinate_weight(n_bits, p);
        cells.extend(
            f.images()
                .iter()
                .enumerate()
                .map(|(q, &image)| (q as u32 & !w) | (image & w)),
        );
    }
    MappingMatrix { n_bits, cells }
}
