//! Row reduction over GF(2) on packed rows.

/// Rank of a set of packed binary rows.
pub fn rank(rows: impl IntoIterator<Item = Vec<u64>>) -> usize {
    Basis::from_rows(rows).rank()
}

/// An echelon basis kept in reduced form as rows are inserted.
#[derive(Debug, Clone, Default)]
pub struct Basis {
    // (pivot bit index, row)
    rows: Vec<(usize, Vec<u64>)>,
}

fn lowest_bit(row: &[u64]) -> Option<usize> {
    row.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

impl Basis {
    pub fn from_rows(rows: impl IntoIterator<Item = Vec<u64>>) -> Self {
        let mut basis = Self::default();
        for r in rows {
            basis.insert(r);
        }
        basis
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the basis.
    pub fn reduce(&self, mut row: Vec<u64>) -> Vec<u64> {
        for (pivot, b) in &self.rows {
            if (row[pivot / 64] >> (pivot % 64)) & 1 == 1 {
                xor_into(&mut row, b);
            }
        }
        row
    }

    pub fn contains(&self, row: &[u64]) -> bool {
        self.reduce(row.to_vec()).iter().all(|&w| w == 0)
    }

    /// Inserts a row; returns whether it increased the rank.
    pub fn insert(&mut self, row: Vec<u64>) -> bool {
        let row = self.reduce(row);
        match lowest_bit(&row) {
            None => false,
            Some(pivot) => {
                for (_, b) in self.rows.iter_mut() {
                    if (b[pivot / 64] >> (pivot % 64)) & 1 == 1 {
                        xor_into(b, &row);
                    }
                }
                self.rows.push((pivot, row));
                true
            }
        }
    }
}
