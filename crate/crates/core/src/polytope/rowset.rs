/// Fixed-capacity bitset over row indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct RowSet(Vec<u64>);

impl RowSet {
    pub fn new(capacity: usize) -> Self {
        RowSet(vec![0; capacity.div_ceil(64)])
    }

    pub fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn intersection(&self, other: &RowSet) -> RowSet {
        RowSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &RowSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}
