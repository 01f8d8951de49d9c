/// Candidate pairings tested, tallied per pass and per source group.
///
/// A comparison is one (cube, cube) pairing across adjacent groups that the
/// algorithm actually tests, whether or not the two combine.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ComparisonCounter {
    per_pass: Vec<u64>,
    per_group: Vec<Vec<u64>>,
    total: u64,
}

impl ComparisonCounter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Opens a new pass whose source groups are `0..groups`.
    pub fn begin_pass(&mut self, groups: usize) {
        self.per_pass.push(0);
        self.per_group.push(vec![0; groups]);
    }

    /// Records one comparison from source group `group` in the current pass.
    ///
    /// Panics if no pass has been opened.
    pub fn record(&mut self, group: usize) {
        let pass = self.per_pass.len() - 1;
        self.per_pass[pass] += 1;
        self.per_group[pass][group] += 1;
        self.total += 1;
    }

    pub fn per_pass(&self) -> &[u64] {
        &self.per_pass
    }

    /// Comparisons in `pass` (0-based) broken down by source group.
    pub fn per_group(&self, pass: usize) -> &[u64] {
        &self.per_group[pass]
    }

    pub fn first_pass(&self) -> u64 {
        self.per_pass.first().copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn passes(&self) -> usize {
        self.per_pass.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_is_sum_of_passes() {
        let mut c = ComparisonCounter::new();
        c.begin_pass(3);
        c.record(0);
        c.record(2);
        c.begin_pass(2);
        c.record(1);
        assert_eq!(c.per_pass(), &[2, 1]);
        assert_eq!(c.per_group(0), &[1, 0, 1]);
        assert_eq!(c.total(), c.per_pass().iter().sum::<u64>());
        assert_eq!(c.first_pass(), 2);
    }
}
