/// Membership test for a set of forbidden colors.
pub trait ForbiddenColors {
    fn is_forbidden(&self, color: u32) -> bool;
}

/// Stamped forbidden-color set.
///
/// Color `f` is in the set iff `mark[f] == stamp`. [`clear`](Self::clear)
/// bumps the stamp, so the backing array is never rewritten between uses.
/// The array grows on demand when a larger color is inserted.
#[derive(Debug, Clone)]
pub struct ForbiddenMarker {
    mark: Vec<u32>,
    stamp: u32,
}

impl ForbiddenMarker {
    pub fn with_capacity(capacity: usize) -> Self {
        Self { mark: vec![0; capacity.max(1)], stamp: 1 }
    }

    pub fn capacity(&self) -> usize {
        self.mark.len()
    }

    #[inline]
    pub fn clear(&mut self) {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            // stamp wrapped: old marks could alias the new epoch
            self.mark.iter_mut().for_each(|m| *m = 0);
            self.stamp = 1;
        }
    }

    #[inline]
    pub fn insert(&mut self, color: u32) {
        let c = color as usize;
        if c >= self.mark.len() {
            let new_len = (self.mark.len() * 2).max(c + 1);
            self.mark.resize(new_len, 0);
        }
        self.mark[c] = self.stamp;
    }

    #[inline]
    pub fn contains(&self, color: u32) -> bool {
        self.mark.get(color as usize).is_some_and(|&m| m == self.stamp)
    }

    /// Smallest color `>= from` not in the set.
    #[inline]
    pub fn next_free_from(&self, from: u32) -> u32 {
        let mut c = from;
        while self.contains(c) {
            c += 1;
        }
        c
    }
}

impl ForbiddenColors for ForbiddenMarker {
    #[inline]
    fn is_forbidden(&self, color: u32) -> bool {
        self.contains(color)
    }
}

impl ForbiddenColors for [bool] {
    fn is_forbidden(&self, color: u32) -> bool {
        self.get(color as usize).copied().unwrap_or(false)
    }
}

impl ForbiddenColors for std::collections::BTreeSet<u32> {
    fn is_forbidden(&self, color: u32) -> bool {
        self.contains(&color)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stamp_clears_in_constant_time() {
        let mut f = ForbiddenMarker::with_capacity(4);
        f.insert(0);
        f.insert(2);
        assert!(f.contains(2) && !f.contains(1));
        assert_eq!(f.next_free_from(0), 1);
        f.clear();
        assert!(!f.contains(0) && !f.contains(2));
    }

    #[test]
    fn grows_on_demand_and_never_reads_out_of_range() {
        let mut f = ForbiddenMarker::with_capacity(2);
        assert!(!f.contains(1_000));
        f.insert(9);
        assert!(f.capacity() >= 10);
        assert!(f.contains(9));
    }

    #[test]
    fn wraparound_resets_marks() {
        let mut f = ForbiddenMarker::with_capacity(3);
        f.stamp = u32::MAX;
        f.insert(1);
        f.clear();
        assert!(!f.contains(1));
        f.insert(0);
        assert!(f.contains(0));
    }
}
