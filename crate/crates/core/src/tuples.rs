//! Lexicographic ranking of tuples in `[1, radix]^len`.

/// The space `[1, radix]^len`, ordered lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TupleSpace {
    pub len: usize,
    pub radix: usize,
}

impl TupleSpace {
    pub fn new(len: usize, radix: usize) -> Self {
        TupleSpace { len, radix }
    }

    /// `radix^len`, or `None` if it does not fit in a `u64`.
    pub fn size(&self) -> Option<u64> {
        let exp = u32::try_from(self.len).ok()?;
        (self.radix as u64).checked_pow(exp)
    }

    /// The tuple of lexicographic rank `rank` (0-based).
    pub fn unrank(&self, mut rank: u64) -> Vec<usize> {
        let radix = self.radix as u64;
        let mut tuple = vec![1; self.len];
        for slot in tuple.iter_mut().rev() {
            *slot = (rank % radix) as usize + 1;
            rank /= radix;
        }
        tuple
    }

    pub fn rank(&self, tuple: &[usize]) -> u64 {
        tuple
            .iter()
            .fold(0u64, |acc, &v| acc * self.radix as u64 + (v as u64 - 1))
    }

    /// Tuples with rank in `[start, end)`.
    pub fn range(&self, start: u64, end: u64) -> TupleRange {
        TupleRange {
            radix: self.radix,
            current: self.unrank(start),
            remaining: end.saturating_sub(start),
        }
    }

    pub fn iter(&self) -> TupleRange {
        self.range(0, self.size().expect("tuple space fits in u64"))
    }

    /// Splits `[0, size)` into `parts` contiguous rank blocks whose lengths
    /// differ by at most one. Some blocks are empty when `parts > size`.
    pub fn blocks(&self, parts: usize) -> Vec<(u64, u64)> {
        let size = self.size().expect("tuple space fits in u64");
        let parts = parts.max(1) as u64;
        let (base, extra) = (size / parts, size % parts);
        let mut start = 0;
        (0..parts)
            .map(|idx| {
                let len = base + u64::from(idx < extra);
                let block = (start, start + len);
                start += len;
                block
            })
            .collect()
    }
}

/// Odometer over a contiguous block of a [`TupleSpace`].
#[derive(Debug, Clone)]
pub struct TupleRange {
    radix: usize,
    current: Vec<usize>,
    remaining: u64,
}

impl TupleRange {
    fn advance(&mut self) {
        for slot in self.current.iter_mut().rev() {
            if *slot < self.radix {
                *slot += 1;
                return;
            }
            *slot = 1;
        }
    }

    /// Calls `f` on every tuple of the block in order.
    pub fn for_each_ref(mut self, mut f: impl FnMut(&[usize])) {
        while self.remaining > 0 {
            f(&self.current);
            self.remaining -= 1;
            if self.remaining > 0 {
                self.advance();
            }
        }
    }
}

impl Iterator for TupleRange {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.remaining == 0 {
            return None;
        }
        let item = self.current.clone();
        self.remaining -= 1;
        if self.remaining > 0 {
            self.advance();
        }
        Some(item)
    }
}
