//! Integer intervals and finite configuration windows.

use crate::alphabet::Word;

/// The half-open interval `[start, end)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub start: i64,
    pub end: i64,
}

impl Interval {
    pub fn new(start: i64, end: i64) -> Self {
        assert!(start <= end, "interval [{start}, {end}) is reversed");
        Interval { start, end }
    }

    pub fn len(&self) -> usize {
        (self.end - self.start) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    pub fn contains(&self, g: i64) -> bool {
        self.start <= g && g < self.end
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        other.is_empty() || (self.start <= other.start && other.end <= self.end)
    }

    /// Translate by `g`.
    pub fn shifted(&self, g: i64) -> Interval {
        Interval::new(self.start + g, self.end + g)
    }

    /// The neighborhood `{g + d : g in self, d in [-lo, hi]}`.
    pub fn dilate(&self, lo: i64, hi: i64) -> Interval {
        if self.is_empty() {
            return *self;
        }
        Interval::new(self.start - lo, self.end + hi)
    }

    /// Number of points of `self` outside `inner`.
    pub fn count_outside(&self, inner: &Interval) -> usize {
        (self.start..self.end).filter(|&g| !inner.contains(g)).count()
    }
}

/// A finite pattern: `word[i]` is the letter at position `start + i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigurationWindow {
    pub start: i64,
    pub word: Word,
}

impl ConfigurationWindow {
    pub fn interval(&self) -> Interval {
        Interval::new(self.start, self.start + self.word.len() as i64)
    }

    /// Restriction to `[a, b)`, which must lie inside the window.
    pub fn restrict(&self, a: i64, b: i64) -> Word {
        assert!(self.interval().contains_interval(&Interval::new(a, b)));
        self.word.subword((a - self.start) as usize, (b - self.start) as usize)
    }
}
