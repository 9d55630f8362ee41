use std::fmt;

/// A two-pile position stored canonically: `low <= high`. `(a,b)` and
/// `(b,a)` denote the same position, so the constructor normalizes order
/// and the rest of the crate never handles symmetry again.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position {
    low: u64,
    high: u64,
}

impl Position {
    pub fn new(a: u64, b: u64) -> Self {
        Position { low: a.min(b), high: a.max(b) }
    }

    pub fn low(self) -> u64 {
        self.low
    }

    pub fn high(self) -> u64 {
        self.high
    }

    /// (0,0) is the unique terminal position of every supported game.
    pub fn is_terminal(self) -> bool {
        self.high == 0
    }

    /// Total token count; every legal move strictly decreases it.
    pub fn total(self) -> u64 {
        self.low + self.high
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.low, self.high)
    }
}

impl From<(u64, u64)> for Position {
    fn from((a, b): (u64, u64)) -> Self {
        Position::new(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_canonicalizes() {
        assert_eq!(Position::new(5, 2), Position::new(2, 5));
        assert_eq!(Position::new(5, 2).low(), 2);
        assert_eq!(Position::new(5, 2).high(), 5);
    }

    #[test]
    fn terminal() {
        assert!(Position::new(0, 0).is_terminal());
        assert!(!Position::new(0, 1).is_terminal());
    }
}
