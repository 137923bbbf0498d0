use alloc::vec;
use alloc::vec::Vec;

use crate::measures::Traversal;

/// Incremental builder for 0-based monotone paths.
pub(crate) struct Walk {
    pairs: Vec<(usize, usize)>,
}

impl Walk {
    pub fn new() -> Self {
        Self { pairs: vec![(0, 0)] }
    }

    pub fn pos(&self) -> (usize, usize) {
        *self.pairs.last().unwrap()
    }

    fn step(&mut self, di: usize, dj: usize, count: usize) {
        for _ in 0..count {
            let (i, j) = self.pos();
            self.pairs.push((i + di, j + dj));
        }
    }

    pub fn diag(&mut self, count: usize) {
        self.step(1, 1, count);
    }

    pub fn advance_x(&mut self, count: usize) {
        self.step(1, 0, count);
    }

    pub fn advance_y(&mut self, count: usize) {
        self.step(0, 1, count);
    }

    /// Appends a 1-based local path whose `(1,1)` lands on `origin`.
    pub fn splice(&mut self, origin: (usize, usize), local: &Traversal) {
        for &(a, b) in &local.pairs {
            let p = (origin.0 + a - 1, origin.1 + b - 1);
            if p != self.pos() {
                self.pairs.push(p);
            }
        }
    }

    /// Shifts every pair to 1-based coordinates.
    pub fn finish(self) -> Traversal {
        Traversal { pairs: self.pairs.into_iter().map(|(i, j)| (i + 1, j + 1)).collect() }
    }
}
