//! Successor queries `Next_{=σ}(i)` and `Next_{≠σ}(i)` over a string.

use alloc::vec;
use alloc::vec::Vec;

use super::persistent::{PersistentArray, Version};

/// "No successor": strictly greater than every index.
pub const INF: usize = usize::MAX;

/// Alphabet size at or below which `Auto` picks the dense tables.
pub const DENSE_ALPHABET_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum NextStrategy {
    /// Dense when the alphabet has at most [`DENSE_ALPHABET_LIMIT`] symbols.
    #[default]
    Auto,
    /// One successor array per symbol, `O(|Σ| n)` space.
    Dense,
    /// One persistent-tree version per prefix, `O(n log |Σ|)` space.
    Versioned,
}

#[derive(Clone, Debug)]
enum EqTable {
    Dense(Vec<u32>),
    Versioned { arena: PersistentArray, versions: Vec<Version> },
}

/// Successor structure over `x`, whose symbols must lie in `0..sigma`.
#[derive(Clone, Debug)]
pub struct NextStructure {
    x: Vec<u32>,
    sigma: usize,
    /// `diff_after[p]`: first 1-based index after `p + 1` holding a symbol
    /// different from `x[p]`.
    diff_after: Vec<usize>,
    eq: EqTable,
}

impl NextStructure {
    pub fn build(x: &[u32], sigma: usize, strategy: NextStrategy) -> Self {
        let n = x.len();
        let sigma = sigma.max(1);
        assert!(x.iter().all(|&s| (s as usize) < sigma), "symbol outside 0..sigma");
        let mut diff_after = vec![INF; n];
        for p in (0..n.saturating_sub(1)).rev() {
            diff_after[p] = if x[p + 1] != x[p] { p + 2 } else { diff_after[p + 1] };
        }
        let dense = match strategy {
            NextStrategy::Auto => sigma <= DENSE_ALPHABET_LIMIT,
            NextStrategy::Dense => true,
            NextStrategy::Versioned => false,
        };
        let eq = if dense {
            assert!(n < u32::MAX as usize, "dense tables index with u32");
            let mut t = vec![u32::MAX; (n + 1) * sigma];
            for i in (0..n).rev() {
                let (head, tail) = t.split_at_mut((i + 1) * sigma);
                head[i * sigma..].copy_from_slice(&tail[..sigma]);
                head[i * sigma + x[i] as usize] = (i + 1) as u32;
            }
            EqTable::Dense(t)
        } else {
            let (mut arena, last) = PersistentArray::new(sigma, INF);
            let mut versions = vec![last; n + 1];
            for i in (0..n).rev() {
                versions[i] = arena.set(versions[i + 1], x[i] as usize, i + 1);
            }
            EqTable::Versioned { arena, versions }
        };
        Self { x: x.to_vec(), sigma, diff_after, eq }
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn is_versioned(&self) -> bool {
        matches!(self.eq, EqTable::Versioned { .. })
    }

    /// `min{i' > i : x[i'] = σ}` with 1-based `i'`, or [`INF`].
    pub fn next_eq(&self, i: usize, sigma: u32) -> usize {
        if i >= self.x.len() || sigma as usize >= self.sigma {
            return INF;
        }
        match &self.eq {
            EqTable::Dense(t) => match t[i * self.sigma + sigma as usize] {
                u32::MAX => INF,
                v => v as usize,
            },
            EqTable::Versioned { arena, versions } => arena.get(versions[i], sigma as usize),
        }
    }

    /// `min{i' > i : x[i'] ≠ σ}` with 1-based `i'`, or [`INF`].
    pub fn next_neq(&self, i: usize, sigma: u32) -> usize {
        if i >= self.x.len() {
            INF
        } else if self.x[i] != sigma {
            i + 1
        } else {
            self.diff_after[i]
        }
    }
}
