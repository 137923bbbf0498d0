//! Persistent segment tree over a fixed key range, with path copying.
//!
//! Every `set` creates a new version sharing all untouched nodes with its
//! parent version, so `k` updates cost `O(k log u)` nodes in total.

use alloc::vec::Vec;

#[derive(Clone, Copy, Debug)]
struct Node {
    left: u32,
    right: u32,
    value: usize,
}

/// An arena holding every version of a map from `0..universe` to `usize`.
#[derive(Clone, Debug)]
pub struct PersistentArray {
    universe: usize,
    nodes: Vec<Node>,
}

/// Handle to one version.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Version(u32);

impl PersistentArray {
    /// Creates the arena and the version mapping every key to `fill`.
    pub fn new(universe: usize, fill: usize) -> (Self, Version) {
        assert!(universe >= 1);
        let mut arena = Self { universe, nodes: Vec::new() };
        let root = arena.build(0, universe, fill);
        (arena, Version(root))
    }

    fn build(&mut self, lo: usize, hi: usize, fill: usize) -> u32 {
        if hi - lo == 1 {
            return self.push(Node { left: u32::MAX, right: u32::MAX, value: fill });
        }
        let mid = lo + (hi - lo) / 2;
        let left = self.build(lo, mid, fill);
        let right = self.build(mid, hi, fill);
        self.push(Node { left, right, value: fill })
    }

    fn push(&mut self, node: Node) -> u32 {
        self.nodes.push(node);
        (self.nodes.len() - 1) as u32
    }

    pub fn get(&self, version: Version, key: usize) -> usize {
        assert!(key < self.universe);
        let (mut node, mut lo, mut hi) = (version.0, 0, self.universe);
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            let n = self.nodes[node as usize];
            if key < mid {
                node = n.left;
                hi = mid;
            } else {
                node = n.right;
                lo = mid;
            }
        }
        self.nodes[node as usize].value
    }

    /// New version equal to `version` except at `key`.
    pub fn set(&mut self, version: Version, key: usize, value: usize) -> Version {
        assert!(key < self.universe);
        Version(self.set_rec(version.0, 0, self.universe, key, value))
    }

    fn set_rec(&mut self, node: u32, lo: usize, hi: usize, key: usize, value: usize) -> u32 {
        if hi - lo == 1 {
            return self.push(Node { left: u32::MAX, right: u32::MAX, value });
        }
        let mid = lo + (hi - lo) / 2;
        let mut copy = self.nodes[node as usize];
        if key < mid {
            copy.left = self.set_rec(copy.left, lo, mid, key, value);
        } else {
            copy.right = self.set_rec(copy.right, mid, hi, key, value);
        }
        self.push(copy)
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn old_versions_are_unchanged() {
        let (mut arena, v0) = PersistentArray::new(5, 99);
        let v1 = arena.set(v0, 3, 7);
        let v2 = arena.set(v1, 0, 1);
        let v3 = arena.set(v1, 3, 8);
        assert_eq!((0..5).map(|k| arena.get(v0, k)).collect::<Vec<_>>(), vec![99; 5]);
        assert_eq!((0..5).map(|k| arena.get(v1, k)).collect::<Vec<_>>(), vec![99, 99, 99, 7, 99]);
        assert_eq!((0..5).map(|k| arena.get(v2, k)).collect::<Vec<_>>(), vec![1, 99, 99, 7, 99]);
        assert_eq!((0..5).map(|k| arena.get(v3, k)).collect::<Vec<_>>(), vec![99, 99, 99, 8, 99]);
    }

    #[test]
    fn path_copying_is_logarithmic() {
        let (mut arena, mut v) = PersistentArray::new(1024, 0);
        let base = arena.node_count();
        for i in 0..100 {
            v = arena.set(v, (i * 37) % 1024, i);
        }
        // Depth of a 1024-leaf tree is 10, so each update copies 11 nodes.
        assert_eq!(arena.node_count() - base, 100 * 11);
    }

    #[test]
    fn single_key_universe() {
        let (mut arena, v0) = PersistentArray::new(1, 5);
        let v1 = arena.set(v0, 0, 6);
        assert_eq!((arena.get(v0, 0), arena.get(v1, 0)), (5, 6));
    }
}
