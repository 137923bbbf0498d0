//! The layout shared by the LCS and `Edit(c)` gadgets:
//!
//! ```text
//! x =        G(x_1) 0^sep G(x_2) ... 0^sep G(x_n)
//! y = 0^pad  G(y_1) 0^sep ... G(y_m)  0^pad
//! ```
//!
//! with `G(z) = pre z post`, where `post` is `pre` reversed.

use alloc::vec::Vec;

use crate::gadget::{check_counts, SideInfo, TypeDescriptor};
use crate::measures::{edit_traversal, is_binary, CostScheme, Symbol, Traversal};
use crate::{Error, Result};

use super::walk::Walk;

/// How a run of `x` is walked against an all-zero padding block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum PadMode {
    /// Pair `x` symbols with padding zeros one to one, substituting ones.
    Substitute,
    /// Match zeros of `x` against padding and delete its ones.
    MatchZeros,
}

#[derive(Clone, Debug)]
pub(crate) struct Layout {
    /// `pre` as `(symbol, run length)` pairs.
    pub pre: Vec<(Symbol, usize)>,
    pub sep: usize,
    pub pad: usize,
}

pub(crate) fn block(bit: Symbol, len: usize, out: &mut Vec<Symbol>) {
    out.extend(core::iter::repeat_n(bit, len));
}

pub(crate) fn check_binary(inputs: &[Vec<Symbol>]) -> Result<()> {
    if inputs.iter().all(|s| is_binary(s)) {
        Ok(())
    } else {
        Err(Error::NonBinaryAlphabet)
    }
}

impl Layout {
    fn guard_len(&self) -> usize {
        self.pre.iter().map(|&(_, k)| k).sum()
    }

    fn guarded_len(&self, inner: usize) -> usize {
        2 * self.guard_len() + inner
    }

    fn guard_ones(&self) -> u64 {
        2 * self.pre.iter().map(|&(b, k)| b as u64 * k as u64).sum::<u64>()
    }

    fn push_guarded(&self, z: &[Symbol], out: &mut Vec<Symbol>) {
        for &(b, k) in &self.pre {
            block(b, k, out);
        }
        out.extend_from_slice(z);
        for &(b, k) in self.pre.iter().rev() {
            block(b, k, out);
        }
    }

    fn chain(&self, items: &[Vec<Symbol>], out: &mut Vec<Symbol>) {
        for (k, z) in items.iter().enumerate() {
            if k > 0 {
                block(0, self.sep, out);
            }
            self.push_guarded(z, out);
        }
    }

    pub fn build_x(&self, xs: &[Vec<Symbol>], x_side: &SideInfo, y_side: &SideInfo) -> Result<Vec<Symbol>> {
        check_counts(x_side, y_side)?;
        x_side.admits(xs)?;
        check_binary(xs)?;
        let mut out = Vec::with_capacity(self.x_type(x_side).length);
        self.chain(xs, &mut out);
        Ok(out)
    }

    pub fn build_y(&self, ys: &[Vec<Symbol>], x_side: &SideInfo, y_side: &SideInfo) -> Result<Vec<Symbol>> {
        check_counts(x_side, y_side)?;
        y_side.admits(ys)?;
        check_binary(ys)?;
        let mut out = Vec::with_capacity(self.y_type(y_side).length);
        block(0, self.pad, &mut out);
        self.chain(ys, &mut out);
        block(0, self.pad, &mut out);
        Ok(out)
    }

    pub fn x_type(&self, x_side: &SideInfo) -> TypeDescriptor {
        let n = x_side.count;
        TypeDescriptor::new(
            n * self.guarded_len(x_side.ty.length) + (n - 1) * self.sep,
            n as u64 * (self.guard_ones() + x_side.ty.entry_sum),
        )
    }

    pub fn y_type(&self, y_side: &SideInfo) -> TypeDescriptor {
        let m = y_side.count;
        TypeDescriptor::new(
            2 * self.pad + m * self.guarded_len(y_side.ty.length) + (m - 1) * self.sep,
            m as u64 * (self.guard_ones() + y_side.ty.entry_sum),
        )
    }

    /// Walks `x` against `y` so that `G(x_{delta+j})` meets `G(y_j)`.
    pub fn witness(
        &self,
        xs: &[Vec<Symbol>],
        ys: &[Vec<Symbol>],
        delta: usize,
        scheme: &CostScheme,
        mode: PadMode,
    ) -> Result<Traversal> {
        let (n, m) = (xs.len(), ys.len());
        if m > n || delta > n - m {
            return Err(Error::InvalidShift { delta, max: n.saturating_sub(m) });
        }
        let mut x = Vec::new();
        self.chain(xs, &mut x);
        let unit = self.guarded_len(xs[0].len()) + self.sep;
        let left = delta * unit;
        let mut walk = Walk::new();
        self.pad_left(&mut walk, &x[..left], mode)?;
        for (j, y) in ys.iter().enumerate() {
            if j > 0 {
                walk.diag(self.sep);
            }
            walk.diag(self.guard_len());
            let (_, local) = edit_traversal(&xs[delta + j], y, scheme);
            walk.splice(walk.pos(), &local);
            walk.diag(self.guard_len());
        }
        let right_start = walk.pos().0;
        self.pad_right(&mut walk, &x[right_start..], mode)?;
        Ok(walk.finish())
    }

    fn pad_left(&self, walk: &mut Walk, part: &[Symbol], mode: PadMode) -> Result<()> {
        let used = self.pad_usage(part, mode)?;
        self.pad_symbols(walk, part, mode);
        walk.advance_y(self.pad - used);
        Ok(())
    }

    fn pad_right(&self, walk: &mut Walk, part: &[Symbol], mode: PadMode) -> Result<()> {
        let used = self.pad_usage(part, mode)?;
        walk.advance_y(self.pad - used);
        self.pad_symbols(walk, part, mode);
        Ok(())
    }

    fn pad_usage(&self, part: &[Symbol], mode: PadMode) -> Result<usize> {
        let used = match mode {
            PadMode::Substitute => part.len(),
            PadMode::MatchZeros => part.iter().filter(|&&b| b == 0).count(),
        };
        if used > self.pad {
            return Err(Error::InvalidInput("witness run does not fit in the padding"));
        }
        Ok(used)
    }

    fn pad_symbols(&self, walk: &mut Walk, part: &[Symbol], mode: PadMode) {
        for &b in part {
            match mode {
                PadMode::MatchZeros if b == 1 => walk.advance_x(1),
                _ => walk.diag(1),
            }
        }
    }
}
