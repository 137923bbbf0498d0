use alloc::vec;
use alloc::vec::Vec;

use crate::gadget::{declared_sides, CoordinateValues, MeasureAdapter, SideInfo, TypeDescriptor};
use crate::measures::{CostScheme, Measure, Symbol, Traversal};
use crate::num::{int, Rational};
use crate::Result;

use super::guarded::{Layout, PadMode};
use super::GadgetParameters;

/// `1_x = 11100, 0_x = 10011, 1_y = 00111, 0_y = 11001`.
pub fn lcs_coordinate_values() -> CoordinateValues {
    CoordinateValues {
        one_x: vec![1, 1, 1, 0, 0],
        zero_x: vec![1, 0, 0, 1, 1],
        one_y: vec![0, 0, 1, 1, 1],
        zero_y: vec![1, 1, 0, 0, 1],
    }
}

/// Gadget for the unmatched-symbol count `|x| + |y| - 2 LCS(x, y)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct LcsAdapter;

impl LcsAdapter {
    pub fn parameters(&self, x_side: &SideInfo, y_side: &SideInfo) -> GadgetParameters {
        let lx = x_side.ty.length;
        let sx = x_side.ty.entry_sum as usize;
        let l = lx + y_side.ty.length;
        GadgetParameters::Lcs { gamma1: l, gamma2: 6 * l, gamma3: 10 * l + 2 * sx - lx, gamma4: 13 * l }
    }

    fn layout(&self, x_side: &SideInfo, y_side: &SideInfo) -> Layout {
        let GadgetParameters::Lcs { gamma1, gamma2, gamma3, gamma4 } = self.parameters(x_side, y_side) else {
            unreachable!()
        };
        Layout { pre: vec![(1, gamma2), (0, gamma1)], sep: gamma3, pad: x_side.count * gamma4 }
    }
}

impl MeasureAdapter for LcsAdapter {
    fn measure(&self) -> Measure {
        Measure::Lcs
    }

    fn coordinate_values(&self) -> CoordinateValues {
        lcs_coordinate_values()
    }

    fn build_x(&self, xs: &[Vec<Symbol>], x_side: &SideInfo, y_side: &SideInfo) -> Result<Vec<Symbol>> {
        self.layout(x_side, y_side).build_x(xs, x_side, y_side)
    }

    fn build_y(&self, ys: &[Vec<Symbol>], x_side: &SideInfo, y_side: &SideInfo) -> Result<Vec<Symbol>> {
        self.layout(x_side, y_side).build_y(ys, x_side, y_side)
    }

    fn offset(&self, x_side: &SideInfo, y_side: &SideInfo) -> Rational {
        int(2 * self.layout(x_side, y_side).pad as i128)
    }

    fn output_types(&self, x_side: &SideInfo, y_side: &SideInfo) -> (TypeDescriptor, TypeDescriptor) {
        let layout = self.layout(x_side, y_side);
        (layout.x_type(x_side), layout.y_type(y_side))
    }

    fn structured_witness(&self, xs: &[Vec<Symbol>], ys: &[Vec<Symbol>], delta: usize) -> Result<Traversal> {
        let (xa, ya) = declared_sides(xs, ys)?;
        self.layout(&xa, &ya).witness(xs, ys, delta, &CostScheme::lcs(), PadMode::MatchZeros)
    }
}
