use alloc::vec::Vec;

use crate::gadget::{declared_sides, CoordinateValues, MeasureAdapter, SideInfo, TypeDescriptor};
use crate::measures::{CostScheme, Measure, Symbol, Traversal};
use crate::num::{ceil, int, Rational};
use crate::{Error, Result};

use super::guarded::{Layout, PadMode};
use super::lcs::lcs_coordinate_values;
use super::GadgetParameters;

/// Same strings as for LCS.
pub fn edit_coordinate_values() -> CoordinateValues {
    lcs_coordinate_values()
}

/// Gadget for `Edit(1,1,0,c)` with `0 < c <= 2`.
#[derive(Clone, Copy, Debug)]
pub struct EditAdapter {
    c_subst: Rational,
}

impl EditAdapter {
    pub fn new(c_subst: Rational) -> Result<Self> {
        if c_subst <= int(0) || c_subst > int(2) {
            return Err(Error::InvalidCsubst);
        }
        Ok(Self { c_subst })
    }

    pub fn c_subst(&self) -> Rational {
        self.c_subst
    }

    pub fn parameters(&self, x_side: &SideInfo, y_side: &SideInfo) -> GadgetParameters {
        let lx = x_side.ty.length;
        let sx = x_side.ty.entry_sum as usize;
        let rho = 2 * ceil(int(1) / self.c_subst) as usize;
        let gamma1 = 10 * rho * (lx + y_side.ty.length);
        let gamma2 = 6 * rho * gamma1 + 5 * sx - lx;
        GadgetParameters::Edit {
            rho,
            gamma1,
            gamma2,
            gamma3: 2 * gamma2,
            gamma4: 4 * rho * gamma1 + lx,
            beta: int(1) - self.c_subst / int(5),
        }
    }

    fn layout(&self, x_side: &SideInfo, y_side: &SideInfo) -> Layout {
        let GadgetParameters::Edit { rho, gamma1, gamma2, gamma3, .. } = self.parameters(x_side, y_side) else {
            unreachable!()
        };
        let pre = (0..rho).flat_map(|_| [(1, gamma1), (0, gamma1)]).collect();
        Layout { pre, sep: gamma2, pad: x_side.count * gamma3 }
    }
}

impl MeasureAdapter for EditAdapter {
    fn measure(&self) -> Measure {
        Measure::Edit(CostScheme::canonical(self.c_subst))
    }

    fn coordinate_values(&self) -> CoordinateValues {
        edit_coordinate_values()
    }

    fn build_x(&self, xs: &[Vec<Symbol>], x_side: &SideInfo, y_side: &SideInfo) -> Result<Vec<Symbol>> {
        self.layout(x_side, y_side).build_x(xs, x_side, y_side)
    }

    fn build_y(&self, ys: &[Vec<Symbol>], x_side: &SideInfo, y_side: &SideInfo) -> Result<Vec<Symbol>> {
        self.layout(x_side, y_side).build_y(ys, x_side, y_side)
    }

    fn offset(&self, x_side: &SideInfo, y_side: &SideInfo) -> Rational {
        let GadgetParameters::Edit { gamma2, gamma3, gamma4, beta, .. } = self.parameters(x_side, y_side) else {
            unreachable!()
        };
        let (n, m) = (x_side.count as i128, y_side.count as i128);
        int(2 * n * gamma3 as i128) - beta * int((n - m) * (gamma4 + gamma2) as i128)
    }

    fn output_types(&self, x_side: &SideInfo, y_side: &SideInfo) -> (TypeDescriptor, TypeDescriptor) {
        let layout = self.layout(x_side, y_side);
        (layout.x_type(x_side), layout.y_type(y_side))
    }

    fn structured_witness(&self, xs: &[Vec<Symbol>], ys: &[Vec<Symbol>], delta: usize) -> Result<Traversal> {
        let (xa, ya) = declared_sides(xs, ys)?;
        let scheme = CostScheme::canonical(self.c_subst);
        self.layout(&xa, &ya).witness(xs, ys, delta, &scheme, PadMode::Substitute)
    }
}
