use alloc::vec;
use alloc::vec::Vec;

use crate::gadget::{check_counts, declared_sides, CoordinateValues, MeasureAdapter, SideInfo, TypeDescriptor};
use crate::measures::{dtw_traversal, Measure, Symbol, Traversal};
use crate::num::{int, Rational};
use crate::{Error, Result};

use super::guarded::block;
use super::walk::Walk;
use super::GadgetParameters;

/// `1_x = 1100, 0_x = 0110, 1_y = 0011, 0_y = 1010`.
pub fn dtw_coordinate_values() -> CoordinateValues {
    CoordinateValues {
        one_x: vec![1, 1, 0, 0],
        zero_x: vec![0, 1, 1, 0],
        one_y: vec![0, 0, 1, 1],
        zero_y: vec![1, 0, 1, 0],
    }
}

/// Unbalanced gadget for DTW: `M^k x_1 M^k ... M^k x_n M^k`.
///
/// `M` is twice the value bound shared by the two side declarations.
#[derive(Clone, Copy, Debug, Default)]
pub struct DtwAdapter;

impl DtwAdapter {
    pub fn parameters(&self, x_side: &SideInfo, y_side: &SideInfo) -> GadgetParameters {
        GadgetParameters::Dtw {
            big: 2 * x_side.max_value.max(y_side.max_value),
            kappa: 3 * (x_side.ty.length + y_side.ty.length),
        }
    }

    fn constants(&self, x_side: &SideInfo, y_side: &SideInfo) -> (Symbol, usize) {
        let GadgetParameters::Dtw { big, kappa } = self.parameters(x_side, y_side) else { unreachable!() };
        (big, kappa)
    }

    fn build(
        &self,
        items: &[Vec<Symbol>],
        own: &SideInfo,
        x_side: &SideInfo,
        y_side: &SideInfo,
    ) -> Result<Vec<Symbol>> {
        check_counts(x_side, y_side)?;
        own.admits(items)?;
        if own.ty.length == 0 {
            return Err(Error::EmptyCurve);
        }
        let (big, kappa) = self.constants(x_side, y_side);
        let mut out = Vec::with_capacity(side_type(own, big, kappa).length);
        block(big, kappa, &mut out);
        for z in items {
            out.extend_from_slice(z);
            block(big, kappa, &mut out);
        }
        Ok(out)
    }
}

fn side_type(side: &SideInfo, big: Symbol, kappa: usize) -> TypeDescriptor {
    let k = side.count;
    TypeDescriptor::new(
        (k + 1) * kappa + k * side.ty.length,
        ((k + 1) * kappa) as u64 * big as u64 + k as u64 * side.ty.entry_sum,
    )
}

impl MeasureAdapter for DtwAdapter {
    fn measure(&self) -> Measure {
        Measure::Dtw
    }

    fn coordinate_values(&self) -> CoordinateValues {
        dtw_coordinate_values()
    }

    fn build_x(&self, xs: &[Vec<Symbol>], x_side: &SideInfo, y_side: &SideInfo) -> Result<Vec<Symbol>> {
        self.build(xs, x_side, x_side, y_side)
    }

    fn build_y(&self, ys: &[Vec<Symbol>], x_side: &SideInfo, y_side: &SideInfo) -> Result<Vec<Symbol>> {
        self.build(ys, y_side, x_side, y_side)
    }

    fn output_bound(&self, x_side: &SideInfo, y_side: &SideInfo) -> Symbol {
        let bound = x_side.max_value.max(y_side.max_value);
        (2 * bound).max(bound)
    }

    /// `(n - m)(l_x M - s_x)`.
    fn offset(&self, x_side: &SideInfo, y_side: &SideInfo) -> Rational {
        let (big, _) = self.constants(x_side, y_side);
        let per = x_side.ty.length as i128 * big as i128 - x_side.ty.entry_sum as i128;
        int((x_side.count - y_side.count) as i128 * per)
    }

    fn output_types(&self, x_side: &SideInfo, y_side: &SideInfo) -> (TypeDescriptor, TypeDescriptor) {
        let (big, kappa) = self.constants(x_side, y_side);
        (side_type(x_side, big, kappa), side_type(y_side, big, kappa))
    }

    /// Leading x blocks all pair with `y[1]`, trailing ones with the last
    /// entry of `y`. In between, `M` runs go diagonally and each
    /// `(x_{delta+j}, y_j)` uses an optimal local path.
    fn structured_witness(&self, xs: &[Vec<Symbol>], ys: &[Vec<Symbol>], delta: usize) -> Result<Traversal> {
        let (n, m) = (xs.len(), ys.len());
        if m > n || delta > n - m {
            return Err(Error::InvalidShift { delta, max: n.saturating_sub(m) });
        }
        let (xa, ya) = declared_sides(xs, ys)?;
        let (_, kappa) = self.constants(&xa, &ya);
        let (lx, ly) = (xa.ty.length, ya.ty.length);
        if lx == 0 || ly == 0 {
            return Err(Error::EmptyCurve);
        }
        let x_len = (n + 1) * kappa + n * lx;
        let mut walk = Walk::new();
        walk.advance_x(delta * (kappa + lx));
        walk.diag(kappa - 1);
        for j in 0..m {
            let origin = ((delta + j) * (kappa + lx) + kappa, j * (kappa + ly) + kappa);
            let (_, local) = dtw_traversal(&xs[delta + j], &ys[j])?;
            walk.splice(origin, &local);
            walk.diag(kappa);
        }
        walk.advance_x(x_len - 1 - walk.pos().0);
        Ok(walk.finish())
    }
}
