//! Measure-agnostic alignment gadgets: input types, partial and structured
//! alignments, and checks of the sandwich inequality
//! `min_partial <= delta(x, y) - C <= min_structured`.

mod alignment;

use alloc::vec::Vec;

pub use alignment::{
    alignment_cost, min_over_partial, min_over_partial_enumerate, min_over_structured,
    DistanceMatrix, PartialAlignment, ALIGNMENT_ENUMERATION_LIMIT,
};

use crate::measures::{entry_sum, Measure, Symbol, Traversal};
use crate::num::Rational;
use crate::{Error, Result};

/// Default bound on `|x| * |y|` for a single quadratic DP.
pub const DEFAULT_CELL_BUDGET: u128 = 4_000_000_000;

/// `(length, entry sum)` of a sequence.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeDescriptor {
    pub length: usize,
    pub entry_sum: u64,
}

impl TypeDescriptor {
    pub fn new(length: usize, entry_sum: u64) -> Self {
        Self { length, entry_sum }
    }

    pub fn of(s: &[Symbol]) -> Self {
        Self::new(s.len(), entry_sum(s))
    }
}

/// What one side of a gadget call declares: its element count, the common
/// element type and an upper bound on the values it contains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SideInfo {
    pub count: usize,
    pub ty: TypeDescriptor,
    pub max_value: Symbol,
}

impl SideInfo {
    /// Describes a non-empty, type-uniform list.
    pub fn of(inputs: &[Vec<Symbol>]) -> Result<Self> {
        let first = inputs.first().ok_or(Error::InvalidInput("gadget side has no elements"))?;
        let ty = TypeDescriptor::of(first);
        if inputs.iter().any(|s| TypeDescriptor::of(s) != ty) {
            return Err(Error::TypeMismatch);
        }
        let max_value = inputs.iter().flatten().copied().max().unwrap_or(0);
        Ok(Self { count: inputs.len(), ty, max_value })
    }

    /// Checks that `inputs` fit this declaration.
    pub fn admits(&self, inputs: &[Vec<Symbol>]) -> Result<()> {
        if inputs.len() != self.count {
            return Err(Error::InvalidInput("element count differs from the declared side"));
        }
        if inputs.iter().any(|s| TypeDescriptor::of(s) != self.ty) {
            return Err(Error::TypeMismatch);
        }
        if inputs.iter().flatten().any(|&v| v > self.max_value) {
            return Err(Error::InvalidInput("value above the declared bound"));
        }
        Ok(())
    }
}

/// Side declarations for `(xs, ys)` sharing one value bound.
pub fn declared_sides(xs: &[Vec<Symbol>], ys: &[Vec<Symbol>]) -> Result<(SideInfo, SideInfo)> {
    let (mut a, mut b) = (SideInfo::of(xs)?, SideInfo::of(ys)?);
    let bound = a.max_value.max(b.max_value);
    a.max_value = bound;
    b.max_value = bound;
    Ok((a, b))
}

/// `0_x, 1_x, 0_y, 1_y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateValues {
    pub zero_x: Vec<Symbol>,
    pub one_x: Vec<Symbol>,
    pub zero_y: Vec<Symbol>,
    pub one_y: Vec<Symbol>,
}

impl CoordinateValues {
    pub fn x(&self, bit: bool) -> &[Symbol] {
        if bit { &self.one_x } else { &self.zero_x }
    }

    pub fn y(&self, bit: bool) -> &[Symbol] {
        if bit { &self.one_y } else { &self.zero_y }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetOutput {
    pub x: Vec<Symbol>,
    pub y: Vec<Symbol>,
    pub offset: Rational,
    pub x_type: TypeDescriptor,
    pub y_type: TypeDescriptor,
}

/// Coordinate values and an alignment gadget for one measure.
pub trait MeasureAdapter {
    fn measure(&self) -> Measure;

    fn distance(&self, u: &[Symbol], v: &[Symbol]) -> Result<Rational> {
        self.measure().distance(u, v)
    }

    fn coordinate_values(&self) -> CoordinateValues;

    /// `GA_x` of `xs` against the declared y side.
    fn build_x(&self, xs: &[Vec<Symbol>], x_side: &SideInfo, y_side: &SideInfo) -> Result<Vec<Symbol>>;

    /// `GA_y` of `ys` against the declared x side.
    fn build_y(&self, ys: &[Vec<Symbol>], x_side: &SideInfo, y_side: &SideInfo) -> Result<Vec<Symbol>>;

    /// The constant `C`.
    fn offset(&self, x_side: &SideInfo, y_side: &SideInfo) -> Rational;

    /// Types of the two outputs, from the declarations alone.
    fn output_types(&self, x_side: &SideInfo, y_side: &SideInfo) -> (TypeDescriptor, TypeDescriptor);

    /// Largest value the outputs may contain.
    fn output_bound(&self, x_side: &SideInfo, y_side: &SideInfo) -> Symbol {
        x_side.max_value.max(y_side.max_value).max(1)
    }

    /// A traversal of `gadget(xs, ys)` realising the structured alignment
    /// with shift `delta`.
    fn structured_witness(&self, xs: &[Vec<Symbol>], ys: &[Vec<Symbol>], delta: usize) -> Result<Traversal>;

    /// `(rho_0, rho_1)` from the coordinate values.
    fn rho(&self) -> Result<(Rational, Rational)> {
        let cv = self.coordinate_values();
        Ok((self.distance(&cv.zero_x, &cv.zero_y)?, self.distance(&cv.one_x, &cv.one_y)?))
    }

    fn gadget(&self, xs: &[Vec<Symbol>], ys: &[Vec<Symbol>]) -> Result<GadgetOutput> {
        let (xa, ya) = declared_sides(xs, ys)?;
        self.gadget_declared(xs, ys, &xa, &ya)
    }

    fn gadget_declared(
        &self,
        xs: &[Vec<Symbol>],
        ys: &[Vec<Symbol>],
        x_side: &SideInfo,
        y_side: &SideInfo,
    ) -> Result<GadgetOutput> {
        let (x_type, y_type) = self.output_types(x_side, y_side);
        Ok(GadgetOutput {
            x: self.build_x(xs, x_side, y_side)?,
            y: self.build_y(ys, x_side, y_side)?,
            offset: self.offset(x_side, y_side),
            x_type,
            y_type,
        })
    }
}

pub(crate) fn check_counts(x_side: &SideInfo, y_side: &SideInfo) -> Result<()> {
    if y_side.count > x_side.count {
        Err(Error::InvalidInput("gadget needs m <= n"))
    } else {
        Ok(())
    }
}

/// Fails when a `|x| x |y|` DP would exceed `budget` cells.
pub fn check_budget(x_len: usize, y_len: usize, budget: u128) -> Result<()> {
    let needed = x_len as u128 * y_len as u128;
    if needed > budget {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandwichReport {
    pub lower: Rational,
    pub centered: Rational,
    pub upper: Rational,
    /// Smallest shift attaining `upper`.
    pub delta_star: usize,
    pub x_len: usize,
    pub y_len: usize,
    /// Output types equal the declared ones.
    pub types_match: bool,
    pub holds: bool,
}

/// Builds the gadget for `(xs, ys)` and compares `delta(x, y) - C` with the
/// partial and structured alignment minima.
pub fn verify_sandwich<A: MeasureAdapter + ?Sized>(
    adapter: &A,
    xs: &[Vec<Symbol>],
    ys: &[Vec<Symbol>],
    budget: u128,
) -> Result<SandwichReport> {
    let (xa, ya) = declared_sides(xs, ys)?;
    check_counts(&xa, &ya)?;
    let (tx, ty) = adapter.output_types(&xa, &ya);
    check_budget(tx.length, ty.length, budget)?;
    let out = adapter.gadget_declared(xs, ys, &xa, &ya)?;
    let centered = adapter.distance(&out.x, &out.y)? - out.offset;
    let d = DistanceMatrix::compute(xs, ys, |u, v| adapter.distance(u, v))?;
    let lower = min_over_partial(&d);
    let (upper, delta_star) = min_over_structured(&d);
    Ok(SandwichReport {
        lower,
        centered,
        upper,
        delta_star,
        x_len: out.x.len(),
        y_len: out.y.len(),
        types_match: TypeDescriptor::of(&out.x) == tx && TypeDescriptor::of(&out.y) == ty,
        holds: lower <= centered && centered <= upper,
    })
}

/// Whether two same-shape input sets produce outputs of equal types.
///
/// Both sets must have equal counts and element types per side, otherwise
/// [`Error::TypeMismatch`]. Value bounds are unified across the two sets.
pub fn verify_type_uniformity<A: MeasureAdapter + ?Sized>(
    adapter: &A,
    first: (&[Vec<Symbol>], &[Vec<Symbol>]),
    second: (&[Vec<Symbol>], &[Vec<Symbol>]),
) -> Result<bool> {
    let (mut xa, mut ya) = declared_sides(first.0, first.1)?;
    let (xb, yb) = declared_sides(second.0, second.1)?;
    if (xa.count, xa.ty, ya.count, ya.ty) != (xb.count, xb.ty, yb.count, yb.ty) {
        return Err(Error::TypeMismatch);
    }
    let bound = xa.max_value.max(xb.max_value);
    xa.max_value = bound;
    ya.max_value = bound;
    let a = adapter.gadget_declared(first.0, first.1, &xa, &ya)?;
    let b = adapter.gadget_declared(second.0, second.1, &xa, &ya)?;
    Ok(TypeDescriptor::of(&a.x) == TypeDescriptor::of(&b.x)
        && TypeDescriptor::of(&a.y) == TypeDescriptor::of(&b.y))
}
