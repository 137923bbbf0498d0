//! OV to a single distance computation: coordinate gadgets, vector gadgets,
//! normalized vector gadgets, and one final gadget call.

use alloc::vec::Vec;

use crate::gadget::{check_budget, check_counts, MeasureAdapter, SideInfo, TypeDescriptor};
use crate::measures::Symbol;
use crate::num::{int, Rational};
use crate::ov::{BitVector, OvInstance};
use crate::Result;

/// Side declarations of the three gadget levels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GadgetPlan {
    /// `d + 1` coordinate values per side.
    pub vector: (SideInfo, SideInfo),
    /// `(S, VG(a))` against `VG(b)`.
    pub normalized: (SideInfo, SideInfo),
    /// `2n` copies of `NVG(a)` against `m` of `NVG(b)`.
    pub outer: (SideInfo, SideInfo),
}

fn next_level<A: MeasureAdapter + ?Sized>(
    adapter: &A,
    sides: &(SideInfo, SideInfo),
    x_count: usize,
    y_count: usize,
) -> (SideInfo, SideInfo) {
    let (tx, ty) = adapter.output_types(&sides.0, &sides.1);
    let max_value = adapter.output_bound(&sides.0, &sides.1);
    (SideInfo { count: x_count, ty: tx, max_value }, SideInfo { count: y_count, ty, max_value })
}

/// Declarations for an `n x m` instance of dimension `d`.
pub fn plan<A: MeasureAdapter + ?Sized>(adapter: &A, n: usize, m: usize, d: usize) -> Result<GadgetPlan> {
    let cv = adapter.coordinate_values();
    let max_value = cv.zero_x.iter().chain(&cv.one_x).chain(&cv.zero_y).chain(&cv.one_y).copied().max().unwrap_or(0);
    let side = |s: &[Symbol]| SideInfo { count: d + 1, ty: TypeDescriptor::of(s), max_value };
    let vector = (side(&cv.zero_x), side(&cv.zero_y));
    let normalized = next_level(adapter, &vector, 2, 1);
    let outer = next_level(adapter, &normalized, 2 * n, m);
    check_counts(&outer.0, &outer.1)?;
    Ok(GadgetPlan { vector, normalized, outer })
}

fn coordinates_x<A: MeasureAdapter + ?Sized>(adapter: &A, a: &BitVector) -> Vec<Vec<Symbol>> {
    let cv = adapter.coordinate_values();
    a.iter().chain(core::iter::once(false)).map(|bit| cv.x(bit).to_vec()).collect()
}

fn coordinates_y<A: MeasureAdapter + ?Sized>(adapter: &A, b: &BitVector) -> Vec<Vec<Symbol>> {
    let cv = adapter.coordinate_values();
    b.iter().chain(core::iter::once(true)).map(|bit| cv.y(bit).to_vec()).collect()
}

/// `VG(a)`.
pub fn vector_gadget_x<A: MeasureAdapter + ?Sized>(adapter: &A, a: &BitVector) -> Result<Vec<Symbol>> {
    let p = plan(adapter, 1, 1, a.len())?;
    adapter.build_x(&coordinates_x(adapter, a), &p.vector.0, &p.vector.1)
}

/// `VG(b)`.
pub fn vector_gadget_y<A: MeasureAdapter + ?Sized>(adapter: &A, b: &BitVector) -> Result<Vec<Symbol>> {
    let p = plan(adapter, 1, 1, b.len())?;
    adapter.build_y(&coordinates_y(adapter, b), &p.vector.0, &p.vector.1)
}

/// `S`, the x-side gadget of `0_x, ..., 0_x, 1_x`.
pub fn selector_gadget<A: MeasureAdapter + ?Sized>(adapter: &A, d: usize) -> Result<Vec<Symbol>> {
    let p = plan(adapter, 1, 1, d)?;
    let cv = adapter.coordinate_values();
    let mut items = alloc::vec![cv.zero_x.clone(); d];
    items.push(cv.one_x.clone());
    adapter.build_x(&items, &p.vector.0, &p.vector.1)
}

/// The constant `C` of the vector-gadget level.
pub fn vector_offset<A: MeasureAdapter + ?Sized>(adapter: &A, d: usize) -> Result<Rational> {
    let p = plan(adapter, 1, 1, d)?;
    Ok(adapter.offset(&p.vector.0, &p.vector.1))
}

/// Every constant of one compiled instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTranscript {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub rho0: Rational,
    pub rho1: Rational,
    pub c: Rational,
    pub c_prime: Rational,
    pub c_prime_prime: Rational,
    pub rho_prime0: Rational,
    pub rho_prime1: Rational,
    pub threshold: Rational,
    /// `(|x|, |y|)` at each level: vector, normalized vector, final.
    pub vector_sizes: (usize, usize),
    pub normalized_sizes: (usize, usize),
    pub final_sizes: (usize, usize),
}

impl ReductionTranscript {
    pub fn cells(&self) -> u128 {
        self.final_sizes.0 as u128 * self.final_sizes.1 as u128
    }
}

/// The transcript of an `n x m x d` compilation, without building strings.
pub fn transcript<A: MeasureAdapter + ?Sized>(adapter: &A, n: usize, m: usize, d: usize) -> Result<ReductionTranscript> {
    let p = plan(adapter, n, m, d)?;
    let (rho0, rho1) = adapter.rho()?;
    let c = adapter.offset(&p.vector.0, &p.vector.1);
    let c_prime = adapter.offset(&p.normalized.0, &p.normalized.1);
    let c_prime_prime = adapter.offset(&p.outer.0, &p.outer.1);
    let dd = int(d as i128);
    let rho_prime0 = c + c_prime + (dd + int(1)) * rho0;
    let rho_prime1 = c + c_prime + dd * rho0 + rho1;
    let threshold = c_prime_prime + int(m as i128 - 1) * rho_prime1 + rho_prime0;
    let (fx, fy) = adapter.output_types(&p.outer.0, &p.outer.1);
    Ok(ReductionTranscript {
        n,
        m,
        d,
        rho0,
        rho1,
        c,
        c_prime,
        c_prime_prime,
        rho_prime0,
        rho_prime1,
        threshold,
        vector_sizes: (p.normalized.0.ty.length, p.normalized.1.ty.length),
        normalized_sizes: (p.outer.0.ty.length, p.outer.1.ty.length),
        final_sizes: (fx.length, fy.length),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub x: Vec<Symbol>,
    pub y: Vec<Symbol>,
    pub transcript: ReductionTranscript,
}

impl Reduction {
    pub fn distance<A: MeasureAdapter + ?Sized>(&self, adapter: &A) -> Result<Rational> {
        adapter.distance(&self.x, &self.y)
    }
}

/// Compiles an OV instance into `(x, y)` with `delta(x, y) <= threshold`
/// iff some pair is orthogonal.
///
/// Refuses with `BudgetExceeded` when `|x| * |y|` would exceed `budget`.
pub fn ov_to_instance<A: MeasureAdapter + ?Sized>(
    inst: &OvInstance,
    adapter: &A,
    budget: u128,
) -> Result<Reduction> {
    let (n, m, d) = (inst.n(), inst.m(), inst.d());
    let transcript = transcript(adapter, n, m, d)?;
    check_budget(transcript.final_sizes.0, transcript.final_sizes.1, budget)?;
    let p = plan(adapter, n, m, d)?;
    let (v, nv, outer) = (&p.vector, &p.normalized, &p.outer);

    let selector = selector_gadget(adapter, d)?;
    let nvg_a = inst
        .a()
        .iter()
        .map(|a| {
            let vg = adapter.build_x(&coordinates_x(adapter, a), &v.0, &v.1)?;
            adapter.build_x(&[selector.clone(), vg], &nv.0, &nv.1)
        })
        .collect::<Result<Vec<_>>>()?;
    let nvg_b = inst
        .b()
        .iter()
        .map(|b| {
            let vg = adapter.build_y(&coordinates_y(adapter, b), &v.0, &v.1)?;
            adapter.build_y(&[vg], &nv.0, &nv.1)
        })
        .collect::<Result<Vec<_>>>()?;

    let doubled: Vec<Vec<Symbol>> = nvg_a.iter().chain(&nvg_a).cloned().collect();
    let x = adapter.build_x(&doubled, &outer.0, &outer.1)?;
    let y = adapter.build_y(&nvg_b, &outer.0, &outer.1)?;
    debug_assert_eq!((x.len(), y.len()), transcript.final_sizes);
    Ok(Reduction { x, y, transcript })
}

/// `delta(x, y) <= threshold` for the compiled instance.
pub fn decide_ov_via_measure<A: MeasureAdapter + ?Sized>(
    inst: &OvInstance,
    adapter: &A,
    budget: u128,
) -> Result<bool> {
    let r = ov_to_instance(inst, adapter, budget)?;
    Ok(r.distance(adapter)? <= r.transcript.threshold)
}
