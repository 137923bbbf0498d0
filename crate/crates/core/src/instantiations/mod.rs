//! Coordinate values and alignment gadgets for LCS, `Edit(c)` and DTW, the
//! OV compiler built on them, and reductions from LCS to palindromic and
//! tandem subsequences.

mod dtw;
mod edit;
mod guarded;
mod lcs;
mod reduction;
mod subsequence;
mod walk;

pub use dtw::{dtw_coordinate_values, DtwAdapter};
pub use edit::{edit_coordinate_values, EditAdapter};
pub use lcs::{lcs_coordinate_values, LcsAdapter};
pub use reduction::{
    decide_ov_via_measure, ov_to_instance, plan, selector_gadget, transcript, vector_gadget_x, vector_gadget_y,
    vector_offset, GadgetPlan, Reduction, ReductionTranscript,
};
pub use subsequence::{lps_from_lcs, lts_from_lcs};

use crate::num::Rational;

/// Measure-specific gadget constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadgetParameters {
    Lcs { gamma1: usize, gamma2: usize, gamma3: usize, gamma4: usize },
    Edit { rho: usize, gamma1: usize, gamma2: usize, gamma3: usize, gamma4: usize, beta: Rational },
    /// `big` is the padding value `M`.
    Dtw { big: u32, kappa: usize },
}
