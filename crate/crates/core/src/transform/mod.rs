//! 2-D DCT-II for block sizes 4..64 and the reversible 4-point lapped
//! pre/post filter pair applied across transform block edges.

mod dct;
mod lapping;
mod tables;

pub use dct::{dct_forward, dct_inverse, CoeffBlock, COEFF_FRAC_BITS};
pub use lapping::{
    postfilter_plane, postfilter_span, prefilter_plane, prefilter_span, LappedFilterParams,
    LiftKind, LiftStep,
};
