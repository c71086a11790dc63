//! Formula-free ground truth. Ideals of R_n are handled as Z4-submodules of
//! Z4^{2n} closed under multiplication by x and u, canonicalized by Howell form.

pub mod howell;
mod ideal;

pub use howell::{howell_form, left_kernel, Submodule};
pub use ideal::{
    enumerate_ideals, from_vector, module_rank, r_span, to_vector, z4_closure, IdealSpan,
    ENUMERATION_GUARD,
};
