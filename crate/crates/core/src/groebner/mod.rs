//! Gröbner-basis kernel for submodules of graded free modules.
//!
//! Every membership, witness, kernel, colon and intersection question in the
//! rest of the crate is answered here.

mod buchberger;
mod hilbert;
mod module;
mod submodule;
mod vector;

pub use hilbert::{hilbert_data, quotient_length, HilbertData, HilbertSeries, Laurent};
pub use module::{BaseRing, GradedFreeModule, ModuleVector, QuotientRingSpec};
pub use submodule::{
    buchberger, colon, colon_element, intersect, lift_witness, normal_form, submodule_equal, syzygies, Lifter,
    Submodule,
};

#[cfg(test)]
mod tests;
