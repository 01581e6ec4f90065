//! The transform `F ↦ ∗F`: the chain map `σ : F_n ⊗ K• → F•`, its mapping
//! cone, the split top, the choice of a free basis of `F_{n-1}` and the
//! assembled complex.

mod checks;
mod cone;
mod select;
mod sigma;
mod star;

pub use checks::{sigma_image_checks, SigmaImageReport};
pub use cone::{mapping_cone, split_top, splitting_is_retraction, splitting_map};
pub use select::{select_basis, BasisSelection, TopIndex};
pub use sigma::{build_sigma, tensor_complex, SigmaChainMap};
pub use star::{
    build_star_top, check_preconditions, star_transform, BasisLabel, Stages, StarComplex, StarTop, StarTransform,
};
