use crate::complex::{FreeComplex, SopData};
use crate::error::Result;
use crate::groebner::{colon, quotient_length, submodule_equal, Submodule};

use super::sigma::SigmaChainMap;

/// Consequences of the chain map for the colon module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaImageReport {
    /// `Im σ_0 + Im φ_1 = M : Q`.
    pub sum_is_colon: bool,
    /// `σ_0(Im(1 ⊗ ∂_1)) ⊆ M`.
    pub koszul_boundaries_map_into_m: bool,
    /// `dim_k (M:Q)/M`.
    pub colon_length: u64,
    /// `rank F_n · dim_k R/Q`, when the sop is validated.
    pub expected_length: Option<u64>,
}

impl SigmaImageReport {
    pub fn passed(&self) -> bool {
        self.sum_is_colon && self.koszul_boundaries_map_into_m && Some(self.colon_length) == self.expected_length
    }
}

pub fn sigma_image_checks(f: &FreeComplex, sop: &SopData, sigma: &SigmaChainMap) -> Result<SigmaImageReport> {
    let m = f.image(1)?;
    let colon_module = colon(&m, sop.elements())?;
    let mut gens = crate::complex::columns(sigma.sigma(0));
    gens.extend(crate::complex::columns(f.map(1)));
    let sum = Submodule::new(f.module(0), gens)?;
    let boundaries = sigma.sigma(0).mul(sigma.tensor().map(1))?;
    let koszul_boundaries_map_into_m = crate::complex::columns(&boundaries).iter().all(|v| m.contains(v));
    Ok(SigmaImageReport {
        sum_is_colon: submodule_equal(&sum, &colon_module),
        koszul_boundaries_map_into_m,
        colon_length: quotient_length(&colon_module, &m)?,
        expected_length: sop.colength().map(|c| c * f.rank(f.length()) as u64),
    })
}
