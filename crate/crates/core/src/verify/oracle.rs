use crate::complex::SopData;
use crate::error::{Error, Result};
use crate::groebner::{colon, quotient_length, submodule_equal, Submodule};
use crate::poly::Polynomial;

/// `dim_k (M:Q)/M` against `rank F_n · dim_k R/Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColonLengthCount {
    pub colon_length: u64,
    pub expected: u64,
}

impl ColonLengthCount {
    pub fn passed(&self) -> bool {
        self.colon_length == self.expected
    }
}

pub fn colon_length_check(m: &Submodule, sop: &SopData, top_rank: usize) -> Result<ColonLengthCount> {
    let colength = sop
        .colength()
        .ok_or_else(|| Error::PreconditionFailed("colon length count needs a validated sop".into()))?;
    let c = colon(m, sop.elements())?;
    Ok(ColonLengthCount {
        colon_length: quotient_length(&c, m)?,
        expected: colength * top_rank as u64,
    })
}

/// The homogeneous maximal ideal, one generator per variable.
pub fn maximal_ideal(m: &Submodule) -> Vec<Polynomial> {
    let ring = m.ambient().ring();
    (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect()
}

/// `depth F/M′ > 0`, tested as `M′ : m = M′`.
pub fn depth_positive_check(m: &Submodule) -> Result<bool> {
    let c = colon(m, &maximal_ideal(m))?;
    Ok(submodule_equal(&c, m))
}

#[derive(Clone, Debug)]
pub struct Saturation {
    pub module: Submodule,
    /// Number of colon steps that changed the module.
    pub iterations: usize,
}

/// Iterates `M ← M : J` until it stabilizes, allowing at most `max_iter`
/// changing steps.
pub fn saturate(m: &Submodule, ideal: &[Polynomial], max_iter: usize) -> Result<Saturation> {
    let mut cur = m.clone();
    for iterations in 0..=max_iter {
        let next = colon(&cur, ideal)?;
        if submodule_equal(&next, &cur) {
            return Ok(Saturation {
                module: cur,
                iterations,
            });
        }
        cur = next;
    }
    Err(Error::IterationLimit(max_iter))
}
