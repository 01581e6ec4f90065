use crate::error::{Error, Result};
use crate::groebner::{hilbert_data, lift_witness, BaseRing, ModuleVector, Submodule};
use crate::poly::{Homogeneity, PolyMatrix, Polynomial};

use super::FreeComplex;

/// A homogeneous system of parameters `x_1, ..., x_n`.
#[derive(Clone, Debug)]
pub struct SopData {
    base: BaseRing,
    elements: Vec<Polynomial>,
    degrees: Vec<i64>,
    colength: Option<u64>,
}

impl SopData {
    /// Wraps the elements without checking that they form a sop. Operations
    /// that need a sop refuse such data.
    pub fn unchecked(base: &BaseRing, elements: Vec<Polynomial>) -> Result<Self> {
        let mut degrees = Vec::with_capacity(elements.len());
        for (k, x) in elements.iter().enumerate() {
            x.compatible(&Polynomial::zero(base.ring()))?;
            match x.homogeneous_degree() {
                Homogeneity::Degree(d) if d > 0 => degrees.push(d),
                _ => {
                    return Err(Error::Validation(format!(
                        "x{} = {x} is not homogeneous of positive degree",
                        k + 1
                    )))
                }
            }
        }
        Ok(SopData {
            base: base.clone(),
            elements,
            degrees,
            colength: None,
        })
    }

    pub fn base(&self) -> &BaseRing {
        &self.base
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// `n`, the number of parameters.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_validated(&self) -> bool {
        self.colength.is_some()
    }

    /// `dim_k R/Q`, known once validated.
    pub fn colength(&self) -> Option<u64> {
        self.colength
    }

    /// `D = Σ deg x_i`, the twist of the top Koszul module.
    pub fn total_degree(&self) -> i64 {
        self.degrees.iter().sum()
    }

    /// `Q` as an ideal of the base ring.
    pub fn ideal(&self) -> Submodule {
        Submodule::ideal(&self.base.unit_module(), &self.elements).expect("sop elements live in the base ring")
    }
}

/// Checks that the elements form a homogeneous sop: `n ≥ 2`, `n` equals the
/// dimension of the base ring, and `R/(x)` is finite-dimensional.
pub fn validate_sop(base: &BaseRing, elements: Vec<Polynomial>) -> Result<SopData> {
    let mut sop = SopData::unchecked(base, elements)?;
    if sop.len() < 2 {
        return Err(Error::PreconditionFailed(format!(
            "at least two parameters are required, got {}",
            sop.len()
        )));
    }
    let q = hilbert_data(&sop.ideal());
    let Some(colength) = q.dimension else {
        return Err(Error::NotASop {
            series: q.series.to_string(),
        });
    };
    let ring_dim = hilbert_data(&Submodule::new(&base.unit_module(), Vec::new())?)
        .series
        .krull_dimension()
        .unwrap_or(0);
    if ring_dim != sop.len() {
        return Err(Error::Validation(format!(
            "{} parameters given but the ring has dimension {ring_dim}",
            sop.len()
        )));
    }
    sop.colength = Some(colength);
    Ok(sop)
}

/// True iff every entry of `φ_n` lies in `Q`, i.e. `Im φ_n ⊆ Q·F_{n-1}`.
pub fn check_qf_containment(c: &FreeComplex, sop: &SopData) -> bool {
    let n = c.length();
    if n == 0 {
        return true;
    }
    let q = sop.ideal();
    c.map(n)
        .entries()
        .all(|(_, _, e)| e.is_zero() || q.contains(&ModuleVector::new(vec![e.clone()])))
}

/// Writes `φ_n(v_λ) = Σ x_i · v_(λ,i)` for every top basis vector; the result
/// is indexed `[λ][i-1]`.
///
/// Each entry is divided by `x_1, ..., x_n` in order, quotient terms going to
/// the first `x_i` whose lead term divides; a remainder that survives the
/// division is expressed through a Gröbner-basis witness.
pub fn decompose_images(phi_n: &PolyMatrix, sop: &SopData) -> Result<Vec<Vec<ModuleVector>>> {
    let ring = sop.base().ring();
    let n = sop.len();
    let mut out = Vec::with_capacity(phi_n.cols());
    for lam in 0..phi_n.cols() {
        let mut parts = vec![ModuleVector::zero(ring, phi_n.rows()); n];
        for row in 0..phi_n.rows() {
            let quotients = divide_entry(phi_n.get(row, lam), sop)?;
            for (i, q) in quotients.into_iter().enumerate() {
                parts[i].coords[row] = q;
            }
        }
        out.push(parts);
    }
    Ok(out)
}

fn divide_entry(f: &Polynomial, sop: &SopData) -> Result<Vec<Polynomial>> {
    let ring = sop.base().ring();
    let xs = sop.elements();
    let mut q = vec![Polynomial::zero(ring); xs.len()];
    let mut rem = Polynomial::zero(ring);
    let mut p = f.clone();
    while let Some((m, c)) = p.lead().cloned() {
        let hit = xs.iter().enumerate().find_map(|(i, x)| {
            let (lm, lc) = x.lead()?;
            lm.quotient_of(&m).map(|t| (i, t, &c / lc))
        });
        match hit {
            Some((i, t, coeff)) => {
                q[i] = q[i].add_scaled(&coeff, &t, &Polynomial::one(ring));
                p = p.add_scaled(&-&coeff, &t, &xs[i]);
            }
            None => {
                let lead = Polynomial::monomial(ring, m, c);
                rem = &rem + &lead;
                p = &p - &lead;
            }
        }
    }
    if !sop.base().is_zero(&rem) {
        let unit = sop.base().unit_module();
        let gens: Vec<ModuleVector> = xs.iter().map(|x| ModuleVector::new(vec![x.clone()])).collect();
        let extra = lift_witness(&ModuleVector::new(vec![rem]), &unit, &gens)?;
        for (qi, e) in q.iter_mut().zip(extra) {
            *qi = &*qi + &e;
        }
    }
    Ok(q)
}
