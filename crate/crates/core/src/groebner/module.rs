use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{Homogeneity, ModuleOrder, PolyRing, Polynomial};

use super::buchberger::{reduce_full, reduced_gb};
use super::vector::{SVec, TermOrder};

/// A homogeneous ideal `J` of the polynomial ring; modules over `R/J` adjoin
/// `J·e_k` to every submodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRingSpec {
    generators: Vec<Polynomial>,
    basis: Vec<Polynomial>,
}

impl QuotientRingSpec {
    pub fn new(generators: Vec<Polynomial>) -> Result<Self> {
        let ring = generators
            .first()
            .ok_or_else(|| Error::Validation("quotient ideal needs a generator".into()))?
            .ring()
            .clone();
        for g in &generators {
            match g.homogeneous_degree() {
                Homogeneity::Degree(d) if d > 0 => {}
                Homogeneity::ZeroPoly => {}
                _ => {
                    return Err(Error::Validation(format!(
                        "quotient generator {g} is not homogeneous of positive degree"
                    )))
                }
            }
        }
        let ord = TermOrder::new(ring.clone(), vec![0], ModuleOrder::PositionOverTerm);
        let gb = reduced_gb(
            generators
                .iter()
                .map(|g| SVec::from_coords(std::slice::from_ref(g), 0, &ord))
                .collect(),
            &ord,
        );
        let basis = gb.iter().map(|v| v.to_coords(0, 1, &ring).remove(0)).collect();
        Ok(QuotientRingSpec { generators, basis })
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Reduced Gröbner basis of `J`.
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }
}

/// The ring the modules live over: a polynomial ring or a graded quotient of
/// one.
#[derive(Clone, Debug)]
pub struct BaseRing {
    ring: Arc<PolyRing>,
    quotient: Option<Arc<QuotientRingSpec>>,
}

impl PartialEq for BaseRing {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) && self.quotient == other.quotient
    }
}

impl BaseRing {
    pub fn polynomial(ring: Arc<PolyRing>) -> Self {
        BaseRing { ring, quotient: None }
    }

    pub fn quotient(ring: Arc<PolyRing>, ideal: QuotientRingSpec) -> Self {
        BaseRing {
            ring,
            quotient: Some(Arc::new(ideal)),
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn quotient_spec(&self) -> Option<&QuotientRingSpec> {
        self.quotient.as_deref()
    }

    /// Normal form modulo `J` (the identity over a polynomial ring).
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        match &self.quotient {
            None => p.clone(),
            Some(q) => {
                let ord = TermOrder::new(self.ring.clone(), vec![0], ModuleOrder::PositionOverTerm);
                let basis: Vec<SVec> = q
                    .basis
                    .iter()
                    .map(|g| SVec::from_coords(std::slice::from_ref(g), 0, &ord))
                    .collect();
                let r = reduce_full(SVec::from_coords(std::slice::from_ref(p), 0, &ord), &basis, &ord);
                r.to_coords(0, 1, &self.ring).remove(0)
            }
        }
    }

    pub fn is_zero(&self, p: &Polynomial) -> bool {
        p.is_zero() || (self.quotient.is_some() && self.reduce(p).is_zero())
    }

    pub fn free_module(&self, degrees: Vec<i64>) -> GradedFreeModule {
        GradedFreeModule {
            base: self.clone(),
            degrees,
            order: ModuleOrder::default(),
        }
    }

    /// The rank-one free module `R`, generated in degree zero.
    pub fn unit_module(&self) -> GradedFreeModule {
        self.free_module(vec![0])
    }
}

/// A graded free module `⊕ R(-d_k)`; `degrees` holds the generation degrees
/// `d_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedFreeModule {
    base: BaseRing,
    degrees: Vec<i64>,
    order: ModuleOrder,
}

impl GradedFreeModule {
    pub fn with_order(mut self, order: ModuleOrder) -> Self {
        self.order = order;
        self
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn base(&self) -> &BaseRing {
        &self.base
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.base.ring
    }

    pub fn order(&self) -> ModuleOrder {
        self.order
    }

    pub fn zero_vector(&self) -> ModuleVector {
        ModuleVector::zero(self.ring(), self.rank())
    }

    pub fn basis_vector(&self, k: usize) -> ModuleVector {
        let mut v = self.zero_vector();
        v.coords[k] = Polynomial::one(self.ring());
        v
    }

    pub fn direct_sum(&self, other: &GradedFreeModule) -> GradedFreeModule {
        let mut degrees = self.degrees.clone();
        degrees.extend_from_slice(&other.degrees);
        GradedFreeModule {
            base: self.base.clone(),
            degrees,
            order: self.order,
        }
    }

    pub fn check(&self, v: &ModuleVector) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::dims(format!(
                "vector with {} coordinates in a module of rank {}",
                v.len(),
                self.rank()
            )));
        }
        for c in &v.coords {
            c.compatible(&Polynomial::zero(self.ring()))?;
        }
        Ok(())
    }

    /// Degree of a homogeneous vector.
    pub fn homogeneity(&self, v: &ModuleVector) -> Homogeneity {
        let mut deg = None;
        for (k, c) in v.coords.iter().enumerate() {
            match c.homogeneous_degree() {
                Homogeneity::ZeroPoly => {}
                Homogeneity::NotHomogeneous => return Homogeneity::NotHomogeneous,
                Homogeneity::Degree(d) => {
                    let d = d + self.degrees[k];
                    match deg {
                        None => deg = Some(d),
                        Some(e) if e != d => return Homogeneity::NotHomogeneous,
                        _ => {}
                    }
                }
            }
        }
        deg.map_or(Homogeneity::ZeroPoly, Homogeneity::Degree)
    }

    /// Degree used for a generator in derived free modules: the homogeneous
    /// degree, or the largest term degree of an inhomogeneous vector.
    pub(crate) fn generator_degree(&self, v: &ModuleVector) -> i64 {
        v.coords
            .iter()
            .enumerate()
            .flat_map(|(k, c)| c.terms().iter().map(move |(m, _)| m.degree() + self.degrees[k]))
            .max()
            .unwrap_or(0)
    }

    pub(crate) fn term_order(&self) -> TermOrder {
        TermOrder::new(self.ring().clone(), self.degrees.clone(), self.order)
    }
}

/// An element of a free module, as a column of coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleVector {
    pub coords: Vec<Polynomial>,
}

impl ModuleVector {
    pub fn new(coords: Vec<Polynomial>) -> Self {
        ModuleVector { coords }
    }

    pub fn zero(ring: &Arc<PolyRing>, rank: usize) -> Self {
        ModuleVector {
            coords: vec![Polynomial::zero(ring); rank],
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Polynomial::is_zero)
    }

    pub fn add(&self, other: &ModuleVector) -> ModuleVector {
        ModuleVector {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &ModuleVector) -> ModuleVector {
        ModuleVector {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul_poly(&self, f: &Polynomial) -> ModuleVector {
        ModuleVector {
            coords: self.coords.iter().map(|c| c * f).collect(),
        }
    }

    /// `Σ c_i · v_i`.
    pub fn combination(
        ring: &Arc<PolyRing>,
        rank: usize,
        coeffs: &[Polynomial],
        vectors: &[ModuleVector],
    ) -> ModuleVector {
        let mut acc = ModuleVector::zero(ring, rank);
        for (c, v) in coeffs.iter().zip(vectors) {
            if !c.is_zero() {
                acc = acc.add(&v.mul_poly(c));
            }
        }
        acc
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
