//! Graded free complexes: construction, validation and exactness
//! certificates, plus the Koszul complex of a system of parameters.

mod koszul;
mod sop;

use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{BaseRing, GradedFreeModule, Lifter, ModuleVector, Submodule};
use crate::poly::{PolyMatrix, PolyRing, Polynomial};

pub use koszul::{
    binomial, index_degree, koszul, koszul_differential, subset_index, subsets, KoszulComplex, KoszulIndex,
};
pub use sop::{check_qf_containment, decompose_images, validate_sop, SopData};

/// `0 → F_n → ... → F_1 → F_0` with `φ_p : F_p → F_{p-1}`.
#[derive(Clone, Debug)]
pub struct FreeComplex {
    base: BaseRing,
    modules: Vec<GradedFreeModule>,
    maps: Vec<PolyMatrix>,
}

impl FreeComplex {
    /// `degrees[p]` are the generation degrees of `F_p`; `maps[p-1]` is `φ_p`
    /// with `rank F_{p-1}` rows and `rank F_p` columns.
    pub fn new(base: BaseRing, degrees: Vec<Vec<i64>>, maps: Vec<PolyMatrix>) -> Result<Self> {
        if degrees.len() != maps.len() + 1 {
            return Err(Error::dims(format!(
                "{} modules for {} maps",
                degrees.len(),
                maps.len()
            )));
        }
        for (k, m) in maps.iter().enumerate() {
            let p = k + 1;
            if m.rows() != degrees[p - 1].len() || m.cols() != degrees[p].len() {
                return Err(Error::dims(format!(
                    "φ{p} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    degrees[p - 1].len(),
                    degrees[p].len()
                )));
            }
            if !same_ring(m.ring(), base.ring()) {
                return Err(Error::IncompatibleRing);
            }
        }
        let modules = degrees.into_iter().map(|d| base.free_module(d)).collect();
        Ok(FreeComplex { base, modules, maps })
    }

    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn base(&self) -> &BaseRing {
        &self.base
    }

    pub fn ring(&self) -> &std::sync::Arc<PolyRing> {
        self.base.ring()
    }

    pub fn module(&self, p: usize) -> &GradedFreeModule {
        &self.modules[p]
    }

    pub fn rank(&self, p: usize) -> usize {
        self.modules[p].rank()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(GradedFreeModule::rank).collect()
    }

    pub fn degrees(&self, p: usize) -> &[i64] {
        self.modules[p].degrees()
    }

    /// `φ_p` for `1 ≤ p ≤ n`.
    pub fn map(&self, p: usize) -> &PolyMatrix {
        &self.maps[p - 1]
    }

    pub fn maps(&self) -> &[PolyMatrix] {
        &self.maps
    }

    /// `Im φ_p ⊆ F_{p-1}`.
    pub fn image(&self, p: usize) -> Result<Submodule> {
        Submodule::new(&self.modules[p - 1], columns(self.map(p)))
    }
}

fn same_ring(a: &std::sync::Arc<PolyRing>, b: &std::sync::Arc<PolyRing>) -> bool {
    std::sync::Arc::ptr_eq(a, b) || a == b
}

/// Columns of a matrix as module vectors.
pub fn columns(m: &PolyMatrix) -> Vec<ModuleVector> {
    m.columns().into_iter().map(ModuleVector::new).collect()
}

/// First place where a complex fails to be a graded complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexDefect {
    /// Entry `(row, col)` of `φ_p` is not homogeneous of the degree the
    /// twists require.
    Homogeneity { p: usize, row: usize, col: usize },
    /// Entry `(row, col)` of `φ_{p-1}·φ_p` is nonzero.
    Composition { p: usize, row: usize, col: usize },
}

impl fmt::Display for ComplexDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexDefect::Homogeneity { p, row, col } => {
                write!(f, "φ{p} entry ({row},{col}) is not homogeneous of the required degree")
            }
            ComplexDefect::Composition { p, row, col } => {
                write!(f, "φ{}·φ{p} entry ({row},{col}) is nonzero", p - 1)
            }
        }
    }
}

/// Homogeneity of every entry against the twists, then `φ_{p-1}·φ_p = 0`.
pub fn check_complex(c: &FreeComplex) -> std::result::Result<(), ComplexDefect> {
    for p in 1..=c.length() {
        if let Some((row, col)) = c.map(p).first_inhomogeneous(c.degrees(p), c.degrees(p - 1)) {
            return Err(ComplexDefect::Homogeneity { p, row, col });
        }
    }
    for p in 2..=c.length() {
        let prod = c.map(p - 1).mul(c.map(p)).expect("shapes checked on construction");
        let bad = prod
            .entries()
            .find(|(_, _, e)| !c.base().is_zero(e))
            .map(|(row, col, _)| (row, col));
        if let Some((row, col)) = bad {
            return Err(ComplexDefect::Composition { p, row, col });
        }
    }
    Ok(())
}

/// Exactness witnesses: every syzygy of `φ_p` written through the columns of
/// `φ_{p+1}`.
#[derive(Clone, Debug)]
pub struct AcyclicityCertificate {
    pub levels: Vec<LevelWitness>,
}

#[derive(Clone, Debug)]
pub struct LevelWitness {
    pub p: usize,
    /// `(syzygy of φ_p, coefficients on the columns of φ_{p+1})`.
    pub witnesses: Vec<(ModuleVector, Vec<Polynomial>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AcyclicityFailure {
    Defect(ComplexDefect),
    /// A syzygy of `φ_p` outside `Im φ_{p+1}`.
    NotExact {
        p: usize,
        syzygy: ModuleVector,
    },
    /// `φ_n` has a nonzero kernel.
    NotInjective {
        syzygy: ModuleVector,
    },
}

impl fmt::Display for AcyclicityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AcyclicityFailure::Defect(d) => write!(f, "{d}"),
            AcyclicityFailure::NotExact { p, syzygy } => {
                write!(f, "Ker φ{p} ⊄ Im φ{}: {syzygy}", p + 1)
            }
            AcyclicityFailure::NotInjective { syzygy } => write!(f, "top map has kernel element {syzygy}"),
        }
    }
}

/// Certifies `H_p(F) = 0` for every `p ≥ 1`.
pub fn certify_acyclic(c: &FreeComplex) -> std::result::Result<AcyclicityCertificate, AcyclicityFailure> {
    check_complex(c).map_err(AcyclicityFailure::Defect)?;
    let n = c.length();
    let mut levels = Vec::new();
    for p in 1..=n {
        let lifter = Lifter::new(c.module(p - 1), &columns(c.map(p))).expect("shapes checked on construction");
        let syz: Vec<ModuleVector> = lifter
            .syzygies()
            .into_iter()
            .filter(|s| !s.coords.iter().all(|e| c.base().is_zero(e)))
            .collect();
        if p == n {
            if let Some(s) = syz.into_iter().next() {
                return Err(AcyclicityFailure::NotInjective { syzygy: s });
            }
            continue;
        }
        let next = Lifter::new(c.module(p), &columns(c.map(p + 1))).expect("shapes checked on construction");
        let mut witnesses = Vec::with_capacity(syz.len());
        for s in syz {
            match next.lift(&s) {
                Ok(w) => witnesses.push((s, w)),
                Err(_) => return Err(AcyclicityFailure::NotExact { p, syzygy: s }),
            }
        }
        levels.push(LevelWitness { p, witnesses });
    }
    Ok(AcyclicityCertificate { levels })
}
