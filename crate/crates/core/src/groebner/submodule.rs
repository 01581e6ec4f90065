use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{PolyRing, Polynomial};

use super::buchberger::{reduce_below, reduce_full, reduced_gb};
use super::module::{GradedFreeModule, ModuleVector};
use super::vector::{SVec, Term, TermOrder};

/// A submodule of a graded free module together with its reduced Gröbner
/// basis. Over a quotient ring the basis also covers `J·F`.
#[derive(Clone, Debug)]
pub struct Submodule {
    ambient: GradedFreeModule,
    generators: Vec<ModuleVector>,
    basis: Vec<ModuleVector>,
    internal: Vec<SVec>,
}

/// `J·e_k` for every basis vector, in positions `0..rank`.
fn quotient_vectors(ambient: &GradedFreeModule, ord: &TermOrder) -> Vec<SVec> {
    let Some(q) = ambient.base().quotient_spec() else {
        return Vec::new();
    };
    let ring = ambient.ring();
    let mut out = Vec::new();
    for k in 0..ambient.rank() {
        for g in q.basis() {
            let mut coords = vec![Polynomial::zero(ring); ambient.rank()];
            coords[k] = g.clone();
            out.push(SVec::from_coords(&coords, 0, ord));
        }
    }
    out
}

impl Submodule {
    pub fn new(ambient: &GradedFreeModule, generators: Vec<ModuleVector>) -> Result<Self> {
        for g in &generators {
            ambient.check(g)?;
        }
        let ord = ambient.term_order();
        let mut input: Vec<SVec> = generators
            .iter()
            .map(|g| SVec::from_coords(&g.coords, 0, &ord))
            .collect();
        input.extend(quotient_vectors(ambient, &ord));
        let internal = reduced_gb(input, &ord);
        let basis = internal
            .iter()
            .map(|v| ModuleVector::new(v.to_coords(0, ambient.rank(), ambient.ring())))
            .collect();
        Ok(Submodule {
            ambient: ambient.clone(),
            generators,
            basis,
            internal,
        })
    }

    /// Ideal of the base ring generated by `polys`.
    pub fn ideal(ambient: &GradedFreeModule, polys: &[Polynomial]) -> Result<Self> {
        if ambient.rank() != 1 {
            return Err(Error::dims("an ideal lives in a rank-one module"));
        }
        Self::new(
            ambient,
            polys.iter().map(|p| ModuleVector::new(vec![p.clone()])).collect(),
        )
    }

    pub fn ambient(&self) -> &GradedFreeModule {
        &self.ambient
    }

    pub fn generators(&self) -> &[ModuleVector] {
        &self.generators
    }

    /// Reduced Gröbner basis, sorted by decreasing lead term.
    pub fn basis(&self) -> &[ModuleVector] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// True when the submodule is the whole ambient module.
    pub fn is_everything(&self) -> bool {
        (0..self.ambient.rank()).all(|k| self.contains(&self.ambient.basis_vector(k)))
    }

    pub fn normal_form(&self, v: &ModuleVector) -> ModuleVector {
        let ord = self.ambient.term_order();
        let r = reduce_full(SVec::from_coords(&v.coords, 0, &ord), &self.internal, &ord);
        ModuleVector::new(r.to_coords(0, self.ambient.rank(), self.ambient.ring()))
    }

    pub fn contains(&self, v: &ModuleVector) -> bool {
        self.normal_form(v).is_zero()
    }

    pub fn contains_submodule(&self, other: &Submodule) -> bool {
        other.basis.iter().all(|g| self.contains(g))
    }

    /// Lead terms per position, as exponent vectors; the input of the Hilbert
    /// series computation.
    pub(crate) fn lead_monomials(&self) -> Vec<Vec<crate::poly::Monomial>> {
        let mut out = vec![Vec::new(); self.ambient.rank()];
        for g in &self.internal {
            let t = &g.terms[0];
            out[t.pos].push(t.mono.clone());
        }
        out
    }
}

/// Reduced Gröbner basis of the submodule generated by `gens`.
pub fn buchberger(ambient: &GradedFreeModule, gens: Vec<ModuleVector>) -> Result<Submodule> {
    Submodule::new(ambient, gens)
}

pub fn normal_form(v: &ModuleVector, m: &Submodule) -> ModuleVector {
    m.normal_form(v)
}

pub fn submodule_equal(a: &Submodule, b: &Submodule) -> bool {
    a.ambient == b.ambient && a.basis == b.basis
}

/// Prepared data for expressing vectors as combinations of fixed generators.
///
/// Works on the augmented module `F ⊕ R^s` with generators `(g_i, e_i)`
/// under an order that eliminates `F`; the remainder of `(v, 0)` carries the
/// negated witness in the second block.
#[derive(Clone, Debug)]
pub struct Lifter {
    ambient: GradedFreeModule,
    generators: Vec<ModuleVector>,
    ord: TermOrder,
    image: Vec<SVec>,
    kernel: Vec<SVec>,
}

impl Lifter {
    pub fn new(ambient: &GradedFreeModule, generators: &[ModuleVector]) -> Result<Self> {
        for g in generators {
            ambient.check(g)?;
        }
        let rank = ambient.rank();
        let gen_degrees: Vec<i64> = generators.iter().map(|g| ambient.generator_degree(g)).collect();
        let ord = ambient.term_order().with_block(&gen_degrees);
        let mut input: Vec<SVec> = generators
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let mut v = SVec::from_coords(&g.coords, 0, &ord);
                v.terms.push(Term {
                    pos: rank + i,
                    mono: ambient.ring().one_monomial(),
                    coeff: ambient.ring().field().one(),
                });
                v.terms.sort_by(|a, b| ord.cmp(b.pos, &b.mono, a.pos, &a.mono));
                v
            })
            .collect();
        input.extend(quotient_vectors(ambient, &ord));
        let gb = reduced_gb(input, &ord);
        let (image, kernel): (Vec<SVec>, Vec<SVec>) = gb.into_iter().partition(|v| v.terms[0].pos < rank);
        Ok(Lifter {
            ambient: ambient.clone(),
            generators: generators.to_vec(),
            ord,
            image,
            kernel,
        })
    }

    pub fn generators(&self) -> &[ModuleVector] {
        &self.generators
    }

    /// Coefficients `c` with `v = Σ c_i g_i` (modulo `J·F` over a quotient
    /// ring), re-checked before returning.
    pub fn lift(&self, v: &ModuleVector) -> Result<Vec<Polynomial>> {
        self.ambient.check(v)?;
        let rank = self.ambient.rank();
        let ring = self.ambient.ring();
        let start = SVec::from_coords(&v.coords, 0, &self.ord);
        let rem = reduce_below(start, &self.image, rank, &self.ord).ok_or(Error::NotInModule)?;
        let coeffs: Vec<Polynomial> = rem
            .to_coords(rank, self.generators.len(), ring)
            .iter()
            .map(|c| -c)
            .collect();
        let back = ModuleVector::combination(ring, rank, &coeffs, &self.generators);
        let diff = back.sub(v);
        if !diff.coords.iter().all(|c| self.ambient.base().is_zero(c)) {
            return Err(Error::Internal("lift witness does not recombine".into()));
        }
        Ok(coeffs)
    }

    /// Generators of the syzygy module of the generators (a Gröbner basis of
    /// it in the derived free module).
    pub fn syzygies(&self) -> Vec<ModuleVector> {
        let rank = self.ambient.rank();
        self.kernel
            .iter()
            .map(|v| ModuleVector::new(v.to_coords(rank, self.generators.len(), self.ambient.ring())))
            .collect()
    }

    /// The free module `⊕ R(-deg g_i)` that syzygies live in.
    pub fn source_module(&self) -> GradedFreeModule {
        self.ambient
            .base()
            .free_module(self.ord.degrees[self.ambient.rank()..].to_vec())
            .with_order(self.ambient.order())
    }
}

pub fn lift_witness(v: &ModuleVector, ambient: &GradedFreeModule, gens: &[ModuleVector]) -> Result<Vec<Polynomial>> {
    Lifter::new(ambient, gens)?.lift(v)
}

/// Syzygies of `gens`, as vectors in the free module with one basis element
/// per generator.
pub fn syzygies(ambient: &GradedFreeModule, gens: &[ModuleVector]) -> Result<(GradedFreeModule, Vec<ModuleVector>)> {
    let l = Lifter::new(ambient, gens)?;
    Ok((l.source_module(), l.syzygies()))
}

/// `M : q` for one ring element, through the syzygies of `[q·e_1 .. q·e_r | M]`.
pub fn colon_element(m: &Submodule, q: &Polynomial) -> Result<Submodule> {
    let ambient = m.ambient();
    let rank = ambient.rank();
    let mut gens: Vec<ModuleVector> = (0..rank).map(|k| ambient.basis_vector(k).mul_poly(q)).collect();
    gens.extend(m.basis().iter().cloned());
    let (_, syz) = syzygies(ambient, &gens)?;
    let projected = syz
        .into_iter()
        .map(|s| ModuleVector::new(s.coords[..rank].to_vec()))
        .collect();
    Submodule::new(ambient, projected)
}

/// `M :_F (q_1, ..., q_s)` as the intersection of the per-element colons.
pub fn colon(m: &Submodule, ideal: &[Polynomial]) -> Result<Submodule> {
    let (first, rest) = ideal
        .split_first()
        .ok_or_else(|| Error::PreconditionFailed("colon by an empty ideal".into()))?;
    let mut acc = colon_element(m, first)?;
    for q in rest {
        let next = colon_element(m, q)?;
        acc = intersect(&acc, &next)?;
    }
    Ok(acc)
}

/// `A ∩ B`: eliminate the tag `t` from `t·A + (1 - t)·B`.
pub fn intersect(a: &Submodule, b: &Submodule) -> Result<Submodule> {
    if a.ambient != b.ambient {
        return Err(Error::dims("intersection of submodules of different modules"));
    }
    let ambient = a.ambient();
    let base_ring = ambient.ring();
    let tagged: Arc<PolyRing> = base_ring.tagged();
    let ord = TermOrder::new(tagged.clone(), ambient.degrees().to_vec(), ambient.order());
    let embed = |v: &ModuleVector, exp: u32| -> Vec<Polynomial> {
        v.coords.iter().map(|c| c.embed_tagged(&tagged, exp)).collect()
    };
    let mut input = Vec::new();
    for g in a.basis() {
        input.push(SVec::from_coords(&embed(g, 1), 0, &ord));
    }
    for g in b.basis() {
        let plain = embed(g, 0);
        let with_t = embed(g, 1);
        let coords: Vec<Polynomial> = plain.iter().zip(&with_t).map(|(p, q)| p - q).collect();
        input.push(SVec::from_coords(&coords, 0, &ord));
    }
    let gb = reduced_gb(input, &ord);
    let nt = tagged.nvars() - 1;
    let gens = gb
        .iter()
        .filter(|v| v.terms[0].mono.exps()[nt] == 0)
        .map(|v| {
            ModuleVector::new(
                v.to_coords(0, ambient.rank(), &tagged)
                    .iter()
                    .map(|c| c.restrict_untagged(base_ring))
                    .collect(),
            )
        })
        .collect();
    Submodule::new(ambient, gens)
}
