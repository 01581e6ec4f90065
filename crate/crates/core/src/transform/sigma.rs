use std::sync::Arc;

use crate::complex::{
    binomial, index_degree, koszul_differential, subset_index, subsets, FreeComplex, KoszulIndex, SopData,
};
use crate::error::{Error, Result};
use crate::groebner::{Lifter, ModuleVector};
use crate::poly::{PolyMatrix, PolyRing, Polynomial};

/// The chain map `σ : F_n ⊗ K• → F•` lifting the identity on the top
/// module, stored through its values `w_(λ,I) = σ_p(v_λ ⊗ e_I)`.
///
/// Basis of `G_p = F_n ⊗ K_p`: `v_λ ⊗ e_I` at index `λ·C(n,p) + idx(I)`,
/// generated in degree `deg v_λ + deg e_I - Σ deg x_i` so that `σ` has
/// degree zero.
#[derive(Clone, Debug)]
pub struct SigmaChainMap {
    n: usize,
    top_rank: usize,
    w: Vec<Vec<Vec<ModuleVector>>>,
    sigma: Vec<PolyMatrix>,
    tensor: FreeComplex,
}

/// `(-1)^k` as a ring element multiplier.
fn signed(p: &Polynomial, odd: bool) -> Polynomial {
    if odd {
        -p
    } else {
        p.clone()
    }
}

fn signed_vec(v: &ModuleVector, odd: bool) -> ModuleVector {
    ModuleVector::new(v.coords.iter().map(|c| signed(c, odd)).collect())
}

/// Parity of the factor relating `ξ_p(λ)` and the `w`'s:
/// `ξ_p(λ) = (-1)^{p(p+1)/2} Σ_I (-1)^{t(I)} w_(λ,I) ⊗ e_{I^c}`.
fn xi_parity(p: usize, set: &KoszulIndex) -> bool {
    (p * (p + 1) / 2 + set.t()) % 2 == 1
}

/// `F_n ⊗ K•` with differential `1 ⊗ ∂`.
pub fn tensor_complex(f: &FreeComplex, sop: &SopData) -> Result<FreeComplex> {
    let n = sop.len();
    let ring = f.ring();
    let top = f.degrees(f.length());
    let shift = sop.total_degree();
    let degrees: Vec<Vec<i64>> = (0..=n)
        .map(|p| {
            let ks: Vec<i64> = subsets(n, p).iter().map(|s| index_degree(sop, s)).collect();
            top.iter()
                .flat_map(|&d| ks.iter().map(move |&k| d + k - shift))
                .collect()
        })
        .collect();
    let maps = (1..=n)
        .map(|p| {
            PolyMatrix::identity(ring, top.len())
                .kron(&koszul_differential(sop, p))
                .with_grading(degrees[p].clone(), degrees[p - 1].clone())
        })
        .collect::<Result<Vec<_>>>()?;
    FreeComplex::new(f.base().clone(), degrees, maps)
}

impl SigmaChainMap {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `rank F_n`, the number of `λ`.
    pub fn top_rank(&self) -> usize {
        self.top_rank
    }

    /// `w_(λ,I) ∈ F_{|I|}`.
    pub fn w(&self, lambda: usize, set: &KoszulIndex) -> &ModuleVector {
        &self.w[set.len()][lambda][subset_index(self.n, set)]
    }

    /// `σ_p : G_p → F_p`.
    pub fn sigma(&self, p: usize) -> &PolyMatrix {
        &self.sigma[p]
    }

    /// `G = F_n ⊗ K•`.
    pub fn tensor(&self) -> &FreeComplex {
        &self.tensor
    }

    /// `ξ_p(λ) ∈ F_p ⊗ K_{n-p}`, index `f·C(n,n-p) + idx(I^c)`.
    pub fn xi(&self, p: usize, lambda: usize) -> ModuleVector {
        let rank = self.w[p][lambda].first().map_or(0, ModuleVector::len);
        xi_from_w(self.tensor.ring(), self.n, p, rank, &self.w[p][lambda])
    }

    /// `(p, λ, I)` for every failure of
    /// `φ_p(w_(λ,I)) = Σ_{i∈I} (-1)^{s(i,I)} x_i w_(λ,I∖i)`.
    pub fn sharp_defects(&self, f: &FreeComplex, sop: &SopData) -> Vec<(usize, usize, KoszulIndex)> {
        let mut out = Vec::new();
        let ring = f.ring();
        for p in 1..=self.n {
            for lam in 0..self.top_rank {
                for set in subsets(self.n, p) {
                    let lhs = f.map(p).apply(&self.w(lam, &set).coords).expect("shapes agree");
                    let mut rhs = ModuleVector::zero(ring, f.rank(p - 1));
                    for &i in set.elements() {
                        let x = signed(&sop.elements()[i - 1], set.s(i) % 2 == 1);
                        rhs = rhs.add(&self.w(lam, &set.without(i)).mul_poly(&x));
                    }
                    let diff = ModuleVector::new(lhs).sub(&rhs);
                    if !diff.coords.iter().all(|c| f.base().is_zero(c)) {
                        out.push((p, lam, set));
                    }
                }
            }
        }
        out
    }

    /// Levels `p` where `φ_p·σ_p ≠ σ_{p-1}·(1 ⊗ ∂_p)`.
    pub fn commuting_defects(&self, f: &FreeComplex) -> Vec<usize> {
        (1..=self.n)
            .filter(|&p| {
                let left = f.map(p).mul(&self.sigma[p]).expect("shapes agree");
                let right = self.sigma[p - 1].mul(self.tensor.map(p)).expect("shapes agree");
                let diff = left.add(&right.negate_if(true)).expect("shapes agree");
                let bad = diff.entries().any(|(_, _, e)| !f.base().is_zero(e));
                bad
            })
            .collect()
    }
}

fn xi_from_w(ring: &Arc<PolyRing>, n: usize, p: usize, rank: usize, w_p: &[ModuleVector]) -> ModuleVector {
    let width = binomial(n, n - p);
    let mut out = ModuleVector::zero(ring, rank * width);
    for (k, set) in subsets(n, p).iter().enumerate() {
        let col = subset_index(n, &set.complement(n));
        let odd = xi_parity(p, set);
        for f in 0..rank {
            out.coords[f * width + col] = signed(&w_p[k].coords[f], odd);
        }
    }
    out
}

/// Builds `σ` from the decomposition `φ_n(v_λ) = Σ x_i v_(λ,i)`.
///
/// The top two levels are fixed by `w_(λ,N) = (-1)^n v_λ` and
/// `w_(λ,N∖i) = (-1)^{n+i-1} v_(λ,i)`; below that, `ξ_{p-1}(λ)` is the
/// canonical lift of `(φ_p ⊗ 1)(ξ_p(λ))` through `(-1)^p (1 ⊗ ∂_{n-p+1})`.
pub fn build_sigma(f: &FreeComplex, sop: &SopData, dec: &[Vec<ModuleVector>]) -> Result<SigmaChainMap> {
    let n = sop.len();
    if f.length() != n {
        return Err(Error::PreconditionFailed(format!(
            "complex has length {} but the sop has {n} elements",
            f.length()
        )));
    }
    let ring = f.ring();
    let top_rank = f.rank(n);
    if dec.len() != top_rank || dec.iter().any(|d| d.len() != n) {
        return Err(Error::dims("decomposition does not match the top module"));
    }
    let tensor = tensor_complex(f, sop)?;

    // w[p][λ][idx I]
    let mut w: Vec<Vec<Vec<ModuleVector>>> = (0..=n)
        .map(|p| vec![vec![ModuleVector::zero(ring, f.rank(p)); binomial(n, p)]; top_rank])
        .collect();
    for lam in 0..top_rank {
        w[n][lam][0] = signed_vec(&f.module(n).basis_vector(lam), n % 2 == 1);
        for i in 1..=n {
            let k = subset_index(n, &KoszulIndex::full(n).without(i));
            w[n - 1][lam][k] = signed_vec(&dec[lam][i - 1], (n + i - 1) % 2 == 1);
        }
    }

    for p in (1..n).rev() {
        let width_p = binomial(n, n - p);
        let width_q = binomial(n, n - p + 1);
        let down = koszul_differential(sop, n - p + 1);
        let lift_map = PolyMatrix::identity(ring, f.rank(p - 1))
            .kron(&down)
            .negate_if(p % 2 == 1);
        let push = f.map(p).kron(&PolyMatrix::identity(ring, width_p));
        let k_degrees: Vec<i64> = subsets(n, n - p).iter().map(|s| index_degree(sop, s)).collect();
        let ambient_degrees: Vec<i64> = f
            .degrees(p - 1)
            .iter()
            .flat_map(|&d| k_degrees.iter().map(move |&k| d + k))
            .collect();
        let ambient = f.base().free_module(ambient_degrees);
        let gens: Vec<ModuleVector> = lift_map.columns().into_iter().map(ModuleVector::new).collect();
        let lifter = Lifter::new(&ambient, &gens)?;
        let sets_below = subsets(n, p - 1);
        #[allow(clippy::needless_range_loop)]
        for lam in 0..top_rank {
            let xi = xi_from_w(ring, n, p, f.rank(p), &w[p][lam]);
            let target = push.apply(&xi.coords)?;
            let below = lifter.lift(&ModuleVector::new(target)).map_err(|e| Error::LiftFailed {
                level: p,
                detail: format!("λ = {lam}: {e}"),
            })?;
            for (k, set) in sets_below.iter().enumerate() {
                let col = subset_index(n, &set.complement(n));
                let odd = xi_parity(p - 1, set);
                for fi in 0..f.rank(p - 1) {
                    w[p - 1][lam][k].coords[fi] = signed(&below[fi * width_q + col], odd);
                }
            }
        }
    }

    let sigma = (0..=n)
        .map(|p| {
            let cols: Vec<Vec<Polynomial>> = (0..top_rank)
                .flat_map(|lam| w[p][lam].iter().map(|v| v.coords.clone()))
                .collect();
            PolyMatrix::from_columns(ring, f.rank(p), &cols)?
                .with_grading(tensor.degrees(p).to_vec(), f.degrees(p).to_vec())
                .map_err(|e| Error::Internal(format!("σ{p} is not of degree zero: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;

    let out = SigmaChainMap {
        n,
        top_rank,
        w,
        sigma,
        tensor,
    };
    if let Some((p, lam, set)) = out.sharp_defects(f, sop).into_iter().next() {
        return Err(Error::LiftFailed {
            level: p,
            detail: format!("differential identity fails for λ = {lam}, I = {set}"),
        });
    }
    if let Some(p) = out.commuting_defects(f).into_iter().next() {
        return Err(Error::LiftFailed {
            level: p,
            detail: "square does not commute".into(),
        });
    }
    Ok(out)
}
