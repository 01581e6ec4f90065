use crate::complex::FreeComplex;
use crate::error::{Error, Result};
use crate::poly::PolyMatrix;

use super::sigma::SigmaChainMap;

fn zeros(f: &FreeComplex, rows: usize, cols: usize) -> PolyMatrix {
    PolyMatrix::zeros(f.ring(), rows, cols)
}

fn concat(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().chain(b).copied().collect()
}

/// The block column `[∂^G_{p-1}; (-1)^{p-1} σ_{p-1}]` of `ψ_p` for `p ≥ 2`.
fn tensor_column(sigma: &SigmaChainMap, p: usize) -> Result<PolyMatrix> {
    PolyMatrix::block(&[
        vec![sigma.tensor().map(p - 1).clone()],
        vec![sigma.sigma(p - 1).negate_if((p - 1) % 2 == 1)],
    ])
}

fn same_entries(a: &PolyMatrix, b: &PolyMatrix, f: &FreeComplex) -> bool {
    a.rows() == b.rows()
        && a.cols() == b.cols()
        && a.entries()
            .zip(b.entries())
            .all(|((_, _, x), (_, _, y))| f.base().is_zero(&(x - y)))
}

/// `Cone(σ)`: `Cone_0 = F_0`, `Cone_p = G_{p-1} ⊕ F_p` for `1 ≤ p ≤ n`,
/// `Cone_{n+1} = G_n`, with `ψ_1 = (σ_0  φ_1)` and
/// `ψ_p = [[∂_{p-1}, 0], [(-1)^{p-1} σ_{p-1}, φ_p]]`.
pub fn mapping_cone(f: &FreeComplex, sigma: &SigmaChainMap) -> Result<FreeComplex> {
    let n = f.length();
    let g = sigma.tensor();
    let mut degrees = vec![f.degrees(0).to_vec()];
    for p in 1..=n {
        degrees.push(concat(g.degrees(p - 1), f.degrees(p)));
    }
    degrees.push(g.degrees(n).to_vec());

    let mut maps = Vec::with_capacity(n + 1);
    maps.push(PolyMatrix::block(&[vec![sigma.sigma(0).clone(), f.map(1).clone()]])?);
    for p in 2..=n {
        let left = tensor_column(sigma, p)?;
        let right = PolyMatrix::block(&[vec![zeros(f, g.rank(p - 2), f.rank(p))], vec![f.map(p).clone()]])?;
        maps.push(PolyMatrix::block(&[vec![left, right]])?);
    }
    maps.push(tensor_column(sigma, n + 1)?);
    let maps = maps
        .into_iter()
        .enumerate()
        .map(|(k, m)| {
            m.with_grading(degrees[k + 1].clone(), degrees[k].clone())
                .map_err(|e| Error::Internal(format!("cone map ψ{} is not homogeneous: {e}", k + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    FreeComplex::new(f.base().clone(), degrees, maps)
}

/// `(0  (-1)^n σ_n^{-1}) : Cone_n → G_n`, the retraction of `ψ_{n+1}`.
pub fn splitting_map(f: &FreeComplex, sigma: &SigmaChainMap) -> Result<PolyMatrix> {
    let n = f.length();
    let g = sigma.tensor();
    let s = sigma.sigma(n);
    // σ_n = (-1)^n · 1, so its inverse is itself
    let expected = PolyMatrix::identity(f.ring(), f.rank(n)).negate_if(n % 2 == 1);
    if !same_entries(s, &expected, f) {
        return Err(Error::Internal("top component of σ is not ±identity".into()));
    }
    let inverse = expected.negate_if(n % 2 == 1);
    PolyMatrix::block(&[vec![zeros(f, g.rank(n), g.rank(n - 1)), inverse]])
}

/// True when `splitting ∘ ψ_{n+1}` is the identity of `G_n`.
pub fn splitting_is_retraction(cone: &FreeComplex, splitting: &PolyMatrix) -> bool {
    let n1 = cone.length();
    splitting
        .mul(cone.map(n1))
        .is_ok_and(|prod| same_entries(&prod, &PolyMatrix::identity(cone.ring(), cone.rank(n1)), cone))
}

/// `′F`: the cone with the split summand `F_n ⊕ G_n` removed from the top.
/// `′F_n = G_{n-1}` with `′φ_n = [∂_{n-1}; (-1)^{n-1} σ_{n-1}]`; lower
/// levels are the cone's.
pub fn split_top(cone: &FreeComplex, f: &FreeComplex, sigma: &SigmaChainMap) -> Result<FreeComplex> {
    let n = f.length();
    let g = sigma.tensor();
    let mut degrees: Vec<Vec<i64>> = (0..n).map(|p| cone.degrees(p).to_vec()).collect();
    degrees.push(g.degrees(n - 1).to_vec());
    let mut maps: Vec<PolyMatrix> = (1..n).map(|p| cone.map(p).clone()).collect();
    maps.push(
        tensor_column(sigma, n)?
            .with_grading(degrees[n].clone(), degrees[n - 1].clone())
            .map_err(|e| Error::Internal(format!("split top map is not homogeneous: {e}")))?,
    );
    FreeComplex::new(f.base().clone(), degrees, maps)
}
