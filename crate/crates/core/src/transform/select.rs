use crate::error::{Error, Result};
use crate::groebner::{GradedFreeModule, Lifter, ModuleVector};
use crate::poly::{Polynomial, Scalar};

/// Index `(λ, i)` of `v_(λ,i)`; `λ` is 0-based, `i` is 1-based.
pub type TopIndex = (usize, usize);

/// A free basis `{v_(λ,i)}_{Λ′} ∪ U` of `F_{n-1}` and the coordinates of the
/// remaining `v_(μ,j)` in it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisSelection {
    /// `Λ′`, ascending.
    pub lambda_prime: Vec<TopIndex>,
    /// `∗Λ = Λ̃ ∖ Λ′`, ascending.
    pub star_lambda: Vec<TopIndex>,
    /// `U`, standard basis indices of `F_{n-1}`, ascending.
    pub u: Vec<usize>,
    /// `a[k][l]`: coefficient of `v_{Λ′[l]}` in `v_{∗Λ[k]}`.
    pub a: Vec<Vec<Polynomial>>,
    /// `b[k][l]`: coefficient of `u = U[l]` in `v_{∗Λ[k]}`; no constant term.
    pub b: Vec<Vec<Polynomial>>,
}

impl BasisSelection {
    /// True when every `v_(λ,i)` is part of the basis, so `∗F_n = 0`.
    pub fn is_full(&self) -> bool {
        self.star_lambda.is_empty()
    }
}

/// Greedy pivoting on the degree-zero parts.
///
/// Columns `(λ, i)` of the residue matrix are scanned in ascending order and
/// kept when independent of the columns kept so far; rows never chosen as a
/// pivot form `U`.
pub fn select_basis(dec: &[Vec<ModuleVector>], target: &GradedFreeModule) -> Result<BasisSelection> {
    let m = target.rank();
    let mut pivots: Vec<(usize, Vec<Scalar>)> = Vec::new();
    let mut lambda_prime = Vec::new();
    let mut star_lambda = Vec::new();
    for (lam, parts) in dec.iter().enumerate() {
        for (k, v) in parts.iter().enumerate() {
            let mut col: Vec<Scalar> = v.coords.iter().map(Polynomial::constant_term).collect();
            for (row, piv) in &pivots {
                if !col[*row].is_zero() {
                    let c = col[*row].clone();
                    for (x, y) in col.iter_mut().zip(piv) {
                        *x = &*x - &(&c * y);
                    }
                }
            }
            match col.iter().position(|c| !c.is_zero()) {
                Some(row) => {
                    let inv = col[row].inv();
                    let normalized = col.iter().map(|c| c * &inv).collect();
                    pivots.push((row, normalized));
                    lambda_prime.push((lam, k + 1));
                }
                None => star_lambda.push((lam, k + 1)),
            }
        }
    }
    let pivot_rows: Vec<usize> = pivots.iter().map(|(r, _)| *r).collect();
    let u: Vec<usize> = (0..m).filter(|r| !pivot_rows.contains(r)).collect();

    let mut basis: Vec<ModuleVector> = lambda_prime.iter().map(|&(l, i)| dec[l][i - 1].clone()).collect();
    basis.extend(u.iter().map(|&r| target.basis_vector(r)));
    let lifter = Lifter::new(target, &basis)?;
    let nl = lambda_prime.len();
    let mut a = Vec::with_capacity(star_lambda.len());
    let mut b = Vec::with_capacity(star_lambda.len());
    for &(mu, j) in &star_lambda {
        let c = lifter
            .lift(&dec[mu][j - 1])
            .map_err(|e| Error::Internal(format!("selected vectors do not span F_(n-1) at ({mu},{j}): {e}")))?;
        let (ca, cb) = c.split_at(nl);
        if let Some(bad) = cb.iter().find(|p| !p.constant_term().is_zero()) {
            return Err(Error::Internal(format!(
                "coefficient {bad} of a non-basis vector is a unit at ({mu},{j})"
            )));
        }
        a.push(ca.to_vec());
        b.push(cb.to_vec());
    }
    Ok(BasisSelection {
        lambda_prime,
        star_lambda,
        u,
        a,
        b,
    })
}
