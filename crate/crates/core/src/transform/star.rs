use std::fmt;

use crate::complex::{
    binomial, certify_acyclic, check_qf_containment, decompose_images, koszul_differential, subset_index, subsets,
    FreeComplex, KoszulIndex, SopData,
};
use crate::error::{Error, Result};
use crate::groebner::ModuleVector;
use crate::poly::{PolyMatrix, Polynomial};

use super::cone::{mapping_cone, split_top};
use super::select::{select_basis, BasisSelection};
use super::sigma::{build_sigma, SigmaChainMap};

/// Where a basis element of `∗F_p` comes from.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisLabel {
    /// `[v_λ ⊗ e_I]`, from `F_n ⊗ K_{p-1}`.
    Bracket { lambda: usize, set: KoszulIndex },
    /// `⟨u⟩` for the standard basis vector `u` of `F_p`.
    Angle(usize),
    /// `∗v_(μ,j)` in the top module.
    Star { mu: usize, j: usize },
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Bracket { lambda, set } => write!(f, "[v{lambda}⊗e{set}]"),
            BasisLabel::Angle(u) => write!(f, "⟨f{u}⟩"),
            BasisLabel::Star { mu, j } => write!(f, "∗v({mu},{j})"),
        }
    }
}

/// The transformed complex with basis provenance.
#[derive(Clone, Debug)]
pub struct StarComplex {
    pub complex: FreeComplex,
    /// `labels[p]` names the basis of `∗F_p`.
    pub labels: Vec<Vec<BasisLabel>>,
    /// True when the top module `∗F_n` is zero and was dropped, so the
    /// complex is one shorter than the input.
    pub top_vanished: bool,
}

/// Intermediate stages of the construction, kept for inspection.
#[derive(Clone, Debug)]
pub struct Stages {
    pub decomposition: Vec<Vec<ModuleVector>>,
    pub sigma: SigmaChainMap,
    pub cone: FreeComplex,
    pub split: FreeComplex,
    pub selection: BasisSelection,
}

#[derive(Clone, Debug)]
pub struct StarTransform {
    pub star: StarComplex,
    /// `None` for the identity transform of a complex with `F_n = 0`.
    pub stages: Option<Stages>,
}

/// The top two modules and maps of `∗F`.
#[derive(Clone, Debug)]
pub struct StarTop {
    pub top_degrees: Vec<i64>,
    pub top_map: PolyMatrix,
    pub top_labels: Vec<BasisLabel>,
    pub next_degrees: Vec<i64>,
    pub next_map: PolyMatrix,
    pub next_labels: Vec<BasisLabel>,
}

/// Index of `ě_j = e_{N∖j}` in `K_{n-1}`.
fn check_index(n: usize, j: usize) -> usize {
    subset_index(n, &KoszulIndex::full(n).without(j))
}

fn sign(odd: bool, p: &Polynomial) -> Polynomial {
    if odd {
        -p
    } else {
        p.clone()
    }
}

/// `∗φ_n` and `∗φ_{n-1}` from the split complex and the basis selection.
///
/// `∗v_(μ,j) = (-1)^j v_μ⊗ě_j + Σ_{Λ′} (-1)^{i-1} a v_λ⊗ě_i`, and `∗φ_n` is
/// `′φ_n` on these vectors, restricted to the rows `[λ,I]` and `⟨U⟩`. The
/// expected image `(-1)^j [v_μ⊗∂ě_j] + Σ (-1)^{i-1} a [v_λ⊗∂ě_i] + Σ b_u ⟨u⟩`
/// is evaluated separately and must agree.
pub fn build_star_top(
    f: &FreeComplex,
    sop: &SopData,
    sigma: &SigmaChainMap,
    sel: &BasisSelection,
    split: &FreeComplex,
) -> Result<StarTop> {
    let n = f.length();
    let ring = f.ring();
    let base = f.base();
    let g = sigma.tensor();
    let r = sigma.top_rank();
    let g_top = g.rank(n - 1);
    let g_next = g.rank(n - 2);
    let width_next = binomial(n, n - 2);

    let mut star_vectors = Vec::with_capacity(sel.star_lambda.len());
    for (k, &(mu, j)) in sel.star_lambda.iter().enumerate() {
        let mut v = ModuleVector::zero(ring, g_top);
        let one = Polynomial::one(ring);
        v.coords[mu * n + check_index(n, j)] = sign(j % 2 == 1, &one);
        for (l, &(lam, i)) in sel.lambda_prime.iter().enumerate() {
            let pos = lam * n + check_index(n, i);
            let term = sign((i - 1) % 2 == 1, &sel.a[k][l]);
            v.coords[pos] = &v.coords[pos] + &term;
        }
        star_vectors.push(v);
    }

    let keep: Vec<usize> = (0..g_next).chain(sel.u.iter().map(|&u| g_next + u)).collect();
    let split_top_map = split.map(n);
    let mut columns = Vec::with_capacity(star_vectors.len());
    for (k, v) in star_vectors.iter().enumerate() {
        let image = split_top_map.apply(&v.coords)?;
        for (row, e) in image.iter().enumerate() {
            if !keep.contains(&row) && !base.is_zero(e) {
                return Err(Error::TopMapMismatch { column: k });
            }
        }
        let restricted: Vec<Polynomial> = keep.iter().map(|&row| image[row].clone()).collect();

        let (mu, j) = sel.star_lambda[k];
        let d = koszul_differential(sop, n - 1);
        let mut expected = vec![Polynomial::zero(ring); keep.len()];
        let mut add_boundary = |lam: usize, i: usize, coeff: &Polynomial| {
            for t in 0..width_next {
                let e = d.get(t, check_index(n, i));
                if !e.is_zero() {
                    let pos = lam * width_next + t;
                    expected[pos] = &expected[pos] + &(coeff * e);
                }
            }
        };
        add_boundary(mu, j, &sign(j % 2 == 1, &Polynomial::one(ring)));
        for (l, &(lam, i)) in sel.lambda_prime.iter().enumerate() {
            add_boundary(lam, i, &sign((i - 1) % 2 == 1, &sel.a[k][l]));
        }
        for (l, b) in sel.b[k].iter().enumerate() {
            expected[g_next + l] = &expected[g_next + l] + b;
        }
        if restricted.iter().zip(&expected).any(|(x, y)| !base.is_zero(&(x - y))) {
            return Err(Error::TopMapMismatch { column: k });
        }
        columns.push(restricted);
    }

    let next_degrees: Vec<i64> = keep.iter().map(|&row| split.degrees(n - 1)[row]).collect();
    let top_degrees: Vec<i64> = sel
        .star_lambda
        .iter()
        .map(|&(mu, j)| g.degrees(n - 1)[mu * n + check_index(n, j)])
        .collect();
    let top_map = PolyMatrix::from_columns(ring, keep.len(), &columns)?
        .with_grading(top_degrees.clone(), next_degrees.clone())
        .map_err(|e| Error::Internal(format!("∗φ_n is not homogeneous: {e}")))?;
    let next_map = split
        .map(n - 1)
        .select_columns(&keep)
        .with_grading(next_degrees.clone(), split.degrees(n - 2).to_vec())
        .map_err(|e| Error::Internal(format!("∗φ_(n-1) is not homogeneous: {e}")))?;

    let mut next_labels = bracket_labels(r, n, n - 2);
    next_labels.extend(sel.u.iter().map(|&u| BasisLabel::Angle(u)));
    let top_labels = sel
        .star_lambda
        .iter()
        .map(|&(mu, j)| BasisLabel::Star { mu, j })
        .collect();
    Ok(StarTop {
        top_degrees,
        top_map,
        top_labels,
        next_degrees,
        next_map,
        next_labels,
    })
}

fn bracket_labels(r: usize, n: usize, q: usize) -> Vec<BasisLabel> {
    (0..r)
        .flat_map(|lambda| {
            subsets(n, q)
                .into_iter()
                .map(move |set| BasisLabel::Bracket { lambda, set })
        })
        .collect()
}

fn angle_labels(rank: usize) -> Vec<BasisLabel> {
    (0..rank).map(BasisLabel::Angle).collect()
}

/// Checks the standing hypotheses: `n ≥ 2` parameters forming a validated
/// sop, a complex of length `n` that is acyclic, and `Im φ_n ⊆ Q·F_{n-1}`.
pub fn check_preconditions(f: &FreeComplex, sop: &SopData) -> Result<()> {
    let n = sop.len();
    if n < 2 {
        return Err(Error::PreconditionFailed(format!(
            "need at least two parameters, got {n}"
        )));
    }
    if !sop.is_validated() {
        return Err(Error::PreconditionFailed(
            "parameters were not validated as a sop".into(),
        ));
    }
    if f.length() != n {
        return Err(Error::PreconditionFailed(format!(
            "complex has length {} but there are {n} parameters",
            f.length()
        )));
    }
    if let Err(e) = certify_acyclic(f) {
        return Err(Error::PreconditionFailed(format!("input complex is not acyclic: {e}")));
    }
    if !check_qf_containment(f, sop) {
        return Err(Error::PreconditionFailed("Im φn ⊆ QFn−1 does not hold".into()));
    }
    Ok(())
}

/// The full construction: decompose, `σ`, cone, split, select, top maps,
/// assembly.
pub fn star_transform(f: &FreeComplex, sop: &SopData) -> Result<StarTransform> {
    check_preconditions(f, sop)?;
    let n = f.length();
    if f.rank(n) == 0 {
        let labels = (0..=n).map(|p| angle_labels(f.rank(p))).collect();
        return Ok(StarTransform {
            star: StarComplex {
                complex: f.clone(),
                labels,
                top_vanished: true,
            },
            stages: None,
        });
    }

    let decomposition = decompose_images(f.map(n), sop)?;
    let sigma = build_sigma(f, sop, &decomposition)?;
    let cone = mapping_cone(f, &sigma)?;
    let split = split_top(&cone, f, &sigma)?;
    let selection = select_basis(&decomposition, f.module(n - 1))?;
    let top = build_star_top(f, sop, &sigma, &selection, &split)?;

    let r = f.rank(n);
    let mut degrees = vec![f.degrees(0).to_vec()];
    let mut labels = vec![angle_labels(f.rank(0))];
    let mut maps = Vec::new();
    for p in 1..=n.saturating_sub(2) {
        degrees.push(split.degrees(p).to_vec());
        let mut l = bracket_labels(r, n, p - 1);
        l.extend(angle_labels(f.rank(p)));
        labels.push(l);
        maps.push(split.map(p).clone());
    }
    degrees.push(top.next_degrees);
    labels.push(top.next_labels);
    maps.push(top.next_map);
    let top_vanished = selection.is_full();
    if !top_vanished {
        degrees.push(top.top_degrees);
        labels.push(top.top_labels);
        maps.push(top.top_map);
    }
    let complex = FreeComplex::new(f.base().clone(), degrees, maps)?;
    Ok(StarTransform {
        star: StarComplex {
            complex,
            labels,
            top_vanished,
        },
        stages: Some(Stages {
            decomposition,
            sigma,
            cone,
            split,
            selection,
        }),
    })
}
