//! Dense degree-by-degree linear algebra over the coefficient field. Nothing
//! here touches a Gröbner basis: every submodule is replaced by the span of
//! all monomial multiples of its generators in a fixed degree.

use std::collections::HashMap;

use startrans::{GradedFreeModule, ModuleVector, Polynomial, Scalar};

/// Exponent vectors of weighted degree `d`.
pub fn monomials(weights: &[u32], d: i64) -> Vec<Vec<u32>> {
    fn go(weights: &[u32], i: usize, left: i64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == weights.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = weights[i] as i64;
        let mut e = 0;
        while e * w <= left {
            cur.push(e as u32);
            go(weights, i + 1, left - e * w, cur, out);
            cur.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    if d >= 0 {
        go(weights, 0, d, &mut Vec::new(), &mut out);
    }
    out
}

/// Coordinates of `F_t` for a graded free module `F`.
pub struct Slice {
    pub index: HashMap<(usize, Vec<u32>), usize>,
    zero: Scalar,
}

impl Slice {
    pub fn new(f: &GradedFreeModule, t: i64) -> Self {
        let w = f.ring().weights();
        let mut index = HashMap::new();
        for (k, &d) in f.degrees().iter().enumerate() {
            for m in monomials(w, t - d) {
                let n = index.len();
                index.insert((k, m), n);
            }
        }
        Slice {
            index,
            zero: f.ring().field().zero(),
        }
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    /// `mono · v` as a dense vector; `None` if it does not live in this slice.
    pub fn dense(&self, v: &ModuleVector, mono: &[u32]) -> Option<Vec<Scalar>> {
        let mut out = vec![self.zero.clone(); self.dim()];
        for (k, p) in v.coords.iter().enumerate() {
            for (m, c) in p.terms() {
                let e: Vec<u32> = m.exps().iter().zip(mono).map(|(a, b)| a + b).collect();
                let pos = *self.index.get(&(k, e))?;
                out[pos] = &out[pos] + c;
            }
        }
        Some(out)
    }
}

/// Row echelon form over a field.
pub struct Echelon {
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&c * r);
                }
            }
        }
        v
    }

    /// Adds `v`; true if it was independent.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv();
        let v: Vec<Scalar> = v.iter().map(|x| x * &inv).collect();
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, r) in row.iter_mut().zip(&v) {
                    if !r.is_zero() {
                        *x = &*x - &(&c * r);
                    }
                }
            }
        }
        self.rows.push((p, v));
        true
    }
}

fn vector_degree(f: &GradedFreeModule, v: &ModuleVector) -> Option<i64> {
    v.coords
        .iter()
        .enumerate()
        .find_map(|(k, p)| p.terms().first().map(|(m, _)| m.degree() + f.degrees()[k]))
}

/// Generators together with `J·e_k` when the base ring is a quotient.
pub fn with_quotient(f: &GradedFreeModule, gens: &[ModuleVector]) -> Vec<ModuleVector> {
    let mut out = gens.to_vec();
    if let Some(q) = f.base().quotient_spec() {
        for k in 0..f.rank() {
            for g in q.generators() {
                let mut v = f.zero_vector();
                v.coords[k] = g.clone();
                out.push(v);
            }
        }
    }
    out
}

/// Echelon basis of `N_t` for `N` generated by `gens` (plus `J·F`).
pub fn span(f: &GradedFreeModule, gens: &[ModuleVector], t: i64) -> (Slice, Echelon) {
    let slice = Slice::new(f, t);
    let mut ech = Echelon::new();
    let w = f.ring().weights();
    for g in with_quotient(f, gens) {
        let Some(e) = vector_degree(f, &g) else { continue };
        for m in monomials(w, t - e) {
            if let Some(v) = slice.dense(&g, &m) {
                ech.insert(v);
            }
        }
    }
    (slice, ech)
}

pub fn span_dim(f: &GradedFreeModule, gens: &[ModuleVector], t: i64) -> usize {
    span(f, gens, t).1.rank()
}

/// `dim_k (F/N)_t`.
pub fn hilbert_function(f: &GradedFreeModule, gens: &[ModuleVector], t: i64) -> usize {
    let (slice, ech) = span(f, gens, t);
    slice.dim() - ech.rank()
}

pub fn contains(f: &GradedFreeModule, gens: &[ModuleVector], v: &ModuleVector) -> bool {
    let Some(t) = vector_degree(f, v) else { return true };
    let (slice, ech) = span(f, gens, t);
    let zero = vec![0; f.ring().nvars()];
    match slice.dense(v, &zero) {
        Some(d) => ech.reduce(d).iter().all(|x| x.is_zero()),
        None => false,
    }
}

/// `dim_k (N : I)_t`, as the kernel of `F_t → ⊕_i F_{t+a_i}/N_{t+a_i}`.
pub fn colon_dim(f: &GradedFreeModule, gens: &[ModuleVector], ideal: &[Polynomial], t: i64) -> usize {
    let slice = Slice::new(f, t);
    let targets: Vec<(i64, Slice, Echelon)> = ideal
        .iter()
        .filter(|q| !q.is_zero())
        .map(|q| {
            let a = q.terms()[0].0.degree();
            let (s, e) = span(f, gens, t + a);
            (a, s, e)
        })
        .collect();
    let mut image = Echelon::new();
    let mut keys: Vec<&(usize, Vec<u32>)> = slice.index.keys().collect();
    keys.sort();
    for (k, m) in keys {
        let mut row = Vec::new();
        for ((_, s, e), q) in targets.iter().zip(ideal.iter().filter(|q| !q.is_zero())) {
            let mut v = f.zero_vector();
            v.coords[*k] = q.clone();
            let d = s.dense(&v, m).expect("degrees match");
            row.extend(e.reduce(d));
        }
        image.insert(row);
    }
    slice.dim() - image.rank()
}

/// `dim_k (A ∩ B)_t = dim A_t + dim B_t − dim (A + B)_t`.
pub fn intersection_dim(f: &GradedFreeModule, a: &[ModuleVector], b: &[ModuleVector], t: i64) -> usize {
    let both: Vec<ModuleVector> = a.iter().chain(b).cloned().collect();
    span_dim(f, a, t) + span_dim(f, b, t) - span_dim(f, &both, t)
}
