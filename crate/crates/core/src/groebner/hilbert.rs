//! Hilbert series of `F/M` from the lead-term module, by the pivot
//! recursion `N(I) = N(I + (x)) + t^deg(x) · N(I : x)` on monomial ideals.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
#[cfg(test)]
use crate::poly::Monomial;

use super::submodule::Submodule;

/// Laurent polynomial in `t` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Laurent(BTreeMap<i64, i128>);

impl Laurent {
    pub fn monomial(exp: i64, c: i128) -> Self {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert(exp, c);
        }
        Laurent(m)
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn coefficient(&self, exp: i64) -> i128 {
        self.0.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i128)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add_term(&mut self, e: i64, c: i128) {
        let v = self.0.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.0.remove(&e);
        }
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, -c);
        }
        out
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::default();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    pub fn shift(&self, by: i64) -> Laurent {
        Laurent(self.0.iter().map(|(&e, &c)| (e + by, c)).collect())
    }

    /// Exact division by `1 - t^w`, if it divides.
    pub fn div_one_minus(&self, w: i64) -> Option<Laurent> {
        // q(1 - t^w) = p  <=>  q_e = p_e + q_{e-w}
        let Some((&lo, _)) = self.0.first_key_value() else {
            return Some(Laurent::default());
        };
        let hi = *self.0.last_key_value().unwrap().0;
        let mut q = BTreeMap::new();
        for e in lo..=hi - w {
            let v = self.coefficient(e) + q.get(&(e - w)).copied().unwrap_or(0);
            if v != 0 {
                q.insert(e, v);
            }
        }
        let q = Laurent(q);
        let back = q.sub(&q.shift(w));
        (back == *self).then_some(q)
    }

    pub fn value_at_one(&self) -> i128 {
        self.0.values().sum()
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}*t")?,
                (_, 1) => write!(f, "t^{e}")?,
                _ => write!(f, "{a}*t^{e}")?,
            }
        }
        Ok(())
    }
}

/// `numerator / Π (1 - t^w)` over the variable weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: Laurent,
    pub weights: Vec<u32>,
}

impl HilbertSeries {
    /// The series as a Laurent polynomial, when the denominator cancels.
    pub fn as_polynomial(&self) -> Option<Laurent> {
        let mut p = self.numerator.clone();
        for &w in &self.weights {
            p = p.div_one_minus(w as i64)?;
        }
        Some(p)
    }

    /// Total `k`-dimension, when finite.
    pub fn dimension(&self) -> Option<u64> {
        self.as_polynomial().map(|p| p.value_at_one() as u64)
    }

    /// Order of the pole at `t = 1`, i.e. the Krull dimension of the graded
    /// module; `None` for the zero module.
    pub fn krull_dimension(&self) -> Option<usize> {
        if self.numerator.is_zero() {
            return None;
        }
        let mut p = self.numerator.clone();
        let mut mult = 0;
        while let Some(q) = p.div_one_minus(1) {
            p = q;
            mult += 1;
        }
        Some(self.weights.len().saturating_sub(mult))
    }

    pub fn sub(&self, other: &HilbertSeries) -> Result<HilbertSeries> {
        if self.weights != other.weights {
            return Err(Error::dims("Hilbert series over different gradings"));
        }
        Ok(HilbertSeries {
            numerator: self.numerator.sub(&other.numerator),
            weights: self.weights.clone(),
        })
    }

    /// Coefficient of `t^d` in the power-series expansion.
    pub fn coefficient(&self, d: i64) -> i128 {
        // multiply by 1/(1 - t^w) one factor at a time, truncated at d
        let Some((&lo, _)) = self.numerator.0.first_key_value() else {
            return 0;
        };
        if d < lo {
            return 0;
        }
        let len = (d - lo + 1) as usize;
        let mut coeffs = vec![0i128; len];
        for (e, c) in self.numerator.terms() {
            if e <= d {
                coeffs[(e - lo) as usize] += c;
            }
        }
        for &w in &self.weights {
            let w = w as usize;
            for i in w..len {
                coeffs[i] += coeffs[i - w];
            }
        }
        coeffs[len - 1]
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/(", self.numerator)?;
        for (k, w) in self.weights.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *w == 1 {
                write!(f, "(1 - t)")?;
            } else {
                write!(f, "(1 - t^{w})")?;
            }
        }
        write!(f, ")")
    }
}

/// Hilbert data of `F/M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub series: HilbertSeries,
    pub dimension: Option<u64>,
}

pub fn hilbert_data(m: &Submodule) -> HilbertData {
    let ambient = m.ambient();
    let weights = ambient.ring().weights().to_vec();
    let mut numerator = Laurent::default();
    for (k, leads) in m.lead_monomials().into_iter().enumerate() {
        let exps: Vec<Vec<u32>> = leads.iter().map(|mm| mm.exps().to_vec()).collect();
        let part = numerator_of(exps, &weights).shift(ambient.degrees()[k]);
        numerator = numerator.add(&part);
    }
    let series = HilbertSeries { numerator, weights };
    let dimension = series.dimension();
    HilbertData { series, dimension }
}

/// `dim_k(big / small)` for `small ⊆ big`, from the difference of the
/// Hilbert series of `F/small` and `F/big`.
pub fn quotient_length(big: &Submodule, small: &Submodule) -> Result<u64> {
    let outer = hilbert_data(small).series;
    let inner = hilbert_data(big).series;
    let diff = outer.sub(&inner)?;
    let p = diff.as_polynomial().ok_or(Error::NonPolynomialDifference)?;
    let v = p.value_at_one();
    u64::try_from(v).map_err(|_| Error::Internal(format!("negative length {v}")))
}

fn degree(e: &[u32], w: &[u32]) -> i64 {
    e.iter().zip(w).map(|(&a, &b)| a as i64 * b as i64).sum()
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minimalize(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort();
    gens.dedup();
    let keep: Vec<bool> = (0..gens.len())
        .map(|i| !(0..gens.len()).any(|j| j != i && divides(&gens[j], &gens[i])))
        .collect();
    gens.into_iter().zip(keep).filter_map(|(g, k)| k.then_some(g)).collect()
}

/// Numerator of the Hilbert series of `R/I` for a monomial ideal `I`.
fn numerator_of(gens: Vec<Vec<u32>>, w: &[u32]) -> Laurent {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return Laurent::one();
    }
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return Laurent::default();
    }
    let coprime = gens.iter().enumerate().all(|(i, a)| {
        gens[i + 1..]
            .iter()
            .all(|b| a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0))
    });
    if coprime {
        return gens.iter().fold(Laurent::one(), |acc, g| {
            acc.mul(&Laurent::one().sub(&Laurent::monomial(degree(g, w), 1)))
        });
    }
    // pivot on the variable occurring in the most generators that are not
    // pure powers
    let n = w.len();
    let mut counts = vec![0usize; n];
    for g in &gens {
        if g.iter().filter(|&&e| e > 0).count() > 1 {
            for (v, &e) in g.iter().enumerate() {
                if e > 0 {
                    counts[v] += 1;
                }
            }
        }
    }
    let v = (0..n).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).unwrap();
    let mut x = vec![0u32; n];
    x[v] = 1;
    let mut plus = gens.clone();
    plus.push(x.clone());
    let quot: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[v] = h[v].saturating_sub(1);
            h
        })
        .collect();
    numerator_of(plus, w).add(&numerator_of(quot, w).shift(w[v] as i64))
}

/// Standard monomials of `R/I` in degree `d`, counted by brute force; kept
/// here for use in tests of the recursion.
#[cfg(test)]
pub(crate) fn count_standard(leads: &[Monomial], nvars: usize, w: &[u32], d: i64) -> usize {
    fn rec(v: usize, left: i64, cur: &mut Vec<u32>, w: &[u32], leads: &[Monomial], acc: &mut usize) {
        if v == cur.len() {
            if left == 0 && !leads.iter().any(|m| divides(m.exps(), cur)) {
                *acc += 1;
            }
            return;
        }
        let mut e = 0;
        while e as i64 * w[v] as i64 <= left {
            cur[v] = e;
            rec(v + 1, left - e as i64 * w[v] as i64, cur, w, leads, acc);
            e += 1;
        }
        cur[v] = 0;
    }
    let mut acc = 0;
    rec(0, d, &mut vec![0; nvars], w, leads, &mut acc);
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{BaseRing, ModuleVector};
    use crate::poly::{parse_polynomial, Field, PolyRing};

    fn data(vars: &[&str], weights: &[u32], gens: &[&str]) -> HilbertData {
        let r = PolyRing::new(
            Field::Rational,
            vars.iter().map(|s| s.to_string()).collect(),
            weights.to_vec(),
        )
        .unwrap();
        let f = BaseRing::polynomial(r.clone()).unit_module();
        let g = gens
            .iter()
            .map(|s| ModuleVector::new(vec![parse_polynomial(s, &r).unwrap()]))
            .collect();
        hilbert_data(&Submodule::new(&f, g).unwrap())
    }

    #[test]
    fn maximal_ideal_has_colength_one() {
        assert_eq!(data(&["x", "y"], &[1, 1], &["x", "y"]).dimension, Some(1));
    }

    #[test]
    fn complete_intersection_of_squares() {
        assert_eq!(data(&["x", "y"], &[1, 1], &["x^2", "y^2"]).dimension, Some(4));
        assert_eq!(data(&["x", "y"], &[1, 1], &["x^2", "y^3"]).dimension, Some(6));
    }

    #[test]
    fn principal_ideal_is_infinite() {
        let h = data(&["x", "y"], &[1, 1], &["x"]);
        assert_eq!(h.dimension, None);
        assert_eq!(h.series.krull_dimension(), Some(1));
        for d in 0..6 {
            assert_eq!(h.series.coefficient(d), 1);
        }
    }

    #[test]
    fn expansion_matches_standard_monomials() {
        let r = PolyRing::new(Field::Rational, vec!["x".into(), "y".into(), "z".into()], vec![1, 2, 1]).unwrap();
        let f = BaseRing::polynomial(r.clone()).unit_module();
        let gens: Vec<ModuleVector> = ["x^2*y", "x*z^3", "y^2*z", "x^4"]
            .iter()
            .map(|s| ModuleVector::new(vec![parse_polynomial(s, &r).unwrap()]))
            .collect();
        let m = Submodule::new(&f, gens).unwrap();
        let h = hilbert_data(&m);
        let leads = &m.lead_monomials()[0];
        for d in 0..=10 {
            assert_eq!(
                h.series.coefficient(d) as usize,
                count_standard(leads, 3, r.weights(), d),
                "degree {d}"
            );
        }
    }

    #[test]
    fn exact_division() {
        let p = Laurent::one().sub(&Laurent::monomial(2, 1));
        assert_eq!(p.div_one_minus(1), Some(Laurent::one().add(&Laurent::monomial(1, 1))));
        assert_eq!(Laurent::one().div_one_minus(1), None);
    }
}
