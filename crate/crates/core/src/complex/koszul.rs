use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::PolyMatrix;

use super::{FreeComplex, SopData};

/// A subset of `{1, ..., n}`, kept sorted; labels the Koszul basis element
/// `e_I`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct KoszulIndex(Vec<usize>);

impl KoszulIndex {
    pub fn new(mut elems: Vec<usize>) -> Result<Self> {
        elems.sort_unstable();
        if elems.windows(2).any(|w| w[0] == w[1]) || elems.first() == Some(&0) {
            return Err(Error::Validation(format!("{elems:?} is not a subset of 1..n")));
        }
        Ok(KoszulIndex(elems))
    }

    pub fn empty() -> Self {
        KoszulIndex(Vec::new())
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        KoszulIndex((1..=n).collect())
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// `s(i, I)`: the number of elements of `I` below `i`.
    pub fn s(&self, i: usize) -> usize {
        self.0.iter().take_while(|&&j| j < i).count()
    }

    /// `t(I) = Σ (i - 1)`.
    pub fn t(&self) -> usize {
        self.0.iter().map(|&i| i - 1).sum()
    }

    pub fn without(&self, i: usize) -> KoszulIndex {
        KoszulIndex(self.0.iter().copied().filter(|&j| j != i).collect())
    }

    pub fn with(&self, i: usize) -> KoszulIndex {
        let mut v = self.0.clone();
        if let Err(k) = v.binary_search(&i) {
            v.insert(k, i);
        }
        KoszulIndex(v)
    }

    pub fn complement(&self, n: usize) -> KoszulIndex {
        KoszulIndex((1..=n).filter(|&i| !self.contains(i)).collect())
    }
}

impl fmt::Display for KoszulIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "{{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// All `p`-subsets of `{1..n}` in lexicographic order; position in this list
/// is the basis index of `e_I` in `K_p`.
pub fn subsets(n: usize, p: usize) -> Vec<KoszulIndex> {
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<KoszulIndex>) {
        if left == 0 {
            out.push(KoszulIndex(cur.clone()));
            return;
        }
        for i in start..=n {
            if n - i + 1 < left {
                break;
            }
            cur.push(i);
            rec(i + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p <= n {
        rec(1, n, p, &mut Vec::new(), &mut out);
    }
    out
}

/// Basis index of `e_I` in `K_{|I|}`.
pub fn subset_index(n: usize, set: &KoszulIndex) -> usize {
    // rank among lexicographically ordered subsets of the same size
    let p = set.len();
    let mut idx = 0;
    let mut prev = 0;
    for (k, &e) in set.elements().iter().enumerate() {
        for skipped in prev + 1..e {
            idx += binomial(n - skipped, p - k - 1);
        }
        prev = e;
    }
    idx
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// The Koszul complex on the sop together with its basis labels.
#[derive(Clone, Debug)]
pub struct KoszulComplex {
    pub complex: FreeComplex,
    pub labels: Vec<Vec<KoszulIndex>>,
}

/// Degree of `e_I`: the sum of the degrees of its elements.
pub fn index_degree(sop: &SopData, set: &KoszulIndex) -> i64 {
    set.elements().iter().map(|&i| sop.degrees()[i - 1]).sum()
}

/// Matrix of `∂_p : K_p → K_{p-1}`, `∂_p(e_I) = Σ (-1)^{s(i,I)} x_i e_{I∖i}`.
pub fn koszul_differential(sop: &SopData, p: usize) -> PolyMatrix {
    let n = sop.len();
    let ring = sop.base().ring();
    let sources = subsets(n, p);
    let targets = subsets(n, p - 1);
    let mut m = PolyMatrix::zeros(ring, targets.len(), sources.len());
    for (col, set) in sources.iter().enumerate() {
        for &i in set.elements() {
            let row = subset_index(n, &set.without(i));
            let x = &sop.elements()[i - 1];
            let entry = if set.s(i) % 2 == 0 { x.clone() } else { -x };
            m.set(row, col, entry);
        }
    }
    let source = sources.iter().map(|s| index_degree(sop, s)).collect();
    let target = targets.iter().map(|s| index_degree(sop, s)).collect();
    m.with_grading(source, target)
        .expect("Koszul differential is homogeneous by construction")
}

/// Koszul complex `K•` of a validated sop.
pub fn koszul(sop: &SopData) -> Result<KoszulComplex> {
    if !sop.is_validated() {
        return Err(Error::PreconditionFailed(
            "Koszul complex requested for an unvalidated system of parameters".into(),
        ));
    }
    let n = sop.len();
    let labels: Vec<Vec<KoszulIndex>> = (0..=n).map(|p| subsets(n, p)).collect();
    let degrees = labels
        .iter()
        .map(|l| l.iter().map(|s| index_degree(sop, s)).collect())
        .collect();
    let maps = (1..=n).map(|p| koszul_differential(sop, p)).collect();
    let complex = FreeComplex::new(sop.base().clone(), degrees, maps)?;
    Ok(KoszulComplex { complex, labels })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_are_lexicographic() {
        let s: Vec<String> = subsets(4, 2).iter().map(|k| k.to_string()).collect();
        assert_eq!(s, ["{1,2}", "{1,3}", "{1,4}", "{2,3}", "{2,4}", "{3,4}"]);
        assert_eq!(subsets(3, 0), vec![KoszulIndex::empty()]);
        assert!(subsets(2, 3).is_empty());
    }

    #[test]
    fn subset_index_inverts_enumeration() {
        for n in 0..=6 {
            for p in 0..=n {
                for (k, s) in subsets(n, p).iter().enumerate() {
                    assert_eq!(subset_index(n, s), k);
                }
            }
        }
    }

    #[test]
    fn sign_statistics() {
        let i = KoszulIndex::new(vec![1, 3, 4]).unwrap();
        assert_eq!(i.s(1), 0);
        assert_eq!(i.s(3), 1);
        assert_eq!(i.s(4), 2);
        assert_eq!(i.s(2), 1);
        assert_eq!(i.t(), 5);
        assert_eq!(KoszulIndex::empty().t(), 0);
        assert_eq!(i.complement(5).elements(), &[2, 5]);
        assert_eq!(i.without(3).elements(), &[1, 4]);
        assert_eq!(i.without(3).with(3), i);
    }

    #[test]
    fn rejects_bad_subsets() {
        assert!(KoszulIndex::new(vec![0, 1]).is_err());
        assert!(KoszulIndex::new(vec![2, 2]).is_err());
        assert_eq!(KoszulIndex::new(vec![3, 1]).unwrap().elements(), &[1, 3]);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(2, 3), 0);
    }
}
