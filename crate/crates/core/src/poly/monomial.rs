use smallvec::SmallVec;

/// A power product `x^a` with its cached weighted degree.
///
/// The degree is fixed at construction from the ring weights and updated by
/// every operation, so it always equals `weights · exponents`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u32; 4]>,
    degree: i64,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn new(exps: &[u32], weights: &[u32]) -> Self {
        assert_eq!(exps.len(), weights.len(), "exponent vector length");
        let degree = exps.iter().zip(weights).map(|(&e, &w)| e as i64 * w as i64).sum();
        Monomial {
            exps: SmallVec::from_slice(exps),
            degree,
        }
    }

    pub fn var(i: usize, weights: &[u32]) -> Self {
        let mut exps = vec![0; weights.len()];
        exps[i] = 1;
        Monomial::new(&exps, weights)
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let exps: SmallVec<[u32; 4]> = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial::new(&exps, weights)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Drops the last variable; used when leaving a tagged ring.
    pub(crate) fn drop_last(&self, weights: &[u32]) -> Monomial {
        let n = self.exps.len() - 1;
        Monomial::new(&self.exps[..n], weights)
    }

    /// Appends a trailing exponent; used when entering a tagged ring.
    pub(crate) fn push_var(&self, exp: u32, weight: u32) -> Monomial {
        let mut exps = self.exps.clone();
        exps.push(exp);
        Monomial {
            exps,
            degree: self.degree + exp as i64 * weight as i64,
        }
    }
}
