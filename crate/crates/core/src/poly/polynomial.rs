use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::{Monomial, PolyRing, Scalar};

/// Sparse polynomial with terms sorted in decreasing ring order.
///
/// The zero polynomial has no terms and no coefficient is ever zero.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Scalar)>,
}

/// Result of asking for the weighted degree of a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Degree(i64),
    NotHomogeneous,
    ZeroPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Checked arithmetic entry point; rejects operands over different fields or rings.
pub fn poly_arith(op: PolyOp, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.compatible(g)?;
    Ok(match op {
        PolyOp::Add => f + g,
        PolyOp::Sub => f - g,
        PolyOp::Mul => f * g,
    })
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Scalar) -> Self {
        Self::monomial(ring, ring.one_monomial(), c)
    }

    pub fn from_i64(ring: &Arc<PolyRing>, c: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(c))
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::from_i64(ring, 1)
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(i, ring.weights()), ring.field().one())
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: Scalar) -> Self {
        let terms = if c.is_zero() { vec![] } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<(Monomial, Scalar)>) -> Self {
        terms.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = &*lc + &c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Wraps terms already in canonical order. Only for internal callers that
    /// maintain the invariant themselves.
    pub(crate) fn from_sorted(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Scalar)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.cmp_monomials(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    /// The degree-zero part, i.e. the constant coefficient.
    pub fn constant_term(&self) -> Scalar {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.ring.field().zero(),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn homogeneous_degree(&self) -> Homogeneity {
        let Some((m0, _)) = self.terms.first() else {
            return Homogeneity::ZeroPoly;
        };
        let d = m0.degree();
        if self.terms.iter().all(|(m, _)| m.degree() == d) {
            Homogeneity::Degree(d)
        } else {
            Homogeneity::NotHomogeneous
        }
    }

    pub fn is_homogeneous_of(&self, degree: i64) -> bool {
        self.terms.iter().all(|(m, _)| m.degree() == degree)
    }

    pub fn compatible(&self, other: &Polynomial) -> Result<()> {
        if self.ring.field() != other.ring.field() {
            return Err(Error::IncompatibleField(self.ring.field(), other.ring.field()));
        }
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::IncompatibleRing);
        }
        Ok(())
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn checked_scale(&self, c: &Scalar) -> Result<Polynomial> {
        if c.field() != self.ring.field() {
            return Err(Error::IncompatibleField(self.ring.field(), c.field()));
        }
        Ok(self.scale(c))
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    /// `self + c·m·g` in one merge pass.
    pub fn add_scaled(&self, c: &Scalar, m: &Monomial, g: &Polynomial) -> Polynomial {
        if c.is_zero() || g.is_zero() {
            return self.clone();
        }
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(t, k)| (t.mul(m), k * c)).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some((ma, _)), Some((mb, _))) => match ring.cmp_monomials(ma, mb) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (ma, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let s = ca + &cb;
                        if !s.is_zero() {
                            out.push((ma.clone(), s));
                        }
                    }
                },
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Moves the polynomial into a ring with one extra trailing variable,
    /// multiplied by `tag^exp`.
    pub(crate) fn embed_tagged(&self, target: &Arc<PolyRing>, exp: u32) -> Polynomial {
        let w = *target.weights().last().unwrap();
        Polynomial::from_terms(
            target,
            self.terms
                .iter()
                .map(|(m, c)| (m.push_var(exp, w), c.clone()))
                .collect(),
        )
    }

    /// Inverse of [`Polynomial::embed_tagged`] for tag-free polynomials.
    pub(crate) fn restrict_untagged(&self, target: &Arc<PolyRing>) -> Polynomial {
        Polynomial::from_terms(
            target,
            self.terms
                .iter()
                .map(|(m, c)| {
                    debug_assert_eq!(*m.exps().last().unwrap(), 0);
                    (m.drop_last(target.weights()), c.clone())
                })
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let one = self.ring.one_monomial();
        self.add_scaled(&self.ring.field().one(), &one, rhs)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let one = self.ring.one_monomial();
        self.add_scaled(&-&self.ring.field().one(), &one, rhs)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let (short, long) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &short.terms {
            acc = acc.add_scaled(c, m, long);
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
                continue;
            }
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            write_monomial(f, &self.ring, m)?;
        }
        Ok(())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &PolyRing, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", ring.names()[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, Field};

    fn ring() -> Arc<PolyRing> {
        PolyRing::standard(Field::Rational, &["x", "y"]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &ring()).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("x+y") * &p("x-y"), p("x^2-y^2"));
    }

    #[test]
    fn multiplication_by_zero() {
        assert!((&p("x^3+2*y") * &p("0")).is_zero());
    }

    #[test]
    fn rational_halves() {
        assert_eq!(&p("1/2*x") + &p("1/2*x"), p("x"));
    }

    #[test]
    fn homogeneity() {
        assert_eq!(p("x^2+x*y").homogeneous_degree(), Homogeneity::Degree(2));
        assert_eq!(p("x^2+x").homogeneous_degree(), Homogeneity::NotHomogeneous);
        assert_eq!(p("0").homogeneous_degree(), Homogeneity::ZeroPoly);
        let w = PolyRing::new(Field::Rational, vec!["x".into(), "y".into()], vec![1, 2]).unwrap();
        let xy = parse_polynomial("x*y", &w).unwrap();
        assert_eq!(xy.homogeneous_degree(), Homogeneity::Degree(3));
    }

    #[test]
    fn mixed_fields_rejected() {
        let q = PolyRing::standard(Field::Prime(7), &["x", "y"]).unwrap();
        let g = parse_polynomial("x", &q).unwrap();
        assert_eq!(
            poly_arith(PolyOp::Add, &p("x"), &g),
            Err(Error::IncompatibleField(Field::Rational, Field::Prime(7)))
        );
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(p("y^3 - 1/2*x^2*y").to_string(), "-1/2*x^2*y + y^3");
        assert_eq!(p("3 - x").to_string(), "-x + 3");
        assert_eq!(p("0").to_string(), "0");
    }

    #[test]
    fn constant_term_is_degree_zero_part() {
        assert_eq!(p("x + 5").constant_term(), Field::Rational.from_i64(5));
        assert!(p("x*y").constant_term().is_zero());
    }
}
