use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::{Field, Monomial};

/// Term order on monomials of the ring.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum RingOrder {
    /// Weighted degree first, ties broken reverse-lexicographically.
    #[default]
    GRevLex,
    Lex,
}

/// Order on terms `m·e_k` of a free module.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ModuleOrder {
    /// Position first (lower basis index is larger), then the ring order.
    #[default]
    PositionOverTerm,
    /// Twisted degree first, then the ring order, then position.
    TermOverPosition,
}

/// A ring order paired with a module order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub ring: RingOrder,
    pub module: ModuleOrder,
}

/// The polynomial ring `k[x_1..x_m]` with a positive integer grading.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: Field,
    names: Vec<String>,
    weights: Vec<u32>,
    order: RingOrder,
    // last variable is an elimination tag compared before everything else
    tagged: bool,
}

impl PolyRing {
    pub fn new(field: Field, names: Vec<String>, weights: Vec<u32>) -> Result<Arc<Self>> {
        Self::with_order(field, names, weights, RingOrder::GRevLex)
    }

    pub fn with_order(field: Field, names: Vec<String>, weights: Vec<u32>, order: RingOrder) -> Result<Arc<Self>> {
        if names.is_empty() {
            return Err(Error::Validation("ring needs at least one variable".into()));
        }
        if names.len() != weights.len() {
            return Err(Error::Validation("one degree per variable required".into()));
        }
        if let Some(w) = weights.iter().find(|&&w| w == 0) {
            return Err(Error::Validation(format!("variable degree {w} must be positive")));
        }
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::Validation(format!("invalid variable name {n:?}")));
            }
            if names[..i].contains(n) {
                return Err(Error::Validation(format!("duplicate variable {n:?}")));
            }
        }
        Ok(Arc::new(PolyRing {
            field,
            names,
            weights,
            order,
            tagged: false,
        }))
    }

    /// Standard-graded ring with the given variable names.
    pub fn standard(field: Field, names: &[&str]) -> Result<Arc<Self>> {
        Self::new(
            field,
            names.iter().map(|s| s.to_string()).collect(),
            vec![1; names.len()],
        )
    }

    /// The ring with one extra trailing tag variable that every comparison
    /// eliminates first.
    pub(crate) fn tagged(&self) -> Arc<Self> {
        let mut names = self.names.clone();
        let mut tag = String::from("t_");
        while names.contains(&tag) {
            tag.push('_');
        }
        names.push(tag);
        let mut weights = self.weights.clone();
        weights.push(1);
        Arc::new(PolyRing {
            field: self.field,
            names,
            weights,
            order: self.order,
            tagged: true,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn order(&self) -> RingOrder {
        self.order
    }

    pub fn is_tagged(&self) -> bool {
        self.tagged
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = a.nvars();
        let (base, da, db) = if self.tagged {
            let (ta, tb) = (a.exps()[n - 1], b.exps()[n - 1]);
            if ta != tb {
                return ta.cmp(&tb);
            }
            let wt = self.weights[n - 1] as i64;
            (n - 1, a.degree() - ta as i64 * wt, b.degree() - tb as i64 * wt)
        } else {
            (n, a.degree(), b.degree())
        };
        let (ea, eb) = (&a.exps()[..base], &b.exps()[..base]);
        match self.order {
            RingOrder::GRevLex => da.cmp(&db).then_with(|| {
                for k in (0..base).rev() {
                    if ea[k] != eb[k] {
                        return eb[k].cmp(&ea[k]);
                    }
                }
                Ordering::Equal
            }),
            RingOrder::Lex => ea.cmp(eb),
        }
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(r: &PolyRing, e: &[u32]) -> Monomial {
        Monomial::new(e, r.weights())
    }

    #[test]
    fn grevlex_examples() {
        let r = PolyRing::standard(Field::Rational, &["x", "y"]).unwrap();
        assert_eq!(r.cmp_monomials(&m(&r, &[2, 1]), &m(&r, &[1, 2])), Ordering::Greater);
        assert_eq!(r.cmp_monomials(&m(&r, &[1, 1]), &m(&r, &[1, 1])), Ordering::Equal);
        assert_eq!(r.cmp_monomials(&m(&r, &[0, 0]), &m(&r, &[1, 0])), Ordering::Less);
    }

    #[test]
    fn grevlex_three_variables() {
        let r = PolyRing::standard(Field::Rational, &["x", "y", "z"]).unwrap();
        // xz^2 < y^3 in grevlex: smaller exponent in the last variable wins
        assert_eq!(
            r.cmp_monomials(&m(&r, &[0, 3, 0]), &m(&r, &[1, 0, 2])),
            Ordering::Greater
        );
        assert_eq!(
            r.cmp_monomials(&m(&r, &[1, 1, 1]), &m(&r, &[0, 2, 1])),
            Ordering::Greater
        );
    }

    #[test]
    fn weighted_degree_dominates() {
        let r = PolyRing::new(Field::Rational, vec!["x".into(), "y".into()], vec![1, 3]).unwrap();
        assert_eq!(r.cmp_monomials(&m(&r, &[0, 1]), &m(&r, &[2, 0])), Ordering::Greater);
    }

    #[test]
    fn tag_variable_is_eliminated_first() {
        let r = PolyRing::standard(Field::Rational, &["x", "y"]).unwrap().tagged();
        assert_eq!(
            r.cmp_monomials(&m(&r, &[0, 0, 1]), &m(&r, &[5, 5, 0])),
            Ordering::Greater
        );
        assert_eq!(
            r.cmp_monomials(&m(&r, &[2, 0, 1]), &m(&r, &[1, 0, 1])),
            Ordering::Greater
        );
    }

    #[test]
    fn rejects_bad_rings() {
        assert!(PolyRing::standard(Field::Rational, &["x", "x"]).is_err());
        assert!(PolyRing::standard(Field::Rational, &["1x"]).is_err());
        assert!(PolyRing::new(Field::Rational, vec!["x".into()], vec![0]).is_err());
    }
}
