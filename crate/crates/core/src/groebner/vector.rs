//! Sparse module vectors in a single sorted term list, the working
//! representation of the Buchberger kernel.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::poly::{ModuleOrder, Monomial, PolyRing, Polynomial, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub pos: usize,
    pub mono: Monomial,
    pub coeff: Scalar,
}

/// Total order on module terms `m·e_pos`.
///
/// Comparison runs: tag exponent (tagged rings only), block index (lower
/// block is larger), then the module order inside the block.
#[derive(Clone, Debug)]
pub(crate) struct TermOrder {
    pub ring: Arc<PolyRing>,
    pub degrees: Vec<i64>,
    pub blocks: Vec<u32>,
    pub module: ModuleOrder,
}

impl TermOrder {
    pub fn new(ring: Arc<PolyRing>, degrees: Vec<i64>, module: ModuleOrder) -> Self {
        let blocks = vec![0; degrees.len()];
        TermOrder {
            ring,
            degrees,
            blocks,
            module,
        }
    }

    /// Appends a second block of positions that is eliminated against the
    /// first one.
    pub fn with_block(mut self, degrees: &[i64]) -> Self {
        self.degrees.extend_from_slice(degrees);
        self.blocks.extend(std::iter::repeat_n(1, degrees.len()));
        self
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn cmp(&self, pa: usize, ma: &Monomial, pb: usize, mb: &Monomial) -> Ordering {
        if self.ring.is_tagged() {
            let n = ma.nvars() - 1;
            let c = ma.exps()[n].cmp(&mb.exps()[n]);
            if c != Ordering::Equal {
                return c;
            }
        }
        let c = self.blocks[pb].cmp(&self.blocks[pa]);
        if c != Ordering::Equal {
            return c;
        }
        match self.module {
            ModuleOrder::PositionOverTerm => pb.cmp(&pa).then_with(|| self.ring.cmp_monomials(ma, mb)),
            ModuleOrder::TermOverPosition => (ma.degree() + self.degrees[pa])
                .cmp(&(mb.degree() + self.degrees[pb]))
                .then_with(|| self.ring.cmp_monomials(ma, mb))
                .then_with(|| pb.cmp(&pa)),
        }
    }

    fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        self.cmp(a.pos, &a.mono, b.pos, &b.mono)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct SVec {
    pub terms: Vec<Term>,
}

impl SVec {
    pub fn from_coords(coords: &[Polynomial], offset: usize, ord: &TermOrder) -> SVec {
        let mut terms: Vec<Term> = coords
            .iter()
            .enumerate()
            .flat_map(|(k, p)| {
                p.terms().iter().map(move |(m, c)| Term {
                    pos: k + offset,
                    mono: m.clone(),
                    coeff: c.clone(),
                })
            })
            .collect();
        terms.sort_by(|a, b| ord.cmp_terms(b, a));
        SVec { terms }
    }

    /// Coordinates for positions `offset..offset+rank`; other positions are
    /// ignored.
    pub fn to_coords(&self, offset: usize, rank: usize, ring: &Arc<PolyRing>) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            if t.pos >= offset && t.pos < offset + rank {
                buckets[t.pos - offset].push((t.mono.clone(), t.coeff.clone()));
            }
        }
        buckets.into_iter().map(|b| Polynomial::from_sorted(ring, b)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// `self + c·m·g`; multiplication by a monomial preserves the order so a
    /// single merge suffices.
    pub fn add_scaled(&self, c: &Scalar, m: &Monomial, g: &SVec, ord: &TermOrder) -> SVec {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g
            .terms
            .iter()
            .map(|t| Term {
                pos: t.pos,
                mono: t.mono.mul(m),
                coeff: &t.coeff * c,
            })
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match ord.cmp_terms(x, y) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let x = a.next().unwrap();
                        let y = b.next().unwrap();
                        let s = &x.coeff + &y.coeff;
                        if !s.is_zero() {
                            out.push(Term {
                                pos: x.pos,
                                mono: x.mono.clone(),
                                coeff: s,
                            });
                        }
                    }
                },
            }
        }
        SVec { terms: out }
    }

    pub fn make_monic(&mut self) {
        if let Some(lc) = self.terms.first().map(|t| t.coeff.inv()) {
            for t in &mut self.terms {
                t.coeff = &t.coeff * &lc;
            }
        }
    }

    pub fn cmp_lead(&self, other: &SVec, ord: &TermOrder) -> Ordering {
        match (self.lead(), other.lead()) {
            (Some(a), Some(b)) => ord.cmp_terms(a, b),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => Ordering::Equal,
        }
    }
}
