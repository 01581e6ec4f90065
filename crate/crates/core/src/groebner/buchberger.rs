use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use super::vector::{SVec, TermOrder};

/// Index of the first basis element whose lead term divides `m·e_pos`.
fn find_divisor(basis: &[SVec], pos: usize, mono: &crate::poly::Monomial) -> Option<usize> {
    basis.iter().position(|g| {
        let l = &g.terms[0];
        l.pos == pos && l.mono.divides(mono)
    })
}

/// Full reduction of `f` by a monic basis: the remainder has no term
/// divisible by any lead term.
pub(crate) fn reduce_full(mut f: SVec, basis: &[SVec], ord: &TermOrder) -> SVec {
    let mut rem = Vec::new();
    while let Some(t) = f.terms.first() {
        match find_divisor(basis, t.pos, &t.mono) {
            Some(k) => {
                let g = &basis[k];
                let q = g.terms[0].mono.quotient_of(&t.mono).unwrap();
                let c = -&t.coeff;
                f = f.add_scaled(&c, &q, g, ord);
            }
            None => rem.push(f.terms.remove(0)),
        }
    }
    SVec { terms: rem }
}

/// Reduces only while the lead term sits in a position `< limit`; returns
/// the partially reduced vector, or `None` when an irreducible lead term
/// remains below the limit.
pub(crate) fn reduce_below(mut f: SVec, basis: &[SVec], limit: usize, ord: &TermOrder) -> Option<SVec> {
    while let Some(t) = f.terms.first() {
        if t.pos >= limit {
            break;
        }
        let k = find_divisor(basis, t.pos, &t.mono)?;
        let g = &basis[k];
        let q = g.terms[0].mono.quotient_of(&t.mono).unwrap();
        let c = -&t.coeff;
        f = f.add_scaled(&c, &q, g, ord);
    }
    Some(f)
}

fn s_vector(f: &SVec, g: &SVec, ord: &TermOrder) -> SVec {
    let (lf, lg) = (&f.terms[0], &g.terms[0]);
    let l = lf.mono.lcm(&lg.mono, ord.ring.weights());
    let qf = lf.mono.quotient_of(&l).unwrap();
    let qg = lg.mono.quotient_of(&l).unwrap();
    let one = ord.ring.field().one();
    let minus = -&one;
    SVec::default()
        .add_scaled(&one, &qf, f, ord)
        .add_scaled(&minus, &qg, g, ord)
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Buchberger's algorithm with the product and chain criteria, returning the
/// reduced Gröbner basis sorted by decreasing lead term.
///
/// Pairs are taken by smallest lcm degree, ties by index. The product
/// criterion is only applied in rank one, where it holds for modules.
pub(crate) fn reduced_gb(gens: Vec<SVec>, ord: &TermOrder) -> Vec<SVec> {
    let mut basis: Vec<SVec> = Vec::new();
    let mut queue: BinaryHeap<Reverse<(i64, usize, usize)>> = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let use_product = ord.rank() == 1;

    let push = |basis: &mut Vec<SVec>,
                queue: &mut BinaryHeap<Reverse<(i64, usize, usize)>>,
                pending: &mut HashSet<(usize, usize)>,
                mut v: SVec| {
        v.make_monic();
        let j = basis.len();
        let lj = v.terms[0].clone();
        for (i, g) in basis.iter().enumerate() {
            let li = &g.terms[0];
            if li.pos != lj.pos {
                continue;
            }
            let l = li.mono.lcm(&lj.mono, ord.ring.weights());
            queue.push(Reverse((l.degree() + ord.degrees[lj.pos], i, j)));
            pending.insert((i, j));
        }
        basis.push(v);
    };

    for g in gens {
        if !g.is_zero() {
            push(&mut basis, &mut queue, &mut pending, g);
        }
    }

    while let Some(Reverse((_, i, j))) = queue.pop() {
        pending.remove(&(i, j));
        let (li, lj) = (&basis[i].terms[0], &basis[j].terms[0]);
        if use_product && li.mono.is_coprime(&lj.mono) {
            continue;
        }
        let l = li.mono.lcm(&lj.mono, ord.ring.weights());
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].terms[0].pos == li.pos
                && basis[k].terms[0].mono.divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let s = s_vector(&basis[i], &basis[j], ord);
        let r = reduce_full(s, &basis, ord);
        if !r.is_zero() {
            push(&mut basis, &mut queue, &mut pending, r);
        }
    }

    interreduce(basis, ord)
}

fn interreduce(basis: Vec<SVec>, ord: &TermOrder) -> Vec<SVec> {
    let keep: Vec<bool> = (0..basis.len())
        .map(|i| {
            let li = &basis[i].terms[0];
            !basis.iter().enumerate().any(|(j, g)| {
                let lj = &g.terms[0];
                j != i && lj.pos == li.pos && lj.mono.divides(&li.mono) && (lj.mono != li.mono || j < i)
            })
        })
        .collect();
    let minimal: Vec<SVec> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    let mut out: Vec<SVec> = minimal
        .iter()
        .map(|g| {
            let head = g.terms[0].clone();
            let tail = reduce_full(
                SVec {
                    terms: g.terms[1..].to_vec(),
                },
                &minimal,
                ord,
            );
            let mut terms = vec![head];
            terms.extend(tail.terms);
            let mut v = SVec { terms };
            v.make_monic();
            v
        })
        .collect();
    out.sort_by(|a, b| b.cmp_lead(a, ord));
    out
}
