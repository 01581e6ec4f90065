//! Named example instances and a seeded generator of random ones.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{koszul, validate_sop, FreeComplex, SopData};
use crate::error::Result;
use crate::groebner::BaseRing;
use crate::poly::{parse_polynomial, Field, Monomial, PolyMatrix, PolyRing, Polynomial};

/// A complex together with the system of parameters to transform it by.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub complex: FreeComplex,
    pub sop: SopData,
}

fn ring(field: Field, names: &[&str], weights: &[u32]) -> std::sync::Arc<PolyRing> {
    PolyRing::new(field, names.iter().map(|s| s.to_string()).collect(), weights.to_vec())
        .expect("corpus rings are well formed")
}

fn polys(r: &std::sync::Arc<PolyRing>, texts: &[&str]) -> Vec<Polynomial> {
    texts
        .iter()
        .map(|t| parse_polynomial(t, r).expect("corpus polynomials parse"))
        .collect()
}

/// Koszul complex of `gens` as an input complex, transformed by `sop`.
fn koszul_instance(name: &str, base: &BaseRing, gens: Vec<Polynomial>, sop: Vec<Polynomial>) -> Result<Instance> {
    let k = koszul(&validate_sop(base, gens)?)?;
    Ok(Instance {
        name: name.to_string(),
        complex: k.complex,
        sop: validate_sop(base, sop)?,
    })
}

/// `F = K(x², y²)` over `ℚ[x,y]`, `Q = (x, y)`.
pub fn example_a() -> Instance {
    let r = ring(Field::Rational, &["x", "y"], &[1, 1]);
    let base = BaseRing::polynomial(r.clone());
    koszul_instance("ex-a", &base, polys(&r, &["x^2", "y^2"]), polys(&r, &["x", "y"])).expect("ex-a is valid")
}

/// `F = K(x², y², z²)`, `Q = (x, y, z)`.
pub fn complete_intersection_squares() -> Instance {
    let r = ring(Field::Rational, &["x", "y", "z"], &[1, 1, 1]);
    let base = BaseRing::polynomial(r.clone());
    koszul_instance(
        "ci-squares-3",
        &base,
        polys(&r, &["x^2", "y^2", "z^2"]),
        polys(&r, &["x", "y", "z"]),
    )
    .expect("complete intersection is valid")
}

/// `F = K(x, y)`, `Q = (x, y)`: the top module disappears.
pub fn koszul_of_variables() -> Instance {
    let r = ring(Field::Rational, &["x", "y"], &[1, 1]);
    let base = BaseRing::polynomial(r.clone());
    koszul_instance("koszul-xy", &base, polys(&r, &["x", "y"]), polys(&r, &["x", "y"])).expect("valid")
}

/// `0 → R(-3)² → R(-2)³ → R` resolving `(x², xy, y²)`, `Q = (x, y)`.
pub fn hilbert_burch() -> Instance {
    let r = ring(Field::Rational, &["x", "y"], &[1, 1]);
    let base = BaseRing::polynomial(r.clone());
    let phi1 = PolyMatrix::from_rows(&r, vec![polys(&r, &["x^2", "x*y", "y^2"])], 3).unwrap();
    let phi2 = PolyMatrix::from_rows(
        &r,
        vec![polys(&r, &["y", "0"]), polys(&r, &["-x", "y"]), polys(&r, &["0", "-x"])],
        2,
    )
    .unwrap();
    let complex = FreeComplex::new(base.clone(), vec![vec![0], vec![2, 2, 2], vec![3, 3]], vec![phi1, phi2])
        .expect("shapes agree");
    Instance {
        name: "hilbert-burch".into(),
        complex,
        sop: validate_sop(&base, polys(&r, &["x", "y"])).unwrap(),
    }
}

/// `F = K(x², y²)` with `deg y = 2`, `Q = (x, y)`.
pub fn weighted() -> Instance {
    let r = ring(Field::Rational, &["x", "y"], &[1, 2]);
    let base = BaseRing::polynomial(r.clone());
    koszul_instance("weighted-12", &base, polys(&r, &["x^2", "y^2"]), polys(&r, &["x", "y"])).expect("valid")
}

/// The fixed instances followed by `random` seeded random ones.
pub fn standard_corpus(seed: u64, random: usize) -> Vec<Instance> {
    let mut out = vec![
        example_a(),
        complete_intersection_squares(),
        koszul_of_variables(),
        hilbert_burch(),
        weighted(),
    ];
    out.extend(random_instances(seed, random));
    out
}

/// Random instances: `n ∈ {2, 3}`, `Q = (x_i^{a_i})` with `a_i ≤ 3`, and
/// `F = K(y)` for a random sop `y ⊆ Q` of degrees at most 3.
pub fn random_instances(seed: u64, count: usize) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        if let Some(inst) = random_instance(&mut rng, out.len()) {
            out.push(inst);
        }
    }
    out
}

fn random_instance(rng: &mut ChaCha8Rng, k: usize) -> Option<Instance> {
    let n = if rng.gen_bool(0.5) { 2 } else { 3 };
    let names = ["x", "y", "z"];
    let r = ring(Field::Rational, &names[..n], &vec![1; n]);
    let base = BaseRing::polynomial(r.clone());
    let a: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
    let q: Vec<Polynomial> = (0..n)
        .map(|i| Polynomial::monomial(&r, power(&r, i, a[i]), r.field().one()))
        .collect();
    let mut y = Vec::with_capacity(n);
    for i in 0..n {
        let d = rng.gen_range(a[i]..=3);
        let mut p = Polynomial::monomial(&r, power(&r, i, d), r.field().from_i64(rng.gen_range(1..=3)));
        let mut candidates: Vec<Monomial> = monomials_of_degree(&r, d as i64)
            .into_iter()
            .filter(|m| (0..n).any(|j| m.exps()[j] >= a[j]) && *m != power(&r, i, d))
            .collect();
        candidates.shuffle(rng);
        for m in candidates.into_iter().take(2) {
            let c = rng.gen_range(-3..=3);
            if c != 0 {
                p = &p + &Polynomial::monomial(&r, m, r.field().from_i64(c));
            }
        }
        y.push(p);
    }
    let f = koszul(&validate_sop(&base, y).ok()?).ok()?;
    Some(Instance {
        name: format!("random-{k}"),
        complex: f.complex,
        sop: validate_sop(&base, q).ok()?,
    })
}

fn power(r: &PolyRing, i: usize, e: u32) -> Monomial {
    let mut exps = vec![0; r.nvars()];
    exps[i] = e;
    Monomial::new(&exps, r.weights())
}

/// All monomials of weighted degree `d`.
pub fn monomials_of_degree(r: &PolyRing, d: i64) -> Vec<Monomial> {
    fn rec(v: usize, left: i64, cur: &mut Vec<u32>, r: &PolyRing, out: &mut Vec<Monomial>) {
        let w = r.weights();
        if v == w.len() {
            if left == 0 {
                out.push(Monomial::new(cur, w));
            }
            return;
        }
        let mut e = 0u32;
        while e as i64 * w[v] as i64 <= left {
            cur[v] = e;
            rec(v + 1, left - e as i64 * w[v] as i64, cur, r, out);
            e += 1;
        }
        cur[v] = 0;
    }
    let mut out = Vec::new();
    if d >= 0 {
        rec(0, d, &mut vec![0; r.nvars()], r, &mut out);
    }
    out
}
