mod common;

use common::brute;
use startrans::corpus::{example_a, standard_corpus};
use startrans::groebner::{colon, intersect};
use startrans::poly::parse_polynomial;
use startrans::{BaseRing, Field, ModuleVector, PolyRing, Submodule};

fn ideal_vectors(ring: &std::sync::Arc<PolyRing>, texts: &[&str]) -> Vec<ModuleVector> {
    texts
        .iter()
        .map(|t| ModuleVector::new(vec![parse_polynomial(t, ring).unwrap()]))
        .collect()
}

#[test]
fn brute_hilbert_function_of_a_complete_intersection() {
    let r = PolyRing::standard(Field::Rational, &["x", "y"]).unwrap();
    let f = BaseRing::polynomial(r.clone()).unit_module();
    let gens = ideal_vectors(&r, &["x^2", "y^2"]);
    let hf: Vec<usize> = (0..6).map(|t| brute::hilbert_function(&f, &gens, t)).collect();
    assert_eq!(hf, vec![1, 2, 1, 0, 0, 0]);
    let gens = ideal_vectors(&r, &["x^2", "x*y", "y^2"]);
    let q: Vec<_> = ["x", "y"].iter().map(|t| parse_polynomial(t, &r).unwrap()).collect();
    let dims: Vec<usize> = (0..4).map(|t| brute::colon_dim(&f, &gens, &q, t)).collect();
    assert_eq!(dims, vec![0, 2, 3, 4]);
}

#[test]
fn brute_echelon_rank() {
    let r = PolyRing::standard(Field::Prime(5), &["x", "y", "z"]).unwrap();
    let f = BaseRing::polynomial(r.clone()).unit_module();
    let gens = ideal_vectors(&r, &["x + y", "x - y", "2*x"]);
    assert_eq!(brute::span_dim(&f, &gens, 1), 2);
    assert_eq!(brute::span_dim(&f, &gens, 2), 5);
    assert!(brute::contains(&f, &gens, &ideal_vectors(&r, &["x*z"])[0]));
    assert!(!brute::contains(&f, &gens, &ideal_vectors(&r, &["z^2"])[0]));
}

#[test]
fn kernel_agrees_with_brute_on_the_corpus() {
    for inst in standard_corpus(7, 10) {
        if let Err(e) = common::crosscheck(&inst, 6) {
            panic!("{e}");
        }
    }
}

#[test]
fn kernel_agrees_with_brute_in_rank_two() {
    let a = example_a();
    let f1 = a.complex.module(1);
    let r = a.complex.ring();
    let p = |t: &str| parse_polynomial(t, r).unwrap();
    let gens = vec![
        ModuleVector::new(vec![p("x"), p("y")]),
        ModuleVector::new(vec![p("y^2"), p("0")]),
    ];
    let m = Submodule::new(f1, gens.clone()).unwrap();
    let q = vec![p("x"), p("y")];
    let c = colon(&m, &q).unwrap();
    let other = vec![
        ModuleVector::new(vec![p("x^2"), p("0")]),
        ModuleVector::new(vec![p("0"), p("x*y")]),
    ];
    let meet = intersect(&m, &Submodule::new(f1, other.clone()).unwrap()).unwrap();
    for t in 2..=8 {
        assert_eq!(
            brute::colon_dim(f1, &gens, &q, t),
            brute::span_dim(f1, c.basis(), t),
            "colon t={t}"
        );
        assert_eq!(
            brute::intersection_dim(f1, &gens, &other, t),
            brute::span_dim(f1, meet.basis(), t),
            "intersection t={t}"
        );
    }
}
