use std::sync::Arc;

use super::*;
use crate::poly::{parse_polynomial, parse_polynomial_list, Field, ModuleOrder, PolyRing, Polynomial};

fn ring(vars: &[&str]) -> Arc<PolyRing> {
    PolyRing::standard(Field::Rational, vars).unwrap()
}

fn ideal(r: &Arc<PolyRing>, text: &str) -> Submodule {
    let f = BaseRing::polynomial(r.clone()).unit_module();
    Submodule::ideal(&f, &parse_polynomial_list(text, r).unwrap()).unwrap()
}

fn basis_strings(m: &Submodule) -> Vec<String> {
    m.basis().iter().map(|v| v.to_string()).collect()
}

fn vec_of(r: &Arc<PolyRing>, coords: &[&str]) -> ModuleVector {
    ModuleVector::new(coords.iter().map(|s| parse_polynomial(s, r).unwrap()).collect())
}

#[test]
fn twisted_cubic_basis() {
    let r = ring(&["x", "y", "z", "w"]);
    let m = ideal(&r, "x*z - y^2, y*w - z^2, x*w - y*z");
    assert_eq!(m.basis().len(), 3);
    let p = parse_polynomial("x*z^2 - y^2*z", &r).unwrap();
    assert!(m.contains(&ModuleVector::new(vec![p])));
    let q = parse_polynomial("x*y", &r).unwrap();
    assert!(!m.contains(&ModuleVector::new(vec![q])));
}

#[test]
fn reduced_basis_is_canonical() {
    let r = ring(&["x", "y"]);
    let a = ideal(&r, "x^2, x*y + y^2");
    let b = ideal(&r, "x^2 + x*y + y^2, x*y + y^2");
    assert!(submodule_equal(&a, &b));
    assert_eq!(basis_strings(&a), basis_strings(&b));
}

#[test]
fn colon_of_squares_by_maximal_ideal() {
    let r = ring(&["x", "y"]);
    let m = ideal(&r, "x^2, y^2");
    let c = colon(&m, &parse_polynomial_list("x, y", &r).unwrap()).unwrap();
    assert!(submodule_equal(&c, &ideal(&r, "x^2, y^2, x*y")));
}

#[test]
fn colon_of_ideal_by_itself_element() {
    let r = ring(&["x", "y"]);
    let m = ideal(&r, "x^2, x*y, y^2");
    let c = colon(&m, &parse_polynomial_list("x, y", &r).unwrap()).unwrap();
    assert!(submodule_equal(&c, &ideal(&r, "x, y")));
}

#[test]
fn intersection_of_coordinate_ideals() {
    let r = ring(&["x", "y"]);
    let c = intersect(&ideal(&r, "x"), &ideal(&r, "y")).unwrap();
    assert!(submodule_equal(&c, &ideal(&r, "x*y")));
}

#[test]
fn lift_recombines() {
    let r = ring(&["x", "y", "z"]);
    let f = BaseRing::polynomial(r.clone()).unit_module();
    let gens: Vec<ModuleVector> = ["x*y - z^2", "y^2 - x*z"].iter().map(|s| vec_of(&r, &[s])).collect();
    let target = vec_of(&r, &["x^2*y - x*z^2 + y^3 - x*y*z"]);
    let c = lift_witness(&target, &f, &gens).unwrap();
    let back = ModuleVector::combination(&r, 1, &c, &gens);
    assert_eq!(back, target);
    let outside = vec_of(&r, &["x"]);
    assert_eq!(lift_witness(&outside, &f, &gens), Err(crate::Error::NotInModule));
}

#[test]
fn koszul_syzygy_of_two_variables() {
    let r = ring(&["x", "y"]);
    let f = BaseRing::polynomial(r.clone()).unit_module();
    let gens = vec![vec_of(&r, &["x"]), vec_of(&r, &["y"])];
    let (src, syz) = syzygies(&f, &gens).unwrap();
    assert_eq!(src.degrees(), &[1, 1]);
    assert_eq!(syz.len(), 1);
    let s = &syz[0];
    let sum = &(&s.coords[0] * &gens[0].coords[0]) + &(&s.coords[1] * &gens[1].coords[0]);
    assert!(sum.is_zero());
    assert!(s.coords[0].homogeneous_degree() == crate::poly::Homogeneity::Degree(1));
}

#[test]
fn module_membership_in_rank_two() {
    let r = ring(&["x", "y"]);
    let f = BaseRing::polynomial(r.clone()).free_module(vec![0, 0]);
    let m = Submodule::new(&f, vec![vec_of(&r, &["x", "y"]), vec_of(&r, &["y", "0"])]).unwrap();
    assert!(m.contains(&vec_of(&r, &["x*y", "y^2"])));
    assert!(m.contains(&vec_of(&r, &["x^2", "x*y"])));
    assert!(m.contains(&vec_of(&r, &["0", "y^2"])));
    assert!(!m.contains(&vec_of(&r, &["0", "y"])));
}

#[test]
fn term_over_position_agrees_with_position_over_term() {
    let r = ring(&["x", "y", "z"]);
    let base = BaseRing::polynomial(r.clone());
    let gens = vec![
        vec_of(&r, &["x", "y", "0"]),
        vec_of(&r, &["0", "z", "x"]),
        vec_of(&r, &["y", "0", "z"]),
    ];
    let pot = Submodule::new(&base.free_module(vec![0, 0, 0]), gens.clone()).unwrap();
    let top = Submodule::new(
        &base
            .free_module(vec![0, 0, 0])
            .with_order(ModuleOrder::TermOverPosition),
        gens,
    )
    .unwrap();
    for g in top.basis() {
        assert!(pot.contains(g));
    }
    for g in pot.basis() {
        assert!(top.contains(g));
    }
}

#[test]
fn quotient_ring_membership() {
    let r = ring(&["x", "y"]);
    let spec = QuotientRingSpec::new(vec![parse_polynomial("x*y", &r).unwrap()]).unwrap();
    let base = BaseRing::quotient(r.clone(), spec);
    let f = base.unit_module();
    let m = Submodule::ideal(&f, &[parse_polynomial("x^2", &r).unwrap()]).unwrap();
    assert!(m.contains(&vec_of(&r, &["x^2 + x*y"])));
    assert!(!m.contains(&vec_of(&r, &["x"])));
    // (x^2) : y = (x) in k[x,y]/(xy)
    let c = colon(&m, &[parse_polynomial("y", &r).unwrap()]).unwrap();
    assert!(c.contains(&vec_of(&r, &["x"])));
    assert!(!c.contains(&vec_of(&r, &["y"])));
}

#[test]
fn prime_field_basis() {
    let r = PolyRing::standard(Field::prime(7).unwrap(), &["x", "y"]).unwrap();
    let m = ideal(&r, "3*x^2 + y^2, x*y");
    assert!(m.contains(&vec_of(&r, &["y^3"])));
    let p: Polynomial = parse_polynomial("x^3", &r).unwrap();
    assert!(m.contains(&ModuleVector::new(vec![p])));
}
