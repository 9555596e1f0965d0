//! Cross-module operation checks on the presets: hom spaces, lifts,
//! quotient comodules, invariance witnesses and the tensor-form of the
//! extended isomorphism.

use coact::comodule::{
    comodule_hom_space, counit_map, ideal_invariant, quotient_comodule, splitting_alg_iso,
    tilde_lift, ComoduleAlgebra, Over,
};
use coact::f2poly::{GeneratorId, Monomial, Poly};
use coact::steenrod::QuotientHopf;
use coact::{presets, targets};

fn zeta(i: u32) -> Poly {
    Poly::generator(GeneratorId::zeta(i))
}

#[test]
fn hom_spaces_into_the_trivial_comodule() {
    let a0 = QuotientHopf::a_n(0);
    let trivial = ComoduleAlgebra::trivial(Over::Quotient(a0.clone()));
    // the three-cell comodule admits only the counit
    let hz = presets::build("HZ-skel3").unwrap();
    let hom = comodule_hom_space(&hz, &trivial, &a0, 3).unwrap();
    assert_eq!(hom.total_dim, 1);
    assert_eq!(hom.per_degree.get(&0), Some(&1));
    // the identity is counted on the trivial comodule itself
    let f2 = ComoduleAlgebra::trivial(Over::Quotient(a0.clone()));
    let hom = comodule_hom_space(&f2, &trivial, &a0, 3).unwrap();
    assert_eq!(hom.total_dim, 1);
}

#[test]
fn augmentation_lift_picks_out_the_orientation_images() {
    // the lift of the counit sends each basis element x with
    // psi x = a | 1 + ... + 1 | x to a | 1
    let a0 = QuotientHopf::a_n(0);
    let trivial = ComoduleAlgebra::trivial(Over::Quotient(a0.clone()));
    let hz = presets::build("HZ-skel3").unwrap();
    let lift = tilde_lift(&counit_map(), &hz, &trivial, &a0, 3).unwrap();
    let image = |n: u32| {
        lift.image_poly(&Monomial::generator(GeneratorId::cell(n)))
            .unwrap()
    };
    assert_eq!(image(2), zeta(1).pow(2));
    assert_eq!(image(3), zeta(2));
}

#[test]
fn invariance_of_the_first_ideal_depends_on_the_coalgebra() {
    let mj1 = presets::build("Mj1").unwrap();
    let ideal = presets::ideal("1", 6).unwrap();
    // invariant over the induced quotient coaction
    let ok = ideal_invariant(&mj1, &ideal, Some(&QuotientHopf::a_n(0)), 6, None).unwrap();
    assert!(ok.passed(), "{ok}");
    // but not over the full coalgebra: the coaction of the degree-7
    // generator keeps the term z3 | 1
    let bad = ideal_invariant(&mj1, &ideal, None, 6, None).unwrap();
    assert!(!bad.passed());
    let degree7 = bad
        .checks
        .iter()
        .find(|c| c.label.contains("degree 7"))
        .expect("the degree-7 generator is checked");
    assert!(!degree7.passed);
    let witness = degree7.witness.clone().unwrap_or_default();
    assert!(witness.contains("z3 | 1"), "{witness}");
}

#[test]
fn quotient_comodules_satisfy_the_axioms() {
    let mj1 = presets::build("Mj1").unwrap();
    let a0 = QuotientHopf::a_n(0);
    let ideal = presets::ideal("1", 6).unwrap();
    let quot = quotient_comodule(&mj1, &ideal, &a0, 8).unwrap();
    let report = coact::comodule::check_comodule_axioms(&quot, 8).unwrap();
    assert!(report.passed(), "{report}");
    // dimensions match the series of the non-leading generators
    assert_eq!(quot.basis_of_degree(5).len(), 1); // Q[3](x[2])
    assert_eq!(quot.basis_of_degree(7).len(), 1); // Q[5](x[2]) = class of Q[4](x[3])
}

#[test]
fn tensor_form_of_the_extended_comodule() {
    let a0 = QuotientHopf::a_n(0);
    // the trivial coefficient comodule gives the identity picture
    let f2 = ComoduleAlgebra::trivial(Over::Quotient(a0.clone()));
    let report = splitting_alg_iso(&f2, &a0, 8).unwrap();
    assert!(report.passed(), "{report}");
    // the quotient of the first Thom algebra, truncated to degree 8
    let mj1 = presets::build("Mj1").unwrap();
    let ideal = presets::ideal("1", 6).unwrap();
    let quot = quotient_comodule(&mj1, &ideal, &a0, 8).unwrap();
    let report = splitting_alg_iso(&quot, &a0, 8).unwrap();
    assert!(report.passed(), "{report}");
}

#[test]
fn rinf_target_passes() {
    let report = targets::run("rinf", &targets::TargetOpts::default()).unwrap();
    assert!(report.passed(), "{report}");
}

#[test]
fn mjc_skel7_passes_the_axioms() {
    let alg = presets::build("Mjc-skel7").unwrap();
    let report = coact::comodule::check_comodule_axioms(&alg, 7).unwrap();
    assert!(report.passed(), "{report}");
    let degrees: Vec<u32> = alg.finite_elems().iter().map(|(m, _)| m.degree()).collect();
    assert_eq!(degrees, vec![2, 4, 6, 7]);
}

#[test]
fn user_supplied_comodule_files_load() {
    // a custom comodule in the JSON schema, checked through the engine
    let dir = std::env::temp_dir().join("coact-ops-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("two-cell.json");
    std::fs::write(
        &path,
        r#"{
            "name": "two-cell",
            "over": "A",
            "kind": "finite",
            "cells": [
                { "gen": "x[2]", "degree": 2, "rcoaction": "x[2] | 1 + 1 | z1^2" },
                { "gen": "x[3]", "degree": 3, "rcoaction": "x[3] | 1 + x[2] | z1 + 1 | xi2" }
            ],
            "ideal": [],
            "orientation": []
        }"#,
    )
    .unwrap();
    let alg = presets::build(path.to_str().unwrap()).unwrap();
    let report = coact::comodule::check_comodule_axioms(&alg, 3).unwrap();
    assert!(report.passed(), "{report}");
}
