mod common;

use std::collections::BTreeSet;

use common::*;
use latfree::mlfb::{canonicalize, translate_body, translation_between};
use latfree::{compute_mlfb, compute_test_set, Body, Geometry, IntMat, IntVec, SimplicialData, DEFAULT_BUDGET};
use num_bigint::BigInt;
use rand::Rng;

fn nongen() -> SimplicialData {
    SimplicialData::from_matrix(IntMat::from_rows(&[&[-1, 2], &[1, -3], &[2, -1]])).unwrap()
}

#[test]
fn nongeneric_matrix_has_the_expected_orbit() {
    let data = nongen();
    let (_, _, result) = compute_mlfb(&data, DEFAULT_BUDGET).unwrap();
    let target = IntVec::from_i64s(&[0, 1, 5]);
    assert!(result.bodies.iter().any(|b| translation_between(&data, &b.b, &target).is_some()));
    let g = Geometry::new(&data, DEFAULT_BUDGET);
    assert!(g.is_maximal(&target).unwrap());
}

#[test]
fn emitted_bodies_are_certified() {
    let mut r = rng(21);
    let mut instances: Vec<SimplicialData> = vec![nongen(), kernel_data(&[12, 13, 17]), kernel_data(&[6, 10, 15])];
    for n in [3, 4, 4, 5] {
        instances.push(kernel_data(&coprime_tuple(&mut r, n, 60)));
    }
    for data in instances {
        let (_, _, result) = compute_mlfb(&data, DEFAULT_BUDGET).unwrap();
        let g = Geometry::new(&data, DEFAULT_BUDGET);
        assert!(!result.bodies.is_empty());
        for (body, witnesses) in result.bodies.iter().zip(&result.witnesses) {
            assert!(g.is_lattice_free(&body.b).unwrap());
            assert_eq!(witnesses.len(), data.dim() + 1);
            for (i, x) in witnesses.iter().enumerate() {
                let image = data.image(x);
                assert_eq!(image[i], body.b[i]);
                assert!((0..=data.dim()).filter(|&j| j != i).all(|j| image[j] < body.b[j]));
            }
            assert_eq!(latfree::body_rhs(data.matrix(), &body.gens).unwrap(), body.b);
        }
        // Distinct canonical bodies are never translates of each other.
        for (i, p) in result.bodies.iter().enumerate() {
            for q in &result.bodies[i + 1..] {
                assert!(translation_between(&data, &p.b, &q.b).is_none());
            }
        }
    }
}

#[test]
fn canonical_form_is_translation_invariant() {
    let mut r = rng(22);
    for a in [vec![12, 13, 17], vec![6, 10, 15], coprime_tuple(&mut r, 4, 50)] {
        let data = kernel_data(&a);
        let (tests, _, result) = compute_mlfb(&data, DEFAULT_BUDGET).unwrap();
        let g = Geometry::new(&data, DEFAULT_BUDGET);
        for body in &result.bodies {
            assert_eq!(&canonicalize(&g, &tests, body).unwrap(), body);
            for _ in 0..20 {
                let z: IntVec = (0..data.dim()).map(|_| BigInt::from(r.gen_range(-30..=30))).collect();
                let moved = Body { b: translate_body(&data, &body.b, &z).unwrap(), gens: Vec::new() };
                assert_eq!(canonicalize(&g, &tests, &moved).unwrap().b, body.b);
            }
        }
    }
}

/// Every maximal lattice-free `K_b` with `b₀ = 0` in a box, reduced to
/// canonical form.
fn box_search(data: &SimplicialData, bound: i64) -> BTreeSet<IntVec> {
    let g = Geometry::new(data, DEFAULT_BUDGET);
    let tests = compute_test_set(data);
    let mut found = BTreeSet::new();
    for b1 in 1..=bound {
        for b2 in 1..=bound {
            let b = IntVec::from_i64s(&[0, b1, b2]);
            if g.is_maximal(&b).unwrap() {
                let canon = canonicalize(&g, &tests, &Body { b, gens: Vec::new() }).unwrap();
                found.insert(canon.b);
            }
        }
    }
    found
}

#[test]
fn enumeration_is_complete_in_the_plane() {
    let mut r = rng(23);
    let mut instances = vec![nongen(), kernel_data(&[12, 13, 17])];
    for _ in 0..4 {
        instances.push(kernel_data(&coprime_tuple(&mut r, 3, 12)));
    }
    for data in instances {
        let (_, _, result) = compute_mlfb(&data, DEFAULT_BUDGET).unwrap();
        let emitted: BTreeSet<IntVec> = result.bodies.iter().map(|b| b.b.clone()).collect();
        let top = emitted.iter().flat_map(|b| b.iter().cloned()).max().unwrap();
        let bound = i64::try_from(top).unwrap() * 2 + 2;
        assert_eq!(box_search(&data, bound), emitted, "matrix\n{}", data.matrix());
    }
}
