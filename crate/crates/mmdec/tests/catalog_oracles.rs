//! The catalog against the expansion oracle, plus the structural claims
//! about each named decomposition.

use mmdec::catalog::{
    self, named_decomposition, normalize_triple, projective_strassen, AnyDecomposition,
    OmegaConvention, PointTriple,
};
use mmdec::sampling;
use mmdec::scalar::{int, rat, Cyclotomic12, Field, Rational};
use mmdec::symmetry::SymmetryElement;
use mmdec::tensor::{matmul_tensor, z3_bracket, Decomposition};
use mmdec::Error;
use num_traits::Zero;

fn classical() -> Decomposition<Rational> {
    catalog::strassen_classical()
}

#[test]
fn every_named_decomposition_verifies_exactly() {
    for name in catalog::DECOMPOSITION_NAMES {
        let report = match named_decomposition(name).unwrap() {
            AnyDecomposition::Rational(d) => d.verify_equals_matmul().ok,
            AnyDecomposition::Cyclotomic(d) => d.verify_equals_matmul().ok,
        };
        assert!(report, "{name} must expand to the matrix multiplication tensor");
    }
}

#[test]
fn named_term_counts() {
    assert_eq!(named_decomposition("strassen-classical").unwrap().len(), 7);
    assert_eq!(named_decomposition("standard-2").unwrap().len(), 8);
    assert_eq!(named_decomposition("standard-3").unwrap().len(), 27);
    assert_eq!(named_decomposition("strassen-omega").unwrap().len(), 7);
}

#[test]
fn unknown_names_are_rejected() {
    assert!(matches!(
        named_decomposition("strassen-unknown"),
        Err(Error::UnknownName(_))
    ));
    assert!(matches!(
        named_decomposition("standard-0"),
        Err(Error::UnknownName(_))
    ));
    assert!(matches!(
        catalog::builtin_group::<Rational>("celestial", None),
        Err(Error::UnknownName(_))
    ));
}

#[test]
fn classical_with_a_deleted_term_reports_a_mismatch() {
    let full = classical();
    let truncated = Decomposition::new(2, full.terms()[..6].to_vec()).unwrap();
    let report = truncated.verify_equals_matmul();
    assert!(!report.ok);
    assert!(report.mismatch.is_some());
}

#[test]
fn bracket_of_the_displayed_seed_reproduces_the_display_triples() {
    let full = classical();
    // terms 1..4 are one bracket orbit, terms 4..7 the other
    let first = Decomposition::new(2, z3_bracket(&full.terms()[1]).to_vec()).unwrap();
    let display_first = Decomposition::new(2, full.terms()[1..4].to_vec()).unwrap();
    assert!(first.set_equal(&display_first).unwrap());
    let second = Decomposition::new(2, z3_bracket(&full.terms()[4]).to_vec()).unwrap();
    let display_second = Decomposition::new(2, full.terms()[4..7].to_vec()).unwrap();
    assert!(second.set_equal(&display_second).unwrap());
}

#[test]
fn classical_rank_partition_is_one_full_rank_and_six_rank_one() {
    let part = classical().rank_triple_partition();
    assert_eq!(part.classes.len(), 2);
    assert_eq!(part.classes[&[2, 2, 2]], vec![0]);
    assert_eq!(part.classes[&[1, 1, 1]], vec![1, 2, 3, 4, 5, 6]);
}

#[test]
fn basis_changed_nilpotent_factors_are_exactly_the_bracket_matrices() {
    let dec = catalog::strassen_basis_changed::<Rational>();
    let part = dec.rank_triple_partition();
    for (i, flags) in part.nilpotent.iter().enumerate() {
        let expected = i >= 4; // the bracket orbit occupies terms 4..7
        assert!(
            flags.iter().all(|&f| f == expected),
            "term {i} nilpotency flags {flags:?}"
        );
    }
}

#[test]
fn classical_point_configuration_has_three_points_per_line() {
    let config = classical().point_configuration();
    for (name, set) in [
        ("U", &config.u),
        ("U*", &config.u_star),
        ("V", &config.v),
        ("V*", &config.v_star),
        ("W", &config.w),
        ("W*", &config.w_star),
    ] {
        assert_eq!(set.len(), 3, "expected three distinct points on {name}");
    }
}

#[test]
fn projective_point_configuration_is_the_marked_triple() {
    let dec = catalog::strassen_projective::<Rational>();
    let config = dec.point_configuration();
    // the canonical points e1, e2, -(e1+e2), projectively normalized
    let mut expected = vec![
        vec![int(1), int(0)],
        vec![int(0), int(1)],
        vec![int(1), int(1)],
    ];
    expected.sort();
    assert_eq!(config.u, expected);
    assert_eq!(config.v, expected);
    assert_eq!(config.w, expected);
}

#[test]
fn basis_change_triple_carries_classical_to_basis_changed() {
    let g = SymmetryElement::pure_linear(catalog::basis_change_triple::<Rational>());
    let moved = g.apply_decomposition(&classical());
    let target = catalog::strassen_basis_changed::<Rational>();
    assert!(moved.verify_equals_matmul().ok);
    assert!(moved.set_equal(&target).unwrap());
}

#[test]
fn classical_and_basis_changed_are_distinct_sets_that_both_verify() {
    let a = classical();
    let b = catalog::strassen_basis_changed::<Rational>();
    assert!(a.verify_equals_matmul().ok);
    assert!(b.verify_equals_matmul().ok);
    assert!(!a.set_equal(&b).unwrap());
}

#[test]
fn hatted_correspondence_maps_basis_changed_to_straxx_term_by_term() {
    let basis_changed = catalog::strassen_basis_changed::<Rational>();
    let straxx = catalog::strassen_straxx::<Rational>();
    assert_eq!(basis_changed.len(), straxx.len());
    for (i, (a, b)) in basis_changed.terms().iter().zip(straxx.terms()).enumerate() {
        assert_eq!(a.tensor(), b.tensor(), "term {i} disagrees");
    }
}

#[test]
fn standard_z3_fixes_exactly_four_basis_changed_terms() {
    let dec = catalog::strassen_basis_changed::<Rational>();
    let rot = SymmetryElement::<Rational>::pure_rotation(2, 1);
    let fixed = dec
        .terms()
        .iter()
        .filter(|t| rot.apply_term(t).canonicalize().unwrap() == t.canonicalize().unwrap())
        .count();
    assert_eq!(fixed, 4);
}

#[test]
fn diagonal_z3_fixes_the_head_and_cycles_the_cubes() {
    let dec = catalog::strassen_basis_changed::<Rational>();
    let g = catalog::diagonal_z3_element::<Rational>();
    let image_index = |i: usize| -> usize {
        let image = g.apply_term(&dec.terms()[i]).canonicalize().unwrap();
        dec.terms()
            .iter()
            .position(|t| t.canonicalize().unwrap() == image)
            .expect("the image must be a term of the decomposition")
    };
    assert_eq!(image_index(0), 0);
    assert_eq!(image_index(1), 3); // strbx -> strbx3
    assert_eq!(image_index(3), 2); // strbx3 -> strbx2
    assert_eq!(image_index(2), 1); // strbx2 -> strbx
}

#[test]
fn omega_form_default_convention_verifies_and_the_other_does_not() {
    let good = catalog::strassen_omega(catalog::default_omega_convention());
    assert!(good.verify_equals_matmul().ok);
    assert_eq!(catalog::default_omega_convention(), OmegaConvention::ExpMinus);
    let bad = catalog::strassen_omega(OmegaConvention::ExpPlus);
    assert!(!bad.verify_equals_matmul().ok);
}

#[test]
fn omega_form_generators_sum_to_zero() {
    let (a, b, c) = catalog::omega_form_matrices(catalog::default_omega_convention());
    assert!(a.add(&b).add(&c).is_zero());
}

#[test]
fn rational_decomposition_embeds_into_the_cyclotomic_field() {
    let embedded = classical().map_field(&Cyclotomic12::from_rational);
    assert!(embedded.verify_equals_matmul().ok);
}

#[test]
fn normalize_triple_keeps_an_already_normalized_triple() {
    let t = normalize_triple::<Rational>(
        &[int(1), int(0)],
        &[int(0), int(1)],
        &[int(-1), int(-1)],
    )
    .unwrap();
    assert_eq!(t.points()[0], vec![int(1), int(0)]);
    assert_eq!(t.points()[1], vec![int(0), int(1)]);
    assert_eq!(t.points()[2], vec![int(-1), int(-1)]);
}

#[test]
fn normalize_triple_rescales_to_the_zero_sum_relation() {
    let t = normalize_triple::<Rational>(
        &[int(1), int(0)],
        &[int(0), int(1)],
        &[int(1), int(1)],
    )
    .unwrap();
    assert_eq!(t.points()[1], vec![int(0), int(1)]);
    assert_eq!(t.points()[2], vec![int(-1), int(-1)]);
    // zero sum
    for coord in 0..2 {
        let sum = t.points()[0][coord].clone()
            + t.points()[1][coord].clone()
            + t.points()[2][coord].clone();
        assert!(sum.is_zero());
    }
}

#[test]
fn normalize_triple_duals_satisfy_all_pairing_conditions() {
    let mut rng = sampling::rng_from_seed(2024);
    for _ in 0..20 {
        let t: PointTriple<Rational> = sampling::random_point_triple(&mut rng);
        for j in 0..3 {
            let pair = |dual: &[Rational], point: &[Rational]| -> Rational {
                dual[0].clone() * point[0].clone() + dual[1].clone() * point[1].clone()
            };
            assert!(pair(&t.duals()[j], &t.points()[j]).is_zero());
            assert_eq!(pair(&t.duals()[j], &t.points()[(j + 2) % 3]), int(1));
            assert_eq!(pair(&t.duals()[j], &t.points()[(j + 1) % 3]), int(-1));
        }
    }
}

#[test]
fn normalize_triple_rejects_coincident_points() {
    let result = normalize_triple::<Rational>(
        &[int(1), int(0)],
        &[int(2), int(0)],
        &[int(0), int(1)],
    );
    assert!(matches!(result, Err(Error::DegenerateConfiguration(_))));
}

#[test]
fn canonical_iso_is_independent_of_the_defining_index() {
    // a0 = v_j (x) u^{(j+1)perp} - v_{j+1} (x) u^{j perp} must not depend
    // on j; check by evaluating the three forms as maps on a random triple.
    let mut rng = sampling::rng_from_seed(99);
    for _ in 0..10 {
        let t: PointTriple<Rational> = sampling::random_point_triple(&mut rng);
        let build = |j: usize| {
            let p = t.points();
            let d = t.duals();
            let mut mat = vec![vec![Rational::zero(); 2]; 2];
            // Hom-convention matrix: column c gets sum of point * dual[c].
            for (r, row) in mat.iter_mut().enumerate() {
                for (c, entry) in row.iter_mut().enumerate() {
                    *entry = p[j][r].clone() * d[(j + 1) % 3][c].clone()
                        - p[(j + 1) % 3][r].clone() * d[j][c].clone();
                }
            }
            mat
        };
        let m0 = build(0);
        assert_eq!(m0, build(1));
        assert_eq!(m0, build(2));
        // and it maps each source point to the matching target point
        for i in 0..3 {
            let p = &t.points()[i];
            let image = [
                m0[0][0].clone() * p[0].clone() + m0[0][1].clone() * p[1].clone(),
                m0[1][0].clone() * p[0].clone() + m0[1][1].clone() * p[1].clone(),
            ];
            assert_eq!(image.to_vec(), *p);
        }
    }
}

#[test]
fn projective_strassen_canonical_matches_the_named_form() {
    let t: PointTriple<Rational> = PointTriple::canonical();
    let built = projective_strassen(&t, &t, &t);
    let named = catalog::strassen_projective::<Rational>();
    assert!(built.set_equal(&named).unwrap());
}

#[test]
fn projective_family_verifies_on_random_triples() {
    let mut rng = sampling::rng_from_seed(7);
    for _ in 0..25 {
        let tu = sampling::random_point_triple::<Rational>(&mut rng);
        let tv = sampling::random_point_triple::<Rational>(&mut rng);
        let tw = sampling::random_point_triple::<Rational>(&mut rng);
        let dec = projective_strassen(&tu, &tv, &tw);
        assert_eq!(dec.len(), 7);
        assert!(dec.verify_equals_matmul().ok);
    }
}

#[test]
fn projective_strassen_is_invariant_under_representative_rescaling() {
    let mut rng = sampling::rng_from_seed(8);
    let tu = sampling::random_point_triple::<Rational>(&mut rng);
    let tv = sampling::random_point_triple::<Rational>(&mut rng);
    let tw = sampling::random_point_triple::<Rational>(&mut rng);
    let base = projective_strassen(&tu, &tv, &tw);
    let five = rat(5, 1);
    let minus_third = rat(-1, 3);
    let rescaled = projective_strassen(
        &tu.rescaled(&five).unwrap(),
        &tv.rescaled(&minus_third).unwrap(),
        &tw,
    );
    assert!(base.set_equal(&rescaled).unwrap());
}

#[test]
fn builtin_group_orders() {
    assert_eq!(catalog::builtin_group::<Rational>("trivial", None).unwrap().order(), 1);
    assert_eq!(catalog::builtin_group::<Rational>("standard-z3", None).unwrap().order(), 3);
    assert_eq!(catalog::builtin_group::<Rational>("internal-z2", None).unwrap().order(), 2);
    assert_eq!(catalog::builtin_group::<Rational>("s3-diag", None).unwrap().order(), 6);
    assert_eq!(catalog::builtin_group::<Rational>("s3xz3", None).unwrap().order(), 18);
    assert_eq!(catalog::builtin_group::<Rational>("s3xd3", None).unwrap().order(), 36);
}

#[test]
fn builtin_groups_work_over_the_cyclotomic_field() {
    let group = catalog::builtin_group::<Cyclotomic12>("s3xd3", None).unwrap();
    assert_eq!(group.order(), 36);
    let omega = catalog::strassen_omega(catalog::default_omega_convention());
    // the omega form is another member of the family, so its stabilizer
    // within this particular candidate is computed without error
    let stab = mmdec::symmetry::stabilizer_within(&omega, &group).unwrap();
    assert!(stab.order() >= 1);
}

#[test]
fn s3_diag_permutes_the_marked_points() {
    let group = catalog::builtin_group::<Rational>("s3-diag", None).unwrap();
    let canonical: PointTriple<Rational> = PointTriple::canonical();
    for e in group.elements() {
        // the U-slot matrix maps the point set onto itself projectively
        for p in canonical.points() {
            let g = &e.linear.g_u;
            let image = [g.get(0, 0).clone() * p[0].clone() + g.get(0, 1).clone() * p[1].clone(),
                g.get(1, 0).clone() * p[0].clone() + g.get(1, 1).clone() * p[1].clone()];
            let hit = canonical.points().iter().any(|q| {
                let cross =
                    image[0].clone() * q[1].clone() - image[1].clone() * q[0].clone();
                cross.is_zero()
            });
            assert!(hit, "image of a marked point must be a marked point");
        }
    }
}

#[test]
fn s3xd3_transported_to_random_triples_stabilizes_the_matching_form() {
    let mut rng = sampling::rng_from_seed(2718);
    let triples = [
        sampling::random_point_triple::<Rational>(&mut rng),
        sampling::random_point_triple::<Rational>(&mut rng),
        sampling::random_point_triple::<Rational>(&mut rng),
    ];
    let group = catalog::s3xd3(&triples).unwrap();
    assert_eq!(group.order(), 36);
    let dec = projective_strassen(&triples[0], &triples[1], &triples[2]);
    let stab = mmdec::symmetry::stabilizer_within(&dec, &group).unwrap();
    assert_eq!(stab.order(), 36);
}

#[test]
fn standard_algorithm_verifies_for_small_n() {
    for n in 1..=3 {
        let dec = catalog::standard_algorithm::<Rational>(n);
        assert_eq!(dec.len(), n * n * n);
        assert!(dec.verify_equals_matmul().ok);
        assert_eq!(dec.expand(), matmul_tensor::<Rational>(n));
    }
}
