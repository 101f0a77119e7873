mod common;

use b3quot::linalg::{algebra_closure, intertwiners};
use b3quot::reps::{build_unchecked, enumerate_irreps, esym, table6, transpose_parameters};
use b3quot::spectral::{a_and_b, central_value, check_det_constraint, check_traces, expected_central};
use b3quot::{build_rep, Error, FieldContext, FieldElement, Matrix, ParameterSet, Polynomial, RepSpec, Representation};
use common::{params, q, random_spec};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn generator_charpoly(rep: &Representation) -> Polynomial {
    rep.spec
        .params
        .values()
        .iter()
        .zip(&rep.multiplicities)
        .fold(Polynomial::one(rep.context()), |acc, (x, &m)| {
            &acc * &Polynomial::linear(x).pow(m as u32)
        })
}

/// Checks computed straight from the matrices.
fn check_by_hand(rep: &Representation) {
    let (g1, g2) = (&rep.g1, &rep.g2);
    assert_eq!(&(g1 * g2) * g1, &(g2 * g1) * g2, "{}", rep.label());
    let chi = generator_charpoly(rep);
    assert_eq!(g1.charpoly().unwrap(), chi);
    assert_eq!(g2.charpoly().unwrap(), chi);
    assert!(g2.eval_poly(&rep.spec.params.minimal_polynomial()).is_zero());
    let a = g1 * g2;
    let c = a.pow(3);
    let scalar = c.as_scalar().expect("(g1 g2)^3 is scalar");
    assert_eq!((&a * g1).pow(2), c);
    // det(A)^3 = det(C) = C^d, and det g1 = det g2 = ∏ x^m
    let det_g = g1.det().unwrap();
    assert_eq!(det_g.pow(6), scalar.pow(rep.dim() as u32));
}

#[test]
fn small_dimensions_by_hand() {
    let ctx = FieldContext::rationals();
    let r1 = build_rep(&RepSpec::new(1, params(&["3"]))).unwrap();
    assert_eq!(r1.g1, Matrix::from_ints(&ctx, &[&[3]]));
    assert_eq!(central_value(&r1).unwrap(), q("729"));

    let r2 = build_rep(&RepSpec::new(2, params(&["1", "2"]))).unwrap();
    assert_eq!(central_value(&r2).unwrap(), q("-8"));
    let (a, b) = a_and_b(&r2);
    assert_eq!(a.trace(), q("2"));
    assert_eq!(b.trace(), q("0"));

    let r3 = build_rep(&RepSpec::new(3, params(&["1", "2", "3"]))).unwrap();
    assert_eq!(central_value(&r3).unwrap(), q("36"));
    let (a, b) = a_and_b(&r3);
    assert!(a.trace().is_zero());
    assert_eq!(b.trace(), q("-6"));
}

#[test]
fn square_root_family() {
    // e4 = 1·2·3·6 = 36
    let x = params(&["1", "2", "3", "6"]);
    for h in ["6", "-6"] {
        let rep = build_rep(&RepSpec::new(4, x.clone()).with_h(q(h))).unwrap();
        check_by_hand(&rep);
        assert_eq!(central_value(&rep).unwrap(), q(h).pow(3));
        assert!(check_traces(&rep).unwrap().all_ok);
    }
    let err = build_rep(&RepSpec::new(4, x.clone()).with_h(q("5"))).unwrap_err();
    assert!(matches!(err, Error::MissingRoot(_)));
    assert!(matches!(
        build_rep(&RepSpec::new(4, x)).unwrap_err(),
        Error::MissingRoot(_)
    ));
}

#[test]
fn fifth_root_family_over_zeta5() {
    let ctx = FieldContext::zeta5();
    // e5 = 1·2·4·8·(1/2) = 32
    let x = ParameterSet::new(
        ["1", "2", "4", "8", "1/2"]
            .iter()
            .map(|s| FieldElement::parse(&ctx, s).unwrap())
            .collect(),
    )
    .unwrap();
    let e = enumerate_irreps(&x, &[]).unwrap();
    let dim5: Vec<_> = e.reps.iter().filter(|r| r.rep.dim() == 5).collect();
    assert_eq!(dim5.len(), 5);
    for r in dim5 {
        check_by_hand(&r.rep);
        let f = r.rep.spec.roots.f.clone().unwrap();
        assert_eq!(central_value(&r.rep).unwrap(), f.pow(6));
        assert!(check_traces(&r.rep).unwrap().all_ok);
    }
}

#[test]
fn six_dimensional_variants() {
    let x = params(&["1", "2", "3", "5", "7"]);
    let mut reps = Vec::new();
    for i in 1..=5 {
        let rep = build_rep(&RepSpec::new(6, x.clone()).with_variant(i)).unwrap();
        check_by_hand(&rep);
        assert_eq!(rep.multiplicities.iter().sum::<usize>(), 6);
        assert_eq!(rep.multiplicities[i - 1], 2);
        let c = -(x.values()[i - 1].clone() * esym(x.values(), 5));
        assert_eq!(central_value(&rep).unwrap(), c);
        assert!(check_traces(&rep).unwrap().all_ok);
        reps.push(rep);
    }
    for i in 0..5 {
        for j in i + 1..5 {
            let t = intertwiners(&reps[i].generators(), &reps[j].generators()).unwrap();
            assert!(t.is_empty(), "variants {} and {} are equivalent", i + 1, j + 1);
        }
    }
}

#[test]
fn table_helpers_are_symmetric_where_expected() {
    let x = params(&["2", "3", "5", "7", "11"]);
    let v: Vec<FieldElement> = x.values().to_vec();
    let arr: [FieldElement; 5] = v.try_into().unwrap();
    // delta_without(x, k, m) only depends on the set, not on the order of the others
    let swapped = {
        let mut s = arr.clone();
        s.swap(0, 1);
        s
    };
    assert_eq!(table6::delta_without(&arr, 3, 5), table6::delta_without(&swapped, 3, 5));
}

#[test]
fn relabelling_gives_an_equivalent_rep() {
    let rep = build_rep(&RepSpec::new(3, params(&["1", "2", "3"]))).unwrap();
    let t = transpose_parameters(&rep, 1, 3).unwrap();
    assert_eq!(intertwiners(&rep.generators(), &t.generators()).unwrap().len(), 1);
    let rep6 = build_rep(&RepSpec::new(6, params(&["1", "2", "3", "5", "7"])).with_variant(2)).unwrap();
    let t6 = transpose_parameters(&rep6, 2, 4).unwrap();
    assert_eq!(t6.spec.params.values()[3], q("2"));
    check_by_hand(&t6);
}

#[test]
fn bad_specs() {
    let err = ParameterSet::parse_rationals(&["1", "2", "3", "4", "5", "6"]).unwrap_err();
    assert!(err.to_string().contains("finite-dimensional only for |X| <= 5"));
    assert!(matches!(
        ParameterSet::parse_rationals(&["1", "1"]),
        Err(Error::BadParameters(_))
    ));
    assert!(matches!(
        ParameterSet::parse_rationals(&["0"]),
        Err(Error::BadParameters(_))
    ));
    assert!(matches!(
        build_rep(&RepSpec::new(3, params(&["1", "2"]))),
        Err(Error::BadSpec(_))
    ));
    assert!(matches!(
        build_rep(&RepSpec::new(6, params(&["1", "2", "3", "4", "5"]))),
        Err(Error::BadSpec(_))
    ));
    assert!(matches!(
        build_rep(&RepSpec::new(7, params(&["1"]))),
        Err(Error::BadSpec(_))
    ));
}

#[test]
fn enumeration_over_the_rationals_defers_missing_roots() {
    let x = params(&["1", "2", "3", "5"]);
    let e = enumerate_irreps(&x, &[]).unwrap();
    // 4 + 6 + 4 reps of dimension 1..3, none of dimension 4 since 30 is not a square
    assert_eq!(e.reps.len(), 14);
    assert_eq!(e.deferred.len(), 1);
    assert_eq!(e.deferred[0].missing, 2);
    assert_eq!(e.deferred[0].required_modulus, "t^2 - 30");
}

#[test]
fn random_reps_satisfy_every_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for dim in 1..=6 {
        for _ in 0..8 {
            let spec = random_spec(&mut rng, dim);
            let rep = build_unchecked(&spec).unwrap();
            check_by_hand(&rep);
            assert!(check_det_constraint(&rep).unwrap());
            assert_eq!(central_value(&rep).unwrap(), expected_central(&spec).unwrap());
            let report = check_traces(&rep).unwrap();
            assert!(report.all_ok, "{}: {:?}", rep.label(), report.failures());
        }
    }
}

#[test]
fn generic_reps_generate_the_full_matrix_algebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for dim in 1..=6 {
        let rep = build_rep(&random_spec(&mut rng, dim)).unwrap();
        assert_eq!(
            algebra_closure(&rep.generators()).unwrap().dimension,
            dim * dim,
            "{}",
            rep.label()
        );
    }
}
