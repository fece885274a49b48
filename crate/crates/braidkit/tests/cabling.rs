//! Cable structures: block embeddings, the 0-twist cabling, semidirect
//! decomposition, crossed vectors, the cabling classifier, divisibility
//! screens, and symmetric-group enumeration.

use braidkit::cable::{
    beta, cable_permutation, classify_cabling, corollary_range_check, crossed_vector, decompose,
    embed_f, interior_writhe, iota, special_constraint, special_constraint_bigint,
    sym_hom_enumerate, tau,
};
use braidkit::hom::{compose_hom, standard_hom, transvect};
use braidkit::{BraidWord, CableStructure, Error, SemidirectElement, StandardKind};
use proptest::prelude::*;

fn word(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.iter().copied()).expect("valid letters")
}

fn pairs(k: usize) -> CableStructure {
    CableStructure::uniform_pairs(k).unwrap()
}

#[test]
fn iota_shifts_into_blocks() {
    let cs = pairs(3);
    let s1 = word(2, &[1]);
    assert_eq!(iota(1, &s1, &cs).unwrap().letters(), &[1]);
    assert_eq!(iota(2, &s1, &cs).unwrap().letters(), &[3]);
    assert_eq!(iota(3, &s1, &cs).unwrap().letters(), &[5]);
    assert!(iota(4, &s1, &cs).is_err());
    assert!(iota(1, &word(3, &[1]), &cs).is_err());
}

#[test]
fn beta_blows_up_strands() {
    let cs = pairs(2);
    assert_eq!(beta(&word(2, &[1]), &cs).unwrap().letters(), &[2, 3, 1, 2]);
    // the inverse letter inverts the block transposition
    let b = beta(&word(2, &[-1]), &cs).unwrap();
    assert!(b
        .compose(&beta(&word(2, &[1]), &cs).unwrap())
        .unwrap()
        .is_trivial()
        .unwrap());
    // unequal cables cannot be swapped
    let uneven = CableStructure::new(vec![2, 3]).unwrap();
    assert!(beta(&word(2, &[1]), &uneven).is_err());
}

#[test]
fn embed_examples() {
    let cs = pairs(2);
    let swap = SemidirectElement::new(word(2, &[1]), vec![BraidWord::identity(2); 2]);
    assert_eq!(embed_f(&swap, &cs).unwrap().letters(), &[2, 3, 1, 2]);

    let first_twist = SemidirectElement::new(
        BraidWord::identity(2),
        vec![word(2, &[1]), BraidWord::identity(2)],
    );
    assert_eq!(embed_f(&first_twist, &cs).unwrap().letters(), &[1]);
}

#[test]
fn semidirect_multiplication_swaps_interiors() {
    // the exterior σ1 swaps the cables, so the interiors cross over
    let cs = pairs(2);
    let s = word(2, &[1]);
    for (a, b, c, d) in [(1i64, 0, 2, -1), (0, 3, 1, 1), (-2, 1, 0, 2)] {
        let twist = |t: i64| word(2, &[1]).pow(t);
        let lhs = embed_f(&SemidirectElement::new(s.clone(), vec![twist(a), twist(b)]), &cs)
            .unwrap()
            .compose(
                &embed_f(&SemidirectElement::new(s.clone(), vec![twist(c), twist(d)]), &cs)
                    .unwrap(),
            )
            .unwrap();
        let rhs = embed_f(
            &SemidirectElement::new(s.pow(2), vec![twist(a + d), twist(b + c)]),
            &cs,
        )
        .unwrap();
        assert!(lhs.equals(&rhs).unwrap(), "({a},{b})*({c},{d})");
    }
}

#[test]
fn interior_writhe_examples() {
    let cs5 = pairs(5);
    for k in -3..=3 {
        let h = standard_hom(StandardKind::KTwistCabling(k), 5).unwrap();
        assert_eq!(
            interior_writhe(&h.images()[0], 1, &cs5).unwrap(),
            i64::from(k)
        );
    }

    let cs2 = pairs(2);
    assert_eq!(
        interior_writhe(&beta(&word(2, &[1]), &cs2).unwrap(), 1, &cs2).unwrap(),
        0
    );
    assert_eq!(interior_writhe(&word(4, &[1, 1, 1]), 1, &cs2).unwrap(), 3);

    // scattered cables are rejected
    assert!(interior_writhe(&word(4, &[2]), 1, &cs2).is_err());
    assert!(cable_permutation(&word(4, &[2]), &cs2).is_err());
}

#[test]
fn crossed_vector_examples() {
    let h2 = standard_hom(StandardKind::KTwistCabling(2), 5).unwrap();
    for i in 1..5usize {
        let d = crossed_vector(&h2, &word(5, &[i as i32])).unwrap();
        let mut expected = vec![0i64; 5];
        expected[i - 1] = 2;
        assert_eq!(d.entries, expected);
    }

    let h0 = standard_hom(StandardKind::KTwistCabling(0), 5).unwrap();
    for g in [word(5, &[1, 2, -3]), word(5, &[4, 4]), word(5, &[-2, 1, 3])] {
        assert_eq!(crossed_vector(&h0, &g).unwrap().entries, vec![0; 5]);
    }

    // transvecting the 0-twist section by τ adds one full twist per cable
    let t = transvect(&h0, &tau(5).unwrap()).unwrap();
    for i in 1..5i32 {
        let d = crossed_vector(&t, &word(5, &[i, i])).unwrap();
        assert_eq!(d.entries, vec![2; 5]);
    }
}

#[test]
fn classifier_examples() {
    let h2 = standard_hom(StandardKind::KTwistCabling(2), 5).unwrap();
    let c = classify_cabling(&h2).unwrap();
    assert_eq!(c.k_canonical, 2);
    assert_eq!(c.conjugator_exponents, vec![0; 5]);
    assert_eq!(c.transvection_exponent, 0);
    assert!(c.certified);

    let h0 = standard_hom(StandardKind::KTwistCabling(0), 5).unwrap();
    let t = transvect(&h0, &tau(5).unwrap()).unwrap();
    let c = classify_cabling(&t).unwrap();
    assert_eq!((c.k_canonical, c.x, c.y), (0, 2, 2));
    assert!(c.certified);

    let h1 = standard_hom(StandardKind::KTwistCabling(1), 5).unwrap();
    let inner = standard_hom(StandardKind::Inner(word(10, &[1])), 10).unwrap();
    let c = classify_cabling(&compose_hom(&inner, &h1).unwrap()).unwrap();
    assert_eq!(c.k_canonical, 1);
    assert!(c.conjugator_exponents.iter().any(|&m| m != 0));
    assert!(c.certified);

    // a non-cabling input is refused
    let incl = standard_hom(StandardKind::Inclusion, 5).unwrap();
    assert!(matches!(
        classify_cabling(&incl),
        Err(Error::NonSection(_)) | Err(Error::Cable(_))
    ));
}

#[test]
fn classification_invariants() {
    for n in [3usize, 4, 5] {
        for k in -3..=3 {
            let h = standard_hom(StandardKind::KTwistCabling(k), n).unwrap();
            let c = classify_cabling(&h).unwrap();
            assert_eq!(c.k_canonical, i64::from(k));
            assert_eq!(c.y - c.x, c.k_canonical);
            assert_eq!(c.x % 2, 0);
            // the stored exponents solve the band recurrence
            for i in 1..n {
                assert_eq!(
                    c.conjugator_exponents[i] - c.conjugator_exponents[i - 1]
                        + c.interior_matrix[i - 1][i]
                        - c.x / 2,
                    0
                );
            }
            assert!(c.certified);
        }
    }
}

#[test]
fn squared_generator_band_pattern() {
    // d(σ_i²) is constant x off the band {i, i+1} and y on it
    let h = standard_hom(StandardKind::KTwistCabling(3), 5).unwrap();
    let with_tau = transvect(&h, &tau(5).unwrap().pow(-1)).unwrap();
    for hom in [&h, &with_tau] {
        let mut x = None;
        let mut y = None;
        for i in 1..5usize {
            let d = crossed_vector(hom, &word(5, &[i as i32, i as i32])).unwrap();
            for (j, &v) in d.entries.iter().enumerate() {
                let slot = if j + 1 == i || j == i { &mut y } else { &mut x };
                match slot {
                    None => *slot = Some(v),
                    Some(seen) => assert_eq!(*seen, v, "at σ_{i}², cable {}", j + 1),
                }
            }
        }
        assert_eq!(
            y.unwrap() - x.unwrap(),
            classify_cabling(hom).unwrap().k_canonical
        );
    }
}

#[test]
fn divisibility_screens() {
    assert!(special_constraint(5, 5));
    assert!(!special_constraint(5, 6));
    assert!(!special_constraint(5, 10));
    assert!(special_constraint(5, 16));
    assert!(special_constraint(1, 7));

    for n in 0..=60u64 {
        for m in 0..=60u64 {
            assert_eq!(
                special_constraint(n, m),
                special_constraint_bigint(n, m),
                "({n}, {m})"
            );
        }
    }

    // outside the applicable range the check is vacuous
    assert!(corollary_range_check(4, 7));
    assert!(corollary_range_check(5, 5));
    assert!(corollary_range_check(5, 11));
    // inside it the divisibility must fail, with three documented
    // arithmetic exceptions below 50
    let mut exceptions = Vec::new();
    for n in 5..=50u64 {
        for m in n + 1..=2 * n {
            if !corollary_range_check(n, m) {
                exceptions.push((n, m));
            }
        }
    }
    assert_eq!(exceptions, vec![(6, 10), (15, 21), (21, 36)]);
}

#[test]
fn symmetric_group_enumeration() {
    let r = sym_hom_enumerate(5, 1).unwrap();
    assert_eq!(r.solutions, 1);
    assert!(r.all_cyclic);

    let r = sym_hom_enumerate(3, 3).unwrap();
    assert!(!r.all_cyclic);
    let example = r.noncyclic_example.unwrap();
    // the example is a genuine solution of the braid relation
    assert_eq!(example.len(), 2);

    assert!(matches!(
        sym_hom_enumerate(10, 6),
        Err(Error::SizeGuard(_))
    ));
}

#[test]
fn cable_structure_parsing() {
    let cs: CableStructure = "P: 2 2 2".parse().unwrap();
    assert_eq!(cs.pattern(), &[2, 2, 2]);
    assert_eq!(cs.total(), 6);
    assert_eq!(cs.to_string().parse::<CableStructure>().unwrap(), cs);
    assert!("P: 0".parse::<CableStructure>().is_err());
    assert!("2 2".parse::<CableStructure>().is_err());
}

#[test]
fn decompose_round_trip_on_generators() {
    let cs = pairs(4);
    let e = SemidirectElement::new(
        word(4, &[2, -3, 1]),
        vec![
            word(2, &[1]).pow(-2),
            BraidWord::identity(2),
            word(2, &[1]).pow(3),
            word(2, &[1]),
        ],
    );
    let w = embed_f(&e, &cs).unwrap();
    let d = decompose(&w, &cs).unwrap();
    assert_eq!(d.exterior, e.exterior.freely_reduced());
    assert_eq!(d.interiors, e.interiors);
}

fn arb_word_on(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..n as i32, any::<bool>()), 0..=max_len).prop_map(move |ls| {
        BraidWord::new(n, ls.into_iter().map(|(i, s)| if s { i } else { -i })).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn beta_is_a_homomorphism((u, v) in (arb_word_on(5, 8), arb_word_on(5, 8))) {
        let cs = pairs(5);
        let lhs = beta(&u.compose(&v).unwrap(), &cs).unwrap();
        let rhs = beta(&u, &cs).unwrap().compose(&beta(&v, &cs).unwrap()).unwrap();
        prop_assert!(lhs.equals(&rhs).unwrap());
    }

    #[test]
    fn iota_images_commute((f, g) in (arb_word_on(2, 6), arb_word_on(2, 6))) {
        let cs = pairs(3);
        for (i, j) in [(1usize, 2usize), (1, 3), (2, 3)] {
            let a = iota(i, &f, &cs).unwrap();
            let b = iota(j, &g, &cs).unwrap();
            prop_assert!(a.commutes(&b).unwrap());
        }
    }

    #[test]
    fn iota_commutes_with_pure_beta((f, g) in (arb_word_on(2, 6), arb_word_on(3, 6))) {
        let cs = pairs(3);
        // squares of generators are pure on the cables
        let pure = g.compose(&g).unwrap();
        if pure.permutation().is_identity() {
            for j in 1..=3usize {
                let a = iota(j, &f, &cs).unwrap();
                let b = beta(&pure, &cs).unwrap();
                prop_assert!(a.commutes(&b).unwrap());
            }
        }
    }

    #[test]
    fn crossed_vectors_are_equivariant(g in arb_word_on(5, 6)) {
        let h = standard_hom(StandardKind::KTwistCabling(2), 5).unwrap();
        for i in 1..5i32 {
            let core = word(5, &[i, i]);
            let conjugated = g.compose(&core).unwrap().compose(&g.inverse()).unwrap();
            let base = crossed_vector(&h, &core).unwrap();
            let moved = crossed_vector(&h, &conjugated).unwrap();
            // the exterior permutation of g permutes the cable entries
            let perm = g.permutation();
            let mut expected = vec![0i64; 5];
            for (j, e) in expected.iter_mut().enumerate() {
                *e = base.entries[perm.map()[j]];
            }
            prop_assert_eq!(moved.entries, expected);
        }
    }

    #[test]
    fn random_semidirect_round_trip((ext, ts) in (
        arb_word_on(3, 8),
        prop::collection::vec(-4i64..=4, 3),
    )) {
        let cs = pairs(3);
        let e = SemidirectElement::new(
            ext.freely_reduced(),
            ts.into_iter().map(|t| word(2, &[1]).pow(t)).collect(),
        );
        let d = decompose(&embed_f(&e, &cs).unwrap(), &cs).unwrap();
        prop_assert_eq!(d, e);
    }
}
