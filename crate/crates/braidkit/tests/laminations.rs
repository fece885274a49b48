//! Coordinate action on curve systems: round curves, the generator
//! action, the mod-center oracle, and the cross-check against handle
//! reduction.

use braidkit::braid::named;
use braidkit::handle;
use braidkit::lamination::{
    default_family, mod_center_equal, random_lamination, standard_curve_coords,
};
use braidkit::{BraidWord, LaminationCoords, NamedTag, DEFAULT_FUEL};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn word(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.iter().copied()).expect("valid letters")
}

#[test]
fn round_curves_are_fixed_by_their_half_twists() {
    for n in 3..=7 {
        for i in 1..n {
            let c = standard_curve_coords(n, i).unwrap();
            assert!(!c.is_empty_system());
            let sigma = BraidWord::generator(n, i as i32).unwrap();
            assert_eq!(c.apply_word(&sigma).unwrap(), c);
        }
    }
}

#[test]
fn generator_and_inverse_cancel_on_round_curves() {
    for n in 3..=7 {
        for i in 1..n - 1 {
            let c = standard_curve_coords(n, i).unwrap();
            let w = word(n, &[(i + 1) as i32, -((i + 1) as i32)]);
            assert_eq!(c.apply_word(&w).unwrap(), c);
        }
    }
}

#[test]
fn distinct_round_curves_have_distinct_coords() {
    let c1 = standard_curve_coords(4, 1).unwrap();
    let c3 = standard_curve_coords(4, 3).unwrap();
    assert_ne!(c1, c3);
}

#[test]
fn empty_word_acts_trivially() {
    let l = LaminationCoords::from_i64(5, &[1, -2, 3], &[0, 4, -1]).unwrap();
    assert_eq!(l.apply_word(&BraidWord::identity(5)).unwrap(), l);
}

#[test]
fn braid_relation_acts_trivially_on_random_laminations() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 3..=7 {
        let relation = word(n, &[1, 2, 1, -2, -1, -2]);
        for _ in 0..200 {
            let l = random_lamination(n, &mut rng).unwrap();
            assert_eq!(l.apply_word(&relation).unwrap(), l);
        }
    }
}

#[test]
fn rotation_carries_round_curves_one_click() {
    let a1 = named(NamedTag::Alpha1, 5).unwrap();
    let c1 = standard_curve_coords(5, 1).unwrap();
    assert_eq!(
        c1.apply_word(&a1).unwrap(),
        standard_curve_coords(5, 2).unwrap()
    );
}

#[test]
fn mod_center_oracle() {
    let family = default_family(5).unwrap();
    let z = named(NamedTag::CenterZ, 5).unwrap();
    let id = BraidWord::identity(5);
    assert!(mod_center_equal(&z, &id, &family).unwrap());

    let s1 = word(5, &[1]);
    let s2 = word(5, &[2]);
    assert!(!mod_center_equal(&s1, &s2, &family).unwrap());
    assert!(mod_center_equal(&s1, &s1, &family).unwrap());

    assert!(mod_center_equal(&s1, &s2, &[]).is_err());
}

#[test]
fn coordinate_growth_escalates_past_64_bits() {
    // (σ1 σ2⁻¹)^t stretches coordinates exponentially in B₃
    let w = word(3, &[1, -2]).pow(200);
    let c = standard_curve_coords(3, 1).unwrap();
    let big = c.apply_word(&w).unwrap();
    let magnitude = big
        .a()
        .iter()
        .chain(big.b())
        .map(|x| x.magnitude().bits())
        .max()
        .unwrap();
    assert!(magnitude > 64, "expected escalation, max bits {magnitude}");
    // the action is still exact: the inverse word undoes it
    assert_eq!(big.apply_word(&w.inverse()).unwrap(), c);
}

#[test]
fn parser_round_trip() {
    let l = LaminationCoords::from_i64(5, &[1, -2, 0], &[3, 0, -4]).unwrap();
    assert_eq!(l.to_string(), "L5: 1 -2 0 | 3 0 -4");
    assert_eq!(l.to_string().parse::<LaminationCoords>().unwrap(), l);

    assert!("L5: 1 2 | 3".parse::<LaminationCoords>().is_err());
    assert!("L2: |".parse::<LaminationCoords>().is_err());
    assert!("5: 1 | 2".parse::<LaminationCoords>().is_err());
}

fn arb_strands() -> impl Strategy<Value = usize> {
    3..=7usize
}

fn arb_lamination(n: usize) -> impl Strategy<Value = LaminationCoords> {
    let k = n - 2;
    (
        prop::collection::vec(-5i64..=5, k),
        prop::collection::vec(-5i64..=5, k),
    )
        .prop_map(move |(a, b)| LaminationCoords::from_i64(n, &a, &b).unwrap())
}

fn arb_word_on(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..n as i32, any::<bool>()), 0..=max_len).prop_map(move |ls| {
        BraidWord::new(n, ls.into_iter().map(|(i, s)| if s { i } else { -i })).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // the action is a left action: the right factor acts first
    #[test]
    fn action_property((l, u, v) in arb_strands().prop_flat_map(|n| {
        (arb_lamination(n), arb_word_on(n, 12), arb_word_on(n, 12))
    })) {
        let uv = u.compose(&v).unwrap();
        let stepwise = l.apply_word(&v).unwrap().apply_word(&u).unwrap();
        prop_assert_eq!(l.apply_word(&uv).unwrap(), stepwise);
    }

    #[test]
    fn far_commutation_acts_identically(l in arb_lamination(7)) {
        for (i, j) in [(1i32, 3i32), (1, 4), (2, 5), (3, 6), (1, 6)] {
            let ij = word(7, &[i, j]);
            let ji = word(7, &[j, i]);
            prop_assert_eq!(l.apply_word(&ij).unwrap(), l.apply_word(&ji).unwrap());
        }
    }

    #[test]
    fn braid_relation_acts_identically((l, i) in arb_strands().prop_flat_map(|n| {
        (arb_lamination(n), 1..(n as i32 - 1))
    })) {
        let lhs = word(l.strands(), &[i, i + 1, i]);
        let rhs = word(l.strands(), &[i + 1, i, i + 1]);
        prop_assert_eq!(l.apply_word(&lhs).unwrap(), l.apply_word(&rhs).unwrap());
    }

    #[test]
    fn center_acts_trivially(l in arb_strands().prop_flat_map(arb_lamination)) {
        let z = named(NamedTag::CenterZ, l.strands()).unwrap();
        prop_assert_eq!(l.apply_word(&z).unwrap(), l);
    }

    // moving any family member certifies nontriviality, so handle
    // reduction must agree
    #[test]
    fn moved_laminations_certify_nontriviality(w in arb_strands().prop_flat_map(|n| arb_word_on(n, 20))) {
        let family = default_family(w.strands()).unwrap();
        let moves = family.iter().any(|l| l.apply_word(&w).unwrap() != *l);
        if moves {
            prop_assert!(!handle::reduces_to_identity(&w, DEFAULT_FUEL).unwrap());
        }
    }
}
