//! Curves as conjugated round curves: half/Dehn twists, disjointness by
//! twist commutation, and the rotation harnesses.

use braidkit::braid::named;
use braidkit::curve::{
    curves_disjoint, curves_equal, enumerate_curves, rotation_intersection_report,
    rotation_multicurve_report, RotationHypothesis,
};
use braidkit::{BraidWord, CurveSpec, DisjointnessVerdict, Multicurve, NamedTag};
use proptest::prelude::*;

fn word(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.iter().copied()).expect("valid letters")
}

#[test]
fn half_twist_words() {
    let c1 = CurveSpec::round(5, 1).unwrap();
    assert_eq!(c1.half_twist_word().letters(), &[1]);

    let a1 = named(NamedTag::Alpha1, 5).unwrap();
    let rotated = c1.transform(&a1).unwrap();
    assert!(rotated
        .half_twist_word()
        .equals(&word(5, &[2]))
        .unwrap());

    let sigma0 = CurveSpec::new(4, 3, named(NamedTag::Alpha1, 4).unwrap()).unwrap();
    assert!(sigma0
        .half_twist_word()
        .equals(&named(NamedTag::Sigma0of4, 4).unwrap())
        .unwrap());
}

#[test]
fn dehn_twists_are_pure() {
    for i in 1..5 {
        let c = CurveSpec::new(5, i, word(5, &[4, -2, 1])).unwrap();
        assert!(c.dehn_twist_word().permutation().is_identity());
    }
}

#[test]
fn curve_equality() {
    let c1 = CurveSpec::round(5, 1).unwrap();
    let c1_conj = c1.transform(&word(5, &[1])).unwrap();
    assert!(curves_equal(&c1, &c1_conj).unwrap());

    let c2 = CurveSpec::round(5, 2).unwrap();
    assert!(!curves_equal(&c1, &c2).unwrap());

    let a1 = named(NamedTag::Alpha1, 5).unwrap();
    assert!(!curves_equal(&c1, &c1.transform(&a1).unwrap()).unwrap());
}

#[test]
fn disjointness_verdicts() {
    let c1 = CurveSpec::round(5, 1).unwrap();
    let c2 = CurveSpec::round(5, 2).unwrap();
    let c3 = CurveSpec::round(5, 3).unwrap();
    assert_eq!(
        curves_disjoint(&c1, &c3).unwrap(),
        DisjointnessVerdict::Disjoint
    );
    assert_eq!(
        curves_disjoint(&c1, &c2).unwrap(),
        DisjointnessVerdict::Intersecting
    );

    let a1 = named(NamedTag::Alpha1, 5).unwrap();
    assert_eq!(
        curves_disjoint(&c1, &c1.transform(&a1).unwrap()).unwrap(),
        DisjointnessVerdict::Intersecting
    );
}

#[test]
fn multicurve_construction() {
    let c1 = CurveSpec::round(5, 1).unwrap();
    let c2 = CurveSpec::round(5, 2).unwrap();
    let c3 = CurveSpec::round(5, 3).unwrap();

    let m = Multicurve::new(vec![c1.clone(), c3.clone()]).unwrap();
    assert_eq!(m.components().len(), 2);

    // duplicates collapse
    let c1_conj = c1.transform(&word(5, &[1])).unwrap();
    let m = Multicurve::new(vec![c1.clone(), c1_conj]).unwrap();
    assert_eq!(m.components().len(), 1);

    assert!(Multicurve::new(vec![c1, c2]).is_err());
}

#[test]
fn rotation_report_small_cases() {
    // a single round curve in B₃ meets both rotations of itself
    let c1 = CurveSpec::round(3, 1).unwrap();
    let report = rotation_intersection_report(3, 1, &[c1]).unwrap();
    assert_eq!(report.counterexamples, 0);
    assert_eq!(report.entries.len(), 2);
    for e in &report.entries {
        assert_eq!(e.verdict, DisjointnessVerdict::Intersecting);
    }

    let c2 = CurveSpec::round(6, 2).unwrap();
    let report = rotation_intersection_report(6, 2, &[c2]).unwrap();
    assert_eq!(report.counterexamples, 0);
    for e in &report.entries {
        assert_eq!(e.verdict, DisjointnessVerdict::Intersecting);
    }

    assert!(rotation_intersection_report(5, 3, &[]).is_err());
}

#[test]
fn multicurve_report_round_curve_verdicts() {
    // α₁² carries c₁ to c₃, which is disjoint from c₁
    let c1 = CurveSpec::round(5, 1).unwrap();
    let report =
        rotation_multicurve_report(5, RotationHypothesis::Alpha1Range, &[c1]).unwrap();
    assert_eq!(report.entries.len(), 1);
    assert_eq!(
        report.entries[0].verdicts[0],
        DisjointnessVerdict::Disjoint
    );
    assert!(report.entries[0].satisfies_hypothesis);
    assert!(report.counterexample_pairs.is_empty());

    // α₂ range at n = 6 checks powers 2..3
    let c1 = CurveSpec::round(6, 1).unwrap();
    let report =
        rotation_multicurve_report(6, RotationHypothesis::Alpha2Range, &[c1]).unwrap();
    assert_eq!(report.entries[0].verdicts.len(), 2);

    assert!(rotation_multicurve_report(4, RotationHypothesis::Alpha1Range, &[]).is_err());
}

#[test]
fn enumeration_dedupes_by_coords() {
    let curves = enumerate_curves(4, 2).unwrap();
    let mut seen = std::collections::HashSet::new();
    for c in &curves {
        assert!(seen.insert(c.coords().unwrap()), "duplicate curve {c}");
    }
    // at least the three round curves are present
    assert!(curves.len() >= 3);
}

#[test]
fn parser_round_trip() {
    let c: CurveSpec = "C5: 1 | 4 3".parse().unwrap();
    assert_eq!(c.strands(), 5);
    assert_eq!(c.base(), 1);
    assert_eq!(c.conjugator().letters(), &[4, 3]);
    assert_eq!(c.to_string().parse::<CurveSpec>().unwrap(), c);

    assert!("C5: 0 |".parse::<CurveSpec>().is_err());
    assert!("C5: 5 |".parse::<CurveSpec>().is_err());
    assert!("C5: 1".parse::<CurveSpec>().is_err());
}

fn arb_curve(n: usize) -> impl Strategy<Value = CurveSpec> {
    (
        1..n,
        prop::collection::vec((1..n as i32, any::<bool>()), 0..=3),
    )
        .prop_map(move |(base, ls)| {
            let conj = BraidWord::new(
                n,
                ls.into_iter().map(|(i, s)| if s { i } else { -i }),
            )
            .unwrap();
            CurveSpec::new(n, base, conj).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn disjointness_is_symmetric((c, d) in (arb_curve(5), arb_curve(5))) {
        prop_assert_eq!(
            curves_disjoint(&c, &d).unwrap(),
            curves_disjoint(&d, &c).unwrap()
        );
    }

    #[test]
    fn disjointness_is_equivariant((c, d, ls) in (
        arb_curve(5),
        arb_curve(5),
        prop::collection::vec((1..5i32, any::<bool>()), 0..=3),
    )) {
        let g = BraidWord::new(5, ls.into_iter().map(|(i, s)| if s { i } else { -i })).unwrap();
        let lhs = curves_disjoint(&c.transform(&g).unwrap(), &d.transform(&g).unwrap()).unwrap();
        prop_assert_eq!(lhs, curves_disjoint(&c, &d).unwrap());
    }
}
