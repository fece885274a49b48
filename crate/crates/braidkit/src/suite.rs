//! Named desk-scale verification suites. Each suite runs one acceptance
//! check end to end and reports a pass/fail verdict with a counterexample
//! count; the CLI `suite` subcommand and the acceptance tests share these
//! runners so both always agree.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::braid::{named, BraidWord, NamedTag, DEFAULT_FUEL};
use crate::cable::{
    classify_cabling, corollary_range_check, decompose, embed_f, iota, special_constraint,
    special_constraint_bigint, sym_hom_enumerate, tau, CableStructure, SemidirectElement,
};
use crate::curve::{
    enumerate_curves, rotation_intersection_report, rotation_multicurve_report,
    RotationHypothesis,
};
use crate::error::{Error, Result};
use crate::handle;
use crate::hom::{
    centralizer_generators, compose_hom, fingerprint, standard_hom, transvect, Fingerprint,
    Homomorphism, StandardKind,
};
use crate::lamination;

/// Outcome of one named suite.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub passed: bool,
    pub counterexamples: u64,
    pub detail: String,
}

impl SuiteReport {
    fn new(name: &str, counterexamples: u64, detail: String) -> Self {
        SuiteReport {
            name: name.to_string(),
            passed: counterexamples == 0,
            counterexamples,
            detail,
        }
    }
}

/// The names accepted by [`run`], in acceptance-criteria order.
pub const SUITE_NAMES: [&str; 12] = [
    "relations",
    "word-problem",
    "center",
    "prop31",
    "prop32",
    "roundtrip",
    "classifier",
    "b4-identities",
    "screen",
    "sym",
    "fingerprints",
    "centralizers",
];

/// Run the named suite with its default parameters.
pub fn run(name: &str) -> Result<SuiteReport> {
    match name {
        "relations" => relations(),
        "word-problem" => word_problem(),
        "center" => center(),
        "prop31" => prop31(&[5, 6], 4),
        "prop32" => prop32(5, 4),
        "roundtrip" => roundtrip(5, 500),
        "classifier" => classifier(),
        "b4-identities" => b4_identities(),
        "screen" => screen(50),
        "sym" => sym(),
        "fingerprints" => fingerprints(),
        "centralizers" => centralizers(),
        _ => Err(Error::Parse(format!(
            "unknown suite {name:?}; known: {}",
            SUITE_NAMES.join(", ")
        ))),
    }
}

fn random_word<R: Rng>(n: usize, max_len: usize, rng: &mut R) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<i32> = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as i32);
            if rng.gen::<bool>() {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(n, letters).expect("letters in range")
}

/// Every standard homomorphism satisfies the braid relations:
/// n ∈ {3..6}, twist exponents k ∈ {−3..3}, plus the exceptional B₄ → B₃
/// map, inversion, and an inner automorphism.
pub fn relations() -> Result<SuiteReport> {
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for n in 3..=6usize {
        let mut kinds = vec![
            StandardKind::Trivial,
            StandardKind::Inclusion,
            StandardKind::Diagonal,
            StandardKind::FlipDiagonal,
            StandardKind::Inversion,
            StandardKind::Inner(named(NamedTag::Alpha1, n)?),
        ];
        for k in -3..=3 {
            kinds.push(StandardKind::KTwistCabling(k));
        }
        for kind in kinds {
            let mut h = standard_hom(kind.clone(), n)?;
            checked += 1;
            if !h.verify()? {
                failures.push(format!("{kind:?} at n = {n}"));
            }
        }
    }
    let mut exc = standard_hom(StandardKind::ExceptionalB4B3, 4)?;
    checked += 1;
    if !exc.verify()? {
        failures.push("ExceptionalB4B3".into());
    }
    Ok(SuiteReport::new(
        "relations",
        failures.len() as u64,
        format!("verified {checked} standard maps; failures: {failures:?}"),
    ))
}

/// 1000 random words per n ∈ {3..7}, length ≤ 40: the handle-reduction
/// and lamination backends never disagree and nothing is undecided.
pub fn word_problem() -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB81D);
    let mut conflicts = 0u64;
    let mut undecided = 0u64;
    let mut checked = 0u64;
    for n in 3..=7usize {
        for _ in 0..1000 {
            let w = random_word(n, 40, &mut rng).freely_reduced();
            checked += 1;
            let lamination_moves = lamination::moves_default_family(&w);
            match handle::reduces_to_identity(&w, DEFAULT_FUEL) {
                Err(Error::Undecided { .. }) => undecided += 1,
                Err(e) => return Err(e),
                Ok(handle_trivial) => {
                    // a moved lamination certifies nontriviality; a trivial
                    // word must also have exponent sum zero
                    if handle_trivial && (lamination_moves || w.exponent_sum() != 0) {
                        conflicts += 1;
                    }
                    if handle_trivial != w.is_trivial()? {
                        conflicts += 1;
                    }
                }
            }
        }
    }
    Ok(SuiteReport::new(
        "word-problem",
        conflicts + undecided,
        format!("{checked} words; {conflicts} conflicts, {undecided} undecided"),
    ))
}

/// Central identities for n ∈ {3..7}: α₁ⁿ = α₂^{n−1} and z commutes with
/// every generator.
pub fn center() -> Result<SuiteReport> {
    let mut bad = 0u64;
    let mut checked = 0u64;
    for n in 3..=7usize {
        let a1 = named(NamedTag::Alpha1, n)?;
        let a2 = named(NamedTag::Alpha2, n)?;
        checked += 1;
        if !a1.pow(n as i64).equals(&a2.pow(n as i64 - 1))? {
            bad += 1;
        }
        let z = named(NamedTag::CenterZ, n)?;
        for i in 1..n {
            checked += 1;
            if !z.commutes(&BraidWord::generator(n, i as i32)?)? {
                bad += 1;
            }
        }
    }
    Ok(SuiteReport::new(
        "center",
        bad,
        format!("{checked} identities checked"),
    ))
}

/// Rotation displacement: every curve `w(c_i)` with `|w| ≤ max_conj` meets
/// its image under `α_k^{±1}` for each listed n and k ∈ {1, 2}.
pub fn prop31(strand_counts: &[usize], max_conj: usize) -> Result<SuiteReport> {
    let mut counterexamples = 0u64;
    let mut entries = 0u64;
    for &n in strand_counts {
        let curves = enumerate_curves(n, max_conj)?;
        for k in [1usize, 2] {
            let report = rotation_intersection_report(n, k, &curves)?;
            counterexamples += report.counterexamples as u64;
            entries += report.entries.len() as u64;
        }
    }
    Ok(SuiteReport::new(
        "prop31",
        counterexamples,
        format!("{entries} (curve, rotation) pairs checked"),
    ))
}

/// Single-curve conclusion: among curves `w(c_i)` with `|w| ≤ max_conj`,
/// no two distinct, mutually disjoint curves both satisfy the
/// rotation-disjointness hypothesis.
pub fn prop32(n: usize, max_conj: usize) -> Result<SuiteReport> {
    let curves = enumerate_curves(n, max_conj)?;
    let report = rotation_multicurve_report(n, RotationHypothesis::Alpha1Range, &curves)?;
    let satisfying = report
        .entries
        .iter()
        .filter(|e| e.satisfies_hypothesis)
        .count();
    Ok(SuiteReport::new(
        "prop32",
        report.counterexample_pairs.len() as u64,
        format!(
            "{} curves, {satisfying} satisfy the hypothesis, {} disjoint pairs",
            report.entries.len(),
            report.counterexample_pairs.len()
        ),
    ))
}

/// Semidirect round trip on the all-pairs pattern with `cables` cables:
/// `decompose ∘ embed_F` is the identity on random elements, and
/// `embed_F ∘ decompose` is the identity on generator images in the group.
pub fn roundtrip(cables: usize, samples: usize) -> Result<SuiteReport> {
    let cs = CableStructure::uniform_pairs(cables)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x6161);
    let mut bad = 0u64;
    for _ in 0..samples {
        let exterior = random_word(cables, 10, &mut rng).freely_reduced();
        let interiors: Vec<BraidWord> = (0..cables)
            .map(|_| BraidWord::generator(2, 1).expect("B2").pow(rng.gen_range(-5..=5)))
            .collect();
        let e = SemidirectElement::new(exterior, interiors);
        let d = decompose(&embed_f(&e, &cs)?, &cs)?;
        if d != e {
            bad += 1;
        }
    }
    // generator-level identity in the group: one exterior generator or one
    // interior twist at a time
    let mut gens = Vec::new();
    for i in 1..cables {
        gens.push(SemidirectElement::new(
            BraidWord::generator(cables, i as i32)?,
            vec![BraidWord::identity(2); cables],
        ));
    }
    for j in 0..cables {
        let mut interiors = vec![BraidWord::identity(2); cables];
        interiors[j] = BraidWord::generator(2, 1)?;
        gens.push(SemidirectElement::new(
            BraidWord::identity(cables),
            interiors,
        ));
    }
    for g in &gens {
        let w = embed_f(g, &cs)?;
        let back = embed_f(&decompose(&w, &cs)?, &cs)?;
        if !w.equals(&back)? {
            bad += 1;
        }
    }
    Ok(SuiteReport::new(
        "roundtrip",
        bad,
        format!("{samples} random elements plus {} generators", gens.len()),
    ))
}

/// The cabling classifier recovers `k` with certification from the
/// standard map, its transvections by `τ^s` and `z^s`, and 20 random
/// cable-respecting inner conjugations, for k ∈ {−3..3}, n ∈ {3, 4, 5}.
pub fn classifier() -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xCAB1E);
    let mut bad = 0u64;
    let mut runs = 0u64;
    for n in 3..=5usize {
        let cs = CableStructure::uniform_pairs(n)?;
        let t = tau(n)?;
        let z = named(NamedTag::CenterZ, 2 * n)?;
        for k in -3..=3 {
            let base = standard_hom(StandardKind::KTwistCabling(k), n)?;
            let mut variants: Vec<Homomorphism> = vec![base.clone()];
            for s in -2..=2i64 {
                variants.push(transvect(&base, &t.pow(s))?);
                variants.push(transvect(&base, &z.pow(s))?);
            }
            for _ in 0..20 {
                // a cable-respecting conjugator: interior twists times a
                // central factor
                let mut conj = z.pow(rng.gen_range(-1..=1));
                for j in 1..=n {
                    let twist = BraidWord::generator(2, 1)?.pow(rng.gen_range(-2..=2));
                    conj = conj.compose(&iota(j, &twist, &cs)?)?;
                }
                let inner = standard_hom(StandardKind::Inner(conj), 2 * n)?;
                variants.push(compose_hom(&inner, &base)?);
            }
            for h in &variants {
                runs += 1;
                let c = classify_cabling(h)?;
                if c.k_canonical != i64::from(k) || !c.certified {
                    bad += 1;
                }
            }
        }
    }
    Ok(SuiteReport::new(
        "classifier",
        bad,
        format!("{runs} classifications"),
    ))
}

/// The B₄ Garside identities: Δσ₁Δ⁻¹ = σ₃, Δσ₂Δ⁻¹ = σ₂, and Δ does not
/// commute with σ₀.
pub fn b4_identities() -> Result<SuiteReport> {
    let delta = named(NamedTag::GarsideDelta4, 4)?;
    let sigma0 = named(NamedTag::Sigma0of4, 4)?;
    let conj = |i: i32| -> Result<BraidWord> {
        delta
            .compose(&BraidWord::generator(4, i)?)?
            .compose(&delta.inverse())
    };
    let mut bad = 0u64;
    if !conj(1)?.equals(&BraidWord::generator(4, 3)?)? {
        bad += 1;
    }
    if !conj(2)?.equals(&BraidWord::generator(4, 2)?)? {
        bad += 1;
    }
    if delta.commutes(&sigma0)? {
        bad += 1;
    }
    Ok(SuiteReport::new("b4-identities", bad, "3 identities".into()))
}

/// Divisibility screen: the range corollary holds for 5 ≤ n ≤ n_max,
/// n < m ≤ 2n, and the `u64` constraint agrees with big-integer
/// arithmetic on a full grid.
pub fn screen(n_max: u64) -> Result<SuiteReport> {
    let mut range_failures = Vec::new();
    let mut mismatches = 0u64;
    let mut checked = 0u64;
    for n in 5..=n_max {
        for m in n + 1..=2 * n {
            checked += 1;
            if !corollary_range_check(n, m) {
                range_failures.push((n, m));
            }
        }
    }
    for n in 1..=2 * n_max {
        for m in 1..=2 * n_max {
            checked += 1;
            if special_constraint(n, m) != special_constraint_bigint(n, m) {
                mismatches += 1;
            }
        }
    }
    Ok(SuiteReport::new(
        "screen",
        range_failures.len() as u64 + mismatches,
        format!(
            "{checked} (n, m) pairs; divisibility holds inside the excluded \
             range at {range_failures:?}; {mismatches} big-integer mismatches"
        ),
    ))
}

/// Exhaustive symmetric-group check: every relation-satisfying tuple in
/// `S_k^4` is cyclic for k ≤ 4 (target rank below source rank), while the
/// boundary case (n, k) = (3, 3) does produce a non-cyclic tuple.
pub fn sym() -> Result<SuiteReport> {
    let mut bad = 0u64;
    let mut detail = Vec::new();
    for k in 1..=4usize {
        let report = sym_hom_enumerate(5, k)?;
        detail.push(format!("(5,{k}): {} solutions", report.solutions));
        if !report.all_cyclic {
            bad += 1;
        }
    }
    let boundary = sym_hom_enumerate(3, 3)?;
    detail.push(format!(
        "(3,3): {} solutions, non-cyclic found: {}",
        boundary.solutions,
        !boundary.all_cyclic
    ));
    if boundary.all_cyclic {
        bad += 1;
    }
    Ok(SuiteReport::new("sym", bad, detail.join("; ")))
}

fn standard_target_kinds() -> Vec<StandardKind> {
    let mut kinds = vec![
        StandardKind::Trivial,
        StandardKind::Inclusion,
        StandardKind::Diagonal,
        StandardKind::FlipDiagonal,
    ];
    for k in -2..=2 {
        kinds.push(StandardKind::KTwistCabling(k));
    }
    kinds
}

/// Negate every linking multiset (the effect of post-composing with
/// inversion on the fingerprint data).
fn flip_linking_signs(fp: &Fingerprint) -> Fingerprint {
    let mut out = fp.clone();
    for w in &mut out.witness_data {
        if let Some(ms) = &mut w.linking_multiset {
            for v in ms.iter_mut() {
                *v = -*v;
            }
            ms.sort_unstable();
        }
    }
    out
}

/// Fingerprints of the standard maps `B₅ → B₁₀` are pairwise distinct,
/// and each is invariant under 20 sampled equivalence moves: catalogued
/// transvections (exact), random inner conjugations (exact — all
/// fingerprint data is relabeling-invariant), and inversion (up to a
/// global sign flip of the linking multisets).
pub fn fingerprints() -> Result<SuiteReport> {
    let n = 5usize;
    let mut rng = ChaCha8Rng::seed_from_u64(0xF16E);
    let mut bad = 0u64;
    let mut prints: Vec<(String, Fingerprint)> = Vec::new();
    let mut moves = 0u64;
    for kind in standard_target_kinds() {
        let mut h = standard_hom(kind.clone(), n)?;
        if !h.verify()? {
            bad += 1;
            continue;
        }
        let base = fingerprint(&h)?;
        // moves: every catalogued transvection, inversion, then random
        // inner conjugations up to 20 total
        let catalog = centralizer_generators(&kind, n)?;
        let inner_count = 20usize.saturating_sub(catalog.len() + 1);
        for t in &catalog {
            moves += 1;
            let mut moved = transvect(&h, t)?;
            if !moved.verify()? || fingerprint(&moved)? != base {
                bad += 1;
            }
        }
        {
            moves += 1;
            let inv = standard_hom(StandardKind::Inversion, 2 * n)?;
            let mut moved = compose_hom(&inv, &h)?;
            if !moved.verify()? || flip_linking_signs(&fingerprint(&moved)?) != base {
                bad += 1;
            }
        }
        for _ in 0..inner_count {
            moves += 1;
            let w = random_word(2 * n, 4, &mut rng);
            let inner = standard_hom(StandardKind::Inner(w), 2 * n)?;
            let mut moved = compose_hom(&inner, &h)?;
            if !moved.verify()? || fingerprint(&moved)? != base {
                bad += 1;
            }
        }
        prints.push((format!("{kind:?}"), base));
    }
    let mut collisions = Vec::new();
    for (i, (name_a, fp_a)) in prints.iter().enumerate() {
        for (name_b, fp_b) in prints.iter().skip(i + 1) {
            if fp_a == fp_b {
                collisions.push(format!("{name_a} vs {name_b}"));
            }
        }
    }
    bad += collisions.len() as u64;
    Ok(SuiteReport::new(
        "fingerprints",
        bad,
        format!(
            "{} maps, {moves} equivalence moves; collisions: {collisions:?}",
            prints.len()
        ),
    ))
}

/// Every catalogued centralizer generator commutes with every image of
/// its standard map at n = 5.
pub fn centralizers() -> Result<SuiteReport> {
    let n = 5usize;
    let mut bad = 0u64;
    let mut checked = 0u64;
    for kind in standard_target_kinds() {
        let h = standard_hom(kind.clone(), n)?;
        for t in centralizer_generators(&kind, n)? {
            for im in h.images() {
                checked += 1;
                if !t.commutes(im)? {
                    bad += 1;
                }
            }
        }
    }
    Ok(SuiteReport::new(
        "centralizers",
        bad,
        format!("{checked} (generator, image) pairs"),
    ))
}

/// A deterministic word sampler shared with the test suites.
pub fn seeded_words(n: usize, count: usize, max_len: usize, seed: u64) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_word(n, max_len, &mut rng)).collect()
}
