//! Homomorphisms between braid groups as generator-image tables:
//! constructors for the standard maps, relation verification, transvection,
//! composition, centralizer catalogs, and equivalence-invariant
//! fingerprints.

use serde::{Deserialize, Serialize};

use crate::braid::{named, BraidWord, NamedTag};
use crate::cable;
use crate::error::{Error, Result};

/// A homomorphism `B_n → B_m` given by the images of `σ_1, …, σ_{n−1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HomWire", into = "HomWire")]
pub struct Homomorphism {
    source_strands: usize,
    target_strands: usize,
    images: Vec<BraidWord>,
    verified: bool,
}

/// Wire format: `{"images": [[letters…], …], "source_strands": n,
/// "target_strands": m}` (fields kept in alphabetical order so JSON key
/// order is stable).
#[derive(Serialize, Deserialize)]
struct HomWire {
    images: Vec<Vec<i32>>,
    source_strands: usize,
    target_strands: usize,
}

impl TryFrom<HomWire> for Homomorphism {
    type Error = Error;
    fn try_from(w: HomWire) -> Result<Self> {
        let images = w
            .images
            .into_iter()
            .map(|letters| BraidWord::new(w.target_strands, letters))
            .collect::<Result<Vec<_>>>()?;
        Homomorphism::new(w.source_strands, w.target_strands, images)
    }
}

impl From<Homomorphism> for HomWire {
    fn from(h: Homomorphism) -> Self {
        HomWire {
            images: h.images.iter().map(|w| w.letters().to_vec()).collect(),
            source_strands: h.source_strands,
            target_strands: h.target_strands,
        }
    }
}

impl Homomorphism {
    pub fn new(
        source_strands: usize,
        target_strands: usize,
        images: Vec<BraidWord>,
    ) -> Result<Self> {
        if source_strands < 2 || target_strands < 1 {
            return Err(Error::Hom(
                "need source n >= 2 and target m >= 1".into(),
            ));
        }
        if images.len() != source_strands - 1 {
            return Err(Error::Hom(format!(
                "expected {} generator images, got {}",
                source_strands - 1,
                images.len()
            )));
        }
        for im in &images {
            if im.strands() != target_strands {
                return Err(Error::StrandMismatch {
                    left: target_strands,
                    right: im.strands(),
                });
            }
        }
        Ok(Homomorphism {
            source_strands,
            target_strands,
            images,
            verified: false,
        })
    }

    pub fn source_strands(&self) -> usize {
        self.source_strands
    }

    pub fn target_strands(&self) -> usize {
        self.target_strands
    }

    pub fn images(&self) -> &[BraidWord] {
        &self.images
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// Check all defining relations on the images and set the verified
    /// flag on success. See [`verify_hom`].
    pub fn verify(&mut self) -> Result<bool> {
        let ok = verify_hom(self)?;
        if ok {
            self.verified = true;
        }
        Ok(ok)
    }

    /// Letter-by-letter substitution, freely reduced.
    pub fn apply(&self, w: &BraidWord) -> Result<BraidWord> {
        apply_hom(self, w)
    }
}

/// The standard homomorphisms and automorphism building blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum StandardKind {
    /// `B_n → B_2n`, every generator to the identity.
    Trivial,
    /// `B_n → B_2n`, `σ_i ↦ σ_i`.
    Inclusion,
    /// `B_n → B_2n`, `σ_i ↦ σ_i σ_{n+i}`.
    Diagonal,
    /// `B_n → B_2n`, `σ_i ↦ σ_i σ_{n+i}⁻¹`.
    FlipDiagonal,
    /// `B_n → B_2n`, `σ_i ↦ σ_{2i−1}^k σ_{2i} σ_{2i+1} σ_{2i−1} σ_{2i}`.
    KTwistCabling(i32),
    /// `B_4 → B_3`, `(σ1, σ3) ↦ σ1`, `σ2 ↦ σ2`.
    ExceptionalB4B3,
    /// `B_n → B_n`, `σ_i ↦ σ_i⁻¹`.
    Inversion,
    /// `B_n → B_n`, `σ_i ↦ w σ_i w⁻¹`.
    Inner(BraidWord),
}

/// The literal generator images of the requested standard map.
pub fn standard_hom(kind: StandardKind, n: usize) -> Result<Homomorphism> {
    if n < 2 {
        return Err(Error::Hom("source must have at least 2 strands".into()));
    }
    let m2 = 2 * n;
    let images: Vec<BraidWord> = match &kind {
        StandardKind::Trivial => (1..n).map(|_| BraidWord::identity(m2)).collect(),
        StandardKind::Inclusion => (1..n)
            .map(|i| BraidWord::generator(m2, i as i32))
            .collect::<Result<_>>()?,
        StandardKind::Diagonal => (1..n)
            .map(|i| BraidWord::new(m2, [i as i32, (n + i) as i32]))
            .collect::<Result<_>>()?,
        StandardKind::FlipDiagonal => (1..n)
            .map(|i| BraidWord::new(m2, [i as i32, -((n + i) as i32)]))
            .collect::<Result<_>>()?,
        StandardKind::KTwistCabling(k) => (1..n)
            .map(|i| {
                let a = (2 * i - 1) as i32;
                let b = (2 * i) as i32;
                let c = (2 * i + 1) as i32;
                let twist = BraidWord::generator(m2, a)?.pow(*k as i64);
                let mut letters: Vec<i32> = twist.letters().to_vec();
                letters.extend([b, c, a, b]);
                BraidWord::new(m2, letters)
            })
            .collect::<Result<_>>()?,
        StandardKind::ExceptionalB4B3 => {
            if n != 4 {
                return Err(Error::Hom("ExceptionalB4B3 requires source B_4".into()));
            }
            vec![
                BraidWord::generator(3, 1)?,
                BraidWord::generator(3, 2)?,
                BraidWord::generator(3, 1)?,
            ]
        }
        StandardKind::Inversion => (1..n)
            .map(|i| BraidWord::generator(n, -(i as i32)))
            .collect::<Result<_>>()?,
        StandardKind::Inner(w) => {
            if w.strands() != n {
                return Err(Error::StrandMismatch {
                    left: n,
                    right: w.strands(),
                });
            }
            (1..n)
                .map(|i| {
                    w.compose(&BraidWord::generator(n, i as i32)?)?
                        .compose(&w.inverse())
                })
                .collect::<Result<_>>()?
        }
    };
    let target = images
        .first()
        .map(|w| w.strands())
        .unwrap_or(m2);
    Homomorphism::new(n, target, images)
}

/// True iff all braid relations and far commutations hold on the images
/// (decided by the word problem). Fuel exhaustion propagates as undecided.
pub fn verify_hom(h: &Homomorphism) -> Result<bool> {
    let imgs = h.images();
    let n = h.source_strands();
    for i in 0..n.saturating_sub(2) {
        let lhs = imgs[i].compose(&imgs[i + 1])?.compose(&imgs[i])?;
        let rhs = imgs[i + 1].compose(&imgs[i])?.compose(&imgs[i + 1])?;
        if !lhs.equals(&rhs)? {
            return Ok(false);
        }
    }
    for i in 0..n - 1 {
        for j in i + 2..n - 1 {
            if !imgs[i].commutes(&imgs[j])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Letter-by-letter substitution of generator images, freely reduced.
pub fn apply_hom(h: &Homomorphism, w: &BraidWord) -> Result<BraidWord> {
    if w.strands() != h.source_strands() {
        return Err(Error::StrandMismatch {
            left: h.source_strands(),
            right: w.strands(),
        });
    }
    let mut out = BraidWord::identity(h.target_strands());
    for &l in w.letters() {
        let image = &h.images()[l.unsigned_abs() as usize - 1];
        let piece = if l > 0 { image.clone() } else { image.inverse() };
        out = out.compose(&piece)?;
    }
    Ok(out)
}

/// The transvection `h^t : σ_i ↦ h(σ_i)·t`, defined when `t` centralizes
/// the image (checked generator by generator).
pub fn transvect(h: &Homomorphism, t: &BraidWord) -> Result<Homomorphism> {
    if t.strands() != h.target_strands() {
        return Err(Error::StrandMismatch {
            left: h.target_strands(),
            right: t.strands(),
        });
    }
    for (idx, im) in h.images().iter().enumerate() {
        if !t.commutes(im)? {
            return Err(Error::TransvectionPrecheck { generator: idx + 1 });
        }
    }
    let images = h
        .images()
        .iter()
        .map(|im| im.compose(t))
        .collect::<Result<Vec<_>>>()?;
    Homomorphism::new(h.source_strands(), h.target_strands(), images)
}

/// Composition `outer ∘ inner`.
pub fn compose_hom(outer: &Homomorphism, inner: &Homomorphism) -> Result<Homomorphism> {
    if inner.target_strands() != outer.source_strands() {
        return Err(Error::StrandMismatch {
            left: outer.source_strands(),
            right: inner.target_strands(),
        });
    }
    let images = inner
        .images()
        .iter()
        .map(|im| apply_hom(outer, im))
        .collect::<Result<Vec<_>>>()?;
    Homomorphism::new(inner.source_strands(), outer.target_strands(), images)
}

/// Generators of the centralizer of the image of the given standard map
/// `B_n → B_2n` (catalog; each returned word commutes with every image).
pub fn centralizer_generators(kind: &StandardKind, n: usize) -> Result<Vec<BraidWord>> {
    if n < 2 {
        return Err(Error::Hom("need n >= 2".into()));
    }
    let m = 2 * n;
    // boundary-parallel twist of the sub-disk on strands lo..lo+n-1
    let sub_disk_twist = |lo: usize| -> Result<BraidWord> {
        BraidWord::new(m, (0..n - 1).map(|t| (lo + t) as i32)).map(|w| w.pow(n as i64))
    };
    match kind {
        StandardKind::Trivial => (1..m)
            .map(|i| BraidWord::generator(m, i as i32))
            .collect::<Result<Vec<_>>>(),
        StandardKind::Inclusion => {
            let mut gens: Vec<BraidWord> = (n + 1..m)
                .map(|i| BraidWord::generator(m, i as i32))
                .collect::<Result<_>>()?;
            gens.push(sub_disk_twist(1)?);
            Ok(gens)
        }
        StandardKind::Diagonal => {
            let swap = cable::beta(
                &BraidWord::generator(2, 1)?,
                &cable::CableStructure::new(vec![n, n])?,
            )?;
            Ok(vec![sub_disk_twist(1)?, sub_disk_twist(n + 1)?, swap])
        }
        StandardKind::FlipDiagonal => Ok(vec![
            sub_disk_twist(1)?,
            sub_disk_twist(n + 1)?,
            named(NamedTag::CenterZ, m)?,
        ]),
        StandardKind::KTwistCabling(_) => {
            Ok(vec![named(NamedTag::CenterZ, m)?, cable::tau(n)?])
        }
        _ => Err(Error::Hom(format!(
            "no centralizer catalog for {kind:?}"
        ))),
    }
}

/// Per-witness fingerprint data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessData {
    pub witness: String,
    pub is_identity: bool,
    pub cycle_type: Vec<usize>,
    /// Sorted multiset of pairwise linking numbers, present when the
    /// witness image is a pure braid.
    pub linking_multiset: Option<Vec<i64>>,
}

/// Equivalence-invariant fingerprint of a verified homomorphism. All
/// witnesses lie in the kernel of the exponent sum, so every transvection
/// fixes their images.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub cyclic_image: bool,
    pub witness_data: Vec<WitnessData>,
    pub sign_bipartition_flag: bool,
}

/// The fixed witness list (entries requiring unavailable generators are
/// dropped for small source rank): `σ1σ2⁻¹`, `σ1σ3⁻¹`, `(σ1σ3⁻¹)²`,
/// `(σ1σ3⁻¹)⁴`, `(σ2σ4⁻¹)²`, `(σ2σ4⁻¹)⁴`, `(σ4⁻¹σ1σ4⁻¹σ3)⁴`,
/// `α₁σ1α₁⁻¹σ2⁻¹`. The fourth
/// powers are pure in the target for every twist exponent of the cabling
/// family and their linking data separates opposite twist signs.
pub fn witness_list(n: usize) -> Result<Vec<BraidWord>> {
    if n < 3 {
        return Err(Error::Hom("witness list needs source n >= 3".into()));
    }
    let mut w = vec![BraidWord::new(n, [1, -2])?];
    if n >= 4 {
        let u = BraidWord::new(n, [1, -3])?;
        w.push(u.clone());
        w.push(u.pow(2));
        w.push(u.pow(4));
    }
    if n >= 5 {
        let v = BraidWord::new(n, [2, -4])?;
        w.push(v.pow(2));
        w.push(v.pow(4));
        // interleaves non-commuting generator pairs, so cabling images do
        // not factor into mirror blocks; its linking data is sign-asymmetric
        // and separates opposite twist directions
        w.push(BraidWord::new(n, [-4, 1, -4, 3])?.pow(4));
    }
    let a1 = named(NamedTag::Alpha1, n)?;
    w.push(
        a1.compose(&BraidWord::generator(n, 1)?)?
            .compose(&a1.inverse())?
            .compose(&BraidWord::generator(n, -2)?)?,
    );
    Ok(w)
}

/// Pairwise linking numbers of a pure braid: half the signed crossing
/// count between each pair of strands. Entry `[i][j]` for 0-based strand
/// ids `i < j`.
pub fn linking_matrix(w: &BraidWord) -> Result<Vec<Vec<i64>>> {
    if !w.permutation().is_identity() {
        return Err(Error::Hom("linking numbers need a pure braid".into()));
    }
    let m = w.strands();
    let mut counts = vec![vec![0i64; m]; m];
    let mut at: Vec<usize> = (0..m).collect();
    for &l in w.letters() {
        let p = l.unsigned_abs() as usize;
        let (s1, s2) = (at[p - 1], at[p]);
        let (lo, hi) = if s1 < s2 { (s1, s2) } else { (s2, s1) };
        counts[lo][hi] += l.signum() as i64;
        at.swap(p - 1, p);
    }
    for row in counts.iter_mut() {
        for v in row.iter_mut() {
            debug_assert!(*v % 2 == 0, "pure braid has even pair crossings");
            *v /= 2;
        }
    }
    Ok(counts)
}

/// Compute the fingerprint of a verified homomorphism.
pub fn fingerprint(h: &Homomorphism) -> Result<Fingerprint> {
    if !h.is_verified() {
        return Err(Error::Hom(
            "fingerprint requires a verified homomorphism".into(),
        ));
    }
    // cyclic image: all generator images pairwise equal in the target
    let imgs = h.images();
    let mut cyclic_image = true;
    'outer: for (idx, a) in imgs.iter().enumerate() {
        for b in imgs.iter().skip(idx + 1) {
            if !a.equals(b)? {
                cyclic_image = false;
                break 'outer;
            }
        }
    }
    let mut witness_data = Vec::new();
    let mut pure_matrices: Vec<Vec<Vec<i64>>> = Vec::new();
    for w in witness_list(h.source_strands())? {
        let image = h.apply(&w)?;
        let perm = image.permutation();
        let mut cycle_type = perm.cycle_type();
        cycle_type.sort_unstable_by(|a, b| b.cmp(a));
        let linking_multiset = if perm.is_identity() {
            let matrix = linking_matrix(&image)?;
            let mut multiset = Vec::new();
            for (i, row) in matrix.iter().enumerate() {
                multiset.extend(row.iter().skip(i + 1));
            }
            multiset.sort_unstable();
            if matrix.iter().any(|row| row.iter().any(|&v| v != 0)) {
                pure_matrices.push(matrix);
            }
            Some(multiset)
        } else {
            None
        };
        witness_data.push(WitnessData {
            witness: w.to_string(),
            is_identity: image.is_trivial()?,
            cycle_type,
            linking_multiset,
        });
    }
    let sign_bipartition_flag = sign_bipartition(h.target_strands(), &pure_matrices)?;
    Ok(Fingerprint {
        cyclic_image,
        witness_data,
        sign_bipartition_flag,
    })
}

/// Whether the target strands admit a sign-reversing bipartition: an even
/// split `(A, B)` such that no pure witness links a strand of `A` with a
/// strand of `B`, together with a single bijection `φ : A → B` satisfying
/// `lk(φ(i), φ(j)) = −lk(i, j)` simultaneously for every pure witness
/// image. This detects a second, orientation-reversed copy of the braid
/// (the flip structure); a plain doubled copy admits no sign-reversing
/// `φ` and maps whose witnesses link the two sides admit no split at all.
fn sign_bipartition(m: usize, matrices: &[Vec<Vec<i64>>]) -> Result<bool> {
    if matrices.is_empty() || !m.is_multiple_of(2) {
        return Ok(false);
    }
    if m > 22 {
        return Err(Error::SizeGuard(format!(
            "sign bipartition search over 2^{m} sides"
        )));
    }
    let lk = |mat: &Vec<Vec<i64>>, i: usize, j: usize| -> i64 {
        if i < j {
            mat[i][j]
        } else {
            mat[j][i]
        }
    };
    let half = m / 2;
    // strand 0 pinned to side A
    'masks: for mask in 0u32..(1u32 << (m - 1)) {
        let in_b = |s: usize| -> bool { s != 0 && (mask >> (s - 1)) & 1 == 1 };
        let b: Vec<usize> = (0..m).filter(|&s| in_b(s)).collect();
        if b.len() != half {
            continue;
        }
        let a: Vec<usize> = (0..m).filter(|&s| !in_b(s)).collect();
        // no nonzero cross pairs in any witness
        for mat in matrices {
            for &i in &a {
                for &j in &b {
                    if lk(mat, i, j) != 0 {
                        continue 'masks;
                    }
                }
            }
        }
        // search for a simultaneous sign-reversing bijection A → B
        let mut assignment: Vec<usize> = Vec::new();
        let mut used = vec![false; half];
        if assign_reversing(&a, &b, matrices, &lk, &mut assignment, &mut used) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Backtracking extension of a partial bijection `a[t] ↦ b[assignment[t]]`
/// required to negate every witness linking number.
fn assign_reversing(
    a: &[usize],
    b: &[usize],
    matrices: &[Vec<Vec<i64>>],
    lk: &impl Fn(&Vec<Vec<i64>>, usize, usize) -> i64,
    assignment: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let depth = assignment.len();
    if depth == a.len() {
        return true;
    }
    for cand in 0..b.len() {
        if used[cand] {
            continue;
        }
        let consistent = matrices.iter().all(|mat| {
            (0..depth)
                .all(|t| lk(mat, b[cand], b[assignment[t]]) == -lk(mat, a[depth], a[t]))
        });
        if consistent {
            used[cand] = true;
            assignment.push(cand);
            if assign_reversing(a, b, matrices, lk, assignment, used) {
                return true;
            }
            assignment.pop();
            used[cand] = false;
        }
    }
    false
}
