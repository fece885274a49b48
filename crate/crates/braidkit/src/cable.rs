//! Cable structures on the disk: block embeddings `ι_j`, the 0-twist
//! cabling `β`, the semidirect splitting `F`, interior/exterior
//! projections for size-2 cables, crossed vectors, the cabling
//! classifier, the divisibility screens, and exhaustive symmetric-group
//! homomorphism enumeration.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Permutation};
use crate::error::{Error, Result};
use crate::hom::{standard_hom, transvect, Homomorphism, StandardKind};

/// A partition of the strands `1..m` into consecutive cables of the given
/// sizes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CableStructure {
    pattern: Vec<usize>,
}

impl CableStructure {
    pub fn new(pattern: Vec<usize>) -> Result<Self> {
        if pattern.is_empty() || pattern.contains(&0) {
            return Err(Error::Cable("cable sizes must be positive".into()));
        }
        Ok(CableStructure { pattern })
    }

    /// The uniform pattern `[2, 2, …, 2]` with `k` cables.
    pub fn uniform_pairs(k: usize) -> Result<Self> {
        Self::new(vec![2; k])
    }

    pub fn pattern(&self) -> &[usize] {
        &self.pattern
    }

    pub fn cable_count(&self) -> usize {
        self.pattern.len()
    }

    /// Total strand count `m = Σ p_j`.
    pub fn total(&self) -> usize {
        self.pattern.iter().sum()
    }

    /// Number of strands before cable `j` (1-based).
    pub fn offset(&self, j: usize) -> usize {
        self.pattern[..j - 1].iter().sum()
    }

    /// The cable (1-based) containing the 1-based strand, with the strand's
    /// 0-based position inside it.
    pub fn cable_of(&self, strand: usize) -> (usize, usize) {
        let mut acc = 0;
        for (j, &p) in self.pattern.iter().enumerate() {
            if strand <= acc + p {
                return (j + 1, strand - acc - 1);
            }
            acc += p;
        }
        unreachable!("strand out of range")
    }
}

impl fmt::Display for CableStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P:")?;
        for p in &self.pattern {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

impl FromStr for CableStructure {
    type Err = Error;

    /// Parse `"P: 2 2 2"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let body = s
            .strip_prefix("P:")
            .ok_or_else(|| Error::Parse(format!("expected 'P:' header in {s:?}")))?;
        let pattern: Vec<usize> = body
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad cable size {tok:?}")))
            })
            .collect::<Result<_>>()?;
        CableStructure::new(pattern)
    }
}

/// The standard inclusion `ι_j : B_{p_j} → B_m` into cable `j`'s strand
/// block.
pub fn iota(j: usize, f: &BraidWord, cs: &CableStructure) -> Result<BraidWord> {
    if j < 1 || j > cs.cable_count() {
        return Err(Error::Cable(format!("no cable {j} in {cs}")));
    }
    if f.strands() != cs.pattern()[j - 1] {
        return Err(Error::Cable(format!(
            "iota({j}): word on {} strands does not fit cable of size {}",
            f.strands(),
            cs.pattern()[j - 1]
        )));
    }
    let shift = cs.offset(j) as i32;
    BraidWord::new(
        cs.total(),
        f.letters().iter().map(|&l| l + l.signum() * shift),
    )
}

/// The positive block transposition passing a block of `p` strands over a
/// block of `q` strands, both starting after `offset` strands.
fn block_transposition(offset: usize, p: usize, q: usize, total: usize) -> BraidWord {
    let s = offset as i32;
    let mut letters = Vec::with_capacity(p * q);
    for j in (1..=p as i32).rev() {
        for t in 0..q as i32 {
            letters.push(s + j + t);
        }
    }
    BraidWord::new(total, letters).expect("letters in range")
}

/// The 0-twist cabling `β : B_k → B_m`: each strand of `w` is blown up
/// into a parallel cable with no internal crossings. Defined only when
/// `w`'s permutation moves cables to cables of equal size.
pub fn beta(w: &BraidWord, cs: &CableStructure) -> Result<BraidWord> {
    if w.strands() != cs.cable_count() {
        return Err(Error::Cable(format!(
            "beta: word on {} strands vs {} cables",
            w.strands(),
            cs.cable_count()
        )));
    }
    let total = cs.total();
    let mut sizes: Vec<usize> = cs.pattern().to_vec();
    let mut out = BraidWord::identity(total);
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize; // crossing of cable slots i, i+1
        let offset: usize = sizes[..i - 1].iter().sum();
        let (p, q) = (sizes[i - 1], sizes[i]);
        let step = if l > 0 {
            block_transposition(offset, p, q, total)
        } else {
            // inverse of the positive crossing from the swapped state
            block_transposition(offset, q, p, total).inverse()
        };
        out = out.compose(&step)?;
        sizes.swap(i - 1, i);
    }
    if sizes != cs.pattern() {
        return Err(Error::Cable(format!(
            "beta: permutation of {w} moves cables to unequal sizes"
        )));
    }
    Ok(out)
}

/// An element of the semidirect product `B_k ⋉ ∏_j B_{p_j}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemidirectElement {
    pub exterior: BraidWord,
    pub interiors: Vec<BraidWord>,
}

impl SemidirectElement {
    pub fn new(exterior: BraidWord, interiors: Vec<BraidWord>) -> Self {
        SemidirectElement {
            exterior,
            interiors,
        }
    }
}

/// The splitting `F(f_1, …, f_k, f_e) = ι_1(f_1)⋯ι_k(f_k)·β(f_e)`.
pub fn embed_f(e: &SemidirectElement, cs: &CableStructure) -> Result<BraidWord> {
    if e.interiors.len() != cs.cable_count() {
        return Err(Error::Cable(format!(
            "embed_f: {} interiors for {} cables",
            e.interiors.len(),
            cs.cable_count()
        )));
    }
    let mut out = BraidWord::identity(cs.total());
    for (j, f) in e.interiors.iter().enumerate() {
        out = out.compose(&iota(j + 1, f, cs)?)?;
    }
    out.compose(&beta(&e.exterior, cs)?)
}

/// The permutation of cables induced by `w`, provided `w` maps each
/// cable's strand set onto a cable's strand set (of equal size).
pub fn cable_permutation(w: &BraidWord, cs: &CableStructure) -> Result<Permutation> {
    let perm = w.permutation();
    let k = cs.cable_count();
    let mut map = vec![usize::MAX; k];
    for j in 1..=k {
        let p = cs.pattern()[j - 1];
        let offset = cs.offset(j);
        let mut targets: Vec<usize> = (1..=p).map(|t| perm.image(offset + t)).collect();
        targets.sort_unstable();
        let (tj, _) = cs.cable_of(targets[0]);
        let t_offset = cs.offset(tj);
        let expected: Vec<usize> = (1..=cs.pattern()[tj - 1]).map(|t| t_offset + t).collect();
        if targets != expected {
            return Err(Error::Cable(format!(
                "word does not preserve the cable partition (cable {j} scattered)"
            )));
        }
        map[j - 1] = tj - 1;
    }
    Permutation::from_map(map)
}

/// The signed count of crossings between the two strands that start in
/// size-2 cable `j` (the interior writhe of that cable).
pub fn interior_writhe(w: &BraidWord, j: usize, cs: &CableStructure) -> Result<i64> {
    if j < 1 || j > cs.cable_count() {
        return Err(Error::Cable(format!("no cable {j} in {cs}")));
    }
    if cs.pattern()[j - 1] != 2 {
        return Err(Error::Cable(format!(
            "interior_writhe needs a size-2 cable, cable {j} has size {}",
            cs.pattern()[j - 1]
        )));
    }
    cable_permutation(w, cs)?; // validates partition preservation
    let m = cs.total();
    if w.strands() != m {
        return Err(Error::StrandMismatch {
            left: w.strands(),
            right: m,
        });
    }
    let offset = cs.offset(j);
    let tracked = [offset + 1, offset + 2]; // 1-based strand ids
    // strand occupying each position, evolving through the word
    let mut at: Vec<usize> = (1..=m).collect();
    let mut writhe = 0i64;
    for &l in w.letters() {
        let p = l.unsigned_abs() as usize; // positions p, p+1 cross
        let (s1, s2) = (at[p - 1], at[p]);
        if tracked.contains(&s1) && tracked.contains(&s2) {
            writhe += l.signum() as i64;
        }
        at.swap(p - 1, p);
    }
    Ok(writhe)
}

/// The exterior projection `Π_e`: delete all strands except each cable's
/// leading strand and read off the induced word on `k` strands.
pub fn exterior_projection(w: &BraidWord, cs: &CableStructure) -> Result<BraidWord> {
    cable_permutation(w, cs)?;
    let m = cs.total();
    if w.strands() != m {
        return Err(Error::StrandMismatch {
            left: w.strands(),
            right: m,
        });
    }
    let k = cs.cable_count();
    let leaders: Vec<bool> = {
        let mut v = vec![false; m + 1];
        for j in 1..=k {
            v[cs.offset(j) + 1] = true;
        }
        v
    };
    let mut at: Vec<usize> = (1..=m).collect();
    let mut letters = Vec::new();
    for &l in w.letters() {
        let p = l.unsigned_abs() as usize;
        let (s1, s2) = (at[p - 1], at[p]);
        if leaders[s1] && leaders[s2] {
            // rank of position p among positions holding kept strands
            let rank = at[..p - 1].iter().filter(|&&s| leaders[s]).count() + 1;
            letters.push(l.signum() * rank as i32);
        }
        at.swap(p - 1, p);
    }
    BraidWord::new(k, letters)
}

/// Decompose a partition-preserving word over an all-size-2 pattern into
/// its exterior word and per-cable interior twists (`Lemma`-style inverse
/// of [`embed_f`] on that pattern).
pub fn decompose(w: &BraidWord, cs: &CableStructure) -> Result<SemidirectElement> {
    if cs.pattern().iter().any(|&p| p != 2) {
        return Err(Error::Cable(
            "decompose is defined only for all-size-2 patterns".into(),
        ));
    }
    let exterior = exterior_projection(w, cs)?;
    let mut interiors = Vec::new();
    for j in 1..=cs.cable_count() {
        let t = interior_writhe(w, j, cs)?;
        interiors.push(BraidWord::generator(2, 1)?.pow(t));
    }
    Ok(SemidirectElement::new(exterior, interiors))
}

/// Per-cable twist counts of a section defect.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossedVector {
    pub entries: Vec<i64>,
}

/// The crossed vector `d_h(g) = h(g)·β(g)⁻¹` read off as per-cable
/// interior writhes, for `h : B_n → B_2n` in cabling position over the
/// pattern `[2, …, 2]`.
pub fn crossed_vector(h: &Homomorphism, g: &BraidWord) -> Result<CrossedVector> {
    let n = h.source_strands();
    if g.strands() != n {
        return Err(Error::StrandMismatch {
            left: g.strands(),
            right: n,
        });
    }
    if h.target_strands() != 2 * n {
        return Err(Error::NonSection(format!(
            "crossed_vector needs target 2n, got {} for n = {n}",
            h.target_strands()
        )));
    }
    let cs = CableStructure::uniform_pairs(n)?;
    let image = h.apply(g)?;
    let defect = image.compose(&beta(g, &cs)?.inverse())?;
    let entries = (1..=n)
        .map(|j| interior_writhe(&defect, j, &cs))
        .collect::<Result<Vec<_>>>()?;
    Ok(CrossedVector { entries })
}

/// Output of the cabling classifier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CablingClassification {
    pub k_canonical: i64,
    pub x: i64,
    pub y: i64,
    /// Row `i` is the crossed vector of `σ_{i+1}` (1-based generator
    /// `i+1` at 0-based row `i`); entry `j` is the twist on cable `j+1`.
    pub interior_matrix: Vec<Vec<i64>>,
    pub conjugator_exponents: Vec<i64>,
    pub transvection_exponent: i64,
    pub certified: bool,
}

/// Classify a cabling section `h : B_n → B_2n` up to equivalence: recover
/// the canonical twist `k`, the renormalizing conjugator exponents and
/// transvection, and certify by rebuilding the standard map.
///
/// Extraction follows the normal-form analysis: for each generator, the
/// crossed vector must be constant off the band `{i, i+1}` (value `x/2`);
/// the band sum `y` must be constant across generators; `k = y − x`. The
/// conjugator exponents solve `m_{i+1} − m_i + k_{i+1,i} − x/2 = 0` with
/// `m₁ = 0`.
pub fn classify_cabling(h: &Homomorphism) -> Result<CablingClassification> {
    let n = h.source_strands();
    if n < 2 {
        return Err(Error::NonSection("source must have at least 2 strands".into()));
    }
    if h.target_strands() != 2 * n {
        return Err(Error::NonSection(format!(
            "expected target {} strands, got {}",
            2 * n,
            h.target_strands()
        )));
    }
    let cs = CableStructure::uniform_pairs(n)?;
    // section precondition: each image preserves the partition and projects
    // to the correct exterior generator, up to one common central defect
    // (a transvection by the target's center shifts every projection by
    // the exterior center)
    let mut central_defect: Option<BraidWord> = None;
    for i in 1..n {
        let image = h.images()[i - 1].clone();
        let ext = exterior_projection(&image, &cs)
            .map_err(|e| Error::NonSection(format!("image of generator {i}: {e}")))?;
        let defect = BraidWord::generator(n, i as i32)?.inverse().compose(&ext)?;
        match &central_defect {
            None => central_defect = Some(defect),
            Some(prev) => {
                if !prev.equals(&defect)? {
                    return Err(Error::NonSection(format!(
                        "exterior defect of generator {i} differs from earlier generators"
                    )));
                }
            }
        }
    }
    let defect = central_defect.expect("n >= 2 gives at least one generator");
    // identify the defect as a power of the exterior center z_n
    let h = if defect.is_trivial()? {
        h.clone()
    } else {
        let z_ext = crate::braid::named(crate::braid::NamedTag::Alpha1, n)?.pow(n as i64);
        let lz = z_ext.exponent_sum();
        let t = defect.exponent_sum();
        if lz == 0 || t % lz != 0 {
            return Err(Error::NonSection(
                "exterior defect is not a power of the center".into(),
            ));
        }
        let t = t / lz;
        if !defect.equals(&z_ext.pow(t))? {
            return Err(Error::NonSection(
                "exterior defect is not a power of the center".into(),
            ));
        }
        let z_target = crate::braid::named(crate::braid::NamedTag::CenterZ, 2 * n)?;
        transvect(h, &z_target.pow(-t))?
    };
    let h = &h;
    // crossed vectors of the generators
    let mut matrix: Vec<Vec<i64>> = Vec::new();
    for i in 1..n {
        let d = crossed_vector(h, &BraidWord::generator(n, i as i32)?)?;
        matrix.push(d.entries);
    }
    // off-band consistency fixes x; band sums fix y
    let mut half_x: Option<i64> = None;
    let mut y: Option<i64> = None;
    for (row, d) in matrix.iter().enumerate() {
        let i = row + 1;
        for (jj, &v) in d.iter().enumerate() {
            let j = jj + 1;
            if j == i || j == i + 1 {
                continue;
            }
            match half_x {
                None => half_x = Some(v),
                Some(hx) if hx == v => {}
                Some(hx) => {
                    return Err(Error::NonSection(format!(
                        "inconsistent off-band twist: {v} at (σ_{i}, cable {j}) vs {hx}"
                    )))
                }
            }
        }
        let band = d[i - 1] + d[i];
        match y {
            None => y = Some(band),
            Some(prev) if prev == band => {}
            Some(prev) => {
                return Err(Error::NonSection(format!(
                    "band sum {band} of σ_{i} disagrees with {prev}"
                )))
            }
        }
    }
    // n = 2 has no off-band entries; the only crossed datum is the band sum
    let half_x = half_x.unwrap_or(0);
    let x = 2 * half_x;
    let y = y.expect("at least one generator");
    let k_canonical = y - x;
    // m₁ = 0; m_{i+1} = m_i + x/2 − d(σ_i)[i+1]
    let mut m = vec![0i64; n];
    for i in 1..n {
        m[i] = m[i - 1] + half_x - matrix[i - 1][i];
    }
    let transvection_exponent = -half_x;
    // certification: conjugate by ι(m), transvect by τ^{−x/2}, compare with
    // the standard k-twist map
    let certified = certify(h, &cs, &m, transvection_exponent, k_canonical)?;
    Ok(CablingClassification {
        k_canonical,
        x,
        y,
        interior_matrix: matrix,
        conjugator_exponents: m,
        transvection_exponent,
        certified,
    })
}

/// The twist element `τ = σ₁σ₃⋯σ_{2n−1}` of `B_2n` (one positive crossing
/// inside every cable).
pub fn tau(n: usize) -> Result<BraidWord> {
    BraidWord::new(2 * n, (0..n).map(|j| (2 * j + 1) as i32))
}

fn certify(
    h: &Homomorphism,
    cs: &CableStructure,
    m: &[i64],
    t_exp: i64,
    k: i64,
) -> Result<bool> {
    let n = h.source_strands();
    // conjugator ι₁(σ₁^{m₁})⋯ι_n(σ₁^{m_n})
    let mut conj = BraidWord::identity(2 * n);
    for (j, &mj) in m.iter().enumerate() {
        conj = conj.compose(&iota(j + 1, &BraidWord::generator(2, 1)?.pow(mj), cs)?)?;
    }
    let conjugated = Homomorphism::new(
        n,
        2 * n,
        h.images()
            .iter()
            .map(|im| conj.compose(im)?.compose(&conj.inverse()))
            .collect::<Result<Vec<_>>>()?,
    )?;
    let t = tau(n)?.pow(t_exp);
    let renormalized = transvect(&conjugated, &t)?;
    if k.unsigned_abs() > i32::MAX as u64 {
        return Err(Error::Cable("twist exponent out of range".into()));
    }
    let standard = standard_hom(StandardKind::KTwistCabling(k as i32), n)?;
    for (a, b) in renormalized.images().iter().zip(standard.images()) {
        if !a.equals(b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `n(n−1) | m(m−1)`.
pub fn special_constraint(n: u64, m: u64) -> bool {
    let nn = n as u128 * (n as u128).saturating_sub(1);
    let mm = m as u128 * (m as u128).saturating_sub(1);
    if nn == 0 {
        return true;
    }
    mm.is_multiple_of(nn)
}

/// Same test in arbitrary precision (independent cross-check).
pub fn special_constraint_bigint(n: u64, m: u64) -> bool {
    let nn = BigInt::from(n) * BigInt::from(n.saturating_sub(1));
    let mm = BigInt::from(m) * BigInt::from(m.saturating_sub(1));
    if nn.is_zero() {
        return true;
    }
    (mm % nn).is_zero()
}

/// Arithmetic content of the range corollary: for `n ≥ 5` and
/// `m ≠ n`, `m ≤ 2n`, the divisibility constraint must fail. Outside that
/// domain the check is vacuously true.
pub fn corollary_range_check(n: u64, m: u64) -> bool {
    let applicable = n >= 5 && m != n && m <= 2 * n;
    !applicable || !special_constraint(n, m)
}

/// Report of an exhaustive enumeration of relation-satisfying tuples in
/// `S_k^{n−1}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SymHomReport {
    pub n: usize,
    pub k: usize,
    pub total_tuples: u64,
    pub solutions: u64,
    pub all_cyclic: bool,
    /// One-line images (0-based) of a non-cyclic solution, if any.
    pub noncyclic_example: Option<Vec<Vec<usize>>>,
}

fn perm_order(p: &Permutation) -> usize {
    let mut acc = p.clone();
    let mut ord = 1;
    while !acc.is_identity() {
        acc = acc.compose(p);
        ord += 1;
    }
    ord
}

/// Subgroup generated by the tuple, by closure; cyclic iff some element's
/// order equals the group order.
fn generates_cyclic(gens: &[Permutation]) -> bool {
    let size = gens.first().map(|g| g.size()).unwrap_or(0);
    let mut elems: Vec<Permutation> = vec![Permutation::identity(size)];
    let mut frontier = elems.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for e in &frontier {
            for g in gens {
                let prod = e.compose(g);
                if !elems.contains(&prod) {
                    elems.push(prod.clone());
                    next.push(prod);
                }
            }
        }
        frontier = next;
    }
    let order = elems.len();
    elems.iter().any(|e| perm_order(e) == order)
}

/// Enumerate all `(x₁, …, x_{n−1}) ∈ S_k^{n−1}` satisfying the braid and
/// far-commutation relations, and report whether every solution generates
/// a cyclic subgroup.
pub fn sym_hom_enumerate(n: usize, k: usize) -> Result<SymHomReport> {
    if n < 2 || k < 1 {
        return Err(Error::Parse("need n >= 2 and k >= 1".into()));
    }
    let all: Vec<Permutation> = permutations_of(k);
    let s = all.len() as u64;
    let tuples = s.checked_pow((n - 1) as u32);
    match tuples {
        Some(t) if t <= 100_000_000 => {}
        _ => {
            return Err(Error::SizeGuard(format!(
                "|S_{k}|^{} tuples exceed the enumeration budget",
                n - 1
            )))
        }
    }
    let relations_ok = |tuple: &[&Permutation]| -> bool {
        for i in 0..n - 2 {
            let lhs = tuple[i].compose(tuple[i + 1]).compose(tuple[i]);
            let rhs = tuple[i + 1].compose(tuple[i]).compose(tuple[i + 1]);
            if lhs != rhs {
                return false;
            }
        }
        for i in 0..n - 1 {
            for j in i + 2..n - 1 {
                if tuple[i].compose(tuple[j]) != tuple[j].compose(tuple[i]) {
                    return false;
                }
            }
        }
        true
    };
    // partition the tuple space over the first coordinate
    type Partial = (u64, u64, Option<Vec<Vec<usize>>>);
    let partials: Vec<Partial> = all
        .par_iter()
        .map(|first| {
            let mut solutions = 0u64;
            let mut noncyclic: Option<Vec<Vec<usize>>> = None;
            let mut idx = vec![0usize; n - 2];
            loop {
                let tuple: Vec<&Permutation> = std::iter::once(first)
                    .chain(idx.iter().map(|&t| &all[t]))
                    .collect();
                if relations_ok(&tuple) {
                    solutions += 1;
                    if noncyclic.is_none() {
                        let owned: Vec<Permutation> =
                            tuple.iter().map(|p| (*p).clone()).collect();
                        if !generates_cyclic(&owned) {
                            noncyclic =
                                Some(owned.iter().map(|p| p.map().to_vec()).collect());
                        }
                    }
                }
                // odometer over the remaining coordinates
                let mut carry = true;
                for slot in idx.iter_mut() {
                    *slot += 1;
                    if *slot < all.len() {
                        carry = false;
                        break;
                    }
                    *slot = 0;
                }
                if carry {
                    break;
                }
            }
            (solutions, 0u64, noncyclic)
        })
        .collect();
    let mut solutions = 0;
    let mut noncyclic_example = None;
    for (sol, _, nc) in partials {
        solutions += sol;
        if noncyclic_example.is_none() {
            noncyclic_example = nc;
        }
    }
    Ok(SymHomReport {
        n,
        k,
        total_tuples: tuples.unwrap(),
        solutions,
        all_cyclic: noncyclic_example.is_none(),
        noncyclic_example,
    })
}

fn permutations_of(k: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    heap_permute(&mut current, k, &mut out);
    out
}

fn heap_permute(arr: &mut Vec<usize>, size: usize, out: &mut Vec<Permutation>) {
    if size == 1 {
        out.push(Permutation::from_map(arr.clone()).expect("bijection"));
        return;
    }
    for i in 0..size {
        heap_permute(arr, size - 1, out);
        if size % 2 == 1 {
            arr.swap(0, size - 1);
        } else {
            arr.swap(i, size - 1);
        }
    }
}
