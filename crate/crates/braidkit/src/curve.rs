//! Curves on the punctured disk as conjugates of round curves, with
//! half-twists, Dehn twists, disjointness via twist commutation, and the
//! rotation-intersection harnesses.
//!
//! Every first-class curve surrounds exactly two punctures: `w(c_i)` for a
//! round curve `c_i` and a braid `w`. Disjointness is decided through the
//! standard mapping-class bridge: two Dehn twists commute iff the curves
//! have zero geometric intersection.

use std::str::FromStr;
use std::{collections::HashSet, fmt};

use serde::{Deserialize, Serialize};

use crate::braid::{named, BraidWord, NamedTag};
use crate::error::{Error, Result};
use crate::lamination::{standard_curve_coords, LaminationCoords};

/// The curve `conjugator(c_base)` on the disk with `strands` punctures.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveSpec {
    strands: usize,
    base: usize,
    conjugator: BraidWord,
}

/// Outcome of a disjointness test between two curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DisjointnessVerdict {
    Equal,
    Disjoint,
    Intersecting,
}

impl fmt::Display for DisjointnessVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DisjointnessVerdict::Equal => "Equal",
            DisjointnessVerdict::Disjoint => "Disjoint",
            DisjointnessVerdict::Intersecting => "Intersecting",
        };
        f.write_str(s)
    }
}

impl CurveSpec {
    pub fn new(strands: usize, base: usize, conjugator: BraidWord) -> Result<Self> {
        if base < 1 || base >= strands {
            return Err(Error::IndexOutOfRange {
                index: base,
                strands,
            });
        }
        if conjugator.strands() != strands {
            return Err(Error::StrandMismatch {
                left: strands,
                right: conjugator.strands(),
            });
        }
        Ok(CurveSpec {
            strands,
            base,
            conjugator,
        })
    }

    /// The round curve `c_i` itself (empty conjugator).
    pub fn round(strands: usize, i: usize) -> Result<Self> {
        Self::new(strands, i, BraidWord::identity(strands))
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn conjugator(&self) -> &BraidWord {
        &self.conjugator
    }

    /// The half-twist `H` about this curve: `w σ_base w⁻¹`.
    pub fn half_twist_word(&self) -> BraidWord {
        let sigma = BraidWord::generator(self.strands, self.base as i32).expect("valid base");
        self.conjugator
            .compose(&sigma)
            .and_then(|u| u.compose(&self.conjugator.inverse()))
            .expect("equal strand counts")
    }

    /// The Dehn twist about this curve: the half-twist squared (always a
    /// pure braid).
    pub fn dehn_twist_word(&self) -> BraidWord {
        let h = self.half_twist_word();
        h.compose(&h).expect("equal strand counts")
    }

    /// The image curve `g(self)`: prepends `g` to the conjugator.
    pub fn transform(&self, g: &BraidWord) -> Result<Self> {
        CurveSpec::new(self.strands, self.base, g.compose(&self.conjugator)?)
    }

    /// Lamination coordinates of this curve (image of the round base).
    pub fn coords(&self) -> Result<LaminationCoords> {
        standard_curve_coords(self.strands, self.base)?.apply_word(&self.conjugator)
    }
}

impl fmt::Display for CurveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}: {} |", self.strands, self.base)?;
        for l in self.conjugator.letters() {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl FromStr for CurveSpec {
    type Err = Error;

    /// Parse `"Cn: i | <letters>"`, e.g. `"C5: 1 | 4 3"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let rest = s
            .strip_prefix('C')
            .ok_or_else(|| Error::Parse(format!("expected 'Cn:' header in {s:?}")))?;
        let (n_str, body) = rest
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected ':' after strand count in {s:?}")))?;
        let strands: usize = n_str
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad strand count {n_str:?}")))?;
        let (base_str, word_str) = body
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("expected '|' separator in {s:?}")))?;
        let base: usize = base_str
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad base index {base_str:?}")))?;
        let letters: Vec<i32> = word_str
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad letter {tok:?}")))
            })
            .collect::<Result<_>>()?;
        CurveSpec::new(strands, base, BraidWord::new(strands, letters)?)
    }
}

/// Equality of curves: equality of their half-twists in the group.
pub fn curves_equal(c: &CurveSpec, d: &CurveSpec) -> Result<bool> {
    if c.strands() != d.strands() {
        return Err(Error::StrandMismatch {
            left: c.strands(),
            right: d.strands(),
        });
    }
    c.half_twist_word().equals(&d.half_twist_word())
}

/// Disjointness of curves, decided by Dehn-twist commutation: `Equal` if
/// the curves coincide, `Disjoint` if the twists commute, else
/// `Intersecting` (nonzero geometric intersection).
pub fn curves_disjoint(c: &CurveSpec, d: &CurveSpec) -> Result<DisjointnessVerdict> {
    if curves_equal(c, d)? {
        return Ok(DisjointnessVerdict::Equal);
    }
    if c.dehn_twist_word().commutes(&d.dehn_twist_word())? {
        Ok(DisjointnessVerdict::Disjoint)
    } else {
        Ok(DisjointnessVerdict::Intersecting)
    }
}

/// A set of pairwise disjoint curves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multicurve {
    components: Vec<CurveSpec>,
}

impl Multicurve {
    /// Build from components, dropping duplicates (Equal verdicts) and
    /// rejecting any intersecting pair.
    pub fn new(components: Vec<CurveSpec>) -> Result<Self> {
        let mut kept: Vec<CurveSpec> = Vec::new();
        for c in components {
            let mut duplicate = false;
            for k in &kept {
                match curves_disjoint(k, &c)? {
                    DisjointnessVerdict::Equal => {
                        duplicate = true;
                        break;
                    }
                    DisjointnessVerdict::Disjoint => {}
                    DisjointnessVerdict::Intersecting => {
                        return Err(Error::Parse(format!(
                            "multicurve components intersect: {k} vs {c}"
                        )));
                    }
                }
            }
            if !duplicate {
                kept.push(c);
            }
        }
        Ok(Multicurve { components: kept })
    }

    pub fn components(&self) -> &[CurveSpec] {
        &self.components
    }
}

/// All curves `w(c_i)` with `|w| ≤ max_conj_len`, deduplicated by
/// lamination coordinates.
pub fn enumerate_curves(n: usize, max_conj_len: usize) -> Result<Vec<CurveSpec>> {
    let gens: Vec<i32> = (1..n as i32).flat_map(|i| [i, -i]).collect();
    let mut words: Vec<Vec<i32>> = vec![Vec::new()];
    let mut frontier: Vec<Vec<i32>> = vec![Vec::new()];
    for _ in 0..max_conj_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &g in &gens {
                // skip immediate cancellations: they duplicate shorter words
                if w.last() == Some(&-g) {
                    continue;
                }
                let mut ext = w.clone();
                ext.push(g);
                next.push(ext);
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    let mut seen: HashSet<LaminationCoords> = HashSet::new();
    let mut curves = Vec::new();
    for i in 1..n {
        for w in &words {
            let curve = CurveSpec::new(n, i, BraidWord::new(n, w.iter().copied())?)?;
            if seen.insert(curve.coords()?) {
                curves.push(curve);
            }
        }
    }
    Ok(curves)
}

/// One row of a rotation-intersection report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RotationEntry {
    pub curve: String,
    pub k: usize,
    pub epsilon: i32,
    pub verdict: DisjointnessVerdict,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RotationReport {
    pub strands: usize,
    pub k: usize,
    pub entries: Vec<RotationEntry>,
    pub counterexamples: usize,
}

/// For each curve `c` and each `ε ∈ {±1}`, record
/// `curves_disjoint(c, α_k^ε(c))`; any verdict other than `Intersecting`
/// is a counterexample (the rotations are expected to displace every
/// 2-point curve transversally).
pub fn rotation_intersection_report(
    n: usize,
    k: usize,
    curves: &[CurveSpec],
) -> Result<RotationReport> {
    if !(k == 1 || k == 2) {
        return Err(Error::Parse("rotation index k must be 1 or 2".into()));
    }
    let alpha = named(
        if k == 1 { NamedTag::Alpha1 } else { NamedTag::Alpha2 },
        n,
    )?;
    let mut entries = Vec::new();
    let mut counterexamples = 0;
    for c in curves {
        if c.strands() != n {
            return Err(Error::StrandMismatch {
                left: n,
                right: c.strands(),
            });
        }
        for epsilon in [1i32, -1] {
            let rot = if epsilon == 1 { alpha.clone() } else { alpha.inverse() };
            let verdict = curves_disjoint(c, &c.transform(&rot)?)?;
            if verdict != DisjointnessVerdict::Intersecting {
                counterexamples += 1;
            }
            entries.push(RotationEntry {
                curve: c.to_string(),
                k,
                epsilon,
                verdict,
            });
        }
    }
    Ok(RotationReport {
        strands: n,
        k,
        entries,
        counterexamples,
    })
}

/// Which rotation powers a single curve must avoid to satisfy the
/// multicurve hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RotationHypothesis {
    /// `i(c, α₁^i(c)) = 0` for `2 ≤ i ≤ n−2`.
    Alpha1Range,
    /// `i(c, α₂^i(c)) = 0` for `2 ≤ i ≤ n−3`.
    Alpha2Range,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MulticurveEntry {
    pub curve: String,
    pub verdicts: Vec<DisjointnessVerdict>,
    pub satisfies_hypothesis: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MulticurveReport {
    pub strands: usize,
    pub entries: Vec<MulticurveEntry>,
    /// Pairs of distinct, mutually disjoint curves whose two-component
    /// union still satisfies the hypothesis (all cross-rotation
    /// intersections vanish as well) — counterexamples to the
    /// single-curve conclusion.
    pub counterexample_pairs: Vec<(String, String)>,
}

/// Evaluate the rotation-disjointness hypothesis for each candidate curve
/// and flag any pair of distinct, mutually disjoint satisfying curves.
pub fn rotation_multicurve_report(
    n: usize,
    hypothesis: RotationHypothesis,
    curves: &[CurveSpec],
) -> Result<MulticurveReport> {
    let (alpha, hi) = match hypothesis {
        RotationHypothesis::Alpha1Range => {
            if n < 5 {
                return Err(Error::Parse("Alpha1Range needs n >= 5".into()));
            }
            (named(NamedTag::Alpha1, n)?, n - 2)
        }
        RotationHypothesis::Alpha2Range => {
            if n < 6 {
                return Err(Error::Parse("Alpha2Range needs n >= 6".into()));
            }
            (named(NamedTag::Alpha2, n)?, n - 3)
        }
    };
    let mut entries = Vec::new();
    let mut satisfying: Vec<&CurveSpec> = Vec::new();
    for c in curves {
        if c.strands() != n {
            return Err(Error::StrandMismatch {
                left: n,
                right: c.strands(),
            });
        }
        let mut verdicts = Vec::new();
        let mut ok = true;
        for p in 2..=hi {
            let v = curves_disjoint(c, &c.transform(&alpha.pow(p as i64))?)?;
            // zero intersection means Disjoint or Equal
            if v == DisjointnessVerdict::Intersecting {
                ok = false;
            }
            verdicts.push(v);
        }
        if ok {
            satisfying.push(c);
        }
        entries.push(MulticurveEntry {
            curve: c.to_string(),
            verdicts,
            satisfies_hypothesis: ok,
        });
    }
    // a two-component multicurve {c, d} satisfies the hypothesis only if
    // the rotation powers also keep c away from the images of d and vice
    // versa; pairs failing a cross term are not counterexamples
    let mut counterexample_pairs = Vec::new();
    for (idx, c) in satisfying.iter().enumerate() {
        for d in satisfying.iter().skip(idx + 1) {
            if curves_disjoint(c, d)? != DisjointnessVerdict::Disjoint {
                continue;
            }
            let mut union_ok = true;
            'powers: for p in 2..=hi {
                let rot = alpha.pow(p as i64);
                for (u, v) in [(c, d), (d, c)] {
                    if curves_disjoint(u, &v.transform(&rot)?)?
                        == DisjointnessVerdict::Intersecting
                    {
                        union_ok = false;
                        break 'powers;
                    }
                }
            }
            if union_ok {
                counterexample_pairs.push((c.to_string(), d.to_string()));
            }
        }
    }
    Ok(MulticurveReport {
        strands: n,
        entries,
        counterexample_pairs,
    })
}
