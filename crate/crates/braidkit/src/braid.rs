//! Braid words, group operations, abelianization, and permutation projection.
//!
//! A word in `B_n` is a sequence of nonzero integers: letter `j > 0` is the
//! Artin generator `σ_j`, and `-j` its inverse. Words multiply by
//! concatenation; `u·v` means "first `u`, then `v`" wherever an order
//! matters (permutations compose in that order).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::handle;
use crate::lamination;

/// Work budget for the word problem; one unit is one elementary rewriting
/// step in handle reduction.
pub const DEFAULT_FUEL: u64 = 1_000_000;

/// A word in the braid group `B_strands`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Build a word, validating every letter against the strand count.
    pub fn new(strands: usize, letters: impl IntoIterator<Item = i32>) -> Result<Self> {
        if strands < 1 {
            return Err(Error::Parse("strand count must be at least 1".into()));
        }
        let letters: Vec<i32> = letters.into_iter().collect();
        for &l in &letters {
            let idx = l.unsigned_abs() as usize;
            if l == 0 || idx >= strands {
                return Err(Error::InvalidLetter {
                    letter: l as i64,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// The identity of `B_strands` (empty word).
    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// The single generator `σ_i` (or `σ_i⁻¹` for negative `i`).
    pub fn generator(strands: usize, i: i32) -> Result<Self> {
        Self::new(strands, [i])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_strands(&self, other: &Self) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    /// Concatenate and freely reduce (cancel adjacent `j, -j`).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_strands(other)?;
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        for &l in self.letters.iter().chain(other.letters.iter()) {
            if letters.last() == Some(&-l) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// The group inverse: reversed sequence with negated letters.
    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// `self` raised to an integer power (negative powers invert first),
    /// freely reduced.
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = BraidWord::identity(self.strands);
        for _ in 0..k.unsigned_abs() {
            out = out.compose(&base).expect("equal strand counts");
        }
        out
    }

    /// Freely reduced copy of this word.
    pub fn freely_reduced(&self) -> Self {
        BraidWord::identity(self.strands)
            .compose(self)
            .expect("equal strand counts")
    }

    /// The abelianization `L : B_n → Z` (sum of letter signs).
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Image under the Artin projection `B_n → S_n`, letters applied
    /// left-to-right (`σ_i` acts as the transposition of positions
    /// `i, i+1`).
    pub fn permutation(&self) -> Permutation {
        let mut map: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            // a transposition is its own inverse, so the sign is irrelevant
            for slot in map.iter_mut() {
                if *slot == i {
                    *slot += 1;
                } else if *slot == i + 1 {
                    *slot -= 1;
                }
            }
        }
        Permutation { map }
    }

    /// Decide whether this word represents the identity of `B_strands`.
    ///
    /// Pipeline: free reduction, abelianization, Artin projection, and the
    /// lamination backend as fast sound certificates of nontriviality;
    /// handle reduction is the authoritative final step. Fuel exhaustion is
    /// reported as [`Error::Undecided`], never as a boolean.
    pub fn is_trivial_with_fuel(&self, fuel: u64) -> Result<bool> {
        let reduced = self.freely_reduced();
        if reduced.is_empty() {
            return Ok(true);
        }
        if reduced.exponent_sum() != 0 {
            return Ok(false);
        }
        if !reduced.permutation().is_identity() {
            return Ok(false);
        }
        // a braid that moves any lamination is nontrivial (sound certificate)
        if self.strands >= 3 && lamination::moves_default_family(&reduced) {
            return Ok(false);
        }
        handle::reduces_to_identity(&reduced, fuel)
    }

    /// [`Self::is_trivial_with_fuel`] at the default fuel.
    pub fn is_trivial(&self) -> Result<bool> {
        self.is_trivial_with_fuel(DEFAULT_FUEL)
    }

    /// Equality in the group: triviality of `u·v⁻¹`.
    pub fn equals_with_fuel(&self, other: &Self, fuel: u64) -> Result<bool> {
        self.compose(&other.inverse())?.is_trivial_with_fuel(fuel)
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.equals_with_fuel(other, DEFAULT_FUEL)
    }

    /// Commutation in the group: triviality of the commutator.
    pub fn commutes_with_fuel(&self, other: &Self, fuel: u64) -> Result<bool> {
        let comm = self
            .compose(other)?
            .compose(&self.inverse())?
            .compose(&other.inverse())?;
        comm.is_trivial_with_fuel(fuel)
    }

    pub fn commutes(&self, other: &Self) -> Result<bool> {
        self.commutes_with_fuel(other, DEFAULT_FUEL)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Parse the text format `"Bn: 1 2 -3"`; an empty letter list encodes
    /// the identity.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let rest = s
            .strip_prefix('B')
            .ok_or_else(|| Error::Parse(format!("expected 'Bn:' header in {s:?}")))?;
        let (n_str, letters_str) = rest
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected ':' after strand count in {s:?}")))?;
        let strands: usize = n_str
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad strand count {n_str:?}")))?;
        let mut letters = Vec::new();
        for tok in letters_str.split_whitespace() {
            let l: i32 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad letter {tok:?}")))?;
            letters.push(l);
        }
        BraidWord::new(strands, letters)
    }
}

/// A permutation of `{1..size}` in one-line notation (stored 0-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Permutation {
            map: (0..size).collect(),
        }
    }

    /// Build from a 0-based one-line image vector; must be a bijection.
    pub fn from_map(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n || seen[v] {
                return Err(Error::Parse("not a bijection".into()));
            }
            seen[v] = true;
        }
        Ok(Permutation { map })
    }

    pub fn size(&self) -> usize {
        self.map.len()
    }

    /// Image of the 1-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.map[i - 1] + 1
    }

    /// 0-based one-line images.
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self` then `other` (matching left-to-right word composition).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            map: self.map.iter().map(|&v| other.map[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut map = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            map[v] = i;
        }
        Permutation { map }
    }

    /// Cycle lengths in decreasing order (includes fixed points).
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.map[cur];
                len += 1;
            }
            cycles.push(len);
        }
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        cycles
    }
}

/// Tags for the named elements used throughout the toolkit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NamedTag {
    /// `α₁ = σ₁σ₂⋯σ_{n−1}`, rotation by one click.
    Alpha1,
    /// `α₂ = σ₁²σ₂⋯σ_{n−1}`.
    Alpha2,
    /// `z = α₁ⁿ`, generator of the center.
    CenterZ,
    /// The Garside element `Δ = σ₁σ₂σ₃σ₁σ₂σ₁` of `B₄`.
    GarsideDelta4,
    /// `σ₀ = α₁σ₃α₁⁻¹` in `B₄`.
    Sigma0of4,
}

/// The literal defining word of a named element.
pub fn named(tag: NamedTag, strands: usize) -> Result<BraidWord> {
    match tag {
        NamedTag::Alpha1 | NamedTag::Alpha2 | NamedTag::CenterZ => {
            if strands < 2 {
                return Err(Error::InvalidNamed {
                    reason: format!("{tag:?} requires at least 2 strands"),
                });
            }
        }
        NamedTag::GarsideDelta4 | NamedTag::Sigma0of4 => {
            if strands != 4 {
                return Err(Error::InvalidNamed {
                    reason: format!("{tag:?} requires exactly 4 strands"),
                });
            }
        }
    }
    let n = strands as i32;
    match tag {
        NamedTag::Alpha1 => BraidWord::new(strands, 1..n),
        NamedTag::Alpha2 => BraidWord::new(strands, std::iter::once(1).chain(1..n)),
        NamedTag::CenterZ => Ok(named(NamedTag::Alpha1, strands)?.pow(strands as i64)),
        NamedTag::GarsideDelta4 => BraidWord::new(4, [1, 2, 3, 1, 2, 1]),
        NamedTag::Sigma0of4 => {
            let a1 = named(NamedTag::Alpha1, 4)?;
            a1.compose(&BraidWord::generator(4, 3)?)?
                .compose(&a1.inverse())
        }
    }
}

/// Subgroups with a cheap membership test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgroupKind {
    /// Even braid group `B_n²`: kernel of the mod-2 abelianization.
    Even,
    /// Pure braid group: kernel of the Artin projection.
    Pure,
    /// Commutator subgroup `B_n'`: kernel of the abelianization.
    Derived,
}

pub fn membership(w: &BraidWord, which: SubgroupKind) -> bool {
    match which {
        SubgroupKind::Even => w.exponent_sum() % 2 == 0,
        SubgroupKind::Derived => w.exponent_sum() == 0,
        SubgroupKind::Pure => w.permutation().is_identity(),
    }
}

/// The Gorin–Lin generating set `{σ_iσ_1⁻¹ | 2 ≤ i ≤ n−1}` of `B_n'`.
pub fn gorin_lin_generators(n: usize) -> Result<Vec<BraidWord>> {
    if n < 3 {
        return Err(Error::IndexOutOfRange {
            index: n,
            strands: 3,
        });
    }
    (2..n)
        .map(|i| BraidWord::new(n, [i as i32, -1]))
        .collect()
}
