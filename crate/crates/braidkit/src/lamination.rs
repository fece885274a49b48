//! Integer coordinates for curve systems on the n-punctured disk, with the
//! piecewise-linear (max-plus) braid-generator action.
//!
//! A curve system on the disk with `n ≥ 3` punctures is encoded by `2(n−2)`
//! integers, a pair `(a_j, b_j)` per interior puncture `j = 1..n−2`. The
//! zero vector is the empty system and is fixed by every generator. The
//! action gives a second, independent word-problem backend: any word that
//! moves some lamination is certainly nontrivial.
//!
//! `apply_word(L, w)` is the left action of the mapping class of `w`: the
//! last letter of `w` acts on the disk first, so
//! `apply_word(L, u·v) = apply_word(apply_word(L, v), u)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// Coordinate arithmetic abstracted over `i64` (checked fast path) and
/// `BigInt` (escalation path). All update rules are built from addition,
/// subtraction, negation, and comparison with zero.
trait Coeff: Clone + Ord + Sized {
    fn zero() -> Self;
    fn checked_add(&self, other: &Self) -> Option<Self>;
    fn checked_sub(&self, other: &Self) -> Option<Self>;
    fn checked_neg(&self) -> Option<Self>;
}

impl Coeff for i64 {
    fn zero() -> Self {
        0
    }
    fn checked_add(&self, other: &Self) -> Option<Self> {
        i64::checked_add(*self, *other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        i64::checked_sub(*self, *other)
    }
    fn checked_neg(&self) -> Option<Self> {
        i64::checked_neg(*self)
    }
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn checked_add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn checked_neg(&self) -> Option<Self> {
        Some(-self)
    }
}

fn pos<T: Coeff>(x: &T) -> T {
    std::cmp::max(x.clone(), T::zero())
}

fn neg<T: Coeff>(x: &T) -> T {
    std::cmp::min(x.clone(), T::zero())
}

/// Apply one letter `l` (signed generator) to the coordinate vectors in
/// place. Returns `None` on arithmetic overflow (only possible for `i64`).
fn act_letter<T: Coeff>(n: usize, l: i32, a: &mut [T], b: &mut [T]) -> Option<()> {
    let k = n - 2;
    let i = l.unsigned_abs() as usize;
    let inv = l < 0;
    // σ_i⁻¹ is the conjugate of σ_i by the reflection negating every a_j
    if inv {
        for x in a.iter_mut() {
            *x = x.checked_neg()?;
        }
    }
    if i == 1 {
        // left boundary: only pair 0, updates are sequential
        let (x, y) = (&mut a[0], &mut b[0]);
        *y = y.checked_sub(&pos(x))?;
        *x = x.checked_add(&neg(y))?;
        *y = y.checked_sub(&neg(x))?;
    } else if i == n - 1 {
        // right boundary: only pair k−1, updates are sequential
        let (x, y) = (&mut a[k - 1], &mut b[k - 1]);
        *x = x.checked_add(&pos(y))?;
        *y = y.checked_sub(x)?;
        *x = x.checked_add(&pos(y))?;
    } else {
        // interior: mixes pairs P = i−2 and Q = i−1
        let (p, q) = (i - 2, i - 1);
        let (ap, bp, aq, bq) = (a[p].clone(), b[p].clone(), a[q].clone(), b[q].clone());
        let c = ap
            .checked_sub(&aq)?
            .checked_sub(&neg(&bp))?
            .checked_add(&pos(&bq))?;
        a[p] = ap
            .checked_add(&pos(&bp))?
            .checked_add(&pos(&pos(&bq).checked_sub(&c)?))?;
        b[p] = bq.checked_sub(&pos(&c))?;
        a[q] = aq
            .checked_add(&neg(&bq))?
            .checked_add(&neg(&neg(&bp).checked_add(&c)?))?;
        b[q] = bp.checked_add(&pos(&c))?;
    }
    if inv {
        for x in a.iter_mut() {
            *x = x.checked_neg()?;
        }
    }
    Some(())
}

/// The mapping-class action of a whole word: letters act right-to-left.
fn act_word<T: Coeff>(n: usize, letters: &[i32], a: &mut [T], b: &mut [T]) -> Option<()> {
    for &l in letters.iter().rev() {
        act_letter(n, l, a, b)?;
    }
    Some(())
}

/// Coordinates of an (isotopy class of) curve system on the disk with
/// `strands` punctures. Exact arbitrary-precision integers; the generator
/// action runs a checked 64-bit fast path and escalates transparently.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaminationCoords {
    strands: usize,
    a: Vec<BigInt>,
    b: Vec<BigInt>,
}

impl LaminationCoords {
    pub fn new(strands: usize, a: Vec<BigInt>, b: Vec<BigInt>) -> Result<Self> {
        if strands < 3 {
            return Err(Error::Parse("laminations need at least 3 strands".into()));
        }
        if a.len() != strands - 2 || b.len() != strands - 2 {
            return Err(Error::Parse(format!(
                "expected {} coordinate pairs, got {}|{}",
                strands - 2,
                a.len(),
                b.len()
            )));
        }
        Ok(LaminationCoords { strands, a, b })
    }

    pub fn from_i64(strands: usize, a: &[i64], b: &[i64]) -> Result<Self> {
        Self::new(
            strands,
            a.iter().map(|&x| BigInt::from(x)).collect(),
            b.iter().map(|&x| BigInt::from(x)).collect(),
        )
    }

    /// The empty curve system.
    pub fn empty(strands: usize) -> Result<Self> {
        let k = strands.saturating_sub(2);
        let zero = <BigInt as Zero>::zero();
        Self::new(strands, vec![zero.clone(); k], vec![zero; k])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn a(&self) -> &[BigInt] {
        &self.a
    }

    pub fn b(&self) -> &[BigInt] {
        &self.b
    }

    pub fn is_empty_system(&self) -> bool {
        self.a.iter().all(Zero::is_zero) && self.b.iter().all(Zero::is_zero)
    }

    /// Image of this lamination under the braid `w`.
    pub fn apply_word(&self, w: &BraidWord) -> Result<Self> {
        if w.strands() != self.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: w.strands(),
            });
        }
        // fast path: all coordinates fit in i64 and no step overflows
        let small_a: Option<Vec<i64>> = self.a.iter().map(ToPrimitive::to_i64).collect();
        let small_b: Option<Vec<i64>> = self.b.iter().map(ToPrimitive::to_i64).collect();
        if let (Some(mut a), Some(mut b)) = (small_a, small_b) {
            if act_word(self.strands, w.letters(), &mut a, &mut b).is_some() {
                return LaminationCoords::from_i64(self.strands, &a, &b);
            }
        }
        // escalation: rerun the whole word in arbitrary precision
        let mut a = self.a.clone();
        let mut b = self.b.clone();
        act_word(self.strands, w.letters(), &mut a, &mut b)
            .expect("BigInt arithmetic cannot overflow");
        LaminationCoords::new(self.strands, a, b)
    }
}

impl fmt::Display for LaminationCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}:", self.strands)?;
        for x in &self.a {
            write!(f, " {x}")?;
        }
        write!(f, " |")?;
        for x in &self.b {
            write!(f, " {x}")?;
        }
        Ok(())
    }
}

impl FromStr for LaminationCoords {
    type Err = Error;

    /// Parse `"Ln: a1 .. a_{n-2} | b1 .. b_{n-2}"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let rest = s
            .strip_prefix('L')
            .ok_or_else(|| Error::Parse(format!("expected 'Ln:' header in {s:?}")))?;
        let (n_str, body) = rest
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected ':' after strand count in {s:?}")))?;
        let strands: usize = n_str
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad strand count {n_str:?}")))?;
        let (a_str, b_str) = body
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("expected '|' separator in {s:?}")))?;
        let parse_vec = |part: &str| -> Result<Vec<BigInt>> {
            part.split_whitespace()
                .map(|tok| {
                    tok.parse::<BigInt>()
                        .map_err(|_| Error::Parse(format!("bad coordinate {tok:?}")))
                })
                .collect()
        };
        LaminationCoords::new(strands, parse_vec(a_str)?, parse_vec(b_str)?)
    }
}

/// Coordinates of the round curve `c_i` enclosing punctures `i, i+1`:
/// all `a_j = 0`, `b_{i−1} = −1`, `b_i = +1` (indices outside `1..n−2`
/// dropped).
pub fn standard_curve_coords(n: usize, i: usize) -> Result<LaminationCoords> {
    if n < 3 {
        return Err(Error::Parse("laminations need at least 3 strands".into()));
    }
    if i < 1 || i > n - 1 {
        return Err(Error::IndexOutOfRange {
            index: i,
            strands: n,
        });
    }
    let k = n - 2;
    let mut b = vec![0i64; k];
    if i >= 2 {
        b[i - 2] = -1;
    }
    if i <= k {
        b[i - 1] = 1;
    }
    LaminationCoords::from_i64(n, &vec![0i64; k], &b)
}

/// The default test family: the `n−1` round curves together with their
/// images under every word of length ≤ 2 in the signed generators,
/// deduplicated. Cached per strand count.
pub fn default_family(n: usize) -> Result<Arc<Vec<LaminationCoords>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<LaminationCoords>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(found) = cache.lock().unwrap().get(&n) {
        return Ok(found.clone());
    }
    let gens: Vec<i32> = (1..n as i32)
        .flat_map(|i| [i, -i])
        .collect();
    let mut words: Vec<Vec<i32>> = vec![Vec::new()];
    words.extend(gens.iter().map(|&g| vec![g]));
    for &g in &gens {
        for &h in &gens {
            words.push(vec![g, h]);
        }
    }
    let mut family = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for i in 1..n {
        let base = standard_curve_coords(n, i)?;
        for w in &words {
            let img = base.apply_word(&BraidWord::new(n, w.iter().copied())?)?;
            if seen.insert(img.clone()) {
                family.push(img);
            }
        }
    }
    let arc = Arc::new(family);
    cache.lock().unwrap().insert(n, arc.clone());
    Ok(arc)
}

/// True iff `w` moves some member of the default family — a sound
/// certificate of nontriviality for any group action.
pub(crate) fn moves_default_family(w: &BraidWord) -> bool {
    let Ok(family) = default_family(w.strands()) else {
        return false;
    };
    family
        .iter()
        .any(|lam| lam.apply_word(w).map(|img| img != *lam).unwrap_or(false))
}

/// Equality of the actions of `u` and `v` on every lamination in `family`.
/// A `false` verdict certifies that `u ≠ v` modulo the center; `true` is
/// evidence relative to the family only.
pub fn mod_center_equal(u: &BraidWord, v: &BraidWord, family: &[LaminationCoords]) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    if family.is_empty() {
        return Err(Error::Parse("mod_center_equal needs a nonempty family".into()));
    }
    for lam in family {
        if lam.apply_word(u)? != lam.apply_word(v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A random nonzero lamination with entries uniform in `[−5, 5]`.
pub fn random_lamination<R: Rng>(n: usize, rng: &mut R) -> Result<LaminationCoords> {
    let k = n.checked_sub(2).ok_or_else(|| {
        Error::Parse("laminations need at least 3 strands".into())
    })?;
    loop {
        let a: Vec<i64> = (0..k).map(|_| rng.gen_range(-5..=5)).collect();
        let b: Vec<i64> = (0..k).map(|_| rng.gen_range(-5..=5)).collect();
        if a.iter().any(|&x| x != 0) || b.iter().any(|&x| x != 0) {
            return LaminationCoords::from_i64(n, &a, &b);
        }
    }
}
