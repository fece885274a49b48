//! Handle reduction: the authoritative word-problem backend.
//!
//! A `σ_i`-handle in a word is a subword `σ_i^e v σ_i^{-e}` whose interior
//! `v` contains only letters of index strictly greater than `i`. Repeatedly
//! rewriting the leftmost-closing handle terminates; a word with no handles
//! is either empty (the identity) or σ-definite (provably nontrivial).

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// Locate the leftmost-closing handle: the smallest `close` such that some
/// `open < close` has `letters[open] = -letters[close]` with every interior
/// letter of strictly larger index. Leftmost-closing handles never contain
/// another handle, so reducing them directly is always permitted.
fn prime_handle(letters: &[i32]) -> Option<(usize, usize)> {
    for (close, &l) in letters.iter().enumerate().skip(1) {
        let idx = l.abs();
        // walk back to the nearest letter of index <= idx
        for open in (0..close).rev() {
            let prev = letters[open];
            if prev.abs() > idx {
                continue;
            }
            if prev == -l {
                return Some((open, close));
            }
            break;
        }
    }
    None
}

/// One handle-reduction step on the handle at `(open, close)`, followed by
/// free reduction of the whole word.
fn reduce_handle(letters: &[i32], open: usize, close: usize) -> Vec<i32> {
    let e = letters[open].signum();
    let i = letters[open].abs();
    let mut out: Vec<i32> = Vec::with_capacity(letters.len() + 2 * (close - open));
    let push = |l: i32, out: &mut Vec<i32>| {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    };
    for &l in &letters[..open] {
        push(l, &mut out);
    }
    for &l in &letters[open + 1..close] {
        if l.abs() == i + 1 {
            // σ_{i+1}^d  ↦  σ_{i+1}^{-e} σ_i^d σ_{i+1}^{e}
            push(-e * (i + 1), &mut out);
            push(l.signum() * i, &mut out);
            push(e * (i + 1), &mut out);
        } else {
            push(l, &mut out);
        }
    }
    for &l in &letters[close + 1..] {
        push(l, &mut out);
    }
    out
}

/// Run handle reduction to completion (or fuel exhaustion). Returns
/// `Ok(true)` iff the word reduces to the empty word; a handle-free
/// nonempty word is σ-definite, hence nontrivial. One unit of fuel pays
/// for one handle-reduction step.
pub fn reduces_to_identity(w: &BraidWord, fuel: u64) -> Result<bool> {
    let mut letters = w.freely_reduced().letters().to_vec();
    let mut spent: u64 = 0;
    loop {
        if letters.is_empty() {
            return Ok(true);
        }
        match prime_handle(&letters) {
            None => return Ok(false),
            Some((open, close)) => {
                if spent >= fuel {
                    return Err(Error::Undecided { fuel });
                }
                spent += 1;
                letters = reduce_handle(&letters, open, close);
            }
        }
    }
}
