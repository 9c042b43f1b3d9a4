//! Adem rewriting of arbitrary words `Sq^{r_1} ... Sq^{r_k}` into sums of
//! admissible monomials.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::{AdmissibleMonomial, SteenrodElement};

/// Process-wide cache of computed tables.
type Memo<K, V> = OnceLock<Mutex<HashMap<K, Arc<V>>>>;

/// Which inadmissible adjacent pair gets rewritten first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionOrder {
    Leftmost,
    Rightmost,
}

/// `binom(n, k) mod 2`, zero outside `0 <= k <= n`.
pub fn binom2(n: i64, k: i64) -> bool {
    if k < 0 || n < 0 || k > n {
        return false;
    }
    (k & !n) == 0
}

/// The Adem expansion of `Sq^a Sq^b` for `0 < a < 2b`, as a list of words:
///
/// `Sq^a Sq^b = sum_{c=0}^{a/2} binom(b - c - 1, a - 2c) Sq^{a+b-c} Sq^c`.
///
/// Each returned word is admissible (with `Sq^0` dropped).
pub fn adem_pair(a: u32, b: u32) -> Arc<Vec<Vec<u32>>> {
    static MEMO: Memo<(u32, u32), Vec<Vec<u32>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(hit) = memo.lock().unwrap().get(&(a, b)) {
        return hit.clone();
    }
    assert!(a > 0 && a < 2 * b, "Sq^{a} Sq^{b} is already admissible");
    let mut out = Vec::new();
    for c in 0..=a / 2 {
        if binom2((b - c - 1) as i64, (a - 2 * c) as i64) {
            if c == 0 {
                out.push(vec![a + b]);
            } else {
                out.push(vec![a + b - c, c]);
            }
        }
    }
    let out = Arc::new(out);
    memo.lock().unwrap().insert((a, b), out.clone());
    out
}

/// Reduces a word to admissible form using leftmost rewriting.
///
/// Entries equal to zero are read as `Sq^0 = 1`.
pub fn adem_reduce(word: &[u32]) -> SteenrodElement {
    adem_reduce_with(word, ReductionOrder::Leftmost)
}

pub fn adem_reduce_with(word: &[u32], order: ReductionOrder) -> SteenrodElement {
    let start: Vec<u32> = word.iter().copied().filter(|&r| r != 0).collect();
    let mut pending: BTreeSet<Vec<u32>> = BTreeSet::from([start]);
    let mut done = SteenrodElement::zero();
    while let Some(w) = pending.pop_first() {
        let pair = match order {
            ReductionOrder::Leftmost => (0..w.len().saturating_sub(1)).find(|&i| w[i] < 2 * w[i + 1]),
            ReductionOrder::Rightmost => {
                (0..w.len().saturating_sub(1)).rev().find(|&i| w[i] < 2 * w[i + 1])
            }
        };
        let Some(i) = pair else {
            done.toggle(AdmissibleMonomial::new_unchecked(w));
            continue;
        };
        for replacement in adem_pair(w[i], w[i + 1]).iter() {
            let mut next = Vec::with_capacity(w.len());
            next.extend_from_slice(&w[..i]);
            next.extend_from_slice(replacement);
            next.extend_from_slice(&w[i + 2..]);
            if !pending.remove(&next) {
                pending.insert(next);
            }
        }
    }
    done
}
