//! Exhaustive rewriting: every word reachable by swapping adjacent
//! commuting syllables and merging adjacent equal-generator syllables.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::presentation::{GroupSpec, Order};
use crate::words::{NormalForm, Syllable, Word};

/// Longest word accepted.
pub const SEARCH_BOUND: usize = 12;
const STATE_CAP: usize = 4_000_000;

fn canonical(spec: &GroupSpec, gen: usize, exp: i64) -> Result<Option<i64>> {
    let e = match spec.order(gen) {
        Order::Finite(m) => exp.rem_euclid(m as i64),
        Order::Infinite if exp == i64::MIN => return Err(Error::Overflow(spec.name(gen).to_string())),
        Order::Infinite => exp,
    };
    Ok((e != 0).then_some(e))
}

/// The ShortLex-least word among all words reachable from `word`.
pub fn oracle_reduce(spec: &GroupSpec, word: &Word) -> Result<NormalForm> {
    if word.len() > SEARCH_BOUND {
        return Err(Error::SearchBound(SEARCH_BOUND));
    }
    let mut start = Vec::new();
    for s in &word.0 {
        if s.gen >= spec.rank() {
            return Err(Error::SpecMismatch);
        }
        if let Some(e) = canonical(spec, s.gen, s.exp)? {
            start.push(Syllable::new(s.gen, e));
        }
    }
    let mut seen: HashSet<Vec<Syllable>> = HashSet::from([start.clone()]);
    let mut queue = vec![start.clone()];
    let mut best = start;
    while let Some(w) = queue.pop() {
        if (w.len(), &w) < (best.len(), &best) {
            best = w.clone();
        }
        for i in 0..w.len().saturating_sub(1) {
            let (p, q) = (w[i], w[i + 1]);
            let mut next = w.clone();
            if p.gen == q.gen {
                let sum = p
                    .exp
                    .checked_add(q.exp)
                    .ok_or_else(|| Error::Overflow(spec.name(p.gen).to_string()))?;
                match canonical(spec, p.gen, sum)? {
                    Some(e) => {
                        next[i].exp = e;
                        next.remove(i + 1);
                    }
                    None => {
                        next.drain(i..i + 2);
                    }
                }
            } else if spec.adjacent(p.gen, q.gen) {
                next.swap(i, i + 1);
            } else {
                continue;
            }
            if seen.insert(next.clone()) {
                if seen.len() > STATE_CAP {
                    return Err(Error::SearchBound(SEARCH_BOUND));
                }
                queue.push(next);
            }
        }
    }
    Ok(NormalForm::from_canonical(best))
}
