//! Reduction by piling syllables into a heap of pieces.
//!
//! Every generator owns a column. A new syllable falls until it lands on
//! the highest piece it does not commute with; if the top piece of its own
//! column is higher than that, the two merge instead. Reading the heap in
//! lexicographically least order gives the normal form.

use crate::error::{Error, Result};
use crate::presentation::{GroupSpec, Order};
use crate::words::{NormalForm, Syllable};

#[derive(Clone, Copy)]
struct Piece {
    gen: usize,
    exp: i64,
    height: usize,
    alive: bool,
}

fn normalize(spec: &GroupSpec, gen: usize, exp: i64) -> Result<i64> {
    match spec.order(gen) {
        Order::Finite(m) => Ok(exp.rem_euclid(m as i64)),
        Order::Infinite if exp == i64::MIN => Err(Error::Overflow(spec.name(gen).to_string())),
        Order::Infinite => Ok(exp),
    }
}

pub fn heap_reduce(spec: &GroupSpec, syllables: &[Syllable]) -> Result<NormalForm> {
    let n = spec.rank();
    let mut pieces: Vec<Piece> = Vec::new();
    let mut columns: Vec<Vec<usize>> = vec![Vec::new(); n];
    for s in syllables {
        if s.gen >= n {
            return Err(Error::SpecMismatch);
        }
        let exp = normalize(spec, s.gen, s.exp)?;
        if exp == 0 {
            continue;
        }
        let floor = (0..n)
            .filter(|&t| t != s.gen && !spec.adjacent(t, s.gen))
            .filter_map(|t| columns[t].last().map(|&p| pieces[p].height))
            .max()
            .unwrap_or(0);
        match columns[s.gen].last().copied() {
            Some(top) if pieces[top].height > floor => {
                let sum = pieces[top]
                    .exp
                    .checked_add(exp)
                    .ok_or_else(|| Error::Overflow(spec.name(s.gen).to_string()))?;
                let sum = normalize(spec, s.gen, sum)?;
                if sum == 0 {
                    pieces[top].alive = false;
                    columns[s.gen].pop();
                } else {
                    pieces[top].exp = sum;
                }
            }
            _ => {
                columns[s.gen].push(pieces.len());
                pieces.push(Piece {
                    gen: s.gen,
                    exp,
                    height: floor + 1,
                    alive: true,
                });
            }
        }
    }

    let live: Vec<Piece> = pieces.into_iter().filter(|p| p.alive).collect();
    let depends = |p: &Piece, q: &Piece| p.gen == q.gen || !spec.adjacent(p.gen, q.gen);
    let mut taken = vec![false; live.len()];
    let mut out = Vec::with_capacity(live.len());
    for _ in 0..live.len() {
        let next = (0..live.len())
            .filter(|&i| !taken[i])
            .filter(|&i| {
                (0..live.len()).all(|j| {
                    taken[j] || j == i || !(depends(&live[j], &live[i]) && live[j].height < live[i].height)
                })
            })
            .min_by_key(|&i| (live[i].gen, live[i].height))
            .expect("heap order is acyclic");
        taken[next] = true;
        out.push(Syllable::new(live[next].gen, live[next].exp));
    }
    Ok(NormalForm::from_canonical(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_group_spec;

    fn syl(v: &[(usize, i64)]) -> Vec<Syllable> {
        v.iter().map(|&(g, e)| Syllable::new(g, e)).collect()
    }

    #[test]
    fn direct_product() {
        let spec = parse_group_spec("generator a 2\ngenerator b 3\nedge a b").unwrap();
        let nf = heap_reduce(&spec, &syl(&[(1, 2), (0, 1), (1, 2)])).unwrap();
        assert_eq!(nf.syllables(), &syl(&[(0, 1), (1, 1)])[..]);
    }

    #[test]
    fn free_product_cancels_in_the_middle() {
        let spec = parse_group_spec("generator a inf\ngenerator b 2").unwrap();
        let nf = heap_reduce(&spec, &syl(&[(0, 1), (1, 1), (1, 1), (0, -1)])).unwrap();
        assert!(nf.is_identity());
        let nf = heap_reduce(&spec, &syl(&[(0, 2), (1, 1), (0, 3)])).unwrap();
        assert_eq!(nf.syllable_length(), 3);
    }

    #[test]
    fn lex_least_reading() {
        let spec = parse_group_spec("generator x 2\ngenerator a 2\ngenerator b 2\nedge a x\nedge a b").unwrap();
        let nf = heap_reduce(&spec, &syl(&[(2, 1), (0, 1), (1, 1)])).unwrap();
        assert_eq!(nf.syllables(), &syl(&[(1, 1), (2, 1), (0, 1)])[..]);
    }
}
