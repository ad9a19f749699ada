//! Faithful representations and breadth-first enumeration inside them.
//!
//! Elements are compared by their images, so subgroup membership and
//! equality never go through a word reduction.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::oracle::matrix::IntMatrix;
use crate::presentation::GenSet;
use crate::words::Syllable;

pub trait Representation {
    type Elem: Clone + Eq + Hash + Ord + Debug;

    fn identity(&self) -> Self::Elem;

    /// Image of `gen^exp`.
    fn power(&self, gen: usize, exp: i64) -> Result<Self::Elem>;

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    /// Exponents used as single steps for a generator.
    fn step_exponents(&self, gen: usize) -> Vec<i64>;

    fn evaluate(&self, word: &[Syllable]) -> Result<Self::Elem> {
        let mut acc = self.identity();
        for s in word {
            acc = self.mul(&acc, &self.power(s.gen, s.exp)?)?;
        }
        Ok(acc)
    }
}

/// Inverse word: reversed, exponents negated.
pub fn inverse_word(word: &[Syllable]) -> Vec<Syllable> {
    word.iter().rev().map(|s| Syllable::new(s.gen, -s.exp)).collect()
}

/// Permutations of `0..n`, composed as functions: `(p·q)(i) = p(q(i))`.
#[derive(Debug, Clone)]
pub struct PermRep {
    gens: Vec<Vec<u8>>,
    orders: Vec<u32>,
}

impl PermRep {
    pub fn new(gens: Vec<Vec<u8>>) -> Self {
        let orders = gens
            .iter()
            .map(|g| {
                let id: Vec<u8> = (0..g.len() as u8).collect();
                let mut p = g.clone();
                let mut k = 1;
                while p != id {
                    p = p.iter().map(|&i| g[i as usize]).collect();
                    k += 1;
                }
                k
            })
            .collect();
        PermRep { gens, orders }
    }

    /// Builds generators from lists of transpositions.
    pub fn from_swaps(points: usize, gens: &[&[(u8, u8)]]) -> Self {
        PermRep::new(
            gens.iter()
                .map(|swaps| {
                    let mut p: Vec<u8> = (0..points as u8).collect();
                    for &(a, b) in swaps.iter() {
                        p.swap(a as usize, b as usize);
                    }
                    p
                })
                .collect(),
        )
    }

    fn points(&self) -> usize {
        self.gens.first().map_or(0, Vec::len)
    }
}

impl Representation for PermRep {
    type Elem = Vec<u8>;

    fn identity(&self) -> Vec<u8> {
        (0..self.points() as u8).collect()
    }

    fn power(&self, gen: usize, exp: i64) -> Result<Vec<u8>> {
        let g = self.gens.get(gen).ok_or(Error::SpecMismatch)?;
        let k = exp.rem_euclid(self.orders[gen] as i64);
        let mut p = self.identity();
        for _ in 0..k {
            p = p.iter().map(|&i| g[i as usize]).collect();
        }
        Ok(p)
    }

    fn mul(&self, a: &Vec<u8>, b: &Vec<u8>) -> Result<Vec<u8>> {
        Ok(b.iter().map(|&i| a[i as usize]).collect())
    }

    fn step_exponents(&self, gen: usize) -> Vec<i64> {
        (1..self.orders[gen] as i64).collect()
    }
}

/// A finite abelian group `∏ ℤ/m_i`, one cyclic factor per generator.
#[derive(Debug, Clone)]
pub struct AbelianRep {
    orders: Vec<i64>,
}

impl AbelianRep {
    pub fn new(orders: Vec<i64>) -> Self {
        AbelianRep { orders }
    }
}

impl Representation for AbelianRep {
    type Elem = Vec<i64>;

    fn identity(&self) -> Vec<i64> {
        vec![0; self.orders.len()]
    }

    fn power(&self, gen: usize, exp: i64) -> Result<Vec<i64>> {
        let m = *self.orders.get(gen).ok_or(Error::SpecMismatch)?;
        let mut v = self.identity();
        v[gen] = exp.rem_euclid(m);
        Ok(v)
    }

    fn mul(&self, a: &Vec<i64>, b: &Vec<i64>) -> Result<Vec<i64>> {
        Ok(a.iter()
            .zip(b)
            .zip(&self.orders)
            .map(|((x, y), m)| (x + y).rem_euclid(*m))
            .collect())
    }

    fn step_exponents(&self, gen: usize) -> Vec<i64> {
        (1..self.orders[gen]).collect()
    }
}

/// Matrices of involutions.
#[derive(Debug, Clone)]
pub struct MatrixRep {
    gens: Vec<IntMatrix>,
}

impl MatrixRep {
    pub fn new(gens: Vec<IntMatrix>) -> Self {
        MatrixRep { gens }
    }
}

impl Representation for MatrixRep {
    type Elem = IntMatrix;

    fn identity(&self) -> IntMatrix {
        IntMatrix::identity(self.gens.first().map_or(0, IntMatrix::dim))
    }

    fn power(&self, gen: usize, exp: i64) -> Result<IntMatrix> {
        let g = self.gens.get(gen).ok_or(Error::SpecMismatch)?;
        Ok(if exp.rem_euclid(2) == 1 { g.clone() } else { self.identity() })
    }

    fn mul(&self, a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
        a.mul(b)
    }

    fn step_exponents(&self, _gen: usize) -> Vec<i64> {
        vec![1]
    }
}

/// The elements of the subgroup generated by `types` reachable in at most
/// `radius` steps (all of it when `radius` is `None`), each with one
/// shortest word.
#[derive(Debug, Clone)]
pub struct RepBall<E> {
    pub words: HashMap<E, Vec<Syllable>>,
    pub layers: Vec<usize>,
}

impl<E: Eq + Hash> RepBall<E> {
    pub fn contains(&self, e: &E) -> bool {
        self.words.contains_key(e)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

pub fn enumerate_rep<R: Representation>(
    rep: &R,
    types: GenSet,
    radius: Option<usize>,
    cap: usize,
) -> Result<RepBall<R::Elem>> {
    let steps: Vec<(Syllable, R::Elem)> = types
        .iter()
        .flat_map(|g| rep.step_exponents(g).into_iter().map(move |e| Syllable::new(g, e)))
        .map(|s| rep.power(s.gen, s.exp).map(|m| (s, m)))
        .collect::<Result<_>>()?;
    let mut words = HashMap::from([(rep.identity(), Vec::new())]);
    let mut layer = vec![rep.identity()];
    let mut layers = vec![1];
    let mut depth = 0;
    while radius.is_none_or(|r| depth < r) {
        depth += 1;
        let mut next = Vec::new();
        for x in &layer {
            for (s, m) in &steps {
                let y = rep.mul(x, m)?;
                if !words.contains_key(&y) {
                    let mut w = words[x].clone();
                    w.push(*s);
                    words.insert(y.clone(), w);
                    next.push(y);
                    if words.len() > cap {
                        return Err(Error::BallCap(cap));
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layers.push(next.len());
        layer = next;
    }
    Ok(RepBall { words, layers })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_orders() {
        let s3 = PermRep::from_swaps(3, &[&[(0, 1)], &[(1, 2)]]);
        let all = enumerate_rep(&s3, GenSet::full(2), None, 1000).unwrap();
        assert_eq!(all.len(), 6);
        assert_eq!(all.layers, vec![1, 2, 2, 1]);
    }

    #[test]
    fn abelian() {
        let z = AbelianRep::new(vec![2, 3]);
        assert_eq!(enumerate_rep(&z, GenSet::full(2), None, 100).unwrap().len(), 6);
        let w = [Syllable::new(1, 2), Syllable::new(0, 1), Syllable::new(1, 2)];
        assert_eq!(z.evaluate(&w).unwrap(), vec![1, 1]);
        assert_eq!(z.evaluate(&inverse_word(&w)).unwrap(), vec![1, 2]);
    }
}
