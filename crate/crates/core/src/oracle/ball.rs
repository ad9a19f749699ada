//! Balls in the chamber graph, enumerated breadth first with the heap
//! reducer.
//!
//! Infinite-order generators give every chamber infinitely many
//! neighbours, so a ball only holds elements whose infinite-order
//! exponents lie in `±1..=±exp_bound`. Layer `k` is then exactly the set of
//! such elements of syllable length `k`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::oracle::heap::heap_reduce;
use crate::presentation::{GenSet, GroupSpec, Order};
use crate::words::{NormalForm, Syllable};

pub const DEFAULT_CAP: usize = 200_000;

/// `dst = src·gen^exp`, with `src < dst` in ShortLex order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BallEdge {
    pub src: usize,
    pub dst: usize,
    pub gen: usize,
    pub exp: i64,
}

#[derive(Debug, Clone)]
pub struct Ball {
    radius: usize,
    elements: Vec<NormalForm>,
    index: HashMap<NormalForm, usize>,
    edges: Vec<BallEdge>,
    layers: Vec<usize>,
    saturated: bool,
}

impl Ball {
    pub fn radius(&self) -> usize {
        self.radius
    }

    /// Elements in ShortLex order.
    pub fn elements(&self) -> &[NormalForm] {
        &self.elements
    }

    pub fn edges(&self) -> &[BallEdge] {
        &self.edges
    }

    /// Number of elements at each distance from the identity.
    pub fn layer_sizes(&self) -> &[usize] {
        &self.layers
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &NormalForm) -> bool {
        self.index.contains_key(x)
    }

    pub fn index_of(&self, x: &NormalForm) -> Option<usize> {
        self.index.get(x).copied()
    }

    /// True when one more layer would add nothing: the ball is all of the
    /// (exponent-bounded) group.
    pub fn saturated(&self) -> bool {
        self.saturated
    }
}

fn steps(spec: &GroupSpec, types: GenSet, exp_bound: i64) -> Vec<Syllable> {
    let mut out = Vec::new();
    for g in types.iter() {
        match spec.order(g) {
            Order::Finite(m) => out.extend((1..m as i64).map(|e| Syllable::new(g, e))),
            Order::Infinite => out.extend(
                (-exp_bound..=exp_bound)
                    .filter(|&e| e != 0)
                    .map(|e| Syllable::new(g, e)),
            ),
        }
    }
    out
}

fn within(spec: &GroupSpec, x: &NormalForm, exp_bound: i64) -> bool {
    x.syllables()
        .iter()
        .all(|s| spec.order(s.gen) != Order::Infinite || s.exp.abs() <= exp_bound)
}

pub fn enumerate_subgroup_ball(
    spec: &GroupSpec,
    types: GenSet,
    radius: usize,
    exp_bound: i64,
    cap: usize,
) -> Result<Ball> {
    if !types.is_subset(spec.generators()) {
        return Err(Error::SpecMismatch);
    }
    let moves = steps(spec, types, exp_bound);
    let mut found: HashMap<NormalForm, usize> = HashMap::from([(NormalForm::identity(), 0)]);
    let mut layer = vec![NormalForm::identity()];
    let mut layers = vec![1];
    let mut saturated = false;
    for depth in 1..=radius + 1 {
        let mut next = Vec::new();
        for x in &layer {
            for m in &moves {
                let mut w = x.syllables().to_vec();
                w.push(*m);
                let y = heap_reduce(spec, &w)?;
                if !within(spec, &y, exp_bound) {
                    continue;
                }
                if !found.contains_key(&y) {
                    if depth > radius {
                        next.push(y);
                        break;
                    }
                    found.insert(y.clone(), depth);
                    next.push(y);
                    if found.len() > cap {
                        return Err(Error::BallCap(cap));
                    }
                }
            }
        }
        if next.is_empty() {
            saturated = true;
            break;
        }
        if depth > radius {
            break;
        }
        layers.push(next.len());
        layer = next;
    }
    let mut elements: Vec<NormalForm> = found.into_keys().collect();
    elements.sort();
    let index: HashMap<NormalForm, usize> =
        elements.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
    let mut edges = Vec::new();
    for (src, x) in elements.iter().enumerate() {
        for m in &moves {
            let mut w = x.syllables().to_vec();
            w.push(*m);
            let y = heap_reduce(spec, &w)?;
            if let Some(&dst) = index.get(&y) {
                if src < dst {
                    edges.push(BallEdge {
                        src,
                        dst,
                        gen: m.gen,
                        exp: m.exp,
                    });
                }
            }
        }
    }
    edges.sort_by_key(|e| (e.src, e.dst));
    Ok(Ball {
        radius,
        elements,
        index,
        edges,
        layers,
        saturated,
    })
}

pub fn enumerate_ball(spec: &GroupSpec, radius: usize, exp_bound: i64, cap: usize) -> Result<Ball> {
    enumerate_subgroup_ball(spec, spec.generators(), radius, exp_bound, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_group_spec;

    #[test]
    fn sizes() {
        let z2z3 = parse_group_spec("generator a 2\ngenerator b 3\nedge a b").unwrap();
        assert_eq!(enumerate_ball(&z2z3, 0, 2, DEFAULT_CAP).unwrap().len(), 1);
        let b = enumerate_ball(&z2z3, 2, 2, DEFAULT_CAP).unwrap();
        assert_eq!(b.len(), 6);
        assert!(b.saturated());
        let k3 = parse_group_spec("generator a 2\ngenerator b 2\ngenerator c 2\nedge a b\nedge b c\nedge a c").unwrap();
        assert_eq!(enumerate_ball(&k3, 3, 2, DEFAULT_CAP).unwrap().len(), 8);
    }

    #[test]
    fn edges_and_cap() {
        let free = parse_group_spec("generator a 2\ngenerator b 2").unwrap();
        let b = enumerate_ball(&free, 2, 2, DEFAULT_CAP).unwrap();
        assert_eq!(b.layer_sizes(), &[1, 2, 2]);
        assert_eq!(b.edges().len(), 4);
        let z = parse_group_spec("generator c inf").unwrap();
        assert_eq!(enumerate_ball(&z, 1, 2, DEFAULT_CAP).unwrap().len(), 5);
        assert_eq!(enumerate_ball(&z, 4, 2, DEFAULT_CAP).unwrap().layer_sizes(), &[1, 4]);
        assert_eq!(enumerate_ball(&z, 3, 2, 3).unwrap_err(), Error::BallCap(3));
    }
}
