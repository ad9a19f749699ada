//! The groups the verification suites run on.

use crate::oracle::finite::{AbelianRep, PermRep};
use crate::presentation::{parse_coxeter_spec, parse_group_spec, CoxeterSpec, GroupSpec};

fn group(text: &str) -> GroupSpec {
    parse_group_spec(text).expect("catalog specs are valid")
}

fn coxeter(text: &str) -> CoxeterSpec {
    parse_coxeter_spec(text).expect("catalog specs are valid")
}

pub const PATH: &str = "generator a 2\ngenerator b 2\ngenerator c 2\nedge a b\nedge b c\n";

pub fn path() -> GroupSpec {
    group(PATH)
}

/// `a:2, b:3, c:∞` on the path `a–b–c`.
pub fn mixed() -> GroupSpec {
    group("generator a 2\ngenerator b 3\ngenerator c inf\nedge a b\nedge b c\n")
}

pub fn pentagon() -> GroupSpec {
    group(
        "generator v1 2\ngenerator v2 2\ngenerator v3 2\ngenerator v4 2\ngenerator v5 2\n\
         edge v1 v2\nedge v2 v3\nedge v3 v4\nedge v4 v5\nedge v5 v1\n",
    )
}

/// `(ℤ/2)³`.
pub fn k3() -> GroupSpec {
    group("generator a 2\ngenerator b 2\ngenerator c 2\nedge a b\nedge b c\nedge a c\n")
}

/// The right-angled Artin group on a 4-cycle, `F_2 × F_2`.
pub fn square_raag() -> GroupSpec {
    group(
        "generator a inf\ngenerator b inf\ngenerator c inf\ngenerator d inf\n\
         edge a b\nedge b c\nedge c d\nedge d a\n",
    )
}

pub fn square_racg() -> GroupSpec {
    group(
        "generator a 2\ngenerator b 2\ngenerator c 2\ngenerator d 2\n\
         edge a b\nedge b c\nedge c d\nedge d a\n",
    )
}

pub fn free_racg() -> GroupSpec {
    group("generator a 2\ngenerator b 2\ngenerator c 2\n")
}

/// `ℤ/2 × ℤ/3`.
pub fn z2z3() -> GroupSpec {
    group("generator a 2\ngenerator b 3\nedge a b\n")
}

/// The theorem campaign: five graph products.
pub fn campaign_specs() -> Vec<(&'static str, GroupSpec)> {
    vec![
        ("path", path()),
        ("mixed", mixed()),
        ("pentagon", pentagon()),
        ("k3", k3()),
        ("square_raag", square_raag()),
    ]
}

/// Graph products with at most four generators.
pub fn small_specs() -> Vec<(&'static str, GroupSpec)> {
    vec![
        ("path", path()),
        ("mixed", mixed()),
        ("k3", k3()),
        ("square_raag", square_raag()),
        ("square_racg", square_racg()),
        ("free_racg", free_racg()),
        ("z2z3", z2z3()),
    ]
}

/// Finite graph products with complete graphs, as products of cyclic
/// groups.
pub fn finite_abelian() -> Vec<(&'static str, GroupSpec, AbelianRep, usize)> {
    vec![
        ("k3", k3(), AbelianRep::new(vec![2, 2, 2]), 8),
        ("z2z3", z2z3(), AbelianRep::new(vec![2, 3]), 6),
    ]
}

pub fn s3() -> CoxeterSpec {
    coxeter("coxeter\ngenerator s\ngenerator t\nm s t 3\n")
}

pub fn s4() -> CoxeterSpec {
    coxeter("coxeter\ngenerator s1\ngenerator s2\ngenerator s3\nm s1 s2 3\nm s2 s3 3\nm s1 s3 2\n")
}

pub fn b3() -> CoxeterSpec {
    coxeter("coxeter\ngenerator s1\ngenerator s2\ngenerator s3\nm s1 s2 3\nm s2 s3 4\nm s1 s3 2\n")
}

pub fn i2_5() -> CoxeterSpec {
    coxeter("coxeter\ngenerator s\ngenerator t\nm s t 5\n")
}

pub fn infinite_dihedral() -> CoxeterSpec {
    coxeter("coxeter\ngenerator s\ngenerator t\n")
}

pub fn triangle_333() -> CoxeterSpec {
    coxeter("coxeter\ngenerator r\ngenerator s\ngenerator t\nm r s 3\nm s t 3\nm r t 3\n")
}

/// Finite Coxeter groups with a faithful permutation representation and
/// the group order.
pub fn finite_coxeter() -> Vec<(&'static str, CoxeterSpec, PermRep, usize)> {
    // B3 acts on ±1, ±2, ±3 stored as 0,1,2 and 3,4,5.
    let b3_rep = PermRep::from_swaps(6, &[&[(0, 1), (3, 4)], &[(1, 2), (4, 5)], &[(2, 5)]]);
    // I2(5) acts on ℤ/5 by i ↦ -i and i ↦ 1 - i.
    let i2_rep = PermRep::new(vec![
        (0..5u8).map(|i| (5 - i) % 5).collect(),
        (0..5u8).map(|i| (6 - i) % 5).collect(),
    ]);
    vec![
        ("s3", s3(), PermRep::from_swaps(3, &[&[(0, 1)], &[(1, 2)]]), 6),
        ("s4", s4(), PermRep::from_swaps(4, &[&[(0, 1)], &[(1, 2)], &[(2, 3)]]), 24),
        ("b3", b3(), b3_rep, 48),
        ("i2_5", i2_5(), i2_rep, 10),
    ]
}

/// Infinite Coxeter groups with an integral geometric representation.
pub fn infinite_coxeter() -> Vec<(&'static str, CoxeterSpec)> {
    vec![
        ("infinite_dihedral", infinite_dihedral()),
        ("triangle_333", triangle_333()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::finite::{enumerate_rep, Representation};
    use crate::presentation::{GenSet, Order};

    #[test]
    fn permutation_representations_are_faithful() {
        // The generators satisfy the Coxeter relations with the exact
        // orders, and the image has the order of the Coxeter group.
        for (name, spec, rep, order) in finite_coxeter() {
            for a in 0..spec.rank() {
                for b in 0..spec.rank() {
                    let Order::Finite(m) = spec.m(a, b) else { panic!("{name}") };
                    let ab = rep.mul(&rep.power(a, 1).unwrap(), &rep.power(b, 1).unwrap()).unwrap();
                    let mut p = rep.identity();
                    for k in 1..=m {
                        p = rep.mul(&p, &ab).unwrap();
                        assert_eq!(p == rep.identity(), k == m, "{name} {a} {b}");
                    }
                }
            }
            let all = enumerate_rep(&rep, GenSet::full(spec.rank()), None, 10_000).unwrap();
            assert_eq!(all.len(), order, "{name}");
        }
    }
}
