//! Exact integer matrices and the geometric representation of Coxeter
//! groups whose matrix entries are 2, 3 or ∞.
//!
//! With the bilinear form `B(e_i, e_j) = -cos(π/m_ij)`, the generator `s_i`
//! acts by `v ↦ v - 2B(e_i, v)e_i`. The entries `2B(e_i, e_j)` are `0`, `-1`
//! and `-2` for `m = 2, 3, ∞`, so the matrices are integral. The
//! representation is faithful.

use crate::error::{Error, Result};
use crate::presentation::{CoxeterSpec, Order};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMatrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.data[row * self.n + col]
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        let n = self.n;
        assert_eq!(n, other.n);
        let mut data = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let term = a.checked_mul(other.data[k * n + j]).ok_or(Error::MatrixOverflow)?;
                    data[i * n + j] = data[i * n + j].checked_add(term).ok_or(Error::MatrixOverflow)?;
                }
            }
        }
        Ok(IntMatrix { n, data })
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }
}

fn two_b(m: Order) -> Option<i64> {
    match m {
        Order::Finite(1) => Some(2),
        Order::Finite(2) => Some(0),
        Order::Finite(3) => Some(-1),
        Order::Infinite => Some(-2),
        Order::Finite(_) => None,
    }
}

/// Generator matrices for a Coxeter matrix with entries in {2, 3, ∞}.
pub fn integral_tits_rep(spec: &CoxeterSpec) -> Result<Vec<IntMatrix>> {
    let n = spec.rank();
    let mut bad = Vec::new();
    let mut form = vec![0i64; n * n];
    for i in 0..n {
        for j in 0..n {
            match two_b(spec.m(i, j)) {
                Some(v) => form[i * n + j] = v,
                None if i < j => bad.push(format!("m({},{})", spec.name(i), spec.name(j))),
                None => {}
            }
        }
    }
    if !bad.is_empty() {
        return Err(Error::NotIntegral(bad.join(",")));
    }
    Ok((0..n)
        .map(|i| {
            let mut m = IntMatrix::identity(n);
            for j in 0..n {
                m.data[i * n + j] -= form[i * n + j];
            }
            m
        })
        .collect())
}

/// Generator matrices of a right-angled Coxeter group.
pub fn racg_matrix_rep(spec: &CoxeterSpec) -> Result<Vec<IntMatrix>> {
    if !spec.is_right_angled() {
        return Err(Error::NotRightAngled);
    }
    integral_tits_rep(spec)
}

/// Image of a word of generator indices.
pub fn evaluate(gens: &[IntMatrix], letters: &[usize]) -> Result<IntMatrix> {
    let n = gens.first().map_or(0, IntMatrix::dim);
    let mut acc = IntMatrix::identity(n);
    for &s in letters {
        acc = acc.mul(&gens[s])?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_coxeter_spec;

    #[test]
    fn right_angled_generators() {
        let spec = parse_coxeter_spec("coxeter\ngenerator a\ngenerator b\ngenerator c\nm a b 2").unwrap();
        let g = racg_matrix_rep(&spec).unwrap();
        let id = IntMatrix::identity(3);
        for m in &g {
            assert_eq!(m.mul(m).unwrap(), id);
        }
        assert_eq!(g[0].mul(&g[1]).unwrap(), g[1].mul(&g[0]).unwrap());
        assert_ne!(g[0].mul(&g[2]).unwrap(), g[2].mul(&g[0]).unwrap());
    }

    #[test]
    fn infinite_dihedral_has_unbounded_powers() {
        let spec = parse_coxeter_spec("coxeter\ngenerator s\ngenerator t").unwrap();
        let g = racg_matrix_rep(&spec).unwrap();
        let st = g[0].mul(&g[1]).unwrap();
        let mut p = st.clone();
        let mut traces = Vec::new();
        for _ in 0..5 {
            traces.push(p.trace());
            assert_ne!(p, IntMatrix::identity(2));
            p = p.mul(&st).unwrap();
        }
        // A unipotent 2x2 block: trace 2, entries growing linearly.
        assert!(traces.iter().all(|&t| t == 2));
        assert!(p.get(0, 0).abs() + p.get(0, 1).abs() > 10);
    }

    #[test]
    fn triangle_group_and_errors() {
        let spec = parse_coxeter_spec("coxeter\ngenerator s\ngenerator t\nm s t 3").unwrap();
        assert_eq!(racg_matrix_rep(&spec), Err(Error::NotRightAngled));
        let g = integral_tits_rep(&spec).unwrap();
        let st = g[0].mul(&g[1]).unwrap();
        assert_eq!(st.mul(&st).unwrap().mul(&st).unwrap(), IntMatrix::identity(2));
        let b3 = parse_coxeter_spec("coxeter\ngenerator a\ngenerator b\nm a b 4").unwrap();
        assert!(matches!(integral_tits_rep(&b3), Err(Error::NotIntegral(_))));
    }
}
