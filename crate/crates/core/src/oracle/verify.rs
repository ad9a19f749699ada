//! The differential verifier for the intersection theorem.
//!
//! For an instance `(I, γ, J)` the left side `Γ_I ∩ γΓ_Jγ⁻¹` is computed
//! element by element on a ball without the engine: graph products through
//! heap reduction of `γ⁻¹wγ` and its support, Coxeter groups and finite
//! products of cyclic groups through a faithful representation and
//! enumerated subgroups. The right side is membership in the parabolic
//! subgroup returned by the engine.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coxeter::{CoxCoset, CoxWord, CoxeterGroup};
use crate::error::{Error, Result};
use crate::oracle::ball::enumerate_ball;
use crate::oracle::finite::{enumerate_rep, inverse_word, Representation};
use crate::oracle::heap::heap_reduce;
use crate::presentation::{GenSet, GroupSpec};
use crate::words::{GraphProduct, NormalForm, Syllable};

/// One graph-product instance `Γ_I ∩ γΓ_Jγ⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub left: GenSet,
    pub gamma: NormalForm,
    pub right: GenSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceReport {
    pub ok: bool,
    pub line: String,
}

fn report_line(spec: &str, i: &str, gamma: &str, j: &str, radius: &str, witness: Option<String>) -> InstanceReport {
    let verdict = match &witness {
        None => "OK".to_string(),
        Some(w) => format!("FAIL {w}"),
    };
    InstanceReport {
        ok: witness.is_none(),
        line: format!("INSTANCE {spec} {i} {gamma} {j} {radius} {verdict}"),
    }
}

/// Whether `conj⁻¹·w·conj` reduces into `Γ_types`.
pub fn oracle_member(spec: &GroupSpec, w: &[Syllable], conj: &[Syllable], types: GenSet) -> Result<bool> {
    let mut word = inverse_word(conj);
    word.extend_from_slice(w);
    word.extend_from_slice(conj);
    Ok(heap_reduce(spec, &word)?.support().is_subset(types))
}

pub fn verify_instance(
    gp: &GraphProduct,
    label: &str,
    inst: &Instance,
    radius: usize,
    exp_bound: i64,
    cap: usize,
) -> Result<InstanceReport> {
    let spec = gp.spec();
    let ball = enumerate_ball(spec, radius, exp_bound, cap)?;
    let result = gp.intersect_standard(inst.left, &inst.gamma, inst.right)?;
    let mut witness = None;
    for w in ball.elements() {
        let lhs = oracle_member(spec, w.syllables(), &[], inst.left)?
            && oracle_member(spec, w.syllables(), inst.gamma.syllables(), inst.right)?;
        let rhs = gp.member_of_parabolic(w, &result)?;
        if lhs != rhs {
            witness = Some(gp.format_compact(w));
            break;
        }
    }
    Ok(report_line(
        label,
        &spec.format_set(inst.left),
        &gp.format_compact(&inst.gamma),
        &spec.format_set(inst.right),
        &radius.to_string(),
        witness,
    ))
}

/// Exact check on a finite graph product given by a faithful
/// representation: the whole group is compared.
pub fn verify_instance_exact<R: Representation>(
    gp: &GraphProduct,
    rep: &R,
    label: &str,
    inst: &Instance,
    cap: usize,
) -> Result<InstanceReport> {
    let n = gp.rank();
    let group = enumerate_rep(rep, GenSet::full(n), None, cap)?;
    let left = enumerate_rep(rep, inst.left, None, cap)?;
    let right = enumerate_rep(rep, inst.right, None, cap)?;
    let g = rep.evaluate(inst.gamma.syllables())?;
    let g_inv = rep.evaluate(&inverse_word(inst.gamma.syllables()))?;
    let result = gp.intersect_standard(inst.left, &inst.gamma, inst.right)?;
    let mut elems: Vec<_> = group.words.iter().collect();
    elems.sort();
    let mut witness = None;
    for (x, word) in elems {
        let lhs = left.contains(x) && right.contains(&rep.mul(&rep.mul(&g_inv, x)?, &g)?);
        let rhs = gp.member_of_parabolic(&gp.reduce(&crate::words::Word(word.clone()))?, &result)?;
        if lhs != rhs {
            witness = Some(gp.format_compact(&gp.reduce(&crate::words::Word(word.clone()))?));
            break;
        }
    }
    Ok(report_line(
        label,
        &gp.spec().format_set(inst.left),
        &gp.format_compact(&inst.gamma),
        &gp.spec().format_set(inst.right),
        "all",
        witness,
    ))
}

fn letters(word: &[Syllable]) -> Vec<usize> {
    word.iter()
        .filter(|s| s.exp.rem_euclid(2) == 1)
        .map(|s| s.gen)
        .collect()
}

fn as_syllables(w: &CoxWord) -> Vec<Syllable> {
    w.letters().iter().map(|&s| Syllable::new(s, 1)).collect()
}

/// Coxeter instance `W_I ∩ wW_Jw⁻¹`, checked on the ball of the given
/// radius in a faithful representation (the whole group when `None`).
#[allow(clippy::too_many_arguments)]
pub fn verify_cox_instance<R: Representation>(
    cg: &CoxeterGroup,
    rep: &R,
    label: &str,
    left_types: GenSet,
    w: &CoxWord,
    right_types: GenSet,
    radius: Option<usize>,
    cap: usize,
) -> Result<InstanceReport> {
    let n = cg.rank();
    let group = enumerate_rep(rep, GenSet::full(n), radius, cap)?;
    let slack = radius.map(|r| r + 2 * w.len());
    let left = enumerate_rep(rep, left_types, radius, cap)?;
    let right = enumerate_rep(rep, right_types, slack, cap)?;
    let g = rep.evaluate(&as_syllables(w))?;
    let g_inv = rep.evaluate(&inverse_word(&as_syllables(w)))?;
    let result = cg.cox_intersect(left_types, w, right_types)?;
    let mut elems: Vec<_> = group.words.iter().collect();
    elems.sort();
    let mut witness = None;
    for (x, word) in elems {
        let lhs = left.contains(x) && right.contains(&rep.mul(&rep.mul(&g_inv, x)?, &g)?);
        let xw = CoxWord(letters(word));
        let rhs = cg.member(&xw, &result)?;
        if lhs != rhs {
            witness = Some(cg.format_compact(&cg.reduce(&xw)?));
            break;
        }
    }
    Ok(report_line(
        label,
        &cg.spec().format_set(left_types),
        &cg.format_compact(w),
        &cg.spec().format_set(right_types),
        &radius.map_or("all".to_string(), |r| r.to_string()),
        witness,
    ))
}

/// Membership of a Coxeter element in a parabolic subgroup, decided in a
/// faithful representation on a ball of the given radius.
pub fn rep_member<R: Representation>(rep: &R, x: &CoxWord, p: &CoxCoset, radius: usize, cap: usize) -> Result<bool> {
    let sub = enumerate_rep(rep, p.types(), Some(radius), cap)?;
    let b = rep.evaluate(&as_syllables(p.base()))?;
    let b_inv = rep.evaluate(&inverse_word(&as_syllables(p.base())))?;
    let img = rep.mul(&rep.mul(&b_inv, &rep.evaluate(&as_syllables(x))?)?, &b)?;
    Ok(sub.contains(&img))
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_subset(n: usize, rng: &mut impl Rng) -> GenSet {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

/// A random word of at most `max_len` syllables, reduced.
pub fn random_element(gp: &GraphProduct, max_len: usize, exp_bound: i64, rng: &mut impl Rng) -> Result<NormalForm> {
    let len = rng.gen_range(0..=max_len);
    let mut word = Vec::with_capacity(len);
    for _ in 0..len {
        let gen = rng.gen_range(0..gp.rank());
        let exps = gp.adjacency_exponents(gen, exp_bound);
        word.push(Syllable::new(gen, exps[rng.gen_range(0..exps.len())]));
    }
    gp.reduce(&crate::words::Word(word))
}

pub fn random_cox_element(cg: &CoxeterGroup, max_len: usize, rng: &mut impl Rng) -> Result<CoxWord> {
    let len = rng.gen_range(0..=max_len);
    let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..cg.rank())).collect();
    cg.reduce(&CoxWord(word))
}

pub fn random_instance(gp: &GraphProduct, max_len: usize, exp_bound: i64, rng: &mut impl Rng) -> Result<Instance> {
    let left = random_subset(gp.rank(), rng);
    let gamma = random_element(gp, max_len, exp_bound, rng)?;
    let right = random_subset(gp.rank(), rng);
    Ok(Instance { left, gamma, right })
}

/// Splits `<I> <word> <J>`; the word may itself contain spaces.
fn instance_fields(line: &str) -> Result<(&str, &str, &str)> {
    let bad = || Error::WordSyntax(format!("instance line `{line}` needs `<I> <word> <J>`"));
    let (i, rest) = line.split_once(char::is_whitespace).ok_or_else(bad)?;
    let (w, j) = rest.trim().rsplit_once(char::is_whitespace).ok_or_else(bad)?;
    Ok((i, w.trim(), j))
}

/// Parses instance lines `<I> <gamma> <J>`; `#` starts a comment.
pub fn parse_instances(gp: &GraphProduct, text: &str) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (i, gamma, j) = instance_fields(line)?;
        out.push(Instance {
            left: gp.spec().parse_set(i)?,
            gamma: gp.parse_element(gamma)?,
            right: gp.spec().parse_set(j)?,
        });
    }
    Ok(out)
}

/// Parses instance lines for a Coxeter group.
pub fn parse_cox_instances(cg: &CoxeterGroup, text: &str) -> Result<Vec<(GenSet, CoxWord, GenSet)>> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (i, w, j) = instance_fields(line)?;
        out.push((cg.spec().parse_set(i)?, cg.parse_element(w)?, cg.spec().parse_set(j)?));
    }
    Ok(out)
}

/// `trials` seeded random instances on each spec.
pub fn run_campaign(
    specs: &[(&str, GroupSpec)],
    trials: usize,
    seed: u64,
    radius: usize,
    exp_bound: i64,
    cap: usize,
) -> Result<Vec<InstanceReport>> {
    let mut rng = seeded_rng(seed);
    let mut out = Vec::new();
    for (label, spec) in specs {
        let gp = GraphProduct::new(spec.clone());
        for _ in 0..trials {
            let inst = random_instance(&gp, 3, exp_bound, &mut rng)?;
            out.push(verify_instance(&gp, label, &inst, radius, exp_bound, cap)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::catalog;
    use crate::oracle::DEFAULT_CAP;

    #[test]
    fn path_instances() {
        let gp = GraphProduct::new(catalog::path());
        let ab = gp.spec().parse_set("{a,b}").unwrap();
        let inst = Instance {
            left: ab,
            gamma: gp.parse_element("c").unwrap(),
            right: ab,
        };
        let r = verify_instance(&gp, "path", &inst, 3, 2, DEFAULT_CAP).unwrap();
        assert!(r.ok);
        assert_eq!(r.line, "INSTANCE path {a,b} c {a,b} 3 OK");
        let id = Instance {
            left: ab,
            gamma: NormalForm::identity(),
            right: GenSet::EMPTY,
        };
        assert!(verify_instance(&gp, "path", &id, 3, 2, DEFAULT_CAP).unwrap().ok);
    }

    #[test]
    fn a_wrong_answer_is_caught() {
        // Compare against a deliberately wrong subgroup: Γ_{a,b} instead of
        // Γ_{b} for the instance above.
        let gp = GraphProduct::new(catalog::path());
        let ab = gp.spec().parse_set("{a,b}").unwrap();
        let c = gp.parse_element("c").unwrap();
        let a = gp.parse_element("a").unwrap();
        let lhs = oracle_member(gp.spec(), a.syllables(), &[], ab).unwrap()
            && oracle_member(gp.spec(), a.syllables(), c.syllables(), ab).unwrap();
        assert!(!lhs);
        let wrong = crate::parabolic::ParabolicDesc::standard(ab);
        assert!(gp.member_of_parabolic(&a, &wrong).unwrap());
    }

    #[test]
    fn campaigns_are_reproducible() {
        let specs = vec![("path", catalog::path())];
        let a = run_campaign(&specs, 5, 7, 2, 2, DEFAULT_CAP).unwrap();
        let b = run_campaign(&specs, 5, 7, 2, 2, DEFAULT_CAP).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|r| r.ok));
    }
}
