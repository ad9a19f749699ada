//! Coxeter groups with arbitrary Coxeter matrices.
//!
//! The word problem is solved by Tits' method: two reduced words represent
//! the same element exactly when they are related by braid moves. Elements
//! are kept as their full set of reduced words, built one letter at a time;
//! appending `s` either shortens (some reduced word ends in `s`) or extends
//! the element. The canonical word is the ShortLex-least reduced word.
//!
//! Walls of the Cayley graph are reflections `t = wsw⁻¹`. The intersection
//! `W_I ∩ wW_Jw⁻¹` is `w_I W_K w_I⁻¹` for `w = w_I·d·w_J` with `d` minimal,
//! where `K` collects the `s ∈ I` with `d r d⁻¹ = s` for some `r ∈ J`.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::parabolic::Side;
use crate::presentation::{CoxeterSpec, GenSet, Order};

/// A word in the Coxeter generators. Ordered ShortLex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CoxWord(pub Vec<usize>);

impl CoxWord {
    pub fn identity() -> Self {
        CoxWord::default()
    }

    pub fn letter(s: usize) -> Self {
        CoxWord(vec![s])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn support(&self) -> GenSet {
        self.0.iter().copied().collect()
    }
}

impl Ord for CoxWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for CoxWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A reflection `wsw⁻¹`, stored by its canonical word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Reflection(CoxWord);

impl Reflection {
    pub fn element(&self) -> &CoxWord {
        &self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReflSide {
    Plus,
    Minus,
}

/// A coset `wW_I` with `w` minimal. It names both the sector `wW_I` and the
/// parabolic subgroup `wW_Iw⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxCoset {
    base: CoxWord,
    types: GenSet,
}

impl CoxCoset {
    pub fn new(cg: &CoxeterGroup, base: &CoxWord, types: GenSet) -> Self {
        let (_, base) = cg.coset_minimize(base, types, Side::Right);
        CoxCoset { base, types }
    }

    pub fn standard(types: GenSet) -> Self {
        CoxCoset {
            base: CoxWord::identity(),
            types,
        }
    }

    pub fn base(&self) -> &CoxWord {
        &self.base
    }

    pub fn types(&self) -> GenSet {
        self.types
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxDoubleCoset {
    pub left: CoxWord,
    pub rep: CoxWord,
    pub right: CoxWord,
}

/// All reduced words of one element.
#[derive(Debug, Clone)]
struct Orbit(BTreeSet<Vec<usize>>);

impl Orbit {
    fn identity() -> Self {
        Orbit(BTreeSet::from([Vec::new()]))
    }

    fn len(&self) -> usize {
        self.0.first().map_or(0, Vec::len)
    }

    fn canonical(&self) -> CoxWord {
        CoxWord(self.0.first().cloned().unwrap_or_default())
    }
}

#[derive(Debug, Clone)]
pub struct CoxeterGroup {
    spec: CoxeterSpec,
}

impl CoxeterGroup {
    pub fn new(spec: CoxeterSpec) -> Self {
        CoxeterGroup { spec }
    }

    pub fn spec(&self) -> &CoxeterSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    /// The alternating word `a b a …` of length `m`.
    fn alternating(a: usize, b: usize, m: usize) -> impl Iterator<Item = usize> {
        (0..m).map(move |i| if i % 2 == 0 { a } else { b })
    }

    /// Closes a set of reduced words of one element under braid moves.
    fn saturate(&self, seeds: impl IntoIterator<Item = Vec<usize>>) -> Orbit {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue: Vec<Vec<usize>> = Vec::new();
        for w in seeds {
            if seen.insert(w.clone()) {
                queue.push(w);
            }
        }
        while let Some(w) = queue.pop() {
            for i in 0..w.len().saturating_sub(1) {
                let (a, b) = (w[i], w[i + 1]);
                if a == b {
                    continue;
                }
                let Order::Finite(m) = self.spec.m(a, b) else {
                    continue;
                };
                let m = m as usize;
                if i + m > w.len() || !Self::alternating(a, b, m).eq(w[i..i + m].iter().copied()) {
                    continue;
                }
                let mut v = w.clone();
                for (k, x) in Self::alternating(b, a, m).enumerate() {
                    v[i + k] = x;
                }
                if seen.insert(v.clone()) {
                    queue.push(v);
                }
            }
        }
        Orbit(seen)
    }

    fn push_letter(&self, orbit: Orbit, s: usize) -> Orbit {
        let shorter: BTreeSet<Vec<usize>> = orbit
            .0
            .iter()
            .filter(|w| w.last() == Some(&s))
            .map(|w| w[..w.len() - 1].to_vec())
            .collect();
        if !shorter.is_empty() {
            // Every reduced word of `ws` extends to one of `w` ending in `s`.
            return Orbit(shorter);
        }
        self.saturate(orbit.0.into_iter().map(|mut w| {
            w.push(s);
            w
        }))
    }

    fn orbit_of(&self, letters: impl IntoIterator<Item = usize>) -> Result<Orbit> {
        let mut orbit = Orbit::identity();
        for s in letters {
            if s >= self.rank() {
                return Err(Error::SpecMismatch);
            }
            orbit = self.push_letter(orbit, s);
        }
        Ok(orbit)
    }

    /// The canonical reduced word of the element.
    pub fn reduce(&self, w: &CoxWord) -> Result<CoxWord> {
        Ok(self.orbit_of(w.0.iter().copied())?.canonical())
    }

    /// Every reduced word of the element.
    pub fn reduced_words(&self, w: &CoxWord) -> Result<Vec<CoxWord>> {
        Ok(self.orbit_of(w.0.iter().copied())?.0.into_iter().map(CoxWord).collect())
    }

    pub fn length(&self, w: &CoxWord) -> Result<usize> {
        Ok(self.orbit_of(w.0.iter().copied())?.len())
    }

    pub fn multiply(&self, x: &CoxWord, y: &CoxWord) -> Result<CoxWord> {
        self.reduce(&CoxWord(x.0.iter().chain(&y.0).copied().collect()))
    }

    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a CoxWord>) -> Result<CoxWord> {
        let letters: Vec<usize> = factors.into_iter().flat_map(|f| f.0.iter().copied()).collect();
        self.reduce(&CoxWord(letters))
    }

    pub fn invert(&self, x: &CoxWord) -> Result<CoxWord> {
        self.reduce(&CoxWord(x.0.iter().rev().copied().collect()))
    }

    /// `x·y·x⁻¹`.
    pub fn conjugate(&self, x: &CoxWord, y: &CoxWord) -> Result<CoxWord> {
        self.product([x, y, &self.invert(x)?])
    }

    pub fn distance(&self, x: &CoxWord, y: &CoxWord) -> Result<usize> {
        self.length(&CoxWord(x.0.iter().rev().chain(&y.0).copied().collect()))
    }

    /// Generators `s` with `ℓ(sw) < ℓ(w)`.
    pub fn left_descents(&self, w: &CoxWord) -> Result<GenSet> {
        let orbit = self.orbit_of(w.0.iter().copied())?;
        Ok(orbit.0.iter().filter_map(|v| v.first().copied()).collect())
    }

    /// Generators `s` with `ℓ(ws) < ℓ(w)`.
    pub fn right_descents(&self, w: &CoxWord) -> Result<GenSet> {
        let orbit = self.orbit_of(w.0.iter().copied())?;
        Ok(orbit.0.iter().filter_map(|v| v.last().copied()).collect())
    }

    /// Splits off the largest `W_I` factor on the given side, returning
    /// `(g, d)` with `g ∈ W_I` and `d` minimal in its coset.
    pub fn coset_minimize(&self, w: &CoxWord, types: GenSet, side: Side) -> (CoxWord, CoxWord) {
        let letters: Vec<usize> = match side {
            Side::Left => w.0.clone(),
            Side::Right => w.0.iter().rev().copied().collect(),
        };
        let mut d = self.orbit_of(letters).expect("letters checked by caller");
        let mut g = Vec::new();
        loop {
            let next = d
                .0
                .iter()
                .filter_map(|v| v.first().copied())
                .find(|&s| types.contains(s));
            let Some(s) = next else { break };
            g.push(s);
            let stripped: Vec<Vec<usize>> = d
                .0
                .iter()
                .filter(|v| v.first() == Some(&s))
                .map(|v| v[1..].to_vec())
                .collect();
            d = Orbit(stripped.into_iter().collect());
        }
        let g = self.orbit_of(g).expect("valid letters").canonical();
        let d = d.canonical();
        match side {
            Side::Left => (g, d),
            Side::Right => (
                self.invert(&g).expect("valid letters"),
                self.invert(&d).expect("valid letters"),
            ),
        }
    }

    fn check(&self, w: &CoxWord, types: GenSet) -> Result<()> {
        if w.0.iter().all(|&s| s < self.rank()) && types.is_subset(self.spec.generators()) {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    /// `w = left·rep·right` with `rep` the minimal element of `W_I w W_J`.
    pub fn double_coset_minimize(&self, w: &CoxWord, left_types: GenSet, right_types: GenSet) -> Result<CoxDoubleCoset> {
        self.check(w, left_types.union(right_types))?;
        let mut left = CoxWord::identity();
        let mut right = CoxWord::identity();
        let mut rep = self.reduce(w)?;
        loop {
            let (g, rest) = self.coset_minimize(&rep, left_types, Side::Left);
            let (h, core) = self.coset_minimize(&rest, right_types, Side::Right);
            let moved = !g.is_empty() || !h.is_empty();
            left = self.multiply(&left, &g)?;
            right = self.multiply(&h, &right)?;
            rep = core;
            if !moved {
                break;
            }
        }
        Ok(CoxDoubleCoset { left, rep, right })
    }

    /// `{ s ∈ I : d r d⁻¹ = s for some r ∈ J }`.
    pub fn cox_k(&self, d: &CoxWord, left_types: GenSet, right_types: GenSet) -> Result<GenSet> {
        let mut k = GenSet::EMPTY;
        for r in right_types.iter() {
            let c = self.conjugate(d, &CoxWord::letter(r))?;
            if let [s] = c.0[..] {
                if left_types.contains(s) {
                    k.insert(s);
                }
            }
        }
        Ok(k)
    }

    /// `W_I ∩ wW_Jw⁻¹`, as `w̃ W_K w̃⁻¹`.
    pub fn cox_intersect(&self, left_types: GenSet, w: &CoxWord, right_types: GenSet) -> Result<CoxCoset> {
        let split = self.double_coset_minimize(w, left_types, right_types)?;
        let k = self.cox_k(&split.rep, left_types, right_types)?;
        Ok(CoxCoset::new(self, &split.left, k))
    }

    /// Intersection of two arbitrary parabolic subgroups.
    pub fn intersect(&self, p1: &CoxCoset, p2: &CoxCoset) -> Result<CoxCoset> {
        self.check(&p1.base, p1.types)?;
        self.check(&p2.base, p2.types)?;
        let gamma = self.multiply(&self.invert(&p1.base)?, &p2.base)?;
        let local = self.cox_intersect(p1.types, &gamma, p2.types)?;
        let base = self.multiply(&p1.base, &local.base)?;
        Ok(CoxCoset::new(self, &base, local.types))
    }

    pub fn member(&self, w: &CoxWord, p: &CoxCoset) -> Result<bool> {
        let local = self.product([&self.invert(&p.base)?, w, &p.base])?;
        Ok(local.support().is_subset(p.types))
    }

    /// The reflection `wsw⁻¹`.
    pub fn reflection(&self, w: &CoxWord, s: usize) -> Result<Reflection> {
        Ok(Reflection(self.conjugate(w, &CoxWord::letter(s))?))
    }

    /// Plus when `ℓ(tw) > ℓ(w)`, i.e. `w` lies on the side of the identity.
    pub fn reflection_side(&self, t: &Reflection, w: &CoxWord) -> Result<ReflSide> {
        let with_t = self.length(&CoxWord(t.0 .0.iter().chain(&w.0).copied().collect()))?;
        Ok(if with_t > self.length(w)? {
            ReflSide::Plus
        } else {
            ReflSide::Minus
        })
    }

    /// Reflections crossed by a minimal gallery from `x` to `y`.
    pub fn separating_reflections(&self, x: &CoxWord, y: &CoxWord) -> Result<BTreeSet<Reflection>> {
        let path = self.multiply(&self.invert(x)?, y)?;
        let mut current = self.reduce(x)?;
        let mut out = BTreeSet::new();
        for &s in &path.0 {
            out.insert(self.reflection(&current, s)?);
            current = self.multiply(&current, &CoxWord::letter(s))?;
        }
        Ok(out)
    }

    /// The element of the coset `base·W_I` closest to `x`.
    pub fn project(&self, x: &CoxWord, sector: &CoxCoset) -> Result<CoxWord> {
        let local = self.multiply(&self.invert(&sector.base)?, x)?;
        let (g, _) = self.coset_minimize(&local, sector.types, Side::Left);
        self.multiply(&sector.base, &g)
    }

    /// The projection of the sector `wW_J` onto `W_I`.
    pub fn c_plus(&self, left_types: GenSet, w: &CoxWord, right_types: GenSet) -> Result<CoxCoset> {
        self.cox_intersect(left_types, w, right_types)
    }

    /// Elements of `W_types` of length at most `radius`, ShortLex ordered.
    pub fn ball(&self, types: GenSet, radius: usize) -> Result<Vec<CoxWord>> {
        let mut seen: BTreeSet<CoxWord> = BTreeSet::from([CoxWord::identity()]);
        let mut layer = vec![CoxWord::identity()];
        for _ in 0..radius {
            let mut next = Vec::new();
            for x in &layer {
                for s in types.iter() {
                    let y = self.multiply(x, &CoxWord::letter(s))?;
                    if y.len() > x.len() && seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            layer = next;
        }
        Ok(seen.into_iter().collect())
    }

    /// Whether a finite set is a ball, centred at its shortest element, of
    /// some sector. Returns the sector and the radius.
    pub fn recognize(&self, elements: &[CoxWord]) -> Result<Option<(CoxCoset, usize)>> {
        let mut set = BTreeSet::new();
        for w in elements {
            set.insert(self.reduce(w)?);
        }
        let Some(first) = set.first().cloned() else {
            return Ok(None);
        };
        let back = self.invert(&first)?;
        let mut local = BTreeSet::new();
        for c in &set {
            local.insert(self.multiply(&back, c)?);
        }
        let types: GenSet = local
            .iter()
            .filter_map(|x| match x.0[..] {
                [s] => Some(s),
                _ => None,
            })
            .collect();
        let radius = local.iter().map(CoxWord::len).max().unwrap_or(0);
        let ball: BTreeSet<CoxWord> = self.ball(types, radius)?.into_iter().collect();
        Ok((ball == local).then(|| (CoxCoset::new(self, &first, types), radius)))
    }

    /// Parses whitespace- or `*`-separated generator names; `e` is the
    /// identity and `s^k` repeats a letter.
    pub fn parse_word(&self, text: &str) -> Result<CoxWord> {
        let mut letters = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == '*') {
            if tok.is_empty() {
                continue;
            }
            let (name, exp) = match tok.split_once('^') {
                Some((name, exp)) => {
                    let exp: i64 = exp
                        .parse()
                        .map_err(|_| Error::WordSyntax(format!("bad exponent in `{tok}`")))?;
                    (name, exp)
                }
                None => (tok, 1),
            };
            match self.spec.index_of(name) {
                Some(s) => {
                    if exp.rem_euclid(2) == 1 {
                        letters.push(s);
                    }
                }
                None if name == "e" => {}
                None => return Err(Error::WordSyntax(format!("unknown generator `{name}`"))),
            }
        }
        Ok(CoxWord(letters))
    }

    pub fn parse_element(&self, text: &str) -> Result<CoxWord> {
        self.reduce(&self.parse_word(text)?)
    }

    fn format_with(&self, w: &CoxWord, sep: &str) -> String {
        if w.is_empty() {
            return "e".to_string();
        }
        let parts: Vec<&str> = w.0.iter().map(|&s| self.spec.name(s)).collect();
        parts.join(sep)
    }

    pub fn format(&self, w: &CoxWord) -> String {
        self.format_with(w, " ")
    }

    pub fn format_compact(&self, w: &CoxWord) -> String {
        self.format_with(w, "*")
    }
}
