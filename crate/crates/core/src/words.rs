//! The graph-product word engine.
//!
//! Elements are stored as syllable normal forms: reduced sequences of
//! generator powers, linearized as the lexicographically least ordering
//! compatible with the commutation graph. The syllable count of a normal
//! form is the gallery distance from the base chamber, so the chamber
//! metric, descents, coset prefixes and sector projections all reduce to
//! bookkeeping on the dependency order between syllables.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::parabolic::SectorRef;
use crate::presentation::{GenSet, GroupSpec, Order};

/// A generator power `s^α` with a canonical, nonzero exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub gen: usize,
    pub exp: i64,
}

impl Syllable {
    pub fn new(gen: usize, exp: i64) -> Self {
        Syllable { gen, exp }
    }
}

/// An unreduced product of syllables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Syllable>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

/// A reduced word in canonical order. Ordered ShortLex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct NormalForm {
    syllables: Vec<Syllable>,
}

/// Chambers of the chamber system are group elements.
pub type Chamber = NormalForm;

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm::default()
    }

    /// Wraps a sequence that is already reduced and canonically ordered.
    /// The caller is responsible for both properties.
    pub fn from_canonical(syllables: Vec<Syllable>) -> Self {
        NormalForm { syllables }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of syllables, i.e. the gallery distance to the base chamber.
    pub fn syllable_length(&self) -> usize {
        self.syllables.len()
    }

    /// Set of generators occurring in the form.
    pub fn support(&self) -> GenSet {
        self.syllables.iter().map(|s| s.gen).collect()
    }

    pub fn to_word(&self) -> Word {
        Word(self.syllables.clone())
    }
}

impl Ord for NormalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.syllables
            .len()
            .cmp(&other.syllables.len())
            .then_with(|| self.syllables.cmp(&other.syllables))
    }
}

impl PartialOrd for NormalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sequence of chambers with the adjacency witness `c_{k+1} = c_k·s^α`
/// recorded for every step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gallery {
    chambers: Vec<Chamber>,
    steps: Vec<Syllable>,
}

impl Gallery {
    pub fn chambers(&self) -> &[Chamber] {
        &self.chambers
    }

    pub fn steps(&self) -> &[Syllable] {
        &self.steps
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn first(&self) -> &Chamber {
        &self.chambers[0]
    }

    pub fn last(&self) -> &Chamber {
        self.chambers.last().expect("galleries are nonempty")
    }
}

/// Word engine for one graph product.
#[derive(Debug, Clone)]
pub struct GraphProduct {
    spec: GroupSpec,
}

impl GraphProduct {
    pub fn new(spec: GroupSpec) -> Self {
        GraphProduct { spec }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    /// Distinct generators that commute.
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.spec.adjacent(a, b)
    }

    /// Syllables that can never be reordered past each other.
    fn dependent(&self, a: usize, b: usize) -> bool {
        a == b || !self.spec.adjacent(a, b)
    }

    fn overflow(&self, gen: usize) -> Error {
        Error::Overflow(self.spec.name(gen).to_string())
    }

    /// Canonical exponent of `s^exp`, or `None` when it is trivial.
    pub fn canonical_exp(&self, gen: usize, exp: i64) -> Result<Option<i64>> {
        match self.spec.order(gen) {
            Order::Finite(m) => {
                let e = exp.rem_euclid(m as i64);
                Ok((e != 0).then_some(e))
            }
            Order::Infinite => {
                if exp == i64::MIN {
                    Err(self.overflow(gen))
                } else {
                    Ok((exp != 0).then_some(exp))
                }
            }
        }
    }

    pub fn syllable(&self, gen: usize, exp: i64) -> Result<Option<Syllable>> {
        if gen >= self.rank() {
            return Err(Error::SpecMismatch);
        }
        Ok(self.canonical_exp(gen, exp)?.map(|e| Syllable::new(gen, e)))
    }

    /// Single-generator element `s^exp`.
    pub fn generator_power(&self, gen: usize, exp: i64) -> Result<NormalForm> {
        Ok(NormalForm::from_canonical(
            self.syllable(gen, exp)?.into_iter().collect(),
        ))
    }

    fn inverse_exp(&self, s: Syllable) -> i64 {
        match self.spec.order(s.gen) {
            Order::Finite(m) => m as i64 - s.exp,
            Order::Infinite => -s.exp,
        }
    }

    /// Exponents used for `s`-adjacency in finite enumerations: every
    /// nonzero residue for finite order, `±1..=±bound` for infinite order.
    pub fn adjacency_exponents(&self, gen: usize, bound: i64) -> Vec<i64> {
        match self.spec.order(gen) {
            Order::Finite(m) => (1..m as i64).collect(),
            Order::Infinite => (-bound..=bound).filter(|&e| e != 0).collect(),
        }
    }

    /// True when `x` only uses valid generators with canonical exponents.
    pub fn is_valid(&self, x: &NormalForm) -> bool {
        x.syllables.iter().all(|s| {
            s.gen < self.rank()
                && matches!(self.canonical_exp(s.gen, s.exp), Ok(Some(e)) if e == s.exp)
        })
    }

    /// Appends `syl` to a reduced stack, merging it into the last syllable
    /// of the same generator it can be shuffled next to.
    fn push_reduced(&self, stack: &mut Vec<Syllable>, syl: Syllable) -> Result<()> {
        let Some(exp) = self.canonical_exp(syl.gen, syl.exp)? else {
            return Ok(());
        };
        for i in (0..stack.len()).rev() {
            let other = stack[i];
            if other.gen == syl.gen {
                let sum = other
                    .exp
                    .checked_add(exp)
                    .ok_or_else(|| self.overflow(syl.gen))?;
                match self.canonical_exp(syl.gen, sum)? {
                    Some(e) => stack[i].exp = e,
                    None => {
                        stack.remove(i);
                    }
                }
                return Ok(());
            }
            if !self.commute(other.gen, syl.gen) {
                break;
            }
        }
        stack.push(Syllable::new(syl.gen, exp));
        Ok(())
    }

    /// Orders a reduced sequence as the lexicographically least linear
    /// extension of its dependency order.
    fn linearize(&self, syllables: Vec<Syllable>) -> NormalForm {
        let n = syllables.len();
        let mut blockers = vec![0usize; n];
        for j in 0..n {
            for i in 0..j {
                if self.dependent(syllables[i].gen, syllables[j].gen) {
                    blockers[j] += 1;
                }
            }
        }
        let mut used = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for _ in 0..n {
            let next = (0..n)
                .filter(|&j| !used[j] && blockers[j] == 0)
                .min_by_key(|&j| (syllables[j].gen, j))
                .expect("dependency order is acyclic");
            used[next] = true;
            for k in next + 1..n {
                if self.dependent(syllables[next].gen, syllables[k].gen) {
                    blockers[k] -= 1;
                }
            }
            out.push(syllables[next]);
        }
        NormalForm::from_canonical(out)
    }

    /// The canonical normal form of a word.
    pub fn reduce(&self, word: &Word) -> Result<NormalForm> {
        let mut stack = Vec::with_capacity(word.len());
        for &syl in &word.0 {
            if syl.gen >= self.rank() {
                return Err(Error::SpecMismatch);
            }
            self.push_reduced(&mut stack, syl)?;
        }
        Ok(self.linearize(stack))
    }

    pub fn multiply(&self, x: &NormalForm, y: &NormalForm) -> Result<NormalForm> {
        let mut stack = x.syllables.clone();
        for &syl in &y.syllables {
            self.push_reduced(&mut stack, syl)?;
        }
        Ok(self.linearize(stack))
    }

    /// Product of several elements, left to right.
    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a NormalForm>) -> Result<NormalForm> {
        let mut stack = Vec::new();
        for f in factors {
            for &syl in &f.syllables {
                self.push_reduced(&mut stack, syl)?;
            }
        }
        Ok(self.linearize(stack))
    }

    pub fn invert(&self, x: &NormalForm) -> NormalForm {
        let reversed = x
            .syllables
            .iter()
            .rev()
            .map(|&s| Syllable::new(s.gen, self.inverse_exp(s)))
            .collect();
        self.linearize(reversed)
    }

    /// `x·y·x⁻¹`.
    pub fn conjugate(&self, x: &NormalForm, y: &NormalForm) -> Result<NormalForm> {
        self.product([x, y, &self.invert(x)])
    }

    pub fn syllable_length(&self, x: &NormalForm) -> usize {
        x.syllable_length()
    }

    /// Gallery distance between two chambers.
    pub fn distance(&self, x: &Chamber, y: &Chamber) -> Result<usize> {
        Ok(self.multiply(&self.invert(x), y)?.syllable_length())
    }

    /// Syllables that can be shuffled to the front of `x`.
    pub fn left_descents(&self, x: &NormalForm) -> BTreeSet<Syllable> {
        let s = &x.syllables;
        (0..s.len())
            .filter(|&j| (0..j).all(|i| !self.dependent(s[i].gen, s[j].gen)))
            .map(|j| s[j])
            .collect()
    }

    /// Syllables that can be shuffled to the back of `x`.
    pub fn right_descents(&self, x: &NormalForm) -> BTreeSet<Syllable> {
        let s = &x.syllables;
        (0..s.len())
            .filter(|&j| (j + 1..s.len()).all(|k| !self.dependent(s[j].gen, s[k].gen)))
            .map(|j| s[j])
            .collect()
    }

    /// Splits `x = p·r` with `p ∈ Γ_I` maximal. The split is length
    /// additive and `r` has no left descent of type in `types`.
    pub fn i_prefix(&self, x: &NormalForm, types: GenSet) -> (NormalForm, NormalForm) {
        let s = &x.syllables;
        let mut in_prefix = vec![false; s.len()];
        for k in 0..s.len() {
            in_prefix[k] = types.contains(s[k].gen)
                && (0..k).all(|i| in_prefix[i] || !self.dependent(s[i].gen, s[k].gen));
        }
        self.split_by(s, &in_prefix)
    }

    /// Splits `x = r·q` with `q ∈ Γ_I` maximal; mirror image of
    /// [`GraphProduct::i_prefix`]. Returns `(r, q)`.
    pub fn i_suffix(&self, x: &NormalForm, types: GenSet) -> (NormalForm, NormalForm) {
        let s = &x.syllables;
        let n = s.len();
        let mut in_suffix = vec![false; n];
        for k in (0..n).rev() {
            in_suffix[k] = types.contains(s[k].gen)
                && (k + 1..n).all(|j| in_suffix[j] || !self.dependent(s[k].gen, s[j].gen));
        }
        let (q, r) = self.split_by(s, &in_suffix);
        (r, q)
    }

    fn split_by(&self, s: &[Syllable], mask: &[bool]) -> (NormalForm, NormalForm) {
        let (mut yes, mut no) = (Vec::new(), Vec::new());
        for (syl, &m) in s.iter().zip(mask) {
            if m {
                yes.push(*syl);
            } else {
                no.push(*syl);
            }
        }
        (self.linearize(yes), self.linearize(no))
    }

    /// The unique chamber of the sector closest to `x`.
    pub fn project_to_sector(&self, x: &Chamber, sector: &SectorRef) -> Result<Chamber> {
        let local = self.multiply(&self.invert(sector.base()), x)?;
        let (prefix, _) = self.i_prefix(&local, sector.types());
        self.multiply(sector.base(), &prefix)
    }

    /// Builds a gallery, checking that consecutive chambers are adjacent.
    pub fn gallery(&self, chambers: Vec<Chamber>) -> Result<Gallery> {
        assert!(!chambers.is_empty(), "a gallery has at least one chamber");
        let mut steps = Vec::with_capacity(chambers.len() - 1);
        for pair in chambers.windows(2) {
            let step = self.multiply(&self.invert(&pair[0]), &pair[1])?;
            match step.syllables() {
                [syl] => steps.push(*syl),
                _ => {
                    return Err(Error::NotAdjacent(
                        self.format(&pair[0]),
                        self.format(&pair[1]),
                    ))
                }
            }
        }
        Ok(Gallery { chambers, steps })
    }

    /// The minimal gallery from `x` to `y` that follows the normal form of
    /// `x⁻¹y` syllable by syllable.
    pub fn geodesic_gallery(&self, x: &Chamber, y: &Chamber) -> Result<Gallery> {
        let path = self.multiply(&self.invert(x), y)?;
        let mut chambers = vec![x.clone()];
        let mut current = x.clone();
        for &syl in path.syllables() {
            current = self.multiply(&current, &NormalForm::from_canonical(vec![syl]))?;
            chambers.push(current.clone());
        }
        Ok(Gallery {
            chambers,
            steps: path.syllables,
        })
    }

    /// Elements of `Γ_types` of syllable length at most `radius` whose
    /// infinite-order exponents are at most `exp_bound` in absolute value,
    /// in ShortLex order.
    pub fn subgroup_ball(&self, types: GenSet, radius: usize, exp_bound: i64) -> Result<Vec<NormalForm>> {
        let mut seen: BTreeSet<NormalForm> = BTreeSet::new();
        seen.insert(NormalForm::identity());
        let mut layer = vec![NormalForm::identity()];
        for _ in 0..radius {
            let mut next = Vec::new();
            for x in &layer {
                for g in types.iter() {
                    for e in self.adjacency_exponents(g, exp_bound) {
                        let y = self.multiply(x, &self.generator_power(g, e)?)?;
                        let bounded = y.syllables.iter().all(|s| {
                            self.spec.order(s.gen).is_finite() || s.exp.abs() <= exp_bound
                        });
                        if bounded && seen.insert(y.clone()) {
                            next.push(y);
                        }
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

    /// Parses the word syntax: tokens `s`, `s^k`, `s^-k`, and `e` for the
    /// identity, separated by whitespace or `*`.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut syllables = Vec::new();
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
                Some(g) => {
                    if exp == i64::MIN {
                        return Err(self.overflow(g));
                    }
                    syllables.push(Syllable::new(g, exp));
                }
                None if name == "e" => {}
                None => {
                    return Err(Error::WordSyntax(format!("unknown generator `{name}`")));
                }
            }
        }
        Ok(Word(syllables))
    }

    /// Parses and reduces.
    pub fn parse_element(&self, text: &str) -> Result<NormalForm> {
        self.reduce(&self.parse_word(text)?)
    }

    fn format_with(&self, x: &NormalForm, sep: &str) -> String {
        if x.is_identity() {
            return "e".to_string();
        }
        let parts: Vec<String> = x
            .syllables
            .iter()
            .map(|s| self.format_syllable(*s))
            .collect();
        parts.join(sep)
    }

    pub fn format_syllable(&self, s: Syllable) -> String {
        if s.exp == 1 {
            self.spec.name(s.gen).to_string()
        } else {
            format!("{}^{}", self.spec.name(s.gen), s.exp)
        }
    }

    /// Space-separated rendering; `e` for the identity.
    pub fn format(&self, x: &NormalForm) -> String {
        self.format_with(x, " ")
    }

    /// `*`-separated rendering, a single whitespace-free token.
    pub fn format_compact(&self, x: &NormalForm) -> String {
        self.format_with(x, "*")
    }

    pub fn display<'a>(&'a self, x: &'a NormalForm) -> impl fmt::Display + 'a {
        struct D<'a>(&'a GraphProduct, &'a NormalForm);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.format(self.1))
            }
        }
        D(self, x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_group_spec;

    fn gp(text: &str) -> GraphProduct {
        GraphProduct::new(parse_group_spec(text).unwrap())
    }

    fn z2z3() -> GraphProduct {
        gp("generator a 2\ngenerator b 3\nedge a b")
    }

    fn path() -> GraphProduct {
        gp("generator a 2\ngenerator b 2\ngenerator c 2\nedge a b\nedge b c")
    }

    fn el(g: &GraphProduct, w: &str) -> NormalForm {
        g.parse_element(w).unwrap()
    }

    /// Exponent vector of a word in Z/2 x Z/3; the group is abelian.
    fn z2z3_vector(w: &Word) -> (i64, i64) {
        let mut v = (0, 0);
        for s in &w.0 {
            if s.gen == 0 {
                v.0 += s.exp;
            } else {
                v.1 += s.exp;
            }
        }
        (v.0.rem_euclid(2), v.1.rem_euclid(3))
    }

    #[test]
    fn reduce_in_direct_product() {
        let g = z2z3();
        let w = g.parse_word("b^2 a b^2").unwrap();
        assert_eq!(z2z3_vector(&w), (1, 1));
        assert_eq!(g.format(&g.reduce(&w).unwrap()), "a b");
    }

    #[test]
    fn identity_cases() {
        let g = gp("generator a 2\ngenerator b 2");
        assert!(g.reduce(&Word::default()).unwrap().is_identity());
        assert!(el(&g, "a a").is_identity());
        assert!(el(&g, "e").is_identity());
        assert_eq!(g.format(&NormalForm::identity()), "e");
    }

    #[test]
    fn multiply_and_invert() {
        let g = z2z3();
        let ab = el(&g, "a b");
        assert_eq!(g.format(&g.multiply(&ab, &ab).unwrap()), "b^2");
        assert!(g.invert(&NormalForm::identity()).is_identity());
        assert!(g.multiply(&ab, &g.invert(&ab)).unwrap().is_identity());
    }

    #[test]
    fn lengths_and_distance() {
        let g = gp("generator a 2\ngenerator b 2\ngenerator c inf\nedge a b");
        assert_eq!(el(&g, "c^5").syllable_length(), 1);
        assert_eq!(el(&g, "a b").syllable_length(), 2);
        let x = el(&g, "c a");
        assert_eq!(g.distance(&x, &x).unwrap(), 0);
        assert_eq!(g.distance(&NormalForm::identity(), &el(&g, "a b")).unwrap(), 2);
    }

    #[test]
    fn descents() {
        let g = gp("generator a 2\ngenerator b 2\nedge a b");
        assert!(g.left_descents(&NormalForm::identity()).is_empty());
        let d: Vec<_> = g.left_descents(&el(&g, "a b")).into_iter().collect();
        assert_eq!(d, vec![Syllable::new(0, 1), Syllable::new(1, 1)]);

        let free = gp("generator a 2\ngenerator b 2");
        let d: Vec<_> = free.left_descents(&el(&free, "a b")).into_iter().collect();
        assert_eq!(d, vec![Syllable::new(0, 1)]);
        let d: Vec<_> = free.right_descents(&el(&free, "a b")).into_iter().collect();
        assert_eq!(d, vec![Syllable::new(1, 1)]);
    }

    #[test]
    fn canonical_order_is_lex_least_not_just_locally_sorted() {
        // x < a < b by index; a commutes with x and b, x and b do not
        // commute. The locally sorted word `b x a` is not canonical.
        let g = gp("generator x 2\ngenerator a 2\ngenerator b 2\nedge a x\nedge a b");
        assert_eq!(g.format(&el(&g, "b x a")), "a b x");
    }

    #[test]
    fn prefix_and_projection_on_path() {
        let g = path();
        let ab = g.spec().parse_set("{a,b}").unwrap();
        let x = el(&g, "b c a");
        let (p, r) = g.i_prefix(&x, ab);
        assert_eq!(g.format(&p), "b");
        assert_eq!(g.format(&r), "c a");
        assert_eq!(g.multiply(&p, &r).unwrap(), x);

        assert_eq!(g.i_prefix(&x, GenSet::EMPTY).1, x);
        let inside = el(&g, "a b");
        assert_eq!(g.i_prefix(&inside, ab), (inside.clone(), NormalForm::identity()));

        let sector = SectorRef::new(&g, &NormalForm::identity(), ab);
        assert!(g.project_to_sector(&el(&g, "c"), &sector).unwrap().is_identity());
        assert_eq!(g.project_to_sector(&inside, &sector).unwrap(), inside);
        let base = SectorRef::new(&g, &NormalForm::identity(), GenSet::EMPTY);
        assert!(g.project_to_sector(&x, &base).unwrap().is_identity());
    }

    #[test]
    fn overflow_is_an_error() {
        let g = gp("generator c inf");
        let big = g.generator_power(0, i64::MAX).unwrap();
        assert!(matches!(g.multiply(&big, &big), Err(Error::Overflow(_))));
        assert!(matches!(g.parse_word("c^-9223372036854775808"), Err(Error::Overflow(_))));
    }

    #[test]
    fn word_syntax() {
        let g = path();
        assert_eq!(g.format(&el(&g, "a^3 b^-1")), "a b");
        assert_eq!(el(&g, "a*b"), el(&g, "a b"));
        assert!(matches!(g.parse_word("a^x"), Err(Error::WordSyntax(_))));
        assert!(matches!(g.parse_word("q"), Err(Error::WordSyntax(_))));
    }

    #[test]
    fn galleries() {
        let g = path();
        let e = NormalForm::identity();
        let a = el(&g, "a");
        let gal = g.gallery(vec![e.clone(), a.clone(), e.clone()]).unwrap();
        assert_eq!(gal.len(), 2);
        assert!(g.gallery(vec![e.clone(), el(&g, "a c")]).is_err());
        let geo = g.geodesic_gallery(&e, &el(&g, "c a b")).unwrap();
        assert_eq!(geo.len(), 3);
    }
}
