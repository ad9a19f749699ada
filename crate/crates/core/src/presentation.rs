//! Group presentations: graph products of cyclic groups and Coxeter matrices.
//!
//! Both kinds are read from a small line-oriented text format. Generator
//! declaration order fixes the canonical generator index used by every
//! normal form and tie-break downstream.

use std::fmt;

use thiserror::Error;

/// Maximum number of generators a presentation may declare.
pub const MAX_GENERATORS: usize = 64;

/// Order of a cyclic vertex group, or a Coxeter matrix entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(m) => Some(m),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(m) => write!(f, "{m}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

/// A set of generator indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GenSet(u64);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn from_bits(bits: u64) -> Self {
        GenSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// All generators `0..n`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            GenSet(u64::MAX)
        } else {
            GenSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(g: usize) -> Self {
        GenSet(1 << g)
    }

    pub fn contains(self, g: usize) -> bool {
        g < 64 && self.0 & (1 << g) != 0
    }

    pub fn insert(&mut self, g: usize) {
        self.0 |= 1 << g;
    }

    pub fn with(self, g: usize) -> Self {
        GenSet(self.0 | (1 << g))
    }

    pub fn without(self, g: usize) -> Self {
        GenSet(self.0 & !(1 << g))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: GenSet) -> GenSet {
        GenSet(self.0 | other.0)
    }

    pub fn intersection(self, other: GenSet) -> GenSet {
        GenSet(self.0 & other.0)
    }

    pub fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Generators in ascending index order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&g| self.contains(g))
    }

    /// Every subset of `0..n`, in increasing bit order.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = GenSet> {
        (0..1u64 << n).map(GenSet)
    }
}

impl FromIterator<usize> for GenSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = GenSet::EMPTY;
        for g in iter {
            s.insert(g);
        }
        s
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: duplicate generator `{name}`")]
    DuplicateGenerator { line: usize, name: String },
    #[error("line {line}: unknown generator `{name}`")]
    UnknownGenerator { line: usize, name: String },
    #[error("line {line}: order of `{name}` must be at least 2")]
    OrderTooSmall { line: usize, name: String },
    #[error("line {line}: self-loop on `{name}`")]
    SelfLoop { line: usize, name: String },
    #[error("line {line}: off-diagonal entry m({a},{b}) must be at least 2")]
    EntryTooSmall { line: usize, a: String, b: String },
    #[error("line {line}: conflicting entries for m({a},{b})")]
    ConflictingEntry { line: usize, a: String, b: String },
    #[error("no generators declared")]
    NoGenerators,
    #[error("at most {MAX_GENERATORS} generators are supported")]
    TooManyGenerators,
    #[error("expected a {expected} specification")]
    WrongKind { expected: &'static str },
    #[error("unknown generator `{0}`")]
    UnknownName(String),
    #[error("malformed generator set `{0}`")]
    BadSet(String),
}

/// A graph product of cyclic groups: named vertices, their orders, and a
/// simplicial graph whose edges mark commuting generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    names: Vec<String>,
    orders: Vec<Order>,
    adjacency: Vec<GenSet>,
}

/// A Coxeter system: named involutions and a symmetric Coxeter matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterSpec {
    names: Vec<String>,
    matrix: Vec<Vec<Order>>,
}

/// Either kind of presentation, as read from a file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Spec {
    Graph(GroupSpec),
    Coxeter(CoxeterSpec),
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn index_of(names: &[String], name: &str) -> Option<usize> {
    names.iter().position(|n| n == name)
}

fn format_set(names: &[String], set: GenSet) -> String {
    let parts: Vec<&str> = set.iter().map(|g| names[g].as_str()).collect();
    format!("{{{}}}", parts.join(","))
}

fn parse_set(names: &[String], text: &str) -> Result<GenSet, SpecError> {
    let trimmed = text.trim();
    let inner = match (trimmed.strip_prefix('{'), trimmed.strip_suffix('}')) {
        (Some(_), Some(_)) if trimmed.len() >= 2 => &trimmed[1..trimmed.len() - 1],
        (None, None) => trimmed,
        _ => return Err(SpecError::BadSet(text.to_string())),
    };
    let mut set = GenSet::EMPTY;
    for part in inner.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let g = index_of(names, part).ok_or_else(|| SpecError::UnknownName(part.to_string()))?;
        set.insert(g);
    }
    Ok(set)
}

impl GroupSpec {
    /// Builds a validated spec. `edges` are pairs of generator indices.
    pub fn new(
        names: Vec<String>,
        orders: Vec<Order>,
        edges: &[(usize, usize)],
    ) -> Result<Self, SpecError> {
        if names.is_empty() {
            return Err(SpecError::NoGenerators);
        }
        if names.len() > MAX_GENERATORS {
            return Err(SpecError::TooManyGenerators);
        }
        assert_eq!(names.len(), orders.len(), "one order per generator");
        for (i, name) in names.iter().enumerate() {
            if !valid_name(name) {
                return Err(SpecError::Syntax {
                    line: 0,
                    column: 0,
                    message: format!("invalid generator name `{name}`"),
                });
            }
            if names[..i].contains(name) {
                return Err(SpecError::DuplicateGenerator {
                    line: 0,
                    name: name.clone(),
                });
            }
            if let Order::Finite(m) = orders[i] {
                if m < 2 {
                    return Err(SpecError::OrderTooSmall {
                        line: 0,
                        name: name.clone(),
                    });
                }
            }
        }
        let mut adjacency = vec![GenSet::EMPTY; names.len()];
        for &(a, b) in edges {
            if a >= names.len() || b >= names.len() {
                return Err(SpecError::UnknownName(format!("#{}", a.max(b))));
            }
            if a == b {
                return Err(SpecError::SelfLoop {
                    line: 0,
                    name: names[a].clone(),
                });
            }
            adjacency[a].insert(b);
            adjacency[b].insert(a);
        }
        Ok(GroupSpec {
            names,
            orders,
            adjacency,
        })
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn order(&self, g: usize) -> Order {
        self.orders[g]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(b)
    }

    /// Generators joined to `g` by an edge.
    pub fn link(&self, g: usize) -> GenSet {
        self.adjacency[g]
    }

    /// `g` together with its link.
    pub fn star(&self, g: usize) -> GenSet {
        self.adjacency[g].with(g)
    }

    pub fn generators(&self) -> GenSet {
        GenSet::full(self.rank())
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        index_of(&self.names, name)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if self.adjacent(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// True when every vertex group has order 2.
    pub fn is_right_angled_coxeter(&self) -> bool {
        self.orders.iter().all(|&o| o == Order::Finite(2))
    }

    /// The right-angled Coxeter system the chamber system is a building of:
    /// `m(i,j) = 2` on edges and `∞` elsewhere.
    pub fn underlying_coxeter(&self) -> CoxeterSpec {
        let n = self.rank();
        let mut matrix = vec![vec![Order::Infinite; n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = if i == j {
                    Order::Finite(1)
                } else if self.adjacent(i, j) {
                    Order::Finite(2)
                } else {
                    Order::Infinite
                };
            }
        }
        CoxeterSpec {
            names: self.names.clone(),
            matrix,
        }
    }

    pub fn format_set(&self, set: GenSet) -> String {
        format_set(&self.names, set)
    }

    /// Parses `{a,b}`, `a,b`, `{}` or the empty string.
    pub fn parse_set(&self, text: &str) -> Result<GenSet, SpecError> {
        parse_set(&self.names, text)
    }

    /// Serializes back into the file format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (name, order) in self.names.iter().zip(&self.orders) {
            out.push_str(&format!("generator {name} {order}\n"));
        }
        for (a, b) in self.edges() {
            out.push_str(&format!("edge {} {}\n", self.names[a], self.names[b]));
        }
        out
    }
}

impl CoxeterSpec {
    /// Builds a validated Coxeter system from a full matrix.
    pub fn new(names: Vec<String>, matrix: Vec<Vec<Order>>) -> Result<Self, SpecError> {
        if names.is_empty() {
            return Err(SpecError::NoGenerators);
        }
        if names.len() > MAX_GENERATORS {
            return Err(SpecError::TooManyGenerators);
        }
        let n = names.len();
        assert!(matrix.len() == n && matrix.iter().all(|r| r.len() == n));
        for i in 0..n {
            if names[..i].contains(&names[i]) {
                return Err(SpecError::DuplicateGenerator {
                    line: 0,
                    name: names[i].clone(),
                });
            }
            for j in 0..n {
                let e = matrix[i][j];
                if matrix[j][i] != e {
                    return Err(SpecError::ConflictingEntry {
                        line: 0,
                        a: names[i].clone(),
                        b: names[j].clone(),
                    });
                }
                let ok = if i == j {
                    e == Order::Finite(1)
                } else {
                    !matches!(e, Order::Finite(m) if m < 2)
                };
                if !ok {
                    return Err(SpecError::EntryTooSmall {
                        line: 0,
                        a: names[i].clone(),
                        b: names[j].clone(),
                    });
                }
            }
        }
        Ok(CoxeterSpec { names, matrix })
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn m(&self, a: usize, b: usize) -> Order {
        self.matrix[a][b]
    }

    pub fn generators(&self) -> GenSet {
        GenSet::full(self.rank())
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        index_of(&self.names, name)
    }

    pub fn is_right_angled(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| {
            (0..n).all(|j| i == j || matches!(self.matrix[i][j], Order::Finite(2) | Order::Infinite))
        })
    }

    /// The graph product with order-2 vertex groups presenting the same
    /// group, when the matrix is right-angled.
    pub fn to_group_spec(&self) -> Option<GroupSpec> {
        if !self.is_right_angled() {
            return None;
        }
        let n = self.rank();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if self.matrix[a][b] == Order::Finite(2) {
                    edges.push((a, b));
                }
            }
        }
        GroupSpec::new(self.names.clone(), vec![Order::Finite(2); n], &edges).ok()
    }

    pub fn format_set(&self, set: GenSet) -> String {
        format_set(&self.names, set)
    }

    pub fn parse_set(&self, text: &str) -> Result<GenSet, SpecError> {
        parse_set(&self.names, text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("coxeter\n");
        for name in &self.names {
            out.push_str(&format!("generator {name}\n"));
        }
        let n = self.rank();
        for a in 0..n {
            for b in a + 1..n {
                if let Order::Finite(m) = self.matrix[a][b] {
                    out.push_str(&format!("m {} {} {m}\n", self.names[a], self.names[b]));
                }
            }
        }
        out
    }
}

impl Spec {
    pub fn names(&self) -> &[String] {
        match self {
            Spec::Graph(g) => g.names(),
            Spec::Coxeter(c) => c.names(),
        }
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let body = match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    };
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in body.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &body[s..i],
                    column: body[..s].chars().count() + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &body[s..],
            column: body[..s].chars().count() + 1,
        });
    }
    out
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> SpecError {
    SpecError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Parses an order token: an integer, `inf`, or `0` (also infinite).
fn parse_order(tok: &Token<'_>, line: usize) -> Result<Order, SpecError> {
    if tok.text == "inf" {
        return Ok(Order::Infinite);
    }
    match tok.text.parse::<u32>() {
        Ok(0) => Ok(Order::Infinite),
        Ok(m) => Ok(Order::Finite(m)),
        Err(_) => Err(syntax(
            line,
            tok.column,
            format!("expected an order, found `{}`", tok.text),
        )),
    }
}

fn expect_arity(tokens: &[Token<'_>], arity: usize, line: usize) -> Result<(), SpecError> {
    if tokens.len() == arity {
        return Ok(());
    }
    let column = tokens
        .get(arity)
        .or(tokens.last())
        .map_or(1, |t| t.column + if tokens.len() < arity { t.text.chars().count() } else { 0 });
    Err(syntax(
        line,
        column,
        format!(
            "`{}` takes {} argument(s), found {}",
            tokens[0].text,
            arity - 1,
            tokens.len() - 1
        ),
    ))
}

fn declare(
    names: &mut Vec<String>,
    tok: &Token<'_>,
    line: usize,
) -> Result<(), SpecError> {
    if !valid_name(tok.text) {
        return Err(syntax(
            line,
            tok.column,
            format!("invalid generator name `{}`", tok.text),
        ));
    }
    if names.iter().any(|n| n == tok.text) {
        return Err(SpecError::DuplicateGenerator {
            line,
            name: tok.text.to_string(),
        });
    }
    if names.len() == MAX_GENERATORS {
        return Err(SpecError::TooManyGenerators);
    }
    names.push(tok.text.to_string());
    Ok(())
}

fn lookup(names: &[String], tok: &Token<'_>, line: usize) -> Result<usize, SpecError> {
    index_of(names, tok.text).ok_or_else(|| SpecError::UnknownGenerator {
        line,
        name: tok.text.to_string(),
    })
}

/// Parses either grammar, switching on a leading `coxeter` line.
pub fn parse_spec(text: &str) -> Result<Spec, SpecError> {
    let lines: Vec<(usize, Vec<Token<'_>>)> = text
        .split('\n')
        .enumerate()
        .map(|(i, l)| (i + 1, tokenize(l.strip_suffix('\r').unwrap_or(l))))
        .filter(|(_, toks)| !toks.is_empty())
        .collect();
    let is_coxeter = lines
        .first()
        .is_some_and(|(_, toks)| toks[0].text == "coxeter");
    if is_coxeter {
        let (line, toks) = &lines[0];
        expect_arity(toks, 1, *line)?;
        parse_coxeter_lines(&lines[1..]).map(Spec::Coxeter)
    } else {
        parse_group_lines(&lines).map(Spec::Graph)
    }
}

/// Parses the graph-product grammar.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec, SpecError> {
    match parse_spec(text)? {
        Spec::Graph(g) => Ok(g),
        Spec::Coxeter(_) => Err(SpecError::WrongKind {
            expected: "graph product",
        }),
    }
}

/// Parses the Coxeter grammar. Unspecified pairs default to `∞`.
pub fn parse_coxeter_spec(text: &str) -> Result<CoxeterSpec, SpecError> {
    match parse_spec(text)? {
        Spec::Coxeter(c) => Ok(c),
        Spec::Graph(_) => Err(SpecError::WrongKind {
            expected: "coxeter",
        }),
    }
}

fn parse_group_lines(lines: &[(usize, Vec<Token<'_>>)]) -> Result<GroupSpec, SpecError> {
    let mut names = Vec::new();
    let mut orders = Vec::new();
    let mut edges = Vec::new();
    for (line, toks) in lines {
        let line = *line;
        match toks[0].text {
            "generator" => {
                expect_arity(toks, 3, line)?;
                declare(&mut names, &toks[1], line)?;
                let order = parse_order(&toks[2], line)?;
                if matches!(order, Order::Finite(m) if m < 2) {
                    return Err(SpecError::OrderTooSmall {
                        line,
                        name: toks[1].text.to_string(),
                    });
                }
                orders.push(order);
            }
            "edge" => {
                expect_arity(toks, 3, line)?;
                let a = lookup(&names, &toks[1], line)?;
                let b = lookup(&names, &toks[2], line)?;
                if a == b {
                    return Err(SpecError::SelfLoop {
                        line,
                        name: toks[1].text.to_string(),
                    });
                }
                edges.push((a, b));
            }
            "coxeter" => {
                return Err(syntax(line, toks[0].column, "`coxeter` must be the first line"))
            }
            other => {
                return Err(syntax(
                    line,
                    toks[0].column,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }
    GroupSpec::new(names, orders, &edges)
}

fn parse_coxeter_lines(lines: &[(usize, Vec<Token<'_>>)]) -> Result<CoxeterSpec, SpecError> {
    let mut names = Vec::new();
    let mut entries: Vec<(usize, usize, usize, Order)> = Vec::new();
    for (line, toks) in lines {
        let line = *line;
        match toks[0].text {
            "generator" => {
                expect_arity(toks, 2, line)?;
                declare(&mut names, &toks[1], line)?;
            }
            "m" => {
                expect_arity(toks, 4, line)?;
                let a = lookup(&names, &toks[1], line)?;
                let b = lookup(&names, &toks[2], line)?;
                let order = parse_order(&toks[3], line)?;
                if a == b {
                    return Err(SpecError::SelfLoop {
                        line,
                        name: toks[1].text.to_string(),
                    });
                }
                if matches!(order, Order::Finite(m) if m < 2) {
                    return Err(SpecError::EntryTooSmall {
                        line,
                        a: toks[1].text.to_string(),
                        b: toks[2].text.to_string(),
                    });
                }
                entries.push((line, a, b, order));
            }
            "coxeter" => {
                return Err(syntax(line, toks[0].column, "`coxeter` must be the first line"))
            }
            other => {
                return Err(syntax(
                    line,
                    toks[0].column,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }
    let n = names.len();
    if n == 0 {
        return Err(SpecError::NoGenerators);
    }
    let mut matrix = vec![vec![Order::Infinite; n]; n];
    let mut set = vec![vec![false; n]; n];
    for (i, row) in matrix.iter_mut().enumerate() {
        row[i] = Order::Finite(1);
    }
    for (line, a, b, order) in entries {
        if set[a][b] && matrix[a][b] != order {
            return Err(SpecError::ConflictingEntry {
                line,
                a: names[a].clone(),
                b: names[b].clone(),
            });
        }
        set[a][b] = true;
        set[b][a] = true;
        matrix[a][b] = order;
        matrix[b][a] = order;
    }
    CoxeterSpec::new(names, matrix)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_edge_and_orders() {
        let g = parse_group_spec("generator a 2\ngenerator b 3\nedge a b").unwrap();
        assert_eq!(g.rank(), 2);
        assert_eq!(g.order(0), Order::Finite(2));
        assert_eq!(g.order(1), Order::Finite(3));
        assert!(g.adjacent(0, 1) && g.adjacent(1, 0));
    }

    #[test]
    fn self_loop_rejected() {
        let err = parse_group_spec("generator a 2\nedge a a").unwrap_err();
        assert!(matches!(err, SpecError::SelfLoop { line: 2, .. }));
    }

    #[test]
    fn inf_and_zero_are_infinite() {
        let g = parse_group_spec("generator a inf\ngenerator b 2\n").unwrap();
        assert_eq!(g.order(0), Order::Infinite);
        assert!(!g.adjacent(0, 1));
        let h = parse_group_spec("generator a 0\ngenerator b 2\n").unwrap();
        assert_eq!(h, g);
    }

    #[test]
    fn group_errors() {
        assert!(matches!(
            parse_group_spec("generator a 2\ngenerator a 3").unwrap_err(),
            SpecError::DuplicateGenerator { line: 2, .. }
        ));
        assert!(matches!(
            parse_group_spec("generator a 2\nedge a b").unwrap_err(),
            SpecError::UnknownGenerator { line: 2, .. }
        ));
        assert!(matches!(
            parse_group_spec("generator a 1").unwrap_err(),
            SpecError::OrderTooSmall { line: 1, .. }
        ));
        assert_eq!(
            parse_group_spec("generator a 2\n  frob a").unwrap_err(),
            SpecError::Syntax {
                line: 2,
                column: 3,
                message: "unknown directive `frob`".into()
            }
        );
        assert!(matches!(
            parse_group_spec("generator 9a 2").unwrap_err(),
            SpecError::Syntax { line: 1, column: 11, .. }
        ));
        assert!(matches!(
            parse_group_spec("generator a two").unwrap_err(),
            SpecError::Syntax { line: 1, column: 13, .. }
        ));
        assert!(matches!(
            parse_group_spec("# nothing\n").unwrap_err(),
            SpecError::NoGenerators
        ));
    }

    #[test]
    fn comments_and_crlf() {
        let g = parse_group_spec("# path\r\ngenerator a 2 # first\r\n\r\ngenerator b 2\r\nedge a b\r\n")
            .unwrap();
        assert_eq!(g.names(), ["a", "b"]);
        assert!(g.adjacent(0, 1));
    }

    #[test]
    fn coxeter_defaults_to_infinity() {
        let c = parse_coxeter_spec("coxeter\ngenerator s\ngenerator t\nm s t 3").unwrap();
        assert_eq!(c.m(0, 1), Order::Finite(3));
        assert_eq!(c.m(1, 0), Order::Finite(3));
        assert_eq!(c.m(0, 0), Order::Finite(1));
        let d = parse_coxeter_spec("coxeter\ngenerator s\ngenerator t").unwrap();
        assert_eq!(d.m(0, 1), Order::Infinite);
    }

    #[test]
    fn coxeter_errors() {
        assert!(matches!(
            parse_coxeter_spec("coxeter\ngenerator s\ngenerator t\nm s t 1").unwrap_err(),
            SpecError::EntryTooSmall { line: 4, .. }
        ));
        assert!(matches!(
            parse_coxeter_spec("coxeter\ngenerator s\ngenerator t\nm s t 3\nm t s 4").unwrap_err(),
            SpecError::ConflictingEntry { line: 5, .. }
        ));
        assert!(matches!(
            parse_coxeter_spec("coxeter\ngenerator s 2").unwrap_err(),
            SpecError::Syntax { line: 2, .. }
        ));
        assert!(matches!(
            parse_coxeter_spec("generator s 2").unwrap_err(),
            SpecError::WrongKind { .. }
        ));
        assert!(matches!(
            parse_group_spec("coxeter\ngenerator s").unwrap_err(),
            SpecError::WrongKind { .. }
        ));
    }

    #[test]
    fn underlying_coxeter_matrix() {
        let g = parse_group_spec("generator a 2\ngenerator b 3\nedge a b").unwrap();
        let c = g.underlying_coxeter();
        assert_eq!(c.m(0, 1), Order::Finite(2));

        let free = parse_group_spec("generator a 2\ngenerator b 3").unwrap();
        assert_eq!(free.underlying_coxeter().m(0, 1), Order::Infinite);

        let tri = parse_group_spec(
            "generator a 2\ngenerator b 2\ngenerator c 2\nedge a b\nedge b c\nedge a c",
        )
        .unwrap();
        let c = tri.underlying_coxeter();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { Order::Finite(1) } else { Order::Finite(2) };
                assert_eq!(c.m(i, j), want);
            }
        }
        // All orders 2: the Coxeter round trip reproduces the adjacency.
        assert_eq!(c.to_group_spec().unwrap(), tri);
    }

    #[test]
    fn sets() {
        let g = parse_group_spec("generator a 2\ngenerator b 2\ngenerator c 2").unwrap();
        let s = g.parse_set("{c,a}").unwrap();
        assert_eq!(g.format_set(s), "{a,c}");
        assert_eq!(g.parse_set("b,c").unwrap(), g.parse_set("{b,c}").unwrap());
        assert_eq!(g.parse_set("{}").unwrap(), GenSet::EMPTY);
        assert_eq!(g.parse_set("").unwrap(), GenSet::EMPTY);
        assert!(g.parse_set("{a,z}").is_err());
        assert!(g.parse_set("{a").is_err());
    }
}
