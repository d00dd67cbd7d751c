//! Textual presentations of commutative semigroups with a fixed generating
//! system.
//!
//! A presentation file looks like
//!
//! ```text
//! semigroup z2            # optional name
//! generators: a b c d
//! copies: a2 = a          # optional repeated generators
//! relations: a + b = 0; c + d = 0
//! class: group            # group | cancellative | general | auto
//! ```
//!
//! Relation sides are `0` (the identity) or sums of terms `k*g`, where the
//! `*` may be omitted (`2a` is `2*a`). `#` starts a comment.

use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{ParseError, ParseErrorKind};

/// Element of ℕ₀^S: one exponent per generator symbol.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(coords: Vec<u32>) -> Self {
        ExponentVector(coords)
    }

    pub fn zeros(len: usize) -> Self {
        ExponentVector(vec![0; len])
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = vec![0; len];
        v[index] = 1;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Word length Σ coordinates.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }

    /// Componentwise `self ≤ other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn plus(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn add_unit(&self, index: usize) -> ExponentVector {
        let mut v = self.0.clone();
        v[index] += 1;
        ExponentVector(v)
    }

    /// `self − other`, assuming `other` divides `self`.
    pub fn minus(&self, other: &ExponentVector) -> ExponentVector {
        debug_assert!(other.divides(self));
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &c)| c > 0).map(|(i, _)| i)
    }

    /// Bitmask of the support (generator count must stay below 64).
    pub fn support_mask(&self) -> u64 {
        self.support().fold(0u64, |m, i| m | (1 << i))
    }

    /// The generator-index sequence of the sorted word, e.g. `[0, 0, 2]`.
    pub fn word(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| std::iter::repeat_n(i, c as usize))
            .collect()
    }

    pub fn from_word(len: usize, word: &[usize]) -> ExponentVector {
        let mut v = vec![0; len];
        for &g in word {
            v[g] += 1;
        }
        ExponentVector(v)
    }

    /// Renders as a DSL side using the given symbol names.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.0
            .iter()
            .zip(names)
            .filter(|(&c, _)| c > 0)
            .map(|(&c, name)| if c == 1 { name.clone() } else { format!("{c}*{name}") })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Renders as a monomial in `x₁, x₂, …` style variables, e.g. `x1^7`.
    pub fn monomial(&self, var: &str) -> String {
        if self.is_zero() {
            return "1".to_string();
        }
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| {
                if c == 1 {
                    format!("{var}{}", i + 1)
                } else {
                    format!("{var}{}^{c}", i + 1)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Index<usize> for ExponentVector {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RelationPair {
    pub lhs: ExponentVector,
    pub rhs: ExponentVector,
}

impl RelationPair {
    pub fn new(lhs: ExponentVector, rhs: ExponentVector) -> Self {
        RelationPair { lhs, rhs }
    }

    pub fn is_trivial(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn is_homogeneous(&self) -> bool {
        self.lhs.degree() == self.rhs.degree()
    }

    pub fn swapped(&self) -> RelationPair {
        RelationPair { lhs: self.rhs.clone(), rhs: self.lhs.clone() }
    }

    /// The reduced relation vector `lhs − rhs`.
    pub fn difference(&self) -> Vec<i64> {
        relation_difference(self)
    }
}

pub fn relation_difference(r: &RelationPair) -> Vec<i64> {
    r.lhs
        .as_slice()
        .iter()
        .zip(r.rhs.as_slice())
        .map(|(&a, &b)| a as i64 - b as i64)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct GeneratorSet {
    /// Declared generators followed by aliases; index = coordinate.
    pub symbols: Vec<String>,
    /// `(alias, original)` pairs for repeated generators.
    pub copies: Vec<(String, String)>,
}

impl GeneratorSet {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        GeneratorSet { symbols: names.into_iter().map(Into::into).collect(), copies: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == name)
    }

    fn is_alias(&self, name: &str) -> bool {
        self.copies.iter().any(|(a, _)| a == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SemigroupClass {
    Group,
    Cancellative,
    General,
    #[default]
    Auto,
}

impl SemigroupClass {
    pub fn as_str(self) -> &'static str {
        match self {
            SemigroupClass::Group => "group",
            SemigroupClass::Cancellative => "cancellative",
            SemigroupClass::General => "general",
            SemigroupClass::Auto => "auto",
        }
    }

    /// Declared classes for which cancellativity is asserted.
    pub fn is_cancellative(self) -> bool {
        matches!(self, SemigroupClass::Group | SemigroupClass::Cancellative)
    }
}

impl std::str::FromStr for SemigroupClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "group" => Ok(SemigroupClass::Group),
            "cancellative" => Ok(SemigroupClass::Cancellative),
            "general" => Ok(SemigroupClass::General),
            "auto" => Ok(SemigroupClass::Auto),
            other => Err(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Presentation {
    pub name: Option<String>,
    pub generators: GeneratorSet,
    pub relations: Vec<RelationPair>,
    pub declared_class: SemigroupClass,
    pub has_identity: bool,
}

impl Presentation {
    /// Builds a presentation from generator names and `(lhs, rhs)` exponent
    /// arrays, then normalizes it.
    pub fn from_relations<S: Into<String>>(
        generators: impl IntoIterator<Item = S>,
        relations: &[(&[u32], &[u32])],
        class: SemigroupClass,
    ) -> Presentation {
        let generators = GeneratorSet::new(generators);
        let relations = relations
            .iter()
            .map(|(l, r)| {
                assert_eq!(l.len(), generators.len());
                assert_eq!(r.len(), generators.len());
                RelationPair::new(l.to_vec().into(), r.to_vec().into())
            })
            .collect();
        normalize(Presentation {
            name: None,
            generators,
            relations,
            declared_class: class,
            has_identity: true,
        })
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn names(&self) -> &[String] {
        &self.generators.symbols
    }

    /// Serializes back into the presentation DSL.
    pub fn to_dsl(&self) -> String {
        let names = self.names();
        let mut out = String::new();
        if let Some(name) = &self.name {
            out.push_str(&format!("semigroup {name}\n"));
        }
        let declared: Vec<&str> = names
            .iter()
            .filter(|n| !self.generators.is_alias(n))
            .map(String::as_str)
            .collect();
        out.push_str(&format!("generators: {}\n", declared.join(" ")));
        if !self.generators.copies.is_empty() {
            let copies: Vec<String> =
                self.generators.copies.iter().map(|(a, o)| format!("{a} = {o}")).collect();
            out.push_str(&format!("copies: {}\n", copies.join("; ")));
        }
        if !self.relations.is_empty() {
            let rels: Vec<String> = self
                .relations
                .iter()
                .map(|r| format!("{} = {}", r.lhs.render(names), r.rhs.render(names)))
                .collect();
            out.push_str(&format!("relations: {}\n", rels.join("; ")));
        }
        out.push_str(&format!("class: {}\n", self.declared_class.as_str()));
        out
    }
}

/// Parses and normalizes a presentation.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    parse_raw(text).map(normalize)
}

/// Adjoins the identity, expands aliases into length-one relations, drops
/// trivial pairs and duplicates (a pair and its mirror count as duplicates).
pub fn normalize(p: Presentation) -> Presentation {
    let n = p.generators.len();
    let mut relations = p.relations;
    for (alias, original) in &p.generators.copies {
        let a = p.generators.index_of(alias).expect("alias registered as symbol");
        let o = p.generators.index_of(original).expect("original registered as symbol");
        relations.push(RelationPair::new(ExponentVector::unit(n, a), ExponentVector::unit(n, o)));
    }
    let mut kept: Vec<RelationPair> = Vec::with_capacity(relations.len());
    for r in relations {
        if r.is_trivial() {
            continue;
        }
        if kept.iter().any(|k| *k == r || k.swapped() == r) {
            continue;
        }
        kept.push(r);
    }
    Presentation { relations: kept, has_identity: true, ..p }
}

// ---------------------------------------------------------------------------
// Parser

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Eq,
    Semi,
    Comma,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn lex(text: &str, line: usize, col0: usize) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = col0 + i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '=' => Tok::Eq,
            ';' => Tok::Semi,
            ',' => Tok::Comma,
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let value = digits.parse().map_err(|_| {
                    err(line, column, ParseErrorKind::Syntax("integer too large".into()))
                })?;
                out.push(Spanned { tok: Tok::Int(value), line, column });
                continue;
            }
            s if is_ident_start(s) => {
                let start = i;
                while i < chars.len() && is_ident_continue(chars[i]) {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                out.push(Spanned { tok: Tok::Ident(name), line, column });
                continue;
            }
            other => {
                return Err(err(
                    line,
                    column,
                    ParseErrorKind::Syntax(format!("unexpected character `{other}`")),
                ))
            }
        };
        out.push(Spanned { tok, line, column });
        i += 1;
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    None,
    Generators,
    Copies,
    Relations,
}

/// A side before name resolution: `(coefficient, name, line, column)`.
type RawSide = Vec<(u64, String, usize, usize)>;

/// Parses without normalizing; aliases are registered as symbols but their
/// relations are not yet appended.
pub fn parse_raw(text: &str) -> Result<Presentation, ParseError> {
    let mut name = None;
    let mut class = SemigroupClass::Auto;
    let mut gen_tokens: Vec<Spanned> = Vec::new();
    let mut copy_tokens: Vec<Spanned> = Vec::new();
    let mut rel_tokens: Vec<Spanned> = Vec::new();
    let mut saw_generators = false;
    let mut section = Section::None;
    let mut last_pos = (1, 1);

    for (idx, raw_line) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw_line.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        last_pos = (line, content.trim_end().chars().count() + 1);
        let lead_ws = content.len() - content.trim_start().len();
        let trimmed = content.trim_start();
        let col_of = |byte_off: usize| content[..byte_off].chars().count() + 1;

        if let Some(rest) = trimmed.strip_prefix("semigroup") {
            if rest.is_empty() || rest.starts_with(char::is_whitespace) {
                let n = rest.trim();
                if n.is_empty() || !n.chars().all(is_ident_continue) {
                    return Err(err(
                        line,
                        col_of(lead_ws + "semigroup".len()),
                        ParseErrorKind::Syntax("expected a name after `semigroup`".into()),
                    ));
                }
                name = Some(n.to_string());
                section = Section::None;
                continue;
            }
        }

        let keyword = trimmed.split_once(':').map(|(k, rest)| (k.trim(), rest));
        let (target, body, body_off) = match keyword {
            Some((k @ ("generators" | "copies" | "relations" | "class"), rest)) => {
                let off = content.len() - rest.len();
                (Some(k), rest, off)
            }
            _ => (None, content, 0),
        };
        match target {
            Some("class") => {
                let value = body.trim();
                class = value.parse().map_err(|v: String| {
                    err(line, col_of(body_off), ParseErrorKind::UnknownClass(v))
                })?;
                section = Section::None;
                continue;
            }
            Some("generators") => {
                saw_generators = true;
                section = Section::Generators;
            }
            Some("copies") => section = Section::Copies,
            Some("relations") => section = Section::Relations,
            _ => {
                if section == Section::None {
                    return Err(err(
                        line,
                        lead_ws + 1,
                        ParseErrorKind::Syntax(
                            "expected `generators:`, `copies:`, `relations:`, `class:` or `semigroup`"
                                .into(),
                        ),
                    ));
                }
            }
        }
        let toks = lex(body, line, col_of(body_off))?;
        let sink = match section {
            Section::Generators => &mut gen_tokens,
            Section::Copies => &mut copy_tokens,
            Section::Relations => {
                // A new line starts a new relation unless it continues an
                // unfinished side.
                let continues = rel_tokens
                    .last()
                    .is_some_and(|t| matches!(t.tok, Tok::Plus | Tok::Eq | Tok::Star | Tok::Semi))
                    || toks.first().is_some_and(|t| matches!(t.tok, Tok::Plus | Tok::Eq | Tok::Star));
                if !continues && !rel_tokens.is_empty() {
                    if let Some(first) = toks.first() {
                        rel_tokens.push(Spanned { tok: Tok::Semi, line, column: first.column });
                    }
                }
                &mut rel_tokens
            }
            Section::None => unreachable!(),
        };
        sink.extend(toks);
    }

    if !saw_generators {
        return Err(err(1, 1, ParseErrorKind::MissingGenerators));
    }

    let mut generators = GeneratorSet::default();
    for t in &gen_tokens {
        match &t.tok {
            Tok::Ident(n) => {
                if generators.index_of(n).is_some() {
                    return Err(err(t.line, t.column, ParseErrorKind::DuplicateGenerator(n.clone())));
                }
                generators.symbols.push(n.clone());
            }
            Tok::Comma => {}
            other => {
                return Err(err(
                    t.line,
                    t.column,
                    ParseErrorKind::Syntax(format!("expected generator name, found {other:?}")),
                ))
            }
        }
    }
    if generators.is_empty() {
        return Err(err(1, 1, ParseErrorKind::MissingGenerators));
    }

    // copies: ident = ident, separated by `;`, `,` or whitespace
    let mut i = 0;
    while i < copy_tokens.len() {
        if matches!(copy_tokens[i].tok, Tok::Semi | Tok::Comma) {
            i += 1;
            continue;
        }
        let (alias, eq, original) =
            (copy_tokens.get(i), copy_tokens.get(i + 1), copy_tokens.get(i + 2));
        match (alias, eq, original) {
            (
                Some(Spanned { tok: Tok::Ident(a), line: al, column: ac }),
                Some(Spanned { tok: Tok::Eq, .. }),
                Some(Spanned { tok: Tok::Ident(o), line: ol, column: oc }),
            ) => {
                if generators.index_of(a).is_some() {
                    return Err(err(*al, *ac, ParseErrorKind::DuplicateGenerator(a.clone())));
                }
                if generators.index_of(o).is_none() {
                    return Err(err(*ol, *oc, ParseErrorKind::UnknownGenerator(o.clone())));
                }
                generators.symbols.push(a.clone());
                generators.copies.push((a.clone(), o.clone()));
                i += 3;
            }
            _ => {
                let t = &copy_tokens[i];
                return Err(err(
                    t.line,
                    t.column,
                    ParseErrorKind::Syntax("expected `alias = original`".into()),
                ));
            }
        }
    }

    let n = generators.len();
    let mut relations = Vec::new();
    for group in split_relations(&rel_tokens) {
        let (lhs, rhs) = parse_relation(group, last_pos)?;
        let resolve = |side: RawSide| -> Result<ExponentVector, ParseError> {
            let mut v = vec![0u32; n];
            for (k, name, l, c) in side {
                let idx = generators
                    .index_of(&name)
                    .ok_or_else(|| err(l, c, ParseErrorKind::UnknownGenerator(name.clone())))?;
                let k: u32 = k.try_into().map_err(|_| {
                    err(l, c, ParseErrorKind::Syntax("coefficient too large".into()))
                })?;
                v[idx] += k;
            }
            Ok(ExponentVector(v))
        };
        relations.push(RelationPair::new(resolve(lhs)?, resolve(rhs)?));
    }

    Ok(Presentation { name, generators, relations, declared_class: class, has_identity: true })
}

fn split_relations(tokens: &[Spanned]) -> Vec<&[Spanned]> {
    tokens.split(|t| t.tok == Tok::Semi).filter(|g| !g.is_empty()).collect()
}

fn parse_relation(
    toks: &[Spanned],
    end: (usize, usize),
) -> Result<(RawSide, RawSide), ParseError> {
    let eq_positions: Vec<usize> =
        toks.iter().enumerate().filter(|(_, t)| t.tok == Tok::Eq).map(|(i, _)| i).collect();
    match eq_positions.as_slice() {
        [] => {
            let last = toks.last().unwrap();
            Err(err(last.line, last.column, ParseErrorKind::Syntax("expected `=`".into())))
        }
        [e] => {
            let after = toks.get(*e + 1).map(|t| (t.line, t.column)).unwrap_or(end);
            let lhs = parse_side(&toks[..*e], (toks[*e].line, toks[*e].column))?;
            let rhs = parse_side(&toks[*e + 1..], after_end(&toks[*e + 1..], after))?;
            Ok((lhs, rhs))
        }
        [_, second, ..] => {
            let t = &toks[*second];
            Err(err(t.line, t.column, ParseErrorKind::Syntax("unexpected second `=`".into())))
        }
    }
}

fn after_end(toks: &[Spanned], fallback: (usize, usize)) -> (usize, usize) {
    toks.last().map(|t| (t.line, t.column + 1)).unwrap_or(fallback)
}

/// `end` is where to report a missing term at the end of the side.
fn parse_side(toks: &[Spanned], end: (usize, usize)) -> Result<RawSide, ParseError> {
    if toks.is_empty() {
        return Err(err(end.0, end.1, ParseErrorKind::Syntax("empty relation side".into())));
    }
    if let [Spanned { tok: Tok::Int(0), .. }] = toks {
        return Ok(Vec::new());
    }
    let mut side = Vec::new();
    let mut i = 0;
    loop {
        // term := [INT ['*']] IDENT
        let t = toks.get(i);
        let Some(t) = t else {
            let prev = &toks[i - 1];
            return Err(err(
                prev.line,
                prev.column,
                ParseErrorKind::Syntax(format!("dangling `{}`", tok_text(&prev.tok))),
            ));
        };
        match &t.tok {
            Tok::Minus => return Err(err(t.line, t.column, ParseErrorKind::NegativeCoefficient)),
            Tok::Int(k) => {
                let k = *k;
                i += 1;
                if matches!(toks.get(i).map(|t| &t.tok), Some(Tok::Star)) {
                    i += 1;
                }
                match toks.get(i) {
                    Some(Spanned { tok: Tok::Ident(name), line, column }) => {
                        side.push((k, name.clone(), *line, *column));
                        i += 1;
                    }
                    Some(other) => {
                        return Err(err(
                            other.line,
                            other.column,
                            ParseErrorKind::Syntax("expected generator after coefficient".into()),
                        ))
                    }
                    None => {
                        return Err(err(
                            t.line,
                            t.column,
                            ParseErrorKind::Syntax("coefficient without generator".into()),
                        ))
                    }
                }
            }
            Tok::Ident(name) => {
                side.push((1, name.clone(), t.line, t.column));
                i += 1;
            }
            other => {
                return Err(err(
                    t.line,
                    t.column,
                    ParseErrorKind::Syntax(format!("unexpected `{}`", tok_text(other))),
                ))
            }
        }
        match toks.get(i) {
            None => break,
            Some(Spanned { tok: Tok::Plus, .. }) => i += 1,
            Some(Spanned { tok: Tok::Minus, line, column }) => {
                return Err(err(*line, *column, ParseErrorKind::NegativeCoefficient))
            }
            Some(other) => {
                return Err(err(
                    other.line,
                    other.column,
                    ParseErrorKind::Syntax(format!("expected `+`, found `{}`", tok_text(&other.tok))),
                ))
            }
        }
    }
    Ok(side)
}

fn tok_text(t: &Tok) -> String {
    match t {
        Tok::Int(k) => k.to_string(),
        Tok::Ident(s) => s.clone(),
        Tok::Plus => "+".into(),
        Tok::Minus => "-".into(),
        Tok::Star => "*".into(),
        Tok::Eq => "=".into(),
        Tok::Semi => ";".into(),
        Tok::Comma => ",".into(),
    }
}
