//! Quivers, paths and length-two monomial relations.
//!
//! Paths are stored in the order their arrows are applied: `[a, b]` means
//! "first `a`, then `b`". Textual output uses the opposite, juxtaposition
//! convention, so the same path prints as `ba`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow label `{0}`")]
    DuplicateArrow(String),
    #[error("undeclared vertex `{vertex}` used by arrow `{arrow}`")]
    UndeclaredVertex { arrow: String, vertex: String },
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("`{first}` then `{second}` do not compose: {end} != {start}")]
    NotComposable {
        first: String,
        second: String,
        end: String,
        start: String,
    },
    #[error("relation `{0}` is listed twice")]
    DuplicateRelation(String),
    #[error("a lazy path needs an explicit vertex")]
    EmptyPath,
    #[error("relation `{0}` does not split into two arrow labels")]
    UnsplittableRelation(String),
    #[error("relation `{0}` splits into arrow labels in more than one way")]
    AmbiguousRelation(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arrow {
    pub label: String,
    pub source: String,
    pub target: String,
}

impl Arrow {
    pub fn new(label: &str, source: &str, target: &str) -> Self {
        Arrow {
            label: label.to_string(),
            source: source.to_string(),
            target: target.to_string(),
        }
    }
}

/// A finite quiver. Vertices and arrows keep their declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawQuiver", into = "RawQuiver")]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    index: BTreeMap<String, usize>,
}

#[derive(Serialize, Deserialize)]
struct RawQuiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl TryFrom<RawQuiver> for Quiver {
    type Error = QuiverError;
    fn try_from(raw: RawQuiver) -> Result<Self, QuiverError> {
        Quiver::new(raw.vertices, raw.arrows)
    }
}

impl From<Quiver> for RawQuiver {
    fn from(q: Quiver) -> Self {
        RawQuiver {
            vertices: q.vertices,
            arrows: q.arrows,
        }
    }
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self, QuiverError> {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(QuiverError::DuplicateVertex(v.clone()));
            }
        }
        let mut index = BTreeMap::new();
        for (k, a) in arrows.iter().enumerate() {
            for v in [&a.source, &a.target] {
                if !seen.contains(v.as_str()) {
                    return Err(QuiverError::UndeclaredVertex {
                        arrow: a.label.clone(),
                        vertex: v.clone(),
                    });
                }
            }
            if index.insert(a.label.clone(), k).is_some() {
                return Err(QuiverError::DuplicateArrow(a.label.clone()));
            }
        }
        Ok(Quiver {
            vertices,
            arrows,
            index,
        })
    }

    /// Convenience constructor from string slices.
    pub fn from_parts(
        vertices: &[&str],
        arrows: &[(&str, &str, &str)],
    ) -> Result<Self, QuiverError> {
        Quiver::new(
            vertices.iter().map(|v| v.to_string()).collect(),
            arrows.iter().map(|(l, s, t)| Arrow::new(l, s, t)).collect(),
        )
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, label: &str) -> Option<&Arrow> {
        self.index.get(label).map(|&k| &self.arrows[k])
    }

    pub fn has_vertex(&self, v: &str) -> bool {
        self.vertices.iter().any(|w| w == v)
    }

    pub fn outgoing<'a>(&'a self, v: &'a str) -> impl Iterator<Item = &'a Arrow> + 'a {
        self.arrows.iter().filter(move |a| a.source == v)
    }

    pub fn incoming<'a>(&'a self, v: &'a str) -> impl Iterator<Item = &'a Arrow> + 'a {
        self.arrows.iter().filter(move |a| a.target == v)
    }

    fn require(&self, label: &str) -> Result<&Arrow, QuiverError> {
        self.arrow(label)
            .ok_or_else(|| QuiverError::UnknownArrow(label.to_string()))
    }
}

/// A directed path, possibly of length zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Path {
    pub source: String,
    pub target: String,
    pub arrows: Vec<String>,
}

impl Path {
    /// The lazy path `e_v`.
    pub fn lazy(v: &str) -> Self {
        Path {
            source: v.to_string(),
            target: v.to_string(),
            arrows: Vec::new(),
        }
    }

    /// Builds a path from arrow labels listed first-applied first.
    pub fn from_arrows(q: &Quiver, labels: &[&str]) -> Result<Self, QuiverError> {
        let (first, rest) = match labels.split_first() {
            Some(x) => x,
            None => return Err(QuiverError::EmptyPath),
        };
        let mut path = Path::arrow(q.require(first)?);
        for l in rest {
            path = compose(&path, &Path::arrow(q.require(l)?))?;
        }
        Ok(path)
    }

    pub fn arrow(a: &Arrow) -> Self {
        Path {
            source: a.source.clone(),
            target: a.target.clone(),
            arrows: vec![a.label.clone()],
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_lazy(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Checks that the arrows exist in `q` and compose.
    pub fn validate(&self, q: &Quiver) -> Result<(), QuiverError> {
        if !q.has_vertex(&self.source) {
            return Err(QuiverError::UnknownVertex(self.source.clone()));
        }
        let mut at = self.source.as_str();
        let mut prev = None::<&str>;
        for l in &self.arrows {
            let a = q.require(l)?;
            if a.source != at {
                return Err(QuiverError::NotComposable {
                    first: prev.unwrap_or("").to_string(),
                    second: l.clone(),
                    end: at.to_string(),
                    start: a.source.clone(),
                });
            }
            at = &a.target;
            prev = Some(l);
        }
        if at != self.target {
            return Err(QuiverError::UnknownVertex(self.target.clone()));
        }
        Ok(())
    }

    /// Juxtaposition form, last-applied arrow first.
    pub fn display(&self) -> String {
        if self.arrows.is_empty() {
            return format!("e_{}", self.source);
        }
        juxtapose(self.arrows.iter().rev().map(String::as_str))
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

/// Joins labels, inserting `·` when some label is longer than one character.
pub fn juxtapose<'a>(labels: impl Iterator<Item = &'a str>) -> String {
    let labels: Vec<&str> = labels.collect();
    if labels.iter().all(|l| l.chars().count() == 1) {
        labels.concat()
    } else {
        labels.join("·")
    }
}

/// Concatenates `p` then `q`.
pub fn compose(p: &Path, q: &Path) -> Result<Path, QuiverError> {
    if p.target != q.source {
        return Err(QuiverError::NotComposable {
            first: p
                .arrows
                .last()
                .cloned()
                .unwrap_or_else(|| format!("e_{}", p.target)),
            second: q
                .arrows
                .first()
                .cloned()
                .unwrap_or_else(|| format!("e_{}", q.source)),
            end: p.target.clone(),
            start: q.source.clone(),
        });
    }
    let mut arrows = p.arrows.clone();
    arrows.extend(q.arrows.iter().cloned());
    Ok(Path {
        source: p.source.clone(),
        target: q.target.clone(),
        arrows,
    })
}

/// A quiver with length-two monomial relations.
///
/// A relation `(a, b)` says the path "apply `a`, then `b`" is zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPresentation", into = "RawPresentation")]
pub struct Presentation {
    quiver: Quiver,
    relations: BTreeSet<(String, String)>,
}

#[derive(Serialize, Deserialize)]
struct RawPresentation {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    relations: Vec<(String, String)>,
}

impl TryFrom<RawPresentation> for Presentation {
    type Error = QuiverError;
    fn try_from(raw: RawPresentation) -> Result<Self, QuiverError> {
        Presentation::new(Quiver::new(raw.vertices, raw.arrows)?, raw.relations)
    }
}

impl From<Presentation> for RawPresentation {
    fn from(p: Presentation) -> Self {
        let relations = p.relations.into_iter().collect();
        let q: RawQuiver = p.quiver.into();
        RawPresentation {
            vertices: q.vertices,
            arrows: q.arrows,
            relations,
        }
    }
}

impl Presentation {
    pub fn new(quiver: Quiver, relations: Vec<(String, String)>) -> Result<Self, QuiverError> {
        let mut set = BTreeSet::new();
        for (a, b) in relations {
            let x = quiver.require(&a)?;
            let y = quiver.require(&b)?;
            if x.target != y.source {
                return Err(QuiverError::NotComposable {
                    first: a,
                    second: b,
                    end: x.target.clone(),
                    start: y.source.clone(),
                });
            }
            let shown = juxtapose([b.as_str(), a.as_str()].into_iter());
            if !set.insert((a, b)) {
                return Err(QuiverError::DuplicateRelation(shown));
            }
        }
        Ok(Presentation {
            quiver,
            relations: set,
        })
    }

    /// Builds a presentation from string slices; relations are given in
    /// application order.
    pub fn from_parts(
        vertices: &[&str],
        arrows: &[(&str, &str, &str)],
        relations: &[(&str, &str)],
    ) -> Result<Self, QuiverError> {
        Presentation::new(
            Quiver::from_parts(vertices, arrows)?,
            relations
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        )
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &BTreeSet<(String, String)> {
        &self.relations
    }

    pub fn is_relation(&self, first: &str, then: &str) -> bool {
        self.relations
            .contains(&(first.to_string(), then.to_string()))
    }
}

/// True iff some consecutive pair of arrows of `p` is a relation.
pub fn path_in_ideal(p: &Path, pres: &Presentation) -> Result<bool, QuiverError> {
    p.validate(pres.quiver())?;
    Ok(p.arrows.windows(2).any(|w| pres.is_relation(&w[0], &w[1])))
}

// ---------------------------------------------------------------------------
// Text format

struct Statement {
    line: usize,
    column: usize,
    text: String,
}

fn statements(text: &str) -> Result<Vec<Statement>, QuiverError> {
    let mut out = Vec::new();
    let mut buf = String::new();
    let mut start: Option<(usize, usize)> = None;
    for (ln, raw_line) in text.lines().enumerate() {
        let line = raw_line.split('#').next().unwrap_or("");
        for (col, ch) in line.chars().enumerate() {
            if ch == ';' {
                let (l, c) = start.unwrap_or((ln + 1, col + 1));
                out.push(Statement {
                    line: l,
                    column: c,
                    text: buf.trim().to_string(),
                });
                buf.clear();
                start = None;
            } else {
                if start.is_none() && !ch.is_whitespace() {
                    start = Some((ln + 1, col + 1));
                }
                buf.push(ch);
            }
        }
        buf.push(' ');
    }
    if let Some((line, column)) = start {
        return Err(QuiverError::Syntax {
            line,
            column,
            message: "statement is missing its terminating `;`".into(),
        });
    }
    Ok(out)
}

fn syntax(s: &Statement, message: impl Into<String>) -> QuiverError {
    QuiverError::Syntax {
        line: s.line,
        column: s.column,
        message: message.into(),
    }
}

/// Splits a juxtaposed relation `ba` into `(a, b)` in application order.
fn split_relation(word: &str, q: &Quiver) -> Result<(String, String), QuiverError> {
    let mut found = Vec::new();
    for (k, _) in word.char_indices().skip(1) {
        let (left, right) = word.split_at(k);
        if q.arrow(left).is_some() && q.arrow(right).is_some() {
            found.push((right.to_string(), left.to_string()));
        }
    }
    match found.len() {
        0 => Err(QuiverError::UnsplittableRelation(word.to_string())),
        1 => Ok(found.pop().unwrap()),
        _ => Err(QuiverError::AmbiguousRelation(word.to_string())),
    }
}

/// Parses the line-oriented presentation format.
///
/// ```
/// use singcat::quiver::parse_presentation;
/// let p = parse_presentation("vertices 1 2 3;\narrow a: 1 -> 2;\narrow b: 2 -> 3;\nrelation ba;\n").unwrap();
/// assert!(p.is_relation("a", "b"));
/// ```
pub fn parse_presentation(text: &str) -> Result<Presentation, QuiverError> {
    let mut vertices: Option<Vec<String>> = None;
    let mut arrows = Vec::new();
    let mut pending = Vec::new();
    for s in statements(text)? {
        let (head, rest) = match s.text.split_once(char::is_whitespace) {
            Some((h, r)) => (h, r.trim()),
            None => (s.text.as_str(), ""),
        };
        match head {
            "" => {}
            "vertices" => {
                if vertices.is_some() {
                    return Err(syntax(&s, "`vertices` declared twice"));
                }
                vertices = Some(rest.split_whitespace().map(str::to_string).collect());
            }
            "arrows" | "relations" if rest.is_empty() => {}
            "arrow" => {
                let (label, ends) = rest
                    .split_once(':')
                    .ok_or_else(|| syntax(&s, "expected `arrow <label>: <src> -> <tgt>`"))?;
                let (src, tgt) = ends
                    .split_once("->")
                    .ok_or_else(|| syntax(&s, "expected `->` between source and target"))?;
                let (label, src, tgt) = (label.trim(), src.trim(), tgt.trim());
                if label.is_empty() || src.is_empty() || tgt.is_empty() {
                    return Err(syntax(&s, "empty label, source or target"));
                }
                for part in [label, src, tgt] {
                    if part.contains(char::is_whitespace) {
                        return Err(syntax(
                            &s,
                            format!("identifier `{part}` contains whitespace"),
                        ));
                    }
                }
                arrows.push(Arrow::new(label, src, tgt));
            }
            "relation" => {
                if rest.is_empty() {
                    return Err(syntax(&s, "empty relation"));
                }
                pending.push((s.line, s.column, rest.to_string()));
            }
            other => return Err(syntax(&s, format!("unknown statement `{other}`"))),
        }
    }
    let quiver = Quiver::new(vertices.unwrap_or_default(), arrows)?;
    let mut relations = Vec::new();
    for (_, _, word) in pending {
        let parts: Vec<&str> = word
            .split(|c: char| c.is_whitespace() || c == '·')
            .filter(|p| !p.is_empty())
            .collect();
        let pair = match parts.as_slice() {
            [b, a] => (a.to_string(), b.to_string()),
            [w] => split_relation(w, &quiver)?,
            _ => return Err(QuiverError::UnsplittableRelation(word)),
        };
        relations.push(pair);
    }
    Presentation::new(quiver, relations)
}

/// Writes the canonical text form; `parse_presentation` inverts it.
pub fn serialize_presentation(p: &Presentation) -> String {
    let q = p.quiver();
    let mut out = String::from("vertices");
    for v in q.vertices() {
        out.push(' ');
        out.push_str(v);
    }
    out.push_str(";\n");
    for a in q.arrows() {
        out.push_str(&format!(
            "arrow {}: {} -> {};\n",
            a.label, a.source, a.target
        ));
    }
    for (a, b) in p.relations() {
        let glued = format!("{b}{a}");
        let word = match split_relation(&glued, q) {
            Ok((x, y)) if &x == a && &y == b => glued,
            _ => format!("{b} {a}"),
        };
        out.push_str(&format!("relation {word};\n"));
    }
    out
}
