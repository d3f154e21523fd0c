//! The relative singularity category of the node and of the
//! zero-dimensional `A_1` singularity.
//!
//! Objects are shifts of the projectives `P_+`, `P_-` and of the minimal
//! strings `S_τ(l)`. All Hom spaces are zero or one dimensional and are
//! given by closed formulas.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quiver::{path_in_ideal, Path, Presentation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub const ALL: [Sign; 2] = [Sign::Plus, Sign::Minus];
}

/// `δ_n`: the identity for even `n`, the swap for odd `n`.
pub fn delta(n: i64, s: Sign) -> Sign {
    if n.rem_euclid(2) == 0 {
        s
    } else {
        s.flip()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Kind {
    Projective { sign: Sign },
    MinimalString { sign: Sign, length: u32 },
}

/// An indecomposable object `P_σ[n]` or `S_τ(l)[n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NodalIndecomposable {
    pub kind: Kind,
    pub shift: i64,
}

impl NodalIndecomposable {
    pub fn p(sign: Sign, shift: i64) -> Self {
        NodalIndecomposable {
            kind: Kind::Projective { sign },
            shift,
        }
    }

    /// `S_τ(l)[n]`; panics if `l == 0`.
    pub fn s(sign: Sign, length: u32, shift: i64) -> Self {
        assert!(length >= 1, "minimal strings have length at least one");
        NodalIndecomposable {
            kind: Kind::MinimalString { sign, length },
            shift,
        }
    }

    pub fn shifted(self, by: i64) -> Self {
        NodalIndecomposable {
            shift: self.shift + by,
            ..self
        }
    }

    /// Every indecomposable with `|shift| <= max_shift` and string length
    /// at most `max_len`.
    pub fn window(max_shift: i64, max_len: u32) -> Vec<Self> {
        let mut out = Vec::new();
        for n in -max_shift..=max_shift {
            for s in Sign::ALL {
                out.push(Self::p(s, n));
                for l in 1..=max_len {
                    out.push(Self::s(s, l, n));
                }
            }
        }
        out
    }
}

impl fmt::Display for NodalIndecomposable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Projective { sign } => write!(f, "P{}", sign.symbol())?,
            Kind::MinimalString { sign, length } => write!(f, "S{}({})", sign.symbol(), length)?,
        }
        if self.shift != 0 {
            write!(f, "[{}]", self.shift)?;
        }
        Ok(())
    }
}

/// `dim Hom(X, Y)`.
pub fn hom_dim(x: &NodalIndecomposable, y: &NodalIndecomposable) -> u32 {
    let n = y.shift - x.shift;
    let hit = match (x.kind, y.kind) {
        (Kind::Projective { sign: mu }, Kind::Projective { sign: tau }) => {
            n <= 0 && mu == delta(n, tau)
        }
        (
            Kind::Projective { sign: mu },
            Kind::MinimalString {
                sign: tau,
                length: l,
            },
        ) => {
            // Hom(P_μ[m], S_τ(l)) with m = -n
            let m = -n;
            0 <= m && m < l as i64 && mu == delta(m, tau)
        }
        (
            Kind::MinimalString {
                sign: tau,
                length: l,
            },
            Kind::Projective { sign: mu },
        ) => 2 <= n && n <= l as i64 + 1 && mu != delta(n, tau),
        (
            Kind::MinimalString {
                sign: tau,
                length: l,
            },
            Kind::MinimalString {
                sign: mu,
                length: lp,
            },
        ) => {
            let (l, lp) = (l as i64, lp as i64);
            (n <= 0 && l >= lp + n && lp + n >= 1 && mu == delta(n, tau))
                || (n >= 2 && lp >= l + 2 - n && l + 2 - n >= 1 && mu != delta(n, tau))
        }
    };
    hit as u32
}

/// A finite direct sum of indecomposables.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodalObject {
    pub summands: Vec<NodalIndecomposable>,
}

impl NodalObject {
    pub fn zero() -> Self {
        NodalObject::default()
    }
}

impl From<Vec<NodalIndecomposable>> for NodalObject {
    fn from(summands: Vec<NodalIndecomposable>) -> Self {
        NodalObject { summands }
    }
}

pub fn hom_dim_sum(x: &NodalObject, y: &NodalObject) -> u32 {
    x.summands
        .iter()
        .flat_map(|a| y.summands.iter().map(move |b| hom_dim(a, b)))
        .sum()
}

/// Membership in the cluster subcategory: `P_-[n]` and `S_-(2l)[n]`.
pub fn cluster_member(x: &NodalIndecomposable) -> bool {
    match x.kind {
        Kind::Projective { sign } => sign == Sign::Minus,
        Kind::MinimalString { sign, length } => sign == Sign::Minus && length % 2 == 0,
    }
}

// ---------------------------------------------------------------------------
// Minimal strings as complexes over the nodal quiver

pub const NODE_MINUS: &str = "-";
pub const NODE_STAR: &str = "*";
pub const NODE_PLUS: &str = "+";

/// The quiver `- ⇄ * ⇄ +` with `α: - → *`, `β: * → -`, `δ: * → +`,
/// `γ: + → *` and zero relations `δα`, `βγ`.
pub fn nodal_presentation() -> Presentation {
    Presentation::from_parts(
        &[NODE_MINUS, NODE_STAR, NODE_PLUS],
        &[
            ("α", NODE_MINUS, NODE_STAR),
            ("β", NODE_STAR, NODE_MINUS),
            ("δ", NODE_STAR, NODE_PLUS),
            ("γ", NODE_PLUS, NODE_STAR),
        ],
        &[("α", "δ"), ("γ", "β")],
    )
    .expect("nodal quiver is well formed")
}

fn vertex_of(s: Sign) -> &'static str {
    match s {
        Sign::Plus => NODE_PLUS,
        Sign::Minus => NODE_MINUS,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub degree: i64,
    /// Vertex of the indecomposable projective: `-`, `*` or `+`.
    pub projective: String,
}

/// `d_k: P_x → P_y` is right multiplication by `path`, a path from `y`
/// to `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Differential {
    pub from_degree: i64,
    pub path: Path,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectiveComplex {
    pub terms: Vec<Term>,
    pub differentials: Vec<Differential>,
}

fn path(labels: &[&str]) -> Path {
    Path::from_arrows(nodal_presentation().quiver(), labels).expect("nodal path")
}

/// The complex `S_τ(l)`, with `P_τ` in degree 0.
///
/// Built from the right: the map into `P_τ` is forced, and each earlier map
/// must start with the unique arrow that kills the previous one.
pub fn minimal_string_complex(tau: Sign, l: u32) -> ProjectiveComplex {
    assert!(l >= 1, "minimal strings have length at least one");
    // Paths listed from degree 0 leftwards.
    let mut rev: Vec<Path> = Vec::new();
    let mut last = match tau {
        Sign::Plus => "γ",
        Sign::Minus => "α",
    };
    rev.push(path(&[last]));
    for _ in 1..l {
        let p = match last {
            "γ" => ["β", "α"],
            _ => ["δ", "γ"],
        };
        rev.push(path(&p));
        last = p[1];
    }
    let (head, sigma) = match last {
        "γ" => ("β", Sign::Minus),
        _ => ("δ", Sign::Plus),
    };
    rev.push(path(&[head]));

    let top = -(l as i64 + 1);
    let mut terms = vec![Term {
        degree: top,
        projective: vertex_of(sigma).to_string(),
    }];
    for k in 1..=l as i64 {
        terms.push(Term {
            degree: top + k,
            projective: NODE_STAR.to_string(),
        });
    }
    terms.push(Term {
        degree: 0,
        projective: vertex_of(tau).to_string(),
    });
    let differentials = rev
        .into_iter()
        .rev()
        .enumerate()
        .map(|(k, path)| Differential {
            from_degree: top + k as i64,
            path,
        })
        .collect();
    ProjectiveComplex {
        terms,
        differentials,
    }
}

impl ProjectiveComplex {
    /// Each differential points the right way, and consecutive maps
    /// compose to a path in the relation ideal.
    pub fn is_complex(&self) -> bool {
        let pres = nodal_presentation();
        let ok_shape = self.differentials.iter().enumerate().all(|(k, d)| {
            let src = &self.terms[k].projective;
            let tgt = &self.terms[k + 1].projective;
            d.path.validate(pres.quiver()).is_ok() && &d.path.source == tgt && &d.path.target == src
        });
        ok_shape
            && self.differentials.windows(2).all(|w| {
                let mut arrows = w[1].path.arrows.clone();
                arrows.extend(w[0].path.arrows.iter().cloned());
                let composite = Path {
                    source: w[1].path.source.clone(),
                    target: w[0].path.target.clone(),
                    arrows,
                };
                path_in_ideal(&composite, &pres).unwrap_or(false)
            })
    }

    /// Alternating sum of the terms on the basis `(P_+, P_-)`; `P_*` is zero.
    pub fn euler_class(&self) -> K0Class {
        let mut c = K0Class { plus: 0, minus: 0 };
        for t in &self.terms {
            let s = if t.degree.rem_euclid(2) == 0 { 1 } else { -1 };
            match t.projective.as_str() {
                NODE_PLUS => c.plus += s,
                NODE_MINUS => c.minus += s,
                _ => {}
            }
        }
        c
    }
}

/// A class in `K_0 ≅ Z^2`, written on the basis `([P_+], [P_-])`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct K0Class {
    pub plus: i64,
    pub minus: i64,
}

impl K0Class {
    pub fn to_pair(self) -> [i64; 2] {
        [self.plus, self.minus]
    }
}

impl std::ops::Add for K0Class {
    type Output = K0Class;
    fn add(self, o: K0Class) -> K0Class {
        K0Class {
            plus: self.plus + o.plus,
            minus: self.minus + o.minus,
        }
    }
}

impl std::ops::Neg for K0Class {
    type Output = K0Class;
    fn neg(self) -> K0Class {
        K0Class {
            plus: -self.plus,
            minus: -self.minus,
        }
    }
}

fn unit(s: Sign) -> K0Class {
    match s {
        Sign::Plus => K0Class { plus: 1, minus: 0 },
        Sign::Minus => K0Class { plus: 0, minus: 1 },
    }
}

pub fn k0_indecomposable(x: &NodalIndecomposable) -> K0Class {
    let base = match x.kind {
        Kind::Projective { sign } => unit(sign),
        Kind::MinimalString { sign, length } => {
            let sigma = if length % 2 == 0 { sign } else { sign.flip() };
            let tail = if length % 2 == 0 {
                -unit(sigma)
            } else {
                unit(sigma)
            };
            unit(sign) + tail
        }
    };
    if x.shift.rem_euclid(2) == 0 {
        base
    } else {
        -base
    }
}

pub fn k0_class(x: &NodalObject) -> K0Class {
    x.summands
        .iter()
        .map(k0_indecomposable)
        .fold(K0Class { plus: 0, minus: 0 }, |a, b| a + b)
}

/// Rank of the Grothendieck group of the nodal block.
pub const K0_RANK: usize = 2;

// ---------------------------------------------------------------------------
// Zero-dimensional A_1

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ZeroKind {
    Projective,
    MinimalString { length: u32 },
}

/// Indecomposable `P_2[n]` or `S(l)[n]` of the zero-dimensional block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZeroIndecomposable {
    pub kind: ZeroKind,
    pub shift: i64,
}

impl fmt::Display for ZeroIndecomposable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ZeroKind::Projective => write!(f, "P2")?,
            ZeroKind::MinimalString { length } => write!(f, "S({length})")?,
        }
        if self.shift != 0 {
            write!(f, "[{}]", self.shift)?;
        }
        Ok(())
    }
}

pub fn hom_dim_zero(x: &ZeroIndecomposable, y: &ZeroIndecomposable) -> u32 {
    let n = y.shift - x.shift;
    let hit = match (x.kind, y.kind) {
        (ZeroKind::Projective, ZeroKind::Projective) => n <= 0,
        (ZeroKind::Projective, ZeroKind::MinimalString { length }) => {
            let m = -n;
            0 <= m && m < length as i64
        }
        (ZeroKind::MinimalString { length }, ZeroKind::Projective) => {
            2 <= n && n <= length as i64 + 1
        }
        (ZeroKind::MinimalString { length: l }, ZeroKind::MinimalString { length: lp }) => {
            let (l, lp) = (l as i64, lp as i64);
            (n <= 0 && 0 < lp + n && lp + n <= l) || (2 <= n && n <= l + 1 && l + 1 < n + lp)
        }
    };
    hit as u32
}

// ---------------------------------------------------------------------------
// Auslander-Reiten components

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Component {
    StringPlus,
    StringMinus,
    ProjectivePlus,
    ProjectiveMinus,
}

impl FromStr for Component {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "string-plus" => Ok(Component::StringPlus),
            "string-minus" => Ok(Component::StringMinus),
            "projective-plus" => Ok(Component::ProjectivePlus),
            "projective-minus" => Ok(Component::ProjectiveMinus),
            _ => Err(format!("unknown component `{s}`")),
        }
    }
}

/// A finite piece of an AR component.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArFragment {
    pub vertices: Vec<NodalIndecomposable>,
    pub irreducible: Vec<(NodalIndecomposable, NodalIndecomposable)>,
    /// Pairs `(X, τX)`.
    pub translation: Vec<(NodalIndecomposable, NodalIndecomposable)>,
}

/// The part of `component` with shifts in `lo..=hi` and string lengths at
/// most `max_len`.
///
/// Projective components are lines `P_σ[n] → P_{-σ}[n-1]`. In the string
/// components the vertex `(l, j)` is `S_{δ_j(±)}(l)[j]`, with irreducible
/// maps `(l, j) → (l+1, j-1)` and `(l+1, j) → (l, j)`, and `τ(l, j) = (l, j+1)`.
pub fn ar_window(component: Component, lo: i64, hi: i64, max_len: u32) -> ArFragment {
    let mut frag = ArFragment::default();
    if lo > hi {
        return frag;
    }
    match component {
        Component::ProjectivePlus | Component::ProjectiveMinus => {
            let base = if component == Component::ProjectivePlus {
                Sign::Plus
            } else {
                Sign::Minus
            };
            let at = |n: i64| NodalIndecomposable::p(delta(n, base), n);
            for n in (lo..=hi).rev() {
                frag.vertices.push(at(n));
                if n > lo {
                    frag.irreducible.push((at(n), at(n - 1)));
                }
            }
        }
        Component::StringPlus | Component::StringMinus => {
            let base = if component == Component::StringPlus {
                Sign::Plus
            } else {
                Sign::Minus
            };
            let at = |l: u32, j: i64| NodalIndecomposable::s(delta(j, base), l, j);
            for j in lo..=hi {
                for l in 1..=max_len {
                    frag.vertices.push(at(l, j));
                    if l < max_len && j > lo {
                        frag.irreducible.push((at(l, j), at(l + 1, j - 1)));
                    }
                    if l < max_len {
                        frag.irreducible.push((at(l + 1, j), at(l, j)));
                    }
                    if j < hi {
                        frag.translation.push((at(l, j), at(l, j + 1)));
                    }
                }
            }
        }
    }
    frag
}

// ---------------------------------------------------------------------------
// Object syntax

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse object `{0}`: expected P+[n], S-(l)[n], P2[n] or S(l)[n]")]
pub struct ObjectSyntaxError(pub String);

/// An object of either block, as written on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParsedObject {
    Nodal(NodalIndecomposable),
    Zero(ZeroIndecomposable),
}

impl FromStr for ParsedObject {
    type Err = ObjectSyntaxError;
    fn from_str(raw: &str) -> Result<Self, ObjectSyntaxError> {
        let err = || ObjectSyntaxError(raw.to_string());
        let s: String = raw
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '−' { '-' } else { c })
            .collect();
        let (body, shift) = match s.find('[') {
            Some(k) => {
                let inner = s[k + 1..].strip_suffix(']').ok_or_else(err)?;
                (&s[..k], inner.parse::<i64>().map_err(|_| err())?)
            }
            None => (s.as_str(), 0),
        };
        let sign = |c: &str| match c {
            "+" => Some(Sign::Plus),
            "-" => Some(Sign::Minus),
            _ => None,
        };
        if body == "P2" {
            return Ok(ParsedObject::Zero(ZeroIndecomposable {
                kind: ZeroKind::Projective,
                shift,
            }));
        }
        if let Some(rest) = body.strip_prefix('P') {
            let sg = sign(rest).ok_or_else(err)?;
            return Ok(ParsedObject::Nodal(NodalIndecomposable::p(sg, shift)));
        }
        let rest = body.strip_prefix('S').ok_or_else(err)?;
        let open = rest.find('(').ok_or_else(err)?;
        let len: u32 = rest[open + 1..]
            .strip_suffix(')')
            .ok_or_else(err)?
            .parse()
            .map_err(|_| err())?;
        if len == 0 {
            return Err(err());
        }
        match &rest[..open] {
            "" => Ok(ParsedObject::Zero(ZeroIndecomposable {
                kind: ZeroKind::MinimalString { length: len },
                shift,
            })),
            sg => Ok(ParsedObject::Nodal(NodalIndecomposable::s(
                sign(sg).ok_or_else(err)?,
                len,
                shift,
            ))),
        }
    }
}
