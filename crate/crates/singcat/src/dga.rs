//! Dg Auslander algebras of ADE singularities.
//!
//! The quiver has the stable AR quiver as its degree 0 part, plus one
//! degree -1 arrow `ρ_i: i ⇢ τ⁻¹(i)` per vertex. The differential sends
//! `ρ_i` to the mesh relation starting at `i`. By Knörrer periodicity the
//! result only depends on the parity of the Krull dimension.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ade::{AdeType, Family};
use crate::quiver::Arrow;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DgError {
    #[error("no solid arrow from {from} to {to} continues `{arrow}`")]
    MissingPartner {
        arrow: String,
        from: String,
        to: String,
    },
    #[error("several solid arrows from {from} to {to} continue `{arrow}`")]
    AmbiguousPartner {
        arrow: String,
        from: String,
        to: String,
    },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Krull dimension modulo two.
pub fn knoerrer_parity(dim: u32) -> Parity {
    if dim.is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedQuiver {
    pub vertices: Vec<String>,
    /// Degree 0.
    pub solid: Vec<Arrow>,
    /// Degree -1, one per vertex, in vertex order.
    pub broken: Vec<Arrow>,
    /// `i ↦ τ⁻¹(i)`.
    pub tau_inverse: BTreeMap<String, String>,
}

/// `coefficient · path`, the path listed first-applied first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Term {
    pub coefficient: i64,
    pub path: Vec<String>,
}

impl Term {
    /// Juxtaposition, e.g. `α1α1*` for "α1* then α1".
    pub fn display(&self) -> String {
        let word: String = self.path.iter().rev().map(String::as_str).collect();
        match self.coefficient {
            1 => word,
            -1 => format!("-{word}"),
            c => format!("{c}{word}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Differential {
    /// Broken arrow label ↦ image, in vertex order.
    pub images: Vec<(String, Vec<Term>)>,
}

impl Differential {
    pub fn image(&self, rho: &str) -> Option<&[Term]> {
        self.images
            .iter()
            .find(|(r, _)| r == rho)
            .map(|(_, t)| t.as_slice())
    }
}

pub fn show_sum(terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms
        .iter()
        .map(Term::display)
        .collect::<Vec<_>>()
        .join(" + ")
}

#[derive(Default)]
struct Builder {
    vertices: Vec<String>,
    solid: Vec<Arrow>,
    tau_inverse: BTreeMap<String, String>,
}

impl Builder {
    fn vertices(mut self, vs: impl IntoIterator<Item = u32>) -> Self {
        self.vertices = vs.into_iter().map(|v| v.to_string()).collect();
        self
    }

    fn arrow(&mut self, label: &str, s: u32, t: u32) {
        self.solid
            .push(Arrow::new(label, &s.to_string(), &t.to_string()));
    }

    /// `α_i: s → t` and `α_i*: t → s`.
    fn pair(&mut self, i: u32, s: u32, t: u32) {
        self.arrow(&format!("α{i}"), s, t);
        self.arrow(&format!("α{i}*"), t, s);
    }

    fn swap(&mut self, a: u32, b: u32) {
        self.tau_inverse.insert(a.to_string(), b.to_string());
        self.tau_inverse.insert(b.to_string(), a.to_string());
    }

    fn finish(mut self) -> GradedQuiver {
        for v in &self.vertices {
            self.tau_inverse
                .entry(v.clone())
                .or_insert_with(|| v.clone());
        }
        let broken = self
            .vertices
            .iter()
            .map(|v| Arrow::new(&format!("ρ{v}"), v, &self.tau_inverse[v]))
            .collect();
        GradedQuiver {
            vertices: self.vertices,
            solid: self.solid,
            broken,
            tau_inverse: self.tau_inverse,
        }
    }
}

fn even_quiver(t: AdeType) -> GradedQuiver {
    let n = t.rank();
    let mut b = Builder::default().vertices(1..=n);
    match t.family() {
        Family::A => {
            for i in 1..n {
                b.pair(i, i, i + 1);
            }
        }
        Family::D => {
            b.pair(1, 1, 3);
            b.pair(2, 2, 3);
            for i in 3..n {
                b.pair(i, i, i + 1);
            }
        }
        Family::E => {
            b.pair(1, 1, 4);
            for i in 2..n {
                b.pair(i, i, i + 1);
            }
        }
    }
    b.finish()
}

fn odd_quiver(t: AdeType) -> GradedQuiver {
    let n = t.rank();
    match (t.family(), n) {
        (Family::A, 1) => {
            let mut b = Builder::default().vertices(1..=2);
            b.swap(1, 2);
            b.finish()
        }
        (Family::A, n) if n % 2 == 0 => {
            let m = n / 2;
            let mut b = Builder::default().vertices(1..=m);
            for i in 1..m {
                b.pair(i, i, i + 1);
            }
            b.arrow("γ", m, m);
            b.finish()
        }
        (Family::A, n) => {
            let m = n.div_ceil(2);
            let mut b = Builder::default().vertices(1..=m + 1);
            b.pair(1, 1, 3);
            b.pair(2, 2, 3);
            for i in 3..=m {
                b.pair(i, i, i + 1);
            }
            b.swap(1, 2);
            b.finish()
        }
        (Family::D, n) if n % 2 == 1 => odd_d_odd((n - 1) / 2),
        (Family::D, n) => odd_d_even(n / 2),
        (Family::E, 6) => {
            let mut b = Builder::default().vertices(1..=6);
            b.arrow("α1*", 3, 1);
            b.arrow("α2*", 4, 2);
            b.pair(3, 3, 5);
            b.pair(4, 4, 5);
            b.arrow("α2", 2, 3);
            b.arrow("α1", 1, 4);
            b.pair(5, 5, 6);
            b.swap(1, 2);
            b.swap(3, 4);
            b.finish()
        }
        (Family::E, 7) => odd_e_ladder(12, (13, 14), 6, 5),
        (Family::E, _) => odd_e_ladder(14, (15, 16), 10, 9),
    }
}

/// Two rows joined by crossing arrows: odd vertices on top, even below.
/// `α*_i: i+2 → i` along each row, `α_i` crossing from `i` to the next
/// column of the other row.
fn ladder(b: &mut Builder, last: u32) {
    for i in 1..=last - 2 {
        b.arrow(&format!("α{i}*"), i + 2, i);
    }
    for k in 1..=(last - 2) / 2 {
        let (odd, even) = (2 * k - 1, 2 * k);
        b.arrow(&format!("α{even}"), even, odd + 2);
        b.arrow(&format!("α{odd}"), odd, even + 2);
    }
    for k in 1..=last / 2 {
        b.swap(2 * k - 1, 2 * k);
    }
}

/// Odd `E_7` (ladder on `1..=12`) and odd `E_8` (ladder on `1..=14`), with
/// the extra pair `p, q` attached to `hub` and `foot`.
fn odd_e_ladder(last: u32, (p, q): (u32, u32), hub: u32, foot: u32) -> GradedQuiver {
    let mut b = Builder::default().vertices(1..=q);
    ladder(&mut b, last);
    b.arrow(&format!("α{p}"), p, hub);
    b.arrow(&format!("α{q}*"), hub, q);
    b.arrow(&format!("α{q}"), q, foot);
    b.arrow(&format!("α{p}*"), foot, p);
    b.swap(p, q);
    b.finish()
}

/// Odd `D_{2m+1}`: rows `0, 2, …, 4m-4` and `1, 3, …, 4m-3`, closed by the
/// vertex `4m-2`.
fn odd_d_odd(m: u32) -> GradedQuiver {
    let top = 4 * m - 4;
    let bottom = 4 * m - 3;
    let end = 4 * m - 2;
    let mut b = Builder::default().vertices(0..=end);
    rows(&mut b, top, bottom);
    b.arrow(&format!("α{top}"), end, top);
    b.arrow(&format!("α{top}*"), top, end);
    b.arrow(&format!("α{bottom}*"), end, bottom);
    b.arrow(&format!("α{bottom}"), bottom, end);
    for k in 0..=top / 2 {
        b.swap(2 * k, 2 * k + 1);
    }
    b.finish()
}

/// Odd `D_{2m}`: rows ending in `4m-6` and `4m-5`, closed by the four
/// vertices `4m-4, …, 4m-1`.
fn odd_d_even(m: u32) -> GradedQuiver {
    let top = 4 * m - 6;
    let bottom = 4 * m - 5;
    let (a, b_, c, d) = (4 * m - 4, 4 * m - 3, 4 * m - 2, 4 * m - 1);
    let mut b = Builder::default().vertices(0..=d);
    rows(&mut b, top, bottom);
    b.arrow(&format!("α{a}*"), bottom, a);
    b.arrow(&format!("α{d}*"), top, d);
    b.arrow(&format!("α{a}"), a, top);
    b.arrow(&format!("α{top}"), top, b_);
    b.arrow(&format!("α{bottom}"), bottom, c);
    b.arrow(&format!("α{d}"), d, bottom);
    b.arrow(&format!("α{c}"), c, top);
    b.arrow(&format!("α{b_}"), b_, bottom);
    for k in 0..=top / 2 {
        b.swap(2 * k, 2 * k + 1);
    }
    b.swap(a, b_);
    b.swap(c, d);
    b.finish()
}

/// Row arrows `α_{2k}: 2k → 2k+2`, `α_{2k+1}: 2k+1 → 2k+3` and the
/// crossings `α*_{2k+1}: 2k+2 → 2k+1`, `α*_{2k}: 2k+3 → 2k`, up to the
/// given last vertices of each row.
fn rows(b: &mut Builder, top: u32, bottom: u32) {
    let mut k = 0;
    while 2 * k + 2 <= top {
        b.arrow(&format!("α{}", 2 * k), 2 * k, 2 * k + 2);
        b.arrow(&format!("α{}*", 2 * k + 1), 2 * k + 2, 2 * k + 1);
        k += 1;
    }
    let mut k = 0;
    while 2 * k + 3 <= bottom {
        b.arrow(&format!("α{}", 2 * k + 1), 2 * k + 1, 2 * k + 3);
        b.arrow(&format!("α{}*", 2 * k), 2 * k + 3, 2 * k);
        k += 1;
    }
}

/// The graded quiver for `t` in the given parity.
pub fn graded_quiver(t: AdeType, p: Parity) -> GradedQuiver {
    match p {
        Parity::Even => even_quiver(t),
        Parity::Odd => odd_quiver(t),
    }
}

/// The mesh relation starting at `i`: for every solid arrow `a` out of
/// `i`, the path `a` followed by the unique solid arrow back to `τ⁻¹(i)`.
/// Terms starting with a starred arrow come first, then by arrow index.
pub fn mesh_image(q: &GradedQuiver, i: &str) -> Result<Vec<Term>, DgError> {
    let goal = q
        .tau_inverse
        .get(i)
        .ok_or_else(|| DgError::UnknownVertex(i.to_string()))?;
    let mut terms = Vec::new();
    for a in q.solid.iter().filter(|a| a.source == i) {
        let partners: Vec<&Arrow> = q
            .solid
            .iter()
            .filter(|b| b.source == a.target && &b.target == goal)
            .collect();
        let info = || (a.label.clone(), a.target.clone(), goal.clone());
        match partners.as_slice() {
            [b] => terms.push(Term {
                coefficient: 1,
                path: vec![a.label.clone(), b.label.clone()],
            }),
            [] => {
                let (arrow, from, to) = info();
                return Err(DgError::MissingPartner { arrow, from, to });
            }
            _ => {
                let (arrow, from, to) = info();
                return Err(DgError::AmbiguousPartner { arrow, from, to });
            }
        }
    }
    terms.sort_by_key(|t| {
        let first = &t.path[0];
        let index: u32 = first
            .chars()
            .filter(char::is_ascii_digit)
            .collect::<String>()
            .parse()
            .unwrap_or(0);
        (!first.ends_with('*'), index, first.clone())
    });
    Ok(terms)
}

/// The dg Auslander algebra of `t` in parity `p`.
///
/// ```
/// use singcat::ade::AdeType;
/// use singcat::dga::{dg_auslander, show_sum, Parity};
/// let (_, d) = dg_auslander(AdeType::a(4), Parity::Even).unwrap();
/// assert_eq!(show_sum(d.image("ρ2").unwrap()), "α1α1* + α2*α2");
/// ```
pub fn dg_auslander(t: AdeType, p: Parity) -> Result<(GradedQuiver, Differential), DgError> {
    let q = graded_quiver(t, p);
    let mut images = Vec::new();
    for (v, rho) in q.vertices.iter().zip(&q.broken) {
        images.push((rho.label.clone(), mesh_image(&q, v)?));
    }
    Ok((q, Differential { images }))
}

/// Rank of `K_0`: the number of vertices.
pub fn k0_rank(q: &GradedQuiver) -> usize {
    q.vertices.len()
}

/// Text rendering: vertices, arrows with degrees, then the differential.
pub fn render_text(q: &GradedQuiver, d: &Differential) -> String {
    let mut out = format!("vertices {};\n", q.vertices.join(" "));
    for a in &q.solid {
        let _ = writeln!(
            out,
            "arrow {}: {} -> {} deg 0;",
            a.label, a.source, a.target
        );
    }
    for a in &q.broken {
        let _ = writeln!(
            out,
            "arrow {}: {} --> {} deg -1;",
            a.label, a.source, a.target
        );
    }
    for (rho, terms) in &d.images {
        let _ = writeln!(out, "d({rho}) = {};", show_sum(terms));
    }
    out
}
