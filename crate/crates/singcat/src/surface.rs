//! Dual intersection graphs of rational surface singularities.
//!
//! Covers Jung–Hirzebruch expansions for cyclic quotients, Laufer's
//! fundamental cycle, ADE recognition of `(-2)`-trees and the block
//! decomposition obtained by contracting a set of `(-2)`-curves.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ade::AdeType;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("need n > 1 and 0 < a < n, got n = {n}, a = {a}")]
    Bounds { n: u64, a: u64 },
    #[error("gcd({n}, {a}) = {g}, expected 1")]
    NotCoprime { n: u64, a: u64, g: u64 },
    #[error("graph is not a tree: {0}")]
    NotTree(String),
    #[error("curve `{vertex}` has self-intersection {weight}, expected at most -2")]
    Weight { vertex: String, weight: i64 },
    #[error("intersection form is not negative definite")]
    NotNegativeDefinite,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("curve `{vertex}` has self-intersection {weight}; only (-2)-curves can be contracted")]
    NotMinusTwo { vertex: String, weight: i64 },
    #[error("not an ADE diagram: {0}")]
    NotAde(String),
    #[error("Laufer iteration exceeded {0} steps")]
    NoConvergence(usize),
    #[error("syntax error at line {line}: {message}")]
    Syntax { line: usize, message: String },
}

// ---------------------------------------------------------------------------
// Continued fractions

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Jung–Hirzebruch expansion `n/a = α_1 - 1/(α_2 - 1/(… - 1/α_t))`.
///
/// ```
/// assert_eq!(singcat::surface::jung_hirzebruch(51, 11).unwrap(), vec![5, 3, 4]);
/// ```
pub fn jung_hirzebruch(n: u64, a: u64) -> Result<Vec<u64>, SurfaceError> {
    if n <= 1 || a == 0 || a >= n {
        return Err(SurfaceError::Bounds { n, a });
    }
    let g = gcd(n, a);
    if g != 1 {
        return Err(SurfaceError::NotCoprime { n, a, g });
    }
    let (mut n, mut a) = (n, a);
    let mut out = Vec::new();
    while a != 0 {
        let alpha = n.div_ceil(a);
        out.push(alpha);
        (n, a) = (a, alpha * a - n);
    }
    Ok(out)
}

/// Evaluates `α_1 - 1/(α_2 - 1/(… - 1/α_t))` exactly.
pub fn evaluate_hj(coeffs: &[u64]) -> BigRational {
    let mut acc: Option<BigRational> = None;
    for &c in coeffs.iter().rev() {
        let c = BigRational::from_integer(BigInt::from(c));
        acc = Some(match acc {
            None => c,
            Some(x) => c - x.recip(),
        });
    }
    acc.unwrap_or_else(BigRational::zero)
}

// ---------------------------------------------------------------------------
// Intersection forms

/// Tests negative definiteness of the symmetric matrix with the given
/// diagonal and 0/1 off-diagonal adjacency, via leading principal minors.
pub fn is_negative_definite(weights: &[i64], edges: &[(usize, usize)]) -> bool {
    let n = weights.len();
    // -M must be positive definite.
    let mut m = vec![vec![0i64; n]; n];
    for (i, &w) in weights.iter().enumerate() {
        m[i][i] = -w;
    }
    for &(i, j) in edges {
        m[i][j] -= 1;
        m[j][i] -= 1;
    }
    leading_minors_positive(m)
}

/// Fraction-free (Bareiss) elimination without pivoting: after step `k`
/// the pivot equals the `k`-th leading principal minor.
fn leading_minors_positive(m: Vec<Vec<i64>>) -> bool {
    match bareiss_small(&m) {
        Some(r) => r,
        None => bareiss_big(&m),
    }
}

fn bareiss_small(m: &[Vec<i64>]) -> Option<bool> {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut prev: i128 = 1;
    for k in 0..n {
        if a[k][k] <= 0 {
            return Some(false);
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let x = a[i][j].checked_mul(a[k][k])?;
                let y = a[i][k].checked_mul(a[k][j])?;
                a[i][j] = x.checked_sub(y)? / prev;
            }
        }
        prev = a[k][k];
    }
    Some(true)
}

fn bareiss_big(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k] <= BigInt::zero() {
            return false;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    true
}

fn is_tree(n: usize, edges: &[(usize, usize)]) -> Result<(), String> {
    if n == 0 {
        return Err("no vertices".into());
    }
    if edges.len() != n - 1 {
        return Err(format!("{} vertices but {} edges", n, edges.len()));
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for &(i, j) in edges {
        if i == j {
            return Err("self-loop".into());
        }
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri == rj {
            return Err("contains a cycle or a doubled edge".into());
        }
        parent[ri] = rj;
    }
    Ok(())
}

/// A weighted tree of exceptional curves with negative definite
/// intersection form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualGraph {
    vertices: Vec<String>,
    weights: Vec<i64>,
    edges: Vec<(usize, usize)>,
}

impl DualGraph {
    /// Validates, in order: tree shape, weights at most -2, negative
    /// definiteness.
    pub fn new(
        vertices: Vec<(String, i64)>,
        edges: Vec<(String, String)>,
    ) -> Result<Self, SurfaceError> {
        let index: BTreeMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(k, (v, _))| (v.as_str(), k))
            .collect();
        if index.len() != vertices.len() {
            return Err(SurfaceError::NotTree("duplicate vertex".into()));
        }
        let mut e = Vec::new();
        for (x, y) in &edges {
            let i = *index
                .get(x.as_str())
                .ok_or_else(|| SurfaceError::UnknownVertex(x.clone()))?;
            let j = *index
                .get(y.as_str())
                .ok_or_else(|| SurfaceError::UnknownVertex(y.clone()))?;
            e.push((i.min(j), i.max(j)));
        }
        DualGraph::from_indexed(
            vertices.iter().map(|(v, _)| v.clone()).collect(),
            vertices.iter().map(|(_, w)| *w).collect(),
            e,
        )
    }

    pub fn from_indexed(
        vertices: Vec<String>,
        weights: Vec<i64>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self, SurfaceError> {
        is_tree(vertices.len(), &edges).map_err(SurfaceError::NotTree)?;
        for (v, &w) in vertices.iter().zip(&weights) {
            if w > -2 {
                return Err(SurfaceError::Weight {
                    vertex: v.clone(),
                    weight: w,
                });
            }
        }
        if !is_negative_definite(&weights, &edges) {
            return Err(SurfaceError::NotNegativeDefinite);
        }
        Ok(DualGraph {
            vertices,
            weights,
            edges,
        })
    }

    /// A path `1 - 2 - … - t` with weights `-α_i`.
    pub fn string(alphas: &[u64]) -> Result<Self, SurfaceError> {
        let n = alphas.len();
        DualGraph::from_indexed(
            (1..=n).map(|k| k.to_string()).collect(),
            alphas.iter().map(|&a| -(a as i64)).collect(),
            (1..n).map(|k| (k - 1, k)).collect(),
        )
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn weight(&self, v: &str) -> Option<i64> {
        self.position(v).map(|k| self.weights[k])
    }

    pub fn position(&self, v: &str) -> Option<usize> {
        self.vertices.iter().position(|w| w == v)
    }

    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// `Z.E_i` for the cycle with coefficients `z`.
    pub fn intersect(&self, z: &[u64], i: usize) -> i64 {
        let own = self.weights[i] * z[i] as i64;
        own + self.neighbours(i).iter().map(|&j| z[j] as i64).sum::<i64>()
    }

    pub fn minus_two_vertices(&self) -> Vec<String> {
        self.vertices
            .iter()
            .zip(&self.weights)
            .filter(|(_, &w)| w == -2)
            .map(|(v, _)| v.clone())
            .collect()
    }
}

/// Dual graph of the cyclic quotient singularity `R_{n,a}`.
pub fn cyclic_dual_graph(n: u64, a: u64) -> Result<DualGraph, SurfaceError> {
    DualGraph::string(&jung_hirzebruch(n, a)?)
}

/// A cycle `Σ z_i E_i`, listed in vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositiveCycle {
    pub coefficients: BTreeMap<String, u64>,
}

const LAUFER_LIMIT: usize = 1_000_000;

/// Laufer's algorithm, adding `E_i` for the smallest violating `i`.
pub fn fundamental_cycle(g: &DualGraph) -> Result<Vec<u64>, SurfaceError> {
    fundamental_cycle_with(g, |violators| violators[0])
}

/// Laufer's algorithm; `pick` chooses which violating curve to add.
pub fn fundamental_cycle_with(
    g: &DualGraph,
    mut pick: impl FnMut(&[usize]) -> usize,
) -> Result<Vec<u64>, SurfaceError> {
    let n = g.vertices.len();
    let mut z = vec![1u64; n];
    for _ in 0..LAUFER_LIMIT {
        let violators: Vec<usize> = (0..n).filter(|&i| g.intersect(&z, i) > 0).collect();
        if violators.is_empty() {
            return Ok(z);
        }
        z[pick(&violators)] += 1;
    }
    Err(SurfaceError::NoConvergence(LAUFER_LIMIT))
}

pub fn fundamental_cycle_named(g: &DualGraph) -> Result<PositiveCycle, SurfaceError> {
    let z = fundamental_cycle(g)?;
    Ok(PositiveCycle {
        coefficients: g.vertices.iter().cloned().zip(z).collect(),
    })
}

/// Ranks of the indecomposable special CM modules: the coefficients of
/// the fundamental cycle.
pub fn special_ranks(g: &DualGraph) -> Result<BTreeMap<String, u64>, SurfaceError> {
    Ok(fundamental_cycle_named(g)?.coefficients)
}

/// Curves of self-intersection below -2; their specials are projective.
pub fn projective_injective_vertices(g: &DualGraph) -> Vec<String> {
    g.vertices
        .iter()
        .zip(&g.weights)
        .filter(|(_, &w)| w < -2)
        .map(|(v, _)| v.clone())
        .collect()
}

/// Multiplicity `-2 - E_i^2` of `Ω(M_i)` in `Ω(ω_R)`.
pub fn canonical_syzygy_multiplicities(g: &DualGraph) -> BTreeMap<String, u64> {
    g.vertices
        .iter()
        .zip(&g.weights)
        .map(|(v, &w)| (v.clone(), (-2 - w) as u64))
        .collect()
}

// ---------------------------------------------------------------------------
// ADE recognition

/// Classifies a connected tree by shape, given as `n` vertices and edges.
pub fn ade_of_tree(n: usize, edges: &[(usize, usize)]) -> Result<AdeType, SurfaceError> {
    is_tree(n, edges).map_err(SurfaceError::NotTree)?;
    let mut adj = vec![Vec::new(); n];
    for &(i, j) in edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
    match branch.as_slice() {
        [] => Ok(AdeType::a(n as u32)),
        [c] if adj[*c].len() == 3 => {
            let mut arms: Vec<usize> = adj[*c]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (*c, start, 1);
                    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                        (prev, cur) = (cur, next);
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => Ok(AdeType::d(*k as u32 + 3)),
                [1, 2, 2] => Ok(AdeType::e(6)),
                [1, 2, 3] => Ok(AdeType::e(7)),
                [1, 2, 4] => Ok(AdeType::e(8)),
                _ => Err(SurfaceError::NotAde(format!("arm lengths {arms:?}"))),
            }
        }
        [c] => Err(SurfaceError::NotAde(format!(
            "vertex of degree {}",
            adj[*c].len()
        ))),
        _ => Err(SurfaceError::NotAde(format!(
            "{} branch vertices",
            branch.len()
        ))),
    }
}

/// ADE type of a connected all-`(-2)` dual graph.
pub fn ade_recognize(g: &DualGraph) -> Result<AdeType, SurfaceError> {
    for (v, &w) in g.vertices.iter().zip(&g.weights) {
        if w != -2 {
            return Err(SurfaceError::NotMinusTwo {
                vertex: v.clone(),
                weight: w,
            });
        }
    }
    ade_of_tree(g.vertices.len(), &g.edges)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    #[serde(rename = "type")]
    pub ade: AdeType,
    pub vertices: Vec<String>,
}

/// Stable category of the Frobenius structure attached to a contraction
/// set: one ADE block per connected component of the contracted curves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub blocks: Vec<Block>,
}

impl Decomposition {
    /// Block types, sorted.
    pub fn types(&self) -> Vec<AdeType> {
        let mut t: Vec<AdeType> = self.blocks.iter().map(|b| b.ade).collect();
        t.sort();
        t
    }
}

/// Contracts exactly the curves in `s`, which must all be `(-2)`-curves.
pub fn decompose(g: &DualGraph, s: &[String]) -> Result<Decomposition, SurfaceError> {
    let mut chosen = BTreeSet::new();
    for v in s {
        let k = g
            .position(v)
            .ok_or_else(|| SurfaceError::UnknownVertex(v.clone()))?;
        if g.weights[k] != -2 {
            return Err(SurfaceError::NotMinusTwo {
                vertex: v.clone(),
                weight: g.weights[k],
            });
        }
        chosen.insert(k);
    }
    let mut seen = BTreeSet::new();
    let mut blocks = Vec::new();
    for &start in &chosen {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for y in g.neighbours(x) {
                if chosen.contains(&y) && seen.insert(y) {
                    comp.push(y);
                    stack.push(y);
                }
            }
        }
        comp.sort_unstable();
        let local: BTreeMap<usize, usize> = comp.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let edges: Vec<(usize, usize)> = g
            .edges
            .iter()
            .filter_map(|(a, b)| Some((*local.get(a)?, *local.get(b)?)))
            .collect();
        blocks.push(Block {
            ade: ade_of_tree(comp.len(), &edges)?,
            vertices: comp.iter().map(|&k| g.vertices[k].clone()).collect(),
        });
    }
    blocks.sort_by(|x, y| (x.ade, &x.vertices).cmp(&(y.ade, &y.vertices)));
    Ok(Decomposition { blocks })
}

/// The standard structure: contract every `(-2)`-curve.
pub fn decompose_standard(g: &DualGraph) -> Result<Decomposition, SurfaceError> {
    decompose(g, &g.minus_two_vertices())
}

// ---------------------------------------------------------------------------
// Graph files

/// Parses `vertex <id> <weight>;` and `edge <id> <id>;` statements.
pub fn parse_graph(text: &str) -> Result<DualGraph, SurfaceError> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        for stmt in line.split(';') {
            let words: Vec<&str> = stmt.split_whitespace().collect();
            let err = |m: &str| SurfaceError::Syntax {
                line: ln + 1,
                message: m.to_string(),
            };
            match words.as_slice() {
                [] => {}
                ["vertex", id, w] => {
                    let w: i64 = w.parse().map_err(|_| err("weight is not an integer"))?;
                    vertices.push((id.to_string(), w));
                }
                ["edge", a, b] => edges.push((a.to_string(), b.to_string())),
                _ => return Err(err("expected `vertex <id> <weight>;` or `edge <id> <id>;`")),
            }
        }
        if !line.trim().is_empty() && !line.trim_end().ends_with(';') {
            return Err(SurfaceError::Syntax {
                line: ln + 1,
                message: "statement is missing its terminating `;`".into(),
            });
        }
    }
    DualGraph::new(vertices, edges)
}

pub fn serialize_graph(g: &DualGraph) -> String {
    let mut out = String::new();
    for (v, w) in g.vertices.iter().zip(&g.weights) {
        out.push_str(&format!("vertex {v} {w};\n"));
    }
    for &(a, b) in &g.edges {
        out.push_str(&format!("edge {} {};\n", g.vertices[a], g.vertices[b]));
    }
    out
}

// ---------------------------------------------------------------------------
// Tree enumeration

/// All unlabelled trees on `n` vertices, as edge lists on `0..n`.
pub fn free_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n == 0 {
        return Vec::new();
    }
    let mut layer: BTreeMap<String, Vec<(usize, usize)>> = BTreeMap::new();
    layer.insert(canonical_form(1, &[]), Vec::new());
    for size in 1..n {
        let mut next = BTreeMap::new();
        for edges in layer.values() {
            for v in 0..size {
                let mut e = edges.clone();
                e.push((v, size));
                next.entry(canonical_form(size + 1, &e)).or_insert(e);
            }
        }
        layer = next;
    }
    layer.into_values().collect()
}

/// AHU encoding rooted at the centre (the smaller encoding for bicentral
/// trees).
fn canonical_form(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut leaves: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= leaves.len();
        let mut fresh = Vec::new();
        for &leaf in &leaves {
            for &m in &adj[leaf] {
                degree[m] -= 1;
                if degree[m] == 1 {
                    fresh.push(m);
                }
            }
        }
        leaves = fresh;
    }
    fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = adj[v]
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| encode(adj, w, v))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    leaves
        .iter()
        .map(|&c| encode(&adj, c, usize::MAX))
        .min()
        .unwrap_or_default()
}
