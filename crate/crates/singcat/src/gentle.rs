//! Gentle algebras: the gentleness test, critical cycles, Gorenstein
//! projective modules and the singularity-category decomposition.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quiver::{juxtapose, Arrow, Path, Presentation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GentleError {
    #[error("presentation is not gentle: {0}")]
    NotGentle(String),
    #[error("infinite-dimensional algebra: relation-free cycle through `{0}`")]
    InfiniteDimensional(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Condition {
    G1,
    G2,
    G3,
    G4,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub condition: Condition,
    pub location: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GentleReport {
    pub is_gentle: bool,
    pub violations: Vec<Violation>,
}

fn successors<'a>(p: &'a Presentation, a: &'a Arrow) -> impl Iterator<Item = &'a Arrow> + 'a {
    p.quiver().outgoing(&a.target)
}

fn predecessors<'a>(p: &'a Presentation, a: &'a Arrow) -> impl Iterator<Item = &'a Arrow> + 'a {
    p.quiver().incoming(&a.source)
}

fn labels(xs: &[&Arrow]) -> String {
    xs.iter()
        .map(|a| a.label.as_str())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Checks the four gentleness conditions and lists every violation.
pub fn check_gentle(p: &Presentation) -> GentleReport {
    let q = p.quiver();
    let mut violations = Vec::new();
    for v in q.vertices() {
        let inc = q.incoming(v).count();
        let out = q.outgoing(v).count();
        if inc > 2 || out > 2 {
            violations.push(Violation {
                condition: Condition::G1,
                location: v.clone(),
                detail: format!("{inc} incoming and {out} outgoing arrows"),
            });
        }
    }
    for b in q.arrows() {
        let rel_after: Vec<&Arrow> = successors(p, b)
            .filter(|a| p.is_relation(&b.label, &a.label))
            .collect();
        let rel_before: Vec<&Arrow> = predecessors(p, b)
            .filter(|g| p.is_relation(&g.label, &b.label))
            .collect();
        let free_after: Vec<&Arrow> = successors(p, b)
            .filter(|a| !p.is_relation(&b.label, &a.label))
            .collect();
        let free_before: Vec<&Arrow> = predecessors(p, b)
            .filter(|g| !p.is_relation(&g.label, &b.label))
            .collect();
        for (cond, list, what) in [
            (
                Condition::G3,
                &rel_after,
                "arrows after it with zero composite",
            ),
            (
                Condition::G3,
                &rel_before,
                "arrows before it with zero composite",
            ),
            (
                Condition::G4,
                &free_after,
                "arrows after it with nonzero composite",
            ),
            (
                Condition::G4,
                &free_before,
                "arrows before it with nonzero composite",
            ),
        ] {
            if list.len() > 1 {
                violations.push(Violation {
                    condition: cond,
                    location: b.label.clone(),
                    detail: format!("{what}: {}", labels(list)),
                });
            }
        }
    }
    GentleReport {
        is_gentle: violations.is_empty(),
        violations,
    }
}

fn require_gentle(p: &Presentation) -> Result<(), GentleError> {
    let report = check_gentle(p);
    match report.violations.first() {
        None => Ok(()),
        Some(v) => Err(GentleError::NotGentle(format!(
            "{:?} at {}: {}",
            v.condition, v.location, v.detail
        ))),
    }
}

/// A cyclic path whose consecutive arrows all compose to zero.
///
/// `arrows` lists the cycle in application order, rotated so that the
/// sequence is lexicographically least.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CriticalCycle {
    pub arrows: Vec<String>,
}

impl CriticalCycle {
    /// Rotates `arrows` into canonical position.
    pub fn new(arrows: Vec<String>) -> Self {
        let n = arrows.len();
        let best = (0..n)
            .min_by(|&i, &j| {
                let ri = arrows[i..].iter().chain(&arrows[..i]);
                let rj = arrows[j..].iter().chain(&arrows[..j]);
                ri.cmp(rj)
            })
            .unwrap_or(0);
        let mut arrows = arrows;
        arrows.rotate_left(best);
        CriticalCycle { arrows }
    }

    pub fn length(&self) -> usize {
        self.arrows.len()
    }

    /// Juxtaposition form, e.g. `jfe` for the cycle "e, then f, then j".
    pub fn display(&self) -> String {
        juxtapose(self.arrows.iter().rev().map(String::as_str))
    }

    /// Whether `other` lists the same cycle up to rotation.
    pub fn same_as(&self, other: &[&str]) -> bool {
        let other = CriticalCycle::new(other.iter().map(|s| s.to_string()).collect());
        other == *self
    }
}

impl fmt::Display for CriticalCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

/// All repetition-free cycles whose consecutive pairs (including the last
/// with the first) are relations.
///
/// The search does not assume gentleness, so it doubles as a reference for
/// arbitrary presentations.
pub fn enumerate_critical_cycles(p: &Presentation) -> Vec<CriticalCycle> {
    let q = p.quiver();
    let mut labels: Vec<&Arrow> = q.arrows().iter().collect();
    labels.sort_by(|x, y| x.label.cmp(&y.label));
    let mut found = BTreeSet::new();
    for start in &labels {
        let mut stack = vec![*start];
        extend(p, start, &mut stack, &mut found);
    }
    found.into_iter().collect()
}

fn extend<'a>(
    p: &'a Presentation,
    start: &Arrow,
    stack: &mut Vec<&'a Arrow>,
    found: &mut BTreeSet<CriticalCycle>,
) {
    let last = *stack.last().unwrap();
    if p.is_relation(&last.label, &start.label) && last.target == start.source {
        found.insert(CriticalCycle {
            arrows: stack.iter().map(|a| a.label.clone()).collect(),
        });
    }
    for next in successors(p, last) {
        if next.label <= start.label || stack.iter().any(|a| a.label == next.label) {
            continue;
        }
        if p.is_relation(&last.label, &next.label) {
            stack.push(next);
            extend(p, start, stack, found);
            stack.pop();
        }
    }
}

/// The set of critical cycles of a gentle presentation, sorted.
pub fn critical_cycles(p: &Presentation) -> Result<Vec<CriticalCycle>, GentleError> {
    require_gentle(p)?;
    Ok(enumerate_critical_cycles(p))
}

/// A module given by a direct relation-free path; `top_vertex` is where
/// the path starts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StringModule {
    pub walk: Path,
    pub top_vertex: String,
}

/// `R(c)_i` for the cycle `cycle`, attached to its arrow `arrow` whose
/// source is `vertex`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalSummand {
    pub cycle: CriticalCycle,
    pub arrow: String,
    pub vertex: String,
    pub module: StringModule,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinProjectives {
    pub projectives: Vec<String>,
    pub radicals: Vec<RadicalSummand>,
}

/// The unique arrow `b` after `a` with `(a, b)` not a relation.
fn free_continuation<'a>(p: &'a Presentation, a: &'a Arrow) -> Option<&'a Arrow> {
    successors(p, a).find(|b| !p.is_relation(&a.label, &b.label))
}

/// Maximal relation-free path leaving `t(alpha)`, starting with the free
/// continuation of `alpha`.
pub fn radical_string(p: &Presentation, alpha: &Arrow) -> Result<StringModule, GentleError> {
    let mut walk = Path::lazy(&alpha.target);
    let mut seen = BTreeSet::new();
    let mut cur = alpha;
    while let Some(next) = free_continuation(p, cur) {
        if !seen.insert(next.label.clone()) {
            return Err(GentleError::InfiniteDimensional(next.label.clone()));
        }
        walk.arrows.push(next.label.clone());
        walk.target = next.target.clone();
        cur = next;
    }
    Ok(StringModule {
        top_vertex: walk.source.clone(),
        walk,
    })
}

/// Indecomposable Gorenstein projectives: the projectives `P_i` and one
/// radical string per arrow of each critical cycle.
pub fn gorenstein_projectives(p: &Presentation) -> Result<GorensteinProjectives, GentleError> {
    let cycles = critical_cycles(p)?;
    let q = p.quiver();
    let mut radicals = Vec::new();
    for c in &cycles {
        for label in &c.arrows {
            let alpha = q.arrow(label).expect("cycle arrows belong to the quiver");
            radicals.push(RadicalSummand {
                cycle: c.clone(),
                arrow: label.clone(),
                vertex: alpha.source.clone(),
                module: radical_string(p, alpha)?,
            });
        }
    }
    Ok(GorensteinProjectives {
        projectives: q.vertices().to_vec(),
        radicals,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub period: usize,
    pub cycle: CriticalCycle,
}

/// One factor `D^b(k)/[l(c)]` per critical cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityDecomposition {
    pub factors: Vec<Factor>,
}

impl SingularityDecomposition {
    /// The periods, sorted.
    pub fn periods(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.factors.iter().map(|f| f.period).collect();
        v.sort_unstable();
        v
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }
}

pub fn singularity_category(p: &Presentation) -> Result<SingularityDecomposition, GentleError> {
    // Surfaces relation-free cycles as an error, as for the GP classification.
    gorenstein_projectives(p)?;
    let factors = critical_cycles(p)?
        .into_iter()
        .map(|c| Factor {
            period: c.length(),
            cycle: c,
        })
        .collect();
    Ok(SingularityDecomposition { factors })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub only_left: Vec<usize>,
    pub only_right: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub compatible: bool,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub witness: Witness,
}

/// Compares the multisets of cycle lengths. Different multisets rule out a
/// derived equivalence; equal ones prove nothing.
pub fn compare_invariant(p1: &Presentation, p2: &Presentation) -> Result<Comparison, GentleError> {
    let left = singularity_category(p1)?.periods();
    let right = singularity_category(p2)?.periods();
    let mut count: BTreeMap<usize, i64> = BTreeMap::new();
    for &l in &left {
        *count.entry(l).or_default() += 1;
    }
    for &r in &right {
        *count.entry(r).or_default() -= 1;
    }
    let mut witness = Witness {
        only_left: Vec::new(),
        only_right: Vec::new(),
    };
    for (&len, &c) in &count {
        let target = if c > 0 {
            &mut witness.only_left
        } else {
            &mut witness.only_right
        };
        target.extend(std::iter::repeat_n(len, c.unsigned_abs() as usize));
    }
    Ok(Comparison {
        compatible: witness.only_left.is_empty() && witness.only_right.is_empty(),
        left,
        right,
        witness,
    })
}
