//! Named inputs used throughout the tests, the guide and the corpus.

use crate::quiver::Presentation;
use crate::surface::DualGraph;

/// Eight vertices, arrows `a..k`, zero relations `ba, fe, jf, ej, kg, hk, gh`.
pub fn illustrative() -> Presentation {
    Presentation::from_parts(
        &["1", "2", "3", "4", "5", "6", "7", "8"],
        &[
            ("a", "1", "2"),
            ("b", "2", "3"),
            ("c", "3", "4"),
            ("d", "5", "1"),
            ("e", "6", "2"),
            ("f", "2", "7"),
            ("g", "4", "7"),
            ("h", "8", "4"),
            ("i", "6", "5"),
            ("j", "7", "6"),
            ("k", "7", "8"),
        ],
        &[
            ("a", "b"),
            ("e", "f"),
            ("f", "j"),
            ("j", "e"),
            ("g", "k"),
            ("k", "h"),
            ("h", "g"),
        ],
    )
    .expect("valid presentation")
}

/// The chain algebra `Λ_n`: vertices `0..=n`, `a_i: i → i+1`,
/// `b_i: i+1 → i` with `a_i b_i = b_i a_i = 0`, and `g1: 0 → 1`,
/// `g2: 0 → n`.
pub fn chain(n: usize) -> Presentation {
    assert!(n >= 2, "the chain algebra needs n >= 2");
    let vertices: Vec<String> = (0..=n).map(|v| v.to_string()).collect();
    let mut arrows = Vec::new();
    let mut relations = Vec::new();
    for i in 1..n {
        let (a, b) = (format!("a{i}"), format!("b{i}"));
        arrows.push((a.clone(), i.to_string(), (i + 1).to_string()));
        arrows.push((b.clone(), (i + 1).to_string(), i.to_string()));
        relations.push((a.clone(), b.clone()));
        relations.push((b, a));
    }
    arrows.push(("g1".into(), "0".into(), "1".into()));
    arrows.push(("g2".into(), "0".into(), n.to_string()));
    let v: Vec<&str> = vertices.iter().map(String::as_str).collect();
    let a: Vec<(&str, &str, &str)> = arrows
        .iter()
        .map(|(l, s, t)| (l.as_str(), s.as_str(), t.as_str()))
        .collect();
    let r: Vec<(&str, &str)> = relations
        .iter()
        .map(|(x, y)| (x.as_str(), y.as_str()))
        .collect();
    Presentation::from_parts(&v, &a, &r).expect("valid presentation")
}

/// The oriented 3-cycle with all consecutive composites zero.
pub fn hexagon() -> Presentation {
    Presentation::from_parts(
        &["1", "2", "3"],
        &[("α1", "1", "2"), ("α2", "2", "3"), ("α3", "3", "1")],
        &[("α1", "α2"), ("α2", "α3"), ("α3", "α1")],
    )
    .expect("valid presentation")
}

/// A 6-cycle `a1..a6`, a 7-cycle `b1..b7` sharing vertices, and a loop
/// `c` with `c² = 0`.
pub fn two_cycles_and_loop() -> Presentation {
    let a = [
        ("a1", "2", "3"),
        ("a2", "3", "5"),
        ("a3", "5", "6"),
        ("a4", "6", "7"),
        ("a5", "7", "1"),
        ("a6", "1", "2"),
    ];
    let b = [
        ("b1", "2", "3"),
        ("b2", "3", "6"),
        ("b3", "6", "7"),
        ("b4", "7", "8"),
        ("b5", "8", "9"),
        ("b6", "9", "10"),
        ("b7", "10", "2"),
    ];
    let mut arrows: Vec<(&str, &str, &str)> = a.to_vec();
    arrows.extend(b);
    arrows.push(("c", "8", "8"));
    let mut relations = Vec::new();
    for k in 0..a.len() {
        relations.push((a[k].0, a[(k + 1) % a.len()].0));
    }
    for k in 0..b.len() {
        relations.push((b[k].0, b[(k + 1) % b.len()].0));
    }
    relations.push(("c", "c"));
    Presentation::from_parts(
        &["1", "2", "3", "5", "6", "7", "8", "9", "10"],
        &arrows,
        &relations,
    )
    .expect("valid presentation")
}

/// `a: 1 → 2` and a loop `b` at 2 with `b² = 0`.
pub fn arrow_and_loop() -> Presentation {
    Presentation::from_parts(
        &["1", "2"],
        &[("a", "1", "2"), ("b", "2", "2")],
        &[("b", "b")],
    )
    .expect("valid presentation")
}

/// `a: 1 → 2`, `b: 2 → 1` with `ab = ba = 0`.
pub fn two_cycle() -> Presentation {
    Presentation::from_parts(
        &["1", "2"],
        &[("a", "1", "2"), ("b", "2", "1")],
        &[("a", "b"), ("b", "a")],
    )
    .expect("valid presentation")
}

/// Six curves: a `(-4)`-curve meeting arms of two, two and one
/// `(-2)`-curves.
pub fn t13_graph() -> DualGraph {
    let v = |s: &str, w: i64| (s.to_string(), w);
    let e = |a: &str, b: &str| (a.to_string(), b.to_string());
    DualGraph::new(
        vec![
            v("1", -2),
            v("2", -2),
            v("3", -4),
            v("4", -2),
            v("5", -2),
            v("6", -2),
        ],
        vec![
            e("1", "2"),
            e("2", "3"),
            e("3", "4"),
            e("4", "5"),
            e("6", "3"),
        ],
    )
    .expect("valid dual graph")
}

/// The `D_4` star with all weights `-2`; the centre is `c`.
pub fn d4_graph() -> DualGraph {
    let v = |s: &str| (s.to_string(), -2);
    let e = |a: &str| ("c".to_string(), a.to_string());
    DualGraph::new(
        vec![v("c"), v("x"), v("y"), v("z")],
        vec![e("x"), e("y"), e("z")],
    )
    .expect("valid dual graph")
}
