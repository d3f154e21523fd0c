use std::collections::BTreeSet;

use proptest::prelude::*;
use singcat::examples;
use singcat::gentle::*;
use singcat::quiver::{path_in_ideal, Arrow, Presentation, Quiver};

fn cycle_set(cycles: &[CriticalCycle]) -> BTreeSet<String> {
    cycles.iter().map(CriticalCycle::display).collect()
}

/// Every rotation class of repetition-free arrow sequences whose
/// cyclically consecutive pairs are all relations, found by listing all
/// arrangements.
fn brute_force_cycles(p: &Presentation) -> BTreeSet<Vec<String>> {
    let arrows: Vec<&Arrow> = p.quiver().arrows().iter().collect();
    let mut out = BTreeSet::new();
    fn go(
        p: &Presentation,
        arrows: &[&Arrow],
        seq: &mut Vec<usize>,
        out: &mut BTreeSet<Vec<String>>,
    ) {
        if !seq.is_empty() {
            let n = seq.len();
            let ok = (0..n).all(|k| {
                let (x, y) = (arrows[seq[k]], arrows[seq[(k + 1) % n]]);
                x.target == y.source && p.is_relation(&x.label, &y.label)
            });
            if ok {
                let labels: Vec<String> = seq.iter().map(|&i| arrows[i].label.clone()).collect();
                let rotations = (0..n).map(|r| {
                    let mut v = labels.clone();
                    v.rotate_left(r);
                    v
                });
                out.insert(rotations.min().unwrap());
            }
        }
        for i in 0..arrows.len() {
            if !seq.contains(&i) {
                seq.push(i);
                go(p, arrows, seq, out);
                seq.pop();
            }
        }
    }
    go(p, &arrows, &mut Vec::new(), &mut out);
    out
}

#[test]
fn illustrative_is_gentle_with_two_three_cycles() {
    let p = examples::illustrative();
    assert!(check_gentle(&p).is_gentle);
    let cycles = critical_cycles(&p).unwrap();
    assert_eq!(cycles.len(), 2);
    assert!(cycles.iter().any(|c| c.same_as(&["e", "f", "j"])));
    assert!(cycles.iter().any(|c| c.same_as(&["h", "g", "k"])));
    assert!(cycles.iter().all(|c| c.length() == 3));
    assert!(cycle_set(&cycles).contains("jfe"));
}

#[test]
fn three_arrows_out_of_a_vertex_break_g1() {
    let p = Presentation::from_parts(
        &["0", "1", "2", "3"],
        &[("x", "0", "1"), ("y", "0", "2"), ("z", "0", "3")],
        &[],
    )
    .unwrap();
    let r = check_gentle(&p);
    assert!(!r.is_gentle);
    assert!(r
        .violations
        .iter()
        .any(|v| v.condition == Condition::G1 && v.location == "0"));
}

#[test]
fn two_loops_with_all_relations_break_g3() {
    let p = Presentation::from_parts(
        &["1"],
        &[("x", "1", "1"), ("y", "1", "1")],
        &[("x", "x"), ("x", "y"), ("y", "x"), ("y", "y")],
    )
    .unwrap();
    let r = check_gentle(&p);
    assert!(!r.is_gentle);
    assert!(r
        .violations
        .iter()
        .any(|v| v.condition == Condition::G3 && v.location == "x"));
    assert!(r.violations.iter().all(|v| v.condition != Condition::G2));
    assert!(matches!(
        critical_cycles(&p),
        Err(GentleError::NotGentle(_))
    ));
}

#[test]
fn missing_relations_break_g4() {
    // Two loops and no relations: each arrow has two nonzero continuations.
    let p = Presentation::from_parts(&["1"], &[("x", "1", "1"), ("y", "1", "1")], &[]).unwrap();
    let r = check_gentle(&p);
    assert!(r.violations.iter().any(|v| v.condition == Condition::G4));
}

#[test]
fn chain_algebras() {
    for n in 2..=8 {
        let p = examples::chain(n);
        assert!(check_gentle(&p).is_gentle, "n = {n}");
        let cycles = critical_cycles(&p).unwrap();
        assert_eq!(cycles.len(), n - 1);
        for i in 1..n {
            let (a, b) = (format!("a{i}"), format!("b{i}"));
            assert!(cycles.iter().any(|c| c.same_as(&[&b, &a])));
        }
        let d = singularity_category(&p).unwrap();
        assert_eq!(d.periods(), vec![2; n - 1]);
    }
}

#[test]
fn chain_radicals() {
    for n in 2..=6 {
        let p = examples::chain(n);
        let q = p.quiver();
        let gp = gorenstein_projectives(&p).unwrap();
        assert_eq!(gp.projectives.len(), n + 1);
        assert_eq!(gp.radicals.len(), 2 * (n - 1));
        for i in 1..n {
            let c = CriticalCycle::new(vec![format!("b{i}"), format!("a{i}")]);
            let at = |v: usize| {
                gp.radicals
                    .iter()
                    .find(|r| r.cycle == c && r.vertex == v.to_string())
                    .unwrap()
                    .module
                    .clone()
            };
            // R(c_i)_i runs i+1 -> ... -> n along the a's
            let want: Vec<String> = (i + 1..n).map(|k| format!("a{k}")).collect();
            let m = at(i);
            assert_eq!(m.walk.arrows, want);
            assert_eq!(m.walk.source, (i + 1).to_string());
            assert_eq!(m.walk.target, n.to_string());
            // R(c_i)_{i+1} runs i -> ... -> 1 along the b's
            let want: Vec<String> = (1..i).rev().map(|k| format!("b{k}")).collect();
            let m = at(i + 1);
            assert_eq!(m.walk.arrows, want);
            assert_eq!(m.walk.source, i.to_string());
            assert_eq!(m.walk.target, "1");
            m.walk.validate(q).unwrap();
        }
    }
}

#[test]
fn hexagon_radicals_are_simple() {
    let p = examples::hexagon();
    let gp = gorenstein_projectives(&p).unwrap();
    assert_eq!(gp.radicals.len(), 3);
    for r in &gp.radicals {
        assert!(r.module.walk.is_lazy());
    }
    assert_eq!(singularity_category(&p).unwrap().periods(), vec![3]);
}

#[test]
fn illustrative_radical_at_vertex_six() {
    let p = examples::illustrative();
    let gp = gorenstein_projectives(&p).unwrap();
    let jfe = CriticalCycle::new(vec!["e".into(), "f".into(), "j".into()]);
    let r = gp
        .radicals
        .iter()
        .find(|r| r.cycle == jfe && r.vertex == "6")
        .unwrap();
    assert_eq!(r.arrow, "e");
    assert_eq!(r.module.walk.source, "2");
    assert_eq!(
        r.module.walk.arrows,
        ["b", "c", "g", "j", "i", "d", "a", "f", "k"]
    );
}

#[test]
fn final_example_periods() {
    let p = examples::two_cycles_and_loop();
    assert!(check_gentle(&p).is_gentle);
    let d = singularity_category(&p).unwrap();
    assert_eq!(d.periods(), vec![1, 6, 7]);
    let hex = examples::hexagon();
    let cmp = compare_invariant(&p, &hex).unwrap();
    assert!(!cmp.compatible);
    assert_eq!(cmp.witness.only_right, vec![3]);
}

#[test]
fn path_algebra_of_a2_has_trivial_singularity_category() {
    let p = Presentation::from_parts(&["1", "2"], &[("a", "1", "2")], &[]).unwrap();
    assert!(singularity_category(&p).unwrap().is_trivial());
}

#[test]
fn arrow_and_loop_versus_two_cycle() {
    let left = examples::arrow_and_loop();
    let right = examples::two_cycle();
    let cmp = compare_invariant(&left, &right).unwrap();
    assert!(!cmp.compatible);
    assert_eq!(cmp.witness.only_left, vec![1]);
    assert_eq!(cmp.witness.only_right, vec![2]);
    assert!(compare_invariant(&left, &left).unwrap().compatible);
}

#[test]
fn relabelled_chain_is_compatible() {
    let p = examples::chain(3);
    let q = p.quiver();
    let rename = |v: &str| format!("w{v}");
    let arrows = q
        .arrows()
        .iter()
        .map(|a| {
            Arrow::new(
                &format!("z{}", a.label),
                &rename(&a.source),
                &rename(&a.target),
            )
        })
        .collect();
    let relabelled = Presentation::new(
        Quiver::new(q.vertices().iter().map(|v| rename(v)).collect(), arrows).unwrap(),
        p.relations()
            .iter()
            .map(|(a, b)| (format!("z{a}"), format!("z{b}")))
            .collect(),
    )
    .unwrap();
    assert!(compare_invariant(&p, &relabelled).unwrap().compatible);
}

#[test]
fn relation_free_cycle_is_reported() {
    // Two loops with x² = y² = 0: gentle, but xyxy… never vanishes.
    let p = Presentation::from_parts(
        &["1"],
        &[("x", "1", "1"), ("y", "1", "1")],
        &[("x", "x"), ("y", "y")],
    )
    .unwrap();
    assert!(check_gentle(&p).is_gentle);
    assert_eq!(critical_cycles(&p).unwrap().len(), 2);
    assert!(matches!(
        gorenstein_projectives(&p),
        Err(GentleError::InfiniteDimensional(_))
    ));
    assert!(singularity_category(&p).is_err());
}

#[test]
fn canonical_rotation_is_least() {
    let c = CriticalCycle::new(vec!["k".into(), "h".into(), "g".into()]);
    assert_eq!(c.arrows, ["g", "k", "h"]);
    assert!(c.same_as(&["h", "g", "k"]));
}

// ---------------------------------------------------------------------------
// Random micro presentations

fn micro() -> impl Strategy<Value = Presentation> {
    (1usize..=3)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec((0..n, 0..n), 0..=4),
                prop::collection::vec(any::<bool>(), 16),
            )
        })
        .prop_map(|(n, ends, mask)| {
            let vertices: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
            let names = ["p", "q", "r", "s"];
            let arrows: Vec<Arrow> = ends
                .iter()
                .enumerate()
                .map(|(k, &(s, t))| Arrow::new(names[k], &vertices[s], &vertices[t]))
                .collect();
            let mut relations = Vec::new();
            let mut bit = 0;
            for x in &arrows {
                for y in &arrows {
                    if x.target == y.source {
                        if mask[bit % mask.len()] {
                            relations.push((x.label.clone(), y.label.clone()));
                        }
                        bit += 1;
                    }
                }
            }
            Presentation::new(Quiver::new(vertices, arrows).unwrap(), relations).unwrap()
        })
}

proptest! {
    #[test]
    fn cycles_match_brute_force(p in micro()) {
        let fast: BTreeSet<Vec<String>> = enumerate_critical_cycles(&p)
            .into_iter()
            .map(|c| c.arrows)
            .collect();
        prop_assert_eq!(fast, brute_force_cycles(&p));
        if check_gentle(&p).is_gentle {
            prop_assert!(critical_cycles(&p).is_ok());
        } else {
            prop_assert!(critical_cycles(&p).is_err());
        }
    }

    #[test]
    fn radicals_are_relation_free_and_start_correctly(p in micro()) {
        prop_assume!(check_gentle(&p).is_gentle);
        if let Ok(gp) = gorenstein_projectives(&p) {
            let q = p.quiver();
            for r in &gp.radicals {
                let w = &r.module.walk;
                w.validate(q).unwrap();
                prop_assert!(!path_in_ideal(w, &p).unwrap());
                let alpha = q.arrow(&r.arrow).unwrap();
                prop_assert_eq!(&w.source, &alpha.target);
                prop_assert_eq!(&r.vertex, &alpha.source);
                if let Some(first) = w.arrows.first() {
                    prop_assert!(!p.is_relation(&alpha.label, first));
                } else {
                    prop_assert!(q
                        .outgoing(&alpha.target)
                        .all(|b| p.is_relation(&alpha.label, &b.label)));
                }
                // maximal: nothing extends it
                let last = w.arrows.last().map(|l| q.arrow(l).unwrap()).unwrap_or(alpha);
                prop_assert!(q.outgoing(&last.target).all(|b| p.is_relation(&last.label, &b.label)));
            }
            let d = singularity_category(&p).unwrap();
            prop_assert_eq!(d.factors.len(), critical_cycles(&p).unwrap().len());
            prop_assert!(d.periods().iter().sum::<usize>() >= d.factors.len());
        }
    }

    #[test]
    fn rotation_does_not_change_the_canonical_form(
        labels in prop::collection::btree_set("[a-z]{1,2}", 1..6),
        r in 0usize..6,
    ) {
        let v: Vec<String> = labels.into_iter().collect();
        let mut rotated = v.clone();
        rotated.rotate_left(r % v.len());
        prop_assert_eq!(CriticalCycle::new(v), CriticalCycle::new(rotated));
    }
}

#[test]
fn relabelling_a_cycle_keeps_the_canonical_set() {
    // Rename the arrows of the jfe cycle so that a different arrow is least.
    let p = examples::illustrative();
    let q = p.quiver();
    let swap = |l: &str| match l {
        "e" => "z".to_string(),
        "j" => "a0".to_string(),
        other => other.to_string(),
    };
    let arrows = q
        .arrows()
        .iter()
        .map(|a| Arrow::new(&swap(&a.label), &a.source, &a.target))
        .collect();
    let renamed = Presentation::new(
        Quiver::new(q.vertices().to_vec(), arrows).unwrap(),
        p.relations()
            .iter()
            .map(|(a, b)| (swap(a), swap(b)))
            .collect(),
    )
    .unwrap();
    let cycles = critical_cycles(&renamed).unwrap();
    assert!(cycles.iter().any(|c| c.same_as(&["z", "f", "a0"])));
    assert_eq!(cycles[0].arrows[0], "a0");
    let back: BTreeSet<Vec<String>> = cycles
        .iter()
        .map(|c| {
            let mut v: Vec<String> = c
                .arrows
                .iter()
                .map(|l| match l.as_str() {
                    "z" => "e".to_string(),
                    "a0" => "j".to_string(),
                    o => o.to_string(),
                })
                .collect();
            v = CriticalCycle::new(std::mem::take(&mut v)).arrows;
            v
        })
        .collect();
    let orig: BTreeSet<Vec<String>> = critical_cycles(&p)
        .unwrap()
        .into_iter()
        .map(|c| c.arrows)
        .collect();
    assert_eq!(back, orig);
}
