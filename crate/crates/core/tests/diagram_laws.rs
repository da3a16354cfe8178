use std::cmp::Ordering;

use bicrystal::diagrams::*;
use bicrystal::{Bipartition, Charge, ExtNode, NatureKind, Partition};
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..7, 0..5).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn bipartition() -> impl Strategy<Value = Bipartition> {
    (partition(), partition()).prop_map(|(a, b)| Bipartition::new(a, b))
}

fn charge() -> impl Strategy<Value = Charge> {
    (-5i64..6, -5i64..6).prop_map(|(a, b)| Charge::new(a, b))
}

fn next_allowed(k: NatureKind) -> [NatureKind; 2] {
    use NatureKind::*;
    match k {
        A => [Bh, R],
        R => [Bv, A],
        Bv => [Bv, A],
        Bh => [Bh, R],
    }
}

proptest! {
    #[test]
    fn bipartition_text_roundtrip(bp in bipartition()) {
        let s = bp.to_string();
        prop_assert_eq!(s.parse::<Bipartition>().unwrap(), bp);
    }

    #[test]
    fn bipartition_json_roundtrip(bp in bipartition()) {
        let s = serde_json::to_string(&bp).unwrap();
        prop_assert_eq!(serde_json::from_str::<Bipartition>(&s).unwrap(), bp);
    }

    #[test]
    fn charge_roundtrip(s in charge()) {
        let t = format!("{},{}", s.s1, s.s2);
        prop_assert_eq!(t.parse::<Charge>().unwrap(), s);
        prop_assert_eq!(s.to_string().parse::<Charge>().unwrap(), s);
        let j = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<Charge>(&j).unwrap(), s);
    }

    #[test]
    fn conjugate_is_involution(l in partition()) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().rank(), l.rank());
    }

    #[test]
    fn slots_and_transitions(bp in bipartition(), s in charge()) {
        let (lo, hi) = sufficient_window(&bp, s);
        for c in [1u8, 2] {
            for j in lo - 3..=hi + 3 {
                let (nat, node) = nature_at(&bp, s, j, c);
                prop_assert_eq!(node.content(s), j);
                prop_assert_eq!(node.c, c);
                match nat.kind {
                    NatureKind::A => prop_assert!(bp.is_addable(&node)),
                    NatureKind::R => prop_assert!(bp.is_removable(&node)),
                    _ => {
                        prop_assert!(bp.is_extended_node(&node));
                        prop_assert!(!bp.is_removable(&node));
                    }
                }
                prop_assert_eq!(nat.is_virtual, node.is_virtual());
                let (next, _) = nature_at(&bp, s, j + 1, c);
                prop_assert!(next_allowed(nat.kind).contains(&next.kind), "{} -> {} at {} in {}", nat.kind, next.kind, j, bp);
            }
        }
    }

    #[test]
    fn r_and_a_slots_are_removable_and_addable(bp in bipartition(), s in charge()) {
        let (lo, hi) = sufficient_window(&bp, s);
        let mut r = Vec::new();
        let mut a = Vec::new();
        for j in lo - 2..=hi + 2 {
            for c in [1u8, 2] {
                let (nat, node) = nature_at(&bp, s, j, c);
                match nat.kind {
                    NatureKind::R => r.push(node),
                    NatureKind::A => a.push(node),
                    _ => {}
                }
            }
        }
        let mut rr = bp.removable_nodes();
        let mut aa = bp.addable_nodes();
        r.sort();
        a.sort();
        rr.sort();
        aa.sort();
        prop_assert_eq!(r, rr);
        prop_assert_eq!(a, aa);
    }

    #[test]
    fn vertical_and_horizontal_meet_in_removables(bp in bipartition()) {
        let mut both = Vec::new();
        for c in [1u8, 2] {
            let l = bp.comp(c);
            for a in 1..=l.len() {
                for b in 1..=l.part(a) {
                    let n = ExtNode::new(a, b, c);
                    let vertical = !bp.is_extended_node(&ExtNode::new(a, b + 1, c));
                    let horizontal = !bp.is_extended_node(&ExtNode::new(a + 1, b, c));
                    if vertical && horizontal {
                        both.push(n);
                    }
                }
            }
        }
        both.sort();
        let mut r = bp.removable_nodes();
        r.sort();
        prop_assert_eq!(both, r);
    }

    #[test]
    fn deep_tail_is_shared(x in bipartition(), y in bipartition(), s in charge()) {
        let n = x.rank().max(y.rank());
        let w = default_window(n, s);
        let cut = s.s1.min(s.s2) - n as i64;
        let deep = |b: &Bipartition| -> Vec<ExtNode> {
            boundary_sequence(b, s, w).unwrap().nodes.into_iter().filter(|g| g.content(s) < cut).collect()
        };
        let (dx, dy) = (deep(&x), deep(&y));
        prop_assert_eq!(&dx, &dy);
        for g in dx {
            prop_assert_eq!(g.b, 0);
        }
    }

    #[test]
    fn order_is_antisymmetric(x in bipartition(), y in bipartition(), s in charge()) {
        let a = order_uglov(&x, &y, s);
        prop_assert_eq!(a.reverse(), order_uglov(&y, &x, s));
        prop_assert_eq!(a == Ordering::Equal, x == y);
    }

    #[test]
    fn window_does_not_change_the_order(x in bipartition(), y in bipartition(), s in charge(), pad in 0i64..4) {
        let n = x.rank().max(y.rank());
        let (lo, hi) = default_window(n, s);
        let w = (lo - pad, hi + pad);
        let kx = boundary_sequence(&x, s, w).unwrap().keys();
        let ky = boundary_sequence(&y, s, w).unwrap().keys();
        let by_keys = {
            let mut o = Ordering::Equal;
            for (a, b) in kx.iter().zip(ky.iter()) {
                if a != b {
                    o = a.cmp(b);
                    break;
                }
            }
            o
        };
        if x != y {
            prop_assert_eq!(by_keys, order_uglov(&x, &y, s));
        }
    }
}

/// Sorting and then checking every pair proves the order is total and transitive.
#[test]
fn order_is_total_up_to_rank_eight() {
    for s in [Charge::new(0, 0), Charge::new(0, 1), Charge::new(2, 0), Charge::new(-3, 4)] {
        for n in 0..=8 {
            let mut all = Bipartition::all_of_rank(n);
            all.sort_by(|x, y| order_uglov(x, y, s));
            for i in 0..all.len() {
                for j in i + 1..all.len() {
                    assert_eq!(order_uglov(&all[i], &all[j], s), Ordering::Less, "{} {} at {s}", all[i], all[j]);
                }
            }
        }
    }
}

#[test]
fn asymptotic_agreement() {
    for n in 0..=6 {
        for d in [n as i64, n as i64 + 2] {
            for s2 in [-2i64, 0, 3] {
                assert!(orders_agree_asymptotic(n, Charge::new(s2 + d, s2)).unwrap(), "n={n} d={d}");
            }
        }
    }
}

#[test]
fn lex_disagrees_close_to_the_diagonal() {
    let s = Charge::new(0, 0);
    let all = Bipartition::all_of_rank(3);
    let differs = all
        .iter()
        .any(|x| all.iter().any(|y| order_uglov(x, y, s) != order_lex(x, y)));
    assert!(differs);
}

#[test]
fn rank_counts() {
    let counts: Vec<usize> = (0..=6).map(|n| Bipartition::all_of_rank(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 5, 10, 20, 36, 65]);
}

#[test]
fn j_nodes_of_the_small_example() {
    let bp: Bipartition = "3.3.1,2.1".parse().unwrap();
    let s = Charge::new(0, 1);
    let cells = j_nodes(&bp, s, bicrystal::Modulus::Finite(3), 2, (-7, 10));
    let finite: Vec<(ExtNode, NatureKind)> = cells
        .iter()
        .filter(|c| !c.node.is_virtual())
        .map(|c| (c.node, c.nature.kind))
        .collect();
    assert_eq!(
        finite,
        vec![
            (ExtNode::new(3, 1, 2), NatureKind::A),
            (ExtNode::new(3, 2, 1), NatureKind::A),
            (ExtNode::new(1, 2, 2), NatureKind::R),
            (ExtNode::new(1, 3, 1), NatureKind::Bv),
        ]
    );
    for c in cells.iter().filter(|c| c.node.is_virtual()) {
        assert!(c.nature.is_virtual);
        let n = c.node;
        let expected = match (n.a, n.b, n.c) {
            (0, b, 1) if b >= 5 && (b - 5) % 3 == 0 => NatureKind::Bh,
            (0, b, 2) if b >= 4 && (b - 4) % 3 == 0 => NatureKind::Bh,
            (a, 0, 1) if a >= 4 && (a - 4) % 3 == 0 => NatureKind::Bv,
            (a, 0, 2) if a >= 5 && (a - 5) % 3 == 0 => NatureKind::Bv,
            _ => panic!("unexpected virtual node {n}"),
        };
        assert_eq!(c.nature.kind, expected, "{n}");
    }
}
