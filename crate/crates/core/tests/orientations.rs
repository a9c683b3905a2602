use std::collections::BTreeSet;

use silted::complex::TwoTermCategory;
use silted::quiver::Quiver;
use silted::silting::{brute_force_silting, brute_force_tilting, enumerate_silting, enumerate_tilting};

fn orientations(edges: &[(i64, i64)], n: usize) -> Vec<Quiver> {
    (0..1u32 << edges.len())
        .map(|mask| {
            let arrows = edges
                .iter()
                .enumerate()
                .map(|(k, &(s, t))| if mask >> k & 1 == 1 { (format!("a{k}"), t, s) } else { (format!("a{k}"), s, t) })
                .collect();
            Quiver::new((1..=n as i64).collect(), arrows).unwrap()
        })
        .collect()
}

fn check(edges: &[(i64, i64)], n: usize, silting: usize, tilting: usize) {
    let mut seen = BTreeSet::new();
    for q in orientations(edges, n) {
        let cat = TwoTermCategory::new(&q).unwrap();
        let s = enumerate_silting(&q).unwrap();
        let t = enumerate_tilting(&q).unwrap();
        assert_eq!(s.len(), silting, "{}", q.sketch());
        assert_eq!(t.len(), tilting, "{}", q.sketch());
        assert_eq!(s, brute_force_silting(&cat), "{}", q.sketch());
        assert_eq!(t, brute_force_tilting(cat.module_category()), "{}", q.sketch());
        seen.insert(q.sketch());
    }
    assert_eq!(seen.len(), 1 << edges.len());
}

#[test]
fn every_orientation_of_type_a() {
    let path = |n: i64| (1..n).map(|v| (v, v + 1)).collect::<Vec<_>>();
    check(&path(1), 1, 2, 1);
    check(&path(2), 2, 5, 2);
    check(&path(3), 3, 14, 5);
    check(&path(4), 4, 42, 14);
    check(&path(5), 5, 132, 42);
}

#[test]
fn every_orientation_of_type_d() {
    check(&[(1, 3), (2, 3), (3, 4)], 4, 50, 20);
    check(&[(1, 3), (2, 3), (3, 4), (4, 5)], 5, 182, 77);
}
