use std::collections::BTreeMap;

use silted::classify::{classify, classify_all, dedupe, family_counts, fingerprint, tilted_type, Homology, Verdict};
use silted::complex::TwoTermCategory;
use silted::endo::{BoundQuiverAlgebra, FinAlgebra};
use silted::fixtures::{fixture, FIXTURES};
use silted::quiver::{parse_quiver, DimVector, PathAlgebra};
use silted::silting::{enumerate_silting, SiltingObject};

fn monomial(text: &str, zero: &[&[usize]]) -> BoundQuiverAlgebra {
    let q = parse_quiver(text).unwrap();
    let zero: Vec<Vec<usize>> = zero.iter().map(|z| z.to_vec()).collect();
    BoundQuiverAlgebra::new(FinAlgebra::monomial(&PathAlgebra::new(&q), &zero).unwrap()).unwrap()
}

fn families(name: &str) -> BTreeMap<String, usize> {
    let q = fixture(name);
    let cat = TwoTermCategory::new(&q).unwrap();
    let records = classify_all(&cat, &enumerate_silting(&q).unwrap()).unwrap();
    family_counts(&dedupe(&records))
}

fn expect(pairs: &[(&str, usize)]) -> BTreeMap<String, usize> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

#[test]
fn type_a_families() {
    assert_eq!(families("a1"), expect(&[("A1", 1)]));
    assert_eq!(families("a2"), expect(&[("A2", 1), ("A1⊔A1", 1)]));
    assert_eq!(families("a3_linear"), expect(&[("A3", 4), ("A2⊔A1", 1)]));
    assert_eq!(families("a3_sink"), expect(&[("A3", 4), ("A2⊔A1", 1), ("A1⊔A1⊔A1", 1)]));
    assert_eq!(families("a4_linear"), expect(&[("A4", 10), ("A3⊔A1", 4), ("A2⊔A2", 1)]));
    assert_eq!(
        families("a4_alternating"),
        expect(&[("A4", 10), ("A3⊔A1", 4), ("A2⊔A2", 1), ("A2⊔A1⊔A1", 1), ("A1⊔A1⊔A1⊔A1", 1)])
    );
    assert_eq!(families("a4_sink"), expect(&[("A4", 10), ("A3⊔A1", 4), ("A2⊔A2", 1), ("A2⊔A1⊔A1", 1)]));
}

#[test]
fn type_d_families() {
    assert_eq!(families("d4_first"), expect(&[("D4", 8), ("A3⊔A1", 3), ("A2⊔A1⊔A1", 1), ("strictly shod", 1)]));
    assert_eq!(families("d4_second"), expect(&[("D4", 8), ("A3⊔A1", 1), ("A2⊔A1⊔A1", 1), ("A1⊔A1⊔A1⊔A1", 1)]));
    assert_eq!(
        families("d5"),
        expect(&[
            ("D5", 40),
            ("D4⊔A1", 7),
            ("A4⊔A1", 4),
            ("A3⊔A2", 3),
            ("A3⊔A1⊔A1", 4),
            ("strictly shod", 4),
        ])
    );
}

#[test]
fn gentle_star_with_one_zero_relation_is_of_type_a4() {
    // x→y→z, w→y with w·y→z = 0; a gentle tree algebra.
    let b = monomial("vertices 1 2 3 4; arrows a:1->2 b:2->3 c:4->2", &[&[2, 1]]);
    assert_eq!(b.coxeter_polynomial().unwrap(), vec![1, 1, 1, 1, 1]);
    assert_eq!(tilted_type(&b).unwrap().to_string(), "A4");
    // Linear A4 with the length-3 path killed is of type D4.
    let c = monomial("vertices 1 2 3 4; arrows a:1->2 b:2->3 c:3->4", &[&[0, 1, 2]]);
    assert_eq!(tilted_type(&c).unwrap().to_string(), "D4");
}

#[test]
fn a3_with_one_shifted_projective() {
    let q = fixture("a3_linear");
    let cat = TwoTermCategory::new(&q).unwrap();
    let t = SiltingObject::new(vec![DimVector(vec![0, 1, 0]), DimVector(vec![0, 1, 1])], vec![0]);
    let r = classify(&cat, &t).unwrap();
    assert_eq!(r.label(), "A2⊔A1");
    assert_eq!(r.blocks.len(), 2);
}

#[test]
fn hereditary_base_case() {
    for (name, _) in FIXTURES {
        let q = fixture(name);
        let cat = TwoTermCategory::new(&q).unwrap();
        let n = q.vertex_count();
        let projectives = (0..n).map(|i| cat.module_category().module(cat.module_category().projective(i)).dim.clone());
        let a = classify(&cat, &SiltingObject::new(projectives.collect(), Vec::new())).unwrap();
        let a1 = classify(&cat, &SiltingObject::new(Vec::new(), (0..n).collect())).unwrap();
        let ty = silted::quiver::dynkin_type(&q).unwrap();
        assert_eq!(a.tilted_type(), Some(ty.clone()), "{name}");
        assert_eq!(a.fingerprint, a1.fingerprint, "{name}");
        assert!(a.algebra.relations().is_empty());
    }
}

#[test]
fn strictly_shod_algebras_have_the_expected_presentations() {
    let s1 = monomial("vertices 1 2 3 4; arrows a:1->2 b:2->3 c:3->4", &[&[0, 1], &[1, 2]]);
    let s2 = monomial("vertices 1 2 3 4 5; arrows a:1->2 b:2->3 c:3->4 d:4->5", &[&[0, 1, 2], &[2, 3]]);
    let s3 = monomial("vertices 1 2 3 4 5; arrows a:1->2 b:2->3 c:3->4 d:5->4", &[&[0, 1], &[1, 2]]);
    let s4 = monomial("vertices 1 2 3 4 5; arrows a:1->2 b:2->3 c:3->4 d:4->5", &[&[0, 1], &[1, 2]]);
    let s5 = monomial("vertices 1 2 3 4 5; arrows a:1->2 b:2->3 c:3->4 d:2->5", &[&[0, 1], &[1, 2], &[0, 3]]);
    let fp = |b: &BoundQuiverAlgebra| {
        let h = Homology::compute(b.algebra()).unwrap();
        assert_eq!(h.global_dimension(), 3);
        fingerprint(b, &h)
    };

    let shod = |name: &str| {
        let q = fixture(name);
        let cat = TwoTermCategory::new(&q).unwrap();
        let records = classify_all(&cat, &enumerate_silting(&q).unwrap()).unwrap();
        let mut out: Vec<_> = dedupe(&records)
            .into_iter()
            .filter(|c| c.strictly_shod)
            .map(|c| {
                let r = &records[c.members[0]];
                assert!(r.blocks.iter().all(|b| b.verdict == Verdict::StrictlyShod && b.global_dimension == 3));
                r.fingerprint.clone()
            })
            .collect();
        out.sort();
        out
    };

    assert_eq!(shod("d4_first"), vec![fp(&s1)]);
    assert!(shod("d4_second").is_empty());
    let mut expected = vec![fp(&s2), fp(&s3), fp(&s4), fp(&s5)];
    expected.sort();
    assert_eq!(shod("d5"), expected);
}
