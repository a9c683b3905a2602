use std::collections::BTreeMap;

use silted::complex::TwoTermCategory;
use silted::fixtures::{fixture, FIXTURES};
use silted::module_cat::{ArQuiver, IndecomposableId};

fn arrow_map(ar: &ArQuiver, cat: &TwoTermCategory) -> BTreeMap<(usize, usize), usize> {
    let to_cat = |v: usize| cat.index_of(&ar.vertices[v].id).expect("AR vertex is an object");
    ar.arrows.iter().map(|&(a, b, m)| ((to_cat(a), to_cat(b)), m)).collect()
}

#[test]
fn knitted_arrows_are_the_irreducible_maps() {
    for (name, _) in FIXTURES {
        let q = fixture(name);
        let cat = TwoTermCategory::new(&q).unwrap();
        let mods = cat.module_category();
        let two_term = ArQuiver::two_term(mods).unwrap();
        let module_only = ArQuiver::for_modules(mods).unwrap();
        assert_eq!(two_term.vertices.len(), mods.len() + q.vertex_count(), "{name}");
        assert_eq!(module_only.vertices.len(), mods.len(), "{name}");

        let arrows = arrow_map(&two_term, &cat);
        for a in 0..cat.len() {
            for b in (0..cat.len()).filter(|&b| b != a) {
                let knitted = arrows.get(&(a, b)).copied().unwrap_or(0);
                assert_eq!(knitted, cat.irreducible_dim(a, b).unwrap(), "{name}: {} -> {}", cat.label(a), cat.label(b));
            }
        }
        // Arrows between modules do not change when the shifted projectives are added.
        let modules = arrow_map(&module_only, &cat);
        let restricted: BTreeMap<_, _> =
            arrows.into_iter().filter(|((a, b), _)| !cat.id(*a).is_shifted() && !cat.id(*b).is_shifted()).collect();
        assert_eq!(modules, restricted, "{name}");
    }
}

#[test]
fn meshes_are_additive_on_dimension_vectors() {
    for (name, _) in FIXTURES {
        let q = fixture(name);
        let ar = ArQuiver::for_modules(&silted::module_cat::ModuleCategory::new(&q).unwrap()).unwrap();
        let dim = |v: usize| match &ar.vertices[v].id {
            IndecomposableId::Module(d) => d.0.clone(),
            IndecomposableId::Shifted(_) => unreachable!(),
        };
        for &(x, tx) in &ar.tau {
            let mut middle = vec![0u32; q.vertex_count()];
            for &(a, b, m) in &ar.arrows {
                if a == tx {
                    for (acc, d) in middle.iter_mut().zip(dim(b)) {
                        *acc += m as u32 * d;
                    }
                    assert!(ar.arrows.iter().any(|&(c, e, _)| c == b && e == x), "{name}: mesh not closed");
                }
            }
            let ends: Vec<u32> = dim(x).iter().zip(dim(tx)).map(|(a, b)| a + b).collect();
            assert_eq!(middle, ends, "{name}: mesh at {}", ar.vertices[x].label);
            assert_eq!(ar.vertices[x].row, ar.vertices[tx].row);
            assert_eq!(ar.vertices[x].slice, ar.vertices[tx].slice + 2);
        }
    }
}

#[test]
fn shifted_projectives_sit_after_the_injectives() {
    let q = fixture("d4_first");
    let cat = silted::module_cat::ModuleCategory::new(&q).unwrap();
    let ar = ArQuiver::two_term(&cat).unwrap();
    for i in 0..q.vertex_count() {
        let shifted = ar.index_of(&IndecomposableId::Shifted(i)).unwrap();
        let inj = ar.index_of(&IndecomposableId::Module(cat.module(cat.injective(i)).dim.clone())).unwrap();
        assert!(ar.tau.contains(&(shifted, inj)));
        assert_eq!(ar.vertices[shifted].slice, ar.vertices[inj].slice + 2);
    }
}
