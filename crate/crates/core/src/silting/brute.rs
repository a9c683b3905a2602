use crate::complex::TwoTermCategory;
use crate::module_cat::ModuleCategory;

use super::SiltingObject;

/// All `size`-element sets of vertices `0..n` that are pairwise compatible,
/// in lexicographic order of index sets.
fn cliques(n: usize, size: usize, compatible: &dyn Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    fn grow(
        chosen: &mut Vec<usize>,
        candidates: &[usize],
        size: usize,
        compatible: &dyn Fn(usize, usize) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        if chosen.len() == size {
            out.push(chosen.clone());
            return;
        }
        for (k, &c) in candidates.iter().enumerate() {
            if chosen.len() + candidates.len() - k < size {
                break;
            }
            let next: Vec<usize> = candidates[k + 1..].iter().copied().filter(|&d| compatible(c, d)).collect();
            chosen.push(c);
            grow(chosen, &next, size, compatible, out);
            chosen.pop();
        }
    }
    let start: Vec<usize> = (0..n).filter(|&a| compatible(a, a)).collect();
    let mut out = Vec::new();
    grow(&mut Vec::new(), &start, size, compatible, &mut out);
    out
}

/// Tilting modules as the `|Q₀|`-element sets of indecomposables with
/// `Ext¹(X, Y) = 0` in both directions, computed on representations.
pub fn brute_force_tilting(cat: &ModuleCategory) -> Vec<SiltingObject> {
    let n = cat.len();
    let ext: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| cat.ext1_dim(a, b) == 0).collect()).collect();
    let compatible = |a: usize, b: usize| ext[a][b] && ext[b][a];
    let mut out: Vec<SiltingObject> = cliques(n, cat.quiver().vertex_count(), &compatible)
        .into_iter()
        .map(|c| SiltingObject::new(c.iter().map(|&k| cat.module(k).dim.clone()).collect(), Vec::new()))
        .collect();
    out.sort();
    out
}

/// 2-term silting complexes as the `|Q₀|`-element sets of indecomposable
/// 2-term complexes with `Hom(X, Y[1]) = 0` in both directions, computed in
/// the homotopy category.
pub fn brute_force_silting(cat: &TwoTermCategory) -> Vec<SiltingObject> {
    let compatible = |a: usize, b: usize| cat.ext_dim(a, b) == 0 && cat.ext_dim(b, a) == 0;
    let mut out: Vec<SiltingObject> = cliques(cat.len(), cat.quiver().vertex_count(), &compatible)
        .into_iter()
        .map(|c| SiltingObject::from_ids(c.iter().map(|&k| cat.id(k).clone())))
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cliques_of_a_path_graph() {
        let edge = |a: usize, b: usize| a == b || a.abs_diff(b) == 1;
        assert_eq!(cliques(4, 2, &edge), vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(cliques(4, 3, &edge), Vec::<Vec<usize>>::new());
        assert_eq!(cliques(3, 0, &edge), vec![Vec::<usize>::new()]);
    }
}
