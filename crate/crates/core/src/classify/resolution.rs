use num_traits::Zero;

use crate::endo::FinAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{extend_basis, RatMatrix, Rational, RowEchelon};

/// Longest projective resolution followed before giving up.
pub const RESOLUTION_CAP: usize = 10;

/// Minimal projective resolutions of the simple right `B`-modules.
///
/// `terms[i][k][j]` is the multiplicity of `e(j)B` in the `k`-th term of the
/// minimal resolution of the simple at `i`, which equals
/// `dim Ext^k(S_i, S_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    terms: Vec<Vec<Vec<usize>>>,
}

fn multiplicities(n: usize, gens: &[usize]) -> Vec<usize> {
    let mut m = vec![0; n];
    for &g in gens {
        m[g] += 1;
    }
    m
}

/// Right multiplication of `u ∈ ⊕_g e(v_g)Be(w)` by the `b`-th basis
/// element of `e(w)Be(w2)`.
fn act(b: &FinAlgebra, gens: &[usize], w: usize, w2: usize, u: &[Rational], basis: usize) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut pos = 0;
    for &g in gens {
        let len = b.dim(g, w);
        let mut part = vec![Rational::zero(); b.dim(g, w2)];
        for (a, x) in u[pos..pos + len].iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (o, p) in part.iter_mut().zip(b.product(g, w, w2, a, basis)) {
                if !p.is_zero() {
                    *o += x * p;
                }
            }
        }
        out.extend(part);
        pos += len;
    }
    out
}

/// Term multiplicities of the minimal projective resolution of `S_i`.
fn resolve_simple(b: &FinAlgebra, i: usize, cap: usize) -> Result<Vec<Vec<usize>>> {
    let n = b.vertex_count();
    let width = |gens: &[usize], w: usize| gens.iter().map(|&g| b.dim(g, w)).sum::<usize>();
    let mut gens = vec![i];
    let mut terms = vec![multiplicities(n, &gens)];
    // The radical of e(i)B: everything away from vertex i.
    let mut sub: Vec<Vec<Vec<Rational>>> = (0..n)
        .map(|w| {
            if w == i {
                Vec::new()
            } else {
                let d = b.dim(i, w);
                (0..d)
                    .map(|k| {
                        let mut v = vec![Rational::zero(); d];
                        v[k] = Rational::from_integer(1.into());
                        v
                    })
                    .collect()
            }
        })
        .collect();
    loop {
        // Top of the current submodule U: U / U·rad B.
        let mut next: Vec<(usize, Vec<Rational>)> = Vec::new();
        for w2 in 0..n {
            let mut urad = RowEchelon::new(width(&gens, w2));
            for w in (0..n).filter(|&w| w != w2) {
                for u in &sub[w] {
                    for basis in 0..b.dim(w, w2) {
                        urad.insert(&act(b, &gens, w, w2, u, basis));
                    }
                }
            }
            for k in extend_basis(&urad, &sub[w2]) {
                next.push((w2, sub[w2][k].clone()));
            }
        }
        if next.is_empty() {
            return Ok(terms);
        }
        if terms.len() > cap {
            return Err(Error::ResolutionTooLong { vertex: i, cap });
        }
        let new_gens: Vec<usize> = next.iter().map(|x| x.0).collect();
        terms.push(multiplicities(n, &new_gens));
        // Kernel of ⊕_h e(w_h)B → ⊕_g e(v_g)B, vertex by vertex.
        sub = (0..n)
            .map(|w2| {
                let rows: Vec<Vec<Rational>> = next
                    .iter()
                    .flat_map(|(w, u)| (0..b.dim(*w, w2)).map(move |basis| (w, u, basis)))
                    .map(|(w, u, basis)| act(b, &gens, *w, w2, u, basis))
                    .collect();
                RatMatrix::from_rows(width(&gens, w2), rows).transpose().kernel_vectors()
            })
            .collect();
        gens = new_gens;
    }
}

impl Homology {
    pub fn compute(b: &FinAlgebra) -> Result<Self> {
        Self::with_cap(b, RESOLUTION_CAP)
    }

    pub fn with_cap(b: &FinAlgebra, cap: usize) -> Result<Self> {
        let terms = (0..b.vertex_count()).map(|i| resolve_simple(b, i, cap)).collect::<Result<Vec<_>>>()?;
        Ok(Self { terms })
    }

    pub fn projective_dimensions(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.len() - 1).collect()
    }

    pub fn global_dimension(&self) -> usize {
        self.projective_dimensions().into_iter().max().unwrap_or(0)
    }

    /// `dim Ext^k(S_i, S_j)`.
    pub fn ext(&self, k: usize, i: usize, j: usize) -> usize {
        self.terms[i].get(k).map_or(0, |t| t[j])
    }

    pub fn ext_matrix(&self, k: usize) -> Vec<Vec<usize>> {
        let n = self.terms.len();
        (0..n).map(|i| (0..n).map(|j| self.ext(k, i, j)).collect()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{parse_quiver, PathAlgebra};

    #[test]
    fn hereditary_and_bound_a3() {
        let q = parse_quiver("vertices 1 2 3; arrows a:1->2 b:2->3").unwrap();
        let alg = PathAlgebra::new(&q);
        let free = Homology::compute(&FinAlgebra::monomial(&alg, &[]).unwrap()).unwrap();
        assert_eq!(free.projective_dimensions(), vec![1, 1, 0]);
        let bound = Homology::compute(&FinAlgebra::monomial(&alg, &[vec![0, 1]]).unwrap()).unwrap();
        assert_eq!(bound.projective_dimensions(), vec![2, 1, 0]);
        assert_eq!(bound.ext(2, 0, 2), 1);
        assert_eq!(bound.ext(1, 0, 1), 1);
    }

    #[test]
    fn two_overlapping_zero_relations_give_dimension_three() {
        let q = parse_quiver("vertices 1 2 3 4; arrows a:1->2 b:2->3 c:3->4").unwrap();
        let alg = PathAlgebra::new(&q);
        let b = FinAlgebra::monomial(&alg, &[vec![0, 1], vec![1, 2]]).unwrap();
        let h = Homology::compute(&b).unwrap();
        assert_eq!(h.global_dimension(), 3);
        assert_eq!(h.ext(3, 0, 3), 1);
        assert!(matches!(Homology::with_cap(&b, 2), Err(Error::ResolutionTooLong { vertex: 0, cap: 2 })));
    }
}
