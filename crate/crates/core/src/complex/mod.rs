//! Two-term complexes of projective `KQ`-modules and morphisms between them
//! in the homotopy category `K^b(proj KQ)`.
//!
//! A complex `X = (X⁻¹ → X⁰)` stores the summand vertices of each term and
//! the differential as a [`ProjMap`]. Morphism spaces are computed as chain
//! maps modulo null-homotopic maps, with classes represented by canonical
//! normal forms so that equality of classes is equality of vectors.

mod category;
mod hom;
mod projmap;

use num_traits::Zero;

use crate::linalg::{extend_basis, RatMatrix, Rational, RowEchelon};
use crate::module_cat::ModuleRep;
use crate::quiver::{PathAlgebra, PathVector};

pub use category::TwoTermCategory;
pub use hom::{compose, hom, ChainMap, HomSpace};
pub use projmap::{space_dim, ProjMap};

use projmap::unit_vector;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoTermComplex {
    /// Summand vertices of `X⁻¹`.
    pub minus: Vec<usize>,
    /// Summand vertices of `X⁰`.
    pub zero: Vec<usize>,
    /// Differential `X⁻¹ → X⁰`.
    pub d: ProjMap,
}

impl TwoTermComplex {
    pub fn new(d: ProjMap) -> Self {
        Self { minus: d.source.clone(), zero: d.target.clone(), d }
    }

    /// `P(i)[1]`, the stalk complex `P(i) → 0`.
    pub fn shifted_projective(i: usize) -> Self {
        Self::new(ProjMap::zero(&[i], &[]))
    }

    /// `P(i)` in degree 0.
    pub fn projective(i: usize) -> Self {
        Self::new(ProjMap::zero(&[], &[i]))
    }

    /// The linear map `(X⁻¹)_l → (X⁰)_l` at vertex `l`, rows indexed by
    /// `(summand, path)` pairs.
    pub fn differential_at(&self, alg: &PathAlgebra, l: usize) -> RatMatrix {
        let basis = |summands: &[usize]| -> Vec<(usize, usize)> {
            summands
                .iter()
                .enumerate()
                .flat_map(|(k, &v)| alg.paths_between(v, l).iter().map(move |&p| (k, p)))
                .collect()
        };
        let (src, tgt) = (basis(&self.minus), basis(&self.zero));
        let mut m = RatMatrix::zeros(src.len(), tgt.len());
        for (row, &(c, p)) in src.iter().enumerate() {
            let pv = PathVector::from_path(alg, p);
            for r in 0..self.zero.len() {
                let e = self.d.get(r, c);
                if e.is_zero() {
                    continue;
                }
                for (q, x) in e.mul(alg, &pv).terms() {
                    let col = tgt.iter().position(|&t| t == (r, *q)).expect("path in basis");
                    m.set(row, col, x.clone());
                }
            }
        }
        m
    }

    /// Dimension vectors of `H⁻¹` and `H⁰`.
    pub fn homology(&self, alg: &PathAlgebra) -> (Vec<usize>, Vec<usize>) {
        let n = alg.quiver().vertex_count();
        let mut h_minus = Vec::with_capacity(n);
        let mut h_zero = Vec::with_capacity(n);
        for l in 0..n {
            let m = self.differential_at(alg, l);
            let r = m.rank();
            h_minus.push(m.rows() - r);
            h_zero.push(m.cols() - r);
        }
        (h_minus, h_zero)
    }
}

/// Minimal projective presentation `P₁ → P₀ → M → 0`. Over a hereditary
/// algebra `P₁ → P₀` is injective, so this is a projective resolution and
/// the resulting complex is isomorphic to `M` in the derived category.
pub fn resolve(alg: &PathAlgebra, m: &ModuleRep) -> TwoTermComplex {
    let q = alg.quiver();
    let n = q.vertex_count();
    let dims = m.dims();

    // Top of M: complements of the images of incoming arrows.
    let mut gens: Vec<(usize, Vec<Rational>)> = Vec::new();
    for v in 0..n {
        let mut rad = RowEchelon::new(dims[v]);
        for a in q.incoming(v) {
            let ma = m.map(a);
            for r in 0..ma.rows() {
                rad.insert(ma.row(r));
            }
        }
        let cands: Vec<Vec<Rational>> = (0..dims[v]).map(|k| unit_vector(dims[v], k)).collect();
        for k in extend_basis(&rad, &cands) {
            gens.push((v, cands[k].clone()));
        }
    }

    // P₀ at vertex l has basis (generator, path from its vertex to l).
    let p0_basis: Vec<Vec<(usize, usize)>> = (0..n)
        .map(|l| {
            gens.iter()
                .enumerate()
                .flat_map(|(g, (v, _))| alg.paths_between(*v, l).iter().map(move |&p| (g, p)))
                .collect()
        })
        .collect();
    let kernels: Vec<Vec<Vec<Rational>>> = (0..n)
        .map(|l| {
            let rows: Vec<Vec<Rational>> = p0_basis[l]
                .iter()
                .map(|&(g, p)| {
                    let v = RatMatrix::from_vec(1, dims[gens[g].0], gens[g].1.clone());
                    m.act_path(alg, &v, p).entries().to_vec()
                })
                .collect();
            RatMatrix::from_rows(dims[l], rows).transpose().kernel_vectors()
        })
        .collect();

    // Top of the kernel gives the summands of P₁.
    let mut p1: Vec<(usize, Vec<Rational>)> = Vec::new();
    for l in 0..n {
        let width = p0_basis[l].len();
        let mut rad = RowEchelon::new(width);
        for a in q.incoming(l) {
            let u = q.arrow(a).source;
            let ap = alg.arrow_path(a);
            for k in &kernels[u] {
                let mut image = vec![Rational::zero(); width];
                for (x, &(g, p)) in k.iter().zip(&p0_basis[u]) {
                    if x.is_zero() {
                        continue;
                    }
                    let pa = alg.mul(p, ap).expect("composable");
                    let col = p0_basis[l].iter().position(|&b| b == (g, pa)).expect("path in basis");
                    image[col] += x;
                }
                rad.insert(&image);
            }
        }
        for k in extend_basis(&rad, &kernels[l]) {
            p1.push((l, kernels[l][k].clone()));
        }
    }

    let zero: Vec<usize> = gens.iter().map(|g| g.0).collect();
    let minus: Vec<usize> = p1.iter().map(|g| g.0).collect();
    let mut d = ProjMap::zero(&minus, &zero);
    for (c, (l, k)) in p1.iter().enumerate() {
        for (r, &(v, _)) in gens.iter().enumerate() {
            let terms = k
                .iter()
                .zip(&p0_basis[*l])
                .filter(|(x, &(g, _))| g == r && !x.is_zero())
                .map(|(x, &(_, p))| (p, x.clone()))
                .collect();
            d.set(r, c, PathVector::from_terms(alg, v, *l, terms));
        }
    }
    TwoTermComplex::new(d)
}
