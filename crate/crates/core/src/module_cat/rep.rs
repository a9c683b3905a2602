use num_traits::One;

use crate::linalg::{RatMatrix, Rational};
use crate::quiver::{DimVector, PathAlgebra, Quiver};

/// A representation of a quiver: a vector space per vertex and, for every
/// arrow `α: i → j`, a `dim_i × dim_j` matrix acting on row vectors
/// (`v ↦ v·M_α`), matching the right-module convention.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleRep {
    dims: Vec<usize>,
    maps: Vec<RatMatrix>,
}

/// A morphism of representations: one matrix per vertex, same row-vector convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMorphism(pub Vec<RatMatrix>);

impl RepMorphism {
    /// `self` followed by `next`.
    pub fn then(&self, next: &RepMorphism) -> RepMorphism {
        RepMorphism(self.0.iter().zip(&next.0).map(|(f, g)| f * g).collect())
    }

    pub fn flatten(&self) -> Vec<Rational> {
        self.0.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }
}

impl ModuleRep {
    pub fn new(q: &Quiver, dims: Vec<usize>, maps: Vec<RatMatrix>) -> Self {
        assert_eq!(dims.len(), q.vertex_count());
        assert_eq!(maps.len(), q.arrows().len());
        for (a, m) in q.arrows().iter().zip(&maps) {
            assert_eq!((m.rows(), m.cols()), (dims[a.source], dims[a.target]), "arrow {} has wrong shape", a.id);
        }
        Self { dims, maps }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn map(&self, arrow: usize) -> &RatMatrix {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[RatMatrix] {
        &self.maps
    }

    pub fn dim_vector(&self) -> DimVector {
        DimVector(self.dims.iter().map(|&d| d as u32).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn zero(q: &Quiver) -> Self {
        let maps = q.arrows().iter().map(|_| RatMatrix::zeros(0, 0)).collect();
        Self { dims: vec![0; q.vertex_count()], maps }
    }

    pub fn simple(q: &Quiver, i: usize) -> Self {
        let dims: Vec<usize> = (0..q.vertex_count()).map(|v| usize::from(v == i)).collect();
        let maps = q.arrows().iter().map(|a| RatMatrix::zeros(dims[a.source], dims[a.target])).collect();
        Self { dims, maps }
    }

    /// `P(i) = e(i)A`: basis at `l` is the paths from `i` to `l`, arrows act by
    /// appending.
    pub fn projective(alg: &PathAlgebra, i: usize) -> Self {
        let q = alg.quiver();
        let dims: Vec<usize> = (0..q.vertex_count()).map(|l| alg.count(i, l)).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arr)| {
                let from = alg.paths_between(i, arr.source);
                let to = alg.paths_between(i, arr.target);
                let mut m = RatMatrix::zeros(from.len(), to.len());
                let ap = alg.arrow_path(a);
                for (r, &p) in from.iter().enumerate() {
                    let pa = alg.mul(p, ap).expect("composable");
                    let c = to.iter().position(|&x| x == pa).expect("path in basis");
                    m.set(r, c, Rational::one());
                }
                m
            })
            .collect();
        Self { dims, maps }
    }

    /// `I(i) = D(Ae(i))`: basis at `l` is dual to the paths from `l` to `i`;
    /// an arrow `α` sends `p*` to `r*` whenever `p = α·r`.
    pub fn injective(alg: &PathAlgebra, i: usize) -> Self {
        let q = alg.quiver();
        let dims: Vec<usize> = (0..q.vertex_count()).map(|l| alg.count(l, i)).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arr)| {
                let from = alg.paths_between(arr.source, i);
                let to = alg.paths_between(arr.target, i);
                let mut m = RatMatrix::zeros(from.len(), to.len());
                let ap = alg.arrow_path(a);
                for (c, &r) in to.iter().enumerate() {
                    let p = alg.mul(ap, r).expect("composable");
                    let row = from.iter().position(|&x| x == p).expect("path in basis");
                    m.set(row, c, Rational::one());
                }
                m
            })
            .collect();
        Self { dims, maps }
    }

    /// Image of the vector `v ∈ M_{source(p)}` under the path `p`.
    pub fn act_path(&self, alg: &PathAlgebra, v: &RatMatrix, path: usize) -> RatMatrix {
        let mut out = v.clone();
        for &a in &alg.path(path).arrows {
            out = &out * &self.maps[a];
        }
        out
    }
}

/// The linear map `⊕_i Hom(M_i, N_i) → ⊕_α Hom(M_s(α), N_t(α))`,
/// `(f_i) ↦ (M_α f_t − f_s N_α)`. Its kernel is `Hom(M, N)`; it is `Hom(−, N)`
/// applied to the standard projective resolution of `M`, so its cokernel is
/// `Ext¹(M, N)`.
fn intertwining_system(q: &Quiver, m: &ModuleRep, n: &ModuleRep) -> (RatMatrix, Vec<usize>) {
    let nv = q.vertex_count();
    let mut offsets = Vec::with_capacity(nv + 1);
    let mut total = 0;
    for i in 0..nv {
        offsets.push(total);
        total += m.dims[i] * n.dims[i];
    }
    offsets.push(total);
    let rows: usize = q.arrows().iter().map(|a| m.dims[a.source] * n.dims[a.target]).sum();
    let mut sys = RatMatrix::zeros(rows, total);
    let mut row = 0;
    for (k, a) in q.arrows().iter().enumerate() {
        let (i, j) = (a.source, a.target);
        let (ma, na) = (&m.maps[k], &n.maps[k]);
        for r in 0..m.dims[i] {
            for c in 0..n.dims[j] {
                // (M_α f_j)[r][c] = Σ_t M_α[r][t] f_j[t][c]
                for t in 0..m.dims[j] {
                    let x = ma.get(r, t);
                    if !num_traits::Zero::is_zero(x) {
                        let col = offsets[j] + t * n.dims[j] + c;
                        let v = sys.get(row, col) + x;
                        sys.set(row, col, v);
                    }
                }
                // − (f_i N_α)[r][c] = − Σ_t f_i[r][t] N_α[t][c]
                for t in 0..n.dims[i] {
                    let x = na.get(t, c);
                    if !num_traits::Zero::is_zero(x) {
                        let col = offsets[i] + r * n.dims[i] + t;
                        let v = sys.get(row, col) - x;
                        sys.set(row, col, v);
                    }
                }
                row += 1;
            }
        }
    }
    (sys, offsets)
}

pub fn hom_dim(q: &Quiver, m: &ModuleRep, n: &ModuleRep) -> usize {
    let (sys, _) = intertwining_system(q, m, n);
    sys.cols() - sys.rank()
}

pub fn ext1_dim(q: &Quiver, m: &ModuleRep, n: &ModuleRep) -> usize {
    let (sys, _) = intertwining_system(q, m, n);
    sys.rows() - sys.rank()
}

/// Basis of `Hom(M, N)` in kernel order.
pub fn hom_basis(q: &Quiver, m: &ModuleRep, n: &ModuleRep) -> Vec<RepMorphism> {
    let (sys, offsets) = intertwining_system(q, m, n);
    sys.kernel_vectors()
        .into_iter()
        .map(|v| {
            RepMorphism(
                (0..q.vertex_count())
                    .map(|i| RatMatrix::from_vec(m.dims[i], n.dims[i], v[offsets[i]..offsets[i + 1]].to_vec()))
                    .collect(),
            )
        })
        .collect()
}

/// Coxeter functor `C⁻`: the source reflections `S⁻_k` applied along
/// `order`, a topological order of `q`. For an indecomposable non-injective
/// module this is `τ⁻¹`; it kills injectives.
///
/// `S⁻_k` replaces `M_k` by the cokernel of `M_k → ⊕_{α:k→j} M_j`,
/// realized through the null-space basis of the stacked map, so the
/// resulting matrices are read off a reduced echelon form.
pub fn coxeter_minus(q: &Quiver, order: &[usize], m: &ModuleRep) -> ModuleRep {
    let mut dims = m.dims.clone();
    let mut maps = m.maps.clone();
    let mut flipped = vec![false; q.arrows().len()];
    let ends = |a: usize, flipped: &[bool]| {
        let arr = q.arrow(a);
        if flipped[a] {
            (arr.target, arr.source)
        } else {
            (arr.source, arr.target)
        }
    };
    for &k in order {
        let incident: Vec<usize> =
            (0..q.arrows().len()).filter(|&a| q.arrow(a).source == k || q.arrow(a).target == k).collect();
        debug_assert!(incident.iter().all(|&a| ends(a, &flipped).0 == k), "vertex must be a source");
        let mut stacked = RatMatrix::zeros(dims[k], 0);
        let mut blocks = Vec::new();
        for &a in &incident {
            let j = ends(a, &flipped).1;
            blocks.push((a, stacked.cols(), dims[j]));
            stacked = stacked.hstack(&maps[a]);
        }
        let pi = stacked.kernel_matrix();
        let c = pi.cols();
        for (a, start, len) in blocks {
            maps[a] = pi.submatrix(start..start + len, 0..c);
            flipped[a] = !flipped[a];
        }
        dims[k] = c;
    }
    debug_assert!(flipped.iter().all(|&f| !f));
    ModuleRep { dims, maps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::parse_quiver;

    fn a2() -> (Quiver, PathAlgebra) {
        let q = parse_quiver("vertices 1 2; arrows a:1->2").unwrap();
        let alg = PathAlgebra::new(&q);
        (q, alg)
    }

    #[test]
    fn projectives_and_injectives_of_a2() {
        let (_, alg) = a2();
        assert_eq!(ModuleRep::projective(&alg, 0).dims(), &[1, 1]);
        assert_eq!(ModuleRep::projective(&alg, 1).dims(), &[0, 1]);
        assert_eq!(ModuleRep::injective(&alg, 0).dims(), &[1, 0]);
        assert_eq!(ModuleRep::injective(&alg, 1).dims(), &[1, 1]);
    }

    #[test]
    fn hom_and_ext_in_a2() {
        let (q, alg) = a2();
        let s2 = ModuleRep::simple(&q, 1);
        let s1 = ModuleRep::simple(&q, 0);
        let p1 = ModuleRep::projective(&alg, 0);
        assert_eq!(hom_dim(&q, &s2, &p1), 1);
        assert_eq!(hom_dim(&q, &p1, &s2), 0);
        assert_eq!(ext1_dim(&q, &s1, &s2), 1);
        assert_eq!(ext1_dim(&q, &p1, &s2), 0);
        assert_eq!(hom_dim(&q, &p1, &p1), 1);
    }

    #[test]
    fn coxeter_functor_on_a2() {
        let (q, alg) = a2();
        let order = q.topological_order().unwrap();
        let s2 = ModuleRep::projective(&alg, 1);
        let t = coxeter_minus(&q, &order, &s2);
        assert_eq!(t.dims(), &[1, 0]);
        assert!(coxeter_minus(&q, &order, &t).is_zero());
        assert!(coxeter_minus(&q, &order, &ModuleRep::projective(&alg, 0)).is_zero());
    }
}
