//! Finite-dimensional right modules over `KQ` for a Dynkin quiver `Q`,
//! handled as quiver representations.
//!
//! The indecomposables are produced by knitting: starting from each
//! projective `P(i)` the Coxeter functor `C⁻` (a composite of BGP source
//! reflections) is applied until it returns zero. Every representation in the
//! resulting list is therefore explicit, and `τ⁻¹` along an orbit is exact.

mod ar;
mod rep;

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{rat, to_i64, RatMatrix};
use crate::quiver::{cartan_matrix, coxeter_matrix, dynkin_type, DimVector, PathAlgebra, Quiver};

pub use ar::{ar_quiver_mod, ar_quiver_two_term, ArQuiver, ArVertex, IndecomposableId};
pub use rep::{coxeter_minus, ext1_dim, hom_basis, hom_dim, ModuleRep, RepMorphism};

/// An indecomposable module `τ^{-step} P(orbit)` with its representation.
#[derive(Clone, Debug)]
pub struct Indecomposable {
    pub dim: DimVector,
    pub rep: ModuleRep,
    pub orbit: usize,
    pub step: usize,
}

/// All indecomposable modules of a Dynkin path algebra, in slice order.
#[derive(Clone, Debug)]
pub struct ModuleCategory {
    quiver: Quiver,
    algebra: PathAlgebra,
    modules: Vec<Indecomposable>,
    index: HashMap<DimVector, usize>,
    projectives: Vec<usize>,
    injectives: Vec<usize>,
    offsets: Vec<i64>,
}

/// Horizontal offset `x(i)` of `P(i)` in the AR quiver: `x(i) = x(j) + 1` for
/// every arrow `i → j`, normalized per component so the minimum is 0.
pub fn slice_offsets(q: &Quiver) -> Vec<i64> {
    let n = q.vertex_count();
    let mut x = vec![0i64; n];
    for comp in q.components() {
        let mut seen = vec![false; n];
        let mut stack = vec![comp[0]];
        seen[comp[0]] = true;
        while let Some(v) = stack.pop() {
            for a in q.arrows() {
                let (w, val) = if a.source == v {
                    (a.target, x[v] - 1)
                } else if a.target == v {
                    (a.source, x[v] + 1)
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    x[w] = val;
                    stack.push(w);
                }
            }
        }
        let min = comp.iter().map(|&v| x[v]).min().unwrap_or(0);
        for &v in &comp {
            x[v] -= min;
        }
    }
    x
}

impl ModuleCategory {
    pub fn new(q: &Quiver) -> Result<Self> {
        dynkin_type(q)?;
        let algebra = PathAlgebra::new(q);
        let order = q.topological_order()?;
        let offsets = slice_offsets(q);
        let n = q.vertex_count();
        let mut modules = Vec::new();
        for i in 0..n {
            let mut rep = ModuleRep::projective(&algebra, i);
            let mut step = 0;
            while !rep.is_zero() {
                let next = coxeter_minus(q, &order, &rep);
                modules.push(Indecomposable { dim: rep.dim_vector(), rep, orbit: i, step });
                rep = next;
                step += 1;
            }
        }
        modules.sort_by_key(|m| (2 * m.step as i64 + offsets[m.orbit], m.orbit));
        let mut index = HashMap::new();
        for (k, m) in modules.iter().enumerate() {
            if index.insert(m.dim.clone(), k).is_some() {
                return Err(Error::Invariant(format!("dimension vector {} occurs twice", m.dim)));
            }
        }
        let find = |d: Vec<usize>| -> Result<usize> {
            let d = DimVector(d.into_iter().map(|x| x as u32).collect());
            index.get(&d).copied().ok_or_else(|| Error::Invariant(format!("{d} missing from the knitting")))
        };
        let projectives = (0..n)
            .map(|i| find((0..n).map(|l| algebra.count(i, l)).collect()))
            .collect::<Result<Vec<_>>>()?;
        let injectives = (0..n)
            .map(|i| find((0..n).map(|l| algebra.count(l, i)).collect()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { quiver: q.clone(), algebra, modules, index, projectives, injectives, offsets })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn algebra(&self) -> &PathAlgebra {
        &self.algebra
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn modules(&self) -> &[Indecomposable] {
        &self.modules
    }

    pub fn module(&self, k: usize) -> &Indecomposable {
        &self.modules[k]
    }

    pub fn index_of(&self, d: &DimVector) -> Option<usize> {
        self.index.get(d).copied()
    }

    pub fn projective(&self, i: usize) -> usize {
        self.projectives[i]
    }

    pub fn injective(&self, i: usize) -> usize {
        self.injectives[i]
    }

    pub fn is_projective(&self, k: usize) -> bool {
        self.modules[k].step == 0
    }

    pub fn is_injective(&self, k: usize) -> bool {
        self.injectives.contains(&k)
    }

    /// Column of the module in the AR quiver.
    pub fn slice(&self, k: usize) -> i64 {
        let m = &self.modules[k];
        2 * m.step as i64 + self.offsets[m.orbit]
    }

    pub fn offsets(&self) -> &[i64] {
        &self.offsets
    }

    /// `τ` along the knitted orbit; `None` on projectives.
    pub fn tau(&self, k: usize) -> Option<usize> {
        let m = &self.modules[k];
        (m.step > 0).then(|| self.locate(m.orbit, m.step - 1))
    }

    /// `τ⁻¹` along the knitted orbit; `None` on injectives.
    pub fn tau_inverse(&self, k: usize) -> Option<usize> {
        let m = &self.modules[k];
        self.modules.iter().position(|x| x.orbit == m.orbit && x.step == m.step + 1)
    }

    fn locate(&self, orbit: usize, step: usize) -> usize {
        self.modules
            .iter()
            .position(|x| x.orbit == orbit && x.step == step)
            .expect("orbit positions are contiguous")
    }

    pub fn hom_dim(&self, a: usize, b: usize) -> usize {
        hom_dim(&self.quiver, &self.modules[a].rep, &self.modules[b].rep)
    }

    pub fn ext1_dim(&self, a: usize, b: usize) -> usize {
        ext1_dim(&self.quiver, &self.modules[a].rep, &self.modules[b].rep)
    }

    /// `dim τM` through the AR formula `dim (τM)_k = dim Ext¹(M, P(k))`,
    /// independent of the knitting.
    pub fn tau_dim_by_ext(&self, k: usize) -> DimVector {
        let n = self.quiver.vertex_count();
        DimVector((0..n).map(|v| self.ext1_dim(k, self.projectives[v]) as u32).collect())
    }

    /// `dim (τ⁻¹N)_k = dim Ext¹(I(k), N)`.
    pub fn tau_inverse_dim_by_ext(&self, k: usize) -> DimVector {
        let n = self.quiver.vertex_count();
        DimVector((0..n).map(|v| self.ext1_dim(self.injectives[v], k) as u32).collect())
    }
}

/// Dimension vectors of all indecomposable modules, in slice order.
pub fn indecomposables(q: &Quiver) -> Result<Vec<DimVector>> {
    Ok(ModuleCategory::new(q)?.modules.into_iter().map(|m| m.dim).collect())
}

/// The indecomposable representation with dimension vector `d`.
pub fn build_representation(q: &Quiver, d: &DimVector) -> Result<ModuleRep> {
    let cat = ModuleCategory::new(q)?;
    let k = cat.index_of(d).ok_or_else(|| Error::NotARoot(d.to_string()))?;
    Ok(cat.modules[k].rep.clone())
}

fn apply_row(d: &DimVector, m: &RatMatrix) -> Result<DimVector> {
    let v = RatMatrix::from_ints(1, d.len(), &d.0.iter().map(|&x| x as i64).collect::<Vec<_>>());
    let r = &v * m;
    r.entries()
        .iter()
        .map(|x| match to_i64(x) {
            Some(y) if y >= 0 => Ok(y as u32),
            _ => Err(Error::NotARoot(d.to_string())),
        })
        .collect::<Result<Vec<_>>>()
        .map(DimVector)
}

/// `dim τM = dim M · Φ` for indecomposable non-projective `M`; `None` when
/// `d` is the dimension vector of a projective.
pub fn tau(q: &Quiver, d: &DimVector) -> Result<Option<DimVector>> {
    dynkin_type(q)?;
    let c = cartan_matrix(q);
    if is_row_of(&c, d) {
        return Ok(None);
    }
    apply_row(d, &coxeter_matrix(q)).map(Some)
}

/// `dim τ⁻¹N = dim N · Φ⁻¹`; `None` for injectives.
pub fn tau_inverse(q: &Quiver, d: &DimVector) -> Result<Option<DimVector>> {
    dynkin_type(q)?;
    let c = cartan_matrix(q);
    if is_row_of(&c.transpose(), d) {
        return Ok(None);
    }
    let inv = coxeter_matrix(q).inverse().ok_or(Error::SingularCartan)?;
    apply_row(d, &inv).map(Some)
}

fn is_row_of(m: &RatMatrix, d: &DimVector) -> bool {
    (0..m.rows()).any(|r| m.row(r).iter().zip(&d.0).all(|(x, &y)| *x == rat(y as i64)))
        && !d.0.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::parse_quiver;

    fn dv(v: &[u32]) -> DimVector {
        DimVector(v.to_vec())
    }

    #[test]
    fn a2_category() {
        let q = parse_quiver("vertices 1 2; arrows a:1->2").unwrap();
        let cat = ModuleCategory::new(&q).unwrap();
        let dims: Vec<_> = cat.modules().iter().map(|m| m.dim.clone()).collect();
        assert_eq!(dims, vec![dv(&[0, 1]), dv(&[1, 1]), dv(&[1, 0])]);
        assert_eq!(tau(&q, &dv(&[1, 0])).unwrap(), Some(dv(&[0, 1])));
        assert_eq!(tau(&q, &dv(&[1, 1])).unwrap(), None);
        assert_eq!(tau_inverse(&q, &dv(&[0, 1])).unwrap(), Some(dv(&[1, 0])));
        assert_eq!(tau_inverse(&q, &dv(&[1, 0])).unwrap(), None);
    }

    #[test]
    fn a3_tau_and_counts() {
        let q = parse_quiver("vertices 1 2 3; arrows a:1->2 b:2->3").unwrap();
        assert_eq!(indecomposables(&q).unwrap().len(), 6);
        assert_eq!(tau(&q, &dv(&[1, 1, 0])).unwrap(), Some(dv(&[0, 1, 1])));
        assert!(matches!(build_representation(&q, &dv(&[1, 0, 1])), Err(Error::NotARoot(_))));
    }

    #[test]
    fn offsets_follow_arrows() {
        let q = parse_quiver("vertices 1 2 3; arrows a:1->3 b:2->3").unwrap();
        assert_eq!(slice_offsets(&q), vec![1, 1, 0]);
        let q = parse_quiver("vertices 1 2; arrows a:1->2").unwrap();
        assert_eq!(slice_offsets(&q), vec![1, 0]);
    }
}
