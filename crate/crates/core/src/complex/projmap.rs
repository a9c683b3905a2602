use num_traits::{One, Zero};

use crate::linalg::Rational;
use crate::quiver::{PathAlgebra, PathVector};

/// A morphism `⊕_c P(source[c]) → ⊕_r P(target[r])` between direct sums of
/// indecomposable projectives. Entry `(r, c)` lies in
/// `Hom(P(source[c]), P(target[r])) = e(target[r]) A e(source[c])`, i.e. it is
/// a combination of paths from `target[r]` to `source[c]`, acting by left
/// multiplication.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjMap {
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    entries: Vec<PathVector>,
}

impl ProjMap {
    pub fn zero(source: &[usize], target: &[usize]) -> Self {
        let entries = target
            .iter()
            .flat_map(|&t| source.iter().map(move |&s| PathVector::zero(t, s)))
            .collect();
        Self { source: source.to_vec(), target: target.to_vec(), entries }
    }

    pub fn identity(alg: &PathAlgebra, summands: &[usize]) -> Self {
        let mut m = Self::zero(summands, summands);
        for (k, &v) in summands.iter().enumerate() {
            m.set(k, k, PathVector::from_path(alg, alg.lazy(v)));
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &PathVector {
        &self.entries[r * self.source.len() + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: PathVector) {
        assert_eq!((v.source, v.target), (self.target[r], self.source[c]), "entry has the wrong endpoints");
        let w = self.source.len();
        self.entries[r * w + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(PathVector::is_zero)
    }

    /// `self ∘ first`.
    pub fn after(&self, alg: &PathAlgebra, first: &ProjMap) -> ProjMap {
        assert_eq!(self.source, first.target, "maps do not compose");
        let mut out = ProjMap::zero(&first.source, &self.target);
        for r in 0..self.target.len() {
            for c in 0..first.source.len() {
                let mut acc = PathVector::zero(self.target[r], first.source[c]);
                for k in 0..self.source.len() {
                    let (a, b) = (self.get(r, k), first.get(k, c));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(alg, b));
                    }
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn add(&self, other: &ProjMap) -> ProjMap {
        assert_eq!((&self.source, &self.target), (&other.source, &other.target));
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect();
        ProjMap { source: self.source.clone(), target: self.target.clone(), entries }
    }

    pub fn scale(&self, k: &Rational) -> ProjMap {
        let entries = self.entries.iter().map(|a| a.scale(k)).collect();
        ProjMap { source: self.source.clone(), target: self.target.clone(), entries }
    }

    /// Coordinates in the path basis, entry by entry in row-major order.
    pub fn flatten(&self, alg: &PathAlgebra) -> Vec<Rational> {
        let mut out = Vec::with_capacity(space_dim(alg, &self.source, &self.target));
        for (k, e) in self.entries.iter().enumerate() {
            let (r, c) = (k / self.source.len(), k % self.source.len());
            for &p in alg.paths_between(self.target[r], self.source[c]) {
                out.push(e.coefficient(p));
            }
        }
        out
    }

    /// Inverse of [`flatten`](Self::flatten).
    pub fn from_flat(alg: &PathAlgebra, source: &[usize], target: &[usize], v: &[Rational]) -> ProjMap {
        let mut out = ProjMap::zero(source, target);
        let mut pos = 0;
        for r in 0..target.len() {
            for c in 0..source.len() {
                let paths = alg.paths_between(target[r], source[c]);
                let terms = paths.iter().zip(&v[pos..pos + paths.len()]).map(|(&p, x)| (p, x.clone())).collect();
                out.set(r, c, PathVector::from_terms(alg, target[r], source[c], terms));
                pos += paths.len();
            }
        }
        assert_eq!(pos, v.len(), "coordinate vector has the wrong length");
        out
    }

    /// The maps with a single path in a single entry, in flatten order.
    pub fn basis(alg: &PathAlgebra, source: &[usize], target: &[usize]) -> Vec<ProjMap> {
        let mut out = Vec::new();
        for r in 0..target.len() {
            for c in 0..source.len() {
                for &p in alg.paths_between(target[r], source[c]) {
                    let mut m = ProjMap::zero(source, target);
                    m.set(r, c, PathVector::from_path(alg, p));
                    out.push(m);
                }
            }
        }
        out
    }
}

/// `dim Hom(⊕P(source), ⊕P(target))`.
pub fn space_dim(alg: &PathAlgebra, source: &[usize], target: &[usize]) -> usize {
    target.iter().map(|&t| source.iter().map(|&s| alg.count(t, s)).sum::<usize>()).sum()
}

pub(crate) fn unit_vector(len: usize, k: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); len];
    v[k] = Rational::one();
    v
}
