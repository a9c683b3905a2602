use rayon::prelude::*;

use crate::error::Result;
use crate::linalg::RowEchelon;
use crate::module_cat::{IndecomposableId, ModuleCategory};
use crate::quiver::{PathAlgebra, Quiver};

use super::hom::{compose, hom, ChainMap, HomSpace};
use super::{resolve, TwoTermComplex};

/// The indecomposable objects of the 2-term silting category of a Dynkin
/// path algebra (resolved modules followed by the shifted projectives) with
/// every pairwise degree-0 morphism space and every `dim Hom(X, Y[1])`
/// precomputed.
#[derive(Clone, Debug)]
pub struct TwoTermCategory {
    modules: ModuleCategory,
    ids: Vec<IndecomposableId>,
    complexes: Vec<TwoTermComplex>,
    homs: Vec<Vec<HomSpace>>,
    ext: Vec<Vec<usize>>,
}

impl TwoTermCategory {
    pub fn new(q: &Quiver) -> Result<Self> {
        Self::from_modules(ModuleCategory::new(q)?)
    }

    pub fn from_modules(modules: ModuleCategory) -> Result<Self> {
        let alg = modules.algebra();
        let n = modules.quiver().vertex_count();
        let mut ids: Vec<IndecomposableId> =
            modules.modules().iter().map(|m| IndecomposableId::Module(m.dim.clone())).collect();
        let mut complexes: Vec<TwoTermComplex> =
            modules.modules().par_iter().map(|m| resolve(alg, &m.rep)).collect();
        for i in 0..n {
            ids.push(IndecomposableId::Shifted(i));
            complexes.push(TwoTermComplex::shifted_projective(i));
        }
        let size = complexes.len();
        let pairs: Vec<(HomSpace, usize)> = (0..size * size)
            .into_par_iter()
            .map(|k| {
                let (x, y) = (&complexes[k / size], &complexes[k % size]);
                Ok((hom(alg, x, y, 0)?, hom(alg, x, y, 1)?.dim()))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut homs = Vec::with_capacity(size);
        let mut ext = Vec::with_capacity(size);
        let mut it = pairs.into_iter();
        for _ in 0..size {
            let (h, e): (Vec<_>, Vec<_>) = it.by_ref().take(size).unzip();
            homs.push(h);
            ext.push(e);
        }
        Ok(Self { modules, ids, complexes, homs, ext })
    }

    pub fn quiver(&self) -> &Quiver {
        self.modules.quiver()
    }

    pub fn algebra(&self) -> &PathAlgebra {
        self.modules.algebra()
    }

    pub fn module_category(&self) -> &ModuleCategory {
        &self.modules
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[IndecomposableId] {
        &self.ids
    }

    pub fn id(&self, k: usize) -> &IndecomposableId {
        &self.ids[k]
    }

    pub fn index_of(&self, id: &IndecomposableId) -> Option<usize> {
        match id {
            IndecomposableId::Module(d) => self.modules.index_of(d),
            IndecomposableId::Shifted(i) => Some(self.modules.len() + i).filter(|&k| k < self.len()),
        }
    }

    pub fn complex(&self, k: usize) -> &TwoTermComplex {
        &self.complexes[k]
    }

    pub fn hom(&self, a: usize, b: usize) -> &HomSpace {
        &self.homs[a][b]
    }

    pub fn hom_dim(&self, a: usize, b: usize) -> usize {
        self.homs[a][b].dim()
    }

    /// `dim Hom(X_a, X_b[1])`.
    pub fn ext_dim(&self, a: usize, b: usize) -> usize {
        self.ext[a][b]
    }

    pub fn identity(&self, k: usize) -> ChainMap {
        ChainMap::identity(self.algebra(), &self.complexes[k])
    }

    /// `dim rad(X_a, X_b) / rad²(X_a, X_b)` for `a ≠ b`, with `rad²` spanned
    /// by composites through the other indecomposables. Every indecomposable
    /// here has endomorphism ring `K`, so `rad(X_a, X_b) = Hom(X_a, X_b)`.
    pub fn irreducible_dim(&self, a: usize, b: usize) -> Result<usize> {
        assert_ne!(a, b);
        let alg = self.algebra();
        let target = self.hom(a, b);
        let mut rad2 = RowEchelon::new(target.dim());
        for x in (0..self.len()).filter(|&x| x != a && x != b) {
            if self.hom_dim(a, x) == 0 || self.hom_dim(x, b) == 0 {
                continue;
            }
            let (gs, hs) = (self.hom(a, x).basis(alg), self.hom(x, b).basis(alg));
            for g in &gs {
                for h in &hs {
                    rad2.insert(&target.coordinates(alg, &compose(alg, h, g)?));
                }
            }
        }
        Ok(target.dim() - rad2.dim())
    }

    /// Compact label: dimension vector digits, `[1]` marking a shift.
    pub fn label(&self, k: usize) -> String {
        let digits = |v: &[u32]| v.iter().map(|x| x.to_string()).collect::<String>();
        match &self.ids[k] {
            IndecomposableId::Module(d) => digits(&d.0),
            IndecomposableId::Shifted(i) => {
                format!("{}[1]", digits(&self.modules.module(self.modules.projective(*i)).dim.0))
            }
        }
    }
}
