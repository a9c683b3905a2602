//! Basic tilting modules and basic 2-term silting complexes.
//!
//! The main enumerators work on dimension vectors only: tilting modules come
//! from a recursion over full subquivers that mixes projectives of the
//! restricted algebra with `τ⁻¹`-translates, and every 2-term silting complex
//! is a tilting module over a restriction together with the shifted
//! projectives at the removed vertices. The brute-force enumerators search
//! for maximal compatible sets directly with Hom/Ext computations and serve
//! as the reference.

mod brute;
mod recursive;

use serde_json::{json, Value};

use crate::complex::TwoTermCategory;
use crate::error::{Error, Result};
use crate::module_cat::IndecomposableId;
use crate::quiver::{DimVector, Quiver};

pub use brute::{brute_force_silting, brute_force_tilting};
pub use recursive::{enumerate_silting, enumerate_tilting, tilting_modules_on};

/// A basic 2-term silting complex `M ⊕ P(I)[1]`: the module summands by
/// dimension vector and the vertex set `I` of the shifted projectives, both
/// kept sorted. Tilting modules are the objects with `I = ∅`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SiltingObject {
    pub modules: Vec<DimVector>,
    pub shifted: Vec<usize>,
}

impl SiltingObject {
    pub fn new(mut modules: Vec<DimVector>, mut shifted: Vec<usize>) -> Self {
        modules.sort();
        shifted.sort_unstable();
        Self { modules, shifted }
    }

    pub fn from_ids(ids: impl IntoIterator<Item = IndecomposableId>) -> Self {
        let (mut modules, mut shifted) = (Vec::new(), Vec::new());
        for id in ids {
            match id {
                IndecomposableId::Module(d) => modules.push(d),
                IndecomposableId::Shifted(i) => shifted.push(i),
            }
        }
        Self::new(modules, shifted)
    }

    pub fn rank(&self) -> usize {
        self.modules.len() + self.shifted.len()
    }

    pub fn is_tilting(&self) -> bool {
        self.shifted.is_empty()
    }

    pub fn summands(&self) -> Vec<IndecomposableId> {
        self.modules
            .iter()
            .cloned()
            .map(IndecomposableId::Module)
            .chain(self.shifted.iter().map(|&i| IndecomposableId::Shifted(i)))
            .collect()
    }

    /// Positions of the summands in `cat`, in [`summands`](Self::summands) order.
    pub fn indices(&self, cat: &TwoTermCategory) -> Result<Vec<usize>> {
        self.summands()
            .iter()
            .map(|id| cat.index_of(id).ok_or_else(|| Error::NotSilting(format!("{id:?} is not indecomposable"))))
            .collect()
    }

    /// `{"I": [labels], "modules": [[dims]]}`.
    pub fn to_json(&self, q: &Quiver) -> Value {
        json!({
            "I": self.shifted.iter().map(|&i| q.label(i)).collect::<Vec<_>>(),
            "modules": self.modules.iter().map(|d| d.0.clone()).collect::<Vec<_>>(),
        })
    }

    /// Compact one-line form, e.g. `110 ⊕ 100 ⊕ 001[1]`.
    pub fn display(&self, cat: &TwoTermCategory) -> String {
        match self.indices(cat) {
            Ok(idx) => idx.iter().map(|&k| cat.label(k)).collect::<Vec<_>>().join(" ⊕ "),
            Err(_) => format!("{self:?}"),
        }
    }
}

/// Checks that `obj` has `|Q₀|` distinct indecomposable summands with
/// `Hom(X, Y[1]) = 0` for all summands `X, Y`.
pub fn verify_silting(cat: &TwoTermCategory, obj: &SiltingObject) -> Result<()> {
    let n = cat.quiver().vertex_count();
    let idx = obj.indices(cat)?;
    if idx.len() != n {
        return Err(Error::NotSilting(format!("{} summands for {} vertices", idx.len(), n)));
    }
    for (k, &a) in idx.iter().enumerate() {
        if idx[..k].contains(&a) {
            return Err(Error::NotSilting(format!("repeated summand {}", cat.label(a))));
        }
        for &b in &idx {
            if cat.ext_dim(a, b) != 0 {
                return Err(Error::NotSilting(format!("Hom({}, {}[1]) ≠ 0", cat.label(a), cat.label(b))));
            }
        }
    }
    Ok(())
}

/// The full subquiver on `Q₀ ∖ removed`; its path algebra is `A/⟨e⟩` for
/// `e` the idempotent of the removed vertices.
pub fn restrict(q: &Quiver, removed: &[usize]) -> Quiver {
    let keep: Vec<bool> = (0..q.vertex_count()).map(|v| !removed.contains(&v)).collect();
    q.full_subquiver(&keep).0
}

/// Whether `Hom(X, Y[1]) = 0` for all summands `X, Y`, given by position in `cat`.
pub fn is_presilting(cat: &TwoTermCategory, summands: &[usize]) -> bool {
    summands.iter().all(|&a| summands.iter().all(|&b| cat.ext_dim(a, b) == 0))
}
