use crate::error::{Error, Result};
use crate::linalg::{RatMatrix, Rational, RowEchelon};
use crate::quiver::PathAlgebra;

use super::projmap::{space_dim, unit_vector, ProjMap};
use super::TwoTermComplex;

/// A morphism `X → Y[shift]` between two-term complexes, by its components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainMap {
    /// `(f⁻¹, f⁰)` with `f⁰ d_X = d_Y f⁻¹`.
    Degree0 { minus: ProjMap, zero: ProjMap },
    /// `X → Y[1]`, determined by its single component `X⁻¹ → Y⁰`.
    Degree1(ProjMap),
}

impl ChainMap {
    pub fn identity(alg: &PathAlgebra, x: &TwoTermComplex) -> Self {
        ChainMap::Degree0 { minus: ProjMap::identity(alg, &x.minus), zero: ProjMap::identity(alg, &x.zero) }
    }

    pub fn shift(&self) -> i32 {
        match self {
            ChainMap::Degree0 { .. } => 0,
            ChainMap::Degree1(_) => 1,
        }
    }

    pub fn flatten(&self, alg: &PathAlgebra) -> Vec<Rational> {
        match self {
            ChainMap::Degree0 { minus, zero } => {
                let mut v = minus.flatten(alg);
                v.extend(zero.flatten(alg));
                v
            }
            ChainMap::Degree1(f) => f.flatten(alg),
        }
    }

    pub fn is_chain_map(&self, alg: &PathAlgebra, x: &TwoTermComplex, y: &TwoTermComplex) -> bool {
        match self {
            ChainMap::Degree0 { minus, zero } => zero.after(alg, &x.d) == y.d.after(alg, minus),
            ChainMap::Degree1(_) => true,
        }
    }
}

/// `g ∘ f`. Composites landing in a shift by two are zero between two-term
/// complexes and are rejected instead of being silently dropped.
pub fn compose(alg: &PathAlgebra, g: &ChainMap, f: &ChainMap) -> Result<ChainMap> {
    Ok(match (g, f) {
        (ChainMap::Degree0 { minus: gm, zero: gz }, ChainMap::Degree0 { minus: fm, zero: fz }) => {
            ChainMap::Degree0 { minus: gm.after(alg, fm), zero: gz.after(alg, fz) }
        }
        (ChainMap::Degree0 { zero: gz, .. }, ChainMap::Degree1(phi)) => ChainMap::Degree1(gz.after(alg, phi)),
        (ChainMap::Degree1(psi), ChainMap::Degree0 { minus: fm, .. }) => ChainMap::Degree1(psi.after(alg, fm)),
        (ChainMap::Degree1(_), ChainMap::Degree1(_)) => return Err(Error::ShiftMismatch(1, 1)),
    })
}

/// `Hom_{K^b}(X, Y[shift])` as a quotient of an explicit coordinate space.
///
/// `homotopy` is the subspace of null-homotopic maps and `classes` the
/// reduced echelon basis of the normal forms of all chain maps modulo it.
#[derive(Clone, Debug)]
pub struct HomSpace {
    shift: i32,
    source: TwoTermComplex,
    target: TwoTermComplex,
    homotopy: RowEchelon,
    classes: RowEchelon,
}

/// Morphism space `Hom(X, Y[shift])`. Shifts of absolute value at least two
/// give the zero space; `shift = -1` is not supported.
pub fn hom(alg: &PathAlgebra, x: &TwoTermComplex, y: &TwoTermComplex, shift: i32) -> Result<HomSpace> {
    let (homotopy, classes) = match shift {
        0 => degree0(alg, x, y),
        1 => degree1(alg, x, y),
        -1 => return Err(Error::UnsupportedShift(-1)),
        _ => (RowEchelon::new(0), RowEchelon::new(0)),
    };
    Ok(HomSpace { shift, source: x.clone(), target: y.clone(), homotopy, classes })
}

fn degree0(alg: &PathAlgebra, x: &TwoTermComplex, y: &TwoTermComplex) -> (RowEchelon, RowEchelon) {
    let v_minus = ProjMap::basis(alg, &x.minus, &y.minus);
    let v_zero = ProjMap::basis(alg, &x.zero, &y.zero);
    let width = v_minus.len() + v_zero.len();
    let cond_dim = space_dim(alg, &x.minus, &y.zero);
    let neg = Rational::from_integer((-1).into());

    // f ↦ f⁰ d_X − d_Y f⁻¹
    let mut columns = Vec::with_capacity(width);
    for e in &v_minus {
        columns.push(y.d.after(alg, e).scale(&neg).flatten(alg));
    }
    for e in &v_zero {
        columns.push(e.after(alg, &x.d).flatten(alg));
    }
    let cond = RatMatrix::from_columns(cond_dim, &columns);
    let chain_maps = cond.kernel_vectors();

    let mut homotopy = RowEchelon::new(width);
    for h in ProjMap::basis(alg, &x.zero, &y.minus) {
        let mut v = h.after(alg, &x.d).flatten(alg);
        v.extend(y.d.after(alg, &h).flatten(alg));
        homotopy.insert(&v);
    }
    let mut classes = RowEchelon::new(width);
    for z in &chain_maps {
        classes.insert(&homotopy.reduce(z));
    }
    (homotopy, classes)
}

fn degree1(alg: &PathAlgebra, x: &TwoTermComplex, y: &TwoTermComplex) -> (RowEchelon, RowEchelon) {
    let width = space_dim(alg, &x.minus, &y.zero);
    let mut homotopy = RowEchelon::new(width);
    for a in ProjMap::basis(alg, &x.zero, &y.zero) {
        homotopy.insert(&a.after(alg, &x.d).flatten(alg));
    }
    for b in ProjMap::basis(alg, &x.minus, &y.minus) {
        homotopy.insert(&y.d.after(alg, &b).flatten(alg));
    }
    let mut classes = RowEchelon::new(width);
    for k in 0..width {
        classes.insert(&homotopy.reduce(&unit_vector(width, k)));
    }
    (homotopy, classes)
}

impl HomSpace {
    pub fn shift(&self) -> i32 {
        self.shift
    }

    pub fn dim(&self) -> usize {
        self.classes.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.classes.dim() == 0
    }

    fn to_map(&self, alg: &PathAlgebra, v: &[Rational]) -> ChainMap {
        let (x, y) = (&self.source, &self.target);
        match self.shift {
            0 => {
                let split = space_dim(alg, &x.minus, &y.minus);
                ChainMap::Degree0 {
                    minus: ProjMap::from_flat(alg, &x.minus, &y.minus, &v[..split]),
                    zero: ProjMap::from_flat(alg, &x.zero, &y.zero, &v[split..]),
                }
            }
            1 => ChainMap::Degree1(ProjMap::from_flat(alg, &x.minus, &y.zero, v)),
            s => unreachable!("no representatives for shift {s}"),
        }
    }

    /// Representatives of a basis of the space, as chain maps in normal form.
    pub fn basis(&self, alg: &PathAlgebra) -> Vec<ChainMap> {
        self.classes.rows().iter().map(|v| self.to_map(alg, v)).collect()
    }

    /// Canonical representative of the class of `f`.
    pub fn normal_form(&self, alg: &PathAlgebra, f: &ChainMap) -> Vec<Rational> {
        assert_eq!(f.shift(), self.shift, "map has the wrong degree");
        self.homotopy.reduce(&f.flatten(alg))
    }

    /// Coordinates of the class of `f` in [`basis`](Self::basis).
    pub fn coordinates(&self, alg: &PathAlgebra, f: &ChainMap) -> Vec<Rational> {
        self.classes.coordinates(&self.normal_form(alg, f))
    }

    pub fn is_null_homotopic(&self, alg: &PathAlgebra, f: &ChainMap) -> bool {
        self.homotopy.contains(&f.flatten(alg))
    }
}
