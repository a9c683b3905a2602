use num_traits::{One, Zero};

use crate::complex::{compose, TwoTermCategory};
use crate::error::{Error, Result};
use crate::linalg::{Rational, RowEchelon};
use crate::quiver::PathAlgebra;

/// A basic finite-dimensional algebra `B = ⊕ e(i) B e(j)` given by a basis of
/// every Peirce component and structure constants.
///
/// The product maps `e(i)Be(j) × e(j)Be(k) → e(i)Be(k)`. Every diagonal
/// component is one-dimensional with basis the idempotent `e(i)`, and the
/// algebra is directed: no two distinct vertices have nonzero components in
/// both directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAlgebra {
    n: usize,
    dims: Vec<Vec<usize>>,
    products: Vec<Vec<Vec<Rational>>>,
}

impl FinAlgebra {
    /// Builds the algebra from `dims` and a product callback returning the
    /// coordinates of `basis_ij[a] · basis_jk[b]` in `basis_ik`.
    pub fn from_products(
        dims: Vec<Vec<usize>>,
        mut product: impl FnMut(usize, usize, usize, usize, usize) -> Result<Vec<Rational>>,
    ) -> Result<Self> {
        let n = dims.len();
        for i in 0..n {
            if dims[i][i] != 1 {
                return Err(Error::Invariant(format!(
                    "component e{i}·B·e{i} has dimension {}, expected 1",
                    dims[i][i]
                )));
            }
            for j in 0..i {
                if dims[i][j] > 0 && dims[j][i] > 0 {
                    return Err(Error::Invariant(format!("vertices {j} and {i} lie on an oriented cycle")));
                }
            }
        }
        let mut products = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut table = Vec::with_capacity(dims[i][j] * dims[j][k]);
                    for a in 0..dims[i][j] {
                        for b in 0..dims[j][k] {
                            let v = product(i, j, k, a, b)?;
                            debug_assert_eq!(v.len(), dims[i][k]);
                            table.push(v);
                        }
                    }
                    products.push(table);
                }
            }
        }
        Ok(Self { n, dims, products })
    }

    /// `End(⊕ T_i)` for summands `T_i` given by their positions in `cat`:
    /// `e(i)Be(j) = Hom(T_j, T_i)` and the product is composition.
    pub fn endomorphism_algebra(cat: &TwoTermCategory, summands: &[usize]) -> Result<Self> {
        let alg = cat.algebra();
        let n = summands.len();
        let spaces: Vec<Vec<_>> =
            (0..n).map(|i| (0..n).map(|j| cat.hom(summands[j], summands[i])).collect()).collect();
        let bases: Vec<Vec<_>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { vec![cat.identity(summands[i])] } else { spaces[i][j].basis(alg) })
                    .collect()
            })
            .collect();
        let dims: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| spaces[i][j].dim()).collect()).collect();
        let id_scale: Vec<Rational> = (0..n)
            .map(|i| {
                spaces[i][i]
                    .coordinates(alg, &bases[i][i][0])
                    .first()
                    .cloned()
                    .unwrap_or_else(Rational::zero)
            })
            .collect();
        if let Some(i) = id_scale.iter().position(Zero::is_zero) {
            return Err(Error::Invariant(format!("identity of summand {} is null-homotopic", cat.label(summands[i]))));
        }
        Self::from_products(dims, |i, j, k, a, b| {
            let f = compose(alg, &bases[i][j][a], &bases[j][k][b])?;
            let mut c = spaces[i][k].coordinates(alg, &f);
            if i == k {
                c[0] /= &id_scale[i];
            }
            Ok(c)
        })
    }

    /// `KQ / ⟨zero_paths⟩` for paths given as arrow-index sequences; the
    /// basis of `e(i)Be(j)` is the paths from `i` to `j` avoiding them.
    pub fn monomial(alg: &PathAlgebra, zero_paths: &[Vec<usize>]) -> Result<Self> {
        let q = alg.quiver();
        let n = q.vertex_count();
        let survives = |p: usize| {
            let arrows = &alg.path(p).arrows;
            !zero_paths.iter().any(|z| !z.is_empty() && arrows.windows(z.len()).any(|w| w == z.as_slice()))
        };
        let basis: Vec<Vec<Vec<usize>>> = (0..n)
            .map(|i| (0..n).map(|j| alg.paths_between(i, j).iter().copied().filter(|&p| survives(p)).collect()).collect())
            .collect();
        let dims = basis.iter().map(|row| row.iter().map(Vec::len).collect()).collect();
        Self::from_products(dims, |i, j, k, a, b| {
            let mut v = vec![Rational::zero(); basis[i][k].len()];
            let p = alg.mul(basis[i][j][a], basis[j][k][b]).expect("composable");
            if let Some(pos) = basis[i][k].iter().position(|&x| x == p) {
                v[pos] = Rational::one();
            }
            Ok(v)
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// `dim e(i) B e(j)`.
    pub fn dim(&self, i: usize, j: usize) -> usize {
        self.dims[i][j]
    }

    pub fn dims(&self) -> &[Vec<usize>] {
        &self.dims
    }

    pub fn total_dimension(&self) -> usize {
        self.dims.iter().flatten().sum()
    }

    /// Coordinates of `basis_ij[a] · basis_jk[b]`.
    pub fn product(&self, i: usize, j: usize, k: usize, a: usize, b: usize) -> &[Rational] {
        &self.products[(i * self.n + j) * self.n + k][a * self.dims[j][k] + b]
    }

    /// Bilinear extension of [`product`](Self::product).
    pub fn mul(&self, i: usize, j: usize, k: usize, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dims[i][k]];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let c = xa * yb;
                for (o, p) in out.iter_mut().zip(self.product(i, j, k, a, b)) {
                    if !p.is_zero() {
                        *o += &c * p;
                    }
                }
            }
        }
        out
    }

    /// `(xy)z = x(yz)` on all basis triples.
    pub fn is_associative(&self) -> bool {
        let n = self.n;
        let unit = |len: usize, k: usize| {
            let mut v = vec![Rational::zero(); len];
            v[k] = Rational::one();
            v
        };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        for a in 0..self.dims[i][j] {
                            for b in 0..self.dims[j][k] {
                                for c in 0..self.dims[k][l] {
                                    let x = unit(self.dims[i][j], a);
                                    let y = unit(self.dims[j][k], b);
                                    let z = unit(self.dims[k][l], c);
                                    let left = self.mul(i, k, l, &self.mul(i, j, k, &x, &y), &z);
                                    let right = self.mul(i, j, l, &x, &self.mul(j, k, l, &y, &z));
                                    if left != right {
                                        return false;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// The idempotent subalgebra `eBe` for `e = Σ_{v ∈ vertices} e(v)`.
    pub fn restrict(&self, vertices: &[usize]) -> FinAlgebra {
        let m = vertices.len();
        let dims: Vec<Vec<usize>> =
            vertices.iter().map(|&i| vertices.iter().map(|&j| self.dims[i][j]).collect()).collect();
        let mut products = Vec::with_capacity(m * m * m);
        for &i in vertices {
            for &j in vertices {
                for &k in vertices {
                    products.push(self.products[(i * self.n + j) * self.n + k].clone());
                }
            }
        }
        FinAlgebra { n: m, dims, products }
    }

    /// The span of all products through a third vertex, i.e. `rad²` inside
    /// `e(i)Be(j)` for `i ≠ j`.
    pub fn radical_square(&self, i: usize, j: usize) -> RowEchelon {
        let mut span = RowEchelon::new(self.dims[i][j]);
        for k in (0..self.n).filter(|&k| k != i && k != j) {
            for a in 0..self.dims[i][k] {
                for b in 0..self.dims[k][j] {
                    span.insert(self.product(i, k, j, a, b));
                }
            }
        }
        span
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::parse_quiver;

    #[test]
    fn monomial_quotient_of_a3() {
        let q = parse_quiver("vertices 1 2 3; arrows a:1->2 b:2->3").unwrap();
        let alg = PathAlgebra::new(&q);
        let free = FinAlgebra::monomial(&alg, &[]).unwrap();
        assert_eq!(free.total_dimension(), 6);
        assert!(free.is_associative());
        let bound = FinAlgebra::monomial(&alg, &[vec![0, 1]]).unwrap();
        assert_eq!(bound.total_dimension(), 5);
        assert_eq!(bound.dim(0, 2), 0);
        assert_eq!(bound.radical_square(0, 2).dim(), 0);
        assert_eq!(free.radical_square(0, 2).dim(), 1);
        assert_eq!(bound.restrict(&[0, 1]).total_dimension(), 3);
    }
}
