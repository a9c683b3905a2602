use crate::error::{Error, Result};
use crate::linalg::{rat, to_i64, RatMatrix};

use super::{DimVector, PathAlgebra, Quiver};

/// Euler form `<d,e> = Σ d_i e_i − Σ_{α:i→j} d_i e_j`.
pub fn euler_form(q: &Quiver, d: &DimVector, e: &DimVector) -> i64 {
    let n = q.vertex_count();
    assert_eq!(d.len(), n);
    assert_eq!(e.len(), n);
    let diag: i64 = (0..n).map(|i| d[i] as i64 * e[i] as i64).sum();
    let off: i64 = q.arrows().iter().map(|a| d[a.source] as i64 * e[a.target] as i64).sum();
    diag - off
}

/// Cartan matrix of `KQ`: entry `(i, j)` counts the paths from `i` to `j`,
/// so row `i` is the dimension vector of `P(i)` and column `j` that of `I(j)`.
pub fn cartan_matrix(q: &Quiver) -> RatMatrix {
    let alg = PathAlgebra::new(q);
    let n = q.vertex_count();
    let mut c = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            c.set(i, j, rat(alg.count(i, j) as i64));
        }
    }
    c
}

/// Coxeter matrix `Φ = −C⁻¹Cᵀ` acting on row vectors: for an indecomposable
/// non-projective module `M`, `dim τM = dim M · Φ`.
pub fn coxeter_matrix(q: &Quiver) -> RatMatrix {
    let c = cartan_matrix(q);
    let inv = c.inverse().expect("Cartan matrix of an acyclic quiver is unitriangular");
    (&inv * &c.transpose()).scale(&rat(-1))
}

/// Coxeter polynomial of an algebra with Cartan matrix `c`: the
/// characteristic polynomial of `−C⁻ᵀC`, ascending integer coefficients.
pub fn coxeter_polynomial(c: &RatMatrix) -> Result<Vec<i64>> {
    let inv_t = c.inverse().ok_or(Error::SingularCartan)?.transpose();
    let phi = (&inv_t * c).scale(&rat(-1));
    phi.charpoly()
        .iter()
        .map(|x| to_i64(x).ok_or_else(|| Error::Invariant("non-integral Coxeter polynomial".into())))
        .collect()
}
