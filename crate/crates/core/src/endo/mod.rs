//! Endomorphism algebras of 2-term silting complexes presented as bound
//! quiver algebras `KΓ / I`.
//!
//! Vertex `i` of the Gabriel quiver `Γ` is the `i`-th summand of the silting
//! object; arrows `i → j` form a basis of a complement of `rad²` in
//! `e(i)Be(j) = Hom(T_j, T_i)`, so a path `i → j` in `Γ` evaluates to an
//! element of `e(i)Be(j)` exactly as paths do in `KQ`.

mod algebra;

use std::fmt::Write as _;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::complex::TwoTermCategory;
use crate::error::{Error, Result};
use crate::linalg::{extend_basis, rat, RatMatrix, Rational, RowEchelon};
use crate::quiver::{coxeter_polynomial, PathAlgebra, PathVector, Quiver};
use crate::silting::SiltingObject;

pub use algebra::FinAlgebra;

/// `B = KΓ/I` together with the structure constants it was computed from.
#[derive(Clone, Debug)]
pub struct BoundQuiverAlgebra {
    algebra: FinAlgebra,
    gabriel: Quiver,
    paths: PathAlgebra,
    relations: Vec<PathVector>,
}

fn arrow_name(k: usize) -> String {
    const LETTERS: &[u8] = b"abcdefghijklmnopqrstuvwxyz";
    match LETTERS.get(k) {
        Some(&c) => (c as char).to_string(),
        None => format!("x{k}"),
    }
}

fn unit(len: usize, k: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); len];
    v[k] = rat(1);
    v
}

/// `End(T)` for a silting object, with the summands in
/// [`SiltingObject::summands`] order.
pub fn endomorphism_algebra(cat: &TwoTermCategory, t: &SiltingObject) -> Result<BoundQuiverAlgebra> {
    crate::silting::verify_silting(cat, t)?;
    let idx = t.indices(cat)?;
    BoundQuiverAlgebra::new(FinAlgebra::endomorphism_algebra(cat, &idx)?)
}

impl BoundQuiverAlgebra {
    pub fn new(algebra: FinAlgebra) -> Result<Self> {
        let n = algebra.vertex_count();

        // Arrows: standard basis vectors completing rad² in each component.
        let mut arrow_specs: Vec<(usize, usize, Vec<Rational>)> = Vec::new();
        for i in 0..n {
            for j in (0..n).filter(|&j| j != i) {
                let d = algebra.dim(i, j);
                if d == 0 {
                    continue;
                }
                let rad2 = algebra.radical_square(i, j);
                let cands: Vec<Vec<Rational>> = (0..d).map(|k| unit(d, k)).collect();
                for k in extend_basis(&rad2, &cands) {
                    arrow_specs.push((i, j, cands[k].clone()));
                }
            }
        }
        let labels: Vec<i64> = (1..=n as i64).collect();
        let gabriel = Quiver::new(
            labels.clone(),
            arrow_specs
                .iter()
                .enumerate()
                .map(|(k, (s, t, _))| (arrow_name(k), labels[*s], labels[*t]))
                .collect(),
        )?;
        let paths = PathAlgebra::new(&gabriel);

        // Evaluate every path of Γ in B.
        let values: Vec<Vec<Rational>> = paths
            .paths()
            .iter()
            .map(|p| {
                let mut cur = unit(1, 0);
                let mut at = p.source;
                for &a in &p.arrows {
                    let (s, t, ref elem) = arrow_specs[a];
                    debug_assert_eq!(s, at);
                    cur = algebra.mul(p.source, s, t, &cur, elem);
                    at = t;
                }
                cur
            })
            .collect();

        // Kernel of KΓ → B component by component.
        let mut ideal: Vec<Vec<RowEchelon>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let ps = paths.paths_between(i, j);
                let evals: Vec<Vec<Rational>> = ps.iter().map(|&p| values[p].clone()).collect();
                let m = RatMatrix::from_rows(algebra.dim(i, j), evals);
                if m.rank() != algebra.dim(i, j) {
                    return Err(Error::Invariant(format!("arrows do not generate e{i}·B·e{j}")));
                }
                row.push(RowEchelon::from_vectors(ps.len(), &m.transpose().kernel_vectors()));
            }
            ideal.push(row);
        }

        // Minimal generators: I modulo (JI + IJ).
        let mut relations = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if ideal[i][j].dim() == 0 {
                    continue;
                }
                let target = paths.paths_between(i, j);
                let pos = |p: usize| target.iter().position(|&x| x == p).expect("path in basis");
                let mut lower = RowEchelon::new(target.len());
                for a in 0..gabriel.arrows().len() {
                    let arr = gabriel.arrow(a);
                    let ap = paths.arrow_path(a);
                    if arr.source == i {
                        let from = paths.paths_between(arr.target, j);
                        for r in ideal[arr.target][j].rows() {
                            let mut v = vec![Rational::zero(); target.len()];
                            for (x, &p) in r.iter().zip(from) {
                                if !x.is_zero() {
                                    v[pos(paths.mul(ap, p).expect("composable"))] += x;
                                }
                            }
                            lower.insert(&v);
                        }
                    }
                    if arr.target == j {
                        let from = paths.paths_between(i, arr.source);
                        for r in ideal[i][arr.source].rows() {
                            let mut v = vec![Rational::zero(); target.len()];
                            for (x, &p) in r.iter().zip(from) {
                                if !x.is_zero() {
                                    v[pos(paths.mul(p, ap).expect("composable"))] += x;
                                }
                            }
                            lower.insert(&v);
                        }
                    }
                }
                let rows = ideal[i][j].rows();
                for k in extend_basis(&lower, rows) {
                    let terms = rows[k]
                        .iter()
                        .zip(target)
                        .filter(|(x, _)| !x.is_zero())
                        .map(|(x, &p)| (p, x.clone()))
                        .collect();
                    relations.push(PathVector::from_terms(&paths, i, j, terms));
                }
            }
        }
        Ok(Self { algebra, gabriel, paths, relations })
    }

    pub fn algebra(&self) -> &FinAlgebra {
        &self.algebra
    }

    pub fn gabriel_quiver(&self) -> &Quiver {
        &self.gabriel
    }

    pub fn path_algebra(&self) -> &PathAlgebra {
        &self.paths
    }

    pub fn relations(&self) -> &[PathVector] {
        &self.relations
    }

    pub fn vertex_count(&self) -> usize {
        self.algebra.vertex_count()
    }

    pub fn dimension(&self) -> usize {
        self.algebra.total_dimension()
    }

    /// `C(i, j) = dim e(i) B e(j)`.
    pub fn cartan(&self) -> Vec<Vec<usize>> {
        self.algebra.dims().to_vec()
    }

    /// Number of arrows `i → j` of the Gabriel quiver.
    pub fn arrow_counts(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut m = vec![vec![0; n]; n];
        for a in self.gabriel.arrows() {
            m[a.source][a.target] += 1;
        }
        m
    }

    /// Number of minimal relations from `i` to `j`.
    pub fn relation_counts(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut m = vec![vec![0; n]; n];
        for r in &self.relations {
            m[r.source][r.target] += 1;
        }
        m
    }

    /// Characteristic polynomial of `−C⁻ᵀC`, ascending coefficients.
    pub fn coxeter_polynomial(&self) -> Result<Vec<i64>> {
        let n = self.vertex_count();
        let flat: Vec<i64> = self.algebra.dims().iter().flatten().map(|&x| x as i64).collect();
        coxeter_polynomial(&RatMatrix::from_ints(n, n, &flat))
    }

    /// Vertex sets of the connected components of the Gabriel quiver.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.gabriel.components()
    }

    /// The block on `vertices` as an algebra of its own.
    pub fn block(&self, vertices: &[usize]) -> Result<BoundQuiverAlgebra> {
        BoundQuiverAlgebra::new(self.algebra.restrict(vertices))
    }

    pub fn relation_strings(&self) -> Vec<String> {
        self.relations.iter().map(|r| r.display(&self.paths)).collect()
    }

    /// `{vertices, arrows, relations, dimension}`; a relation is a list of
    /// `[coefficient, [arrow ids]]` terms.
    pub fn to_json(&self) -> Value {
        let q = &self.gabriel;
        json!({
            "vertices": q.labels(),
            "arrows": q.arrows().iter().map(|a| json!({
                "id": a.id,
                "source": q.label(a.source),
                "target": q.label(a.target),
            })).collect::<Vec<_>>(),
            "relations": self.relations.iter().map(|r| {
                r.terms().iter().map(|(p, c)| json!([
                    c.to_string(),
                    self.paths.path(*p).arrows.iter().map(|&a| q.arrow(a).id.clone()).collect::<Vec<_>>(),
                ])).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
            "dimension": self.dimension(),
        })
    }

    /// Graphviz rendering; every relation is drawn as a dotted edge from its
    /// source to its target vertex.
    pub fn to_dot(&self) -> String {
        let q = &self.gabriel;
        let mut s = String::from("digraph algebra {\n  rankdir=LR;\n");
        for v in 0..q.vertex_count() {
            let _ = writeln!(s, "  v{} [label=\"{}\"];", v, q.label(v));
        }
        for a in q.arrows() {
            let _ = writeln!(s, "  v{} -> v{} [label=\"{}\"];", a.source, a.target, a.id);
        }
        for r in &self.relations {
            let _ = writeln!(
                s,
                "  v{} -> v{} [style=dotted, arrowhead=none, label=\"{}\"];",
                r.source,
                r.target,
                r.display(&self.paths)
            );
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::parse_quiver;

    #[test]
    fn path_algebra_is_its_own_presentation() {
        let q = parse_quiver("vertices 1 2 3; arrows a:1->2 b:2->3").unwrap();
        let b = BoundQuiverAlgebra::new(FinAlgebra::monomial(&PathAlgebra::new(&q), &[]).unwrap()).unwrap();
        assert_eq!(b.gabriel_quiver().arrows().len(), 2);
        assert!(b.relations().is_empty());
        assert_eq!(b.dimension(), 6);
        assert_eq!(b.coxeter_polynomial().unwrap(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn zero_relation_is_recovered() {
        let q = parse_quiver("vertices 1 2 3; arrows a:1->2 b:2->3").unwrap();
        let b = BoundQuiverAlgebra::new(FinAlgebra::monomial(&PathAlgebra::new(&q), &[vec![0, 1]]).unwrap()).unwrap();
        assert_eq!(b.relation_strings(), vec!["ab"]);
        assert_eq!(b.relation_counts()[0][2], 1);
    }

    #[test]
    fn small_coxeter_polynomials() {
        let k = parse_quiver("vertices 1").unwrap();
        let b = BoundQuiverAlgebra::new(FinAlgebra::monomial(&PathAlgebra::new(&k), &[]).unwrap()).unwrap();
        assert_eq!(b.coxeter_polynomial().unwrap(), vec![1, 1]);
        let a2 = parse_quiver("vertices 1 2; arrows a:1->2").unwrap();
        let b = BoundQuiverAlgebra::new(FinAlgebra::monomial(&PathAlgebra::new(&a2), &[]).unwrap()).unwrap();
        assert_eq!(b.coxeter_polynomial().unwrap(), vec![1, 1, 1]);
    }
}
