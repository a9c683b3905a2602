use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;

use crate::linalg::Rational;

use super::Quiver;

/// A path written left to right; the empty arrow list is the lazy path `e(source)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn lazy(v: usize) -> Self {
        Self { source: v, target: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_lazy(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Same as [`is_lazy`](Self::is_lazy): a lazy path has no arrows.
    pub fn is_empty(&self) -> bool {
        self.is_lazy()
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", q.label(self.source))
        } else {
            self.arrows.iter().map(|&a| q.arrow(a).id.as_str()).collect::<Vec<_>>().join("")
        }
    }
}

/// All paths of an acyclic quiver, ordered by source, then length, then the
/// sequence of arrow ids.
pub fn path_basis(q: &Quiver) -> Vec<Path> {
    let mut out = Vec::new();
    for v in 0..q.vertex_count() {
        let mut layer = vec![Path::lazy(v)];
        while !layer.is_empty() {
            layer.sort_by(|a, b| arrow_ids(q, a).cmp(&arrow_ids(q, b)));
            let mut next = Vec::new();
            for p in &layer {
                for a in q.outgoing(p.target) {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    next.push(Path { source: v, target: q.arrow(a).target, arrows });
                }
            }
            out.append(&mut layer);
            layer = next;
        }
    }
    out
}

fn arrow_ids<'a>(q: &'a Quiver, p: &Path) -> Vec<&'a str> {
    p.arrows.iter().map(|&a| q.arrow(a).id.as_str()).collect()
}

/// The path algebra `KQ` with a fixed basis of paths and a precomputed
/// concatenation table.
#[derive(Clone, Debug)]
pub struct PathAlgebra {
    quiver: Quiver,
    paths: Vec<Path>,
    between: Vec<Vec<Vec<usize>>>,
    index: HashMap<(usize, Vec<usize>), usize>,
    product: Vec<Option<usize>>,
}

impl PathAlgebra {
    pub fn new(quiver: &Quiver) -> Self {
        let paths = path_basis(quiver);
        let n = quiver.vertex_count();
        let mut between = vec![vec![Vec::new(); n]; n];
        let mut index = HashMap::new();
        for (k, p) in paths.iter().enumerate() {
            between[p.source][p.target].push(k);
            index.insert((p.source, p.arrows.clone()), k);
        }
        let np = paths.len();
        let mut product = vec![None; np * np];
        for (i, p) in paths.iter().enumerate() {
            for (j, r) in paths.iter().enumerate() {
                if p.target != r.source {
                    continue;
                }
                let mut arrows = p.arrows.clone();
                arrows.extend_from_slice(&r.arrows);
                product[i * np + j] = index.get(&(p.source, arrows)).copied();
            }
        }
        Self { quiver: quiver.clone(), paths, between, index, product }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dimension(&self) -> usize {
        self.paths.len()
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn path(&self, k: usize) -> &Path {
        &self.paths[k]
    }

    /// Indices of the paths from `i` to `j`, i.e. a basis of `e(i) A e(j)`.
    pub fn paths_between(&self, i: usize, j: usize) -> &[usize] {
        &self.between[i][j]
    }

    pub fn lazy(&self, v: usize) -> usize {
        self.index[&(v, Vec::new())]
    }

    pub fn arrow_path(&self, a: usize) -> usize {
        self.index[&(self.quiver.arrow(a).source, vec![a])]
    }

    /// Concatenation `p` then `r`; `None` when the endpoints do not match.
    pub fn mul(&self, p: usize, r: usize) -> Option<usize> {
        self.product[p * self.paths.len() + r]
    }

    /// Number of paths from `i` to `j`.
    pub fn count(&self, i: usize, j: usize) -> usize {
        self.between[i][j].len()
    }
}

/// A rational linear combination of paths sharing one source and one target.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathVector {
    pub source: usize,
    pub target: usize,
    terms: Vec<(usize, Rational)>,
}

impl PathVector {
    pub fn zero(source: usize, target: usize) -> Self {
        Self { source, target, terms: Vec::new() }
    }

    pub fn from_path(alg: &PathAlgebra, p: usize) -> Self {
        Self::from_terms(alg, alg.path(p).source, alg.path(p).target, vec![(p, Rational::from_integer(1.into()))])
    }

    pub fn from_terms(alg: &PathAlgebra, source: usize, target: usize, terms: Vec<(usize, Rational)>) -> Self {
        let mut v = Self::zero(source, target);
        for (p, c) in terms {
            debug_assert_eq!((alg.path(p).source, alg.path(p).target), (source, target));
            v.add_term(p, c);
        }
        v
    }

    pub fn terms(&self) -> &[(usize, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: usize) -> Rational {
        self.terms
            .iter()
            .find(|(q, _)| *q == p)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, p: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.binary_search_by_key(&p, |(q, _)| *q) {
            Ok(k) => {
                self.terms[k].1 += c;
                if self.terms[k].1.is_zero() {
                    self.terms.remove(k);
                }
            }
            Err(k) => self.terms.insert(k, (p, c)),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!((self.source, self.target), (other.source, other.target));
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(*p, c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = Self::zero(self.source, self.target);
        for (p, c) in &self.terms {
            out.add_term(*p, c * k);
        }
        out
    }

    /// Product `self · other` in the path algebra (self's paths first).
    pub fn mul(&self, alg: &PathAlgebra, other: &Self) -> Self {
        assert_eq!(self.target, other.source, "path vectors do not compose");
        let mut out = Self::zero(self.source, other.target);
        for (p, c) in &self.terms {
            for (r, d) in &other.terms {
                let pr = alg.mul(*p, *r).expect("composable paths concatenate");
                out.add_term(pr, c * d);
            }
        }
        out
    }

    pub fn display(&self, alg: &PathAlgebra) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (p, c)) in self.terms.iter().enumerate() {
            let name = alg.path(*p).display(alg.quiver());
            let one = Rational::from_integer(1.into());
            match c {
                c if *c == one => {
                    if k > 0 {
                        s.push('+');
                    }
                }
                c if *c == -one.clone() => s.push('-'),
                c => {
                    if k > 0 && *c > Rational::zero() {
                        s.push('+');
                    }
                    s.push_str(&format!("{c}*"));
                }
            }
            s.push_str(&name);
        }
        s
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{} {:?}", self.source, self.target, self.arrows)
    }
}
