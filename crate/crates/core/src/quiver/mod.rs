//! Quivers, their path algebras, and the bilinear data attached to them.
//!
//! Conventions: vertices are addressed internally by position (`usize`) in
//! the order they were declared; labels are only used for I/O. Paths are
//! written left to right along arrows, so a path `p` from `i` to `j` satisfies
//! `p = e(i)·p·e(j)`, and `Hom(P(i), P(j))` is spanned by the paths from `j`
//! to `i` (a map is left multiplication by such a path).

mod dynkin;
mod forms;
mod parse;
mod paths;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use dynkin::{dynkin_type, DynkinType, Family};
pub use forms::{cartan_matrix, coxeter_matrix, coxeter_polynomial, euler_form};
pub use parse::parse_quiver;
pub use paths::{path_basis, Path, PathAlgebra, PathVector};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

/// A finite acyclic quiver.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    labels: Vec<i64>,
    arrows: Vec<Arrow>,
}

/// Vertex-indexed tuple of non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(pub Vec<u32>);

impl DimVector {
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Self(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &x)| x > 0).map(|(i, _)| i)
    }
}

impl std::ops::Index<usize> for DimVector {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct QuiverJson {
    vertices: Vec<i64>,
    arrows: Vec<ArrowJson>,
}

#[derive(Serialize, Deserialize)]
struct ArrowJson {
    id: String,
    source: i64,
    target: i64,
}

impl Quiver {
    /// Builds a quiver from labels and `(id, source label, target label)` triples.
    pub fn new(labels: Vec<i64>, arrows: Vec<(String, i64, i64)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &l in &labels {
            if !seen.insert(l) {
                return Err(Error::DuplicateVertex(l));
            }
        }
        let mut ids = BTreeSet::new();
        let mut out = Vec::with_capacity(arrows.len());
        for (id, s, t) in arrows {
            if !ids.insert(id.clone()) {
                return Err(Error::DuplicateArrow(id));
            }
            let find = |v: i64| {
                labels
                    .iter()
                    .position(|&l| l == v)
                    .ok_or_else(|| Error::UnknownVertex { arrow: id.clone(), vertex: v })
            };
            let (source, target) = (find(s)?, find(t)?);
            out.push(Arrow { id, source, target });
        }
        let q = Self { labels, arrows: out };
        q.topological_order()?;
        Ok(q)
    }

    pub fn empty() -> Self {
        Self { labels: Vec::new(), arrows: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> i64 {
        self.labels[v]
    }

    pub fn index_of(&self, label: i64) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn outgoing(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.source == v).map(|(k, _)| k)
    }

    pub fn incoming(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.target == v).map(|(k, _)| k)
    }

    /// Vertices ordered so that every arrow points forward; fails on a cycle.
    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let n = self.vertex_count();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for a in self.outgoing(v) {
                let t = self.arrows[a].target;
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    queue.push_back(t);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&v| indeg[v] > 0).unwrap_or(0);
            return Err(Error::Cycle(self.labels[stuck]));
        }
        Ok(order)
    }

    /// Same vertices, every arrow reversed.
    pub fn opposite(&self) -> Self {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { id: a.id.clone(), source: a.target, target: a.source })
            .collect();
        Self { labels: self.labels.clone(), arrows }
    }

    /// Full subquiver on the vertices with `keep[v]`, plus the map from new
    /// vertex positions to old ones.
    pub fn full_subquiver(&self, keep: &[bool]) -> (Self, Vec<usize>) {
        let old: Vec<usize> = (0..self.vertex_count()).filter(|&v| keep[v]).collect();
        let mut new_of = vec![usize::MAX; self.vertex_count()];
        for (k, &v) in old.iter().enumerate() {
            new_of[v] = k;
        }
        let arrows = self
            .arrows
            .iter()
            .filter(|a| keep[a.source] && keep[a.target])
            .map(|a| Arrow { id: a.id.clone(), source: new_of[a.source], target: new_of[a.target] })
            .collect();
        let labels = old.iter().map(|&v| self.labels[v]).collect();
        (Self { labels, arrows }, old)
    }

    /// Connected components of the underlying graph, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut k = 0;
            while k < members.len() {
                let v = members[k];
                k += 1;
                for a in &self.arrows {
                    let w = if a.source == v {
                        a.target
                    } else if a.target == v {
                        a.source
                    } else {
                        continue;
                    };
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Serializes to the line-based quiver file format.
    pub fn to_text(&self) -> String {
        let mut s = String::from("vertices");
        for l in &self.labels {
            s.push_str(&format!(" {l}"));
        }
        s.push('\n');
        for a in &self.arrows {
            s.push_str(&format!(
                "arrow {}:{}->{}\n",
                a.id, self.labels[a.source], self.labels[a.target]
            ));
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let q = QuiverJson {
            vertices: self.labels.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowJson {
                    id: a.id.clone(),
                    source: self.labels[a.source],
                    target: self.labels[a.target],
                })
                .collect(),
        };
        serde_json::to_value(q).expect("quiver serializes")
    }

    pub(crate) fn from_json_str(text: &str) -> Result<Self> {
        let q: QuiverJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        Self::new(q.vertices, q.arrows.into_iter().map(|a| (a.id, a.source, a.target)).collect())
    }

    /// Compact one-line sketch, e.g. `1->2 3<-4`.
    pub fn sketch(&self) -> String {
        if self.vertex_count() == 0 {
            return "∅".into();
        }
        let mut parts = Vec::new();
        for comp in self.components() {
            let mut edges: Vec<String> = self
                .arrows
                .iter()
                .filter(|a| comp.contains(&a.source))
                .map(|a| format!("{}->{}", self.labels[a.source], self.labels[a.target]))
                .collect();
            if edges.is_empty() {
                edges.push(self.labels[comp[0]].to_string());
            }
            parts.push(edges.join(","));
        }
        parts.join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Quiver {
        Quiver::new(vec![1, 2], vec![("a".into(), 1, 2)]).unwrap()
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(Quiver::new(vec![1], vec![("a".into(), 1, 1)]), Err(Error::Cycle(1)));
        assert_eq!(Quiver::new(vec![1, 1], vec![]), Err(Error::DuplicateVertex(1)));
        assert!(matches!(
            Quiver::new(vec![1, 2], vec![("a".into(), 1, 2), ("a".into(), 2, 1)]),
            Err(Error::DuplicateArrow(_))
        ));
        assert!(matches!(
            Quiver::new(vec![1], vec![("a".into(), 1, 5)]),
            Err(Error::UnknownVertex { vertex: 5, .. })
        ));
    }

    #[test]
    fn opposite_is_an_involution() {
        let q = a2();
        let op = q.opposite();
        assert_eq!(op.arrow(0).source, 1);
        assert_eq!(op.arrow(0).target, 0);
        assert_eq!(op.opposite(), q);
    }

    #[test]
    fn full_subquiver_drops_arrows() {
        let q = Quiver::new(vec![1, 2, 3], vec![("a".into(), 1, 2), ("b".into(), 2, 3)]).unwrap();
        let (sub, old) = q.full_subquiver(&[true, false, true]);
        assert_eq!(sub.labels(), &[1, 3]);
        assert!(sub.arrows().is_empty());
        assert_eq!(old, vec![0, 2]);
        assert_eq!(sub.components().len(), 2);
    }
}
