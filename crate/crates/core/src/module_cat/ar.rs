use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::RowEchelon;
use crate::quiver::{DimVector, Quiver};

use super::rep::{hom_basis, RepMorphism};
use super::ModuleCategory;

/// A vertex of the AR quiver of the 2-term silting category: an
/// indecomposable module in degree 0, or a shifted projective `P(i)[1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IndecomposableId {
    Module(DimVector),
    Shifted(usize),
}

impl IndecomposableId {
    pub fn is_shifted(&self) -> bool {
        matches!(self, IndecomposableId::Shifted(_))
    }

    pub fn to_json(&self, q: &Quiver) -> Value {
        match self {
            IndecomposableId::Module(d) => json!({ "module": d.0 }),
            IndecomposableId::Shifted(i) => json!({ "shifted": q.label(*i) }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArVertex {
    pub id: IndecomposableId,
    /// Compact label: the dimension vector digits, with `[1]` on shifts.
    pub label: String,
    pub slice: i64,
    pub row: usize,
}

/// Vertices, irreducible-map arrows `(from, to, multiplicity)` and
/// translation pairs `(X, τX)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArQuiver {
    pub vertices: Vec<ArVertex>,
    pub arrows: Vec<(usize, usize, usize)>,
    pub tau: Vec<(usize, usize)>,
}

fn compact(d: &DimVector) -> String {
    d.0.iter().map(|x| x.to_string()).collect()
}

/// Irreducible maps `M → N` counted as `dim rad(M,N) / rad²(M,N)`, where
/// `rad²` is spanned by composites through the other indecomposables.
fn irreducible_arrows(cat: &ModuleCategory) -> Result<Vec<(usize, usize, usize)>> {
    let q = cat.quiver();
    let n = cat.len();
    let mut bases: Vec<Vec<Vec<RepMorphism>>> = vec![vec![Vec::new(); n]; n];
    for (a, row) in bases.iter_mut().enumerate() {
        for (b, cell) in row.iter_mut().enumerate() {
            if a != b {
                *cell = hom_basis(q, &cat.module(a).rep, &cat.module(b).rep);
            }
        }
    }
    let mut arrows = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a == b || bases[a][b].is_empty() {
                continue;
            }
            let width = bases[a][b][0].flatten().len();
            let mut rad2 = RowEchelon::new(width);
            for x in (0..n).filter(|&x| x != a && x != b) {
                for g in &bases[a][x] {
                    for h in &bases[x][b] {
                        rad2.insert(&g.then(h).flatten());
                    }
                }
            }
            let mult = bases[a][b].len() - rad2.dim();
            if mult > 1 {
                return Err(Error::Invariant(format!(
                    "{} irreducible maps between {} and {}",
                    mult,
                    cat.module(a).dim,
                    cat.module(b).dim
                )));
            }
            if mult == 1 {
                arrows.push((a, b, 1));
            }
        }
    }
    Ok(arrows)
}

impl ArQuiver {
    /// AR quiver of `mod KQ` from the knitted category.
    pub fn for_modules(cat: &ModuleCategory) -> Result<Self> {
        let vertices = cat
            .modules()
            .iter()
            .enumerate()
            .map(|(k, m)| ArVertex {
                id: IndecomposableId::Module(m.dim.clone()),
                label: compact(&m.dim),
                slice: cat.slice(k),
                row: m.orbit,
            })
            .collect();
        let arrows = irreducible_arrows(cat)?;
        let tau = (0..cat.len()).filter_map(|k| cat.tau(k).map(|t| (k, t))).collect();
        Ok(Self { vertices, arrows, tau })
    }

    /// AR quiver of the 2-term silting category: `mod KQ` extended by
    /// `P(i)[1] = τ⁻¹ I(i)`. The new arrows follow the mesh relations: the
    /// predecessors of `P(i)[1]` are exactly the successors of `I(i)`.
    pub fn two_term(cat: &ModuleCategory) -> Result<Self> {
        let mut ar = Self::for_modules(cat)?;
        let q = cat.quiver();
        let n = q.vertex_count();
        let mut shifted: Vec<usize> = (0..n).collect();
        shifted.sort_by_key(|&i| (cat.slice(cat.injective(i)), cat.module(cat.injective(i)).orbit));
        for i in shifted {
            let inj = cat.injective(i);
            let z = ar.vertices.len();
            let p = &cat.module(cat.projective(i)).dim;
            ar.vertices.push(ArVertex {
                id: IndecomposableId::Shifted(i),
                label: format!("{}[1]", compact(p)),
                slice: cat.slice(inj) + 2,
                row: cat.module(inj).orbit,
            });
            let succ: Vec<(usize, usize)> =
                ar.arrows.iter().filter(|a| a.0 == inj).map(|a| (a.1, a.2)).collect();
            for (y, m) in succ {
                ar.arrows.push((y, z, m));
            }
            ar.tau.push((z, inj));
        }
        ar.arrows.sort_unstable();
        Ok(ar)
    }

    pub fn index_of(&self, id: &IndecomposableId) -> Option<usize> {
        self.vertices.iter().position(|v| &v.id == id)
    }

    pub fn to_json(&self, q: &Quiver) -> Value {
        json!({
            "vertices": self.vertices.iter().map(|v| json!({
                "id": v.id.to_json(q),
                "label": v.label,
                "slice": v.slice,
                "row": v.row,
            })).collect::<Vec<_>>(),
            "arrows": self.arrows.iter().map(|&(a, b, m)| json!({
                "from": a, "to": b, "multiplicity": m,
            })).collect::<Vec<_>>(),
            "tau": self.tau.iter().map(|&(x, t)| json!([x, t])).collect::<Vec<_>>(),
        })
    }

    /// Graphviz rendering; translation pairs are drawn dashed.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph ar {\n  rankdir=LR;\n  node [shape=plaintext];\n");
        for (k, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(s, "  v{k} [label=\"{}\", pos=\"{},{}!\"];", v.label, v.slice, -(v.row as i64));
        }
        for &(a, b, m) in &self.arrows {
            let extra = if m > 1 { format!(" [label=\"{m}\"]") } else { String::new() };
            let _ = writeln!(s, "  v{a} -> v{b}{extra};");
        }
        for &(x, t) in &self.tau {
            let _ = writeln!(s, "  v{x} -> v{t} [style=dashed, dir=none, constraint=false];");
        }
        s.push_str("}\n");
        s
    }

    /// Text grid with one line per τ-orbit and one column per slice. With
    /// `marked = None` every cell shows its label; otherwise marked vertices
    /// are drawn `•` and the rest `∘`.
    pub fn to_ascii(&self, marked: Option<&BTreeSet<usize>>) -> String {
        if self.vertices.is_empty() {
            return String::new();
        }
        let rows = self.vertices.iter().map(|v| v.row).max().unwrap_or(0) + 1;
        let lo = self.vertices.iter().map(|v| v.slice).min().unwrap_or(0);
        let hi = self.vertices.iter().map(|v| v.slice).max().unwrap_or(0);
        let cell: BTreeMap<(usize, i64), usize> =
            self.vertices.iter().enumerate().map(|(k, v)| ((v.row, v.slice), k)).collect();
        let width = match marked {
            None => self.vertices.iter().map(|v| v.label.chars().count()).max().unwrap_or(1),
            Some(_) => 1,
        };
        let mut out = String::new();
        for r in 0..rows {
            let mut line = String::new();
            for c in lo..=hi {
                let text = match (cell.get(&(r, c)), marked) {
                    (None, _) => String::new(),
                    (Some(&k), None) => self.vertices[k].label.clone(),
                    (Some(&k), Some(m)) => if m.contains(&k) { "•" } else { "∘" }.to_string(),
                };
                let pad = width - text.chars().count();
                line.push_str(&text);
                line.push_str(&" ".repeat(pad + 1));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

pub fn ar_quiver_mod(q: &Quiver) -> Result<ArQuiver> {
    ArQuiver::for_modules(&ModuleCategory::new(q)?)
}

pub fn ar_quiver_two_term(q: &Quiver) -> Result<ArQuiver> {
    ArQuiver::two_term(&ModuleCategory::new(q)?)
}
