use crate::endo::BoundQuiverAlgebra;
use crate::linalg::RowEchelon;

use super::resolution::Homology;

/// An isomorphism invariant of a basic directed algebra: arrow counts,
/// Cartan matrix, `Ext²` and `Ext³` between simples, projective dimensions
/// of simples, and the ranks of the multiplication maps
/// `e(i)Be(k) ⊗ e(k)Be(j) → e(i)Be(j)` for distinct `i, k, j`, all taken in
/// the lexicographically least vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub arrows: Vec<Vec<usize>>,
    pub cartan: Vec<Vec<usize>>,
    pub ext2: Vec<Vec<usize>>,
    pub ext3: Vec<Vec<usize>>,
    pub pd: Vec<usize>,
    pub products: Vec<usize>,
}

struct Raw {
    arrows: Vec<Vec<usize>>,
    cartan: Vec<Vec<usize>>,
    ext2: Vec<Vec<usize>>,
    ext3: Vec<Vec<usize>>,
    pd: Vec<usize>,
    products: Vec<usize>,
}

impl Raw {
    fn permuted(&self, order: &[usize]) -> Fingerprint {
        let n = order.len();
        let mat = |m: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            order.iter().map(|&i| order.iter().map(|&j| m[i][j]).collect()).collect()
        };
        let mut products = Vec::with_capacity(n * n * n);
        for &i in order {
            for &k in order {
                for &j in order {
                    products.push(self.products[(i * n + k) * n + j]);
                }
            }
        }
        Fingerprint {
            arrows: mat(&self.arrows),
            cartan: mat(&self.cartan),
            ext2: mat(&self.ext2),
            ext3: mat(&self.ext3),
            pd: order.iter().map(|&i| self.pd[i]).collect(),
            products,
        }
    }

    /// Data attached to a single vertex that any isomorphism must preserve.
    fn signature(&self, v: usize) -> Vec<Vec<usize>> {
        let n = self.pd.len();
        let sorted = |mut x: Vec<usize>| {
            x.sort_unstable();
            x
        };
        let mut sig = vec![vec![self.pd[v]]];
        for m in [&self.arrows, &self.cartan, &self.ext2, &self.ext3] {
            sig.push(sorted(m[v].clone()));
            sig.push(sorted((0..n).map(|u| m[u][v]).collect()));
        }
        sig
    }
}

pub fn fingerprint(b: &BoundQuiverAlgebra, h: &Homology) -> Fingerprint {
    let n = b.vertex_count();
    let alg = b.algebra();
    let mut products = vec![0; n * n * n];
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                if i == k || k == j || i == j {
                    continue;
                }
                let mut span = RowEchelon::new(alg.dim(i, j));
                for x in 0..alg.dim(i, k) {
                    for y in 0..alg.dim(k, j) {
                        span.insert(alg.product(i, k, j, x, y));
                    }
                }
                products[(i * n + k) * n + j] = span.dim();
            }
        }
    }
    let raw = Raw {
        arrows: b.arrow_counts(),
        cartan: b.cartan(),
        ext2: h.ext_matrix(2),
        ext3: h.ext_matrix(3),
        pd: h.projective_dimensions(),
        products,
    };

    // Only orders that sort vertices by signature need to be tried.
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.sort_by_key(|&v| raw.signature(v));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in &vertices {
        match groups.last_mut() {
            Some(g) if raw.signature(g[0]) == raw.signature(v) => g.push(v),
            _ => groups.push(vec![v]),
        }
    }
    let mut best: Option<Fingerprint> = None;
    let mut order = Vec::with_capacity(n);
    search(&raw, &groups, 0, &mut order, &mut best);
    best.expect("at least one vertex order")
}

fn search(raw: &Raw, groups: &[Vec<usize>], g: usize, order: &mut Vec<usize>, best: &mut Option<Fingerprint>) {
    if g == groups.len() {
        let f = raw.permuted(order);
        if best.as_ref().is_none_or(|b| f < *b) {
            *best = Some(f);
        }
        return;
    }
    permute(&groups[g], &mut Vec::new(), &mut |perm| {
        let len = order.len();
        order.extend_from_slice(perm);
        search(raw, groups, g + 1, order, best);
        order.truncate(len);
    });
}

fn permute(items: &[usize], prefix: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if prefix.len() == items.len() {
        visit(prefix);
        return;
    }
    for &x in items {
        if !prefix.contains(&x) {
            prefix.push(x);
            permute(items, prefix, visit);
            prefix.pop();
        }
    }
}
