use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::linalg::{to_i64, RatMatrix};
use crate::quiver::{cartan_matrix, coxeter_matrix, dynkin_type, DimVector, Quiver};

use super::SiltingObject;

/// Dimension-vector data of the restriction `A_U = K(Q|_U)` to a vertex set
/// `U`, with all vectors kept at full length (zero outside `U`).
struct Restriction {
    vertices: Vec<usize>,
    projectives: HashMap<usize, DimVector>,
    injectives: BTreeSet<DimVector>,
    coxeter_inverse: RatMatrix,
}

impl Restriction {
    fn new(q: &Quiver, mask: u64) -> Result<Self> {
        let n = q.vertex_count();
        let keep: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        let (sub, vertices) = q.full_subquiver(&keep);
        let c = cartan_matrix(&sub);
        let embed = |vals: Vec<u32>| {
            let mut d = vec![0u32; n];
            for (k, &v) in vertices.iter().enumerate() {
                d[v] = vals[k];
            }
            DimVector(d)
        };
        let entry = |r: usize, s: usize| to_i64(c.get(r, s)).expect("integral Cartan entry") as u32;
        let m = vertices.len();
        let projectives =
            (0..m).map(|r| (vertices[r], embed((0..m).map(|s| entry(r, s)).collect()))).collect();
        let injectives = (0..m).map(|s| embed((0..m).map(|r| entry(r, s)).collect())).collect();
        let coxeter_inverse = coxeter_matrix(&sub).inverse().ok_or(Error::SingularCartan)?;
        Ok(Self { vertices, projectives, injectives, coxeter_inverse })
    }

    fn is_injective(&self, d: &DimVector) -> bool {
        self.injectives.contains(d)
    }

    /// `τ⁻¹` of a non-injective indecomposable `A_U`-module.
    fn tau_inverse(&self, d: &DimVector) -> Result<DimVector> {
        let row: Vec<i64> = self.vertices.iter().map(|&v| d[v] as i64).collect();
        let image = &RatMatrix::from_ints(1, row.len(), &row) * &self.coxeter_inverse;
        let mut out = vec![0u32; d.len()];
        for (k, &v) in self.vertices.iter().enumerate() {
            match to_i64(image.get(0, k)) {
                Some(x) if x >= 0 => out[v] = x as u32,
                _ => return Err(Error::Invariant(format!("τ⁻¹ of {d} is not a dimension vector"))),
            }
        }
        Ok(DimVector(out))
    }
}

struct Recursion<'a> {
    quiver: &'a Quiver,
    restrictions: HashMap<u64, Restriction>,
    memo: HashMap<u64, Vec<Vec<DimVector>>>,
}

impl Recursion<'_> {
    fn restriction(&mut self, mask: u64) -> Result<&Restriction> {
        if !self.restrictions.contains_key(&mask) {
            let r = Restriction::new(self.quiver, mask)?;
            self.restrictions.insert(mask, r);
        }
        Ok(&self.restrictions[&mask])
    }

    /// Tilting `A_U`-modules for `U = mask`, each a sorted list of summands.
    ///
    /// For every nonempty `I ⊆ U` and every tilting `A_{U∖I}`-module `N`
    /// without an `A_U`-injective summand, `M = P_U(I) ⊕ τ⁻¹_U N` is tilting;
    /// so is `τ⁻ᵏ M` as long as the previous translate has no injective
    /// summand.
    fn tilting(&mut self, mask: u64) -> Result<Vec<Vec<DimVector>>> {
        if let Some(v) = self.memo.get(&mask) {
            return Ok(v.clone());
        }
        if mask == 0 {
            return Ok(vec![Vec::new()]);
        }
        let n = self.quiver.vertex_count();
        let mut out = Vec::new();
        let mut sub = mask;
        while sub != 0 {
            let rest = mask & !sub;
            let smaller = self.tilting(rest)?;
            let here = self.restriction(mask)?;
            for small in &smaller {
                if small.iter().any(|d| here.is_injective(d)) {
                    continue;
                }
                let mut m: Vec<DimVector> = (0..n)
                    .filter(|v| sub >> v & 1 == 1)
                    .map(|v| here.projectives[&v].clone())
                    .collect();
                for d in small {
                    m.push(here.tau_inverse(d)?);
                }
                loop {
                    m.sort();
                    out.push(m.clone());
                    if m.iter().any(|d| here.is_injective(d)) {
                        break;
                    }
                    m = m.iter().map(|d| here.tau_inverse(d)).collect::<Result<Vec<_>>>()?;
                }
            }
            sub = (sub - 1) & mask;
        }
        out.sort();
        let before = out.len();
        out.dedup();
        if out.len() != before {
            return Err(Error::Invariant(format!("recursion produced duplicates on vertex set {mask:#b}")));
        }
        self.memo.insert(mask, out.clone());
        Ok(out)
    }
}

fn check_size(q: &Quiver) -> Result<()> {
    dynkin_type(q)?;
    if q.vertex_count() > 63 {
        return Err(Error::Invariant("too many vertices".into()));
    }
    Ok(())
}

/// Tilting modules of the restriction of `KQ` to the vertices in `mask`
/// (bit `v` set for vertex index `v`).
pub fn tilting_modules_on(q: &Quiver, mask: u64) -> Result<Vec<Vec<DimVector>>> {
    check_size(q)?;
    let mut rec = Recursion { quiver: q, restrictions: HashMap::new(), memo: HashMap::new() };
    rec.tilting(mask)
}

/// All basic tilting `KQ`-modules, sorted.
pub fn enumerate_tilting(q: &Quiver) -> Result<Vec<SiltingObject>> {
    let full = (1u64 << q.vertex_count()) - 1;
    let mut out: Vec<SiltingObject> =
        tilting_modules_on(q, full)?.into_iter().map(|m| SiltingObject::new(m, Vec::new())).collect();
    out.sort();
    Ok(out)
}

/// All basic 2-term silting complexes `M ⊕ P(I)[1]`, where `M` runs over the
/// tilting modules of the restriction to `Q₀ ∖ I`; sorted.
pub fn enumerate_silting(q: &Quiver) -> Result<Vec<SiltingObject>> {
    check_size(q)?;
    let n = q.vertex_count();
    let full = (1u64 << n) - 1;
    let mut rec = Recursion { quiver: q, restrictions: HashMap::new(), memo: HashMap::new() };
    let mut out = Vec::new();
    for shifted_mask in 0..=full {
        let shifted: Vec<usize> = (0..n).filter(|v| shifted_mask >> v & 1 == 1).collect();
        for m in rec.tilting(full & !shifted_mask)? {
            out.push(SiltingObject::new(m, shifted.clone()));
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::parse_quiver;

    #[test]
    fn a2_counts() {
        let q = parse_quiver("vertices 1 2; arrows a:1->2").unwrap();
        let t = enumerate_tilting(&q).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].modules, vec![DimVector(vec![0, 1]), DimVector(vec![1, 1])]);
        assert_eq!(enumerate_silting(&q).unwrap().len(), 5);
    }

    #[test]
    fn a1_and_disconnected() {
        let q = parse_quiver("vertices 1").unwrap();
        assert_eq!(enumerate_silting(&q).unwrap().len(), 2);
        let q = parse_quiver("vertices 1 2").unwrap();
        assert_eq!(enumerate_tilting(&q).unwrap().len(), 1);
        assert_eq!(enumerate_silting(&q).unwrap().len(), 4);
    }
}
