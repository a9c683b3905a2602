//! Homological invariants of silted algebras and their classification.
//!
//! Every connected silted algebra is tilted or strictly shod; tilted
//! algebras have global dimension at most 2 and strictly shod ones exactly 3.
//! The verdict for each block is therefore read off the global dimension,
//! and the Dynkin type of a tilted block is recovered from its Coxeter
//! polynomial, a derived invariant.

mod fingerprint;
mod resolution;

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::complex::TwoTermCategory;
use crate::endo::{endomorphism_algebra, BoundQuiverAlgebra};
use crate::error::{Error, Result};
use crate::quiver::{cartan_matrix, coxeter_polynomial, DynkinType, Family, Quiver};
use crate::silting::SiltingObject;

pub use fingerprint::{fingerprint, Fingerprint};
pub use resolution::{Homology, RESOLUTION_CAP};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Tilted(DynkinType),
    StrictlyShod,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Tilted(t) => write!(f, "tilted {t}"),
            Verdict::StrictlyShod => f.write_str("strictly shod"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BlockRecord {
    /// Vertices of the Gabriel quiver in this block (0-based summand positions).
    pub vertices: Vec<usize>,
    pub global_dimension: usize,
    pub coxeter_polynomial: Vec<i64>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug)]
pub struct ClassificationRecord {
    pub object: SiltingObject,
    pub algebra: BoundQuiverAlgebra,
    pub homology: Homology,
    pub blocks: Vec<BlockRecord>,
    pub fingerprint: Fingerprint,
}

impl ClassificationRecord {
    pub fn global_dimension(&self) -> usize {
        self.homology.global_dimension()
    }

    pub fn is_strictly_shod(&self) -> bool {
        self.blocks.iter().any(|b| b.verdict == Verdict::StrictlyShod)
    }

    /// Disjoint union of the block types when every block is tilted.
    pub fn tilted_type(&self) -> Option<DynkinType> {
        self.blocks.iter().try_fold(DynkinType::new(Vec::new()), |acc, b| match &b.verdict {
            Verdict::Tilted(t) => Some(acc.union(t)),
            Verdict::StrictlyShod => None,
        })
    }

    /// `A3⊔A1`-style type, or `strictly shod`.
    pub fn label(&self) -> String {
        self.tilted_type().map_or_else(|| "strictly shod".to_string(), |t| t.to_string())
    }
}

/// Standard quivers `A_n` (linear), `D_n` and `E_n` used to generate the
/// Coxeter polynomial reference table.
fn standard_quiver(family: Family, rank: usize) -> Option<Quiver> {
    let n = rank as i64;
    let mut arrows: Vec<(String, i64, i64)> = Vec::new();
    match family {
        Family::A if rank >= 1 => (1..n).for_each(|v| arrows.push((format!("a{v}"), v, v + 1))),
        Family::D if rank >= 4 => {
            arrows.push(("a1".into(), 1, 3));
            arrows.push(("a2".into(), 2, 3));
            (3..n).for_each(|v| arrows.push((format!("a{v}"), v, v + 1)));
        }
        Family::E if (6..=8).contains(&rank) => {
            (1..n - 1).for_each(|v| arrows.push((format!("a{v}"), v, v + 1)));
            arrows.push(("b".into(), 3, n));
        }
        _ => return None,
    }
    Some(Quiver::new((1..=n).collect(), arrows).expect("standard quiver is valid"))
}

/// Dynkin types of the given rank with their Coxeter polynomials, computed
/// from the Cartan matrices of the standard hereditary algebras.
pub fn reference_table(rank: usize) -> Vec<(DynkinType, Vec<i64>)> {
    [Family::A, Family::D, Family::E]
        .into_iter()
        .filter_map(|f| standard_quiver(f, rank).map(|q| (f, q)))
        .map(|(f, q)| {
            let poly = coxeter_polynomial(&cartan_matrix(&q)).expect("hereditary Cartan matrices are invertible");
            (DynkinType::single(f, rank), poly)
        })
        .collect()
}

/// The connected Dynkin type sharing the block's Coxeter polynomial.
pub fn tilted_type(block: &BoundQuiverAlgebra) -> Result<DynkinType> {
    let poly = block.coxeter_polynomial()?;
    let matches: Vec<DynkinType> = reference_table(block.vertex_count())
        .into_iter()
        .filter(|(_, p)| *p == poly)
        .map(|(t, _)| t)
        .collect();
    match matches.as_slice() {
        [t] => Ok(t.clone()),
        _ => Err(Error::NoTiltedType(poly)),
    }
}

/// Classifies `End(T)` block by block.
pub fn classify(cat: &TwoTermCategory, t: &SiltingObject) -> Result<ClassificationRecord> {
    let algebra = endomorphism_algebra(cat, t)?;
    let homology = Homology::compute(algebra.algebra())?;
    let pd = homology.projective_dimensions();
    let mut blocks = Vec::new();
    for vertices in algebra.blocks() {
        let global_dimension = vertices.iter().map(|&v| pd[v]).max().unwrap_or(0);
        let block = algebra.block(&vertices)?;
        let coxeter_polynomial = block.coxeter_polynomial()?;
        let verdict = match global_dimension {
            0..=2 => Verdict::Tilted(tilted_type(&block)?),
            3 => Verdict::StrictlyShod,
            d => return Err(Error::GlobalDimensionOutOfRange(d)),
        };
        blocks.push(BlockRecord { vertices, global_dimension, coxeter_polynomial, verdict });
    }
    let fingerprint = fingerprint(&algebra, &homology);
    Ok(ClassificationRecord { object: t.clone(), algebra, homology, blocks, fingerprint })
}

/// [`classify`] over many objects in parallel; output order follows input.
pub fn classify_all(cat: &TwoTermCategory, objects: &[SiltingObject]) -> Result<Vec<ClassificationRecord>> {
    objects.par_iter().map(|t| classify(cat, t)).collect()
}

/// One isomorphism class of silted algebras (equal fingerprints).
#[derive(Clone, Debug)]
pub struct IsoClass {
    /// Indices into the record list; the first is the representative.
    pub members: Vec<usize>,
    pub label: String,
    pub strictly_shod: bool,
}

/// Groups records by fingerprint, classes ordered by first member.
pub fn dedupe(records: &[ClassificationRecord]) -> Vec<IsoClass> {
    let mut by_fp: BTreeMap<&Fingerprint, usize> = BTreeMap::new();
    let mut classes: Vec<IsoClass> = Vec::new();
    for (k, r) in records.iter().enumerate() {
        match by_fp.get(&r.fingerprint) {
            Some(&c) => classes[c].members.push(k),
            None => {
                by_fp.insert(&r.fingerprint, classes.len());
                classes.push(IsoClass { members: vec![k], label: r.label(), strictly_shod: r.is_strictly_shod() });
            }
        }
    }
    classes
}

/// Number of classes per label, labels in sorted order.
pub fn family_counts(classes: &[IsoClass]) -> BTreeMap<String, usize> {
    let mut out = BTreeMap::new();
    for c in classes {
        *out.entry(c.label.clone()).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_polynomials_are_distinct() {
        for rank in 1..=8 {
            let table = reference_table(rank);
            for (k, (_, p)) in table.iter().enumerate() {
                assert_eq!(p.len(), rank + 1);
                assert!(table[..k].iter().all(|(_, q)| q != p), "rank {rank}");
            }
        }
        assert_eq!(reference_table(2)[0].1, vec![1, 1, 1]);
        assert_eq!(reference_table(6).len(), 3);
    }
}
