use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

use super::Quiver;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    E,
    D,
    A,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
        })
    }
}

/// Disjoint union of simply-laced Dynkin diagrams, kept in canonical order
/// (rank descending, then E before D before A).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinType {
    components: Vec<(Family, usize)>,
}

impl DynkinType {
    pub fn new(mut components: Vec<(Family, usize)>) -> Self {
        components.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        Self { components }
    }

    pub fn single(family: Family, rank: usize) -> Self {
        Self::new(vec![(family, rank)])
    }

    pub fn components(&self) -> &[(Family, usize)] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.1).sum()
    }

    /// Multiset union.
    pub fn union(&self, other: &Self) -> Self {
        let mut c = self.components.clone();
        c.extend_from_slice(&other.components);
        Self::new(c)
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("∅");
        }
        for (k, (fam, n)) in self.components.iter().enumerate() {
            if k > 0 {
                f.write_str("⊔")?;
            }
            write!(f, "{fam}{n}")?;
        }
        Ok(())
    }
}

impl Serialize for DynkinType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    /// Accepts `A3⊔A1` or `A3+A1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::NotDynkin(format!("cannot parse type {s:?}"));
        let mut comps = Vec::new();
        for part in s.split(['⊔', '+']).map(str::trim).filter(|p| !p.is_empty()) {
            let fam = match &part[..1] {
                "A" => Family::A,
                "D" => Family::D,
                "E" => Family::E,
                _ => return Err(bad()),
            };
            let n: usize = part[1..].parse().map_err(|_| bad())?;
            let ok = match fam {
                Family::A => n >= 1,
                Family::D => n >= 4,
                Family::E => (6..=8).contains(&n),
            };
            if !ok {
                return Err(bad());
            }
            comps.push((fam, n));
        }
        Ok(Self::new(comps))
    }
}

/// Dynkin type of the underlying graph, one entry per connected component.
pub fn dynkin_type(q: &Quiver) -> Result<DynkinType> {
    let mut comps = Vec::new();
    for comp in q.components() {
        comps.push(component_type(q, &comp)?);
    }
    Ok(DynkinType::new(comps))
}

fn component_type(q: &Quiver, comp: &[usize]) -> Result<(Family, usize)> {
    let m = comp.len();
    let labels: Vec<i64> = comp.iter().map(|&v| q.label(v)).collect();
    let not = |why: &str| Error::NotDynkin(format!("component {labels:?}: {why}"));
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); q.vertex_count()];
    let mut edges = 0;
    for a in q.arrows().iter().filter(|a| comp.contains(&a.source)) {
        if adj[a.source].contains(&a.target) {
            return Err(not("multiple edges between two vertices"));
        }
        adj[a.source].push(a.target);
        adj[a.target].push(a.source);
        edges += 1;
    }
    if edges + 1 != m {
        return Err(not("underlying graph is not a tree"));
    }
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| adj[v].len() >= 3).collect();
    if comp.iter().any(|&v| adj[v].len() > 3) || branch.len() > 1 {
        return Err(not("vertex of degree > 3 or several branch points"));
    }
    let Some(&centre) = branch.first() else {
        return Ok((Family::A, m));
    };
    let mut arms: Vec<usize> = adj[centre]
        .iter()
        .map(|&start| {
            let (mut prev, mut cur, mut len) = (centre, start, 1);
            loop {
                let next = adj[cur].iter().copied().find(|&w| w != prev);
                match next {
                    Some(w) => {
                        prev = cur;
                        cur = w;
                        len += 1;
                    }
                    None => break len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => Ok((Family::D, m)),
        [1, 2, 2] => Ok((Family::E, 6)),
        [1, 2, 3] => Ok((Family::E, 7)),
        [1, 2, 4] => Ok((Family::E, 8)),
        _ => Err(not("branch arms are not of type D or E")),
    }
}
